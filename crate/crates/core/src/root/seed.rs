//! Exchange matrices: the matrix attached to a Coxeter element, matrix
//! mutation and the Cartan counterpart.

use num_integer::Integer;
use num_rational::Ratio;

use super::cartan::all_principal_minors_positive;
use crate::error::{Error, Result};

/// `b_ij = -a_ij` if `s_i` comes before `s_j` in `order`, `a_ij` if after.
pub fn build_bc(cartan: &[Vec<i64>], order: &[usize]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut position = vec![0; n];
    for (p, &i) in order.iter().enumerate() {
        position[i] = p;
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match position[i].cmp(&position[j]) {
                    std::cmp::Ordering::Less => -cartan[i][j],
                    std::cmp::Ordering::Greater => cartan[i][j],
                    std::cmp::Ordering::Equal => 0,
                })
                .collect()
        })
        .collect()
}

/// Mutation in direction `k` of an extended exchange matrix with `m >= n`
/// rows and `n` columns.
pub fn matrix_mutation(b: &[Vec<i64>], k: usize) -> Result<Vec<Vec<i64>>> {
    let cols = b.first().map_or(0, Vec::len);
    if k >= cols {
        return Err(Error::IndexOutOfRange { index: k, len: cols });
    }
    Ok(b.iter()
        .enumerate()
        .map(|(i, row)| {
            (0..cols)
                .map(|j| {
                    if i == k || j == k {
                        -row[j]
                    } else {
                        let bik = row[k];
                        let bkj = b[k][j];
                        row[j] + bik.signum() * (bik * bkj).max(0)
                    }
                })
                .collect()
        })
        .collect())
}

/// Positive diagonal `d` with `d_i b_ij = -d_j b_ji`, normalized to coprime
/// integers on each connected component.
pub fn symmetrizer(b: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = b.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        let mut stack = vec![start];
        let mut component = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let (bij, bji) = (b[i][j], b[j][i]);
                if i == j {
                    if bij != 0 {
                        return Err(Error::NotSkewSymmetrizable);
                    }
                    continue;
                }
                if (bij == 0) != (bji == 0) || (bij != 0 && bij.signum() == bji.signum()) {
                    return Err(Error::NotSkewSymmetrizable);
                }
                if bij == 0 {
                    continue;
                }
                let want = d[i].unwrap() * Ratio::new(bij, -bji);
                match d[j] {
                    Some(dj) if dj != want => return Err(Error::NotSkewSymmetrizable),
                    Some(_) => {}
                    None => {
                        d[j] = Some(want);
                        stack.push(j);
                        component.push(j);
                    }
                }
            }
        }
        let lcm = component
            .iter()
            .fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        for &i in &component {
            d[i] = Some(d[i].unwrap() * lcm);
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

/// `2` on the diagonal and `-|b_ij|` elsewhere.
pub fn cartan_counterpart(b: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    symmetrizer(b)?;
    Ok(b.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| if i == j { 2 } else { -x.abs() })
                .collect()
        })
        .collect())
}

/// Whether the Cartan counterpart of `b` is of finite type.
pub fn is_finite_type(b: &[Vec<i64>]) -> Result<bool> {
    Ok(all_principal_minors_positive(&cartan_counterpart(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::{cartan_matrix, CartanFamily, CartanType};

    #[test]
    fn bc_for_rank_two() {
        let a2 = cartan_matrix(CartanType::new(CartanFamily::A, 2).unwrap());
        assert_eq!(build_bc(&a2, &[0, 1]), vec![vec![0, 1], vec![-1, 0]]);
        let b2 = cartan_matrix(CartanType::new(CartanFamily::B, 2).unwrap());
        assert_eq!(build_bc(&b2, &[0, 1]), vec![vec![0, 1], vec![-2, 0]]);
    }

    #[test]
    fn mutation_flips_signs() {
        let b = vec![vec![0, 1], vec![-1, 0]];
        assert_eq!(matrix_mutation(&b, 0).unwrap(), vec![vec![0, -1], vec![1, 0]]);
        assert!(matrix_mutation(&b, 2).is_err());
    }

    #[test]
    fn counterparts() {
        let b = vec![vec![0, 1], vec![-1, 0]];
        assert_eq!(cartan_counterpart(&b).unwrap(), vec![vec![2, -1], vec![-1, 2]]);
        assert!(is_finite_type(&b).unwrap());
        let affine = vec![vec![0, 2], vec![-2, 0]];
        assert_eq!(
            cartan_counterpart(&affine).unwrap(),
            vec![vec![2, -2], vec![-2, 2]]
        );
        assert!(!is_finite_type(&affine).unwrap());
        assert_eq!(
            cartan_counterpart(&[vec![0, 1], vec![1, 0]]),
            Err(Error::NotSkewSymmetrizable)
        );
    }

    #[test]
    fn bc_is_finite_type_for_every_family() {
        for (f, n) in [
            (CartanFamily::A, 4),
            (CartanFamily::B, 3),
            (CartanFamily::C, 4),
            (CartanFamily::D, 5),
            (CartanFamily::E, 7),
            (CartanFamily::F, 4),
            (CartanFamily::G, 2),
        ] {
            let a = cartan_matrix(CartanType::new(f, n).unwrap());
            let order: Vec<usize> = (0..n).rev().collect();
            let b = build_bc(&a, &order);
            assert!(is_finite_type(&b).unwrap());
            assert!((0..n).all(|i| b[i][i] == 0));
        }
    }
}
