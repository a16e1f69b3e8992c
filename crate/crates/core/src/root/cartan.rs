//! Cartan data of the finite root systems in Bourbaki numbering.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{rat, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanFamily {
    pub fn letter(self) -> char {
        match self {
            CartanFamily::A => 'A',
            CartanFamily::B => 'B',
            CartanFamily::C => 'C',
            CartanFamily::D => 'D',
            CartanFamily::E => 'E',
            CartanFamily::F => 'F',
            CartanFamily::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            CartanFamily::A | CartanFamily::B | CartanFamily::C | CartanFamily::D
        )
    }
}

impl FromStr for CartanFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(CartanFamily::A),
            "B" => Ok(CartanFamily::B),
            "C" => Ok(CartanFamily::C),
            "D" => Ok(CartanFamily::D),
            "E" => Ok(CartanFamily::E),
            "F" => Ok(CartanFamily::F),
            "G" => Ok(CartanFamily::G),
            other => Err(Error::InvalidType(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    family: CartanFamily,
    rank: usize,
}

impl CartanType {
    pub fn new(family: CartanFamily, rank: usize) -> Result<Self> {
        let ok = match family {
            CartanFamily::A => rank >= 1,
            CartanFamily::B | CartanFamily::C => rank >= 2,
            CartanFamily::D => rank >= 4,
            CartanFamily::E => (6..=8).contains(&rank),
            CartanFamily::F => rank == 4,
            CartanFamily::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn family(&self) -> CartanFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            CartanFamily::A => n * (n + 1) / 2,
            CartanFamily::B | CartanFamily::C => n * n,
            CartanFamily::D => n * (n - 1),
            CartanFamily::E => [36, 63, 120][n - 6],
            CartanFamily::F => 24,
            CartanFamily::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Cartan matrix with `a_ij = 2 <a_i, a_j> / <a_i, a_i>`.
///
/// Column `j` holds the simple root `a_j` in fundamental-weight coordinates.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family() {
        CartanFamily::A | CartanFamily::B | CartanFamily::C | CartanFamily::F | CartanFamily::G => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        CartanFamily::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        CartanFamily::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match t.family() {
        // short root last
        CartanFamily::B => a[n - 1][n - 2] = -2,
        // long root last
        CartanFamily::C => a[n - 2][n - 1] = -2,
        // long roots 1, 2; short roots 3, 4
        CartanFamily::F => a[2][1] = -2,
        // short root 1, long root 2
        CartanFamily::G => a[0][1] = -3,
        _ => {}
    }
    a
}

pub fn to_matrix(a: &[Vec<i64>]) -> Matrix {
    let n = a.len();
    let mut m = Matrix::zeros(n, a.first().map_or(0, Vec::len));
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            m[(i, j)] = rat(x);
        }
    }
    m
}

/// Whether every principal minor is positive. Enumerates all subsets, which
/// is fine for the ranks that occur here.
pub fn all_principal_minors_positive(a: &[Vec<i64>]) -> bool {
    let n = a.len();
    (1u32..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| a[i][j]).collect())
            .collect();
        determinant(&sub) > rat(0)
    })
}

fn determinant(a: &[Vec<i64>]) -> crate::exact::Rat {
    to_matrix(a).determinant().expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: CartanFamily, n: usize) -> CartanType {
        CartanType::new(f, n).unwrap()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(cartan_matrix(ty(CartanFamily::A, 2)), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix(ty(CartanFamily::G, 2)), vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(cartan_matrix(ty(CartanFamily::B, 2)), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(cartan_matrix(ty(CartanFamily::C, 2)), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn admissible_ranks() {
        assert!(CartanType::new(CartanFamily::E, 5).is_err());
        assert!(CartanType::new(CartanFamily::F, 3).is_err());
        assert!(CartanType::new(CartanFamily::D, 3).is_err());
        assert!("X".parse::<CartanFamily>().is_err());
    }

    #[test]
    fn determinants_match_connection_index() {
        // |det| equals the index of the root lattice in the weight lattice.
        let cases = [
            (CartanFamily::A, 4, 5),
            (CartanFamily::B, 3, 2),
            (CartanFamily::C, 3, 2),
            (CartanFamily::D, 5, 4),
            (CartanFamily::E, 6, 3),
            (CartanFamily::E, 7, 2),
            (CartanFamily::E, 8, 1),
            (CartanFamily::F, 4, 1),
            (CartanFamily::G, 2, 1),
        ];
        for (f, n, det) in cases {
            assert_eq!(determinant(&cartan_matrix(ty(f, n))), rat(det), "{f:?}{n}");
        }
    }

    #[test]
    fn finite_types_have_positive_minors() {
        for (f, n) in [
            (CartanFamily::A, 5),
            (CartanFamily::B, 4),
            (CartanFamily::C, 4),
            (CartanFamily::D, 6),
            (CartanFamily::E, 8),
            (CartanFamily::F, 4),
            (CartanFamily::G, 2),
        ] {
            let a = cartan_matrix(ty(f, n));
            assert!(all_principal_minors_positive(&a));
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(a[i][j] == 0, a[j][i] == 0);
                }
            }
        }
    }
}
