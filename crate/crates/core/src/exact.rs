//! Exact rational linear algebra.
//!
//! Everything downstream works over `BigRational` / `BigInt`; there is no
//! floating point anywhere in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IntVec = Vec<BigInt>;
pub type RatVec = Vec<BigRational>;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn to_rat_vec(v: &[BigInt]) -> RatVec {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Converts to `i64`, panicking on overflow. Only used for display and for
/// small combinatorial quantities.
pub fn to_i64_vec(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_i64().expect("entry does not fit in i64"))
        .collect()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divides an integer vector by the gcd of its entries. The zero vector is
/// returned unchanged.
pub fn primitive_int(v: &[BigInt]) -> IntVec {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Scales a rational vector by a positive factor to a primitive integer
/// vector (gcd 1). Direction is preserved.
pub fn primitive_rat(v: &[Rat]) -> IntVec {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: IntVec = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    primitive_int(&scaled)
}

/// Primitive integer vector with the first nonzero entry positive. Used for
/// objects defined up to sign (lineality vectors, equations).
pub fn sign_normalized(v: &[BigInt]) -> IntVec {
    let p = primitive_int(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => p.iter().map(|x| -x).collect(),
        _ => p,
    }
}

/// Dense rational matrix in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from rows. An empty row list yields a `0 x cols`
    /// matrix, so the column count has to be given explicitly.
    pub fn from_rows(cols: usize, rows: &[RatVec]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_int_rows(cols: usize, rows: &[IntVec]) -> Result<Self> {
        let rows: Vec<RatVec> = rows.iter().map(|r| to_rat_vec(r)).collect();
        Matrix::from_rows(cols, &rows)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<RatVec> = rows.iter().map(|r| rat_vec(r)).collect();
        Matrix::from_rows(cols, &rows).expect("ragged matrix literal")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[RatVec]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<RatVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Result<RatVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot_rat(self.row(i), x)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and the pivot columns. Pivots are chosen as
    /// the first nonzero entry scanning columns left to right, so the result
    /// is deterministic.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a[(r, c)].recip();
            for j in c..a.cols {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    let v = &f * &a[(r, j)];
                    a[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<IntVec> = self.row_vecs().iter().map(|r| primitive_rat(r)).collect();
        int_rank(&rows)
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rat::one();
        }
        let (red, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Option<Rat> {
        if self.rows != self.cols {
            return None;
        }
        let mut a = self.clone();
        let n = self.rows;
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
                return Some(Rat::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let f = &a[(i, c)] / &piv;
                for j in c..n {
                    let v = &f * &a[(c, j)];
                    a[(i, j)] -= v;
                }
            }
        }
        Some(det)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of an integer row set by fraction-free elimination. Each updated row
/// is divided by the gcd of its entries, which keeps coefficients small.
pub fn int_rank(rows: &[IntVec]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut a: Vec<IntVec> = rows.iter().filter(|r| !is_zero_vec(r)).cloned().collect();
    let mut rank = 0;
    for c in 0..cols {
        if rank == a.len() {
            break;
        }
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pv = &pivot_row[c];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                row[j] = pv * &row[j] - &f * &pivot_row[j];
            }
            *row = primitive_int(row);
        }
        rank += 1;
    }
    rank
}

/// Basis of the right kernel `{x : Mx = 0}`. One vector per non-pivot column
/// of the RREF, each scaled to a primitive integer vector.
pub fn kernel_basis(m: &Matrix) -> Vec<IntVec> {
    let (red, pivots) = m.rref();
    let n = m.cols();
    let mut is_pivot = vec![None; n];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..n)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -red[(r, free)].clone();
            }
            primitive_rat(&v)
        })
        .collect()
}

/// Kernel of the matrix whose rows are the given integer vectors.
pub fn int_kernel_basis(cols: usize, rows: &[IntVec]) -> Vec<IntVec> {
    let m = Matrix::from_int_rows(cols, rows).expect("row length mismatch");
    kernel_basis(&m)
}

/// Finds `x >= 0` integral with `Ax = b`.
///
/// With full column rank the system is solved exactly and the unique
/// solution checked for integrality and sign. Otherwise the free variables
/// are enumerated in a bounded box and more than one hit is reported as
/// [`Error::AmbiguousSolution`].
pub fn solve_nonneg_int(a: &Matrix, b: &[Rat]) -> Result<IntVec> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let k = a.cols();
    let mut aug = Matrix::zeros(a.rows(), k + 1);
    for i in 0..a.rows() {
        for j in 0..k {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, k)] = b[i].clone();
    }
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&k) {
        return Err(Error::NoSolution);
    }
    let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();

    let candidate = |free_vals: &[BigInt]| -> Option<IntVec> {
        let mut x = vec![BigInt::zero(); k];
        for (f, v) in free.iter().zip(free_vals) {
            x[*f] = v.clone();
        }
        for (r, &pc) in pivots.iter().enumerate() {
            let mut val = red[(r, k)].clone();
            for (f, v) in free.iter().zip(free_vals) {
                val -= &red[(r, *f)] * BigRational::from_integer(v.clone());
            }
            if !val.is_integer() || val.is_negative() {
                return None;
            }
            x[pc] = val.to_integer();
        }
        Some(x)
    };

    if free.is_empty() {
        return candidate(&[]).ok_or(Error::NoSolution);
    }

    let bound = b
        .iter()
        .map(|x| x.abs().ceil().to_integer())
        .fold(BigInt::zero(), |acc, x| acc + x)
        .to_u32()
        .unwrap_or(u32::MAX)
        .saturating_mul(2)
        .saturating_add(2)
        .min(64);
    let mut found: Option<IntVec> = None;
    let mut vals = vec![BigInt::zero(); free.len()];
    loop {
        if let Some(x) = candidate(&vals) {
            if found.is_some() {
                return Err(Error::AmbiguousSolution);
            }
            found = Some(x);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == vals.len() {
                return found.ok_or(Error::NoSolution);
            }
            vals[i] += 1;
            if vals[i] > BigInt::from(bound) {
                vals[i] = BigInt::zero();
                i += 1;
            } else {
                break;
            }
        }
    }
}
