//! Dense matrices over the Gaussian rationals.
//!
//! Everything here is exact: arithmetic never leaves the field, row
//! reduction uses the first nonzero pivot in column order so results are
//! bit-reproducible, and kernel bases come out in the standard
//! free-variable unit pattern.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;

use crate::error::LinAlgError;
use crate::gaussian::{GaussianRational, Rational};

/// Row-major dense matrix of [`GaussianRational`] entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for k in 0..n {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GaussianRational,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from string entries ("0", "i", "-1/2+3i", ...).
    /// Test and builder convenience.
    pub fn parse(rows: &[&[&str]]) -> Result<Self, LinAlgError> {
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let mut r = Vec::with_capacity(row.len());
            for s in *row {
                r.push(GaussianRational::from_str(s)?);
            }
            out.push(r);
        }
        Ok(Self::from_rows(out))
    }

    /// Column vector from entries.
    pub fn column(entries: Vec<GaussianRational>) -> Self {
        let rows = entries.len();
        Self {
            rows,
            cols: 1,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    fn same_shape(&self, rhs: &Self, op: &'static str) -> Result<(), LinAlgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinAlgError::ShapeMismatch {
                op,
                lrows: self.rows,
                lcols: self.cols,
                rrows: rhs.rows,
                rcols: rhs.cols,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        self.same_shape(rhs, "add")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        self.same_shape(rhs, "sub")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::ShapeMismatch {
                op: "mul",
                lrows: self.rows,
                lcols: self.cols,
                rrows: rhs.rows,
                rcols: rhs.cols,
            });
        }
        let mut out = Self::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c) + &(a * b);
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scalar_mul(&GaussianRational::from_int(n))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Conjugate transpose: (a†)_{ij} = conj(a_{ji}).
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    /// Kronecker product, shape (a.rows*b.rows, a.cols*b.cols).
    pub fn kron(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self.at(r / rhs.rows, c / rhs.cols) * rhs.at(r % rhs.rows, c % rhs.cols)
        })
    }

    /// ab - ba. Both operands must be square of equal dimension.
    pub fn commutator(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if !self.is_square() || !rhs.is_square() || self.rows != rhs.rows {
            return Err(LinAlgError::ShapeMismatch {
                op: "commutator",
                lrows: self.rows,
                lcols: self.cols,
                rrows: rhs.rows,
                rcols: rhs.cols,
            });
        }
        self.checked_mul(rhs)?.checked_sub(&rhs.checked_mul(self)?)
    }

    /// ab + ba.
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if !self.is_square() || !rhs.is_square() || self.rows != rhs.rows {
            return Err(LinAlgError::ShapeMismatch {
                op: "anticommutator",
                lrows: self.rows,
                lcols: self.cols,
                rrows: rhs.rows,
                rcols: rhs.cols,
            });
        }
        self.checked_mul(rhs)?.checked_add(&rhs.checked_mul(self)?)
    }

    /// Stacks `self` on top of `other` (equal column counts).
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Concatenates columns (equal row counts).
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    /// Concatenates a list of column vectors into one matrix.
    pub fn from_columns(cols: &[Matrix]) -> Self {
        assert!(!cols.is_empty(), "from_columns needs at least one column");
        let rows = cols[0].rows;
        assert!(cols.iter().all(|c| c.rows == rows && c.cols == 1));
        Self::from_fn(rows, cols.len(), |r, c| cols[c].at(r, 0).clone())
    }

    pub fn column_at(&self, c: usize) -> Matrix {
        Matrix::from_fn(self.rows, 1, |r, _| self.at(r, c).clone())
    }

    /// Reduced row-echelon form. Returns (rref, pivot columns, rank).
    /// Pivot selection is the first nonzero entry in column order, so the
    /// output is deterministic.
    pub fn rref(&self) -> (Self, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let tmp = m.at(row, c).clone();
                    m.set(row, c, m.at(pr, c).clone());
                    m.set(pr, c, tmp);
                }
            }
            let inv = m.at(row, col).inv();
            for c in col..m.cols {
                let v = m.at(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c) - &(&factor * m.at(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, row)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the exact right kernel, one column vector per free
    /// variable, in the RREF-standard unit pattern.
    pub fn null_space(&self) -> Vec<Matrix> {
        let (r, pivots, rank) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(self.cols - rank);
        for &f in &free {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[f] = GaussianRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.at(row, f);
            }
            basis.push(Matrix::column(v));
        }
        basis
    }

    /// Solves `self * X = rhs` exactly. Returns `None` when inconsistent.
    /// Free variables are set to zero, so the solution is deterministic.
    pub fn solve(&self, rhs: &Self) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve row mismatch");
        let aug = self.hstack(rhs);
        let (r, pivots, _) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, r.at(row, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// Exact inverse, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.rows))?;
        // solve() with full rank gives the true inverse; rank deficit
        // would have produced an inconsistency or a non-inverse.
        if self.checked_mul(&x).ok()? == Matrix::identity(self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn trace(&self) -> GaussianRational {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = GaussianRational::zero();
        for k in 0..self.rows {
            t = &t + self.at(k, k);
        }
        t
    }

    /// True when the matrix equals `c·I` for some scalar `c`.
    pub fn scalar_part(&self) -> Option<GaussianRational> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self.at(0, 0).clone();
        for r in 0..self.rows {
            for k in 0..self.cols {
                let ok = if r == k {
                    self.at(r, k) == &c
                } else {
                    self.at(r, k).is_zero()
                };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Standard Hermitian inner product of two column vectors: u†v.
    pub fn inner(&self, rhs: &Self) -> GaussianRational {
        assert!(self.cols == 1 && rhs.cols == 1 && self.rows == rhs.rows);
        let mut acc = GaussianRational::zero();
        for r in 0..self.rows {
            acc = &acc + &(&self.at(r, 0).conj() * rhs.at(r, 0));
        }
        acc
    }

    /// Flattens row-major into a column vector of length rows*cols.
    pub fn vec_rows(&self) -> Matrix {
        Matrix::column(self.entries.clone())
    }

    /// Inverse of [`Matrix::vec_rows`].
    pub fn unvec_rows(v: &Matrix, rows: usize, cols: usize) -> Matrix {
        assert_eq!(v.cols, 1);
        assert_eq!(v.rows, rows * cols);
        Matrix::from_fn(rows, cols, |r, c| v.at(r * cols + c, 0).clone())
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix add shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.checked_sub(rhs).expect("matrix sub shape mismatch")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix mul shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale_int(-1)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Basis of the space of m x n matrices X with X·A_i = B_i·X for every
/// pair, found by vectorizing all constraints into one kernel problem.
/// A_i must be n x n and B_i must be m x m, consistently across pairs.
pub fn solve_sylvester_family(pairs: &[(Matrix, Matrix)]) -> Result<Vec<Matrix>, LinAlgError> {
    assert!(!pairs.is_empty(), "empty sylvester family");
    let n = pairs[0].0.rows();
    let m = pairs[0].1.rows();
    for (idx, (a, b)) in pairs.iter().enumerate() {
        if !a.is_square() || !b.is_square() || a.rows() != n || b.rows() != m {
            return Err(LinAlgError::InconsistentPairs {
                index: idx,
                arows: a.rows(),
                acols: a.cols(),
                brows: b.rows(),
                bcols: b.cols(),
            });
        }
    }
    // Unknown X[r,c] sits at index r*n + c. Row (p,i,j) encodes the
    // (i,j) entry of X·A_p - B_p·X.
    let mut sys = Matrix::zero(pairs.len() * m * n, m * n);
    for (p, (a, b)) in pairs.iter().enumerate() {
        for i in 0..m {
            for j in 0..n {
                let row = p * m * n + i * n + j;
                for k in 0..n {
                    let cur = sys.at(row, i * n + k) + a.at(k, j);
                    sys.set(row, i * n + k, cur);
                }
                for k in 0..m {
                    let cur = sys.at(row, k * n + j) - b.at(i, k);
                    sys.set(row, k * n + j, cur);
                }
            }
        }
    }
    Ok(sys
        .null_space()
        .into_iter()
        .map(|v| Matrix::unvec_rows(&v, m, n))
        .collect())
}

/// Re-reduces every entry and checks it equals the stored value; the
/// canonical-form invariant used by property tests.
pub fn is_canonical(m: &Matrix) -> bool {
    m.entries().iter().all(|z| {
        let re = Rational::new(z.re.numer().clone(), z.re.denom().clone());
        let im = Rational::new(z.im.numer().clone(), z.im.denom().clone());
        re == z.re && im == z.im && !z.re.denom().is_zero() && !z.im.denom().is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::rat;

    fn pauli_x() -> Matrix {
        Matrix::parse(&[&["0", "1"], &["1", "0"]]).unwrap()
    }

    fn pauli_y() -> Matrix {
        Matrix::parse(&[&["0", "-i"], &["i", "0"]]).unwrap()
    }

    fn pauli_z() -> Matrix {
        Matrix::parse(&[&["1", "0"], &["0", "-1"]]).unwrap()
    }

    #[test]
    fn identity_times_identity() {
        let i2 = Matrix::identity(2);
        assert_eq!(&i2 * &i2, i2);
    }

    #[test]
    fn scalar_zero_annihilates() {
        let a = Matrix::parse(&[&["1", "i"], &["-1/2", "3"]]).unwrap();
        assert!(a.scale_int(0).is_zero());
    }

    #[test]
    fn add_shape_mismatch_names_both_shapes() {
        let a = Matrix::zero(2, 3);
        let b = Matrix::zero(3, 2);
        let err = a.checked_add(&b).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3") && msg.contains("3x2"), "{msg}");
    }

    #[test]
    fn conj_transpose_of_real_diagonal_is_identity_map() {
        let d = Matrix::parse(&[&["2", "0"], &["0", "-1/3"]]).unwrap();
        assert_eq!(d.conj_transpose(), d);
    }

    #[test]
    fn conj_transpose_is_involution() {
        let a = Matrix::parse(&[&["1+i", "2"], &["-i", "1/2-3i"]]).unwrap();
        assert_eq!(a.conj_transpose().conj_transpose(), a);
    }

    #[test]
    fn kron_identities() {
        let i2 = Matrix::identity(2);
        assert_eq!(i2.kron(&i2), Matrix::identity(4));
        let z = Matrix::zero(2, 2);
        assert!(pauli_x().kron(&z).is_zero());
    }

    #[test]
    fn kron_sigma_x_identity_positions() {
        let k = pauli_x().kron(&Matrix::identity(2));
        let one = GaussianRational::one();
        for (r, c) in [(0, 2), (1, 3), (2, 0), (3, 1)] {
            assert_eq!(k.at(r, c), &one);
        }
        let nonzero = k.entries().iter().filter(|e| !e.is_zero()).count();
        assert_eq!(nonzero, 4);
    }

    #[test]
    fn commutator_basics() {
        let a = Matrix::parse(&[&["1", "2i"], &["0", "-1"]]).unwrap();
        assert!(a.commutator(&a).unwrap().is_zero());
        assert!(Matrix::identity(2).commutator(&a).unwrap().is_zero());
        // [sigma_x, sigma_y] = 2i sigma_z
        let lhs = pauli_x().commutator(&pauli_y()).unwrap();
        assert_eq!(
            lhs,
            pauli_z().scalar_mul(&GaussianRational::from_parts(0, 2))
        );
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, p, rank) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        assert_eq!(rank, 3);
        assert_eq!(Matrix::zero(2, 2).rank(), 0);
    }

    #[test]
    fn null_space_shapes() {
        assert!(Matrix::identity(4).null_space().is_empty());
        assert_eq!(Matrix::zero(3, 5).null_space().len(), 5);
    }

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::parse(&[&["1", "1"], &["0", "i"]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        let singular = Matrix::parse(&[&["1", "1"], &["1", "1"]]).unwrap();
        assert!(singular.inverse().is_none());
        let rhs = Matrix::parse(&[&["2"], &["2"]]).unwrap();
        let x = singular.solve(&rhs).unwrap();
        assert_eq!(&singular * &x, rhs);
        let bad = Matrix::parse(&[&["2"], &["3"]]).unwrap();
        assert!(singular.solve(&bad).is_none());
    }

    #[test]
    fn sylvester_family_identity_pair() {
        let i2 = Matrix::identity(2);
        let basis = solve_sylvester_family(&[(i2.clone(), i2)]).unwrap();
        assert_eq!(basis.len(), 4);
    }

    #[test]
    fn sylvester_zero_vs_identity_forces_zero() {
        let basis = solve_sylvester_family(&[(Matrix::zero(2, 2), Matrix::identity(2))]).unwrap();
        assert!(basis.is_empty());
    }

    #[test]
    fn sylvester_rejects_inconsistent_dims() {
        let err = solve_sylvester_family(&[
            (Matrix::identity(2), Matrix::identity(2)),
            (Matrix::identity(3), Matrix::identity(2)),
        ])
        .unwrap_err();
        assert!(matches!(
            err,
            LinAlgError::InconsistentPairs { index: 1, .. }
        ));
    }

    #[test]
    fn scalar_part_detection() {
        let s = Matrix::identity(3).scalar_mul(&GaussianRational::from_parts(0, 2));
        assert_eq!(s.scalar_part(), Some(GaussianRational::from_parts(0, 2)));
        assert_eq!(
            Matrix::parse(&[&["1", "0"], &["0", "2"]])
                .unwrap()
                .scalar_part(),
            None
        );
    }

    #[test]
    fn inner_product_conjugates_left() {
        let u = Matrix::column(vec![GaussianRational::i()]);
        let v = Matrix::column(vec![GaussianRational::one()]);
        assert_eq!(u.inner(&v), GaussianRational::from_parts(0, -1));
        assert_eq!(u.inner(&u), GaussianRational::one());
    }

    #[test]
    fn trace_sums_diagonal() {
        let a = Matrix::parse(&[&["1", "5"], &["7", "i"]]).unwrap();
        assert_eq!(a.trace(), GaussianRational::new(rat(1), rat(1)));
    }
}
