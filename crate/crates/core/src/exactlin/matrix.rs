use std::fmt;

use super::field::PrimeField;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
///
/// Zero-row and zero-column matrices are legal and behave as the identity of
/// direct sums.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix[{}x{} mod {}]",
            self.rows,
            self.cols,
            self.field.p()
        )?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing modulo p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(field, rows, c, r)
    }

    /// Like [`Matrix::from_rows`] but with an explicit shape, so `0 x n` and
    /// `n x 0` matrices survive a round trip through `[[...]]` notation.
    pub fn from_rows_with_cols(
        field: PrimeField,
        rows: &[Vec<i64>],
        cols: usize,
        nrows: usize,
    ) -> Result<Self> {
        if rows.len() != nrows && !(cols == 0 && rows.is_empty()) {
            return Err(Error::DimensionMismatch(format!(
                "expected {nrows} rows, got {}",
                rows.len()
            )));
        }
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "ragged row of length {} (expected {cols})",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&x| field.elem(x)));
        }
        data.resize(nrows * cols, 0);
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.p());
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// A single column built from a vector.
    pub fn column_vector(field: PrimeField, v: &[u32]) -> Self {
        Self::from_fn(field, v.len(), 1, |r, _| v[r])
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&x| x as i64).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch(
                "matrices over different fields".into(),
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = v as u32;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "power of a non-square matrix".into(),
            ));
        }
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col));
            for c in col..m.cols {
                let v = m.get(row, c);
                m.data[row * m.cols + c] = f.mul(v, inv);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for c in col..m.cols {
                    let v = m.get(row, c);
                    if v != 0 {
                        let cur = m.get(r, c);
                        m.data[r * m.cols + c] = f.mul_add(neg, v, cur);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(r.get(pr, fc)));
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.check_field(b)?;
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} equations but right-hand side has {} rows",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b)?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (pr, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(pr, self.cols + j));
            }
        }
        Ok(Some(x))
    }

    /// Whether the column `v` lies in the column span of `self`.
    pub fn image_membership(&self, v: &[u32]) -> Result<bool> {
        let col = Matrix::column_vector(self.field, v);
        Ok(self.solve(&col)?.is_some())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let x = self.solve(&id).ok()??;
        (self.rank() == self.rows).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square()
            && self
                .pow(self.rows as u64)
                .map(|m| m.is_zero())
                .unwrap_or(false)
    }

    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        out.paste(self, 0, 0);
        out.paste(other, self.rows, self.cols);
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row mismatch".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        out.paste(self, 0, 0);
        out.paste(other, 0, self.cols);
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column mismatch".into()));
        }
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols);
        out.paste(self, 0, 0);
        out.paste(other, self.rows, 0);
        Ok(out)
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, block: &Matrix, r0: usize, c0: usize) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| {
            self.get(r, cols[c])
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| {
            self.get(rows[r], c)
        })
    }

    /// A basis of the column space, taken from the pivot columns.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Rows span the annihilator of the column space: `q * self = 0` and
    /// `q` has full row rank `rows - rank`.
    pub fn cokernel_projection(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Standard basis vectors completing the column space of `self` to the
    /// whole ambient space, returned as their indices.
    pub fn complement_indices(&self) -> Vec<usize> {
        let id = Matrix::identity(self.field, self.rows);
        let (_, pivots) = self.hstack(&id).expect("same rows").rref();
        pivots
            .into_iter()
            .filter(|&c| c >= self.cols)
            .map(|c| c - self.cols)
            .collect()
    }

    /// Monic polynomial of least degree annihilating a square matrix,
    /// as coefficients from the constant term up.
    pub fn minimal_polynomial(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "minimal polynomial of non-square matrix".into(),
            ));
        }
        let f = self.field;
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(f));
        }
        let n2 = n * n;
        let mut powers: Vec<Matrix> = vec![Matrix::identity(f, n)];
        loop {
            let k = powers.len();
            // columns: vec(I), vec(A), ..., vec(A^{k-1}), vec(A^k)
            let last = if k == 1 {
                self.clone()
            } else {
                powers[k - 1].mul(self)?
            };
            let mut sys = Matrix::zeros(f, n2, k);
            for (j, pw) in powers.iter().enumerate() {
                for (i, &v) in pw.data.iter().enumerate() {
                    sys.data[i * k + j] = v;
                }
            }
            let rhs = Matrix::from_fn(f, n2, 1, |i, _| f.neg(last.data[i]));
            if let Some(x) = sys.solve(&rhs)? {
                let mut coeffs: Vec<u32> = (0..k).map(|i| x.get(i, 0)).collect();
                coeffs.push(1);
                return Ok(Poly::new(f, coeffs));
            }
            powers.push(last);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn m(p: u64, rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(gf(p), rows).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(gf(5), 2);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn rref_of_rank_one() {
        let (r, piv) = m(5, &[vec![2, 4], vec![1, 2]]).rref();
        assert_eq!(r, m(5, &[vec![1, 2], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn rref_empty() {
        let e = Matrix::zeros(gf(5), 0, 3);
        let (r, piv) = e.rref();
        assert_eq!((r.rows(), r.cols()), (0, 3));
        assert!(piv.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::identity(gf(5), 3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 0));

        // Brute force over GF(5)^2: the nonzero solutions of x + 2y = 0.
        let a = m(5, &[vec![1, 2]]);
        let sols: Vec<(u32, u32)> = (0..5)
            .flat_map(|x| (0..5).map(move |y| (x, y)))
            .filter(|&(x, y)| (x + 2 * y) % 5 == 0 && (x, y) != (0, 0))
            .collect();
        assert_eq!(sols.len(), 4);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(sols.contains(&(k.get(0, 0), k.get(1, 0))));
        assert!(sols.contains(&(3, 1)));
        assert_eq!((k.get(0, 0), k.get(1, 0)), (3, 1));

        let z = Matrix::zeros(gf(5), 2, 2).kernel_basis();
        assert_eq!(z.rank(), 2);
    }

    #[test]
    fn solve_examples() {
        let b = m(5, &[vec![3, 1], vec![4, 0]]);
        assert_eq!(Matrix::identity(gf(5), 2).solve(&b).unwrap(), Some(b));
        let x = m(5, &[vec![1], vec![2]])
            .solve(&m(5, &[vec![1], vec![2]]))
            .unwrap();
        assert_eq!(x, Some(m(5, &[vec![1]])));
        assert_eq!(m(5, &[vec![0]]).solve(&m(5, &[vec![1]])).unwrap(), None);
        assert!(m(5, &[vec![1]]).solve(&Matrix::zeros(gf(5), 2, 1)).is_err());
    }

    #[test]
    fn minimal_polynomial_examples() {
        let f = gf(5);
        assert_eq!(
            Matrix::identity(f, 2)
                .minimal_polynomial()
                .unwrap()
                .coeffs(),
            &[4, 1]
        );
        let j = m(5, &[vec![0, 1], vec![0, 0]]);
        assert!(!j.is_zero());
        assert!(j.mul(&j).unwrap().is_zero());
        assert_eq!(j.minimal_polynomial().unwrap().coeffs(), &[0, 0, 1]);
        let empty = Matrix::zeros(f, 0, 0);
        assert_eq!(empty.minimal_polynomial().unwrap().coeffs(), &[1]);
    }

    #[test]
    fn direct_sum_and_membership() {
        let d = m(5, &[vec![2]]).direct_sum(&m(5, &[vec![3]])).unwrap();
        assert_eq!(d, m(5, &[vec![2, 0], vec![0, 3]]));
        let span = m(5, &[vec![1], vec![2]]);
        assert!(span.image_membership(&[2, 4]).unwrap());
        assert!(!span.image_membership(&[1, 1]).unwrap());
        assert_eq!(
            m(5, &[vec![1, 2], vec![3, 4]]).transpose(),
            m(5, &[vec![1, 3], vec![2, 4]])
        );
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..5, 0usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u32..5, r * c)
                .prop_map(move |data| Matrix::from_fn(gf(5), r, c, |i, j| data[i * c + j]))
        })
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated(a in arb_matrix()) {
            let k = a.kernel_basis();
            prop_assert!(a.mul(&k).unwrap().is_zero());
            prop_assert_eq!(a.rank() + k.cols(), a.cols());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn rref_idempotent(a in arb_matrix()) {
            let (r, _) = a.rref();
            prop_assert_eq!(r.rref().0, r);
        }

        #[test]
        fn solve_is_exact(a in arb_matrix(), seed in 0u32..1000) {
            let b = Matrix::from_fn(gf(5), a.rows(), 2, |i, j| (seed + 3 * i as u32 + j as u32) % 5);
            if let Some(x) = a.solve(&b).unwrap() {
                prop_assert_eq!(a.mul(&x).unwrap(), b);
            }
            let reachable = a.mul(&Matrix::from_fn(gf(5), a.cols(), 1, |i, _| (seed + i as u32) % 5)).unwrap();
            prop_assert!(a.solve(&reachable).unwrap().is_some());
        }

        #[test]
        fn minimal_polynomial_annihilates(a in arb_matrix()) {
            if a.is_square() {
                let mp = a.minimal_polynomial().unwrap();
                prop_assert!(mp.eval_matrix(&a).unwrap().is_zero());
                prop_assert_eq!(*mp.coeffs().last().unwrap(), 1);
            }
        }
    }
}
