//! Dense matrices over the integers with exact arithmetic.
//!
//! Every entry is a [`BigInt`], so nothing here can overflow. The two
//! workhorses are [`ZMatrix::det`] (cofactor expansion for small sizes,
//! fraction-free Bareiss elimination otherwise) and [`ZMatrix::snf`], which
//! returns the Smith normal form together with unimodular transforms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::json::big_to_value;

/// Sizes up to this bound use cofactor expansion in [`ZMatrix::det`].
const COFACTOR_MAX: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Operations accepted by [`matrix_algebra`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixOp {
    Add,
    Sub,
    Mul,
    Kron,
    /// Left operand must be 1×1; it scales the right operand.
    ScalarMul,
}

/// `u · m · v = d` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: ZMatrix,
    pub d: ZMatrix,
    pub v: ZMatrix,
}

impl SnfResult {
    /// The `min(rows, cols)` diagonal entries of `d`: nonnegative, each
    /// dividing the next, zeros last.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

impl ZMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix must have positive dimensions, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(ZMatrix { rows, cols, data })
    }

    /// Builds a matrix from row vectors of anything convertible to `BigInt`.
    pub fn from_rows<T, R>(rows: impl IntoIterator<Item = R>) -> Result<Self>
    where
        T: Into<BigInt>,
        R: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {i} has {} entries, expected {cols}",
                r.len()
            )));
        }
        let n = rows.len();
        ZMatrix::new(n, cols, rows.into_iter().flatten().collect())
    }

    /// Single-column matrix.
    pub fn column<T: Into<BigInt>>(entries: impl IntoIterator<Item = T>) -> Result<Self> {
        let data: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        ZMatrix::new(data.len(), 1, data)
    }

    pub fn scalar(x: impl Into<BigInt>) -> Self {
        ZMatrix {
            rows: 1,
            cols: 1,
            data: vec![x.into()],
        }
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        ZMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// # Panics
    /// If `n` is zero.
    pub fn identity(n: usize) -> Self {
        let mut m = ZMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Square diagonal matrix.
    pub fn from_diagonal<T: Into<BigInt>>(diag: impl IntoIterator<Item = T>) -> Result<Self> {
        let diag: Vec<BigInt> = diag.into_iter().map(Into::into).collect();
        let n = diag.len();
        if n == 0 {
            return Err(Error::Dimension("empty diagonal".into()));
        }
        let mut m = ZMatrix::zeros(n, n);
        for (i, x) in diag.into_iter().enumerate() {
            m.data[i * n + i] = x;
        }
        Ok(m)
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

    /// # Panics
    /// On out-of-range indices.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[i * self.cols + j]
    }

    /// # Panics
    /// On out-of-range indices.
    pub fn set(&mut self, i: usize, j: usize, x: impl Into<BigInt>) {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of range"
        );
        self.data[i * self.cols + j] = x.into();
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data
            .chunks(self.cols)
            .map(<[BigInt]>::to_vec)
            .collect()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        ZMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn sum_entries(&self) -> BigInt {
        self.data.iter().sum()
    }

    pub fn try_add(&self, other: &ZMatrix) -> Result<ZMatrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, other: &ZMatrix) -> Result<ZMatrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn try_mul(&self, other: &ZMatrix) -> Result<ZMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ZMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i][j] · other`.
    pub fn kron(&self, other: &ZMatrix) -> ZMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = ZMatrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * cols + j * other.cols + l] =
                            a * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> ZMatrix {
        ZMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> ZMatrix {
        self.scale(&-BigInt::one())
    }

    pub fn pow(&self, exp: u32) -> Result<ZMatrix> {
        self.require_square("pow")?;
        let mut acc = ZMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact determinant.
    pub fn det(&self) -> Result<BigInt> {
        self.require_square("det")?;
        if self.rows <= COFACTOR_MAX {
            let rows = self.to_rows();
            let cols: Vec<usize> = (0..self.cols).collect();
            Ok(cofactor_det(&rows, 0, &cols))
        } else {
            Ok(bareiss_det(self.to_rows()))
        }
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.snf().rank()
    }

    /// Smith normal form with transforms.
    ///
    /// Pivots on the smallest nonzero absolute value in the active block.
    /// The diagonal of `d` is nonnegative with `d_i | d_{i+1}` and zeros last.
    pub fn snf(&self) -> SnfResult {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.to_rows();
        let mut u = ZMatrix::identity(m).to_rows();
        let mut v = ZMatrix::identity(n).to_rows();

        for t in 0..m.min(n) {
            loop {
                let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                    return finish_snf(a, u, v);
                };
                if pi != t {
                    a.swap(t, pi);
                    u.swap(t, pi);
                }
                if pj != t {
                    swap_cols(&mut a, t, pj);
                    swap_cols(&mut v, t, pj);
                }

                let mut dirty = false;
                for i in t + 1..m {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = &a[i][t] / &a[t][t];
                    row_axpy(&mut a, i, t, &q);
                    row_axpy(&mut u, i, t, &q);
                    dirty |= !a[i][t].is_zero();
                }
                for j in t + 1..n {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = &a[t][j] / &a[t][t];
                    col_axpy(&mut a, j, t, &q);
                    col_axpy(&mut v, j, t, &q);
                    dirty |= !a[t][j].is_zero();
                }
                if dirty {
                    continue;
                }

                // Pivot must divide the rest of the block; fold an offending row in.
                let offender =
                    (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match offender {
                    Some(i) => {
                        row_axpy(&mut a, t, i, &-BigInt::one());
                        row_axpy(&mut u, t, i, &-BigInt::one());
                    }
                    None => break,
                }
            }
            if a[t][t].is_negative() {
                for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                    *x = -std::mem::take(x);
                }
            }
        }
        finish_snf(a, u, v)
    }

    fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "{what} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    fn zip_with(
        &self,
        other: &ZMatrix,
        what: &str,
        f: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Result<ZMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ZMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

/// Dispatches one of the elementary matrix operations.
pub fn matrix_algebra(a: &ZMatrix, b: &ZMatrix, op: MatrixOp) -> Result<ZMatrix> {
    match op {
        MatrixOp::Add => a.try_add(b),
        MatrixOp::Sub => a.try_sub(b),
        MatrixOp::Mul => a.try_mul(b),
        MatrixOp::Kron => Ok(a.kron(b)),
        MatrixOp::ScalarMul => {
            if a.rows != 1 || a.cols != 1 {
                return Err(Error::Dimension(format!(
                    "scalar_mul needs a 1x1 left operand, got {}x{}",
                    a.rows, a.cols
                )));
            }
            Ok(b.scale(&a.data[0]))
        }
    }
}

fn cofactor_det(rows: &[Vec<BigInt>], r: usize, cols: &[usize]) -> BigInt {
    match cols.len() {
        0 => BigInt::one(),
        1 => rows[r][cols[0]].clone(),
        2 => &rows[r][cols[0]] * &rows[r + 1][cols[1]] - &rows[r][cols[1]] * &rows[r + 1][cols[0]],
        _ => {
            let mut acc = BigInt::zero();
            for (k, &c) in cols.iter().enumerate() {
                let x = &rows[r][c];
                if x.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
                let minor = cofactor_det(rows, r + 1, &rest);
                if k % 2 == 0 {
                    acc += x * minor;
                } else {
                    acc -= x * minor;
                }
            }
            acc
        }
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => x.magnitude() < a[bi][bj].magnitude(),
            };
            if better {
                if x.magnitude().is_one() {
                    return Some((i, j));
                }
                best = Some((i, j));
            }
        }
    }
    best
}

/// row[dst] -= q * row[src]
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// col[dst] -= q * col[src]
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn finish_snf(a: Vec<Vec<BigInt>>, u: Vec<Vec<BigInt>>, v: Vec<Vec<BigInt>>) -> SnfResult {
    let build =
        |rows: Vec<Vec<BigInt>>| ZMatrix::from_rows(rows).expect("snf preserves dimensions");
    SnfResult {
        u: build(u),
        d: build(a),
        v: build(v),
    }
}

impl fmt::Debug for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZMatrix{}", self)
    }
}

impl fmt::Display for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.cols).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ZMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for row in self.data.chunks(self.cols) {
            let row: Vec<_> = row.iter().map(big_to_value).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
