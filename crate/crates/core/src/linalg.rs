//! Dense exact linear algebra over the rationals.
//!
//! Every scalar is a [`Rational`] (an arbitrary-precision fraction kept in
//! lowest terms), so rank, kernel and nilpotency answers are exact. Pivoting
//! takes the first nonzero entry in a column; there is no magnitude pivoting.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Rectangular matrix of rationals stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
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

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Elementary matrix with a single one at `(i, j)` (zero-based).
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m[(i, j)] = Rational::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {}",
                bad,
                rows[bad].len(),
                c
            )));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    /// Column vector from a slice.
    pub fn column_vector(v: &[Rational]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in diag.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (x, y) in self.entries.iter_mut().zip(&other.entries) {
            if !y.is_zero() {
                *x += c * y;
            }
        }
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector size mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let n = self.ensure_square()?;
        let mut result = Matrix::identity(n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_in_place(&mut rows, self.cols);
        let m = Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: rows.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        echelon_rank(&mut rows, self.cols)
    }

    /// Canonical kernel basis: one vector per free column of the RREF, with
    /// that free variable set to one and the other free variables zero.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.ensure_square()?;
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| aug[i][n + j].clone()))
    }

    /// True iff `M^n = 0` for an `n x n` matrix.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let n = self.ensure_square()?;
        if n == 0 {
            return Ok(true);
        }
        let mut power = self.clone();
        for _ in 1..n {
            if power.is_zero() {
                return Ok(true);
            }
            power = &power * self;
        }
        Ok(power.is_zero())
    }

    /// Monic generator of the annihilating ideal of `M`.
    ///
    /// Finds the first power `M^k` that is a linear combination of
    /// `I, M, ..., M^{k-1}` by incremental elimination on flattened powers.
    pub fn minimal_polynomial(&self) -> Result<Polynomial> {
        let n = self.ensure_square()?;
        // Rows are flattened powers with an identity tag appended, so the
        // dependency coefficients fall out of the reduction.
        let mut reduced: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
        let mut power = Matrix::identity(n);
        for k in 0..=n {
            let mut v = power.entries.clone();
            let mut tag = vec![Rational::zero(); n + 1];
            tag[k] = Rational::one();
            for (pivot, row, row_tag) in &reduced {
                if v[*pivot].is_zero() {
                    continue;
                }
                let c = v[*pivot].clone();
                axpy(&mut v, &-c.clone(), row);
                axpy(&mut tag, &-c, row_tag);
            }
            match v.iter().position(|x| !x.is_zero()) {
                Some(p) => {
                    let inv = v[p].recip();
                    scale_in_place(&mut v, &inv);
                    scale_in_place(&mut tag, &inv);
                    reduced.push((p, v, tag));
                }
                None => {
                    // tag now holds coefficients c with sum c_i M^i = 0, c_k = 1.
                    tag.truncate(k + 1);
                    return Ok(Polynomial::new(tag));
                }
            }
            if k < n {
                power = &power * self;
            }
        }
        unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
    }

    /// Block `(r0..r0+rows, c0..c0+cols)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs)
            .expect("matrix product dimension mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum dimension mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference dimension mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

/// Kronecker product: block `(i, j)` of the result is `a[i, j] * b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out[(i * b.rows + k, j * b.cols + l)] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Grid of optional blocks with declared row and column block sizes.
/// Absent blocks are zero.
#[derive(Debug, Clone)]
pub struct BlockLayout {
    row_sizes: Vec<usize>,
    col_sizes: Vec<usize>,
    blocks: Vec<Option<Matrix>>,
}

impl BlockLayout {
    pub fn new(row_sizes: Vec<usize>, col_sizes: Vec<usize>) -> Self {
        let n = row_sizes.len() * col_sizes.len();
        BlockLayout {
            row_sizes,
            col_sizes,
            blocks: vec![None; n],
        }
    }

    pub fn set(&mut self, row: usize, col: usize, block: Matrix) -> &mut Self {
        let idx = row * self.col_sizes.len() + col;
        self.blocks[idx] = Some(block);
        self
    }

    pub fn total_rows(&self) -> usize {
        self.row_sizes.iter().sum()
    }

    pub fn total_cols(&self) -> usize {
        self.col_sizes.iter().sum()
    }

    pub fn assemble(&self) -> Result<Matrix> {
        let mut out = Matrix::zeros(self.total_rows(), self.total_cols());
        let mut r0 = 0;
        for (bi, &h) in self.row_sizes.iter().enumerate() {
            let mut c0 = 0;
            for (bj, &w) in self.col_sizes.iter().enumerate() {
                if let Some(block) = &self.blocks[bi * self.col_sizes.len() + bj] {
                    if block.rows != h || block.cols != w {
                        return Err(Error::BlockMismatch {
                            row: bi,
                            col: bj,
                            got_rows: block.rows,
                            got_cols: block.cols,
                            want_rows: h,
                            want_cols: w,
                        });
                    }
                    out.set_block(r0, c0, block);
                }
                c0 += w;
            }
            r0 += h;
        }
        Ok(out)
    }
}

/// Rank of a list of vectors of common length.
pub fn vectors_rank(vectors: &[Vec<Rational>]) -> usize {
    let Some(len) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    echelon_rank(&mut rows, len)
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let r = vectors_rank(basis);
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    vectors_rank(&with) == r
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn axpy(y: &mut [Rational], c: &Rational, x: &[Rational]) {
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

fn scale_in_place(v: &mut [Rational], c: &Rational) {
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x *= c;
        }
    }
}

/// Forward elimination only; returns the rank.
fn echelon_rank(rows: &mut [Vec<Rational>], cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let c = -(&row[col] * &inv);
            axpy(&mut row[col..], &c, &pivot_row[col..]);
        }
        rank += 1;
    }
    rank
}

/// In-place RREF over the first `cols` columns; returns pivot columns.
fn rref_in_place(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        scale_in_place(&mut rows[rank], &inv);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let c = -row[col].clone();
            axpy(row, &c, &pivot_row);
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

/// Reduced row echelon basis of the span of `vectors` (zero rows dropped).
pub fn row_echelon_basis(vectors: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    let mut rows = vectors.to_vec();
    let pivots = rref_in_place(&mut rows, len);
    rows.truncate(pivots.len());
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_basic_matrices() {
        assert_eq!(Matrix::identity(3).rank(), 3);
        assert_eq!(Matrix::zeros(2, 2).rank(), 0);
        assert_eq!(Matrix::zeros(0, 4).rank(), 0);
        assert_eq!(Matrix::zeros(4, 0).rank(), 0);
        // rows 0, e2, e4, e6 of the 4x6 selection matrix
        let a = Matrix::from_ints(&[
            [0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 1],
        ]);
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        let k = Matrix::from_ints(&[[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
        // lower shift on k^2: columns (0,1),(0,0). Kernel spanned by e2.
        let shift = Matrix::from_ints(&[[0, 0], [1, 0]]);
        let k = shift.kernel_basis();
        assert_eq!(k, vec![vec![rat(0), rat(1)]]);
        // brute force over a small rational grid agrees
        let grid: Vec<Rational> = (-3..=3).flat_map(|n| [frac(n, 1), frac(n, 2)]).collect();
        for x in &grid {
            for y in &grid {
                let v = vec![x.clone(), y.clone()];
                let zero = shift.mul_vec(&v).iter().all(Zero::is_zero);
                assert_eq!(zero, in_span(&k, &v));
            }
        }
    }

    #[test]
    fn degenerate_kernels() {
        assert_eq!(Matrix::zeros(0, 3).kernel_basis().len(), 3);
        assert!(Matrix::zeros(3, 0).kernel_basis().is_empty());
    }

    #[test]
    fn kron_examples() {
        let b = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let k = kron(&Matrix::identity(2), &b);
        let mut expect = Matrix::zeros(4, 4);
        expect.set_block(0, 0, &b);
        expect.set_block(2, 2, &b);
        assert_eq!(k, expect);
        let a = Matrix::from_ints(&[[1, -1, 0], [2, 0, 5]]);
        assert_eq!(kron(&a, &Matrix::identity(1)), a);
    }

    #[test]
    fn block_assembly() {
        let b = Matrix::from_ints(&[[7]]);
        let mut single = BlockLayout::new(vec![1], vec![1]);
        single.set(0, 0, b.clone());
        assert_eq!(single.assemble().unwrap(), b);

        let mut upper = BlockLayout::new(vec![1, 2], vec![1, 2]);
        upper.set(0, 1, Matrix::from_ints(&[[1, 2]]));
        assert_eq!(
            upper.assemble().unwrap(),
            Matrix::from_ints(&[[0, 1, 2], [0, 0, 0], [0, 0, 0]])
        );

        let mut bad = BlockLayout::new(vec![1, 2], vec![1, 2]);
        bad.set(1, 0, Matrix::zeros(1, 1));
        assert!(matches!(
            bad.assemble(),
            Err(Error::BlockMismatch { row: 1, col: 0, .. })
        ));
    }

    #[test]
    fn nilpotency() {
        let u = Matrix::from_ints(&[[0, 1, 2], [0, 0, 3], [0, 0, 0]]);
        assert!(u.is_nilpotent().unwrap());
        assert!(!Matrix::identity(3).is_nilpotent().unwrap());
        assert!(Matrix::zeros(0, 0).is_nilpotent().unwrap());
        assert!(matches!(
            Matrix::zeros(2, 3).is_nilpotent(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn minimal_polynomials() {
        for n in 1..4 {
            assert_eq!(
                Matrix::identity(n).minimal_polynomial().unwrap(),
                Polynomial::from_ints(&[-1, 1])
            );
        }
        let d = Matrix::diagonal(&[rat(1), rat(1), rat(2)]);
        // (t-1)(t-2) = t^2 - 3t + 2
        assert_eq!(
            d.minimal_polynomial().unwrap(),
            Polynomial::from_ints(&[2, -3, 1])
        );
        assert_eq!(
            Matrix::zeros(0, 0).minimal_polynomial().unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_ints(&[[2, 1, 0], [1, 1, 0], [0, 3, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(3));
        assert_eq!(
            Matrix::from_ints(&[[1, 2], [2, 4]]).inverse(),
            Err(Error::Singular)
        );
    }
}
