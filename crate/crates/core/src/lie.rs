//! Finite-dimensional Lie algebras given by structure constants.
//!
//! The structure table stores, for each ordered basis pair `(i, j)`, the
//! coordinate vector of `[e_i, e_j]`. Construction checks antisymmetry and
//! (unless explicitly skipped) the Jacobi identity on every basis triple.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, row_echelon_basis, vectors_rank, Matrix, Rational};
use crate::poly::QuotientAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `structure[i * n + j]` holds the coordinates of `[e_i, e_j]`.
    structure: Vec<Vec<Rational>>,
}

impl LieAlgebra {
    /// Builds and fully verifies an algebra. `structure[i][j]` is `[e_i, e_j]`.
    pub fn new(labels: Vec<String>, structure: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        Self::with_options(labels, structure, true)
    }

    /// As [`LieAlgebra::new`]; `verify_jacobi = false` skips the Jacobi check
    /// for tables that are already known to be valid. Shape and antisymmetry
    /// are always checked.
    pub fn with_options(
        labels: Vec<String>,
        structure: Vec<Vec<Vec<Rational>>>,
        verify_jacobi: bool,
    ) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n || structure.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "structure table must be {n}x{n}"
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in structure {
            for v in row {
                if v.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "bracket vector has length {}, expected {n}",
                        v.len()
                    )));
                }
                flat.push(v);
            }
        }
        let g = LieAlgebra {
            labels,
            structure: flat,
        };
        g.check_antisymmetry()?;
        if verify_jacobi {
            g.check_jacobi()?;
        }
        Ok(g)
    }

    fn from_flat_unchecked(labels: Vec<String>, structure: Vec<Vec<Rational>>) -> Self {
        debug_assert_eq!(structure.len(), labels.len() * labels.len());
        LieAlgebra { labels, structure }
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("A{i}")).collect();
        Self::from_flat_unchecked(labels, vec![vec![Rational::zero(); n]; n * n])
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Rational] {
        &self.structure[i * self.dim() + j]
    }

    /// Nested form of the structure table, `[i][j] -> [e_i, e_j]`.
    pub fn structure_table(&self) -> Vec<Vec<Vec<Rational>>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.basis_bracket(i, j).to_vec()).collect())
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        assert!(
            x.len() == n && y.len() == n,
            "bracket arguments must have length {n}"
        );
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = self.basis_bracket(i, j);
                if is_zero_vector(c) {
                    continue;
                }
                let w = xi * yj;
                for (o, ck) in out.iter_mut().zip(c) {
                    if !ck.is_zero() {
                        *o += &w * ck;
                    }
                }
            }
        }
        out
    }

    /// `[v, e_k]`.
    fn bracket_with_basis(&self, v: &[Rational], k: usize) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (s, vs) in v.iter().enumerate() {
            if vs.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(self.basis_bracket(s, k)) {
                if !c.is_zero() {
                    *o += vs * c;
                }
            }
        }
        out
    }

    fn check_antisymmetry(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            if !is_zero_vector(self.basis_bracket(i, i)) {
                return Err(Error::Antisymmetry(i, i));
            }
            for j in i + 1..n {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return Err(Error::Antisymmetry(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.basis_bracket(i, j);
                for k in j + 1..n {
                    let mut total = self.bracket_with_basis(ij, k);
                    let jk = self.bracket_with_basis(self.basis_bracket(j, k), i);
                    let ki = self.bracket_with_basis(self.basis_bracket(k, i), j);
                    for ((t, a), b) in total.iter_mut().zip(jk).zip(ki) {
                        *t += a + b;
                    }
                    if !is_zero_vector(&total) {
                        return Err(Error::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Rewrites the table in new coordinates `y = T x`: the new basis vectors
    /// are the columns of `T^{-1}`.
    pub fn change_basis(&self, t: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim();
        if t.rows() != n || t.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "change of basis must be {n}x{n}, got {}x{}",
                t.rows(),
                t.cols()
            )));
        }
        let t_inv = t.inverse()?;
        let new_basis: Vec<Vec<Rational>> = (0..n).map(|i| t_inv.column(i)).collect();
        let mut structure = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                structure.push(t.mul_vec(&self.bracket(&new_basis[i], &new_basis[j])));
            }
        }
        let labels = (1..=n).map(|i| format!("f{i}")).collect();
        Ok(Self::from_flat_unchecked(labels, structure))
    }

    /// Whether the structure tables agree entrywise (labels ignored).
    pub fn same_table(&self, other: &LieAlgebra) -> bool {
        self.structure == other.structure
    }

    /// `{x : [x, e_j] = 0 for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // Row (j, s) of the stacked adjoint: coefficient of x_i is c[i][j][s].
        let stacked = Matrix::from_fn(n * n, n, |row, i| {
            let (j, s) = (row / n, row % n);
            self.basis_bracket(i, j)[s].clone()
        });
        Subspace::new(n, &stacked.kernel_basis())
    }

    /// Span of all brackets `[e_i, e_j]`.
    pub fn derived(&self) -> Subspace {
        let n = self.dim();
        let mut vs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.basis_bracket(i, j);
                if !is_zero_vector(v) {
                    vs.push(v.to_vec());
                }
            }
        }
        Subspace::new(n, &vs)
    }

    /// `g, [g, g], [g, [g, g]], ...` up to and including the first term that
    /// equals its predecessor's successor (so a nilpotent algebra ends in 0).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let n = self.dim();
        let mut series = vec![Subspace::full(n)];
        loop {
            let last = series.last().expect("nonempty");
            let mut vs = Vec::new();
            for x in last.basis() {
                for k in 0..n {
                    let v = self.bracket_with_basis(x, k);
                    if !is_zero_vector(&v) {
                        vs.push(v);
                    }
                }
            }
            let next = Subspace::new(n, &vs);
            if &next == last {
                return series;
            }
            let done = next.dim() == 0;
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(|s| s.dim() == 0)
    }

    /// Smallest bracket-closed subspace containing `vectors`.
    pub fn subalgebra_closure(&self, vectors: &[Vec<Rational>]) -> Subspace {
        let n = self.dim();
        let mut current = Subspace::new(n, vectors);
        loop {
            let basis = current.basis().to_vec();
            let mut vs = basis.clone();
            for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    let v = self.bracket(&basis[a], &basis[b]);
                    if !is_zero_vector(&v) {
                        vs.push(v);
                    }
                }
            }
            let next = Subspace::new(n, &vs);
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }
}

/// Heisenberg algebra `h_m`: basis `X1..Xm, Y1..Ym, Z` with `[Xi, Yi] = Z`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "Heisenberg algebra needs m >= 1".into(),
        ));
    }
    let n = 2 * m + 1;
    let mut labels: Vec<String> = (1..=m).map(|i| format!("X{i}")).collect();
    labels.extend((1..=m).map(|i| format!("Y{i}")));
    labels.push("Z".into());
    let mut structure = vec![vec![Rational::zero(); n]; n * n];
    for i in 0..m {
        structure[i * n + (m + i)][n - 1] = Rational::one();
        structure[(m + i) * n + i][n - 1] = -Rational::one();
    }
    Ok(LieAlgebra::from_flat_unchecked(labels, structure))
}

/// `g ⊗ k[t]/(p)` with basis `e_i ⊗ t^j` at index `i * d + j`.
pub fn current_algebra(g: &LieAlgebra, q: &QuotientAlgebra) -> LieAlgebra {
    let n = g.dim();
    let d = q.dim();
    // Coordinates of t^k mod p for k < 2d - 1.
    let reduced: Vec<Vec<Rational>> = (0..2 * d - 1)
        .map(|k| q.coords(&crate::poly::Polynomial::monomial(Rational::one(), k)))
        .collect();
    let dim = n * d;
    let mut structure = vec![vec![Rational::zero(); dim]; dim * dim];
    for i in 0..n {
        for k in 0..n {
            let c = g.basis_bracket(i, k);
            if is_zero_vector(c) {
                continue;
            }
            for j in 0..d {
                for l in 0..d {
                    let prod = &reduced[j + l];
                    let out = &mut structure[(i * d + j) * dim + (k * d + l)];
                    for (s, cs) in c.iter().enumerate() {
                        if cs.is_zero() {
                            continue;
                        }
                        for (r, pr) in prod.iter().enumerate() {
                            if !pr.is_zero() {
                                out[s * d + r] += cs * pr;
                            }
                        }
                    }
                }
            }
        }
    }
    let labels = g
        .labels()
        .iter()
        .flat_map(|lab| (0..d).map(move |j| format!("{lab}*t^{j}")))
        .collect();
    LieAlgebra::from_flat_unchecked(labels, structure)
}

/// Direct sum with block-diagonal structure constants. Labels get the
/// 1-based summand index appended as `[l]`.
pub fn direct_sum(gs: &[LieAlgebra]) -> LieAlgebra {
    if gs.len() == 1 {
        return gs[0].clone();
    }
    let dim: usize = gs.iter().map(LieAlgebra::dim).sum();
    let mut structure = vec![vec![Rational::zero(); dim]; dim * dim];
    let mut labels = Vec::with_capacity(dim);
    let mut off = 0;
    for (l, g) in gs.iter().enumerate() {
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let out = &mut structure[(off + i) * dim + off + j];
                for (s, c) in g.basis_bracket(i, j).iter().enumerate() {
                    out[off + s] = c.clone();
                }
            }
        }
        labels.extend(g.labels().iter().map(|lab| format!("{lab}[{}]", l + 1)));
        off += n;
    }
    LieAlgebra::from_flat_unchecked(labels, structure)
}

/// `⊕_l h_{m, t^{d_l}}` together with the index bookkeeping for its
/// distinguished basis `X_{i,l}^j, Y_{i,l}^j, Z_l^j` (all indices 0-based).
#[derive(Debug, Clone)]
pub struct TruncatedHeisenbergSum {
    m: usize,
    degrees: Vec<usize>,
    offsets: Vec<usize>,
    algebra: LieAlgebra,
}

impl TruncatedHeisenbergSum {
    pub fn new(m: usize, degrees: &[usize]) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidArgument(
                "truncation degrees must be a nonempty list of positive integers".into(),
            ));
        }
        let h = heisenberg(m)?;
        let mut summands = Vec::with_capacity(degrees.len());
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut off = 0;
        for &d in degrees {
            let q = QuotientAlgebra::new(&crate::poly::Polynomial::monomial(Rational::one(), d))?;
            summands.push(current_algebra(&h, &q));
            offsets.push(off);
            off += (2 * m + 1) * d;
        }
        Ok(TruncatedHeisenbergSum {
            m,
            degrees: degrees.to_vec(),
            offsets,
            algebra: direct_sum(&summands),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn total_degree(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn x_index(&self, i: usize, l: usize, j: usize) -> usize {
        self.offsets[l] + i * self.degrees[l] + j
    }

    pub fn y_index(&self, i: usize, l: usize, j: usize) -> usize {
        self.offsets[l] + (self.m + i) * self.degrees[l] + j
    }

    pub fn z_index(&self, l: usize, j: usize) -> usize {
        self.offsets[l] + 2 * self.m * self.degrees[l] + j
    }

    /// Index of `Z_l^{d_l - 1}`.
    pub fn top_central_index(&self, l: usize) -> usize {
        self.z_index(l, self.degrees[l] - 1)
    }

    /// Center spanned by all `Z_l^j`.
    pub fn center(&self) -> Subspace {
        let n = self.algebra.dim();
        let mut vs = Vec::new();
        for l in 0..self.degrees.len() {
            for j in 0..self.degrees[l] {
                vs.push(self.algebra.basis_vector(self.z_index(l, j)));
            }
        }
        Subspace::new(n, &vs)
    }
}

/// Subspace of `k^n` stored as a reduced row echelon basis, so equal
/// subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn new(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient_dim),
            "vector length mismatch"
        );
        Subspace {
            ambient_dim,
            basis: row_echelon_basis(vectors, ambient_dim),
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n).to_rows(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut with = self.basis.clone();
        with.push(v.to_vec());
        vectors_rank(&with) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::new(self.ambient_dim, &vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve sum a_i u_i = sum b_j w_j; the u-combinations span the meet.
        let (k1, k2) = (self.dim(), other.dim());
        if k1 == 0 || k2 == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let m = Matrix::from_fn(self.ambient_dim, k1 + k2, |r, c| {
            if c < k1 {
                self.basis[c][r].clone()
            } else {
                -other.basis[c - k1][r].clone()
            }
        });
        let vs: Vec<Vec<Rational>> = m
            .kernel_basis()
            .into_iter()
            .map(|coef| {
                let mut v = vec![Rational::zero(); self.ambient_dim];
                for (a, u) in coef[..k1].iter().zip(&self.basis) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += a * y;
                    }
                }
                v
            })
            .collect();
        Subspace::new(self.ambient_dim, &vs)
    }
}
