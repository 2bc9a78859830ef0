//! Representations of Lie algebras as lists of basis images, and the
//! constructions that realize `mu(h_{m,p}) = m*deg(p) + ceil(2*sqrt(deg p))`.
//!
//! The `pi_ab` family acts on `k^{a + m*d + b}` split into one leading
//! `a`-block, `m` middle `d`-blocks and one trailing `b`-block. Its image of
//! `sum X_i⊗q1_i + sum Y_i⊗q2_i + Z⊗q3` has `A q1_i(P)` in the top row,
//! `q2_i(P) B` in the last column and `A q3(P) B` in the corner.

use num_integer::Roots;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{current_algebra, heisenberg, LieAlgebra, TruncatedHeisenbergSum};
use crate::linalg::{kron, vectors_rank, BlockLayout, Matrix, Rational};
use crate::poly::QuotientAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    degree: usize,
    images: Vec<Matrix>,
}

impl Representation {
    /// Checks only shapes; see [`Representation::check_homomorphism`].
    pub fn new(algebra: LieAlgebra, degree: usize, images: Vec<Matrix>) -> Result<Self> {
        if images.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for an algebra of dimension {}",
                images.len(),
                algebra.dim()
            )));
        }
        if let Some(k) = images
            .iter()
            .position(|m| m.rows() != degree || m.cols() != degree)
        {
            return Err(Error::DimensionMismatch(format!(
                "image {k} is {}x{}, degree is {degree}",
                images[k].rows(),
                images[k].cols()
            )));
        }
        Ok(Representation {
            algebra,
            degree,
            images,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    /// Image of an arbitrary element given in basis coordinates.
    pub fn image_of(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.degree, self.degree);
        for (c, img) in x.iter().zip(&self.images) {
            out.add_scaled(c, img);
        }
        out
    }

    /// `pi([e_i, e_j]) = [pi(e_i), pi(e_j)]` for every basis pair.
    pub fn check_homomorphism(&self) -> bool {
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.images[i].commutator(&self.images[j]);
                let rhs = self.image_of(self.algebra.basis_bracket(i, j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Rank of the flattened images equals the algebra dimension.
    /// Rejects non-homomorphisms.
    pub fn is_faithful(&self) -> Result<bool> {
        if !self.check_homomorphism() {
            return Err(Error::NotHomomorphism);
        }
        Ok(self.image_rank() == self.algebra.dim())
    }

    /// Dimension of the image `pi(g)`.
    pub fn image_rank(&self) -> usize {
        let flat: Vec<Vec<Rational>> = self.images.iter().map(|m| m.entries().to_vec()).collect();
        vectors_rank(&flat)
    }

    /// Basis of the kernel of `X -> pi(X)`, in algebra coordinates.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let n = self.algebra.dim();
        let dd = self.degree * self.degree;
        let stacked = Matrix::from_fn(dd, n, |r, c| self.images[c].entries()[r].clone());
        stacked.kernel_basis()
    }
}

/// Standard faithful representation of `h_m` on `k^{m+2}`:
/// `X_i -> E_{1,i+1}`, `Y_i -> E_{i+1,m+2}`, `Z -> E_{1,m+2}`.
pub fn pi0(m: usize) -> Result<Representation> {
    let h = heisenberg(m)?;
    let n = m + 2;
    let mut images = Vec::with_capacity(2 * m + 1);
    images.extend((0..m).map(|i| Matrix::unit(n, n, 0, i + 1)));
    images.extend((0..m).map(|i| Matrix::unit(n, n, i + 1, n - 1)));
    images.push(Matrix::unit(n, n, 0, n - 1));
    Representation::new(h, n, images)
}

/// `pi ⊗ rho` on `current_algebra(g, Q)`: `e_i ⊗ t^j -> kron(pi(e_i), P^j)`.
pub fn tensor_rep(pi: &Representation, q: &QuotientAlgebra) -> Representation {
    let powers = q.regular_representation();
    let images = pi
        .images
        .iter()
        .flat_map(|img| powers.iter().map(move |pj| kron(img, pj)))
        .collect();
    Representation {
        algebra: current_algebra(&pi.algebra, q),
        degree: pi.degree * q.dim(),
        images,
    }
}

/// The matrices `A` (`a x d`) and `B` (`d x b`) defining `pi_ab`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbPair {
    pub a: usize,
    pub b: usize,
    pub left: Matrix,
    pub right: Matrix,
}

impl AbPair {
    pub fn new(left: Matrix, right: Matrix) -> Result<Self> {
        if left.cols() != right.rows() {
            return Err(Error::DimensionMismatch(format!(
                "A is {}x{} but B is {}x{}",
                left.rows(),
                left.cols(),
                right.rows(),
                right.cols()
            )));
        }
        Ok(AbPair {
            a: left.rows(),
            b: right.cols(),
            left,
            right,
        })
    }

    pub fn d(&self) -> usize {
        self.left.cols()
    }
}

/// Canonical 0/1 pair: `A[i, j] = 1` iff `j = d - (a - i) b` (1-based, only
/// when that `j` lies in `1..=d`), and `B[i, j] = 1` iff `i = j`.
pub fn make_ab(d: usize, a: usize, b: usize) -> Result<AbPair> {
    if a == 0 || b == 0 || d == 0 {
        return Err(Error::InvalidArgument("make_ab needs d, a, b >= 1".into()));
    }
    let mut left = Matrix::zeros(a, d);
    for i in 1..=a {
        let j = d as i64 - ((a - i) * b) as i64;
        if (1..=d as i64).contains(&j) {
            left[(i - 1, j as usize - 1)] = Rational::one();
        }
    }
    let right = Matrix::from_fn(d, b, |i, j| {
        if i == j {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    AbPair::new(left, right)
}

/// Injectivity of `q(P) -> A q(P) B` on `k[P]`: the flattened products
/// `A P^k B`, `k < d`, have rank `d`.
pub fn beta_injective(pair: &AbPair, q: &QuotientAlgebra) -> Result<bool> {
    let d = q.dim();
    if pair.d() != d {
        return Err(Error::DimensionMismatch(format!(
            "pair is built for d = {}, algebra has d = {d}",
            pair.d()
        )));
    }
    let flat: Vec<Vec<Rational>> = q
        .regular_representation()
        .iter()
        .map(|pk| (&(&pair.left * pk) * &pair.right).into_entries())
        .collect();
    Ok(vectors_rank(&flat) == d)
}

/// Offsets of the `a | d x m | b` block layout used by `pi_ab`.
#[derive(Debug, Clone, Copy)]
struct AbLayout {
    m: usize,
    d: usize,
    a: usize,
    b: usize,
}

impl AbLayout {
    fn sizes(&self) -> Vec<usize> {
        let mut s = Vec::with_capacity(self.m + 2);
        s.push(self.a);
        s.extend(std::iter::repeat_n(self.d, self.m));
        s.push(self.b);
        s
    }

    fn grid(&self) -> BlockLayout {
        BlockLayout::new(self.sizes(), self.sizes())
    }

    /// Block index of the `i`-th middle block (0-based).
    fn middle(&self, i: usize) -> usize {
        1 + i
    }

    fn last(&self) -> usize {
        self.m + 1
    }

    fn degree(&self) -> usize {
        self.a + self.m * self.d + self.b
    }
}

/// The representation `pi_{A,B}` of `h_{m,p}` on `k^{m d + a + b}`.
pub fn pi_ab(m: usize, q: &QuotientAlgebra, pair: &AbPair) -> Result<Representation> {
    let d = q.dim();
    if pair.d() != d {
        return Err(Error::DimensionMismatch(format!(
            "pair is built for d = {}, algebra has d = {d}",
            pair.d()
        )));
    }
    let algebra = current_algebra(&heisenberg(m)?, q);
    let layout = AbLayout {
        m,
        d,
        a: pair.a,
        b: pair.b,
    };
    let powers = q.regular_representation();
    let a_p: Vec<Matrix> = powers.iter().map(|pk| &pair.left * pk).collect();
    let p_b: Vec<Matrix> = powers.iter().map(|pk| pk * &pair.right).collect();

    let mut images = Vec::with_capacity((2 * m + 1) * d);
    for i in 0..m {
        for ap in &a_p {
            let mut g = layout.grid();
            g.set(0, layout.middle(i), ap.clone());
            images.push(g.assemble()?);
        }
    }
    for i in 0..m {
        for pb in &p_b {
            let mut g = layout.grid();
            g.set(layout.middle(i), layout.last(), pb.clone());
            images.push(g.assemble()?);
        }
    }
    for ap in &a_p {
        let mut g = layout.grid();
        g.set(0, layout.last(), ap * &pair.right);
        images.push(g.assemble()?);
    }
    Representation::new(algebra, layout.degree(), images)
}

/// Least `s` with `floor(s/2) * ceil(s/2) >= d`, which is `ceil(2 sqrt d)`.
pub fn ceil_two_sqrt(d: u64) -> u64 {
    if d == 0 {
        return 0;
    }
    // 2 * isqrt(d) <= 2 sqrt(d) <= answer, and the scan takes at most two steps
    let mut s = 2 * d.sqrt();
    while (s / 2) * s.div_ceil(2) < d {
        s += 1;
    }
    s
}

/// A pair `(a, b)` minimizing `a + b` subject to `a b >= d`, smallest `a`
/// among the optima.
pub fn min_sum(d: u64) -> Result<(u64, u64)> {
    if d == 0 {
        return Err(Error::InvalidArgument("min_sum needs d >= 1".into()));
    }
    let s = ceil_two_sqrt(d);
    let a = (1..=s / 2)
        .find(|&a| a * (s - a) >= d)
        .expect("s/2 always works");
    Ok((a, s - a))
}

/// `m d + ceil(2 sqrt d)`.
pub fn mu_formula(m: u64, d: u64) -> Result<u64> {
    if m == 0 || d == 0 {
        return Err(Error::InvalidArgument("mu_formula needs m, d >= 1".into()));
    }
    Ok(m * d + ceil_two_sqrt(d))
}

/// `pi_ab` with the canonical pair at the optimal `(a, b)`.
pub fn minimal_faithful(m: usize, q: &QuotientAlgebra) -> Result<Representation> {
    let d = q.dim();
    let (a, b) = min_sum(d as u64)?;
    pi_ab(m, q, &make_ab(d, a as usize, b as usize)?)
}

/// Kind of a partner element returned by [`find_partner`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartnerKind {
    /// `Y` is a multiple of a `Y`-type basis element.
    YType,
    /// `Y` is a multiple of an `X`-type basis element.
    XType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partner {
    pub element: Vec<Rational>,
    /// Summand `l` (0-based) with `[X, Y] = Z_l^{d_l - 1}`.
    pub summand: usize,
    pub kind: PartnerKind,
}

/// For non-central `x` in `⊕_l h_{m,t^{d_l}}`, returns `y` with
/// `[x, y] = Z_l^{d_l - 1}`.
///
/// Takes the first basis position (in basis order) carrying a nonzero `X`
/// or `Y` coefficient of `x`, say for `(i0, l0)`; with `j1` the lowest power
/// of `t` where that `(i0, l0)` coordinate is nonzero, the partner is
/// `Y_{i0,l0}^{d-1-j1} / a` in the `X` case and `-X_{i0,l0}^{d-1-j1} / b`
/// in the `Y` case.
pub fn find_partner(sum: &TruncatedHeisenbergSum, x: &[Rational]) -> Result<Partner> {
    let g = sum.algebra();
    if x.len() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "element has {} coordinates, algebra has dimension {}",
            x.len(),
            g.dim()
        )));
    }
    let m = sum.m();
    for (l, &d) in sum.degrees().iter().enumerate() {
        for i in 0..m {
            if let Some(j1) = (0..d).find(|&j| !x[sum.x_index(i, l, j)].is_zero()) {
                let c = x[sum.x_index(i, l, j1)].recip();
                let mut y = vec![Rational::zero(); g.dim()];
                y[sum.y_index(i, l, d - 1 - j1)] = c;
                return Ok(Partner {
                    element: y,
                    summand: l,
                    kind: PartnerKind::YType,
                });
            }
        }
        for i in 0..m {
            if let Some(j1) = (0..d).find(|&j| !x[sum.y_index(i, l, j)].is_zero()) {
                let c = -x[sum.y_index(i, l, j1)].recip();
                let mut y = vec![Rational::zero(); g.dim()];
                y[sum.x_index(i, l, d - 1 - j1)] = c;
                return Ok(Partner {
                    element: y,
                    summand: l,
                    kind: PartnerKind::XType,
                });
            }
        }
    }
    Err(Error::CentralElement)
}
