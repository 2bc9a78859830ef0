//! Block decomposition of an abelian space of nilpotent operators.
//!
//! Given such a space `N` on `V`, [`schur_decompose`] produces independent
//! vectors `v_1..v_s` and a splitting `N = N_1 + ... + N_s` such that, with
//! `F_i(T) = T v_i`:
//!
//! 1. `F_i` is injective on `N_i`;
//! 2. `N_j ⊂ ker F_i` for `i < j`;
//! 3. `N_j V ⊂ F_i(N_i)` for `i < j`.
//!
//! Each `v_i` maximizes `dim N' v` over the current kernel `N'`, and `N_i` is
//! a complement of `ker F_i` in `N'`. The bound `dim V >= ceil(2 sqrt(dim N))`
//! follows from these properties.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, vectors_rank, Matrix, Rational};
use crate::rep::{ceil_two_sqrt, Representation};

/// Basis of an abelian subspace of nilpotent operators on `k^space_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilFamily {
    space_dim: usize,
    basis: Vec<Matrix>,
}

impl NilFamily {
    /// Validates size, nilpotency, pairwise commutation and independence.
    pub fn new(space_dim: usize, basis: Vec<Matrix>) -> Result<Self> {
        for (k, t) in basis.iter().enumerate() {
            if t.rows() != space_dim || t.cols() != space_dim {
                return Err(Error::InvalidFamily(format!(
                    "operator {k} is {}x{}, space has dimension {space_dim}",
                    t.rows(),
                    t.cols()
                )));
            }
            if !t.is_nilpotent()? {
                return Err(Error::InvalidFamily(format!(
                    "operator {k} is not nilpotent"
                )));
            }
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !basis[i].commutator(&basis[j]).is_zero() {
                    return Err(Error::InvalidFamily(format!(
                        "operators {i} and {j} do not commute"
                    )));
                }
            }
        }
        let flat: Vec<Vec<Rational>> = basis.iter().map(|t| t.entries().to_vec()).collect();
        if vectors_rank(&flat) != basis.len() {
            return Err(Error::InvalidFamily(
                "operators are linearly dependent".into(),
            ));
        }
        Ok(NilFamily { space_dim, basis })
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// Operator with the given coordinates in the family basis.
    pub fn operator(&self, coords: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.space_dim, self.space_dim);
        for (c, t) in coords.iter().zip(&self.basis) {
            out.add_scaled(c, t);
        }
        out
    }

    /// Coordinates of `t` in the family basis, if it lies in the family.
    pub fn coordinates_of(&self, t: &Matrix) -> Option<Vec<Rational>> {
        let k = self.dim();
        let nn = self.space_dim * self.space_dim;
        let mut aug = Matrix::zeros(nn, k + 1);
        for (c, b) in self.basis.iter().enumerate() {
            for (r, x) in b.entries().iter().enumerate() {
                aug[(r, c)] = x.clone();
            }
        }
        for (r, x) in t.entries().iter().enumerate() {
            aug[(r, k)] = -x.clone();
        }
        // a kernel vector with last coordinate 1 gives the coordinates
        let sol = aug.kernel_basis().into_iter().find(|v| !v[k].is_zero())?;
        let scale = sol[k].recip();
        Some(sol[..k].iter().map(|x| x * &scale).collect())
    }
}

/// `pi(z)` for the center `z` of the represented algebra.
pub fn center_family(rep: &Representation) -> Result<NilFamily> {
    let z = rep.algebra().center();
    let ops = z.basis().iter().map(|v| rep.image_of(v)).collect();
    NilFamily::new(rep.degree(), ops)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurDecomposition {
    pub vectors: Vec<Vec<Rational>>,
    /// Each block is a list of operators, given as coordinates in the family basis.
    pub blocks: Vec<Vec<Vec<Rational>>>,
}

impl SchurDecomposition {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn blocks_non_increasing(&self) -> bool {
        self.block_dims().windows(2).all(|w| w[0] >= w[1])
    }
}

/// `dim span {T v : T in ops}`.
fn orbit_rank(ops: &[Matrix], v: &[Rational]) -> usize {
    let images: Vec<Vec<Rational>> = ops.iter().map(|t| t.mul_vec(v)).collect();
    vectors_rank(&images)
}

fn axpy_vec(v: &[Rational], t: &Rational, w: &[Rational]) -> Vec<Rational> {
    v.iter().zip(w).map(|(a, b)| a + t * b).collect()
}

const GENERIC_SEED: u64 = 0x0005_eed0_f5c4_u64;
const GENERIC_TRIALS: usize = 24;
const GENERIC_RANGE: i64 = 1000;

/// A vector `v` maximizing `dim(ops v)` with `T v != 0` for every `T` in `avoid`.
///
/// The maximal rank is located among the unit vectors and a fixed seeded
/// sequence of integer vectors, stopping early once the trivial upper bound
/// `min(#ops, dim sum im T)` is reached. The avoid conditions are then
/// enforced one at a time by the line search `v + t w`, `t = 1, 2, ...`,
/// where `T w != 0`; at most `rank + #avoid + 1` steps are needed because
/// every condition is a nonzero polynomial in `t` of degree at most `rank`.
pub fn max_rank_vector(
    ops: &[Matrix],
    avoid: &[Matrix],
    space_dim: usize,
) -> Result<Vec<Rational>> {
    if ops.iter().all(Matrix::is_zero) {
        return Err(Error::ZeroFamily);
    }
    if let Some(k) = avoid.iter().position(Matrix::is_zero) {
        return Err(Error::ZeroOperator(k));
    }
    let n = space_dim;
    let joint_image: Vec<Vec<Rational>> = ops
        .iter()
        .flat_map(|t| (0..n).map(move |j| t.column(j)))
        .collect();
    let upper = ops.len().min(vectors_rank(&joint_image));

    let mut best = vec![Rational::zero(); n];
    let mut best_rank = 0;
    let units = (0..n).map(|j| {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        e
    });
    let mut rng = ChaCha8Rng::seed_from_u64(GENERIC_SEED);
    let seeded = (0..GENERIC_TRIALS).map(move |_| {
        (0..n)
            .map(|_| Rational::from_integer(rng.gen_range(-GENERIC_RANGE..=GENERIC_RANGE).into()))
            .collect::<Vec<_>>()
    });
    for cand in units.chain(seeded) {
        let r = orbit_rank(ops, &cand);
        if r > best_rank {
            best_rank = r;
            best = cand;
        }
        if best_rank == upper {
            break;
        }
    }

    for (q, t) in avoid.iter().enumerate() {
        if !is_zero_vector(&t.mul_vec(&best)) {
            continue;
        }
        let col = (0..n)
            .find(|&j| !is_zero_vector(&t.column(j)))
            .expect("nonzero operator has a nonzero column");
        let mut w = vec![Rational::zero(); n];
        w[col] = Rational::one();
        let limit = best_rank + q + 2;
        let found = (1..=limit as i64).find_map(|step| {
            let cand = axpy_vec(&best, &Rational::from_integer(step.into()), &w);
            let ok = orbit_rank(ops, &cand) == best_rank
                && avoid[..=q]
                    .iter()
                    .all(|a| !is_zero_vector(&a.mul_vec(&cand)));
            ok.then_some(cand)
        });
        best = found.ok_or_else(|| {
            Error::InvalidArgument("line search for a generic vector did not terminate".into())
        })?;
    }
    Ok(best)
}

/// Recursive decomposition; `distinguished` operators must lie in the family
/// and are guaranteed `T v_1 != 0`.
pub fn schur_decompose(family: &NilFamily, distinguished: &[Matrix]) -> Result<SchurDecomposition> {
    if family.dim() == 0 {
        return Err(Error::ZeroFamily);
    }
    for (k, t) in distinguished.iter().enumerate() {
        if t.is_zero() {
            return Err(Error::ZeroOperator(k));
        }
        if family.coordinates_of(t).is_none() {
            return Err(Error::InvalidArgument(format!(
                "distinguished operator {k} is not in the family"
            )));
        }
    }
    let k = family.dim();
    let n = family.space_dim();
    // current subspace N' as coordinate vectors in the family basis
    let mut current: Vec<Vec<Rational>> = Matrix::identity(k).to_rows();
    let mut vectors = Vec::new();
    let mut blocks = Vec::new();
    loop {
        let ops: Vec<Matrix> = current.iter().map(|c| family.operator(c)).collect();
        let avoid = if vectors.is_empty() {
            distinguished
        } else {
            &[]
        };
        let v = max_rank_vector(&ops, avoid, n)?;
        let images: Vec<Vec<Rational>> = ops.iter().map(|t| t.mul_vec(&v)).collect();
        let f = Matrix::from_columns(n, &images);
        let kernel: Vec<Vec<Rational>> = f
            .kernel_basis()
            .into_iter()
            .map(|c| combine(&c, &current, k))
            .collect();
        // greedy complement of ker F in N', in basis order
        let mut spanning = kernel.clone();
        let mut rank = vectors_rank(&spanning);
        let mut block = Vec::new();
        for c in &current {
            spanning.push(c.clone());
            let r = vectors_rank(&spanning);
            if r > rank {
                rank = r;
                block.push(c.clone());
            } else {
                spanning.pop();
            }
        }
        vectors.push(v);
        blocks.push(block);
        if kernel.is_empty() {
            break;
        }
        current = kernel;
    }
    Ok(SchurDecomposition { vectors, blocks })
}

fn combine(coeffs: &[Rational], basis: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    out
}

/// Exact check of properties (1)-(3) plus the structural invariants:
/// independent vectors, nonzero blocks summing directly to the family.
pub fn verify_schur(family: &NilFamily, dec: &SchurDecomposition) -> bool {
    let s = dec.vectors.len();
    let n = family.space_dim();
    if s == 0 || dec.blocks.len() != s || dec.blocks.iter().any(Vec::is_empty) {
        return false;
    }
    if dec.vectors.iter().any(|v| v.len() != n)
        || dec.blocks.iter().flatten().any(|c| c.len() != family.dim())
    {
        return false;
    }
    if vectors_rank(&dec.vectors) != s {
        return false;
    }
    let all: Vec<Vec<Rational>> = dec.blocks.iter().flatten().cloned().collect();
    if all.len() != family.dim() || vectors_rank(&all) != family.dim() {
        return false;
    }
    let ops: Vec<Vec<Matrix>> = dec
        .blocks
        .iter()
        .map(|b| b.iter().map(|c| family.operator(c)).collect())
        .collect();
    let f_images: Vec<Vec<Vec<Rational>>> = (0..s)
        .map(|i| ops[i].iter().map(|t| t.mul_vec(&dec.vectors[i])).collect())
        .collect();
    for i in 0..s {
        if vectors_rank(&f_images[i]) != ops[i].len() {
            return false;
        }
        let span_rank = f_images[i].len();
        for later in &ops[i + 1..] {
            for t in later {
                if !is_zero_vector(&t.mul_vec(&dec.vectors[i])) {
                    return false;
                }
                for w in 0..n {
                    let col = t.column(w);
                    if is_zero_vector(&col) {
                        continue;
                    }
                    let mut with = f_images[i].clone();
                    with.push(col);
                    if vectors_rank(&with) != span_rank {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `dim V >= ceil(2 sqrt(dim N))`.
pub fn schur_bound_check(family: &NilFamily) -> bool {
    family.space_dim() as u64 >= ceil_two_sqrt(family.dim() as u64)
}

/// Quantities in the lower-bound argument for a faithful nil-representation
/// of `⊕ h_{m,t^{d_l}}`, evaluated on a decomposition of `pi(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundChain {
    pub image_phi: usize,
    pub kernel_f1: usize,
    pub image_f1: usize,
    pub s: usize,
    /// `dim im phi + dim ker F_1 >= (m + 1) d`
    pub first: bool,
    /// `im phi ∩ span(v_1..v_s) = 0`
    pub second: bool,
    /// `d <= s dim im F_1`
    pub third: bool,
}

impl LowerBoundChain {
    pub fn holds(&self) -> bool {
        self.first && self.second && self.third
    }
}

/// Evaluates the chain for `phi(X) = pi(X) v_1`; `family` must be the center
/// family the decomposition was computed from.
pub fn lower_bound_chain(
    rep: &Representation,
    m: usize,
    family: &NilFamily,
    dec: &SchurDecomposition,
) -> LowerBoundChain {
    let d = family.dim();
    let v1 = &dec.vectors[0];
    let phi: Vec<Vec<Rational>> = rep.images().iter().map(|t| t.mul_vec(v1)).collect();
    let image_phi = vectors_rank(&phi);
    let f1: Vec<Vec<Rational>> = family.basis().iter().map(|t| t.mul_vec(v1)).collect();
    let image_f1 = vectors_rank(&f1);
    let kernel_f1 = d - image_f1;
    let s = dec.vectors.len();
    let mut joint = phi.clone();
    joint.extend(dec.vectors.iter().cloned());
    let second = vectors_rank(&joint) == image_phi + s;
    LowerBoundChain {
        image_phi,
        kernel_f1,
        image_f1,
        s,
        first: image_phi + kernel_f1 >= (m + 1) * d,
        second,
        third: d <= s * image_f1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::poly::{Polynomial, QuotientAlgebra};
    use crate::rep::minimal_faithful;

    fn e(n: usize, i: usize, j: usize) -> Matrix {
        Matrix::unit(n, n, i, j)
    }

    #[test]
    fn family_validation() {
        assert!(NilFamily::new(2, vec![Matrix::identity(2)]).is_err());
        assert!(NilFamily::new(3, vec![e(3, 0, 1), e(3, 1, 2)]).is_err());
        assert!(NilFamily::new(3, vec![e(3, 0, 2), e(3, 0, 2)]).is_err());
        assert!(NilFamily::new(3, vec![e(2, 0, 1)]).is_err());
        assert!(NilFamily::new(3, vec![e(3, 0, 2), e(3, 1, 2)]).is_ok());
    }

    #[test]
    fn max_rank_examples() {
        let v = max_rank_vector(&[e(2, 0, 1)], &[], 2).unwrap();
        assert!(!v[1].is_zero());

        let ops = [e(3, 0, 2), e(3, 1, 2)];
        let v = max_rank_vector(&ops, &[], 3).unwrap();
        assert_eq!(orbit_rank(&ops, &v), 2);
        // brute force over {0,1}^3
        let brute = (0..8)
            .map(|mask: usize| {
                let w: Vec<Rational> = (0..3).map(|b| rat(((mask >> b) & 1) as i64)).collect();
                orbit_rank(&ops, &w)
            })
            .max()
            .unwrap();
        assert_eq!(brute, 2);

        let v = max_rank_vector(&ops, &[e(3, 0, 2)], 3).unwrap();
        assert!(!is_zero_vector(&e(3, 0, 2).mul_vec(&v)));
        assert_eq!(orbit_rank(&ops, &v), 2);
    }

    #[test]
    fn avoid_forces_line_search() {
        // family span(E12, E13) on k^3: the first unit-vector candidate that
        // reaches rank 1 is e2, where E13 vanishes.
        let ops = [e(3, 0, 1), e(3, 0, 2)];
        let v = max_rank_vector(&ops, &[e(3, 0, 2), e(3, 0, 1)], 3).unwrap();
        assert!(!e(3, 0, 2).mul_vec(&v)[0].is_zero());
        assert!(!e(3, 0, 1).mul_vec(&v)[0].is_zero());
        assert_eq!(orbit_rank(&ops, &v), 1);
    }

    #[test]
    fn max_rank_errors() {
        assert_eq!(
            max_rank_vector(&[Matrix::zeros(2, 2)], &[], 2),
            Err(Error::ZeroFamily)
        );
        assert_eq!(
            max_rank_vector(&[e(2, 0, 1)], &[Matrix::zeros(2, 2)], 2),
            Err(Error::ZeroOperator(0))
        );
    }

    #[test]
    fn single_operator_family() {
        let fam = NilFamily::new(2, vec![e(2, 0, 1)]).unwrap();
        let dec = schur_decompose(&fam, &[]).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.block_dims(), vec![1]);
        assert!(verify_schur(&fam, &dec));
        assert!(schur_bound_check(&fam));
    }

    #[test]
    fn two_dimensional_family_is_one_block() {
        let fam = NilFamily::new(3, vec![e(3, 0, 2), e(3, 1, 2)]).unwrap();
        let dec = schur_decompose(&fam, &[]).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.block_dims(), vec![2]);
        assert!(verify_schur(&fam, &dec));
    }

    #[test]
    fn truncated_center_family() {
        let q = QuotientAlgebra::new(&Polynomial::monomial(rat(1), 3)).unwrap();
        let rep = minimal_faithful(1, &q).unwrap();
        let fam = center_family(&rep).unwrap();
        assert_eq!(fam.dim(), 3);
        let top = rep.image_of(&rep.algebra().basis_vector(rep.algebra().dim() - 1));
        let dec = schur_decompose(&fam, std::slice::from_ref(&top)).unwrap();
        assert!(verify_schur(&fam, &dec));
        assert!(dec.blocks_non_increasing());
        assert!(!is_zero_vector(&top.mul_vec(&dec.vectors[0])));
        assert!(schur_bound_check(&fam));
        assert!(lower_bound_chain(&rep, 1, &fam, &dec).holds());
    }

    #[test]
    fn corrupted_decomposition_fails() {
        // square-zero family [[0, X], [0, 0]] with X in span(E11, E12) on k^4
        let fam = NilFamily::new(4, vec![e(4, 0, 2), e(4, 0, 3), e(4, 1, 3)]).unwrap();
        let dec = schur_decompose(&fam, &[]).unwrap();
        assert!(verify_schur(&fam, &dec));
        assert!(dec.len() >= 2, "{dec:?}");
        let mut bad = dec.clone();
        bad.vectors.swap(0, 1);
        assert!(!verify_schur(&fam, &bad));
    }

    #[test]
    fn maximal_square_zero_family_is_tight() {
        let ops = vec![e(4, 0, 2), e(4, 0, 3), e(4, 1, 2), e(4, 1, 3)];
        let fam = NilFamily::new(4, ops).unwrap();
        assert!(schur_bound_check(&fam));
        assert_eq!(ceil_two_sqrt(4), 4);
        let dec = schur_decompose(&fam, &[]).unwrap();
        assert!(verify_schur(&fam, &dec));
        assert_eq!(dec.block_dims(), vec![2, 2]);
    }

    #[test]
    fn distinguished_must_be_in_family() {
        let fam = NilFamily::new(3, vec![e(3, 0, 2)]).unwrap();
        assert!(schur_decompose(&fam, &[e(3, 1, 2)]).is_err());
        assert_eq!(
            schur_decompose(&fam, &[Matrix::zeros(3, 3)]),
            Err(Error::ZeroOperator(0))
        );
        let empty = NilFamily::new(3, vec![]).unwrap();
        assert_eq!(schur_decompose(&empty, &[]), Err(Error::ZeroFamily));
    }
}
