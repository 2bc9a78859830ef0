//! Additive Jordan–Chevalley decomposition over the rationals and its
//! application to representations of nilpotent Lie algebras.
//!
//! The semisimple part is found by Newton iteration on the squarefree part
//! `f` of the minimal polynomial: `S <- S - f(S) u(S)` with `u = 1/f' mod f`.
//! No eigenvalues are ever computed, so irrational spectra are fine.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational};
use crate::poly::Polynomial;
use crate::rep::Representation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanPair {
    pub semisimple: Matrix,
    pub nilpotent: Matrix,
}

/// Newton steps converge quadratically; this cap is far above
/// `ceil(log2 n) + 1` for any matrix this crate can hold.
const MAX_NEWTON_STEPS: usize = 64;

pub fn jordan_chevalley(m: &Matrix) -> Result<JordanPair> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(JordanPair {
            semisimple: m.clone(),
            nilpotent: m.clone(),
        });
    }
    let f = m.minimal_polynomial()?.squarefree_part()?;
    let u = f.derivative().inverse_mod(&f)?;
    let mut s = m.clone();
    for _ in 0..MAX_NEWTON_STEPS {
        let fs = f.eval_at_matrix(&s)?;
        if fs.is_zero() {
            let nilpotent = m - &s;
            return Ok(JordanPair {
                semisimple: s,
                nilpotent,
            });
        }
        s = &s - &(&fs * &u.eval_at_matrix(&s)?);
    }
    Err(Error::InvalidArgument(
        "Newton iteration for the semisimple part did not converge".into(),
    ))
}

/// Minimal polynomial of `m` has no repeated factor.
pub fn is_semisimple(m: &Matrix) -> Result<bool> {
    Ok(m.minimal_polynomial()?.is_squarefree())
}

/// Basiswise Jordan decomposition of a representation of a nilpotent
/// algebra: returns `(pi_S, pi_N)`.
pub fn rep_jordan_parts(rep: &Representation) -> Result<(Representation, Representation)> {
    if !rep.algebra().is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let mut semisimple = Vec::with_capacity(rep.images().len());
    let mut nilpotent = Vec::with_capacity(rep.images().len());
    for img in rep.images() {
        let pair = jordan_chevalley(img)?;
        semisimple.push(pair.semisimple);
        nilpotent.push(pair.nilpotent);
    }
    let g = rep.algebra().clone();
    Ok((
        Representation::new(g.clone(), rep.degree(), semisimple)?,
        Representation::new(g, rep.degree(), nilpotent)?,
    ))
}

/// Checks that `pi` is faithful exactly when its nilpotent part is.
///
/// Requires a nilpotent algebra whose center lies in its derived algebra;
/// a `false` return means the equivalence failed on this input.
pub fn verify_nilrep_theorem(rep: &Representation) -> Result<bool> {
    let g = rep.algebra();
    if !g.is_nilpotent() {
        return Err(Error::Hypothesis("algebra is not nilpotent".into()));
    }
    if !g.center().is_subspace_of(&g.derived()) {
        return Err(Error::Hypothesis(
            "center is not contained in the derived algebra".into(),
        ));
    }
    let (_, nil) = rep_jordan_parts(rep)?;
    Ok(rep.is_faithful()? == nil.is_faithful()?)
}

/// Basis of the linear functionals on `g` that vanish on `[g, g]`.
pub fn characters(g: &LieAlgebra) -> Vec<Vec<Rational>> {
    let derived = g.derived();
    if derived.dim() == 0 {
        return Matrix::identity(g.dim()).to_rows();
    }
    Matrix::from_rows(derived.basis().to_vec())
        .expect("echelon rows share a length")
        .kernel_basis()
}

/// `pi'(e_i) = pi(e_i) + lambda_i I` for a functional `lambda` vanishing on
/// the derived algebra; `pi'` is again a representation.
pub fn shift_by_character(rep: &Representation, lambda: &[Rational]) -> Result<Representation> {
    let g = rep.algebra();
    if lambda.len() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "functional has {} coordinates, algebra has dimension {}",
            lambda.len(),
            g.dim()
        )));
    }
    let vanishes = g.derived().basis().iter().all(|v| {
        v.iter()
            .zip(lambda)
            .map(|(a, b)| a * b)
            .sum::<Rational>()
            .is_zero()
    });
    if !vanishes {
        return Err(Error::InvalidArgument(
            "functional does not vanish on the derived algebra".into(),
        ));
    }
    let id = Matrix::identity(rep.degree());
    let images = rep
        .images()
        .iter()
        .zip(lambda)
        .map(|(img, c)| &id.scale(c) + img)
        .collect();
    Representation::new(g.clone(), rep.degree(), images)
}

/// `gcd(p, p') = 1` for the minimal polynomial of the semisimple part.
pub fn semisimple_part_is_squarefree(pair: &JordanPair) -> Result<bool> {
    let mp: Polynomial = pair.semisimple.minimal_polynomial()?;
    Ok(mp.is_squarefree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::poly::{companion, QuotientAlgebra};
    use crate::rep::{make_ab, minimal_faithful, pi0, pi_ab};

    #[test]
    fn unipotent_block() {
        let m = Matrix::from_ints(&[[1, 1], [0, 1]]);
        let jp = jordan_chevalley(&m).unwrap();
        assert_eq!(jp.semisimple, Matrix::identity(2));
        assert_eq!(jp.nilpotent, Matrix::from_ints(&[[0, 1], [0, 0]]));
    }

    #[test]
    fn nilpotent_input() {
        let m = Matrix::from_ints(&[[0, 2, -1], [0, 0, 4], [0, 0, 0]]);
        let jp = jordan_chevalley(&m).unwrap();
        assert!(jp.semisimple.is_zero());
        assert_eq!(jp.nilpotent, m);
    }

    #[test]
    fn irrational_spectrum_is_already_semisimple() {
        let c = companion(&"t^2+1".parse().unwrap()).unwrap();
        let jp = jordan_chevalley(&c).unwrap();
        assert_eq!(jp.semisimple, c);
        assert!(jp.nilpotent.is_zero());
        assert!("t^2+1"
            .parse::<Polynomial>()
            .unwrap()
            .eval_at_matrix(&c)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn repeated_irreducible_factor() {
        // companion of (t^2+1)^2 is not semisimple; S has minpoly t^2 + 1.
        let p: Polynomial = "(t^2+1)^2".parse().unwrap();
        let c = companion(&p).unwrap();
        let jp = jordan_chevalley(&c).unwrap();
        assert_eq!(&jp.semisimple + &jp.nilpotent, c);
        assert_eq!(jp.semisimple.commutator(&jp.nilpotent), Matrix::zeros(4, 4));
        assert!(jp.nilpotent.is_nilpotent().unwrap());
        assert!(!jp.nilpotent.is_zero());
        assert_eq!(
            jp.semisimple.minimal_polynomial().unwrap(),
            "t^2+1".parse().unwrap()
        );
        assert!(semisimple_part_is_squarefree(&jp).unwrap());
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            jordan_chevalley(&Matrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn nil_rep_has_zero_semisimple_part() {
        let rep = pi0(2).unwrap();
        let (s, n) = rep_jordan_parts(&rep).unwrap();
        assert!(s.images().iter().all(Matrix::is_zero));
        assert_eq!(n, rep);
    }

    #[test]
    fn scalar_shift_is_recovered() {
        let q = QuotientAlgebra::new(&"t".parse().unwrap()).unwrap();
        let rep = minimal_faithful(1, &q).unwrap();
        // lambda = 2 X* - 3 Y*, zero on Z
        let lambda = vec![rat(2), rat(-3), rat(0)];
        let shifted = shift_by_character(&rep, &lambda).unwrap();
        assert!(shifted.check_homomorphism());
        let (s, n) = rep_jordan_parts(&shifted).unwrap();
        assert_eq!(n, rep);
        for (img, c) in s.images().iter().zip(&lambda) {
            assert_eq!(img, &Matrix::identity(3).scale(c));
        }
        for (a, b) in s.images().iter().zip(n.images()) {
            assert!(a.commutator(b).is_zero());
        }
        assert!(s.check_homomorphism());
        assert!(n.check_homomorphism());
    }

    #[test]
    fn shift_must_vanish_on_derived() {
        let rep = pi0(1).unwrap();
        assert!(shift_by_character(&rep, &[rat(0), rat(0), rat(1)]).is_err());
    }

    #[test]
    fn nilrep_equivalence_examples() {
        assert!(verify_nilrep_theorem(&pi0(1).unwrap()).unwrap());

        let q = QuotientAlgebra::new(&"t^2".parse().unwrap()).unwrap();
        let rep = minimal_faithful(1, &q).unwrap();
        let chars = characters(rep.algebra());
        let lambda: Vec<Rational> =
            chars
                .iter()
                .enumerate()
                .fold(vec![rat(0); rep.algebra().dim()], |mut acc, (k, c)| {
                    for (a, x) in acc.iter_mut().zip(c) {
                        *a += x * rat(k as i64 + 1);
                    }
                    acc
                });
        let shifted = shift_by_character(&rep, &lambda).unwrap();
        assert!(shifted.is_faithful().unwrap());
        assert!(verify_nilrep_theorem(&shifted).unwrap());

        let weak = pi_ab(1, &q, &make_ab(2, 1, 1).unwrap()).unwrap();
        assert!(!weak.is_faithful().unwrap());
        assert!(verify_nilrep_theorem(&weak).unwrap());
    }

    #[test]
    fn hypothesis_checked() {
        // abelian: center = everything, derived = 0
        let g = LieAlgebra::abelian(1);
        let rep = Representation::new(g, 1, vec![Matrix::identity(1)]).unwrap();
        assert!(matches!(
            verify_nilrep_theorem(&rep),
            Err(Error::Hypothesis(_))
        ));
    }
}
