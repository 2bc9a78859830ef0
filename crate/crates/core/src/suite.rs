//! The batch acceptance grid: nine exact checks over a fixed set of
//! `(m, p)` cells plus seeded random inputs.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::jordan::{characters, jordan_chevalley, shift_by_character, verify_nilrep_theorem};
use crate::lie::TruncatedHeisenbergSum;
use crate::linalg::{is_zero_vector, Matrix, Rational};
use crate::poly::{Polynomial, QuotientAlgebra};
use crate::rep::{
    beta_injective, ceil_two_sqrt, find_partner, make_ab, min_sum, minimal_faithful, mu_formula,
    pi0, pi_ab, tensor_rep, AbPair, Representation,
};
use crate::schur::{
    center_family, lower_bound_chain, schur_bound_check, schur_decompose, verify_schur, NilFamily,
};

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Moduli of the full grid, as parseable strings.
pub const GRID_POLYNOMIALS: [&str; 11] = [
    "t",
    "t^2",
    "t^3",
    "t^4",
    "t^5",
    "t^6",
    "t^2+1",
    "t^3-2",
    "t^4+t+1",
    "(t-1)*(t+2)",
    "t*(t-1)^2",
];

const MAX_FAILURES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Restrict to `deg p <= 4`, `m <= 2` and shrink the random sample counts.
    pub quick: bool,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            quick: false,
            seed: DEFAULT_SEED,
        }
    }
}

impl SuiteConfig {
    fn rng(&self, criterion: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ criterion.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn max_d(&self) -> usize {
        if self.quick {
            4
        } else {
            12
        }
    }

    fn count(&self, full: usize) -> usize {
        if self.quick {
            (full / 4).max(1)
        } else {
            full
        }
    }
}

#[derive(Debug, Clone)]
pub struct Cell {
    pub m: usize,
    pub label: &'static str,
    pub quotient: QuotientAlgebra,
}

impl Cell {
    pub fn d(&self) -> usize {
        self.quotient.dim()
    }
}

pub fn grid(quick: bool) -> Vec<Cell> {
    let max_m = if quick { 2 } else { 3 };
    let mut out = Vec::new();
    for m in 1..=max_m {
        for label in GRID_POLYNOMIALS {
            let p: Polynomial = label.parse().expect("grid polynomial parses");
            let quotient = QuotientAlgebra::new(&p).expect("grid polynomial is nonconstant");
            if quick && quotient.dim() > 4 {
                continue;
            }
            out.push(Cell { m, label, quotient });
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl CriterionReport {
    pub fn summary_line(&self) -> String {
        format!(
            "[{}] criterion {}: {} ({} cases, {} failed, {} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.cases,
            self.failed,
            self.elapsed_ms
        )
    }
}

struct Tally {
    cases: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{}: error {e}", what()));
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(msg);
        }
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "upper bound construction over the grid"),
    (2, "min a+b over ab >= d equals ceil(2 sqrt d)"),
    (3, "beta injectivity frontier"),
    (4, "faithful representation of h_{1,t^2+1} in dimension 5"),
    (
        5,
        "tensor representation bound and pi_AB with identity blocks",
    ),
    (6, "Jordan-Chevalley decomposition of random matrices"),
    (7, "nil-reduction equivalence on perturbed representations"),
    (8, "Schur decompositions of commuting nilpotent families"),
    (9, "partner elements and subalgebra dimension bound"),
];

pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::new();
    match id {
        1 => upper_bound(cfg, &mut tally),
        2 => min_sum_identity(cfg, &mut tally),
        3 => beta_frontier(cfg, &mut tally),
        4 => r5_example_checks(&mut tally),
        5 => tensor_bound(cfg, &mut tally),
        6 => jordan_suite(cfg, &mut tally),
        7 => nilrep_suite(cfg, &mut tally),
        8 => schur_suite(cfg, &mut tally),
        9 => lower_bound_spot_checks(cfg, &mut tally),
        _ => tally.fail(format!("no criterion {id}")),
    }
    let name = CRITERIA
        .iter()
        .find(|(k, _)| *k == id)
        .map_or("unknown", |(_, n)| n);
    CriterionReport {
        id,
        name,
        passed: tally.failed == 0 && tally.cases > 0,
        cases: tally.cases,
        failed: tally.failed,
        failures: tally.failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Runs every criterion, one thread each.
pub fn run_all(cfg: &SuiteConfig) -> Vec<CriterionReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = CRITERIA
            .iter()
            .map(|&(id, _)| s.spawn(move || run_criterion(id, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion thread panicked"))
            .collect()
    })
}

fn upper_bound(cfg: &SuiteConfig, tally: &mut Tally) {
    for cell in grid(cfg.quick) {
        let (m, d) = (cell.m, cell.d());
        let what = || format!("m={m}, p={}", cell.label);
        let rep = match minimal_faithful(m, &cell.quotient) {
            Ok(r) => r,
            Err(e) => {
                tally.check(false, || format!("{}: {e}", what()));
                continue;
            }
        };
        let expected = mu_formula(m as u64, d as u64).expect("m, d >= 1") as usize;
        tally.check(rep.degree() == expected, || {
            format!("{}: degree {} != {expected}", what(), rep.degree())
        });
        tally.check(rep.check_homomorphism(), || {
            format!("{}: not a homomorphism", what())
        });
        tally.check_result(rep.is_faithful(), || format!("{}: not faithful", what()));
    }
}

fn min_sum_identity(cfg: &SuiteConfig, tally: &mut Tally) {
    let limit: u64 = if cfg.quick { 200 } else { 2000 };
    for d in 1..=limit {
        let brute = (1..=d)
            .flat_map(|a| (a..=d).map(move |b| (a, b)))
            .filter(|(a, b)| a * b >= d)
            .map(|(a, b)| a + b)
            .min()
            .expect("a = b = d qualifies");
        let formula = ceil_two_sqrt(d);
        tally.check(brute == formula, || {
            format!("d={d}: brute {brute}, formula {formula}")
        });
        if let Ok((a, b)) = min_sum(d) {
            tally.check(a * b >= d && a + b == brute && a <= b, || {
                format!("d={d}: min_sum gave ({a}, {b})")
            });
        } else {
            tally.check(false, || format!("d={d}: min_sum failed"));
        }
    }
}

fn frontier_moduli(d: usize) -> Vec<Polynomial> {
    let td = Polynomial::monomial(Rational::one(), d);
    vec![td.clone(), &td - &Polynomial::from_ints(&[2])]
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-4..=4);
    let den: i64 = rng.gen_range(1..=3);
    Rational::new(num.into(), den.into())
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| random_rational(rng))
}

fn beta_frontier(cfg: &SuiteConfig, tally: &mut Tally) {
    let mut rng = cfg.rng(3);
    let samples = cfg.count(200);
    for d in 1..=cfg.max_d() {
        let moduli: Vec<QuotientAlgebra> = frontier_moduli(d)
            .iter()
            .map(|p| QuotientAlgebra::new(p).expect("degree d >= 1"))
            .collect();
        for a in 1..=d {
            for b in 1..=d {
                for (q, p) in moduli.iter().zip(["t^d", "t^d-2"]) {
                    let pair = make_ab(d, a, b).expect("a, b, d >= 1");
                    tally.check_result(
                        beta_injective(&pair, q).map(|inj| inj == (a * b >= d)),
                        || format!("canonical pair d={d}, a={a}, b={b}, p={p}"),
                    );
                }
                if a * b >= d {
                    continue;
                }
                for k in 0..samples {
                    let q = &moduli[k % moduli.len()];
                    let pair =
                        AbPair::new(random_matrix(&mut rng, a, d), random_matrix(&mut rng, d, b))
                            .expect("shapes agree");
                    tally.check_result(beta_injective(&pair, q).map(|inj| !inj), || {
                        format!("random pair {k} injective with d={d}, a={a}, b={b}")
                    });
                }
            }
        }
    }
}

/// The explicit 5x5 family on the basis
/// `X, Xt, Y, Yt, Z, Zt` of `h_1 ⊗ R[t]/(t^2+1)`.
pub fn r5_example() -> Result<Representation> {
    let q = QuotientAlgebra::new(&"t^2+1".parse()?)?;
    let g = crate::lie::current_algebra(&crate::lie::heisenberg(1)?, &q);
    let e = |i: usize, j: usize| Matrix::unit(5, 5, i - 1, j - 1);
    let images = vec![
        e(1, 2),
        e(1, 3),
        &e(2, 4) + &e(3, 5),
        &e(2, 5) - &e(3, 4),
        e(1, 4),
        e(1, 5),
    ];
    Representation::new(g, 5, images)
}

fn r5_example_checks(tally: &mut Tally) {
    match r5_example() {
        Ok(rep) => {
            tally.check(rep.check_homomorphism(), || {
                "5x5 family is not a homomorphism".into()
            });
            tally.check_result(rep.is_faithful(), || "5x5 family is not faithful".into());
        }
        Err(e) => tally.check(false, || format!("5x5 family rejected: {e}")),
    }
    let q = QuotientAlgebra::new(&"t^2+1".parse().expect("parses")).expect("nonconstant");
    match minimal_faithful(1, &q) {
        Ok(rep) => {
            tally.check(rep.degree() == 5, || {
                format!("minimal degree {}", rep.degree())
            });
            tally.check_result(rep.is_faithful(), || {
                "minimal construction not faithful".into()
            });
        }
        Err(e) => tally.check(false, || format!("minimal construction failed: {e}")),
    }
}

fn tensor_bound(cfg: &SuiteConfig, tally: &mut Tally) {
    for cell in grid(cfg.quick) {
        let (m, d) = (cell.m, cell.d());
        let what = || format!("m={m}, p={}", cell.label);
        let base = pi0(m).expect("m >= 1");
        let rep = tensor_rep(&base, &cell.quotient);
        tally.check(rep.degree() == (m + 2) * d, || {
            format!("{}: degree {}", what(), rep.degree())
        });
        tally.check(rep.check_homomorphism(), || {
            format!("{}: not a homomorphism", what())
        });
        tally.check_result(rep.is_faithful(), || format!("{}: not faithful", what()));
        let pair = AbPair::new(Matrix::identity(d), Matrix::identity(d)).expect("square");
        match pi_ab(m, &cell.quotient, &pair) {
            Ok(ab) => tally.check(ab.images() == rep.images(), || {
                format!(
                    "{}: pi_AB with identity blocks differs from the tensor rep",
                    what()
                )
            }),
            Err(e) => tally.check(false, || format!("{}: {e}", what())),
        }
    }
}

fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| {
        Rational::from_integer(rng.gen_range(-3i64..=3).into())
    })
}

/// Upper triangular with a few repeated diagonal values, entries in `[-3, 3]`;
/// these have nonzero nilpotent parts far more often than uniform samples.
fn random_defective_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let values: Vec<i64> = (0..rng.gen_range(1..=2))
        .map(|_| rng.gen_range(-3..=3))
        .collect();
    let diag: Vec<i64> = (0..n)
        .map(|_| *values.choose(rng).expect("nonempty"))
        .collect();
    Matrix::from_fn(n, n, |i, j| {
        let v = match i.cmp(&j) {
            std::cmp::Ordering::Equal => diag[i],
            std::cmp::Ordering::Less => rng.gen_range(-3..=3),
            std::cmp::Ordering::Greater => 0,
        };
        Rational::from_integer(v.into())
    })
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> (Matrix, Matrix) {
    loop {
        let q = Matrix::from_fn(n, n, |_, _| {
            Rational::from_integer(rng.gen_range(-2i64..=2).into())
        });
        if let Ok(inv) = q.inverse() {
            return (q, inv);
        }
    }
}

fn jordan_checks(m: &Matrix, tally: &mut Tally, tag: &str) -> Option<(Matrix, Matrix)> {
    let pair = match jordan_chevalley(m) {
        Ok(p) => p,
        Err(e) => {
            tally.check(false, || format!("{tag}: {e}"));
            return None;
        }
    };
    let (s, n) = (pair.semisimple.clone(), pair.nilpotent.clone());
    tally.check(&s + &n == *m, || format!("{tag}: S + N != M"));
    tally.check(s.commutator(&n).is_zero(), || format!("{tag}: SN != NS"));
    tally.check_result(n.is_nilpotent(), || format!("{tag}: N not nilpotent"));
    tally.check_result(s.minimal_polynomial().map(|p| p.is_squarefree()), || {
        format!("{tag}: minpoly(S) not squarefree")
    });
    Some((s, n))
}

fn jordan_suite(cfg: &SuiteConfig, tally: &mut Tally) {
    let mut rng = cfg.rng(6);
    let total = cfg.count(200);
    let equivariance = cfg.count(50);
    for k in 0..total {
        let n = rng.gen_range(1..=6);
        let m = if k % 2 == 0 {
            random_int_matrix(&mut rng, n)
        } else {
            random_defective_matrix(&mut rng, n)
        };
        let tag = format!("matrix {k} ({n}x{n})");
        let Some((s, nil)) = jordan_checks(&m, tally, &tag) else {
            continue;
        };
        if k < equivariance {
            let (q, qi) = random_invertible(&mut rng, n);
            let conj = &(&q * &m) * &qi;
            if let Ok(pair) = jordan_chevalley(&conj) {
                let ok =
                    pair.semisimple == &(&q * &s) * &qi && pair.nilpotent == &(&q * &nil) * &qi;
                tally.check(ok, || format!("{tag}: not conjugation equivariant"));
            } else {
                tally.check(false, || format!("{tag}: conjugate failed"));
            }
        }
    }
}

fn random_character(rng: &mut ChaCha8Rng, chars: &[Vec<Rational>], dim: usize) -> Vec<Rational> {
    loop {
        let mut lambda = vec![Rational::zero(); dim];
        for c in chars {
            let k = Rational::from_integer(rng.gen_range(-3i64..=3).into());
            for (l, x) in lambda.iter_mut().zip(c) {
                *l += &k * x;
            }
        }
        if !is_zero_vector(&lambda) {
            return lambda;
        }
    }
}

fn nilrep_suite(cfg: &SuiteConfig, tally: &mut Tally) {
    let mut rng = cfg.rng(7);
    let cells = grid(cfg.quick);
    let total = 20;
    for k in 0..total {
        let cell = &cells[(k * 7) % cells.len()];
        let (m, d) = (cell.m, cell.d());
        // alternate faithful and non-faithful bases so both sides of the equivalence occur
        let base = if k % 2 == 0 || d < 2 {
            minimal_faithful(m, &cell.quotient)
        } else {
            make_ab(d, 1, 1).and_then(|pair| pi_ab(m, &cell.quotient, &pair))
        };
        let tag = format!("case {k}: m={m}, p={}", cell.label);
        let base = match base {
            Ok(r) => r,
            Err(e) => {
                tally.check(false, || format!("{tag}: {e}"));
                continue;
            }
        };
        let chars = characters(base.algebra());
        let lambda = random_character(&mut rng, &chars, base.algebra().dim());
        match shift_by_character(&base, &lambda) {
            Ok(shifted) => {
                tally.check(shifted.check_homomorphism(), || {
                    format!("{tag}: shift broke homomorphism")
                });
                tally.check_result(verify_nilrep_theorem(&shifted), || {
                    format!("{tag}: faithfulness of pi and pi_N disagree")
                });
            }
            Err(e) => tally.check(false, || format!("{tag}: {e}")),
        }
    }
}

fn schur_checks(
    family: &NilFamily,
    distinguished: &[Matrix],
    tally: &mut Tally,
    tag: &str,
) -> Option<crate::schur::SchurDecomposition> {
    let dec = match schur_decompose(family, distinguished) {
        Ok(d) => d,
        Err(e) => {
            tally.check(false, || format!("{tag}: {e}"));
            return None;
        }
    };
    tally.check(verify_schur(family, &dec), || {
        format!("{tag}: decomposition fails verification")
    });
    tally.check(dec.blocks_non_increasing(), || {
        format!("{tag}: block dims {:?} increase", dec.block_dims())
    });
    tally.check(
        distinguished
            .iter()
            .all(|t| !is_zero_vector(&t.mul_vec(&dec.vectors[0]))),
        || format!("{tag}: a distinguished operator kills v_1"),
    );
    tally.check(schur_bound_check(family), || {
        format!("{tag}: dim V < ceil(2 sqrt dim N)")
    });
    Some(dec)
}

/// Commuting nilpotent families on `k^n`, `n <= 8`, conjugated by a random
/// invertible matrix: polynomials in one nilpotent matrix, or square-zero
/// families `[[0, X], [0, 0]]`.
pub fn random_nil_family(rng: &mut ChaCha8Rng) -> NilFamily {
    let n = rng.gen_range(2..=8);
    let basis: Vec<Matrix> = if rng.gen_bool(0.5) {
        // nilpotent Jordan form with random block sizes
        let mut j = Matrix::zeros(n, n);
        let mut start = 0;
        while start < n {
            let size = rng.gen_range(1..=n - start);
            for i in start..start + size - 1 {
                j[(i, i + 1)] = Rational::one();
            }
            start += size;
        }
        let mut powers = Vec::new();
        let mut p = j.clone();
        while !p.is_zero() {
            powers.push(p.clone());
            p = &p * &j;
        }
        if powers.is_empty() {
            powers.push(Matrix::unit(n, n, 0, n - 1));
        }
        powers
    } else {
        let u = rng.gen_range(1..n);
        let w = n - u;
        let count = rng.gen_range(1..=u * w);
        let mut chosen: Vec<Matrix> = Vec::new();
        for _ in 0..count {
            let x = Matrix::from_fn(u, w, |_, _| {
                if rng.gen_bool(0.4) {
                    Rational::from_integer(rng.gen_range(-2i64..=2).into())
                } else {
                    Rational::zero()
                }
            });
            let mut t = Matrix::zeros(n, n);
            t.set_block(0, u, &x);
            let mut flat: Vec<Vec<Rational>> =
                chosen.iter().map(|c| c.entries().to_vec()).collect();
            flat.push(t.entries().to_vec());
            if crate::linalg::vectors_rank(&flat) == flat.len() {
                chosen.push(t);
            }
        }
        if chosen.is_empty() {
            chosen.push(Matrix::unit(n, n, 0, n - 1));
        }
        chosen
    };
    let (q, qi) = random_invertible(rng, n);
    let basis = basis.iter().map(|t| &(&q * t) * &qi).collect();
    NilFamily::new(n, basis).expect("conjugated commuting nilpotent family")
}

fn is_power_of_t(p: &Polynomial) -> bool {
    p.coeffs().iter().rev().skip(1).all(Zero::is_zero)
}

fn schur_suite(cfg: &SuiteConfig, tally: &mut Tally) {
    for cell in grid(cfg.quick) {
        let (m, d) = (cell.m, cell.d());
        let tag = format!("center family m={m}, p={}", cell.label);
        let rep = match minimal_faithful(m, &cell.quotient) {
            Ok(r) => r,
            Err(e) => {
                tally.check(false, || format!("{tag}: {e}"));
                continue;
            }
        };
        let family = match center_family(&rep) {
            Ok(f) => f,
            Err(e) => {
                tally.check(false, || format!("{tag}: {e}"));
                continue;
            }
        };
        tally.check(family.dim() == d, || {
            format!("{tag}: center family has dim {}", family.dim())
        });
        let top = rep.images().last().cloned().expect("nonempty basis");
        let Some(dec) = schur_checks(&family, std::slice::from_ref(&top), tally, &tag) else {
            continue;
        };
        if is_power_of_t(cell.quotient.modulus()) {
            let chain = lower_bound_chain(&rep, m, &family, &dec);
            tally.check(chain.holds(), || {
                format!("{tag}: lower-bound chain {chain:?}")
            });
        }
    }
    let mut rng = cfg.rng(8);
    for k in 0..cfg.count(50) {
        let family = random_nil_family(&mut rng);
        let tag = format!(
            "random family {k} (dim V = {}, dim N = {})",
            family.space_dim(),
            family.dim()
        );
        schur_checks(&family, &[], tally, &tag);
    }
}

/// Sizes of the Jordan blocks of `t` on `k[t]/(p)` over an algebraic
/// closure: one entry per distinct root, equal to its multiplicity.
pub fn root_multiplicities(p: &Polynomial) -> Result<Vec<usize>> {
    let p = p.monic();
    let mut g = Polynomial::gcd(&p, &p.derivative())?;
    let mut c = p.div_rem(&g)?.0;
    let mut out = Vec::new();
    let mut k = 1;
    while c.degree().unwrap_or(0) > 0 {
        let y = Polynomial::gcd(&c, &g)?;
        let a = c.div_rem(&y)?.0;
        out.extend(std::iter::repeat_n(k, a.degree().unwrap_or(0)));
        c = y;
        g = g.div_rem(&c)?.0;
        k += 1;
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// The truncated sums `⊕_l h_{m,t^{d_l}}` matching each grid cell.
pub fn grid_sums(quick: bool) -> Vec<(String, TruncatedHeisenbergSum)> {
    let mut seen: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut out = Vec::new();
    for cell in grid(quick) {
        let degrees = root_multiplicities(cell.quotient.modulus()).expect("nonzero modulus");
        if seen.contains(&(cell.m, degrees.clone())) {
            continue;
        }
        seen.push((cell.m, degrees.clone()));
        let sum = TruncatedHeisenbergSum::new(cell.m, &degrees).expect("valid degrees");
        out.push((format!("m={}, degrees={degrees:?}", cell.m), sum));
    }
    out
}

fn sparse_vector(rng: &mut ChaCha8Rng, dim: usize, density: f64, range: i64) -> Vec<Rational> {
    (0..dim)
        .map(|_| {
            if rng.gen_bool(density) {
                Rational::from_integer(rng.gen_range(-range..=range).into())
            } else {
                Rational::zero()
            }
        })
        .collect()
}

fn x_and_low_center_indices(sum: &TruncatedHeisenbergSum) -> Vec<usize> {
    let mut out = Vec::new();
    for (l, &d) in sum.degrees().iter().enumerate() {
        for i in 0..sum.m() {
            out.extend((0..d).map(|j| sum.x_index(i, l, j)));
        }
        out.extend((0..d - 1).map(|j| sum.z_index(l, j)));
    }
    out
}

fn lower_bound_spot_checks(cfg: &SuiteConfig, tally: &mut Tally) {
    let mut rng = cfg.rng(9);
    let per_algebra = cfg.count(100);
    for (label, sum) in grid_sums(cfg.quick) {
        let g = sum.algebra();
        let n = g.dim();
        let center = sum.center();
        let mut found = 0;
        while found < per_algebra {
            let x = sparse_vector(&mut rng, n, 0.3, 3);
            if center.contains(&x) {
                continue;
            }
            found += 1;
            match find_partner(&sum, &x) {
                Ok(partner) => {
                    let l = partner.summand;
                    let mut target = vec![Rational::zero(); n];
                    target[sum.top_central_index(l)] = Rational::one();
                    tally.check(g.bracket(&x, &partner.element) == target, || {
                        format!("{label}: [X, Y] is not Z_l^(d_l - 1) for X = {x:?}")
                    });
                }
                Err(e) => tally.check(false, || format!("{label}: {e}")),
            }
        }

        let tops: Vec<Vec<Rational>> = (0..sum.degrees().len())
            .map(|l| g.basis_vector(sum.top_central_index(l)))
            .collect();
        let bound = sum.m() * sum.total_degree();
        let x_or_low_center = x_and_low_center_indices(&sum);
        let mut accepted = 0;
        let mut tight = 0;
        let mut attempts = 0;
        let max_attempts = per_algebra * 200;
        while accepted < per_algebra && attempts < max_attempts {
            attempts += 1;
            let gens: Vec<Vec<Rational>> = if attempts % 2 == 0 {
                (0..rng.gen_range(1..=4))
                    .map(|_| sparse_vector(&mut rng, n, 0.15, 2))
                    .collect()
            } else {
                // abelian X-span plus lower central terms: dim g can reach m d + dim(g ∩ z)
                let count = rng.gen_range(1..=bound + 2);
                (0..count)
                    .map(|_| {
                        let mut v = sparse_vector(&mut rng, n, 0.5, 2);
                        for (k, c) in v.iter_mut().enumerate() {
                            if !x_or_low_center.contains(&k) {
                                *c = Rational::zero();
                            }
                        }
                        v
                    })
                    .collect()
            };
            let sub = g.subalgebra_closure(&gens);
            if tops.iter().any(|z| sub.contains(z)) {
                continue;
            }
            accepted += 1;
            let inter = sub.intersection(&center).dim();
            if sub.dim() == bound + inter {
                tight += 1;
            }
            tally.check(sub.dim() <= bound + inter, || {
                format!("{label}: dim g = {} > {bound} + {inter}", sub.dim())
            });
        }
        tally.check(accepted == per_algebra, || {
            format!("{label}: only {accepted} admissible subalgebras in {attempts} draws")
        });
        tally.check(tight > 0, || {
            format!("{label}: no sampled subalgebra attains the bound")
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(grid(false).len(), 33);
        assert!(grid(true).iter().all(|c| c.d() <= 4 && c.m <= 2));
    }

    #[test]
    fn multiplicities() {
        let mult = |s: &str| root_multiplicities(&s.parse().unwrap()).unwrap();
        assert_eq!(mult("t^4"), vec![4]);
        assert_eq!(mult("t^4+t+1"), vec![1, 1, 1, 1]);
        assert_eq!(mult("t*(t-1)^2"), vec![2, 1]);
        assert_eq!(mult("(t^2+1)^2*(t-3)"), vec![2, 2, 1]);
    }

    #[test]
    fn random_families_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let f = random_nil_family(&mut rng);
            assert!(f.space_dim() <= 8 && f.dim() >= 1);
        }
    }
}
