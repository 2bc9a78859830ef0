//! Exact rational linear algebra, truncated polynomial algebras and
//! faithful matrix representations of current Heisenberg Lie algebras
//! `h_m ⊗ k[t]/(p)`.

pub mod error;
pub mod jordan;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod rep;
pub mod schur;
pub mod suite;

pub use error::{Error, Result};
pub use lie::{
    current_algebra, direct_sum, heisenberg, LieAlgebra, Subspace, TruncatedHeisenbergSum,
};
pub use linalg::{frac, kron, rat, BlockLayout, Matrix, Rational};
pub use poly::{companion, crt_split, CrtSplit, Polynomial, QuotientAlgebra};
pub use rep::{
    beta_injective, ceil_two_sqrt, find_partner, make_ab, min_sum, minimal_faithful, mu_formula,
    pi0, pi_ab, tensor_rep, AbPair, Partner, PartnerKind, Representation,
};
