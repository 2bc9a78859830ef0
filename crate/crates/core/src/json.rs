//! JSON interchange formats.
//!
//! * rational: JSON integer, or a string `"num/den"` in lowest terms
//!   (integers too large for `i64` are written as decimal strings);
//! * matrix: `{"rows": r, "cols": c, "entries": [...]}` row-major;
//! * polynomial: `{"coeffs": [c0, c1, ...]}`, lowest degree first;
//! * Lie algebra: `{"dim": n, "labels": [...], "structure": [[[c]...]...]}`;
//! * representation: `{"algebra": ..., "degree": N, "images": [...]}`;
//! * operator family: `{"space_dim": n, "basis": [...], "distinguished": [indices]}`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational};
use crate::poly::Polynomial;
use crate::rep::Representation;
use crate::schur::{NilFamily, SchurDecomposition};

/// Serde wrapper for a rational scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = &self.0;
        if r.denom().is_one() {
            if let Some(n) = r.numer().to_i64() {
                return s.serialize_i64(n);
            }
            return s.serialize_str(&r.numer().to_string());
        }
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        parse_rational_value(&v)
            .map(JsonRational)
            .map_err(D::Error::custom)
    }
}

fn parse_rational_value(v: &serde_json::Value) -> std::result::Result<Rational, String> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(format!(
                    "non-integer number {n}; write fractions as \"num/den\""
                ))
            }
        }
        serde_json::Value::String(s) => parse_rational_str(s),
        other => Err(format!(
            "expected an integer or \"num/den\" string, got {other}"
        )),
    }
}

pub fn parse_rational_str(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("bad denominator in {s:?}"))?;
    if den == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

fn wrap(v: &[Rational]) -> Vec<JsonRational> {
    v.iter().cloned().map(JsonRational).collect()
}

fn unwrap(v: Vec<JsonRational>) -> Vec<Rational> {
    v.into_iter().map(|x| x.0).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<JsonRational>,
}

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: wrap(m.entries()),
        }
    }
}

impl TryFrom<MatrixJson> for Matrix {
    type Error = Error;
    fn try_from(j: MatrixJson) -> Result<Matrix> {
        Matrix::from_entries(j.rows, j.cols, unwrap(j.entries))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub coeffs: Vec<JsonRational>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        PolynomialJson {
            coeffs: wrap(p.coeffs()),
        }
    }
}

impl From<PolynomialJson> for Polynomial {
    fn from(j: PolynomialJson) -> Self {
        Polynomial::new(unwrap(j.coeffs))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub structure: Vec<Vec<Vec<JsonRational>>>,
}

impl From<&LieAlgebra> for LieAlgebraJson {
    fn from(g: &LieAlgebra) -> Self {
        LieAlgebraJson {
            dim: g.dim(),
            labels: g.labels().to_vec(),
            structure: g
                .structure_table()
                .iter()
                .map(|row| row.iter().map(|v| wrap(v)).collect())
                .collect(),
        }
    }
}

impl TryFrom<LieAlgebraJson> for LieAlgebra {
    type Error = Error;
    fn try_from(j: LieAlgebraJson) -> Result<LieAlgebra> {
        if j.dim == 0 {
            return Err(Error::Json("Lie algebra has dimension 0".into()));
        }
        if j.labels.len() != j.dim {
            return Err(Error::Json(format!(
                "{} labels for dimension {}",
                j.labels.len(),
                j.dim
            )));
        }
        let structure = j
            .structure
            .into_iter()
            .map(|row| row.into_iter().map(unwrap).collect())
            .collect();
        LieAlgebra::new(j.labels, structure)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationJson {
    pub algebra: LieAlgebraJson,
    pub degree: usize,
    pub images: Vec<MatrixJson>,
}

impl From<&Representation> for RepresentationJson {
    fn from(r: &Representation) -> Self {
        RepresentationJson {
            algebra: r.algebra().into(),
            degree: r.degree(),
            images: r.images().iter().map(MatrixJson::from).collect(),
        }
    }
}

impl TryFrom<RepresentationJson> for Representation {
    type Error = Error;
    fn try_from(j: RepresentationJson) -> Result<Representation> {
        let algebra = LieAlgebra::try_from(j.algebra)?;
        let images = j
            .images
            .into_iter()
            .map(Matrix::try_from)
            .collect::<Result<Vec<_>>>()?;
        Representation::new(algebra, j.degree, images)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub space_dim: usize,
    pub basis: Vec<MatrixJson>,
    #[serde(default)]
    pub distinguished: Vec<usize>,
}

impl FamilyJson {
    /// The validated family and the distinguished operators it names.
    pub fn into_family(self) -> Result<(NilFamily, Vec<Matrix>)> {
        let basis = self
            .basis
            .into_iter()
            .map(Matrix::try_from)
            .collect::<Result<Vec<_>>>()?;
        let distinguished = self
            .distinguished
            .iter()
            .map(|&i| {
                basis
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::Json(format!("distinguished index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((NilFamily::new(self.space_dim, basis)?, distinguished))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchurJson {
    pub vectors: Vec<Vec<JsonRational>>,
    pub blocks: Vec<Vec<Vec<JsonRational>>>,
}

impl From<&SchurDecomposition> for SchurJson {
    fn from(d: &SchurDecomposition) -> Self {
        SchurJson {
            vectors: d.vectors.iter().map(|v| wrap(v)).collect(),
            blocks: d
                .blocks
                .iter()
                .map(|b| b.iter().map(|c| wrap(c)).collect())
                .collect(),
        }
    }
}

impl From<SchurJson> for SchurDecomposition {
    fn from(j: SchurJson) -> Self {
        SchurDecomposition {
            vectors: j.vectors.into_iter().map(unwrap).collect(),
            blocks: j
                .blocks
                .into_iter()
                .map(|b| b.into_iter().map(unwrap).collect())
                .collect(),
        }
    }
}

fn from_str<T: serde::de::DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
}

pub fn matrix_from_json(s: &str) -> Result<Matrix> {
    Matrix::try_from(from_str::<MatrixJson>(s)?)
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string(&MatrixJson::from(m)).expect("serializable")
}

pub fn polynomial_from_json(s: &str) -> Result<Polynomial> {
    Ok(from_str::<PolynomialJson>(s)?.into())
}

pub fn lie_algebra_from_json(s: &str) -> Result<LieAlgebra> {
    LieAlgebra::try_from(from_str::<LieAlgebraJson>(s)?)
}

pub fn representation_from_json(s: &str) -> Result<Representation> {
    Representation::try_from(from_str::<RepresentationJson>(s)?)
}

pub fn representation_to_json(r: &Representation) -> String {
    serde_json::to_string(&RepresentationJson::from(r)).expect("serializable")
}

pub fn family_from_json(s: &str) -> Result<(NilFamily, Vec<Matrix>)> {
    from_str::<FamilyJson>(s)?.into_family()
}
