//! Univariate polynomials over the rationals and the quotient algebras
//! `k[t]/(p)` they define.
//!
//! A [`QuotientAlgebra`] is described in the monomial basis `1, t, ..., t^{d-1}`;
//! multiplication by `t` in that basis is the companion matrix of `p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, Matrix, Rational};

/// Polynomial with rational coefficients, lowest degree first.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `(t - root)^k`.
    pub fn linear_power(root: &Rational, k: usize) -> Self {
        let lin = Self::new(vec![-root.clone(), Rational::one()]);
        (0..k).fold(Self::one(), |acc, _| &acc * &lin)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Divides through by the leading coefficient. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => {
                let inv = lc.recip();
                Polynomial {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = &rem[k] * &lc_inv;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    if !dc.is_zero() {
                        rem[k - dd + i] -= &c * dc;
                    }
                }
                quot[k - dd] = c;
            }
            rem.pop();
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    pub fn rem(&self, modulus: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(modulus)?.1)
    }

    /// Monic gcd; `gcd(a, 0) = monic(a)`.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.monic())
    }

    /// Extended Euclid: returns `(g, s, u)` with `s*a + u*b = g`, `g` monic.
    pub fn ext_gcd(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Polynomial::one(), Polynomial::zero());
        let (mut u0, mut u1) = (Polynomial::zero(), Polynomial::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let u = &u0 - &(&q * &u1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            u0 = std::mem::replace(&mut u1, u);
        }
        let lc_inv = r0.leading().expect("nonzero gcd").recip();
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), u0.scale(&lc_inv)))
    }

    /// Inverse of `self` modulo `modulus`, reduced below its degree.
    pub fn inverse_mod(&self, modulus: &Polynomial) -> Result<Polynomial> {
        let (g, s, _) = Self::ext_gcd(self, modulus)?;
        if !g.is_one() {
            return Err(Error::InvalidArgument(format!(
                "{self} is not invertible modulo {modulus}"
            )));
        }
        s.rem(modulus)
    }

    pub fn lcm(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        if a.is_zero() || b.is_zero() {
            return Ok(Polynomial::zero());
        }
        let g = Self::gcd(a, b)?;
        Ok((a * b).div_rem(&g)?.0.monic())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `gcd(self, self') = 1`. Constants count as squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return !self.is_zero();
        }
        Self::gcd(self, &self.derivative()).is_ok_and(|g| g.is_one())
    }

    /// `self / gcd(self, self')`, monic: the product of the distinct
    /// irreducible factors.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = Self::gcd(self, &self.derivative())?;
        Ok(self.div_rem(&g)?.0.monic())
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_at_matrix(&self, m: &Matrix) -> Result<Matrix> {
        let n = m.ensure_square()?;
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            if !c.is_zero() {
                for i in 0..n {
                    acc[(i, i)] += c;
                }
            }
        }
        Ok(acc)
    }

    fn ensure_nonconstant(&self) -> Result<usize> {
        match self.degree() {
            None => Err(Error::ZeroPolynomial),
            Some(0) => Err(Error::ConstantPolynomial),
            Some(d) => Ok(d),
        }
    }
}

/// Companion matrix: ones on the subdiagonal, last column `-a_0, ..., -a_{d-1}`.
pub fn companion(p: &Polynomial) -> Result<Matrix> {
    let d = p.ensure_nonconstant()?;
    if !p.is_monic() {
        return Err(Error::NotMonic(p.to_string()));
    }
    let mut m = Matrix::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = Rational::one();
    }
    for i in 0..d {
        m[(i, d - 1)] = -p.coeff(i);
    }
    Ok(m)
}

/// `k[t]/(p)` for a monic `p` of degree at least one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    modulus: Polynomial,
    companion: Matrix,
    normalized: bool,
}

impl QuotientAlgebra {
    /// Accepts any nonconstant `p`; a non-monic one is divided by its
    /// leading coefficient, which leaves the ideal `(p)` unchanged, and the
    /// result is flagged via [`QuotientAlgebra::was_normalized`].
    pub fn new(p: &Polynomial) -> Result<Self> {
        p.ensure_nonconstant()?;
        let normalized = !p.is_monic();
        let modulus = p.monic();
        let companion = companion(&modulus)?;
        Ok(QuotientAlgebra {
            modulus,
            companion,
            normalized,
        })
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn companion(&self) -> &Matrix {
        &self.companion
    }

    pub fn dim(&self) -> usize {
        self.companion.rows()
    }

    pub fn was_normalized(&self) -> bool {
        self.normalized
    }

    /// Coordinates of `q mod p` in the basis `1, t, ..., t^{d-1}`.
    pub fn coords(&self, q: &Polynomial) -> Vec<Rational> {
        let r = q.rem(&self.modulus).expect("modulus is nonzero");
        (0..self.dim()).map(|k| r.coeff(k)).collect()
    }

    /// `P^0, ..., P^{d-1}`: the images of the monomial basis under the
    /// regular representation.
    pub fn regular_representation(&self) -> Vec<Matrix> {
        let d = self.dim();
        let mut out = Vec::with_capacity(d);
        let mut power = Matrix::identity(d);
        for k in 0..d {
            if k > 0 {
                power = &power * &self.companion;
            }
            out.push(power.clone());
        }
        out
    }
}

/// Change of basis realizing `k[t]/(p) = k[t]/(p_1) + ... + k[t]/(p_r)`.
///
/// `forward` sends the coordinates of `q mod p` to the stacked coordinates
/// of `q mod p_l`, so `forward * P * inverse` is block diagonal with the
/// companion matrices of the factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtSplit {
    pub forward: Matrix,
    pub inverse: Matrix,
    pub factor_degrees: Vec<usize>,
}

pub fn crt_split(p: &Polynomial, factors: &[Polynomial]) -> Result<CrtSplit> {
    let d = p.ensure_nonconstant()?;
    if !p.is_monic() {
        return Err(Error::NotMonic(p.to_string()));
    }
    if factors.is_empty() {
        return Err(Error::InvalidArgument("empty factor list".into()));
    }
    for f in factors {
        f.ensure_nonconstant()?;
        if !f.is_monic() {
            return Err(Error::NotMonic(f.to_string()));
        }
    }
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if !Polynomial::gcd(&factors[i], &factors[j])?.is_one() {
                return Err(Error::NotCoprime(i, j));
            }
        }
    }
    let product = factors.iter().fold(Polynomial::one(), |acc, f| &acc * f);
    if &product != p {
        return Err(Error::WrongProduct {
            got: product.to_string(),
            want: p.to_string(),
        });
    }
    let mut forward = Matrix::zeros(d, d);
    for j in 0..d {
        let tj = Polynomial::monomial(Rational::one(), j);
        let mut row = 0;
        for f in factors {
            let r = tj.rem(f)?;
            for k in 0..f.degree().expect("nonconstant") {
                forward[(row + k, j)] = r.coeff(k);
            }
            row += f.degree().expect("nonconstant");
        }
    }
    let inverse = forward.inverse()?;
    Ok(CrtSplit {
        forward,
        inverse,
        factor_degrees: factors.iter().filter_map(Polynomial::degree).collect(),
    })
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Grammar (whitespace-insensitive, `*` required for products):
    ///
    /// ```text
    /// expr   := ['+'|'-'] term (('+'|'-') term)*
    /// term   := factor ('*' factor)*
    /// factor := atom ('^' integer)?
    /// atom   := integer ['/' integer] | 't' | '(' expr ')'
    /// ```
    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos < parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        if matches!(self.peek(), Some(b't' | b'(' | b'0'..=b'9')) {
            return Err(self.error("implicit multiplication is not allowed; use '*'"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            let e: usize = e.try_into().map_err(|_| Error::Parse {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            if e > 4096 {
                return Err(Error::Parse {
                    pos: start,
                    msg: "exponent too large".into(),
                });
            }
            return Ok((0..e).fold(Polynomial::one(), |acc, _| &acc * &base));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(Polynomial::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => {
                let num = self.integer()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    return Ok(Polynomial::constant(Rational::new(num, den)));
                }
                Ok(Polynomial::constant(Rational::from_integer(num)))
            }
            Some(_) => Err(self.error("expected a number, 't' or '('")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<num_bigint::BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn normal_form() {
        assert!(Polynomial::from_ints(&[0, 0]).is_zero());
        assert_eq!(Polynomial::from_ints(&[1, 2, 0, 0]).degree(), Some(1));
        let q = Polynomial::from_ints(&[2, 4]);
        assert_eq!(
            q.monic(),
            Polynomial::new(vec![crate::linalg::frac(1, 2), rat(1)])
        );
        assert_eq!(q.monic().monic(), q.monic());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("t^3 - 2*t + 1"), Polynomial::from_ints(&[1, -2, 0, 1]));
        assert_eq!(p(" t ^ 2+1 "), Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(p("(t-1)*(t+2)"), Polynomial::from_ints(&[-2, 1, 1]));
        assert_eq!(p("t*(t-1)^2"), Polynomial::from_ints(&[0, 1, -2, 1]));
        assert_eq!(
            p("3/2*t - 1/2"),
            Polynomial::new(vec![crate::linalg::frac(-1, 2), crate::linalg::frac(3, 2)])
        );
        assert_eq!(p("-t"), Polynomial::from_ints(&[0, -1]));
        for s in ["t^3 - 2*t + 1", "t^2 + 1", "-3/4*t^5 + t", "7"] {
            assert_eq!(p(&p(s).to_string()), p(s));
        }
    }

    #[test]
    fn parse_errors_report_position() {
        assert_eq!(
            "2t".parse::<Polynomial>(),
            Err(Error::Parse {
                pos: 1,
                msg: "implicit multiplication is not allowed; use '*'".into()
            })
        );
        assert!(matches!(
            "t^".parse::<Polynomial>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "t + x".parse::<Polynomial>(),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            "(t+1".parse::<Polynomial>(),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(
            "1/0".parse::<Polynomial>(),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn companion_examples() {
        assert_eq!(companion(&p("t")).unwrap(), Matrix::zeros(1, 1));
        assert_eq!(
            companion(&p("t^2+1")).unwrap(),
            Matrix::from_ints(&[[0, -1], [1, 0]])
        );
        let c = companion(&p("t^3")).unwrap();
        assert_eq!(c, Matrix::from_ints(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]]));
        assert!(c.is_nilpotent().unwrap());
        assert!(matches!(companion(&p("2*t+1")), Err(Error::NotMonic(_))));
        assert_eq!(companion(&p("5")), Err(Error::ConstantPolynomial));
        assert_eq!(companion(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn companion_of_monomials_is_nilpotent() {
        for d in 1..=8 {
            let c = companion(&Polynomial::monomial(Rational::one(), d)).unwrap();
            assert!(c.is_nilpotent().unwrap());
        }
    }

    #[test]
    fn eval_examples() {
        let pc = companion(&p("t^4 + t + 1")).unwrap();
        assert_eq!(
            Polynomial::one().eval_at_matrix(&pc).unwrap(),
            Matrix::identity(4)
        );
        assert!(p("t^4 + t + 1").eval_at_matrix(&pc).unwrap().is_zero());
        // (P^k)[i, j] = 1 iff i = j + k, for columns j < d - k (zero-based)
        let d = 6;
        let pc = companion(&p("t^6 - 3*t^5 + 2*t^2 + 7")).unwrap();
        for k in 0..d {
            let pk = Polynomial::monomial(Rational::one(), k)
                .eval_at_matrix(&pc)
                .unwrap();
            for j in 0..d - k {
                for i in 0..d {
                    let want = if i == j + k { rat(1) } else { rat(0) };
                    assert_eq!(pk[(i, j)], want, "k={k} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn regular_representation_examples() {
        let q = QuotientAlgebra::new(&p("t")).unwrap();
        assert_eq!(q.regular_representation(), vec![Matrix::identity(1)]);
        let q = QuotientAlgebra::new(&p("t^2")).unwrap();
        let reg = q.regular_representation();
        assert_eq!(reg[0], Matrix::identity(2));
        assert!((&reg[1] * &reg[1]).is_zero());
        let q = QuotientAlgebra::new(&p("t^2+1")).unwrap();
        let reg = q.regular_representation();
        assert_eq!(&reg[1] * &reg[1], -&Matrix::identity(2));
    }

    #[test]
    fn quotient_normalizes_non_monic() {
        let q = QuotientAlgebra::new(&p("2*t^2 + 2")).unwrap();
        assert!(q.was_normalized());
        assert_eq!(q.modulus(), &p("t^2+1"));
        assert!(!QuotientAlgebra::new(&p("t^2+1")).unwrap().was_normalized());
        assert_eq!(
            QuotientAlgebra::new(&p("3")),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(Polynomial::gcd(&p("t^2"), &p("t")).unwrap(), p("t"));
        assert_eq!(Polynomial::gcd(&p("t^2+1"), &p("t^2-1")).unwrap(), p("1"));
        let a = p("(t-1)^2*(t+2)");
        let b = p("(t-1)*(t+3)");
        assert_eq!(Polynomial::gcd(&a, &b).unwrap(), p("t-1"));
        assert_eq!(
            Polynomial::gcd(&Polynomial::zero(), &p("2*t")).unwrap(),
            p("t")
        );
        assert_eq!(
            Polynomial::gcd(&Polynomial::zero(), &Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn gcd_matches_hand_euclid() {
        // (t^3 - 3t + 2) = (t^2 + 2t - 3)(t - 2) + (4t - 4); then (t^2+2t-3) = (4t-4)(t/4 + 3/4)
        let a = p("t^3 - 3*t + 2");
        let b = p("t^2 + 2*t - 3");
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p("t - 2"));
        assert_eq!(r, p("4*t - 4"));
        assert_eq!(b.rem(&r).unwrap(), Polynomial::zero());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p("t^5 + 3*t^2 - 1");
        let b = p("t^3 - t + 4");
        let (g, s, u) = Polynomial::ext_gcd(&a, &b).unwrap();
        assert_eq!(&(&s * &a) + &(&u * &b), g);
        assert!(g.is_one());
        let inv = b.inverse_mod(&a).unwrap();
        assert!((&inv * &b).rem(&a).unwrap().is_one());
    }

    #[test]
    fn squarefree() {
        assert!(p("t^2+1").is_squarefree());
        assert!(!p("(t-1)^2").is_squarefree());
        assert_eq!(
            p("(t-1)^3*(t+2)").squarefree_part().unwrap(),
            p("(t-1)*(t+2)")
        );
    }

    #[test]
    fn crt_identity() {
        let split = crt_split(&p("t"), &[p("t")]).unwrap();
        assert_eq!(split.forward, Matrix::identity(1));
        assert_eq!(split.inverse, Matrix::identity(1));
    }

    #[test]
    fn crt_diagonalizes_distinct_roots() {
        let pp = p("t*(t-1)");
        let split = crt_split(&pp, &[p("t"), p("t-1")]).unwrap();
        let conj = &(&split.forward * &companion(&pp).unwrap()) * &split.inverse;
        assert_eq!(conj, Matrix::diagonal(&[rat(0), rat(1)]));
        // Eigenvector oracle: columns of the inverse are eigenvectors of P.
        let pc = companion(&pp).unwrap();
        for (j, lambda) in [rat(0), rat(1)].iter().enumerate() {
            let v = split.inverse.column(j);
            let pv = pc.mul_vec(&v);
            let lv: Vec<Rational> = v.iter().map(|x| x * lambda).collect();
            assert_eq!(pv, lv);
        }
    }

    #[test]
    fn crt_with_repeated_factor() {
        let pp = p("(t-1)^2*(t+2)");
        let f1 = p("(t-1)^2");
        let split = crt_split(&pp, &[f1.clone(), p("t+2")]).unwrap();
        let conj = &(&split.forward * &companion(&pp).unwrap()) * &split.inverse;
        let mut expect = Matrix::zeros(3, 3);
        expect.set_block(0, 0, &companion(&f1).unwrap());
        expect[(2, 2)] = rat(-2);
        assert_eq!(conj, expect);
    }

    #[test]
    fn crt_rejects_bad_factors() {
        assert_eq!(
            crt_split(&p("t^2*(t-1)"), &[p("t"), p("t*(t-1)")]),
            Err(Error::NotCoprime(0, 1))
        );
        assert!(matches!(
            crt_split(&p("t*(t-1)"), &[p("t"), p("t+1")]),
            Err(Error::WrongProduct { .. })
        ));
    }
}
