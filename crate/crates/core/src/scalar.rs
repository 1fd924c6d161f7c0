//! Exact scalars for the three coefficient fields of the engine: the
//! rationals `Q`, prime fields `F_p`, and the rational function field
//! `Q(s)`.
//!
//! Every value carries enough information to identify its field (the
//! modulus `p` travels with every prime-field element), values are kept
//! in canonical form at all times, and equality of canonical forms is
//! equality in the field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldKind, FieldKind),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?} in {1}")]
    Parse(String, FieldKind),
}

pub type FieldResult<T> = Result<T, FieldError>;

/// Identifies one of the three supported fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// The rational numbers.
    Q,
    /// The prime field with the given modulus.
    Fp(u64),
    /// Rational functions over `Q` in the indeterminate `s`.
    Qs,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Q => write!(f, "Q"),
            FieldKind::Fp(p) => write!(f, "F_p:{p}"),
            FieldKind::Qs => write!(f, "Q(s)"),
        }
    }
}

impl FieldKind {
    pub fn parse(text: &str) -> FieldResult<FieldKind> {
        let t = text.trim();
        match t {
            "Q" => Ok(FieldKind::Q),
            "Q(s)" | "Qs" => Ok(FieldKind::Qs),
            _ => {
                let rest = t
                    .strip_prefix("F_p:")
                    .or_else(|| t.strip_prefix("Fp:"))
                    .or_else(|| t.strip_prefix("F"))
                    .ok_or_else(|| FieldError::Parse(t.to_string(), FieldKind::Q))?;
                let p: u64 = rest
                    .trim_start_matches('_')
                    .parse()
                    .map_err(|_| FieldError::Parse(t.to_string(), FieldKind::Q))?;
                if !is_prime(p) {
                    return Err(FieldError::NotPrime(p));
                }
                Ok(FieldKind::Fp(p))
            }
        }
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldKind::Q => Scalar::Q(BigRational::zero()),
            FieldKind::Fp(p) => Scalar::Fp { val: 0, p },
            FieldKind::Qs => Scalar::Qs(RatFun::zero()),
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            FieldKind::Q => Scalar::Q(BigRational::one()),
            FieldKind::Fp(p) => Scalar::Fp { val: 1 % p, p },
            FieldKind::Qs => Scalar::Qs(RatFun::one()),
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldKind::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldKind::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { val: r, p }
            }
            FieldKind::Qs => Scalar::Qs(RatFun::constant(BigRational::from_integer(BigInt::from(n)))),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A dense univariate polynomial over `Q`, lowest degree first.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial has
/// an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    pub coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Poly {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Poly {
        Poly::new(vec![c])
    }

    pub fn var() -> Poly {
        Poly::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0 for
    /// the purposes of canonicalization (callers check `is_zero` first).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a + b);
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        if self.is_zero() || self.degree() < rhs.degree() {
            return (Poly::zero(), rem);
        }
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(rhs.coeffs.len()) + 1];
        let dlead = rhs.leading();
        while !rem.is_zero() && rem.degree() >= rhs.degree() {
            let shift = rem.degree() - rhs.degree();
            let c = rem.leading() / dlead.clone();
            quot[shift] = c.clone();
            let mut sub = vec![BigRational::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|x| x * &c));
            rem = rem.sub(&Poly::new(sub));
        }
        (Poly::new(quot), rem)
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // make monic so the gcd is canonical
        let lead = a.leading();
        a.scale(&(BigRational::one() / lead))
    }
}

/// A rational function over `Q`, kept with coprime numerator/denominator
/// and a monic denominator; zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    pub num: Poly,
    pub den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> RatFun {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = den.leading();
        let num = num.scale(&(BigRational::one() / lead.clone()));
        let den = den.scale(&(BigRational::one() / lead));
        RatFun { num, den }
    }

    pub fn zero() -> RatFun {
        RatFun {
            num: Poly::zero(),
            den: Poly::constant(BigRational::one()),
        }
    }

    pub fn one() -> RatFun {
        RatFun {
            num: Poly::constant(BigRational::one()),
            den: Poly::constant(BigRational::one()),
        }
    }

    pub fn constant(c: BigRational) -> RatFun {
        RatFun::new(Poly::constant(c), Poly::constant(BigRational::one()))
    }

    pub fn var() -> RatFun {
        RatFun::new(Poly::var(), Poly::constant(BigRational::one()))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> FieldResult<RatFun> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(RatFun::new(self.den.clone(), self.num.clone()))
    }
}

/// An exact scalar in one of the supported fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { val: u64, p: u64 },
    Qs(RatFun),
}

impl Scalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Q(_) => FieldKind::Q,
            Scalar::Fp { p, .. } => FieldKind::Fp(*p),
            Scalar::Qs(_) => FieldKind::Qs,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
            Scalar::Qs(r) => r.is_zero(),
        }
    }

    /// True iff the scalar is a unit of its field, i.e. nonzero.
    pub fn is_invertible(&self) -> bool {
        !self.is_zero()
    }

    pub fn zero_like(&self) -> Scalar {
        self.kind().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.kind().one()
    }

    fn check_same(&self, rhs: &Scalar) -> FieldResult<()> {
        if self.kind() != rhs.kind() {
            return Err(FieldError::FieldMismatch(self.kind(), rhs.kind()));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &Scalar) -> FieldResult<Scalar> {
        self.check_same(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (Scalar::Qs(a), Scalar::Qs(b)) => Scalar::Qs(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> FieldResult<Scalar> {
        self.check_same(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, .. }) => Scalar::Fp {
                val: ((*a as u128 * *b as u128) % *p as u128) as u64,
                p: *p,
            },
            (Scalar::Qs(a), Scalar::Qs(b)) => Scalar::Qs(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn checked_neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
            Scalar::Qs(a) => Scalar::Qs(a.neg()),
        }
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> FieldResult<Scalar> {
        self.checked_add(&rhs.checked_neg())
    }

    pub fn inv(&self) -> FieldResult<Scalar> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { val, p } => Scalar::Fp {
                val: mod_inverse(*val, *p),
                p: *p,
            },
            Scalar::Qs(a) => Scalar::Qs(a.inv()?),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> FieldResult<Scalar> {
        self.check_same(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on signed intermediates
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar addition across fields")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar subtraction across fields")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar multiplication across fields")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.checked_neg()
    }
}

/// The operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Uniform entry point for exact field arithmetic; unary operations
/// ignore `b`.
pub fn field_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> FieldResult<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
        ArithOp::Neg => Ok(a.checked_neg()),
        ArithOp::Inv => a.inv(),
    }
}

// ---------------------------------------------------------------------
// text encoding
// ---------------------------------------------------------------------

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = t.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

fn fmt_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = fmt_rational(c);
        match i {
            0 => parts.push(c),
            1 => parts.push(format!("{c}*s")),
            _ => parts.push(format!("{c}*s^{i}")),
        }
    }
    parts.join(" + ")
}

fn parse_poly(text: &str) -> Option<Poly> {
    let mut coeffs: Vec<BigRational> = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return None;
        }
        let (coeff_text, power) = if let Some((c, s)) = term.split_once('*') {
            let s = s.trim();
            let pow = if s == "s" {
                1
            } else {
                s.strip_prefix("s^")?.parse::<usize>().ok()?
            };
            (c.trim(), pow)
        } else if term == "s" {
            ("1", 1)
        } else if let Some(rest) = term.strip_prefix("s^") {
            ("1", rest.parse::<usize>().ok()?)
        } else {
            (term, 0)
        };
        let c = parse_rational(coeff_text)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] = &coeffs[power] + &c;
    }
    Some(Poly::new(coeffs))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Fp { val, .. } => write!(f, "{val}"),
            Scalar::Qs(r) => {
                if r.den.coeffs.len() == 1 && r.den.coeffs[0].is_one() {
                    write!(f, "({})", fmt_poly(&r.num))
                } else {
                    write!(f, "({})/({})", fmt_poly(&r.num), fmt_poly(&r.den))
                }
            }
        }
    }
}

impl Scalar {
    /// Parse a scalar in the text encoding of the given field.
    pub fn parse(text: &str, kind: FieldKind) -> FieldResult<Scalar> {
        let t = text.trim();
        let err = || FieldError::Parse(t.to_string(), kind);
        match kind {
            FieldKind::Q => parse_rational(t).map(Scalar::Q).ok_or_else(err),
            FieldKind::Fp(p) => {
                let neg = t.starts_with('-');
                let digits = t.trim_start_matches('-');
                let v: u64 = digits.parse().map_err(|_| err())?;
                let v = v % p;
                Ok(Scalar::Fp {
                    val: if neg && v != 0 { p - v } else { v },
                    p,
                })
            }
            FieldKind::Qs => {
                if !t.starts_with('(') {
                    // allow bare rationals and `s` as a convenience
                    if t == "s" {
                        return Ok(Scalar::Qs(RatFun::var()));
                    }
                    return parse_rational(t)
                        .map(|r| Scalar::Qs(RatFun::constant(r)))
                        .ok_or_else(err);
                }
                let (num_text, rest) = split_paren(t).ok_or_else(err)?;
                let num = parse_poly(num_text).ok_or_else(err)?;
                let rest = rest.trim();
                if rest.is_empty() {
                    return Ok(Scalar::Qs(RatFun::new(
                        num,
                        Poly::constant(BigRational::one()),
                    )));
                }
                let rest = rest.strip_prefix('/').ok_or_else(err)?;
                let (den_text, tail) = split_paren(rest.trim()).ok_or_else(err)?;
                if !tail.trim().is_empty() {
                    return Err(err());
                }
                let den = parse_poly(den_text).ok_or_else(err)?;
                if den.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(Scalar::Qs(RatFun::new(num, den)))
            }
        }
    }
}

/// Split off a leading parenthesized group, returning its interior and the
/// remainder of the string.
fn split_paren(t: &str) -> Option<(&str, &str)> {
    let t = t.strip_prefix('(')?;
    let close = t.find(')')?;
    Some((&t[..close], &t[close + 1..]))
}

// serde: scalars serialize as their text encoding; the surrounding
// structure records the field
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn f5_addition_wraps() {
        let a = FieldKind::Fp(5).from_i64(2);
        let b = FieldKind::Fp(5).from_i64(4);
        assert_eq!(&a + &b, FieldKind::Fp(5).from_i64(1));
    }

    #[test]
    fn qs_canonicalizes_by_gcd() {
        // (s^2 - 1)/(s + 1) reduces to s - 1
        let s2m1 = Poly::new(vec![
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::zero(),
            BigRational::one(),
        ]);
        let sp1 = Poly::new(vec![BigRational::one(), BigRational::one()]);
        let r = RatFun::new(s2m1, sp1);
        let expect = RatFun::new(
            Poly::new(vec![BigRational::from_integer(BigInt::from(-1)), BigRational::one()]),
            Poly::constant(BigRational::one()),
        );
        assert_eq!(r, expect);
    }

    #[test]
    fn rational_inverse_of_zero_fails() {
        assert_eq!(FieldKind::Q.zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn invertibility() {
        assert!(q(3, 7).is_invertible());
        assert!(!FieldKind::Fp(3).zero().is_invertible());
        assert!(Scalar::Qs(RatFun::var()).is_invertible());
    }

    #[test]
    fn field_mismatch_reported() {
        let a = FieldKind::Q.one();
        let b = FieldKind::Fp(3).one();
        assert!(matches!(
            field_arith(&a, &b, ArithOp::Add),
            Err(FieldError::FieldMismatch(_, _))
        ));
        let c = FieldKind::Fp(5).one();
        assert!(matches!(
            field_arith(&b, &c, ArithOp::Add),
            Err(FieldError::FieldMismatch(_, _))
        ));
    }

    fn random_scalar(rng: &mut ChaCha8Rng, kind: FieldKind) -> Scalar {
        match kind {
            FieldKind::Q => {
                let n = rng.gen_range(-12i64..=12);
                let d = rng.gen_range(1i64..=9);
                q(n, d)
            }
            FieldKind::Fp(p) => FieldKind::Fp(p).from_i64(rng.gen_range(0..p) as i64),
            FieldKind::Qs => {
                let deg = rng.gen_range(0..3);
                let coeffs: Vec<BigRational> = (0..=deg)
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-4i64..=4))))
                    .collect();
                let dens: Vec<BigRational> = (0..=rng.gen_range(0..2))
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
                    .collect();
                let num = Poly::new(coeffs);
                let mut den = Poly::new(dens);
                if den.is_zero() {
                    den = Poly::constant(BigRational::one());
                }
                Scalar::Qs(RatFun::new(num, den))
            }
        }
    }

    #[test]
    fn field_axioms_hold_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kind in [FieldKind::Q, FieldKind::Fp(2), FieldKind::Fp(3), FieldKind::Fp(7), FieldKind::Qs] {
            for _ in 0..40 {
                let a = random_scalar(&mut rng, kind);
                let b = random_scalar(&mut rng, kind);
                let c = random_scalar(&mut rng, kind);
                // associativity and commutativity
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                // distributivity
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                // units and inverses
                assert_eq!(&a + &a.zero_like(), a);
                assert_eq!(&a * &a.one_like(), a);
                assert_eq!(&a + &(-&a), a.zero_like());
                if !b.is_zero() {
                    let inv = b.inv().unwrap();
                    assert_eq!(&b * &inv, b.one_like());
                    assert_eq!(a.checked_div(&b).unwrap().checked_mul(&b).unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for kind in [FieldKind::Q, FieldKind::Fp(5), FieldKind::Qs] {
            for _ in 0..30 {
                let a = random_scalar(&mut rng, kind);
                let round = Scalar::parse(&a.to_string(), kind).unwrap();
                assert_eq!(a, round, "text {}", a);
            }
        }
    }

    #[test]
    fn char_two_is_supported() {
        let one = FieldKind::Fp(2).one();
        assert_eq!(&one + &one, FieldKind::Fp(2).zero());
    }

    #[test]
    fn field_kind_parse() {
        assert_eq!(FieldKind::parse("Q").unwrap(), FieldKind::Q);
        assert_eq!(FieldKind::parse("F_p:7").unwrap(), FieldKind::Fp(7));
        assert_eq!(FieldKind::parse("Fp:3").unwrap(), FieldKind::Fp(3));
        assert_eq!(FieldKind::parse("Q(s)").unwrap(), FieldKind::Qs);
        assert!(matches!(FieldKind::parse("F_p:6"), Err(FieldError::NotPrime(6))));
    }
}
