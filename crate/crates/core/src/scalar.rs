//! Exact field scalars.
//!
//! All coefficients in the engine live in one exact field, fixed per
//! session: the rationals (default) or a prime field `F_p` with p odd.
//! Characteristic 2 is rejected because several witnesses divide by 2.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Which exact field the session computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// Arbitrary-precision rationals.
    Rational,
    /// The prime field `F_p`, p an odd prime.
    Prime(u64),
}

impl FieldSpec {
    /// Parses `"q"` or `"fp:<p>"`.
    pub fn parse(text: &str) -> Result<Self, FieldError> {
        if text.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = text
            .strip_prefix("fp:")
            .or_else(|| text.strip_prefix("Fp:"))
            .or_else(|| text.strip_prefix("FP:"))
        {
            let p: u64 = rest
                .parse()
                .map_err(|_| FieldError::Malformed(text.to_string()))?;
            if p == 2 {
                return Err(FieldError::CharacteristicTwo);
            }
            if p >= 1 << 31 {
                return Err(FieldError::ModulusTooLarge(p));
            }
            if !is_prime(p) {
                return Err(FieldError::NotPrime(p));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(FieldError::Malformed(text.to_string()))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Q(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.integer(1)
    }

    pub fn integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => Scalar::Fp {
                v: (n.rem_euclid(*p as i64)) as u64,
                p: *p,
            },
        }
    }

    /// Builds `numer/denom` from big integers. Fails on zero denominator
    /// or, over `F_p`, a denominator divisible by p.
    pub fn ratio(&self, numer: BigInt, denom: BigInt) -> Result<Scalar, FieldError> {
        if denom.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Q(BigRational::new(numer, denom))),
            FieldSpec::Prime(p) => {
                let pv = BigInt::from(*p);
                let n = ((numer % &pv) + &pv) % &pv;
                let d = ((denom % &pv) + &pv) % &pv;
                let n: u64 = n.try_into().expect("reduced residue fits u64");
                let d: u64 = d.try_into().expect("reduced residue fits u64");
                if d == 0 {
                    return Err(FieldError::DenominatorDivisibleByP);
                }
                Ok(Scalar::Fp {
                    v: mulmod(n, invmod(d, *p), *p),
                    p: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    Malformed(String),
    CharacteristicTwo,
    NotPrime(u64),
    ModulusTooLarge(u64),
    ZeroDenominator,
    DenominatorDivisibleByP,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::Malformed(s) => write!(f, "unrecognized field spec {s:?} (expected `q` or `fp:<p>`)"),
            FieldError::CharacteristicTwo => write!(f, "characteristic 2 is not supported"),
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ModulusTooLarge(p) => write!(f, "modulus {p} too large (must be < 2^31)"),
            FieldError::ZeroDenominator => write!(f, "zero denominator"),
            FieldError::DenominatorDivisibleByP => write!(f, "denominator divisible by the field characteristic"),
        }
    }
}

impl std::error::Error for FieldError {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // Extended Euclid; p prime and a nonzero mod p.
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "element not invertible mod p");
    t.rem_euclid(p as i128) as u64
}

/// An element of the session field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// True for rationals with negative sign; used only for printing.
    /// Prime-field residues are never printed with a sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { v: (a + b) % p, p: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { v: mulmod(*a, *b, *p), p: *p }
            }
            _ => panic!("mixed scalar fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: if *v == 0 { 0 } else { p - v }, p: *p },
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { v, p } => Scalar::Fp { v: invmod(*v, *p), p: *p },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn scale_i64(&self, n: i64) -> Scalar {
        self.mul(&self.field().integer(n))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses a decimal integer of arbitrary size.
pub fn parse_bigint(digits: &str) -> Option<BigInt> {
    BigInt::from_str(digits).ok()
}

/// Rescales a rational row to a primitive integer vector (content removed).
/// Keeps elimination fraction-free over Q; a no-op over prime fields.
pub fn normalize_row(row: &mut [Scalar]) {
    let any_q = row.iter().any(|s| matches!(s, Scalar::Q(_)));
    if !any_q {
        return;
    }
    let mut denom_lcm = BigInt::one();
    for s in row.iter() {
        if let Scalar::Q(r) = s {
            if !r.is_zero() {
                denom_lcm = num_integer::lcm(denom_lcm, r.denom().clone());
            }
        }
    }
    let mut content = BigInt::zero();
    for s in row.iter() {
        if let Scalar::Q(r) = s {
            if !r.is_zero() {
                let scaled = r.numer() * &denom_lcm / r.denom();
                content = num_integer::gcd(content, scaled);
            }
        }
    }
    if content.is_zero() {
        return;
    }
    let factor = BigRational::new(denom_lcm, content);
    for s in row.iter_mut() {
        if let Scalar::Q(r) = s {
            *r = &*r * &factor;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("fp:32003").unwrap(), FieldSpec::Prime(32003));
        assert_eq!(FieldSpec::parse("fp:2"), Err(FieldError::CharacteristicTwo));
        assert_eq!(FieldSpec::parse("fp:32004"), Err(FieldError::NotPrime(32004)));
        assert!(FieldSpec::parse("r").is_err());
    }

    #[test]
    fn exact_rational_arithmetic() {
        let f = FieldSpec::Rational;
        let a = f.ratio(1.into(), 3.into()).unwrap();
        let b = f.ratio(1.into(), 6.into()).unwrap();
        let half = f.ratio(1.into(), 2.into()).unwrap();
        assert_eq!(a.add(&b), half);
        assert!(a.sub(&a).is_zero());
        assert!(a.mul(&a.inv()).is_one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::Prime(32003);
        let a = f.integer(-5);
        assert_eq!(a, f.integer(31998));
        assert!(a.add(&f.integer(5)).is_zero());
        let inv2 = f.integer(2).inv();
        assert!(inv2.mul(&f.integer(2)).is_one());
    }

    #[test]
    fn row_normalization_clears_denominators() {
        let f = FieldSpec::Rational;
        let mut row = vec![
            f.ratio(1.into(), 2.into()).unwrap(),
            f.ratio(3.into(), 4.into()).unwrap(),
            f.zero(),
        ];
        normalize_row(&mut row);
        assert_eq!(row[0], f.integer(2));
        assert_eq!(row[1], f.integer(3));
    }
}
