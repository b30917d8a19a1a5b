//! Exact scalars: arbitrary-precision rationals or residues modulo a word-sized prime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::PolyError;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    /// Prime field GF(p), `p < 2^32`.
    Prime(u64),
}

impl Field {
    /// Validates `p` and returns GF(p).
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        if !(2..(1 << 32)).contains(&p) || !is_prime(p) {
            return Err(PolyError::BadPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rational(BigRational::zero()),
            Field::Prime(p) => Coefficient::Mod { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Coefficient {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coefficient::Mod { value: n.rem_euclid(*p as i64) as u64, p: *p },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coefficient {
        match self {
            Field::Rational => Coefficient::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Coefficient::Mod { value: r.to_u64().unwrap(), p: *p }
            }
        }
    }

    /// Maps a rational into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Coefficient, PolyError> {
        match self {
            Field::Rational => Ok(Coefficient::Rational(q.clone())),
            Field::Prime(p) => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                if den.is_zero() {
                    return Err(PolyError::NotRepresentable { value: q.to_string(), p: *p });
                }
                Ok(&num / &den)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp={p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// A tagged exact scalar. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues are reduced into `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

impl Coefficient {
    pub fn field(&self) -> Field {
        match self {
            Coefficient::Rational(_) => Field::Rational,
            Coefficient::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_zero(),
            Coefficient::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_one(),
            Coefficient::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coefficient {
        match self {
            Coefficient::Rational(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Coefficient::Rational(q.recip())
            }
            Coefficient::Mod { value, p } => {
                assert!(*value != 0, "inverse of zero");
                Coefficient::Mod { value: pow_mod(*value, p - 2, *p), p: *p }
            }
        }
    }

    /// True for a rational with denominator 1, and always for residues.
    pub fn is_integral(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_integer(),
            Coefficient::Mod { .. } => true,
        }
    }

    /// Negative rationals print with a leading minus; residues never do.
    pub fn is_negative(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_negative(),
            Coefficient::Mod { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coefficient::Rational(q) => Some(q),
            Coefficient::Mod { .. } => None,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Coefficient, b: &Coefficient) -> ! {
    panic!("coefficient fields differ: {} vs {}", a.field(), b.field())
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Mod { value: a, p }, Coefficient::Mod { value: b, p: q }) if p == q => {
                Coefficient::Mod { value: (a + b) % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a - b),
            (Coefficient::Mod { value: a, p }, Coefficient::Mod { value: b, p: q }) if p == q => {
                Coefficient::Mod { value: (a + p - b) % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Mod { value: a, p }, Coefficient::Mod { value: b, p: q }) if p == q => {
                Coefficient::Mod { value: a * b % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Mod { value, p } => Coefficient::Mod { value: (p - value) % p, p: *p },
        }
    }
}

impl Div for &Coefficient {
    type Output = Coefficient;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Coefficient) -> Coefficient {
        self * &rhs.inv()
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Rational(q) => write!(f, "{q}"),
            Coefficient::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let q = Field::Rational.from_rational(&BigRational::new(BigInt::from(6), BigInt::from(-4))).unwrap();
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(31991).unwrap();
        let a = f.from_i64(12345);
        assert!((&a * &a.inv()).is_one());
        assert_eq!(f.from_i64(-1).to_string(), "31990");
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(31992).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn denominator_divisible_by_p() {
        let f = Field::prime(7).unwrap();
        let q = BigRational::new(BigInt::from(1), BigInt::from(14));
        assert!(matches!(f.from_rational(&q), Err(PolyError::NotRepresentable { .. })));
    }
}
