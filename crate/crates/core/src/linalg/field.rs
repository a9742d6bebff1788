//! Exact scalars over `Q` and prime fields `GF(p)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Field descriptor. Every scalar carries the descriptor of the field it lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Parses a scalar in serialized form: `a` or `a/b` over `Q`, an integer over `GF(p)`.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid scalar {s:?} for field {self}"));
        match *self {
            Field::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            Field::Prime(p) => {
                let n: i128 = s.parse().map_err(|_| bad())?;
                Ok(Scalar::Prime {
                    value: n.rem_euclid(p as i128) as u64,
                    modulus: p,
                })
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `q`, `GF(p)` and `gf:p`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let lower = t.to_ascii_lowercase();
        let digits = if let Some(rest) = lower.strip_prefix("gf:") {
            rest
        } else if let Some(rest) = lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')) {
            rest
        } else {
            return Err(Error::Parse(format!("unknown field {s:?}")));
        };
        let p: u64 = digits
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field {s:?}")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept reduced with positive denominator,
/// prime-field elements as the canonical residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `Some(n)` if this scalar is the image of an integer that fits in `i64`
    /// (over `GF(p)` the canonical residue).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => i64::try_from(r.to_integer()).ok(),
            Scalar::Rational(_) => None,
            Scalar::Prime { value, .. } => i64::try_from(*value).ok(),
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "scalar arithmetic across fields {} and {}",
                self.field(),
                other.field()
            );
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = (base % m) as u128;
    let m128 = m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    /// True when the serialized form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }
}

impl<'a, 'b> Add<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'b Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a, 'b> Sub<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'b Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'b Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rational;
        let a = q.parse_scalar("4/-6").unwrap();
        assert_eq!(a.to_string(), "-2/3");
        assert_eq!(q.parse_scalar("10/5").unwrap().to_string(), "2");
        assert!(q.parse_scalar("1/0").is_err());
    }

    #[test]
    fn prime_field_residues() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1).to_string(), "6");
        let three = f.from_i64(3);
        let inv = three.inv().unwrap();
        assert!((&three * &inv).is_one());
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gf:2".parse::<Field>().unwrap(), Field::Prime(2));
        assert_eq!("GF(5)".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("gf:4".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }

    #[test]
    #[should_panic(expected = "across fields")]
    fn mixed_field_arithmetic_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(2).one();
    }
}
