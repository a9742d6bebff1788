//! Graded dimensions: elements of `Z[q, q^-1][pi] / (pi^2 - 1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Parity in `Z/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Parity {
        if bit % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Bidegree `(n, eps)` of a homogeneous element, i.e. the monomial `q^n pi^eps`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Degree {
    pub q: i64,
    pub parity: Parity,
}

impl Degree {
    pub const ZERO: Degree = Degree {
        q: 0,
        parity: Parity::Even,
    };

    pub fn new(q: i64, parity: Parity) -> Self {
        Degree { q, parity }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree::new(self.q + rhs.q, self.parity + rhs.parity)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree::new(-self.q, self.parity)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.parity)
    }
}

/// A sparse Laurent polynomial in `q` with coefficients in `Z[pi]/(pi^2 - 1)`.
/// No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedDim {
    terms: BTreeMap<Degree, i64>,
}

impl GradedDim {
    pub fn zero() -> Self {
        GradedDim::default()
    }

    pub fn one() -> Self {
        Self::monomial(Degree::ZERO, 1)
    }

    pub fn monomial(degree: Degree, coeff: i64) -> Self {
        let mut g = GradedDim::zero();
        g.add_term(degree, coeff);
        g
    }

    /// `q^n pi^eps` with coefficient one.
    pub fn q_pi(n: i64, parity: Parity) -> Self {
        Self::monomial(Degree::new(n, parity), 1)
    }

    pub fn add_term(&mut self, degree: Degree, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(degree).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&degree);
        }
    }

    pub fn coefficient(&self, degree: Degree) -> i64 {
        self.terms.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Terms sorted by `(n, eps)`.
    pub fn terms(&self) -> impl Iterator<Item = (Degree, i64)> + '_ {
        self.terms.iter().map(|(&d, &c)| (d, c))
    }

    /// Value at `q = 1, pi = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// Serialized form: `[n, eps, coeff]` triples sorted by `(n, eps)`.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.terms()
            .map(|(d, c)| [d.q, d.parity.bit() as i64, c])
            .collect()
    }

    pub fn from_triples(triples: &[[i64; 3]]) -> Self {
        let mut g = GradedDim::zero();
        for &[n, e, c] in triples {
            g.add_term(Degree::new(n, Parity::from_bit(e.rem_euclid(2) as u8)), c);
        }
        g
    }
}

impl Serialize for GradedDim {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_triples().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedDim {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let triples = Vec::<[i64; 3]>::deserialize(d)?;
        Ok(GradedDim::from_triples(&triples))
    }
}

impl<'a, 'b> Add<&'b GradedDim> for &'a GradedDim {
    type Output = GradedDim;
    fn add(self, rhs: &'b GradedDim) -> GradedDim {
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_term(d, c);
        }
        out
    }
}

impl<'a, 'b> Sub<&'b GradedDim> for &'a GradedDim {
    type Output = GradedDim;
    fn sub(self, rhs: &'b GradedDim) -> GradedDim {
        self + &(-rhs)
    }
}

impl Neg for &GradedDim {
    type Output = GradedDim;
    fn neg(self) -> GradedDim {
        GradedDim {
            terms: self.terms.iter().map(|(&d, &c)| (d, -c)).collect(),
        }
    }
}

impl<'a, 'b> Mul<&'b GradedDim> for &'a GradedDim {
    type Output = GradedDim;
    fn mul(self, rhs: &'b GradedDim) -> GradedDim {
        let mut out = GradedDim::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in rhs.terms() {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }
}

impl Add for GradedDim {
    type Output = GradedDim;
    fn add(self, rhs: GradedDim) -> GradedDim {
        &self + &rhs
    }
}

impl Sub for GradedDim {
    type Output = GradedDim;
    fn sub(self, rhs: GradedDim) -> GradedDim {
        &self - &rhs
    }
}

impl Mul for GradedDim {
    type Output = GradedDim;
    fn mul(self, rhs: GradedDim) -> GradedDim {
        &self * &rhs
    }
}

impl std::iter::Sum for GradedDim {
    fn sum<I: Iterator<Item = GradedDim>>(iter: I) -> Self {
        iter.fold(GradedDim::zero(), |acc, g| &acc + &g)
    }
}

fn render_monomial(d: Degree) -> Option<String> {
    let mut parts = Vec::new();
    match d.q {
        0 => {}
        1 => parts.push("q".to_string()),
        n => parts.push(format!("q^{n}")),
    }
    if d.parity == Parity::Odd {
        parts.push("pi".to_string());
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

impl fmt::Display for GradedDim {
    /// Renders as `c*q^n*pi^e` terms sorted by `(n, e)`, e.g. `1 + 2*q*pi + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms().enumerate() {
            let abs = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match render_monomial(d) {
                None => write!(f, "{abs}")?,
                Some(m) if abs == 1 => write!(f, "{m}")?,
                Some(m) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for GradedDim {
    type Err = Error;

    /// Parses the rendering produced by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("invalid graded dimension {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(GradedDim::zero());
        }
        let mut out = GradedDim::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body
                .char_indices()
                .skip(1)
                .find(|&(i, ch)| {
                    (ch == '+' || ch == '-') && !body[..i].ends_with('^')
                })
                .map_or(body.len(), |(i, _)| i);
            let term = &body[..end];
            rest = &body[end..];
            let mut coeff = 1i64;
            let mut degree = Degree::ZERO;
            for factor in term.split('*') {
                if factor == "pi" {
                    degree.parity = degree.parity + Parity::Odd;
                } else if factor == "q" {
                    degree.q += 1;
                } else if let Some(exp) = factor.strip_prefix("q^") {
                    degree.q += exp.parse::<i64>().map_err(|_| bad())?;
                } else if let Some(exp) = factor.strip_prefix("pi^") {
                    let e: i64 = exp.parse().map_err(|_| bad())?;
                    degree.parity = degree.parity + Parity::from_bit(e.rem_euclid(2) as u8);
                } else {
                    coeff *= factor.parse::<i64>().map_err(|_| bad())?;
                }
            }
            out.add_term(degree, sign * coeff);
        }
        Ok(out)
    }
}
