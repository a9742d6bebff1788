//! Finite-dimensional graded superalgebras given by a homogeneous basis and
//! structure constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::error::Error;
use crate::linalg::{Degree, ExactMatrix, Field, GradedDim, Scalar, Vector};

/// Sparse coefficient vector over the basis of some algebra. Zero coefficients are
/// never stored, so structural equality is equality of elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn basis(index: usize, field: Field) -> Self {
        Self::from_terms([(index, field.one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut e = AlgebraElement::zero();
        for (k, c) in terms {
            e.add_term(k, &c);
        }
        e
    }

    /// Element with the given dense coordinates.
    pub fn from_vector(coords: &[Scalar]) -> Self {
        Self::from_terms(
            coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone())),
        )
    }

    pub fn to_vector(&self, field: Field, dim: usize) -> Vector {
        let mut v = vec![field.zero(); dim];
        for (&k, c) in &self.coeffs {
            v[k] = c.clone();
        }
        v
    }

    pub fn add_term(&mut self, index: usize, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&index) {
            Some(c) => {
                *c = &*c + coeff;
                if c.is_zero() {
                    self.coeffs.remove(&index);
                }
            }
            None => {
                self.coeffs.insert(index, coeff.clone());
            }
        }
    }

    pub fn coefficient(&self, index: usize) -> Option<&Scalar> {
        self.coeffs.get(&index)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * s)).collect(),
        }
    }

    /// `Some(k)` when this element is exactly the basis vector `b_k`.
    pub fn as_basis_vector(&self) -> Option<usize> {
        match self.coeffs.iter().next() {
            Some((&k, c)) if self.coeffs.len() == 1 && c.is_one() => Some(k),
            _ => None,
        }
    }

    fn field(&self) -> Option<Field> {
        self.coeffs.values().next().map(Scalar::field)
    }
}

impl<'a, 'b> Add<&'b AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &'b AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, 'b> Sub<&'b AlgebraElement> for &'a AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &'b AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, &-c);
        }
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub degree: Degree,
}

impl BasisElement {
    pub fn new(label: impl Into<String>, degree: Degree) -> Self {
        BasisElement {
            label: label.into(),
            degree,
        }
    }
}

/// Size limits applied when an algebra is constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraLimits {
    pub max_dim: usize,
    pub max_products: usize,
}

impl Default for AlgebraLimits {
    fn default() -> Self {
        AlgebraLimits {
            max_dim: 2048,
            max_products: 1 << 20,
        }
    }
}

/// One failed law found by [`SuperAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `left * right` has a component `term` outside the expected degree.
    Grading {
        left: String,
        right: String,
        term: String,
    },
    Associativity {
        a: String,
        b: String,
        c: String,
    },
    UnitLeft(String),
    UnitRight(String),
    UnitNotEvenDegreeZero,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { left, right, term } => {
                write!(f, "grading: {left}*{right} has a {term} component of the wrong degree")
            }
            Violation::Associativity { a, b, c } => {
                write!(f, "associativity: ({a}*{b})*{c} != {a}*({b}*{c})")
            }
            Violation::UnitLeft(b) => write!(f, "unit law: 1*{b} != {b}"),
            Violation::UnitRight(b) => write!(f, "unit law: {b}*1 != {b}"),
            Violation::UnitNotEvenDegreeZero => write!(f, "unit is not even of degree 0"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdempotentFailure {
    NotHomogeneous,
    WrongDegree(Degree),
    SquareDiffers(AlgebraElement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentCheck {
    pub failure: Option<IdempotentFailure>,
}

impl IdempotentCheck {
    pub fn is_idempotent(&self) -> bool {
        self.failure.is_none()
    }
}

/// A finite-dimensional graded superalgebra over an exact field.
///
/// The basis order is fixed at construction; labels identify basis elements across
/// serialization. Products of basis elements are stored sparsely; absent pairs
/// multiply to zero.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    field: Field,
    basis: Vec<BasisElement>,
    index: HashMap<String, usize>,
    table: BTreeMap<(usize, usize), AlgebraElement>,
    unit: Option<AlgebraElement>,
    report: OnceLock<ValidationReport>,
}

fn check_label(label: &str) -> Result<(), Error> {
    let ok = !label.is_empty()
        && !label.starts_with(|c: char| c.is_ascii_digit())
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '+' | '-' | '*' | '/'));
    if ok {
        Ok(())
    } else {
        Err(Error::MalformedAlgebra(format!("invalid basis label {label:?}")))
    }
}

impl SuperAlgebra {
    pub fn new(
        field: Field,
        basis: Vec<BasisElement>,
        products: impl IntoIterator<Item = ((usize, usize), AlgebraElement)>,
        unit: Option<AlgebraElement>,
    ) -> Result<Self, Error> {
        Self::with_limits(field, basis, products, unit, AlgebraLimits::default())
    }

    pub fn with_limits(
        field: Field,
        basis: Vec<BasisElement>,
        products: impl IntoIterator<Item = ((usize, usize), AlgebraElement)>,
        unit: Option<AlgebraElement>,
        limits: AlgebraLimits,
    ) -> Result<Self, Error> {
        let dim = basis.len();
        if dim > limits.max_dim {
            return Err(Error::TooLarge(format!(
                "dimension {dim} exceeds {}",
                limits.max_dim
            )));
        }
        let mut index = HashMap::with_capacity(dim);
        for (k, b) in basis.iter().enumerate() {
            check_label(&b.label)?;
            if index.insert(b.label.clone(), k).is_some() {
                return Err(Error::MalformedAlgebra(format!(
                    "duplicate basis label {:?}",
                    b.label
                )));
            }
        }
        let mut table = BTreeMap::new();
        for ((i, j), v) in products {
            for k in [i, j].into_iter().chain(v.support()) {
                if k >= dim {
                    return Err(Error::IndexOutOfRange { index: k, dim });
                }
            }
            check_field(field, &v)?;
            if v.is_zero() {
                continue;
            }
            if table.insert((i, j), v).is_some() {
                return Err(Error::MalformedAlgebra(format!(
                    "product {}*{} given twice",
                    basis[i].label, basis[j].label
                )));
            }
            if table.len() > limits.max_products {
                return Err(Error::TooLarge(format!(
                    "more than {} non-zero basis products",
                    limits.max_products
                )));
            }
        }
        if let Some(u) = &unit {
            if let Some(k) = u.support().find(|&k| k >= dim) {
                return Err(Error::IndexOutOfRange { index: k, dim });
            }
            check_field(field, u)?;
        }
        Ok(SuperAlgebra {
            field,
            basis,
            index,
            table,
            unit,
            report: OnceLock::new(),
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn label(&self, k: usize) -> &str {
        &self.basis[k].label
    }

    pub fn degree(&self, k: usize) -> Degree {
        self.basis[k].degree
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn unit(&self) -> Option<&AlgebraElement> {
        self.unit.as_ref()
    }

    pub fn require_unit(&self) -> Result<&AlgebraElement, Error> {
        self.unit.as_ref().ok_or(Error::NonUnital)
    }

    /// Non-zero basis products in `(left, right)` index order.
    pub fn products(&self) -> impl Iterator<Item = ((usize, usize), &AlgebraElement)> + '_ {
        self.table.iter().map(|(&k, v)| (k, v))
    }

    pub fn basis_vector(&self, k: usize) -> AlgebraElement {
        AlgebraElement::basis(k, self.field)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> AlgebraElement {
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Errors when `a` mentions indices outside the basis or scalars of another field.
    pub fn check_element(&self, a: &AlgebraElement) -> Result<(), Error> {
        if let Some(k) = a.support().find(|&k| k >= self.dim()) {
            return Err(Error::IndexOutOfRange {
                index: k,
                dim: self.dim(),
            });
        }
        check_field(self.field, a)
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, Error> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    /// Unchecked product, for elements known to belong to this algebra.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (i, ca) in a.terms() {
            for (j, cb) in b.terms() {
                if let Some(p) = self.table.get(&(i, j)) {
                    let s = ca * cb;
                    for (k, cp) in p.terms() {
                        out.add_term(k, &(&s * cp));
                    }
                }
            }
        }
        out
    }

    pub fn mul3(&self, a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) -> AlgebraElement {
        self.mul(&self.mul(a, b), c)
    }

    pub fn to_vector(&self, a: &AlgebraElement) -> Vector {
        a.to_vector(self.field, self.dim())
    }

    /// `Some(d)` when `a` is non-zero and supported in the single degree `d`.
    pub fn homogeneous_degree(&self, a: &AlgebraElement) -> Option<Degree> {
        let mut degrees = a.support().map(|k| self.degree(k));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Checks grading compatibility, associativity on all basis triples and the unit
    /// laws. The result is cached.
    pub fn validate(&self) -> &ValidationReport {
        self.report.get_or_init(|| self.compute_validation())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn require_valid(&self) -> Result<(), Error> {
        match self.validate().violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidAlgebra(v.to_string())),
        }
    }

    fn compute_validation(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.dim();
        for (&(i, j), p) in &self.table {
            let expected = self.degree(i) + self.degree(j);
            for k in p.support() {
                if self.degree(k) != expected {
                    violations.push(Violation::Grading {
                        left: self.label(i).into(),
                        right: self.label(j).into(),
                        term: self.label(k).into(),
                    });
                }
            }
        }
        let basis: Vec<AlgebraElement> = (0..n).map(|k| self.basis_vector(k)).collect();
        for a in 0..n {
            for b in 0..n {
                let ab = self.basis_product(a, b);
                for c in 0..n {
                    let bc = self.basis_product(b, c);
                    if ab.is_zero() && bc.is_zero() {
                        continue;
                    }
                    if self.mul(&ab, &basis[c]) != self.mul(&basis[a], &bc) {
                        violations.push(Violation::Associativity {
                            a: self.label(a).into(),
                            b: self.label(b).into(),
                            c: self.label(c).into(),
                        });
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            if !u.is_zero() && self.homogeneous_degree(u) != Some(Degree::ZERO) {
                violations.push(Violation::UnitNotEvenDegreeZero);
            }
            for (k, b) in basis.iter().enumerate() {
                if &self.mul(u, b) != b {
                    violations.push(Violation::UnitLeft(self.label(k).into()));
                }
                if &self.mul(b, u) != b {
                    violations.push(Violation::UnitRight(self.label(k).into()));
                }
            }
        }
        ValidationReport { violations }
    }

    /// Graded dimension: one `q^n pi^eps` per basis element of degree `(n, eps)`.
    pub fn graded_dimension(&self) -> GradedDim {
        let mut g = GradedDim::zero();
        for b in &self.basis {
            g.add_term(b.degree, 1);
        }
        g
    }

    /// `e` is idempotent when `e*e = e` and `e` is even of degree zero.
    pub fn check_idempotent(&self, e: &AlgebraElement) -> IdempotentCheck {
        let failure = if e.is_zero() {
            None
        } else {
            match self.homogeneous_degree(e) {
                None => Some(IdempotentFailure::NotHomogeneous),
                Some(d) if d != Degree::ZERO => Some(IdempotentFailure::WrongDegree(d)),
                Some(_) => {
                    let sq = self.mul(e, e);
                    (sq != *e).then_some(IdempotentFailure::SquareDiffers(sq))
                }
            }
        };
        IdempotentCheck { failure }
    }

    /// Builds an element from `(label, integer coefficient)` pairs.
    pub fn element(&self, terms: &[(&str, i64)]) -> Result<AlgebraElement, Error> {
        let mut e = AlgebraElement::zero();
        for &(label, c) in terms {
            let k = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.into()))?;
            e.add_term(k, &self.field.from_i64(c));
        }
        Ok(e)
    }

    pub fn element_by_label(&self, label: &str) -> Result<AlgebraElement, Error> {
        self.element(&[(label, 1)])
    }

    /// Parses a linear combination such as `e0 + 2*a0_1 - 1/2*c0`.
    pub fn parse_element(&self, expr: &str) -> Result<AlgebraElement, Error> {
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty element expression".into()));
        }
        if compact == "0" {
            return Ok(AlgebraElement::zero());
        }
        let mut out = AlgebraElement::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ => (false, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let (coeff, label) = match term.rsplit_once('*') {
                Some((c, l)) => (self.field.parse_scalar(c)?, l),
                None => (self.field.one(), term),
            };
            let k = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.into()))?;
            let coeff = if negative { -coeff } else { coeff };
            out.add_term(k, &coeff);
        }
        Ok(out)
    }

    /// Renders an element as a linear combination of basis labels.
    pub fn render(&self, a: &AlgebraElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, (k, c)) in a.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if !abs.is_one() {
                s.push_str(&format!("{abs}*"));
            }
            s.push_str(self.label(k));
        }
        s
    }

    /// Matrix of left multiplication by `a` in the ambient basis.
    pub fn left_multiplication(&self, a: &AlgebraElement) -> ExactMatrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|k| self.to_vector(&self.mul(a, &self.basis_vector(k))))
            .collect();
        ExactMatrix::from_columns(self.field, n, &cols).expect("columns have length dim")
    }

    /// Solves for a two-sided identity element.
    pub fn find_unit(&self) -> Option<AlgebraElement> {
        let n = self.dim();
        if n == 0 {
            return Some(AlgebraElement::zero());
        }
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for left in [true, false] {
                let prods: Vec<AlgebraElement> = (0..n)
                    .map(|k| {
                        if left {
                            self.basis_product(k, j)
                        } else {
                            self.basis_product(j, k)
                        }
                    })
                    .collect();
                for t in 0..n {
                    rows.push(
                        prods
                            .iter()
                            .map(|p| p.coefficient(t).cloned().unwrap_or_else(|| self.field.zero()))
                            .collect::<Vec<_>>(),
                    );
                    rhs.push(if t == j { self.field.one() } else { self.field.zero() });
                }
            }
        }
        let m = ExactMatrix::from_rows(self.field, rows).ok()?;
        m.solve(&rhs).map(|v| AlgebraElement::from_vector(&v))
    }

    /// Label-keyed structural equality: same field, labels, degrees, products and unit,
    /// regardless of basis order.
    pub fn same_structure(&self, other: &SuperAlgebra) -> bool {
        if self.field != other.field || self.dim() != other.dim() {
            return false;
        }
        let mut map = Vec::with_capacity(self.dim());
        for b in &self.basis {
            match other.index_of(&b.label) {
                Some(k) if other.degree(k) == b.degree => map.push(k),
                _ => return false,
            }
        }
        let translate = |e: &AlgebraElement| {
            AlgebraElement::from_terms(e.terms().map(|(k, c)| (map[k], c.clone())))
        };
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if translate(&self.basis_product(i, j)) != other.basis_product(map[i], map[j]) {
                    return false;
                }
            }
        }
        match (&self.unit, &other.unit) {
            (None, None) => true,
            (Some(a), Some(b)) => translate(a) == *b,
            _ => false,
        }
    }
}

fn check_field(field: Field, a: &AlgebraElement) -> Result<(), Error> {
    match a.field() {
        Some(f) if f != field => Err(Error::MixedFields(field, f)),
        _ => {
            if let Some((_, c)) = a.terms().find(|(_, c)| c.field() != field) {
                return Err(Error::MixedFields(field, c.field()));
            }
            Ok(())
        }
    }
}
