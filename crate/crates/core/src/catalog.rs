//! Built-in example algebras: extended zigzag algebras, matrix superalgebras, direct
//! sums and quotients of path algebras.
//!
//! Path conventions: the arrow `a{i}_{j}` runs from vertex `j` to vertex `i`, and
//! products read right to left, so `e{i} * a{i}_{j} * e{j} = a{i}_{j}`. The loop
//! `c{j} = a{j}_{j+1} * a{j+1}_{j}` is the length-two cycle at `j`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{AlgebraElement, BasisElement, SuperAlgebra};
use crate::error::Error;
use crate::heredity::{AntiInvolution, BasedAlgebra, Cell, HeredityData, Poset};
use crate::linalg::{Degree, ExactMatrix, Field, Parity, Scalar};
use crate::truncation::{self, Bigrading, CellularCertificate, StandardBasisCertificate};

/// A catalog algebra with verified heredity data and optional extra structure.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub based: BasedAlgebra,
    pub involution: Option<AntiInvolution>,
    pub bigrading: Option<Bigrading>,
}

impl CatalogEntry {
    pub fn algebra(&self) -> &SuperAlgebra {
        self.based.algebra()
    }

    pub fn heredity(&self) -> &HeredityData {
        self.based.data()
    }
}

fn odd(b: bool) -> Parity {
    if b {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// The one-dimensional algebra `k`.
pub fn trivial_algebra(field: Field) -> SuperAlgebra {
    let one = AlgebraElement::basis(0, field);
    SuperAlgebra::new(
        field,
        vec![BasisElement::new("one", Degree::ZERO)],
        vec![((0, 0), one.clone())],
        Some(one),
    )
    .expect("k is well formed")
}

/// Basis labels of the extended zigzag algebra `Z(l)`, in basis order.
pub fn zigzag_labels(l: usize) -> Vec<String> {
    let mut labels: Vec<String> = (0..=l).map(|i| format!("e{i}")).collect();
    for j in 0..l {
        labels.push(format!("a{}_{}", j, j + 1));
        labels.push(format!("a{}_{}", j + 1, j));
    }
    labels.extend((0..l).map(|j| format!("c{j}")));
    labels
}

/// The extended zigzag algebra on vertices `0..=l` with its heredity data for the
/// order `0 < 1 < ... < l`, the anti-involution swapping `a{i}_{j}` and `a{j}_{i}`, and
/// the bigrading putting `X`-type arrows in `(1,0)`, `Y`-type arrows in `(0,1)` and the
/// loops in `(1,1)`.
pub fn extended_zigzag(l: usize, field: Field) -> Result<CatalogEntry, Error> {
    if l < 1 {
        return Err(Error::InvalidParameters("zigzag needs l >= 1".into()));
    }
    let labels = zigzag_labels(l);
    let idx: HashMap<&str, usize> = labels.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect();
    let e = |i: usize| idx[format!("e{i}").as_str()];
    let a = |i: usize, j: usize| idx[format!("a{i}_{j}").as_str()];
    let c = |j: usize| idx[format!("c{j}").as_str()];
    let basis: Vec<BasisElement> = labels
        .iter()
        .map(|s| {
            let d = match s.as_bytes()[0] {
                b'e' => Degree::ZERO,
                b'a' => Degree::new(1, Parity::Odd),
                _ => Degree::new(2, Parity::Even),
            };
            BasisElement::new(s.clone(), d)
        })
        .collect();
    let one = |k: usize| AlgebraElement::basis(k, field);
    let mut products: Vec<((usize, usize), AlgebraElement)> = Vec::new();
    for i in 0..=l {
        products.push(((e(i), e(i)), one(e(i))));
    }
    for j in 0..l {
        for (s, t) in [(j, j + 1), (j + 1, j)] {
            let arrow = a(s, t);
            products.push(((e(s), arrow), one(arrow)));
            products.push(((arrow, e(t)), one(arrow)));
        }
        products.push(((e(j), c(j)), one(c(j))));
        products.push(((c(j), e(j)), one(c(j))));
        products.push(((a(j, j + 1), a(j + 1, j)), one(c(j))));
        if j + 1 < l {
            products.push(((a(j + 1, j), a(j, j + 1)), one(c(j + 1))));
        }
    }
    let unit = AlgebraElement::from_terms((0..=l).map(|i| (e(i), field.one())));
    let algebra = SuperAlgebra::new(field, basis, products, Some(unit))?;

    let poset = Poset::chain((0..=l).map(|i| i.to_string()).collect());
    let mut cells = vec![Cell::new(vec![one(e(0))], vec![one(e(0))], 0)];
    for i in 1..=l {
        cells.push(Cell::new(
            vec![one(e(i)), one(a(i - 1, i))],
            vec![one(e(i)), one(a(i, i - 1))],
            0,
        ));
    }
    let data = HeredityData::new(poset, cells)?;

    let mut images: Vec<AlgebraElement> = (0..algebra.dim()).map(one).collect();
    let mut bigrading = vec![(Parity::Even, Parity::Even); algebra.dim()];
    for j in 0..l {
        images[a(j, j + 1)] = one(a(j + 1, j));
        images[a(j + 1, j)] = one(a(j, j + 1));
        bigrading[a(j, j + 1)] = (Parity::Odd, Parity::Even);
        bigrading[a(j + 1, j)] = (Parity::Even, Parity::Odd);
        bigrading[c(j)] = (Parity::Odd, Parity::Odd);
    }
    Ok(CatalogEntry {
        based: BasedAlgebra::new(algebra, data)?,
        involution: Some(AntiInvolution::new(images)),
        bigrading: Some(Bigrading::new(bigrading)),
    })
}

/// The truncation `eZe` of the extended zigzag algebra by `e = e0 + ... + e{l-1}`.
#[derive(Clone, Debug)]
pub struct TruncatedZigzag {
    pub algebra: SuperAlgebra,
    pub standard: StandardBasisCertificate,
    pub cellular: CellularCertificate,
    pub surviving: Vec<usize>,
}

pub fn truncated_zigzag(l: usize, field: Field) -> Result<TruncatedZigzag, Error> {
    let z = extended_zigzag(l, field)?;
    let e = z
        .algebra()
        .parse_element(&(0..l).map(|i| format!("e{i}")).collect::<Vec<_>>().join(" + "))?;
    let ai = truncation::classify_idempotent(&z.based, &e)?;
    let t = truncation::truncate(&z.based, &ai, z.involution.as_ref())?;
    let surviving = truncation::surviving_simples(&z.based, &ai)?;
    Ok(TruncatedZigzag {
        algebra: t.algebra,
        standard: t.standard,
        cellular: t.cellular,
        surviving,
    })
}

/// Label of the matrix unit `E_{r,s}` (1-based).
pub fn matrix_unit_label(r: usize, s: usize) -> String {
    format!("E{r}_{s}")
}

/// The matrix superalgebra `M_{n|m}` with `deg E_{r,s} = r - s`, odd exactly when one of
/// `r, s` exceeds `n`, and the heredity data on the singleton poset `{•}` with
/// `e = E_{1,1}`, `X = {E_{r,1}}` and `Y = {E_{1,s}}`. The involution is the transpose.
pub fn matrix_superalgebra(n: usize, m: usize, field: Field) -> Result<CatalogEntry, Error> {
    if n < 1 {
        return Err(Error::InvalidParameters("matrix superalgebra needs n >= 1".into()));
    }
    let size = n + m;
    let k = |r: usize, s: usize| (r - 1) * size + (s - 1);
    let mut basis = Vec::with_capacity(size * size);
    for r in 1..=size {
        for s in 1..=size {
            let parity = odd((r > n) != (s > n));
            basis.push(BasisElement::new(
                matrix_unit_label(r, s),
                Degree::new(r as i64 - s as i64, parity),
            ));
        }
    }
    let one = |i: usize| AlgebraElement::basis(i, field);
    let mut products = Vec::new();
    for r in 1..=size {
        for s in 1..=size {
            for t in 1..=size {
                products.push(((k(r, s), k(s, t)), one(k(r, t))));
            }
        }
    }
    let unit = AlgebraElement::from_terms((1..=size).map(|r| (k(r, r), field.one())));
    let algebra = SuperAlgebra::new(field, basis, products, Some(unit))?;
    let poset = Poset::chain(vec!["•".to_string()]);
    let cell = Cell::new(
        (1..=size).map(|r| one(k(r, 1))).collect(),
        (1..=size).map(|s| one(k(1, s))).collect(),
        0,
    );
    let data = HeredityData::new(poset, vec![cell])?;
    let mut images = vec![AlgebraElement::zero(); size * size];
    for r in 1..=size {
        for s in 1..=size {
            images[k(r, s)] = one(k(s, r));
        }
    }
    Ok(CatalogEntry {
        based: BasedAlgebra::new(algebra, data)?,
        involution: Some(AntiInvolution::new(images)),
        bigrading: None,
    })
}

/// Direct sum with basis labels prefixed by `A.` and `B.` and poset labels by `A:` and
/// `B:`. The poset is the disjoint union.
pub fn direct_sum(a: &CatalogEntry, b: &CatalogEntry) -> Result<CatalogEntry, Error> {
    let (x, y) = (a.algebra(), b.algebra());
    if x.field() != y.field() {
        return Err(Error::MixedFields(x.field(), y.field()));
    }
    let off = x.dim();
    let shift = |e: &AlgebraElement| AlgebraElement::from_terms(e.terms().map(|(k, c)| (k + off, c.clone())));
    let basis = x
        .basis()
        .iter()
        .map(|bb| BasisElement::new(format!("A.{}", bb.label), bb.degree))
        .chain(y.basis().iter().map(|bb| BasisElement::new(format!("B.{}", bb.label), bb.degree)))
        .collect();
    let products = x
        .products()
        .map(|(k, v)| (k, v.clone()))
        .chain(y.products().map(|((i, j), v)| ((i + off, j + off), shift(v))))
        .collect::<Vec<_>>();
    let unit = match (x.unit(), y.unit()) {
        (Some(u), Some(v)) => Some(u + &shift(v)),
        _ => None,
    };
    let algebra = SuperAlgebra::new(x.field(), basis, products, unit)?;
    let poset = a.heredity().poset().disjoint_union(b.heredity().poset(), "A:", "B:");
    let cells = a
        .heredity()
        .cells()
        .iter()
        .cloned()
        .chain(b.heredity().cells().iter().map(|c| {
            Cell::new(c.x.iter().map(shift).collect(), c.y.iter().map(shift).collect(), c.initial)
        }))
        .collect();
    let data = HeredityData::new(poset, cells)?;
    let involution = match (&a.involution, &b.involution) {
        (Some(s), Some(t)) => Some(AntiInvolution::new(
            s.images.iter().cloned().chain(t.images.iter().map(shift)).collect(),
        )),
        _ => None,
    };
    let bigrading = match (&a.bigrading, &b.bigrading) {
        (Some(s), Some(t)) => Some(Bigrading::new(
            s.degrees.iter().chain(&t.degrees).copied().collect(),
        )),
        _ => None,
    };
    Ok(CatalogEntry {
        based: BasedAlgebra::new(algebra, data)?,
        involution,
        bigrading,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
    pub degree: Degree,
}

/// A linear combination of paths, each path written as arrow labels in product order
/// (rightmost arrow is traversed first).
pub type Relation = Vec<(i64, Vec<String>)>;

/// A quiver with relations. Every path longer than `max_length` must vanish in the
/// quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub max_length: usize,
}

/// Upper bound on the number of enumerated paths.
const MAX_PATHS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Path {
    Vertex(usize),
    /// Arrow indices in product order.
    Arrows(Vec<usize>),
}

impl QuiverPresentation {
    /// The zigzag quiver on `0..=l` with all four zigzag relations, capped at length 2.
    pub fn zigzag(l: usize) -> Self {
        let vertices = (0..=l).map(|i| format!("e{i}")).collect();
        let mut arrows = Vec::new();
        for j in 0..l {
            for (s, t) in [(j + 1, j), (j, j + 1)] {
                arrows.push(Arrow {
                    label: format!("a{t}_{s}"),
                    source: s,
                    target: t,
                    degree: Degree::new(1, Parity::Odd),
                });
            }
        }
        let mut relations: Vec<Relation> = Vec::new();
        let composable = |p: &Arrow, q: &Arrow| q.target == p.source;
        for p in &arrows {
            for q in &arrows {
                if !composable(p, q) {
                    continue;
                }
                for r in &arrows {
                    if composable(q, r) {
                        relations.push(vec![(1, vec![p.label.clone(), q.label.clone(), r.label.clone()])]);
                    }
                }
                if p.target != q.source {
                    relations.push(vec![(1, vec![p.label.clone(), q.label.clone()])]);
                }
            }
        }
        for j in 1..l {
            relations.push(vec![
                (1, vec![format!("a{}_{}", j, j - 1), format!("a{}_{}", j - 1, j)]),
                (-1, vec![format!("a{}_{}", j, j + 1), format!("a{}_{}", j + 1, j)]),
            ]);
        }
        relations.push(vec![(1, vec![format!("a{}_{}", l, l - 1), format!("a{}_{}", l - 1, l)])]);
        QuiverPresentation {
            vertices,
            arrows,
            relations,
            max_length: 2,
        }
    }
}

/// Quotient of the path algebra by the ideal generated by homogeneous relations. The
/// basis consists of normal-form paths; among paths of one length, lexicographically
/// smaller labels are rewritten in terms of larger ones.
pub fn path_algebra_quotient(q: &QuiverPresentation, field: Field) -> Result<SuperAlgebra, Error> {
    let nv = q.vertices.len();
    for a in &q.arrows {
        if a.source >= nv || a.target >= nv {
            return Err(Error::InvalidParameters(format!("arrow {} has an unknown endpoint", a.label)));
        }
    }
    let arrow_index: HashMap<&str, usize> =
        q.arrows.iter().enumerate().map(|(k, a)| (a.label.as_str(), k)).collect();
    let source = |p: &Path| match p {
        Path::Vertex(v) => *v,
        Path::Arrows(a) => q.arrows[*a.last().expect("non-empty")].source,
    };
    let target = |p: &Path| match p {
        Path::Vertex(v) => *v,
        Path::Arrows(a) => q.arrows[a[0]].target,
    };
    let len = |p: &Path| match p {
        Path::Vertex(_) => 0,
        Path::Arrows(a) => a.len(),
    };
    let compose = |p: &Path, r: &Path| -> Option<Path> {
        if source(p) != target(r) {
            return None;
        }
        Some(match (p, r) {
            (Path::Vertex(_), _) => r.clone(),
            (_, Path::Vertex(_)) => p.clone(),
            (Path::Arrows(a), Path::Arrows(b)) => Path::Arrows(a.iter().chain(b).copied().collect()),
        })
    };
    let cap = q.max_length + 1;
    let mut by_length: Vec<Vec<Path>> = vec![(0..nv).map(Path::Vertex).collect()];
    by_length.push((0..q.arrows.len()).map(|k| Path::Arrows(vec![k])).collect());
    for l in 2..=cap {
        let mut next = Vec::new();
        for p in &by_length[l - 1] {
            for k in 0..q.arrows.len() {
                next.extend(compose(p, &Path::Arrows(vec![k])));
            }
        }
        if next.len() + by_length.iter().map(Vec::len).sum::<usize>() > MAX_PATHS {
            return Err(Error::TooLarge(format!("more than {MAX_PATHS} paths")));
        }
        by_length.push(next);
    }
    let path_label = |p: &Path| match p {
        Path::Vertex(v) => q.vertices[*v].clone(),
        Path::Arrows(a) => a.iter().map(|&k| q.arrows[k].label.as_str()).collect::<Vec<_>>().join("."),
    };
    // Column order: by length, then label.
    let mut paths: Vec<Path> = by_length.into_iter().flatten().collect();
    paths.sort_by_key(|p| (len(p), path_label(p)));
    let col: BTreeMap<Path, usize> = paths.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();

    let mut relations: Vec<(usize, Vec<(Scalar, Path)>)> = Vec::new();
    for rel in &q.relations {
        let mut terms = Vec::new();
        let mut length = None;
        for (c, labels) in rel {
            let mut ks = Vec::with_capacity(labels.len());
            for l in labels {
                ks.push(*arrow_index.get(l.as_str()).ok_or_else(|| Error::UnknownArrow(l.clone()))?);
            }
            if ks.is_empty() {
                return Err(Error::InvalidParameters("empty path in relation".into()));
            }
            for w in ks.windows(2) {
                if q.arrows[w[0]].source != q.arrows[w[1]].target {
                    return Err(Error::InvalidParameters(format!("{} is not a path", labels.join("."))));
                }
            }
            if *length.get_or_insert(ks.len()) != ks.len() {
                return Err(Error::InvalidParameters("relation is not homogeneous in path length".into()));
            }
            terms.push((field.from_i64(*c), Path::Arrows(ks)));
        }
        if let Some(l) = length {
            relations.push((l, terms));
        }
    }
    let mut rows = Vec::new();
    for (l, terms) in &relations {
        if *l > cap {
            continue;
        }
        for p in paths.iter().filter(|p| len(p) + l <= cap) {
            for r in paths.iter().filter(|r| len(p) + l + len(r) <= cap) {
                let mut row = vec![field.zero(); paths.len()];
                let mut any = false;
                for (c, t) in terms {
                    if let Some(pt) = compose(p, t).and_then(|pt| compose(&pt, r)) {
                        let k = col[&pt];
                        row[k] = &row[k] + c;
                        any = true;
                    }
                }
                if any && row.iter().any(|s| !s.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let rref = if rows.is_empty() {
        None
    } else {
        Some(ExactMatrix::from_rows(field, rows)?.rref())
    };
    let pivot_row: HashMap<usize, usize> = rref
        .as_ref()
        .map(|r| r.pivots.iter().enumerate().map(|(row, &c)| (c, row)).collect())
        .unwrap_or_default();
    if paths.iter().any(|p| len(p) == cap && !pivot_row.contains_key(&col[p])) {
        return Err(Error::NotFiniteDimensional(cap));
    }
    let basis_paths: Vec<usize> = (0..paths.len())
        .filter(|&k| len(&paths[k]) < cap && !pivot_row.contains_key(&k))
        .collect();
    let basis_pos: HashMap<usize, usize> = basis_paths.iter().enumerate().map(|(b, &k)| (k, b)).collect();
    // Normal form of the path in column `k`.
    let normal_form = |k: usize| -> AlgebraElement {
        match pivot_row.get(&k) {
            None => AlgebraElement::basis(basis_pos[&k], field),
            Some(&row) => {
                let m = &rref.as_ref().expect("pivot implies rows").matrix;
                AlgebraElement::from_terms(
                    basis_paths
                        .iter()
                        .enumerate()
                        .map(|(b, &c)| (b, -m.get(row, c))),
                )
            }
        }
    };
    let degree_of = |p: &Path| match p {
        Path::Vertex(_) => Degree::ZERO,
        Path::Arrows(a) => a.iter().fold(Degree::ZERO, |d, &k| d + q.arrows[k].degree),
    };
    let basis: Vec<BasisElement> = basis_paths
        .iter()
        .map(|&k| BasisElement::new(path_label(&paths[k]), degree_of(&paths[k])))
        .collect();
    let mut products = Vec::new();
    for (i, &ki) in basis_paths.iter().enumerate() {
        for (j, &kj) in basis_paths.iter().enumerate() {
            if let Some(pq) = compose(&paths[ki], &paths[kj]) {
                if len(&pq) < cap {
                    let v = normal_form(col[&pq]);
                    if !v.is_zero() {
                        products.push(((i, j), v));
                    }
                }
            }
        }
    }
    let unit = AlgebraElement::from_terms((0..nv).map(|v| (basis_pos[&col[&Path::Vertex(v)]], field.one())));
    SuperAlgebra::new(field, basis, products, Some(unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::GradedDim;

    const Q: Field = Field::Rational;

    #[test]
    fn zigzag_dimensions() {
        for l in 1..=4 {
            let z = extended_zigzag(l, Q).unwrap();
            assert_eq!(z.algebra().dim(), 4 * l + 1);
            assert_eq!(z.based.basis_len(), 4 * l + 1);
        }
        assert!(extended_zigzag(0, Q).is_err());
    }

    #[test]
    fn zigzag_relations() {
        let z = extended_zigzag(2, Q).unwrap();
        let a = z.algebra();
        let el = |s: &str| a.parse_element(s).unwrap();
        assert_eq!(a.mul(&el("a0_1"), &el("a1_0")), el("c0"));
        assert_eq!(a.mul(&el("a1_0"), &el("a0_1")), el("c1"));
        assert_eq!(a.mul(&el("a1_2"), &el("a2_1")), el("c1"));
        assert!(a.mul(&el("a2_1"), &el("a1_2")).is_zero());
        assert!(a.mul(&el("a0_1"), &el("c1")).is_zero());
        // Odd part is spanned by the arrows.
        let odd: Vec<&str> = a
            .basis()
            .iter()
            .filter(|b| b.degree.parity == Parity::Odd)
            .map(|b| b.label.as_str())
            .collect();
        assert_eq!(odd, ["a0_1", "a1_0", "a1_2", "a2_1"]);
    }

    #[test]
    fn matrix_graded_dimension() {
        let m = matrix_superalgebra(1, 1, Q).unwrap();
        assert_eq!(m.algebra().graded_dimension().to_string(), "q^-1*pi + 2 + q*pi");
        assert!(matrix_superalgebra(0, 2, Q).is_err());
        let k = matrix_superalgebra(1, 0, Q).unwrap();
        assert!(k.algebra().graded_dimension().is_one());
    }

    #[test]
    fn path_algebra_matches_zigzag() {
        for l in 1..=3 {
            let p = path_algebra_quotient(&QuiverPresentation::zigzag(l), Q).unwrap();
            let z = extended_zigzag(l, Q).unwrap();
            assert_eq!(p.dim(), 4 * l + 1);
            let rename = |s: &str| -> String {
                match s.strip_prefix('c') {
                    Some(j) => {
                        let j: usize = j.parse().unwrap();
                        format!("a{}_{}.a{}_{}", j, j + 1, j + 1, j)
                    }
                    None => s.to_string(),
                }
            };
            for i in 0..z.algebra().dim() {
                for j in 0..z.algebra().dim() {
                    let zi = p.index_of(&rename(z.algebra().label(i))).unwrap();
                    let zj = p.index_of(&rename(z.algebra().label(j))).unwrap();
                    let expected = z.algebra().basis_product(i, j);
                    let got = p.basis_product(zi, zj);
                    let got_labels: Vec<String> = got.support().map(|k| p.label(k).to_string()).collect();
                    let exp_labels: Vec<String> =
                        expected.support().map(|k| rename(z.algebra().label(k))).collect();
                    assert_eq!(got_labels, exp_labels);
                }
            }
            assert_eq!(p.graded_dimension(), z.algebra().graded_dimension());
        }
    }

    #[test]
    fn dual_numbers_from_loop() {
        let q = QuiverPresentation {
            vertices: vec!["v".into()],
            arrows: vec![Arrow { label: "x".into(), source: 0, target: 0, degree: Degree::new(2, Parity::Even) }],
            relations: vec![vec![(1, vec!["x".into(), "x".into()])]],
            max_length: 1,
        };
        let a = path_algebra_quotient(&q, Q).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_valid());
        assert_eq!(a.graded_dimension(), &GradedDim::one() + &GradedDim::q_pi(2, Parity::Even));
    }

    #[test]
    fn free_loop_is_infinite() {
        let q = QuiverPresentation {
            vertices: vec!["v".into()],
            arrows: vec![Arrow { label: "x".into(), source: 0, target: 0, degree: Degree::ZERO }],
            relations: vec![],
            max_length: 3,
        };
        assert!(matches!(path_algebra_quotient(&q, Q), Err(Error::NotFiniteDimensional(4))));
    }

    #[test]
    fn unknown_arrow_and_inhomogeneous_relation() {
        let mut q = QuiverPresentation::zigzag(1);
        q.relations.push(vec![(1, vec!["b9".into()])]);
        assert!(matches!(path_algebra_quotient(&q, Q), Err(Error::UnknownArrow(_))));
        let mut q = QuiverPresentation::zigzag(1);
        q.relations.push(vec![(1, vec!["a0_1".into()]), (1, vec!["a0_1".into(), "a1_0".into(), "a0_1".into()])]);
        assert!(matches!(path_algebra_quotient(&q, Q), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn direct_sum_is_based() {
        let s = direct_sum(&extended_zigzag(1, Q).unwrap(), &matrix_superalgebra(1, 1, Q).unwrap()).unwrap();
        assert_eq!(s.algebra().dim(), 9);
        assert_eq!(s.heredity().poset().len(), 3);
        assert!(s.algebra().index_of("B.E1_2").is_some());
    }
}
