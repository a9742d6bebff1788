//! Idempotent truncations `eAe`, surviving simples and conformity of heredity data.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::{AlgebraElement, BasisElement, IdempotentFailure, SuperAlgebra};
use crate::error::Error;
use crate::heredity::{
    check_standardly_based, AntiInvolution, BasedAlgebra, Cell, HeredityData, HeredityReport,
    Poset, StandardBasisCandidate, StandardBasisReport,
};
use crate::linalg::{Parity, SpanCoordinates, Vector};
use crate::modules::{
    e_weight_graded_dim, radical_and_simple, solve_unitriangular, standard_module,
    DecompositionMatrix, Side,
};

pub type StandardBasisCertificate = StandardBasisReport;

/// A `Z/2 x Z/2` degree for every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigrading {
    pub degrees: Vec<(Parity, Parity)>,
}

impl Bigrading {
    pub fn new(degrees: Vec<(Parity, Parity)>) -> Self {
        Bigrading { degrees }
    }
}

/// How an idempotent acts on the heredity data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedIdempotent {
    pub idempotent: AlgebraElement,
    /// Indices into `X(i)` of the elements fixed by `e`.
    pub x_bar: Vec<Vec<usize>>,
    pub y_bar: Vec<Vec<usize>>,
    /// Cells with both `X̄(i)` and `Ȳ(i)` non-empty, in index order.
    pub cells: Vec<usize>,
    pub adapted: bool,
    pub strongly_adapted: bool,
    pub witness: Option<String>,
}

/// Classifies an idempotent; failing to be adapted is an outcome, not an error.
pub fn classify_idempotent(b: &BasedAlgebra, e: &AlgebraElement) -> Result<AdaptedIdempotent, Error> {
    let alg = b.algebra();
    alg.check_element(e)?;
    if let Some(f) = alg.check_idempotent(e).failure {
        return Err(Error::NotIdempotent(match f {
            IdempotentFailure::NotHomogeneous => format!("{} is not homogeneous", alg.render(e)),
            IdempotentFailure::WrongDegree(d) => format!("{} has degree {d}", alg.render(e)),
            IdempotentFailure::SquareDiffers(sq) => {
                format!("({})^2 = {}", alg.render(e), alg.render(&sq))
            }
        }));
    }
    let mut out = AdaptedIdempotent {
        idempotent: e.clone(),
        x_bar: Vec::new(),
        y_bar: Vec::new(),
        cells: Vec::new(),
        adapted: true,
        strongly_adapted: false,
        witness: None,
    };
    for (i, cell) in b.data().cells().iter().enumerate() {
        let mut xs = Vec::new();
        for (k, x) in cell.x.iter().enumerate() {
            let p = alg.mul(e, x);
            if p == *x {
                xs.push(k);
            } else if !p.is_zero() && out.adapted {
                out.adapted = false;
                out.witness = Some(format!("e*{} is neither {} nor 0", alg.render(x), alg.render(x)));
            }
        }
        let mut ys = Vec::new();
        for (k, y) in cell.y.iter().enumerate() {
            let p = alg.mul(y, e);
            if p == *y {
                ys.push(k);
            } else if !p.is_zero() && out.adapted {
                out.adapted = false;
                out.witness = Some(format!("{}*e is neither {} nor 0", alg.render(y), alg.render(y)));
            }
        }
        if !xs.is_empty() && !ys.is_empty() {
            out.cells.push(i);
        }
        out.x_bar.push(xs);
        out.y_bar.push(ys);
    }
    out.strongly_adapted = out.adapted
        && out.cells.iter().all(|&i| {
            let ei = b.data().initial(i);
            alg.mul(e, ei) == *ei && alg.mul(ei, e) == *ei
        });
    if out.adapted && !out.strongly_adapted {
        out.witness = out
            .cells
            .iter()
            .find(|&&i| alg.mul(e, b.data().initial(i)) != *b.data().initial(i))
            .map(|&i| format!("e does not fix e_{}", b.poset().label(i)));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellularCertificate {
    Certified,
    NotRequested,
    Withheld(String),
}

impl CellularCertificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, CellularCertificate::Certified)
    }
}

/// The truncated algebra `eAe` on the basis `{xy : x in X̄(i), y in Ȳ(i)}`.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub algebra: SuperAlgebra,
    /// Each basis element of `eAe` as an element of `A`.
    pub embedding: Vec<AlgebraElement>,
    /// The cells of `Ī`, as ambient poset indices.
    pub cells: Vec<usize>,
    /// The order induced on `Ī`.
    pub poset: Poset,
    pub standard: StandardBasisCertificate,
    /// Present when the idempotent is strongly adapted.
    pub heredity: Option<BasedAlgebra>,
    pub involution: Option<AntiInvolution>,
    pub cellular: CellularCertificate,
}

impl Truncation {
    /// An element of `A` lying in `eAe`, in the truncated basis.
    pub fn pull_back(&self, v: &AlgebraElement) -> Option<AlgebraElement> {
        let field = self.algebra.field();
        let dim = self.embedding.iter().flat_map(|e| e.support()).chain(v.support()).max().map_or(0, |m| m + 1);
        let cols: Vec<Vector> = self.embedding.iter().map(|e| e.to_vector(field, dim)).collect();
        let span = SpanCoordinates::new(field, dim, &cols)?;
        span.coordinates(&v.to_vector(field, dim)).map(|c| AlgebraElement::from_vector(&c))
    }
}

/// A subalgebra spanned by independent elements, materialized with its own structure
/// constants. Basis elements that are ambient basis vectors keep their label; others
/// get `{prefix}{k}`.
pub(crate) struct Materialized {
    pub algebra: SuperAlgebra,
    pub span: SpanCoordinates,
}

pub(crate) fn materialize(
    alg: &SuperAlgebra,
    elements: &[AlgebraElement],
    prefix: &str,
    unit: Option<&AlgebraElement>,
) -> Result<Result<Materialized, String>, Error> {
    let field = alg.field();
    let n = alg.dim();
    let cols: Vec<Vector> = elements.iter().map(|e| alg.to_vector(e)).collect();
    let span = SpanCoordinates::new(field, n, &cols)
        .ok_or_else(|| Error::Corrupt("spanning elements are linearly dependent".into()))?;
    let mut taken: HashSet<String> = elements
        .iter()
        .filter_map(|e| e.as_basis_vector().map(|k| alg.label(k).to_string()))
        .collect();
    let mut basis = Vec::with_capacity(elements.len());
    for (k, e) in elements.iter().enumerate() {
        let degree = alg
            .homogeneous_degree(e)
            .ok_or_else(|| Error::Corrupt(format!("{} is not homogeneous", alg.render(e))))?;
        let label = match e.as_basis_vector() {
            Some(j) => alg.label(j).to_string(),
            None => {
                let mut l = format!("{prefix}{k}");
                while !taken.insert(l.clone()) {
                    l.push('\'');
                }
                l
            }
        };
        basis.push(BasisElement::new(label, degree));
    }
    let mut products = Vec::new();
    for (i, u) in elements.iter().enumerate() {
        for (j, v) in elements.iter().enumerate() {
            let p = alg.mul(u, v);
            if p.is_zero() {
                continue;
            }
            match span.coordinates(&alg.to_vector(&p)) {
                Some(c) => products.push(((i, j), AlgebraElement::from_vector(&c))),
                None => {
                    return Ok(Err(format!(
                        "{} * {} = {} leaves the span",
                        alg.render(u),
                        alg.render(v),
                        alg.render(&p)
                    )))
                }
            }
        }
    }
    let unit = match unit {
        Some(u) => Some(AlgebraElement::from_vector(
            &span
                .coordinates(&alg.to_vector(u))
                .ok_or_else(|| Error::Corrupt("unit outside the subalgebra".into()))?,
        )),
        None => None,
    };
    let mut sub = SuperAlgebra::new(field, basis.clone(), products.clone(), unit.clone())?;
    if unit.is_none() {
        if let Some(u) = sub.find_unit() {
            sub = SuperAlgebra::new(field, basis, products, Some(u))?;
        }
    }
    Ok(Ok(Materialized { algebra: sub, span }))
}

/// Builds `eAe` with its standard-basis certificate, heredity data when `e` is strongly
/// adapted, and a cellular certificate when an involution is supplied.
pub fn truncate(
    b: &BasedAlgebra,
    ai: &AdaptedIdempotent,
    tau: Option<&AntiInvolution>,
) -> Result<Truncation, Error> {
    if !ai.adapted {
        return Err(Error::NotAdapted(
            ai.witness.clone().unwrap_or_else(|| "idempotent is not adapted".into()),
        ));
    }
    let alg = b.algebra();
    let data = b.data();
    let mut embedding = Vec::new();
    let mut grid: Vec<Vec<Vec<usize>>> = Vec::new();
    for &i in &ai.cells {
        let cell = data.cell(i);
        let mut rows = Vec::new();
        for &x in &ai.x_bar[i] {
            let mut row = Vec::new();
            for &y in &ai.y_bar[i] {
                row.push(embedding.len());
                embedding.push(alg.mul(&cell.x[x], &cell.y[y]));
            }
            rows.push(row);
        }
        grid.push(rows);
    }
    let m = match materialize(alg, &embedding, "t", Some(&ai.idempotent))? {
        Ok(m) => m,
        Err(w) => return Err(Error::Corrupt(format!("eAe is not closed: {w}"))),
    };
    let sub = m.algebra;
    if sub.dim() != rank_of_sandwich(alg, &ai.idempotent) {
        return Err(Error::Corrupt("truncated basis does not span eAe".into()));
    }
    let poset = b.poset().restrict(&ai.cells);
    let candidate = StandardBasisCandidate {
        poset: poset.clone(),
        cells: grid
            .iter()
            .map(|rows| rows.iter().map(|r| r.iter().map(|&k| sub.basis_vector(k)).collect()).collect())
            .collect(),
    };
    let standard = check_standardly_based(&sub, &candidate)?;

    let local = |v: &AlgebraElement| -> Result<AlgebraElement, Error> {
        m.span
            .coordinates(&alg.to_vector(v))
            .map(|c| AlgebraElement::from_vector(&c))
            .ok_or_else(|| Error::Corrupt(format!("{} is not in eAe", alg.render(v))))
    };
    let heredity = if ai.strongly_adapted {
        let mut cells = Vec::new();
        for &i in &ai.cells {
            let cell = data.cell(i);
            let x: Vec<AlgebraElement> =
                ai.x_bar[i].iter().map(|&k| local(&cell.x[k])).collect::<Result<_, _>>()?;
            let y: Vec<AlgebraElement> =
                ai.y_bar[i].iter().map(|&k| local(&cell.y[k])).collect::<Result<_, _>>()?;
            let initial = ai.x_bar[i]
                .iter()
                .position(|&k| k == cell.initial)
                .ok_or_else(|| Error::Corrupt("strongly adapted idempotent lost e_i".into()))?;
            cells.push(Cell::new(x, y, initial));
        }
        let hd = HeredityData::new(poset.clone(), cells)?;
        Some(BasedAlgebra::new(sub.clone(), hd)?)
    } else {
        None
    };

    let (involution, cellular) = match tau {
        None => (None, CellularCertificate::NotRequested),
        Some(t) => {
            if t.apply(&ai.idempotent) != ai.idempotent {
                (None, CellularCertificate::Withheld("tau(e) != e".into()))
            } else {
                let images: Vec<AlgebraElement> =
                    embedding.iter().map(|v| local(&t.apply(v))).collect::<Result<_, _>>()?;
                let restricted = AntiInvolution::new(images);
                let cert = cellular_certificate(&sub, &restricted, &grid);
                (Some(restricted), cert)
            }
        }
    };
    Ok(Truncation {
        algebra: sub,
        embedding,
        cells: ai.cells.clone(),
        poset,
        standard,
        heredity,
        involution,
        cellular,
    })
}

/// `dim eAe`, computed from the ambient multiplication.
fn rank_of_sandwich(alg: &SuperAlgebra, e: &AlgebraElement) -> usize {
    let vecs: Vec<Vector> = (0..alg.dim())
        .map(|k| alg.to_vector(&alg.mul3(e, &alg.basis_vector(k), e)))
        .collect();
    crate::linalg::rank_of(alg.field(), alg.dim(), &vecs)
}

fn cellular_certificate(
    sub: &SuperAlgebra,
    tau: &AntiInvolution,
    grid: &[Vec<Vec<usize>>],
) -> CellularCertificate {
    let n = sub.dim();
    for a in 0..n {
        if tau.apply(&tau.images[a]) != sub.basis_vector(a) {
            return CellularCertificate::Withheld(format!("tau is not involutive at {}", sub.label(a)));
        }
        for b in 0..n {
            if tau.apply(&sub.basis_product(a, b)) != sub.mul(&tau.images[b], &tau.images[a]) {
                return CellularCertificate::Withheld(format!(
                    "tau is not anti-multiplicative at {}, {}",
                    sub.label(a),
                    sub.label(b)
                ));
            }
        }
    }
    for rows in grid {
        for (x, row) in rows.iter().enumerate() {
            for (y, &k) in row.iter().enumerate() {
                let swapped = rows.get(y).and_then(|r| r.get(x));
                match swapped {
                    Some(&s) if tau.images[k] == sub.basis_vector(s) => {}
                    _ => {
                        return CellularCertificate::Withheld(format!(
                            "tau({}) is not the transposed basis element",
                            sub.label(k)
                        ))
                    }
                }
            }
        }
    }
    CellularCertificate::Certified
}

/// Cells `i` of `Ī` for which some `y x` with `x in X̄(i)`, `y in Ȳ(i)` survives modulo
/// `A^{>i}`; equivalently `e L(i) != 0`.
pub fn surviving_simples(b: &BasedAlgebra, ai: &AdaptedIdempotent) -> Result<Vec<usize>, Error> {
    let alg = b.algebra();
    let cells = &b.data().cells();
    Ok(ai
        .cells
        .iter()
        .copied()
        .filter(|&i| {
            ai.x_bar[i].iter().any(|&x| {
                ai.y_bar[i].iter().any(|&y| {
                    let r = b.reduce_mod_above(&alg.mul(&cells[i].y[y], &cells[i].x[x]), i);
                    r.iter().any(|s| !s.is_zero())
                })
            })
        })
        .collect())
}

/// Decomposition numbers of the truncated standard modules `eΔ(i)`, `i in Ī`, in terms
/// of the simples `eL(j)`, `j in Ī'`, weighted by the `e_k` with `k in Ī'`.
pub fn truncated_decomposition(
    b: &BasedAlgebra,
    ai: &AdaptedIdempotent,
) -> Result<DecompositionMatrix, Error> {
    let alg = b.algebra();
    let e = &ai.idempotent;
    let surviving = surviving_simples(b, ai)?;
    let ext = b.poset().linear_extension();
    let rows: Vec<usize> = ext.iter().copied().filter(|i| ai.cells.contains(i)).collect();
    let cols: Vec<usize> = ext.iter().copied().filter(|j| surviving.contains(j)).collect();
    let mut weights_idem = Vec::new();
    for &k in &cols {
        let ek = b.data().initial(k);
        if alg.mul(e, ek) != *ek || alg.mul(ek, e) != *ek {
            return Err(Error::Hypothesis(format!(
                "e_{} does not lie in eAe",
                b.poset().label(k)
            )));
        }
        weights_idem.push(ek.clone());
    }
    let simples = cols
        .iter()
        .map(|&j| radical_and_simple(b, j))
        .collect::<Result<Vec<_>, _>>()?;
    let n: Vec<_> = weights_idem
        .iter()
        .map(|ek| simples.iter().map(|s| e_weight_graded_dim(&s.module, ek)).collect())
        .collect();
    let weights: Vec<_> = rows
        .iter()
        .map(|&i| {
            let d = standard_module(b, i, Side::Left);
            weights_idem.iter().map(|ek| e_weight_graded_dim(&d, ek)).collect()
        })
        .collect();
    let entries = solve_unitriangular(&weights, &n)?;
    let label = |v: &[usize]| v.iter().map(|&i| b.poset().label(i).to_string()).collect();
    Ok(DecompositionMatrix {
        row_labels: label(&rows),
        col_labels: label(&cols),
        entries,
    })
}

/// Outcome of the conformity check.
#[derive(Clone, Debug)]
pub struct ConformityReport {
    /// Spanning products `xy` of even `x`, `y`, as elements of `A`.
    pub basis: Vec<AlgebraElement>,
    pub closed: bool,
    /// The even-product subalgebra with its own structure constants.
    pub subalgebra: Option<SuperAlgebra>,
    pub heredity: Option<HeredityReport>,
    /// Verified heredity data on the subalgebra.
    pub based: Option<BasedAlgebra>,
    pub witness: Option<String>,
}

impl ConformityReport {
    pub fn passed(&self) -> bool {
        self.closed && self.based.is_some()
    }
}

/// Builds the span of even-by-even products and checks that the even parts of the
/// heredity data are heredity data for it.
pub fn conformity_check(b: &BasedAlgebra) -> Result<ConformityReport, Error> {
    let alg = b.algebra();
    let data = b.data();
    let even = |v: &AlgebraElement| {
        alg.homogeneous_degree(v).map(|d| d.parity) == Some(Parity::Even)
    };
    let mut basis = Vec::new();
    let mut x0 = Vec::new();
    let mut y0 = Vec::new();
    for cell in data.cells() {
        let xs: Vec<usize> = (0..cell.x.len()).filter(|&k| even(&cell.x[k])).collect();
        let ys: Vec<usize> = (0..cell.y.len()).filter(|&k| even(&cell.y[k])).collect();
        for &x in &xs {
            for &y in &ys {
                basis.push(alg.mul(&cell.x[x], &cell.y[y]));
            }
        }
        x0.push(xs);
        y0.push(ys);
    }
    let m = match materialize(alg, &basis, "s", None)? {
        Ok(m) => m,
        Err(w) => {
            return Ok(ConformityReport {
                basis,
                closed: false,
                subalgebra: None,
                heredity: None,
                based: None,
                witness: Some(w),
            })
        }
    };
    let local = |v: &AlgebraElement| {
        AlgebraElement::from_vector(
            &m.span
                .coordinates(&alg.to_vector(v))
                .expect("even elements of X and Y lie in the even-product span"),
        )
    };
    let mut cells = Vec::new();
    for (i, cell) in data.cells().iter().enumerate() {
        let initial = x0[i]
            .iter()
            .position(|&k| k == cell.initial)
            .expect("initial elements are even");
        cells.push(Cell::new(
            x0[i].iter().map(|&k| local(&cell.x[k])).collect(),
            y0[i].iter().map(|&k| local(&cell.y[k])).collect(),
            initial,
        ));
    }
    let hd = HeredityData::new(data.poset().clone(), cells)?;
    let sub = m.algebra;
    let (heredity, based, witness) = match BasedAlgebra::analyze(sub.clone(), hd) {
        Err(e) => (None, None, Some(e.to_string())),
        Ok(Ok(ba)) => (
            Some(BasedAlgebra::verify(ba.algebra(), ba.data())?),
            Some(ba),
            None,
        ),
        Ok(Err(report)) => {
            let w = report.to_string();
            (Some(report), None, Some(w))
        }
    };
    Ok(ConformityReport {
        basis,
        closed: true,
        subalgebra: Some(sub),
        heredity,
        based,
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradingReport {
    pub passed: bool,
    pub witness: Option<String>,
    /// Whether the conformity check agrees with `a = A_{0,0}` when the conditions hold.
    pub cross_validated: Option<bool>,
}

/// Checks that a `Z/2 x Z/2` grading is multiplicative, refines the parity and puts
/// `X_ε` in `A_{ε,0}` and `Y_ε` in `A_{0,ε}`.
pub fn z2z2_check(b: &BasedAlgebra, grading: &Bigrading) -> Result<BigradingReport, Error> {
    let alg = b.algebra();
    let n = alg.dim();
    if grading.degrees.len() != n {
        return Err(Error::Shape(format!(
            "bigrading has {} entries for {n} basis elements",
            grading.degrees.len()
        )));
    }
    let g = &grading.degrees;
    let fail = |w: String| {
        Ok(BigradingReport {
            passed: false,
            witness: Some(w),
            cross_validated: None,
        })
    };
    for ((i, j), p) in alg.products() {
        let want = (g[i].0 + g[j].0, g[i].1 + g[j].1);
        if let Some(k) = p.support().find(|&k| g[k] != want) {
            return fail(format!(
                "{}*{} has a component {} outside bidegree ({}, {})",
                alg.label(i),
                alg.label(j),
                alg.label(k),
                want.0,
                want.1
            ));
        }
    }
    for k in 0..n {
        if g[k].0 + g[k].1 != alg.degree(k).parity {
            return fail(format!(
                "{} has parity {} but bidegree ({}, {})",
                alg.label(k),
                alg.degree(k).parity,
                g[k].0,
                g[k].1
            ));
        }
    }
    for cell in b.data().cells() {
        for (list, left) in [(&cell.x, true), (&cell.y, false)] {
            for v in list {
                let p = alg.homogeneous_degree(v).expect("verified homogeneous").parity;
                let want = if left { (p, Parity::Even) } else { (Parity::Even, p) };
                if let Some(k) = v.support().find(|&k| g[k] != want) {
                    return fail(format!(
                        "{} has a component {} outside bidegree ({}, {})",
                        alg.render(v),
                        alg.label(k),
                        want.0,
                        want.1
                    ));
                }
            }
        }
    }
    let conf = conformity_check(b)?;
    let a00: BTreeSet<usize> = (0..n).filter(|&k| g[k] == (Parity::Even, Parity::Even)).collect();
    let inside = conf
        .basis
        .iter()
        .all(|v| v.support().all(|k| a00.contains(&k)));
    let cross = conf.passed() && inside && conf.basis.len() == a00.len();
    Ok(BigradingReport {
        passed: true,
        witness: None,
        cross_validated: Some(cross),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{extended_zigzag, matrix_superalgebra, truncated_zigzag};
    use crate::linalg::{Field, GradedDim};

    const Q: Field = Field::Rational;

    #[test]
    fn sum_of_initial_idempotents_is_strongly_adapted() {
        let z = extended_zigzag(3, Q).unwrap();
        let e = z.algebra().unit().unwrap().clone();
        let ai = classify_idempotent(&z.based, &e).unwrap();
        assert!(ai.strongly_adapted);
        assert_eq!(ai.cells, vec![0, 1, 2, 3]);
        let t = truncate(&z.based, &ai, z.involution.as_ref()).unwrap();
        assert!(t.algebra.same_structure(z.algebra()));
        assert!(t.heredity.is_some());
        assert_eq!(surviving_simples(&z.based, &ai).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn zigzag_truncation() {
        for l in 1..=4 {
            let z = extended_zigzag(l, Q).unwrap();
            let e = z
                .algebra()
                .parse_element(&(0..l).map(|i| format!("e{i}")).collect::<Vec<_>>().join("+"))
                .unwrap();
            let ai = classify_idempotent(&z.based, &e).unwrap();
            assert!(ai.adapted && !ai.strongly_adapted);
            let a = z.algebra();
            assert_eq!(ai.x_bar[l], vec![1]);
            assert_eq!(ai.y_bar[l], vec![1]);
            assert_eq!(a.render(&z.heredity().cell(l).x[1]), format!("a{}_{}", l - 1, l));
            let t = truncated_zigzag(l, Q).unwrap();
            assert_eq!(t.algebra.dim(), 4 * l - 2);
            assert!(t.standard.passed);
            assert!(t.cellular.is_certified());
            assert_eq!(t.surviving, (0..l).collect::<Vec<_>>());
        }
    }

    #[test]
    fn truncated_zigzag_decomposition() {
        let z = extended_zigzag(3, Q).unwrap();
        let e = z.algebra().parse_element("e0 + e1 + e2").unwrap();
        let ai = classify_idempotent(&z.based, &e).unwrap();
        let d = truncated_decomposition(&z.based, &ai).unwrap();
        assert_eq!(d.row_labels, ["0", "1", "2", "3"]);
        assert_eq!(d.col_labels, ["0", "1", "2"]);
        assert_eq!(d.to_string(), "[1, 0, 0]\n[q*pi, 1, 0]\n[0, q*pi, 1]\n[0, 0, q*pi]\n");
    }

    #[test]
    fn non_idempotent_rejected() {
        let z = extended_zigzag(1, Q).unwrap();
        let e = z.algebra().parse_element("e0 + a0_1").unwrap();
        assert!(matches!(classify_idempotent(&z.based, &e), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn matrix_corner_truncation() {
        let m = matrix_superalgebra(2, 1, Q).unwrap();
        let e = m.algebra().element_by_label("E1_1").unwrap();
        let ai = classify_idempotent(&m.based, &e).unwrap();
        assert!(ai.strongly_adapted);
        let t = truncate(&m.based, &ai, None).unwrap();
        assert_eq!(t.algebra.dim(), 1);
        assert_eq!(t.cellular, CellularCertificate::NotRequested);
        assert_eq!(surviving_simples(&m.based, &ai).unwrap(), vec![0]);
    }

    #[test]
    fn withheld_cellular_certificate() {
        let m = matrix_superalgebra(1, 1, Q).unwrap();
        let e = m.algebra().element_by_label("E1_1").unwrap();
        let ai = classify_idempotent(&m.based, &e).unwrap();
        // Swapping the two diagonal units does not fix E1_1.
        let a = m.algebra();
        let mut images = m.involution.clone().unwrap().images;
        images[a.index_of("E1_1").unwrap()] = a.element_by_label("E2_2").unwrap();
        images[a.index_of("E2_2").unwrap()] = a.element_by_label("E1_1").unwrap();
        let t = truncate(&m.based, &ai, Some(&AntiInvolution::new(images))).unwrap();
        assert!(matches!(t.cellular, CellularCertificate::Withheld(_)));
    }

    #[test]
    fn conformity_of_catalog() {
        let z = extended_zigzag(3, Q).unwrap();
        let c = conformity_check(&z.based).unwrap();
        assert!(c.passed());
        let sub = c.subalgebra.unwrap();
        assert_eq!(sub.dim(), 4);
        assert_eq!(sub.graded_dimension(), GradedDim::monomial(Default::default(), 4));

        let m = matrix_superalgebra(2, 1, Q).unwrap();
        let c = conformity_check(&m.based).unwrap();
        assert!(c.passed());
        let labels: Vec<&str> = c.subalgebra.as_ref().unwrap().basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, ["E1_1", "E1_2", "E2_1", "E2_2"]);
        // Running the check again on the subalgebra with its own data passes.
        let again = conformity_check(c.based.as_ref().unwrap()).unwrap();
        assert!(again.passed());
    }

    #[test]
    fn zigzag_bigrading() {
        let z = extended_zigzag(3, Q).unwrap();
        let r = z2z2_check(&z.based, z.bigrading.as_ref().unwrap()).unwrap();
        assert!(r.passed);
        assert_eq!(r.cross_validated, Some(true));
        let mut bad = z.bigrading.clone().unwrap();
        bad.degrees[z.algebra().index_of("c0").unwrap()] = (Parity::Odd, Parity::Even);
        let r = z2z2_check(&z.based, &bad).unwrap();
        assert!(!r.passed && r.witness.is_some());
    }
}
