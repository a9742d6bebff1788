//! Reduction to a basic algebra over a field: Jacobson radical, idempotent lifting,
//! primitive refinement of the initial idempotents and the truncation `fAf`.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::error::Error;
use crate::heredity::{BasedAlgebra, Cell, HeredityData};
use crate::linalg::{rank_of, Degree, ExactMatrix, GradedDim, Parity, Scalar, SpanCoordinates, Vector};
use crate::modules::{
    decomposition_matrix, e_weight_graded_dim, radical_and_simple, standard_module, Side,
    SimpleModule,
};
use crate::truncation::{classify_idempotent, conformity_check, truncate, Truncation};

/// `J(A)` together with its nilpotency degree, the least `n >= 1` with `J^n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    pub basis: Vec<AlgebraElement>,
    pub nilpotency: usize,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, alg: &SuperAlgebra, v: &AlgebraElement) -> bool {
        let mut vecs: Vec<Vector> = self.basis.iter().map(|b| alg.to_vector(b)).collect();
        vecs.push(alg.to_vector(v));
        rank_of(alg.field(), alg.dim(), &vecs) == self.basis.len()
    }
}

/// The simples of a based algebra, used as a faithful representation of `A/J(A)`.
struct Simples {
    simples: Vec<SimpleModule>,
}

impl Simples {
    fn new(b: &BasedAlgebra) -> Result<Self, Error> {
        let simples = (0..b.poset().len())
            .map(|i| radical_and_simple(b, i))
            .collect::<Result<_, _>>()?;
        Ok(Simples { simples })
    }

    /// Matrix whose column `k` stacks every entry of every `L(i)(b_k)`.
    fn stacked(&self, cols: &[usize], field: crate::linalg::Field) -> ExactMatrix {
        let rows: usize = self.simples.iter().map(|s| s.module.dim().pow(2)).sum();
        let mut m = ExactMatrix::zeros(field, rows, cols.len());
        for (c, &k) in cols.iter().enumerate() {
            let mut r = 0;
            for s in &self.simples {
                let a = &s.module.action[k];
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m.set(r, c, a.get(i, j).clone());
                        r += 1;
                    }
                }
            }
        }
        m
    }

    fn total_square_dim(&self) -> usize {
        self.simples.iter().map(|s| s.module.dim().pow(2)).sum()
    }
}

/// `J(A)` as the common annihilator of the simples `L(i)`; the result is checked to
/// be nilpotent.
pub fn jacobson_radical(b: &BasedAlgebra) -> Result<Radical, Error> {
    let alg = b.algebra();
    alg.require_unit()?;
    let simples = Simples::new(b)?;
    let all: Vec<usize> = (0..alg.dim()).collect();
    let basis: Vec<AlgebraElement> = simples
        .stacked(&all, alg.field())
        .kernel_basis()
        .iter()
        .map(|v| AlgebraElement::from_vector(v))
        .collect();
    let nilpotency = nilpotency_degree(alg, &basis)?;
    Ok(Radical { basis, nilpotency })
}

fn nilpotency_degree(alg: &SuperAlgebra, j: &[AlgebraElement]) -> Result<usize, Error> {
    let field = alg.field();
    let mut power = j.to_vec();
    for n in 1..=alg.dim() + 1 {
        if power.is_empty() {
            return Ok(n);
        }
        let products: Vec<Vector> = power
            .iter()
            .flat_map(|u| j.iter().map(move |v| (u, v)))
            .map(|(u, v)| alg.to_vector(&alg.mul(u, v)))
            .collect();
        let m = ExactMatrix::from_columns(field, alg.dim(), &products)?;
        let r = m.transpose().rref();
        power = (0..r.rank)
            .map(|row| AlgebraElement::from_vector(r.matrix.row(row)))
            .collect();
    }
    Err(Error::Corrupt("annihilator of the simples is not nilpotent".into()))
}

/// Lifts an idempotent modulo a nilpotent ideal by iterating `e -> 3e^2 - 2e^3`.
pub fn lift_idempotent(alg: &SuperAlgebra, a: &AlgebraElement) -> Result<AlgebraElement, Error> {
    let three = alg.field().from_i64(3);
    let two = alg.field().from_i64(2);
    let mut e = a.clone();
    for _ in 0..=alg.dim() {
        let sq = alg.mul(&e, &e);
        let cube = alg.mul(&sq, &e);
        let next = &sq.scale(&three) - &cube.scale(&two);
        if next == e {
            return Ok(e);
        }
        e = next;
    }
    Err(Error::LiftingFailed(format!(
        "{} after {} iterations",
        alg.render(a),
        alg.dim() + 1
    )))
}

/// Splits an idempotent into orthogonal primitive idempotents, each of even degree 0.
///
/// The image of `e` in every simple is cut into rank-one idempotents one homogeneous
/// component at a time, pulled back to `A` and lifted one after another inside the
/// remaining corner.
pub fn primitive_decomposition(
    b: &BasedAlgebra,
    e: &AlgebraElement,
) -> Result<Vec<AlgebraElement>, Error> {
    let alg = b.algebra();
    let field = alg.field();
    if let Some(f) = alg.check_idempotent(e).failure {
        return Err(Error::NotIdempotent(format!("{}: {f:?}", alg.render(e))));
    }
    if e.is_zero() {
        return Ok(Vec::new());
    }
    let simples = Simples::new(b)?;
    let radical_dim = jacobson_radical(b)?.dim();
    if alg.dim() - radical_dim != simples.total_square_dim() {
        return Err(Error::Hypothesis(
            "the semisimple quotient is not a product of matrix algebras over the field".into(),
        ));
    }

    let mut targets: Vec<Vec<ExactMatrix>> = Vec::new();
    for (j, s) in simples.simples.iter().enumerate() {
        let m = &s.module;
        let p = m.act(e);
        let components: BTreeSet<Degree> = m.degrees.iter().copied().collect();
        for d in components {
            let idx: Vec<usize> = (0..m.dim()).filter(|&k| m.degrees[k] == d).collect();
            let block = p.select(&idx, &idx);
            let r = block.rref();
            for (t, &pivot) in r.pivots.iter().enumerate() {
                let mut q = ExactMatrix::zeros(field, m.dim(), m.dim());
                for (a, &ra) in idx.iter().enumerate() {
                    for (c, &rc) in idx.iter().enumerate() {
                        q.set(ra, rc, block.get(a, pivot) * r.matrix.get(t, c));
                    }
                }
                let mut target: Vec<ExactMatrix> = simples
                    .simples
                    .iter()
                    .map(|o| ExactMatrix::zeros(field, o.module.dim(), o.module.dim()))
                    .collect();
                target[j] = q;
                targets.push(target);
            }
        }
    }
    if targets.is_empty() {
        return Err(Error::Corrupt(format!("idempotent {} lies in the radical", alg.render(e))));
    }

    let even0: Vec<usize> = (0..alg.dim())
        .filter(|&k| alg.degree(k) == Degree::new(0, Parity::Even))
        .collect();
    let phi = simples.stacked(&even0, field);
    let mut remaining = e.clone();
    let mut out = Vec::with_capacity(targets.len());
    let last = targets.len() - 1;
    for target in &targets[..last] {
        let rhs: Vector = target
            .iter()
            .flat_map(|m| (0..m.rows()).flat_map(move |i| (0..m.cols()).map(move |j| m.get(i, j).clone())))
            .collect();
        let coords = phi.solve(&rhs).ok_or_else(|| {
            Error::Hypothesis("a rank-one idempotent has no even degree-zero preimage".into())
        })?;
        let a = AlgebraElement::from_terms(
            even0.iter().zip(coords).map(|(&k, c)| (k, c)),
        );
        let g = lift_idempotent(alg, &alg.mul3(&remaining, &a, &remaining))?;
        remaining = &remaining - &g;
        out.push(g);
    }
    out.push(remaining);

    let mut sum = AlgebraElement::zero();
    for (s, g) in out.iter().enumerate() {
        if !alg.check_idempotent(g).is_idempotent() {
            return Err(Error::Corrupt(format!("lifted {} is not idempotent", alg.render(g))));
        }
        let rank: usize = simples.simples.iter().map(|m| m.module.act(g).rank()).sum();
        if rank != 1 {
            return Err(Error::Corrupt(format!("lifted {} is not primitive", alg.render(g))));
        }
        for h in &out[s + 1..] {
            if !alg.mul(g, h).is_zero() || !alg.mul(h, g).is_zero() {
                return Err(Error::Corrupt("lifted idempotents are not orthogonal".into()));
            }
        }
        sum = &sum + g;
    }
    if sum != *e {
        return Err(Error::Corrupt("lifted idempotents do not sum to e".into()));
    }
    Ok(out)
}

/// The even-product subalgebra of a conforming based algebra, with the maps to and
/// from the ambient algebra.
pub struct EvenPart {
    pub based: BasedAlgebra,
    pub embedding: Vec<AlgebraElement>,
    span: SpanCoordinates,
}

impl EvenPart {
    pub fn new(b: &BasedAlgebra) -> Result<Self, Error> {
        let conf = conformity_check(b)?;
        let based = match conf.based {
            Some(based) if conf.closed => based,
            _ => {
                return Err(Error::NotConforming(
                    conf.witness.unwrap_or_else(|| "even products do not form heredity data".into()),
                ))
            }
        };
        let alg = b.algebra();
        let cols: Vec<Vector> = conf.basis.iter().map(|v| alg.to_vector(v)).collect();
        let span = SpanCoordinates::new(alg.field(), alg.dim(), &cols)
            .ok_or_else(|| Error::Corrupt("even products are dependent".into()))?;
        Ok(EvenPart {
            based,
            embedding: conf.basis,
            span,
        })
    }

    pub fn embed(&self, v: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (k, c) in v.terms() {
            out = &out + &self.embedding[k].scale(c);
        }
        out
    }

    pub fn pull_back(&self, alg: &SuperAlgebra, v: &AlgebraElement) -> Option<AlgebraElement> {
        self.span
            .coordinates(&alg.to_vector(v))
            .map(|c| AlgebraElement::from_vector(&c))
    }
}

/// Primitive idempotents `e_i'` of the even-product subalgebra with `e_i e_i' = e_i' =
/// e_i' e_i` and `e_i' = e_i` modulo the part of that subalgebra above `i`.
pub fn primitive_refinement(b: &BasedAlgebra) -> Result<Vec<AlgebraElement>, Error> {
    let alg = b.algebra();
    let one = alg.require_unit()?;
    let even = EvenPart::new(b)?;
    let sub = &even.based;
    match sub.algebra().unit() {
        Some(u) if even.embed(u) == *one => {}
        _ => {
            return Err(Error::Hypothesis(
                "the unit of A is not the unit of the even-product subalgebra".into(),
            ))
        }
    }
    let mut out = Vec::new();
    for i in 0..sub.poset().len() {
        let ei = sub.data().initial(i);
        let local: Vec<Vector> = (0..sub.algebra().dim())
            .map(|k| sub.reduce_mod_above(&sub.algebra().mul3(ei, &sub.algebra().basis_vector(k), ei), i))
            .collect();
        if rank_of(alg.field(), sub.basis_len(), &local) != 1 {
            return Err(Error::Hypothesis(format!(
                "e_{0} a e_{0} is not one-dimensional modulo the cells above {0}",
                sub.poset().label(i)
            )));
        }
        let congruent: Vec<AlgebraElement> = primitive_decomposition(sub, ei)?
            .into_iter()
            .filter(|g| sub.reduce_mod_above(&(ei - g), i).iter().all(Scalar::is_zero))
            .collect();
        let [prime] = <[AlgebraElement; 1]>::try_from(congruent).map_err(|found| {
            Error::Hypothesis(format!(
                "{} primitive summands of e_{} are congruent to it",
                found.len(),
                sub.poset().label(i)
            ))
        })?;
        let prime = even.embed(&prime);
        let ei = b.data().initial(i);
        if alg.mul(ei, &prime) != prime || alg.mul(&prime, ei) != prime {
            return Err(Error::Corrupt(format!("e_{}' is not under e_{}", i, i)));
        }
        out.push(prime);
    }
    Ok(out)
}

/// Heredity data with the refined initial idempotents: `X'(i)` is chosen among the
/// `e_j' x e_i'` (with `e_*' = 1 - sum e_j'`) so that it reduces to a basis of
/// `A e_i'` modulo the cells above `i`; `Y'(i)` likewise.
pub fn refined_heredity_data(
    b: &BasedAlgebra,
    primes: &[AlgebraElement],
) -> Result<HeredityData, Error> {
    let alg = b.algebra();
    let one = alg.require_unit()?;
    let mut sides: Vec<AlgebraElement> = primes.to_vec();
    let mut star = one.clone();
    for p in primes {
        star = &star - p;
    }
    sides.push(star);
    let even_first = |list: &[AlgebraElement]| -> Vec<usize> {
        let mut order: Vec<usize> = (0..list.len()).collect();
        order.sort_by_key(|&k| alg.homogeneous_degree(&list[k]).map(|d| d.parity.bit()));
        order
    };
    let mut cells = Vec::new();
    for (i, cell) in b.data().cells().iter().enumerate() {
        let p = &primes[i];
        let pick = |candidates: Vec<AlgebraElement>, want: usize| -> Result<Vec<AlgebraElement>, Error> {
            let mut chosen: Vec<AlgebraElement> = Vec::new();
            let mut reduced: Vec<Vector> = Vec::new();
            for c in candidates {
                if c.is_zero() {
                    continue;
                }
                reduced.push(b.reduce_mod_above(&c, i));
                if rank_of(alg.field(), b.basis_len(), &reduced) > chosen.len() {
                    chosen.push(c);
                } else {
                    reduced.pop();
                }
            }
            if chosen.len() != want {
                return Err(Error::Basicize(format!(
                    "found {} of {want} refined elements for cell {}",
                    chosen.len(),
                    b.poset().label(i)
                )));
            }
            Ok(chosen)
        };
        let mut xs = vec![p.clone()];
        let mut ys = vec![p.clone()];
        for k in even_first(&cell.x) {
            xs.extend(sides.iter().map(|s| alg.mul3(s, &cell.x[k], p)));
        }
        for k in even_first(&cell.y) {
            ys.extend(sides.iter().map(|s| alg.mul3(p, &cell.y[k], s)));
        }
        cells.push(Cell::new(pick(xs, cell.x.len())?, pick(ys, cell.y.len())?, 0));
    }
    HeredityData::new(b.poset().clone(), cells)
}

/// One line of the functor audit, with `f` applied on the left of the modules of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub label: String,
    pub f_standard: GradedDim,
    pub reduced_standard: GradedDim,
    pub f_simple: GradedDim,
    pub reduced_simple: GradedDim,
}

impl AuditRow {
    pub fn passed(&self) -> bool {
        self.f_standard == self.reduced_standard && self.f_simple == self.reduced_simple
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorAudit {
    pub rows: Vec<AuditRow>,
    pub decomposition_equal: bool,
}

impl FunctorAudit {
    pub fn passed(&self) -> bool {
        self.decomposition_equal && self.rows.iter().all(AuditRow::passed)
    }
}

impl fmt::Display for FunctorAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cell\tfDelta\tDelta_fAf\tfL\tL_fAf\tok")?;
        for r in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.label,
                r.f_standard,
                r.reduced_standard,
                r.f_simple,
                r.reduced_simple,
                if r.passed() { "yes" } else { "no" }
            )?;
        }
        writeln!(
            f,
            "decomposition matrices equal: {}",
            if self.decomposition_equal { "yes" } else { "no" }
        )
    }
}

/// Output of [`basicize`].
#[derive(Clone, Debug)]
pub struct Basicization {
    /// The refined initial idempotents `e_i'`, as elements of `A`.
    pub primitives: Vec<AlgebraElement>,
    /// `1 - f`.
    pub complement: AlgebraElement,
    pub f: AlgebraElement,
    /// `A` with the refined heredity data.
    pub refined: BasedAlgebra,
    /// `fAf` with the induced heredity data.
    pub reduced: Truncation,
    /// Whether every odd basis element lies in `J(A)`.
    pub odd_in_radical: bool,
    /// Whether `fAf` is basic; only decided when `odd_in_radical` holds.
    pub basic: Option<bool>,
    pub audit: FunctorAudit,
}

impl Basicization {
    pub fn based(&self) -> &BasedAlgebra {
        self.reduced.heredity.as_ref().expect("f is strongly adapted")
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.reduced.algebra
    }
}

fn all_simples_one_dimensional(b: &BasedAlgebra) -> Result<bool, Error> {
    Ok((0..b.poset().len())
        .map(|i| radical_and_simple(b, i).map(|s| s.module.dim() == 1))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|x| x))
}

/// Truncates by `e = sum e_i`, refines the initial idempotents inside `eAe`, extends
/// the refined data back to `A` and truncates by `f = sum e_i'`.
pub fn basicize(b: &BasedAlgebra) -> Result<Basicization, Error> {
    let alg = b.algebra();
    let one = alg.require_unit()?;
    EvenPart::new(b)?;

    let mut e = AlgebraElement::zero();
    for i in 0..b.poset().len() {
        e = &e + b.data().initial(i);
    }
    let ai = classify_idempotent(b, &e)?;
    if !ai.strongly_adapted {
        return Err(Error::Basicize(format!(
            "sum of the e_i is not strongly adapted: {}",
            ai.witness.unwrap_or_default()
        )));
    }
    let te = truncate(b, &ai, None)?;
    let bar = te.heredity.as_ref().expect("strongly adapted");
    let embed = |v: &AlgebraElement| {
        let mut out = AlgebraElement::zero();
        for (k, c) in v.terms() {
            out = &out + &te.embedding[k].scale(c);
        }
        out
    };

    let inner = primitive_refinement(bar)?;
    let inner_data = refined_heredity_data(bar, &inner)?;
    let inner_based = BasedAlgebra::new(bar.algebra().clone(), inner_data)
        .map_err(|err| Error::Basicize(format!("refined data on eAe: {err}")))?;
    EvenPart::new(&inner_based)?;

    let primitives: Vec<AlgebraElement> = inner.iter().map(embed).collect();
    let mut cells = Vec::new();
    for (i, cell) in b.data().cells().iter().enumerate() {
        let inner_cell = inner_based.data().cell(i);
        let p = &primitives[i];
        let mut x: Vec<AlgebraElement> = inner_cell.x.iter().map(embed).collect();
        x.extend(cell.x.iter().filter(|v| alg.mul(&e, v).is_zero()).map(|v| alg.mul(v, p)));
        let mut y: Vec<AlgebraElement> = inner_cell.y.iter().map(embed).collect();
        y.extend(cell.y.iter().filter(|v| alg.mul(v, &e).is_zero()).map(|v| alg.mul(p, v)));
        cells.push(Cell::new(x, y, inner_cell.initial));
    }
    let refined = BasedAlgebra::new(
        alg.clone(),
        HeredityData::new(b.poset().clone(), cells)?,
    )
    .map_err(|err| Error::Basicize(format!("refined data on A: {err}")))?;
    for i in 0..b.poset().len() {
        let omega = b.poset().at_or_above(i);
        let old = b.cell_ideal(&omega)?;
        let new = refined.cell_ideal(&omega)?;
        let mut vecs: Vec<Vector> = old.elements.iter().map(|v| alg.to_vector(v)).collect();
        vecs.extend(new.elements.iter().map(|v| alg.to_vector(v)));
        if rank_of(alg.field(), alg.dim(), &vecs) != old.dim() || old.dim() != new.dim() {
            return Err(Error::Basicize(format!(
                "refinement changed the ideal above {}",
                b.poset().label(i)
            )));
        }
    }
    EvenPart::new(&refined)?;

    let mut f = AlgebraElement::zero();
    for p in &primitives {
        f = &f + p;
    }
    let af = classify_idempotent(&refined, &f)?;
    if !af.strongly_adapted {
        return Err(Error::Basicize(format!(
            "f is not strongly adapted: {}",
            af.witness.unwrap_or_default()
        )));
    }
    let reduced = truncate(&refined, &af, None)?;
    let reduced_based = reduced.heredity.as_ref().expect("strongly adapted");
    let reduced_even = EvenPart::new(reduced_based)?;
    if !all_simples_one_dimensional(&reduced_even.based)? {
        return Err(Error::Basicize("the even part of fAf is not basic".into()));
    }

    let radical = jacobson_radical(b)?;
    let odd_in_radical = (0..alg.dim())
        .filter(|&k| alg.degree(k).parity == Parity::Odd)
        .all(|k| radical.contains(alg, &alg.basis_vector(k)));
    let basic = if odd_in_radical {
        let basic = all_simples_one_dimensional(reduced_based)?;
        if !basic {
            return Err(Error::Basicize("odd part lies in J(A) but fAf is not basic".into()));
        }
        Some(true)
    } else {
        None
    };

    let mut result = Basicization {
        primitives,
        complement: one - &f,
        f,
        refined,
        reduced,
        odd_in_radical,
        basic,
        audit: FunctorAudit {
            rows: Vec::new(),
            decomposition_equal: false,
        },
    };
    result.audit = functor_audit(b, &result)?;
    Ok(result)
}

/// Compares `f Delta_A(i)` and `f L_A(i)` with the modules of `fAf`, and the two
/// decomposition matrices.
pub fn functor_audit(b: &BasedAlgebra, r: &Basicization) -> Result<FunctorAudit, Error> {
    let reduced = r.based();
    let mut rows = Vec::new();
    for (k, &i) in r.reduced.cells.iter().enumerate() {
        let delta = standard_module(b, i, Side::Left);
        let simple = radical_and_simple(b, i)?;
        rows.push(AuditRow {
            label: b.poset().label(i).to_string(),
            f_standard: e_weight_graded_dim(&delta, &r.f),
            reduced_standard: reduced.standard_graded_dim(k),
            f_simple: e_weight_graded_dim(&simple.module, &r.f),
            reduced_simple: radical_and_simple(reduced, k)?.module.graded_dim(),
        });
    }
    let decomposition_equal = decomposition_matrix(b)? == decomposition_matrix(reduced)?;
    Ok(FunctorAudit {
        rows,
        decomposition_equal,
    })
}
