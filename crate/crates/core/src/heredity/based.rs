use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::error::Error;
use crate::heredity::{HeredityData, Poset};
use crate::linalg::{rank_of, Degree, ExactMatrix, Field, GradedDim, Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// Elements of `X` and `Y` must be non-zero and homogeneous, initial elements even
    /// of degree zero.
    Elements,
    /// `B` is a basis.
    A,
    /// Actions on `X(i)` and `Y(i)` modulo `A^{>i}`.
    B,
    /// The product identities with the initial elements.
    C,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::Elements => write!(f, "elements"),
            Axiom::A => write!(f, "axiom (a)"),
            Axiom::B => write!(f, "axiom (b)"),
            Axiom::C => write!(f, "axiom (c)"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: String,
}

/// Outcome of checking heredity data. Holds the first counterexample for each failed
/// axiom; axiom (b) is only checked once (a) holds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeredityReport {
    pub failures: Vec<AxiomFailure>,
    pub basis_size: usize,
    pub dim: usize,
}

impl HeredityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    fn fail(&mut self, axiom: Axiom, witness: String) {
        if self.failure(axiom).is_none() {
            self.failures.push(AxiomFailure { axiom, witness });
        }
    }
}

impl fmt::Display for HeredityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "heredity data verified: |B| = {} = dim A", self.basis_size);
        }
        for (k, fail) in self.failures.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{} failed: {}", fail.axiom, fail.witness)?;
        }
        Ok(())
    }
}

/// Span of the heredity basis elements of the cells in an upper set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellIdeal {
    pub omega: BTreeSet<usize>,
    /// True when `omega` was obtained by closing a non-upper generating set.
    pub closure_changed: bool,
    /// Positions in the heredity basis.
    pub basis: Vec<usize>,
    pub elements: Vec<AlgebraElement>,
}

impl CellIdeal {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// An algebra together with heredity data that passed verification.
///
/// The heredity basis is ordered cell by cell, then by `x`, then by `y`. The left and
/// right action coefficients of axiom (b) are cached per cell and per ambient basis
/// element: in `left_action(i, a)` column `x` holds `l^x_{x'}(a)`, in
/// `right_action(i, a)` column `y` holds `r^y_{y'}(a)`.
#[derive(Clone, Debug)]
pub struct BasedAlgebra {
    algebra: SuperAlgebra,
    data: HeredityData,
    offsets: Vec<usize>,
    positions: Vec<(usize, usize, usize)>,
    elements: Vec<AlgebraElement>,
    to_basis: ExactMatrix,
    left: Vec<Vec<ExactMatrix>>,
    right: Vec<Vec<ExactMatrix>>,
}

impl BasedAlgebra {
    /// Verifies `data` on `algebra`, failing with [`Error::HeredityFailed`] when an
    /// axiom does not hold.
    pub fn new(algebra: SuperAlgebra, data: HeredityData) -> Result<Self, Error> {
        match Self::analyze(algebra, data)? {
            Ok(b) => Ok(b),
            Err(report) => Err(Error::HeredityFailed(report.to_string())),
        }
    }

    /// Runs every axiom check and returns the report.
    pub fn verify(algebra: &SuperAlgebra, data: &HeredityData) -> Result<HeredityReport, Error> {
        Ok(match Self::analyze(algebra.clone(), data.clone())? {
            Ok(b) => HeredityReport {
                failures: Vec::new(),
                basis_size: b.basis_len(),
                dim: b.algebra.dim(),
            },
            Err(report) => report,
        })
    }

    /// Errors are reserved for input that cannot be checked at all (invalid algebra,
    /// foreign elements); failed axioms come back as `Ok(Err(report))`.
    pub fn analyze(
        algebra: SuperAlgebra,
        data: HeredityData,
    ) -> Result<Result<Self, HeredityReport>, Error> {
        algebra.require_valid()?;
        let field = algebra.field();
        let n = algebra.dim();
        let poset = data.poset().clone();
        let mut report = HeredityReport {
            failures: Vec::new(),
            basis_size: data.basis_size(),
            dim: n,
        };

        for (i, cell) in data.cells().iter().enumerate() {
            for (side, list) in [("X", &cell.x), ("Y", &cell.y)] {
                for (k, v) in list.iter().enumerate() {
                    algebra.check_element(v)?;
                    if v.is_zero() {
                        report.fail(
                            Axiom::Elements,
                            format!("{side}({})[{k}] is zero", poset.label(i)),
                        );
                    } else if algebra.homogeneous_degree(v).is_none() {
                        report.fail(
                            Axiom::Elements,
                            format!(
                                "{side}({}) element {} is not homogeneous",
                                poset.label(i),
                                algebra.render(v)
                            ),
                        );
                    }
                }
            }
            let e = cell.initial_element();
            if !e.is_zero() && algebra.homogeneous_degree(e) != Some(Degree::ZERO) {
                report.fail(
                    Axiom::Elements,
                    format!(
                        "initial element {} of cell {} is not even of degree 0",
                        algebra.render(e),
                        poset.label(i)
                    ),
                );
            }
        }

        let mut offsets = Vec::with_capacity(poset.len() + 1);
        let mut positions = Vec::new();
        let mut elements = Vec::new();
        for (i, cell) in data.cells().iter().enumerate() {
            offsets.push(elements.len());
            for (xi, x) in cell.x.iter().enumerate() {
                for (yi, y) in cell.y.iter().enumerate() {
                    positions.push((i, xi, yi));
                    elements.push(algebra.mul(x, y));
                }
            }
        }
        offsets.push(elements.len());

        let mut to_basis = None;
        if elements.len() != n {
            report.fail(
                Axiom::A,
                format!("|B| = {} but dim A = {n}", elements.len()),
            );
        } else {
            let cols: Vec<Vector> = elements.iter().map(|e| algebra.to_vector(e)).collect();
            let m = ExactMatrix::from_columns(field, n, &cols)?;
            match m.inverse() {
                Some(inv) => to_basis = Some(inv),
                None => {
                    let zero = positions
                        .iter()
                        .zip(&elements)
                        .find(|(_, e)| e.is_zero())
                        .map(|(&(i, xi, yi), _)| {
                            let c = data.cell(i);
                            format!(
                                "{}*{} = 0",
                                algebra.render(&c.x[xi]),
                                algebra.render(&c.y[yi])
                            )
                        });
                    report.fail(
                        Axiom::A,
                        zero.unwrap_or_else(|| {
                            format!("heredity basis has rank {} < {n}", m.rank())
                        }),
                    );
                }
            }
        }

        let mut left = Vec::new();
        let mut right = Vec::new();
        if let Some(to_b) = &to_basis {
            'cells: for (i, cell) in data.cells().iter().enumerate() {
                let above = poset.strictly_above(i);
                let keep: Vec<usize> = (0..n)
                    .filter(|&k| !above.contains(&positions[k].0))
                    .collect();
                let project = |v: &AlgebraElement| -> Vector {
                    let b = to_b.apply(&algebra.to_vector(v));
                    keep.iter().map(|&k| b[k].clone()).collect()
                };
                let mut sides = Vec::new();
                for (is_left, list) in [(true, &cell.x), (false, &cell.y)] {
                    let cols: Vec<Vector> = list.iter().map(project).collect();
                    let span = ExactMatrix::from_columns(field, keep.len(), &cols)?;
                    let mut per_a = Vec::with_capacity(n);
                    for a in 0..n {
                        let av = algebra.basis_vector(a);
                        let mut coeffs = Vec::with_capacity(list.len());
                        for v in list {
                            let prod = if is_left {
                                algebra.mul(&av, v)
                            } else {
                                algebra.mul(v, &av)
                            };
                            match span.solve(&project(&prod)) {
                                Some(c) => coeffs.push(c),
                                None => {
                                    let (side, expr) = if is_left {
                                        ("X", format!("{}*{}", algebra.label(a), algebra.render(v)))
                                    } else {
                                        ("Y", format!("{}*{}", algebra.render(v), algebra.label(a)))
                                    };
                                    report.fail(
                                        Axiom::B,
                                        format!(
                                            "{expr} is not in span {side}({}) modulo A^>{}",
                                            poset.label(i),
                                            poset.label(i)
                                        ),
                                    );
                                    left.clear();
                                    right.clear();
                                    break 'cells;
                                }
                            }
                        }
                        per_a.push(ExactMatrix::from_columns(field, list.len(), &coeffs)?);
                    }
                    sides.push(per_a);
                }
                let r = sides.pop().expect("two sides");
                let l = sides.pop().expect("two sides");
                left.push(l);
                right.push(r);
            }
        }

        if let Some(w) = axiom_c_witness(&algebra, &data) {
            report.fail(Axiom::C, w);
        }

        report.failures.sort_by_key(|f| f.axiom);
        match to_basis {
            Some(to_basis) if report.passed() => Ok(Ok(BasedAlgebra {
                algebra,
                data,
                offsets,
                positions,
                elements,
                to_basis,
                left,
                right,
            })),
            _ => Ok(Err(report)),
        }
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn data(&self) -> &HeredityData {
        &self.data
    }

    pub fn poset(&self) -> &Poset {
        self.data.poset()
    }

    pub fn into_parts(self) -> (SuperAlgebra, HeredityData) {
        (self.algebra, self.data)
    }

    pub fn basis_len(&self) -> usize {
        self.elements.len()
    }

    /// Heredity basis elements `xy` in heredity-basis order.
    pub fn basis_elements(&self) -> &[AlgebraElement] {
        &self.elements
    }

    /// `(cell, x index, y index)` of a heredity-basis position.
    pub fn position(&self, k: usize) -> (usize, usize, usize) {
        self.positions[k]
    }

    pub fn cell_range(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn basis_index(&self, i: usize, x: usize, y: usize) -> usize {
        self.offsets[i] + x * self.data.cell(i).y.len() + y
    }

    /// Heredity-basis position of `e_i = e_i e_i`.
    pub fn initial_index(&self, i: usize) -> usize {
        let c = self.data.cell(i);
        self.basis_index(i, c.initial, c.initial_y())
    }

    /// Coordinates of `v` in the heredity basis.
    pub fn coordinates(&self, v: &AlgebraElement) -> Vector {
        self.to_basis.apply(&self.algebra.to_vector(v))
    }

    pub fn from_coordinates(&self, coords: &[Scalar]) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (k, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.elements[k].scale(c);
            }
        }
        out
    }

    /// Heredity-basis coordinates of `v` with those in `Z(omega)` set to zero.
    pub fn reduce_mod_ideal(&self, v: &AlgebraElement, omega: &BTreeSet<usize>) -> Vector {
        let mut c = self.coordinates(v);
        let zero = self.algebra.field().zero();
        for (k, &(i, _, _)) in self.positions.iter().enumerate() {
            if omega.contains(&i) {
                c[k] = zero.clone();
            }
        }
        c
    }

    /// Reduction modulo `A^{>i}`.
    pub fn reduce_mod_above(&self, v: &AlgebraElement, i: usize) -> Vector {
        self.reduce_mod_ideal(v, &self.poset().strictly_above(i))
    }

    pub fn left_action(&self, i: usize, a: usize) -> &ExactMatrix {
        &self.left[i][a]
    }

    pub fn right_action(&self, i: usize, a: usize) -> &ExactMatrix {
        &self.right[i][a]
    }

    /// Left action of an arbitrary element on `Delta(i)`.
    pub fn left_action_of(&self, i: usize, a: &AlgebraElement) -> ExactMatrix {
        let k = self.data.cell(i).x.len();
        combine(self.algebra.field(), k, a, |b| &self.left[i][b])
    }

    /// Right action of an arbitrary element on `Delta^op(i)`.
    pub fn right_action_of(&self, i: usize, a: &AlgebraElement) -> ExactMatrix {
        let k = self.data.cell(i).y.len();
        combine(self.algebra.field(), k, a, |b| &self.right[i][b])
    }

    /// Gram matrix of `f_i`, rows indexed by `Y(i)` and columns by `X(i)`.
    pub fn gram_form(&self, i: usize) -> Result<ExactMatrix, Error> {
        let cell = self.data.cell(i);
        let target = self.initial_index(i);
        let field = self.algebra.field();
        let mut m = ExactMatrix::zeros(field, cell.y.len(), cell.x.len());
        for (yi, y) in cell.y.iter().enumerate() {
            for (xi, x) in cell.x.iter().enumerate() {
                let r = self.reduce_mod_above(&self.algebra.mul(y, x), i);
                if let Some(k) = (0..r.len()).find(|&k| k != target && !r[k].is_zero()) {
                    let (j, a, b) = self.positions[k];
                    let c = self.data.cell(j);
                    return Err(Error::Corrupt(format!(
                        "{}*{} has a component along {}*{} modulo A^>{}",
                        self.algebra.render(y),
                        self.algebra.render(x),
                        self.algebra.render(&c.x[a]),
                        self.algebra.render(&c.y[b]),
                        self.poset().label(i)
                    )));
                }
                m.set(yi, xi, r[target].clone());
            }
        }
        Ok(m)
    }

    /// Graded dimension of `Delta(i)`.
    pub fn standard_graded_dim(&self, i: usize) -> GradedDim {
        self.graded_dim_of(&self.data.cell(i).x)
    }

    /// Graded dimension of `Delta^op(i)`.
    pub fn costandard_graded_dim(&self, i: usize) -> GradedDim {
        self.graded_dim_of(&self.data.cell(i).y)
    }

    fn graded_dim_of(&self, list: &[AlgebraElement]) -> GradedDim {
        let mut g = GradedDim::zero();
        for v in list {
            g.add_term(self.algebra.homogeneous_degree(v).expect("verified homogeneous"), 1);
        }
        g
    }

    /// The cell ideal `A(omega)` for an upper set `omega`, with its ideal property and
    /// its generation by the initial elements certified.
    pub fn cell_ideal(&self, omega: &BTreeSet<usize>) -> Result<CellIdeal, Error> {
        if !self.poset().is_upper_set(omega) {
            return Err(Error::NotUpperSet(
                omega.iter().map(|&i| self.poset().label(i).to_string()).collect(),
            ));
        }
        let basis: Vec<usize> = (0..self.basis_len())
            .filter(|&k| omega.contains(&self.positions[k].0))
            .collect();
        let ideal = CellIdeal {
            omega: omega.clone(),
            closure_changed: false,
            elements: basis.iter().map(|&k| self.elements[k].clone()).collect(),
            basis,
        };
        self.certify_ideal(&ideal)?;
        Ok(ideal)
    }

    /// Closes `generators` upward first.
    pub fn cell_ideal_closing(&self, generators: &[usize]) -> Result<CellIdeal, Error> {
        let (omega, changed) = self.poset().upper_closure(generators);
        let mut ideal = self.cell_ideal(&omega)?;
        ideal.closure_changed = changed;
        Ok(ideal)
    }

    fn certify_ideal(&self, ideal: &CellIdeal) -> Result<(), Error> {
        let inside = |v: &AlgebraElement| {
            let c = self.coordinates(v);
            c.iter()
                .enumerate()
                .all(|(k, s)| s.is_zero() || ideal.omega.contains(&self.positions[k].0))
        };
        let alg = &self.algebra;
        for a in 0..alg.dim() {
            let av = alg.basis_vector(a);
            for z in &ideal.elements {
                if !inside(&alg.mul(&av, z)) || !inside(&alg.mul(z, &av)) {
                    return Err(Error::Corrupt(format!(
                        "cell ideal is not closed under multiplication by {}",
                        alg.label(a)
                    )));
                }
            }
        }
        let field = alg.field();
        let mut generated: Vec<Vector> = Vec::new();
        for &i in &ideal.omega {
            let e = self.data.initial(i);
            let left: Vec<Vector> = (0..alg.dim())
                .map(|a| alg.to_vector(&alg.mul(&alg.basis_vector(a), e)))
                .collect();
            let left = ExactMatrix::from_rows(field, left)?.rref();
            for r in 0..left.rank {
                let v = AlgebraElement::from_vector(left.matrix.row(r));
                for b in 0..alg.dim() {
                    generated.push(alg.to_vector(&alg.mul(&v, &alg.basis_vector(b))));
                }
            }
        }
        let rank = rank_of(field, alg.dim(), &generated);
        if rank != ideal.dim() {
            return Err(Error::Corrupt(format!(
                "ideal generated by the initial elements has dimension {rank}, expected {}",
                ideal.dim()
            )));
        }
        Ok(())
    }
}

fn combine<'a>(
    field: Field,
    k: usize,
    a: &AlgebraElement,
    mat: impl Fn(usize) -> &'a ExactMatrix,
) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(field, k, k);
    for (b, c) in a.terms() {
        m = m.add(&mat(b).scale(c)).expect("same shape");
    }
    m
}

fn axiom_c_witness(alg: &SuperAlgebra, data: &HeredityData) -> Option<String> {
    let poset = data.poset();
    let r = |v: &AlgebraElement| alg.render(v);
    for (i, cell) in data.cells().iter().enumerate() {
        let e = cell.initial_element();
        let iy = cell.initial_y();
        for (k, x) in cell.x.iter().enumerate() {
            if alg.mul(x, e) != *x {
                return Some(format!("{}*{} != {}", r(x), r(e), r(x)));
            }
            let expected = if k == cell.initial { x.clone() } else { AlgebraElement::zero() };
            if alg.mul(e, x) != expected {
                return Some(format!(
                    "{}*{} != {} in cell {}",
                    r(e),
                    r(x),
                    r(&expected),
                    poset.label(i)
                ));
            }
        }
        for (k, y) in cell.y.iter().enumerate() {
            if alg.mul(e, y) != *y {
                return Some(format!("{}*{} != {}", r(e), r(y), r(y)));
            }
            let expected = if k == iy { y.clone() } else { AlgebraElement::zero() };
            if alg.mul(y, e) != expected {
                return Some(format!(
                    "{}*{} != {} in cell {}",
                    r(y),
                    r(e),
                    r(&expected),
                    poset.label(i)
                ));
            }
        }
    }
    for j in 0..poset.len() {
        let e = data.initial(j);
        for cell in data.cells() {
            for x in &cell.x {
                let p = alg.mul(e, x);
                if !p.is_zero() && p != *x {
                    return Some(format!("{}*{} is neither {} nor 0", r(e), r(x), r(x)));
                }
            }
            for y in &cell.y {
                let p = alg.mul(y, e);
                if !p.is_zero() && p != *y {
                    return Some(format!("{}*{} is neither {} nor 0", r(y), r(e), r(y)));
                }
            }
        }
    }
    None
}
