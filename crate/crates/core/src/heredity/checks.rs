use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::error::Error;
use crate::heredity::{BasedAlgebra, Poset};
use crate::linalg::{commutant_dimension, rank_of, ExactMatrix, Vector};

/// A linear map given by the images of the ambient basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiInvolution {
    pub images: Vec<AlgebraElement>,
}

impl AntiInvolution {
    pub fn new(images: Vec<AlgebraElement>) -> Self {
        AntiInvolution { images }
    }

    pub fn apply(&self, v: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (k, c) in v.terms() {
            out = &out + &self.images[k].scale(c);
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionReport {
    pub anti_multiplicative: bool,
    pub involutive: bool,
    /// Preserves degree and parity of every basis element.
    pub homogeneous: bool,
    /// An anti-involution restricting to bijections `X(i) -> Y(i)` that fix `e_i`.
    pub standard: bool,
    /// `tau(x y(x')) = x' y(x)` on the heredity basis.
    pub cellular: bool,
    /// For each cell, `bijections[i][x]` is the index of `tau(x)` in `Y(i)`.
    pub bijections: Option<Vec<Vec<usize>>>,
    pub witness: Option<String>,
}

/// Candidate standard basis `cells[i][x][y]` over a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasisCandidate {
    pub poset: Poset,
    pub cells: Vec<Vec<Vec<AlgebraElement>>>,
}

impl StandardBasisCandidate {
    /// The heredity basis `{xy}` of a based algebra.
    pub fn from_based(b: &BasedAlgebra) -> Self {
        let alg = b.algebra();
        let cells = b
            .data()
            .cells()
            .iter()
            .map(|c| {
                c.x.iter()
                    .map(|x| c.y.iter().map(|y| alg.mul(x, y)).collect())
                    .collect()
            })
            .collect();
        StandardBasisCandidate {
            poset: b.poset().clone(),
            cells,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasisReport {
    pub passed: bool,
    pub witness: Option<String>,
}

/// Checks the two one-sided congruences of a standard basis, with coefficients
/// independent of the spectator index.
pub fn check_standardly_based(
    alg: &SuperAlgebra,
    cand: &StandardBasisCandidate,
) -> Result<StandardBasisReport, Error> {
    alg.require_valid()?;
    let field = alg.field();
    let n = alg.dim();
    if cand.cells.len() != cand.poset.len() {
        return Err(Error::MalformedHeredity("one cell per poset element required".into()));
    }
    let mut positions = Vec::new();
    let mut cols = Vec::new();
    for (i, cell) in cand.cells.iter().enumerate() {
        let ny = cell.first().map_or(0, Vec::len);
        for (x, row) in cell.iter().enumerate() {
            if row.len() != ny {
                return Err(Error::MalformedHeredity(format!(
                    "cell {} is not rectangular",
                    cand.poset.label(i)
                )));
            }
            for (y, b) in row.iter().enumerate() {
                alg.check_element(b)?;
                positions.push((i, x, y));
                cols.push(alg.to_vector(b));
            }
        }
    }
    if cols.len() != n {
        return Err(Error::NotABasis(format!("{} candidates for dimension {n}", cols.len())));
    }
    let to_cand = ExactMatrix::from_columns(field, n, &cols)?
        .inverse()
        .ok_or_else(|| Error::NotABasis("candidate elements are linearly dependent".into()))?;
    let fail = |w: String| {
        Ok(StandardBasisReport {
            passed: false,
            witness: Some(w),
        })
    };
    let flat: Vec<&AlgebraElement> = cand.cells.iter().flatten().flatten().collect();
    if let Some(b) = flat.iter().find(|b| alg.homogeneous_degree(b).is_none()) {
        return fail(format!("candidate {} is not homogeneous", alg.render(b)));
    }
    let poset = &cand.poset;
    for a in 0..n {
        let av = alg.basis_vector(a);
        for left in [true, false] {
            // Reference coefficients per (cell, fixed index), taken from spectator 0.
            let mut reference: Vec<Option<Vector>> = vec![None; n];
            for (k, &(i, x, y)) in positions.iter().enumerate() {
                let prod = if left {
                    alg.mul(&av, flat[k])
                } else {
                    alg.mul(flat[k], &av)
                };
                let c = to_cand.apply(&alg.to_vector(&prod));
                let (moving, spectator) = if left { (x, y) } else { (y, x) };
                let cell = &cand.cells[i];
                let len = if left { cell.len() } else { cell[0].len() };
                let mut coeffs = vec![field.zero(); len];
                for (m, s) in c.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let (j, x2, y2) = positions[m];
                    if poset.lt(i, j) {
                        continue;
                    }
                    let (mv, sp) = if left { (x2, y2) } else { (y2, x2) };
                    if j != i || sp != spectator {
                        let side = if left { "a*b" } else { "b*a" };
                        return fail(format!(
                            "{side} for a = {}, b = {} leaves the allowed span",
                            alg.label(a),
                            alg.render(flat[k])
                        ));
                    }
                    coeffs[mv] = s.clone();
                }
                let key = cand_index(&positions, i, moving, left);
                match &reference[key] {
                    None => reference[key] = Some(coeffs),
                    Some(r) if *r == coeffs => {}
                    Some(_) => {
                        return fail(format!(
                            "coefficients of {} acting on {} depend on the spectator index",
                            alg.label(a),
                            alg.render(flat[k])
                        ));
                    }
                }
            }
        }
    }
    Ok(StandardBasisReport {
        passed: true,
        witness: None,
    })
}

/// A slot per (cell, moving index, side) inside a vector of length `n`.
fn cand_index(positions: &[(usize, usize, usize)], i: usize, moving: usize, left: bool) -> usize {
    positions
        .iter()
        .position(|&(j, x, y)| j == i && if left { x == moving && y == 0 } else { y == moving && x == 0 })
        .expect("cell has a spectator 0")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub cell: usize,
    pub label: String,
    /// `J^2 = J` in the quotient.
    pub idempotent: bool,
    pub dim: usize,
    /// `dim Delta(i) * dim Delta^op(i)`.
    pub expected_dim: usize,
    /// Dimension of the endomorphism algebra of `J` as a left module over the quotient.
    pub end_dim: usize,
    /// `|Y(i)|^2`.
    pub expected_end_dim: usize,
    /// The quotient acting on `e_i` gives a module of dimension `|X(i)|`, so `J` is a sum
    /// of copies of a projective module.
    pub projective: bool,
}

impl ChainStep {
    pub fn passed(&self) -> bool {
        self.idempotent
            && self.dim == self.expected_dim
            && self.end_dim == self.expected_end_dim
            && self.projective
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SplitChainReport {
    pub steps: Vec<ChainStep>,
}

impl SplitChainReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(ChainStep::passed)
    }
}

impl fmt::Display for SplitChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(
                f,
                "cell {}: J^2=J {}, dim J {} (expected {}), dim End {} (expected {}), projective {}",
                s.label, s.idempotent, s.dim, s.expected_dim, s.end_dim, s.expected_end_dim, s.projective
            )?;
        }
        Ok(())
    }
}

impl BasedAlgebra {
    /// Checks every candidate involution flag and, when standard, the bijections.
    pub fn verify_anti_involution(&self, tau: &AntiInvolution) -> Result<InvolutionReport, Error> {
        let alg = self.algebra();
        let n = alg.dim();
        if tau.images.len() != n {
            return Err(Error::IncompleteInvolution(format!(
                "{} images for {n} basis elements",
                tau.images.len()
            )));
        }
        for v in &tau.images {
            alg.check_element(v)?;
        }
        let mut report = InvolutionReport {
            anti_multiplicative: true,
            involutive: true,
            homogeneous: true,
            ..Default::default()
        };
        let note = |report: &mut InvolutionReport, w: String| {
            if report.witness.is_none() {
                report.witness = Some(w);
            }
        };
        'outer: for a in 0..n {
            for b in 0..n {
                let lhs = tau.apply(&alg.basis_product(a, b));
                let rhs = alg.mul(&tau.images[b], &tau.images[a]);
                if lhs != rhs {
                    report.anti_multiplicative = false;
                    note(
                        &mut report,
                        format!("tau({0}*{1}) != tau({1})*tau({0})", alg.label(a), alg.label(b)),
                    );
                    break 'outer;
                }
            }
        }
        for b in 0..n {
            if tau.apply(&tau.images[b]) != alg.basis_vector(b) {
                report.involutive = false;
                note(&mut report, format!("tau(tau({})) != {}", alg.label(b), alg.label(b)));
                break;
            }
        }
        for b in 0..n {
            if alg.homogeneous_degree(&tau.images[b]) != Some(alg.degree(b)) {
                report.homogeneous = false;
                break;
            }
        }
        let mut bijections = Vec::new();
        let mut bijective = true;
        for (i, cell) in self.data().cells().iter().enumerate() {
            let mut map = Vec::with_capacity(cell.x.len());
            let mut hit = BTreeSet::new();
            for x in &cell.x {
                match cell.y.iter().position(|y| *y == tau.apply(x)) {
                    Some(k) if hit.insert(k) => map.push(k),
                    _ => {
                        bijective = false;
                        note(
                            &mut report,
                            format!(
                                "tau({}) is not a new element of Y({})",
                                alg.render(x),
                                self.poset().label(i)
                            ),
                        );
                        break;
                    }
                }
            }
            if !bijective {
                break;
            }
            if hit.len() != cell.y.len() || tau.apply(cell.initial_element()) != *cell.initial_element() {
                bijective = false;
                note(
                    &mut report,
                    format!("tau does not restrict to X({0}) -> Y({0}) fixing e", self.poset().label(i)),
                );
                break;
            }
            bijections.push(map);
        }
        report.standard = report.anti_multiplicative && report.involutive && bijective;
        if report.standard {
            report.cellular = true;
            'cells: for (i, cell) in self.data().cells().iter().enumerate() {
                let map = &bijections[i];
                for (a, x) in cell.x.iter().enumerate() {
                    for (b, x2) in cell.x.iter().enumerate() {
                        let lhs = tau.apply(&alg.mul(x, &cell.y[map[b]]));
                        let rhs = alg.mul(x2, &cell.y[map[a]]);
                        if lhs != rhs {
                            report.cellular = false;
                            note(&mut report, format!("tau(x*y(x')) != x'*y(x) at x = {}", alg.render(x)));
                            break 'cells;
                        }
                    }
                }
            }
            report.bijections = Some(bijections);
        }
        Ok(report)
    }

    /// Checks the finite conditions of an indecomposable split heredity ideal along the
    /// chain of upper sets given by the linear extension, taken from the top.
    pub fn check_split_heredity_chain(&self) -> Result<SplitChainReport, Error> {
        let alg = self.algebra();
        alg.require_unit()?;
        let field = alg.field();
        let order = self.poset().linear_extension();
        let mut steps = Vec::new();
        for (k, &i) in order.iter().enumerate().rev() {
            let below: BTreeSet<usize> = order[k + 1..].iter().copied().collect();
            let range = self.cell_range(i);
            let cell = self.data().cell(i);
            let project = |v: &AlgebraElement| -> Vector {
                let c = self.reduce_mod_ideal(v, &below);
                c[range.clone()].to_vec()
            };
            let members = &self.basis_elements()[range.clone()];
            let dim = rank_of(field, range.len(), &members.iter().map(project).collect::<Vec<_>>());
            let mut squares = Vec::new();
            for u in members {
                for v in members {
                    squares.push(project(&alg.mul(u, v)));
                }
            }
            let idempotent = rank_of(field, range.len(), &squares) == dim;
            let mut actions = Vec::with_capacity(alg.dim());
            for a in 0..alg.dim() {
                let av = alg.basis_vector(a);
                let cols: Vec<Vector> = members.iter().map(|m| project(&alg.mul(&av, m))).collect();
                actions.push(ExactMatrix::from_columns(field, range.len(), &cols)?);
            }
            let end_dim = commutant_dimension(field, range.len(), &actions);
            let e = cell.initial_element();
            let ae: Vec<Vector> = (0..alg.dim())
                .map(|a| self.reduce_mod_ideal(&alg.mul(&alg.basis_vector(a), e), &below))
                .collect();
            let projective = rank_of(field, alg.dim(), &ae) == cell.x.len();
            steps.push(ChainStep {
                cell: i,
                label: self.poset().label(i).to_string(),
                idempotent,
                dim,
                expected_dim: (self.standard_graded_dim(i).eval_at_one()
                    * self.costandard_graded_dim(i).eval_at_one()) as usize,
                end_dim,
                expected_end_dim: cell.y.len() * cell.y.len(),
                projective,
            });
        }
        Ok(SplitChainReport { steps })
    }
}
