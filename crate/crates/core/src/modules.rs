//! Standard, costandard and simple modules of a based algebra, and graded
//! decomposition numbers.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::AlgebraElement;
use crate::error::Error;
use crate::heredity::BasedAlgebra;
use crate::linalg::{commutant_dimension, Degree, ExactMatrix, Field, GradedDim, SpanCoordinates, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite-dimensional graded module given by one matrix per ambient basis element.
///
/// On the left, `action[a]` is the matrix of `v -> a v`. On the right, column `w` of
/// `action[a]` holds the coordinates of `w a`, so `action[ab] = action[b] * action[a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub field: Field,
    pub side: Side,
    pub degrees: Vec<Degree>,
    pub action: Vec<ExactMatrix>,
}

impl ModuleRep {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn graded_dim(&self) -> GradedDim {
        let mut g = GradedDim::zero();
        for &d in &self.degrees {
            g.add_term(d, 1);
        }
        g
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, a: &AlgebraElement) -> ExactMatrix {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(self.field, n, n);
        for (k, c) in a.terms() {
            m = m.add(&self.action[k].scale(c)).expect("square of module dimension");
        }
        m
    }

    /// Graded dimension of the image of a degree-preserving map, computed one
    /// homogeneous component at a time.
    pub fn image_graded_dim(&self, m: &ExactMatrix) -> GradedDim {
        let mut g = GradedDim::zero();
        let components: BTreeSet<Degree> = self.degrees.iter().copied().collect();
        for d in components {
            let idx: Vec<usize> = (0..self.dim()).filter(|&k| self.degrees[k] == d).collect();
            let rank = m.select(&idx, &idx).rank();
            g.add_term(d, rank as i64);
        }
        g
    }

    /// The subspace spanned by the columns of `p`, acted on by `acting`. Fails when the
    /// subspace is not stable.
    pub fn restrict_to_image(
        &self,
        p: &ExactMatrix,
        acting: &[AlgebraElement],
    ) -> Result<ModuleRep, Error> {
        let pivots = p.rref().pivots;
        let cols: Vec<Vector> = pivots.iter().map(|&c| p.column(c)).collect();
        let span = SpanCoordinates::new(self.field, self.dim(), &cols)
            .expect("pivot columns are independent");
        let degrees = pivots.iter().map(|&c| self.degrees[c]).collect();
        let mut action = Vec::with_capacity(acting.len());
        for a in acting {
            let m = self.act(a);
            let mut images = Vec::with_capacity(cols.len());
            for u in &cols {
                let image = m.apply(u);
                images.push(span.coordinates(&image).ok_or_else(|| {
                    Error::Corrupt("subspace is not stable under the action".into())
                })?);
            }
            action.push(ExactMatrix::from_columns(self.field, cols.len(), &images)?);
        }
        Ok(ModuleRep {
            field: self.field,
            side: self.side,
            degrees,
            action,
        })
    }
}

/// `Delta(i)` on the left, `Delta^op(i)` on the right.
pub fn standard_module(b: &BasedAlgebra, i: usize, side: Side) -> ModuleRep {
    let alg = b.algebra();
    let cell = b.data().cell(i);
    let list = match side {
        Side::Left => &cell.x,
        Side::Right => &cell.y,
    };
    let degrees = list
        .iter()
        .map(|v| alg.homogeneous_degree(v).expect("verified homogeneous"))
        .collect();
    let action = (0..alg.dim())
        .map(|a| match side {
            Side::Left => b.left_action(i, a).clone(),
            Side::Right => b.right_action(i, a).clone(),
        })
        .collect();
    ModuleRep {
        field: alg.field(),
        side,
        degrees,
        action,
    }
}

/// `Delta(i)` rebuilt as a subquotient `A(omega + i) / A(omega)` for an upper set
/// `omega` not containing `i` whose union with `{i}` is again an upper set.
pub fn standard_module_relative(
    b: &BasedAlgebra,
    i: usize,
    omega: &BTreeSet<usize>,
) -> Result<ModuleRep, Error> {
    let poset = b.poset();
    let mut bigger = omega.clone();
    bigger.insert(i);
    if omega.contains(&i) || !poset.is_upper_set(omega) || !poset.is_upper_set(&bigger) {
        return Err(Error::NotUpperSet(
            bigger.iter().map(|&j| poset.label(j).to_string()).collect(),
        ));
    }
    let alg = b.algebra();
    let field = alg.field();
    let cell = b.data().cell(i);
    let iy = cell.initial_y();
    let slots: Vec<usize> = (0..cell.x.len()).map(|x| b.basis_index(i, x, iy)).collect();
    let mut action = Vec::with_capacity(alg.dim());
    for a in 0..alg.dim() {
        let av = alg.basis_vector(a);
        let mut cols = Vec::with_capacity(cell.x.len());
        for x in &cell.x {
            let r = b.reduce_mod_ideal(&alg.mul(&av, x), omega);
            let outside = (0..r.len()).any(|k| !r[k].is_zero() && !slots.contains(&k));
            if outside {
                return Err(Error::Corrupt(format!(
                    "{}*{} escapes span X({})",
                    alg.label(a),
                    alg.render(x),
                    poset.label(i)
                )));
            }
            cols.push(slots.iter().map(|&k| r[k].clone()).collect::<Vec<_>>());
        }
        action.push(ExactMatrix::from_columns(field, cell.x.len(), &cols)?);
    }
    Ok(ModuleRep {
        field,
        side: Side::Left,
        degrees: standard_module(b, i, Side::Left).degrees,
        action,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    pub passed: bool,
    pub witness: Option<String>,
}

/// Checks `(a v, w) = (v, w a)` for every ambient basis element and `(v_i, w_i) = 1`,
/// with the pairing given by `gram` (rows `Y(i)`, columns `X(i)`).
pub fn pairing_check(b: &BasedAlgebra, i: usize, gram: &ExactMatrix) -> PairingReport {
    let alg = b.algebra();
    let cell = b.data().cell(i);
    let fail = |w: String| PairingReport {
        passed: false,
        witness: Some(w),
    };
    if gram.rows() != cell.y.len() || gram.cols() != cell.x.len() {
        return fail("Gram matrix has the wrong shape".into());
    }
    if !gram.get(cell.initial_y(), cell.initial).is_one() {
        return fail(format!("(v_{0}, w_{0}) != 1", b.poset().label(i)));
    }
    for a in 0..alg.dim() {
        let lhs = gram.mul(b.left_action(i, a)).expect("shapes agree");
        let rhs = b.right_action(i, a).transpose().mul(gram).expect("shapes agree");
        if lhs != rhs {
            for y in 0..cell.y.len() {
                for x in 0..cell.x.len() {
                    if lhs.get(y, x) != rhs.get(y, x) {
                        return fail(format!(
                            "(a v, w) != (v, w a) for a = {}, v = {}, w = {}",
                            alg.label(a),
                            alg.render(&cell.x[x]),
                            alg.render(&cell.y[y])
                        ));
                    }
                }
            }
        }
    }
    PairingReport {
        passed: true,
        witness: None,
    }
}

/// `L(i) = Delta(i) / rad`, with the basis given by the pivot columns of the Gram
/// matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleModule {
    pub cell: usize,
    pub module: ModuleRep,
    /// Basis of the radical, as coordinate vectors in `Delta(i)`.
    pub radical: Vec<Vector>,
    /// The quotient map `Delta(i) -> L(i)`.
    pub projection: ExactMatrix,
}

pub fn radical_and_simple(b: &BasedAlgebra, i: usize) -> Result<SimpleModule, Error> {
    let gram = b.gram_form(i)?;
    let delta = standard_module(b, i, Side::Left);
    let radical = gram.kernel_basis();
    let rref = gram.rref();
    let projection = rref.row_basis();
    let rows: Vec<usize> = (0..rref.rank).collect();
    let action = delta
        .action
        .iter()
        .map(|m| {
            projection
                .mul(m)
                .expect("shapes agree")
                .select(&rows, &rref.pivots)
        })
        .collect();
    let degrees = rref.pivots.iter().map(|&p| delta.degrees[p]).collect();
    Ok(SimpleModule {
        cell: i,
        module: ModuleRep {
            field: delta.field,
            side: Side::Left,
            degrees,
            action,
        },
        radical,
        projection,
    })
}

/// Graded dimension of `e M`.
pub fn e_weight_graded_dim(m: &ModuleRep, e: &AlgebraElement) -> GradedDim {
    m.image_graded_dim(&m.act(e))
}

/// Graded decomposition numbers `d[i][j]`, rows and columns in linear-extension order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<GradedDim>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, row: &str, col: &str) -> Option<&GradedDim> {
        let r = self.row_labels.iter().position(|l| l == row)?;
        let c = self.col_labels.iter().position(|l| l == col)?;
        Some(&self.entries[r][c])
    }
}

impl fmt::Display for DecompositionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Solves `D[i][k] = sum_j d[i][j] N[k][j]` for `d`, where `N` is unitriangular with
/// respect to the column order (`N[k][j] != 0` only for `k <= j`).
pub(crate) fn solve_unitriangular(
    weights: &[Vec<GradedDim>],
    n: &[Vec<GradedDim>],
) -> Result<Vec<Vec<GradedDim>>, Error> {
    let size = n.len();
    for (k, row) in n.iter().enumerate() {
        if !row[k].is_one() {
            return Err(Error::InconsistentDecomposition(format!(
                "weight {k} of its own simple is {}, expected 1",
                row[k]
            )));
        }
        if let Some(j) = (0..k).find(|&j| !row[j].is_zero()) {
            return Err(Error::InconsistentDecomposition(format!(
                "simple {j} has a non-zero weight {k} above it"
            )));
        }
    }
    let mut out = Vec::with_capacity(weights.len());
    for w in weights {
        let mut d = vec![GradedDim::zero(); size];
        for k in (0..size).rev() {
            let mut v = w[k].clone();
            for j in k + 1..size {
                v = &v - &(&d[j] * &n[k][j]);
            }
            d[k] = v;
        }
        out.push(d);
    }
    Ok(out)
}

/// The bigraded decomposition matrix by the weight-space triangular solve.
pub fn decomposition_matrix(b: &BasedAlgebra) -> Result<DecompositionMatrix, Error> {
    let order = b.poset().linear_extension();
    let simples: Vec<SimpleModule> = order
        .iter()
        .map(|&j| radical_and_simple(b, j))
        .collect::<Result<_, _>>()?;
    let idem: Vec<&AlgebraElement> = order.iter().map(|&k| b.data().initial(k)).collect();
    let n: Vec<Vec<GradedDim>> = idem
        .iter()
        .map(|e| simples.iter().map(|s| e_weight_graded_dim(&s.module, e)).collect())
        .collect();
    let weights: Vec<Vec<GradedDim>> = order
        .iter()
        .map(|&i| {
            let delta = standard_module(b, i, Side::Left);
            idem.iter().map(|e| e_weight_graded_dim(&delta, e)).collect()
        })
        .collect();
    let entries = solve_unitriangular(&weights, &n)?;
    let labels: Vec<String> = order.iter().map(|&i| b.poset().label(i).to_string()).collect();
    for (r, row) in entries.iter().enumerate() {
        for (c, d) in row.iter().enumerate() {
            if !d.has_nonnegative_coefficients() {
                return Err(Error::InconsistentDecomposition(format!(
                    "d[{}][{}] = {d} has a negative coefficient",
                    labels[r], labels[c]
                )));
            }
            if r == c && !d.is_one() {
                return Err(Error::InconsistentDecomposition(format!(
                    "d[{0}][{0}] = {d}, expected 1",
                    labels[r]
                )));
            }
            if !d.is_zero() && !b.poset().leq(order[c], order[r]) {
                return Err(Error::InconsistentDecomposition(format!(
                    "d[{}][{}] = {d} although {} is not below {}",
                    labels[r], labels[c], labels[c], labels[r]
                )));
            }
        }
    }
    Ok(DecompositionMatrix {
        row_labels: labels.clone(),
        col_labels: labels,
        entries,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    /// Dimension of the commutant of the `Delta(i)` action.
    pub end_dim: usize,
    /// Graded dimension of `A(I^{>=i}) / A(I^{>i})`.
    pub cell_layer: GradedDim,
    /// `dim Delta(i) * dim Delta^op(i)`.
    pub product: GradedDim,
}

impl StructuralReport {
    pub fn passed(&self) -> bool {
        self.end_dim == 1 && self.cell_layer == self.product
    }
}

pub fn structural_checks(b: &BasedAlgebra, i: usize) -> StructuralReport {
    let alg = b.algebra();
    let delta = standard_module(b, i, Side::Left);
    let end_dim = commutant_dimension(alg.field(), delta.dim(), &delta.action);
    let mut cell_layer = GradedDim::zero();
    for k in b.cell_range(i) {
        let d = alg
            .homogeneous_degree(&b.basis_elements()[k])
            .expect("product of homogeneous elements");
        cell_layer.add_term(d, 1);
    }
    StructuralReport {
        end_dim,
        cell_layer,
        product: &b.standard_graded_dim(i) * &b.costandard_graded_dim(i),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{extended_zigzag, matrix_superalgebra};
    use crate::linalg::Parity;

    const Q: Field = Field::Rational;

    fn qpi() -> GradedDim {
        GradedDim::q_pi(1, Parity::Odd)
    }

    #[test]
    fn zigzag_standard_modules() {
        let z = extended_zigzag(3, Q).unwrap();
        let d1 = standard_module(&z.based, 1, Side::Left);
        assert_eq!(d1.graded_dim(), &GradedDim::one() + &qpi());
        assert!(standard_module(&z.based, 0, Side::Left).graded_dim().is_one());
        let e0 = z.algebra().element_by_label("e0").unwrap();
        let e2 = z.algebra().element_by_label("e2").unwrap();
        assert_eq!(e_weight_graded_dim(&d1, &e0), qpi());
        assert!(e_weight_graded_dim(&d1, &e2).is_zero());
    }

    #[test]
    fn matrix_standard_module() {
        let m = matrix_superalgebra(2, 1, Q).unwrap();
        let d = standard_module(&m.based, 0, Side::Left);
        let expected = GradedDim::from_triples(&[[0, 0, 1], [1, 0, 1], [2, 1, 1]]);
        assert_eq!(d.graded_dim(), expected);
        let gram = m.based.gram_form(0).unwrap();
        assert_eq!(gram, ExactMatrix::identity(Q, 3));
        let s = radical_and_simple(&m.based, 0).unwrap();
        assert!(s.radical.is_empty());
        assert_eq!(s.module.dim(), 3);
    }

    #[test]
    fn zigzag_radical() {
        let z = extended_zigzag(3, Q).unwrap();
        let gram = z.based.gram_form(1).unwrap();
        assert_eq!(gram, ExactMatrix::from_i64_rows(Q, &[&[1, 0], &[0, 0]]));
        let s = radical_and_simple(&z.based, 1).unwrap();
        assert_eq!(s.radical, vec![vec![Q.zero(), Q.one()]]);
        assert!(s.module.graded_dim().is_one());
        assert!(radical_and_simple(&z.based, 0).unwrap().radical.is_empty());
    }

    #[test]
    fn zigzag_decomposition() {
        for field in [Q, Field::Prime(2), Field::Prime(3)] {
            let z = extended_zigzag(3, field).unwrap();
            let d = decomposition_matrix(&z.based).unwrap();
            assert_eq!(
                d.to_string(),
                "[1, 0, 0, 0]\n[q*pi, 1, 0, 0]\n[0, q*pi, 1, 0]\n[0, 0, q*pi, 1]\n"
            );
        }
    }

    #[test]
    fn relative_construction_agrees() {
        let z = extended_zigzag(3, Q).unwrap();
        for i in 0..4 {
            let omega = z.based.poset().strictly_above(i);
            let rel = standard_module_relative(&z.based, i, &omega).unwrap();
            assert_eq!(rel, standard_module(&z.based, i, Side::Left));
        }
        assert!(standard_module_relative(&z.based, 1, &BTreeSet::new()).is_err());
    }

    #[test]
    fn pairing_and_structure() {
        let z = extended_zigzag(3, Q).unwrap();
        for i in 0..4 {
            let g = z.based.gram_form(i).unwrap();
            assert!(pairing_check(&z.based, i, &g).passed);
            assert!(structural_checks(&z.based, i).passed());
        }
        let s = structural_checks(&z.based, 1);
        assert_eq!(s.cell_layer.to_string(), "1 + 2*q*pi + q^2");
        let mut g = z.based.gram_form(1).unwrap();
        g.set(1, 1, Q.one());
        let r = pairing_check(&z.based, 1, &g);
        assert!(!r.passed && r.witness.is_some());
    }
}
