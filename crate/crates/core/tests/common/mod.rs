#![allow(dead_code)]

use qhalg::catalog::{direct_sum, extended_zigzag, matrix_superalgebra, CatalogEntry};
use qhalg::heredity::{Cell, HeredityData, Poset};
use qhalg::{AlgebraElement, BasedAlgebra, BasisElement, Degree, Error, Field, Scalar, SuperAlgebra};

pub const FIELDS: [Field; 4] = [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5)];

/// A catalog algebra chosen by index, cycling through families and fields.
pub fn catalog_entry(index: usize) -> CatalogEntry {
    let field = FIELDS[index % FIELDS.len()];
    match (index / FIELDS.len()) % 9 {
        k @ 0..=3 => extended_zigzag(k + 1, field).unwrap(),
        4 => matrix_superalgebra(1, 0, field).unwrap(),
        5 => matrix_superalgebra(1, 1, field).unwrap(),
        6 => matrix_superalgebra(2, 1, field).unwrap(),
        7 => matrix_superalgebra(1, 2, field).unwrap(),
        _ => direct_sum(
            &extended_zigzag(1, field).unwrap(),
            &matrix_superalgebra(1, 1, field).unwrap(),
        )
        .unwrap(),
    }
}

pub const CATALOG_SIZE: usize = 36;

/// Rewrites an element in the basis `b'_k = s_k b_k`.
pub fn to_scaled(v: &AlgebraElement, scales: &[Scalar]) -> AlgebraElement {
    AlgebraElement::from_terms(v.terms().map(|(k, c)| (k, c * &scales[k].inv().unwrap())))
}

/// The same algebra and heredity data written in a rescaled basis. The result is a
/// valid based algebra whose structure constants differ from the catalog ones.
pub fn rescaled(b: &BasedAlgebra, raw: &[i64]) -> BasedAlgebra {
    let alg = b.algebra();
    let field = alg.field();
    let scales: Vec<Scalar> = (0..alg.dim())
        .map(|k| {
            let s = field.from_i64(raw[k % raw.len()]);
            if s.is_zero() {
                field.one()
            } else {
                s
            }
        })
        .collect();
    let basis: Vec<BasisElement> = alg.basis().to_vec();
    let products: Vec<_> = alg
        .products()
        .map(|((i, j), v)| {
            let scaled = to_scaled(v, &scales).scale(&(&scales[i] * &scales[j]));
            ((i, j), scaled)
        })
        .collect();
    let unit = alg.unit().map(|u| to_scaled(u, &scales));
    let new = SuperAlgebra::new(field, basis, products, unit).unwrap();
    let cells = b
        .data()
        .cells()
        .iter()
        .map(|c| {
            Cell::new(
                c.x.iter().map(|v| to_scaled(v, &scales)).collect(),
                c.y.iter().map(|v| to_scaled(v, &scales)).collect(),
                c.initial,
            )
        })
        .collect();
    let data = HeredityData::new(b.poset().clone(), cells).unwrap();
    BasedAlgebra::new(new, data).unwrap()
}

#[derive(Clone, Copy, Debug)]
pub enum Mutation {
    DropElement,
    DuplicateElement,
    Inhomogeneous,
    KillIdempotentSquare,
    ShiftIdempotentDegree,
    ReverseOrder,
    DoubleInitial,
}

pub const ALL: [Mutation; 7] = [
    Mutation::DropElement,
    Mutation::DuplicateElement,
    Mutation::Inhomogeneous,
    Mutation::KillIdempotentSquare,
    Mutation::ShiftIdempotentDegree,
    Mutation::ReverseOrder,
    Mutation::DoubleInitial,
];

/// Applies a mutation that always yields invalid input; returns the mutated parts, or
/// the error raised while assembling them.
pub fn mutate(b: &BasedAlgebra, m: Mutation, r: usize) -> Result<(SuperAlgebra, HeredityData), Error> {
    let alg = b.algebra();
    let field = alg.field();
    let mut basis = alg.basis().to_vec();
    let mut products: Vec<((usize, usize), AlgebraElement)> =
        alg.products().map(|(k, v)| (k, v.clone())).collect();
    let unit = alg.unit().cloned();
    let mut cells: Vec<Cell> = b.data().cells().to_vec();
    let mut poset = b.poset().clone();
    let n_cells = cells.len();
    let i = r % n_cells;
    let idem = b.data().initial(i).support().next().unwrap();
    match m {
        Mutation::DropElement => {
            let big: Vec<usize> = (0..n_cells).filter(|&k| cells[k].x.len() > 1).collect();
            if big.is_empty() {
                let first = cells[i].x[0].clone();
                cells[i].x.push(first);
            } else {
                let c = &mut cells[big[r % big.len()]];
                let pos = if c.initial == 0 { c.x.len() - 1 } else { 0 };
                c.x.remove(pos);
            }
        }
        Mutation::DuplicateElement => {
            let c = &mut cells[i];
            let v = c.y[r % c.y.len()].clone();
            c.y.push(v);
        }
        Mutation::Inhomogeneous => {
            let c = &mut cells[i];
            let x = (r / n_cells) % c.x.len();
            let d = alg.homogeneous_degree(&c.x[x]).unwrap();
            match (0..alg.dim()).find(|&k| alg.degree(k) != d) {
                Some(k) => c.x[x] = &c.x[x] + &AlgebraElement::basis(k, field),
                None => c.x.push(c.x[0].clone()),
            }
        }
        Mutation::KillIdempotentSquare => products.retain(|(k, _)| *k != (idem, idem)),
        Mutation::ShiftIdempotentDegree => {
            let d = basis[idem].degree;
            basis[idem].degree = Degree::new(d.q + 1, d.parity);
        }
        Mutation::ReverseOrder => {
            let rel: Vec<(usize, usize)> = poset.relations().iter().map(|&(a, c)| (c, a)).collect();
            if rel.is_empty() || b.poset().cover_relations().len() + 1 != n_cells {
                let first = cells[i].x[0].clone();
                cells[i].x.push(first);
            } else {
                poset = Poset::new(poset.labels().to_vec(), rel)?;
            }
        }
        Mutation::DoubleInitial => {
            let two = field.from_i64(2);
            let c = &mut cells[i];
            let (ix, iy) = (c.initial, c.initial_y());
            c.x[ix] = c.x[ix].scale(&two);
            c.y[iy] = c.y[iy].scale(&two);
        }
    }
    let alg = SuperAlgebra::new(field, basis, products, unit)?;
    let data = HeredityData::new(poset, cells)?;
    Ok((alg, data))
}

/// `Some(witness)` when the input is rejected.
pub fn rejection(parts: Result<(SuperAlgebra, HeredityData), Error>) -> Option<String> {
    let (alg, data) = match parts {
        Err(e) => return Some(e.to_string()),
        Ok(p) => p,
    };
    match BasedAlgebra::analyze(alg, data) {
        Err(e) => Some(e.to_string()),
        Ok(Err(report)) => {
            assert!(!report.passed());
            Some(report.to_string())
        }
        Ok(Ok(_)) => None,
    }
}
