//! Building the zigzag algebra as a quiver with relations and comparing it to the
//! catalog version.

use qhalg::catalog::{extended_zigzag, path_algebra_quotient, QuiverPresentation};
use qhalg::Field;

fn main() -> Result<(), qhalg::Error> {
    for l in 1..=4 {
        let q = QuiverPresentation::zigzag(l);
        let p = path_algebra_quotient(&q, Field::Rational)?;
        let z = extended_zigzag(l, Field::Rational)?;
        println!(
            "l = {l}: {} arrows, {} relations, path quotient dim {}, catalog dim {}",
            q.arrows.len(),
            q.relations.len(),
            p.dim(),
            z.algebra().dim()
        );
        println!("  graded dim {}", p.graded_dimension());
    }
    Ok(())
}
