//! The even-product subalgebra and the Z/2 x Z/2 grading check.

use qhalg::catalog::{extended_zigzag, matrix_superalgebra};
use qhalg::truncation::{conformity_check, z2z2_check};
use qhalg::Field;

fn main() -> Result<(), qhalg::Error> {
    let z = extended_zigzag(2, Field::Rational)?;
    let c = conformity_check(&z.based)?;
    println!(
        "Z(2): conforming {}, dim a = {}",
        c.passed(),
        c.subalgebra.as_ref().map_or(0, |s| s.dim())
    );
    if let Some(g) = &z.bigrading {
        let r = z2z2_check(&z.based, g)?;
        println!("Z(2): bigrading {}, cross-validated {:?}", r.passed, r.cross_validated);
    }

    let m = matrix_superalgebra(2, 1, Field::Rational)?;
    let c = conformity_check(&m.based)?;
    println!("M(2|1): conforming {}, dim a = {}", c.passed(), c.basis.len());
    if let Some(w) = c.witness {
        println!("  {w}");
    }
    Ok(())
}
