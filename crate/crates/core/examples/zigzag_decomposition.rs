//! Graded decomposition numbers of the extended zigzag algebra over Q and GF(2).

use qhalg::catalog::extended_zigzag;
use qhalg::modules::{decomposition_matrix, radical_and_simple};
use qhalg::Field;

fn main() -> Result<(), qhalg::Error> {
    for field in [Field::Rational, Field::Prime(2)] {
        let z = extended_zigzag(3, field)?;
        println!("Z(3) over {field}, dim {}", z.algebra().dim());
        for i in 0..z.based.poset().len() {
            let l = radical_and_simple(&z.based, i)?;
            println!(
                "  Delta({i}) = {}, L({i}) = {}",
                z.based.standard_graded_dim(i),
                l.module.graded_dim()
            );
        }
        print!("{}", decomposition_matrix(&z.based)?);
    }
    Ok(())
}
