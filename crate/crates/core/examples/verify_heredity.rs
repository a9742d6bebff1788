//! Verifying heredity data, then breaking it and reading the witness.

use qhalg::catalog::extended_zigzag;
use qhalg::heredity::{HeredityData, Poset};
use qhalg::{BasedAlgebra, Field};

fn main() -> Result<(), qhalg::Error> {
    let z = extended_zigzag(2, Field::Rational)?;
    println!("{}", BasedAlgebra::verify(z.algebra(), z.heredity())?);
    if let Some(tau) = &z.involution {
        let r = z.based.verify_anti_involution(tau)?;
        println!("anti-involution: {}", r.anti_multiplicative && r.involutive);
    }
    print!("{}", z.based.check_split_heredity_chain()?);

    let poset = z.based.poset();
    let reversed = poset.relations().iter().map(|&(a, b)| (b, a)).collect();
    let bad = HeredityData::new(Poset::new(poset.labels().to_vec(), reversed)?, z.heredity().cells().to_vec())?;
    let report = BasedAlgebra::verify(z.algebra(), &bad)?;
    println!("\nwith the order reversed (passed: {}):", report.passed());
    println!("{report}");
    Ok(())
}
