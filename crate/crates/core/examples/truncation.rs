//! Truncating the extended zigzag algebra to eAe with e = e0 + ... + e(l-1).

use qhalg::catalog::extended_zigzag;
use qhalg::truncation::{classify_idempotent, truncate, truncated_decomposition};
use qhalg::Field;

fn main() -> Result<(), qhalg::Error> {
    let l = 3;
    let z = extended_zigzag(l, Field::Rational)?;
    let e = z.algebra().parse_element("e0 + e1 + e2")?;
    let ai = classify_idempotent(&z.based, &e)?;
    println!("adapted {}, strongly adapted {}", ai.adapted, ai.strongly_adapted);
    let t = truncate(&z.based, &ai, z.involution.as_ref())?;
    println!("dim A = {}, dim eAe = {}", z.algebra().dim(), t.algebra.dim());
    println!("cellular: {}", t.cellular.is_certified());
    print!("{}", truncated_decomposition(&z.based, &ai)?);
    Ok(())
}
