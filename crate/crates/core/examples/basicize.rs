//! Reducing a conforming algebra to fAf and auditing the functor on modules.

use qhalg::basicize::basicize;
use qhalg::catalog::{direct_sum, extended_zigzag, matrix_superalgebra};
use qhalg::Field;

fn main() -> Result<(), qhalg::Error> {
    let field = Field::Rational;
    let a = direct_sum(&extended_zigzag(1, field)?, &matrix_superalgebra(2, 1, field)?)?;
    let r = basicize(&a.based)?;
    let alg = a.algebra();
    for (i, p) in r.primitives.iter().enumerate() {
        println!("e'_{i} = {}", alg.render(p));
    }
    println!("1 - f = {}", alg.render(&r.complement));
    println!("dim A = {}, dim fAf = {}", alg.dim(), r.algebra().dim());
    println!("odd part in J(A): {}, basic: {:?}", r.odd_in_radical, r.basic);
    print!("{}", r.audit);
    Ok(())
}
