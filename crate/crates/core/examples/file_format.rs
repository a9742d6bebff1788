//! Writing a catalog algebra to the JSON format and reading it back.

use qhalg::catalog::matrix_superalgebra;
use qhalg::format::{parse, serialize, Description};
use qhalg::{BasedAlgebra, Field};

fn main() -> Result<(), qhalg::Error> {
    let m = matrix_superalgebra(1, 1, Field::Prime(3))?;
    let text = serialize(&Description::from(&m));
    for line in text.lines().take(12) {
        println!("{line}");
    }
    println!("... ({} lines)", text.lines().count());
    let back = parse(&text)?;
    assert_eq!(serialize(&back), text);
    let heredity = back.heredity.expect("heredity data was written");
    let report = BasedAlgebra::verify(&back.algebra, &heredity)?;
    println!("round trip verified: {}", report.passed());
    Ok(())
}
