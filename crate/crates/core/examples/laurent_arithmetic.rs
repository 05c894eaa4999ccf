//! Exact arithmetic in Z[q, q^-1]: parsing, products, exact division, evaluation.

use qknot::complex::BigComplex;
use qknot::LaurentPoly;

fn main() -> qknot::Result<()> {
    let a: LaurentPoly = "q^2 - q^-2".parse()?;
    let b: LaurentPoly = "q - q^-1".parse()?;
    let product = &a * &b;
    println!("({a}) * ({b}) = {product}");
    println!("({a}) / ({b}) = {}", a.exact_div(&b)?);
    match b.exact_div(&a) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("({b}) / ({a}): {e}"),
    }

    // factored input is expanded on parse
    let f: LaurentPoly = "-q^{5}(1+q^{2})^{2}(1-q^{2}+q^{4})".parse()?;
    println!("expanded: {f}");
    println!("json:     {}", serde_json::to_string(&f).unwrap());

    let z = BigComplex::exp_i_pi_rational(1, 5, 128);
    println!("at q = exp(pi i/5): {}", product.eval(&z)?);
    Ok(())
}
