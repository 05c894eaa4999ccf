//! Quantum integers, factorials, binomials and the three expansion bases.

use qknot::quantum::{cyclo_coeff, habiro_coeff, qbinom_shifted, qfact, qint, tilde_coeff, CoeffQuery};

fn main() -> qknot::Result<()> {
    for m in 1..=4 {
        println!("[{m}] = {}", qint(m));
    }
    println!("[3]! = {}", qfact(3)?);
    println!("binom_shifted(4, 2) = {}", qbinom_shifted(4, 2)?);

    let query = CoeffQuery::new(3, 2, 3)?;
    println!("C^(3)_(4,2)       = {}", cyclo_coeff(&query));
    println!("tilde C^(3)_(4,2) = {}", tilde_coeff(&query)?);

    // at rank 2 the cyclotomic coefficients are Habiro's, shifted by one
    let rank_two = cyclo_coeff(&CoeffQuery::new(3, 2, 2)?);
    println!("C^(2)_(4,2) == Habiro C_(4,2): {}", rank_two == habiro_coeff(4, 2)?);
    Ok(())
}
