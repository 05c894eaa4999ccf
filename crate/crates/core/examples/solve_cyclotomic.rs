//! Recover H_k from an invariant sequence by forward substitution.

use qknot::{Basis, Catalog};

fn main() -> qknot::Result<()> {
    let catalog = Catalog::bundled();
    let record = catalog.get("5_2")?;
    let js: Vec<_> = (0..=4).map(|c| record.invariant_poly(3, c)).collect::<qknot::Result<_>>()?;
    let solution = qknot::solver::solve_hk(&js, Basis::Cyclotomic { rank: 3 })?;
    for entry in &solution.entries {
        println!("H_{} = {}  (matches table: {})", entry.k, entry.numerator, &entry.numerator == &record.hk(3, entry.k)?);
    }

    // a perturbed sequence is no longer integral
    let mut bad = js.clone();
    bad[2] = &bad[2] + &qknot::LaurentPoly::one();
    let solution = qknot::solver::solve_hk(&bad, Basis::Cyclotomic { rank: 3 })?;
    for entry in solution.entries.iter().filter(|e| !e.integral) {
        println!("H_{} is not a Laurent polynomial; denominator {}", entry.k, entry.denominator);
    }
    Ok(())
}
