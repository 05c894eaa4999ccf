//! Exact SU(n) invariants of the bundled knots.

use qknot::catalog::invariant_41_direct;
use qknot::Catalog;

fn main() -> qknot::Result<()> {
    let catalog = Catalog::bundled();
    for record in catalog.records() {
        let j = record.invariant_poly(3, 2)?;
        println!("{}: J_2^SU(3) has {} terms, degrees {}..{}", record.name(), j.len(), j.min_exponent().unwrap(), j.max_exponent().unwrap());
    }
    println!("4_1, SU(2), N = 1: {}", catalog.get("4_1")?.invariant_poly(2, 1)?);

    // two independent constructions of the figure-eight invariant
    let nested = catalog.get("4_1")?.invariant_poly(4, 6)?;
    let summed = invariant_41_direct(4, 7)?;
    println!("4_1, SU(4), N = 6: constructions agree = {}", nested == summed);

    match catalog.get("5_2")?.invariant_poly(2, 9) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("5_2 beyond its table: {e}"),
    }
    Ok(())
}
