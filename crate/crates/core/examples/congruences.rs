//! Divisibility certificates for the color and rank congruences, and rank
//! reduction at a root of unity.

use qknot::solver::{check_congruence_color, check_congruence_rank, rank_reduction_at_root};
use qknot::{Catalog, RootSchedule};

fn main() -> qknot::Result<()> {
    let catalog = Catalog::bundled();
    let w = check_congruence_color(catalog.get("4_1")?, 3, 1, 0)?;
    println!("[1][4] | J_1 - J_0 for 4_1, SU(3): {} with quotient {}", w.holds, w.quotient.as_ref().unwrap());

    let w = check_congruence_rank(catalog.get("5_2")?, 4, 2, 3)?;
    println!("[2] | J_3^SU(4) - J_3^SU(2) for 5_2: {}", w.holds);
    println!("{}", serde_json::to_string_pretty(&check_congruence_rank(catalog.get("4_1")?, 4, 2, 1)?).unwrap());

    let sched = RootSchedule::new(1, 1, 256)?;
    let r = rank_reduction_at_root(catalog.get("4_1")?, 8, 2, 5, &sched)?;
    println!("SU(8) vs SU(2) at exp(pi i/6): residual {:e}", r.residual);
    Ok(())
}
