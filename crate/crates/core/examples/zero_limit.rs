//! log J_N / (N+1) tends to 0 when a lies outside 1..n-1.

use qknot::asymptotics::limit_table;
use qknot::{Catalog, RootSchedule};

fn main() -> qknot::Result<()> {
    let catalog = Catalog::bundled();
    for name in ["4_1", "3_1", "5_2"] {
        for a in [-1, 0, 3, 4] {
            let sched = RootSchedule::new(a, 1, 256)?;
            let rows = limit_table(catalog.get(name)?, 3, &sched, &[125, 250, 500]);
            let ratios: Vec<String> = rows
                .iter()
                .map(|r| match &r.sample {
                    Ok(q) => format!("{:.3e}", q.log_ratio.abs_f64()),
                    Err(e) => format!("({e})"),
                })
                .collect();
            println!("{name}, SU(3), a = {a:2}: |log_ratio| at N = 125, 250, 500: {}", ratios.join(", "));
        }
    }
    Ok(())
}
