//! Q(N, n, a, 1) for the figure-eight knot against 6 Lambda(pi/3).

use qknot::asymptotics::{limit_table, reference_volume, table_to_csv};
use qknot::{KnotRecord, RootSchedule};

fn main() -> qknot::Result<()> {
    let volume = reference_volume("4_1", 256)?;
    println!("6 Lambda(pi/3) = {}", volume.re_f64());
    for (n, a) in [(2, 1), (3, 1), (4, 3)] {
        let sched = RootSchedule::new(a, 1, 256)?;
        let rows = limit_table(&KnotRecord::figure_eight(), n, &sched, &[100, 200, 400, 800]);
        print!("{}", table_to_csv(&rows, Some(&volume)));
        for row in &rows {
            let q = row.sample.as_ref().unwrap();
            println!("  N = {:4}: N (Q - V) = {:.4}", row.color, row.color as f64 * (q.q_step.re_f64() - volume.re_f64()));
        }
    }
    Ok(())
}
