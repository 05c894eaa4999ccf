//! Growing rank N + a + n gives the same statistics as fixed rank n.

use qknot::asymptotics::{double_limit_table, limit_table};
use qknot::complex::abs_diff;
use qknot::{KnotRecord, RootSchedule};

fn main() -> qknot::Result<()> {
    let sched = RootSchedule::new(1, 1, 256)?;
    let colors: Vec<u32> = (5..=25).step_by(5).collect();
    let fixed = limit_table(&KnotRecord::figure_eight(), 2, &sched, &colors);
    let double = double_limit_table(&KnotRecord::figure_eight(), 2, &sched, &colors);
    for (f, d) in fixed.iter().zip(&double) {
        let (f, d) = (f.sample.as_ref().unwrap(), d.sample.as_ref().unwrap());
        println!("N = {:2}, rank {:2}: Q = {}, |difference| = {:e}", f.color, d.rank, f.q_step, abs_diff(&f.q_step, &d.q_step));
    }
    Ok(())
}
