//! Where the summands of the product formula peak, and the Riemann sums
//! behind the volume limit.

use qknot::asymptotics::{argmax_profile, riemann_vs_integral};
use qknot::RootSchedule;

fn main() -> qknot::Result<()> {
    for n in 2..=4u32 {
        for a in [1, i64::from(n) - 1] {
            let sched = RootSchedule::new(a, 1, 256)?;
            for color in [120, 500, 1000] {
                let p = argmax_profile(n, color, &sched)?;
                println!("n = {n}, a = {a}, N = {color:4}: k_max = {:4} in [{}, {}]: {}", p.k_max, p.lower, p.upper, p.in_window);
            }
        }
    }
    for big_n in [100, 1_000, 10_000, 100_000] {
        let r = riemann_vs_integral(2, big_n, 1, 1)?;
        println!("N = {big_n:6}: sum {:.8} integral {:.8} gap {:.2e}", r.sum, r.integral, r.gap);
    }
    Ok(())
}
