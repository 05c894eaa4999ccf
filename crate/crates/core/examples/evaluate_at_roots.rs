//! The three evaluation routes at xi_{N,a}(s) and their agreement.

use qknot::asymptotics::{eval_invariant_at_root_via, select_path, truncation_depth};
use qknot::complex::relative_error_log2;
use qknot::{Catalog, EvalPath, RootSchedule};

fn main() -> qknot::Result<()> {
    let catalog = Catalog::bundled();
    let fig8 = catalog.get("4_1")?;
    let sched = RootSchedule::new(2, 1, 256)?;
    let symbolic = eval_invariant_at_root_via(fig8, 3, 40, &sched, EvalPath::Symbolic)?;
    let direct = eval_invariant_at_root_via(fig8, 3, 40, &sched, EvalPath::Direct)?;
    println!("4_1, SU(3), N = 40, a = 2: {symbolic}");
    println!("symbolic vs direct: 2^{:.1} relative", relative_error_log2(&direct, &symbolic));

    // outside 1 <= a <= n-1 an expansion factor vanishes and the sum truncates
    let sched = RootSchedule::new(-1, 1, 256)?;
    println!("a = -1: truncation after k = {:?}, auto route {:?}", truncation_depth(3, 300, &sched), select_path(fig8, 3, 300, &sched));
    let value = eval_invariant_at_root_via(catalog.get("5_2")?, 3, 300, &sched, EvalPath::Auto)?;
    println!("5_2, SU(3), N = 300, a = -1: {value}");
    Ok(())
}
