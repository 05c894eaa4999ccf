//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

mod common;

use std::time::Instant;

use qknot::asymptotics::{argmax_profile, double_limit_table, limit_table, reference_volume, FIVE_TWO_REFERENCE};
use qknot::catalog::invariant_41_direct;
use qknot::complex::abs_diff;
use qknot::lobachevsky::figure_eight_volume;
use qknot::quantum::{cyclo_coeff, habiro_coeff, tilde_coeff, CoeffQuery};
use qknot::solver::{check_congruence_color, check_congruence_rank, solve_hk};
use qknot::{Basis, BigComplex, Catalog, KnotRecord, LaurentPoly, RootSchedule};

const PRECISION: usize = 256;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(label());
        }
    }
}

// Oracles built from nothing but polynomial arithmetic.

fn bracket(m: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(m, 1), (-m, -1)])
}

fn factorial(k: i64) -> LaurentPoly {
    (1..=k).map(bracket).product()
}

fn binomial_oracle(n: u32, k: u32) -> LaurentPoly {
    let (n, k) = (i64::from(n), i64::from(k));
    factorial(n - 2 + k).exact_div(&(&factorial(k) * &factorial(n - 2))).expect("quantum binomials are Laurent")
}

fn trefoil_oracle(n: u32, k: u32) -> LaurentPoly {
    let (ni, ki) = (i64::from(n), i64::from(k));
    let sign = if k % 2 == 0 { 1 } else { -1 };
    &LaurentPoly::monomial(sign, ki * (2 * ni + ki - 1)) * &binomial_oracle(n, k)
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let fig8 = KnotRecord::figure_eight();
    for n in 2..=5 {
        for color in 0..=10 {
            let ok = invariant_41_direct(n, color + 1).unwrap() == fig8.invariant_poly(n, color).unwrap();
            out.check(ok, || format!("n={n} N={color}"));
        }
    }
    out
}

fn criterion_2(catalog: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    for (name, oracle) in [("4_1", binomial_oracle as fn(u32, u32) -> LaurentPoly), ("3_1", trefoil_oracle)] {
        let record = catalog.get(name).unwrap();
        for n in 2..=5 {
            let js: Vec<_> = (0..=8).map(|c| record.invariant_poly(n, c).unwrap()).collect();
            let sol = solve_hk(&js, Basis::Cyclotomic { rank: n }).unwrap();
            for e in &sol.entries {
                out.check(e.value() == Some(&oracle(n, e.k)), || format!("{name} n={n} k={}", e.k));
            }
        }
    }
    for name in ["5_2", "6_1"] {
        let record = catalog.get(name).unwrap();
        for n in 2..=4 {
            let js: Vec<_> = (0..=4).map(|c| record.invariant_poly(n, c).unwrap()).collect();
            let sol = solve_hk(&js, Basis::Cyclotomic { rank: n }).unwrap();
            for e in &sol.entries {
                let published = common::FACTORED
                    .iter()
                    .find(|(knot, nn, kk, _)| *knot == name && *nn == n && *kk == e.k)
                    .map(|(_, _, _, text)| text.parse::<LaurentPoly>().unwrap());
                out.check(published.is_some() && e.value() == published.as_ref(), || format!("{name} n={n} k={}", e.k));
            }
        }
    }
    out
}

fn criterion_3(catalog: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    for record in catalog.records() {
        let top = if record.has_closed_form() { 8 } else { 4 };
        for n in 2..=4 {
            for color in 1..=top {
                for k in 0..color {
                    let w = check_congruence_color(record, n, color, k).unwrap();
                    out.check(w.holds && w.recheck(), || format!("color {} n={n} N={color} k={k}", record.name()));
                }
            }
        }
    }
    for name in ["4_1", "3_1"] {
        let record = catalog.get(name).unwrap();
        for (n, m) in [(4, 2), (5, 2), (5, 3), (6, 2), (6, 4)] {
            for color in 0..=6 {
                let w = check_congruence_rank(record, n, m, color).unwrap();
                out.check(w.holds && w.recheck(), || format!("rank {name} n={n} m={m} N={color}"));
            }
        }
    }
    out
}

fn criterion_4(catalog: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    for n in 2..=5 {
        for color in 0..=20 {
            for k in 0..=color {
                let ok = tilde_coeff(&CoeffQuery::new(color, k, n).unwrap()).is_ok();
                out.check(ok, || format!("tilde coeff n={n} N={color} k={k}"));
            }
        }
    }
    let fig8 = catalog.get("4_1").unwrap();
    for n in 2..=4 {
        let js: Vec<_> = (0..=6).map(|c| fig8.invariant_poly(n, c).unwrap()).collect();
        let sol = solve_hk(&js, Basis::Tilde { rank: n }).unwrap();
        for e in &sol.entries {
            out.check(e.integral, || format!("tilde solve n={n} k={}", e.k));
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    for n in 2..=6i64 {
        for big_n in 1..=30i64 {
            for k in 0..big_n {
                let rhs = &bracket(big_n - k) * &bracket(big_n + k + n);
                for j in 0..=k {
                    let lhs = &(&bracket(big_n + n + j) * &bracket(big_n - j)) - &(&bracket(k + n + j) * &bracket(k - j));
                    out.check(lhs == rhs, || format!("chain n={n} N={big_n} k={k} j={j}"));
                }
            }
        }
    }
    for color in 0..=20 {
        for k in 0..=color {
            let ok = cyclo_coeff(&CoeffQuery::new(color, k, 2).unwrap()) == habiro_coeff(color + 1, k).unwrap();
            out.check(ok, || format!("habiro N={color} k={k}"));
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let volume = BigComplex::from_real(figure_eight_volume(PRECISION), PRECISION).re_f64();
    out.check((volume - 2.029883).abs() < 1e-6, || format!("6Λ(π/3) = {volume}"));
    let fig8 = KnotRecord::figure_eight();
    for (n, a) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
        let sched = RootSchedule::new(a, 1, PRECISION).unwrap();
        let q = &limit_table(&fig8, n, &sched, &[1000])[0];
        let q = q.sample.as_ref().unwrap();
        let (re, im) = q.q_step.to_f64_pair();
        out.check((re - volume).abs() < 0.02 && im.abs() < 0.02, || {
            format!("(n,a)=({n},{a}): Re Q - V = {:.4}, Im Q = {:.1e}", re - volume, im)
        });
    }
    out
}

fn criterion_7(catalog: &Catalog) -> Outcome {
    let mut out = Outcome::new();
    for name in ["4_1", "3_1"] {
        let record = catalog.get(name).unwrap();
        for n in 2..=3u32 {
            for a in [0, i64::from(n), -1] {
                let sched = RootSchedule::new(a, 1, PRECISION).unwrap();
                let rows = limit_table(record, n, &sched, &[250, 500]);
                let lr: Vec<f64> = rows.iter().map(|r| r.sample.as_ref().unwrap().log_ratio.abs_f64()).collect();
                out.check(lr[1] < 0.05 && lr[1] < lr[0], || {
                    format!("{name} n={n} a={a}: |lr(250)| = {:.2e}, |lr(500)| = {:.2e}", lr[0], lr[1])
                });
            }
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    for n in 2..=4u32 {
        let mut shifts = vec![1, i64::from(n) - 1];
        shifts.dedup();
        for a in shifts {
            let sched = RootSchedule::new(a, 1, PRECISION).unwrap();
            for color in (100..=1000).step_by(100) {
                let p = argmax_profile(n, color, &sched).unwrap();
                out.check(p.in_window, || format!("n={n} a={a} N={color}: k_m={} not in [{}, {}]", p.k_max, p.lower, p.upper));
            }
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let mut out = Outcome::new();
    let fig8 = KnotRecord::figure_eight();
    let sched = RootSchedule::new(1, 1, PRECISION).unwrap();
    let colors: Vec<u32> = (1..=30).collect();
    let fixed = limit_table(&fig8, 2, &sched, &colors);
    let double = double_limit_table(&fig8, 2, &sched, &colors);
    let bound = 2f64.powi(-(PRECISION as i32 - 16));
    for (f, d) in fixed.iter().zip(&double) {
        let (f, d) = (f.sample.as_ref().unwrap(), d.sample.as_ref().unwrap());
        let gap = abs_diff(&f.q_step, &d.q_step).max(abs_diff(&f.log_ratio, &d.log_ratio));
        out.check(f.color == d.color && gap < bound, || format!("N={}: gap {gap:e}", f.color));
    }
    out
}

fn criterion_10() -> Outcome {
    let mut out = Outcome::new();
    let v = reference_volume("5_2", PRECISION).unwrap();
    out.check(FIVE_TWO_REFERENCE == ("2.828122", "3.02413"), || format!("stored {FIVE_TWO_REFERENCE:?}"));
    out.check(v.to_f64_pair() == (2.828122, 3.02413), || format!("reference_volume(5_2) = {v}"));
    out
}

fn main() {
    let catalog = Catalog::bundled();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("exact cross-oracle, 4_1 product sum vs expansion", Box::new(criterion_1)),
        ("cyclotomic recovery of H_k", Box::new(|| criterion_2(&catalog))),
        ("color and rank congruence certificates", Box::new(|| criterion_3(&catalog))),
        ("tilde-basis integrality", Box::new(|| criterion_4(&catalog))),
        ("bracket identity chain and Habiro shift", Box::new(criterion_5)),
        ("volume convergence of 4_1 at N = 1000", Box::new(criterion_6)),
        ("zero-limit regime, N = 250 vs 500", Box::new(|| criterion_7(&catalog))),
        ("maximizer window", Box::new(criterion_8)),
        ("rank-schedule equivalence, N <= 30", Box::new(criterion_9)),
        ("5_2 reference constants", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        let passed = outcome.checked - outcome.failures.len();
        let mut line = format!(
            "criterion {:>2} {status} {title}: {passed}/{} checks ({:.1}s)",
            i + 1,
            outcome.checked,
            start.elapsed().as_secs_f64()
        );
        if !outcome.failures.is_empty() {
            failed += 1;
            let shown: Vec<&str> = outcome.failures.iter().take(8).map(String::as_str).collect();
            line.push_str(&format!("; failing: {}", shown.join("; ")));
            if outcome.failures.len() > shown.len() {
                line.push_str(&format!("; ... {} more", outcome.failures.len() - shown.len()));
            }
        }
        println!("{line}");
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
