//! Invariants at the roots `ξ_{N,a}(s) = exp(sπi/(N+a))` and the growth
//! statistics built from them.
//!
//! Public functions take the color `N` and shift `a`; the denominator of the
//! root is always `D = N + a`. Three evaluation routes exist:
//!
//! * symbolic: build `J_N` exactly and evaluate it;
//! * direct: `J_N = Σ_j Π_{k≤j} f(k)` with
//!   `f(k) = -4 sin((n-2+k)θ) sin((N+1-k)θ) sin((N+n-1+k)θ) / sin(kθ)`, `θ = sπ/D`
//!   (closed-form knots only, and every `sin(kθ)` must be nonzero);
//! * reduced: when some factor `[N-j]` or `[N+n+j]` of the expansion
//!   coefficients vanishes exactly at the root, every later term is zero and
//!   the truncated sum is the exact value.

use astro_float::BigFloat;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{KnotRecord, Source};
use crate::complex::{bigfloat_to_f64, fmt_f64, pi, sin_pi_rational, BigComplex, RM};
use crate::error::{Error, Result};
use crate::lobachevsky::{figure_eight_volume, lobachevsky_pi_rational};

/// Colors up to this use the symbolic route when both routes apply.
pub const N_SYM: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootSchedule {
    pub a: i64,
    pub s: i64,
    pub precision: usize,
}

impl RootSchedule {
    pub fn new(a: i64, s: i64, precision: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidQuery("root numerator s must be nonzero".into()));
        }
        if precision < crate::complex::MIN_PRECISION {
            return Err(Error::PrecisionTooLow(precision));
        }
        Ok(Self { a, s, precision })
    }

    /// `N + a`.
    pub fn denominator(&self, color: u32) -> i64 {
        i64::from(color) + self.a
    }
}

/// `ξ_{N,a}(s)` at the schedule's precision.
pub fn root_point(color: u32, sched: &RootSchedule) -> Result<BigComplex> {
    root_point_at(color, sched, sched.precision)
}

fn root_point_at(color: u32, sched: &RootSchedule, p: usize) -> Result<BigComplex> {
    let d = sched.denominator(color);
    if d == 0 {
        return Err(Error::DegenerateSchedule);
    }
    Ok(BigComplex::exp_i_pi_rational(sched.s, d, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvalPath {
    Auto,
    Symbolic,
    Direct,
    Reduced,
}

/// Smallest `j < N` at which `[N-j]` or `[N+n+j]` vanishes at the root; the
/// expansion terms with `k > j` are then exactly zero.
pub fn truncation_depth(n: u32, color: u32, sched: &RootSchedule) -> Option<u32> {
    let d = i128::from(sched.denominator(color));
    if d == 0 {
        return None;
    }
    let (big_n, n, s) = (i128::from(color), i128::from(n), i128::from(sched.s));
    (0..big_n).find(|&j| ((big_n - j) * s) % d == 0 || ((big_n + n + j) * s) % d == 0).map(|j| j as u32)
}

/// The route [`EvalPath::Auto`] resolves to.
pub fn select_path(record: &KnotRecord, n: u32, color: u32, sched: &RootSchedule) -> EvalPath {
    let in_volume_regime = (1..i64::from(n)).contains(&sched.a);
    if !in_volume_regime && truncation_depth(n, color, sched).is_some() {
        EvalPath::Reduced
    } else if color <= N_SYM || !record.has_closed_form() {
        EvalPath::Symbolic
    } else {
        EvalPath::Direct
    }
}

/// `J_N^{SU(n)}` at `ξ_{N,a}(s)`.
pub fn eval_invariant_at_root(record: &KnotRecord, n: u32, color: u32, sched: &RootSchedule) -> Result<BigComplex> {
    eval_invariant_at_root_via(record, n, color, sched, EvalPath::Auto)
}

pub fn eval_invariant_at_root_via(
    record: &KnotRecord,
    n: u32,
    color: u32,
    sched: &RootSchedule,
    path: EvalPath,
) -> Result<BigComplex> {
    if n < 2 {
        return Err(Error::InvalidQuery(format!("rank n = {n} must be at least 2")));
    }
    if sched.denominator(color) == 0 {
        return Err(Error::DegenerateSchedule);
    }
    let p = sched.precision;
    if color == 0 {
        return Ok(BigComplex::one(p));
    }
    match path {
        EvalPath::Auto => eval_invariant_at_root_via(record, n, color, sched, select_path(record, n, color, sched)),
        EvalPath::Symbolic => eval_symbolic(record, n, color, sched),
        EvalPath::Reduced => {
            let depth = truncation_depth(n, color, sched).ok_or_else(|| {
                Error::Precondition(format!("no expansion factor vanishes at N = {color}, a = {}", sched.a))
            })?;
            eval_reduced(record, n, color, depth, sched)
        }
        EvalPath::Direct => eval_direct(record, n, color, sched),
    }
}

fn eval_symbolic(record: &KnotRecord, n: u32, color: u32, sched: &RootSchedule) -> Result<BigComplex> {
    let poly = record.invariant_poly(n, color)?;
    let span = poly.min_exponent().unwrap_or(0).unsigned_abs().max(poly.max_exponent().unwrap_or(0).unsigned_abs());
    // the rounding error of ξ is amplified by the exponents and the coefficients
    let guard = poly.max_coeff_bits() as usize + bits_of(poly.len() as u64) + bits_of(span) + 32;
    let xi = root_point_at(color, sched, sched.precision + guard)?;
    Ok(poly.eval(&xi)?.with_precision(sched.precision))
}

fn eval_reduced(record: &KnotRecord, n: u32, color: u32, depth: u32, sched: &RootSchedule) -> Result<BigComplex> {
    let hs: Vec<_> = (0..=depth).map(|k| record.hk(n, k)).collect::<Result<_>>()?;
    let coeff_bits = hs.iter().map(|h| h.max_coeff_bits() as usize + bits_of(h.len() as u64)).max().unwrap_or(0);
    let p = sched.precision;
    let wp = p + 2 * depth as usize + coeff_bits + 64;
    let d = sched.denominator(color);
    let xi = root_point_at(color, sched, wp)?;
    let (big_n, n_i, s) = (i64::from(color), i64::from(n), sched.s);
    // C_k(ξ) = Π_{j<k} (2i)² sin((N-j)sπ/D) sin((N+n+j)sπ/D) is real
    let mut c = BigFloat::from_u64(1, wp);
    let mut acc = BigComplex::zero(wp);
    for (k, h) in hs.iter().enumerate() {
        if k > 0 {
            let j = k as i64 - 1;
            let f = sin_pi_rational((big_n - j) * s, d, wp)
                .mul(&sin_pi_rational((big_n + n_i + j) * s, d, wp), wp, RM)
                .mul(&BigFloat::from_i64(-4, wp), wp, RM);
            c = c.mul(&f, wp, RM);
        }
        acc = acc.add(&h.eval(&xi)?.scale(&c));
    }
    Ok(acc.with_precision(p))
}

fn bits_of(x: u64) -> usize {
    (u64::BITS - x.leading_zeros()) as usize
}

/// `sin(m sπ/D)` in f64 with exact reduction of `m s mod 2D`.
fn sin_f64(m: i64, s: i64, d: i64) -> f64 {
    let r = (i128::from(m) * i128::from(s)).rem_euclid(2 * i128::from(d)) as f64;
    (std::f64::consts::PI * r / d as f64).sin()
}

/// Factors of the direct product, as `(num1, num2, num3, den)` bracket indices.
fn direct_factor(n: i64, big_n: i64, k: i64) -> [i64; 4] {
    [n - 2 + k, big_n + 1 - k, big_n + n - 1 + k, k]
}

fn eval_direct(record: &KnotRecord, n: u32, color: u32, sched: &RootSchedule) -> Result<BigComplex> {
    let framed = match record.source() {
        Source::ClosedForm41 => false,
        Source::ClosedForm31 => true,
        Source::Table => {
            return Err(Error::Precondition(format!(
                "the direct route needs a closed-form knot, {} has only tables",
                record.name()
            )))
        }
    };
    let (big_n, n_i, s) = (i64::from(color), i64::from(n), sched.s);
    let d = sched.denominator(color);
    let d128 = i128::from(d);
    let vanishes = |m: i64| (i128::from(m) * i128::from(s)) % d128 == 0;
    // terms j >= last are exactly zero
    let mut last = big_n + 1;
    for k in 1..=big_n {
        let [a, b, c, den] = direct_factor(n_i, big_n, k);
        if vanishes(den) {
            return Err(Error::CoprimalityViolation { denominator: d, index: k });
        }
        if last > big_n && (vanishes(a) || vanishes(b) || vanishes(c)) {
            last = k;
        }
    }
    // size the working precision from the largest partial product
    let mut lg = 0.0f64;
    let mut peak = 0.0f64;
    for k in 1..last.min(big_n + 1) {
        let [a, b, c, den] = direct_factor(n_i, big_n, k);
        lg += (4.0 * sin_f64(a, s, d) * sin_f64(b, s, d) * sin_f64(c, s, d) / sin_f64(den, s, d)).abs().log2();
        peak = peak.max(lg);
    }
    let p = sched.precision;
    let wp = p + peak.ceil() as usize + bits_of(color as u64) + 64;
    let mut sines: Vec<Option<BigFloat>> = vec![None; (2 * big_n + n_i + 2) as usize];
    let mut sin_at = |m: i64| -> BigFloat {
        let slot = &mut sines[m as usize];
        slot.get_or_insert_with(|| sin_pi_rational(m * s, d, wp)).clone()
    };
    let minus_four = BigFloat::from_i64(-4, wp);
    let mut g = BigFloat::from_u64(1, wp);
    let mut real_sum = BigFloat::from_u64(1, wp);
    let mut sum = BigComplex::one(wp);
    for j in 1..last.min(big_n + 1) {
        let [a, b, c, den] = direct_factor(n_i, big_n, j);
        let f = sin_at(a)
            .mul(&sin_at(b), wp, RM)
            .mul(&sin_at(c), wp, RM)
            .mul(&minus_four, wp, RM)
            .div(&sin_at(den), wp, RM);
        g = g.mul(&f, wp, RM);
        if framed {
            // (-1)^j ξ^{j(2n+j-1)} = exp(iπ (s j(2n+j-1) + j D) / D)
            let num = (i128::from(s) * i128::from(j) * i128::from(2 * n_i + j - 1) + i128::from(j) * d128)
                .rem_euclid(2 * d128) as i64;
            sum = sum.add(&BigComplex::exp_i_pi_rational(num, d, wp).scale(&g));
        } else {
            real_sum = real_sum.add(&g, wp, RM);
        }
    }
    if framed {
        Ok(sum.with_precision(p))
    } else {
        Ok(BigComplex::from_real(real_sum, wp).with_precision(p))
    }
}

/// One row of a convergence table.
#[derive(Debug, Clone)]
pub struct QSample {
    pub color: u32,
    /// Rank used at color `N` (differs from the table rank in double-limit rows).
    pub rank: u32,
    /// `2πs [log J_N(ξ_{N,a}) - log J_{N-1}(ξ_{N-1,a})]`, principal branches.
    pub q_step: BigComplex,
    /// `2πs log J_N(ξ_{N,a}) / (N+1)`.
    pub log_ratio: BigComplex,
}

fn two_pi_s(sched: &RootSchedule, p: usize) -> BigFloat {
    pi(p).mul(&BigFloat::from_i64(2 * sched.s, p), p, RM)
}

fn sample_with(record: &KnotRecord, color: u32, sched: &RootSchedule, rank_of: impl Fn(u32) -> Result<u32>) -> Result<QSample> {
    if color == 0 {
        return Err(Error::InvalidQuery("the Q statistic needs N >= 1".into()));
    }
    let p = sched.precision;
    let rank = rank_of(color)?;
    let here = eval_invariant_at_root(record, rank, color, sched)?;
    let prev = eval_invariant_at_root(record, rank_of(color - 1)?, color - 1, sched)?;
    let log_here = here.ln()?;
    let log_prev = prev.ln()?;
    let factor = two_pi_s(sched, p + 16);
    let q_step = log_here.sub(&log_prev).scale(&factor).with_precision(p);
    let scale = factor.div(&BigFloat::from_u64(u64::from(color) + 1, p + 16), p + 16, RM);
    let log_ratio = log_here.scale(&scale).with_precision(p);
    Ok(QSample { color, rank, q_step, log_ratio })
}

/// The Q statistic and normalized log at fixed rank `n`.
pub fn q_step(record: &KnotRecord, n: u32, color: u32, sched: &RootSchedule) -> Result<QSample> {
    sample_with(record, color, sched, |_| Ok(n))
}

/// Same statistics with rank `N + a + n` at each color.
pub fn q_step_double(record: &KnotRecord, n: u32, color: u32, sched: &RootSchedule) -> Result<QSample> {
    if !record.has_closed_form() {
        return Err(Error::Precondition(format!("growing-rank rows need a closed-form knot, not {}", record.name())));
    }
    sample_with(record, color, sched, |c| {
        let rank = i64::from(c) + sched.a + i64::from(n);
        u32::try_from(rank)
            .ok()
            .filter(|&r| r >= 2)
            .ok_or_else(|| Error::InvalidQuery(format!("rank N + a + n = {rank} is below 2")))
    })
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub color: u32,
    pub n: u32,
    pub sched: RootSchedule,
    pub sample: Result<QSample>,
}

fn run_table(colors: &[u32], n: u32, sched: &RootSchedule, f: impl Fn(u32) -> Result<QSample> + Sync) -> Vec<TableRow> {
    let mut colors = colors.to_vec();
    colors.sort_unstable();
    colors.dedup();
    colors.par_iter().map(|&c| TableRow { color: c, n, sched: *sched, sample: f(c) }).collect()
}

/// Rows ordered by `N`; failures stay attached to their row.
pub fn limit_table(record: &KnotRecord, n: u32, sched: &RootSchedule, colors: &[u32]) -> Vec<TableRow> {
    run_table(colors, n, sched, |c| q_step(record, n, c, sched))
}

/// Rows with rank `N + a + n`.
pub fn double_limit_table(record: &KnotRecord, n: u32, sched: &RootSchedule, colors: &[u32]) -> Vec<TableRow> {
    run_table(colors, n, sched, |c| q_step_double(record, n, c, sched))
}

pub const CSV_HEADER: [&str; 9] =
    ["N", "n", "a", "s", "re_q_step", "im_q_step", "re_log_ratio", "im_log_ratio", "precision_bits"];

/// CSV in the fixed column order, plus reference columns when given and a
/// trailing `error` column (empty on success).
pub fn table_to_csv(rows: &[TableRow], reference: Option<&BigComplex>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = CSV_HEADER.to_vec();
    if reference.is_some() {
        header.extend(["re_reference", "im_reference"]);
    }
    header.push("error");
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        let mut rec = vec![row.color.to_string(), row.n.to_string(), row.sched.a.to_string(), row.sched.s.to_string()];
        match &row.sample {
            Ok(q) => {
                let (qr, qi) = q.q_step.to_f64_pair();
                let (lr, li) = q.log_ratio.to_f64_pair();
                rec.extend([qr, qi, lr, li].map(fmt_f64));
            }
            Err(_) => rec.extend(std::iter::repeat(String::new()).take(4)),
        }
        rec.push(row.sched.precision.to_string());
        if let Some(r) = reference {
            let (rr, ri) = r.to_f64_pair();
            rec.extend([fmt_f64(rr), fmt_f64(ri)]);
        }
        rec.push(row.sample.as_ref().err().map(|e| e.to_string()).unwrap_or_default());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

#[derive(Serialize)]
struct ComplexJson {
    re: f64,
    im: f64,
}

impl From<&BigComplex> for ComplexJson {
    fn from(z: &BigComplex) -> Self {
        let (re, im) = z.to_f64_pair();
        Self { re, im }
    }
}

#[derive(Serialize)]
struct RowJson {
    #[serde(rename = "N")]
    color: u32,
    n: u32,
    rank: Option<u32>,
    a: i64,
    s: i64,
    q_step: Option<ComplexJson>,
    log_ratio: Option<ComplexJson>,
    precision_bits: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<ComplexJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

pub fn table_to_json(rows: &[TableRow], reference: Option<&BigComplex>) -> serde_json::Value {
    let rows: Vec<RowJson> = rows
        .iter()
        .map(|row| RowJson {
            color: row.color,
            n: row.n,
            rank: row.sample.as_ref().ok().map(|q| q.rank),
            a: row.sched.a,
            s: row.sched.s,
            q_step: row.sample.as_ref().ok().map(|q| (&q.q_step).into()),
            log_ratio: row.sample.as_ref().ok().map(|q| (&q.log_ratio).into()),
            precision_bits: row.sched.precision,
            reference: reference.map(Into::into),
            error: row.sample.as_ref().err().map(|e| e.to_string()),
        })
        .collect();
    serde_json::to_value(rows).expect("rows serialize")
}

/// Stored real and imaginary parts for 5_2, as published with its Q table.
pub const FIVE_TWO_REFERENCE: (&str, &str) = ("2.828122", "3.02413");

/// Complex volume reference: `6Λ(π/3)` for `4_1`, stored constants for `5_2`.
pub fn reference_volume(name: &str, precision: usize) -> Result<BigComplex> {
    match name {
        "4_1" => Ok(BigComplex::from_real(figure_eight_volume(precision), precision)),
        "5_2" => {
            let parse = |t: &str| {
                crate::complex::with_consts(|cc| BigFloat::parse(t, astro_float::Radix::Dec, precision, RM, cc))
            };
            BigComplex::new(parse(FIVE_TWO_REFERENCE.0), parse(FIVE_TWO_REFERENCE.1), precision)
        }
        other => Err(Error::UnknownReference(other.to_string())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArgmaxProfile {
    pub k_max: u32,
    pub lower: i64,
    pub upper: i64,
    pub in_window: bool,
}

/// Location of the largest `|Π_{k≤j} f(k)|`, `j = 1..N`, against the window
/// `⌊(5D - 12(n-2))/6⌋ <= k_m <= ⌊5D/6⌋` with `D = N + a`.
pub fn argmax_profile(n: u32, color: u32, sched: &RootSchedule) -> Result<ArgmaxProfile> {
    let n_i = i64::from(n);
    if sched.s != 1 {
        return Err(Error::Precondition("the maximizer window is stated for s = 1".into()));
    }
    if n < 2 || (sched.a != 1 && sched.a != n_i - 1) {
        return Err(Error::Precondition(format!("need a in {{1, n-1}}, got a = {} for n = {n}", sched.a)));
    }
    if color == 0 {
        return Err(Error::InvalidQuery("the profile needs N >= 1".into()));
    }
    let big_n = i64::from(color);
    let d = sched.denominator(color);
    let mut lg = 0.0f64;
    let (mut best, mut best_j) = (f64::NEG_INFINITY, 1);
    for j in 1..=big_n {
        let [a, b, c, den] = direct_factor(n_i, big_n, j);
        lg += (4.0 * sin_f64(a, 1, d) * sin_f64(b, 1, d) * sin_f64(c, 1, d) / sin_f64(den, 1, d)).abs().ln();
        if lg > best {
            best = lg;
            best_j = j;
        }
    }
    let lower = (5 * d - 12 * (n_i - 2)).div_euclid(6);
    let upper = (5 * d).div_euclid(6);
    Ok(ArgmaxProfile { k_max: best_j as u32, lower, upper, in_window: (lower..=upper).contains(&best_j) })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RiemannComparison {
    pub terms: i64,
    pub sum: f64,
    pub integral: f64,
    pub gap: f64,
}

/// `(2/N) Σ_{k=1}^{K} log(2|sin((n-2+k)sπ/N)|)` with `K = ⌊(p/s - 1/(6s))N - (n-2)⌋`
/// against its limit `-(2/(sπ)) Λ((p - 1/6)π)`.
pub fn riemann_vs_integral(n: u32, big_n: u32, p: i64, s: i64) -> Result<RiemannComparison> {
    if s <= 0 || p <= 0 || big_n == 0 {
        return Err(Error::Precondition("need p, s, N positive".into()));
    }
    let (nn, shift) = (i64::from(big_n), i64::from(n) - 2);
    let terms = ((6 * p - 1) * nn - 6 * s * shift).div_euclid(6 * s);
    if terms < 1 {
        return Err(Error::Precondition(format!("N = {big_n} is too small: the sum would have {terms} terms")));
    }
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for k in 1..=terms {
        let m = shift + k;
        if (i128::from(m) * i128::from(s)) % i128::from(nn) == 0 {
            return Err(Error::Precondition(format!("term k = {k} sits on a zero of sin")));
        }
        // Kahan summation
        let y = (2.0 * sin_f64(m, s, nn).abs()).ln() - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    let sum = 2.0 * sum / nn as f64;
    let lambda = bigfloat_to_f64(&lobachevsky_pi_rational(6 * p - 1, 6, 128));
    let integral = -2.0 / (s as f64 * std::f64::consts::PI) * lambda;
    Ok(RiemannComparison { terms, sum, integral, gap: (sum - integral).abs() })
}
