//! The Lobachevsky function `Λ(x) = -∫_0^x log|2 sin t| dt`.
//!
//! Evaluated as `Λ(x) = Cl₂(2x)/2` with `2x` reduced into `(-π, π]`, where
//! the Clausen function has the everywhere-convergent expansion
//!
//! `Cl₂(θ) = θ - θ log|θ| + Σ_{m≥1} |B_{2m}| θ^{2m+1} / (2m (2m+1)!)`.
//!
//! Term ratios are at most `(θ/2π)² <= 1/4`, so `p/2 + O(1)` terms reach
//! `2^-p`; the Bernoulli numbers are exact rationals.

use std::sync::Mutex;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{bigfloat_from_bigint, bigfloat_to_f64, pi, with_consts, MIN_PRECISION, RM};

/// Signed `B_0, B_1, B_2, ...`.
static BERNOULLI: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// `|B_2|, |B_4|, ..., |B_{2 count}|`.
fn bernoulli_even_abs(count: usize) -> Vec<BigRational> {
    let mut all = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if all.is_empty() {
        all.push(BigRational::one());
    }
    // B_m = -1/(m+1) Σ_{k<m} C(m+1,k) B_k
    while all.len() <= 2 * count {
        let m = all.len();
        if m > 1 && m % 2 == 1 {
            all.push(BigRational::zero());
            continue;
        }
        let mut binom = BigInt::one();
        let mut acc = BigRational::zero();
        for (k, b) in all.iter().enumerate() {
            if !b.is_zero() {
                acc += b * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        let b = -acc / BigRational::from_integer(BigInt::from(m + 1));
        all.push(b);
    }
    (1..=count).map(|m| all[2 * m].abs()).collect()
}

/// `Cl₂(θ)` for `|θ| <= π`.
fn clausen_reduced(theta: &BigFloat, p: usize) -> BigFloat {
    if theta.is_zero() {
        return BigFloat::from_u64(0, p);
    }
    let wp = p + 32;
    let abs = theta.abs();
    let log = with_consts(|cc| abs.ln(wp, RM, cc));
    let mut sum = theta.sub(&theta.mul(&log, wp, RM), wp, RM);
    let theta2 = theta.mul(theta, wp, RM);
    let terms = wp / 2 + 8;
    let bern = bernoulli_even_abs(terms);
    // power = θ^{2m+1} / (2m+1)!
    let mut power = theta.clone();
    let threshold = -(wp as i64) - 8;
    for (idx, b) in bern.iter().enumerate() {
        let m = idx as u64 + 1;
        power = power.mul(&theta2, wp, RM).div(&BigFloat::from_u64((2 * m) * (2 * m + 1), wp), wp, RM);
        let coeff = bigfloat_from_bigint(b.numer(), wp).div(&bigfloat_from_bigint(b.denom(), wp), wp, RM);
        let term = power.mul(&coeff, wp, RM).div(&BigFloat::from_u64(2 * m, wp), wp, RM);
        sum = sum.add(&term, wp, RM);
        if term.is_zero() || term.exponent().is_some_and(|e| i64::from(e) < threshold) {
            break;
        }
    }
    let mut out = sum;
    out.set_precision(p, RM).ok();
    out
}

/// `Λ(x)` at `p` bits for any real `x`.
pub fn lobachevsky(x: &BigFloat, p: usize) -> BigFloat {
    let p = p.max(MIN_PRECISION);
    if x.is_zero() {
        return BigFloat::from_u64(0, p);
    }
    // enough extra bits to keep the reduction accurate for large |x|
    let extra = x.exponent().map_or(0, |e| e.max(0) as usize);
    let wp = p + 64 + extra;
    let pi = pi(wp);
    let two_x = x.mul(&BigFloat::from_u64(2, wp), wp, RM);
    let two_pi = pi.mul(&BigFloat::from_u64(2, wp), wp, RM);
    let turns = two_x.add(&pi, wp, RM).div(&two_pi, wp, RM).floor();
    let theta = two_x.sub(&turns.mul(&two_pi, wp, RM), wp, RM);
    let half = clausen_reduced(&theta, p + 16).div(&BigFloat::from_u64(2, p + 16), p + 16, RM);
    let mut out = half;
    out.set_precision(p, RM).ok();
    out
}

/// `Λ(num·π/den)`, with the period reduction done exactly.
pub fn lobachevsky_pi_rational(num: i64, den: i64, p: usize) -> BigFloat {
    assert!(den != 0, "zero denominator");
    let p = p.max(MIN_PRECISION);
    let (num, den) = if den < 0 { (-(num as i128), -(den as i128)) } else { (num as i128, den as i128) };
    // 2x = 2 num π / den; reduce 2 num mod 2 den into (-den, den]
    let mut r = (2 * num).rem_euclid(2 * den);
    if r > den {
        r -= 2 * den;
    }
    // Cl₂ vanishes at 0 and π
    if r == 0 || r == den {
        return BigFloat::from_u64(0, p);
    }
    let wp = p + 32;
    let theta = pi(wp).mul(&BigFloat::from_i128(r, wp), wp, RM).div(&BigFloat::from_i128(den, wp), wp, RM);
    let mut out = clausen_reduced(&theta, wp).div(&BigFloat::from_u64(2, wp), wp, RM);
    out.set_precision(p, RM).ok();
    out
}

/// `Λ(x)` for an `f64` argument, evaluated at 96 bits and rounded.
pub fn lobachevsky_f64(x: f64) -> f64 {
    bigfloat_to_f64(&lobachevsky(&BigFloat::from_f64(x, 96), 96))
}

/// `6Λ(π/3)`, the hyperbolic volume of the figure-eight knot complement.
pub fn figure_eight_volume(p: usize) -> BigFloat {
    let wp = p + 8;
    let mut v = lobachevsky_pi_rational(1, 3, wp).mul(&BigFloat::from_u64(6, wp), wp, RM);
    v.set_precision(p, RM).ok();
    v
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use proptest::prelude::*;

    use super::*;
    use crate::complex::log2_bigfloat;

    /// Partial Fourier sum; away from multiples of π the tail is O(1/K²).
    fn fourier_oracle(x: f64) -> f64 {
        let terms = 200_000;
        let mut s = 0.0;
        for k in (1..=terms).rev() {
            let k = k as f64;
            s += (2.0 * k * x).sin() / (k * k);
        }
        0.5 * s
    }

    /// -∫_0^x log|2 sin t| dt by composite Simpson on the regularized
    /// integrand log(2 sin t / t), plus the closed-form x log x - x part.
    fn quadrature_oracle(x: f64) -> f64 {
        assert!(x > 0.0 && x < PI);
        let f = |t: f64| if t == 0.0 { 2f64.ln() } else { (2.0 * t.sin() / t).ln() };
        let steps = 20_000;
        let h = x / steps as f64;
        let mut acc = f(0.0) + f(x);
        for i in 1..steps {
            acc += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        -(acc * h / 3.0 + x * x.ln() - x)
    }

    #[test]
    fn bernoulli_numbers() {
        let b = bernoulli_even_abs(6);
        let expect = [(1, 6), (1, 30), (1, 42), (1, 30), (5, 66), (691, 2730)];
        for (got, (n, d)) in b.iter().zip(expect) {
            assert_eq!(got, &BigRational::new(n.into(), d.into()));
        }
        // asking again past the cached length extends consistently
        assert_eq!(bernoulli_even_abs(8)[7], BigRational::new(3617.into(), 510.into()));
    }

    #[test]
    fn exact_zeros() {
        assert!(lobachevsky_pi_rational(0, 1, 256).is_zero());
        assert!(lobachevsky_pi_rational(1, 1, 256).is_zero());
        assert!(lobachevsky_pi_rational(-7, 2, 256).is_zero());
        assert!(lobachevsky(&BigFloat::from_u64(0, 128), 128).is_zero());
        let near_pi = lobachevsky(&pi(256), 256);
        assert!(log2_bigfloat(&near_pi.abs()) < -240.0);
    }

    #[test]
    fn pi_over_three() {
        let l = bigfloat_to_f64(&lobachevsky_pi_rational(1, 3, 256));
        assert!((l - 0.338314).abs() < 5e-7, "{l}");
        assert!((l - quadrature_oracle(PI / 3.0)).abs() < 1e-11);
        assert!((l - fourier_oracle(PI / 3.0)).abs() < 1e-9);
        let v = bigfloat_to_f64(&figure_eight_volume(256));
        assert!((v - 2.029883212819307).abs() < 1e-14, "{v}");
        // Λ(5π/6) = -3/2 Λ(π/3)
        let l56 = bigfloat_to_f64(&lobachevsky_pi_rational(5, 6, 256));
        assert!((l56 + 1.5 * l).abs() < 1e-15);
    }

    #[test]
    fn real_and_rational_paths_agree() {
        let p = 256;
        for (num, den) in [(1, 3), (1, 7), (5, 6), (-2, 5), (13, 4), (1, 1000)] {
            let x = pi(p + 64).mul(&BigFloat::from_i64(num, p + 64), p + 64, RM).div(&BigFloat::from_i64(den, p + 64), p + 64, RM);
            let a = lobachevsky(&x, p);
            let b = lobachevsky_pi_rational(num, den, p);
            let diff = a.sub(&b, p, RM);
            assert!(diff.is_zero() || log2_bigfloat(&diff.abs()) < -(p as f64) + 8.0, "{num}/{den}");
        }
    }

    #[test]
    fn high_precision_is_self_consistent() {
        let lo = lobachevsky_pi_rational(2, 9, 256);
        let hi = lobachevsky_pi_rational(2, 9, 512);
        let diff = lo.sub(&hi, 512, RM);
        assert!(diff.is_zero() || log2_bigfloat(&diff.abs()) < -250.0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_quadrature(x in 0.05f64..3.09) {
            prop_assert!((lobachevsky_f64(x) - quadrature_oracle(x)).abs() < 1e-9);
        }

        #[test]
        fn odd_and_pi_periodic(x in -10.0f64..10.0) {
            let l = lobachevsky_f64(x);
            prop_assert!((l + lobachevsky_f64(-x)).abs() < 1e-14);
            prop_assert!((l - lobachevsky_f64(x + PI)).abs() < 1e-12);
        }

        #[test]
        fn duplication_formula(x in 0.01f64..1.5) {
            // Λ(2x) = 2Λ(x) + 2Λ(x + π/2)
            let lhs = lobachevsky_f64(2.0 * x);
            let rhs = 2.0 * lobachevsky_f64(x) + 2.0 * lobachevsky_f64(x + PI / 2.0);
            prop_assert!((lhs - rhs).abs() < 1e-12);
        }
    }
}
