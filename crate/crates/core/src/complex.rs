//! Arbitrary-precision complex numbers.
//!
//! A thin value type over [`astro_float::BigFloat`] pairs. Precisions are in
//! bits; binary operations run at the larger precision of their operands.
//! The constants cache that `astro_float` needs for transcendental functions
//! lives in a thread-local, so every function here is a pure function of its
//! arguments from the caller's point of view.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Default working precision for evaluations at roots of unity.
pub const DEFAULT_PRECISION: usize = 256;
/// Smallest precision a [`BigComplex`] may carry.
pub const MIN_PRECISION: usize = 53;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

pub(crate) fn pi(p: usize) -> BigFloat {
    with_consts(|cc| cc.pi(p, RM))
}

pub(crate) fn ensure_finite(x: BigFloat) -> Result<BigFloat> {
    if x.is_nan() || x.is_inf() {
        Err(Error::Numeric(format!("non-finite intermediate ({:?})", x.err())))
    } else {
        Ok(x)
    }
}

/// Converts an exact integer; the result is exact whenever `p` covers its bit length.
pub(crate) fn bigfloat_from_bigint(x: &BigInt, p: usize) -> BigFloat {
    if let Some(small) = x.to_i64() {
        return BigFloat::from_i64(small, p);
    }
    let p = p.max(x.bits() as usize + 64);
    let radix = BigFloat::from_u128(1u128 << 64, p);
    let mut acc = BigFloat::from_u64(0, p);
    for digit in x.magnitude().iter_u64_digits().rev() {
        acc = acc.mul(&radix, p, RM).add(&BigFloat::from_u64(digit, p), p, RM);
    }
    if x.is_negative() {
        acc = acc.neg();
    }
    acc
}

pub(crate) fn bigfloat_to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf() {
        return if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
    }
    if x.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, exponent, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    let len = words.len();
    let hi = words[len - 1] as f64 / 18446744073709551616.0;
    let lo = if len > 1 {
        words[len - 2] as f64 / 18446744073709551616.0 / 18446744073709551616.0
    } else {
        0.0
    };
    let mut value = hi + lo;
    // scale in two steps so 2^e never overflows before the product does
    let e = exponent as i32;
    let half = e / 2;
    value = value * 2f64.powi(half) * 2f64.powi(e - half);
    if sign == Sign::Neg {
        -value
    } else {
        value
    }
}

/// sin(num·π/den) with exact argument reduction. Returns an exact zero when
/// `den` divides `num`, which is what makes quantum integers vanish exactly at
/// the matching roots of unity.
pub(crate) fn sin_pi_rational(num: i64, den: i64, p: usize) -> BigFloat {
    assert!(den != 0, "sin_pi_rational: zero denominator");
    let (mut num, mut den) = (num as i128, den as i128);
    if den < 0 {
        num = -num;
        den = -den;
    }
    let mut r = num.rem_euclid(2 * den);
    let mut negative = false;
    if r >= den {
        r -= den;
        negative = true;
    }
    if 2 * r > den {
        r = den - r;
    }
    if r == 0 {
        return BigFloat::from_u64(0, p);
    }
    let value = if 2 * r == den {
        BigFloat::from_u64(1, p)
    } else {
        let wp = p + 32;
        let angle = pi(wp)
            .mul(&BigFloat::from_i128(r, wp), wp, RM)
            .div(&BigFloat::from_i128(den, wp), wp, RM);
        let mut s = with_consts(|cc| angle.sin(wp, RM, cc));
        s.set_precision(p, RM).ok();
        s
    };
    if negative {
        value.neg()
    } else {
        value
    }
}

/// cos(num·π/den), reduced to a sine so the exact-zero logic is shared.
pub(crate) fn cos_pi_rational(num: i64, den: i64, p: usize) -> BigFloat {
    // cos(x) = sin(π/2 - x) = sin((den - 2 num) π / (2 den))
    sin_pi_rational(den - 2 * num, 2 * den, p)
}

/// Shortest round-trip text; exponent form outside `[1e-5, 1e16)`.
pub(crate) fn fmt_f64(x: f64) -> String {
    if x != 0.0 && x.is_finite() && !(1e-5..1e16).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

/// A complex number carried at a stated binary precision.
#[derive(Clone)]
pub struct BigComplex {
    re: BigFloat,
    im: BigFloat,
    precision: usize,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat, precision: usize) -> Result<Self> {
        if precision < MIN_PRECISION {
            return Err(Error::PrecisionTooLow(precision));
        }
        Ok(Self { re, im, precision })
    }

    pub(crate) fn raw(re: BigFloat, im: BigFloat, precision: usize) -> Self {
        Self { re, im, precision }
    }

    pub fn zero(precision: usize) -> Self {
        Self::from_i64(0, precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::from_i64(1, precision)
    }

    pub fn from_i64(re: i64, precision: usize) -> Self {
        let p = precision.max(MIN_PRECISION);
        Self::raw(BigFloat::from_i64(re, p), BigFloat::from_i64(0, p), p)
    }

    pub fn from_f64(re: f64, im: f64, precision: usize) -> Self {
        let p = precision.max(MIN_PRECISION);
        Self::raw(BigFloat::from_f64(re, p), BigFloat::from_f64(im, p), p)
    }

    pub fn from_real(re: BigFloat, precision: usize) -> Self {
        let p = precision.max(MIN_PRECISION);
        Self::raw(re, BigFloat::from_i64(0, p), p)
    }

    /// exp(iπ·num/den), with exact zeros where the trigonometric values vanish.
    pub fn exp_i_pi_rational(num: i64, den: i64, precision: usize) -> Self {
        let p = precision.max(MIN_PRECISION);
        Self::raw(cos_pi_rational(num, den, p), sin_pi_rational(num, den, p), p)
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn re_f64(&self) -> f64 {
        bigfloat_to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        bigfloat_to_f64(&self.im)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re_f64(), self.im_f64())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_nan() || self.im.is_nan() || self.re.is_inf() || self.im.is_inf())
    }

    /// Re-rounds both parts to `precision` bits.
    pub fn with_precision(&self, precision: usize) -> Self {
        let p = precision.max(MIN_PRECISION);
        let mut re = self.re.clone();
        let mut im = self.im.clone();
        re.set_precision(p, RM).ok();
        im.set_precision(p, RM).ok();
        Self::raw(re, im, p)
    }

    fn joint(&self, other: &Self) -> usize {
        self.precision.max(other.precision)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.joint(other);
        Self::raw(self.re.add(&other.re, p, RM), self.im.add(&other.im, p, RM), p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.joint(other);
        Self::raw(self.re.sub(&other.re, p, RM), self.im.sub(&other.im, p, RM), p)
    }

    pub fn neg(&self) -> Self {
        Self::raw(self.re.neg(), self.im.neg(), self.precision)
    }

    pub fn conj(&self) -> Self {
        Self::raw(self.re.clone(), self.im.neg(), self.precision)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.joint(other);
        let re = self.re.mul(&other.re, p, RM).sub(&self.im.mul(&other.im, p, RM), p, RM);
        let im = self.re.mul(&other.im, p, RM).add(&self.im.mul(&other.re, p, RM), p, RM);
        Self::raw(re, im, p)
    }

    pub fn scale(&self, factor: &BigFloat) -> Self {
        let p = self.precision;
        Self::raw(self.re.mul(factor, p, RM), self.im.mul(factor, p, RM), p)
    }

    pub fn norm_sqr(&self) -> BigFloat {
        let p = self.precision;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.precision, RM)
    }

    pub fn abs_f64(&self) -> f64 {
        bigfloat_to_f64(&self.abs())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Numeric("reciprocal of zero".into()));
        }
        let p = self.precision;
        let n = self.norm_sqr();
        Ok(Self::raw(self.re.div(&n, p, RM), self.im.neg().div(&n, p, RM), p))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?.with_precision(self.joint(other))))
    }

    /// Integer power by binary powering; negative exponents go through the reciprocal.
    pub fn powi(&self, exponent: i64) -> Result<Self> {
        let mut base = if exponent < 0 { self.inv()? } else { self.clone() };
        let mut e = exponent.unsigned_abs();
        let mut acc = Self::one(self.precision);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Principal argument in (-π, π].
    pub fn arg(&self) -> BigFloat {
        let p = self.precision + 16;
        let zero = BigFloat::from_i64(0, p);
        if self.re.is_zero() {
            if self.im.is_zero() {
                return zero;
            }
            let half_pi = pi(p).div(&BigFloat::from_i64(2, p), p, RM);
            return if self.im.is_negative() { half_pi.neg() } else { half_pi };
        }
        let ratio = self.im.div(&self.re, p, RM);
        let base = with_consts(|cc| ratio.atan(p, RM, cc));
        let mut out = if self.re.is_positive() {
            base
        } else if self.im.is_negative() {
            base.sub(&pi(p), p, RM)
        } else {
            base.add(&pi(p), p, RM)
        };
        out.set_precision(self.precision, RM).ok();
        out
    }

    /// Principal-branch natural logarithm.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInvariant);
        }
        let p = self.precision;
        let wp = p + 16;
        let n = self.re.mul(&self.re, wp, RM).add(&self.im.mul(&self.im, wp, RM), wp, RM);
        let mut log_abs = with_consts(|cc| n.ln(wp, RM, cc)).div(&BigFloat::from_i64(2, wp), wp, RM);
        log_abs.set_precision(p, RM).ok();
        let out = Self::raw(ensure_finite(log_abs)?, self.arg(), p);
        Ok(out)
    }

    /// Decimal rendering of both parts at full precision.
    pub fn to_decimal_string(&self) -> String {
        let re = with_consts(|cc| self.re.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        let im = with_consts(|cc| self.im.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into());
        if im.starts_with('-') {
            format!("{re} - {}i", &im[1..])
        } else {
            format!("{re} + {im}i")
        }
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigComplex({} @ {} bits)", self.to_decimal_string(), self.precision)
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        if im < 0.0 {
            write!(f, "{} - {}i", fmt_f64(re), fmt_f64(-im))
        } else {
            write!(f, "{} + {}i", fmt_f64(re), fmt_f64(im))
        }
    }
}

/// |a - b| as an f64, computed at the joint precision before rounding.
pub fn abs_diff(a: &BigComplex, b: &BigComplex) -> f64 {
    bigfloat_to_f64(&a.sub(b).abs())
}

/// log2 of |a - b| / max(|b|, tiny), handy for "agree to k bits" assertions.
pub fn relative_error_log2(a: &BigComplex, b: &BigComplex) -> f64 {
    let diff = a.sub(b).abs();
    if diff.is_zero() {
        return f64::NEG_INFINITY;
    }
    let scale = b.abs();
    let p = a.precision().max(b.precision());
    let ratio = if scale.is_zero() { diff } else { diff.div(&scale, p, RM) };
    log2_bigfloat(&ratio)
}

/// log2 of a positive BigFloat without going through f64 range limits.
pub(crate) fn log2_bigfloat(x: &BigFloat) -> f64 {
    match x.as_raw_parts() {
        Some((words, _, _, exponent, _)) if !x.is_zero() => {
            let hi = words[words.len() - 1] as f64 / 18446744073709551616.0;
            hi.log2() + exponent as f64
        }
        _ => f64::NEG_INFINITY,
    }
}
