//! Exact Laurent polynomials in one variable `q` over the integers.
//!
//! [`LaurentPoly`] stores its terms sparsely as `(exponent, coefficient)` pairs,
//! sorted by exponent, with no zero coefficients. Every constructor and
//! operation re-establishes that canonical form, so derived `PartialEq` is
//! semantic equality.
//!
//! Two textual forms exist:
//!
//! * the interchange form used by the catalog and report files: a JSON list of
//!   `[exponent, "coefficient"]` pairs with exponents ascending, coefficients as
//!   decimal strings (see the `serde` impls);
//! * a human-readable form produced by `Display` (`q^4 - q^2 + 1 - q^-2`) and
//!   accepted by `FromStr`, which also understands products, parentheses and
//!   integer powers such as `-q^{5}(1+q^{2})^{2}(1-q^{2}+q^{4})`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::{bigfloat_from_bigint, BigComplex};
use crate::error::{Error, Result};

/// An element of Z[q, q^-1] in canonical sparse form.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms: duplicates are summed and
    /// zero coefficients dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut raw: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        raw.sort_by_key(|(e, _)| *e);
        Self { terms: merge_sorted(raw) }
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Largest coefficient bit length, 0 for the zero polynomial.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }

    /// Value at q = 1, i.e. the sum of coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// The substitution q -> q^-1.
    pub fn mirror(&self) -> Self {
        Self { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect() }
    }

    pub fn pow(&self, exponent: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self · (q^m - q^-m)` without building the second factor.
    pub fn mul_qint(&self, m: i64) -> Self {
        if m == 0 {
            return Self::zero();
        }
        let up: Vec<(i64, BigInt)> = self.terms.iter().map(|(e, c)| (e + m, c.clone())).collect();
        let down: Vec<(i64, BigInt)> = self.terms.iter().map(|(e, c)| (e - m, -c)).collect();
        Self { terms: merge_two(up, down) }
    }

    /// Exact quotient in Z[q, q^-1].
    ///
    /// Both operands are shifted to ordinary polynomials with nonzero constant
    /// term, divided over Z from the top, and the quotient is shifted back. Any
    /// nonzero remainder, or a leading-coefficient step that leaves Z, is
    /// reported as [`Error::NotDivisible`].
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_divisible = || Error::NotDivisible {
            dividend: abbreviate(&self.to_string()),
            divisor: abbreviate(&divisor.to_string()),
        };
        let (a_lo, a_hi) = (self.terms[0].0, self.terms[self.terms.len() - 1].0);
        let (b_lo, b_hi) = (divisor.terms[0].0, divisor.terms[divisor.terms.len() - 1].0);
        let da = (a_hi - a_lo) as usize;
        let db = (b_hi - b_lo) as usize;
        if da < db {
            return Err(not_divisible());
        }
        if divisor.terms.len() == 1 {
            let (e, c) = &divisor.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (x, d) in &self.terms {
                let (quo, rem) = d.div_rem(c);
                if !rem.is_zero() {
                    return Err(not_divisible());
                }
                out.push((x - e, quo));
            }
            return Ok(Self { terms: out });
        }

        let mut rem: Vec<BigInt> = vec![BigInt::zero(); da + 1];
        for (e, c) in &self.terms {
            rem[(e - a_lo) as usize] = c.clone();
        }
        let lead = &divisor.terms[divisor.terms.len() - 1].1;
        let lower: Vec<(usize, &BigInt)> = divisor.terms[..divisor.terms.len() - 1]
            .iter()
            .map(|(e, c)| ((e - b_lo) as usize, c))
            .collect();
        let mut quot: Vec<(i64, BigInt)> = Vec::new();
        for i in (0..=da - db).rev() {
            let top = std::mem::take(&mut rem[i + db]);
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (e, c) in &lower {
                rem[i + e] -= &qc * *c;
            }
            quot.push((i as i64 + a_lo - b_lo, qc));
        }
        if rem[..db].iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        quot.reverse();
        Ok(Self { terms: quot })
    }

    /// Σ c·z^e at the precision of `z`.
    ///
    /// The sum is accumulated with extra guard bits sized from the coefficient
    /// magnitudes, so cancellation among large coefficients does not eat into
    /// the requested precision; the result is rounded back to `z.precision()`.
    pub fn eval(&self, z: &BigComplex) -> Result<BigComplex> {
        let p = z.precision();
        if self.is_zero() {
            return Ok(BigComplex::zero(p));
        }
        if z.is_zero() {
            if self.terms[0].0 < 0 {
                return Err(Error::ZeroPoint);
            }
            return Ok(BigComplex::from_real(bigfloat_from_bigint(&self.coeff(0), p), p));
        }
        let l1_bits = self
            .terms
            .iter()
            .map(|(_, c)| c.bits())
            .max()
            .unwrap_or(0)
            + (usize::BITS - self.terms.len().leading_zeros()) as u64;
        let log2_abs_z = crate::complex::log2_bigfloat(&z.abs()).abs();
        let reach = self.terms[0].0.unsigned_abs().max(self.terms[self.terms.len() - 1].0.unsigned_abs());
        let magnitude_bits = (log2_abs_z * reach as f64).ceil().min(1e6) as usize;
        let wp = p + l1_bits as usize + magnitude_bits + 16;
        let zw = z.with_precision(wp);
        let mut step_cache: HashMap<i64, BigComplex> = HashMap::new();
        let mut power = zw.powi(self.terms[0].0)?;
        let mut acc = BigComplex::zero(wp);
        let mut prev = self.terms[0].0;
        for (e, c) in &self.terms {
            if *e != prev {
                let gap = e - prev;
                let step = match step_cache.get(&gap) {
                    Some(s) => s.clone(),
                    None => {
                        let s = zw.powi(gap)?;
                        step_cache.insert(gap, s.clone());
                        s
                    }
                };
                power = power.mul(&step);
                prev = *e;
            }
            let cf = bigfloat_from_bigint(c, wp);
            acc = acc.add(&power.scale(&cf));
        }
        Ok(acc.with_precision(p))
    }

    /// Double-precision evaluation, for quick sanity checks only.
    pub fn eval_f64(&self, re: f64, im: f64) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        let r = (re * re + im * im).sqrt();
        let theta = im.atan2(re);
        for (e, c) in &self.terms {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let m = r.powi(*e as i32);
            let a = theta * *e as f64;
            acc.0 += c * m * a.cos();
            acc.1 += c * m * a.sin();
        }
        acc
    }

    /// JSON value in the interchange form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("LaurentPoly serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        Self::deserialize(value).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn abbreviate(s: &str) -> String {
    const MAX: usize = 120;
    if s.len() <= MAX {
        s.to_string()
    } else {
        let cut = s.char_indices().nth(MAX).map(|(i, _)| i).unwrap_or(s.len());
        format!("{}...", &s[..cut])
    }
}

/// Collapses runs of equal exponents in an exponent-sorted list.
fn merge_sorted(raw: Vec<(i64, BigInt)>) -> Vec<(i64, BigInt)> {
    let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(raw.len());
    for (e, c) in raw {
        match out.last_mut() {
            Some((last, acc)) if *last == e => *acc += c,
            _ => {
                if let Some((_, acc)) = out.last() {
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                out.push((e, c));
            }
        }
    }
    if matches!(out.last(), Some((_, c)) if c.is_zero()) {
        out.pop();
    }
    out
}

fn merge_two(a: Vec<(i64, BigInt)>, b: Vec<(i64, BigInt)>) -> Vec<(i64, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let next = match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => ia.next().unwrap(),
            (None, Some(_)) => ib.next().unwrap(),
            (Some((ea, _)), Some((eb, _))) => match ea.cmp(eb) {
                Ordering::Less => ia.next().unwrap(),
                Ordering::Greater => ib.next().unwrap(),
                Ordering::Equal => {
                    let (e, ca) = ia.next().unwrap();
                    let (_, cb) = ib.next().unwrap();
                    (e, ca + cb)
                }
            },
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}

fn mul_terms(a: &[(i64, BigInt)], b: &[(i64, BigInt)]) -> Vec<(i64, BigInt)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 || b.len() == 1 {
        let (single, other) = if a.len() == 1 { (&a[0], b) } else { (&b[0], a) };
        return other.iter().map(|(e, c)| (e + single.0, c * &single.1)).collect();
    }
    let lo = a[0].0 + b[0].0;
    let span = (a[a.len() - 1].0 - a[0].0 + b[b.len() - 1].0 - b[0].0 + 1) as usize;
    let products = a.len() * b.len();
    let bits_a = a.iter().map(|(_, c)| c.bits()).max().unwrap_or(0);
    let bits_b = b.iter().map(|(_, c)| c.bits()).max().unwrap_or(0);
    let count_bits = (usize::BITS - a.len().min(b.len()).leading_zeros()) as u64;

    if span > 4 * products {
        let mut raw: Vec<(i64, BigInt)> = Vec::with_capacity(products);
        for (ea, ca) in a {
            for (eb, cb) in b {
                raw.push((ea + eb, ca * cb));
            }
        }
        raw.sort_by_key(|(e, _)| *e);
        return merge_sorted(raw);
    }

    if bits_a + bits_b + count_bits < 126 {
        let mut acc = vec![0i128; span];
        let bi: Vec<(usize, i128)> = b
            .iter()
            .map(|(e, c)| ((e - b[0].0) as usize, c.to_i128().expect("fits")))
            .collect();
        for (ea, ca) in a {
            let ca = ca.to_i128().expect("fits");
            let base = (ea - a[0].0) as usize;
            for (eb, cb) in &bi {
                acc[base + eb] += ca * cb;
            }
        }
        return acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (lo + i as i64, BigInt::from(c)))
            .collect();
    }

    let mut acc = vec![BigInt::zero(); span];
    for (ea, ca) in a {
        let base = (ea - a[0].0) as usize;
        for (eb, cb) in b {
            acc[base + (eb - b[0].0) as usize] += ca * cb;
        }
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (lo + i as i64, c))
        .collect()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge_two(self.terms.clone(), rhs.terms.clone()) }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge_two(self.terms, rhs.terms) }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + (-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: mul_terms(&self.terms, &rhs.terms) }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `q^4 - q^2 + 1 - q^-2 + q^-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}*q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ExponentRepr {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TermsVisitor;
        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [exponent, \"coefficient\"] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut terms: Vec<(i64, BigInt)> = Vec::new();
                while let Some((e, c)) = seq.next_element::<(ExponentRepr, String)>()? {
                    let e = match e {
                        ExponentRepr::Int(e) => e,
                        ExponentRepr::Text(s) => s
                            .trim()
                            .parse()
                            .map_err(|_| de::Error::custom(format!("bad exponent {s:?}")))?,
                    };
                    let c: BigInt = c
                        .trim()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))?;
                    if c.is_zero() {
                        return Err(de::Error::custom(format!("zero coefficient stored at exponent {e}")));
                    }
                    if let Some((last, _)) = terms.last() {
                        if *last >= e {
                            return Err(de::Error::custom("exponents must be strictly ascending"));
                        }
                    }
                    terms.push((e, c));
                }
                Ok(LaurentPoly { terms })
            }
        }
        deserializer.deserialize_seq(TermsVisitor)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = ExprParser { src: s.as_bytes(), pos: 0 };
        let value = parser.sum()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

/// Recursive-descent parser for `sum := ['+'|'-'] product (('+'|'-') product)*`,
/// `product := power (['*'] power)*`, `power := atom ['^' int]`,
/// `atom := integer | 'q' | '(' sum ')'`. Exponents may be braced (`q^{-2}`).
struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} of {:?}", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let term = self.product()?;
            acc = if sign < 0 { acc - term } else { acc + term };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == b'(' || c == b'q' || c.is_ascii_digit() => {
                    acc = &acc * &self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let e = self.integer_signed()?;
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.error("expected '}'"));
            }
            self.pos += 1;
        }
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        // negative powers only make sense for monomials
        if base.len() == 1 && base.terms[0].1.abs().is_one() {
            let (be, bc) = &base.terms[0];
            let sign = if bc.is_negative() && e % 2 != 0 { -1 } else { 1 };
            return Ok(LaurentPoly::monomial(sign, be * e));
        }
        Err(self.error("negative power of a non-unit"))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(LaurentPoly::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(LaurentPoly::constant(digits.parse::<BigInt>().expect("digits")))
            }
            _ => Err(self.error("expected 'q', an integer or '('")),
        }
    }

    fn integer_signed(&mut self) -> Result<i64> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer exponent"));
        }
        let v: i64 = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -v } else { v })
    }
}
