//! Recovering `H_k` from invariant sequences, and exact divisibility
//! certificates for the color and rank congruences.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::asymptotics::{eval_invariant_at_root_via, root_point, EvalPath, RootSchedule};
use crate::catalog::KnotRecord;
use crate::complex::BigComplex;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::quantum::{qint, Basis};

/// Certificate for `modulus | dividend` in `Z[q, q^-1]`.
///
/// `holds` is true iff `quotient` is present and `modulus * quotient == dividend`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityWitness {
    #[serde(with = "poly_text")]
    pub dividend: LaurentPoly,
    #[serde(with = "poly_text")]
    pub modulus: LaurentPoly,
    #[serde(with = "opt_poly_text")]
    pub quotient: Option<LaurentPoly>,
    pub holds: bool,
}

impl DivisibilityWitness {
    pub fn new(dividend: LaurentPoly, modulus: LaurentPoly) -> Result<Self> {
        let quotient = match dividend.exact_div(&modulus) {
            Ok(q) => Some(q),
            Err(Error::NotDivisible { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(Self { holds: quotient.is_some(), dividend, modulus, quotient })
    }

    /// Re-derives `holds` from the stored polynomials.
    pub fn recheck(&self) -> bool {
        match &self.quotient {
            Some(q) => &self.modulus * q == self.dividend,
            None => false,
        }
    }
}

/// One solved coefficient, `H_k = numerator / denominator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HkEntry {
    pub k: u32,
    #[serde(serialize_with = "poly_text::serialize")]
    pub numerator: LaurentPoly,
    #[serde(serialize_with = "poly_text::serialize")]
    pub denominator: LaurentPoly,
    /// The forward-substitution division at this step was exact.
    pub integral: bool,
}

impl HkEntry {
    pub fn value(&self) -> Option<&LaurentPoly> {
        self.integral.then_some(&self.numerator)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HkSolution {
    pub rank: u32,
    #[serde(serialize_with = "basis_label")]
    pub basis: Basis,
    pub entries: Vec<HkEntry>,
}

impl HkSolution {
    pub fn all_integral(&self) -> bool {
        self.entries.iter().all(|e| e.integral)
    }

    /// The integral prefix `H_0, H_1, ...` up to the first non-integral entry.
    pub fn integral_values(&self) -> Vec<LaurentPoly> {
        self.entries.iter().map_while(|e| e.value().cloned()).collect()
    }

    /// `J_N` rebuilt from the solved coefficients; needs `H_0..H_N` integral.
    pub fn reconstruct(&self, color: u32) -> Result<LaurentPoly> {
        let values = self.integral_values();
        if values.len() <= color as usize {
            return Err(Error::Precondition(format!("H_0..H_{color} are not all integral")));
        }
        let row = self.basis.row(color)?;
        Ok(row.iter().zip(&values).map(|(c, h)| c * h).sum())
    }
}

fn basis_label<S: Serializer>(basis: &Basis, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(match basis {
        Basis::Cyclotomic { .. } => "cyclotomic",
        Basis::Tilde { .. } => "tilde",
        Basis::Habiro => "habiro",
    })
}

/// Forward substitution `H_N = (J_N - Σ_{k<N} B(N,k) H_k) / B(N,N)`.
///
/// Entries that fail to divide are kept as fractions; later steps work over
/// the running common denominator so they stay exact. Nothing is repaired.
pub fn solve_hk(js: &[LaurentPoly], basis: Basis) -> Result<HkSolution> {
    let Some(j0) = js.first() else {
        return Err(Error::InvalidQuery("empty invariant sequence".into()));
    };
    if !j0.is_one() {
        return Err(Error::BadNormalization(j0.to_string()));
    }
    let mut entries = Vec::with_capacity(js.len());
    // Every H_k equals scaled[k] / common.
    let mut common = LaurentPoly::one();
    let mut scaled: Vec<LaurentPoly> = Vec::with_capacity(js.len());
    for (color, j) in js.iter().enumerate() {
        let color = color as u32;
        let row = basis.row(color)?;
        let (lead, lower) = row.split_last().expect("row has N + 1 entries");
        let residual = &(j * &common) - &lower.iter().zip(&scaled).map(|(c, h)| c * h).sum::<LaurentPoly>();
        let full = &common * lead;
        match residual.exact_div(&full) {
            Ok(h) => {
                scaled.push(&h * &common);
                entries.push(HkEntry { k: color, numerator: h, denominator: LaurentPoly::one(), integral: true });
            }
            Err(Error::NotDivisible { .. }) => {
                let (numerator, denominator) = match residual.exact_div(&common) {
                    Ok(r) => (r, lead.clone()),
                    Err(_) => (residual.clone(), full.clone()),
                };
                for s in scaled.iter_mut() {
                    *s = &*s * lead;
                }
                scaled.push(residual);
                common = full;
                entries.push(HkEntry { k: color, numerator, denominator, integral: false });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(HkSolution { rank: basis.rank(), basis, entries })
}

/// `J_N - J_k` against `[N-k][N+k+n]`.
pub fn check_congruence_color(record: &KnotRecord, n: u32, color: u32, k: u32) -> Result<DivisibilityWitness> {
    if color <= k {
        return Err(Error::Precondition(format!("need N > k, got N = {color}, k = {k}")));
    }
    let dividend = &record.invariant_poly(n, color)? - &record.invariant_poly(n, k)?;
    let (big_n, k, n) = (i64::from(color), i64::from(k), i64::from(n));
    DivisibilityWitness::new(dividend, &qint(big_n - k) * &qint(big_n + k + n))
}

/// `J_N^{SU(n)} - J_N^{SU(n-m)}` against `[m]`; requires `m >= 2` and `n - m >= 2`.
pub fn check_congruence_rank(record: &KnotRecord, n: u32, m: u32, color: u32) -> Result<DivisibilityWitness> {
    if m < 2 || n < m + 2 {
        return Err(Error::Precondition(format!("need m >= 2 and n - m >= 2, got n = {n}, m = {m}")));
    }
    let dividend = &record.invariant_poly(n, color)? - &record.invariant_poly(n - m, color)?;
    DivisibilityWitness::new(dividend, qint(i64::from(m)))
}

/// Both evaluations and their distance at `ξ_{N,a}(s)`.
#[derive(Debug, Clone)]
pub struct RankReduction {
    pub big: BigComplex,
    pub small: BigComplex,
    pub residual: f64,
}

impl RankReduction {
    /// `log2` of the residual; `-inf` for an exact tie.
    pub fn residual_log2(&self) -> f64 {
        self.residual.log2()
    }
}

/// Evaluates the full symbolic invariants at ranks differing by `N + a`; at
/// `ξ_{N,a}(s)` the bracket `[N+a]` vanishes, so they must coincide.
pub fn rank_reduction_at_root(
    record: &KnotRecord,
    n_big: u32,
    n_small: u32,
    color: u32,
    sched: &RootSchedule,
) -> Result<RankReduction> {
    if i64::from(n_big) - i64::from(n_small) != i64::from(color) + sched.a {
        return Err(Error::Precondition(format!(
            "ranks {n_big} and {n_small} must differ by N + a = {}",
            i64::from(color) + sched.a
        )));
    }
    root_point(color, sched)?;
    let big = eval_invariant_at_root_via(record, n_big, color, sched, EvalPath::Symbolic)?;
    let small = eval_invariant_at_root_via(record, n_small, color, sched, EvalPath::Symbolic)?;
    let residual = crate::complex::abs_diff(&big, &small);
    Ok(RankReduction { big, small, residual })
}

mod poly_text {
    use super::*;

    pub fn serialize<S: Serializer>(p: &LaurentPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(p)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<LaurentPoly, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

mod opt_poly_text {
    use super::*;

    pub fn serialize<S: Serializer>(p: &Option<LaurentPoly>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match p {
            Some(p) => s.collect_str(p),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<LaurentPoly>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}
