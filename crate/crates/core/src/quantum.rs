//! Quantum integers, factorials, binomials and the cyclotomic coefficient
//! families.
//!
//! Conventions: `[m] = q^m - q^-m`, `[k]! = [1][2]...[k]`. All results are
//! exact elements of Z[q, q^-1].

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// `[m] = q^m - q^-m`.
pub fn qint(m: i64) -> LaurentPoly {
    if m == 0 {
        return LaurentPoly::zero();
    }
    LaurentPoly::from_terms([(m, 1), (-m, -1)])
}

/// `[k]! = [1][2]...[k]`, with `[0]! = 1`.
pub fn qfact(k: i64) -> Result<LaurentPoly> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    Ok((1..=k).fold(LaurentPoly::one(), |acc, j| acc.mul_qint(j)))
}

/// The quantum binomial `[n-2+k]! / ([k]! [n-2]!)`.
///
/// Built by the recurrence `B(k) = B(k-1)·[n-2+k] / [k]`; every partial
/// quotient is itself a quantum binomial, so each exact division must succeed.
/// A failure would be a bug and is surfaced as [`Error::NotDivisible`].
pub fn qbinom_shifted(n: u32, k: u32) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::InvalidQuery(format!("rank n = {n} must be at least 2")));
    }
    let shift = i64::from(n) - 2;
    let mut acc = LaurentPoly::one();
    for j in 1..=i64::from(k) {
        acc = acc.mul_qint(shift + j).exact_div(&qint(j))?;
    }
    Ok(acc)
}

/// Index triple `(N, k, n)` for the coefficient `C^{(n)}_{N+1,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoeffQuery {
    color: u32,
    depth: u32,
    rank: u32,
}

impl CoeffQuery {
    pub fn new(color: u32, depth: u32, rank: u32) -> Result<Self> {
        if depth > color {
            return Err(Error::InvalidQuery(format!("depth k = {depth} exceeds color N = {color}")));
        }
        if rank < 2 {
            return Err(Error::InvalidQuery(format!("rank n = {rank} must be at least 2")));
        }
        Ok(Self { color, depth, rank })
    }

    pub fn color(&self) -> u32 {
        self.color
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

/// `C^{(n)}_{N+1,k} = Π_{j<k} [N-j][N+n+j]`; equals 1 at `k = 0`.
pub fn cyclo_coeff(query: &CoeffQuery) -> LaurentPoly {
    let (big_n, n) = (i64::from(query.color), i64::from(query.rank));
    (0..i64::from(query.depth)).fold(LaurentPoly::one(), |acc, j| acc.mul_qint(big_n - j).mul_qint(big_n + n + j))
}

/// All of `C^{(n)}_{N+1,0}, ..., C^{(n)}_{N+1,N}` for one color, built
/// incrementally.
pub fn cyclo_coeff_row(color: u32, rank: u32) -> Result<Vec<LaurentPoly>> {
    CoeffQuery::new(color, 0, rank)?;
    let (big_n, n) = (i64::from(color), i64::from(rank));
    let mut row = Vec::with_capacity(color as usize + 1);
    let mut acc = LaurentPoly::one();
    row.push(acc.clone());
    for j in 0..big_n {
        acc = acc.mul_qint(big_n - j).mul_qint(big_n + n + j);
        row.push(acc.clone());
    }
    Ok(row)
}

/// Habiro's `C_{N,k} = Π_{j=1}^{k} (q^{2N} + q^{-2N} - q^{2j} - q^{-2j})`,
/// expanded directly from the four-term factors.
pub fn habiro_coeff(big_n: u32, k: u32) -> Result<LaurentPoly> {
    if big_n < 1 {
        return Err(Error::InvalidQuery("Habiro coefficients need N >= 1".into()));
    }
    if k > big_n {
        return Err(Error::InvalidQuery(format!("depth k = {k} exceeds N = {big_n}")));
    }
    let two_n = 2 * i64::from(big_n);
    Ok((1..=i64::from(k))
        .map(|j| LaurentPoly::from_terms([(two_n, 1), (-two_n, 1), (2 * j, -1), (-2 * j, -1)]))
        .product())
}

/// `C̃^{(n)}_{N+1,k} = C^{(n)}_{N+1,k} / [k]!`.
///
/// A [`Error::NotDivisible`] here would be counterevidence to the
/// Laurent-integrality of the tilde basis and is returned, not hidden.
pub fn tilde_coeff(query: &CoeffQuery) -> Result<LaurentPoly> {
    cyclo_coeff(query).exact_div(&qfact(i64::from(query.depth))?)
}

/// A family of expansion coefficients `B(N, k)` for `J_N = Σ_k B(N, k)·H_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `C^{(n)}_{N+1,k}`.
    Cyclotomic { rank: u32 },
    /// `C^{(n)}_{N+1,k} / [k]!`.
    Tilde { rank: u32 },
    /// Habiro's `C_{N+1,k}` (rank 2 only).
    Habiro,
}

impl Basis {
    pub fn rank(&self) -> u32 {
        match self {
            Basis::Cyclotomic { rank } | Basis::Tilde { rank } => *rank,
            Basis::Habiro => 2,
        }
    }

    /// The coefficient multiplying `H_k` in `J_N`.
    pub fn coeff(&self, color: u32, k: u32) -> Result<LaurentPoly> {
        match self {
            Basis::Cyclotomic { rank } => Ok(cyclo_coeff(&CoeffQuery::new(color, k, *rank)?)),
            Basis::Tilde { rank } => tilde_coeff(&CoeffQuery::new(color, k, *rank)?),
            Basis::Habiro => {
                CoeffQuery::new(color, k, 2)?;
                habiro_coeff(color + 1, k)
            }
        }
    }

    /// The whole row `k = 0..=N` for one color.
    pub fn row(&self, color: u32) -> Result<Vec<LaurentPoly>> {
        match self {
            Basis::Cyclotomic { rank } => cyclo_coeff_row(color, *rank),
            _ => (0..=color).map(|k| self.coeff(color, k)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;
    use proptest::prelude::*;

    use super::*;
    use crate::complex::BigComplex;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(2), lp("q^2 - q^-2"));
        assert!(qint(0).is_zero());
        assert_eq!(qint(-3), -lp("q^3 - q^-3"));
    }

    #[test]
    fn factorials() {
        assert!(qfact(0).unwrap().is_one());
        assert_eq!(qfact(1).unwrap(), lp("q - q^-1"));
        // brute-force expansion of [1][2] = (q - q^-1)(q^2 - q^-2)
        let mut brute: BTreeMap<i64, i64> = BTreeMap::new();
        for (e1, c1) in [(1, 1), (-1, -1)] {
            for (e2, c2) in [(2, 1), (-2, -1)] {
                *brute.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        assert_eq!(qfact(2).unwrap(), LaurentPoly::from_terms(brute));
        assert_eq!(qfact(2).unwrap(), lp("q^3 - q - q^-1 + q^-3"));
        assert_eq!(qfact(-1), Err(Error::NegativeArgument(-1)));
    }

    #[test]
    fn shifted_binomials() {
        for k in 0..=6 {
            assert!(qbinom_shifted(2, k).unwrap().is_one());
        }
        assert_eq!(qbinom_shifted(3, 1).unwrap(), lp("q + q^-1"));
        assert_eq!(qbinom_shifted(3, 2).unwrap(), lp("q^2 + 1 + q^-2"));
        assert!(qbinom_shifted(1, 2).is_err());
        // direct factorial quotient agrees with the recurrence
        for n in 2..=6u32 {
            for k in 0..=5u32 {
                let num = qfact(i64::from(n) - 2 + i64::from(k)).unwrap();
                let den = &qfact(i64::from(k)).unwrap() * &qfact(i64::from(n) - 2).unwrap();
                assert_eq!(num.exact_div(&den).unwrap(), qbinom_shifted(n, k).unwrap());
            }
        }
    }

    #[test]
    fn binomial_symmetry() {
        for n in 2..=8u32 {
            for k in 0..=8u32 {
                assert_eq!(qbinom_shifted(n, k).unwrap(), qbinom_shifted(k + 2, n - 2).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn cyclotomic_coefficients() {
        assert!(cyclo_coeff(&CoeffQuery::new(5, 0, 3).unwrap()).is_one());
        assert_eq!(cyclo_coeff(&CoeffQuery::new(1, 1, 2).unwrap()), &qint(1) * &qint(3));
        assert!(CoeffQuery::new(3, 4, 2).is_err());
        assert!(CoeffQuery::new(3, 1, 1).is_err());
        let row = cyclo_coeff_row(6, 4).unwrap();
        for (k, c) in row.iter().enumerate() {
            assert_eq!(c, &cyclo_coeff(&CoeffQuery::new(6, k as u32, 4).unwrap()));
        }
    }

    #[test]
    fn habiro_coefficients() {
        assert!(habiro_coeff(4, 0).unwrap().is_one());
        assert!(habiro_coeff(1, 1).unwrap().is_zero());
        assert_eq!(habiro_coeff(3, 1).unwrap(), lp("q^6 + q^-6 - q^2 - q^-2"));
        assert!(habiro_coeff(2, 3).is_err());
    }

    #[test]
    fn tilde_coefficients() {
        assert!(tilde_coeff(&CoeffQuery::new(3, 0, 4).unwrap()).unwrap().is_one());
        let t = tilde_coeff(&CoeffQuery::new(1, 1, 2).unwrap()).unwrap();
        assert_eq!(&t * &qint(1), &qint(1) * &qint(3));
        assert_eq!(t, qint(3));
        let q = CoeffQuery::new(4, 2, 3).unwrap();
        assert_eq!(&tilde_coeff(&q).unwrap() * &qfact(2).unwrap(), cyclo_coeff(&q));
    }

    #[test]
    fn difference_identity_chain() {
        for n in 2..=6i64 {
            for big_n in 1..=30i64 {
                for k in 0..big_n {
                    let rhs = &qint(big_n - k) * &qint(big_n + k + n);
                    for j in 0..=k {
                        let lhs = &(&qint(big_n + n + j) * &qint(big_n - j)) - &(&qint(k + n + j) * &qint(k - j));
                        assert_eq!(lhs, rhs, "n={n} N={big_n} k={k} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn rank_two_matches_habiro() {
        for big_n in 0..=20u32 {
            for k in 0..=big_n {
                let c = cyclo_coeff(&CoeffQuery::new(big_n, k, 2).unwrap());
                assert_eq!(c, habiro_coeff(big_n + 1, k).unwrap(), "N={big_n} k={k}");
            }
        }
    }

    // p(q^-1) = sign·p(q) checked by evaluation at a generic point
    fn assert_reflection(p: &LaurentPoly, sign: i64, num: i64, den: i64, r: f64) {
        let prec = 128;
        let z = BigComplex::exp_i_pi_rational(num, den, prec).scale(&astro_float::BigFloat::from_f64(r, prec));
        let a = p.eval(&z).unwrap();
        let b = p.eval(&z.inv().unwrap()).unwrap();
        let b = if sign < 0 { b.neg() } else { b };
        let scale = crate::complex::bigfloat_to_f64(&a.abs()).max(1.0);
        assert!(crate::complex::abs_diff(&a, &b) / scale < 1e-25, "{p}");
        assert_eq!(p.mirror(), p.scale(&BigInt::from(sign)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn reflection_parity(m in -8i64..8, n in 2u32..6, big_n in 0u32..6, k in 0u32..6, num in 1i64..30, den in 2i64..31, r in 0.6f64..1.7) {
            prop_assume!(k <= big_n);
            assert_reflection(&qint(m), -1, num, den, r);
            let kk = i64::from(k);
            assert_reflection(&qfact(kk).unwrap(), if kk % 2 == 0 { 1 } else { -1 }, num, den, r);
            assert_reflection(&qbinom_shifted(n, k).unwrap(), 1, num, den, r);
            let q = CoeffQuery::new(big_n, k, n).unwrap();
            assert_reflection(&cyclo_coeff(&q), 1, num, den, r);
            assert_reflection(&tilde_coeff(&q).unwrap(), if kk % 2 == 0 { 1 } else { -1 }, num, den, r);
            assert_reflection(&habiro_coeff(big_n + 1, k).unwrap(), 1, num, den, r);
        }
    }
}
