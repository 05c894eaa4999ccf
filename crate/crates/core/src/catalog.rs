//! Per-knot cyclotomic data `H_k^{(n)}` and the invariants built from it.
//!
//! Two knots have closed forms valid for every rank and depth (`4_1`, `3_1`);
//! the others carry finite tables and refuse to answer outside them.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::quantum::{cyclo_coeff_row, qbinom_shifted};
#[cfg(test)]
use crate::quantum::qint;

/// The catalog shipped with the repository.
pub const BUNDLED_CATALOG: &str = include_str!("../../../data/catalog.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Source {
    #[serde(rename = "closed_form_41")]
    ClosedForm41,
    #[serde(rename = "closed_form_31")]
    ClosedForm31,
    #[serde(rename = "table")]
    Table,
}

/// Rank -> depth -> `H_k^{(n)}`.
pub type HkTable = BTreeMap<u32, BTreeMap<u32, LaurentPoly>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    name: String,
    source: Source,
    table: HkTable,
}

impl KnotRecord {
    pub fn figure_eight() -> Self {
        Self { name: "4_1".into(), source: Source::ClosedForm41, table: HkTable::new() }
    }

    pub fn trefoil() -> Self {
        Self { name: "3_1".into(), source: Source::ClosedForm31, table: HkTable::new() }
    }

    pub fn from_table(name: impl Into<String>, table: HkTable) -> Self {
        Self { name: name.into(), source: Source::Table, table }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn table(&self) -> &HkTable {
        &self.table
    }

    pub fn has_closed_form(&self) -> bool {
        self.source != Source::Table
    }

    /// Ranks with data; `None` means every rank `n >= 2`.
    pub fn ranks(&self) -> Option<Vec<u32>> {
        match self.source {
            Source::Table => Some(self.table.keys().copied().collect()),
            _ => None,
        }
    }

    /// Largest `k` such that `H_0..H_k` are all available at rank `n`;
    /// `None` means unbounded.
    pub fn max_depth(&self, n: u32) -> Option<Option<u32>> {
        match self.source {
            Source::Table => {
                let Some(by_depth) = self.table.get(&n) else {
                    return Some(None);
                };
                let mut k = None;
                while by_depth.contains_key(&k.map_or(0, |x: u32| x + 1)) {
                    k = Some(k.map_or(0, |x| x + 1));
                }
                Some(k)
            }
            _ => None,
        }
    }

    fn out_of_table(&self, n: u32, k: u32) -> Error {
        Error::OutOfTable { knot: self.name.clone(), n, k }
    }

    /// `H_k^{(n)}` for this knot.
    pub fn hk(&self, n: u32, k: u32) -> Result<LaurentPoly> {
        if n < 2 {
            return Err(Error::InvalidQuery(format!("rank n = {n} must be at least 2")));
        }
        match self.source {
            Source::ClosedForm41 => qbinom_shifted(n, k),
            Source::ClosedForm31 => {
                let (n, k) = (i64::from(n), i64::from(k));
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let framing = LaurentPoly::monomial(sign, k * (2 * n + k - 1));
                Ok(&framing * &qbinom_shifted(n as u32, k as u32)?)
            }
            Source::Table => self
                .table
                .get(&n)
                .and_then(|t| t.get(&k))
                .cloned()
                .ok_or_else(|| self.out_of_table(n, k)),
        }
    }

    /// `J_N^{SU(n)} = Σ_{k=0}^{N} C^{(n)}_{N+1,k} H_k^{(n)}`, evaluated in nested
    /// form `H_0 + [N][N+n](H_1 + [N-1][N+n+1](H_2 + ...))`.
    pub fn invariant_poly(&self, n: u32, color: u32) -> Result<LaurentPoly> {
        self.truncated_invariant(n, color, color)
    }

    /// The partial sum `Σ_{k=0}^{upto} C^{(n)}_{N+1,k} H_k^{(n)}` (with `upto <= N`).
    ///
    /// At a root of unity where `[N+a]` vanishes the remaining terms are exactly
    /// zero, which is how evaluations in the zero-limit regime avoid building
    /// the full polynomial.
    pub fn truncated_invariant(&self, n: u32, color: u32, upto: u32) -> Result<LaurentPoly> {
        if n < 2 {
            return Err(Error::InvalidQuery(format!("rank n = {n} must be at least 2")));
        }
        let upto = upto.min(color);
        let hs: Vec<LaurentPoly> = (0..=upto).map(|k| self.hk(n, k)).collect::<Result<_>>()?;
        let (big_n, n) = (i64::from(color), i64::from(n));
        let mut acc = hs[upto as usize].clone();
        for k in (0..upto as usize).rev() {
            let kk = k as i64;
            acc = &hs[k] + &acc.mul_qint(big_n - kk).mul_qint(big_n + n + kk);
        }
        Ok(acc)
    }

    /// Same as [`invariant_poly`](Self::invariant_poly) but summed term by term
    /// against the coefficient row; kept as a second route for cross-checks.
    pub fn invariant_poly_by_sum(&self, n: u32, color: u32) -> Result<LaurentPoly> {
        let row = cyclo_coeff_row(color, n)?;
        let mut acc = LaurentPoly::zero();
        for (k, c) in row.iter().enumerate() {
            acc = acc + c * &self.hk(n, k as u32)?;
        }
        Ok(acc)
    }
}

/// `J_{N-1}^{SU(n)}(4_1) = Σ_{j=0}^{N-1} Π_{k=1}^{j} ([n-2+k]/[k]) [N-k][N+n-2+k]`.
///
/// The ratio product is taken as the quantum binomial for each `j`; the
/// individual ratios are not Laurent polynomials.
pub fn invariant_41_direct(n: u32, big_n: u32) -> Result<LaurentPoly> {
    if n < 2 {
        return Err(Error::InvalidQuery(format!("rank n = {n} must be at least 2")));
    }
    if big_n < 1 {
        return Err(Error::InvalidQuery("the figure-eight sum needs N >= 1".into()));
    }
    let (nn, shift) = (i64::from(big_n), i64::from(n) - 2);
    let mut brackets = LaurentPoly::one();
    let mut acc = LaurentPoly::one();
    for j in 1..nn {
        brackets = brackets.mul_qint(nn - j).mul_qint(nn + shift + j);
        acc = acc + &qbinom_shifted(n, j as u32)? * &brackets;
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
struct CatalogFile {
    knots: Vec<RecordFile>,
}

#[derive(Serialize, Deserialize)]
struct RecordFile {
    name: String,
    source: Source,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    table: BTreeMap<String, BTreeMap<String, LaurentPoly>>,
}

/// Knot records keyed by name.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Catalog {
    records: BTreeMap<String, KnotRecord>,
}

impl Catalog {
    /// The four-knot catalog compiled into the library.
    pub fn bundled() -> Self {
        Self::from_json_str(BUNDLED_CATALOG).expect("bundled catalog parses")
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalog(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: CatalogFile = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        let mut catalog = Catalog::default();
        for rec in file.knots {
            let mut table = HkTable::new();
            for (n, by_k) in rec.table {
                let n: u32 = n.parse().map_err(|_| Error::Catalog(format!("{}: bad rank key {n:?}", rec.name)))?;
                if n < 2 {
                    return Err(Error::Catalog(format!("{}: rank {n} below 2", rec.name)));
                }
                let mut column = BTreeMap::new();
                for (k, poly) in by_k {
                    let k: u32 = k.parse().map_err(|_| Error::Catalog(format!("{}: bad depth key {k:?}", rec.name)))?;
                    column.insert(k, poly);
                }
                table.insert(n, column);
            }
            match rec.source {
                Source::Table if table.is_empty() => {
                    return Err(Error::Catalog(format!("{}: table source without data", rec.name)));
                }
                Source::ClosedForm31 | Source::ClosedForm41 if !table.is_empty() => {
                    return Err(Error::Catalog(format!("{}: closed-form source must not carry a table", rec.name)));
                }
                _ => {}
            }
            catalog.insert(KnotRecord { name: rec.name, source: rec.source, table })?;
        }
        Ok(catalog)
    }

    pub fn insert(&mut self, record: KnotRecord) -> Result<()> {
        if self.records.contains_key(&record.name) {
            return Err(Error::Catalog(format!("duplicate knot name {:?}", record.name)));
        }
        self.records.insert(record.name.clone(), record);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&KnotRecord> {
        self.records.get(name).ok_or_else(|| Error::UnknownKnot(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    pub fn records(&self) -> impl Iterator<Item = &KnotRecord> {
        self.records.values()
    }

    /// Canonical text: one knot object per entry, one polynomial per line,
    /// ranks and depths ascending. The bundled file is stored in exactly this form.
    pub fn to_json_string(&self) -> String {
        let mut out = String::from("{\n  \"knots\": [\n");
        let mut records: Vec<&KnotRecord> = self.records.values().collect();
        records.sort_by(|a, b| (a.source == Source::Table, &a.name).cmp(&(b.source == Source::Table, &b.name)));
        for (i, rec) in records.iter().enumerate() {
            let source = serde_json::to_string(&rec.source).expect("source serializes");
            let name = serde_json::to_string(&rec.name).expect("name serializes");
            if rec.table.is_empty() {
                let _ = write!(out, "    {{ \"name\": {name}, \"source\": {source} }}");
            } else {
                let _ = write!(out, "    {{\n      \"name\": {name},\n      \"source\": {source},\n      \"table\": {{\n");
                for (j, (n, by_k)) in rec.table.iter().enumerate() {
                    let _ = writeln!(out, "        \"{n}\": {{");
                    for (l, (k, poly)) in by_k.iter().enumerate() {
                        let text = serde_json::to_string(poly).expect("poly serializes");
                        let sep = if l + 1 < by_k.len() { "," } else { "" };
                        let _ = writeln!(out, "          \"{k}\": {text}{sep}");
                    }
                    let sep = if j + 1 < rec.table.len() { "," } else { "" };
                    let _ = writeln!(out, "        }}{sep}");
                }
                out.push_str("      }\n    }");
            }
            out.push_str(if i + 1 < records.len() { ",\n" } else { "\n" });
        }
        out.push_str("  ]\n}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::cyclo_coeff;
    use crate::quantum::CoeffQuery;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn bundled_catalog_shape() {
        let cat = Catalog::bundled();
        assert_eq!(cat.names().collect::<Vec<_>>(), ["3_1", "4_1", "5_2", "6_1"]);
        let five_two = cat.get("5_2").unwrap();
        assert_eq!(five_two.ranks(), Some(vec![2, 3, 4]));
        assert_eq!(five_two.max_depth(3), Some(Some(4)));
        assert_eq!(five_two.max_depth(7), Some(None));
        assert_eq!(cat.get("4_1").unwrap().max_depth(9), None);
        assert!(matches!(cat.get("7_4"), Err(Error::UnknownKnot(_))));
    }

    #[test]
    fn canonical_text_round_trip() {
        let cat = Catalog::bundled();
        assert_eq!(cat.to_json_string(), BUNDLED_CATALOG);
        assert_eq!(Catalog::from_json_str(&cat.to_json_string()).unwrap(), cat);
    }

    #[test]
    fn rejects_malformed_catalogs() {
        let dup = r#"{"knots":[{"name":"4_1","source":"closed_form_41"},{"name":"4_1","source":"closed_form_41"}]}"#;
        assert!(matches!(Catalog::from_json_str(dup), Err(Error::Catalog(_))));
        let empty_table = r#"{"knots":[{"name":"x","source":"table"}]}"#;
        assert!(Catalog::from_json_str(empty_table).is_err());
        let bad_rank = r#"{"knots":[{"name":"x","source":"table","table":{"1":{"0":[[0,"1"]]}}}]}"#;
        assert!(Catalog::from_json_str(bad_rank).is_err());
        let bad_source = r#"{"knots":[{"name":"x","source":"skein"}]}"#;
        assert!(Catalog::from_json_str(bad_source).is_err());
    }

    #[test]
    fn hk_examples() {
        let cat = Catalog::bundled();
        assert!(cat.get("4_1").unwrap().hk(2, 3).unwrap().is_one());
        assert_eq!(cat.get("3_1").unwrap().hk(2, 1).unwrap(), lp("-q^4"));
        assert_eq!(cat.get("5_2").unwrap().hk(2, 1).unwrap(), lp("-q^4(1+q^4)"));
        assert!(matches!(cat.get("5_2").unwrap().hk(2, 5), Err(Error::OutOfTable { .. })));
        assert!(matches!(cat.get("6_1").unwrap().hk(5, 1), Err(Error::OutOfTable { .. })));
        for rec in cat.records() {
            for n in 2..=4 {
                assert!(rec.hk(n, 0).unwrap().is_one(), "{} n={n}", rec.name());
            }
        }
    }

    #[test]
    fn trefoil_matches_jones_polynomial() {
        // Jones polynomial of the trefoil, t + t^3 - t^4, with t = q^2.
        let jones = lp("q^2 + q^6 - q^8");
        let h1 = (&jones - &LaurentPoly::one()).exact_div(&cyclo_coeff(&CoeffQuery::new(1, 1, 2).unwrap())).unwrap();
        assert_eq!(h1, Catalog::bundled().get("3_1").unwrap().hk(2, 1).unwrap());
        assert_eq!(KnotRecord::trefoil().invariant_poly(2, 1).unwrap(), jones);
    }

    #[test]
    fn invariant_examples() {
        let cat = Catalog::bundled();
        for rec in cat.records() {
            for n in 2..=4 {
                assert!(rec.invariant_poly(n, 0).unwrap().is_one());
            }
        }
        // 1 + [1][3] expanded by hand
        assert_eq!(KnotRecord::figure_eight().invariant_poly(2, 1).unwrap(), lp("q^4 - q^2 + 1 - q^-2 + q^-4"));
        assert!(matches!(cat.get("5_2").unwrap().invariant_poly(2, 5), Err(Error::OutOfTable { .. })));
    }

    #[test]
    fn direct_figure_eight_sum() {
        for n in 2..=5 {
            assert!(invariant_41_direct(n, 1).unwrap().is_one());
        }
        assert_eq!(invariant_41_direct(2, 2).unwrap(), &LaurentPoly::one() + &(&qint(1) * &qint(3)));
        assert_eq!(invariant_41_direct(3, 3).unwrap(), KnotRecord::figure_eight().invariant_poly(3, 2).unwrap());
        assert!(invariant_41_direct(2, 0).is_err());
    }

    #[test]
    fn nested_and_summed_forms_agree() {
        let cat = Catalog::bundled();
        for rec in cat.records() {
            for n in 2..=4 {
                for color in 0..=4 {
                    assert_eq!(rec.invariant_poly(n, color).unwrap(), rec.invariant_poly_by_sum(n, color).unwrap());
                }
            }
        }
    }

    #[test]
    fn invariants_are_one_at_q_equals_one() {
        let cat = Catalog::bundled();
        for rec in cat.records() {
            let ranks = rec.ranks().unwrap_or_else(|| vec![2, 3, 4, 5]);
            for n in ranks {
                let top = if rec.has_closed_form() { 8 } else { 4 };
                for color in 0..=top {
                    assert_eq!(rec.invariant_poly(n, color).unwrap().eval_at_one(), 1.into(), "{} n={n} N={color}", rec.name());
                }
            }
        }
    }
}
