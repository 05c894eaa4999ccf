//! The bundled tables against the factored forms they were transcribed from.

mod common;

use common::FACTORED;
use qknot::{Catalog, LaurentPoly};

#[test]
fn every_table_entry_matches_its_factored_form() {
    let cat = Catalog::bundled();
    let mut seen = 0;
    for &(knot, n, k, text) in FACTORED {
        let expected: LaurentPoly = text.parse().unwrap_or_else(|e| panic!("{knot} n={n} k={k}: {e}"));
        let stored = cat.get(knot).unwrap().hk(n, k).unwrap();
        assert_eq!(stored, expected, "{knot} n={n} k={k}");
        seen += 1;
    }
    let stored_entries: usize = cat
        .records()
        .map(|r| r.table().values().map(|col| col.len()).sum::<usize>())
        .sum();
    assert_eq!(seen, stored_entries);
}
