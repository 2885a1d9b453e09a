//! Derives decomposition numbers in characteristic 2 for n <= 5 from the
//! simple modules spanned by highest weight vectors, and prints them in the
//! data-file format.

use std::collections::BTreeMap;

use specht_gtensor::theorems::{derive_decomposition_rows, DecompositionData};
use specht_gtensor::FieldPrime;

fn main() -> specht_gtensor::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let mut rows = BTreeMap::new();
    for n in 1..=n_max {
        rows.extend(derive_decomposition_rows(n, FieldPrime::TWO)?);
    }
    let data = DecompositionData::from_rows(rows);
    print!("{}", data.to_text());
    match data.validate() {
        Ok(s) => eprintln!("valid: {s:?}"),
        Err(e) => eprintln!("invalid: {e}"),
    }
    Ok(())
}
