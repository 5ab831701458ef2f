//! Regression against frozen JSON snapshots of family members.
//!
//! Regenerate with `GOLDEN_REGEN=1 cargo test -p elephant-core --test
//! golden` after an intentional change, and review the diff.

use elephant_core::elephant::{Family, PolyFamily};
use elephant_core::rational::parse_rational;

fn build_records() -> Vec<PolyFamily> {
    let a_values = ["-1", "-1/2", "0", "1/4", "1/2", "1", "2"];
    let mut records = Vec::new();
    for family in [Family::R, Family::S] {
        for a_str in a_values {
            let a = parse_rational(a_str).unwrap();
            for n in 1..=10 {
                records.push(PolyFamily::build(family, n, Some(&a)).unwrap());
            }
        }
    }
    for n in 1..=10 {
        records.push(PolyFamily::build(Family::T, n, None).unwrap());
        records.push(PolyFamily::build(Family::U, n, None).unwrap());
    }
    for n in 0..=10 {
        records.push(PolyFamily::build(Family::V, n, None).unwrap());
    }
    records
}

#[test]
fn families_match_golden_snapshot() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/poly_families.json");
    let current = serde_json::to_string_pretty(&build_records()).unwrap();
    if std::env::var_os("GOLDEN_REGEN").is_some() {
        std::fs::write(path, &current).unwrap();
        return;
    }
    let frozen = std::fs::read_to_string(path).expect("golden snapshot missing");
    assert_eq!(
        frozen, current,
        "family records drifted from the golden snapshot"
    );
}
