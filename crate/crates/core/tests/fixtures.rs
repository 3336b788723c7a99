//! Golden values for the bundled record fixtures, frozen from an exact
//! rational recomputation (tools/oracle_scientist_a.py).

use std::path::PathBuf;

use pindex_core::ingest::read_records;
use pindex_core::metrics::{build_report, Comparison, EarningFlag};
use pindex_core::partition::PartitionPolicy;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

#[test]
fn scientist_a_profile_and_golden_metrics() {
    let records = read_records(&fixture("scientist_a.csv")).unwrap();
    let rep = build_report(&records, &PartitionPolicy::default()).unwrap();

    assert_eq!(rep.n, 66);
    assert_eq!(rep.n_single, 6);
    let first_multi = records.iter().filter(|r| r.author_count > 1 && r.author_position == 1).count();
    assert_eq!(first_multi, 25);
    assert_eq!(records.iter().filter(|r| r.citations > 0).count(), 62);
    assert_eq!(rep.c_false, 2394);
    assert_eq!(rep.h, 28);
    assert_eq!(rep.c_single, 518);

    assert!((rep.c - 1171.956955625).abs() <= 1e-6, "C = {}", rep.c);
    assert!((rep.q - 17.756923570076).abs() <= 1e-6, "Q = {}", rep.q);
    assert!((rep.p - 17.756923570076).abs() <= 1e-6);
    assert_eq!(rep.c_rounded, 1172);
    assert_eq!(rep.p_rounded, 18);

    assert!(rep.c < rep.c_false as f64);
    assert!(rep.p < rep.h as f64);

    let cmp = Comparison::from_report(&rep);
    assert!((cmp.ratio.unwrap() - 0.489539246293).abs() <= 1e-9);
    assert_eq!(cmp.histogram, [13, 6, 8, 12, 7, 13, 0, 0, 1, 6]);
}

#[test]
fn mixed_fixture_matches_hand_recomputation() {
    let records = read_records(&fixture("mixed10.csv")).unwrap();
    let rep = build_report(&records, &PartitionPolicy::default()).unwrap();
    let want = [
        ("m01", 1.0),
        ("m02", 0.2),
        ("m03", 0.2),
        ("m04", 0.441),
        ("m05", 0.2536875889373281),
        ("m06", 0.765625),
        ("m07", 0.2066115702479339),
        ("m08", 0.109375),
        ("m09", 0.277950234375),
        ("m10", 0.4),
    ];
    for (e, (id, frac)) in rep.earnings.iter().zip(want) {
        assert_eq!(e.article_id, id);
        assert!((e.fraction - frac).abs() <= 1e-12, "{id}: {}", e.fraction);
    }
    assert!((rep.c - 220.56525903701797).abs() <= 1e-9);
    assert_eq!(rep.c_false, 638);
    assert!((rep.q - 22.056525903701797).abs() <= 1e-10);
    assert_eq!(rep.p, 10.0);
    assert_eq!(rep.earnings[1].flags, vec![EarningFlag::ExplicitPartition]);
    assert!(rep.earnings[3].flags.is_empty());
}
