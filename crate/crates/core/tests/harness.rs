use tconn::classify::{verify_bipartite, verify_theorem, SimisStatus};

#[test]
fn edge_ideals_follow_bipartiteness() {
    let report = verify_bipartite(6, 3).unwrap();
    assert_eq!(report.disagreements, 0);
    for row in &report.rows {
        if row.predicted {
            assert_eq!(row.simis_bounded, SimisStatus::EqualUpTo, "{}", row.graph);
        } else {
            assert_eq!(row.witness.as_ref().map(|w| w.s), Some(2), "{}", row.graph);
        }
    }
}

#[test]
fn unpacked_rows_never_claim_more_than_the_bound() {
    // Simis would imply packed; rows that are not packed must never be
    // reported with a verified Simis verdict, only "equal up to s_max".
    let report = verify_theorem(5, &[3, 4, 5], None).unwrap();
    assert_eq!(report.disagreements, 0);
    for row in report.rows.iter().filter(|r| r.simis_bounded == SimisStatus::Witness) {
        assert!(!row.packed_computed, "{} t={}", row.graph, row.t);
    }
}
