//! End-to-end builds of the ring presentations with their verification
//! batteries. The heavyweight boundary ring build lives in the acceptance
//! suite of the CLI crate.

use groth2_core::moduli::{
    build_k0_bg, build_k0_complement, build_k0_delta1, build_k0_m2, BuildOptions,
};

#[test]
fn m2_builds_to_rank_18() {
    let ring = build_k0_m2(&BuildOptions::default()).unwrap();
    for c in &ring.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    let report = ring.report.as_ref().unwrap();
    assert_eq!(report.rank_q, 18);
    assert!(report.free);
    assert_eq!(report.rank_mod_p.len(), 6);
    assert!(ring.basis_matches().unwrap());
    assert!(ring.verdict());
}

#[test]
fn bg_presentations_agree() {
    let ring = build_k0_bg(&BuildOptions::default()).unwrap();
    for c in &ring.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    assert!(ring.report.is_none());
    assert!(ring.verdict());
}

#[test]
fn delta1_builds_to_rank_65() {
    let ring = build_k0_delta1(&BuildOptions::default()).unwrap();
    for c in &ring.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    let report = ring.report.as_ref().unwrap();
    assert_eq!(report.rank_q, 65);
    assert!(report.free);
    // both delta readings recorded; the delta = lam one validates
    assert_eq!(ring.appendix.len(), 2);
    let by_label: Vec<(&str, bool)> = ring
        .appendix
        .iter()
        .map(|a| (a.reading.as_str(), a.check.passed))
        .collect();
    assert!(by_label.contains(&("delta = lam", true)));
    assert!(by_label.contains(&("delta = gam*lam^-1", false)));
    assert!(ring.verdict());
}

#[test]
fn complement_builds_to_rank_32() {
    let ring = build_k0_complement(&BuildOptions::default()).unwrap();
    for c in &ring.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    let report = ring.report.as_ref().unwrap();
    assert_eq!(report.rank_q, 32);
    assert!(report.free);
    assert!(ring.basis_matches().unwrap());
    assert!(ring.verdict());
}
