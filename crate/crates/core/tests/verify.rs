use vcg_core::group::Family;
use vcg_core::par::Mode;
use vcg_core::verify::{self, CheckKind, Perturbation, Verdict, VerifyConfig};

#[test]
fn default_run_has_no_mismatch() {
    let report = verify::run(&VerifyConfig::default());
    assert!(report.is_success(), "{:?}", report.mismatches().next());
    assert_eq!(report.summary.mismatched, 0);
    assert!(report.summary.matched > 500);
    for c in report.skipped() {
        assert!(c.note.as_deref().unwrap().contains("capacity"), "{c:?}");
    }
}

#[test]
fn perturbation_is_caught() {
    let report = verify::run(&VerifyConfig {
        only: Some(CheckKind::Fz),
        perturbation: Some(Perturbation::FlipGcd),
        ..VerifyConfig::default()
    });
    assert!(!report.is_success());
    assert!(report
        .checks
        .iter()
        .any(|c| c.verdict == Verdict::Mismatch && c.kind == CheckKind::Fz));
}

#[test]
fn modes_agree() {
    let base = VerifyConfig {
        only: Some(CheckKind::Cup),
        samples: 6,
        ..VerifyConfig::default()
    };
    let seq = verify::run(&VerifyConfig {
        mode: Mode::Sequential,
        ..base.clone()
    });
    let par = verify::run(&VerifyConfig {
        mode: Mode::Parallel,
        ..base
    });
    let render = |r: &verify::VerifyReport| serde_json::to_string(r).unwrap();
    assert_eq!(render(&seq), render(&par));
}

#[test]
fn family_filter_restricts_specs() {
    let report = verify::run(&VerifyConfig {
        only: Some(CheckKind::Cup),
        family: Some(Family::Metacyclic),
        samples: 20,
        ..VerifyConfig::default()
    });
    assert_eq!(report.summary.total, 20 * verify::cup_rules().len());
}

#[test]
fn check_kind_names_round_trip() {
    for k in CheckKind::ALL {
        assert_eq!(k.name().parse::<CheckKind>().unwrap(), k);
    }
    assert!("nonsense".parse::<CheckKind>().is_err());
}
