use felcheck_core::random::SemigroupSampler;
use felcheck_core::verify::{self, IdentityId, Status};
use felcheck_core::SemigroupSpec;

#[test]
fn main_identity_on_random_semigroups() {
    let sampler = SemigroupSampler::new(5, 40);
    for spec in sampler.sample_many(2024, 40) {
        let report = verify::verify_fel_main(&spec, 8).unwrap();
        assert!(report.all_passed(), "{spec}");
        assert_eq!(report.count(Status::Pass), 18);
    }
}

#[test]
fn redundant_generators_do_not_matter() {
    let pairs: [(&[i64], &[i64]); 4] = [
        (&[2, 3], &[2, 3, 4]),
        (&[3, 5], &[3, 5, 8]),
        (&[4, 5, 6], &[4, 5, 6, 9, 10]),
        (&[3, 5], &[3, 5, 5]),
    ];
    for (base, extended) in pairs {
        let a = SemigroupSpec::new(base).unwrap();
        let b = SemigroupSpec::new(extended).unwrap();
        assert_eq!(a.gaps(), b.gaps());
        for s in [&a, &b] {
            let r = verify::verify_semigroup(s, 6, s.m() + 8).unwrap();
            assert!(r.all_passed(), "{s}");
        }
    }
}

#[test]
fn series_lemmas_on_random_semigroups() {
    for spec in SemigroupSampler::new(4, 25).sample_many(99, 20) {
        let r = verify::verify_series_lemmas(&spec, spec.m() + 10).unwrap();
        assert_eq!(r.checks.len(), 5);
        assert!(r.all_passed(), "{spec}");
    }
}

#[test]
fn report_sorting_is_order_independent() {
    let specs = SemigroupSampler::new(4, 20).sample_many(5, 6);
    let mut forward: Vec<_> = specs.iter().map(|s| verify::verify_thm_kp(s).unwrap()).collect();
    let mut backward: Vec<_> = specs.iter().rev().map(|s| verify::verify_thm_kp(s).unwrap()).collect();
    verify::sort_reports(&mut forward);
    verify::sort_reports(&mut backward);
    assert_eq!(forward, backward);
}

#[test]
fn literal_sign_flip_is_reported_not_failed() {
    let r = verify::verify_companions(3, 3, 1).unwrap();
    assert!(r.all_passed());
    let literal_bad: Vec<i64> = r
        .records(IdentityId::Fel1SignFlip)
        .filter(|c| c.status == Status::Discrepancy)
        .map(|c| c.parameter)
        .collect();
    assert!(literal_bad.iter().all(|&n| n >= 5));
}
