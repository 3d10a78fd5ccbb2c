use shifted_crystal::par::Execution;
use shifted_crystal::verify::{self, Options, Suite};

/// Reduced sweep bounds so the whole list runs in a few seconds.
fn small(suite: Suite) -> Option<usize> {
    let cap = match suite {
        Suite::ClosureStaircase | Suite::StaircaseThreeWay | Suite::StaircaseBSet => 2,
        Suite::ComplementIdentity | Suite::ComplementIdentityLiteral => 2,
        Suite::Stability => 3,
        Suite::ClosureSkew | Suite::SkewThreeWay | Suite::Bijections => 4,
        _ => 5,
    };
    suite.default_size().map(|d| d.min(cap))
}

fn opts(suite: Suite, exec: Execution) -> Options {
    Options { max_size: small(suite), samples: 500, exec, ..Options::default() }
}

fn expected_to_pass(suite: Suite) -> bool {
    !matches!(suite, Suite::SkewSsdtExample | Suite::ComplementIdentityLiteral)
}

#[test]
fn every_suite_has_the_expected_verdict() {
    for suite in Suite::ALL {
        let rep = verify::run(suite, &opts(suite, Execution::default_for_build())).unwrap();
        assert!(rep.cases > 0, "{suite} ran no cases");
        assert_eq!(rep.passed(), expected_to_pass(suite), "{rep}");
    }
}

#[test]
fn sequential_and_parallel_runs_agree() {
    for suite in [Suite::LrRulesAgree, Suite::ClosureSsdt, Suite::CrystalAxioms, Suite::ComplementIdentityLiteral] {
        let a = verify::run(suite, &opts(suite, Execution::Sequential)).unwrap();
        let b = verify::run(suite, &opts(suite, Execution::Parallel)).unwrap();
        assert_eq!((a.cases, a.failed, &a.failures), (b.cases, b.failed, &b.failures), "{suite}");
    }
}

#[test]
fn reports_serialize_with_the_suite_name() {
    let rep = verify::run(Suite::SchurP31, &Options::default()).unwrap();
    let v = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["suite"], "schur-p31");
    assert_eq!(v["failed"], 0);
}

#[test]
fn literal_lr_reading_disagrees_only_where_the_power_of_two_is_nontrivial() {
    let rep = verify::skew_lr_example_literal().unwrap();
    // Four methods at (5,2,1) and at (4,3,1).
    assert_eq!(rep.failed, 8, "{rep}");
}

#[test]
fn skew_display_misses_exactly_the_three_rejected_tableaux() {
    let rep = verify::run(Suite::SkewSsdtExample, &Options::default()).unwrap();
    let rejected = rep.failures.iter().filter(|m| m.contains("3'")).count();
    assert_eq!(rejected, 3, "{rep}");
}

#[test]
fn suite_names_parse() {
    for suite in Suite::ALL {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
    assert!("lr-rules".parse::<Suite>().is_err());
}
