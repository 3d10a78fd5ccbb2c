//! One line per acceptance criterion. Criteria that cannot hold as stated
//! print FAIL; only their attainable parts are asserted. Runs without the
//! test harness so the lines are always shown.

use std::time::{Duration, Instant};

use shifted_crystal::verify::{self, Options, Report, Suite};

const SEC: Duration = Duration::from_secs(1);

struct Line {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    reports: Vec<(&'static str, Report)>,
    elapsed: Duration,
}

impl Line {
    fn within_limit(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed < l)
    }

    fn passed(&self) -> bool {
        self.within_limit() && self.reports.iter().all(|(_, r)| r.passed())
    }

    fn print(&self) {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let limit = self.limit.map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        println!(
            "criterion {:>2} [{verdict}] {}: {:.2}s (limit {limit})",
            self.id,
            self.title,
            self.elapsed.as_secs_f64()
        );
        for (label, r) in &self.reports {
            println!("    {} {label}: {} cases, {} failed", if r.passed() { "ok " } else { "bad" }, r.cases, r.failed);
        }
    }
}

fn measure(id: u32, title: &'static str, limit: Option<Duration>, suites: &[Suite]) -> Line {
    let opts = Options::default();
    let start = Instant::now();
    let reports = suites.iter().map(|&s| (s.name(), verify::run(s, &opts).unwrap())).collect();
    Line { id, title, limit, reports, elapsed: start.elapsed() }
}

fn main() {
    let mut lines = vec![
        measure(1, "crystal graph on SSDT_3((3,1))", Some(SEC), &[Suite::CrystalGraph31]),
        measure(2, "Schur expansion of P_(3,1)", Some(SEC), &[Suite::SchurP31]),
        measure(3, "staircase skew Schur example", Some(30 * SEC), &[Suite::StaircaseExample]),
    ];

    // Skew example: the displayed tableaux include three that fail the skew
    // tableau rule, and the printed LR values are P-coefficients rather than f.
    let start = Instant::now();
    let ssdt = verify::run(Suite::SkewSsdtExample, &Options::default()).unwrap();
    let literal = verify::skew_lr_example_literal().unwrap();
    let normalized = verify::run(Suite::SkewLrExample, &Options::default()).unwrap();
    lines.push(Line {
        id: 4,
        title: "skew example (both displays, as printed)",
        limit: Some(60 * SEC),
        reports: vec![
            ("skew-ssdt-example", ssdt.clone()),
            ("skew-lr-example (printed as f)", literal.clone()),
            ("skew-lr-example (printed as P-coefficients)", normalized.clone()),
        ],
        elapsed: start.elapsed(),
    });

    lines.push(measure(5, "shifted LR rules agree, |mu|+|nu| <= 8", Some(600 * SEC), &[Suite::LrRulesAgree]));
    lines.push(measure(6, "lattice rules agree, length <= 7", Some(60 * SEC), &[Suite::LatticeRulesAgree]));
    lines.push(measure(7, "crystal axioms on 10^4 seeded words", None, &[Suite::CrystalAxioms]));

    // Each closure suite has its own limit.
    let closure: Vec<Line> = [Suite::ClosureSsdt, Suite::ClosureStaircase, Suite::ClosureSkew]
        .iter()
        .map(|&s| measure(8, "closure", Some(300 * SEC), &[s]))
        .collect();
    let closure_ok = closure.iter().all(Line::passed);
    lines.push(Line {
        id: 8,
        title: "closure under all operators",
        limit: None,
        elapsed: closure.iter().map(|l| l.elapsed).sum(),
        reports: closure.into_iter().flat_map(|l| l.reports).collect(),
    });

    lines.push(measure(9, "bijection round trips and stability", None, &[Suite::Bijections, Suite::Stability]));

    let start = Instant::now();
    let corrected = verify::run(Suite::ComplementIdentity, &Options::default()).unwrap();
    let literal10 = verify::run(Suite::ComplementIdentityLiteral, &Options::default()).unwrap();
    lines.push(Line {
        id: 10,
        title: "complement identity, r <= 3 (as printed)",
        limit: Some(120 * SEC),
        reports: vec![("complement-identity-literal", literal10.clone()), ("complement-identity", corrected.clone())],
        elapsed: start.elapsed(),
    });

    for l in &lines {
        l.print();
    }

    for l in &lines {
        match l.id {
            4 => {
                assert!(l.within_limit());
                assert!(normalized.passed(), "{normalized}");
                assert!(!literal.passed() && !ssdt.passed());
            }
            8 => assert!(closure_ok),
            10 => {
                assert!(l.within_limit());
                assert!(corrected.passed(), "{corrected}");
                assert!(!literal10.passed());
            }
            _ => assert!(l.passed(), "criterion {} failed", l.id),
        }
    }
}
