//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every bound below is pinned; runtime limits are wall-clock budgets in
//! seconds measured around each criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dyckm::algebra::{check_composition_law, check_functor, check_relations, compositions, paths_up_to, star_i, star_i_sum};
use dyckm::bintree::check_gamma;
use dyckm::coalgebra::{check_bialgebra, check_collapse_bounds, coproduct, tensor};
use dyckm::series::check_series;
use dyckm::tamari::check_interval_property;
use dyckm::trees::check_bases;
use dyckm::verify::cutting_canary;
use dyckm::{enumerate, MDyckPath, PathSum, Report, Slot};

type Criterion = (&'static str, u64, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: Vec<Report>) -> Outcome {
    let ok = reports.iter().all(Report::is_ok);
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    let mut detail = format!("{checks} checks");
    for r in reports.iter().filter(|r| !r.is_ok()) {
        detail.push_str(&format!("; {} failed {} times, first: {}", r.name, r.failure_count, r.failures[0]));
    }
    Outcome { ok, detail }
}

fn path(m: usize, levels: &[usize]) -> MDyckPath {
    MDyckPath::new(m, levels.to_vec()).expect("valid path")
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn counts() -> Outcome {
    let mut reports = Vec::new();
    for (m, max_n) in [(1, 6), (2, 6), (3, 4)] {
        let mut r = Report::new(format!("counts m={m}"));
        for n in 1..=max_n {
            let expected = binomial((m as u64 + 1) * n as u64, n as u64) / (m as u64 * n as u64 + 1);
            let got = enumerate(m, n).expect("m >= 1").len() as u64;
            r.check(got == expected, || format!("|Dyck_{n}^{m}| = {got}, expected {expected}"));
        }
        reports.push(r);
    }
    let mut drawn = Report::new("three drawn paths");
    let listed = enumerate(2, 2).expect("m >= 1");
    drawn.check(listed == vec![path(2, &[0, 4]), path(2, &[1, 3]), path(2, &[2, 2])], || format!("{listed:?}"));
    reports.push(drawn);
    from_reports(reports)
}

fn worked_example() -> Outcome {
    let p = path(2, &[1, 3]);
    let q = path(2, &[0, 2, 4, 2]);
    let expect0: PathSum = [[1, 3, 0, 2, 4, 2], [1, 2, 0, 2, 5, 2], [1, 1, 0, 2, 6, 2], [1, 0, 0, 2, 7, 2]]
        .iter()
        .map(|l| path(2, l))
        .collect();
    let expect1: PathSum = [[1, 2, 0, 2, 4, 3], [1, 1, 0, 2, 5, 3], [1, 1, 0, 2, 4, 4], [1, 0, 0, 2, 6, 3], [1, 0, 0, 2, 5, 4]]
        .iter()
        .map(|l| path(2, l))
        .collect();
    let mut r = Report::new("worked example");
    let got0 = star_i(&p, 0, &q).expect("same m");
    let got1 = star_i(&p, 1, &q).expect("same m");
    r.check(got0 == expect0, || format!("*_0 gives {got0}"));
    r.check(got1 == expect1, || format!("*_1 gives {got1}"));
    from_reports(vec![r])
}

fn relations() -> Outcome {
    let mut reports: Vec<Report> = (1..=3).map(|m| check_relations(m, 4)).collect();
    reports.extend((1..=2).map(|m| check_relations(m, 5)));
    from_reports(reports)
}

fn intervals() -> Outcome {
    from_reports((1..=2).map(|m| check_interval_property(m, 5)).collect())
}

/// Dendriform axioms with `x > y = x *_0 y` and `x < y = x *_1 y`.
fn dendriform(max_total: usize) -> Report {
    let mut r = Report::new(format!("dendriform total<={max_total}"));
    let basis = paths_up_to(1, max_total);
    let single = |p: &MDyckPath| PathSum::single(p.clone());
    let succ = |x: &PathSum, y: &PathSum| star_i_sum(x, 0, y).expect("m = 1");
    let prec = |x: &PathSum, y: &PathSum| star_i_sum(x, 1, y).expect("m = 1");
    for (sx, x) in &basis {
        for (sy, y) in &basis {
            for (sz, z) in &basis {
                if sx + sy + sz > max_total {
                    continue;
                }
                let (x, y, z) = (single(x), single(y), single(z));
                let yz = succ(&y, &z).plus(&prec(&y, &z));
                let xy = succ(&x, &y).plus(&prec(&x, &y));
                r.check(prec(&prec(&x, &y), &z) == prec(&x, &yz), || format!("(x<y)<z at {x},{y},{z}"));
                r.check(prec(&succ(&x, &y), &z) == succ(&x, &prec(&y, &z)), || format!("(x>y)<z at {x},{y},{z}"));
                r.check(succ(&xy, &z) == succ(&x, &succ(&y, &z)), || format!("x>(y>z) at {x},{y},{z}"));
            }
        }
    }
    r
}

fn bridge() -> Outcome {
    from_reports(vec![check_gamma(5), dendriform(5)])
}

fn bases() -> Outcome {
    from_reports((1..=2).map(|m| check_bases(m, 5, 4)).collect())
}

fn functors() -> Outcome {
    let mut reports = Vec::new();
    for m in 1..=2 {
        for r in compositions(m + 1) {
            reports.push(check_functor(m, &r, 4));
        }
        reports.push(check_composition_law(m, 4));
    }
    from_reports(reports)
}

fn coalgebra() -> Outcome {
    let mut reports = vec![cutting_canary()];
    let mut primitive = Report::new("rho primitive");
    for m in 1..=3 {
        let rho = MDyckPath::rho(m);
        let expected = tensor(Slot::Path(rho.clone()), Slot::Unit).plus(&tensor(Slot::Unit, Slot::Path(rho.clone())));
        primitive.check(coproduct(&rho) == expected, || format!("Delta(rho_{m}) is not primitive"));
    }
    reports.push(primitive);
    reports.extend((1..=2).map(|m| check_bialgebra(m, 4)));
    reports.extend((2..=3).map(|m| check_collapse_bounds(m, 4)));
    from_reports(reports)
}

fn series() -> Outcome {
    from_reports((1..=3).map(|m| check_series(m, 12, 10)).collect())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 counts m<=3", 10, counts),
        ("2 worked example", 1, worked_example),
        ("3 relations (1),(2)", 300, relations),
        ("4 interval supports", 300, intervals),
        ("5 m=1 bridge", 120, bridge),
        ("6 bases", 300, bases),
        ("7 functors", 300, functors),
        ("8 coalgebra", 60, coalgebra),
        ("9 series", 30, series),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let ok = outcome.ok && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {} [{:.2}s of {budget}s]",
            if ok { "PASS" } else { "FAIL" },
            outcome.detail,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
