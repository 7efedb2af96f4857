//! Named verification suites shared by the command line and the tests.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{check_composition_law, check_functor, check_relations, compositions};
use crate::bintree::check_gamma;
use crate::coalgebra::{admissible_cuttings, check_bialgebra, check_collapse_bounds, check_graft_compatibility, cuts};
use crate::path::MDyckPath;
use crate::report::Report;
use crate::series::check_series;
use crate::tamari::check_interval_property;
use crate::trees::{check_bases, check_generation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Interval,
    Bialgebra,
    Bases,
    Series,
    Functors,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Relations, Suite::Interval, Suite::Bialgebra, Suite::Bases, Suite::Series, Suite::Functors];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Interval => "interval",
            Suite::Bialgebra => "bialgebra",
            Suite::Bases => "bases",
            Suite::Series => "series",
            Suite::Functors => "functors",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Runs a suite for one `m`; `max_size` bounds total size or tree leaves.
pub fn run_suite(suite: Suite, m: usize, max_size: usize) -> Report {
    let mut report = Report::new(format!("{suite} m={m} max-size={max_size}"));
    match suite {
        Suite::Relations => report.absorb(check_relations(m, max_size)),
        Suite::Interval => {
            report.absorb(check_interval_property(m, max_size));
            if m == 1 {
                report.absorb(check_gamma(max_size));
            }
        }
        Suite::Bialgebra => {
            report.absorb(check_bialgebra(m, max_size));
            report.absorb(check_graft_compatibility(m, max_size));
            report.absorb(check_collapse_bounds(m, max_size));
            if m == 2 {
                report.absorb(cutting_canary());
            }
        }
        Suite::Bases => {
            report.absorb(check_bases(m, max_size, max_size.min(4)));
            for k in 0..m {
                report.absorb(check_generation(m, k, max_size.min(4)));
            }
        }
        Suite::Series => report.absorb(check_series(m, 12, 10)),
        Suite::Functors => {
            for r in compositions(m + 1) {
                report.absorb(check_functor(m, &r, max_size));
            }
            report.absorb(check_composition_law(m, max_size));
        }
    }
    report
}

/// The path `(0,2,0,5,0,5)` has four cuts and nine admissible cuttings.
pub fn cutting_canary() -> Report {
    let mut report = Report::new("cutting canary");
    let p = MDyckPath::new(2, vec![0, 2, 0, 5, 0, 5]).expect("valid");
    let c = cuts(&p).len();
    let a = admissible_cuttings(&p).len();
    report.check(c == 4, || format!("{c} cuts instead of 4"));
    report.check(a == 9, || format!("{a} cuttings instead of 9"));
    report
}
