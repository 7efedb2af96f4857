//! Cuts of paths, the coproduct and the unit-extended tensor products.

use std::fmt;

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::algebra::{paths_up_to, star, star_i, star_sum};
use crate::error::{Error, Result};
use crate::path::{heights, MDyckPath, Step};
use crate::report::Report;
use crate::sum::FormalSum;
use crate::tamari::c_bounds;
use crate::PathSum;

/// Either the unit of the augmented algebra or a path.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Unit,
    Path(MDyckPath),
}

impl Slot {
    pub fn path(&self) -> Option<&MDyckPath> {
        match self {
            Slot::Unit => None,
            Slot::Path(p) => Some(p),
        }
    }

    /// Size, with the unit of size zero.
    pub fn size(&self) -> usize {
        self.path().map_or(0, MDyckPath::size)
    }

    /// Last level, with the unit at level zero.
    pub fn last_level(&self) -> usize {
        self.path().map_or(0, MDyckPath::last_level)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Unit => write!(f, "1"),
            Slot::Path(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Slot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Slot::Unit => s.serialize_str("unit"),
            Slot::Path(p) => p.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Slot {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Word(String),
            Path(MDyckPath),
        }
        match Raw::deserialize(d)? {
            Raw::Word(w) if w == "unit" => Ok(Slot::Unit),
            Raw::Word(w) => Err(serde::de::Error::custom(format!("unknown tensor factor {w:?}"))),
            Raw::Path(p) => Ok(Slot::Path(p)),
        }
    }
}

pub type SlotSum = FormalSum<Slot>;
pub type TensorSum = FormalSum<(Slot, Slot)>;
pub type Tensor3Sum = FormalSum<(Slot, Slot, Slot)>;

/// The pure tensor `a (x) b`.
pub fn tensor(a: Slot, b: Slot) -> TensorSum {
    TensorSum::single((a, b))
}

/// A cut `P_{u,d}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cut {
    /// Position of the first step in the step word.
    pub first_step: usize,
    /// Position of the last step in the step word.
    pub last_step: usize,
    /// Rank of the starting up step.
    pub start: usize,
    /// Global index of the ending down step.
    pub end: usize,
    pub path: MDyckPath,
}

/// An admissible cutting: pairwise disjoint cuts sorted by position.
pub type Cutting = Vec<Cut>;

/// Ranks of the up steps that are initial or preceded by an up step.
pub fn central_steps(p: &MDyckPath) -> Vec<usize> {
    let levels = p.levels();
    (1..=levels.len()).filter(|&k| k == 1 || levels[k - 2] == 0).collect()
}

/// All cuts of `p`, sorted by first step and then by last step.
pub fn cuts(p: &MDyckPath) -> Vec<Cut> {
    let steps = p.steps();
    let hs = heights(p.m(), &steps);
    let central = central_steps(p);
    let mut ups = 0;
    let mut downs = 0;
    let mut down_index = vec![0; steps.len()];
    let mut up_positions = Vec::new();
    for (i, s) in steps.iter().enumerate() {
        match s {
            Step::Up => {
                ups += 1;
                up_positions.push((ups, i));
            }
            Step::Down => {
                down_index[i] = downs;
                downs += 1;
            }
        }
    }
    let mut out = Vec::new();
    for (rank, first) in up_positions {
        if !central.contains(&rank) {
            continue;
        }
        let base = hs[first];
        for last in first + 1..steps.len() {
            if hs[last + 1] < base {
                break;
            }
            if hs[last + 1] == base && !(first == 0 && last == steps.len() - 1) {
                let path = MDyckPath::from_steps(p.m(), &steps[first..=last]).expect("closed excursion");
                out.push(Cut { first_step: first, last_step: last, start: rank, end: down_index[last], path });
            }
        }
    }
    out.sort();
    out
}

/// All nonempty families of pairwise disjoint cuts.
pub fn admissible_cuttings(p: &MDyckPath) -> Vec<Cutting> {
    let all = cuts(p);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend_cuttings(&all, 0, &mut cur, &mut out);
    out
}

fn extend_cuttings(all: &[Cut], from: usize, cur: &mut Vec<Cut>, out: &mut Vec<Cutting>) {
    for i in from..all.len() {
        if cur.last().is_some_and(|c: &Cut| c.last_step >= all[i].first_step) {
            continue;
        }
        cur.push(all[i].clone());
        out.push(cur.clone());
        extend_cuttings(all, i + 1, cur, out);
        cur.pop();
    }
}

/// `P / cutting`: removes the steps of every cut.
pub fn collapse(p: &MDyckPath, cutting: &[Cut]) -> Result<MDyckPath> {
    let valid = cuts(p);
    for (n, c) in cutting.iter().enumerate() {
        if !valid.contains(c) {
            return Err(Error::InvalidCut);
        }
        if n > 0 && cutting[n - 1].last_step >= c.first_step {
            return Err(Error::OverlappingCuts);
        }
    }
    let steps = p.steps();
    let kept: Vec<Step> = steps
        .iter()
        .enumerate()
        .filter(|(i, _)| !cutting.iter().any(|c| (c.first_step..=c.last_step).contains(i)))
        .map(|(_, s)| *s)
        .collect();
    MDyckPath::from_steps(p.m(), &kept)
}

fn path_sum_tensor(left: &PathSum, right: Slot) -> TensorSum {
    left.iter().map(|(p, c)| ((Slot::Path(p.clone()), right.clone()), c)).collect()
}

/// The reduced coproduct: a sum over admissible cuttings.
pub fn reduced_coproduct(p: &MDyckPath) -> TensorSum {
    let mut out = TensorSum::zero();
    for cutting in admissible_cuttings(p) {
        let mut left = PathSum::single(cutting[0].path.clone());
        for c in &cutting[1..] {
            left = star_sum(&left, &PathSum::single(c.path.clone())).expect("same m");
        }
        let rest = collapse(p, &cutting).expect("admissible");
        out.add_assign_sum(&path_sum_tensor(&left, Slot::Path(rest)));
    }
    out
}

/// `Delta(P) = P (x) 1 + reduced + 1 (x) P`.
pub fn coproduct(p: &MDyckPath) -> TensorSum {
    let mut out = reduced_coproduct(p);
    out.add_term((Slot::Path(p.clone()), Slot::Unit), 1);
    out.add_term((Slot::Unit, Slot::Path(p.clone())), 1);
    out
}

/// `Delta` on a slot, with `Delta(1) = 1 (x) 1`.
pub fn coproduct_slot(s: &Slot) -> TensorSum {
    match s {
        Slot::Unit => tensor(Slot::Unit, Slot::Unit),
        Slot::Path(p) => coproduct(p),
    }
}

/// Linear extension of the coproduct.
pub fn coproduct_sum(x: &PathSum) -> TensorSum {
    x.map_linear(coproduct)
}

/// Whether [`delta_filtered`] keeps `L(Q) >= j` or `L(Q) = j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Filter {
    AtLeast,
    Exactly,
}

/// Terms `P_(1) (x) P_(2)` of `Delta(P)` selected by the last level of `P_(2)`;
/// the unit has last level 0.
pub fn delta_filtered(p: &MDyckPath, j: usize, mode: Filter) -> Result<TensorSum> {
    if j > p.last_level() {
        return Err(Error::GraftOutOfRange { index: j, last: p.last_level() });
    }
    Ok(coproduct(p)
        .iter()
        .filter(|((_, r), _)| match mode {
            Filter::AtLeast => r.last_level() >= j,
            Filter::Exactly => r.last_level() == j,
        })
        .map(|(k, c)| (k.clone(), c))
        .collect())
}

fn slot_sum(x: PathSum) -> SlotSum {
    x.iter().map(|(p, c)| (Slot::Path(p.clone()), c)).collect()
}

/// The total product `*` with `1 * x = x * 1 = x`.
pub fn slot_star(a: &Slot, b: &Slot) -> SlotSum {
    match (a, b) {
        (Slot::Unit, _) => SlotSum::single(b.clone()),
        (_, Slot::Unit) => SlotSum::single(a.clone()),
        (Slot::Path(p), Slot::Path(q)) => slot_sum(star(p, q).expect("same m")),
    }
}

/// `*_i` with the unit rules; `1 *_i 1` is undefined and yields `None`.
pub fn slot_star_i(a: &Slot, i: usize, b: &Slot, m: usize) -> Option<SlotSum> {
    Some(match (a, b) {
        (Slot::Unit, Slot::Unit) => return None,
        (Slot::Path(p), Slot::Path(q)) => slot_sum(star_i(p, i, q).expect("same m")),
        (Slot::Path(_), Slot::Unit) if i == m => SlotSum::single(a.clone()),
        (Slot::Unit, Slot::Path(_)) if i == 0 => SlotSum::single(b.clone()),
        _ => SlotSum::zero(),
    })
}

fn tensor_of(l: &SlotSum, r: &SlotSum) -> TensorSum {
    l.bilinear(r, |a, b| tensor(a.clone(), b.clone()))
}

fn m_of<'a>(keys: impl Iterator<Item = &'a (Slot, Slot)>) -> Option<usize> {
    keys.flat_map(|(a, b)| [a.path(), b.path()]).flatten().map(MDyckPath::m).next()
}

/// `x *_i y` on tensors; terms equal to `1 (x) 1` are inert.
pub fn tensor_star_i(x: &TensorSum, i: usize, y: &TensorSum) -> TensorSum {
    let Some(m) = m_of(x.keys().chain(y.keys())) else { return TensorSum::zero() };
    x.bilinear(y, |(x1, x2), (y1, y2)| {
        let unit = (Slot::Unit, Slot::Unit);
        if (x1, x2) == (&unit.0, &unit.1) || (y1, y2) == (&unit.0, &unit.1) {
            return TensorSum::zero();
        }
        match slot_star_i(x2, i, y2, m) {
            Some(right) => tensor_of(&slot_star(x1, y1), &right),
            None => match slot_star_i(x1, i, y1, m) {
                Some(left) => tensor_of(&left, &SlotSum::single(Slot::Unit)),
                None => TensorSum::zero(),
            },
        }
    })
}

/// Grafting `x_j` on slots: `P x_j 1 = P` iff `j = L(P)`, `1 x_j P = P` iff `j = 0`.
pub fn slot_graft(a: &Slot, j: usize, b: &Slot) -> SlotSum {
    match (a, b) {
        (Slot::Path(p), Slot::Path(q)) => p.graft(j, q).map_or(SlotSum::zero(), |g| SlotSum::single(Slot::Path(g))),
        (Slot::Path(p), Slot::Unit) if j == p.last_level() => SlotSum::single(a.clone()),
        (Slot::Unit, Slot::Path(_)) if j == 0 => SlotSum::single(b.clone()),
        _ => SlotSum::zero(),
    }
}

/// `x x_j y` on tensors: `(P (x) Q) x_j (R (x) S) = (P * R) (x) (Q x_j S)`, and
/// `(P (x) 1) x_j (R (x) 1) = (P x_j R) (x) 1`.
pub fn tensor_graft(x: &TensorSum, j: usize, y: &TensorSum) -> TensorSum {
    x.bilinear(y, |(x1, x2), (y1, y2)| {
        if *x2 == Slot::Unit && *y2 == Slot::Unit {
            tensor_of(&slot_graft(x1, j, y1), &SlotSum::single(Slot::Unit))
        } else {
            tensor_of(&slot_star(x1, y1), &slot_graft(x2, j, y2))
        }
    })
}

/// `(Delta (x) id) Delta` minus `(id (x) Delta) Delta` is zero.
pub fn coassociator(p: &MDyckPath) -> (Tensor3Sum, Tensor3Sum) {
    let d = coproduct(p);
    let left = d.map_linear(|(a, b)| coproduct_slot(a).map_linear(|(a1, a2)| Tensor3Sum::single((a1.clone(), a2.clone(), b.clone()))));
    let right = d.map_linear(|(a, b)| coproduct_slot(b).map_linear(|(b1, b2)| Tensor3Sum::single((a.clone(), b1.clone(), b2.clone()))));
    (left, right)
}

/// Applies the counit on the left or on the right factor.
pub fn counit(x: &TensorSum, on_left: bool) -> SlotSum {
    x.iter()
        .filter(|((a, b), _)| if on_left { *a == Slot::Unit } else { *b == Slot::Unit })
        .map(|((a, b), c)| (if on_left { b.clone() } else { a.clone() }, c))
        .collect()
}

/// The bialgebra compatibility `Delta(P *_i Q) = Delta(P) *_i Delta(Q)`,
/// coassociativity, counit and grading on all paths within the bound.
pub fn check_bialgebra(m: usize, max_total: usize) -> Report {
    let mut report = Report::new(format!("bialgebra m={m} total<={max_total}"));
    let basis = paths_up_to(m, max_total);
    for (sa, a) in &basis {
        let d = coproduct(a);
        report.check(d.keys().all(|(x, y)| x.size() + y.size() == *sa), || format!("grading fails for {a}"));
        let (l, r) = coassociator(a);
        report.check(l == r, || format!("coassociativity fails for {a}"));
        let id = SlotSum::single(Slot::Path(a.clone()));
        report.check(counit(&d, true) == id && counit(&d, false) == id, || format!("counit fails for {a}"));
        for (sb, b) in &basis {
            if sa + sb > max_total {
                continue;
            }
            let db = coproduct(b);
            for i in 0..=m {
                let lhs = coproduct_sum(&star_i(a, i, b).expect("same m"));
                let rhs = tensor_star_i(&d, i, &db);
                report.check(lhs == rhs, || format!("Delta({a} *{i} {b}) != Delta({a}) *{i} Delta({b})"));
            }
        }
    }
    report
}

/// `Delta(P x_0 Q) = Delta(P) x_0 Delta(Q)` for prime `Q`.
pub fn check_graft_compatibility(m: usize, max_total: usize) -> Report {
    let mut report = Report::new(format!("graft compatibility m={m} total<={max_total}"));
    let basis = paths_up_to(m, max_total);
    for (sa, a) in &basis {
        for (sb, b) in &basis {
            if sa + sb > max_total || !b.is_prime() {
                continue;
            }
            let lhs = coproduct(&a.graft(0, b).expect("same m"));
            let rhs = tensor_graft(&coproduct(a), 0, &coproduct(b));
            report.check(lhs == rhs, || format!("Delta({a} x0 {b}) != Delta({a}) x0 Delta({b})"));
        }
    }
    report
}

/// `c_i` and `C_i` are unchanged by collapsing any cutting, for `0 < i < m`.
pub fn check_collapse_bounds(m: usize, max_n: usize) -> Report {
    let mut report = Report::new(format!("collapse bounds m={m} n<={max_n}"));
    for (_, p) in paths_up_to(m, max_n) {
        for cutting in admissible_cuttings(&p) {
            let q = collapse(&p, &cutting).expect("admissible");
            report.check(q.last_level() >= m, || format!("L({p} / cutting) < m"));
            for i in 1..m {
                let before = c_bounds(&p, i).expect("i <= m");
                let after = c_bounds(&q, i).expect("i <= m");
                report.check(before == after, || format!("c_{i}, C_{i} change from {p} to {q}"));
            }
        }
    }
    report
}
