//! m-Dyck paths in level notation.
//!
//! A path of size `n` is stored as its level sequence `(L_1, ..., L_n)`: the
//! `k`-th up step is followed by `L_k` down steps. Up steps rise by `m` and
//! down steps fall by one.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single step of the step word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

/// An m-Dyck path. Construction always validates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct MDyckPath {
    m: usize,
    levels: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPath {
    m: usize,
    levels: Vec<usize>,
}

impl TryFrom<RawPath> for MDyckPath {
    type Error = Error;
    fn try_from(raw: RawPath) -> Result<Self> {
        MDyckPath::new(raw.m, raw.levels)
    }
}

impl Ord for MDyckPath {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then(self.levels.len().cmp(&other.levels.len()))
            .then_with(|| self.levels.cmp(&other.levels))
    }
}

impl PartialOrd for MDyckPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

impl fmt::Debug for MDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Checks the prefix and total conditions on a level sequence.
///
/// Errors name the first offending (1-based) index.
pub fn validate(m: usize, levels: &[usize]) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidM);
    }
    let n = levels.len();
    let mut sum = 0;
    for (j, l) in levels.iter().enumerate() {
        sum += l;
        let bound = m * (j + 1);
        if j + 1 < n && sum > bound {
            return Err(Error::PrefixViolation { index: j + 1, sum, bound });
        }
    }
    if sum != m * n {
        return Err(Error::WrongTotal { sum, expected: m * n });
    }
    Ok(())
}

/// Number of m-Dyck paths of size `n`: `binom((m+1)n, n) / (mn+1)`.
///
/// `m = 0` is accepted and gives 1 for every `n`.
pub fn fuss_catalan(m: usize, n: usize) -> u64 {
    let total = ((m + 1) * n) as u128;
    let mut binom: u128 = 1;
    for k in 0..n as u128 {
        binom = binom
            .checked_mul(total - k)
            .expect("fuss-catalan overflow")
            / (k + 1);
    }
    u64::try_from(binom / (m * n + 1) as u128).expect("fuss-catalan overflow")
}

/// All m-Dyck paths of size `n` in lexicographic order of their levels.
pub fn enumerate(m: usize, n: usize) -> Result<Vec<MDyckPath>> {
    if m == 0 {
        return Err(Error::InvalidM);
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut current = Vec::with_capacity(n);
    fill(m, n, 0, &mut current, &mut out);
    Ok(out)
}

fn fill(m: usize, n: usize, sum: usize, current: &mut Vec<usize>, out: &mut Vec<MDyckPath>) {
    let j = current.len() + 1;
    if j == n {
        current.push(m * n - sum);
        out.push(MDyckPath { m, levels: current.clone() });
        current.pop();
        return;
    }
    for l in 0..=(m * j - sum) {
        current.push(l);
        fill(m, n, sum + l, current, out);
        current.pop();
    }
}

/// Which wedge decomposition to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WedgeMode {
    /// `P = (((rho x_m P_0) x_{m-1} P_1) ...) x_0 P_m`.
    Down,
    /// `P = P'_0 x_0 (((rho x_m P'_1) x_{m-1} P'_2) ... x_2 P'_{m-1}) x_1 P'_m`.
    Up,
}

/// The standard coloring of the down steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// Color of each down step, in left to right order.
    pub colors: Vec<usize>,
    levels: Vec<usize>,
}

impl Coloring {
    /// Colors of the down steps of level `k` (1-based), left to right.
    pub fn omega(&self, k: usize) -> Vec<usize> {
        assert!(k >= 1 && k <= self.levels.len(), "level {k} out of range");
        let start: usize = self.levels[..k - 1].iter().sum();
        self.colors[start..start + self.levels[k - 1]].to_vec()
    }

    /// Colors of the last level.
    pub fn last_omega(&self) -> Vec<usize> {
        self.omega(self.levels.len())
    }
}

impl MDyckPath {
    pub fn new(m: usize, levels: Vec<usize>) -> Result<Self> {
        validate(m, &levels)?;
        Ok(MDyckPath { m, levels })
    }

    /// The path of size one, `rho_m = (m)`.
    pub fn rho(m: usize) -> Self {
        assert!(m >= 1, "m must be at least 1");
        MDyckPath { m, levels: vec![m] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn size(&self) -> usize {
        self.levels.len()
    }

    /// The last level `L(P)`.
    pub fn last_level(&self) -> usize {
        *self.levels.last().expect("paths are nonempty")
    }

    /// Comma separated levels, e.g. `1,3`.
    pub fn label(&self) -> String {
        self.levels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn steps(&self) -> Vec<Step> {
        let mut out = Vec::with_capacity(self.levels.len() * (self.m + 1));
        for &l in &self.levels {
            out.push(Step::Up);
            out.extend(std::iter::repeat_n(Step::Down, l));
        }
        out
    }

    /// Rebuilds a path from a step word.
    pub fn from_steps(m: usize, steps: &[Step]) -> Result<Self> {
        let mut levels = Vec::new();
        for s in steps {
            match s {
                Step::Up => levels.push(0),
                Step::Down => match levels.last_mut() {
                    Some(l) => *l += 1,
                    None => return Err(Error::Invalid("step word starts with a down step".into())),
                },
            }
        }
        MDyckPath::new(m, levels)
    }

    /// Height before each step, followed by the final height.
    pub fn heights(&self) -> Vec<usize> {
        heights(self.m, &self.steps())
    }

    /// Total number of down steps.
    pub fn down_count(&self) -> usize {
        self.m * self.levels.len()
    }

    /// Level (1-based) and position within that level of the `g`-th down step.
    pub fn down_address(&self, g: usize) -> Option<(usize, usize)> {
        let mut start = 0;
        for (k, &l) in self.levels.iter().enumerate() {
            if g < start + l {
                return Some((k + 1, g - start));
            }
            start += l;
        }
        None
    }

    fn check_same_m(&self, other: &MDyckPath) -> Result<()> {
        if self.m != other.m {
            return Err(Error::MismatchedM { left: self.m, right: other.m });
        }
        Ok(())
    }

    /// Grafting `P x_i Q`: `Q` is inserted before the last `i` down steps of `P`.
    pub fn graft(&self, i: usize, q: &MDyckPath) -> Result<MDyckPath> {
        self.check_same_m(q)?;
        let last = self.last_level();
        if i > last {
            return Err(Error::GraftOutOfRange { index: i, last });
        }
        let mut levels = self.levels.clone();
        *levels.last_mut().unwrap() -= i;
        levels.extend_from_slice(&q.levels);
        *levels.last_mut().unwrap() += i;
        Ok(MDyckPath { m: self.m, levels })
    }

    /// Splits the path at every return to the baseline.
    pub fn prime_factors(&self) -> Vec<MDyckPath> {
        let mut out = Vec::new();
        let mut start = 0;
        let mut sum = 0;
        for (j, l) in self.levels.iter().enumerate() {
            sum += l;
            if sum == self.m * (j + 1) {
                out.push(MDyckPath { m: self.m, levels: self.levels[start..=j].to_vec() });
                start = j + 1;
            }
        }
        out
    }

    pub fn is_prime(&self) -> bool {
        self.prime_factors().len() == 1
    }

    /// Concatenation, that is `self x_0 other`.
    pub fn concat(&self, other: &MDyckPath) -> Result<MDyckPath> {
        self.graft(0, other)
    }

    /// The wedge decomposition in the requested mode; `None` stands for the point.
    pub fn wedge_decompose(&self, mode: WedgeMode) -> Vec<Option<MDyckPath>> {
        match mode {
            WedgeMode::Down => {
                let parts = down_split(self.m, &self.steps());
                parts.into_iter().map(|p| self.piece(p)).collect()
            }
            WedgeMode::Up => {
                let factors = self.prime_factors();
                let (last, rest) = factors.split_last().expect("paths are nonempty");
                let head = rest
                    .iter()
                    .cloned()
                    .reduce(|a, b| a.concat(&b).expect("same m"));
                let mut out = vec![head];
                let inner = down_split(self.m, &last.steps());
                out.extend(inner.into_iter().take(self.m).map(|p| self.piece(p)));
                out
            }
        }
    }

    fn piece(&self, steps: Vec<Step>) -> Option<MDyckPath> {
        if steps.is_empty() {
            None
        } else {
            Some(MDyckPath::from_steps(self.m, &steps).expect("decomposition pieces are paths"))
        }
    }

    /// The standard coloring, computed from the down wedge decomposition.
    pub fn standard_coloring(&self) -> Coloring {
        Coloring {
            colors: color_steps(self.m, &self.steps()),
            levels: self.levels.clone(),
        }
    }
}

/// Inverse of [`MDyckPath::wedge_decompose`].
pub fn wedge_compose(m: usize, mode: WedgeMode, entries: &[Option<MDyckPath>]) -> Result<MDyckPath> {
    if m == 0 {
        return Err(Error::InvalidM);
    }
    if entries.len() != m + 1 {
        return Err(Error::WrongArity { expected: m + 1, got: entries.len() });
    }
    for e in entries.iter().flatten() {
        if e.m != m {
            return Err(Error::MismatchedM { left: m, right: e.m });
        }
    }
    let push = |out: &mut Vec<Step>, e: &Option<MDyckPath>| {
        if let Some(p) = e {
            out.extend(p.steps());
        }
    };
    let mut steps = Vec::new();
    match mode {
        WedgeMode::Down => {
            steps.push(Step::Up);
            push(&mut steps, &entries[0]);
            for e in &entries[1..] {
                steps.push(Step::Down);
                push(&mut steps, e);
            }
        }
        WedgeMode::Up => {
            push(&mut steps, &entries[0]);
            steps.push(Step::Up);
            for e in &entries[1..] {
                push(&mut steps, e);
                steps.push(Step::Down);
            }
        }
    }
    MDyckPath::from_steps(m, &steps)
}

pub(crate) fn heights(m: usize, steps: &[Step]) -> Vec<usize> {
    let mut h = 0usize;
    let mut out = Vec::with_capacity(steps.len() + 1);
    for s in steps {
        out.push(h);
        match s {
            Step::Up => h += m,
            Step::Down => h -= 1,
        }
    }
    out.push(h);
    out
}

/// Splits `U P_0 D P_1 D ... D P_m` into `[P_0, ..., P_m]` (empty for the point).
fn down_split(m: usize, steps: &[Step]) -> Vec<Vec<Step>> {
    debug_assert_eq!(steps.first(), Some(&Step::Up));
    let mut out = Vec::with_capacity(m + 1);
    let mut h = m;
    let mut pos = 1;
    for j in 0..m {
        let start = pos;
        while !(steps[pos] == Step::Down && h == m - j) {
            match steps[pos] {
                Step::Up => h += m,
                Step::Down => h -= 1,
            }
            pos += 1;
        }
        out.push(steps[start..pos].to_vec());
        pos += 1;
        h -= 1;
    }
    out.push(steps[pos..].to_vec());
    out
}

fn color_steps(m: usize, steps: &[Step]) -> Vec<usize> {
    if steps.is_empty() {
        return Vec::new();
    }
    let parts = down_split(m, steps);
    let mut colors = Vec::new();
    let mut offset = 1;
    for (j, part) in parts.iter().enumerate() {
        colors.extend(color_steps(m, part).into_iter().map(|c| c + offset));
        offset += part.iter().filter(|s| **s == Step::Up).count();
        if j < m {
            colors.push(1);
        }
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, l: &[usize]) -> MDyckPath {
        MDyckPath::new(m, l.to_vec()).unwrap()
    }

    /// Half-line rule: a down step starting at height h gets the rank of the
    /// last earlier up step starting strictly below h.
    fn geometric_coloring(path: &MDyckPath) -> Vec<usize> {
        let steps = path.steps();
        let hs = path.heights();
        let mut ups: Vec<(usize, usize)> = Vec::new();
        let mut colors = Vec::new();
        for (pos, s) in steps.iter().enumerate() {
            match s {
                Step::Up => ups.push((ups.len() + 1, hs[pos])),
                Step::Down => {
                    let rank = ups.iter().rev().find(|(_, start)| *start < hs[pos]).unwrap().0;
                    colors.push(rank);
                }
            }
        }
        colors
    }

    #[test]
    fn validation_errors_name_index() {
        assert_eq!(
            validate(2, &[3, 1]),
            Err(Error::PrefixViolation { index: 1, sum: 3, bound: 2 })
        );
        assert_eq!(validate(2, &[1, 2]), Err(Error::WrongTotal { sum: 3, expected: 4 }));
        assert!(validate(2, &[0, 4]).is_ok());
        assert_eq!(validate(0, &[]), Err(Error::InvalidM));
    }

    #[test]
    fn enumerate_small() {
        let got: Vec<Vec<usize>> = enumerate(2, 2).unwrap().iter().map(|p| p.levels.clone()).collect();
        assert_eq!(got, vec![vec![0, 4], vec![1, 3], vec![2, 2]]);
        assert!(enumerate(2, 0).unwrap().is_empty());
    }

    #[test]
    fn enumerate_matches_fuss_catalan() {
        for m in 1..=3 {
            for n in 1..=6 {
                let all = enumerate(m, n).unwrap();
                assert_eq!(all.len() as u64, fuss_catalan(m, n), "m={m} n={n}");
                assert!(all.windows(2).all(|w| w[0].levels < w[1].levels));
            }
        }
    }

    #[test]
    fn graft_examples() {
        let r = MDyckPath::rho(2);
        assert_eq!(r.graft(1, &r).unwrap(), p(2, &[1, 3]));
        assert_eq!(r.graft(2, &r).unwrap(), p(2, &[0, 4]));
        assert_eq!(r.graft(0, &r).unwrap(), p(2, &[2, 2]));
        assert!(r.graft(3, &r).is_err());
    }

    #[test]
    fn prime_factor_example() {
        let f = p(2, &[0, 2, 4, 2]).prime_factors();
        assert_eq!(f, vec![p(2, &[0, 2, 4]), p(2, &[2])]);
    }

    #[test]
    fn wedge_examples() {
        let d = p(2, &[2, 2]).wedge_decompose(WedgeMode::Down);
        assert_eq!(d, vec![None, None, Some(MDyckPath::rho(2))]);
        let u = p(2, &[1, 3]).wedge_decompose(WedgeMode::Up);
        assert_eq!(u, vec![None, None, Some(MDyckPath::rho(2))]);
    }

    #[test]
    fn wedge_round_trip_and_primality() {
        for m in 1..=3 {
            for n in 1..=5 {
                for path in enumerate(m, n).unwrap() {
                    for mode in [WedgeMode::Down, WedgeMode::Up] {
                        let parts = path.wedge_decompose(mode);
                        assert_eq!(wedge_compose(m, mode, &parts).unwrap(), path);
                        let prime_flag = match mode {
                            WedgeMode::Down => parts[m].is_none(),
                            WedgeMode::Up => parts[0].is_none(),
                        };
                        assert_eq!(prime_flag, path.is_prime());
                    }
                }
            }
        }
    }

    #[test]
    fn coloring_examples() {
        assert_eq!(p(2, &[1, 3]).standard_coloring().omega(2), vec![2, 2, 1]);
        let c = p(2, &[0, 2, 0, 5, 0, 5]).standard_coloring();
        assert_eq!(c.omega(2), vec![2, 2]);
        assert_eq!(c.omega(4), vec![4, 4, 3, 3, 1]);
        assert_eq!(c.omega(6), vec![6, 6, 5, 5, 1]);
    }

    #[test]
    fn coloring_agrees_with_half_line_rule() {
        for m in 1..=3 {
            for n in 1..=5 {
                for path in enumerate(m, n).unwrap() {
                    let c = path.standard_coloring();
                    assert_eq!(c.colors, geometric_coloring(&path), "{path}");
                    for k in 1..=n {
                        let w = c.omega(k);
                        assert!(w.windows(2).all(|x| x[0] >= x[1]));
                    }
                    let last = c.last_omega();
                    assert!(last[..m].iter().all(|&x| x == n));
                    for color in 1..=n {
                        assert_eq!(c.colors.iter().filter(|&&x| x == color).count(), m);
                    }
                }
            }
        }
    }

    #[test]
    fn grafting_shifts_colors() {
        for m in 1..=2 {
            for a in enumerate(m, 2).unwrap() {
                for b in enumerate(m, 2).unwrap() {
                    for i in 0..=a.last_level() {
                        let g = a.graft(i, &b).unwrap();
                        let cg = g.standard_coloring().colors;
                        let ca = a.standard_coloring().colors;
                        let cb = b.standard_coloring().colors;
                        let cut = ca.len() - i;
                        let mut expect = ca[..cut].to_vec();
                        expect.extend(cb.iter().map(|&c| c + a.size()));
                        expect.extend_from_slice(&ca[cut..]);
                        assert_eq!(cg, expect);
                    }
                }
            }
        }
    }

    #[test]
    fn serde_round_trip_validates() {
        let q = p(2, &[1, 3]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"m":2,"levels":[1,3]}"#);
        assert_eq!(serde_json::from_str::<MDyckPath>(&s).unwrap(), q);
        assert!(serde_json::from_str::<MDyckPath>(r#"{"m":2,"levels":[3,1]}"#).is_err());
    }
}
