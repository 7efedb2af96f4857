//! Colored planar binary trees and the free Dyck^m algebra they span.
//!
//! A node colored `i` stands for the product `*_i` of its two subtrees.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{block, star_i_sum};
use crate::error::{Error, Result};
use crate::path::{fuss_catalan, MDyckPath};
use crate::report::Report;
use crate::sum::FormalSum;
use crate::PathSum;

/// Default generator label.
pub const GENERATOR: &str = "a";

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ColoredTree {
    Leaf {
        leaf: String,
    },
    Node {
        color: usize,
        left: Box<ColoredTree>,
        right: Box<ColoredTree>,
    },
}

pub type TreeSum = FormalSum<ColoredTree>;

impl fmt::Debug for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoredTree::Leaf { leaf } => write!(f, "{leaf}"),
            ColoredTree::Node { color, left, right } => write!(f, "({left:?} v{color} {right:?})"),
        }
    }
}

impl fmt::Display for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A spine: colors from the root downwards, the side subtrees, and the end leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spine {
    pub colors: Vec<usize>,
    pub subtrees: Vec<ColoredTree>,
    pub end: ColoredTree,
}

impl ColoredTree {
    pub fn leaf() -> Self {
        Self::labeled(GENERATOR)
    }

    pub fn labeled(label: &str) -> Self {
        ColoredTree::Leaf { leaf: label.to_string() }
    }

    pub fn node(color: usize, left: ColoredTree, right: ColoredTree) -> Self {
        ColoredTree::Node { color, left: Box::new(left), right: Box::new(right) }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, ColoredTree::Leaf { .. })
    }

    pub fn color(&self) -> Option<usize> {
        match self {
            ColoredTree::Leaf { .. } => None,
            ColoredTree::Node { color, .. } => Some(*color),
        }
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            ColoredTree::Leaf { .. } => 1,
            ColoredTree::Node { left, right, .. } => left.size() + right.size(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            ColoredTree::Leaf { leaf } => vec![leaf.clone()],
            ColoredTree::Node { left, right, .. } => {
                let mut v = left.labels();
                v.extend(right.labels());
                v
            }
        }
    }

    pub fn max_color(&self) -> Option<usize> {
        match self {
            ColoredTree::Leaf { .. } => None,
            ColoredTree::Node { color, left, right } => {
                Some((*color).max(left.max_color().unwrap_or(0)).max(right.max_color().unwrap_or(0)))
            }
        }
    }

    /// The left spine: `t = Omega^L_{i_1..i_p}(t_1..t_p)`.
    pub fn left_spine(&self) -> Spine {
        let mut colors = Vec::new();
        let mut subtrees = Vec::new();
        let mut cur = self;
        while let ColoredTree::Node { color, left, right } = cur {
            colors.push(*color);
            subtrees.push((**right).clone());
            cur = left;
        }
        Spine { colors, subtrees, end: cur.clone() }
    }

    /// The right spine: `t = Omega^R_{j_1..j_q}(w_1..w_q)`.
    pub fn right_spine(&self) -> Spine {
        let mut colors = Vec::new();
        let mut subtrees = Vec::new();
        let mut cur = self;
        while let ColoredTree::Node { color, left, right } = cur {
            colors.push(*color);
            subtrees.push((**left).clone());
            cur = right;
        }
        Spine { colors, subtrees, end: cur.clone() }
    }

}

/// `Omega^L`: `(((end v_{c_p} t_p) v_{c_{p-1}} t_{p-1}) ...) v_{c_1} t_1`.
pub fn omega_left(colors: &[usize], subtrees: &[ColoredTree], end: ColoredTree) -> ColoredTree {
    colors
        .iter()
        .zip(subtrees)
        .rev()
        .fold(end, |acc, (&c, t)| ColoredTree::node(c, acc, t.clone()))
}

/// `Omega^R`: `w_1 v_{c_1} (w_2 v_{c_2} (... (w_q v_{c_q} end)))`.
pub fn omega_right(colors: &[usize], subtrees: &[ColoredTree], end: ColoredTree) -> ColoredTree {
    colors
        .iter()
        .zip(subtrees)
        .rev()
        .fold(end, |acc, (&c, w)| ColoredTree::node(c, w.clone(), acc))
}

impl Spine {
    pub fn rebuild_left(&self) -> ColoredTree {
        omega_left(&self.colors, &self.subtrees, self.end.clone())
    }

    pub fn rebuild_right(&self) -> ColoredTree {
        omega_right(&self.colors, &self.subtrees, self.end.clone())
    }
}

/// The root condition of `B^{m,k}` at a single vertex.
fn root_ok(t: &ColoredTree, m: usize, k: usize) -> bool {
    let ColoredTree::Node { color, left, right } = t else { return true };
    if *color > m {
        return false;
    }
    if *color != k {
        match left.color() {
            None => true,
            Some(c2) => c2 == k || c2 > *color,
        }
    } else {
        let below_left = left.left_spine().colors.iter().all(|&c| c > k);
        let below_right = right.right_spine().colors.iter().all(|&c| c <= k);
        below_left && below_right
    }
}

/// Membership in `B^{m,k}`; for `k = m` this is condition (C) defining `B^m`.
pub fn in_basis(t: &ColoredTree, m: usize, k: usize) -> bool {
    root_ok(t, m, k)
        && match t {
            ColoredTree::Leaf { .. } => true,
            ColoredTree::Node { left, right, .. } => in_basis(left, m, k) && in_basis(right, m, k),
        }
}

fn shapes(n: usize, m: usize, k: usize, memo: &mut Vec<Option<Vec<ColoredTree>>>) -> Vec<ColoredTree> {
    if let Some(v) = &memo[n] {
        return v.clone();
    }
    let mut out = Vec::new();
    if n == 1 {
        out.push(ColoredTree::leaf());
    } else {
        for a in 1..n {
            let lefts = shapes(a, m, k, memo);
            let rights = shapes(n - a, m, k, memo);
            for l in &lefts {
                for r in &rights {
                    for c in 0..=m {
                        let t = ColoredTree::node(c, l.clone(), r.clone());
                        if root_ok(&t, m, k) {
                            out.push(t);
                        }
                    }
                }
            }
        }
    }
    memo[n] = Some(out.clone());
    out
}

fn relabel(t: &ColoredTree, labels: &mut std::slice::Iter<'_, String>) -> ColoredTree {
    match t {
        ColoredTree::Leaf { .. } => ColoredTree::Leaf { leaf: labels.next().expect("enough labels").clone() },
        ColoredTree::Node { color, left, right } => {
            let l = relabel(left, labels);
            ColoredTree::node(*color, l, relabel(right, labels))
        }
    }
}

/// All trees of `B_n^{m,k}` with leaves labeled over `labels` (the default
/// generator when `labels` is empty).
pub fn enumerate_basis(n: usize, m: usize, k: usize, labels: &[&str]) -> Vec<ColoredTree> {
    assert!(n >= 1 && k <= m);
    let mut memo = vec![None; n + 1];
    let base = shapes(n, m, k, &mut memo);
    if labels.len() <= 1 {
        let label = labels.first().copied().unwrap_or(GENERATOR);
        if label == GENERATOR {
            return base;
        }
        let words = vec![label.to_string(); n];
        return base.iter().map(|t| relabel(t, &mut words.iter())).collect();
    }
    let mut words: Vec<Vec<String>> = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                labels.iter().map(move |l| {
                    let mut w2 = w.clone();
                    w2.push(l.to_string());
                    w2
                })
            })
            .collect();
    }
    base.iter()
        .flat_map(|t| words.iter().map(move |w| relabel(t, &mut w.iter())))
        .collect()
}

/// `t *_i w` for `t, w` in `B^m`, normalized in `B^m`.
pub fn tree_star_i(t: &ColoredTree, i: usize, w: &ColoredTree, m: usize) -> TreeSum {
    match t {
        ColoredTree::Leaf { .. } => TreeSum::single(ColoredTree::node(i, t.clone(), w.clone())),
        ColoredTree::Node { color: j, left, right } => {
            let j = *j;
            if j > i {
                TreeSum::single(ColoredTree::node(i, t.clone(), w.clone()))
            } else if j < i {
                tree_star_i(right, i, w, m).map_linear(|z| tree_star_i(left, j, z, m))
            } else {
                // (x *_i y) *_i z = sum_{k<=i} x *_i (y *_k z) - sum_{k>i} (x *_k y) *_i z
                let mut out = TreeSum::zero();
                for k in 0..=i {
                    let inner = tree_star_i(right, k, w, m);
                    out.add_assign_sum(&inner.map_linear(|z| tree_star_i(left, i, z, m)));
                }
                for k in i + 1..=m {
                    let lr = tree_star_i(left, k, right, m);
                    out.add_scaled(&lr.map_linear(|y| tree_star_i(y, i, w, m)), -1);
                }
                out
            }
        }
    }
}

/// Bilinear extension of [`tree_star_i`].
pub fn tree_star_i_sum(x: &TreeSum, i: usize, y: &TreeSum, m: usize) -> TreeSum {
    x.bilinear(y, |a, b| tree_star_i(a, i, b, m))
}

/// Reads any colored tree as a bracketing of products and normalizes it in `B^m`.
pub fn normalize(t: &ColoredTree, m: usize) -> TreeSum {
    match t {
        ColoredTree::Leaf { .. } => TreeSum::single(t.clone()),
        ColoredTree::Node { color, left, right } => {
            tree_star_i_sum(&normalize(left, m), *color, &normalize(right, m), m)
        }
    }
}

/// The homomorphism sending the generator to `rho_m`.
pub fn eval_paths(t: &ColoredTree, m: usize) -> PathSum {
    match t {
        ColoredTree::Leaf { .. } => PathSum::single(MDyckPath::rho(m)),
        ColoredTree::Node { color, left, right } => {
            star_i_sum(&eval_paths(left, m), *color, &eval_paths(right, m)).expect("colors are at most m")
        }
    }
}

/// Linear extension of [`eval_paths`].
pub fn eval_paths_sum(x: &TreeSum, m: usize) -> PathSum {
    x.map_linear(|t| eval_paths(t, m))
}

fn in_both(t: &ColoredTree, m: usize, k: usize) -> bool {
    in_basis(t, m, m) && in_basis(t, m, k)
}

/// The bijection `B^m -> B^{m,k}` preserving the represented element.
pub fn phi(t: &ColoredTree, m: usize, k: usize) -> Result<ColoredTree> {
    if !in_basis(t, m, m) || k > m {
        return Err(Error::NotInBasis);
    }
    Ok(phi_rec(t, m, k))
}

fn phi_rec(t: &ColoredTree, m: usize, k: usize) -> ColoredTree {
    if in_both(t, m, k) {
        return t.clone();
    }
    let ColoredTree::Node { color, left, right } = t else { return t.clone() };
    if *color != k {
        return ColoredTree::node(*color, phi_rec(left, m, k), phi_rec(right, m, k));
    }
    let spine = right.right_spine();
    match spine.colors.iter().position(|&j| j > k) {
        None => ColoredTree::node(k, phi_rec(left, m, k), phi_rec(right, m, k)),
        Some(s) => {
            let w_s = spine.subtrees[s].left_spine();
            let inner = ColoredTree::node(
                k,
                (**left).clone(),
                omega_right(&spine.colors[..s], &spine.subtrees[..s], w_s.end.clone()),
            );
            let tilde = omega_left(&w_s.colors, &w_s.subtrees, inner);
            let rest = omega_right(&spine.colors[s + 1..], &spine.subtrees[s + 1..], spine.end.clone());
            ColoredTree::node(spine.colors[s], phi_rec(&tilde, m, k), phi_rec(&rest, m, k))
        }
    }
}

/// Inverse of [`phi`].
pub fn phi_inv(t: &ColoredTree, m: usize, k: usize) -> Result<ColoredTree> {
    if k > m || !in_basis(t, m, k) {
        return Err(Error::NotInBasis);
    }
    Ok(phi_inv_rec(t, m, k))
}

fn phi_inv_rec(t: &ColoredTree, m: usize, k: usize) -> ColoredTree {
    if in_both(t, m, k) {
        return t.clone();
    }
    let ColoredTree::Node { color, left, right } = t else { return t.clone() };
    if *color <= k {
        return ColoredTree::node(*color, phi_inv_rec(left, m, k), phi_inv_rec(right, m, k));
    }
    let spine = t.left_spine();
    match spine.colors.iter().position(|&c| c == k) {
        None => ColoredTree::node(*color, phi_inv_rec(left, m, k), phi_inv_rec(right, m, k)),
        Some(h) => {
            let lower = omega_left(&spine.colors[h + 1..], &spine.subtrees[h + 1..], spine.end.clone());
            let t_h = spine.subtrees[h].right_spine();
            let upper = omega_left(&spine.colors[..h], &spine.subtrees[..h], t_h.end.clone());
            let ws: Vec<ColoredTree> = t_h.subtrees.iter().map(|w| phi_inv_rec(w, m, k)).collect();
            ColoredTree::node(
                k,
                phi_inv_rec(&lower, m, k),
                omega_right(&t_h.colors, &ws, phi_inv_rec(&upper, m, k)),
            )
        }
    }
}

/// `A_n^{m,k}`: trees of `B_n^{m,k}` that are a leaf or have root colored `k`.
pub fn generators_amk(n: usize, m: usize, k: usize) -> Vec<ColoredTree> {
    enumerate_basis(n, m, k, &[])
        .into_iter()
        .filter(|t| n == 1 || t.color() == Some(k))
        .collect()
}

/// The bijection `B_{n-1}^{m,k} -> A_n^{m,k}`; the new leaf carries the default generator.
pub fn theta(t: &ColoredTree, m: usize, k: usize) -> Result<ColoredTree> {
    if k > m || !in_basis(t, m, k) {
        return Err(Error::NotInBasis);
    }
    let fresh = ColoredTree::leaf();
    let Some(h) = t.color() else {
        return Ok(ColoredTree::node(k, t.clone(), fresh));
    };
    if h > k {
        let spine = t.left_spine();
        Ok(match spine.colors.iter().position(|&c| c == k) {
            None => ColoredTree::node(k, t.clone(), fresh),
            Some(s) => ColoredTree::node(
                k,
                omega_left(&spine.colors[..s], &spine.subtrees[..s], fresh),
                omega_left(&spine.colors[s..], &spine.subtrees[s..], spine.end.clone()),
            ),
        })
    } else {
        let spine = t.right_spine();
        Ok(match spine.colors.iter().skip(1).position(|&j| j > k) {
            None => ColoredTree::node(k, fresh, t.clone()),
            Some(s0) => {
                let s = s0 + 1;
                let upper = omega_right(&spine.colors[s..], &spine.subtrees[s..], spine.end.clone());
                let left = upper.left_spine();
                match left.colors.iter().position(|&c| c == k) {
                    None => ColoredTree::node(k, upper, omega_right(&spine.colors[..s], &spine.subtrees[..s], fresh)),
                    // the k-rooted part of the left spine moves to the end of the right factor
                    Some(r) => ColoredTree::node(
                        k,
                        omega_left(&left.colors[..r], &left.subtrees[..r], fresh),
                        omega_right(
                            &spine.colors[..s],
                            &spine.subtrees[..s],
                            omega_left(&left.colors[r..], &left.subtrees[r..], left.end.clone()),
                        ),
                    ),
                }
            }
        })
    }
}

fn replace_leftmost(t: &ColoredTree, by: ColoredTree) -> ColoredTree {
    let spine = t.left_spine();
    omega_left(&spine.colors, &spine.subtrees, by)
}

fn replace_rightmost(t: &ColoredTree, by: ColoredTree) -> ColoredTree {
    let spine = t.right_spine();
    omega_right(&spine.colors, &spine.subtrees, by)
}

/// Inverse of [`theta`].
pub fn theta_inv(u: &ColoredTree, m: usize, k: usize) -> Result<ColoredTree> {
    let ColoredTree::Node { color, left, right } = u else { return Err(Error::NotInBasis) };
    if *color != k || !in_basis(u, m, k) {
        return Err(Error::NotInBasis);
    }
    Ok(match (left.is_leaf(), right.is_leaf()) {
        (_, true) => (**left).clone(),
        (true, false) => (**right).clone(),
        _ if right.color() == Some(k) => replace_leftmost(left, (**right).clone()),
        _ => {
            let spine = right.right_spine();
            match spine.colors.iter().position(|&c| c == k) {
                None => replace_rightmost(right, (**left).clone()),
                Some(r) => {
                    let lower = omega_right(&spine.colors[r..], &spine.subtrees[r..], spine.end.clone());
                    let upper = replace_leftmost(left, lower);
                    omega_right(&spine.colors[..r], &spine.subtrees[..r], upper)
                }
            }
        }
    })
}

fn tree_vector(x: &PathSum, paths: &[MDyckPath]) -> Vec<i64> {
    paths.iter().map(|p| x.coeff(p)).collect()
}

/// Dimension counts, `phi` and `theta` bijections, evaluation invariance and
/// full rank of evaluation, for trees with at most `max_n` leaves.
pub fn check_bases(m: usize, max_n: usize, rank_n: usize) -> Report {
    let mut report = Report::new(format!("bases m={m} n<={max_n}"));
    for n in 1..=max_n {
        let bm = enumerate_basis(n, m, m, &[]);
        for k in 0..=m {
            let bk = enumerate_basis(n, m, k, &[]);
            report.check(bk.len() as u64 == fuss_catalan(m, n), || {
                format!("|B_{n}^({m},{k})| = {} != {}", bk.len(), fuss_catalan(m, n))
            });
            let amk = generators_amk(n, m, k);
            report.check(amk.len() as u64 == fuss_catalan(m, n - 1), || {
                format!("|A_{n}^({m},{k})| = {}", amk.len())
            });
            let mut images = Vec::new();
            for t in &bm {
                let Ok(f) = phi(t, m, k) else {
                    report.check(false, || format!("phi failed on {t}"));
                    continue;
                };
                report.check(in_basis(&f, m, k), || format!("phi({t}) = {f} is not in B^({m},{k})"));
                report.check(phi_inv(&f, m, k).as_ref() == Ok(t), || format!("phi_inv(phi({t})) != {t}"));
                report.check(eval_paths(&f, m) == eval_paths(t, m), || format!("eval changes under phi at {t}"));
                if in_basis(t, m, k) {
                    report.check(&f == t, || format!("phi moves {t} in the intersection"));
                }
                images.push(f);
            }
            images.sort();
            images.dedup();
            report.check(images.len() == bk.len(), || format!("phi is not onto B_{n}^({m},{k})"));
            for s in &bk {
                let back = phi_inv(s, m, k).and_then(|t| phi(&t, m, k));
                report.check(back.as_ref() == Ok(s), || format!("phi(phi_inv({s})) != {s}"));
            }
            if n >= 2 {
                let prev = enumerate_basis(n - 1, m, k, &[]);
                let mut thetas = Vec::new();
                for t in &prev {
                    match theta(t, m, k) {
                        Ok(u) => {
                            report.check(amk.contains(&u), || format!("theta({t}) = {u} is not in A_{n}"));
                            report.check(theta_inv(&u, m, k).as_ref() == Ok(t), || {
                                format!("theta_inv(theta({t})) != {t}")
                            });
                            thetas.push(u);
                        }
                        Err(_) => report.check(false, || format!("theta failed on {t}")),
                    }
                }
                thetas.sort();
                thetas.dedup();
                report.check(thetas.len() == amk.len(), || format!("theta is not onto A_{n}"));
            }
        }
        if n <= rank_n {
            let paths = crate::path::enumerate(m, n).expect("m >= 1");
            let rows: Vec<Vec<i64>> = bm.iter().map(|t| tree_vector(&eval_paths(t, m), &paths)).collect();
            let r = crate::linalg::rank(&rows);
            report.check(r == paths.len(), || format!("evaluation rank {r} at n={n}"));
        }
    }
    report
}

/// Every `B_n^{m,k}` tree lies in the Dyck^{m-1} algebra generated by
/// `A^{m,k}` under the products coarsened at `k`, for `n <= max_n`.
pub fn check_generation(m: usize, k: usize, max_n: usize) -> Report {
    let mut report = Report::new(format!("generation m={m} k={k} n<={max_n}"));
    assert!(k < m);
    let mut r = vec![1; m];
    r[k] = 2;
    // spanning vectors, by degree, in path coordinates
    let mut span: Vec<Vec<PathSum>> = vec![Vec::new(); max_n + 1];
    for n in 1..=max_n {
        let paths = crate::path::enumerate(m, n).expect("m >= 1");
        let mut vecs: Vec<PathSum> = generators_amk(n, m, k).iter().map(|t| eval_paths(t, m)).collect();
        for a in 1..n {
            for x in &span[a] {
                for y in &span[n - a] {
                    for i in 0..m {
                        let mut z = PathSum::zero();
                        for j in block(&r, i) {
                            z.add_assign_sum(&star_i_sum(x, j, y).expect("valid"));
                        }
                        vecs.push(z);
                    }
                }
            }
        }
        let rows: Vec<Vec<i64>> = vecs.iter().map(|v| tree_vector(v, &paths)).collect();
        let base_rank = crate::linalg::rank(&rows);
        for t in enumerate_basis(n, m, k, &[]) {
            let mut with = rows.clone();
            with.push(tree_vector(&eval_paths(&t, m), &paths));
            report.check(crate::linalg::rank(&with) == base_rank, || format!("{t} is not generated"));
        }
        report.check(base_rank == paths.len(), || format!("span has rank {base_rank} at n={n}"));
        // keep a basis-sized subset to bound the next degrees
        span[n] = independent_subset(&vecs, &paths);
    }
    report
}

fn independent_subset(vecs: &[PathSum], paths: &[MDyckPath]) -> Vec<PathSum> {
    let mut chosen: Vec<PathSum> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for v in vecs {
        let mut trial = rows.clone();
        trial.push(tree_vector(v, paths));
        if crate::linalg::rank(&trial) == trial.len() {
            rows = trial;
            chosen.push(v.clone());
            if rows.len() == paths.len() {
                break;
            }
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_dyck_relations;

    fn l() -> ColoredTree {
        ColoredTree::leaf()
    }

    fn n(c: usize, a: ColoredTree, b: ColoredTree) -> ColoredTree {
        ColoredTree::node(c, a, b)
    }

    #[test]
    fn basis_membership_examples() {
        assert!(in_basis(&l(), 2, 0));
        assert!(in_basis(&n(1, n(2, l(), l()), l()), 2, 2));
        assert!(!in_basis(&n(2, n(0, l(), l()), l()), 3, 3));
        assert!(!in_basis(&n(2, n(1, l(), l()), l()), 2, 2));
    }

    #[test]
    fn basis_counts() {
        for m in 1..=2 {
            assert_eq!(enumerate_basis(2, m, 0, &[]).len(), m + 1);
        }
        assert_eq!(enumerate_basis(3, 2, 2, &[]).len(), 12);
        assert_eq!(enumerate_basis(4, 2, 0, &[]).len(), 55);
        assert_eq!(enumerate_basis(2, 1, 1, &["a", "b"]).len(), 8);
    }

    #[test]
    fn product_examples() {
        assert_eq!(tree_star_i(&l(), 1, &l(), 2), TreeSum::single(n(1, l(), l())));
        assert_eq!(tree_star_i(&n(2, l(), l()), 1, &l(), 2), TreeSum::single(n(1, n(2, l(), l()), l())));
        let expect = TreeSum::single(n(0, l(), n(0, l(), l()))).minus(&TreeSum::single(n(0, n(1, l(), l()), l())));
        assert_eq!(tree_star_i(&n(0, l(), l()), 0, &l(), 1), expect);
    }

    #[test]
    fn products_stay_in_basis_and_evaluate() {
        for m in 1..=2 {
            for a in 1..=3 {
                for b in 1..=(4 - a) {
                    for t in enumerate_basis(a, m, m, &[]) {
                        for w in enumerate_basis(b, m, m, &[]) {
                            for i in 0..=m {
                                let prod = tree_star_i(&t, i, &w, m);
                                assert!(prod.keys().all(|x| in_basis(x, m, m)));
                                let lhs = eval_paths_sum(&prod, m);
                                let rhs = star_i_sum(&eval_paths(&t, m), i, &eval_paths(&w, m)).unwrap();
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tree_products_satisfy_relations() {
        for m in 1..=2 {
            let basis: Vec<(usize, ColoredTree)> = (1..=2)
                .flat_map(|s| enumerate_basis(s, m, m, &[]).into_iter().map(move |t| (s, t)))
                .collect();
            let rep = check_dyck_relations("trees", m, &basis, 4, |x, i, y| tree_star_i_sum(x, i, y, m));
            assert!(rep.is_ok(), "{rep}");
        }
    }

    #[test]
    fn labels_are_kept_in_order() {
        let a = ColoredTree::labeled("a");
        let b = ColoredTree::labeled("b");
        let c = ColoredTree::labeled("c");
        let prod = tree_star_i_sum(&tree_star_i(&a, 0, &b, 1), 0, &TreeSum::single(c), 1);
        for t in prod.keys() {
            assert_eq!(t.labels(), vec!["a", "b", "c"]);
        }
    }

    #[test]
    fn spines_round_trip() {
        for t in enumerate_basis(4, 2, 1, &[]) {
            let ls = t.left_spine();
            let rs = t.right_spine();
            assert_eq!(ls.rebuild_left(), t);
            assert_eq!(rs.rebuild_right(), t);
            assert_eq!(ls.colors.first(), rs.colors.first());
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_paths(&l(), 2), PathSum::single(MDyckPath::rho(2)));
        let r = MDyckPath::rho(2);
        assert_eq!(eval_paths(&n(0, l(), l()), 2), PathSum::single(r.graft(0, &r).unwrap()));
        let paths = crate::path::enumerate(2, 3).unwrap();
        let rows: Vec<Vec<i64>> =
            enumerate_basis(3, 2, 2, &[]).iter().map(|t| tree_vector(&eval_paths(t, 2), &paths)).collect();
        assert_eq!(crate::linalg::rank(&rows), 12);
    }

    #[test]
    fn normalize_matches_eval() {
        for t in enumerate_basis(4, 2, 0, &[]) {
            assert_eq!(eval_paths_sum(&normalize(&t, 2), 2), eval_paths(&t, 2));
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&l(), 2, 1).unwrap(), n(1, l(), l()));
        assert_eq!(generators_amk(2, 2, 1).len(), 1);
        assert_eq!(generators_amk(4, 2, 1).len(), 12);
        let prev = enumerate_basis(3, 2, 1, &[]);
        let mut imgs: Vec<_> = prev.iter().map(|t| theta(t, 2, 1).unwrap()).collect();
        for (t, u) in prev.iter().zip(&imgs) {
            assert_eq!(&theta_inv(u, 2, 1).unwrap(), t);
        }
        imgs.sort();
        imgs.dedup();
        assert_eq!(imgs.len(), 12);
    }

    #[test]
    fn theta_moves_k_subtree_to_right_factor() {
        // left factor of the right-spine split would start a1 on its left spine
        let t = n(0, l(), n(2, n(1, l(), l()), l()));
        let u = theta(&t, 2, 1).unwrap();
        assert_eq!(u, n(1, n(2, l(), l()), n(0, l(), n(1, l(), l()))));
        assert!(generators_amk(5, 2, 1).contains(&u));
        assert_eq!(theta_inv(&u, 2, 1).unwrap(), t);
    }

    #[test]
    fn theta_bijective_up_to_six() {
        for k in 0..=2 {
            let mut imgs = Vec::new();
            for t in enumerate_basis(5, 2, k, &[]) {
                let u = theta(&t, 2, k).unwrap();
                assert!(in_basis(&u, 2, k) && u.color() == Some(k), "{t} -> {u}");
                assert_eq!(theta_inv(&u, 2, k).unwrap(), t);
                imgs.push(u);
            }
            imgs.sort();
            imgs.dedup();
            assert_eq!(imgs.len(), generators_amk(6, 2, k).len());
        }
    }

    #[test]
    fn bases_small() {
        let rep = check_bases(2, 4, 3);
        assert!(rep.is_ok(), "{rep}");
    }

    #[test]
    fn generation_small() {
        for k in 0..2 {
            let rep = check_generation(2, k, 3);
            assert!(rep.is_ok(), "{rep}");
        }
    }
}
