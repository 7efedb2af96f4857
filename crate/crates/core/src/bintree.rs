//! Planar binary trees and the bijection with Dyck paths (case `m = 1`).

use std::collections::BTreeSet;
use std::fmt;

use crate::path::{enumerate, wedge_compose, MDyckPath, WedgeMode};
use crate::report::Report;
use crate::tamari::covers;

/// A planar binary tree; the size is the number of internal nodes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "|"),
            BinaryTree::Node(l, r) => write!(f, "({l:?} v {r:?})"),
        }
    }
}

impl BinaryTree {
    pub fn node(l: BinaryTree, r: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(l), Box::new(r))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// `t / w`: the root of `t` replaces the first leaf of `w`.
    pub fn over(&self, w: &BinaryTree) -> BinaryTree {
        match w {
            BinaryTree::Leaf => self.clone(),
            BinaryTree::Node(l, r) => BinaryTree::node(self.over(l), (**r).clone()),
        }
    }

    /// `t \ w`: the root of `w` replaces the last leaf of `t`.
    pub fn under(&self, w: &BinaryTree) -> BinaryTree {
        match self {
            BinaryTree::Leaf => w.clone(),
            BinaryTree::Node(l, r) => BinaryTree::node((**l).clone(), r.under(w)),
        }
    }

    /// All trees with `n` internal nodes.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        if n == 0 {
            return vec![BinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in BinaryTree::all(k) {
                for r in BinaryTree::all(n - 1 - k) {
                    out.push(BinaryTree::node(l.clone(), r));
                }
            }
        }
        out
    }

    /// Trees obtained by one rotation `(a v b) v c -> a v (b v c)` anywhere.
    pub fn rotations(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(l, r) = self {
            if let BinaryTree::Node(a, b) = &**l {
                out.push(BinaryTree::node((**a).clone(), BinaryTree::node((**b).clone(), (**r).clone())));
            }
            for l2 in l.rotations() {
                out.push(BinaryTree::node(l2, (**r).clone()));
            }
            for r2 in r.rotations() {
                out.push(BinaryTree::node((**l).clone(), r2));
            }
        }
        out
    }
}

/// `Gamma`: prime factors map to `| v Gamma(P')` and concatenation maps to `/`.
pub fn gamma(p: &MDyckPath) -> BinaryTree {
    assert_eq!(p.m(), 1, "gamma is defined for m = 1");
    p.prime_factors().iter().fold(BinaryTree::Leaf, |acc, f| {
        let inner = f.wedge_decompose(WedgeMode::Down)[0].clone();
        let t = BinaryTree::node(BinaryTree::Leaf, gamma_opt(inner.as_ref()));
        acc.over(&t)
    })
}

fn gamma_opt(p: Option<&MDyckPath>) -> BinaryTree {
    p.map_or(BinaryTree::Leaf, gamma)
}

/// Inverse of [`gamma`] via the up wedge decomposition; `None` for the leaf.
pub fn gamma_inv(t: &BinaryTree) -> Option<MDyckPath> {
    match t {
        BinaryTree::Leaf => None,
        BinaryTree::Node(l, r) => {
            Some(wedge_compose(1, WedgeMode::Up, &[gamma_inv(l), gamma_inv(r)]).expect("valid wedge"))
        }
    }
}

/// `Gamma` is a bijection carrying path covers onto tree rotations.
pub fn check_gamma(max_n: usize) -> Report {
    let mut report = Report::new(format!("gamma n<={max_n}"));
    for n in 1..=max_n {
        let paths = enumerate(1, n).expect("m = 1");
        let images: BTreeSet<BinaryTree> = paths.iter().map(gamma).collect();
        let trees: BTreeSet<BinaryTree> = BinaryTree::all(n).into_iter().collect();
        report.check(images == trees, || format!("gamma is not onto at n={n}"));
        for p in &paths {
            let t = gamma(p);
            report.check(gamma_inv(&t).as_ref() == Some(p), || format!("gamma_inv(gamma({p})) != {p}"));
            let path_up: BTreeSet<BinaryTree> = covers(p).iter().map(gamma).collect();
            let tree_up: BTreeSet<BinaryTree> = t.rotations().into_iter().collect();
            report.check(path_up == tree_up, || format!("covers of {p} do not match rotations of {t:?}"));
        }
    }
    report
}
