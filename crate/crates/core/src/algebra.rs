//! The products `*_0, ..., *_m` on m-Dyck paths and their coarsenings.

use std::collections::HashMap;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::path::{enumerate, MDyckPath};
use crate::report::Report;
use crate::sum::FormalSum;
use crate::PathSum;

/// Weak compositions of `total` into `parts` parts, in lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = Vec::with_capacity(parts);
    weak_rec(total, parts, &mut cur, &mut out);
    out
}

fn weak_rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() + 1 == parts {
        cur.push(left);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for v in 0..=left {
        cur.push(v);
        weak_rec(left - v, parts, cur, out);
        cur.pop();
    }
}

/// Compositions of `total` into positive parts, in lexicographic order.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    comp_rec(total, &mut cur, &mut out);
    out
}

fn comp_rec(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if left == 0 {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        return;
    }
    for v in 1..=left {
        cur.push(v);
        comp_rec(left - v, cur, out);
        cur.pop();
    }
}

/// Largest number of repetitions of a single letter in `word`.
pub fn max_multiplicity(word: &[usize]) -> usize {
    let mut counts: HashMap<usize, usize> = HashMap::new();
    let mut best = 0;
    for &c in word {
        let e = counts.entry(c).or_insert(0);
        *e += 1;
        best = best.max(*e);
    }
    best
}

/// Multiplicity class of a suffix length of the last color word.
fn suffix_class(omega: &[usize], len: usize) -> usize {
    max_multiplicity(&omega[omega.len() - len..])
}

/// `Lambda_r^i(P)`: weak compositions of `L(P)` into `r + 1` parts whose last
/// part `l` selects a suffix of the last color word with maximal color
/// multiplicity exactly `i`.
pub fn lambda_set(p: &MDyckPath, r: usize, i: usize) -> Vec<Vec<usize>> {
    let omega = p.standard_coloring().last_omega();
    weak_compositions(p.last_level(), r + 1)
        .into_iter()
        .filter(|l| suffix_class(&omega, l[r]) == i)
        .collect()
}

/// `P *_lambda Q = (((P x_{l_1+...+l_r} Q_1) x_{l_2+...+l_r} Q_2) ...) x_{l_r} Q_r`.
pub fn star_lambda(p: &MDyckPath, lambda: &[usize], q: &MDyckPath) -> Result<MDyckPath> {
    let factors = q.prime_factors();
    if lambda.len() != factors.len() + 1 {
        return Err(Error::WrongArity { expected: factors.len() + 1, got: lambda.len() });
    }
    if lambda.iter().sum::<usize>() != p.last_level() {
        return Err(Error::Invalid(format!("composition {lambda:?} does not sum to L(P)")));
    }
    let mut acc = p.clone();
    for (j, f) in factors.iter().enumerate() {
        let shift: usize = lambda[j + 1..].iter().sum();
        acc = acc.graft(shift, f)?;
    }
    Ok(acc)
}

fn check_operands(p: &MDyckPath, i: usize, q: &MDyckPath) -> Result<()> {
    if p.m() != q.m() {
        return Err(Error::MismatchedM { left: p.m(), right: q.m() });
    }
    if i > p.m() {
        return Err(Error::IndexOutOfRange { index: i, m: p.m() });
    }
    Ok(())
}

/// `P *_i Q`, the sum of `P *_lambda Q` over `Lambda_r^i(P)`.
pub fn star_i(p: &MDyckPath, i: usize, q: &MDyckPath) -> Result<PathSum> {
    check_operands(p, i, q)?;
    let r = q.prime_factors().len();
    let mut out = PathSum::zero();
    for lambda in lambda_set(p, r, i) {
        out.add_term(star_lambda(p, &lambda, q)?, 1);
    }
    Ok(out)
}

/// The associative product `* = *_0 + ... + *_m`.
pub fn star(p: &MDyckPath, q: &MDyckPath) -> Result<PathSum> {
    check_operands(p, 0, q)?;
    let r = q.prime_factors().len();
    weak_compositions(p.last_level(), r + 1)
        .into_iter()
        .map(|l| star_lambda(p, &l, q))
        .collect()
}

/// Bilinear extension of `*_i`.
pub fn star_i_sum(x: &PathSum, i: usize, y: &PathSum) -> Result<PathSum> {
    let mut err = None;
    let out = x.bilinear(y, |a, b| match star_i(a, i, b) {
        Ok(s) => s,
        Err(e) => {
            err.get_or_insert(e);
            PathSum::zero()
        }
    });
    err.map_or(Ok(out), Err)
}

/// Bilinear extension of `*`.
pub fn star_sum(x: &PathSum, y: &PathSum) -> Result<PathSum> {
    let mut err = None;
    let out = x.bilinear(y, |a, b| match star(a, b) {
        Ok(s) => s,
        Err(e) => {
            err.get_or_insert(e);
            PathSum::zero()
        }
    });
    err.map_or(Ok(out), Err)
}

/// Indices of the products merged into block `i` of the composition `r`.
pub fn block(r: &[usize], i: usize) -> std::ops::Range<usize> {
    let start: usize = r[..i].iter().sum();
    start..start + r[i]
}

fn check_composition(r: &[usize], total: usize) -> Result<()> {
    if r.contains(&0) || r.iter().sum::<usize>() != total {
        return Err(Error::Invalid(format!("{r:?} is not a composition of {total}")));
    }
    Ok(())
}

/// The coarsened product of block `i` of `r`, a composition of `m + 1`.
pub fn functor_star(r: &[usize], i: usize, p: &MDyckPath, q: &MDyckPath) -> Result<PathSum> {
    check_composition(r, p.m() + 1)?;
    if i >= r.len() {
        return Err(Error::IndexOutOfRange { index: i, m: r.len() - 1 });
    }
    let mut out = PathSum::zero();
    for j in block(r, i) {
        out.add_assign_sum(&star_i(p, j, q)?);
    }
    Ok(out)
}

/// Bilinear extension of [`functor_star`].
pub fn functor_star_sum(r: &[usize], i: usize, x: &PathSum, y: &PathSum) -> Result<PathSum> {
    let mut out = PathSum::zero();
    for j in block(r, i) {
        out.add_assign_sum(&star_i_sum(x, j, y)?);
    }
    Ok(out)
}

/// `s o r`: sums consecutive parts of `r` grouped by the parts of `s`.
pub fn compose_compositions(s: &[usize], r: &[usize]) -> Result<Vec<usize>> {
    check_composition(s, r.len())?;
    Ok((0..s.len()).map(|i| block(s, i).map(|j| r[j]).sum()).collect())
}

/// Checks both families of Dyck^l relations on all triples of basis
/// elements with total size at most `max_total`.
///
/// `basis` pairs each element with its size; `prod(x, i, y)` is `x *_i y`
/// for `0 <= i <= l`.
pub fn check_dyck_relations<K, F>(
    name: &str,
    l: usize,
    basis: &[(usize, K)],
    max_total: usize,
    prod: F,
) -> Report
where
    K: Ord + Clone + Debug,
    F: Fn(&FormalSum<K>, usize, &FormalSum<K>) -> FormalSum<K>,
{
    let mut report = Report::new(name);
    for (sx, x) in basis {
        for (sy, y) in basis {
            if sx + sy >= max_total {
                continue;
            }
            let x = FormalSum::single(x.clone());
            let y = FormalSum::single(y.clone());
            let xy: Vec<FormalSum<K>> = (0..=l).map(|i| prod(&x, i, &y)).collect();
            for (sz, z) in basis {
                if sx + sy + sz > max_total {
                    continue;
                }
                let z = FormalSum::single(z.clone());
                let yz: Vec<FormalSum<K>> = (0..=l).map(|j| prod(&y, j, &z)).collect();
                for i in 0..=l {
                    for (j, yzj) in yz.iter().enumerate().skip(i + 1) {
                        let lhs = prod(&x, i, yzj);
                        let rhs = prod(&xy[i], j, &z);
                        report.check(lhs == rhs, || {
                            format!("x *{i} (y *{j} z) != (x *{i} y) *{j} z for x={x:?} y={y:?} z={z:?}")
                        });
                    }
                    let mut lhs = FormalSum::zero();
                    for yzj in &yz[..=i] {
                        lhs.add_assign_sum(&prod(&x, i, yzj));
                    }
                    let mut rhs = FormalSum::zero();
                    for xyk in &xy[i..] {
                        rhs.add_assign_sum(&prod(xyk, i, &z));
                    }
                    report.check(lhs == rhs, || {
                        format!("mixed relation fails for i={i}, x={x:?} y={y:?} z={z:?}")
                    });
                }
            }
        }
    }
    report
}

/// All paths of sizes `1..=max_size`, tagged with their size.
pub fn paths_up_to(m: usize, max_size: usize) -> Vec<(usize, MDyckPath)> {
    (1..=max_size)
        .flat_map(|n| enumerate(m, n).expect("m >= 1").into_iter().map(move |p| (n, p)))
        .collect()
}

/// The Dyck^m relations on paths, for every triple with total size at most `max_total`.
pub fn check_relations(m: usize, max_total: usize) -> Report {
    let basis = paths_up_to(m, max_total.saturating_sub(2));
    check_dyck_relations(&format!("relations m={m} total<={max_total}"), m, &basis, max_total, |x, i, y| {
        star_i_sum(x, i, y).expect("valid operands")
    })
}

/// The Dyck^l relations for the products coarsened along `r`.
pub fn check_functor(m: usize, r: &[usize], max_total: usize) -> Report {
    let basis = paths_up_to(m, max_total.saturating_sub(2));
    check_dyck_relations(
        &format!("functor {r:?} m={m} total<={max_total}"),
        r.len() - 1,
        &basis,
        max_total,
        |x, i, y| functor_star_sum(r, i, x, y).expect("valid operands"),
    )
}

/// Coarsening along `r` and then `s` agrees with coarsening along `s o r`.
pub fn check_composition_law(m: usize, max_total: usize) -> Report {
    let mut report = Report::new(format!("composition law m={m} total<={max_total}"));
    let basis = paths_up_to(m, max_total.saturating_sub(1));
    for r in compositions(m + 1) {
        for s in compositions(r.len()) {
            let sr = compose_compositions(&s, &r).expect("s is a composition of r.len()");
            for (sa, a) in &basis {
                for (sb, b) in &basis {
                    if sa + sb > max_total {
                        continue;
                    }
                    for i in 0..s.len() {
                        let mut twice = PathSum::zero();
                        for j in block(&s, i) {
                            twice.add_assign_sum(&functor_star(&r, j, a, b).expect("valid"));
                        }
                        let once = functor_star(&sr, i, a, b).expect("valid");
                        report.check(twice == once, || {
                            format!("s={s:?} r={r:?} i={i} on {a} and {b}")
                        });
                    }
                }
            }
        }
    }
    report
}
