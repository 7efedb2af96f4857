//! The m-Tamari order on m-Dyck paths of a fixed size.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{max_multiplicity, paths_up_to, star, star_i};
use crate::error::{Error, Result};
use crate::path::{enumerate, heights, MDyckPath, Step};
use crate::report::Report;

/// Rotation at the `d`-th down step (0-based): the down step must be followed
/// by an up step `u`; it is moved to the end of the excursion of `u`.
pub fn rotate(p: &MDyckPath, d: usize) -> Result<MDyckPath> {
    let steps = p.steps();
    let pos = steps
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Step::Down)
        .nth(d)
        .map(|(i, _)| i)
        .ok_or(Error::NoSuchStep(d))?;
    if steps.get(pos + 1) != Some(&Step::Up) {
        return Err(Error::NotRotatable(d));
    }
    let hs = heights(p.m(), &steps);
    let base = hs[pos + 1];
    let mut end = pos + 2;
    while hs[end] != base {
        end += 1;
    }
    let mut out = Vec::with_capacity(steps.len());
    out.extend_from_slice(&steps[..pos]);
    out.extend_from_slice(&steps[pos + 1..end]);
    out.push(Step::Down);
    out.extend_from_slice(&steps[end..]);
    MDyckPath::from_steps(p.m(), &out)
}

/// Upper covers of `p`, sorted and without repetition.
pub fn covers(p: &MDyckPath) -> Vec<MDyckPath> {
    let mut out: Vec<MDyckPath> = (0..p.down_count()).filter_map(|d| rotate(p, d).ok()).collect();
    out.sort();
    out.dedup();
    out
}

fn area(p: &MDyckPath) -> usize {
    p.heights().iter().sum()
}

/// The Hasse diagram of the order on paths of one size with its transitive closure.
pub struct TamariPoset {
    pub paths: Vec<MDyckPath>,
    index: HashMap<MDyckPath, usize>,
    pub cover_edges: Vec<Vec<usize>>,
    above: Vec<Vec<u64>>,
}

impl TamariPoset {
    pub fn build(m: usize, n: usize) -> Result<Self> {
        let paths = enumerate(m, n)?;
        let index: HashMap<MDyckPath, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let cover_edges: Vec<Vec<usize>> = paths
            .iter()
            .map(|p| covers(p).iter().map(|c| index[c]).collect())
            .collect();
        let words = paths.len().div_ceil(64);
        let mut above = vec![vec![0u64; words]; paths.len()];
        let mut order: Vec<usize> = (0..paths.len()).collect();
        // rotations strictly increase the area, so this is a reverse topological order
        order.sort_by_key(|&i| std::cmp::Reverse(area(&paths[i])));
        for &i in &order {
            let mut set = vec![0u64; words];
            set[i / 64] |= 1 << (i % 64);
            for &c in &cover_edges[i] {
                for (w, x) in set.iter_mut().zip(&above[c]) {
                    *w |= x;
                }
            }
            above[i] = set;
        }
        Ok(TamariPoset { paths, index, cover_edges, above })
    }

    pub fn position(&self, p: &MDyckPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn leq_index(&self, a: usize, b: usize) -> bool {
        self.above[a][b / 64] >> (b % 64) & 1 == 1
    }
}

type PosetCache = Mutex<HashMap<(usize, usize), Arc<TamariPoset>>>;

/// Shared poset for `(m, n)`, built once per process.
pub fn poset(m: usize, n: usize) -> Result<Arc<TamariPoset>> {
    static CACHE: OnceLock<PosetCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("poset cache poisoned").get(&(m, n)) {
        return Ok(Arc::clone(p));
    }
    let built = Arc::new(TamariPoset::build(m, n)?);
    let mut guard = cache.lock().expect("poset cache poisoned");
    Ok(Arc::clone(guard.entry((m, n)).or_insert(built)))
}

fn same_shape(p: &MDyckPath, q: &MDyckPath) -> Result<()> {
    if p.m() != q.m() {
        return Err(Error::MismatchedM { left: p.m(), right: q.m() });
    }
    if p.size() != q.size() {
        return Err(Error::MismatchedSize { left: p.size(), right: q.size() });
    }
    Ok(())
}

/// `p <= q` in the m-Tamari order.
pub fn leq(p: &MDyckPath, q: &MDyckPath) -> Result<bool> {
    same_shape(p, q)?;
    let poset = poset(p.m(), p.size())?;
    let a = poset.position(p).expect("enumerated");
    let b = poset.position(q).expect("enumerated");
    Ok(poset.leq_index(a, b))
}

/// All `z` with `p <= z <= q`, sorted.
pub fn interval(p: &MDyckPath, q: &MDyckPath) -> Result<Vec<MDyckPath>> {
    same_shape(p, q)?;
    let poset = poset(p.m(), p.size())?;
    let a = poset.position(p).expect("enumerated");
    let b = poset.position(q).expect("enumerated");
    Ok((0..poset.paths.len())
        .filter(|&z| poset.leq_index(a, z) && poset.leq_index(z, b))
        .map(|z| poset.paths[z].clone())
        .collect())
}

/// `(c_i(P), C_i(P))`: the smallest and largest suffix length of the last
/// color word whose maximal color multiplicity is exactly `i`.
pub fn c_bounds(p: &MDyckPath, i: usize) -> Result<(usize, usize)> {
    if i > p.m() {
        return Err(Error::IndexOutOfRange { index: i, m: p.m() });
    }
    if i == 0 {
        return Ok((0, 0));
    }
    let omega = p.standard_coloring().last_omega();
    let lens: Vec<usize> = (0..=omega.len())
        .filter(|&len| max_multiplicity(&omega[omega.len() - len..]) == i)
        .collect();
    Ok((*lens.first().expect("every class occurs"), *lens.last().expect("every class occurs")))
}

/// The bounds `(P /_i Q, P \_i Q)` of the interval supporting `P *_i Q`.
pub fn bounds_product(p: &MDyckPath, i: usize, q: &MDyckPath) -> Result<(MDyckPath, MDyckPath)> {
    let (c, cc) = c_bounds(p, i)?;
    let lower = p.graft(c, q)?;
    let factors = q.prime_factors();
    let (last, rest) = factors.split_last().expect("paths are nonempty");
    let mut upper = p.clone();
    if let Some(head) = rest.iter().cloned().reduce(|a, b| a.concat(&b).expect("same m")) {
        upper = upper.graft(p.last_level(), &head)?;
    }
    let upper = upper.graft(cc, last)?;
    Ok((lower, upper))
}

/// Checks that every `P *_i Q` and `P * Q` is exactly an interval with the
/// predicted bounds, with multiplicity-free supports.
pub fn check_interval_property(m: usize, max_total: usize) -> Report {
    let mut report = Report::new(format!("intervals m={m} total<={max_total}"));
    let basis = paths_up_to(m, max_total.saturating_sub(1));
    for (sa, a) in &basis {
        for (sb, b) in &basis {
            if sa + sb > max_total {
                continue;
            }
            for i in 0..=m {
                let prod = star_i(a, i, b).expect("valid");
                let (lo, hi) = bounds_product(a, i, b).expect("valid");
                let iv = interval(&lo, &hi).expect("same size");
                let support: Vec<MDyckPath> = prod.keys().cloned().collect();
                report.check(prod.is_multiplicity_free() && support == iv, || {
                    format!("{a} *{i} {b} is not the interval [{lo}, {hi}]")
                });
            }
            let total = star(a, b).expect("valid");
            let lo = bounds_product(a, 0, b).expect("valid").0;
            let hi = bounds_product(a, m, b).expect("valid").1;
            let iv = interval(&lo, &hi).expect("same size");
            let support: Vec<MDyckPath> = total.keys().cloned().collect();
            report.check(total.is_multiplicity_free() && support == iv, || {
                format!("{a} * {b} is not the interval [{lo}, {hi}]")
            });
        }
    }
    report
}

/// Graphviz rendering of the Hasse diagram, edges pointing upwards.
pub fn hasse_dot(m: usize, n: usize) -> Result<String> {
    let poset = poset(m, n)?;
    let mut out = format!("digraph tamari_{m}_{n} {{\n");
    for p in &poset.paths {
        out.push_str(&format!("  \"{}\";\n", p.label()));
    }
    for (i, ups) in poset.cover_edges.iter().enumerate() {
        for &j in ups {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", poset.paths[i].label(), poset.paths[j].label()));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, l: &[usize]) -> MDyckPath {
        MDyckPath::new(m, l.to_vec()).unwrap()
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate(&p(2, &[2, 2]), 1).unwrap(), p(2, &[1, 3]));
        assert_eq!(rotate(&p(2, &[1, 3]), 0).unwrap(), p(2, &[0, 4]));
        assert!(rotate(&p(2, &[1, 3]), 1).is_err());
    }

    /// Colors attached to steps (0 for up steps).
    fn step_colors(q: &MDyckPath) -> Vec<usize> {
        let colors = q.standard_coloring().colors;
        let mut it = colors.into_iter();
        q.steps().iter().map(|s| if *s == Step::Down { it.next().unwrap() } else { 0 }).collect()
    }

    #[test]
    fn rotation_preserves_colors() {
        for m in 1..=3 {
            for q in enumerate(m, 4).unwrap() {
                let steps = q.steps();
                let hs = q.heights();
                let old = step_colors(&q);
                let downs: Vec<usize> = (0..steps.len()).filter(|&i| steps[i] == Step::Down).collect();
                for (d, &pos) in downs.iter().enumerate() {
                    let Ok(r) = rotate(&q, d) else { continue };
                    let mut end = pos + 2;
                    while hs[end] != hs[pos + 1] {
                        end += 1;
                    }
                    let order: Vec<usize> =
                        (0..pos).chain(pos + 1..end).chain([pos]).chain(end..steps.len()).collect();
                    let moved: Vec<usize> = order.iter().map(|&i| old[i]).collect();
                    let new = step_colors(&r);
                    let ups_ok = moved.iter().zip(&new).all(|(a, b)| (*a == 0) == (*b == 0));
                    assert!(ups_ok);
                    assert_eq!(moved, new, "{q} at {d}");
                }
            }
        }
    }

    #[test]
    fn poset_has_single_maximum() {
        for m in 1..=3 {
            for n in 1..=4 {
                let poset = poset(m, n).unwrap();
                let mut top = vec![0; n];
                top[n - 1] = n * m;
                let top = p(m, &top);
                for q in &poset.paths {
                    assert!(leq(q, &top).unwrap());
                }
                let maximal: Vec<_> = poset.cover_edges.iter().filter(|c| c.is_empty()).collect();
                assert_eq!(maximal.len(), 1);
            }
        }
    }

    #[test]
    fn c_bound_examples() {
        assert_eq!(c_bounds(&MDyckPath::rho(2), 1).unwrap(), (1, 1));
        assert_eq!(c_bounds(&p(2, &[1, 3]), 1).unwrap(), (1, 2));
        assert_eq!(c_bounds(&p(2, &[1, 3]), 0).unwrap(), (0, 0));
        assert_eq!(c_bounds(&p(2, &[1, 3]), 2).unwrap(), (3, 3));
    }

    #[test]
    fn bound_examples_and_interval_size() {
        let a = p(2, &[1, 3]);
        let b = p(2, &[0, 2, 4, 2]);
        let (lo, hi) = bounds_product(&a, 0, &b).unwrap();
        assert_eq!(lo, p(2, &[1, 3, 0, 2, 4, 2]));
        assert_eq!(hi, p(2, &[1, 0, 0, 2, 7, 2]));
        let top = bounds_product(&a, 2, &b).unwrap().1;
        assert_eq!(interval(&lo, &top).unwrap().len(), 10);
        assert_eq!(star_i(&a, 2, &b).unwrap().len(), 1);
    }

    #[test]
    fn intervals_small() {
        for m in 1..=2 {
            let rep = check_interval_property(m, 4);
            assert!(rep.is_ok(), "{rep}");
        }
    }

    #[test]
    fn dot_output() {
        let dot = hasse_dot(2, 2).unwrap();
        assert!(dot.starts_with("digraph tamari_2_2 {"));
        assert!(dot.contains("\"1,3\" -> \"0,4\";"));
        assert!(dot.contains("\"2,2\" -> \"1,3\";"));
        assert_eq!(dot.matches("->").count(), 2);
        assert!(!hasse_dot(2, 1).unwrap().contains("->"));
    }
}
