//! Truncated power series with exact integer coefficients.
//!
//! `D_m(x) = sum_{n>=0} d_{m,n} x^n` counts m-Dyck paths including the empty
//! one; its positive part `P_m = D_m - 1` is the series with `P_m(0) = 0`.

use crate::path::{enumerate, fuss_catalan};
use crate::report::Report;
use crate::trees::enumerate_basis;

/// Coefficients `c_0..c_N`; all arithmetic truncates at degree `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

fn add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("series coefficient overflow")
}

fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("series coefficient overflow")
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<i64>, degree: usize) -> Self {
        coeffs.resize(degree + 1, 0);
        TruncatedSeries { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(Vec::new(), degree)
    }

    pub fn constant(c: i64, degree: usize) -> Self {
        Self::new(vec![c], degree)
    }

    /// The series `x`.
    pub fn x(degree: usize) -> Self {
        Self::new(vec![0, 1], degree)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> i64 {
        self.coeffs.get(n).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| add(*a, *b)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| add(*a, -*b)).collect();
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.degree().min(other.degree());
        let mut coeffs = vec![0; n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] = add(coeffs[i + j], mul(*a, *b));
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::constant(1, self.degree()), |acc, _| acc.mul(self))
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        let mut coeffs = vec![0];
        coeffs.extend_from_slice(&self.coeffs[..self.degree()]);
        TruncatedSeries { coeffs }
    }

    /// `self(g(x))`, for `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Self {
        assert_eq!(g.coeff(0), 0, "inner series must vanish at 0");
        let n = self.degree().min(g.degree());
        self.coeffs[..=n]
            .iter()
            .rev()
            .fold(Self::zero(n), |acc, &c| acc.mul(g).add(&Self::constant(c, n)))
    }

    /// Multiplicative inverse, for constant term `1` or `-1`.
    pub fn inverse(&self) -> Self {
        let c0 = self.coeff(0);
        assert!(c0 == 1 || c0 == -1, "constant term must be a unit");
        let n = self.degree();
        let mut inv = vec![0i64; n + 1];
        inv[0] = c0;
        for k in 1..=n {
            let mut s = 0;
            for j in 1..=k {
                s = add(s, mul(self.coeffs[j], inv[k - j]));
            }
            inv[k] = mul(-s, c0);
        }
        TruncatedSeries { coeffs: inv }
    }
}

/// `D_m` to degree `n` from the closed formula.
pub fn dm_series(m: usize, n: usize) -> TruncatedSeries {
    TruncatedSeries::new((0..=n).map(|k| fuss_catalan(m, k) as i64).collect(), n)
}

/// `D_m` to degree `n` by iterating `D <- 1 + x D^{m+1}`.
pub fn dm_series_fixed_point(m: usize, n: usize) -> TruncatedSeries {
    let one = TruncatedSeries::constant(1, n);
    let mut d = one.clone();
    for _ in 0..=n {
        d = one.add(&d.pow(m + 1).shift());
    }
    d
}

/// The positive part `D_m - 1`.
pub fn positive_part(m: usize, n: usize) -> TruncatedSeries {
    dm_series(m, n).sub(&TruncatedSeries::constant(1, n))
}

/// `x D_m^{m+1} = D_m - 1` to degree `n`.
pub fn functional_equation_holds(m: usize, n: usize) -> bool {
    let d = dm_series(m, n);
    d.pow(m + 1).shift() == d.sub(&TruncatedSeries::constant(1, n))
}

/// `P_m(x) = P_k(x (1 + P_m(x))^{m-k})` to degree `n`, with positive parts.
pub fn substitution_check(m: usize, k: usize, n: usize) -> bool {
    assert!(k <= m);
    let pm = positive_part(m, n);
    let one = TruncatedSeries::constant(1, n);
    let inner = one.add(&pm).pow(m - k).shift();
    positive_part(k, n).compose(&inner) == pm
}

/// `g_m = x / (1+x)^{m+1}` is the compositional inverse of `P_m`.
pub fn inverse_check(m: usize, n: usize) -> bool {
    let x = TruncatedSeries::x(n);
    let one = TruncatedSeries::constant(1, n);
    let g = x.mul(&one.add(&x).pow(m + 1).inverse());
    let pm = positive_part(m, n);
    pm.compose(&g) == x && g.compose(&pm) == x
}

/// Series identities, agreement with enumeration and tree counts.
pub fn check_series(m: usize, eq_degree: usize, sub_degree: usize) -> Report {
    let mut report = Report::new(format!("series m={m} degrees {eq_degree}/{sub_degree}"));
    let d = dm_series(m, eq_degree);
    report.check(d == dm_series_fixed_point(m, eq_degree), || format!("closed form and iteration differ, m={m}"));
    report.check(functional_equation_holds(m, eq_degree), || format!("functional equation fails, m={m}"));
    for k in 0..=m {
        report.check(substitution_check(m, k, sub_degree), || format!("substitution fails, m={m} k={k}"));
    }
    report.check(inverse_check(m, sub_degree), || format!("g_{m} is not the inverse of d_{m}"));
    let max_n = if m <= 2 { 6 } else { 4 };
    for n in 1..=max_n {
        let count = enumerate(m, n).expect("m >= 1").len() as i64;
        report.check(count == d.coeff(n), || format!("|Dyck_{n}^{m}| = {count} != {}", d.coeff(n)));
    }
    // tree counts satisfy f = x (1 + f)^{m+1}, which is the positive part
    let tree_max = if m <= 2 { 5 } else { 4 };
    let pm = positive_part(m, tree_max);
    for n in 1..=tree_max {
        let b = enumerate_basis(n, m, m, &[]).len() as i64;
        report.check(b == pm.coeff(n), || format!("|B_{n}^{m}| = {b} != {}", pm.coeff(n)));
    }
    report
}
