//! Finite formal sums with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

/// Coefficient ring. Arithmetic is checked and panics on overflow.
pub type Coeff = i64;

/// A finite linear combination of keys. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

fn checked_add(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("coefficient overflow")
}

fn checked_mul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("coefficient overflow")
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K) -> Self {
        Self::term(key, 1)
    }

    pub fn term(key: K, coeff: Coeff) -> Self {
        let mut s = Self::zero();
        s.add_term(key, coeff);
        s
    }

    pub fn add_term(&mut self, key: K, coeff: Coeff) {
        if coeff == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let c = checked_add(*o.get(), coeff);
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: Coeff) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), checked_mul(*c, scale));
        }
    }

    pub fn add_assign_sum(&mut self, other: &Self) {
        self.add_scaled(other, 1);
    }

    pub fn scaled(&self, scale: Coeff) -> Self {
        let mut s = Self::zero();
        s.add_scaled(self, scale);
        s
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.add_scaled(other, -1);
        s
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.add_scaled(other, 1);
        s
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, Coeff)> {
        self.terms.iter().map(|(k, c)| (k, *c))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// True when every coefficient equals one.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|c| *c == 1)
    }

    /// Applies a linear map term by term.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> FormalSum<L>) -> FormalSum<L> {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), *c);
        }
        out
    }

    /// Extends a bilinear map on keys to sums.
    pub fn bilinear<R: Ord + Clone, L: Ord + Clone>(
        &self,
        other: &FormalSum<R>,
        mut f: impl FnMut(&K, &R) -> FormalSum<L>,
    ) -> FormalSum<L> {
        let mut out = FormalSum::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b), checked_mul(*ca, *cb));
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<K> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut s = Self::zero();
        for k in iter {
            s.add_term(k, 1);
        }
        s
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coeff)> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in iter {
            s.add_term(k, c);
        }
        s
    }
}

impl<K: Ord + fmt::Display> fmt::Display for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let sep = if n == 0 { "" } else { " " };
            match *c {
                1 if n == 0 => write!(f, "{k}")?,
                1 => write!(f, "{sep}+ {k}")?,
                -1 => write!(f, "{sep}- {k}")?,
                c if c < 0 => write!(f, "{sep}- {}*{k}", -c)?,
                c if n == 0 => write!(f, "{c}*{k}")?,
                c => write!(f, "{sep}+ {c}*{k}")?,
            }
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
