//! Sparse monomials: exponent support as a sorted list of (variable, power).
//!
//! The derived `Ord` on `Monomial` is a container order used for map keys and
//! canonical dedup only; ranking monomials for algebra goes through
//! `order::MonomialOrder`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::ring::VarId;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    factors: Vec<(VarId, u16)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial { factors: alloc::vec![(v, 1)] }
    }

    /// Builds from arbitrary (variable, exponent) pairs: merges duplicates,
    /// drops zero exponents, sorts by variable id.
    pub fn from_pairs(pairs: &[(VarId, u16)]) -> Monomial {
        let mut factors: Vec<(VarId, u16)> = Vec::with_capacity(pairs.len());
        for &(v, e) in pairs {
            if e == 0 {
                continue;
            }
            factors.push((v, e));
        }
        factors.sort_unstable_by_key(|&(v, _)| v);
        let mut merged: Vec<(VarId, u16)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, v: VarId) -> u16 {
        match self.factors.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn factors(&self) -> &[(VarId, u16)] {
        &self.factors
    }

    pub fn support(&self) -> impl Iterator<Item = VarId> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.exponent(v) > 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (va, ea) = self.factors[i];
            let (vb, eb) = other.factors[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.factors {
            while j < other.factors.len() && other.factors[j].0 < v {
                j += 1;
            }
            match other.factors.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(other.factors.len());
        let mut i = 0;
        for &(v, e) in &other.factors {
            let mut keep = e;
            if i < self.factors.len() && self.factors[i].0 == v {
                let d = self.factors[i].1;
                if d > e {
                    return None;
                }
                keep = e - d;
                i += 1;
            }
            if keep > 0 {
                out.push((v, keep));
            }
        }
        if i < self.factors.len() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (va, ea) = self.factors[i];
            let (vb, eb) = other.factors[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea.max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u16) -> VarId {
        VarId(i)
    }

    #[test]
    fn from_pairs_merges_and_sorts() {
        let m = Monomial::from_pairs(&[(v(3), 1), (v(1), 2), (v(3), 1), (v(2), 0)]);
        assert_eq!(m.factors(), &[(v(1), 2), (v(3), 2)]);
        assert_eq!(m.degree(), 4);
        assert!(!m.is_squarefree());
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_pairs(&[(v(0), 1), (v(2), 2)]);
        let b = Monomial::from_pairs(&[(v(0), 1), (v(1), 1), (v(2), 3)]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        let q = a.div_into(&b).unwrap();
        assert_eq!(q.factors(), &[(v(1), 1), (v(2), 1)]);
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.mul(&q), b);
        assert!(a.div_into(&Monomial::var(v(0))).is_none());
    }

    #[test]
    fn coprimality() {
        let a = Monomial::from_pairs(&[(v(0), 1), (v(2), 1)]);
        let b = Monomial::from_pairs(&[(v(1), 1), (v(3), 1)]);
        let c = Monomial::from_pairs(&[(v(2), 1)]);
        assert!(a.is_coprime_with(&b));
        assert!(!a.is_coprime_with(&c));
    }
}
