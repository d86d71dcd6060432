//! Monomial ideals and their quotient invariants: codimension by minimum
//! vertex cover and degree by Hilbert-series numerator, with polarization for
//! generators that are not squarefree.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::monomial::Monomial;
use crate::ring::VarId;

/// A monomial ideal held by its unique minimal generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes: drops every monomial divisible by another, dedups, sorts.
    pub fn new(gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal { gens: minimalize(gens) }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The whole ring: generated by the constant monomial.
    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Replaces x^e by a product of e fresh variables, one ideal-wide slot
    /// pool per variable. Preserves codimension and degree.
    pub fn polarize(&self) -> MonomialIdeal {
        let mut depth: Vec<(VarId, u16)> = Vec::new();
        for g in &self.gens {
            for &(v, e) in g.factors() {
                match depth.iter_mut().find(|(w, _)| *w == v) {
                    Some(slot) => slot.1 = slot.1.max(e),
                    None => depth.push((v, e)),
                }
            }
        }
        depth.sort_unstable();
        let mut first_slot: Vec<(VarId, u16)> = Vec::new();
        let mut next = 0u16;
        for &(v, e) in &depth {
            first_slot.push((v, next));
            next = next.checked_add(e).expect("polarization fits u16 ids");
        }
        let slot = |v: VarId| first_slot.iter().find(|(w, _)| *w == v).unwrap().1;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let pairs: Vec<(VarId, u16)> = g
                    .factors()
                    .iter()
                    .flat_map(|&(v, e)| (0..e).map(move |i| (VarId(slot(v) + i), 1)))
                    .collect();
                Monomial::from_pairs(&pairs)
            })
            .collect();
        MonomialIdeal::new(gens)
    }

    /// Codimension of the quotient by the ideal: the minimum number of
    /// variables meeting every generator. Panics on the unit ideal.
    pub fn codim(&self) -> u32 {
        assert!(!self.is_unit(), "codimension of the unit ideal is undefined");
        if !self.is_squarefree() {
            return self.polarize().codim();
        }
        let supports: Vec<Vec<VarId>> =
            self.gens.iter().map(|g| g.support().collect()).collect();
        let mut best = greedy_cover(&supports);
        branch_cover(&supports, &mut BTreeSet::new(), &mut best);
        best.len() as u32
    }

    /// Degree of the quotient by the ideal: the Hilbert-series numerator
    /// evaluated at 1 after extracting exactly codim factors of (1 - t).
    /// The extraction doubles as a consistency check on the codimension.
    /// Panics on the unit ideal.
    pub fn degree(&self) -> u128 {
        assert!(!self.is_unit(), "degree of the unit ideal is undefined");
        if !self.is_squarefree() {
            return self.polarize().degree();
        }
        let c = self.codim();
        let mut q = numerator(&self.gens);
        for _ in 0..c {
            let total: i128 = q.iter().sum();
            assert_eq!(total, 0, "numerator divisible by (1 - t) codim times");
            q = divide_by_one_minus_t(&q);
        }
        let deg: i128 = q.iter().sum();
        assert!(deg > 0, "degree positive once (1 - t) is exhausted");
        deg as u128
    }

    /// Codimension and degree by exhaustive face enumeration of the complex
    /// whose non-faces are the generator supports. Independent of the
    /// recursive numerator computation; exponential, so capped at 20 support
    /// variables. Squarefree generators only.
    pub fn codim_degree_by_facets(&self) -> (u32, u128) {
        assert!(!self.is_unit(), "facet data of the unit ideal is undefined");
        assert!(self.is_squarefree(), "facet enumeration needs squarefree generators");
        let vars: Vec<VarId> = self
            .gens
            .iter()
            .flat_map(|g| g.support())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let k = vars.len();
        assert!(k <= 20, "facet enumeration capped at 20 variables");
        let masks: Vec<u32> = self
            .gens
            .iter()
            .map(|g| {
                g.support()
                    .map(|v| 1u32 << vars.iter().position(|&w| w == v).unwrap())
                    .fold(0, |a, b| a | b)
            })
            .collect();
        let mut max_face = 0u32;
        let mut count = 0u128;
        for face in 0..(1u32 << k) {
            if masks.iter().any(|&m| face & m == m) {
                continue;
            }
            let size = face.count_ones();
            if size > max_face {
                max_face = size;
                count = 1;
            } else if size == max_face {
                count += 1;
            }
        }
        (k as u32 - max_face, count)
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && h.divides(g)))
        .collect();
    let mut out: Vec<Monomial> = gens
        .into_iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(g, _)| g)
        .collect();
    // Equal monomials were deduped, so divisibility both ways is impossible
    // and the antichain is exactly the kept set.
    out.sort();
    out
}

/// Starting cover: repeatedly take the variable hitting the most uncovered
/// supports. Upper bound for the branch and bound.
fn greedy_cover(supports: &[Vec<VarId>]) -> BTreeSet<VarId> {
    let mut cover = BTreeSet::new();
    let mut open: Vec<&Vec<VarId>> = supports.iter().collect();
    while !open.is_empty() {
        let mut counts: alloc::collections::BTreeMap<VarId, usize> = Default::default();
        for s in &open {
            for &v in *s {
                *counts.entry(v).or_insert(0) += 1;
            }
        }
        let (&v, _) = counts.iter().max_by_key(|(v, c)| (**c, core::cmp::Reverse(**v))).unwrap();
        cover.insert(v);
        open.retain(|s| !s.contains(&v));
    }
    cover
}

fn branch_cover(
    supports: &[Vec<VarId>],
    chosen: &mut BTreeSet<VarId>,
    best: &mut BTreeSet<VarId>,
) {
    if chosen.len() >= best.len() {
        return;
    }
    // First uncovered support; every cover must contain one of its variables.
    let Some(open) = supports
        .iter()
        .find(|s| !s.iter().any(|v| chosen.contains(v)))
    else {
        *best = chosen.clone();
        return;
    };
    for &v in open {
        chosen.insert(v);
        branch_cover(supports, chosen, best);
        chosen.remove(&v);
    }
}

/// Numerator of the Hilbert series over the full (1 - t)^n denominator, as
/// dense coefficients. Splits on a shared variable x via the exact sequence
/// relating M, M + (x), and M : x; the base case is pairwise coprime
/// generators, a complete intersection.
fn numerator(gens: &[Monomial]) -> Vec<i128> {
    if gens.iter().any(|g| g.is_one()) {
        return alloc::vec![0];
    }
    if let Some(pivot) = shared_variable(gens) {
        let plus: Vec<Monomial> = core::iter::once(Monomial::var(pivot))
            .chain(gens.iter().filter(|g| !g.contains_var(pivot)).cloned())
            .collect();
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                if g.contains_var(pivot) {
                    Monomial::var(pivot).div_into(g).unwrap()
                } else {
                    g.clone()
                }
            })
            .collect();
        let a = numerator(&minimalize(plus));
        let b = numerator(&minimalize(colon));
        let mut out = alloc::vec![0i128; a.len().max(b.len() + 1)];
        for (i, &c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in b.iter().enumerate() {
            out[i + 1] += c;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        return out;
    }
    // Pairwise coprime: product of (1 - t^deg).
    let mut out = alloc::vec![1i128];
    for g in gens {
        let d = g.degree() as usize;
        let mut next = alloc::vec![0i128; out.len() + d];
        for (i, &c) in out.iter().enumerate() {
            next[i] += c;
            next[i + d] -= c;
        }
        out = next;
    }
    out
}

/// A variable appearing in at least two generators: the most frequent one,
/// ties to the smallest id. None when generators are pairwise coprime.
fn shared_variable(gens: &[Monomial]) -> Option<VarId> {
    let mut counts: alloc::collections::BTreeMap<VarId, usize> = Default::default();
    for g in gens {
        for v in g.support() {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .filter(|(_, c)| *c >= 2)
        .max_by_key(|&(v, c)| (c, core::cmp::Reverse(v)))
        .map(|(v, _)| v)
}

fn divide_by_one_minus_t(k: &[i128]) -> Vec<i128> {
    // k = (1 - t) q gives q_i = k_i + q_{i-1}; the final prefix sum is the
    // remainder and the caller has already checked it vanishes.
    let mut q = Vec::with_capacity(k.len().saturating_sub(1));
    let mut acc = 0i128;
    for &c in &k[..k.len() - 1] {
        acc += c;
        q.push(acc);
    }
    if q.is_empty() {
        q.push(0);
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqf(ids: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::new(
            ids.iter()
                .map(|vs| {
                    Monomial::from_pairs(&vs.iter().map(|&v| (VarId(v), 1)).collect::<Vec<_>>())
                })
                .collect(),
        )
    }

    #[test]
    fn minimal_generators_form_an_antichain() {
        let m = MonomialIdeal::new(alloc::vec![
            Monomial::var(VarId(0)),
            Monomial::from_pairs(&[(VarId(0), 1), (VarId(1), 1)]),
            Monomial::var(VarId(2)),
        ]);
        assert_eq!(m.generators().len(), 2);
        assert!(m.contains(&Monomial::from_pairs(&[(VarId(0), 3)])));
        assert!(!m.contains(&Monomial::var(VarId(1))));
    }

    #[test]
    fn principal_ideal_invariants() {
        let m = sqf(&[&[0]]);
        assert_eq!(m.codim(), 1);
        assert_eq!(m.degree(), 1);
    }

    #[test]
    fn two_coprime_quadrics() {
        // Leading terms of the two adjacent minors of a 2x3: codim 2 and
        // degree 2 * 2 as a complete intersection.
        let m = sqf(&[&[0, 4], &[1, 5]]);
        assert_eq!(m.codim(), 2);
        assert_eq!(m.degree(), 4);
        assert_eq!(m.codim_degree_by_facets(), (2, 4));
    }

    #[test]
    fn degree_sees_non_complete_intersections() {
        // Path ideal x0x1, x1x2, x2x3: facets {0,2}, {0,3}, {1,3}, so codim 2
        // with degree 3, which no product formula of the generators gives.
        let m = sqf(&[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(m.codim(), 2);
        assert_eq!(m.degree(), 3);
        assert_eq!(m.codim_degree_by_facets(), (2, 3));
    }

    #[test]
    fn polarization_preserves_invariants() {
        // x^2, xy polarizes to x1x2, x1y. The quotient is a line with an
        // embedded point: codim 1, degree 1.
        let m = MonomialIdeal::new(alloc::vec![
            Monomial::from_pairs(&[(VarId(0), 2)]),
            Monomial::from_pairs(&[(VarId(0), 1), (VarId(1), 1)]),
        ]);
        assert!(!m.is_squarefree());
        let p = m.polarize();
        assert!(p.is_squarefree());
        assert_eq!((m.codim(), m.degree()), (1, 1));
        assert_eq!(p.codim_degree_by_facets(), (1, 1));
    }

    #[test]
    fn unit_and_zero_ideals() {
        let unit = MonomialIdeal::new(alloc::vec![Monomial::one(), Monomial::var(VarId(1))]);
        assert!(unit.is_unit());
        assert_eq!(unit.generators().len(), 1);
        let zero = MonomialIdeal::new(alloc::vec![]);
        assert!(zero.is_zero());
        assert_eq!(zero.codim(), 0);
        assert_eq!(zero.degree(), 1);
    }
}
