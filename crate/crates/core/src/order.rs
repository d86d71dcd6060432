//! Monomial orders: lexicographic, graded reverse lexicographic, and block
//! elimination orders, each over an explicit variable priority list.
//!
//! The diagonal order used throughout is plain lex with row-major priority
//! x[1,1] > x[1,2] > ... > x[m,n]; under it the leading term of any minor is
//! its main-diagonal product. Ascending variable id equals descending roster
//! priority, so the common case compares by a linear merge over the sparse
//! factor lists with no rank lookups.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Error;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::ring::{Ring, VarId};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialOrder {
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
enum Repr {
    Lex { priority: Vec<VarId>, roster: bool },
    GrevLex { priority: Vec<VarId>, roster: bool },
    /// Compares the block part lexicographically by ascending variable id,
    /// then the remaining part with the inner order. Any monomial meeting the
    /// block ranks above every block-free monomial.
    Elim { block: Vec<VarId>, inner: Box<MonomialOrder> },
}

fn check_permutation(priority: &[VarId]) -> Result<bool, Error> {
    let mut seen = alloc::vec![false; priority.len()];
    for v in priority {
        let idx = v.0 as usize;
        if idx >= priority.len() || seen[idx] {
            return Err(Error::Invalid(
                "priority list is not a permutation of the roster".into(),
            ));
        }
        seen[idx] = true;
    }
    Ok(priority.iter().enumerate().all(|(i, v)| v.0 as usize == i))
}

impl MonomialOrder {
    pub fn lex(priority: Vec<VarId>) -> Result<MonomialOrder, Error> {
        let roster = check_permutation(&priority)?;
        Ok(MonomialOrder { repr: Repr::Lex { priority, roster } })
    }

    pub fn grevlex(priority: Vec<VarId>) -> Result<MonomialOrder, Error> {
        let roster = check_permutation(&priority)?;
        Ok(MonomialOrder { repr: Repr::GrevLex { priority, roster } })
    }

    pub fn elimination(mut block: Vec<VarId>, inner: MonomialOrder) -> Result<MonomialOrder, Error> {
        if block.is_empty() {
            return Err(Error::Invalid("elimination block is empty".into()));
        }
        block.sort_unstable();
        block.dedup();
        Ok(MonomialOrder { repr: Repr::Elim { block, inner: Box::new(inner) } })
    }

    /// Row-major lexicographic order on the full roster of `ring`.
    pub fn diaglex<F: Field>(ring: &Ring<F>) -> MonomialOrder {
        let priority = (0..ring.num_vars()).map(|i| VarId(i as u16)).collect();
        MonomialOrder { repr: Repr::Lex { priority, roster: true } }
    }

    /// Eliminates the auxiliary block of `ring`, comparing the base part by
    /// diaglex. Requires at least one auxiliary variable.
    pub fn eliminate_aux<F: Field>(ring: &Ring<F>) -> Result<MonomialOrder, Error> {
        MonomialOrder::elimination(ring.aux_vars(), MonomialOrder::diaglex(ring))
    }

    /// Largest variable id mentioned, for ring compatibility checks.
    pub fn max_var(&self) -> Option<VarId> {
        match &self.repr {
            Repr::Lex { priority, .. } | Repr::GrevLex { priority, .. } => {
                priority.iter().copied().max()
            }
            Repr::Elim { block, inner } => block.iter().copied().max().max(inner.max_var()),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.repr {
            Repr::Lex { priority, roster } => {
                if *roster {
                    lex_by_id(a.factors(), b.factors())
                } else {
                    lex_ranked(priority, a, b)
                }
            }
            Repr::GrevLex { priority, roster } => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    if *roster {
                        grevlex_by_id(a.factors(), b.factors())
                    } else {
                        grevlex_ranked(priority, a, b)
                    }
                }
                d => d,
            },
            Repr::Elim { block, inner } => {
                let (a_in, a_out) = split(a, block);
                let (b_in, b_out) = split(b, block);
                match lex_by_id(&a_in, &b_in) {
                    Ordering::Equal => inner.compare(
                        &Monomial::from_pairs(&a_out),
                        &Monomial::from_pairs(&b_out),
                    ),
                    d => d,
                }
            }
        }
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Lex compare where ascending variable id is descending priority.
fn lex_by_id(a: &[(VarId, u16)], b: &[(VarId, u16)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                // The side holding the higher-priority variable wins.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (None, None) => return Ordering::Equal,
        }
    }
}

/// Reverse-lex tiebreak at equal total degree: walking from the lowest
/// priority upward, the first side with the larger exponent loses.
fn grevlex_by_id(a: &[(VarId, u16)], b: &[(VarId, u16)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i.checked_sub(1).map(|k| a[k]), j.checked_sub(1).map(|k| b[k])) {
            (Some((va, ea)), Some((vb, eb))) => match va.cmp(&vb) {
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            },
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
    }
}

fn ranked(priority: &[VarId], m: &Monomial) -> Vec<(usize, u16)> {
    let mut out: Vec<(usize, u16)> = m
        .factors()
        .iter()
        .map(|&(v, e)| {
            let rank = priority
                .iter()
                .position(|&p| p == v)
                .expect("monomial variable missing from priority list");
            (rank, e)
        })
        .collect();
    out.sort_unstable();
    out
}

fn lex_ranked(priority: &[VarId], a: &Monomial, b: &Monomial) -> Ordering {
    let ra = ranked(priority, a);
    let rb = ranked(priority, b);
    let (mut i, mut j) = (0, 0);
    loop {
        match (ra.get(i), rb.get(j)) {
            (Some(&(ka, ea)), Some(&(kb, eb))) => match ka.cmp(&kb) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (None, None) => return Ordering::Equal,
        }
    }
}

fn grevlex_ranked(priority: &[VarId], a: &Monomial, b: &Monomial) -> Ordering {
    let ra = ranked(priority, a);
    let rb = ranked(priority, b);
    let (mut i, mut j) = (ra.len(), rb.len());
    loop {
        match (i.checked_sub(1).map(|k| ra[k]), j.checked_sub(1).map(|k| rb[k])) {
            (Some((ka, ea)), Some((kb, eb))) => match ka.cmp(&kb) {
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            },
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
    }
}

fn split(m: &Monomial, block: &[VarId]) -> (Vec<(VarId, u16)>, Vec<(VarId, u16)>) {
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for &(v, e) in m.factors() {
        if block.binary_search(&v).is_ok() {
            inside.push((v, e));
        } else {
            outside.push((v, e));
        }
    }
    (inside, outside)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn grid22() -> Ring<Rationals> {
        Ring::grid(2, 2, Rationals).unwrap()
    }

    #[test]
    fn diaglex_ranks_the_diagonal_of_the_determinant_first() {
        let r = grid22();
        let ord = MonomialOrder::diaglex(&r);
        let x11 = r.var_grid(1, 1).unwrap();
        let x12 = r.var_grid(1, 2).unwrap();
        let x21 = r.var_grid(2, 1).unwrap();
        let x22 = r.var_grid(2, 2).unwrap();
        let diag = Monomial::from_pairs(&[(x11, 1), (x22, 1)]);
        let anti = Monomial::from_pairs(&[(x12, 1), (x21, 1)]);
        assert_eq!(ord.compare(&diag, &anti), Ordering::Greater);
        assert_eq!(ord.compare(&Monomial::var(x11), &Monomial::var(x12)), Ordering::Greater);
        assert_eq!(ord.compare(&Monomial::var(x12), &Monomial::var(x21)), Ordering::Greater);
    }

    #[test]
    fn lex_beats_degree_but_grevlex_grades_first() {
        let r = grid22();
        let x11 = r.var_grid(1, 1).unwrap();
        let x22 = r.var_grid(2, 2).unwrap();
        let lex = MonomialOrder::diaglex(&r);
        let grev = MonomialOrder::grevlex(
            (0..r.num_vars()).map(|i| VarId(i as u16)).collect(),
        )
        .unwrap();
        let a = Monomial::var(x11);
        let b = Monomial::from_pairs(&[(x22, 3)]);
        assert_eq!(lex.compare(&a, &b), Ordering::Greater);
        assert_eq!(grev.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn grevlex_tiebreak_penalizes_the_low_priority_variable() {
        let r = grid22();
        let x11 = r.var_grid(1, 1).unwrap();
        let x12 = r.var_grid(1, 2).unwrap();
        let x21 = r.var_grid(2, 1).unwrap();
        let grev = MonomialOrder::grevlex(
            (0..r.num_vars()).map(|i| VarId(i as u16)).collect(),
        )
        .unwrap();
        // x11*x21 vs x12^2: same degree; x21 is lower priority than x12, so
        // the monomial containing x21 is smaller.
        let a = Monomial::from_pairs(&[(x11, 1), (x21, 1)]);
        let b = Monomial::from_pairs(&[(x12, 2)]);
        assert_eq!(grev.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let r = grid22().with_extra_aux(1).unwrap();
        let ord = MonomialOrder::eliminate_aux(&r).unwrap();
        let t = r.var_aux(0).unwrap();
        let x11 = r.var_grid(1, 1).unwrap();
        let x22 = r.var_grid(2, 2).unwrap();
        let with_t = Monomial::from_pairs(&[(t, 1), (x22, 1)]);
        let without = Monomial::from_pairs(&[(x11, 5), (x22, 2)]);
        assert_eq!(ord.compare(&with_t, &without), Ordering::Greater);
        let base_a = Monomial::var(x11);
        let base_b = Monomial::var(x22);
        assert_eq!(ord.compare(&base_a, &base_b), Ordering::Greater);
    }

    #[test]
    fn custom_priority_reverses_verdicts() {
        let r = grid22();
        let x11 = r.var_grid(1, 1).unwrap();
        let x22 = r.var_grid(2, 2).unwrap();
        let reversed = MonomialOrder::lex(
            (0..r.num_vars()).rev().map(|i| VarId(i as u16)).collect(),
        )
        .unwrap();
        assert_eq!(
            reversed.compare(&Monomial::var(x11), &Monomial::var(x22)),
            Ordering::Less
        );
        assert!(MonomialOrder::lex(alloc::vec![VarId(0), VarId(0)]).is_err());
    }
}
