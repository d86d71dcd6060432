//! Buchberger's algorithm with the normal selection strategy and the
//! coprimality and chain criteria, plus reduction of the final basis to the
//! unique reduced, canonically scaled form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

use super::divide::normal_form;

/// Default cap on S-polynomial reductions per basis computation.
pub const DEFAULT_PAIR_BUDGET: usize = 50_000;

/// S-polynomial of two nonzero polynomials sorted under `ord`; leading terms
/// cancel by construction.
pub fn s_polynomial<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Polynomial<F> {
    let (fc, fm) = f.leading_term().unwrap();
    let (gc, gm) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let uf = fm.div_into(&l).unwrap();
    let ug = gm.div_into(&l).unwrap();
    let a = f.mul_term(&field.inv(fc).unwrap(), &uf, field);
    let b = g.mul_term(&field.inv(gc).unwrap(), &ug, field);
    a.sub(&b, field, ord)
}

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`.
/// Deterministic: output depends only on the ideal, the order, and the field.
/// Fails with a budget error after `max_pairs` S-polynomial reductions.
pub fn buchberger<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    gens: &[Polynomial<F>],
    max_pairs: usize,
) -> Result<Vec<Polynomial<F>>, Error> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = g.resorted(ord).normalized(field);
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    // Pending pairs keyed by (lcm degree, i, j): popping the first key is the
    // normal strategy. `live` mirrors the key set for the chain criterion.
    let mut pending: BTreeMap<(u32, usize, usize), Monomial> = BTreeMap::new();
    let mut live: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            queue_pair(&basis, i, j, &mut pending, &mut live);
        }
    }

    let mut reductions = 0usize;
    while let Some((&key, _)) = pending.iter().next() {
        let (_, i, j) = key;
        let lcm = pending.remove(&key).unwrap();
        live.remove(&(i, j));
        if chain_superfluous(&basis, &live, i, j, &lcm) {
            continue;
        }
        if reductions >= max_pairs {
            return Err(Error::BudgetExceeded { pairs: reductions });
        }
        reductions += 1;
        let s = s_polynomial(field, ord, &basis[i], &basis[j]);
        let r = normal_form(field, ord, &s, &basis);
        if r.is_zero() {
            continue;
        }
        let new = basis.len();
        basis.push(r.normalized(field));
        for k in 0..new {
            queue_pair(&basis, k, new, &mut pending, &mut live);
        }
    }
    Ok(reduce_basis(field, ord, basis))
}

/// Queues pair (i, j) unless the leading monomials are coprime, in which case
/// its S-polynomial reduces to zero and the pair counts as treated.
fn queue_pair<F: Field>(
    basis: &[Polynomial<F>],
    i: usize,
    j: usize,
    pending: &mut BTreeMap<(u32, usize, usize), Monomial>,
    live: &mut BTreeSet<(usize, usize)>,
) {
    let a = basis[i].leading_monomial().unwrap();
    let b = basis[j].leading_monomial().unwrap();
    if a.is_coprime_with(b) {
        return;
    }
    let l = a.lcm(b);
    pending.insert((l.degree(), i, j), l);
    live.insert((i, j));
}

/// Chain criterion: (i, j) is superfluous when some third leading monomial
/// divides lcm(i, j) and both smaller pairs are already treated. Treated
/// means popped earlier or skipped as coprime, never still pending, which
/// grounds every skip in genuinely reduced pairs.
fn chain_superfluous<F: Field>(
    basis: &[Polynomial<F>],
    live: &BTreeSet<(usize, usize)>,
    i: usize,
    j: usize,
    lcm: &Monomial,
) -> bool {
    let done = |a: usize, b: usize| !live.contains(&(a.min(b), a.max(b)));
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leading_monomial().unwrap().divides(lcm)
            && done(i, k)
            && done(j, k)
    })
}

/// Minimalizes, fully reduces, canonically scales, and sorts a Groebner basis
/// by descending leading monomial.
pub(crate) fn reduce_basis<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    mut basis: Vec<Polynomial<F>>,
) -> Vec<Polynomial<F>> {
    // Ascending leading monomials: any divisor of a leading term precedes it.
    basis.sort_by(|a, b| {
        ord.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut kept: Vec<Polynomial<F>> = Vec::new();
    for g in basis {
        let lt = g.leading_monomial().unwrap();
        if !kept.iter().any(|h| h.leading_monomial().unwrap().divides(lt)) {
            kept.push(g);
        }
    }
    // Tail reduction: leading terms are an antichain, so they survive, and
    // later updates never change another element's reducibility.
    for i in 0..kept.len() {
        let others: Vec<Polynomial<F>> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        kept[i] = normal_form(field, ord, &kept[i], &others).normalized(field);
    }
    kept.sort_by(|a, b| {
        ord.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::minors;
    use crate::ring::Ring;
    use crate::text;

    #[test]
    fn single_generator_is_its_own_basis() {
        let r = Ring::grid(2, 2, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        let d = minors::adjacent_minors(&r, 2).unwrap().remove(0);
        let gb = buchberger(&Rationals, &ord, &[d.clone()], DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(gb, alloc::vec![d]);
    }

    #[test]
    fn coprime_leading_terms_pass_through() {
        let r = Ring::grid(2, 3, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        let gens = minors::adjacent_minors(&r, 2).unwrap();
        let gb = buchberger(&Rationals, &ord, &gens, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(gb, gens);
    }

    #[test]
    fn all_minors_of_a_2x3_are_already_a_basis() {
        let r = Ring::grid(2, 3, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        let gens = minors::submatrix_minors(&r, 0, 4, 2).unwrap();
        assert_eq!(gens.len(), 3);
        let gb = buchberger(&Rationals, &ord, &gens, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(gb.len(), 3);
        for g in &gens {
            assert!(normal_form(&Rationals, &ord, g, &gb).is_zero());
        }
    }

    #[test]
    fn reduction_produces_new_elements_when_needed() {
        // x^2 + y and xy + x: their S-pair chain generates more elements.
        let r = Ring::grid(1, 2, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        let x = r.var_grid(1, 1).unwrap();
        let y = r.var_grid(1, 2).unwrap();
        let one = Rationals.from_i64(1);
        let f = Polynomial::from_terms(
            &Rationals,
            &ord,
            alloc::vec![
                (one.clone(), Monomial::from_pairs(&[(x, 2)])),
                (one.clone(), Monomial::var(y)),
            ],
        );
        let g = Polynomial::from_terms(
            &Rationals,
            &ord,
            alloc::vec![
                (one.clone(), Monomial::from_pairs(&[(x, 1), (y, 1)])),
                (one.clone(), Monomial::var(x)),
            ],
        );
        let gb = buchberger(&Rationals, &ord, &[f, g], DEFAULT_PAIR_BUDGET).unwrap();
        let printed: Vec<_> = gb.iter().map(|p| text::print(&r, p)).collect();
        // Reduced basis: x^2 + y, x*y + x, y^2 + y (S-pair fallout).
        assert_eq!(
            printed,
            alloc::vec![
                "x[1,1]^2 + x[1,2]",
                "x[1,1]*x[1,2] + x[1,1]",
                "x[1,2]^2 + x[1,2]"
            ]
        );
    }

    #[test]
    fn budget_zero_fails_when_any_reduction_is_needed() {
        let r = Ring::grid(2, 3, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        // All three 2x2 minors of a 2x3: leading terms share variables, so at
        // least one pair reaches the reduction step.
        let gens = minors::submatrix_minors(&r, 0, 4, 2).unwrap();
        match buchberger(&Rationals, &ord, &gens, 0) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn shuffled_generators_give_the_same_reduced_basis() {
        let r = Ring::grid(3, 4, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        let gens = minors::submatrix_minors(&r, 0, 5, 2).unwrap();
        let forward = buchberger(&Rationals, &ord, &gens, DEFAULT_PAIR_BUDGET).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        let backward = buchberger(&Rationals, &ord, &reversed, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(forward, backward);
        assert!(!forward.is_empty());
    }
}
