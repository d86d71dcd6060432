//! Multivariate division: normal forms and full division with quotient
//! witnesses.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;

/// Outcome of dividing `f` by a list of divisors:
/// f = sum(quotients[i] * divisors[i]) + remainder.
#[derive(Clone, Debug)]
pub struct Division<F: Field> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

/// Full division recording one quotient per divisor.
pub fn divide<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
) -> Division<F> {
    let mut collected: Vec<Vec<(F::Elem, Monomial)>> = divisors.iter().map(|_| Vec::new()).collect();
    let remainder = run(field, ord, f, divisors, Some(&mut collected));
    Division {
        quotients: collected
            .into_iter()
            .map(|terms| Polynomial::from_terms(field, ord, terms))
            .collect(),
        remainder,
    }
}

/// Remainder of `f` modulo `divisors`: no remainder term is divisible by any
/// divisor's leading monomial.
pub fn normal_form<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
) -> Polynomial<F> {
    run(field, ord, f, divisors, None)
}

fn run<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    mut quotients: Option<&mut Vec<Vec<(F::Elem, Monomial)>>>,
) -> Polynomial<F> {
    let leads: Vec<Option<(&F::Elem, &Monomial)>> =
        divisors.iter().map(|g| g.leading_term().ok()).collect();
    let mut work: Vec<(F::Elem, Monomial)> = f.terms().to_vec();
    let mut rem: Vec<(F::Elem, Monomial)> = Vec::new();
    'terms: while let Some((c, t)) = work.first().cloned() {
        for (gi, lead) in leads.iter().enumerate() {
            let Some((gc, gm)) = lead else { continue };
            if let Some(u) = gm.div_into(&t) {
                // Unwrap is fine: field elements of a nonzero leading term.
                let k = field.div(&c, gc).unwrap();
                work = sub_scaled(field, ord, &work, &k, &u, divisors[gi].terms());
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[gi].push((k, u));
                }
                continue 'terms;
            }
        }
        rem.push((c, t));
        work.remove(0);
    }
    // Each moved term was strictly below its predecessor, so rem is sorted.
    Polynomial::from_sorted_terms(rem)
}

/// `a - k * u * g` for term lists sorted descending under `ord`. The leading
/// term of `a` is constructed to cancel when called from the division loop.
fn sub_scaled<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    a: &[(F::Elem, Monomial)],
    k: &F::Elem,
    u: &Monomial,
    g: &[(F::Elem, Monomial)],
) -> Vec<(F::Elem, Monomial)> {
    let mut out = Vec::with_capacity(a.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut gm: Option<Monomial> = g.first().map(|(_, m)| u.mul(m));
    while i < a.len() {
        let Some(cur) = gm.as_ref() else {
            out.extend_from_slice(&a[i..]);
            return out;
        };
        match ord.compare(&a[i].1, cur) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((field.neg(&field.mul(k, &g[j].0)), gm.take().unwrap()));
                j += 1;
                gm = g.get(j).map(|(_, m)| u.mul(m));
            }
            Ordering::Equal => {
                let c = field.sub(&a[i].0, &field.mul(k, &g[j].0));
                if !field.is_zero(&c) {
                    out.push((c, gm.take().unwrap()));
                } else {
                    gm = None;
                }
                i += 1;
                j += 1;
                if gm.is_none() {
                    gm = g.get(j).map(|(_, m)| u.mul(m));
                }
            }
        }
    }
    while j < g.len() {
        out.push((field.neg(&field.mul(k, &g[j].0)), gm.take().unwrap()));
        j += 1;
        gm = g.get(j).map(|(_, m)| u.mul(m));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::minors;
    use crate::ring::Ring;
    use crate::text;

    fn setup() -> (Ring<Rationals>, MonomialOrder, Polynomial<Rationals>) {
        let r = Ring::grid(2, 2, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        let d = minors::adjacent_minors(&r, 2).unwrap().remove(0);
        (r, ord, d)
    }

    #[test]
    fn generator_reduces_to_zero() {
        let (_, ord, d) = setup();
        assert!(normal_form(&Rationals, &ord, &d, &[d.clone()]).is_zero());
    }

    #[test]
    fn one_step_reduction_leaves_the_trailing_term() {
        let (r, ord, d) = setup();
        let lead = Polynomial::term(&Rationals, Rationals.from_i64(1), d.terms()[0].1.clone());
        let nf = normal_form(&Rationals, &ord, &lead, &[d.clone()]);
        assert_eq!(text::print(&r, &nf), "x[1,2]*x[2,1]");
    }

    #[test]
    fn quotients_reassemble_the_dividend() {
        let (r, ord, d) = setup();
        // f = d^2 + 3d + x[1,2]: quotient d + 3, remainder x[1,2].
        let x12 = Polynomial::var(&Rationals, r.var_grid(1, 2).unwrap());
        let f = d
            .mul(&d, &Rationals, &ord)
            .add(&d.scale(&Rationals.from_i64(3), &Rationals), &Rationals, &ord)
            .add(&x12, &Rationals, &ord);
        let division = divide(&Rationals, &ord, &f, &[d.clone()]);
        assert_eq!(text::print(&r, &division.remainder), "x[1,2]");
        let mut back = division.remainder.clone();
        for (q, g) in division.quotients.iter().zip([&d]) {
            back = back.add(&q.mul(g, &Rationals, &ord), &Rationals, &ord);
        }
        assert_eq!(back, f);
    }
}
