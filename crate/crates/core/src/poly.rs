//! Sparse multivariate polynomials with terms kept strictly descending in a
//! caller-chosen monomial order.
//!
//! Every operation that can disturb term order takes the active order as an
//! argument and restores sortedness; multiplying by a single term relies on
//! orders being multiplicative and keeps the existing arrangement. The zero
//! polynomial is the empty term list.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Error;
use crate::field::{canonicalize, Field};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::{Ring, VarId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    terms: Vec<(F::Elem, Monomial)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        if field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: alloc::vec![(c, Monomial::one())] }
        }
    }

    pub fn var(field: &F, v: VarId) -> Self {
        Polynomial { terms: alloc::vec![(field.one(), Monomial::var(v))] }
    }

    pub fn term(field: &F, c: F::Elem, m: Monomial) -> Self {
        if field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: alloc::vec![(c, m)] }
        }
    }

    /// Builds from arbitrary (coefficient, monomial) pairs: merges duplicate
    /// monomials, drops zero coefficients, sorts descending under `ord`.
    pub fn from_terms(field: &F, ord: &MonomialOrder, pairs: Vec<(F::Elem, Monomial)>) -> Self {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (c, m) in pairs {
            match acc.get_mut(&m) {
                Some(slot) => *slot = field.add(slot, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(F::Elem, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
        Polynomial { terms }
    }

    /// Wraps terms already strictly descending in the active order with no
    /// zero coefficients. Callers guarantee both.
    pub(crate) fn from_sorted_terms(terms: Vec<(F::Elem, Monomial)>) -> Self {
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial)] {
        &self.terms
    }

    pub fn leading_term(&self) -> Result<(&F::Elem, &Monomial), Error> {
        self.terms.first().map(|(c, m)| (c, m)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial, Error> {
        Ok(self.leading_term()?.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.degree()).max().unwrap_or(0)
    }

    pub fn support(&self) -> BTreeSet<VarId> {
        let mut out = BTreeSet::new();
        for (_, m) in &self.terms {
            out.extend(m.support());
        }
        out
    }

    /// All variables lie inside `ring`.
    pub fn fits_ring(&self, ring: &Ring<F>) -> bool {
        self.terms
            .iter()
            .all(|(_, m)| m.support().all(|v| ring.contains_var(v)))
    }

    pub fn add(&self, other: &Self, field: &F, ord: &MonomialOrder) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match ord.compare(ma, mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    debug_assert_eq!(ma, mb, "order reported Equal on distinct monomials");
                    let c = field.add(ca, cb);
                    if !field.is_zero(&c) {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial { terms: out }
    }

    pub fn neg(&self, field: &F) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(c, m)| (field.neg(c), m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self, field: &F, ord: &MonomialOrder) -> Self {
        self.add(&other.neg(field), field, ord)
    }

    /// Multiplication by one term; term order is preserved because monomial
    /// orders are multiplicative.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial, field: &F) -> Self {
        if field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(ca, ma)| (field.mul(ca, c), ma.mul(m)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem, field: &F) -> Self {
        self.mul_term(c, &Monomial::one(), field)
    }

    pub fn mul(&self, other: &Self, field: &F, ord: &MonomialOrder) -> Self {
        let mut acc: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = field.add(slot, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(F::Elem, Monomial)> = acc
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
        Polynomial { terms }
    }

    /// Canonical scaling: primitive integer with positive leading coefficient
    /// over the rationals, monic over a prime field.
    pub fn normalized(&self, field: &F) -> Self {
        let mut coeffs: Vec<F::Elem> = self.terms.iter().map(|(c, _)| c.clone()).collect();
        canonicalize(field, &mut coeffs);
        Polynomial {
            terms: coeffs
                .into_iter()
                .zip(self.terms.iter().map(|(_, m)| m.clone()))
                .collect(),
        }
    }

    /// Re-sorts the terms under a different active order.
    pub fn resorted(&self, ord: &MonomialOrder) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ord.compare(&b.1, &a.1));
        Polynomial { terms }
    }

    /// Substitutes values for variables. Exponents stay small, so powers are
    /// computed by repeated multiplication.
    pub fn eval(&self, field: &F, value: impl Fn(VarId) -> F::Elem) -> F::Elem {
        let mut total = field.zero();
        for (c, m) in &self.terms {
            let mut prod = c.clone();
            for &(v, e) in m.factors() {
                let val = value(v);
                for _ in 0..e {
                    prod = field.mul(&prod, &val);
                }
            }
            total = field.add(&total, &prod);
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn setup() -> (Ring<Rationals>, MonomialOrder) {
        let r = Ring::grid(2, 2, Rationals).unwrap();
        let ord = MonomialOrder::diaglex(&r);
        (r, ord)
    }

    fn det22(r: &Ring<Rationals>, ord: &MonomialOrder) -> Polynomial<Rationals> {
        let f = *r.field();
        let x = |i, j| r.var_grid(i, j).unwrap();
        Polynomial::from_terms(
            &f,
            ord,
            alloc::vec![
                (f.from_i64(1), Monomial::from_pairs(&[(x(1, 1), 1), (x(2, 2), 1)])),
                (f.from_i64(-1), Monomial::from_pairs(&[(x(1, 2), 1), (x(2, 1), 1)])),
            ],
        )
    }

    #[test]
    fn determinant_leading_term_is_the_diagonal() {
        let (r, ord) = setup();
        let d = det22(&r, &ord);
        let (c, m) = d.leading_term().unwrap();
        assert_eq!(*c, Rationals.from_i64(1));
        assert_eq!(
            *m,
            Monomial::from_pairs(&[
                (r.var_grid(1, 1).unwrap(), 1),
                (r.var_grid(2, 2).unwrap(), 1)
            ])
        );
    }

    #[test]
    fn arithmetic_identities() {
        let (r, ord) = setup();
        let f = *r.field();
        let d = det22(&r, &ord);
        let sum = d.add(&d.neg(&f), &f, &ord);
        assert!(sum.is_zero());
        assert!(sum.leading_term().is_err());

        let x11 = Polynomial::var(&f, r.var_grid(1, 1).unwrap());
        let prod = d.mul(&x11, &f, &ord);
        assert_eq!(prod.num_terms(), 2);
        assert_eq!(prod.total_degree(), 3);
    }

    #[test]
    fn from_terms_merges_duplicates() {
        let (r, ord) = setup();
        let f = *r.field();
        let m = Monomial::var(r.var_grid(1, 1).unwrap());
        let p = Polynomial::from_terms(
            &f,
            &ord,
            alloc::vec![
                (f.from_i64(2), m.clone()),
                (f.from_i64(3), m.clone()),
                (f.from_i64(-5), m.clone())
            ],
        );
        assert!(p.is_zero());
    }

    #[test]
    fn evaluation_of_the_determinant() {
        let (r, ord) = setup();
        let f = *r.field();
        let d = det22(&r, &ord);
        // Entries 1,2,3,4 row-major: det = 1*4 - 2*3 = -2.
        let val = d.eval(&f, |v| f.from_i64(v.0 as i64 + 1));
        assert_eq!(val, f.from_i64(-2));
    }

    #[test]
    fn normalization_clears_denominators() {
        let (r, ord) = setup();
        let f = *r.field();
        let x = |i, j| r.var_grid(i, j).unwrap();
        let p = Polynomial::from_terms(
            &f,
            &ord,
            alloc::vec![
                (
                    num_rational::BigRational::new(num_bigint::BigInt::from(-1), num_bigint::BigInt::from(2)),
                    Monomial::var(x(1, 1))
                ),
                (f.from_i64(2), Monomial::var(x(2, 2))),
            ],
        );
        let n = p.normalized(&f);
        assert_eq!(n.terms()[0].0, f.from_i64(1));
        assert_eq!(n.terms()[1].0, f.from_i64(-4));
    }
}
