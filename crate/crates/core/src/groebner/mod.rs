//! Ideal-theoretic toolbox built on Buchberger's algorithm: reduced bases
//! with caching, membership, equality, initial ideals, intersection,
//! saturation, and quotient invariants of monomial ideals.

mod buchberger;
mod divide;
mod elim;
mod monomial_ideal;

pub use buchberger::{buchberger, s_polynomial, DEFAULT_PAIR_BUDGET};
pub use divide::{divide, normal_form, Division};
pub use elim::{intersect, intersect_all, saturate};
pub use monomial_ideal::MonomialIdeal;

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::Error;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A reduced Groebner basis: minimal, tail-reduced, canonically scaled,
/// sorted by descending leading monomial. Unique for (ideal, order, field).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis<F: Field> {
    order: MonomialOrder,
    polys: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    /// Remainder of `f`, unique because the basis is a Groebner basis.
    pub fn normal_form(&self, field: &F, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(field, &self.order, &f.resorted(&self.order), &self.polys)
    }

    pub fn contains(&self, field: &F, f: &Polynomial<F>) -> bool {
        self.normal_form(field, f).is_zero()
    }
}

/// An ideal given by generators, with a cache of reduced bases per order.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
    cache: RefCell<BTreeMap<MonomialOrder, Rc<GroebnerBasis<F>>>>,
}

impl<F: Field> Ideal<F> {
    /// Drops zero generators and exact duplicates; every generator must fit
    /// the ring's variable roster.
    pub fn new(ring: Ring<F>, gens: Vec<Polynomial<F>>) -> Result<Self, Error> {
        let mut kept: Vec<Polynomial<F>> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            if !g.fits_ring(&ring) {
                return Err(Error::ContextMismatch(
                    "generator mentions variables outside the ring".into(),
                ));
            }
            if !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Ideal { ring, gens: kept, cache: RefCell::new(BTreeMap::new()) })
    }

    /// An ideal whose reduced basis under `ord` is already known; the basis
    /// doubles as the generator list.
    pub(crate) fn from_basis(
        ring: Ring<F>,
        ord: MonomialOrder,
        basis: Vec<Polynomial<F>>,
    ) -> Result<Self, Error> {
        let ideal = Ideal::new(ring, basis.clone())?;
        let gb = GroebnerBasis { order: ord.clone(), polys: basis };
        ideal.cache.borrow_mut().insert(ord, Rc::new(gb));
        Ok(ideal)
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced basis under `ord`, computed at most once per order.
    pub fn groebner_basis(
        &self,
        ord: &MonomialOrder,
        max_pairs: usize,
    ) -> Result<Rc<GroebnerBasis<F>>, Error> {
        if let Some(gb) = self.cache.borrow().get(ord) {
            return Ok(gb.clone());
        }
        let polys = buchberger(self.ring.field(), ord, &self.gens, max_pairs)?;
        let gb = Rc::new(GroebnerBasis { order: ord.clone(), polys });
        self.cache.borrow_mut().insert(ord.clone(), gb.clone());
        Ok(gb)
    }

    pub fn member(
        &self,
        f: &Polynomial<F>,
        ord: &MonomialOrder,
        max_pairs: usize,
    ) -> Result<bool, Error> {
        Ok(self.groebner_basis(ord, max_pairs)?.contains(self.ring.field(), f))
    }

    /// Containment of every generator of `self` in `other`.
    pub fn contained_in(
        &self,
        other: &Ideal<F>,
        ord: &MonomialOrder,
        max_pairs: usize,
    ) -> Result<bool, Error> {
        check_same_ring(self, other)?;
        let gb = other.groebner_basis(ord, max_pairs)?;
        Ok(self.gens.iter().all(|g| gb.contains(self.ring.field(), g)))
    }

    /// Equality via uniqueness of the reduced basis.
    pub fn ideal_equal(
        &self,
        other: &Ideal<F>,
        ord: &MonomialOrder,
        max_pairs: usize,
    ) -> Result<bool, Error> {
        check_same_ring(self, other)?;
        let a = self.groebner_basis(ord, max_pairs)?;
        let b = other.groebner_basis(ord, max_pairs)?;
        Ok(a.polys == b.polys)
    }

    /// Leading monomials of the reduced basis, as a monomial ideal.
    pub fn initial_ideal(
        &self,
        ord: &MonomialOrder,
        max_pairs: usize,
    ) -> Result<MonomialIdeal, Error> {
        Ok(MonomialIdeal::new(self.groebner_basis(ord, max_pairs)?.leading_monomials()))
    }
}

fn check_same_ring<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<(), Error> {
    if a.ring != b.ring {
        return Err(Error::ContextMismatch("ideals live in different rings".into()));
    }
    Ok(())
}

/// Buchberger's criterion applied to `gens` as given: true iff every
/// S-polynomial reduces to zero. Only the coprimality criterion skips pairs,
/// which never changes the verdict.
pub fn is_groebner_basis<F: Field>(
    field: &F,
    ord: &MonomialOrder,
    gens: &[Polynomial<F>],
) -> Result<bool, Error> {
    let gs: Vec<Polynomial<F>> = gens.iter().map(|g| g.resorted(ord)).collect();
    if gs.iter().any(|g| g.is_zero()) {
        return Err(Error::ZeroPolynomial);
    }
    for j in 1..gs.len() {
        for i in 0..j {
            let a = gs[i].leading_monomial().unwrap();
            let b = gs[j].leading_monomial().unwrap();
            if a.is_coprime_with(b) {
                continue;
            }
            let s = s_polynomial(field, ord, &gs[i], &gs[j]);
            if !normal_form(field, ord, &s, &gs).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No ideal contained in another: for each ordered pair, some generator of
/// the first lies outside the second.
pub fn pairwise_incomparable<F: Field>(
    ideals: &[Ideal<F>],
    ord: &MonomialOrder,
    max_pairs: usize,
) -> Result<bool, Error> {
    if ideals.len() < 2 {
        return Err(Error::Invalid("incomparability needs at least two ideals".into()));
    }
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if i != j && a.contained_in(b, ord, max_pairs)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
