//! Ideal intersection and saturation through elimination of one auxiliary
//! variable. Both constructions return ideals of the original ring whose
//! basis cache is pre-seeded: the auxiliary-free part of a reduced
//! elimination basis is itself the reduced basis for the inner order.

use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

use super::buchberger::buchberger;
use super::Ideal;

/// I ∩ J via ⟨t·I, (1−t)·J⟩ with t eliminated.
pub fn intersect<F: Field>(
    a: &Ideal<F>,
    b: &Ideal<F>,
    max_pairs: usize,
) -> Result<Ideal<F>, Error> {
    let ring = shared_base_ring(a, b)?;
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::new(ring, Vec::new());
    }
    let field = ring.field().clone();
    let ext = ring.with_extra_aux(1)?;
    let t = ext.var_aux(0)?;
    let ord = MonomialOrder::eliminate_aux(&ext)?;
    let t_mono = Monomial::var(t);
    let one_minus_t = Polynomial::from_terms(
        &field,
        &ord,
        alloc::vec![
            (field.one(), Monomial::one()),
            (field.neg(&field.one()), t_mono.clone()),
        ],
    );
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for g in a.generators() {
        // Multiplying by the single term t preserves sortedness.
        gens.push(g.mul_term(&field.one(), &t_mono, &field));
    }
    for h in b.generators() {
        gens.push(h.mul(&one_minus_t, &field, &ord));
    }
    project(ring, buchberger(&field, &ord, &gens, max_pairs)?, t)
}

/// Intersection of a family, folded left to right.
pub fn intersect_all<F: Field>(
    ideals: &[Ideal<F>],
    max_pairs: usize,
) -> Result<Ideal<F>, Error> {
    let Some((first, rest)) = ideals.split_first() else {
        return Err(Error::Invalid("intersection of an empty family".into()));
    };
    let mut acc = first.clone();
    for next in rest {
        acc = intersect(&acc, next, max_pairs)?;
    }
    Ok(acc)
}

/// I : f^∞. A term multiple of variables is saturated variable by variable;
/// otherwise one pass with the auxiliary relation 1 − y·f.
pub fn saturate<F: Field>(
    i: &Ideal<F>,
    f: &Polynomial<F>,
    max_pairs: usize,
) -> Result<Ideal<F>, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if i.ring().aux_count() != 0 {
        return Err(Error::ContextMismatch("saturation needs an auxiliary-free ring".into()));
    }
    let field = i.ring().field().clone();
    if f.num_terms() == 1 {
        // Saturating by a product is composition of single saturations, and
        // exponents and the unit coefficient do not matter.
        let mono = f.terms()[0].1.clone();
        let mut acc = i.clone();
        for v in mono.support() {
            acc = saturate_single(&acc, &Polynomial::var(&field, v), max_pairs)?;
        }
        return Ok(acc);
    }
    saturate_single(i, f, max_pairs)
}

fn saturate_single<F: Field>(
    i: &Ideal<F>,
    f: &Polynomial<F>,
    max_pairs: usize,
) -> Result<Ideal<F>, Error> {
    let ring = i.ring().clone();
    let field = ring.field().clone();
    let ext = ring.with_extra_aux(1)?;
    let y = ext.var_aux(0)?;
    let ord = MonomialOrder::eliminate_aux(&ext)?;
    let one = Polynomial::constant(&field, field.one());
    let relation = one.sub(
        &f.resorted(&ord).mul_term(&field.one(), &Monomial::var(y), &field),
        &field,
        &ord,
    );
    let mut gens: Vec<Polynomial<F>> = Vec::with_capacity(i.generators().len() + 1);
    // Auxiliary-free polynomials are already sorted for the elimination
    // order: it restricts to the inner diaglex on them.
    gens.extend_from_slice(i.generators());
    gens.push(relation);
    project(ring, buchberger(&field, &ord, &gens, max_pairs)?, y)
}

/// Keeps the auxiliary-free part of a reduced elimination basis and seeds
/// the result's cache with it under the inner diaglex order.
fn project<F: Field>(
    ring: Ring<F>,
    basis: Vec<Polynomial<F>>,
    aux: crate::ring::VarId,
) -> Result<Ideal<F>, Error> {
    let kept: Vec<Polynomial<F>> = basis
        .into_iter()
        .filter(|p| !p.support().contains(&aux))
        .collect();
    Ideal::from_basis(ring.clone(), MonomialOrder::diaglex(&ring), kept)
}

fn shared_base_ring<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ring<F>, Error> {
    if a.ring() != b.ring() {
        return Err(Error::ContextMismatch("ideals live in different rings".into()));
    }
    if a.ring().aux_count() != 0 {
        return Err(Error::ContextMismatch("intersection needs an auxiliary-free ring".into()));
    }
    Ok(a.ring().clone())
}
