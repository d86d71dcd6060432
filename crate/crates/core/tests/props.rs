//! Property tests for the polynomial kernel: arithmetic laws, order
//! compatibility of leading terms, and normal forms against a fixed basis.

use proptest::prelude::*;

use minorprime_core::groebner::normal_form;
use minorprime_core::minors::adjacent_minors;
use minorprime_core::{Field, Monomial, MonomialOrder, Polynomial, Rationals, Ring, VarId};

fn grid_ring() -> (Ring<Rationals>, MonomialOrder) {
    let ring = Ring::grid(2, 3, Rationals).unwrap();
    let ord = MonomialOrder::diaglex(&ring);
    (ring, ord)
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0u16..6, 1u16..3), 0..4)
        .prop_map(|factors| {
            let pairs: Vec<(VarId, u16)> = factors.into_iter().map(|(v, e)| (VarId(v), e)).collect();
            Monomial::from_pairs(&pairs)
        })
}

fn poly_strategy() -> impl Strategy<Value = Polynomial<Rationals>> {
    prop::collection::vec((-5i64..=5, monomial_strategy()), 0..5).prop_map(|terms| {
        let (_, ord) = grid_ring();
        let pairs = terms
            .into_iter()
            .map(|(c, m)| (Rationals.from_i64(c), m))
            .collect();
        Polynomial::from_terms(&Rationals, &ord, pairs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_distributes_over_addition(
        f in poly_strategy(),
        g in poly_strategy(),
        h in poly_strategy(),
    ) {
        let (_, ord) = grid_ring();
        let lhs = f.add(&g, &Rationals, &ord).mul(&h, &Rationals, &ord);
        let rhs = f.mul(&h, &Rationals, &ord).add(&g.mul(&h, &Rationals, &ord), &Rationals, &ord);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_monomials_are_multiplicative(f in poly_strategy(), g in poly_strategy()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (_, ord) = grid_ring();
        let product = f.mul(&g, &Rationals, &ord);
        // The coefficient field is a domain, so the product of the leading
        // terms never cancels.
        let expected = f
            .leading_monomial()
            .unwrap()
            .mul(g.leading_monomial().unwrap());
        prop_assert_eq!(product.leading_monomial().unwrap(), &expected);
    }

    #[test]
    fn normal_form_is_linear_and_idempotent(f in poly_strategy(), g in poly_strategy()) {
        let (ring, ord) = grid_ring();
        // Adjacent 2x2 minors of a 2x3 grid are already a reduced basis.
        let basis = adjacent_minors(&ring, 2).unwrap();
        let nf = |p: &Polynomial<Rationals>| normal_form(&Rationals, &ord, p, &basis);
        let sum = nf(&f.add(&g, &Rationals, &ord));
        prop_assert_eq!(sum, nf(&f).add(&nf(&g), &Rationals, &ord));
        prop_assert_eq!(nf(&nf(&f)), nf(&f));
    }

    #[test]
    fn multiples_of_the_basis_reduce_to_zero(f in poly_strategy(), pick in 0usize..2) {
        let (ring, ord) = grid_ring();
        let basis = adjacent_minors(&ring, 2).unwrap();
        let multiple = f.mul(&basis[pick], &Rationals, &ord);
        prop_assert!(normal_form(&Rationals, &ord, &multiple, &basis).is_zero());
    }
}
