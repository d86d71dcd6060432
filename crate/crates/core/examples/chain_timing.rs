//! Timing probe for the intersection chains behind the decomposition checks.

use std::time::Instant;

use minorprime_core::groebner::{intersect_all, Ideal, DEFAULT_PAIR_BUDGET};
use minorprime_core::{minors, MonomialOrder, Rationals, Ring};

fn window_ideal(
    ring: &Ring<Rationals>,
    intervals: &[(u16, u16)],
) -> Ideal<Rationals> {
    let (m, _) = ring.grid_dims().unwrap();
    let mut gens = Vec::new();
    for &(a, b) in intervals {
        gens.extend(minors::submatrix_minors(ring, a, b, m).unwrap());
    }
    for w in intervals.windows(2) {
        let (_, b1) = w[0];
        let (a2, _) = w[1];
        if b1 > a2 {
            let s = b1 - a2 + 1;
            gens.extend(minors::submatrix_minors(ring, a2, b1, s).unwrap());
        } else if b1 == a2 {
            gens.extend(minors::submatrix_minors(ring, a2, b1, 1).unwrap());
        }
    }
    Ideal::new(ring.clone(), gens).unwrap()
}

fn chain(label: &str, rows: u16, cols: u16, seqs: &[&[(u16, u16)]]) {
    let ring = Ring::grid(rows, cols, Rationals).unwrap();
    let ord = MonomialOrder::diaglex(&ring);
    let components: Vec<_> = seqs.iter().map(|s| window_ideal(&ring, s)).collect();
    let target = Ideal::new(
        ring.clone(),
        minors::adjacent_minors(&ring, rows).unwrap(),
    )
    .unwrap();
    let t0 = Instant::now();
    let meet = intersect_all(&components, DEFAULT_PAIR_BUDGET).unwrap();
    let t1 = Instant::now();
    let equal = meet.ideal_equal(&target, &ord, DEFAULT_PAIR_BUDGET).unwrap();
    let t2 = Instant::now();
    println!(
        "{label}: intersect {:?}, equality {:?}, equal = {equal}, basis size = {}",
        t1 - t0,
        t2 - t1,
        meet.groebner_basis(&ord, DEFAULT_PAIR_BUDGET).unwrap().polys().len()
    );
}

fn main() {
    chain("(3,4)", 3, 4, &[&[(0, 5)], &[(0, 3), (2, 5)]]);
    chain(
        "(3,5)",
        3,
        5,
        &[
            &[(0, 6)],
            &[(0, 3), (2, 6)],
            &[(0, 3), (3, 6)],
            &[(0, 4), (3, 6)],
        ],
    );
    chain(
        "(3,6)",
        3,
        6,
        &[
            &[(0, 7)],
            &[(0, 3), (2, 7)],
            &[(0, 3), (3, 7)],
            &[(0, 4), (3, 7)],
            &[(0, 4), (4, 7)],
            &[(0, 5), (4, 7)],
            &[(0, 3), (2, 5), (4, 7)],
        ],
    );
}
