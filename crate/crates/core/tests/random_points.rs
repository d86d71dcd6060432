//! Randomized checks of the parameter map for interval ideals: sampled
//! points land inside the variety, and the recovery algorithm reads the
//! sequence back off the matrix.

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use minorprime_core::matrix::{eval_on_matrix, NumericMatrix};
use minorprime_core::sequences::{
    build_poset, enumerate_prime_sequences, matrix_to_sequence, phi, sample_phi_point,
    sequence_to_ideal,
};
use minorprime_core::{Interval, Rationals, Ring};

#[test]
fn sampled_points_annihilate_their_interval_ideal() {
    for (m, n, seed) in [(3u16, 6u16, 0x3600u64), (4, 7, 0x4700)] {
        let ring = Ring::grid(m, n, Rationals).unwrap();
        let gammas = enumerate_prime_sequences(m, n).unwrap();
        for (idx, gamma) in gammas.iter().enumerate() {
            let poset = build_poset(gamma).unwrap();
            let gens = sequence_to_ideal(&ring, gamma).unwrap().generators().to_vec();
            let mut rng = ChaCha20Rng::seed_from_u64(seed + idx as u64);
            for _ in 0..100 {
                let point = sample_phi_point(&poset, &mut rng);
                let x = phi(&poset, &point).unwrap();
                for g in &gens {
                    assert!(
                        eval_on_matrix(&ring, g, &x).unwrap().is_zero(),
                        "built point escapes the ideal of {gamma:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn recovered_sequences_annihilate_the_matrix_that_produced_them() {
    let shapes = [(2u16, 4u16), (2, 6), (3, 5), (3, 6), (4, 6), (4, 7)];
    let mut produced = 0usize;
    let mut rng = ChaCha20Rng::seed_from_u64(0xa1904);
    'outer: loop {
        for &(m, n) in &shapes {
            let ring = Ring::grid(m, n, Rationals).unwrap();
            for gamma in enumerate_prime_sequences(m, n).unwrap() {
                let poset = build_poset(&gamma).unwrap();
                let point = sample_phi_point(&poset, &mut rng);
                let x = phi(&poset, &point).unwrap();
                let recovered = matrix_to_sequence(&x).unwrap();
                let gens = sequence_to_ideal(&ring, &recovered).unwrap();
                for g in gens.generators() {
                    assert!(
                        eval_on_matrix(&ring, g, &x).unwrap().is_zero(),
                        "matrix built from {gamma:?} escapes the ideal of {recovered:?}"
                    );
                }
                produced += 1;
                if produced == 200 {
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(produced, 200);
}

#[test]
fn zero_matrix_recovers_the_halved_cover() {
    let x = NumericMatrix::zero(3, 6);
    let gamma = matrix_to_sequence(&x).unwrap();
    assert_eq!(
        gamma.intervals(),
        &[Interval::new(0, 3).unwrap(), Interval::new(3, 7).unwrap()]
    );
    // The zero matrix sits inside the recovered ideal's variety too.
    let ring = Ring::grid(3, 6, Rationals).unwrap();
    for g in sequence_to_ideal(&ring, &gamma).unwrap().generators() {
        assert!(eval_on_matrix(&ring, g, &x).unwrap().is_zero());
    }
}
