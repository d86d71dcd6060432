//! Prime sequences of column intervals: the index set for the minimal primes
//! of the ideal of adjacent maximal minors of an m x n grid.
//!
//! A prime sequence on the phantom borders [0, n+1] is a list of intervals
//! [a_1,b_1],...,[a_k,b_k] with a_1 = 0, b_k = n+1, strictly increasing
//! starts and ends, b_i - a_i >= m, and 0 <= b_i - a_{i+1} <= m-2 for
//! consecutive pairs. Each sequence yields an ideal: the m x m minors of the
//! columns under every interval plus the maximal minors of the columns under
//! every consecutive overlap.

mod phi;
mod poset;
mod recover;

pub use phi::{phi, sample_phi_point, PhiPoint};
pub use poset::{build_poset, GammaPoset, NodeId, PosetNode};
pub use recover::matrix_to_sequence;

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::field::Field;
use crate::groebner::Ideal;
use crate::minors::submatrix_minors;
use crate::ring::Ring;

/// Closed interval of column borders. Endpoints may touch the phantom
/// columns 0 and n+1; a == b is a single border.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Interval {
    pub a: u16,
    pub b: u16,
}

impl Interval {
    pub fn new(a: u16, b: u16) -> Result<Self, Error> {
        if a > b {
            return Err(Error::Invalid(alloc::format!("interval [{a},{b}] is empty")));
        }
        Ok(Interval { a, b })
    }

    pub fn width(&self) -> u16 {
        self.b - self.a + 1
    }

    pub fn contains(&self, i: u16) -> bool {
        self.a <= i && i <= self.b
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let a = self.a.max(other.a);
        let b = self.b.min(other.b);
        (a <= b).then_some(Interval { a, b })
    }
}

impl core::fmt::Display for Interval {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// A valid interval sequence for an m x n grid. Construction validates all
/// four axioms, so a held value is always well formed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrimeSequence {
    m: u16,
    n: u16,
    intervals: Vec<Interval>,
}

impl PrimeSequence {
    pub fn new(m: u16, n: u16, intervals: &[(u16, u16)]) -> Result<Self, Error> {
        if m < 2 {
            return Err(Error::Invalid("prime sequences need at least two rows".into()));
        }
        if n == u16::MAX {
            return Err(Error::Invalid("column count leaves no room for the border n+1".into()));
        }
        let Some((&first, rest)) = intervals.split_first() else {
            return Err(Error::Invalid("a prime sequence has at least one interval".into()));
        };
        if first.0 != 0 {
            return Err(Error::Invalid("the first interval must start at the border 0".into()));
        }
        if intervals.last().unwrap().1 != n + 1 {
            return Err(Error::Invalid(alloc::format!(
                "the last interval must end at the border {}",
                n + 1
            )));
        }
        let mut prev = first;
        for &iv in intervals {
            if iv.0 > iv.1 || u32::from(iv.1) - u32::from(iv.0) < u32::from(m) {
                return Err(Error::Invalid(alloc::format!(
                    "interval [{},{}] is narrower than {m} allows",
                    iv.0,
                    iv.1
                )));
            }
        }
        for &iv in rest {
            if prev.0 >= iv.0 || prev.1 >= iv.1 {
                return Err(Error::Invalid(
                    "interval starts and ends must both strictly increase".into(),
                ));
            }
            if prev.1 < iv.0 || u32::from(prev.1) - u32::from(iv.0) > u32::from(m) - 2 {
                return Err(Error::Invalid(alloc::format!(
                    "overlap of [{},{}] and [{},{}] must have length 0..={}",
                    prev.0,
                    prev.1,
                    iv.0,
                    iv.1,
                    m - 2
                )));
            }
            prev = iv;
        }
        let intervals = intervals.iter().map(|&(a, b)| Interval { a, b }).collect();
        Ok(PrimeSequence { m, n, intervals })
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Overlaps [a_{i+1}, b_i] of consecutive intervals, possibly width 1.
    pub fn overlaps(&self) -> Vec<Interval> {
        self.intervals
            .windows(2)
            .map(|w| Interval { a: w[1].a, b: w[0].b })
            .collect()
    }
}

impl core::fmt::Display for PrimeSequence {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{{")?;
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{iv}")?;
        }
        write!(f, "}}")
    }
}

/// All prime sequences for an m x n grid, sorted lexicographically by the
/// vector of interval starts, ties broken by the vector of ends.
pub fn enumerate_prime_sequences(m: u16, n: u16) -> Result<Vec<PrimeSequence>, Error> {
    if m < 2 || u32::from(n) + 1 < u32::from(m) || n == u16::MAX {
        return Err(Error::Invalid(alloc::format!("no interval of width {m} fits in [0,{n}+1]")));
    }
    let mut acc: Vec<(u16, u16)> = Vec::new();
    let mut found: Vec<PrimeSequence> = Vec::new();
    extend_from(m, n, 0, &mut acc, &mut found);
    found.sort_by_key(|g| {
        let starts: Vec<u16> = g.intervals.iter().map(|iv| iv.a).collect();
        let ends: Vec<u16> = g.intervals.iter().map(|iv| iv.b).collect();
        (starts, ends)
    });
    Ok(found)
}

/// Depth-first extension: `start` is the forced start of the next interval
/// once `acc` is nonempty (the recursion branches on it), and every interval
/// end ranges over the values the axioms allow.
fn extend_from(m: u16, n: u16, start: u16, acc: &mut Vec<(u16, u16)>, out: &mut Vec<PrimeSequence>) {
    let border = u32::from(n) + 1;
    for b in (u32::from(start) + u32::from(m))..=border {
        acc.push((start, b as u16));
        if b == border {
            out.push(
                PrimeSequence::new(m, n, acc).expect("search only visits valid sequences"),
            );
        } else {
            // Next start keeps the overlap with the interval just placed
            // inside 0..=m-2.
            for a in (b + 2 - u32::from(m))..=b {
                extend_from(m, n, a as u16, acc, out);
            }
        }
        acc.pop();
    }
}

/// Number of prime sequences, by the order-m linear recurrence
/// f(k) = f(k-1) + ... + f(k-m) with f(1) = ... = f(m-2) = 0 and
/// f(m-1) = f(m) = 1.
pub fn count_prime_sequences(m: u16, n: u16) -> Result<BigUint, Error> {
    if m < 2 || n == 0 {
        return Err(Error::Invalid("counting needs m >= 2 and n >= 1".into()));
    }
    let m = m as usize;
    let n = n as usize;
    let mut f = alloc::vec![BigUint::zero(); n + 1];
    if m - 1 <= n {
        f[m - 1] = BigUint::one();
    }
    if m <= n {
        f[m] = BigUint::one();
    }
    for k in (m + 1)..=n {
        let mut total = BigUint::zero();
        for i in (k - m)..k {
            total += &f[i];
        }
        f[k] = total;
    }
    Ok(f[n].clone())
}

/// The ideal attached to a prime sequence: all m x m minors of the columns
/// under each interval (clipped to real columns) and all s x s minors of the
/// columns under each consecutive overlap, where s is the overlap width.
pub fn sequence_to_ideal<F: Field>(
    ring: &Ring<F>,
    gamma: &PrimeSequence,
) -> Result<Ideal<F>, Error> {
    let (m, n) = ring.grid_dims()?;
    if (m, n) != (gamma.m, gamma.n) {
        return Err(Error::ContextMismatch(alloc::format!(
            "sequence is for a {}x{} grid, ring is {m}x{n}",
            gamma.m,
            gamma.n
        )));
    }
    let mut gens = Vec::new();
    for iv in &gamma.intervals {
        // The sole degenerate window is the single interval of an
        // m x (m-1) grid, which carries no m x m minor at all.
        if u32::from(iv.b.min(n)) - u32::from(iv.a.max(1)) + 1 >= u32::from(m) {
            gens.extend(submatrix_minors(ring, iv.a, iv.b, m)?);
        }
    }
    for ov in gamma.overlaps() {
        gens.extend(submatrix_minors(ring, ov.a, ov.b, ov.width())?);
    }
    Ideal::new(ring.clone(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn seq(m: u16, n: u16, ivs: &[(u16, u16)]) -> PrimeSequence {
        PrimeSequence::new(m, n, ivs).unwrap()
    }

    #[test]
    fn validation_enforces_the_axioms() {
        assert!(PrimeSequence::new(3, 6, &[(0, 3), (3, 7)]).is_ok());
        assert!(PrimeSequence::new(3, 6, &[(0, 3), (2, 5), (4, 7)]).is_ok());
        // Width exactly m is the narrowest legal interval.
        assert!(PrimeSequence::new(3, 6, &[(0, 2), (2, 7)]).is_err());
        // Overlap length m-1 is one too long.
        assert!(PrimeSequence::new(3, 6, &[(0, 4), (2, 7)]).is_err());
        // Gap between intervals.
        assert!(PrimeSequence::new(4, 9, &[(0, 4), (5, 10)]).is_err());
        // Must span border to border.
        assert!(PrimeSequence::new(3, 6, &[(1, 4), (4, 7)]).is_err());
        assert!(PrimeSequence::new(3, 6, &[(0, 4)]).is_err());
        // Ends must strictly increase.
        assert!(PrimeSequence::new(2, 5, &[(0, 4), (2, 4), (4, 6)]).is_err());
    }

    #[test]
    fn counts_follow_the_recurrence_table() {
        let f = |m, n| count_prime_sequences(m, n).unwrap();
        assert_eq!(f(3, 1), BigUint::zero());
        assert_eq!(f(3, 2), BigUint::one());
        assert_eq!(f(3, 3), BigUint::one());
        assert_eq!(f(3, 4), BigUint::from(2u32));
        assert_eq!(f(3, 5), BigUint::from(4u32));
        assert_eq!(f(3, 6), BigUint::from(7u32));
        // m = 2 gives the Fibonacci numbers: 1,1,2,3,5,8,13,21.
        assert_eq!(f(2, 8), BigUint::from(21u32));
        assert_eq!(f(4, 7), BigUint::from(8u32));
    }

    #[test]
    fn enumeration_lists_the_seven_sequences_for_3x6() {
        let got = enumerate_prime_sequences(3, 6).unwrap();
        let expected = [
            seq(3, 6, &[(0, 7)]),
            seq(3, 6, &[(0, 3), (2, 7)]),
            seq(3, 6, &[(0, 3), (2, 5), (4, 7)]),
            seq(3, 6, &[(0, 3), (3, 7)]),
            seq(3, 6, &[(0, 4), (3, 7)]),
            seq(3, 6, &[(0, 4), (4, 7)]),
            seq(3, 6, &[(0, 5), (4, 7)]),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_agrees_with_the_recurrence() {
        for m in 2..=5u16 {
            for n in (m - 1)..=12u16 {
                let listed = enumerate_prime_sequences(m, n).unwrap();
                let counted = count_prime_sequences(m, n).unwrap();
                assert_eq!(BigUint::from(listed.len()), counted, "mismatch at m={m} n={n}");
                for g in &listed {
                    assert!(PrimeSequence::new(m, n, &g
                        .intervals()
                        .iter()
                        .map(|iv| (iv.a, iv.b))
                        .collect::<Vec<_>>())
                    .is_ok());
                }
            }
        }
    }

    #[test]
    fn ideal_generator_counts_match_hand_counts() {
        let ring = Ring::grid(3, 6, Rationals).unwrap();
        // One full window, four windows of [3,6], three single entries of
        // column 3.
        let g2 = sequence_to_ideal(&ring, &seq(3, 6, &[(0, 3), (3, 7)])).unwrap();
        assert_eq!(g2.generators().len(), 1 + 4 + 3);
        // [2,7] clips to columns 2..6, and the overlap [2,3] has width 2.
        let g3 = sequence_to_ideal(&ring, &seq(3, 6, &[(0, 3), (2, 7)])).unwrap();
        assert_eq!(g3.generators().len(), 1 + 10 + 3);
        // A single full interval gives exactly the maximal minors.
        let ring35 = Ring::grid(3, 5, Rationals).unwrap();
        let full = sequence_to_ideal(&ring35, &seq(3, 5, &[(0, 6)])).unwrap();
        assert_eq!(full.generators().len(), 10);
    }

    #[test]
    fn narrowest_grid_gives_the_zero_ideal() {
        let ring = Ring::grid(3, 2, Rationals).unwrap();
        let ideal = sequence_to_ideal(&ring, &seq(3, 2, &[(0, 3)])).unwrap();
        assert!(ideal.is_zero_ideal());
    }

    #[test]
    fn adjacent_windows_are_syntactically_covered() {
        // Every adjacent m-window of columns either fits inside an interval
        // or contains an overlap, for every sequence of the 3x6 grid.
        let m = 3u16;
        let n = 6u16;
        for gamma in enumerate_prime_sequences(m, n).unwrap() {
            for j in 1..=(n - m + 1) {
                let lo = j;
                let hi = j + m - 1;
                let inside = gamma
                    .intervals()
                    .iter()
                    .any(|iv| iv.a <= lo && hi <= iv.b);
                let covers = gamma
                    .overlaps()
                    .iter()
                    .any(|ov| lo <= ov.a && ov.b <= hi);
                assert!(inside || covers, "window [{lo},{hi}] escapes {gamma}");
            }
        }
    }
}
