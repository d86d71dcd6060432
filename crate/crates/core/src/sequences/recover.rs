//! From a matrix with vanishing adjacent maximal minors to an interval
//! sequence whose ideal annihilates it: scan for the inclusion-minimal
//! column windows that drop rank, then sweep left to right, closing each
//! interval at the first deficient window that clears the current start and
//! reopening at the last one inside the closed interval.

use alloc::vec::Vec;

use num_traits::Zero;

use super::{sequence_to_ideal, Interval, PrimeSequence};
use crate::error::Error;
use crate::field::Rationals;
use crate::matrix::{eval_on_matrix, NumericMatrix};
use crate::ring::Ring;

pub fn matrix_to_sequence(x: &NumericMatrix) -> Result<PrimeSequence, Error> {
    if x.rows() < 2 || x.rows() > u16::MAX as usize || x.cols() >= u16::MAX as usize {
        return Err(Error::BadMatrix("need 2 <= rows and bounded dimensions".into()));
    }
    let m = x.rows() as u32;
    let n = x.cols() as u32;
    if n + 1 < m {
        return Err(Error::BadMatrix(alloc::format!(
            "no interval sequence exists for {m} rows and {n} columns"
        )));
    }
    for j in 0..(n + 1).saturating_sub(m) {
        let window = x.column_window(j as usize, (j + m - 1) as usize);
        if !window.det()?.is_zero() {
            return Err(Error::BadMatrix(alloc::format!(
                "adjacent minor at columns {}..={} is nonzero",
                j + 1,
                j + m
            )));
        }
    }

    // Inclusion-minimal windows of fewer than m columns whose rank falls
    // below the column count. Minimal deficient windows miss full rank by
    // exactly one.
    let mut deficient: Vec<Interval> = Vec::new();
    for c in 1..=n {
        for d in c..=n.min(c + m - 2) {
            let window = x.column_window(c as usize - 1, d as usize - 1);
            if (window.rank() as u32) < d - c + 1 {
                deficient.push(Interval { a: c as u16, b: d as u16 });
            }
        }
    }
    let witnesses: Vec<Interval> = deficient
        .iter()
        .copied()
        .filter(|iv| {
            !deficient.iter().any(|other| iv.contains_interval(other) && other != iv)
        })
        .collect();
    debug_assert!(witnesses.windows(2).all(|w| w[0].a < w[1].a));

    let mut gamma: Vec<(u16, u16)> = Vec::new();
    let mut a = 0u32;
    let mut b = 0u32;
    while b != n + 1 {
        let first = witnesses.iter().find(|iv| u32::from(iv.a) > a + 1);
        b = match first {
            None => n + 1,
            Some(iv) if u32::from(iv.b) <= a + m => {
                if a + m >= n {
                    n + 1
                } else {
                    a + m
                }
            }
            Some(iv) => u32::from(iv.b),
        };
        gamma.push((a as u16, b as u16));
        if b != n + 1 {
            let last = witnesses
                .iter()
                .filter(|iv| a <= u32::from(iv.a) && u32::from(iv.b) <= b)
                .next_back()
                .expect("the window that closed this interval lies inside it");
            a = u32::from(last.a);
        }
    }
    let (last_a, last_b) = *gamma.last().unwrap();
    if u32::from(last_b) - u32::from(last_a) < m {
        // A lone interval is always [0, n+1] and never lands here, so a
        // predecessor exists. Widening the tail to [n+1-m, n+1] keeps the
        // overlap within m-2 only while the predecessor ends before column
        // n; a predecessor ending at n already sees every real column of
        // the tail, so the two intervals merge instead.
        let prev_end = gamma[gamma.len() - 2].1;
        if u32::from(prev_end) >= n {
            gamma.pop();
            gamma.last_mut().unwrap().1 = (n + 1) as u16;
        } else {
            *gamma.last_mut().unwrap() = ((n + 1 - m) as u16, (n + 1) as u16);
        }
    }

    let sequence = PrimeSequence::new(m as u16, n as u16, &gamma)?;
    let ring = Ring::grid(m as u16, n as u16, Rationals)?;
    let ideal = sequence_to_ideal(&ring, &sequence)?;
    for g in ideal.generators() {
        if !eval_on_matrix(&ring, g, x)?.is_zero() {
            return Err(Error::BadMatrix(alloc::format!(
                "recovered sequence {sequence} does not annihilate the matrix"
            )));
        }
    }
    Ok(sequence)
}
