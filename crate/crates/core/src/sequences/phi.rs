//! Parametrization of the variety of an interval-sequence ideal: fill each
//! interval's columns with free entries above the rank bound of the tightest
//! covering node, then mix rows with invertible blocks along the left-child
//! chains, working through the intervals right to left.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use super::poset::GammaPoset;
use crate::error::Error;
use crate::matrix::NumericMatrix;

/// A point of the parameter space: one invertible block per poset node
/// (indexed like `poset.nodes()`) and one coordinate list per row-1 node
/// (indexed like `poset.rows()[0]`, of length `poset.ell()[s]`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhiPoint {
    pub blocks: Vec<NumericMatrix>,
    pub affine: Vec<Vec<BigRational>>,
}

/// Builds the m x n matrix for a point of the parameter space.
pub fn phi(poset: &GammaPoset, point: &PhiPoint) -> Result<NumericMatrix, Error> {
    let m = poset.m() as usize;
    if point.blocks.len() != poset.nodes().len() {
        return Err(Error::Invalid(alloc::format!(
            "expected one block per node: {} != {}",
            point.blocks.len(),
            poset.nodes().len()
        )));
    }
    for (id, block) in point.blocks.iter().enumerate() {
        let k = poset.node(id).k as usize;
        if block.rows() != k || block.cols() != k {
            return Err(Error::Invalid(alloc::format!(
                "block for {} must be {k}x{k}",
                poset.node(id).interval
            )));
        }
        if !block.is_invertible() {
            return Err(Error::SingularBlock);
        }
    }
    let stages = poset.rows()[0].len();
    if point.affine.len() != stages {
        return Err(Error::Invalid("one coordinate list per interval".into()));
    }
    for (s, coords) in point.affine.iter().enumerate() {
        if coords.len() as u64 != poset.ell()[s] {
            return Err(Error::Invalid(alloc::format!(
                "interval {s} wants {} coordinates, got {}",
                poset.ell()[s],
                coords.len()
            )));
        }
    }

    let mut x: Option<NumericMatrix> = None;
    for s in (0..stages).rev() {
        let lambda = poset.lambda(s);
        let mut z = NumericMatrix::zero(m, lambda.width() as usize);
        let mut coords = point.affine[s].iter();
        for i in lambda.a..=lambda.b {
            let free_rows = poset.node(poset.minimal_cover(i)).d as usize;
            for r in 0..free_rows {
                *z.get_mut(r, (i - lambda.a) as usize) =
                    coords.next().expect("length checked against ell").clone();
            }
        }
        debug_assert!(coords.next().is_none());
        let mut grown = match x {
            None => z,
            Some(y) => z.hconcat(&y),
        };
        for id in poset.chain(s) {
            let node = poset.node(id);
            let top = node.left_parent.map_or(m, |p| poset.node(p).d as usize);
            grown.apply_block_left(&point.blocks[id], top - node.k as usize);
        }
        x = Some(grown);
    }
    Ok(x.expect("a prime sequence has at least one interval"))
}

/// Draws a point with entries in -4..=4, re-rolling each block until it is
/// invertible.
pub fn sample_phi_point<R: Rng>(poset: &GammaPoset, rng: &mut R) -> PhiPoint {
    let small = |rng: &mut R| BigRational::from_integer(BigInt::from(rng.gen_range(-4i32..=4)));
    let blocks = (0..poset.nodes().len())
        .map(|id| {
            let k = poset.node(id).k as usize;
            loop {
                let mut g = NumericMatrix::zero(k, k);
                for i in 0..k {
                    for j in 0..k {
                        *g.get_mut(i, j) = small(rng);
                    }
                }
                if g.is_invertible() {
                    return g;
                }
            }
        })
        .collect();
    let affine = poset
        .ell()
        .iter()
        .map(|&len| (0..len).map(|_| small(rng)).collect())
        .collect();
    PhiPoint { blocks, affine }
}
