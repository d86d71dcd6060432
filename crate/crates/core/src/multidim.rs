//! Adjacent 2-minors of multidimensional arrays, and the minimal primes of
//! the ideal they generate when the array shape is (2, ..., 2, m).
//!
//! The adjacent 2-minor of a d-dimensional array at a base index with every
//! coordinate strictly inside the array is a binomial: the product of the
//! unit hypercube corners at even offset from the base minus the product of
//! the corners at odd offset. For d = 2 this is the ordinary adjacent 2x2
//! minor.
//!
//! For shapes with all leading axes of length two, a minimal prime of the
//! adjacent-minor ideal is cut out by a [`Prime22m`]: a set of interior
//! last-axis levels, no two consecutive, each carrying one variable of even
//! and one of odd coordinate sum. The empty choice stands for the
//! saturation of the full ideal by the product of all variables.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;
use crate::field::Field;
use crate::groebner::Ideal;
use crate::minors::multidim_adjacent_minors;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// One chosen last-axis level: the level index and the leading coordinates
/// (each 1 or 2) of the even and the odd variable sitting on it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LevelPair {
    level: u16,
    even: Vec<u16>,
    odd: Vec<u16>,
}

impl LevelPair {
    pub fn level(&self) -> u16 {
        self.level
    }

    /// Full index vector of the even-parity variable.
    pub fn even_index(&self) -> Vec<u16> {
        let mut v = self.even.clone();
        v.push(self.level);
        v
    }

    /// Full index vector of the odd-parity variable.
    pub fn odd_index(&self) -> Vec<u16> {
        let mut v = self.odd.clone();
        v.push(self.level);
        v
    }
}

/// Support of one minimal prime of the adjacent-minor ideal of a
/// (2, ..., 2, m) array with `d` axes in total.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Prime22m {
    d: usize,
    m: u16,
    pairs: Vec<LevelPair>,
}

fn parity(leading: &[u16], level: u16) -> u16 {
    (leading.iter().sum::<u16>() + level) % 2
}

impl Prime22m {
    /// Validates the level gaps, the coordinate ranges, and the parities.
    pub fn new(
        d: usize,
        m: u16,
        pairs: Vec<(u16, Vec<u16>, Vec<u16>)>,
    ) -> Result<Prime22m, Error> {
        if d < 2 {
            return Err(Error::Invalid("array needs at least two axes".into()));
        }
        if m == 0 {
            return Err(Error::Invalid("empty last axis".into()));
        }
        let mut checked = Vec::with_capacity(pairs.len());
        let mut previous = 0u16;
        for (level, even, odd) in pairs {
            if level < 2 || level + 1 > m {
                return Err(Error::Invalid(alloc::format!(
                    "level {level} is not interior to a last axis of length {m}"
                )));
            }
            if !checked.is_empty() && level <= previous + 1 {
                return Err(Error::Invalid(alloc::format!(
                    "levels {previous} and {level} are not separated"
                )));
            }
            for leading in [&even, &odd] {
                if leading.len() != d - 1 || leading.iter().any(|&c| c != 1 && c != 2) {
                    return Err(Error::Invalid(
                        "leading coordinates must be 1 or 2 on every leading axis".into(),
                    ));
                }
            }
            if parity(&even, level) != 0 || parity(&odd, level) != 1 {
                return Err(Error::Invalid(alloc::format!(
                    "wrong parity split on level {level}"
                )));
            }
            previous = level;
            checked.push(LevelPair { level, even, odd });
        }
        Ok(Prime22m { d, m, pairs: checked })
    }

    pub fn axes(&self) -> Vec<u16> {
        let mut axes = vec![2u16; self.d - 1];
        axes.push(self.m);
        axes
    }

    pub fn pairs(&self) -> &[LevelPair] {
        &self.pairs
    }

    /// The variables generating the linear part of the prime, as full index
    /// vectors, sorted.
    pub fn support(&self) -> BTreeSet<Vec<u16>> {
        self.pairs
            .iter()
            .flat_map(|pair| [pair.even_index(), pair.odd_index()])
            .collect()
    }
}

fn leading_tuples(d: usize, level: u16, want: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << (d - 1)) {
        let leading: Vec<u16> =
            (0..d - 1).map(|k| 1 + ((mask >> k) & 1) as u16).collect();
        if parity(&leading, level) == want {
            out.push(leading);
        }
    }
    out
}

/// All minimal-prime supports for the (2, ..., 2, m) array with `d` axes,
/// including the empty choice. Sorted by their natural order.
pub fn enumerate_22m_primes(d: usize, m: u16) -> Result<Vec<Prime22m>, Error> {
    if d < 2 {
        return Err(Error::Invalid("array needs at least two axes".into()));
    }
    if m == 0 {
        return Err(Error::Invalid("empty last axis".into()));
    }
    if d > 16 {
        return Err(Error::Invalid("too many axes".into()));
    }
    let mut out = Vec::new();
    let mut stack: Vec<Vec<LevelPair>> = vec![Vec::new()];
    while let Some(pairs) = stack.pop() {
        let next_level = pairs.last().map_or(2, |pair| pair.level + 2);
        out.push(Prime22m { d, m, pairs: pairs.clone() });
        for level in next_level..m {
            for even in leading_tuples(d, level, 0) {
                for odd in leading_tuples(d, level, 1) {
                    let mut extended = pairs.clone();
                    extended.push(LevelPair { level, even: even.clone(), odd });
                    stack.push(extended);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Number of minimal primes of the (2, ..., 2, m) adjacent-minor ideal:
/// f(1) = f(2) = 1 and f(m+1) = f(m) + 4^(d-2) f(m-1).
pub fn count_22m(d: usize, m: u16) -> Result<BigUint, Error> {
    if d < 2 {
        return Err(Error::Invalid("array needs at least two axes".into()));
    }
    if m == 0 {
        return Err(Error::Invalid("empty last axis".into()));
    }
    let step = BigUint::from(4u32).pow(d as u32 - 2);
    let mut prev = BigUint::one();
    let mut here = BigUint::one();
    for _ in 2..m {
        let next = &here + &step * &prev;
        prev = core::mem::replace(&mut here, next);
    }
    Ok(here)
}

/// The prime ideal cut out by a support choice: the chosen variables plus
/// every adjacent minor avoiding them, saturated by the product of the
/// complementary variables.
pub fn prime_22m_ideal<F: Field>(
    ring: &Ring<F>,
    prime: &Prime22m,
    max_pairs: usize,
) -> Result<Ideal<F>, Error> {
    if ring.shape().axes() != prime.axes() {
        return Err(Error::ContextMismatch("ring shape does not match the support".into()));
    }
    let field = ring.field().clone();
    let support: BTreeSet<_> = prime
        .support()
        .iter()
        .map(|index| ring.var_multi(index))
        .collect::<Result<_, _>>()?;
    let mut gens: Vec<Polynomial<F>> =
        support.iter().map(|&v| Polynomial::var(&field, v)).collect();
    let minors: Vec<Polynomial<F>> = multidim_adjacent_minors(ring)?
        .into_iter()
        .filter(|minor| {
            minor
                .terms()
                .iter()
                .all(|(_, mono)| mono.support().all(|v| !support.contains(&v)))
        })
        .collect();
    let complement: Vec<(crate::ring::VarId, u16)> = (0..ring.num_vars())
        .map(|v| crate::ring::VarId(v as u16))
        .filter(|v| !support.contains(v))
        .map(|v| (v, 1))
        .collect();
    let inner = Ideal::new(ring.clone(), minors)?;
    let ord = MonomialOrder::diaglex(ring);
    let product = Polynomial::from_terms(
        &field,
        &ord,
        vec![(field.one(), Monomial::from_pairs(&complement))],
    );
    let saturated = crate::groebner::saturate(&inner, &product, max_pairs)?;
    gens.extend(saturated.generators().iter().cloned());
    Ideal::new(ring.clone(), gens)
}

/// The 2-minor binomial of a (2,...,2,m) array across levels j < jp: each
/// term collects one variable per corner of the leading hypercube, split by
/// corner parity. The adjacent minors are the jp = j + 1 cases, and the
/// distant ones are exactly what saturating by the coordinate product adds.
pub fn level_pair_minor<F: Field>(
    ring: &Ring<F>,
    j: u16,
    jp: u16,
) -> Result<Polynomial<F>, Error> {
    let axes = ring.shape().axes();
    let d = axes.len();
    if d < 2 || axes[..d - 1].iter().any(|&a| a != 2) {
        return Err(Error::ContextMismatch(
            "level minors need a (2,...,2,m) array".into(),
        ));
    }
    if j == 0 || j >= jp || jp > axes[d - 1] {
        return Err(Error::Invalid(alloc::format!(
            "levels must satisfy 1 <= {j} < {jp} <= {}",
            axes[d - 1]
        )));
    }
    let mut even: Vec<(crate::ring::VarId, u16)> = Vec::new();
    let mut odd: Vec<(crate::ring::VarId, u16)> = Vec::new();
    for corner in 0u32..(1 << d) {
        let mut index: Vec<u16> = Vec::with_capacity(d);
        for axis in 0..d - 1 {
            index.push(1 + ((corner >> axis) & 1) as u16);
        }
        index.push(if (corner >> (d - 1)) & 1 == 0 { j } else { jp });
        let v = ring.var_multi(&index)?;
        if corner.count_ones() % 2 == 0 {
            even.push((v, 1));
        } else {
            odd.push((v, 1));
        }
    }
    let field = ring.field().clone();
    let ord = MonomialOrder::diaglex(ring);
    Ok(Polynomial::from_terms(
        &field,
        &ord,
        alloc::vec![
            (field.one(), Monomial::from_pairs(&even)),
            (field.neg(&field.one()), Monomial::from_pairs(&odd)),
        ],
    ))
}

/// Orbit of a variable set under the symmetries of the array shape:
/// permutations of equal-length axes composed with per-axis reversals.
/// Returns the distinct images, sorted.
pub fn multidim_symmetry_orbit(
    shape: &[u16],
    support: &BTreeSet<Vec<u16>>,
) -> Result<Vec<BTreeSet<Vec<u16>>>, Error> {
    let d = shape.len();
    if d == 0 || shape.iter().any(|&a| a == 0) {
        return Err(Error::Invalid("degenerate shape".into()));
    }
    for index in support {
        if index.len() != d || index.iter().zip(shape).any(|(&c, &a)| c == 0 || c > a) {
            return Err(Error::Invalid("support index outside the shape".into()));
        }
    }
    let mut images = BTreeSet::new();
    for perm in permutations(d) {
        if perm.iter().enumerate().any(|(k, &p)| shape[p] != shape[k]) {
            continue;
        }
        for flips in 0u32..(1 << d) {
            let image: BTreeSet<Vec<u16>> = support
                .iter()
                .map(|index| {
                    (0..d)
                        .map(|k| {
                            let c = index[perm[k]];
                            if (flips >> k) & 1 == 1 {
                                shape[k] + 1 - c
                            } else {
                                c
                            }
                        })
                        .collect()
                })
                .collect();
            images.insert(image);
        }
    }
    Ok(images.into_iter().collect())
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for prefix in &out {
            for p in 0..d {
                if !prefix.contains(&p) {
                    let mut longer = prefix.clone();
                    longer.push(p);
                    next.push(longer);
                }
            }
        }
        out = next;
    }
    out
}
