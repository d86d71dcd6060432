//! Generators of determinantal ideals: single minors, the adjacent k x k
//! minors of a grid, window-restricted minors for interval ideals, and the
//! adjacent 2-minors of a multidimensional array.
//!
//! All constructors emit polynomials sorted under diaglex, where the leading
//! term of a minor is its main-diagonal product.

use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{Ring, VarId};

/// Row and column selection for one minor, 1-based and strictly increasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinorSpec {
    pub rows: Vec<u16>,
    pub cols: Vec<u16>,
}

impl MinorSpec {
    pub fn new(rows: Vec<u16>, cols: Vec<u16>) -> Result<Self, Error> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::Invalid("minor needs equally many rows and columns".into()));
        }
        if rows.windows(2).any(|w| w[0] >= w[1]) || cols.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("minor indices must be strictly increasing".into()));
        }
        Ok(MinorSpec { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// Signed cofactor expansion; k! terms with unit coefficients.
pub fn minor<F: Field>(ring: &Ring<F>, spec: &MinorSpec) -> Result<Polynomial<F>, Error> {
    let field = ring.field().clone();
    let k = spec.size();
    let mut vars = alloc::vec![alloc::vec![VarId(0); k]; k];
    for (i, &r) in spec.rows.iter().enumerate() {
        for (j, &c) in spec.cols.iter().enumerate() {
            vars[i][j] = ring.var_grid(r, c)?;
        }
    }
    let mut terms: Vec<(F::Elem, Monomial)> = Vec::with_capacity((1..=k).product());
    let mut used = alloc::vec![false; k];
    let mut picked: Vec<VarId> = Vec::with_capacity(k);
    expand(&field, &vars, &mut used, &mut picked, true, &mut terms);
    Ok(Polynomial::from_terms(&field, &MonomialOrder::diaglex(ring), terms))
}

fn expand<F: Field>(
    field: &F,
    vars: &[Vec<VarId>],
    used: &mut [bool],
    picked: &mut Vec<VarId>,
    positive: bool,
    out: &mut Vec<(F::Elem, Monomial)>,
) {
    let row = picked.len();
    if row == vars.len() {
        let pairs: Vec<(VarId, u16)> = picked.iter().map(|&v| (v, 1)).collect();
        let c = if positive { field.one() } else { field.neg(&field.one()) };
        out.push((c, Monomial::from_pairs(&pairs)));
        return;
    }
    let mut skipped = 0;
    for j in 0..vars.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        picked.push(vars[row][j]);
        // Crossing an unused column flips the permutation sign.
        expand(field, vars, used, picked, positive == (skipped % 2 == 0), out);
        picked.pop();
        used[j] = false;
        skipped += 1;
    }
}

/// The k x k minors on consecutive rows and columns, row-major by top-left
/// corner. These generate the adjacent-minor ideal of the grid.
pub fn adjacent_minors<F: Field>(ring: &Ring<F>, k: u16) -> Result<Vec<Polynomial<F>>, Error> {
    let (m, n) = ring.grid_dims()?;
    if k == 0 || k > m.min(n) {
        return Err(Error::Invalid(alloc::format!(
            "minor size {k} outside 1..={}",
            m.min(n)
        )));
    }
    let mut out = Vec::new();
    for i in 1..=(m - k + 1) {
        for j in 1..=(n - k + 1) {
            let rows: Vec<u16> = (i..i + k).collect();
            let cols: Vec<u16> = (j..j + k).collect();
            out.push(minor(ring, &MinorSpec::new(rows, cols)?)?);
        }
    }
    Ok(out)
}

/// All s x s minors whose columns lie in the interval `[a, b]` of column
/// indices and whose rows are any s rows. The interval may use the phantom
/// borders 0 and n+1; it is clipped to the real columns first. Minors are
/// ordered lexicographically by (rows, cols).
pub fn submatrix_minors<F: Field>(
    ring: &Ring<F>,
    a: u16,
    b: u16,
    s: u16,
) -> Result<Vec<Polynomial<F>>, Error> {
    let (m, n) = ring.grid_dims()?;
    let lo = a.max(1);
    let hi = b.min(n);
    if lo > hi {
        return Err(Error::Invalid(alloc::format!("interval [{a},{b}] clips to nothing")));
    }
    let width = hi - lo + 1;
    if s == 0 || s > m || s > width {
        return Err(Error::Invalid(alloc::format!(
            "minor size {s} does not fit {m} rows x columns {lo}..={hi}"
        )));
    }
    let row_sets = subsets(1, m, s);
    let col_sets = subsets(lo, hi, s);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rows in &row_sets {
        for cols in &col_sets {
            out.push(minor(ring, &MinorSpec::new(rows.clone(), cols.clone())?)?);
        }
    }
    Ok(out)
}

/// Strictly increasing s-subsets of `lo..=hi`, lexicographic.
fn subsets(lo: u16, hi: u16, s: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur: Vec<u16> = Vec::with_capacity(s as usize);
    fn rec(lo: u16, hi: u16, s: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if s == 0 {
            out.push(cur.clone());
            return;
        }
        // Keep enough room for the remaining picks.
        for v in lo..=hi + 1 - s {
            cur.push(v);
            rec(v + 1, hi, s - 1, cur, out);
            cur.pop();
        }
    }
    rec(lo, hi, s, &mut cur, &mut out);
    out
}

/// Adjacent 2-minors of a d-dimensional array: for every base index with all
/// components below the axis bound, the difference of the even-parity and
/// odd-parity corner products of the unit hypercube at that base. Parity of a
/// corner is the parity of its offset from the base, so the base corner is
/// always in the positive product and the leading term generalizes the main
/// diagonal.
pub fn multidim_adjacent_minors<F: Field>(ring: &Ring<F>) -> Result<Vec<Polynomial<F>>, Error> {
    let field = ring.field().clone();
    let axes = ring.shape().axes();
    let d = axes.len();
    if d < 2 {
        return Err(Error::Invalid("adjacent 2-minors need at least two axes".into()));
    }
    let ord = MonomialOrder::diaglex(ring);
    let mut bases: Vec<Vec<u16>> = alloc::vec![Vec::new()];
    for &len in &axes {
        let mut next = Vec::new();
        for base in &bases {
            for i in 1..len {
                let mut b = base.clone();
                b.push(i);
                next.push(b);
            }
        }
        bases = next;
    }
    let mut out = Vec::with_capacity(bases.len());
    for base in bases {
        let mut even: Vec<(VarId, u16)> = Vec::new();
        let mut odd: Vec<(VarId, u16)> = Vec::new();
        for corner in 0..(1u32 << d) {
            let mut index = base.clone();
            for (axis, slot) in index.iter_mut().enumerate() {
                if corner >> axis & 1 == 1 {
                    *slot += 1;
                }
            }
            let v = ring.var_multi(&index)?;
            if corner.count_ones() % 2 == 0 {
                even.push((v, 1));
            } else {
                odd.push((v, 1));
            }
        }
        let terms = alloc::vec![
            (field.one(), Monomial::from_pairs(&even)),
            (field.neg(&field.one()), Monomial::from_pairs(&odd)),
        ];
        out.push(Polynomial::from_terms(&field, &ord, terms));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::ring::Shape;
    use crate::text;

    #[test]
    fn two_by_two_adjacent_minors_of_a_2x3() {
        let r = Ring::grid(2, 3, Rationals).unwrap();
        let gens = adjacent_minors(&r, 2).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(text::print(&r, &gens[0]), "x[1,1]*x[2,2] - x[1,2]*x[2,1]");
        assert_eq!(text::print(&r, &gens[1]), "x[1,2]*x[2,3] - x[1,3]*x[2,2]");
    }

    #[test]
    fn three_by_three_minor_has_six_unit_terms_led_by_the_diagonal() {
        let r = Ring::grid(3, 4, Rationals).unwrap();
        let spec = MinorSpec::new(alloc::vec![1, 2, 3], alloc::vec![1, 2, 4]).unwrap();
        let p = minor(&r, &spec).unwrap();
        assert_eq!(p.num_terms(), 6);
        let (c, m) = p.leading_term().unwrap();
        assert_eq!(*c, Rationals.from_i64(1));
        let diag = Monomial::from_pairs(&[
            (r.var_grid(1, 1).unwrap(), 1),
            (r.var_grid(2, 2).unwrap(), 1),
            (r.var_grid(3, 4).unwrap(), 1),
        ]);
        assert_eq!(*m, diag);
        // Elimination-based determinant of an explicit integer matrix as an
        // independent cross-check of the expansion.
        let entry = |row: i64, col: i64| row * 10 + col + (row * col % 3) * 7;
        let val = p.eval(&Rationals, |v| {
            let row = v.0 as i64 / 4 + 1;
            let col = v.0 as i64 % 4 + 1;
            Rationals.from_i64(entry(row, col))
        });
        let sub = crate::matrix::NumericMatrix::from_i64_rows(&[
            &[entry(1, 1), entry(1, 2), entry(1, 4)],
            &[entry(2, 1), entry(2, 2), entry(2, 4)],
            &[entry(3, 1), entry(3, 2), entry(3, 4)],
        ])
        .unwrap();
        assert_eq!(val, sub.det().unwrap());
    }

    #[test]
    fn phantom_interval_clips_to_the_single_leading_window() {
        let r = Ring::grid(3, 6, Rationals).unwrap();
        let gens = submatrix_minors(&r, 0, 3, 3).unwrap();
        assert_eq!(gens.len(), 1);
        let full = submatrix_minors(&r, 0, 7, 3).unwrap();
        // All 3x3 minors of a 3x6: C(6,3) column choices.
        assert_eq!(full.len(), 20);
        let overlap = submatrix_minors(&r, 3, 3, 1).unwrap();
        assert_eq!(overlap.len(), 3);
        assert_eq!(text::print(&r, &overlap[0]), "x[1,3]");
        assert!(submatrix_minors(&r, 7, 9, 1).is_err());
        assert!(submatrix_minors(&r, 1, 2, 3).is_err());
    }

    #[test]
    fn multidim_minors_match_the_2x2x3_example() {
        let r = Ring::new(Shape::multi(&[2, 2, 3]), Rationals).unwrap();
        let gens = multidim_adjacent_minors(&r).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(
            text::print(&r, &gens[0]),
            "x[1,1,1]*x[1,2,2]*x[2,1,2]*x[2,2,1] - x[1,1,2]*x[1,2,1]*x[2,1,1]*x[2,2,2]"
        );
        assert_eq!(
            text::print(&r, &gens[1]),
            "x[1,1,2]*x[1,2,3]*x[2,1,3]*x[2,2,2] - x[1,1,3]*x[1,2,2]*x[2,1,2]*x[2,2,3]"
        );
    }

    #[test]
    fn two_axis_multidim_minors_equal_grid_adjacent_minors() {
        let r = Ring::grid(3, 4, Rationals).unwrap();
        let from_grid = adjacent_minors(&r, 2).unwrap();
        let from_multi = multidim_adjacent_minors(&r).unwrap();
        assert_eq!(from_grid, from_multi);
    }
}
