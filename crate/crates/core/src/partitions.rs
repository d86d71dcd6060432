//! Prime partitions of the m x n variable grid: the index set for the
//! minimal primes of the ideal of adjacent 2 x 2 minors.
//!
//! A partition splits the grid cells into a support set S and its complement
//! N. It is a prime partition when the four grid corners lie in N, every
//! maximal 8-connected component of N is a solid rectangle, every defined
//! boundary edge of such a rectangle meets the boundary of another one, thin
//! rectangles sharing a row or column line keep their edges apart, and S is
//! exactly the union of the rectangle boundaries. Each prime partition yields
//! an ideal: the S cells as variables plus every 2 x 2 minor (adjacent or
//! not) whose four entries lie in one rectangle.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;
use crate::field::Field;
use crate::groebner::Ideal;
use crate::minors::{minor, MinorSpec};
use crate::poly::Polynomial;
use crate::ring::Ring;

/// Grid cell as (row, column), both 1-based.
pub type Cell = (u16, u16);

/// Solid axis-aligned block of cells, corners inclusive and 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rectangle {
    pub top: u16,
    pub left: u16,
    pub bottom: u16,
    pub right: u16,
}

impl Rectangle {
    pub fn new(top: u16, left: u16, bottom: u16, right: u16) -> Result<Self, Error> {
        if top == 0 || left == 0 || top > bottom || left > right {
            return Err(Error::Invalid(alloc::format!(
                "rectangle [{top},{left};{bottom},{right}] is not a 1-based block"
            )));
        }
        Ok(Rectangle { top, left, bottom, right })
    }

    pub fn height(&self) -> u16 {
        self.bottom - self.top + 1
    }

    pub fn width(&self) -> u16 {
        self.right - self.left + 1
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.top <= cell.0 && cell.0 <= self.bottom && self.left <= cell.1 && cell.1 <= self.right
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.top..=self.bottom).flat_map(move |r| (self.left..=self.right).map(move |c| (r, c)))
    }

    /// The defined one-cell strips hugging the four sides, clipped away
    /// entirely when they fall outside the m x n grid.
    pub fn boundary_edges(&self, m: u16, n: u16) -> Vec<Rectangle> {
        let mut edges = Vec::new();
        if self.top > 1 {
            edges.push(Rectangle {
                top: self.top - 1,
                left: self.left,
                bottom: self.top - 1,
                right: self.right,
            });
        }
        if self.bottom < m {
            edges.push(Rectangle {
                top: self.bottom + 1,
                left: self.left,
                bottom: self.bottom + 1,
                right: self.right,
            });
        }
        if self.left > 1 {
            edges.push(Rectangle {
                top: self.top,
                left: self.left - 1,
                bottom: self.bottom,
                right: self.left - 1,
            });
        }
        if self.right < n {
            edges.push(Rectangle {
                top: self.top,
                left: self.right + 1,
                bottom: self.bottom,
                right: self.right + 1,
            });
        }
        edges
    }

    /// Boundary edges plus the four diagonal corner cells, defined parts only.
    pub fn boundary_cells(&self, m: u16, n: u16) -> BTreeSet<Cell> {
        let mut cells: BTreeSet<Cell> = BTreeSet::new();
        for edge in self.boundary_edges(m, n) {
            cells.extend(edge.cells());
        }
        let above = (self.top > 1).then(|| self.top - 1);
        let below = (self.bottom < m).then(|| self.bottom + 1);
        let before = (self.left > 1).then(|| self.left - 1);
        let after = (self.right < n).then(|| self.right + 1);
        for r in [above, below].into_iter().flatten() {
            for c in [before, after].into_iter().flatten() {
                cells.insert((r, c));
            }
        }
        cells
    }
}

/// Splits a cell set into its maximal components under 8-neighbor adjacency.
/// Components come back ordered by their smallest cell, each sorted.
pub fn connected_components(cells: &BTreeSet<Cell>) -> Vec<Vec<Cell>> {
    let mut seen: BTreeSet<Cell> = BTreeSet::new();
    let mut components = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut queue = alloc::vec![start];
        let mut component = Vec::new();
        seen.insert(start);
        while let Some((r, c)) = queue.pop() {
            component.push((r, c));
            for dr in -1i32..=1 {
                for dc in -1i32..=1 {
                    let nr = i32::from(r) + dr;
                    let nc = i32::from(c) + dc;
                    if nr < 1 || nc < 1 || nr > i32::from(u16::MAX) || nc > i32::from(u16::MAX) {
                        continue;
                    }
                    let neighbor = (nr as u16, nc as u16);
                    if cells.contains(&neighbor) && seen.insert(neighbor) {
                        queue.push(neighbor);
                    }
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

/// A split of the grid cells into the support set S and its complement N,
/// with N pre-split into maximal 8-connected components.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GridPartition {
    m: u16,
    n: u16,
    s: BTreeSet<Cell>,
    components: Vec<Vec<Cell>>,
}

impl GridPartition {
    pub fn new(m: u16, n: u16, s: impl IntoIterator<Item = Cell>) -> Result<Self, Error> {
        if m < 2 || n < 2 {
            return Err(Error::Invalid(alloc::format!("grid {m} x {n} is too small")));
        }
        let s: BTreeSet<Cell> = s.into_iter().collect();
        if let Some(&(r, c)) = s.iter().find(|&&(r, c)| r < 1 || r > m || c < 1 || c > n) {
            return Err(Error::Invalid(alloc::format!("cell ({r},{c}) is outside the grid")));
        }
        let complement: BTreeSet<Cell> = (1..=m)
            .flat_map(|r| (1..=n).map(move |c| (r, c)))
            .filter(|cell| !s.contains(cell))
            .collect();
        let components = connected_components(&complement);
        Ok(GridPartition { m, n, s, components })
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn support(&self) -> &BTreeSet<Cell> {
        &self.s
    }

    pub fn components(&self) -> &[Vec<Cell>] {
        &self.components
    }

    /// The components of N as rectangles. Fails on any non-rectangular
    /// component, so this is only for partitions past condition 2.
    pub fn rectangles(&self) -> Result<Vec<Rectangle>, Error> {
        self.components
            .iter()
            .map(|component| {
                component_box(component)
                    .ok_or_else(|| Error::Invalid("component is not a rectangle".into()))
            })
            .collect()
    }
}

/// Bounding box of a nonempty sorted component, provided the component fills
/// it exactly.
fn component_box(component: &[Cell]) -> Option<Rectangle> {
    let top = component.iter().map(|c| c.0).min()?;
    let bottom = component.iter().map(|c| c.0).max()?;
    let left = component.iter().map(|c| c.1).min()?;
    let right = component.iter().map(|c| c.1).max()?;
    let rect = Rectangle { top, left, bottom, right };
    (component.len() == rect.height() as usize * rect.width() as usize).then_some(rect)
}

/// First failed condition of the prime partition definition, with a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// A grid corner sits in S.
    CornerInSupport(Cell),
    /// A maximal component of N is not a solid rectangle; the witness is its
    /// smallest cell.
    ComponentNotRectangle(Cell),
    /// A defined boundary edge meets no other rectangle's boundary.
    UnsupportedEdge { rectangle: Rectangle, edge: Rectangle },
    /// Two thin rectangles on the same line have touching boundary edges.
    ThinPairContact(Rectangle, Rectangle),
    /// An S cell lies on no rectangle boundary.
    CellOffBoundary(Cell),
}

impl Violation {
    /// Index of the violated condition, 1 through 5.
    pub fn condition(&self) -> u8 {
        match self {
            Violation::CornerInSupport(_) => 1,
            Violation::ComponentNotRectangle(_) => 2,
            Violation::UnsupportedEdge { .. } => 3,
            Violation::ThinPairContact(..) => 4,
            Violation::CellOffBoundary(_) => 5,
        }
    }
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::CornerInSupport((r, c)) => {
                write!(f, "condition 1: grid corner ({r},{c}) lies in S")
            }
            Violation::ComponentNotRectangle((r, c)) => {
                write!(f, "condition 2: component at ({r},{c}) is not a rectangle")
            }
            Violation::UnsupportedEdge { rectangle, edge } => write!(
                f,
                "condition 3: edge rows {}..{} cols {}..{} of rectangle rows {}..{} cols {}..{} \
                 meets no other boundary",
                edge.top,
                edge.bottom,
                edge.left,
                edge.right,
                rectangle.top,
                rectangle.bottom,
                rectangle.left,
                rectangle.right
            ),
            Violation::ThinPairContact(a, b) => write!(
                f,
                "condition 4: thin rectangles at ({},{}) and ({},{}) have touching edges",
                a.top, a.left, b.top, b.left
            ),
            Violation::CellOffBoundary((r, c)) => {
                write!(f, "condition 5: cell ({r},{c}) of S lies on no boundary")
            }
        }
    }
}

/// Checks the five prime partition conditions in order and reports the first
/// failure. Undefined boundary parts never impose requirements.
pub fn validate_prime_partition(p: &GridPartition) -> Result<(), Violation> {
    let (m, n) = (p.m, p.n);
    for corner in [(1, 1), (1, n), (m, 1), (m, n)] {
        if p.s.contains(&corner) {
            return Err(Violation::CornerInSupport(corner));
        }
    }
    let mut rectangles = Vec::with_capacity(p.components.len());
    for component in &p.components {
        match component_box(component) {
            Some(rect) => rectangles.push(rect),
            None => return Err(Violation::ComponentNotRectangle(component[0])),
        }
    }
    let boundaries: Vec<BTreeSet<Cell>> =
        rectangles.iter().map(|r| r.boundary_cells(m, n)).collect();
    for (k, rect) in rectangles.iter().enumerate() {
        for edge in rect.boundary_edges(m, n) {
            let supported = boundaries
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .any(|(_, boundary)| edge.cells().any(|cell| boundary.contains(&cell)));
            if !supported {
                return Err(Violation::UnsupportedEdge { rectangle: *rect, edge });
            }
        }
    }
    if let Some((a, b)) = thin_pair_contact(&rectangles, m, n) {
        return Err(Violation::ThinPairContact(a, b));
    }
    for &cell in &p.s {
        if !boundaries.iter().any(|boundary| boundary.contains(&cell)) {
            return Err(Violation::CellOffBoundary(cell));
        }
    }
    // The reverse inclusion is structural: a boundary cell of a maximal
    // component cannot lie in N, or the component would absorb it.
    debug_assert!(boundaries.iter().all(|boundary| boundary.is_subset(&p.s)));
    Ok(())
}

/// Finds two height-one rectangles on one row line (or width-one on one
/// column line) whose defined boundary edges intersect.
fn thin_pair_contact(rectangles: &[Rectangle], m: u16, n: u16) -> Option<(Rectangle, Rectangle)> {
    for (k, a) in rectangles.iter().enumerate() {
        for b in &rectangles[k + 1..] {
            let same_row_line = a.height() == 1 && b.height() == 1 && a.top == b.top;
            let same_col_line = a.width() == 1 && b.width() == 1 && a.left == b.left;
            if !(same_row_line || same_col_line) {
                continue;
            }
            let edges_a = a.boundary_edges(m, n);
            let touching = b.boundary_edges(m, n).iter().any(|eb| {
                edges_a.iter().any(|ea| {
                    ea.top.max(eb.top) <= ea.bottom.min(eb.bottom)
                        && ea.left.max(eb.left) <= ea.right.min(eb.right)
                })
            });
            if touching {
                return Some((*a, *b));
            }
        }
    }
    None
}

/// All prime partitions of the m x n grid, ordered lexicographically by
/// their sorted S sets.
///
/// The search scans cells row-major. The first undecided cell either joins S
/// or becomes the top-left corner of a fresh maximal rectangle of N; a
/// placement is rejected when it comes within one cell of an earlier
/// rectangle, which keeps distinct components separated. Grid corners never
/// branch into S. Leaves are revalidated from scratch.
pub fn enumerate_prime_partitions(m: u16, n: u16) -> Result<Vec<GridPartition>, Error> {
    if m < 2 || n < 2 {
        return Err(Error::Invalid(alloc::format!("grid {m} x {n} is too small")));
    }
    if u32::from(m) * u32::from(n) > u32::from(u16::MAX) {
        return Err(Error::Invalid("grid has too many cells".into()));
    }
    let mut search = Search {
        m,
        n,
        state: alloc::vec![CellState::Undecided; m as usize * n as usize],
        placed: Vec::new(),
        found: Vec::new(),
    };
    search.run(0)?;
    let mut found = search.found;
    found.sort_by(|p, q| p.s.cmp(&q.s));
    Ok(found)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CellState {
    Undecided,
    Support,
    Covered,
}

struct Search {
    m: u16,
    n: u16,
    state: Vec<CellState>,
    placed: Vec<Rectangle>,
    found: Vec<GridPartition>,
}

impl Search {
    fn index(&self, cell: Cell) -> usize {
        (cell.0 - 1) as usize * self.n as usize + (cell.1 - 1) as usize
    }

    fn run(&mut self, from: usize) -> Result<(), Error> {
        let next = self.state[from..].iter().position(|s| *s == CellState::Undecided);
        let Some(offset) = next else {
            let s: BTreeSet<Cell> = (1..=self.m)
                .flat_map(|r| (1..=self.n).map(move |c| (r, c)))
                .filter(|&cell| self.state[self.index(cell)] == CellState::Support)
                .collect();
            let partition = GridPartition::new(self.m, self.n, s)?;
            if validate_prime_partition(&partition).is_ok() {
                self.found.push(partition);
            }
            return Ok(());
        };
        let at = from + offset;
        let cell = ((at / self.n as usize) as u16 + 1, (at % self.n as usize) as u16 + 1);
        let corner = (cell.0 == 1 || cell.0 == self.m) && (cell.1 == 1 || cell.1 == self.n);
        if !corner {
            self.state[at] = CellState::Support;
            self.run(at + 1)?;
            self.state[at] = CellState::Undecided;
        }
        // Row-major scanning makes the first undecided cell the top-left
        // corner of whichever component covers it.
        for bottom in cell.0..=self.m {
            for right in cell.1..=self.n {
                let rect = Rectangle { top: cell.0, left: cell.1, bottom, right };
                if self.placeable(&rect) {
                    for c in rect.cells() {
                        let at = self.index(c);
                        self.state[at] = CellState::Covered;
                    }
                    self.placed.push(rect);
                    self.run(at + 1)?;
                    self.placed.pop();
                    for c in rect.cells() {
                        let at = self.index(c);
                        self.state[at] = CellState::Undecided;
                    }
                }
            }
        }
        Ok(())
    }

    fn placeable(&self, rect: &Rectangle) -> bool {
        if rect.cells().any(|c| self.state[self.index(c)] != CellState::Undecided) {
            return false;
        }
        // Touching another rectangle, even diagonally, would merge the two
        // components and break the one-rectangle-per-placement accounting.
        let separated = self.placed.iter().all(|other| {
            rect.top.max(other.top) > rect.bottom.min(other.bottom) + 1
                || rect.left.max(other.left) > rect.right.min(other.right) + 1
        });
        if !separated {
            return false;
        }
        // Cheap early cut: a thin pair on one line with a one-cell gap can
        // never pass condition 4.
        self.placed.iter().all(|other| {
            let same_row_line = rect.height() == 1 && other.height() == 1 && rect.top == other.top;
            let same_col_line = rect.width() == 1 && other.width() == 1 && rect.left == other.left;
            let row_gap_one = other.right + 2 == rect.left || rect.right + 2 == other.left;
            let col_gap_one = other.bottom + 2 == rect.top || rect.bottom + 2 == other.top;
            !(same_row_line && row_gap_one || same_col_line && col_gap_one)
        })
    }
}

/// The minimal prime attached to a valid partition: the S cells as variables
/// plus every 2 x 2 minor, adjacent or not, lying inside one rectangle.
/// Generators run through S row-major, then rectangles by smallest cell with
/// minors ordered by row pair then column pair.
pub fn partition_to_ideal<F: Field>(ring: &Ring<F>, p: &GridPartition) -> Result<Ideal<F>, Error> {
    if ring.grid_dims()? != (p.m, p.n) {
        return Err(Error::ContextMismatch("ring shape differs from the partition grid".into()));
    }
    if let Err(violation) = validate_prime_partition(p) {
        return Err(Error::Invalid(alloc::format!("not a prime partition: {violation}")));
    }
    let field = ring.field();
    let mut gens: Vec<Polynomial<F>> = Vec::new();
    for &(r, c) in &p.s {
        gens.push(Polynomial::var(field, ring.var_grid(r, c)?));
    }
    for rect in p.rectangles()? {
        for i in rect.top..rect.bottom {
            for s in i + 1..=rect.bottom {
                for j in rect.left..rect.right {
                    for t in j + 1..=rect.right {
                        let spec = MinorSpec::new(alloc::vec![i, s], alloc::vec![j, t])?;
                        gens.push(minor(ring, &spec)?);
                    }
                }
            }
        }
    }
    Ideal::new(ring.clone(), gens)
}

/// Groups partitions of one shape into orbits under the grid symmetries:
/// horizontal and vertical flips, plus transpose on square grids. Orbits are
/// lists of indices into the input, ordered by smallest member.
pub fn grid_symmetry_classes(ps: &[GridPartition]) -> Result<Vec<Vec<usize>>, Error> {
    let Some(first) = ps.first() else {
        return Ok(Vec::new());
    };
    let (m, n) = (first.m, first.n);
    if ps.iter().any(|p| p.m != m || p.n != n) {
        return Err(Error::ContextMismatch("partitions have mixed shapes".into()));
    }
    let by_support: BTreeMap<&BTreeSet<Cell>, usize> =
        ps.iter().enumerate().map(|(k, p)| (&p.s, k)).collect();
    if by_support.len() != ps.len() {
        return Err(Error::Invalid("duplicate partitions in the input".into()));
    }
    let mut assigned = alloc::vec![false; ps.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for k in 0..ps.len() {
        if assigned[k] {
            continue;
        }
        let mut members = Vec::new();
        for image in symmetry_images(m, n, &ps[k].s) {
            // Orbits of a complete family stay inside the family; an image
            // missing from the input is simply not listed.
            if let Some(&j) = by_support.get(&image) {
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

/// Images of a cell set under the whole symmetry group, duplicates included.
/// The group has order 4, or 8 when the grid is square.
pub fn symmetry_images(m: u16, n: u16, s: &BTreeSet<Cell>) -> Vec<BTreeSet<Cell>> {
    let mut images = Vec::new();
    for flip_rows in [false, true] {
        for flip_cols in [false, true] {
            for transpose in if m == n { &[false, true][..] } else { &[false][..] } {
                let image = s
                    .iter()
                    .map(|&(r, c)| {
                        let r = if flip_rows { m + 1 - r } else { r };
                        let c = if flip_cols { n + 1 - c } else { c };
                        if *transpose {
                            (c, r)
                        } else {
                            (r, c)
                        }
                    })
                    .collect();
                images.push(image);
            }
        }
    }
    images
}

/// Degree of the partition ideal: the product over rectangles of the degree
/// of the generic 2-minor ideal on that block, binomial(h + w - 2, h - 1).
pub fn partition_degree(p: &GridPartition) -> Result<BigUint, Error> {
    let mut degree = BigUint::one();
    for rect in p.rectangles()? {
        degree *= binomial(
            u64::from(rect.height()) + u64::from(rect.width()) - 2,
            u64::from(rect.height()) - 1,
        );
    }
    Ok(degree)
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result = result * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::order::MonomialOrder;
    use alloc::string::String;

    fn cells(list: &[(u16, u16)]) -> BTreeSet<Cell> {
        list.iter().copied().collect()
    }

    fn partition_from_rectangles(m: u16, n: u16, rects: &[Rectangle]) -> GridPartition {
        let covered: BTreeSet<Cell> = rects.iter().flat_map(|r| r.cells()).collect();
        let s = (1..=m)
            .flat_map(|r| (1..=n).map(move |c| (r, c)))
            .filter(|cell| !covered.contains(cell));
        GridPartition::new(m, n, s).unwrap()
    }

    #[test]
    fn components_split_on_eight_neighbor_adjacency() {
        let all: BTreeSet<Cell> = (1..=2).flat_map(|r| (1..=2).map(move |c| (r, c))).collect();
        assert_eq!(connected_components(&all).len(), 1);
        assert_eq!(connected_components(&cells(&[(1, 1), (1, 3)])).len(), 2);
        let diagonal = connected_components(&cells(&[(1, 1), (2, 2)]));
        assert_eq!(diagonal.len(), 1);
        assert_eq!(diagonal[0], alloc::vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn boundary_clips_to_the_grid() {
        let rect = Rectangle::new(1, 1, 3, 1).unwrap();
        let edges = rect.boundary_edges(6, 7);
        assert_eq!(edges.len(), 2);
        assert_eq!(edges[0], Rectangle::new(4, 1, 4, 1).unwrap());
        assert_eq!(edges[1], Rectangle::new(1, 2, 3, 2).unwrap());
        assert_eq!(rect.boundary_cells(6, 7), cells(&[(1, 2), (2, 2), (3, 2), (4, 1), (4, 2)]));

        let inner = Rectangle::new(3, 5, 5, 6).unwrap();
        assert_eq!(inner.boundary_edges(6, 7).len(), 4);
        assert_eq!(inner.boundary_cells(6, 7).len(), 2 * 2 + 2 * 3 + 4);
    }

    #[test]
    fn validation_matches_the_small_examples() {
        let ok = GridPartition::new(2, 2, []).unwrap();
        assert!(validate_prime_partition(&ok).is_ok());

        let corner = GridPartition::new(2, 3, [(1, 1)]).unwrap();
        let violation = validate_prime_partition(&corner).unwrap_err();
        assert_eq!(violation.condition(), 1);
        assert_eq!(violation, Violation::CornerInSupport((1, 1)));

        let split = GridPartition::new(2, 3, [(1, 2), (2, 2)]).unwrap();
        assert!(validate_prime_partition(&split).is_ok());
    }

    #[test]
    fn each_condition_has_a_failing_witness() {
        // Ring around the center cell: one bent component.
        let bent = GridPartition::new(3, 3, [(2, 2)]).unwrap();
        let violation = validate_prime_partition(&bent).unwrap_err();
        assert_eq!(violation, Violation::ComponentNotRectangle((1, 1)));

        // Two side columns split by a wall two cells thick; the wall-facing
        // edges reach nothing.
        let wall =
            GridPartition::new(3, 4, [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3)]).unwrap();
        assert_eq!(validate_prime_partition(&wall).unwrap_err().condition(), 3);

        // Single-cell rectangles along the top row with one-cell gaps.
        let thin =
            GridPartition::new(3, 5, [(1, 2), (1, 4), (2, 1), (2, 2), (2, 3), (2, 4), (2, 5)])
                .unwrap();
        assert_eq!(validate_prime_partition(&thin).unwrap_err().condition(), 4);

        // Pinwheel of four blocks: every edge is supported, the thin-pair
        // rule is vacuous, and only the center cell escapes all boundaries.
        let pinwheel = partition_from_rectangles(
            7,
            7,
            &[
                Rectangle::new(1, 1, 2, 4).unwrap(),
                Rectangle::new(1, 6, 4, 7).unwrap(),
                Rectangle::new(4, 1, 7, 2).unwrap(),
                Rectangle::new(6, 4, 7, 7).unwrap(),
            ],
        );
        let violation = validate_prime_partition(&pinwheel).unwrap_err();
        assert_eq!(violation, Violation::CellOffBoundary((4, 4)));
        assert_eq!(violation.condition(), 5);
    }

    #[test]
    fn enumeration_matches_the_known_counts() {
        assert_eq!(enumerate_prime_partitions(2, 2).unwrap().len(), 1);
        let both = enumerate_prime_partitions(2, 3).unwrap();
        assert_eq!(both.len(), 2);
        assert!(both[0].support().is_empty());
        assert_eq!(*both[1].support(), cells(&[(1, 2), (2, 2)]));
    }

    #[test]
    fn enumeration_agrees_with_the_subset_oracle_on_small_grids() {
        for (m, n) in [(2u16, 2u16), (2, 3), (2, 4), (3, 3), (2, 5), (3, 4), (2, 6)] {
            let fast = enumerate_prime_partitions(m, n).unwrap();
            let mut slow = Vec::new();
            let cells_total = u32::from(m) * u32::from(n);
            for mask in 0u32..(1 << cells_total) {
                let s: BTreeSet<Cell> = (0..cells_total)
                    .filter(|bit| mask & (1 << bit) != 0)
                    .map(|bit| ((bit / u32::from(n)) as u16 + 1, (bit % u32::from(n)) as u16 + 1))
                    .collect();
                let p = GridPartition::new(m, n, s).unwrap();
                if validate_prime_partition(&p).is_ok() {
                    slow.push(p);
                }
            }
            slow.sort_by(|p, q| p.support().cmp(q.support()));
            assert_eq!(fast, slow, "mismatch on the {m} x {n} grid");
        }
    }

    #[test]
    fn five_by_five_has_one_hundred_partitions_in_twenty_classes() {
        // Counts are pinned by the subset oracle on small grids plus the
        // pairwise incomparability certificate below: every enumerated ideal
        // is prime, contains the adjacent-minor ideal, and contains no other
        // member, so each one is a minimal prime.
        let ps = enumerate_prime_partitions(5, 5).unwrap();
        assert_eq!(ps.len(), 100);
        let orbits = grid_symmetry_classes(&ps).unwrap();
        assert_eq!(orbits.len(), 20);
        let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, alloc::vec![1, 1, 2, 2, 2, 4, 4, 4, 4, 4, 4, 4, 8, 8, 8, 8, 8, 8, 8, 8]);
    }

    #[test]
    fn ideals_match_the_hand_examples() {
        let ring22 = Ring::grid(2, 2, Rationals).unwrap();
        let whole = GridPartition::new(2, 2, []).unwrap();
        let ideal = partition_to_ideal(&ring22, &whole).unwrap();
        assert_eq!(ideal.generators().len(), 1);
        assert_eq!(ideal.generators()[0].num_terms(), 2);

        let ring23 = Ring::grid(2, 3, Rationals).unwrap();
        let split = GridPartition::new(2, 3, [(1, 2), (2, 2)]).unwrap();
        let ideal = partition_to_ideal(&ring23, &split).unwrap();
        let names: Vec<String> =
            ideal.generators().iter().map(|g| crate::text::print(&ring23, g)).collect();
        assert_eq!(names, alloc::vec!["x[1,2]", "x[2,2]"]);

        let whole23 = GridPartition::new(2, 3, []).unwrap();
        let ideal = partition_to_ideal(&ring23, &whole23).unwrap();
        assert_eq!(ideal.generators().len(), 3);

        let invalid = GridPartition::new(2, 3, [(1, 1)]).unwrap();
        assert!(partition_to_ideal(&ring23, &invalid).is_err());
    }

    #[test]
    fn every_adjacent_minor_lands_in_every_partition_ideal() {
        // Syntactic containment: an adjacent minor either has an entry in S
        // or all four entries in one rectangle.
        for (m, n) in [(3u16, 3u16), (3, 4), (4, 4)] {
            for p in enumerate_prime_partitions(m, n).unwrap() {
                let rects = p.rectangles().unwrap();
                for r in 1..m {
                    for c in 1..n {
                        let quad = [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)];
                        let touches_s = quad.iter().any(|cell| p.support().contains(cell));
                        let in_one_rect =
                            rects.iter().any(|rect| quad.iter().all(|&cell| rect.contains(cell)));
                        assert!(
                            touches_s || in_one_rect,
                            "adjacent minor at ({r},{c}) escapes a partition of {m} x {n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn partition_ideals_are_pairwise_incomparable() {
        // Containment of partition ideals forces containment of supports, so
        // only support-nested pairs need a Groebner certificate.
        for (m, n) in [(2u16, 5u16), (3, 4), (5, 5)] {
            let ring = Ring::grid(m, n, Rationals).unwrap();
            let ord = MonomialOrder::diaglex(&ring);
            let ps = enumerate_prime_partitions(m, n).unwrap();
            let ideals: Vec<_> =
                ps.iter().map(|p| partition_to_ideal(&ring, p).unwrap()).collect();
            for (i, p) in ps.iter().enumerate() {
                for (j, q) in ps.iter().enumerate() {
                    if i == j || !p.support().is_subset(q.support()) {
                        continue;
                    }
                    let nested = ideals[i].contained_in(&ideals[j], &ord, 200_000).unwrap();
                    assert!(!nested, "ideal {i} sits inside ideal {j} on the {m} x {n} grid");
                }
            }
        }
    }

    #[test]
    fn degrees_multiply_over_rectangles() {
        let whole = GridPartition::new(2, 2, []).unwrap();
        assert_eq!(partition_degree(&whole).unwrap(), BigUint::from(2u32));
        let split = GridPartition::new(2, 3, [(1, 2), (2, 2)]).unwrap();
        assert_eq!(partition_degree(&split).unwrap(), BigUint::one());
        // One 5x5 rectangle: binomial(8, 4).
        let big = GridPartition::new(5, 5, []).unwrap();
        assert_eq!(partition_degree(&big).unwrap(), BigUint::from(70u32));
    }

    #[test]
    fn symmetry_orbits_respect_the_group_order() {
        let ps = enumerate_prime_partitions(2, 4).unwrap();
        let orbits = grid_symmetry_classes(&ps).unwrap();
        for orbit in &orbits {
            assert!(4 % orbit.len() == 0);
        }
        let ps = enumerate_prime_partitions(2, 3).unwrap();
        assert_eq!(grid_symmetry_classes(&ps).unwrap().len(), 2);
    }
}
