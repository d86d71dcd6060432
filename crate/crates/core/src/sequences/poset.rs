//! The interval poset of a prime sequence. Row 1 holds the intervals of the
//! sequence; each later row holds the nonempty intersections of consecutive
//! elements of the row above. Every node carries the rank bound D, the block
//! size k of the row operation attached to it, and each row-1 node carries
//! the count of free entries in its column range.

use alloc::vec::Vec;

use super::{Interval, PrimeSequence};
use crate::error::Error;

pub type NodeId = usize;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PosetNode {
    pub interval: Interval,
    /// 1-based row in the poset diagram.
    pub row: u16,
    pub left_parent: Option<NodeId>,
    pub right_parent: Option<NodeId>,
    pub left_child: Option<NodeId>,
    pub right_child: Option<NodeId>,
    /// Rank bound: m-1 on row 1, width-1 on row 2, width below.
    pub d: u16,
    /// Block size: D(left parent, m if absent) - D(left child, 0 if absent).
    pub k: u16,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaPoset {
    m: u16,
    n: u16,
    nodes: Vec<PosetNode>,
    rows: Vec<Vec<NodeId>>,
    ell: Vec<u64>,
}

impl GammaPoset {
    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &PosetNode {
        &self.nodes[id]
    }

    /// Node ids row by row; `rows()[0]` is row 1 in sequence order.
    pub fn rows(&self) -> &[Vec<NodeId>] {
        &self.rows
    }

    /// Free-entry counts, parallel to `rows()[0]`.
    pub fn ell(&self) -> &[u64] {
        &self.ell
    }

    /// Column range owned by the row-1 node at position `s`: from its start
    /// to just before the next interval's start (or to n for the last one),
    /// clipped to the real columns 1..=n.
    pub fn lambda(&self, s: usize) -> Interval {
        let row1 = &self.rows[0];
        let a = self.nodes[row1[s]].interval.a.max(1);
        let b = match row1.get(s + 1) {
            Some(&next) => self.nodes[next].interval.a - 1,
            None => self.n,
        };
        debug_assert!(a <= b);
        Interval { a, b }
    }

    /// The left-child chain starting at the row-1 node in position `s`.
    pub fn chain(&self, s: usize) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut cur = Some(self.rows[0][s]);
        while let Some(id) = cur {
            out.push(id);
            cur = self.nodes[id].left_child;
        }
        out
    }

    /// Block application order of the matrix builder: chains right to left,
    /// each walked top node first.
    pub fn block_order(&self) -> Vec<NodeId> {
        let mut out = Vec::new();
        for s in (0..self.rows[0].len()).rev() {
            out.extend(self.chain(s));
        }
        out
    }

    /// The unique inclusion-minimal node containing column `i`.
    ///
    /// Panics if minimality is ambiguous; the construction is expected to
    /// make it unique for every column queried through `lambda`.
    pub fn minimal_cover(&self, i: u16) -> NodeId {
        let holders: Vec<NodeId> = (0..self.nodes.len())
            .filter(|&id| self.nodes[id].interval.contains(i))
            .collect();
        let minimal: Vec<NodeId> = holders
            .iter()
            .copied()
            .filter(|&id| {
                !holders.iter().any(|&other| {
                    other != id
                        && self.nodes[id].interval.contains_interval(&self.nodes[other].interval)
                        && self.nodes[id].interval != self.nodes[other].interval
                })
            })
            .collect();
        assert!(
            minimal.len() == 1,
            "column {i} has {} minimal covers, expected exactly one",
            minimal.len()
        );
        minimal[0]
    }
}

pub fn build_poset(gamma: &PrimeSequence) -> Result<GammaPoset, Error> {
    let m = gamma.m();
    let n = gamma.n();
    let mut nodes: Vec<PosetNode> = Vec::new();
    let mut rows: Vec<Vec<NodeId>> = Vec::new();

    let mut current: Vec<NodeId> = Vec::new();
    for iv in gamma.intervals() {
        current.push(push_node(&mut nodes, *iv, 1, m));
        nodes.last_mut().unwrap().d = m - 1;
    }
    rows.push(current.clone());

    let mut row_no = 1u16;
    while current.len() > 1 {
        row_no += 1;
        let mut next: Vec<NodeId> = Vec::new();
        for pair in current.windows(2) {
            let (left, right) = (pair[0], pair[1]);
            let Some(meet) = nodes[left].interval.intersect(&nodes[right].interval) else {
                continue;
            };
            let id = push_node(&mut nodes, meet, row_no, m);
            nodes[id].d = if row_no == 2 { meet.width() - 1 } else { meet.width() };
            nodes[id].left_parent = Some(left);
            nodes[id].right_parent = Some(right);
            nodes[left].right_child = Some(id);
            nodes[right].left_child = Some(id);
            next.push(id);
        }
        if next.is_empty() {
            break;
        }
        rows.push(next.clone());
        current = next;
    }

    for id in 0..nodes.len() {
        let up = nodes[id].left_parent.map_or(m, |p| nodes[p].d);
        let down = nodes[id].left_child.map_or(0, |c| nodes[c].d);
        assert!(up > down, "block size at {} would be empty", nodes[id].interval);
        nodes[id].k = up - down;
    }

    let mut poset = GammaPoset { m, n, nodes, rows, ell: Vec::new() };
    let mut ell = Vec::with_capacity(poset.rows[0].len());
    for s in 0..poset.rows[0].len() {
        let lambda = poset.lambda(s);
        let chain = poset.chain(s);
        let mut total = 0u64;
        for i in lambda.a..=lambda.b {
            let cover = poset.minimal_cover(i);
            assert!(
                chain.contains(&cover),
                "minimal cover of column {i} is off the chain of its interval"
            );
            total += u64::from(poset.nodes[cover].d);
        }
        ell.push(total);
    }
    poset.ell = ell;
    Ok(poset)
}

fn push_node(nodes: &mut Vec<PosetNode>, interval: Interval, row: u16, m: u16) -> NodeId {
    nodes.push(PosetNode {
        interval,
        row,
        left_parent: None,
        right_parent: None,
        left_child: None,
        right_child: None,
        d: m,
        k: 0,
    });
    nodes.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::enumerate_prime_sequences;
    use alloc::vec;

    fn poset(m: u16, n: u16, ivs: &[(u16, u16)]) -> GammaPoset {
        build_poset(&PrimeSequence::new(m, n, ivs).unwrap()).unwrap()
    }

    fn row_intervals(p: &GammaPoset, r: usize) -> Vec<(u16, u16)> {
        p.rows()[r].iter().map(|&id| (p.node(id).interval.a, p.node(id).interval.b)).collect()
    }

    #[test]
    fn four_row_poset_of_the_width_six_example() {
        let p = poset(6, 16, &[(0, 7), (3, 9), (5, 11), (7, 13), (10, 17)]);
        assert_eq!(p.rows().len(), 4);
        assert_eq!(row_intervals(&p, 1), vec![(3, 7), (5, 9), (7, 11), (10, 13)]);
        assert_eq!(row_intervals(&p, 2), vec![(5, 7), (7, 9), (10, 11)]);
        assert_eq!(row_intervals(&p, 3), vec![(7, 7)]);
    }

    #[test]
    fn labels_of_the_three_interval_example() {
        let p = poset(4, 9, &[(0, 5), (3, 7), (5, 10)]);
        assert_eq!(p.rows().len(), 3);
        // Block sizes listed opposite the application order.
        let mut ks: Vec<u16> = p.block_order().iter().map(|&id| p.node(id).k).collect();
        ks.reverse();
        assert_eq!(ks, vec![4, 3, 2, 2, 2, 2]);
        assert_eq!(p.ell(), &[6, 4, 11]);
        // Row 2 rank bounds stay at most m-2.
        for &id in &p.rows()[1] {
            assert!(p.node(id).d <= 2);
        }
    }

    #[test]
    fn single_interval_poset_is_one_node() {
        let p = poset(3, 5, &[(0, 6)]);
        assert_eq!(p.nodes().len(), 1);
        let node = p.node(0);
        assert_eq!(node.d, 2);
        assert_eq!(node.k, 3);
        assert_eq!(p.ell(), &[10]);
    }

    #[test]
    fn chains_visit_every_node_exactly_once() {
        for ivs in [
            vec![(0u16, 5u16), (3, 7), (5, 10)],
            vec![(0, 7), (3, 9), (5, 11), (7, 13), (10, 17)],
        ] {
            let m = if ivs.len() == 3 { 4 } else { 6 };
            let n = ivs.last().unwrap().1 - 1;
            let p = poset(m, n, &ivs);
            let mut seen = vec![false; p.nodes().len()];
            for s in 0..p.rows()[0].len() {
                for id in p.chain(s) {
                    assert!(!seen[id], "node revisited");
                    seen[id] = true;
                }
            }
            assert!(seen.iter().all(|&v| v));
        }
    }

    #[test]
    fn row_two_rank_bound_holds_across_3x6() {
        for gamma in enumerate_prime_sequences(3, 6).unwrap() {
            let p = build_poset(&gamma).unwrap();
            if p.rows().len() > 1 {
                for &id in &p.rows()[1] {
                    assert!(p.node(id).d <= 1);
                }
            }
        }
    }
}
