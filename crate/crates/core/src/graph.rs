//! Signed multigraphs and the graph operations used by the complexes:
//! switching, deletion, contraction, disjoint union and per-subset
//! component/balance analysis.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::error::{Error, Result};

/// Largest edge count for which edge subsets fit in an [`EdgeSubset`] mask.
pub const MAX_EDGES: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(tail: usize, head: usize, sign: Sign) -> Self {
        Edge { tail, head, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    /// Endpoints as an unordered pair, smaller id first.
    pub fn endpoints(&self) -> (usize, usize) {
        if self.tail <= self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }

    pub fn is_incident(&self, v: usize) -> bool {
        self.tail == v || self.head == v
    }
}

impl From<(usize, usize, Sign)> for Edge {
    fn from((tail, head, sign): (usize, usize, Sign)) -> Self {
        Edge { tail, head, sign }
    }
}

/// A set of edge indices, stored as a bitmask over the edge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeSubset(pub u64);

impl EdgeSubset {
    pub const EMPTY: EdgeSubset = EdgeSubset(0);

    /// All edges of a graph with `edge_count` edges.
    pub fn full(edge_count: usize) -> Self {
        debug_assert!(edge_count <= MAX_EDGES);
        EdgeSubset((1u64 << edge_count) - 1)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        EdgeSubset(indices.into_iter().fold(0, |acc, e| acc | (1u64 << e)))
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 & (1u64 << e) != 0
    }

    pub fn with(self, e: usize) -> Self {
        EdgeSubset(self.0 | (1u64 << e))
    }

    pub fn without(self, e: usize) -> Self {
        EdgeSubset(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of members with index strictly below `e`; this is `n(e)` in
    /// the sign `(-1)^n(e)` of the differential.
    pub fn count_before(self, e: usize) -> usize {
        (self.0 & ((1u64 << e) - 1)).count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }
}

/// One connected component of a spanning subgraph `[G : s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Smallest vertex id in the component.
    pub representative: usize,
    /// Member vertices, ascending.
    pub members: Vec<usize>,
    pub balanced: bool,
}

/// Partition of the vertex set induced by an edge subset, with balance flags.
///
/// Components are sorted by representative; that order is the canonical
/// order of tensor factors in enhanced states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStructure {
    pub components: Vec<Component>,
    /// `component_of[v]` is the index of the component containing `v`.
    pub component_of: Vec<usize>,
    pub balanced_count: usize,
}

impl ComponentStructure {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.balanced_count == self.components.len()
    }
}

/// A signed multigraph with an ordered edge list. Loops and parallel edges
/// are allowed; the edge order is part of the value.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl SignedGraph {
    pub fn new<I, E>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        for e in &edges {
            for v in [e.tail, e.head] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
        }
        Ok(SignedGraph {
            vertex_count,
            edges,
        })
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        SignedGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<Edge> {
        self.edges.get(e).copied().ok_or(Error::EdgeOutOfRange {
            edge: e,
            edge_count: self.edges.len(),
        })
    }

    pub fn full_subset(&self) -> EdgeSubset {
        EdgeSubset::full(self.edges.len())
    }

    pub(crate) fn check_subset_size(&self) -> Result<()> {
        if self.edges.len() > MAX_EDGES {
            Err(Error::TooManyEdges {
                got: self.edges.len(),
                max: MAX_EDGES,
            })
        } else {
            Ok(())
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.tail == v) as usize + (e.head == v) as usize)
            .sum()
    }

    /// Connected components of the spanning subgraph `[G : s]` with their
    /// balance flags.
    ///
    /// Balance is decided by propagating vertex signs `mu` along a BFS
    /// spanning tree and checking `mu(u) * mu(w) == sign(e)` on every subset
    /// edge of the component; a negative loop always fails that test.
    pub fn components(&self, s: EdgeSubset) -> Result<ComponentStructure> {
        if let Some(bad) = s.iter().find(|&e| e >= self.edges.len()) {
            return Err(Error::EdgeOutOfRange {
                edge: bad,
                edge_count: self.edges.len(),
            });
        }
        Ok(self.components_unchecked(s))
    }

    pub(crate) fn components_unchecked(&self, s: EdgeSubset) -> ComponentStructure {
        let n = self.vertex_count;
        let mut adjacency: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
        for e in s.iter() {
            let edge = self.edges[e];
            adjacency[edge.tail].push((edge.head, edge.sign));
            if !edge.is_loop() {
                adjacency[edge.head].push((edge.tail, edge.sign));
            }
        }

        const UNSEEN: usize = usize::MAX;
        let mut component_of = vec![UNSEEN; n];
        let mut potential = vec![Sign::Positive; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();

        for root in 0..n {
            if component_of[root] != UNSEEN {
                continue;
            }
            let index = components.len();
            component_of[root] = index;
            potential[root] = Sign::Positive;
            queue.push_back(root);
            let mut members = Vec::new();
            let mut balanced = true;
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &(w, sign) in &adjacency[u] {
                    let expected = potential[u] * sign;
                    if component_of[w] == UNSEEN {
                        component_of[w] = index;
                        potential[w] = expected;
                        queue.push_back(w);
                    } else if potential[w] != expected {
                        balanced = false;
                    }
                }
            }
            members.sort_unstable();
            components.push(Component {
                representative: root,
                members,
                balanced,
            });
        }

        let balanced_count = components.iter().filter(|c| c.balanced).count();
        ComponentStructure {
            components,
            component_of,
            balanced_count,
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.components_unchecked(self.full_subset()).is_balanced()
    }

    /// Negates every non-loop edge at `v`. Loops keep their sign.
    pub fn vertex_switch(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                if e.is_incident(v) && !e.is_loop() {
                    Edge { sign: -e.sign, ..*e }
                } else {
                    *e
                }
            })
            .collect();
        Ok(SignedGraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    pub fn delete_edge(&self, e: usize) -> Result<Self> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(SignedGraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Merges the endpoints of a non-loop edge into the smaller id; larger
    /// ids shift down by one. Other edges keep their sign and order.
    pub fn contract_edge(&self, e: usize) -> Result<Self> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Err(Error::ContractLoop(e));
        }
        let (keep, gone) = edge.endpoints();
        let rename = |v: usize| match v.cmp(&gone) {
            core::cmp::Ordering::Less => v,
            core::cmp::Ordering::Equal => keep,
            core::cmp::Ordering::Greater => v - 1,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, x)| Edge::new(rename(x.tail), rename(x.head), x.sign))
            .collect();
        Ok(SignedGraph {
            vertex_count: self.vertex_count - 1,
            edges,
        })
    }

    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(
                other
                    .edges
                    .iter()
                    .map(|e| Edge::new(e.tail + shift, e.head + shift, e.sign)),
            )
            .collect();
        SignedGraph {
            vertex_count: self.vertex_count + other.vertex_count,
            edges,
        }
    }

    /// Reorders edges so that new position `k` holds old edge `order[k]`.
    pub fn permute_edges(&self, order: &[usize]) -> Result<Self> {
        let m = self.edges.len();
        let mut seen = vec![false; m];
        if order.len() != m {
            return Err(Error::BadPermutation(m));
        }
        for &i in order {
            if i >= m || seen[i] {
                return Err(Error::BadPermutation(m));
            }
            seen[i] = true;
        }
        Ok(SignedGraph {
            vertex_count: self.vertex_count,
            edges: order.iter().map(|&i| self.edges[i]).collect(),
        })
    }

    /// Moves edge `e` to the front, keeping the relative order of the rest.
    pub fn with_edge_first(&self, e: usize) -> Result<Self> {
        self.edge(e)?;
        let order: Vec<usize> = core::iter::once(e)
            .chain((0..self.edges.len()).filter(|&i| i != e))
            .collect();
        self.permute_edges(&order)
    }

    /// The underlying unsigned graph, encoded as the all-positive signing.
    pub fn all_positive(&self) -> SignedGraph {
        SignedGraph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    sign: Sign::Positive,
                    ..*e
                })
                .collect(),
        }
    }

    /// Length of the shortest negative circuit, or `None` when balanced.
    ///
    /// Brute force over edge subsets by increasing size: the first size at
    /// which some subset spans an unbalanced component is the answer.
    pub fn unbalanced_girth(&self) -> Option<usize> {
        if self.is_balanced() {
            return None;
        }
        let m = self.edges.len();
        if m > MAX_EDGES {
            return None;
        }
        (1..=m).find(|&size| {
            subsets_of_size(m, size).any(|s| !self.components_unchecked(s).is_balanced())
        })
    }
}

/// All subsets of `{0..m}` of the given size, ascending as integers.
pub(crate) fn subsets_of_size(m: usize, size: usize) -> impl Iterator<Item = EdgeSubset> {
    // Gosper's hack over the integers with `size` bits set.
    let limit: u64 = if m >= 64 { u64::MAX } else { 1u64 << m };
    let mut current: Option<u64> = if size > m {
        None
    } else if size == 0 {
        Some(0)
    } else {
        Some((1u64 << size) - 1)
    };
    core::iter::from_fn(move || {
        let value = current?;
        current = if value == 0 {
            None
        } else {
            let c = value & value.wrapping_neg();
            let r = value + c;
            let next = (((r ^ value) >> 2) / c) | r;
            if next < limit && next > value {
                Some(next)
            } else {
                None
            }
        };
        Some(EdgeSubset(value))
    })
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E=[", self.vertex_count)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{}{}", e.tail, e.sign, e.head)?;
        }
        write!(f, "]")
    }
}

/// Named graphs that appear throughout the tests and the CLI.
pub mod named {
    use super::*;

    /// Unbalanced triangle: e1 = v1v3 (+), e2 = v1v2 (+), e3 = v3v2 (-).
    pub fn sp3() -> SignedGraph {
        SignedGraph::new(
            3,
            [
                (0, 2, Sign::Positive),
                (0, 1, Sign::Positive),
                (2, 1, Sign::Negative),
            ],
        )
        .unwrap()
    }

    /// Digon with one positive and one negative edge.
    pub fn sp2() -> SignedGraph {
        SignedGraph::new(2, [(0, 1, Sign::Positive), (0, 1, Sign::Negative)]).unwrap()
    }

    /// `m` vertices, negative loops on the first `n` of them.
    pub fn sn(m: usize, n: usize) -> SignedGraph {
        assert!(n <= m);
        SignedGraph::new(m, (0..n).map(|v| (v, v, Sign::Negative))).unwrap()
    }

    /// Unbalanced polygon with `n` edges: a cycle with exactly one negative
    /// edge (the closing edge).
    pub fn unbalanced_polygon(n: usize) -> SignedGraph {
        assert!(n >= 1);
        if n == 1 {
            return sn(1, 1);
        }
        let edges = (0..n).map(|i| {
            let sign = if i + 1 == n {
                Sign::Negative
            } else {
                Sign::Positive
            };
            (i, (i + 1) % n, sign)
        });
        SignedGraph::new(n, edges).unwrap()
    }

    /// Path with `signs.len()` edges.
    pub fn path(signs: &[Sign]) -> SignedGraph {
        SignedGraph::new(
            signs.len() + 1,
            signs.iter().enumerate().map(|(i, &s)| (i, i + 1, s)),
        )
        .unwrap()
    }

    /// Star with centre 0 and `signs.len()` leaves.
    pub fn star(signs: &[Sign]) -> SignedGraph {
        SignedGraph::new(
            signs.len() + 1,
            signs.iter().enumerate().map(|(i, &s)| (0, i + 1, s)),
        )
        .unwrap()
    }

    /// All-positive cycle on `n` vertices.
    pub fn positive_cycle(n: usize) -> SignedGraph {
        SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, Sign::Positive))).unwrap()
    }

    /// Two components on eight vertices: an unbalanced K4 minus an edge and
    /// a balanced 4-cycle.
    pub fn two_component_example() -> SignedGraph {
        use Sign::*;
        SignedGraph::new(
            8,
            [
                (0, 1, Positive),
                (0, 2, Positive),
                (0, 3, Positive),
                (1, 3, Positive),
                (2, 3, Negative),
                (4, 5, Positive),
                (4, 6, Negative),
                (5, 7, Negative),
                (6, 7, Positive),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn two_component_example_balance() {
        let g = two_component_example();
        let c = g.components(g.full_subset()).unwrap();
        assert_eq!(c.component_count(), 2);
        assert_eq!(c.balanced_count, 1);
        assert!(!c.components[0].balanced);
        assert!(c.components[1].balanced);
    }

    #[test]
    fn empty_subset_gives_singletons() {
        let g = sp3();
        let c = g.components(EdgeSubset::EMPTY).unwrap();
        assert_eq!(c.component_count(), 3);
        assert_eq!(c.balanced_count, 3);
        for (i, comp) in c.components.iter().enumerate() {
            assert_eq!(comp.representative, i);
            assert_eq!(comp.members, vec![i]);
        }
    }

    #[test]
    fn sp3_single_edge_subset() {
        let c = sp3().components(EdgeSubset::from_indices([0])).unwrap();
        assert_eq!(c.components[0].members, vec![0, 2]);
        assert_eq!(c.components[1].members, vec![1]);
        assert_eq!(c.balanced_count, 2);
    }

    #[test]
    fn subset_out_of_range() {
        let err = sp3().components(EdgeSubset::from_indices([5])).unwrap_err();
        assert!(matches!(err, Error::EdgeOutOfRange { edge: 5, .. }));
    }

    #[test]
    fn negative_loop_is_unbalanced_positive_loop_is_not() {
        let neg = sn(1, 1);
        assert!(!neg.is_balanced());
        let pos = SignedGraph::new(1, [(0, 0, Sign::Positive)]).unwrap();
        assert!(pos.is_balanced());
    }

    #[test]
    fn switching_keeps_loops() {
        let g = sn(1, 1);
        assert_eq!(g.vertex_switch(0).unwrap(), g);
        let g = sp2().vertex_switch(1).unwrap();
        assert_eq!(g.edges()[0].sign, Sign::Negative);
        assert_eq!(g.edges()[1].sign, Sign::Positive);
        assert!(sp2().vertex_switch(2).is_err());
    }

    #[test]
    fn deletion() {
        let g = sp3().delete_edge(2).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(
            g.edges(),
            &[
                Edge::new(0, 2, Sign::Positive),
                Edge::new(0, 1, Sign::Positive)
            ]
        );
        let single = path(&[Sign::Negative]).delete_edge(0).unwrap();
        assert_eq!(single, SignedGraph::edgeless(2));
        let g = sp2().delete_edge(1).unwrap();
        assert_eq!(g.edges(), &[Edge::new(0, 1, Sign::Positive)]);
        assert!(sp2().delete_edge(2).is_err());
    }

    #[test]
    fn contraction() {
        let g = sp3().contract_edge(0).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(
            g.edges(),
            &[
                Edge::new(0, 1, Sign::Positive),
                Edge::new(0, 1, Sign::Negative)
            ]
        );
        let g = path(&[Sign::Positive]).contract_edge(0).unwrap();
        assert_eq!(g, SignedGraph::edgeless(1));
        let g = positive_cycle(3).contract_edge(1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.edges().iter().all(|e| e.endpoints() == (0, 1) && e.sign.is_positive()));
        assert_eq!(sn(1, 1).contract_edge(0), Err(Error::ContractLoop(0)));
    }

    #[test]
    fn contraction_creates_loops() {
        let g = sp2().contract_edge(0).unwrap();
        assert_eq!(g, sn(1, 1));
    }

    #[test]
    fn union() {
        let g = sn(1, 1).disjoint_union(&sn(1, 0));
        assert_eq!(g, sn(2, 1));
        let g = sp2().disjoint_union(&sp2());
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let c = g.components(g.full_subset()).unwrap();
        assert_eq!(c.component_count(), 2);
        assert_eq!(c.balanced_count, 0);
    }

    #[test]
    fn girth() {
        assert_eq!(sn(1, 1).unbalanced_girth(), Some(1));
        assert_eq!(sp2().unbalanced_girth(), Some(2));
        assert_eq!(positive_cycle(3).unbalanced_girth(), None);
        assert_eq!(sp3().unbalanced_girth(), Some(3));
        assert_eq!(two_component_example().unbalanced_girth(), Some(3));
    }

    #[test]
    fn gosper_enumeration_counts() {
        for m in 0..8 {
            for k in 0..=m {
                let all: Vec<_> = subsets_of_size(m, k).collect();
                let expected = (0u64..1 << m).filter(|x| x.count_ones() as usize == k).count();
                assert_eq!(all.len(), expected, "m={m} k={k}");
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
