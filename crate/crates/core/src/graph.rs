//! Bitset graphs, vertex sets, distances, squares and domination weights.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::error::{ensure_capacity, Error, Result};
use crate::weight::Weight;

/// Largest supported vertex count; a vertex set is one `u64`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices drawn from `0..64`.
///
/// Equality is set equality. Ordering is lexicographic on the ascending
/// element sequence, so `{0,3} < {0,4} < {1}` and a proper prefix sorts first
/// (`{0} < {0,3}`). Every "lexicographically least" tie-break in this crate
/// refers to this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements strictly greater than `v`.
    pub const fn above(self, v: usize) -> Self {
        if v >= 63 {
            VertexSet(0)
        } else {
            VertexSet(self.0 & (u64::MAX << (v + 1)))
        }
    }

    /// Ascending iteration.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let x = diff.trailing_zeros() as usize;
        // Both sequences agree below x; the one holding x is smaller unless the
        // other one has already ended.
        let (holder, other_set) = if self.contains(x) { (Ordering::Less, *other) } else { (Ordering::Greater, *self) };
        if other_set.above(x).is_empty() {
            holder.reverse()
        } else {
            holder
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} exceeds capacity");
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Simple undirected graph on vertices `0..n`, `n <= 64`, stored as neighbor bitsets.
///
/// Graphs are immutable once built; every operation returns a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either orientation) collapse.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        ensure_capacity("graph construction", n, MAX_VERTICES)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|v| !adj[v].contains(v)
            && adj[v].iter().all(|u| u < adj.len() && adj[u].contains(v))));
        Graph { adj }
    }

    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        Graph { adj: vec![VertexSet::EMPTY; n] }
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        let all = VertexSet::full(n);
        Graph { adj: (0..n).map(|v| all.without(v)).collect() }
    }

    /// Path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).expect("path within capacity")
    }

    /// Cycle `0-1-..-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle within capacity")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `{v}` together with its neighbors.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ascending by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)))
    }

    /// No edge has both endpoints in `s`.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Every vertex outside `s` has a neighbor in `s`.
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        self.vertices().difference(s).iter().all(|v| !self.adj[v].is_disjoint(s))
    }

    /// `N[s]`.
    pub fn closed_neighborhood_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v]))
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending order of the original labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        let keep = s.intersection(self.vertices()).to_vec();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|u| position[u]).collect())
            .collect();
        Graph { adj }
    }

    /// Graph with vertex `v` removed (labels above `v` shift down by one).
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { adj }
    }

    /// Breadth-first hop distances between all pairs.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.n();
        let mut hops = vec![Distance::Unreachable; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for source in 0..n {
            let row = &mut hops[source * n..(source + 1) * n];
            row[source] = Distance::Finite(0);
            queue.clear();
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                let Distance::Finite(du) = row[u] else { unreachable!() };
                for v in self.adj[u] {
                    if row[v] == Distance::Unreachable {
                        row[v] = Distance::Finite(du + 1);
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, hops }
    }

    /// The square: same vertices, `uv` an edge iff `1 <= dist(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let adj = (0..self.n())
            .map(|v| {
                let reach = self.adj[v].iter().fold(self.adj[v], |acc, u| acc.union(self.adj[u]));
                reach.without(v)
            })
            .collect();
        Graph { adj }
    }

    /// `w(v) = deg(v) + 1`.
    pub fn domination_weights<W: Weight>(&self) -> Weights<W> {
        Weights((0..self.n()).map(|v| W::from_count(self.degree(v) + 1)).collect())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// Hop distance; unreachable pairs sort after every finite distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    hops: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.hops[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.hops[u * self.n..(u + 1) * self.n]
    }
}

/// Per-vertex nonnegative weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights<W>(Vec<W>);

impl<W: Weight> Weights<W> {
    pub fn new(values: Vec<W>) -> Result<Self> {
        if let Some(v) = values.iter().position(|&w| w < W::zero()) {
            return Err(Error::NegativeWeight(v));
        }
        Ok(Weights(values))
    }

    pub fn uniform(n: usize, w: W) -> Self {
        Weights::new(vec![w; n]).expect("uniform weight must be nonnegative")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> W {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[W] {
        &self.0
    }

    pub fn total(&self) -> W {
        self.0.iter().copied().sum()
    }

    pub fn sum_over(&self, s: VertexSet) -> W {
        s.iter().map(|v| self.0[v]).sum()
    }

    /// Fails unless there is exactly one weight per vertex of `g`.
    pub fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::WeightLength { expected: g.n(), found: self.len() });
        }
        Ok(())
    }
}

impl<W> std::ops::Index<usize> for Weights<W> {
    type Output = W;

    fn index(&self, v: usize) -> &W {
        &self.0[v]
    }
}
