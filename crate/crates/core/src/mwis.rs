//! Exact maximum weight independent set and minimum weight dominating set.

use crate::error::{ensure_capacity, Result};
use crate::graph::{Graph, VertexSet, Weights};
use crate::weight::Weight;

/// Largest graph the exhaustive solvers accept.
pub const ORACLE_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<W> {
    pub set: VertexSet,
    pub weight: W,
    pub nodes_explored: u64,
}

/// Weight-only branch and bound over candidate sets of one graph.
struct IndependentSetSearch<'a, W> {
    g: &'a Graph,
    w: &'a [W],
    nodes: u64,
    best: W,
}

impl<'a, W: Weight> IndependentSetSearch<'a, W> {
    fn new(g: &'a Graph, w: &'a Weights<W>) -> Self {
        IndependentSetSearch { g, w: w.as_slice(), nodes: 0, best: W::zero() }
    }

    fn sum(&self, s: VertexSet) -> W {
        s.iter().map(|v| self.w[v]).sum()
    }

    /// Maximum weight of an independent set inside `cand`.
    fn optimum(&mut self, cand: VertexSet) -> W {
        self.best = W::zero();
        self.branch(cand, W::zero());
        self.best
    }

    fn branch(&mut self, mut cand: VertexSet, mut acc: W) {
        self.nodes += 1;
        // A vertex at least as heavy as its remaining neighborhood belongs to some
        // optimum; isolated vertices are the special case of an empty neighborhood.
        loop {
            let mut reduced = false;
            for v in cand {
                if !cand.contains(v) {
                    continue;
                }
                let nb = self.g.neighbors(v).intersection(cand);
                if self.w[v] >= self.sum(nb) {
                    acc = acc + self.w[v];
                    cand = cand.difference(nb).without(v);
                    reduced = true;
                }
            }
            if !reduced {
                break;
            }
        }
        if acc > self.best {
            self.best = acc;
        }
        if cand.is_empty() || acc + self.sum(cand) <= self.best {
            return;
        }
        let pivot = cand
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v).intersection(cand).len(), std::cmp::Reverse(v)))
            .expect("candidate set is non-empty");
        let closed = self.g.closed_neighborhood(pivot);
        self.branch(cand.difference(closed), acc + self.w[pivot]);
        self.branch(cand.without(pivot), acc);
    }
}

/// Maximum weight independent set by branch and bound.
///
/// Among all optimal sets the lexicographically least one (see
/// [`VertexSet`]'s ordering) is returned: after the optimum is known, the set is
/// rebuilt element by element, each time taking the smallest vertex that still
/// admits an optimal completion from larger vertices.
pub fn mwis_exact<W: Weight>(g: &Graph, w: &Weights<W>) -> Result<Solution<W>> {
    w.check_len(g)?;
    let mut search = IndependentSetSearch::new(g, w);
    let optimum = search.optimum(g.vertices());

    let mut set = VertexSet::EMPTY;
    let mut allowed = g.vertices();
    let mut remaining = optimum;
    while remaining > W::zero() {
        let mut next = None;
        for x in allowed {
            if w[x] > remaining {
                continue;
            }
            let rest = allowed.above(x).difference(g.neighbors(x));
            if w[x] + search.optimum(rest) == remaining {
                next = Some((x, rest));
                break;
            }
        }
        let (x, rest) = next.expect("an optimal completion exists");
        set.insert(x);
        remaining = remaining - w[x];
        allowed = rest;
    }
    debug_assert!(g.is_independent(set));
    Ok(Solution { set, weight: optimum, nodes_explored: search.nodes })
}

/// Exhaustive maximum weight independent set over all `2^n` subsets, `n <= 24`.
///
/// Ties resolve to the lexicographically least set, matching [`mwis_exact`].
pub fn mwis_oracle<W: Weight>(g: &Graph, w: &Weights<W>) -> Result<Solution<W>> {
    ensure_capacity("mwis_oracle", g.n(), ORACLE_LIMIT)?;
    w.check_len(g)?;
    let mut best = (W::zero(), VertexSet::EMPTY);
    let subsets = 1u64 << g.n();
    for bits in 0..subsets {
        let s = VertexSet::from_bits(bits);
        if !g.is_independent(s) {
            continue;
        }
        let weight = w.sum_over(s);
        if weight > best.0 || (weight == best.0 && s < best.1) {
            best = (weight, s);
        }
    }
    Ok(Solution { set: best.1, weight: best.0, nodes_explored: subsets })
}

struct DominatingSetSearch<'a, W> {
    g: &'a Graph,
    w: &'a [W],
    nodes: u64,
    best: Option<(W, VertexSet)>,
}

impl<W: Weight> DominatingSetSearch<'_, W> {
    fn branch(&mut self, chosen: VertexSet, dominated: VertexSet, forbidden: VertexSet, acc: W) {
        self.nodes += 1;
        if matches!(self.best, Some((b, _)) if acc >= b) {
            return;
        }
        let undominated = self.g.vertices().difference(dominated);
        let Some(u) = undominated.first() else {
            self.best = Some((acc, chosen));
            return;
        };
        if undominated.iter().any(|x| self.g.closed_neighborhood(x).is_subset(forbidden)) {
            return;
        }
        let mut forbidden = forbidden;
        for c in self.g.closed_neighborhood(u).difference(forbidden) {
            self.branch(
                chosen.with(c),
                dominated.union(self.g.closed_neighborhood(c)),
                forbidden,
                acc + self.w[c],
            );
            forbidden.insert(c);
        }
    }
}

/// Minimum weight dominating set, `n <= 24`.
///
/// Branches on which vertex dominates the lowest undominated vertex. The
/// returned set is the first optimum met in that order; only its weight is
/// canonical.
pub fn mwds_exact<W: Weight>(g: &Graph, w: &Weights<W>) -> Result<Solution<W>> {
    ensure_capacity("mwds_exact", g.n(), ORACLE_LIMIT)?;
    w.check_len(g)?;
    let mut search = DominatingSetSearch { g, w: w.as_slice(), nodes: 0, best: None };
    search.branch(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY, W::zero());
    let (weight, set) = search.best.expect("the full vertex set dominates");
    debug_assert!(g.is_dominating(set));
    Ok(Solution { set, weight, nodes_explored: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::harness::random_graph;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn weights(ws: &[u64]) -> Weights<u64> {
        Weights::new(ws.to_vec()).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Minimum dominating weight by plain subset enumeration.
    fn mwds_enumerate(g: &Graph, w: &Weights<u64>) -> u64 {
        (0..1u64 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_dominating(s))
            .map(|s| w.sum_over(s))
            .min()
            .unwrap()
    }

    #[test]
    fn mwis_examples() {
        let r = mwis_exact(&Graph::empty(3), &weights(&[1, 2, 3])).unwrap();
        assert_eq!((r.set, r.weight), (set(&[0, 1, 2]), 6));

        let r = mwis_exact(&Graph::complete(3), &weights(&[1, 2, 3])).unwrap();
        assert_eq!((r.set, r.weight), (set(&[2]), 3));

        let c5 = Graph::cycle(5);
        let ones = Weights::uniform(5, 1u64);
        assert_eq!(mwis_exact(&c5, &ones).unwrap().weight, 2);
        assert_eq!(mwis_oracle(&c5, &ones).unwrap().weight, 2);
        // lexicographically least maximum independent set of C5
        assert_eq!(mwis_exact(&c5, &ones).unwrap().set, set(&[0, 2]));
    }

    #[test]
    fn oracle_examples() {
        let r = mwis_oracle(&Graph::path(4), &weights(&[2, 3, 3, 2])).unwrap();
        assert_eq!(r.weight, 5);
        assert_eq!(r.set, set(&[0, 2]));

        let r = mwis_oracle(&Graph::empty(1), &weights(&[7])).unwrap();
        assert_eq!((r.set, r.weight), (set(&[0]), 7));

        let r = mwis_oracle(&Graph::cycle(4), &weights(&[3, 3, 3, 3])).unwrap();
        assert_eq!((r.set, r.weight), (set(&[0, 2]), 6));

        assert!(matches!(
            mwis_oracle(&Graph::empty(25), &Weights::uniform(25, 1u64)),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn mwds_examples() {
        let r = mwds_exact(&Graph::empty(1), &weights(&[1])).unwrap();
        assert_eq!((r.set, r.weight), (set(&[0]), 1));

        let r = mwds_exact(&Graph::path(4), &weights(&[2, 3, 3, 2])).unwrap();
        assert_eq!((r.set, r.weight), (set(&[0, 3]), 4));

        let r = mwds_exact(&Graph::cycle(4), &weights(&[3, 3, 3, 3])).unwrap();
        assert_eq!(r.weight, 6);
        assert_eq!(r.set.len(), 2);
        assert!(Graph::cycle(4).is_dominating(r.set));

        assert!(mwds_exact(&Graph::empty(25), &Weights::uniform(25, 1u64)).is_err());
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0);
        let w: Weights<u64> = g.domination_weights();
        assert_eq!(mwis_exact(&g, &w).unwrap().weight, 0);
        assert_eq!(mwis_oracle(&g, &w).unwrap().set, VertexSet::EMPTY);
        assert_eq!(mwds_exact(&g, &w).unwrap().weight, 0);
    }

    #[test]
    fn weight_length_mismatch() {
        assert_eq!(
            mwis_exact(&Graph::path(3), &weights(&[1, 1])),
            Err(Error::WeightLength { expected: 3, found: 2 })
        );
    }

    #[test]
    fn zero_weights_prefer_shorter_prefix() {
        // {0} and {0,2} both weigh 5; the prefix is lexicographically smaller
        let r = mwis_exact(&Graph::path(3), &weights(&[5, 0, 0])).unwrap();
        assert_eq!((r.set, r.weight), (set(&[0]), 5));
        assert_eq!(mwis_oracle(&Graph::path(3), &weights(&[5, 0, 0])).unwrap().set, set(&[0]));
        let r = mwis_exact(&Graph::empty(3), &Weights::uniform(3, 0u64)).unwrap();
        assert_eq!(r.set, VertexSet::EMPTY);
    }

    #[test]
    fn generic_weight_types_agree() {
        let g = Graph::cycle(7);
        let a = mwis_exact(&g, &g.domination_weights::<u32>()).unwrap();
        let b = mwis_exact(&g, &g.domination_weights::<i64>()).unwrap();
        let c = mwis_exact(&g, &g.domination_weights::<u64>()).unwrap();
        assert_eq!((a.set, a.weight as u64), (c.set, c.weight));
        assert_eq!((b.set, b.weight as u64), (c.set, c.weight));
    }

    #[test]
    fn exact_equals_oracle_on_all_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 0..=5 {
            for g in crate::harness::enumerate_labeled(n).unwrap() {
                let w = Weights::new((0..n).map(|_| rng.random_range(0..=4u64)).collect()).unwrap();
                let exact = mwis_exact(&g, &w).unwrap();
                let oracle = mwis_oracle(&g, &w).unwrap();
                assert_eq!(exact.set, oracle.set, "{g:?} {w:?}");
                assert_eq!(exact.weight, oracle.weight);
            }
        }
    }

    #[test]
    fn mwds_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for i in 0..300 {
            let n = rng.random_range(1..=10);
            let g = random_graph(n, rng.random_range(0.0..1.0), i).unwrap();
            let w = Weights::new((0..n).map(|_| rng.random_range(0..=6u64)).collect()).unwrap();
            let r = mwds_exact(&g, &w).unwrap();
            assert!(g.is_dominating(r.set));
            assert_eq!(r.weight, w.sum_over(r.set));
            assert_eq!(r.weight, mwds_enumerate(&g, &w), "{g:?} {w:?}");
        }
    }

    proptest! {
        #[test]
        fn isolated_vertex_adds_its_weight(
            n in 1usize..12,
            p in 0.0f64..1.0,
            seed in any::<u64>(),
            extra in 0u64..20,
        ) {
            let g = random_graph(n, p, seed).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let ws: Vec<u64> = (0..n).map(|_| rng.random_range(0..10)).collect();
            let base = mwis_exact(&g, &Weights::new(ws.clone()).unwrap()).unwrap().weight;

            let bigger = Graph::from_edge_list(n + 1, g.edges()).unwrap();
            let mut ws2 = ws;
            ws2.push(extra);
            let grown = mwis_exact(&bigger, &Weights::new(ws2).unwrap()).unwrap().weight;
            prop_assert_eq!(grown, base + extra);
        }

        #[test]
        fn returned_sets_are_feasible(n in 0usize..16, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = random_graph(n, p, seed).unwrap();
            let w = g.domination_weights::<u64>();
            let r = mwis_exact(&g, &w).unwrap();
            prop_assert!(g.is_independent(r.set));
            prop_assert_eq!(r.weight, w.sum_over(r.set));
            let d = mwds_exact(&g, &w).unwrap();
            prop_assert!(g.is_dominating(d.set));
            prop_assert_eq!(d.weight, w.sum_over(d.set));
        }
    }
}
