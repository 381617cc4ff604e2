//! Efficient dominating sets: certificate checking, two deciders, and the
//! three-way equivalence check between perfect codes, minimum weight
//! dominating sets and maximum weight independent sets of the square.

use std::fmt;

use crate::error::{ensure_capacity, Result};
use crate::graph::{Graph, VertexSet};
use crate::mwis::{mwds_exact, mwis_exact, ORACLE_LIMIT};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Maximum weight independent set in the square with degree-plus-one weights.
    Square,
    /// Exact cover of the vertex set by closed neighborhoods.
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Square => "square",
            Method::BruteForce => "brute",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdsOutcome {
    Exists(VertexSet),
    NotExists,
}

impl EdsOutcome {
    pub fn exists(&self) -> bool {
        matches!(self, EdsOutcome::Exists(_))
    }

    pub fn witness(&self) -> Option<VertexSet> {
        match *self {
            EdsOutcome::Exists(d) => Some(d),
            EdsOutcome::NotExists => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdsResult {
    pub outcome: EdsOutcome,
    pub method: Method,
}

/// `d` is independent and every vertex outside `d` has exactly one neighbor in `d`.
pub fn verify_eds(g: &Graph, d: VertexSet) -> bool {
    d.is_subset(g.vertices())
        && g.is_independent(d)
        && g.vertices().difference(d).iter().all(|v| g.neighbors(v).intersection(d).len() == 1)
}

/// Exact-cover search: vertices are decided in ascending order, taking a vertex
/// before skipping it, and a branch dies as soon as some uncovered vertex has no
/// admissible closed neighborhood left.
struct CoverSearch<'a> {
    g: &'a Graph,
    closed: Vec<VertexSet>,
}

impl CoverSearch<'_> {
    fn new(g: &Graph) -> CoverSearch<'_> {
        CoverSearch { g, closed: (0..g.n()).map(|v| g.closed_neighborhood(v)).collect() }
    }

    /// Vertices `>= next` whose closed neighborhood avoids `covered`.
    fn available(&self, covered: VertexSet, next: usize) -> VertexSet {
        let pool = if next == 0 { self.g.vertices() } else { self.g.vertices().above(next - 1) };
        pool.iter().filter(|&c| self.closed[c].is_disjoint(covered)).collect()
    }

    fn search(&self, chosen: VertexSet, covered: VertexSet, next: usize, found: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        let uncovered = self.g.vertices().difference(covered);
        if uncovered.is_empty() {
            return found(chosen);
        }
        let available = self.available(covered, next);
        if uncovered.iter().any(|u| self.closed[u].is_disjoint(available)) {
            return false;
        }
        let c = available.first().expect("some uncovered vertex has a candidate");
        if self.search(chosen.with(c), covered.union(self.closed[c]), c + 1, found) {
            return true;
        }
        self.search(chosen, covered, c + 1, found)
    }
}

/// Exact-cover decider, `n <= 24`. Returns the lexicographically least
/// efficient dominating set when one exists.
pub fn eds_brute_force(g: &Graph) -> Result<EdsResult> {
    ensure_capacity("eds_brute_force", g.n(), ORACLE_LIMIT)?;
    let mut witness = None;
    CoverSearch::new(g).search(VertexSet::EMPTY, VertexSet::EMPTY, 0, &mut |d| {
        witness = Some(d);
        true
    });
    let outcome = witness.map_or(EdsOutcome::NotExists, EdsOutcome::Exists);
    Ok(EdsResult { outcome, method: Method::BruteForce })
}

/// Every efficient dominating set, in lexicographic order.
#[cfg(test)]
pub(crate) fn all_eds(g: &Graph) -> Vec<VertexSet> {
    let mut all = Vec::new();
    CoverSearch::new(g).search(VertexSet::EMPTY, VertexSet::EMPTY, 0, &mut |d| {
        all.push(d);
        false
    });
    all
}

/// Decides existence through the square: an efficient dominating set exists iff
/// the maximum weight independent set of the square under `w(v) = deg(v) + 1`
/// weighs exactly `n`, and that set is then a witness.
pub fn eds_via_square(g: &Graph) -> EdsResult {
    let w = g.domination_weights::<u64>();
    let r = mwis_exact(&g.square(), &w).expect("weights built from the same graph");
    let outcome = if r.weight == g.n() as u64 {
        debug_assert!(verify_eds(g, r.set));
        EdsOutcome::Exists(r.set)
    } else {
        EdsOutcome::NotExists
    };
    EdsResult { outcome, method: Method::Square }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Report {
    pub n: usize,
    /// An efficient dominating set exists (exact cover).
    pub eds_exists: bool,
    pub mwds_weight: u64,
    /// The minimum weight dominating set weighs exactly `n`.
    pub mwds_attains_n: bool,
    pub mwis_square_weight: u64,
    /// The maximum weight independent set of the square weighs exactly `n`.
    pub mwis_attains_n: bool,
}

impl Lemma1Report {
    pub fn consistent(&self) -> bool {
        self.eds_exists == self.mwds_attains_n && self.mwds_attains_n == self.mwis_attains_n
    }
}

impl fmt::Display for Lemma1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "eds_exists={}", self.eds_exists)?;
        writeln!(f, "mwds_weight={}", self.mwds_weight)?;
        writeln!(f, "mwis_square_weight={}", self.mwis_square_weight)?;
        write!(f, "consistent={}", self.consistent())
    }
}

/// Runs all three characterizations on one graph, `n <= 24`.
pub fn check_lemma1(g: &Graph) -> Result<Lemma1Report> {
    check_lemma1_with::<u64>(g)
}

/// [`check_lemma1`] with solver arithmetic in `W`.
pub fn check_lemma1_with<W: Weight + Into<u64>>(g: &Graph) -> Result<Lemma1Report> {
    ensure_capacity("check_lemma1", g.n(), ORACLE_LIMIT)?;
    let w = g.domination_weights::<W>();
    let target = W::from_count(g.n());
    let eds_exists = eds_brute_force(g)?.outcome.exists();
    let mwds = mwds_exact(g, &w)?;
    let mwis = mwis_exact(&g.square(), &w)?;
    Ok(Lemma1Report {
        n: g.n(),
        eds_exists,
        mwds_weight: mwds.weight.into(),
        mwds_attains_n: mwds.weight == target,
        mwis_square_weight: mwis.weight.into(),
        mwis_attains_n: mwis.weight == target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{enumerate_labeled, random_graph};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Plain subset enumeration with the two defining conditions.
    fn eds_enumerate(g: &Graph) -> Vec<VertexSet> {
        let mut all: Vec<VertexSet> = (0..1u64 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&d| {
                g.is_independent(d)
                    && (0..g.n()).all(|v| d.contains(v) || g.neighbors(v).intersection(d).len() == 1)
            })
            .collect();
        all.sort();
        all
    }

    #[test]
    fn verify_examples() {
        assert!(verify_eds(&Graph::empty(1), set(&[0])));
        assert!(verify_eds(&Graph::path(4), set(&[0, 3])));
        assert!(!verify_eds(&Graph::cycle(4), set(&[0, 2])));
        assert!(!verify_eds(&Graph::path(4), set(&[0, 2])));
        assert!(!verify_eds(&Graph::path(3), set(&[0, 1])));
        assert!(verify_eds(&Graph::empty(0), VertexSet::EMPTY));
    }

    #[test]
    fn brute_force_examples() {
        let r = eds_brute_force(&Graph::path(4)).unwrap();
        assert_eq!(r.outcome, EdsOutcome::Exists(set(&[0, 3])));
        assert_eq!(r.method, Method::BruteForce);
        assert_eq!(eds_enumerate(&Graph::path(4)), vec![set(&[0, 3])]);

        assert_eq!(eds_brute_force(&Graph::cycle(4)).unwrap().outcome, EdsOutcome::NotExists);
        assert!(eds_enumerate(&Graph::cycle(4)).is_empty());

        assert_eq!(eds_brute_force(&Graph::empty(1)).unwrap().outcome, EdsOutcome::Exists(set(&[0])));
        assert!(eds_brute_force(&Graph::empty(25)).unwrap_err().is_capacity());
    }

    #[test]
    fn via_square_examples() {
        let p4 = Graph::path(4);
        let sq = p4.square();
        let w = p4.domination_weights::<u64>();
        let mwis = mwis_exact(&sq, &w).unwrap();
        assert_eq!((mwis.set, mwis.weight), (set(&[0, 3]), 4));
        assert_eq!(eds_via_square(&p4).outcome, EdsOutcome::Exists(set(&[0, 3])));

        let c4 = Graph::cycle(4);
        assert_eq!(c4.square(), Graph::complete(4));
        assert_eq!(mwis_exact(&c4.square(), &c4.domination_weights::<u64>()).unwrap().weight, 3);
        assert_eq!(eds_via_square(&c4).outcome, EdsOutcome::NotExists);

        assert_eq!(eds_via_square(&Graph::empty(1)).outcome, EdsOutcome::Exists(set(&[0])));
    }

    #[test]
    fn empty_graph_has_empty_eds() {
        let g = Graph::empty(0);
        assert_eq!(eds_brute_force(&g).unwrap().outcome, EdsOutcome::Exists(VertexSet::EMPTY));
        assert_eq!(eds_via_square(&g).outcome, EdsOutcome::Exists(VertexSet::EMPTY));
        assert!(check_lemma1(&g).unwrap().consistent());
    }

    #[test]
    fn lemma1_examples() {
        let r = check_lemma1(&Graph::path(4)).unwrap();
        assert!(r.eds_exists && r.mwds_attains_n && r.mwis_attains_n && r.consistent());

        let r = check_lemma1(&Graph::cycle(4)).unwrap();
        assert!(!r.eds_exists && !r.mwds_attains_n && !r.mwis_attains_n && r.consistent());
        assert_eq!(r.mwds_weight, 6);

        let r = check_lemma1(&Graph::complete(2)).unwrap();
        assert!(r.eds_exists && r.mwds_attains_n && r.mwis_attains_n);
        assert_eq!(r.mwds_weight, 2);

        let r = check_lemma1_with::<u32>(&Graph::cycle(6)).unwrap();
        assert!(r.eds_exists && r.consistent());
    }

    #[test]
    fn brute_force_matches_enumeration_exhaustively() {
        for n in 0..=6 {
            for g in enumerate_labeled(n).unwrap() {
                let expected = eds_enumerate(&g);
                assert_eq!(all_eds(&g), expected, "{g:?}");
                let got = eds_brute_force(&g).unwrap().outcome;
                assert_eq!(got.witness(), expected.first().copied());
            }
        }
    }

    #[test]
    fn every_enumerated_eds_verifies_and_partitions() {
        for seed in 0..200 {
            let g = random_graph(12, 0.15 + (seed % 7) as f64 * 0.05, seed).unwrap();
            for d in all_eds(&g) {
                assert!(verify_eds(&g, d));
                let total: usize = d.iter().map(|v| g.degree(v) + 1).sum();
                assert_eq!(total, g.n());
            }
        }
    }

    #[test]
    fn deciders_agree_on_random_graphs() {
        for seed in 0..500 {
            let n = 1 + (seed % 20) as usize;
            let g = random_graph(n, 0.05 + (seed % 10) as f64 * 0.08, seed).unwrap();
            let a = eds_via_square(&g).outcome;
            let b = eds_brute_force(&g).unwrap().outcome;
            assert_eq!(a.exists(), b.exists(), "{g:?}");
            if let Some(d) = a.witness() {
                assert!(verify_eds(&g, d));
            }
        }
    }
}
