//! Named forbidden patterns and induced-subgraph detection.
//!
//! Detection backtracks over the pattern vertices in a fixed search order:
//! descending pattern degree, ties broken by ascending pattern index (see
//! [`Pattern::search_order`]). Host candidates are tried in ascending order and
//! filtered word-parallel so that every partial map is already an induced
//! embedding. The first embedding found is therefore the least one when the
//! host vertices are read in search order.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, PartialEq, Eq)]
pub struct Pattern {
    name: &'static str,
    graph: Graph,
    order: Vec<usize>,
    plan: Vec<Step>,
}

/// Constraints on the pattern vertex at one search position.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Step {
    degree: usize,
    /// Earlier positions that must map to host neighbors.
    adjacent_before: VertexSet,
    /// Earlier positions that must map to host non-neighbors.
    nonadjacent_before: VertexSet,
}

impl Pattern {
    pub fn new(name: &'static str, graph: Graph) -> Pattern {
        let mut order: Vec<usize> = (0..graph.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
        let plan = order
            .iter()
            .enumerate()
            .map(|(i, &pv)| {
                let adjacent_before: VertexSet = (0..i).filter(|&j| graph.has_edge(pv, order[j])).collect();
                Step {
                    degree: graph.degree(pv),
                    adjacent_before,
                    nonadjacent_before: VertexSet::full(i).difference(adjacent_before),
                }
            })
            .collect();
        Pattern { name, graph, order, plan }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Pattern vertices in the order the detector assigns them.
    pub fn search_order(&self) -> &[usize] {
        &self.order
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({}, {:?})", self.name, self.graph)
    }
}

fn edges(n: usize, list: &[(usize, usize)]) -> Graph {
    Graph::from_edge_list(n, list.iter().copied()).expect("catalog pattern is well formed")
}

/// The built-in catalog. Names are the identifiers accepted by [`pattern_by_name`].
///
/// | name   | vertices | structure |
/// |--------|----------|-----------|
/// | P4..P7 | 4..7     | chordless path `0-1-..` |
/// | C4     | 4        | chordless cycle `0-1-2-3-0` |
/// | claw   | 4        | K1,3 with center 0 |
/// | banner | 5        | C4 `0-1-2-3-0` plus vertex 4 adjacent to 0 only |
/// | bull   | 5        | triangle `0,1,2` plus pendants 3 on 0 and 4 on 1 |
/// | S113   | 6        | center 0 with legs `1`, `2`, `3-4-5` |
/// | S122   | 6        | center 0 with legs `1`, `2-3`, `4-5` |
/// | 2P3    | 6        | two disjoint paths `0-1-2`, `3-4-5` |
pub fn catalog() -> Vec<Pattern> {
    vec![
        Pattern::new("P4", Graph::path(4)),
        Pattern::new("P5", Graph::path(5)),
        Pattern::new("P6", Graph::path(6)),
        Pattern::new("P7", Graph::path(7)),
        Pattern::new("C4", Graph::cycle(4)),
        Pattern::new("claw", edges(4, &[(0, 1), (0, 2), (0, 3)])),
        Pattern::new("banner", banner_graph()),
        Pattern::new("bull", edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])),
        Pattern::new("S113", edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])),
        Pattern::new("S122", edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])),
        Pattern::new("2P3", edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)])),
    ]
}

fn banner_graph() -> Graph {
    edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
}

/// Case-insensitive catalog lookup; `K13` is accepted for the claw.
pub fn pattern_by_name(name: &str) -> Result<Pattern> {
    let wanted = match name.trim() {
        s if s.eq_ignore_ascii_case("k13") || s.eq_ignore_ascii_case("k1,3") => "claw",
        s => s,
    };
    catalog()
        .into_iter()
        .find(|p| p.name.eq_ignore_ascii_case(wanted))
        .ok_or_else(|| Error::UnknownPattern(name.trim().to_string()))
}

/// Parses a comma-separated list such as `P6,banner`.
pub fn parse_pattern_list(list: &str) -> Result<Vec<Pattern>> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(pattern_by_name).collect()
}

/// The pair defining the class the reduction targets.
pub fn p6_banner() -> Vec<Pattern> {
    vec![Pattern::new("P6", Graph::path(6)), Pattern::new("banner", banner_graph())]
}

/// Injective map from pattern vertices to host vertices; `map[i]` is the image of pattern vertex `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and the induced condition (edges and non-edges) directly.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.n();
        if self.map.len() != k || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        let image: VertexSet = self.map.iter().copied().collect();
        if image.len() != k {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j]))
        })
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, h) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Pattern,
    images: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, used: VertexSet) -> bool {
        let depth = self.images.len();
        let Some(step) = self.pattern.plan.get(depth) else {
            return true;
        };
        let mut candidates = self.host.vertices().difference(used);
        for j in step.adjacent_before {
            candidates = candidates.intersection(self.host.neighbors(self.images[j]));
        }
        for j in step.nonadjacent_before {
            candidates = candidates.difference(self.host.neighbors(self.images[j]));
        }
        for h in candidates {
            if self.host.degree(h) < step.degree {
                continue;
            }
            self.images.push(h);
            if self.extend(used.with(h)) {
                return true;
            }
            self.images.pop();
        }
        false
    }

    fn into_embedding(self) -> Embedding {
        let mut map = vec![0; self.pattern.n()];
        for (pos, &pv) in self.pattern.order.iter().enumerate() {
            map[pv] = self.images[pos];
        }
        Embedding { map }
    }
}

/// Finds an induced copy of `pattern` in `g`.
///
/// Returns the least embedding with respect to the tuple
/// `(map[o0], map[o1], ..)` where `o` is [`Pattern::search_order`].
pub fn find_induced(g: &Graph, pattern: &Pattern) -> Option<Embedding> {
    if pattern.n() > g.n() {
        return None;
    }
    let mut matcher = Matcher { host: g, pattern, images: Vec::with_capacity(pattern.n()) };
    if matcher.extend(VertexSet::EMPTY) {
        Some(matcher.into_embedding())
    } else {
        None
    }
}

/// First pattern of `patterns` (in list order) that embeds, with its witness.
pub fn find_any_induced<'p>(g: &Graph, patterns: &'p [Pattern]) -> Option<(&'p Pattern, Embedding)> {
    patterns.iter().find_map(|p| find_induced(g, p).map(|e| (p, e)))
}

/// True iff no pattern of the family embeds as an induced subgraph.
pub fn is_f_free(g: &Graph, patterns: &[Pattern]) -> bool {
    find_any_induced(g, patterns).is_none()
}

/// Membership of one graph in every catalog class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub entries: Vec<(&'static str, bool)>,
    pub p6_banner_free: bool,
}

impl ClassReport {
    pub fn is_free(&self, name: &str) -> Option<bool> {
        self.entries.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)).map(|&(_, free)| free)
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, free) in &self.entries {
            writeln!(f, "{name}-free={free}")?;
        }
        write!(f, "P6-banner-free={}", self.p6_banner_free)
    }
}

pub fn class_report(g: &Graph) -> ClassReport {
    let entries: Vec<(&'static str, bool)> =
        catalog().iter().map(|p| (p.name, find_induced(g, p).is_none())).collect();
    let free = |name: &str| entries.iter().any(|&(n, f)| n == name && f);
    let p6_banner_free = free("P6") && free("banner");
    ClassReport { entries, p6_banner_free }
}
