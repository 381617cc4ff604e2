use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eds::eds_via_square;
use crate::error::{ensure_capacity, Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6::SHORT_FORM_LIMIT;
use crate::patterns::{find_any_induced, parse_pattern_list, Pattern};

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Probability(p));
    }
    Ok(())
}

/// G(n, p): each pair `(u, v)`, `u < v`, visited in ascending `u` then `v`,
/// becomes an edge when a ChaCha8 stream seeded with `seed` draws `true` with
/// probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    ensure_capacity("random_graph", n, MAX_VERTICES)?;
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(gnp(n, p, &mut rng))
}

fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).expect("pairs are in range")
}

/// A graph with a planted efficient dominating set: a random number of centers,
/// every other vertex attached to exactly one random center, and G(n, p) edges
/// among the non-centers. Labels are shuffled.
fn planted(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    if n == 0 {
        return Graph::empty(0);
    }
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let centers = rng.random_range(1..=n);
    let mut edges = Vec::new();
    for &v in &labels[centers..] {
        edges.push((labels[rng.random_range(0..centers)], v));
    }
    let rest = &labels[centers..];
    for (i, &u) in rest.iter().enumerate() {
        for &v in &rest[i + 1..] {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).expect("labels are in range")
}

/// Deletes vertices until no pattern of `patterns` embeds. Each round takes
/// the first witness found and removes one of its vertices chosen by a ChaCha8
/// stream seeded with `seed`.
pub fn make_f_free(g: &Graph, patterns: &[Pattern], seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = g.clone();
    while let Some((_, witness)) = find_any_induced(&g, patterns) {
        let v = witness.map[rng.random_range(0..witness.map.len())];
        g = g.delete_vertex(v);
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GraphModel {
    /// Plain G(n, p).
    #[default]
    Gnp,
    /// G(n, p) among non-centers on top of a planted perfect code.
    PlantedEds,
}

impl fmt::Display for GraphModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphModel::Gnp => "gnp",
            GraphModel::PlantedEds => "planted",
        })
    }
}

impl FromStr for GraphModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gnp" => Ok(GraphModel::Gnp),
            "planted" => Ok(GraphModel::PlantedEds),
            other => Err(Error::SampleSpec(format!("unknown model `{other}`"))),
        }
    }
}

/// Recipe for a deterministic stream of sampled graphs.
///
/// Sample `i` draws from ChaCha8 seeded with `seed` on stream `i`: a vertex
/// count uniform in `n_min..=n_max`, a base graph from `model`, then repair
/// against `forbid`. With `require_eds`, draws repeat (up to
/// [`SampleSpec::ATTEMPTS`] times) until the repaired graph has an efficient
/// dominating set.
///
/// Text form: `n=8..40;p=0.3;seed=7;forbid=P6,banner;require_eds=true;model=planted`.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub p: f64,
    pub seed: u64,
    pub forbid: Vec<Pattern>,
    pub require_eds: bool,
    pub model: GraphModel,
}

impl SampleSpec {
    pub const ATTEMPTS: usize = 32;

    pub fn new(n_min: usize, n_max: usize, p: f64, seed: u64) -> Result<Self> {
        let spec = SampleSpec {
            n_min,
            n_max,
            p,
            seed,
            forbid: Vec::new(),
            require_eds: false,
            model: GraphModel::Gnp,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn forbidding(mut self, patterns: Vec<Pattern>) -> Self {
        self.forbid = patterns;
        self
    }

    pub fn requiring_eds(mut self, require: bool) -> Self {
        self.require_eds = require;
        self
    }

    pub fn with_model(mut self, model: GraphModel) -> Self {
        self.model = model;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_probability(self.p)?;
        if self.n_min > self.n_max {
            return Err(Error::SampleSpec(format!("empty vertex range {}..{}", self.n_min, self.n_max)));
        }
        ensure_capacity("sampling (graph6 witnesses)", self.n_max, SHORT_FORM_LIMIT)
    }
}

impl fmt::Display for SampleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forbid: Vec<&str> = self.forbid.iter().map(Pattern::name).collect();
        write!(
            f,
            "n={}..{};p={};seed={};forbid={};require_eds={};model={}",
            self.n_min,
            self.n_max,
            self.p,
            self.seed,
            forbid.join(","),
            self.require_eds,
            self.model
        )
    }
}

fn parse_field<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::SampleSpec(format!("bad value `{value}` for `{key}`")))
}

impl FromStr for SampleSpec {
    type Err = Error;

    /// Keys may come in any order, separated by `;` or newlines. `n` is
    /// required; `p` defaults to 0.5 and `seed` to 0.
    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut spec = SampleSpec::new(0, 0, 0.5, 0)?;
        for item in s.split([';', '\n']).map(str::trim).filter(|i| !i.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::SampleSpec(format!("expected key=value, got `{item}`")))?;
            let key = key.trim();
            match key {
                "n" => {
                    n = Some(match value.split_once("..") {
                        Some((lo, hi)) => (parse_field(key, lo)?, parse_field(key, hi.trim_start_matches('='))?),
                        None => {
                            let v = parse_field(key, value)?;
                            (v, v)
                        }
                    })
                }
                "p" => spec.p = parse_field(key, value)?,
                "seed" => spec.seed = parse_field(key, value)?,
                "forbid" => spec.forbid = parse_pattern_list(value)?,
                "require_eds" | "require-eds" => spec.require_eds = parse_field(key, value)?,
                "model" => spec.model = value.trim().parse()?,
                other => return Err(Error::SampleSpec(format!("unknown key `{other}`"))),
            }
        }
        let (n_min, n_max) = n.ok_or_else(|| Error::SampleSpec("missing `n`".into()))?;
        spec.n_min = n_min;
        spec.n_max = n_max;
        spec.validate()?;
        Ok(spec)
    }
}

/// Sample number `index` of the stream; `None` when `require_eds` rejected every attempt.
pub fn sample_graph(spec: &SampleSpec, index: u64) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(index);
    for _ in 0..SampleSpec::ATTEMPTS {
        let n = rng.random_range(spec.n_min..=spec.n_max);
        let base = match spec.model {
            GraphModel::Gnp => gnp(n, spec.p, &mut rng),
            GraphModel::PlantedEds => planted(n, spec.p, &mut rng),
        };
        let g = make_f_free(&base, &spec.forbid, rng.random());
        if !spec.require_eds || eds_via_square(&g).outcome.exists() {
            return Some(g);
        }
    }
    None
}

/// The first `count` accepted samples, scanning at most `count * ATTEMPTS` indices.
pub fn sample_graphs(spec: &SampleSpec, count: usize) -> Vec<Graph> {
    let limit = (count as u64).saturating_mul(SampleSpec::ATTEMPTS as u64);
    (0..limit).filter_map(|i| sample_graph(spec, i)).take(count).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eds::verify_eds;
    use crate::patterns::{is_f_free, p6_banner, pattern_by_name};

    #[test]
    fn random_graph_examples() {
        assert_eq!(random_graph(5, 0.0, 9).unwrap(), Graph::empty(5));
        assert_eq!(random_graph(5, 1.0, 9).unwrap(), Graph::complete(5));
        assert_eq!(random_graph(8, 0.5, 42).unwrap(), random_graph(8, 0.5, 42).unwrap());
        assert_ne!(random_graph(20, 0.5, 1).unwrap(), random_graph(20, 0.5, 2).unwrap());
        assert_eq!(random_graph(3, 1.5, 0), Err(Error::Probability(1.5)));
        assert!(random_graph(3, f64::NAN, 0).is_err());
        assert!(random_graph(65, 0.5, 0).unwrap_err().is_capacity());
    }

    #[test]
    fn repair_examples() {
        let family = p6_banner();
        let c6 = Graph::cycle(6);
        assert_eq!(make_f_free(&c6, &family, 3), c6);

        let banner = vec![pattern_by_name("banner").unwrap()];
        for seed in 0..10 {
            let g = make_f_free(banner[0].graph(), &banner, seed);
            assert_eq!(g.n(), 4);
            assert!(is_f_free(&g, &banner));
        }

        let p6 = vec![pattern_by_name("P6").unwrap()];
        for seed in 0..10 {
            let g = make_f_free(&Graph::path(7), &p6, seed);
            assert!(g.n() <= 6);
            assert!(crate::patterns::find_induced(&g, &p6[0]).is_none());
        }
    }

    #[test]
    fn repair_always_lands_in_class() {
        let family = p6_banner();
        for seed in 0..100 {
            let g = random_graph(16, (seed % 9) as f64 / 8.0, seed).unwrap();
            assert!(is_f_free(&make_f_free(&g, &family, seed), &family));
        }
    }

    #[test]
    fn planted_model_has_eds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n = rng.random_range(0..30);
            let g = planted(n, 0.4, &mut rng);
            assert_eq!(g.n(), n);
            assert!(eds_via_square(&g).outcome.witness().is_some_and(|d| verify_eds(&g, d)));
        }
    }

    #[test]
    fn spec_text_round_trip() {
        let spec: SampleSpec = "n=8..40; p=0.25; seed=7; forbid=P6,banner; require_eds=true; model=planted"
            .parse()
            .unwrap();
        assert_eq!((spec.n_min, spec.n_max, spec.seed), (8, 40, 7));
        assert_eq!(spec.forbid.len(), 2);
        assert!(spec.require_eds);
        assert_eq!(spec.model, GraphModel::PlantedEds);
        assert_eq!(spec.to_string().parse::<SampleSpec>().unwrap(), spec);

        let fixed: SampleSpec = "n=10".parse().unwrap();
        assert_eq!((fixed.n_min, fixed.n_max, fixed.p), (10, 10, 0.5));

        assert!("p=0.5".parse::<SampleSpec>().is_err());
        assert!("n=5;p=2".parse::<SampleSpec>().is_err());
        assert!("n=9..3".parse::<SampleSpec>().is_err());
        assert!("n=70".parse::<SampleSpec>().unwrap_err().is_capacity());
        assert!("n=5;colour=red".parse::<SampleSpec>().is_err());
        assert!("n=5;forbid=xnet".parse::<SampleSpec>().is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = SampleSpec::new(8, 20, 0.3, 99).unwrap().forbidding(p6_banner()).requiring_eds(true);
        let a = sample_graphs(&spec, 20);
        let b = sample_graphs(&spec, 20);
        assert_eq!(a.len(), 20);
        assert_eq!(a, b);
        for g in &a {
            assert!(is_f_free(g, &spec.forbid));
            assert!(eds_via_square(g).outcome.exists());
        }
        // individual samples do not depend on which other indices were drawn
        assert_eq!(sample_graph(&spec, 5), sample_graph(&spec, 5));
    }
}
