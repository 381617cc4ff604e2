use std::collections::HashSet;

use crate::error::{ensure_capacity, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count accepted by the enumerators.
pub const ENUMERATION_LIMIT: usize = 8;

/// Upper-triangle pairs in graph6 order `(0,1), (0,2), (1,2), (0,3), ..`.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

/// Adjacency bitmask: bit `k` is set iff the `k`-th pair in graph6 order is an edge.
pub fn adjacency_mask(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "adjacency mask needs n(n-1)/2 <= 64");
    pairs(g.n()).enumerate().fold(0, |mask, (k, (i, j))| mask | (g.has_edge(i, j) as u64) << k)
}

/// Inverse of [`adjacency_mask`].
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    assert!(n <= 11);
    let mut adj = vec![VertexSet::EMPTY; n];
    for (k, (i, j)) in pairs(n).enumerate() {
        if mask >> k & 1 == 1 {
            adj[i].insert(j);
            adj[j].insert(i);
        }
    }
    Graph::from_rows_unchecked(adj)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices in ascending mask order.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph> + Clone> {
    ensure_capacity("graph enumeration", n, ENUMERATION_LIMIT)?;
    let count = 1u64 << (n * n.saturating_sub(1) / 2);
    Ok((0..count).map(move |mask| labeled_graph(n, mask)))
}

/// Labeled graphs, or one canonical representative per isomorphism class when
/// `dedup` is set (ascending canonical mask).
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if dedup {
        Ok(Box::new(enumerate_nonisomorphic(n)?.into_iter()))
    } else {
        Ok(Box::new(enumerate_labeled(n)?))
    }
}

/// Calls `f` on every permutation of `items`.
fn for_each_permutation(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

fn permuted_mask(g: &Graph, position: &[usize]) -> u64 {
    let mut mask = 0;
    for (u, v) in g.edges() {
        let (a, b) = (position[u].min(position[v]), position[u].max(position[v]));
        mask |= 1u64 << (b * (b - 1) / 2 + a);
    }
    mask
}

/// Minimum adjacency mask over all `n!` relabelings, `n <= 8`.
pub fn canonical_form_exhaustive(g: &Graph) -> Result<u64> {
    ensure_capacity("canonical form", g.n(), ENUMERATION_LIMIT)?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut best = u64::MAX;
    for_each_permutation(&mut order, 0, &mut |perm| best = best.min(permuted_mask(g, perm)));
    Ok(best)
}

/// Minimum adjacency mask over the relabelings that place vertices in blocks
/// of ascending invariant `(degree, sorted neighbor degrees)`.
///
/// The admissible relabelings of isomorphic graphs produce the same masks, so
/// this is a complete isomorphism invariant; it usually scans far fewer than
/// `n!` permutations.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    ensure_capacity("canonical form", g.n(), ENUMERATION_LIMIT)?;
    let n = g.n();
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut by_key: Vec<(usize, Vec<usize>, usize)> = (0..n).map(|v| { let (d, nd) = key(v); (d, nd, v) }).collect();
    by_key.sort();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (i, entry) in by_key.iter().enumerate() {
        if i > 0 && by_key[i - 1].0 == entry.0 && by_key[i - 1].1 == entry.1 {
            blocks.last_mut().expect("previous block").push(entry.2);
        } else {
            blocks.push(vec![entry.2]);
        }
    }

    let mut position = vec![0; n];
    let mut best = u64::MAX;
    fill_blocks(g, &mut blocks, 0, 0, &mut position, &mut best);
    Ok(best)
}

fn fill_blocks(g: &Graph, blocks: &mut [Vec<usize>], b: usize, offset: usize, position: &mut Vec<usize>, best: &mut u64) {
    if b == blocks.len() {
        *best = (*best).min(permuted_mask(g, position));
        return;
    }
    let mut block = std::mem::take(&mut blocks[b]);
    let len = block.len();
    for_each_permutation(&mut block, 0, &mut |perm| {
        for (i, &v) in perm.iter().enumerate() {
            position[v] = offset + i;
        }
        fill_blocks(g, blocks, b + 1, offset + len, position, best);
    });
    blocks[b] = block;
}

/// One canonical graph per isomorphism class on `n <= 8` vertices, sorted by
/// canonical mask. Built by extending each class on `n - 1` vertices with a new
/// vertex in every possible way and keeping one copy per canonical form.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    ensure_capacity("graph enumeration", n, ENUMERATION_LIMIT)?;
    let mut reps = vec![0u64];
    for k in 1..=n {
        let mut seen = HashSet::new();
        for &mask in &reps {
            let smaller = labeled_graph(k - 1, mask);
            for nbrs in 0..1u64 << (k - 1) {
                let mut edges: Vec<(usize, usize)> = smaller.edges().collect();
                edges.extend(VertexSet::from_bits(nbrs).iter().map(|u| (u, k - 1)));
                let g = Graph::from_edge_list(k, edges)?;
                seen.insert(canonical_form(&g)?);
            }
        }
        reps = seen.into_iter().collect();
        reps.sort_unstable();
    }
    Ok(reps.into_iter().map(|mask| labeled_graph(n, mask)).collect())
}
