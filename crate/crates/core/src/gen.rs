//! Deterministic graph generators for tests and the verification suite.
//!
//! Random generators take a caller-owned [`ChaCha8Rng`], so a seed fixes
//! every instance on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cliques::maximal_cliques;
use crate::genblock::{is_generalized_block, minimal_cut_sets};
use crate::graph::{Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("n within bounds");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A random spanning tree (each vertex attaches to an earlier one, then
/// labels are shuffled) plus every other edge with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = random_graph(rng, n, p);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(perm[i], perm[j]);
    }
    g
}

fn glue_clique(g: &Graph, attach: VertexSet, new_vertices: usize) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n + new_vertices).expect("n within bounds");
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let clique: Vec<usize> = attach.iter().chain(n..n + new_vertices).collect();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            h.add_edge(u, v);
        }
    }
    h
}

/// A random connected generalized block graph on exactly `n` vertices.
///
/// Grows from a clique by repeatedly gluing a new clique onto a nonempty
/// part `A` of an existing facet `F`, where `A` is an existing
/// minimal cut set inside `F` or a set of vertices lying in `F` only.
/// Every step is checked with [`is_generalized_block`].
pub fn random_generalized_block(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 1);
    let first = rng.gen_range(1..=n.min(4));
    let mut g = Graph::complete(first).expect("n within bounds");
    while g.n() < n {
        let facets = maximal_cliques(&g).facets;
        let facet = *facets.choose(rng).expect("nonempty");
        let cuts: Vec<VertexSet> = minimal_cut_sets(&g)
            .expect("generalized block")
            .into_iter()
            .map(|c| c.set)
            .filter(|a| a.is_subset(facet))
            .collect();
        let private: Vec<usize> = facet
            .iter()
            .filter(|&v| facets.iter().filter(|f| f.contains(v)).count() == 1)
            .collect();
        let attach = if !cuts.is_empty() && (private.is_empty() || rng.gen_bool(0.5)) {
            *cuts.choose(rng).expect("nonempty")
        } else if !private.is_empty() {
            let k = rng.gen_range(1..=private.len());
            private.choose_multiple(rng, k).copied().collect()
        } else {
            continue;
        };
        let grow = rng.gen_range(1..=(n - g.n()).min(3));
        let candidate = glue_clique(&g, attach, grow);
        if is_generalized_block(&candidate) {
            g = candidate;
        }
    }
    g
}

/// A random block graph on exactly `n` vertices: cliques glued at single
/// vertices.
pub fn random_block_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 1);
    let first = rng.gen_range(1..=n.min(4));
    let mut g = Graph::complete(first).expect("n within bounds");
    while g.n() < n {
        let v = rng.gen_range(0..g.n());
        let grow = rng.gen_range(1..=(n - g.n()).min(3));
        g = glue_clique(&g, VertexSet::singleton(v), grow);
    }
    g
}

/// Every block graph with at most `n_max` vertices, possibly with
/// isomorphic repeats.
///
/// Graphs are built by gluing cliques onto vertices in non-decreasing
/// vertex order, largest clique first at a given vertex. Labeling the
/// vertices of any block graph in breadth-first order over its block tree
/// produces such a sequence, so nothing is missed.
pub fn block_graphs_exhaustive(n_max: usize) -> Vec<Graph> {
    fn grow(g: &Graph, last: (usize, usize), n_max: usize, out: &mut Vec<Graph>) {
        out.push(g.clone());
        for v in last.0..g.n() {
            let cap = if v == last.0 { last.1 } else { usize::MAX };
            for add in 1..=(n_max - g.n()).min(cap) {
                grow(&glue_clique(g, VertexSet::singleton(v), add), (v, add), n_max, out);
            }
        }
    }
    let mut out = Vec::new();
    for s in 1..=n_max {
        grow(&Graph::complete(s).expect("n within bounds"), (0, usize::MAX), n_max, &mut out);
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn edge_code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        code |= 1 << (a * n + b);
    }
    code
}

/// Largest edge code over all relabelings; equal codes mean isomorphic.
fn canonical_code(g: &Graph) -> u64 {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    let mut best = edge_code(g, &perm);
    while next_permutation(&mut perm) {
        best = best.max(edge_code(g, &perm));
    }
    best
}

/// One representative of each isomorphism class of connected graphs on
/// `1..=n_max` vertices (`n_max <= 7`).
pub fn connected_graphs_up_to_iso(n_max: usize) -> Vec<Graph> {
    assert!(n_max <= 7, "brute-force canonical forms");
    let mut out = Vec::new();
    let mut level = vec![Graph::complete(1).expect("n within bounds")];
    for n in 2..=n_max + 1 {
        out.extend(level.iter().cloned());
        if n > n_max {
            break;
        }
        // every connected graph has a vertex whose removal keeps it connected
        let mut seen = std::collections::BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for bits in 1..1u64 << (n - 1) {
                let mut h = Graph::empty(n).expect("n within bounds");
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in VertexSet::from_bits(bits) {
                    h.add_edge(u, n - 1);
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // known counts of connected graphs on 1..=6 vertices
        let graphs = connected_graphs_up_to_iso(6);
        let mut counts = [0usize; 7];
        for g in &graphs {
            assert!(g.is_connected());
            counts[g.n()] += 1;
        }
        assert_eq!(&counts[1..], &[1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn block_graph_enumeration_covers_small_cases() {
        let graphs = block_graphs_exhaustive(5);
        let mut classes = std::collections::BTreeSet::new();
        for g in &graphs {
            assert!(g.is_connected() && is_generalized_block(g));
            classes.insert((g.n(), canonical_code(g)));
        }
        // block graphs up to isomorphism on 1..=5 vertices
        let mut counts = [0usize; 6];
        for (n, _) in classes {
            counts[n] += 1;
        }
        assert_eq!(&counts[1..], &[1, 1, 2, 4, 9]);
    }

    #[test]
    fn random_generators_are_deterministic_and_valid() {
        let mut a = rng(7);
        let mut b = rng(7);
        for n in 1..=12 {
            let g = random_generalized_block(&mut a, n);
            assert_eq!(g, random_generalized_block(&mut b, n));
            assert_eq!(g.n(), n);
            assert!(g.is_connected() && is_generalized_block(&g));
            let h = random_block_graph(&mut a, n);
            assert_eq!(h, random_block_graph(&mut b, n));
            assert!(h.is_connected() && crate::genblock::block_profile(&h).unwrap().all_cuts_singletons());
            let c = random_connected_graph(&mut a, n, 0.3);
            assert_eq!(c, random_connected_graph(&mut b, n, 0.3));
            assert!(c.is_connected());
        }
    }
}
