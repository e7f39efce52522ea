//! Slow reference implementations that follow the definitions literally.
//!
//! Nothing here reuses the bitset component routines of [`Graph`] or the
//! subset filtering of [`crate::spectrum`]: graphs are converted to
//! adjacency lists and components are counted by explicit depth-first
//! search over boolean membership vectors.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectrum::CutSet;

/// Oracles enumerate every subset; keep them small.
pub const ORACLE_MAX_N: usize = 16;

struct Lists {
    adj: Vec<Vec<usize>>,
}

impl Lists {
    fn new(g: &Graph) -> Self {
        let mut adj = vec![Vec::new(); g.n()];
        for (u, v) in g.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        Lists { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Components of the subgraph induced on `{v : keep[v]}`.
    fn count_components(&self, keep: &[bool]) -> usize {
        let mut seen = vec![false; self.n()];
        let mut count = 0;
        for s in 0..self.n() {
            if !keep[s] || seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if keep[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }
}

fn members(bits: u64, n: usize) -> Vec<bool> {
    (0..n).map(|v| bits >> v & 1 == 1).collect()
}

fn check(n: usize) -> Result<()> {
    if n > ORACLE_MAX_N {
        return Err(Error::SizeBound { n, bound: ORACLE_MAX_N });
    }
    Ok(())
}

/// `C(G)` by the raw definition: every `i` in `T` must be a cut point of
/// `G[(V \ T) + i]`, i.e. deleting it from that graph strictly increases
/// the number of components.
pub fn bf_cut_sets(g: &Graph) -> Result<Vec<CutSet>> {
    check(g.n())?;
    let lists = Lists::new(g);
    let n = g.n();
    let mut out = Vec::new();
    for bits in 0..1u64 << n {
        let in_t = members(bits, n);
        let outside: Vec<bool> = in_t.iter().map(|&b| !b).collect();
        let base = lists.count_components(&outside);
        let ok = (0..n).filter(|&i| in_t[i]).all(|i| {
            let mut with_i = outside.clone();
            with_i[i] = true;
            let before = lists.count_components(&with_i);
            base > before
        });
        if ok {
            out.push(CutSet { set: VertexSet::from_bits(bits), components: base, has_cpp: true });
        }
    }
    out.sort_by(|a, b| a.set.canonical_cmp(&b.set));
    Ok(out)
}

/// `max { n - |T| + c(T) }` over all `2^n` subsets.
pub fn bf_dim(g: &Graph) -> Result<usize> {
    check(g.n())?;
    let lists = Lists::new(g);
    let n = g.n();
    let mut best = 0;
    for bits in 0..1u64 << n {
        let outside: Vec<bool> = members(bits, n).into_iter().map(|b| !b).collect();
        let size = bits.count_ones() as usize;
        best = best.max(n - size + lists.count_components(&outside));
    }
    Ok(best)
}

/// All minimal primes have equal height.
pub fn bf_unmixed(g: &Graph) -> Result<bool> {
    let n = g.n();
    let heights: Vec<usize> = bf_cut_sets(g)?.iter().map(|c| n + c.set.len() - c.components).collect();
    Ok(heights.windows(2).all(|w| w[0] == w[1]))
}

/// Inclusion-minimal vertex sets whose deletion disconnects a connected
/// graph.
pub fn bf_minimal_vertex_cuts(g: &Graph) -> Result<Vec<VertexSet>> {
    check(g.n())?;
    let lists = Lists::new(g);
    let n = g.n();
    if lists.count_components(&vec![true; n]) != 1 {
        return Err(Error::NotConnected);
    }
    let is_cut: Vec<bool> = (0..1u64 << n)
        .map(|bits| {
            let outside: Vec<bool> = members(bits, n).into_iter().map(|b| !b).collect();
            lists.count_components(&outside) > 1
        })
        .collect();
    let mut minimal = Vec::new();
    for s in (0..1u64 << n).filter(|&s| is_cut[s as usize]) {
        // walk every proper submask of s
        let mut sub = s.wrapping_sub(1) & s;
        let mut has_smaller = false;
        while sub != s {
            if is_cut[sub as usize] {
                has_smaller = true;
                break;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & s;
        }
        if !has_smaller {
            minimal.push(VertexSet::from_bits(s));
        }
    }
    minimal.sort_by(VertexSet::lex_cmp);
    Ok(minimal)
}
