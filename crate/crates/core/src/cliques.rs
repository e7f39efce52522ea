//! Clique complexes: maximal clique enumeration and leaf orders.

use crate::graph::{Graph, VertexSet};

/// The facets (maximal cliques) of a graph's clique complex, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueComplex {
    pub facets: Vec<VertexSet>,
}

impl CliqueComplex {
    /// Clique number: the size of the largest facet.
    pub fn omega(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn facets_containing(&self, v: usize) -> usize {
        self.facets.iter().filter(|f| f.contains(v)).count()
    }
}

/// Bron–Kerbosch with Tomita pivoting over bitset adjacency.
pub fn maximal_cliques(g: &Graph) -> CliqueComplex {
    let mut facets = Vec::new();
    expand(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut facets);
    facets.sort_by(VertexSet::lex_cmp);
    CliqueComplex { facets }
}

fn expand(g: &Graph, clique: VertexSet, candidates: VertexSet, excluded: VertexSet, out: &mut Vec<VertexSet>) {
    if candidates.is_empty() {
        if excluded.is_empty() && !clique.is_empty() {
            out.push(clique);
        }
        return;
    }
    let pivot = candidates
        .union(excluded)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(candidates).len())
        .expect("nonempty");
    let mut candidates = candidates;
    let mut excluded = excluded;
    for v in candidates.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        let mut grown = clique;
        grown.insert(v);
        expand(g, grown, candidates.intersection(nv), excluded.intersection(nv), out);
        candidates.remove(v);
        excluded.insert(v);
    }
}

/// A facet is a leaf of `facets` if it is the only one, or some other facet
/// (a branch) contains every intersection it has with the rest.
fn is_leaf(facet: VertexSet, facets: &[VertexSet]) -> bool {
    let others: Vec<VertexSet> = facets.iter().copied().filter(|&h| h != facet).collect();
    if others.is_empty() {
        return true;
    }
    let touched = others.iter().fold(VertexSet::EMPTY, |acc, &h| acc.union(h.intersection(facet)));
    others.iter().any(|&branch| touched.is_subset(branch.intersection(facet)))
}

/// Orders the facets as `F_1, .., F_r` so that each `F_i` (`i > 1`) is a
/// leaf of the complex generated by `F_1, .., F_i`. Returns `None` when the
/// complex is not a quasi-forest.
///
/// Leaves are peeled greedily from the end; removing a leaf from a
/// quasi-forest leaves a quasi-forest.
pub fn leaf_order(complex: &CliqueComplex) -> Option<Vec<VertexSet>> {
    let mut remaining = complex.facets.clone();
    let mut peeled = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let idx = (0..remaining.len()).rev().find(|&i| is_leaf(remaining[i], &remaining))?;
        peeled.push(remaining.remove(idx));
    }
    peeled.reverse();
    Some(peeled)
}

/// Checks that `order` is a leaf order of its own facets.
pub fn is_leaf_order(order: &[VertexSet]) -> bool {
    (1..order.len()).all(|i| is_leaf(order[i], &order[..=i]))
}
