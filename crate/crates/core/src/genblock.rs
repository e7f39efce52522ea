//! Generalized block graphs: chordal graphs in which any three maximal
//! cliques with a common vertex pairwise meet in the same set.
//!
//! In such a graph the minimal vertex cuts are exactly the nonempty sets
//! `A` that arise as the intersection of `t >= 2` facets of the clique
//! complex while every other facet misses `A` (a `t`-minimal cut set). The
//! depth of `S/J_G`, and the unmixed and Cohen-Macaulay properties, are
//! determined by these cut sets.

use serde::Serialize;

use crate::cliques::{maximal_cliques, CliqueComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectrum::Verdict;

pub const RULE_DEPTH: &str = "generalized block graph: depth = n + r - sum_{i>=2} (i-1) a_i";
pub(crate) const RULE_CM: &str =
    "generalized block graph: CM iff block graph with every vertex in at most two maximal cliques";
pub(crate) const RULE_UNMIXED_A: &str = "generalized block graph: every t-minimal cut set A needs |A| = t - 1";
pub(crate) const RULE_UNMIXED_B: &str =
    "generalized block graph: minimal cut sets covering a maximal clique must include a singleton";
pub(crate) const RULE_UNMIXED: &str = "generalized block graph: cut set sizes |A| = t - 1 and clique cover condition";

/// A minimal cut set `A`, the intersection of exactly `t` facets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MinimalCutSet {
    #[serde(rename = "A")]
    pub set: VertexSet,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    /// Clique number.
    pub omega: usize,
    pub cuts: Vec<MinimalCutSet>,
    /// `counts[i - 1]` is `a_i`, the number of minimal cut sets of size `i`,
    /// for `1 <= i <= omega - 1`.
    pub counts: Vec<usize>,
    /// Number of connected components.
    pub components: usize,
}

impl BlockProfile {
    /// `a_i`; zero outside `1..omega`.
    pub fn a(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.counts.get(i - 1).copied().unwrap_or(0)
    }

    /// True when every minimal cut set is a single vertex, i.e. every
    /// component is a block graph.
    pub fn all_cuts_singletons(&self) -> bool {
        self.cuts.iter().all(|c| c.set.len() == 1)
    }
}

fn facet_triples_agree(facets: &[VertexSet]) -> bool {
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let ij = facets[i].intersection(facets[j]);
            if ij.is_empty() {
                continue;
            }
            for k in j + 1..facets.len() {
                let ik = facets[i].intersection(facets[k]);
                if !ij.intersection(facets[k]).is_empty()
                    && (ij != ik || ij != facets[j].intersection(facets[k]))
                {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_generalized_block(g: &Graph) -> bool {
    g.is_chordal() && facet_triples_agree(&maximal_cliques(g).facets)
}

fn require_genblock(g: &Graph) -> Result<CliqueComplex> {
    if !g.is_chordal() {
        return Err(Error::NotGeneralizedBlock);
    }
    let complex = maximal_cliques(g);
    if !facet_triples_agree(&complex.facets) {
        return Err(Error::NotGeneralizedBlock);
    }
    Ok(complex)
}

fn cuts_from_facets(facets: &[VertexSet]) -> Vec<MinimalCutSet> {
    let mut found: Vec<VertexSet> = Vec::new();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            let a = facets[i].intersection(facets[j]);
            if !a.is_empty() && !found.contains(&a) {
                found.push(a);
            }
        }
    }
    let mut cuts: Vec<MinimalCutSet> = found
        .into_iter()
        .filter(|&a| facets.iter().all(|&f| a.is_subset(f) || a.is_disjoint(f)))
        .map(|a| MinimalCutSet { set: a, t: facets.iter().filter(|&&f| a.is_subset(f)).count() })
        .collect();
    cuts.sort_by(|x, y| x.set.lex_cmp(&y.set));
    cuts
}

pub fn minimal_cut_sets(g: &Graph) -> Result<Vec<MinimalCutSet>> {
    let complex = require_genblock(g)?;
    Ok(cuts_from_facets(&complex.facets))
}

pub fn block_profile(g: &Graph) -> Result<BlockProfile> {
    let complex = require_genblock(g)?;
    Ok(profile_of(g, &complex))
}

fn profile_of(g: &Graph, complex: &CliqueComplex) -> BlockProfile {
    let omega = complex.omega();
    let cuts = cuts_from_facets(&complex.facets);
    let mut counts = vec![0; omega.saturating_sub(1)];
    for c in &cuts {
        counts[c.set.len() - 1] += 1;
    }
    BlockProfile { omega, cuts, counts, components: g.connected_components().len() }
}

/// `n + r - sum_{i=2}^{omega-1} (i - 1) a_i` where `r` is the number of
/// components.
pub fn depth_formula(g: &Graph) -> Result<usize> {
    let profile = block_profile(g)?;
    let penalty: usize = (2..profile.omega).map(|i| (i - 1) * profile.a(i)).sum();
    Ok(g.n() + profile.components - penalty)
}

pub fn cm_status(g: &Graph) -> Result<Verdict> {
    let complex = require_genblock(g)?;
    let profile = profile_of(g, &complex);
    if let Some(big) = profile.cuts.iter().find(|c| c.set.len() > 1) {
        return Ok(Verdict::no(RULE_CM).with_witness(big.set));
    }
    if let Some(v) = (0..g.n()).find(|&v| complex.facets_containing(v) > 2) {
        return Ok(Verdict::no(RULE_CM).with_witness(VertexSet::singleton(v)));
    }
    Ok(Verdict::yes(RULE_CM))
}

/// Unmixedness of a connected generalized block graph from its cut sets:
/// (a) each `t`-minimal cut set has exactly `t - 1` vertices, and (b) no
/// maximal clique is a union of non-singleton minimal cut sets.
pub fn unmixed_genblock(g: &Graph) -> Result<Verdict> {
    let complex = require_genblock(g)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let cuts = cuts_from_facets(&complex.facets);
    if let Some(bad) = cuts.iter().find(|c| c.set.len() + 1 != c.t) {
        return Ok(Verdict::no(RULE_UNMIXED_A).with_witness(bad.set));
    }
    // A facet is covered by some family of non-singleton cut sets iff the
    // union of all non-singleton cut sets inside it is the whole facet.
    for &facet in &complex.facets {
        let covered = cuts
            .iter()
            .filter(|c| c.set.len() > 1 && c.set.is_subset(facet))
            .fold(VertexSet::EMPTY, |acc, c| acc.union(c.set));
        if covered == facet {
            return Ok(Verdict::no(RULE_UNMIXED_B).with_witness(facet));
        }
    }
    Ok(Verdict::yes(RULE_UNMIXED))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &[usize]) -> VertexSet {
        VertexSet::one_based(labels)
    }

    fn from_facets(n: usize, facets: &[&[usize]]) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for f in facets {
            for (i, &u) in f.iter().enumerate() {
                for &v in &f[i + 1..] {
                    g.add_edge(u - 1, v - 1);
                }
            }
        }
        g
    }

    fn two_hubs() -> Graph {
        from_facets(8, &[&[1, 2, 3, 4], &[1, 2, 5], &[1, 2, 6], &[3, 4, 7], &[3, 4, 8]])
    }

    fn hub_and_pendant() -> Graph {
        from_facets(6, &[&[1, 2], &[2, 3, 4], &[3, 4, 5], &[3, 4, 6]])
    }

    #[test]
    fn recognition() {
        assert!(is_generalized_block(&Graph::path(7).unwrap()));
        let star = Graph::complete_multipartite(&[1, 5]).unwrap();
        assert!(is_generalized_block(&star));
        assert!(is_generalized_block(&two_hubs()));
        assert!(is_generalized_block(&hub_and_pendant()));
        let unequal = from_facets(5, &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5]]);
        assert!(unequal.is_chordal());
        assert!(!is_generalized_block(&unequal));
        assert!(!is_generalized_block(&Graph::cycle(5).unwrap()));
        assert_eq!(depth_formula(&Graph::cycle(4).unwrap()), Err(Error::NotGeneralizedBlock));
    }

    #[test]
    fn cut_set_examples() {
        assert_eq!(
            minimal_cut_sets(&two_hubs()).unwrap(),
            vec![MinimalCutSet { set: vs(&[1, 2]), t: 3 }, MinimalCutSet { set: vs(&[3, 4]), t: 3 }]
        );
        let profile = block_profile(&two_hubs()).unwrap();
        assert_eq!((profile.omega, profile.a(1), profile.a(2), profile.a(3)), (4, 0, 2, 0));

        assert_eq!(
            minimal_cut_sets(&hub_and_pendant()).unwrap(),
            vec![MinimalCutSet { set: vs(&[2]), t: 2 }, MinimalCutSet { set: vs(&[3, 4]), t: 3 }]
        );
        let profile = block_profile(&hub_and_pendant()).unwrap();
        assert_eq!((profile.a(1), profile.a(2)), (1, 1));

        assert_eq!(
            minimal_cut_sets(&Graph::path(4).unwrap()).unwrap(),
            vec![MinimalCutSet { set: vs(&[2]), t: 2 }, MinimalCutSet { set: vs(&[3]), t: 2 }]
        );
    }

    #[test]
    fn depth_examples() {
        for n in 1..9 {
            assert_eq!(depth_formula(&Graph::complete(n).unwrap()).unwrap(), n + 1);
        }
        assert_eq!(depth_formula(&hub_and_pendant()).unwrap(), 6);
        assert_eq!(depth_formula(&two_hubs()).unwrap(), 7);
        assert_eq!(depth_formula(&Graph::edgeless(3).unwrap()).unwrap(), 6);
        let two_paths = Graph::disjoint_union(&[Graph::path(3).unwrap(), Graph::path(2).unwrap()]).unwrap();
        assert_eq!(depth_formula(&two_paths).unwrap(), 7);
    }

    #[test]
    fn cm_examples() {
        for n in 1..8 {
            assert!(cm_status(&Graph::path(n).unwrap()).unwrap().is_yes());
        }
        let v = cm_status(&hub_and_pendant()).unwrap();
        assert!(v.is_no());
        assert_eq!(v.witness, Some(vs(&[3, 4])));
        let v = cm_status(&Graph::complete_multipartite(&[1, 3]).unwrap()).unwrap();
        assert!(v.is_no());
        assert_eq!(v.witness, Some(vs(&[1])));
    }

    #[test]
    fn unmixed_examples() {
        let v = unmixed_genblock(&two_hubs()).unwrap();
        assert!(v.is_no());
        assert_eq!(v.rule, RULE_UNMIXED_B);
        assert_eq!(v.witness, Some(vs(&[1, 2, 3, 4])));
        assert!(unmixed_genblock(&hub_and_pendant()).unwrap().is_yes());
        for n in 1..9 {
            assert!(unmixed_genblock(&Graph::path(n).unwrap()).unwrap().is_yes());
        }
        let claw = unmixed_genblock(&Graph::complete_multipartite(&[1, 3]).unwrap()).unwrap();
        assert_eq!(claw.rule, RULE_UNMIXED_A);
        assert_eq!(unmixed_genblock(&Graph::edgeless(2).unwrap()), Err(Error::NotConnected));
    }
}
