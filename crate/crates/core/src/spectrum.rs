//! Minimal-prime combinatorics of the binomial edge ideal `J_G`.
//!
//! Every subset `T` of the vertices determines a prime `P_T(G)` of height
//! `n + |T| - c(T)`, where `c(T)` counts the components of `G - T`. The
//! minimal primes are exactly the `P_T` with `T` in `C(G)`: the empty set
//! together with every `T` whose members are all cut points of
//! `G[(V \ T) + i]`. Height, dimension and unmixedness of `J_G` are read off
//! that family.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default limit on `n` for the `2^n` subset enumeration.
pub const DEFAULT_MAX_N: usize = 22;

/// Absolute ceiling for an overridden enumeration bound.
pub const HARD_MAX_N: usize = 32;

/// A vertex subset together with its component count and cut point
/// property status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CutSet {
    #[serde(rename = "T")]
    pub set: VertexSet,
    /// Components of `G - T`.
    #[serde(rename = "c")]
    pub components: usize,
    #[serde(skip)]
    pub has_cpp: bool,
}

impl CutSet {
    /// Height of `P_T(G)` in a graph on `n` vertices.
    pub fn height(&self, n: usize) -> usize {
        n + self.set.len() - self.components
    }
}

/// Descriptor of the prime `P_T(G)`: the deleted set, the vertex sets of the
/// components of `G - T` (each completed to a clique in the prime), and its
/// height.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeDescriptor {
    #[serde(rename = "T")]
    pub set: VertexSet,
    pub components: Vec<VertexSet>,
    pub height: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
        })
    }
}

/// A three-valued decision with the criterion that produced it and, where
/// the criterion yields one, a vertex set witnessing the answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub rule: String,
    pub witness: Option<VertexSet>,
}

impl Verdict {
    pub fn yes(rule: impl Into<String>) -> Self {
        Verdict { status: Status::Yes, rule: rule.into(), witness: None }
    }

    pub fn no(rule: impl Into<String>) -> Self {
        Verdict { status: Status::No, rule: rule.into(), witness: None }
    }

    pub fn unknown(rule: impl Into<String>) -> Self {
        Verdict { status: Status::Unknown, rule: rule.into(), witness: None }
    }

    pub fn from_bool(value: bool, rule: impl Into<String>) -> Self {
        if value {
            Verdict::yes(rule)
        } else {
            Verdict::no(rule)
        }
    }

    pub fn with_witness(mut self, witness: VertexSet) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.status == Status::Yes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::No
    }

    pub fn is_unknown(&self) -> bool {
        self.status == Status::Unknown
    }

    /// `Some(true/false)` for decided verdicts.
    pub fn decided(&self) -> Option<bool> {
        match self.status {
            Status::Yes => Some(true),
            Status::No => Some(false),
            Status::Unknown => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.status, self.rule)?;
        if let Some(w) = self.witness {
            write!(f, " witness {w}")?;
        }
        Ok(())
    }
}

pub(crate) const RULE_CONNECTED_UNMIXED: &str = "connected graph: unmixed iff c(T) = |T| + 1 for all T in C(G)";
pub(crate) const RULE_COMPONENTS_UNMIXED: &str = "unmixed iff every connected component is unmixed";
pub(crate) const RULE_PAIR_UNMIXED: &str = "J(K_m, G) unmixed iff (c(T) - 1)(m - 1) = |T| for all T in C(G)";

/// Fast cut point property test on `rest = V \ t`: a deleted vertex is a cut
/// point of `G[rest + i]` iff it has neighbours in at least two components
/// of `G[rest]`. Returns the component count when the property holds.
fn cpp_components(g: &Graph, t: VertexSet) -> Option<usize> {
    let rest = g.vertices().difference(t);
    if t.is_empty() {
        return Some(g.count_components_within(rest));
    }
    if t.iter().any(|i| g.neighbors(i).intersection(rest).len() < 2) {
        return None;
    }
    let comps = g.components_within(rest);
    let all_cut = t.iter().all(|i| {
        let nbrs = g.neighbors(i);
        comps.iter().filter(|c| !c.is_disjoint(nbrs)).take(2).count() == 2
    });
    all_cut.then_some(comps.len())
}

pub fn has_cut_point_property(g: &Graph, t: VertexSet) -> bool {
    cpp_components(g, t).is_some()
}

/// Describes an arbitrary subset `t`, whether or not it lies in `C(G)`.
pub fn cut_set(g: &Graph, t: VertexSet) -> CutSet {
    let components = g.count_components_within(g.vertices().difference(t));
    CutSet { set: t, components, has_cpp: has_cut_point_property(g, t) }
}

fn check_bound(n: usize, max_n: usize) -> Result<()> {
    if n > max_n.min(HARD_MAX_N) {
        return Err(Error::SizeBound { n, bound: max_n.min(HARD_MAX_N) });
    }
    Ok(())
}

/// `C(G)` under the default bound, sorted by size then lexicographically.
pub fn cut_sets(g: &Graph) -> Result<Vec<CutSet>> {
    cut_sets_bounded(g, DEFAULT_MAX_N)
}

pub fn cut_sets_bounded(g: &Graph, max_n: usize) -> Result<Vec<CutSet>> {
    check_bound(g.n(), max_n)?;
    let total = 1usize << g.n();
    let mut out: Vec<CutSet> = (0..total)
        .into_par_iter()
        .with_min_len(1 << 10)
        .filter_map(|bits| {
            let set = VertexSet::from_bits(bits as u64);
            cpp_components(g, set).map(|components| CutSet { set, components, has_cpp: true })
        })
        .collect();
    out.sort_by(|a, b| a.set.canonical_cmp(&b.set));
    Ok(out)
}

pub fn prime_of(g: &Graph, t: VertexSet) -> PrimeDescriptor {
    let components = g.components_within(g.vertices().difference(t));
    let height = g.n() + t.len() - components.len();
    PrimeDescriptor { set: t, components, height }
}

pub fn height_j(g: &Graph) -> Result<usize> {
    Ok(Spectrum::new(g, DEFAULT_MAX_N)?.height())
}

pub fn dim_s_mod_j(g: &Graph) -> Result<usize> {
    Ok(Spectrum::new(g, DEFAULT_MAX_N)?.dim())
}

pub fn is_unmixed(g: &Graph) -> Result<Verdict> {
    Spectrum::new(g, DEFAULT_MAX_N)?.unmixed()
}

/// Unmixedness of `J(K_m, G)` for connected `G`; `m = 2` recovers `J_G`.
pub fn is_pair_unmixed(m: usize, g: &Graph) -> Result<Verdict> {
    Spectrum::new(g, DEFAULT_MAX_N)?.pair_unmixed(m)
}

/// `C(G)` of one graph, computed once and queried many times.
#[derive(Clone, Debug)]
pub struct Spectrum {
    graph: Graph,
    max_n: usize,
    cuts: Vec<CutSet>,
}

impl Spectrum {
    pub fn new(g: &Graph, max_n: usize) -> Result<Self> {
        let cuts = cut_sets_bounded(g, max_n)?;
        Ok(Spectrum { graph: g.clone(), max_n, cuts })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cut_sets(&self) -> &[CutSet] {
        &self.cuts
    }

    pub fn primes(&self) -> Vec<PrimeDescriptor> {
        self.cuts.iter().map(|c| prime_of(&self.graph, c.set)).collect()
    }

    /// Minimum height over the minimal primes.
    pub fn height(&self) -> usize {
        let n = self.graph.n();
        self.cuts.iter().map(|c| c.height(n)).min().expect("the empty set is always in C(G)")
    }

    /// Krull dimension of `S/J_G`, `2n - height`.
    pub fn dim(&self) -> usize {
        2 * self.graph.n() - self.height()
    }

    pub fn unmixed(&self) -> Result<Verdict> {
        let g = &self.graph;
        if g.n() == 0 || g.is_connected() {
            let witness = self.cuts.iter().find(|c| c.components != c.set.len() + 1);
            return Ok(match witness {
                Some(c) => Verdict::no(RULE_CONNECTED_UNMIXED).with_witness(c.set),
                None => Verdict::yes(RULE_CONNECTED_UNMIXED),
            });
        }
        for comp in g.connected_components() {
            let sub = g.induced_subgraph(comp);
            let verdict = Spectrum::new(&sub.graph, self.max_n)?.unmixed()?;
            if verdict.is_no() {
                let mut out = Verdict::no(RULE_COMPONENTS_UNMIXED);
                out.witness = verdict.witness.map(|w| sub.lift(w));
                return Ok(out);
            }
        }
        Ok(Verdict::yes(RULE_COMPONENTS_UNMIXED))
    }

    pub fn pair_unmixed(&self, m: usize) -> Result<Verdict> {
        if m < 2 {
            return Err(Error::InvalidArgument(format!("m must be at least 2, got {m}")));
        }
        if !self.graph.is_connected() {
            return Err(Error::NotConnected);
        }
        let witness = self
            .cuts
            .iter()
            .find(|c| (c.components - 1) * (m - 1) != c.set.len());
        Ok(match witness {
            Some(c) => Verdict::no(RULE_PAIR_UNMIXED).with_witness(c.set),
            None => Verdict::yes(RULE_PAIR_UNMIXED),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &[usize]) -> VertexSet {
        VertexSet::one_based(labels)
    }

    fn sets(cuts: &[CutSet]) -> Vec<VertexSet> {
        cuts.iter().map(|c| c.set).collect()
    }

    #[test]
    fn cut_point_property_examples() {
        let p3 = Graph::path(3).unwrap();
        assert!(has_cut_point_property(&p3, vs(&[2])));
        let p4 = Graph::path(4).unwrap();
        assert!(!has_cut_point_property(&p4, vs(&[2, 3])));
        let k5 = Graph::complete(5).unwrap();
        for bits in 1..32u64 {
            assert!(!has_cut_point_property(&k5, VertexSet::from_bits(bits)));
        }
        assert!(has_cut_point_property(&k5, VertexSet::EMPTY));
    }

    #[test]
    fn full_set_has_no_components_and_no_property() {
        let p3 = Graph::path(3).unwrap();
        let all = cut_set(&p3, p3.vertices());
        assert_eq!(all.components, 0);
        assert!(!all.has_cpp);
        let k1 = Graph::complete(1).unwrap();
        assert!(!cut_set(&k1, k1.vertices()).has_cpp);
    }

    #[test]
    fn cut_sets_examples() {
        assert_eq!(sets(&cut_sets(&Graph::complete(4).unwrap()).unwrap()), vec![vs(&[])]);
        assert_eq!(
            sets(&cut_sets(&Graph::path(4).unwrap()).unwrap()),
            vec![vs(&[]), vs(&[2]), vs(&[3])]
        );
        assert_eq!(
            sets(&cut_sets(&Graph::cycle(4).unwrap()).unwrap()),
            vec![vs(&[]), vs(&[1, 3]), vs(&[2, 4])]
        );
    }

    #[test]
    fn size_bound_is_enforced() {
        let big = Graph::path(23).unwrap();
        assert_eq!(cut_sets(&big), Err(Error::SizeBound { n: 23, bound: 22 }));
        assert!(cut_sets_bounded(&Graph::path(6).unwrap(), 5).is_err());
    }

    #[test]
    fn prime_examples() {
        let k4 = Graph::complete(4).unwrap();
        let p = prime_of(&k4, VertexSet::EMPTY);
        assert_eq!((p.components.clone(), p.height), (vec![vs(&[1, 2, 3, 4])], 3));
        let p4 = Graph::path(4).unwrap();
        let p = prime_of(&p4, vs(&[2]));
        assert_eq!((p.components.clone(), p.height), (vec![vs(&[1]), vs(&[3, 4])], 3));
        assert_eq!(prime_of(&p4, vs(&[2, 3])).height, 4);
    }

    #[test]
    fn height_and_dim_examples() {
        for n in 1..7 {
            let kn = Graph::complete(n).unwrap();
            assert_eq!(height_j(&kn).unwrap(), n - 1);
            assert_eq!(dim_s_mod_j(&kn).unwrap(), n + 1);
        }
        assert_eq!(height_j(&Graph::path(4).unwrap()).unwrap(), 3);
        assert_eq!(height_j(&Graph::cycle(4).unwrap()).unwrap(), 3);
        assert_eq!(dim_s_mod_j(&Graph::path(4).unwrap()).unwrap(), 5);
        let star = Graph::complete_multipartite(&[1, 4]).unwrap();
        assert_eq!(dim_s_mod_j(&star).unwrap(), 8);
    }

    #[test]
    fn unmixed_examples() {
        assert!(is_unmixed(&Graph::complete(5).unwrap()).unwrap().is_yes());
        let claw = is_unmixed(&Graph::complete_multipartite(&[1, 3]).unwrap()).unwrap();
        assert!(claw.is_no());
        assert_eq!(claw.witness, Some(vs(&[1])));
        let c4 = is_unmixed(&Graph::cycle(4).unwrap()).unwrap();
        assert!(c4.is_no());
        assert_eq!(c4.witness, Some(vs(&[1, 3])));
    }

    #[test]
    fn disconnected_unmixed_uses_components() {
        let claw = Graph::complete_multipartite(&[1, 3]).unwrap();
        let g = Graph::disjoint_union(&[Graph::path(3).unwrap(), claw]).unwrap();
        let v = is_unmixed(&g).unwrap();
        assert!(v.is_no());
        assert_eq!(v.witness, Some(vs(&[4])));
        let g = Graph::disjoint_union(&[Graph::path(3).unwrap(), Graph::complete(2).unwrap()]).unwrap();
        assert!(is_unmixed(&g).unwrap().is_yes());
    }

    #[test]
    fn pair_unmixed_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_pair_unmixed(3, &c4).unwrap().is_yes());
        assert!(is_pair_unmixed(4, &c4).unwrap().is_no());
        assert!(is_pair_unmixed(2, &c4).unwrap().is_no());
        assert!(is_pair_unmixed(1, &c4).is_err());
        let two = Graph::edgeless(2).unwrap();
        assert_eq!(is_pair_unmixed(2, &two), Err(Error::NotConnected));
    }
}
