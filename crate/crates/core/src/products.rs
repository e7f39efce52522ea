//! Joins, cones, fans, complete multipartite graphs and coronas, with the
//! closed forms that express `C`, dimension and unmixedness of a product in
//! terms of its factors.
//!
//! Labeling is fixed: in `join(A, B)` the vertices of `A` come first and
//! `B` is shifted by `|A|`; in `corona(H, H')` the base `H` occupies
//! `0..n1` and the copy attached to base vertex `v` occupies
//! `n1 + v*n2 .. n1 + (v+1)*n2`.

use crate::error::{Error, Result};
use crate::graph::{Graph, Induced, VertexSet, MAX_VERTICES};
use crate::spectrum::{self, CutSet, Spectrum, Verdict, DEFAULT_MAX_N};

const RULE_JOIN_CC: &str =
    "join of connected factors with J(K_m, H_i) unmixed: unmixed iff both factors complete (CM likewise)";
const RULE_JOIN_CD: &str = "join H * (H_1 + .. + H_r) with n_i = 1 or n_i >= m: unmixed iff J(K_m, H_i) unmixed, \
     t = (r-1)(m-1), and (c_H(T)-1)(m-1) = |T| + sum n_i for nonempty T in C(H)";
const RULE_JOIN_DD: &str = "join of two disconnected graphs with all component sizes >= m: never unmixed";
const RULE_JOIN_CD_CM: &str = "join G_1 * (H_1 + .. + H_r) with S/J of the H_i CM: CM iff r = 2 and t = 1";
const RULE_CORONA_M2: &str = "corona with base on >= 2 vertices: unmixed iff CM iff both factors complete";
const RULE_WHISKER: &str = "whisker graph W(H), 2 <= m <= n: J(K_m, W(H)) unmixed iff H complete and m = 2";
const RULE_CORONA_BASE: &str = "corona, 2 <= m <= n1, n2: J(K_m, H o H') unmixed forces H complete";
const RULE_CORONA_FIBER: &str =
    "corona, 2 <= m <= n1, n2 with J(K_m, H') unmixed: J(K_m, H o H') unmixed iff H, H' complete and m = 2";

fn combined_size(a: usize, b: usize) -> Result<usize> {
    let n = a + b;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(n)
}

/// `A * B`: disjoint union plus every edge between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let n = combined_size(a.n(), b.n())?;
    let mut g = Graph::disjoint_union(&[a.clone(), b.clone()])?;
    debug_assert_eq!(g.n(), n);
    for u in 0..a.n() {
        for v in 0..b.n() {
            g.add_edge(u, a.n() + v);
        }
    }
    Ok(g)
}

/// `cone(v, G) = K_1 * G`, apex labeled first.
pub fn cone(g: &Graph) -> Result<Graph> {
    join(&Graph::complete(1)?, g)
}

/// Fan `F_{r,t}`: `r` independent vertices joined to the path `P_t`.
pub fn fan(r: usize, t: usize) -> Result<Graph> {
    join(&Graph::edgeless(r)?, &Graph::path(t)?)
}

/// Splits a graph into join factors: the vertex sets of the components of
/// its complement. `None` unless there are at least two.
pub fn join_decompose(g: &Graph) -> Option<Vec<VertexSet>> {
    let parts = g.complement().connected_components();
    (parts.len() >= 2).then_some(parts)
}

/// `A o B = {a + b}`; empty when either family is empty.
pub fn circ(a: &[VertexSet], b: &[VertexSet]) -> Vec<VertexSet> {
    a.iter().flat_map(|&x| b.iter().map(move |&y| x.union(y))).collect()
}

/// Iterated `o`; the join of no families is `{{}}`.
pub fn circ_all(families: &[Vec<VertexSet>]) -> Vec<VertexSet> {
    families.iter().fold(vec![VertexSet::EMPTY], |acc, f| circ(&acc, f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinCase {
    ConnConn,
    /// Exactly one factor is disconnected.
    ConnDisc,
    DiscDisc,
}

/// A join of two factors, `left` labeled first.
#[derive(Clone, Debug)]
pub struct JoinSpec {
    pub left: Graph,
    pub right: Graph,
}

impl JoinSpec {
    pub fn new(left: Graph, right: Graph) -> Result<Self> {
        if left.n() == 0 || right.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        combined_size(left.n(), right.n())?;
        Ok(JoinSpec { left, right })
    }

    pub fn case(&self) -> JoinCase {
        match (self.left.is_connected(), self.right.is_connected()) {
            (true, true) => JoinCase::ConnConn,
            (false, false) => JoinCase::DiscDisc,
            _ => JoinCase::ConnDisc,
        }
    }

    pub fn n(&self) -> usize {
        self.left.n() + self.right.n()
    }

    pub fn graph(&self) -> Graph {
        join(&self.left, &self.right).expect("size checked in JoinSpec::new")
    }

    fn sides(&self) -> [Side<'_>; 2] {
        let n1 = self.left.n();
        [
            Side { graph: &self.left, offset: 0, other: VertexSet::full(self.n()).difference(VertexSet::full(n1)) },
            Side { graph: &self.right, offset: n1, other: VertexSet::full(n1) },
        ]
    }
}

/// One factor of a join, positioned inside the product.
struct Side<'a> {
    graph: &'a Graph,
    offset: usize,
    /// Vertex block of the opposite factor.
    other: VertexSet,
}

impl Side<'_> {
    fn parts(&self) -> Vec<Induced> {
        self.graph
            .connected_components()
            .into_iter()
            .map(|c| self.graph.induced_subgraph(c))
            .collect()
    }

    /// Members of `C(A * B)` that contain the opposite block: `C̄(X) o {[Y]}`
    /// for connected `X`, `(o_i C(X_i)) o {[Y]}` otherwise.
    fn cut_family(&self) -> Result<Vec<CutSet>> {
        let mut out = Vec::new();
        if self.graph.is_connected() {
            for c in spectrum::cut_sets(self.graph)? {
                if !c.set.is_empty() {
                    out.push(CutSet {
                        set: c.set.shifted(self.offset).union(self.other),
                        components: c.components,
                        has_cpp: true,
                    });
                }
            }
            return Ok(out);
        }
        let mut acc = vec![(VertexSet::EMPTY, 0usize)];
        for part in self.parts() {
            let cuts = spectrum::cut_sets(&part.graph)?;
            let mut next = Vec::with_capacity(acc.len() * cuts.len());
            for &(set, c) in &acc {
                for cut in &cuts {
                    next.push((set.union(part.lift(cut.set)), c + cut.components));
                }
            }
            acc = next;
        }
        out.extend(acc.into_iter().map(|(set, components)| CutSet {
            set: set.shifted(self.offset).union(self.other),
            components,
            has_cpp: true,
        }));
        Ok(out)
    }

    /// Largest `dim S/P_T` over members of `C(A * B)` containing the
    /// opposite block, measured in the factor's own ring.
    fn best_dim(&self) -> Result<Option<usize>> {
        let n = self.graph.n();
        if self.graph.is_connected() {
            return Ok(spectrum::cut_sets(self.graph)?
                .iter()
                .filter(|c| !c.set.is_empty())
                .map(|c| n - c.set.len() + c.components)
                .max());
        }
        let mut total = 0;
        for part in self.parts() {
            total += Spectrum::new(&part.graph, DEFAULT_MAX_N)?.dim();
        }
        Ok(Some(total))
    }
}

fn sorted(mut cuts: Vec<CutSet>) -> Vec<CutSet> {
    cuts.sort_by(|a, b| a.set.canonical_cmp(&b.set));
    cuts.dedup_by(|a, b| a.set == b.set);
    cuts
}

/// `C(A * B)` from the factors alone.
pub fn join_cut_sets(spec: &JoinSpec) -> Result<Vec<CutSet>> {
    let mut out = vec![CutSet { set: VertexSet::EMPTY, components: 1, has_cpp: true }];
    for side in spec.sides() {
        out.extend(side.cut_family()?);
    }
    Ok(sorted(out))
}

fn require_connected(graphs: &[&Graph]) -> Result<()> {
    if graphs.iter().all(|g| g.is_connected()) {
        Ok(())
    } else {
        Err(Error::NotConnected)
    }
}

/// `C(G_1 * G_2) = {{}} + C̄(G_1) o {[n_2]} + C̄(G_2) o {[n_1]}` for connected
/// factors.
pub fn cutsets_join_cc(g1: &Graph, g2: &Graph) -> Result<Vec<CutSet>> {
    require_connected(&[g1, g2])?;
    join_cut_sets(&JoinSpec::new(g1.clone(), g2.clone())?)
}

/// `C(G_1 * (H_1 + .. + H_r)) = {{}} + (o_i C(H_i)) o {[t]} + C̄(G_1) o {U [n_i]}`.
pub fn cutsets_join_cd(g1: &Graph, parts: &[Graph]) -> Result<Vec<CutSet>> {
    if parts.len() < 2 {
        return Err(Error::InvalidArgument("the disconnected factor needs at least two components".into()));
    }
    require_connected(&[g1])?;
    require_connected(&parts.iter().collect::<Vec<_>>())?;
    join_cut_sets(&JoinSpec::new(g1.clone(), Graph::disjoint_union(parts)?)?)
}

/// `C(G_1 * G_2) = {{}} + (o_i C(G_1i)) o {[n_2]} + (o_j C(G_2j)) o {[n_1]}`
/// for two disconnected factors.
pub fn cutsets_join_dd(left: &[Graph], right: &[Graph]) -> Result<Vec<CutSet>> {
    if left.len() < 2 || right.len() < 2 {
        return Err(Error::InvalidArgument("both factors need at least two components".into()));
    }
    require_connected(&left.iter().chain(right).collect::<Vec<_>>())?;
    join_cut_sets(&JoinSpec::new(Graph::disjoint_union(left)?, Graph::disjoint_union(right)?)?)
}

/// `dim S/J_{A*B}` from the factors: the larger of `n + 1` and the best
/// dimension contributed by each side's cut family.
pub fn dim_join(spec: &JoinSpec) -> Result<usize> {
    let mut best = spec.n() + 1;
    for side in spec.sides() {
        if let Some(d) = side.best_dim()? {
            best = best.max(d);
        }
    }
    Ok(best)
}

/// `dim S/J` of `K_{n_1, .., n_t}`: `max { sum n_i + 1, 2 max n_i }`.
pub fn dim_multipartite(parts: &[usize]) -> Result<usize> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidArgument("parts must be nonempty and positive".into()));
    }
    let total: usize = parts.iter().sum();
    let largest = *parts.iter().max().expect("nonempty");
    Ok((total + 1).max(2 * largest))
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m must be at least 2, got {m}")));
    }
    Ok(())
}

fn first_nonempty_cut(g: &Graph) -> Result<Option<CutSet>> {
    Ok(spectrum::cut_sets(g)?.into_iter().find(|c| !c.set.is_empty()))
}

/// Unmixedness of `J(K_m, A * B)` by the closed-form criteria for the three
/// join shapes. `Unknown` when the criterion's hypotheses do not hold.
pub fn unmixed_join(spec: &JoinSpec, m: usize) -> Result<Verdict> {
    check_m(m)?;
    let n = spec.n();
    if m > n {
        return Ok(Verdict::unknown(format!("closed forms need m <= n, got m = {m}, n = {n}")));
    }
    let [left, right] = spec.sides();
    match spec.case() {
        JoinCase::ConnConn => {
            for side in [&left, &right] {
                if !Spectrum::new(side.graph, DEFAULT_MAX_N)?.pair_unmixed(m)?.is_yes() {
                    return Ok(Verdict::unknown(
                        "join of connected factors: J(K_m, H_i) is not unmixed for some factor",
                    ));
                }
            }
            for side in [&left, &right] {
                if let Some(c) = first_nonempty_cut(side.graph)? {
                    return Ok(Verdict::no(RULE_JOIN_CC).with_witness(c.set.shifted(side.offset).union(side.other)));
                }
            }
            Ok(Verdict::yes(RULE_JOIN_CC))
        }
        JoinCase::ConnDisc => {
            let (conn, disc) = if left.graph.is_connected() { (&left, &right) } else { (&right, &left) };
            let parts = disc.parts();
            let sizes: Vec<usize> = parts.iter().map(|p| p.graph.n()).collect();
            if sizes.iter().any(|&s| s > 1 && s < m) {
                return Ok(Verdict::unknown("join with a disconnected factor: some component has 1 < n_i < m"));
            }
            let t = conn.graph.n();
            let r = parts.len();
            let conn_block = VertexSet::full(t).shifted(conn.offset);
            let disc_block = disc.graph.vertices().shifted(disc.offset);
            if t != (r - 1) * (m - 1) {
                return Ok(Verdict::no(RULE_JOIN_CD).with_witness(conn_block));
            }
            let disc_total: usize = sizes.iter().sum();
            for c in spectrum::cut_sets(conn.graph)?.iter().filter(|c| !c.set.is_empty()) {
                if (c.components - 1) * (m - 1) != c.set.len() + disc_total {
                    return Ok(Verdict::no(RULE_JOIN_CD).with_witness(c.set.shifted(conn.offset).union(disc_block)));
                }
            }
            for part in &parts {
                let v = Spectrum::new(&part.graph, DEFAULT_MAX_N)?.pair_unmixed(m)?;
                if v.is_no() {
                    let w = v.witness.map(|w| part.lift(w).shifted(disc.offset)).unwrap_or_default();
                    return Ok(Verdict::no(RULE_JOIN_CD).with_witness(w.union(conn_block)));
                }
            }
            Ok(Verdict::yes(RULE_JOIN_CD))
        }
        JoinCase::DiscDisc => {
            let all_large = [&left, &right]
                .iter()
                .all(|s| s.graph.connected_components().iter().all(|c| c.len() >= m));
            if all_large {
                Ok(Verdict::no(RULE_JOIN_DD).with_witness(right.other))
            } else {
                Ok(Verdict::unknown("join of disconnected graphs: some component has fewer than m vertices"))
            }
        }
    }
}

/// Runs the pair criterion on the constructed graph when a closed form is
/// inconclusive; stays `Unknown` only when the graph exceeds the bound.
fn fallback(graph: impl FnOnce() -> Result<Graph>, m: usize, verdict: Verdict) -> Result<Verdict> {
    if !verdict.is_unknown() {
        return Ok(verdict);
    }
    let g = graph()?;
    if g.n() > DEFAULT_MAX_N {
        return Ok(verdict);
    }
    let mut decided = Spectrum::new(&g, DEFAULT_MAX_N)?.pair_unmixed(m)?;
    decided.rule = format!("fallback to {} ({})", decided.rule, verdict.rule);
    Ok(decided)
}

pub fn unmixed_join_or_fallback(spec: &JoinSpec, m: usize) -> Result<Verdict> {
    let verdict = unmixed_join(spec, m)?;
    fallback(|| Ok(spec.graph()), m, verdict)
}

/// CM status of `S/J_{G_1 * G_2}` with `G_1` connected on `t` vertices and
/// `G_2` disconnected with `r` components. Decided only when every
/// component of `G_2` is certified CM (complete, or a generalized block
/// graph passing the block criterion).
pub fn cm_join_cd(spec: &JoinSpec) -> Result<Verdict> {
    if spec.case() != JoinCase::ConnDisc {
        return Err(Error::InvalidArgument("expected one connected and one disconnected factor".into()));
    }
    let [left, right] = spec.sides();
    let (conn, disc) = if left.graph.is_connected() { (&left, &right) } else { (&right, &left) };
    let parts = disc.parts();
    for part in &parts {
        let g = &part.graph;
        let certified = g.is_complete()
            || (crate::genblock::is_generalized_block(g) && crate::genblock::cm_status(g)?.is_yes());
        if !certified {
            return Ok(Verdict::unknown("join with a disconnected factor: CM of that factor not certified"));
        }
    }
    let t = conn.graph.n();
    let verdict = Verdict::from_bool(parts.len() == 2 && t == 1, RULE_JOIN_CD_CM);
    Ok(if verdict.is_no() { verdict.with_witness(VertexSet::full(t).shifted(conn.offset)) } else { verdict })
}

/// Corona `H o H'` of two connected graphs.
#[derive(Clone, Debug)]
pub struct CoronaSpec {
    pub base: Graph,
    pub fiber: Graph,
}

impl CoronaSpec {
    pub fn new(base: Graph, fiber: Graph) -> Result<Self> {
        require_connected(&[&base, &fiber])?;
        let n = base.n() * (1 + fiber.n());
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(CoronaSpec { base, fiber })
    }

    pub fn n(&self) -> usize {
        self.base.n() * (1 + self.fiber.n())
    }

    /// First vertex of the copy hanging off base vertex `v`.
    fn fiber_offset(&self, v: usize) -> usize {
        self.base.n() + v * self.fiber.n()
    }

    pub fn graph(&self) -> Graph {
        let copies: Vec<Graph> = std::iter::once(self.base.clone())
            .chain(std::iter::repeat_n(self.fiber.clone(), self.base.n()))
            .collect();
        let mut g = Graph::disjoint_union(&copies).expect("size checked in CoronaSpec::new");
        for v in 0..self.base.n() {
            let off = self.fiber_offset(v);
            for w in 0..self.fiber.n() {
                g.add_edge(v, off + w);
            }
        }
        g
    }
}

pub fn corona(h: &Graph, fiber: &Graph) -> Result<Graph> {
    Ok(CoronaSpec::new(h.clone(), fiber.clone())?.graph())
}

/// `W(H) = H o K_1`: a pendant vertex on every vertex of `H`.
pub fn whisker(h: &Graph) -> Result<Graph> {
    corona(h, &Graph::complete(1)?)
}

/// For each nonempty `T` in the base, the admissible fiber cut sets per
/// vertex of `T`: all of `C(H')`, minus the empty set when `N_H(v)` lies
/// inside `T`. `None` when some vertex has no admissible choice.
fn admissible<'a>(spec: &CoronaSpec, t: VertexSet, fiber_cuts: &'a [CutSet]) -> Option<Vec<Vec<&'a CutSet>>> {
    t.iter()
        .map(|v| {
            let enclosed = spec.base.neighbors(v).is_subset(t);
            let options: Vec<&CutSet> = fiber_cuts.iter().filter(|c| !(enclosed && c.set.is_empty())).collect();
            (!options.is_empty()).then_some(options)
        })
        .collect()
}

/// `C(H o H')`: the empty set and every `T + U_{v in T} T_v` with
/// `T_v in C(H'_v)` and `T_v` nonempty whenever `N_H(v)` is inside `T`.
pub fn cutsets_corona(h: &Graph, fiber: &Graph) -> Result<Vec<CutSet>> {
    let spec = CoronaSpec::new(h.clone(), fiber.clone())?;
    let fiber_cuts = spectrum::cut_sets(fiber)?;
    let mut out = vec![CutSet { set: VertexSet::EMPTY, components: 1, has_cpp: true }];
    for bits in 1..1u64 << h.n() {
        let t = VertexSet::from_bits(bits);
        let Some(options) = admissible(&spec, t, &fiber_cuts) else { continue };
        let base_c = h.count_components_within(h.vertices().difference(t));
        let mut acc = vec![(t, base_c)];
        for (v, opts) in t.iter().zip(&options) {
            let off = spec.fiber_offset(v);
            acc = acc
                .iter()
                .flat_map(|&(set, c)| opts.iter().map(move |o| (set.union(o.set.shifted(off)), c + o.components)))
                .collect();
        }
        out.extend(acc.into_iter().map(|(set, components)| CutSet { set, components, has_cpp: true }));
    }
    Ok(sorted(out))
}

/// `dim S/J_{H o H'}`: `n1 + n1 n2 + 1` when `H` is complete and `J_{H'}`
/// unmixed, otherwise the maximum of that and, over admissible `(T, T_v)`,
/// `dim S1/P_T(H) + sum dim S2/P_{T_v}(H') + n2 (n1 - |T|)`.
pub fn dim_corona(h: &Graph, fiber: &Graph) -> Result<usize> {
    let spec = CoronaSpec::new(h.clone(), fiber.clone())?;
    let (n1, n2) = (h.n(), fiber.n());
    let floor = n1 + n1 * n2 + 1;
    let fiber_spec = Spectrum::new(fiber, DEFAULT_MAX_N)?;
    if h.is_complete() && fiber_spec.unmixed()?.is_yes() {
        return Ok(floor);
    }
    let fiber_cuts = fiber_spec.cut_sets();
    let mut best = floor;
    for bits in 1..1u64 << n1 {
        let t = VertexSet::from_bits(bits);
        let Some(options) = admissible(&spec, t, fiber_cuts) else { continue };
        let base_dim = n1 - t.len() + h.count_components_within(h.vertices().difference(t));
        let fibers: usize = options
            .iter()
            .map(|opts| opts.iter().map(|c| n2 - c.set.len() + c.components).max().expect("nonempty"))
            .sum();
        best = best.max(base_dim + fibers + n2 * (n1 - t.len()));
    }
    Ok(best)
}

/// Unmixedness of `J(K_m, H o H')` by the corona criteria. A single-vertex
/// base makes the corona a cone and defers to [`unmixed_join`].
pub fn unmixed_corona(m: usize, h: &Graph, fiber: &Graph) -> Result<Verdict> {
    check_m(m)?;
    let spec = CoronaSpec::new(h.clone(), fiber.clone())?;
    let (n1, n2) = (h.n(), fiber.n());
    if n1 == 1 {
        let mut v = unmixed_join(&JoinSpec::new(h.clone(), fiber.clone())?, m)?;
        v.rule = format!("single-vertex base, corona is a cone: {}", v.rule);
        return Ok(v);
    }
    let base_witness = || -> Result<Option<VertexSet>> { Ok(first_nonempty_cut(h)?.map(|c| c.set)) };
    if m == 2 {
        if let Some(w) = base_witness()? {
            return Ok(Verdict::no(RULE_CORONA_M2).with_witness(w));
        }
        if let Some(c) = first_nonempty_cut(fiber)? {
            let w = (0..n1).fold(h.vertices(), |acc, v| acc.union(c.set.shifted(spec.fiber_offset(v))));
            return Ok(Verdict::no(RULE_CORONA_M2).with_witness(w));
        }
        return Ok(Verdict::yes(RULE_CORONA_M2));
    }
    if n2 == 1 {
        if m > n1 {
            return Ok(Verdict::unknown("whisker graph: closed form needs m <= n"));
        }
        let w = base_witness()?.unwrap_or(VertexSet::singleton(0));
        return Ok(Verdict::no(RULE_WHISKER).with_witness(w));
    }
    if m > n1 || m > n2 {
        return Ok(Verdict::unknown("corona: closed forms need m <= n1 and m <= n2"));
    }
    if let Some(w) = base_witness()? {
        return Ok(Verdict::no(RULE_CORONA_BASE).with_witness(w));
    }
    if Spectrum::new(fiber, DEFAULT_MAX_N)?.pair_unmixed(m)?.is_yes() {
        return Ok(Verdict::no(RULE_CORONA_FIBER).with_witness(VertexSet::singleton(0)));
    }
    Ok(Verdict::unknown("corona with m >= 3, complete base and J(K_m, H') not unmixed"))
}

pub fn unmixed_corona_or_fallback(m: usize, h: &Graph, fiber: &Graph) -> Result<Verdict> {
    let verdict = unmixed_corona(m, h, fiber)?;
    fallback(|| corona(h, fiber), m, verdict)
}

/// CM status of `S/J_{H o H'}`.
pub fn cm_corona(h: &Graph, fiber: &Graph) -> Result<Verdict> {
    if h.n() >= 2 {
        let mut v = unmixed_corona(2, h, fiber)?;
        if v.is_no() {
            v.witness = None;
        }
        return Ok(v);
    }
    // single base vertex: a cone over H'
    if fiber.is_complete() {
        return Ok(Verdict::yes("complete graph: CM"));
    }
    let v = unmixed_corona(2, h, fiber)?;
    if v.is_no() {
        return Ok(Verdict::no(format!("CM implies unmixed; {}", v.rule)));
    }
    Ok(Verdict::unknown("cone over a non-complete graph with unmixed J: CM not decided"))
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

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn p(n: usize) -> Graph {
        Graph::path(n).unwrap()
    }

    fn union(parts: &[Graph]) -> Graph {
        Graph::disjoint_union(parts).unwrap()
    }

    #[test]
    fn join_constructions() {
        assert_eq!(join(&k(1), &k(2)).unwrap(), k(3));
        let fan32 = join(&Graph::edgeless(3).unwrap(), &p(2)).unwrap();
        assert_eq!(fan32, fan(3, 2).unwrap());
        assert_eq!(fan32.edge_count(), 7);
        let fig3 = join(&union(&[k(2), k(1)]), &union(&[k(1), k(1)])).unwrap();
        assert_eq!((fig3.n(), fig3.edge_count()), (5, 7));
        assert_eq!(cone(&Graph::edgeless(2).unwrap()).unwrap(), Graph::complete_multipartite(&[1, 2]).unwrap());
    }

    #[test]
    fn join_decompose_recovers_factors() {
        let g = join(&p(3), &union(&[k(1), k(2)])).unwrap();
        assert_eq!(join_decompose(&g), Some(vec![vs(&[1, 3]), vs(&[2]), vs(&[4, 5, 6])]));
        assert_eq!(join_decompose(&p(4)), None);
    }

    #[test]
    fn circ_examples() {
        let a = vec![vs(&[1]), vs(&[2])];
        let b = vec![vs(&[3])];
        assert_eq!(circ(&a, &b), vec![vs(&[1, 3]), vs(&[2, 3])]);
        assert!(circ(&a, &[]).is_empty());
        assert!(circ(&[], &b).is_empty());
        assert_eq!(circ_all(&[]), vec![VertexSet::EMPTY]);
    }

    #[test]
    fn cutsets_cc_examples() {
        assert_eq!(sets(&cutsets_join_cc(&k(2), &k(2)).unwrap()), vec![vs(&[])]);
        assert_eq!(sets(&cutsets_join_cc(&p(3), &k(2)).unwrap()), vec![vs(&[]), vs(&[2, 4, 5])]);
        assert_eq!(
            sets(&cutsets_join_cc(&p(3), &p(3)).unwrap()),
            vec![vs(&[]), vs(&[1, 2, 3, 5]), vs(&[2, 4, 5, 6])]
        );
        assert_eq!(cutsets_join_cc(&p(3), &Graph::edgeless(2).unwrap()).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn cutsets_cd_examples() {
        let cuts = cutsets_join_cd(&k(1), &[k(1), k(1)]).unwrap();
        assert_eq!(sets(&cuts), vec![vs(&[]), vs(&[1])]);
        assert_eq!(cuts[1].components, 2);
        assert!(cutsets_join_cd(&k(1), &[k(1)]).is_err());
        // complete connected factor contributes nothing beyond [t]-sets
        let cuts = cutsets_join_cd(&k(2), &[p(3), k(1)]).unwrap();
        assert_eq!(sets(&cuts), vec![vs(&[]), vs(&[1, 2]), vs(&[1, 2, 4])]);
        // the disconnected factor may come first
        let spec = JoinSpec::new(Graph::edgeless(2).unwrap(), k(1)).unwrap();
        assert_eq!(spec.case(), JoinCase::ConnDisc);
        assert_eq!(sets(&join_cut_sets(&spec).unwrap()), vec![vs(&[]), vs(&[3])]);
    }

    #[test]
    fn cutsets_dd_examples() {
        let c4 = cutsets_join_dd(&[k(1), k(1)], &[k(1), k(1)]).unwrap();
        assert_eq!(sets(&c4), vec![vs(&[]), vs(&[1, 2]), vs(&[3, 4])]);
        let k23 = cutsets_join_dd(&[k(1), k(1)], &[k(1), k(1), k(1)]).unwrap();
        assert_eq!(sets(&k23), vec![vs(&[]), vs(&[1, 2]), vs(&[3, 4, 5])]);
        assert!(cutsets_join_dd(&[k(2)], &[k(1), k(1)]).is_err());
    }

    #[test]
    fn dim_join_examples() {
        let spec = JoinSpec::new(k(2), union(&[k(2), k(3)])).unwrap();
        assert_eq!(dim_join(&spec).unwrap(), 8);
        let claw = Graph::complete_multipartite(&[1, 4]).unwrap();
        let spec = JoinSpec::new(k(2), union(&[k(2), claw])).unwrap();
        assert_eq!(dim_join(&spec).unwrap(), 11);
        for r in 1..5 {
            for t in 1..5 {
                let spec = JoinSpec::new(Graph::edgeless(r).unwrap(), p(t)).unwrap();
                assert_eq!(dim_join(&spec).unwrap(), (2 * r).max(r + t + 1), "F({r},{t})");
            }
        }
    }

    #[test]
    fn dim_multipartite_examples() {
        assert_eq!(dim_multipartite(&[1, 1, 1]).unwrap(), 4);
        assert_eq!(dim_multipartite(&[1, 4]).unwrap(), 8);
        assert_eq!(dim_multipartite(&[2, 2]).unwrap(), 5);
        assert_eq!(dim_multipartite(&[3]).unwrap(), 6);
        assert!(dim_multipartite(&[]).is_err());
    }

    #[test]
    fn unmixed_join_examples() {
        let spec = JoinSpec::new(k(2), k(3)).unwrap();
        assert!(unmixed_join(&spec, 2).unwrap().is_yes());
        // cone over P_3 is not unmixed although J_{P_3} is
        let spec = JoinSpec::new(k(1), p(3)).unwrap();
        assert!(unmixed_join(&spec, 2).unwrap().is_no());
        // fans: only F(2,1) and F(3,2)
        for r in 2..6 {
            for t in 1..6 {
                let spec = JoinSpec::new(Graph::edgeless(r).unwrap(), p(t)).unwrap();
                let expected = (r, t) == (2, 1) || (r, t) == (3, 2);
                assert_eq!(unmixed_join(&spec, 2).unwrap().is_yes(), expected, "F({r},{t})");
            }
        }
        // K_l^c * K_{s-1}
        for l in 2..6 {
            for s in 2..6 {
                let spec = JoinSpec::new(Graph::edgeless(l).unwrap(), k(s - 1)).unwrap();
                assert_eq!(unmixed_join(&spec, 2).unwrap().is_yes(), l == s);
            }
        }
        // the 4-cycle as a join of two disconnected graphs: closed form is silent
        let spec = JoinSpec::new(Graph::edgeless(2).unwrap(), Graph::edgeless(2).unwrap()).unwrap();
        assert!(unmixed_join(&spec, 3).unwrap().is_unknown());
        assert!(unmixed_join_or_fallback(&spec, 3).unwrap().is_yes());
        assert!(unmixed_join_or_fallback(&spec, 4).unwrap().is_no());
        let big = JoinSpec::new(union(&[k(2), k(2)]), union(&[k(2), k(3)])).unwrap();
        assert!(unmixed_join(&big, 2).unwrap().is_no());
    }

    #[test]
    fn cm_join_cd_examples() {
        let spec = JoinSpec::new(k(1), union(&[k(2), k(3)])).unwrap();
        assert!(cm_join_cd(&spec).unwrap().is_yes());
        let spec = JoinSpec::new(k(2), Graph::edgeless(3).unwrap()).unwrap();
        assert!(cm_join_cd(&spec).unwrap().is_no());
        let spec = JoinSpec::new(k(1), Graph::edgeless(3).unwrap()).unwrap();
        assert!(cm_join_cd(&spec).unwrap().is_no());
        let spec = JoinSpec::new(k(1), union(&[Graph::cycle(4).unwrap(), k(1)])).unwrap();
        assert!(cm_join_cd(&spec).unwrap().is_unknown());
        assert!(cm_join_cd(&JoinSpec::new(k(1), k(2)).unwrap()).is_err());
    }

    #[test]
    fn corona_constructions() {
        assert_eq!(corona(&k(1), &k(2)).unwrap(), k(3));
        let g = corona(&k(3), &k(2)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 3 + 3 * 3));
        let pendant_pair = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        assert_eq!(corona(&k(2), &k(1)).unwrap(), pendant_pair);
        assert_eq!(whisker(&k(2)).unwrap(), pendant_pair);
        assert_eq!(corona(&Graph::edgeless(2).unwrap(), &k(1)).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn cutsets_corona_examples() {
        assert_eq!(sets(&cutsets_corona(&k(2), &k(1)).unwrap()), vec![vs(&[]), vs(&[1]), vs(&[2])]);
        let cuts = cutsets_corona(&k(3), &k(2)).unwrap();
        assert_eq!(
            sets(&cuts),
            vec![vs(&[]), vs(&[1]), vs(&[2]), vs(&[3]), vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]
        );
        assert_eq!(sets(&cutsets_corona(&k(1), &k(4)).unwrap()), vec![vs(&[])]);
    }

    #[test]
    fn dim_corona_examples() {
        assert_eq!(dim_corona(&k(3), &k(2)).unwrap(), 10);
        assert_eq!(dim_corona(&p(3), &p(3)).unwrap(), 14);
        let claw = Graph::complete_multipartite(&[1, 3]).unwrap();
        assert_eq!(dim_corona(&k(2), &claw).unwrap(), 12);
    }

    #[test]
    fn unmixed_corona_examples() {
        assert!(unmixed_corona(2, &k(3), &k(2)).unwrap().is_yes());
        assert!(cm_corona(&k(3), &k(2)).unwrap().is_yes());
        assert!(unmixed_corona(2, &p(3), &k(1)).unwrap().is_no());
        assert!(unmixed_corona(2, &p(3), &k(2)).unwrap().is_no());
        assert!(unmixed_corona(2, &k(3), &p(3)).unwrap().is_no());
        assert!(unmixed_corona(3, &k(3), &k(1)).unwrap().is_no());
        assert!(unmixed_corona(3, &k(2), &k(2)).unwrap().is_unknown());
        assert!(unmixed_corona_or_fallback(3, &k(2), &k(2)).unwrap().is_no());
        assert!(unmixed_corona(2, &k(1), &k(1)).unwrap().is_yes());
    }
}
