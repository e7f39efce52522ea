//! Cross-check suite: closed forms and fast paths against the brute-force
//! oracles on seeded random instances.
//!
//! Every family draws its instances from its own ChaCha stream, so a report
//! depends only on the configuration.

use std::fmt::{self, Debug, Write as _};
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gen;
use crate::genblock;
use crate::graph::{Graph, VertexSet};
use crate::io::to_edgelist;
use crate::oracle::{self, ORACLE_MAX_N};
use crate::products::{self, JoinCase, JoinSpec};
use crate::spectrum::{self, CutSet, Spectrum, DEFAULT_MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Spectrum,
    GeneralizedBlock,
    BlockGraph,
    JoinConnConn,
    JoinConnDisc,
    JoinDiscDisc,
    Multipartite,
    Corona,
    Cone,
    PairUnmixed,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Spectrum,
        Family::GeneralizedBlock,
        Family::BlockGraph,
        Family::JoinConnConn,
        Family::JoinConnDisc,
        Family::JoinDiscDisc,
        Family::Multipartite,
        Family::Corona,
        Family::Cone,
        Family::PairUnmixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Spectrum => "spectrum",
            Family::GeneralizedBlock => "generalized-block",
            Family::BlockGraph => "block-graph",
            Family::JoinConnConn => "join-cc",
            Family::JoinConnDisc => "join-cd",
            Family::JoinDiscDisc => "join-dd",
            Family::Multipartite => "multipartite",
            Family::Corona => "corona",
            Family::Cone => "cone",
            Family::PairUnmixed => "pair-unmixed",
        }
    }

    /// Smallest total vertex count an instance of this family can have.
    fn min_n(self) -> usize {
        match self {
            Family::JoinConnConn | Family::Corona => 2,
            Family::JoinConnDisc | Family::Cone => 3,
            Family::JoinDiscDisc => 4,
            _ => 1,
        }
    }

    fn stream(self) -> u64 {
        Family::ALL.iter().position(|&f| f == self).expect("listed") as u64
    }
}

/// Deliberate defects for checking that the suite catches errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Drop the last member of the join cut-set formula.
    JoinCutSets,
    /// Add one to the join dimension formula.
    JoinDim,
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "join-cut-sets" => Ok(Mutation::JoinCutSets),
            "join-dim" => Ok(Mutation::JoinDim),
            other => Err(Error::InvalidArgument(format!("unknown mutation {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Instances per family.
    pub count: usize,
    /// Largest vertex count of a generated graph.
    pub max_n: usize,
    pub mutation: Option<Mutation>,
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub family: Family,
    pub instances: usize,
    pub checks: usize,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub family: Family,
    pub instance: usize,
    pub check: String,
    pub detail: String,
    pub graph: Graph,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub families: Vec<FamilyReport>,
    /// First failure in family order.
    pub failure: Option<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "verify: seed {}, count {}, max-n {}", c.seed, c.count, c.max_n)?;
        for r in &self.families {
            let status = if r.passed { "ok" } else { "FAILED" };
            writeln!(f, "{:<18} {:>5} instances {:>6} checks  {status}", r.family.name(), r.instances, r.checks)?;
        }
        match &self.failure {
            None => writeln!(f, "all checks passed"),
            Some(x) => {
                writeln!(f, "FAILED: {} instance {}, {}: {}", x.family.name(), x.instance, x.check, x.detail)?;
                writeln!(f, "counterexample (edgelist):")?;
                write!(f, "{}", to_edgelist(&x.graph))
            }
        }
    }
}

pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    check_config(cfg)?;
    let results: Vec<(FamilyReport, Option<Failure>)> =
        Family::ALL.par_iter().map(|&f| run_family(f, cfg)).collect::<Result<_>>()?;
    let failure = results.iter().find_map(|(_, x)| x.clone());
    Ok(VerifyReport { config: cfg.clone(), families: results.into_iter().map(|(r, _)| r).collect(), failure })
}

fn check_config(cfg: &VerifyConfig) -> Result<()> {
    if cfg.max_n > ORACLE_MAX_N {
        return Err(Error::SizeBound { n: cfg.max_n, bound: ORACLE_MAX_N });
    }
    if cfg.max_n == 0 {
        return Err(Error::InvalidArgument("max-n must be positive".into()));
    }
    Ok(())
}

/// Runs one family, stopping at its first failing check.
pub fn run_family(family: Family, cfg: &VerifyConfig) -> Result<(FamilyReport, Option<Failure>)> {
    check_config(cfg)?;
    let mut rng = gen::rng(cfg.seed);
    rng.set_stream(family.stream());
    let mut ck = Checker { family, instance: 0, checks: 0, failure: None, mutation: cfg.mutation };
    let count = if cfg.max_n >= family.min_n() { cfg.count } else { 0 };
    let mut instances = 0;
    for i in 0..count {
        ck.instance = i;
        instances += 1;
        match family {
            Family::Spectrum => check_spectrum(&mut ck, &mut rng, cfg.max_n)?,
            Family::GeneralizedBlock => check_genblock(&mut ck, &mut rng, cfg.max_n)?,
            Family::BlockGraph => check_block(&mut ck, &mut rng, cfg.max_n)?,
            Family::JoinConnConn | Family::JoinConnDisc | Family::JoinDiscDisc => {
                check_join(&mut ck, &mut rng, cfg.max_n)?
            }
            Family::Multipartite => check_multipartite(&mut ck, &mut rng, cfg.max_n)?,
            Family::Corona => check_corona(&mut ck, &mut rng, cfg.max_n)?,
            Family::Cone => check_cone(&mut ck, &mut rng, cfg.max_n)?,
            Family::PairUnmixed => check_pair(&mut ck, &mut rng, cfg.max_n)?,
        }
        if ck.failure.is_some() {
            break;
        }
    }
    let report = FamilyReport { family, instances, checks: ck.checks, passed: ck.failure.is_none() };
    Ok((report, ck.failure))
}

struct Checker {
    family: Family,
    instance: usize,
    checks: usize,
    failure: Option<Failure>,
    mutation: Option<Mutation>,
}

impl Checker {
    fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn expect(&mut self, check: &str, graph: &Graph, ok: bool, detail: impl FnOnce() -> String) {
        if self.failed() {
            return;
        }
        self.checks += 1;
        if !ok {
            self.failure = Some(Failure {
                family: self.family,
                instance: self.instance,
                check: check.to_string(),
                detail: detail(),
                graph: graph.clone(),
            });
        }
    }

    fn eq<T: PartialEq + Debug>(&mut self, check: &str, graph: &Graph, formula: T, oracle: T) {
        let ok = formula == oracle;
        self.expect(check, graph, ok, || format!("formula {formula:?} != oracle {oracle:?}"));
    }

    fn cut_sets(&mut self, check: &str, graph: &Graph, formula: &[CutSet], oracle: &[CutSet]) {
        let ok = formula.len() == oracle.len()
            && formula.iter().zip(oracle).all(|(a, b)| a.set == b.set && a.components == b.components);
        self.expect(check, graph, ok, || format!("formula [{}] != oracle [{}]", show(formula), show(oracle)));
    }

    /// A decided verdict must match the oracle; `unknown` passes.
    fn verdict(&mut self, check: &str, graph: &Graph, verdict: &spectrum::Verdict, oracle: bool) {
        if let Some(decided) = verdict.decided() {
            self.expect(check, graph, decided == oracle, || format!("verdict {verdict} but oracle says {oracle}"));
        }
    }
}

fn show(cuts: &[CutSet]) -> String {
    let mut s = String::new();
    for (i, c) in cuts.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{} c={}", c.set, c.components);
    }
    s
}

/// Oracle form of the pair criterion on a connected graph.
fn oracle_pair(m: usize, cuts: &[CutSet]) -> bool {
    cuts.iter().all(|c| (c.components - 1) * (m - 1) == c.set.len())
}

fn density(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.1..0.7)
}

fn connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = density(rng);
    gen::random_connected_graph(rng, n, p)
}

/// Splits `total` into `parts` positive sizes.
fn composition(rng: &mut ChaCha8Rng, total: usize, parts: usize) -> Vec<usize> {
    let mut sizes = vec![1; parts];
    for _ in parts..total {
        let i = rng.gen_range(0..parts);
        sizes[i] += 1;
    }
    sizes
}

/// A disconnected graph on `total >= 2` vertices with connected random
/// components.
fn disconnected(rng: &mut ChaCha8Rng, total: usize) -> (Graph, Vec<Graph>) {
    let parts = rng.gen_range(2..=total.min(4));
    let comps: Vec<Graph> = composition(rng, total, parts).into_iter().map(|k| connected(rng, k)).collect();
    (Graph::disjoint_union(&comps).expect("n within bounds"), comps)
}

fn check_spectrum(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let n = rng.gen_range(1..=max_n);
    let p = density(rng);
    let g = gen::random_graph(rng, n, p);
    let spec = Spectrum::new(&g, DEFAULT_MAX_N)?;
    let bf = oracle::bf_cut_sets(&g)?;
    ck.cut_sets("cut sets", &g, spec.cut_sets(), &bf);
    ck.eq("dimension", &g, spec.dim(), oracle::bf_dim(&g)?);
    ck.verdict("unmixed", &g, &spec.unmixed()?, oracle::bf_unmixed(&g)?);
    if g.is_connected() {
        ck.verdict("pair unmixed, m = 2", &g, &spec.pair_unmixed(2)?, oracle::bf_unmixed(&g)?);
    }
    Ok(())
}

fn check_genblock(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let n = rng.gen_range(1..=max_n);
    let g = gen::random_generalized_block(rng, n);
    let cuts: Vec<VertexSet> = genblock::minimal_cut_sets(&g)?.into_iter().map(|c| c.set).collect();
    ck.eq("minimal cut sets", &g, cuts, oracle::bf_minimal_vertex_cuts(&g)?);
    let unmixed = oracle::bf_unmixed(&g)?;
    ck.verdict("unmixed", &g, &genblock::unmixed_genblock(&g)?, unmixed);
    let depth = genblock::depth_formula(&g)?;
    let dim = oracle::bf_dim(&g)?;
    ck.expect("depth <= dim", &g, depth <= dim, || format!("depth {depth} > dim {dim}"));
    if genblock::cm_status(&g)?.is_yes() {
        ck.eq("CM implies depth = dim", &g, depth, dim);
        ck.eq("CM implies unmixed", &g, true, unmixed);
    }
    Ok(())
}

fn check_block(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let n = rng.gen_range(1..=max_n);
    let g = gen::random_block_graph(rng, n);
    let cm = genblock::cm_status(&g)?;
    ck.verdict("CM = unmixed", &g, &cm, oracle::bf_unmixed(&g)?);
    let depth = genblock::depth_formula(&g)?;
    let dim = oracle::bf_dim(&g)?;
    ck.eq("CM iff depth = dim", &g, cm.is_yes(), depth == dim);
    Ok(())
}

fn random_join(ck: &Checker, rng: &mut ChaCha8Rng, max_n: usize) -> (JoinSpec, Vec<Graph>, Vec<Graph>) {
    let total = rng.gen_range(ck.family.min_n()..=max_n);
    let (left, lparts, right, rparts) = match ck.family {
        Family::JoinConnConn => {
            let n1 = rng.gen_range(1..total);
            let (a, b) = (connected(rng, n1), connected(rng, total - n1));
            (a.clone(), vec![a], b.clone(), vec![b])
        }
        Family::JoinConnDisc => {
            let t = rng.gen_range(1..=total - 2);
            let a = connected(rng, t);
            let (b, parts) = disconnected(rng, total - t);
            if rng.gen_bool(0.5) {
                (a.clone(), vec![a], b, parts)
            } else {
                (b, parts, a.clone(), vec![a])
            }
        }
        _ => {
            let n1 = rng.gen_range(2..=total - 2);
            let (a, ap) = disconnected(rng, n1);
            let (b, bp) = disconnected(rng, total - n1);
            (a, ap, b, bp)
        }
    };
    (JoinSpec::new(left, right).expect("n within bounds"), lparts, rparts)
}

fn check_join(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let (spec, lparts, rparts) = random_join(ck, rng, max_n);
    let g = spec.graph();
    let mut formula = match spec.case() {
        JoinCase::ConnConn => products::cutsets_join_cc(&spec.left, &spec.right)?,
        JoinCase::ConnDisc if lparts.len() == 1 => products::cutsets_join_cd(&spec.left, &rparts)?,
        // the disconnected factor is labeled first; only the generic form applies
        JoinCase::ConnDisc => products::join_cut_sets(&spec)?,
        JoinCase::DiscDisc => products::cutsets_join_dd(&lparts, &rparts)?,
    };
    if ck.mutation == Some(Mutation::JoinCutSets) {
        formula.pop();
    }
    let bf = oracle::bf_cut_sets(&g)?;
    ck.cut_sets("cut sets", &g, &formula, &bf);
    let mut dim = products::dim_join(&spec)?;
    if ck.mutation == Some(Mutation::JoinDim) {
        dim += 1;
    }
    ck.eq("dimension", &g, dim, oracle::bf_dim(&g)?);
    for m in 2..=3 {
        ck.verdict(&format!("unmixed, m = {m}"), &g, &products::unmixed_join(&spec, m)?, oracle_pair(m, &bf));
    }
    if spec.case() == JoinCase::ConnDisc && products::cm_join_cd(&spec)?.is_yes() {
        ck.eq("CM implies unmixed", &g, true, oracle_pair(2, &bf));
    }
    Ok(())
}

fn check_multipartite(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let total = rng.gen_range(1..=max_n);
    let parts = rng.gen_range(1..=total.min(5));
    let sizes = composition(rng, total, parts);
    let g = Graph::complete_multipartite(&sizes)?;
    ck.eq("dimension", &g, products::dim_multipartite(&sizes)?, oracle::bf_dim(&g)?);
    Ok(())
}

fn check_corona(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let n1 = rng.gen_range(1..=max_n / 2);
    let n2 = rng.gen_range(1..=max_n / n1 - 1);
    let (h, fiber) = (connected(rng, n1), connected(rng, n2));
    let g = products::corona(&h, &fiber)?;
    let bf = oracle::bf_cut_sets(&g)?;
    ck.cut_sets("cut sets", &g, &products::cutsets_corona(&h, &fiber)?, &bf);
    ck.eq("dimension", &g, products::dim_corona(&h, &fiber)?, oracle::bf_dim(&g)?);
    for m in 2..=3 {
        ck.verdict(&format!("unmixed, m = {m}"), &g, &products::unmixed_corona(m, &h, &fiber)?, oracle_pair(m, &bf));
    }
    if products::cm_corona(&h, &fiber)?.is_yes() {
        ck.eq("CM implies unmixed", &g, true, oracle_pair(2, &bf));
    }
    Ok(())
}

/// Cones over disconnected graphs: unmixed iff exactly two components,
/// both unmixed.
fn check_cone(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let total = rng.gen_range(2..max_n);
    let (base, parts) = disconnected(rng, total);
    let g = products::cone(&base)?;
    let unmixed = oracle::bf_unmixed(&g)?;
    let spec = JoinSpec::new(Graph::complete(1)?, base)?;
    ck.verdict("unmixed", &g, &products::unmixed_join(&spec, 2)?, unmixed);
    let expected = parts.len() == 2 && parts.iter().all(|h| oracle::bf_unmixed(h).unwrap_or(false));
    ck.eq("unmixed iff two unmixed components", &g, expected, unmixed);
    Ok(())
}

fn check_pair(ck: &mut Checker, rng: &mut ChaCha8Rng, max_n: usize) -> Result<()> {
    let n = rng.gen_range(1..=max_n);
    let g = connected(rng, n);
    let spec = Spectrum::new(&g, DEFAULT_MAX_N)?;
    let bf = oracle::bf_cut_sets(&g)?;
    for m in 2..=5 {
        ck.verdict(&format!("m = {m}"), &g, &spec.pair_unmixed(m)?, oracle_pair(m, &bf));
    }
    Ok(())
}
