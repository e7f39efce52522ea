//! The `bei analyze` report.

use std::fmt::{self, Write as _};

use bei_core::genblock;
use bei_core::products::{self, JoinSpec};
use bei_core::spectrum::Spectrum;
use bei_core::{Graph, Result, Verdict};
use serde::Serialize;

/// Structural flags. For disconnected graphs `block` and
/// `generalized_block` describe every component.
#[derive(Serialize)]
pub struct Class {
    pub connected: bool,
    pub chordal: bool,
    pub complete: bool,
    pub block: bool,
    pub generalized_block: bool,
}

#[derive(Serialize)]
pub struct Prime {
    #[serde(rename = "T")]
    pub set: Vec<usize>,
    pub c: usize,
    pub height: usize,
}

#[derive(Serialize)]
pub struct Primes {
    pub count: usize,
    /// `None` when elided.
    pub sets: Option<Vec<Prime>>,
}

#[derive(Serialize)]
pub struct Report {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub class: Class,
    pub primes: Primes,
    pub height: usize,
    pub dim: usize,
    pub depth: Option<usize>,
    pub unmixed: Verdict,
    pub cm: Verdict,
}

pub fn analyze(g: &Graph, max_n: usize, elide_above: Option<usize>) -> Result<Report> {
    let spec = Spectrum::new(g, max_n)?;
    let genblock = g.n() > 0 && genblock::is_generalized_block(g);
    let block = genblock && genblock::block_profile(g)?.all_cuts_singletons();
    let n = g.n();
    let count = spec.cut_sets().len();
    let sets = match elide_above {
        Some(limit) if count > limit => None,
        _ => Some(
            spec.cut_sets()
                .iter()
                .map(|c| Prime { set: c.set.to_one_based(), c: c.components, height: c.height(n) })
                .collect(),
        ),
    };
    let unmixed = spec.unmixed()?;
    Ok(Report {
        n,
        edges: g.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        class: Class {
            connected: g.is_connected(),
            chordal: g.is_chordal(),
            complete: g.n() > 0 && g.is_complete(),
            block,
            generalized_block: genblock,
        },
        primes: Primes { count, sets },
        height: spec.height(),
        dim: spec.dim(),
        depth: if genblock { Some(genblock::depth_formula(g)?) } else { None },
        cm: cm_verdict(g, &unmixed, max_n)?,
        unmixed,
    })
}

/// CM from the characterized classes, most specific first.
fn cm_verdict(g: &Graph, unmixed: &Verdict, max_n: usize) -> Result<Verdict> {
    if g.n() > 0 && g.is_complete() {
        return Ok(Verdict::yes("complete graph"));
    }
    if unmixed.is_no() {
        let mut v = Verdict::no(format!("CM implies unmixed; {}", unmixed.rule));
        v.witness = unmixed.witness;
        return Ok(v);
    }
    if genblock::is_generalized_block(g) {
        return genblock::cm_status(g);
    }
    if !g.is_connected() {
        let mut all_yes = true;
        for comp in g.connected_components() {
            let sub = g.induced_subgraph(comp);
            let u = Spectrum::new(&sub.graph, max_n)?.unmixed()?;
            let v = cm_verdict(&sub.graph, &u, max_n)?;
            if v.is_no() {
                let mut out = Verdict::no("CM iff every component is CM");
                out.witness = v.witness.map(|w| sub.lift(w));
                return Ok(out);
            }
            all_yes &= v.is_yes();
        }
        return Ok(if all_yes {
            Verdict::yes("CM iff every component is CM")
        } else {
            Verdict::unknown("CM of some component not decided")
        });
    }
    if let Some(parts) = products::join_decompose(g) {
        for part in parts {
            let rest = g.vertices().difference(part);
            let left = g.induced_subgraph(rest);
            let right = g.induced_subgraph(part);
            if left.graph.is_connected() && !right.graph.is_connected() {
                let v = products::cm_join_cd(&JoinSpec::new(left.graph, right.graph)?)?;
                if !v.is_unknown() {
                    // witnesses refer to the join's own labeling; drop them
                    return Ok(Verdict { witness: None, ..v });
                }
            }
        }
    }
    Ok(Verdict::unknown("not in a class with a CM characterization"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        let mut edges = String::new();
        for (i, [u, v]) in self.edges.iter().enumerate() {
            if i > 0 {
                edges.push(' ');
            }
            let _ = write!(edges, "{u}-{v}");
        }
        writeln!(f, "edges ({}): {edges}", self.edges.len())?;
        let c = &self.class;
        writeln!(
            f,
            "class: connected={} chordal={} complete={} block={} generalized-block={}",
            yes_no(c.connected),
            yes_no(c.chordal),
            yes_no(c.complete),
            yes_no(c.block),
            yes_no(c.generalized_block)
        )?;
        match &self.primes.sets {
            Some(sets) => {
                writeln!(f, "minimal primes ({}):", self.primes.count)?;
                for p in sets {
                    let members: Vec<String> = p.set.iter().map(|v| v.to_string()).collect();
                    writeln!(f, "  T={{{}}} c={} height={}", members.join(","), p.c, p.height)?;
                }
            }
            None => writeln!(f, "minimal primes ({}): elided", self.primes.count)?,
        }
        writeln!(f, "height: {}", self.height)?;
        writeln!(f, "dim: {}", self.dim)?;
        match self.depth {
            Some(d) => writeln!(f, "depth: {d}")?,
            None => writeln!(f, "depth: n/a (not a generalized block graph)")?,
        }
        writeln!(f, "unmixed: {}", self.unmixed)?;
        writeln!(f, "cm: {}", self.cm)
    }
}
