//! End-to-end driver: factorize, encode, decode, compare and audit.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use sha2::{Digest, Sha256};

use crate::decode::decode_full;
use crate::encode::{encode_recursive, EncodedStructure};
use crate::error::{Error, Result};
use crate::factorize::{recursive_factorize, verify_hierarchy, HierarchyAudit};
use crate::gen::{brute_force_nlc, default_corpus, gen_halfgraph, gen_random};
use crate::graph::Graph;
use crate::nlc::NlcTree;
use crate::verify::{chi_upper, clique_number, full_audit, ladder_index, BoundAudit};

/// Largest half-graph order searched for; the audits use the exact value
/// below this cap.
pub const LADDER_CAP: usize = 8;

/// Splendid steps with at most this many parts get the exhaustive type
/// synchronisation check.
pub const SYNC_PARTS: usize = 15;

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub digest: String,
    pub encoding_digest: String,
    pub k: usize,
    pub nodes: usize,
    pub vertices: usize,
    pub edges: usize,
    pub hierarchy: HierarchyAudit,
    /// Vertex pairs on which the decoded graph differs from the generated one.
    pub mismatches: usize,
    pub h_exact: usize,
    pub h_truncated: bool,
    pub audit: BoundAudit,
    /// `None` when the graph is too large for the exact clique search.
    pub omega: Option<usize>,
    pub chi_upper: usize,
    pub timings: Vec<(&'static str, Duration)>,
}

impl PipelineReport {
    pub fn levels(&self) -> usize {
        self.hierarchy.depth
    }

    pub fn roundtrip_ok(&self) -> bool {
        self.mismatches == 0
    }

    pub fn passed(&self) -> bool {
        self.roundtrip_ok() && self.hierarchy.within_bound() && self.audit.passed()
    }

    /// Deterministic text; timings are appended only on request.
    pub fn to_text(&self, timings: bool) -> String {
        let mut s = String::new();
        writeln!(s, "instance sha256={} k={} nodes={} vertices={} edges={}", self.digest, self.k, self.nodes, self.vertices, self.edges).unwrap();
        writeln!(
            s,
            "hierarchy levels={} bound={} per_level={:?} splendid={} shallow={}",
            self.hierarchy.depth,
            self.hierarchy.depth_bound,
            self.hierarchy.factors_per_level,
            self.hierarchy.splendid_steps,
            self.hierarchy.shallow_steps
        )
        .unwrap();
        writeln!(s, "encoding sha256={}", self.encoding_digest).unwrap();
        writeln!(s, "roundtrip status={} mismatches={}", if self.roundtrip_ok() { "pass" } else { "fail" }, self.mismatches).unwrap();
        writeln!(s, "ladder h={} cap={} truncated={}", self.h_exact, LADDER_CAP, self.h_truncated).unwrap();
        let omega = self.omega.map_or("-".to_string(), |w| w.to_string());
        writeln!(s, "chi omega={omega} chi_upper={}", self.chi_upper).unwrap();
        s.push_str(&self.audit.to_text());
        writeln!(s, "pipeline status={}", if self.passed() { "pass" } else { "fail" }).unwrap();
        if timings {
            for (stage, d) in &self.timings {
                writeln!(s, "time {stage} {:.3}ms", d.as_secs_f64() * 1e3).unwrap();
            }
        }
        s
    }
}

struct Clock {
    last: Instant,
    timings: Vec<(&'static str, Duration)>,
}

impl Clock {
    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        self.timings.push((stage, now - self.last));
        self.last = now;
    }
}

fn mismatches(a: &Graph, b: &Graph) -> usize {
    if a.len() != b.len() {
        return usize::MAX;
    }
    (0..a.len()).map(|u| a.neighbors(u).difference(b.neighbors(u)).len() + b.neighbors(u).difference(a.neighbors(u)).len()).sum::<usize>() / 2
}

/// Runs every stage on `t` and also returns the encoding.
pub fn run_pipeline_with_encoding(t: &NlcTree) -> Result<(PipelineReport, EncodedStructure)> {
    let mut clock = Clock { last: Instant::now(), timings: Vec::new() };
    let digest = sha256_hex(&t.to_text());
    let rf = recursive_factorize(t).map_err(|e| e.context("factorize"))?;
    clock.lap("factorize");
    let hierarchy = verify_hierarchy(t, &rf).map_err(|e| e.context("verify_hierarchy"))?;
    clock.lap("verify_hierarchy");
    let j = encode_recursive(t, &rf).map_err(|e| e.context("encode"))?;
    let encoding_digest = sha256_hex(&j.to_text());
    clock.lap("encode");
    let decoded = decode_full(&j).map_err(|e| e.context("decode"))?;
    clock.lap("decode");
    let g = t.generate_graph();
    let mismatches = mismatches(&g, &decoded);
    clock.lap("compare");
    let h_exact = ladder_index(&g, LADDER_CAP);
    let h_truncated = h_exact == LADDER_CAP;
    clock.lap("ladder");
    let audit = full_audit(t, &rf, &j, h_exact, h_truncated, SYNC_PARTS).map_err(|e| e.context("audit"))?;
    clock.lap("audit");
    let omega = match clique_number(&g) {
        Ok(w) => Some(w),
        Err(Error::Limit(_)) => None,
        Err(e) => return Err(e.context("clique")),
    };
    let chi = chi_upper(&g);
    clock.lap("chi");
    let report = PipelineReport {
        digest,
        encoding_digest,
        k: t.k(),
        nodes: t.node_count(),
        vertices: t.vertex_count(),
        edges: g.edge_count(),
        hierarchy,
        mismatches,
        h_exact,
        h_truncated,
        audit,
        omega,
        chi_upper: chi,
        timings: clock.timings,
    };
    Ok((report, j))
}

pub fn run_pipeline(t: &NlcTree) -> Result<PipelineReport> {
    run_pipeline_with_encoding(t).map(|(r, _)| r)
}

/// Small graphs handed to the brute-force NLC search for the corpus.
pub fn tiny_graphs() -> Vec<(&'static str, Graph, usize)> {
    let g = |n: usize, e: &[(usize, usize)]| Graph::from_edges(n, e).unwrap();
    vec![
        ("p3", g(3, &[(0, 1), (1, 2)]), 2),
        ("p4", g(4, &[(0, 1), (1, 2), (2, 3)]), 2),
        ("triangle", Graph::complete(3), 1),
        ("c4", Graph::cycle(4), 2),
        ("claw", g(4, &[(0, 1), (0, 2), (0, 3)]), 2),
        ("paw", g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]), 2),
        ("bull", g(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]), 3),
    ]
}

/// One corpus entry: where it came from and what the pipeline made of it.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub report: PipelineReport,
}

impl CorpusEntry {
    pub fn line(&self) -> String {
        let r = &self.report;
        format!(
            "instance {} sha256={} levels={} roundtrip={} h={}{} audit={} omega={} chi={}",
            self.name,
            &r.digest[..16],
            r.levels(),
            if r.roundtrip_ok() { "pass" } else { "fail" },
            r.h_exact,
            if r.h_truncated { "+" } else { "" },
            if r.audit.passed() && r.hierarchy.within_bound() { "pass" } else { "fail" },
            r.omega.map_or("-".to_string(), |w| w.to_string()),
            r.chi_upper
        )
    }
}

/// The instances of a corpus run: `n` seeded random trees, the half-graph
/// family of orders 1 to 5 and the brute-forced tiny graphs.
pub fn corpus_instances(n: usize, seed: u64) -> Result<Vec<(String, NlcTree)>> {
    let mut out = Vec::new();
    for cfg in default_corpus(n, seed) {
        out.push((format!("seed{}", cfg.seed), gen_random(&cfg)?));
    }
    for m in 1..=5 {
        out.push((format!("halfgraph{m}"), gen_halfgraph(m, 2)?));
    }
    for (name, g, k) in tiny_graphs() {
        let t = brute_force_nlc(&g, k)?.ok_or_else(|| Error::invariant(format!("no NLC-tree found for {name}")))?;
        out.push((format!("tiny-{name}"), t));
    }
    Ok(out)
}

pub fn run_corpus(n: usize, seed: u64) -> Result<Vec<CorpusEntry>> {
    corpus_instances(n, seed)?
        .into_iter()
        .map(|(name, t)| {
            let report = run_pipeline(&t).map_err(|e| e.context(&name))?;
            Ok(CorpusEntry { name, report })
        })
        .collect()
}

/// Corpus summary lines following the per-instance lines.
pub fn corpus_text(entries: &[CorpusEntry]) -> String {
    let mut s = String::new();
    for e in entries {
        s.push_str(&e.line());
        s.push('\n');
    }
    let fails = entries.iter().filter(|e| !e.report.passed()).count();
    let max_depth = entries.iter().map(|e| e.report.levels()).max().unwrap_or(0);
    writeln!(s, "corpus instances={} failed={} max_levels={}", entries.len(), fails, max_depth).unwrap();
    s
}

