//! Bound audits over an encoding and the factorization behind it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::encode::{factor_instance, EncodedStructure, SplendidAnalysis};
use crate::error::{Error, Result};
use crate::factorize::{depth_bound, FactorKind, RecursiveFactorization};
use crate::graph::BitSet;
use crate::nlc::NlcTree;
use crate::semigroup::RamseyPartition;

use super::{canonical_ordering, gaifman, ranks, scol_inf, tree_parents};

/// One audited quantity. Soft bounds are reported but never fail an audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundLine {
    pub name: String,
    pub measured: usize,
    pub limit: usize,
    pub hard: bool,
}

impl BoundLine {
    fn new(name: &str, measured: usize, limit: usize, hard: bool) -> BoundLine {
        BoundLine { name: name.to_string(), measured, limit, hard }
    }

    pub fn ok(&self) -> bool {
        self.measured <= self.limit
    }

    pub fn status(&self) -> &'static str {
        match (self.ok(), self.hard) {
            (true, _) => "pass",
            (false, true) => "fail",
            (false, false) => "warn",
        }
    }
}

/// Landmark, block and alternation maxima over every splendid step.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StepStats {
    pub splendid_factors: usize,
    pub max_blocks: usize,
    pub max_landmarks: usize,
    pub max_lhat: usize,
    pub max_alternation: usize,
    pub max_classes: usize,
    /// Type pairs compared for synchronisation.
    pub sync_checked: usize,
    pub sync_violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundAudit {
    pub k: usize,
    pub h_exact: usize,
    pub h_truncated: bool,
    /// `max(h_exact, 1)`, the value plugged into every bound.
    pub h: usize,
    pub depth: usize,
    pub classes: usize,
    /// Per level: largest `N↑` union inside splendid factors for one class
    /// pair, the same over all pairs, and the largest inside shallow factors.
    pub nup: BTreeMap<usize, (usize, usize, usize)>,
    pub sreach_max: usize,
    pub steps: Option<StepStats>,
    pub lines: Vec<BoundLine>,
}

impl BoundAudit {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.ok() || !l.hard)
    }

    pub fn line(&self, name: &str) -> Option<&BoundLine> {
        self.lines.iter().find(|l| l.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "audit k={} h={} h_exact={} truncated={} depth={} classes={}\n",
            self.k, self.h, self.h_exact, self.h_truncated, self.depth, self.classes
        );
        for (level, (slice, agg, shallow)) in &self.nup {
            writeln!(s, "level {level} nup_slice={slice} nup_aggregate={agg} nup_shallow={shallow}").unwrap();
        }
        if let Some(st) = &self.steps {
            writeln!(
                s,
                "steps splendid={} sync_checked={} sync_violations={}",
                st.splendid_factors,
                st.sync_checked,
                st.sync_violations.len()
            )
            .unwrap();
        }
        let width = self.lines.iter().map(|l| l.name.len()).max().unwrap_or(0);
        for l in &self.lines {
            writeln!(
                s,
                "bound {:width$} measured={} limit={} status={}",
                l.name,
                l.measured,
                l.limit,
                l.status()
            )
            .unwrap();
        }
        s
    }
}

/// Class pair of an `L̂` relation name, `None` for every other relation.
fn slice_of(name: &str) -> Option<(usize, usize)> {
    let mut it = name.split('.');
    if it.next()? != "lhat" {
        return None;
    }
    Some((it.next()?.parse().ok()?, it.next()?.parse().ok()?))
}

/// Audits that only need the encoding: per-level `N↑` unions and strong
/// reachability in the Gaifman graph under the canonical ordering.
pub fn scol_audit(j: &EncodedStructure, h_exact: usize, h_truncated: bool) -> Result<BoundAudit> {
    let k = j.k;
    let h = h_exact.max(1);
    let nodes = j.nodes();
    let n = nodes.len();
    let idx = |id: usize| nodes.binary_search(&id).map_err(|_| Error::corruption(format!("unknown node {id}")));
    let parents = tree_parents(j)?;
    let mut parent = vec![None; n];
    for (&a, &b) in &parents {
        parent[idx(a)?] = Some(idx(b)?);
    }
    // strict ancestors and a bottom-up order
    let mut anc = vec![BitSet::new(n); n];
    let mut depth = vec![0; n];
    for a in 0..n {
        let mut y = parent[a];
        while let Some(p) = y {
            anc[a].insert(p);
            depth[a] += 1;
            if depth[a] > n {
                return Err(Error::corruption("tree relation has a cycle"));
            }
            y = parent[p];
        }
    }
    let mut bottom_up: Vec<usize> = (0..n).collect();
    bottom_up.sort_by_key(|&a| std::cmp::Reverse(depth[a]));

    let classes = j
        .tags
        .iter()
        .filter(|((_, name), _)| name == "gamma")
        .flat_map(|(_, m)| m.values())
        .map(|v| RamseyPartition::parse_classes(v).map(|c| c.len()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(1);

    let mut nup = BTreeMap::new();
    for level in 2..=j.levels {
        let kind_of = |a: usize| -> Option<FactorKind> {
            let r = *j.rooti.get(&level)?.get(&nodes[a])?;
            j.tag(level, "kind", r)?.parse().ok()
        };
        // up-sets: base relations, then one per class pair
        let mut base = vec![BitSet::new(n); n];
        let mut slices: BTreeMap<(usize, usize), Vec<BitSet>> = BTreeMap::new();
        for ((l, name), map) in &j.funs {
            if *l != level {
                continue;
            }
            let target = match slice_of(name) {
                Some(s) => slices.entry(s).or_insert_with(|| vec![BitSet::new(n); n]),
                None => &mut base,
            };
            for (&a, &b) in map {
                let (a, b) = (idx(a)?, idx(b)?);
                if a == b {
                    continue;
                }
                if anc[a].contains(b) {
                    target[a].insert(b);
                } else if anc[b].contains(a) {
                    target[b].insert(a);
                } else {
                    return Err(Error::corruption(format!(
                        "level {level} relation {name} joins incomparable nodes {} and {}",
                        nodes[a], nodes[b]
                    )));
                }
            }
        }
        let accumulate = |up: &[BitSet]| -> Vec<BitSet> {
            let mut acc = up.to_vec();
            for &a in &bottom_up {
                if let Some(p) = parent[a] {
                    let merged = acc[p].union(&acc[a]);
                    acc[p] = merged;
                }
            }
            acc
        };
        let all: Vec<BitSet> = (0..n)
            .map(|a| slices.values().fold(base[a].clone(), |s, sl| s.union(&sl[a])))
            .collect();
        let acc_base = accumulate(&base);
        let acc_all = accumulate(&all);
        let acc_slices: Vec<Vec<BitSet>> = slices.values().map(|sl| accumulate(sl)).collect();
        let (mut m_slice, mut m_agg, mut m_shallow) = (0, 0, 0);
        for a in 0..n {
            let count = |s: &BitSet| s.intersect(&anc[a]).len();
            match kind_of(a) {
                Some(FactorKind::Splendid) => {
                    let per = acc_slices.iter().map(|s| count(&acc_base[a].union(&s[a]))).max();
                    m_slice = m_slice.max(per.unwrap_or_else(|| count(&acc_base[a])));
                    m_agg = m_agg.max(count(&acc_all[a]));
                }
                Some(FactorKind::Shallow) => m_shallow = m_shallow.max(count(&acc_all[a])),
                _ => {}
            }
        }
        nup.insert(level, (m_slice, m_agg, m_shallow));
    }

    let g = gaifman(j)?;
    let order = canonical_ordering(j, &g)?;
    let sreach_max = scol_inf(&g.graph, &ranks(&order));

    let ell = j.levels.max(1);
    let slice_limit = 836 * h + 2 * k + 4;
    let agg_limit = classes * classes * 836 * h + 2 * k + 4;
    let mut lines = vec![BoundLine::new("depth", j.levels, depth_bound(k), true)];
    let worst = |f: fn(&(usize, usize, usize)) -> usize| nup.values().map(f).max().unwrap_or(0);
    lines.push(BoundLine::new("nup_splendid_slice", worst(|v| v.0), slice_limit, true));
    lines.push(BoundLine::new("nup_splendid_aggregate", worst(|v| v.1), agg_limit, true));
    lines.push(BoundLine::new("nup_shallow", worst(|v| v.2), 2, true));
    lines.push(BoundLine::new("sreach", sreach_max, ell * agg_limit + 1, true));
    lines.push(BoundLine::new("sreach_literal", sreach_max, ell * slice_limit + 1, false));
    Ok(BoundAudit { k, h_exact, h_truncated, h, depth: j.levels, classes, nup, sreach_max, steps: None, lines })
}

/// Recomputes blocks, landmarks and alternations of every splendid step.
/// Type synchronisation is checked exhaustively on steps with at most
/// `sync_parts` parts.
pub fn step_stats(t: &NlcTree, rf: &RecursiveFactorization, sync_parts: usize) -> Result<StepStats> {
    let mut st = StepStats::default();
    for f in rf.factors.iter().filter(|f| f.kind == FactorKind::Splendid) {
        let (sub, p) = factor_instance(t, rf, f.id)?;
        let an = SplendidAnalysis::new(&sub, &p)?;
        st.splendid_factors += 1;
        let nc = an.class_count();
        st.max_classes = st.max_classes.max(nc);
        let y = &an.quotient().tree;
        for x in 0..p.len() {
            for g0 in 0..nc {
                for g1 in 0..nc {
                    st.max_blocks = st.max_blocks.max(an.blocks(x, g0, g1).len());
                    let lm = an.landmarks(x, g0, g1);
                    st.max_landmarks = st.max_landmarks.max(lm.l.len());
                    st.max_lhat = st.max_lhat.max(lm.lhat.len());
                    for chain in an.alternations(x, g0, g1) {
                        st.max_alternation = st.max_alternation.max(chain.len() / 2);
                    }
                }
            }
        }
        if p.len() > sync_parts {
            continue;
        }
        for x0 in 0..p.len() {
            for x1 in x0 + 1..p.len() {
                let z = y.lca(x0, x1)?;
                let shared = y.depth(z).saturating_sub(1);
                for g0 in 0..nc {
                    for g1 in 0..nc {
                        let (t0, t1) = (an.types(x0, g0, g1), an.types(x1, g0, g1));
                        st.sync_checked += shared;
                        if t0[..shared] != t1[..shared] {
                            st.sync_violations.push(format!(
                                "factor {} parts {x0},{x1} classes {g0},{g1}: types differ on P(meet)",
                                f.id
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(st)
}

/// Encoding audits plus the per-step quantities, all at the given `h`.
pub fn full_audit(
    t: &NlcTree,
    rf: &RecursiveFactorization,
    j: &EncodedStructure,
    h_exact: usize,
    h_truncated: bool,
    sync_parts: usize,
) -> Result<BoundAudit> {
    let mut audit = scol_audit(j, h_exact, h_truncated)?;
    let st = step_stats(t, rf, sync_parts)?;
    let h = audit.h;
    let more = [
        BoundLine::new("blocks", st.max_blocks, 60 * h + 9, true),
        BoundLine::new("landmarks", st.max_landmarks, 209 * h, true),
        BoundLine::new("lhat", st.max_lhat, 836 * h, true),
        BoundLine::new("alternation", st.max_alternation, 3 * h, true),
        BoundLine::new("sync_type", st.sync_violations.len(), 0, true),
    ];
    audit.lines.splice(1..1, more);
    audit.steps = Some(st);
    Ok(audit)
}
