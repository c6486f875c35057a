//! Recursive factorization of NLC-trees into splendid and shallow steps.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::nlc::{quotient, Factorization, NlcTree, QuotientTree};
use crate::semigroup::{is_forward_ramsey, SkFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Leaf,
    Splendid,
    Shallow,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::Leaf => "leaf",
            FactorKind::Splendid => "splendid",
            FactorKind::Shallow => "shallow",
        })
    }
}

impl std::str::FromStr for FactorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leaf" => Ok(FactorKind::Leaf),
            "splendid" => Ok(FactorKind::Splendid),
            "shallow" => Ok(FactorKind::Shallow),
            _ => Err(Error::input(format!("unknown factor kind `{s}`"))),
        }
    }
}

pub fn is_splendid(q: &QuotientTree) -> bool {
    is_forward_ramsey(q.labels())
}

pub fn is_shallow(q: &QuotientTree) -> bool {
    q.height() <= 1
}

/// All set partitions of `[k]` as canonical kernel labellings.
fn kernels(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max {
            cur[i] = l;
            rec(i + 1, if l == max { max + 1 } else { max }, cur, out);
        }
    }
    if k > 0 {
        rec(1, 1, &mut cur, &mut out);
    }
    out
}

/// Greedy top-down cut: a node starts a new part as soon as the product of
/// labels from the current part's top down to it is idempotent with kernel `kernel`.
fn greedy_cut(t: &NlcTree, kernel: &[usize]) -> Option<Vec<usize>> {
    let tree = t.tree();
    let n = tree.len();
    let mut acc: Vec<SkFun> = vec![SkFun::identity(t.k()); n];
    let mut label = vec![0usize; n];
    let mut cuts = 0;
    for &x in tree.preorder() {
        let Some(p) = tree.parent(x) else {
            label[x] = x;
            continue;
        };
        let a = acc[p].after(t.rho(x).unwrap());
        if a.is_idempotent() && a.kernel() == kernel {
            label[x] = x;
            cuts += 1;
        } else {
            label[x] = label[p];
            acc[x] = a;
        }
    }
    (cuts > 0).then_some(label)
}

fn max_part_height(t: &NlcTree, p: &Factorization) -> usize {
    let tree = t.tree();
    (0..tree.len()).map(|x| tree.depth(x) - tree.depth(p.top(p.part_of(x)))).max().unwrap_or(0)
}

/// One factorization step. The quotient of the result is splendid or shallow
/// and every part is strictly smaller than the tree.
pub fn factorize_step(t: &NlcTree) -> Result<(Factorization, FactorKind)> {
    let tree = t.tree();
    if tree.len() < 2 {
        return Err(Error::input("cannot factorize a single-node tree"));
    }
    let h = tree.height();
    if h <= 1 {
        return Ok((Factorization::singletons(tree), FactorKind::Shallow));
    }
    let cut_depth = (h - 1) / 2;
    let halving: Vec<usize> = (0..tree.len())
        .map(|x| if tree.depth(x) <= cut_depth { tree.root() } else { tree.ancestor_at_depth(x, cut_depth + 1) })
        .collect();
    let mut best = Factorization::from_labels(tree, &halving)?;
    let mut best_kind = FactorKind::Shallow;
    let mut best_h = max_part_height(t, &best);
    for kernel in kernels(t.k()) {
        if let Some(labels) = greedy_cut(t, &kernel) {
            let p = Factorization::from_labels(tree, &labels)?;
            let ph = max_part_height(t, &p);
            if ph <= best_h && (best_kind == FactorKind::Shallow || ph < best_h) {
                best = p;
                best_kind = FactorKind::Splendid;
                best_h = ph;
            }
        }
    }
    Ok((best, best_kind))
}

/// One factor of the hierarchy. Node indices refer to the factorized tree.
#[derive(Clone, Debug)]
pub struct Factor {
    pub id: usize,
    pub level: usize,
    /// Sorted node indices.
    pub nodes: Vec<usize>,
    pub top: usize,
    pub kind: FactorKind,
    pub parent: Option<usize>,
    /// Child factor ids, ordered by top.
    pub children: Vec<usize>,
}

/// A hierarchy of factors. Factor 0 is the whole tree at level `levels`; a
/// single-node factor created at level `j` stands for itself on levels `j..=1`.
#[derive(Clone, Debug)]
pub struct RecursiveFactorization {
    pub levels: usize,
    pub factors: Vec<Factor>,
}

pub fn recursive_factorize(t: &NlcTree) -> Result<RecursiveFactorization> {
    let mut factors = vec![Factor {
        id: 0,
        level: 0,
        nodes: (0..t.node_count()).collect(),
        top: t.tree().root(),
        kind: FactorKind::Leaf,
        parent: None,
        children: Vec::new(),
    }];
    let mut depth = vec![0usize];
    let mut i = 0;
    while i < factors.len() {
        if factors[i].nodes.len() > 1 {
            let sub = t.induced_factor(&factors[i].nodes)?;
            let (p, kind) = factorize_step(&sub)?;
            factors[i].kind = kind;
            for j in 0..p.len() {
                let mut nodes: Vec<usize> =
                    p.part(j).iter().map(|&x| t.node_index(sub.node_id(x)).unwrap()).collect();
                nodes.sort_unstable();
                let id = factors.len();
                factors.push(Factor {
                    id,
                    level: 0,
                    nodes,
                    top: t.node_index(sub.node_id(p.top(j))).unwrap(),
                    kind: FactorKind::Leaf,
                    parent: Some(i),
                    children: Vec::new(),
                });
                depth.push(depth[i] + 1);
                factors[i].children.push(id);
            }
        }
        i += 1;
    }
    let levels = 1 + depth.iter().copied().max().unwrap();
    for f in factors.iter_mut() {
        f.level = levels - depth[f.id];
    }
    Ok(RecursiveFactorization { levels, factors })
}

impl RecursiveFactorization {
    /// Two levels: the whole tree of `n` nodes as one factor of `kind`, split
    /// straight into singletons. Handy for driving one encoding step in tests.
    pub fn single_step(n: usize, kind: FactorKind) -> RecursiveFactorization {
        let mut factors = vec![Factor {
            id: 0,
            level: 2,
            nodes: (0..n).collect(),
            top: 0,
            kind,
            parent: None,
            children: (1..=n).collect(),
        }];
        for x in 0..n {
            factors.push(Factor {
                id: x + 1,
                level: 1,
                nodes: vec![x],
                top: x,
                kind: FactorKind::Leaf,
                parent: Some(0),
                children: vec![],
            });
        }
        RecursiveFactorization { levels: 2, factors }
    }

    pub fn root(&self) -> &Factor {
        &self.factors[0]
    }

    /// Whether factor `f` is a member of `Q_level`.
    pub fn in_level(&self, f: &Factor, level: usize) -> bool {
        if f.kind == FactorKind::Leaf {
            f.level >= level
        } else {
            f.level == level
        }
    }

    /// Factor ids forming `Q_level`, ordered by top.
    pub fn level_factors(&self, level: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.factors.iter().filter(|f| self.in_level(f, level)).map(|f| f.id).collect();
        ids.sort_by_key(|&id| self.factors[id].top);
        ids
    }

    /// For each node, the id of the `Q_level` factor containing it.
    pub fn factor_of_nodes(&self, level: usize, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for id in self.level_factors(level) {
            for &x in &self.factors[id].nodes {
                out[x] = id;
            }
        }
        out
    }

    /// One `factor ...` line per factor, in id order; node ids are global.
    pub fn dump(&self, t: &NlcTree) -> String {
        let mut s = String::new();
        for f in &self.factors {
            let parent = f.parent.map_or("-".to_string(), |p| p.to_string());
            writeln!(
                s,
                "factor {} level={} top={} kind={} parent={parent} nodes={}",
                f.id,
                f.level,
                t.node_id(f.top),
                f.kind,
                f.nodes.len()
            )
            .unwrap();
        }
        s
    }
}

/// Result of an independent re-check of a hierarchy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HierarchyAudit {
    pub depth: usize,
    pub depth_bound: usize,
    pub factors_per_level: Vec<usize>,
    pub splendid_steps: usize,
    pub shallow_steps: usize,
}

impl HierarchyAudit {
    pub fn within_bound(&self) -> bool {
        self.depth <= self.depth_bound
    }
}

/// `3·k^k`, saturating.
pub fn depth_bound(k: usize) -> usize {
    (0..k).fold(3usize, |acc, _| acc.saturating_mul(k))
}

/// Re-checks every hierarchy contract from the factor records alone.
pub fn verify_hierarchy(t: &NlcTree, rf: &RecursiveFactorization) -> Result<HierarchyAudit> {
    let n = t.node_count();
    let fail = |id: usize, msg: String| Err(Error::invariant(format!("factor {id}: {msg}")));
    if rf.factors.is_empty() || rf.levels == 0 {
        return Err(Error::invariant("empty hierarchy"));
    }
    let mut splendid_steps = 0;
    let mut shallow_steps = 0;
    for f in &rf.factors {
        if f.id >= rf.factors.len() || rf.factors[f.id].id != f.id {
            return fail(f.id, "id does not match its position".into());
        }
        if f.nodes.is_empty() || !f.nodes.contains(&f.top) {
            return fail(f.id, "top is not one of its nodes".into());
        }
        if f.level == 0 || f.level > rf.levels {
            return fail(f.id, format!("level {} outside 1..={}", f.level, rf.levels));
        }
        if let Some(p) = f.parent {
            let pf = &rf.factors[p];
            if pf.level != f.level + 1 || !pf.children.contains(&f.id) {
                return fail(f.id, "parent link is inconsistent".into());
            }
        } else if f.id != 0 || f.level != rf.levels {
            return fail(f.id, "only the root factor may lack a parent".into());
        }
        if f.kind == FactorKind::Leaf {
            if f.nodes.len() != 1 || !f.children.is_empty() {
                return fail(f.id, "leaf factor must be a single node without children".into());
            }
            continue;
        }
        if f.level < 2 {
            return fail(f.id, "non-leaf factor on level 1".into());
        }
        let sub = t.induced_factor(&f.nodes)?;
        let mut labels = vec![usize::MAX; sub.node_count()];
        for &c in &f.children {
            let cf = &rf.factors[c];
            if cf.nodes.len() >= f.nodes.len() {
                return fail(f.id, format!("child {c} is not strictly smaller"));
            }
            for &x in &cf.nodes {
                let Some(lx) = f.nodes.binary_search(&x).ok() else {
                    return fail(f.id, format!("child {c} leaves the factor"));
                };
                if labels[lx] != usize::MAX {
                    return fail(f.id, format!("children overlap at node {}", t.node_id(x)));
                }
                labels[lx] = c;
            }
        }
        if labels.contains(&usize::MAX) {
            return fail(f.id, "children do not cover the factor".into());
        }
        let p = Factorization::from_labels(sub.tree(), &labels)
            .map_err(|e| Error::invariant(format!("factor {}: children are not subtrees: {e}", f.id)))?;
        let q = quotient(&sub, &p)?;
        let ok = match f.kind {
            FactorKind::Splendid => is_splendid(&q),
            FactorKind::Shallow => is_shallow(&q),
            FactorKind::Leaf => unreachable!(),
        };
        if !ok {
            return fail(f.id, format!("quotient is not {}", f.kind));
        }
        match f.kind {
            FactorKind::Splendid => splendid_steps += 1,
            _ => shallow_steps += 1,
        }
    }
    let mut factors_per_level = Vec::with_capacity(rf.levels);
    let mut prev: Option<Vec<usize>> = None;
    for level in 1..=rf.levels {
        let ids = rf.level_factors(level);
        let map = rf.factor_of_nodes(level, n);
        let covered: usize = ids.iter().map(|&id| rf.factors[id].nodes.len()).sum();
        if covered != n || map.contains(&usize::MAX) {
            return Err(Error::invariant(format!("Q_{level} is not a partition of the nodes")));
        }
        Factorization::from_labels(t.tree(), &map)
            .map_err(|e| Error::invariant(format!("Q_{level} has a disconnected part: {e}")))?;
        if level == 1 && ids.len() != n {
            return Err(Error::invariant("Q_1 is not the all-singletons partition"));
        }
        if level == rf.levels && ids.len() != 1 {
            return Err(Error::invariant(format!("Q_{level} is not the whole tree")));
        }
        if let Some(prev) = &prev {
            // each part of the lower level sits inside one part above
            let mut up = std::collections::BTreeMap::new();
            for x in 0..n {
                if *up.entry(prev[x]).or_insert(map[x]) != map[x] {
                    return Err(Error::invariant(format!("Q_{} does not refine Q_{level}", level - 1)));
                }
            }
        }
        factors_per_level.push(ids.len());
        prev = Some(map);
    }
    Ok(HierarchyAudit {
        depth: rf.levels,
        depth_bound: depth_bound(t.k()),
        factors_per_level,
        splendid_steps,
        shallow_steps,
    })
}
