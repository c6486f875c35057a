//! Construction of the encoding structure from a factorized NLC-tree.

pub mod analysis;
pub mod structure;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::factorize::{is_shallow, FactorKind, RecursiveFactorization};
use crate::nlc::{quotient, Factorization, NlcTree};

pub use analysis::{Block, BlockFlags, Landmarks, PairType, SplendidAnalysis, Sym};
pub use structure::EncodedStructure;

/// The per-factor structure `H` of one factorization step, in global node ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorEncoding {
    pub funs: BTreeMap<String, BTreeMap<usize, usize>>,
    pub tags: BTreeMap<String, BTreeMap<usize, String>>,
}

impl FactorEncoding {
    fn fun(&mut self, name: impl Into<String>, from: usize, to: usize) {
        self.funs.entry(name.into()).or_default().insert(from, to);
    }

    fn tag(&mut self, name: impl Into<String>, node: usize, value: impl ToString) {
        self.tags.entry(name.into()).or_default().insert(node, value.to_string());
    }

    /// Entries shared by both step kinds: tree parent, edge labels, part tops
    /// and the recolouring from each node up to its part top.
    fn base(t: &NlcTree, p: &Factorization) -> Result<FactorEncoding> {
        let mut enc = FactorEncoding::default();
        let tree = t.tree();
        for a in 0..t.node_count() {
            let id = t.node_id(a);
            if let Some(b) = tree.parent(a) {
                enc.fun("tparent", id, t.node_id(b));
                enc.tag("rho", id, t.rho(a).unwrap());
            }
            let top = p.top(p.part_of(a));
            enc.fun("top", id, t.node_id(top));
            enc.tag("rtop", id, t.path_rho(a, top)?);
        }
        Ok(enc)
    }
}

/// Role letters of an `L̂` entry: `q` in `Q(x)`, `t` block top, `n` first
/// `−`/`±` node of a block, `p` first `+`/`±` node, `x` none of these.
fn role_letters(y: usize, lm: &Landmarks, blocks: &[Block]) -> String {
    let mut s = String::new();
    if lm.q.contains(&y) {
        s.push('q');
    }
    if blocks.iter().any(|b| b.top() == y) {
        s.push('t');
    }
    if blocks.iter().any(|b| b.minus_marker == Some(y)) {
        s.push('n');
    }
    if blocks.iter().any(|b| b.plus_marker == Some(y)) {
        s.push('p');
    }
    if s.is_empty() {
        s.push('x');
    }
    s
}

pub fn encode_splendid(t: &NlcTree, p: &Factorization) -> Result<FactorEncoding> {
    let an = SplendidAnalysis::new(t, p)?;
    let mut enc = FactorEncoding::base(t, p)?;
    let q = an.quotient();
    let y = &q.tree;
    let id = |x: usize| t.node_id(p.top(x));
    let nc = an.class_count();
    for x in 0..p.len() {
        if let Some(px) = y.parent(x) {
            enc.fun("yparent", id(x), id(px));
            enc.tag("varrho", id(x), q.varrho[x].as_ref().unwrap());
        }
        for c in 0..nc {
            if let Some(g) = an.g(x, c) {
                enc.fun(format!("g.{c}"), id(x), id(g));
            }
            if let Some(gh) = an.ghat(x, c) {
                enc.fun(format!("ghat.{c}"), id(x), id(gh));
                enc.tag(format!("gpath.{c}"), id(x), an.varrho_path(x, gh));
            }
            if let Some(h) = an.h(x, c) {
                enc.fun(format!("h.{c}"), id(x), id(h));
            }
        }
        for g0 in 0..nc {
            for g1 in 0..nc {
                let blocks = an.blocks(x, g0, g1);
                let lm = an.landmarks(x, g0, g1);
                for (j, &z) in lm.lhat.iter().enumerate() {
                    enc.fun(format!("lhat.{g0}.{g1}.{j}"), id(x), id(z));
                    enc.tag(format!("lpath.{g0}.{g1}.{j}"), id(x), an.varrho_path(x, z));
                    let block = blocks.iter().find(|b| b.top() == z).map_or("-".to_string(), |b| b.flags.to_letters());
                    enc.tag(format!("lblock.{g0}.{g1}.{j}"), id(x), block);
                    enc.tag(format!("lmark.{g0}.{g1}.{j}"), id(x), role_letters(z, &lm, &blocks));
                }
            }
        }
    }
    let root = t.node_id(t.tree().root());
    enc.tag("kind", root, FactorKind::Splendid);
    enc.tag("gamma", root, an.gamma().to_text());
    Ok(enc)
}

pub fn encode_shallow(t: &NlcTree, p: &Factorization) -> Result<FactorEncoding> {
    if !is_shallow(&quotient(t, p)?) {
        return Err(Error::input("quotient is not shallow"));
    }
    let mut enc = FactorEncoding::base(t, p)?;
    enc.tag("kind", t.node_id(t.tree().root()), FactorKind::Shallow);
    Ok(enc)
}

/// The induced tree of a factor together with the factorization into its
/// child factors.
pub fn factor_instance(t: &NlcTree, rf: &RecursiveFactorization, id: usize) -> Result<(NlcTree, Factorization)> {
    let f = &rf.factors[id];
    let sub = t.induced_factor(&f.nodes)?;
    let mut labels = vec![usize::MAX; sub.node_count()];
    for &c in &f.children {
        for &x in &rf.factors[c].nodes {
            labels[sub.node_index(t.node_id(x)).unwrap()] = c;
        }
    }
    let p = Factorization::from_labels(sub.tree(), &labels)?;
    Ok((sub, p))
}

/// Superposes the per-factor encodings of every level, the level-1 `η`
/// flags, the root maps and the vertex layer.
pub fn encode_recursive(t: &NlcTree, rf: &RecursiveFactorization) -> Result<EncodedStructure> {
    let mut j = EncodedStructure { k: t.k(), levels: rf.levels, ..Default::default() };
    for f in &rf.factors {
        let ctx = |e: Error| Error::invariant(format!("encoding factor {} on level {}: {e}", f.id, f.level));
        if f.kind == FactorKind::Leaf {
            for level in 2..=f.level {
                j.set_tag(level, "kind", t.node_id(f.top), FactorKind::Leaf.to_string());
            }
            continue;
        }
        let (sub, p) = factor_instance(t, rf, f.id).map_err(ctx)?;
        let enc = match f.kind {
            FactorKind::Splendid => encode_splendid(&sub, &p),
            _ => encode_shallow(&sub, &p),
        }
        .map_err(ctx)?;
        for (name, m) in enc.funs {
            for (a, b) in m {
                j.set_fun(f.level, &name, a, b);
            }
        }
        for (name, m) in enc.tags {
            for (a, v) in m {
                j.set_tag(f.level, &name, a, v);
            }
        }
    }
    for a in 0..t.node_count() {
        j.eta1.insert(t.node_id(a), t.eta(a).clone());
    }
    for v in 0..t.vertex_count() {
        j.vmap.insert(t.vertex_id(v), (t.node_id(t.attach(v)), t.color(v)));
    }
    for level in 1..=rf.levels {
        let map = rf.factor_of_nodes(level, t.node_count());
        let m = j.rooti.entry(level).or_default();
        for (a, &f) in map.iter().enumerate() {
            m.insert(t.node_id(a), t.node_id(rf.factors[f].top));
        }
    }
    Ok(j)
}
