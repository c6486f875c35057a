//! k-NLC-trees, induced factors, factorizations and quotient trees.
//!
//! Nodes and vertices are stored under dense local indices. Each tree also
//! remembers the global id of every node and vertex, which is what the text
//! format and induced factors speak in. Local order always follows global id
//! order, so a factor of a factor is structurally equal to the direct factor.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semigroup::{Color, SkFun};
use crate::tree::RootedTree;

pub type ColorPair = (Color, Color);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NlcTree {
    k: usize,
    tree: RootedTree,
    node_ids: Vec<usize>,
    /// Label of the edge from a node to its parent; `None` only at the root.
    rho: Vec<Option<SkFun>>,
    eta: Vec<BTreeSet<ColorPair>>,
    vertex_ids: Vec<usize>,
    attach: Vec<usize>,
    color: Vec<Color>,
}

/// Raw parts of an [`NlcTree`] in local indices.
#[derive(Clone, Debug, Default)]
pub struct NlcParts {
    pub k: usize,
    pub parent: Vec<Option<usize>>,
    pub rho: Vec<Option<SkFun>>,
    pub eta: Vec<BTreeSet<ColorPair>>,
    pub attach: Vec<usize>,
    pub color: Vec<Color>,
    /// Global ids; dense `0..n` and `n..n+m` when left empty.
    pub node_ids: Vec<usize>,
    pub vertex_ids: Vec<usize>,
}

impl NlcTree {
    pub fn from_parts(p: NlcParts) -> Result<Self> {
        let NlcParts { k, parent, rho, eta, attach, color, mut node_ids, mut vertex_ids } = p;
        if k == 0 || k > u8::MAX as usize {
            return Err(Error::input(format!("k={k} out of range")));
        }
        let n = parent.len();
        let tree = RootedTree::from_parents(parent)?;
        if rho.len() != n || eta.len() != n {
            return Err(Error::input("rho/eta length does not match node count"));
        }
        for v in 0..n {
            match (&rho[v], tree.parent(v)) {
                (None, None) => {}
                (Some(f), Some(_)) if f.k() == k => {}
                (Some(f), Some(_)) => {
                    return Err(Error::input(format!("edge label {f} has arity {} not {k}", f.k())))
                }
                (None, Some(_)) => return Err(Error::input(format!("edge above node {v} has no label"))),
                (Some(_), None) => return Err(Error::input("root carries an edge label")),
            }
            for &(a, b) in &eta[v] {
                if a == 0 || b == 0 || a as usize > k || b as usize > k {
                    return Err(Error::input(format!("eta pair ({a},{b}) outside [1..{k}]")));
                }
                if !eta[v].contains(&(b, a)) {
                    return Err(Error::input(format!("eta at node {v} is not symmetric")));
                }
            }
        }
        let m = attach.len();
        if color.len() != m {
            return Err(Error::input("color length does not match vertex count"));
        }
        if let Some(&a) = attach.iter().find(|&&a| a >= n) {
            return Err(Error::input(format!("vertex attached to unknown node {a}")));
        }
        if let Some(&c) = color.iter().find(|&&c| c == 0 || c as usize > k) {
            return Err(Error::input(format!("vertex color {c} outside [1..{k}]")));
        }
        if node_ids.is_empty() {
            node_ids = (0..n).collect();
        }
        if vertex_ids.is_empty() {
            vertex_ids = (n..n + m).collect();
        }
        if node_ids.len() != n || vertex_ids.len() != m {
            return Err(Error::input("id list length mismatch"));
        }
        if !node_ids.windows(2).all(|w| w[0] < w[1]) || !vertex_ids.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::input("ids must be strictly increasing"));
        }
        if node_ids.iter().any(|id| vertex_ids.binary_search(id).is_ok()) {
            return Err(Error::input("node and vertex ids overlap"));
        }
        Ok(NlcTree { k, tree, node_ids, rho, eta, vertex_ids, attach, color })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn node_count(&self) -> usize {
        self.tree.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.attach.len()
    }

    pub fn node_id(&self, x: usize) -> usize {
        self.node_ids[x]
    }

    pub fn node_ids(&self) -> &[usize] {
        &self.node_ids
    }

    pub fn vertex_id(&self, v: usize) -> usize {
        self.vertex_ids[v]
    }

    pub fn vertex_ids(&self) -> &[usize] {
        &self.vertex_ids
    }

    pub fn node_index(&self, id: usize) -> Option<usize> {
        self.node_ids.binary_search(&id).ok()
    }

    pub fn vertex_index(&self, id: usize) -> Option<usize> {
        self.vertex_ids.binary_search(&id).ok()
    }

    /// Label of the edge from `x` to its parent.
    pub fn rho(&self, x: usize) -> Option<&SkFun> {
        self.rho[x].as_ref()
    }

    pub fn eta(&self, x: usize) -> &BTreeSet<ColorPair> {
        &self.eta[x]
    }

    pub fn attach(&self, v: usize) -> usize {
        self.attach[v]
    }

    pub fn color(&self, v: usize) -> Color {
        self.color[v]
    }

    /// `ρ(path_T(y, x))`; identity when `x == y`.
    pub fn path_rho(&self, y: usize, x: usize) -> Result<SkFun> {
        let mut acc = SkFun::identity(self.k);
        for e in self.tree.path_up(y, x)? {
            acc = self.rho[e].as_ref().unwrap().after(&acc);
        }
        Ok(acc)
    }

    /// Edge labels from `y` up to `x`, bottom edge first.
    pub fn path_labels(&self, y: usize, x: usize) -> Result<Vec<SkFun>> {
        Ok(self.tree.path_up(y, x)?.into_iter().map(|e| self.rho[e].clone().unwrap()).collect())
    }

    /// `κ(v, x)`: the color of vertex `v` as seen at its ancestor node `x`.
    pub fn kappa(&self, v: usize, x: usize) -> Result<Color> {
        if v >= self.vertex_count() {
            return Err(Error::input(format!("unknown vertex {v}")));
        }
        let p = self.attach[v];
        if x >= self.node_count() || !self.tree.is_ancestor(x, p) {
            return Err(Error::input(format!("node {x} is not an ancestor of pi({v})")));
        }
        let mut c = self.color[v];
        let mut y = p;
        while y != x {
            c = self.rho[y].as_ref().unwrap().apply(c);
            y = self.tree.parent(y).unwrap();
        }
        Ok(c)
    }

    /// Colors of `v` at every ancestor of `π(v)`, indexed by the ancestor's depth.
    pub fn colors_up(&self, v: usize) -> Vec<Color> {
        let p = self.attach[v];
        let mut out = vec![0; self.tree.depth(p) + 1];
        let mut c = self.color[v];
        let mut y = p;
        loop {
            out[self.tree.depth(y)] = c;
            match self.tree.parent(y) {
                Some(q) => {
                    c = self.rho[y].as_ref().unwrap().apply(c);
                    y = q;
                }
                None => break,
            }
        }
        out
    }

    /// The graph generated by the tree, over vertex ordinals `0..m`.
    pub fn generate_graph(&self) -> Graph {
        let m = self.vertex_count();
        let ups: Vec<Vec<Color>> = (0..m).map(|v| self.colors_up(v)).collect();
        let mut g = Graph::new(m);
        for u in 0..m {
            for v in u + 1..m {
                let x = self.tree.meet(self.attach[u], self.attach[v]);
                let d = self.tree.depth(x);
                if self.eta[x].contains(&(ups[u][d], ups[v][d])) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Direct adjacency test for two vertex ordinals.
    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        if u == v {
            return Ok(false);
        }
        let x = self.tree.lca(self.attach[u], self.attach[v])?;
        Ok(self.eta[x].contains(&(self.kappa(u, x)?, self.kappa(v, x)?)))
    }

    /// `π_F(v)` for a part given as a membership mask: deepest node of the part on
    /// the path from `π(v)` to the root, if any.
    fn deepest_in(&self, v: usize, in_part: &[bool]) -> Option<usize> {
        let mut y = self.attach[v];
        loop {
            if in_part[y] {
                return Some(y);
            }
            y = self.tree.parent(y)?;
        }
    }

    /// The induced factor `𝔗_F` of a connected node set `part` (local indices).
    pub fn induced_factor(&self, part: &[usize]) -> Result<NlcTree> {
        let n = self.node_count();
        let mut in_part = vec![false; n];
        for &x in part {
            if x >= n {
                return Err(Error::input(format!("unknown node {x}")));
            }
            in_part[x] = true;
        }
        let mut members: Vec<usize> = (0..n).filter(|&x| in_part[x]).collect();
        members.sort_unstable();
        let tops: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&x| self.tree.parent(x).is_none_or(|p| !in_part[p]))
            .collect();
        if tops.len() != 1 {
            return Err(Error::input(format!("part is not a connected subtree ({} tops)", tops.len())));
        }
        let local = |x: usize| members.binary_search(&x).unwrap();
        let parent = members.iter().map(|&x| self.tree.parent(x).filter(|&p| in_part[p]).map(local)).collect();
        let rho = members
            .iter()
            .map(|&x| if x == tops[0] { None } else { self.rho[x].clone() })
            .collect();
        let eta = members.iter().map(|&x| self.eta[x].clone()).collect();
        let mut attach = Vec::new();
        let mut color = Vec::new();
        let mut vertex_ids = Vec::new();
        for v in 0..self.vertex_count() {
            if !self.tree.is_ancestor(tops[0], self.attach[v]) {
                continue;
            }
            let pf = self.deepest_in(v, &in_part).unwrap();
            attach.push(local(pf));
            color.push(self.kappa(v, pf)?);
            vertex_ids.push(self.vertex_ids[v]);
        }
        NlcTree::from_parts(NlcParts {
            k: self.k,
            parent,
            rho,
            eta,
            attach,
            color,
            node_ids: members.iter().map(|&x| self.node_ids[x]).collect(),
            vertex_ids,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("nlc k={}\n", self.k);
        for &x in self.tree.preorder() {
            let parent = match self.tree.parent(x) {
                Some(p) => self.node_ids[p].to_string(),
                None => "-".into(),
            };
            let eta = if self.eta[x].is_empty() {
                "-".to_string()
            } else {
                self.eta[x].iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(";")
            };
            writeln!(s, "node {} parent={parent} eta={eta}", self.node_ids[x]).unwrap();
        }
        for x in 0..self.node_count() {
            if let Some(f) = &self.rho[x] {
                writeln!(s, "edge {} rho={f}", self.node_ids[x]).unwrap();
            }
        }
        for v in 0..self.vertex_count() {
            writeln!(
                s,
                "vertex {} node={} color={}",
                self.vertex_ids[v], self.node_ids[self.attach[v]], self.color[v]
            )
            .unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<NlcTree> {
        let mut k = None;
        let mut nodes: Vec<(usize, Option<usize>, BTreeSet<ColorPair>)> = Vec::new();
        let mut edges: Vec<(usize, SkFun, usize)> = Vec::new();
        let mut verts: Vec<(usize, usize, Color, usize)> = Vec::new();
        let mut seen_nodes = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let kind = parts.next().unwrap();
            let fields: Vec<&str> = parts.collect();
            let field = |name: &str| -> Result<&str> {
                fields
                    .iter()
                    .find_map(|f| f.strip_prefix(name).and_then(|r| r.strip_prefix('=')))
                    .ok_or_else(|| Error::parse(ln, format!("missing `{name}=`")))
            };
            let num = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::parse(ln, format!("bad number `{s}`")))
            };
            match kind {
                "nlc" => {
                    if k.is_some() {
                        return Err(Error::parse(ln, "duplicate header"));
                    }
                    k = Some(num(field("k")?)?);
                }
                "node" => {
                    let id = num(fields.first().ok_or_else(|| Error::parse(ln, "missing id"))?)?;
                    let parent = match field("parent")? {
                        "-" => None,
                        p => {
                            let p = num(p)?;
                            if !seen_nodes.contains(&p) {
                                return Err(Error::parse(ln, format!("parent {p} not declared before node {id}")));
                            }
                            Some(p)
                        }
                    };
                    let eta = parse_eta(field("eta")?).map_err(|e| Error::parse(ln, e.to_string()))?;
                    if !seen_nodes.insert(id) {
                        return Err(Error::parse(ln, format!("duplicate node {id}")));
                    }
                    nodes.push((id, parent, eta));
                }
                "edge" => {
                    let id = num(fields.first().ok_or_else(|| Error::parse(ln, "missing id"))?)?;
                    let f: SkFun = field("rho")?.parse().map_err(|e: Error| Error::parse(ln, e.to_string()))?;
                    edges.push((id, f, ln));
                }
                "vertex" => {
                    let id = num(fields.first().ok_or_else(|| Error::parse(ln, "missing id"))?)?;
                    let node = num(field("node")?)?;
                    let c = num(field("color")?)?;
                    if c == 0 || c > u8::MAX as usize {
                        return Err(Error::parse(ln, format!("bad color {c}")));
                    }
                    verts.push((id, node, c as Color, ln));
                }
                other => return Err(Error::parse(ln, format!("unknown record `{other}`"))),
            }
        }
        let k = k.ok_or_else(|| Error::parse(0, "missing `nlc k=` header"))?;
        let node_ids: Vec<usize> = seen_nodes.into_iter().collect();
        let idx = |id: usize| node_ids.binary_search(&id).ok();
        let n = node_ids.len();
        let mut parent = vec![None; n];
        let mut eta = vec![BTreeSet::new(); n];
        for (id, p, e) in nodes {
            let x = idx(id).unwrap();
            parent[x] = p.map(|p| idx(p).unwrap());
            eta[x] = e;
        }
        let mut rho = vec![None; n];
        for (id, f, ln) in edges {
            let x = idx(id).ok_or_else(|| Error::parse(ln, format!("edge at unknown node {id}")))?;
            if rho[x].is_some() {
                return Err(Error::parse(ln, format!("duplicate edge {id}")));
            }
            rho[x] = Some(f);
        }
        verts.sort_unstable();
        let mut attach = Vec::with_capacity(verts.len());
        let mut color = Vec::with_capacity(verts.len());
        let mut vertex_ids = Vec::with_capacity(verts.len());
        for (id, node, c, ln) in verts {
            attach.push(idx(node).ok_or_else(|| Error::parse(ln, format!("vertex at unknown node {node}")))?);
            color.push(c);
            vertex_ids.push(id);
        }
        if vertex_ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::parse(0, "duplicate vertex id"));
        }
        NlcTree::from_parts(NlcParts { k, parent, rho, eta, attach, color, node_ids, vertex_ids })
    }
}

fn parse_eta(s: &str) -> Result<BTreeSet<ColorPair>> {
    let mut out = BTreeSet::new();
    if s == "-" {
        return Ok(out);
    }
    for item in s.split(';') {
        let inner = item
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::input(format!("bad eta pair `{item}`")))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| Error::input(format!("bad eta pair `{item}`")))?;
        let a: Color = a.trim().parse().map_err(|_| Error::input(format!("bad color `{a}`")))?;
        let b: Color = b.trim().parse().map_err(|_| Error::input(format!("bad color `{b}`")))?;
        out.insert((a, b));
    }
    Ok(out)
}

/// A partition of the nodes of a tree into connected subtrees.
///
/// Parts are numbered in increasing order of their top node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    part_of: Vec<usize>,
    parts: Vec<Vec<usize>>,
    tops: Vec<usize>,
}

impl Factorization {
    /// Builds a factorization from an arbitrary labelling of nodes; labels only
    /// need to agree within a part.
    pub fn from_labels(tree: &RootedTree, labels: &[usize]) -> Result<Self> {
        let n = tree.len();
        if labels.len() != n {
            return Err(Error::input("label count does not match node count"));
        }
        let mut tops: Vec<usize> =
            (0..n).filter(|&x| tree.parent(x).is_none_or(|p| labels[p] != labels[x])).collect();
        tops.sort_unstable();
        let mut seen = std::collections::BTreeMap::new();
        for (i, &t) in tops.iter().enumerate() {
            if seen.insert(labels[t], i).is_some() {
                return Err(Error::input(format!("part labelled {} is not connected", labels[t])));
            }
        }
        let part_of: Vec<usize> = labels.iter().map(|l| seen[l]).collect();
        let mut parts = vec![Vec::new(); tops.len()];
        for x in 0..n {
            parts[part_of[x]].push(x);
        }
        Ok(Factorization { part_of, parts, tops })
    }

    pub fn singletons(tree: &RootedTree) -> Self {
        Factorization::from_labels(tree, &(0..tree.len()).collect::<Vec<_>>()).unwrap()
    }

    pub fn whole(tree: &RootedTree) -> Self {
        Factorization::from_labels(tree, &vec![0; tree.len()]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_of(&self, x: usize) -> usize {
        self.part_of[x]
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn top(&self, i: usize) -> usize {
        self.tops[i]
    }
}

/// The quotient `S_k`-tree of a factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTree {
    pub tree: RootedTree,
    /// Label of the edge from a part to its parent part.
    pub varrho: Vec<Option<SkFun>>,
    /// Part containing `π(v)`, per vertex.
    pub varpi: Vec<usize>,
}

impl QuotientTree {
    pub fn labels(&self) -> impl Iterator<Item = &SkFun> {
        self.varrho.iter().flatten()
    }

    pub fn height(&self) -> usize {
        self.tree.height()
    }
}

/// Builds the quotient tree: the parent of a part is the part holding the
/// tree-parent of its top, and the edge is labelled by the path between tops.
pub fn quotient(t: &NlcTree, p: &Factorization) -> Result<QuotientTree> {
    if p.part_of.len() != t.node_count() {
        return Err(Error::input("factorization does not belong to this tree"));
    }
    let mut yparent = Vec::with_capacity(p.len());
    let mut varrho = Vec::with_capacity(p.len());
    for i in 0..p.len() {
        match t.tree().parent(p.top(i)) {
            None => {
                yparent.push(None);
                varrho.push(None);
            }
            Some(q) => {
                let j = p.part_of(q);
                yparent.push(Some(j));
                varrho.push(Some(t.path_rho(p.top(i), p.top(j))?));
            }
        }
    }
    let tree = RootedTree::from_parents(yparent)?;
    let varpi = (0..t.vertex_count()).map(|v| p.part_of(t.attach(v))).collect();
    Ok(QuotientTree { tree, varrho, varpi })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> SkFun {
        s.parse().unwrap()
    }

    fn pairs(p: &[(u8, u8)]) -> BTreeSet<ColorPair> {
        p.iter().copied().collect()
    }

    /// root 0 - a 1 - b 2, vertex on each node.
    fn chain3() -> NlcTree {
        NlcTree::from_parts(NlcParts {
            k: 2,
            parent: vec![None, Some(0), Some(1)],
            rho: vec![None, Some(f("2:2,1")), Some(f("2:2,2"))],
            eta: vec![pairs(&[(1, 2), (2, 1)]), pairs(&[(2, 2)]), BTreeSet::new()],
            attach: vec![0, 1, 2],
            color: vec![1, 1, 1],
            ..Default::default()
        })
        .unwrap()
    }

    #[test]
    fn kappa_examples() {
        let t = chain3();
        assert_eq!(t.kappa(2, 2).unwrap(), 1);
        // single edge labelled c_2 lifts colour 1 to 2
        assert_eq!(t.kappa(2, 1).unwrap(), 2);
        // then the swap sends 2 back to 1
        assert_eq!(t.kappa(2, 0).unwrap(), 1);
        assert!(t.kappa(0, 2).is_err());

        let swaps = NlcTree::from_parts(NlcParts {
            k: 2,
            parent: vec![None, Some(0), Some(1)],
            rho: vec![None, Some(f("2:2,1")), Some(f("2:2,1"))],
            eta: vec![BTreeSet::new(); 3],
            attach: vec![2],
            color: vec![1],
            ..Default::default()
        })
        .unwrap();
        assert_eq!(swaps.kappa(0, 0).unwrap(), 1);
    }

    #[test]
    fn generate_graph_examples() {
        let single = |eta: &[(u8, u8)], colors: Vec<u8>| {
            NlcTree::from_parts(NlcParts {
                k: 2,
                parent: vec![None],
                rho: vec![None],
                eta: vec![pairs(eta)],
                attach: vec![0; colors.len()],
                color: colors,
                ..Default::default()
            })
            .unwrap()
            .generate_graph()
        };
        assert_eq!(single(&[], vec![1, 2, 1]).edge_count(), 0);
        let g = single(&[(1, 2), (2, 1)], vec![1, 2]);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(single(&[(1, 1)], vec![1, 1, 1]), Graph::complete(3));
    }

    #[test]
    fn chain_graph_matches_adjacency() {
        let t = chain3();
        let g = t.generate_graph();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(g.has_edge(u, v), t.adjacent(u, v).unwrap());
            }
        }
        // vertices 1 and 2 meet at node 1 with colours 1 and 2: not in eta(1)
        assert!(!g.has_edge(1, 2));
        // 0 and 2 meet at root with colours (1,1)
        assert!(!g.has_edge(0, 2));
        // 0 and 1 meet at root with colours (1,2)
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn induced_factor_examples() {
        let t = chain3();
        assert_eq!(t.induced_factor(&[0, 1, 2]).unwrap(), t);
        let leaf = t.induced_factor(&[2]).unwrap();
        assert_eq!(leaf.node_ids(), &[2]);
        assert_eq!(leaf.vertex_ids(), &[5]);
        assert_eq!(leaf.color(0), 1);
        let mid = t.induced_factor(&[1]).unwrap();
        assert_eq!(mid.vertex_ids(), &[4, 5]);
        assert_eq!((mid.color(0), mid.color(1)), (1, 2));
        assert!(t.induced_factor(&[0, 2]).is_err());
        let nested = t.induced_factor(&[1, 2]).unwrap().induced_factor(&[1]).unwrap();
        assert_eq!(nested, t.induced_factor(&[2]).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let t = chain3();
        let q = quotient(&t, &Factorization::singletons(t.tree())).unwrap();
        assert_eq!(q.tree.parents(), t.tree().parents());
        assert_eq!(q.varrho[2], Some(f("2:2,2")));
        let whole = quotient(&t, &Factorization::whole(t.tree())).unwrap();
        assert_eq!(whole.tree.len(), 1);
        assert_eq!(whole.varpi, vec![0, 0, 0]);
        let split = Factorization::from_labels(t.tree(), &[7, 7, 3]).unwrap();
        assert_eq!(split.tops, vec![0, 2]);
        assert!(Factorization::from_labels(t.tree(), &[1, 2, 1]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let t = chain3();
        let text = t.to_text();
        assert!(text.starts_with("nlc k=2\nnode 0 parent=- eta=(1,2);(2,1)\n"));
        assert_eq!(NlcTree::parse(&text).unwrap(), t);
        let factor = t.induced_factor(&[1, 2]).unwrap();
        assert_eq!(NlcTree::parse(&factor.to_text()).unwrap(), factor);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(NlcTree::parse("node 0 parent=- eta=-\n").is_err());
        assert!(NlcTree::parse("nlc k=2\nnode 1 parent=0 eta=-\nnode 0 parent=- eta=-\n").is_err());
        assert!(NlcTree::parse("nlc k=2\nnode 0 parent=- eta=(1,2)\n").is_err());
        assert!(NlcTree::parse("nlc k=2\nnode 0 parent=- eta=-\nnode 1 parent=0 eta=-\n").is_err());
        assert!(NlcTree::parse("nlc k=2\nnode 0 parent=- eta=-\nvertex 1 node=0 color=3\n").is_err());
    }
}
