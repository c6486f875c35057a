//! Independent audits of the encoding and its quantitative bounds.

pub mod audit;
pub mod chi;
pub mod ladder;
pub mod treewidth;

use std::collections::{BTreeMap, VecDeque};

use crate::encode::EncodedStructure;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use audit::{full_audit, scol_audit, step_stats, BoundAudit, BoundLine, StepStats};
pub use chi::{chi_upper, clique_number, clique_number_brute, CLIQUE_LIMIT};
pub use ladder::{is_semi_induced_halfgraph, ladder_index, ladder_index_brute};
pub use treewidth::treewidth_exact;

/// Gaifman graph of an encoding. Elements `0..n` are the nodes in id order,
/// `n..n+m` the vertices in id order.
#[derive(Clone, Debug)]
pub struct Gaifman {
    pub graph: Graph,
    pub nodes: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl Gaifman {
    pub fn node_element(&self, id: usize) -> Option<usize> {
        self.nodes.binary_search(&id).ok()
    }

    pub fn vertex_element(&self, id: usize) -> Option<usize> {
        self.vertices.binary_search(&id).ok().map(|i| self.nodes.len() + i)
    }

    pub fn is_vertex(&self, e: usize) -> bool {
        e >= self.nodes.len()
    }
}

/// Function entries and `(u, π(u))` pairs become edges; tags add none and
/// entries mapping a node to itself are skipped.
pub fn gaifman(j: &EncodedStructure) -> Result<Gaifman> {
    let nodes = j.nodes();
    let vertices = j.vertices();
    let mut out = Gaifman { graph: Graph::new(nodes.len() + vertices.len()), nodes, vertices };
    let node = |out: &Gaifman, id| out.node_element(id).ok_or_else(|| Error::corruption(format!("unknown node {id}")));
    for (_, _, a, b) in j.fun_entries() {
        let (a, b) = (node(&out, a)?, node(&out, b)?);
        if a != b {
            out.graph.add_edge(a, b)?;
        }
    }
    for (&v, &(pi, _)) in &j.vmap {
        let (e, p) = (out.vertex_element(v).unwrap(), node(&out, pi)?);
        out.graph.add_edge(e, p)?;
    }
    Ok(out)
}

/// Replaces every edge `uv` by a path `u s s' v`; new vertices are numbered
/// after the old ones, two per edge in edge order.
pub fn subdivide_twice(g: &Graph) -> Graph {
    let edges = g.edges();
    let n = g.len();
    let mut out = Graph::new(n + 2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let (s, s2) = (n + 2 * i, n + 2 * i + 1);
        out.add_edge(u, s).unwrap();
        out.add_edge(s, s2).unwrap();
        out.add_edge(s2, v).unwrap();
    }
    out
}

/// Parent map of the whole tree, read off the `tparent` relations.
pub fn tree_parents(j: &EncodedStructure) -> Result<BTreeMap<usize, usize>> {
    let mut parent = BTreeMap::new();
    for (_, name, a, b) in j.fun_entries() {
        if name == "tparent" {
            if let Some(old) = parent.insert(a, b) {
                if old != b {
                    return Err(Error::corruption(format!("node {a} has two tree parents")));
                }
            }
        }
    }
    Ok(parent)
}

/// Order on the Gaifman elements: nodes in a pre-order of the tree (children
/// by id), then vertices by id. Returns the elements in order.
pub fn canonical_ordering(j: &EncodedStructure, g: &Gaifman) -> Result<Vec<usize>> {
    let parent = tree_parents(j)?;
    let n = g.nodes.len();
    let mut children = vec![Vec::new(); n];
    let mut roots = Vec::new();
    for (e, &id) in g.nodes.iter().enumerate() {
        match parent.get(&id) {
            Some(&p) => {
                let pe = g.node_element(p).ok_or_else(|| Error::corruption(format!("unknown parent {p}")))?;
                children[pe].push(e);
            }
            None => roots.push(e),
        }
    }
    if n > 0 && roots.len() != 1 {
        return Err(Error::corruption(format!("tree relation has {} roots", roots.len())));
    }
    let mut order = Vec::with_capacity(g.graph.len());
    let mut stack: Vec<usize> = roots;
    while let Some(e) = stack.pop() {
        order.push(e);
        stack.extend(children[e].iter().rev());
    }
    if order.len() != n {
        return Err(Error::corruption("tree relation is not connected"));
    }
    order.extend(n..g.graph.len());
    Ok(order)
}

/// Position of each element in `order`.
pub fn ranks(order: &[usize]) -> Vec<usize> {
    let mut r = vec![0; order.len()];
    for (i, &e) in order.iter().enumerate() {
        r[e] = i;
    }
    r
}

/// Elements `w` with `rank[w] <= rank[v]` reachable from `v` along a path
/// whose inner elements all rank above `v`; contains `v` itself.
pub fn sreach_inf(g: &Graph, rank: &[usize], v: usize) -> Vec<usize> {
    let mut seen = vec![false; g.len()];
    let mut out = vec![v];
    let mut queue = VecDeque::from([v]);
    seen[v] = true;
    while let Some(x) = queue.pop_front() {
        for w in g.neighbors(x).iter() {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if rank[w] < rank[v] {
                out.push(w);
            } else {
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `max_v |SReach_∞[g, order, v]|`.
pub fn scol_inf(g: &Graph, rank: &[usize]) -> usize {
    (0..g.len()).map(|v| sreach_inf(g, rank, v).len()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivision_counts() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let s = subdivide_twice(&g);
        assert_eq!((s.len(), s.edge_count()), (4, 3));
        assert_eq!(s.edges(), vec![(0, 2), (1, 3), (2, 3)]);
        let c = Graph::cycle(5);
        let s = subdivide_twice(&c);
        assert_eq!((s.len(), s.edge_count()), (15, 15));
        assert_eq!(subdivide_twice(&Graph::new(3)), Graph::new(3));
    }

    #[test]
    fn sreach_examples() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let rank = vec![0, 1, 2];
        assert_eq!(sreach_inf(&g, &rank, 2), vec![1, 2]);
        assert_eq!(sreach_inf(&g, &rank, 0), vec![0]);
        assert_eq!(sreach_inf(&Graph::new(1), &[0], 0), vec![0]);
        // the middle vertex ranked last sees both neighbours
        let rank = vec![0, 2, 1];
        assert_eq!(sreach_inf(&g, &rank, 1), vec![0, 1, 2]);
    }
}
