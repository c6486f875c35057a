use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A fixed-size bit set used by the search routines.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = BitSet::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn difference(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Simple undirected graph over dense vertex indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![BitSet::new(n); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(Error::input(format!("edge {u}-{v} outside 0..{n}")));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum::<usize>() / 2
    }

    /// Edges with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.len() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Half-graph of order `t`: `a_i = i-1`, `b_j = t+j-1`, edge iff `i <= j`.
    pub fn half_graph(t: usize) -> Graph {
        let mut g = Graph::new(2 * t);
        for i in 0..t {
            for j in i..t {
                g.add_edge(i, t + j).unwrap();
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for i in 0..a {
            for j in 0..b {
                g.add_edge(i, a + j).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).unwrap();
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut s = format!("graph n={} m={}\n", self.len(), edges.len());
        for (u, v) in edges {
            writeln!(s, "e {u} {v}").unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut g: Option<Graph> = None;
        let mut declared_m = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("graph") => {
                    let mut n = None;
                    for p in parts {
                        match p.split_once('=') {
                            Some(("n", v)) => n = v.parse().ok(),
                            Some(("m", v)) => declared_m = v.parse().map_err(|_| Error::parse(i + 1, "bad m"))?,
                            _ => return Err(Error::parse(i + 1, format!("unexpected `{p}`"))),
                        }
                    }
                    g = Some(Graph::new(n.ok_or_else(|| Error::parse(i + 1, "missing n"))?));
                }
                Some("e") => {
                    let g = g.as_mut().ok_or_else(|| Error::parse(i + 1, "edge before header"))?;
                    let nums: Vec<usize> = parts
                        .map(|p| p.parse().map_err(|_| Error::parse(i + 1, "bad vertex")))
                        .collect::<Result<_>>()?;
                    if nums.len() != 2 {
                        return Err(Error::parse(i + 1, "edge needs two endpoints"));
                    }
                    g.add_edge(nums[0], nums[1]).map_err(|e| Error::parse(i + 1, e.to_string()))?;
                }
                Some(other) => return Err(Error::parse(i + 1, format!("unknown record `{other}`"))),
                None => {}
            }
        }
        let g = g.ok_or_else(|| Error::parse(0, "missing `graph` header"))?;
        if g.edge_count() != declared_m {
            return Err(Error::parse(0, format!("header declares m={declared_m}, found {}", g.edge_count())));
        }
        Ok(g)
    }
}
