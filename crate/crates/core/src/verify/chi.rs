//! Clique number and a greedy colouring bound.

use crate::error::{Error, Result};
use crate::graph::{BitSet, Graph};

/// Largest graph `clique_number` accepts.
pub const CLIQUE_LIMIT: usize = 2000;

/// Exact clique number by branch and bound; candidates are greedily coloured
/// and a branch is cut once its colour count cannot beat the best clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.len() > CLIQUE_LIMIT {
        return Err(Error::limit(format!("clique search limited to {CLIQUE_LIMIT} vertices")));
    }
    let mut best = 0;
    expand(g, 0, BitSet::full(g.len()), &mut best);
    Ok(best)
}

fn expand(g: &Graph, size: usize, cand: BitSet, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let (order, colors) = color_sort(g, &cand);
    let mut cand = cand;
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        expand(g, size + 1, cand.intersect(g.neighbors(v)), best);
        cand.remove(v);
    }
}

/// Greedy sequential colouring of `cand`; returns vertices by colour class
/// and, for each position, the number of colours used up to it.
fn color_sort(g: &Graph, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut left = cand.clone();
    let (mut order, mut colors) = (Vec::new(), Vec::new());
    let mut c = 0;
    while !left.is_empty() {
        c += 1;
        let mut q = left.clone();
        loop {
            let Some(v) = q.iter().next() else { break };
            left.remove(v);
            q.remove(v);
            q = q.difference(g.neighbors(v));
            order.push(v);
            colors.push(c);
        }
    }
    (order, colors)
}

/// Clique number by enumerating every vertex subset; at most 20 vertices.
pub fn clique_number_brute(g: &Graph) -> usize {
    let n = g.len();
    assert!(n <= 20, "subset enumeration limited to 20 vertices");
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !adj[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Colours used by first-fit along the reverse of a degeneracy order
/// (repeatedly removing a minimum-degree vertex). Never below the clique number.
pub fn chi_upper(g: &Graph) -> usize {
    let n = g.len();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut elim = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        removed[v] = true;
        elim.push(v);
        for w in g.neighbors(v).iter() {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut color = vec![0usize; n];
    let mut used = 0;
    for &v in elim.iter().rev() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|w| color[w]).filter(|&c| c > 0).collect();
        let c = (1..).find(|c| !taken.contains(c)).unwrap();
        color[v] = c;
        used = used.max(c);
    }
    used
}
