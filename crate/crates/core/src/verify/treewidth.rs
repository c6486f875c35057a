//! Exact treewidth of small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TREEWIDTH_LIMIT: usize = 20;

/// Exact treewidth via the subset recurrence over elimination orderings:
/// `TW(S) = min_{v∈S} max(TW(S∖v), |Q(S∖v, v)|)`, where `Q(S, v)` are the
/// vertices outside `S ∪ {v}` reachable from `v` through `S`.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    let n = g.len();
    if n > TREEWIDTH_LIMIT {
        return Err(Error::limit(format!("exact treewidth limited to {TREEWIDTH_LIMIT} vertices")));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let q = |s: u32, v: usize| -> u32 {
        // flood from v through s
        let mut inside = 1u32 << v;
        let mut frontier = inside;
        let mut reach = 0u32;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[x];
            }
            reach |= next & !s;
            frontier = next & s & !inside;
            inside |= frontier;
        }
        reach & !(1 << v) & !s
    };
    let mut tw = vec![u8::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            let cand = tw[without as usize].max(q(without, v).count_ones() as u8);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(treewidth_exact(&Graph::new(3)).unwrap(), 0);
        assert_eq!(treewidth_exact(&Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap(), 1);
        assert_eq!(treewidth_exact(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(treewidth_exact(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(treewidth_exact(&Graph::complete_bipartite(3, 3)).unwrap(), 3);
    }
}
