//! Semi-induced half-graph search.

use std::collections::HashMap;

use crate::graph::{BitSet, Graph};

/// Largest `n <= cap` such that `g` semi-induces a half-graph of order `n`:
/// distinct `a_1..a_n`, `b_1..b_n` with `a_i b_j` an edge iff `i <= j`.
/// A result equal to `cap` means "at least `cap`".
///
/// The `a_i` are chosen in order. After `a_1..a_m`, let `T_j` be the vertices
/// outside `A` adjacent to exactly `a_1..a_j`. A valid `b_j` is precisely a
/// member of `T_j`, and these classes are disjoint, so the chosen prefix
/// extends to a half-graph iff every `T_j` stays non-empty. The classes alone
/// determine the rest of the search and are memoized. Twins lead to
/// isomorphic states, so one vertex per twin class is tried.
pub fn ladder_index(g: &Graph, cap: usize) -> usize {
    let reps = twin_representatives(g);
    let mut s = Search { g, cap, reps, memo: HashMap::new() };
    s.best(vec![BitSet::full(g.len())])
}

/// Smallest member of every class of vertices with equal open or equal
/// closed neighbourhoods.
fn twin_representatives(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let closed: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut s = g.neighbors(v).clone();
            s.insert(v);
            s
        })
        .collect();
    (0..n)
        .filter(|&v| !(0..v).any(|u| g.neighbors(u) == g.neighbors(v) || closed[u] == closed[v]))
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    cap: usize,
    reps: Vec<usize>,
    /// `[T_0, T_1, ..., T_m]` with `T_0` the vertices not yet split off; only
    /// `T_1..T_m` must stay non-empty.
    memo: HashMap<Vec<BitSet>, usize>,
}

impl Search<'_> {
    fn best(&mut self, classes: Vec<BitSet>) -> usize {
        let m = classes.len() - 1;
        let top = &classes[m];
        // each further step splits the top class into two non-empty halves
        let bound = if m == 0 { top.len() / 2 } else { m + top.len() - 1 }.min(self.cap);
        if m >= bound {
            return m;
        }
        if let Some(&v) = self.memo.get(&classes) {
            return v;
        }
        let mut best = m;
        for i in 0..self.reps.len() {
            let a = self.reps[i];
            let nb = self.g.neighbors(a);
            let mut next = Vec::with_capacity(m + 2);
            let mut ok = true;
            for (j, t) in classes.iter().enumerate() {
                let mut keep = t.difference(nb);
                keep.remove(a);
                if j > 0 && keep.is_empty() {
                    ok = false;
                    break;
                }
                next.push(keep);
            }
            if !ok {
                continue;
            }
            let mut up = classes[m].intersect(nb);
            up.remove(a);
            if up.is_empty() {
                continue;
            }
            next.push(up);
            best = best.max(self.best(next));
            if best >= bound {
                break;
            }
        }
        self.memo.insert(classes, best);
        best
    }
}

/// Whether `(a, b)` semi-induces a half-graph in `g`.
pub fn is_semi_induced_halfgraph(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    if !a.iter().chain(b).all(|&v| v < g.len() && seen.insert(v)) {
        return false;
    }
    (0..a.len()).all(|i| (0..b.len()).all(|j| g.has_edge(a[i], b[j]) == (i <= j)))
}

/// Exhaustive oracle over all ordered selections, for graphs of at most 8 vertices.
pub fn ladder_index_brute(g: &Graph, cap: usize) -> usize {
    fn extend(g: &Graph, a: &mut Vec<usize>, b: &mut Vec<usize>, cap: usize) -> usize {
        let mut best = a.len();
        if best >= cap {
            return best;
        }
        for x in 0..g.len() {
            for y in 0..g.len() {
                if x == y || a.contains(&x) || a.contains(&y) || b.contains(&x) || b.contains(&y) {
                    continue;
                }
                a.push(x);
                b.push(y);
                if is_semi_induced_halfgraph(g, a, b) {
                    best = best.max(extend(g, a, b, cap));
                }
                a.pop();
                b.pop();
            }
        }
        best
    }
    extend(g, &mut Vec::new(), &mut Vec::new(), cap)
}
