//! Deterministic instance generators.
//!
//! Randomness comes from xoshiro256** seeded through SplitMix64, so a
//! configuration always yields the same instance.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::nlc::{NlcParts, NlcTree};
use crate::semigroup::{Color, SkFun};
use crate::verify::ladder_index;

/// Retries allowed when resampling under `reject_ladder_above`.
pub const REJECTION_BUDGET: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelPool {
    All,
    Constants,
    /// Mostly idempotents sharing one kernel, occasionally arbitrary maps.
    RamseyBiased,
}

impl fmt::Display for LabelPool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabelPool::All => "all",
            LabelPool::Constants => "constants",
            LabelPool::RamseyBiased => "ramsey-biased",
        })
    }
}

impl FromStr for LabelPool {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(LabelPool::All),
            "constants" => Ok(LabelPool::Constants),
            "ramsey-biased" => Ok(LabelPool::RamseyBiased),
            _ => Err(Error::input(format!("unknown label pool `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub k: usize,
    pub tree_nodes: usize,
    pub vertices: usize,
    pub eta_density: f64,
    pub label_pool: LabelPool,
    pub seed: u64,
    pub reject_ladder_above: Option<usize>,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            k: 2,
            tree_nodes: 12,
            vertices: 20,
            eta_density: 0.3,
            label_pool: LabelPool::All,
            seed: 0,
            reject_ladder_above: None,
        }
    }
}

impl GenConfig {
    fn check(&self) -> Result<()> {
        if self.k == 0 || self.k > Color::MAX as usize {
            return Err(Error::input(format!("k={} out of range", self.k)));
        }
        if self.tree_nodes == 0 {
            return Err(Error::input("tree_nodes must be positive"));
        }
        if !(0.0..=1.0).contains(&self.eta_density) {
            return Err(Error::input("eta_density must lie in [0,1]"));
        }
        Ok(())
    }
}

fn random_fun(rng: &mut impl Rng, k: usize) -> SkFun {
    SkFun::new((0..k).map(|_| rng.gen_range(1..=k) as u8).collect()).unwrap()
}

/// An idempotent with the given kernel labels (`kernel[m]` names the class of
/// colour `m+1`): every class goes to a random member of itself.
fn idempotent_with_kernel(rng: &mut impl Rng, kernel: &[usize]) -> SkFun {
    let mut rep = vec![0u8; kernel.len()];
    for c in 0..kernel.len() {
        let members: Vec<usize> = (0..kernel.len()).filter(|&m| kernel[m] == c).collect();
        if !members.is_empty() {
            rep[c] = members[rng.gen_range(0..members.len())] as u8 + 1;
        }
    }
    SkFun::new(kernel.iter().map(|&c| rep[c]).collect()).unwrap()
}

fn sample(cfg: &GenConfig, rng: &mut Xoshiro256StarStar) -> Result<NlcTree> {
    let (k, n) = (cfg.k, cfg.tree_nodes);
    let raw: Vec<usize> = (0..k).map(|_| rng.gen_range(0..k)).collect();
    let kernel: Vec<usize> = raw.iter().map(|r| raw.iter().position(|x| x == r).unwrap()).collect();
    let mut parent = vec![None];
    let mut rho = vec![None];
    for i in 1..n {
        // half the nodes extend the newest branch, which keeps trees deep
        let p = if rng.gen_bool(0.5) { i - 1 } else { rng.gen_range(0..i) };
        parent.push(Some(p));
        let f = match cfg.label_pool {
            LabelPool::All => random_fun(rng, k),
            LabelPool::Constants => SkFun::constant(k, rng.gen_range(1..=k) as u8),
            LabelPool::RamseyBiased if rng.gen_bool(0.75) => idempotent_with_kernel(rng, &kernel),
            LabelPool::RamseyBiased => random_fun(rng, k),
        };
        rho.push(Some(f));
    }
    let eta = (0..n)
        .map(|_| {
            let mut s = BTreeSet::new();
            for a in 1..=k as Color {
                for b in a..=k as Color {
                    if rng.gen_bool(cfg.eta_density) {
                        s.insert((a, b));
                        s.insert((b, a));
                    }
                }
            }
            s
        })
        .collect();
    let attach = (0..cfg.vertices).map(|_| rng.gen_range(0..n)).collect();
    let color = (0..cfg.vertices).map(|_| rng.gen_range(1..=k) as Color).collect();
    NlcTree::from_parts(NlcParts { k, parent, rho, eta, attach, color, ..Default::default() })
}

pub fn gen_random(cfg: &GenConfig) -> Result<NlcTree> {
    cfg.check()?;
    let mut rng = Xoshiro256StarStar::seed_from_u64(cfg.seed);
    let Some(h) = cfg.reject_ladder_above else {
        return sample(cfg, &mut rng);
    };
    for _ in 0..REJECTION_BUDGET {
        let t = sample(cfg, &mut rng)?;
        if ladder_index(&t.generate_graph(), h + 1) <= h {
            return Ok(t);
        }
    }
    Err(Error::Generation(format!(
        "no instance with ladder index <= {h} after {REJECTION_BUDGET} attempts (seed {})",
        cfg.seed
    )))
}

/// An NLC-tree generating the half-graph of order `n` on a path of `2n` nodes.
///
/// Vertex ordinals match [`Graph::half_graph`]: `a_i` is `i-1`, `b_j` is `n+j-1`.
/// Node `2i` carries `a_{i+1}` with colour 1, node `2i+1` carries `b_{i+1}` with
/// colour 2; only the `a`-nodes relate colours 1 and 2 and every label is the
/// identity.
pub fn gen_halfgraph(n: usize, k_min: usize) -> Result<NlcTree> {
    if n == 0 {
        return Err(Error::input("half-graph order must be positive"));
    }
    let k = k_min.max(2);
    let nodes = 2 * n;
    let parent = (0..nodes).map(|i| i.checked_sub(1)).collect();
    let rho = (0..nodes).map(|i| (i > 0).then(|| SkFun::identity(k))).collect();
    let eta = (0..nodes)
        .map(|i| if i % 2 == 0 { [(1, 2), (2, 1)].into_iter().collect() } else { BTreeSet::new() })
        .collect();
    let attach = (0..n).map(|i| 2 * i).chain((0..n).map(|j| 2 * j + 1)).collect();
    let color = std::iter::repeat_n(1, n).chain(std::iter::repeat_n(2, n)).collect();
    NlcTree::from_parts(NlcParts { k, parent, rho, eta, attach, color, ..Default::default() })
}

/// Searches for an NLC-tree generating `g` among paths carrying one vertex
/// per node, trying vertex orders in lexicographic order up to a fixed budget.
///
/// Along a path with vertex `v_i` at node `i` (root first), the pair
/// `v_i, v_j` with `i < j` is decided at node `i` by the colour `v_j` has
/// there. Labels are chosen bottom-up; states that failed before are cached.
pub fn brute_force_nlc(g: &Graph, k: usize) -> Result<Option<NlcTree>> {
    let n = g.len();
    if n > 8 {
        return Err(Error::limit(format!("brute force limited to 8 vertices, got {n}")));
    }
    if k == 0 || k > 3 {
        return Err(Error::limit(format!("brute force limited to 1 <= k <= 3, got {k}")));
    }
    if n == 0 {
        return Ok(None);
    }
    let funs: Vec<SkFun> = all_functions(k);
    let mut order: Vec<usize> = (0..n).collect();
    for _ in 0..MAX_ORDERS {
        let mut search = PathSearch { g, k, order: &order, funs: &funs, failed: HashSet::new() };
        if let Some(sol) = search.solve() {
            return path_tree(g, k, &order, sol).map(Some);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(None)
}

const MAX_ORDERS: usize = 5040;

fn all_functions(k: usize) -> Vec<SkFun> {
    let total = k.pow(k as u32);
    (0..total)
        .map(|mut code| {
            let table = (0..k)
                .map(|_| {
                    let c = code % k;
                    code /= k;
                    c as u8 + 1
                })
                .collect();
            SkFun::new(table).unwrap()
        })
        .collect()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Chosen colour per path position and label of the edge above each position.
struct PathSolution {
    color: Vec<Color>,
    label: Vec<Option<SkFun>>,
}

struct PathSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: &'a [usize],
    funs: &'a [SkFun],
    /// `(position, colours of the vertices below it as seen there)`.
    failed: HashSet<(usize, Vec<Color>)>,
}

impl PathSearch<'_> {
    fn solve(&mut self) -> Option<PathSolution> {
        let n = self.order.len();
        let mut sol = PathSolution { color: vec![0; n], label: vec![None; n] };
        for c in 1..=self.k as Color {
            sol.color[n - 1] = c;
            if self.up(n - 1, vec![c], &mut sol) {
                return Some(sol);
            }
        }
        None
    }

    /// `seen` holds the colours at position `pos` of the vertices at `pos..n`.
    fn up(&mut self, pos: usize, seen: Vec<Color>, sol: &mut PathSolution) -> bool {
        if pos == 0 {
            return true;
        }
        if self.failed.contains(&(pos, seen.clone())) {
            return false;
        }
        let i = pos - 1;
        for f in self.funs {
            let above: Vec<Color> = seen.iter().map(|&c| f.apply(c)).collect();
            for c in 1..=self.k as Color {
                if !self.consistent(i, &above) {
                    continue;
                }
                let mut next = Vec::with_capacity(above.len() + 1);
                next.push(c);
                next.extend(&above);
                sol.label[pos] = Some(f.clone());
                sol.color[i] = c;
                if self.up(i, next, sol) {
                    return true;
                }
            }
        }
        self.failed.insert((pos, seen));
        false
    }

    /// Whether some `η` at position `i` realises the adjacency of `v_i` to
    /// every lower vertex, i.e. no colour there is asked to be both.
    fn consistent(&self, i: usize, above: &[Color]) -> bool {
        let u = self.order[i];
        let mut want = vec![None; self.k + 1];
        for (off, &m) in above.iter().enumerate() {
            let adj = self.g.has_edge(u, self.order[i + 1 + off]);
            match want[m as usize] {
                None => want[m as usize] = Some(adj),
                Some(w) if w != adj => return false,
                _ => {}
            }
        }
        true
    }
}

fn path_tree(g: &Graph, k: usize, order: &[usize], sol: PathSolution) -> Result<NlcTree> {
    let n = order.len();
    let parent = (0..n).map(|i| i.checked_sub(1)).collect();
    let mut eta = vec![BTreeSet::new(); n];
    let mut colors_at = vec![Vec::new(); n];
    // colours of every lower vertex at each position, bottom-up
    let mut seen = vec![sol.color[n - 1]];
    colors_at[n - 1] = seen.clone();
    for pos in (1..n).rev() {
        let f = sol.label[pos].as_ref().unwrap();
        seen = seen.iter().map(|&c| f.apply(c)).collect();
        seen.insert(0, sol.color[pos - 1]);
        colors_at[pos - 1] = seen.clone();
    }
    for i in 0..n {
        let c = sol.color[i];
        for (off, &m) in colors_at[i][1..].iter().enumerate() {
            if g.has_edge(order[i], order[i + 1 + off]) {
                eta[i].insert((c, m));
                eta[i].insert((m, c));
            }
        }
    }
    // vertex ordinal v sits at the position holding it in `order`
    let mut attach = vec![0; n];
    let mut color = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        attach[v] = pos;
        color[v] = sol.color[pos];
    }
    let t = NlcTree::from_parts(NlcParts { k, parent, rho: sol.label, eta, attach, color, ..Default::default() })?;
    if t.generate_graph() != *g {
        return Err(Error::invariant("brute-force tree does not generate the target graph"));
    }
    Ok(t)
}

/// The default acceptance corpus: `n` seeded configurations cycling through
/// both arities, both densities and every label pool.
pub fn default_corpus(n: usize, seed: u64) -> Vec<GenConfig> {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let pools = [LabelPool::All, LabelPool::Constants, LabelPool::RamseyBiased];
    (0..n)
        .map(|i| GenConfig {
            k: 2 + i % 2,
            tree_nodes: rng.gen_range(1..=60),
            vertices: rng.gen_range(1..=120),
            eta_density: if (i / 2) % 2 == 0 { 0.2 } else { 0.5 },
            label_pool: pools[(i / 4) % 3],
            seed: seed.wrapping_add(i as u64),
            reject_ladder_above: None,
        })
        .collect()
}
