//! Classes, types, blocks and landmarks for a factor whose quotient is splendid.
//!
//! Parts of the factorization are the nodes of the quotient tree `Y`; they are
//! referred to by part index throughout this module.

use std::fmt;

use crate::error::{Error, Result};
use crate::nlc::{quotient, Factorization, NlcTree, QuotientTree};
use crate::semigroup::{ramsey_partition, Color, RamseyPartition, SkFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sym {
    Void,
    Plus,
    Minus,
    PlusMinus,
}

impl Sym {
    fn from_counts(adjacent: usize, total: usize) -> Sym {
        match (total, adjacent) {
            (0, _) => Sym::Void,
            (t, a) if a == t => Sym::Plus,
            (_, 0) => Sym::Minus,
            _ => Sym::PlusMinus,
        }
    }

    fn has_minus(self) -> bool {
        matches!(self, Sym::Minus | Sym::PlusMinus)
    }

    fn has_plus(self) -> bool {
        matches!(self, Sym::Plus | Sym::PlusMinus)
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sym::Void => "o",
            Sym::Plus => "+",
            Sym::Minus => "-",
            Sym::PlusMinus => "±",
        })
    }
}

/// `tp^x_{γ0,γ1}(y)` as the pair `s0 s1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairType(pub Sym, pub Sym);

impl PairType {
    pub fn is_void(self) -> bool {
        self == PairType(Sym::Void, Sym::Void)
    }

    fn fully_mixed(self) -> bool {
        let PairType(a, b) = self;
        a != Sym::Void
            && b != Sym::Void
            && (a == Sym::PlusMinus || b == Sym::PlusMinus || (a.has_plus() || b.has_plus()) && (a.has_minus() || b.has_minus()))
    }

    fn positive(self) -> bool {
        matches!(self.0, Sym::Void | Sym::Plus) && matches!(self.1, Sym::Void | Sym::Plus)
    }

    fn negative(self) -> bool {
        matches!(self.0, Sym::Void | Sym::Minus) && matches!(self.1, Sym::Void | Sym::Minus)
    }

    fn first_biased(self) -> bool {
        self.1 == Sym::Void
    }

    fn second_biased(self) -> bool {
        self.0 == Sym::Void
    }

    /// Either coordinate carries `−` or `±`.
    pub fn has_minus(self) -> bool {
        self.0.has_minus() || self.1.has_minus()
    }

    /// Either coordinate carries `+` or `±`.
    pub fn has_plus(self) -> bool {
        self.0.has_plus() || self.1.has_plus()
    }
}

impl fmt::Display for PairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BlockFlags {
    pub fully_mixed: bool,
    pub positive: bool,
    pub negative: bool,
    pub first_biased: bool,
    pub second_biased: bool,
}

impl BlockFlags {
    fn of(types: &[PairType]) -> BlockFlags {
        BlockFlags {
            fully_mixed: types.len() == 1 && types[0].fully_mixed(),
            positive: types.iter().all(|t| t.positive()),
            negative: types.iter().all(|t| t.negative()),
            first_biased: types.iter().all(|t| t.first_biased()),
            second_biased: types.iter().all(|t| t.second_biased()),
        }
    }

    pub fn biased(&self) -> bool {
        self.first_biased || self.second_biased
    }

    pub fn mixed_first_biased(&self) -> bool {
        self.first_biased && !self.positive && !self.negative
    }

    pub fn mixed_second_biased(&self) -> bool {
        self.second_biased && !self.positive && !self.negative
    }

    /// Compact letter form: `m` fully mixed, `p` positive, `n` negative,
    /// `f` first-biased, `s` second-biased.
    pub fn to_letters(&self) -> String {
        let mut s = String::new();
        for (on, c) in [
            (self.fully_mixed, 'm'),
            (self.positive, 'p'),
            (self.negative, 'n'),
            (self.first_biased, 'f'),
            (self.second_biased, 's'),
        ] {
            if on {
                s.push(c);
            }
        }
        s
    }

    pub fn from_letters(s: &str) -> Result<BlockFlags> {
        let mut f = BlockFlags::default();
        for c in s.chars() {
            match c {
                'm' => f.fully_mixed = true,
                'p' => f.positive = true,
                'n' => f.negative = true,
                'f' => f.first_biased = true,
                's' => f.second_biased = true,
                _ => return Err(Error::input(format!("unknown block flag `{c}`"))),
            }
        }
        Ok(f)
    }
}

/// One block of `Blocks(x)`; members are parts in root-first order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub members: Vec<usize>,
    pub flags: BlockFlags,
    pub minus_marker: Option<usize>,
    pub plus_marker: Option<usize>,
}

impl Block {
    pub fn top(&self) -> usize {
        self.members[0]
    }
}

/// Landmark sets of a part; every list is root-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Landmarks {
    pub q: Vec<usize>,
    pub s: Vec<usize>,
    pub l: Vec<usize>,
    pub lhat: Vec<usize>,
}

/// A vertex whose meet with part `x` lies in `P(x)`.
#[derive(Clone, Copy, Debug)]
struct Meet {
    vertex: usize,
    /// Index of the meet inside `P(x)`.
    pos: usize,
    /// Bit `γ` set iff `x` is `(γ, y)`-adjacent to the vertex.
    adj: u64,
}

pub struct SplendidAnalysis<'a> {
    t: &'a NlcTree,
    p: Factorization,
    q: QuotientTree,
    gamma: RamseyPartition,
    vclass: Vec<usize>,
    /// `P(x)` per part, root first.
    pfx: Vec<Vec<usize>>,
    meets: Vec<Vec<Meet>>,
    /// `below[y]` has bit `γ` set iff some `γ`-vertex sits in the subtree of `y`.
    below: Vec<u64>,
}

impl<'a> SplendidAnalysis<'a> {
    pub fn new(t: &'a NlcTree, p: &Factorization) -> Result<Self> {
        let q = quotient(t, p)?;
        let labels: Vec<SkFun> = q.labels().cloned().collect();
        let gamma = ramsey_partition(&labels, t.k())
            .map_err(|e| Error::input(format!("quotient is not splendid: {e}")))?;
        if gamma.len() > 64 {
            return Err(Error::limit("more than 64 colour classes"));
        }
        let tree = t.tree();
        let y = &q.tree;
        let np = p.len();
        let vclass: Vec<usize> = (0..t.vertex_count())
            .map(|v| gamma.class_of(t.kappa(v, p.top(q.varpi[v])).unwrap()))
            .collect();
        let mut below = vec![0u64; np];
        for v in 0..t.vertex_count() {
            let mut x = Some(q.varpi[v]);
            while let Some(z) = x {
                below[z] |= 1 << vclass[v];
                x = y.parent(z);
            }
        }
        let ups: Vec<Vec<Color>> = (0..t.vertex_count()).map(|v| t.colors_up(v)).collect();
        let mut pfx = Vec::with_capacity(np);
        let mut meets = Vec::with_capacity(np);
        for x in 0..np {
            let d = y.depth(x);
            let px: Vec<usize> = if d >= 2 {
                let gp = y.ancestor_at_depth(x, d - 2);
                let mut path = y.path_up(gp, y.root()).unwrap();
                path.reverse();
                let mut out = vec![y.root()];
                out.extend(path);
                out
            } else {
                Vec::new()
            };
            // colours of each class representative carried up from the top of x
            let tx = p.top(x);
            let mut carried: Vec<Vec<Color>> = Vec::with_capacity(gamma.len());
            for class in gamma.classes() {
                let mut col = vec![0; tree.depth(tx) + 1];
                let mut c = class[0];
                let mut a = tx;
                loop {
                    col[tree.depth(a)] = c;
                    match tree.parent(a) {
                        Some(b) => {
                            c = t.rho(a).unwrap().apply(c);
                            a = b;
                        }
                        None => break,
                    }
                }
                carried.push(col);
            }
            let mut mx = Vec::new();
            if !px.is_empty() {
                for v in 0..t.vertex_count() {
                    let meet = y.meet(x, q.varpi[v]);
                    if y.depth(meet) + 2 > d {
                        continue;
                    }
                    let a = tree.meet(tx, t.attach(v));
                    let da = tree.depth(a);
                    let mut adj = 0u64;
                    for (g, col) in carried.iter().enumerate() {
                        if t.eta(a).contains(&(ups[v][da], col[da])) {
                            adj |= 1 << g;
                        }
                    }
                    mx.push(Meet { vertex: v, pos: y.depth(meet), adj });
                }
            }
            pfx.push(px);
            meets.push(mx);
        }
        Ok(SplendidAnalysis { t, p: p.clone(), q, gamma, vclass, pfx, meets, below })
    }

    pub fn tree(&self) -> &NlcTree {
        self.t
    }

    pub fn factorization(&self) -> &Factorization {
        &self.p
    }

    pub fn quotient(&self) -> &QuotientTree {
        &self.q
    }

    pub fn gamma(&self) -> &RamseyPartition {
        &self.gamma
    }

    pub fn class_count(&self) -> usize {
        self.gamma.len()
    }

    pub fn part_count(&self) -> usize {
        self.p.len()
    }

    /// `γ(v)`: class of `κ(v, ⊤(ϖ(v)))`.
    pub fn gamma_of_vertex(&self, v: usize) -> usize {
        self.vclass[v]
    }

    /// `P(x)`: strict ancestors of `x` above its parent, root first.
    pub fn p_of(&self, x: usize) -> &[usize] {
        &self.pfx[x]
    }

    /// Raw adjacency test with an explicit colour `m` carried up from `⊤(x)`.
    pub fn adjacent_via(&self, x: usize, m: Color, v: usize) -> bool {
        let tree = self.t.tree();
        let a = tree.meet(self.p.top(x), self.t.attach(v));
        let carried = self.t.path_rho(self.p.top(x), a).unwrap().apply(m);
        self.t.eta(a).contains(&(self.t.kappa(v, a).unwrap(), carried))
    }

    /// Whether `x` is `(γ, y)`-adjacent to `v`; requires `y ∈ P(x)` and `x ∧ ϖ(v) = y`.
    pub fn gamma_adjacent(&self, x: usize, gamma: usize, y: usize, v: usize) -> Result<bool> {
        if x >= self.part_count() || v >= self.t.vertex_count() || gamma >= self.class_count() {
            return Err(Error::input("argument out of range"));
        }
        if !self.pfx[x].contains(&y) || self.q.tree.meet(x, self.q.varpi[v]) != y {
            return Err(Error::input(format!("part {y} is not the meet of {x} and vertex {v} inside P(x)")));
        }
        Ok(self.adjacent_via(x, self.gamma.classes()[gamma][0], v))
    }

    /// `Types(x)` for the class pair, aligned with `P(x)`.
    pub fn types(&self, x: usize, g0: usize, g1: usize) -> Vec<PairType> {
        let len = self.pfx[x].len();
        // (adjacent, total) per position, for each coordinate
        let mut c0 = vec![(0usize, 0usize); len];
        let mut c1 = vec![(0usize, 0usize); len];
        for m in &self.meets[x] {
            let cls = self.vclass[m.vertex];
            if cls == g1 {
                c0[m.pos].1 += 1;
                c0[m.pos].0 += (m.adj >> g0 & 1) as usize;
            }
            if cls == g0 {
                c1[m.pos].1 += 1;
                c1[m.pos].0 += (m.adj >> g1 & 1) as usize;
            }
        }
        (0..len)
            .map(|i| PairType(Sym::from_counts(c0[i].0, c0[i].1), Sym::from_counts(c1[i].0, c1[i].1)))
            .collect()
    }

    /// `tp^x_{γ0,γ1}(y)` for a single `y ∈ P(x)`.
    pub fn compute_type(&self, x: usize, g0: usize, g1: usize, y: usize) -> Result<PairType> {
        let pos = self.pfx[x]
            .iter()
            .position(|&z| z == y)
            .ok_or_else(|| Error::input(format!("part {y} is not in P({x})")))?;
        Ok(self.types(x, g0, g1)[pos])
    }

    pub fn blocks(&self, x: usize, g0: usize, g1: usize) -> Vec<Block> {
        blocks_from_types(&self.pfx[x], &self.types(x, g0, g1))
    }

    pub fn landmarks(&self, x: usize, g0: usize, g1: usize) -> Landmarks {
        let y = &self.q.tree;
        let mut q = vec![x];
        if let Some(p) = y.parent(x) {
            q.insert(0, p);
        }
        let mut s = Vec::new();
        for b in self.blocks(x, g0, g1) {
            s.push(b.top());
            s.extend(b.minus_marker);
            s.extend(b.plus_marker);
        }
        let depth_sorted = |mut v: Vec<usize>| {
            v.sort_by_key(|&z| y.depth(z));
            v.dedup();
            v
        };
        let s = depth_sorted(s);
        let l = depth_sorted(q.iter().chain(&s).copied().collect());
        // L̂: members of Ł, their parents, and their child and grandchild toward x
        let dx = y.depth(x);
        let mut hat = Vec::new();
        for &z in &l {
            let dz = y.depth(z);
            hat.push(z);
            hat.extend(y.parent(z));
            for step in 1..=2 {
                if dz + step <= dx {
                    hat.push(y.ancestor_at_depth(x, dz + step));
                }
            }
        }
        Landmarks { q: depth_sorted(q), s, l, lhat: depth_sorted(hat) }
    }

    /// `g_γ(x)`: deepest ancestor of `x` with a `γ`-vertex in its subtree.
    pub fn g(&self, x: usize, gamma: usize) -> Option<usize> {
        let mut z = Some(x);
        while let Some(c) = z {
            if self.below[c] >> gamma & 1 == 1 {
                return Some(c);
            }
            z = self.q.tree.parent(c);
        }
        None
    }

    /// `ĝ_γ(x)`: child of `g_γ(x)` toward `x`.
    pub fn ghat(&self, x: usize, gamma: usize) -> Option<usize> {
        let g = self.g(x, gamma)?;
        (g != x).then(|| self.q.tree.ancestor_at_depth(x, self.q.tree.depth(g) + 1))
    }

    /// `h_γ(y)`: the unique grandchild of `y` whose subtree holds every
    /// `γ`-vertex of the subtree of `y`.
    pub fn h(&self, y: usize, gamma: usize) -> Option<usize> {
        let yt = &self.q.tree;
        let grandchildren: Vec<usize> =
            yt.children(y).iter().flat_map(|&c| yt.children(c).iter().copied()).collect();
        let count_in = |root: usize| {
            (0..self.t.vertex_count())
                .filter(|&v| self.vclass[v] == gamma && yt.is_ancestor(root, self.q.varpi[v]))
                .count()
        };
        let total = count_in(y);
        let mut found = None;
        for gc in grandchildren {
            if count_in(gc) == total {
                if found.is_some() {
                    return None;
                }
                found = Some(gc);
            }
        }
        found
    }

    /// `ϱ(path_Y(x, y))` for an ancestor `y` of `x`.
    pub fn varrho_path(&self, x: usize, y: usize) -> SkFun {
        self.t.path_rho(self.p.top(x), self.p.top(y)).unwrap()
    }

    /// Maximal alternation chains along `Types(x)`, one per forbidden pattern.
    ///
    /// Pattern 0 alternates first coordinates in `{+,±}` (the `y_i`) with
    /// second coordinates in `{−,±}` (the `z_i`); pattern 1 swaps the signs.
    /// Each chain is returned bottom-up as `[y_1, z_1, y_2, z_2, ...]`.
    pub fn alternations(&self, x: usize, g0: usize, g1: usize) -> [Vec<usize>; 2] {
        let types = self.types(x, g0, g1);
        let px = &self.pfx[x];
        let scan = |y_ok: fn(Sym) -> bool, z_ok: fn(Sym) -> bool| {
            // greedy from the deepest node upward: y_1 first, then z_1, ...
            let mut chain = Vec::new();
            let mut want_y = true;
            for i in (0..px.len()).rev() {
                let t = types[i];
                if want_y && y_ok(t.0) {
                    chain.push(px[i]);
                    want_y = false;
                } else if !want_y && z_ok(t.1) {
                    chain.push(px[i]);
                    want_y = true;
                }
            }
            if chain.len() % 2 == 1 {
                chain.pop();
            }
            chain
        };
        [scan(Sym::has_plus, Sym::has_minus), scan(Sym::has_minus, Sym::has_plus)]
    }

    /// Builds a semi-induced half-graph from an alternation chain
    /// `[y_1, z_1, ..., y_ℓ, z_ℓ]` (bottom-up) of the given pattern.
    ///
    /// Returns vertex sets `(A, B)` with `A_p` adjacent to `B_q` iff `p <= q`,
    /// checked against the generated graph before returning.
    pub fn extract_halfgraph_witness(
        &self,
        x: usize,
        g0: usize,
        g1: usize,
        pattern: usize,
        chain: &[usize],
    ) -> Result<(Vec<usize>, Vec<usize>)> {
        if !chain.len().is_multiple_of(2) || pattern > 1 {
            return Err(Error::input("chain must list (y_i, z_i) pairs"));
        }
        let ell = chain.len() / 2;
        let pos = |z: usize| self.pfx[x].iter().position(|&w| w == z);
        let yt = &self.q.tree;
        // v_i: γ1-vertex meeting x at y_i, adjacent (pattern 0) or not (pattern 1)
        // w_i: γ0-vertex meeting x at z_i, non-adjacent (pattern 0) or adjacent (pattern 1)
        let pick = |node: usize, class: usize, test_class: usize, want_adj: bool| -> Result<usize> {
            let p = pos(node).ok_or_else(|| Error::input(format!("part {node} not in P({x})")))?;
            self.meets[x]
                .iter()
                .find(|m| {
                    m.pos == p && self.vclass[m.vertex] == class && (m.adj >> test_class & 1 == 1) == want_adj
                })
                .map(|m| m.vertex)
                .ok_or_else(|| Error::input(format!("part {node} does not carry the required type symbol")))
        };
        let mut v = Vec::with_capacity(ell);
        let mut w = Vec::with_capacity(ell);
        for i in 0..ell {
            let (yi, zi) = (chain[2 * i], chain[2 * i + 1]);
            if !(yt.is_ancestor(zi, yi) && zi != yi) || (i > 0 && !(yt.is_ancestor(yi, chain[2 * i - 1]) && yi != chain[2 * i - 1])) {
                return Err(Error::input("chain is not strictly ascending"));
            }
            v.push(pick(yi, g1, g0, pattern == 0)?);
            w.push(pick(zi, g0, g1, pattern == 1)?);
        }
        let order = ell.saturating_sub(1) / 3;
        // 1-based indices: pattern 0 uses a_p = w_{3p-1}, b_q = v_{3q+1};
        // pattern 1 uses a_p = v_{3p-2}, b_q = w_{3q-1}.
        let (a, b): (Vec<usize>, Vec<usize>) = if pattern == 0 {
            ((1..=order).map(|p| w[3 * p - 2]).collect(), (1..=order).map(|q| v[3 * q]).collect())
        } else {
            ((1..=order).map(|p| v[3 * p - 3]).collect(), (1..=order).map(|q| w[3 * q - 2]).collect())
        };
        for (pi, &ap) in a.iter().enumerate() {
            for (qi, &bq) in b.iter().enumerate() {
                if self.t.adjacent(ap, bq)? != (pi <= qi) {
                    return Err(Error::invariant(format!(
                        "witness pattern broken at a_{} b_{} for part {x}",
                        pi + 1,
                        qi + 1
                    )));
                }
            }
        }
        Ok((a, b))
    }
}

/// Greedy split of a type sequence into longest valid intervals.
pub fn blocks_from_types(nodes: &[usize], types: &[PairType]) -> Vec<Block> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < types.len() {
        let run = |ok: fn(PairType) -> bool| types[i..].iter().take_while(|&&t| ok(t)).count();
        let mut len = [run(PairType::positive), run(PairType::negative), run(PairType::first_biased), run(PairType::second_biased)]
            .into_iter()
            .max()
            .unwrap();
        if len == 0 {
            // only a fully mixed single node remains possible
            len = 1;
        }
        let members = nodes[i..i + len].to_vec();
        let tys = &types[i..i + len];
        out.push(Block {
            flags: BlockFlags::of(tys),
            minus_marker: tys.iter().position(|t| t.has_minus()).map(|j| members[j]),
            plus_marker: tys.iter().position(|t| t.has_plus()).map(|j| members[j]),
            members,
        });
        i += len;
    }
    out
}
