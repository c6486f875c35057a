//! Adjacency recovery from an [`EncodedStructure`] alone.
//!
//! The structure is first compiled into dense per-level tables; every query
//! then walks the levels top-down, running one splendid or shallow step per
//! level until a step decides the pair or level 1 is reached.

use std::collections::BTreeMap;
use std::fmt;

use crate::encode::{BlockFlags, EncodedStructure};
use crate::error::{Error, Result};
use crate::factorize::FactorKind;
use crate::graph::Graph;
use crate::semigroup::{Color, RamseyPartition, SkFun};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeStep {
    Decided(bool),
    Recurse { d0: Color, d1: Color, t: usize, t0: usize, t1: usize },
}

impl DecodeStep {
    /// The step with the two queried sides exchanged.
    pub fn swapped(self) -> DecodeStep {
        match self {
            DecodeStep::Decided(b) => DecodeStep::Decided(b),
            DecodeStep::Recurse { d0, d1, t, t0, t1 } => DecodeStep::Recurse { d0: d1, d1: d0, t, t0: t1, t1: t0 },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    Corner1,
    Corner2,
    Corner3,
    DecidedPlus,
    DecidedMinus,
    FirstBiased,
    SecondBiased,
    ShallowSame,
    ShallowRoot,
    Leaf,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Corner1 => "corner1",
            Case::Corner2 => "corner2",
            Case::Corner3 => "corner3",
            Case::DecidedPlus => "decided+",
            Case::DecidedMinus => "decided-",
            Case::FirstBiased => "first-biased",
            Case::SecondBiased => "second-biased",
            Case::ShallowSame => "shallow-same",
            Case::ShallowRoot => "shallow-root",
            Case::Leaf => "leaf",
        })
    }
}

/// One line of `decode --trace`. Node fields hold global ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    pub level: usize,
    pub factor: usize,
    pub case: Case,
    pub step: DecodeStep,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "level={} factor={} case={}", self.level, self.factor, self.case)?;
        match self.step {
            DecodeStep::Decided(_) => write!(f, " d0=- d1=- t=- t0=- t1=-"),
            DecodeStep::Recurse { d0, d1, t, t0, t1 } => write!(f, " d0={d0} d1={d1} t={t} t0={t0} t1={t1}"),
        }
    }
}

#[derive(Clone, Debug)]
struct LEntry {
    node: usize,
    path: SkFun,
    block: Option<BlockFlags>,
}

/// Relations of one level, indexed by dense node index.
#[derive(Clone, Debug)]
struct Level {
    kind: Vec<Option<FactorKind>>,
    /// Class index of each colour, stored at factor roots.
    gamma: Vec<Option<Vec<usize>>>,
    gamma_classes: Vec<Option<Vec<Vec<Color>>>>,
    tparent: Vec<Option<usize>>,
    yparent: Vec<Option<usize>>,
    top: Vec<Option<usize>>,
    rho: Vec<Option<SkFun>>,
    varrho: Vec<Option<SkFun>>,
    rtop: Vec<Option<SkFun>>,
    /// `[class][node]`.
    g: Vec<Vec<Option<usize>>>,
    ghat: Vec<Vec<Option<usize>>>,
    gpath: Vec<Vec<Option<SkFun>>>,
    h: Vec<Vec<Option<usize>>>,
    /// `(node, slice) ↦ L̂` entries, root-first.
    lhat: BTreeMap<(usize, usize), Vec<LEntry>>,
    rooti: Vec<usize>,
    /// Depth in the quotient tree, derived from `yparent`.
    ydepth: Vec<usize>,
}

impl Level {
    fn new(n: usize) -> Level {
        Level {
            kind: vec![None; n],
            gamma: vec![None; n],
            gamma_classes: vec![None; n],
            tparent: vec![None; n],
            yparent: vec![None; n],
            top: vec![None; n],
            rho: vec![None; n],
            varrho: vec![None; n],
            rtop: vec![None; n],
            g: Vec::new(),
            ghat: Vec::new(),
            gpath: Vec::new(),
            h: Vec::new(),
            lhat: BTreeMap::new(),
            rooti: vec![usize::MAX; n],
            ydepth: vec![0; n],
        }
    }
}

fn slot<T: Clone>(v: &mut Vec<Vec<Option<T>>>, c: usize, n: usize) -> &mut Vec<Option<T>> {
    if v.len() <= c {
        v.resize(c + 1, vec![None; n]);
    }
    &mut v[c]
}

fn corrupt(msg: impl Into<String>) -> Error {
    Error::corruption(msg.into())
}

fn get<T: Clone>(v: &[Option<T>], a: usize, what: &str) -> Result<T> {
    v.get(a).cloned().flatten().ok_or_else(|| corrupt(format!("missing {what} entry")))
}

/// A compiled, read-only view of an encoding.
#[derive(Clone, Debug)]
pub struct Decoder {
    k: usize,
    levels: Vec<Level>,
    ids: Vec<usize>,
    index: BTreeMap<usize, usize>,
    eta1: Vec<Vec<bool>>,
    vertex_ids: Vec<usize>,
    vertices: Vec<(usize, Color)>,
}

fn parse_index(s: &str) -> Result<usize> {
    s.parse().map_err(|_| corrupt(format!("bad relation index `{s}`")))
}

impl Decoder {
    pub fn new(j: &EncodedStructure) -> Result<Decoder> {
        let k = j.k;
        if k == 0 || k > Color::MAX as usize {
            return Err(corrupt(format!("bad colour bound k={k}")));
        }
        let ids = j.nodes();
        let n = ids.len();
        let index: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        let idx = |id: usize| index.get(&id).copied().ok_or_else(|| corrupt(format!("unknown node {id}")));
        let fun = |s: &str| -> Result<SkFun> {
            let f: SkFun = s.parse().map_err(|e| corrupt(format!("bad function `{s}`: {e}")))?;
            if f.k() != k {
                return Err(corrupt(format!("function `{s}` has wrong arity")));
            }
            Ok(f)
        };
        let mut levels: Vec<Level> = (0..=j.levels).map(|_| Level::new(n)).collect();
        for ((level, name), map) in &j.funs {
            let lv = levels.get_mut(*level).filter(|_| *level >= 2).ok_or_else(|| corrupt(format!("bad level {level}")))?;
            let parts: Vec<&str> = name.split('.').collect();
            for (&a, &b) in map {
                let (a, b) = (idx(a)?, idx(b)?);
                match parts.as_slice() {
                    ["tparent"] => lv.tparent[a] = Some(b),
                    ["yparent"] => lv.yparent[a] = Some(b),
                    ["top"] => lv.top[a] = Some(b),
                    ["g", c] => slot(&mut lv.g, parse_index(c)?, n)[a] = Some(b),
                    ["ghat", c] => slot(&mut lv.ghat, parse_index(c)?, n)[a] = Some(b),
                    ["h", c] => slot(&mut lv.h, parse_index(c)?, n)[a] = Some(b),
                    ["lhat", _, _, _] => {}
                    _ => return Err(corrupt(format!("unknown function `{name}`"))),
                }
            }
        }
        // L̂ lists need the class count of the owning factor, so they go after the tags.
        let mut lparts: BTreeMap<(usize, usize, usize, usize, usize), (Option<usize>, Option<SkFun>, Option<&str>)> =
            BTreeMap::new();
        for ((level, name), map) in &j.tags {
            let lv = levels.get_mut(*level).filter(|_| *level >= 2).ok_or_else(|| corrupt(format!("bad level {level}")))?;
            let parts: Vec<&str> = name.split('.').collect();
            for (&a, v) in map {
                let a = idx(a)?;
                match parts.as_slice() {
                    ["kind"] => lv.kind[a] = Some(v.parse().map_err(|_| corrupt(format!("bad kind `{v}`")))?),
                    ["gamma"] => {
                        let classes = RamseyPartition::parse_classes(v).map_err(|e| corrupt(e.to_string()))?;
                        let mut class_of = vec![usize::MAX; k];
                        for (i, class) in classes.iter().enumerate() {
                            for &m in class {
                                let slot = class_of
                                    .get_mut((m as usize).wrapping_sub(1))
                                    .ok_or_else(|| corrupt(format!("bad class colour {m}")))?;
                                *slot = i;
                            }
                        }
                        if class_of.contains(&usize::MAX) {
                            return Err(corrupt(format!("classes `{v}` do not cover [k]")));
                        }
                        lv.gamma[a] = Some(class_of);
                        lv.gamma_classes[a] = Some(classes);
                    }
                    ["rho"] => lv.rho[a] = Some(fun(v)?),
                    ["varrho"] => lv.varrho[a] = Some(fun(v)?),
                    ["rtop"] => lv.rtop[a] = Some(fun(v)?),
                    ["gpath", c] => slot(&mut lv.gpath, parse_index(c)?, n)[a] = Some(fun(v)?),
                    [rel @ ("lpath" | "lblock" | "lmark"), g0, g1, i] => {
                        let key = (*level, a, parse_index(g0)?, parse_index(g1)?, parse_index(i)?);
                        let e = lparts.entry(key).or_default();
                        match *rel {
                            "lpath" => e.1 = Some(fun(v)?),
                            "lblock" => e.2 = Some(v.as_str()),
                            _ => {}
                        }
                    }
                    _ => return Err(corrupt(format!("unknown tag `{name}`"))),
                }
            }
        }
        for ((level, name), map) in &j.funs {
            let parts: Vec<&str> = name.split('.').collect();
            if let ["lhat", g0, g1, i] = parts.as_slice() {
                for (&a, &b) in map {
                    let key = (*level, idx(a)?, parse_index(g0)?, parse_index(g1)?, parse_index(i)?);
                    lparts.entry(key).or_default().0 = Some(idx(b)?);
                }
            }
        }
        for (level, m) in &j.rooti {
            let lv = levels.get_mut(*level).filter(|_| *level >= 1).ok_or_else(|| corrupt(format!("bad level {level}")))?;
            for (&a, &r) in m {
                lv.rooti[idx(a)?] = idx(r)?;
            }
        }
        for (l, lv) in levels.iter().enumerate().skip(1) {
            if lv.rooti.contains(&usize::MAX) {
                return Err(corrupt(format!("root map of level {l} is incomplete")));
            }
        }
        for ((level, a, g0, g1, i), (node, path, block)) in lparts {
            let lv = &mut levels[level];
            let root = lv.rooti[a];
            let nc = lv.gamma_classes[root]
                .as_ref()
                .ok_or_else(|| corrupt(format!("landmarks stored outside a splendid factor on level {level}")))?
                .len();
            if g0 >= nc || g1 >= nc {
                return Err(corrupt("landmark slice out of range"));
            }
            let list = lv.lhat.entry((a, g0 * nc + g1)).or_default();
            if list.len() != i {
                return Err(corrupt("landmark list is not contiguous"));
            }
            let block = match block {
                None | Some("-") => None,
                Some(s) => Some(BlockFlags::from_letters(s).map_err(|e| corrupt(e.to_string()))?),
            };
            list.push(LEntry {
                node: node.ok_or_else(|| corrupt("landmark without node"))?,
                path: path.ok_or_else(|| corrupt("landmark without path"))?,
                block,
            });
        }
        for lv in levels.iter_mut().skip(2) {
            for a in 0..n {
                let mut d = 0;
                let mut y = a;
                while let Some(p) = lv.yparent[y] {
                    d += 1;
                    y = p;
                    if d > n {
                        return Err(corrupt("quotient parent relation has a cycle"));
                    }
                }
                lv.ydepth[a] = d;
            }
        }
        let mut eta1 = vec![vec![false; k * k]; n];
        for (&a, pairs) in &j.eta1 {
            let a = idx(a)?;
            for &(x, y) in pairs {
                if x == 0 || y == 0 || x as usize > k || y as usize > k {
                    return Err(corrupt(format!("eta pair ({x},{y}) out of range")));
                }
                eta1[a][(x as usize - 1) * k + y as usize - 1] = true;
            }
        }
        let mut vertex_ids = Vec::new();
        let mut vertices = Vec::new();
        for (&v, &(pi, chi)) in &j.vmap {
            if chi == 0 || chi as usize > k {
                return Err(corrupt(format!("vertex {v} has colour {chi}")));
            }
            vertex_ids.push(v);
            vertices.push((idx(pi)?, chi));
        }
        Ok(Decoder { k, levels, ids, index, eta1, vertex_ids, vertices })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_ids(&self) -> &[usize] {
        &self.vertex_ids
    }

    fn id(&self, a: usize) -> usize {
        self.ids[a]
    }

    fn to_global(&self, s: DecodeStep) -> DecodeStep {
        match s {
            DecodeStep::Decided(b) => DecodeStep::Decided(b),
            DecodeStep::Recurse { d0, d1, t, t0, t1 } => {
                DecodeStep::Recurse { d0, d1, t: self.id(t), t0: self.id(t0), t1: self.id(t1) }
            }
        }
    }

    /// The step of the factor on `level` containing the global nodes `a0`, `a1`.
    pub fn step(&self, level: usize, c0: Color, c1: Color, a0: usize, a1: usize) -> Result<(DecodeStep, Case)> {
        let lv = self.levels.get(level).filter(|_| level >= 2).ok_or_else(|| Error::input(format!("no level {level}")))?;
        let node = |id: usize| self.index.get(&id).copied().ok_or_else(|| Error::input(format!("unknown node {id}")));
        for c in [c0, c1] {
            if c == 0 || c as usize > self.k {
                return Err(Error::input(format!("colour {c} out of range")));
            }
        }
        let (s, case) = self.step_dense(lv, c0, c1, node(a0)?, node(a1)?)?;
        Ok((self.to_global(s), case))
    }

    fn step_dense(&self, lv: &Level, c0: Color, c1: Color, a0: usize, a1: usize) -> Result<(DecodeStep, Case)> {
        let r = lv.rooti[a0];
        if lv.rooti[a1] != r {
            return Err(corrupt(format!("nodes {} and {} lie in different factors", self.id(a0), self.id(a1))));
        }
        match lv.kind[r] {
            Some(FactorKind::Splendid) => self.splendid(lv, r, c0, c1, a0, a1),
            Some(FactorKind::Shallow) => self.shallow(lv, r, c0, c1, a0, a1),
            Some(FactorKind::Leaf) => {
                if a0 != a1 {
                    return Err(corrupt(format!("leaf factor {} holds two nodes", self.id(r))));
                }
                Ok((DecodeStep::Recurse { d0: c0, d1: c1, t: r, t0: a0, t1: a1 }, Case::Leaf))
            }
            None => Err(corrupt(format!("factor {} has no kind", self.id(r)))),
        }
    }

    fn shallow(&self, lv: &Level, r: usize, c0: Color, c1: Color, a0: usize, a1: usize) -> Result<(DecodeStep, Case)> {
        let x0 = get(&lv.top, a0, "top")?;
        let x1 = get(&lv.top, a1, "top")?;
        if x0 == x1 {
            return Ok((DecodeStep::Recurse { d0: c0, d1: c1, t: x0, t0: a0, t1: a1 }, Case::ShallowSame));
        }
        let side = |x: usize, a: usize, c: Color| -> Result<(usize, Color)> {
            if x == r {
                return Ok((a, c));
            }
            let t = get(&lv.tparent, x, "tparent")?;
            let d = get(&lv.rho, x, "rho")?.apply(get(&lv.rtop, a, "rtop")?.apply(c));
            Ok((t, d))
        };
        let (t0, d0) = side(x0, a0, c0)?;
        let (t1, d1) = side(x1, a1, c1)?;
        Ok((DecodeStep::Recurse { d0, d1, t: r, t0, t1 }, Case::ShallowRoot))
    }

    fn splendid(&self, lv: &Level, r: usize, c0: Color, c1: Color, a0: usize, a1: usize) -> Result<(DecodeStep, Case)> {
        let class_of = lv.gamma[r].as_ref().ok_or_else(|| corrupt("splendid factor without classes"))?;
        let classes = lv.gamma_classes[r].as_ref().unwrap();
        let nc = classes.len();
        let x0 = get(&lv.top, a0, "top")?;
        let x1 = get(&lv.top, a1, "top")?;
        let k0 = get(&lv.rtop, a0, "rtop")?.apply(c0);
        let k1 = get(&lv.rtop, a1, "rtop")?.apply(c1);
        let (g0, g1) = (class_of[k0 as usize - 1], class_of[k1 as usize - 1]);
        let slice = g0 * nc + g1;
        let empty = Vec::new();
        let l0 = lv.lhat.get(&(x0, slice)).unwrap_or(&empty);
        let l1 = lv.lhat.get(&(x1, slice)).unwrap_or(&empty);

        // deepest common entry; both lists are root-first chains of ancestors
        let mut zt = None;
        let (mut i, mut j) = (0, 0);
        while i < l0.len() && j < l1.len() {
            let (p, q) = (l0[i].node, l1[j].node);
            let (dp, dq) = (lv.ydepth[p], lv.ydepth[q]);
            if dp < dq {
                i += 1;
            } else if dq < dp {
                j += 1;
            } else if p == q {
                zt = Some(p);
                i += 1;
                j += 1;
            } else {
                break;
            }
        }

        let recurse = |d0, d1, t, t0, t1| DecodeStep::Recurse { d0, d1, t, t0, t1 };
        // (t_i, d_i) through a child `z'` of the meet found in `L̂(x_i)`
        let via_child = |e: &LEntry, kc: Color| -> Result<(usize, Color)> {
            let t = get(&lv.tparent, e.node, "tparent")?;
            Ok((t, get(&lv.rho, e.node, "rho")?.apply(e.path.apply(kc))))
        };
        if let Some(zt) = zt {
            if x0 == zt && x1 == zt {
                return Ok((recurse(c0, c1, zt, a0, a1), Case::Corner1));
            }
            let child = |l: &'_ [LEntry]| l.iter().find(|e| lv.yparent[e.node] == Some(zt)).cloned();
            let (z0, z1) = (child(l0), child(l1));
            match (z0, z1) {
                (Some(e0), Some(e1)) => {
                    let (t0, d0) = via_child(&e0, k0)?;
                    let (t1, d1) = via_child(&e1, k1)?;
                    return Ok((recurse(d0, d1, zt, t0, t1), Case::Corner2));
                }
                (None, Some(e1)) if x0 == zt => {
                    let (t1, d1) = via_child(&e1, k1)?;
                    return Ok((recurse(c0, d1, zt, a0, t1), Case::Corner3));
                }
                (Some(e0), None) if x1 == zt => {
                    let (t0, d0) = via_child(&e0, k0)?;
                    return Ok((recurse(d0, c1, zt, t0, a1), Case::Corner3));
                }
                _ => {}
            }
        }

        let starts = |l: &'_ [LEntry]| -> Vec<(usize, BlockFlags)> {
            l.iter().filter_map(|e| e.block.map(|b| (e.node, b))).collect()
        };
        let (sa, sb) = (starts(l0), starts(l1));
        let (fa, fb) = sa
            .iter()
            .zip(&sb)
            .filter(|(a, b)| a.0 == b.0)
            .map(|(a, b)| (a.1, b.1))
            .next_back()
            .ok_or_else(|| corrupt(format!("parts {} and {} share no block top", self.id(x0), self.id(x1))))?;
        if fa.fully_mixed || fb.fully_mixed {
            return Err(corrupt(format!("fully mixed block on parts {} and {}", self.id(x0), self.id(x1))));
        }
        for f in [fa, fb] {
            if !f.biased() {
                return match (f.positive, f.negative) {
                    (true, false) => Ok((DecodeStep::Decided(true), Case::DecidedPlus)),
                    (false, true) => Ok((DecodeStep::Decided(false), Case::DecidedMinus)),
                    _ => Err(corrupt("unbiased block is neither positive nor negative")),
                };
            }
        }
        // both biased: localise the meet through g/h of the class on the biased side
        let first = fa.first_biased && fb.first_biased;
        if !first && !(fa.second_biased && fb.second_biased) {
            return Err(corrupt("biased blocks disagree on their bias"));
        }
        let (gam, xn, kn, an, cn) = if first { (g0, x1, k1, a1, c1) } else { (g1, x0, k0, a0, c0) };
        let z = get(lv.g.get(gam).map_or(&[][..], |v| v), xn, "g")?;
        let zh = get(lv.h.get(gam).map_or(&[][..], |v| v), z, "h")
            .map_err(|_| corrupt(format!("h of class {gam} undefined at part {}", self.id(z))))?;
        let zp = get(&lv.yparent, zh, "yparent")?;
        let img = get(&lv.varrho, zh, "varrho")?.image_of(&classes[gam]);
        let [dq] = img[..] else {
            return Err(corrupt(format!("class {gam} has {} images under the label of {}", img.len(), self.id(zh))));
        };
        let t_h = get(&lv.tparent, zp, "tparent")?;
        let d_h = get(&lv.rho, zp, "rho")?.apply(dq);
        let (t_n, d_n) = match lv.ghat.get(gam).and_then(|v| v[xn]) {
            None => {
                if xn != z {
                    return Err(corrupt("ghat undefined away from g"));
                }
                (an, cn)
            }
            Some(w) => {
                let p = get(lv.gpath.get(gam).map_or(&[][..], |v| v), xn, "gpath")?;
                (get(&lv.tparent, w, "tparent")?, get(&lv.rho, w, "rho")?.apply(p.apply(kn)))
            }
        };
        if first {
            Ok((recurse(d_h, d_n, z, t_h, t_n), Case::FirstBiased))
        } else {
            Ok((recurse(d_n, d_h, z, t_n, t_h), Case::SecondBiased))
        }
    }

    fn vertex(&self, u: usize) -> Result<(usize, Color)> {
        let i = self.vertex_ids.binary_search(&u).map_err(|_| Error::input(format!("unknown vertex {u}")))?;
        Ok(self.vertices[i])
    }

    fn run(&self, u0: usize, u1: usize, mut trace: Option<&mut Vec<TraceLine>>) -> Result<bool> {
        if u0 == u1 {
            self.vertex(u0)?;
            return Ok(false);
        }
        let ((mut a0, mut c0), (mut a1, mut c1)) = (self.vertex(u0)?, self.vertex(u1)?);
        let top = self.levels.len() - 1;
        for level in (2..=top).rev() {
            let lv = &self.levels[level];
            let r = lv.rooti[a0];
            let ctx = |e: Error| corrupt(format!("vertices {u0},{u1} at level {level}: {e}"));
            let (step, case) = self.step_dense(lv, c0, c1, a0, a1).map_err(ctx)?;
            if let Some(tr) = trace.as_deref_mut() {
                tr.push(TraceLine { level, factor: self.id(r), case, step: self.to_global(step) });
            }
            match step {
                DecodeStep::Decided(b) => return Ok(b),
                DecodeStep::Recurse { d0, d1, t, t0, t1 } => {
                    let below = &self.levels[level - 1];
                    if below.rooti[t0] != t || below.rooti[t1] != t {
                        return Err(ctx(corrupt(format!("step points at {} outside its factor", self.id(t)))));
                    }
                    (a0, c0, a1, c1) = (t0, d0, t1, d1);
                }
            }
        }
        if a0 != a1 {
            return Err(corrupt(format!("vertices {u0},{u1}: level 1 reached with distinct nodes")));
        }
        let adj = self.eta1[a0][(c0 as usize - 1) * self.k + c1 as usize - 1];
        if let Some(tr) = trace {
            let case = if adj { Case::DecidedPlus } else { Case::DecidedMinus };
            let a = self.id(a0);
            tr.push(TraceLine { level: 1, factor: a, case, step: DecodeStep::Recurse { d0: c0, d1: c1, t: a, t0: a, t1: a } });
        }
        Ok(adj)
    }

    /// Adjacency of two vertices given by global id.
    pub fn adjacent(&self, u0: usize, u1: usize) -> Result<bool> {
        self.run(u0, u1, None)
    }

    pub fn trace(&self, u0: usize, u1: usize) -> Result<(bool, Vec<TraceLine>)> {
        let mut lines = Vec::new();
        let b = self.run(u0, u1, Some(&mut lines))?;
        Ok((b, lines))
    }

    /// The decoded graph over vertex ordinals (vertices in increasing id order).
    pub fn full(&self) -> Result<Graph> {
        let ids = &self.vertex_ids;
        let mut g = Graph::new(ids.len());
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if self.adjacent(ids[i], ids[j])? {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }
}

pub fn decode_adjacent(j: &EncodedStructure, u0: usize, u1: usize) -> Result<bool> {
    Decoder::new(j)?.adjacent(u0, u1)
}

pub fn decode_full(j: &EncodedStructure) -> Result<Graph> {
    Decoder::new(j)?.full()
}
