use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::nlc::ColorPair;
use crate::semigroup::Color;

/// Key of a relation: `(level, name)`.
pub type RelKey = (usize, String);

/// The superposed structure over tree nodes and graph vertices.
///
/// Unary partial functions connect elements and show up in the Gaifman graph.
/// Tags are unary predicates carrying a value; they add no edges. All node
/// and vertex references are global ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EncodedStructure {
    pub k: usize,
    pub levels: usize,
    pub h_audit: Option<usize>,
    pub funs: BTreeMap<RelKey, BTreeMap<usize, usize>>,
    pub tags: BTreeMap<RelKey, BTreeMap<usize, String>>,
    pub eta1: BTreeMap<usize, BTreeSet<ColorPair>>,
    /// Vertex id to `(π(v), χ(v))`.
    pub vmap: BTreeMap<usize, (usize, Color)>,
    /// Level to node to the top of its factor on that level.
    pub rooti: BTreeMap<usize, BTreeMap<usize, usize>>,
}

impl EncodedStructure {
    pub fn set_fun(&mut self, level: usize, name: &str, from: usize, to: usize) {
        self.funs.entry((level, name.to_string())).or_default().insert(from, to);
    }

    pub fn set_tag(&mut self, level: usize, name: &str, node: usize, value: impl Into<String>) {
        self.tags.entry((level, name.to_string())).or_default().insert(node, value.into());
    }

    pub fn fun(&self, level: usize, name: &str, from: usize) -> Option<usize> {
        self.funs.get(&(level, name.to_string()))?.get(&from).copied()
    }

    pub fn tag(&self, level: usize, name: &str, node: usize) -> Option<&str> {
        self.tags.get(&(level, name.to_string()))?.get(&node).map(String::as_str)
    }

    /// Node ids, recovered from the level-1 root map.
    pub fn nodes(&self) -> Vec<usize> {
        self.rooti.get(&1).map(|m| m.keys().copied().collect()).unwrap_or_default()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.vmap.keys().copied().collect()
    }

    /// Every function entry as `(level, name, from, to)`.
    pub fn fun_entries(&self) -> impl Iterator<Item = (usize, &str, usize, usize)> {
        self.funs
            .iter()
            .flat_map(|((l, n), m)| m.iter().map(move |(&a, &b)| (*l, n.as_str(), a, b)))
    }

    pub fn to_text(&self) -> String {
        let h = self.h_audit.map_or("-".to_string(), |h| h.to_string());
        let mut s = format!("jstar levels={} k={} h_audit={h}\n", self.levels, self.k);
        for ((level, name), m) in &self.funs {
            for (a, b) in m {
                writeln!(s, "fun {level} {name} {a} {b}").unwrap();
            }
        }
        for ((level, name), m) in &self.tags {
            for (a, v) in m {
                writeln!(s, "tag {a} {level}.{name}={v}").unwrap();
            }
        }
        for (a, pairs) in &self.eta1 {
            let p = if pairs.is_empty() {
                "-".to_string()
            } else {
                pairs.iter().map(|(x, y)| format!("({x},{y})")).collect::<Vec<_>>().join(";")
            };
            writeln!(s, "eta1 {a} {p}").unwrap();
        }
        for (v, (pi, chi)) in &self.vmap {
            writeln!(s, "vmap {v} pi={pi} chi={chi}").unwrap();
        }
        for (level, m) in &self.rooti {
            for (a, r) in m {
                writeln!(s, "rooti {level} {a} {r}").unwrap();
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<EncodedStructure> {
        let mut out = EncodedStructure::default();
        let mut header = false;
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| -> Result<usize> { s.parse().map_err(|_| Error::parse(ln, format!("bad number `{s}`"))) };
            let kv = |s: &str, key: &str| -> Result<String> {
                s.strip_prefix(key)
                    .and_then(|r| r.strip_prefix('='))
                    .map(str::to_string)
                    .ok_or_else(|| Error::parse(ln, format!("expected `{key}=`")))
            };
            let arity = |n: usize| -> Result<()> {
                if parts.len() == n {
                    Ok(())
                } else {
                    Err(Error::parse(ln, format!("expected {n} fields")))
                }
            };
            match parts[0] {
                "jstar" => {
                    arity(4)?;
                    out.levels = num(&kv(parts[1], "levels")?)?;
                    out.k = num(&kv(parts[2], "k")?)?;
                    let h = kv(parts[3], "h_audit")?;
                    out.h_audit = if h == "-" { None } else { Some(num(&h)?) };
                    header = true;
                }
                "fun" => {
                    arity(5)?;
                    out.set_fun(num(parts[1])?, parts[2], num(parts[3])?, num(parts[4])?);
                }
                "tag" => {
                    arity(3)?;
                    let node = num(parts[1])?;
                    let (key, value) =
                        parts[2].split_once('=').ok_or_else(|| Error::parse(ln, "tag needs `name=value`"))?;
                    let (level, name) =
                        key.split_once('.').ok_or_else(|| Error::parse(ln, "tag name needs a level prefix"))?;
                    out.set_tag(num(level)?, name, node, value);
                }
                "eta1" => {
                    arity(3)?;
                    let mut set = BTreeSet::new();
                    if parts[2] != "-" {
                        for item in parts[2].split(';') {
                            let inner = item
                                .strip_prefix('(')
                                .and_then(|r| r.strip_suffix(')'))
                                .ok_or_else(|| Error::parse(ln, format!("bad pair `{item}`")))?;
                            let (a, b) = inner.split_once(',').ok_or_else(|| Error::parse(ln, "bad pair"))?;
                            set.insert((num(a)? as Color, num(b)? as Color));
                        }
                    }
                    out.eta1.insert(num(parts[1])?, set);
                }
                "vmap" => {
                    arity(4)?;
                    let pi = num(&kv(parts[2], "pi")?)?;
                    let chi = num(&kv(parts[3], "chi")?)?;
                    if chi == 0 || chi > Color::MAX as usize {
                        return Err(Error::parse(ln, format!("bad colour {chi}")));
                    }
                    out.vmap.insert(num(parts[1])?, (pi, chi as Color));
                }
                "rooti" => {
                    arity(4)?;
                    out.rooti.entry(num(parts[1])?).or_default().insert(num(parts[2])?, num(parts[3])?);
                }
                other => return Err(Error::parse(ln, format!("unknown record `{other}`"))),
            }
        }
        if !header {
            return Err(Error::parse(0, "missing `jstar` header"));
        }
        Ok(out)
    }
}
