//! The transformation semigroup `S_k` of all maps `[k] -> [k]`.
//!
//! Colors are 1-based throughout. An [`SkFun`] stores its table as a vector of
//! length `k`; entry `i - 1` is the image of color `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A total function `[k] -> [k]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkFun {
    table: Vec<u8>,
}

pub type Color = u8;

impl SkFun {
    pub fn new(table: Vec<u8>) -> Result<Self> {
        let k = table.len();
        if k == 0 {
            return Err(Error::input("S_k function needs k >= 1"));
        }
        if let Some(bad) = table.iter().find(|&&c| c == 0 || c as usize > k) {
            return Err(Error::input(format!("image {bad} outside [1..{k}]")));
        }
        Ok(SkFun { table })
    }

    pub fn identity(k: usize) -> Self {
        SkFun { table: (1..=k as u8).collect() }
    }

    pub fn constant(k: usize, c: Color) -> Self {
        assert!(c >= 1 && c as usize <= k);
        SkFun { table: vec![c; k] }
    }

    pub fn k(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, c: Color) -> Color {
        self.table[c as usize - 1]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &SkFun) -> Result<SkFun> {
        if self.k() != other.k() {
            return Err(Error::input(format!(
                "arity mismatch: {} vs {}",
                self.k(),
                other.k()
            )));
        }
        Ok(self.after(other))
    }

    /// Unchecked composition for callers that already know the arities agree.
    #[inline]
    pub(crate) fn after(&self, other: &SkFun) -> SkFun {
        debug_assert_eq!(self.k(), other.k());
        SkFun { table: other.table.iter().map(|&c| self.apply(c)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &c)| c as usize == i + 1)
    }

    pub fn is_idempotent(&self) -> bool {
        self.after(self) == *self
    }

    /// The kernel of the function as a canonical labelling: colors `i` and `j`
    /// receive the same label iff `f(i) == f(j)`.
    pub fn kernel(&self) -> Vec<usize> {
        canonical_labels(&self.table)
    }

    /// Image of a set of colors.
    pub fn image_of(&self, colors: &[Color]) -> Vec<Color> {
        let mut out: Vec<Color> = colors.iter().map(|&c| self.apply(c)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn canonical_labels<T: PartialEq + Copy>(values: &[T]) -> Vec<usize> {
    let mut seen: Vec<T> = Vec::new();
    values
        .iter()
        .map(|v| match seen.iter().position(|s| s == v) {
            Some(p) => p,
            None => {
                seen.push(*v);
                seen.len() - 1
            }
        })
        .collect()
}

impl fmt::Display for SkFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.k())?;
        for (i, c) in self.table.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SkFun {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (k, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("malformed S_k function `{s}`")))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("malformed arity in `{s}`")))?;
        let table = rest
            .split(',')
            .map(|v| v.trim().parse::<u8>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::input(format!("malformed table in `{s}`")))?;
        if table.len() != k {
            return Err(Error::input(format!("`{s}` lists {} values for k={k}", table.len())));
        }
        SkFun::new(table)
    }
}

/// `ρ((e_1,…,e_s)) = ρ(e_s) ∘ ⋯ ∘ ρ(e_1)`; the empty sequence yields the identity.
pub fn rho_of_path<'a, I>(k: usize, labels: I) -> Result<SkFun>
where
    I: IntoIterator<Item = &'a SkFun>,
{
    let mut acc = SkFun::identity(k);
    for f in labels {
        acc = f.compose(&acc)?;
    }
    Ok(acc)
}

/// `e ∘ f == e` for every ordered pair, including `e == f`.
pub fn is_forward_ramsey<'a, I>(set: I) -> bool
where
    I: IntoIterator<Item = &'a SkFun>,
{
    let set: Vec<&SkFun> = set.into_iter().collect();
    set.iter().all(|e| set.iter().all(|f| e.k() == f.k() && e.after(f) == **e))
}

/// A partition of `[k]` into classes `γ_1 … γ_t` such that every recorded
/// function maps each class to a single representative inside that class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyPartition {
    k: usize,
    classes: Vec<Vec<Color>>,
    class_of: Vec<usize>,
    /// `representatives[f][i]` is the common image of class `i` under the f-th function.
    representatives: Vec<Vec<Color>>,
}

impl RamseyPartition {
    /// Builds a partition from explicit classes and checks its contract against `set`.
    pub fn from_classes(k: usize, mut classes: Vec<Vec<Color>>, set: &[SkFun]) -> Result<Self> {
        for c in classes.iter_mut() {
            c.sort_unstable();
        }
        classes.sort();
        let mut class_of = vec![usize::MAX; k];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::input("empty class"));
            }
            for &m in class {
                if m == 0 || m as usize > k || class_of[m as usize - 1] != usize::MAX {
                    return Err(Error::input(format!("classes do not partition [1..{k}]")));
                }
                class_of[m as usize - 1] = i;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::input(format!("classes do not cover [1..{k}]")));
        }
        let mut representatives = Vec::with_capacity(set.len());
        for f in set {
            if f.k() != k {
                return Err(Error::input("arity mismatch"));
            }
            let mut reps = Vec::with_capacity(classes.len());
            for (i, class) in classes.iter().enumerate() {
                let img = f.image_of(class);
                if img.len() != 1 || class_of[img[0] as usize - 1] != i {
                    return Err(Error::invariant(format!(
                        "{f} does not collapse class {class:?} onto a member"
                    )));
                }
                reps.push(img[0]);
            }
            representatives.push(reps);
        }
        Ok(RamseyPartition { k, classes, class_of, representatives })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> &[Vec<Color>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing color `c`.
    pub fn class_of(&self, c: Color) -> usize {
        self.class_of[c as usize - 1]
    }

    pub fn representatives(&self) -> &[Vec<Color>] {
        &self.representatives
    }

    /// Compact text form, e.g. `1,2|3`.
    pub fn to_text(&self) -> String {
        self.classes
            .iter()
            .map(|c| c.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn parse_classes(s: &str) -> Result<Vec<Vec<Color>>> {
        s.split('|')
            .map(|class| {
                class
                    .split(',')
                    .map(|m| m.trim().parse::<u8>().map_err(|_| Error::input(format!("bad class `{s}`"))))
                    .collect()
            })
            .collect()
    }
}

/// Computes a partition satisfying the class condition for a forward-Ramsey set.
///
/// Starts from the common kernel of the set and merges each class with the
/// class holding its image until every class is mapped into itself. If that
/// fixpoint fails the contract, all set partitions of `[k]` are searched
/// (finest first, then lexicographically smallest).
pub fn ramsey_partition(set: &[SkFun], k: usize) -> Result<RamseyPartition> {
    if set.iter().any(|f| f.k() != k) {
        return Err(Error::input("arity mismatch"));
    }
    if !is_forward_ramsey(set) {
        return Err(Error::invariant("ramsey_partition called on a set that is not forward Ramsey"));
    }
    if set.is_empty() {
        return RamseyPartition::from_classes(k, (1..=k as u8).map(|m| vec![m]).collect(), set);
    }
    // label[m] = class id; m ≡ m' iff f(m) = f(m') for every f
    let signature: Vec<Vec<u8>> = (1..=k as u8).map(|m| set.iter().map(|f| f.apply(m)).collect()).collect();
    let mut label: Vec<usize> = canonical_labels_vec(&signature);
    loop {
        let mut changed = false;
        for f in set {
            for m in 1..=k {
                let img = f.apply(m as u8) as usize;
                let (a, b) = (label[m - 1], label[img - 1]);
                if a != b {
                    let (lo, hi) = (a.min(b), a.max(b));
                    for l in label.iter_mut() {
                        if *l == hi {
                            *l = lo;
                        }
                    }
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let classes = classes_from_labels(&label);
    match RamseyPartition::from_classes(k, classes, set) {
        Ok(p) => Ok(p),
        Err(_) => exhaustive_partition(set, k),
    }
}

fn canonical_labels_vec(sig: &[Vec<u8>]) -> Vec<usize> {
    let mut seen: Vec<&Vec<u8>> = Vec::new();
    sig.iter()
        .map(|s| match seen.iter().position(|t| *t == s) {
            Some(p) => p,
            None => {
                seen.push(s);
                seen.len() - 1
            }
        })
        .collect()
}

fn classes_from_labels(label: &[usize]) -> Vec<Vec<Color>> {
    let mut classes: Vec<Vec<Color>> = Vec::new();
    let mut ids: Vec<usize> = Vec::new();
    for (m, &l) in label.iter().enumerate() {
        match ids.iter().position(|&x| x == l) {
            Some(p) => classes[p].push(m as u8 + 1),
            None => {
                ids.push(l);
                classes.push(vec![m as u8 + 1]);
            }
        }
    }
    classes
}

fn exhaustive_partition(set: &[SkFun], k: usize) -> Result<RamseyPartition> {
    if k > 8 {
        return Err(Error::limit("exhaustive Ramsey partition search is limited to k <= 8"));
    }
    let mut all = Vec::new();
    let mut labels = vec![0usize; k];
    enumerate_set_partitions(0, 0, &mut labels, &mut all);
    let mut candidates: Vec<Vec<Vec<Color>>> = all.iter().map(|l| {
        let mut c = classes_from_labels(l);
        c.sort();
        c
    }).collect();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    for classes in candidates {
        if let Ok(p) = RamseyPartition::from_classes(k, classes, set) {
            return Ok(p);
        }
    }
    Err(Error::invariant("no partition satisfies the class condition; input is not forward Ramsey"))
}

fn enumerate_set_partitions(i: usize, used: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == labels.len() {
        out.push(labels.clone());
        return;
    }
    for l in 0..=used {
        labels[i] = l;
        enumerate_set_partitions(i + 1, used.max(l + 1), labels, out);
    }
}
