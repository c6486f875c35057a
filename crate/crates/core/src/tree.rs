use crate::error::{Error, Result};

/// A rooted tree over dense node indices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    root: usize,
    preorder: Vec<usize>,
}

impl RootedTree {
    /// Builds a tree from a parent array. Exactly one entry must be `None`.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::input("a tree needs at least one node"));
        }
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::input(format!("expected exactly one root, found {}", roots.len())));
        }
        let root = roots[0];
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::input(format!("parent {p} of node {v} out of range")));
                }
                children[p].push(v);
            }
        }
        let mut depth = vec![usize::MAX; n];
        let mut preorder = Vec::with_capacity(n);
        let mut stack = vec![root];
        depth[root] = 0;
        while let Some(v) = stack.pop() {
            preorder.push(v);
            for &c in children[v].iter().rev() {
                depth[c] = depth[v] + 1;
                stack.push(c);
            }
        }
        if preorder.len() != n {
            return Err(Error::input("parent links contain a cycle or disconnected nodes"));
        }
        Ok(RootedTree { parent, children, depth, root, preorder })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Number of edges on the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// DFS pre-order; children visited in increasing index order.
    pub fn preorder(&self) -> &[usize] {
        &self.preorder
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.len() {
            Err(Error::input(format!("unknown node {v}")))
        } else {
            Ok(())
        }
    }

    pub fn lca(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.meet(a, b))
    }

    pub(crate) fn meet(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].unwrap();
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap();
        }
        while a != b {
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        a
    }

    /// `a ≼ b`: `a` is an ancestor of `b` (or equal).
    pub fn is_ancestor(&self, a: usize, mut b: usize) -> bool {
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap();
        }
        a == b
    }

    /// Nodes from `y` up to (excluding) `x`; each stands for the edge to its parent.
    /// Requires `x ≼ y`.
    pub fn path_up(&self, y: usize, x: usize) -> Result<Vec<usize>> {
        self.check(x)?;
        self.check(y)?;
        if !self.is_ancestor(x, y) {
            return Err(Error::input(format!("{x} is not an ancestor of {y}")));
        }
        let mut out = Vec::new();
        let mut v = y;
        while v != x {
            out.push(v);
            v = self.parent[v].unwrap();
        }
        Ok(out)
    }

    /// The ancestor of `v` at depth `d` (`d <= depth(v)`).
    pub fn ancestor_at_depth(&self, mut v: usize, d: usize) -> usize {
        while self.depth[v] > d {
            v = self.parent[v].unwrap();
        }
        v
    }

    /// All nodes in the subtree rooted at `v`, in pre-order.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            for &c in self.children[u].iter().rev() {
                stack.push(c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> RootedTree {
        RootedTree::from_parents(vec![None, Some(0), Some(1)]).unwrap()
    }

    #[test]
    fn lca_examples() {
        let t = chain();
        assert_eq!(t.lca(2, 2).unwrap(), 2);
        assert_eq!(t.lca(0, 2).unwrap(), 0);
        assert_eq!(t.lca(1, 2).unwrap(), 1);
        assert!(t.lca(0, 7).is_err());
        let star = RootedTree::from_parents(vec![None, Some(0), Some(0), Some(1)]).unwrap();
        assert_eq!(star.lca(3, 2).unwrap(), 0);
        assert_eq!(star.height(), 2);
    }

    #[test]
    fn path_examples() {
        let t = chain();
        assert!(t.path_up(2, 2).unwrap().is_empty());
        assert_eq!(t.path_up(2, 0).unwrap(), vec![2, 1]);
        assert_eq!(t.path_up(2, 1).unwrap(), vec![2]);
        assert!(t.path_up(0, 2).is_err());
    }

    #[test]
    fn rejects_bad_parent_arrays() {
        assert!(RootedTree::from_parents(vec![]).is_err());
        assert!(RootedTree::from_parents(vec![None, None]).is_err());
        assert!(RootedTree::from_parents(vec![None, Some(2), Some(1)]).is_err());
    }
}
