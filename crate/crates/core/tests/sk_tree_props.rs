mod common;

use nlcenc::factorize::recursive_factorize;
use nlcenc::nlc::{quotient, Factorization, NlcTree};
use nlcenc::semigroup::SkFun;
use proptest::prelude::*;

/// Adjacency straight from the definition: walk both vertices up to their
/// meet, recolouring along the way, and look the pair up in `η`.
fn oracle_adjacent(t: &NlcTree, u: usize, v: usize) -> bool {
    if u == v {
        return false;
    }
    let tree = t.tree();
    let (mut a, mut b) = (t.attach(u), t.attach(v));
    let (mut cu, mut cv) = (t.color(u), t.color(v));
    while tree.depth(a) > tree.depth(b) {
        cu = t.rho(a).unwrap().apply(cu);
        a = tree.parent(a).unwrap();
    }
    while tree.depth(b) > tree.depth(a) {
        cv = t.rho(b).unwrap().apply(cv);
        b = tree.parent(b).unwrap();
    }
    while a != b {
        cu = t.rho(a).unwrap().apply(cu);
        cv = t.rho(b).unwrap().apply(cv);
        a = tree.parent(a).unwrap();
        b = tree.parent(b).unwrap();
    }
    t.eta(a).contains(&(cu, cv))
}

/// Parts of every level of the recursive factorization of `t`.
fn some_factorizations(t: &NlcTree) -> Vec<Factorization> {
    let rf = recursive_factorize(t).unwrap();
    (1..=rf.levels)
        .map(|l| Factorization::from_labels(t.tree(), &rf.factor_of_nodes(l, t.node_count())).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_graph_matches_definition(t in common::tree(20, 25)) {
        let g = t.generate_graph();
        prop_assert_eq!(g.len(), t.vertex_count());
        for u in 0..g.len() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.len() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
                prop_assert_eq!(g.has_edge(u, v), oracle_adjacent(&t, u, v));
            }
        }
    }

    #[test]
    fn adjacency_is_local_to_factors(t in common::tree(20, 25)) {
        let g = t.generate_graph();
        let tree = t.tree();
        for p in some_factorizations(&t) {
            for i in 0..p.len() {
                let part = p.part(i);
                let sub = t.induced_factor(part).unwrap();
                let sg = sub.generate_graph();
                let in_part = |x: usize| part.contains(&x);
                for (su, &uid) in sub.vertex_ids().iter().enumerate() {
                    for (sv, &vid) in sub.vertex_ids().iter().enumerate() {
                        let (u, v) = (t.vertex_index(uid).unwrap(), t.vertex_index(vid).unwrap());
                        if in_part(tree.lca(t.attach(u), t.attach(v)).unwrap()) {
                            prop_assert_eq!(g.has_edge(u, v), sg.has_edge(su, sv));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kappa_agrees_with_induced_factor(t in common::tree(20, 25)) {
        let tree = t.tree();
        for p in some_factorizations(&t) {
            for i in 0..p.len() {
                let sub = t.induced_factor(p.part(i)).unwrap();
                for (sv, &vid) in sub.vertex_ids().iter().enumerate() {
                    let v = t.vertex_index(vid).unwrap();
                    for (sx, &xid) in sub.node_ids().iter().enumerate() {
                        let x = t.node_index(xid).unwrap();
                        if sub.tree().is_ancestor(sx, sub.attach(sv)) {
                            prop_assert!(tree.is_ancestor(x, t.attach(v)));
                            prop_assert_eq!(t.kappa(v, x).unwrap(), sub.kappa(sv, sx).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn path_label_splits_through_quotient(t in common::tree(20, 25)) {
        let tree = t.tree();
        for p in some_factorizations(&t) {
            let q = quotient(&t, &p).unwrap();
            let y = &q.tree;
            for v in 0..t.vertex_count() {
                let pv = t.attach(v);
                let xv = p.part_of(pv);
                for a in 0..t.node_count() {
                    let f = p.part_of(a);
                    if !tree.is_ancestor(a, pv) || f == xv {
                        continue;
                    }
                    // F' is the child of F on the way down to ϖ(v)
                    let fp = y.ancestor_at_depth(xv, y.depth(f) + 1);
                    let top_fp = p.top(fp);
                    let inside_x = t.path_rho(pv, p.top(xv)).unwrap();
                    let across: SkFun = t.path_rho(p.top(xv), top_fp).unwrap();
                    let up_edge = t.rho(top_fp).unwrap();
                    let inside_f = t.path_rho(tree.parent(top_fp).unwrap(), a).unwrap();
                    let composed = inside_f.compose(&up_edge.compose(&across.compose(&inside_x).unwrap()).unwrap()).unwrap();
                    prop_assert_eq!(composed, t.path_rho(pv, a).unwrap());
                    if fp == xv {
                        prop_assert_eq!(q.varrho[xv].as_ref(), Some(&t.path_rho(p.top(xv), p.top(y.parent(xv).unwrap())).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn nested_factors_coincide(t in common::tree(20, 25)) {
        let ps = some_factorizations(&t);
        // levels refine upward: every finer part sits inside a coarser one
        for w in ps.windows(2) {
            let (fine, coarse) = (&w[0], &w[1]);
            for i in 0..coarse.len() {
                let outer = t.induced_factor(coarse.part(i)).unwrap();
                for j in 0..fine.len() {
                    let part = fine.part(j);
                    if !coarse.part(i).contains(&part[0]) {
                        continue;
                    }
                    let local: Vec<usize> = part.iter().map(|&x| outer.node_index(t.node_id(x)).unwrap()).collect();
                    prop_assert_eq!(outer.induced_factor(&local).unwrap(), t.induced_factor(part).unwrap());
                }
            }
        }
    }

    #[test]
    fn text_form_round_trips(t in common::tree(30, 40)) {
        let text = t.to_text();
        let back = NlcTree::parse(&text).unwrap();
        prop_assert_eq!(back.to_text(), text);
        prop_assert_eq!(back, t);
    }
}

#[test]
fn lca_and_paths_on_a_chain() {
    let t = common::identity_path(3, &[(2, 1)], &[]);
    let tree = t.tree();
    assert_eq!(tree.lca(1, 1).unwrap(), 1);
    assert_eq!(tree.lca(0, 2).unwrap(), 0);
    assert_eq!(tree.lca(1, 2).unwrap(), 1);
    assert!(tree.lca(0, 9).is_err());
    assert_eq!(tree.path_up(2, 2).unwrap(), Vec::<usize>::new());
    assert_eq!(tree.path_up(2, 0).unwrap(), vec![2, 1]);
    assert_eq!(tree.path_up(2, 1).unwrap(), vec![2]);
    assert!(tree.path_up(0, 2).is_err());
}
