#![allow(dead_code)]

use std::collections::BTreeSet;

use nlcenc::gen::{gen_random, GenConfig, LabelPool};
use nlcenc::graph::Graph;
use nlcenc::nlc::{NlcParts, NlcTree};
use nlcenc::semigroup::SkFun;
use proptest::prelude::*;

pub fn pool() -> impl Strategy<Value = LabelPool> {
    prop_oneof![Just(LabelPool::All), Just(LabelPool::Constants), Just(LabelPool::RamseyBiased)]
}

pub fn config(max_nodes: usize, max_vertices: usize) -> impl Strategy<Value = GenConfig> {
    (2usize..=3, 1..=max_nodes, 0..=max_vertices, prop_oneof![Just(0.2), Just(0.5), Just(0.9)], pool(), any::<u64>())
        .prop_map(|(k, tree_nodes, vertices, eta_density, label_pool, seed)| GenConfig {
            k,
            tree_nodes,
            vertices,
            eta_density,
            label_pool,
            seed,
            reject_ladder_above: None,
        })
}

pub fn tree(max_nodes: usize, max_vertices: usize) -> impl Strategy<Value = NlcTree> {
    config(max_nodes, max_vertices).prop_map(|c| gen_random(&c).unwrap())
}

/// Random graph on `1..=max_n` vertices, each pair an edge with probability 1/2.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            g
        })
    })
}

pub fn skfun(k: usize) -> impl Strategy<Value = SkFun> {
    proptest::collection::vec(1..=k as u8, k).prop_map(|t| SkFun::new(t).unwrap())
}

/// Identity-labelled path of `n` nodes with `k = 2`; `eta_nodes` relate the
/// two colours.
pub fn identity_path(n: usize, vertices: &[(usize, u8)], eta_nodes: &[usize]) -> NlcTree {
    NlcTree::from_parts(NlcParts {
        k: 2,
        parent: (0..n).map(|i| i.checked_sub(1)).collect(),
        rho: (0..n).map(|i| (i > 0).then(|| SkFun::identity(2))).collect(),
        eta: (0..n)
            .map(|i| if eta_nodes.contains(&i) { [(1, 2), (2, 1)].into_iter().collect() } else { BTreeSet::new() })
            .collect(),
        attach: vertices.iter().map(|v| v.0).collect(),
        color: vertices.iter().map(|v| v.1).collect(),
        ..Default::default()
    })
    .unwrap()
}
