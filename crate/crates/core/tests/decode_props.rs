mod common;

use std::collections::BTreeSet;

use nlcenc::decode::{decode_adjacent, decode_full, Case, DecodeStep, Decoder};
use nlcenc::encode::{encode_recursive, EncodedStructure};
use nlcenc::factorize::{recursive_factorize, verify_hierarchy, FactorKind, RecursiveFactorization};
use nlcenc::gen::{gen_random, GenConfig, LabelPool};
use nlcenc::graph::Graph;
use nlcenc::nlc::NlcTree;
use nlcenc::semigroup::is_forward_ramsey;
use proptest::prelude::*;

fn encode(t: &NlcTree) -> EncodedStructure {
    let rf = recursive_factorize(t).unwrap();
    encode_recursive(t, &rf).unwrap()
}

/// The whole tree as one splendid step over singletons, when its labels allow.
fn encode_flat(t: &NlcTree) -> Option<EncodedStructure> {
    if t.node_count() < 2 || !is_forward_ramsey((1..t.node_count()).filter_map(|a| t.rho(a))) {
        return None;
    }
    let rf = RecursiveFactorization::single_step(t.node_count(), FactorKind::Splendid);
    verify_hierarchy(t, &rf).unwrap();
    Some(encode_recursive(t, &rf).unwrap())
}

/// Steps level by level for a real vertex pair, checking that the swapped
/// query gives the swapped answer at every level.
fn check_step_symmetry(d: &Decoder, j: &EncodedStructure, u0: usize, u1: usize) -> Result<(), TestCaseError> {
    let ((mut a0, mut c0), (mut a1, mut c1)) = (j.vmap[&u0], j.vmap[&u1]);
    for level in (2..=j.levels).rev() {
        let (fwd, _) = d.step(level, c0, c1, a0, a1).unwrap();
        let (back, _) = d.step(level, c1, c0, a1, a0).unwrap();
        prop_assert_eq!(back, fwd.swapped());
        match fwd {
            DecodeStep::Decided(_) => return Ok(()),
            DecodeStep::Recurse { d0, d1, t, t0, t1 } => {
                prop_assert_eq!(j.rooti[&(level - 1)][&t0], t);
                prop_assert_eq!(j.rooti[&(level - 1)][&t1], t);
                (a0, c0, a1, c1) = (t0, d0, t1, d1);
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn round_trip_is_exact(t in common::tree(40, 40)) {
        let j = encode(&t);
        prop_assert_eq!(decode_full(&j).unwrap(), t.generate_graph());
    }

    #[test]
    fn flat_splendid_round_trip(cfg in common::config(50, 12)) {
        let cfg = GenConfig { label_pool: if cfg.seed % 2 == 0 { LabelPool::Constants } else { LabelPool::RamseyBiased }, ..cfg };
        let t = gen_random(&cfg).unwrap();
        if let Some(j) = encode_flat(&t) {
            prop_assert_eq!(decode_full(&j).unwrap(), t.generate_graph());
        }
    }

    #[test]
    fn decoding_is_symmetric(t in common::tree(30, 20)) {
        let j = encode(&t);
        let d = Decoder::new(&j).unwrap();
        let ids = d.vertex_ids().to_vec();
        for &u in &ids {
            prop_assert!(!d.adjacent(u, u).unwrap());
            for &v in &ids {
                prop_assert_eq!(d.adjacent(u, v).unwrap(), d.adjacent(v, u).unwrap());
                if u != v {
                    check_step_symmetry(&d, &j, u, v)?;
                }
            }
        }
    }

    #[test]
    fn trace_levels_descend(t in common::tree(30, 12)) {
        let j = encode(&t);
        let d = Decoder::new(&j).unwrap();
        let ids = d.vertex_ids().to_vec();
        for &u in &ids {
            for &v in &ids {
                if u == v {
                    continue;
                }
                let (adj, lines) = d.trace(u, v).unwrap();
                prop_assert_eq!(adj, d.adjacent(u, v).unwrap());
                for w in lines.windows(2) {
                    prop_assert_eq!(w[1].level + 1, w[0].level);
                }
                let last = lines.last().unwrap();
                prop_assert!(matches!(last.case, Case::DecidedPlus | Case::DecidedMinus));
                prop_assert_eq!(last.case == Case::DecidedPlus, adj);
            }
        }
    }

    #[test]
    fn decoding_needs_only_the_text(t in common::tree(30, 20)) {
        // the decoder sees a structure rebuilt from its serialization alone
        let text = encode(&t).to_text();
        let j = EncodedStructure::parse(&text).unwrap();
        prop_assert_eq!(decode_full(&j).unwrap(), t.generate_graph());
    }
}

/// Vertex placements on a 22-node identity path whose pairs meet deep in the
/// path, so the decision falls to a biased block.
fn biased_instance(vertices: &[(usize, u8)], eta_nodes: &[usize]) -> (NlcTree, Decoder) {
    let t = common::identity_path(22, vertices, eta_nodes);
    let j = encode_flat(&t).unwrap();
    assert_eq!(decode_full(&j).unwrap(), t.generate_graph());
    let d = Decoder::new(&j).unwrap();
    (t, d)
}

fn trace_text(d: &Decoder, u: usize, v: usize) -> Vec<String> {
    let ids = d.vertex_ids();
    d.trace(ids[u], ids[v]).unwrap().1.iter().map(|l| l.to_string()).collect()
}

#[test]
fn first_biased_block_on_a_crafted_path() {
    // u2 (colour 1, node 20) and u1 (colour 2, node 5) meet at node 5, where
    // η relates the colours; labels are identities so d0 = 1, d1 = 2
    let (t, d) = biased_instance(&[(1, 2), (5, 2), (20, 1)], &[1, 5]);
    assert!(t.generate_graph().has_edge(1, 2));
    assert_eq!(
        trace_text(&d, 2, 1),
        [
            "level=2 factor=0 case=first-biased d0=1 d1=2 t=5 t0=5 t1=5",
            "level=1 factor=5 case=decided+ d0=1 d1=2 t=5 t0=5 t1=5"
        ]
    );
    assert_eq!(
        trace_text(&d, 1, 2),
        [
            "level=2 factor=0 case=second-biased d0=2 d1=1 t=5 t0=5 t1=5",
            "level=1 factor=5 case=decided+ d0=2 d1=1 t=5 t0=5 t1=5"
        ]
    );
}

#[test]
fn second_biased_block_on_a_crafted_path() {
    let (_, d) = biased_instance(&[(1, 1), (5, 1), (20, 2)], &[1, 5]);
    assert_eq!(
        trace_text(&d, 2, 1),
        [
            "level=2 factor=0 case=first-biased d0=2 d1=1 t=5 t0=5 t1=5",
            "level=1 factor=5 case=decided+ d0=2 d1=1 t=5 t0=5 t1=5"
        ]
    );
    assert_eq!(trace_text(&d, 1, 2)[0], "level=2 factor=0 case=second-biased d0=1 d1=2 t=5 t0=5 t1=5");
}

#[test]
fn non_adjacent_pair_on_a_crafted_path() {
    // η only at node 1, so the pair meeting at node 5 is not an edge
    let (t, d) = biased_instance(&[(1, 2), (5, 2), (20, 1)], &[1]);
    assert!(!t.generate_graph().has_edge(1, 2));
    assert!(!d.adjacent(d.vertex_ids()[1], d.vertex_ids()[2]).unwrap());
}

#[test]
fn same_part_is_corner_one() {
    // two vertices on one node of a flat splendid step: x0 = x1 = z̃
    let t = common::identity_path(3, &[(2, 1), (2, 2)], &[2]);
    let j = encode_flat(&t).unwrap();
    let d = Decoder::new(&j).unwrap();
    let (step, case) = d.step(2, 1, 2, 2, 2).unwrap();
    assert_eq!(case, Case::Corner1);
    assert_eq!(step, DecodeStep::Recurse { d0: 1, d1: 2, t: 2, t0: 2, t1: 2 });
    assert!(decode_adjacent(&j, 3, 4).unwrap());
}

#[test]
fn shallow_steps_on_a_star() {
    // root 0 with children 1 and 2; the labels lift every colour to 2
    let text = "nlc k=2\nnode 0 parent=- eta=(2,2)\nnode 1 parent=0 eta=-\nnode 2 parent=0 eta=-\n\
                edge 1 rho=2:2,2\nedge 2 rho=2:2,1\n\
                vertex 3 node=1 color=1\nvertex 4 node=2 color=1\nvertex 5 node=0 color=2\nvertex 6 node=1 color=2\n";
    let t = NlcTree::parse(text).unwrap();
    let rf = recursive_factorize(&t).unwrap();
    assert_eq!(rf.root().kind, FactorKind::Shallow);
    let j = encode_recursive(&t, &rf).unwrap();
    let d = Decoder::new(&j).unwrap();
    assert_eq!(d.full().unwrap(), t.generate_graph());
    let (step, case) = d.step(2, 1, 1, 1, 1).unwrap();
    assert_eq!((step, case), (DecodeStep::Recurse { d0: 1, d1: 1, t: 1, t0: 1, t1: 1 }, Case::ShallowSame));
    // distinct children: each side lifted to the root through its edge
    let (step, case) = d.step(2, 1, 1, 1, 2).unwrap();
    assert_eq!(case, Case::ShallowRoot);
    assert_eq!(step, DecodeStep::Recurse { d0: 2, d1: 2, t: 0, t0: 0, t1: 0 });
    // root against a child: the root side keeps its node and colour
    let (step, _) = d.step(2, 2, 1, 0, 2).unwrap();
    assert_eq!(step, DecodeStep::Recurse { d0: 2, d1: 2, t: 0, t0: 0, t1: 0 });
    assert!(d.adjacent(3, 4).unwrap());
}

#[test]
fn single_node_and_edgeless_examples() {
    let t = common::identity_path(1, &[(0, 1), (0, 2)], &[0]);
    let j = encode(&t);
    assert!(decode_adjacent(&j, 1, 2).unwrap());
    assert!(!decode_adjacent(&j, 1, 1).unwrap());
    let quiet = common::identity_path(6, &[(0, 1), (3, 2), (5, 1), (5, 2)], &[]);
    assert_eq!(decode_full(&encode(&quiet)).unwrap(), Graph::new(4));
}

#[test]
fn every_case_shows_up() {
    let mut seen = BTreeSet::new();
    for seed in 0..300u64 {
        let cfg = GenConfig {
            k: 2 + (seed % 2) as usize,
            tree_nodes: 20 + (seed % 40) as usize,
            vertices: 2 + (seed % 5) as usize,
            eta_density: 0.4,
            label_pool: if seed % 3 == 0 { LabelPool::Constants } else { LabelPool::RamseyBiased },
            seed,
            reject_ladder_above: None,
        };
        let t = gen_random(&cfg).unwrap();
        for j in [Some(encode(&t)), encode_flat(&t)].into_iter().flatten() {
            let d = Decoder::new(&j).unwrap();
            let ids = d.vertex_ids().to_vec();
            for &u in &ids {
                for &v in &ids {
                    if u != v {
                        let (_, lines) = d.trace(u, v).unwrap();
                        seen.extend(lines.iter().filter(|l| l.level > 1).map(|l| l.case.to_string()));
                    }
                }
            }
        }
    }
    for case in ["corner1", "corner2", "corner3", "decided+", "decided-", "shallow-same", "shallow-root"] {
        assert!(seen.contains(case), "{case} never reached: {seen:?}");
    }
}

#[test]
fn tampered_structures_are_rejected() {
    let t = gen_random(&GenConfig { tree_nodes: 20, vertices: 10, seed: 3, ..Default::default() }).unwrap();
    let j = encode(&t);
    let text = j.to_text();

    let mut bad = j.clone();
    bad.set_fun(2, "bogus", 0, 0);
    assert!(Decoder::new(&bad).is_err());

    assert!(EncodedStructure::parse(&text.replace("jstar", "jstr")).is_err());

    // a vertex the structure never heard of
    let d = Decoder::new(&j).unwrap();
    assert!(d.adjacent(10_000, d.vertex_ids()[0]).is_err());
}
