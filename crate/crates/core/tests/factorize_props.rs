mod common;

use nlcenc::factorize::{depth_bound, factorize_step, recursive_factorize, verify_hierarchy, FactorKind, RecursiveFactorization};
use nlcenc::gen::{gen_random, GenConfig, LabelPool};
use nlcenc::nlc::{quotient, Factorization, NlcTree};
use nlcenc::semigroup::is_forward_ramsey;
use proptest::prelude::*;

fn quotient_ok(t: &NlcTree, p: &Factorization, kind: FactorKind) -> bool {
    let q = quotient(t, p).unwrap();
    match kind {
        FactorKind::Splendid => is_forward_ramsey(q.labels()),
        FactorKind::Shallow => q.height() <= 1,
        FactorKind::Leaf => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn step_meets_its_contract(t in common::tree(40, 10)) {
        prop_assume!(t.node_count() >= 2);
        let (p, kind) = factorize_step(&t).unwrap();
        prop_assert!(quotient_ok(&t, &p, kind));
        prop_assert!(p.parts().iter().all(|part| part.len() < t.node_count()));
    }

    #[test]
    fn hierarchy_contract(t in common::tree(60, 10)) {
        let rf = recursive_factorize(&t).unwrap();
        let audit = verify_hierarchy(&t, &rf).unwrap();
        prop_assert_eq!(audit.depth, rf.levels);
        prop_assert!(rf.levels <= depth_bound(t.k()));
        let n = t.node_count();
        // Q_1 singletons, Q_ℓ the whole tree
        prop_assert_eq!(rf.level_factors(1).len(), n);
        prop_assert_eq!(rf.level_factors(rf.levels), vec![0]);
        // every Q_i part lies inside one Q_{i+1} part
        for level in 1..rf.levels {
            let fine = rf.factor_of_nodes(level, n);
            let coarse = rf.factor_of_nodes(level + 1, n);
            for x in 0..n {
                for y in 0..n {
                    if fine[x] == fine[y] {
                        prop_assert_eq!(coarse[x], coarse[y]);
                    }
                }
            }
        }
        for f in &rf.factors {
            if f.kind == FactorKind::Leaf {
                prop_assert_eq!(f.nodes.len(), 1);
                continue;
            }
            let sub = t.induced_factor(&f.nodes).unwrap();
            let mut labels = vec![usize::MAX; sub.node_count()];
            for &c in &f.children {
                prop_assert!(rf.factors[c].nodes.len() < f.nodes.len());
                for &x in &rf.factors[c].nodes {
                    labels[sub.node_index(t.node_id(x)).unwrap()] = c;
                }
            }
            let p = Factorization::from_labels(sub.tree(), &labels).unwrap();
            prop_assert!(quotient_ok(&sub, &p, f.kind));
        }
    }

    #[test]
    fn constant_labels_split_splendidly(seed in any::<u64>(), nodes in 3usize..40) {
        let cfg = GenConfig { k: 3, tree_nodes: nodes, vertices: 5, label_pool: LabelPool::Constants, seed, ..Default::default() };
        let t = gen_random(&cfg).unwrap();
        prop_assume!(t.tree().height() >= 2);
        let (_, kind) = factorize_step(&t).unwrap();
        prop_assert_eq!(kind, FactorKind::Splendid);
    }
}

#[test]
fn dump_lines_follow_the_format() {
    let t = gen_random(&GenConfig { tree_nodes: 30, seed: 4, ..Default::default() }).unwrap();
    let rf = recursive_factorize(&t).unwrap();
    let dump = rf.dump(&t);
    assert_eq!(dump.lines().count(), rf.factors.len());
    for (i, line) in dump.lines().enumerate() {
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields[0], "factor");
        assert_eq!(fields[1], i.to_string());
        let keys: Vec<&str> = fields[2..].iter().map(|f| f.split('=').next().unwrap()).collect();
        assert_eq!(keys, ["level", "top", "kind", "parent", "nodes"]);
    }
}

#[test]
fn verifier_names_the_broken_factor() {
    // a six-node path split into singletons has height 5, so it is not shallow
    let t = common::identity_path(6, &[], &[]);
    let rf = RecursiveFactorization::single_step(6, FactorKind::Shallow);
    let err = verify_hierarchy(&t, &rf).unwrap_err().to_string();
    assert!(err.contains("factor 0") && err.contains("shallow"), "{err}");
    assert!(verify_hierarchy(&t, &RecursiveFactorization::single_step(6, FactorKind::Splendid)).is_ok());
}
