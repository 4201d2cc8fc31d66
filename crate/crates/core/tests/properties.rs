use proptest::prelude::*;
use proptest::sample::Index;

use symtype::enumeration::enumerate_types;
use symtype::formats::builtin;
use symtype::transforms::{dual_flag, dual_type, medial_flag, petrie_flag, petrie_type};
use symtype::TypeGraph;

fn relabel(t: &TypeGraph, perm: &[usize]) -> TypeGraph {
    let k = t.k();
    let mut tables = [vec![0; k], vec![0; k], vec![0; k]];
    for (i, table) in tables.iter_mut().enumerate() {
        for v in 0..k {
            table[perm[v]] = perm[t.t(i)[v]];
        }
    }
    let [a, b, c] = tables;
    TypeGraph::new(a, b, c).unwrap()
}

fn shuffled(k: usize, picks: &[Index]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..k).collect();
    for (i, pick) in picks.iter().enumerate().take(k) {
        let j = i + pick.index(k - i);
        p.swap(i, j);
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_code_ignores_labels(k in 1usize..=6, which in any::<Index>(), picks in prop::collection::vec(any::<Index>(), 6)) {
        let types = enumerate_types(k);
        let code = which.get(&types);
        let t = code.to_type_graph();
        let u = relabel(&t, &shuffled(k, &picks));
        prop_assert_eq!(&u.canonical_code(), code);
    }

    #[test]
    fn dual_and_petrie_are_involutions_on_types(k in 1usize..=6, which in any::<Index>()) {
        let types = enumerate_types(k);
        let t = which.get(&types).to_type_graph();
        prop_assert_eq!(dual_type(&dual_type(&t)), t.clone());
        prop_assert_eq!(petrie_type(&petrie_type(&t)), t);
    }

    #[test]
    fn torus_lattices(a in 1i64..5, b in -3i64..4, c in -3i64..4, d in 1i64..5) {
        let det = a * d - b * c;
        prop_assume!(det.abs() >= 5);
        let g = builtin::torus44(a, b, c, d).unwrap();
        prop_assert_eq!(g.n() as i64, 8 * det.abs());
        let e = g.elements();
        prop_assert_eq!(e.euler, 0);
        prop_assert!(e.orientable);
        prop_assert!(dual_flag(&dual_flag(&g)) == g);
        prop_assert!(petrie_flag(&petrie_flag(&g)) == g);
        let me = medial_flag(&g);
        prop_assert_eq!(me.elements().euler, 0);
        prop_assert_eq!(me.elements().num_vertices(), e.num_edges());
    }
}
