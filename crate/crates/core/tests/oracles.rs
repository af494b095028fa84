use std::collections::BTreeSet;

use cayaut::autgrp::{
    aut_gs_bruteforce, aut_gs_fast, bruteforce_aut, bruteforce_aut_count, build_normalizer_group,
    extend_generator_map, normality_from, set_preserving_automorphisms, stabilizer_search,
};
use cayaut::cayley::factorial;
use cayaut::cycles::{classify_solution_types, enumerate_cycles, solve_exponent_equation, CaseTag};
use cayaut::{CayleyGraph, GenSet, GraphOptions, Parallelism, Permutation};

fn graph(n: usize) -> CayleyGraph {
    CayleyGraph::build(
        &GenSet::standard(n).unwrap(),
        &GraphOptions::default(),
        &Parallelism::sequential(),
    )
    .unwrap()
}

#[test]
fn word_solver_agrees_with_dfs() {
    let par = Parallelism::sequential();
    for n in 12..=16 {
        let set = GenSet::standard(n).unwrap();
        for case in CaseTag::ALL {
            let solved: BTreeSet<_> = solve_exponent_equation(&set, 12, case)
                .unwrap()
                .into_iter()
                .map(|s| s.cycle)
                .collect();
            let searched: BTreeSet<_> = enumerate_cycles(&set, 12, &case.anchors(&set).unwrap(), &par)
                .unwrap()
                .cycles
                .into_iter()
                .collect();
            assert_eq!(solved, searched, "n = {n}, case {case}");
        }
    }
}

#[test]
fn pattern_counts_at_thirteen() {
    let set = GenSet::standard(13).unwrap();
    let a = classify_solution_types(&set, 12, CaseTag::A).unwrap();
    assert_eq!(a.block(5).unwrap().groups.len(), 7);
    let b = classify_solution_types(&set, 12, CaseTag::BPlus).unwrap();
    assert_eq!(b.block(4).unwrap().groups.len(), 4);
}

#[test]
fn full_orders_from_three_to_seven() {
    let par = Parallelism::sequential();
    let want = [12u128, 48, 240, 1440, 10080];
    for (n, &order) in (3..=7).zip(&want) {
        let g = graph(n);
        let stab = stabilizer_search(&g, &par).unwrap();
        assert_eq!(stab.elements.len(), 2, "n = {n}");
        assert_eq!(stab.aut_order, order);
        let brute = bruteforce_aut_count(&g, &par).unwrap();
        assert_eq!(brute.order, order, "n = {n}");
        assert!(brute.per_image.iter().all(|&k| k == 2));
        let tables: Vec<Vec<u32>> = stab.elements.iter().map(|m| m.table().unwrap().to_vec()).collect();
        let brute_tables: Vec<Vec<u32>> = brute.stabilizer.iter().map(|m| m.table().unwrap().to_vec()).collect();
        assert_eq!(tables, brute_tables);
        assert!(normality_from(&g, &stab).unwrap().normal);
    }
}

#[test]
fn full_order_at_eight() {
    let g = graph(8);
    let stab = stabilizer_search(&g, &Parallelism::sequential()).unwrap();
    assert_eq!(stab.aut_order, 80640);
    let v = normality_from(&g, &stab).unwrap();
    assert!(v.normal);
    assert_eq!(v.stabilizer_size, 2);
    let phi = Permutation::phi_involution(8).unwrap();
    assert!(stab.elements.iter().any(|m| m.witness.as_ref() == Some(&phi)));
    assert!(stab.elements.iter().all(|m| m.audit(&g).unwrap()));
}

#[test]
fn normalizer_equals_bruteforce_group_at_three() {
    let g = graph(3);
    let group = build_normalizer_group(g.genset()).unwrap();
    let brute: Vec<Vec<u32>> = bruteforce_aut(&g, &Parallelism::sequential())
        .unwrap()
        .iter()
        .map(|m| m.table().unwrap().to_vec())
        .collect();
    assert_eq!(brute.len(), 12);
    assert_eq!(group.tables(&g).unwrap(), brute);
}

#[test]
fn stabilizer_is_a_group() {
    let g = graph(6);
    let stab = stabilizer_search(&g, &Parallelism::sequential()).unwrap();
    let tables: BTreeSet<Vec<u32>> = stab.elements.iter().map(|m| m.table().unwrap().to_vec()).collect();
    let identity: Vec<u32> = (0..factorial(6) as u32).collect();
    assert!(tables.contains(&identity));
    for a in &tables {
        for b in &tables {
            let ab: Vec<u32> = a.iter().map(|&x| b[x as usize]).collect();
            assert!(tables.contains(&ab));
        }
    }
}

#[test]
fn set_automorphisms_agree() {
    for n in 3..=8 {
        let set = GenSet::standard(n).unwrap();
        let brute = aut_gs_bruteforce(&set).unwrap();
        let phi = Permutation::phi_involution(n).unwrap();
        assert_eq!(brute, vec![Permutation::identity(n), phi]);
        assert_eq!(aut_gs_fast(&set).unwrap(), brute);
    }
}

#[test]
fn set_automorphisms_at_large_degree() {
    let n = 100_000;
    let sols = aut_gs_fast(&GenSet::standard(n).unwrap()).unwrap();
    assert_eq!(sols.len(), 2);
    assert_eq!(sols[1], Permutation::phi_involution(n).unwrap());
    assert!((3..=n).all(|k| sols[1].image(k) == n + 3 - k));
}

#[test]
fn six_has_no_exceptional_set_automorphism() {
    let all = set_preserving_automorphisms(6).unwrap();
    assert_eq!(all.len(), 2);
    let t = Permutation::transposition(6, 1, 2).unwrap();
    let c = Permutation::n_cycle(6).unwrap();
    let inv = extend_generator_map(6, &t, &c.inverse()).unwrap().unwrap();
    assert_eq!(inv.inner_witness(), Some(Permutation::phi_involution(6).unwrap()));
}
