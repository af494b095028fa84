//! The printed 12-cycles, as words, against the depth-first census.

use cayaut::cycles::{census, enumerate_cycles, solve_exponent_equation, CaseTag, CycleCert};
use cayaut::{GenSet, Parallelism, Permutation, Word};

/// Through `e`, `c`, `c⁻¹`.
const C: [&str; 12] = [
    "e",
    "c",
    "t c",
    "c- t c",
    "c^-2 t c",
    "t c^-2 t c",
    "c t c^-2 t c",
    "c^2 t c^-2 t c",
    "t c^2 t c^-2 t c",
    "c- t c^2 t c^-2 t c",
    "c^-2 t c^2 t c^-2 t c",
    "t c^-2 t c^2 t c^-2 t c",
];

// The fifth vertex is printed as `t c^2 t c`, which is not adjacent to
// `c^2 t`; the word walk visits `t c^2 t`.
const C1: [&str; 12] = [
    "e",
    "t",
    "c t",
    "c^2 t",
    "t c^2 t",
    "c- t c^2 t",
    "c^-2 t c^2 t",
    "t c^-2 t c^2 t",
    "c t c^-2 t c^2 t",
    "c^2 t c^-2 t c^2 t",
    "t c^2 t c^-2 t c^2 t",
    "c- t c^2 t c^-2 t c^2 t",
];

const C2: [&str; 12] = [
    "e",
    "t",
    "c t",
    "t c t",
    "c- t c t",
    "t c- t c t",
    "c t c- t c t",
    "t c t c- t c t",
    "c- t c t c- t c t",
    "t c- t c t c- t c t",
    "c t c- t c t c- t c t",
    "t c t c- t c t c- t c t",
];

// Same misprint as in C1, mirrored.
const C1_STAR: [&str; 12] = [
    "e",
    "t",
    "c- t",
    "c^-2 t",
    "t c^-2 t",
    "c t c^-2 t",
    "c^2 t c^-2 t",
    "t c^2 t c^-2 t",
    "c- t c^2 t c^-2 t",
    "c^-2 t c^2 t c^-2 t",
    "t c^-2 t c^2 t c^-2 t",
    "c t c^-2 t c^2 t c^-2 t",
];

const C2_STAR: [&str; 12] = [
    "e",
    "t",
    "c- t",
    "t c- t",
    "c t c- t",
    "t c t c- t",
    "c- t c t c- t",
    "t c- t c t c- t",
    "c t c- t c t c- t",
    "t c t c- t c t c- t",
    "c- t c t c- t c t c- t",
    "t c- t c t c- t c t c- t",
];

fn eval(w: &str, set: &GenSet) -> Permutation {
    w.parse::<Word>().unwrap().evaluate_in(set).unwrap()
}

fn cert(words: &[&str], set: &GenSet) -> CycleCert {
    CycleCert::from_vertices(words.iter().map(|w| eval(w, set)).collect()).unwrap()
}

#[test]
fn printed_cycles_are_cycles() {
    for n in 13..=16 {
        let set = GenSet::standard(n).unwrap();
        for words in [C, C1, C2, C1_STAR, C2_STAR] {
            let c = cert(&words, &set);
            assert_eq!(c.len(), 12);
            assert!(c.verify(&set), "n = {n}, {words:?}");
        }
    }
}

#[test]
fn printed_endpoints() {
    let set = GenSet::standard(13).unwrap();
    let same = |a: &str, b: &str| assert_eq!(eval(a, &set), eval(b, &set), "{a} vs {b}");
    same(C[10], "t c-");
    same(C[11], "c-");
    same(C1[10], "c^2");
    same(C1[11], "c");
    same(C2[10], "t c");
    same(C2[11], "c");
    same(C1_STAR[10], "c^-2");
    same(C1_STAR[11], "c-");
    same(C2_STAR[10], "t c-");
    same(C2_STAR[11], "c-");
}

#[test]
fn misprinted_fifth_vertex_is_off_the_cycle() {
    let set = GenSet::standard(13).unwrap();
    let printed = eval("t c^2 t c", &set);
    assert!(!cert(&C1, &set).contains(&printed));
    let printed = eval("t c^-2 t c-", &set);
    assert!(!cert(&C1_STAR, &set).contains(&printed));
}

#[test]
fn unique_cycle_through_c_and_its_inverse() {
    let par = Parallelism::sequential();
    for n in [13, 14, 15, 16, 20] {
        let set = GenSet::standard(n).unwrap();
        let found = enumerate_cycles(&set, 12, &CaseTag::A.anchors(&set).unwrap(), &par).unwrap();
        assert_eq!(found.cycles, vec![cert(&C, &set)], "n = {n}");
    }
}

#[test]
fn two_cycles_through_the_transposition() {
    let par = Parallelism::sequential();
    for n in 13..=16 {
        let set = GenSet::standard(n).unwrap();
        let mut want = vec![cert(&C1, &set), cert(&C2, &set)];
        want.sort();
        let got = enumerate_cycles(&set, 12, &CaseTag::BPlus.anchors(&set).unwrap(), &par).unwrap();
        assert_eq!(got.cycles, want, "n = {n}");
        let mut want = vec![cert(&C1_STAR, &set), cert(&C2_STAR, &set)];
        want.sort();
        let got = enumerate_cycles(&set, 12, &CaseTag::BMinus.anchors(&set).unwrap(), &par).unwrap();
        assert_eq!(got.cycles, want, "n = {n}");
    }
}

#[test]
fn solver_certificates_match_the_fixtures() {
    let set = GenSet::standard(13).unwrap();
    let a = solve_exponent_equation(&set, 12, CaseTag::A).unwrap();
    assert_eq!(a.len(), 1);
    assert_eq!(a[0].cycle, cert(&C, &set));
    let mut b: Vec<CycleCert> = solve_exponent_equation(&set, 12, CaseTag::BPlus)
        .unwrap()
        .into_iter()
        .map(|s| s.cycle)
        .collect();
    b.sort();
    let mut want = vec![cert(&C1, &set), cert(&C2, &set)];
    want.sort();
    assert_eq!(b, want);
}

#[test]
fn census_at_twelve_and_below() {
    let par = Parallelism::sequential();
    let set = GenSet::standard(12).unwrap();
    assert_eq!(census(&set, 12, &par).unwrap().through_c_cinv, 2);
    for n in [13, 14, 15, 16, 20] {
        let set = GenSet::standard(n).unwrap();
        assert_eq!(census(&set, 12, &par).unwrap().as_tuple(), (1, 2, 2), "n = {n}");
    }
}

#[test]
fn variant_transposition_transfers() {
    let par = Parallelism::sequential();
    let set = GenSet::variant(13, 3).unwrap();
    assert_eq!(census(&set, 12, &par).unwrap().as_tuple(), (1, 2, 2));
}
