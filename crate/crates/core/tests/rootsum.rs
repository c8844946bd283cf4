mod common;

use ginv_core::rootsum::{averaging_term, solve, verify_family, Template};
use ginv_core::{RootOfUnity, RootSumProblem, SolutionFamily};
use num_rational::Ratio;

fn z(n: u64, k: i64) -> RootOfUnity {
    RootOfUnity::new(n, k)
}

fn sorted(mut v: Vec<RootOfUnity>) -> Vec<RootOfUnity> {
    v.sort();
    v
}

fn strict(n: u32, k: u32) -> RootSumProblem {
    RootSumProblem::new(n, k).excluding(true, true)
}

#[test]
fn two_more_terms_than_target() {
    for n in 0..=4u32 {
        let fams = solve(&RootSumProblem::new(n, n + 2)).unwrap();
        match n {
            0 => {
                assert_eq!(fams.len(), 1);
                assert!(fams[0].core.is_empty());
                assert_eq!(fams[0].blocks, vec![Template::CancellingPair]);
            }
            2 => {
                assert_eq!(fams.len(), 1);
                assert_eq!(fams[0].core, vec![z(6, 1), z(6, 1), z(6, 5), z(6, 5)]);
                assert!(fams[0].is_concrete());
            }
            _ => assert!(fams.is_empty(), "n = {n}: {fams:?}"),
        }
    }
}

#[test]
fn four_more_terms_with_exclusions() {
    let one = solve(&strict(1, 5)).unwrap();
    let triple: Vec<&SolutionFamily> = one.iter().filter(|f| !f.is_concrete()).collect();
    assert_eq!(triple.len(), 1);
    assert_eq!(triple[0].core, vec![z(6, 1), z(6, 5)]);
    assert_eq!(triple[0].blocks, vec![Template::CubeTriple]);
    let sporadic: Vec<Vec<RootOfUnity>> = one.iter().filter(|f| f.is_concrete()).map(|f| f.core.clone()).collect();
    let expected = [
        [z(10, 1), z(10, 3), z(10, 7), z(15, 1), z(15, 11)],
        [z(10, 1), z(10, 3), z(10, 9), z(15, 8), z(15, 13)],
        [z(10, 1), z(10, 7), z(10, 9), z(15, 2), z(15, 7)],
        [z(10, 3), z(10, 7), z(10, 9), z(15, 4), z(15, 14)],
        // The two solutions with a ζ6 term; also found by the brute-force oracle.
        [z(6, 1), z(15, 2), z(15, 8), z(15, 11), z(15, 14)],
        [z(6, 5), z(15, 1), z(15, 4), z(15, 7), z(15, 13)],
    ];
    let mut want: Vec<Vec<RootOfUnity>> = expected.iter().map(|e| sorted(e.to_vec())).collect();
    want.sort();
    assert_eq!(sporadic, want);

    let two = solve(&strict(2, 6)).unwrap();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].core, sorted(vec![z(6, 1), z(6, 5), z(10, 1), z(10, 3), z(10, 7), z(10, 9)]));

    assert!(solve(&strict(3, 7)).unwrap().is_empty());

    let four = solve(&strict(4, 8)).unwrap();
    assert_eq!(four.len(), 1);
    assert_eq!(four[0].core, sorted([vec![z(6, 1); 4], vec![z(6, 5); 4]].concat()));
}

#[test]
fn free_triple_respects_exclusions() {
    let fams = solve(&strict(1, 5)).unwrap();
    let fam = fams.iter().find(|f| !f.is_concrete()).unwrap();
    let with = |xi: RootOfUnity| {
        let mut m = vec![z(6, 1), z(6, 5)];
        m.extend((0..3).map(|j| xi.mul(z(3, j))));
        m
    };
    assert!(fam.instantiates(&with(z(7, 1))));
    assert!(fam.instantiates(&with(z(4, 1))));
    // ξ = ζ3 puts 1 among the triple's elements.
    assert!(!fam.instantiates(&with(z(3, 1))));
    // ξ = ζ6 has ξ³ = −1, so −1 appears.
    assert!(!fam.instantiates(&with(z(6, 1))));
    assert!(!fam.instantiates(&with(RootOfUnity::ONE)));
}

#[test]
fn every_family_verifies_and_averages() {
    let mut problems = Vec::new();
    for k in 1..=6u32 {
        for n in 0..=k {
            if n == 0 && k >= 5 {
                continue;
            }
            problems.push(RootSumProblem::new(n, k));
            problems.push(strict(n, k));
        }
    }
    problems.extend([strict(3, 7), strict(4, 8)]);
    for p in problems {
        for f in solve(&p).unwrap() {
            assert!(verify_family(&f, &p), "{p:?}: {f}");
            if f.is_concrete() {
                let total: Ratio<i64> = f.core.iter().map(|r| averaging_term(r.order)).sum();
                assert_eq!(total, Ratio::from_integer(p.count as i64 - p.target as i64), "{f}");
            }
        }
    }
    assert_eq!(averaging_term(6), Ratio::new(1, 2));
    assert_eq!(averaging_term(2), Ratio::from_integer(2));
}

#[test]
fn brute_force_finds_nothing_new() {
    for k in 1..=6usize {
        let targets: Vec<u32> = (0..k as u32).filter(|&n| !(n == 0 && k >= 5)).collect();
        let found = common::brute_force(k, &targets, 120);
        for &n in &targets {
            let plain = solve(&RootSumProblem::new(n, k as u32)).unwrap();
            let limited = solve(&strict(n, k as u32)).unwrap();
            for m in &found[&n] {
                assert!(plain.iter().any(|f| f.instantiates(m)), "missing {m:?} for ({n},{k})");
                if !common::has_minus_one(m) && !common::has_cancelling_pair(m) {
                    assert!(limited.iter().any(|f| f.instantiates(m)), "missing {m:?} for strict ({n},{k})");
                }
            }
            for f in plain.iter().filter(|f| f.is_concrete()) {
                let conductor = f.core.iter().fold(1, |a, r| num_integer::lcm(a, r.order));
                if conductor <= 120 {
                    assert!(found[&n].contains(&f.core), "oracle misses {f}");
                }
            }
        }
    }
}
