//! Acceptance suite: one test per criterion, each printing a pass line. All
//! comparisons are exact.

use braidmodels::action::{act_block, act_nested, all_extended, ExtPermutation};
use braidmodels::bijection::{nested_to_partition, partition_to_nested, stirling2_assoc};
use braidmodels::block::{Block, SetPartition};
use braidmodels::closure::{building_closure, maximal_seed};
use braidmodels::cohomology::{
    degree_polynomial, enumerate_supermax_basis, minimal_basis_labelled, poincare, Model,
    SupermaxBasisElement,
};
use braidmodels::enumerate::{count_f_k, enumerate_b, enumerate_f_k};
use braidmodels::exec::Strategy;
use braidmodels::genfun::{
    bigpsi_direct, bigpsi_formula, extract_poincare_from_bigpsi, minimal_poincare_from_phi,
    phi_super_series, euler_real_series, xi_direct, xi_series,
};
use braidmodels::labelled::enumerate_labelled_partitions;
use braidmodels::nested::NestedSet;
use braidmodels::orbits::{orbit_count, orbit_count_burnside, ActionMode};
use braidmodels::poly::{poly_from_terms, Exp, MultiPoly};
use braidmodels::trees::tree_sum_check;
use num_bigint::BigUint;

fn pass(criterion: &str, detail: &str) {
    println!("acceptance {criterion}: PASS ({detail})");
}

#[test]
fn criterion_01_minimal_poincare_two_routes() {
    for n in 2..=8u32 {
        let enumerated = poincare(Model::Minimal, n).unwrap();
        let from_series = minimal_poincare_from_phi(n).unwrap();
        assert_eq!(enumerated, from_series, "routes differ at n={n}");
    }
    assert_eq!(
        minimal_poincare_from_phi(3).unwrap(),
        poly_from_terms(&[(1, 0, 0, 0), (1, 1, 0, 0)])
    );
    assert_eq!(
        minimal_poincare_from_phi(4).unwrap(),
        poly_from_terms(&[(1, 0, 0, 0), (5, 1, 0, 0), (1, 2, 0, 0)])
    );
    assert_eq!(
        minimal_poincare_from_phi(5).unwrap(),
        poly_from_terms(&[(1, 0, 0, 0), (16, 1, 0, 0), (16, 2, 0, 0), (1, 3, 0, 0)])
    );
    pass("1", "enumeration = series for 2<=n<=8, printed p3 p4 p5 reproduced");
}

fn xi_expected(n: usize) -> MultiPoly {
    match n {
        1 | 2 => MultiPoly::one(),
        3 => poly_from_terms(&[(3, 0, 1, 0), (1, 1, 0, 0), (1, 0, 0, 0)]),
        4 => poly_from_terms(&[
            (30, 0, 1, 1),
            (30, 1, 1, 1),
            (15, 0, 2, 0),
            (10, 0, 1, 0),
            (10, 1, 1, 0),
            (1, 2, 0, 0),
            (5, 1, 0, 0),
            (1, 0, 0, 0),
        ]),
        5 => poly_from_terms(&[
            (315, 2, 1, 2),
            (1305, 1, 1, 2),
            (315, 0, 1, 2),
            (315, 1, 2, 1),
            (315, 0, 2, 1),
            (210, 2, 1, 1),
            (870, 1, 1, 1),
            (210, 0, 1, 1),
            (105, 0, 3, 0),
            (105, 1, 2, 0),
            (105, 0, 2, 0),
            (25, 2, 1, 0),
            (95, 1, 1, 0),
            (25, 0, 1, 0),
            (1, 3, 0, 0),
            (16, 2, 0, 0),
            (16, 1, 0, 0),
            (1, 0, 0, 0),
        ]),
        _ => unreachable!(),
    }
}

#[test]
fn criterion_02_xi_printed_values_both_routes() {
    let formula = xi_series(5).unwrap();
    let oracle = xi_direct(5, Strategy::default()).unwrap();
    for n in 1..=5usize {
        let expect = xi_expected(n);
        assert_eq!(formula.egf_coeff(n).unwrap(), expect, "formula at t^{n}");
        assert_eq!(oracle.egf_coeff(n).unwrap(), expect, "oracle at t^{n}");
    }
    pass("2", "printed xi coefficients through t^5 via formula and census oracle");
}

#[test]
fn criterion_03_supermax_two_routes_palindromic() {
    let series = phi_super_series(6).unwrap();
    for n in 2..=6u32 {
        let from_series = series.egf_coeff(n as usize).unwrap();
        let direct = if n <= 5 {
            degree_polynomial(
                enumerate_supermax_basis(n)
                    .unwrap()
                    .iter()
                    .map(SupermaxBasisElement::q_degree),
            )
        } else {
            poincare(Model::Supermaximal, n).unwrap()
        };
        assert_eq!(from_series, direct, "routes differ at n={n}");
        assert!(from_series.is_palindromic_q(n - 2), "not palindromic at n={n}");
    }
    assert_eq!(
        series.egf_coeff(4).unwrap(),
        poly_from_terms(&[(1, 2, 0, 0), (20, 1, 0, 0), (1, 0, 0, 0)])
    );
    assert_eq!(
        series.egf_coeff(5).unwrap(),
        poly_from_terms(&[(1, 3, 0, 0), (226, 2, 0, 0), (226, 1, 0, 0), (1, 0, 0, 0)])
    );
    // n=6 also against the fully materialized basis
    let basis6 = degree_polynomial(
        enumerate_supermax_basis(6).unwrap().iter().map(SupermaxBasisElement::q_degree),
    );
    assert_eq!(series.egf_coeff(6).unwrap(), basis6);
    pass("3", "substitution = basis enumeration for 2<=n<=6, palindromic, printed values");
}

#[test]
fn criterion_04_euler_series() {
    let euler = euler_real_series(6).unwrap();
    for n in 2..=6u32 {
        let from_series = euler.egf_coeff(n as usize).unwrap();
        let poly = poincare(Model::Supermaximal, n).unwrap();
        assert_eq!(from_series, poly.eval_q_minus_one(), "mismatch at n={n}");
        if n % 2 == 1 {
            assert!(from_series.is_zero(), "odd n={n} must vanish");
        }
    }
    assert_eq!(euler.egf_coeff(4).unwrap(), MultiPoly::constant_int(-18));
    pass("4", "Euler series = q=-1 specialization for 2<=n<=6, zero at odd n, -18 at n=4");
}

#[test]
fn criterion_05_bigpsi_product_formula() {
    let formula = bigpsi_formula(8).unwrap();
    let direct = bigpsi_direct(8, Strategy::default()).unwrap();
    for i in 0..=8usize {
        assert_eq!(
            formula.egf_coeff(i).unwrap(),
            direct.egf_coeff(i).unwrap(),
            "routes differ at t^{i}"
        );
    }
    // printed slices of the worked example
    let c4 = formula.egf_coeff(4).unwrap();
    let z0: MultiPoly = slice_z(&c4, 0);
    assert_eq!(z0, MultiPoly::one());
    let c5 = formula.egf_coeff(5).unwrap();
    assert_eq!(
        slice_z(&c5, 1),
        poly_from_terms(&[(16, 1, 0, 0), (6, 2, 0, 0), (1, 3, 0, 0)])
    );
    let c6 = formula.egf_coeff(6).unwrap();
    assert_eq!(slice_z(&c6, 2), poly_from_terms(&[(10, 2, 0, 0)]));
    // extraction reproduces the Poincaré polynomials
    let wide = bigpsi_formula(12).unwrap();
    for n in 2..=7u32 {
        assert_eq!(
            extract_poincare_from_bigpsi(&wide, n).unwrap(),
            poincare(Model::Minimal, n).unwrap(),
            "extraction differs at n={n}"
        );
    }
    pass("5", "product formula = grouped enumeration to t^8, printed slices, extraction to n=7");
}

fn slice_z(p: &MultiPoly, z: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (e, c) in p.terms() {
        if e.z == z {
            assert_eq!(e.y, 0);
            out.insert_term(Exp::q(e.q), c.clone());
        }
    }
    out
}

#[test]
fn criterion_06_closure_theorem() {
    for n in 4..=6u32 {
        let seed = maximal_seed(n).unwrap();
        let closed = building_closure(&seed, n).unwrap();
        let expect = enumerate_b(n).unwrap();
        assert_eq!(closed, expect, "closure misses elements at n={n}");
    }
    pass("6", "closure of the maximal seed is all of B(n-1) for n=4,5,6");
}

#[test]
fn criterion_07_bijection() {
    let mut elements = 0usize;
    for n in 2..=10u32 {
        for k in 0..=(10 - n) as usize {
            let count = count_f_k(n, k).unwrap();
            assert_eq!(
                BigUint::from(count),
                stirling2_assoc(n as usize + k, k + 1),
                "count differs at n={n} k={k}"
            );
            for s in enumerate_f_k(n, k).unwrap() {
                let p = nested_to_partition(&s).unwrap();
                assert_eq!(partition_to_nested(&p, n).unwrap(), s);
                elements += 1;
            }
        }
    }
    // the worked instance
    let s = NestedSet::new(
        vec![
            Block::v(5),
            Block::new(vec![1, 2], 5).unwrap(),
            Block::new(vec![3, 4], 5).unwrap(),
            Block::new(vec![3, 4, 5], 5).unwrap(),
        ],
        5,
    )
    .unwrap();
    let p = nested_to_partition(&s).unwrap();
    assert_eq!(
        p,
        SetPartition::new(vec![vec![1, 2], vec![3, 4], vec![5, 7], vec![6, 8]], 8).unwrap()
    );
    pass("7", &format!("counts match Stirling and {elements} elements roundtrip, n+k<=10"));
}

#[test]
fn criterion_08_extended_action() {
    // the two printed images of s_{alpha_0}
    let sigma = ExtPermutation::transposition(4, 0, 1).unwrap();
    let b12 = Block::new(vec![1, 2], 4).unwrap();
    let b34 = Block::new(vec![3, 4], 4).unwrap();
    assert_eq!(act_block(&sigma, &b12).unwrap(), Block::new(vec![1, 3, 4], 4).unwrap());
    assert_eq!(act_block(&sigma, &b34).unwrap(), b34);
    // group axioms, exhaustively through generator composition, n <= 5
    for n in 2..=5u32 {
        let blocks: Vec<Block> = (0u32..(1 << n))
            .filter(|m| m.count_ones() >= 2)
            .map(|m| {
                Block::new((0..n).filter(|b| m & (1 << b) != 0).map(|b| b + 1).collect(), n)
                    .unwrap()
            })
            .collect();
        let id = ExtPermutation::identity(n);
        for a in &blocks {
            assert_eq!(act_block(&id, a).unwrap(), *a);
        }
        for sig in all_extended(n) {
            for i in 0..n {
                let tau = ExtPermutation::adjacent(n, i).unwrap();
                let st = sig.compose(&tau).unwrap();
                for a in &blocks {
                    assert_eq!(
                        act_block(&st, a).unwrap(),
                        act_block(&sig, &act_block(&tau, a).unwrap()).unwrap(),
                        "axioms fail for sigma={sig} tau={tau} a={a}"
                    );
                }
            }
        }
    }
    // laminarity preserved on all of B(n-1) for n <= 6
    for n in 2..=6u32 {
        for s in enumerate_b(n).unwrap() {
            for i in 0..n {
                let g = ExtPermutation::adjacent(n, i).unwrap();
                let img = act_nested(&g, &s).unwrap();
                assert_eq!(img.len(), s.len());
            }
        }
    }
    pass("8", "printed images, exhaustive axioms n<=5, laminarity on B(n-1) n<=6");
}

#[test]
fn criterion_09_orbit_counts() {
    assert_eq!(orbit_count(3, 5, ActionMode::Natural).unwrap(), 3);
    assert_eq!(orbit_count(3, 5, ActionMode::Extended).unwrap(), 4);
    for n in 2..=6u32 {
        for k in 1..=(7usize.saturating_sub(n as usize)).min(n as usize - 1) {
            for mode in [ActionMode::Natural, ActionMode::Extended] {
                assert_eq!(
                    orbit_count(k, n, mode).unwrap(),
                    orbit_count_burnside(k, n, mode).unwrap(),
                    "BFS vs Burnside differ at n={n} k={k} {mode:?}"
                );
            }
        }
    }
    pass("9", "3 natural vs 4 extended orbits; BFS = Burnside for n+k<=7");
}

#[test]
fn criterion_10_tree_sum_identity() {
    assert!(tree_sum_check(6).unwrap());
    pass("10", "rooted-tree sum equals the derivative sum through order 6");
}

#[test]
fn criterion_11_labelled_characterization() {
    for n in 2..=6u32 {
        let image = minimal_basis_labelled(n).unwrap();
        let mut no_repeats = image.clone();
        no_repeats.dedup();
        assert_eq!(no_repeats.len(), image.len(), "not injective at n={n}");
        let mut expected = Vec::new();
        for k in 0..=(n as usize).saturating_sub(2) {
            expected.extend(enumerate_labelled_partitions(n, k).unwrap());
        }
        expected.sort();
        assert_eq!(image, expected, "image differs at n={n}");
    }
    pass("11", "basis image = independently enumerated labelled partitions, n<=6");
}
