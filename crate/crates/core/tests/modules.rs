mod common;

use arsubcat::repmod::{
    decompose, hom_space, indecomposable_injective, indecomposable_projective, is_indecomposable,
    is_isomorphic, random_module, simple, DEFAULT_BUDGET,
};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn hom_dimensions_over_dual_numbers() {
    let d = kx2();
    let s = simple(&d, 0);
    let p = indecomposable_projective(&d, 0);
    assert_eq!(hom_space(&s, &s).unwrap().dim(), 1);
    assert_eq!(hom_space(&s, &p).unwrap().dim(), 1);
    assert_eq!(hom_space(&p, &s).unwrap().dim(), 1);
    assert_eq!(hom_space(&p, &p).unwrap().dim(), 2);
}

#[test]
fn projectives_and_injectives_of_a2() {
    let a = a2();
    assert_eq!(indecomposable_projective(&a, 0).dims(), &[1, 1]);
    assert_eq!(indecomposable_projective(&a, 1).dims(), &[0, 1]);
    assert_eq!(indecomposable_injective(&a, 0).dims(), &[1, 0]);
    assert_eq!(indecomposable_injective(&a, 1).dims(), &[1, 1]);
}

#[test]
fn uniserials_are_indecomposable_and_distinct() {
    let us = uniserials(&kx3(), 3);
    let dims: Vec<usize> = us.iter().map(|(_, m)| m.dim()).collect();
    assert_eq!(dims, vec![1, 2, 3]);
    for (_, m) in &us {
        assert!(is_indecomposable(m, DEFAULT_BUDGET, 0));
    }
}

#[test]
fn random_decompositions_reassemble() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for alg in [kx2(), kx3(), a2(), square()] {
        for _ in 0..25 {
            let m = random_module(&alg, &mut rng);
            let cert = decompose(&m, DEFAULT_BUDGET, 3);
            cert.verify().unwrap();
            let parts = cert.modules();
            let total: usize = parts.iter().map(|x| x.dim()).sum();
            assert_eq!(total, m.dim());
            for part in &parts {
                assert!(is_indecomposable(part, DEFAULT_BUDGET, 0));
            }
        }
    }
}

#[test]
fn isomorphism_is_basis_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alg = square();
    for _ in 0..20 {
        let m = random_module(&alg, &mut rng);
        let b: Vec<_> = m
            .dims()
            .iter()
            .map(|&k| {
                arsubcat::exactlin::Matrix::from_fn(alg.field(), k, k, |r, c| {
                    if r == c {
                        2
                    } else if r < c {
                        1
                    } else {
                        0
                    }
                })
            })
            .collect();
        let n = m.change_basis(&b).unwrap();
        assert!(is_isomorphic(&m, &n).unwrap());
    }
}
