#![allow(dead_code)]

use std::sync::Arc;

use arsubcat::quivalg::{algebra_from_spec, linear_quiver, truncated_polynomial, Algebra};
use arsubcat::repmod::{indecomposable_projective, simple, Representation};

pub fn kx2() -> Arc<Algebra> {
    truncated_polynomial(5, 2).unwrap()
}

pub fn kx3() -> Arc<Algebra> {
    truncated_polynomial(5, 3).unwrap()
}

pub fn a2() -> Arc<Algebra> {
    linear_quiver(5, 2).unwrap()
}

/// The commutative square, i.e. the upper triangular matrices over A2.
pub fn square() -> Arc<Algebra> {
    algebra_from_spec(
        5,
        4,
        &[("a", 0, 1), ("b", 2, 3), ("e0", 0, 2), ("e1", 1, 3)],
        &[vec![(1, vec!["a", "e1"]), (-1, vec!["e0", "b"])]],
    )
    .unwrap()
}

/// Uniserial modules `k[x]/(x^j)` for `j = 1..=n`.
pub fn uniserials(alg: &Arc<Algebra>, n: usize) -> Vec<(String, Representation)> {
    use arsubcat::repmod::{cokernel, socle};
    let p = indecomposable_projective(alg, 0);
    let mut out = vec![("P".to_string(), p.clone())];
    let mut cur = p;
    for _ in 1..n {
        let (_, incl) = socle(&cur);
        cur = cokernel(&incl).0;
        out.push((format!("M{}", cur.dim()), cur.clone()));
    }
    out.reverse();
    if let Some(first) = out.first_mut() {
        first.0 = "S".into();
    }
    out
}

pub fn a2_indecomposables() -> Vec<(String, Representation)> {
    let a = a2();
    vec![
        ("S0".into(), simple(&a, 0)),
        ("S1".into(), simple(&a, 1)),
        ("P0".into(), indecomposable_projective(&a, 0)),
    ]
}
