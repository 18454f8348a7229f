mod common;

use std::sync::Arc;

use arsubcat::arsubcat::strip_projective_summands;
use arsubcat::homalg::{
    ar_translate, ar_translate_inverse, ext, minimal_presentation, projective_dimension,
    stable_hom_proj, syzygy, transpose,
};
use arsubcat::quivalg::Algebra;
use arsubcat::repmod::{
    indecomposable_projective, is_isomorphic, is_projective, random_module, simple,
};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixtures() -> Vec<Arc<Algebra>> {
    vec![kx2(), kx3(), a2(), square()]
}

#[test]
fn double_dual_is_identity() {
    for (k, alg) in fixtures().into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + k as u64);
        for _ in 0..100 {
            let m = random_module(&alg, &mut rng);
            let dd = m.k_dual().k_dual().reanchor(&alg).unwrap();
            assert!(is_isomorphic(&m, &dd).unwrap());
        }
    }
}

#[test]
fn double_transpose_is_identity_up_to_projectives() {
    for (k, alg) in fixtures().into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(200 + k as u64);
        for _ in 0..100 {
            let m = random_module(&alg, &mut rng);
            let tt = transpose(&transpose(&m).unwrap())
                .unwrap()
                .reanchor(&alg)
                .unwrap();
            let a = strip_projective_summands(&m).unwrap();
            let b = strip_projective_summands(&tt).unwrap();
            assert!(a.dims() == b.dims() && is_isomorphic(&a, &b).unwrap());
        }
    }
}

#[test]
fn presentations_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for alg in fixtures() {
        for _ in 0..30 {
            let m = random_module(&alg, &mut rng);
            let pres = minimal_presentation(&m);
            assert!(pres.eps.is_surjective());
            assert!(pres.eps.compose(&pres.d).unwrap().is_zero());
            assert!(is_projective(pres.p0()) && is_projective(pres.p1()));
            let rank: usize = pres.d.maps().iter().map(|x| x.rank()).sum();
            assert_eq!(pres.p0().dim(), m.dim() + rank);
        }
    }
}

#[test]
fn translate_examples() {
    let d3 = kx3();
    for (_, m) in uniserials(&d3, 3).into_iter().filter(|(id, _)| id != "P") {
        // over a symmetric Nakayama algebra τ = Ω²
        let t = ar_translate(&m).unwrap();
        assert!(is_isomorphic(&t, &syzygy(&syzygy(&m))).unwrap());
        let back = ar_translate_inverse(&t).unwrap();
        assert!(is_isomorphic(&back, &m).unwrap());
    }
    let a = a2();
    assert!(is_isomorphic(&ar_translate(&simple(&a, 0)).unwrap(), &simple(&a, 1)).unwrap());
    assert!(ar_translate(&indecomposable_projective(&a, 1))
        .unwrap()
        .is_zero());
}

#[test]
fn projective_dimensions() {
    let a = a2();
    assert_eq!(projective_dimension(&simple(&a, 0), 5), Some(1));
    assert_eq!(projective_dimension(&simple(&a, 1), 5), Some(0));
    assert_eq!(projective_dimension(&simple(&kx2(), 0), 5), None);
}

#[test]
fn ext_and_stable_hom_on_dual_numbers() {
    let d = kx2();
    let s = simple(&d, 0);
    let p = indecomposable_projective(&d, 0);
    for i in 1..4 {
        assert_eq!(ext(&s, &s, i).unwrap().dim, 1);
        assert_eq!(ext(&s, &p, i).unwrap().dim, 0);
    }
    assert_eq!(stable_hom_proj(&s, &s).unwrap().stable_dim, 1);
    assert_eq!(stable_hom_proj(&p, &s).unwrap().stable_dim, 0);
}
