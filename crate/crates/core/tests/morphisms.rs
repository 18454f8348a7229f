mod common;

use std::sync::Arc;

use arsubcat::arsubcat::{
    enumerate_h_indecomposables, gorenstein_profile, tau_gprj, tr_p_lambda, ENUMERATION_LIMIT,
};
use arsubcat::morphcat::{
    factor_through_mimo, from_t2_module, hom_h_basis, imin, mimo, pmin, tau_s_lambda, to_t2_module,
    MorphObject,
};
use arsubcat::quivalg::{t2_of, Algebra, T2Algebra};
use arsubcat::repmod::{
    decompose, hom_space, indecomposable_projective, is_injective, is_isomorphic, is_projective,
    simple, ModuleMap, Representation, DEFAULT_BUDGET,
};
use common::*;

fn h_objects(t2: &T2Algebra, base: &[Representation], mono_only: bool) -> Vec<MorphObject> {
    enumerate_h_indecomposables(t2, base, &[2, 2], mono_only, ENUMERATION_LIMIT)
        .unwrap()
        .iter()
        .map(|r| from_t2_module(t2, r).unwrap())
        .collect()
}

fn base_list(alg: &Arc<Algebra>) -> Vec<Representation> {
    uniserials(alg, alg.dim())
        .into_iter()
        .map(|(_, m)| m)
        .collect()
}

fn iso_objects(t2: &T2Algebra, x: &MorphObject, y: &MorphObject) -> bool {
    let a = to_t2_module(t2, x).unwrap();
    let b = to_t2_module(t2, y).unwrap();
    a.dims() == b.dims() && is_isomorphic(&a, &b).unwrap()
}

/// The object with its T2-projective summands removed.
fn strip_t2(t2: &T2Algebra, x: &MorphObject) -> MorphObject {
    let parts = decompose(&to_t2_module(t2, x).unwrap(), DEFAULT_BUDGET, 0).modules();
    let mut out = MorphObject::zero(&t2.base);
    for p in parts.iter().filter(|p| !is_projective(p)) {
        out = out.direct_sum(&from_t2_module(t2, p).unwrap()).unwrap();
    }
    out
}

#[test]
fn h_of_dual_numbers_has_nine_indecomposables() {
    let d = kx2();
    let t2 = t2_of(&d).unwrap();
    let all = h_objects(&t2, &base_list(&d), false);
    assert_eq!(all.len(), 9);
    assert_eq!(all.iter().filter(|o| o.is_mono()).count(), 5);
}

#[test]
fn mimo_is_a_minimal_right_approximation() {
    for alg in [kx2(), kx3()] {
        let t2 = t2_of(&alg).unwrap();
        let objs = h_objects(&t2, &base_list(&alg), false);
        let monos: Vec<&MorphObject> = objs.iter().filter(|o| o.is_mono()).collect();
        let mut checked = 0;
        for f in &objs {
            let (mi, canon) = mimo(f).unwrap();
            assert!(mi.is_mono());
            // the canonical map is the identity on A and a split epi on B
            assert!(canon.sigma1.is_isomorphism() && canon.sigma2.is_surjective());
            for g in &monos {
                for phi in hom_h_basis(g, f).unwrap() {
                    let h = factor_through_mimo(g, f, &phi)
                        .unwrap()
                        .expect("factorization exists");
                    assert_eq!(canon.sigma1.compose(&h.sigma1).unwrap(), phi.sigma1);
                    assert_eq!(canon.sigma2.compose(&h.sigma2).unwrap(), phi.sigma2);
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn mimo_fixes_monos() {
    let d = kx2();
    let lam = indecomposable_projective(&d, 0);
    let (mi, _) = mimo(&MorphObject::zero_from(&simple(&d, 0))).unwrap();
    assert_eq!((mi.a().dims(), mi.b().dims()), (&[1][..], &[2][..]));
    let (same, _) = mimo(&MorphObject::identity_on(&lam)).unwrap();
    assert_eq!(same.b().dims(), &[2]);
}

#[test]
fn presentations_as_objects() {
    let d = kx3();
    let s = simple(&d, 0);
    let i = imin(&s);
    assert!(is_injective(i.a()) && is_injective(i.b()));
    let p = pmin(&s);
    assert!(is_projective(p.a()) && is_projective(p.b()));
    let (c, _) = arsubcat::repmod::cokernel(p.f());
    assert!(is_isomorphic(&c, &s).unwrap());
}

#[test]
fn submodule_translate_agrees_with_gorenstein_translate() {
    let d = kx2();
    let t2 = t2_of(&d).unwrap();
    let prof = gorenstein_profile(&t2.t2, 4).unwrap();
    for obj in h_objects(&t2, &base_list(&d), true) {
        let m = to_t2_module(&t2, &obj).unwrap();
        if is_projective(&m) {
            assert!(tau_s_lambda(&t2, &obj).unwrap().is_zero());
            continue;
        }
        let ts = tau_s_lambda(&t2, &obj).unwrap();
        let tg = from_t2_module(&t2, &tau_gprj(&m, &prof).unwrap()).unwrap();
        assert!(iso_objects(&t2, &ts, &tg));
    }
}

#[test]
fn locally_projective_transpose_is_an_involution() {
    let d = kx2();
    let t2 = t2_of(&d).unwrap();
    let lam = indecomposable_projective(&d, 0);
    let x = hom_space(&lam, &lam)
        .unwrap()
        .basis()
        .iter()
        .find(|g| !g.is_zero() && g.is_nilpotent_endo())
        .cloned()
        .unwrap();
    let objects = [
        MorphObject::identity_on(&lam),
        MorphObject::zero_into(&lam),
        MorphObject::zero_from(&lam),
        MorphObject::new(x),
    ];
    for obj in &objects {
        let once = tr_p_lambda(obj).unwrap();
        let twice = tr_p_lambda(&once).unwrap().reanchor(&d).unwrap();
        assert!(iso_objects(
            &t2,
            &strip_t2(&t2, &twice),
            &strip_t2(&t2, obj)
        ));
    }
}

#[test]
fn multiplication_by_x_is_not_mono() {
    let d = kx2();
    let lam = indecomposable_projective(&d, 0);
    let hs = hom_space(&lam, &lam).unwrap();
    let g: Vec<&ModuleMap> = hs
        .basis()
        .iter()
        .filter(|g| g.is_nilpotent_endo() && !g.is_zero())
        .collect();
    assert_eq!(g.len(), 1);
    assert!(!MorphObject::new(g[0].clone()).is_mono());
}
