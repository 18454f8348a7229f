//! Syzygies, transpose, AR translation, stable Hom and Ext.

mod presentation;
mod stable;

pub use presentation::{
    ar_translate, ar_translate_inverse, ar_translate_map, cosyzygy, dual_presentation_map,
    dual_projective_map, injective_dimension, k_dual, minimal_presentation, projective_dimension,
    syzygy, syzygy_power, syzygy_with_inclusion, transpose, transpose_map, MinimalPresentation,
};
pub use stable::{
    ext, is_right_minimal, nakayama, right_minimalize, stable_hom_inj, stable_hom_proj, ExtGroup,
    RightMinimal, StableHomSpace,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivalg::{linear_quiver, truncated_polynomial};
    use crate::repmod::{
        decompose, indecomposable_injective, indecomposable_projective, is_isomorphic,
        is_projective, random_module, simple, sum_projections, ModuleMap, Representation,
        DEFAULT_BUDGET,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn syzygy_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let s = simple(&d2, 0);
        assert!(is_isomorphic(&syzygy(&s), &s).unwrap());
        let d3 = truncated_polynomial(5, 3).unwrap();
        assert_eq!(syzygy(&simple(&d3, 0)).dims(), &[2]);
        assert!(syzygy(&indecomposable_projective(&d3, 0)).is_zero());
        assert!(cosyzygy(&Representation::zero(&d3)).is_zero());
        assert!(is_isomorphic(&cosyzygy(&s), &s).unwrap());
    }

    #[test]
    fn dual_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        assert!(k_dual(&Representation::zero(&d2)).is_zero());
        let lam = indecomposable_projective(&d2, 0);
        let dl = k_dual(&lam).reanchor(&d2).unwrap();
        assert!(is_isomorphic(&dl, &lam).unwrap());
    }

    #[test]
    fn transpose_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let s = simple(&d2, 0);
        let t = transpose(&s).unwrap();
        assert_eq!(t.dims(), &[1]);
        assert!(transpose(&indecomposable_projective(&d2, 0))
            .unwrap()
            .is_zero());
        let tt = transpose(&t).unwrap().reanchor(&d2).unwrap();
        assert!(is_isomorphic(&tt, &s).unwrap());
    }

    #[test]
    fn tau_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let s = simple(&d2, 0);
        assert!(is_isomorphic(&ar_translate(&s).unwrap(), &s).unwrap());
        let a2 = linear_quiver(5, 2).unwrap();
        let t = ar_translate(&simple(&a2, 0)).unwrap();
        assert!(is_isomorphic(&t, &simple(&a2, 1)).unwrap());
        for i in 0..2 {
            assert!(ar_translate(&indecomposable_projective(&a2, i))
                .unwrap()
                .is_zero());
        }
        let back = ar_translate_inverse(&simple(&a2, 1)).unwrap();
        assert!(is_isomorphic(&back, &simple(&a2, 0)).unwrap());
        let d3 = truncated_polynomial(5, 3).unwrap();
        assert_eq!(ar_translate(&simple(&d3, 0)).unwrap().dim(), 1);
    }

    #[test]
    fn stable_hom_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let s = simple(&d2, 0);
        let lam = indecomposable_projective(&d2, 0);
        assert_eq!(stable_hom_proj(&s, &s).unwrap().stable_dim, 1);
        assert_eq!(stable_hom_proj(&lam, &s).unwrap().stable_dim, 0);
        assert_eq!(stable_hom_inj(&lam, &lam).unwrap().stable_dim, 0);
        let h = stable_hom_proj(&lam, &lam).unwrap();
        assert_eq!(h.total_dim, h.factoring_dim + h.stable_dim);
    }

    #[test]
    fn ext_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let s = simple(&d2, 0);
        assert_eq!(ext(&s, &s, 1).unwrap().dim, 1);
        assert_eq!(ext(&s, &s, 3).unwrap().dim, 1);
        assert_eq!(
            ext(&indecomposable_projective(&d2, 0), &s, 1).unwrap().dim,
            0
        );
        let a2 = linear_quiver(5, 2).unwrap();
        assert_eq!(ext(&simple(&a2, 0), &simple(&a2, 1), 1).unwrap().dim, 1);
        assert_eq!(ext(&simple(&a2, 1), &simple(&a2, 0), 1).unwrap().dim, 0);
        assert!(ext(&s, &s, 0).is_err());
    }

    #[test]
    fn right_minimalize_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let s = simple(&d2, 0);
        let lam = indecomposable_projective(&d2, 0);
        let cover = crate::repmod::projective_cover(&s).map;
        let r = right_minimalize(&cover, 0).unwrap();
        assert!(r.m2.is_zero());
        // [cover, 0] : Λ ⊕ S -> S
        let (p1, _) = sum_projections(&lam, &s).unwrap();
        let h = cover.compose(&p1).unwrap();
        let r = right_minimalize(&h, 0).unwrap();
        assert!(is_isomorphic(&r.m1, &lam).unwrap());
        assert!(is_isomorphic(&r.m2, &s).unwrap());
        assert!(is_right_minimal(&r.h1).unwrap());
        assert_eq!(r.h1, h.compose(&r.incl1).unwrap());
        let z = ModuleMap::zero(&lam, &s);
        let r = right_minimalize(&z, 0).unwrap();
        assert!(r.m1.is_zero());
        assert_eq!(r.m2.dims(), lam.dims());
    }

    #[test]
    fn nakayama_examples() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let lam = indecomposable_projective(&d2, 0);
        assert!(is_isomorphic(&nakayama(&lam).unwrap(), &lam).unwrap());
        let a2 = linear_quiver(5, 2).unwrap();
        let n = nakayama(&indecomposable_projective(&a2, 1)).unwrap();
        assert!(is_isomorphic(&n, &indecomposable_injective(&a2, 1)).unwrap());
        assert!(nakayama(&Representation::zero(&a2)).unwrap().is_zero());
        assert!(nakayama(&simple(&a2, 0)).is_err());
    }

    #[test]
    fn dimensions_of_homological_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (alg, selfinjective) in [
            (truncated_polynomial(5, 3).unwrap(), true),
            (truncated_polynomial(5, 2).unwrap(), true),
            (linear_quiver(5, 3).unwrap(), false),
        ] {
            for _ in 0..12 {
                let m = random_module(&alg, &mut rng);
                let n = random_module(&alg, &mut rng);
                let e = ext(&m, &n, 1).unwrap();
                let om = syzygy(&m);
                let st = stable_hom_proj(&om, &n).unwrap();
                if selfinjective {
                    assert_eq!(e.dim, st.stable_dim);
                } else {
                    assert!(e.dim >= st.stable_dim);
                }
                // D D M ≅ M and Tr Tr M ≅ M up to projective summands
                let dd = m.k_dual().k_dual().reanchor(&alg).unwrap();
                assert!(is_isomorphic(&dd, &m).unwrap());
                let tt = transpose(&transpose(&m).unwrap())
                    .unwrap()
                    .reanchor(&alg)
                    .unwrap();
                let strip = |x: &Representation| -> Vec<Representation> {
                    decompose(x, DEFAULT_BUDGET, 0)
                        .modules()
                        .into_iter()
                        .filter(|s| !is_projective(s))
                        .collect()
                };
                let a = strip(&m);
                let b = strip(&tt);
                assert_eq!(a.len(), b.len());
                let sa = Representation::direct_sum_all(&alg, &a).unwrap();
                let sb = Representation::direct_sum_all(&alg, &b).unwrap();
                assert!(is_isomorphic(&sa, &sb).unwrap());
            }
        }
    }
}
