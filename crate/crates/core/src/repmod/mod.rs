//! Finite-dimensional right modules as quiver representations.

mod decompose;
mod hom;
mod iso;
mod projinj;
mod rep;

pub use decompose::{
    decompose, decompose_certified, endo_min_poly, is_indecomposable, DecompositionCertificate,
    Evidence, Summand, DEFAULT_BUDGET,
};
pub use hom::{
    cokernel, end_space, factor_through, factor_through_epi, factor_through_mono, hom_basis,
    hom_space, image, kernel, quotient, submodule, HomSpace,
};
pub use iso::{find_isomorphism, indecomposables_isomorphic, is_isomorphic};
pub use projinj::{
    indecomposable_injective, indecomposable_projective, injective_envelope, injective_sum,
    is_injective, is_projective, map_from_projective_sum, projective_cover, projective_sum,
    radical, socle, top_dims, top_generators, InjectiveEnvelope, ProjectiveCover,
};
pub use rep::{sum_injections, sum_projections, ModuleMap, Representation};

use std::sync::Arc;

use rand::Rng;

use crate::quivalg::Algebra;

/// The simple module at vertex `i`.
pub fn simple(alg: &Arc<Algebra>, i: usize) -> Representation {
    let f = alg.field();
    let mut dims = vec![0; alg.vertices()];
    dims[i] = 1;
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| crate::exactlin::Matrix::zeros(f, dims[a.target], dims[a.source]))
        .collect();
    Representation::new_unchecked(alg.clone(), dims, maps)
}

/// A random finitely presented module: a quotient of one or two
/// indecomposable projectives by the submodule generated by up to two
/// random elements.
pub fn random_module<R: Rng + ?Sized>(alg: &Arc<Algebra>, rng: &mut R) -> Representation {
    let n = alg.vertices();
    let p = alg.field().p();
    let tops: Vec<usize> = (0..rng.gen_range(1..=2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    let p0 = projective_sum(alg, &tops);
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for _ in 0..rng.gen_range(0..=2) {
        let v = rng.gen_range(0..n);
        if p0.dims()[v] == 0 {
            continue;
        }
        gens.push(v);
        images.push(
            (0..p0.dims()[v])
                .map(|_| rng.gen_range(0..p))
                .collect::<Vec<u32>>(),
        );
    }
    let rel = map_from_projective_sum(alg, &gens, &p0, &images).expect("shapes agree");
    cokernel(&rel).0
}
