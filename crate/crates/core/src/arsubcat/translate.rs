use crate::error::{Error, Result};
use crate::homalg::{
    ar_translate, minimal_presentation, right_minimalize, syzygy_power, transpose,
};
use crate::morphcat::{imin, is_self_injective, mimo, MorphObject};
use crate::repmod::{
    cokernel, decompose, factor_through_epi, is_projective, projective_sum, top_dims,
    Representation, DEFAULT_BUDGET,
};

use super::gorenstein::{has_finite_projdim, is_gorenstein_projective, GorensteinProfile};

/// The direct sum of the non-projective indecomposable summands of `m`.
pub fn strip_projective_summands(m: &Representation) -> Result<Representation> {
    if m.is_zero() || is_projective(m) {
        return Ok(Representation::zero(m.algebra()));
    }
    let parts: Vec<Representation> = decompose(m, DEFAULT_BUDGET, 0)
        .modules()
        .into_iter()
        .filter(|s| !is_projective(s))
        .collect();
    Representation::direct_sum_all(m.algebra(), &parts)
}

/// `τ_G(G) = Ω^d D Ω^d Tr G`; projective summands of `G` go to zero and
/// the result is returned without projective summands.
pub fn tau_gprj(g: &Representation, profile: &GorensteinProfile) -> Result<Representation> {
    let d = profile.gorenstein_dim()?;
    if !is_gorenstein_projective(g, profile)? {
        return Err(Error::NotGorensteinProjective);
    }
    let g = strip_projective_summands(g)?;
    if g.is_zero() {
        return Ok(g);
    }
    let tr = transpose(&g)?;
    let left = syzygy_power(&tr, d);
    let back = left.k_dual().reanchor(g.algebra())?;
    strip_projective_summands(&syzygy_power(&back, d))
}

/// Relative translate in `P^<∞(Λ)` over a 1-Gorenstein algebra: with
/// `P1 --f--> P0 -> τ M -> 0` minimal, the right-minimal part of
/// `coker(Mimo f) -> coker f`.
pub fn tau_pfin(m: &Representation, profile: &GorensteinProfile) -> Result<Representation> {
    let d = profile.d;
    if !profile.is_d_gorenstein || d.is_none_or(|d| d > 1) {
        return Err(Error::NotOneGorenstein(d));
    }
    if has_finite_projdim(m, 1).is_none() {
        return Err(Error::InfiniteProjectiveDimension(1));
    }
    let m = strip_projective_summands(m)?;
    if m.is_zero() {
        return Ok(m);
    }
    let tau = ar_translate(&m)?;
    let pres = minimal_presentation(&tau);
    let (mi, canon) = mimo(&MorphObject::new(pres.d.clone()))?;
    let (_, pi) = cokernel(mi.f());
    let through = pres.eps.compose(&canon.sigma2)?;
    let h = factor_through_epi(&pi, &through)
        .ok_or_else(|| Error::Internal("cokernel map of Mimo is not induced".into()))?;
    Ok(right_minimalize(&h, 0)?.m1)
}

/// `Tr_{P(Λ)}(P) = IMin(Tr(coker f) ⊕ Q1*)` for a locally projective object
/// over a self-injective algebra, where `Q1` is the largest summand of `A`
/// killed by `f`. The result lives over the opposite algebra.
pub fn tr_p_lambda(obj: &MorphObject) -> Result<MorphObject> {
    let alg = obj.algebra();
    if !is_self_injective(alg) {
        return Err(Error::NotSelfInjective);
    }
    if !is_projective(obj.a()) || !is_projective(obj.b()) {
        return Err(Error::NotLocallyProjective);
    }
    let op = alg.opposite();
    let q1 = right_minimalize(obj.f(), 0)?.m2;
    let tops: Vec<usize> = top_dims(&q1)
        .iter()
        .enumerate()
        .flat_map(|(v, &k)| std::iter::repeat_n(v, k))
        .collect();
    let q1_star = projective_sum(&op, &tops);
    let (c, _) = cokernel(obj.f());
    let tr = transpose(&c)?;
    Ok(imin(&tr.direct_sum(&q1_star)?))
}
