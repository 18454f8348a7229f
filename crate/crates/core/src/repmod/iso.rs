use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::decompose::{decompose, DEFAULT_BUDGET};
use super::hom::hom_space;
use super::rep::{ModuleMap, Representation};
use crate::error::Result;

/// Random invertible-intertwiner attempts before the exact fallback.
const RANDOM_TRIES: usize = 24;

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    Ok(find_isomorphism(m, n, 0)?.is_some())
}

/// An isomorphism `m -> n` if one exists. Random elements of `Hom(m, n)` are
/// tried first; the exact fallback decomposes both sides and matches
/// indecomposable summands pairwise.
pub fn find_isomorphism(
    m: &Representation,
    n: &Representation,
    seed: u64,
) -> Result<Option<ModuleMap>> {
    let hs = hom_space(m, n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(ModuleMap::zero(m, n)));
    }
    if hs.dim() == 0 {
        return Ok(None);
    }
    let ends = (hom_space(m, m)?.dim(), hom_space(n, n)?.dim());
    if ends.0 != hs.dim() || ends.1 != hs.dim() {
        return Ok(None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIES {
        let g = hs.random_element(&mut rng);
        if g.is_isomorphism() {
            return Ok(Some(g));
        }
    }
    exact_isomorphism(m, n, seed)
}

/// Exact test for indecomposable modules: `m ≅ n` iff `h ∘ g` is not
/// nilpotent for some basis maps `g : m -> n`, `h : n -> m`.
pub fn indecomposables_isomorphic(
    m: &Representation,
    n: &Representation,
) -> Result<Option<ModuleMap>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let gs = hom_space(m, n)?;
    let hs = hom_space(n, m)?;
    for g in gs.basis() {
        for h in hs.basis() {
            if !h.compose(g)?.is_nilpotent_endo() {
                return Ok(Some(g.clone()));
            }
        }
    }
    Ok(None)
}

fn exact_isomorphism(
    m: &Representation,
    n: &Representation,
    seed: u64,
) -> Result<Option<ModuleMap>> {
    let dm = decompose(m, DEFAULT_BUDGET, seed);
    let dn = decompose(n, DEFAULT_BUDGET, seed.wrapping_add(1));
    if dm.summands.len() != dn.summands.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.summands.len()];
    let mut iso = ModuleMap::zero(m, n);
    for sm in &dm.summands {
        let mut found = false;
        for (k, sn) in dn.summands.iter().enumerate() {
            if used[k] {
                continue;
            }
            if let Some(g) = indecomposables_isomorphic(&sm.module, &sn.module)? {
                used[k] = true;
                found = true;
                let piece = sn.inclusion.compose(&g)?.compose(&sm.projection)?;
                iso = iso.add(&piece)?;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    Ok(iso.is_isomorphism().then_some(iso))
}
