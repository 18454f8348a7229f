use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homalg::{ext, injective_dimension, projective_dimension};
use crate::morphcat::is_self_injective;
use crate::quivalg::Algebra;
use crate::repmod::{indecomposable_projective, Representation};

/// Self-injective dimension data of an algebra, computed up to a cap.
#[derive(Clone, Debug, Serialize)]
pub struct GorensteinProfile {
    #[serde(skip)]
    pub algebra: Arc<Algebra>,
    /// `max(id Λ_Λ, id _ΛΛ)` when both coresolutions stop within the cap.
    pub d: Option<usize>,
    pub cap: usize,
    pub is_selfinjective: bool,
    pub is_d_gorenstein: bool,
}

impl GorensteinProfile {
    /// `d`, or `NotGorensteinWithinCap`.
    pub fn gorenstein_dim(&self) -> Result<usize> {
        self.d.ok_or(Error::NotGorensteinWithinCap(self.cap))
    }
}

pub fn gorenstein_profile(alg: &Arc<Algebra>, cap: usize) -> Result<GorensteinProfile> {
    if cap == 0 {
        return Err(Error::DimensionMismatch(
            "Gorenstein cap must be at least 1".into(),
        ));
    }
    let side = |a: &Arc<Algebra>| -> Option<usize> {
        (0..a.vertices())
            .map(|i| injective_dimension(&indecomposable_projective(a, i), cap))
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    };
    let d = match (side(alg), side(&alg.opposite())) {
        (Some(r), Some(l)) => Some(r.max(l)),
        _ => None,
    };
    let is_selfinjective = is_self_injective(alg);
    Ok(GorensteinProfile {
        algebra: alg.clone(),
        d: if is_selfinjective { Some(0) } else { d },
        cap,
        is_selfinjective,
        is_d_gorenstein: is_selfinjective || d.is_some(),
    })
}

/// Over a `d`-Gorenstein algebra, `M` is Gorenstein projective iff
/// `Ext^i(M, Λ) = 0` for `1 <= i <= d`.
pub fn is_gorenstein_projective(m: &Representation, profile: &GorensteinProfile) -> Result<bool> {
    if !m.algebra().same_as(&profile.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let d = profile.gorenstein_dim()?;
    if profile.is_selfinjective {
        return Ok(true);
    }
    for i in 1..=d {
        for v in 0..profile.algebra.vertices() {
            let p = indecomposable_projective(&profile.algebra, v);
            if ext(m, &p, i)?.dim != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Projective dimension if some syzygy up to `cap` vanishes.
pub fn has_finite_projdim(m: &Representation, cap: usize) -> Option<usize> {
    projective_dimension(m, cap)
}
