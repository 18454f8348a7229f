use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homalg::{ar_translate, ext, stable_hom_proj};
use crate::repmod::{
    cokernel, decompose, is_isomorphic, is_projective, Representation, DEFAULT_BUDGET,
};

use super::gorenstein::GorensteinProfile;
use super::translate::{tau_gprj, tau_pfin};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Subcategory {
    Full,
    Gprj,
    Pfin,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityPair {
    pub x: String,
    pub y: String,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub subcategory: Subcategory,
    pub pairs: Vec<DualityPair>,
    pub all_equal: bool,
    /// Objects whose translate has a summand missing from the list.
    pub closure_violations: Vec<String>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.all_equal && self.closure_violations.is_empty()
    }
}

/// The translate of the subcategory applied to `x`.
pub fn relative_translate(
    x: &Representation,
    sub: Subcategory,
    profile: &GorensteinProfile,
) -> Result<Representation> {
    match sub {
        Subcategory::Full => ar_translate(x),
        Subcategory::Gprj => tau_gprj(x, profile),
        Subcategory::Pfin => tau_pfin(x, profile),
    }
}

fn contained(m: &Representation, list: &[(String, Representation)]) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    for s in decompose(m, DEFAULT_BUDGET, 0).modules() {
        let mut hit = false;
        for (_, y) in list {
            if y.dims() == s.dims() && is_isomorphic(y, &s)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `dim Hom̲(X, Y) = dim Ext¹(Y, τ_• X)` for every non-projective `X`
/// and every `Y` in the list, which is assumed to be the indecomposables of
/// the subcategory.
pub fn verify_ar_duality(
    objects: &[(String, Representation)],
    sub: Subcategory,
    profile: &GorensteinProfile,
) -> Result<DualityReport> {
    let xs: Vec<&(String, Representation)> =
        objects.iter().filter(|(_, x)| !is_projective(x)).collect();
    let taus: Vec<Representation> = xs
        .par_iter()
        .map(|(_, x)| relative_translate(x, sub, profile))
        .collect::<Result<_>>()?;
    let mut closure_violations = Vec::new();
    for ((id, _), t) in xs.iter().map(|p| (&p.0, &p.1)).zip(&taus) {
        if !contained(t, objects)? {
            closure_violations.push(id.clone());
        }
    }
    let jobs: Vec<(usize, usize)> = (0..xs.len())
        .flat_map(|i| (0..objects.len()).map(move |j| (i, j)))
        .collect();
    let pairs: Vec<DualityPair> = jobs
        .par_iter()
        .map(|&(i, j)| -> Result<DualityPair> {
            let (xid, x) = xs[i];
            let (yid, y) = &objects[j];
            let lhs = stable_hom_proj(x, y)?.stable_dim;
            let rhs = ext(y, &taus[i], 1)?.dim;
            Ok(DualityPair {
                x: xid.clone(),
                y: yid.clone(),
                lhs_dim: lhs,
                rhs_dim: rhs,
                equal: lhs == rhs,
            })
        })
        .collect::<Result<_>>()?;
    let all_equal = pairs.iter().all(|p| p.equal);
    Ok(DualityReport {
        subcategory: sub,
        pairs,
        all_equal,
        closure_violations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AlmostSplitCheck {
    pub ext_dim: usize,
    pub middle_dims: Vec<usize>,
    pub non_split: bool,
}

/// Builds `0 -> τ_G G -> E -> G -> 0` from a nonzero class in
/// `Ext¹(G, τ_G G)` as the pushout of `Ω G ↪ P` along the cocycle, and
/// reports whether `E ≇ τ_G G ⊕ G`.
pub fn almost_split_check(
    g: &Representation,
    profile: &GorensteinProfile,
) -> Result<AlmostSplitCheck> {
    let tau = tau_gprj(g, profile)?;
    let e = ext(g, &tau, 1)?;
    let Some(c) = e.cocycles.first() else {
        return Err(Error::Internal("Ext¹(G, τ G) vanishes".into()));
    };
    let neg = c.scale(g.field().neg(1));
    let (middle, _) = cokernel(&e.syzygy_inclusion.vstack(&neg)?);
    let split = tau.direct_sum(g)?;
    let non_split = middle.dims() != split.dims() || !is_isomorphic(&middle, &split)?;
    Ok(AlmostSplitCheck {
        ext_dim: e.dim,
        middle_dims: middle.dims().to_vec(),
        non_split,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arsubcat::gorenstein_profile;
    use crate::quivalg::truncated_polynomial;
    use crate::repmod::{indecomposable_projective, simple};

    #[test]
    fn full_duality_on_dual_numbers() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let p = gorenstein_profile(&d2, 3).unwrap();
        let objs = vec![
            ("S".to_string(), simple(&d2, 0)),
            ("P".to_string(), indecomposable_projective(&d2, 0)),
        ];
        let r = verify_ar_duality(&objs, Subcategory::Full, &p).unwrap();
        assert_eq!(r.pairs.len(), 2);
        assert!(r.passed());
        let ss = r.pairs.iter().find(|q| q.y == "S").unwrap();
        assert_eq!((ss.lhs_dim, ss.rhs_dim), (1, 1));
    }

    #[test]
    fn closure_is_checked() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let p = gorenstein_profile(&d2, 3).unwrap();
        let m = simple(&d2, 0).direct_sum(&simple(&d2, 0)).unwrap();
        let objs = vec![("SS".to_string(), m)];
        let r = verify_ar_duality(&objs, Subcategory::Full, &p).unwrap();
        assert_eq!(r.closure_violations, vec!["SS".to_string()]);
    }

    #[test]
    fn almost_split_over_dual_numbers() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let p = gorenstein_profile(&d2, 3).unwrap();
        let r = almost_split_check(&simple(&d2, 0), &p).unwrap();
        assert!(r.non_split);
        assert_eq!(r.middle_dims, vec![2]);
    }
}
