use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::homalg::syzygy;
use crate::morphcat::{syzygy_object, to_t2_module, MorphObject};
use crate::quivalg::{Algebra, T2Algebra};
use crate::repmod::{
    decompose, hom_space, is_indecomposable, is_isomorphic, is_projective, ModuleMap,
    Representation, DEFAULT_BUDGET,
};

use super::gorenstein::{is_gorenstein_projective, GorensteinProfile};
use super::translate::{strip_projective_summands, tau_gprj};

/// Default bound on the number of candidates tried per dimension vector or
/// per pair `(A, B)`.
pub const ENUMERATION_LIMIT: u64 = 2_000_000;

fn checked_count(p: u32, exponent: usize, limit: u64, what: &str) -> Result<u64> {
    let mut n: u64 = 1;
    for _ in 0..exponent {
        n = n.saturating_mul(p as u64);
        if n > limit {
            return Err(Error::EnumerationCapExceeded(format!(
                "{what}: {p}^{exponent} candidates exceed {limit}"
            )));
        }
    }
    Ok(n)
}

/// All dimension vectors `0 <= d <= cap`, by total dimension then
/// lexicographically.
fn dim_vectors(cap: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &c in cap {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (0..=c).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.sort_by_key(|v| (v.iter().sum::<usize>(), v.clone()));
    out
}

/// Adds `m` to `found` unless an isomorphic module is already there.
fn insert_new(found: &mut Vec<Representation>, m: Representation) -> Result<bool> {
    for x in found.iter() {
        if x.dims() == m.dims() && is_isomorphic(x, &m)? {
            return Ok(false);
        }
    }
    found.push(m);
    Ok(true)
}

/// Brute-force list of the indecomposable modules with dimension vector at
/// most `cap`, up to isomorphism. Every tuple of arrow matrices is tried.
pub fn enumerate_indecomposables(
    alg: &Arc<Algebra>,
    cap: &[usize],
    limit: u64,
) -> Result<Vec<Representation>> {
    if cap.len() != alg.vertices() {
        return Err(Error::DimensionMismatch(
            "cap length differs from vertex count".into(),
        ));
    }
    let f = alg.field();
    let p = f.p();
    let mut found = Vec::new();
    for dims in dim_vectors(cap)
        .into_iter()
        .filter(|d| d.iter().any(|&k| k > 0))
    {
        let shapes: Vec<(usize, usize)> = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| (dims[a.target], dims[a.source]))
            .collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let total = checked_count(p, entries, limit, &format!("dimension vector {dims:?}"))?;
        let candidates: Vec<Representation> = (0..total)
            .into_par_iter()
            .filter_map(|code| {
                let mut code = code;
                let maps: Vec<Matrix> = shapes
                    .iter()
                    .map(|&(r, c)| {
                        Matrix::from_fn(f, r, c, |_, _| {
                            let v = (code % p as u64) as u32;
                            code /= p as u64;
                            v
                        })
                    })
                    .collect();
                let m = Representation::new(alg.clone(), dims.clone(), maps).ok()?;
                is_indecomposable(&m, DEFAULT_BUDGET, 0).then_some(m)
            })
            .collect();
        for m in candidates {
            insert_new(&mut found, m)?;
        }
    }
    Ok(found)
}

/// Direct sums of members of `base` with dimension vector at most `cap`
/// (including the zero module).
fn bounded_sums(alg: &Arc<Algebra>, base: &[Representation], cap: &[usize]) -> Vec<Representation> {
    fn go(
        base: &[Representation],
        cap: &[usize],
        start: usize,
        cur: Representation,
        out: &mut Vec<Representation>,
    ) {
        out.push(cur.clone());
        for (k, b) in base.iter().enumerate().skip(start) {
            let fits = cur
                .dims()
                .iter()
                .zip(b.dims())
                .zip(cap)
                .all(|((x, y), c)| x + y <= *c);
            if fits && !b.is_zero() {
                go(base, cap, k, cur.direct_sum(b).expect("same algebra"), out);
            }
        }
    }
    let mut out = Vec::new();
    go(base, cap, 0, Representation::zero(alg), &mut out);
    out
}

/// Indecomposable `T₂(Λ)`-modules `(A --f--> B)` with `A`, `B` sums of the
/// given indecomposable `Λ`-modules, dimension vector at most `cap` (one
/// entry per vertex of `T₂(Λ)`), and every `f ∈ Hom(A, B)` (monos only if
/// asked), up to isomorphism.
pub fn enumerate_h_indecomposables(
    t2: &T2Algebra,
    base: &[Representation],
    cap: &[usize],
    mono_only: bool,
    limit: u64,
) -> Result<Vec<Representation>> {
    let n = t2.base_vertices();
    if cap.len() != 2 * n {
        return Err(Error::DimensionMismatch(
            "cap must have one entry per T2 vertex".into(),
        ));
    }
    let sa = bounded_sums(&t2.base, base, &cap[..n]);
    let sb = bounded_sums(&t2.base, base, &cap[n..]);
    let pairs: Vec<(&Representation, &Representation)> = sa
        .iter()
        .flat_map(|a| sb.iter().map(move |b| (a, b)))
        .collect();
    let p = t2.base.field().p();
    let per_pair: Vec<Vec<Representation>> = pairs
        .par_iter()
        .map(|&(a, b)| -> Result<Vec<Representation>> {
            if a.is_zero() && b.is_zero() {
                return Ok(vec![]);
            }
            let hs = hom_space(a, b)?;
            let total = checked_count(p, hs.dim(), limit, "Hom(A, B)")?;
            let mut local = Vec::new();
            for code in 0..total {
                let mut code = code;
                let coeffs: Vec<u32> = (0..hs.dim())
                    .map(|_| {
                        let v = (code % p as u64) as u32;
                        code /= p as u64;
                        v
                    })
                    .collect();
                let f: ModuleMap = hs.combine(&coeffs);
                if mono_only && !f.is_injective() {
                    continue;
                }
                let rep = to_t2_module(t2, &MorphObject::new(f))?;
                for s in decompose(&rep, DEFAULT_BUDGET, 0).modules() {
                    insert_new(&mut local, s)?;
                }
            }
            Ok(local)
        })
        .collect::<Result<_>>()?;
    let mut found = Vec::new();
    for m in per_pair.into_iter().flatten() {
        insert_new(&mut found, m)?;
    }
    found.sort_by_key(|m| (m.dim(), m.dims().to_vec()));
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CensusTag {
    AIdentity,
    BCosocle,
    CSyzygy,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusEntry {
    pub id: String,
    pub dims_a: Vec<usize>,
    pub dims_b: Vec<usize>,
    pub tag: CensusTag,
}

#[derive(Clone, Debug, Serialize)]
pub struct GpCensus {
    pub objects: Vec<CensusEntry>,
    pub counts: BTreeMap<CensusTag, usize>,
    /// The objects as `T₂(Λ)`-modules, in the order of `objects`.
    #[serde(skip)]
    pub modules: Vec<Representation>,
}

impl GpCensus {
    pub fn count(&self, tag: CensusTag) -> usize {
        self.counts.get(&tag).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.objects.len()
    }
}

/// Indecomposable Gorenstein projective objects of `H(Λ)` with dimension
/// vector at most `cap`, tagged by the shapes `(c) Ω G ↪ P(G)`,
/// `(a) G = G`, `(b) 0 -> G` in that order.
pub fn classify_gp_census(
    t2: &T2Algebra,
    base: &[Representation],
    cap: &[usize],
    t2_profile: &GorensteinProfile,
) -> Result<GpCensus> {
    let candidates = enumerate_h_indecomposables(t2, base, cap, true, ENUMERATION_LIMIT)?;
    let named: Vec<(String, Representation)> = candidates
        .into_iter()
        .enumerate()
        .map(|(k, m)| (format!("G{k}"), m))
        .collect();
    tag_gp_census(t2, base, &named, t2_profile)
}

/// Keeps the Gorenstein projective members of a list of indecomposable
/// `T₂(Λ)`-modules and tags them against the shapes built from `base`.
pub fn tag_gp_census(
    t2: &T2Algebra,
    base: &[Representation],
    objects: &[(String, Representation)],
    t2_profile: &GorensteinProfile,
) -> Result<GpCensus> {
    let mut gp = Vec::new();
    for (id, m) in objects {
        if is_gorenstein_projective(m, t2_profile)? {
            gp.push((id.clone(), m.clone()));
        }
    }
    let shapes = |make: &dyn Fn(&Representation) -> MorphObject, nonprojective: bool| {
        base.iter()
            .filter(|g| !nonprojective || !is_projective(g))
            .map(|g| to_t2_module(t2, &make(g)))
            .collect::<Result<Vec<_>>>()
    };
    let c_shapes = shapes(&syzygy_object, true)?;
    let a_shapes = shapes(&MorphObject::identity_on, false)?;
    let b_shapes = shapes(&MorphObject::zero_into, false)?;
    let matches = |m: &Representation, list: &[Representation]| -> Result<bool> {
        for x in list {
            if x.dims() == m.dims() && is_isomorphic(x, m)? {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let n = t2.base_vertices();
    let mut objects = Vec::new();
    let mut counts = BTreeMap::new();
    for (id, m) in &gp {
        let tag = if matches(m, &c_shapes)? {
            CensusTag::CSyzygy
        } else if matches(m, &a_shapes)? {
            CensusTag::AIdentity
        } else if matches(m, &b_shapes)? {
            CensusTag::BCosocle
        } else {
            CensusTag::Other
        };
        *counts.entry(tag).or_insert(0) += 1;
        objects.push(CensusEntry {
            id: id.clone(),
            dims_a: m.dims()[..n].to_vec(),
            dims_b: m.dims()[n..].to_vec(),
            tag,
        });
    }
    Ok(GpCensus {
        objects,
        counts,
        modules: gp.into_iter().map(|(_, m)| m).collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TauSyzygyWitness {
    pub id: String,
    pub dims: Vec<usize>,
    pub tau_dim: usize,
    pub syzygy_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TauSyzygyReport {
    pub holds: bool,
    pub checked: usize,
    pub witnesses: Vec<TauSyzygyWitness>,
}

/// Tests `τ_G(G) ≅ Ω(G)` (stable parts) on every non-projective object of
/// the list.
pub fn check_tau_is_syzygy(
    objects: &[(String, Representation)],
    profile: &GorensteinProfile,
) -> Result<TauSyzygyReport> {
    let results: Vec<Option<TauSyzygyWitness>> = objects
        .par_iter()
        .filter(|(_, g)| !is_projective(g))
        .map(|(id, g)| -> Result<Option<TauSyzygyWitness>> {
            let tau = tau_gprj(g, profile)?;
            let om = strip_projective_summands(&syzygy(g))?;
            let same = tau.dims() == om.dims() && is_isomorphic(&tau, &om)?;
            Ok((!same).then(|| TauSyzygyWitness {
                id: id.clone(),
                dims: g.dims().to_vec(),
                tau_dim: tau.dim(),
                syzygy_dim: om.dim(),
            }))
        })
        .collect::<Result<_>>()?;
    let checked = results.len();
    let witnesses: Vec<TauSyzygyWitness> = results.into_iter().flatten().collect();
    Ok(TauSyzygyReport {
        holds: witnesses.is_empty(),
        checked,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arsubcat::gorenstein_profile;
    use crate::quivalg::{linear_quiver, t2_of, truncated_polynomial};

    #[test]
    fn dim_vector_order() {
        assert_eq!(
            dim_vectors(&[1, 1]),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn base_enumeration() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let l = enumerate_indecomposables(&d2, &[2], ENUMERATION_LIMIT).unwrap();
        assert_eq!(l.iter().map(|m| m.dim()).collect::<Vec<_>>(), vec![1, 2]);
        let a2 = linear_quiver(5, 2).unwrap();
        assert_eq!(
            enumerate_indecomposables(&a2, &[2, 2], ENUMERATION_LIMIT)
                .unwrap()
                .len(),
            3
        );
        let e = enumerate_indecomposables(&d2, &[4], 1000);
        assert!(matches!(e, Err(Error::EnumerationCapExceeded(_))));
    }

    #[test]
    fn census_shapes() {
        let d2 = truncated_polynomial(5, 2).unwrap();
        let base = enumerate_indecomposables(&d2, &[2], ENUMERATION_LIMIT).unwrap();
        let t2 = t2_of(&d2).unwrap();
        let pt = gorenstein_profile(&t2.t2, 3).unwrap();
        let c = classify_gp_census(&t2, &base, &[2, 2], &pt).unwrap();
        assert_eq!(c.total(), 5);
        assert_eq!(
            (
                c.count(CensusTag::AIdentity),
                c.count(CensusTag::BCosocle),
                c.count(CensusTag::CSyzygy)
            ),
            (2, 2, 1)
        );
        assert_eq!(c.count(CensusTag::Other), 0);
        let empty = classify_gp_census(&t2, &base, &[0, 0], &pt).unwrap();
        assert_eq!(empty.total(), 0);
    }

    #[test]
    fn tau_syzygy_controls() {
        let d3 = truncated_polynomial(5, 3).unwrap();
        let p = gorenstein_profile(&d3, 3).unwrap();
        let objs: Vec<(String, Representation)> =
            enumerate_indecomposables(&d3, &[2], ENUMERATION_LIMIT)
                .unwrap()
                .into_iter()
                .enumerate()
                .map(|(k, m)| (format!("X{k}"), m))
                .collect();
        let r = check_tau_is_syzygy(&objs, &p).unwrap();
        assert!(!r.holds);
        let s = r.witnesses.iter().find(|w| w.dims == vec![1]).unwrap();
        assert_eq!((s.tau_dim, s.syzygy_dim), (1, 2));
    }
}
