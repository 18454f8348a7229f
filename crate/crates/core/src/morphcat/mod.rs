//! The morphism category `H(Λ)` of maps `A -> B` and its identification with
//! modules over `T₂(Λ)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::homalg::ar_translate_map;
use crate::quivalg::{Algebra, T2Algebra};
use crate::repmod::{
    cokernel, decompose, hom_space, indecomposable_projective, injective_envelope, is_injective,
    is_projective, kernel, projective_cover, sum_projections, HomSpace, ModuleMap, Representation,
    DEFAULT_BUDGET,
};

/// An object `A --f--> B` of `H(Λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphObject {
    f: ModuleMap,
}

impl MorphObject {
    pub fn new(f: ModuleMap) -> Self {
        MorphObject { f }
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let z = Representation::zero(alg);
        MorphObject {
            f: ModuleMap::zero(&z, &z),
        }
    }

    /// `G --1--> G`.
    pub fn identity_on(g: &Representation) -> Self {
        MorphObject {
            f: ModuleMap::identity(g),
        }
    }

    /// `0 --> G`.
    pub fn zero_into(g: &Representation) -> Self {
        MorphObject {
            f: ModuleMap::zero(&Representation::zero(g.algebra()), g),
        }
    }

    /// `G --> 0`.
    pub fn zero_from(g: &Representation) -> Self {
        MorphObject {
            f: ModuleMap::zero(g, &Representation::zero(g.algebra())),
        }
    }

    pub fn a(&self) -> &Representation {
        self.f.source()
    }

    pub fn b(&self) -> &Representation {
        self.f.target()
    }

    pub fn f(&self) -> &ModuleMap {
        &self.f
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.f.source().algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.a().is_zero() && self.b().is_zero()
    }

    pub fn is_mono(&self) -> bool {
        self.f.is_injective()
    }

    pub fn direct_sum(&self, other: &MorphObject) -> Result<MorphObject> {
        Ok(MorphObject {
            f: self.f.direct_sum(&other.f)?,
        })
    }

    pub fn reanchor(self, alg: &Arc<Algebra>) -> Result<MorphObject> {
        Ok(MorphObject {
            f: self.f.reanchor(alg)?,
        })
    }
}

/// A morphism `(σ₁, σ₂)` of `H(Λ)`: `f' σ₁ = σ₂ f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphMap {
    pub sigma1: ModuleMap,
    pub sigma2: ModuleMap,
}

impl MorphMap {
    pub fn new(
        source: &MorphObject,
        target: &MorphObject,
        sigma1: ModuleMap,
        sigma2: ModuleMap,
    ) -> Result<Self> {
        let lhs = target.f().compose(&sigma1)?;
        let rhs = sigma2.compose(source.f())?;
        if lhs != rhs {
            return Err(Error::InvalidMap("square does not commute".into()));
        }
        Ok(MorphMap { sigma1, sigma2 })
    }
}

/// Basis of `Hom_{H(Λ)}(x, y)` as pairs `(σ₁, σ₂)`.
pub fn hom_h_basis(x: &MorphObject, y: &MorphObject) -> Result<Vec<MorphMap>> {
    let ha = hom_space(x.a(), y.a())?;
    let hb = hom_space(x.b(), y.b())?;
    // columns: f' σ₁ for σ₁ in ha, then -σ₂ f for σ₂ in hb
    let mut cols: Vec<ModuleMap> = ha
        .basis()
        .iter()
        .map(|s| y.f().compose(s))
        .collect::<Result<_>>()?;
    for s in hb.basis() {
        cols.push(s.compose(x.f())?.scale(x.a().field().neg(1)));
    }
    let m = HomSpace::columns_of(x.a(), y.b(), &cols);
    let ker = m.kernel_basis();
    let na = ha.dim();
    Ok((0..ker.cols())
        .map(|c| {
            let v = ker.column(c);
            MorphMap {
                sigma1: ha.combine(&v[..na]),
                sigma2: hb.combine(&v[na..]),
            }
        })
        .collect())
}

/// The `T₂(Λ)`-module of an object: `A` on the first copy of the quiver,
/// `B` on the second, `eps_i` acting by `f_i`.
pub fn to_t2_module(t2: &T2Algebra, obj: &MorphObject) -> Result<Representation> {
    if !obj.algebra().same_as(&t2.base) {
        return Err(Error::AlgebraMismatch);
    }
    let n = t2.base_vertices();
    let mut dims = obj.a().dims().to_vec();
    dims.extend_from_slice(obj.b().dims());
    let mut maps: Vec<Matrix> = obj.a().maps().to_vec();
    maps.extend(obj.b().maps().iter().cloned());
    maps.extend((0..n).map(|i| obj.f().at(i).clone()));
    Representation::new(t2.t2.clone(), dims, maps)
}

pub fn from_t2_module(t2: &T2Algebra, rep: &Representation) -> Result<MorphObject> {
    if !rep.algebra().same_as(&t2.t2) {
        return Err(Error::AlgebraMismatch);
    }
    let n = t2.base_vertices();
    let m = t2.base.arrow_count();
    let a = Representation::new(
        t2.base.clone(),
        rep.dims()[..n].to_vec(),
        (0..m).map(|k| rep.map(t2.a_arrow(k)).clone()).collect(),
    )?;
    let b = Representation::new(
        t2.base.clone(),
        rep.dims()[n..].to_vec(),
        (0..m).map(|k| rep.map(t2.b_arrow(k)).clone()).collect(),
    )?;
    let f = ModuleMap::new(
        a,
        b,
        (0..n).map(|i| rep.map(t2.eps_arrow(i)).clone()).collect(),
    )?;
    Ok(MorphObject { f })
}

pub fn morph_map_to_t2(
    t2: &T2Algebra,
    source: &MorphObject,
    target: &MorphObject,
    sigma: &MorphMap,
) -> Result<ModuleMap> {
    let mut maps = sigma.sigma1.maps().to_vec();
    maps.extend(sigma.sigma2.maps().iter().cloned());
    ModuleMap::new(to_t2_module(t2, source)?, to_t2_module(t2, target)?, maps)
}

/// `Mimo(f) = [f, e] : A -> B ⊕ I(ker f)` with the canonical map
/// `(1_A, [1_B, 0]) : Mimo(f) -> f`.
pub fn mimo(obj: &MorphObject) -> Result<(MorphObject, MorphMap)> {
    let (k, incl) = kernel(obj.f());
    let env = injective_envelope(&k);
    let e = extend_along_mono(&incl, &env.map)?;
    let i = env.map.target().clone();
    let fe = obj.f().vstack(&e)?;
    let mimo = MorphObject { f: fe };
    let (p_b, _) = sum_projections(obj.b(), &i)?;
    let canonical = MorphMap::new(&mimo, obj, ModuleMap::identity(obj.a()), p_b)?;
    Ok((mimo, canonical))
}

/// Some `e : A -> I` with `e ∘ incl = g`, for `incl : K ↪ A` and `I`
/// injective (so a solution exists). Any solution is returned.
fn extend_along_mono(incl: &ModuleMap, g: &ModuleMap) -> Result<ModuleMap> {
    let hs = hom_space(incl.target(), g.target())?;
    let restricted = hs
        .basis()
        .iter()
        .map(|e| e.compose(incl))
        .collect::<Result<Vec<_>>>()?;
    let m = HomSpace::columns_of(incl.source(), g.target(), &restricted);
    let b = Matrix::column_vector(g.source().field(), &g.flatten());
    let x = m
        .solve(&b)?
        .ok_or_else(|| Error::Internal("no extension into an injective module".into()))?;
    Ok(hs.combine(&x.column(0)))
}

/// `IMin(N) = (I₀ -> I₁)` from the minimal injective copresentation.
pub fn imin(n: &Representation) -> MorphObject {
    let e0 = injective_envelope(n);
    let (c, pi) = cokernel(&e0.map);
    let e1 = injective_envelope(&c);
    MorphObject {
        f: e1.map.compose(&pi).expect("composable"),
    }
}

/// `PMin(N) = (P₁ -> P₀)` from the minimal projective presentation.
pub fn pmin(n: &Representation) -> MorphObject {
    let pres = crate::homalg::minimal_presentation(n);
    MorphObject { f: pres.d }
}

/// An object lies in `Gprj(H(Λ))` iff `f` is mono and `A`, `B`, `coker f`
/// are Gorenstein projective.
pub fn is_gp_in_h<F>(obj: &MorphObject, mut gp_test: F) -> Result<bool>
where
    F: FnMut(&Representation) -> Result<bool>,
{
    if !obj.is_mono() {
        return Ok(false);
    }
    let (c, _) = cokernel(obj.f());
    Ok(gp_test(obj.a())? && gp_test(obj.b())? && gp_test(&c)?)
}

pub fn is_self_injective(alg: &Arc<Algebra>) -> bool {
    (0..alg.vertices()).all(|i| is_injective(&indecomposable_projective(alg, i)))
}

/// `τ_{S(Λ)}` for self-injective `Λ`: `Mimo(τ_Λ(B -> coker f))`, where
/// `τ_Λ` is applied to the map `B -> coker f` (functorial up to maps
/// through projectives, which `Mimo` absorbs). Projective objects of
/// `S(Λ)` and projective summands of the result are dropped.
pub fn tau_s_lambda(t2: &T2Algebra, obj: &MorphObject) -> Result<MorphObject> {
    if !is_self_injective(&t2.base) {
        return Err(Error::NotSelfInjective);
    }
    if !obj.is_mono() {
        return Err(Error::NotMono);
    }
    let mut out = MorphObject::zero(obj.algebra());
    for part in nonprojective_parts(t2, obj)? {
        let (_, pi) = cokernel(part.f());
        let tau = MorphObject {
            f: ar_translate_map(&pi)?,
        };
        for piece in nonprojective_parts(t2, &mimo(&tau)?.0)? {
            out = out.direct_sum(&piece)?;
        }
    }
    Ok(out)
}

/// Indecomposable summands of `obj` that are not projective over `T₂(Λ)`.
fn nonprojective_parts(t2: &T2Algebra, obj: &MorphObject) -> Result<Vec<MorphObject>> {
    decompose(&to_t2_module(t2, obj)?, DEFAULT_BUDGET, 0)
        .modules()
        .into_iter()
        .filter(|s| !is_projective(s))
        .map(|s| from_t2_module(t2, &s))
        .collect()
}

/// `(Ω G ↪ P(G))`, the inclusion of the syzygy into the projective cover.
pub fn syzygy_object(g: &Representation) -> MorphObject {
    let (_, incl) = kernel(&projective_cover(g).map);
    MorphObject { f: incl }
}

/// Factorization of `phi : g -> obj` through the canonical `Mimo(obj) -> obj`.
pub fn factor_through_mimo(
    g: &MorphObject,
    obj: &MorphObject,
    phi: &MorphMap,
) -> Result<Option<MorphMap>> {
    let (mi, canon) = mimo(obj)?;
    let homs = hom_h_basis(g, &mi)?;
    let images: Vec<ModuleMap> = homs
        .iter()
        .map(|h| -> Result<ModuleMap> {
            let s1 = canon.sigma1.compose(&h.sigma1)?;
            let s2 = canon.sigma2.compose(&h.sigma2)?;
            stack_pair(&s1, &s2)
        })
        .collect::<Result<_>>()?;
    let target = stack_pair(&phi.sigma1, &phi.sigma2)?;
    let cols = columns_of_pairs(&images, &target);
    let b = Matrix::column_vector(g.a().field(), &target.flatten());
    Ok(cols.solve(&b)?.map(|x| {
        let c = x.column(0);
        let mut s1 = ModuleMap::zero(g.a(), mi.a());
        let mut s2 = ModuleMap::zero(g.b(), mi.b());
        for (h, &k) in homs.iter().zip(&c) {
            if k != 0 {
                s1 = s1.add(&h.sigma1.scale(k)).expect("same shapes");
                s2 = s2.add(&h.sigma2.scale(k)).expect("same shapes");
            }
        }
        MorphMap {
            sigma1: s1,
            sigma2: s2,
        }
    }))
}

/// Packs `(σ₁, σ₂)` into one map `A ⊕ B -> A' ⊕ B'` for linear algebra.
fn stack_pair(s1: &ModuleMap, s2: &ModuleMap) -> Result<ModuleMap> {
    s1.direct_sum(s2)
}

fn columns_of_pairs(maps: &[ModuleMap], like: &ModuleMap) -> Matrix {
    HomSpace::columns_of(like.source(), like.target(), maps)
}

/// Whether `f` splits off from `A` a summand mapped to zero: returns the
/// restriction of `f` to its right-minimal part.
pub fn drop_zero_summands(obj: &MorphObject, seed: u64) -> Result<MorphObject> {
    let r = crate::homalg::right_minimalize(obj.f(), seed)?;
    Ok(MorphObject { f: r.h1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::syzygy_with_inclusion;
    use crate::quivalg::{t2_of, truncated_polynomial};
    use crate::repmod::{is_isomorphic, random_module, simple};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup() -> (Arc<Algebra>, T2Algebra, Representation, Representation) {
        let d = truncated_polynomial(5, 2).unwrap();
        let t2 = t2_of(&d).unwrap();
        let s = simple(&d, 0);
        let lam = indecomposable_projective(&d, 0);
        (d, t2, s, lam)
    }

    #[test]
    fn t2_conversion_examples() {
        let (_, t2, s, _) = setup();
        let z = to_t2_module(&t2, &MorphObject::zero_into(&s)).unwrap();
        assert_eq!(z.dims(), &[0, 1]);
        let id = to_t2_module(&t2, &MorphObject::identity_on(&s)).unwrap();
        assert_eq!(id.dims(), &[1, 1]);
        assert_eq!(id.map(t2.eps_arrow(0)).get(0, 0), 1);
    }

    #[test]
    fn t2_round_trip_and_hom_dims() {
        let (d, t2, _, _) = setup();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut objs = Vec::new();
        for _ in 0..50 {
            let a = random_module(&d, &mut rng);
            let b = random_module(&d, &mut rng);
            let f = hom_space(&a, &b).unwrap().random_element(&mut rng);
            let obj = MorphObject::new(f);
            let rep = to_t2_module(&t2, &obj).unwrap();
            assert_eq!(from_t2_module(&t2, &rep).unwrap(), obj);
            objs.push(obj);
        }
        for x in objs.iter().take(8) {
            for y in objs.iter().take(8) {
                let lhs = hom_h_basis(x, y).unwrap().len();
                let rx = to_t2_module(&t2, x).unwrap();
                let ry = to_t2_module(&t2, y).unwrap();
                assert_eq!(lhs, hom_space(&rx, &ry).unwrap().dim());
            }
        }
    }

    #[test]
    fn mimo_examples() {
        let (_, t2, s, lam) = setup();
        let mono = MorphObject::new(syzygy_with_inclusion(&s).1);
        let (m, _) = mimo(&mono).unwrap();
        assert_eq!(m, mono);
        let (m, canon) = mimo(&MorphObject::zero_from(&s)).unwrap();
        assert!(m.is_mono());
        assert_eq!(m.b().dims(), &[2]);
        let (c, _) = cokernel(m.f());
        assert!(is_isomorphic(&c, &s).unwrap());
        assert_eq!(canon.sigma1, ModuleMap::identity(&s));
        let (m, _) = mimo(&MorphObject::zero_from(&lam)).unwrap();
        let want = to_t2_module(&t2, &MorphObject::identity_on(&lam)).unwrap();
        assert!(is_isomorphic(&to_t2_module(&t2, &m).unwrap(), &want).unwrap());
    }

    #[test]
    fn imin_pmin_examples() {
        let (d, _, s, _) = setup();
        assert!(imin(&Representation::zero(&d)).is_zero());
        let i = imin(&s);
        assert_eq!((i.a().dims(), i.b().dims()), (&[2][..], &[2][..]));
        assert_eq!(i.f().at(0).rank(), 1);
        let p = pmin(&s);
        assert_eq!((p.a().dims(), p.b().dims()), (&[2][..], &[2][..]));
        assert_eq!(p.f().at(0).rank(), 1);
    }

    #[test]
    fn gp_in_h_examples() {
        let (_, _, s, _) = setup();
        let all = |_: &Representation| Ok(true);
        assert!(is_gp_in_h(&MorphObject::identity_on(&s), all).unwrap());
        assert!(!is_gp_in_h(&MorphObject::zero_from(&s), all).unwrap());
        assert!(is_gp_in_h(&syzygy_object(&s), all).unwrap());
    }

    #[test]
    fn tau_s_lambda_examples() {
        let (_, t2, s, lam) = setup();
        assert!(tau_s_lambda(&t2, &MorphObject::identity_on(&lam))
            .unwrap()
            .is_zero());
        assert!(tau_s_lambda(&t2, &MorphObject::zero_into(&lam))
            .unwrap()
            .is_zero());
        for obj in [MorphObject::identity_on(&s), MorphObject::zero_into(&s)] {
            let t = tau_s_lambda(&t2, &obj).unwrap();
            assert!(t.is_mono());
            assert!(!t.is_zero());
            let rep = to_t2_module(&t2, &t).unwrap();
            assert!(crate::repmod::is_indecomposable(&rep, 16, 0));
        }
        assert_eq!(
            tau_s_lambda(&t2, &MorphObject::zero_from(&s)).unwrap_err(),
            Error::NotMono
        );
        let a2 = crate::quivalg::linear_quiver(5, 2).unwrap();
        let t2a = t2_of(&a2).unwrap();
        let e = tau_s_lambda(&t2a, &MorphObject::zero_into(&simple(&a2, 0)));
        assert_eq!(e.unwrap_err(), Error::NotSelfInjective);
    }
}
