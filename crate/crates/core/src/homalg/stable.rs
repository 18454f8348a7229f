use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::presentation::syzygy_with_inclusion;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::repmod::{
    end_space, hom_space, injective_envelope, injective_sum, is_projective, projective_cover,
    submodule, top_dims, ModuleMap, Representation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableHomSpace {
    pub total_dim: usize,
    /// Dimension of the maps factoring through a projective (or injective).
    pub factoring_dim: usize,
    pub stable_dim: usize,
}

fn image_rank(maps: &[ModuleMap], source: &Representation, target: &Representation) -> usize {
    crate::repmod::HomSpace::columns_of(source, target, maps).rank()
}

/// `Hom̲(M, N)`: a map factors through a projective iff it factors through
/// the projective cover of `N`.
pub fn stable_hom_proj(m: &Representation, n: &Representation) -> Result<StableHomSpace> {
    let total = hom_space(m, n)?.dim();
    let cover = projective_cover(n);
    let through = hom_space(m, cover.map.source())?
        .basis()
        .iter()
        .map(|g| cover.map.compose(g))
        .collect::<Result<Vec<_>>>()?;
    let factoring = image_rank(&through, m, n);
    Ok(StableHomSpace {
        total_dim: total,
        factoring_dim: factoring,
        stable_dim: total - factoring,
    })
}

/// `Hom̄(M, N)`: maps factoring through the injective envelope of `M`.
pub fn stable_hom_inj(m: &Representation, n: &Representation) -> Result<StableHomSpace> {
    let total = hom_space(m, n)?.dim();
    let env = injective_envelope(m);
    let through = hom_space(env.map.target(), n)?
        .basis()
        .iter()
        .map(|g| g.compose(&env.map))
        .collect::<Result<Vec<_>>>()?;
    let factoring = image_rank(&through, m, n);
    Ok(StableHomSpace {
        total_dim: total,
        factoring_dim: factoring,
        stable_dim: total - factoring,
    })
}

/// `Ext^i(M, N)` as `Hom(Ω^i M, N)` modulo maps extending to the projective
/// cover of `Ω^{i-1} M`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub degree: usize,
    pub dim: usize,
    /// `Ω^i M` and its inclusion into the cover `P_{i-1}` of `Ω^{i-1} M`.
    pub syzygy: Representation,
    pub syzygy_inclusion: ModuleMap,
    /// Cocycles `Ω^i M -> N` whose classes form a basis.
    pub cocycles: Vec<ModuleMap>,
}

pub fn ext(m: &Representation, n: &Representation, i: usize) -> Result<ExtGroup> {
    if i == 0 {
        return Err(Error::DimensionMismatch(
            "Ext degree must be at least 1".into(),
        ));
    }
    if !m.algebra().same_as(n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut x = m.clone();
    let mut step = syzygy_with_inclusion(&x);
    for _ in 1..i {
        x = step.0.clone();
        step = syzygy_with_inclusion(&x);
    }
    let (omega, incl) = step;
    let homs = hom_space(&omega, n)?;
    let coboundaries = hom_space(incl.target(), n)?
        .basis()
        .iter()
        .map(|g| g.compose(&incl))
        .collect::<Result<Vec<_>>>()?;
    let nb = coboundaries.len();
    let mut all = coboundaries;
    all.extend(homs.basis().iter().cloned());
    let cols = crate::repmod::HomSpace::columns_of(&omega, n, &all);
    let (_, pivots) = cols.rref();
    let cocycles: Vec<ModuleMap> = pivots
        .iter()
        .filter(|&&c| c >= nb)
        .map(|&c| all[c].clone())
        .collect();
    Ok(ExtGroup {
        degree: i,
        dim: cocycles.len(),
        syzygy: omega,
        syzygy_inclusion: incl,
        cocycles,
    })
}

/// Splitting of `h : X -> Y` as `X = X1 ⊕ X2` with `h|X2 = 0` and `h|X1`
/// right minimal.
#[derive(Clone, Debug)]
pub struct RightMinimal {
    pub m1: Representation,
    pub incl1: ModuleMap,
    pub proj1: ModuleMap,
    pub h1: ModuleMap,
    pub m2: Representation,
    pub incl2: ModuleMap,
    pub proj2: ModuleMap,
}

const MINIMALIZE_TRIES: usize = 64;

/// Repeatedly finds a non-nilpotent `r` with `h r = 0` and splits off the
/// Fitting image `im r^N ⊆ ker h`. Stops once all such `r` are nilpotent,
/// which is exactly right minimality of what remains.
pub fn right_minimalize(h: &ModuleMap, seed: u64) -> Result<RightMinimal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let src = h.source().clone();
    let mut cur = src.clone();
    let mut incl = ModuleMap::identity(&src);
    let mut proj = ModuleMap::identity(&src);
    // split-off pieces as (inclusion into src, projection from src)
    let mut pieces: Vec<(ModuleMap, ModuleMap)> = Vec::new();
    loop {
        let hc = h.compose(&incl)?;
        let annihilator = annihilating_endos(&hc)?;
        if is_nil(&cur, &annihilator) {
            break;
        }
        let mut found = None;
        let candidates = annihilator
            .iter()
            .cloned()
            .chain((0..MINIMALIZE_TRIES).map(|_| random_combination(&cur, &annihilator, &mut rng)));
        for r in candidates {
            if !r.is_nilpotent_endo() {
                found = Some(r);
                break;
            }
        }
        let Some(r) = found else {
            return Err(Error::BudgetExhausted(MINIMALIZE_TRIES));
        };
        let n = cur.dims().iter().copied().max().unwrap_or(0) as u64;
        let rn: Vec<Matrix> = r.maps().iter().map(|m| m.pow(n)).collect::<Result<_>>()?;
        let ker_spans: Vec<Matrix> = rn.iter().map(Matrix::kernel_basis).collect();
        let im_spans: Vec<Matrix> = rn.iter().map(Matrix::column_space).collect();
        let (k, ik) = submodule(&cur, ker_spans.clone())?;
        let (im, ii) = submodule(&cur, im_spans.clone())?;
        let mut pk = Vec::new();
        let mut pi = Vec::new();
        for v in 0..cur.dims().len() {
            let b = ker_spans[v].hstack(&im_spans[v])?;
            let inv = b
                .inverse()
                .ok_or_else(|| Error::Internal("Fitting sum not direct".into()))?;
            let kd = ker_spans[v].cols();
            pk.push(inv.block(0, 0, kd, cur.dims()[v]));
            pi.push(inv.block(kd, 0, cur.dims()[v] - kd, cur.dims()[v]));
        }
        let pk = ModuleMap::new(cur.clone(), k.clone(), pk)?;
        let pi = ModuleMap::new(cur.clone(), im.clone(), pi)?;
        pieces.push((incl.compose(&ii)?, pi.compose(&proj)?));
        incl = incl.compose(&ik)?;
        proj = pk.compose(&proj)?;
        cur = k;
    }
    let h1 = h.compose(&incl)?;
    // assemble X2 from the pieces
    let parts: Vec<Representation> = pieces.iter().map(|p| p.0.source().clone()).collect();
    let m2 = Representation::direct_sum_all(src.algebra(), &parts)?;
    let f = src.field();
    let mut i2 = (0..src.dims().len())
        .map(|v| Matrix::zeros(f, src.dims()[v], 0))
        .collect::<Vec<_>>();
    let mut p2 = (0..src.dims().len())
        .map(|v| Matrix::zeros(f, 0, src.dims()[v]))
        .collect::<Vec<_>>();
    for (pin, pout) in &pieces {
        for v in 0..src.dims().len() {
            i2[v] = i2[v].hstack(pin.at(v))?;
            p2[v] = p2[v].vstack(pout.at(v))?;
        }
    }
    let incl2 = ModuleMap::new(m2.clone(), src.clone(), i2)?;
    let proj2 = ModuleMap::new(src.clone(), m2.clone(), p2)?;
    if !h.compose(&incl2)?.is_zero() {
        return Err(Error::Internal(
            "split-off summand is not killed by h".into(),
        ));
    }
    Ok(RightMinimal {
        m1: cur,
        incl1: incl,
        proj1: proj,
        h1,
        m2,
        incl2,
        proj2,
    })
}

/// Whether every `g` with `h g = h` is an automorphism.
pub fn is_right_minimal(h: &ModuleMap) -> Result<bool> {
    let ann = annihilating_endos(h)?;
    Ok(is_nil(h.source(), &ann))
}

/// Basis of `{r ∈ End(X) : h r = 0}`, a right ideal of `End(X)`.
fn annihilating_endos(h: &ModuleMap) -> Result<Vec<ModuleMap>> {
    let x = h.source();
    let end = end_space(x);
    let images = end
        .basis()
        .iter()
        .map(|g| h.compose(g))
        .collect::<Result<Vec<_>>>()?;
    let m = crate::repmod::HomSpace::columns_of(x, h.target(), &images);
    let ker = m.kernel_basis();
    Ok((0..ker.cols())
        .map(|c| end.combine(&ker.column(c)))
        .collect())
}

/// A subspace of `End(X)` closed under composition is nil iff its powers
/// reach zero within `dim X` steps.
fn is_nil(x: &Representation, basis: &[ModuleMap]) -> bool {
    let mut power: Vec<ModuleMap> = basis.to_vec();
    for _ in 0..=x.dim() {
        if power.is_empty() {
            return true;
        }
        let mut next = Vec::new();
        for a in &power {
            for b in basis {
                next.push(a.compose(b).expect("endomorphisms"));
            }
        }
        let cols = crate::repmod::HomSpace::columns_of(x, x, &next);
        let (_, pivots) = cols.rref();
        power = pivots.into_iter().map(|c| next[c].clone()).collect();
    }
    power.is_empty()
}

fn random_combination<R: rand::Rng>(
    x: &Representation,
    basis: &[ModuleMap],
    rng: &mut R,
) -> ModuleMap {
    let p = x.field().p();
    basis.iter().fold(ModuleMap::zero(x, x), |acc, b| {
        acc.add(&b.scale(rng.gen_range(0..p))).expect("same shapes")
    })
}

/// Nakayama functor on projectives: `ν P(i) = I(i)`.
pub fn nakayama(p: &Representation) -> Result<Representation> {
    if !is_projective(p) {
        return Err(Error::NotProjective);
    }
    let tops = top_dims(p);
    let summands: Vec<usize> = tops
        .iter()
        .enumerate()
        .flat_map(|(v, &k)| std::iter::repeat_n(v, k))
        .collect();
    Ok(injective_sum(p.algebra(), &summands))
}
