use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::quivalg::Algebra;
use crate::repmod::{
    cokernel, factor_through, factor_through_epi, injective_envelope, kernel,
    map_from_projective_sum, projective_cover, ModuleMap, Representation,
};

/// `P1 --d--> P0 --eps--> M -> 0`, minimal.
#[derive(Clone, Debug)]
pub struct MinimalPresentation {
    pub module: Representation,
    /// Vertices of the indecomposable summands of `P1` and `P0`.
    pub p1_summands: Vec<usize>,
    pub p0_summands: Vec<usize>,
    pub d: ModuleMap,
    pub eps: ModuleMap,
}

impl MinimalPresentation {
    pub fn p1(&self) -> &Representation {
        self.d.source()
    }

    pub fn p0(&self) -> &Representation {
        self.d.target()
    }
}

pub fn minimal_presentation(m: &Representation) -> MinimalPresentation {
    let c0 = projective_cover(m);
    let (k, incl) = kernel(&c0.map);
    let c1 = projective_cover(&k);
    let d = incl.compose(&c1.map).expect("composable");
    MinimalPresentation {
        module: m.clone(),
        p1_summands: c1.summands,
        p0_summands: c0.summands,
        d,
        eps: c0.map,
    }
}

/// `Ω M`, the kernel of the projective cover, with its inclusion.
pub fn syzygy_with_inclusion(m: &Representation) -> (Representation, ModuleMap) {
    kernel(&projective_cover(m).map)
}

pub fn syzygy(m: &Representation) -> Representation {
    syzygy_with_inclusion(m).0
}

pub fn syzygy_power(m: &Representation, n: usize) -> Representation {
    (0..n).fold(m.clone(), |acc, _| syzygy(&acc))
}

/// `Ω⁻¹ M`, the cokernel of the injective envelope.
pub fn cosyzygy(m: &Representation) -> Representation {
    cokernel(&injective_envelope(m).map).0
}

pub fn k_dual(m: &Representation) -> Representation {
    m.k_dual()
}

/// Position of each basis path inside its `paths_between(s, t)` list.
fn local_positions(alg: &Algebra, s: usize, t: usize) -> HashMap<usize, usize> {
    alg.paths_between(s, t)
        .iter()
        .enumerate()
        .map(|(k, &b)| (b, k))
        .collect()
}

/// For `g : ⊕ P(j_t) -> ⊕ P(i_s)`, reads off `g(e_{j_t}) = Σ_s λ_ts` with
/// `λ_ts ∈ e_{i_s} Λ e_{j_t}` as sparse elements over the algebra basis.
fn generator_images(
    alg: &Algebra,
    src: &[usize],
    tgt: &[usize],
    g: &ModuleMap,
) -> Vec<Vec<Vec<(usize, u32)>>> {
    let mut out = Vec::new();
    for (t, &j) in src.iter().enumerate() {
        // column of the generator of summand t at vertex j
        let before: usize = src[..t]
            .iter()
            .map(|&i| alg.paths_between(i, j).len())
            .sum();
        let gen_pos = local_positions(alg, j, j)[&j];
        let col = g.at(j).column(before + gen_pos);
        let mut row = 0;
        let mut per_s = Vec::new();
        for &i in tgt {
            let paths = alg.paths_between(i, j);
            let elem: Vec<(usize, u32)> = paths
                .iter()
                .enumerate()
                .filter(|&(k, _)| col[row + k] != 0)
                .map(|(k, &b)| (b, col[row + k]))
                .collect();
            row += paths.len();
            per_s.push(elem);
        }
        out.push(per_s);
    }
    out
}

/// `g* = Hom(g, Λ)` for `g : ⊕ P(src) -> ⊕ P(tgt)`, as a map
/// `⊕ P_op(tgt) -> ⊕ P_op(src)` over the opposite algebra.
pub fn dual_projective_map(src: &[usize], tgt: &[usize], g: &ModuleMap) -> Result<ModuleMap> {
    let alg = g.source().algebra();
    let op = alg.opposite();
    let f = alg.field();
    let lambdas = generator_images(alg, src, tgt, g);
    let target = crate::repmod::projective_sum(&op, src);
    let mut images = Vec::new();
    for (s, &i) in tgt.iter().enumerate() {
        // image of the generator of P_op(i_s): (λ_ts^op)_t at i_s
        let mut v = Vec::new();
        for (t, &j) in src.iter().enumerate() {
            let pos = local_positions(&op, j, i);
            let mut block = vec![0u32; op.paths_between(j, i).len()];
            for &(b, c) in &lambdas[t][s] {
                let rev: Vec<usize> = alg.basis()[b].arrows.iter().rev().copied().collect();
                for (idx, d) in op.reduce_path(j, &rev) {
                    block[pos[&idx]] = f.mul_add(c, d, block[pos[&idx]]);
                }
            }
            v.extend(block);
        }
        images.push(v);
    }
    map_from_projective_sum(&op, tgt, &target, &images)
}

/// `d* : P0* -> P1*` over the opposite algebra.
pub fn dual_presentation_map(pres: &MinimalPresentation) -> Result<ModuleMap> {
    dual_projective_map(&pres.p1_summands, &pres.p0_summands, &pres.d)
}

/// Lifts `g : M -> N` to `(g1, g0)` between minimal presentations.
fn lift_to_presentations(
    pm: &MinimalPresentation,
    pn: &MinimalPresentation,
    g: &ModuleMap,
) -> Result<(ModuleMap, ModuleMap)> {
    let missing = || Error::Internal("projective lifting failed".into());
    let g0 = factor_through(&pn.eps, &g.compose(&pm.eps)?)?.ok_or_else(missing)?;
    let g1 = factor_through(&pn.d, &g0.compose(&pm.d)?)?.ok_or_else(missing)?;
    Ok((g1, g0))
}

/// `Tr g : Tr N -> Tr M` for `g : M -> N`, well defined up to maps
/// factoring through projectives.
pub fn transpose_map(g: &ModuleMap) -> Result<ModuleMap> {
    let pm = minimal_presentation(g.source());
    let pn = minimal_presentation(g.target());
    let (g1, _) = lift_to_presentations(&pm, &pn, g)?;
    let g1s = dual_projective_map(&pm.p1_summands, &pn.p1_summands, &g1)?;
    let (_, pi_m) = cokernel(&dual_presentation_map(&pm)?);
    let (_, pi_n) = cokernel(&dual_presentation_map(&pn)?);
    factor_through_epi(&pi_n, &pi_m.compose(&g1s)?)
        .ok_or_else(|| Error::Internal("transpose of a map is not induced".into()))
}

/// `τ g : τ M -> τ N`, up to maps factoring through injectives.
pub fn ar_translate_map(g: &ModuleMap) -> Result<ModuleMap> {
    transpose_map(g)?.k_dual().reanchor(g.source().algebra())
}

/// Auslander transpose `Tr M = coker(P0* -> P1*)`, a module over `Λ^op`.
pub fn transpose(m: &Representation) -> Result<Representation> {
    let pres = minimal_presentation(m);
    let dstar = dual_presentation_map(&pres)?;
    Ok(cokernel(&dstar).0)
}

/// `τ M = D Tr M`.
pub fn ar_translate(m: &Representation) -> Result<Representation> {
    transpose(m)?.k_dual().reanchor(m.algebra())
}

/// `τ⁻¹ M = Tr D M`.
pub fn ar_translate_inverse(m: &Representation) -> Result<Representation> {
    transpose(&m.k_dual())?.reanchor(m.algebra())
}

/// Projective dimension, or `None` when no syzygy up to `cap` vanishes.
pub fn projective_dimension(m: &Representation, cap: usize) -> Option<usize> {
    let mut x = m.clone();
    for n in 0..=cap {
        let (k, _) = syzygy_with_inclusion(&x);
        if k.is_zero() {
            return Some(n);
        }
        x = k;
    }
    None
}

/// Injective dimension, or `None` beyond `cap`.
pub fn injective_dimension(m: &Representation, cap: usize) -> Option<usize> {
    projective_dimension(&m.k_dual(), cap)
}
