use std::collections::HashMap;
use std::sync::Arc;

use super::hom::submodule;
use super::rep::{ModuleMap, Representation};
use crate::error::Result;
use crate::exactlin::Matrix;
use crate::quivalg::Algebra;

/// `P(i) = e_i Λ`: at vertex `v` the basis is the paths `i -> v`, and an
/// arrow acts by right multiplication.
pub fn indecomposable_projective(alg: &Arc<Algebra>, i: usize) -> Representation {
    let f = alg.field();
    let n = alg.vertices();
    let local: Vec<HashMap<usize, usize>> = (0..n)
        .map(|v| {
            alg.paths_between(i, v)
                .iter()
                .enumerate()
                .map(|(k, &b)| (b, k))
                .collect()
        })
        .collect();
    let dims: Vec<usize> = (0..n).map(|v| alg.paths_between(i, v).len()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
            for (col, &b) in alg.paths_between(i, a.source).iter().enumerate() {
                for (idx, c) in alg.right_mul_arrow(&[(b, 1)], ai) {
                    m.set(local[a.target][&idx], col, c);
                }
            }
            m
        })
        .collect();
    Representation::new_unchecked(alg.clone(), dims, maps)
}

/// `I(i) = D(Λ e_i)`, the dual of the left projective at `i`.
pub fn indecomposable_injective(alg: &Arc<Algebra>, i: usize) -> Representation {
    indecomposable_projective(&alg.opposite(), i)
        .k_dual()
        .reanchor(alg)
        .expect("opposite of the opposite is the algebra")
}

pub fn projective_sum(alg: &Arc<Algebra>, summands: &[usize]) -> Representation {
    let parts: Vec<_> = summands
        .iter()
        .map(|&i| indecomposable_projective(alg, i))
        .collect();
    Representation::direct_sum_all(alg, &parts).expect("same algebra")
}

pub fn injective_sum(alg: &Arc<Algebra>, summands: &[usize]) -> Representation {
    let parts: Vec<_> = summands
        .iter()
        .map(|&i| indecomposable_injective(alg, i))
        .collect();
    Representation::direct_sum_all(alg, &parts).expect("same algebra")
}

/// The map `⊕ P(i_s) -> M` sending the generator `e_{i_s}` of the `s`-th
/// summand to `images[s] ∈ M_{i_s}`.
pub fn map_from_projective_sum(
    alg: &Arc<Algebra>,
    summands: &[usize],
    target: &Representation,
    images: &[Vec<u32>],
) -> Result<ModuleMap> {
    let f = alg.field();
    let source = projective_sum(alg, summands);
    let maps = (0..alg.vertices())
        .map(|v| {
            let mut m = Matrix::zeros(f, target.dims()[v], source.dims()[v]);
            let mut col = 0;
            for (s, &i) in summands.iter().enumerate() {
                let gen = Matrix::column_vector(f, &images[s]);
                for &b in alg.paths_between(i, v) {
                    let img = target.basis_action(b).mul(&gen)?;
                    m.paste(&img, 0, col);
                    col += 1;
                }
            }
            Ok(m)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleMap::new_unchecked(source, target.clone(), maps))
}

/// Sum of the images of all arrows into each vertex: `M · rad Λ`.
pub fn radical(m: &Representation) -> (Representation, ModuleMap) {
    let spans = incoming_spans(m);
    submodule(m, spans).expect("the radical is a submodule")
}

/// Vectors killed by every outgoing arrow.
pub fn socle(m: &Representation) -> (Representation, ModuleMap) {
    let f = m.field();
    let q = m.algebra().quiver();
    let spans = (0..m.dims().len())
        .map(|v| {
            let mut stack = Matrix::zeros(f, 0, m.dims()[v]);
            for a in q.arrows_from(v) {
                stack = stack.vstack(m.map(a)).expect("same columns");
            }
            stack.kernel_basis()
        })
        .collect();
    submodule(m, spans).expect("the socle is a submodule")
}

fn incoming_spans(m: &Representation) -> Vec<Matrix> {
    let f = m.field();
    let q = m.algebra().quiver();
    (0..m.dims().len())
        .map(|v| {
            let mut stack = Matrix::zeros(f, m.dims()[v], 0);
            for a in q.arrows_into(v) {
                stack = stack.hstack(m.map(a)).expect("same rows");
            }
            stack.column_space()
        })
        .collect()
}

/// Standard basis vectors spanning a complement of the radical, per vertex.
pub fn top_generators(m: &Representation) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    for (v, span) in incoming_spans(m).into_iter().enumerate() {
        for k in span.complement_indices() {
            let mut e = vec![0; m.dims()[v]];
            e[k] = 1;
            out.push((v, e));
        }
    }
    out
}

/// Multiplicity of each simple in the top.
pub fn top_dims(m: &Representation) -> Vec<usize> {
    incoming_spans(m)
        .iter()
        .zip(m.dims())
        .map(|(s, d)| d - s.cols())
        .collect()
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Vertex of every indecomposable summand, in order.
    pub summands: Vec<usize>,
    pub map: ModuleMap,
}

#[derive(Clone, Debug)]
pub struct InjectiveEnvelope {
    pub summands: Vec<usize>,
    pub map: ModuleMap,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let alg = m.algebra();
    let gens = top_generators(m);
    let summands: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let images: Vec<Vec<u32>> = gens.into_iter().map(|g| g.1).collect();
    let map = map_from_projective_sum(alg, &summands, m, &images).expect("shapes agree");
    ProjectiveCover { summands, map }
}

pub fn injective_envelope(m: &Representation) -> InjectiveEnvelope {
    let alg = m.algebra();
    let cover = projective_cover(&m.k_dual());
    let target = cover
        .map
        .source()
        .k_dual()
        .reanchor(alg)
        .expect("double opposite");
    let map = cover.map.k_dual().with_ends(m.clone(), target);
    InjectiveEnvelope {
        summands: cover.summands,
        map,
    }
}

pub fn is_projective(m: &Representation) -> bool {
    projective_cover(m).map.source().dim() == m.dim()
}

pub fn is_injective(m: &Representation) -> bool {
    injective_envelope(m).map.target().dim() == m.dim()
}
