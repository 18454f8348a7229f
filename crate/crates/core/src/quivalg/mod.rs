//! Bound quiver algebras `kQ/I` with length-homogeneous relations.

mod algebra;
mod quiver;
mod t2;

pub use algebra::{
    Algebra, Element, Path, ReductionTable, Relation, RelationTerm, DEFAULT_DEGREE_CAP,
};
pub use quiver::{Arrow, Quiver};
pub use t2::{t2_of, T2Algebra};

use std::sync::Arc;

use crate::error::Result;
use crate::exactlin::PrimeField;

/// Convenience constructor from arrow tuples `(id, source, target)` and
/// relations written with arrow ids.
pub fn algebra_from_spec(
    p: u64,
    vertices: usize,
    arrows: &[(&str, usize, usize)],
    relations: &[Vec<(i64, Vec<&str>)>],
) -> Result<Arc<Algebra>> {
    let field = PrimeField::new(p)?;
    let quiver = Quiver::new(
        vertices,
        arrows
            .iter()
            .map(|&(id, s, t)| Arrow {
                id: id.to_string(),
                source: s,
                target: t,
            })
            .collect(),
    )?;
    let mut rels = Vec::new();
    for g in relations {
        let mut terms = Vec::new();
        for (c, path) in g {
            let idx = path
                .iter()
                .map(|id| {
                    quiver.arrow_index(id).ok_or_else(|| {
                        crate::error::Error::MalformedRelation(format!("unknown arrow {id}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            terms.push((*c, idx));
        }
        rels.push(terms);
    }
    Algebra::build(field, quiver, rels, DEFAULT_DEGREE_CAP)
}

/// `k[x]/(x^n)` over GF(p): one vertex, one loop `x`.
pub fn truncated_polynomial(p: u64, n: usize) -> Result<Arc<Algebra>> {
    algebra_from_spec(p, 1, &[("x", 0, 0)], &[vec![(1, vec!["x"; n])]])
}

/// Path algebra of the linear quiver `0 -> 1 -> ... -> n-1`.
pub fn linear_quiver(p: u64, n: usize) -> Result<Arc<Algebra>> {
    let ids: Vec<String> = (0..n.saturating_sub(1)).map(|i| format!("a{i}")).collect();
    let arrows: Vec<(&str, usize, usize)> = ids
        .iter()
        .enumerate()
        .map(|(i, id)| (id.as_str(), i, i + 1))
        .collect();
    algebra_from_spec(p, n, &arrows, &[])
}
