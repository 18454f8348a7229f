use std::collections::HashSet;
use std::sync::Arc;

use super::algebra::Algebra;
use super::quiver::{Arrow, Quiver};
use crate::error::{Error, Result};

/// `T₂(Λ)` presented as a bound quiver algebra, together with the layout
/// that identifies its modules with morphisms `A -> B` of Λ-modules.
///
/// Vertices `0..n` carry `A`, vertices `n..2n` carry `B`. Arrows `0..m` copy
/// Λ's arrows on the `A` side, `m..2m` copy them on the `B` side, and
/// `2m + i` is the connecting arrow `eps_i : i -> i'`.
#[derive(Clone, Debug)]
pub struct T2Algebra {
    pub base: Arc<Algebra>,
    pub t2: Arc<Algebra>,
    /// `(i, i')` for every base vertex.
    pub correspondence: Vec<(usize, usize)>,
}

impl T2Algebra {
    pub fn base_vertices(&self) -> usize {
        self.base.vertices()
    }

    pub fn a_vertex(&self, i: usize) -> usize {
        i
    }

    pub fn b_vertex(&self, i: usize) -> usize {
        self.base.vertices() + i
    }

    pub fn a_arrow(&self, a: usize) -> usize {
        a
    }

    pub fn b_arrow(&self, a: usize) -> usize {
        self.base.arrow_count() + a
    }

    pub fn eps_arrow(&self, i: usize) -> usize {
        2 * self.base.arrow_count() + i
    }
}

pub fn t2_of(alg: &Arc<Algebra>) -> Result<T2Algebra> {
    let n = alg.vertices();
    let m = alg.arrow_count();
    let q = alg.quiver();
    let mut arrows: Vec<Arrow> = q.arrows().to_vec();
    let mut taken: HashSet<String> = arrows.iter().map(|a| a.id.clone()).collect();
    let mut fresh = |base: String| {
        let mut id = base;
        while taken.contains(&id) {
            id.push('\'');
        }
        taken.insert(id.clone());
        id
    };
    for a in q.arrows() {
        let id = fresh(format!("{}'", a.id));
        arrows.push(Arrow {
            id,
            source: a.source + n,
            target: a.target + n,
        });
    }
    for i in 0..n {
        arrows.push(Arrow {
            id: fresh(format!("eps{i}")),
            source: i,
            target: i + n,
        });
    }
    let quiver = Quiver::new(2 * n, arrows)?;

    let mut rels: Vec<Vec<(i64, Vec<usize>)>> = Vec::new();
    for shift in [0, m] {
        for g in alg.relations() {
            rels.push(
                g.iter()
                    .map(|t| (t.coeff as i64, t.path.iter().map(|&a| a + shift).collect()))
                    .collect(),
            );
        }
    }
    for (a, arrow) in q.arrows().iter().enumerate() {
        // a then eps_t(a)  ==  eps_s(a) then a'
        rels.push(vec![
            (1, vec![a, 2 * m + arrow.target]),
            (-1, vec![2 * m + arrow.source, m + a]),
        ]);
    }
    let t2 = Algebra::build(alg.field(), quiver, rels, alg.degree_cap())?;
    if t2.dim() != 3 * alg.dim() {
        return Err(Error::Internal(format!(
            "T2 presentation has dimension {} but 3 x {} was expected",
            t2.dim(),
            alg.dim()
        )));
    }
    Ok(T2Algebra {
        base: alg.clone(),
        t2,
        correspondence: (0..n).map(|i| (i, i + n)).collect(),
    })
}
