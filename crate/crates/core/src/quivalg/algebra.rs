use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use super::quiver::Quiver;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, PrimeField};

pub const DEFAULT_DEGREE_CAP: usize = 32;

/// One term `coeff * path` of a relation generator. Paths are arrow indices
/// read left to right (`[a, b]` means "a, then b").
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationTerm {
    pub coeff: u32,
    pub path: Vec<usize>,
}

/// A relation generator: parallel terms of equal length.
pub type Relation = Vec<RelationTerm>;

/// A surviving normal-form path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Sparse element of the algebra over the global basis.
pub type Element = Vec<(usize, u32)>;

/// Per-degree reduction data: `extend[(b, a)]` is the normal form of the
/// basis path `b` followed by the arrow `a`. Every product in the algebra is
/// computed by chaining these right multiplications.
#[derive(Clone, Debug, Default)]
pub struct ReductionTable {
    extend: HashMap<(usize, usize), Element>,
    by_degree: Vec<Vec<usize>>,
}

impl ReductionTable {
    pub fn degree_sizes(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn basis_of_degree(&self, d: usize) -> &[usize] {
        self.by_degree.get(d).map_or(&[], Vec::as_slice)
    }
}

/// `k Q / I` for a finite quiver and a length-homogeneous ideal.
#[derive(Debug)]
pub struct Algebra {
    field: PrimeField,
    quiver: Quiver,
    relations: Vec<Relation>,
    degree_cap: usize,
    basis: Vec<Path>,
    pair_index: Vec<Vec<Vec<usize>>>,
    position: HashMap<(usize, Vec<usize>), usize>,
    table: ReductionTable,
    opposite: OnceLock<Arc<Algebra>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.quiver == other.quiver
            && self.relations == other.relations
    }
}

impl Eq for Algebra {}

fn add_into(acc: &mut BTreeMap<usize, u32>, f: PrimeField, idx: usize, c: u32) {
    if c == 0 {
        return;
    }
    let e = acc.entry(idx).or_insert(0);
    *e = f.add(*e, c);
    if *e == 0 {
        acc.remove(&idx);
    }
}

impl Algebra {
    /// Computes a path basis degree by degree. In degree `d` the candidates
    /// are `n * a` for normal paths `n` of degree `d - 1`; they are cut down by
    /// the left multiples `n * g` of the generators, which together with the
    /// right multiples already absorbed by the candidate construction span the
    /// ideal in degree `d`.
    pub fn build(
        field: PrimeField,
        quiver: Quiver,
        relations: Vec<Vec<(i64, Vec<usize>)>>,
        degree_cap: usize,
    ) -> Result<Arc<Algebra>> {
        if degree_cap < 2 {
            return Err(Error::MalformedRelation(
                "degree cap must be at least 2".into(),
            ));
        }
        let mut rels: Vec<Relation> = Vec::new();
        for gen in relations {
            let mut terms: Vec<RelationTerm> = Vec::new();
            let mut shape: Option<(usize, usize, usize)> = None;
            for (c, path) in gen {
                if path.len() < 2 {
                    return Err(Error::MalformedRelation(
                        "relation paths must have length at least 2".into(),
                    ));
                }
                let (s, t) = quiver.path_endpoints(&path)?;
                let this = (s, t, path.len());
                match shape {
                    None => shape = Some(this),
                    Some(sh) if sh != this => {
                        return Err(Error::MalformedRelation(
                            "relation terms are not parallel of equal length".into(),
                        ))
                    }
                    _ => {}
                }
                terms.push(RelationTerm {
                    coeff: field.elem(c),
                    path,
                });
            }
            rels.push(terms);
        }
        Self::from_relations(field, quiver, rels, degree_cap).map(Arc::new)
    }

    fn from_relations(
        field: PrimeField,
        quiver: Quiver,
        relations: Vec<Relation>,
        degree_cap: usize,
    ) -> Result<Algebra> {
        let n = quiver.vertices();
        let mut basis: Vec<Path> = (0..n)
            .map(|v| Path {
                source: v,
                target: v,
                arrows: Vec::new(),
            })
            .collect();
        let mut table = ReductionTable {
            extend: HashMap::new(),
            by_degree: vec![(0..n).collect()],
        };

        let path_ids = |p: &Path, a: usize| -> Vec<&str> {
            p.arrows
                .iter()
                .chain(std::iter::once(&a))
                .map(|&x| quiver.arrow(x).id.as_str())
                .collect()
        };

        let mut d = 1;
        loop {
            let prev = &table.by_degree[d - 1];
            let mut cands: Vec<(usize, usize)> = Vec::new();
            for &b in prev {
                for a in quiver.arrows_from(basis[b].target) {
                    cands.push((b, a));
                }
            }
            // Descending lexicographic order, so pivots land on the largest
            // paths and the smallest ones survive as normal forms.
            cands.sort_by(|x, y| {
                let px = path_ids(&basis[x.0], x.1);
                let py = path_ids(&basis[y.0], y.1);
                py.cmp(&px)
            });
            let col_of: HashMap<(usize, usize), usize> =
                cands.iter().enumerate().map(|(i, &c)| (c, i)).collect();

            let mut rows: Vec<Vec<u32>> = Vec::new();
            for gen in &relations {
                let Some(first) = gen.first() else { continue };
                let e = first.path.len();
                if e > d {
                    continue;
                }
                let gsrc = quiver.arrow(first.path[0]).source;
                for &nb in &table.by_degree[d - e] {
                    if basis[nb].target != gsrc {
                        continue;
                    }
                    let mut row = vec![0u32; cands.len()];
                    for term in gen {
                        let mut v: Element = vec![(nb, 1)];
                        for &a in &term.path[..e - 1] {
                            v = right_mul_raw(&table.extend, field, &v, a);
                        }
                        let last = *term.path.last().unwrap();
                        for (b, c) in v {
                            let col = col_of[&(b, last)];
                            row[col] = field.mul_add(term.coeff, c, row[col]);
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }

            let (rref, pivots) = if rows.is_empty() {
                (Matrix::zeros(field, 0, cands.len()), Vec::new())
            } else {
                let data: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&x| x as i64).collect())
                    .collect();
                Matrix::from_rows(field, &data)?.rref()
            };

            // New basis paths, numbered in ascending lexicographic order.
            let mut new_index: HashMap<usize, usize> = HashMap::new();
            let mut degree_d = Vec::new();
            for col in (0..cands.len()).rev() {
                if pivots.contains(&col) {
                    continue;
                }
                let (b, a) = cands[col];
                let mut arrows = basis[b].arrows.clone();
                arrows.push(a);
                let idx = basis.len();
                basis.push(Path {
                    source: basis[b].source,
                    target: quiver.arrow(a).target,
                    arrows,
                });
                new_index.insert(col, idx);
                degree_d.push(idx);
            }
            for (col, &(b, a)) in cands.iter().enumerate() {
                let value: Element = if let Some(&idx) = new_index.get(&col) {
                    vec![(idx, 1)]
                } else {
                    let r = pivots.iter().position(|&p| p == col).unwrap();
                    let mut acc = BTreeMap::new();
                    for (&c, &idx) in &new_index {
                        add_into(&mut acc, field, idx, field.neg(rref.get(r, c)));
                    }
                    acc.into_iter().collect()
                };
                table.extend.insert((b, a), value);
            }

            let done = degree_d.is_empty();
            table.by_degree.push(degree_d);
            if done {
                table.by_degree.pop();
                break;
            }
            if d >= degree_cap {
                return Err(Error::NotFiniteDimensional(degree_cap));
            }
            d += 1;
        }

        let mut pair_index = vec![vec![Vec::new(); n]; n];
        let mut position = HashMap::new();
        for (i, p) in basis.iter().enumerate() {
            pair_index[p.source][p.target].push(i);
            position.insert((p.source, p.arrows.clone()), i);
        }
        Ok(Algebra {
            field,
            quiver,
            relations,
            degree_cap,
            basis,
            pair_index,
            position,
            table,
            opposite: OnceLock::new(),
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertices(&self) -> usize {
        self.quiver.vertices()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrows().len()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn table(&self) -> &ReductionTable {
        &self.table
    }

    /// Basis paths from `s` to `t`, i.e. a basis of `e_s Λ e_t`.
    pub fn paths_between(&self, s: usize, t: usize) -> &[usize] {
        &self.pair_index[s][t]
    }

    /// Index of a basis path given by its source and arrow sequence.
    pub fn basis_index(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.position.get(&(source, arrows.to_vec())).copied()
    }

    /// Loewy length: one more than the longest surviving path.
    pub fn loewy_length(&self) -> usize {
        self.table.by_degree.len()
    }

    pub fn right_mul_arrow(&self, v: &[(usize, u32)], a: usize) -> Element {
        right_mul_raw(&self.table.extend, self.field, v, a)
    }

    /// Normal form of an arbitrary path starting at `source`; zero when the
    /// arrows do not compose.
    pub fn reduce_path(&self, source: usize, arrows: &[usize]) -> Element {
        if !arrows.is_empty() {
            match self.quiver.path_endpoints(arrows) {
                Ok((s, _)) if s == source => {}
                _ => return Vec::new(),
            }
        }
        let mut v: Element = vec![(source, 1)];
        for &a in arrows {
            v = self.right_mul_arrow(&v, a);
            if v.is_empty() {
                break;
            }
        }
        v
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, i: usize, j: usize) -> Element {
        let (pi, pj) = (&self.basis[i], &self.basis[j]);
        if pi.target != pj.source {
            return Vec::new();
        }
        let mut v: Element = vec![(i, 1)];
        for &a in &pj.arrows {
            v = self.right_mul_arrow(&v, a);
            if v.is_empty() {
                break;
            }
        }
        v
    }

    /// Λ^op: every arrow and relation path reversed. Cached.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let rels = self
                    .relations
                    .iter()
                    .map(|g| {
                        g.iter()
                            .map(|t| RelationTerm {
                                coeff: t.coeff,
                                path: t.path.iter().rev().copied().collect(),
                            })
                            .collect()
                    })
                    .collect();
                Arc::new(
                    Self::from_relations(self.field, self.quiver.opposite(), rels, self.degree_cap)
                        .expect("opposite of a finite-dimensional algebra is finite dimensional"),
                )
            })
            .clone()
    }

    /// Compares two algebras by their defining data.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    /// Lexicographic comparison of basis paths by arrow ids.
    pub fn cmp_paths(&self, i: usize, j: usize) -> Ordering {
        let ids = |p: &Path| -> Vec<&str> {
            p.arrows
                .iter()
                .map(|&a| self.quiver.arrow(a).id.as_str())
                .collect()
        };
        ids(&self.basis[i]).cmp(&ids(&self.basis[j]))
    }
}

fn right_mul_raw(
    extend: &HashMap<(usize, usize), Element>,
    f: PrimeField,
    v: &[(usize, u32)],
    a: usize,
) -> Element {
    let mut acc = BTreeMap::new();
    for &(b, c) in v {
        if let Some(img) = extend.get(&(b, a)) {
            for &(idx, k) in img {
                add_into(&mut acc, f, idx, f.mul(c, k));
            }
        }
    }
    acc.into_iter().collect()
}
