use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, PrimeField};
use crate::quivalg::Algebra;

/// A finite-dimensional right module over a bound quiver algebra: a vector
/// space per vertex and a matrix per arrow (`dims[target] x dims[source]`).
#[derive(Clone, Debug)]
pub struct Representation {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Representation {}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let rep = Self::new_unchecked(alg, dims, maps);
        rep.validate()?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Representation { alg, dims, maps }
    }

    pub fn validate(&self) -> Result<()> {
        let q = self.alg.quiver();
        if self.dims.len() != q.vertices() {
            return Err(Error::InvalidRepresentation(format!(
                "dimension vector has {} entries for {} vertices",
                self.dims.len(),
                q.vertices()
            )));
        }
        if self.maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} arrow maps for {} arrows",
                self.maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&self.maps) {
            if m.rows() != self.dims[a.target] || m.cols() != self.dims[a.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} carries a {}x{} matrix, expected {}x{}",
                    a.id,
                    m.rows(),
                    m.cols(),
                    self.dims[a.target],
                    self.dims[a.source]
                )));
            }
            if m.field() != self.alg.field() {
                return Err(Error::InvalidRepresentation(
                    "matrix over the wrong field".into(),
                ));
            }
        }
        for gen in self.alg.relations() {
            let Some(first) = gen.first() else { continue };
            let (s, t) = q.path_endpoints(&first.path)?;
            let mut acc = Matrix::zeros(self.field(), self.dims[t], self.dims[s]);
            for term in gen {
                acc = acc.add(&self.path_matrix(s, &term.path).scale(term.coeff))?;
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation(
                    "a relation does not vanish".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let f = alg.field();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Representation {
            alg: alg.clone(),
            dims: vec![0; alg.vertices()],
            maps,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Action of a path (arrows read left to right) starting at `source`.
    pub fn path_matrix(&self, source: usize, arrows: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[source]);
        for &a in arrows {
            acc = self.maps[a].mul(&acc).expect("composable path");
        }
        acc
    }

    /// Action of a basis path of the algebra.
    pub fn basis_action(&self, idx: usize) -> Matrix {
        let p = &self.alg.basis()[idx];
        self.path_matrix(p.source, &p.arrows)
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.alg.same_as(&other.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            alg: self.alg.clone(),
            dims,
            maps,
        })
    }

    pub fn direct_sum_all(alg: &Arc<Algebra>, parts: &[Representation]) -> Result<Representation> {
        parts
            .iter()
            .try_fold(Representation::zero(alg), |acc, p| acc.direct_sum(p))
    }

    /// Moves the module onto a structurally identical algebra handle.
    pub fn reanchor(mut self, alg: &Arc<Algebra>) -> Result<Representation> {
        if !self.alg.same_as(alg) {
            return Err(Error::AlgebraMismatch);
        }
        self.alg = alg.clone();
        Ok(self)
    }

    /// Transports the module along per-vertex invertible matrices `b`:
    /// the new arrow maps are `b_t * M_a * b_s^{-1}`.
    pub fn change_basis(&self, b: &[Matrix]) -> Result<Representation> {
        let inv: Vec<Matrix> = b
            .iter()
            .map(|m| {
                m.inverse()
                    .ok_or_else(|| Error::DimensionMismatch("singular basis change".into()))
            })
            .collect::<Result<_>>()?;
        let q = self.alg.quiver();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| b[a.target].mul(&self.maps[i])?.mul(&inv[a.source]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation {
            alg: self.alg.clone(),
            dims: self.dims.clone(),
            maps,
        })
    }

    /// The k-dual `D M = Hom_k(M, k)`, a module over the opposite algebra.
    pub fn k_dual(&self) -> Representation {
        let op = self.alg.opposite();
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Representation {
            alg: op,
            dims: self.dims.clone(),
            maps,
        }
    }
}

/// A morphism of representations: one matrix per vertex, intertwining the
/// arrow actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<Self> {
        let m = Self::new_unchecked(source, target, maps);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: Representation,
        target: Representation,
        maps: Vec<Matrix>,
    ) -> Self {
        ModuleMap {
            source,
            target,
            maps,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.source.alg.same_as(&self.target.alg) {
            return Err(Error::AlgebraMismatch);
        }
        let n = self.source.alg.vertices();
        if self.maps.len() != n {
            return Err(Error::InvalidMap(format!(
                "{} vertex maps for {n} vertices",
                self.maps.len()
            )));
        }
        for (v, m) in self.maps.iter().enumerate() {
            if m.rows() != self.target.dims[v] || m.cols() != self.source.dims[v] {
                return Err(Error::InvalidMap(format!(
                    "vertex {v} map has the wrong shape"
                )));
            }
        }
        for (i, a) in self.source.alg.quiver().arrows().iter().enumerate() {
            let lhs = self.target.maps[i].mul(&self.maps[a.source])?;
            let rhs = self.maps[a.target].mul(&self.source.maps[i])?;
            if lhs != rhs {
                return Err(Error::InvalidMap(format!(
                    "does not commute with arrow {}",
                    a.id
                )));
            }
        }
        Ok(())
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        let maps = (0..source.dims.len())
            .map(|v| Matrix::zeros(f, target.dims[v], source.dims[v]))
            .collect();
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            maps,
        }
    }

    pub fn identity(m: &Representation) -> Self {
        let f = m.field();
        let maps = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if other.target.dims != self.source.dims || !other.target.alg.same_as(&self.source.alg) {
            return Err(Error::InvalidMap("composition of incompatible maps".into()));
        }
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap {
            source: other.source.clone(),
            target: self.target.clone(),
            maps,
        })
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps,
        })
    }

    pub fn sub(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let neg = self.source.field().neg(1);
        self.add(&other.scale(neg))
    }

    pub fn scale(&self, c: u32) -> ModuleMap {
        let maps = self.maps.iter().map(|m| m.scale(c)).collect();
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn is_nilpotent_endo(&self) -> bool {
        self.maps.iter().all(Matrix::is_nilpotent)
    }

    /// All vertex matrices concatenated row-major.
    pub fn flatten(&self) -> Vec<u32> {
        self.maps
            .iter()
            .flat_map(|m| m.data().iter().copied())
            .collect()
    }

    /// `D f : D(target) -> D(source)` over the opposite algebra.
    pub fn k_dual(&self) -> ModuleMap {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        ModuleMap {
            source: self.target.k_dual(),
            target: self.source.k_dual(),
            maps,
        }
    }

    /// Moves source and target onto a structurally identical algebra handle.
    pub fn reanchor(self, alg: &Arc<Algebra>) -> Result<ModuleMap> {
        Ok(ModuleMap {
            source: self.source.reanchor(alg)?,
            target: self.target.reanchor(alg)?,
            maps: self.maps,
        })
    }

    /// Replaces the recorded source/target with equal-data modules.
    pub(crate) fn with_ends(self, source: Representation, target: Representation) -> ModuleMap {
        debug_assert_eq!(source.dims, self.source.dims);
        debug_assert_eq!(target.dims, self.target.dims);
        ModuleMap {
            source,
            target,
            maps: self.maps,
        }
    }

    /// `f ⊕ g : X ⊕ X' -> Y ⊕ Y'`.
    pub fn direct_sum(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap {
            source: self.source.direct_sum(&other.source)?,
            target: self.target.direct_sum(&other.target)?,
            maps,
        })
    }

    /// `[f, g] : X ⊕ X' -> Y` for maps with a common target.
    pub fn hstack(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.hstack(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap {
            source: self.source.direct_sum(&other.source)?,
            target: self.target.clone(),
            maps,
        })
    }

    /// `(f, g)ᵗ : X -> Y ⊕ Y'` for maps with a common source.
    pub fn vstack(&self, other: &ModuleMap) -> Result<ModuleMap> {
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.vstack(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleMap {
            source: self.source.clone(),
            target: self.target.direct_sum(&other.target)?,
            maps,
        })
    }
}

/// Inclusion and projection maps for a binary direct sum `X ⊕ Y`.
pub fn sum_injections(x: &Representation, y: &Representation) -> Result<(ModuleMap, ModuleMap)> {
    let s = x.direct_sum(y)?;
    let f = x.field();
    let i1 = (0..x.dims.len())
        .map(|v| Matrix::identity(f, x.dims[v]).vstack(&Matrix::zeros(f, y.dims[v], x.dims[v])))
        .collect::<Result<Vec<_>>>()?;
    let i2 = (0..x.dims.len())
        .map(|v| Matrix::zeros(f, x.dims[v], y.dims[v]).vstack(&Matrix::identity(f, y.dims[v])))
        .collect::<Result<Vec<_>>>()?;
    Ok((
        ModuleMap::new_unchecked(x.clone(), s.clone(), i1),
        ModuleMap::new_unchecked(y.clone(), s, i2),
    ))
}

/// Projections `X ⊕ Y -> X` and `X ⊕ Y -> Y`.
pub fn sum_projections(x: &Representation, y: &Representation) -> Result<(ModuleMap, ModuleMap)> {
    let (i1, i2) = sum_injections(x, y)?;
    let p1 = ModuleMap::new_unchecked(
        i1.target().clone(),
        x.clone(),
        i1.maps().iter().map(Matrix::transpose).collect(),
    );
    let p2 = ModuleMap::new_unchecked(
        i2.target().clone(),
        y.clone(),
        i2.maps().iter().map(Matrix::transpose).collect(),
    );
    Ok((p1, p2))
}
