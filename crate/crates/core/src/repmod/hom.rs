use rand::Rng;

use super::rep::{ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;

/// A basis of `Hom(M, N)` together with coordinate helpers.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Representation,
    target: Representation,
    basis: Vec<ModuleMap>,
}

impl HomSpace {
    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn basis(&self) -> &[ModuleMap] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix whose columns are the flattened `maps : source -> target`.
    pub fn columns_of(
        source: &Representation,
        target: &Representation,
        maps: &[ModuleMap],
    ) -> Matrix {
        flattened_columns(source, target, maps)
    }

    /// Columns are the flattened basis maps.
    pub fn basis_matrix(&self) -> Matrix {
        flattened_columns(&self.source, &self.target, &self.basis)
    }

    pub fn combine(&self, coeffs: &[u32]) -> ModuleMap {
        let mut acc = ModuleMap::zero(&self.source, &self.target);
        for (b, &c) in self.basis.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&b.scale(c)).expect("same shapes");
            }
        }
        acc
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> ModuleMap {
        let p = self.source.field().p();
        let coeffs: Vec<u32> = (0..self.dim()).map(|_| rng.gen_range(0..p)).collect();
        self.combine(&coeffs)
    }

    /// Coordinates of `g` in the basis, if `g` is a module map `M -> N`.
    pub fn coordinates(&self, g: &ModuleMap) -> Option<Vec<u32>> {
        let b = self.basis_matrix();
        let v = Matrix::column_vector(self.source.field(), &g.flatten());
        b.solve(&v).ok().flatten().map(|x| x.column(0))
    }
}

pub(crate) fn flattened_columns(
    source: &Representation,
    target: &Representation,
    maps: &[ModuleMap],
) -> Matrix {
    let len: usize = (0..source.dims().len())
        .map(|v| source.dims()[v] * target.dims()[v])
        .sum();
    let mut m = Matrix::zeros(source.field(), len, maps.len());
    for (j, g) in maps.iter().enumerate() {
        for (i, x) in g.flatten().into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

/// Basis of `Hom_Λ(M, N)`: solutions of `N_a F_i = F_j M_a` for all arrows.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    Ok(hom_space(m, n)?.basis)
}

pub fn hom_space(m: &Representation, n: &Representation) -> Result<HomSpace> {
    if !m.algebra().same_as(n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.field();
    let nv = m.dims().len();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims()[v] * m.dims()[v];
    }
    let unknowns = offset[nv];
    let q = m.algebra().quiver();
    let eqs: usize = q
        .arrows()
        .iter()
        .map(|a| n.dims()[a.target] * m.dims()[a.source])
        .sum();
    let mut sys = Matrix::zeros(f, eqs, unknowns);
    let mut row = 0;
    for (ai, a) in q.arrows().iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (mi, ni, mj) = (m.dims()[i], n.dims()[i], m.dims()[j]);
        let (na, ma) = (n.map(ai), m.map(ai));
        for r in 0..n.dims()[j] {
            for c in 0..mi {
                // (N_a F_i)[r][c] - (F_j M_a)[r][c]
                for k in 0..ni {
                    let x = na.get(r, k);
                    if x != 0 {
                        let col = offset[i] + k * mi + c;
                        sys.set(row, col, f.add(sys.get(row, col), x));
                    }
                }
                for k in 0..mj {
                    let x = ma.get(k, c);
                    if x != 0 {
                        let col = offset[j] + r * mj + k;
                        sys.set(row, col, f.sub(sys.get(row, col), x));
                    }
                }
                row += 1;
            }
        }
    }
    let ker = sys.kernel_basis();
    let basis = (0..ker.cols())
        .map(|c| {
            let col = ker.column(c);
            let maps = (0..nv)
                .map(|v| {
                    let (r, cc) = (n.dims()[v], m.dims()[v]);
                    Matrix::from_fn(f, r, cc, |x, y| col[offset[v] + x * cc + y])
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), maps)
        })
        .collect();
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        basis,
    })
}

pub fn end_space(m: &Representation) -> HomSpace {
    hom_space(m, m).expect("same algebra")
}

/// Kernel of `f` with its inclusion into the source.
pub fn kernel(f: &ModuleMap) -> (Representation, ModuleMap) {
    let m = f.source();
    let spans: Vec<Matrix> = f.maps().iter().map(Matrix::kernel_basis).collect();
    submodule(m, spans).expect("kernels are submodules")
}

/// Cokernel of `f` with the projection from the target.
pub fn cokernel(f: &ModuleMap) -> (Representation, ModuleMap) {
    let n = f.target();
    let projs: Vec<Matrix> = f.maps().iter().map(Matrix::cokernel_projection).collect();
    quotient(n, projs).expect("images are submodules")
}

/// Image of `f`: returns `(I, M ↠ I, I ↪ N)`.
pub fn image(f: &ModuleMap) -> (Representation, ModuleMap, ModuleMap) {
    let spans: Vec<Matrix> = f.maps().iter().map(Matrix::column_space).collect();
    let (im, incl) = submodule(f.target(), spans).expect("images are submodules");
    let coim = factor_through_mono(&incl, f).expect("f lands in its image");
    (im, coim, incl)
}

/// The submodule with per-vertex column bases `spans` (independent columns).
pub fn submodule(m: &Representation, spans: Vec<Matrix>) -> Result<(Representation, ModuleMap)> {
    let q = m.algebra().quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let img = m.map(ai).mul(&spans[a.source])?;
            spans[a.target].solve(&img)?.ok_or_else(|| {
                Error::InvalidRepresentation("subspaces not closed under arrows".into())
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = spans.iter().map(Matrix::cols).collect();
    let sub = Representation::new_unchecked(m.algebra().clone(), dims, maps);
    let incl = ModuleMap::new_unchecked(sub.clone(), m.clone(), spans);
    Ok((sub, incl))
}

/// The quotient by the common kernel of full-row-rank projections `projs`.
pub fn quotient(m: &Representation, projs: Vec<Matrix>) -> Result<(Representation, ModuleMap)> {
    let q = m.algebra().quiver();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            // C_a Q_i = Q_j M_a
            let rhs = projs[a.target].mul(m.map(ai))?;
            let x = projs[a.source]
                .transpose()
                .solve(&rhs.transpose())?
                .ok_or_else(|| {
                    Error::InvalidRepresentation("kernel not closed under arrows".into())
                })?;
            Ok(x.transpose())
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = projs.iter().map(Matrix::rows).collect();
    let quo = Representation::new_unchecked(m.algebra().clone(), dims, maps);
    let proj = ModuleMap::new_unchecked(m.clone(), quo.clone(), projs);
    Ok((quo, proj))
}

/// Some `h` with `h ∘ epi = g`, when it exists and is a module map.
pub fn factor_through_epi(epi: &ModuleMap, g: &ModuleMap) -> Option<ModuleMap> {
    let maps = epi
        .maps()
        .iter()
        .zip(g.maps())
        .map(|(e, gv)| Some(e.transpose().solve(&gv.transpose()).ok()??.transpose()))
        .collect::<Option<Vec<_>>>()?;
    ModuleMap::new(epi.target().clone(), g.target().clone(), maps).ok()
}

/// Some `h` with `mono ∘ h = g`, when it exists and is a module map.
pub fn factor_through_mono(mono: &ModuleMap, g: &ModuleMap) -> Option<ModuleMap> {
    let maps = mono
        .maps()
        .iter()
        .zip(g.maps())
        .map(|(m, gv)| m.solve(gv).ok()?)
        .collect::<Option<Vec<_>>>()?;
    ModuleMap::new(g.source().clone(), mono.source().clone(), maps).ok()
}

/// Some `h : X -> Y` with `g ∘ h = target_map` where `g : Y -> Z`, searched
/// over all of `Hom(X, Y)`. Unlike [`factor_through_mono`] this works for
/// arbitrary `g`.
pub fn factor_through(g: &ModuleMap, target_map: &ModuleMap) -> Result<Option<ModuleMap>> {
    let hs = hom_space(target_map.source(), g.source())?;
    let images: Vec<ModuleMap> = hs
        .basis()
        .iter()
        .map(|h| g.compose(h))
        .collect::<Result<Vec<_>>>()?;
    let a = flattened_columns(target_map.source(), g.target(), &images);
    let b = Matrix::column_vector(g.source().field(), &target_map.flatten());
    Ok(a.solve(&b)?.map(|x| hs.combine(&x.column(0))))
}
