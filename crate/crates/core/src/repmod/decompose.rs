use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hom::{end_space, flattened_columns, submodule, HomSpace};
use super::rep::{ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Poly};

/// Default number of random endomorphisms tried before giving up.
pub const DEFAULT_BUDGET: usize = 32;

/// Why a summand was accepted as indecomposable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Dimension at most one.
    Trivial,
    /// `End` is local with residue field `k`: a basis of `End` minus scalars
    /// spans a nilpotent ideal of codimension one.
    LocalEndomorphismRing {
        end_dim: usize,
        nilpotent_dim: usize,
    },
    /// `trials` random endomorphisms all had primary minimal polynomial.
    RandomPrimary { trials: usize },
    /// No splitting endomorphism was found but the exact test did not
    /// confirm a local endomorphism ring either.
    Uncertified { trials: usize },
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
    pub evidence: Evidence,
}

#[derive(Clone, Debug)]
pub struct DecompositionCertificate {
    pub module: Representation,
    pub summands: Vec<Summand>,
    /// False when some summand carries [`Evidence::Uncertified`].
    pub certified: bool,
}

impl DecompositionCertificate {
    pub fn modules(&self) -> Vec<Representation> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }

    /// Checks `π_k ι_k = 1`, `π_k ι_l = 0` and `Σ ι_k π_k = 1`.
    pub fn verify(&self) -> Result<()> {
        let mut total = ModuleMap::zero(&self.module, &self.module);
        for (k, s) in self.summands.iter().enumerate() {
            for (l, t) in self.summands.iter().enumerate() {
                let c = s.projection.compose(&t.inclusion)?;
                let ok = if k == l {
                    c == ModuleMap::identity(&s.module)
                } else {
                    c.is_zero()
                };
                if !ok {
                    return Err(Error::Internal(
                        "decomposition maps are not orthogonal".into(),
                    ));
                }
            }
            total = total.add(&s.inclusion.compose(&s.projection)?)?;
        }
        if total != ModuleMap::identity(&self.module) {
            return Err(Error::Internal(
                "decomposition does not sum to the identity".into(),
            ));
        }
        Ok(())
    }
}

/// Splits `m` into indecomposables by Fitting's lemma. Every piece is first
/// tested exactly (local endomorphism ring); otherwise random endomorphisms
/// are sampled until one has a non-primary minimal polynomial.
pub fn decompose(m: &Representation, budget: usize, seed: u64) -> DecompositionCertificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summands = Vec::new();
    let mut stack = vec![(m.clone(), ModuleMap::identity(m), ModuleMap::identity(m))];
    while let Some((x, incl, proj)) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(&x, budget, &mut rng) {
            Split::Parts(pieces) => {
                let [(a, ia, pa), (b, ib, pb)] = *pieces;
                // keep the original order: push the second part first
                let ib2 = incl.compose(&ib).expect("composable");
                let pb2 = pb.compose(&proj).expect("composable");
                let ia2 = incl.compose(&ia).expect("composable");
                let pa2 = pa.compose(&proj).expect("composable");
                stack.push((b, ib2, pb2));
                stack.push((a, ia2, pa2));
            }
            Split::Indecomposable(evidence) => {
                summands.push(Summand {
                    module: x,
                    inclusion: incl,
                    projection: proj,
                    evidence,
                });
            }
        }
    }
    let certified = summands
        .iter()
        .all(|s| !matches!(s.evidence, Evidence::Uncertified { .. }));
    DecompositionCertificate {
        module: m.clone(),
        summands,
        certified,
    }
}

/// Like [`decompose`] but fails with `BudgetExhausted` when some summand
/// could not be certified.
pub fn decompose_certified(
    m: &Representation,
    budget: usize,
    seed: u64,
) -> Result<DecompositionCertificate> {
    let d = decompose(m, budget, seed);
    if d.certified {
        Ok(d)
    } else {
        Err(Error::BudgetExhausted(budget))
    }
}

pub fn is_indecomposable(m: &Representation, budget: usize, seed: u64) -> bool {
    let d = decompose(m, budget, seed);
    d.summands.len() == 1
}

type Piece = (Representation, ModuleMap, ModuleMap);

enum Split {
    Parts(Box<[Piece; 2]>),
    Indecomposable(Evidence),
}

enum LocalTest {
    Local {
        end_dim: usize,
        nilpotent_dim: usize,
    },
    Splits(ModuleMap, Poly),
    /// `maybe_local` is false when `End` is known not to be local.
    Inconclusive {
        maybe_local: bool,
    },
}

fn split_once<R: rand::Rng>(x: &Representation, budget: usize, rng: &mut R) -> Split {
    if x.dim() <= 1 {
        return Split::Indecomposable(Evidence::Trivial);
    }
    let end = end_space(x);
    let exact = local_test(x, &end, rng);
    match &exact {
        &LocalTest::Local {
            end_dim,
            nilpotent_dim,
        } => {
            return Split::Indecomposable(Evidence::LocalEndomorphismRing {
                end_dim,
                nilpotent_dim,
            })
        }
        LocalTest::Splits(phi, mp) => {
            return Split::Parts(Box::new(fitting_split(x, phi, mp, rng)))
        }
        LocalTest::Inconclusive { .. } => {}
    }
    for _ in 0..budget {
        let phi = end.random_element(rng);
        let mp = endo_min_poly(&phi);
        if !mp.is_primary(rng) {
            return Split::Parts(Box::new(fitting_split(x, &phi, &mp, rng)));
        }
    }
    match exact {
        LocalTest::Inconclusive { maybe_local: true } => {
            Split::Indecomposable(Evidence::RandomPrimary { trials: budget })
        }
        _ => Split::Indecomposable(Evidence::Uncertified { trials: budget }),
    }
}

/// Minimal polynomial of an endomorphism: lcm over vertices.
pub fn endo_min_poly(phi: &ModuleMap) -> Poly {
    let f = phi.source().field();
    phi.maps().iter().fold(Poly::one(f), |acc, m| {
        acc.lcm(&m.minimal_polynomial().expect("square vertex maps"))
    })
}

/// Exact test. Writes every basis element as `λ + n` with `n` nilpotent and
/// checks that the `n`s span a nilpotent ideal, which happens exactly when
/// `End` is local with residue field `k`.
fn local_test<R: rand::Rng>(x: &Representation, end: &HomSpace, rng: &mut R) -> LocalTest {
    let f = x.field();
    let id = ModuleMap::identity(x);
    let mut rad = Vec::new();
    for b in end.basis() {
        let mp = endo_min_poly(b);
        if !mp.is_primary(rng) {
            return LocalTest::Splits(b.clone(), mp);
        }
        let rad_poly = mp.radical();
        if rad_poly.degree() != Some(1) {
            return LocalTest::Inconclusive { maybe_local: true };
        }
        // radical is x - λ
        let lambda = f.neg(rad_poly.coeffs()[0]);
        let n = b.sub(&id.scale(lambda)).expect("same shapes");
        if !n.is_zero() {
            rad.push(n);
        }
    }
    let j = independent(x, rad);
    let jm = flattened_columns(x, x, &j);
    // closure J·J ⊆ J and nilpotency of J
    let mut power = j.clone();
    for step in 0..=x.dim() {
        if power.is_empty() {
            return LocalTest::Local {
                end_dim: end.dim(),
                nilpotent_dim: j.len(),
            };
        }
        let mut next = Vec::new();
        for a in &power {
            for b in &j {
                next.push(a.compose(b).expect("endomorphisms"));
            }
        }
        if step == 0 {
            let prods = flattened_columns(x, x, &next);
            if jm.hstack(&prods).expect("same rows").rank() != jm.rank() {
                return LocalTest::Inconclusive { maybe_local: false };
            }
        }
        power = independent(x, next);
    }
    LocalTest::Inconclusive { maybe_local: false }
}

fn independent(x: &Representation, maps: Vec<ModuleMap>) -> Vec<ModuleMap> {
    if maps.is_empty() {
        return maps;
    }
    let (_, pivots) = flattened_columns(x, x, &maps).rref();
    pivots.into_iter().map(|c| maps[c].clone()).collect()
}

/// Splits `x = ker ψ ⊕ im ψ` for `ψ = g(φ)^N`, `g` a proper factor of the
/// radical of the (non-primary) minimal polynomial of `φ`.
fn fitting_split<R: rand::Rng>(
    x: &Representation,
    phi: &ModuleMap,
    mp: &Poly,
    rng: &mut R,
) -> [Piece; 2] {
    let r = mp.radical();
    let g = loop {
        if let Some(g) = r.proper_factor(rng) {
            break g;
        }
    };
    let n = x.dims().iter().copied().max().unwrap_or(0) as u64;
    let psi: Vec<Matrix> = phi
        .maps()
        .iter()
        .map(|m| g.eval_matrix(m).and_then(|gm| gm.pow(n)).expect("square"))
        .collect();
    let ker_spans: Vec<Matrix> = psi.iter().map(Matrix::kernel_basis).collect();
    let im_spans: Vec<Matrix> = psi.iter().map(Matrix::column_space).collect();
    let (k, ik) = submodule(x, ker_spans.clone()).expect("Fitting kernel is a submodule");
    let (i, ii) = submodule(x, im_spans.clone()).expect("Fitting image is a submodule");
    let mut pk = Vec::new();
    let mut pi = Vec::new();
    for v in 0..x.dims().len() {
        let b = ker_spans[v].hstack(&im_spans[v]).expect("same rows");
        let inv = b.inverse().expect("Fitting decomposition is direct");
        let kd = ker_spans[v].cols();
        pk.push(inv.block(0, 0, kd, x.dims()[v]));
        pi.push(inv.block(kd, 0, x.dims()[v] - kd, x.dims()[v]));
    }
    let pk = ModuleMap::new_unchecked(x.clone(), k.clone(), pk);
    let pi = ModuleMap::new_unchecked(x.clone(), i.clone(), pi);
    [(k, ik, pk), (i, ii, pi)]
}
