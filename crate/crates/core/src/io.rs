//! JSON formats for algebras, modules and objects of `H(Λ)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, PrimeField};
use crate::morphcat::MorphObject;
use crate::quivalg::{Algebra, Arrow, Quiver, T2Algebra, DEFAULT_DEGREE_CAP};
use crate::repmod::{ModuleMap, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field_p: u64,
    pub vertices: usize,
    pub arrows: Vec<ArrowJson>,
    pub relations: Vec<Vec<TermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_correspondence: Option<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    #[serde(default)]
    pub algebra: String,
    pub dims: Vec<usize>,
    pub arrow_maps: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub vertex_maps: BTreeMap<String, Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphObjectJson {
    #[serde(rename = "A")]
    pub a: ModuleJson,
    #[serde(rename = "B")]
    pub b: ModuleJson,
    pub f: MapJson,
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn rows(m: &Matrix) -> Vec<Vec<i64>> {
    m.to_i64_rows()
}

pub fn algebra_to_json(alg: &Algebra) -> AlgebraJson {
    let q = alg.quiver();
    AlgebraJson {
        field_p: alg.field().p() as u64,
        vertices: alg.vertices(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowJson {
                id: a.id.clone(),
                source: a.source,
                target: a.target,
            })
            .collect(),
        relations: alg
            .relations()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|t| TermJson {
                        coeff: t.coeff as i64,
                        path: t.path.iter().map(|&a| q.arrow(a).id.clone()).collect(),
                    })
                    .collect()
            })
            .collect(),
        vertex_correspondence: None,
    }
}

pub fn t2_to_json(t2: &T2Algebra) -> AlgebraJson {
    AlgebraJson {
        vertex_correspondence: Some(t2.correspondence.clone()),
        ..algebra_to_json(&t2.t2)
    }
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<Arc<Algebra>> {
    let field = PrimeField::new(j.field_p)?;
    let quiver = Quiver::new(
        j.vertices,
        j.arrows
            .iter()
            .map(|a| Arrow {
                id: a.id.clone(),
                source: a.source,
                target: a.target,
            })
            .collect(),
    )?;
    let relations = j
        .relations
        .iter()
        .map(|r| {
            r.iter()
                .map(|t| {
                    let path = t
                        .path
                        .iter()
                        .map(|id| {
                            quiver.arrow_index(id).ok_or_else(|| {
                                Error::MalformedRelation(format!("unknown arrow {id}"))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok((t.coeff, path))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Algebra::build(field, quiver, relations, DEFAULT_DEGREE_CAP)
}

pub fn parse_algebra(text: &str) -> Result<Arc<Algebra>> {
    algebra_from_json(&parse(text)?)
}

pub fn module_to_json(m: &Representation, algebra_id: &str) -> ModuleJson {
    let q = m.algebra().quiver();
    ModuleJson {
        algebra: algebra_id.to_string(),
        dims: m.dims().to_vec(),
        arrow_maps: q
            .arrows()
            .iter()
            .zip(m.maps())
            .map(|(a, mat)| (a.id.clone(), rows(mat)))
            .collect(),
    }
}

pub fn module_from_json(alg: &Arc<Algebra>, j: &ModuleJson) -> Result<Representation> {
    if j.dims.len() != alg.vertices() {
        return Err(Error::DimensionMismatch(format!(
            "{} dimensions for {} vertices",
            j.dims.len(),
            alg.vertices()
        )));
    }
    let f = alg.field();
    let mut maps = Vec::new();
    for a in alg.quiver().arrows() {
        let (r, c) = (j.dims[a.target], j.dims[a.source]);
        let m = match j.arrow_maps.get(&a.id) {
            Some(data) => Matrix::from_rows_with_cols(f, data, c, r)?,
            None if r * c == 0 => Matrix::zeros(f, r, c),
            None => {
                return Err(Error::InvalidRepresentation(format!(
                    "missing map for arrow {}",
                    a.id
                )))
            }
        };
        maps.push(m);
    }
    if let Some(extra) = j
        .arrow_maps
        .keys()
        .find(|k| alg.quiver().arrow_index(k).is_none())
    {
        return Err(Error::InvalidRepresentation(format!(
            "unknown arrow {extra}"
        )));
    }
    Representation::new(alg.clone(), j.dims.clone(), maps)
}

pub fn parse_module(alg: &Arc<Algebra>, text: &str) -> Result<Representation> {
    module_from_json(alg, &parse(text)?)
}

pub fn morph_object_to_json(obj: &MorphObject, algebra_id: &str) -> MorphObjectJson {
    let f = obj.f();
    MorphObjectJson {
        a: module_to_json(obj.a(), algebra_id),
        b: module_to_json(obj.b(), algebra_id),
        f: MapJson {
            vertex_maps: f
                .maps()
                .iter()
                .enumerate()
                .map(|(v, m)| (v.to_string(), rows(m)))
                .collect(),
        },
    }
}

pub fn morph_object_from_json(alg: &Arc<Algebra>, j: &MorphObjectJson) -> Result<MorphObject> {
    let a = module_from_json(alg, &j.a)?;
    let b = module_from_json(alg, &j.b)?;
    let f = alg.field();
    let maps = (0..alg.vertices())
        .map(|v| {
            let (r, c) = (b.dims()[v], a.dims()[v]);
            match j.f.vertex_maps.get(&v.to_string()) {
                Some(data) => Matrix::from_rows_with_cols(f, data, c, r),
                None if r * c == 0 => Ok(Matrix::zeros(f, r, c)),
                None => Err(Error::InvalidMap(format!("missing map at vertex {v}"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MorphObject::new(ModuleMap::new(a, b, maps)?))
}

pub fn parse_morph_object(alg: &Arc<Algebra>, text: &str) -> Result<MorphObject> {
    morph_object_from_json(alg, &parse(text)?)
}

/// Pretty JSON with stable field order.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}
