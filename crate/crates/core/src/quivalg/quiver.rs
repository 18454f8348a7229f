use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Arrows are addressed by their position in `arrows`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for a in &arrows {
            if a.source >= vertices || a.target >= vertices {
                return Err(Error::MalformedQuiver(format!(
                    "arrow {} has endpoint outside 0..{vertices}",
                    a.id
                )));
            }
            if !seen.insert(a.id.as_str()) {
                return Err(Error::MalformedQuiver(format!(
                    "duplicate arrow id {}",
                    a.id
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// Arrows ending at `v`.
    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// Arrows starting at `v`.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    /// Same arrows, reversed. Arrow indices and ids are preserved.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                id: a.id.clone(),
                source: a.target,
                target: a.source,
            })
            .collect();
        Quiver {
            vertices: self.vertices,
            arrows,
        }
    }

    /// Checks that consecutive arrows compose; returns (source, target).
    pub fn path_endpoints(&self, path: &[usize]) -> Result<(usize, usize)> {
        let first = *path
            .first()
            .ok_or_else(|| Error::MalformedRelation("empty path".into()))?;
        for &a in path {
            if a >= self.arrows.len() {
                return Err(Error::MalformedRelation(format!("unknown arrow index {a}")));
            }
        }
        for w in path.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::MalformedRelation(format!(
                    "arrows {} and {} do not compose",
                    self.arrows[w[0]].id, self.arrows[w[1]].id
                )));
            }
        }
        Ok((
            self.arrows[first].source,
            self.arrows[*path.last().unwrap()].target,
        ))
    }
}
