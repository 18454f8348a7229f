use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use arsubcat::io::{parse_algebra, parse_module};
use arsubcat::quivalg::{t2_of, Algebra, T2Algebra};
use arsubcat::repmod::Representation;
use serde::Deserialize;

use crate::CliError;

/// Expectations a fixture pins down. Every field is optional.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub indecomposable_count: Option<usize>,
    pub gorenstein_d: Option<usize>,
    pub selfinjective: Option<bool>,
    pub gp_census: Option<BTreeMap<String, usize>>,
    pub tau_syzygy: Option<TauSyzygyExpectation>,
    pub ar_full: Option<bool>,
    pub ar_gprj: Option<bool>,
    pub ar_pfin: Option<bool>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TauSyzygyExpectation {
    pub holds: bool,
    /// Objects that must appear among the counterexamples.
    #[serde(default)]
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureManifest {
    pub name: String,
    pub algebra: PathBuf,
    /// Base algebra file when this fixture is a generated `T₂` variant.
    #[serde(default)]
    pub t2_of: Option<PathBuf>,
    #[serde(default = "default_cap")]
    pub gorenstein_cap: usize,
    pub modules: BTreeMap<String, PathBuf>,
    /// Names (keys of `modules`) forming the complete indecomposable list.
    pub indecomposables: Vec<String>,
    #[serde(default)]
    pub census_dim_cap: Option<Vec<usize>>,
    #[serde(default)]
    pub expected: Expected,
}

fn default_cap() -> usize {
    4
}

/// A manifest with its files loaded.
pub struct Fixture {
    pub manifest: FixtureManifest,
    pub algebra: Arc<Algebra>,
    pub modules: BTreeMap<String, Representation>,
    /// The `T₂` layout when the manifest declares `t2_of`.
    pub t2: Option<T2Algebra>,
}

impl Fixture {
    /// The indecomposables in manifest order, with their names.
    pub fn indecomposables(&self) -> Vec<(String, Representation)> {
        self.manifest
            .indecomposables
            .iter()
            .map(|n| (n.clone(), self.modules[n].clone()))
            .collect()
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn load_algebra(path: &Path) -> Result<Arc<Algebra>, CliError> {
    parse_algebra(&read_file(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn load_fixture(path: &Path) -> Result<Fixture, CliError> {
    let text = read_file(path)?;
    let manifest: FixtureManifest = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let algebra = load_algebra(&dir.join(&manifest.algebra))?;
    let mut t2 = None;
    if let Some(base) = &manifest.t2_of {
        let base = load_algebra(&dir.join(base))?;
        let mut layout = t2_of(&base).map_err(|e| CliError::Parse(e.to_string()))?;
        if !layout.t2.same_as(&algebra) {
            return Err(CliError::Parse(
                "algebra is not T2 of the t2_of algebra".into(),
            ));
        }
        layout.t2 = algebra.clone();
        t2 = Some(layout);
    }
    let mut modules = BTreeMap::new();
    for (name, file) in &manifest.modules {
        let p = dir.join(file);
        let m = parse_module(&algebra, &read_file(&p)?)
            .map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
        modules.insert(name.clone(), m);
    }
    if let Some(missing) = manifest
        .indecomposables
        .iter()
        .find(|n| !modules.contains_key(*n))
    {
        return Err(CliError::Parse(format!(
            "indecomposable {missing} has no module file"
        )));
    }
    Ok(Fixture {
        manifest,
        algebra,
        modules,
        t2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_defaults_and_strictness() {
        let m: FixtureManifest = serde_json::from_str(
            r#"{"name": "x", "algebra": "a.json", "modules": {}, "indecomposables": []}"#,
        )
        .unwrap();
        assert_eq!(m.gorenstein_cap, 4);
        assert!(m.expected.gp_census.is_none() && m.t2_of.is_none());
        let bad = r#"{"name": "x", "algebra": "a.json", "modules": {}, "indecomposables": [],
                      "expected": {"indecomposables": 3}}"#;
        assert!(serde_json::from_str::<FixtureManifest>(bad).is_err());
    }

    #[test]
    fn missing_files_are_parse_errors() {
        let e = load_fixture(Path::new("/nonexistent/manifest.json"))
            .err()
            .unwrap();
        assert_eq!(e.exit_code(), 1);
    }
}
