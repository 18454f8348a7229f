use std::path::Path;

use arsubcat::arsubcat::{gorenstein_profile, tau_gprj, tau_pfin, tr_p_lambda};
use arsubcat::homalg::{ar_translate, syzygy, transpose};
use arsubcat::io::{
    module_to_json, morph_object_to_json, parse_module, parse_morph_object, to_json_string,
};
use arsubcat::morphcat::{imin, mimo, MorphObject};
use arsubcat::repmod::{is_projective, Representation};
use clap::ValueEnum;

use crate::manifest::{load_algebra, read_file};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Syzygy,
    Tau,
    Tr,
    Dual,
    Mimo,
    Imin,
    TauGprj,
    TauPfin,
    TrP,
}

impl Op {
    /// Ops whose input file holds a morphism object rather than a module.
    fn takes_object(self) -> bool {
        matches!(self, Op::Mimo | Op::TrP)
    }
}

pub enum Output {
    Module(Representation),
    Object(MorphObject),
}

pub struct Computed {
    pub json: String,
    pub summary: String,
}

fn summary(out: &Output) -> String {
    match out {
        Output::Module(m) => format!("dims {:?}", m.dims()),
        Output::Object(o) => format!("A dims {:?}, B dims {:?}", o.a().dims(), o.b().dims()),
    }
}

pub fn compute(
    algebra: &Path,
    module: &Path,
    op: Op,
    gorenstein_cap: usize,
) -> Result<Computed, CliError> {
    let alg = load_algebra(algebra)?;
    let id = algebra
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("algebra")
        .to_string();
    let text = read_file(module)?;
    let parse_err = |e: arsubcat::Error| CliError::Parse(format!("{}: {e}", module.display()));
    let mut note = None;
    let (out, over_op) = if op.takes_object() {
        let obj = parse_morph_object(&alg, &text).map_err(parse_err)?;
        match op {
            Op::Mimo => (Output::Object(mimo(&obj)?.0), false),
            _ => (Output::Object(tr_p_lambda(&obj)?), true),
        }
    } else {
        let m = parse_module(&alg, &text).map_err(parse_err)?;
        if is_projective(&m) && matches!(op, Op::Tau | Op::Tr | Op::TauGprj | Op::TauPfin) {
            note = Some("projective input");
        }
        match op {
            Op::Syzygy => (Output::Module(syzygy(&m)), false),
            Op::Tau => (Output::Module(ar_translate(&m)?), false),
            Op::Tr => (Output::Module(transpose(&m)?), true),
            Op::Dual => (Output::Module(m.k_dual()), true),
            Op::Imin => (Output::Object(imin(&m)), false),
            Op::TauGprj => {
                let p = gorenstein_profile(&alg, gorenstein_cap)?;
                (Output::Module(tau_gprj(&m, &p)?), false)
            }
            Op::TauPfin => {
                let p = gorenstein_profile(&alg, gorenstein_cap)?;
                (Output::Module(tau_pfin(&m, &p)?), false)
            }
            Op::Mimo | Op::TrP => unreachable!("object ops handled above"),
        }
    };
    let id = if over_op { format!("{id}^op") } else { id };
    let json = match &out {
        Output::Module(m) => to_json_string(&module_to_json(m, &id)),
        Output::Object(o) => to_json_string(&morph_object_to_json(o, &id)),
    } + "\n";
    let mut summary = summary(&out);
    if let Some(n) = note {
        summary.push_str(&format!(" ({n})"));
    }
    Ok(Computed { json, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn object_ops() {
        let takes: Vec<Op> = Op::value_variants()
            .iter()
            .copied()
            .filter(|o| o.takes_object())
            .collect();
        assert_eq!(takes, vec![Op::Mimo, Op::TrP]);
        assert_eq!(Op::from_str("tau-gprj", false).unwrap(), Op::TauGprj);
    }
}
