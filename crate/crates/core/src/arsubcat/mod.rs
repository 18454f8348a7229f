//! Gorenstein data, relative Auslander-Reiten translates, the duality
//! verifier and the Gorenstein projective census of `H(Λ)`.

mod census;
mod duality;
mod gorenstein;
mod translate;

pub use census::{
    check_tau_is_syzygy, classify_gp_census, enumerate_h_indecomposables,
    enumerate_indecomposables, tag_gp_census, CensusEntry, CensusTag, GpCensus, TauSyzygyReport,
    TauSyzygyWitness, ENUMERATION_LIMIT,
};
pub use duality::{
    almost_split_check, relative_translate, verify_ar_duality, AlmostSplitCheck, DualityPair,
    DualityReport, Subcategory,
};
pub use gorenstein::{
    gorenstein_profile, has_finite_projdim, is_gorenstein_projective, GorensteinProfile,
};
pub use translate::{strip_projective_summands, tau_gprj, tau_pfin, tr_p_lambda};
