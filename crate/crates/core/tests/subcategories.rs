mod common;

use arsubcat::arsubcat::{
    almost_split_check, check_tau_is_syzygy, classify_gp_census, enumerate_h_indecomposables,
    gorenstein_profile, has_finite_projdim, is_gorenstein_projective, tau_gprj, tau_pfin,
    verify_ar_duality, CensusTag, Subcategory, ENUMERATION_LIMIT,
};
use arsubcat::quivalg::t2_of;
use arsubcat::repmod::{is_projective, Representation};
use arsubcat::Error;
use common::*;

fn named(ms: Vec<Representation>) -> Vec<(String, Representation)> {
    ms.into_iter()
        .enumerate()
        .map(|(i, m)| (format!("M{i}"), m))
        .collect()
}

fn h_kx2() -> (arsubcat::quivalg::T2Algebra, Vec<(String, Representation)>) {
    let d = kx2();
    let t2 = t2_of(&d).unwrap();
    let base: Vec<_> = uniserials(&d, 2).into_iter().map(|(_, m)| m).collect();
    let all = enumerate_h_indecomposables(&t2, &base, &[2, 2], false, ENUMERATION_LIMIT).unwrap();
    (t2, named(all))
}

#[test]
fn gorenstein_profiles() {
    assert_eq!(gorenstein_profile(&kx2(), 4).unwrap().d, Some(0));
    assert!(gorenstein_profile(&kx3(), 4).unwrap().is_selfinjective);
    let pa = gorenstein_profile(&a2(), 4).unwrap();
    assert_eq!((pa.d, pa.is_selfinjective), (Some(1), false));
    let t = t2_of(&kx2()).unwrap();
    assert_eq!(gorenstein_profile(&t.t2, 4).unwrap().d, Some(1));
    assert_eq!(gorenstein_profile(&square(), 4).unwrap().d, Some(2));
}

#[test]
fn gp_census_of_dual_numbers() {
    let d = kx2();
    let t2 = t2_of(&d).unwrap();
    let prof = gorenstein_profile(&t2.t2, 4).unwrap();
    let base: Vec<_> = uniserials(&d, 2).into_iter().map(|(_, m)| m).collect();
    let c = classify_gp_census(&t2, &base, &[2, 2], &prof).unwrap();
    assert_eq!(c.total(), 5);
    let counts: Vec<usize> = [
        CensusTag::AIdentity,
        CensusTag::BCosocle,
        CensusTag::CSyzygy,
        CensusTag::Other,
    ]
    .iter()
    .map(|&t| c.count(t))
    .collect();
    assert_eq!(counts, vec![2, 2, 1, 0]);
}

#[test]
fn gp_census_of_kx3_has_an_extra_object() {
    let d = kx3();
    let t2 = t2_of(&d).unwrap();
    let prof = gorenstein_profile(&t2.t2, 4).unwrap();
    let base: Vec<_> = uniserials(&d, 3).into_iter().map(|(_, m)| m).collect();
    let c = classify_gp_census(&t2, &base, &[2, 2], &prof).unwrap();
    assert_eq!(c.count(CensusTag::Other), 1);
    assert_eq!(c.count(CensusTag::CSyzygy), 0);
}

#[test]
fn gorenstein_translate_stays_in_gprj() {
    let (t2, all) = h_kx2();
    let prof = gorenstein_profile(&t2.t2, 4).unwrap();
    let mut non_gp = 0;
    for (_, m) in &all {
        if !is_gorenstein_projective(m, &prof).unwrap() {
            non_gp += 1;
            assert_eq!(
                tau_gprj(m, &prof).unwrap_err(),
                Error::NotGorensteinProjective
            );
            continue;
        }
        let t = tau_gprj(m, &prof).unwrap();
        assert!(is_gorenstein_projective(&t, &prof).unwrap());
        assert_eq!(t.is_zero(), is_projective(m));
    }
    assert_eq!(non_gp, 4);
}

#[test]
fn relative_dualities_on_h_of_dual_numbers() {
    let (t2, all) = h_kx2();
    let prof = gorenstein_profile(&t2.t2, 4).unwrap();
    let gp: Vec<_> = all
        .iter()
        .filter(|(_, m)| is_gorenstein_projective(m, &prof).unwrap())
        .cloned()
        .collect();
    let r = verify_ar_duality(&gp, Subcategory::Gprj, &prof).unwrap();
    assert!(r.passed());
    let pfin: Vec<_> = all
        .iter()
        .filter(|(_, m)| has_finite_projdim(m, 4).is_some())
        .cloned()
        .collect();
    assert!(!pfin.is_empty());
    let r = verify_ar_duality(&pfin, Subcategory::Pfin, &prof).unwrap();
    assert!(r.passed());
    let r = verify_ar_duality(&all, Subcategory::Full, &prof).unwrap();
    assert!(r.passed());
}

#[test]
fn pfin_translate_needs_finite_projdim() {
    let (t2, all) = h_kx2();
    let prof = gorenstein_profile(&t2.t2, 4).unwrap();
    for (_, m) in &all {
        let r = tau_pfin(m, &prof);
        match has_finite_projdim(m, 4) {
            Some(_) => assert!(r.is_ok()),
            None => assert!(matches!(r, Err(Error::InfiniteProjectiveDimension(_)))),
        }
    }
}

#[test]
fn almost_split_sequences_do_not_split() {
    let (t2, all) = h_kx2();
    let prof = gorenstein_profile(&t2.t2, 4).unwrap();
    for (_, m) in &all {
        if is_projective(m) || !is_gorenstein_projective(m, &prof).unwrap() {
            continue;
        }
        let c = almost_split_check(m, &prof).unwrap();
        assert!(c.ext_dim >= 1 && c.non_split);
    }
}

#[test]
fn translate_versus_syzygy() {
    let d3 = kx3();
    let p3 = gorenstein_profile(&d3, 4).unwrap();
    let r = check_tau_is_syzygy(&uniserials(&d3, 3), &p3).unwrap();
    assert!(!r.holds);
    let w: Vec<_> = r
        .witnesses
        .iter()
        .map(|w| (w.id.as_str(), w.tau_dim, w.syzygy_dim))
        .collect();
    assert_eq!(w, vec![("S", 1, 2), ("M2", 2, 1)]);
    let d2 = kx2();
    let p2 = gorenstein_profile(&d2, 4).unwrap();
    assert!(check_tau_is_syzygy(&uniserials(&d2, 2), &p2).unwrap().holds);
}
