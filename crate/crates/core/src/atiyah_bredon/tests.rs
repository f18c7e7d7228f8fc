use super::*;
use crate::gkm::bundled_fixture;
use crate::module::FreeModule;
use crate::ring::parse_poly;

fn bundle(name: &str) -> FixtureBundle {
    load_bundle(bundled_fixture(name).unwrap()).unwrap()
}

fn q(r: usize, deg: i64) -> FpModule {
    let rels: Vec<Vec<GradedPoly>> = (0..r).map(|i| vec![GradedPoly::var(r, i)]).collect();
    FpModule::from_relations(FreeModule::new(r, vec![deg]), &rels).unwrap()
}

#[test]
fn point_complex_is_exact() {
    let b = bundle("point-r1");
    let c = build_ab_complex(&b.data, true).unwrap();
    assert_eq!((c.start(), c.end()), (-1, 1));
    assert!(c.exactness().unwrap().is_exact());
    assert_eq!(build_ab_complex(&b.data, false).unwrap().start(), 0);
}

#[test]
fn bad_differentials_are_rejected_with_a_position() {
    let r = 1;
    let ab0 = FpModule::free(FreeModule::new(r, vec![0]));
    let ab1 = FpModule::free(FreeModule::new(r, vec![0]));
    let id = |m: &FpModule, n: &FpModule| {
        FpHom::new(m.clone(), n.clone(), crate::module::PolyMatrix::identity(r, 1)).unwrap()
    };
    let err = OrbitFiltrationData::new(vec![ab0.clone(), ab1.clone()], vec![id(&ab0, &ab1)], ab0.clone(), id(&ab0, &ab0));
    assert!(matches!(err, Err(AbError::Rejected(ComplexError::NotAComplex { position: -1 }))));
    let err = OrbitFiltrationData::new(vec![ab0.clone()], vec![], ab0.clone(), id(&ab0, &ab0));
    assert!(matches!(err, Err(AbError::Shape(_))));
}

#[test]
fn ext_identity_on_point_cp1_and_s3() {
    for name in ["point-r2", "cp1", "s3-free"] {
        let b = bundle(name);
        let rep = verify_ext_identity(&b.data, crate::complexes::DEFAULT_SEED).unwrap();
        assert!(rep.passes(), "{name}: {:?}", rep.rows.iter().map(|r| r.matched()).collect::<Vec<_>>());
    }
    let s3 = bundle("s3-free");
    let rep = verify_ext_identity(&s3.data, 1).unwrap();
    assert_eq!(rep.rows[0].matched(), "zero");
    assert_eq!(rep.rows[1].matched(), "unshifted");
    let cp1 = bundle("cp1");
    let rep = verify_ext_identity(&cp1.data, 1).unwrap();
    assert_eq!(rep.homology_source, HomologySource::PoincareDuality { n: 2 });
    assert!(rep.rows[1].both_zero);
}

#[test]
fn missing_homology_is_an_error() {
    let b = bundle("cp1");
    let plain = OrbitFiltrationData::new(
        b.data.strata().to_vec(),
        b.data.differentials().to_vec(),
        b.data.total().clone(),
        b.data.augmentation().clone(),
    )
    .unwrap();
    assert!(matches!(verify_ext_identity(&plain, 1), Err(AbError::MissingHomology)));
}

#[test]
fn strata_are_cohen_macaulay() {
    let v = verify_stratum_cm(&bundle("cp1").data).unwrap();
    assert_eq!(v.iter().map(|x| x.dimension).collect::<Vec<_>>(), vec![Some(1), Some(0)]);
    assert!(v.iter().all(CmVerdict::passes));
    let v = verify_stratum_cm(&bundle("point-r3").data).unwrap();
    assert_eq!(v[0].dimension, Some(3));
    assert!(v.iter().all(CmVerdict::passes));
}

#[test]
fn non_realizable_strata_are_quarantined() {
    // AB_1 = R has dimension 1, not 0
    let text = r#"{"schema": "eqhom.fixture/1", "name": "bad", "ring_rank": 1,
        "filtration": {"strata": [{"ring_rank": 1, "generators": [0]}, {"ring_rank": 1, "generators": [0]}],
                       "differentials": [[["0"]]],
                       "total": {"ring_rank": 1, "generators": [0]}, "augmentation": [["1"]]}}"#;
    let b = load_bundle(text).unwrap();
    assert_eq!(b.status, BundleStatus::Quarantined { failing_strata: vec![1] });
    assert!(!verify_bundle(&b, 1).unwrap().pass);
}

#[test]
fn syzygy_equivalence() {
    let cp1 = verify_syzygy_equivalence_all(&bundle("cp1").data).unwrap();
    assert_eq!(cp1.syzygy_order, SyzygyOrder::Infinite);
    assert_eq!(cp1.exact_through, 1);
    assert!(cp1.passes());
    let s3 = verify_syzygy_equivalence_all(&bundle("s3-free").data).unwrap();
    assert_eq!(s3.syzygy_order, SyzygyOrder::Finite(0));
    assert_eq!(s3.exact_through, -2);
    assert!(s3.passes());
    let row = verify_syzygy_equivalence(&bundle("point-r2").data, 2).unwrap();
    assert!(row.exact && row.syzygy);
}

#[test]
fn duflot_sequences_on_the_sphere() {
    let b = bundle("s2-rotation");
    assert_eq!(b.ses.len(), 3);
    for s in &b.ses {
        let v = verify_duflot(s).unwrap();
        assert!(v.passes(), "{}: {:?}", v.tag, v.ses.failures());
    }
}

#[test]
fn a_non_exact_sequence_fails() {
    let b = bundle("s2-rotation");
    let s = &b.ses[0];
    let g = FpHom::zero(s.g.source(), s.g.target());
    let v = verify_duflot(&SesFixture::new("broken", s.f.clone(), g).unwrap()).unwrap();
    assert!(!v.passes());
}

#[test]
fn localization_torsion() {
    let b = bundle("s2-rotation");
    let v = verify_localization_torsion(&b.restrictions[0].map, &b.restrictions[0].elements, 4).unwrap();
    assert_eq!(v, TorsionVerdict::Certified { kernel_power: 0, cokernel_power: 1 });
    let v = verify_localization_torsion(&b.restrictions[1].map, &b.restrictions[1].elements, 4).unwrap();
    assert_eq!(v, TorsionVerdict::Certified { kernel_power: 0, cokernel_power: 0 });
    let s3 = bundle("s3-free");
    let v = verify_localization_torsion(&s3.restrictions[0].map, &s3.restrictions[0].elements, 4).unwrap();
    assert_eq!(v, TorsionVerdict::Certified { kernel_power: 2, cokernel_power: 0 });
    let v = verify_localization_torsion(&s3.restrictions[0].map, &s3.restrictions[0].elements, 1).unwrap();
    assert_eq!(v, TorsionVerdict::Unknown { bound: 1 });
    let zero = GradedPoly::zero(1);
    assert!(verify_localization_torsion(&s3.restrictions[0].map, &[zero], 4).is_err());
}

#[test]
fn locally_free_shifts() {
    for r in 1..=2 {
        let v = verify_locally_free_shift(&q(0, 0), &q(r, -(r as i64)), r, 1).unwrap();
        assert!(v.passes(), "r = {r}");
        let v = verify_locally_free_shift(&q(0, 0), &q(r, 0), r, 1).unwrap();
        assert!(!v.passes());
    }
    let s3 = bundle("s3-free");
    let x = &s3.locally_free[0];
    assert!(verify_locally_free_shift(&x.quotient, &x.total, 1, 1).unwrap().passes());
    let r2 = FpModule::free(FreeModule::new(2, vec![0]));
    assert!(verify_locally_free_shift(&r2, &r2, 0, 1).unwrap().passes());
    let r1 = FpModule::free(FreeModule::new(1, vec![0]));
    assert!(matches!(verify_locally_free_shift(&r1, &r2, 1, 1).unwrap(), LocallyFreeVerdict::Unknown));
    assert!(verify_locally_free_shift(&r2, &r2, 1, 1).is_err());
}

#[test]
fn ext_vanishing_on_segments() {
    let m = FpModule::from_relations(FreeModule::new(1, vec![-2]), &[vec![parse_poly("t1", 1).unwrap()]]).unwrap();
    assert_eq!(verify_ext_vanishing(&m, 0, 1), (vec![1], true));
    assert_eq!(verify_ext_vanishing(&m, 1, 1), (vec![1], false));
}

#[test]
fn duality_shift() {
    let cyl = FpModule::from_relations(FreeModule::new(1, vec![0]), &[vec![parse_poly("t1", 1).unwrap()]]).unwrap();
    assert!(verify_duality_shift(&cyl, &cyl.shift(-2), 2));
    assert!(!verify_duality_shift(&cyl, &cyl, 2));
}

#[test]
fn every_bundle_passes() {
    for (name, text) in crate::gkm::bundled_fixtures() {
        let b = load_bundle(text).unwrap();
        let rep = verify_bundle(&b, crate::complexes::DEFAULT_SEED).unwrap();
        assert!(rep.pass, "{name}: {}", serde_json::to_string_pretty(&rep).unwrap());
    }
}

#[test]
fn schema_is_checked() {
    let text = bundled_fixture("point-r1").unwrap().replace("eqhom.fixture/1", "other/2");
    assert!(matches!(load_bundle(&text), Err(AbError::Shape(_))));
}
