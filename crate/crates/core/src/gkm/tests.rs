use super::*;
use crate::complexes::iso_probe;
use crate::invariants::{syzygy_order, HilbertSeries, SyzygyOrder};
use crate::ring::parse_poly;

fn graph(r: usize, vertices: &[&str], edges: &[(&str, &str, &str)]) -> MomentGraph {
    MomentGraph::new(
        r,
        vertices.iter().map(|v| v.to_string()).collect(),
        edges
            .iter()
            .map(|(v, w, a)| (v.to_string(), w.to_string(), parse_poly(a, r).unwrap()))
            .collect(),
    )
    .unwrap()
}

fn cp2() -> MomentGraph {
    graph(2, &["p1", "p2", "p3"], &[("p1", "p2", "t1"), ("p1", "p3", "t2"), ("p2", "p3", "t1 - t2")])
}

#[test]
fn single_vertex_gives_the_ring() {
    let g = graph(2, &["p"], &[]);
    let h = gkm_cohomology(&g).unwrap();
    assert_eq!(HilbertSeries::of(&h), HilbertSeries::new(2, [(0, 1)]));
    let data = gkm_to_filtration(&g).unwrap();
    assert!(!data.is_truncated());
    assert!(data.strata()[1..].iter().all(FpModule::is_zero));
}

#[test]
fn projective_line() {
    let g = graph(1, &["N", "S"], &[("N", "S", "t1")]);
    let h = gkm_cohomology(&g).unwrap();
    assert!(h.is_presented_free());
    let mut degrees = h.minimized().module.generators().degrees().to_vec();
    degrees.sort();
    assert_eq!(degrees, vec![0, 2]);
}

#[test]
fn projective_plane_is_free_with_degrees_0_2_4() {
    let h = gkm_cohomology(&cp2()).unwrap();
    assert_eq!(HilbertSeries::of(&h), HilbertSeries::new(2, [(0, 1), (2, 1), (4, 1)]));
    assert_eq!(syzygy_order(&h), SyzygyOrder::Infinite);
}

#[test]
fn constants_lie_in_the_cohomology_and_it_is_torsion_free() {
    for g in [cp2(), graph(1, &["N", "S"], &[("N", "S", "t1")])] {
        let (h, inclusion) = gkm_cohomology_with_inclusion(&g).unwrap();
        assert!(syzygy_order(&h).at_least(1));
        assert!(contains_constants(&g).unwrap());
        // independently: the diagonal adds nothing to a minimal generating set
        let n = g.vertices().len();
        let ones = vec![GradedPoly::one(g.rank()); n];
        let cols: Vec<Vec<GradedPoly>> = inclusion.matrix().columns().into_iter().chain([ones]).collect();
        let free = FreeModule::new(g.rank(), vec![0; n]);
        let kept = crate::module::minimal_generators(&free, &cols).unwrap();
        assert!(!kept.contains(&(cols.len() - 1)));
    }
}

#[test]
fn sign_flips_give_isomorphic_cohomology() {
    let g = cp2();
    let h = gkm_cohomology(&g).unwrap();
    for k in 0..g.edges().len() {
        let flipped = gkm_cohomology(&g.flip_sign(k)).unwrap();
        assert!(iso_probe(&h, &flipped).unwrap().is_iso(), "edge {k}");
    }
}

#[test]
fn truncated_complex_is_exact_at_the_start() {
    let g = graph(
        2,
        &["00", "10", "01", "11"],
        &[("00", "10", "t1"), ("01", "11", "t1"), ("00", "01", "t2"), ("10", "11", "t2")],
    );
    let data = gkm_to_filtration(&g).unwrap();
    assert!(data.is_truncated());
    assert_eq!(data.stratum(1).num_generators(), 4);
    let c = crate::atiyah_bredon::build_ab_complex(&data, true).unwrap();
    assert!(c.cohomology_at(-1).unwrap().is_zero());
    assert!(c.cohomology_at(0).unwrap().is_zero());
}

#[test]
fn invalid_graphs_are_rejected() {
    let r = 1;
    let t = parse_poly("t1", r).unwrap();
    let v = |s: &[&str]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    assert!(MomentGraph::new(r, v(&["a", "b"]), vec![]).is_err());
    assert!(MomentGraph::new(r, v(&["a", "b"]), vec![("a".into(), "c".into(), t.clone())]).is_err());
    assert!(MomentGraph::new(r, v(&["a", "b"]), vec![("a".into(), "b".into(), GradedPoly::zero(r))]).is_err());
    assert!(MomentGraph::new(r, v(&["a", "b"]), vec![("a".into(), "b".into(), t.pow(2))]).is_err());
    assert!(MomentGraph::new(r, v(&["a", "a"]), vec![]).is_err());
}

#[test]
fn bundled_graphs_load() {
    let graphs = bundled_graphs().unwrap();
    assert_eq!(graphs.len(), 4);
    for (name, g) in graphs {
        let json = g.to_json();
        assert_eq!(MomentGraph::from_json(&json).unwrap(), g, "{name}");
    }
}
