use super::*;
use crate::repcat::{hom_dim, Module};
use crate::testing::{labels, KX2, S81, S82, S825, S84_NONSELFINJ, S84_SELFINJ};

fn run(s: &str) -> TwoStep {
    let pres = Presentation::from_json_str(s).unwrap();
    let a = Arc::new(Algebra::from_presentation(&pres).unwrap());
    two_step(&a, &pres).unwrap()
}

fn iso(x: &Module, y: &Module) -> bool {
    is_isomorphic(x, y).unwrap()
}

#[test]
fn s_and_n_of_s82() {
    let ts = run(S82);
    let simples = &ts.family.objects.simples;
    assert!(ts.sn.s[0].is_zero());
    assert!(iso(&ts.sn.n[0], &simples[0]));
    assert!(iso(&ts.sn.s[1], &simples[0].power(2)));
    assert_eq!(ts.sn.n[1].dim(), 4);
    assert!(iso(&ts.sn.n[1], &ts.family.costandard[1]));
    for l in 0..2 {
        assert_eq!(ts.sn.s[l].dim() + ts.sn.n[l].dim(), ts.tilting.tilting[l].module.dim());
        assert!(ts.sn.projection[l].compose(&ts.sn.inclusion[l]).is_zero());
    }
    assert_eq!(hom_dim(&ts.tilting.tilting[0].module, &ts.sn.n[1]), 0);
}

#[test]
fn ringel_dual_test_agrees_with_classification() {
    for s in [S81, S82, S825] {
        let ts = run(s);
        assert!(ts.ps_test.verdict);
        assert!(ts.ps_test.ringel_classification.properly_stratified);
    }
}

#[test]
fn h_of_s82() {
    let ts = run(S82);
    let d = ts.dual().unwrap();
    assert_eq!(d.h[0].dim(), 5);
    assert_eq!(labels(&d.h[0].profile()), vec![vec!["1"], vec!["2"], vec!["1"], vec!["2"], vec!["1"]]);
    assert!(iso(&d.h[1], &ts.family.objects.injectives[1]));
    assert_eq!(d.b.algebra.dim(), 7);
    assert!(d.b_opp_classification.sss);
}

#[test]
fn quasi_hereditary_degenerates() {
    let ts = run(S81);
    let d = ts.dual().unwrap();
    for l in 0..2 {
        assert!(iso(&ts.sn.n[l], &ts.family.costandard[l]));
        assert!(iso(&d.h[l], &ts.family.objects.injectives[l]));
    }
    assert_eq!(d.b.algebra.dim(), ts.algebra().dim());
    assert_eq!(d.b.algebra.cartan_matrix(), ts.algebra().cartan_matrix());
}

#[test]
fn two_step_dual_of_s825() {
    let ts = run(S825);
    let d = ts.dual().unwrap();
    assert!(d.b_opp_classification.sss);
    assert!(!d.b_classification.sss);
}

#[test]
fn g_and_g_prime() {
    for s in [S81, S82] {
        let ts = run(s);
        let d = ts.dual().unwrap();
        let b = &d.b.algebra;
        for l in 0..2 {
            assert!(iso(&ts.g_apply(&d.h[l]).unwrap(), &Module::injective(b, l)));
        }
        for (m, _) in ts.sample_finite_pd(6, 1, 8) {
            let back = ts.g_prime_apply(&ts.g_apply(&m).unwrap()).unwrap();
            assert!(iso(&back, &m));
        }
    }
}

#[test]
fn coresolutions_and_codimension() {
    for s in [S81, S82] {
        let ts = run(s);
        let pd = ts.findim(16).unwrap().pd_h;
        let reg = Module::regular(ts.algebra());
        let cores = ts.add_h_coresolution(&reg, 8).unwrap().unwrap();
        assert_eq!(cores.len() - 1, pd);
        for (m, p) in ts.sample_finite_pd(6, 2, 8) {
            assert!(p <= pd);
            assert_eq!(ts.codim_fn(&m, 8).unwrap(), ts.codim_proper_costandard(&m, 8).unwrap());
        }
    }
}

#[test]
fn duality_identities_on_s825() {
    let ts = run(S825);
    let r = ts.findim(16).unwrap();
    assert_eq!(r.algebra_duality, DualityVerdict::Witness);
    assert_eq!(r.ringel_duality, DualityVerdict::RefutedByExt);
    assert_eq!(r.pd_h, 2 * r.pd_ringel_tilting);
    assert!(r.identities.iter().all(|c| c.holds));
    assert!(!r.identities.is_empty());
}

#[test]
fn g_image_table() {
    for s in [S81, S82] {
        let ts = run(s);
        for r in ts.g_images().unwrap() {
            assert!(r.holds.iter().all(|&x| x), "{}", r.row);
        }
    }
}

fn two_vertex(arrows: &str, relations: &str) -> Presentation {
    let s = format!(
        r#"{{"field":{{"kind":"Q"}},"vertices":["1","2"],"arrows":{arrows},"relations":{relations},"order":["1","2"]}}"#
    );
    Presentation::from_json_str(&s).unwrap()
}

#[test]
fn recovered_presentations_of_s82() {
    let ts = run(S82);
    let arrows = r#"[{"name":"beta","from":"1","to":"2"},{"name":"alpha","from":"2","to":"1"},{"name":"gamma","from":"2","to":"2"}]"#;
    let rel = |ps: &[[&str; 2]]| {
        let items: Vec<String> =
            ps.iter().map(|[x, y]| format!(r#"[{{"coeff":"1","path":["{x}","{y}"]}}]"#)).collect();
        format!("[{}]", items.join(","))
    };
    let r = two_vertex(arrows, &rel(&[["gamma", "beta"], ["gamma", "gamma"], ["alpha", "beta"]]));
    let b = two_vertex(arrows, &rel(&[["gamma", "gamma"], ["gamma", "beta"], ["beta", "alpha"]]));
    assert!(crate::presentation::presentations_equivalent(ts.ringel.presentation(), &r));
    assert!(crate::presentation::presentations_equivalent(&ts.dual().unwrap().b.presentation, &b));
}

#[test]
fn ext_quiver_of_ringel_dual_of_s825() {
    let ts = run(S825);
    let e = crate::homology::ext_quiver(ts.ringel.algebra());
    let s = ts.ringel.algebra();
    let l1 = Module::simple(s, 0);
    let l2 = Module::simple(s, 1);
    assert_eq!(ext_dim(&l1, &l2, 1, 4).unwrap(), 2);
    assert_eq!(ext_dim(&l2, &l1, 1, 4).unwrap(), 1);
    assert_eq!(e[0][1], 2);
}

#[test]
fn ringel_dual_sends_n_to_standard() {
    let ts = run(S82);
    let rfam = strat_family(ts.ringel.algebra()).unwrap();
    for l in 0..2 {
        assert!(iso(&ts.ringel.f_apply(&ts.sn.n[l]), &rfam.standard[l]));
    }
}

#[test]
fn h_is_ext_injective_in_fn() {
    for s in [S81, S82, S825, S84_SELFINJ, S84_NONSELFINJ, KX2] {
        let ts = run(s);
        let h = ts.h_sum().unwrap();
        let n = Module::direct_sum_all(ts.algebra(), &ts.sn.n);
        for i in 1..4 {
            assert_eq!(ext_dim(&h, &h, i, 8).unwrap(), 0);
            assert_eq!(ext_dim(&n, &h, i, 8).unwrap(), 0);
        }
    }
}

#[test]
fn ringel_dual_of_s82_fails_the_test() {
    let ts = run(S82);
    let r = two_step(ts.ringel.algebra(), ts.ringel.presentation()).unwrap();
    assert!(!r.ps_test.verdict);
    assert!(!r.ps_test.ringel_classification.properly_stratified);
    assert!(r.ps_test.s_filtrations.iter().any(|f| !f.is_found()));
    assert!(matches!(r.dual(), Err(Error::Precondition(_))));
}

#[test]
fn g_prime_inverts_the_dictionary() {
    for s in [S81, S82] {
        let ts = run(s);
        let b = ts.dual().unwrap().b.algebra.clone();
        let bfam = strat_family(&b).unwrap();
        for l in 0..2 {
            assert!(iso(&ts.g_prime_apply(&bfam.costandard[l]).unwrap(), &ts.sn.n[l]));
        }
        let cogen = Module::direct_sum_all(&b, &bfam.objects.injectives);
        let back = ts.g_apply(&ts.g_prime_apply(&cogen).unwrap()).unwrap();
        assert!(iso(&back, &cogen));
    }
}

#[test]
fn hereditary_findim() {
    let ts = run(S81);
    let r = ts.findim(8).unwrap();
    assert_eq!(r.findim, 1);
    let i = Module::direct_sum_all(ts.algebra(), &ts.family.objects.injectives);
    assert_eq!(proj_dim(&i, 8), ProjDim::Finite(1));
}

#[test]
fn codimension_examples() {
    let ts = run(S82);
    let d = ts.dual().unwrap();
    for l in 0..2 {
        assert_eq!(ts.codim_fn(&ts.sn.n[l], 8).unwrap(), Codim::Finite(0));
        assert_eq!(ts.codim_fn(&d.h[l], 8).unwrap(), Codim::Finite(0));
    }
    let p1 = &ts.family.objects.projectives[0];
    assert_eq!(ts.codim_fn(p1, 8).unwrap(), ts.codim_proper_costandard(p1, 8).unwrap());
    let l2 = &ts.family.objects.simples[1];
    assert_eq!(ts.codim_fn(l2, 8).unwrap(), Codim::Undefined);
}

#[test]
fn tensor_fixtures_are_properly_stratified() {
    for s in [S84_SELFINJ, S84_NONSELFINJ] {
        let ts = run(s);
        assert!(classify_family(&ts.family).unwrap().is_properly_stratified);
    }
    assert_eq!(run(S84_SELFINJ).tilting.tilting_is_cotilting().unwrap(), Some(true));
    assert_eq!(run(S84_NONSELFINJ).tilting.tilting_is_cotilting().unwrap(), Some(false));
}

#[test]
fn add_h_membership_matches_ext_vanishing() {
    for s in [S81, S82, S825] {
        let ts = run(s);
        let hs = ts.dual().unwrap().h.clone();
        let fd = ts.findim(16).unwrap().findim;
        let sample: Vec<Module> = ts.sample_finite_pd(8, 5, 8).into_iter().map(|(m, _)| m).collect();
        let mut probes = sample.clone();
        probes.extend(hs.iter().cloned());
        for m in sample.iter().chain(&hs) {
            let vanish = probes.iter().all(|x| (1..=fd.max(1)).all(|i| ext_dim(x, m, i, 16).unwrap() == 0));
            let member = in_add(m, &hs).unwrap();
            assert!(!member || vanish, "add(H) member with nonvanishing Ext");
            if vanish {
                assert!(member, "Ext-injective sample outside add(H), dim {}", m.dim());
            }
        }
    }
}

#[test]
fn opposite_of_the_double_dual_recovers_a() {
    for s in [S81, S82, S825] {
        let ts = run(s);
        let back = ts.opposite_two_step().unwrap();
        let bb = &back.dual().unwrap().b.algebra;
        assert_eq!(bb.dim(), ts.algebra().dim());
        let c = bb.cartan_matrix();
        let transposed: Vec<Vec<usize>> = (0..c.len()).map(|j| c.iter().map(|row| row[j]).collect()).collect();
        assert_eq!(transposed, ts.algebra().cartan_matrix());
        let bb_opp = &back.dual().unwrap().b_opp;
        assert!(crate::presentation::find_arrow_map(&ts.presentation, bb_opp, false, false).is_some());
    }
}

