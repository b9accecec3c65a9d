use super::*;
use crate::homology::ext_dim;
use crate::presentation::Presentation;
use crate::repcat::Module;
use crate::strat::classify;
use crate::strat::classify_family;
use crate::testing::{alg, labels, A2, KX2, RAD2, S81, S82, S825};

fn data(s: &str) -> (StratFamily, TiltingData, RingelDual) {
    let a = alg(s);
    let fam = strat_family(&a).unwrap();
    let td = tilting_data(&fam).unwrap();
    let rd = ringel_dual(&fam, &td).unwrap();
    (fam, td, rd)
}

#[test]
fn tilting_modules_of_s82() {
    let (fam, td, _) = data(S82);
    let t1 = &td.tilting[0].module;
    assert!(is_isomorphic(t1, &fam.objects.simples[0]).unwrap());
    let t2 = &td.tilting[1];
    assert_eq!(t2.module.dim(), 6);
    assert_eq!(labels(&t2.module.profile()), vec![vec!["1"], vec!["2"], vec!["1", "1"], vec!["2"], vec!["1"]]);
    assert!(is_isomorphic(&t2.module, &fam.objects.projectives[0]).unwrap());
    assert_eq!(t2.standard_certificate.labels, vec![1, 0]);
    assert!(t2.embedding.is_injective());
    assert!(t2.embedding.is_homomorphism(&fam.standard[1], &t2.module));
    assert!(td.cotilting.is_none());
}

#[test]
fn minimal_vertex_gives_standard_module() {
    for s in [S81, S82, S825] {
        let (fam, td, _) = data(s);
        let l = fam.algebra.order()[0];
        assert!(is_isomorphic(&td.tilting[l].module, &fam.standard[l]).unwrap());
    }
}

#[test]
fn tilting_modules_are_self_orthogonal() {
    for s in [S81, S82] {
        let (_, td, _) = data(s);
        let t = td.sum();
        for i in 1..4 {
            assert_eq!(ext_dim(&t, &t, i, 8).unwrap(), 0, "Ext^{i}");
        }
    }
}

#[test]
fn cotilting_modules() {
    let (_, td, _) = data(S81);
    assert_eq!(td.tilting_is_cotilting().unwrap(), Some(true));
    let (fam, td, _) = data(KX2);
    let reg = Module::regular(&fam.algebra);
    assert!(is_isomorphic(&td.sum(), &reg).unwrap());
    assert!(is_isomorphic(&td.cotilting_sum().unwrap(), &reg).unwrap());
    let (fam, _, _) = data(S82);
    assert!(matches!(cotilting_module(&fam, 0), Err(Error::Precondition(_))));
}

#[test]
fn ringel_dual_dimensions() {
    let (_, _, rd) = data(S82);
    assert_eq!(rd.algebra().dim(), 8);
    assert_eq!(rd.algebra().order(), &[1, 0]);
    let c = classify(rd.algebra()).unwrap();
    assert!(c.is_properly_stratified);
    let (_, td, rd) = data(S81);
    assert_eq!(rd.algebra().dim(), 3);
    let t = td.sum();
    assert_eq!(crate::repcat::hom_dim(&t, &t), 3);
}

#[test]
fn functor_dictionary() {
    for s in [S81, S82, S825] {
        let (fam, td, rd) = data(s);
        let rfam = strat_family(rd.algebra()).unwrap();
        for l in 0..fam.num_vertices() {
            let ft = rd.f_apply(&td.tilting[l].module);
            assert!(is_isomorphic(&ft, &rfam.objects.projectives[l]).unwrap());
            let fc = rd.f_apply(&fam.proper_costandard[l]);
            assert!(is_isomorphic(&fc, &rfam.proper_standard[l]).unwrap());
        }
    }
}

#[test]
fn inverse_functor_round_trips() {
    for s in [S81, S82, S825] {
        let (fam, td, rd) = data(s);
        let rfam = strat_family(rd.algebra()).unwrap();
        for l in 0..fam.num_vertices() {
            let t = rd.f_inverse_checked(&rfam.objects.projectives[l]).unwrap();
            assert!(is_isomorphic(&t, &td.tilting[l].module).unwrap());
            let c = rd.f_inverse_checked(&rfam.proper_standard[l]).unwrap();
            assert!(is_isomorphic(&c, &fam.proper_costandard[l]).unwrap());
        }
    }
}

#[test]
fn pulled_back_tilting_module_of_s82() {
    let (_, _, rd) = data(S82);
    let rfam = strat_family(rd.algebra()).unwrap();
    let tr = tilting_module(&rfam, 0).unwrap();
    let h1 = rd.f_inverse_checked(&tr.module).unwrap();
    assert_eq!(h1.dim(), 5);
    assert_eq!(labels(&h1.profile()), vec![vec!["1"], vec!["2"], vec!["1"], vec!["2"], vec!["1"]]);
}

#[test]
fn simple_preserving_dualities() {
    let a = alg(S825);
    let pres = Presentation::from_json_str(S825).unwrap();
    let found = find_simple_preserving_duality(&a, &pres);
    let DualitySearch::Witness { images, matrix } = &found else { panic!("{found:?}") };
    assert!(matrix.mul(matrix).is_identity());
    for l in 0..2 {
        let s = Module::simple(&a, l);
        assert!(is_isomorphic(&duality_image(&s, images).unwrap(), &s).unwrap());
        let p = Module::projective(&a, l);
        assert!(is_isomorphic(&duality_image(&p, images).unwrap(), &Module::injective(&a, l)).unwrap());
    }
    let (_, _, rd) = data(S825);
    let r = find_simple_preserving_duality(rd.algebra(), rd.presentation());
    assert_eq!(r.verdict(), DualityVerdict::RefutedByExt);
    let k = alg(KX2);
    let kp = Presentation::from_json_str(KX2).unwrap();
    assert!(find_simple_preserving_duality(&k, &kp).is_witness());
}

fn tensor_case(b: &str) -> (Arc<Algebra>, Arc<Algebra>, Arc<Algebra>) {
    let (a, b) = (alg(A2), alg(b));
    let d = Arc::new(a.tensor(&b).unwrap());
    (a, b, d)
}

#[test]
fn tensor_laws_for_standard_objects() {
    for bs in [KX2, RAD2] {
        let (a, b, d) = tensor_case(bs);
        let (fa, fb, fd) = (strat_family(&a).unwrap(), strat_family(&b).unwrap(), strat_family(&d).unwrap());
        let c = classify_family(&fd).unwrap();
        assert!(c.is_properly_stratified);
        let pb = &fb.objects.projectives[0];
        let ib = &fb.objects.injectives[0];
        let lb = &fb.objects.simples[0];
        for l in 0..2 {
            let t = |x: &Module, y: &Module| x.tensor(y, &d).unwrap();
            assert!(is_isomorphic(&fd.standard[l], &t(&fa.standard[l], pb)).unwrap());
            assert!(is_isomorphic(&fd.proper_standard[l], &t(&fa.standard[l], lb)).unwrap());
            assert!(is_isomorphic(&fd.costandard[l], &t(&fa.costandard[l], ib)).unwrap());
            assert!(is_isomorphic(&fd.proper_costandard[l], &t(&fa.costandard[l], lb)).unwrap());
        }
    }
}

#[test]
fn tensor_tilting_and_cotilting() {
    for (bs, selfinj) in [(KX2, true), (RAD2, false)] {
        let (a, b, d) = tensor_case(bs);
        assert_eq!(d.dim(), a.dim() * b.dim());
        let (fa, fb, fd) = (strat_family(&a).unwrap(), strat_family(&b).unwrap(), strat_family(&d).unwrap());
        let (ta, td) = (tilting_data(&fa).unwrap(), tilting_data(&fd).unwrap());
        let pb = &fb.objects.projectives[0];
        let ib = &fb.objects.injectives[0];
        for l in 0..2 {
            let tl = &ta.tilting[l].module;
            assert!(is_isomorphic(&td.tilting[l].module, &tl.tensor(pb, &d).unwrap()).unwrap());
            let cl = &td.cotilting.as_ref().unwrap()[l];
            assert!(is_isomorphic(cl, &tl.tensor(ib, &d).unwrap()).unwrap());
        }
        assert_eq!(td.tilting_is_cotilting().unwrap(), Some(selfinj));
    }
}

#[test]
fn tilting_modules_are_indecomposable() {
    for s in [S81, S82, S825, KX2, RAD2, A2] {
        let (_, td, _) = data(s);
        for t in &td.tilting {
            let parts = crate::repcat::decompose(&t.module).unwrap();
            assert_eq!(parts.len(), 1);
            assert_eq!(parts[0].multiplicity, 1);
        }
    }
}
