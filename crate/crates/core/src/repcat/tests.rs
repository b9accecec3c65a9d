use super::*;
use crate::testing::{alg, labels, KX2, S81, S82, S825};

#[test]
fn standard_objects_of_s82() {
    let a = alg(S82);
    let so = standard_objects(&a).unwrap();
    let dims: Vec<usize> = so.projectives.iter().map(Module::dim).collect();
    assert_eq!(dims, vec![6, 5]);
    let dims: Vec<usize> = so.injectives.iter().map(Module::dim).collect();
    assert_eq!(dims, vec![7, 4]);
    assert_eq!(labels(&so.projectives[0].profile()), vec![vec!["1"], vec!["2"], vec!["1", "1"], vec!["2"], vec!["1"]]);
    assert_eq!(labels(&so.projectives[1].profile()), vec![vec!["2"], vec!["1", "1"], vec!["2"], vec!["1"]]);
    for m in so.projectives.iter().chain(&so.injectives) {
        m.validate().unwrap();
    }
}

#[test]
fn small_standard_objects() {
    let a = alg(KX2);
    let so = standard_objects(&a).unwrap();
    assert_eq!(so.projectives[0].dim(), 2);
    assert!(is_isomorphic(&so.projectives[0], &so.injectives[0]).unwrap());
    let h = alg(S81);
    let so = standard_objects(&h).unwrap();
    assert_eq!(so.projectives[0].dims(), &[1, 1]);
    assert!(is_isomorphic(&so.projectives[1], &so.simples[1]).unwrap());
}

#[test]
fn cartan_pairing() {
    for s in [S82, S825, S81, KX2] {
        let a = alg(s);
        let so = standard_objects(&a).unwrap();
        let ms: Vec<&Module> = so.projectives.iter().chain(&so.injectives).collect();
        for m in ms {
            for (l, p) in so.projectives.iter().enumerate() {
                assert_eq!(hom_dim(p, m), m.dims()[l]);
            }
        }
    }
    let a = alg(S82);
    let p1 = Module::projective(&a, 0);
    assert_eq!(hom_dim(&p1, &p1), 4);
    assert_eq!(hom_dim(&Module::simple(&a, 0), &Module::simple(&a, 1)), 0);
}

#[test]
fn trace_of_p2_in_p1() {
    let a = alg(S82);
    let p1 = Module::projective(&a, 0);
    let p2 = Module::projective(&a, 1);
    let t = trace(&p2, &p1);
    assert_eq!(t.dims(), vec![3, 2]);
    assert!(t.same_as(&p1.radical()));
    assert!(trace(&p1, &p1).same_as(&Submodule::whole(&p1)));
    assert!(trace(&Module::simple(&a, 0), &Module::simple(&a, 1)).is_zero());
    assert!(trace_of_projectives(&p1, &[1]).same_as(&t));
}

#[test]
fn subquotient_extremes() {
    let a = alg(S82);
    let p = Module::projective(&a, 1);
    assert!(is_isomorphic(&p.quotient(&Submodule::zero(&p)).unwrap(), &p).unwrap());
    assert!(p.quotient(&Submodule::whole(&p)).unwrap().is_zero());
    let sq = p.subquotient(&p.radical()).unwrap();
    assert!(sq.inclusion.is_homomorphism(&sq.sub, &p));
    assert!(sq.projection.is_homomorphism(&p, &sq.quotient));
    assert!(sq.projection.compose(&sq.inclusion).is_zero());
}

#[test]
fn decomposition() {
    let a = alg(S82);
    let l1 = Module::simple(&a, 0);
    let d = decompose(&l1.power(2)).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].multiplicity, 2);
    let reg = Module::regular(&a);
    let d = decompose(&reg).unwrap();
    assert_eq!(d.len(), 2);
    assert!(d.iter().all(|s| s.multiplicity == 1));
    let mut sum = Module::zero(&a);
    for s in &d {
        sum = sum.direct_sum(&s.module.power(s.multiplicity));
    }
    assert!(is_isomorphic(&sum, &reg).unwrap());
    let m = Module::injective(&a, 0).direct_sum(&l1).direct_sum(&Module::projective(&a, 1)).direct_sum(&l1);
    let d = decompose(&m).unwrap();
    assert_eq!(d.iter().map(|s| s.multiplicity).sum::<usize>(), 4);
}

#[test]
fn isomorphism_basics() {
    let a = alg(S825);
    let so = standard_objects(&a).unwrap();
    for m in so.projectives.iter().chain(&so.injectives) {
        assert!(is_isomorphic(m, m).unwrap());
        let g = find_isomorphism(m, m, DEFAULT_SEED).unwrap().unwrap();
        assert!(g.is_iso());
    }
    assert!(!is_isomorphic(&so.simples[0], &so.simples[1]).unwrap());
    assert!(!is_isomorphic(&so.projectives[0], &so.injectives[0]).unwrap());
}

#[test]
fn duality() {
    let a = alg(S825);
    let opp = Arc::new(a.opposite());
    for l in 0..2 {
        let p = Module::projective(&a, l);
        let dp = dualize_over(&p, &opp);
        assert!(is_isomorphic(&dp, &Module::injective(&opp, l)).unwrap());
        let mut sp = dp.socle_layers();
        sp.reverse();
        let mut rl = p.radical_layers();
        rl.reverse();
        assert_eq!(sp.len(), rl.len());
        assert_eq!(dp.socle_layers(), p.radical_layers());
        let l_dual = dualize_over(&Module::simple(&a, l), &opp);
        assert!(is_isomorphic(&l_dual, &Module::simple(&opp, l)).unwrap());
    }
    let ms = [Module::projective(&a, 0), Module::injective(&a, 0), Module::projective(&a, 1)];
    for x in &ms {
        for y in &ms {
            let dx = dualize_over(x, &opp);
            let dy = dualize_over(y, &opp);
            assert_eq!(is_isomorphic(x, y).unwrap(), is_isomorphic(&dx, &dy).unwrap());
        }
    }
    let p = Module::projective(&a, 0);
    let back = dualize_over(&dualize_over(&p, &opp), &a);
    assert!(is_isomorphic(&back, &p).unwrap());
}

#[test]
fn layers_sum_to_dimension_vector() {
    let a = alg(S825);
    for m in [Module::regular(&a), Module::injective(&a, 1)] {
        let mut tot = vec![0; 2];
        for l in m.radical_layers() {
            for (t, x) in tot.iter_mut().zip(l) {
                *t += x;
            }
        }
        assert_eq!(tot, m.dims());
    }
    let s = Module::simple(&a, 0).direct_sum(&Module::simple(&a, 1));
    assert_eq!(s.radical_layers().len(), 1);
}
