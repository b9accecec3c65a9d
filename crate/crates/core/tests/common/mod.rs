#![allow(dead_code)]

use std::sync::Arc;

use qstrat::presentation::{Algebra, Presentation};
use qstrat::twostep::{two_step, TwoStep};
use rand::seq::SliceRandom;
use rand::Rng;

pub const S81: &str = include_str!("../../../../fixtures/s81_qh.json");
pub const S82: &str = include_str!("../../../../fixtures/s82.json");
pub const S825: &str = include_str!("../../../../fixtures/s825.json");
pub const S84_SELFINJ: &str = include_str!("../../../../fixtures/s84_selfinj.json");
pub const S84_NONSELFINJ: &str = include_str!("../../../../fixtures/s84_nonselfinj.json");
pub const KX2: &str = include_str!("../../../../fixtures/local_kx2.json");
pub const A2: &str = include_str!("../../../../fixtures/a2_hereditary.json");
pub const RAD2: &str = include_str!("../../../../fixtures/local_rad2.json");

pub const FIXTURES: [(&str, &str); 6] = [
    ("s81_qh", S81),
    ("s82", S82),
    ("s825", S825),
    ("s84_selfinj", S84_SELFINJ),
    ("s84_nonselfinj", S84_NONSELFINJ),
    ("local_kx2", KX2),
];

pub fn pres(s: &str) -> Presentation {
    Presentation::from_json_str(s).unwrap()
}

pub fn alg(s: &str) -> Arc<Algebra> {
    Arc::new(Algebra::from_presentation(&pres(s)).unwrap())
}

pub fn run(s: &str) -> TwoStep {
    let p = pres(s);
    two_step(&Arc::new(Algebra::from_presentation(&p).unwrap()), &p).unwrap()
}

pub fn labels(p: &[Vec<String>]) -> Vec<Vec<&str>> {
    p.iter().map(|l| l.iter().map(String::as_str).collect()).collect()
}

fn json(vertices: &[String], arrows: &[(String, usize, usize)], relations: &[Vec<(i64, Vec<&str>)>], order: &[usize]) -> String {
    let q = |s: &str| format!("{s:?}");
    let vs: Vec<String> = vertices.iter().map(|v| q(v)).collect();
    let arr: Vec<String> = arrows
        .iter()
        .map(|(n, s, t)| format!(r#"{{"name":{},"from":{},"to":{}}}"#, q(n), q(&vertices[*s]), q(&vertices[*t])))
        .collect();
    let rel: Vec<String> = relations
        .iter()
        .map(|r| {
            let terms: Vec<String> = r
                .iter()
                .map(|(c, p)| {
                    let p: Vec<String> = p.iter().map(|x| q(x)).collect();
                    format!(r#"{{"coeff":"{c}","path":[{}]}}"#, p.join(","))
                })
                .collect();
            format!("[{}]", terms.join(","))
        })
        .collect();
    let ord: Vec<String> = order.iter().map(|&i| q(&vertices[i])).collect();
    format!(
        r#"{{"field":{{"kind":"Q"}},"vertices":[{}],"arrows":[{}],"relations":[{}],"order":[{}]}}"#,
        vs.join(","),
        arr.join(","),
        rel.join(","),
        ord.join(",")
    )
}

/// Path algebra of a random acyclic quiver on two or three vertices with a
/// random total order.
pub fn random_hereditary<R: Rng>(rng: &mut R) -> Presentation {
    let n = rng.gen_range(2..=3);
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut topo: Vec<usize> = (0..n).collect();
    topo.shuffle(rng);
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let k = if n == 2 { rng.gen_range(1..=2) } else { rng.gen_range(0..=1) };
            for _ in 0..k {
                arrows.push((format!("a{}", arrows.len()), topo[i], topo[j]));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    pres(&json(&vertices, &arrows, &[], &order))
}

/// A random local algebra of dimension at most four.
pub fn random_local<R: Rng>(rng: &mut R) -> Presentation {
    let v = vec!["1".to_string()];
    let x = ("x".to_string(), 0, 0);
    let y = ("y".to_string(), 0, 0);
    match rng.gen_range(0..4) {
        0 => pres(&json(&v, &[], &[], &[0])),
        1 => {
            let n = rng.gen_range(2..=4);
            pres(&json(&v, &[x], &[vec![(1, vec!["x"; n])]], &[0]))
        }
        2 => {
            let rels = [["x", "x"], ["x", "y"], ["y", "x"], ["y", "y"]].map(|p| vec![(1, p.to_vec())]);
            pres(&json(&v, &[x, y], &rels, &[0]))
        }
        _ => {
            let c = rng.gen_range(-2..=2);
            let mut yx = vec![(1, vec!["y", "x"])];
            if c != 0 {
                yx.push((-c, vec!["x", "y"]));
            }
            let rels = vec![vec![(1, vec!["x", "x"])], vec![(1, vec!["y", "y"])], yx];
            pres(&json(&v, &[x, y], &rels, &[0]))
        }
    }
}
