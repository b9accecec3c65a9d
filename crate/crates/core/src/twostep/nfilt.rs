//! Filtrations by the modules `N(λ)`.

use crate::error::Result;
use crate::exactlin::{axpy, zero_vec, Span, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::Matrix;
use crate::repcat::{find_isomorphism, hom_dim, hom_space, trace, Module, ModuleMap, Submodule, DEFAULT_SEED};
use crate::strat::{Filtration, FiltrationCertificate};

/// Exact test of `M ∈ 𝓕(N)`. Layers are peeled from the bottom: the
/// smallest `ν` with `Hom(T(ν), M) ≠ 0` must head the filtration, and then
/// `Tr_{T(ν)} M ≅ N(ν)^k` is the bottom piece.
pub fn n_filtration(m: &Module, tilting: &[Module], n: &[Module]) -> Result<Filtration> {
    let alg = m.algebra().clone();
    let f = m.field();
    let nv = alg.num_vertices();
    let mut floor = Submodule::zero(m);
    let mut cert = FiltrationCertificate::empty(m);
    loop {
        let cur = m.subquotient(&floor)?.quotient;
        if cur.is_zero() {
            return Ok(Filtration::Found(cert));
        }
        let Some(&nu) = alg.order().iter().find(|&&v| hom_dim(&tilting[v], &cur) > 0) else {
            return Ok(Filtration::Absent("no tilting module maps to the remaining quotient".into()));
        };
        let u = trace(&tilting[nu], &cur);
        let umod = cur.submodule(&u)?;
        let d = n[nu].dim();
        if umod.dim() % d != 0 {
            return Ok(Filtration::Absent(format!("trace of T({}) has dimension {}", alg.vertices()[nu], umod.dim())));
        }
        let k = umod.dim() / d;
        let Some(iso) = random_split(&n[nu], &umod, k).map_or_else(|| find_isomorphism(&n[nu].power(k), &umod, DEFAULT_SEED), |g| Ok(Some(g)))? else {
            return Ok(Filtration::Absent(format!("trace of T({}) is not a sum of N({})", alg.vertices()[nu], alg.vertices()[nu])));
        };
        let mut spans: Vec<Span> = (0..nv).map(|v| Span::new(f, cur.dims()[v])).collect();
        for i in 0..k {
            for (v, span) in spans.iter_mut().enumerate() {
                let dv = n[nu].dims()[v];
                for c in i * dv..(i + 1) * dv {
                    span.insert(&embed(&u, v, &iso.blocks[v].col(c)));
                }
            }
            cert.push(floor.lift_from_quotient(&Submodule::from_spans(spans.clone())), nu);
        }
        floor = cert.chain.last().unwrap().clone();
    }
}

fn embed(u: &Submodule, v: usize, y: &[crate::exactlin::Scalar]) -> Vector {
    let mut out = zero_vec(u.span(v).field(), u.span(v).ambient_dim());
    for (b, c) in u.basis(v).iter().zip(y) {
        axpy(&mut out, c, b);
    }
    out
}

/// A few random attempts at an isomorphism `N^k -> U` assembled from `k`
/// random maps `N -> U`. `None` proves nothing.
fn random_split(n: &Module, u: &Module, k: usize) -> Option<ModuleMap> {
    let f = n.field();
    let homs = hom_space(n, u);
    if homs.len() < k {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..4 {
        let maps: Vec<ModuleMap> = (0..k)
            .map(|_| {
                let mut g = ModuleMap::zero(n, u);
                for h in &homs {
                    g.add_scaled(&f.from_i64(rng.gen_range(-3..=3)), h);
                }
                g
            })
            .collect();
        let blocks = (0..n.dims().len())
            .map(|v| maps.iter().fold(Matrix::zeros(f, u.dims()[v], 0), |acc, g| acc.hstack(&g.blocks[v])))
            .collect();
        let g = ModuleMap { blocks };
        if g.is_iso() {
            return Some(g);
        }
    }
    None
}
