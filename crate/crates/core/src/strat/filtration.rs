//! Filtrations with explicit submodule chains.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{zero_vec, Span, Vector};
use crate::repcat::{hom_space, is_isomorphic, Module, ModuleMap, Submodule, DEFAULT_SEED};

pub const DEFAULT_BUDGET: usize = 10_000;

/// `0 = M_0 ⊂ M_1 ⊂ … ⊂ M_k = M` with `M_i / M_{i-1}` isomorphic to
/// `family[labels[i-1]]`.
#[derive(Clone, Debug)]
pub struct FiltrationCertificate {
    pub chain: Vec<Submodule>,
    pub labels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub layers: Vec<String>,
    pub dims: Vec<Vec<usize>>,
}

impl FiltrationCertificate {
    pub fn empty(m: &Module) -> FiltrationCertificate {
        FiltrationCertificate { chain: vec![Submodule::zero(m)], labels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Multiplicity of each family member among the layers.
    pub fn multiplicities(&self, family_len: usize) -> Vec<usize> {
        let mut m = vec![0; family_len];
        for &l in &self.labels {
            m[l] += 1;
        }
        m
    }

    pub fn to_json(&self, names: &[String]) -> CertificateJson {
        CertificateJson {
            layers: self.labels.iter().map(|&l| names[l].clone()).collect(),
            dims: self.chain.iter().map(Submodule::dims).collect(),
        }
    }

    pub fn push(&mut self, s: Submodule, label: usize) {
        self.chain.push(s);
        self.labels.push(label);
    }
}

/// Result of a membership test for `𝓕(𝒞)`.
#[derive(Clone, Debug)]
pub enum Filtration {
    Found(FiltrationCertificate),
    /// Non-membership, with the obstruction that proves it.
    Absent(String),
    Undecided(String),
}

impl Filtration {
    pub fn found(&self) -> Option<&FiltrationCertificate> {
        match self {
            Filtration::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Filtration::Found(_))
    }

    /// Membership as a boolean; undecided outcomes become errors.
    pub fn decided(&self) -> Result<bool> {
        match self {
            Filtration::Found(_) => Ok(true),
            Filtration::Absent(_) => Ok(false),
            Filtration::Undecided(why) => Err(Error::Undecided(why.clone())),
        }
    }
}

/// Independent check: the chain is increasing, ends at `M`, every member is
/// a submodule and every layer is isomorphic to its label.
pub fn check_certificate(m: &Module, family: &[Module], cert: &FiltrationCertificate) -> Result<bool> {
    if cert.chain.len() != cert.labels.len() + 1 || !cert.chain[0].is_zero() {
        return Ok(false);
    }
    if !cert.chain.last().unwrap().same_as(&Submodule::whole(m)) {
        return Ok(false);
    }
    for (i, &l) in cert.labels.iter().enumerate() {
        let (lo, hi) = (&cert.chain[i], &cert.chain[i + 1]);
        if !m.is_stable(lo) || !m.is_stable(hi) || !hi.contains_sub(lo) {
            return Ok(false);
        }
        let layer = m.submodule(hi)?;
        let inner = restrict(m, hi, lo);
        let q = layer.quotient(&inner)?;
        if !is_isomorphic(&q, &family[l])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `lo ⊂ hi ⊂ M` expressed in the coordinates of `hi` as a module.
pub(crate) fn restrict(m: &Module, hi: &Submodule, lo: &Submodule) -> Submodule {
    let f = m.field();
    let spans = (0..m.dims().len())
        .map(|v| {
            let coords: Vec<Vector> =
                lo.basis(v).iter().map(|x| hi.span(v).coordinates_in_basis(x).expect("nested")).collect();
            Span::from_vectors(f, hi.dims()[v], &coords)
        })
        .collect();
    Submodule::from_spans(spans)
}

/// Submodule of `M` generated by the image of `sub ⊂ M/floor`, lifted back.
fn lift(floor: &Submodule, q: &Submodule) -> Submodule {
    floor.lift_from_quotient(q)
}

/// Which layer type a family consists of, for the exact deciders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayerKind {
    /// Modules `P(μ)/Tr_{P^{>μ}} P(μ)`.
    Standard,
    /// Quotients of the standard modules by radical endomorphism images.
    ProperStandard,
}

/// Exact test of `M ∈ 𝓕({X(μ) | μ ∈ allowed})` where `X` are the
/// (proper) standard modules of `M`'s algebra, listed by vertex in
/// `layers`. The largest composition factor `μ` of `M` must head a layer,
/// the bottom piece is `A e_μ M` and its dimension decides the question.
pub fn standard_type_filtration(m: &Module, layers: &[Module], allowed: &[usize], kind: LayerKind) -> Filtration {
    let alg = m.algebra().clone();
    let nv = alg.num_vertices();
    let mut floor = Submodule::zero(m);
    let mut cert = FiltrationCertificate::empty(m);
    loop {
        let sq = match m.subquotient(&floor) {
            Ok(sq) => sq,
            Err(e) => return Filtration::Undecided(e.to_string()),
        };
        let cur = sq.quotient;
        if cur.is_zero() {
            return Filtration::Found(cert);
        }
        let mu = *alg.order().iter().rev().find(|&&v| cur.dims()[v] > 0).unwrap();
        if !allowed.contains(&mu) {
            return Filtration::Absent(format!("largest composition factor {} heads no layer", alg.vertices()[mu]));
        }
        let u = crate::repcat::trace_of_projectives(&cur, &[mu]);
        let umod = cur.submodule(&u).expect("trace is a submodule");
        let x = &layers[mu];
        // adapted basis of e_μ U
        let gens: Vec<Vector> = match kind {
            LayerKind::Standard => umod.top_generators().into_iter().filter(|(v, _)| *v == mu).map(|(_, g)| g).collect(),
            LayerKind::ProperStandard => local_series_basis(&umod, mu),
        };
        let k = gens.len();
        let want: Vec<usize> = x.dims().iter().map(|d| d * k).collect();
        if umod.dims() != want.as_slice() {
            return Filtration::Absent(format!(
                "A e_{} M has dimension vector {:?}, expected {:?}",
                alg.vertices()[mu],
                umod.dims(),
                want
            ));
        }
        // chain A·V_1 ⊂ A·V_2 ⊂ … inside U, mapped into M
        let into_cur = |s: &Submodule| -> Submodule {
            let spans = (0..nv)
                .map(|v| {
                    let vecs: Vec<Vector> = s.basis(v).iter().map(|y| sq_inclusion(&u, v, y)).collect();
                    Span::from_vectors(alg.field(), cur.dims()[v], &vecs)
                })
                .collect();
            Submodule::from_spans(spans)
        };
        let mut pieces = Vec::new();
        for i in 1..=k {
            let g: Vec<(usize, Vector)> = gens[..i].iter().map(|v| (mu, v.clone())).collect();
            pieces.push(umod.generated(&g));
        }
        for p in pieces {
            let s = lift(&floor, &into_cur(&p));
            cert.push(s, mu);
        }
        floor = cert.chain.last().unwrap().clone();
    }
}

fn sq_inclusion(u: &Submodule, v: usize, y: &[crate::exactlin::Scalar]) -> Vector {
    let f = u.span(v).field();
    let mut out = zero_vec(f, u.span(v).ambient_dim());
    for (b, c) in u.basis(v).iter().zip(y) {
        crate::exactlin::axpy(&mut out, c, b);
    }
    out
}

/// Basis of `e_μ U` adapted to the radical series of `e_μ U` as a module
/// over `e_μ A e_μ`, deepest layer first.
fn local_series_basis(u: &Module, mu: usize) -> Vec<Vector> {
    let alg = u.algebra();
    let f = u.field();
    let d = u.dims()[mu];
    let loops: Vec<usize> = (0..alg.dim())
        .filter(|&w| {
            let b = &alg.basis()[w];
            b.source == mu && b.target == mu && !b.is_trivial()
        })
        .collect();
    let mut layers: Vec<Span> = Vec::new();
    let mut cur = Span::from_vectors(f, d, &(0..d).map(|j| unit(f, d, j)).collect::<Vec<_>>());
    while cur.rank() > 0 {
        let mut next = Span::new(f, d);
        for x in cur.basis() {
            for &w in &loops {
                next.insert(&u.word_action(w).mul_vec(x));
            }
        }
        layers.push(cur);
        cur = next;
    }
    let mut out = Span::new(f, d);
    let mut basis = Vec::new();
    for s in layers.iter().rev() {
        for x in s.basis() {
            if out.insert(x) {
                basis.push(x.clone());
            }
        }
    }
    basis
}

fn unit(f: crate::exactlin::Field, d: usize, j: usize) -> Vector {
    let mut e = zero_vec(f, d);
    e[j] = f.one();
    e
}

/// The dual statement: `M ∈ 𝓕({𝔻X(μ)})` where `X` are (proper) standard
/// modules of the opposite algebra, decided on `𝔻M`.
pub fn costandard_type_filtration(m: &Module, opp_layers: &[Module], allowed: &[usize], kind: LayerKind) -> Filtration {
    let opp = opp_layers[0].algebra().clone();
    let dm = m.dual_over(opp);
    match standard_type_filtration(&dm, opp_layers, allowed, kind) {
        Filtration::Found(c) => {
            let mut chain: Vec<Submodule> = c.chain.iter().map(Submodule::perp).collect();
            chain.reverse();
            let mut labels = c.labels;
            labels.reverse();
            Filtration::Found(FiltrationCertificate { chain, labels })
        }
        other => other,
    }
}

/// Generic top-down search for a filtration of `M` by the given modules:
/// peel a surjection onto a family member and recurse on its kernel.
/// Non-membership is only reported with a dimension-vector obstruction.
pub fn find_filtration(m: &Module, family: &[Module], budget: usize) -> Filtration {
    if let Some(why) = dimension_obstruction(m, family) {
        return Filtration::Absent(why);
    }
    let mut order: Vec<usize> = (0..family.len()).filter(|&i| !family[i].is_zero()).collect();
    order.sort_by(|&a, &b| family[b].dim().cmp(&family[a].dim()).then(family[a].dims().cmp(family[b].dims())));
    let mut nodes = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    match peel(m, &Submodule::whole(m), family, &order, &mut nodes, budget, &mut rng) {
        Some(chain) => Filtration::Found(chain),
        None if nodes >= budget => Filtration::Undecided(format!("search budget of {budget} nodes exhausted")),
        None => Filtration::Undecided("no filtration found among the candidate surjections".into()),
    }
}

fn dimension_obstruction(m: &Module, family: &[Module]) -> Option<String> {
    let target = m.dims().to_vec();
    let dims: Vec<Vec<usize>> = family.iter().filter(|x| !x.is_zero()).map(|x| x.dims().to_vec()).collect();
    fn reach(t: &[usize], dims: &[Vec<usize>], i: usize) -> bool {
        if t.iter().all(|&x| x == 0) {
            return true;
        }
        if i == dims.len() {
            return false;
        }
        let mut cur = t.to_vec();
        loop {
            if reach(&cur, dims, i + 1) {
                return true;
            }
            if cur.iter().zip(&dims[i]).any(|(a, b)| a < b) {
                return false;
            }
            for (a, b) in cur.iter_mut().zip(&dims[i]) {
                *a -= b;
            }
        }
    }
    if reach(&target, &dims, 0) {
        None
    } else {
        Some(format!("dimension vector {target:?} is not a sum of family dimension vectors"))
    }
}

/// Find a chain for the submodule `top` of `m`; returns a chain from 0 to `top`.
fn peel(
    m: &Module,
    top: &Submodule,
    family: &[Module],
    order: &[usize],
    nodes: &mut usize,
    budget: usize,
    rng: &mut ChaCha8Rng,
) -> Option<FiltrationCertificate> {
    if top.is_zero() {
        return Some(FiltrationCertificate::empty(m));
    }
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let sub = m.submodule(top).ok()?;
    for &i in order {
        let x = &family[i];
        if x.dims().iter().zip(sub.dims()).any(|(a, b)| a > b) {
            continue;
        }
        let hs = hom_space(&sub, x);
        for g in candidate_maps(&hs, rng) {
            if !g.is_surjective() {
                continue;
            }
            let ker = g.kernel();
            // kernel in the coordinates of m
            let spans = (0..m.dims().len())
                .map(|v| {
                    let vecs: Vec<Vector> = ker.basis(v).iter().map(|y| sq_inclusion(top, v, y)).collect();
                    Span::from_vectors(m.field(), m.dims()[v], &vecs)
                })
                .collect();
            let k = Submodule::from_spans(spans);
            if let Some(mut c) = peel(m, &k, family, order, nodes, budget, rng) {
                c.push(top.clone(), i);
                return Some(c);
            }
            if *nodes > budget {
                return None;
            }
        }
    }
    None
}

fn candidate_maps(hs: &[ModuleMap], rng: &mut ChaCha8Rng) -> Vec<ModuleMap> {
    let mut out: Vec<ModuleMap> = hs.to_vec();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            out.push(hs[i].add(&hs[j]));
        }
    }
    if let Some(first) = hs.first() {
        let f = first.blocks.first().map(|b| b.field()).unwrap_or(crate::exactlin::Field::Rationals);
        for _ in 0..8 {
            let mut g = ModuleMap { blocks: first.blocks.iter().map(|b| crate::exactlin::Matrix::zeros(f, b.rows(), b.cols())).collect() };
            for h in hs {
                let c = f.from_i64(rng.gen_range(-3..=3));
                g.add_scaled(&c, h);
            }
            out.push(g);
        }
    }
    out
}
