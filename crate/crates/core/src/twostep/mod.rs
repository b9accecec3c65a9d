//! The modules `S(λ)`, `N(λ)` and `H(λ)`, the two-step dual `B = End_A(H)`,
//! the functors `G = 𝔻 Hom_A(-, H)` and `G′ = Hom_B(G(A), -)`, finitistic
//! dimension and `𝓕(N)`-codimension.

mod nfilt;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use nfilt::n_filtration;

use crate::error::{Error, Result};
use crate::exactlin::{zero_vec, Matrix, Span, Vector};
use crate::homology::{ext_dim, min_proj_resolution_within, proj_dim, syzygy, ProjDim};
use crate::presentation::{Algebra, Presentation};
use crate::repcat::{
    cokernel, hom_space, is_isomorphic, map_from_generators, residue, trace, Module, ModuleMap, Submodule,
};
use crate::strat::{classify, classify_family, strat_family, ClassificationJson, Filtration, FiltrationCertificate, StratFamily};
use crate::tilt::{
    duality_image, find_simple_preserving_duality, ringel_dual, tilting_data, tilting_module, DualitySearch,
    DualityVerdict, EndAlgebra, HomBasis, RingelDual, TiltingData, TiltingModule,
};

/// `0 -> S(λ) -> T(λ) -> N(λ) -> 0` for every `λ`.
#[derive(Clone, Debug)]
pub struct SnData {
    pub s: Vec<Module>,
    pub n: Vec<Module>,
    pub inclusion: Vec<ModuleMap>,
    pub projection: Vec<ModuleMap>,
    /// `S(λ) ∈ 𝓕(∇̄(μ) | μ < λ)`.
    pub s_certificates: Vec<FiltrationCertificate>,
    /// `N(λ) ∈ 𝓕(∇̄(λ))`.
    pub n_certificates: Vec<FiltrationCertificate>,
}

pub fn compute_s_n(fam: &StratFamily, td: &TiltingData) -> Result<SnData> {
    let a = &fam.algebra;
    let ts = td.modules();
    let mut out = SnData {
        s: Vec::new(),
        n: Vec::new(),
        inclusion: Vec::new(),
        projection: Vec::new(),
        s_certificates: Vec::new(),
        n_certificates: Vec::new(),
    };
    for l in 0..fam.num_vertices() {
        let t = &ts[l];
        let lower = fam.lower(l);
        let sub = if lower.is_empty() {
            Submodule::zero(t)
        } else {
            let parts: Vec<Module> = lower.iter().map(|&m| ts[m].clone()).collect();
            trace(&Module::direct_sum_all(a, &parts), t)
        };
        let sq = t.subquotient(&sub)?;
        let name = &a.vertices()[l];
        let sc = fam
            .in_proper_costandard_of(&sq.sub, &lower)
            .found()
            .cloned()
            .ok_or_else(|| Error::Internal(format!("S({name}) has no ∇̄-filtration by lower terms")))?;
        let nc = fam
            .in_proper_costandard_of(&sq.quotient, &[l])
            .found()
            .cloned()
            .ok_or_else(|| Error::Internal(format!("N({name}) is not filtered by ∇̄({name})")))?;
        out.s.push(sq.sub);
        out.n.push(sq.quotient);
        out.inclusion.push(sq.inclusion);
        out.projection.push(sq.projection);
        out.s_certificates.push(sc);
        out.n_certificates.push(nc);
    }
    Ok(out)
}

/// Whether the Ringel dual is properly stratified, decided by `T(λ) ∈ 𝓕(N)`
/// and, independently, by classifying `R`.
#[derive(Clone, Debug)]
pub struct PsTest {
    pub verdict: bool,
    pub tilting_filtrations: Vec<Filtration>,
    pub s_filtrations: Vec<Filtration>,
    pub ringel_classification: ClassificationJson,
}

pub fn ringel_dual_ps_test(td: &TiltingData, sn: &SnData, rd: &RingelDual) -> Result<PsTest> {
    let ts = td.modules();
    let tilting_filtrations =
        ts.iter().map(|t| n_filtration(t, &ts, &sn.n)).collect::<Result<Vec<_>>>()?;
    let s_filtrations = sn.s.iter().map(|s| n_filtration(s, &ts, &sn.n)).collect::<Result<Vec<_>>>()?;
    let verdict = tilting_filtrations.iter().all(Filtration::is_found);
    let by_s = s_filtrations.iter().all(Filtration::is_found);
    let rc = classify(rd.algebra())?;
    if verdict != by_s || verdict != rc.is_properly_stratified {
        return Err(Error::TheoremViolation(format!(
            "T ∈ 𝓕(N): {verdict}, S ∈ 𝓕(N): {by_s}, R properly stratified: {}",
            rc.is_properly_stratified
        )));
    }
    Ok(PsTest { verdict, tilting_filtrations, s_filtrations, ringel_classification: rc.summary() })
}

/// Everything defined when the Ringel dual is properly stratified.
#[derive(Clone, Debug)]
pub struct TwoStepDual {
    pub ringel_family: StratFamily,
    pub ringel_tilting: Vec<TiltingModule>,
    pub h: Vec<Module>,
    /// `H(λ) ∈ 𝓕(∇̄)` with `∇̄(λ)` at the bottom and labels `≥ λ` above.
    pub h_proper_costandard: Vec<FiltrationCertificate>,
    /// `H(λ) ∈ 𝓕(N)` with `N(λ)` at the bottom and labels `> λ` above.
    pub h_n: Vec<FiltrationCertificate>,
    pub b: EndAlgebra,
    pub b_opp: Arc<Algebra>,
    pub b_opp_presentation: Presentation,
    pub b_classification: ClassificationJson,
    pub b_opp_classification: ClassificationJson,
}

#[derive(Clone, Debug)]
pub struct TwoStep {
    pub presentation: Presentation,
    pub family: StratFamily,
    pub tilting: TiltingData,
    pub ringel: RingelDual,
    pub sn: SnData,
    pub ps_test: PsTest,
    pub dual: Option<TwoStepDual>,
}

/// Largest syzygy dimension followed while sampling modules of finite
/// projective dimension.
pub const SAMPLE_DIM_BUDGET: usize = 64;

const NO_H: &str = "H undefined: Ringel dual not properly stratified";

/// Runs the pipeline for the algebra presented by `pres` (same arrows as `a`).
pub fn two_step(a: &Arc<Algebra>, pres: &Presentation) -> Result<TwoStep> {
    let family = strat_family(a)?;
    if !classify_family(&family)?.is_sss {
        return Err(Error::Precondition("the algebra is not standardly stratified".into()));
    }
    let tilting = tilting_data(&family)?;
    let ringel = ringel_dual(&family, &tilting)?;
    let sn = compute_s_n(&family, &tilting)?;
    let ps_test = ringel_dual_ps_test(&tilting, &sn, &ringel)?;
    let dual = if ps_test.verdict { Some(compute_h(&family, &tilting, &sn, &ringel)?) } else { None };
    Ok(TwoStep { presentation: pres.clone(), family, tilting, ringel, sn, ps_test, dual })
}

/// `H(λ) = F⁻¹(T^R(λ))`, its exact sequences, and `B = End_A(H)`.
pub fn compute_h(fam: &StratFamily, td: &TiltingData, sn: &SnData, rd: &RingelDual) -> Result<TwoStepDual> {
    let a = &fam.algebra;
    let ringel_family = strat_family(rd.algebra())?;
    if !classify_family(&ringel_family)?.is_properly_stratified {
        return Err(Error::Precondition(NO_H.into()));
    }
    let ringel_tilting =
        (0..fam.num_vertices()).map(|l| tilting_module(&ringel_family, l)).collect::<Result<Vec<_>>>()?;
    let h = ringel_tilting.iter().map(|t| rd.f_inverse_checked(&t.module)).collect::<Result<Vec<_>>>()?;
    let ts = td.modules();
    let mut h_proper_costandard = Vec::new();
    let mut h_n = Vec::new();
    for (l, hl) in h.iter().enumerate() {
        let name = &a.vertices()[l];
        let c1 = fam
            .in_proper_costandard(hl)
            .found()
            .cloned()
            .filter(|c| c.labels.first() == Some(&l) && c.labels.iter().all(|&m| !a.less(m, l)))
            .ok_or_else(|| Error::TheoremViolation(format!("no sequence ∇̄({name}) -> H({name})")))?;
        let c2 = n_filtration(hl, &ts, &sn.n)?
            .found()
            .cloned()
            .filter(|c| c.labels.first() == Some(&l) && c.labels[1..].iter().all(|&m| a.less(l, m)))
            .ok_or_else(|| Error::TheoremViolation(format!("no sequence N({name}) -> H({name})")))?;
        h_proper_costandard.push(c1);
        h_n.push(c2);
    }
    let b = crate::tilt::endomorphism_algebra(&h, a.vertices().to_vec(), a.order().to_vec())?;
    let b_opp_presentation = b.presentation.opposite();
    let b_opp = Arc::new(Algebra::from_presentation(&b_opp_presentation)?);
    let b_classification = classify(&b.algebra)?.summary();
    let b_opp_classification = classify(&b_opp)?.summary();
    Ok(TwoStepDual {
        ringel_family,
        ringel_tilting,
        h,
        h_proper_costandard,
        h_n,
        b,
        b_opp,
        b_opp_presentation,
        b_classification,
        b_opp_classification,
    })
}

/// Result of [`TwoStep::codim_fn`] and [`TwoStep::codim_proper_costandard`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Codim {
    Finite(usize),
    /// Projective dimension not certified finite.
    Undefined,
    /// No coresolution of length `< searched` ends in the class.
    Unresolved { searched: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FindimReport {
    pub findim: usize,
    pub pd_h: usize,
    pub pd_ringel_tilting: usize,
    pub pd_tilting: Option<usize>,
    pub algebra_duality: DualityVerdict,
    pub ringel_duality: DualityVerdict,
    pub identities: Vec<IdentityCheck>,
    /// `dim Ext^i(H, H°)` for `i = 0..=p.d.(H)+1` when a duality was found.
    pub ext_h_hdual: Option<Vec<usize>>,
    pub unchecked: Vec<String>,
}

impl TwoStep {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.family.algebra
    }

    pub fn dual(&self) -> Result<&TwoStepDual> {
        self.dual.as_ref().ok_or_else(|| Error::Precondition(NO_H.into()))
    }

    pub fn tilting_modules(&self) -> Vec<Module> {
        self.tilting.modules()
    }

    pub fn h_sum(&self) -> Result<Module> {
        Ok(Module::direct_sum_all(self.algebra(), &self.dual()?.h))
    }

    /// `M ∈ 𝓕(N)`.
    pub fn in_fn(&self, m: &Module) -> Result<Filtration> {
        n_filtration(m, &self.tilting_modules(), &self.sn.n)
    }

    /// `G(M) = 𝔻 Hom_A(M, H)` over `B`.
    pub fn g_apply(&self, m: &Module) -> Result<Module> {
        let d = self.dual()?;
        let bases: Vec<HomBasis> = d.h.iter().map(|h| HomBasis::new(m, h)).collect();
        let dims: Vec<usize> = bases.iter().map(HomBasis::dim).collect();
        let f = m.field();
        let arrows = d
            .b
            .algebra
            .arrows()
            .iter()
            .zip(&d.b.arrow_maps)
            .map(|(ar, g)| {
                let (i, j) = (ar.source, ar.target);
                let cols: Vec<Vector> =
                    bases[j].maps.iter().map(|psi| bases[i].coords(&g.compose(psi)).expect("homomorphism")).collect();
                Matrix::from_cols(f, dims[i], &cols).transpose()
            })
            .collect();
        Module::new(d.b.algebra.clone(), dims, arrows)
    }

    /// `G(h)` for `h: M -> N`.
    pub fn g_apply_map(&self, m: &Module, n: &Module, h: &ModuleMap) -> Result<ModuleMap> {
        let d = self.dual()?;
        let f = m.field();
        let blocks = d
            .h
            .iter()
            .map(|x| {
                let bm = HomBasis::new(m, x);
                let bn = HomBasis::new(n, x);
                let cols: Vec<Vector> =
                    bn.maps.iter().map(|psi| bm.coords(&psi.compose(h)).expect("homomorphism")).collect();
                Matrix::from_cols(f, bm.dim(), &cols).transpose()
            })
            .collect();
        Ok(ModuleMap { blocks })
    }

    /// `G′(X) = Hom_B(G(A), X)` over `A`.
    pub fn g_prime_apply(&self, x: &Module) -> Result<Module> {
        let a = self.algebra();
        let f = a.field();
        let nv = a.num_vertices();
        let ps: Vec<Module> = (0..nv).map(|l| Module::projective(a, l)).collect();
        let gps = ps.iter().map(|p| self.g_apply(p)).collect::<Result<Vec<_>>>()?;
        let bases: Vec<HomBasis> = gps.iter().map(|g| HomBasis::new(g, x)).collect();
        let dims: Vec<usize> = bases.iter().map(HomBasis::dim).collect();
        let mut arrows = Vec::new();
        for (ai, ar) in a.arrows().iter().enumerate() {
            let (l, m) = (ar.source, ar.target);
            let r = right_multiplication(a, &ps, ai)?;
            let gr = self.g_apply_map(&ps[m], &ps[l], &r)?;
            let cols: Vec<Vector> =
                bases[l].maps.iter().map(|phi| bases[m].coords(&phi.compose(&gr)).expect("homomorphism")).collect();
            arrows.push(Matrix::from_cols(f, dims[m], &cols));
        }
        Module::new(a.clone(), dims, arrows)
    }

    /// Minimal left `add(H)`-approximation of `M`.
    pub fn left_approximation(&self, m: &Module) -> Result<(Module, ModuleMap)> {
        left_approximation(m, &self.dual()?.h)
    }

    /// `0 -> M -> H_0 -> … -> H_k -> 0` with `H_i ∈ add(H)`, built from
    /// minimal left approximations; `None` after `max_len` steps.
    pub fn add_h_coresolution(&self, m: &Module, max_len: usize) -> Result<Option<Vec<Module>>> {
        let hs = &self.dual()?.h;
        let mut terms = Vec::new();
        let mut cur = m.clone();
        for _ in 0..=max_len {
            if cur.is_zero() {
                return Ok(Some(terms));
            }
            let (t, g) = left_approximation(&cur, hs)?;
            if g.is_iso() {
                terms.push(cur);
                return Ok(Some(terms));
            }
            if !g.is_injective() {
                return Err(Error::Precondition("module is not cogenerated by H".into()));
            }
            cur = cokernel(&g, &t)?.0;
            terms.push(t);
        }
        Ok(None)
    }

    /// `codim_{𝓕(N)}(M)` via cokernels of left `add(H)`-approximations.
    pub fn codim_fn(&self, m: &Module, cap: usize) -> Result<Codim> {
        if proj_dim(m, cap).finite().is_none() {
            return Ok(Codim::Undefined);
        }
        let hs = &self.dual()?.h;
        let mut cur = m.clone();
        for k in 0..=cap {
            if self.in_fn(&cur)?.is_found() {
                return Ok(Codim::Finite(k));
            }
            let (t, g) = left_approximation(&cur, hs)?;
            if !g.is_injective() {
                return Err(Error::TheoremViolation("module of finite p.d. not cogenerated by H".into()));
            }
            cur = cokernel(&g, &t)?.0;
        }
        Ok(Codim::Unresolved { searched: cap + 1 })
    }

    /// `codim_{𝓕(∇̄)}(M)`: the first cosyzygy of a minimal injective
    /// coresolution that is `∇̄`-filtered.
    pub fn codim_proper_costandard(&self, m: &Module, cap: usize) -> Result<Codim> {
        let fam = &self.family;
        if fam.in_proper_costandard(m).is_found() {
            return Ok(Codim::Finite(0));
        }
        let mut omega = m.dual_over(fam.opposite.clone());
        for k in 1..=cap {
            omega = syzygy(&omega).0;
            if fam.in_proper_costandard(&omega.dual_over(fam.algebra.clone())).is_found() {
                return Ok(Codim::Finite(k));
            }
        }
        Ok(Codim::Unresolved { searched: cap })
    }

    /// `fin.dim(A) = p.d.(H)` together with the identities that apply.
    pub fn findim(&self, cap: usize) -> Result<FindimReport> {
        let d = self.dual()?;
        let a = self.algebra();
        let h = self.h_sum()?;
        let pd_h = proj_dim(&h, cap).finite().ok_or_else(|| {
            Error::InsufficientCap { truncated_at: cap, needed: cap + 1 }
        })?;
        let tr = Module::direct_sum_all(
            self.ringel.algebra(),
            &d.ringel_tilting.iter().map(|t| t.module.clone()).collect::<Vec<_>>(),
        );
        let pd_tr = proj_dim(&tr, cap)
            .finite()
            .ok_or_else(|| Error::TheoremViolation("T^R has infinite projective dimension".into()))?;
        let a_dual = find_simple_preserving_duality(a, &self.presentation);
        let r_dual = find_simple_preserving_duality(self.ringel.algebra(), self.ringel.presentation());
        let mut identities = Vec::new();
        let mut unchecked = Vec::new();
        let mut ext_h_hdual = None;
        let mut pd_tilting = None;
        let ps = classify_family(&self.family)?.is_properly_stratified;
        match &a_dual {
            DualitySearch::Witness { images, .. } if ps => {
                identities.push(check("fin.dim(A) = 2 p.d.(T^R)", pd_h, 2 * pd_tr));
                let hd = duality_image(&h, images)?;
                let exts = (0..=pd_h + 1).map(|i| ext_dim(&h, &hd, i, cap.max(pd_h + 2))).collect::<Result<Vec<_>>>()?;
                let top = 2 * pd_tr;
                let nonzero = exts.get(top).is_some_and(|&x| x > 0);
                identities.push(check("Ext^{2b}(H, H°) ≠ 0", usize::from(nonzero), 1));
                let above = exts.iter().skip(top + 1).filter(|&&x| x > 0).count();
                identities.push(check("Ext^{>2b}(H, H°) = 0", above, 0));
                ext_h_hdual = Some(exts);
                if r_dual.is_witness() {
                    let pd_t = proj_dim(&self.tilting.sum(), cap)
                        .finite()
                        .ok_or_else(|| Error::TheoremViolation("T has infinite projective dimension".into()))?;
                    pd_tilting = Some(pd_t);
                    identities.push(check("fin.dim(A) = 2 p.d.(T)", pd_h, 2 * pd_t));
                } else {
                    unchecked.push("fin.dim(A) = 2 p.d.(T): no duality for R".into());
                }
            }
            DualitySearch::Witness { .. } => unchecked.push("duality identities: A not properly stratified".into()),
            DualitySearch::RefutedByExt { .. } => unchecked.push("duality identities: A has no duality".into()),
            DualitySearch::NotFound => unchecked.push("duality identities: search found no duality".into()),
        }
        if let Some(bad) = identities.iter().find(|c| !c.holds) {
            return Err(Error::TheoremViolation(format!("{}: {} vs {}", bad.name, bad.lhs, bad.rhs)));
        }
        Ok(FindimReport {
            findim: pd_h,
            pd_h,
            pd_ringel_tilting: pd_tr,
            pd_tilting,
            algebra_duality: a_dual.verdict(),
            ringel_duality: r_dual.verdict(),
            identities,
            ext_h_hdual,
            unchecked,
        })
    }

    /// Up to `count` pairwise non-isomorphic modules of projective dimension
    /// certified finite (resolutions capped at `cap` and at syzygies of
    /// dimension [`SAMPLE_DIM_BUDGET`]), smallest first. Drawn
    /// deterministically from the standard families, their syzygies and
    /// random sums of these.
    pub fn sample_finite_pd(&self, count: usize, seed: u64, cap: usize) -> Vec<(Module, usize)> {
        let fam = &self.family;
        let mut pool: Vec<Module> = Vec::new();
        pool.extend(fam.objects.projectives.iter().cloned());
        pool.extend(self.tilting_modules());
        pool.extend(self.sn.n.iter().cloned());
        pool.extend(self.sn.s.iter().filter(|s| !s.is_zero()).cloned());
        if let Some(d) = &self.dual {
            pool.extend(d.h.iter().cloned());
        }
        pool.extend(fam.standard.iter().cloned());
        pool.extend(fam.proper_costandard.iter().cloned());
        pool.extend(fam.costandard.iter().cloned());
        pool.extend(fam.proper_standard.iter().cloned());
        pool.extend(fam.objects.simples.iter().cloned());
        pool.extend(fam.objects.injectives.iter().cloned());
        let mut out: Vec<(Module, usize)> = Vec::new();
        let add = |m: &Module, p: usize, out: &mut Vec<(Module, usize)>| {
            if !m.is_zero() && !out.iter().any(|(x, _)| is_isomorphic(x, m).unwrap_or(false)) {
                out.push((m.clone(), p));
            }
        };
        let push = |m: Module, out: &mut Vec<(Module, usize)>| {
            if m.is_zero() {
                return;
            }
            let res = min_proj_resolution_within(&m, cap, SAMPLE_DIM_BUDGET);
            if let ProjDim::Finite(p) = res.proj_dim() {
                add(&m, p, out);
                for (k, (s, _)) in res.syzygies.iter().enumerate() {
                    if k < p {
                        add(s, p - k - 1, out);
                    }
                }
            }
        };
        for m in &pool {
            push(m.clone(), &mut out);
        }
        // Sums start small and grow only when too few are new.
        let mut limit = out.iter().map(|(m, _)| m.dim()).min().unwrap_or(0).max(1) * 2;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut misses = 0;
        while out.len() < count && !out.is_empty() && limit <= SAMPLE_DIM_BUDGET {
            let small: Vec<usize> = (0..out.len()).filter(|&i| out[i].0.dim() < limit).collect();
            let x = &out[small[rng.gen_range(0..small.len())]].0;
            let y = &out[small[rng.gen_range(0..small.len())]].0;
            let before = out.len();
            if x.dim() + y.dim() <= limit {
                let z = x.direct_sum(y);
                push(z, &mut out);
            }
            if out.len() == before {
                misses += 1;
                if misses == 2 * count {
                    misses = 0;
                    limit *= 2;
                }
            }
        }
        out.sort_by_key(|(m, _)| m.dim());
        out.truncate(count);
        out
    }
}

/// One row of the table of `G`-images, checked for every `λ`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GImageRow {
    pub row: String,
    pub holds: Vec<bool>,
}

impl TwoStep {
    /// The pipeline for `B^opp`, presented with the reversed arrows of `B`.
    pub fn opposite_two_step(&self) -> Result<TwoStep> {
        let d = self.dual()?;
        two_step(&d.b_opp, &d.b_opp_presentation)
    }

    /// `G(H) = I^B`, `G(N) = ∇^B`, `G(T) = C^B`, `G(Δ) = 𝔻N^{B^opp}` and
    /// `G(P) = 𝔻H^{B^opp}`.
    pub fn g_images(&self) -> Result<Vec<GImageRow>> {
        let d = self.dual()?;
        let b = &d.b.algebra;
        let bfam = strat_family(b)?;
        let opp = self.opposite_two_step()?;
        let od = opp.dual()?;
        let nv = self.family.num_vertices();
        let down = |m: &Module| m.dual_over(b.clone());
        let mut rows = Vec::new();
        let mut row = |name: &str, src: &dyn Fn(usize) -> Module, dst: &dyn Fn(usize) -> Module| -> Result<()> {
            let holds = (0..nv).map(|l| is_isomorphic(&self.g_apply(&src(l))?, &dst(l))).collect::<Result<Vec<_>>>()?;
            rows.push(GImageRow { row: name.into(), holds });
            Ok(())
        };
        let ts = self.tilting_modules();
        row("G(H) = I", &|l| d.h[l].clone(), &|l| bfam.objects.injectives[l].clone())?;
        row("G(N) = ∇", &|l| self.sn.n[l].clone(), &|l| bfam.costandard[l].clone())?;
        row("G(T) = C", &|l| ts[l].clone(), &|l| down(&opp.tilting.tilting[l].module))?;
        row("G(Δ) = N*", &|l| self.family.standard[l].clone(), &|l| down(&opp.sn.n[l]))?;
        row("G(P) = H*", &|l| self.family.objects.projectives[l].clone(), &|l| down(&od.h[l]))?;
        Ok(rows)
    }
}

fn check(name: &str, lhs: usize, rhs: usize) -> IdentityCheck {
    IdentityCheck { name: name.into(), lhs, rhs, holds: lhs == rhs }
}

/// `P(μ) -> P(λ)`, `x ↦ x·α`, for an arrow `α: λ -> μ`.
fn right_multiplication(a: &Arc<Algebra>, ps: &[Module], arrow: usize) -> Result<ModuleMap> {
    let ar = &a.arrows()[arrow];
    let (l, m) = (ar.source, ar.target);
    let w = a.basis().iter().position(|b| b.letters == [arrow]).expect("arrow word");
    let pos = a.words_from(l).into_iter().filter(|&x| a.basis()[x].target == m && x < w).count();
    let mut v = zero_vec(a.field(), ps[l].dims()[m]);
    v[pos] = a.field().one();
    map_from_generators(&ps[m], &ps[l], &[v])
}

/// Minimal left `add(hs)`-approximation: maps into each `hs[λ]` chosen
/// modulo those factoring through a radical map between summands.
pub fn left_approximation(m: &Module, hs: &[Module]) -> Result<(Module, ModuleMap)> {
    let f = m.field();
    let homs: Vec<HomBasis> = hs.iter().map(|h| HomBasis::new(m, h)).collect();
    let mut chosen: Vec<ModuleMap> = Vec::new();
    let mut targets: Vec<Module> = Vec::new();
    for (l, hl) in hs.iter().enumerate() {
        let len: usize = m.dims().iter().zip(hl.dims()).map(|(a, b)| a * b).sum();
        let mut span = Span::new(f, len);
        for (mu, hm) in hs.iter().enumerate() {
            for g in radical_maps(hm, hl, mu == l)? {
                for psi in &homs[mu].maps {
                    span.insert(&flat(&g.compose(psi)));
                }
            }
        }
        for psi in &homs[l].maps {
            if span.insert(&flat(psi)) {
                chosen.push(psi.clone());
                targets.push(hl.clone());
            }
        }
    }
    let t = Module::direct_sum_all(m.algebra(), &targets);
    Ok((t, ModuleMap::stacked(&chosen, m)))
}

fn radical_maps(x: &Module, y: &Module, same: bool) -> Result<Vec<ModuleMap>> {
    let hs = hom_space(x, y);
    if !same {
        return Ok(hs);
    }
    let mut out = Vec::new();
    for g in hs {
        let r = residue(&g).ok_or_else(|| Error::EnlargeField("endomorphism without eigenvalue".into()))?;
        let g = g.sub(&ModuleMap::identity(x).scale(&r));
        if !g.is_zero() {
            out.push(g);
        }
    }
    Ok(out)
}

fn flat(g: &ModuleMap) -> Vector {
    g.blocks.iter().flat_map(|b| b.flatten()).collect()
}

/// Whether every indecomposable summand of `M` is isomorphic to some `hs[λ]`.
pub fn in_add(m: &Module, hs: &[Module]) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    Ok(left_approximation(m, hs)?.1.is_iso())
}

#[cfg(test)]
mod tests;
