//! Tilting and cotilting modules, the Ringel dual `R = End_A(T)`, the
//! functor `F = Hom_A(T, -)` with its inverse `T ⊗_R -`, and the search for
//! a simple preserving duality.

mod endo;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use endo::{endomorphism_algebra, EndAlgebra, HomBasis};

use endo::flat;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Span, Vector};
use crate::homology::{ext1_basis, ext_quiver, Ext1Basis};
use crate::presentation::{find_arrow_map, induced_matrix, Algebra, Presentation};
use crate::repcat::{cokernel, hom_space, is_indecomposable, is_isomorphic, pushout, residue, Module, ModuleMap};
use crate::strat::{classify_family, strat_family, FiltrationCertificate, StratFamily};

/// Maximal number of extension sweeps in [`tilting_module`].
pub const MAX_ROUNDS: usize = 64;

/// `T(λ)` with its defining sequence `0 -> Δ(λ) -> T(λ) -> Coker -> 0`.
#[derive(Clone, Debug)]
pub struct TiltingModule {
    pub vertex: usize,
    pub module: Module,
    pub embedding: ModuleMap,
    pub cokernel: Module,
    pub cokernel_certificate: FiltrationCertificate,
    pub standard_certificate: FiltrationCertificate,
    pub proper_costandard_certificate: FiltrationCertificate,
}

#[derive(Clone, Debug)]
pub struct TiltingData {
    pub tilting: Vec<TiltingModule>,
    pub cotilting: Option<Vec<Module>>,
}

impl TiltingData {
    pub fn modules(&self) -> Vec<Module> {
        self.tilting.iter().map(|t| t.module.clone()).collect()
    }

    pub fn sum(&self) -> Module {
        let ms = self.modules();
        Module::direct_sum_all(ms[0].algebra(), &ms)
    }

    pub fn cotilting_sum(&self) -> Option<Module> {
        let cs = self.cotilting.as_ref()?;
        Some(Module::direct_sum_all(cs[0].algebra(), cs))
    }

    /// `T(λ) ≅ C(λ)` for every `λ`; `None` without cotilting modules.
    pub fn tilting_is_cotilting(&self) -> Result<Option<bool>> {
        let Some(cs) = &self.cotilting else { return Ok(None) };
        for (t, c) in self.tilting.iter().zip(cs) {
            if !is_isomorphic(&t.module, c)? {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    }
}

fn block_diagonal(maps: &[ModuleMap]) -> ModuleMap {
    let mut blocks = maps[0].blocks.clone();
    for g in &maps[1..] {
        for (b, o) in blocks.iter_mut().zip(&g.blocks) {
            *b = b.direct_sum(o);
        }
    }
    ModuleMap { blocks }
}

/// Classes generating `Ext¹(Y, X)` as a right `End(Y)`-module, for `Y`
/// with simple top: a basis of a complement of `Ext¹(Y, X)·rad End(Y)`.
pub fn ext1_generators(y: &Module, x: &Module) -> Result<Ext1Basis> {
    let mut e = ext1_basis(y, x);
    if e.classes.len() <= 1 && y.top_dims().iter().sum::<usize>() == 1 {
        return Ok(e);
    }
    if y.top_dims().iter().sum::<usize>() != 1 {
        return Err(Error::Input("universal extensions need a module with simple top".into()));
    }
    let f = x.field();
    let inc = &e.inclusion;
    let (_, proj) = cokernel(inc, &e.p0)?;
    let endos = hom_space(&e.p0, &e.p0);
    let rows: Vec<Vector> = endos.iter().map(|g| flat(&proj.compose(g).compose(inc))).collect();
    let len = rows.first().map_or(0, Vec::len);
    let cons = Matrix::from_cols(f, len, &rows);
    let mut radical_lifts = Vec::new();
    for t in cons.kernel_basis() {
        let mut g = ModuleMap::zero(&e.p0, &e.p0);
        for (c, h) in t.iter().zip(&endos) {
            if !c.is_zero() {
                g.add_scaled(c, h);
            }
        }
        let r = residue(&g).ok_or_else(|| Error::EnlargeField("endomorphism without eigenvalue".into()))?;
        let g = g.sub(&ModuleMap::identity(&e.p0).scale(&r));
        if !g.is_zero() {
            radical_lifts.push(restrict_to(&g, inc, &e.omega)?);
        }
    }
    let ambient: usize = e.omega.dims().iter().zip(x.dims()).map(|(a, b)| a * b).sum();
    let mut span = Span::new(f, ambient);
    for g in hom_space(&e.p0, x) {
        span.insert(&flat(&g.compose(inc)));
    }
    for c in &e.classes {
        for r in &radical_lifts {
            span.insert(&flat(&c.compose(r)));
        }
    }
    e.classes.retain(|c| span.insert(&flat(c)));
    Ok(e)
}

/// `g|_Ω : Ω -> Ω` for `g: P -> P` preserving the image of `inc: Ω -> P`.
fn restrict_to(g: &ModuleMap, inc: &ModuleMap, omega: &Module) -> Result<ModuleMap> {
    let f = omega.field();
    let blocks = (0..omega.dims().len())
        .map(|v| {
            let target = g.blocks[v].mul(&inc.blocks[v]);
            let cols = (0..target.cols())
                .map(|j| {
                    inc.blocks[v]
                        .solve(&target.col(j))?
                        .ok_or_else(|| Error::Internal("endomorphism does not preserve the syzygy".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_cols(f, omega.dims()[v], &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ModuleMap { blocks })
}

/// Universal extension `0 -> X -> E -> Y^k -> 0`, `k` the number of
/// generators of `Ext¹(Y, X)` over `End(Y)`.
pub fn universal_extension(y: &Module, x: &Module) -> Result<Option<(Module, ModuleMap)>> {
    let e = ext1_generators(y, x)?;
    let k = e.classes.len();
    if k == 0 {
        return Ok(None);
    }
    let omega_k = e.omega.power(k);
    let p0_k = e.p0.power(k);
    let f = ModuleMap::joined(&e.classes, x);
    let g = block_diagonal(&vec![e.inclusion.clone(); k]);
    let (ext, ix, _) = pushout(&f, x, &g, &p0_k, &omega_k)?;
    Ok(Some((ext, ix)))
}

/// `T(λ)` by iterated universal extensions of `Δ(λ)` by `Δ(μ)`, `μ < λ`
/// taken in descending order.
pub fn tilting_module(fam: &StratFamily, l: usize) -> Result<TiltingModule> {
    let a = &fam.algebra;
    let mut lower = fam.lower(l);
    lower.sort_by_key(|&m| std::cmp::Reverse(a.rank_of(m)));
    let mut x = fam.standard[l].clone();
    let mut emb = ModuleMap::identity(&x);
    let mut done = false;
    for _ in 0..MAX_ROUNDS {
        let mut changed = false;
        for &m in &lower {
            if let Some((e, ix)) = universal_extension(&fam.standard[m], &x)? {
                emb = ix.compose(&emb);
                x = e;
                changed = true;
            }
        }
        if !changed {
            done = true;
            break;
        }
    }
    if !done {
        return Err(Error::Undecided(format!("T({}) not reached after {MAX_ROUNDS} rounds", a.vertices()[l])));
    }
    for d in &fam.standard {
        if !ext1_basis(d, &x).classes.is_empty() {
            return Err(Error::Precondition(format!("Ext¹(Δ, T({})) ≠ 0: not standardly stratified", a.vertices()[l])));
        }
    }
    let sq = x.subquotient(&emb.image())?;
    let cokernel = sq.quotient;
    let cokernel_certificate = fam
        .in_standard(&cokernel)
        .found()
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("cokernel for T({}) not Δ-filtered", a.vertices()[l])))?;
    let standard_certificate = fam.in_standard(&x).found().cloned().ok_or_else(|| {
        Error::Internal(format!("T({}) not Δ-filtered", a.vertices()[l]))
    })?;
    let proper_costandard_certificate = fam.in_proper_costandard(&x).found().cloned().ok_or_else(|| {
        Error::Precondition(format!("T({}) not ∇̄-filtered: not standardly stratified", a.vertices()[l]))
    })?;
    if !is_indecomposable(&x) {
        return Err(Error::Internal(format!("T({}) is decomposable", a.vertices()[l])));
    }
    Ok(TiltingModule {
        vertex: l,
        module: x,
        embedding: emb,
        cokernel,
        cokernel_certificate,
        standard_certificate,
        proper_costandard_certificate,
    })
}

/// `C(λ) = 𝔻 T^{opp}(λ)`, the tilting module of the opposite algebra
/// dualized. Requires a properly stratified algebra.
pub fn cotilting_module(fam: &StratFamily, l: usize) -> Result<Module> {
    if !classify_family(fam)?.is_properly_stratified {
        return Err(Error::Precondition("cotilting modules need a properly stratified algebra".into()));
    }
    let opp = strat_family(&fam.opposite)?;
    cotilting_from_opposite(fam, &opp, l)
}

fn cotilting_from_opposite(fam: &StratFamily, opp: &StratFamily, l: usize) -> Result<Module> {
    let t = tilting_module(opp, l)?;
    Ok(t.module.dual_over(fam.algebra.clone()))
}

/// Every `T(λ)`, and every `C(λ)` when the algebra is properly stratified.
pub fn tilting_data(fam: &StratFamily) -> Result<TiltingData> {
    let tilting = (0..fam.num_vertices()).map(|l| tilting_module(fam, l)).collect::<Result<Vec<_>>>()?;
    let cotilting = if classify_family(fam)?.is_properly_stratified {
        let opp = strat_family(&fam.opposite)?;
        Some((0..fam.num_vertices()).map(|l| cotilting_from_opposite(fam, &opp, l)).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    Ok(TiltingData { tilting, cotilting })
}

/// `R = End_A(T)` with the reversed order, and the functors between
/// `A`-modules and `R`-modules.
#[derive(Clone, Debug)]
pub struct RingelDual {
    pub end: EndAlgebra,
}

pub fn ringel_dual(fam: &StratFamily, tilting: &TiltingData) -> Result<RingelDual> {
    let a = &fam.algebra;
    let mut order = a.order().to_vec();
    order.reverse();
    let end = endomorphism_algebra(&tilting.modules(), a.vertices().to_vec(), order)?;
    Ok(RingelDual { end })
}

impl RingelDual {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.end.algebra
    }

    pub fn presentation(&self) -> &Presentation {
        &self.end.presentation
    }

    /// `F(M) = Hom_A(T, M)`.
    pub fn f_apply(&self, m: &Module) -> Module {
        self.end.hom_from(m)
    }

    pub fn f_apply_map(&self, m: &Module, n: &Module, g: &ModuleMap) -> ModuleMap {
        self.end.hom_from_map(m, n, g)
    }

    /// `F⁻¹(X) = T ⊗_R X`.
    pub fn f_inverse_apply(&self, x: &Module) -> Result<Module> {
        self.end.tensor_with(x)
    }

    /// [`RingelDual::f_inverse_apply`] followed by the check `F(F⁻¹ X) ≅ X`.
    pub fn f_inverse_checked(&self, x: &Module) -> Result<Module> {
        let m = self.f_inverse_apply(x)?;
        if !is_isomorphic(&self.f_apply(&m), x)? {
            return Err(Error::Precondition("F(F⁻¹(X)) ≇ X: X is not ∆̄-filtered over R".into()));
        }
        Ok(m)
    }
}

/// Outcome of [`find_simple_preserving_duality`].
#[derive(Clone, Debug)]
pub enum DualitySearch {
    /// Images of the arrows under an idempotent-fixing involutive
    /// anti-automorphism, and its matrix on the basis.
    Witness { images: Vec<Vector>, matrix: Matrix },
    /// The Ext-quiver is not symmetric.
    RefutedByExt { ext: Vec<Vec<usize>> },
    NotFound,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum DualityVerdict {
    Witness,
    RefutedByExt,
    NotFound,
}

impl DualitySearch {
    pub fn verdict(&self) -> DualityVerdict {
        match self {
            DualitySearch::Witness { .. } => DualityVerdict::Witness,
            DualitySearch::RefutedByExt { .. } => DualityVerdict::RefutedByExt,
            DualitySearch::NotFound => DualityVerdict::NotFound,
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, DualitySearch::Witness { .. })
    }
}

/// `pres` must present `a` with the same arrows.
pub fn find_simple_preserving_duality(a: &Arc<Algebra>, pres: &Presentation) -> DualitySearch {
    let ext = ext_quiver(a);
    let n = ext.len();
    if (0..n).any(|i| (0..n).any(|j| ext[i][j] != ext[j][i])) {
        return DualitySearch::RefutedByExt { ext };
    }
    match find_arrow_map(pres, a, true, true) {
        Some(images) => {
            let matrix = induced_matrix(a, &images, true);
            DualitySearch::Witness { images, matrix }
        }
        None => DualitySearch::NotFound,
    }
}

/// `M°`: the dual `𝔻M` made into an `A`-module through the
/// anti-automorphism with the given arrow images.
pub fn duality_image(m: &Module, images: &[Vector]) -> Result<Module> {
    let a = m.algebra().clone();
    let d = m.dualize();
    let w = d.word_actions();
    let f = m.field();
    let arrows = a
        .arrows()
        .iter()
        .zip(images)
        .map(|(ar, x)| {
            let mut acc = Matrix::zeros(f, m.dims()[ar.target], m.dims()[ar.source]);
            for (k, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    acc.add_scaled(c, &w[k]);
                }
            }
            acc
        })
        .collect();
    Module::new(a, m.dims().to_vec(), arrows)
}

#[cfg(test)]
mod tests;
