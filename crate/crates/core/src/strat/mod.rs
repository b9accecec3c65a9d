//! Standard, proper standard, costandard and proper costandard modules,
//! the SSS / properly stratified / quasi-hereditary classification and
//! certified filtrations.

mod filtration;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use filtration::{
    check_certificate, costandard_type_filtration, find_filtration, standard_type_filtration, CertificateJson,
    Filtration, FiltrationCertificate, LayerKind, DEFAULT_BUDGET,
};

use crate::error::Result;
use crate::exactlin::Vector;
use crate::presentation::Algebra;
use crate::repcat::{standard_objects, trace_of_projectives, Module, StandardObjects};

/// The four stratification families of an algebra with its order.
#[derive(Clone, Debug)]
pub struct StratFamily {
    pub algebra: Arc<Algebra>,
    pub opposite: Arc<Algebra>,
    pub objects: StandardObjects,
    pub standard: Vec<Module>,
    pub proper_standard: Vec<Module>,
    pub costandard: Vec<Module>,
    pub proper_costandard: Vec<Module>,
    /// `Tr_{P^{>λ}} P(λ)`, the kernel of `P(λ) -> Δ(λ)`.
    pub standard_kernels: Vec<Module>,
    /// Standard and proper standard modules of the opposite algebra.
    pub opposite_standard: Vec<Module>,
    pub opposite_proper_standard: Vec<Module>,
}

/// `(Δ(λ), K(λ), Δ̄(λ))` for every vertex.
fn standards(a: &Arc<Algebra>) -> Result<(Vec<Module>, Vec<Module>, Vec<Module>)> {
    let nv = a.num_vertices();
    let mut std = Vec::new();
    let mut kernels = Vec::new();
    let mut proper = Vec::new();
    for l in 0..nv {
        let p = Module::projective(a, l);
        let higher: Vec<usize> = (0..nv).filter(|&m| a.less(l, m)).collect();
        let tr = trace_of_projectives(&p, &higher);
        let sq = p.subquotient(&tr)?;
        let d = sq.quotient;
        proper.push(proper_quotient(&d, l)?);
        kernels.push(sq.sub);
        std.push(d);
    }
    Ok((std, kernels, proper))
}

/// `Δ(λ)` modulo the images of its radical endomorphisms. These images are
/// generated by `rad(e_λ A e_λ)` applied to the top generator.
fn proper_quotient(d: &Module, l: usize) -> Result<Module> {
    let alg = d.algebra();
    let gens = d.top_generators();
    let g = &gens[0].1;
    let images: Vec<(usize, Vector)> = (0..alg.dim())
        .filter(|&w| {
            let b = &alg.basis()[w];
            b.source == l && b.target == l && !b.is_trivial()
        })
        .map(|w| (l, d.word_action(w).mul_vec(g)))
        .collect();
    d.quotient(&d.generated(&images))
}

pub fn strat_family(a: &Arc<Algebra>) -> Result<StratFamily> {
    let objects = standard_objects(a)?;
    let opp = Arc::new(a.opposite());
    standard_objects(&opp)?;
    let (standard, standard_kernels, proper_standard) = standards(a)?;
    let (opposite_standard, _, opposite_proper_standard) = standards(&opp)?;
    let costandard = opposite_standard.iter().map(|m| m.dual_over(a.clone())).collect();
    let proper_costandard = opposite_proper_standard.iter().map(|m| m.dual_over(a.clone())).collect();
    Ok(StratFamily {
        algebra: a.clone(),
        opposite: opp,
        objects,
        standard,
        proper_standard,
        costandard,
        proper_costandard,
        standard_kernels,
        opposite_standard,
        opposite_proper_standard,
    })
}

impl StratFamily {
    pub fn num_vertices(&self) -> usize {
        self.algebra.num_vertices()
    }

    fn all(&self) -> Vec<usize> {
        (0..self.num_vertices()).collect()
    }

    pub fn in_standard(&self, m: &Module) -> Filtration {
        standard_type_filtration(m, &self.standard, &self.all(), LayerKind::Standard)
    }

    pub fn in_proper_standard(&self, m: &Module) -> Filtration {
        standard_type_filtration(m, &self.proper_standard, &self.all(), LayerKind::ProperStandard)
    }

    pub fn in_costandard(&self, m: &Module) -> Filtration {
        costandard_type_filtration(m, &self.opposite_standard, &self.all(), LayerKind::Standard)
    }

    pub fn in_proper_costandard(&self, m: &Module) -> Filtration {
        costandard_type_filtration(m, &self.opposite_proper_standard, &self.all(), LayerKind::ProperStandard)
    }

    /// `M ∈ 𝓕({∇̄(μ) | μ ∈ allowed})`.
    pub fn in_proper_costandard_of(&self, m: &Module, allowed: &[usize]) -> Filtration {
        costandard_type_filtration(m, &self.opposite_proper_standard, allowed, LayerKind::ProperStandard)
    }

    pub fn in_standard_of(&self, m: &Module, allowed: &[usize]) -> Filtration {
        standard_type_filtration(m, &self.standard, allowed, LayerKind::Standard)
    }

    pub fn in_proper_standard_of(&self, m: &Module, allowed: &[usize]) -> Filtration {
        standard_type_filtration(m, &self.proper_standard, allowed, LayerKind::ProperStandard)
    }

    pub fn higher(&self, l: usize) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&m| self.algebra.less(l, m)).collect()
    }

    pub fn lower(&self, l: usize) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&m| self.algebra.less(m, l)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub is_sss: bool,
    pub is_properly_stratified: bool,
    pub is_quasi_hereditary: bool,
    /// Per vertex: `K(λ) ∈ 𝓕(Δ^{>λ})`.
    pub ss: Vec<Filtration>,
    /// Per vertex: `Δ(λ) ∈ 𝓕(Δ̄(λ))`.
    pub ps: Vec<Filtration>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub sss: bool,
    pub properly_stratified: bool,
    pub quasi_hereditary: bool,
}

impl Classification {
    pub fn summary(&self) -> ClassificationJson {
        ClassificationJson {
            sss: self.is_sss,
            properly_stratified: self.is_properly_stratified,
            quasi_hereditary: self.is_quasi_hereditary,
        }
    }
}

pub fn classify(a: &Arc<Algebra>) -> Result<Classification> {
    classify_family(&strat_family(a)?)
}

pub fn classify_family(fam: &StratFamily) -> Result<Classification> {
    let nv = fam.num_vertices();
    let mut ss = Vec::new();
    let mut ps = Vec::new();
    for l in 0..nv {
        ss.push(fam.in_standard_of(&fam.standard_kernels[l], &fam.higher(l)));
        ps.push(fam.in_proper_standard_of(&fam.standard[l], &[l]));
    }
    let mut is_sss = true;
    for f in &ss {
        is_sss &= f.decided()?;
    }
    let mut ps_holds = true;
    for f in &ps {
        ps_holds &= f.decided()?;
    }
    let qh = (0..nv).all(|l| fam.standard[l].dims() == fam.proper_standard[l].dims());
    Ok(Classification {
        is_sss,
        is_properly_stratified: is_sss && ps_holds,
        is_quasi_hereditary: is_sss && qh,
        ss,
        ps,
    })
}

#[cfg(test)]
mod tests;
