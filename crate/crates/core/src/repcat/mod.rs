//! Finite-dimensional modules: construction, homomorphisms, radical and
//! socle series, traces, subquotients, decomposition and duality.

mod decomp;
mod hom;
mod module;

use std::sync::Arc;

pub use decomp::{
    decompose, find_isomorphism, indecomposables_isomorphic, is_indecomposable, is_isomorphic, is_isomorphic_seeded,
    multiplicity_in, residue, split_indecomposables, Summand, DEFAULT_SEED,
};
pub use hom::{hom_dim, hom_space, image_sum, map_from_generators, trace, trace_of_projectives};
pub use module::{cokernel, pushout, ArrowMatrixJson, Module, ModuleJson, ModuleMap, Submodule, Subquotient};

use crate::error::{Error, Result};
use crate::presentation::Algebra;

/// `L(λ)`, `P(λ)` and `I(λ)` for every vertex.
#[derive(Clone, Debug)]
pub struct StandardObjects {
    pub simples: Vec<Module>,
    pub projectives: Vec<Module>,
    pub injectives: Vec<Module>,
}

pub fn standard_objects(a: &Arc<Algebra>) -> Result<StandardObjects> {
    let nv = a.num_vertices();
    let projectives: Vec<Module> = (0..nv).map(|l| Module::projective(a, l)).collect();
    for (l, p) in projectives.iter().enumerate() {
        let top = p.top_dims();
        if top.iter().sum::<usize>() != 1 || top[l] != 1 {
            return Err(Error::NonSplitSimple(format!("top of P({}) is not simple", a.vertices()[l])));
        }
    }
    Ok(StandardObjects {
        simples: (0..nv).map(|l| Module::simple(a, l)).collect(),
        injectives: (0..nv).map(|l| Module::injective(a, l)).collect(),
        projectives,
    })
}

pub fn dualize(m: &Module) -> Module {
    m.dualize()
}

/// The module over `opp` dual to `m`, where `opp` is the opposite algebra.
pub fn dualize_over(m: &Module, opp: &Arc<Algebra>) -> Module {
    m.dual_over(opp.clone())
}

#[cfg(test)]
mod tests;
