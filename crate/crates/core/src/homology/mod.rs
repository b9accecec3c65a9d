//! Minimal projective resolutions, Ext groups, projective dimension and the
//! Ext-quiver.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};
use crate::presentation::Algebra;
use crate::repcat::{hom_space, Module, ModuleMap};

pub const DEFAULT_CAP: usize = 64;

/// Projective dimension, or a lower bound when the resolution was cut at
/// the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProjDim {
    Finite(usize),
    AtLeast(usize),
}

impl ProjDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            ProjDim::Finite(n) => Some(n),
            ProjDim::AtLeast(_) => None,
        }
    }
}

/// A minimal projective resolution `… -> P_1 -> P_0 -> M -> 0`.
///
/// `differentials[0]` is the augmentation `P_0 -> M` and
/// `differentials[i]` maps `P_i -> P_{i-1}`. `tops[i]` lists the vertices of
/// the indecomposable summands of `P_i`, in the order they appear.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: Module,
    pub terms: Vec<Module>,
    pub tops: Vec<Vec<usize>>,
    pub differentials: Vec<ModuleMap>,
    pub minimal: bool,
    pub truncated_at: Option<usize>,
    /// `Ω^i M` for each computed `i`, with its inclusion into `P_{i-1}`.
    pub syzygies: Vec<(Module, ModuleMap)>,
}

pub fn min_proj_resolution(m: &Module, cap: usize) -> Resolution {
    min_proj_resolution_within(m, cap, usize::MAX)
}

/// As [`min_proj_resolution`], but also cut as soon as a syzygy has
/// dimension above `max_dim`.
pub fn min_proj_resolution_within(m: &Module, cap: usize, max_dim: usize) -> Resolution {
    let mut terms = Vec::new();
    let mut tops = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies = Vec::new();
    let mut cur = m.clone();
    let mut incl = ModuleMap::identity(m);
    let mut truncated_at = None;
    let mut i = 0;
    while !cur.is_zero() {
        if i > cap {
            truncated_at = Some(cap);
            break;
        }
        if i > 0 && cur.dim() > max_dim {
            truncated_at = Some(i - 1);
            break;
        }
        let (p, pi) = cur.projective_cover();
        tops.push(cur.top_generators().iter().map(|(v, _)| *v).collect());
        differentials.push(incl.compose(&pi));
        let sq = p.subquotient(&pi.kernel()).expect("kernel is a submodule");
        syzygies.push((sq.sub.clone(), sq.inclusion.clone()));
        terms.push(p);
        cur = sq.sub;
        incl = sq.inclusion;
        i += 1;
    }
    Resolution { target: m.clone(), terms, tops, differentials, minimal: true, truncated_at, syzygies }
}

/// `Ω M` with its inclusion into the projective cover of `M`.
pub fn syzygy(m: &Module) -> (Module, ModuleMap) {
    let (p, pi) = m.projective_cover();
    let sq = p.subquotient(&pi.kernel()).expect("kernel is a submodule");
    (sq.sub, sq.inclusion)
}

impl Resolution {
    /// Length of the resolution when it terminated.
    pub fn length(&self) -> Option<usize> {
        match self.truncated_at {
            Some(_) => None,
            None => Some(self.terms.len().saturating_sub(1)),
        }
    }

    pub fn proj_dim(&self) -> ProjDim {
        match self.truncated_at {
            Some(c) => ProjDim::AtLeast(c),
            None => ProjDim::Finite(self.terms.len().saturating_sub(1)),
        }
    }

    /// Whether degree `i` of `Hom(P_•, N)` is fully known.
    fn covers(&self, i: usize) -> Result<()> {
        match self.truncated_at {
            Some(c) if i + 1 > c => Err(Error::InsufficientCap { truncated_at: c, needed: i + 1 }),
            _ => Ok(()),
        }
    }

    /// `dim Ext^i(M, N)`.
    pub fn ext_dim(&self, n: &Module, i: usize) -> Result<usize> {
        self.covers(i)?;
        if i >= self.terms.len() {
            return Ok(0);
        }
        let alg = n.algebra();
        let hom_i: usize = self.tops[i].iter().map(|&l| n.dims()[l]).sum();
        let out = if i + 1 < self.terms.len() { self.pullback(i + 1, n, alg).rank() } else { 0 };
        let inc = if i >= 1 { self.pullback(i, n, alg).rank() } else { 0 };
        Ok(hom_i - out - inc)
    }

    /// Matrix of `Hom(P_{i-1}, N) -> Hom(P_i, N)`, `φ ↦ φ ∘ d_i`, in the
    /// coordinates given by images of the generators.
    fn pullback(&self, i: usize, n: &Module, alg: &Arc<Algebra>) -> Matrix {
        let f = n.field();
        let src = &self.tops[i];
        let dst = &self.tops[i - 1];
        let nd = n.dims();
        let words = n.word_actions();
        // position of (generator, word) in P_{i-1} at each vertex
        let nv = alg.num_vertices();
        let mut index: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for (g, &l) in dst.iter().enumerate() {
            for w in alg.words_from(l) {
                index[alg.basis()[w].target].push((g, w));
            }
        }
        let mut coff = Vec::new();
        let mut cols = 0;
        for &l in dst {
            coff.push(cols);
            cols += nd[l];
        }
        let rows: usize = src.iter().map(|&l| nd[l]).sum();
        let mut mat = Matrix::zeros(f, rows, cols);
        // generator g' of P_i sits at the unit position of its summand
        let mut offset = vec![0usize; nv];
        let mut r0 = 0;
        for &l in src.iter() {
            let ws = alg.words_from(l);
            let unit = alg.unit(l);
            let pos = offset[l] + ws.iter().filter(|&&w| alg.basis()[w].target == l).position(|&w| w == unit).unwrap();
            for &w in &ws {
                offset[alg.basis()[w].target] += 1;
            }
            let x: Vector = self.differentials[i].blocks[l].col(pos);
            for (k, c) in x.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (g, w) = index[l][k];
                let a = &words[w];
                for r in 0..nd[l] {
                    for s in 0..nd[dst[g]] {
                        let v = a.get(r, s);
                        if !v.is_zero() {
                            let cur = mat.get(r0 + r, coff[g] + s).clone();
                            mat.set(r0 + r, coff[g] + s, &cur + &(c * v));
                        }
                    }
                }
            }
            r0 += nd[l];
        }
        mat
    }

    /// Exactness at every computed degree, checked by ranks.
    pub fn is_exact(&self) -> bool {
        for (i, d) in self.differentials.iter().enumerate() {
            let next_rank = self.differentials.get(i + 1).map(ModuleMap::rank);
            let src_dim = self.terms[i].dim();
            let kernel = src_dim - d.rank();
            match next_rank {
                Some(r) if r != kernel => return false,
                None if self.truncated_at.is_none() && kernel != 0 => return false,
                _ => {}
            }
        }
        self.differentials.first().map_or(self.target.is_zero(), |d| d.rank() == self.target.dim())
    }

    /// Every differential of positive degree lands in the radical.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().enumerate().skip(1).all(|(i, d)| self.terms[i - 1].radical().contains_sub(&d.image()))
    }
}

pub fn ext_dim(m: &Module, n: &Module, i: usize, cap: usize) -> Result<usize> {
    min_proj_resolution(m, cap.max(i + 1)).ext_dim(n, i)
}

pub fn proj_dim(m: &Module, cap: usize) -> ProjDim {
    min_proj_resolution(m, cap).proj_dim()
}

/// Injective dimension, via the dual over the opposite algebra.
pub fn inj_dim(m: &Module, cap: usize) -> ProjDim {
    proj_dim(&m.dualize(), cap)
}

/// `dim Ext^1(L(λ), L(μ))` for all vertex pairs.
pub fn ext_quiver(a: &Arc<Algebra>) -> Vec<Vec<usize>> {
    let nv = a.num_vertices();
    (0..nv)
        .map(|l| {
            let r = min_proj_resolution(&Module::simple(a, l), 2);
            (0..nv).map(|m| r.ext_dim(&Module::simple(a, m), 1).unwrap_or(0)).collect()
        })
        .collect()
}

/// Extension data for `Ext^1(X, Y)`: the first syzygy `Ω X ⊂ P_0` and maps
/// `Ω X -> Y` whose classes form a basis of `Ext^1(X, Y)`.
pub struct Ext1Basis {
    pub p0: Module,
    pub omega: Module,
    pub inclusion: ModuleMap,
    pub classes: Vec<ModuleMap>,
}

pub fn ext1_basis(x: &Module, y: &Module) -> Ext1Basis {
    let (p0, pi) = x.projective_cover();
    let sq = p0.subquotient(&pi.kernel()).expect("kernel is a submodule");
    let (omega, inclusion) = (sq.sub, sq.inclusion);
    let f = y.field();
    let hs = hom_space(&omega, y);
    let restricted: Vec<ModuleMap> = hom_space(&p0, y).iter().map(|g| g.compose(&inclusion)).collect();
    let ambient: usize = omega.dims().iter().zip(y.dims()).map(|(a, b)| a * b).sum();
    let mut span = crate::exactlin::Span::new(f, ambient);
    for g in &restricted {
        span.insert(&flat(g));
    }
    let classes = hs.into_iter().filter(|g| span.insert(&flat(g))).collect();
    Ext1Basis { p0, omega, inclusion, classes }
}

fn flat(g: &ModuleMap) -> Vector {
    g.blocks.iter().flat_map(|b| b.flatten()).collect()
}
