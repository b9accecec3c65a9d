use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Vector};

use super::module::{Module, ModuleMap, Submodule};

/// Projective presentation data: top generators `g_i ∈ M_{λ_i}`, the cover
/// `⊕ P(λ_i) -> M`, generators of its kernel and a linear section.
#[derive(Debug)]
pub(crate) struct Cover {
    pub gens: Vec<(usize, Vector)>,
    /// Per vertex `t`: the cover basis `(generator, algebra basis word)`.
    pub index: Vec<Vec<(usize, usize)>>,
    /// Per vertex: `dims[t] x |index[t]|`.
    pub pi: Vec<Matrix>,
    /// Kernel generators `(t, vector over index[t])`.
    pub relations: Vec<(usize, Vector)>,
    /// Per vertex: `|index[t]| x dims[t]` with `pi · section = 1`.
    pub section: Vec<Matrix>,
}

impl Module {
    pub(crate) fn cover_data(&self) -> Arc<Cover> {
        self.cover.get_or_init(|| Arc::new(build_cover(self))).clone()
    }

    /// Top generators: a basis of a complement of `rad M` at each vertex.
    pub fn top_generators(&self) -> Vec<(usize, Vector)> {
        self.cover_data().gens.clone()
    }

    /// The projective cover `⊕ P(λ_i)` and the covering map.
    pub fn projective_cover(&self) -> (Module, ModuleMap) {
        let c = self.cover_data();
        let alg = self.algebra();
        let ps: Vec<Module> = c.gens.iter().map(|(l, _)| Module::projective(alg, *l)).collect();
        (Module::direct_sum_all(alg, &ps), ModuleMap { blocks: c.pi.clone() })
    }
}

fn build_cover(m: &Module) -> Cover {
    let alg = m.algebra();
    let f = m.field();
    let nv = alg.num_vertices();
    let rad = m.radical();
    let mut gens = Vec::new();
    for v in 0..nv {
        for j in rad.span(v).complement_std() {
            let mut e = crate::exactlin::zero_vec(f, m.dims()[v]);
            e[j] = f.one();
            gens.push((v, e));
        }
    }
    let words = m.word_actions();
    let mut index: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for (i, (l, _)) in gens.iter().enumerate() {
        for w in alg.words_from(*l) {
            index[alg.basis()[w].target].push((i, w));
        }
    }
    let pi: Vec<Matrix> = (0..nv)
        .map(|t| {
            let cols: Vec<Vector> = index[t].iter().map(|&(i, w)| words[w].mul_vec(&gens[i].1)).collect();
            Matrix::from_cols(f, m.dims()[t], &cols)
        })
        .collect();
    // kernel as a submodule of the cover, then its top
    let ps: Vec<Module> = gens.iter().map(|(l, _)| Module::projective(alg, *l)).collect();
    let cover = Module::direct_sum_all(alg, &ps);
    let kernel = ModuleMap { blocks: pi.clone() }.kernel();
    let krad = cover.arrow_image(&kernel);
    let mut relations = Vec::new();
    for t in 0..nv {
        let mut s = krad.span(t).clone();
        for x in kernel.basis(t) {
            if s.insert(x) {
                relations.push((t, x.clone()));
            }
        }
    }
    let section = pi
        .iter()
        .map(|p| {
            let mut sec = Matrix::zeros(f, p.cols(), p.rows());
            for j in 0..p.rows() {
                let mut e = crate::exactlin::zero_vec(f, p.rows());
                e[j] = f.one();
                let x = p.solve(&e).expect("shapes agree").expect("cover is surjective");
                for (i, xi) in x.into_iter().enumerate() {
                    sec.set(i, j, xi);
                }
            }
            sec
        })
        .collect();
    Cover { gens, index, pi, relations, section }
}

/// Basis of `Hom_A(M, N)`.
pub fn hom_space(m: &Module, n: &Module) -> Vec<ModuleMap> {
    assert!(m.same_algebra(n), "hom between modules over different algebras");
    let c = m.cover_data();
    let f = m.field();
    let nw = n.word_actions();
    let nd = n.dims();
    let mut offs = Vec::with_capacity(c.gens.len());
    let mut unknowns = 0;
    for (l, _) in &c.gens {
        offs.push(unknowns);
        unknowns += nd[*l];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let mut eq = Matrix::zeros(f, 0, unknowns);
    for (t, x) in &c.relations {
        let mut block = Matrix::zeros(f, nd[*t], unknowns);
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            let (i, w) = c.index[*t][k];
            let l = c.gens[i].0;
            let a = &nw[w];
            for r in 0..nd[*t] {
                for s in 0..nd[l] {
                    let v = a.get(r, s);
                    if !v.is_zero() {
                        let cur = block.get(r, offs[i] + s).clone();
                        block.set(r, offs[i] + s, &cur + &(xk * v));
                    }
                }
            }
        }
        eq = eq.vstack(&block);
    }
    let sols: Vec<Vector> = if eq.rows() == 0 {
        (0..unknowns)
            .map(|j| {
                let mut e = crate::exactlin::zero_vec(f, unknowns);
                e[j] = f.one();
                e
            })
            .collect()
    } else {
        eq.kernel_basis()
    };
    sols.iter().map(|s| map_from_generator_images(m, n, &c, &offs, s)).collect()
}

fn map_from_generator_images(m: &Module, n: &Module, c: &Cover, offs: &[usize], sol: &[crate::exactlin::Scalar]) -> ModuleMap {
    let f = m.field();
    let nw = n.word_actions();
    let nd = n.dims();
    let blocks = (0..nd.len())
        .map(|t| {
            let cols: Vec<Vector> = c.index[t]
                .iter()
                .map(|&(i, w)| {
                    let l = c.gens[i].0;
                    nw[w].mul_vec(&sol[offs[i]..offs[i] + nd[l]])
                })
                .collect();
            let y = Matrix::from_cols(f, nd[t], &cols);
            y.mul(&c.section[t])
        })
        .collect();
    ModuleMap { blocks }
}

/// The unique homomorphism sending each top generator of `M` to the given
/// element of `N`, if it exists.
pub fn map_from_generators(m: &Module, n: &Module, images: &[Vector]) -> Result<ModuleMap> {
    let c = m.cover_data();
    if images.len() != c.gens.len() {
        return Err(Error::Input("one image per generator required".into()));
    }
    let mut offs = Vec::new();
    let mut sol = Vec::new();
    for ((l, _), x) in c.gens.iter().zip(images) {
        offs.push(sol.len());
        if x.len() != n.dims()[*l] {
            return Err(Error::Input("generator image has the wrong degree".into()));
        }
        sol.extend(x.iter().cloned());
    }
    let g = map_from_generator_images(m, n, &c, &offs, &sol);
    if g.is_homomorphism(m, n) {
        Ok(g)
    } else {
        Err(Error::Input("generator images do not define a homomorphism".into()))
    }
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_space(m, n).len()
}

/// `Tr_M(N)`: sum of the images of all homomorphisms `M -> N`.
pub fn trace(m: &Module, n: &Module) -> Submodule {
    let mut acc = Submodule::zero(n);
    for g in hom_space(m, n) {
        acc = acc.sum(&g.image());
    }
    acc
}

/// Trace of `⊕ P(μ)` over the given vertices: the submodule generated by `e_μ N`.
pub fn trace_of_projectives(n: &Module, vertices: &[usize]) -> Submodule {
    let f = n.field();
    let gens: Vec<(usize, Vector)> = vertices
        .iter()
        .flat_map(|&v| {
            (0..n.dims()[v]).map(move |j| {
                let mut e = crate::exactlin::zero_vec(f, n.dims()[v]);
                e[j] = f.one();
                (v, e)
            })
        })
        .collect();
    n.generated(&gens)
}

/// Submodule of `N` spanned by the images of the given maps.
pub fn image_sum(n: &Module, maps: &[ModuleMap]) -> Submodule {
    let mut acc = Submodule::zero(n);
    for g in maps {
        acc = acc.sum(&g.image());
    }
    acc
}

