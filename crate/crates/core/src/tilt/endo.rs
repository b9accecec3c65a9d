//! Endomorphism algebras of basic modules and the functors they carry.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{zero_vec, Matrix, Span, Vector};
use crate::presentation::{AbstractAlgebra, Algebra, Origin, Presentation};
use crate::repcat::{hom_space, Module, ModuleMap};

/// A basis of `Hom(M, N)` in echelon form, with coordinates.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub maps: Vec<ModuleMap>,
    span: Span,
    shapes: Vec<(usize, usize)>,
}

pub(crate) fn flat(g: &ModuleMap) -> Vector {
    g.blocks.iter().flat_map(|b| b.flatten()).collect()
}

impl HomBasis {
    pub fn new(m: &Module, n: &Module) -> HomBasis {
        let f = m.field();
        let shapes: Vec<(usize, usize)> = n.dims().iter().zip(m.dims()).map(|(&r, &c)| (r, c)).collect();
        let len = shapes.iter().map(|(r, c)| r * c).sum();
        let mut span = Span::new(f, len);
        for g in hom_space(m, n) {
            span.insert(&flat(&g));
        }
        let maps = span.basis().iter().map(|v| unflat(f, &shapes, v)).collect();
        HomBasis { maps, span, shapes }
    }

    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// Coordinates of a homomorphism in this basis.
    pub fn coords(&self, g: &ModuleMap) -> Option<Vector> {
        self.span.coordinates_in_basis(&flat(g))
    }

    pub fn combine(&self, c: &[crate::exactlin::Scalar]) -> ModuleMap {
        let f = self.span.field();
        let mut v = zero_vec(f, self.span.ambient_dim());
        for (x, b) in c.iter().zip(self.span.basis()) {
            crate::exactlin::axpy(&mut v, x, b);
        }
        unflat(f, &self.shapes, &v)
    }
}

fn unflat(f: crate::exactlin::Field, shapes: &[(usize, usize)], v: &[crate::exactlin::Scalar]) -> ModuleMap {
    let mut off = 0;
    let blocks = shapes
        .iter()
        .map(|&(r, c)| {
            let b = Matrix::from_flat(f, r, c, v[off..off + r * c].to_vec());
            off += r * c;
            b
        })
        .collect();
    ModuleMap { blocks }
}

/// `End_A(X_1 ⊕ … ⊕ X_n)` for pairwise non-isomorphic indecomposables, with
/// vertex `λ` for `X_λ` and product `x·y = y ∘ x`. An element in
/// `e_j E e_i` is a map `X_j -> X_i`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Arc<Algebra>,
    pub presentation: Presentation,
    pub summands: Vec<Module>,
    /// For each arrow `a: i -> j`, the map `X_j -> X_i` it stands for.
    pub arrow_maps: Vec<ModuleMap>,
}

pub fn endomorphism_algebra(summands: &[Module], vertices: Vec<String>, order: Vec<usize>) -> Result<EndAlgebra> {
    let n = summands.len();
    if n == 0 {
        return Err(Error::Input("no summands".into()));
    }
    let f = summands[0].field();
    let homs: Vec<Vec<HomBasis>> =
        (0..n).map(|s| (0..n).map(|t| HomBasis::new(&summands[s], &summands[t])).collect()).collect();
    // basis elements: (s, t, k) for k-th map X_s -> X_t
    let mut elems: Vec<(usize, usize, usize)> = Vec::new();
    let mut offset = vec![vec![0usize; n]; n];
    for s in 0..n {
        for t in 0..n {
            offset[s][t] = elems.len();
            for k in 0..homs[s][t].dim() {
                elems.push((s, t, k));
            }
        }
    }
    let dim = elems.len();
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for (i, &(si, ti, ki)) in elems.iter().enumerate() {
        for (j, &(sj, tj, kj)) in elems.iter().enumerate() {
            if ti != sj {
                continue;
            }
            let g = homs[sj][tj].maps[kj].compose(&homs[si][ti].maps[ki]);
            let c = homs[si][tj].coords(&g).ok_or_else(|| Error::Internal("composite outside hom space".into()))?;
            mult[i][j] = c
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (offset[si][tj] + k, x))
                .collect();
        }
    }
    let units: Vec<Vector> = (0..n)
        .map(|s| {
            let c = homs[s][s].coords(&ModuleMap::identity(&summands[s])).expect("identity is a homomorphism");
            let mut v = zero_vec(f, dim);
            for (k, x) in c.into_iter().enumerate() {
                v[offset[s][s] + k] = x;
            }
            v
        })
        .collect();
    let abs = AbstractAlgebra {
        field: f,
        vertices,
        order,
        blocks: elems.iter().map(|&(s, t, _)| (t, s)).collect(),
        mult,
        units,
        names: vec![None; dim],
        origin: Origin::Endomorphism,
    };
    let norm = abs.normalize()?;
    let alg = norm.algebra;
    let arrow_maps = (0..alg.arrows().len())
        .map(|a| {
            let w = alg.basis().iter().position(|b| b.letters == [a]).expect("arrow word");
            let coords = &norm.elements[w];
            let ar = &alg.arrows()[a];
            let (s, t) = (ar.target, ar.source);
            let hb = &homs[s][t];
            let c: Vector = (0..hb.dim()).map(|k| coords[offset[s][t] + k].clone()).collect();
            hb.combine(&c)
        })
        .collect();
    Ok(EndAlgebra { algebra: Arc::new(alg), presentation: norm.presentation, summands: summands.to_vec(), arrow_maps })
}

impl EndAlgebra {
    /// `Hom_A(X, M)` as a module over the endomorphism algebra.
    pub fn hom_from(&self, m: &Module) -> Module {
        let f = m.field();
        let bases: Vec<HomBasis> = self.summands.iter().map(|x| HomBasis::new(x, m)).collect();
        let dims: Vec<usize> = bases.iter().map(HomBasis::dim).collect();
        let arrows = self
            .algebra
            .arrows()
            .iter()
            .zip(&self.arrow_maps)
            .map(|(a, g)| {
                let cols: Vec<Vector> = bases[a.source]
                    .maps
                    .iter()
                    .map(|phi| bases[a.target].coords(&phi.compose(g)).expect("composite is a homomorphism"))
                    .collect();
                Matrix::from_cols(f, dims[a.target], &cols)
            })
            .collect();
        Module::new(self.algebra.clone(), dims, arrows).expect("hom functor yields a module")
    }

    /// `Hom_A(X, g)` for `g: M -> N`.
    pub fn hom_from_map(&self, m: &Module, n: &Module, g: &ModuleMap) -> ModuleMap {
        let f = m.field();
        let blocks = self
            .summands
            .iter()
            .map(|x| {
                let bm = HomBasis::new(x, m);
                let bn = HomBasis::new(x, n);
                let cols: Vec<Vector> =
                    bm.maps.iter().map(|phi| bn.coords(&g.compose(phi)).expect("composite is a homomorphism")).collect();
                Matrix::from_cols(f, bn.dim(), &cols)
            })
            .collect();
        ModuleMap { blocks }
    }

    /// `X ⊗_E Y` for a module `Y` over the endomorphism algebra.
    pub fn tensor_with(&self, y: &Module) -> Result<Module> {
        let a = self.summands[0].algebra().clone();
        let f = a.field();
        let nv = a.num_vertices();
        let n = self.summands.len();
        // copies: (λ, k) for k < dim Y_λ
        let copies: Vec<(usize, usize)> = (0..n).flat_map(|l| (0..y.dims()[l]).map(move |k| (l, k))).collect();
        let parts: Vec<Module> = copies.iter().map(|&(l, _)| self.summands[l].clone()).collect();
        let big = Module::direct_sum_all(&a, &parts);
        let mut off = vec![vec![0usize; copies.len()]; nv];
        for (v, row) in off.iter_mut().enumerate() {
            let mut o = 0;
            for (c, &(l, _)) in copies.iter().enumerate() {
                row[c] = o;
                o += self.summands[l].dims()[v];
            }
        }
        let copy_index = |l: usize, k: usize| copies.iter().position(|&c| c == (l, k)).unwrap();
        let mut gens: Vec<(usize, Vector)> = Vec::new();
        for (ai, (ar, g)) in self.algebra.arrows().iter().zip(&self.arrow_maps).enumerate() {
            let (i, j) = (ar.source, ar.target);
            let act = y.arrow(ai);
            for v in 0..nv {
                let dj = self.summands[j].dims()[v];
                for t in 0..dj {
                    let mut tv = zero_vec(f, dj);
                    tv[t] = f.one();
                    let gt = g.blocks[v].mul_vec(&tv);
                    for k in 0..y.dims()[i] {
                        let mut rel = zero_vec(f, big.dims()[v]);
                        // g(t) ⊗ x_k
                        let c = copy_index(i, k);
                        for (p, x) in gt.iter().enumerate() {
                            rel[off[v][c] + p] = x.clone();
                        }
                        // - t ⊗ (a·x_k)
                        for r in 0..y.dims()[j] {
                            let coeff = act.get(r, k);
                            if !coeff.is_zero() {
                                let c2 = copy_index(j, r);
                                let cur = rel[off[v][c2] + t].clone();
                                rel[off[v][c2] + t] = &cur - coeff;
                            }
                        }
                        gens.push((v, rel));
                    }
                }
            }
        }
        let sub = big.generated(&gens);
        big.quotient(&sub)
    }
}
