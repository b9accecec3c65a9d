use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, zero_vec, Field, Matrix, Span, Vector};
use crate::presentation::Algebra;

use super::hom::Cover;

/// Finite-dimensional left module: one vector space per vertex and one
/// matrix per arrow `a: s -> t`, of shape `dims[t] x dims[s]`.
#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
    words: OnceLock<Arc<Vec<Matrix>>>,
    pub(crate) cover: OnceLock<Arc<Cover>>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module").field("dims", &self.dims).field("arrows", &self.arrows).finish()
    }
}

/// Degreewise linear map between modules over the same algebra; `blocks[v]`
/// has shape `target.dims[v] x source.dims[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub blocks: Vec<Matrix>,
}

/// Graded subspace of a module, one echelon span per vertex.
#[derive(Clone, Debug)]
pub struct Submodule {
    spans: Vec<Span>,
}

/// Serializable form of a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dims: Vec<usize>,
    pub arrows: Vec<ArrowMatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowMatrixJson {
    pub name: String,
    pub rows: Vec<Vec<String>>,
}

/// Quotient coordinates: rows pick out the non-pivot coordinates after
/// reducing modulo `span`.
pub(crate) fn quotient_matrix(span: &Span) -> Matrix {
    let f = span_field(span);
    let d = span.ambient_dim();
    let comp = span.complement_std();
    let mut q = Matrix::zeros(f, comp.len(), d);
    for j in 0..d {
        let mut e = zero_vec(f, d);
        e[j] = f.one();
        let r = span.reduce(&e);
        for (i, &c) in comp.iter().enumerate() {
            q.set(i, j, r[c].clone());
        }
    }
    q
}

fn span_field(span: &Span) -> Field {
    span.field()
}

impl Submodule {
    pub fn zero(m: &Module) -> Submodule {
        let f = m.field();
        Submodule { spans: m.dims.iter().map(|&d| Span::new(f, d)).collect() }
    }

    pub fn whole(m: &Module) -> Submodule {
        let f = m.field();
        let spans = m
            .dims
            .iter()
            .map(|&d| {
                let mut s = Span::new(f, d);
                for j in 0..d {
                    let mut e = zero_vec(f, d);
                    e[j] = f.one();
                    s.insert(&e);
                }
                s
            })
            .collect();
        Submodule { spans }
    }

    pub fn from_spans(spans: Vec<Span>) -> Submodule {
        Submodule { spans }
    }

    pub fn span(&self, v: usize) -> &Span {
        &self.spans[v]
    }

    pub fn basis(&self, v: usize) -> &[Vector] {
        self.spans[v].basis()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spans.iter().map(Span::rank).collect()
    }

    pub fn dim(&self) -> usize {
        self.spans.iter().map(Span::rank).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains(&self, v: usize, x: &[crate::exactlin::Scalar]) -> bool {
        self.spans[v].contains(x)
    }

    pub fn contains_sub(&self, o: &Submodule) -> bool {
        (0..self.spans.len()).all(|v| o.basis(v).iter().all(|x| self.spans[v].contains(x)))
    }

    pub fn sum(&self, o: &Submodule) -> Submodule {
        let mut spans = self.spans.clone();
        for (s, t) in spans.iter_mut().zip(&o.spans) {
            for x in t.basis() {
                s.insert(x);
            }
        }
        Submodule { spans }
    }

    pub fn same_as(&self, o: &Submodule) -> bool {
        self.dims() == o.dims() && self.contains_sub(o)
    }

    /// Orthogonal complement per vertex under the standard pairing of a
    /// module with its dual; a submodule of `𝔻M` yields one of `M`.
    pub fn perp(&self) -> Submodule {
        let spans = self
            .spans
            .iter()
            .map(|s| {
                let f = s.field();
                let d = s.ambient_dim();
                let ker = if s.rank() == 0 {
                    (0..d)
                        .map(|j| {
                            let mut e = zero_vec(f, d);
                            e[j] = f.one();
                            e
                        })
                        .collect()
                } else {
                    Matrix::from_rows(f, s.basis(), d).kernel_basis()
                };
                Span::from_vectors(f, d, &ker)
            })
            .collect();
        Submodule { spans }
    }

    /// Preimage in `M` of a submodule `q` of `M/self`, where the quotient
    /// uses the coordinates produced by `Module::subquotient`.
    pub fn lift_from_quotient(&self, q: &Submodule) -> Submodule {
        let mut spans = self.spans.clone();
        for (v, s) in spans.iter_mut().enumerate() {
            let comp = self.spans[v].complement_std();
            let f = s.field();
            for x in q.basis(v) {
                let mut y = zero_vec(f, s.ambient_dim());
                for (c, xi) in comp.iter().zip(x) {
                    y[*c] = xi.clone();
                }
                s.insert(&y);
            }
        }
        Submodule { spans }
    }
}

impl Module {
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Module> {
        if dims.len() != alg.num_vertices() || arrows.len() != alg.arrows().len() {
            return Err(Error::Input("module shape does not match the quiver".into()));
        }
        for (a, m) in alg.arrows().iter().zip(&arrows) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] || m.field() != alg.field() {
                return Err(Error::Input(format!("matrix of arrow {} has the wrong shape", a.name)));
            }
        }
        let m = Module::from_parts(alg, dims, arrows);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts(alg: Arc<Algebra>, dims: Vec<usize>, arrows: Vec<Matrix>) -> Module {
        Module { alg, dims, arrows, words: OnceLock::new(), cover: OnceLock::new() }
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let f = alg.field();
        let arrows = alg.arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module::from_parts(alg.clone(), vec![0; alg.num_vertices()], arrows)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow(&self, a: usize) -> &Matrix {
        &self.arrows[a]
    }

    pub fn arrow_matrices(&self) -> &[Matrix] {
        &self.arrows
    }

    pub fn same_algebra(&self, o: &Module) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) || *self.alg == *o.alg
    }

    /// Action of every basis word, `dims[t] x dims[s]`.
    pub fn word_actions(&self) -> &[Matrix] {
        self.words.get_or_init(|| {
            let f = self.field();
            let v: Vec<Matrix> = self
                .alg
                .basis()
                .iter()
                .map(|w| {
                    if w.is_trivial() {
                        Matrix::identity(f, self.dims[w.source])
                    } else {
                        let mut m = self.arrows[w.letters[0]].clone();
                        for &a in &w.letters[1..] {
                            m = m.mul(&self.arrows[a]);
                        }
                        m
                    }
                })
                .collect();
            Arc::new(v)
        })
    }

    pub fn word_action(&self, i: usize) -> &Matrix {
        &self.word_actions()[i]
    }

    /// Checks that the arrow matrices satisfy the algebra's multiplication.
    pub fn validate(&self) -> Result<()> {
        let a = &self.alg;
        let w = self.word_actions();
        let f = self.field();
        for ai in 0..a.arrows().len() {
            let arr = &a.arrows()[ai];
            let mut m = Matrix::zeros(f, self.dims[arr.target], self.dims[arr.source]);
            for (k, c) in a.arrow_element(ai).iter().enumerate() {
                if !c.is_zero() {
                    m.add_scaled(c, &w[k]);
                }
            }
            if m != self.arrows[ai] {
                return Err(Error::Input(format!("arrow {} acts inconsistently", arr.name)));
            }
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (bi, bj) = (&a.basis()[i], &a.basis()[j]);
                if bi.source != bj.target {
                    continue;
                }
                let lhs = w[i].mul(&w[j]);
                let mut rhs = Matrix::zeros(f, self.dims[bi.target], self.dims[bj.source]);
                for (k, c) in a.product(i, j) {
                    rhs.add_scaled(c, &w[*k]);
                }
                if lhs != rhs {
                    return Err(Error::Input(format!(
                        "module violates the relation for {}·{}",
                        a.basis_label(i),
                        a.basis_label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `P(λ) = A e_λ`.
    pub fn projective(alg: &Arc<Algebra>, l: usize) -> Module {
        let f = alg.field();
        let nv = alg.num_vertices();
        let words = alg.words_from(l);
        let mut pos = vec![0usize; alg.dim()];
        let mut dims = vec![0usize; nv];
        for &w in &words {
            let t = alg.basis()[w].target;
            pos[w] = dims[t];
            dims[t] += 1;
        }
        let arrows = alg
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let x = alg.arrow_element(ai);
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                for &w in words.iter().filter(|&&w| alg.basis()[w].target == a.source) {
                    for (k, c) in x.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (r, d) in alg.product(k, w) {
                            let cur = m.get(pos[*r], pos[w]).clone();
                            m.set(pos[*r], pos[w], &cur + &(c * d));
                        }
                    }
                }
                m
            })
            .collect();
        Module::from_parts(alg.clone(), dims, arrows)
    }

    pub fn simple(alg: &Arc<Algebra>, l: usize) -> Module {
        let f = alg.field();
        let mut dims = vec![0; alg.num_vertices()];
        dims[l] = 1;
        let arrows =
            alg.arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        Module::from_parts(alg.clone(), dims, arrows)
    }

    /// `I(λ) = 𝔻(e_λ A)`, the dual of a projective over the opposite algebra.
    pub fn injective(alg: &Arc<Algebra>, l: usize) -> Module {
        let opp = Arc::new(alg.opposite());
        Module::projective(&opp, l).dual_over(alg.clone())
    }

    pub fn regular(alg: &Arc<Algebra>) -> Module {
        let ps: Vec<Module> = (0..alg.num_vertices()).map(|l| Module::projective(alg, l)).collect();
        Module::direct_sum_all(alg, &ps)
    }

    /// `𝔻M` over the opposite algebra.
    pub fn dualize(&self) -> Module {
        self.dual_over(Arc::new(self.alg.opposite()))
    }

    /// `𝔻M` as a module over `opp`, which must be the opposite algebra.
    pub fn dual_over(&self, opp: Arc<Algebra>) -> Module {
        debug_assert!(opp.dim() == self.alg.dim());
        Module::from_parts(opp, self.dims.clone(), self.arrows.iter().map(Matrix::transpose).collect())
    }

    pub fn direct_sum(&self, o: &Module) -> Module {
        let dims = self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect();
        let arrows = self.arrows.iter().zip(&o.arrows).map(|(a, b)| a.direct_sum(b)).collect();
        Module::from_parts(self.alg.clone(), dims, arrows)
    }

    /// `M ⊗_k N` over `d`, which must be `M.algebra().tensor(N.algebra())`.
    pub fn tensor(&self, o: &Module, d: &Arc<Algebra>) -> Result<Module> {
        let (a, b) = (&self.alg, &o.alg);
        let (na, nb) = (a.num_vertices(), b.num_vertices());
        let (ka, kb) = (a.arrows().len(), b.arrows().len());
        if d.num_vertices() != na * nb || d.arrows().len() != ka * nb + kb * na || self.field() != o.field() {
            return Err(Error::Input("target algebra is not the tensor product of the factors".into()));
        }
        let f = self.field();
        let dims: Vec<usize> = (0..na).flat_map(|l| (0..nb).map(move |m| (l, m))).map(|(l, m)| self.dims[l] * o.dims[m]).collect();
        let mut arrows = Vec::with_capacity(d.arrows().len());
        for (ai, x) in self.arrows.iter().enumerate() {
            for m in 0..nb {
                arrows.push(x.kron(&Matrix::identity(f, o.dims[m])));
                debug_assert_eq!(d.arrows()[ai * nb + m].source, a.arrows()[ai].source * nb + m);
            }
        }
        for l in 0..na {
            for y in &o.arrows {
                arrows.push(Matrix::identity(f, self.dims[l]).kron(y));
            }
        }
        Module::new(d.clone(), dims, arrows)
    }

    pub fn direct_sum_all(alg: &Arc<Algebra>, ms: &[Module]) -> Module {
        let mut acc = Module::zero(alg);
        for m in ms {
            acc = acc.direct_sum(m);
        }
        acc
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Module {
        let mut acc = Module::zero(&self.alg);
        for _ in 0..k {
            acc = acc.direct_sum(self);
        }
        acc
    }

    /// Smallest submodule containing the given vectors (per vertex).
    pub fn generated(&self, gens: &[(usize, Vector)]) -> Submodule {
        let mut sub = Submodule::zero(self);
        let mut queue: Vec<(usize, Vector)> = Vec::new();
        for (v, x) in gens {
            if sub.spans[*v].insert(x) {
                queue.push((*v, x.clone()));
            }
        }
        while let Some((v, x)) = queue.pop() {
            for (ai, a) in self.alg.arrows().iter().enumerate() {
                if a.source != v {
                    continue;
                }
                let y = self.arrows[ai].mul_vec(&x);
                if !is_zero_vec(&y) && sub.spans[a.target].insert(&y) {
                    queue.push((a.target, y));
                }
            }
        }
        sub
    }

    /// Submodule generated by a graded subspace.
    pub fn closure(&self, sub: &Submodule) -> Submodule {
        let gens: Vec<(usize, Vector)> =
            (0..self.dims.len()).flat_map(|v| sub.basis(v).iter().map(move |x| (v, x.clone()))).collect();
        self.generated(&gens)
    }

    pub fn is_stable(&self, sub: &Submodule) -> bool {
        self.alg.arrows().iter().enumerate().all(|(ai, a)| {
            sub.basis(a.source).iter().all(|x| sub.contains(a.target, &self.arrows[ai].mul_vec(x)))
        })
    }

    /// Arrow images of a submodule, i.e. `rad(U)` for a submodule `U`.
    pub fn arrow_image(&self, sub: &Submodule) -> Submodule {
        let mut out = Submodule::zero(self);
        for (ai, a) in self.alg.arrows().iter().enumerate() {
            for x in sub.basis(a.source) {
                out.spans[a.target].insert(&self.arrows[ai].mul_vec(x));
            }
        }
        out
    }

    pub fn radical(&self) -> Submodule {
        self.arrow_image(&Submodule::whole(self))
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.dims.iter().zip(self.radical().dims()).map(|(a, b)| a - b).collect()
    }

    /// Elements killed by every arrow and lying over `inner` after one step:
    /// `{m : a·m ∈ inner for all arrows a}`.
    pub fn arrow_preimage(&self, inner: &Submodule) -> Submodule {
        let f = self.field();
        let quots: Vec<Matrix> = inner.spans.iter().map(quotient_matrix).collect();
        let mut spans = Vec::new();
        for v in 0..self.dims.len() {
            let mut stack = Matrix::zeros(f, 0, self.dims[v]);
            for (ai, a) in self.alg.arrows().iter().enumerate() {
                if a.source == v {
                    stack = stack.vstack(&quots[a.target].mul(&self.arrows[ai]));
                }
            }
            let ker = if stack.rows() == 0 {
                (0..self.dims[v])
                    .map(|j| {
                        let mut e = zero_vec(f, self.dims[v]);
                        e[j] = f.one();
                        e
                    })
                    .collect()
            } else {
                stack.kernel_basis()
            };
            spans.push(Span::from_vectors(f, self.dims[v], &ker));
        }
        Submodule { spans }
    }

    pub fn socle(&self) -> Submodule {
        self.arrow_preimage(&Submodule::zero(self))
    }

    /// `M = R_0 ⊃ R_1 = rad M ⊃ … ⊃ 0`.
    pub fn radical_series(&self) -> Vec<Submodule> {
        let mut out = vec![Submodule::whole(self)];
        while !out.last().unwrap().is_zero() {
            let next = self.arrow_image(out.last().unwrap());
            if next.dim() == out.last().unwrap().dim() {
                break;
            }
            out.push(next);
        }
        out
    }

    /// `0 = S_0 ⊂ S_1 = soc M ⊂ … ⊂ M`.
    pub fn socle_series(&self) -> Vec<Submodule> {
        let mut out = vec![Submodule::zero(self)];
        while out.last().unwrap().dim() < self.dim() {
            let next = self.arrow_preimage(out.last().unwrap());
            if next.dim() == out.last().unwrap().dim() {
                break;
            }
            out.push(next);
        }
        out
    }

    /// Dimension vectors of the radical layers, top first.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let s = self.radical_series();
        s.windows(2).map(|w| w[0].dims().iter().zip(w[1].dims()).map(|(a, b)| a - b).collect()).collect()
    }

    /// Dimension vectors of the socle layers, socle first.
    pub fn socle_layers(&self) -> Vec<Vec<usize>> {
        let s = self.socle_series();
        s.windows(2).map(|w| w[1].dims().iter().zip(w[0].dims()).map(|(a, b)| a - b).collect()).collect()
    }

    /// Radical layers as lists of vertex labels, top first.
    pub fn profile(&self) -> Vec<Vec<String>> {
        self.label_layers(&self.radical_layers())
    }

    /// Socle layers as lists of vertex labels, listed top first.
    pub fn socle_profile(&self) -> Vec<Vec<String>> {
        let mut l = self.socle_layers();
        l.reverse();
        self.label_layers(&l)
    }

    fn label_layers(&self, layers: &[Vec<usize>]) -> Vec<Vec<String>> {
        layers
            .iter()
            .map(|d| {
                d.iter()
                    .enumerate()
                    .flat_map(|(v, &k)| std::iter::repeat_n(self.alg.vertices()[v].clone(), k))
                    .collect()
            })
            .collect()
    }

    pub fn loewy_length(&self) -> usize {
        self.radical_layers().len()
    }

    /// Submodule and quotient module for a stable graded subspace.
    pub fn subquotient(&self, sub: &Submodule) -> Result<Subquotient> {
        if !self.is_stable(sub) {
            return Err(Error::Input("subspace is not a submodule".into()));
        }
        let f = self.field();
        let nv = self.dims.len();
        let incl: Vec<Matrix> =
            (0..nv).map(|v| Matrix::from_cols(f, self.dims[v], sub.basis(v))).collect();
        let quots: Vec<Matrix> = sub.spans.iter().map(quotient_matrix).collect();
        let comps: Vec<Vec<usize>> = sub.spans.iter().map(Span::complement_std).collect();
        let sdims = sub.dims();
        let qdims: Vec<usize> = comps.iter().map(Vec::len).collect();
        let mut sarrows = Vec::new();
        let mut qarrows = Vec::new();
        for (ai, a) in self.alg.arrows().iter().enumerate() {
            let m = &self.arrows[ai];
            let mut sa = Matrix::zeros(f, sdims[a.target], sdims[a.source]);
            for (j, x) in sub.basis(a.source).iter().enumerate() {
                let y = m.mul_vec(x);
                let c = sub.spans[a.target].coordinates_in_basis(&y).ok_or_else(|| {
                    Error::Internal("submodule coordinates unavailable".into())
                })?;
                for (i, ci) in c.into_iter().enumerate() {
                    sa.set(i, j, ci);
                }
            }
            sarrows.push(sa);
            let mut qa = Matrix::zeros(f, qdims[a.target], qdims[a.source]);
            for (j, &c) in comps[a.source].iter().enumerate() {
                let y = quots[a.target].mul_vec(&m.col(c));
                for (i, yi) in y.into_iter().enumerate() {
                    qa.set(i, j, yi);
                }
            }
            qarrows.push(qa);
        }
        Ok(Subquotient {
            sub: Module::from_parts(self.alg.clone(), sdims, sarrows),
            quotient: Module::from_parts(self.alg.clone(), qdims, qarrows),
            inclusion: ModuleMap { blocks: incl },
            projection: ModuleMap { blocks: quots },
        })
    }

    pub fn submodule(&self, sub: &Submodule) -> Result<Module> {
        Ok(self.subquotient(sub)?.sub)
    }

    pub fn quotient(&self, sub: &Submodule) -> Result<Module> {
        Ok(self.subquotient(sub)?.quotient)
    }

    /// The module `ι M`: `a` acts by `act(twist(a))` where `twist` is given on
    /// arrows by coordinates in the algebra. Used for restriction along
    /// (anti-)automorphisms; `images[a]` must lie in the appropriate block.
    pub fn twisted(&self, images: &[Vector]) -> Module {
        let f = self.field();
        let w = self.word_actions();
        let arrows = self
            .alg
            .arrows()
            .iter()
            .zip(images)
            .map(|(a, x)| {
                let mut m = Matrix::zeros(f, self.dims[a.target], self.dims[a.source]);
                for (k, c) in x.iter().enumerate() {
                    if !c.is_zero() {
                        m.add_scaled(c, &w[k]);
                    }
                }
                m
            })
            .collect();
        Module::from_parts(self.alg.clone(), self.dims.clone(), arrows)
    }

    /// Same vector spaces and matrices over another (equal) algebra value.
    pub fn rebased(&self, alg: Arc<Algebra>) -> Module {
        Module::from_parts(alg, self.dims.clone(), self.arrows.clone())
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            dims: self.dims.clone(),
            arrows: self
                .alg
                .arrows()
                .iter()
                .zip(&self.arrows)
                .map(|(a, m)| ArrowMatrixJson {
                    name: a.name.clone(),
                    rows: (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect(),
                })
                .collect(),
        }
    }
}

/// Output of [`Module::subquotient`].
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub sub: Module,
    pub quotient: Module,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
}

impl ModuleMap {
    pub fn zero(m: &Module, n: &Module) -> ModuleMap {
        let f = m.field();
        ModuleMap { blocks: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(f, b, a)).collect() }
    }

    pub fn identity(m: &Module) -> ModuleMap {
        let f = m.field();
        ModuleMap { blocks: m.dims.iter().map(|&d| Matrix::identity(f, d)).collect() }
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &crate::exactlin::Scalar) -> ModuleMap {
        ModuleMap { blocks: self.blocks.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn add_scaled(&mut self, c: &crate::exactlin::Scalar, g: &ModuleMap) {
        for (a, b) in self.blocks.iter_mut().zip(&g.blocks) {
            a.add_scaled(c, b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    /// Checks `g ∘ act_M(a) == act_N(a) ∘ g` for every arrow.
    pub fn is_homomorphism(&self, m: &Module, n: &Module) -> bool {
        m.alg.arrows().iter().enumerate().all(|(ai, a)| {
            self.blocks[a.target].mul(&m.arrows[ai]) == n.arrows[ai].mul(&self.blocks[a.source])
        })
    }

    pub fn image(&self) -> Submodule {
        let spans = self
            .blocks
            .iter()
            .map(|b| Span::from_vectors(b.field(), b.rows(), &b.columns()))
            .collect();
        Submodule { spans }
    }

    pub fn kernel(&self) -> Submodule {
        let spans = self
            .blocks
            .iter()
            .map(|b| {
                let ker = if b.rows() == 0 {
                    (0..b.cols())
                        .map(|j| {
                            let mut e = zero_vec(b.field(), b.cols());
                            e[j] = b.field().one();
                            e
                        })
                        .collect()
                } else {
                    b.kernel_basis()
                };
                Span::from_vectors(b.field(), b.cols(), &ker)
            })
            .collect();
        Submodule { spans }
    }

    /// `(f_1, …, f_k)^T : M -> N_1 ⊕ … ⊕ N_k`.
    pub fn stacked(maps: &[ModuleMap], src: &Module) -> ModuleMap {
        let f = src.field();
        let blocks = (0..src.dims.len())
            .map(|v| {
                let mut acc = Matrix::zeros(f, 0, src.dims[v]);
                for g in maps {
                    acc = acc.vstack(&g.blocks[v]);
                }
                acc
            })
            .collect();
        ModuleMap { blocks }
    }

    /// `(f_1, …, f_k) : M_1 ⊕ … ⊕ M_k -> N`.
    pub fn joined(maps: &[ModuleMap], dst: &Module) -> ModuleMap {
        let f = dst.field();
        let blocks = (0..dst.dims.len())
            .map(|v| {
                let mut acc = Matrix::zeros(f, dst.dims[v], 0);
                for g in maps {
                    acc = acc.hstack(&g.blocks[v]);
                }
                acc
            })
            .collect();
        ModuleMap { blocks }
    }

    /// Block-diagonal matrix on the total space.
    pub fn total(&self) -> Matrix {
        let f = self.blocks.first().map(|b| b.field()).unwrap_or(Field::Rationals);
        let mut acc = Matrix::zeros(f, 0, 0);
        for b in &self.blocks {
            acc = acc.direct_sum(b);
        }
        acc
    }
}

/// Cokernel of `g: M -> N` with the projection `N -> coker`.
pub fn cokernel(g: &ModuleMap, n: &Module) -> Result<(Module, ModuleMap)> {
    let sq = n.subquotient(&g.image())?;
    Ok((sq.quotient, sq.projection))
}

/// Pushout of `f: C -> X` and `g: C -> Y`, returning `E` and the maps
/// `X -> E`, `Y -> E`.
pub fn pushout(f: &ModuleMap, x: &Module, g: &ModuleMap, y: &Module, c: &Module) -> Result<(Module, ModuleMap, ModuleMap)> {
    let xy = x.direct_sum(y);
    let h = ModuleMap::stacked(&[f.clone(), g.scale(&-c.field().one())], c);
    let (e, p) = cokernel(&h, &xy)?;
    let ix = ModuleMap::stacked(&[ModuleMap::identity(x), ModuleMap::zero(x, y)], x);
    let iy = ModuleMap::stacked(&[ModuleMap::zero(y, x), ModuleMap::identity(y)], y);
    Ok((e, p.compose(&ix), p.compose(&iy)))
}
