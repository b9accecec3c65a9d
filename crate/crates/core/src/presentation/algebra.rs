use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{axpy, is_zero_vec, zero_vec, Field, Matrix, Scalar, Span, Vector};

use super::groebner::{GroebnerBasis, Poly, Word};
use super::quiver::{Arrow, Presentation, Quiver, Relation, DEFAULT_MAX_PATH_LENGTH};

/// Sparse coordinate vector, sorted by index, no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Origin {
    FromPresentation,
    Endomorphism,
    Opposite,
    Tensor,
}

/// Finite-dimensional basic algebra with a basis of paths.
///
/// Every basis element `b_i` is the product of the arrows listed in
/// `basis[i].letters` and lies in `e_t A e_s` for `t = basis[i].target`,
/// `s = basis[i].source`. The trivial word at `λ` is `e_λ`.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    basis: Vec<Word>,
    mult: Vec<Vec<SparseVec>>,
    arrow_elems: Vec<SparseVec>,
    units: Vec<usize>,
    order: Vec<usize>,
    origin: Origin,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Algebra) -> bool {
        self.field == o.field
            && self.vertices == o.vertices
            && self.arrows == o.arrows
            && self.basis == o.basis
            && self.mult == o.mult
            && self.arrow_elems == o.arrow_elems
            && self.units == o.units
            && self.order == o.order
    }
}

impl Eq for Algebra {}

const MAX_BASIS: usize = 100_000;

fn sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn dense(field: Field, n: usize, v: &SparseVec) -> Vector {
    let mut out = zero_vec(field, n);
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

fn mul_dense(field: Field, mult: &[Vec<SparseVec>], x: &[Scalar], y: &[Scalar]) -> Vector {
    let n = x.len();
    let mut out = zero_vec(field, n);
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (k, c) in &mult[i][j] {
                out[*k] = &out[*k] + &(&ab * c);
            }
        }
    }
    out
}

fn unique_names(names: &mut [String]) {
    let mut seen = std::collections::HashSet::new();
    for n in names.iter_mut() {
        while !seen.insert(n.clone()) {
            n.push('\'');
        }
    }
}

const GREEK: [&str; 12] =
    ["alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa", "lambda", "mu"];

impl Algebra {
    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }
    pub fn origin(&self) -> Origin {
        self.origin
    }
    /// Vertex indices in ascending order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn quiver(&self) -> Quiver {
        Quiver { vertices: self.vertices.clone(), arrows: self.arrows.clone() }
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn basis_label(&self, i: usize) -> String {
        self.basis[i].render(&self.arrows, &self.vertices)
    }

    /// Basis index of `e_λ`.
    pub fn unit(&self, v: usize) -> usize {
        self.units[v]
    }

    /// Position of vertex `v` in the order.
    pub fn rank_of(&self, v: usize) -> usize {
        self.order.iter().position(|&x| x == v).unwrap()
    }

    /// `λ < μ` in the order.
    pub fn less(&self, l: usize, m: usize) -> bool {
        self.rank_of(l) < self.rank_of(m)
    }

    pub fn with_order(&self, order: Vec<usize>) -> Result<Algebra> {
        let mut s = order.clone();
        s.sort_unstable();
        if s != (0..self.num_vertices()).collect::<Vec<_>>() {
            return Err(Error::Input("order must list every vertex exactly once".into()));
        }
        Ok(Algebra { order, ..self.clone() })
    }

    pub fn with_origin(mut self, origin: Origin) -> Algebra {
        self.origin = origin;
        self
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn arrow_element(&self, a: usize) -> Vector {
        dense(self.field, self.dim(), &self.arrow_elems[a])
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = zero_vec(self.field, self.dim());
        v[i] = self.field.one();
        v
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        mul_dense(self.field, &self.mult, x, y)
    }

    /// Basis indices of words with the given source, i.e. a basis of `A e_v`.
    pub fn words_from(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].source == v).collect()
    }

    /// Entry `[λ][μ]` is the multiplicity of `L(μ)` in `P(λ)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for w in &self.basis {
            c[w.source][w.target] += 1;
        }
        c
    }

    pub fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if self.basis[i].source != self.basis[j].target {
                    if !self.mult[i][j].is_empty() {
                        return Err(Error::Internal("product of non-composable basis elements".into()));
                    }
                    continue;
                }
                for k in 0..n {
                    if self.basis[j].source != self.basis[k].target {
                        continue;
                    }
                    let mut left = zero_vec(self.field, n);
                    for (m, c) in &self.mult[i][j] {
                        for (r, d) in &self.mult[*m][k] {
                            left[*r] = &left[*r] + &(c * d);
                        }
                    }
                    let mut right = zero_vec(self.field, n);
                    for (m, c) in &self.mult[j][k] {
                        for (r, d) in &self.mult[i][*m] {
                            right[*r] = &right[*r] + &(c * d);
                        }
                    }
                    if left != right {
                        return Err(Error::Internal(format!(
                            "multiplication is not associative on ({}, {}, {})",
                            self.basis_label(i),
                            self.basis_label(j),
                            self.basis_label(k)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Smallest `m` with `rad^m = 0`, measured on the arrow ideal.
    pub fn loewy_length(&self) -> usize {
        let n = self.dim();
        let mut layer: Vec<Vector> =
            (0..n).filter(|&i| !self.basis[i].is_trivial()).map(|i| self.basis_vector(i)).collect();
        let mut len = 1;
        while !layer.is_empty() {
            let mut next = Span::new(self.field, n);
            for a in 0..self.arrows.len() {
                let x = self.arrow_element(a);
                for y in &layer {
                    next.insert(&self.multiply(&x, y));
                }
            }
            layer = next.basis().to_vec();
            len += 1;
            if len > n + 1 {
                break;
            }
        }
        len
    }

    pub fn from_presentation(p: &Presentation) -> Result<Algebra> {
        p.validate()?;
        let f = p.field;
        let arrows = p.quiver.arrows.clone();
        let nv = p.quiver.vertices.len();
        let rels: Vec<Poly> = p
            .relations
            .iter()
            .map(|r| Poly::from_terms(r.iter().map(|(c, path)| (Word::from_letters(&arrows, path.clone()), c.clone()))))
            .collect();
        let gb = GroebnerBasis::compute(f, &arrows, &rels, 2 * p.max_path_length + 2)?;

        let mut basis: Vec<Word> = (0..nv).map(Word::trivial).collect();
        let mut frontier = basis.clone();
        let mut len = 0;
        while !frontier.is_empty() {
            len += 1;
            let mut next = Vec::new();
            for w in &frontier {
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source != w.target {
                        continue;
                    }
                    let mut letters = vec![ai];
                    letters.extend_from_slice(&w.letters);
                    let nw = Word { source: w.source, target: a.target, letters };
                    if gb.is_normal(&nw) {
                        next.push(nw);
                    }
                }
            }
            if !next.is_empty() && len >= p.max_path_length {
                return Err(Error::NotFiniteDimensional(format!(
                    "new basis paths still appear at length {len} (max_path_length {})",
                    p.max_path_length
                )));
            }
            if basis.len() + next.len() > MAX_BASIS {
                return Err(Error::NotFiniteDimensional(format!("more than {MAX_BASIS} basis paths")));
            }
            next.sort();
            basis.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let to_sparse = |p: &Poly| -> Result<SparseVec> {
            let mut v: SparseVec = p
                .terms()
                .map(|(w, c)| {
                    index
                        .get(w)
                        .map(|&i| (i, c.clone()))
                        .ok_or_else(|| Error::Internal("normal form outside the basis".into()))
                })
                .collect::<Result<_>>()?;
            v.sort_by_key(|(i, _)| *i);
            Ok(v)
        };
        let n = basis.len();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if let Some(w) = basis[i].times(&basis[j]) {
                    mult[i][j] = to_sparse(&gb.reduce(&Poly::from_terms([(w, f.one())])))?;
                }
            }
        }
        let arrow_elems = (0..arrows.len())
            .map(|a| to_sparse(&gb.reduce(&Poly::from_terms([(Word::from_letters(&arrows, vec![a]), f.one())]))))
            .collect::<Result<Vec<_>>>()?;
        let alg = Algebra {
            field: f,
            vertices: p.quiver.vertices.clone(),
            arrows,
            basis,
            mult,
            arrow_elems,
            units: (0..nv).collect(),
            order: p.order.clone(),
            origin: Origin::FromPresentation,
        };
        if alg.loewy_length() > n + 1 {
            return Err(Error::Input("relations are not admissible: the arrow ideal is not nilpotent".into()));
        }
        alg.check_associative()?;
        Ok(alg)
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let mut mult = vec![vec![Vec::new(); n]; n];
        for (i, row) in mult.iter_mut().enumerate() {
            for (j, m) in row.iter_mut().enumerate() {
                *m = self.mult[j][i].clone();
            }
        }
        Algebra {
            field: self.field,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
            basis: self.basis.iter().map(Word::reversed).collect(),
            mult,
            arrow_elems: self.arrow_elems.clone(),
            units: self.units.clone(),
            order: self.order.clone(),
            origin: Origin::Opposite,
        }
    }

    /// `self ⊗ o` with vertices `(λ, ν)` in lexicographic order.
    pub fn tensor(&self, o: &Algebra) -> Result<Algebra> {
        if self.field != o.field {
            return Err(Error::Input("tensor product of algebras over different fields".into()));
        }
        let (na, nb) = (self.num_vertices(), o.num_vertices());
        let (da, db) = (self.dim(), o.dim());
        let vid = |l: usize, m: usize| l * nb + m;
        let vertices = (0..na)
            .flat_map(|l| {
                (0..nb).map(move |m| (l, m))
            })
            .map(|(l, m)| {
                if nb == 1 {
                    self.vertices[l].clone()
                } else if na == 1 {
                    o.vertices[m].clone()
                } else {
                    format!("({},{})", self.vertices[l], o.vertices[m])
                }
            })
            .collect::<Vec<_>>();
        let mut arrows = Vec::new();
        let mut left_arrow = vec![vec![0; nb]; self.arrows.len()];
        for (a, row) in self.arrows.iter().zip(left_arrow.iter_mut()) {
            for (m, slot) in row.iter_mut().enumerate() {
                *slot = arrows.len();
                let name = if nb == 1 { a.name.clone() } else { format!("{}@{}", a.name, o.vertices[m]) };
                arrows.push(Arrow { name, source: vid(a.source, m), target: vid(a.target, m) });
            }
        }
        let mut right_arrow = vec![vec![0; o.arrows.len()]; na];
        for (l, row) in right_arrow.iter_mut().enumerate() {
            for (bi, b) in o.arrows.iter().enumerate() {
                row[bi] = arrows.len();
                let name = if na == 1 { b.name.clone() } else { format!("{}@{}", b.name, self.vertices[l]) };
                arrows.push(Arrow { name, source: vid(l, b.source), target: vid(l, b.target) });
            }
        }
        let mut names: Vec<String> = arrows.iter().map(|a| a.name.clone()).collect();
        unique_names(&mut names);
        for (a, n) in arrows.iter_mut().zip(names) {
            a.name = n;
        }
        let mut basis = Vec::with_capacity(da * db);
        for u in &self.basis {
            for v in &o.basis {
                let mut letters: Vec<usize> = u.letters.iter().map(|&a| left_arrow[a][v.target]).collect();
                letters.extend(v.letters.iter().map(|&b| right_arrow[u.source][b]));
                basis.push(Word { source: vid(u.source, v.source), target: vid(u.target, v.target), letters });
            }
        }
        let n = da * db;
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i1 in 0..da {
            for j1 in 0..db {
                for i2 in 0..da {
                    for j2 in 0..db {
                        let (x, y) = (&self.mult[i1][i2], &o.mult[j1][j2]);
                        if x.is_empty() || y.is_empty() {
                            continue;
                        }
                        let mut out = Vec::new();
                        for (k, c) in x {
                            for (l, d) in y {
                                out.push((k * db + l, c * d));
                            }
                        }
                        out.sort_by_key(|(i, _)| *i);
                        mult[i1 * db + j1][i2 * db + j2] = out;
                    }
                }
            }
        }
        let mut arrow_elems = vec![Vec::new(); arrows.len()];
        for (ai, e) in self.arrow_elems.iter().enumerate() {
            for m in 0..nb {
                arrow_elems[left_arrow[ai][m]] = e.iter().map(|(k, c)| (k * db + o.units[m], c.clone())).collect();
            }
        }
        for (l, row) in right_arrow.iter().enumerate() {
            for (bi, e) in o.arrow_elems.iter().enumerate() {
                let mut v: SparseVec = e.iter().map(|(k, c)| (self.units[l] * db + k, c.clone())).collect();
                v.sort_by_key(|(i, _)| *i);
                arrow_elems[row[bi]] = v;
            }
        }
        let units = (0..na).flat_map(|l| (0..nb).map(move |m| (l, m))).map(|(l, m)| self.units[l] * db + o.units[m]).collect();
        let order = self.order.iter().flat_map(|&l| o.order.iter().map(move |&m| vid(l, m))).collect();
        let alg = Algebra {
            field: self.field,
            vertices,
            arrows,
            basis,
            mult,
            arrow_elems,
            units,
            order,
            origin: Origin::Tensor,
        };
        Ok(alg)
    }

    /// Abstract description of this algebra (used to re-derive a presentation).
    pub fn to_abstract(&self) -> AbstractAlgebra {
        AbstractAlgebra {
            field: self.field,
            vertices: self.vertices.clone(),
            order: self.order.clone(),
            blocks: self.basis.iter().map(|w| (w.source, w.target)).collect(),
            mult: self.mult.clone(),
            units: (0..self.num_vertices()).map(|v| self.basis_vector(self.units[v])).collect(),
            names: self
                .basis
                .iter()
                .map(|w| (w.len() == 1).then(|| self.arrows[w.letters[0]].name.clone()))
                .collect(),
            origin: self.origin,
        }
    }

    pub fn quiver_presentation(&self) -> Result<Presentation> {
        Ok(self.to_abstract().normalize()?.presentation)
    }
}

/// An algebra given by structure constants on a basis adapted to a complete
/// set of primitive orthogonal idempotents.
#[derive(Clone, Debug)]
pub struct AbstractAlgebra {
    pub field: Field,
    pub vertices: Vec<String>,
    pub order: Vec<usize>,
    /// `(source, target)` of each basis element `b`: `b = e_target b e_source`.
    pub blocks: Vec<(usize, usize)>,
    pub mult: Vec<Vec<SparseVec>>,
    /// Coordinates of `e_λ`.
    pub units: Vec<Vector>,
    /// Preferred arrow name when a basis element becomes an arrow.
    pub names: Vec<Option<String>>,
    pub origin: Origin,
}

/// Result of [`AbstractAlgebra::normalize`].
#[derive(Clone, Debug)]
pub struct Normalized {
    pub algebra: Algebra,
    /// Old coordinates of each new basis element.
    pub elements: Vec<Vector>,
    pub presentation: Presentation,
}

impl AbstractAlgebra {
    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        mul_dense(self.field, &self.mult, x, y)
    }

    /// Chooses arrows in `rad / rad²` and a basis of arrow words adapted to
    /// the radical filtration, then rewrites the structure constants.
    pub fn normalize(&self) -> Result<Normalized> {
        let f = self.field;
        let n = self.blocks.len();
        let nv = self.vertices.len();
        if n == 0 || self.units.len() != nv {
            return Err(Error::Input("algebra needs one idempotent per vertex".into()));
        }
        let unit = |i: usize| {
            let mut v = zero_vec(f, n);
            v[i] = f.one();
            v
        };
        for (i, &(s, t)) in self.blocks.iter().enumerate() {
            let b = unit(i);
            if self.mul(&self.units[t], &b) != b || self.mul(&b, &self.units[s]) != b {
                return Err(Error::Input("basis element outside its idempotent block".into()));
            }
        }
        // radical
        let mut rad_gens = Vec::new();
        for l in 0..nv {
            let idx: Vec<usize> = (0..n).filter(|&i| self.blocks[i] == (l, l)).collect();
            for &i in &idx {
                let prod: Vec<Vector> = idx.iter().map(|&j| self.mul(&unit(i), &unit(j))).collect();
                let mut m = Matrix::zeros(f, idx.len(), idx.len());
                for (c, p) in prod.iter().enumerate() {
                    for (r, &k) in idx.iter().enumerate() {
                        m.set(r, c, p[k].clone());
                    }
                }
                let c = m.single_eigenvalue().ok_or_else(|| {
                    Error::CondenseFirst(format!(
                        "endomorphisms at vertex {} do not form a split local ring",
                        self.vertices[l]
                    ))
                })?;
                let mut x = unit(i);
                axpy(&mut x, &-&c, &self.units[l]);
                rad_gens.push(x);
            }
        }
        for i in 0..n {
            if self.blocks[i].0 != self.blocks[i].1 {
                rad_gens.push(unit(i));
            }
        }
        let rad = Span::from_vectors(f, n, &rad_gens);
        if rad.rank() + nv != n {
            return Err(Error::CondenseFirst("idempotents are not primitive".into()));
        }
        let mut powers = vec![Span::new(f, n), rad.clone()];
        loop {
            let last = powers.last().unwrap();
            if last.rank() == 0 {
                break;
            }
            let mut next = Span::new(f, n);
            for x in last.basis() {
                for y in rad.basis() {
                    next.insert(&self.mul(x, y));
                }
            }
            if next.rank() == last.rank() {
                return Err(Error::CondenseFirst("radical is not nilpotent: algebra is not basic".into()));
            }
            powers.push(next);
        }
        // powers[k] = rad^k for k >= 1; powers[0] unused
        let depth = powers.len() - 1;

        // arrows
        let mut arrow_span = powers.get(2).cloned().unwrap_or_else(|| Span::new(f, n));
        let mut arrow_vecs: Vec<(usize, usize, Vector, Option<String>)> = Vec::new();
        for g in &rad_gens {
            if arrow_span.insert(g) {
                let i = g.iter().position(|x| !x.is_zero()).unwrap();
                let hint = (g.iter().filter(|x| !x.is_zero()).count() == 1 && g[i].is_one())
                    .then(|| self.names[i].clone())
                    .flatten();
                arrow_vecs.push((self.blocks[i].0, self.blocks[i].1, g.clone(), hint));
            }
        }
        arrow_vecs.sort_by_key(|(s, t, _, _)| (*s, *t));
        let taken: std::collections::HashSet<String> =
            arrow_vecs.iter().filter_map(|a| a.3.clone()).collect();
        let mut fresh = GREEK.iter().map(|s| s.to_string()).chain((1..).map(|k| format!("x{k}")));
        let mut names = Vec::new();
        for a in &arrow_vecs {
            names.push(match &a.3 {
                Some(h) => h.clone(),
                None => loop {
                    let c = fresh.next().unwrap();
                    if !taken.contains(&c) {
                        break c;
                    }
                },
            });
        }
        unique_names(&mut names);
        let arrows: Vec<Arrow> = arrow_vecs
            .iter()
            .zip(&names)
            .map(|((s, t, _, _), name)| Arrow { name: name.clone(), source: *s, target: *t })
            .collect();

        // monomial basis
        let mut words: Vec<Word> = (0..nv).map(Word::trivial).collect();
        let mut elems: Vec<Vector> = self.units.clone();
        let mut level: Vec<usize> = (0..nv).collect();
        let mut rejected: Vec<(Word, Vector)> = Vec::new();
        let mut l = 0;
        while !level.is_empty() {
            l += 1;
            let mut cands: Vec<(Word, Vector)> = Vec::new();
            for &wi in &level {
                for (ai, a) in arrows.iter().enumerate() {
                    if a.source != words[wi].target {
                        continue;
                    }
                    let mut letters = vec![ai];
                    letters.extend_from_slice(&words[wi].letters);
                    let w = Word { source: words[wi].source, target: a.target, letters };
                    cands.push((w, self.mul(&arrow_vecs[ai].2, &elems[wi])));
                }
            }
            cands.sort_by(|a, b| a.0.cmp(&b.0));
            let mut span = powers.get(l + 1).cloned().unwrap_or_else(|| Span::new(f, n));
            let mut next = Vec::new();
            for (w, v) in cands {
                if span.insert(&v) {
                    next.push(words.len());
                    words.push(w);
                    elems.push(v);
                } else {
                    rejected.push((w, v));
                }
            }
            level = next;
            if l > depth + 1 {
                return Err(Error::Internal("monomial basis did not terminate".into()));
            }
        }
        if words.len() != n {
            return Err(Error::Internal(format!("found {} basis monomials, expected {n}", words.len())));
        }
        let p = Matrix::from_cols(f, n, &elems);
        let pinv = p.inverse().ok_or_else(|| Error::Internal("monomial basis is singular".into()))?;
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if words[i].source == words[j].target {
                    let prod = self.mul(&elems[i], &elems[j]);
                    if !is_zero_vec(&prod) {
                        mult[i][j] = sparse(&pinv.mul_vec(&prod));
                    }
                }
            }
        }
        let arrow_elems = (0..arrows.len())
            .map(|a| {
                let i = words.iter().position(|w| w.letters == [a]).unwrap();
                vec![(i, f.one())]
            })
            .collect();
        // relations
        let mut monomial: Vec<Vec<usize>> = Vec::new();
        let mut relations: Vec<Relation> = Vec::new();
        for (w, v) in &rejected {
            let coords = pinv.mul_vec(v);
            if is_zero_vec(&coords) {
                let redundant = monomial.iter().any(|m| {
                    m.len() < w.len() && w.letters.windows(m.len()).any(|s| s == m.as_slice())
                });
                if redundant {
                    continue;
                }
                monomial.push(w.letters.clone());
            }
            let mut rel: Relation = vec![(f.one(), w.letters.clone())];
            for (k, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    if words[k].is_trivial() {
                        return Err(Error::Internal("relation involves an idempotent".into()));
                    }
                    rel.push((-c, words[k].letters.clone()));
                }
            }
            relations.push(rel);
        }
        let algebra = Algebra {
            field: f,
            vertices: self.vertices.clone(),
            arrows: arrows.clone(),
            basis: words,
            mult,
            arrow_elems,
            units: (0..nv).collect(),
            order: self.order.clone(),
            origin: self.origin,
        };
        let presentation = Presentation {
            field: f,
            quiver: Quiver { vertices: self.vertices.clone(), arrows },
            relations,
            order: self.order.clone(),
            max_path_length: DEFAULT_MAX_PATH_LENGTH.max(depth + 1),
        };
        Ok(Normalized { algebra, elements: elems, presentation })
    }
}

pub fn build_algebra(pres: &Presentation) -> Result<Algebra> {
    Algebra::from_presentation(pres)
}

pub fn opposite_algebra(a: &Algebra) -> Algebra {
    a.opposite()
}

pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    a.tensor(b)
}

pub fn quiver_presentation_of(a: &Algebra) -> Result<Presentation> {
    a.quiver_presentation()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const S82: &str = r#"{"field":{"kind":"Q"},"vertices":["1","2"],
        "arrows":[{"name":"alpha","from":"2","to":"1"},{"name":"beta","from":"2","to":"1"},
                  {"name":"gamma","from":"1","to":"2"}],
        "relations":[[{"coeff":"1","path":["gamma","beta"]}],[{"coeff":"1","path":["alpha","gamma","alpha"]}]],
        "order":["1","2"]}"#;

    const A2: &str = r#"{"field":{"kind":"Q"},"vertices":["1","2"],
        "arrows":[{"name":"a","from":"1","to":"2"}],"order":["1","2"]}"#;

    const DUAL_NUMBERS: &str = r#"{"field":{"kind":"Q"},"vertices":["1"],
        "arrows":[{"name":"x","from":"1","to":"1"}],
        "relations":[[{"coeff":"1","path":["x","x"]}]],"order":["1"]}"#;

    fn build(s: &str) -> Algebra {
        build_algebra(&Presentation::from_json_str(s).unwrap()).unwrap()
    }

    #[test]
    fn dimensions_of_examples() {
        let a = build(S82);
        assert_eq!(a.dim(), 11);
        assert_eq!(a.words_from(0).len(), 6);
        assert_eq!(a.words_from(1).len(), 5);
        assert_eq!(build(A2).dim(), 3);
        assert_eq!(build(DUAL_NUMBERS).dim(), 2);
    }

    #[test]
    fn infinite_dimensional_is_rejected() {
        let s = DUAL_NUMBERS.replace(r#""relations":[[{"coeff":"1","path":["x","x"]}]],"#, "");
        let e = build_algebra(&Presentation::from_json_str(&s).unwrap()).unwrap_err();
        assert!(matches!(e, Error::NotFiniteDimensional(_)));
    }

    #[test]
    fn non_admissible_is_rejected() {
        // x = x^2 makes x idempotent
        let s = DUAL_NUMBERS.replace(
            r#"[[{"coeff":"1","path":["x","x"]}]]"#,
            r#"[[{"coeff":"1","path":["x","x"]},{"coeff":"-1","path":["x"]}]]"#,
        );
        assert!(build_algebra(&Presentation::from_json_str(&s).unwrap()).is_err());
    }

    #[test]
    fn opposite_is_an_involution() {
        let a = build(S82);
        assert_eq!(a.opposite().opposite(), a);
        let d = build(DUAL_NUMBERS);
        assert_eq!(d.opposite().mult, d.mult);
        let op = a.opposite().quiver_presentation().unwrap();
        assert_eq!(op.quiver.arrow_counts(), vec![vec![0, 2], vec![1, 0]]);
    }

    #[test]
    fn tensor_dimensions() {
        let a = build(A2);
        let d = build(DUAL_NUMBERS);
        let t = a.tensor(&d).unwrap();
        assert_eq!(t.dim(), 6);
        t.check_associative().unwrap();
        let k = build(r#"{"field":{"kind":"Q"},"vertices":["1"],"arrows":[],"order":["1"]}"#);
        let u = a.tensor(&k).unwrap();
        assert_eq!(u.mult, a.mult);
        assert_eq!(u.basis, a.basis);
    }

    #[test]
    fn presentation_round_trip() {
        for s in [S82, A2, DUAL_NUMBERS] {
            let a = build(s);
            let p = a.quiver_presentation().unwrap();
            let b = build_algebra(&p).unwrap();
            assert_eq!(b.dim(), a.dim());
            assert_eq!(b.cartan_matrix(), a.cartan_matrix());
        }
        let p = build(DUAL_NUMBERS).quiver_presentation().unwrap();
        assert_eq!(p.quiver.arrows.len(), 1);
        assert_eq!(p.relations.len(), 1);
    }

    #[test]
    fn nonhomogeneous_relations() {
        // loop x with x^2 = x^3: forces x^2 = 0
        let s = DUAL_NUMBERS.replace(
            r#"[[{"coeff":"1","path":["x","x"]}]]"#,
            r#"[[{"coeff":"1","path":["x","x"]},{"coeff":"-1","path":["x","x","x"]}],[{"coeff":"1","path":["x","x","x","x"]}]]"#,
        );
        assert_eq!(build(&s).dim(), 2);
    }
}
