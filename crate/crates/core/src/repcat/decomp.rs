use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{roots_in_field, Matrix, Scalar, Span};

use super::hom::hom_space;
use super::module::{Module, ModuleMap, Submodule};

pub const DEFAULT_SEED: u64 = 0x5eed;
const RANDOM_TRIES: usize = 32;
const GF2_EXHAUSTIVE_MAX: usize = 10;

/// An indecomposable summand with its multiplicity.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub multiplicity: usize,
}

/// The scalar `c` with `f - c` nilpotent, when it exists.
pub fn residue(f: &ModuleMap) -> Option<Scalar> {
    f.total().single_eigenvalue()
}

fn power_blocks(g: &ModuleMap, e: u64) -> ModuleMap {
    ModuleMap { blocks: g.blocks.iter().map(|b| b.pow(e)).collect() }
}

/// Whether `End(M)` is local, given a basis of it.
fn is_local_with(m: &Module, end: &[ModuleMap]) -> bool {
    if m.is_zero() {
        return false;
    }
    let f = m.field();
    let id = ModuleMap::identity(m);
    let mut rad: Vec<ModuleMap> = Vec::new();
    for b in end {
        let Some(c) = residue(b) else {
            return false;
        };
        let mut x = b.clone();
        x.add_scaled(&-&c, &id);
        rad.push(x);
    }
    let n = m.dim();
    let flat = |x: &ModuleMap| x.total().flatten();
    let mut span = Span::new(f, n * n);
    let mut basis = Vec::new();
    for x in rad {
        if span.insert(&flat(&x)) {
            basis.push(x);
        }
    }
    if span.rank() + 1 != end.len() {
        return false;
    }
    // closed under composition and nilpotent
    let mut power = basis.clone();
    for _ in 0..=n {
        if power.is_empty() {
            return true;
        }
        let mut next_span = Span::new(f, n * n);
        let mut next = Vec::new();
        for x in &power {
            for y in &basis {
                let z = x.compose(y);
                if !span.contains(&flat(&z)) {
                    return false;
                }
                if next_span.insert(&flat(&z)) {
                    next.push(z);
                }
            }
        }
        if !next.is_empty() && next.len() >= power.len() {
            return false;
        }
        power = next;
    }
    power.is_empty()
}

pub fn is_indecomposable(m: &Module) -> bool {
    is_local_with(m, &hom_space(m, m))
}

/// A splitting `M = ker ⊕ im` from an endomorphism, if one is found.
fn find_split(m: &Module, end: &[ModuleMap], seed: u64) -> Option<(Submodule, Submodule)> {
    let n = m.dim() as u64;
    let f = m.field();
    let id = ModuleMap::identity(m);
    let try_one = |x: &ModuleMap| -> Option<(Submodule, Submodule)> {
        let cp = x.total().charpoly();
        for c in roots_in_field(f, &cp) {
            let mut g = x.clone();
            g.add_scaled(&-&c, &id);
            let p = power_blocks(&g, n);
            if p.is_zero() || p.is_iso() {
                continue;
            }
            return Some((p.kernel(), p.image()));
        }
        None
    };
    for b in end {
        if let Some(s) = try_one(b) {
            return Some(s);
        }
    }
    for a in end {
        for b in end {
            if let Some(s) = try_one(&a.compose(b)) {
                return Some(s);
            }
        }
    }
    for (i, a) in end.iter().enumerate() {
        for b in &end[i + 1..] {
            if let Some(s) = try_one(&a.add(b)) {
                return Some(s);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let mut x = ModuleMap::zero(m, m);
        for b in end {
            x.add_scaled(&f.from_i64(rng.gen_range(-3..=3)), b);
        }
        if let Some(s) = try_one(&x) {
            return Some(s);
        }
    }
    None
}

/// Splits `M` into indecomposable modules (with repetitions), each given
/// with its inclusion into `M`.
pub fn split_indecomposables(m: &Module) -> Result<Vec<(Module, ModuleMap)>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let end = hom_space(m, m);
    if is_local_with(m, &end) {
        return Ok(vec![(m.clone(), ModuleMap::identity(m))]);
    }
    let Some((k, i)) = find_split(m, &end, DEFAULT_SEED) else {
        return Err(Error::EnlargeField(
            "endomorphism ring has no idempotent splitting over the ground field".into(),
        ));
    };
    let mut out = Vec::new();
    for part in [k, i] {
        let sq = m.subquotient(&part)?;
        for (x, incl) in split_indecomposables(&sq.sub)? {
            out.push((x, sq.inclusion.compose(&incl)));
        }
    }
    Ok(out)
}

/// Isomorphism test for modules with local endomorphism rings.
pub fn indecomposables_isomorphic(x: &Module, y: &Module) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    let fs = hom_space(x, y);
    let gs = hom_space(y, x);
    fs.iter().any(|f| gs.iter().any(|g| residue(&g.compose(f)).is_some_and(|c| !c.is_zero())))
}

/// Multiplicity of an indecomposable `X` as a summand of `N`: the rank of
/// the pairing `Hom(X,N) × Hom(N,X) -> End(X)/rad`.
pub fn multiplicity_in(x: &Module, n: &Module) -> Result<usize> {
    let fs = hom_space(x, n);
    let gs = hom_space(n, x);
    let f = x.field();
    let mut p = Matrix::zeros(f, fs.len(), gs.len());
    for (i, a) in fs.iter().enumerate() {
        for (j, b) in gs.iter().enumerate() {
            let c = residue(&b.compose(a))
                .ok_or_else(|| Error::Precondition("summand does not have a local endomorphism ring".into()))?;
            p.set(i, j, c);
        }
    }
    Ok(p.rank())
}

fn sort_key(m: &Module) -> (Vec<usize>, Vec<Vec<usize>>, String) {
    (m.dims().to_vec(), m.radical_layers(), format!("{:?}", m.arrow_matrices()))
}

/// Pairwise non-isomorphic indecomposable summands with multiplicities,
/// sorted by dimension vector, then radical layers.
pub fn decompose(m: &Module) -> Result<Vec<Summand>> {
    let parts = split_indecomposables(m)?;
    let mut out: Vec<Summand> = Vec::new();
    for (x, _) in parts {
        match out.iter_mut().find(|s| indecomposables_isomorphic(&s.module, &x)) {
            Some(s) => s.multiplicity += 1,
            None => out.push(Summand { module: x, multiplicity: 1 }),
        }
    }
    out.sort_by_cached_key(|s| sort_key(&s.module));
    Ok(out)
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    is_isomorphic_seeded(m, n, DEFAULT_SEED)
}

/// Searches `Hom(M,N)` for an invertible map; falls back to comparing
/// Krull–Schmidt multiplicities, so a `false` is always certain.
pub fn is_isomorphic_seeded(m: &Module, n: &Module, seed: u64) -> Result<bool> {
    Ok(!matches!(iso_search(m, n, seed)?, IsoOutcome::NotIsomorphic))
}

enum IsoOutcome {
    Map(ModuleMap),
    ByMultiplicities,
    NotIsomorphic,
}

fn iso_search(m: &Module, n: &Module, seed: u64) -> Result<IsoOutcome> {
    if !m.same_algebra(n) {
        return Err(Error::Input("modules over different algebras".into()));
    }
    if m.dims() != n.dims() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if m.is_zero() {
        return Ok(IsoOutcome::Map(ModuleMap::zero(m, n)));
    }
    if m.radical_layers() != n.radical_layers() || m.socle_layers() != n.socle_layers() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let hmn = hom_space(m, n);
    let emm = hom_space(m, m);
    if hmn.len() != emm.len() || hom_space(n, m).len() != emm.len() || hom_space(n, n).len() != emm.len() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIES {
        let mut x = ModuleMap::zero(m, n);
        for b in &hmn {
            x.add_scaled(&f.from_i64(rng.gen_range(-7..=7)), b);
        }
        if x.is_iso() {
            return Ok(IsoOutcome::Map(x));
        }
    }
    if hmn.len() <= GF2_EXHAUSTIVE_MAX {
        for code in 1u64..(1 << hmn.len()) {
            let mut x = ModuleMap::zero(m, n);
            for (i, b) in hmn.iter().enumerate() {
                if code >> i & 1 == 1 {
                    x.add_scaled(&f.one(), b);
                }
            }
            if x.is_iso() {
                return Ok(IsoOutcome::Map(x));
            }
        }
    }
    let parts = decompose(m).map_err(|e| Error::Undecided(format!("isomorphism test: {e}")))?;
    for s in &parts {
        if multiplicity_in(&s.module, n)? != s.multiplicity {
            return Ok(IsoOutcome::NotIsomorphic);
        }
    }
    Ok(IsoOutcome::ByMultiplicities)
}

/// An explicit isomorphism `M -> N`, or `None` when none exists.
pub fn find_isomorphism(m: &Module, n: &Module, seed: u64) -> Result<Option<ModuleMap>> {
    match iso_search(m, n, seed)? {
        IsoOutcome::Map(x) => Ok(Some(x)),
        IsoOutcome::NotIsomorphic => Ok(None),
        IsoOutcome::ByMultiplicities => assemble_isomorphism(m, n).map(Some),
    }
}

fn assemble_isomorphism(m: &Module, n: &Module) -> Result<ModuleMap> {
    let pieces = split_indecomposables(m)?;
    let proj = projections(m, &pieces)?;
    let mut used: Vec<ModuleMap> = Vec::new();
    let mut total = ModuleMap::zero(m, n);
    for ((x, _), p) in pieces.iter().zip(&proj) {
        let fs = hom_space(x, n);
        let gs = hom_space(n, x);
        let mut chosen = None;
        'outer: for a in &fs {
            for b in &gs {
                if residue(&b.compose(a)).is_some_and(|c| !c.is_zero()) {
                    let mut trial = used.clone();
                    trial.push(a.clone());
                    if independent_images(n, &trial) {
                        chosen = Some(a.clone());
                        break 'outer;
                    }
                }
            }
        }
        let Some(a) = chosen else {
            return Err(Error::Undecided("could not assemble an isomorphism".into()));
        };
        total = total.add(&a.compose(p));
        used.push(a);
    }
    if total.is_iso() {
        Ok(total)
    } else {
        Err(Error::Undecided("summand-wise isomorphism did not assemble".into()))
    }
}

fn independent_images(n: &Module, maps: &[ModuleMap]) -> bool {
    let total: usize = maps.iter().map(|g| g.rank()).sum();
    let mut acc = Submodule::zero(n);
    for g in maps {
        acc = acc.sum(&g.image());
    }
    acc.dim() == total
}

/// Projections `M -> X_i` dual to a direct sum decomposition given by
/// inclusions.
fn projections(m: &Module, pieces: &[(Module, ModuleMap)]) -> Result<Vec<ModuleMap>> {
    let f = m.field();
    let nv = m.dims().len();
    let mut out: Vec<Vec<Matrix>> = vec![Vec::new(); pieces.len()];
    for v in 0..nv {
        let mut stacked = Matrix::zeros(f, m.dims()[v], 0);
        for (_, inc) in pieces {
            stacked = stacked.hstack(&inc.blocks[v]);
        }
        let inv = stacked
            .inverse()
            .ok_or_else(|| Error::Internal("summands do not span the module".into()))?;
        let mut row = 0;
        for (k, (x, _)) in pieces.iter().enumerate() {
            let d = x.dims()[v];
            out[k].push(inv.block(row, d, 0, m.dims()[v]));
            row += d;
        }
    }
    Ok(out.into_iter().map(|blocks| ModuleMap { blocks }).collect())
}
