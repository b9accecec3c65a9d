//! Maps between presented algebras given by images of arrows.

use crate::exactlin::{is_zero_vec, zero_vec, Matrix, Scalar, Vector};

use super::algebra::Algebra;
use super::quiver::{Presentation, Relation};

/// Image of a path under the arrow assignment. With `anti` the order of
/// the factors is reversed.
pub fn path_image(dst: &Algebra, images: &[Vector], path: &[usize], anti: bool) -> Option<Vector> {
    let mut it: Box<dyn Iterator<Item = &usize>> =
        if anti { Box::new(path.iter().rev()) } else { Box::new(path.iter()) };
    let mut acc = images[*it.next()?].clone();
    for &a in it {
        acc = dst.multiply(&acc, &images[a]);
    }
    Some(acc)
}

fn relation_vanishes(dst: &Algebra, images: &[Vector], rel: &Relation, anti: bool) -> bool {
    let mut sum = zero_vec(dst.field(), dst.dim());
    for (c, p) in rel {
        let v = path_image(dst, images, p, anti).unwrap();
        for (s, x) in sum.iter_mut().zip(&v) {
            *s = &*s + &(c * x);
        }
    }
    is_zero_vec(&sum)
}

/// Whether the arrow images define a homomorphism (or anti-homomorphism)
/// from the algebra presented by `src` to `dst` fixing the vertices.
pub fn is_arrow_map(src: &Presentation, dst: &Algebra, images: &[Vector], anti: bool) -> bool {
    if images.len() != src.quiver.arrows.len() || src.quiver.vertices.len() != dst.num_vertices() {
        return false;
    }
    for (a, v) in src.quiver.arrows.iter().zip(images) {
        let (s, t) = if anti { (a.target, a.source) } else { (a.source, a.target) };
        let ok = v.iter().enumerate().all(|(i, x)| {
            x.is_zero() || (dst.basis()[i].source == s && dst.basis()[i].target == t && !dst.basis()[i].is_trivial())
        });
        if !ok {
            return false;
        }
    }
    src.relations.iter().all(|r| relation_vanishes(dst, images, r, anti))
}

/// Matrix of the induced linear map on `dst` when `src` presents `dst`
/// itself, column `i` being the image of basis word `i`.
pub fn induced_matrix(dst: &Algebra, images: &[Vector], anti: bool) -> Matrix {
    image_matrix(dst, dst, images, anti)
}

/// Matrix of the map `src → dst` given by arrow images, in the path bases.
fn image_matrix(src: &Algebra, dst: &Algebra, images: &[Vector], anti: bool) -> Matrix {
    let cols: Vec<Vector> = src
        .basis()
        .iter()
        .map(|w| {
            if w.is_trivial() {
                dst.basis_vector(dst.unit(w.source))
            } else {
                path_image(dst, images, &w.letters, anti).unwrap()
            }
        })
        .collect();
    Matrix::from_cols(dst.field(), dst.dim(), &cols)
}

/// Search for arrow images (combinations of `dst` arrows with coefficients
/// in {0, 1, -1}) giving an isomorphism, or with `anti` an
/// anti-isomorphism, from the algebra presented by `src` onto `dst`.
/// With `involutive`, `src` must present `dst` and the map must square to
/// the identity.
pub fn find_arrow_map(src: &Presentation, dst: &Algebra, anti: bool, involutive: bool) -> Option<Vec<Vector>> {
    let nv = dst.num_vertices();
    if src.quiver.vertices.len() != nv {
        return None;
    }
    let a = match Algebra::from_presentation(src) {
        Ok(a) if a.dim() == dst.dim() => a,
        _ => return None,
    };
    let f = dst.field();
    let n = dst.dim();
    let dst_arrows: Vec<(usize, usize, Vector)> = dst
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| (a.source, a.target, dst.arrow_element(i)))
        .collect();
    let block_of = |a: usize| {
        let ar = &src.quiver.arrows[a];
        if anti {
            (ar.target, ar.source)
        } else {
            (ar.source, ar.target)
        }
    };
    // arrow counts per block must agree
    let mut counts = vec![vec![0i64; nv]; nv];
    for a in 0..src.quiver.arrows.len() {
        let (s, t) = block_of(a);
        counts[s][t] += 1;
    }
    for (s, t, _) in &dst_arrows {
        counts[*s][*t] -= 1;
    }
    if counts.iter().flatten().any(|&c| c != 0) {
        return None;
    }
    let coeffs = [f.one(), -f.one(), f.zero()];
    let mut candidates: Vec<Vec<(Vec<usize>, Vector)>> = Vec::new();
    for a in 0..src.quiver.arrows.len() {
        let (s, t) = block_of(a);
        let gens: Vec<&Vector> = dst_arrows.iter().filter(|x| x.0 == s && x.1 == t).map(|x| &x.2).collect();
        let mut list = Vec::new();
        let total = 3usize.pow(gens.len() as u32);
        for code in 0..total {
            let mut c = code;
            let mut v: Vector = vec![f.zero(); n];
            let mut pattern = Vec::new();
            for g in &gens {
                let k = c % 3;
                c /= 3;
                pattern.push(k);
                for (x, y) in v.iter_mut().zip(g.iter()) {
                    *x = &*x + &(&coeffs[k] * y);
                }
            }
            if !is_zero_vec(&v) {
                list.push((pattern, v));
            }
        }
        candidates.push(list);
    }
    // relations checkable once all their arrows are assigned
    let mut ready: Vec<Vec<&Relation>> = vec![Vec::new(); src.quiver.arrows.len()];
    for r in &src.relations {
        let last = r.iter().flat_map(|(_, p)| p.iter().copied()).max();
        if let Some(l) = last {
            ready[l].push(r);
        }
    }
    let mut images: Vec<Vector> = Vec::new();
    search(src, &a, dst, anti, involutive, &candidates, &ready, &mut images)
}

#[allow(clippy::too_many_arguments)]
fn search(
    src: &Presentation,
    src_alg: &Algebra,
    dst: &Algebra,
    anti: bool,
    involutive: bool,
    candidates: &[Vec<(Vec<usize>, Vector)>],
    ready: &[Vec<&Relation>],
    images: &mut Vec<Vector>,
) -> Option<Vec<Vector>> {
    let k = images.len();
    if k == candidates.len() {
        if !is_arrow_map(src, dst, images, anti) {
            return None;
        }
        let m = image_matrix(src_alg, dst, images, anti);
        if m.rank() != dst.dim() {
            return None;
        }
        if involutive && !m.mul(&m).is_identity() {
            return None;
        }
        return Some(images.clone());
    }
    for (_, v) in &candidates[k] {
        images.push(v.clone());
        let padded: Vec<Vector> = {
            let mut p = images.clone();
            p.resize(candidates.len(), v.clone());
            p
        };
        let ok = ready[k].iter().all(|r| relation_vanishes(dst, &padded, r, anti));
        if ok {
            if let Some(found) = search(src, src_alg, dst, anti, involutive, candidates, ready, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Whether two presentations over the same vertices define isomorphic
/// algebras via a vertex-fixing change of arrows.
pub fn presentations_equivalent(p: &Presentation, q: &Presentation) -> bool {
    let Ok(b) = Algebra::from_presentation(q) else {
        return false;
    };
    find_arrow_map(p, &b, false, false).is_some()
}

/// Coordinates helper for tests and reports.
pub fn scalar_combination(alg: &Algebra, terms: &[(Scalar, usize)]) -> Vector {
    let mut v = vec![alg.field().zero(); alg.dim()];
    for (c, a) in terms {
        let e = alg.arrow_element(*a);
        for (x, y) in v.iter_mut().zip(&e) {
            *x = &*x + &(c * y);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{S82, S825};

    fn pres(s: &str) -> Presentation {
        Presentation::from_json_str(s).unwrap()
    }

    #[test]
    fn relabeled_arrows() {
        let a = pres(S825);
        // the arrows of S825 listed in another order under other names
        let b = pres(
            r#"{"field":{"kind":"Q"},"vertices":["1","2"],
            "arrows":[{"name":"d","from":"2","to":"2"},{"name":"b","from":"2","to":"1"},
                      {"name":"c","from":"2","to":"2"},{"name":"a","from":"1","to":"2"}],
            "relations":[[{"coeff":"1","path":["c","c"]}],[{"coeff":"1","path":["d","d"]}],
                         [{"coeff":"1","path":["c","d"]}],[{"coeff":"1","path":["d","c"]}],
                         [{"coeff":"1","path":["a","b"]}]],
            "order":["1","2"]}"#,
        );
        let b_alg = Algebra::from_presentation(&b).unwrap();
        assert!(find_arrow_map(&a, &b_alg, false, false).is_some());
        assert!(presentations_equivalent(&a, &b));
    }

    #[test]
    fn distinguishes_algebras() {
        let a = pres(S82);
        let b = Algebra::from_presentation(&pres(S825)).unwrap();
        assert!(find_arrow_map(&a, &b, false, false).is_none());
        let a_alg = Algebra::from_presentation(&a).unwrap();
        assert!(find_arrow_map(&a, &a_alg, false, false).is_some());
    }
}
