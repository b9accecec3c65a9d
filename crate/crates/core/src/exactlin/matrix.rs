use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

pub type Vector = Vec<Scalar>;

/// Dense row-major matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(field: Field, n: usize, c: &Scalar) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>], cols: usize) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Matrix::from_rows(field, &rows, cols)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, rows: usize, cols: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let na = -a;
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j].sub_mul_assign(&na, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() && !x.is_zero() {
                    o.sub_mul_assign(&-a, x);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape mismatch");
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * o`
    pub fn add_scaled(&mut self, c: &Scalar, o: &Matrix) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if c.is_zero() {
            return;
        }
        let nc = -c;
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            a.sub_mul_assign(&nc, b);
        }
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut r = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows);
        let cols = self.cols + o.cols;
        let mut m = Matrix::zeros(self.field, self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * cols + j] = self.get(i, j).clone();
            }
            for j in 0..o.cols {
                m.data[i * cols + self.cols + j] = o.get(i, j).clone();
            }
        }
        m
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + o.rows, self.cols + o.cols);
        m.paste(0, 0, self);
        m.paste(self.rows, self.cols, o);
        m
    }

    /// Kronecker product; row `(i, k)` sits at `i * o.rows + k`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                m.paste(i * o.rows, j * o.cols, &o.scale(c));
            }
        }
        m
    }

    pub fn paste(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m.data[i * cols.len() + jj] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend(self.row(i).iter().cloned());
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Row-major entries, used as a flat coordinate vector.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_flat(field: Field, rows: usize, cols: usize, data: Vector) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..self.cols {
                    let x = &self.data[r * self.cols + j] * &inv;
                    self.data[r * self.cols + j] = x;
                }
            }
            let pivot_row: Vec<Scalar> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                let base = i * self.cols;
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        self.data[base + c + k].sub_mul_assign(&f, pv);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form with leftmost pivots, scanning rows top-down.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().rank
        } else {
            self.transpose().rref().rank
        }
    }

    /// Basis of the right null space, one vector per free column in
    /// increasing column order.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let r = self.rref();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &r.pivots {
                v[p] = true;
            }
            v
        };
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.matrix.get(i, free);
            }
            out.push(v);
        }
        out
    }

    /// One solution of `self * x = rhs` (free variables set to zero), or
    /// `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vector>> {
        if rhs.len() != self.rows {
            return Err(Error::Input(format!(
                "right-hand side has length {} but matrix has {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::from_cols(self.field, self.rows, &[rhs.to_vec()]));
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in r.pivots.iter().enumerate() {
            x[p] = r.matrix.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let r = self.hstack(&Matrix::identity(self.field, n)).rref();
        if r.rank < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.matrix.block(0, n, n, n))
    }

    /// Characteristic polynomial `det(tI - self)`, coefficients from the
    /// constant term upward (monic). Hessenberg reduction, valid over any field.
    pub fn charpoly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else { continue };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for j in 0..n {
                    h.data.swap(j * n + i, j * n + m);
                }
            }
            let piv = h.get(m, m - 1).clone();
            for i in m + 1..n {
                let u = h.get(i, m - 1) / &piv;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = h.get(m, j).clone();
                    h.data[i * n + j].sub_mul_assign(&u, &t);
                }
                for j in 0..n {
                    let t = h.get(j, i).clone();
                    let cur = h.get(j, m).clone();
                    h.data[j * n + m] = &cur + &(&u * &t);
                }
            }
        }
        // p[k] is the char poly of the leading k x k block.
        let mut p: Vec<Vec<Scalar>> = vec![vec![f.one()]];
        for k in 1..=n {
            let mut next = vec![f.zero(); k + 1];
            let hkk = h.get(k - 1, k - 1).clone();
            for (d, c) in p[k - 1].iter().enumerate() {
                next[d + 1] = &next[d + 1] + c;
                next[d] = &next[d] - &(&hkk * c);
            }
            let mut t = f.one();
            for i in (1..k).rev() {
                t = &t * h.get(i, i - 1);
                let coeff = &t * h.get(i - 1, k - 1);
                if coeff.is_zero() {
                    continue;
                }
                for (d, c) in p[i - 1].iter().enumerate() {
                    next[d] = &next[d] - &(&coeff * c);
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t = &t + self.get(i, i);
        }
        t
    }

    /// The unique eigenvalue `c` (in the ground field) with `self - c`
    /// nilpotent, if it exists.
    pub fn single_eigenvalue(&self) -> Option<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        if n == 0 {
            return None;
        }
        let ch = f.characteristic();
        let c = if ch == 0 || !(n as u64).is_multiple_of(ch) {
            &self.trace() / &f.from_i64(n as i64)
        } else {
            // (c + N)^(p^k) = c for p^k >= n
            let mut q = ch;
            while q < n as u64 {
                q = q.saturating_mul(ch);
            }
            let m = self.pow(q);
            let c = m.get(0, 0).clone();
            if m != Matrix::scalar(f, n, &c) {
                return None;
            }
            c
        };
        if self.sub(&Matrix::scalar(f, n, &c)).is_nilpotent() {
            Some(c)
        } else {
            None
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        let mut p = self.clone();
        let mut rank = p.rank();
        while rank > 0 {
            p = p.mul(self);
            let r = p.rank();
            if r == rank {
                return false;
            }
            rank = r;
        }
        true
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    let na = -a;
    for (yi, xi) in y.iter_mut().zip(x) {
        yi.sub_mul_assign(&na, xi);
    }
}

pub fn scale_vec(v: &[Scalar], a: &Scalar) -> Vector {
    v.iter().map(|x| x * a).collect()
}

/// Incrementally maintained subspace in reduced echelon form. Optionally
/// tracks each echelon row as a combination of the inserted vectors, which
/// gives coordinates with respect to the inserted (independent) vectors.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    track: Option<Vec<Vector>>,
    inserted: usize,
}

impl Span {
    pub fn new(field: Field, dim: usize) -> Span {
        Span { field, dim, rows: Vec::new(), pivots: Vec::new(), track: None, inserted: 0 }
    }

    pub fn tracking(field: Field, dim: usize) -> Span {
        Span { track: Some(Vec::new()), ..Span::new(field, dim) }
    }

    pub fn from_vectors(field: Field, dim: usize, vs: &[Vector]) -> Span {
        let mut s = Span::new(field, dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Coordinates of `v` with respect to [`Span::basis`], if `v` lies in the span.
    pub fn coordinates_in_basis(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    /// `v` minus its projection along the pivots; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p].clone();
            if !c.is_zero() {
                axpy(&mut w, &-&c, r);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Inserts `v`; returns true when it was independent. With tracking,
    /// dependent vectors are not counted as inserted.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let mut w = v.to_vec();
        let mut t = self.track.as_ref().map(|_| {
            let mut t = zero_vec(self.field, self.inserted + 1);
            t[self.inserted] = self.field.one();
            t
        });
        for (i, (r, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = w[p].clone();
            if !c.is_zero() {
                let nc = -&c;
                axpy(&mut w, &nc, r);
                if let (Some(t), Some(tr)) = (t.as_mut(), self.track.as_ref()) {
                    axpy(&mut t[..tr[i].len()], &nc, &tr[i]);
                }
            }
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().unwrap();
        let w = scale_vec(&w, &inv);
        let t = t.map(|t| scale_vec(&t, &inv));
        for i in 0..self.rows.len() {
            let c = self.rows[i][p].clone();
            if !c.is_zero() {
                let nc = -&c;
                axpy(&mut self.rows[i], &nc, &w);
                if let (Some(tr), Some(t)) = (self.track.as_mut(), t.as_ref()) {
                    tr[i].resize(self.inserted + 1, self.field.zero());
                    axpy(&mut tr[i], &nc, t);
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, w);
        self.pivots.insert(pos, p);
        if let Some(tr) = self.track.as_mut() {
            tr.insert(pos, t.unwrap());
        }
        self.inserted += 1;
        true
    }

    /// Coordinates of `v` in terms of the independent inserted vectors (in
    /// insertion order). Requires tracking.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let tr = self.track.as_ref().expect("span without tracking");
        if !self.contains(v) {
            return None;
        }
        let mut out = zero_vec(self.field, self.inserted);
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = &v[p];
            if !c.is_zero() {
                axpy(&mut out[..tr[i].len()], c, &tr[i]);
            }
        }
        Some(out)
    }

    /// Standard basis vectors completing the span to the whole space.
    pub fn complement_std(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.dim];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.dim).filter(|&i| !is_p[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rref_examples() {
        let r = Matrix::identity(q(), 2).rref();
        assert_eq!((r.rank, r.pivots), (2, vec![0, 1]));
        assert_eq!(Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]).rref().rank, 1);
        let gf2 = Field::prime(2).unwrap();
        assert_eq!(Matrix::from_i64(gf2, &[&[1, 1], &[1, 1]]).rref().rank, 1);
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::from_i64(q(), &[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![q().from_i64(-1), q().one()]]);
        assert!(Matrix::identity(q(), 3).kernel_basis().is_empty());
        let k = Matrix::zeros(q(), 2, 3).kernel_basis();
        assert_eq!(k.len(), 3);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(x.is_one(), i == j);
            }
        }
    }

    #[test]
    fn solve_examples() {
        let f = q();
        let one_two = vec![f.from_i64(1), f.from_i64(2)];
        assert_eq!(Matrix::identity(f, 2).solve(&one_two).unwrap(), Some(one_two.clone()));
        assert_eq!(
            Matrix::from_i64(f, &[&[1, 1]]).solve(&[f.zero()]).unwrap(),
            Some(vec![f.zero(), f.zero()])
        );
        assert_eq!(Matrix::from_i64(f, &[&[1], &[1]]).solve(&one_two).unwrap(), None);
        assert!(Matrix::identity(f, 2).solve(&[f.one()]).is_err());
    }

    #[test]
    fn charpoly_of_companion() {
        // t^3 - 2t^2 + 3t - 5
        let f = q();
        let m = Matrix::from_i64(f, &[&[0, 0, 5], &[1, 0, -3], &[0, 1, 2]]);
        let cp = m.charpoly();
        let want: Vec<Scalar> = [-5, 3, -2, 1].iter().map(|&x| f.from_i64(x)).collect();
        assert_eq!(cp, want);
        let m = Matrix::from_i64(f, &[&[2, 1, 0], &[1, 3, 1], &[0, 4, 1]]);
        let cp = m.charpoly();
        assert_eq!(cp[2], -&m.trace());
    }

    #[test]
    fn inverse_and_nilpotent() {
        let f = q();
        let m = Matrix::from_i64(f, &[&[2, 1], &[1, 1]]);
        assert!(m.mul(&m.inverse().unwrap()).is_identity());
        assert!(Matrix::from_i64(f, &[&[1, 1], &[1, 1]]).inverse().is_none());
        assert!(Matrix::from_i64(f, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).is_nilpotent());
        assert!(!Matrix::from_i64(f, &[&[1, 1], &[0, 0]]).is_nilpotent());
    }

    #[test]
    fn span_coordinates() {
        let f = q();
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vector>();
        let mut s = Span::tracking(f, 3);
        assert!(s.insert(&v(&[0, 1, 1])));
        assert!(s.insert(&v(&[1, 1, 0])));
        assert!(!s.insert(&v(&[1, 2, 1])));
        assert_eq!(s.coordinates(&v(&[2, 3, 1])).unwrap(), v(&[1, 2]));
        assert!(s.coordinates(&v(&[0, 0, 1])).is_none());
        assert_eq!(s.complement_std().len(), 1);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-4i64..=4, rows * cols).prop_map(move |xs| {
            let data = xs.iter().map(|&x| field.from_i64(x)).collect();
            Matrix::from_flat(field, rows, cols, data)
        })
    }

    fn fields() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Field::Rationals), Just(Field::prime(2).unwrap()), Just(Field::prime(5).unwrap())]
    }

    proptest! {
        #[test]
        fn rank_nullity(m in (fields(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| matrix(f, r, c))) {
            let c = m.cols();
            let ker = m.kernel_basis();
            prop_assert_eq!(m.rank() + ker.len(), c);
            for v in &ker {
                prop_assert!(is_zero_vec(&m.mul_vec(v)));
            }
            prop_assert_eq!(m.transpose().rank(), m.rank());
        }

        #[test]
        fn kron_is_multiplicative(
            (a, b, c, d) in fields().prop_flat_map(|f| (matrix(f, 2, 3), matrix(f, 2, 2), matrix(f, 3, 2), matrix(f, 2, 1)))
        ) {
            prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
            prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
        }

        #[test]
        fn inverse_and_solve(m in fields().prop_flat_map(|f| matrix(f, 4, 4)), xs in proptest::collection::vec(-3i64..=3, 4)) {
            let f = m.field();
            let x: Vector = xs.iter().map(|&v| f.from_i64(v)).collect();
            let rhs = m.mul_vec(&x);
            let y = m.solve(&rhs).unwrap().expect("rhs lies in the image");
            prop_assert_eq!(m.mul_vec(&y), rhs);
            match m.inverse() {
                Some(inv) => {
                    prop_assert_eq!(m.rank(), 4);
                    prop_assert!(m.mul(&inv).is_identity());
                }
                None => prop_assert!(m.rank() < 4),
            }
        }
    }
}
