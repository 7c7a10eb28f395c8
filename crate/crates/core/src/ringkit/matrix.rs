use crate::error::{Error, Result};

use super::Ring;

/// Dense row-major matrix; the ring is passed to each operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for {rows}x{cols}", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("inner dimensions differ".into()));
        }
        let mut out = Self::from_fn(self.rows, other.cols, |_, _| ring.zero());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let v = ring.add(out.get(i, j), &ring.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply<R: Ring<Elem = T>>(&self, ring: &R, v: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !ring.is_zero(a) && !ring.is_zero(b) {
                        acc = ring.add(&acc, &ring.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| ring.mul(c, x)).collect() }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

fn require_square<T>(m: &Matrix<T>) -> Result<()> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", m.rows, m.cols)));
    }
    Ok(())
}

/// Characteristic polynomial `det(λI − m)`, ascending coefficients, by Berkowitz's division-free algorithm.
pub fn charpoly<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<Vec<R::Elem>> {
    require_square(m)?;
    let n = m.rows;
    // descending coefficients of the charpoly of the leading r×r block
    let mut c: Vec<R::Elem> = vec![ring.one()];
    for r in 0..n {
        let a = m.get(r, r).clone();
        // toeplitz column: 1, −a, −R S, −R M S, …, −R M^{r−1} S
        let mut col = Vec::with_capacity(r + 2);
        col.push(ring.one());
        col.push(ring.neg(&a));
        let mut s: Vec<R::Elem> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let rs = (0..r).fold(ring.zero(), |acc, j| {
                let x = m.get(r, j);
                if ring.is_zero(x) || ring.is_zero(&s[j]) {
                    acc
                } else {
                    ring.add(&acc, &ring.mul(x, &s[j]))
                }
            });
            col.push(ring.neg(&rs));
            s = (0..r)
                .map(|i| {
                    (0..r).fold(ring.zero(), |acc, j| {
                        let x = m.get(i, j);
                        if ring.is_zero(x) || ring.is_zero(&s[j]) {
                            acc
                        } else {
                            ring.add(&acc, &ring.mul(x, &s[j]))
                        }
                    })
                })
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = ring.zero();
            for (j, cj) in c.iter().enumerate() {
                if j > i {
                    break;
                }
                let t = &col[i - j];
                if !ring.is_zero(t) && !ring.is_zero(cj) {
                    acc = ring.add(&acc, &ring.mul(t, cj));
                }
            }
            next.push(acc);
        }
        c = next;
    }
    c.reverse();
    Ok(c)
}

pub fn det_berkowitz<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem> {
    let c = charpoly(ring, m)?;
    let c0 = c[0].clone();
    Ok(if m.rows % 2 == 0 { c0 } else { ring.neg(&c0) })
}

/// Permutation expansion.
pub fn det_leibniz<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem> {
    require_square(m)?;
    let n = m.rows;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = ring.zero();
    fn rec<R: Ring>(
        ring: &R,
        m: &Matrix<R::Elem>,
        k: usize,
        perm: &mut Vec<usize>,
        sign: bool,
        acc: R::Elem,
        total: &mut R::Elem,
    ) {
        let n = perm.len();
        if ring.is_zero(&acc) {
            return;
        }
        if k == n {
            *total = if sign { ring.sub(total, &acc) } else { ring.add(total, &acc) };
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            let next = ring.mul(&acc, m.get(k, perm[k]));
            rec(ring, m, k + 1, perm, sign ^ (i != k), next, total);
            perm.swap(k, i);
        }
    }
    rec(ring, m, 0, &mut perm, false, ring.one(), &mut total);
    Ok(total)
}

fn triangular<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> bool {
    let n = m.rows;
    let upper = (0..n).all(|i| (0..i).all(|j| ring.is_zero(m.get(i, j))));
    upper || (0..n).all(|i| (i + 1..n).all(|j| ring.is_zero(m.get(i, j))))
}

/// Determinant without division: triangular shortcut, permutation expansion up to 5 rows, Berkowitz beyond.
pub fn det_division_free<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem> {
    require_square(m)?;
    if triangular(ring, m) {
        return Ok(ring.product((0..m.rows).map(|i| m.get(i, i))));
    }
    if m.rows <= 5 {
        det_leibniz(ring, m)
    } else {
        det_berkowitz(ring, m)
    }
}

/// `adj(m) = (−1)^{n−1}(m^{n−1} + c_1 m^{n−2} + … + c_{n−1})` from the characteristic polynomial.
pub fn adjugate<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    require_square(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok(m.clone());
    }
    let c = charpoly(ring, m)?;
    // c ascending: c[n] = 1, descending index j ↔ c[n−j]
    let mut acc = Matrix::identity(ring, n);
    for j in 1..n {
        acc = acc.mul(ring, m)?;
        let cj = &c[n - j];
        for i in 0..n {
            let v = ring.add(acc.get(i, i), cj);
            acc.set(i, i, v);
        }
    }
    Ok(if (n - 1) % 2 == 1 { acc.map(|x| ring.neg(x)) } else { acc })
}

/// `adj(m)·v` from a precomputed characteristic polynomial, by Horner on vectors.
pub(crate) fn adjugate_apply<R: Ring>(ring: &R, m: &Matrix<R::Elem>, c: &[R::Elem], v: &[R::Elem]) -> Vec<R::Elem> {
    let n = m.rows;
    let mut acc = v.to_vec();
    for j in 1..n {
        acc = m.apply(ring, &acc);
        acc = acc.iter().zip(v).map(|(a, b)| ring.add(a, &ring.mul(&c[n - j], b))).collect();
    }
    if (n - 1) % 2 == 1 {
        acc.iter().map(|x| ring.neg(x)).collect()
    } else {
        acc
    }
}
