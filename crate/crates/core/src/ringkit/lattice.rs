//! Integer and rational linear algebra: Hermite and Smith normal forms, row spans, kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn row_axpy(rows: &mut [Vec<BigInt>], dst: usize, q: &BigInt, src: usize) {
    if q.is_zero() {
        return;
    }
    let s = rows[src].clone();
    for (d, x) in rows[dst].iter_mut().zip(s.iter()) {
        *d -= q * x;
    }
}

/// Row-style Hermite normal form with transform: `u * a = h`.
///
/// `h` keeps all rows; the first `rank` are the echelon rows, the rest are zero,
/// so the trailing rows of `u` span the left kernel of `a`.
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivots: Vec<usize>,
}

impl Hermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> &[Vec<BigInt>] {
        &self.u[self.pivots.len()..]
    }
}

pub fn hermite(a: &[Vec<BigInt>], ncols: usize) -> Hermite {
    let m = a.len();
    let mut h: IntMatrix = a.to_vec();
    let mut u = identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let piv = (r..m)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()));
            let Some(p) = piv else { break };
            h.swap(r, p);
            u.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_axpy(&mut h, i, &q, r);
                row_axpy(&mut u, i, &q, r);
                if !h[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r >= m || h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut() {
                *x = -&*x;
            }
            for x in u[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            row_axpy(&mut h, i, &q, r);
            row_axpy(&mut u, i, &q, r);
        }
        pivots.push(c);
        r += 1;
    }
    Hermite { h, u, pivots }
}

/// Canonical basis (reduced echelon rows) of the row lattice of `a`.
pub fn hnf(a: &[Vec<BigInt>], ncols: usize) -> IntMatrix {
    let herm = hermite(a, ncols);
    herm.h.into_iter().take(herm.pivots.len()).collect()
}

/// Solves `v = y * rows` for an echelon basis; `None` when `v` is outside the lattice.
pub fn echelon_solve(rows: &[Vec<BigInt>], pivots: &[usize], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut y = Vec::with_capacity(rows.len());
    for (row, &c) in rows.iter().zip(pivots) {
        let (q, rem) = rest[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return None;
        }
        for (d, x) in rest.iter_mut().zip(row) {
            *d -= &q * x;
        }
        y.push(q);
    }
    if rest.iter().all(Zero::is_zero) {
        Some(y)
    } else {
        None
    }
}

pub fn pivot_columns(rows: &[Vec<BigInt>]) -> Vec<usize> {
    rows.iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).unwrap_or(r.len()))
        .collect()
}

/// Smith normal form `p * a * q = d` with `q_inv = q^{-1}`.
pub struct Smith {
    pub diag: Vec<BigInt>,
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub q_inv: IntMatrix,
}

pub fn smith(a: &[Vec<BigInt>], ncols: usize) -> Smith {
    let m = a.len();
    let n = ncols;
    let mut d: IntMatrix = a.to_vec();
    let mut p = identity(m);
    let mut q = identity(n);
    let mut qi = identity(n);
    let col_axpy = |mat: &mut IntMatrix, dst: usize, k: &BigInt, src: usize| {
        for row in mat.iter_mut() {
            let s = row[src].clone();
            row[dst] -= k * s;
        }
    };
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[i][j].is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap(t, bi);
            p.swap(t, bi);
            for row in d.iter_mut() {
                row.swap(t, bj);
            }
            for row in q.iter_mut() {
                row.swap(t, bj);
            }
            qi.swap(t, bj);
            let mut clean = true;
            for i in t + 1..m {
                if d[i][t].is_zero() {
                    continue;
                }
                let k = d[i][t].div_floor(&d[t][t]);
                row_axpy(&mut d, i, &k, t);
                row_axpy(&mut p, i, &k, t);
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d[t][j].is_zero() {
                    continue;
                }
                let k = d[t][j].div_floor(&d[t][t]);
                col_axpy(&mut d, j, &k, t);
                col_axpy(&mut q, j, &k, t);
                let neg = -&k;
                row_axpy(&mut qi, t, &neg, j);
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let mut bad = None;
            'outer: for i in t + 1..m {
                for j in t + 1..n {
                    if !d[i][j].is_multiple_of(&d[t][t]) {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, &minus_one, i);
                    row_axpy(&mut p, t, &minus_one, i);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -&*x;
            }
            for x in p[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let diag = (0..m.min(n)).map(|i| d[i][i].clone()).collect();
    Smith { diag, p, q, q_inv: qi }
}

/// Reduced row echelon form over Q; returns nonzero rows and their pivot columns.
pub fn rref(a: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut rows: Vec<Vec<BigRational>> = a.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, y) in row.iter_mut().zip(pr.iter()) {
                *x -= &k * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rref_contains(rows: &[Vec<BigRational>], pivots: &[usize], v: &[BigRational]) -> bool {
    let mut rest = v.to_vec();
    for (row, &c) in rows.iter().zip(pivots) {
        if rest[c].is_zero() {
            continue;
        }
        let k = rest[c].clone();
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &k * y;
        }
    }
    rest.iter().all(Zero::is_zero)
}

/// Basis of `{y : y * a = 0}` over Q.
pub fn left_kernel_q(a: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let m = a.len();
    let t: Vec<Vec<BigRational>> = (0..ncols).map(|j| (0..m).map(|i| a[i][j].clone()).collect()).collect();
    let (rows, pivots) = rref(&t, m);
    let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![BigRational::zero(); m];
            y[f] = BigRational::one();
            for (row, &c) in rows.iter().zip(&pivots) {
                y[c] = -row[f].clone();
            }
            y
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let n = b[0].len();
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| row.iter().zip(b.iter()).map(|(x, br)| x * &br[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn hermite_transform_and_kernel() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16], &[1, 1, 1]]);
        let h = hermite(&a, 3);
        assert_eq!(mul(&h.u, &a), h.h);
        for k in h.kernel() {
            let prod = mul(&vec![k.clone()], &a);
            assert!(prod[0].iter().all(Zero::is_zero));
        }
        assert_eq!(h.rank(), 3);
    }

    #[test]
    fn smith_of_small_matrix() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a, 3);
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = mul(&mul(&s.p, &a), &s.q);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.diag[i].clone() } else { BigInt::zero() };
                assert_eq!(d[i][j], want);
            }
        }
        let id = mul(&s.q, &s.q_inv);
        assert_eq!(id, identity(3));
    }

    #[test]
    fn echelon_membership() {
        let rows = hnf(&m(&[&[2, 0], &[0, 3]]), 2);
        let piv = pivot_columns(&rows);
        assert!(echelon_solve(&rows, &piv, &[BigInt::from(4), BigInt::from(9)]).is_some());
        assert!(echelon_solve(&rows, &piv, &[BigInt::from(1), BigInt::from(0)]).is_none());
    }
}
