//! Dense integer matrices and the Smith normal form.
//!
//! Everything here is exact over `BigInt`. The Smith decomposition keeps
//! the unimodular transforms (and the inverse of the row transform) so
//! callers can compute cokernel sections, kernel bases, lattice bases and
//! particular solutions of `A x = b`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += q * row[source]
    fn add_row(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[source * self.cols + j] * q;
            self.data[target * self.cols + j] += v;
        }
    }

    /// col[target] += q * col[source]
    fn add_col(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + source] * q;
            self.data[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self.data[i * self.cols + c]);
            self.data[i * self.cols + c] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next and all of them non-negative.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal entries `d[0..min(rows, cols)]`.
    pub diag: Vec<BigInt>,
    pub rank: usize,
}

impl Smith {
    pub fn new(a: &IntMatrix) -> Smith {
        let (m, n) = (a.rows, a.cols);
        let mut d = a.clone();
        let mut u = IntMatrix::identity(m);
        let mut u_inv = IntMatrix::identity(m);
        let mut v = IntMatrix::identity(n);

        let mut t = 0;
        while t < m.min(n) {
            // smallest non-zero entry in the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if d[(bi, bj)].abs() <= d[(i, j)].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            loop {
                let mut dirty = false;
                for i in (t + 1)..m {
                    if d[(i, t)].is_zero() {
                        continue;
                    }
                    let q = d[(i, t)].div_floor(&d[(t, t)]);
                    let nq = -q.clone();
                    d.add_row(i, t, &nq);
                    u.add_row(i, t, &nq);
                    u_inv.add_col(t, i, &q);
                    if !d[(i, t)].is_zero() {
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        u_inv.swap_cols(t, i);
                        dirty = true;
                    }
                }
                for j in (t + 1)..n {
                    if d[(t, j)].is_zero() {
                        continue;
                    }
                    let q = d[(t, j)].div_floor(&d[(t, t)]);
                    let nq = -q;
                    d.add_col(j, t, &nq);
                    v.add_col(j, t, &nq);
                    if !d[(t, j)].is_zero() {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // divisibility of the trailing block by the pivot
                let mut offender = None;
                'outer: for i in (t + 1)..m {
                    for j in (t + 1)..n {
                        if !d[(i, j)].is_multiple_of(&d[(t, t)]) {
                            offender = Some(i);
                            break 'outer;
                        }
                    }
                }
                match offender {
                    Some(i) => {
                        let one = BigInt::one();
                        d.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        u_inv.add_col(i, t, &(-one));
                    }
                    None => break,
                }
            }
            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
                u_inv.negate_col(t);
            }
            t += 1;
        }
        let diag: Vec<BigInt> = (0..m.min(n)).map(|i| d[(i, i)].clone()).collect();
        let rank = diag.iter().take_while(|x| !x.is_zero()).count();
        Smith { u, u_inv, v, diag, rank }
    }

    /// Basis of the integer kernel of the decomposed matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.v.cols).map(|j| self.v.column(j)).collect()
    }

    /// Basis of the lattice spanned by the columns of the decomposed matrix.
    pub fn image_basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank)
            .map(|i| self.u_inv.column(i).into_iter().map(|x| x * &self.diag[i]).collect())
            .collect()
    }

    /// Some integer `x` with `A x = b`, if one exists.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let y = self.u.mul_vec(b);
        let mut z = vec![BigInt::zero(); self.v.cols];
        for (i, yi) in y.iter().enumerate() {
            if i < self.rank {
                let (q, r) = yi.div_rem(&self.diag[i]);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            } else if !yi.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: usize, cols: usize, vals: &[i64]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = BigInt::from(vals[i * cols + j]);
            }
        }
        m
    }

    #[test]
    fn smith_of_classic_example() {
        let a = mat(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]);
        let s = Smith::new(&a);
        let diag: Vec<i64> = s.diag.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(diag, vec![2, 6, 12]);
        assert_eq!(s.u.mul(&a).mul(&s.v), {
            let mut d = IntMatrix::zeros(3, 3);
            for i in 0..3 {
                d[(i, i)] = s.diag[i].clone();
            }
            d
        });
    }

    #[test]
    fn solve_detects_unsolvable() {
        let a = mat(1, 1, &[2]);
        let s = Smith::new(&a);
        assert!(s.solve(&[BigInt::from(3)]).is_none());
        assert_eq!(s.solve(&[BigInt::from(4)]), Some(vec![BigInt::from(2)]));
    }

    proptest! {
        #[test]
        fn decomposition_is_exact(rows in 1usize..4, cols in 1usize..4,
                                  vals in proptest::collection::vec(-9i64..9, 16)) {
            let a = mat(rows, cols, &vals[..rows * cols]);
            let s = Smith::new(&a);
            let uav = s.u.mul(&a).mul(&s.v);
            for i in 0..rows {
                for j in 0..cols {
                    let expect = if i == j { s.diag[i].clone() } else { BigInt::zero() };
                    prop_assert_eq!(&uav[(i, j)], &expect);
                }
            }
            prop_assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(rows));
            for w in s.diag.windows(2) {
                if !w[1].is_zero() {
                    prop_assert!(w[1].is_multiple_of(&w[0]));
                }
            }
            for k in s.kernel_basis() {
                prop_assert!(a.mul_vec(&k).iter().all(|x| x.is_zero()));
            }
        }
    }
}
