//! Dense arbitrary-precision integer matrices and the exact linear algebra
//! used throughout: fraction-free determinants, characteristic polynomials,
//! Smith and Hermite normal forms with transform tracking, integer kernels,
//! and lattice membership/intersection.

use crate::num::{int, Int, Rat};
use crate::poly::IntPoly;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Int) -> IntMat {
        let mut m = self.clone();
        for v in &mut m.data {
            *v *= c;
        }
        m
    }

    pub fn pow(&self, e: u32) -> IntMat {
        assert!(self.is_square());
        let mut acc = IntMat::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &IntMat) -> IntMat {
        let mut m = IntMat::zero(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_vec_rat(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                    .fold(Rat::zero(), |s, x| s + x)
            })
            .collect()
    }

    /// Fraction-free Bareiss determinant.
    pub fn det(&self) -> Int {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<Int>, i: usize, j: usize| m[i * n + j].clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return Int::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &at(&m, i, j) * &at(&m, k, k) - &at(&m, i, k) * &at(&m, k, j);
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = Int::zero();
            }
            prev = at(&m, k, k);
        }
        let d = at(&m, n - 1, n - 1);
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Characteristic polynomial det(xI - M), computed by evaluation at
    /// n+1 integer points and exact Lagrange interpolation.
    pub fn charpoly(&self) -> IntPoly {
        assert!(self.is_square());
        let n = self.rows;
        let pts: Vec<i64> = (0..=n as i64).collect();
        let vals: Vec<Int> = pts
            .iter()
            .map(|&x| {
                let mut m = self.scale(&int(-1));
                for i in 0..n {
                    m[(i, i)] += int(x);
                }
                m.det()
            })
            .collect();
        IntPoly::interpolate(&pts, &vals)
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &IntMat {
    type Output = IntMat;
    fn add(self, rhs: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        IntMat { rows: self.rows, cols: self.cols, data }
    }
}

impl Sub for &IntMat {
    type Output = IntMat;
    fn sub(self, rhs: &IntMat) -> IntMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        IntMat { rows: self.rows, cols: self.cols, data }
    }
}

impl Mul for &IntMat {
    type Output = IntMat;
    fn mul(self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = IntMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }
}

/// Smith normal form D = P * M * Q with P, Q unimodular; diagonal entries
/// nonnegative and d1 | d2 | ... .
pub struct Snf {
    pub d: IntMat,
    pub p: IntMat,
    pub q: IntMat,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMat) -> Snf {
    let mut d = m.clone();
    let mut p = IntMat::identity(m.rows);
    let mut q = IntMat::identity(m.cols);
    let n = m.rows.min(m.cols);

    for t in 0..n {
        loop {
            // Find a pivot of least absolute value in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if !d[(i, j)].is_zero()
                        && best.map_or(true, |(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return normalize_snf(d, p, q, t);
            };
            swap_rows(&mut d, &mut p, t, bi);
            swap_cols(&mut d, &mut q, t, bj);

            let mut clean = true;
            for i in t + 1..d.rows {
                if !d[(i, t)].is_zero() {
                    let f = floor_quot(&d[(i, t)], &d[(t, t)]);
                    row_sub(&mut d, &mut p, i, t, &f);
                    if !d[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d[(t, j)].is_zero() {
                    let f = floor_quot(&d[(t, j)], &d[(t, t)]);
                    col_sub(&mut d, &mut q, j, t, &f);
                    if !d[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility d_t | trailing entries.
            let mut offender = None;
            'scan: for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    let one = Int::one();
                    row_add(&mut d, &mut p, t, i, &one);
                }
                None => break,
            }
        }
    }
    normalize_snf(d, p, q, n)
}

fn normalize_snf(mut d: IntMat, mut p: IntMat, q: IntMat, _rank_bound: usize) -> Snf {
    let n = d.rows.min(d.cols);
    for i in 0..n {
        if d[(i, i)].is_negative() {
            for j in 0..d.cols {
                d[(i, j)] = -d[(i, j)].clone();
            }
            for j in 0..p.cols {
                p[(i, j)] = -p[(i, j)].clone();
            }
        }
    }
    Snf { d, p, q }
}

fn swap_rows(d: &mut IntMat, p: &mut IntMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols {
        let (x, y) = (d[(a, j)].clone(), d[(b, j)].clone());
        d[(a, j)] = y;
        d[(b, j)] = x;
    }
    for j in 0..p.cols {
        let (x, y) = (p[(a, j)].clone(), p[(b, j)].clone());
        p[(a, j)] = y;
        p[(b, j)] = x;
    }
}

fn swap_cols(d: &mut IntMat, q: &mut IntMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows {
        let (x, y) = (d[(i, a)].clone(), d[(i, b)].clone());
        d[(i, a)] = y;
        d[(i, b)] = x;
    }
    for i in 0..q.rows {
        let (x, y) = (q[(i, a)].clone(), q[(i, b)].clone());
        q[(i, a)] = y;
        q[(i, b)] = x;
    }
}

/// row_i -= f * row_t, tracked in P.
fn row_sub(d: &mut IntMat, p: &mut IntMat, i: usize, t: usize, f: &Int) {
    for j in 0..d.cols {
        let v = &d[(i, j)] - &(f * &d[(t, j)]);
        d[(i, j)] = v;
    }
    for j in 0..p.cols {
        let v = &p[(i, j)] - &(f * &p[(t, j)]);
        p[(i, j)] = v;
    }
}

/// row_t += f * row_i, tracked in P.
fn row_add(d: &mut IntMat, p: &mut IntMat, t: usize, i: usize, f: &Int) {
    for j in 0..d.cols {
        let v = &d[(t, j)] + &(f * &d[(i, j)]);
        d[(t, j)] = v;
    }
    for j in 0..p.cols {
        let v = &p[(t, j)] + &(f * &p[(i, j)]);
        p[(t, j)] = v;
    }
}

/// col_j -= f * col_t, tracked in Q.
fn col_sub(d: &mut IntMat, q: &mut IntMat, j: usize, t: usize, f: &Int) {
    for i in 0..d.rows {
        let v = &d[(i, j)] - &(f * &d[(i, t)]);
        d[(i, j)] = v;
    }
    for i in 0..q.rows {
        let v = &q[(i, j)] - &(f * &q[(i, t)]);
        q[(i, j)] = v;
    }
}

fn floor_quot(a: &Int, b: &Int) -> Int {
    a.div_floor(b)
}

/// Row-style Hermite normal form: pivots positive, strictly right-stepping,
/// entries above a pivot reduced into [0, pivot). Zero rows dropped.
pub fn hermite_normal_form(basis: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let cols = basis[0].len();
    let mut rows: Vec<Vec<Int>> = basis.to_vec();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        // Reduce column `col` among rows >= pivot_row by gcd elimination.
        loop {
            let mut idx: Option<usize> = None;
            for r in pivot_row..rows.len() {
                if !rows[r][col].is_zero()
                    && idx.map_or(true, |b| rows[r][col].abs() < rows[b][col].abs())
                {
                    idx = Some(r);
                }
            }
            let Some(m) = idx else { break };
            rows.swap(pivot_row, m);
            let mut again = false;
            for r in pivot_row + 1..rows.len() {
                if !rows[r][col].is_zero() {
                    let f = rows[r][col].div_floor(&rows[pivot_row][col]);
                    for c in 0..cols {
                        let v = &rows[r][c] - &(&f * &rows[pivot_row][c]);
                        rows[r][c] = v;
                    }
                    if !rows[r][col].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if pivot_row < rows.len() && !rows[pivot_row][col].is_zero() {
            if rows[pivot_row][col].is_negative() {
                for c in 0..cols {
                    rows[pivot_row][c] = -rows[pivot_row][c].clone();
                }
            }
            // Reduce entries above the pivot.
            for r in 0..pivot_row {
                let f = rows[r][col].div_floor(&rows[pivot_row][col]);
                if !f.is_zero() {
                    for c in 0..cols {
                        let v = &rows[r][c] - &(&f * &rows[pivot_row][c]);
                        rows[r][c] = v;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Solve x * B = v over the integers for a row-basis B (rows spanning a lattice).
/// Returns the coordinates if v lies in the lattice.
pub fn lattice_coords(basis: &[Vec<Int>], v: &[Int]) -> Option<Vec<Int>> {
    if basis.is_empty() {
        return if v.iter().all(|x| x.is_zero()) { Some(Vec::new()) } else { None };
    }
    // Work on an HNF copy with op tracking back to the original rows.
    let rows = basis.len();
    let cols = basis[0].len();
    let mut aug: Vec<Vec<Int>> = basis
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..rows).map(|j| if i == j { Int::one() } else { Int::zero() }));
            row
        })
        .collect();
    let mut h = hermite_aug(&mut aug, cols);
    // Greedy reduction of v against pivot rows.
    let mut rem: Vec<Int> = v.to_vec();
    let mut coeffs = vec![Int::zero(); rows];
    h.retain(|r| r.0 < cols);
    for (pcol, row) in &h {
        if rem[*pcol].is_zero() {
            continue;
        }
        let (q, r) = rem[*pcol].div_mod_floor(&row.0[*pcol]);
        if !r.is_zero() {
            return None;
        }
        for c in 0..cols {
            let d = &rem[c] - &(&q * &row.0[c]);
            rem[c] = d;
        }
        for c in 0..rows {
            let d = &coeffs[c] + &(&q * &row.1[c]);
            coeffs[c] = d;
        }
    }
    if rem.iter().all(|x| x.is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}

type AugRow = (usize, (Vec<Int>, Vec<Int>));

/// HNF of the left `cols` block with the right block carried along.
/// Returns rows tagged with their pivot column, in pivot order.
fn hermite_aug(aug: &mut [Vec<Int>], cols: usize) -> Vec<AugRow> {
    let total = aug.first().map_or(0, |r| r.len());
    let n = aug.len();
    let mut pivot_row = 0usize;
    let mut pivots: Vec<usize> = Vec::new();
    for col in 0..cols {
        loop {
            let mut idx: Option<usize> = None;
            for r in pivot_row..n {
                if !aug[r][col].is_zero()
                    && idx.map_or(true, |b| aug[r][col].abs() < aug[b][col].abs())
                {
                    idx = Some(r);
                }
            }
            let Some(m) = idx else { break };
            aug.swap(pivot_row, m);
            let mut again = false;
            for r in pivot_row + 1..n {
                if !aug[r][col].is_zero() {
                    let f = aug[r][col].div_floor(&aug[pivot_row][col]);
                    for c in 0..total {
                        let v = &aug[r][c] - &(&f * &aug[pivot_row][c]);
                        aug[r][c] = v;
                    }
                    if !aug[r][col].is_zero() {
                        again = true;
                    }
                }
            }
            if !again {
                break;
            }
        }
        if pivot_row < n && !aug[pivot_row][col].is_zero() {
            if aug[pivot_row][col].is_negative() {
                for c in 0..total {
                    aug[pivot_row][c] = -aug[pivot_row][c].clone();
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
    }
    pivots
        .iter()
        .enumerate()
        .map(|(i, &pc)| (pc, (aug[i][..cols].to_vec(), aug[i][cols..].to_vec())))
        .collect()
}

/// Basis (rows) for the integer kernel {x : x * M = 0}.
pub fn left_kernel(m: &IntMat) -> Vec<Vec<Int>> {
    right_kernel(&m.transpose())
}

/// Basis (rows) for {x : M * x = 0} returned as row vectors.
pub fn right_kernel(m: &IntMat) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    // D = P M Q => M (Q e_i) = P^-1 D e_i; kernel spanned by columns q_i of Q
    // whose diagonal entry is zero (or beyond the diagonal).
    let n = m.cols;
    let k = m.rows.min(m.cols);
    let mut out = Vec::new();
    for i in 0..n {
        let zero_diag = i >= k || snf.d[(i, i)].is_zero();
        if zero_diag {
            let col: Vec<Int> = (0..n).map(|r| snf.q[(r, i)].clone()).collect();
            out.push(col);
        }
    }
    out
}

/// Exact inverse of a unimodular integer matrix.
pub fn unimodular_inverse(m: &IntMat) -> IntMat {
    assert!(m.is_square());
    let n = m.rows;
    let det = m.det();
    assert!(det.abs().is_one(), "matrix is not unimodular");
    // Adjugate via cofactors; n is small everywhere this is used.
    let mut adj = IntMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut sub = IntMat::zero(n - 1, n - 1);
            for (ri, r) in (0..n).filter(|&r| r != i).enumerate() {
                for (ci, c) in (0..n).filter(|&c| c != j).enumerate() {
                    sub[(ri, ci)] = m[(r, c)].clone();
                }
            }
            let cof = sub.det();
            adj[(j, i)] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    if det.is_one() {
        adj
    } else {
        adj.scale(&int(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_matches_handchecks() {
        let m = IntMat::from_i64(&[&[-1, 1], &[0, 1]]);
        assert_eq!(m.det(), int(-1));
        let m = IntMat::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(m.det(), int(-3));
        let z = IntMat::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(z.det(), int(0));
    }

    #[test]
    fn charpoly_small() {
        let m = IntMat::from_i64(&[&[0, -1], &[-1, 1]]);
        // det(xI - M) = x^2 - x - 1
        let p = m.charpoly();
        assert_eq!(p.coeffs(), &[int(-1), int(-1), int(1)]);
    }

    #[test]
    fn snf_transforms_consistent() {
        let m = IntMat::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let snf = smith_normal_form(&m);
        assert_eq!(&(&snf.p * &m) * &snf.q, snf.d);
        assert!(snf.p.det().abs().is_one());
        assert!(snf.q.det().abs().is_one());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        assert_eq!(diag, vec![int(2), int(2), int(156)]);
    }

    #[test]
    fn hnf_canonicalizes() {
        let b1 = vec![vec![int(2), int(1), int(0), int(0)], vec![int(0), int(0), int(3), int(1)]];
        let b2 = vec![
            vec![int(2), int(1), int(3), int(1)],
            vec![int(0), int(0), int(-3), int(-1)],
        ];
        assert_eq!(hermite_normal_form(&b1), hermite_normal_form(&b2));
    }

    #[test]
    fn lattice_membership() {
        let b = vec![vec![int(2), int(1)], vec![int(0), int(3)]];
        assert!(lattice_coords(&b, &[int(2), int(4)]).is_some());
        assert!(lattice_coords(&b, &[int(1), int(0)]).is_none());
        let c = lattice_coords(&b, &[int(4), int(5)]).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn kernel_and_inverse() {
        let m = IntMat::from_i64(&[&[1, 2], &[2, 4]]);
        let k = right_kernel(&m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));

        let u = IntMat::from_i64(&[&[1, 0], &[2, 1]]);
        let ui = unimodular_inverse(&u);
        assert_eq!(&u * &ui, IntMat::identity(2));
    }
}
