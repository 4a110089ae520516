//! Seifert-form algebra over exact integers: validation, isometric structure,
//! Alexander polynomial, connected sum and mirror, metabolizers, and the
//! coprime splitting of metabolizers of direct sums.

use crate::error::{Error, Result};
use crate::mat::{
    hermite_normal_form, lattice_coords, left_kernel, smith_normal_form, IntMat,
};
use crate::num::{int, Int};
use crate::poly::IntPoly;
pub use crate::poly::integer_bezout;
use num_traits::{One, Signed, Zero};

/// A Seifert form: a square integer matrix whose skew part A - A^t is
/// unimodular. Immutable after validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertForm {
    matrix: IntMat,
}

impl SeifertForm {
    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.rows
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    /// The intersection form A - A^t.
    pub fn skew_part(&self) -> IntMat {
        &self.matrix - &self.matrix.transpose()
    }

    /// det A, nonzero iff the form is non-singular.
    pub fn det(&self) -> Int {
        self.matrix.det()
    }
}

/// Validate a square integer matrix as a Seifert form.
pub fn validate_seifert(matrix: IntMat) -> Result<SeifertForm> {
    if !matrix.is_square() || matrix.rows == 0 || matrix.rows % 2 != 0 {
        return Err(Error::OddSize(matrix.rows, matrix.cols));
    }
    let skew = &matrix - &matrix.transpose();
    let d = skew.det();
    if !d.is_one() {
        return Err(Error::NonUnimodularSkewPart(d.to_string()));
    }
    Ok(SeifertForm { matrix })
}

pub fn seifert_from_i64(rows: &[&[i64]]) -> Result<SeifertForm> {
    validate_seifert(IntMat::from_i64(rows))
}

/// The isometric structure G = (A - A^t)^{-1} A; integral because the skew
/// part is unimodular.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsometricStructure {
    pub matrix: IntMat,
}

pub fn isometric_structure(form: &SeifertForm) -> IsometricStructure {
    let skew_inv = crate::mat::unimodular_inverse(&form.skew_part());
    let g = &skew_inv * form.matrix();
    IsometricStructure { matrix: g }
}

/// Alexander polynomial det(A - t A^t), computed by exact interpolation.
pub fn alexander(form: &SeifertForm) -> IntPoly {
    let n = form.size();
    let at = form.matrix().transpose();
    let pts: Vec<i64> = (0..=n as i64).collect();
    let vals: Vec<Int> = pts
        .iter()
        .map(|&t| (&form.matrix().clone() - &at.scale(&int(t))).det())
        .collect();
    IntPoly::interpolate(&pts, &vals)
}

/// det(xI - G) = +- x^{2g} Delta(1 - 1/x), an identity for every valid form.
pub fn charpoly_identity_check(form: &SeifertForm) -> bool {
    let g = isometric_structure(form);
    let cp = g.matrix.charpoly();
    let rhs = charpoly_from_alexander(&alexander(form), form.size());
    cp == rhs || cp == rhs.neg()
}

/// x^{2g} Delta(1 - 1/x) = sum_j c_j x^{2g-j} (x-1)^j for Delta = sum c_j t^j.
pub fn charpoly_from_alexander(delta: &IntPoly, size: usize) -> IntPoly {
    let mut acc = IntPoly::zero();
    let xm1 = IntPoly::from_i64(&[-1, 1]);
    for j in 0..=size {
        let c = delta.coeff(j);
        if c.is_zero() {
            continue;
        }
        let mut term = IntPoly::monomial(c, size - j);
        for _ in 0..j {
            term = term.mul(&xm1);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Block-diagonal sum, modeling connected sum of knots.
pub fn block_sum(a: &SeifertForm, b: &SeifertForm) -> SeifertForm {
    SeifertForm { matrix: a.matrix().block_diag(b.matrix()) }
}

/// Mirror image with reversed orientation: -A^t. Alexander polynomial is
/// unchanged up to units; signature profiles negate.
pub fn mirror(form: &SeifertForm) -> SeifertForm {
    SeifertForm { matrix: form.matrix().transpose().scale(&int(-1)) }
}

/// An s-invariant direct summand Z with Z = Z^perp; basis rows are kept in
/// Hermite normal form, so equal lattices compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Metabolizer {
    ambient: usize,
    basis: Vec<Vec<Int>>,
}

impl Metabolizer {
    pub fn new(ambient: usize, basis: Vec<Vec<Int>>) -> Self {
        let basis = hermite_normal_form(&basis);
        Metabolizer { ambient, basis }
    }

    pub fn basis(&self) -> &[Vec<Int>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        lattice_coords(&self.basis, v).is_some()
    }

    /// Check all three metabolizer invariants against the given form.
    pub fn verify(&self, form: &SeifertForm) -> bool {
        let n = form.size();
        if self.ambient != n || self.rank() != form.genus() {
            return false;
        }
        // Direct summand: all SNF invariant factors 1.
        let b = IntMat::from_rows(self.basis.clone());
        let snf = smith_normal_form(&b);
        let diag = snf.diagonal();
        if diag.len() != form.genus() || diag.iter().any(|d| !d.is_one()) {
            return false;
        }
        // s-invariance: G v stays in the lattice for each basis vector.
        let g = isometric_structure(form).matrix;
        for v in &self.basis {
            let gv = g.mul_vec(v);
            if !self.contains(&gv) {
                return false;
            }
        }
        // Z <= Z^perp under the intersection form; with rank g and saturation
        // this forces Z = Z^perp.
        let skew = form.skew_part();
        for v in &self.basis {
            let sv = skew.mul_vec(v);
            for w in &self.basis {
                let pairing: Int = w.iter().zip(&sv).map(|(a, b)| a * b).sum();
                if !pairing.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// All rank-1 metabolizers of a genus-1 form: primitive integral eigenvectors
/// of G. Empty iff the form is not algebraically slice.
pub fn find_rank1_metabolizers(form: &SeifertForm) -> Vec<Metabolizer> {
    assert_eq!(form.size(), 2, "genus-1 operation");
    let g = isometric_structure(form).matrix;
    let tr = &g[(0, 0)] + &g[(1, 1)];
    let det = &(&g[(0, 0)] * &g[(1, 1)]) - &(&g[(0, 1)] * &g[(1, 0)]);
    let disc = &(&tr * &tr) - &det.scale_4();
    if disc.is_negative() {
        return Vec::new();
    }
    let s = disc.sqrt();
    if &(&s * &s) != &disc {
        return Vec::new();
    }
    let mut lambdas = Vec::new();
    for root in [&tr + &s, &tr - &s] {
        if (&root % &int(2)).is_zero() {
            let l = root / int(2);
            if !lambdas.contains(&l) {
                lambdas.push(l);
            }
        }
    }
    let mut out = Vec::new();
    for l in lambdas {
        // Kernel of G - l I, a singular nonzero 2x2 matrix.
        let m00 = &g[(0, 0)] - &l;
        let m01 = g[(0, 1)].clone();
        let m10 = g[(1, 0)].clone();
        let m11 = &g[(1, 1)] - &l;
        let v = if !m00.is_zero() || !m01.is_zero() {
            vec![m01.clone(), -m00.clone()]
        } else {
            vec![m11.clone(), -m10.clone()]
        };
        debug_assert!(!(v[0].is_zero() && v[1].is_zero()));
        let gc = gcd2(&v[0], &v[1]);
        let v: Vec<Int> = v.into_iter().map(|x| x / &gc).collect();
        let m = Metabolizer::new(2, vec![v]);
        debug_assert!(m.verify(form));
        out.push(m);
    }
    out.sort_by(|a, b| a.basis.cmp(&b.basis));
    out.dedup();
    out
}

trait Scale4 {
    fn scale_4(&self) -> Int;
}

impl Scale4 for Int {
    fn scale_4(&self) -> Int {
        self * int(4)
    }
}

fn gcd2(a: &Int, b: &Int) -> Int {
    use num_integer::Integer;
    a.gcd(b)
}

/// Budgeted brute-force enumeration of metabolizers by bounded Hermite bases.
/// Exponential in the height; documented oracle for the splitting tests.
pub const DEFAULT_HEIGHT_BUDGET: u32 = 12;

pub fn enumerate_metabolizers(form: &SeifertForm, height: u32) -> Result<Vec<Metabolizer>> {
    enumerate_metabolizers_with_budget(form, height, DEFAULT_HEIGHT_BUDGET)
}

pub fn enumerate_metabolizers_with_budget(
    form: &SeifertForm,
    height: u32,
    budget: u32,
) -> Result<Vec<Metabolizer>> {
    if height < 1 {
        return Ok(Vec::new());
    }
    if height > budget {
        return Err(Error::HeightTooLargeForBudget { height, budget });
    }
    match form.genus() {
        1 => Ok(enumerate_rank1(form, height as i64)),
        2 => Ok(enumerate_rank2(form, height as i64)),
        g => Err(Error::HypothesisViolated(format!(
            "enumeration supports genus <= 2, got {g}"
        ))),
    }
}

fn enumerate_rank1(form: &SeifertForm, h: i64) -> Vec<Metabolizer> {
    let mut out = Vec::new();
    for a in 0..=h {
        let bs: Vec<i64> = if a == 0 { vec![1] } else { (-h..=h).collect() };
        for b in bs {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let m = Metabolizer::new(2, vec![vec![int(a), int(b)]]);
            if m.verify(form) {
                out.push(m);
            }
        }
    }
    out.sort_by(|a, b| a.basis.cmp(&b.basis));
    out.dedup();
    out
}

fn to_i64_mat(m: &IntMat) -> Option<Vec<Vec<i64>>> {
    use num_traits::ToPrimitive;
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m[(i, j)].to_i64()).collect::<Option<Vec<_>>>())
        .collect()
}

fn enumerate_rank2(form: &SeifertForm, h: i64) -> Vec<Metabolizer> {
    let g = isometric_structure(form).matrix;
    let skew = form.skew_part();
    let gi = to_i64_mat(&g).expect("isometric structure fits i64 at enumeration scale");
    let si = to_i64_mat(&skew).expect("skew part fits i64");

    // Candidate canonical HNF rows: pivots at columns c1 < c2.
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for c1 in 0..4usize {
        for c2 in c1 + 1..4 {
            candidates.push((c1, c2));
        }
    }
    let sweep = crate::par::map_sweep(crate::par::Exec::Auto, candidates, |(c1, c2)| {
        let mut found = Vec::new();
        let free0: Vec<usize> = (c1 + 1..4).filter(|&c| c != c2).collect();
        let free1: Vec<usize> = (c2 + 1..4).collect();
        for p1 in 1..=h {
            for p2 in 1..=h {
                let top_max = (p2 - 1).min(h);
                let f0 = enumerate_tuples(free0.len(), h);
                for v0 in &f0 {
                    for top in 0..=top_max {
                        let f1 = enumerate_tuples(free1.len(), h);
                        for v1 in &f1 {
                            let mut row0 = [0i64; 4];
                            let mut row1 = [0i64; 4];
                            row0[c1] = p1;
                            row0[c2] = top;
                            for (idx, &c) in free0.iter().enumerate() {
                                row0[c] = v0[idx];
                            }
                            row1[c2] = p2;
                            for (idx, &c) in free1.iter().enumerate() {
                                row1[c] = v1[idx];
                            }
                            if rank2_filter(&row0, &row1, &gi, &si, c1, c2, p1, p2) {
                                found.push((row0, row1));
                            }
                        }
                    }
                }
            }
        }
        found
    });

    let mut out = Vec::new();
    for group in sweep {
        for (r0, r1) in group {
            let basis = vec![
                r0.iter().map(|&x| int(x)).collect(),
                r1.iter().map(|&x| int(x)).collect(),
            ];
            let m = Metabolizer::new(4, basis);
            if m.verify(form) {
                out.push(m);
            }
        }
    }
    out.sort_by(|a, b| a.basis.cmp(&b.basis));
    out.dedup();
    out
}

fn enumerate_tuples(len: usize, h: i64) -> Vec<Vec<i64>> {
    match len {
        0 => vec![vec![]],
        1 => (-h..=h).map(|a| vec![a]).collect(),
        2 => {
            let mut v = Vec::with_capacity(((2 * h + 1) * (2 * h + 1)) as usize);
            for a in -h..=h {
                for b in -h..=h {
                    v.push(vec![a, b]);
                }
            }
            v
        }
        _ => unreachable!(),
    }
}

/// Cheap i64 pre-filter: pairing annihilation, saturation, G-invariance.
fn rank2_filter(
    r0: &[i64; 4],
    r1: &[i64; 4],
    g: &[Vec<i64>],
    s: &[Vec<i64>],
    c1: usize,
    c2: usize,
    p1: i64,
    p2: i64,
) -> bool {
    // r0 . S . r1 == 0 (self-pairings vanish for a skew form).
    let mut pair = 0i64;
    for i in 0..4 {
        if r0[i] == 0 {
            continue;
        }
        for j in 0..4 {
            pair += r0[i] * s[i][j] * r1[j];
        }
    }
    if pair != 0 {
        return false;
    }
    // Saturation: gcd of entries 1 and gcd of 2x2 minors 1.
    let mut ge = 0i64;
    for i in 0..4 {
        ge = num_integer::gcd(ge, r0[i]);
        ge = num_integer::gcd(ge, r1[i]);
    }
    if ge != 1 {
        return false;
    }
    let mut gm = 0i64;
    for a in 0..4 {
        for b in a + 1..4 {
            gm = num_integer::gcd(gm, r0[a] * r1[b] - r0[b] * r1[a]);
        }
    }
    if gm != 1 {
        return false;
    }
    // G-invariance via echelon division against (r0, r1).
    for row in [r0, r1] {
        let mut gv = [0i64; 4];
        for i in 0..4 {
            for j in 0..4 {
                gv[i] += g[i][j] * row[j];
            }
        }
        // Subtract multiples of r0 (pivot c1) then r1 (pivot c2).
        if gv[c1] % p1 != 0 {
            return false;
        }
        let x0 = gv[c1] / p1;
        for i in 0..4 {
            gv[i] -= x0 * r0[i];
        }
        if gv[c2] % p2 != 0 {
            return false;
        }
        let x1 = gv[c2] / p2;
        for i in 0..4 {
            gv[i] -= x1 * r1[i];
        }
        if gv.iter().any(|&x| x != 0) {
            return false;
        }
    }
    true
}

/// True iff the two polynomials are coprime in Q[t^{+-1}]: after stripping
/// powers of t, their gcd over Q[t] is a constant.
pub fn alexander_coprime(p1: &IntPoly, p2: &IntPoly) -> Result<bool> {
    if p1.is_zero() || p2.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let a = strip_t_power(p1);
    let b = strip_t_power(p2);
    Ok(a.gcd_primitive(&b).degree() == Some(0))
}

fn strip_t_power(p: &IntPoly) -> IntPoly {
    let coeffs = p.coeffs();
    let v = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    IntPoly::new(coeffs[v..].to_vec())
}

/// Split a metabolizer of a block sum along the factors, per the coprime
/// splitting lemma: Z_i = Z cap H_i and Z = Z_1 (+) Z_2.
pub fn split_metabolizer(
    f1: &SeifertForm,
    f2: &SeifertForm,
    z: &Metabolizer,
) -> Result<(Metabolizer, Metabolizer)> {
    let d1 = alexander(f1);
    let d2 = alexander(f2);
    if !alexander_coprime(&d1, &d2)? {
        return Err(Error::HypothesisViolated(
            "Alexander polynomials are not coprime".into(),
        ));
    }
    if f1.det().is_zero() && f2.det().is_zero() {
        return Err(Error::HypothesisViolated(
            "both forms are singular".into(),
        ));
    }
    let sum = block_sum(f1, f2);
    if !z.verify(&sum) {
        return Err(Error::HypothesisViolated(
            "Z is not a metabolizer of the block sum".into(),
        ));
    }
    let (n1, n2) = (f1.size(), f2.size());
    let z1 = intersect_with_block(z, 0, n1, n1 + n2);
    let z2 = intersect_with_block(z, n1, n2, n1 + n2);
    let m1 = Metabolizer::new(n1, z1);
    let m2 = Metabolizer::new(n2, z2);
    // Z1 (+) Z2 must equal Z exactly.
    let mut embedded: Vec<Vec<Int>> = Vec::new();
    for v in m1.basis() {
        let mut row = v.clone();
        row.extend(std::iter::repeat(Int::zero()).take(n2));
        embedded.push(row);
    }
    for v in m2.basis() {
        let mut row: Vec<Int> = std::iter::repeat(Int::zero()).take(n1).collect();
        row.extend(v.iter().cloned());
        embedded.push(row);
    }
    if hermite_normal_form(&embedded) != z.basis() {
        return Err(Error::SplitFailed("Z1 + Z2 != Z as lattices".into()));
    }
    if !m1.verify(f1) || !m2.verify(f2) {
        return Err(Error::SplitFailed(
            "a factor failed the metabolizer invariants".into(),
        ));
    }
    Ok((m1, m2))
}

/// Sublattice of Z supported on a coordinate block, expressed in the block's
/// own coordinates.
fn intersect_with_block(
    z: &Metabolizer,
    offset: usize,
    width: usize,
    total: usize,
) -> Vec<Vec<Int>> {
    let basis = z.basis();
    if basis.is_empty() {
        return Vec::new();
    }
    let outside: Vec<usize> = (0..total).filter(|c| *c < offset || *c >= offset + width).collect();
    let rows = basis.len();
    let mut outside_mat = IntMat::zero(rows, outside.len());
    for (i, row) in basis.iter().enumerate() {
        for (jj, &c) in outside.iter().enumerate() {
            outside_mat[(i, jj)] = row[c].clone();
        }
    }
    let kernel = left_kernel(&outside_mat);
    kernel
        .into_iter()
        .map(|coef| {
            let mut v = vec![Int::zero(); width];
            for (i, row) in basis.iter().enumerate() {
                for (j, slot) in v.iter_mut().enumerate() {
                    *slot += &coef[i] * &row[offset + j];
                }
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    pub fn double(k: i64) -> SeifertForm {
        seifert_from_i64(&[&[-1, 1], &[0, k]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(seifert_from_i64(&[&[-1, 1], &[0, 7]]).is_ok());
        assert!(matches!(
            seifert_from_i64(&[&[0, 0], &[0, 0]]),
            Err(Error::NonUnimodularSkewPart(_))
        ));
        assert!(matches!(
            seifert_from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]),
            Err(Error::OddSize(3, 3))
        ));
        // Naik basis for k = 1.
        assert!(seifert_from_i64(&[&[5, 3], &[2, 1]]).is_ok());
    }

    #[test]
    fn isometric_structure_matches_paper_displays() {
        let f = double(5);
        let g = isometric_structure(&f).matrix;
        assert_eq!(g, IntMat::from_i64(&[&[0, -5], &[-1, 1]]));

        let naik = seifert_from_i64(&[&[5, 3], &[2, 1]]).unwrap();
        let g = isometric_structure(&naik).matrix;
        assert_eq!(&g[(0, 0)] + &g[(1, 1)], int(1));
        assert_eq!(g.det(), int(-1));

        let sum = block_sum(&double(2), &double(6));
        let gs = isometric_structure(&sum).matrix;
        assert_eq!(gs[(0, 1)], int(-2));
        assert_eq!(gs[(2, 3)], int(-6));
        assert_eq!(gs[(0, 2)], int(0));
    }

    #[test]
    fn alexander_polynomials() {
        for k in [-3i64, 0, 1, 2, 6] {
            let d = alexander(&double(k));
            assert_eq!(d, IntPoly::from_i64(&[-k, 2 * k + 1, -k]));
        }
        let trefoil = seifert_from_i64(&[&[-1, 1], &[0, -1]]).unwrap();
        assert_eq!(alexander(&trefoil), IntPoly::from_i64(&[1, -1, 1]));
        let sum = block_sum(&double(2), &double(6));
        assert_eq!(
            alexander(&sum),
            alexander(&double(2)).mul(&alexander(&double(6)))
        );
        // Delta(1) = det(A - A^t) = 1.
        assert_eq!(alexander(&sum).eval_rat(&rat(1, 1)), rat(1, 1));
    }

    #[test]
    fn charpoly_identity() {
        for k in [-2i64, 0, 1, 3, 6] {
            assert!(charpoly_identity_check(&double(k)));
        }
        let sum = block_sum(&double(1), &double(3));
        assert!(charpoly_identity_check(&sum));
        // Negative control: a corrupted G fails the identity.
        let f = double(1);
        let mut g = isometric_structure(&f).matrix;
        g[(0, 0)] += int(1);
        let cp = g.charpoly();
        let rhs = charpoly_from_alexander(&alexander(&f), 2);
        assert!(cp != rhs && cp != rhs.neg());
    }

    #[test]
    fn mirror_properties() {
        let trefoil = seifert_from_i64(&[&[-1, 1], &[0, -1]]).unwrap();
        let m = mirror(&trefoil);
        assert_eq!(m.matrix(), &IntMat::from_i64(&[&[1, 0], &[-1, 1]]));
        // Alexander agrees up to +-t^n.
        let a = alexander(&trefoil);
        let b = alexander(&m);
        assert!(alexander_coprime(&a, &b) == Ok(false));
    }

    #[test]
    fn rank1_metabolizers() {
        let d6 = double(6);
        let ms = find_rank1_metabolizers(&d6);
        assert_eq!(ms.len(), 2);
        assert!(ms.iter().any(|m| m.contains(&[int(3), int(1)])));
        assert!(ms.iter().any(|m| m.contains(&[int(-2), int(1)])));

        assert!(find_rank1_metabolizers(&double(1)).is_empty());

        let d0 = double(0);
        let ms = find_rank1_metabolizers(&d0);
        assert_eq!(ms.len(), 2);
        assert!(ms.iter().any(|m| m.contains(&[int(1), int(1)])));
        assert!(ms.iter().any(|m| m.contains(&[int(0), int(1)])));
    }

    #[test]
    fn enumeration_genus1() {
        let found = enumerate_metabolizers(&double(6), 5).unwrap();
        assert_eq!(found.len(), 2);
        let eigen = find_rank1_metabolizers(&double(6));
        assert_eq!(found, eigen);

        assert!(enumerate_metabolizers(&double(1), 12).unwrap().is_empty());
        assert!(matches!(
            enumerate_metabolizers(&double(1), 20),
            Err(Error::HeightTooLargeForBudget { .. })
        ));
    }

    #[test]
    fn enumeration_and_split_genus2() {
        let f1 = double(2);
        let f2 = double(6);
        let sum = block_sum(&f1, &f2);
        let found = enumerate_metabolizers(&sum, 5).unwrap();
        // Products of the eigen-metabolizers: exactly 2 x 2.
        assert_eq!(found.len(), 4);
        let product = Metabolizer::new(
            4,
            vec![
                vec![int(2), int(1), int(0), int(0)],
                vec![int(0), int(0), int(3), int(1)],
            ],
        );
        assert!(found.contains(&product));

        for z in &found {
            let (z1, z2) = split_metabolizer(&f1, &f2, z).unwrap();
            assert!(z1.verify(&f1));
            assert!(z2.verify(&f2));
        }

        let (z1, z2) = split_metabolizer(&f1, &f2, &product).unwrap();
        assert!(z1.contains(&[int(2), int(1)]));
        assert!(z2.contains(&[int(3), int(1)]));

        // Equal polynomials violate the hypothesis.
        let zz = enumerate_metabolizers(&block_sum(&f1, &f1), 3).unwrap();
        if let Some(z) = zz.first() {
            assert!(matches!(
                split_metabolizer(&f1, &f1, z),
                Err(Error::HypothesisViolated(_))
            ));
        }
    }

    #[test]
    fn coprimality() {
        let d2 = alexander(&double(2));
        let d6 = alexander(&double(6));
        assert_eq!(alexander_coprime(&d2, &d6), Ok(true));
        assert_eq!(alexander_coprime(&d2, &d2), Ok(false));
        let f6 = IntPoly::from_i64(&[1, -1, 1]);
        let f10 = IntPoly::from_i64(&[1, -1, 1, -1, 1]);
        assert_eq!(alexander_coprime(&f6, &f10), Ok(true));
        assert!(matches!(
            alexander_coprime(&IntPoly::zero(), &f6),
            Err(Error::ZeroPolynomial)
        ));
        // Delta_0 = t is a unit: coprime to everything after stripping.
        let d0 = alexander(&double(0));
        assert_eq!(alexander_coprime(&d0, &d2), Ok(true));
    }

    #[test]
    fn bezout_for_doubles() {
        // x^2 - x - k family: c = +-(k - l).
        let phi2 = IntPoly::from_i64(&[-2, -1, 1]);
        let phi6 = IntPoly::from_i64(&[-6, -1, 1]);
        let (u1, u2, c) = integer_bezout(&phi2, &phi6).unwrap();
        assert_eq!(c.abs(), int(4));
        assert_eq!(u1.mul(&phi2).add(&u2.mul(&phi6)), IntPoly::new(vec![c]));
    }
}
