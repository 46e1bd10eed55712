//! Exact linear algebra over the coefficient fields and over Laurent
//! polynomial entries.
//!
//! Three layers:
//! - plain Gaussian elimination for rank/nullspace over a field;
//! - fraction-free (Bareiss) elimination for generic rank and determinants of
//!   polynomial matrices, with the pivot chosen as the nonzero entry of
//!   smallest total degree and then earliest (row, column) position, so runs
//!   are deterministic;
//! - the rank-drop locus of a univariate matrix via the monic gcd of all
//!   `r x r` minors.
//!
//! The minor enumeration is exponential; both matrix dimensions are capped at
//! `MINOR_DIM_LIMIT` and larger inputs are rejected with a size error.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Field, Rat};
use crate::laurent::{LaurentPoly, UniPoly};

use num::bigint::BigInt;
use num::{Signed, Zero};

/// Hard cap on each dimension for minor enumeration.
pub const MINOR_DIM_LIMIT: usize = 12;

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|row| row.len() == c),
            "all rows must have equal length"
        );
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
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

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Matrix<T> {
        Matrix::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self.at(row_idx[r], col_idx[c]).clone()
        })
    }
}

impl<T: std::fmt::Display> std::fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.data[r * self.cols + c].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---- Field elimination ----

/// Reduced row echelon form in place; returns the pivot columns.
fn rref<K: Field>(m: &mut Matrix<K>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        for c in 0..m.cols {
            let tmp = m.at(p, c).clone();
            m.set(p, c, m.at(row, c).clone());
            m.set(row, c, tmp);
        }
        let inv = m.at(row, col).inv().expect("pivot is nonzero");
        for c in col..m.cols {
            m.set(row, c, m.at(row, c).clone() * inv.clone());
        }
        for r in 0..m.rows {
            if r != row && !m.at(r, col).is_zero() {
                let f = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c).clone() - f.clone() * m.at(row, c).clone();
                    m.set(r, c, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank by exact Gaussian elimination.
pub fn rank_over_field<K: Field>(m: &Matrix<K>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Basis of the right kernel `{v : M v = 0}`; the basis has `cols - rank`
/// vectors, one per free column, in ascending free-column order.
pub fn nullspace_over_field<K: Field>(m: &Matrix<K>) -> Vec<Vec<K>> {
    if m.cols == 0 {
        return Vec::new();
    }
    if m.rows == 0 {
        // Every coordinate is free.
        return (0..m.cols)
            .map(|j| {
                let mut v = vec![K::zero(); m.cols];
                v[j] = K::one();
                v
            })
            .collect();
    }
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![K::zero(); m.cols];
        v[free] = K::one();
        for (prow, pcol) in pivots.iter().enumerate() {
            v[*pcol] = -work.at(prow, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of an integer matrix (over the rationals).
pub fn rank_int(m: &Matrix<i64>) -> usize {
    rank_over_field(&m.map(|v| Rat::from_int(*v)))
}

/// Plain matrix product over a field.
pub fn mul_field<K: Field>(a: &Matrix<K>, b: &Matrix<K>) -> Matrix<K> {
    assert_eq!(a.cols(), b.rows(), "inner dimensions must agree");
    Matrix::from_fn(a.rows(), b.cols(), |r, c| {
        let mut acc = K::zero();
        for k in 0..a.cols() {
            acc = acc + a.at(r, k).clone() * b.at(k, c).clone();
        }
        acc
    })
}

// ---- Fraction-free elimination over polynomial entries ----

/// Multiplies each row by the unit monomial clearing its negative exponents,
/// leaving genuine polynomial entries. Row scaling by units preserves rank.
fn clear_row_units<K: Field>(m: &Matrix<LaurentPoly<K>>) -> Matrix<LaurentPoly<K>> {
    let mut out = m.clone();
    for r in 0..m.rows() {
        let mut min: Option<Vec<i64>> = None;
        for c in 0..m.cols() {
            if let Some(e) = m.at(r, c).min_exponents() {
                min = Some(match min {
                    None => e,
                    Some(acc) => acc.iter().zip(&e).map(|(a, b)| (*a).min(*b)).collect(),
                });
            }
        }
        let Some(min) = min else { continue };
        let shift: Vec<i64> = min.iter().map(|&v| if v < 0 { -v } else { 0 }).collect();
        if shift.iter().any(|&s| s != 0) {
            for c in 0..m.cols() {
                let shifted = m.at(r, c).mul_monomial(&shift);
                out.set(r, c, shifted);
            }
        }
    }
    out
}

/// Pivot choice for fraction-free elimination: nonzero entry of smallest total
/// degree, ties broken by earliest (row, column).
fn select_pivot<K: Field>(
    m: &Matrix<LaurentPoly<K>>,
    from: usize,
) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for r in from..m.rows() {
        for c in from..m.cols() {
            if m.at(r, c).is_zero() {
                continue;
            }
            let d = m.at(r, c).total_degree();
            let cand = (d, r, c);
            best = Some(match best {
                None => cand,
                Some(b) if cand < b => cand,
                Some(b) => b,
            });
        }
    }
    best.map(|(_, r, c)| (r, c))
}

fn swap_rows<T: Clone>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..m.cols() {
        let tmp = m.at(a, c).clone();
        let other = m.at(b, c).clone();
        m.set(a, c, other);
        m.set(b, c, tmp);
    }
}

fn swap_cols<T: Clone>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in 0..m.rows() {
        let tmp = m.at(r, a).clone();
        let other = m.at(r, b).clone();
        m.set(r, a, other);
        m.set(r, b, tmp);
    }
}

/// Core Bareiss sweep. Returns `(rank, swap_parity)`, leaving the matrix in
/// fraction-free echelon form with pivots on the diagonal.
fn bareiss<K: Field>(work: &mut Matrix<LaurentPoly<K>>) -> (usize, bool) {
    let steps = work.rows().min(work.cols());
    let vars = if work.is_empty() {
        Vec::new()
    } else {
        work.at(0, 0).vars().to_vec()
    };
    let mut prev = LaurentPoly::<K>::one(&vars);
    let mut parity = false;
    for k in 0..steps {
        let Some((pr, pc)) = select_pivot(work, k) else {
            return (k, parity);
        };
        parity ^= (pr != k) ^ (pc != k);
        swap_rows(work, k, pr);
        swap_cols(work, k, pc);
        let pivot = work.at(k, k).clone();
        for i in (k + 1)..work.rows() {
            for j in (k + 1)..work.cols() {
                let num = work
                    .at(i, j)
                    .mul(&pivot)
                    .sub(&work.at(i, k).mul(work.at(k, j)));
                // Exact by Sylvester's determinant identity.
                let v = num.exact_div(&prev);
                work.set(i, j, v);
            }
            work.set(i, k, LaurentPoly::zero(&vars));
        }
        prev = pivot;
    }
    (steps, parity)
}

/// Rank of a matrix of Laurent polynomials over the rational function field,
/// i.e. the rank at a generic point of the torus.
pub fn generic_rank<K: Field>(m: &Matrix<LaurentPoly<K>>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let mut work = clear_row_units(m);
    bareiss(&mut work).0
}

/// Determinant of a square matrix of Laurent polynomials with non-negative
/// exponents, by fraction-free elimination.
pub fn determinant<K: Field>(m: &Matrix<LaurentPoly<K>>) -> LaurentPoly<K> {
    assert_eq!(m.rows(), m.cols(), "determinant needs a square matrix");
    if m.is_empty() {
        // Empty product convention: the 0x0 determinant is 1 over no vars.
        return LaurentPoly::one::<String>(&[]);
    }
    let vars = m.at(0, 0).vars().to_vec();
    let mut work = m.clone();
    let n = m.rows();
    let (rank, parity) = bareiss(&mut work);
    if rank < n {
        return LaurentPoly::zero(&vars);
    }
    // After a full sweep the last pivot is the determinant up to swap sign.
    let det = work.at(n - 1, n - 1).clone();
    if parity {
        det.neg()
    } else {
        det
    }
}

/// Monic gcd of all `r x r` minors of a univariate Laurent matrix over a
/// cyclotomic field. The roots of the gcd on the torus (away from 0) are
/// exactly the parameter values where the rank drops below `r`. Negative
/// exponents are cleared per row first — a unit row scaling, which changes
/// individual minors only by monomial units and so leaves torus zero loci
/// intact.
pub fn minor_gcd_1d(m: &Matrix<LaurentPoly<Cyclo>>, r: usize) -> Result<UniPoly<Cyclo>> {
    if m.rows() > MINOR_DIM_LIMIT || m.cols() > MINOR_DIM_LIMIT {
        return Err(Error::SizeLimit(format!(
            "minor enumeration needs both dimensions <= {MINOR_DIM_LIMIT}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let var = if m.is_empty() {
        "t".to_string()
    } else {
        assert_eq!(1, m.at(0, 0).vars().len(), "univariate matrix required");
        m.at(0, 0).vars()[0].clone()
    };
    if r == 0 {
        // The empty minor is the constant 1: the rank never drops below zero.
        return Ok(UniPoly::constant(&var, Cyclo::one()));
    }
    let cleared = clear_row_units(m);
    let grank = generic_rank(&cleared);
    if grank < r {
        return Err(Error::RankTooLarge {
            requested: r,
            generic: grank,
        });
    }
    let mut gcd = UniPoly::<Cyclo>::zero(&var);
    'outer: for rows in (0..m.rows()).combinations(r) {
        for cols in (0..m.cols()).combinations(r) {
            let sub = cleared.submatrix(&rows, &cols);
            let det = determinant(&sub).to_unipoly();
            if det.is_zero() {
                continue;
            }
            gcd = gcd.gcd(&det);
            if gcd.degree() == Some(0) {
                break 'outer;
            }
        }
    }
    // Generic rank >= r guarantees at least one nonzero minor.
    assert!(!gcd.is_zero(), "some r x r minor must be nonzero");
    Ok(gcd.make_monic())
}

// ---- Integer lattice membership ----

/// Decides whether `delta` lies in `col_Q(A) + Z^n`, i.e. whether the system
/// `A u = delta (mod 1)` has a rational solution `u`.
///
/// Unimodular row operations bring `A` to echelon form; the transformed
/// entries of `delta` opposite zero rows must then be integers.
pub fn torus_membership(a: &[Vec<i64>], delta: &[Rat]) -> bool {
    let n = a.len();
    assert_eq!(n, delta.len(), "row count matches target length");
    let d = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| {
            assert_eq!(d, row.len(), "ragged exponent matrix");
            row.iter().map(|&v| BigInt::from(v)).collect()
        })
        .collect();
    let mut rhs: Vec<Rat> = delta.to_vec();
    let mut top = 0usize;
    for col in 0..d {
        // Euclidean sweep: reduce until at most one nonzero entry remains in
        // this column at or below `top`.
        loop {
            let mut idx: Vec<usize> = (top..n).filter(|&r| !m[r][col].is_zero()).collect();
            if idx.len() <= 1 {
                break;
            }
            idx.sort_by_key(|&r| m[r][col].abs());
            let small = idx[0];
            let other = idx[1];
            let q = &m[other][col] / &m[small][col];
            if q.is_zero() {
                // |other| < |small| cannot happen after the sort; guard anyway.
                m.swap(small, other);
                continue;
            }
            for c in 0..d {
                let sub = &m[small][c] * &q;
                m[other][c] -= sub;
            }
            let sub = rhs[small].clone()
                * Rat::from_big(num::BigRational::from_integer(q.clone()));
            rhs[other] = rhs[other].clone() - sub;
        }
        if let Some(p) = (top..n).find(|&r| !m[r][col].is_zero()) {
            m.swap(top, p);
            rhs.swap(top, p);
            top += 1;
        }
    }
    // Rows below `top` are zero rows of the transformed matrix.
    rhs[top..].iter().all(Rat::is_integer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn rat_matrix(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|row| row.into_iter().map(Rat::from_int).collect())
                .collect(),
        )
    }

    /// Independent rank oracle: the largest size of a nonzero minor, found by
    /// cofactor expansion. Exponential, fine for matrices up to 4x4.
    fn rank_by_minors(m: &Matrix<Rat>) -> usize {
        fn det(m: &Matrix<Rat>) -> Rat {
            let n = m.rows();
            if n == 0 {
                return Rat::one();
            }
            if n == 1 {
                return m.at(0, 0).clone();
            }
            let mut acc = Rat::zero();
            for c in 0..n {
                if m.at(0, c).is_zero() {
                    continue;
                }
                let rows: Vec<usize> = (1..n).collect();
                let cols: Vec<usize> = (0..n).filter(|&x| x != c).collect();
                let minor = det(&m.submatrix(&rows, &cols));
                let signed = if c % 2 == 0 { minor } else { -minor };
                acc = acc + m.at(0, c).clone() * signed;
            }
            acc
        }
        for size in (1..=m.rows().min(m.cols())).rev() {
            for rows in (0..m.rows()).combinations(size) {
                for cols in (0..m.cols()).combinations(size) {
                    if !det(&m.submatrix(&rows, &cols)).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_examples() {
        assert_eq!(2, rank_over_field(&rat_matrix(vec![vec![1, 0], vec![0, 1]])));
        assert_eq!(1, rank_over_field(&rat_matrix(vec![vec![1, 2], vec![2, 4]])));
        assert_eq!(0, rank_over_field(&rat_matrix(vec![vec![0, 0]])));
    }

    #[test]
    fn rank_matches_minor_expansion_oracle_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(0x10ca1);
        for case in 0..200 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=4);
            // Small entries with many zeros to exercise degenerate shapes.
            let m = Matrix::from_fn(rows, cols, |_, _| {
                if rng.gen_bool(0.4) {
                    Rat::zero()
                } else {
                    Rat::from_int(rng.gen_range(-3..=3))
                }
            });
            assert_eq!(
                rank_by_minors(&m),
                rank_over_field(&m),
                "case {case}: {m:?}"
            );
        }
    }

    #[test]
    fn nullspace_examples_and_kernel_property() {
        assert!(nullspace_over_field(&rat_matrix(vec![vec![1, 0], vec![0, 1]])).is_empty());
        let all_free = nullspace_over_field(&rat_matrix(vec![vec![0, 0, 0]]));
        assert_eq!(3, all_free.len());
        let line = nullspace_over_field(&rat_matrix(vec![vec![1, 1]]));
        assert_eq!(1, line.len());
        // The basis vector spans the same line as (1, -1).
        let v = &line[0];
        assert!((v[0].clone() + v[1].clone()).is_zero());
        assert!(!v[0].is_zero());
    }

    #[test]
    fn nullspace_vectors_are_killed_by_the_matrix() {
        let mut rng = StdRng::seed_from_u64(0xba515);
        for _ in 0..100 {
            let rows = rng.gen_range(1..=4);
            let cols = rng.gen_range(1..=5);
            let m = Matrix::from_fn(rows, cols, |_, _| Rat::from_int(rng.gen_range(-2..=2)));
            let basis = nullspace_over_field(&m);
            assert_eq!(cols - rank_over_field(&m), basis.len());
            for v in &basis {
                for row in 0..rows {
                    let mut acc = Rat::zero();
                    for c in 0..cols {
                        acc = acc + m.at(row, c).clone() * v[c].clone();
                    }
                    assert!(acc.is_zero(), "kernel vector not annihilated");
                }
            }
        }
    }

    fn laurent_t(text: &str) -> LaurentPoly<Rat> {
        LaurentPoly::parse(&["t"], text).unwrap()
    }

    #[test]
    fn generic_rank_examples() {
        let m = Matrix::from_rows(vec![
            vec![laurent_t("t - 1"), laurent_t("t - 1")],
            vec![laurent_t("t - 1"), laurent_t("t - 1")],
        ]);
        assert_eq!(1, generic_rank(&m));

        let vars = ["s", "t"];
        let row = vec![
            LaurentPoly::parse(&vars, "1 - s").unwrap(),
            LaurentPoly::parse(&vars, "t - 1").unwrap(),
        ];
        assert_eq!(1, generic_rank(&Matrix::from_rows(vec![row])));
    }

    #[test]
    fn generic_rank_handles_negative_exponents() {
        // (t^-1 - 1, 1 - t) is proportional to (1, -t) after clearing units:
        // rank 1 even though naive subtraction of rows differs.
        let m = Matrix::from_rows(vec![
            vec![laurent_t("t^-1 - 1"), laurent_t("1 - t^-1")],
            vec![laurent_t("1 - t"), laurent_t("t - 1")],
        ]);
        assert_eq!(1, generic_rank(&m));
    }

    #[test]
    fn generic_rank_agrees_with_evaluation_at_random_high_order_characters() {
        let mut rng = StdRng::seed_from_u64(0x9e4e51c);
        let vars = ["s", "t"];
        for _ in 0..6 {
            let rows = rng.gen_range(1..=3);
            let cols = rng.gen_range(1..=3);
            let m = Matrix::from_fn(rows, cols, |_, _| {
                let mut p = LaurentPoly::<Rat>::zero(&vars);
                for _ in 0..rng.gen_range(0..=2) {
                    p.insert_add(
                        vec![rng.gen_range(-1..=1), rng.gen_range(-1..=1)],
                        Rat::from_int(rng.gen_range(-2..=2)),
                    );
                }
                p
            });
            let symbolic = generic_rank(&m);
            for _ in 0..2 {
                let order = rng.gen_range(50..=100u64);
                let rho = [
                    RootOfUnity::from_frac(rng.gen_range(1..order) as i64, order as i64),
                    RootOfUnity::from_frac(rng.gen_range(1..order) as i64, order as i64),
                ];
                let eval = m.map(|p| p.evaluate_at_character(&rho));
                assert!(rank_over_field(&eval) <= symbolic);
            }
        }
    }

    use crate::exactnum::RootOfUnity;

    #[test]
    fn determinant_of_diagonal_matrix() {
        let m = Matrix::from_rows(vec![
            vec![laurent_t("t - 1"), laurent_t("0")],
            vec![laurent_t("0"), laurent_t("t + 1")],
        ]);
        assert_eq!("t^2 - 1", determinant(&m).to_string());
    }

    #[test]
    fn determinant_matches_cofactor_oracle_on_random_matrices() {
        fn cofactor_det(m: &Matrix<LaurentPoly<Rat>>) -> LaurentPoly<Rat> {
            let n = m.rows();
            let vars = m.at(0, 0).vars().to_vec();
            if n == 1 {
                return m.at(0, 0).clone();
            }
            let mut acc = LaurentPoly::zero(&vars);
            for c in 0..n {
                let rows: Vec<usize> = (1..n).collect();
                let cols: Vec<usize> = (0..n).filter(|&x| x != c).collect();
                let minor = cofactor_det(&m.submatrix(&rows, &cols));
                let term = m.at(0, c).mul(&minor);
                acc = if c % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
        let mut rng = StdRng::seed_from_u64(0xde7);
        for _ in 0..50 {
            let n = rng.gen_range(1..=3);
            let m = Matrix::from_fn(n, n, |_, _| {
                let mut p = LaurentPoly::<Rat>::zero(&["t"]);
                for _ in 0..rng.gen_range(0..=2) {
                    p.insert_add(vec![rng.gen_range(0..=2)], Rat::from_int(rng.gen_range(-2..=2)));
                }
                p
            });
            assert_eq!(cofactor_det(&m), determinant(&m));
        }
    }

    fn cyclo_t(text: &str) -> LaurentPoly<Cyclo> {
        laurent_t(text).map_coeffs(|c| c.to_cyclo())
    }

    #[test]
    fn minor_gcd_examples() {
        let m = Matrix::from_rows(vec![
            vec![cyclo_t("t - 1"), cyclo_t("0")],
            vec![cyclo_t("0"), cyclo_t("t + 1")],
        ]);
        let g = minor_gcd_1d(&m, 2).unwrap();
        assert_eq!("t^2 - 1", g.to_string());
        let g = minor_gcd_1d(&m, 1).unwrap();
        assert_eq!("1", g.to_string(), "coprime 1x1 minors");
        assert_eq!(
            Err(Error::RankTooLarge {
                requested: 3,
                generic: 2
            }),
            minor_gcd_1d(&m, 3)
        );
    }

    #[test]
    fn minor_gcd_clears_negative_exponents_per_row() {
        // Row scaling by units preserves zero loci on the torus: the entry
        // t^-1 - 1 vanishes exactly at t = 1.
        let m = Matrix::from_rows(vec![vec![cyclo_t("t^-1 - 1")]]);
        let g = minor_gcd_1d(&m, 1).unwrap();
        assert_eq!("t - 1", g.to_string());
    }

    #[test]
    fn minor_gcd_rejects_oversized_matrices() {
        let big = Matrix::from_fn(13, 2, |_, _| cyclo_t("t"));
        assert!(matches!(
            minor_gcd_1d(&big, 1),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn torus_membership_examples() {
        // x = delta (mod 1) with full-rank square system is always solvable.
        assert!(torus_membership(&[vec![1]], &[r(1, 3)]));
        // 2u = 1/2 (mod 1) is solvable (u = 1/4).
        assert!(torus_membership(&[vec![2]], &[r(1, 2)]));
        // (u, u) hits (1/3, 1/3) but not (1/3, 1/2).
        assert!(torus_membership(&[vec![1], vec![1]], &[r(1, 3), r(1, 3)]));
        assert!(!torus_membership(&[vec![1], vec![1]], &[r(1, 3), r(1, 2)]));
        // (u, -u) hits (1/3, 2/3).
        assert!(torus_membership(&[vec![1], vec![-1]], &[r(1, 3), r(2, 3)]));
        assert!(!torus_membership(&[vec![1], vec![-1]], &[r(1, 3), r(1, 3)]));
        // (2u, 3u): difference constraint 3*(1/2) - 2*q2 must be integral.
        assert!(torus_membership(&[vec![2], vec![3]], &[r(1, 2), r(3, 4)]));
        assert!(!torus_membership(&[vec![2], vec![3]], &[r(1, 2), r(1, 3)]));
    }

    #[test]
    fn torus_membership_brute_force_cross_check() {
        // Enumerate u with small denominators and compare against the
        // echelon-based decision on random 3x2 systems.
        let mut rng = StdRng::seed_from_u64(0x7071);
        for _ in 0..60 {
            let a: Vec<Vec<i64>> = (0..3)
                .map(|_| (0..2).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            let denom = 6i64;
            let delta: Vec<Rat> = (0..3).map(|_| r(rng.gen_range(0..denom), denom)).collect();
            // If A u = delta (mod 1) has a rational solution, one exists with
            // denominator dividing denom * det-bound; scanning denominators up
            // to 24 is exhaustive for these entry sizes.
            let mut found = false;
            'search: for du in 1..=24i64 {
                for nu1 in 0..du {
                    for nu2 in 0..du {
                        let u = [r(nu1, du), r(nu2, du)];
                        let ok = (0..3).all(|i| {
                            let mut acc = Rat::zero();
                            for (j, uj) in u.iter().enumerate() {
                                acc = acc + uj.scale_int(a[i][j]);
                            }
                            (acc - delta[i].clone()).is_integer()
                        });
                        if ok {
                            found = true;
                            break 'search;
                        }
                    }
                }
            }
            assert_eq!(found, torus_membership(&a, &delta), "A = {a:?}, delta = {delta:?}");
        }
    }
}
