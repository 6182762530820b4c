//! Exact integer linear algebra: Hermite and Smith normal forms, saturated
//! kernel bases, cokernels of relation matrices as finitely generated abelian
//! groups with degree maps, and the syzygy computations behind trinomial
//! relations.

use crate::projline::{all_distinct, P1Point};
use crate::util::{abs_cmp, clear_rows, dot_i};
use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense matrix of arbitrary-precision integers, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot_i(self.row(i), v)).collect()
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

    /// row[i] -= q * row[t]
    fn row_sub(&mut self, i: usize, t: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let sub = q * &self[(t, j)];
            self[(i, j)] -= sub;
        }
    }

    /// col[j] -= q * col[t]
    fn col_sub(&mut self, j: usize, t: usize, q: &Int) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let sub = q * &self[(i, t)];
            self[(i, j)] -= sub;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Fraction-free Bareiss determinant; square matrices only.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m: Vec<Vec<Int>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Int::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of a Smith normal form computation: `u * a * v = s` with `u`, `v`
/// unimodular and `s` diagonal with divisibility down the diagonal.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub invariant_factors: Vec<Int>,
}

/// Rounded division: quotient minimizing the absolute remainder.
fn div_round(a: &Int, b: &Int) -> Int {
    let (mut q, r) = a.div_rem(b);
    let two_r = r.abs() * Int::from(2);
    if two_r > b.abs() {
        if (r.sign() == b.sign()) || r.is_zero() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Clears row `t` and column `t` of `s` outside the pivot position, keeping
/// `u * a * v = s` intact via mirrored transformations. The pivot is chosen
/// as a minimal-magnitude nonzero entry of the whole trailing submatrix.
fn eliminate_at(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    let (m, n) = (s.rows(), s.cols());
    loop {
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !s[(i, j)].is_zero() {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => abs_cmp(&s[(i, j)], &s[(bi, bj)]) == std::cmp::Ordering::Less,
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = best else {
            return;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..m {
            if !s[(i, t)].is_zero() {
                let q = div_round(&s[(i, t)], &s[(t, t)]);
                s.row_sub(i, t, &q);
                u.row_sub(i, t, &q);
                if !s[(i, t)].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..n {
            if !s[(t, j)].is_zero() {
                let q = div_round(&s[(t, j)], &s[(t, t)]);
                s.col_sub(j, t, &q);
                v.col_sub(j, t, &q);
                if !s[(t, j)].is_zero() {
                    clean = false;
                }
            }
        }
        if clean {
            return;
        }
    }
}

/// Replaces the diagonal pair `(d_t, d_{t+1})` by `(gcd, lcm)` via
/// block-local unimodular operations. Entries outside the 2x2 block are
/// untouched.
fn fix_divisibility_pair(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize) {
    // fold column t+1 into column t so the pair meets in one column
    for i in 0..s.rows() {
        let add = s[(i, t + 1)].clone();
        s[(i, t)] += add;
    }
    for i in 0..v.rows() {
        let add = v[(i, t + 1)].clone();
        v[(i, t)] += add;
    }
    loop {
        if !s[(t + 1, t)].is_zero() {
            if s[(t, t)].is_zero() || abs_cmp(&s[(t + 1, t)], &s[(t, t)]) == std::cmp::Ordering::Less {
                s.swap_rows(t, t + 1);
                u.swap_rows(t, t + 1);
            }
            let q = div_round(&s[(t + 1, t)], &s[(t, t)]);
            s.row_sub(t + 1, t, &q);
            u.row_sub(t + 1, t, &q);
            if !s[(t + 1, t)].is_zero() {
                continue;
            }
        }
        if !s[(t, t + 1)].is_zero() {
            if s[(t, t)].is_zero() || abs_cmp(&s[(t, t + 1)], &s[(t, t)]) == std::cmp::Ordering::Less {
                s.swap_cols(t, t + 1);
                v.swap_cols(t, t + 1);
            }
            let q = div_round(&s[(t, t + 1)], &s[(t, t)]);
            s.col_sub(t + 1, t, &q);
            v.col_sub(t + 1, t, &q);
            if !s[(t, t + 1)].is_zero() || !s[(t + 1, t)].is_zero() {
                continue;
            }
        }
        if s[(t + 1, t)].is_zero() && s[(t, t + 1)].is_zero() {
            break;
        }
    }
}

/// Smith normal form over the integers. Total: never fails. Pivots are
/// chosen by minimal absolute value to limit coefficient growth.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let k = m.min(n);
    for t in 0..k {
        eliminate_at(&mut s, &mut u, &mut v, t);
        if s[(t, t)].is_zero() {
            break;
        }
    }

    // positive diagonal
    for t in 0..k {
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    // enforce d_t | d_{t+1}; each fix replaces a bad adjacent pair by
    // (gcd, lcm), which strictly shrinks the earlier entry, so the sweep
    // terminates
    loop {
        let rank = (0..k).take_while(|&t| !s[(t, t)].is_zero()).count();
        let bad = (0..rank.saturating_sub(1))
            .find(|&t| !(&s[(t + 1, t + 1)] % &s[(t, t)]).is_zero());
        let Some(t) = bad else {
            break;
        };
        fix_divisibility_pair(&mut s, &mut u, &mut v, t);
        for tt in [t, t + 1] {
            if s[(tt, tt)].is_negative() {
                s.negate_row(tt);
                u.negate_row(tt);
            }
        }
    }

    let invariant_factors: Vec<Int> =
        (0..k).map(|t| s[(t, t)].clone()).take_while(|d| !d.is_zero()).collect();
    SnfResult { s, u, v, invariant_factors }
}

/// Row-style Hermite normal form (no transformation matrices): pivots
/// positive, entries above each pivot reduced into `[0, pivot)`, zero rows
/// dropped. Canonical for a given row lattice.
pub fn hnf_rows(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut mat: Vec<Vec<Int>> = rows.to_vec();
    mat.retain(|r| !r.iter().all(Zero::is_zero));
    if mat.is_empty() {
        return mat;
    }
    let cols = mat[0].len();
    let mut r = 0;
    for c in 0..cols {
        // gcd elimination in column c among rows r..
        loop {
            let mut nz: Vec<usize> = (r..mat.len()).filter(|&i| !mat[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            nz.sort_by(|&a, &b| abs_cmp(&mat[a][c], &mat[b][c]));
            let p = nz[0];
            mat.swap(r, p);
            let mut done = true;
            for i in r + 1..mat.len() {
                if !mat[i][c].is_zero() {
                    let q = div_round(&mat[i][c], &mat[r][c]);
                    for j in 0..cols {
                        let sub = &q * &mat[r][j];
                        mat[i][j] -= sub;
                    }
                    if !mat[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < mat.len() && !mat[r][c].is_zero() {
            if mat[r][c].is_negative() {
                for x in mat[r].iter_mut() {
                    *x = -x.clone();
                }
            }
            // reduce entries above the pivot
            for i in 0..r {
                let q = mat[i][c].div_floor(&mat[r][c]);
                if !q.is_zero() {
                    for j in 0..cols {
                        let sub = &q * &mat[r][j];
                        mat[i][j] -= sub;
                    }
                }
            }
            r += 1;
            if r == mat.len() {
                break;
            }
        }
    }
    mat.truncate(r);
    mat
}

/// A basis of the saturated integer kernel `{x : a x = 0}`, returned in
/// Hermite-canonical form so results are deterministic.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<Int>> {
    let res = snf(a);
    let rank = res.invariant_factors.len();
    let n = a.cols();
    let raw: Vec<Vec<Int>> = (rank..n).map(|j| res.v.col(j)).collect();
    hnf_rows(&raw)
}

/// A finitely generated abelian group `Z^a + Z/d_1 + ... + Z/d_k` in
/// canonical form: every torsion order is at least 2 and divides the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FGAbelianGroup {
    pub free_rank: usize,
    pub torsion_orders: Vec<Int>,
}

impl FGAbelianGroup {
    pub fn free(rank: usize) -> Self {
        FGAbelianGroup { free_rank: rank, torsion_orders: Vec::new() }
    }

    pub fn new(free_rank: usize, torsion_orders: Vec<Int>) -> Self {
        debug_assert!(torsion_orders.iter().all(|d| *d >= Int::from(2)));
        debug_assert!(torsion_orders.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        FGAbelianGroup { free_rank, torsion_orders }
    }

    pub fn is_free(&self) -> bool {
        self.torsion_orders.is_empty()
    }

    pub fn zero_element(&self) -> GroupElement {
        GroupElement {
            group: self.clone(),
            free: vec![Int::zero(); self.free_rank],
            torsion: vec![Int::zero(); self.torsion_orders.len()],
        }
    }

    pub fn element(&self, free: Vec<Int>, torsion: Vec<Int>) -> GroupElement {
        assert_eq!(free.len(), self.free_rank);
        assert_eq!(torsion.len(), self.torsion_orders.len());
        let torsion = torsion
            .into_iter()
            .zip(&self.torsion_orders)
            .map(|(x, d)| x.mod_floor(d))
            .collect();
        GroupElement { group: self.clone(), free, torsion }
    }
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        for d in &self.torsion_orders {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of an [`FGAbelianGroup`], torsion residues reduced into
/// `[0, d_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    group: FGAbelianGroup,
    free: Vec<Int>,
    torsion: Vec<Int>,
}

impl GroupElement {
    pub fn group(&self) -> &FGAbelianGroup {
        &self.group
    }

    pub fn free_part(&self) -> &[Int] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[Int] {
        &self.torsion
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Ok(self.group.element(
            self.free.iter().zip(&other.free).map(|(a, b)| a + b).collect(),
            self.torsion.iter().zip(&other.torsion).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn neg(&self) -> GroupElement {
        self.group.element(
            self.free.iter().map(|a| -a).collect(),
            self.torsion.iter().map(|a| -a).collect(),
        )
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Int) -> GroupElement {
        self.group.element(
            self.free.iter().map(|a| a * k).collect(),
            self.torsion.iter().map(|a| a * k).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.free.iter().map(|x| x.to_string()).collect();
        parts.extend(self.torsion.iter().map(|x| format!("{x}~")));
        write!(f, "({})", parts.join(", "))
    }
}

/// Cokernel of a relation matrix: columns index generators, rows are
/// relations. `degrees[j]` is the image of the j-th standard basis vector.
#[derive(Debug, Clone)]
pub struct Cokernel {
    pub group: FGAbelianGroup,
    pub degrees: Vec<GroupElement>,
}

/// `Z^cols / rowspace(a)` in canonical form together with the degree map on
/// generators, read off the Smith normal form transformation matrices.
pub fn cokernel(a: &IntMatrix) -> Cokernel {
    let n = a.cols();
    let res = snf(a);
    let rank = res.invariant_factors.len();
    let torsion_idx: Vec<usize> =
        (0..rank).filter(|&i| res.invariant_factors[i] > Int::one()).collect();
    let orders: Vec<Int> = torsion_idx.iter().map(|&i| res.invariant_factors[i].clone()).collect();
    let group = FGAbelianGroup::new(n - rank, orders);
    let degrees = (0..n)
        .map(|j| {
            // coordinates of e_j in the quotient: row j of v
            let free: Vec<Int> = (rank..n).map(|i| res.v[(j, i)].clone()).collect();
            let torsion: Vec<Int> = torsion_idx.iter().map(|&i| res.v[(j, i)].clone()).collect();
            group.element(free, torsion)
        })
        .collect();
    Cokernel { group, degrees }
}

/// Saturated integer basis of the linear relations among a list of plane
/// vectors: `{beta : sum beta_i a_i = 0}`. The vectors must be nonzero and
/// pairwise non-proportional.
pub fn syz2(vectors: &[(Rat, Rat)]) -> Result<Vec<Vec<Int>>> {
    for (b, c) in vectors {
        if b.is_zero() && c.is_zero() {
            return Err(Error::DegeneratePoints("zero vector among the representatives".into()));
        }
    }
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            let det = &vectors[i].0 * &vectors[j].1 - &vectors[i].1 * &vectors[j].0;
            if det.is_zero() {
                return Err(Error::DegeneratePoints(format!(
                    "representatives {i} and {j} are proportional"
                )));
            }
        }
    }
    let rows = vec![
        vectors.iter().map(|(b, _)| b.clone()).collect::<Vec<Rat>>(),
        vectors.iter().map(|(_, c)| c.clone()).collect::<Vec<Rat>>(),
    ];
    let int_rows = clear_rows(&rows);
    Ok(kernel_basis(&IntMatrix::from_rows(int_rows)))
}

/// The trinomial syzygies of a list of projective points with chosen
/// representatives `[b_i : c_i]`: the i-th relation is supported on slots
/// `i, i+1, i+2` with the 2x2-minor coefficients
/// `(c_k b_j - c_j b_k, c_i b_k - c_k b_i, c_j b_i - c_i b_j)`.
pub fn trinomial_syzygies(points: &[P1Point]) -> Result<Vec<Vec<Rat>>> {
    if !all_distinct(points) {
        return Err(Error::DegeneratePoints("marked points must be pairwise distinct".into()));
    }
    let n = points.len();
    if n < 3 {
        return Ok(Vec::new());
    }
    let minor = |i: usize, j: usize| -> Rat {
        let (bi, ci) = points[i].representative();
        let (bj, cj) = points[j].representative();
        cj * bi - ci * bj
    };
    let mut out = Vec::with_capacity(n - 2);
    for i in 0..n - 2 {
        let (j, k) = (i + 1, i + 2);
        let mut row = vec![Rat::zero(); n];
        row[i] = minor(j, k);
        row[j] = minor(k, i);
        row[k] = minor(i, j);
        out.push(row);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::util::{ivec, rat, rvec};

    fn sig(v: &[i64]) -> Vec<Int> {
        ivec(v)
    }

    /// gcd of all k x k minors; `d_k = g_k / g_{k-1}` is the invariant
    /// factor oracle used against `snf`.
    fn minor_gcd_factors(a: &IntMatrix) -> Vec<Int> {
        fn minors(a: &IntMatrix, k: usize) -> Int {
            fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
                if k == 0 {
                    return vec![vec![]];
                }
                if n < k {
                    return vec![];
                }
                let mut out = combos(n - 1, k);
                for mut c in combos(n - 1, k - 1) {
                    c.push(n - 1);
                    out.push(c);
                }
                out
            }
            let mut g = Int::zero();
            for rs in combos(a.rows(), k) {
                for cs in combos(a.cols(), k) {
                    let sub = IntMatrix::from_rows(
                        rs.iter().map(|&i| cs.iter().map(|&j| a[(i, j)].clone()).collect()).collect(),
                    );
                    g = g.gcd(&sub.det());
                }
            }
            g
        }
        let mut out = Vec::new();
        let mut prev = Int::one();
        for k in 1..=a.rows().min(a.cols()) {
            let g = minors(a, k);
            if g.is_zero() {
                break;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    fn check_snf(a: &IntMatrix) {
        let res = snf(a);
        assert_eq!(res.u.mul(a).mul(&res.v), res.s, "u*a*v != s");
        assert!(res.s.is_diagonal());
        assert_eq!(res.u.det().abs(), Int::one());
        assert_eq!(res.v.det().abs(), Int::one());
        for w in res.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility broken: {:?}", res.invariant_factors);
        }
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(3);
        let res = snf(&a);
        assert_eq!(res.s, IntMatrix::identity(3));
        assert_eq!(res.invariant_factors, vec![Int::one(), Int::one(), Int::one()]);
    }

    /// The 5x6 class-group relation matrix of the degree-one K*-surface with
    /// two D4 singularities.
    pub(crate) fn matrix_2d4() -> IntMatrix {
        IntMatrix::from_i64(&[
            &[-1, 1, 1, 0, 0, 0],
            &[-1, 0, 0, 2, 0, 0],
            &[-1, 0, 0, 0, 2, 0],
            &[-1, 0, 0, 0, 0, 2],
            &[0, -2, -1, 1, 1, 1],
        ])
    }

    #[test]
    fn snf_of_2d4_matrix() {
        let a = matrix_2d4();
        check_snf(&a);
        let res = snf(&a);
        assert_eq!(res.invariant_factors, sig(&[1, 1, 1, 2, 2]));
    }

    #[test]
    fn snf_matches_minor_gcd_oracle_on_random_matrices() {
        // simple deterministic lcg so the suite needs no rng dependency here
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 21) as i64 - 10
        };
        for _ in 0..25 {
            let rows: Vec<Vec<Int>> =
                (0..4).map(|_| (0..4).map(|_| Int::from(next())).collect()).collect();
            let a = IntMatrix::from_rows(rows);
            check_snf(&a);
            assert_eq!(snf(&a).invariant_factors, minor_gcd_factors(&a));
        }
    }

    #[test]
    fn kernel_of_sum_functional() {
        let a = IntMatrix::from_i64(&[&[1, 1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        // membership of (1,-1,0) and (0,1,-1): integer combinations of the basis
        let lattice = IntMatrix::from_rows(k.clone());
        for target in [sig(&[1, -1, 0]), sig(&[0, 1, -1])] {
            let mut found = false;
            'outer: for x in -3i64..=3 {
                for y in -3i64..=3 {
                    let cand: Vec<Int> = (0..3)
                        .map(|j| &lattice[(0, j)] * Int::from(x) + &lattice[(1, j)] * Int::from(y))
                        .collect();
                    if cand == target {
                        found = true;
                        break 'outer;
                    }
                }
            }
            assert!(found, "{target:?} not in kernel lattice");
        }
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(kernel_basis(&IntMatrix::identity(4)).is_empty());
    }

    #[test]
    fn kernel_is_saturated() {
        let a = IntMatrix::from_i64(&[&[2, 4, 6, 0, 2], &[1, 1, 1, 1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
        // saturation: the snf of the stacked basis has all invariant factors 1
        let res = snf(&IntMatrix::from_rows(k));
        assert!(res.invariant_factors.iter().all(|d| d.is_one()));
    }

    #[test]
    fn cokernel_of_empty_matrix_is_free() {
        let a = IntMatrix::zero(0, 4);
        let c = cokernel(&a);
        assert_eq!(c.group, FGAbelianGroup::free(4));
        for (j, d) in c.degrees.iter().enumerate() {
            let mut e = vec![Int::zero(); 4];
            e[j] = Int::one();
            // standard basis up to a unimodular change; rank must be full
            assert_eq!(d.free_part().len(), 4);
            let _ = e;
        }
        let rows: Vec<Vec<Rat>> = c
            .degrees
            .iter()
            .map(|d| d.free_part().iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        assert_eq!(crate::util::rank_q(&rows), 4);
    }

    #[test]
    fn cokernel_order_equals_det() {
        let a = IntMatrix::from_i64(&[&[2, 1, 0], &[0, 3, 1], &[1, 0, 4]]);
        let c = cokernel(&a);
        assert_eq!(c.group.free_rank, 0);
        let order: Int = c.group.torsion_orders.iter().product();
        assert_eq!(order, a.det().abs());
    }

    #[test]
    fn cokernel_of_2d4_matrix() {
        let c = cokernel(&matrix_2d4());
        assert_eq!(c.group, FGAbelianGroup::new(1, vec![Int::from(2), Int::from(2)]));
        // the fiber class D0 is twice the free generator carried by D4
        let d0 = &c.degrees[0];
        assert_eq!(d0.free_part()[0].abs(), Int::from(2));
        assert!(d0.torsion_part().iter().all(Zero::is_zero));
        // all five generator classes have odd free part (they halve D0)
        for j in 1..=5 {
            assert_eq!(c.degrees[j].free_part()[0].abs(), Int::one());
        }
        // relations hold in the quotient
        let a = matrix_2d4();
        for i in 0..a.rows() {
            let mut acc = c.group.zero_element();
            for j in 0..a.cols() {
                acc = acc.add(&c.degrees[j].scale(&a[(i, j)])).unwrap();
            }
            assert!(acc.is_zero(), "row {i} does not vanish in the cokernel");
        }
    }

    #[test]
    fn syz2_three_points() {
        let v = vec![(rat(1), rat(0)), (rat(0), rat(1)), (rat(1), rat(1))];
        let s = syz2(&v).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0] == sig(&[1, 1, -1]) || s[0] == sig(&[-1, -1, 1]));
    }

    #[test]
    fn syz2_four_points_spans_expected_lattice() {
        let v = vec![(rat(1), rat(0)), (rat(0), rat(1)), (rat(-1), rat(-1)), (rat(1), rat(-1))];
        let s = syz2(&v).unwrap();
        assert_eq!(s.len(), 2);
        let expected = hnf_rows(&[sig(&[1, 1, 1, 0]), sig(&[0, 2, 1, 1])]);
        assert_eq!(hnf_rows(&s), expected);
    }

    #[test]
    fn syz2_two_points_empty_and_errors() {
        assert!(syz2(&[(rat(1), rat(0)), (rat(0), rat(1))]).unwrap().is_empty());
        assert!(syz2(&[(rat(1), rat(1)), (rat(2), rat(2))]).is_err());
        assert!(syz2(&[(rat(0), rat(0))]).is_err());
    }

    #[test]
    fn trinomials_of_three_points() {
        let pts =
            vec![P1Point::from_ints(0, 1), P1Point::from_ints(1, 0), P1Point::from_ints(1, 1)];
        let t = trinomial_syzygies(&pts).unwrap();
        assert_eq!(t, vec![rvec(&[1, 1, -1])]);
    }

    #[test]
    fn trinomials_annihilate_representatives() {
        let pts = vec![
            P1Point::from_ints(1, 0),
            P1Point::from_ints(0, 1),
            P1Point::from_ints(-1, -1),
            P1Point::from_ints(1, -1),
        ];
        let t = trinomial_syzygies(&pts).unwrap();
        assert_eq!(t.len(), 2);
        for row in &t {
            assert_eq!(row.iter().filter(|c| !c.is_zero()).count(), 3);
            let mut b = Rat::zero();
            let mut c = Rat::zero();
            for (coeff, p) in row.iter().zip(&pts) {
                let (pb, pc) = p.representative();
                b += coeff * pb;
                c += coeff * pc;
            }
            assert!(b.is_zero() && c.is_zero());
        }
    }

    #[test]
    fn trinomials_of_fewer_points() {
        let pts = vec![P1Point::from_ints(1, 0), P1Point::from_ints(0, 1)];
        assert!(trinomial_syzygies(&pts).unwrap().is_empty());
        let rep = vec![P1Point::from_ints(1, 1), P1Point::from_ints(2, 2), P1Point::from_ints(1, 0)];
        assert!(trinomial_syzygies(&rep).is_err());
    }
}
