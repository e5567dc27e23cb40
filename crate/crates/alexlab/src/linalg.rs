//! Exact integer linear algebra: canonical row Hermite normal form, Smith
//! normal form invariants, integer kernels, lattice intersection, and
//! fraction-free determinants. Pivot selection is deterministic (smallest
//! nonzero absolute value, then lowest index) so outputs are reproducible;
//! the canonical HNF itself is unique per row lattice regardless.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bigpoly::IntPoly;

pub(crate) type Row = Vec<BigInt>;

/// Canonical row HNF of the lattice spanned by `rows` in Z^width: positive
/// pivots in strictly increasing column order, entries above each pivot
/// reduced into `[0, pivot)`. Zero rows are dropped; the zero lattice is the
/// empty basis.
pub(crate) fn row_hnf(rows: Vec<Row>, width: usize) -> Vec<Row> {
    let mut work: Vec<Row> = rows.into_iter().filter(|r| r.iter().any(|c| !c.is_zero())).collect();
    for row in &work {
        assert_eq!(row.len(), width, "row width mismatch");
    }
    let rank = echelonize(&mut work, width, None);
    work.truncate(rank);
    reduce_above_pivots(&mut work, width);
    work
}

/// Row HNF together with a unimodular transform: returns `(h, u)` with
/// `u · a = [h; 0]` where the trailing rows of `u` span the left kernel.
/// Zero rows of `a` are kept so the transform stays square.
pub(crate) fn row_hnf_with_transform(a: &[Row], width: usize) -> (Vec<Row>, Vec<Row>) {
    let k = a.len();
    let mut work: Vec<Row> = a.to_vec();
    let mut u: Vec<Row> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let rank = echelonize(&mut work, width, Some(&mut u));
    let h = work[..rank].to_vec();
    (h, u)
}

/// Basis (canonical HNF) of the left kernel `{z : z · a = 0}`.
pub(crate) fn left_kernel(a: &[Row], width: usize) -> Vec<Row> {
    let k = a.len();
    let (h, u) = row_hnf_with_transform(a, width);
    let kernel_rows: Vec<Row> = u[h.len()..k].to_vec();
    row_hnf(kernel_rows, k)
}

// Bring `work` into row echelon form over Z with positive pivots, mirroring
// all row operations onto `transform` when present. Returns the rank; rows
// beyond it are zero.
fn echelonize(work: &mut [Row], width: usize, mut transform: Option<&mut Vec<Row>>) -> usize {
    let mut placed = 0;
    for col in 0..width {
        loop {
            let mut pivot: Option<usize> = None;
            for (i, row) in work.iter().enumerate().skip(placed) {
                if row[col].is_zero() {
                    continue;
                }
                match pivot {
                    Some(p) if work[p][col].abs() <= row[col].abs() => {}
                    _ => pivot = Some(i),
                }
            }
            let Some(p) = pivot else { break };
            work.swap(placed, p);
            if let Some(t) = transform.as_deref_mut() {
                t.swap(placed, p);
            }
            let mut others = false;
            for i in placed + 1..work.len() {
                if work[i][col].is_zero() {
                    continue;
                }
                let q = work[i][col].div_floor(&work[placed][col]);
                if !q.is_zero() {
                    for j in 0..width {
                        let delta = &q * &work[placed][j];
                        work[i][j] -= delta;
                    }
                    if let Some(t) = transform.as_deref_mut() {
                        let k = t[0].len();
                        for j in 0..k {
                            let delta = &q * &t[placed][j];
                            t[i][j] -= delta;
                        }
                    }
                }
                if !work[i][col].is_zero() {
                    others = true;
                }
            }
            if !others {
                if work[placed][col].is_negative() {
                    for c in work[placed].iter_mut() {
                        *c = -&*c;
                    }
                    if let Some(t) = transform.as_deref_mut() {
                        for c in t[placed].iter_mut() {
                            *c = -&*c;
                        }
                    }
                }
                placed += 1;
                break;
            }
        }
    }
    placed
}

fn pivot_col(row: &Row) -> usize {
    row.iter().position(|c| !c.is_zero()).expect("pivot in nonzero row")
}

fn reduce_above_pivots(work: &mut [Row], width: usize) {
    for j in 0..work.len() {
        let cj = pivot_col(&work[j]);
        for i in 0..j {
            let q = work[i][cj].div_floor(&work[j][cj]);
            if q.is_zero() {
                continue;
            }
            for c in 0..width {
                let delta = &q * &work[j][c];
                work[i][c] -= delta;
            }
        }
    }
}

/// Membership of `x` in the lattice with canonical HNF basis `basis`.
pub(crate) fn lattice_contains(basis: &[Row], x: &[BigInt]) -> bool {
    let mut x = x.to_vec();
    for row in basis {
        let c = pivot_col(row);
        if x[..c].iter().any(|v| !v.is_zero()) {
            return false;
        }
        let (q, r) = x[c].div_rem(&row[c]);
        if !r.is_zero() {
            // later rows are zero at this column, so nothing can clear it
            return false;
        }
        for (xi, bi) in x.iter_mut().zip(row) {
            *xi -= &q * bi;
        }
    }
    x.iter().all(|v| v.is_zero())
}

/// Intersection of two lattices in Z^width given by generating rows.
pub(crate) fn lattice_intersect(b1: &[Row], b2: &[Row], width: usize) -> Vec<Row> {
    if b1.is_empty() || b2.is_empty() {
        return Vec::new();
    }
    let stacked: Vec<Row> = b1.iter().chain(b2.iter()).cloned().collect();
    let kernel = left_kernel(&stacked, width);
    let mut gens = Vec::with_capacity(kernel.len());
    for z in kernel {
        let mut v = vec![BigInt::zero(); width];
        for (i, coeff) in z[..b1.len()].iter().enumerate() {
            for (vj, bj) in v.iter_mut().zip(&b1[i]) {
                *vj += coeff * bj;
            }
        }
        gens.push(v);
    }
    row_hnf(gens, width)
}

/// Invariant factors of Z^width modulo the row span of `rows`: returns
/// `(free_rank, factors ≥ 2 in a divisibility chain)`. The rows pass
/// through HNF first, which shrinks both the row count and the entries the
/// Smith reduction has to work on.
pub(crate) fn quotient_invariants(rows: Vec<Row>, width: usize) -> (usize, Vec<BigInt>) {
    let basis = row_hnf(rows, width);
    let diag = smith_diagonal(basis, width);
    let rank = width - diag.iter().filter(|d| !d.is_zero()).count();
    let factors = diag.into_iter().filter(|d| d > &BigInt::one()).collect();
    (rank, factors)
}

/// Diagonal of the Smith normal form (nonnegative, divisibility chain along
/// nonzero entries). Elimination uses unimodular 2×2 gcd transforms, which
/// bound coefficient growth and strictly shrink the pivot whenever a
/// non-divisible entry appears.
pub(crate) fn smith_diagonal(mut m: Vec<Row>, width: usize) -> Vec<BigInt> {
    m.retain(|r| r.iter().any(|c| !c.is_zero()));
    let rows = m.len();
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows && k < width {
        // choose pivot: smallest |entry| in the trailing block, lowest index
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..width {
                if m[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if m[pi][pj].abs() <= m[i][j].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            // clear column k below the pivot with row transforms
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let a = m[k][k].clone();
                let b = m[i][k].clone();
                if (&b % &a).is_zero() {
                    let q = &b / &a;
                    for j in k..width {
                        let delta = &q * &m[k][j];
                        m[i][j] -= delta;
                    }
                } else {
                    let eg = a.extended_gcd(&b);
                    let a_g = &a / &eg.gcd;
                    let b_g = &b / &eg.gcd;
                    for j in k..width {
                        let rk = m[k][j].clone();
                        let ri = m[i][j].clone();
                        m[k][j] = &eg.x * &rk + &eg.y * &ri;
                        m[i][j] = &a_g * ri - &b_g * rk;
                    }
                }
            }
            // clear row k right of the pivot with column transforms; these
            // touch only rows k.., and may reintroduce entries in column k
            for j in k + 1..width {
                if m[k][j].is_zero() {
                    continue;
                }
                let a = m[k][k].clone();
                let b = m[k][j].clone();
                if (&b % &a).is_zero() {
                    let q = &b / &a;
                    for row in m.iter_mut().skip(k) {
                        let delta = &q * &row[k];
                        row[j] -= delta;
                    }
                } else {
                    let eg = a.extended_gcd(&b);
                    let a_g = &a / &eg.gcd;
                    let b_g = &b / &eg.gcd;
                    for row in m.iter_mut().skip(k) {
                        let ck = row[k].clone();
                        let cj = row[j].clone();
                        row[k] = &eg.x * &ck + &eg.y * &cj;
                        row[j] = &a_g * cj - &b_g * ck;
                    }
                }
            }
            let col_clear = (k + 1..rows).all(|i| m[i][k].is_zero());
            let row_clear = (k + 1..width).all(|j| m[k][j].is_zero());
            if col_clear && row_clear {
                break;
            }
        }
        if m[k][k].is_negative() {
            for j in k..width {
                m[k][j] = -&m[k][j];
            }
        }
        diag.push(m[k][k].clone());
        k += 1;
    }
    // enforce the divisibility chain d_1 | d_2 | ...
    let mut i = 0;
    while i + 1 < diag.len() {
        if diag[i].is_zero() || (&diag[i + 1] % &diag[i]).is_zero() {
            i += 1;
            continue;
        }
        let g = diag[i].gcd(&diag[i + 1]);
        let l = (&diag[i] * &diag[i + 1]) / &g;
        diag[i] = g;
        diag[i + 1] = l;
        i = i.saturating_sub(1);
    }
    diag
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub(crate) fn det_bareiss(mut m: Vec<Row>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Bareiss determinant for matrices over Z[t].
pub(crate) fn poly_det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return IntPoly::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}
