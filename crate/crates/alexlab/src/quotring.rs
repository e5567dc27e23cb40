//! The truncated group ring `Z/m[t]/(tⁿ−1)` and its ideals.
//!
//! Each [`TruncRingCtx`] is one finite layer of the inverse system of group
//! rings; `m = 0` means integer coefficients. Ideals are fingerprinted by
//! the canonical Hermite normal form of their underlying additive lattice
//! in `Zⁿ` (for `m > 0` the lattice always contains `m·Zⁿ`), so ideal
//! equality is bitwise basis equality. Quotients are reported as finitely
//! generated abelian groups via Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::gcd;
use crate::bigpoly::IntPoly;
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("ring contexts do not match")]
    CtxMismatch,
    #[error("{v} is not a unit modulo {n}")]
    NotAUnit { v: i64, n: u64 },
    #[error("levels are incompatible in the divisibility order")]
    IncompatibleLevels,
    #[error("annihilator images did not stabilize within the schedule")]
    NotStabilized,
}

/// One layer `Z/m[t]/(tⁿ−1)`; `m = 0` encodes integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncRingCtx {
    n: u64,
    m: u64,
}

impl TruncRingCtx {
    pub fn new(n: u64, m: u64) -> Self {
        assert!(n >= 1, "exponent level n must be at least 1");
        TruncRingCtx { n, m }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// True when ring elements at `self` can be pushed down to `target`:
    /// `target.n | n` and the coefficient moduli are compatible.
    pub fn maps_onto(&self, target: TruncRingCtx) -> bool {
        if self.n % target.n != 0 {
            return false;
        }
        match (self.m, target.m) {
            (0, _) => true,
            (_, 0) => false,
            (m1, m2) => m1 % m2 == 0,
        }
    }

    fn reduce_coeff(&self, c: BigInt) -> BigInt {
        if self.m == 0 {
            c
        } else {
            c.mod_floor(&BigInt::from(self.m))
        }
    }
}

impl fmt::Display for TruncRingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            0 => write!(f, "Z[t]/(t^{}-1)", self.n),
            m => write!(f, "Z/{}[t]/(t^{}-1)", m, self.n),
        }
    }
}

/// An element of a layer ring: exactly `n` coefficients, reduced mod `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElem {
    ctx: TruncRingCtx,
    coeffs: Vec<BigInt>,
}

impl RingElem {
    /// Project an integer polynomial into the layer: the coefficient of
    /// `t^i` folds onto index `i mod n`, then reduces mod `m`.
    pub fn reduce(f: &IntPoly, ctx: TruncRingCtx) -> RingElem {
        let n = ctx.n as usize;
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in f.coeffs().iter().enumerate() {
            coeffs[i % n] += c;
        }
        for c in &mut coeffs {
            *c = ctx.reduce_coeff(std::mem::take(c));
        }
        RingElem { ctx, coeffs }
    }

    pub fn zero(ctx: TruncRingCtx) -> RingElem {
        RingElem { ctx, coeffs: vec![BigInt::zero(); ctx.n as usize] }
    }

    pub fn one(ctx: TruncRingCtx) -> RingElem {
        RingElem::reduce(&IntPoly::one(), ctx)
    }

    pub fn ctx(&self) -> TruncRingCtx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The canonical lift to `Z[t]` with exponents below `n`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem, RingError> {
        if self.ctx != other.ctx {
            return Err(RingError::CtxMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ctx.reduce_coeff(a + b))
            .collect();
        Ok(RingElem { ctx: self.ctx, coeffs })
    }

    /// Cyclic convolution of coefficient sequences, reduced mod `m`.
    pub fn mul(&self, other: &RingElem) -> Result<RingElem, RingError> {
        if self.ctx != other.ctx {
            return Err(RingError::CtxMismatch);
        }
        let n = self.ctx.n as usize;
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[(i + j) % n] += a * b;
            }
        }
        for c in &mut coeffs {
            *c = self.ctx.reduce_coeff(std::mem::take(c));
        }
        Ok(RingElem { ctx: self.ctx, coeffs })
    }

    /// The ring automorphism `t ↦ t^v` for `gcd(v, n) = 1`.
    pub fn twist(&self, v: i64) -> Result<RingElem, RingError> {
        let v = normalize_twist(v, self.ctx.n)?;
        let n = self.ctx.n as usize;
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i * v as usize) % n] = c.clone();
        }
        Ok(RingElem { ctx: self.ctx, coeffs })
    }

    /// Push down along the inverse system: fold indices mod `target.n`,
    /// reduce coefficients mod `target.m`. A ring homomorphism.
    pub fn transition(&self, target: TruncRingCtx) -> Result<RingElem, RingError> {
        if !self.ctx.maps_onto(target) {
            return Err(RingError::IncompatibleLevels);
        }
        let n = target.n as usize;
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] += c;
        }
        for c in &mut coeffs {
            *c = target.reduce_coeff(std::mem::take(c));
        }
        Ok(RingElem { ctx: target, coeffs })
    }
}

fn normalize_twist(v: i64, n: u64) -> Result<u64, RingError> {
    let n_i = n as i128;
    let folded = ((v as i128 % n_i) + n_i) % n_i;
    let folded = folded as u64;
    if gcd(folded, n) != 1 {
        return Err(RingError::NotAUnit { v, n });
    }
    Ok(folded)
}

/// Canonical HNF fingerprint of the additive lattice in `Zⁿ` underlying an
/// ideal (or any shift-closed subgroup) of a layer ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealLattice {
    ctx: TruncRingCtx,
    basis: Vec<Vec<BigInt>>,
}

impl IdealLattice {
    /// Lattice spanned by all cyclic shifts `tⁱ·g` of the generators,
    /// together with `m·eᵢ` when `m > 0`.
    pub fn from_generators(gens: &[RingElem], ctx: TruncRingCtx) -> Result<IdealLattice, RingError> {
        if gens.iter().any(|g| g.ctx != ctx) {
            return Err(RingError::CtxMismatch);
        }
        let n = ctx.n as usize;
        let mut rows = Vec::with_capacity(gens.len() * n + n);
        for g in gens {
            for shift in 0..n {
                let mut row = vec![BigInt::zero(); n];
                for (j, c) in g.coeffs.iter().enumerate() {
                    row[(j + shift) % n] = c.clone();
                }
                rows.push(row);
            }
        }
        append_modulus_rows(&mut rows, ctx);
        Ok(IdealLattice { ctx, basis: linalg::row_hnf(rows, n) })
    }

    /// The principal ideal lattice of `f mod (tⁿ−1, m)`.
    pub fn from_poly(f: &IntPoly, ctx: TruncRingCtx) -> IdealLattice {
        IdealLattice::from_generators(&[RingElem::reduce(f, ctx)], ctx).expect("matching ctx")
    }

    /// The zero ideal: the empty lattice for `m = 0`, `m·Zⁿ` otherwise.
    pub fn zero(ctx: TruncRingCtx) -> IdealLattice {
        IdealLattice::from_generators(&[], ctx).expect("no generators")
    }

    /// The unit ideal `Zⁿ`.
    pub fn unit(ctx: TruncRingCtx) -> IdealLattice {
        IdealLattice::from_poly(&IntPoly::one(), ctx)
    }

    pub fn ctx(&self) -> TruncRingCtx {
        self.ctx
    }

    /// Canonical HNF basis rows.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Ideal equality is bitwise equality of canonical bases.
    pub fn ideal_equal(&self, other: &IdealLattice) -> Result<bool, RingError> {
        if self.ctx != other.ctx {
            return Err(RingError::CtxMismatch);
        }
        Ok(self.basis == other.basis)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis == IdealLattice::zero(self.ctx).basis
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis == IdealLattice::unit(self.ctx).basis
    }

    pub fn contains(&self, elem: &RingElem) -> Result<bool, RingError> {
        if self.ctx != elem.ctx {
            return Err(RingError::CtxMismatch);
        }
        Ok(linalg::lattice_contains(&self.basis, &elem.coeffs))
    }

    /// Apply `t ↦ t^v` to every basis row and re-canonicalize.
    pub fn twist(&self, v: i64) -> Result<IdealLattice, RingError> {
        let v = normalize_twist(v, self.ctx.n)?;
        let n = self.ctx.n as usize;
        let rows = self
            .basis
            .iter()
            .map(|row| {
                let mut out = vec![BigInt::zero(); n];
                for (i, c) in row.iter().enumerate() {
                    out[(i * v as usize) % n] = c.clone();
                }
                out
            })
            .collect();
        Ok(IdealLattice { ctx: self.ctx, basis: linalg::row_hnf(rows, n) })
    }

    /// Image of this subgroup under the transition map to `target`.
    pub fn transition_image(&self, target: TruncRingCtx) -> Result<IdealLattice, RingError> {
        if !self.ctx.maps_onto(target) {
            return Err(RingError::IncompatibleLevels);
        }
        let n = target.n as usize;
        let mut rows: Vec<Vec<BigInt>> = self
            .basis
            .iter()
            .map(|row| {
                let mut out = vec![BigInt::zero(); n];
                for (i, c) in row.iter().enumerate() {
                    out[i % n] += c;
                }
                out
            })
            .collect();
        append_modulus_rows(&mut rows, target);
        Ok(IdealLattice { ctx: target, basis: linalg::row_hnf(rows, n) })
    }

    pub fn intersect(&self, other: &IdealLattice) -> Result<IdealLattice, RingError> {
        if self.ctx != other.ctx {
            return Err(RingError::CtxMismatch);
        }
        let n = self.ctx.n as usize;
        let basis = linalg::lattice_intersect(&self.basis, &other.basis, n);
        Ok(IdealLattice { ctx: self.ctx, basis })
    }

    /// Direct check that the basis is closed under multiplication by `t`.
    pub fn is_shift_closed(&self) -> bool {
        let n = self.ctx.n as usize;
        self.basis.iter().all(|row| {
            let mut shifted = vec![BigInt::zero(); n];
            for (i, c) in row.iter().enumerate() {
                shifted[(i + 1) % n] = c.clone();
            }
            linalg::lattice_contains(&self.basis, &shifted)
        })
    }
}

fn append_modulus_rows(rows: &mut Vec<Vec<BigInt>>, ctx: TruncRingCtx) {
    if ctx.m == 0 {
        return;
    }
    let n = ctx.n as usize;
    for i in 0..n {
        let mut row = vec![BigInt::zero(); n];
        row[i] = BigInt::from(ctx.m);
        rows.push(row);
    }
}

/// Finitely generated abelian group: free rank plus invariant factors in a
/// divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn new(rank: usize, invariant_factors: Vec<BigInt>) -> Self {
        for w in invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "invariant factors must form a divisibility chain");
        }
        assert!(
            invariant_factors.iter().all(|d| d >= &BigInt::from(2)),
            "invariant factors must be at least 2"
        );
        FinAbGroup { rank, invariant_factors }
    }

    pub fn from_i64(rank: usize, factors: &[i64]) -> Self {
        FinAbGroup::new(rank, factors.iter().map(|&d| BigInt::from(d)).collect())
    }

    pub fn trivial() -> Self {
        FinAbGroup { rank: 0, invariant_factors: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Order of the group; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            return None;
        }
        Some(self.invariant_factors.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{}", d));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Quotient of the layer ring by the ideal generated by `gens`, as an
/// abelian group: Smith normal form of the ideal lattice.
pub fn quotient_group(gens: &[RingElem], ctx: TruncRingCtx) -> Result<FinAbGroup, RingError> {
    let lattice = IdealLattice::from_generators(gens, ctx)?;
    let (rank, invariant_factors) =
        linalg::quotient_invariants(lattice.basis.clone(), ctx.n as usize);
    Ok(FinAbGroup { rank, invariant_factors })
}

/// Annihilator of `f` in its layer ring, as an ideal lattice: the set of
/// `x ∈ Zⁿ` with `x·C_f ≡ 0 (mod m)`, where `C_f` is the cyclic
/// multiplication matrix of `f`. For `m = 0` this is the integer kernel.
pub fn annihilator(f: &RingElem) -> IdealLattice {
    let ctx = f.ctx;
    let n = ctx.n as usize;
    let mut mat: Vec<Vec<BigInt>> = Vec::with_capacity(2 * n);
    for shift in 0..n {
        let mut row = vec![BigInt::zero(); n];
        for (j, c) in f.coeffs.iter().enumerate() {
            row[(j + shift) % n] = c.clone();
        }
        mat.push(row);
    }
    let basis = if ctx.m == 0 {
        linalg::left_kernel(&mat, n)
    } else {
        append_modulus_rows(&mut mat, ctx);
        let kernel = linalg::left_kernel(&mat, n);
        let projected: Vec<Vec<BigInt>> = kernel.into_iter().map(|z| z[..n].to_vec()).collect();
        linalg::row_hnf(projected, n)
    };
    IdealLattice { ctx, basis }
}

/// Finite-level witness for the zero-divisor lemma: compute the annihilator
/// of `f` at each schedule level, push the lattices down to `target`,
/// intersect the images as the schedule ascends, and return the running
/// intersection once two consecutive steps agree. The inverse limit of the
/// annihilators is zero precisely when these stable images are zero.
pub fn stable_annihilator_image(
    f: &IntPoly,
    target: TruncRingCtx,
    schedule: &[TruncRingCtx],
) -> Result<IdealLattice, RingError> {
    if target.m == 0 {
        return Err(RingError::IncompatibleLevels);
    }
    if schedule.iter().any(|level| !level.maps_onto(target)) {
        return Err(RingError::IncompatibleLevels);
    }
    let mut current: Option<IdealLattice> = None;
    for level in schedule {
        let ann = annihilator(&RingElem::reduce(f, *level));
        let image = ann.transition_image(target)?;
        let next = match &current {
            None => image,
            Some(acc) => acc.intersect(&image)?,
        };
        if current.as_ref() == Some(&next) {
            return Ok(next);
        }
        current = Some(next);
    }
    Err(RingError::NotStabilized)
}
