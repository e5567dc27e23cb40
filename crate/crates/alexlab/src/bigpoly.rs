//! Exact arbitrary-precision polynomial arithmetic over the integers.
//!
//! `IntPoly` is a dense polynomial in `t` with `BigInt` coefficients stored
//! in ascending degree, trailing zeros trimmed; the zero polynomial is the
//! empty coefficient sequence. Units of the Laurent ring Z[t^Z] are exactly
//! `±t^k` and are carried separately by [`LaurentUnit`], so every nonzero
//! Laurent class has a canonical representative with nonzero constant term
//! and positive leading coefficient.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, euler_phi};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivideByZero,
    #[error("no exact quotient in Z[t]")]
    NotDivisible,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("cyclotomic index must be a positive integer")]
    InvalidIndex,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Dense integer polynomial, coefficients ascending by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// A unit `±t^k` of the Laurent ring Z[t^Z].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaurentUnit {
    pub negative: bool,
    pub shift: i64,
}

impl LaurentUnit {
    pub fn identity() -> Self {
        LaurentUnit { negative: false, shift: 0 }
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// Multiply a polynomial by this unit. Requires `shift ≥ 0`, which is
    /// always the case for units produced by [`IntPoly::normalize_unit`].
    pub fn apply(&self, f: &IntPoly) -> IntPoly {
        assert!(self.shift >= 0, "cannot apply a negative shift to Z[t]");
        let shifted = f.shifted(self.shift as usize);
        if self.negative {
            -&shifted
        } else {
            shifted
        }
    }
}

impl fmt::Display for LaurentUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.negative { "-" } else { "" };
        match self.shift {
            0 => write!(f, "{}1", s),
            1 => write!(f, "{}t", s),
            k => write!(f, "{}t^{}", s, k),
        }
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// The polynomial `t`.
    pub fn variable() -> Self {
        IntPoly::from_i64_coeffs(&[0, 1])
    }

    /// `c · t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        IntPoly::from_coeffs(coeffs)
    }

    /// `t^n − 1`.
    pub fn tn_minus_one(n: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n as usize] = BigInt::one();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `t^k · f`.
    pub fn shifted(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scaled(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f(t^v)`.
    pub fn substitute_power(&self, v: u64) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        if v == 0 {
            return IntPoly::from_coeffs(vec![self.coeffs.iter().sum()]);
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * v as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * v as usize] = c.clone();
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Exact quotient `f / g` in `Z[t]`; `NotDivisible` when none exists.
    pub fn exact_div(&self, g: &IntPoly) -> Result<IntPoly, PolyError> {
        if g.is_zero() {
            return Err(PolyError::DivideByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let df = self.degree().unwrap();
        let dg = g.degree().unwrap();
        if df < dg {
            return Err(PolyError::NotDivisible);
        }
        let gl = g.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = rem[k + dg].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(gl);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                rem[k + j] -= &q * gc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// The Sylvester matrix of `(f, g)`: `deg g` rows of f-coefficients in
    /// descending order above `deg f` rows of g-coefficients. `None` when
    /// either polynomial is zero.
    pub fn sylvester_matrix(&self, g: &IntPoly) -> Option<Vec<Vec<BigInt>>> {
        let d = self.degree()?;
        let e = g.degree()?;
        let size = d + e;
        let mut rows = Vec::with_capacity(size);
        for i in 0..e {
            let mut row = vec![BigInt::zero(); size];
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..d {
            let mut row = vec![BigInt::zero(); size];
            for (j, c) in g.coeffs.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        Some(rows)
    }

    /// Resultant as the determinant of the Sylvester matrix, computed by
    /// fraction-free elimination. This is the slow reference path; the
    /// subresultant path in [`IntPoly::resultant`] must agree with it.
    pub fn resultant_sylvester(&self, g: &IntPoly) -> Result<BigInt, PolyError> {
        if self.is_zero() || g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let syl = self.sylvester_matrix(g).unwrap();
        Ok(crate::linalg::det_bareiss(syl))
    }

    /// Resultant of `f` and `g` via the subresultant remainder sequence,
    /// with the sign fixed by the Sylvester layout (f-rows above g-rows).
    pub fn resultant(&self, g: &IntPoly) -> Result<BigInt, PolyError> {
        if self.is_zero() || g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(resultant_prs(self, g))
    }

    /// True iff the coefficient sequence is palindromic.
    pub fn is_reciprocal(&self) -> Result<bool, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let n = self.coeffs.len();
        Ok((0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]))
    }

    /// Canonical representative of the unit orbit of `f`: nonzero constant
    /// term, lowest degree 0, positive leading coefficient. Returns `(g, u)`
    /// with `f = u · g`.
    pub fn normalize_unit(&self) -> Result<(IntPoly, LaurentUnit), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let shift = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let mut coeffs: Vec<BigInt> = self.coeffs[shift..].to_vec();
        let negative = coeffs.last().unwrap().is_negative();
        if negative {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        Ok((IntPoly { coeffs }, LaurentUnit { negative, shift: shift as i64 }))
    }

    /// All `m ≥ 1` with `Φ_m | f`, searched over the finite candidate set
    /// `{m : φ(m) ≤ deg f}` (φ(m) ≥ √(m/2) bounds the search at `2·deg²`).
    pub fn cyclotomic_divisors(&self) -> Result<Vec<u64>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let d = self.degree().unwrap() as u64;
        let mut found = Vec::new();
        for m in 1..=2 * d * d + 1 {
            if euler_phi(m) <= d && self.exact_div(&cyclotomic(m).unwrap()).is_ok() {
                found.push(m);
            }
        }
        Ok(found)
    }
}

/// The m-th cyclotomic polynomial `Φ_m`, by recursive exact division of
/// `t^m − 1` by the lower cyclotomics. Results are memoized process-wide.
pub fn cyclotomic(m: u64) -> Result<IntPoly, PolyError> {
    if m < 1 {
        return Err(PolyError::InvalidIndex);
    }
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().expect("cyclotomic cache poisoned");
    for d in divisors(m) {
        if cache.contains_key(&d) {
            continue;
        }
        let mut phi = IntPoly::tn_minus_one(d);
        for e in divisors(d) {
            if e < d {
                phi = phi.exact_div(&cache[&e]).expect("cyclotomic division is exact");
            }
        }
        cache.insert(d, phi);
    }
    Ok(cache[&m].clone())
}

fn lc(p: &IntPoly) -> BigInt {
    p.leading().cloned().unwrap_or_else(BigInt::zero)
}

fn exact_int_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
    q
}

fn exact_int_pow_div(a: &BigInt, b: &BigInt, e: usize) -> BigInt {
    // a / b^e via repeated exact division, avoiding a large intermediate power
    let mut q = a.clone();
    for _ in 0..e {
        q = exact_int_div(&q, b);
    }
    q
}

/// Pseudo-remainder: the remainder of `lc(b)^{deg a − deg b + 1} · a` by `b`.
fn prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let e = b.degree().unwrap();
    let lb = lc(b);
    let delta = a.degree().unwrap() - e;
    let mut r = a.clone();
    let mut steps = 0usize;
    while !r.is_zero() && r.degree().unwrap() >= e {
        let k = r.degree().unwrap() - e;
        let top = lc(&r);
        r = &r.scaled(&lb) - &b.shifted(k).scaled(&top);
        steps += 1;
    }
    // pad to exactly lc(b)^{δ+1}·a mod b when leading terms cancelled early
    for _ in steps..delta + 1 {
        r = r.scaled(&lb);
    }
    r
}

// Resultant by the subresultant polynomial remainder sequence; the standard
// resultant with f-rows above g-rows, so Res(f,g) = (−1)^{deg f·deg g} Res(g,f).
fn resultant_prs(f: &IntPoly, g: &IntPoly) -> BigInt {
    let d = f.degree().unwrap();
    let e = g.degree().unwrap();
    if e == 0 {
        return g.constant_term().pow(d as u32);
    }
    if d == 0 {
        return f.constant_term().pow(e as u32);
    }
    if d < e {
        let r = resultant_prs(g, f);
        return if d % 2 == 1 && e % 2 == 1 { -r } else { r };
    }
    let mut a = f.clone();
    let mut b = g.clone();
    let mut negate = false;
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        if r.is_zero() {
            // positive-degree common factor
            return BigInt::zero();
        }
        let mut divisor = gg.clone();
        for _ in 0..delta {
            divisor *= &h;
        }
        a = b;
        b = IntPoly::from_coeffs(r.coeffs.iter().map(|c| exact_int_div(c, &divisor)).collect());
        gg = lc(&a);
        if delta > 0 {
            h = exact_int_pow_div(&gg.pow(delta as u32), &h, delta - 1);
        }
        if b.degree().unwrap() == 0 {
            break;
        }
    }
    let da = a.degree().unwrap();
    let res = exact_int_pow_div(&lc(&b).pow(da as u32), &h, da - 1);
    if negate {
        -res
    } else {
        res
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var,
    Caret,
    Plus,
    Minus,
    Star,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, PolyError> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        match c {
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                toks.push(Tok::Num(digits.parse().expect("digits parse")));
            }
            't' => {
                chars.next();
                toks.push(Tok::Var);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' | '−' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            other => {
                return Err(PolyError::Parse(format!("unexpected character {other:?} in {s:?}")));
            }
        }
    }
    Ok(toks)
}

impl FromStr for IntPoly {
    type Err = PolyError;

    /// Grammar: signed terms `[coef][*][t[^exp]]` joined by `+`/`-`,
    /// e.g. `"t^2 - 3t + 1"`. The Unicode minus sign is accepted.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        let err = |msg: &str| PolyError::Parse(format!("{msg} in {s:?}"));
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(err("empty input"));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut pos = 0;
        let mut first_term = true;
        while pos < toks.len() {
            let mut negate = false;
            let mut saw_sign = false;
            while matches!(toks.get(pos), Some(Tok::Plus | Tok::Minus)) {
                if toks[pos] == Tok::Minus {
                    negate = !negate;
                }
                saw_sign = true;
                pos += 1;
            }
            if !first_term && !saw_sign {
                return Err(err("missing '+' or '-' between terms"));
            }
            first_term = false;
            let coef: Option<BigInt> = match toks.get(pos) {
                Some(Tok::Num(v)) => {
                    pos += 1;
                    Some(v.clone())
                }
                _ => None,
            };
            if toks.get(pos) == Some(&Tok::Star) {
                if coef.is_none() {
                    return Err(err("'*' without a coefficient"));
                }
                pos += 1;
            }
            let mut exp = 0usize;
            let mut has_var = false;
            if toks.get(pos) == Some(&Tok::Var) {
                has_var = true;
                exp = 1;
                pos += 1;
                if toks.get(pos) == Some(&Tok::Caret) {
                    pos += 1;
                    match toks.get(pos) {
                        Some(Tok::Num(e)) => {
                            pos += 1;
                            exp = e
                                .to_string()
                                .parse()
                                .ok()
                                .filter(|e| *e <= 1_000_000)
                                .ok_or_else(|| err("exponent out of range"))?;
                        }
                        _ => return Err(err("'^' must be followed by a nonnegative integer")),
                    }
                }
            }
            let coef = match (coef, has_var) {
                (Some(c), _) => c,
                (None, true) => BigInt::one(),
                (None, false) => return Err(err("expected a term")),
            };
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            let signed = if negate { -coef } else { coef };
            coeffs[exp] += signed;
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}
