//! Exact arithmetic over the rationals and cyclotomic fields, plus exact
//! dense linear algebra (rank, kernel, reduced echelon form).
//!
//! A [`CyclotomicNumber`] is stored on the power basis ζ⁰..ζ^{φ(N)−1} of the
//! N-th cyclotomic field and kept fully reduced modulo the N-th cyclotomic
//! polynomial, so equality is structural within one conductor. Binary
//! operations on mixed conductors embed both operands into the field of
//! conductor lcm first; conductors are never enlarged anywhere else.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

/// Largest supported cyclotomic conductor.
pub const MAX_CONDUCTOR: u64 = 120;
/// Largest supported matrix dimension.
pub const MAX_MATRIX_DIM: usize = 4096;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Euler totient.
pub fn phi(n: u64) -> usize {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        result = result / n * (n - 1);
    }
    result as usize
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    divs.sort_unstable();
    divs
}

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^N − 1 by the proper-divisor factors.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^N - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let factor = cyclotomic_polynomial(d);
        num = int_poly_div_exact(&num, &factor);
    }
    let result = Arc::new(num);
    cache.lock().unwrap().insert(n, result.clone());
    result
}

/// Exact division of integer polynomials; the divisor must be monic and
/// the division must leave no remainder.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in den.iter().enumerate() {
            rem[k + i] -= &c * dc;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Reduce rational coefficients in place modulo the (monic, integer)
/// cyclotomic polynomial, truncating to degree < φ(N).
fn reduce_mod_cyclotomic(coeffs: &mut Vec<Rational>, n: u64) {
    let modulus = cyclotomic_polynomial(n);
    let deg = modulus.len() - 1;
    while coeffs.len() > deg {
        let top = coeffs.len() - 1;
        let c = coeffs.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let shift = top - deg;
        for (i, mc) in modulus.iter().take(deg).enumerate() {
            let delta = &c * Rational::from_integer(mc.clone());
            coeffs[shift + i] -= delta;
        }
    }
    coeffs.resize(deg, Rational::zero());
}

/// Exact element of the N-th cyclotomic field over ℚ, on the power basis.
#[derive(Debug, Clone)]
pub struct CyclotomicNumber {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    fn check_conductor(n: u64) -> Result<()> {
        if n == 0 || n > MAX_CONDUCTOR {
            return Err(Error::ConductorBound(n, MAX_CONDUCTOR));
        }
        Ok(())
    }

    pub fn zero(conductor: u64) -> Self {
        Self::check_conductor(conductor).expect("conductor in range");
        CyclotomicNumber {
            conductor,
            coeffs: vec![Rational::zero(); phi(conductor)],
        }
    }

    pub fn one(conductor: u64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = Rational::one();
        z
    }

    pub fn from_rational(q: Rational) -> Self {
        CyclotomicNumber {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// Build from raw power-basis coefficients of the given conductor.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<Rational>) -> Result<Self> {
        Self::check_conductor(conductor)?;
        let d = phi(conductor);
        if coeffs.len() != d {
            return Err(Error::ShapeMismatch(format!(
                "conductor {} needs {} coefficients, got {}",
                conductor,
                d,
                coeffs.len()
            )));
        }
        Ok(CyclotomicNumber { conductor, coeffs })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if this element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embed into the field of conductor `m`; requires N | m.
    pub fn embed(&self, m: u64) -> Result<Self> {
        Self::check_conductor(m)?;
        if m % self.conductor != 0 {
            return Err(Error::ShapeMismatch(format!(
                "cannot embed conductor {} into {}",
                self.conductor, m
            )));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let stride = (m / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * stride] = c.clone();
        }
        reduce_mod_cyclotomic(&mut raw, m);
        Ok(CyclotomicNumber {
            conductor: m,
            coeffs: raw,
        })
    }

    /// Re-express in the field of conductor `m` if the value lies there.
    pub fn try_reduce_to(&self, m: u64) -> Option<Self> {
        if m == self.conductor {
            return Some(self.clone());
        }
        let l = lcm_conductor(self.conductor, m).ok()?;
        let target = self.embed(l).ok()?;
        let dl = phi(l);
        let dm = phi(m);
        // Columns: the conductor-m power basis embedded into conductor l.
        let mut cols = Vec::with_capacity(dm);
        for j in 0..dm {
            let b = cyc_root(m, j as i64).embed(l).ok()?;
            cols.push(b.coeffs);
        }
        let mut a = vec![vec![Rational::zero(); dm]; dl];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..dl {
                a[i][j] = col[i].clone();
            }
        }
        let sol = solve_rational(a, target.coeffs)?;
        Some(CyclotomicNumber {
            conductor: m,
            coeffs: sol,
        })
    }

    /// Canonical form: the smallest conductor dividing N that holds the value.
    pub fn canonicalize(&self) -> Self {
        for d in divisors(self.conductor) {
            if d == self.conductor {
                break;
            }
            if let Some(r) = self.try_reduce_to(d) {
                return r;
            }
        }
        self.clone()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = align(self, other)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        Ok(CyclotomicNumber {
            conductor: a.conductor,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = align(self, other)?;
        let mut raw = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        reduce_mod_cyclotomic(&mut raw, a.conductor);
        Ok(CyclotomicNumber {
            conductor: a.conductor,
            coeffs: raw,
        })
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, by solving the φ(N)×φ(N) rational system for
    /// the multiplication-by-x matrix.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.coeffs.len();
        // Column j is x · ζ^j on the power basis.
        let mut a = vec![vec![Rational::zero(); d]; d];
        let mut col = self.clone();
        for j in 0..d {
            for i in 0..d {
                a[i][j] = col.coeffs[i].clone();
            }
            if j + 1 < d {
                col = col.mul(&cyc_root(self.conductor, 1))?;
            }
        }
        let mut rhs = vec![Rational::zero(); d];
        rhs[0] = Rational::one();
        let sol = solve_rational(a, rhs).ok_or(Error::DivisionByZero)?;
        Ok(CyclotomicNumber {
            conductor: self.conductor,
            coeffs: sol,
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = CyclotomicNumber::one(self.conductor);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplicative order, when this is a root of unity.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let bound = 2 * self.conductor.max(1);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }
}

/// ζ_N^k reduced to the power basis.
pub fn cyc_root(n: u64, k: i64) -> CyclotomicNumber {
    CyclotomicNumber::check_conductor(n).expect("conductor in range");
    let k = k.rem_euclid(n as i64) as usize;
    let d = phi(n);
    if k < d {
        let mut z = CyclotomicNumber::zero(n);
        z.coeffs[k] = Rational::one();
        return z;
    }
    let mut raw = vec![Rational::zero(); k + 1];
    raw[k] = Rational::one();
    reduce_mod_cyclotomic(&mut raw, n);
    CyclotomicNumber {
        conductor: n,
        coeffs: raw,
    }
}

fn lcm_conductor(a: u64, b: u64) -> Result<u64> {
    let l = a.lcm(&b);
    if l > MAX_CONDUCTOR {
        return Err(Error::ConductorBound(l, MAX_CONDUCTOR));
    }
    Ok(l)
}

fn align(a: &CyclotomicNumber, b: &CyclotomicNumber) -> Result<(CyclotomicNumber, CyclotomicNumber)> {
    if a.conductor == b.conductor {
        return Ok((a.clone(), b.clone()));
    }
    let l = lcm_conductor(a.conductor, b.conductor)?;
    Ok((a.embed(l)?, b.embed(l)?))
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        match align(self, other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            // lcm out of range: compare canonical minimal forms instead
            Err(_) => {
                let a = self.canonicalize();
                let b = other.canonicalize();
                a.conductor == b.conductor && a.coeffs == b.coeffs
            }
        }
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.conductor)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

/// Parse the literal format `N:c0,c1,...` with exactly φ(N) coefficients.
pub fn parse_cyclotomic(s: &str) -> Result<CyclotomicNumber> {
    let err = |msg: String| Error::Parse { line: 0, msg };
    let (head, tail) = s
        .split_once(':')
        .ok_or_else(|| err(format!("missing ':' in cyclotomic literal '{}'", s)))?;
    let conductor: u64 = head
        .trim()
        .parse()
        .map_err(|_| err(format!("bad conductor '{}'", head)))?;
    CyclotomicNumber::check_conductor(conductor)?;
    let coeffs: Result<Vec<Rational>> = tail
        .split(',')
        .map(|t| {
            Rational::from_str(t.trim()).map_err(|_| err(format!("bad rational '{}'", t.trim())))
        })
        .collect();
    CyclotomicNumber::from_coeffs(conductor, coeffs?)
}

/// Parse a comma-separated row of cyclotomic literals. Each literal opens
/// with `N:` and consumes exactly φ(N) comma-separated coefficients.
pub fn parse_literal_row(line: &str) -> Result<Vec<CyclotomicNumber>> {
    let tokens: Vec<&str> = line.split(',').map(|t| t.trim()).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let tok = tokens[i];
        let (head, first) = tok.split_once(':').ok_or_else(|| {
            Error::parse(0, format!("expected 'N:' to open a literal, got '{}'", tok))
        })?;
        let conductor: u64 = head
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad conductor '{}'", head)))?;
        CyclotomicNumber::check_conductor(conductor)?;
        let need = phi(conductor);
        let mut parts = vec![first.to_string()];
        for k in 1..need {
            let t = tokens
                .get(i + k)
                .ok_or_else(|| Error::parse(0, "truncated cyclotomic literal".to_string()))?;
            parts.push(t.to_string());
        }
        let coeffs: Result<Vec<Rational>> = parts
            .iter()
            .map(|t| {
                Rational::from_str(t.trim())
                    .map_err(|_| Error::parse(0, format!("bad rational '{}'", t)))
            })
            .collect();
        out.push(CyclotomicNumber::from_coeffs(conductor, coeffs?)?);
        i += need;
    }
    Ok(out)
}

/// Solve A·x = b over ℚ by Gaussian elimination. `a` is rows×cols. Returns
/// the unique solution; `None` when the system is inconsistent or the
/// solution is not unique.
pub fn solve_rational(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    if rows == 0 {
        return if b.is_empty() { Some(Vec::new()) } else { None };
    }
    let cols = a[0].len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        b[r] *= &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
                let delta = &f * &b[r];
                b[i] -= delta;
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if r < cols {
        return None; // rank deficient: no unique solution
    }
    // Consistency of the remaining equations.
    for i in r..rows {
        if !b[i].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivot_col_of_row.iter().enumerate() {
        x[c] = b[row].clone();
    }
    Some(x)
}

/// Dense matrix of cyclotomic numbers sharing one conductor.
#[derive(Debug, Clone)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    conductor: u64,
    entries: Vec<CyclotomicNumber>,
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for ExactMatrix {}

impl ExactMatrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<CyclotomicNumber>) -> Result<Self> {
        if rows > MAX_MATRIX_DIM || cols > MAX_MATRIX_DIM {
            return Err(Error::DimensionBound(rows.max(cols), MAX_MATRIX_DIM));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        let mut conductor = 1;
        for e in &entries {
            conductor = lcm_conductor(conductor, e.conductor())?;
        }
        let entries: Result<Vec<_>> = entries.into_iter().map(|e| e.embed(conductor)).collect();
        Ok(ExactMatrix {
            rows,
            cols,
            conductor,
            entries: entries?,
        })
    }

    pub fn zero(rows: usize, cols: usize, conductor: u64) -> Result<Self> {
        Self::from_entries(rows, cols, vec![CyclotomicNumber::zero(conductor); rows * cols])
    }

    pub fn identity(n: usize, conductor: u64) -> Result<Self> {
        let mut m = Self::zero(n, n, conductor)?;
        for i in 0..n {
            *m.at_mut(i, i) = CyclotomicNumber::one(conductor);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn at(&self, i: usize, j: usize) -> &CyclotomicNumber {
        &self.entries[i * self.cols + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut CyclotomicNumber {
        &mut self.entries[i * self.cols + j]
    }

    /// Replace one entry; the value must live in the matrix conductor.
    pub fn set(&mut self, i: usize, j: usize, value: CyclotomicNumber) -> Result<()> {
        let v = value.embed(self.conductor)?;
        *self.at_mut(i, j) = v;
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j && !e.is_one() {
                    return false;
                }
                if i != j && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        let l = lcm_conductor(self.conductor, other.conductor)?;
        Ok((self.embed(l)?, other.embed(l)?))
    }

    pub fn embed(&self, conductor: u64) -> Result<Self> {
        if conductor == self.conductor {
            return Ok(self.clone());
        }
        let entries: Result<Vec<_>> = self.entries.iter().map(|e| e.embed(conductor)).collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            conductor,
            entries: entries?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (a, b) = self.aligned(other)?;
        let mut out = ExactMatrix::zero(a.rows, b.cols, a.conductor)?;
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.at(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..b.cols {
                    let y = b.at(k, j);
                    if y.is_zero() {
                        continue;
                    }
                    let prod = x.mul(y)?;
                    let cur = out.at(i, j).add(&prod)?;
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("subtraction shape mismatch".to_string()));
        }
        let (a, b) = self.aligned(other)?;
        let entries: Result<Vec<_>> = a
            .entries
            .iter()
            .zip(b.entries.iter())
            .map(|(x, y)| x.sub(y))
            .collect();
        ExactMatrix::from_entries(a.rows, a.cols, entries?)
    }

    pub fn scalar_mul(&self, c: &CyclotomicNumber) -> Result<Self> {
        let entries: Result<Vec<_>> = self.entries.iter().map(|e| e.mul(c)).collect();
        ExactMatrix::from_entries(self.rows, self.cols, entries?)
    }

    /// Kronecker product, row-major block convention: the (i,j) block of the
    /// result is a[i][j] · b.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        if rows > MAX_MATRIX_DIM || cols > MAX_MATRIX_DIM {
            return Err(Error::DimensionBound(rows.max(cols), MAX_MATRIX_DIM));
        }
        let (a, b) = self.aligned(other)?;
        let mut out = ExactMatrix::zero(rows, cols, a.conductor)?;
        for i1 in 0..a.rows {
            for j1 in 0..a.cols {
                let x = a.at(i1, j1);
                if x.is_zero() {
                    continue;
                }
                for i2 in 0..b.rows {
                    for j2 in 0..b.cols {
                        let y = b.at(i2, j2);
                        if y.is_zero() {
                            continue;
                        }
                        *out.at_mut(i1 * b.rows + i2, j1 * b.cols + j2) = x.mul(y)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<CyclotomicNumber> {
        let mut t = CyclotomicNumber::zero(self.conductor);
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.at(i, i))?;
        }
        Ok(t)
    }

    /// Stack matrices vertically; all must share the column count.
    pub fn stack_vertical(blocks: &[ExactMatrix]) -> Result<Self> {
        let cols = blocks.first().map(|b| b.cols).unwrap_or(0);
        let mut conductor = 1;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::ShapeMismatch("stacking column mismatch".to_string()));
            }
            conductor = lcm_conductor(conductor, b.conductor)?;
        }
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            let e = b.embed(conductor)?;
            rows += e.rows;
            entries.extend(e.entries);
        }
        ExactMatrix::from_entries(rows, cols, entries)
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> Result<(Self, usize)> {
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            let pivot = (rank..m.rows).find(|&i| !m.at(i, c).is_zero());
            let Some(p) = pivot else { continue };
            for j in 0..m.cols {
                let tmp = m.at(rank, j).clone();
                *m.at_mut(rank, j) = m.at(p, j).clone();
                *m.at_mut(p, j) = tmp;
            }
            let inv = m.at(rank, c).inv()?;
            for j in 0..m.cols {
                *m.at_mut(rank, j) = m.at(rank, j).mul(&inv)?;
            }
            for i in 0..m.rows {
                if i != rank && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let delta = f.mul(m.at(rank, j))?;
                        *m.at_mut(i, j) = m.at(i, j).sub(&delta)?;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        Ok((m, rank))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1)
    }

    /// Dimension of the right kernel: cols − rank.
    pub fn kernel_dim(&self) -> Result<usize> {
        Ok(self.cols - self.rank()?)
    }

    /// Determinant by fraction-free-ish elimination with explicit pivots.
    pub fn det(&self) -> Result<CyclotomicNumber> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("determinant of non-square matrix".to_string()));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = CyclotomicNumber::one(m.conductor);
        for c in 0..n {
            let pivot = (c..n).find(|&i| !m.at(i, c).is_zero());
            let Some(p) = pivot else {
                return Ok(CyclotomicNumber::zero(m.conductor));
            };
            if p != c {
                for j in 0..n {
                    let tmp = m.at(c, j).clone();
                    *m.at_mut(c, j) = m.at(p, j).clone();
                    *m.at_mut(p, j) = tmp;
                }
                det = det.neg();
            }
            let piv = m.at(c, c).clone();
            det = det.mul(&piv)?;
            let inv = piv.inv()?;
            for i in c + 1..n {
                if !m.at(i, c).is_zero() {
                    let f = m.at(i, c).mul(&inv)?;
                    for j in c..n {
                        let delta = f.mul(m.at(c, j))?;
                        *m.at_mut(i, j) = m.at(i, j).sub(&delta)?;
                    }
                }
            }
        }
        Ok(det)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
