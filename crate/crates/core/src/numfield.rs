//! Integer polynomials, factorization over prime fields, and ramification
//! tests for rational primes in number fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmat::IntMatrix;
use crate::primes::is_prime;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumFieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too large for word-size modular arithmetic")]
    PrimeTooLarge(u64),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial vanishes modulo {0}")]
    ZeroModP(u64),
    #[error("defining polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("defining polynomial is reducible: {0}")]
    Reducible(String),
    #[error("{0} is not a squarefree integer other than 0 and 1")]
    InvalidQuadratic(i64),
}

/// Integer polynomial with coefficients in ascending degree order.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{a}*X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{a}*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    /// `X`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> IntPolynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f(X + a)` by Horner's scheme on polynomials.
    pub fn shift(&self, a: &BigInt) -> IntPolynomial {
        let lin = IntPolynomial::new(vec![a.clone(), BigInt::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPolynomial::default(), |acc, c| {
                acc.mul(&lin).add(&IntPolynomial::new(vec![c.clone()]))
            })
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_exact_int(&self, k: &BigInt) -> Option<IntPolynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    pub fn reduce_mod(&self, p: u64) -> FpPoly {
        FpPoly::from_int(self, p)
    }
}

/// `Φ_p(X) = X^(p-1) + ... + X + 1`.
pub fn cyclotomic_phi(p: u64) -> Result<IntPolynomial, NumFieldError> {
    if !is_prime(p) {
        return Err(NumFieldError::NotPrime(p));
    }
    Ok(IntPolynomial::new(vec![BigInt::one(); p as usize]))
}

/// `Φ_p(X + 1) = ((X + 1)^p - 1) / X`, whose coefficient of `X^i` is `C(p, i+1)`.
pub fn shifted_phi(p: u64) -> Result<IntPolynomial, NumFieldError> {
    if !is_prime(p) {
        return Err(NumFieldError::NotPrime(p));
    }
    let p = p as usize;
    let mut coeffs = Vec::with_capacity(p);
    let mut binom = BigInt::from(p); // C(p, 1)
    for i in 0..p {
        coeffs.push(binom.clone());
        // C(p, i+2) = C(p, i+1) * (p - i - 1) / (i + 2)
        binom = binom * BigInt::from(p - i - 1) / BigInt::from(i + 2);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Sylvester-matrix resultant.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut s = IntMatrix::zeros(size, size);
    // rows 0..n: shifts of f; rows n..n+m: shifts of g; highest degree first
    for r in 0..n {
        for (k, c) in f.coeffs.iter().enumerate() {
            s[(r, r + m - k)] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.coeffs.iter().enumerate() {
            s[(n + r, r + n - k)] = c.clone();
        }
    }
    s.determinant().expect("Sylvester matrix is square")
}

/// `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPolynomial) -> Result<BigInt, NumFieldError> {
    let n = f.degree().ok_or(NumFieldError::ZeroPolynomial)?;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let res = resultant(f, &f.derivative());
    let lc = f.leading().expect("nonzero");
    let q = res / lc;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

// ---------------------------------------------------------------------------
// Polynomials over F_p
// ---------------------------------------------------------------------------

/// Polynomial over `F_p`, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly(mod {}, {:?})", self.p, self.coeffs)
    }
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p"))
            .collect();
        Self::new(p, coeffs)
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Integer lift with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        FpPoly::new(self.p, c)
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        FpPoly::new(self.p, c)
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mulmod(a, b)) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    pub fn scale(&self, k: u64) -> FpPoly {
        FpPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| self.mulmod(c, k)).collect(),
        )
    }

    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(self.inv(lc)),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = self.inv(d.coeffs[dd]);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (FpPoly::zero(self.p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = self.mulmod(r[k + dd], lc_inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let sub = self.mulmod(c, dc);
                r[k + j] = (r[k + j] + self.p - sub) % self.p;
            }
        }
        (FpPoly::new(self.p, q), FpPoly::new(self.p, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> FpPoly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulmod(c, i as u64 % self.p))
            .collect();
        FpPoly::new(self.p, c)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// Inverse of the Frobenius on a polynomial whose only nonzero
    /// coefficients sit at multiples of `p`.
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        FpPoly::new(self.p, c)
    }

    pub fn has_root(&self) -> bool {
        (0..self.p).any(|x| self.eval(x) == 0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (self.mulmod(acc, x) + c) % self.p)
    }
}

pub(crate) fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut base = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    acc as u64
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with the
/// `g` squarefree, pairwise coprime, and `f = Π g^m`.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_decomposition(&f.pth_root()) {
            out.push((g, m * p as usize));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if !z.is_one() {
            out.push((z.monic(), i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&c.pth_root().monic()) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Splits a monic squarefree polynomial into `(product of all irreducible
/// factors of degree d, d)`.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(p);
    let mut xq = x.clone();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            out.push((rest.monic(), deg));
            break;
        }
        xq = xq.pow_mod(p as u128, &rest);
        let g = rest.gcd(&xq.sub(&x));
        if !g.is_one() {
            out.push((g.clone(), d));
            rest = rest.div_rem(&g).0;
            xq = xq.rem(&rest);
        }
    }
    out
}

/// `a + a^p + ... + a^(p^(d-1)) mod f`.
fn trace_map(a: &FpPoly, d: usize, f: &FpPoly) -> FpPoly {
    let mut acc = a.rem(f);
    let mut term = acc.clone();
    for _ in 1..d {
        term = term.pow_mod(f.p as u128, f);
        acc = acc.add(&term);
    }
    acc
}

/// Candidate polynomials `a` of degree below `n`, in a fixed enumeration order.
fn enumerate_candidate(p: u64, n: usize, mut index: u64) -> FpPoly {
    let mut c = Vec::with_capacity(n);
    for _ in 0..n {
        c.push(index % p);
        index /= p;
    }
    FpPoly::new(p, c)
}

/// Equal-degree splitting of a monic squarefree `f` whose irreducible
/// factors all have degree `d`.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return vec![f.monic()];
    }
    let p = f.p;
    let splitter = if p <= 3 {
        // deterministic: trace of enumerated candidates, shifted by every constant
        let mut found = None;
        'search: for idx in 1.. {
            let a = enumerate_candidate(p, n, idx);
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let tr = trace_map(&a, d, f);
            for c in 0..p {
                let g = f.gcd(&tr.sub(&FpPoly::new(p, vec![c])));
                let gd = g.degree().unwrap_or(0);
                if gd > 0 && gd < n {
                    found = Some(g);
                    break 'search;
                }
            }
        }
        found.expect("trace splitting always succeeds on a reducible input")
    } else {
        let e = ((p as u128).pow(d as u32) - 1) / 2;
        loop {
            let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let g = f.gcd(&a);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                break g;
            }
            let b = a.pow_mod(e, f).sub(&FpPoly::one(p));
            let g = f.gcd(&b);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                break g;
            }
        }
    };
    let other = f.div_rem(&splitter).0.monic();
    let mut out = equal_degree(&splitter, d, rng);
    out.extend(equal_degree(&other, d, rng));
    out
}

/// Complete factorization of `f` over `F_p` into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients). The leading coefficient
/// is dropped: the product of the factors equals `f / lc(f)` mod `p`.
///
/// Random choices (odd `p > 3`) come from a ChaCha stream seeded by `seed`.
pub fn factor_mod_p(
    f: &IntPolynomial,
    p: u64,
    seed: u64,
) -> Result<Vec<(FpPoly, usize)>, NumFieldError> {
    if !is_prime(p) {
        return Err(NumFieldError::NotPrime(p));
    }
    if p > u32::MAX as u64 {
        return Err(NumFieldError::PrimeTooLarge(p));
    }
    let fp = f.reduce_mod(p);
    if fp.is_zero() {
        return Err(NumFieldError::ZeroModP(p));
    }
    Ok(factor_fp(&fp, seed))
}

pub fn factor_fp(fp: &FpPoly, seed: u64) -> Vec<(FpPoly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&fp.monic()) {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    out
}

// ---------------------------------------------------------------------------
// Number fields and ramification
// ---------------------------------------------------------------------------

/// `k = Q[X]/(f)` for a monic integer polynomial `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberFieldSpec {
    minpoly: IntPolynomial,
}

impl NumberFieldSpec {
    pub fn new(minpoly: IntPolynomial) -> Result<Self, NumFieldError> {
        if !minpoly.is_monic() || minpoly.degree().unwrap_or(0) < 1 {
            return Err(NumFieldError::NotMonic);
        }
        Ok(NumberFieldSpec { minpoly })
    }

    /// `Q`, presented as `Q[X]/(X)`.
    pub fn rationals() -> Self {
        NumberFieldSpec {
            minpoly: IntPolynomial::x(),
        }
    }

    /// `Q(√d)` presented by `X² - d`.
    pub fn quadratic(d: i64) -> Result<Self, NumFieldError> {
        validate_quadratic(d)?;
        Self::new(IntPolynomial::from_i64s(&[-d, 0, 1]))
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().expect("nonzero")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ramification {
    Unramified,
    Ramified,
    Undecided,
}

/// Everything a [`RamificationVerdict`] was decided from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationCertificate {
    pub prime: u64,
    #[serde(with = "crate::json::bigint")]
    pub discriminant: BigInt,
    pub prime_divides_discriminant: bool,
    /// `(ascending coefficients of a monic irreducible factor mod p, multiplicity)`;
    /// empty when `p` does not divide the discriminant.
    pub factorization: Vec<(Vec<u64>, usize)>,
    /// Whether Dedekind's criterion shows `Z[θ]` is maximal at `p`; `None`
    /// when the criterion was not needed.
    pub p_maximal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationVerdict {
    pub verdict: Ramification,
    pub certificate: RamificationCertificate,
}

/// Decides whether `p` ramifies in `k` from the defining polynomial.
///
/// `p ∤ disc(f)` is conclusive. Otherwise Dedekind's criterion decides
/// whether `Z[θ]` is `p`-maximal; when it is, the factorization of `f` mod `p`
/// mirrors that of `p`, and when it is not, the verdict is `Undecided`.
pub fn dedekind_ramification(
    k: &NumberFieldSpec,
    p: u64,
    seed: u64,
) -> Result<RamificationVerdict, NumFieldError> {
    if !is_prime(p) {
        return Err(NumFieldError::NotPrime(p));
    }
    let f = k.minpoly();
    let disc = discriminant(f)?;
    let pb = BigInt::from(p);
    if !disc.is_multiple_of(&pb) {
        return Ok(RamificationVerdict {
            verdict: Ramification::Unramified,
            certificate: RamificationCertificate {
                prime: p,
                discriminant: disc,
                prime_divides_discriminant: false,
                factorization: vec![],
                p_maximal: None,
            },
        });
    }
    let factors = factor_mod_p(f, p, seed)?;
    // g = product of the distinct irreducibles, h = f̄ / g
    let mut g = FpPoly::one(p);
    let mut h = FpPoly::one(p);
    for (fac, m) in &factors {
        g = g.mul(fac);
        for _ in 1..*m {
            h = h.mul(fac);
        }
    }
    let lifted = g.lift().mul(&h.lift());
    let big_f = lifted
        .sub(f)
        .div_exact_int(&pb)
        .expect("g*h ≡ f mod p by construction");
    let p_maximal = big_f.reduce_mod(p).gcd(&g).gcd(&h).is_one();
    let repeated = factors.iter().any(|(_, m)| *m > 1);
    let verdict = match (p_maximal, repeated) {
        (true, true) => Ramification::Ramified,
        (true, false) => Ramification::Unramified,
        (false, _) => Ramification::Undecided,
    };
    Ok(RamificationVerdict {
        verdict,
        certificate: RamificationCertificate {
            prime: p,
            discriminant: disc,
            prime_divides_discriminant: true,
            factorization: factors
                .iter()
                .map(|(q, m)| (q.coeffs().to_vec(), *m))
                .collect(),
            p_maximal: Some(p_maximal),
        },
    })
}

/// Result of a cheap sanity probe on a defining polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityProbe {
    /// Some prime `q ∤ disc(f)` with `f` irreducible mod `q`, if one was found
    /// among the primes tried; such a prime proves irreducibility over `Q`.
    pub certificate_prime: Option<u64>,
}

/// Rejects defining polynomials that are visibly reducible: a repeated
/// factor (zero discriminant) or an integer root in degree at least two.
/// Then looks for a small prime modulo which `f` stays irreducible.
pub fn probe_irreducible(
    f: &IntPolynomial,
    seed: u64,
) -> Result<IrreducibilityProbe, NumFieldError> {
    let n = f.degree().ok_or(NumFieldError::ZeroPolynomial)?;
    if !f.is_monic() || n == 0 {
        return Err(NumFieldError::NotMonic);
    }
    if n == 1 {
        return Ok(IrreducibilityProbe {
            certificate_prime: Some(2),
        });
    }
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Err(NumFieldError::Reducible(
            "repeated factor (discriminant 0)".into(),
        ));
    }
    if let Some(root) = integer_root(f) {
        return Err(NumFieldError::Reducible(format!("integer root {root}")));
    }
    let mut certificate_prime = None;
    for q in (2u64..200).filter(|&q| is_prime(q)) {
        if disc.is_multiple_of(&BigInt::from(q)) {
            continue;
        }
        let factors = factor_mod_p(f, q, seed)?;
        if factors.len() == 1 && factors[0].1 == 1 {
            certificate_prime = Some(q);
            break;
        }
    }
    Ok(IrreducibilityProbe { certificate_prime })
}

/// An integer root of a monic polynomial, found among the divisors of the
/// constant term (or `0`).
fn integer_root(f: &IntPolynomial) -> Option<BigInt> {
    let a0 = f.coeff(0);
    if a0.is_zero() {
        return Some(BigInt::zero());
    }
    let limit = a0.abs();
    // only attempt divisor enumeration for constant terms that fit comfortably
    let bound = limit.to_u64().filter(|&b| b <= 1_000_000)?;
    let mut d = 1u64;
    while d * d <= bound {
        if bound % d == 0 {
            for cand in [d, bound / d] {
                for sign in [1i64, -1] {
                    let x = BigInt::from(cand) * sign;
                    if f.eval(&x).is_zero() {
                        return Some(x);
                    }
                }
            }
        }
        d += 1;
    }
    None
}

// ---------------------------------------------------------------------------
// Quadratic fields
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplittingKind {
    Split,
    Inert,
    Ramified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticSplitting {
    pub d: i64,
    pub p: u64,
    pub kind: SplittingKind,
    /// Valuation of `p` at a prime of `Q(√d)` above it, i.e. the
    /// ramification index.
    pub valuation_of_p: u32,
}

fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut k = 2u64;
    while k * k <= n {
        if n % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn validate_quadratic(d: i64) -> Result<(), NumFieldError> {
    if d == 0 || d == 1 || !is_squarefree(d) {
        return Err(NumFieldError::InvalidQuadratic(d));
    }
    Ok(())
}

/// Decomposition law of `p` in `Q(√d)`.
pub fn quadratic_splitting(d: i64, p: u64) -> Result<QuadraticSplitting, NumFieldError> {
    validate_quadratic(d)?;
    if !is_prime(p) {
        return Err(NumFieldError::NotPrime(p));
    }
    let kind = if p == 2 {
        match d.rem_euclid(8) {
            2 | 3 | 6 | 7 => SplittingKind::Ramified,
            1 => SplittingKind::Split,
            _ => SplittingKind::Inert,
        }
    } else {
        let r = d.rem_euclid(p as i64) as u64;
        if r == 0 {
            SplittingKind::Ramified
        } else if pow_mod(r, (p - 1) / 2, p) == 1 {
            SplittingKind::Split
        } else {
            SplittingKind::Inert
        }
    };
    Ok(QuadraticSplitting {
        d,
        p,
        kind,
        valuation_of_p: if kind == SplittingKind::Ramified {
            2
        } else {
            1
        },
    })
}

/// Outcome of running Eisenstein's criterion on `Φ_p(X + 1)` at a prime of
/// `Q(√d)` above `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinWitness {
    pub applies: bool,
    pub ramification_index: u32,
    /// Valuation of the coefficient of `X^i`, for `i < p - 1`.
    pub valuations: Vec<u32>,
}

fn p_adic_valuation(x: &BigInt, p: u64) -> u32 {
    assert!(!x.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut y = x.clone();
    while y.is_multiple_of(&pb) {
        y /= &pb;
        v += 1;
    }
    v
}

/// The coefficients of `Φ_p(X + 1)` are rational integers, so their
/// valuation at a prime above `p` is `e · v_p`.
pub fn eisenstein_check_quadratic(d: i64, p: u64) -> Result<EisensteinWitness, NumFieldError> {
    let split = quadratic_splitting(d, p)?;
    let e = split.valuation_of_p;
    let f = shifted_phi(p)?;
    let n = f.degree().expect("nonzero");
    let valuations: Vec<u32> = f.coeffs()[..n]
        .iter()
        .map(|c| e * p_adic_valuation(c, p))
        .collect();
    let applies = valuations.iter().all(|&v| v >= 1) && valuations[0] == 1;
    Ok(EisensteinWitness {
        applies,
        ramification_index: e,
        valuations,
    })
}
