//! Exact integer-polynomial toolkit: characteristic polynomials, nilpotency,
//! reciprocal/self-inversive structure, cyclotomic factors and exact counts
//! of roots outside the unit disk.

mod cyclotomic;
mod ratpoly;
mod rootloc;

pub use cyclotomic::{candidate_orders, cyclotomic, euler_phi, graeffe_step};
pub(crate) use ratpoly::RatPoly;
pub(crate) use rootloc::{circle_root_count_palindromic, inside_unit_disk_count};

use crate::matrix::IntMatrix;
use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// The operation requires a nonzero constant term (no root at 0).
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    /// The polynomial shares a factor with its reciprocal; roots on the unit
    /// circle (or reciprocal pairs) must be divided out first.
    #[error("polynomial is not coprime to its reciprocal; remove the self-inversive part first")]
    RootOnCircle,
}

/// Dense integer polynomial, constant term first. Trailing zero coefficients
/// are trimmed; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// x^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial by convention (guard with `is_zero`).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval_big(&BigInt::from(x))
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Coefficient reversal x^deg * p(1/x), with no precondition checks.
    pub(crate) fn reversed(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().rev().cloned().collect())
    }

    /// p(-x)
    pub(crate) fn substitute_neg_x(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// Exact division: `Some(q)` with `self = q * div` when the division
    /// leaves no remainder and the quotient is integral, `None` otherwise.
    pub fn div_exact(&self, div: &Self) -> Option<Self> {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = RatPoly::from_int_coeffs(&self.coeffs)
            .div_rem(&RatPoly::from_int_coeffs(&div.coeffs));
        if !r.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(q.coeffs().len());
        for c in q.coeffs() {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(Self::from_coeffs(out))
    }

    /// Multiplicity of the root 0, i.e. the number of leading zero
    /// coefficients. Zero polynomial reports 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide out x^k. Panics if p is not divisible by x^k.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Approximate complex roots by the Durand-Kerner iteration, zeros of the
    /// polynomial listed with multiplicity. Purely numerical: used for angle
    /// extraction and as a cross-check oracle, never for exact decisions.
    pub fn float_roots(&self) -> Vec<Complex64> {
        let zeros_at_origin = self.zero_root_multiplicity();
        let p = self.shift_down(zeros_at_origin);
        let mut roots = vec![Complex64::new(0.0, 0.0); zeros_at_origin];
        let n = p.degree();
        if n == 0 {
            return roots;
        }
        let lead = p.leading().unwrap().to_f64().unwrap_or(f64::MAX);
        let coeffs: Vec<Complex64> = p
            .coeffs
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::MAX) / lead, 0.0))
            .collect();
        let eval = |z: Complex64| {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in coeffs.iter().rev() {
                acc = acc * z + c;
            }
            acc
        };
        let radius = 1.0 + coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let seed = Complex64::new(0.4, 0.9);
        let mut zs: Vec<Complex64> = (0..n)
            .map(|k| seed.powu(k as u32 + 1) * radius / seed.norm().powi(k as i32 + 1) * 0.9)
            .collect();
        for _ in 0..600 {
            let mut max_step = 0.0f64;
            for k in 0..n {
                let mut denom = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if j != k {
                        denom *= zs[k] - zs[j];
                    }
                }
                if denom.norm() == 0.0 {
                    denom = Complex64::new(1e-300, 0.0);
                }
                let step = eval(zs[k]) / denom;
                zs[k] -= step;
                max_step = max_step.max(step.norm());
            }
            if max_step < 1e-13 * (1.0 + radius) {
                break;
            }
        }
        roots.extend(zs);
        roots
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
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
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

fn exact_div_bigint(v: BigInt, k: i64) -> BigInt {
    use num::Integer;
    let (q, r) = v.div_rem(&BigInt::from(k));
    assert!(r.is_zero(), "non-exact division in Faddeev-LeVerrier step");
    q
}

/// Characteristic polynomial det(xI - A), monic of degree n, by the
/// Faddeev-LeVerrier recurrence. All divisions are exact over the integers.
pub fn char_poly(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = IntMatrix::zeros(n); // M_0 = 0
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
        m = a.mul(&m).add_scalar_diag(&coeffs[n - k + 1]);
        let t = trace_of_product(a, &m);
        coeffs[n - k] = exact_div_bigint(-t, k as i64);
    }
    IntPolynomial::from_coeffs(coeffs)
}

fn trace_of_product(a: &IntMatrix, b: &IntMatrix) -> BigInt {
    let n = a.dim();
    let mut t = BigInt::zero();
    for i in 0..n {
        for k in 0..n {
            t += a.entry(i, k) * b.entry(k, i);
        }
    }
    t
}

/// Whether A^n = 0, by repeated exact multiplication (entries stay small for
/// nilpotent inputs). Equivalent to char_poly(A) = x^n.
pub fn is_nilpotent(a: &IntMatrix) -> bool {
    let n = a.dim();
    if n == 0 {
        return true;
    }
    let mut b = a.clone();
    for _ in 1..n {
        if b.is_zero() {
            return true;
        }
        b = b.mul(a);
    }
    b.is_zero()
}

/// x^deg(p) * p(1/x): the coefficient reversal. Requires p(0) != 0.
pub fn reciprocal(p: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
    if p.constant_term().is_zero() {
        return Err(PolyError::ZeroConstantTerm);
    }
    Ok(p.reversed())
}

/// Convert a rational polynomial to the primitive integer polynomial with
/// positive leading coefficient spanning the same rational multiples.
pub(crate) fn primitive_from_rat(p: &RatPoly) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num::integer::gcd(content, c.clone());
    }
    let mut out: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    if out.last().is_some_and(|c| c.is_negative()) {
        for c in &mut out {
            *c = -&*c;
        }
    }
    IntPolynomial::from_coeffs(out)
}

/// Greatest common divisor of p and its reciprocal, primitive with positive
/// leading coefficient. Contains every root of p on the unit circle (and any
/// reciprocal root pairs). Requires p(0) != 0.
pub fn self_inversive_part(p: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
    let rev = reciprocal(p)?;
    let g = RatPoly::from_int_coeffs(p.coeffs()).gcd(&RatPoly::from_int_coeffs(rev.coeffs()));
    Ok(primitive_int(&g))
}

/// Maximal factor of p that is a product of cyclotomic polynomials, together
/// with the orders k (repeated per factor multiplicity) whose primitive k-th
/// roots of unity occur among the roots. Detected by trial division against
/// every Phi_k with phi(k) <= deg p. Requires p(0) != 0.
pub fn cyclotomic_part(p: &IntPolynomial) -> Result<(IntPolynomial, Vec<u64>), PolyError> {
    if p.constant_term().is_zero() {
        return Err(PolyError::ZeroConstantTerm);
    }
    let mut rem = p.clone();
    let mut product = IntPolynomial::one();
    let mut orders = Vec::new();
    for k in candidate_orders(p.degree()) {
        if rem.degree() == 0 {
            break;
        }
        let phi_k = cyclotomic(k);
        if phi_k.degree() > rem.degree() {
            continue;
        }
        while let Some(q) = rem.div_exact(&phi_k) {
            rem = q;
            product = product.mul(&phi_k);
            orders.push(k);
            if rem.degree() == 0 {
                break;
            }
        }
    }
    Ok((product, orders))
}

/// Exact number of roots with |z| > 1. Requires p(0) != 0 and p coprime to
/// its reciprocal (no roots on the unit circle); violations report
/// `RootOnCircle`.
pub fn count_roots_outside_unit_disk(p: &IntPolynomial) -> Result<usize, PolyError> {
    let rev = reciprocal(p)?;
    if p.degree() == 0 {
        return Ok(0);
    }
    let g = RatPoly::from_int_coeffs(p.coeffs()).gcd(&RatPoly::from_int_coeffs(rev.coeffs()));
    if g.degree() > 0 {
        return Err(PolyError::RootOnCircle);
    }
    Ok(p.degree() - inside_unit_disk_count(p))
}
