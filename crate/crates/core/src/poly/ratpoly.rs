//! Polynomials over the rationals: exact Euclidean arithmetic, Sturm chains
//! and Cauchy indices. Internal support for the root-location routines.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Dense rational polynomial, constant term first, trailing zeros trimmed.
/// The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial by convention (guard with `is_zero`).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
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

    /// Euclidean division: returns `(q, r)` with `self = q * div + r` and
    /// `deg r < deg div`. Panics if `div` is zero.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dlead = div.leading().unwrap().clone();
        let ddeg = div.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() < div.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let qlen = rem.len() - div.coeffs.len() + 1;
        let mut quot = vec![BigRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let lead = rem[k + ddeg].clone();
            if lead.is_zero() {
                continue;
            }
            let factor = lead / &dlead;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let sub = &factor * dc;
                rem[k + j] -= sub;
            }
            quot[k] = factor;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let l = l.clone();
                Self {
                    coeffs: self.coeffs.iter().map(|c| c / &l).collect(),
                }
            }
        }
    }

    fn sign_of(v: &BigRational) -> i8 {
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn sign_at(&self, x: &BigRational) -> i8 {
        Self::sign_of(&self.eval(x))
    }

    /// Sign as x -> +inf (0 for the zero polynomial).
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, Self::sign_of)
    }

    /// Sign as x -> -inf.
    pub fn sign_at_neg_inf(&self) -> i8 {
        let s = self.sign_at_pos_inf();
        if self.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }
}

/// Generalized Sturm chain of `(p0, p1)`: successive negated remainders.
pub(crate) fn sturm_chain(p0: &RatPoly, p1: &RatPoly) -> Vec<RatPoly> {
    let mut chain = Vec::new();
    if p0.is_zero() {
        return chain;
    }
    chain.push(p0.clone());
    if p1.is_zero() {
        return chain;
    }
    chain.push(p1.clone());
    loop {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.neg());
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
/// Requires `p(a) != 0` and `p(b) != 0`.
pub(crate) fn real_roots_in_open_interval(p: &RatPoly, a: &BigRational, b: &BigRational) -> usize {
    assert!(!p.is_zero());
    assert!(p.sign_at(a) != 0 && p.sign_at(b) != 0, "endpoint is a root");
    let chain = sturm_chain(p, &p.derivative());
    let va = variations(chain.iter().map(|q| q.sign_at(a)));
    let vb = variations(chain.iter().map(|q| q.sign_at(b)));
    va - vb
}

/// Number of distinct real roots of `p` over the whole real line.
pub(crate) fn real_roots_total(p: &RatPoly) -> usize {
    assert!(!p.is_zero());
    let chain = sturm_chain(p, &p.derivative());
    let va = variations(chain.iter().map(|q| q.sign_at_neg_inf()));
    let vb = variations(chain.iter().map(|q| q.sign_at_pos_inf()));
    va - vb
}

/// Cauchy index of the rational function `num/den` over the whole real line:
/// the number of poles where it jumps from -inf to +inf minus those where it
/// jumps from +inf to -inf. Computed through the Sturm chain of `(den, num)`.
pub(crate) fn cauchy_index(num: &RatPoly, den: &RatPoly) -> isize {
    if num.is_zero() || den.is_zero() {
        return 0;
    }
    let chain = sturm_chain(den, num);
    let va = variations(chain.iter().map(|q| q.sign_at_neg_inf())) as isize;
    let vb = variations(chain.iter().map(|q| q.sign_at_pos_inf())) as isize;
    va - vb
}

/// Yun's squarefree decomposition: returns pairs `(factor, multiplicity)`
/// with the factors monic, squarefree and pairwise coprime, such that the
/// product of `factor^multiplicity` equals `p` up to a constant.
pub(crate) fn squarefree_decomposition(p: &RatPoly) -> Vec<(RatPoly, u32)> {
    let mut out = Vec::new();
    if p.is_zero() || p.degree() == 0 {
        return out;
    }
    let p = p.clone().into_monic();
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let (mut b, r) = p.div_rem(&a0);
    debug_assert!(r.is_zero());
    let (mut c, r) = dp.div_rem(&a0);
    debug_assert!(r.is_zero());
    let mut i = 1u32;
    while b.degree() > 0 {
        let d = c.sub(&b.derivative());
        let a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        let (b2, r) = b.div_rem(&a);
        debug_assert!(r.is_zero());
        let (c2, r) = d.div_rem(&a);
        debug_assert!(r.is_zero());
        b = b2;
        c = c2;
        i += 1;
    }
    out
}
