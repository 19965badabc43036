//! Exact location of polynomial roots relative to the unit circle.
//!
//! Two counting devices, both in exact rational arithmetic:
//!
//! * roots strictly inside the unit disk, for polynomials coprime to their
//!   reciprocal: a Moebius transform carries the disk to the left half-plane,
//!   where the count is a Cauchy index evaluated by Sturm chains;
//! * roots exactly on the circle, for self-inversive polynomials: the
//!   substitution w = z + 1/z compresses conjugate circle pairs onto the
//!   real interval (-2, 2), where Sturm counting applies directly.

use super::ratpoly::{cauchy_index, real_roots_in_open_interval, squarefree_decomposition, RatPoly};
use super::IntPolynomial;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Number of roots of `f` (over the rationals) with strictly negative real
/// part. `f` must have no roots on the imaginary axis.
pub(crate) fn left_half_plane_count(f: &RatPoly) -> usize {
    assert!(!f.is_zero());
    let n = f.degree();
    if n == 0 {
        return 0;
    }
    // f(i*w) = p(w) + i*q(w); the powers of i provide the sign pattern.
    let mut p_coeffs = vec![BigRational::zero(); n + 1];
    let mut q_coeffs = vec![BigRational::zero(); n + 1];
    for (j, c) in f.coeffs().iter().enumerate() {
        match j % 4 {
            0 => p_coeffs[j] = c.clone(),
            1 => q_coeffs[j] = c.clone(),
            2 => p_coeffs[j] = -c.clone(),
            _ => q_coeffs[j] = -c.clone(),
        }
    }
    let p = RatPoly::from_coeffs(p_coeffs);
    let q = RatPoly::from_coeffs(q_coeffs);
    // winding of f(i*w) across the axis, in units of pi
    let delta = if n % 2 == 0 {
        -cauchy_index(&q, &p)
    } else {
        cauchy_index(&p, &q)
    };
    let twice_left = n as isize + delta;
    assert!(
        twice_left >= 0 && twice_left % 2 == 0,
        "inconsistent half-plane winding; root on the imaginary axis?"
    );
    (twice_left / 2) as usize
}

/// Number of roots of `p` strictly inside the unit disk. Requires
/// `p(0) != 0` and `p` coprime to its reciprocal (no circle roots and no
/// reciprocal root pairs), which the caller has already established.
pub(crate) fn inside_unit_disk_count(p: &IntPolynomial) -> usize {
    assert!(!p.constant_term().is_zero());
    let n = p.degree();
    if n == 0 {
        return 0;
    }
    // F(w) = (1-w)^n p((1+w)/(1-w)) maps |z|<1 onto Re w < 0.
    // p(+-1) != 0 since p has no circle roots, so deg F = n exactly.
    let one_plus = RatPoly::from_int_coeffs(&[BigInt::one(), BigInt::one()]);
    let one_minus = RatPoly::from_int_coeffs(&[BigInt::one(), -BigInt::one()]);
    let mut up = Vec::with_capacity(n + 1); // (1+w)^k
    let mut down = Vec::with_capacity(n + 1); // (1-w)^k
    let mut acc_up = RatPoly::from_int_coeffs(&[BigInt::one()]);
    let mut acc_down = acc_up.clone();
    for _ in 0..=n {
        up.push(acc_up.clone());
        down.push(acc_down.clone());
        acc_up = acc_up.mul(&one_plus);
        acc_down = acc_down.mul(&one_minus);
    }
    let mut f = RatPoly::zero();
    for (k, a) in p.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = up[k].mul(&down[n - k]);
        f = f.add(&term.mul(&RatPoly::from_int_coeffs(&[a.clone()])));
    }
    assert_eq!(f.degree(), n, "degree drop: p(-1) = 0 despite coprimality");
    left_half_plane_count(&f)
}

/// Exact number of roots (with multiplicity) of a monic self-inversive
/// polynomial `s` lying on the unit circle. `s` must satisfy
/// `reciprocal(s) = s` and `s(1) != 0 != s(-1)`; in our pipeline these hold
/// after the cyclotomic part has been divided out.
pub(crate) fn circle_root_count_palindromic(s: &IntPolynomial) -> usize {
    if s.degree() == 0 {
        return 0;
    }
    assert!(s.is_monic(), "expected a monic self-inversive factor");
    assert_eq!(&s.reversed(), s, "expected a palindromic polynomial");
    let two = BigRational::from_integer(BigInt::from(2));
    assert!(
        !s.eval_i64(1).is_zero() && !s.eval_i64(-1).is_zero(),
        "roots at +-1 must be removed with the cyclotomic part"
    );
    let deg = s.degree();
    assert!(deg % 2 == 0, "palindromic polynomial without -1 as a root has even degree");
    let half = deg / 2;

    // z^(-half) s(z) = a_half + sum_k a_(half+k) (z^k + z^-k); substituting
    // w = z + 1/z turns each z^k + z^-k into the monic Chebyshev-like C_k(w).
    let coeffs = s.coeffs();
    let w = RatPoly::from_int_coeffs(&[BigInt::zero(), BigInt::one()]);
    let mut c_prev = RatPoly::from_int_coeffs(&[BigInt::from(2)]); // C_0 = 2
    let mut c_cur = w.clone(); // C_1 = w
    let mut q = RatPoly::from_int_coeffs(&[coeffs[half].clone()]);
    for k in 1..=half {
        let scaled = c_cur.mul(&RatPoly::from_int_coeffs(&[coeffs[half + k].clone()]));
        q = q.add(&scaled);
        if k < half {
            let next = w.mul(&c_cur).sub(&c_prev);
            c_prev = c_cur;
            c_cur = next;
        }
    }
    debug_assert_eq!(q.degree(), half);

    // each root of q in (-2, 2) lifts to a conjugate pair on the circle
    let mut count = 0usize;
    for (factor, mult) in squarefree_decomposition(&q) {
        let roots = real_roots_in_open_interval(&factor, &(-two.clone()), &two);
        count += 2 * (mult as usize) * roots;
    }
    count
}

/// Classical Schur-Cohn transform recursion counting roots inside the unit
/// disk. Returns `None` when a degenerate step (vanishing constant of the
/// transform) prevents the Rouche comparison; used as a cross-check for the
/// Moebius route, which has no such gaps.
#[allow(dead_code)]
pub(crate) fn schur_cohn_inside_count(p: &IntPolynomial) -> Option<usize> {
    fn go(f: &RatPoly) -> Option<usize> {
        // strip roots at the origin: they count as inside
        let mut coeffs = f.coeffs().to_vec();
        let mut at_origin = 0usize;
        while coeffs.first().is_some_and(|c| c.is_zero()) {
            coeffs.remove(0);
            at_origin += 1;
        }
        let f = RatPoly::from_coeffs(coeffs);
        if f.is_zero() {
            return None;
        }
        let n = f.degree();
        if n == 0 {
            return Some(at_origin);
        }
        let a0 = f.coeffs()[0].clone();
        let an = f.coeffs()[n].clone();
        let delta = &a0 * &a0 - &an * &an;
        if delta.is_zero() {
            return None;
        }
        let rev = RatPoly::from_coeffs(f.coeffs().iter().rev().cloned().collect());
        let g = f
            .mul(&RatPoly::from_coeffs(vec![a0]))
            .sub(&rev.mul(&RatPoly::from_coeffs(vec![an])));
        let inner = go(&g)?;
        let inside = if delta.is_positive() {
            inner
        } else {
            n.checked_sub(inner)?
        };
        Some(at_origin + inside)
    }
    go(&RatPoly::from_int_coeffs(p.coeffs()))
}
