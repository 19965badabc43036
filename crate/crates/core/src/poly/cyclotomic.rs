//! Cyclotomic polynomials and the Graeffe root-squaring step.

use super::IntPolynomial;
use num::bigint::BigInt;
use num::traits::{One, Zero};
use std::collections::BTreeMap;

/// Euler's totient by trial-division factorization.
pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n > 0);
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut pk = 1u64;
            while n % p == 0 {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

fn x_pow_minus_one(n: usize) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[0] = -BigInt::one();
    coeffs[n] = BigInt::one();
    IntPolynomial::from_coeffs(coeffs)
}

/// The n-th cyclotomic polynomial, via `Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d`.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    let mut cache = BTreeMap::new();
    cyclotomic_cached(n, &mut cache)
}

fn cyclotomic_cached(n: u64, cache: &mut BTreeMap<u64, IntPolynomial>) -> IntPolynomial {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut result = x_pow_minus_one(n as usize);
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            for div in [d, n / d] {
                if div < n {
                    let phi_d = cyclotomic_cached(div, cache);
                    result = result
                        .div_exact(&phi_d)
                        .expect("x^n - 1 is divisible by Phi_d for every d | n");
                }
            }
        }
        d += 1;
    }
    cache.insert(n, result.clone());
    result
}

/// All orders k whose cyclotomic polynomial could divide a polynomial of the
/// given degree, i.e. k with `phi(k) <= degree`, in ascending order.
pub fn candidate_orders(degree: usize) -> Vec<u64> {
    if degree == 0 {
        return Vec::new();
    }
    let d = degree as u64;
    // phi(k) >= sqrt(k/2) for all k >= 1, so phi(k) <= d implies k <= 2d^2.
    let limit = 2 * d * d + 1;
    (1..=limit).filter(|&k| euler_phi(k) <= d).collect()
}

/// One Graeffe root-squaring step: the returned polynomial has roots equal to
/// the squares of the roots of `p`, with the same degree and leading sign.
pub fn graeffe_step(p: &IntPolynomial) -> IntPolynomial {
    // p(x) p(-x) is even; read off its coefficients at even powers.
    let neg = p.substitute_neg_x();
    let prod = p.mul(&neg);
    let mut coeffs = Vec::with_capacity(p.degree() + 1);
    for i in 0..=p.degree() {
        coeffs.push(prod.coeff(2 * i));
    }
    let q = IntPolynomial::from_coeffs(coeffs);
    // normalize so the result is monic when p is monic
    if p.degree() % 2 == 1 {
        -&q
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_small_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e, "phi({})", i + 1);
        }
    }

    #[test]
    fn first_cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(cyclotomic(3), IntPolynomial::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPolynomial::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(8), IntPolynomial::from_i64(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn cyclotomic_degrees_match_phi() {
        for k in 1..=30u64 {
            assert_eq!(cyclotomic(k).degree() as u64, euler_phi(k), "order {k}");
        }
    }

    #[test]
    fn candidate_orders_for_quartic() {
        // phi(k) <= 4: k in {1,2,3,4,5,6,8,10,12}
        assert_eq!(candidate_orders(4), vec![1, 2, 3, 4, 5, 6, 8, 10, 12]);
    }

    #[test]
    fn graeffe_squares_roots() {
        // (x-2)(x-3) -> roots 4, 9
        let p = IntPolynomial::from_i64(&[6, -5, 1]);
        assert_eq!(graeffe_step(&p), IntPolynomial::from_i64(&[36, -13, 1]));
        // x - 2 -> x - 4 (odd degree sign normalization)
        let q = IntPolynomial::from_i64(&[-2, 1]);
        assert_eq!(graeffe_step(&q), IntPolynomial::from_i64(&[-4, 1]));
    }

    #[test]
    fn graeffe_fixes_cyclotomics_up_to_revisit() {
        // squaring roots of unity permutes them: Phi_3 is literally fixed
        let p = cyclotomic(3);
        assert_eq!(graeffe_step(&p), p);
    }
}
