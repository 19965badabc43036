//! Exact Lefschetz numbers L(f^m), the specialized sequence
//! `L(f^m) = 1 - lambda_1^m - ... - lambda_n^m` under the theorem's
//! hypotheses, and the associated zeta function.

use crate::homology::{hypothesis_shape, GradedHomologyAction};
use crate::poly::{char_poly, IntPolynomial, RatPoly};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use std::fmt;

/// The exact integers L(f^1), ..., L(f^M).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzSequence {
    values: Vec<BigInt>,
}

impl LefschetzSequence {
    pub fn from_values(values: Vec<BigInt>) -> Self {
        Self { values }
    }

    pub fn max_m(&self) -> usize {
        self.values.len()
    }

    /// L(f^m), 1-based. Panics when m is out of range or zero.
    pub fn value(&self, m: usize) -> &BigInt {
        &self.values[m - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Power sums p_m = sum_i lambda_i^m of the roots of a monic polynomial,
/// for m = 1..=max_m, by the Newton-identity recurrence on the coefficients.
/// All arithmetic is exact.
pub fn trace_power_sums(p: &IntPolynomial, max_m: usize) -> Vec<BigInt> {
    assert!(p.is_monic() || p.degree() == 0, "power sums need a monic polynomial");
    let n = p.degree();
    // elementary symmetric functions: e_i = (-1)^i c_{n-i}
    let e: Vec<BigInt> = (0..=n)
        .map(|i| {
            let c = p.coeff(n - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut sums: Vec<BigInt> = Vec::with_capacity(max_m);
    for m in 1..=max_m {
        let mut pm = BigInt::zero();
        for i in 1..=n.min(m.saturating_sub(1)) {
            let term = &e[i] * &sums[m - 1 - i];
            if i % 2 == 1 {
                pm += term;
            } else {
                pm -= term;
            }
        }
        if m <= n {
            let term = BigInt::from(m as i64) * &e[m];
            if m % 2 == 1 {
                pm += term;
            } else {
                pm -= term;
            }
        }
        sums.push(pm);
    }
    sums
}

/// L(f^m) = sum_k (-1)^k trace(f_{*k}^m), by exact matrix powers. Works for
/// arbitrary graded actions, not only the theorem's hypothesis shape.
pub fn lefschetz_number(action: &GradedHomologyAction, m: u64) -> BigInt {
    assert!(m >= 1, "iterate order must be positive");
    let mut total = BigInt::zero();
    for (&degree, matrix) in action.degree_matrices() {
        let t = matrix.pow(m).trace();
        if degree % 2 == 0 {
            total += t;
        } else {
            total -= t;
        }
    }
    total
}

/// The sequence L(f^1), ..., L(f^max_m). Under the theorem's hypothesis
/// shape this is `1 - p_m` with `p_m` the power sums of char(f_{*1}),
/// computed by the Newton recurrence; general actions fall back to per-m
/// alternating traces.
pub fn lefschetz_sequence(action: &GradedHomologyAction, max_m: usize) -> LefschetzSequence {
    if hypothesis_shape(action).satisfies_theorem_hypotheses {
        let p = char_poly(&action.degree_one());
        let sums = trace_power_sums(&p, max_m);
        LefschetzSequence::from_values(sums.into_iter().map(|pm| BigInt::one() - pm).collect())
    } else {
        LefschetzSequence::from_values(
            (1..=max_m as u64)
                .map(|m| lefschetz_number(action, m))
                .collect(),
        )
    }
}

/// A quotient of integer polynomials in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    fn reduced(num: IntPolynomial, den: IntPolynomial) -> Self {
        assert!(!den.is_zero());
        let g = RatPoly::from_int_coeffs(num.coeffs()).gcd(&RatPoly::from_int_coeffs(den.coeffs()));
        if g.degree() == 0 {
            return Self { num, den };
        }
        let g = crate::poly::primitive_from_rat(&g);
        let num = num.div_exact(&g).expect("gcd divides the numerator");
        let den = den.div_exact(&g).expect("gcd divides the denominator");
        Self { num, den }
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    /// Power-series coefficients of num/den around t = 0 up to `order`
    /// (inclusive). Requires den(0) != 0.
    pub fn series(&self, order: usize) -> Vec<BigRational> {
        let d0 = BigRational::from_integer(self.den.coeff(0));
        assert!(!d0.is_zero(), "series expansion needs den(0) != 0");
        let mut out = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = BigRational::from_integer(self.num.coeff(k));
            for j in 1..=k {
                acc -= BigRational::from_integer(self.den.coeff(j)) * &out[k - j];
            }
            out.push(acc / &d0);
        }
        out
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = poly_in_t(&self.num);
        if self.den == IntPolynomial::one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({})", poly_in_t(&self.den))
        }
    }
}

fn poly_in_t(p: &IntPolynomial) -> String {
    // ascending powers read better for generating functions
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        use num::traits::Signed;
        let mag = c.abs();
        let body = if i == 0 {
            format!("{mag}")
        } else {
            let var = if i == 1 { "t".into() } else { format!("t^{i}") };
            if mag.is_one() {
                var
            } else {
                format!("{mag}{var}")
            }
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() {
                format!("-{body}")
            } else {
                body
            });
        } else {
            parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
        }
    }
    parts.join(" ")
}

/// The Lefschetz zeta function det(I - t f_{*1}) / (1 - t), in lowest terms.
/// Its logarithmic derivative generates the sequence L(f^m) under the
/// theorem's hypothesis shape.
pub fn zeta(action: &GradedHomologyAction) -> RationalFunction {
    let a = action.degree_one();
    // det(I - tA) is the coefficient reversal of det(xI - A)
    let num = IntPolynomial::from_coeffs(char_poly(&a).coeffs().iter().rev().cloned().collect());
    let den = IntPolynomial::from_i64(&[1, -1]);
    RationalFunction::reduced(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::validate_action;
    use crate::matrix::IntMatrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn action_deg1(rows: &[Vec<i64>]) -> GradedHomologyAction {
        GradedHomologyAction::from_degree_one(IntMatrix::from_rows(rows))
    }

    fn ints(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn power_sums_examples() {
        // primitive cube roots of unity
        let p = IntPolynomial::from_i64(&[1, 1, 1]);
        assert_eq!(trace_power_sums(&p, 3), ints(&[-1, -1, 2]));
        // single eigenvalue 2
        let p = IntPolynomial::from_i64(&[-2, 1]);
        assert_eq!(trace_power_sums(&p, 4), ints(&[2, 4, 8, 16]));
        // nilpotent
        let p = IntPolynomial::from_i64(&[0, 0, 1]);
        assert_eq!(trace_power_sums(&p, 3), ints(&[0, 0, 0]));
        // empty spectrum
        assert_eq!(trace_power_sums(&IntPolynomial::one(), 3), ints(&[0, 0, 0]));
    }

    #[test]
    fn lefschetz_number_paper_values() {
        let neg = action_deg1(&[vec![-1]]);
        assert_eq!(lefschetz_number(&neg, 1), BigInt::from(2));
        assert_eq!(lefschetz_number(&neg, 2), BigInt::from(0));

        let zero = action_deg1(&[vec![0, 0], vec![0, 0]]);
        for m in 1..=6 {
            assert_eq!(lefschetz_number(&zero, m), BigInt::one());
        }

        let one = action_deg1(&[vec![1]]);
        for m in 1..=6 {
            assert_eq!(lefschetz_number(&one, m), BigInt::zero());
        }
    }

    #[test]
    fn sequence_examples() {
        let phi3 = action_deg1(&[vec![0, -1], vec![1, -1]]);
        assert_eq!(lefschetz_sequence(&phi3, 3).values(), &ints(&[2, 2, -1])[..]);

        let two = action_deg1(&[vec![2]]);
        assert_eq!(lefschetz_sequence(&two, 3).values(), &ints(&[-1, -3, -7])[..]);

        let nil = action_deg1(&[vec![0]]);
        assert_eq!(
            lefschetz_sequence(&nil, 5).values(),
            &ints(&[1, 1, 1, 1, 1])[..]
        );
    }

    #[test]
    fn sequence_matches_matrix_power_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0AC1E);
        for _ in 0..60 {
            let n = rng.gen_range(0..=6);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let action = action_deg1(&rows);
            let seq = lefschetz_sequence(&action, 30);
            for m in 1..=30u64 {
                assert_eq!(
                    seq.value(m as usize),
                    &lefschetz_number(&action, m),
                    "m={m} rows={rows:?}"
                );
            }
        }
    }

    #[test]
    fn general_actions_use_alternating_traces() {
        // torus-like action outside the hypothesis shape
        let mut raw = BTreeMap::new();
        raw.insert(1, vec![ints(&[1, 0]), ints(&[0, 1])]);
        raw.insert(2, vec![ints(&[1])]);
        let action = validate_action(raw).unwrap();
        // L = 1 - 2 + 1 = 0 for every m
        for m in 1..=4 {
            assert_eq!(lefschetz_number(&action, m), BigInt::zero());
        }
        assert_eq!(
            lefschetz_sequence(&action, 4).values(),
            &ints(&[0, 0, 0, 0])[..]
        );
    }

    #[test]
    fn iterate_composition() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0A7);
        for _ in 0..25 {
            let n = rng.gen_range(1..=4);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let action = action_deg1(&rows);
            for a in 1..=3u64 {
                let powered = action.power(a);
                for b in 1..=4u64 {
                    assert_eq!(
                        lefschetz_number(&action, a * b),
                        lefschetz_number(&powered, b)
                    );
                }
            }
        }
    }

    #[test]
    fn zeta_examples() {
        let z = zeta(&action_deg1(&[vec![1]]));
        assert_eq!(z.num(), &IntPolynomial::one());
        assert_eq!(z.den(), &IntPolynomial::one());
        assert_eq!(z.to_string(), "1");

        let z = zeta(&action_deg1(&[vec![0]]));
        assert_eq!(z.num(), &IntPolynomial::one());
        assert_eq!(z.den(), &IntPolynomial::from_i64(&[1, -1]));
        assert_eq!(z.to_string(), "(1)/(1 - t)");

        let z = zeta(&action_deg1(&[vec![-1]]));
        assert_eq!(z.num(), &IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(z.den(), &IntPolynomial::from_i64(&[1, -1]));
        assert_eq!(z.to_string(), "(1 + t)/(1 - t)");
    }

    #[test]
    fn zeta_series_matches_exponential_of_lefschetz_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x2E7A);
        const ORDER: usize = 10;
        for _ in 0..25 {
            let n = rng.gen_range(0..=4);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            let action = action_deg1(&rows);
            let seq = lefschetz_sequence(&action, ORDER);

            // exp of S(t) = sum L_m t^m / m via E' = S' E
            let s: Vec<BigRational> = (0..=ORDER)
                .map(|m| {
                    if m == 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(seq.value(m).clone(), BigInt::from(m as i64))
                    }
                })
                .collect();
            let mut e = vec![BigRational::zero(); ORDER + 1];
            e[0] = BigRational::one();
            for k in 1..=ORDER {
                let mut acc = BigRational::zero();
                for j in 1..=k {
                    acc += BigRational::from_integer(BigInt::from(j as i64)) * &s[j] * &e[k - j];
                }
                e[k] = acc / BigRational::from_integer(BigInt::from(k as i64));
            }

            assert_eq!(zeta(&action).series(ORDER), e, "rows={rows:?}");
        }
    }
}
