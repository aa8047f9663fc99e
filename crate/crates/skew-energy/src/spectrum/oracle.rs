//! Independent polynomial route: exact determinant evaluation plus
//! interpolation.
//!
//! `det(kI - S)` is evaluated at the `n + 1` integer points `k = 0..=n`
//! with fraction-free (Bareiss) elimination over arbitrary-precision
//! integers, and the monic degree-`n` polynomial through those values is
//! recovered by exact Lagrange interpolation over rationals. Every odd
//! coefficient must interpolate to zero and every coefficient must clear
//! its denominator; any violation is reported as an oracle inconsistency
//! rather than silently rounded away.

use super::SkewPolynomial;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Computes the skew characteristic polynomial from determinant values.
pub fn char_poly_oracle(og: &OrientedGraph) -> Result<SkewPolynomial> {
    let n = og.n();
    let points: Vec<BigInt> = (0..=n as i64).map(BigInt::from).collect();
    let values: Vec<BigInt> = points
        .iter()
        .map(|k| {
            let mut m = vec![vec![BigInt::zero(); n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    *cell = if i == j {
                        k.clone()
                    } else {
                        BigInt::from(-og.skew_entry(i, j))
                    };
                }
            }
            bareiss_determinant(m)
        })
        .collect();

    // c[j] is the coefficient of x^j.
    let c = lagrange_interpolate(&points, &values)?;
    if !c[n].is_one() {
        return Err(Error::OracleInconsistency(format!(
            "leading coefficient {} is not 1",
            c[n]
        )));
    }
    let mut coeffs = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n {
        let coeff = &c[n - i];
        if i % 2 == 1 {
            if !coeff.is_zero() {
                return Err(Error::OracleInconsistency(format!(
                    "odd coefficient a_{i} = {coeff} is nonzero"
                )));
            }
        } else {
            coeffs.push(coeff.clone());
        }
    }
    SkewPolynomial::from_even_coeffs(n, coeffs)
}

/// Fraction-free Gaussian elimination; all intermediate divisions are
/// exact, which keeps entry growth polynomial instead of exponential.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone() * sign
}

/// Exact Lagrange interpolation through `(points[k], values[k])`; returns
/// the monomial coefficients `c[0]..c[d]` and errors if any of them fails
/// to be an integer.
fn lagrange_interpolate(points: &[BigInt], values: &[BigInt]) -> Result<Vec<BigInt>> {
    let d = points.len() - 1;
    // master(x) = prod (x - points[j]) over integers.
    let mut master = vec![BigInt::zero(); d + 2];
    master[0] = BigInt::one();
    for (len, p) in (1..).zip(points) {
        // In-place multiplication by (x - p), highest coefficient first.
        for i in (0..len).rev() {
            let old = master[i].clone();
            master[i + 1] += &old;
            master[i] = -(p * old);
        }
    }
    let mut acc = vec![BigRational::zero(); d + 1];
    for (k, (xk, yk)) in points.iter().zip(values).enumerate() {
        if yk.is_zero() {
            continue;
        }
        // numerator_k(x) = master(x) / (x - xk), by synthetic division.
        let mut num = vec![BigInt::zero(); d + 1];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            // master has degree d+1; its coefficient of x^{i+1} is master[i+1].
            let coeff = &master[i + 1] + &carry;
            num[i] = coeff.clone();
            carry = coeff * xk;
        }
        debug_assert!((&master[0] + &carry).is_zero(), "inexact synthetic division");
        let mut denom = BigInt::one();
        for (j, xj) in points.iter().enumerate() {
            if j != k {
                denom *= xk - xj;
            }
        }
        let scale = BigRational::new(yk.clone(), denom);
        for (a, ni) in acc.iter_mut().zip(&num) {
            if !ni.is_zero() {
                *a += &scale * BigRational::from_integer(ni.clone());
            }
        }
    }
    acc.into_iter()
        .map(|r| {
            if r.is_integer() {
                Ok(r.to_integer())
            } else {
                Err(Error::OracleInconsistency(format!(
                    "non-integer interpolated coefficient {r}"
                )))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn coeffs(og: &OrientedGraph) -> Vec<i64> {
        char_poly_oracle(og)
            .unwrap()
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn determinant_basics() {
        let m = vec![
            vec![BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(5), BigInt::from(7)],
        ];
        assert_eq!(bareiss_determinant(m), BigInt::from(-1));
        let singular = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(2), BigInt::from(4)],
        ];
        assert_eq!(bareiss_determinant(singular), BigInt::zero());
        // Zero pivot forcing a row swap.
        let m = vec![
            vec![BigInt::zero(), BigInt::from(1), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::zero(), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(1), BigInt::zero()],
        ];
        // det = 0*(0-2) - 1*(0-6) + 1*(1-0) = 7
        assert_eq!(bareiss_determinant(m), BigInt::from(7));
    }

    #[test]
    fn single_arc() {
        let og = OrientedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(coeffs(&og), vec![1, 1]);
    }

    #[test]
    fn triangle_any_orientation() {
        for arcs in [
            [(0, 1), (1, 2), (2, 0)],
            [(0, 1), (1, 2), (0, 2)],
            [(1, 0), (2, 1), (0, 2)],
        ] {
            let og = OrientedGraph::from_arcs(3, &arcs).unwrap();
            assert_eq!(coeffs(&og), vec![1, 3]);
        }
    }

    #[test]
    fn four_cycle_classes_differ() {
        let minus = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(coeffs(&minus), vec![1, 4, 0]);
        let plus = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(coeffs(&plus), vec![1, 4, 4]);
    }

    #[test]
    fn empty_graphs() {
        let og = OrientedGraph::min_to_max(Graph::empty(0));
        assert_eq!(coeffs(&og), vec![1]);
        let og = OrientedGraph::min_to_max(Graph::empty(3));
        assert_eq!(coeffs(&og), vec![1, 0]);
    }
}
