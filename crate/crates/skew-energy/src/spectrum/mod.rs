//! Exact skew characteristic polynomials, the coefficientwise quasi-order,
//! and skew energy by two independent routes.

mod expansion;
mod oracle;
mod recurrence;
mod energy;

pub use expansion::char_poly_expansion;
pub use oracle::char_poly_oracle;
pub use recurrence::{char_poly_recurrence_edge, char_poly_recurrence_vertex};
pub use energy::{skew_energy_integral, skew_energy_spectral};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// The skew characteristic polynomial `det(xI - S)` of an oriented graph
/// of order `n`, stored as its even coefficients.
///
/// All odd coefficients of `det(xI - S)` vanish and the even ones are
/// nonnegative, so the polynomial is `sum a_{2i} x^{n-2i}` and `coeffs`
/// holds exactly `a_0, a_2, ..., a_{2 floor(n/2)}` with `a_0 = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewPolynomial {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl SkewPolynomial {
    /// Wraps a coefficient vector; `coeffs.len()` must be `n/2 + 1`.
    pub fn from_even_coeffs(n: usize, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != n / 2 + 1 {
            return Err(Error::InvalidParameter(format!(
                "order {n} needs {} even coefficients, got {}",
                n / 2 + 1,
                coeffs.len()
            )));
        }
        Ok(SkewPolynomial { n, coeffs })
    }

    /// Order of the underlying graph (the polynomial's degree).
    pub fn n(&self) -> usize {
        self.n
    }

    /// The even coefficients `a_0, a_2, ...` in order.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `a_{2i}`, taking out-of-range indices as zero.
    pub fn a(&self, two_i: usize) -> BigInt {
        if two_i % 2 == 1 {
            return BigInt::zero();
        }
        self.coeffs.get(two_i / 2).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The polynomial of a disjoint union: coefficients convolve because
    /// the determinant of a block-diagonal matrix factors.
    pub fn union_product(&self, other: &SkewPolynomial) -> SkewPolynomial {
        let n = self.n + other.n;
        let mut coeffs = vec![BigInt::zero(); n / 2 + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        SkewPolynomial { n, coeffs }
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

impl fmt::Display for SkewPolynomial {
    /// Renders e.g. `x^7 + 8x^5 + 7x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let power = self.n - 2 * i;
            if !a.is_one() || power == 0 {
                write!(f, "{a}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    n: usize,
    coeffs: Vec<String>,
}

impl Serialize for SkewPolynomial {
    /// Serializes as `{"n": ..., "coeffs": ["1", "8", ...]}`; coefficients
    /// travel as decimal strings so arbitrary precision survives JSON.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            n: self.n,
            coeffs: self.coeff_strings(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = PolyWire::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SkewPolynomial::from_even_coeffs(wire.n, coeffs).map_err(D::Error::custom)
    }
}

/// Outcome of comparing two equal-order skew polynomials coefficientwise.
///
/// [`quasi_compare`] only ever returns the four definite variants;
/// `LessOrEquivalent` and `GreaterOrEquivalent` express the non-strict
/// relations when asking whether an outcome [`satisfies`](QuasiOrder::satisfies)
/// a requirement.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum QuasiOrder {
    Equivalent,
    StrictlyLess,
    StrictlyGreater,
    LessOrEquivalent,
    GreaterOrEquivalent,
    Incomparable,
}

impl QuasiOrder {
    /// Whether this (definite) outcome is within the relation `required`.
    pub fn satisfies(self, required: QuasiOrder) -> bool {
        use QuasiOrder::*;
        match required {
            LessOrEquivalent => matches!(self, StrictlyLess | Equivalent | LessOrEquivalent),
            GreaterOrEquivalent => {
                matches!(self, StrictlyGreater | Equivalent | GreaterOrEquivalent)
            }
            other => self == other,
        }
    }
}

/// Compares the coefficients of two polynomials of equal order.
///
/// Errors with "orders differ" when `p.n() != q.n()`; the quasi-order is
/// only defined on graphs of the same order.
pub fn quasi_compare(p: &SkewPolynomial, q: &SkewPolynomial) -> Result<QuasiOrder> {
    if p.n != q.n {
        return Err(Error::OrdersDiffer {
            left: p.n,
            right: q.n,
        });
    }
    Ok(compare_coefficients(&p.coeffs, &q.coeffs))
}

/// Coefficientwise comparison of two `a_0, a_2, ...` sequences, padding the
/// shorter with zeros. Unlike [`quasi_compare`] this does not insist on
/// equal orders; a few chain inequalities relate unions of different total
/// order, where only the coefficient sequences matter.
pub fn compare_coefficients(p: &[BigInt], q: &[BigInt]) -> QuasiOrder {
    let zero = BigInt::zero();
    let len = p.len().max(q.len());
    let (mut some_less, mut some_greater) = (false, false);
    for i in 0..len {
        let a = p.get(i).unwrap_or(&zero);
        let b = q.get(i).unwrap_or(&zero);
        match a.cmp(b) {
            std::cmp::Ordering::Less => some_less = true,
            std::cmp::Ordering::Greater => some_greater = true,
            std::cmp::Ordering::Equal => {}
        }
    }
    match (some_less, some_greater) {
        (false, false) => QuasiOrder::Equivalent,
        (true, false) => QuasiOrder::StrictlyLess,
        (false, true) => QuasiOrder::StrictlyGreater,
        (true, true) => QuasiOrder::Incomparable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, coeffs: &[i64]) -> SkewPolynomial {
        SkewPolynomial::from_even_coeffs(n, coeffs.iter().map(|&c| BigInt::from(c)).collect())
            .unwrap()
    }

    #[test]
    fn compare_against_itself_is_equivalent() {
        let p = poly(7, &[1, 8, 7, 0]);
        assert_eq!(quasi_compare(&p, &p).unwrap(), QuasiOrder::Equivalent);
    }

    #[test]
    fn tree_vs_bicyclic_extremal_pair() {
        let t74 = poly(7, &[1, 6, 7, 0]);
        let b74 = poly(7, &[1, 8, 7, 0]);
        assert_eq!(quasi_compare(&t74, &b74).unwrap(), QuasiOrder::StrictlyLess);
        assert_eq!(
            quasi_compare(&b74, &t74).unwrap(),
            QuasiOrder::StrictlyGreater
        );
    }

    #[test]
    fn star_below_path() {
        let s5 = poly(5, &[1, 4, 0]);
        let p5 = poly(5, &[1, 4, 3]);
        assert_eq!(quasi_compare(&s5, &p5).unwrap(), QuasiOrder::StrictlyLess);
    }

    #[test]
    fn mismatched_orders_error() {
        let p = poly(5, &[1, 4, 0]);
        let q = poly(7, &[1, 8, 7, 0]);
        assert!(matches!(
            quasi_compare(&p, &q),
            Err(Error::OrdersDiffer { left: 5, right: 7 })
        ));
    }

    #[test]
    fn incomparable_pair() {
        let p = poly(4, &[1, 3, 0]);
        let q = poly(4, &[1, 2, 1]);
        assert_eq!(quasi_compare(&p, &q).unwrap(), QuasiOrder::Incomparable);
    }

    #[test]
    fn satisfies_non_strict_requirements() {
        assert!(QuasiOrder::StrictlyLess.satisfies(QuasiOrder::LessOrEquivalent));
        assert!(QuasiOrder::Equivalent.satisfies(QuasiOrder::LessOrEquivalent));
        assert!(QuasiOrder::Equivalent.satisfies(QuasiOrder::GreaterOrEquivalent));
        assert!(!QuasiOrder::StrictlyGreater.satisfies(QuasiOrder::LessOrEquivalent));
        assert!(!QuasiOrder::Incomparable.satisfies(QuasiOrder::LessOrEquivalent));
        assert!(QuasiOrder::StrictlyLess.satisfies(QuasiOrder::StrictlyLess));
    }

    #[test]
    fn union_product_convolves() {
        // Two single arcs: (x^2+1)^2 = x^4 + 2x^2 + 1.
        let p2 = poly(2, &[1, 1]);
        let u = p2.union_product(&p2);
        assert_eq!(u, poly(4, &[1, 2, 1]));
    }

    #[test]
    fn display_matches_conventional_notation() {
        assert_eq!(poly(7, &[1, 8, 7, 0]).to_string(), "x^7 + 8x^5 + 7x^3");
        assert_eq!(poly(2, &[1, 1]).to_string(), "x^2 + 1");
        assert_eq!(poly(1, &[1]).to_string(), "x");
        assert_eq!(poly(0, &[1]).to_string(), "1");
    }

    #[test]
    fn json_round_trip_keeps_exact_integers() {
        let p = poly(7, &[1, 8, 7, 0]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":7,"coeffs":["1","8","7","0"]}"#);
        let back: SkewPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
