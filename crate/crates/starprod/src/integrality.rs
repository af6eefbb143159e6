//! Exact decision procedures for Laplacian / signless-Laplacian integrality.
//!
//! Integrality is decided on exact polynomials, never on numeric eigenvalues
//! with tolerances. The product decision runs two independent routes that
//! must agree: extracting integer roots of the closed-form polynomial
//! directly, and the structural test through the factor spectra and the
//! per-eigenvalue quadratic discriminants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{is_perfect_square, Polynomial};
use crate::spectra::{closed_form_data, product_charpoly_closed, MatrixKind};

/// Verdict on whether a spectrum consists solely of integers, with a
/// reconstructible certificate: the certified integer roots times the
/// remainder polynomial multiply back to the input.
#[derive(Clone, Debug)]
pub struct IntegralityVerdict {
    pub kind: MatrixKind,
    pub integral: bool,
    pub integer_roots: Vec<(BigInt, usize)>,
    /// Integer-root-free cofactor; the constant 1 when integral.
    pub remainder: Polynomial,
    /// First factor witnessing a non-integer root, when not integral.
    pub witness: Option<Polynomial>,
}

impl IntegralityVerdict {
    fn from_poly(kind: MatrixKind, poly: &Polynomial) -> Result<Self> {
        let (integer_roots, remainder) = poly.integer_roots()?;
        let integral = remainder.is_constant();
        Ok(IntegralityVerdict {
            kind,
            integral,
            witness: (!integral).then(|| remainder.clone()),
            integer_roots,
            remainder,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.letter(),
            "integral": self.integral,
            "integer_roots": self
                .integer_roots
                .iter()
                .map(|(r, m)| json!({ "root": r.to_string(), "multiplicity": m }))
                .collect::<Vec<_>>(),
            "remainder": self.remainder.to_coeff_strings(),
            "witness": self.witness.as_ref().map(Polynomial::to_coeff_strings),
        })
    }
}

/// Integrality of one graph's spectrum of the given kind.
pub fn is_integral(g: &Graph, kind: MatrixKind) -> Result<IntegralityVerdict> {
    IntegralityVerdict::from_poly(kind, &kind.matrix(g).char_poly()?)
}

/// Both routes of the product integrality decision.
#[derive(Clone, Debug)]
pub struct ProductIntegralityReport {
    pub kind: MatrixKind,
    /// Route (a): integer roots of the closed-form product polynomial.
    pub direct: IntegralityVerdict,
    /// Route (b): second factor integral, first factor integral, and every
    /// per-eigenvalue quadratic discriminant a perfect square.
    pub structural_integral: bool,
    pub structural_witness: Option<Polynomial>,
    pub agree: bool,
}

impl ProductIntegralityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.letter(),
            "integral": self.direct.integral,
            "direct": self.direct.to_json(),
            "structural_integral": self.structural_integral,
            "structural_witness": self
                .structural_witness
                .as_ref()
                .map(Polynomial::to_coeff_strings),
            "agree": self.agree,
        })
    }
}

/// Decides integrality of the product two independent ways; a route
/// disagreement is an internal error, not a report.
pub fn product_is_integral(
    g1: &Graph,
    g2: &Graph,
    kind: MatrixKind,
) -> Result<ProductIntegralityReport> {
    let direct = IntegralityVerdict::from_poly(kind, &product_charpoly_closed(g1, g2, kind)?);
    let direct = direct?;
    let (structural_integral, structural_witness) = structural_route(g1, g2, kind)?;
    if direct.integral != structural_integral {
        return Err(Error::RouteDisagreement(format!(
            "direct {} vs structural {} integrality",
            direct.integral, structural_integral
        )));
    }
    Ok(ProductIntegralityReport {
        kind,
        direct,
        structural_integral,
        structural_witness,
        agree: true,
    })
}

fn structural_route(
    g1: &Graph,
    g2: &Graph,
    kind: MatrixKind,
) -> Result<(bool, Option<Polynomial>)> {
    let data = closed_form_data(g1, g2, kind)?;

    // The linear family n2 (r1 + 1) is always integral; the shifted family
    // is integral iff the second factor's spectrum is.
    let (_, rem2) = data.factor2_poly.integer_roots()?;
    if !rem2.is_constant() {
        let shift = Polynomial::from_int_coeffs(&[-(data.n2 as i64), 1]);
        return Ok((false, Some(rem2.compose(&shift))));
    }

    // Non-integer first-factor eigenvalues poison their quadratics: the two
    // roots sum to an irrational number, so they cannot both be integers.
    let (roots1, rem1) = data.factor1_poly.integer_roots()?;
    if !rem1.is_constant() {
        let witness = crate::poly::compose_rational(&rem1, &data.num, &data.den)?;
        return Ok((false, Some(witness)));
    }

    // Per-eigenvalue quadratic: integer roots iff the discriminant is a
    // perfect square (the parity condition holds automatically for monic
    // integer quadratics).
    for (root, _) in &roots1 {
        let quadratic = &data.num - &data.den.scale(&BigRational::from_integer(root.clone()));
        let b = quadratic.coeff(1).to_integer();
        let c = quadratic.coeff(0).to_integer();
        let disc = &b * &b - BigInt::from(4) * &c;
        match is_perfect_square(&disc) {
            Some(s) => debug_assert!(
                ((s + &b) % BigInt::from(2)).is_zero(),
                "square discriminant always shares parity with b"
            ),
            None => return Ok((false, Some(quadratic))),
        }
    }
    Ok((true, None))
}
