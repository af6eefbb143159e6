//! Exact eigenvalue values (rationals and quadratic surds), spectra as
//! multisets, and a cyclic Jacobi eigensolver used for floating-point
//! cross-checks of the exact pipeline.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::poly::{is_perfect_square, square_free_decompose};

/// Default relative tolerance for the Jacobi solver.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// (whole + coeff * sqrt(radicand)) / den with radicand square-free and > 1,
/// coeff nonzero, den > 0 and gcd(whole, coeff, den) = 1. The normal form
/// makes equality structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    whole: BigInt,
    coeff: BigInt,
    radicand: BigInt,
    den: BigInt,
}

impl QuadraticSurd {
    pub fn whole(&self) -> &BigInt {
        &self.whole
    }

    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn to_f64(&self) -> f64 {
        let whole = self.whole.to_f64().expect("surd whole to f64");
        let coeff = self.coeff.to_f64().expect("surd coeff to f64");
        let rad = self.radicand.to_f64().expect("surd radicand to f64");
        let den = self.den.to_f64().expect("surd denominator to f64");
        (whole + coeff * rad.sqrt()) / den
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.coeff.is_negative() { "-" } else { "+" };
        let mag = self.coeff.abs();
        if self.den.is_one() {
            if mag.is_one() {
                write!(f, "{} {} sqrt({})", self.whole, sign, self.radicand)
            } else {
                write!(f, "{} {} {}*sqrt({})", self.whole, sign, mag, self.radicand)
            }
        } else if mag.is_one() {
            write!(f, "({} {} sqrt({}))/{}", self.whole, sign, self.radicand, self.den)
        } else {
            write!(
                f,
                "({} {} {}*sqrt({}))/{}",
                self.whole, sign, mag, self.radicand, self.den
            )
        }
    }
}

/// An exact or numeric eigenvalue. Numeric values always carry the tolerance
/// they were computed to.
#[derive(Clone, Debug, PartialEq)]
pub enum Eigenvalue {
    Rational(BigRational),
    Surd(QuadraticSurd),
    Numeric { value: f64, tol: f64 },
}

impl Eigenvalue {
    pub fn integer(k: i64) -> Self {
        Eigenvalue::Rational(BigRational::from_integer(k.into()))
    }

    pub fn from_bigint(k: BigInt) -> Self {
        Eigenvalue::Rational(BigRational::from_integer(k))
    }

    /// Normalized (whole + coeff * sqrt(radicand)) / den; collapses to a
    /// rational when the radical vanishes or the radicand is a perfect square.
    pub fn surd(whole: BigInt, coeff: BigInt, radicand: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "surd denominator must be nonzero");
        assert!(radicand.is_positive(), "surd radicand must be positive");
        if coeff.is_zero() {
            return Eigenvalue::Rational(BigRational::new(whole, den));
        }
        let (square, free) = square_free_decompose(&radicand);
        if free.is_one() {
            return Eigenvalue::Rational(BigRational::new(whole + coeff * square, den));
        }
        let (mut whole, mut coeff, mut den) = (whole, coeff * square, den);
        if den.is_negative() {
            whole = -whole;
            coeff = -coeff;
            den = -den;
        }
        let g = whole.gcd(&coeff).gcd(&den);
        if !g.is_one() {
            whole /= &g;
            coeff /= &g;
            den /= &g;
        }
        Eigenvalue::Surd(QuadraticSurd {
            whole,
            coeff,
            radicand: free,
            den,
        })
    }

    /// Both roots of the monic quadratic x^2 + b x + c, in ascending order.
    /// Errors when the discriminant is negative (cannot arise for quadratics
    /// split off a symmetric matrix's characteristic polynomial).
    pub fn monic_quadratic_roots(b: &BigInt, c: &BigInt) -> Result<(Eigenvalue, Eigenvalue)> {
        let disc = b * b - BigInt::from(4) * c;
        if disc.is_negative() {
            return Err(Error::Precondition(
                "quadratic has complex roots".to_string(),
            ));
        }
        if let Some(s) = is_perfect_square(&disc) {
            // s and b always share parity, so the halves are exact rationals.
            let two = BigInt::from(2);
            let low = BigRational::new(-b - &s, two.clone());
            let high = BigRational::new(-b + &s, two);
            return Ok((Eigenvalue::Rational(low), Eigenvalue::Rational(high)));
        }
        let low = Eigenvalue::surd(-b, BigInt::from(-1), disc.clone(), BigInt::from(2));
        let high = Eigenvalue::surd(-b, BigInt::one(), disc, BigInt::from(2));
        Ok((low, high))
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self, Eigenvalue::Numeric { .. })
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Rational(r) => r.to_f64().expect("rational to f64"),
            Eigenvalue::Surd(s) => s.to_f64(),
            Eigenvalue::Numeric { value, .. } => *value,
        }
    }

    /// Total order used for sorting spectra. Exact variants compare exactly;
    /// numeric variants compare by value and never mix with exact ones inside
    /// a single spectrum.
    pub fn cmp_value(&self, other: &Eigenvalue) -> Ordering {
        use Eigenvalue::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a.cmp(b),
            (Rational(a), Surd(b)) => rational_vs_surd(a, b),
            (Surd(a), Rational(b)) => rational_vs_surd(b, a).reverse(),
            (Surd(a), Surd(b)) => surd_vs_surd(a, b),
            _ => self
                .to_f64()
                .partial_cmp(&other.to_f64())
                .unwrap_or(Ordering::Equal),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Eigenvalue::Rational(r) => json!({ "type": "rational", "value": r.to_string() }),
            Eigenvalue::Surd(s) => json!({
                "type": "surd",
                "whole": s.whole.to_string(),
                "coeff": s.coeff.to_string(),
                "radicand": s.radicand.to_string(),
                "den": s.den.to_string(),
            }),
            Eigenvalue::Numeric { value, tol } => {
                json!({ "type": "numeric", "value": value, "tol": tol })
            }
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Rational(r) => write!(f, "{r}"),
            Eigenvalue::Surd(s) => write!(f, "{s}"),
            Eigenvalue::Numeric { value, .. } => write!(f, "{value:.10}"),
        }
    }
}

/// Sign of u + v * sqrt(d) for square-free d > 1.
fn sign_with_radical(u: &BigInt, v: &BigInt, d: &BigInt) -> Ordering {
    if v.is_zero() {
        return u.cmp(&BigInt::zero());
    }
    if u.is_zero() {
        return v.cmp(&BigInt::zero());
    }
    if u.is_positive() == v.is_positive() {
        return u.cmp(&BigInt::zero());
    }
    // Opposite signs: compare u^2 against v^2 d; equality would force d square.
    let lhs = u * u;
    let rhs = v * v * d;
    match lhs.cmp(&rhs) {
        Ordering::Greater => u.cmp(&BigInt::zero()),
        Ordering::Less => v.cmp(&BigInt::zero()),
        Ordering::Equal => Ordering::Equal,
    }
}

fn rational_vs_surd(a: &BigRational, b: &QuadraticSurd) -> Ordering {
    // a - b = (a.numer * b.den - b.whole * a.denom - b.coeff * a.denom * sqrt(d))
    //         / (a.denom * b.den), denominator positive.
    let u = a.numer() * &b.den - &b.whole * a.denom();
    let v = -&b.coeff * a.denom();
    sign_with_radical(&u, &v, &b.radicand)
}

fn surd_vs_surd(a: &QuadraticSurd, b: &QuadraticSurd) -> Ordering {
    // Sign of (a.whole*b.den - b.whole*a.den) + a.coeff*b.den sqrt(da)
    //   - b.coeff*a.den sqrt(db).
    let u = &a.whole * &b.den - &b.whole * &a.den;
    let va = &a.coeff * &b.den;
    let vb = &b.coeff * &a.den;
    if a.radicand == b.radicand {
        return sign_with_radical(&u, &(va - vb), &a.radicand);
    }
    // Compare L = u + va sqrt(da) against R = vb sqrt(db).
    let sign_l = sign_with_radical(&u, &va, &a.radicand);
    let sign_r = vb.cmp(&BigInt::zero());
    match (sign_l, sign_r) {
        (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
        _ if sign_l != sign_r => sign_l.cmp(&sign_r),
        _ => {
            // Same strict sign: compare squares, flipping for negatives.
            // L^2 = (u^2 + va^2 da) + 2 u va sqrt(da); R^2 = vb^2 db.
            let l2_rat = &u * &u + &va * &va * &a.radicand - &vb * &vb * &b.radicand;
            let l2_rad = BigInt::from(2) * &u * &va;
            let square_cmp = sign_with_radical(&l2_rat, &l2_rad, &a.radicand);
            if sign_l == Ordering::Greater {
                square_cmp
            } else {
                square_cmp.reverse()
            }
        }
    }
}

/// Multiset of eigenvalues sorted ascending. Exact and numeric entries are
/// never mixed within one spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    entries: Vec<(Eigenvalue, usize)>,
}

impl Spectrum {
    pub fn from_entries(mut entries: Vec<(Eigenvalue, usize)>) -> Self {
        entries.retain(|(_, m)| *m > 0);
        let mixed = entries.iter().any(|(e, _)| e.is_numeric())
            && entries.iter().any(|(e, _)| !e.is_numeric());
        assert!(!mixed, "spectrum must not mix exact and numeric entries");
        entries.sort_by(|a, b| a.0.cmp_value(&b.0));
        let mut merged: Vec<(Eigenvalue, usize)> = Vec::with_capacity(entries.len());
        for (value, mult) in entries {
            match merged.last_mut() {
                Some((prev, m)) if prev.cmp_value(&value) == Ordering::Equal => *m += mult,
                _ => merged.push((value, mult)),
            }
        }
        Spectrum { entries: merged }
    }

    pub fn from_numeric(values: &[f64], tol: f64) -> Self {
        Spectrum {
            entries: values
                .iter()
                .map(|&value| (Eigenvalue::Numeric { value, tol }, 1))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[(Eigenvalue, usize)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_numeric(&self) -> bool {
        self.entries.iter().any(|(e, _)| e.is_numeric())
    }

    /// Exact sum of all eigenvalues with multiplicity. Returns None for
    /// numeric spectra or if surd contributions fail to cancel.
    pub fn sum_exact(&self) -> Option<BigRational> {
        let mut rational = BigRational::zero();
        let mut radical_parts: BTreeMap<BigInt, BigRational> = BTreeMap::new();
        for (value, mult) in &self.entries {
            let mult = BigRational::from_integer(BigInt::from(*mult));
            match value {
                Eigenvalue::Rational(r) => rational += r * &mult,
                Eigenvalue::Surd(s) => {
                    rational += BigRational::new(s.whole.clone(), s.den.clone()) * &mult;
                    let part = radical_parts
                        .entry(s.radicand.clone())
                        .or_insert_with(BigRational::zero);
                    *part += BigRational::new(s.coeff.clone(), s.den.clone()) * &mult;
                }
                Eigenvalue::Numeric { .. } => return None,
            }
        }
        radical_parts
            .values()
            .all(Zero::is_zero)
            .then_some(rational)
    }

    /// Eigenvalues expanded by multiplicity, as ascending f64 values.
    pub fn to_f64_expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for (value, mult) in &self.entries {
            for _ in 0..*mult {
                out.push(value.to_f64());
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(value, mult)| {
                    let mut record = value.to_json();
                    record["multiplicity"] = json!(mult);
                    record
                })
                .collect(),
        )
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, (value, mult)) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            if *mult == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value} (x{mult})")?;
            }
        }
        write!(f, "}}")
    }
}

/// Eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations on a
/// floating-point copy. Converges when the off-diagonal Frobenius norm drops
/// below `tol` times the Frobenius norm of the input; at most 100 sweeps.
pub fn symmetric_eigenvalues(m: &ExactMatrix, tol: f64) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut a = m.to_f64_grid();
    let scale = m.frobenius_norm_f64();
    let threshold = if scale == 0.0 { tol } else { tol * scale };

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _sweep in 0..100 {
        if off_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    if !converged && off_norm(&a) > threshold {
        return Err(Error::JacobiNoConvergence);
    }
    let mut eigen: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigen.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    Ok(eigen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(whole: i64, coeff: i64, radicand: i64, den: i64) -> Eigenvalue {
        Eigenvalue::surd(
            BigInt::from(whole),
            BigInt::from(coeff),
            BigInt::from(radicand),
            BigInt::from(den),
        )
    }

    #[test]
    fn surd_normalization() {
        // (4 + sqrt(32)) / 2 = 2 + sqrt(8) = 2 + 2 sqrt(2).
        match surd(4, 1, 32, 2) {
            Eigenvalue::Surd(s) => {
                assert_eq!(s.whole, BigInt::from(2));
                assert_eq!(s.coeff, BigInt::from(2));
                assert_eq!(s.radicand, BigInt::from(2));
                assert_eq!(s.den, BigInt::from(1));
            }
            other => panic!("expected surd, got {other:?}"),
        }
        // Perfect-square radicand collapses to a rational.
        assert_eq!(
            surd(1, 2, 9, 2),
            Eigenvalue::Rational(BigRational::new(7.into(), 2.into()))
        );
        // Zero coefficient collapses too.
        assert_eq!(
            surd(3, 0, 5, 1),
            Eigenvalue::Rational(BigRational::from_integer(3.into()))
        );
    }

    #[test]
    fn quadratic_roots_exact() {
        // x^2 - 8x + 8 -> 4 +- 2 sqrt(2).
        let (low, high) =
            Eigenvalue::monic_quadratic_roots(&BigInt::from(-8), &BigInt::from(8)).unwrap();
        assert_eq!(low, surd(4, -2, 2, 1));
        assert_eq!(high, surd(4, 2, 2, 1));
        // x^2 - 4x -> {0, 4}.
        let (low, high) =
            Eigenvalue::monic_quadratic_roots(&BigInt::from(-4), &BigInt::zero()).unwrap();
        assert_eq!(low, Eigenvalue::integer(0));
        assert_eq!(high, Eigenvalue::integer(4));
    }

    #[test]
    fn exact_comparisons_match_f64() {
        let values = vec![
            Eigenvalue::integer(0),
            Eigenvalue::integer(4),
            surd(4, -2, 2, 1),
            surd(4, 2, 2, 1),
            surd(5, -1, 5, 2),
            surd(5, 1, 5, 2),
            surd(0, 1, 3, 1),
            Eigenvalue::Rational(BigRational::new(7.into(), 2.into())),
        ];
        for a in &values {
            for b in &values {
                let exact = a.cmp_value(b);
                let approx = a
                    .to_f64()
                    .partial_cmp(&b.to_f64())
                    .unwrap();
                assert_eq!(exact, approx, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn spectrum_merges_and_sums() {
        let spectrum = Spectrum::from_entries(vec![
            (Eigenvalue::integer(4), 2),
            (surd(4, 2, 2, 1), 1),
            (Eigenvalue::integer(0), 1),
            (surd(4, -2, 2, 1), 1),
            (Eigenvalue::integer(4), 3),
        ]);
        assert_eq!(spectrum.total_multiplicity(), 8);
        assert_eq!(spectrum.entries().len(), 4);
        assert_eq!(spectrum.entries()[0].0, Eigenvalue::integer(0));
        assert_eq!(spectrum.entries()[2], (Eigenvalue::integer(4), 5));
        // 0 + 5*4 + (4 - 2 sqrt 2) + (4 + 2 sqrt 2) = 28.
        assert_eq!(
            spectrum.sum_exact(),
            Some(BigRational::from_integer(28.into()))
        );
    }

    #[test]
    fn jacobi_small_laplacian() {
        let l = ExactMatrix::from_rows(vec![vec![1, -1], vec![-1, 1]]);
        let eigen = symmetric_eigenvalues(&l, DEFAULT_TOLERANCE).unwrap();
        assert!((eigen[0] - 0.0).abs() < 1e-9);
        assert!((eigen[1] - 2.0).abs() < 1e-9);
    }

    #[test]
    fn jacobi_trace_identity() {
        let m = ExactMatrix::from_rows(vec![
            vec![2, 1, 0, 3],
            vec![1, -1, 4, 0],
            vec![0, 4, 5, 1],
            vec![3, 0, 1, 2],
        ]);
        let eigen = symmetric_eigenvalues(&m, DEFAULT_TOLERANCE).unwrap();
        let sum: f64 = eigen.iter().sum();
        assert!((sum - 8.0).abs() < 1e-8);
    }

    #[test]
    fn jacobi_rejects_asymmetric() {
        let m = ExactMatrix::from_rows(vec![vec![0, 1], vec![2, 0]]);
        assert!(matches!(
            symmetric_eigenvalues(&m, DEFAULT_TOLERANCE),
            Err(Error::NotSymmetric)
        ));
    }
}
