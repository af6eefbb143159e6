//! Univariate polynomials and rational functions over arbitrary-precision
//! rationals, plus the integer root machinery used by the integrality
//! decision procedures.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Coefficients in ascending degree order with no trailing zero; the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Polynomial::from_int_coeffs(&[0, 1])
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> Self {
        Polynomial::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// The monic linear polynomial x - root.
    pub fn linear_root(root: &BigInt) -> Self {
        Polynomial::from_bigint_coeffs(vec![-root.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that constants (including zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integer coefficient vector (ascending), if all coefficients are integers.
    pub fn to_bigint_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficients as decimal strings in ascending degree order, the
    /// crate's on-disk polynomial format.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigRational::to_string).collect()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(x.clone()))
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, mut exp: usize) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitution p(inner) by Horner evaluation in the polynomial ring.
    pub fn compose(&self, inner: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.degree();
        let lead = divisor.leading();
        if rem.len() <= d {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let q = &rem[k] / &lead;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let delta = &q * dc;
                    rem[k - d + j] -= delta;
                }
            }
            quot[k - d] = q;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem[..d].to_vec())))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::ExactDivisionFailed(format!(
                "remainder of degree {} where none was expected",
                r.degree()
            )))
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            a.scale(&lead.recip())
        }
    }

    /// All integer roots with multiplicity, plus the integer-root-free
    /// cofactor. Candidates are drawn from the divisors of the trailing
    /// nonzero coefficient, capped by a Fujiwara-style root bound so huge
    /// trailing coefficients never force a huge enumeration.
    pub fn integer_roots(&self) -> Result<(Vec<(BigInt, usize)>, Polynomial)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.to_bigint_coeffs().ok_or(Error::NonIntegerCoefficients)?;

        let mut roots: Vec<(BigInt, usize)> = Vec::new();
        let zero_mult = coeffs.iter().take_while(|c| c.is_zero()).count();
        if zero_mult > 0 {
            coeffs.drain(..zero_mult);
            roots.push((BigInt::zero(), zero_mult));
        }

        let bound = integer_root_bound(&coeffs);
        let mut magnitude = BigInt::one();
        while magnitude <= bound && coeffs.len() > 1 {
            for sign in [1i64, -1] {
                let candidate = &magnitude * BigInt::from(sign);
                // An integer root must divide the trailing coefficient.
                if !coeffs[0].is_multiple_of(&candidate) {
                    continue;
                }
                let mut mult = 0usize;
                while coeffs.len() > 1 && eval_int(&coeffs, &candidate).is_zero() {
                    coeffs = synthetic_div(&coeffs, &candidate);
                    mult += 1;
                }
                if mult > 0 {
                    roots.push((candidate, mult));
                }
            }
            magnitude += 1;
        }
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        Ok((roots, Polynomial::from_bigint_coeffs(coeffs)))
    }
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Horner quotient of an integer polynomial by (x - r); assumes r is a root.
fn synthetic_div(coeffs: &[BigInt], r: &BigInt) -> Vec<BigInt> {
    let n = coeffs.len();
    let mut out = vec![BigInt::zero(); n - 1];
    let mut carry = BigInt::zero();
    for k in (1..n).rev() {
        carry = &coeffs[k] + carry * r;
        out[k - 1] = carry.clone();
    }
    debug_assert!((&coeffs[0] + carry * r).is_zero());
    out
}

/// Upper bound on |r| for every root r: 2 * max_i |a_{n-i}/a_n|^{1/i},
/// rounded up (Fujiwara's bound, relaxed to integer arithmetic).
fn integer_root_bound(coeffs: &[BigInt]) -> BigInt {
    let n = coeffs.len() - 1;
    if n == 0 {
        return BigInt::zero();
    }
    let lead = coeffs[n].abs();
    let mut best = BigInt::one();
    for i in 1..=n {
        let a = coeffs[n - i].abs();
        if a.is_zero() {
            continue;
        }
        // ceil(|a| / |lead|), then the i-th root rounded up.
        let q = (&a + &lead - BigInt::one()) / &lead;
        let mut root = q.nth_root(i as u32);
        if root.clone().pow(i as u32) < q {
            root += 1;
        }
        best = best.max(root);
    }
    best * 2
}

/// Exact square root of k when k is a perfect square >= 0.
pub fn is_perfect_square(k: &BigInt) -> Option<BigInt> {
    if k.is_negative() {
        return None;
    }
    let s = k.sqrt();
    (&s * &s == *k).then_some(s)
}

/// Writes n > 0 as t^2 * d with d square-free, returning (t, d).
pub fn square_free_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "radicand must be positive");
    if let Some(s) = is_perfect_square(n) {
        return (s, BigInt::one());
    }
    let mut rem = n.clone();
    let mut square_root_part = BigInt::one();
    let mut square_free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rem {
        let mut exp = 0u32;
        while rem.is_multiple_of(&p) {
            rem /= &p;
            exp += 1;
        }
        if exp > 0 {
            square_root_part *= p.pow(exp / 2);
            if exp % 2 == 1 {
                square_free *= &p;
            }
        }
        p += 1;
    }
    if rem > BigInt::one() {
        square_free *= rem;
    }
    (square_root_part, square_free)
}

/// den^{deg p} * p(num/den): the denominator-cleared substitution of a
/// rational function into a polynomial.
pub fn compose_rational(p: &Polynomial, num: &Polynomial, den: &Polynomial) -> Result<Polynomial> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if p.is_zero() {
        return Ok(Polynomial::zero());
    }
    let n = p.degree();
    // Horner: acc = sum_{k} c_k num^k den^{n-k}.
    let mut acc = Polynomial::constant(p.coeff(n));
    let mut den_pow = Polynomial::one();
    for k in (0..n).rev() {
        den_pow = &den_pow * den;
        acc = &(&acc * num) + &Polynomial::constant(p.coeff(k)).mul(&den_pow);
    }
    Ok(acc)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
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
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Reduced quotient of two polynomials: numerator and denominator coprime,
/// denominator monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lead = den.leading();
        Ok(RationalFunction {
            num: num.scale(&lead.recip()),
            den: den.scale(&lead.recip()),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), 1);
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 1]); // 1 + x
        let b = p(&[-1, 1]); // -1 + x
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &b, p(&[2]));
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[2, -3, 1]); // (x-1)(x-2)
        let (q, r) = a.div_rem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_zero());
        let (q, r) = a.div_rem(&p(&[0, 0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, a);
    }

    #[test]
    fn exact_div_rejects_remainder() {
        let a = p(&[1, 0, 1]);
        assert!(a.exact_div(&p(&[-1, 1])).is_err());
    }

    #[test]
    fn compose_rational_examples() {
        // p = x^2, num = x^2 - 4x, den = 2x - 4 -> (x^2 - 4x)^2
        let out = compose_rational(&p(&[0, 0, 1]), &p(&[0, -4, 1]), &p(&[-4, 2])).unwrap();
        assert_eq!(out, &p(&[0, -4, 1]) * &p(&[0, -4, 1]));
        // p = x - 2, identity substitution
        let out = compose_rational(&p(&[-2, 1]), &p(&[0, 1]), &p(&[1])).unwrap();
        assert_eq!(out, p(&[-2, 1]));
        // p = x^2 - 2x with num = x^2 - 4x, den = 2x - 4 carries both
        // quadratic factors for the smallest product instance.
        let out = compose_rational(&p(&[0, -2, 1]), &p(&[0, -4, 1]), &p(&[-4, 2])).unwrap();
        assert_eq!(out, &p(&[0, -4, 1]) * &p(&[8, -8, 1]));
    }

    #[test]
    fn compose_rational_zero_denominator() {
        assert!(matches!(
            compose_rational(&p(&[1, 1]), &p(&[0, 1]), &Polynomial::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn integer_roots_examples() {
        let (roots, rem) = p(&[0, -2, 1]).integer_roots().unwrap(); // x^2 - 2x
        assert_eq!(
            roots,
            vec![(BigInt::from(0), 1), (BigInt::from(2), 1)]
        );
        assert_eq!(rem, Polynomial::one());

        // x^2 - 8x + 8 has irrational roots.
        let (roots, rem) = p(&[8, -8, 1]).integer_roots().unwrap();
        assert!(roots.is_empty());
        assert_eq!(rem, p(&[8, -8, 1]));

        assert!(matches!(
            Polynomial::zero().integer_roots(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn integer_roots_multiplicity_and_reconstruction() {
        // (x+1)^2 (x-3) x^2
        let q = &(&p(&[1, 1]).pow(2) * &p(&[-3, 1])) * &p(&[0, 0, 1]);
        let (roots, rem) = q.integer_roots().unwrap();
        assert_eq!(
            roots,
            vec![
                (BigInt::from(-1), 2),
                (BigInt::from(0), 2),
                (BigInt::from(3), 1)
            ]
        );
        let mut rebuilt = rem;
        for (r, m) in &roots {
            rebuilt = &rebuilt * &Polynomial::linear_root(r).pow(*m);
        }
        assert_eq!(rebuilt, q);
    }

    #[test]
    fn perfect_square_detection() {
        assert_eq!(is_perfect_square(&BigInt::from(4)), Some(BigInt::from(2)));
        assert_eq!(is_perfect_square(&BigInt::from(32)), None);
        assert_eq!(is_perfect_square(&BigInt::from(0)), Some(BigInt::from(0)));
        assert_eq!(is_perfect_square(&BigInt::from(-4)), None);
        // 16 = n2^2 (mu^2 + 4) at n2 = 2, mu = 0.
        assert_eq!(is_perfect_square(&BigInt::from(16)), Some(BigInt::from(4)));
    }

    #[test]
    fn square_free_decomposition() {
        let (t, d) = square_free_decompose(&BigInt::from(32));
        assert_eq!((t, d), (BigInt::from(4), BigInt::from(2)));
        let (t, d) = square_free_decompose(&BigInt::from(36));
        assert_eq!((t, d), (BigInt::from(6), BigInt::from(1)));
        let (t, d) = square_free_decompose(&BigInt::from(20));
        assert_eq!((t, d), (BigInt::from(2), BigInt::from(5)));
    }

    #[test]
    fn rational_function_reduces() {
        // (2x^2 - 2x) / (2x) reduces to x - 1 over 1.
        let rf = RationalFunction::new(p(&[0, -2, 2]), p(&[0, 2])).unwrap();
        assert_eq!(rf.numerator(), &p(&[-1, 1]));
        assert_eq!(rf.denominator(), &Polynomial::one());
        // n q(x) / (x q(x)) reduces to n / x.
        let q = p(&[3, 1, 4]);
        let rf = RationalFunction::new(q.scale(&BigRational::from_integer(5.into())), &p(&[0, 1]) * &q)
            .unwrap();
        assert_eq!(rf.numerator(), &p(&[5]));
        assert_eq!(rf.denominator(), &p(&[0, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[-1, 1]) * &p(&[2, 2]);
        let b = &p(&[-1, 1]) * &p(&[0, 3]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[0, 9, -6, 1]).to_string(), "x^3 - 6*x^2 + 9*x");
        assert_eq!(p(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
