//! Kirchhoff index, spanning-tree count and Wiener index of the star
//! product: each closed formula is evaluated both literally (keeping its
//! singular or vanishing zero-eigenvalue term, and its face-value distance
//! assumptions) and in corrected form, then checked against an independent
//! oracle on the explicitly constructed product.
//!
//! Spectral sums and products are evaluated through characteristic-
//! polynomial coefficients, never through numeric eigenvalues, so every
//! value here is exact even when factor spectra are irrational.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{capped_pair_distances, star_product};

/// Kirchhoff index from a Laplacian characteristic polynomial: with
/// charpoly = x q(x), Kf = -n q'(0)/q(0) = -n a2/a1.
pub fn kirchhoff_from_charpoly(n: usize, p: &crate::poly::Polynomial) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Precondition(
            "Kirchhoff index needs at least 2 vertices".into(),
        ));
    }
    let a1 = p.coeff(1);
    if a1.is_zero() {
        return Err(Error::Disconnected);
    }
    Ok(-BigRational::from_integer(n.into()) * p.coeff(2) / a1)
}

/// Kirchhoff index n * sum(1/mu) over nonzero Laplacian eigenvalues,
/// computed from characteristic-polynomial coefficients.
pub fn kirchhoff_exact(g: &Graph) -> Result<BigRational> {
    kirchhoff_from_charpoly(g.order(), &g.laplacian_matrix().char_poly()?)
}

/// Sum of reciprocals of the nonzero Laplacian eigenvalues: -q'(0)/q(0).
fn nonzero_reciprocal_sum(g: &Graph) -> Result<BigRational> {
    let p = g.laplacian_matrix().char_poly()?;
    let a1 = p.coeff(1);
    if a1.is_zero() {
        return Err(Error::Disconnected);
    }
    Ok(-p.coeff(2) / a1)
}

/// Closed-form Kirchhoff index of the product.
#[derive(Clone, Debug)]
pub struct KirchhoffClosed {
    /// Corrected evaluation: the singular zero-eigenvalue term of the middle
    /// sum is replaced by 1/(2 n2), the reciprocal of the lone nonzero root
    /// of its quadratic.
    pub corrected: BigRational,
    /// The formula taken literally is always singular: the middle sum's
    /// first term divides by the zero Laplacian eigenvalue.
    pub literal: Option<BigRational>,
    pub literal_failure: &'static str,
}

pub const KIRCHHOFF_LITERAL_FAILURE: &str =
    "middle sum divides by the zero Laplacian eigenvalue of the first factor";

pub fn kirchhoff_product_closed(g1: &Graph, g2: &Graph) -> Result<KirchhoffClosed> {
    let r1 = g1.regularity("Kirchhoff closed form needs a regular first factor")?;
    g2.regularity("Kirchhoff closed form needs a regular second factor")?;
    if !g1.is_connected() {
        // The product is connected exactly when the first factor is.
        return Err(Error::Disconnected);
    }
    let n1 = BigRational::from_integer(g1.order().into());
    let n2 = BigRational::from_integer(g2.order().into());
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());

    // n1 (n2 - 1) / (n2 (1 + r1))
    let linear_term = &n1 * (&n2 - &one) / (&n2 * (one.clone() + BigRational::from_integer(r1.into())));

    // Middle sum over the first factor's eigenvalues. The i = 1 term is
    // corrected to 1/(2 n2); the rest is (1/n2)(2 S + (n1 - 1)) with
    // S = sum of reciprocals of the nonzero eigenvalues.
    let s1 = nonzero_reciprocal_sum(g1)?;
    let middle = (&two * &n2).recip() + (&two * s1 + (&n1 - &one)) / &n2;

    // Trailing sum over the shifted second-factor eigenvalues:
    // sum over all of 1/(n2 + mu) equals -f'(-n2)/f(-n2); drop the
    // cancelled zero eigenvalue's 1/n2.
    let f2 = g2.laplacian_matrix().char_poly()?;
    let at = -&n2;
    let value = f2.eval(&at);
    debug_assert!(!value.is_zero(), "Laplacian spectrum is nonnegative");
    let full_sum = -f2.derivative().eval(&at) / value;
    let trailing = &n1 * (full_sum - n2.recip());

    let corrected = &two * &n1 * &n2 * (linear_term + middle + trailing);
    Ok(KirchhoffClosed {
        corrected,
        literal: None,
        literal_failure: KIRCHHOFF_LITERAL_FAILURE,
    })
}

/// Spanning-tree count with its connectivity flag; zero for disconnected
/// graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeCount {
    pub count: BigInt,
    pub connected: bool,
}

/// Spanning-tree count from a Laplacian characteristic polynomial:
/// |coefficient of x| / n, which is exact by the matrix-tree theorem.
pub fn tree_count_from_charpoly(n: usize, p: &crate::poly::Polynomial) -> Result<BigInt> {
    let a1 = p.coeff(1).to_integer();
    let (count, rem) = a1.abs().div_rem(&BigInt::from(n));
    if rem.is_zero() {
        Ok(count)
    } else {
        Err(Error::RouteDisagreement(
            "x-coefficient of a Laplacian polynomial must be divisible by n".into(),
        ))
    }
}

/// Number of spanning trees by the matrix-tree cofactor, cross-checked
/// against |coefficient of x in charpoly(L)| / n. The routes must agree.
pub fn spanning_trees_matrix_tree(g: &Graph) -> Result<TreeCount> {
    let n = g.order();
    let laplacian = g.laplacian_matrix();
    let cofactor = laplacian.minor_matrix(n - 1, n - 1).determinant()?;
    let coefficient_route = tree_count_from_charpoly(n, &laplacian.char_poly()?)?;
    if cofactor != coefficient_route {
        return Err(Error::RouteDisagreement(
            "matrix-tree cofactor vs coefficient count".into(),
        ));
    }
    Ok(TreeCount {
        count: cofactor,
        connected: g.is_connected(),
    })
}

/// Closed-form spanning-tree count of the product.
#[derive(Clone, Debug)]
pub struct SpanningTreesClosed {
    /// Corrected evaluation: the vanishing zero-eigenvalue factor of the
    /// last product is replaced by 2 n2, the product of the nonzero roots of
    /// its quadratic.
    pub corrected: BigInt,
    /// The formula taken literally contains that zero factor, so it always
    /// evaluates to 0.
    pub literal: BigInt,
}

pub fn spanning_trees_product_closed(g1: &Graph, g2: &Graph) -> Result<SpanningTreesClosed> {
    let r1 = g1.regularity("tree-count closed form needs a regular first factor")?;
    g2.regularity("tree-count closed form needs a regular second factor")?;
    if !g1.is_connected() {
        return Err(Error::Disconnected);
    }
    let n1 = g1.order();
    let n2 = g2.order();
    let n2_int = BigInt::from(n2);

    // prod_{i >= 2} (n2 + mu_{2i}) = (-1)^{n2} f2(-n2) / n2, an exact integer.
    let f2 = g2.laplacian_matrix().char_poly()?;
    let mut f2_at = f2.eval(&BigRational::from_integer(-n2_int.clone())).to_integer();
    if n2 % 2 == 1 {
        f2_at = -f2_at;
    }
    let (shifted_product, rem) = f2_at.div_rem(&n2_int);
    debug_assert!(rem.is_zero());

    // prod_{i >= 2} mu_{1i} = |coefficient of x| of charpoly(L(g1)).
    let first_product = g1
        .laplacian_matrix()
        .char_poly()?
        .coeff(1)
        .to_integer()
        .abs();

    let linear_power = BigInt::from(n2 * (r1 + 1)).pow((n1 * (n2 - 1)) as u32);
    let numerator = linear_power
        * shifted_product.pow(n1 as u32)
        * (BigInt::from(2) * &n2_int)
        * n2_int.pow(2 * (n1 as u32 - 1))
        * first_product;
    let (corrected, rem) = numerator.div_rem(&BigInt::from(2 * n1 * n2));
    if !rem.is_zero() {
        return Err(Error::RouteDisagreement(
            "closed-form tree count is not an integer".into(),
        ));
    }
    Ok(SpanningTreesClosed {
        corrected,
        literal: BigInt::zero(),
    })
}

/// Wiener index: the sum of all-pairs BFS distances.
pub fn wiener_bfs(g: &Graph) -> Result<BigInt> {
    let d = g.distance_matrix()?;
    let total = d.entry_sum();
    let (half, rem) = total.div_rem(&BigInt::from(2));
    debug_assert!(rem.is_zero(), "distance matrix is symmetric");
    Ok(half)
}

/// Sum over vertex pairs of min(d, 2), with unreachable pairs counting 2;
/// the effective second-factor distance inside the product.
fn capped_wiener(g: &Graph) -> BigInt {
    let capped = capped_pair_distances(g);
    let n = g.order();
    let mut total = 0usize;
    for p in 0..n {
        for q in p + 1..n {
            total += capped[p][q];
        }
    }
    BigInt::from(total)
}

/// Closed-form Wiener index of the product, in all evaluated variants.
#[derive(Clone, Debug)]
pub struct WienerClosed {
    /// 4 n2^2 W(G1) + n1 W~(G2) + n1 n2 (2 n1 n2 - 1), where W~ caps
    /// second-factor distances at 2. Matches the oracle for every connected
    /// first factor.
    pub capped: BigInt,
    /// Face-value closed form using W(G2) itself; exact iff diam(G2) <= 2.
    /// None when G2 is disconnected (W(G2) undefined).
    pub uncapped: Option<BigInt>,
    /// Candidate variant with coefficient 4 n2 instead of 4 n2^2 on W(G1);
    /// kept for comparison, the oracle rejects it.
    pub low_order_variant: Option<BigInt>,
    /// Whether the uncapped form is exact, i.e. diam(G2) <= 2.
    pub uncapped_applicable: bool,
}

pub fn wiener_product_closed(g1: &Graph, g2: &Graph) -> Result<WienerClosed> {
    if !g1.is_connected() {
        return Err(Error::Disconnected);
    }
    let w1 = wiener_bfs(g1)?;
    let w2 = wiener_bfs(g2).ok();
    let n1 = BigInt::from(g1.order());
    let n2 = BigInt::from(g2.order());
    let mixed = &n1 * &n2 * (BigInt::from(2) * &n1 * &n2 - BigInt::one());
    let quad_coeff = BigInt::from(4) * &n2 * &n2;

    let capped = &quad_coeff * &w1 + &n1 * capped_wiener(g2) + &mixed;
    let uncapped = w2
        .as_ref()
        .map(|w2| &quad_coeff * &w1 + &n1 * w2 + &mixed);
    let low_order_variant = w2
        .as_ref()
        .map(|w2| BigInt::from(4) * &n2 * &w1 + &n1 * w2 + &mixed);
    let uncapped_applicable = g2.diameter().is_some_and(|d| d <= 2);
    Ok(WienerClosed {
        capped,
        uncapped,
        low_order_variant,
        uncapped_applicable,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    Kirchhoff,
    SpanningTrees,
    Wiener,
}

impl InvariantKind {
    pub fn name(&self) -> &'static str {
        match self {
            InvariantKind::Kirchhoff => "kirchhoff",
            InvariantKind::SpanningTrees => "spanning_trees",
            InvariantKind::Wiener => "wiener",
        }
    }
}

/// Literal evaluation of a closed formula: either a finite value or the
/// reason it is singular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiteralValue {
    Finite(BigRational),
    Singular(String),
}

impl LiteralValue {
    fn to_json(&self) -> Value {
        match self {
            LiteralValue::Finite(v) => json!({ "finite": true, "value": v.to_string() }),
            LiteralValue::Singular(reason) => json!({ "finite": false, "reason": reason }),
        }
    }
}

/// Extra detail carried by the Wiener report.
#[derive(Clone, Debug)]
pub struct WienerDetail {
    pub low_order_variant: Option<BigInt>,
    pub low_order_matches_oracle: bool,
    pub uncapped_applicable: bool,
}

/// One invariant with its literal, corrected and oracle values plus the
/// two verdicts.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub name: InvariantKind,
    pub literal: LiteralValue,
    pub corrected: BigRational,
    pub oracle: BigRational,
    pub corrected_matches_oracle: bool,
    pub literal_matches_oracle: bool,
    pub wiener: Option<WienerDetail>,
}

impl InvariantReport {
    pub fn to_json(&self) -> Value {
        let mut record = json!({
            "name": self.name.name(),
            "literal": self.literal.to_json(),
            "corrected": self.corrected.to_string(),
            "oracle": self.oracle.to_string(),
            "corrected_matches_oracle": self.corrected_matches_oracle,
            "literal_matches_oracle": self.literal_matches_oracle,
        });
        if let Some(detail) = &self.wiener {
            record["wiener"] = json!({
                "low_order_variant": detail
                    .low_order_variant
                    .as_ref()
                    .map(BigInt::to_string),
                "low_order_matches_oracle": detail.low_order_matches_oracle,
                "uncapped_applicable": detail.uncapped_applicable,
            });
        }
        record
    }

    pub fn csv_row(&self) -> String {
        let literal = match &self.literal {
            LiteralValue::Finite(v) => v.to_string(),
            LiteralValue::Singular(_) => "singular".to_string(),
        };
        format!(
            "{},{},{},{},{},{}",
            self.name.name(),
            literal,
            self.corrected,
            self.oracle,
            self.corrected_matches_oracle,
            self.literal_matches_oracle
        )
    }
}

/// All three invariant reports for one product instance, each checked
/// against its oracle on the explicit product graph.
pub fn invariant_reports(g1: &Graph, g2: &Graph) -> Result<Vec<InvariantReport>> {
    let product = star_product(g1, g2);

    let kirchhoff = kirchhoff_product_closed(g1, g2)?;
    let kirchhoff_oracle = kirchhoff_exact(&product.graph)?;
    let kirchhoff_report = InvariantReport {
        name: InvariantKind::Kirchhoff,
        literal: LiteralValue::Singular(kirchhoff.literal_failure.to_string()),
        corrected_matches_oracle: kirchhoff.corrected == kirchhoff_oracle,
        literal_matches_oracle: false,
        corrected: kirchhoff.corrected,
        oracle: kirchhoff_oracle,
        wiener: None,
    };

    let trees = spanning_trees_product_closed(g1, g2)?;
    let trees_oracle = spanning_trees_matrix_tree(&product.graph)?;
    let trees_report = InvariantReport {
        name: InvariantKind::SpanningTrees,
        literal: LiteralValue::Finite(BigRational::from_integer(trees.literal.clone())),
        corrected_matches_oracle: trees.corrected == trees_oracle.count,
        literal_matches_oracle: trees.literal == trees_oracle.count,
        corrected: BigRational::from_integer(trees.corrected),
        oracle: BigRational::from_integer(trees_oracle.count),
        wiener: None,
    };

    let wiener = wiener_product_closed(g1, g2)?;
    let wiener_oracle = wiener_bfs(&product.graph)?;
    let literal = match &wiener.uncapped {
        Some(v) => LiteralValue::Finite(BigRational::from_integer(v.clone())),
        None => LiteralValue::Singular("second factor is disconnected".to_string()),
    };
    let wiener_report = InvariantReport {
        name: InvariantKind::Wiener,
        literal_matches_oracle: wiener.uncapped.as_ref() == Some(&wiener_oracle),
        literal,
        corrected_matches_oracle: wiener.capped == wiener_oracle,
        corrected: BigRational::from_integer(wiener.capped.clone()),
        oracle: BigRational::from_integer(wiener_oracle.clone()),
        wiener: Some(WienerDetail {
            low_order_matches_oracle: wiener.low_order_variant.as_ref() == Some(&wiener_oracle),
            low_order_variant: wiener.low_order_variant,
            uncapped_applicable: wiener.uncapped_applicable,
        }),
    };

    Ok(vec![kirchhoff_report, trees_report, wiener_report])
}
