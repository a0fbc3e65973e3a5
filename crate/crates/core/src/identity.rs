//! Pointwise (single-index) identity checks.
//!
//! Each check evaluates both sides of one identity independently and
//! reports the pair plus an exact-equality verdict. Both sides are always
//! returned, not just a boolean, so discrepancy reports can localize a
//! failure to actual values.
//!
//! Fibonacci coefficients, including those with negative subscripts such
//! as `F_{-3}`, always come from the shared `(0,1)` sequence in
//! [`crate::seq::fibonacci_number`]; there is no separate sign formula.

use crate::exact::{neg_one_pow, pow5, to_rat, ExactRat};
use crate::seq::{fibonacci_number, Gibonacci};

/// An evaluated left-hand side and right-hand side with equality verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: ExactRat,
    pub rhs: ExactRat,
    pub equal: bool,
}

impl IdentityCheck {
    pub fn new(lhs: ExactRat, rhs: ExactRat) -> Self {
        let equal = lhs == rhs;
        IdentityCheck { lhs, rhs, equal }
    }
}

/// Name and statement of every pointwise check, for catalog listings.
pub const POINTWISE_CATALOG: [(&str, &str); 10] = [
    ("gelin_cesaro", "G(j)^4 - G(j-2)G(j-1)G(j+1)G(j+2) = lambda^2"),
    ("vajda28", "G(j)G(j+2) = G(j+1)^2 - (-1)^j lambda"),
    ("shift3", "G(j)G(j+3) = G(j+1)G(j+2) - (-1)^j lambda"),
    (
        "weighted_bridge",
        "G(j-1)G(j)G(j+1)G(j+2)(c G(j+3) - d G(j-2)) = c G(j+1)^5 - d G(j)^5 - lambda^2 (c G(j+1) - d G(j))",
    ),
    ("howard", "F(m+2)G(k+r) + (-1)^(r-1) F(m-r+2)G(k) = F(r)G(k+m+2)"),
    ("howard_general", "F(m)G(j+r) - (-1)^r F(m-r)G(j) = F(r)G(j+m)"),
    (
        "five_product_core",
        "5 G(j-1)G(j)G(j+1)G(j+2)G(j+m) = F(m+2)G(j+1)^5 + F(m-3)G(j)^5 - lambda^2 (F(m+2)G(j+1) + F(m-3)G(j))",
    ),
    (
        "brousseau5",
        "G(j+3)^5 = 8G(j+2)^5 + 40G(j+1)^5 - 60G(j)^5 - 40G(j-1)^5 + 8G(j-2)^5 + G(j-3)^5",
    ),
    (
        "rearranged_diff",
        "44G(j)^5 = -(G(j+3)^5-G(j+2)^5) + 7(G(j+2)^5-G(j+1)^5) + 47(G(j+1)^5-G(j)^5) + 31(G(j)^5-G(j-1)^5) - 9(G(j-1)^5-G(j-2)^5) - (G(j-2)^5-G(j-3)^5)",
    ),
    (
        "rearranged_sum",
        "44G(j)^5 = -(G(j+3)^5+G(j+2)^5) + 9(G(j+2)^5+G(j+1)^5) + 31(G(j+1)^5+G(j)^5) - 47(G(j)^5+G(j-1)^5) + 7(G(j-1)^5+G(j-2)^5) + (G(j-2)^5+G(j-3)^5)",
    ),
];

/// Fourth-power window identity:
/// `G_j^4 - G_{j-2} G_{j-1} G_{j+1} G_{j+2} = lambda^2`.
pub fn check_gelin_cesaro(seq: &Gibonacci, j: i64) -> IdentityCheck {
    let g = |i| seq.term(j + i);
    let lhs = g(0).pow(4u32) - g(-2) * g(-1) * g(1) * g(2);
    let rhs = seq.lambda().pow(2u32);
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// `G_j G_{j+2} = G_{j+1}^2 - (-1)^j lambda`.
pub fn check_vajda28(seq: &Gibonacci, j: i64) -> IdentityCheck {
    let lhs = seq.term(j) * seq.term(j + 2);
    let rhs = seq.term(j + 1).pow(2u32) - neg_one_pow(j) * seq.lambda();
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// `G_j G_{j+3} = G_{j+1} G_{j+2} - (-1)^j lambda`.
pub fn check_shift3(seq: &Gibonacci, j: i64) -> IdentityCheck {
    let lhs = seq.term(j) * seq.term(j + 3);
    let rhs = seq.term(j + 1) * seq.term(j + 2) - neg_one_pow(j) * seq.lambda();
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// Weighted bridge between a four-term window product and fifth powers,
/// for arbitrary rational weights `c`, `d`:
/// `G_{j-1} G_j G_{j+1} G_{j+2} (c G_{j+3} - d G_{j-2})
///   = c G_{j+1}^5 - d G_j^5 - lambda^2 (c G_{j+1} - d G_j)`.
pub fn check_weighted_bridge(seq: &Gibonacci, j: i64, c: &ExactRat, d: &ExactRat) -> IdentityCheck {
    let g = |i| to_rat(&seq.term(j + i));
    let lam2 = to_rat(&seq.lambda().pow(2u32));
    let window = g(-1) * g(0) * g(1) * g(2);
    let lhs = window * (c * g(3) - d * g(-2));
    let rhs = c * to_rat(&pow5(&seq.term(j + 1)))
        - d * to_rat(&pow5(&seq.term(j)))
        - lam2 * (c * g(1) - d * g(0));
    IdentityCheck::new(lhs, rhs)
}

/// `F_{m+2} G_{k+r} + (-1)^{r-1} F_{m-r+2} G_k = F_r G_{k+m+2}`.
pub fn check_howard(seq: &Gibonacci, k: i64, r: i64, m: i64) -> IdentityCheck {
    let lhs = fibonacci_number(m + 2) * seq.term(k + r)
        + neg_one_pow(r - 1) * fibonacci_number(m - r + 2) * seq.term(k);
    let rhs = fibonacci_number(r) * seq.term(k + m + 2);
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// `F_m G_{j+r} - (-1)^r F_{m-r} G_j = F_r G_{j+m}`.
pub fn check_howard_general(seq: &Gibonacci, j: i64, r: i64, m: i64) -> IdentityCheck {
    let lhs = fibonacci_number(m) * seq.term(j + r)
        - neg_one_pow(r) * fibonacci_number(m - r) * seq.term(j);
    let rhs = fibonacci_number(r) * seq.term(j + m);
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// The five-product identity the whole summation theory rests on:
/// `5 G_{j-1} G_j G_{j+1} G_{j+2} G_{j+m}
///   = F_{m+2} G_{j+1}^5 + F_{m-3} G_j^5 - lambda^2 (F_{m+2} G_{j+1} + F_{m-3} G_j)`.
pub fn check_five_product_core(seq: &Gibonacci, j: i64, m: i64) -> IdentityCheck {
    let g = |i| seq.term(j + i);
    let lam2 = seq.lambda().pow(2u32);
    let fm2 = fibonacci_number(m + 2);
    let fm3 = fibonacci_number(m - 3);
    let lhs = 5 * g(-1) * g(0) * g(1) * g(2) * seq.term(j + m);
    let rhs = &fm2 * pow5(&g(1)) + &fm3 * pow5(&g(0)) - lam2 * (&fm2 * g(1) + &fm3 * g(0));
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// Degree-5 recurrence among seven consecutive fifth powers:
/// `G_{j+3}^5 = 8 G_{j+2}^5 + 40 G_{j+1}^5 - 60 G_j^5 - 40 G_{j-1}^5 + 8 G_{j-2}^5 + G_{j-3}^5`.
pub fn check_brousseau5(seq: &Gibonacci, j: i64) -> IdentityCheck {
    let p = |i| pow5(&seq.term(j + i));
    let lhs = p(3);
    let rhs = 8 * p(2) + 40 * p(1) - 60 * p(0) - 40 * p(-1) + 8 * p(-2) + p(-3);
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// Rearrangement of the degree-5 recurrence over successive differences:
/// `44 G_j^5 = -(G_{j+3}^5 - G_{j+2}^5) + 7(G_{j+2}^5 - G_{j+1}^5) + 47(G_{j+1}^5 - G_j^5)
///   + 31(G_j^5 - G_{j-1}^5) - 9(G_{j-1}^5 - G_{j-2}^5) - (G_{j-2}^5 - G_{j-3}^5)`.
pub fn check_rearranged_diff(seq: &Gibonacci, j: i64) -> IdentityCheck {
    let p = |i| pow5(&seq.term(j + i));
    let lhs = 44 * p(0);
    let rhs = -(p(3) - p(2)) + 7 * (p(2) - p(1)) + 47 * (p(1) - p(0)) + 31 * (p(0) - p(-1))
        - 9 * (p(-1) - p(-2))
        - (p(-2) - p(-3));
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}

/// Rearrangement of the degree-5 recurrence over successive sums:
/// `44 G_j^5 = -(G_{j+3}^5 + G_{j+2}^5) + 9(G_{j+2}^5 + G_{j+1}^5) + 31(G_{j+1}^5 + G_j^5)
///   - 47(G_j^5 + G_{j-1}^5) + 7(G_{j-1}^5 + G_{j-2}^5) + (G_{j-2}^5 + G_{j-3}^5)`.
pub fn check_rearranged_sum(seq: &Gibonacci, j: i64) -> IdentityCheck {
    let p = |i| pow5(&seq.term(j + i));
    let lhs = 44 * p(0);
    let rhs = -(p(3) + p(2)) + 9 * (p(2) + p(1)) + 31 * (p(1) + p(0)) - 47 * (p(0) + p(-1))
        + 7 * (p(-1) + p(-2))
        + (p(-2) + p(-3));
    IdentityCheck::new(to_rat(&lhs), to_rat(&rhs))
}
