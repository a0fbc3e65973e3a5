//! Closed-form evaluators for every summation family.
//!
//! Each operation returns the boundary-term value that the brute-force
//! oracle must match exactly. All closed forms come back as rationals even
//! when integrality is guaranteed; integrality is asserted separately by
//! the test suites, so a broken division by 44, 220, 5 or `F_r` shows up
//! as a test failure instead of a silent truncation.
//!
//! Sums start at `j = 1`; negative `n` is rejected rather than given an
//! empty/reversed reading. Reciprocal families report the exact sequence
//! index of the first vanishing denominator term, so grid runs can
//! distinguish domain holes from identity failures.

use crate::exact::{
    int, int_pow, neg_one_pow, neg_one_pow_prod, pow5, rat_abs, to_rat, ExactInt, ExactRat,
};
use crate::family::{SumArgs, SumFamilyId};
use crate::seq::{fibonacci_number, Gibonacci};
use num_traits::{Signed, Zero};

pub use crate::family::SumError;

fn ensure_nonneg(n: i64) -> Result<(), SumError> {
    if n < 0 {
        Err(SumError::NegativeLength(n))
    } else {
        Ok(())
    }
}

/// First index in `[lo, hi]` whose term vanishes.
fn first_zero_in(seq: &Gibonacci, lo: i64, hi: i64) -> Option<i64> {
    (lo..=hi).find(|&i| seq.term(i).is_zero())
}

/// `sum_{j=1}^n G_{j+t}  =  G_{n+t+2} - G_{t+2}`.
pub fn sum_linear(seq: &Gibonacci, n: i64, t: i64) -> Result<ExactInt, SumError> {
    ensure_nonneg(n)?;
    Ok(seq.term(n + t + 2) - seq.term(t + 2))
}

/// `sum_{j=1}^n (-1)^{j-1} G_{j+t}  =  (-1)^{n+1} G_{n+t-1} + G_{t-1}`.
pub fn sum_linear_alt(seq: &Gibonacci, n: i64, t: i64) -> Result<ExactInt, SumError> {
    ensure_nonneg(n)?;
    Ok(neg_one_pow(n + 1) * seq.term(n + t - 1) + seq.term(t - 1))
}

/// Coefficients over successive differences of fifth powers: 44 times the
/// plain fifth-power sum.
const DEG5_DIFF: [(i64, i64); 6] = [(-1, 3), (7, 2), (47, 1), (31, 0), (-9, -1), (-1, -2)];
/// Coefficients over successive sums of fifth powers: 44 times the
/// alternating fifth-power sum (up to the global `(-1)^{n+1}` factor).
const DEG5_ALT: [(i64, i64); 6] = [(-1, 3), (9, 2), (31, 1), (-47, 0), (7, -1), (1, -2)];

/// `44 * sum_{j=1}^n G_{j+t}^5` as the six-difference boundary expression.
fn deg5_sum_scaled(seq: &Gibonacci, n: i64, t: i64) -> ExactInt {
    let mut acc = ExactInt::zero();
    for (c, k) in DEG5_DIFF {
        acc += c * (pow5(&seq.term(n + t + k)) - pow5(&seq.term(t + k)));
    }
    acc
}

/// `44 * sum_{j=1}^n (-1)^{j-1} G_{j+t}^5` as the six-sum boundary expression.
fn deg5_alt_scaled(seq: &Gibonacci, n: i64, t: i64) -> ExactInt {
    let sign = neg_one_pow(n + 1);
    let mut acc = ExactInt::zero();
    for (c, k) in DEG5_ALT {
        acc += c * (&sign * pow5(&seq.term(n + t + k)) + pow5(&seq.term(t + k)));
    }
    acc
}

/// `sum_{j=1}^n G_{j+t}^5`, always an integer-valued rational.
pub fn sum_fifth(seq: &Gibonacci, n: i64, t: i64) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    Ok(ExactRat::new(deg5_sum_scaled(seq, n, t), int(44)))
}

/// `sum_{j=1}^n (-1)^{j-1} G_{j+t}^5`.
pub fn sum_fifth_alt(seq: &Gibonacci, n: i64, t: i64) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    Ok(ExactRat::new(deg5_alt_scaled(seq, n, t), int(44)))
}

/// `sum_{j=1}^n G_{j+t-1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+m}`.
pub fn sum_five_product(seq: &Gibonacci, n: i64, t: i64, m: i64) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    let lam2 = seq.lambda().pow(2u32);
    let fm2 = fibonacci_number(m + 2);
    let fm3 = fibonacci_number(m - 3);
    let fsum = &fm2 + &fm3;
    let scaled = &fsum * deg5_sum_scaled(seq, n, t)
        - int(44) * &lam2 * &fsum * (seq.term(n + t + 2) - seq.term(t + 2))
        - int(44) * &fm2 * (pow5(&seq.term(t + 1)) - &lam2 * seq.term(t + 1))
        + int(44) * &fm2 * (pow5(&seq.term(n + t + 1)) - &lam2 * seq.term(n + t + 1));
    Ok(ExactRat::new(scaled, int(220)))
}

/// `sum_{j=1}^n (-1)^{j-1} G_{j+t-1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+m}`.
pub fn sum_five_product_alt(seq: &Gibonacci, n: i64, t: i64, m: i64) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    let lam2 = seq.lambda().pow(2u32);
    let fm2 = fibonacci_number(m + 2);
    let fm3 = fibonacci_number(m - 3);
    let fdiff = &fm2 - &fm3;
    let sign = neg_one_pow(n + 1);
    let scaled = -(&fdiff * deg5_alt_scaled(seq, n, t))
        + int(44) * &lam2 * &fdiff * (&sign * seq.term(n + t - 1) + seq.term(t - 1))
        + int(44) * &fm2 * (pow5(&seq.term(t + 1)) - &lam2 * seq.term(t + 1))
        + int(44) * &sign * &fm2 * (pow5(&seq.term(n + t + 1)) - &lam2 * seq.term(n + t + 1));
    Ok(ExactRat::new(scaled, int(220)))
}

/// The five-term sliding window product `G_{base-1} .. G_{base+3}`.
fn window5(seq: &Gibonacci, base: i64) -> ExactInt {
    seq.window_product(base, &[-1, 0, 1, 2, 3])
}

/// `sum_{j=1}^n (-F_{m-3})^{n-j} F_{m+2}^j G_{j+t-1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+m}`,
/// evaluated through the product-only boundary form.
pub fn sum_five_product_weighted(
    seq: &Gibonacci,
    n: i64,
    t: i64,
    m: i64,
) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    let fm2 = fibonacci_number(m + 2);
    let fm3 = fibonacci_number(m - 3);
    let scaled = int_pow(&fm2, n + 1) * window5(seq, n + t)
        - neg_one_pow(n) * int_pow(&fm3, n) * &fm2 * window5(seq, t);
    Ok(ExactRat::new(scaled, int(5)))
}

/// Same sum as [`sum_five_product_weighted`] through the fifth-power
/// boundary form; the two must agree identically.
pub fn sum_five_product_weighted_lambda_form(
    seq: &Gibonacci,
    n: i64,
    t: i64,
    m: i64,
) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    let lam2 = seq.lambda().pow(2u32);
    let fm2 = fibonacci_number(m + 2);
    let head = int_pow(&fm2, n + 1);
    let tail = int_pow(&(-fibonacci_number(m - 3)), n) * &fm2;
    let scaled = &head * pow5(&seq.term(n + t + 1))
        - &tail * pow5(&seq.term(t + 1))
        - lam2 * (&head * seq.term(n + t + 1) - &tail * seq.term(t + 1));
    Ok(ExactRat::new(scaled, int(5)))
}

/// `sum_{j=1}^n (-F_{m-5})^{n-j} F_m^{j-1} G_{5(j+t)+m+s}`.
pub fn sum_pentad_progression(
    seq: &Gibonacci,
    n: i64,
    t: i64,
    m: i64,
    s: i64,
) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    let scaled = int_pow(&fibonacci_number(m), n) * seq.term(5 * (n + t + 1) + s)
        - neg_one_pow(n) * int_pow(&fibonacci_number(m - 5), n) * seq.term(5 * (t + 1) + s);
    Ok(ExactRat::new(scaled, int(5)))
}

/// `sum_{j=1}^n (-F_{m+2})^{n-j} F_{m-3}^{j-1} G_{j+t+m}
///    / (G_{j+t-2} G_{j+t-1} G_{j+t} G_{j+t+1} G_{j+t+2} G_{j+t+3})`.
///
/// Errors with the first vanishing denominator index; the boundary window
/// is checked even for the empty sum, where the identity is undefined.
pub fn sum_reciprocal(seq: &Gibonacci, n: i64, t: i64, m: i64) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    let hi = if n == 0 { t + 3 } else { n + t + 3 };
    if let Some(i) = first_zero_in(seq, t - 1, hi) {
        return Err(SumError::ZeroTerm(i));
    }
    let head = ExactRat::new(
        int_pow(&fibonacci_number(m - 3), n),
        5 * window5(seq, n + t),
    );
    let tail = ExactRat::new(int_pow(&(-fibonacci_number(m + 2)), n), 5 * window5(seq, t));
    Ok(head - tail)
}

/// How many consecutive strict remainder decreases are demanded before the
/// tolerance comparison may certify a limit.
pub const CERTIFY_DECAY_STEPS: usize = 5;

/// Outcome of an infinite reciprocal-sum certification.
///
/// `limit` is the boundary value `1 / (5 G_{t-1} G_t G_{t+1} G_{t+2} G_{t+3})`
/// that the normalized partial sums approach; `certified` is true only when
/// the exact remainder magnitude `|F_{m-3}|^n / (5 |G_{n+t-1} .. G_{n+t+3}|)`
/// decreased strictly for [`CERTIFY_DECAY_STEPS`] consecutive steps and then
/// fell below the tolerance within `max_n` terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitOutcome {
    pub limit: ExactRat,
    pub certified: bool,
    pub n_used: i64,
    pub remainder_magnitudes: Vec<ExactRat>,
}

/// Certifies the limiting case of [`sum_reciprocal`]'s family.
///
/// The partial-sum identity is exact at every `n`; certification is purely
/// about the remainder term provably dying out. A remainder that is exactly
/// zero (possible when `F_{m-3} = 0`) certifies immediately.
pub fn limit_reciprocal(
    seq: &Gibonacci,
    t: i64,
    m: i64,
    tol: &ExactRat,
    max_n: i64,
) -> Result<LimitOutcome, SumError> {
    assert!(tol.is_positive(), "limit tolerance must be positive");
    assert!(max_n >= 1, "max_n must be at least 1");
    let fm2 = fibonacci_number(m + 2);
    if fm2.is_zero() {
        // the normalized series divides by F_{m+2}^j
        return Err(SumError::ZeroFibDivisor(m + 2));
    }
    if let Some(i) = first_zero_in(seq, t - 1, t + 3) {
        return Err(SumError::ZeroTerm(i));
    }
    let limit = ExactRat::new(int(1), 5 * window5(seq, t));
    let fm3_abs = fibonacci_number(m - 3).abs();
    let mut magnitudes: Vec<ExactRat> = Vec::new();
    let mut streak = 0usize;
    for n in 1..=max_n {
        if let Some(i) = first_zero_in(seq, n + t - 1, n + t + 3) {
            return Err(SumError::ZeroTerm(i));
        }
        let mag = rat_abs(&ExactRat::new(
            int_pow(&fm3_abs, n),
            5 * window5(seq, n + t),
        ));
        if let Some(prev) = magnitudes.last() {
            if &mag < prev {
                streak += 1;
            } else {
                streak = 0;
            }
        }
        let certified_now = &mag < tol && (streak >= CERTIFY_DECAY_STEPS || mag.is_zero());
        magnitudes.push(mag);
        if certified_now {
            return Ok(LimitOutcome {
                limit,
                certified: true,
                n_used: n,
                remainder_magnitudes: magnitudes,
            });
        }
    }
    Ok(LimitOutcome {
        limit,
        certified: false,
        n_used: max_n,
        remainder_magnitudes: magnitudes,
    })
}

/// `sum_{j=1}^n (-1)^{r(n-j)} F_{m-r}^{n-j} F_m^{j-1}
///    G_{j+t+1} .. G_{j+t+r-1} G_{j+t+m}`  for `r >= 2`.
pub fn sum_r_product(
    seq: &Gibonacci,
    n: i64,
    t: i64,
    m: i64,
    r: i64,
) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    if r < 2 {
        return Err(SumError::OrderTooSmall { r, min: 2 });
    }
    let run: Vec<i64> = (1..=r).collect();
    let scaled = int_pow(&fibonacci_number(m), n) * seq.window_product(n + t, &run)
        - neg_one_pow_prod(r, n)
            * int_pow(&fibonacci_number(m - r), n)
            * seq.window_product(t, &run);
    Ok(ExactRat::new(scaled, fibonacci_number(r)))
}

/// `sum_{j=1}^n (-1)^{rj} F_m^{n-j} F_{m-r}^{j-1} G_{j+t+m}
///    / (G_{j+t} G_{j+t+1} .. G_{j+t+r})`  for `r >= 1`.
pub fn sum_r_reciprocal(
    seq: &Gibonacci,
    n: i64,
    t: i64,
    m: i64,
    r: i64,
) -> Result<ExactRat, SumError> {
    ensure_nonneg(n)?;
    if r < 1 {
        return Err(SumError::OrderTooSmall { r, min: 1 });
    }
    // summand denominators cover exactly [t+1, n+t+r]; the empty sum still
    // needs the shared boundary window [t+1, t+r]
    let hi = if n == 0 { t + r } else { n + t + r };
    if let Some(i) = first_zero_in(seq, t + 1, hi) {
        return Err(SumError::ZeroTerm(i));
    }
    let run: Vec<i64> = (1..=r).collect();
    let head_sign = -neg_one_pow_prod(r, n - 1); // (-1)^{r(n-1)+1}
    let head = ExactRat::new(
        head_sign * int_pow(&fibonacci_number(m - r), n),
        seq.window_product(n + t, &run),
    );
    let tail = ExactRat::new(
        neg_one_pow(r) * int_pow(&fibonacci_number(m), n),
        seq.window_product(t, &run),
    );
    Ok((head + tail) / to_rat(&fibonacci_number(r)))
}

/// Dispatches a family id to its closed form; linear families are lifted
/// into the rationals for a uniform verifier surface.
pub fn closed_form(
    seq: &Gibonacci,
    family: SumFamilyId,
    args: &SumArgs,
) -> Result<ExactRat, SumError> {
    let SumArgs { n, t, m, r, s } = *args;
    match family {
        SumFamilyId::Linear => sum_linear(seq, n, t).map(|v| to_rat(&v)),
        SumFamilyId::LinearAlt => sum_linear_alt(seq, n, t).map(|v| to_rat(&v)),
        SumFamilyId::Fifth => sum_fifth(seq, n, t),
        SumFamilyId::FifthAlt => sum_fifth_alt(seq, n, t),
        SumFamilyId::FiveProduct => sum_five_product(seq, n, t, m),
        SumFamilyId::FiveProductAlt => sum_five_product_alt(seq, n, t, m),
        SumFamilyId::FiveProductWeighted => sum_five_product_weighted(seq, n, t, m),
        SumFamilyId::PentadProgression => sum_pentad_progression(seq, n, t, m, s),
        SumFamilyId::Reciprocal => sum_reciprocal(seq, n, t, m),
        SumFamilyId::RProduct => sum_r_product(seq, n, t, m, r),
        SumFamilyId::RReciprocal => sum_r_reciprocal(seq, n, t, m, r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::seq::GibonacciParams;

    fn fib() -> Gibonacci {
        Gibonacci::fibonacci()
    }

    fn lucas() -> Gibonacci {
        Gibonacci::lucas()
    }

    #[test]
    fn linear_examples() {
        assert_eq!(sum_linear(&fib(), 5, 0).unwrap(), int(12)); // 1+1+2+3+5
        assert_eq!(sum_linear(&lucas(), 3, 0).unwrap(), int(8)); // 1+3+4
        assert_eq!(sum_linear(&fib(), 0, 7).unwrap(), int(0));
        assert!(matches!(
            sum_linear(&fib(), -1, 0),
            Err(SumError::NegativeLength(-1))
        ));
    }

    #[test]
    fn linear_alt_examples() {
        assert_eq!(sum_linear_alt(&fib(), 4, 0).unwrap(), int(-1)); // 1-1+2-3
        assert_eq!(sum_linear_alt(&fib(), 0, 0).unwrap(), int(0));
        assert_eq!(sum_linear_alt(&lucas(), 3, 1).unwrap(), int(6)); // 3-4+7
    }

    #[test]
    fn fifth_examples() {
        assert_eq!(sum_fifth(&fib(), 2, 0).unwrap(), rat(2)); // 1 + 1
        assert_eq!(sum_fifth(&lucas(), 1, 0).unwrap(), rat(1));
        assert_eq!(sum_fifth(&fib(), 0, 3).unwrap(), rat(0));
    }

    #[test]
    fn fifth_alt_examples() {
        assert_eq!(sum_fifth_alt(&fib(), 2, 0).unwrap(), rat(0)); // 1 - 1
        assert_eq!(sum_fifth_alt(&lucas(), 1, 0).unwrap(), rat(1));
        assert_eq!(sum_fifth_alt(&fib(), 0, -2).unwrap(), rat(0));
    }

    #[test]
    fn five_product_examples() {
        assert_eq!(sum_five_product(&fib(), 1, 2, -2).unwrap(), rat(30)); // F_1..F_5
        assert_eq!(sum_five_product(&lucas(), 1, 2, -2).unwrap(), rat(924)); // L_1..L_5
        assert_eq!(sum_five_product(&fib(), 0, 0, 5).unwrap(), rat(0));
    }

    #[test]
    fn five_product_alt_examples() {
        assert_eq!(sum_five_product_alt(&fib(), 1, 2, -2).unwrap(), rat(30));
        assert_eq!(sum_five_product_alt(&lucas(), 1, 2, -2).unwrap(), rat(924));
        assert_eq!(sum_five_product_alt(&fib(), 0, 1, 1).unwrap(), rat(0));
    }

    #[test]
    fn weighted_examples() {
        assert_eq!(sum_five_product_weighted(&fib(), 1, 1, 1).unwrap(), rat(24));
        assert_eq!(
            sum_five_product_weighted(&lucas(), 1, 1, 1).unwrap(),
            rat(672)
        );
        assert_eq!(sum_five_product_weighted(&fib(), 0, 0, 4).unwrap(), rat(0));
    }

    #[test]
    fn weighted_forms_agree() {
        for (a, b) in [(0, 1), (2, 1), (3, -4)] {
            let g = Gibonacci::new(GibonacciParams::new(a, b));
            for n in 0..=6 {
                for t in -3..=3 {
                    for m in -5..=5 {
                        assert_eq!(
                            sum_five_product_weighted(&g, n, t, m).unwrap(),
                            sum_five_product_weighted_lambda_form(&g, n, t, m).unwrap(),
                            "({a},{b}) n={n} t={t} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pentad_examples() {
        assert_eq!(sum_pentad_progression(&fib(), 1, 0, 1, 0).unwrap(), rat(8)); // F_6
        assert_eq!(
            sum_pentad_progression(&lucas(), 1, 0, 1, 0).unwrap(),
            rat(18)
        ); // L_6
        assert_eq!(sum_pentad_progression(&fib(), 0, 2, 3, 1).unwrap(), rat(0));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(sum_reciprocal(&fib(), 1, 2, -1).unwrap(), ratio(1, 240));
        // the direct literal sum for n=1, t=2, m=4 is F_7/(F_1 F_2 F_3 F_4 F_5 F_6)
        assert_eq!(sum_reciprocal(&fib(), 1, 2, 4).unwrap(), ratio(13, 240));
        assert_eq!(
            sum_reciprocal(&fib(), 2, -1, 0).unwrap_err(),
            SumError::ZeroTerm(0)
        );
    }

    #[test]
    fn reciprocal_boundary_window_checked_at_n0() {
        // empty sum, but the boundary product crosses F_0
        assert_eq!(
            sum_reciprocal(&fib(), 0, 1, 0).unwrap_err(),
            SumError::ZeroTerm(0)
        );
        assert_eq!(sum_reciprocal(&fib(), 0, 3, 0).unwrap(), rat(0));
    }

    fn tol25() -> ExactRat {
        ExactRat::new(int(1), int(10).pow(25u32))
    }

    #[test]
    fn limit_certifies_paper_values() {
        let out = limit_reciprocal(&fib(), 2, -1, &tol25(), 60).unwrap();
        assert!(out.certified);
        assert_eq!(out.limit, ratio(1, 150));
        assert!(out.n_used <= 60);

        let out = limit_reciprocal(&lucas(), 2, -1, &tol25(), 60).unwrap();
        assert!(out.certified);
        assert_eq!(out.limit, ratio(1, 4620));

        let out = limit_reciprocal(&fib(), 2, 4, &tol25(), 60).unwrap();
        assert!(out.certified);
        assert_eq!(out.limit, ratio(1, 150));

        let out = limit_reciprocal(&lucas(), 2, 4, &tol25(), 60).unwrap();
        assert!(out.certified);
        assert_eq!(out.limit, ratio(1, 4620));
    }

    #[test]
    fn limit_refuses_fast_growing_weights() {
        // |F_9| = 34 outgrows the five-term product ratio
        let out = limit_reciprocal(&fib(), 2, 12, &tol25(), 60).unwrap();
        assert!(!out.certified);
        assert_eq!(out.n_used, 60);
    }

    #[test]
    fn limit_domain_errors() {
        assert_eq!(
            limit_reciprocal(&fib(), 1, -1, &tol25(), 60).unwrap_err(),
            SumError::ZeroTerm(0)
        );
        assert_eq!(
            limit_reciprocal(&fib(), 2, -2, &tol25(), 60).unwrap_err(),
            SumError::ZeroFibDivisor(0)
        );
    }

    #[test]
    fn limit_zero_remainder_certifies_immediately() {
        // m = 3 makes F_{m-3} = 0: the partial sum is exact from n = 1 on
        let out = limit_reciprocal(&fib(), 2, 3, &tol25(), 60).unwrap();
        assert!(out.certified);
        assert_eq!(out.n_used, 1);
    }

    #[test]
    fn r_product_examples() {
        assert_eq!(sum_r_product(&fib(), 2, 0, 3, 2).unwrap(), rat(23));
        assert_eq!(sum_r_product(&fib(), 0, 5, 2, 4).unwrap(), rat(0));
        assert!(matches!(
            sum_r_product(&fib(), 2, 0, 3, 1),
            Err(SumError::OrderTooSmall { r: 1, min: 2 })
        ));
    }

    #[test]
    fn r_reciprocal_examples() {
        // single term: (-1)^2 F_3^0 F_1^0 * F_5 / (F_2 F_3 F_4) = 5/6
        let v = sum_r_reciprocal(&fib(), 1, 1, 3, 2).unwrap();
        assert_eq!(v, ratio(5, 6));
        assert_eq!(
            sum_r_reciprocal(&fib(), 1, -1, 2, 3).unwrap_err(),
            SumError::ZeroTerm(0)
        );
        assert!(matches!(
            sum_r_reciprocal(&fib(), 1, 1, 3, 0),
            Err(SumError::OrderTooSmall { r: 0, min: 1 })
        ));
    }

    #[test]
    fn empty_sums_are_zero_everywhere() {
        use crate::family::ALL_FAMILIES;
        let g = Gibonacci::new(GibonacciParams::new(-2, 5));
        for family in ALL_FAMILIES {
            for t in -4..=4 {
                for m in -6..=6 {
                    let args = SumArgs {
                        n: 0,
                        t,
                        m,
                        r: 3,
                        s: 1,
                    };
                    match closed_form(&g, family, &args) {
                        Ok(v) => assert!(v.is_zero(), "{family} t={t} m={m}"),
                        Err(e) => assert!(e.is_domain(), "{family} t={t} m={m}: {e}"),
                    }
                }
            }
        }
    }
}
