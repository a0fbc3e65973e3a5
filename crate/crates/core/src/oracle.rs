//! Brute-force reference evaluation of every sum family.
//!
//! Each summand is accumulated literally as written on the identity's left
//! side, term by term, with no algebraic simplification; weight powers are
//! recomputed by explicit exponentiation at every term rather than updated
//! incrementally. This is deliberately slow and maximally independent of
//! the closed-form code path: the oracle consults nothing outside the
//! sequence core.
//!
//! Signs of negative bases follow exact integer arithmetic; there is no
//! separate parity bookkeeping to get wrong.

use crate::exact::{int_pow, neg_one_pow, neg_one_pow_prod, pow5, to_rat, ExactInt, ExactRat};
use crate::family::{SumArgs, SumError, SumFamilyId};
use crate::seq::{fibonacci_number, Gibonacci};
use num_traits::Zero;

/// A brute-force accumulation outcome. When `zero_hit` is set the sum ran
/// into a vanishing denominator term at that sequence index and `value` is
/// meaningless.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: ExactRat,
    pub terms_evaluated: i64,
    pub zero_hit: Option<i64>,
}

impl OracleResult {
    fn complete(value: ExactRat, terms: i64) -> Self {
        OracleResult {
            value,
            terms_evaluated: terms,
            zero_hit: None,
        }
    }

    fn aborted(terms: i64, index: i64) -> Self {
        OracleResult {
            value: ExactRat::zero(),
            terms_evaluated: terms,
            zero_hit: Some(index),
        }
    }
}

/// Evaluates the family's sum exactly as printed, term by term.
///
/// Arguments the family does not use are ignored. Rejects the same usage
/// errors as the closed forms (`n < 0`, undersized `r`) so the two sides
/// stay comparable cell for cell.
pub fn direct_sum(
    seq: &Gibonacci,
    family: SumFamilyId,
    args: &SumArgs,
) -> Result<OracleResult, SumError> {
    let SumArgs { n, t, m, r, s } = *args;
    if n < 0 {
        return Err(SumError::NegativeLength(n));
    }
    match family {
        SumFamilyId::Linear => {
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc += seq.term(j + t);
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::LinearAlt => {
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc += neg_one_pow(j - 1) * seq.term(j + t);
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::Fifth => {
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc += pow5(&seq.term(j + t));
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::FifthAlt => {
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc += neg_one_pow(j - 1) * pow5(&seq.term(j + t));
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::FiveProduct => {
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc += five_window(seq, j + t, m);
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::FiveProductAlt => {
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc += neg_one_pow(j - 1) * five_window(seq, j + t, m);
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::FiveProductWeighted => {
            let fm2 = fibonacci_number(m + 2);
            let neg_fm3 = -fibonacci_number(m - 3);
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc += int_pow(&neg_fm3, n - j) * int_pow(&fm2, j) * five_window(seq, j + t, m);
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::PentadProgression => {
            let fm = fibonacci_number(m);
            let neg_fm5 = -fibonacci_number(m - 5);
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                acc +=
                    int_pow(&neg_fm5, n - j) * int_pow(&fm, j - 1) * seq.term(5 * (j + t) + m + s);
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::Reciprocal => {
            let neg_fm2 = -fibonacci_number(m + 2);
            let fm3 = fibonacci_number(m - 3);
            let mut acc = ExactRat::zero();
            for j in 1..=n {
                let mut den = ExactInt::from(1);
                for i in -2..=3 {
                    let factor = seq.term(j + t + i);
                    if factor.is_zero() {
                        return Ok(OracleResult::aborted(j - 1, j + t + i));
                    }
                    den *= factor;
                }
                let num = int_pow(&neg_fm2, n - j) * int_pow(&fm3, j - 1) * seq.term(j + t + m);
                acc += ExactRat::new(num, den);
            }
            Ok(OracleResult::complete(acc, n))
        }
        SumFamilyId::RProduct => {
            if r < 2 {
                return Err(SumError::OrderTooSmall { r, min: 2 });
            }
            let fm = fibonacci_number(m);
            let fmr = fibonacci_number(m - r);
            let mut acc = ExactInt::zero();
            for j in 1..=n {
                let mut interior = ExactInt::from(1);
                for i in 1..r {
                    interior *= seq.term(j + t + i);
                }
                acc += neg_one_pow_prod(r, n - j)
                    * int_pow(&fmr, n - j)
                    * int_pow(&fm, j - 1)
                    * interior
                    * seq.term(j + t + m);
            }
            Ok(OracleResult::complete(to_rat(&acc), n))
        }
        SumFamilyId::RReciprocal => {
            if r < 1 {
                return Err(SumError::OrderTooSmall { r, min: 1 });
            }
            let fm = fibonacci_number(m);
            let fmr = fibonacci_number(m - r);
            let mut acc = ExactRat::zero();
            for j in 1..=n {
                let mut den = ExactInt::from(1);
                for i in 0..=r {
                    let factor = seq.term(j + t + i);
                    if factor.is_zero() {
                        return Ok(OracleResult::aborted(j - 1, j + t + i));
                    }
                    den *= factor;
                }
                let num = neg_one_pow_prod(r, j)
                    * int_pow(&fm, n - j)
                    * int_pow(&fmr, j - 1)
                    * seq.term(j + t + m);
                acc += ExactRat::new(num, den);
            }
            Ok(OracleResult::complete(acc, n))
        }
    }
}

/// `G_{base-1} G_base G_{base+1} G_{base+2} G_{base+m}` where `m` offsets
/// from `base`'s defining index.
fn five_window(seq: &Gibonacci, base: i64, m: i64) -> ExactInt {
    seq.term(base - 1)
        * seq.term(base)
        * seq.term(base + 1)
        * seq.term(base + 2)
        * seq.term(base + m)
}
