//! Catalog of classical Fibonacci/Lucas special cases with their printed
//! constants, and the machinery to re-verify each one against the
//! brute-force oracle.
//!
//! Constants are stored exactly as printed in the source displays. One
//! entry (`lucas-fifth-alt`) carries a suspected erratum: its printed form
//! mixes a Fibonacci fifth power into an otherwise all-Lucas identity. The
//! catalog keeps the printed form, flags the status, and stores the
//! corrected form alongside; verification expects the printed form to fail
//! and the corrected one to pass, so the catalog doubles as an errata
//! detector without editorializing.

use crate::exact::{
    int, int_pow, neg_one_pow, neg_one_pow_rat, pow5, rat, ratio, to_rat, ExactInt, ExactRat,
};
use crate::family::{SumArgs, SumFamilyId};
use crate::identity::IdentityCheck;
use crate::oracle::direct_sum;
use crate::seq::{fibonacci_number, lucas_number, Gibonacci, GibonacciParams};
use crate::sums::limit_reciprocal;
use std::sync::OnceLock;

/// Verification range for sum fixtures: every n in `0 ..= FIXTURE_N_MAX`.
pub const FIXTURE_N_MAX: i64 = 15;
/// Certification budget for limit fixtures.
pub const LIMIT_MAX_N: i64 = 60;

/// Certification tolerance for limit fixtures: 10^-25.
pub fn limit_tolerance() -> ExactRat {
    ExactRat::new(int(1), int(10).pow(25u32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureStatus {
    Verified,
    SuspectedErratum,
}

pub enum FixtureKind {
    /// A finite-sum display: `scale(n) * direct_sum == printed(n)`.
    Sum {
        scale: fn(i64) -> ExactRat,
        printed: fn(i64) -> ExactRat,
        corrected: Option<fn(i64) -> ExactRat>,
    },
    /// An infinite-sum display: certified limit must equal `expected`.
    Limit { expected: fn() -> ExactRat },
}

/// One displayed special case with its expected constants.
pub struct FixtureEntry {
    pub id: &'static str,
    pub family: SumFamilyId,
    pub params: (i64, i64),
    pub t: i64,
    pub m: i64,
    pub s: i64,
    pub status: FixtureStatus,
    pub kind: FixtureKind,
    pub formula: &'static str,
}

impl FixtureEntry {
    fn args(&self, n: i64) -> SumArgs {
        SumArgs {
            n,
            t: self.t,
            m: self.m,
            r: 2,
            s: self.s,
        }
    }
}

// ---------------------------------------------------------------- helpers

fn f(j: i64) -> ExactInt {
    fibonacci_number(j)
}

fn l(j: i64) -> ExactInt {
    lucas_number(j)
}

fn f5(j: i64) -> ExactInt {
    pow5(&fibonacci_number(j))
}

fn l5(j: i64) -> ExactInt {
    pow5(&lucas_number(j))
}

/// `X_start X_{start+1} .. X_{start+4}`.
fn prod_f(start: i64) -> ExactInt {
    (0..5).fold(int(1), |acc, i| acc * f(start + i))
}

fn prod_l(start: i64) -> ExactInt {
    (0..5).fold(int(1), |acc, i| acc * l(start + i))
}

// ------------------------------------------------------------ scale forms

fn scale_1(_: i64) -> ExactRat {
    rat(1)
}
fn scale_5(_: i64) -> ExactRat {
    rat(5)
}
fn scale_44(_: i64) -> ExactRat {
    rat(44)
}
fn scale_55(_: i64) -> ExactRat {
    rat(55)
}
fn scale_110(_: i64) -> ExactRat {
    rat(110)
}
fn scale_220(_: i64) -> ExactRat {
    rat(220)
}
fn scale_alt_5(n: i64) -> ExactRat {
    neg_one_pow_rat(n + 1) * rat(5)
}
fn scale_alt_44(n: i64) -> ExactRat {
    neg_one_pow_rat(n - 1) * rat(44)
}
fn scale_alt_55(n: i64) -> ExactRat {
    neg_one_pow_rat(n - 1) * rat(55)
}
fn scale_alt_110(n: i64) -> ExactRat {
    neg_one_pow_rat(n - 1) * rat(110)
}
fn scale_alt_220(n: i64) -> ExactRat {
    neg_one_pow_rat(n - 1) * rat(220)
}
/// Renormalization `-1/(-F_{m+2})^n` with `F_{m+2} = F_1 = 1`.
fn scale_norm_unit(n: i64) -> ExactRat {
    neg_one_pow_rat(n + 1)
}
/// Renormalization `-1/(-F_{m+2})^n` with `F_{m+2} = F_6 = 8`.
fn scale_norm_eighth(n: i64) -> ExactRat {
    ExactRat::new(int(-1), int_pow(&int(-8), n))
}

// ------------------------------------------------- printed right sides (F)

fn rhs_fib_5p_t2_mneg2(n: i64) -> ExactRat {
    to_rat(
        &(-f5(n + 5) + 7 * f5(n + 4) + 47 * f5(n + 3) + 31 * f5(n + 2)
            - 9 * f5(n + 1)
            - f5(n)
            - 44 * f(n + 4)
            + int(30)),
    )
}

fn rhs_fib_5p_t1_mneg1(n: i64) -> ExactRat {
    to_rat(
        &(f5(n + 4) - 7 * f5(n + 3) - 25 * f5(n + 2) - 31 * f5(n + 1)
            + 9 * f5(n)
            + f5(n - 1)
            + 22 * l(n + 2)
            - int(30)),
    )
}

fn rhs_fib_5p_t1_m0(n: i64) -> ExactRat {
    to_rat(
        &(-3 * f5(n + 4) + 21 * f5(n + 3) + 185 * f5(n + 2) + 93 * f5(n + 1)
            - 27 * f5(n)
            - 3 * f5(n - 1)
            - 44 * l(n + 4)
            + int(90)),
    )
}

fn rhs_fib_5p_t1_m1(n: i64) -> ExactRat {
    to_rat(
        &(-f5(n + 4) + 7 * f5(n + 3) + 135 * f5(n + 2) + 31 * f5(n + 1)
            - 9 * f5(n)
            - f5(n - 1)
            - 44 * l(n + 3)
            + int(30)),
    )
}

fn rhs_fib_5p_t1_m2(n: i64) -> ExactRat {
    to_rat(
        &(-f5(n + 4) + 7 * f5(n + 3) + 80 * f5(n + 2) + 31 * f5(n + 1)
            - 9 * f5(n)
            - f5(n - 1)
            - 44 * f(n + 3)
            - 33 * f(n + 2)
            + int(30)),
    )
}

fn rhs_fib_5p_alt_t2_mneg2(n: i64) -> ExactRat {
    to_rat(
        &(-f5(n + 5) + 9 * f5(n + 4) + 31 * f5(n + 3) - 47 * f5(n + 2) + 7 * f5(n + 1) + f5(n)
            - 44 * f(n + 1)
            + neg_one_pow(n) * 30),
    )
}

fn rhs_fib_5p_alt_t1_mneg1(n: i64) -> ExactRat {
    to_rat(
        &(f5(n + 4) - 9 * f5(n + 3) - 20 * f5(n + 2) + 47 * f5(n + 1) - 7 * f5(n) - f5(n - 1)
            + 11 * l(n - 1)
            + neg_one_pow(n) * 30),
    )
}

fn rhs_fib_5p_alt_t1_m0(n: i64) -> ExactRat {
    to_rat(
        &(-f5(n + 4) + 9 * f5(n + 3) + 75 * f5(n + 2) - 47 * f5(n + 1) + 7 * f5(n) + f5(n - 1)
            - 44 * l(n + 1)
            - neg_one_pow(n) * 30),
    )
}

fn rhs_fib_5p_alt_t1_m1(n: i64) -> ExactRat {
    to_rat(
        &(3 * f5(n + 4) - 27 * f5(n + 3) - 5 * f5(n + 2) + 141 * f5(n + 1)
            - 21 * f5(n)
            - 3 * f5(n - 1)
            - 44 * l(n)
            + neg_one_pow(n) * 90),
    )
}

fn rhs_fib_5p_alt_t1_m2(n: i64) -> ExactRat {
    to_rat(
        &(f5(n + 4) - 9 * f5(n + 3) + 35 * f5(n + 2) + 47 * f5(n + 1)
            - 7 * f5(n)
            - f5(n - 1)
            - 22 * l(n + 2)
            + neg_one_pow(n) * 30),
    )
}

// ------------------------------------------------- printed right sides (L)

fn rhs_luc_5p_t2_mneg2(n: i64) -> ExactRat {
    to_rat(
        &(-l5(n + 5) + 7 * l5(n + 4) + 47 * l5(n + 3) + 31 * l5(n + 2)
            - 9 * l5(n + 1)
            - l5(n)
            - 1100 * l(n + 4)
            - int(4518)),
    )
}

fn rhs_luc_5p_t1_mneg1(n: i64) -> ExactRat {
    to_rat(
        &(l5(n + 4) - 7 * l5(n + 3) - 25 * l5(n + 2) - 31 * l5(n + 1)
            + 9 * l5(n)
            + l5(n - 1)
            + 2750 * f(n + 2)
            - int(6570)),
    )
}

fn rhs_luc_5p_alt_t2_mneg2(n: i64) -> ExactRat {
    to_rat(
        &(-l5(n + 5) + 9 * l5(n + 4) + 31 * l5(n + 3) - 47 * l5(n + 2) + 7 * l5(n + 1) + l5(n)
            - 1100 * l(n + 1)
            - neg_one_pow(n) * 9474),
    )
}

fn rhs_luc_5p_alt_t1_mneg1(n: i64) -> ExactRat {
    to_rat(
        &(l5(n + 4) - 9 * l5(n + 3) - 20 * l5(n + 2) + 47 * l5(n + 1) - 7 * l5(n) - l5(n - 1)
            + 1375 * f(n - 1)
            - neg_one_pow(n) * 3930),
    )
}

// -------------------------------------------------- fifth-power constants

fn rhs_fib_fifth(n: i64) -> ExactRat {
    to_rat(
        &(-f5(n + 3) + 7 * f5(n + 2) + 47 * f5(n + 1) + 31 * f5(n)
            - 9 * f5(n - 1)
            - f5(n - 2)
            - int(14)),
    )
}

fn rhs_luc_fifth(n: i64) -> ExactRat {
    to_rat(
        &(-l5(n + 3) + 7 * l5(n + 2) + 47 * l5(n + 1) + 31 * l5(n)
            - 9 * l5(n - 1)
            - l5(n - 2)
            - int(1482)),
    )
}

fn rhs_fib_fifth_alt(n: i64) -> ExactRat {
    to_rat(
        &(-f5(n + 3) + 9 * f5(n + 2) + 31 * f5(n + 1) - 47 * f5(n)
            + 7 * f5(n - 1)
            + f5(n - 2)
            + neg_one_pow(n + 1) * 14),
    )
}

/// As printed: the `31 F_{n+1}^5` term is suspected to be a typo for
/// `31 L_{n+1}^5` (it happens to agree at n = 0 because F_1 = L_1 = 1).
fn rhs_luc_fifth_alt_printed(n: i64) -> ExactRat {
    to_rat(
        &(-l5(n + 3) + 9 * l5(n + 2) + 31 * f5(n + 1) - 47 * l5(n)
            + 7 * l5(n - 1)
            + l5(n - 2)
            + neg_one_pow(n) * 74),
    )
}

fn rhs_luc_fifth_alt_corrected(n: i64) -> ExactRat {
    to_rat(
        &(-l5(n + 3) + 9 * l5(n + 2) + 31 * l5(n + 1) - 47 * l5(n)
            + 7 * l5(n - 1)
            + l5(n - 2)
            + neg_one_pow(n) * 74),
    )
}

// ------------------------------------------------------- weighted displays

fn rhs_fib_weighted_2j(n: i64) -> ExactRat {
    to_rat(&(int_pow(&int(2), n + 1) * prod_f(n)))
}

fn rhs_fib_weighted_3j_alt(n: i64) -> ExactRat {
    to_rat(&(neg_one_pow(n + 1) * int_pow(&int(3), n + 1) * prod_f(n)))
}

fn rhs_luc_weighted_2j(n: i64) -> ExactRat {
    to_rat(&(int_pow(&int(2), n + 1) * prod_l(n) - int(336)))
}

fn rhs_luc_weighted_3j_alt(n: i64) -> ExactRat {
    to_rat(&(neg_one_pow(n + 1) * int_pow(&int(3), n + 1) * prod_l(n) + int(504)))
}

// ---------------------------------------------------- progression displays

fn rhs_fib_progression_3(n: i64) -> ExactRat {
    ExactRat::new(f(5 * n + 5), int(5)) - to_rat(&int_pow(&int(3), n))
}

fn rhs_luc_progression_3(n: i64) -> ExactRat {
    ExactRat::new(l(5 * n + 5) - 11 * int_pow(&int(3), n), int(5))
}

// ----------------------------------------------------- reciprocal displays

fn rhs_fib_reciprocal_3j(n: i64) -> ExactRat {
    -ExactRat::new(int_pow(&int(3), n), 5 * prod_f(n + 1)) + ratio(1, 150)
}

fn rhs_luc_reciprocal_3j(n: i64) -> ExactRat {
    -ExactRat::new(int_pow(&int(3), n), 5 * prod_l(n + 1)) + ratio(1, 4620)
}

fn rhs_fib_reciprocal_8j(n: i64) -> ExactRat {
    ExactRat::new(
        neg_one_pow(n + 1),
        5 * int_pow(&int(2), 3 * n) * prod_f(n + 1),
    ) + ratio(1, 150)
}

fn rhs_luc_reciprocal_8j(n: i64) -> ExactRat {
    ExactRat::new(
        neg_one_pow(n + 1),
        5 * int_pow(&int(2), 3 * n) * prod_l(n + 1),
    ) + ratio(1, 4620)
}

fn limit_150() -> ExactRat {
    ratio(1, 150)
}

fn limit_4620() -> ExactRat {
    ratio(1, 4620)
}

// ----------------------------------------------------------------- catalog

#[allow(clippy::too_many_arguments)] // catalog rows, not an API
fn sum_entry(
    id: &'static str,
    family: SumFamilyId,
    params: (i64, i64),
    t: i64,
    m: i64,
    scale: fn(i64) -> ExactRat,
    printed: fn(i64) -> ExactRat,
    formula: &'static str,
) -> FixtureEntry {
    FixtureEntry {
        id,
        family,
        params,
        t,
        m,
        s: 0,
        status: FixtureStatus::Verified,
        kind: FixtureKind::Sum {
            scale,
            printed,
            corrected: None,
        },
        formula,
    }
}

fn limit_entry(
    id: &'static str,
    params: (i64, i64),
    t: i64,
    m: i64,
    expected: fn() -> ExactRat,
    formula: &'static str,
) -> FixtureEntry {
    FixtureEntry {
        id,
        family: SumFamilyId::Reciprocal,
        params,
        t,
        m,
        s: 0,
        status: FixtureStatus::Verified,
        kind: FixtureKind::Limit { expected },
        formula,
    }
}

fn build_catalog() -> Vec<FixtureEntry> {
    use SumFamilyId::*;
    let fib = (0, 1);
    let luc = (2, 1);
    vec![
        // ---- five-term product sums, plain sign
        sum_entry("fib-five-product", FiveProduct, fib, 2, -2, scale_44, rhs_fib_5p_t2_mneg2,
            "44 S F(j)F(j+1)F(j+2)F(j+3)F(j+4) = -F(n+5)^5 +7F(n+4)^5 +47F(n+3)^5 +31F(n+2)^5 -9F(n+1)^5 -F(n)^5 -44F(n+4) +30"),
        sum_entry("fib-five-product-sq1", FiveProduct, fib, 1, -1, scale_110, rhs_fib_5p_t1_mneg1,
            "110 S F(j)^2 F(j+1)F(j+2)F(j+3) = F(n+4)^5 -7F(n+3)^5 -25F(n+2)^5 -31F(n+1)^5 +9F(n)^5 +F(n-1)^5 +22L(n+2) -30"),
        sum_entry("fib-five-product-sq2", FiveProduct, fib, 1, 0, scale_220, rhs_fib_5p_t1_m0,
            "220 S F(j)F(j+1)^2 F(j+2)F(j+3) = -3F(n+4)^5 +21F(n+3)^5 +185F(n+2)^5 +93F(n+1)^5 -27F(n)^5 -3F(n-1)^5 -44L(n+4) +90"),
        sum_entry("fib-five-product-sq3", FiveProduct, fib, 1, 1, scale_220, rhs_fib_5p_t1_m1,
            "220 S F(j)F(j+1)F(j+2)^2 F(j+3) = -F(n+4)^5 +7F(n+3)^5 +135F(n+2)^5 +31F(n+1)^5 -9F(n)^5 -F(n-1)^5 -44L(n+3) +30"),
        sum_entry("fib-five-product-sq4", FiveProduct, fib, 1, 2, scale_55, rhs_fib_5p_t1_m2,
            "55 S F(j)F(j+1)F(j+2)F(j+3)^2 = -F(n+4)^5 +7F(n+3)^5 +80F(n+2)^5 +31F(n+1)^5 -9F(n)^5 -F(n-1)^5 -44F(n+3) -33F(n+2) +30"),
        // ---- five-term product sums, alternating
        sum_entry("fib-five-product-alt", FiveProductAlt, fib, 2, -2, scale_alt_44, rhs_fib_5p_alt_t2_mneg2,
            "(-1)^(n-1) 44 S (-1)^(j-1) F(j)..F(j+4) = -F(n+5)^5 +9F(n+4)^5 +31F(n+3)^5 -47F(n+2)^5 +7F(n+1)^5 +F(n)^5 -44F(n+1) +(-1)^n 30"),
        sum_entry("fib-five-product-alt-sq1", FiveProductAlt, fib, 1, -1, scale_alt_55, rhs_fib_5p_alt_t1_mneg1,
            "(-1)^(n-1) 55 S (-1)^(j-1) F(j)^2 F(j+1)F(j+2)F(j+3) = F(n+4)^5 -9F(n+3)^5 -20F(n+2)^5 +47F(n+1)^5 -7F(n)^5 -F(n-1)^5 +11L(n-1) +(-1)^n 30"),
        sum_entry("fib-five-product-alt-sq2", FiveProductAlt, fib, 1, 0, scale_alt_220, rhs_fib_5p_alt_t1_m0,
            "(-1)^(n-1) 220 S (-1)^(j-1) F(j)F(j+1)^2 F(j+2)F(j+3) = -F(n+4)^5 +9F(n+3)^5 +75F(n+2)^5 -47F(n+1)^5 +7F(n)^5 +F(n-1)^5 -44L(n+1) -(-1)^n 30"),
        sum_entry("fib-five-product-alt-sq3", FiveProductAlt, fib, 1, 1, scale_alt_220, rhs_fib_5p_alt_t1_m1,
            "(-1)^(n-1) 220 S (-1)^(j-1) F(j)F(j+1)F(j+2)^2 F(j+3) = 3F(n+4)^5 -27F(n+3)^5 -5F(n+2)^5 +141F(n+1)^5 -21F(n)^5 -3F(n-1)^5 -44L(n) +(-1)^n 90"),
        sum_entry("fib-five-product-alt-sq4", FiveProductAlt, fib, 1, 2, scale_alt_110, rhs_fib_5p_alt_t1_m2,
            "(-1)^(n-1) 110 S (-1)^(j-1) F(j)F(j+1)F(j+2)F(j+3)^2 = F(n+4)^5 -9F(n+3)^5 +35F(n+2)^5 +47F(n+1)^5 -7F(n)^5 -F(n-1)^5 -22L(n+2) +(-1)^n 30"),
        sum_entry("lucas-five-product", FiveProduct, luc, 2, -2, scale_44, rhs_luc_5p_t2_mneg2,
            "44 S L(j)L(j+1)L(j+2)L(j+3)L(j+4) = -L(n+5)^5 +7L(n+4)^5 +47L(n+3)^5 +31L(n+2)^5 -9L(n+1)^5 -L(n)^5 -1100L(n+4) -4518"),
        sum_entry("lucas-five-product-sq1", FiveProduct, luc, 1, -1, scale_110, rhs_luc_5p_t1_mneg1,
            "110 S L(j)^2 L(j+1)L(j+2)L(j+3) = L(n+4)^5 -7L(n+3)^5 -25L(n+2)^5 -31L(n+1)^5 +9L(n)^5 +L(n-1)^5 +2750F(n+2) -6570"),
        sum_entry("lucas-five-product-alt", FiveProductAlt, luc, 2, -2, scale_alt_44, rhs_luc_5p_alt_t2_mneg2,
            "(-1)^(n-1) 44 S (-1)^(j-1) L(j)..L(j+4) = -L(n+5)^5 +9L(n+4)^5 +31L(n+3)^5 -47L(n+2)^5 +7L(n+1)^5 +L(n)^5 -1100L(n+1) -(-1)^n 9474"),
        sum_entry("lucas-five-product-alt-sq1", FiveProductAlt, luc, 1, -1, scale_alt_55, rhs_luc_5p_alt_t1_mneg1,
            "(-1)^(n-1) 55 S (-1)^(j-1) L(j)^2 L(j+1)L(j+2)L(j+3) = L(n+4)^5 -9L(n+3)^5 -20L(n+2)^5 +47L(n+1)^5 -7L(n)^5 -L(n-1)^5 +1375F(n-1) -(-1)^n 3930"),
        // ---- fifth-power sums
        sum_entry("fib-fifth", Fifth, fib, 0, 0, scale_44, rhs_fib_fifth,
            "44 S F(j)^5 = -F(n+3)^5 +7F(n+2)^5 +47F(n+1)^5 +31F(n)^5 -9F(n-1)^5 -F(n-2)^5 -14"),
        sum_entry("lucas-fifth", Fifth, luc, 0, 0, scale_44, rhs_luc_fifth,
            "44 S L(j)^5 = -L(n+3)^5 +7L(n+2)^5 +47L(n+1)^5 +31L(n)^5 -9L(n-1)^5 -L(n-2)^5 -1482"),
        sum_entry("fib-fifth-alt", FifthAlt, fib, 0, 0, scale_alt_44, rhs_fib_fifth_alt,
            "(-1)^(n-1) 44 S (-1)^(j-1) F(j)^5 = -F(n+3)^5 +9F(n+2)^5 +31F(n+1)^5 -47F(n)^5 +7F(n-1)^5 +F(n-2)^5 +(-1)^(n+1) 14"),
        FixtureEntry {
            id: "lucas-fifth-alt",
            family: FifthAlt,
            params: luc,
            t: 0,
            m: 0,
            s: 0,
            status: FixtureStatus::SuspectedErratum,
            kind: FixtureKind::Sum {
                scale: scale_alt_44,
                printed: rhs_luc_fifth_alt_printed,
                corrected: Some(rhs_luc_fifth_alt_corrected),
            },
            formula: "(-1)^(n-1) 44 S (-1)^(j-1) L(j)^5 = -L(n+3)^5 +9L(n+2)^5 +31F(n+1)^5 -47L(n)^5 +7L(n-1)^5 +L(n-2)^5 +(-1)^n 74  [31F(n+1)^5 suspected typo for 31L(n+1)^5]",
        },
        // ---- geometrically weighted five-term products
        sum_entry("fib-weighted-2j", FiveProductWeighted, fib, 1, 1, scale_5, rhs_fib_weighted_2j,
            "5 S 2^j F(j)F(j+1)F(j+2)^2 F(j+3) = 2^(n+1) F(n)F(n+1)F(n+2)F(n+3)F(n+4)"),
        sum_entry("fib-weighted-3j-alt", FiveProductWeighted, fib, 1, 2, scale_alt_5, rhs_fib_weighted_3j_alt,
            "5 S (-1)^(j-1) 3^j F(j)F(j+1)F(j+2)F(j+3)^2 = (-1)^(n+1) 3^(n+1) F(n)F(n+1)F(n+2)F(n+3)F(n+4)"),
        sum_entry("lucas-weighted-2j", FiveProductWeighted, luc, 1, 1, scale_5, rhs_luc_weighted_2j,
            "5 S 2^j L(j)L(j+1)L(j+2)^2 L(j+3) = 2^(n+1) L(n)L(n+1)L(n+2)L(n+3)L(n+4) - 336"),
        sum_entry("lucas-weighted-3j-alt", FiveProductWeighted, luc, 1, 2, scale_alt_5, rhs_luc_weighted_3j_alt,
            "5 S (-1)^(j-1) 3^j L(j)L(j+1)L(j+2)L(j+3)^2 = (-1)^(n+1) 3^(n+1) L(n)L(n+1)L(n+2)L(n+3)L(n+4) + 504"),
        // ---- index-progression sums
        sum_entry("fib-progression-3", PentadProgression, fib, 0, 1, scale_1, rhs_fib_progression_3,
            "S 3^(n-j) F(5j+1) = F(5n+5)/5 - 3^n"),
        sum_entry("lucas-progression-3", PentadProgression, luc, 0, 1, scale_1, rhs_luc_progression_3,
            "S 3^(n-j) L(5j+1) = L(5n+5)/5 - 11*3^n/5"),
        // ---- reciprocal sums (normalized series)
        sum_entry("fib-reciprocal-3j", Reciprocal, fib, 2, -1, scale_norm_unit, rhs_fib_reciprocal_3j,
            "S 3^(j-1) / (F(j)F(j+2)F(j+3)F(j+4)F(j+5)) = -(1/5) 3^n/(F(n+1)..F(n+5)) + 1/150"),
        sum_entry("lucas-reciprocal-3j", Reciprocal, luc, 2, -1, scale_norm_unit, rhs_luc_reciprocal_3j,
            "S 3^(j-1) / (L(j)L(j+2)L(j+3)L(j+4)L(j+5)) = -(1/5) 3^n/(L(n+1)..L(n+5)) + 1/4620"),
        sum_entry("fib-reciprocal-alt-8j", Reciprocal, fib, 2, 4, scale_norm_eighth, rhs_fib_reciprocal_8j,
            "S (-1)^(j-1) F(j+6) / (2^(3j) F(j)..F(j+5)) = (1/5)(-1)^(n+1)/(2^(3n) F(n+1)..F(n+5)) + 1/150"),
        sum_entry("lucas-reciprocal-alt-8j", Reciprocal, luc, 2, 4, scale_norm_eighth, rhs_luc_reciprocal_8j,
            "S (-1)^(j-1) L(j+6) / (2^(3j) L(j)..L(j+5)) = (1/5)(-1)^(n+1)/(2^(3n) L(n+1)..L(n+5)) + 1/4620"),
        // ---- limits
        limit_entry("fib-limit-3j", fib, 2, -1, limit_150,
            "S_inf 3^(j-1) / (F(j)F(j+2)F(j+3)F(j+4)F(j+5)) = 1/150"),
        limit_entry("lucas-limit-3j", luc, 2, -1, limit_4620,
            "S_inf 3^(j-1) / (L(j)L(j+2)L(j+3)L(j+4)L(j+5)) = 1/4620"),
        limit_entry("fib-limit-alt-8j", fib, 2, 4, limit_150,
            "S_inf (-1)^(j-1) F(j+6) / (2^(3j) F(j)..F(j+5)) = 1/150"),
        limit_entry("lucas-limit-alt-8j", luc, 2, 4, limit_4620,
            "S_inf (-1)^(j-1) L(j+6) / (2^(3j) L(j)..L(j+5)) = 1/4620"),
    ]
}

/// The full fixture catalog.
pub fn catalog() -> &'static [FixtureEntry] {
    static CATALOG: OnceLock<Vec<FixtureEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn find(id: &str) -> Option<&'static FixtureEntry> {
    catalog().iter().find(|e| e.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown fixture id {0:?}; see `list` for the catalog")]
pub struct UnknownFixture(pub String);

/// Per-n verification outcome for one fixture.
pub enum FixtureOutcome {
    Sum {
        /// Printed-form checks for n = 0 ..= [`FIXTURE_N_MAX`].
        printed: Vec<IdentityCheck>,
        corrected: Option<Vec<IdentityCheck>>,
        first_printed_failure: Option<i64>,
    },
    Limit {
        check: IdentityCheck,
        certified: bool,
        n_used: i64,
    },
}

pub struct FixtureReport {
    pub id: &'static str,
    pub status: FixtureStatus,
    pub outcome: FixtureOutcome,
}

impl FixtureReport {
    /// Verified fixtures pass when the printed form holds everywhere;
    /// suspected errata pass when the printed form fails somewhere AND the
    /// corrected form holds everywhere.
    pub fn passed(&self) -> bool {
        match &self.outcome {
            FixtureOutcome::Sum {
                printed,
                corrected,
                first_printed_failure,
            } => {
                let printed_ok = printed.iter().all(|c| c.equal);
                match self.status {
                    FixtureStatus::Verified => printed_ok,
                    FixtureStatus::SuspectedErratum => {
                        first_printed_failure.is_some()
                            && corrected
                                .as_ref()
                                .map(|cs| cs.iter().all(|c| c.equal))
                                .unwrap_or(false)
                    }
                }
            }
            FixtureOutcome::Limit {
                check, certified, ..
            } => check.equal && *certified,
        }
    }
}

/// Re-verifies one fixture against the brute-force oracle for every
/// n in `0 ..= FIXTURE_N_MAX` (or certifies it, for limit entries).
pub fn verify_fixture(id: &str) -> Result<FixtureReport, UnknownFixture> {
    let entry = find(id).ok_or_else(|| UnknownFixture(id.to_string()))?;
    let seq = Gibonacci::new(GibonacciParams::new(entry.params.0, entry.params.1));
    let outcome = match &entry.kind {
        FixtureKind::Sum {
            scale,
            printed,
            corrected,
        } => {
            let run = |rhs: fn(i64) -> ExactRat| -> Vec<IdentityCheck> {
                (0..=FIXTURE_N_MAX)
                    .map(|n| {
                        let oracle = direct_sum(&seq, entry.family, &entry.args(n))
                            .expect("fixture arguments satisfy oracle preconditions");
                        assert!(
                            oracle.zero_hit.is_none(),
                            "fixture {} hit a zero denominator; catalog entry is wrong",
                            entry.id
                        );
                        IdentityCheck::new(scale(n) * oracle.value, rhs(n))
                    })
                    .collect()
            };
            let printed_checks = run(*printed);
            let first_printed_failure = printed_checks
                .iter()
                .enumerate()
                .find(|(_, c)| !c.equal)
                .map(|(n, _)| n as i64);
            FixtureOutcome::Sum {
                printed: printed_checks,
                corrected: corrected.map(run),
                first_printed_failure,
            }
        }
        FixtureKind::Limit { expected } => {
            let out = limit_reciprocal(&seq, entry.t, entry.m, &limit_tolerance(), LIMIT_MAX_N)
                .expect("limit fixture windows contain no zero terms");
            FixtureOutcome::Limit {
                check: IdentityCheck::new(out.limit.clone(), expected()),
                certified: out.certified,
                n_used: out.n_used,
            }
        }
    };
    Ok(FixtureReport {
        id: entry.id,
        status: entry.status,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalog_is_complete_and_unique() {
        let cat = catalog();
        assert!(cat.len() >= 30, "catalog has only {} fixtures", cat.len());
        let ids: HashSet<&str> = cat.iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), cat.len(), "fixture ids must be unique");
        // exactly one suspected erratum, and four limits
        assert_eq!(
            cat.iter()
                .filter(|e| e.status == FixtureStatus::SuspectedErratum)
                .count(),
            1
        );
        assert_eq!(
            cat.iter()
                .filter(|e| matches!(e.kind, FixtureKind::Limit { .. }))
                .count(),
            4
        );
    }

    #[test]
    fn unknown_fixture_id_errors() {
        assert!(verify_fixture("no-such-fixture").is_err());
    }

    #[test]
    fn spot_check_fib_five_product() {
        let report = verify_fixture("fib-five-product").unwrap();
        assert!(report.passed());
        if let FixtureOutcome::Sum { printed, .. } = &report.outcome {
            // n = 1: 44 * 30 = 1320
            assert_eq!(printed[1].lhs, crate::exact::rat(1320));
        } else {
            panic!("expected a sum fixture");
        }
    }

    #[test]
    fn erratum_detected_and_corrected() {
        let report = verify_fixture("lucas-fifth-alt").unwrap();
        assert!(
            report.passed(),
            "erratum fixture must fail printed and pass corrected"
        );
        if let FixtureOutcome::Sum {
            first_printed_failure,
            corrected,
            ..
        } = &report.outcome
        {
            assert_eq!(
                *first_printed_failure,
                Some(1),
                "printed form agrees at n=0 (F_1 = L_1) and breaks at n=1"
            );
            assert!(corrected.as_ref().unwrap().iter().all(|c| c.equal));
        } else {
            panic!("expected a sum fixture");
        }
    }

    #[test]
    fn limit_fixtures_certify() {
        for id in [
            "fib-limit-3j",
            "lucas-limit-3j",
            "fib-limit-alt-8j",
            "lucas-limit-alt-8j",
        ] {
            let report = verify_fixture(id).unwrap();
            assert!(report.passed(), "{id} failed");
            if let FixtureOutcome::Limit { n_used, .. } = report.outcome {
                assert!(n_used <= LIMIT_MAX_N);
            }
        }
    }
}
