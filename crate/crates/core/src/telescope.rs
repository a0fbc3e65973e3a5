//! Generic telescoping summation lemmas over arbitrary caller-supplied
//! sequences, independent of any gibonacci structure.
//!
//! A sequence is any deterministic map from integer index to exact
//! rational; reciprocal sequences like `j -> 1/G_{j+t}` are first-class.
//! Each operation evaluates the left side literally term by term and the
//! right side from the boundary formula, returning both.
//!
//! Weight powers use the 0^0 = 1 convention at the boundaries `j = 1` and
//! `j = n`, which makes zero weights match the direct sum.

use crate::exact::{neg_one_pow_rat, rat_pow, ExactRat};
use crate::identity::IdentityCheck;
use num_traits::{One, Zero};

/// `sum_{j=1}^n (f(j+1) - f(j))  ==  f(n+1) - f(1)`.
pub fn telescope(f: impl Fn(i64) -> ExactRat, n: i64) -> IdentityCheck {
    assert!(n >= 0, "telescope: n must be nonnegative");
    let mut lhs = ExactRat::zero();
    for j in 1..=n {
        lhs += f(j + 1) - f(j);
    }
    let rhs = if n == 0 {
        ExactRat::zero()
    } else {
        f(n + 1) - f(1)
    };
    IdentityCheck::new(lhs, rhs)
}

/// `sum_{j=1}^n (-1)^{j-1} (f(j+1) + f(j))  ==  (-1)^{n+1} f(n+1) + f(1)`.
pub fn telescope_alt(f: impl Fn(i64) -> ExactRat, n: i64) -> IdentityCheck {
    assert!(n >= 0, "telescope_alt: n must be nonnegative");
    let mut lhs = ExactRat::zero();
    for j in 1..=n {
        lhs += neg_one_pow_rat(j - 1) * (f(j + 1) + f(j));
    }
    let rhs = if n == 0 {
        ExactRat::zero()
    } else {
        neg_one_pow_rat(n + 1) * f(n + 1) + f(1)
    };
    IdentityCheck::new(lhs, rhs)
}

/// `sum_{j=1}^n d^{n-j} c^{j-1} (c f(j+1) - d f(j))  ==  c^n f(n+1) - d^n f(1)`.
pub fn telescope_weighted(
    f: impl Fn(i64) -> ExactRat,
    n: i64,
    c: &ExactRat,
    d: &ExactRat,
) -> IdentityCheck {
    assert!(n >= 0, "telescope_weighted: n must be nonnegative");
    let mut lhs = ExactRat::zero();
    for j in 1..=n {
        lhs += rat_pow(d, n - j) * rat_pow(c, j - 1) * (c * f(j + 1) - d * f(j));
    }
    let rhs = if n == 0 {
        ExactRat::zero()
    } else {
        rat_pow(c, n) * f(n + 1) - rat_pow(d, n) * f(1)
    };
    IdentityCheck::new(lhs, rhs)
}

/// Product form of the weighted telescope, for window length `r >= 1`:
///
/// `sum_{j=1}^n d^{n-j} c^{j-1} g(j+1)..g(j+r-1) (c g(j+r) - d g(j))
///   ==  c^n g(n+1)..g(n+r) - d^n g(1)..g(r)`.
///
/// The interior product is empty (= 1) when `r == 1`, which reduces this
/// to [`telescope_weighted`].
pub fn telescope_product(
    g: impl Fn(i64) -> ExactRat,
    n: i64,
    r: i64,
    c: &ExactRat,
    d: &ExactRat,
) -> IdentityCheck {
    assert!(n >= 0, "telescope_product: n must be nonnegative");
    assert!(
        r >= 1,
        "telescope_product: window length r must be at least 1"
    );
    let window = |start: i64, len: i64| -> ExactRat {
        let mut acc = ExactRat::one();
        for i in 0..len {
            acc *= g(start + i);
        }
        acc
    };
    let mut lhs = ExactRat::zero();
    for j in 1..=n {
        let interior = window(j + 1, r - 1);
        lhs += rat_pow(d, n - j) * rat_pow(c, j - 1) * interior * (c * g(j + r) - d * g(j));
    }
    let rhs = if n == 0 {
        ExactRat::zero()
    } else {
        rat_pow(c, n) * window(n + 1, r) - rat_pow(d, n) * window(1, r)
    };
    IdentityCheck::new(lhs, rhs)
}
