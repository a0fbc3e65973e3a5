//! Gibonacci sequences: the Fibonacci recurrence with arbitrary integer
//! initial values, defined for every integer index.
//!
//! Forward terms follow `G_j = G_{j-1} + G_{j-2}`; negative indices use the
//! same recurrence run backwards, `G_{-j} = G_{-(j-2)} - G_{-(j-1)}`. One
//! code path covers both directions. Terms are memoized in a two-sided
//! table that only ever grows, since verification grids revisit
//! overlapping index windows constantly.

use crate::exact::ExactInt;
use std::collections::VecDeque;
use std::sync::{OnceLock, RwLock};

/// The pair of initial values `(G_0, G_1)` defining a gibonacci sequence.
///
/// Fibonacci is `(0, 1)`, Lucas is `(2, 1)`. The pair `(0, 0)` is rejected:
/// it generates the zero sequence, for which none of the identities say
/// anything.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GibonacciParams {
    a: ExactInt,
    b: ExactInt,
}

impl GibonacciParams {
    /// Panics if both initial values are zero.
    pub fn new(a: impl Into<ExactInt>, b: impl Into<ExactInt>) -> Self {
        let (a, b) = (a.into(), b.into());
        assert!(
            !(a == ExactInt::from(0) && b == ExactInt::from(0)),
            "gibonacci initial values must not both be zero"
        );
        GibonacciParams { a, b }
    }

    pub fn fibonacci() -> Self {
        GibonacciParams::new(0, 1)
    }

    pub fn lucas() -> Self {
        GibonacciParams::new(2, 1)
    }

    pub fn g0(&self) -> &ExactInt {
        &self.a
    }

    pub fn g1(&self) -> &ExactInt {
        &self.b
    }

    /// The characteristic constant `lambda = G_1^2 - G_0*G_2 = b^2 - a(a+b)`.
    ///
    /// It is 1 for Fibonacci and -5 for Lucas, and controls the `(-1)^j`
    /// correction term in every product identity.
    pub fn lambda(&self) -> ExactInt {
        &self.b * &self.b - &self.a * (&self.a + &self.b)
    }
}

impl std::fmt::Display for GibonacciParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Contiguous term table covering `lo ..= lo + terms.len() - 1`.
struct Table {
    lo: i64,
    terms: VecDeque<ExactInt>,
}

impl Table {
    fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    fn get(&self, j: i64) -> Option<&ExactInt> {
        if j < self.lo || j > self.hi() {
            return None;
        }
        self.terms.get((j - self.lo) as usize)
    }

    fn extend_to(&mut self, lo: i64, hi: i64) {
        while self.hi() < hi {
            let len = self.terms.len();
            let next = &self.terms[len - 1] + &self.terms[len - 2];
            self.terms.push_back(next);
        }
        while self.lo > lo {
            // G_{j} = G_{j+2} - G_{j+1}
            let prev = &self.terms[1] - &self.terms[0];
            self.terms.push_front(prev);
            self.lo -= 1;
        }
    }
}

/// A gibonacci sequence with a grow-on-demand, two-sided term cache.
///
/// All methods are logically pure; the cache is synchronized internally, so
/// a single instance can be shared across threads without external locking.
pub struct Gibonacci {
    params: GibonacciParams,
    table: RwLock<Table>,
}

impl Gibonacci {
    pub fn new(params: GibonacciParams) -> Self {
        let terms = VecDeque::from([params.a.clone(), params.b.clone()]);
        Gibonacci {
            params,
            table: RwLock::new(Table { lo: 0, terms }),
        }
    }

    pub fn fibonacci() -> Self {
        Gibonacci::new(GibonacciParams::fibonacci())
    }

    pub fn lucas() -> Self {
        Gibonacci::new(GibonacciParams::lucas())
    }

    pub fn params(&self) -> &GibonacciParams {
        &self.params
    }

    pub fn lambda(&self) -> ExactInt {
        self.params.lambda()
    }

    /// The term `G_j`, for any integer `j`.
    pub fn term(&self, j: i64) -> ExactInt {
        {
            let table = self.table.read().unwrap();
            if let Some(v) = table.get(j) {
                return v.clone();
            }
        }
        let mut table = self.table.write().unwrap();
        let (lo, hi) = (j.min(table.lo), j.max(table.hi()));
        table.extend_to(lo, hi);
        table
            .get(j)
            .expect("freshly extended table covers j")
            .clone()
    }

    /// The contiguous block `G_lo ..= G_hi`. Panics if `lo > hi`.
    pub fn term_block(&self, lo: i64, hi: i64) -> Vec<ExactInt> {
        assert!(lo <= hi, "term_block: lo ({lo}) must not exceed hi ({hi})");
        self.warm(lo, hi);
        let table = self.table.read().unwrap();
        (lo..=hi)
            .map(|j| table.get(j).expect("warmed table covers block").clone())
            .collect()
    }

    /// Pre-extends the cache to cover `[lo, hi]`. Useful before fanning a
    /// grid out over worker threads, so readers never contend on growth.
    pub fn warm(&self, lo: i64, hi: i64) {
        let mut table = self.table.write().unwrap();
        let (lo, hi) = (lo.min(table.lo), hi.max(table.hi()));
        table.extend_to(lo, hi);
    }

    /// Product of `G_{j+o}` over an offset list; the empty list gives 1.
    pub fn window_product(&self, j: i64, offsets: &[i64]) -> ExactInt {
        let mut acc = ExactInt::from(1);
        for o in offsets {
            acc *= self.term(j + o);
        }
        acc
    }
}

static FIBONACCI: OnceLock<Gibonacci> = OnceLock::new();
static LUCAS: OnceLock<Gibonacci> = OnceLock::new();

/// The Fibonacci number `F_j` (negative indices included), from a shared
/// process-wide cache. Every Fibonacci coefficient in the identities is
/// taken from here, never from a separate sign formula.
pub fn fibonacci_number(j: i64) -> ExactInt {
    FIBONACCI.get_or_init(Gibonacci::fibonacci).term(j)
}

/// The Lucas number `L_j`, from a shared process-wide cache.
pub fn lucas_number(j: i64) -> ExactInt {
    LUCAS.get_or_init(Gibonacci::lucas).term(j)
}
