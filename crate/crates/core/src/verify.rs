//! Grid verification: runs every closed form against the brute-force
//! oracle over exhaustive parameter grids and aggregates structured,
//! deterministic reports.
//!
//! Cells are independent and evaluated in parallel, but results are always
//! aggregated in lexicographic grid order (params index, n, t, m, r, s),
//! so reports do not depend on thread count. Cells where a reciprocal
//! denominator vanishes are counted as skipped, never silently dropped.

use crate::exact::ExactRat;
use crate::family::{SumArgs, SumFamilyId};
use crate::oracle;
use crate::seq::{Gibonacci, GibonacciParams};
use crate::sums::{self, LimitOutcome, SumError};
use rayon::prelude::*;
use std::time::{Duration, Instant};

/// An exhaustive verification grid. All ranges are inclusive.
#[derive(Debug, Clone)]
pub struct Grid {
    pub params_pool: Vec<GibonacciParams>,
    pub n_range: (i64, i64),
    pub t_range: (i64, i64),
    pub m_range: (i64, i64),
    pub r_range: (i64, i64),
    pub s_range: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("grid range {name} is empty: {lo}..{hi}")]
    EmptyRange {
        name: &'static str,
        lo: i64,
        hi: i64,
    },
    #[error("grid n range must start at 0 or above, got {0}")]
    NegativeN(i64),
    #[error("grid params pool is empty")]
    EmptyPool,
    #[error("malformed grid spec {0:?}: expected comma-separated key=lo..hi with keys n,t,m,r,s")]
    Malformed(String),
}

impl Grid {
    /// The default verification grid: five sequences covering both lambda
    /// signs and negative terms, with ranges that keep an exhaustive sweep
    /// at desk scale.
    pub fn default_grid() -> Self {
        Grid {
            params_pool: default_params_pool(),
            n_range: (0, 25),
            t_range: (-5, 5),
            m_range: (-8, 8),
            r_range: (2, 6),
            s_range: (-3, 3),
        }
    }

    pub fn validate(&self) -> Result<(), GridError> {
        if self.params_pool.is_empty() {
            return Err(GridError::EmptyPool);
        }
        for (name, (lo, hi)) in [
            ("n", self.n_range),
            ("t", self.t_range),
            ("m", self.m_range),
            ("r", self.r_range),
            ("s", self.s_range),
        ] {
            if lo > hi {
                return Err(GridError::EmptyRange { name, lo, hi });
            }
        }
        if self.n_range.0 < 0 {
            return Err(GridError::NegativeN(self.n_range.0));
        }
        Ok(())
    }

    /// Parses the compact range syntax, e.g. `"n=0..10,t=-2..2"`; omitted
    /// keys keep their defaults, and `"default"` is the default grid.
    pub fn parse(spec: &str) -> Result<Grid, GridError> {
        let mut grid = Grid::default_grid();
        let spec = spec.trim();
        if spec.is_empty() || spec == "default" {
            return Ok(grid);
        }
        for part in spec.split(',') {
            let (key, range) = part
                .split_once('=')
                .ok_or_else(|| GridError::Malformed(spec.to_string()))?;
            let (lo, hi) = range
                .split_once("..")
                .ok_or_else(|| GridError::Malformed(spec.to_string()))?;
            let lo: i64 = lo
                .trim()
                .parse()
                .map_err(|_| GridError::Malformed(spec.to_string()))?;
            let hi: i64 = hi
                .trim()
                .parse()
                .map_err(|_| GridError::Malformed(spec.to_string()))?;
            match key.trim() {
                "n" => grid.n_range = (lo, hi),
                "t" => grid.t_range = (lo, hi),
                "m" => grid.m_range = (lo, hi),
                "r" => grid.r_range = (lo, hi),
                "s" => grid.s_range = (lo, hi),
                _ => return Err(GridError::Malformed(spec.to_string())),
            }
        }
        grid.validate()?;
        Ok(grid)
    }

    /// Compact human-readable summary, embedded into reports.
    pub fn summary(&self, family: SumFamilyId) -> String {
        let mut out = format!(
            "params={};n={}..{};t={}..{}",
            self.params_pool.len(),
            self.n_range.0,
            self.n_range.1,
            self.t_range.0,
            self.t_range.1
        );
        if family.uses_m() {
            out.push_str(&format!(";m={}..{}", self.m_range.0, self.m_range.1));
        }
        if family.uses_r() {
            out.push_str(&format!(";r={}..{}", self.r_range.0, self.r_range.1));
        }
        if family.uses_s() {
            out.push_str(&format!(";s={}..{}", self.s_range.0, self.s_range.1));
        }
        out
    }

    /// All cells for a family in lexicographic order; dimensions the
    /// family does not read are pinned to a single default value.
    pub fn cells(&self, family: SumFamilyId) -> Vec<(usize, SumArgs)> {
        let single = |used: bool, range: (i64, i64), default: i64| -> Vec<i64> {
            if used {
                (range.0..=range.1).collect()
            } else {
                vec![default]
            }
        };
        let ms = single(family.uses_m(), self.m_range, 0);
        let rs = single(family.uses_r(), self.r_range, 2);
        let ss = single(family.uses_s(), self.s_range, 0);
        let mut cells = Vec::new();
        for pi in 0..self.params_pool.len() {
            for n in self.n_range.0..=self.n_range.1 {
                for t in self.t_range.0..=self.t_range.1 {
                    for &m in &ms {
                        for &r in &rs {
                            for &s in &ss {
                                cells.push((pi, SumArgs { n, t, m, r, s }));
                            }
                        }
                    }
                }
            }
        }
        cells
    }
}

/// The five-sequence pool used by the default grid and the test suites.
pub fn default_params_pool() -> Vec<GibonacciParams> {
    vec![
        GibonacciParams::new(0, 1),
        GibonacciParams::new(2, 1),
        GibonacciParams::new(1, 1),
        GibonacciParams::new(3, -4),
        GibonacciParams::new(-2, 5),
    ]
}

/// One grid cell where the closed form and the oracle disagreed.
#[derive(Debug, Clone)]
pub struct CellFailure {
    pub params: GibonacciParams,
    pub args: SumArgs,
    pub closed: ExactRat,
    pub oracle: ExactRat,
}

/// Outcome of one family sweep.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub family: SumFamilyId,
    pub grid: String,
    pub cells_checked: u64,
    pub cells_skipped_zero: u64,
    pub failures: Vec<CellFailure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum CellOutcome {
    Pass,
    Skip,
    Fail(Box<CellFailure>),
}

fn evaluate_cell(
    seq: &Gibonacci,
    family: SumFamilyId,
    args: &SumArgs,
    closed_eval: &(impl Fn(&Gibonacci, SumFamilyId, &SumArgs) -> Result<ExactRat, SumError> + Sync),
) -> CellOutcome {
    let closed = closed_eval(seq, family, args);
    let oracle =
        oracle::direct_sum(seq, family, args).expect("grid cells satisfy oracle preconditions");
    match closed {
        Err(e) if e.is_domain() => CellOutcome::Skip,
        Err(e) => panic!("closed form failed on a valid grid cell {args:?}: {e}"),
        Ok(_) if oracle.zero_hit.is_some() => CellOutcome::Skip,
        Ok(cf) => {
            if cf == oracle.value {
                CellOutcome::Pass
            } else {
                CellOutcome::Fail(Box::new(CellFailure {
                    params: seq.params().clone(),
                    args: *args,
                    closed: cf,
                    oracle: oracle.value,
                }))
            }
        }
    }
}

/// Index range a family sweep can touch, for cache pre-warming. Generous
/// bounds are fine; the cache grows on demand for anything missed.
fn needed_range(family: SumFamilyId, grid: &Grid) -> (i64, i64) {
    let (_, n1) = grid.n_range;
    let (t0, t1) = grid.t_range;
    let (m0, m1) = grid.m_range;
    let (_, r1) = grid.r_range;
    let (s0, s1) = grid.s_range;
    match family {
        SumFamilyId::PentadProgression => (
            5 * (1 + t0) + m0.min(0) + s0 - 5,
            5 * (n1 + t1 + 1) + m1.max(0) + s1 + 5,
        ),
        SumFamilyId::RProduct | SumFamilyId::RReciprocal => {
            ((t0 + m0).min(t0) - 2, (n1 + t1 + r1).max(n1 + t1 + m1) + 2)
        }
        _ => ((t0 + m0).min(t0) - 4, (n1 + t1 + m1.max(0)) + 4),
    }
}

/// Sweeps one family over a grid, comparing closed form against oracle at
/// every cell.
pub fn verify_family(family: SumFamilyId, grid: &Grid) -> VerificationReport {
    verify_family_with(family, grid, sums::closed_form)
}

/// Same sweep with a caller-supplied closed-form evaluator, so the test
/// harness can inject a deliberately perturbed evaluator and watch the
/// machinery catch it.
pub fn verify_family_with(
    family: SumFamilyId,
    grid: &Grid,
    closed_eval: impl Fn(&Gibonacci, SumFamilyId, &SumArgs) -> Result<ExactRat, SumError> + Sync,
) -> VerificationReport {
    grid.validate().expect("grid must be valid");
    let start = Instant::now();
    let seqs: Vec<Gibonacci> = grid
        .params_pool
        .iter()
        .map(|p| Gibonacci::new(p.clone()))
        .collect();
    let (lo, hi) = needed_range(family, grid);
    for seq in &seqs {
        seq.warm(lo, hi);
    }
    let cells = grid.cells(family);
    let outcomes: Vec<CellOutcome> = cells
        .par_iter()
        .map(|(pi, args)| evaluate_cell(&seqs[*pi], family, args, &closed_eval))
        .collect();
    let mut report = VerificationReport {
        family,
        grid: grid.summary(family),
        cells_checked: 0,
        cells_skipped_zero: 0,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for outcome in outcomes {
        match outcome {
            CellOutcome::Pass => report.cells_checked += 1,
            CellOutcome::Skip => report.cells_skipped_zero += 1,
            CellOutcome::Fail(f) => {
                report.cells_checked += 1;
                report.failures.push(*f);
            }
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Lexicographically smallest failing cell for a family, or `None`.
pub fn find_min_counterexample(
    family: SumFamilyId,
    grid: &Grid,
) -> Option<(GibonacciParams, SumArgs)> {
    find_min_counterexample_with(family, grid, sums::closed_form)
}

/// Injectable variant of [`find_min_counterexample`].
pub fn find_min_counterexample_with(
    family: SumFamilyId,
    grid: &Grid,
    closed_eval: impl Fn(&Gibonacci, SumFamilyId, &SumArgs) -> Result<ExactRat, SumError> + Sync,
) -> Option<(GibonacciParams, SumArgs)> {
    grid.validate().expect("grid must be valid");
    let seqs: Vec<Gibonacci> = grid
        .params_pool
        .iter()
        .map(|p| Gibonacci::new(p.clone()))
        .collect();
    // cells() is already in lexicographic order, so the first hit is minimal
    grid.cells(family).into_iter().find_map(|(pi, args)| {
        match evaluate_cell(&seqs[pi], family, &args, &closed_eval) {
            CellOutcome::Fail(_) => Some((grid.params_pool[pi].clone(), args)),
            _ => None,
        }
    })
}

/// A certified (or refused) limit evaluation plus the evidence trail.
#[derive(Debug, Clone)]
pub struct LimitResult {
    pub params: GibonacciParams,
    pub t: i64,
    pub m: i64,
    pub outcome: LimitOutcome,
}

/// Wraps [`sums::limit_reciprocal`], recording the remainder magnitude
/// sequence for reports.
pub fn check_limit(
    params: &GibonacciParams,
    t: i64,
    m: i64,
    tol: &ExactRat,
    max_n: i64,
) -> Result<LimitResult, SumError> {
    let seq = Gibonacci::new(params.clone());
    let outcome = sums::limit_reciprocal(&seq, t, m, tol, max_n)?;
    Ok(LimitResult {
        params: params.clone(),
        t,
        m,
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn small_grid() -> Grid {
        Grid {
            params_pool: default_params_pool(),
            n_range: (0, 6),
            t_range: (-3, 3),
            m_range: (-4, 4),
            r_range: (2, 4),
            s_range: (-1, 1),
        }
    }

    #[test]
    fn fifth_family_passes_small_grid() {
        let report = verify_family(SumFamilyId::Fifth, &small_grid());
        assert!(report.passed());
        assert_eq!(report.cells_skipped_zero, 0);
        assert_eq!(report.cells_checked, 5 * 7 * 7);
    }

    #[test]
    fn reciprocal_grid_counts_skips() {
        let report = verify_family(SumFamilyId::Reciprocal, &small_grid());
        assert!(report.passed());
        assert!(
            report.cells_skipped_zero > 0,
            "Fibonacci windows crossing 0 must be skipped"
        );
        assert!(report.cells_checked > 0);
    }

    #[test]
    fn empty_n_grid_is_all_empty_sums() {
        let mut grid = small_grid();
        grid.n_range = (0, 0);
        let report = verify_family(SumFamilyId::Linear, &grid);
        assert!(report.passed());
        assert_eq!(report.cells_checked, 5 * 7);
    }

    #[test]
    fn no_counterexample_on_sound_closed_form() {
        assert!(find_min_counterexample(SumFamilyId::Fifth, &small_grid()).is_none());
    }

    #[test]
    fn injected_perturbation_is_found_at_smallest_cell() {
        let grid = small_grid();
        // corrupt exactly the cells with n >= 2 and t >= 0
        let found = find_min_counterexample_with(SumFamilyId::Linear, &grid, |seq, fam, args| {
            let mut v = sums::closed_form(seq, fam, args)?;
            if args.n >= 2 && args.t >= 0 {
                v += rat(1);
            }
            Ok(v)
        })
        .expect("perturbation must be detected");
        assert_eq!(found.0, grid.params_pool[0]);
        assert_eq!((found.1.n, found.1.t), (2, 0));

        let report = verify_family_with(SumFamilyId::Linear, &grid, |seq, fam, args| {
            let mut v = sums::closed_form(seq, fam, args)?;
            if args.n >= 2 && args.t >= 0 {
                v += rat(1);
            }
            Ok(v)
        });
        assert!(!report.passed());
        let f = &report.failures[0];
        assert_eq!(f.closed.clone() - f.oracle.clone(), rat(1));
    }

    #[test]
    fn all_skipped_grid_has_no_counterexample() {
        // every Fibonacci window in this grid crosses index 0
        let grid = Grid {
            params_pool: vec![GibonacciParams::fibonacci()],
            n_range: (0, 2),
            t_range: (-1, 1),
            m_range: (0, 0),
            r_range: (2, 2),
            s_range: (0, 0),
        };
        let report = verify_family(SumFamilyId::Reciprocal, &grid);
        assert!(report.passed());
        assert_eq!(report.cells_checked, 0);
        assert_eq!(report.cells_skipped_zero, 3 * 3);
        assert!(find_min_counterexample(SumFamilyId::Reciprocal, &grid).is_none());
    }

    #[test]
    fn grid_parse_round_trip() {
        let g = Grid::parse("n=0..10,t=-2..2,m=1..3").unwrap();
        assert_eq!(g.n_range, (0, 10));
        assert_eq!(g.t_range, (-2, 2));
        assert_eq!(g.m_range, (1, 3));
        assert_eq!(g.r_range, (2, 6)); // default preserved
        assert!(Grid::parse("default").is_ok());
        assert!(matches!(
            Grid::parse("q=1..2"),
            Err(GridError::Malformed(_))
        ));
        assert!(matches!(
            Grid::parse("n=5..1"),
            Err(GridError::EmptyRange { .. })
        ));
        assert!(matches!(
            Grid::parse("n=-1..4"),
            Err(GridError::NegativeN(-1))
        ));
    }

    #[test]
    fn check_limit_records_remainders() {
        let res = check_limit(
            &GibonacciParams::fibonacci(),
            2,
            -1,
            &ratio(1, 10_i64.pow(10)),
            60,
        )
        .unwrap();
        assert!(res.outcome.certified);
        assert_eq!(res.outcome.limit, ratio(1, 150));
        assert_eq!(
            res.outcome.remainder_magnitudes.len() as i64,
            res.outcome.n_used
        );
        // magnitudes decay monotonically once past the first step
        let mags = &res.outcome.remainder_magnitudes;
        for w in mags.windows(2).skip(1) {
            assert!(w[1] < w[0]);
        }
    }
}
