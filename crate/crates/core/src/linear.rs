//! Affine functions of one probability and their solution sets over the open
//! interval (0, 1).
//!
//! Every set produced here lives inside the open unit interval: completely
//! mixed strategies exclude the pure endpoints, so a root at exactly 0 or 1
//! is outside the domain.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The affine function `x -> slope * x + intercept`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearFn {
    pub slope: Rational,
    pub intercept: Rational,
}

impl LinearFn {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        Self { slope, intercept }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    fn minus(&self, other: &LinearFn) -> LinearFn {
        LinearFn::new(
            &self.slope - &other.slope,
            &self.intercept - &other.intercept,
        )
    }
}

impl fmt::Display for LinearFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}", self.slope, self.intercept)
    }
}

/// A non-degenerate interval inside (0, 1). An endpoint at 0 or 1 is always
/// open; other endpoints may be closed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    lo_closed: bool,
    hi: Rational,
    hi_closed: bool,
}

impl Interval {
    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_full(&self) -> bool {
        self.lo.is_zero() && self.hi.is_one()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed {
            *x >= self.lo
        } else {
            *x > self.lo
        };
        let below = if self.hi_closed {
            *x <= self.hi
        } else {
            *x < self.hi
        };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Solution set of a one-unknown system, restricted to the open interval
/// (0, 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolutionSet {
    Empty,
    /// A single value strictly inside (0, 1).
    Point(Rational),
    Interval(Interval),
}

impl SolutionSet {
    /// The whole open domain (0, 1).
    pub fn full() -> Self {
        SolutionSet::Interval(Interval {
            lo: Rational::zero(),
            lo_closed: false,
            hi: Rational::one(),
            hi_closed: false,
        })
    }

    /// Builds the set `{x in (0,1) : lo <=/< x <=/< hi}` and normalizes it:
    /// clamps to the domain, collapses a one-value interval to a point and
    /// anything smaller to `Empty`.
    pub fn bounded(lo: Rational, lo_closed: bool, hi: Rational, hi_closed: bool) -> Self {
        let (lo, lo_closed) = if lo <= Rational::zero() {
            (Rational::zero(), false)
        } else {
            (lo, lo_closed)
        };
        let (hi, hi_closed) = if hi >= Rational::one() {
            (Rational::one(), false)
        } else {
            (hi, hi_closed)
        };
        if lo > hi {
            return SolutionSet::Empty;
        }
        if lo == hi {
            // a clamped endpoint is open, so 0 and 1 never survive as points
            return if lo_closed && hi_closed {
                SolutionSet::Point(lo)
            } else {
                SolutionSet::Empty
            };
        }
        SolutionSet::Interval(Interval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        })
    }

    /// `{x}` if `x` lies strictly inside (0, 1), otherwise `Empty`.
    pub fn point(x: Rational) -> Self {
        if x > Rational::zero() && x < Rational::one() {
            SolutionSet::Point(x)
        } else {
            SolutionSet::Empty
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SolutionSet::Empty)
    }

    pub fn is_full(&self) -> bool {
        matches!(self, SolutionSet::Interval(iv) if iv.is_full())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            SolutionSet::Empty => false,
            SolutionSet::Point(v) => v == x,
            SolutionSet::Interval(iv) => iv.contains(x),
        }
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionSet::Empty => f.write_str("{}"),
            SolutionSet::Point(v) => write!(f, "{{{v}}}"),
            SolutionSet::Interval(iv) => iv.fmt(f),
        }
    }
}

/// Values `x` in (0, 1) at which every line takes the same value.
///
/// Equalities between affine functions have no solutions, one solution, or
/// hold identically, so the result is never a proper sub-interval.
pub fn solve_all_equal(lines: &[LinearFn]) -> Result<SolutionSet> {
    let (first, rest) = lines.split_first().ok_or(Error::EmptySystem)?;
    let mut root: Option<Rational> = None;
    for line in rest {
        let diff = line.minus(first);
        if diff.slope.is_zero() {
            if !diff.intercept.is_zero() {
                return Ok(SolutionSet::Empty);
            }
            continue;
        }
        let x = -diff.intercept / diff.slope;
        match &root {
            Some(r) if *r != x => return Ok(SolutionSet::Empty),
            Some(_) => {}
            None => root = Some(x),
        }
    }
    Ok(match root {
        Some(x) => SolutionSet::point(x),
        None => SolutionSet::full(),
    })
}

/// `{x in (0,1) : g(x) >= f(x)}`.
pub fn solve_ge(g: &LinearFn, f: &LinearFn) -> SolutionSet {
    // g - f = a x + b >= 0
    let diff = g.minus(f);
    if diff.slope.is_zero() {
        return if diff.intercept.is_negative() {
            SolutionSet::Empty
        } else {
            SolutionSet::full()
        };
    }
    let threshold = -&diff.intercept / &diff.slope;
    if diff.slope.is_positive() {
        SolutionSet::bounded(threshold, true, Rational::one(), false)
    } else {
        SolutionSet::bounded(Rational::zero(), false, threshold, true)
    }
}

/// Exact intersection of two solution sets.
pub fn intersect(a: &SolutionSet, b: &SolutionSet) -> SolutionSet {
    match (a, b) {
        (SolutionSet::Empty, _) | (_, SolutionSet::Empty) => SolutionSet::Empty,
        (SolutionSet::Point(v), other) | (other, SolutionSet::Point(v)) => {
            if other.contains(v) {
                SolutionSet::Point(v.clone())
            } else {
                SolutionSet::Empty
            }
        }
        (SolutionSet::Interval(x), SolutionSet::Interval(y)) => {
            let (lo, lo_closed) = match x.lo.cmp(&y.lo) {
                std::cmp::Ordering::Greater => (x.lo.clone(), x.lo_closed),
                std::cmp::Ordering::Less => (y.lo.clone(), y.lo_closed),
                std::cmp::Ordering::Equal => (x.lo.clone(), x.lo_closed && y.lo_closed),
            };
            let (hi, hi_closed) = match x.hi.cmp(&y.hi) {
                std::cmp::Ordering::Less => (x.hi.clone(), x.hi_closed),
                std::cmp::Ordering::Greater => (y.hi.clone(), y.hi_closed),
                std::cmp::Ordering::Equal => (x.hi.clone(), x.hi_closed && y.hi_closed),
            };
            SolutionSet::bounded(lo, lo_closed, hi, hi_closed)
        }
    }
}
