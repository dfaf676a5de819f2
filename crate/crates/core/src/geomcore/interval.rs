use std::fmt;

use crate::error::{Error, Result};

/// A real interval of arc-length values; endpoints may be open, closed or infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub const REAL: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
        lo_closed: false,
        hi_closed: false,
    };

    pub fn closed(lo: f64, hi: f64) -> Result<Self> {
        Self::with_ends(lo, hi, true, true)
    }

    pub fn open(lo: f64, hi: f64) -> Result<Self> {
        Self::with_ends(lo, hi, false, false)
    }

    pub fn with_ends(lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() {
            return Err(Error::NonFinite("interval endpoint"));
        }
        let iv = Interval {
            lo,
            hi,
            lo_closed: lo_closed && lo.is_finite(),
            hi_closed: hi_closed && hi.is_finite(),
        };
        if iv.is_empty() {
            return Err(Error::EmptyDomain);
        }
        Ok(iv)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn contains(&self, s: f64) -> bool {
        let above = if self.lo_closed { s >= self.lo } else { s > self.lo };
        let below = if self.hi_closed { s <= self.hi } else { s < self.hi };
        above && below
    }

    /// Whether `[a, b]` (in either order) lies inside the interval.
    pub fn contains_segment(&self, a: f64, b: f64) -> bool {
        self.contains(a) && self.contains(b)
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn intersect(&self, other: &Interval) -> Result<Interval> {
        let (lo, lo_closed) = if self.lo > other.lo {
            (self.lo, self.lo_closed)
        } else if other.lo > self.lo {
            (other.lo, other.lo_closed)
        } else {
            (self.lo, self.lo_closed && other.lo_closed)
        };
        let (hi, hi_closed) = if self.hi < other.hi {
            (self.hi, self.hi_closed)
        } else if other.hi < self.hi {
            (other.hi, other.hi_closed)
        } else {
            (self.hi, self.hi_closed && other.hi_closed)
        };
        let iv = Interval {
            lo,
            hi,
            lo_closed,
            hi_closed,
        };
        if iv.is_empty() {
            Err(Error::DomainMismatch)
        } else {
            Ok(iv)
        }
    }

    /// Reference point for antiderivatives: `0` when it belongs to the
    /// interval, otherwise the closest point of the interval to `0`
    /// (the midpoint when that endpoint is open or infinite).
    pub fn anchor(&self) -> f64 {
        if self.contains(0.0) {
            return 0.0;
        }
        let end = if self.lo >= 0.0 { (self.lo, self.lo_closed) } else { (self.hi, self.hi_closed) };
        if end.1 {
            end.0
        } else if self.lo.is_finite() && self.hi.is_finite() {
            0.5 * (self.lo + self.hi)
        } else if self.lo.is_finite() {
            self.lo + 1.0
        } else {
            self.hi - 1.0
        }
    }

    pub fn check(&self, s: f64) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::OutsideDomain { s, domain: *self })
        }
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
