//! Closed real intervals with finite endpoints.

use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo >= hi {
            return Err(Error::BadInterval {
                lo: lo.to_f64().unwrap_or(f64::NAN),
                hi: hi.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn of(lo: f64, hi: f64) -> Self {
        Self::new(T::of(lo), T::of(hi)).expect("valid literal interval")
    }

    pub fn contains(&self, t: T) -> bool {
        t >= self.lo && t <= self.hi
    }

    /// Containment with a guard band proportional to the endpoint magnitudes.
    pub fn contains_guarded(&self, t: T, guard: T) -> bool {
        let scale = crate::scalar::tolerance_scale(&[self.lo.abs(), self.hi.abs()]);
        let g = guard * scale;
        t >= self.lo - g && t <= self.hi + g
    }

    pub fn clamp(&self, t: T) -> T {
        if t < self.lo {
            self.lo
        } else if t > self.hi {
            self.hi
        } else {
            t
        }
    }

    pub fn midpoint(&self) -> T {
        (self.lo + self.hi) * T::half()
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    /// Intersection, or `None` when empty or degenerate.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = if self.lo > other.lo {
            self.lo
        } else {
            other.lo
        };
        let hi = if self.hi < other.hi {
            self.hi
        } else {
            other.hi
        };
        if lo < hi {
            Some(Self { lo, hi })
        } else {
            None
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.lo >= other.lo && self.hi <= other.hi
    }

    /// Uniform grid with `points >= 2` nodes including both endpoints.
    pub fn grid(&self, points: usize) -> Vec<T> {
        let n = points.max(2);
        let h = self.width() / T::of_usize(n - 1);
        (0..n)
            .map(|i| {
                if i == n - 1 {
                    self.hi
                } else {
                    self.lo + T::of_usize(i) * h
                }
            })
            .collect()
    }
}
