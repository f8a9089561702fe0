//! Calendar-free day indexing.
//!
//! The core works with plain day indices (days since 1970-01-01) so that
//! contiguity and lag arithmetic stay trivial; parsing and formatting of
//! ISO-8601 dates belongs to the IO layer.

use core::fmt;
use core::ops::{Add, Sub};

/// A calendar day, counted as days since 1970-01-01.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Day(i64);

impl Day {
    pub const fn new(days_since_epoch: i64) -> Self {
        Day(days_since_epoch)
    }

    pub const fn index(self) -> i64 {
        self.0
    }

    pub const fn next(self) -> Self {
        Day(self.0 + 1)
    }

    pub const fn prev(self) -> Self {
        Day(self.0 - 1)
    }
}

impl Add<i64> for Day {
    type Output = Day;

    fn add(self, rhs: i64) -> Day {
        Day(self.0 + rhs)
    }
}

impl Sub<Day> for Day {
    type Output = i64;

    fn sub(self, rhs: Day) -> i64 {
        self.0 - rhs.0
    }
}

impl fmt::Display for Day {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "day#{}", self.0)
    }
}

/// An inclusive range of days.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DayRange {
    pub start: Day,
    pub end: Day,
}

impl DayRange {
    pub fn new(start: Day, end: Day) -> Self {
        DayRange { start, end }
    }

    pub fn contains(&self, day: Day) -> bool {
        self.start <= day && day <= self.end
    }

    /// Number of days in the range (zero when empty).
    pub fn len(&self) -> i64 {
        (self.end - self.start + 1).max(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Day> + '_ {
        (self.start.index()..=self.end.index()).map(Day::new)
    }
}
