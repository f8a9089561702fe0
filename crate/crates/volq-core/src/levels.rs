//! The quantile-level grid.
//!
//! All probabilistic forecasts in this crate target the 99 levels
//! {0.01, 0.02, ..., 0.99}.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Number of levels in the standard grid.
pub const STANDARD_COUNT: usize = 99;

/// The standard grid {0.01, ..., 0.99}.
pub fn standard() -> Vec<f64> {
    (1..=STANDARD_COUNT).map(|k| k as f64 / 100.0).collect()
}

/// Index of the grid level closest to `q`, if one lies within `1e-9`.
pub fn index_of(levels: &[f64], q: f64) -> Option<usize> {
    levels.iter().position(|&l| (l - q).abs() <= 1e-9)
}

/// Checks that levels are finite, strictly increasing, and inside (0,1).
pub fn validate(levels: &[f64]) -> Result<()> {
    if levels.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut prev = 0.0;
    for &q in levels {
        if !q.is_finite() || q <= 0.0 || q >= 1.0 {
            return Err(Error::InvalidLevel(q));
        }
        if q <= prev {
            return Err(Error::InvalidLevel(q));
        }
        prev = q;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_grid_shape() {
        let grid = standard();
        assert_eq!(grid.len(), 99);
        assert_eq!(grid[0], 0.01);
        assert_eq!(grid[49], 0.5);
        assert_eq!(grid[98], 0.99);
        validate(&grid).unwrap();
    }

    #[test]
    fn rejects_out_of_range_and_unsorted() {
        assert!(validate(&[0.0, 0.5]).is_err());
        assert!(validate(&[0.5, 0.5]).is_err());
        assert!(validate(&[0.5, 0.2]).is_err());
        assert!(validate(&[]).is_err());
    }

    #[test]
    fn index_lookup() {
        let grid = standard();
        assert_eq!(index_of(&grid, 0.05), Some(4));
        assert_eq!(index_of(&grid, 0.95), Some(94));
        assert_eq!(index_of(&grid, 0.505), None);
    }
}
