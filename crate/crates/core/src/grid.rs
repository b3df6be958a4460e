use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GridError {
    #[error("a frequency grid needs at least one point")]
    Empty,
    #[error("grid point {index} = {value} must be finite and > 0")]
    NonPositive { index: usize, value: f64 },
    #[error("grid points must be strictly increasing (index {index})")]
    NotIncreasing { index: usize },
    #[error("grid needs min < max and count >= 2 (got {min}:{max}:{count})")]
    BadSpan { min: f64, max: f64, count: usize },
}

/// Strictly increasing, strictly positive sample of angular frequencies.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct FrequencyGrid {
    points: Vec<f64>,
}

impl FrequencyGrid {
    pub fn new(points: Vec<f64>) -> Result<Self, GridError> {
        if points.is_empty() {
            return Err(GridError::Empty);
        }
        for (index, &value) in points.iter().enumerate() {
            if !(value.is_finite() && value > 0.0) {
                return Err(GridError::NonPositive { index, value });
            }
            if index > 0 && value <= points[index - 1] {
                return Err(GridError::NotIncreasing { index });
            }
        }
        Ok(Self { points })
    }

    /// `count` evenly spaced points from `min` to `max` inclusive.
    pub fn linear(min: f64, max: f64, count: usize) -> Result<Self, GridError> {
        check_span(min, max, count)?;
        let step = (max - min) / (count - 1) as f64;
        let mut points: Vec<f64> = (0..count).map(|i| min + step * i as f64).collect();
        points[count - 1] = max;
        Self::new(points)
    }

    /// `count` logarithmically spaced points from `min` to `max` inclusive.
    pub fn logarithmic(min: f64, max: f64, count: usize) -> Result<Self, GridError> {
        check_span(min, max, count)?;
        if min <= 0.0 {
            return Err(GridError::NonPositive { index: 0, value: min });
        }
        let (lo, hi) = (min.ln(), max.ln());
        let step = (hi - lo) / (count - 1) as f64;
        let mut points: Vec<f64> = (0..count).map(|i| (lo + step * i as f64).exp()).collect();
        points[0] = min;
        points[count - 1] = max;
        Self::new(points)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.points[0]
    }

    pub fn max(&self) -> f64 {
        self.points[self.points.len() - 1]
    }
}

fn check_span(min: f64, max: f64, count: usize) -> Result<(), GridError> {
    if !(min.is_finite() && max.is_finite() && min < max && count >= 2) {
        return Err(GridError::BadSpan { min, max, count });
    }
    Ok(())
}
