//! Empirical VC-density: ordinary least squares of `ln(count)` on `ln(|B|)`.

use num_traits::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sets::SetFamily;
use crate::types::{trace_table, type_count};

/// Minimum number of points accepted by [`density_fit`].
pub const MIN_POINTS: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityEstimate<F> {
    pub points: Vec<(usize, usize)>,
    pub slope: F,
    pub intercept: F,
    pub r_squared: F,
}

fn cast<F: Float>(x: usize) -> F {
    F::from(x).expect("count fits the float type")
}

pub fn density_fit<F: Float>(points: &[(usize, usize)]) -> Result<DensityEstimate<F>> {
    if points.len() < MIN_POINTS {
        return Err(Error::TooFewPoints {
            min: MIN_POINTS,
            got: points.len(),
        });
    }
    for &(size, count) in points {
        if size == 0 || count == 0 {
            return Err(Error::NonPositivePoint { size, count });
        }
    }
    if points.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(Error::NonIncreasingSizes);
    }
    let n: F = cast(points.len());
    let xs: Vec<F> = points.iter().map(|&(s, _)| cast::<F>(s).ln()).collect();
    let ys: Vec<F> = points.iter().map(|&(_, c)| cast::<F>(c).ln()).collect();
    let mean_x = xs.iter().fold(F::zero(), |a, &x| a + x) / n;
    let mean_y = ys.iter().fold(F::zero(), |a, &y| a + y) / n;
    let (mut sxx, mut sxy, mut syy) = (F::zero(), F::zero(), F::zero());
    for (&x, &y) in xs.iter().zip(&ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx = sxx + dx * dx;
        sxy = sxy + dx * dy;
        syy = syy + dy * dy;
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    // constant counts are fit exactly by a flat line
    let r_squared = if syy == F::zero() {
        F::one()
    } else {
        let ss_res = xs
            .iter()
            .zip(&ys)
            .map(|(&x, &y)| {
                let r = y - (slope * x + intercept);
                r * r
            })
            .fold(F::zero(), |a, r| a + r);
        F::one() - ss_res / syy
    };
    Ok(DensityEstimate {
        points: points.to_vec(),
        slope,
        intercept,
        r_squared,
    })
}

/// `(|B|, type count)` for each prefix of the family of the scheduled size.
pub fn density_points(family: &SetFamily, schedule: &[usize]) -> Result<Vec<(usize, usize)>> {
    schedule
        .iter()
        .map(|&s| {
            if s > family.len() {
                return Err(Error::InvalidIndex {
                    index: s,
                    len: family.len(),
                });
            }
            Ok((s, type_count(&trace_table(&family.prefix(s)))))
        })
        .collect()
}
