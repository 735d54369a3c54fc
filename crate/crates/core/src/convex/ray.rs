use crate::error::{Error, Result};
use crate::sets::{LinearOrder, SubsetMask};

/// Number of adjacent pairs along the order where membership in `mask` flips.
pub fn alternation_count(order: &LinearOrder, mask: &SubsetMask) -> Result<usize> {
    order.check_width(mask)?;
    let seq: Vec<bool> = order.read(mask).collect();
    Ok(seq.windows(2).filter(|w| w[0] != w[1]).count())
}

/// The `n`th leftward ray of `mask`: elements `x` not reachable by a chain
/// `w₀ < … < w_n = x` that flips membership at every step. Equivalently, the
/// elements whose order-prefix (ending at `x`) has fewer than `n` flips.
pub fn leftward_ray(order: &LinearOrder, mask: &SubsetMask, n: usize) -> Result<SubsetMask> {
    if n == 0 {
        return Err(Error::ZeroRayIndex);
    }
    order.check_width(mask)?;
    let mut out = SubsetMask::empty(mask.width());
    let mut flips = 0;
    let mut prev = None;
    for &x in order.permutation() {
        let inside = mask.contains(x);
        if prev.is_some_and(|p| p != inside) {
            flips += 1;
        }
        prev = Some(inside);
        if flips >= n {
            break;
        }
        out.insert(x);
    }
    Ok(out)
}
