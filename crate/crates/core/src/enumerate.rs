//! Deterministic enumeration of canonical signatures within bounds, and
//! the rigidity sweep (Hitchin dimension zero at a given rank).
//!
//! Order of emission: orientable before non-orientable, then genus, then
//! mirror-circle count, then cone-point count, then corner count, then
//! the order vectors lexicographically. Two runs with the same bounds
//! produce identical sequences.

use crate::error::{Error, Result};
use crate::hitchin::hitchin_dimension_pgl;
use crate::signatures::OrbifoldSignature;

/// Finite search bounds for signature enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_genus: u32,
    pub max_cone_points: u32,
    pub max_corners: u32,
    pub max_order: u32,
    pub max_mirror_circles: u32,
    pub orientable_only: bool,
}

impl Bounds {
    /// Orientable closed surfaces with cone points only.
    pub fn orientable_closed(max_genus: u32, max_cone_points: u32, max_order: u32) -> Self {
        Bounds {
            max_genus,
            max_cone_points,
            max_corners: 0,
            max_order,
            max_mirror_circles: 0,
            orientable_only: true,
        }
    }

    fn check(&self) -> Result<()> {
        if (self.max_cone_points > 0 || self.max_corners > 0) && self.max_order < 2 {
            return Err(Error::Domain(
                "max_order must be >= 2 when singular points are allowed".into(),
            ));
        }
        Ok(())
    }
}

/// All ascending multisets of values in [2, max_order] of the given size.
fn multisets(size: u32, max_order: u32) -> Vec<Vec<u32>> {
    fn rec(size: u32, min: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if size == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in min..=max {
            prefix.push(v);
            rec(size - 1, v, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, 2, max_order, &mut Vec::new(), &mut out);
    out
}

/// Every valid canonical signature within bounds, exactly once, in the
/// documented deterministic order.
pub fn enumerate_signatures(bounds: &Bounds) -> Result<Vec<OrbifoldSignature>> {
    bounds.check()?;
    let mut out = Vec::new();
    let orientabilities: &[bool] = if bounds.orientable_only {
        &[true]
    } else {
        &[true, false]
    };
    for &orientable in orientabilities {
        let min_genus = if orientable { 0 } else { 1 };
        if min_genus > bounds.max_genus {
            continue;
        }
        for genus in min_genus..=bounds.max_genus {
            for mirrors in 0..=bounds.max_mirror_circles {
                for k in 0..=bounds.max_cone_points {
                    // corners need a mirror circle
                    let corner_max = if mirrors == 0 { 0 } else { bounds.max_corners };
                    for l in 0..=corner_max {
                        for cones in multisets(k, bounds.max_order) {
                            for corners in multisets(l, bounds.max_order) {
                                let sig = OrbifoldSignature::new(
                                    orientable,
                                    genus,
                                    mirrors,
                                    cones.clone(),
                                    corners,
                                )
                                .expect("enumerated data satisfies the invariants");
                                out.push(sig);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The hyperbolic signatures within bounds.
pub fn enumerate_hyperbolic(bounds: &Bounds) -> Result<Vec<OrbifoldSignature>> {
    Ok(enumerate_signatures(bounds)?
        .into_iter()
        .filter(OrbifoldSignature::is_hyperbolic)
        .collect())
}

/// All hyperbolic signatures within bounds whose PGL(n;R) Hitchin
/// component is a point.
pub fn enumerate_rigid(n: u32, bounds: &Bounds) -> Result<Vec<OrbifoldSignature>> {
    if n < 2 {
        return Err(Error::Domain(format!("rank n must be >= 2, got {n}")));
    }
    let mut out = Vec::new();
    for sig in enumerate_hyperbolic(bounds)? {
        if hitchin_dimension_pgl(&sig, n)? == 0 {
            out.push(sig);
        }
    }
    Ok(out)
}
