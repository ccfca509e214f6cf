//! Hitchin-component dimensions for orbifold fundamental groups.
//!
//! The general PGL(n;R) count is
//! `-(n^2-1) chi(X) + sum_{d=2}^n (2 sum_i R(d,m_i) + sum_j R(d,n_j))`,
//! with `R(d,m) = floor(d - d/m)`. The closed forms for n = 2 (Teichmuller),
//! n = 3 (convex projective structures) and n = 4 are provided as
//! independent code paths and cross-checked in the tests.
//!
//! For other split adjoint groups the count is driven by the exponents of
//! the Lie algebra, with one family of differentials of degree `e + 1` per
//! exponent `e`. The exponent tables for the classical types and G2 are
//! built in. Note that the per-group correction terms for non-A types are
//! an extrapolation of the A-type pattern, not a quoted formula.

use crate::error::{Error, Result};
use crate::signatures::OrbifoldSignature;

/// `R(d,m) = floor(d - d/m) = floor(d(m-1)/m)`, the pole-order bound at an
/// order-m singular point for degree-d differentials.
pub fn r_value(d: u32, m: u32) -> Result<u64> {
    if d < 2 || m < 2 {
        return Err(Error::Domain(format!("r_value needs d,m >= 2, got ({d},{m})")));
    }
    Ok(u64::from(d) * u64::from(m - 1) / u64::from(m))
}

fn require_hyperbolic(sig: &OrbifoldSignature) -> Result<()> {
    if sig.is_hyperbolic() {
        Ok(())
    } else {
        Err(Error::NonHyperbolic(sig.orbifold_euler_characteristic()))
    }
}

/// Dimension of the PGL(n;R) Hitchin component of a hyperbolic closed
/// 2-orbifold.
pub fn hitchin_dimension_pgl(sig: &OrbifoldSignature, n: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("rank n must be >= 2, got {n}")));
    }
    require_hyperbolic(sig)?;
    let n = i64::from(n);
    let mut dim = -(n * n - 1) * sig.coarse_euler_characteristic();
    for d in 2..=n as u32 {
        for &m in sig.cone_orders() {
            dim += 2 * r_value(d, m)? as i64;
        }
        for &nj in sig.corner_orders() {
            dim += r_value(d, nj)? as i64;
        }
    }
    debug_assert!(dim >= 0, "Hitchin dimension must be non-negative");
    Ok(dim as u64)
}

/// Closed form for n = 3: `-8 chi(X) + (6k - 2 k_2) + (3l - l_2)`, where
/// `k_2` and `l_2` count the order-2 cone and dihedral points.
pub fn choi_goldman_dimension(sig: &OrbifoldSignature) -> Result<u64> {
    require_hyperbolic(sig)?;
    let k = sig.cone_count() as i64;
    let k2 = count_order(sig.cone_orders(), 2);
    let l = sig.corner_count() as i64;
    let l2 = count_order(sig.corner_orders(), 2);
    let dim = -8 * sig.coarse_euler_characteristic() + (6 * k - 2 * k2) + (3 * l - l2);
    debug_assert!(dim >= 0);
    Ok(dim as u64)
}

/// Closed form for n = 4:
/// `-15 chi(X) + (12k - 4 k_2 - 2 k_3) + (6l - 2 l_2 - l_3)`.
pub fn pgl4_dimension(sig: &OrbifoldSignature) -> Result<u64> {
    require_hyperbolic(sig)?;
    let k = sig.cone_count() as i64;
    let k2 = count_order(sig.cone_orders(), 2);
    let k3 = count_order(sig.cone_orders(), 3);
    let l = sig.corner_count() as i64;
    let l2 = count_order(sig.corner_orders(), 2);
    let l3 = count_order(sig.corner_orders(), 3);
    let dim = -15 * sig.coarse_euler_characteristic()
        + (12 * k - 4 * k2 - 2 * k3)
        + (6 * l - 2 * l2 - l3);
    debug_assert!(dim >= 0);
    Ok(dim as u64)
}

fn count_order(orders: &[u32], v: u32) -> i64 {
    orders.iter().filter(|&&m| m == v).count() as i64
}

/// Exponent data of a split real form: the invariant-polynomial degrees of
/// the Lie algebra are `e + 1` over the exponents `e`, and
/// `dim G = sum (2e + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentProfile {
    label: String,
    exponents: Vec<u32>,
    group_dimension: u64,
}

impl ExponentProfile {
    pub fn new(label: impl Into<String>, exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Domain("exponent list must be nonempty".into()));
        }
        if exponents.windows(2).any(|w| w[0] > w[1]) || exponents.iter().any(|&e| e == 0) {
            return Err(Error::Domain(
                "exponents must be positive and ascending".into(),
            ));
        }
        let group_dimension = exponents.iter().map(|&e| 2 * u64::from(e) + 1).sum();
        Ok(ExponentProfile {
            label: label.into(),
            exponents,
            group_dimension,
        })
    }

    /// Type A_{n-1}, i.e. PGL(n;R): exponents 1..n-1, dim n^2 - 1.
    pub fn type_a(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("type A profile needs n >= 2".into()));
        }
        Self::new(format!("A{}", n - 1), (1..n).collect())
    }

    /// Types B_n / C_n (PO(n,n+1), PSp(2n;R)): exponents 1,3,...,2n-1.
    pub fn type_bc(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("type B/C profile needs n >= 2".into()));
        }
        Self::new(format!("BC{n}"), (0..n).map(|i| 2 * i + 1).collect())
    }

    /// Type D_n (PO(n,n)): exponents 1,3,...,2n-3 together with n-1.
    pub fn type_d(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain("type D profile needs n >= 3".into()));
        }
        let mut exps: Vec<u32> = (0..n - 1).map(|i| 2 * i + 1).collect();
        exps.push(n - 1);
        exps.sort_unstable();
        Self::new(format!("D{n}"), exps)
    }

    /// The exceptional group G2: exponents 1 and 5, dim 14.
    pub fn g2() -> Self {
        Self::new("G2", vec![1, 5]).unwrap()
    }

    /// Look up a profile by label, e.g. `A3`, `BC2`, `D4`, `G2`.
    pub fn by_label(label: &str) -> Result<Self> {
        let rank = |s: &str| -> Result<u32> {
            s.parse()
                .map_err(|_| Error::Domain(format!("bad profile label {label:?}")))
        };
        if label == "G2" {
            Ok(Self::g2())
        } else if let Some(r) = label.strip_prefix("BC") {
            Self::type_bc(rank(r)?)
        } else if let Some(r) = label.strip_prefix('A') {
            Self::type_a(rank(r)? + 1)
        } else if let Some(r) = label.strip_prefix('D') {
            Self::type_d(rank(r)?)
        } else {
            Err(Error::Domain(format!(
                "unknown profile label {label:?} (expected A<r>, BC<r>, D<r> or G2)"
            )))
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn group_dimension(&self) -> u64 {
        self.group_dimension
    }
}

/// Hitchin dimension for an arbitrary exponent profile:
/// `-chi(X) dim G + sum_e (2 sum_i R(e+1, m_i) + sum_j R(e+1, n_j))`.
///
/// With the A-type profile this reproduces [`hitchin_dimension_pgl`].
pub fn hitchin_dimension_exponents(
    sig: &OrbifoldSignature,
    profile: &ExponentProfile,
) -> Result<u64> {
    require_hyperbolic(sig)?;
    let mut dim = -sig.coarse_euler_characteristic() * profile.group_dimension() as i64;
    for &e in profile.exponents() {
        let d = e + 1;
        for &m in sig.cone_orders() {
            dim += 2 * r_value(d, m)? as i64;
        }
        for &nj in sig.corner_orders() {
            dim += r_value(d, nj)? as i64;
        }
    }
    debug_assert!(dim >= 0);
    Ok(dim as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signatures::OrbifoldSignature;

    fn sphere(cones: &[u32]) -> OrbifoldSignature {
        OrbifoldSignature::sphere(cones.to_vec()).unwrap()
    }

    fn triangle(corners: &[u32]) -> OrbifoldSignature {
        OrbifoldSignature::polygon(corners.to_vec()).unwrap()
    }

    #[test]
    fn r_value_cases() {
        assert_eq!(r_value(2, 2).unwrap(), 1);
        // frozen from integer division: floor(4*6/7), floor(6*6/7)
        assert_eq!(r_value(4, 7).unwrap(), 3);
        assert_eq!(r_value(6, 7).unwrap(), 5);
        assert!(r_value(1, 5).is_err());
        assert!(r_value(3, 1).is_err());
    }

    #[test]
    fn r_value_bounds() {
        for d in 2..12 {
            let mut prev = 0;
            for m in 2..40 {
                let r = r_value(d, m).unwrap();
                assert!(r >= prev, "R(d,m) non-decreasing in m");
                prev = r;
                assert!(r <= u64::from(d) - 1);
                if m >= d {
                    assert_eq!(r, u64::from(d) - 1);
                }
            }
        }
    }

    #[test]
    fn klein_quartic_pair() {
        assert_eq!(hitchin_dimension_pgl(&triangle(&[2, 3, 7]), 6).unwrap(), 1);
        let genus3 = OrbifoldSignature::orientable_with_cones(3, vec![]).unwrap();
        assert_eq!(hitchin_dimension_pgl(&genus3, 6).unwrap(), 140);
        assert_eq!(hitchin_dimension_pgl(&sphere(&[2, 3, 7]), 6).unwrap(), 2);
    }

    #[test]
    fn rigid_sphere_238_pgl4() {
        assert_eq!(hitchin_dimension_pgl(&sphere(&[2, 3, 8]), 4).unwrap(), 0);
    }

    #[test]
    fn non_hyperbolic_rejected() {
        let flat = sphere(&[2, 3, 6]);
        assert!(hitchin_dimension_pgl(&flat, 3).is_err());
        assert!(choi_goldman_dimension(&flat).is_err());
        assert!(pgl4_dimension(&flat).is_err());
    }

    #[test]
    fn choi_goldman_cases() {
        assert_eq!(choi_goldman_dimension(&sphere(&[2, 3, 7])).unwrap(), 0);
        let genus2 = OrbifoldSignature::orientable_with_cones(2, vec![]).unwrap();
        assert_eq!(choi_goldman_dimension(&genus2).unwrap(), 16);
        assert_eq!(choi_goldman_dimension(&triangle(&[3, 3, 4])).unwrap(), 1);
    }

    #[test]
    fn pgl4_cases() {
        assert_eq!(pgl4_dimension(&sphere(&[2, 3, 7])).unwrap(), 0);
        let genus2 = OrbifoldSignature::orientable_with_cones(2, vec![]).unwrap();
        assert_eq!(pgl4_dimension(&genus2).unwrap(), 30);
        assert_eq!(pgl4_dimension(&triangle(&[2, 3, 7])).unwrap(), 0);
    }

    #[test]
    fn profile_dimensions() {
        assert_eq!(ExponentProfile::type_a(6).unwrap().group_dimension(), 35);
        assert_eq!(ExponentProfile::g2().group_dimension(), 14);
        // dim sp(4;R) = dim so(2,3) = 10
        assert_eq!(ExponentProfile::type_bc(2).unwrap().group_dimension(), 10);
        // dim so(4,4) = 28, exponents 1,3,3,5
        let d4 = ExponentProfile::type_d(4).unwrap();
        assert_eq!(d4.exponents(), &[1, 3, 3, 5]);
        assert_eq!(d4.group_dimension(), 28);
    }

    #[test]
    fn by_label_round_trips() {
        assert_eq!(ExponentProfile::by_label("G2").unwrap(), ExponentProfile::g2());
        assert_eq!(
            ExponentProfile::by_label("A5").unwrap(),
            ExponentProfile::type_a(6).unwrap()
        );
        assert!(ExponentProfile::by_label("E8").is_err());
    }

    #[test]
    fn exponent_formula_matches_pgl_on_type_a() {
        let sigs = [
            sphere(&[2, 3, 7]),
            sphere(&[3, 3, 5]),
            triangle(&[2, 4, 9]),
            OrbifoldSignature::orientable_with_cones(2, vec![2, 5]).unwrap(),
        ];
        for sig in &sigs {
            for n in 2..=8 {
                let profile = ExponentProfile::type_a(n).unwrap();
                assert_eq!(
                    hitchin_dimension_exponents(sig, &profile).unwrap(),
                    hitchin_dimension_pgl(sig, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn g2_cases() {
        let genus2 = OrbifoldSignature::orientable_with_cones(2, vec![]).unwrap();
        assert_eq!(
            hitchin_dimension_exponents(&genus2, &ExponentProfile::g2()).unwrap(),
            28
        );
        assert_eq!(
            hitchin_dimension_exponents(&sphere(&[2, 3, 7]), &ExponentProfile::g2()).unwrap(),
            2
        );
    }
}
