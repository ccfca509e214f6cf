//! Orbifold Riemann-Roch and Hitchin-base dimensions.
//!
//! The sheaf Euler characteristic of an orbifold line bundle is
//! `chi(O) + deg L - sum of ages`; the rational parts cancel by
//! construction and a non-integral result is reported as an error rather
//! than rounded. An independent oracle computes the same quantity by
//! classical Riemann-Roch on the coarse decomposition, with no age
//! arithmetic at all.

use crate::error::{Error, Result};
use crate::hitchin::r_value;
use crate::picard::{OrbiCurve, OrbiLineBundle, RealOrbiCurve, RealOrbiLineBundle};
use crate::rational::Rational;

/// `chi(X;L) = chi(X;O) + deg L - sum age`, with `chi(X;O) = 1 - g`.
pub fn euler_char_sheaf(curve: &OrbiCurve, bundle: &OrbiLineBundle) -> Result<i64> {
    let chi = Rational::from_int(1 - i64::from(curve.genus())) + bundle.degree(curve)?
        - bundle.total_age(curve)?;
    chi.to_integer().ok_or(Error::NonIntegralChi(chi))
}

/// Real variant: `chi(X;O) + deg L - 2 sum cone ages - sum dihedral ages`,
/// with the genus taken from the complex double cover's coarse surface.
pub fn euler_char_sheaf_real(curve: &RealOrbiCurve, bundle: &RealOrbiLineBundle) -> Result<i64> {
    let mut chi = Rational::from_int(1 - i64::from(curve.double_cover_genus()))
        + bundle.degree(curve);
    for (&a, &m) in bundle.cone_isotropies().iter().zip(curve.cone_orders()) {
        chi = chi - Rational::new(2 * i64::from(a), i64::from(m));
    }
    for (&a, &m) in bundle
        .dihedral_isotropies()
        .iter()
        .zip(curve.dihedral_orders())
    {
        chi = chi - Rational::new(i64::from(a), i64::from(m));
    }
    chi.to_integer().ok_or(Error::NonIntegralChi(chi))
}

/// `dim H0(X;K^d)` for `d >= 2` on a hyperbolic curve, where `H1` vanishes
/// by the degree argument: equals `(2d-1)(g-1) + sum R(d,m_i)`.
pub fn h0_canonical_power(curve: &OrbiCurve, d: u32) -> Result<u64> {
    if d < 2 {
        return Err(Error::Domain(format!("H1 vanishing needs d >= 2, got {d}")));
    }
    if !curve.is_hyperbolic() {
        return Err(Error::NonHyperbolic(curve.orbifold_euler_characteristic()));
    }
    let mut h0 = (2 * i64::from(d) - 1) * (i64::from(curve.genus()) - 1);
    for &m in curve.cone_orders() {
        h0 += r_value(d, m)? as i64;
    }
    debug_assert_eq!(
        h0,
        euler_char_sheaf(curve, &curve.canonical_power(d)).unwrap()
    );
    debug_assert!(h0 >= 0);
    Ok(h0 as u64)
}

/// Classical Riemann-Roch on the coarse bundle: `deg L_coarse + 1 - g`.
/// Independent of the age bookkeeping; must agree with
/// [`euler_char_sheaf`] on every input.
pub fn coarse_rr_oracle(curve: &OrbiCurve, bundle: &OrbiLineBundle) -> Result<i64> {
    // alignment check only; the value ignores the isotropies
    curve.check_aligned(bundle)?;
    Ok(bundle.coarse_degree() + 1 - i64::from(curve.genus()))
}

/// Complex dimension of the Hitchin base `(+)_{d=2}^n H0(X;K^d)`.
pub fn hitchin_base_dimension(curve: &OrbiCurve, n: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("rank n must be >= 2, got {n}")));
    }
    (2..=n).map(|d| h0_canonical_power(curve, d)).sum()
}

/// Real dimension of the Hitchin base of a real orbi-curve: the summands
/// are the real sheaf Euler characteristics of the canonical powers
/// (H1 vanishes for d >= 2 on a hyperbolic curve).
pub fn hitchin_base_dimension_real(curve: &RealOrbiCurve, n: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("rank n must be >= 2, got {n}")));
    }
    if !curve.is_hyperbolic() {
        return Err(Error::NonHyperbolic(
            curve.double_cover().orbifold_euler_characteristic(),
        ));
    }
    let mut dim = 0i64;
    for d in 2..=n {
        dim += euler_char_sheaf_real(curve, &RealOrbiLineBundle::canonical_power(curve, d))?;
    }
    debug_assert!(dim >= 0);
    Ok(dim as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere_237() -> OrbiCurve {
        OrbiCurve::new(0, vec![2, 3, 7]).unwrap()
    }

    #[test]
    fn chi_of_canonical_powers() {
        for curve in [
            sphere_237(),
            OrbiCurve::new(2, vec![]).unwrap(),
            OrbiCurve::new(1, vec![3, 4]).unwrap(),
        ] {
            let g = i64::from(curve.genus());
            let k = i64::try_from(curve.cone_count()).unwrap();
            let o = curve.trivial_bundle();
            assert_eq!(euler_char_sheaf(&curve, &o).unwrap(), 1 - g);
            let kan = curve.canonical_bundle();
            assert_eq!(euler_char_sheaf(&curve, &kan).unwrap(), g - 1);
            let k2 = curve.canonical_power(2);
            assert_eq!(euler_char_sheaf(&curve, &k2).unwrap(), 3 * (g - 1) + k);
        }
    }

    #[test]
    fn chi_real_canonical_square() {
        // triangle (2,3,7): g = 0 upstairs, k = 0, l = 3
        let triangle = RealOrbiCurve::new(0, vec![], vec![2, 3, 7]).unwrap();
        let k2 = RealOrbiLineBundle::canonical_power(&triangle, 2);
        assert_eq!(euler_char_sheaf_real(&triangle, &k2).unwrap(), 0);
        assert_eq!(
            euler_char_sheaf_real(&triangle, &RealOrbiLineBundle::trivial(&triangle)).unwrap(),
            1
        );
        // mixed case: g = 2 upstairs, one cone pair of order 4, one dihedral of order 3
        let mixed = RealOrbiCurve::new(2, vec![4], vec![3]).unwrap();
        let k2 = RealOrbiLineBundle::canonical_power(&mixed, 2);
        assert_eq!(euler_char_sheaf_real(&mixed, &k2).unwrap(), 3 * (2 - 1) + 2 + 1);
    }

    #[test]
    fn h0_cases() {
        assert_eq!(h0_canonical_power(&sphere_237(), 6).unwrap(), 1);
        assert_eq!(h0_canonical_power(&sphere_237(), 2).unwrap(), 0);
        // classical 3g - 3 quadratic differentials on a smooth curve
        let genus3 = OrbiCurve::new(3, vec![]).unwrap();
        assert_eq!(h0_canonical_power(&genus3, 2).unwrap(), 6);
        assert!(h0_canonical_power(&sphere_237(), 1).is_err());
        let flat = OrbiCurve::new(0, vec![2, 3, 6]).unwrap();
        assert!(h0_canonical_power(&flat, 2).is_err());
    }

    #[test]
    fn coarse_oracle_agrees() {
        let curve = sphere_237();
        let k2 = curve.canonical_power(2);
        assert_eq!(k2.coarse_degree(), -1);
        assert_eq!(coarse_rr_oracle(&curve, &k2).unwrap(), 0);
        assert_eq!(
            coarse_rr_oracle(&curve, &k2).unwrap(),
            euler_char_sheaf(&curve, &k2).unwrap()
        );
        let o = curve.trivial_bundle();
        assert_eq!(coarse_rr_oracle(&curve, &o).unwrap(), 1);
    }

    #[test]
    fn hitchin_base_cases() {
        assert_eq!(hitchin_base_dimension(&sphere_237(), 6).unwrap(), 1);
        let genus3 = OrbiCurve::new(3, vec![]).unwrap();
        assert_eq!(hitchin_base_dimension(&genus3, 6).unwrap(), 70);
        let triangle = RealOrbiCurve::new(0, vec![], vec![2, 3, 7]).unwrap();
        assert_eq!(hitchin_base_dimension_real(&triangle, 6).unwrap(), 1);
    }
}
