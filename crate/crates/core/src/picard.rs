//! Orbifold line-bundle calculus on analytic orbi-curves.
//!
//! A bundle is stored in its normalized coarse decomposition: a unique
//! line bundle on the coarse Riemann surface (an integer degree) plus an
//! isotropy residue `0 <= a_i < m_i` at each cone point. Tensor and dual
//! reduce residues mod `m_i` and credit the carries to the coarse degree;
//! this normalization is forced by the uniqueness of the decomposition.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::signatures::OrbifoldSignature;

/// Analytic orbi-curve: coarse genus plus cone orders, sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct OrbiCurve {
    genus: u32,
    cone_orders: Vec<u32>,
}

impl OrbiCurve {
    pub fn new(genus: u32, mut cone_orders: Vec<u32>) -> Result<Self> {
        if let Some(&m) = cone_orders.iter().find(|&&m| m < 2) {
            return Err(Error::Domain(format!("cone order {m} < 2")));
        }
        cone_orders.sort_unstable();
        Ok(OrbiCurve { genus, cone_orders })
    }

    /// The orientable closed signature with the same genus and cones.
    pub fn from_signature(sig: &OrbifoldSignature) -> Result<Self> {
        if !sig.is_orientable_closed() {
            return Err(Error::Domain(
                "complex orbi-curve requires an orientable closed signature".into(),
            ));
        }
        Self::new(sig.genus(), sig.cone_orders().to_vec())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }

    pub fn cone_count(&self) -> usize {
        self.cone_orders.len()
    }

    pub fn signature(&self) -> OrbifoldSignature {
        OrbifoldSignature::orientable_with_cones(self.genus, self.cone_orders.clone())
            .expect("curve data is a valid signature")
    }

    pub fn orbifold_euler_characteristic(&self) -> Rational {
        self.signature().orbifold_euler_characteristic()
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.orbifold_euler_characteristic().is_negative()
    }

    /// The trivial bundle O.
    pub fn trivial_bundle(&self) -> OrbiLineBundle {
        OrbiLineBundle {
            coarse_degree: 0,
            isotropies: vec![0; self.cone_count()],
        }
    }

    /// The d-th power of the canonical bundle in its coarse decomposition:
    /// coarse degree `d(2g-2) + sum R(d,m_i)`, isotropy `d(m_i-1) mod m_i`.
    pub fn canonical_power(&self, d: u32) -> OrbiLineBundle {
        let mut coarse = i64::from(d) * (2 * i64::from(self.genus) - 2);
        let mut isotropies = Vec::with_capacity(self.cone_count());
        for &m in &self.cone_orders {
            let dm = u64::from(d) * u64::from(m - 1);
            coarse += (dm / u64::from(m)) as i64;
            isotropies.push((dm % u64::from(m)) as u32);
        }
        OrbiLineBundle {
            coarse_degree: coarse,
            isotropies,
        }
    }

    /// The canonical bundle K.
    pub fn canonical_bundle(&self) -> OrbiLineBundle {
        self.canonical_power(1)
    }

    /// Verify that a bundle's isotropy list matches this curve's cone data.
    pub fn check_aligned(&self, bundle: &OrbiLineBundle) -> Result<()> {
        if bundle.isotropies.len() != self.cone_count() {
            return Err(Error::Misaligned(format!(
                "bundle has {} isotropies, curve has {} cone points",
                bundle.isotropies.len(),
                self.cone_count()
            )));
        }
        for (i, (&a, &m)) in bundle.isotropies.iter().zip(&self.cone_orders).enumerate() {
            if a >= m {
                return Err(Error::Misaligned(format!(
                    "isotropy {a} at cone {i} not below its order {m}"
                )));
            }
        }
        Ok(())
    }
}

/// Real (dianalytic) orbi-curve, given through its complex double cover:
/// each cone point of the real curve lifts to a swapped pair of cone
/// points upstairs, each dihedral point to a single fixed cone point.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RealOrbiCurve {
    double_cover_genus: u32,
    cone_orders: Vec<u32>,
    dihedral_orders: Vec<u32>,
}

impl RealOrbiCurve {
    pub fn new(
        double_cover_genus: u32,
        mut cone_orders: Vec<u32>,
        mut dihedral_orders: Vec<u32>,
    ) -> Result<Self> {
        if let Some(&m) = cone_orders
            .iter()
            .chain(dihedral_orders.iter())
            .find(|&&m| m < 2)
        {
            return Err(Error::Domain(format!("order {m} < 2")));
        }
        cone_orders.sort_unstable();
        dihedral_orders.sort_unstable();
        Ok(RealOrbiCurve {
            double_cover_genus,
            cone_orders,
            dihedral_orders,
        })
    }

    pub fn double_cover_genus(&self) -> u32 {
        self.double_cover_genus
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }

    pub fn dihedral_orders(&self) -> &[u32] {
        &self.dihedral_orders
    }

    /// The complex double cover: genus of the coarse cover, each cone
    /// order twice, each dihedral order once.
    pub fn double_cover(&self) -> OrbiCurve {
        let mut cones = Vec::with_capacity(2 * self.cone_orders.len() + self.dihedral_orders.len());
        for &m in &self.cone_orders {
            cones.push(m);
            cones.push(m);
        }
        cones.extend_from_slice(&self.dihedral_orders);
        OrbiCurve::new(self.double_cover_genus, cones).expect("orders already validated")
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.double_cover().is_hyperbolic()
    }
}

/// Orbifold line bundle in normalized coarse decomposition.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct OrbiLineBundle {
    coarse_degree: i64,
    isotropies: Vec<u32>,
}

impl OrbiLineBundle {
    /// Build a bundle; residues are checked against the curve's cone orders.
    pub fn new(curve: &OrbiCurve, coarse_degree: i64, isotropies: Vec<u32>) -> Result<Self> {
        let bundle = OrbiLineBundle {
            coarse_degree,
            isotropies,
        };
        curve.check_aligned(&bundle)?;
        Ok(bundle)
    }

    pub fn coarse_degree(&self) -> i64 {
        self.coarse_degree
    }

    pub fn isotropies(&self) -> &[u32] {
        &self.isotropies
    }

    /// Age at the i-th cone point: `a_i / m_i`, in [0,1).
    pub fn age(&self, curve: &OrbiCurve, i: usize) -> Result<Rational> {
        curve.check_aligned(self)?;
        let (&a, &m) = self
            .isotropies
            .get(i)
            .zip(curve.cone_orders().get(i))
            .ok_or_else(|| Error::Misaligned(format!("cone index {i} out of range")))?;
        Ok(Rational::new(i64::from(a), i64::from(m)))
    }

    pub fn total_age(&self, curve: &OrbiCurve) -> Result<Rational> {
        curve.check_aligned(self)?;
        Ok(self
            .isotropies
            .iter()
            .zip(curve.cone_orders())
            .map(|(&a, &m)| Rational::new(i64::from(a), i64::from(m)))
            .sum())
    }

    /// Orbifold degree: coarse degree plus the sum of the ages.
    pub fn degree(&self, curve: &OrbiCurve) -> Result<Rational> {
        Ok(Rational::from_int(self.coarse_degree) + self.total_age(curve)?)
    }

    /// Tensor product. Residues add mod `m_i`; every overflow carries one
    /// unit into the coarse degree, so the orbifold degree is additive.
    pub fn tensor(&self, other: &OrbiLineBundle, curve: &OrbiCurve) -> Result<OrbiLineBundle> {
        curve.check_aligned(self)?;
        curve.check_aligned(other)?;
        let mut coarse = self.coarse_degree + other.coarse_degree;
        let mut isotropies = Vec::with_capacity(self.isotropies.len());
        for ((&a, &b), &m) in self
            .isotropies
            .iter()
            .zip(&other.isotropies)
            .zip(curve.cone_orders())
        {
            let s = a + b;
            if s >= m {
                coarse += 1;
                isotropies.push(s - m);
            } else {
                isotropies.push(s);
            }
        }
        Ok(OrbiLineBundle {
            coarse_degree: coarse,
            isotropies,
        })
    }

    /// Inverse bundle: residue `(m_i - a_i) mod m_i`, coarse degree
    /// `-deg - #{i : a_i > 0}`. Satisfies `L (x) dual(L) = O`.
    pub fn dual(&self, curve: &OrbiCurve) -> Result<OrbiLineBundle> {
        curve.check_aligned(self)?;
        let nonzero = self.isotropies.iter().filter(|&&a| a > 0).count() as i64;
        let isotropies = self
            .isotropies
            .iter()
            .zip(curve.cone_orders())
            .map(|(&a, &m)| if a == 0 { 0 } else { m - a })
            .collect();
        Ok(OrbiLineBundle {
            coarse_degree: -self.coarse_degree - nonzero,
            isotropies,
        })
    }
}

/// Line bundle on a real orbi-curve, in the coarse decomposition of its
/// pullback to the double cover. One residue per cone pair (the swapped
/// points carry the same isotropy) and one per dihedral point; the coarse
/// degree is that of the underlying bundle on the coarse double cover.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RealOrbiLineBundle {
    coarse_degree: i64,
    cone_isotropies: Vec<u32>,
    dihedral_isotropies: Vec<u32>,
}

impl RealOrbiLineBundle {
    pub fn new(
        curve: &RealOrbiCurve,
        coarse_degree: i64,
        cone_isotropies: Vec<u32>,
        dihedral_isotropies: Vec<u32>,
    ) -> Result<Self> {
        if cone_isotropies.len() != curve.cone_orders().len()
            || dihedral_isotropies.len() != curve.dihedral_orders().len()
        {
            return Err(Error::Misaligned(
                "real bundle isotropy counts do not match the curve".into(),
            ));
        }
        for (&a, &m) in cone_isotropies
            .iter()
            .zip(curve.cone_orders())
            .chain(dihedral_isotropies.iter().zip(curve.dihedral_orders()))
        {
            if a >= m {
                return Err(Error::Misaligned(format!(
                    "isotropy {a} not below its order {m}"
                )));
            }
        }
        Ok(RealOrbiLineBundle {
            coarse_degree,
            cone_isotropies,
            dihedral_isotropies,
        })
    }

    /// The trivial bundle.
    pub fn trivial(curve: &RealOrbiCurve) -> Self {
        RealOrbiLineBundle {
            coarse_degree: 0,
            cone_isotropies: vec![0; curve.cone_orders().len()],
            dihedral_isotropies: vec![0; curve.dihedral_orders().len()],
        }
    }

    /// K^d on a real orbi-curve, read off from the double cover.
    pub fn canonical_power(curve: &RealOrbiCurve, d: u32) -> Self {
        let upstairs = curve.double_cover().canonical_power(d);
        let residue = |m: u32| (u64::from(d) * u64::from(m - 1) % u64::from(m)) as u32;
        RealOrbiLineBundle {
            coarse_degree: upstairs.coarse_degree(),
            cone_isotropies: curve.cone_orders().iter().map(|&m| residue(m)).collect(),
            dihedral_isotropies: curve.dihedral_orders().iter().map(|&m| residue(m)).collect(),
        }
    }

    pub fn coarse_degree(&self) -> i64 {
        self.coarse_degree
    }

    pub fn cone_isotropies(&self) -> &[u32] {
        &self.cone_isotropies
    }

    pub fn dihedral_isotropies(&self) -> &[u32] {
        &self.dihedral_isotropies
    }

    /// Degree of the pulled-back bundle on the double cover: coarse degree
    /// plus twice the cone ages plus the dihedral ages.
    pub fn degree(&self, curve: &RealOrbiCurve) -> Rational {
        let mut deg = Rational::from_int(self.coarse_degree);
        for (&a, &m) in self.cone_isotropies.iter().zip(curve.cone_orders()) {
            deg = deg + Rational::new(2 * i64::from(a), i64::from(m));
        }
        for (&a, &m) in self.dihedral_isotropies.iter().zip(curve.dihedral_orders()) {
            deg = deg + Rational::new(i64::from(a), i64::from(m));
        }
        deg
    }
}
