//! Closed 2-orbifold signatures and their basic invariants.
//!
//! A signature records the coarse moduli space (orientability, genus,
//! mirror boundary circles) together with the orders of the cone points
//! and corner reflectors. Orbifolds with genuine non-mirror boundary are
//! outside the data model and rejected by the parser.
//!
//! Which mirror circle carries which corner reflector is deliberately not
//! tracked: none of the invariants computed by this crate depend on that
//! assignment.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Combinatorial description of a closed 2-orbifold.
///
/// Canonical form: cone and corner order lists are kept sorted ascending.
/// Construct through [`OrbifoldSignature::new`], which validates and
/// canonicalizes; the fields are private so every value in circulation is
/// canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct OrbifoldSignature {
    orientable: bool,
    genus: u32,
    mirror_circles: u32,
    cone_orders: Vec<u32>,
    corner_orders: Vec<u32>,
}

impl OrbifoldSignature {
    /// Validate raw signature data and return the canonical form.
    ///
    /// Invariants enforced: all orders >= 2, corners require at least one
    /// mirror circle, a non-orientable surface has at least one cross-cap.
    pub fn new(
        orientable: bool,
        genus: u32,
        mirror_circles: u32,
        mut cone_orders: Vec<u32>,
        mut corner_orders: Vec<u32>,
    ) -> Result<Self> {
        if let Some(&m) = cone_orders.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSignature(format!("cone order {m} < 2")));
        }
        if let Some(&n) = corner_orders.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidSignature(format!("corner order {n} < 2")));
        }
        if !corner_orders.is_empty() && mirror_circles == 0 {
            return Err(Error::InvalidSignature(
                "corner reflectors require a mirror boundary circle".into(),
            ));
        }
        if !orientable && genus == 0 {
            return Err(Error::InvalidSignature(
                "non-orientable surface needs at least one cross-cap".into(),
            ));
        }
        cone_orders.sort_unstable();
        corner_orders.sort_unstable();
        Ok(OrbifoldSignature {
            orientable,
            genus,
            mirror_circles,
            cone_orders,
            corner_orders,
        })
    }

    /// Closed orientable surface of the given genus with cone points.
    pub fn orientable_with_cones(genus: u32, cones: Vec<u32>) -> Result<Self> {
        Self::new(true, genus, 0, cones, vec![])
    }

    /// Sphere with the given cone orders.
    pub fn sphere(cones: Vec<u32>) -> Result<Self> {
        Self::orientable_with_cones(0, cones)
    }

    /// Disk with mirror boundary and the given corner orders (a "triangle"
    /// when there are three corners).
    pub fn polygon(corners: Vec<u32>) -> Result<Self> {
        Self::new(true, 0, 1, vec![], corners)
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    /// Orientable genus, or cross-cap count when non-orientable.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn mirror_circles(&self) -> u32 {
        self.mirror_circles
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }

    pub fn corner_orders(&self) -> &[u32] {
        &self.corner_orders
    }

    /// Number of cone points (k).
    pub fn cone_count(&self) -> usize {
        self.cone_orders.len()
    }

    /// Number of corner reflectors (l).
    pub fn corner_count(&self) -> usize {
        self.corner_orders.len()
    }

    /// True when the coarse surface is closed orientable with no mirrors.
    pub fn is_orientable_closed(&self) -> bool {
        self.orientable && self.mirror_circles == 0
    }

    /// Euler characteristic of the coarse moduli space: `2 - 2g - b` for an
    /// orientable surface with `b` boundary circles, `2 - g - b` when `g`
    /// counts cross-caps.
    pub fn coarse_euler_characteristic(&self) -> i64 {
        let g = i64::from(self.genus);
        let b = i64::from(self.mirror_circles);
        if self.orientable {
            2 - 2 * g - b
        } else {
            2 - g - b
        }
    }

    /// The orbifold Euler characteristic
    /// `chi(X) - sum (1 - 1/m_i) - 1/2 sum (1 - 1/n_j)`.
    ///
    /// Accumulated over the common denominator `2 lcm(orders)` so only a
    /// single normalization happens; the denominator of the result always
    /// divides that quantity.
    pub fn orbifold_euler_characteristic(&self) -> Rational {
        use num_integer::Integer;
        let mut l: i64 = 1;
        for &m in self.cone_orders.iter().chain(&self.corner_orders) {
            l = l.lcm(&i64::from(m));
        }
        let den = 2 * l;
        let mut num = self.coarse_euler_characteristic() * den;
        for &m in &self.cone_orders {
            let m = i64::from(m);
            num -= den - den / m;
        }
        for &n in &self.corner_orders {
            let n = i64::from(n);
            // den is divisible by 2n, so (n-1)/(2n) scales exactly
            num -= den / (2 * n) * (n - 1);
        }
        Rational::new(num, den)
    }

    /// True iff the orbifold carries hyperbolic structures, i.e. the
    /// orbifold Euler characteristic is negative. Bad (non-developable)
    /// orbifolds all have positive chi, so they never pass this gate.
    pub fn is_hyperbolic(&self) -> bool {
        self.orbifold_euler_characteristic().is_negative()
    }

    /// Dimension of the Teichmuller space, `-3 chi(X) + 2k + l`.
    pub fn teichmuller_dimension(&self) -> Result<u64> {
        if !self.is_hyperbolic() {
            return Err(Error::NonHyperbolic(self.orbifold_euler_characteristic()));
        }
        let dim = -3 * self.coarse_euler_characteristic()
            + 2 * self.cone_count() as i64
            + self.corner_count() as i64;
        debug_assert!(dim >= 0);
        Ok(dim as u64)
    }
}

/// Prints the canonical signature string of the CLI grammar,
/// e.g. `o0c:2,3,7` or `o0b1d:2,3,7`.
impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            if self.orientable { 'o' } else { 'n' },
            self.genus
        )?;
        if self.mirror_circles > 0 {
            write!(f, "b{}", self.mirror_circles)?;
        }
        if !self.cone_orders.is_empty() {
            write!(f, "c:")?;
            write_list(f, &self.cone_orders)?;
        }
        if !self.corner_orders.is_empty() {
            write!(f, "d:")?;
            write_list(f, &self.corner_orders)?;
        }
        Ok(())
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, orders: &[u32]) -> fmt::Result {
    for (i, m) in orders.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{m}")?;
    }
    Ok(())
}

/// Parse a signature string `<o|n><genus>[b<B>][c:<m1,...>][d:<n1,...>]`.
///
/// Syntax errors carry the byte offset of the offending token; semantic
/// errors are delegated to [`OrbifoldSignature::new`].
pub fn parse_signature(text: &str) -> Result<OrbifoldSignature> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;

    let orientable = match bytes.first() {
        Some(b'o') => true,
        Some(b'n') => false,
        _ => {
            return Err(Error::Parse {
                offset: 0,
                expected: "'o' or 'n'".into(),
            })
        }
    };
    pos += 1;

    let genus = parse_number(bytes, &mut pos, "genus")?;

    let mut mirror_circles = 0;
    if bytes.get(pos) == Some(&b'b') {
        pos += 1;
        mirror_circles = parse_number(bytes, &mut pos, "mirror circle count")?;
    }

    let mut cone_orders = Vec::new();
    if bytes.get(pos) == Some(&b'c') {
        pos += 1;
        expect_colon(bytes, &mut pos)?;
        cone_orders = parse_order_list(bytes, &mut pos)?;
    }

    let mut corner_orders = Vec::new();
    if bytes.get(pos) == Some(&b'd') {
        pos += 1;
        expect_colon(bytes, &mut pos)?;
        corner_orders = parse_order_list(bytes, &mut pos)?;
    }

    if pos != bytes.len() {
        return Err(Error::Parse {
            offset: pos,
            expected: "end of input, 'b<B>', 'c:<orders>' or 'd:<orders>'".into(),
        });
    }

    OrbifoldSignature::new(orientable, genus, mirror_circles, cone_orders, corner_orders)
}

fn expect_colon(bytes: &[u8], pos: &mut usize) -> Result<()> {
    if bytes.get(*pos) == Some(&b':') {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::Parse {
            offset: *pos,
            expected: "':'".into(),
        })
    }
}

fn parse_number(bytes: &[u8], pos: &mut usize, what: &str) -> Result<u32> {
    let start = *pos;
    while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    if *pos == start {
        return Err(Error::Parse {
            offset: start,
            expected: format!("decimal {what}"),
        });
    }
    std::str::from_utf8(&bytes[start..*pos])
        .unwrap()
        .parse()
        .map_err(|_| Error::Parse {
            offset: start,
            expected: format!("{what} within u32 range"),
        })
}

fn parse_order_list(bytes: &[u8], pos: &mut usize) -> Result<Vec<u32>> {
    let mut orders = vec![parse_number(bytes, pos, "order")?];
    while bytes.get(*pos) == Some(&b',') {
        *pos += 1;
        orders.push(parse_number(bytes, pos, "order")?);
    }
    Ok(orders)
}
