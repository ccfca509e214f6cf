//! Finite covers of orbifolds described by permutation actions.
//!
//! A degree-N cover of an orientable cone-type orbifold is encoded by the
//! images of the generators of the fundamental-group presentation in the
//! symmetric group on N points. Validation checks the surface relation,
//! the cone-order relations and transitivity; `lift_signature` then reads
//! off the cover's signature from the cycle structure, with the genus
//! solved from multiplicativity of the orbifold Euler characteristic.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::signatures::OrbifoldSignature;

/// A permutation of `{0, .., n-1}` in one-line image notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from 0-indexed images; checks bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidAction(format!(
                    "image list {images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from the 1-indexed one-line notation used in the JSON format.
    pub fn from_one_indexed(images: &[usize]) -> Result<Self> {
        let shifted: Vec<usize> = images
            .iter()
            .map(|&i| {
                i.checked_sub(1).ok_or_else(|| {
                    Error::InvalidAction("one-line notation is 1-indexed; found 0".into())
                })
            })
            .collect::<Result<_>>()?;
        Self::new(shifted)
    }

    pub fn to_one_indexed(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Lengths of the cycles, unordered.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }
}

/// Images of the presentation generators `a_i, b_i, c_j` in Sym(N).
/// JSON wire format: `{"degree":N, "a":[[..],..], "b":[[..],..],
/// "c":[[..],..]}` with permutations in 1-indexed one-line notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationAction {
    pub degree: usize,
    pub handle_a: Vec<Permutation>,
    pub handle_b: Vec<Permutation>,
    pub cone: Vec<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct ActionJson {
    degree: usize,
    #[serde(default)]
    a: Vec<Vec<usize>>,
    #[serde(default)]
    b: Vec<Vec<usize>>,
    #[serde(default)]
    c: Vec<Vec<usize>>,
}

impl PermutationAction {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ActionJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidAction(format!("bad action JSON: {e}")))?;
        let parse = |lists: &[Vec<usize>]| -> Result<Vec<Permutation>> {
            lists
                .iter()
                .map(|l| {
                    let p = Permutation::from_one_indexed(l)?;
                    if p.degree() != raw.degree {
                        return Err(Error::InvalidAction(format!(
                            "permutation of degree {} in a degree-{} action",
                            p.degree(),
                            raw.degree
                        )));
                    }
                    Ok(p)
                })
                .collect()
        };
        Ok(PermutationAction {
            degree: raw.degree,
            handle_a: parse(&raw.a)?,
            handle_b: parse(&raw.b)?,
            cone: parse(&raw.c)?,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = ActionJson {
            degree: self.degree,
            a: self.handle_a.iter().map(|p| p.to_one_indexed()).collect(),
            b: self.handle_b.iter().map(|p| p.to_one_indexed()).collect(),
            c: self.cone.iter().map(|p| p.to_one_indexed()).collect(),
        };
        serde_json::to_string(&raw).expect("action serializes")
    }

    fn generators(&self) -> impl Iterator<Item = &Permutation> {
        self.handle_a
            .iter()
            .chain(&self.handle_b)
            .chain(&self.cone)
    }

    fn is_transitive(&self) -> bool {
        if self.degree == 0 {
            return false;
        }
        let mut seen = vec![false; self.degree];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for g in self.generators() {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.degree
    }
}

/// A permutation action that has passed [`validate_action`] against its
/// base signature.
#[derive(Clone, Debug)]
pub struct CheckedAction {
    sig: OrbifoldSignature,
    action: PermutationAction,
}

/// Check a permutation action against an orientable cone-type signature:
/// arity, the long relation, the cone-order relations and transitivity.
pub fn validate_action(
    sig: &OrbifoldSignature,
    action: &PermutationAction,
) -> Result<CheckedAction> {
    if !sig.is_orientable_closed() || sig.corner_count() > 0 {
        return Err(Error::InvalidAction(
            "covers are only taken over orientable cone-type signatures".into(),
        ));
    }
    let g = sig.genus() as usize;
    let k = sig.cone_count();
    if action.handle_a.len() != g || action.handle_b.len() != g {
        return Err(Error::InvalidAction(format!(
            "genus {g} needs {g} a- and b-images, got {} and {}",
            action.handle_a.len(),
            action.handle_b.len()
        )));
    }
    if action.cone.len() != k {
        return Err(Error::InvalidAction(format!(
            "{k} cone points need {k} c-images, got {}",
            action.cone.len()
        )));
    }
    if action.generators().any(|p| p.degree() != action.degree) {
        return Err(Error::InvalidAction("mixed permutation degrees".into()));
    }

    for (j, (p, &m)) in action.cone.iter().zip(sig.cone_orders()).enumerate() {
        if !p.pow(u64::from(m)).is_identity() {
            return Err(Error::InvalidAction(format!(
                "c_{} does not satisfy c^{m} = 1",
                j + 1
            )));
        }
    }

    let mut product = Permutation::identity(action.degree);
    for (a, b) in action.handle_a.iter().zip(&action.handle_b) {
        let commutator = a
            .compose(b)
            .compose(&a.inverse())
            .compose(&b.inverse());
        product = product.compose(&commutator);
    }
    for c in &action.cone {
        product = product.compose(c);
    }
    if !product.is_identity() {
        return Err(Error::InvalidAction(
            "surface relation prod [a,b] prod c != 1".into(),
        ));
    }

    if !action.is_transitive() {
        return Err(Error::InvalidAction("action is not transitive".into()));
    }

    Ok(CheckedAction {
        sig: sig.clone(),
        action: action.clone(),
    })
}

/// Outcome of a multiplicativity check: both sides of
/// `chi(cover) = N * chi(base)`.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplicativityReport {
    pub cover: OrbifoldSignature,
    pub cover_chi: Rational,
    pub base_chi_times_degree: Rational,
    pub multiplicative: bool,
}

impl CheckedAction {
    pub fn base(&self) -> &OrbifoldSignature {
        &self.sig
    }

    pub fn action(&self) -> &PermutationAction {
        &self.action
    }

    /// Signature of the covering orbifold. Each cycle of length `l` in the
    /// image of `c_j` contributes a cone point of order `m_j / l` upstairs
    /// (dropped when that quotient is 1); the genus is solved from
    /// `chi_orb(cover) = N * chi_orb(base)`.
    pub fn lift_signature(&self) -> Result<OrbifoldSignature> {
        let n = self.action.degree as i64;
        let mut cover_cones = Vec::new();
        for (p, &m) in self.action.cone.iter().zip(self.sig.cone_orders()) {
            for len in p.cycle_lengths() {
                // cycle lengths divide the element order m
                let q = u64::from(m) / len as u64;
                if q > 1 {
                    cover_cones.push(q as u32);
                }
            }
        }

        let mut coarse_chi = self.sig.orbifold_euler_characteristic() * n;
        for &q in &cover_cones {
            coarse_chi = coarse_chi + Rational::new(i64::from(q) - 1, i64::from(q));
        }
        let chi = coarse_chi
            .to_integer()
            .ok_or_else(|| Error::InvalidAction(format!("non-integral cover chi {coarse_chi}")))?;
        if chi > 2 || chi % 2 != 0 {
            return Err(Error::InvalidAction(format!(
                "cover coarse chi {chi} is not 2 - 2g for g >= 0"
            )));
        }
        let genus = ((2 - chi) / 2) as u32;
        OrbifoldSignature::orientable_with_cones(genus, cover_cones)
    }

    /// Evaluate both sides of `chi_orb(cover) = N * chi_orb(base)`.
    pub fn check_multiplicativity(&self) -> Result<MultiplicativityReport> {
        let cover = self.lift_signature()?;
        let cover_chi = cover.orbifold_euler_characteristic();
        let base_chi_times_degree =
            self.sig.orbifold_euler_characteristic() * self.action.degree as i64;
        Ok(MultiplicativityReport {
            multiplicative: cover_chi == base_chi_times_degree,
            cover,
            cover_chi,
            base_chi_times_degree,
        })
    }
}

/// Orientation double cover of a mirrored or non-orientable signature:
/// every cone order appears twice, every corner order once, the coarse
/// genus is solved from the doubling of the coarse Euler characteristic.
pub fn orientation_double_cover(sig: &OrbifoldSignature) -> Result<OrbifoldSignature> {
    if sig.is_orientable_closed() {
        return Err(Error::Domain(
            "signature is already orientable and closed".into(),
        ));
    }
    let mut cones = Vec::with_capacity(2 * sig.cone_count() + sig.corner_count());
    for &m in sig.cone_orders() {
        cones.push(m);
        cones.push(m);
    }
    cones.extend_from_slice(sig.corner_orders());

    let chi = 2 * sig.coarse_euler_characteristic();
    if chi > 2 || chi % 2 != 0 {
        return Err(Error::Domain(format!(
            "doubled coarse chi {chi} is not 2 - 2g for g >= 0"
        )));
    }
    let genus = ((2 - chi) / 2) as u32;
    OrbifoldSignature::orientable_with_cones(genus, cones)
}

// 2x2 matrices over F_7 modulo +-1, used to realize the 168-element
// simple group as a regular permutation action.
type Mat = [u8; 4];

const P: u8 = 7;

fn mat_mul(x: Mat, y: Mat) -> Mat {
    let m = |a: u8, b: u8| (u16::from(a) * u16::from(b)) as u16;
    [
        ((m(x[0], y[0]) + m(x[1], y[2])) % u16::from(P)) as u8,
        ((m(x[0], y[1]) + m(x[1], y[3])) % u16::from(P)) as u8,
        ((m(x[2], y[0]) + m(x[3], y[2])) % u16::from(P)) as u8,
        ((m(x[2], y[1]) + m(x[3], y[3])) % u16::from(P)) as u8,
    ]
}

/// Pick the representative of {M, -M} whose first nonzero entry is in 1..=3.
fn canonical(m: Mat) -> Mat {
    for &e in &m {
        if e != 0 {
            if e <= P / 2 {
                return m;
            }
            return [
                (P - m[0]) % P,
                (P - m[1]) % P,
                (P - m[2]) % P,
                (P - m[3]) % P,
            ];
        }
    }
    m
}

fn mat_inverse(m: Mat) -> Mat {
    // det = 1 in PSL(2,7), so the adjugate is the inverse
    canonical([m[3], (P - m[1]) % P, (P - m[2]) % P, m[0]])
}

/// The regular action of the simple group of order 168 on itself, realized
/// as a cover of the sphere with cone orders (2,3,7): generators of orders
/// 2 and 3 whose product has order 7, acting by left multiplication.
pub fn klein_quartic_action() -> PermutationAction {
    // enumerate PSL(2,7)
    let mut elements: Vec<Mat> = Vec::with_capacity(168);
    let mut index: HashMap<Mat, usize> = HashMap::with_capacity(168);
    for a in 0..P {
        for b in 0..P {
            for c in 0..P {
                for d in 0..P {
                    let det =
                        (u16::from(a) * u16::from(d) + u16::from(P) * u16::from(P)
                            - u16::from(b) * u16::from(c))
                            % u16::from(P);
                    if det != 1 {
                        continue;
                    }
                    let m = canonical([a, b, c, d]);
                    if !index.contains_key(&m) {
                        index.insert(m, elements.len());
                        elements.push(m);
                    }
                }
            }
        }
    }
    debug_assert_eq!(elements.len(), 168);

    let left_mult = |g: Mat| -> Permutation {
        Permutation::new(
            elements
                .iter()
                .map(|&x| index[&canonical(mat_mul(g, x))])
                .collect(),
        )
        .expect("left multiplication is a bijection")
    };

    // order 2, order 3, product of order 7
    let gen_a: Mat = [0, 6, 1, 0];
    let gen_b: Mat = [0, 6, 1, 6];
    let gen_c = mat_inverse(canonical(mat_mul(gen_a, gen_b)));

    PermutationAction {
        degree: 168,
        handle_a: vec![],
        handle_b: vec![],
        cone: vec![left_mult(gen_a), left_mult(gen_b), left_mult(gen_c)],
    }
}

/// The hyperelliptic double cover of the sphere with six order-2 cone
/// points: every c_j maps to the transposition (1 2).
pub fn hyperelliptic_action() -> PermutationAction {
    let swap = Permutation::new(vec![1, 0]).unwrap();
    PermutationAction {
        degree: 2,
        handle_a: vec![],
        handle_b: vec![],
        cone: vec![swap; 6],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(cones: &[u32]) -> OrbifoldSignature {
        OrbifoldSignature::sphere(cones.to_vec()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_one_indexed(&[2, 3, 1]).unwrap();
        assert_eq!(p.cycle_lengths(), vec![3]);
        assert!(p.pow(3).is_identity());
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::from_one_indexed(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_indexed(&[0, 1]).is_err());
    }

    #[test]
    fn hyperelliptic_validates_and_lifts() {
        let base = sphere(&[2, 2, 2, 2, 2, 2]);
        let checked = validate_action(&base, &hyperelliptic_action()).unwrap();
        let lift = checked.lift_signature().unwrap();
        assert_eq!(lift, OrbifoldSignature::orientable_with_cones(2, vec![]).unwrap());
        let report = checked.check_multiplicativity().unwrap();
        assert!(report.multiplicative);
        assert_eq!(report.cover_chi, Rational::from_int(-2));
    }

    #[test]
    fn trivial_action_valid() {
        let base = sphere(&[2, 3, 7]);
        let action = PermutationAction {
            degree: 1,
            handle_a: vec![],
            handle_b: vec![],
            cone: vec![Permutation::identity(1); 3],
        };
        let checked = validate_action(&base, &action).unwrap();
        assert_eq!(checked.lift_signature().unwrap(), base);
        assert!(checked.check_multiplicativity().unwrap().multiplicative);
    }

    #[test]
    fn broken_relation_rejected() {
        let base = sphere(&[2, 3, 7]);
        let swap = Permutation::new(vec![1, 0]).unwrap();
        let action = PermutationAction {
            degree: 2,
            handle_a: vec![],
            handle_b: vec![],
            cone: vec![swap, Permutation::identity(2), Permutation::identity(2)],
        };
        assert!(validate_action(&base, &action).is_err());
    }

    #[test]
    fn intransitive_rejected() {
        let base = sphere(&[2, 2, 2, 2, 2, 2]);
        let action = PermutationAction {
            degree: 2,
            handle_a: vec![],
            handle_b: vec![],
            cone: vec![Permutation::identity(2); 6],
        };
        let err = validate_action(&base, &action).unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
    }

    #[test]
    fn four_fold_cover_of_sphere_442() {
        let base = sphere(&[4, 4, 2]);
        let four_cycle = Permutation::from_one_indexed(&[2, 3, 4, 1]).unwrap();
        let action = PermutationAction {
            degree: 4,
            handle_a: vec![],
            handle_b: vec![],
            cone: vec![Permutation::identity(4), four_cycle.inverse(), four_cycle],
        };
        // cone orders sort to (2,4,4): c_1 has order 2 -> identity works,
        // c_2 and c_3 are inverse 4-cycles
        let checked = validate_action(&base, &action).unwrap();
        let lift = checked.lift_signature().unwrap();
        assert_eq!(lift, sphere(&[2, 2, 2, 2]));
        assert!(checked.check_multiplicativity().unwrap().multiplicative);
    }

    #[test]
    fn klein_quartic_cover() {
        let base = sphere(&[2, 3, 7]);
        let action = klein_quartic_action();
        let checked = validate_action(&base, &action).unwrap();
        let lift = checked.lift_signature().unwrap();
        assert_eq!(lift, OrbifoldSignature::orientable_with_cones(3, vec![]).unwrap());
        let report = checked.check_multiplicativity().unwrap();
        assert!(report.multiplicative);
        assert_eq!(report.cover_chi, Rational::from_int(-4));
    }

    #[test]
    fn double_cover_cases() {
        let triangle = OrbifoldSignature::polygon(vec![5, 4, 3]).unwrap();
        assert_eq!(orientation_double_cover(&triangle).unwrap(), sphere(&[3, 4, 5]));
        let disk = OrbifoldSignature::new(true, 0, 1, vec![], vec![]).unwrap();
        assert_eq!(
            orientation_double_cover(&disk).unwrap(),
            OrbifoldSignature::orientable_with_cones(0, vec![]).unwrap()
        );
        let rp2_cone = OrbifoldSignature::new(false, 1, 0, vec![3], vec![]).unwrap();
        assert_eq!(orientation_double_cover(&rp2_cone).unwrap(), sphere(&[3, 3]));
        let closed = sphere(&[2, 3, 7]);
        assert!(orientation_double_cover(&closed).is_err());
    }

    #[test]
    fn action_json_round_trip() {
        let action = hyperelliptic_action();
        let json = action.to_json();
        assert_eq!(PermutationAction::from_json(&json).unwrap(), action);
        let parsed = PermutationAction::from_json(
            r#"{"degree":2, "a":[], "b":[], "c":[[2,1],[2,1],[2,1],[2,1],[2,1],[2,1]]}"#,
        )
        .unwrap();
        assert_eq!(parsed, action);
    }
}
