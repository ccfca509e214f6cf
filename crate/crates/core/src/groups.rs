//! Fundamental-group presentations and the index-2 relationship between
//! Von Dyck and Coxeter triangle groups.
//!
//! Words are sequences of signed generator letters; the Coxeter alphabet
//! {x,y,z} is involutive (every generator is its own inverse), so reduction
//! there cancels adjacent equal letters regardless of sign. The word
//! problem is not solved in general: the checks below are the decidable
//! ones (relator-image reduction and pattern match against relators).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::signatures::OrbifoldSignature;

/// One signed generator occurrence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    fn plain(gen: usize) -> Self {
        Letter {
            gen,
            inverse: false,
        }
    }

    fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

pub type Word = Vec<Letter>;

/// Free reduction: cancel adjacent `g g^-1` pairs. With `involutive`,
/// every generator is an involution and any adjacent equal pair cancels.
pub fn reduce(word: &[Letter], involutive: bool) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        let cancels = out.last().is_some_and(|&p| {
            p.gen == l.gen && (involutive || p.inverse != l.inverse)
        });
        if cancels {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// A finite presentation: named generators and a relator list. The
/// relators are stated verbatim (`x^2` stays a length-2 word even on an
/// involutive alphabet); reduction is applied when checking words, not
/// when storing relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
    /// Whether every generator is an involution (Coxeter alphabet).
    involutive: bool,
}

impl Serialize for Presentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Presentation", 2)?;
        st.serialize_field("generators", &self.generators)?;
        st.serialize_field("relators", &self.relator_strings())?;
        st.end()
    }
}

impl Presentation {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn relator_strings(&self) -> Vec<String> {
        self.relators.iter().map(|w| self.format_word(w)).collect()
    }

    /// Render a word with `^` powers and `[a,b]` commutator sugar.
    pub fn format_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        // whole-word power of a two-letter block, e.g. (x*y)^p
        if word.len() >= 4 && word.len() % 2 == 0 {
            let (a, b) = (word[0], word[1]);
            if a.gen != b.gen
                && !a.inverse
                && !b.inverse
                && word.chunks(2).all(|ch| ch == [a, b])
            {
                return format!(
                    "({}*{})^{}",
                    self.generators[a.gen],
                    self.generators[b.gen],
                    word.len() / 2
                );
            }
        }
        let mut pieces: Vec<String> = Vec::new();
        let mut i = 0;
        while i < word.len() {
            // commutator pattern a b a^-1 b^-1
            if i + 4 <= word.len() {
                let (a, b, c, d) = (word[i], word[i + 1], word[i + 2], word[i + 3]);
                if !a.inverse && !b.inverse && c == a.inv() && d == b.inv() && a.gen != b.gen {
                    pieces.push(format!(
                        "[{},{}]",
                        self.generators[a.gen], self.generators[b.gen]
                    ));
                    i += 4;
                    continue;
                }
            }
            // run of one letter
            let l = word[i];
            let mut run = 1;
            while i + run < word.len() && word[i + run] == l {
                run += 1;
            }
            let name = if l.inverse {
                format!("{}^-1", self.generators[l.gen])
            } else {
                self.generators[l.gen].clone()
            };
            if run > 1 {
                if l.inverse {
                    pieces.push(format!("({name})^{run}"));
                } else {
                    pieces.push(format!("{name}^{run}"));
                }
            } else {
                pieces.push(name);
            }
            i += run;
        }
        pieces.join("*")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{} | {}>",
            self.generators.join(", "),
            self.relator_strings().join(", ")
        )
    }
}

fn power(letter: Letter, e: u32) -> Word {
    vec![letter; e as usize]
}

/// Presentation of the fundamental group of a closed orientable cone-type
/// orbifold: generators `a_1..a_g, b_1..b_g, c_1..c_k`, the long relation
/// `prod [a_i,b_i] prod c_j` and one power relator `c_j^{m_j}` per cone.
pub fn presentation_fuchsian(sig: &OrbifoldSignature) -> Result<Presentation> {
    if !sig.is_orientable_closed() || sig.corner_count() > 0 {
        return Err(Error::Domain(
            "Fuchsian presentation needs an orientable closed cone-type signature".into(),
        ));
    }
    let g = sig.genus() as usize;
    let k = sig.cone_count();
    let generators: Vec<String> = if g == 0 && k == 3 {
        // classic triangle-group naming
        vec!["a".into(), "b".into(), "c".into()]
    } else {
        let mut names = Vec::with_capacity(2 * g + k);
        for i in 1..=g {
            names.push(if g == 1 { "a".into() } else { format!("a{i}") });
            names.push(if g == 1 { "b".into() } else { format!("b{i}") });
        }
        for j in 1..=k {
            names.push(if k == 1 { "c".into() } else { format!("c{j}") });
        }
        names
    };

    let mut long = Word::new();
    for i in 0..g {
        let a = Letter::plain(2 * i);
        let b = Letter::plain(2 * i + 1);
        long.extend([a, b, a.inv(), b.inv()]);
    }
    for j in 0..k {
        long.push(Letter::plain(2 * g + j));
    }

    let mut relators = Vec::with_capacity(k + 1);
    for (j, &m) in sig.cone_orders().iter().enumerate() {
        relators.push(power(Letter::plain(2 * g + j), m));
    }
    relators.push(long);
    Ok(Presentation {
        generators,
        relators,
        involutive: false,
    })
}

/// The Coxeter triangle group
/// `<x,y,z | x^2, y^2, z^2, (xy)^p, (yz)^q, (zx)^r>`.
pub fn presentation_coxeter_triangle(p: u32, q: u32, r: u32) -> Result<Presentation> {
    if p < 2 || q < 2 || r < 2 {
        return Err(Error::Domain(format!(
            "triangle orders must be >= 2, got ({p},{q},{r})"
        )));
    }
    let (x, y, z) = (Letter::plain(0), Letter::plain(1), Letter::plain(2));
    let pair = |a: Letter, b: Letter, e: u32| -> Word {
        std::iter::repeat([a, b]).take(e as usize).flatten().collect()
    };
    // relators are not reduced here: x^2 etc. are relators, not identities
    Ok(Presentation {
        generators: vec!["x".into(), "y".into(), "z".into()],
        relators: vec![
            vec![x, x],
            vec![y, y],
            vec![z, z],
            pair(x, y, p),
            pair(y, z, q),
            pair(z, x, r),
        ],
        involutive: true,
    })
}

fn cyclic_rotations(word: &[Letter]) -> Vec<Word> {
    (0..word.len().max(1))
        .map(|i| {
            let mut w = word[i..].to_vec();
            w.extend_from_slice(&word[..i]);
            w
        })
        .collect()
}

/// Verify symbolically that `a -> xy, b -> yz, c -> zx` maps every relator
/// of the Von Dyck group `<a,b,c | a^p, b^q, c^r, abc>` into the Coxeter
/// group `T(p,q,r)`: each image must reduce (involutively) to the empty
/// word or to a cyclic rotation of a Coxeter relator.
pub fn flattening_morphism_check(p: u32, q: u32, r: u32) -> Result<bool> {
    let coxeter = presentation_coxeter_triangle(p, q, r)?;
    let (x, y, z) = (Letter::plain(0), Letter::plain(1), Letter::plain(2));
    let images: [Word; 3] = [vec![x, y], vec![y, z], vec![z, x]];
    Ok(von_dyck_relator_images_ok(p, q, r, &images, &coxeter))
}

/// Same check with an arbitrary substitution, used to catch bogus
/// generator assignments.
pub fn substitution_check(p: u32, q: u32, r: u32, images: &[Word; 3]) -> Result<bool> {
    let coxeter = presentation_coxeter_triangle(p, q, r)?;
    Ok(von_dyck_relator_images_ok(p, q, r, images, &coxeter))
}

fn von_dyck_relator_images_ok(
    p: u32,
    q: u32,
    r: u32,
    images: &[Word; 3],
    coxeter: &Presentation,
) -> bool {
    let substituted: Vec<Word> = [(0u32, p), (1, q), (2, r)]
        .iter()
        .map(|&(gen, e)| {
            (0..e).flat_map(|_| images[gen as usize].iter().copied()).collect()
        })
        .chain(std::iter::once(
            images.iter().flat_map(|w| w.iter().copied()).collect(),
        ))
        .collect();

    substituted.iter().all(|w| {
        let reduced = reduce(w, true);
        reduced.is_empty()
            || coxeter
                .relators()
                .iter()
                .any(|rel| cyclic_rotations(rel).contains(&reduced))
    })
}

/// Parity quotient of the Coxeter group: `(-1)^(reduced word length)`.
/// Word over the generators x, y, z given as a string, e.g. `"xyx"`.
pub fn parity_quotient(word: &str) -> Result<i32> {
    let letters: Word = word
        .chars()
        .map(|ch| match ch {
            'x' => Ok(Letter::plain(0)),
            'y' => Ok(Letter::plain(1)),
            'z' => Ok(Letter::plain(2)),
            other => Err(Error::Domain(format!("unknown generator {other:?}"))),
        })
        .collect::<Result<_>>()?;
    Ok(parity_of_word(&letters))
}

/// Parity of a word over an involutive alphabet.
pub fn parity_of_word(word: &[Letter]) -> i32 {
    if reduce(word, true).len() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fuchsian_triangle_presentation() {
        let sig = OrbifoldSignature::sphere(vec![2, 3, 7]).unwrap();
        let pres = presentation_fuchsian(&sig).unwrap();
        assert_eq!(pres.to_string(), "<a, b, c | a^2, b^3, c^7, a*b*c>");
    }

    #[test]
    fn fuchsian_genus2_presentation() {
        let sig = OrbifoldSignature::orientable_with_cones(2, vec![]).unwrap();
        let pres = presentation_fuchsian(&sig).unwrap();
        assert_eq!(pres.to_string(), "<a1, b1, a2, b2 | [a1,b1]*[a2,b2]>");
    }

    #[test]
    fn fuchsian_torus_one_cone() {
        let sig = OrbifoldSignature::orientable_with_cones(1, vec![5]).unwrap();
        let pres = presentation_fuchsian(&sig).unwrap();
        assert_eq!(pres.to_string(), "<a, b, c | c^5, [a,b]*c>");
    }

    #[test]
    fn fuchsian_rejects_mirrors() {
        let triangle = OrbifoldSignature::polygon(vec![2, 3, 7]).unwrap();
        assert!(presentation_fuchsian(&triangle).is_err());
    }

    #[test]
    fn coxeter_presentation_contents() {
        let pres = presentation_coxeter_triangle(2, 3, 7).unwrap();
        assert_eq!(
            pres.to_string(),
            "<x, y, z | x^2, y^2, z^2, (x*y)^2, (y*z)^3, (z*x)^7>"
        );
        for rel in pres.relators() {
            assert_eq!(rel.len() % 2, 0, "Coxeter relators have even length");
        }
        // after substituting the orders, all (2,2,2) relators have length <= 4
        let small = presentation_coxeter_triangle(2, 2, 2).unwrap();
        assert!(small.relators().iter().all(|r| r.len() <= 4));
        assert!(presentation_coxeter_triangle(1, 3, 7).is_err());
    }

    #[test]
    fn flattening_cases() {
        assert!(flattening_morphism_check(2, 3, 7).unwrap());
        assert!(flattening_morphism_check(3, 3, 4).unwrap());
        // bogus assignment a -> xy, b -> zy, c -> zx fails
        let (x, y, z) = (Letter::plain(0), Letter::plain(1), Letter::plain(2));
        let bogus: [Word; 3] = [vec![x, y], vec![z, y], vec![z, x]];
        assert!(!substitution_check(2, 3, 7, &bogus).unwrap());
    }

    #[test]
    fn parity_cases() {
        assert_eq!(parity_quotient("x").unwrap(), -1);
        assert_eq!(parity_quotient("xy").unwrap(), 1);
        assert_eq!(parity_quotient("xx").unwrap(), 1);
        assert_eq!(parity_quotient("xyzzyx").unwrap(), 1);
        assert!(parity_quotient("xw").is_err());
    }

    #[test]
    fn von_dyck_generator_images_have_even_parity() {
        for img in ["xy", "yz", "zx"] {
            assert_eq!(parity_quotient(img).unwrap(), 1);
        }
    }
}
