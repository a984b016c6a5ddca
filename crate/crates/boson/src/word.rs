//! The free algebra on generators indexed by a vertex and an integer level:
//! words, linear combinations, gradings, and the level-shift symmetries.

use std::collections::BTreeMap;
use std::fmt;

use crate::cartan::{CartanMatrix, Weight};
use crate::error::AlgebraError;
use crate::scalar::{print_scalar_coeff, RatScalar};

/// A single generator occurrence: vertex index paired with an integer level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZLetter {
    pub level: i64,
    pub vertex: usize,
}

impl ZLetter {
    pub fn new(level: i64, vertex: usize) -> Self {
        ZLetter { level, vertex }
    }
}

/// A monomial: a finite ordered sequence of letters. The empty word is the
/// multiplicative unit.
///
/// Words order by length first, then lexicographically on (level, vertex);
/// this keeps element term maps deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZWord(pub Vec<ZLetter>);

impl PartialOrd for ZWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ZWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl ZWord {
    pub fn empty() -> Self {
        ZWord(Vec::new())
    }

    pub fn single(level: i64, vertex: usize) -> Self {
        ZWord(vec![ZLetter::new(level, vertex)])
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        ZWord(pairs.iter().map(|&(l, v)| ZLetter::new(l, v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &ZWord) -> ZWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ZWord(v)
    }

    pub fn reversed(&self) -> ZWord {
        let mut v = self.0.clone();
        v.reverse();
        ZWord(v)
    }

    /// Levels weakly increasing left to right.
    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0].level <= w[1].level)
    }

    /// Levels weakly decreasing left to right.
    pub fn is_coreduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0].level >= w[1].level)
    }

    /// The Z[I]-grading: each letter contributes (-1)^level * alpha_vertex.
    pub fn weight(&self, cartan: &CartanMatrix) -> Weight {
        let mut w = Weight::zero(cartan.rank());
        for l in &self.0 {
            let sign = if l.level.rem_euclid(2) == 0 { 1 } else { -1 };
            w.coords[l.vertex] += sign;
        }
        w
    }

    /// The single level carried by every letter, if the word is homogeneous
    /// in level. The empty word matches any level.
    pub fn uniform_level(&self) -> Result<Option<i64>, AlgebraError> {
        let mut seen: Option<i64> = None;
        for l in &self.0 {
            match seen {
                None => seen = Some(l.level),
                Some(n) if n != l.level => return Err(AlgebraError::MixedLevels(n, l.level)),
                _ => {}
            }
        }
        Ok(seen)
    }
}

/// A finite linear combination of words with coefficients in Q(q).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgElement {
    terms: BTreeMap<ZWord, RatScalar>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_word(ZWord::empty())
    }

    pub fn from_word(w: ZWord) -> Self {
        Self::from_term(w, RatScalar::one())
    }

    pub fn from_term(w: ZWord, c: RatScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ZWord, RatScalar)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: ZWord, c: RatScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ZWord, &RatScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &ZWord) -> RatScalar {
        self.terms.get(w).cloned().unwrap_or_else(RatScalar::zero)
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        self.add(&other.scale(&(-&RatScalar::one())))
    }

    pub fn scale(&self, c: &RatScalar) -> AlgElement {
        if c.is_zero() {
            return AlgElement::zero();
        }
        AlgElement {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Free product: bilinear extension of word concatenation.
    pub fn multiply(&self, other: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// The common weight of all terms, or an error if terms mix weights.
    /// `None` for the zero element.
    pub fn weight(&self, cartan: &CartanMatrix) -> Result<Option<Weight>, AlgebraError> {
        let mut seen: Option<Weight> = None;
        for w in self.terms.keys() {
            let wt = w.weight(cartan);
            match &seen {
                None => seen = Some(wt),
                Some(prev) if *prev != wt => {
                    return Err(AlgebraError::MixedLevels(0, 0));
                }
                _ => {}
            }
        }
        Ok(seen)
    }

    /// Check that every vertex index is valid for the given matrix.
    pub fn check_context(&self, cartan: &CartanMatrix) -> Result<(), AlgebraError> {
        for w in self.terms.keys() {
            for l in &w.0 {
                if l.vertex >= cartan.rank() {
                    return Err(AlgebraError::VertexOutOfRange {
                        vertex: l.vertex,
                        rank: cartan.rank(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// The q-antilinear antiautomorphism fixing generators: reverses every word
/// and bar-conjugates every coefficient.
pub fn bar_map(x: &AlgElement) -> AlgElement {
    AlgElement::from_terms(x.terms().map(|(w, c)| (w.reversed(), c.bar())))
}

/// The q-antilinear antiautomorphism shifting levels up: reverses words,
/// increments every level, bar-conjugates coefficients.
pub fn d_map(x: &AlgElement) -> AlgElement {
    AlgElement::from_terms(x.terms().map(|(w, c)| {
        let shifted = ZWord(
            w.reversed()
                .0
                .iter()
                .map(|l| ZLetter::new(l.level + 1, l.vertex))
                .collect(),
        );
        (shifted, c.bar())
    }))
}

/// The q-linear automorphism shifting levels up; equals bar_map composed with
/// d_map.
pub fn dbar_map(x: &AlgElement) -> AlgElement {
    AlgElement::from_terms(x.terms().map(|(w, c)| {
        let shifted = ZWord(
            w.0.iter()
                .map(|l| ZLetter::new(l.level + 1, l.vertex))
                .collect(),
        );
        (shifted, c.clone())
    }))
}

/// The embedding of the level-free positive algebra at level `n`: input is
/// given at level 0, output has every letter at level `n`.
pub fn embed_level(n: i64, x: &AlgElement) -> Result<AlgElement, AlgebraError> {
    let mut out = AlgElement::zero();
    for (w, c) in x.terms() {
        for l in &w.0 {
            if l.level != 0 {
                return Err(AlgebraError::WrongLevel {
                    expected: 0,
                    found: l.level,
                });
            }
        }
        let shifted = ZWord(w.0.iter().map(|l| ZLetter::new(n, l.vertex)).collect());
        out.add_term(shifted, c.clone());
    }
    Ok(out)
}

/// A letter of the two-generator presentation: either an `E` or an `F` at a
/// vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BosonLetter {
    E(usize),
    F(usize),
}

/// The embedding of boson words: E_i at level 0, F_i at level 1, order kept.
pub fn embed_boson(word: &[BosonLetter]) -> ZWord {
    ZWord(
        word.iter()
            .map(|l| match l {
                BosonLetter::E(i) => ZLetter::new(0, *i),
                BosonLetter::F(i) => ZLetter::new(1, *i),
            })
            .collect(),
    )
}

/// The quantum Serre element at level `n`:
/// sum_k (-1)^k [1-C_ij choose k]_i E_i^k E_j E_i^(1-C_ij-k), all letters at
/// level n.
pub fn serre_element(
    cartan: &CartanMatrix,
    i: usize,
    j: usize,
    n: i64,
) -> Result<AlgElement, AlgebraError> {
    if i == j {
        return Err(AlgebraError::SerreEqualVertices);
    }
    let m = (1 - cartan.entry(i, j)) as u32;
    let mut out = AlgElement::zero();
    for k in 0..=m {
        let binom = cartan.q_binom(i, m, k).expect("k in range");
        let sign = if k % 2 == 0 {
            RatScalar::one()
        } else {
            -&RatScalar::one()
        };
        let mut letters = Vec::with_capacity(m as usize + 1);
        for _ in 0..k {
            letters.push(ZLetter::new(n, i));
        }
        letters.push(ZLetter::new(n, j));
        for _ in 0..(m - k) {
            letters.push(ZLetter::new(n, i));
        }
        out.add_term(ZWord(letters), &sign * &binom);
    }
    Ok(out)
}

/// The divided power E_(i,n)^a / [a]_i!.
pub fn divided_power(cartan: &CartanMatrix, i: usize, n: i64, a: u32) -> AlgElement {
    let coeff = cartan
        .q_fact(i, a)
        .inv()
        .expect("q-factorial is nonzero");
    let word = ZWord(vec![ZLetter::new(n, i); a as usize]);
    AlgElement::from_term(word, coeff)
}

impl fmt::Display for ZWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // indices are printed when no label table is on hand
        write!(f, "[")?;
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}:#{}", l.level, l.vertex)?;
        }
        write!(f, "]")
    }
}

/// Print a word using the label table of a Cartan matrix, e.g. `[0:i,8:j]`.
pub fn print_word(w: &ZWord, cartan: &CartanMatrix) -> String {
    let mut out = String::from("[");
    for (k, l) in w.0.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!("{}:{}", l.level, cartan.label(l.vertex)));
    }
    out.push(']');
    out
}

/// Print an element in the text syntax, e.g.
/// `q^-2*[0:i,1:i] + (1/(1-q^2))*[]`.
pub fn print_element(x: &AlgElement, cartan: &CartanMatrix) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    // longest words first
    let mut pieces = Vec::new();
    for (w, c) in x.terms().collect::<Vec<_>>().into_iter().rev() {
        let ws = print_word(w, cartan);
        if c.is_one() {
            pieces.push(ws);
        } else {
            pieces.push(format!("{}*{}", print_scalar_coeff(c), ws));
        }
    }
    pieces.join(" + ")
}
