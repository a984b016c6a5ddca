//! Gram matrices of the bilinear form on truncated monomial spaces, exact
//! kernel computation, expansion in a basis, and the rank-1 divided-power
//! basis.
//!
//! Kernel ranks are computed by fraction-free elimination: each row is scaled
//! to a common Laurent-polynomial denominator (harmless for the right kernel)
//! and the forward sweep uses Bareiss steps with exact division, so entries
//! stay polynomial and normalization happens once per step.

use crate::cartan::{CartanMatrix, Weight};
use crate::diagrams::form_graph;
use crate::error::{AlgebraError, GramError};
use crate::scalar::{LaurentPoly, RatScalar};
use crate::straighten::Straightener;
use crate::word::{divided_power, embed_level, AlgElement, ZWord};

/// Which implementation of the bilinear form backs a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Algebraic,
    Graphical,
}

/// Evaluate the form on two elements with the chosen engine.
pub fn form_by_engine(
    cartan: &CartanMatrix,
    engine: Engine,
    x: &AlgElement,
    y: &AlgElement,
) -> RatScalar {
    match engine {
        Engine::Algebraic => Straightener::new(cartan).form_alg(x, y),
        Engine::Graphical => form_graph(cartan, x, y),
    }
}

/// The full pairing table of a list of words.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub row_basis: Vec<ZWord>,
    pub col_basis: Vec<ZWord>,
    pub entries: Vec<Vec<RatScalar>>,
    pub engine: Engine,
}

pub fn gram_matrix(cartan: &CartanMatrix, words: &[ZWord], engine: Engine) -> GramMatrix {
    let straightener = Straightener::new(cartan);
    let n = words.len();
    let mut entries = Vec::with_capacity(n);
    for r in 0..n {
        let xr = AlgElement::from_word(words[r].clone());
        let mut row = Vec::with_capacity(n);
        for c in 0..n {
            let yc = AlgElement::from_word(words[c].clone());
            let v = match engine {
                Engine::Algebraic => straightener.form_alg(&xr, &yc),
                Engine::Graphical => form_graph(cartan, &xr, &yc),
            };
            row.push(v);
        }
        entries.push(row);
    }
    GramMatrix {
        row_basis: words.to_vec(),
        col_basis: words.to_vec(),
        entries,
        engine,
    }
}

/// Exact rank and a spanning set of the right kernel, expressed over the
/// column basis. Kernel vectors are normalized so that their first nonzero
/// coefficient is 1.
pub fn kernel_rank(g: &GramMatrix) -> (usize, Vec<AlgElement>) {
    let rows = g.entries.len();
    let cols = g.col_basis.len();
    if cols == 0 {
        return (0, Vec::new());
    }
    // clear denominators row by row; row scaling preserves the right kernel
    let mut m: Vec<Vec<LaurentPoly>> = Vec::with_capacity(rows);
    for row in &g.entries {
        let mut lcm = LaurentPoly::one();
        for e in row {
            let den = e.denominator();
            let gcd = lcm.gcd(den);
            lcm = (&lcm * den).div_exact(&gcd).expect("gcd divides product");
        }
        m.push(
            row.iter()
                .map(|e| {
                    let factor = lcm.div_exact(e.denominator()).expect("lcm divisible");
                    e.numerator() * &factor
                })
                .collect(),
        );
    }
    // Bareiss fraction-free forward elimination
    let mut pivot_cols = Vec::new();
    let mut prev = LaurentPoly::one();
    let mut row_at = 0usize;
    for col in 0..cols {
        let pivot_row = (row_at..rows).find(|r| !m[*r][col].is_zero());
        let Some(pr) = pivot_row else { continue };
        m.swap(row_at, pr);
        let piv = m[row_at][col].clone();
        for r in (row_at + 1)..rows {
            let factor = m[r][col].clone();
            for c2 in 0..cols {
                let t = &(&piv * &m[r][c2]) - &(&factor * &m[row_at][c2]);
                m[r][c2] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = piv;
        pivot_cols.push(col);
        row_at += 1;
        if row_at == rows {
            break;
        }
    }
    let rank = pivot_cols.len();
    // back-substitute each free column over the fraction field
    let mut kernel = Vec::new();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut x = vec![RatScalar::zero(); cols];
        x[free] = RatScalar::one();
        for (t, &pc) in pivot_cols.iter().enumerate().rev() {
            let mut acc = RatScalar::zero();
            for c2 in (pc + 1)..cols {
                if !x[c2].is_zero() && !m[t][c2].is_zero() {
                    acc += &(&RatScalar::from_laurent(m[t][c2].clone()) * &x[c2]);
                }
            }
            if acc.is_zero() {
                continue;
            }
            let piv = RatScalar::from_laurent(m[t][pc].clone());
            x[pc] = -&acc.div(&piv).expect("pivot is nonzero");
        }
        // normalize: first nonzero coefficient becomes 1
        let lead = x.iter().find(|v| !v.is_zero()).cloned();
        if let Some(lead) = lead {
            let inv = lead.inv().expect("lead nonzero");
            for v in &mut x {
                *v *= &inv;
            }
        }
        let elem = AlgElement::from_terms(
            g.col_basis
                .iter()
                .cloned()
                .zip(x)
                .filter(|(_, c)| !c.is_zero()),
        );
        kernel.push(elem);
    }
    (rank, kernel)
}

/// All words of exactly `len` letters with the given weight whose letters
/// have levels inside the window. Fixing the length keeps the enumeration
/// multiset-based and the fibers finite.
pub fn enumerate_words_of_weight(
    cartan: &CartanMatrix,
    weight: &Weight,
    level_window: (i64, i64),
    len: usize,
) -> Vec<ZWord> {
    let mut letters = Vec::new();
    for n in level_window.0..=level_window.1 {
        for v in 0..cartan.rank() {
            letters.push((n, v));
        }
    }
    let mut multisets = Vec::new();
    let mut counts = vec![0usize; letters.len()];
    collect_multisets(
        &letters,
        weight,
        len,
        0,
        &mut counts,
        &Weight::zero(cartan.rank()),
        0,
        &mut multisets,
    );
    let mut words = Vec::new();
    for counts in multisets {
        let mut base = Vec::new();
        for (k, c) in counts.iter().enumerate() {
            for _ in 0..*c {
                base.push(letters[k]);
            }
        }
        permutations_unique(&base, &mut words);
    }
    words.sort();
    words.dedup();
    words
}

#[allow(clippy::too_many_arguments)]
fn collect_multisets(
    letters: &[(i64, usize)],
    target: &Weight,
    len: usize,
    idx: usize,
    counts: &mut Vec<usize>,
    acc: &Weight,
    used: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if idx == letters.len() {
        if used == len && acc == target {
            out.push(counts.clone());
        }
        return;
    }
    let (level, vertex) = letters[idx];
    let sign = if level.rem_euclid(2) == 0 { 1 } else { -1 };
    for c in 0..=(len - used) {
        counts[idx] = c;
        let mut next = acc.clone();
        next.coords[vertex] += sign * c as i64;
        collect_multisets(letters, target, len, idx + 1, counts, &next, used + c, out);
    }
    counts[idx] = 0;
}

fn permutations_unique(base: &[(i64, usize)], out: &mut Vec<ZWord>) {
    let mut sorted = base.to_vec();
    sorted.sort();
    loop {
        out.push(ZWord::from_pairs(&sorted));
        // next lexicographic permutation
        let Some(k) = (0..sorted.len().saturating_sub(1))
            .rev()
            .find(|&k| sorted[k] < sorted[k + 1])
        else {
            break;
        };
        let l = (k + 1..sorted.len())
            .rev()
            .find(|&l| sorted[l] > sorted[k])
            .unwrap();
        sorted.swap(k, l);
        sorted[k + 1..].reverse();
    }
}

/// Rank of the Gram matrix on every word of the given weight and length
/// inside the level window; refuses when the fiber exceeds `word_limit`.
pub fn quotient_dim(
    cartan: &CartanMatrix,
    weight: &Weight,
    level_window: (i64, i64),
    len: usize,
    word_limit: usize,
    engine: Engine,
) -> Result<usize, GramError> {
    let words = enumerate_words_of_weight(cartan, weight, level_window, len);
    if words.len() > word_limit {
        return Err(GramError::SizeGuard {
            count: words.len(),
            limit: word_limit,
        });
    }
    let g = gram_matrix(cartan, &words, engine);
    Ok(kernel_rank(&g).0)
}

/// Exact coefficients expressing `target` in the given basis, solving the
/// Gram system; fails when the basis block is singular or the target lies
/// outside the span modulo the kernel.
pub fn expand_in_basis(
    cartan: &CartanMatrix,
    target: &AlgElement,
    basis: &[AlgElement],
    engine: Engine,
) -> Result<Vec<RatScalar>, GramError> {
    let straightener = Straightener::new(cartan);
    let form = |x: &AlgElement, y: &AlgElement| match engine {
        Engine::Algebraic => straightener.form_alg(x, y),
        Engine::Graphical => form_graph(cartan, x, y),
    };
    let k = basis.len();
    let mut aug: Vec<Vec<RatScalar>> = Vec::with_capacity(k);
    for r in 0..k {
        let mut row: Vec<RatScalar> = (0..k).map(|c| form(&basis[r], &basis[c])).collect();
        row.push(form(&basis[r], target));
        aug.push(row);
    }
    // field Gaussian elimination on the augmented system
    for col in 0..k {
        let pivot = (col..k).find(|r| !aug[*r][col].is_zero());
        let Some(pr) = pivot else {
            return Err(GramError::SingularGram);
        };
        aug.swap(col, pr);
        let inv = aug[col][col].inv().expect("pivot nonzero");
        for c2 in col..=k {
            aug[col][c2] = &aug[col][c2] * &inv;
        }
        for r in 0..k {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c2 in col..=k {
                    let t = &aug[r][c2] - &(&f * &aug[col][c2]);
                    aug[r][c2] = t;
                }
            }
        }
    }
    let coeffs: Vec<RatScalar> = (0..k).map(|r| aug[r][k].clone()).collect();
    // residual check against the basis and the target's own weight components
    let mut residual = target.clone();
    for (b, c) in basis.iter().zip(&coeffs) {
        residual = residual.sub(&b.scale(c));
    }
    let mut probes: Vec<AlgElement> = basis.to_vec();
    probes.extend(weight_components(cartan, target));
    for p in &probes {
        if !form(p, &residual).is_zero() {
            return Err(GramError::Inconsistent);
        }
    }
    Ok(coeffs)
}

fn weight_components(cartan: &CartanMatrix, x: &AlgElement) -> Vec<AlgElement> {
    let mut by_weight: std::collections::BTreeMap<Vec<i64>, AlgElement> = Default::default();
    for (w, c) in x.terms() {
        let wt = w.weight(cartan).coords;
        by_weight
            .entry(wt)
            .or_insert_with(AlgElement::zero)
            .add_term(w.clone(), c.clone());
    }
    by_weight.into_values().collect()
}

/// All products of divided powers across the given levels with exponents up
/// to `max_power`, for a rank-1 matrix; returned straightened (the ascending
/// level order keeps them reduced) and sorted by their underlying word.
pub fn sz_basis_sl2(
    cartan: &CartanMatrix,
    levels: &[i64],
    max_power: u32,
) -> Result<Vec<AlgElement>, AlgebraError> {
    if cartan.rank() != 1 {
        return Err(AlgebraError::NotRankOne(cartan.rank()));
    }
    let mut levels = levels.to_vec();
    levels.sort_unstable();
    levels.dedup();
    let mut out = Vec::new();
    let mut exponents = vec![0u32; levels.len()];
    loop {
        let mut elem = AlgElement::one();
        for (idx, &n) in levels.iter().enumerate() {
            let dp = divided_power(cartan, 0, 0, exponents[idx]);
            elem = elem.multiply(&embed_level(n, &dp).expect("level-0 input"));
        }
        out.push(elem);
        // odometer over exponent tuples
        let mut k = 0;
        loop {
            if k == exponents.len() {
                break;
            }
            if exponents[k] < max_power {
                exponents[k] += 1;
                break;
            }
            exponents[k] = 0;
            k += 1;
        }
        if k == exponents.len() {
            break;
        }
    }
    out.sort_by(|a, b| {
        let wa = a.terms().next().map(|(w, _)| w.clone()).unwrap_or_default();
        let wb = b.terms().next().map(|(w, _)| w.clone()).unwrap_or_default();
        wa.cmp(&wb)
    });
    Ok(out)
}
