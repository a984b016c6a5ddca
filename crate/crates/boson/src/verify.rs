//! Seeded property suites over every module, shared by the command-line
//! `verify` subcommand and the acceptance tests. Each checker returns the
//! number of instances tried together with descriptions of any failures; the
//! parameters control how hard each family is pushed.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cartan::{a2, b2, sl2, CartanMatrix, Weight};
use crate::diagrams::{enumerate_matchings, form_graph, grdim_hom_a2, Boundary};
use crate::gram::{
    enumerate_words_of_weight, expand_in_basis, gram_matrix, kernel_rank, quotient_dim,
    sz_basis_sl2, Engine,
};
use crate::klr::{
    all_perms, boson_grdim_identity, sequences_of_content, KlrAlgebra, KlrBasisElement,
    KlrElement, KlrScalar,
};
use crate::lusztig::form_lusztig;
use crate::scalar::{LaurentPoly, RatScalar};
use crate::straighten::Straightener;
use crate::word::{
    bar_map, dbar_map, divided_power, embed_level, serre_element, AlgElement, ZLetter, ZWord,
};

/// Outcome of one checker: instances tried and failure descriptions.
#[derive(Debug, Default, Clone)]
pub struct CheckResult {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn pass(&mut self) {
        self.checks += 1;
    }

    pub fn fail(&mut self, msg: impl Into<String>) {
        self.checks += 1;
        if self.failures.len() < 20 {
            self.failures.push(msg.into());
        } else if self.failures.len() == 20 {
            self.failures.push("... more failures suppressed".into());
        }
    }

    pub fn record(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(msg())
        }
    }

    pub fn merge(&mut self, other: CheckResult) {
        self.checks += other.checks;
        for f in other.failures {
            if self.failures.len() <= 20 {
                self.failures.push(f);
            }
        }
    }
}

/// Report for one named suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

// ---------------------------------------------------------------- words ---

/// All words over the given levels and every vertex, of length exactly `len`.
pub fn all_words(cartan: &CartanMatrix, levels: &[i64], len: usize) -> Vec<ZWord> {
    let mut letters = Vec::new();
    for &n in levels {
        for v in 0..cartan.rank() {
            letters.push(ZLetter::new(n, v));
        }
    }
    let mut out = vec![ZWord::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    ZWord(v)
                })
            })
            .collect();
    }
    out
}

/// All words over the given levels of length at most `max_len`.
pub fn all_words_up_to(cartan: &CartanMatrix, levels: &[i64], max_len: usize) -> Vec<ZWord> {
    (0..=max_len)
        .flat_map(|len| all_words(cartan, levels, len))
        .collect()
}

pub fn random_word(
    rng: &mut ChaCha8Rng,
    cartan: &CartanMatrix,
    len: usize,
    levels: &[i64],
) -> ZWord {
    ZWord(
        (0..len)
            .map(|_| {
                ZLetter::new(
                    levels[rng.gen_range(0..levels.len())],
                    rng.gen_range(0..cartan.rank()),
                )
            })
            .collect(),
    )
}

fn random_scalar(rng: &mut ChaCha8Rng) -> RatScalar {
    let mut p = LaurentPoly::zero();
    for _ in 0..2 {
        p.add_term(rng.gen_range(-2..3), num_bigint::BigInt::from(rng.gen_range(-3i64..4)));
    }
    if p.is_zero() {
        p = LaurentPoly::one();
    }
    RatScalar::from_laurent(p)
}

fn random_element(
    rng: &mut ChaCha8Rng,
    cartan: &CartanMatrix,
    terms: usize,
    max_len: usize,
    levels: &[i64],
) -> AlgElement {
    let mut e = AlgElement::zero();
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_len);
        e.add_term(random_word(rng, cartan, len, levels), random_scalar(rng));
    }
    e
}

// ---------------------------------------------------------------- forms ---

/// The worked-example regression: both engines give
/// (2+q_i^-2)/((1-q_i^2)^3 (1-q_j^2)).
pub fn check_worked_example(cartan: &CartanMatrix) -> CheckResult {
    let mut r = CheckResult::default();
    let x = AlgElement::from_word(ZWord::from_pairs(&[(0, 0), (8, 1), (1, 0), (2, 0)]));
    let y = AlgElement::from_word(ZWord::from_pairs(&[(2, 0), (1, 0), (0, 0), (8, 1)]));
    let di = cartan.sym(0);
    let dj = cartan.sym(1);
    let expected = &(&(&RatScalar::from_int(2) + &RatScalar::q_power(-2 * di))
        * &RatScalar::one_over_one_minus_q2d(di).pow(3).unwrap())
        * &RatScalar::one_over_one_minus_q2d(dj);
    let graph = form_graph(cartan, &x, &y);
    r.record(graph == expected, || {
        format!("graphical worked example: got {}", graph)
    });
    let alg = Straightener::new(cartan).form_alg(&x, &y);
    r.record(alg == expected, || {
        format!("algebraic worked example: got {}", alg)
    });
    r
}

/// Every equal-weight monomial pair up to a total length bound: the two form
/// engines agree exactly.
pub fn check_dual_oracle(
    cartan: &CartanMatrix,
    levels: &[i64],
    max_total_len: usize,
) -> CheckResult {
    let mut r = CheckResult::default();
    let words = all_words_up_to(cartan, levels, max_total_len);
    // bucket words by weight so only candidate pairs are formed
    let mut buckets: std::collections::BTreeMap<Vec<i64>, Vec<&ZWord>> = Default::default();
    for w in &words {
        buckets.entry(w.weight(cartan).coords).or_default().push(w);
    }
    for group in buckets.values() {
        let straightener = Straightener::new(cartan);
        for &x in group {
            for &y in group {
                if x.len() + y.len() > max_total_len {
                    continue;
                }
                let ex = AlgElement::from_word(x.clone());
                let ey = AlgElement::from_word(y.clone());
                let alg = straightener.form_alg(&ex, &ey);
                let graph = form_graph(cartan, &ex, &ey);
                r.record(alg == graph, || {
                    format!("dual oracle mismatch on {:?} vs {:?}", x, y)
                });
            }
        }
    }
    r
}

/// The twisted-derivation form agrees with both other engines on level-0
/// monomial pairs up to a per-word length bound.
pub fn check_triple_oracle(cartan: &CartanMatrix, max_len: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let words = all_words_up_to(cartan, &[0], max_len);
    let straightener = Straightener::new(cartan);
    for x in &words {
        for y in &words {
            if x.weight(cartan) != y.weight(cartan) {
                continue;
            }
            let ex = AlgElement::from_word(x.clone());
            let ey = AlgElement::from_word(y.clone());
            let lus = form_lusztig(cartan, &ex, &ey).expect("level 0");
            let alg = straightener.form_alg(&ex, &ey);
            let graph = form_graph(cartan, &ex, &ey);
            r.record(lus == alg && alg == graph, || {
                format!("triple oracle mismatch on {:?} vs {:?}", x, y)
            });
        }
    }
    r
}

/// Level invariance of the single-level form: the value at level n equals the
/// value at level 0.
pub fn check_level_invariance(cartan: &CartanMatrix, max_len: usize, level: i64) -> CheckResult {
    let mut r = CheckResult::default();
    let words = all_words_up_to(cartan, &[0], max_len);
    for x in &words {
        for y in &words {
            if x.weight(cartan) != y.weight(cartan) {
                continue;
            }
            let ex = AlgElement::from_word(x.clone());
            let ey = AlgElement::from_word(y.clone());
            let base = form_lusztig(cartan, &ex, &ey).expect("level 0");
            let sx = embed_level(level, &ex).unwrap();
            let sy = embed_level(level, &ey).unwrap();
            let shifted = form_lusztig(cartan, &sx, &sy).expect("uniform level");
            r.record(base == shifted, || {
                format!("level invariance failed on {:?} vs {:?}", x, y)
            });
        }
    }
    r
}

/// The form axioms, each on `instances` seeded random inputs:
/// q-semilinearity, symmetry of the barred form, weight orthogonality, shift
/// invariance, both adjunctions, and the two-block factorization identity.
pub fn check_form_axioms(cartan: &CartanMatrix, seed: u64, instances: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let straightener = Straightener::new(cartan);
    let levels = [-1, 0, 1, 2];
    let q = RatScalar::q_power(1);
    for _ in 0..instances {
        let x = random_element(&mut rng, cartan, 2, 3, &levels);
        let y = random_element(&mut rng, cartan, 2, 3, &levels);
        // q-semilinearity
        let qx = x.scale(&q);
        let qy = y.scale(&q);
        let base = straightener.form_alg(&x, &y);
        let left = straightener.form_alg(&qx, &y);
        let right = straightener.form_alg(&x, &qy);
        r.record(
            left == base.div(&q).unwrap() && right == &base * &q,
            || "q-semilinearity failed".to_string(),
        );
        // symmetry of the barred form
        let s1 = straightener.form_alg(&bar_map(&x), &y);
        let s2 = straightener.form_alg(&bar_map(&y), &x);
        r.record(s1 == s2, || "barred-form symmetry failed".to_string());
        // shift invariance
        let d1 = straightener.form_alg(&dbar_map(&x), &dbar_map(&y));
        r.record(d1 == base, || "shift invariance failed".to_string());
        // weight orthogonality on monomials
        let len_x = rng.gen_range(0..=3);
        let wx = random_word(&mut rng, cartan, len_x, &levels);
        let len_y = rng.gen_range(0..=3);
        let wy = random_word(&mut rng, cartan, len_y, &levels);
        if wx.weight(cartan) != wy.weight(cartan) {
            let v = straightener.form_alg(
                &AlgElement::from_word(wx.clone()),
                &AlgElement::from_word(wy.clone()),
            );
            r.record(v.is_zero(), || {
                format!("weight orthogonality failed on {:?} vs {:?}", wx, wy)
            });
        } else {
            r.pass();
        }
        // adjunctions
        let i = rng.gen_range(0..cartan.rank());
        let n = rng.gen_range(-1..2);
        let gen_low = AlgElement::from_word(ZWord::single(n, i));
        let gen_high = AlgElement::from_word(ZWord::single(n + 1, i));
        let lhs = straightener.form_alg(&gen_low.multiply(&x), &y);
        let rhs = straightener.form_alg(&x, &gen_high.multiply(&y));
        r.record(lhs == rhs, || "left adjunction failed".to_string());
        let gen_lower = AlgElement::from_word(ZWord::single(n - 1, i));
        let lhs = straightener.form_alg(&x.multiply(&gen_low), &y);
        let rhs = straightener.form_alg(&x, &y.multiply(&gen_lower));
        r.record(lhs == rhs, || "right adjunction failed".to_string());
        // factorization across the level split at m = 0
        let lens: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=2)).collect();
        let xw = random_word(&mut rng, cartan, lens[0], &[1, 2]);
        let ww = random_word(&mut rng, cartan, lens[1], &[1, 2]);
        let yw = random_word(&mut rng, cartan, lens[2], &[-1, 0]);
        let zw = random_word(&mut rng, cartan, lens[3], &[-1, 0]);
        let ex = AlgElement::from_word(xw.clone());
        let ew = AlgElement::from_word(ww.clone());
        let ey = AlgElement::from_word(yw.clone());
        let ez = AlgElement::from_word(zw.clone());
        let lhs = straightener.form_alg(&ex.multiply(&ey), &ez.multiply(&ew));
        let pairing = cartan.weight_form(&xw.weight(cartan), &zw.weight(cartan));
        let rhs = &(&RatScalar::q_power(-pairing) * &straightener.form_alg(&ex, &ew))
            * &straightener.form_alg(&ey, &ez);
        r.record(lhs == rhs, || {
            format!(
                "factorization failed on X={:?} Y={:?} Z={:?} W={:?}",
                xw, yw, zw, ww
            )
        });
    }
    r
}

/// The graphical engine's own symmetries: adjunction, shift invariance,
/// weight orthogonality, and the level-{0,1} horizontal flip.
pub fn check_graphical_axioms(cartan: &CartanMatrix, seed: u64, instances: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let levels = [-1, 0, 1, 2];
    for _ in 0..instances {
        let len_x = rng.gen_range(0..=3);
        let x = AlgElement::from_word(random_word(&mut rng, cartan, len_x, &levels));
        let len_y = rng.gen_range(0..=3);
        let y = AlgElement::from_word(random_word(&mut rng, cartan, len_y, &levels));
        let i = rng.gen_range(0..cartan.rank());
        let n = rng.gen_range(-1..2);
        let gen_low = AlgElement::from_word(ZWord::single(n, i));
        let gen_high = AlgElement::from_word(ZWord::single(n + 1, i));
        let lhs = form_graph(cartan, &gen_low.multiply(&x), &y);
        let rhs = form_graph(cartan, &x, &gen_high.multiply(&y));
        r.record(lhs == rhs, || "graphical adjunction failed".to_string());
        let base = form_graph(cartan, &x, &y);
        r.record(
            form_graph(cartan, &dbar_map(&x), &dbar_map(&y)) == base,
            || "graphical shift invariance failed".to_string(),
        );
        // horizontal flip on levels {0,1}
        let len_fx = rng.gen_range(0..=3);
        let wx = random_word(&mut rng, cartan, len_fx, &[0, 1]);
        let len_fy = rng.gen_range(0..=3);
        let wy = random_word(&mut rng, cartan, len_fy, &[0, 1]);
        let flip = |w: &ZWord| {
            ZWord(
                w.reversed()
                    .0
                    .iter()
                    .map(|l| ZLetter::new(1 - l.level, l.vertex))
                    .collect(),
            )
        };
        let v1 = form_graph(
            cartan,
            &AlgElement::from_word(wx.clone()),
            &AlgElement::from_word(wy.clone()),
        );
        let v2 = form_graph(
            cartan,
            &AlgElement::from_word(flip(&wx)),
            &AlgElement::from_word(flip(&wy)),
        );
        r.record(v1 == v2, || {
            format!("horizontal flip failed on {:?} vs {:?}", wx, wy)
        });
    }
    r
}

/// Serre elements lie in the kernel: (Z, W s W') = 0 for context words up to
/// `ctx_len` and probes of matching weight up to length `probe_len`.
///
/// All probes of one product are evaluated along a shared prefix trie: one
/// straightening step per trie node instead of one per probe letter, with
/// terms dropped as soon as their length exceeds the remaining peel budget.
pub fn check_serre_kernel(
    cartan: &CartanMatrix,
    ctx_len: usize,
    probe_len: usize,
    levels_n: &[i64],
) -> CheckResult {
    let mut r = CheckResult::default();
    let straightener = Straightener::new(cartan);
    let contexts = all_words_up_to(cartan, &[0, 1], ctx_len);
    let mut fibers: std::collections::HashMap<(Vec<i64>, usize), Vec<ZWord>> = Default::default();
    for i in 0..cartan.rank() {
        for j in 0..cartan.rank() {
            if i == j {
                continue;
            }
            for &n in levels_n {
                let serre = serre_element(cartan, i, j, n).unwrap();
                for w1 in &contexts {
                    for w2 in &contexts {
                        let mid = AlgElement::from_word(w1.clone())
                            .multiply(&serre)
                            .multiply(&AlgElement::from_word(w2.clone()));
                        let target_weight = mid
                            .weight(cartan)
                            .expect("uniform weight")
                            .expect("nonzero");
                        let reduced = straightener.straighten(&mid);
                        if reduced.is_zero() {
                            r.pass();
                            continue;
                        }
                        let mut probes: Vec<ZWord> = Vec::new();
                        for len in 0..=probe_len {
                            let fiber = fibers
                                .entry((target_weight.coords.clone(), len))
                                .or_insert_with(|| {
                                    enumerate_words_of_weight(cartan, &target_weight, (0, 1), len)
                                });
                            probes.extend(fiber.iter().cloned());
                        }
                        if probes.is_empty() {
                            r.pass();
                            continue;
                        }
                        probes.sort_by(|a, b| a.0.cmp(&b.0));
                        let info = format!("W={:?} W'={:?} i={} j={} n={}", w1, w2, i, j, n);
                        peel_probe_trie(&straightener, &probes, 0, &reduced, &info, &mut r);
                    }
                }
            }
        }
    }
    r
}

/// Recursive trie walk over probes sharing a common applied prefix.
fn peel_probe_trie(
    straightener: &Straightener,
    probes: &[ZWord],
    depth: usize,
    cur: &AlgElement,
    info: &str,
    r: &mut CheckResult,
) {
    let mut at = 0;
    while at < probes.len() {
        let z = &probes[at];
        if z.len() == depth {
            // this probe is fully applied
            let value = cur.coeff(&ZWord::empty());
            r.record(value.is_zero(), || {
                format!("serre kernel violated: Z={:?} {}", z, info)
            });
            at += 1;
            continue;
        }
        // group the probes extending the prefix by their next letter
        let letter = z.0[depth];
        let mut end = at;
        while end < probes.len() && probes[end].len() > depth && probes[end].0[depth] == letter {
            end += 1;
        }
        let group = &probes[at..end];
        let budget = group.iter().map(|p| p.len() - depth).max().unwrap();
        // a term can only reach the empty word if its length stays within
        // the remaining peel budget and matches its parity
        let pruned = AlgElement::from_terms(cur.terms().filter_map(|(w, c)| {
            if w.len() <= budget && (budget - w.len()) % 2 == 0 {
                Some((w.clone(), c.clone()))
            } else {
                None
            }
        }));
        if !pruned.is_zero() {
            let gen = AlgElement::from_word(ZWord::single(letter.level + 1, letter.vertex));
            let next = straightener.straighten(&gen.multiply(&pruned));
            peel_probe_trie(straightener, group, depth + 1, &next, info, r);
        } else {
            // nothing left that could reach the empty word: all zero
            for _ in group {
                r.pass();
            }
        }
        at = end;
    }
}

/// Lusztig-side vanishing rows against each Serre element.
pub fn check_serre_rows_lusztig(cartan: &CartanMatrix) -> CheckResult {
    let mut r = CheckResult::default();
    for i in 0..cartan.rank() {
        for j in 0..cartan.rank() {
            if i == j {
                continue;
            }
            let serre = serre_element(cartan, i, j, 0).unwrap();
            let weight = serre.weight(cartan).unwrap().unwrap();
            let len = (2 - cartan.entry(i, j)) as usize;
            let probes = enumerate_words_of_weight(cartan, &weight, (0, 0), len);
            let row = crate::lusztig::serre_pairing_row(cartan, i, j, 0, &probes).unwrap();
            for (z, v) in probes.iter().zip(&row.values) {
                r.record(v.is_zero(), || {
                    format!("lusztig serre row nonzero at {:?}", z)
                });
            }
        }
    }
    r
}

/// Strategy independence of straightening: exhaustive up to
/// `exhaustive_len` over the given levels, plus seeded random words.
pub fn check_confluence(
    cartan: &CartanMatrix,
    levels: &[i64],
    exhaustive_len: usize,
    trials: u32,
    random_words: usize,
    random_len: usize,
    seed: u64,
) -> CheckResult {
    let mut r = CheckResult::default();
    // group words by letter multiset: rewriting stays inside a multiset
    // family, so a per-group memo gets full reuse at bounded memory
    let mut groups: std::collections::BTreeMap<Vec<ZLetter>, Vec<ZWord>> = Default::default();
    for w in all_words_up_to(cartan, levels, exhaustive_len) {
        let mut key = w.0.clone();
        key.sort_unstable();
        groups.entry(key).or_default().push(w);
    }
    for group in groups.values() {
        let straightener = Straightener::new(cartan);
        for w in group {
            let x = AlgElement::from_word(w.clone());
            r.record(straightener.confluence_check(&x, trials, seed), || {
                format!("confluence failed on {:?}", w)
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..random_words {
        let len = rng.gen_range(0..=random_len);
        let w = random_word(&mut rng, cartan, len, levels);
        let x = AlgElement::from_word(w.clone());
        let straightener = Straightener::new(cartan);
        r.record(straightener.confluence_check(&x, trials, seed), || {
            format!("confluence failed on random word {:?}", w)
        });
    }
    r
}

/// The canonical crossing-label table and the alternative leg choice give the
/// same total degree on every matching of the given boundaries.
pub fn check_degree_well_defined(cartan: &CartanMatrix, boundaries: &[Boundary]) -> CheckResult {
    let mut r = CheckResult::default();
    for b in boundaries {
        for m in enumerate_matchings(b) {
            let canonical = m.degree(cartan);
            let alternative = m.degree_alternative(cartan);
            r.record(canonical == alternative, || {
                format!(
                    "degree mismatch {} vs {} on a matching of {:?} -> {:?}",
                    canonical, alternative, b.bottom, b.top
                )
            });
        }
    }
    r
}

/// The standard degree-check corpus: every equal-weight boundary up to total
/// length 6 over the given levels, plus seeded random boundaries up to
/// total length 8.
pub fn degree_corpus(cartan: &CartanMatrix, levels: &[i64], seed: u64, extra: usize) -> Vec<Boundary> {
    let mut out = Vec::new();
    let words = all_words_up_to(cartan, levels, 3);
    for x in &words {
        for y in &words {
            if x.len() + y.len() <= 6 && x.weight(cartan) == y.weight(cartan) {
                out.push(Boundary::new(x.clone(), y.clone()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..extra {
        let total = rng.gen_range(7..=8);
        let split = rng.gen_range(0..=total);
        out.push(Boundary::new(
            random_word(&mut rng, cartan, split, levels),
            random_word(&mut rng, cartan, total - split, levels),
        ));
    }
    out
}

// ----------------------------------------------------------------- klr ----

/// Relations of the quiver Hecke presentation, checked as identities of
/// normal forms over every sequence of each content with |alpha| <= bound.
pub fn check_klr_relations(cartan: &CartanMatrix, max_alpha: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let alg = KlrAlgebra::with_defaults(cartan);
    let contents = contents_up_to(cartan.rank(), max_alpha);
    for counts in &contents {
        let n: usize = counts.iter().sum();
        if n == 0 {
            continue;
        }
        let seqs = sequences_of_content(counts);
        // relation 1: orthogonal idempotents summing to the block identity
        for s1 in &seqs {
            for s2 in &seqs {
                let p = alg
                    .multiply(&alg.idempotent(s1), &alg.idempotent(s2))
                    .unwrap();
                let expected = if s1 == s2 {
                    alg.idempotent(s1)
                } else {
                    KlrElement::zero()
                };
                r.record(p == expected, || format!("relation 1 failed on {:?}", s1));
            }
        }
        let unit = alg.unit(counts);
        for seq in &seqs {
            for k in 0..n {
                let x = alg.dot(k, seq);
                // relation 2: dots commute with idempotents
                let left = alg.multiply(&alg.idempotent(seq), &x).unwrap();
                let right = alg.multiply(&x, &alg.idempotent(seq)).unwrap();
                r.record(left == x && right == x, || {
                    format!("relation 2 failed on {:?}", seq)
                });
                // two-sided identity
                let u1 = alg.multiply(&unit, &x).unwrap();
                let u2 = alg.multiply(&x, &unit).unwrap();
                r.record(u1 == x && u2 == x, || {
                    format!("identity decomposition failed on {:?}", seq)
                });
                // relation 4: dots commute
                for k2 in 0..n {
                    let y = alg.dot(k2, seq);
                    let a = alg.multiply(&x, &y).unwrap();
                    let b = alg.multiply(&y, &x).unwrap();
                    r.record(a == b, || format!("relation 4 failed on {:?}", seq));
                }
            }
            for c in 0..n.saturating_sub(1) {
                let tau = alg.crossing(c, seq);
                let mut swapped = seq.clone();
                swapped.swap(c, c + 1);
                // relation 3: idempotent slides through a crossing
                let left = alg.multiply(&alg.idempotent(&swapped), &tau).unwrap();
                let right = alg.multiply(&tau, &alg.idempotent(seq)).unwrap();
                r.record(left == tau.clone() && right == tau, || {
                    format!("relation 3 failed on {:?}", seq)
                });
                // relation 5: dot sliding with its corrections
                let delta = seq[c] == seq[c + 1];
                for (jpos, spos, sign) in
                    [(c + 1, c, 1i64), (c, c + 1, -1i64)]
                {
                    let tau = alg.crossing(c, seq);
                    let xj = alg.dot(jpos, seq);
                    let xs = alg.dot(spos, &swapped);
                    let lhs = alg
                        .multiply(&tau, &xj)
                        .unwrap()
                        .sub(&alg.multiply(&xs, &tau).unwrap());
                    let expected = if delta {
                        alg.idempotent(seq)
                            .scale(&KlrScalar::from_integer(sign.into()))
                    } else {
                        KlrElement::zero()
                    };
                    r.record(lhs == expected, || {
                        format!("relation 5 failed on {:?} at {}", seq, c)
                    });
                }
                // neutral dots far from the crossing commute through it
                for far in 0..n {
                    if far == c || far == c + 1 {
                        continue;
                    }
                    let tau = alg.crossing(c, seq);
                    let xf = alg.dot(far, seq);
                    let xf2 = alg.dot(far, &swapped);
                    let a = alg.multiply(&tau, &xf).unwrap();
                    let b = alg.multiply(&xf2, &tau).unwrap();
                    r.record(a == b, || {
                        format!("relation 5 (distant dot) failed on {:?}", seq)
                    });
                }
                // relation 7: the crossing squares to Q
                let tau_back = alg.crossing(c, &swapped);
                let tau = alg.crossing(c, seq);
                let square = alg.multiply(&tau_back, &tau).unwrap();
                let q = crate::klr::q_polynomial(
                    cartan,
                    &crate::klr::KlrParams::default_for(cartan),
                    seq[c],
                    seq[c + 1],
                )
                .unwrap();
                let mut expected = KlrElement::zero();
                for (&(pu, pv), qc) in q.terms() {
                    let mut b = KlrBasisElement::idempotent(seq.clone());
                    b.dots[c] = pu;
                    b.dots[c + 1] = pv;
                    expected.add_term(b, qc.clone());
                }
                r.record(square == expected, || {
                    format!("relation 7 failed on {:?} at {}", seq, c)
                });
            }
            // relation 6: distant crossings commute
            for c1 in 0..n.saturating_sub(1) {
                for c2 in (c1 + 2)..n.saturating_sub(1).max(c1 + 2) {
                    if c2 >= n - 1 {
                        continue;
                    }
                    let s1 = {
                        let mut s = seq.clone();
                        s.swap(c1, c1 + 1);
                        s
                    };
                    let s2 = {
                        let mut s = seq.clone();
                        s.swap(c2, c2 + 1);
                        s
                    };
                    let a = alg
                        .multiply(&alg.crossing(c1, &s2), &alg.crossing(c2, seq))
                        .unwrap();
                    let b = alg
                        .multiply(&alg.crossing(c2, &s1), &alg.crossing(c1, seq))
                        .unwrap();
                    r.record(a == b, || format!("relation 6 failed on {:?}", seq));
                }
            }
            // relation 8: the braid identity with its correction term
            for c in 0..n.saturating_sub(2) {
                let braid = check_braid_instance(&alg, cartan, seq, c);
                r.merge(braid);
            }
        }
    }
    r
}

fn check_braid_instance(
    alg: &KlrAlgebra,
    cartan: &CartanMatrix,
    seq: &[usize],
    c: usize,
) -> CheckResult {
    let mut r = CheckResult::default();
    let s_c = |s: &[usize], k: usize| {
        let mut s = s.to_vec();
        s.swap(k, k + 1);
        s
    };
    // tau_{c+1} tau_c tau_{c+1} 1_seq
    let a1 = s_c(seq, c + 1);
    let a2 = s_c(&a1, c);
    let lhs1 = alg
        .multiply(
            &alg.crossing(c + 1, &a2),
            &alg.multiply(&alg.crossing(c, &a1), &alg.crossing(c + 1, seq))
                .unwrap(),
        )
        .unwrap();
    // tau_c tau_{c+1} tau_c 1_seq
    let b1 = s_c(seq, c);
    let b2 = s_c(&b1, c + 1);
    let lhs2 = alg
        .multiply(
            &alg.crossing(c, &b2),
            &alg.multiply(&alg.crossing(c + 1, &b1), &alg.crossing(c, seq))
                .unwrap(),
        )
        .unwrap();
    let difference = lhs1.sub(&lhs2);
    let mut expected = KlrElement::zero();
    if seq[c] == seq[c + 2] {
        let q = crate::klr::q_polynomial(
            cartan,
            &crate::klr::KlrParams::default_for(cartan),
            seq[c],
            seq[c + 1],
        )
        .unwrap();
        for (&(pu, pv), qc) in q.terms() {
            for s in 0..pu {
                let mut b = KlrBasisElement::idempotent(seq.to_vec());
                b.dots[c + 2] += s;
                b.dots[c] += pu - 1 - s;
                b.dots[c + 1] += pv;
                expected.add_term(b, qc.clone());
            }
        }
    }
    r.record(difference == expected, || {
        format!("relation 8 failed on {:?} at {}", seq, c)
    });
    r
}

/// Distant-crossing commutation and the braid identity on four strands,
/// where they first become non-vacuous.
pub fn check_klr_relations_length4(cartan: &CartanMatrix) -> CheckResult {
    let mut r = CheckResult::default();
    let alg = KlrAlgebra::with_defaults(cartan);
    let contents: Vec<Vec<usize>> = contents_up_to(cartan.rank(), 4)
        .into_iter()
        .filter(|c| c.iter().sum::<usize>() == 4)
        .collect();
    for counts in &contents {
        for seq in sequences_of_content(counts) {
            // relation 6 with the only distant pair (0, 2)
            let s0 = {
                let mut s = seq.clone();
                s.swap(0, 1);
                s
            };
            let s2 = {
                let mut s = seq.clone();
                s.swap(2, 3);
                s
            };
            let a = alg
                .multiply(&alg.crossing(0, &s2), &alg.crossing(2, &seq))
                .unwrap();
            let b = alg
                .multiply(&alg.crossing(2, &s0), &alg.crossing(0, &seq))
                .unwrap();
            r.record(a == b, || format!("relation 6 failed on {:?}", seq));
            // braid instances at both windows
            for c in 0..2 {
                r.merge(check_braid_instance(&alg, cartan, &seq, c));
            }
        }
    }
    r
}

/// Random associativity checks at |alpha| <= 3.
pub fn check_klr_associativity(cartan: &CartanMatrix, seed: u64, triples: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let alg = KlrAlgebra::with_defaults(cartan);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let contents = contents_up_to(cartan.rank(), 3)
        .into_iter()
        .filter(|c| c.iter().sum::<usize>() == 3)
        .collect::<Vec<_>>();
    for _ in 0..triples {
        let counts = &contents[rng.gen_range(0..contents.len())];
        let seqs = sequences_of_content(counts);
        let perms = all_perms(3);
        let random_elem = |rng: &mut ChaCha8Rng| {
            let mut e = KlrElement::zero();
            for _ in 0..2 {
                e.add_term(
                    KlrBasisElement {
                        idem: seqs[rng.gen_range(0..seqs.len())].clone(),
                        perm: perms[rng.gen_range(0..perms.len())].clone(),
                        dots: vec![
                            rng.gen_range(0..2u32),
                            rng.gen_range(0..2u32),
                            rng.gen_range(0..2u32),
                        ],
                    },
                    KlrScalar::from_integer(rng.gen_range(-2i64..3).into()),
                );
            }
            e
        };
        let a = random_elem(&mut rng);
        let b = random_elem(&mut rng);
        let c = random_elem(&mut rng);
        let ab_c = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
        r.record(ab_c == a_bc, || "associativity failed".to_string());
    }
    r
}

/// The block graded dimension matches the admissible-matching Hom dimension
/// under the right-to-left reading of sequences, for all |alpha| <= bound.
pub fn check_decat_bridge(cartan: &CartanMatrix, max_alpha: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let alg = KlrAlgebra::with_defaults(cartan);
    for counts in contents_up_to(cartan.rank(), max_alpha) {
        let seqs = sequences_of_content(&counts);
        for si in &seqs {
            for sj in &seqs {
                let block = alg.grdim_block(si, sj);
                let src = ZWord(si.iter().rev().map(|&v| ZLetter::new(0, v)).collect());
                let tgt = ZWord(sj.iter().rev().map(|&v| ZLetter::new(0, v)).collect());
                let hom = grdim_hom_a2(cartan, &src, &tgt).unwrap().0;
                r.record(block == hom, || {
                    format!("bridge mismatch on {:?} vs {:?}", si, sj)
                });
            }
        }
    }
    r
}

/// The graded-dimension identity behind the boson relation, over the grid of
/// reduced level-{0,1} sources and contexts.
pub fn check_boson_identity(
    cartan: &CartanMatrix,
    src_max: usize,
    ctx_max: usize,
) -> CheckResult {
    let mut r = CheckResult::default();
    let sources = reduced_words_01(cartan, src_max);
    let contexts_1 = all_words_up_to(cartan, &[0, 1], ctx_max);
    let mut contexts = Vec::new();
    for a in &contexts_1 {
        for b in &contexts_1 {
            contexts.push((a.clone(), b.clone()));
        }
    }
    for i in 0..cartan.rank() {
        for j in 0..cartan.rank() {
            let checks = boson_grdim_identity(cartan, i, j, &sources, &contexts).unwrap();
            for c in checks {
                r.record(c.holds, || {
                    format!(
                        "boson identity failed: i={} j={} X={:?} A={:?} B={:?}: {} vs {}",
                        i, j, c.source, c.ctx_a, c.ctx_b, c.lhs, c.rhs
                    )
                });
            }
        }
    }
    r
}

/// The reduced-Hom factorization: Hom out of a reduced pair splits as a
/// product of the level-0 and level-1 parts.
pub fn check_reduced_hom_factorization(cartan: &CartanMatrix, part_max: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let words0 = all_words_up_to(cartan, &[0], part_max);
    for i1 in &words0 {
        for i2 in &words0 {
            if i1.weight(cartan) != i2.weight(cartan) {
                continue;
            }
            for j1 in &words0 {
                for j2 in &words0 {
                    if j1.weight(cartan) != j2.weight(cartan) {
                        continue;
                    }
                    let shift = |w: &ZWord| {
                        ZWord(w.0.iter().map(|l| ZLetter::new(1, l.vertex)).collect())
                    };
                    let src = i1.concat(&shift(j1));
                    let tgt = i2.concat(&shift(j2));
                    let whole = grdim_hom_a2(cartan, &src, &tgt).unwrap().0;
                    let parts = &grdim_hom_a2(cartan, i1, i2).unwrap().0
                        * &grdim_hom_a2(cartan, &shift(j1), &shift(j2)).unwrap().0;
                    r.record(whole == parts, || {
                        format!(
                            "reduced-hom factorization failed on ({:?},{:?}) -> ({:?},{:?})",
                            i1, j1, i2, j2
                        )
                    });
                }
            }
        }
    }
    r
}

fn contents_up_to(rank: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(rank: usize, max_total: usize, at: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == rank {
            out.push(cur.clone());
            return;
        }
        let used: usize = cur.iter().sum();
        for c in 0..=(max_total - used) {
            cur.push(c);
            go(rank, max_total, at + 1, cur, out);
            cur.pop();
        }
    }
    go(rank, max_total, 0, &mut Vec::new(), &mut out);
    out.retain(|c| c.iter().sum::<usize>() > 0);
    out
}

fn reduced_words_01(cartan: &CartanMatrix, max_len: usize) -> Vec<ZWord> {
    // levels weakly increasing over {0,1}: a block of level-0 letters then a
    // block of level-1 letters
    let mut out = vec![ZWord::empty()];
    for len in 1..=max_len {
        for zeros in 0..=len {
            let ones = len - zeros;
            let w0 = all_words(cartan, &[0], zeros);
            let w1 = all_words(cartan, &[1], ones);
            for a in &w0 {
                for b in &w1 {
                    out.push(a.concat(b));
                }
            }
        }
    }
    out
}

// ----------------------------------------------------------------- sz -----

/// The product formula for the rank-1 divided-power basis under the
/// per-level grading condition.
pub fn check_sz_product_formula(max_power: u32) -> CheckResult {
    let mut r = CheckResult::default();
    let c = sl2();
    let straightener = Straightener::new(&c);
    for a in 0..=max_power {
        for b in 0..=max_power {
            for a2 in a..=max_power {
                for b2 in b..=max_power {
                    let x = divided_power(&c, 0, 0, a)
                        .multiply(&embed_level(1, &divided_power(&c, 0, 0, b)).unwrap());
                    let y = divided_power(&c, 0, 0, a2)
                        .multiply(&embed_level(1, &divided_power(&c, 0, 0, b2)).unwrap());
                    let lhs = straightener.form_alg(&x, &y);
                    let f0 = form_lusztig(&c, &divided_power(&c, 0, 0, a), &divided_power(&c, 0, 0, a2))
                        .unwrap();
                    let f1 = form_lusztig(&c, &divided_power(&c, 0, 0, b), &divided_power(&c, 0, 0, b2))
                        .unwrap();
                    let rhs = &f0 * &f1;
                    r.record(lhs == rhs, || {
                        format!("sz product formula failed at ({},{})<=({},{})", a, b, a2, b2)
                    });
                }
            }
        }
    }
    r
}

/// The barred-form product formula with the weight-pairing q-exponent.
pub fn check_sz_bar_formula(max_power: u32) -> CheckResult {
    let mut r = CheckResult::default();
    let c = sl2();
    let straightener = Straightener::new(&c);
    for a in 0..=max_power {
        for b in 0..=max_power {
            for a2 in 0..=max_power {
                for b2 in 0..=max_power {
                    let x = divided_power(&c, 0, 0, a)
                        .multiply(&embed_level(1, &divided_power(&c, 0, 0, b)).unwrap());
                    let y = divided_power(&c, 0, 0, a2)
                        .multiply(&embed_level(1, &divided_power(&c, 0, 0, b2)).unwrap());
                    let lhs = straightener.form_alg(&bar_map(&x), &y);
                    // c-exponent pairs the unsigned factor weights
                    let alpha_a = Weight {
                        coords: vec![a as i64],
                    };
                    let alpha_b = Weight {
                        coords: vec![b as i64],
                    };
                    let exponent = c.weight_form(&alpha_a, &alpha_b);
                    let f0 = form_lusztig(&c, &divided_power(&c, 0, 0, a), &divided_power(&c, 0, 0, a2))
                        .unwrap();
                    let f1 = form_lusztig(&c, &divided_power(&c, 0, 0, b), &divided_power(&c, 0, 0, b2))
                        .unwrap();
                    let rhs = &(&RatScalar::q_power(exponent) * &f0) * &f1;
                    r.record(lhs == rhs, || {
                        format!("sz bar formula failed at ({},{}) vs ({},{})", a, b, a2, b2)
                    });
                }
            }
        }
    }
    r
}

/// Structure-constant positivity probe: products of two basis elements
/// expand with coefficients whose series windows are nonnegative integers
/// and whose denominators divide a power of 1-q^2. Heuristic: a finite
/// window check, not a membership decision.
pub fn check_sz_positivity(max_power: u32, window: (i64, i64)) -> CheckResult {
    let mut r = CheckResult::default();
    let c = sl2();
    let straightener = Straightener::new(&c);
    let small = sz_basis_sl2(&c, &[0, 1], max_power).unwrap();
    let expansion = sz_basis_sl2(&c, &[0, 1], 2 * max_power).unwrap();
    // group the expansion basis by weight to keep the Gram blocks small
    let mut by_weight: std::collections::BTreeMap<Vec<i64>, Vec<AlgElement>> = Default::default();
    for e in &expansion {
        let w = e.weight(&c).unwrap().unwrap_or_else(|| Weight::zero(1));
        by_weight.entry(w.coords).or_default().push(e.clone());
    }
    for x in &small {
        for y in &small {
            let product = straightener.straighten(&x.multiply(y));
            if product.is_zero() {
                r.pass();
                continue;
            }
            let w = product.weight(&c).unwrap().unwrap_or_else(|| Weight::zero(1));
            let block = &by_weight[&w.coords];
            let coeffs = expand_in_basis(&c, &product, block, Engine::Algebraic).unwrap();
            for coeff in &coeffs {
                if coeff.is_zero() {
                    r.pass();
                    continue;
                }
                // the denominator factors completely into (1-q^(2k)) pieces;
                // divided-power normalization brings in k > 1 factors such as
                // 1/((1-q^2)(1-q^4)) for the scalar part of F^(2) E^(2)
                let den_ok = even_cyclotomic_shape(coeff.denominator());
                let series_ok = crate::diagrams::GradedDim(coeff.clone())
                    .series_is_nonneg_integral(window.0, window.1);
                r.record(den_ok && series_ok, || {
                    format!("positivity probe failed on coefficient {}", coeff)
                });
            }
        }
    }
    r
}

/// True when the polynomial is a product of (1-q^(2k)) factors.
fn even_cyclotomic_shape(den: &LaurentPoly) -> bool {
    let mut rest = den.clone();
    let high = rest.high_degree().unwrap_or(0).max(0);
    for k in (1..=high / 2).rev() {
        let f = LaurentPoly::from_terms([
            (0, num_bigint::BigInt::from(1)),
            (2 * k, num_bigint::BigInt::from(-1)),
        ]);
        while let Some(q) = rest.div_exact(&f) {
            rest = q;
        }
    }
    rest.is_one()
}

/// Gram quotient dimensions for the rank-1 two-level fibers, and the Serre
/// kernel of the rank-2 weight block.
pub fn check_gram_quotients(max_power: usize) -> CheckResult {
    let mut r = CheckResult::default();
    let c = sl2();
    let zero = Weight::zero(1);
    for a in 0..=max_power {
        for b in 0..=max_power {
            // fiber with a letters at level 0 and b at level 1
            let alpha = Weight {
                coords: vec![a as i64 - b as i64],
            };
            let expected = a.min(b) + 1;
            let got = quotient_dim(&c, &alpha, (0, 1), a + b, 10_000, Engine::Algebraic).unwrap();
            r.record(got == expected, || {
                format!("quotient dim failed at a={} b={}: got {}", a, b, got)
            });
        }
    }
    let _ = zero;
    // rank-2 Serre kernel
    let c = a2();
    let weight = Weight {
        coords: vec![2, 1],
    };
    let words = enumerate_words_of_weight(&c, &weight, (0, 0), 3);
    for engine in [Engine::Algebraic, Engine::Graphical] {
        let g = gram_matrix(&c, &words, engine);
        let (rank, kernel) = kernel_rank(&g);
        let serre = serre_element(&c, 0, 1, 0).unwrap();
        let lead = serre.terms().next().unwrap().1.clone();
        let normalized = serre.scale(&lead.inv().unwrap());
        r.record(
            rank == 2 && kernel.len() == 1 && kernel[0] == normalized,
            || format!("serre kernel block failed: rank {}", rank),
        );
    }
    r
}

// --------------------------------------------------------------- suites ---

pub const DEFAULT_SEED: u64 = 0xB050;

fn finish(name: &str, start: Instant, r: CheckResult) -> SuiteReport {
    SuiteReport {
        name: name.to_string(),
        checks: r.checks,
        failures: r.failures,
        millis: start.elapsed().as_millis(),
    }
}

/// Form suites: worked example, dual and triple oracle agreement, axioms on
/// both engines, Serre kernels, confluence, and degree well-definedness.
pub fn suite_forms(seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_worked_example(&cartan));
        r.merge(check_dual_oracle(&cartan, &[-1, 0, 1, 2], 4));
        r.merge(check_triple_oracle(&cartan, 3));
        r.merge(check_form_axioms(&cartan, seed, 60));
        r.merge(check_graphical_axioms(&cartan, seed ^ 1, 60));
        r.merge(check_serre_kernel(&cartan, 1, 4, &[0]));
        r.merge(check_serre_rows_lusztig(&cartan));
        let corpus = degree_corpus(&cartan, &[-1, 0, 1, 2], seed, 40);
        r.merge(check_degree_well_defined(&cartan, &corpus));
    }
    r.merge(check_confluence(&a2(), &[0, 1, 2], 4, 2, 100, 8, seed));
    finish("forms", start, r)
}

/// KLR suites: the defining relations, associativity, the bridge to Hom
/// dimensions, and the boson graded-dimension identity.
pub fn suite_klr(seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut r = CheckResult::default();
    for cartan in [a2(), b2()] {
        r.merge(check_klr_relations(&cartan, 3));
        r.merge(check_klr_associativity(&cartan, seed, 40));
        r.merge(check_decat_bridge(&cartan, 3));
        r.merge(check_boson_identity(&cartan, 2, 1));
        r.merge(check_reduced_hom_factorization(&cartan, 1));
    }
    finish("klr", start, r)
}

/// Rank-1 basis suites: product and bar formulas, the positivity probe, and
/// the Gram quotient dimensions.
pub fn suite_sz(_seed: u64) -> SuiteReport {
    let start = Instant::now();
    let mut r = CheckResult::default();
    r.merge(check_sz_product_formula(2));
    r.merge(check_sz_bar_formula(2));
    r.merge(check_sz_positivity(2, (-10, 10)));
    r.merge(check_gram_quotients(2));
    finish("sz", start, r)
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    vec![suite_forms(seed), suite_klr(seed), suite_sz(seed)]
}
