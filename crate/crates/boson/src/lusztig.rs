//! The bilinear form on the positive quantum algebra via the twisted
//! derivation recursion; used as an independent single-level oracle for the
//! straightening and matching engines.

use crate::cartan::CartanMatrix;
use crate::error::AlgebraError;
use crate::scalar::RatScalar;
use crate::word::{AlgElement, ZWord};

/// The twisted derivation for vertex `i` on an element supported on a single
/// level: it kills scalars, and on a word peels letters from the left by
/// F'_i(E_j X) = q_i^(-C_ij) E_j F'_i(X) + delta_ij/(1-q_i^2) X.
pub fn twisted_derivation(
    cartan: &CartanMatrix,
    i: usize,
    x: &AlgElement,
) -> Result<AlgElement, AlgebraError> {
    check_single_level(x)?;
    let mut out = AlgElement::zero();
    for (w, c) in x.terms() {
        for (dw, dc) in derive_word(cartan, i, w).terms() {
            out.add_term(dw.clone(), dc * c);
        }
    }
    Ok(out)
}

fn derive_word(cartan: &CartanMatrix, i: usize, w: &ZWord) -> AlgElement {
    if w.is_empty() {
        return AlgElement::zero();
    }
    let head = w.0[0];
    let rest = ZWord(w.0[1..].to_vec());
    let j = head.vertex;
    // q_i^{-C_ij} E_j F'_i(rest)
    let coeff = cartan.q_power_i(i, -cartan.entry(i, j));
    let mut out = AlgElement::zero();
    for (dw, dc) in derive_word(cartan, i, &rest).terms() {
        let mut letters = vec![head];
        letters.extend_from_slice(&dw.0);
        out.add_term(ZWord(letters), &coeff * dc);
    }
    if i == j {
        let delta = RatScalar::one_over_one_minus_q2d(cartan.sym(i));
        out.add_term(rest, delta);
    }
    out
}

fn check_single_level(x: &AlgElement) -> Result<Option<i64>, AlgebraError> {
    let mut level: Option<i64> = None;
    for (w, _) in x.terms() {
        if let Some(n) = w.uniform_level()? {
            match level {
                None => level = Some(n),
                Some(m) if m != n => return Err(AlgebraError::MixedLevels(m, n)),
                _ => {}
            }
        }
    }
    Ok(level)
}

/// The q-semilinear form on a single level: for a monomial first argument
/// E_{i_1} ... E_{i_k}, the scalar part of F'_{i_k} ... F'_{i_1} applied to
/// the second argument; extended with bar on the first coefficient.
pub fn form_lusztig(
    cartan: &CartanMatrix,
    x: &AlgElement,
    y: &AlgElement,
) -> Result<RatScalar, AlgebraError> {
    let lx = check_single_level(x)?;
    let ly = check_single_level(y)?;
    if let (Some(a), Some(b)) = (lx, ly) {
        if a != b {
            return Err(AlgebraError::MixedLevels(a, b));
        }
    }
    let mut out = RatScalar::zero();
    for (wx, cx) in x.terms() {
        let mut cur = y.clone();
        for letter in &wx.0 {
            cur = twisted_derivation(cartan, letter.vertex, &cur)?;
            if cur.is_zero() {
                break;
            }
        }
        let constant = cur.coeff(&ZWord::empty());
        if !constant.is_zero() {
            out += &(&cx.bar() * &constant);
        }
    }
    Ok(out)
}

/// Pair every probe against the Serre element for (i, j) at level n; values
/// are all zero, and a probe whose weight does not match is flagged.
pub struct SerrePairing {
    pub values: Vec<RatScalar>,
    pub weight_mismatch: Vec<bool>,
}

pub fn serre_pairing_row(
    cartan: &CartanMatrix,
    i: usize,
    j: usize,
    n: i64,
    probes: &[ZWord],
) -> Result<SerrePairing, AlgebraError> {
    let serre = crate::word::serre_element(cartan, i, j, n)?;
    let serre_weight = serre
        .weight(cartan)
        .expect("serre terms share a weight")
        .expect("serre element is nonzero");
    let mut values = Vec::with_capacity(probes.len());
    let mut mismatch = Vec::with_capacity(probes.len());
    for p in probes {
        let x = AlgElement::from_word(p.clone());
        values.push(form_lusztig(cartan, &x, &serre)?);
        mismatch.push(p.weight(cartan) != serre_weight);
    }
    Ok(SerrePairing {
        values,
        weight_mismatch: mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{a2, sl2};
    use crate::word::serre_element;

    fn w(pairs: &[(i64, usize)]) -> ZWord {
        ZWord::from_pairs(pairs)
    }

    fn el(pairs: &[(i64, usize)]) -> AlgElement {
        AlgElement::from_word(w(pairs))
    }

    #[test]
    fn derivation_base_cases() {
        let c = a2();
        assert!(twisted_derivation(&c, 0, &AlgElement::one())
            .unwrap()
            .is_zero());
        let d = twisted_derivation(&c, 0, &el(&[(0, 0)])).unwrap();
        assert_eq!(
            d,
            AlgElement::from_term(ZWord::empty(), RatScalar::one_over_one_minus_q2d(1))
        );
        // F'_i(E_j E_i) = q_i^{-C_ij}/(1-q_i^2) E_j for i != j
        let d = twisted_derivation(&c, 0, &el(&[(0, 1), (0, 0)])).unwrap();
        let expected = AlgElement::from_term(
            w(&[(0, 1)]),
            &c.q_power_i(0, 1) * &RatScalar::one_over_one_minus_q2d(1),
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn derivation_rejects_mixed_levels() {
        let c = sl2();
        let x = el(&[(0, 0), (1, 0)]);
        assert!(twisted_derivation(&c, 0, &x).is_err());
    }

    #[test]
    fn form_generator_values() {
        let c = a2();
        assert_eq!(
            form_lusztig(&c, &el(&[(0, 0)]), &el(&[(0, 0)])).unwrap(),
            RatScalar::one_over_one_minus_q2d(1)
        );
        assert_eq!(
            form_lusztig(&c, &el(&[(0, 0)]), &el(&[(0, 1)])).unwrap(),
            RatScalar::zero()
        );
        assert_eq!(
            form_lusztig(&c, &AlgElement::one(), &AlgElement::one()).unwrap(),
            RatScalar::one()
        );
    }

    #[test]
    fn form_e2_e2() {
        // frozen from the two-matching count: degrees 0 and -2
        let c = sl2();
        let e2 = el(&[(0, 0), (0, 0)]);
        let f = RatScalar::one_over_one_minus_q2d(1);
        let expected = &(&RatScalar::from_int(1) + &RatScalar::q_power(-2)) * &f.pow(2).unwrap();
        assert_eq!(form_lusztig(&c, &e2, &e2).unwrap(), expected);
    }

    #[test]
    fn form_level_mismatch_is_an_error() {
        let c = sl2();
        assert!(form_lusztig(&c, &el(&[(0, 0)]), &el(&[(1, 0)])).is_err());
    }

    #[test]
    fn serre_rows_vanish() {
        let c = a2();
        // all 3 words of weight 2 alpha_i + alpha_j at level 0
        let probes = vec![
            w(&[(0, 0), (0, 0), (0, 1)]),
            w(&[(0, 0), (0, 1), (0, 0)]),
            w(&[(0, 1), (0, 0), (0, 0)]),
        ];
        let row = serre_pairing_row(&c, 0, 1, 0, &probes).unwrap();
        assert!(row.values.iter().all(|v| v.is_zero()));
        assert!(row.weight_mismatch.iter().all(|m| !m));
        // empty probe list
        let row = serre_pairing_row(&c, 0, 1, 0, &[]).unwrap();
        assert!(row.values.is_empty());
        // a direct pairing of the serre element against itself also vanishes
        let s = serre_element(&c, 0, 1, 0).unwrap();
        assert_eq!(form_lusztig(&c, &s, &s).unwrap(), RatScalar::zero());
    }

    #[test]
    fn serre_rows_vanish_orthogonal_case() {
        use crate::cartan::CartanMatrix;
        let c = CartanMatrix::new(
            vec!["i".into(), "j".into()],
            vec![vec![2, 0], vec![0, 2]],
            vec![1, 1],
        )
        .unwrap();
        let probes = vec![w(&[(0, 0), (0, 1)]), w(&[(0, 1), (0, 0)])];
        let row = serre_pairing_row(&c, 0, 1, 0, &probes).unwrap();
        assert_eq!(row.values.len(), 2);
        assert!(row.values.iter().all(|v| v.is_zero()));
        // a probe of the wrong weight is flagged and still pairs to zero
        let probes = vec![w(&[(0, 0), (0, 0)])];
        let row = serre_pairing_row(&c, 0, 1, 0, &probes).unwrap();
        assert!(row.weight_mismatch[0]);
        assert!(row.values[0].is_zero());
    }
}
