//! Fast evaluators of `D_{v,v+}(a)`.

use std::collections::HashMap;

use super::closed_forms::{corollary_rhs, qdyson_rhs, require_same_len, theorem_factor};
use super::Composition;
use crate::error::Result;
use crate::qring::{q_binomial, QLaurentPoly, QRat};

/// Applies the zero-part reductions. Returns `None` when `D` vanishes (some
/// `a_i = 0` with `v_i != 0`); otherwise drops every position with
/// `a_i = v_i = 0`, leaving all remaining `a_i >= 1`.
pub fn reduce_zero_parts(v: &Composition, a: &Composition) -> Result<Option<(Composition, Composition)>> {
    require_same_len(v, a)?;
    if v.iter().zip(a.iter()).any(|(&vi, &ai)| ai == 0 && vi != 0) {
        return Ok(None);
    }
    let keep: Vec<usize> = (0..a.len()).filter(|&i| a[i] != 0).collect();
    Ok(Some((
        keep.iter().map(|&i| v[i]).collect::<Vec<_>>().into(),
        keep.iter().map(|&i| a[i]).collect::<Vec<_>>().into(),
    )))
}

/// `D_{v,v+}(a)` by repeatedly peeling off every maximal part at once.
pub fn eval_recursive(v: &Composition, a: &Composition) -> Result<QLaurentPoly> {
    let Some((mut v, mut a)) = reduce_zero_parts(v, a)? else {
        return Ok(QLaurentPoly::zero());
    };
    let mut acc = QRat::one();
    while !v.is_zero() {
        acc = &acc * &theorem_factor(&v, &a)?;
        let (_, set) = v.max_part_set()?;
        v = v.delete_set(&set);
        a = a.delete_set(&set);
    }
    (&acc * &QRat::from_poly(qdyson_rhs(&a))).to_polynomial()
}

/// `D_{v,v+}(a)` by the branching formula over the positions of the largest
/// part, memoised on `(v, a)` for the duration of the call.
pub fn eval_inductive(v: &Composition, a: &Composition) -> Result<QLaurentPoly> {
    let Some((v, a)) = reduce_zero_parts(v, a)? else {
        return Ok(QLaurentPoly::zero());
    };
    let mut memo = HashMap::new();
    inductive(&v, &a, &mut memo)
}

fn inductive(
    v: &Composition,
    a: &Composition,
    memo: &mut HashMap<(Composition, Composition), QLaurentPoly>,
) -> Result<QLaurentPoly> {
    if v.is_zero() {
        return Ok(qdyson_rhs(a));
    }
    if let Some(hit) = memo.get(&(v.clone(), a.clone())) {
        return Ok(hit.clone());
    }
    let (r, set) = v.max_part_set()?;
    let mut total = QLaurentPoly::zero();
    for i in set.iter() {
        let coeff = q_binomial(a.size() + r - 1, a.at(i) - 1).shift(a.tail_sum(i) as i64);
        let sub = inductive(&v.delete(i), &a.delete(i), memo)?;
        total += &(&coeff * &sub);
    }
    memo.insert((v.clone(), a.clone()), total.clone());
    Ok(total)
}

/// `D_{v,v+}(a)` using the unique-maximum factorisation while it applies,
/// handing over to [`eval_recursive`] at the first repeated maximum.
pub fn eval_corollary(v: &Composition, a: &Composition) -> Result<QLaurentPoly> {
    let Some((mut v, mut a)) = reduce_zero_parts(v, a)? else {
        return Ok(QLaurentPoly::zero());
    };
    let mut acc = QLaurentPoly::one();
    while !v.is_zero() {
        let (_, set) = v.max_part_set()?;
        if set.len() != 1 {
            return Ok(&acc * &eval_recursive(&v, &a)?);
        }
        let step = corollary_rhs(&v, &a)?;
        acc = &acc * &step.factor;
        v = step.v;
        a = step.a;
    }
    Ok(&acc * &qdyson_rhs(&a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn p(min: i64, co: &[i64]) -> QLaurentPoly {
        QLaurentPoly::from_i64s(min, co)
    }

    #[test]
    fn hand_values() {
        for eval in [eval_recursive, eval_inductive, eval_corollary] {
            assert_eq!(eval(&c(&[1, 1]), &c(&[1, 1])).unwrap(), p(0, &[1, 1]));
            assert_eq!(eval(&c(&[1, 0]), &c(&[1, 1])).unwrap(), p(1, &[1]));
            assert_eq!(eval(&c(&[0, 0]), &c(&[1, 1])).unwrap(), p(0, &[1, 1]));
            assert_eq!(eval(&c(&[0, 0, 0]), &c(&[2, 1, 3])).unwrap(), qdyson_rhs(&c(&[2, 1, 3])));
            for a1 in 1..=4 {
                for r in 1..=4 {
                    assert_eq!(eval(&c(&[r]), &c(&[a1])).unwrap(), q_binomial(a1 + r - 1, a1 - 1));
                }
            }
        }
    }

    #[test]
    fn zero_part_reductions() {
        assert!(eval_recursive(&c(&[1, 0]), &c(&[0, 2])).unwrap().is_zero());
        assert_eq!(
            eval_recursive(&c(&[0, 1, 0]), &c(&[0, 1, 1])).unwrap(),
            eval_recursive(&c(&[1, 0]), &c(&[1, 1])).unwrap()
        );
        assert_eq!(eval_inductive(&c(&[]), &c(&[])).unwrap(), QLaurentPoly::one());
        assert_eq!(eval_recursive(&c(&[0, 0]), &c(&[0, 0])).unwrap(), QLaurentPoly::one());
        assert!(eval_recursive(&c(&[1]), &c(&[1, 1])).is_err());
    }

    #[test]
    fn evaluators_agree_on_repeated_maxima() {
        for (v, a) in [
            (c(&[2, 2, 1]), c(&[1, 2, 3])),
            (c(&[1, 1, 1]), c(&[2, 2, 2])),
            (c(&[3, 0, 3, 3]), c(&[1, 2, 1, 2])),
        ] {
            let r = eval_recursive(&v, &a).unwrap();
            assert_eq!(r, eval_inductive(&v, &a).unwrap(), "v={v} a={a}");
            assert_eq!(r, eval_corollary(&v, &a).unwrap(), "v={v} a={a}");
        }
    }
}
