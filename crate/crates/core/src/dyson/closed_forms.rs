//! The exponent statistic `L_{I,J}(a)` and the closed-form right-hand sides.

use super::{Composition, IndexSet};
use crate::error::{Error, Result};
use crate::qring::{one_minus_q_pow, q_binomial, q_multinomial, QLaurentPoly, QRat};

/// `L_{I,J}(a) = sum of a_j over pairs i <= j with i in I and j not in J`.
pub fn l_statistic(i_set: &IndexSet, j_set: &IndexSet, a: &Composition) -> Result<u64> {
    if !j_set.is_subset_of(i_set) {
        return Err(Error::invalid(format!("{j_set} is not a subset of {i_set}")));
    }
    if i_set.max().is_some_and(|m| m > a.len()) {
        return Err(Error::invalid(format!(
            "index set {i_set} out of range for {} parts",
            a.len()
        )));
    }
    let mut total = 0u64;
    for i in i_set.iter() {
        for j in i..=a.len() {
            if !j_set.contains(j) {
                total += a.at(j) as u64;
            }
        }
    }
    Ok(total)
}

pub(crate) fn require_positive(a: &Composition) -> Result<()> {
    if a.contains(&0) {
        return Err(Error::invalid(format!("all parts of a must be positive, got {a}")));
    }
    Ok(())
}

pub(crate) fn require_same_len(v: &Composition, a: &Composition) -> Result<()> {
    if v.len() != a.len() {
        return Err(Error::invalid(format!(
            "v has {} parts but a has {}",
            v.len(),
            a.len()
        )));
    }
    Ok(())
}

/// `(q)_{|a|} / prod (q)_{a_i}`, the q-Dyson constant term.
pub fn qdyson_rhs(a: &Composition) -> QLaurentPoly {
    q_multinomial(a.size(), a).expect("parts sum to |a|")
}

/// Kadell's value for `D_{v,(r)}(a)` with `|v| = r`: non-zero only when `v`
/// has a single non-zero part, at position `k`.
///
/// The product runs over `a^(k)`: for `i < k` the tail `a_i + ... + a_n`
/// omits `a_k`. Keeping `a_k` in those tails is wrong already at
/// `v = (0,1)`, `a = (1,1)`, where the constant term is `1`, not `1 + q`.
pub fn kadell_rhs(v: &Composition, a: &Composition) -> Result<QLaurentPoly> {
    require_same_len(v, a)?;
    require_positive(a)?;
    let r = v.size();
    if r == 0 {
        return Err(Error::invalid("Kadell's formula needs |v| >= 1"));
    }
    let nonzero: Vec<usize> = (1..=v.len()).filter(|&k| v.at(k) != 0).collect();
    let [k] = nonzero[..] else {
        return Ok(QLaurentPoly::zero());
    };
    let mut out = q_binomial(a.size() + r - 1, a.at(k) - 1).shift(a.tail_sum(k) as i64);
    for i in (1..=a.len()).filter(|&i| i != k) {
        let tail = if i < k { a.tail_sum(i) - a.at(k) } else { a.tail_sum(i) };
        out = &out * &q_binomial(a.at(i) + tail, a.at(i));
    }
    Ok(out)
}

/// One step of the unique-maximum factorisation:
/// `D_{v,v+}(a) = factor * D(v^(k), a^(k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryStep {
    /// Position (1-based) of the unique largest part.
    pub k: usize,
    pub factor: QLaurentPoly,
    pub v: Composition,
    pub a: Composition,
}

/// Factor `q^{a_{k+1}+...+a_n} [v_k + |a| - 1, a_k - 1]` and the reduced
/// instance, for `v` whose largest part occurs exactly once.
pub fn corollary_rhs(v: &Composition, a: &Composition) -> Result<CorollaryStep> {
    require_same_len(v, a)?;
    require_positive(a)?;
    let (r, set) = v.max_part_set()?;
    if set.len() != 1 {
        return Err(Error::invalid(format!(
            "largest part {r} of {v} has multiplicity {}",
            set.len()
        )));
    }
    let k = set.iter().next().expect("one element");
    let factor = q_binomial(r + a.size() - 1, a.at(k) - 1).shift(a.tail_sum(k) as i64);
    Ok(CorollaryStep {
        k,
        factor,
        v: v.delete(k),
        a: a.delete(k),
    })
}

/// The ratio `[|a|+r-1; (a, r-1)] / [|a|-a_S+r-1; (a^(S), r-1)]`.
pub fn multinomial_ratio(a: &Composition, set: &IndexSet, r: u32) -> Result<QRat> {
    let top = q_multinomial(a.size() + r - 1, &a.appended(r - 1))?;
    let rest = a.delete_set(set);
    let bottom = q_multinomial(rest.size() + r - 1, &rest.appended(r - 1))?;
    QRat::new(top, bottom)
}

/// The multiplier relating `D_{v,v+}(a)` to `D` at `(v^(I), a^(I))`:
/// the multinomial ratio times
/// `sum_{J != {} in I} (-1)^{|I\J|} q^{L_{I,J}(a)} (1 - q^{a_J}) / (1 - q^{|a| - a_J + r})`.
pub fn theorem_factor(v: &Composition, a: &Composition) -> Result<QRat> {
    require_same_len(v, a)?;
    require_positive(a)?;
    let (r, set) = v.max_part_set()?;
    let size = a.size() as i64;
    let mut sum = QRat::zero();
    for j_set in set.nonempty_subsets() {
        let a_j = a.sum_over(&j_set) as i64;
        let sign = if (set.len() - j_set.len()) % 2 == 0 { 1 } else { -1 };
        let num = one_minus_q_pow(a_j)
            .scale(&sign.into())
            .shift(l_statistic(&set, &j_set, a)? as i64);
        let den = one_minus_q_pow(size - a_j + r as i64);
        sum = &sum + &QRat::new(num, den)?;
    }
    Ok(&multinomial_ratio(a, &set, r)? * &sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn p(min: i64, co: &[i64]) -> QLaurentPoly {
        QLaurentPoly::from_i64s(min, co)
    }

    /// Straight transcription of the defining double sum, no shortcuts.
    fn l_by_pairs(i_set: &[usize], j_set: &[usize], a: &[u32]) -> u64 {
        let n = a.len();
        let mut t = 0;
        for i in 1..=n {
            for j in 1..=n {
                if i <= j && i_set.contains(&i) && !j_set.contains(&j) {
                    t += a[j - 1] as u64;
                }
            }
        }
        t
    }

    #[test]
    fn l_statistic_examples() {
        let a = c(&[4, 1, 2, 7, 3]);
        for i in 1..=5 {
            let tail: u64 = a[i..].iter().map(|&x| x as u64).sum();
            assert_eq!(l_statistic(&set(&[i]), &set(&[i]), &a).unwrap(), tail);
        }
        let ones = c(&[1; 6]);
        assert_eq!(l_statistic(&set(&[3, 5]), &set(&[5]), &ones).unwrap(), 4);
        let all = set(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(l_statistic(&all, &all, &ones).unwrap(), 0);
        assert!(l_statistic(&set(&[1]), &set(&[2]), &ones).is_err());
        assert!(l_statistic(&set(&[7]), &set(&[]), &ones).is_err());
    }

    #[test]
    fn l_statistic_matches_pair_enumeration() {
        let a = c(&[2, 3, 1, 2]);
        let full = set(&[1, 2, 3, 4]);
        for i_set in full.nonempty_subsets() {
            for j_set in i_set.subsets() {
                let iv: Vec<usize> = i_set.iter().collect();
                let jv: Vec<usize> = j_set.iter().collect();
                assert_eq!(l_statistic(&i_set, &j_set, &a).unwrap(), l_by_pairs(&iv, &jv, &a));
            }
        }
    }

    #[test]
    fn qdyson_examples() {
        assert_eq!(qdyson_rhs(&c(&[5])), QLaurentPoly::one());
        assert_eq!(qdyson_rhs(&c(&[1, 1])), p(0, &[1, 1]));
        assert_eq!(qdyson_rhs(&c(&[1, 1, 1])), p(0, &[1, 2, 2, 1]));
    }

    #[test]
    fn kadell_examples() {
        assert_eq!(kadell_rhs(&c(&[2]), &c(&[2])).unwrap(), p(0, &[1, 1, 1]));
        for a1 in 1..=4 {
            for r in 1..=4 {
                assert_eq!(
                    kadell_rhs(&c(&[r]), &c(&[a1])).unwrap(),
                    q_binomial(a1 + r - 1, r)
                );
            }
        }
        assert_eq!(kadell_rhs(&c(&[1, 0]), &c(&[1, 1])).unwrap(), p(1, &[1]));
        // coefficient of x2 in (x1 + x2)(1 - x1/x2)(1 - q x2/x1)
        assert_eq!(kadell_rhs(&c(&[0, 1]), &c(&[1, 1])).unwrap(), p(0, &[1]));
        assert!(kadell_rhs(&c(&[1, 1]), &c(&[1, 1])).unwrap().is_zero());
        assert!(kadell_rhs(&c(&[0, 0]), &c(&[1, 1])).is_err());
        assert!(kadell_rhs(&c(&[1, 0]), &c(&[0, 1])).is_err());
    }

    #[test]
    fn corollary_examples() {
        let step = corollary_rhs(&c(&[1, 0]), &c(&[1, 1])).unwrap();
        assert_eq!(step.factor, p(1, &[1]));
        assert_eq!((step.v, step.a), (c(&[0]), c(&[1])));
        let step = corollary_rhs(&c(&[3]), &c(&[2])).unwrap();
        assert_eq!(step.factor, q_binomial(4, 1));
        assert!(step.v.is_empty());
        let step = corollary_rhs(&c(&[0, 0, 2]), &c(&[1, 2, 3])).unwrap();
        assert_eq!(step.factor, q_binomial(2 + 6 - 1, 2));
        assert!(corollary_rhs(&c(&[1, 1]), &c(&[1, 1])).is_err());
    }

    #[test]
    fn theorem_factor_examples() {
        for a1 in 1..=4 {
            for r in 1..=4 {
                let f = theorem_factor(&c(&[r]), &c(&[a1])).unwrap();
                assert_eq!(f.to_polynomial().unwrap(), q_binomial(a1 + r - 1, a1 - 1));
            }
        }
        let f = theorem_factor(&c(&[1, 1]), &c(&[1, 1])).unwrap();
        assert_eq!(f.to_polynomial().unwrap(), p(0, &[1, 1]));
    }

    #[test]
    fn theorem_factor_with_unique_max_matches_corollary() {
        for (v, a) in [
            (c(&[2, 0, 1]), c(&[1, 2, 3])),
            (c(&[0, 3, 1]), c(&[2, 2, 1])),
            (c(&[1, 0, 0, 0]), c(&[3, 1, 2, 1])),
        ] {
            let t = theorem_factor(&v, &a).unwrap();
            let step = corollary_rhs(&v, &a).unwrap();
            assert_eq!(t, QRat::from_poly(step.factor), "v={v} a={a}");
        }
    }
}
