//! Complete homogeneous symmetric functions of the alphabet
//! `x^(a) = (x_1, x_1 q, ..., x_1 q^{a_1-1}, ..., x_n q^{a_n-1})`.

use super::{ExponentVector, MultiLaurent};

/// `[h_0, h_1, ..., h_rmax]` evaluated at `x^(a)`, in `a.len()` variables.
///
/// Each letter `y` multiplies the generating series by `1/(1 - z y)`, which
/// is the in-place update `H[m] += y * H[m-1]` for `m` ascending.
pub fn h_up_to(rmax: u32, a: &[u32]) -> Vec<MultiLaurent> {
    let nvars = a.len();
    let mut h = vec![MultiLaurent::zero(nvars); rmax as usize + 1];
    h[0] = MultiLaurent::one(nvars);
    for (i, &ai) in a.iter().enumerate() {
        let mut x = ExponentVector::zero(nvars);
        x.0[i] = 1;
        for k in 0..ai {
            for m in 1..=rmax as usize {
                let step = h[m - 1].mul_monomial(&x, k as i64);
                h[m] = h[m].add(&step).expect("same ring");
            }
        }
    }
    h
}

/// `h_r(x^(a))`.
pub fn h_r_of_alphabet(r: u32, a: &[u32]) -> MultiLaurent {
    h_up_to(r, a).pop().expect("r + 1 entries")
}

/// `h_lambda(x^(a)) = prod_i h_{lambda_i}(x^(a))`; `1` for the empty partition.
pub fn h_lambda(lambda: &[u32], a: &[u32]) -> MultiLaurent {
    let rmax = lambda.iter().copied().max().unwrap_or(0);
    let h = h_up_to(rmax, a);
    lambda
        .iter()
        .fold(MultiLaurent::one(a.len()), |acc, &part| {
            acc.mul(&h[part as usize]).expect("same ring")
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::{q_binomial, QLaurentPoly};

    fn p(min: i64, c: &[i64]) -> QLaurentPoly {
        QLaurentPoly::from_i64s(min, c)
    }

    fn ev(v: &[i32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn small_cases() {
        assert_eq!(h_r_of_alphabet(0, &[2, 3]), MultiLaurent::one(2));
        let h1 = h_r_of_alphabet(1, &[2, 3]);
        assert_eq!(h1.len(), 2);
        assert_eq!(h1.coefficient_of(&ev(&[1, 0])), p(0, &[1, 1]));
        assert_eq!(h1.coefficient_of(&ev(&[0, 1])), p(0, &[1, 1, 1]));
        assert_eq!(h_r_of_alphabet(2, &[1]).coefficient_of(&ev(&[2])), QLaurentPoly::one());
        let h2 = h_r_of_alphabet(2, &[2]);
        assert_eq!(h2, MultiLaurent::term(ev(&[2]), p(0, &[1, 1, 1])));
    }

    #[test]
    fn h_lambda_examples() {
        assert_eq!(h_lambda(&[], &[3, 1]), MultiLaurent::one(2));
        // (x1 + x2)^2
        let sq = h_lambda(&[1, 1], &[1, 1]);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient_of(&ev(&[1, 1])), QLaurentPoly::constant(2));
        assert_eq!(sq.coefficient_of(&ev(&[2, 0])), QLaurentPoly::one());
        assert_eq!(h_lambda(&[2], &[2]), h_r_of_alphabet(2, &[2]));
    }

    #[test]
    fn principal_specialization() {
        for a1 in 1..=5u32 {
            for r in 0..=5u32 {
                let h = h_r_of_alphabet(r, &[a1]);
                assert_eq!(h.coefficient_of(&ev(&[r as i32])), q_binomial(a1 + r - 1, r));
            }
        }
    }

    #[test]
    fn alphabet_union_is_convolution() {
        // x^(a) for a = (2,1,2) is the union of x^((2,1,0)) and x^((0,0,2)).
        let a = [2, 1, 2];
        let left = h_up_to(4, &[2, 1, 0]);
        let right = h_up_to(4, &[0, 0, 2]);
        let whole = h_up_to(4, &a);
        for r in 0..=4usize {
            let mut conv = MultiLaurent::zero(3);
            for s in 0..=r {
                conv = conv.add(&left[s].mul(&right[r - s]).unwrap()).unwrap();
            }
            assert_eq!(conv, whole[r], "r = {r}");
            assert!(whole[r].has_nonnegative_coeffs());
        }
    }
}
