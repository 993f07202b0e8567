//! Partial-fraction splitting of the kernel in one auxiliary variable `w`.
//!
//! For `s = 1` the splitting reads
//! `kernel / prod_u (x_u/w)_{a_u} = sum_{i,j} A_ij / (1 - q^j x_i / w)`.
//! Multiplying through by `prod_u (x_u/w)_{a_u}` gives a Laurent polynomial
//! identity in `x_1..x_n, w`, which is what gets checked here; nothing is
//! expanded as a series in `w`.

use crate::error::{Error, Result};
use crate::instance;
use crate::laurent::{dyson_kernel_in, pochhammer, ExponentVector, MultiLaurent};
use crate::qring::{q_factorial, q_pochhammer, QLaurentPoly, QRat};

use super::report::VerificationReport;

/// `A_ij = prefactor * poly`, with the scalar `1 / ((q^-j)_j (q)_{a_i-j-1})`
/// held apart from the Laurent polynomial part.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitTerm {
    pub prefactor: QRat,
    pub poly: MultiLaurent,
}

/// The residue coefficient `A_ij` for 1-based `i` and `0 <= j < a_i`, in
/// `a.len()` variables.
pub fn a_ij(a: &[u32], i: usize, j: u32) -> Result<SplitTerm> {
    let n = a.len();
    if i == 0 || i > n {
        return Err(Error::invalid(format!("i = {i} out of range 1..={n}")));
    }
    let ii = i - 1;
    let ai = a[ii];
    if j >= ai {
        return Err(Error::invalid(format!("j = {j} out of range 0..{ai}")));
    }
    let den = &q_pochhammer(&QLaurentPoly::q_pow(-(j as i64)), j) * &q_factorial(ai - j - 1);
    let prefactor = QRat::recip_poly(&den)?;

    // Kernel on the variables other than x_i.
    let rest: Vec<u32> = a.iter().enumerate().filter(|&(k, _)| k != ii).map(|(_, &x)| x).collect();
    let map: Vec<usize> = (0..n).filter(|&k| k != ii).collect();
    let mut poly = dyson_kernel_in(&rest, rest.len()).relabel(n, &map);

    let j = j as i64;
    for (l, &al) in a.iter().enumerate() {
        if l == ii {
            continue;
        }
        let t = ExponentVector::ratio(n, ii, l);
        let al = al as i64;
        let (scalar, f1, f2) = if l < ii {
            (
                j * al,
                pochhammer(&t, 1 - al, j as u32),
                pochhammer(&t, j + 1, ai - j as u32),
            )
        } else {
            (
                (j + 1) * al,
                pochhammer(&t, -al, j as u32 + 1),
                pochhammer(&t, j + 1, ai - j as u32 - 1),
            )
        };
        poly = poly.mul(&f1)?.mul(&f2)?.mul_monomial(&ExponentVector::zero(n), scalar);
    }
    Ok(SplitTerm { prefactor, poly })
}

/// Checks that `A_ij` has no negative power of `x_i`.
pub fn check_power_series(a: &[u32], i: usize, j: u32) -> Result<VerificationReport> {
    let term = a_ij(a, i, j)?;
    let min = term.poly.min_exponent_of(i - 1).unwrap_or(0);
    let inst = instance!("a" => a, "i" => i, "j" => j);
    Ok(if min >= 0 {
        VerificationReport::pass("power_series", inst)
    } else {
        VerificationReport::fail("power_series", inst, serde_json::json!({ "min_exponent": min }))
    })
}

/// Verifies the denominator-cleared splitting identity for `a`.
pub fn verify_splitting(a: &[u32]) -> Result<VerificationReport> {
    if a.is_empty() || a.contains(&0) {
        return Err(Error::invalid("splitting needs n >= 1 and all a_i >= 1"));
    }
    let n = a.len();
    let nv = n + 1;
    let w = n;

    let slots: Vec<(usize, u32)> = (0..n).flat_map(|u| (0..a[u]).map(move |k| (u, k))).collect();
    let factors: Vec<MultiLaurent> = slots
        .iter()
        .map(|&(u, k)| pochhammer(&ExponentVector::ratio(nv, u, w), k as i64, 1))
        .collect();

    let terms: Vec<SplitTerm> = slots
        .iter()
        .map(|&(u, k)| a_ij(a, u + 1, k))
        .collect::<Result<_>>()?;

    // Common multiple of the prefactor denominators.
    let mut common = QLaurentPoly::one();
    for t in &terms {
        let d = t.prefactor.denom();
        let g = common.gcd(d);
        common = (&common * d).div_exact(&g).expect("gcd divides product");
    }

    let lhs = dyson_kernel_in(a, nv).scale(&common);
    let mut rhs = MultiLaurent::zero(nv);
    for (idx, t) in terms.iter().enumerate() {
        let cleared = &common.div_exact(t.prefactor.denom()).expect("lcm") * t.prefactor.numer();
        let mut summand = t.poly.extend_vars(1).scale(&cleared);
        for (k, f) in factors.iter().enumerate() {
            if k != idx {
                summand = summand.mul(f)?;
            }
        }
        rhs = rhs.add(&summand)?;
    }
    Ok(VerificationReport::compare_multi(
        "splitting",
        instance!("a" => a),
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, co: &[i64]) -> QLaurentPoly {
        QLaurentPoly::from_i64s(min, co)
    }

    #[test]
    fn single_variable_terms() {
        for a1 in 1..=4u32 {
            for j in 0..a1 {
                let t = a_ij(&[a1], 1, j).unwrap();
                assert_eq!(t.poly, MultiLaurent::one(1));
                let den = &q_pochhammer(&QLaurentPoly::q_pow(-(j as i64)), j) * &q_factorial(a1 - j - 1);
                assert_eq!(t.prefactor, QRat::recip_poly(&den).unwrap());
            }
        }
    }

    #[test]
    fn two_variable_term() {
        let t = a_ij(&[1, 1], 1, 0).unwrap();
        assert_eq!(t.prefactor, QRat::one());
        let expect = MultiLaurent::from_terms(
            2,
            [
                (ExponentVector::new(vec![0, 0]), p(1, &[1])),
                (ExponentVector::new(vec![1, -1]), p(0, &[-1])),
            ],
        )
        .unwrap();
        assert_eq!(t.poly, expect);
    }

    #[test]
    fn small_splittings_pass() {
        for a in [&[1][..], &[2], &[1, 1], &[2, 1], &[1, 2]] {
            let r = verify_splitting(a).unwrap();
            assert!(r.passed(), "{a:?}: {:?}", r.witness);
        }
    }

    #[test]
    fn detects_a_corrupted_term() {
        // Sanity check of the comparison itself: dropping one summand must fail.
        let a = [1, 1];
        let nv = 3;
        let lhs = dyson_kernel_in(&a, nv);
        let t = a_ij(&a, 1, 0).unwrap();
        let f = pochhammer(&ExponentVector::ratio(nv, 1, 2), 0, 1);
        let partial = t.poly.extend_vars(1).mul(&f).unwrap();
        let r = VerificationReport::compare_multi("splitting", instance!(), &lhs, &partial);
        assert!(r.failed());
    }

    #[test]
    fn power_series_and_bounds() {
        assert!(check_power_series(&[2, 1, 2], 2, 0).unwrap().passed());
        assert!(a_ij(&[2, 1], 3, 0).is_err());
        assert!(a_ij(&[2, 1], 2, 1).is_err());
        assert!(verify_splitting(&[1, 0]).is_err());
    }
}
