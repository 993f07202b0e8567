//! Checkers for the auxiliary identities used on the way to the recursion.

use crate::dyson::{l_statistic, multinomial_ratio, Composition, IndexSet};
use crate::error::{Error, Result};
use crate::instance;
use crate::laurent::{pochhammer, ExponentVector, MultiLaurent};
use crate::qring::{one_minus_q_pow, q_binomial, q_factorial, q_multinomial, q_pochhammer, QLaurentPoly, QRat};

use super::report::VerificationReport;

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `s * q^e`.
fn signed_q_pow(s: i64, e: i64) -> QLaurentPoly {
    QLaurentPoly::monomial(s, e)
}

fn z_poch(z_exp: i32, qshift: i64, k: u32) -> MultiLaurent {
    pochhammer(&ExponentVector::new(vec![z_exp]), qshift, k)
}

fn product(fs: &[MultiLaurent]) -> MultiLaurent {
    fs.iter()
        .fold(MultiLaurent::one(1), |acc, f| acc.mul(f).expect("one variable"))
}

/// The two `q`-shifted factorial quotients in one variable `z`, checked after
/// multiplying out the common denominator `(q^-k / z)_i`.
///
/// With `k == j` only the first display applies and only it is checked.
pub fn check_lemma31(i: u32, j: u32, k: u32) -> Result<VerificationReport> {
    if i == 0 || j == 0 || k > j {
        return Err(Error::invalid(format!("need i, j >= 1 and k <= j, got ({i},{j},{k})")));
    }
    let (ii, kk) = (i as i64, k as i64);
    let den = z_poch(-1, -kk, i);
    let lhs_a = product(&[z_poch(-1, 0, i), z_poch(1, 1, j)]);
    let rhs_a = product(&[z_poch(1, 1 - ii, k), z_poch(1, kk + 1, j - k), den.clone()])
        .scale(&QLaurentPoly::q_pow(ii * kk));
    let mut parts = vec![VerificationReport::compare_multi("lemma31a", instance!(), &lhs_a, &rhs_a)];
    if k < j {
        let lhs_b = product(&[z_poch(1, 0, j), z_poch(-1, 1, i)]);
        let rhs_b = product(&[z_poch(1, -ii, k + 1), z_poch(1, kk + 1, j - k - 1), den])
            .scale(&QLaurentPoly::q_pow((kk + 1) * ii));
        parts.push(VerificationReport::compare_multi("lemma31b", instance!(), &lhs_b, &rhs_b));
    }
    Ok(VerificationReport::all_of(
        "lemma31",
        instance!("i" => i, "j" => j, "k" => k),
        parts,
    ))
}

/// `sum_{k=0}^t q^{k(n-t)} / ((q^-k)_k (q)_{t-k}) = [n, t]`.
pub fn check_prop41(n: u32, t: u32) -> Result<VerificationReport> {
    let mut lhs = QRat::zero();
    for k in 0..=t {
        let den = &q_pochhammer(&QLaurentPoly::q_pow(-(k as i64)), k) * &q_factorial(t - k);
        let num = QLaurentPoly::q_pow(k as i64 * (n as i64 - t as i64));
        lhs = &lhs + &QRat::new(num, den)?;
    }
    let rhs = QRat::from_poly(q_binomial(n, t));
    Ok(VerificationReport::compare_rat("prop41", instance!("n" => n, "t" => t), &lhs, &rhs))
}

fn check_sets(i_set: &IndexSet, a: &Composition) -> Result<()> {
    if i_set.is_empty() {
        return Err(Error::invalid("I must be non-empty"));
    }
    if i_set.max().is_some_and(|m| m > a.len()) {
        return Err(Error::invalid(format!("{i_set} out of range for {} parts", a.len())));
    }
    Ok(())
}

/// `sum_{j >= i} a_j`.
fn tail_from(a: &Composition, i: usize) -> i64 {
    a[i - 1..].iter().map(|&x| x as i64).sum()
}

/// How `L` changes when position `i in J` is deleted from `a`, `I` and `J`.
pub fn check_prop51(i_set: &IndexSet, j_set: &IndexSet, i: usize, a: &Composition) -> Result<VerificationReport> {
    check_sets(i_set, a)?;
    if j_set.is_empty() || !j_set.is_subset_of(i_set) || !j_set.contains(i) {
        return Err(Error::invalid(format!("need {{}} != J ⊆ I and i ∈ J, got I={i_set} J={j_set} i={i}")));
    }
    let lhs = l_statistic(&i_set.after_deleting(i), &j_set.after_deleting(i), &a.delete(i))? as i64;
    let j_tail: i64 = j_set.iter().filter(|&j| j >= i).map(|j| a.at(j) as i64).sum();
    let rhs = l_statistic(i_set, j_set, a)? as i64 - tail_from(a, i) + j_tail;
    Ok(VerificationReport::compare_int(
        "prop51",
        instance!("I" => i_set, "J" => j_set, "i" => i, "a" => a),
        lhs,
        rhs,
    ))
}

/// The subset sum over `J ⊆ I \ {i}` that collapses to a single power of `q`.
pub fn check_lemma52(i_set: &IndexSet, i: usize, a: &Composition) -> Result<VerificationReport> {
    check_sets(i_set, a)?;
    if i_set.len() < 2 || !i_set.contains(i) {
        return Err(Error::invalid(format!("need |I| >= 2 and i ∈ I, got I={i_set} i={i}")));
    }
    let rest = i_set.after_deleting(i);
    let a_del = a.delete(i);
    let mut lhs = QLaurentPoly::zero();
    for j_set in rest.nonempty_subsets() {
        let e = l_statistic(&rest, &j_set, &a_del)? + a_del.sum_over(&j_set) as u64;
        lhs += &signed_q_pow(sign(j_set.len()), e as i64);
    }
    let e = l_statistic(i_set, &IndexSet::singleton(i), a)? as i64 - a.tail_sum(i) as i64;
    let rhs = signed_q_pow(-1, e);
    Ok(VerificationReport::compare_poly(
        "lemma52",
        instance!("I" => i_set, "i" => i, "a" => a),
        &lhs,
        &rhs,
    ))
}

/// The telescoping sum over `i in J`.
pub fn check_lemma53(i_set: &IndexSet, j_set: &IndexSet, a: &Composition) -> Result<VerificationReport> {
    check_sets(i_set, a)?;
    if j_set.is_empty() || !j_set.is_subset_of(i_set) {
        return Err(Error::invalid(format!("need {{}} != J ⊆ I, got I={i_set} J={j_set}")));
    }
    let mut lhs = QLaurentPoly::zero();
    for i in j_set.iter() {
        let l = l_statistic(&i_set.after_deleting(i), &j_set.after_deleting(i), &a.delete(i))?;
        let e = a.tail_sum(i) as i64 + l as i64;
        lhs += &(&signed_q_pow(sign(j_set.len()), e) * &one_minus_q_pow(a.at(i) as i64));
    }
    let rhs = &signed_q_pow(sign(j_set.len()), l_statistic(i_set, j_set, a)? as i64)
        * &one_minus_q_pow(a.sum_over(j_set) as i64);
    Ok(VerificationReport::compare_poly(
        "lemma53",
        instance!("I" => i_set, "J" => j_set, "a" => a),
        &lhs,
        &rhs,
    ))
}

/// The double sum over `i in I`, `J ⊆ I \ {i}` against the single sum over
/// `J ⊆ I`. Reports `degenerate` if any denominator `1 - q^0` occurs.
pub fn check_prop54(i_set: &IndexSet, a: &Composition, r: i64) -> Result<VerificationReport> {
    check_sets(i_set, a)?;
    if i_set.len() < 2 {
        return Err(Error::invalid(format!("need |I| >= 2, got {i_set}")));
    }
    let inst = instance!("I" => i_set, "a" => a, "r" => r);
    let size = a.size() as i64;

    for j_set in i_set.nonempty_subsets() {
        if size - a.sum_over(&j_set) as i64 + r == 0 {
            return Ok(VerificationReport::degenerate("prop54", inst));
        }
    }
    for i in i_set.iter() {
        for j_set in i_set.without(i).nonempty_subsets() {
            if size - a.at(i) as i64 - a.sum_over(&j_set) as i64 + r == 0 {
                return Ok(VerificationReport::degenerate("prop54", inst));
            }
        }
    }

    let mut lhs = QRat::zero();
    for i in i_set.iter() {
        let rest = i_set.after_deleting(i);
        let a_del = a.delete(i);
        let ai = a.at(i) as i64;
        for j_set in i_set.without(i).nonempty_subsets() {
            let a_j = a.sum_over(&j_set) as i64;
            let e = a.tail_sum(i) as i64
                + l_statistic(&rest, &j_set.after_deleting(i), &a_del)? as i64;
            let num = &(&signed_q_pow(sign(j_set.len() + 1), e) * &one_minus_q_pow(ai))
                * &one_minus_q_pow(a_j);
            let den = &one_minus_q_pow(size - ai + r) * &one_minus_q_pow(size - ai - a_j + r);
            lhs = &lhs + &QRat::new(num, den)?;
        }
    }
    let mut rhs = QRat::zero();
    for j_set in i_set.nonempty_subsets() {
        let a_j = a.sum_over(&j_set) as i64;
        let num = &signed_q_pow(sign(j_set.len()), l_statistic(i_set, &j_set, a)? as i64)
            * &one_minus_q_pow(a_j);
        rhs = &rhs + &QRat::new(num, one_minus_q_pow(size - a_j + r))?;
    }
    Ok(VerificationReport::compare_rat("prop54", inst, &lhs, &rhs))
}

/// The two q-binomial/q-multinomial conversions used when a single maximal
/// part is removed, for position `k` of `a` and `r >= 1`.
pub fn check_section6(a: &Composition, k: usize, r: u32) -> Result<VerificationReport> {
    if k == 0 || k > a.len() || r == 0 || a.contains(&0) {
        return Err(Error::invalid("need 1 <= k <= n, r >= 1 and positive parts"));
    }
    let size = a.size();
    let ak = a.at(k);
    let binom = QRat::from_poly(q_binomial(size + r - 1, ak - 1));
    let ratio = QRat::new(one_minus_q_pow(ak as i64), one_minus_q_pow((size - ak + r) as i64))?;

    let first = &ratio * &multinomial_ratio(a, &IndexSet::singleton(k), r)?;
    let rest = a.delete(k);
    let m_small = QRat::from_poly(q_multinomial(rest.size() + r - 1, &rest.appended(r - 1))?);
    let m_big = QRat::from_poly(q_multinomial(size + r - 1, &a.appended(r - 1))?);

    let parts = vec![
        VerificationReport::compare_rat("section6_ratio", instance!(), &binom, &first),
        VerificationReport::compare_rat("section6_product", instance!(), &(&binom * &m_small), &(&ratio * &m_big)),
    ];
    Ok(VerificationReport::all_of(
        "section6",
        instance!("a" => a, "k" => k, "r" => r),
        parts,
    ))
}
