//! q-shifted factorials, Gaussian binomials and q-multinomials.

use std::sync::{OnceLock, RwLock};

use super::QLaurentPoly;
use crate::error::{Error, Result};

/// `(z; q)_k = (1 - z)(1 - zq)...(1 - zq^(k-1))`. `k = 0` gives 1.
pub fn q_pochhammer(z: &QLaurentPoly, k: u32) -> QLaurentPoly {
    let one = QLaurentPoly::one();
    let mut acc = QLaurentPoly::one();
    for i in 0..k {
        acc = &acc * &(&one - &z.shift(i as i64));
    }
    acc
}

/// `(q; q)_k`.
pub fn q_factorial(k: u32) -> QLaurentPoly {
    q_pochhammer(&QLaurentPoly::q_pow(1), k)
}

/// `1 - q^e`.
pub fn one_minus_q_pow(e: i64) -> QLaurentPoly {
    &QLaurentPoly::one() - &QLaurentPoly::q_pow(e)
}

/// Rows of the q-Pascal triangle computed so far; row `n` has `n + 1` entries.
fn pascal() -> &'static RwLock<Vec<Vec<QLaurentPoly>>> {
    static TABLE: OnceLock<RwLock<Vec<Vec<QLaurentPoly>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![QLaurentPoly::one()]]))
}

/// The Gaussian binomial `[n, k]_q`, zero when `k > n`.
///
/// Built from `[n, k] = [n-1, k-1] + q^k [n-1, k]` and cached in a shared
/// table, so no division happens here.
pub fn q_binomial(n: u32, k: u32) -> QLaurentPoly {
    if k > n {
        return QLaurentPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let table = pascal().read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = table.get(n) {
            return row[k].clone();
        }
    }
    let mut table = pascal().write().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let prev = table.last().expect("row 0 is seeded");
        let m = prev.len();
        let mut row = Vec::with_capacity(m + 1);
        row.push(QLaurentPoly::one());
        for j in 1..m {
            row.push(&prev[j - 1] + &prev[j].shift(j as i64));
        }
        row.push(QLaurentPoly::one());
        table.push(row);
    }
    table[n][k].clone()
}

/// The q-multinomial `(q)_n / prod (q)_{s_i}`; requires `sum(s) == n`.
///
/// Evaluated as the telescoping product of Gaussian binomials
/// `prod_i [s_1 + ... + s_i, s_i]`.
pub fn q_multinomial(n: u32, parts: &[u32]) -> Result<QLaurentPoly> {
    let total: u64 = parts.iter().map(|&s| s as u64).sum();
    if total != n as u64 {
        return Err(Error::invalid(format!(
            "q-multinomial parts sum to {total}, expected {n}"
        )));
    }
    let mut acc = QLaurentPoly::one();
    let mut running = 0u32;
    for &s in parts {
        running += s;
        if s > 0 && s < running {
            acc = &acc * &q_binomial(running, s);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> QLaurentPoly {
        QLaurentPoly::from_i64s(min, c)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(&QLaurentPoly::q_pow(1), 2), p(0, &[1, -1, -1, 1]));
        assert_eq!(q_pochhammer(&p(0, &[7, 3]), 0), QLaurentPoly::one());
        assert_eq!(q_pochhammer(&QLaurentPoly::q_pow(-1), 1), p(-1, &[-1, 1]));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(q_binomial(9, 0), QLaurentPoly::one());
        assert_eq!(q_binomial(2, 1), p(0, &[1, 1]));
        assert_eq!(q_binomial(4, 2), p(0, &[1, 1, 2, 1, 1]));
        assert!(q_binomial(2, 3).is_zero());
    }

    #[test]
    fn binomial_matches_divided_definition() {
        for n in 0..=12u32 {
            for k in 0..=n {
                let num = q_pochhammer(&QLaurentPoly::q_pow((n - k + 1) as i64), k);
                let expect = num.div_exact(&q_factorial(k)).expect("exact");
                assert_eq!(q_binomial(n, k), expect, "[{n},{k}]");
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(q_multinomial(5, &[5]).unwrap(), QLaurentPoly::one());
        assert_eq!(q_multinomial(6, &[2, 4]).unwrap(), q_binomial(6, 2));
        assert_eq!(q_multinomial(2, &[1, 1, 0]).unwrap(), p(0, &[1, 1]));
        assert!(q_multinomial(3, &[1, 1]).is_err());
        assert_eq!(q_multinomial(0, &[]).unwrap(), QLaurentPoly::one());
    }

    #[test]
    fn multinomial_matches_factorial_quotient() {
        let cases: &[&[u32]] = &[&[1, 2, 3], &[0, 4, 1], &[2, 2, 2, 1], &[3, 0, 0, 3]];
        for parts in cases {
            let n: u32 = parts.iter().sum();
            let den: QLaurentPoly = parts.iter().map(|&s| q_factorial(s)).product();
            let expect = q_factorial(n).div_exact(&den).unwrap();
            assert_eq!(q_multinomial(n, parts).unwrap(), expect, "{parts:?}");
        }
    }

    #[test]
    fn pascal_table_is_thread_safe() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || q_binomial(20 + t, 7)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            let n = 20 + t as u32;
            let num = q_pochhammer(&QLaurentPoly::q_pow((n - 7 + 1) as i64), 7);
            assert_eq!(got, num.div_exact(&q_factorial(7)).unwrap());
        }
    }
}
