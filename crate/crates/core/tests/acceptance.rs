//! Acceptance suite. Runs each criterion at exact equality and prints one
//! line per criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use qdyson::dyson::{eval_inductive, eval_recursive, Composition};
use qdyson::oracle::{brute_d, VerificationReport};
use qdyson::sweep::{self, Identity, Parallelism, SweepParams, Tally};
use qdyson::{QLaurentPoly, Result};

type Criterion = (&'static str, fn() -> Result<Outcome>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[VerificationReport], expected: usize, allow_degenerate: bool) -> Outcome {
    let t = Tally::of(reports);
    let mut ok = t.fail == 0 && reports.len() == expected;
    if !allow_degenerate {
        ok &= t.degenerate == 0;
    }
    let mut detail = format!(
        "{} instances (expected {expected}), {} pass, {} fail, {} degenerate",
        reports.len(),
        t.pass,
        t.fail,
        t.degenerate
    );
    if let Some(f) = reports.iter().find(|r| r.failed()) {
        detail.push_str(&format!("; first failure {} {}", f.identity, f.instance));
    }
    Outcome { ok, detail }
}

fn run(id: Identity) -> Result<Vec<VerificationReport>> {
    sweep::run(id, &SweepParams::default(), Parallelism::Parallel)
}

fn c1_qdyson() -> Result<Outcome> {
    // 3 + 9 + 27 with parts up to 3, plus 16 four-variable instances.
    Ok(from_reports(&run(Identity::Qdyson)?, 3 + 9 + 27 + 16, false))
}

fn c2_kadell() -> Result<Outcome> {
    let reports = run(Identity::Kadell)?;
    // sum over n of 3^n * #{v : |v| = r, 1 <= r <= 4}
    let expected = 3 * 4 + 9 * (2 + 3 + 4 + 5) + 27 * (3 + 6 + 10 + 15);
    let zero_branch = reports
        .iter()
        .filter(|r| {
            let v = r.instance["v"].as_array().expect("v");
            v.iter().filter(|x| x.as_u64() != Some(0)).count() > 1
        })
        .count();
    let mut out = from_reports(&reports, expected, false);
    out.ok &= zero_branch > 0;
    out.detail.push_str(&format!(", {zero_branch} in the zero branch"));
    Ok(out)
}

fn theorem_count() -> usize {
    // n <= 3: 3^n choices of a, 4^n of v; n = 4: 2^4 and 3^4.
    (1..=3u32).map(|n| 3usize.pow(n) * 4usize.pow(n)).sum::<usize>() + 16 * 81
}

fn c3_theorem() -> Result<Outcome> {
    Ok(from_reports(&run(Identity::Theorem)?, theorem_count(), false))
}

fn c4_corollary() -> Result<Outcome> {
    let expected = sweep::theorem_instances(&SweepParams::default())
        .iter()
        .filter(|(v, _)| {
            let m = *v.iter().max().unwrap();
            m > 0 && v.iter().filter(|&&x| x == m).count() == 1
        })
        .count();
    Ok(from_reports(&run(Identity::Corollary)?, expected, false))
}

fn c5_splitting() -> Result<Outcome> {
    let reports = run(Identity::Splitting)?;
    let mut a_list: Vec<Vec<u32>> = Vec::new();
    for n in 1..=3 {
        a_list.extend(sweep::compositions_bounded(n, 1, 2));
    }
    a_list.push(vec![2, 2, 1]);
    let splits = a_list.len();
    let series: usize = a_list.iter().map(|a| a.iter().sum::<u32>() as usize).sum();
    let n_split = reports.iter().filter(|r| r.identity == "splitting").count();
    let mut out = from_reports(&reports, splits + series, false);
    out.ok &= n_split == splits;
    out.detail.push_str(&format!(", {n_split} splittings"));
    Ok(out)
}

fn c6_auxiliary() -> Result<Outcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for id in [
        Identity::Lemma31,
        Identity::Prop41,
        Identity::Prop51,
        Identity::Lemma52,
        Identity::Lemma53,
        Identity::Prop54,
    ] {
        let reports = run(id)?;
        let t = Tally::of(&reports);
        // degenerate instances are excluded, never counted as passes
        ok &= t.fail == 0 && !reports.is_empty();
        if id != Identity::Prop54 {
            ok &= t.degenerate == 0;
        }
        parts.push(format!("{id} {}/{}", t.pass, t.total()));
    }
    let lemma31 = run(Identity::Lemma31)?.len();
    let prop41 = run(Identity::Prop41)?.len();
    ok &= lemma31 == 4 * (1 + 2 + 3 + 4) && prop41 == (1..=9).sum::<usize>();
    Ok(Outcome {
        ok,
        detail: parts.join(", "),
    })
}

/// Coefficients of the Gaussian binomial `[n, k]` by counting partitions
/// that fit in a `k x (n - k)` box, by size.
fn box_partitions(n: u32, k: u32) -> QLaurentPoly {
    fn go(parts_left: u32, max_part: u32, size: usize, counts: &mut Vec<i64>) {
        counts[size] += 1;
        if parts_left == 0 {
            return;
        }
        for p in 1..=max_part {
            go(parts_left - 1, p, size + p as usize, counts);
        }
    }
    let mut counts = vec![0i64; (k * (n - k)) as usize + 1];
    go(k, n - k, 0, &mut counts);
    QLaurentPoly::from_i64s(0, &counts)
}

fn c7_hand_values() -> Result<Outcome> {
    let mut bad = Vec::new();
    let one_plus_q = QLaurentPoly::from_i64s(0, &[1, 1]);
    let q = QLaurentPoly::from_i64s(1, &[1]);
    if brute_d(&[1, 1], &[1, 1], &[1, 1])? != one_plus_q {
        bad.push("D_(1,1),(1,1)((1,1))".to_string());
    }
    if brute_d(&[1, 0], &[1], &[1, 1])? != q {
        bad.push("D_(1,0),(1)((1,1))".to_string());
    }
    let c = |x: &[u32]| Composition::from(x);
    if eval_recursive(&c(&[1, 1]), &c(&[1, 1]))? != one_plus_q || eval_recursive(&c(&[1, 0]), &c(&[1, 1]))? != q {
        bad.push("recursion on the two-variable values".to_string());
    }
    let mut checked = 2;
    for r in 1..=5u32 {
        for a1 in 1..=5u32 {
            let expect = box_partitions(a1 + r - 1, r);
            let brute = brute_d(&[r as i32], &[r], &[a1])?;
            let rec = eval_recursive(&c(&[r]), &c(&[a1]))?;
            let ind = eval_inductive(&c(&[r]), &c(&[a1]))?;
            if brute != expect || rec != expect || ind != expect {
                bad.push(format!("D_(r),(r)((a1)) at r={r}, a1={a1}"));
            }
            checked += 1;
        }
    }
    Ok(Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{checked} values")
        } else {
            format!("mismatch: {}", bad.join("; "))
        },
    })
}

fn c8_section6() -> Result<Outcome> {
    let mut expected = 0;
    for n in 1..=3usize {
        for a in sweep::compositions_bounded(n, 1, 6) {
            if a.iter().sum::<u32>() <= 12 {
                expected += n * 6;
            }
        }
    }
    Ok(from_reports(&run(Identity::Section6)?, expected, false))
}

fn c9_determinism() -> Result<Outcome> {
    let params = SweepParams::default();
    let json_at = |threads: usize| -> Result<String> {
        let reports = sweep::with_threads(Some(threads), || sweep::run(Identity::Theorem, &params, Parallelism::Parallel))??;
        Ok(serde_json::to_string(&reports).expect("serialisable"))
    };
    let one = json_at(1)?;
    let eight = json_at(8)?;
    let seq = serde_json::to_string(&sweep::run(Identity::Theorem, &params, Parallelism::Sequential)?).expect("serialisable");
    Ok(Outcome {
        ok: one == eight && one == seq,
        detail: format!("{} bytes at 1 and 8 threads and sequentially", one.len()),
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("q-Dyson constant term", c1_qdyson),
        ("Kadell single-part values", c2_kadell),
        ("recursion = oracle = inductive", c3_theorem),
        ("unique-maximum factorisation", c4_corollary),
        ("splitting and power-series terms", c5_splitting),
        ("auxiliary identities", c6_auxiliary),
        ("hand-anchored values", c7_hand_values),
        ("binomial/multinomial conversions", c8_section6),
        ("determinism across thread counts", c9_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f().unwrap_or_else(|e| Outcome {
            ok: false,
            detail: format!("error: {e}"),
        });
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        if !outcome.ok {
            failed += 1;
        }
        println!(
            "criterion {} [{name}]: {status} ({}; {:.1}s)",
            i + 1,
            outcome.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
