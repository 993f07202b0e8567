//! Exhaustive identity sweeps.
//!
//! Each identity enumerates its instances in a fixed canonical order, checks
//! them through [`map_ordered`], and returns reports in that same order, so
//! output is identical for any thread count.

mod enumerate;
mod exec;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dyson::{
    corollary_rhs, eval_corollary, eval_inductive, eval_recursive, kadell_rhs, qdyson_rhs, Composition, IndexSet,
};
use crate::error::{Error, Result};
use crate::instance;
use crate::laurent::dyson_product;
use crate::oracle::{
    check_lemma31, check_lemma52, check_lemma53, check_power_series, check_prop41, check_prop51,
    check_prop54, check_section6, verify_splitting, KernelCache, Status, VerificationReport,
};

pub use enumerate::{compositions_bounded, compositions_of_sum};
pub use exec::{map_ordered, with_threads, Parallelism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Qdyson,
    Kadell,
    Theorem,
    Corollary,
    Splitting,
    Lemma31,
    Prop41,
    Prop51,
    Lemma52,
    Lemma53,
    Prop54,
    Section6,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Qdyson,
        Identity::Kadell,
        Identity::Theorem,
        Identity::Corollary,
        Identity::Splitting,
        Identity::Lemma31,
        Identity::Prop41,
        Identity::Prop51,
        Identity::Lemma52,
        Identity::Lemma53,
        Identity::Prop54,
        Identity::Section6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Qdyson => "qdyson",
            Identity::Kadell => "kadell",
            Identity::Theorem => "theorem",
            Identity::Corollary => "corollary",
            Identity::Splitting => "splitting",
            Identity::Lemma31 => "lemma31",
            Identity::Prop41 => "prop41",
            Identity::Prop51 => "prop51",
            Identity::Lemma52 => "lemma52",
            Identity::Lemma53 => "lemma53",
            Identity::Prop54 => "prop54",
            Identity::Section6 => "section6",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown identity {s:?}")))
    }
}

/// Ranges for a sweep. Unset fields fall back to per-identity defaults.
#[derive(Clone, Debug, Default)]
pub struct SweepParams {
    /// Exact number of variables (otherwise `1..=nmax`).
    pub n: Option<usize>,
    pub nmax: Option<usize>,
    /// A single `a` instead of a range.
    pub a: Option<Vec<u32>>,
    /// A single `v` instead of a range (theorem and corollary only).
    pub v: Option<Vec<u32>>,
    pub amax: Option<u32>,
    pub vmax: Option<u32>,
    pub rmax: Option<u32>,
    /// Bound on `i` for lemma31, on `n` for prop41.
    pub imax: Option<u32>,
    pub jmax: Option<u32>,
    /// Bound on `|a|` for section6.
    pub size_max: Option<u32>,
}

impl SweepParams {
    fn ns(&self, lo: usize, default_max: usize) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (lo..=self.nmax.unwrap_or(default_max)).collect(),
        }
    }

    /// All `a` in range for `n` variables, parts in `1..=amax`.
    fn a_range(&self, n: usize, default_amax: u32) -> Vec<Vec<u32>> {
        match &self.a {
            Some(a) if a.len() == n => vec![a.clone()],
            Some(_) => vec![],
            None => compositions_bounded(n, 1, self.amax.unwrap_or(default_amax)),
        }
    }

    fn n_values(&self, lo: usize, default_max: usize) -> Vec<usize> {
        match &self.a {
            Some(a) => vec![a.len()],
            None => self.ns(lo, default_max),
        }
    }
}

/// Default `(amax, vmax)` for `n` variables; four or more variables use a
/// smaller box.
fn theorem_box(n: usize) -> (u32, u32) {
    if n >= 4 {
        (2, 2)
    } else {
        (3, 3)
    }
}

/// Runs every instance of `identity` within `params`.
pub fn run(identity: Identity, params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    match identity {
        Identity::Qdyson => qdyson(params, mode),
        Identity::Kadell => kadell(params, mode),
        Identity::Theorem => theorem(params, mode, false),
        Identity::Corollary => theorem(params, mode, true),
        Identity::Splitting => splitting(params, mode),
        Identity::Lemma31 => lemma31(params, mode),
        Identity::Prop41 => prop41(params, mode),
        Identity::Prop51 => subset_sweep(Identity::Prop51, params, mode),
        Identity::Lemma52 => subset_sweep(Identity::Lemma52, params, mode),
        Identity::Lemma53 => subset_sweep(Identity::Lemma53, params, mode),
        Identity::Prop54 => prop54(params, mode),
        Identity::Section6 => section6(params, mode),
    }
}

fn collect(results: Vec<Result<VerificationReport>>) -> Result<Vec<VerificationReport>> {
    results.into_iter().collect()
}

fn qdyson(params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let mut items = Vec::new();
    for n in params.n_values(1, 4) {
        let (amax, _) = theorem_box(n);
        items.extend(params.a_range(n, amax));
    }
    collect(map_ordered(&items, mode, |a| {
        let lhs = dyson_product(a).constant_term();
        let rhs = qdyson_rhs(&Composition::from(a.as_slice()));
        Ok(VerificationReport::compare_poly("qdyson", instance!("a" => a), &lhs, &rhs))
    }))
}

fn kadell(params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let rmax = params.rmax.unwrap_or(4);
    let mut items = Vec::new();
    for n in params.n_values(1, 3) {
        for a in params.a_range(n, 3) {
            for r in 1..=rmax {
                for v in compositions_of_sum(r, n) {
                    items.push((v, a.clone(), r));
                }
            }
        }
    }
    let cache = KernelCache::new();
    collect(map_ordered(&items, mode, |(v, a, r)| {
        let vi: Vec<i32> = v.iter().map(|&x| x as i32).collect();
        let lhs = cache.brute_d(&vi, &[*r], a)?;
        let rhs = kadell_rhs(&v.clone().into(), &a.clone().into())?;
        Ok(VerificationReport::compare_poly(
            "kadell",
            instance!("v" => v, "a" => a, "r" => r),
            &lhs,
            &rhs,
        ))
    }))
}

/// The criterion-3 instance set: `v` with parts in `0..=vmax`, `a` with
/// parts in `1..=amax`.
pub fn theorem_instances(params: &SweepParams) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut items = Vec::new();
    let ns = match (&params.a, &params.v) {
        (Some(a), _) => vec![a.len()],
        (None, Some(v)) => vec![v.len()],
        _ => params.ns(1, 4),
    };
    for n in ns {
        let (amax, vmax) = theorem_box(n);
        let vs = match &params.v {
            Some(v) if v.len() == n => vec![v.clone()],
            Some(_) => vec![],
            None => compositions_bounded(n, 0, params.vmax.unwrap_or(vmax)),
        };
        for a in params.a_range(n, amax) {
            for v in &vs {
                items.push((v.clone(), a.clone()));
            }
        }
    }
    items
}

fn theorem(params: &SweepParams, mode: Parallelism, corollary: bool) -> Result<Vec<VerificationReport>> {
    let mut items = theorem_instances(params);
    if corollary {
        items.retain(|(v, _)| {
            let m = v.iter().copied().max().unwrap_or(0);
            m > 0 && v.iter().filter(|&&x| x == m).count() == 1
        });
    }
    let cache = KernelCache::new();
    collect(map_ordered(&items, mode, |(v, a)| {
        let vc = Composition::from(v.as_slice());
        let ac = Composition::from(a.as_slice());
        let inst = instance!("v" => v, "a" => a);
        let vi: Vec<i32> = v.iter().map(|&x| x as i32).collect();
        let oracle = cache.brute_d(&vi, &vc.partition(), a)?;
        if corollary {
            let step = corollary_rhs(&vc, &ac)?;
            let vk: Vec<i32> = step.v.iter().map(|&x| x as i32).collect();
            let reduced = cache.brute_d(&vk, &step.v.partition(), &step.a)?;
            let rhs = &step.factor * &reduced;
            let rec = eval_recursive(&vc, &ac)?;
            let cor = eval_corollary(&vc, &ac)?;
            return Ok(VerificationReport::all_of(
                "corollary",
                inst,
                vec![
                    VerificationReport::compare_poly("factor_vs_oracle", instance!(), &oracle, &rhs),
                    VerificationReport::compare_poly("corollary_vs_recursive", instance!(), &cor, &rec),
                ],
            ));
        }
        let rec = eval_recursive(&vc, &ac)?;
        let ind = eval_inductive(&vc, &ac)?;
        Ok(VerificationReport::all_of(
            "theorem",
            inst,
            vec![
                VerificationReport::compare_poly("recursive_vs_oracle", instance!(), &rec, &oracle),
                VerificationReport::compare_poly("recursive_vs_inductive", instance!(), &rec, &ind),
            ],
        ))
    }))
}

fn splitting(params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let mut items: Vec<Vec<u32>> = Vec::new();
    for n in params.n_values(1, 3) {
        items.extend(params.a_range(n, 2));
    }
    if params.a.is_none() && params.n.is_none() && params.nmax.is_none() && params.amax.is_none() {
        items.push(vec![2, 2, 1]);
    }
    let per_a = map_ordered(&items, mode, |a| -> Result<Vec<VerificationReport>> {
        let mut out = vec![verify_splitting(a)?];
        for i in 1..=a.len() {
            for j in 0..a[i - 1] {
                out.push(check_power_series(a, i, j)?);
            }
        }
        Ok(out)
    });
    let mut reports = Vec::new();
    for r in per_a {
        reports.extend(r?);
    }
    Ok(reports)
}

fn lemma31(params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let mut items = Vec::new();
    for i in 1..=params.imax.unwrap_or(4) {
        for j in 1..=params.jmax.unwrap_or(4) {
            for k in 0..j {
                items.push((i, j, k));
            }
        }
    }
    collect(map_ordered(&items, mode, |&(i, j, k)| check_lemma31(i, j, k)))
}

fn prop41(params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let nmax = params.imax.or(params.nmax.map(|n| n as u32)).unwrap_or(8);
    let items: Vec<(u32, u32)> = (0..=nmax).flat_map(|n| (0..=n).map(move |t| (n, t))).collect();
    collect(map_ordered(&items, mode, |&(n, t)| check_prop41(n, t)))
}

fn subset_sweep(identity: Identity, params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let mut items = Vec::new();
    for n in params.n_values(1, 5) {
        let full = IndexSet::new((1..=n).collect())?;
        for a in params.a_range(n, 3) {
            items.push((full.clone(), Composition::from(a)));
        }
    }
    let per_a = map_ordered(&items, mode, |(full, a)| -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for i_set in full.nonempty_subsets() {
            match identity {
                Identity::Prop51 => {
                    for j_set in i_set.nonempty_subsets() {
                        for i in j_set.iter() {
                            out.push(check_prop51(&i_set, &j_set, i, a)?);
                        }
                    }
                }
                Identity::Lemma52 if i_set.len() >= 2 => {
                    for i in i_set.iter() {
                        out.push(check_lemma52(&i_set, i, a)?);
                    }
                }
                Identity::Lemma53 => {
                    for j_set in i_set.nonempty_subsets() {
                        out.push(check_lemma53(&i_set, &j_set, a)?);
                    }
                }
                _ => {}
            }
        }
        Ok(out)
    });
    let mut reports = Vec::new();
    for r in per_a {
        reports.extend(r?);
    }
    Ok(reports)
}

fn prop54(params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let rmax = params.rmax.unwrap_or(4) as i64;
    let mut items = Vec::new();
    for n in params.n_values(2, 4) {
        let full = IndexSet::new((1..=n).collect())?;
        for a in params.a_range(n, 3) {
            for i_set in full.nonempty_subsets().filter(|s| s.len() >= 2) {
                for r in 1..=rmax {
                    items.push((i_set.clone(), Composition::from(a.clone()), r));
                }
            }
        }
    }
    collect(map_ordered(&items, mode, |(i_set, a, r)| check_prop54(i_set, a, *r)))
}

fn section6(params: &SweepParams, mode: Parallelism) -> Result<Vec<VerificationReport>> {
    let amax = params.amax.unwrap_or(6);
    let rmax = params.rmax.unwrap_or(6);
    let size_max = params.size_max.unwrap_or(12);
    let mut items = Vec::new();
    for n in params.n_values(1, 3) {
        for a in params.a_range(n, amax) {
            if a.iter().sum::<u32>() > size_max {
                continue;
            }
            for k in 1..=n {
                for r in 1..=rmax {
                    items.push((Composition::from(a.clone()), k, r));
                }
            }
        }
    }
    collect(map_ordered(&items, mode, |(a, k, r)| check_section6(a, *k, *r)))
}

/// Pass/fail/degenerate counts over a report list.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub degenerate: usize,
}

impl Tally {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut t = Tally::default();
        for r in reports {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Degenerate => t.degenerate += 1,
            }
        }
        t
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.degenerate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("lemma99".parse::<Identity>().is_err());
    }

    #[test]
    fn qdyson_sweep_size() {
        let p = SweepParams {
            n: Some(2),
            amax: Some(3),
            ..Default::default()
        };
        let reports = run(Identity::Qdyson, &p, Parallelism::Sequential).unwrap();
        assert_eq!(reports.len(), 9);
        assert!(reports.iter().all(VerificationReport::passed));
    }

    #[test]
    fn single_splitting_instance() {
        let p = SweepParams {
            a: Some(vec![1, 1]),
            ..Default::default()
        };
        let reports = run(Identity::Splitting, &p, Parallelism::Sequential).unwrap();
        assert_eq!(reports[0].identity, "splitting");
        assert!(reports.iter().all(VerificationReport::passed));
        assert_eq!(reports.len(), 3);
    }

    #[test]
    fn prop54_small() {
        let p = SweepParams {
            n: Some(2),
            amax: Some(2),
            rmax: Some(2),
            ..Default::default()
        };
        let reports = run(Identity::Prop54, &p, Parallelism::Parallel).unwrap();
        assert_eq!(reports.len(), 4 * 2);
        assert_eq!(Tally::of(&reports).fail, 0);
    }

    #[test]
    fn theorem_small_box_sequential_equals_parallel() {
        let p = SweepParams {
            nmax: Some(2),
            amax: Some(2),
            vmax: Some(2),
            ..Default::default()
        };
        let seq = run(Identity::Theorem, &p, Parallelism::Sequential).unwrap();
        let par = run(Identity::Theorem, &p, Parallelism::Parallel).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.len(), 2 * 3 + 4 * 9);
        assert!(seq.iter().all(VerificationReport::passed));
    }
}
