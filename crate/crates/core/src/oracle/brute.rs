//! Ground truth by full expansion of `x^{-v} h_lambda(x^(a)) * kernel`.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::laurent::{dyson_product, h_lambda, ExponentVector, MultiLaurent};
use crate::qring::QLaurentPoly;

/// `D_{v,lambda}(a)`: the coefficient of `x^v` in
/// `h_lambda(x^(a)) * prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}`.
///
/// Both factors are expanded completely; `v` may have negative entries.
pub fn brute_d(v: &[i32], lambda: &[u32], a: &[u32]) -> Result<QLaurentPoly> {
    validate(v, lambda, a)?;
    if !same_degree(v, lambda) {
        return Ok(QLaurentPoly::zero());
    }
    brute_d_with_kernel(v, lambda, a, &dyson_product(a))
}

/// As [`brute_d`] with a precomputed kernel for `a`.
pub fn brute_d_with_kernel(
    v: &[i32],
    lambda: &[u32],
    a: &[u32],
    kernel: &MultiLaurent,
) -> Result<QLaurentPoly> {
    validate(v, lambda, a)?;
    if kernel.nvars() != a.len() {
        return Err(Error::VariableMismatch {
            left: kernel.nvars(),
            right: a.len(),
        });
    }
    if !same_degree(v, lambda) {
        return Ok(QLaurentPoly::zero());
    }
    let h = h_lambda(lambda, a);
    h.coefficient_of_product(kernel, &ExponentVector::new(v.to_vec()))
}

fn same_degree(v: &[i32], lambda: &[u32]) -> bool {
    let dv: i64 = v.iter().map(|&x| x as i64).sum();
    let dl: i64 = lambda.iter().map(|&x| x as i64).sum();
    dv == dl
}

fn validate(v: &[i32], lambda: &[u32], a: &[u32]) -> Result<()> {
    if v.len() != a.len() {
        return Err(Error::invalid(format!(
            "v has {} parts but a has {}",
            v.len(),
            a.len()
        )));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid(format!("{lambda:?} is not weakly decreasing")));
    }
    Ok(())
}

/// Shared cache of expanded kernels, keyed by `a`.
#[derive(Default)]
pub struct KernelCache {
    map: RwLock<HashMap<Vec<u32>, Arc<MultiLaurent>>>,
}

impl KernelCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, a: &[u32]) -> Arc<MultiLaurent> {
        if let Some(k) = self.map.read().unwrap_or_else(|e| e.into_inner()).get(a) {
            return Arc::clone(k);
        }
        let kernel = Arc::new(dyson_product(a));
        let mut map = self.map.write().unwrap_or_else(|e| e.into_inner());
        Arc::clone(map.entry(a.to_vec()).or_insert(kernel))
    }

    pub fn brute_d(&self, v: &[i32], lambda: &[u32], a: &[u32]) -> Result<QLaurentPoly> {
        validate(v, lambda, a)?;
        if !same_degree(v, lambda) {
            return Ok(QLaurentPoly::zero());
        }
        brute_d_with_kernel(v, lambda, a, &self.get(a))
    }
}
