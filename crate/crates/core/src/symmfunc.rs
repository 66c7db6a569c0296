//! Elementary symmetric functions in eigenvalue coordinates.
//!
//! `sigma` evaluates e_k over an eigenvalue vector with an optional excluded
//! index set, using the prefix recurrence e_k <- e_k + x * e_{k-1}. The
//! recurrence is stable for mixed-sign entries; nothing here divides by a
//! polynomial coefficient. Exclusion sets are recomputed over the surviving
//! entries for the same reason.
//!
//! Conventions: sigma_0 = 1, and sigma_k = 0 whenever k exceeds the number of
//! surviving entries.

use crate::error::{Error, Result};

/// Ordered spectrum: the universal argument of the symmetric-function calculus.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueVector {
    values: Vec<f64>,
    sorted: bool,
}

impl EigenvalueVector {
    /// Wraps raw values, detecting whether they are already descending.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "eigenvalue vector needs n >= 2, got n = {}",
                values.len()
            )));
        }
        if values.len() > 64 {
            return Err(Error::InvalidArgument(format!(
                "eigenvalue vector capped at n = 64, got n = {}",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "eigenvalue vector contains a non-finite entry".into(),
            ));
        }
        let sorted = values.windows(2).all(|w| w[0] >= w[1]);
        Ok(Self { values, sorted })
    }

    /// Sorts the entries into descending order.
    pub fn descending(mut values: Vec<f64>) -> Result<Self> {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite entries"));
        Self::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, i: usize) -> f64 {
        self.values[i]
    }

    /// True when the entries are in descending order.
    pub fn is_descending(&self) -> bool {
        self.sorted
    }

    /// Returns t * lambda.
    pub fn scaled(&self, t: f64) -> Self {
        Self {
            values: self.values.iter().map(|v| t * v).collect(),
            sorted: if t >= 0.0 { self.sorted } else { false },
        }
    }
}

/// Cone-membership verdict for Gamma_k, with the sigma_1..sigma_k margins seen
/// before the test stopped.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeMembership {
    pub k: usize,
    pub member: bool,
    /// 1-based order of the first non-positive sigma, present iff not a member.
    pub first_failing_order: Option<usize>,
    /// sigma_1..sigma_j where j = k on success, j = first failing order otherwise.
    pub margins: Vec<f64>,
}

/// e_k over the non-excluded entries. Mask bit i set = entry i excluded.
pub(crate) fn esym_masked(values: &[f64], k: usize, excluded: u64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut e = vec![0.0; k + 1];
    e[0] = 1.0;
    let mut used = 0usize;
    for (i, &x) in values.iter().enumerate() {
        if excluded & (1u64 << i) != 0 {
            continue;
        }
        used += 1;
        let top = k.min(used);
        for j in (1..=top).rev() {
            e[j] += x * e[j - 1];
        }
    }
    e[k]
}

fn exclusion_mask(n: usize, excluded: &[usize]) -> Result<u64> {
    let mut mask = 0u64;
    for &i in excluded {
        if i >= n {
            return Err(Error::InvalidArgument(format!(
                "excluded index {i} out of range for n = {n}"
            )));
        }
        if mask & (1u64 << i) != 0 {
            return Err(Error::InvalidArgument(format!(
                "excluded index {i} listed twice"
            )));
        }
        mask |= 1u64 << i;
    }
    Ok(mask)
}

/// sigma_k over the entries of `lambda` not listed in `excluded` (0-based).
///
/// Returns 0 when k exceeds the surviving entry count; k > n is an error.
pub fn sigma(lambda: &EigenvalueVector, k: usize, excluded: &[usize]) -> Result<f64> {
    let n = lambda.len();
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "order k = {k} out of range for n = {n}"
        )));
    }
    let mask = exclusion_mask(n, excluded)?;
    Ok(esym_masked(lambda.values(), k, mask))
}

/// Gradient of sigma_k: component i is sigma_{k-1}(lambda | i).
pub fn sigma_gradient(lambda: &EigenvalueVector, k: usize) -> Result<Vec<f64>> {
    let n = lambda.len();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "gradient order k = {k} out of range for n = {n}"
        )));
    }
    Ok((0..n)
        .map(|i| esym_masked(lambda.values(), k - 1, 1u64 << i))
        .collect())
}

/// Second eigenvalue derivatives of sigma_k as a dense n x n array:
/// entry (p, q) is sigma_{k-2}(lambda | p q) for p != q, zero on the diagonal
/// (sigma_k is multilinear in the eigenvalues).
pub fn sigma_hessian(lambda: &EigenvalueVector, k: usize) -> Result<Vec<Vec<f64>>> {
    let n = lambda.len();
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!(
            "hessian order k = {k} out of range for n = {n}"
        )));
    }
    let mut out = vec![vec![0.0; n]; n];
    for p in 0..n {
        for q in (p + 1)..n {
            let v = esym_masked(lambda.values(), k - 2, (1u64 << p) | (1u64 << q));
            out[p][q] = v;
            out[q][p] = v;
        }
    }
    Ok(out)
}

/// Gamma_k membership test: evaluates sigma_1..sigma_k in order and stops at
/// the first value <= tol. The cone is open, so the default tolerance is 0.
pub fn in_cone(lambda: &EigenvalueVector, k: usize) -> Result<ConeMembership> {
    in_cone_with_tol(lambda, k, 0.0)
}

pub fn in_cone_with_tol(lambda: &EigenvalueVector, k: usize, tol: f64) -> Result<ConeMembership> {
    let n = lambda.len();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "cone order k = {k} out of range for n = {n}"
        )));
    }
    let mut margins = Vec::with_capacity(k);
    for i in 1..=k {
        let s = esym_masked(lambda.values(), i, 0);
        margins.push(s);
        if s <= tol {
            return Ok(ConeMembership {
                k,
                member: false,
                first_failing_order: Some(i),
                margins,
            });
        }
    }
    Ok(ConeMembership {
        k,
        member: true,
        first_failing_order: None,
        margins,
    })
}

/// Binomial coefficient C(n, k) as f64.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc
}

/// Generalized Newton-MacLaurin slack:
/// RHS - LHS of
/// `[ (sigma_m/C(n,m)) / (sigma_l/C(n,l)) ]^{1/(m-l)} <= [ (sigma_r/C(n,r)) / (sigma_s/C(n,s)) ]^{1/(r-s)}`,
/// nonnegative for lambda in Gamma_m.
pub fn newton_maclaurin_gap(
    lambda: &EigenvalueVector,
    m: usize,
    l: usize,
    r: usize,
    s: usize,
) -> Result<f64> {
    let n = lambda.len();
    if !(m > l && r > s && m >= r && l >= s && m <= n) {
        return Err(Error::InvalidArgument(format!(
            "newton-maclaurin orders (m, l, r, s) = ({m}, {l}, {r}, {s}) violate m > l, r > s, m >= r, l >= s, m <= n"
        )));
    }
    let cone = in_cone(lambda, m)?;
    if !cone.member {
        return Err(Error::Precondition(format!(
            "lambda outside Gamma_{m} (sigma_{} <= 0)",
            cone.first_failing_order.unwrap()
        )));
    }
    let normalized = |j: usize| esym_masked(lambda.values(), j, 0) / binomial(n, j);
    let lhs = (normalized(m) / normalized(l)).powf(1.0 / (m - l) as f64);
    let rhs = (normalized(r) / normalized(s)).powf(1.0 / (r - s) as f64);
    Ok(rhs - lhs)
}

/// Quotient q_k = sigma_k / sigma_{k-1}; requires sigma_{k-1} > 0.
pub fn sigma_quotient(lambda: &EigenvalueVector, k: usize) -> Result<f64> {
    let n = lambda.len();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "quotient order k = {k} out of range for n = {n}"
        )));
    }
    let denom = esym_masked(lambda.values(), k - 1, 0);
    if denom <= 0.0 {
        return Err(Error::Precondition(format!(
            "sigma_{} = {denom:e} is not positive",
            k - 1
        )));
    }
    Ok(esym_masked(lambda.values(), k, 0) / denom)
}

/// Rescales lambda along its ray so that sigma_k(t * lambda) = target, using
/// the degree-k homogeneity of sigma_k. Returns (t * lambda, t).
pub fn rescale(
    lambda: &EigenvalueVector,
    k: usize,
    target: f64,
) -> Result<(EigenvalueVector, f64)> {
    if !(target > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "rescale target must be positive, got {target}"
        )));
    }
    let cone = in_cone(lambda, k)?;
    if !cone.member {
        return Err(Error::Precondition(format!(
            "lambda outside Gamma_{k}, cannot rescale"
        )));
    }
    let current = esym_masked(lambda.values(), k, 0);
    let t = (target / current).powf(1.0 / k as f64);
    Ok((lambda.scaled(t), t))
}
