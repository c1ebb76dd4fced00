//! Closed-form values of the extremal bounds, thresholds and identities, all exact.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::construct::{FamilyParams, Regime};
use crate::count::ExactCount;
use crate::error::{Error, Result};

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

pub fn binomial(n: usize, t: usize) -> BigUint {
    if t > n {
        return BigUint::zero();
    }
    let t = t.min(n - t);
    let mut acc = BigUint::one();
    for i in 0..t {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Maximum of `i(G)` over `n`-vertex `k`-chromatic `l`-connected graphs, attained by G*:
/// `2^{n-l} + k·2^{l-k+1} - 1` for `k <= l`, `(k-l+1)·2^{n-k} + l` for `k > l`.
pub fn istar_total(n: usize, k: usize, l: usize) -> Result<ExactCount> {
    let p = FamilyParams::gstar(n, k, l)?;
    let v = match p.regime {
        Regime::KLeL => pow2(n - l) + BigUint::from(k) * pow2(l - k + 1) - 1u32,
        _ => BigUint::from(k - l + 1) * pow2(n - k) + BigUint::from(l),
    };
    Ok(v.into())
}

/// `i(K_k ∪ E_{n-k}) = (k+1)·2^{n-k}`, the maximum over all `k`-chromatic graphs.
pub fn chromatic_max_total(n: usize, k: usize) -> Result<ExactCount> {
    if k == 0 || k > n {
        return Err(Error::hypothesis("k-chromatic maximum", format!("needs 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok((BigUint::from(k + 1) * pow2(n - k)).into())
}

/// `k·2^{n-k} + 2^{d-1}` for `k`-chromatic graphs with `d` components.
///
/// Some component holds a `k`-clique's worth of vertices, so `d <= n - k + 1` is required.
pub fn components_bound(n: usize, k: usize, d: usize) -> Result<ExactCount> {
    if k == 0 || k > n || d == 0 || d > n - k + 1 {
        return Err(Error::hypothesis(
            "k-chromatic graphs with d components",
            format!("needs 1 <= k <= n and 1 <= d <= n-k+1, got n = {n}, k = {k}, d = {d}"),
        ));
    }
    Ok((BigUint::from(k) * pow2(n - k) + pow2(d - 1)).into())
}

/// `3^m · 2^{n-2m}`, an upper bound on `i(G)` when `G` has a matching of size `m`.
pub fn matching_bound(n: usize, m: usize) -> Result<ExactCount> {
    if 2 * m > n {
        return Err(Error::hypothesis("matching bound", format!("needs 2m <= n, got n = {n}, m = {m}")));
    }
    Ok((BigUint::from(3u32).pow(m as u32) * pow2(n - 2 * m)).into())
}

fn check_stability(k: usize, l: usize) -> Result<()> {
    if k < 3 || l == 0 {
        return Err(Error::hypothesis("large-n stability", format!("needs k >= 3 and l >= 1, got k = {k}, l = {l}")));
    }
    Ok(())
}

/// `c = 1 / (2·C(6(k+l), l))`.
pub fn stability_constant(k: usize, l: usize) -> Result<BigRational> {
    check_stability(k, l)?;
    let den = BigUint::from(2u32) * binomial(6 * (k + l), l);
    Ok(BigRational::new(1.into(), den.into()))
}

/// `2(k+l+2)·C(6(k+l), l)`: the large-`n` results hold for `n` strictly above this.
pub fn large_n_threshold(k: usize, l: usize) -> Result<ExactCount> {
    check_stability(k, l)?;
    Ok((BigUint::from(2 * (k + l + 2)) * binomial(6 * (k + l), l)).into())
}

fn check_small_l(n: usize, k: usize, l: usize) -> Result<()> {
    FamilyParams::new(n, k, l, Regime::MinEdgeSmallL).map(|_| ())
}

/// `C(k,2) + ceil((n-k+1)·l / 2)`, the minimum edge count when `k-1 > l > 1` and `l <= n-k`.
pub fn min_edges_small_l(n: usize, k: usize, l: usize) -> Result<ExactCount> {
    check_small_l(n, k, l)?;
    Ok((binomial(k, 2) + BigUint::from(((n - k + 1) * l).div_ceil(2))).into())
}

/// The same bound without the ceiling, `C(k,2) + (n-k+1)·l/2`.
pub fn min_edges_small_l_raw(n: usize, k: usize, l: usize) -> Result<BigRational> {
    check_small_l(n, k, l)?;
    let c = BigRational::from_integer(binomial(k, 2).into());
    Ok(c + BigRational::new(((n - k + 1) * l).into(), 2.into()))
}

/// `C(k,2) + C(n-k,2) + (n-k)(l-(n-k-1))` when `k-1 > l > 1`, `l > n-k` and `n > k`.
pub fn min_edges_large_l(n: usize, k: usize, l: usize) -> Result<ExactCount> {
    FamilyParams::new(n, k, l, Regime::MinEdgeLargeL)?;
    let m = n - k;
    Ok((binomial(k, 2) + binomial(m, 2) + BigUint::from(m * (l + 1 - m))).into())
}

/// Gallai's lower bound on the edge count of a `k`-critical graph on `n` vertices,
/// `ceil((n(k-1) + (n-k)(2k-n) - 2) / 2)` for `k >= 4` and `k+2 <= n <= 2k-1`.
pub fn gallai_bound(n: usize, k: usize) -> Result<ExactCount> {
    if k < 4 || n < k + 2 || n > 2 * k - 1 {
        return Err(Error::hypothesis(
            "Gallai critical-graph bound",
            format!("needs k >= 4 and k+2 <= n <= 2k-1, got n = {n}, k = {k}"),
        ));
    }
    let twice = n * (k - 1) + (n - k) * (2 * k - n) - 2;
    Ok(BigUint::from(twice.div_ceil(2)).into())
}

/// `ceil(n·l / 2)`, the edge count of `H_{n,l}`.
pub fn harary_edges(n: usize, l: usize) -> Result<ExactCount> {
    if l == 0 || n <= l || (l == 1 && n > 2) {
        return Err(Error::hypothesis(
            crate::construct::HARARY,
            format!("needs n > l >= 2 (or n = 2, l = 1), got n = {n}, l = {l}"),
        ));
    }
    Ok(BigUint::from((n * l).div_ceil(2)).into())
}

/// `i_t(K_{a,b})`: 1 for `t = 0`, `a + b` for `t = 1`, `C(a,t) + C(b,t)` beyond.
pub fn biclique_it(a: usize, b: usize, t: usize) -> ExactCount {
    match t {
        0 => ExactCount::one(),
        1 => ExactCount::from(a + b),
        _ => (binomial(a, t) + binomial(b, t)).into(),
    }
}

/// `i_t(G*)` from the join structure: independent sets of size `t >= 1` lie on one side.
pub fn kstar_it(n: usize, k: usize, l: usize, t: usize) -> Result<ExactCount> {
    let p = FamilyParams::gstar(n, k, l)?;
    if t == 0 {
        return Ok(ExactCount::one());
    }
    // i_t(K_c ∪ E_s) = C(s,t) + c·C(s,t-1)
    let clique_plus_empty = |c: usize, s: usize| binomial(s, t) + BigUint::from(c) * binomial(s, t - 1);
    let v = match p.regime {
        Regime::KLeL => clique_plus_empty(k - 1, l - k + 1) + binomial(n - l, t),
        _ => {
            let single = if t == 1 { BigUint::from(l) } else { BigUint::zero() };
            single + clique_plus_empty(k - l, n - k)
        }
    };
    Ok(v.into())
}

/// The two sides of `(m+1)·2^{n-l-m} < m·2^{n-l-m+1}`, the comparison showing that giving
/// the `m` colour classes outside `L` a common neighbourhood is wasteful once `m >= 2`.
pub fn split_comparison(n: usize, l: usize, m: usize) -> Result<(ExactCount, ExactCount)> {
    if m < 2 || n < l + m {
        return Err(Error::hypothesis(
            "colour-class comparison",
            format!("needs m >= 2 and n >= l + m, got n = {n}, l = {l}, m = {m}"),
        ));
    }
    let e = n - l - m;
    Ok((
        (BigUint::from(m + 1) * pow2(e)).into(),
        (BigUint::from(m) * pow2(e + 1)).into(),
    ))
}

/// `2^{n-k-l}` as an exact rational (the exponent may be negative).
pub fn gstar_floor(n: usize, k: usize, l: usize) -> BigRational {
    let e = n as i64 - k as i64 - l as i64;
    let p = BigRational::from_integer(pow2(e.unsigned_abs() as usize).into());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Either an integer or an exact rational; serialized as a decimal string (`"19"`, `"1/48"`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Integer(ExactCount),
    Rational(BigRational),
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Integer(v) => write!(f, "{v}"),
            BoundValue::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            BoundValue::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: &'static str,
    pub params: BTreeMap<&'static str, usize>,
    pub value: Option<BoundValue>,
    pub regime_ok: bool,
    /// Set when the result needs a remark, e.g. the ceiling and raw forms disagree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundReport {
    fn new<T>(name: &'static str, params: &[(&'static str, usize)], r: Result<T>) -> BoundReport
    where
        T: Into<BoundValue>,
    {
        let (value, regime_ok, note) = match r {
            Ok(v) => (Some(v.into()), true, None),
            Err(e) => (None, false, Some(e.to_string())),
        };
        BoundReport {
            name,
            params: params.iter().copied().collect(),
            value,
            regime_ok,
            note,
        }
    }
}

impl From<ExactCount> for BoundValue {
    fn from(v: ExactCount) -> Self {
        BoundValue::Integer(v)
    }
}

impl From<BigRational> for BoundValue {
    fn from(v: BigRational) -> Self {
        BoundValue::Rational(v)
    }
}

/// Optional extra arguments for [`all_bounds`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Extras {
    pub t: Option<usize>,
    pub d: Option<usize>,
    pub m: Option<usize>,
}

/// Every bound at `(n, k, l)`, including those whose hypotheses fail (with `regime_ok = false`).
pub fn all_bounds(n: usize, k: usize, l: usize, extra: Extras) -> Vec<BoundReport> {
    let nkl = [("n", n), ("k", k), ("l", l)];
    let mut out = vec![
        BoundReport::new("istar_total", &nkl, istar_total(n, k, l)),
        BoundReport::new("chromatic_max_total", &[("n", n), ("k", k)], chromatic_max_total(n, k)),
        BoundReport::new("stability_constant", &[("k", k), ("l", l)], stability_constant(k, l)),
        BoundReport::new("large_n_threshold", &[("k", k), ("l", l)], large_n_threshold(k, l)),
    ];

    let mut small = BoundReport::new("min_edges_small_l", &nkl, min_edges_small_l(n, k, l));
    let raw = min_edges_small_l_raw(n, k, l);
    if let Ok(r) = &raw {
        if !r.is_integer() {
            small.note = Some(format!("ceiling exceeds the raw bound {}", BoundValue::Rational(r.clone())));
        }
    }
    out.push(small);
    out.push(BoundReport::new("min_edges_small_l_raw", &nkl, raw));
    out.push(BoundReport::new("min_edges_large_l", &nkl, min_edges_large_l(n, k, l)));
    out.push(BoundReport::new("gallai_bound", &[("n", n), ("k", k)], gallai_bound(n, k)));
    out.push(BoundReport::new("harary_edges", &[("n", n), ("l", l)], harary_edges(n, l)));

    if let Some(d) = extra.d {
        out.push(BoundReport::new(
            "components_bound",
            &[("n", n), ("k", k), ("d", d)],
            components_bound(n, k, d),
        ));
    }
    if let Some(m) = extra.m {
        out.push(BoundReport::new("matching_bound", &[("n", n), ("m", m)], matching_bound(n, m)));
        out.push(BoundReport::new(
            "split_comparison_lhs",
            &[("n", n), ("l", l), ("m", m)],
            split_comparison(n, l, m).map(|p| p.0),
        ));
        out.push(BoundReport::new(
            "split_comparison_rhs",
            &[("n", n), ("l", l), ("m", m)],
            split_comparison(n, l, m).map(|p| p.1),
        ));
    }
    if let Some(t) = extra.t {
        let it = FamilyParams::gstar(n, k, l).map(|_| biclique_it(l, n.saturating_sub(l), t));
        out.push(BoundReport::new("biclique_it", &[("a", l), ("b", n.saturating_sub(l)), ("t", t)], it));
        out.push(BoundReport::new("kstar_it", &[("n", n), ("k", k), ("l", l), ("t", t)], kstar_it(n, k, l, t)));
    }
    out
}
