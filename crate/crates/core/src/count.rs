//! Exact independent-set counting.
//!
//! Both the total count and the full independence polynomial use the deletion recurrence
//! `I(G) = I(G - v) + x·I(G - N[v])` on a maximum-degree vertex, with the graph split
//! into connected components at every level (the polynomial of a disjoint union is the
//! product of the parts).
//!
//! Every coefficient `i_t(G)` is at most `C(64, 32) < 2^63`, and partial products during
//! component multiplication are bounded the same way, so coefficients fit in `u64`. The
//! total is at most `2^64` and is accumulated in `u128` before being widened to an
//! arbitrary-precision [`ExactCount`].

use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::graph::{bit, bits, Graph};
use crate::invariants::connectivity::components;

/// Arbitrary-precision non-negative count.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactCount(BigUint);

impl ExactCount {
    pub fn zero() -> Self {
        ExactCount(BigUint::zero())
    }

    pub fn one() -> Self {
        ExactCount(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount(v)
    }
}

macro_rules! count_from {
    ($($t:ty),*) => {$(
        impl From<$t> for ExactCount {
            fn from(v: $t) -> Self {
                ExactCount(BigUint::from(v))
            }
        }
    )*};
}
count_from!(u8, u32, u64, u128, usize);

impl Add for ExactCount {
    type Output = ExactCount;
    fn add(self, rhs: ExactCount) -> ExactCount {
        ExactCount(self.0 + rhs.0)
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Serialized as a decimal string so consumers never truncate to 64 bits.
impl Serialize for ExactCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

/// Coefficients `(i_0, .., i_α)`; `i_t` counts independent sets of size `t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndependencePolynomial {
    coeffs: Vec<u64>,
}

impl IndependencePolynomial {
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// Independence number `α`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `i_t`, zero beyond `α`.
    pub fn coefficient(&self, t: usize) -> u64 {
        self.coeffs.get(t).copied().unwrap_or(0)
    }

    pub fn total(&self) -> ExactCount {
        ExactCount::from(self.coeffs.iter().map(|&c| u128::from(c)).sum::<u128>())
    }
}

impl fmt::Debug for IndependencePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndependencePolynomial{:?}", self.coeffs)
    }
}

pub(crate) type Poly = SmallVec<[u64; 24]>;

fn binomial_row(m: usize) -> Poly {
    let mut row: Poly = smallvec![1u64; m + 1];
    for t in 1..m {
        row[t] = (u128::from(row[t - 1]) * (m - t + 1) as u128 / t as u128) as u64;
    }
    row
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = smallvec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Maximum-degree vertex of the subgraph induced by `mask` and its degree there.
#[inline]
fn max_degree_vertex(adj: &[u64], mask: u64) -> (usize, u32) {
    let mut best = (mask.trailing_zeros() as usize, 0u32);
    for v in bits(mask) {
        let d = (adj[v] & mask).count_ones();
        if d > best.1 {
            best = (v, d);
        }
    }
    best
}

fn connected_poly(adj: &[u64], mask: u64) -> Poly {
    let size = mask.count_ones() as usize;
    let (v, d) = max_degree_vertex(adj, mask);
    if d == 0 {
        return binomial_row(size);
    }
    if bits(mask).all(|u| (adj[u] & mask).count_ones() as usize == size - 1) {
        return smallvec![1, size as u64];
    }
    let without = poly_raw(adj, mask & !bit(v));
    let with = poly_raw(adj, mask & !(adj[v] | bit(v)));
    let mut out: Poly = smallvec![0u64; without.len().max(with.len() + 1)];
    for (t, c) in without.iter().enumerate() {
        out[t] += c;
    }
    for (t, c) in with.iter().enumerate() {
        out[t + 1] += c;
    }
    out
}

/// Independence polynomial of the subgraph induced by `mask`.
pub(crate) fn poly_raw(adj: &[u64], mask: u64) -> Poly {
    if mask == 0 {
        return smallvec![1];
    }
    let comps = components(adj, mask);
    let mut acc = connected_poly(adj, comps[0]);
    for &c in &comps[1..] {
        acc = multiply(&acc, &connected_poly(adj, c));
    }
    acc
}

fn connected_total(adj: &[u64], mask: u64) -> u128 {
    let size = mask.count_ones();
    let (v, d) = max_degree_vertex(adj, mask);
    if d == 0 {
        return 1u128 << size;
    }
    if bits(mask).all(|u| (adj[u] & mask).count_ones() == size - 1) {
        return u128::from(size) + 1;
    }
    total_raw(adj, mask & !bit(v)) + total_raw(adj, mask & !(adj[v] | bit(v)))
}

/// Number of independent sets of the subgraph induced by `mask`.
pub(crate) fn total_raw(adj: &[u64], mask: u64) -> u128 {
    if mask == 0 {
        return 1;
    }
    components(adj, mask)
        .into_iter()
        .map(|c| connected_total(adj, c))
        .product()
}

pub fn independence_polynomial(g: &Graph) -> IndependencePolynomial {
    let p = poly_raw(g.adjacency(), g.vertices().bits());
    IndependencePolynomial { coeffs: p.to_vec() }
}

/// `i(G)`, counting the empty set.
pub fn count_total(g: &Graph) -> ExactCount {
    ExactCount::from(total_raw(g.adjacency(), g.vertices().bits()))
}

/// `i_t(G)`; zero when `t` exceeds the independence number.
pub fn count_size(g: &Graph, t: usize) -> ExactCount {
    ExactCount::from(independence_polynomial(g).coefficient(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(independence_polynomial(&complete(3)).coefficients(), &[1, 3]);
        assert_eq!(
            independence_polynomial(&Graph::empty(3).unwrap()).coefficients(),
            &[1, 3, 3, 1]
        );
        let c5 = independence_polynomial(&cycle(5));
        assert_eq!(c5.coefficients(), &[1, 5, 5]);
        assert_eq!(c5.total(), ExactCount::from(11u32));
        assert_eq!(c5.degree(), 2);
    }

    #[test]
    fn count_examples() {
        // K_3 ∪ E_3
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(count_total(&g), ExactCount::from(32u32));
        // K_{2,4}
        let mut e = vec![];
        for a in 0..2 {
            for b in 2..6 {
                e.push((a, b));
            }
        }
        assert_eq!(count_total(&Graph::new(6, &e).unwrap()), ExactCount::from(19u32));
        assert_eq!(count_size(&cycle(6), 2), ExactCount::from(9u32));
        assert_eq!(count_size(&cycle(6), 4), ExactCount::zero());
    }

    #[test]
    fn no_overflow_at_sixty_four_vertices() {
        let e64 = Graph::empty(64).unwrap();
        assert_eq!(count_total(&e64).to_string(), "18446744073709551616");
        let p = independence_polynomial(&e64);
        assert_eq!(p.coefficient(32), 1_832_624_140_942_590_534);
        assert_eq!(p.total(), count_total(&e64));
        assert_eq!(count_total(&complete(64)), ExactCount::from(65u32));
    }

    #[test]
    fn serializes_as_string() {
        let s = serde_json::to_string(&ExactCount::from(u128::MAX)).unwrap();
        assert_eq!(s, format!("\"{}\"", u128::MAX));
    }
}
