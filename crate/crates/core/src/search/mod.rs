//! Exhaustive search over all labeled graphs on `n` vertices.
//!
//! A family is fixed by `(n, k, l)` and a hypothesis: `k`-chromatic and `l`-connected, or
//! `k`-chromatic with minimum degree at least `l`. Searches report the exact optimum of an
//! objective, every optimal graph up to isomorphism, and how the optimum compares with the
//! closed-form bound that is claimed (or conjectured) for those parameters.

mod engine;
mod sweep;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::bounds::{binomial, istar_total, kstar_it, min_edges_large_l, min_edges_small_l};
use crate::canon::{canonical_form, CanonicalForm};
use crate::construct::{FamilyParams, Regime};
use crate::count::{count_size, count_total, ExactCount};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::invariants::{chromatic_number, is_l_connected, min_degree};

pub use engine::Prune;
pub use sweep::SearchOptions;

use engine::{adjacency_of, Family, Slots, MAX_SEARCH_N};

pub const DEFAULT_CAP: usize = 10;

/// Largest `n` accepted for exhaustive search: `EXTREMAL_MAX_N` if set, else 10.
pub fn exhaustive_cap() -> usize {
    std::env::var("EXTREMAL_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Objective {
    /// Maximize `i(G)`.
    Total,
    /// Maximize `i_t(G)`.
    Size(usize),
    /// Minimize `|E(G)|`.
    MinEdges,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Objective::Total => f.write_str("total"),
            Objective::Size(t) => write!(f, "size:{t}"),
            Objective::MinEdges => f.write_str("min-edges"),
        }
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "total" => Ok(Objective::Total),
            "min-edges" => Ok(Objective::MinEdges),
            _ => s
                .strip_prefix("size:")
                .and_then(|t| t.parse().ok())
                .map(Objective::Size)
                .ok_or_else(|| format!("unknown objective {s:?}; expected total, size:T or min-edges")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hypothesis {
    /// `l`-connected.
    Connectivity,
    /// Minimum degree at least `l`.
    MinDegree,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Connectivity => "conn",
            Hypothesis::MinDegree => "mindeg",
        })
    }
}

impl FromStr for Hypothesis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "conn" => Ok(Hypothesis::Connectivity),
            "mindeg" => Ok(Hypothesis::MinDegree),
            _ => Err(format!("unknown hypothesis {s:?}; expected conn or mindeg")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchSpec {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub objective: Objective,
    pub hypothesis: Hypothesis,
    /// Report every optimal graph up to isomorphism rather than a single witness.
    pub dedupe: bool,
}

impl SearchSpec {
    pub fn new(n: usize, k: usize, l: usize, objective: Objective, hypothesis: Hypothesis) -> Result<SearchSpec> {
        let cap = exhaustive_cap().min(MAX_SEARCH_N);
        if n == 0 || n > cap {
            return Err(Error::SearchCap { n, cap });
        }
        if k == 0 {
            return Err(Error::hypothesis("exhaustive search", "k must be at least 1"));
        }
        if let Objective::Size(t) = objective {
            if t > n {
                return Err(Error::hypothesis("exhaustive search", format!("size t = {t} exceeds n = {n}")));
            }
        }
        if objective == Objective::MinEdges && hypothesis == Hypothesis::MinDegree {
            return Err(Error::hypothesis(
                "exhaustive search",
                "minimum-edge search is defined for the connectivity hypothesis",
            ));
        }
        Ok(SearchSpec {
            n,
            k,
            l,
            objective,
            hypothesis,
            dedupe: true,
        })
    }

    pub fn with_dedupe(mut self, dedupe: bool) -> SearchSpec {
        self.dedupe = dedupe;
        self
    }

    fn family(&self) -> Family {
        Family {
            n: self.n,
            k: self.k,
            l: self.l,
            hypothesis: self.hypothesis,
            edges: None,
        }
    }
}

impl Serialize for SearchSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        json!({
            "n": self.n,
            "k": self.k,
            "l": self.l,
            "objective": self.objective.to_string(),
            "hypothesis": self.hypothesis.to_string(),
            "dedupe": self.dedupe,
        })
        .serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "MATCHES_PAPER")]
    MatchesPaper,
    #[serde(rename = "COUNTEREXAMPLE")]
    Counterexample,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::MatchesPaper => "MATCHES_PAPER",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// One optimal graph: its canonical form and a labeled representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremal {
    pub canonical: CanonicalForm,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub spec: SearchSpec,
    /// `None` when no graph satisfies the hypothesis.
    pub best_value: Option<ExactCount>,
    /// Sorted by canonical form.
    pub extremal: Vec<Extremal>,
    /// Labeled graphs reaching the full hypothesis test.
    pub examined: u128,
    /// Labeled graphs cut off before the full test.
    pub pruned: u128,
    /// Labeled graphs satisfying the hypothesis.
    pub members: u128,
    pub verdict: Verdict,
    pub bound_name: Option<&'static str>,
    pub bound_value: Option<ExactCount>,
}

impl SearchResult {
    pub fn extremal_forms(&self) -> Vec<&CanonicalForm> {
        self.extremal.iter().map(|e| &e.canonical).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "spec": self.spec,
            "best_value": self.best_value.as_ref().map(|v| v.to_string()),
            "extremal": self.extremal.iter().map(|e| to_graph6(&e.graph)).collect::<Vec<_>>(),
            "examined": self.examined.to_string(),
            "pruned": self.pruned.to_string(),
            "members": self.members.to_string(),
            "verdict": self.verdict,
            "bound_name": self.bound_name,
            "bound_value": self.bound_value.as_ref().map(|v| v.to_string()),
        })
    }
}

/// Visit statistics of [`enumerate_family`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationStats {
    pub examined: u128,
    pub pruned: u128,
    pub members: u128,
}

/// Calls `visit` on every labeled graph of the family of `spec`, sequentially and in a fixed
/// order. `prune` only changes how much work is done, never which graphs are visited.
pub fn enumerate_family(spec: &SearchSpec, prune: Prune, mut visit: impl FnMut(&Graph)) -> EnumerationStats {
    let slots = Slots::new(spec.n);
    let mut members = 0u128;
    let mut walk = engine::Walk::new(spec.family(), &slots, prune, engine::Prefix::EMPTY, |leaf: &engine::Leaf<'_>| {
        members += 1;
        visit(&Graph::from_adjacency_unchecked(leaf.adj));
    });
    walk.run();
    let (examined, pruned) = (walk.examined, walk.pruned);
    drop(walk);
    EnumerationStats {
        examined,
        pruned,
        members,
    }
}

/// How a search optimum is compared with its bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Comparison {
    AtMost,
    Equal,
}

/// The claimed bound for a search, if the parameters fall where one is stated.
pub(crate) fn claimed_bound(spec: &SearchSpec) -> Option<(&'static str, ExactCount, Comparison)> {
    let SearchSpec { n, k, l, .. } = *spec;
    let conn = spec.hypothesis == Hypothesis::Connectivity;
    let gstar_member = FamilyParams::gstar(n, k, l).ok().filter(|p| p.gstar_in_family());
    let two_conn_three_chrom = conn && k == 3 && l == 2 && n >= 4;
    match spec.objective {
        Objective::Total => {
            if two_conn_three_chrom && n == 5 {
                return Some(("two_connected_max_total", ExactCount::from(11u32), Comparison::AtMost));
            }
            if conn && l >= 2 && l < k && n == 5 {
                return None;
            }
            gstar_member?;
            Some(("istar_total", istar_total(n, k, l).ok()?, Comparison::AtMost))
        }
        Objective::Size(2) => {
            let pairs = binomial(n, 2);
            let min_edges = |e: ExactCount| ExactCount::from(pairs.clone() - e.into_inner());
            if two_conn_three_chrom {
                let e = if n % 2 == 1 { n } else { n + 1 };
                let name = if n % 2 == 1 { "cycle_i2" } else { "theta_i2" };
                return Some((name, min_edges(ExactCount::from(e)), Comparison::AtMost));
            }
            if !conn {
                return None;
            }
            if let Ok(e) = min_edges_small_l(n, k, l) {
                return Some(("i2_from_min_edges_small_l", min_edges(e), Comparison::AtMost));
            }
            if let Ok(e) = min_edges_large_l(n, k, l) {
                return Some(("i2_from_min_edges_large_l", min_edges(e), Comparison::AtMost));
            }
            None
        }
        Objective::Size(t) => {
            gstar_member?;
            Some(("kstar_it", kstar_it(n, k, l, t).ok()?, Comparison::AtMost))
        }
        Objective::MinEdges => {
            if two_conn_three_chrom {
                let (name, e) = if n % 2 == 1 { ("cycle_edges", n) } else { ("theta_edges", n + 1) };
                return Some((name, ExactCount::from(e), Comparison::Equal));
            }
            match FamilyParams::min_edges(n, k, l).map(|p| p.regime) {
                Ok(Regime::MinEdgeSmallL) => {
                    Some(("min_edges_small_l", min_edges_small_l(n, k, l).ok()?, Comparison::Equal))
                }
                Ok(_) => Some(("min_edges_large_l", min_edges_large_l(n, k, l).ok()?, Comparison::Equal)),
                Err(_) => None,
            }
        }
    }
}

pub(crate) fn judge(best: Option<&ExactCount>, bound: Option<&(&'static str, ExactCount, Comparison)>) -> Verdict {
    match (best, bound) {
        (Some(b), Some((_, v, cmp))) => {
            let ok = match cmp {
                Comparison::AtMost => b <= v,
                Comparison::Equal => b == v,
            };
            if ok {
                Verdict::MatchesPaper
            } else {
                Verdict::Counterexample
            }
        }
        _ => Verdict::NotApplicable,
    }
}

pub(crate) fn objective_value(g: &Graph, objective: Objective) -> ExactCount {
    match objective {
        Objective::Total => count_total(g),
        Objective::Size(t) => count_size(g, t),
        Objective::MinEdges => ExactCount::from(g.edge_count()),
    }
}

/// Re-checks a witness with the public invariants, independently of the search kernel.
fn revalidate(spec: &SearchSpec, g: &Graph, best: &ExactCount) -> Result<()> {
    let family_ok = chromatic_number(g) == spec.k
        && match spec.hypothesis {
            Hypothesis::Connectivity => is_l_connected(g, spec.l),
            Hypothesis::MinDegree => min_degree(g) >= spec.l,
        };
    if !family_ok || objective_value(g, spec.objective) != *best {
        return Err(Error::Internal(format!(
            "search witness {} failed re-validation",
            to_graph6(g)
        )));
    }
    Ok(())
}

fn collect_extremal(spec: &SearchSpec, slots: &Slots, masks: &mut [u64], best: &ExactCount) -> Result<Vec<Extremal>> {
    masks.sort_unstable();
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for &m in masks.iter() {
        let g = Graph::from_adjacency(&adjacency_of(slots, spec.n, m))?;
        revalidate(spec, &g, best)?;
        classes.entry(canonical_form(&g)).or_insert(g);
        if !spec.dedupe {
            break;
        }
    }
    Ok(classes
        .into_iter()
        .map(|(canonical, graph)| Extremal { canonical, graph })
        .collect())
}

/// Results for several objectives over one family, sharing a single sweep.
pub fn find_extremal_multi(specs: &[SearchSpec], opts: &SearchOptions) -> Result<Vec<SearchResult>> {
    let Some(first) = specs.first() else {
        return Ok(Vec::new());
    };
    let fam = first.family();
    if specs.iter().any(|s| s.family() != fam || s.objective == Objective::MinEdges) {
        return Err(Error::Internal(
            "shared sweeps need one family and maximizing objectives".into(),
        ));
    }
    let keep_all = specs.iter().any(|s| s.dedupe);
    let objectives: Vec<Objective> = specs.iter().map(|s| s.objective).collect();
    let out = sweep::sweep(fam, &objectives, keep_all, opts)?;
    let slots = Slots::new(fam.n);
    specs
        .iter()
        .zip(out.trackers)
        .map(|(spec, mut tr)| {
            let best = tr.best.map(ExactCount::from);
            let extremal = match &best {
                Some(b) => collect_extremal(spec, &slots, &mut tr.masks, b)?,
                None => Vec::new(),
            };
            Ok(finish(spec, best, extremal, out.examined, out.pruned, out.members))
        })
        .collect()
}

fn finish(
    spec: &SearchSpec,
    best: Option<ExactCount>,
    extremal: Vec<Extremal>,
    examined: u128,
    pruned: u128,
    members: u128,
) -> SearchResult {
    let bound = claimed_bound(spec);
    let verdict = judge(best.as_ref(), bound.as_ref());
    SearchResult {
        spec: *spec,
        best_value: best,
        extremal,
        examined,
        pruned,
        members,
        verdict,
        bound_name: bound.as_ref().map(|b| b.0),
        bound_value: bound.map(|b| b.1),
    }
}

/// Lowest edge count any member of the family could have: `C(k,2)` for a `k`-chromatic
/// graph and `ceil(n·l/2)` for minimum degree `l`.
fn edge_floor(spec: &SearchSpec) -> usize {
    (spec.k * (spec.k - 1) / 2).max((spec.n * spec.l).div_ceil(2))
}

/// Exact optimum of `spec.objective` over the family, with every optimal graph up to
/// isomorphism (or one witness without `dedupe`).
///
/// Minimum-edge searches run one sweep per edge count, upward from a sound lower bound, and
/// stop at the first count with a member; `examined` and `pruned` add up over those sweeps.
pub fn find_extremal(spec: &SearchSpec, opts: &SearchOptions) -> Result<SearchResult> {
    if spec.objective != Objective::MinEdges {
        return Ok(find_extremal_multi(std::slice::from_ref(spec), opts)?.remove(0));
    }
    let slots = Slots::new(spec.n);
    let (mut examined, mut pruned) = (0u128, 0u128);
    for m in edge_floor(spec)..=slots.len() {
        let fam = Family {
            edges: Some(m),
            ..spec.family()
        };
        let level_opts = SearchOptions {
            checkpoint: opts.checkpoint.as_ref().map(|p| p.with_extension(format!("m{m}.json"))),
            ..opts.clone()
        };
        let out = sweep::sweep(fam, &[Objective::MinEdges], spec.dedupe, &level_opts)?;
        examined += out.examined;
        pruned += out.pruned;
        let mut tr = out.trackers.into_iter().next().expect("one tracker");
        if let Some(b) = tr.best {
            let best = ExactCount::from(b);
            let extremal = collect_extremal(spec, &slots, &mut tr.masks, &best)?;
            return Ok(finish(spec, Some(best), extremal, examined, pruned, out.members));
        }
    }
    Ok(finish(spec, None, Vec::new(), examined, pruned, 0))
}
