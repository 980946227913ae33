//! Polynomial recognition of minimal separators and potential maximal cliques,
//! active separators, and the exhaustive subset oracles used as ground truth.

use std::collections::btree_set;
use std::collections::BTreeSet;
use std::hash::{DefaultHasher, Hash, Hasher};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Default vertex limit for [`brute_force_separators`] and [`brute_force_pmcs`].
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// `true` iff `G - s` has at least two full components. Runs in `O(n + m)`.
///
/// The empty set qualifies exactly when the graph is disconnected.
pub fn is_minimal_separator(g: &Graph, s: VertexSet) -> bool {
    if !s.is_subset(g.vertices()) {
        return false;
    }
    let allowed = g.vertices() - s;
    let mut rest = allowed;
    let mut full = 0;
    while let Some(v) = rest.first() {
        let comp = g.reach(VertexSet::singleton(v), allowed);
        rest -= comp;
        // N(comp) is always inside s
        if s.is_subset(g.open_neighborhood(comp)) {
            full += 1;
            if full == 2 {
                return true;
            }
        }
    }
    false
}

/// `true` iff `s` is a minimal separator placing `u` and `v` in two distinct
/// full components.
pub fn is_minimal_uv_separator(g: &Graph, s: VertexSet, u: usize, v: usize) -> bool {
    if s.contains(u) || s.contains(v) || !s.is_subset(g.vertices()) {
        return false;
    }
    let allowed = g.vertices() - s;
    if !allowed.contains(u) || !allowed.contains(v) {
        return false;
    }
    let cu = g.reach(VertexSet::singleton(u), allowed);
    if cu.contains(v) {
        return false;
    }
    let cv = g.reach(VertexSet::singleton(v), allowed);
    g.open_neighborhood(cu) == s && g.open_neighborhood(cv) == s
}

/// Neighbourhoods `N(C)` of the components of `G - omega`, written into `buf`.
/// Returns the number written.
fn component_neighborhoods(g: &Graph, omega: VertexSet, buf: &mut [VertexSet; MAX_VERTICES]) -> usize {
    let allowed = g.vertices() - omega;
    let mut rest = allowed;
    let mut k = 0;
    while let Some(v) = rest.first() {
        let comp = g.reach(VertexSet::singleton(v), allowed);
        rest -= comp;
        buf[k] = g.open_neighborhood(comp);
        k += 1;
    }
    k
}

/// Potential maximal clique test in `O(nm)`.
///
/// `omega` qualifies iff no component `C` of `G - omega` has `N(C) = omega`,
/// and every non-adjacent pair of `omega` lies together in some `N(C)`.
/// Sets that are empty or leave the vertex set are rejected.
pub fn is_pmc(g: &Graph, omega: VertexSet) -> bool {
    if omega.is_empty() || !omega.is_subset(g.vertices()) {
        return false;
    }
    let mut seps = [VertexSet::EMPTY; MAX_VERTICES];
    let k = component_neighborhoods(g, omega, &mut seps);
    let seps = &seps[..k];
    if seps.contains(&omega) {
        return false;
    }
    for u in omega {
        let mut missing = (omega - g.neighbors(u)).without(u);
        if missing.is_empty() {
            continue;
        }
        for &s in seps {
            if s.contains(u) {
                missing -= s;
            }
        }
        if !missing.is_empty() {
            return false;
        }
    }
    true
}

/// Checked variant of [`is_pmc`] that reports invalid input instead of `false`.
pub fn check_pmc(g: &Graph, omega: VertexSet) -> Result<bool> {
    if omega.is_empty() {
        return Err(Error::EmptySet);
    }
    g.check_subset(omega)?;
    Ok(is_pmc(g, omega))
}

/// The minimal separators contained in the potential maximal clique `omega`,
/// i.e. the distinct `N(C)` over components `C` of `G - omega`, in canonical order.
pub fn pmc_separators(g: &Graph, omega: VertexSet) -> Result<Vec<VertexSet>> {
    if !check_pmc(g, omega)? {
        return Err(Error::NotPmc(omega.to_vec()));
    }
    Ok(separators_around(g, omega))
}

fn separators_around(g: &Graph, omega: VertexSet) -> Vec<VertexSet> {
    let set: BTreeSet<VertexSet> = g
        .components_without(omega)
        .into_iter()
        .map(|c| g.open_neighborhood(c))
        .collect();
    set.into_iter().collect()
}

/// An active separator of a potential maximal clique together with its
/// lexicographically least active pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActivePairWitness {
    pub separator: VertexSet,
    pub pair: (usize, usize),
    /// The component of `G - separator` that contains `omega - separator`.
    pub component: VertexSet,
}

/// All pairs `x < y` of `omega` left non-adjacent after completing every
/// separator of `omega` not contained in `sep`. Empty iff `sep` is not active.
pub fn active_pairs(g: &Graph, omega: VertexSet, sep: VertexSet) -> Result<Vec<(usize, usize)>> {
    let seps = pmc_separators(g, omega)?;
    if !seps.contains(&sep) {
        return Err(Error::InvalidParameter(format!("{sep} is not a separator of {omega}")));
    }
    Ok(pairs_for(g, omega, sep, &seps))
}

fn pairs_for(g: &Graph, omega: VertexSet, sep: VertexSet, seps: &[VertexSet]) -> Vec<(usize, usize)> {
    let completed: Vec<VertexSet> = seps.iter().copied().filter(|s| !s.is_subset(sep)).collect();
    let mut pairs = Vec::new();
    for x in omega {
        let mut adj = g.neighbors(x) & omega;
        for &s in &completed {
            if s.contains(x) {
                adj |= s;
            }
        }
        let later = omega - VertexSet::range(x + 1);
        for y in later - adj {
            pairs.push((x, y));
        }
    }
    pairs
}

/// Active separators of the potential maximal clique `omega`, one witness per
/// active separator, in canonical separator order.
pub fn active_separators(g: &Graph, omega: VertexSet) -> Result<Vec<ActivePairWitness>> {
    let seps = pmc_separators(g, omega)?;
    let mut out = Vec::new();
    for &sep in &seps {
        if let Some(&pair) = pairs_for(g, omega, sep, &seps).first() {
            let inside = omega - sep;
            let start = VertexSet::singleton(inside.first().expect("separators are strict subsets"));
            let component = g.reach(start, g.vertices() - sep);
            out.push(ActivePairWitness { separator: sep, pair, component });
        }
    }
    Ok(out)
}

/// A deduplicated set of potential maximal cliques of one graph.
///
/// Members can only enter through [`PmcCatalog::insert`], which verifies them
/// with [`is_pmc`]. Iteration follows the canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmcCatalog {
    pmcs: BTreeSet<VertexSet>,
    fingerprint: u64,
}

fn fingerprint(g: &Graph) -> u64 {
    let mut h = DefaultHasher::new();
    g.hash(&mut h);
    h.finish()
}

impl PmcCatalog {
    pub fn new(g: &Graph) -> Self {
        PmcCatalog { pmcs: BTreeSet::new(), fingerprint: fingerprint(g) }
    }

    /// Verifies `omega` against `g` and stores it. Returns `true` if it was
    /// a potential maximal clique not already present.
    pub fn insert(&mut self, g: &Graph, omega: VertexSet) -> bool {
        debug_assert!(self.belongs_to(g));
        is_pmc(g, omega) && self.pmcs.insert(omega)
    }

    /// Adds every member of `other`, which must belong to the same graph.
    pub fn merge(&mut self, other: &PmcCatalog) -> Result<()> {
        if self.fingerprint != other.fingerprint {
            return Err(Error::CatalogMismatch);
        }
        self.pmcs.extend(other.pmcs.iter().copied());
        Ok(())
    }

    /// Whether this catalog was built for `g`.
    pub fn belongs_to(&self, g: &Graph) -> bool {
        self.fingerprint == fingerprint(g)
    }

    pub fn contains(&self, omega: VertexSet) -> bool {
        self.pmcs.contains(&omega)
    }

    pub fn len(&self) -> usize {
        self.pmcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pmcs.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, VertexSet> {
        self.pmcs.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<VertexSet> {
        &self.pmcs
    }

    pub fn to_vec(&self) -> Vec<VertexSet> {
        self.pmcs.iter().copied().collect()
    }
}

impl<'a> IntoIterator for &'a PmcCatalog {
    type Item = &'a VertexSet;
    type IntoIter = btree_set::Iter<'a, VertexSet>;
    fn into_iter(self) -> Self::IntoIter {
        self.pmcs.iter()
    }
}

impl Serialize for PmcCatalog {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.pmcs.iter())
    }
}

/// Every subset of the vertex set, as the `mask`-th combination of `verts`.
fn subset(verts: &[usize], mask: u64) -> VertexSet {
    let mut s = VertexSet::EMPTY;
    let mut m = mask;
    while m != 0 {
        s.insert(verts[m.trailing_zeros() as usize]);
        m &= m - 1;
    }
    s
}

pub(crate) fn all_subsets_matching<F>(g: &Graph, cap: usize, what: &'static str, keep: F) -> Result<BTreeSet<VertexSet>>
where
    F: Fn(VertexSet) -> bool + Sync,
{
    let n = g.n();
    if n > cap || n >= 64 {
        return Err(Error::TooLarge { what, n, cap });
    }
    let verts = g.vertices().to_vec();
    Ok((0..1u64 << n)
        .into_par_iter()
        .map(|mask| subset(&verts, mask))
        .filter(|&s| keep(s))
        .collect::<Vec<_>>()
        .into_iter()
        .collect())
}

/// All minimal separators, by testing every vertex subset. Canonically sorted.
pub fn brute_force_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    brute_force_separators_capped(g, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_separators_capped(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let set = all_subsets_matching(g, cap, "brute-force separator oracle", |s| is_minimal_separator(g, s))?;
    Ok(set.into_iter().collect())
}

/// All potential maximal cliques, by testing every vertex subset.
pub fn brute_force_pmcs(g: &Graph) -> Result<PmcCatalog> {
    brute_force_pmcs_capped(g, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_pmcs_capped(g: &Graph, cap: usize) -> Result<PmcCatalog> {
    let set = all_subsets_matching(g, cap, "brute-force PMC oracle", |s| is_pmc(g, s))?;
    Ok(PmcCatalog { pmcs: set, fingerprint: fingerprint(g) })
}
