//! Exact treewidth and minimum fill-in from a complete PMC catalog, and the
//! elimination-order oracles they are checked against.
//!
//! Both programs run over blocks `(S, C)`: a minimal separator `S` with a full
//! component `C`. The best triangulation of `G[S ∪ C]` with `S` completed puts
//! some PMC `Ω` with `S ⊊ Ω ⊆ S ∪ C` in a bag, and the rest of `C` splits into
//! the components of `G - Ω` below it, each again a block. The whole graph is
//! the block `(∅, V)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::modular::pmcs_by_mw;
use crate::recognition::{brute_force_pmcs_capped, PmcCatalog, DEFAULT_ORACLE_CAP};
use crate::vc::pmcs_by_vc;
use crate::vertex_set::VertexSet;

pub const DEFAULT_TW_ORACLE_CAP: usize = 9;
pub const DEFAULT_FILL_ORACLE_CAP: usize = 8;

/// A dynamic-programming state: a separator and one of its full components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Block {
    pub sep: VertexSet,
    pub comp: VertexSet,
}

impl Block {
    fn span(&self) -> VertexSet {
        self.sep | self.comp
    }
}

fn blocks_of(g: &Graph, catalog: &PmcCatalog) -> Vec<Block> {
    let mut blocks: Vec<Block> = catalog
        .iter()
        .flat_map(|&omega| g.components_without(omega))
        .map(|comp| Block { sep: g.open_neighborhood(comp), comp })
        .collect();
    blocks.push(Block { sep: VertexSet::EMPTY, comp: g.vertices() });
    blocks.sort_unstable_by_key(|b| (b.span().len(), *b));
    blocks.dedup();
    blocks
}

/// Evaluates every block bottom-up. `bag` scores a PMC inside a block and
/// `fold` combines that score with the children's values. Returns the value
/// of the whole graph.
fn block_dp<B, F>(g: &Graph, catalog: &PmcCatalog, bag: B, fold: F) -> Result<usize>
where
    B: Fn(VertexSet, VertexSet) -> usize,
    F: Fn(usize, usize) -> usize,
{
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !catalog.belongs_to(g) {
        return Err(Error::CatalogMismatch);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pmcs = catalog.to_vec();
    let mut value: HashMap<VertexSet, Option<usize>> = HashMap::new();
    for block in blocks_of(g, catalog) {
        let span = block.span();
        let mut best: Option<usize> = None;
        'omega: for &omega in &pmcs {
            if !block.sep.is_strict_subset(omega) || !omega.is_subset(span) {
                continue;
            }
            let mut total = bag(omega, block.sep);
            for child in g.components_without(omega) {
                if !child.is_subset(block.comp) {
                    continue;
                }
                match value.get(&child).copied().flatten() {
                    Some(v) => total = fold(total, v),
                    None => continue 'omega,
                }
            }
            best = Some(best.map_or(total, |b| b.min(total)));
        }
        value.insert(block.comp, best);
    }
    value[&g.vertices()].ok_or(Error::IncompleteCatalog)
}

/// Treewidth of a connected graph, given all of its PMCs.
pub fn treewidth(g: &Graph, catalog: &PmcCatalog) -> Result<usize> {
    block_dp(g, catalog, |omega, _| omega.len() - 1, usize::max)
}

/// Minimum fill-in of a connected graph, given all of its PMCs.
///
/// A block pays for the non-edges of its bag that are not already inside its
/// separator; the separator's non-edges are paid by the parent.
pub fn min_fill_in(g: &Graph, catalog: &PmcCatalog) -> Result<usize> {
    block_dp(g, catalog, |omega, sep| g.missing_edges(omega) - g.missing_edges(sep), |a, b| a + b)
}

/// Runs the elimination game from every reachable eliminated set and returns
/// the best total under `step`, which scores eliminating a vertex whose
/// current neighbourhood is `nb`.
fn elimination_search<F>(g: &Graph, cap: usize, what: &'static str, step: F, fold: fn(usize, usize) -> usize) -> Result<usize>
where
    F: Fn(&[VertexSet], VertexSet) -> usize,
{
    let n = g.n();
    if n > cap || n > 24 {
        return Err(Error::TooLarge { what, n, cap });
    }
    let verts = g.vertices().to_vec();
    // relabel to 0..n
    let local: Vec<VertexSet> = verts
        .iter()
        .map(|&v| verts.iter().enumerate().filter(|(_, &u)| g.has_edge(u, v)).map(|(i, _)| i).collect())
        .collect();
    let mut memo: Vec<Option<usize>> = vec![None; 1 << n];

    fn go<F: Fn(&[VertexSet], VertexSet) -> usize>(
        adj: &[VertexSet],
        eliminated: usize,
        n: usize,
        memo: &mut [Option<usize>],
        step: &F,
        fold: fn(usize, usize) -> usize,
    ) -> usize {
        if eliminated == (1 << n) - 1 {
            return 0;
        }
        if let Some(v) = memo[eliminated] {
            return v;
        }
        let mut best = usize::MAX;
        for v in 0..n {
            if eliminated >> v & 1 == 1 {
                continue;
            }
            let nb = adj[v];
            let cost = step(adj, nb);
            let mut next = adj.to_vec();
            for u in nb {
                next[u] |= nb.without(u);
                next[u].remove(v);
            }
            next[v] = VertexSet::EMPTY;
            let rest = go(&next, eliminated | 1 << v, n, memo, step, fold);
            best = best.min(fold(cost, rest));
        }
        memo[eliminated] = Some(best);
        best
    }

    Ok(go(&local, 0, n, &mut memo, &step, fold))
}

/// Treewidth by minimizing the largest neighbourhood met over all elimination orders.
pub fn brute_force_treewidth(g: &Graph) -> Result<usize> {
    brute_force_treewidth_capped(g, DEFAULT_TW_ORACLE_CAP)
}

pub fn brute_force_treewidth_capped(g: &Graph, cap: usize) -> Result<usize> {
    elimination_search(g, cap, "treewidth oracle", |_, nb| nb.len(), usize::max)
}

/// Minimum fill-in by minimizing the number of added edges over all elimination orders.
pub fn brute_force_fill_in(g: &Graph) -> Result<usize> {
    brute_force_fill_in_capped(g, DEFAULT_FILL_ORACLE_CAP)
}

pub fn brute_force_fill_in_capped(g: &Graph, cap: usize) -> Result<usize> {
    elimination_search(
        g,
        cap,
        "fill-in oracle",
        |adj, nb| nb.iter().map(|u| (nb - adj[u]).without(u).len()).sum::<usize>() / 2,
        |a, b| a + b,
    )
}

/// Where a PMC catalog comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Vc,
    Mw,
    Brute,
}

impl Method {
    pub fn catalog(self, g: &Graph) -> Result<PmcCatalog> {
        self.catalog_with_cap(g, DEFAULT_ORACLE_CAP)
    }

    /// `oracle_cap` only applies to [`Method::Brute`].
    pub fn catalog_with_cap(self, g: &Graph, oracle_cap: usize) -> Result<PmcCatalog> {
        match self {
            Method::Vc => pmcs_by_vc(g),
            Method::Mw => pmcs_by_mw(g),
            Method::Brute => brute_force_pmcs_capped(g, oracle_cap),
        }
    }
}

/// Treewidth of any graph: the maximum over its components (0 if empty).
pub fn solve_treewidth(g: &Graph, method: Method) -> Result<usize> {
    per_component(g, method, treewidth)?.into_iter().try_fold(0, |acc, v| Ok(acc.max(v)))
}

/// Minimum fill-in of any graph: the sum over its components.
pub fn solve_fill_in(g: &Graph, method: Method) -> Result<usize> {
    Ok(per_component(g, method, min_fill_in)?.into_iter().sum())
}

fn per_component(
    g: &Graph,
    method: Method,
    solve: fn(&Graph, &PmcCatalog) -> Result<usize>,
) -> Result<Vec<usize>> {
    g.components_without(VertexSet::EMPTY)
        .into_iter()
        .map(|c| {
            let h = g.induced(c);
            let catalog = method.catalog(&h)?;
            solve(&h, &catalog)
        })
        .collect()
}
