//! Enumeration parameterized by a vertex cover `W`.
//!
//! Every minimal separator `S` is pinned down by how it splits `W`: pick two
//! full components, put the cover vertices of one side in `D1`, of the other in
//! `D2`, and the rest of `S ∩ W` in the middle. The vertices of `S` outside `W`
//! are then exactly the independent-set vertices seeing both `D1` and `D2`. So
//! walking the `3^|W|` three-partitions of `W` and verifying each assembled
//! candidate lists every minimal separator.
//!
//! PMCs with an active separator are pinned down in the same way by a
//! four-partition of `W` (plus an active pair), or fall into two polynomial
//! special cases. The remaining PMCs are recovered by growing the graph one
//! vertex at a time, see [`pmcs_by_vc`].

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{is_minimal_separator, is_pmc, PmcCatalog};
use crate::vertex_set::VertexSet;

/// Largest cover the partition enumerators accept; `4^31` still fits in `u64`.
pub const MAX_COVER: usize = 31;

/// Minimum vertex cover by bounded search tree.
///
/// Degree-0 vertices are dropped and degree-1 vertices force their neighbour
/// into the cover; otherwise the search branches on a maximum-degree vertex
/// (lowest index on ties), taking either it or its whole neighbourhood. The
/// result is deterministic.
pub fn minimum_vertex_cover(g: &Graph) -> VertexSet {
    let mut best = g.vertices().iter().filter(|&v| g.degree(v) > 0).collect::<VertexSet>();
    // a cover of size |V|-1 always exists once there is an edge
    if let Some(v) = best.first() {
        best.remove(v);
        if !is_vertex_cover(g, best) {
            best.insert(v);
        }
    }
    cover_search(g, g.vertices(), VertexSet::EMPTY, &mut best);
    best
}

fn cover_search(g: &Graph, mut alive: VertexSet, mut chosen: VertexSet, best: &mut VertexSet) {
    loop {
        let mut changed = false;
        for v in alive {
            if !alive.contains(v) {
                continue;
            }
            let nb = g.neighbors(v) & alive;
            match nb.len() {
                0 => {
                    alive.remove(v);
                    changed = true;
                }
                1 => {
                    let u = nb.first().unwrap();
                    chosen.insert(u);
                    alive.remove(u);
                    alive.remove(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    if chosen.len() >= best.len() {
        return;
    }
    if alive.is_empty() {
        *best = chosen;
        return;
    }
    let (mut pick, mut max_deg, mut degree_sum) = (usize::MAX, 0, 0);
    for v in alive {
        let d = (g.neighbors(v) & alive).len();
        degree_sum += d;
        if d > max_deg {
            max_deg = d;
            pick = v;
        }
    }
    let edges = degree_sum / 2;
    if chosen.len() + edges.div_ceil(max_deg) >= best.len() {
        return;
    }
    cover_search(g, alive.without(pick), chosen.with(pick), best);
    let nb = g.neighbors(pick) & alive;
    cover_search(g, alive - nb - VertexSet::singleton(pick), chosen | nb, best);
}

pub fn is_vertex_cover(g: &Graph, w: VertexSet) -> bool {
    w.is_subset(g.vertices()) && (g.vertices() - w).iter().all(|v| g.neighbors(v).is_subset(w))
}

fn check_cover(g: &Graph, w: VertexSet) -> Result<Vec<usize>> {
    if !is_vertex_cover(g, w) {
        return Err(Error::NotVertexCover(w.to_vec()));
    }
    if w.len() > MAX_COVER {
        return Err(Error::CoverTooLarge { size: w.len(), cap: MAX_COVER });
    }
    Ok(w.to_vec())
}

/// `(D1, S, D2)` split of a vertex cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThreePartition {
    pub d1: VertexSet,
    pub sep: VertexSet,
    pub d2: VertexSet,
}

impl ThreePartition {
    /// The `index`-th three-partition of `cover`, reading `index` in base 3
    /// with one digit per cover vertex (0 = `d1`, 1 = `sep`, 2 = `d2`).
    pub fn nth(cover: &[usize], mut index: u64) -> Self {
        let mut p = ThreePartition { d1: VertexSet::EMPTY, sep: VertexSet::EMPTY, d2: VertexSet::EMPTY };
        for &v in cover {
            match index % 3 {
                0 => p.d1.insert(v),
                1 => p.sep.insert(v),
                _ => p.d2.insert(v),
            }
            index /= 3;
        }
        p
    }

    /// `sep` plus every vertex outside the cover that sees both `d1` and `d2`.
    pub fn assemble(&self, g: &Graph, cover: VertexSet) -> VertexSet {
        let mut s = self.sep;
        for x in g.vertices() - cover {
            let nb = g.neighbors(x);
            if nb.intersects(self.d1) && nb.intersects(self.d2) {
                s.insert(x);
            }
        }
        s
    }
}

/// `(D_S, D_x, D_y, Ω)` split of a vertex cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FourPartition {
    pub ds: VertexSet,
    pub dx: VertexSet,
    pub dy: VertexSet,
    pub om: VertexSet,
}

impl FourPartition {
    /// The `index`-th four-partition of `cover`, two bits per cover vertex.
    pub fn nth(cover: &[usize], index: u64) -> Self {
        let mut p = FourPartition {
            ds: VertexSet::EMPTY,
            dx: VertexSet::EMPTY,
            dy: VertexSet::EMPTY,
            om: VertexSet::EMPTY,
        };
        for (i, &v) in cover.iter().enumerate() {
            match index >> (2 * i) & 3 {
                0 => p.ds.insert(v),
                1 => p.dx.insert(v),
                2 => p.dy.insert(v),
                _ => p.om.insert(v),
            }
        }
        p
    }

    /// The candidate clique for active pair `(x, y)`: `om` plus every vertex
    /// `z` outside the cover that either
    ///  * sees `ds` and `dx ∪ dy`, or
    ///  * misses `ds` but sees `dx ∪ {x}`, `dy ∪ {y}` and `dx ∪ dy`.
    pub fn assemble(&self, g: &Graph, cover: VertexSet, x: usize, y: usize) -> VertexSet {
        let parts = self.outside_parts(g, cover);
        self.om | parts.base | (parts.only_x & g.neighbors(y)) | (parts.only_y & g.neighbors(x))
    }

    /// Splits the vertices outside the cover by what they see. `base` holds
    /// the vertices accepted for every active pair; `only_x` holds those that
    /// miss `ds` and `dy` but see `dx` (accepted iff adjacent to `y`), and
    /// symmetrically for `only_y`.
    fn outside_parts(&self, g: &Graph, cover: VertexSet) -> OutsideParts {
        let mut parts = OutsideParts::default();
        for z in g.vertices() - cover {
            let nb = g.neighbors(z);
            let (sees_s, sees_x, sees_y) = (nb.intersects(self.ds), nb.intersects(self.dx), nb.intersects(self.dy));
            match (sees_s, sees_x, sees_y) {
                (true, true, _) | (true, _, true) | (false, true, true) => parts.base.insert(z),
                (false, true, false) => parts.only_x.insert(z),
                (false, false, true) => parts.only_y.insert(z),
                _ => {}
            }
        }
        parts
    }
}

#[derive(Default)]
struct OutsideParts {
    base: VertexSet,
    only_x: VertexSet,
    only_y: VertexSet,
}

/// Deduplicated candidates produced by `emit` over the index range `0..total`.
fn unique_candidates<F>(total: u64, emit: F) -> HashSet<VertexSet>
where
    F: Fn(u64, &mut HashSet<VertexSet>) + Sync,
{
    (0..total)
        .into_par_iter()
        .fold(HashSet::new, |mut acc, idx| {
            emit(idx, &mut acc);
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return merge_into(b, a);
            }
            a.extend(b);
            a
        })
}

fn merge_into(mut big: HashSet<VertexSet>, small: HashSet<VertexSet>) -> HashSet<VertexSet> {
    big.extend(small);
    big
}

/// All minimal separators of `g`, assembled from the three-partitions of the
/// vertex cover `w` and verified. Canonically sorted.
pub fn separators_by_vc(g: &Graph, w: VertexSet) -> Result<Vec<VertexSet>> {
    let cover = check_cover(g, w)?;
    let total = 3u64.pow(cover.len() as u32);
    let candidates = unique_candidates(total, |idx, acc| {
        acc.insert(ThreePartition::nth(&cover, idx).assemble(g, w));
    });
    let mut seps: Vec<VertexSet> = candidates.into_par_iter().filter(|&s| is_minimal_separator(g, s)).collect();
    seps.sort_unstable();
    Ok(seps)
}

/// A verified catalog containing every PMC of `g` that has an active separator.
pub fn active_pmcs_by_vc(g: &Graph, w: VertexSet) -> Result<PmcCatalog> {
    let seps = separators_by_vc(g, w)?;
    active_pmcs_with(g, w, &seps)
}

fn active_pmcs_with(g: &Graph, w: VertexSet, seps: &[VertexSet]) -> Result<PmcCatalog> {
    let cover = check_cover(g, w)?;
    let mut candidates: HashSet<VertexSet> = HashSet::new();

    // closed neighbourhoods
    for t in g.vertices() {
        candidates.insert(g.neighbors(t).with(t));
    }

    // S plus the neighbours of some t inside one component of G - S
    let around: Vec<HashSet<VertexSet>> = seps
        .par_iter()
        .map(|&s| {
            let mut acc = HashSet::new();
            for c in g.components_without(s) {
                for t in g.vertices() {
                    acc.insert(s | (g.neighbors(t) & c));
                }
            }
            acc
        })
        .collect();
    for acc in around {
        candidates.extend(acc);
    }

    // four-partitions of the cover. Only cover vertices of `om` matter as the
    // active pair: a vertex outside the cover has no neighbours outside it.
    let total = 1u64 << (2 * cover.len());
    let from_partitions = unique_candidates(total, |idx, acc| {
        let p = FourPartition::nth(&cover, idx);
        let parts = p.outside_parts(g, w);
        let core = p.om | parts.base;
        let pair_side = |v: Option<usize>, side: VertexSet| match v {
            Some(v) => side & g.neighbors(v),
            None => VertexSet::EMPTY,
        };
        let choices = std::iter::once(None).chain(p.om.iter().map(Some));
        for x in choices.clone() {
            let from_x = pair_side(x, parts.only_y);
            for y in choices.clone() {
                let omega = core | from_x | pair_side(y, parts.only_x);
                if !omega.is_empty() {
                    acc.insert(omega);
                }
            }
        }
    });
    candidates.extend(from_partitions);

    let mut verified: Vec<VertexSet> = candidates.into_par_iter().filter(|&o| is_pmc(g, o)).collect();
    verified.sort_unstable();
    let mut catalog = PmcCatalog::new(g);
    for omega in verified {
        catalog.insert(g, omega);
    }
    Ok(catalog)
}

/// Every PMC of `g`.
///
/// Vertices are added one at a time in ascending order. The PMCs of each
/// prefix graph `G_i` are those with an active separator, those of the form
/// `S ∪ {v_i}` for a minimal separator `S` of `G_i`, and those of the form
/// `Ω'` or `Ω' ∪ {v_i}` for a PMC `Ω'` of `G_{i-1}`. The cover of `G_i` is the
/// minimum cover of `g` restricted to the prefix.
pub fn pmcs_by_vc(g: &Graph) -> Result<PmcCatalog> {
    let w = minimum_vertex_cover(g);
    let order = g.vertices().to_vec();
    let Some(&first) = order.first() else {
        return Ok(PmcCatalog::new(g));
    };
    let mut prefix = VertexSet::singleton(first);
    let mut prev = PmcCatalog::new(&g.induced(prefix));
    prev.insert(&g.induced(prefix), prefix);

    for &v in &order[1..] {
        prefix.insert(v);
        let gi = g.induced(prefix);
        let wi = w & prefix;
        debug_assert!(is_vertex_cover(&gi, wi));
        let seps = separators_by_vc(&gi, wi)?;
        let mut catalog = active_pmcs_with(&gi, wi, &seps)?;
        for s in seps {
            catalog.insert(&gi, s.with(v));
        }
        for &omega in prev.iter() {
            catalog.insert(&gi, omega);
            catalog.insert(&gi, omega.with(v));
        }
        prev = catalog;
    }
    // the final prefix graph equals `g`
    debug_assert!(prev.belongs_to(g));
    Ok(prev)
}
