//! Modular decomposition and the enumerators driven by it.
//!
//! A module is a vertex set that every outside vertex sees either completely
//! or not at all. Replacing each vertex `v_i` of a quotient graph `G'` by a
//! module graph `M_i` yields the expanded graph `H`. Every minimal separator
//! (resp. PMC) of `H` is either the expansion of one of `G'`, or one of `M_i`
//! extended by `N_H(V_i)`. Walking the decomposition tree bottom-up and
//! verifying both kinds of candidate therefore lists everything.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{all_subsets_matching, is_minimal_separator, is_pmc, PmcCatalog};
use crate::vertex_set::VertexSet;

/// Largest prime quotient [`base_enumerate`] accepts by default.
pub const DEFAULT_PRIME_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Leaf,
    Union,
    Join,
    Prime,
}

/// A node of the modular decomposition tree.
///
/// Internal nodes carry their quotient graph on `0..children.len()`, where
/// quotient vertex `i` stands for `children[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTree {
    pub kind: NodeKind,
    pub vertices: VertexSet,
    pub children: Vec<ModuleTree>,
    pub quotient: Option<Graph>,
}

impl ModuleTree {
    fn leaf(v: usize) -> Self {
        ModuleTree { kind: NodeKind::Leaf, vertices: VertexSet::singleton(v), children: Vec::new(), quotient: None }
    }

    /// Vertex sets of the children, in quotient order.
    pub fn child_sets(&self) -> Vec<VertexSet> {
        self.children.iter().map(|c| c.vertices).collect()
    }

    /// The edges of the graph this tree describes, `(u, v)` with `u < v`, sorted.
    pub fn expanded_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        self.collect_edges(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_edges(&self, out: &mut Vec<(usize, usize)>) {
        let Some(q) = &self.quotient else { return };
        let sets = self.child_sets();
        for (i, j) in q.edges() {
            for a in sets[i] {
                for b in sets[j] {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        for c in &self.children {
            c.collect_edges(out);
        }
    }

    /// Preorder walk over all nodes.
    pub fn nodes(&self) -> Vec<&ModuleTree> {
        let mut out = vec![self];
        let mut i = 0;
        while i < out.len() {
            out.extend(out[i].children.iter());
            i += 1;
        }
        out
    }
}

/// JSON view: `{"kind", "vertices", "quotient_edges", "children"}`.
impl Serialize for ModuleTree {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<(usize, usize)> = self.quotient.as_ref().map(|q| q.edges().collect()).unwrap_or_default();
        let mut st = serializer.serialize_struct("ModuleTree", 4)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("quotient_edges", &edges)?;
        st.serialize_field("children", &self.children)?;
        st.end()
    }
}

/// Whether every vertex outside `set` sees all of it or none of it.
pub fn is_module(g: &Graph, set: VertexSet) -> bool {
    (g.vertices() - set).iter().all(|x| {
        let seen = g.neighbors(x) & set;
        seen.is_empty() || seen == set
    })
}

/// Smallest module of `g` containing `seed`.
fn module_closure(g: &Graph, seed: VertexSet) -> VertexSet {
    let mut m = seed;
    loop {
        let mut splitters = VertexSet::EMPTY;
        for z in g.vertices() - m {
            let seen = g.neighbors(z) & m;
            if !seen.is_empty() && seen != m {
                splitters.insert(z);
            }
        }
        if splitters.is_empty() {
            return m;
        }
        m |= splitters;
    }
}

/// Modular decomposition tree of a nonempty graph.
///
/// Disconnected graphs split into their components (union node), graphs with
/// disconnected complement into their co-components (join node). Otherwise the
/// maximal proper modules partition the vertex set (prime node); the one
/// containing `v` is the union of all proper closures of pairs `{u, v}`.
/// Children are ordered by least vertex.
pub fn modular_decomposition(g: &Graph) -> Result<ModuleTree> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(decompose(g, g.vertices()))
}

fn decompose(g: &Graph, set: VertexSet) -> ModuleTree {
    if set.len() == 1 {
        return ModuleTree::leaf(set.first().unwrap());
    }
    let h = g.induced(set);
    let comps = h.components_without(VertexSet::EMPTY);
    let (kind, parts) = if comps.len() > 1 {
        (NodeKind::Union, comps)
    } else {
        let co = h.complement().components_without(VertexSet::EMPTY);
        if co.len() > 1 {
            (NodeKind::Join, co)
        } else {
            (NodeKind::Prime, maximal_modules(&h))
        }
    };
    let reps: Vec<usize> = parts.iter().map(|p| p.first().unwrap()).collect();
    let quotient_edges = (0..reps.len())
        .flat_map(|i| (i + 1..reps.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| h.has_edge(reps[i], reps[j]));
    let quotient = Graph::from_edges(reps.len(), quotient_edges).expect("quotient fits");
    let children = parts.iter().map(|&p| decompose(g, p)).collect();
    ModuleTree { kind, vertices: set, children, quotient: Some(quotient) }
}

/// Maximal proper modules of a graph whose complement is also connected.
fn maximal_modules(h: &Graph) -> Vec<VertexSet> {
    let all = h.vertices();
    let mut assigned = VertexSet::EMPTY;
    let mut parts = Vec::new();
    for v in all {
        if assigned.contains(v) {
            continue;
        }
        let mut part = VertexSet::singleton(v);
        for u in all.without(v) {
            if part.contains(u) {
                continue;
            }
            let m = module_closure(h, VertexSet::from([u, v]));
            if m != all {
                part |= m;
            }
        }
        assigned |= part;
        parts.push(part);
    }
    parts.sort_by_key(|p| p.first());
    parts
}

/// Maximum number of children of a prime node; 0 when there is none.
pub fn modular_width(t: &ModuleTree) -> usize {
    t.nodes()
        .iter()
        .filter(|n| n.kind == NodeKind::Prime)
        .map(|n| n.children.len())
        .max()
        .unwrap_or(0)
}

/// Union of the module vertex sets picked out by the quotient set.
pub fn expand(quotient_set: VertexSet, children: &[VertexSet]) -> VertexSet {
    quotient_set.iter().fold(VertexSet::EMPTY, |acc, i| acc | children[i])
}

/// Quotient vertices whose module meets `set`.
pub fn contract(set: VertexSet, children: &[VertexSet]) -> VertexSet {
    children.iter().enumerate().filter(|(_, c)| c.intersects(set)).map(|(i, _)| i).collect()
}

/// Builds `H` by substituting `modules[i]` for quotient vertex `i`. Module
/// vertices are relabelled consecutively; the returned sets are the `V_i`.
pub fn substitute(quotient: &Graph, modules: &[Graph]) -> Result<(Graph, Vec<VertexSet>)> {
    if quotient.vertices() != VertexSet::range(quotient.n()) || modules.len() != quotient.n() {
        return Err(Error::InvalidParameter("one module per quotient vertex on 0..n".into()));
    }
    let mut offset = 0;
    let mut sets = Vec::with_capacity(modules.len());
    let mut edges = Vec::new();
    for m in modules {
        edges.extend(m.edges().map(|(a, b)| (a + offset, b + offset)));
        sets.push((offset..offset + m.bound()).collect::<VertexSet>());
        offset += m.bound();
    }
    if offset > crate::vertex_set::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: offset, max: crate::vertex_set::MAX_VERTICES });
    }
    for (i, j) in quotient.edges() {
        for a in sets[i] {
            for b in sets[j] {
                edges.push((a, b));
            }
        }
    }
    Ok((Graph::from_edges(offset, edges)?, sets))
}

/// Minimal separators and PMCs of a small quotient graph by exhaustive subset
/// enumeration.
pub fn base_enumerate(quotient: &Graph) -> Result<(Vec<VertexSet>, PmcCatalog)> {
    base_enumerate_capped(quotient, DEFAULT_PRIME_CAP)
}

pub fn base_enumerate_capped(quotient: &Graph, cap: usize) -> Result<(Vec<VertexSet>, PmcCatalog)> {
    let what = "prime quotient enumeration";
    let seps = all_subsets_matching(quotient, cap, what, |s| is_minimal_separator(quotient, s))?;
    let pmcs = all_subsets_matching(quotient, cap, what, |s| is_pmc(quotient, s))?;
    let mut catalog = PmcCatalog::new(quotient);
    for omega in pmcs {
        catalog.insert(quotient, omega);
    }
    Ok((seps.into_iter().collect(), catalog))
}

/// All minimal separators of `g`, canonically sorted.
pub fn separators_by_mw(g: &Graph) -> Result<Vec<VertexSet>> {
    separators_by_mw_capped(g, DEFAULT_PRIME_CAP)
}

pub fn separators_by_mw_capped(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let tree = modular_decomposition(g)?;
    Ok(node_separators(g, &tree, cap)?.into_iter().collect())
}

fn node_separators(g: &Graph, node: &ModuleTree, cap: usize) -> Result<BTreeSet<VertexSet>> {
    let Some(quotient) = &node.quotient else {
        return Ok(BTreeSet::new());
    };
    let h = g.induced(node.vertices);
    let sets = node.child_sets();
    let from_children = node
        .children
        .par_iter()
        .map(|c| node_separators(g, c, cap))
        .collect::<Result<Vec<_>>>()?;

    let mut candidates = BTreeSet::new();
    match node.kind {
        NodeKind::Union => {
            candidates.insert(VertexSet::EMPTY);
        }
        NodeKind::Join => {}
        _ => {
            for s in base_enumerate_capped(quotient, cap)?.0 {
                candidates.insert(expand(s, &sets));
            }
        }
    }
    for (child, seps) in sets.iter().zip(&from_children) {
        let boundary = h.open_neighborhood(*child);
        candidates.extend(seps.iter().map(|&s| s | boundary));
    }
    Ok(candidates.into_iter().filter(|&s| is_minimal_separator(&h, s)).collect())
}

/// All PMCs of `g`.
pub fn pmcs_by_mw(g: &Graph) -> Result<PmcCatalog> {
    pmcs_by_mw_capped(g, DEFAULT_PRIME_CAP)
}

pub fn pmcs_by_mw_capped(g: &Graph, cap: usize) -> Result<PmcCatalog> {
    let mut catalog = PmcCatalog::new(g);
    if g.n() == 0 {
        return Ok(catalog);
    }
    let tree = modular_decomposition(g)?;
    for omega in node_pmcs(g, &tree, cap)? {
        catalog.insert(g, omega);
    }
    Ok(catalog)
}

fn node_pmcs(g: &Graph, node: &ModuleTree, cap: usize) -> Result<BTreeSet<VertexSet>> {
    let Some(quotient) = &node.quotient else {
        return Ok(BTreeSet::from([node.vertices]));
    };
    let h = g.induced(node.vertices);
    let sets = node.child_sets();
    let from_children = node
        .children
        .par_iter()
        .map(|c| node_pmcs(g, c, cap))
        .collect::<Result<Vec<_>>>()?;

    let mut candidates = BTreeSet::new();
    match node.kind {
        // expansions at a union node are whole children, already covered below
        NodeKind::Union => {}
        NodeKind::Join => {
            candidates.insert(node.vertices);
        }
        _ => {
            for &omega in base_enumerate_capped(quotient, cap)?.1.iter() {
                candidates.insert(expand(omega, &sets));
            }
        }
    }
    for (child, pmcs) in sets.iter().zip(&from_children) {
        let boundary = h.open_neighborhood(*child);
        candidates.extend(pmcs.iter().map(|&o| o | boundary));
    }
    Ok(candidates.into_iter().filter(|&o| is_pmc(&h, o)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cube, Family};
    use crate::recognition::{brute_force_pmcs, brute_force_separators};

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from(v)
    }

    /// No module other than singletons and the whole set, by trying every subset.
    fn is_prime_naive(g: &Graph) -> bool {
        let verts = g.vertices().to_vec();
        (0u64..1 << verts.len()).all(|mask| {
            let s: VertexSet = verts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            s.len() <= 1 || s == g.vertices() || !is_module(g, s)
        })
    }

    fn check_tree(g: &Graph, t: &ModuleTree) {
        assert_eq!(t.vertices, g.vertices());
        for node in t.nodes() {
            let h = g.induced(node.vertices);
            match node.kind {
                NodeKind::Leaf => {
                    assert_eq!(node.vertices.len(), 1);
                    assert!(node.children.is_empty());
                }
                kind => {
                    let q = node.quotient.as_ref().unwrap();
                    assert!(node.children.len() >= 2);
                    assert_eq!(q.n(), node.children.len());
                    let sets = node.child_sets();
                    let mut union = VertexSet::EMPTY;
                    for &s in &sets {
                        assert!(!s.intersects(union));
                        union |= s;
                        assert!(is_module(&h, s), "{s} not a module of {}", node.vertices);
                    }
                    assert_eq!(union, node.vertices);
                    let p = q.n();
                    match kind {
                        NodeKind::Union => assert_eq!(q.m(), 0),
                        NodeKind::Join => assert_eq!(q.m(), p * (p - 1) / 2),
                        _ => assert!(is_prime_naive(q), "quotient {q:?} is not prime"),
                    }
                }
            }
        }
        assert_eq!(t.expanded_edges(), g.edges().collect::<Vec<_>>());
    }

    fn corpus(count: u64) -> impl Iterator<Item = Graph> {
        (0..count).map(|seed| {
            let n = 1 + (seed % 10) as usize;
            let prob = [0.2, 0.35, 0.5, 0.7][(seed / 2 % 4) as usize];
            Family::Gnp { n, prob, seed: 7000 + seed }.generate().unwrap()
        })
    }

    #[test]
    fn decomposition_examples() {
        let k4 = Family::Complete(4).generate().unwrap();
        let t = modular_decomposition(&k4).unwrap();
        assert_eq!(t.kind, NodeKind::Join);
        assert_eq!(t.children.len(), 4);
        assert_eq!(modular_width(&t), 0);

        let e3 = Family::Empty(3).generate().unwrap();
        let t = modular_decomposition(&e3).unwrap();
        assert_eq!(t.kind, NodeKind::Union);
        assert_eq!(t.children.len(), 3);

        let p4 = Family::Path(4).generate().unwrap();
        assert!(is_prime_naive(&p4));
        let t = modular_decomposition(&p4).unwrap();
        assert_eq!(t.kind, NodeKind::Prime);
        assert!(t.children.iter().all(|c| c.kind == NodeKind::Leaf));
        assert_eq!(modular_width(&t), 4);

        let c = cube();
        assert!(is_prime_naive(&c));
        assert_eq!(modular_width(&modular_decomposition(&c).unwrap()), 8);

        assert_eq!(modular_decomposition(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph));
    }

    #[test]
    fn cograph_has_width_zero() {
        // (K2 ∪ K1) joined with K2
        let q = Family::Path(2).generate().unwrap();
        let left = Graph::from_edges(3, [(0, 1)]).unwrap();
        let right = Family::Complete(2).generate().unwrap();
        let (h, _) = substitute(&q, &[left, right]).unwrap();
        let t = modular_decomposition(&h).unwrap();
        check_tree(&h, &t);
        assert_eq!(t.kind, NodeKind::Join);
        assert_eq!(modular_width(&t), 0);
    }

    #[test]
    fn nested_prime_nodes() {
        // P4 with vertex 1 replaced by a P4 and vertex 2 by an independent pair
        let p4 = Family::Path(4).generate().unwrap();
        let one = Graph::empty(1).unwrap();
        let (h, sets) = substitute(&p4, &[one.clone(), p4.clone(), Graph::empty(2).unwrap(), one]).unwrap();
        let t = modular_decomposition(&h).unwrap();
        check_tree(&h, &t);
        assert_eq!(t.kind, NodeKind::Prime);
        assert_eq!(t.child_sets(), sets);
        assert_eq!(t.children[1].kind, NodeKind::Prime);
        assert_eq!(t.children[2].kind, NodeKind::Union);
        assert_eq!(modular_width(&t), 4);
    }

    #[test]
    fn trees_are_valid_on_corpus() {
        for g in corpus(150) {
            let t = modular_decomposition(&g).unwrap();
            check_tree(&g, &t);
        }
    }

    #[test]
    fn expand_and_contract() {
        let children = [set(&[0, 1]), set(&[2])];
        assert_eq!(expand(VertexSet::EMPTY, &children), VertexSet::EMPTY);
        assert_eq!(contract(VertexSet::EMPTY, &children), VertexSet::EMPTY);
        assert_eq!(expand(set(&[0]), &children), set(&[0, 1]));
        assert_eq!(contract(set(&[1, 2]), &children), set(&[0, 1]));
        for mask in 0u128..4 {
            let x = VertexSet::from_bits(mask);
            assert_eq!(contract(expand(x, &children), &children), x);
        }
    }

    #[test]
    fn base_enumeration() {
        let k5 = Family::Complete(5).generate().unwrap();
        let (seps, pmcs) = base_enumerate(&k5).unwrap();
        assert!(seps.is_empty());
        assert_eq!(pmcs.to_vec(), vec![k5.vertices()]);

        let p4 = Family::Path(4).generate().unwrap();
        let (seps, _) = base_enumerate(&p4).unwrap();
        assert_eq!(seps, brute_force_separators(&p4).unwrap());
        assert!(seps.contains(&set(&[1])) && seps.contains(&set(&[2])));

        let e3 = Family::Empty(3).generate().unwrap();
        assert!(base_enumerate(&e3).unwrap().0.contains(&VertexSet::EMPTY));

        let big = Family::Cycle(21).generate().unwrap();
        assert!(matches!(base_enumerate(&big), Err(Error::TooLarge { cap: 20, .. })));
    }

    #[test]
    fn enumerator_examples() {
        let k4 = Family::Complete(4).generate().unwrap();
        assert!(separators_by_mw(&k4).unwrap().is_empty());
        assert_eq!(pmcs_by_mw(&k4).unwrap().to_vec(), vec![k4.vertices()]);

        let triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(separators_by_mw(&triangles).unwrap(), vec![VertexSet::EMPTY]);
        let pmcs = pmcs_by_mw(&triangles).unwrap();
        assert_eq!(pmcs.to_vec(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        assert_eq!(pmcs, brute_force_pmcs(&triangles).unwrap());

        let c = cube();
        assert_eq!(pmcs_by_mw(&c).unwrap(), brute_force_pmcs(&c).unwrap());
    }

    #[test]
    fn enumerators_match_oracle() {
        for g in corpus(150) {
            assert_eq!(separators_by_mw(&g).unwrap(), brute_force_separators(&g).unwrap(), "{g:?}");
            assert_eq!(pmcs_by_mw(&g).unwrap(), brute_force_pmcs(&g).unwrap(), "{g:?}");
        }
    }

    fn expansions() -> Vec<(Graph, Graph, Vec<Graph>)> {
        let mut out = Vec::new();
        for seed in 0..30u64 {
            let p = 2 + (seed % 4) as usize;
            let quotient = Family::Gnp { n: p, prob: 0.5, seed: 100 + seed }.generate().unwrap();
            let modules: Vec<Graph> = (0..p as u64)
                .map(|i| {
                    let k = 1 + ((seed + i) % 3) as usize;
                    Family::Gnp { n: k, prob: 0.4, seed: 500 + seed * 10 + i }.generate().unwrap()
                })
                .collect();
            let (h, _) = substitute(&quotient, &modules).unwrap();
            out.push((h, quotient, modules));
        }
        out
    }

    #[test]
    fn separators_crossing_a_module_come_from_it() {
        for (h, quotient, modules) in expansions() {
            let (_, sets) = substitute(&quotient, &modules).unwrap();
            for s in brute_force_separators(&h).unwrap() {
                for (i, &vi) in sets.iter().enumerate() {
                    let inside = s & vi;
                    if inside.is_empty() || inside == vi {
                        continue;
                    }
                    assert_eq!(s - vi, h.open_neighborhood(vi));
                    // S ∩ V_i, relabelled into M_i
                    let offset = vi.first().unwrap();
                    let local: VertexSet = inside.iter().map(|v| v - offset).collect();
                    assert!(is_minimal_separator(&modules[i], local));
                }
            }
        }
    }

    #[test]
    fn counts_are_bounded_by_quotient_plus_modules() {
        for (h, quotient, modules) in expansions() {
            let seps = |g: &Graph| brute_force_separators(g).unwrap().len();
            let pmcs = |g: &Graph| brute_force_pmcs(g).unwrap().len();
            assert!(seps(&h) <= seps(&quotient) + modules.iter().map(seps).sum::<usize>());
            assert!(pmcs(&h) <= pmcs(&quotient) + modules.iter().map(pmcs).sum::<usize>());
        }
    }

    #[test]
    fn tree_json_shape() {
        let p = Family::Path(3).generate().unwrap();
        let t = modular_decomposition(&p).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            concat!(
                r#"{"kind":"join","vertices":[0,1,2],"quotient_edges":[[0,1]],"children":["#,
                r#"{"kind":"union","vertices":[0,2],"quotient_edges":[],"children":["#,
                r#"{"kind":"leaf","vertices":[0],"quotient_edges":[],"children":[]},"#,
                r#"{"kind":"leaf","vertices":[2],"quotient_edges":[],"children":[]}]},"#,
                r#"{"kind":"leaf","vertices":[1],"quotient_edges":[],"children":[]}]}"#
            )
        );
    }
}
