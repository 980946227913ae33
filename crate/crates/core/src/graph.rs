//! Undirected simple graphs over bitset adjacency.

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An immutable undirected simple graph.
///
/// Vertices are indices below [`Graph::bound`]. A graph built by
/// [`Graph::from_edges`] has vertex set `0..n`; an induced subgraph keeps the
/// labels of its parent, so its vertex set may have gaps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: VertexSet,
    adjacency: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `0..n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph {
            vertices: VertexSet::range(n),
            adjacency: vec![VertexSet::EMPTY; n],
            m: 0,
        })
    }

    /// Builds a graph on `0..n`. Duplicate edges are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adjacency[u].insert(v);
            g.adjacency[v].insert(u);
        }
        g.m = g.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2;
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    /// One past the largest admissible vertex label.
    #[inline]
    pub fn bound(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|a| a.contains(v))
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.iter().flat_map(move |u| {
            let higher = self.adjacency[u] - VertexSet::range(u + 1);
            higher.iter().map(move |v| (u, v))
        })
    }

    /// `Err` unless `s` is a subset of the vertex set.
    pub fn check_subset(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices).first() {
            Some(vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n() }),
            None => Ok(()),
        }
    }

    /// `G[keep]`, retaining the original vertex labels.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let vertices = self.vertices & keep;
        let adjacency: Vec<VertexSet> = (0..self.bound())
            .map(|v| if vertices.contains(v) { self.adjacency[v] & vertices } else { VertexSet::EMPTY })
            .collect();
        let m = adjacency.iter().map(|a| a.len()).sum::<usize>() / 2;
        Graph { vertices, adjacency, m }
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let vertices = self.vertices;
        let adjacency: Vec<VertexSet> = (0..self.bound())
            .map(|v| {
                if vertices.contains(v) {
                    (vertices - self.adjacency[v]).without(v)
                } else {
                    VertexSet::EMPTY
                }
            })
            .collect();
        let m = adjacency.iter().map(|a| a.len()).sum::<usize>() / 2;
        Graph { vertices, adjacency, m }
    }

    /// `N(s)`: vertices outside `s` adjacent to some member of `s`.
    #[inline]
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = VertexSet::EMPTY;
        for v in s {
            acc |= self.adjacency[v];
        }
        acc - s
    }

    /// Vertices reachable from `start` inside `allowed` (which must contain `start`).
    #[inline]
    pub fn reach(&self, start: VertexSet, allowed: VertexSet) -> VertexSet {
        let mut comp = start;
        let mut frontier = start;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adjacency[v];
            }
            frontier = (next & allowed) - comp;
            comp |= frontier;
        }
        comp
    }

    /// Components of `G - removed`, ordered by their least vertex.
    pub fn components_without(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut rest = self.vertices - removed;
        let allowed = rest;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(VertexSet::singleton(v), allowed);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices.first() {
            None => false,
            Some(v) => self.reach(VertexSet::singleton(v), self.vertices) == self.vertices,
        }
    }

    /// Number of pairs inside `s` that are not edges.
    pub fn missing_edges(&self, s: VertexSet) -> usize {
        let k = s.len();
        let inside: usize = s.iter().map(|v| (self.adjacency[v] & s).len()).sum::<usize>() / 2;
        k * k.saturating_sub(1) / 2 - inside
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adjacency[v]).without(v).is_empty())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `N(s)`, validating that `s` lies inside the graph.
pub fn neighborhood(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    g.check_subset(s)?;
    Ok(g.open_neighborhood(s))
}

/// Connected components of `G - removed`, ordered by their least vertex.
pub fn components(g: &Graph, removed: VertexSet) -> Result<Vec<VertexSet>> {
    g.check_subset(removed)?;
    Ok(g.components_without(removed))
}

/// Components `C` of `G - s` with `N(C) = s`.
pub fn full_components(g: &Graph, s: VertexSet) -> Result<Vec<VertexSet>> {
    g.check_subset(s)?;
    Ok(g.components_without(s)
        .into_iter()
        .filter(|&c| g.open_neighborhood(c) == s)
        .collect())
}
