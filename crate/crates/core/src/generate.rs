//! Graph families used as fixtures, benchmarks and random test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named vertices of the [`cube`] graph.
pub mod cube_labels {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
    pub const E: usize = 4;
    pub const F: usize = 5;
    pub const G: usize = 6;
    pub const H: usize = 7;

    pub const NAMES: [char; 8] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'];
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// The 3-dimensional hypercube, see [`cube`].
    Cube,
    /// `p` disjoint paths on `q` vertices plus two hubs, see [`watermelon_hubs`].
    Watermelon { p: usize, q: usize },
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// Erdős–Rényi graph; identical parameters give identical graphs.
    Gnp { n: usize, prob: f64, seed: u64 },
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Cube => Ok(cube()),
            Family::Watermelon { p, q } => watermelon(p, q),
            Family::Path(n) => {
                positive("n", n)?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                positive("n", n)?;
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::Empty(n) => {
                positive("n", n)?;
                Graph::empty(n)
            }
            Family::Gnp { n, prob, seed } => gnp(n, prob, seed),
        }
    }

    /// Short descriptor, e.g. `watermelon(8,3)`.
    pub fn describe(&self) -> String {
        match *self {
            Family::Cube => "cube".into(),
            Family::Watermelon { p, q } => format!("watermelon({p},{q})"),
            Family::Path(n) => format!("path({n})"),
            Family::Cycle(n) => format!("cycle({n})"),
            Family::Complete(n) => format!("complete({n})"),
            Family::Empty(n) => format!("empty({n})"),
            Family::Gnp { n, prob, seed } => format!("gnp({n},{prob},{seed})"),
        }
    }
}

fn positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidParameter(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

/// Two 4-cycles `a-b-c-d` and `e-f-g-h` joined by the matching
/// `a-e, b-f, c-g, d-h`, labelled as in [`cube_labels`].
pub fn cube() -> Graph {
    use cube_labels::*;
    Graph::from_edges(
        8,
        [
            (A, B), (B, C), (C, D), (D, A),
            (E, F), (F, G), (G, H), (H, E),
            (A, E), (B, F), (C, G), (D, H),
        ],
    )
    .expect("cube edges are valid")
}

/// Hub vertices `(u, v)` of `watermelon(p, q)`.
///
/// `u` is vertex 0 and `v` is vertex `p*q + 1`. Path `j` occupies
/// `1 + j*q .. 1 + (j+1)*q`, left end first.
pub fn watermelon_hubs(p: usize, q: usize) -> (usize, usize) {
    (0, p * q + 1)
}

fn watermelon(p: usize, q: usize) -> Result<Graph> {
    positive("p", p)?;
    positive("q", q)?;
    let n = p * q + 2;
    let (u, v) = watermelon_hubs(p, q);
    let mut edges = Vec::with_capacity(p * (q + 1));
    for j in 0..p {
        let first = 1 + j * q;
        let last = first + q - 1;
        edges.extend((first..last).map(|i| (i, i + 1)));
        edges.push((u, first));
        edges.push((last, v));
    }
    Graph::from_edges(n, edges)
}

fn gnp(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    positive("n", n)?;
    if !(0.0..=1.0).contains(&prob) {
        return Err(Error::InvalidParameter(format!("probability {prob} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}
