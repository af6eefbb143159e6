//! Simple undirected graphs with canonical 0-based vertex indexing, the
//! named families used throughout the test sweep, and the standard matrices
//! (adjacency, Laplacian, signless Laplacian, distance).

use num_bigint::BigInt;
use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Immutable simple graph. Edges are stored as ordered pairs u < v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Per-vertex degrees plus the common degree when the graph is regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub regularity: Option<usize>,
}

impl Graph {
    /// Builds a graph, rejecting out-of-range endpoints, self-loops and
    /// duplicate edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("graph order must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let pair = (u.min(v), u.max(v));
            if !set.insert(pair) {
                return Err(Error::DuplicateEdge(pair.0, pair.1));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let first = degrees[0];
        let regularity = degrees.iter().all(|&d| d == first).then_some(first);
        DegreeProfile { degrees, regularity }
    }

    /// Common degree, or an error naming the context when not regular.
    pub fn regularity(&self, context: &str) -> Result<usize> {
        self.degree_profile()
            .regularity
            .ok_or_else(|| Error::NotRegular(context.to_string()))
    }

    /// BFS distances from `start`; None marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency_lists();
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connected components as a partition into sorted blocks.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let dist = self.bfs_distances(start);
            let block: Vec<usize> = (0..self.n).filter(|&v| dist[v].is_some()).collect();
            for &v in &block {
                seen[v] = true;
            }
            blocks.push(block);
        }
        blocks
    }

    pub fn adjacency_matrix(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            m[(u, v)] = BigInt::from(1);
            m[(v, u)] = BigInt::from(1);
        }
        m
    }

    fn degree_matrix(&self) -> ExactMatrix {
        let degrees = self.degree_profile().degrees;
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for (i, d) in degrees.into_iter().enumerate() {
            m[(i, i)] = BigInt::from(d);
        }
        m
    }

    /// L = D - A.
    pub fn laplacian_matrix(&self) -> ExactMatrix {
        &self.degree_matrix() - &self.adjacency_matrix()
    }

    /// Q = D + A.
    pub fn signless_laplacian_matrix(&self) -> ExactMatrix {
        &self.degree_matrix() + &self.adjacency_matrix()
    }

    /// All-pairs BFS distance matrix; errors on disconnected input.
    pub fn distance_matrix(&self) -> Result<ExactMatrix> {
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for u in 0..self.n {
            let dist = self.bfs_distances(u);
            for v in 0..self.n {
                match dist[v] {
                    Some(d) => m[(u, v)] = BigInt::from(d),
                    None => return Err(Error::Disconnected),
                }
            }
        }
        Ok(m)
    }

    /// Largest BFS distance; None when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.bfs_distances(u) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Image of the graph under a permutation of its vertices.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::Precondition("not a permutation".into()));
            }
            seen[p] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Parses the plain edge-list format: first token is the order, then one
    /// "u v" pair per line; `#` starts a comment.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut tokens = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            tokens.extend(line.split_whitespace());
        }
        let mut iter = tokens.into_iter();
        let n: usize = iter
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?
            .parse()
            .map_err(|_| Error::Parse("order is not an integer".into()))?;
        let rest: Vec<&str> = iter.collect();
        if rest.len() % 2 != 0 {
            return Err(Error::Parse("dangling edge endpoint".into()));
        }
        let mut edges = Vec::with_capacity(rest.len() / 2);
        for pair in rest.chunks(2) {
            let u: usize = pair[0]
                .parse()
                .map_err(|_| Error::Parse(format!("malformed token `{}`", pair[0])))?;
            let v: usize = pair[1]
                .parse()
                .map_err(|_| Error::Parse(format!("malformed token `{}`", pair[1])))?;
            edges.push((u, v));
        }
        Graph::new(n, edges)
    }

    /// Serializes to the edge-list format accepted by `from_edge_list`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for (u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_param("complete", n >= 1, "order must be >= 1")?;
        Graph::new(n, pairs(n))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        check_param("cycle", n >= 3, "cycle needs at least 3 vertices")?;
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Graph> {
        check_param("path", n >= 1, "order must be >= 1")?;
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Star on n vertices: center 0 joined to the other n - 1.
    pub fn star(n: usize) -> Result<Graph> {
        check_param("star", n >= 1, "order must be >= 1")?;
        Graph::new(n, (1..n).map(|i| (0, i)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        check_param("complete_bipartite", a >= 1 && b >= 1, "parts must be >= 1")?;
        Graph::new(
            a + b,
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
        )
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((i, i + 5)); // spokes
            edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        Graph::new(10, edges).expect("petersen construction")
    }

    /// d-dimensional hypercube on 2^d vertices.
    pub fn hypercube(d: usize) -> Result<Graph> {
        check_param("hypercube", d <= 16, "dimension too large")?;
        let n = 1usize << d;
        let mut edges = Vec::new();
        for u in 0..n {
            for bit in 0..d {
                let v = u ^ (1 << bit);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges)
    }

    /// Named-family dispatcher covering the generators above.
    pub fn family(name: &str, params: &[usize]) -> Result<Graph> {
        let one = |family: &str| -> Result<usize> {
            params
                .first()
                .copied()
                .filter(|_| params.len() == 1)
                .ok_or_else(|| Error::InvalidFamilyParameter {
                    family: family.to_string(),
                    reason: "expected exactly one parameter".to_string(),
                })
        };
        match name {
            "complete" => Graph::complete(one(name)?),
            "cycle" => Graph::cycle(one(name)?),
            "path" => Graph::path(one(name)?),
            "star" => Graph::star(one(name)?),
            "complete_bipartite" => {
                if params.len() != 2 {
                    return Err(Error::InvalidFamilyParameter {
                        family: name.to_string(),
                        reason: "expected two parameters".to_string(),
                    });
                }
                Graph::complete_bipartite(params[0], params[1])
            }
            "petersen" => {
                if !params.is_empty() {
                    return Err(Error::InvalidFamilyParameter {
                        family: name.to_string(),
                        reason: "takes no parameters".to_string(),
                    });
                }
                Ok(Graph::petersen())
            }
            "hypercube" => Graph::hypercube(one(name)?),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

fn check_param(family: &str, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidFamilyParameter {
            family: family.to_string(),
            reason: reason.to_string(),
        })
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}
