//! Simple undirected graphs: degrees, girth, connectivity, subdivision,
//! and the edge-list text format shared by the cage data files.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("node {node} out of range (node count {node_count})")]
    NodeOutOfRange { node: usize, node_count: usize },
    #[error("edge-list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Girth of a graph. Acyclic graphs get a distinct sentinel, never a large integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// Simple undirected graph on nodes `0..node_count` with no loops or parallel
/// edges. Edges are kept normalized as `(min, max)` pairs in a sorted set, so
/// iteration order (and everything derived from it) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(node_count: usize) -> Self {
        Graph { node_count, edges: BTreeSet::new() }
    }

    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(node_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.node_count {
                return Err(GraphError::NodeOutOfRange { node: w, node_count: self.node_count });
            }
        }
        let e = (u.min(v), u.max(v));
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Node degrees as a sorted multiset.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs = vec![0usize; self.node_count];
        for &(u, v) in &self.edges {
            degs[u] += 1;
            degs[v] += 1;
        }
        degs.sort_unstable();
        degs
    }

    pub fn is_regular(&self, r: usize) -> bool {
        let mut degs = vec![0usize; self.node_count];
        for &(u, v) in &self.edges {
            degs[u] += 1;
            degs[v] += 1;
        }
        degs.iter().all(|&d| d == r)
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.node_count
    }

    /// Length of the shortest cycle, by BFS from every node. For each root,
    /// a non-tree edge between nodes at depths `d(u)`, `d(v)` with
    /// `d(v) >= d(u)` closes a cycle of length at most `d(u) + d(v) + 1`;
    /// minimizing over all roots gives the girth exactly, since a BFS rooted
    /// on a shortest cycle attains it.
    pub fn girth(&self) -> Girth {
        let adj = self.adjacency();
        let mut best = usize::MAX;
        for src in 0..self.node_count {
            let mut dist = vec![usize::MAX; self.node_count];
            let mut parent = vec![usize::MAX; self.node_count];
            dist[src] = 0;
            let mut queue = VecDeque::new();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                // no shorter cycle can close beyond this depth
                if best != usize::MAX && 2 * dist[u] >= best {
                    break;
                }
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && dist[v] >= dist[u] {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Replace every edge `{u, v}` by a path `u - w - v` with a fresh node `w`.
    /// Original nodes keep their indices; new nodes are appended in the sorted
    /// order of the edges they subdivide.
    pub fn subdivide(&self) -> SubdividedGraph {
        let n = self.node_count;
        let mut out = Graph::new(n + self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let w = n + i;
            out.add_edge(u, w).expect("subdivision edge");
            out.add_edge(w, v).expect("subdivision edge");
        }
        SubdividedGraph {
            graph: out,
            old_nodes: (0..n).collect(),
            new_nodes: (n..n + self.edges.len()).collect(),
        }
    }

    /// Delete a set of nodes, re-indexing the survivors compactly.
    /// Returns the new graph together with the old-to-new index map.
    pub fn delete_nodes(&self, doomed: &BTreeSet<usize>) -> (Graph, BTreeMap<usize, usize>) {
        let mut map = BTreeMap::new();
        let mut next = 0usize;
        for v in 0..self.node_count {
            if !doomed.contains(&v) {
                map.insert(v, next);
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (map.get(&u), map.get(&v)) {
                g.add_edge(a, b).expect("re-indexed edge");
            }
        }
        (g, map)
    }

    /// Parse the edge-list text format: `p graph <n> <m>` then `e <u> <v>`
    /// lines, `c ...` for comments.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut graph: Option<Graph> = None;
        let mut edges_seen = 0usize;
        let mut declared = 0usize;
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let parse_err = |msg: &str| GraphError::Parse { line: lineno, msg: msg.to_string() };
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                None | Some("c") => continue,
                Some("p") => {
                    if graph.is_some() {
                        return Err(parse_err("duplicate problem line"));
                    }
                    if tokens.next() != Some("graph") {
                        return Err(parse_err("expected `p graph <n> <m>`"));
                    }
                    let n = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err("bad node count"))?;
                    declared = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err("bad edge count"))?;
                    graph = Some(Graph::new(n));
                }
                Some("e") => {
                    let g = graph.as_mut().ok_or_else(|| parse_err("edge before problem line"))?;
                    let u: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err("bad endpoint"))?;
                    let v: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err("bad endpoint"))?;
                    g.add_edge(u, v).map_err(|e| parse_err(&e.to_string()))?;
                    edges_seen += 1;
                }
                Some(other) => {
                    return Err(parse_err(&format!("unknown line kind `{other}`")));
                }
            }
        }
        let g = graph.ok_or(GraphError::Parse { line: 0, msg: "missing problem line".into() })?;
        if edges_seen != declared {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("declared {declared} edges, found {edges_seen}"),
            });
        }
        Ok(g)
    }

    pub fn to_edge_list(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for line in c.lines() {
                out.push_str(&format!("c {line}\n"));
            }
        }
        out.push_str(&format!("p graph {} {}\n", self.node_count, self.edges.len()));
        for &(u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in 0..self.node_count {
            out.push_str(&format!("  n{v};\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  n{u} -- n{v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A graph obtained by subdividing every edge of a base graph, with the
/// old/new node partition kept explicit.
#[derive(Debug, Clone)]
pub struct SubdividedGraph {
    pub graph: Graph,
    pub old_nodes: BTreeSet<usize>,
    pub new_nodes: BTreeSet<usize>,
}
