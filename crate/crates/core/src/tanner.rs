//! Bipartite Tanner graphs, the subdivision-to-Tanner conversion, and the
//! trapping-set classifier.
//!
//! A subgraph induced by a variable set S is summarized by its class
//! `(a, b)`: `a` variables and `b` odd-degree (unsatisfied) checks. The
//! taxonomy splits on check degrees: all checks of degree at most two with
//! every variable on at least two satisfied checks is leafless elementary
//! (LETS), elementary with a leaf otherwise (ETSL), and anything with a
//! check of degree three or more is non-elementary (NETS).

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Girth, Graph, SubdividedGraph};

#[derive(Debug, Error)]
pub enum TannerError {
    #[error("variable {0} is isolated")]
    IsolatedVariable(usize),
    #[error("node index out of range: {0}")]
    NodeOutOfRange(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("no such edge ({0}, {1})")]
    MissingEdge(usize, usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("normal graph undefined: check {0} has degree {1}")]
    NotElementary(usize, usize),
    #[error("girth 4: checks {c1} and {c2} both join variables {v1} and {v2}")]
    GirthFour { c1: usize, c2: usize, v1: usize, v2: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Lets,
    Etsl,
    Nets,
}

impl std::fmt::Display for Category {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Category::Lets => "LETS",
            Category::Etsl => "ETSL",
            Category::Nets => "NETS",
        })
    }
}

/// Full classification of a trapping-set subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Number of variables.
    pub a: usize,
    /// Number of odd-degree checks.
    pub b: usize,
    /// Number of even-degree checks (degree at least 2).
    pub n_even: usize,
    pub category: Category,
    pub girth: Girth,
    /// Sorted variable degrees.
    pub dv_profile: Vec<usize>,
    /// True when the graph has no cycle; distinguishes the tree-shaped
    /// leafy class from the cyclic one.
    pub is_tree: bool,
}

/// Bipartite graph with variables and checks indexed separately from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    variable_count: usize,
    check_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl TannerGraph {
    pub fn new(variable_count: usize, check_count: usize) -> Self {
        TannerGraph { variable_count, check_count, edges: BTreeSet::new() }
    }

    pub fn from_edges<I>(nv: usize, nc: usize, edges: I) -> Result<Self, TannerError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut t = TannerGraph::new(nv, nc);
        for (v, c) in edges {
            t.add_edge(v, c)?;
        }
        Ok(t)
    }

    pub fn add_edge(&mut self, v: usize, c: usize) -> Result<(), TannerError> {
        if v >= self.variable_count {
            return Err(TannerError::NodeOutOfRange(v));
        }
        if c >= self.check_count {
            return Err(TannerError::NodeOutOfRange(c));
        }
        if !self.edges.insert((v, c)) {
            return Err(TannerError::DuplicateEdge(v, c));
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, v: usize, c: usize) -> Result<(), TannerError> {
        if self.edges.remove(&(v, c)) {
            Ok(())
        } else {
            Err(TannerError::MissingEdge(v, c))
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn check_count(&self) -> usize {
        self.check_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, v: usize, c: usize) -> bool {
        self.edges.contains(&(v, c))
    }

    pub fn variable_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(ev, _)| ev == v).count()
    }

    pub fn check_degree(&self, c: usize) -> usize {
        self.edges.iter().filter(|&&(_, ec)| ec == c).count()
    }

    /// Checks adjacent to `v`, ascending.
    pub fn variable_neighbors(&self, v: usize) -> Vec<usize> {
        self.edges.iter().filter(|&&(ev, _)| ev == v).map(|&(_, c)| c).collect()
    }

    /// Variables adjacent to `c`, ascending.
    pub fn check_neighbors(&self, c: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.edges.iter().filter(|&&(_, ec)| ec == c).map(|&(v, _)| v).collect();
        out.sort_unstable();
        out
    }

    fn degree_vectors(&self) -> (Vec<usize>, Vec<usize>) {
        let mut dv = vec![0usize; self.variable_count];
        let mut dc = vec![0usize; self.check_count];
        for &(v, c) in &self.edges {
            dv[v] += 1;
            dc[c] += 1;
        }
        (dv, dc)
    }

    /// Sorted multiset of check degrees.
    pub fn check_degree_profile(&self) -> Vec<usize> {
        let (_, mut dc) = self.degree_vectors();
        dc.sort_unstable();
        dc
    }

    pub fn variable_degree_profile(&self) -> Vec<usize> {
        let (mut dv, _) = self.degree_vectors();
        dv.sort_unstable();
        dv
    }

    /// True when every variable has degree exactly `dv`.
    pub fn is_variable_regular(&self, dv: usize) -> bool {
        let (degs, _) = self.degree_vectors();
        degs.iter().all(|&d| d == dv)
    }

    /// The underlying simple graph: variables `0..nv`, check `c` as `nv + c`.
    pub fn to_bipartite_graph(&self) -> Graph {
        let mut g = Graph::new(self.variable_count + self.check_count);
        for &(v, c) in &self.edges {
            g.add_edge(v, self.variable_count + c).expect("bipartite edge");
        }
        g
    }

    pub fn girth(&self) -> Girth {
        self.to_bipartite_graph().girth()
    }

    /// Classify per the taxonomy; rejects graphs with an isolated variable.
    pub fn classify(&self) -> Result<Classification, TannerError> {
        let (dv, dc) = self.degree_vectors();
        if let Some(v) = dv.iter().position(|&d| d == 0) {
            return Err(TannerError::IsolatedVariable(v));
        }
        let b = dc.iter().filter(|&&d| d % 2 == 1).count();
        let n_even = dc.iter().filter(|&&d| d >= 2 && d % 2 == 0).count();
        let category = if dc.iter().any(|&d| d >= 3) {
            Category::Nets
        } else {
            // leafless: every variable on at least two degree-2 checks
            let leafless = (0..self.variable_count).all(|v| {
                self.variable_neighbors(v).iter().filter(|&&c| dc[c] == 2).count() >= 2
            });
            if leafless {
                Category::Lets
            } else {
                Category::Etsl
            }
        };
        let girth = self.girth();
        let mut profile = dv;
        profile.sort_unstable();
        Ok(Classification {
            a: self.variable_count,
            b,
            n_even,
            category,
            girth,
            dv_profile: profile,
            is_tree: girth == Girth::Infinite,
        })
    }

    /// Contract every degree-2 check to a single edge between its two
    /// variables, dropping degree-1 checks. Only defined for elementary
    /// graphs; two checks on the same variable pair signal girth 4.
    pub fn normal_graph(&self) -> Result<Graph, TannerError> {
        let (_, dc) = self.degree_vectors();
        if let Some(c) = dc.iter().position(|&d| d >= 3) {
            return Err(TannerError::NotElementary(c, dc[c]));
        }
        let mut g = Graph::new(self.variable_count);
        let mut owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for c in 0..self.check_count {
            let nbrs = self.check_neighbors(c);
            if let [v1, v2] = nbrs[..] {
                if let Some(&c1) = owner.get(&(v1, v2)) {
                    return Err(TannerError::GirthFour { c1, c2: c, v1, v2 });
                }
                owner.insert((v1, v2), c);
                g.add_edge(v1, v2).expect("normal-graph edge");
            }
        }
        Ok(g)
    }

    /// Delete a variable set, re-indexing survivors; checks keep their count
    /// (some may drop to lower degree). Returns the old-to-new variable map.
    pub fn delete_variables(&self, doomed: &BTreeSet<usize>) -> (TannerGraph, BTreeMap<usize, usize>) {
        let mut map = BTreeMap::new();
        let mut next = 0;
        for v in 0..self.variable_count {
            if !doomed.contains(&v) {
                map.insert(v, next);
                next += 1;
            }
        }
        let mut t = TannerGraph::new(next, self.check_count);
        for &(v, c) in &self.edges {
            if let Some(&nv) = map.get(&v) {
                t.add_edge(nv, c).expect("re-indexed edge");
            }
        }
        (t, map)
    }

    /// Delete a check set, re-indexing survivors. Returns the old-to-new
    /// check map.
    pub fn delete_checks(&self, doomed: &BTreeSet<usize>) -> (TannerGraph, BTreeMap<usize, usize>) {
        let mut map = BTreeMap::new();
        let mut next = 0;
        for c in 0..self.check_count {
            if !doomed.contains(&c) {
                map.insert(c, next);
                next += 1;
            }
        }
        let mut t = TannerGraph::new(self.variable_count, next);
        for &(v, c) in &self.edges {
            if let Some(&nc) = map.get(&c) {
                t.add_edge(v, nc).expect("re-indexed edge");
            }
        }
        (t, map)
    }

    /// Drop degree-0 checks, re-indexing. Returns the old-to-new check map.
    pub fn drop_isolated_checks(&self) -> (TannerGraph, BTreeMap<usize, usize>) {
        let (_, dc) = self.degree_vectors();
        let doomed: BTreeSet<usize> =
            (0..self.check_count).filter(|&c| dc[c] == 0).collect();
        self.delete_checks(&doomed)
    }

    /// Grow the graph by `extra_vars` variables and `extra_checks` checks.
    pub fn extend(&self, extra_vars: usize, extra_checks: usize) -> TannerGraph {
        TannerGraph {
            variable_count: self.variable_count + extra_vars,
            check_count: self.check_count + extra_checks,
            edges: self.edges.clone(),
        }
    }

    /// Parse the `p tanner <nv> <nc> <ne>` / `e <v> <c>` format.
    pub fn parse(text: &str) -> Result<TannerGraph, TannerError> {
        let mut t: Option<TannerGraph> = None;
        let mut declared = 0usize;
        let mut seen = 0usize;
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let parse_err = |msg: &str| TannerError::Parse { line: lineno, msg: msg.to_string() };
            let mut tokens = line.split_whitespace();
            match tokens.next() {
                None | Some("c") => continue,
                Some("p") => {
                    if t.is_some() {
                        return Err(parse_err("duplicate problem line"));
                    }
                    if tokens.next() != Some("tanner") {
                        return Err(parse_err("expected `p tanner <nv> <nc> <ne>`"));
                    }
                    let mut num = || {
                        tokens
                            .next()
                            .and_then(|s| s.parse::<usize>().ok())
                            .ok_or_else(|| TannerError::Parse {
                                line: lineno,
                                msg: "bad count".into(),
                            })
                    };
                    let nv = num()?;
                    let nc = num()?;
                    declared = num()?;
                    t = Some(TannerGraph::new(nv, nc));
                }
                Some("e") => {
                    let t = t.as_mut().ok_or_else(|| parse_err("edge before problem line"))?;
                    let v: usize = tokens
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| parse_err("bad endpoint"))?;
                    let c: usize = tokens
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| parse_err("bad endpoint"))?;
                    t.add_edge(v, c).map_err(|e| parse_err(&e.to_string()))?;
                    seen += 1;
                }
                Some(other) => return Err(parse_err(&format!("unknown line kind `{other}`"))),
            }
        }
        let t = t.ok_or(TannerError::Parse { line: 0, msg: "missing problem line".into() })?;
        if seen != declared {
            return Err(TannerError::Parse {
                line: 0,
                msg: format!("declared {declared} edges, found {seen}"),
            });
        }
        Ok(t)
    }

    pub fn to_text(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for line in c.lines() {
                out.push_str(&format!("c {line}\n"));
            }
        }
        out.push_str(&format!(
            "p tanner {} {} {}\n",
            self.variable_count,
            self.check_count,
            self.edges.len()
        ));
        for &(v, c) in &self.edges {
            out.push_str(&format!("e {v} {c}\n"));
        }
        out
    }

    /// DOT export with the usual drawing convention: variables as circles,
    /// satisfied (even-degree) checks as filled squares, unsatisfied checks
    /// as empty squares.
    pub fn to_dot(&self, name: &str) -> String {
        let (_, dc) = self.degree_vectors();
        let mut out = format!("graph \"{name}\" {{\n");
        for v in 0..self.variable_count {
            out.push_str(&format!("  v{v} [shape=circle];\n"));
        }
        for c in 0..self.check_count {
            let style = if dc[c] % 2 == 0 {
                "shape=square, style=filled, fillcolor=black"
            } else {
                "shape=square"
            };
            out.push_str(&format!("  c{c} [{style}];\n"));
        }
        for &(v, c) in &self.edges {
            out.push_str(&format!("  v{v} -- c{c};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// View a subdivided graph as a Tanner graph: old nodes become variables,
/// new (midpoint) nodes become checks.
pub fn to_tanner(sg: &SubdividedGraph) -> TannerGraph {
    let n = sg.old_nodes.len();
    let mut t = TannerGraph::new(n, sg.new_nodes.len());
    for (u, v) in sg.graph.edges() {
        // subdivision edges always join an old node to a new node
        let (var, check) = if sg.old_nodes.contains(&u) { (u, v) } else { (v, u) };
        t.add_edge(var, check - n).expect("subdivision edge");
    }
    t
}
