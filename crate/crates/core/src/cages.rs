//! Registry of cage sizes and concrete cage graphs.
//!
//! Sizes come from the published table of known `n(r;g)` values. Small cages
//! ship as checked-in edge-list files; girth-6 and girth-8 cages are generated
//! from projective-plane and generalized-quadrangle incidence structures, and
//! girth-4 cages are complete bipartite graphs.

use std::collections::BTreeSet;
use std::path::PathBuf;

use thiserror::Error;

use crate::gf::Field;
use crate::graph::{Girth, Graph};

/// Environment variable that overrides the directory the embedded cage and
/// good-graph edge lists are read from.
pub const DATA_DIR_ENV: &str = "TRAPSET_CAGE_DIR";

#[derive(Debug, Error)]
pub enum CageError {
    #[error("no concrete ({r};{g})-cage available (status: {status:?})")]
    NotAvailable { r: usize, g: usize, status: Availability },
    #[error("no concrete ({r},{s};{g})-good-graph available")]
    GoodGraphNotAvailable { r: usize, s: usize, g: usize },
    #[error("unsupported field order {0}")]
    UnsupportedFieldOrder(usize),
    #[error("bad precondition: {0}")]
    Precondition(String),
    #[error("cage data for ({r};{g}) failed validation:\n{report}")]
    DataValidation { r: usize, g: usize, report: ValidationReport },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// How a registry entry can be materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Availability {
    /// Adjacency data shipped with the crate.
    Embedded,
    /// Generated deterministically from an incidence structure.
    Generated,
    /// The size is known but no graph is available.
    ValueOnly,
    /// Neither size nor graph is known.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CageRecord {
    pub r: usize,
    pub g: usize,
    /// `n(r;g)` when known.
    pub n: Option<u64>,
    pub availability: Availability,
}

/// Size information for an (r,s;g)-good-graph or general (r,s;g)-graph entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoodGraphSize {
    Known(u64),
    /// No such graph exists for any size.
    Infinite,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoodGraphRecord {
    pub r: usize,
    pub s: usize,
    pub g: usize,
    pub n: GoodGraphSize,
    /// Number of degree-`s` nodes (1 for good-graphs).
    pub t: usize,
    pub availability: Availability,
}

/// Known values of n(r;g) for r in 3..=7 and g in 3..=12; `None` marks the
/// open entries.
const TABLE1: [[Option<u64>; 10]; 5] = [
    // g:      3        4        5         6         7          8          9          10         11          12
    [Some(4), Some(6), Some(10), Some(14), Some(24), Some(30), Some(58), Some(70), Some(112), Some(126)],
    [Some(5), Some(8), Some(19), Some(26), Some(67), Some(80), Some(275), Some(384), None, Some(728)],
    [Some(6), Some(10), Some(30), Some(42), Some(152), Some(170), None, None, None, Some(2730)],
    [Some(7), Some(12), Some(40), Some(62), Some(294), Some(312), None, None, None, Some(7812)],
    [Some(8), Some(14), Some(50), Some(90), None, None, None, None, None, None],
];

const EMBEDDED_CAGES: &[(usize, usize, &str)] = &[
    (3, 3, include_str!("../data/cage_3_3.txt")),
    (3, 4, include_str!("../data/cage_3_4.txt")),
    (3, 5, include_str!("../data/cage_3_5.txt")),
    (3, 7, include_str!("../data/cage_3_7.txt")),
    (4, 3, include_str!("../data/cage_4_3.txt")),
    (4, 5, include_str!("../data/cage_4_5.txt")),
    (5, 3, include_str!("../data/cage_5_3.txt")),
    (5, 5, include_str!("../data/cage_5_5.txt")),
    (6, 3, include_str!("../data/cage_6_3.txt")),
    (6, 5, include_str!("../data/cage_6_5.txt")),
    (7, 3, include_str!("../data/cage_7_3.txt")),
    (7, 5, include_str!("../data/cage_7_5.txt")),
];

const EMBEDDED_GOOD_GRAPHS: &[(usize, usize, usize, &str)] = &[
    (5, 6, 3, include_str!("../data/good_5_6_3.txt")),
    (3, 4, 5, include_str!("../data/good_3_4_5.txt")),
];

/// Moore bound on the order of an r-regular graph of girth g:
/// `1 + r * sum_{i=0}^{(g-3)/2} (r-1)^i` for odd g,
/// `2 * sum_{i=0}^{g/2-1} (r-1)^i` for even g.
pub fn moore_bound(r: u64, g: u64) -> u64 {
    assert!(r >= 2 && g >= 3);
    if g % 2 == 1 {
        1 + r * geom_sum(r - 1, (g - 3) / 2)
    } else {
        2 * geom_sum(r - 1, g / 2 - 1)
    }
}

/// `sum_{i=0}^{top} base^i`
fn geom_sum(base: u64, top: u64) -> u64 {
    (0..=top).map(|i| base.pow(i as u32)).sum()
}

/// Read-only registry over Table 1, the embedded data files, and the
/// incidence-graph generators.
pub struct CageRegistry {
    data_dir: Option<PathBuf>,
}

impl Default for CageRegistry {
    fn default() -> Self {
        Self::from_env()
    }
}

impl CageRegistry {
    /// Registry using the embedded data files.
    pub fn new() -> Self {
        CageRegistry { data_dir: None }
    }

    /// Registry honoring the `TRAPSET_CAGE_DIR` override if set.
    pub fn from_env() -> Self {
        CageRegistry { data_dir: std::env::var_os(DATA_DIR_ENV).map(PathBuf::from) }
    }

    /// Table 1 entry, `None` for dashes and out-of-table queries.
    pub fn cage_size(&self, r: usize, g: usize) -> Option<u64> {
        if !(3..=7).contains(&r) || !(3..=12).contains(&g) {
            return None;
        }
        TABLE1[r - 3][g - 3]
    }

    pub fn availability(&self, r: usize, g: usize) -> Availability {
        if EMBEDDED_CAGES.iter().any(|&(er, eg, _)| (er, eg) == (r, g)) {
            return Availability::Embedded;
        }
        let generated = match g {
            4 => (3..=7).contains(&r),
            6 | 8 => (3..=6).contains(&r), // r = q+1 for prime-power q in 2..=5
            _ => false,
        };
        if generated {
            return Availability::Generated;
        }
        if self.cage_size(r, g).is_some() {
            Availability::ValueOnly
        } else {
            Availability::Unknown
        }
    }

    pub fn record(&self, r: usize, g: usize) -> CageRecord {
        CageRecord { r, g, n: self.cage_size(r, g), availability: self.availability(r, g) }
    }

    /// Materialize the (r;g)-cage when it is embedded or generated.
    pub fn get_cage(&self, r: usize, g: usize) -> Result<Graph, CageError> {
        match self.availability(r, g) {
            Availability::Embedded => {
                let text = EMBEDDED_CAGES
                    .iter()
                    .find(|&&(er, eg, _)| (er, eg) == (r, g))
                    .map(|&(_, _, t)| t)
                    .expect("availability table out of sync");
                self.load_embedded(&format!("cage_{r}_{g}.txt"), text)
            }
            Availability::Generated => match g {
                4 => Ok(complete_bipartite(r, r)),
                6 => generate_pg_incidence(r - 1),
                8 => generate_gq_incidence(r - 1),
                _ => unreachable!("availability table out of sync"),
            },
            status => Err(CageError::NotAvailable { r, g, status }),
        }
    }

    fn load_embedded(&self, file: &str, embedded: &str) -> Result<Graph, CageError> {
        let text = if let Some(dir) = &self.data_dir {
            let path = dir.join(file);
            std::fs::read_to_string(&path)
                .map_err(|source| CageError::Io { path: path.display().to_string(), source })?
        } else {
            embedded.to_string()
        };
        Ok(Graph::parse_edge_list(&text)?)
    }

    /// Good-graph and general (r,s;g)-graph registry entries used by the
    /// bound machinery.
    pub fn good_graph_record(&self, r: usize, s: usize, g: usize) -> GoodGraphRecord {
        let rec = |n, t, availability| GoodGraphRecord { r, s, g, n, t, availability };
        match (r, s, g) {
            (5, 6, 3) => rec(GoodGraphSize::Known(7), 1, Availability::Embedded),
            (5, 6, 5) => rec(GoodGraphSize::Known(31), 1, Availability::ValueOnly),
            (3, 4, 5) => rec(GoodGraphSize::Known(13), 1, Availability::Embedded),
            // general (3,4;g)-graphs with more than one degree-4 node
            (3, 4, 6) => rec(GoodGraphSize::Known(18), 2, Availability::ValueOnly),
            (3, 4, 8) => rec(GoodGraphSize::Known(39), 3, Availability::ValueOnly),
            _ if r % 2 == 0 && s % 2 == 1 => rec(GoodGraphSize::Infinite, 1, Availability::Unknown),
            _ => rec(GoodGraphSize::Unknown, 1, Availability::Unknown),
        }
    }

    /// Materialize an embedded good-graph witness.
    pub fn get_good_graph(&self, r: usize, s: usize, g: usize) -> Result<Graph, CageError> {
        match self.good_graph_record(r, s, g).availability {
            Availability::Embedded => {
                let text = EMBEDDED_GOOD_GRAPHS
                    .iter()
                    .find(|&&(gr, gs, gg, _)| (gr, gs, gg) == (r, s, g))
                    .map(|&(_, _, _, t)| t)
                    .expect("good-graph availability out of sync");
                self.load_embedded(&format!("good_{r}_{s}_{g}.txt"), text)
            }
            _ => Err(CageError::GoodGraphNotAvailable { r, s, g }),
        }
    }

    /// Build a (2r-1, 2r; g)-good-graph from the (2r-1; g)-cage: delete one
    /// edge `xy` from the cage, build a g-cycle with pendant nodes, and attach
    /// copies of the cut cage by joining host nodes to `x` and `y`. The output
    /// is not minimal but has the required degree profile and girth.
    pub fn build_good_graph(&self, r_target: usize, g_half: usize) -> Result<Graph, CageError> {
        if r_target % 2 == 0 || r_target < 3 {
            return Err(CageError::Precondition(format!(
                "good-graph builder needs odd target degree, got {r_target}"
            )));
        }
        if g_half < 3 {
            return Err(CageError::Precondition("girth must be at least 3".into()));
        }
        let r = (r_target + 1) / 2;
        let cage = self.get_cage(r_target, g_half)?;
        // cut the lexicographically smallest edge, keep its endpoints
        let (x, y) = cage.edges().next().expect("cage has edges");
        let cut: Vec<(usize, usize)> = cage.edges().skip(1).collect();
        let n_copy = cage.node_count();

        let cycle_len = g_half;
        let pendant_count = cycle_len - 1;
        // node layout: cycle nodes, pendant nodes, then the cage copies
        let v = |i: usize| i - 1; // v_1..v_L -> 0..L-1
        let u = |i: usize| cycle_len + (i - 2); // u_2..u_L
        let skeleton = cycle_len + pendant_count;

        let mut hosts: Vec<(usize, usize)> = Vec::new(); // (host node, copy count)
        for i in 2..=cycle_len {
            hosts.push((v(i), r - 2));
        }
        for i in 2..=cycle_len {
            hosts.push((u(i), r - 1));
        }
        hosts.push((v(1), r - 1));

        let total_copies: usize = hosts.iter().map(|&(_, c)| c).sum();
        let mut graph = Graph::new(skeleton + total_copies * n_copy);
        for i in 1..=cycle_len {
            let j = if i == cycle_len { 1 } else { i + 1 };
            graph.add_edge(v(i), v(j))?;
        }
        for i in 2..=cycle_len {
            graph.add_edge(v(i), u(i))?;
        }
        let mut base = skeleton;
        for &(host, count) in &hosts {
            for _ in 0..count {
                for &(a, b) in &cut {
                    graph.add_edge(base + a, base + b)?;
                }
                graph.add_edge(host, base + x)?;
                graph.add_edge(host, base + y)?;
                base += n_copy;
            }
        }
        Ok(graph)
    }
}

/// Point-line incidence graph of the projective plane PG(2,q): nodes are the
/// q^2+q+1 points followed by the q^2+q+1 lines, with an edge where the dot
/// product vanishes. (q+1)-regular with girth 6.
pub fn generate_pg_incidence(q: usize) -> Result<Graph, CageError> {
    let f = Field::new(q).map_err(|_| CageError::UnsupportedFieldOrder(q))?;
    let points = projective_points(&f, 3);
    let m = points.len();
    debug_assert_eq!(m, q * q + q + 1);
    let mut g = Graph::new(2 * m);
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            let dot = (0..3).fold(0, |acc, k| f.add(acc, f.mul(p[k], l[k])));
            if dot == 0 {
                g.add_edge(i, m + j)?;
            }
        }
    }
    Ok(g)
}

/// Incidence graph of the symplectic generalized quadrangle W(q): projective
/// points of PG(3,q) versus totally isotropic lines under the form
/// `x0*y1 - x1*y0 + x2*y3 - x3*y2`. (q+1)-regular with girth 8.
pub fn generate_gq_incidence(q: usize) -> Result<Graph, CageError> {
    let f = Field::new(q).map_err(|_| CageError::UnsupportedFieldOrder(q))?;
    let points = projective_points(&f, 4);
    let m = points.len();
    debug_assert_eq!(m, q * q * q + q * q + q + 1);
    let symp = |a: &[usize], b: &[usize]| {
        let t1 = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
        let t2 = f.sub(f.mul(a[2], b[3]), f.mul(a[3], b[2]));
        f.add(t1, t2)
    };
    // a line is the set of points on the span of an isotropic pair
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for i in 0..m {
        for j in i + 1..m {
            if symp(&points[i], &points[j]) != 0 {
                continue;
            }
            let mut line: Vec<usize> = Vec::with_capacity(q + 1);
            line.push(i);
            line.push(j);
            for c in 1..q {
                // points[i] + c * points[j], then look it up in normalized form
                let vec: Vec<usize> =
                    (0..4).map(|k| f.add(points[i][k], f.mul(c, points[j][k]))).collect();
                let norm = normalize(&f, &vec);
                let idx = points.binary_search(&norm).expect("span point is projective");
                line.push(idx);
            }
            line.sort_unstable();
            lines.insert(line);
        }
    }
    debug_assert_eq!(lines.len(), m);
    let mut g = Graph::new(m + lines.len());
    for (j, line) in lines.iter().enumerate() {
        for &p in line {
            g.add_edge(p, m + j)?;
        }
    }
    Ok(g)
}

/// Normalized representatives of the 1-dimensional subspaces of GF(q)^dim,
/// sorted; first nonzero coordinate is 1.
fn projective_points(f: &Field, dim: usize) -> Vec<Vec<usize>> {
    let q = f.order();
    let mut pts = Vec::new();
    let mut vec = vec![0usize; dim];
    loop {
        if vec.iter().any(|&c| c != 0) {
            let norm = normalize(f, &vec);
            if norm == vec {
                pts.push(vec.clone());
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == dim {
                pts.sort();
                return pts;
            }
            vec[k] += 1;
            if vec[k] < q {
                break;
            }
            vec[k] = 0;
            k += 1;
        }
    }
}

fn normalize(f: &Field, vec: &[usize]) -> Vec<usize> {
    let lead = vec.iter().copied().find(|&c| c != 0).expect("nonzero vector");
    let inv = (0..f.order()).find(|&b| f.mul(lead, b) == 1).expect("field inverse");
    vec.iter().map(|&c| f.mul(c, inv)).collect()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for i in 0..a {
        for j in 0..b {
            g.add_edge(i, a + j).expect("K_{a,b} edge");
        }
    }
    g
}

/// Outcome of checking a graph against a claimed cage certificate.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<(String, bool)>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (name, ok) in &self.checks {
            writeln!(f, "{}: {}", name, if *ok { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Check node count, r-regularity, exact girth, and connectivity against the
/// claimed certificate.
pub fn validate_cage(g: &Graph, r: usize, girth_claim: usize, n_claim: usize) -> ValidationReport {
    let girth = g.girth();
    ValidationReport {
        checks: vec![
            (
                format!("node count = {n_claim} (got {})", g.node_count()),
                g.node_count() == n_claim,
            ),
            (format!("{r}-regular"), g.is_regular(r)),
            (format!("girth exactly {girth_claim} (got {girth})"), girth == Girth::Finite(girth_claim)),
            ("connected".to_string(), g.is_connected()),
        ],
    }
}
