//! The surgery network: vertices are Seifert surgeries, edges are
//! single twists along a seiferter.
//!
//! [`build_subcomplex_t`] assembles the subcomplex spanned by torus-knot
//! surgeries near their fiber slopes, connected by twists along the
//! three basic seiferters.  [`build_figure2`] assembles the small
//! neighborhood of the trefoil's meridian line that reaches the
//! figure-eight knot and the `P(-2,3,7)` pretzel knot.  Graphs export to
//! DOT and a versioned JSON format; both outputs are byte-deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::Catalog;
use crate::classify::{classify_surgery, unknot_surgery};
use crate::model::{canonical_torus_knot, KnotDescriptor, SeifertSurgery, TorusKnotId};
use crate::twist::{basic_twist, twist_along_seiferter, BasicSeiferter, TwistError};

/// Supported graph file schema version.
pub const GRAPH_SCHEMA_VERSION: u32 = 1;

/// Errors from graph construction and serialization.
#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("subcomplex bounds need p_max >= 2 and radius >= 0, got p_max={p_max} radius={radius}")]
    BadBounds { p_max: i64, radius: i64 },
    #[error("vertex {key} is not in the graph")]
    VertexAbsent { key: String },
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error("failed to parse graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported graph schema version {found}, expected {GRAPH_SCHEMA_VERSION}")]
    UnsupportedSchemaVersion { found: u32 },
}

/// An undirected edge: `turns_from_u` twists along `seiferter` carry `u`
/// to `v`.  Edges are stored with `u.key() <= v.key()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NetworkEdge {
    pub u: SeifertSurgery,
    pub v: SeifertSurgery,
    pub seiferter: String,
    pub turns_from_u: i64,
}

/// An undirected multigraph of surgeries and seiferter twists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NetworkGraph {
    vertices: BTreeSet<SeifertSurgery>,
    edges: BTreeSet<NetworkEdge>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    schema_version: u32,
    vertices: Vec<SeifertSurgery>,
    edges: Vec<NetworkEdge>,
}

/// The first basic move carrying `from` to `to`, searching `s_p`, `s_q`,
/// then the meridian, positive turns first.
fn derive_basic_move(from: &SeifertSurgery, to: &SeifertSurgery) -> Option<(&'static str, i64)> {
    from.knot.as_torus()?;
    for which in [
        BasicSeiferter::Sp,
        BasicSeiferter::Sq,
        BasicSeiferter::Meridian,
    ] {
        for turns in [1, -1] {
            if basic_twist(from, which, turns).as_ref().ok() == Some(to) {
                return Some((which.id(), turns));
            }
        }
    }
    None
}

impl NetworkGraph {
    pub fn new() -> Self {
        NetworkGraph::default()
    }

    pub fn vertices(&self) -> &BTreeSet<SeifertSurgery> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<NetworkEdge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, vertex: &SeifertSurgery) -> bool {
        self.vertices.contains(vertex)
    }

    pub fn add_vertex(&mut self, vertex: SeifertSurgery) {
        self.vertices.insert(vertex);
    }

    /// Inserts an edge and both endpoints, normalizing the endpoint
    /// order to `u.key() <= v.key()`.
    pub fn add_edge(&mut self, u: SeifertSurgery, v: SeifertSurgery, seiferter: impl Into<String>, turns_from_u: i64) {
        let (u, v, turns_from_u) = if v.key() < u.key() {
            (v, u, -turns_from_u)
        } else {
            (u, v, turns_from_u)
        };
        self.vertices.insert(u.clone());
        self.vertices.insert(v.clone());
        self.edges.insert(NetworkEdge {
            u,
            v,
            seiferter: seiferter.into(),
            turns_from_u,
        });
    }

    /// Inserts the edge for a basic move between two torus-knot
    /// vertices, labeling it from the lesser endpoint when a basic move
    /// in that direction exists.  The label falls back to the opposite
    /// endpoint's move for edges whose lesser endpoint is the unknot:
    /// the twisted fiber seiferter is still a seiferter there, but not a
    /// basic one.
    fn add_basic_edge(&mut self, a: &SeifertSurgery, b: &SeifertSurgery) {
        let (u, v) = if b.key() < a.key() { (b, a) } else { (a, b) };
        let (seiferter, turns_from_u) = derive_basic_move(u, v)
            .or_else(|| derive_basic_move(v, u).map(|(id, turns)| (id, -turns)))
            .expect("basic edges always admit a basic move from one endpoint");
        self.vertices.insert(u.clone());
        self.vertices.insert(v.clone());
        self.edges.insert(NetworkEdge {
            u: u.clone(),
            v: v.clone(),
            seiferter: seiferter.to_owned(),
            turns_from_u,
        });
    }

    /// Adds the line of vertices reached from `base` by `turns` twists
    /// along one cataloged seiferter, with an edge between each pair of
    /// consecutive turn counts.
    pub fn add_seiferter_line(
        &mut self,
        catalog: &Catalog,
        base: &SeifertSurgery,
        seiferter_id: &str,
        turns: std::ops::RangeInclusive<i64>,
    ) -> Result<(), NetworkError> {
        let mut previous: Option<SeifertSurgery> = None;
        for t in turns {
            let vertex = if t == 0 {
                base.clone()
            } else {
                twist_along_seiferter(catalog, base, seiferter_id, t)?
            };
            self.vertices.insert(vertex.clone());
            if let Some(prev) = previous {
                self.add_edge(prev, vertex.clone(), seiferter_id, 1);
            }
            previous = Some(vertex);
        }
        Ok(())
    }

    /// Breadth-first path from `start` to the nearest vertex hosted on a
    /// torus knot or the unknot.  Returns the vertex sequence including
    /// both ends, `Ok(Some(vec![start]))` when `start` already qualifies,
    /// and `Ok(None)` when no such vertex is reachable.
    pub fn find_path_to_torus(
        &self,
        start: &SeifertSurgery,
    ) -> Result<Option<Vec<SeifertSurgery>>, NetworkError> {
        if !self.vertices.contains(start) {
            return Err(NetworkError::VertexAbsent { key: start.key() });
        }
        if matches!(start.knot, KnotDescriptor::Torus(_)) {
            return Ok(Some(vec![start.clone()]));
        }
        let mut adjacency: BTreeMap<&SeifertSurgery, BTreeSet<&SeifertSurgery>> = BTreeMap::new();
        for edge in &self.edges {
            adjacency.entry(&edge.u).or_default().insert(&edge.v);
            adjacency.entry(&edge.v).or_default().insert(&edge.u);
        }
        let mut parents: BTreeMap<&SeifertSurgery, &SeifertSurgery> = BTreeMap::new();
        let mut visited: BTreeSet<&SeifertSurgery> = BTreeSet::new();
        visited.insert(start);
        let mut queue = VecDeque::new();
        queue.push_back(start);
        while let Some(current) = queue.pop_front() {
            let Some(neighbors) = adjacency.get(current) else {
                continue;
            };
            for &next in neighbors {
                if !visited.insert(next) {
                    continue;
                }
                parents.insert(next, current);
                if matches!(next.knot, KnotDescriptor::Torus(_)) {
                    let mut path = vec![next.clone()];
                    let mut cursor = next;
                    while let Some(&parent) = parents.get(cursor) {
                        path.push(parent.clone());
                        cursor = parent;
                    }
                    path.reverse();
                    return Ok(Some(path));
                }
                queue.push_back(next);
            }
        }
        Ok(None)
    }

    fn vertex_classification(vertex: &SeifertSurgery) -> Option<String> {
        let knot = vertex.knot.as_torus()?;
        if knot.is_unknot() {
            return Some(unknot_surgery(vertex.slope).to_string());
        }
        classify_surgery(knot.p(), knot.q(), vertex.slope)
            .ok()
            .map(|description| description.to_string())
    }

    /// Renders the graph in DOT format.  Nodes are sorted by key and
    /// labeled with their classification when the host is a torus knot;
    /// edges are sorted by endpoint keys.
    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        let mut nodes: Vec<(String, &SeifertSurgery)> =
            self.vertices.iter().map(|v| (v.key(), v)).collect();
        nodes.sort();
        for (key, vertex) in &nodes {
            let label = match Self::vertex_classification(vertex) {
                Some(classification) => format!("{key}\\n{classification}"),
                None => key.clone(),
            };
            out.push_str(&format!("  \"{key}\" [label=\"{label}\"];\n"));
        }
        let mut edges: Vec<(String, String, &str, i64)> = self
            .edges
            .iter()
            .map(|e| (e.u.key(), e.v.key(), e.seiferter.as_str(), e.turns_from_u))
            .collect();
        edges.sort();
        for (u, v, seiferter, turns) in edges {
            out.push_str(&format!("  \"{u}\" -- \"{v}\" [label=\"{seiferter}:{turns:+}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Serializes the graph to versioned JSON.
    pub fn export_json(&self) -> String {
        let file = GraphFile {
            schema_version: GRAPH_SCHEMA_VERSION,
            vertices: self.vertices.iter().cloned().collect(),
            edges: self.edges.iter().cloned().collect(),
        };
        let mut json = serde_json::to_string_pretty(&file).expect("graph serializes");
        json.push('\n');
        json
    }

    /// Parses a graph from its JSON serialization.
    pub fn import_json(json: &str) -> Result<NetworkGraph, NetworkError> {
        let file: GraphFile = serde_json::from_str(json)?;
        if file.schema_version != GRAPH_SCHEMA_VERSION {
            return Err(NetworkError::UnsupportedSchemaVersion {
                found: file.schema_version,
            });
        }
        let mut graph = NetworkGraph::new();
        for vertex in file.vertices {
            graph.add_vertex(vertex);
        }
        for edge in file.edges {
            graph.add_edge(edge.u, edge.v, edge.seiferter, edge.turns_from_u);
        }
        Ok(graph)
    }
}

/// Builds the subcomplex spanned by surgeries `(T(p,q), m)` with
/// canonical `|p| <= p_max` and `|m - pq| <= radius`, including the
/// unknot vertices near slope `1`.  Edges are single twists along basic
/// seiferters between vertices of the complex; unknot vertices reached
/// by one twist from inside the window are kept even when their slope
/// falls outside it.
///
/// Unknot vertices emit a single representative edge per neighbor,
/// labeled `s_p`: all three basic seiferters of the unknot shift the
/// slope by one.
pub fn build_subcomplex_t(p_max: i64, radius: i64) -> Result<NetworkGraph, NetworkError> {
    if p_max < 2 || radius < 0 {
        return Err(NetworkError::BadBounds { p_max, radius });
    }
    let mut knots = vec![TorusKnotId::UNKNOT];
    for a in 3..=p_max {
        for q in 2..a {
            if canonical_torus_knot(a, q).map(|k| k.p() == a).unwrap_or(false) {
                knots.push(canonical_torus_knot(a, q).expect("checked"));
                knots.push(canonical_torus_knot(-a, q).expect("checked"));
            }
        }
    }
    let mut primary = BTreeSet::new();
    for knot in knots {
        let pq = knot.fiber_slope();
        for m in (pq - radius)..=(pq + radius) {
            primary.insert(SeifertSurgery::torus(knot, m));
        }
    }
    let mut graph = NetworkGraph::new();
    for vertex in &primary {
        graph.add_vertex(vertex.clone());
    }
    for vertex in &primary {
        let knot = vertex
            .knot
            .as_torus()
            .expect("primary vertices are torus-knot surgeries");
        let moves: &[BasicSeiferter] = if knot.is_unknot() {
            &[BasicSeiferter::Sp]
        } else {
            &[
                BasicSeiferter::Sp,
                BasicSeiferter::Sq,
                BasicSeiferter::Meridian,
            ]
        };
        for &which in moves {
            for turns in [-1, 1] {
                let target =
                    basic_twist(vertex, which, turns).expect("torus hosts admit basic twists");
                let target_knot = target
                    .knot
                    .as_torus()
                    .expect("basic twists stay on torus knots");
                if target_knot.is_unknot() || primary.contains(&target) {
                    graph.add_basic_edge(vertex, &target);
                }
            }
        }
    }
    Ok(graph)
}

/// Builds the neighborhood of the trefoil meridian line containing the
/// two known departures from torus-knot hosts: the zero-linking line at
/// slope `-2` reaching the figure-eight knot, and the line at slope `-7`
/// reaching `P(-2,3,7)`.
pub fn build_figure2(catalog: &Catalog) -> Result<NetworkGraph, NetworkError> {
    let trefoil = canonical_torus_knot(-3, 2).expect("trefoil parameters");
    let mut graph = NetworkGraph::new();
    graph.add_seiferter_line(
        catalog,
        &SeifertSurgery::torus(trefoil, 0),
        "c_mu",
        -9..=3,
    )?;
    graph.add_seiferter_line(
        catalog,
        &SeifertSurgery::torus(trefoil, -2),
        "c",
        -2..=0,
    )?;
    graph.add_seiferter_line(
        catalog,
        &SeifertSurgery::torus(trefoil, -7),
        "c_prime",
        0..=1,
    )?;
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus(p: i64, q: i64, m: i64) -> SeifertSurgery {
        SeifertSurgery::torus(canonical_torus_knot(p, q).unwrap(), m)
    }

    #[test]
    fn bounds_are_validated() {
        assert!(matches!(
            build_subcomplex_t(1, 0),
            Err(NetworkError::BadBounds { .. })
        ));
        assert!(matches!(
            build_subcomplex_t(2, -1),
            Err(NetworkError::BadBounds { .. })
        ));
    }

    #[test]
    fn smallest_subcomplex_is_the_unknot_segment() {
        let graph = build_subcomplex_t(2, 0).unwrap();
        let expected_vertices: BTreeSet<SeifertSurgery> =
            [torus(1, 1, 0), torus(1, 1, 1), torus(1, 1, 2)].into();
        assert_eq!(graph.vertices(), &expected_vertices);
        assert_eq!(graph.edge_count(), 2);
        assert_eq!(
            graph.export_dot(),
            "graph {\n  \"O(0)\" [label=\"O(0)\\nS2 x S1\"];\n  \"O(1)\" [label=\"O(1)\\nS3\"];\n  \"O(2)\" [label=\"O(2)\\nlens space L(2,1)\"];\n  \"O(0)\" -- \"O(1)\" [label=\"s_p:+1\"];\n  \"O(1)\" -- \"O(2)\" [label=\"s_p:+1\"];\n}\n"
        );
    }

    #[test]
    fn trefoil_subcomplex_connects_to_the_unknot_line() {
        let graph = build_subcomplex_t(3, 1).unwrap();
        for vertex in graph.vertices() {
            let knot = vertex.knot.as_torus().expect("all vertices are torus hosts");
            if !knot.is_unknot() {
                let pq = knot.fiber_slope();
                assert!((vertex.slope - pq).abs() <= 1, "{} out of window", vertex.key());
            }
        }
        for edge in graph.edges() {
            assert!(graph.contains_vertex(&edge.u));
            assert!(graph.contains_vertex(&edge.v));
            assert_eq!(edge.turns_from_u.abs(), 1);
            assert!(edge.u.key() <= edge.v.key());
        }
        assert!(graph.contains_vertex(&torus(3, 2, 6)));
        assert!(graph.contains_vertex(&torus(-3, 2, -6)));
        let sp_to_unknot = graph.edges().iter().any(|e| {
            e.seiferter == "s_p"
                && (e.u == torus(1, 1, 1) && e.v == torus(3, 2, 5)
                    || e.u == torus(3, 2, 5) && e.v == torus(1, 1, 1))
        });
        assert!(sp_to_unknot, "expected an s_p edge from T(3,2)(5) to O(1)");
        let path = graph.find_path_to_torus(&torus(3, 2, 6)).unwrap().unwrap();
        assert_eq!(path, vec![torus(3, 2, 6)]);
    }

    #[test]
    fn wider_subcomplex_stays_within_declared_bounds() {
        let graph = build_subcomplex_t(5, 2).unwrap();
        for vertex in graph.vertices() {
            let knot = vertex.knot.as_torus().unwrap();
            assert!(knot.p().abs() <= 5);
            if !knot.is_unknot() {
                assert!((vertex.slope - knot.fiber_slope()).abs() <= 2);
            }
        }
        assert!(graph.contains_vertex(&torus(5, 2, 10)));
        assert!(graph.contains_vertex(&torus(5, 3, 15)));
        assert!(graph.contains_vertex(&torus(-5, 4, -20)));
        let has_sq = graph
            .edges()
            .iter()
            .any(|e| e.u == torus(3, 2, 6) && e.v == torus(5, 3, 15) && e.seiferter == "s_q");
        assert!(has_sq, "expected the s_q edge from T(3,2)(6) to T(5,3)(15)");
    }

    #[test]
    fn figure2_has_the_expected_shape() {
        let catalog = Catalog::embedded();
        let graph = build_figure2(catalog).unwrap();
        assert_eq!(graph.vertex_count(), 16);
        assert_eq!(graph.edge_count(), 15);

        let pretzel = SeifertSurgery::named("P(-2,3,7)", 18);
        let path = graph.find_path_to_torus(&pretzel).unwrap().unwrap();
        assert_eq!(path.len(), 2);
        assert_eq!(path[1], torus(-3, 2, -7));

        let fig8 = SeifertSurgery::named("figure-eight", -2);
        let path = graph.find_path_to_torus(&fig8).unwrap().unwrap();
        assert_eq!(path.len(), 3);
        assert_eq!(path[2], torus(-3, 2, -2));

        let absent = SeifertSurgery::named("figure-eight", 5);
        assert!(matches!(
            graph.find_path_to_torus(&absent),
            Err(NetworkError::VertexAbsent { .. })
        ));
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let catalog = Catalog::embedded();
        for graph in [
            build_subcomplex_t(3, 1).unwrap(),
            build_figure2(catalog).unwrap(),
            NetworkGraph::new(),
        ] {
            let json = graph.export_json();
            let back = NetworkGraph::import_json(&json).unwrap();
            assert_eq!(back, graph);
            assert_eq!(back.export_json(), json);
        }
        assert_eq!(NetworkGraph::new().export_dot(), "graph {\n}\n");
    }

    #[test]
    fn unsupported_graph_schema_is_rejected() {
        let json = r#"{"schema_version": 2, "vertices": [], "edges": []}"#;
        assert!(matches!(
            NetworkGraph::import_json(json),
            Err(NetworkError::UnsupportedSchemaVersion { found: 2 })
        ));
    }

    #[test]
    fn duplicate_and_reversed_edges_collapse() {
        let mut graph = NetworkGraph::new();
        let a = torus(3, 2, 6);
        let b = torus(3, 2, 7);
        graph.add_edge(a.clone(), b.clone(), "c_mu", 1);
        graph.add_edge(b.clone(), a.clone(), "c_mu", -1);
        assert_eq!(graph.edge_count(), 1);
        assert_eq!(graph.vertex_count(), 2);
        let edge = graph.edges().iter().next().unwrap();
        assert_eq!(edge.u, a);
        assert_eq!(edge.turns_from_u, 1);
    }
}
