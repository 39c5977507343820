//! Flow networks with dangling input/output edges, flows and IO assignments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{capacity_from_json, Capacity};

pub type VertexId = String;
pub type EdgeId = String;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub tail: Option<VertexId>,
    pub head: Option<VertexId>,
    pub cap: Capacity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Input,
    Output,
    Internal,
}

impl Edge {
    pub fn kind(&self) -> Option<EdgeKind> {
        match (&self.tail, &self.head) {
            (None, Some(_)) => Some(EdgeKind::Input),
            (Some(_), None) => Some(EdgeKind::Output),
            (Some(_), Some(_)) => Some(EdgeKind::Internal),
            (None, None) => None,
        }
    }
}

/// One violated network invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SelfLoop(EdgeId),
    FloatingEdge(EdgeId),
    UnknownVertex { edge: EdgeId, vertex: VertexId },
    ParallelEdges(EdgeId, EdgeId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SelfLoop(e) => write!(f, "self-loop: edge `{e}`"),
            Violation::FloatingEdge(e) => write!(f, "floating edge: `{e}` has no endpoint"),
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "unknown vertex: edge `{edge}` references `{vertex}`")
            }
            Violation::ParallelEdges(a, b) => {
                write!(f, "parallel edges: `{a}` and `{b}` share tail and head")
            }
        }
    }
}

/// A directed graph with dangling edges and upper-bound capacities.
///
/// Vertex and edge ids are ordered lexicographically everywhere, which fixes
/// every tie-break downstream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    pub name: String,
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, Edge>,
}

impl FlowNetwork {
    pub fn new(name: impl Into<String>) -> Self {
        FlowNetwork {
            name: name.into(),
            vertices: BTreeSet::new(),
            edges: BTreeMap::new(),
        }
    }

    pub fn add_vertex(&mut self, v: impl Into<VertexId>) -> &mut Self {
        self.vertices.insert(v.into());
        self
    }

    /// Inserts or replaces an edge. No validation happens here.
    pub fn add_edge(
        &mut self,
        id: impl Into<EdgeId>,
        tail: Option<&str>,
        head: Option<&str>,
        cap: Capacity,
    ) -> &mut Self {
        self.edges.insert(
            id.into(),
            Edge {
                tail: tail.map(str::to_string),
                head: head.map(str::to_string),
                cap,
            },
        );
        self
    }

    pub fn remove_edge(&mut self, id: &str) -> Option<Edge> {
        self.edges.remove(id)
    }

    pub fn remove_vertex(&mut self, v: &str) -> bool {
        self.vertices.remove(v)
    }

    /// Returns the network if it has no violations.
    pub fn validated(self) -> Result<Self> {
        let report = validate_network(&self);
        if report.is_empty() {
            Ok(self)
        } else {
            let msgs: Vec<String> = report.iter().map(|v| v.to_string()).collect();
            Err(Error::InvalidNetwork(msgs.join("; ")))
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.vertices.iter()
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&EdgeId, &Edge)> {
        self.edges.iter()
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn cap(&self, id: &str) -> Capacity {
        self.edges.get(id).map(|e| e.cap).unwrap_or(Capacity::ZERO)
    }

    fn ids_of(&self, kind: EdgeKind) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, e)| e.kind() == Some(kind))
            .map(|(id, _)| id.clone())
            .collect()
    }

    /// Input edges, ascending by id.
    pub fn inputs(&self) -> Vec<EdgeId> {
        self.ids_of(EdgeKind::Input)
    }

    pub fn outputs(&self) -> Vec<EdgeId> {
        self.ids_of(EdgeKind::Output)
    }

    pub fn internal_edges(&self) -> Vec<EdgeId> {
        self.ids_of(EdgeKind::Internal)
    }

    pub fn io_edges(&self) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, e)| matches!(e.kind(), Some(EdgeKind::Input | EdgeKind::Output)))
            .map(|(id, _)| id.clone())
            .collect()
    }

    /// All edges touching `v` (dangling ones included), ascending by id.
    pub fn incident(&self, v: &str) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, e)| e.tail.as_deref() == Some(v) || e.head.as_deref() == Some(v))
            .map(|(id, _)| id.clone())
            .collect()
    }

    /// Degree counting dangling edges.
    pub fn degree(&self, v: &str) -> usize {
        self.incident(v).len()
    }

    pub fn incidence_map(&self) -> BTreeMap<VertexId, Vec<EdgeId>> {
        let mut map: BTreeMap<VertexId, Vec<EdgeId>> =
            self.vertices.iter().map(|v| (v.clone(), Vec::new())).collect();
        for (id, e) in &self.edges {
            for end in [&e.tail, &e.head].into_iter().flatten() {
                if let Some(list) = map.get_mut(end) {
                    list.push(id.clone());
                }
            }
        }
        map
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(NetworkFile::from(self)).expect("network serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let file: NetworkFile = serde_json::from_value(v.clone())?;
        file.into_network()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(s)?;
        Self::from_json(&v)
    }
}

/// Returns every violated invariant; an empty report means the network is valid.
pub fn validate_network(net: &FlowNetwork) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut pairs: BTreeMap<(&str, &str), &str> = BTreeMap::new();
    for (id, e) in &net.edges {
        match (&e.tail, &e.head) {
            (None, None) => out.push(Violation::FloatingEdge(id.clone())),
            (Some(t), Some(h)) if t == h => out.push(Violation::SelfLoop(id.clone())),
            _ => {}
        }
        for end in [&e.tail, &e.head].into_iter().flatten() {
            if !net.vertices.contains(end) {
                out.push(Violation::UnknownVertex {
                    edge: id.clone(),
                    vertex: end.clone(),
                });
            }
        }
        if let (Some(t), Some(h)) = (&e.tail, &e.head) {
            if t != h {
                if let Some(prev) = pairs.insert((t.as_str(), h.as_str()), id.as_str()) {
                    out.push(Violation::ParallelEdges(prev.to_string(), id.clone()));
                }
            }
        }
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct EdgeRecord {
    pub id: EdgeId,
    pub tail: Option<VertexId>,
    pub head: Option<VertexId>,
    pub cap: serde_json::Value,
}

#[derive(Debug, Serialize, Deserialize)]
pub(crate) struct NetworkFile {
    #[serde(default = "default_name")]
    pub name: String,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeRecord>,
}

fn default_name() -> String {
    "network".to_string()
}

impl From<&FlowNetwork> for NetworkFile {
    fn from(net: &FlowNetwork) -> Self {
        NetworkFile {
            name: net.name.clone(),
            vertices: net.vertices.iter().cloned().collect(),
            edges: net
                .edges
                .iter()
                .map(|(id, e)| EdgeRecord {
                    id: id.clone(),
                    tail: e.tail.clone(),
                    head: e.head.clone(),
                    cap: serde_json::Value::String(e.cap.to_string()),
                })
                .collect(),
        }
    }
}

impl NetworkFile {
    pub fn into_network(self) -> Result<FlowNetwork> {
        let mut net = FlowNetwork::new(self.name);
        for v in self.vertices {
            if !net.vertices.insert(v.clone()) {
                return Err(Error::InvalidNetwork(format!("duplicate vertex `{v}`")));
            }
        }
        for rec in self.edges {
            if net.edges.contains_key(&rec.id) {
                return Err(Error::InvalidNetwork(format!("duplicate edge `{}`", rec.id)));
            }
            let cap = capacity_from_json(&rec.cap)?;
            net.add_edge(rec.id, rec.tail.as_deref(), rec.head.as_deref(), cap);
        }
        net.validated()
    }
}

/// A total assignment of values to a set of edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeValues(pub BTreeMap<EdgeId, Capacity>);

impl EdgeValues {
    pub fn get(&self, id: &str) -> Capacity {
        self.0.get(id).copied().unwrap_or(Capacity::ZERO)
    }

    pub fn set(&mut self, id: impl Into<EdgeId>, v: Capacity) {
        self.0.insert(id.into(), v);
    }

    /// Sum over the listed edges.
    pub fn sum_over<'a, I: IntoIterator<Item = &'a EdgeId>>(&self, ids: I) -> Capacity {
        ids.into_iter().map(|id| self.get(id)).sum()
    }

    pub fn keys(&self) -> impl Iterator<Item = &EdgeId> {
        self.0.keys()
    }
}

/// A flow assigns a value to every edge of its network.
pub type Flow = EdgeValues;
/// An IO assignment assigns a value to every dangling edge.
pub type IoAssignment = EdgeValues;

impl Flow {
    pub fn zero(net: &FlowNetwork) -> Flow {
        EdgeValues(net.edges.keys().map(|id| (id.clone(), Capacity::ZERO)).collect())
    }

    pub fn uniform(net: &FlowNetwork, v: Capacity) -> Flow {
        EdgeValues(net.edges.keys().map(|id| (id.clone(), v)).collect())
    }
}

fn check_domain(net: &FlowNetwork, f: &Flow) -> Result<()> {
    if f.0.len() != net.edges.len() || !net.edges.keys().all(|k| f.0.contains_key(k)) {
        let expected: Vec<&str> = net.edges.keys().map(String::as_str).collect();
        let got: Vec<&str> = f.0.keys().map(String::as_str).collect();
        return Err(Error::DomainMismatch(format!(
            "expected {expected:?}, got {got:?}"
        )));
    }
    Ok(())
}

/// Flow conservation at every vertex and capacity constraint at every edge.
pub fn is_feasible(net: &FlowNetwork, f: &Flow) -> Result<bool> {
    check_domain(net, f)?;
    for (id, e) in &net.edges {
        if f.get(id) > e.cap {
            return Ok(false);
        }
    }
    let mut balance: BTreeMap<&str, crate::rational::Rational> = BTreeMap::new();
    for (id, e) in &net.edges {
        let v = f.get(id).value();
        if let Some(h) = &e.head {
            *balance.entry(h.as_str()).or_default() += v;
        }
        if let Some(t) = &e.tail {
            *balance.entry(t.as_str()).or_default() -= v;
        }
    }
    Ok(balance.values().all(|b| *b == 0.into()))
}

/// `|f|`, the total inflow over input edges.
pub fn flow_value(net: &FlowNetwork, f: &Flow) -> Result<Capacity> {
    if !is_feasible(net, f)? {
        return Err(Error::InfeasibleFlow);
    }
    Ok(f.sum_over(&net.inputs()))
}

/// Pointwise sum of two flows over the same domain.
pub fn add_flows(f: &Flow, g: &Flow) -> Result<Flow> {
    if f.0.len() != g.0.len() || !f.0.keys().all(|k| g.0.contains_key(k)) {
        return Err(Error::DomainMismatch("flows have different domains".into()));
    }
    Ok(EdgeValues(
        f.0.iter().map(|(k, v)| (k.clone(), *v + g.get(k))).collect(),
    ))
}

/// Restriction of a flow to the dangling edges.
pub fn io_restriction(net: &FlowNetwork, f: &Flow) -> IoAssignment {
    EdgeValues(
        net.io_edges()
            .into_iter()
            .map(|id| {
                let v = f.get(&id);
                (id, v)
            })
            .collect(),
    )
}
