//! Plane graphs as rotation systems, face tracing, and outerplanarity peeling.
//!
//! Dangling edges appear in the rotations (they matter when vertices are
//! expanded) but are skipped by face tracing and never peeled.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::network::{EdgeId, FlowNetwork, VertexId};

/// A flow network with a combinatorial embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    pub net: FlowNetwork,
    /// Clockwise order of every incident edge id, dangling edges included.
    pub rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    /// Edges of the outer face (any order). May be empty when there are no internal edges.
    pub outer_face: Vec<EdgeId>,
}

/// A traced face: darts in walking order and the edges they run along.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<usize>,
    pub outer: bool,
}

/// Faces of a validated embedding. Dart `2k` runs internal edge `k` from tail
/// to head and `2k + 1` runs it backwards.
#[derive(Debug, Clone)]
pub struct Faces {
    pub edges: Vec<EdgeId>,
    pub faces: Vec<Face>,
    /// Face id of every dart.
    pub face_of: Vec<usize>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn edge_of(&self, dart: usize) -> &EdgeId {
        &self.edges[dart / 2]
    }

    /// Distinct edge ids on face `f`, sorted.
    pub fn face_edges(&self, f: usize) -> Vec<EdgeId> {
        let set: BTreeSet<&EdgeId> = self.faces[f].darts.iter().map(|&d| self.edge_of(d)).collect();
        set.into_iter().cloned().collect()
    }
}

/// The `k` layers of edge peeling, outermost first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    pub k: usize,
    pub layers: Vec<Vec<EdgeId>>,
}

impl LayerPartition {
    pub fn to_json(&self) -> Value {
        json!({ "k": self.k, "layers": self.layers })
    }

    /// Layer number of every internal edge.
    pub fn layer_of(&self) -> BTreeMap<EdgeId, usize> {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().map(move |e| (e.clone(), i)))
            .collect()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[rb] = ra;
        }
    }
}

impl PlaneGraph {
    pub fn new(net: FlowNetwork, rotation: BTreeMap<VertexId, Vec<EdgeId>>, outer_face: Vec<EdgeId>) -> Result<Self> {
        let pg = PlaneGraph { net, rotation, outer_face };
        pg.derive_faces()?;
        Ok(pg)
    }

    fn endpoints(&self, id: &str) -> (&str, &str) {
        let e = self.net.edge(id).expect("internal edge");
        (e.tail.as_deref().unwrap(), e.head.as_deref().unwrap())
    }

    fn check_rotation(&self) -> Result<()> {
        for v in self.net.vertices() {
            let mut listed: Vec<EdgeId> = self.rotation.get(v).cloned().unwrap_or_default();
            listed.sort();
            if listed != self.net.incident(v) {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation at `{v}` does not list exactly its incident edges"
                )));
            }
        }
        if let Some(v) = self.rotation.keys().find(|v| !self.net.has_vertex(v)) {
            return Err(Error::InvalidEmbedding(format!("rotation for unknown vertex `{v}`")));
        }
        Ok(())
    }

    /// Traces every face and marks the outer one of each connected component.
    pub fn derive_faces(&self) -> Result<Faces> {
        self.check_rotation()?;
        let edges = self.net.internal_edges();
        let index: BTreeMap<&str, usize> = edges.iter().enumerate().map(|(k, e)| (e.as_str(), k)).collect();
        // Internal-only rotation with positions, per vertex.
        let mut rot: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (v, list) in &self.rotation {
            rot.insert(v, list.iter().filter_map(|e| index.get(e.as_str()).copied()).collect());
        }
        let dart_from = |d: usize| -> &str {
            let (t, h) = self.endpoints(&edges[d / 2]);
            if d.is_multiple_of(2) {
                t
            } else {
                h
            }
        };
        let dart_to = |d: usize| dart_from(d ^ 1);
        // Next dart on the face: leave the arrival vertex along the edge
        // following the arrival edge in the rotation.
        let succ = |d: usize| -> usize {
            let v = dart_to(d);
            let list = &rot[v];
            let pos = list.iter().position(|&k| k == d / 2).expect("edge in rotation");
            let k = list[(pos + 1) % list.len()];
            if dart_from(2 * k) == v {
                2 * k
            } else {
                2 * k + 1
            }
        };
        let n_darts = 2 * edges.len();
        let mut face_of = vec![usize::MAX; n_darts];
        let mut faces = Vec::new();
        for start in 0..n_darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                if face_of[d] != usize::MAX {
                    return Err(Error::InvalidEmbedding("face traversal does not close".into()));
                }
                face_of[d] = id;
                darts.push(d);
                d = succ(d);
                if d == start {
                    break;
                }
                if darts.len() > n_darts {
                    return Err(Error::InvalidEmbedding("face traversal does not close".into()));
                }
            }
            faces.push(Face { darts, outer: false });
        }

        // Connected components over internal edges.
        let verts: Vec<&VertexId> = self.net.vertices().collect();
        let vidx: BTreeMap<&str, usize> = verts.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut uf = UnionFind::new(verts.len());
        for e in &edges {
            let (t, h) = self.endpoints(e);
            uf.union(vidx[t], vidx[h]);
        }
        let mut comp_v: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comp_e: BTreeMap<usize, usize> = BTreeMap::new();
        let mut comp_faces: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in &verts {
            *comp_v.entry(uf.find(vidx[v.as_str()])).or_default() += 1;
        }
        for e in &edges {
            *comp_e.entry(uf.find(vidx[self.endpoints(e).0])).or_default() += 1;
        }
        for (f, face) in faces.iter().enumerate() {
            let c = uf.find(vidx[dart_from(face.darts[0])]);
            comp_faces.entry(c).or_default().push(f);
        }
        let outer_set: BTreeSet<&str> = self.outer_face.iter().map(String::as_str).collect();
        if let Some(e) = outer_set.iter().find(|e| !index.contains_key(**e)) {
            return Err(Error::InvalidEmbedding(format!("outer face lists non-internal edge `{e}`")));
        }
        for (c, fs) in &comp_faces {
            let (nv, ne) = (comp_v[c] as i64, comp_e[c] as i64);
            if nv - ne + fs.len() as i64 != 2 {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation is not planar: {nv} - {ne} + {} != 2 on a component",
                    fs.len()
                )));
            }
            let edge_set = |f: usize| -> BTreeSet<&str> {
                faces[f].darts.iter().map(|&d| edges[d / 2].as_str()).collect()
            };
            let comp_outer: BTreeSet<&str> = fs
                .iter()
                .flat_map(|&f| edge_set(f))
                .filter(|e| outer_set.contains(e))
                .collect();
            let chosen = if comp_outer.is_empty() {
                // Components not named by the outer face sit side by side with it.
                largest_face(fs, &faces, &edges)
            } else {
                *fs.iter()
                    .find(|&&f| edge_set(f) == comp_outer)
                    .ok_or_else(|| Error::InvalidEmbedding("outer face is not a face of the rotation".into()))?
            };
            faces[chosen].outer = true;
        }
        Ok(Faces { edges, faces, face_of })
    }

    /// Edge peeling: repeatedly delete every edge on the outer face.
    pub fn peel_edge_layers(&self) -> Result<LayerPartition> {
        let faces = self.derive_faces()?;
        let mut uf = UnionFind::new(faces.len() + 1);
        let outer = faces.len();
        for (f, face) in faces.faces.iter().enumerate() {
            if face.outer {
                uf.union(outer, f);
            }
        }
        let mut alive: BTreeSet<usize> = (0..faces.edges.len()).collect();
        let mut layers = Vec::new();
        while !alive.is_empty() {
            let root = uf.find(outer);
            let layer: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&k| uf.find(faces.face_of[2 * k]) == root || uf.find(faces.face_of[2 * k + 1]) == root)
                .collect();
            if layer.is_empty() {
                return Err(Error::InvalidEmbedding("no remaining edge borders the outer face".into()));
            }
            for &k in &layer {
                alive.remove(&k);
                uf.union(faces.face_of[2 * k], faces.face_of[2 * k + 1]);
                uf.union(outer, faces.face_of[2 * k]);
            }
            let mut ids: Vec<EdgeId> = layer.iter().map(|&k| faces.edges[k].clone()).collect();
            ids.sort();
            layers.push(ids);
        }
        Ok(LayerPartition { k: layers.len(), layers })
    }

    /// Faces together with the peeling round after which each face is part of
    /// the outer region (0 for the outer face itself).
    pub fn face_rounds(&self) -> Result<(Faces, Vec<usize>)> {
        let faces = self.derive_faces()?;
        let mut uf = UnionFind::new(faces.len() + 1);
        let outer = faces.len();
        for (f, face) in faces.faces.iter().enumerate() {
            if face.outer {
                uf.union(outer, f);
            }
        }
        let mut round = vec![usize::MAX; faces.len()];
        let mut alive: BTreeSet<usize> = (0..faces.edges.len()).collect();
        let mut r = 0;
        loop {
            let root = uf.find(outer);
            for (f, slot) in round.iter_mut().enumerate() {
                if *slot == usize::MAX && uf.find(f) == root {
                    *slot = r;
                }
            }
            let layer: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&k| uf.find(faces.face_of[2 * k]) == root || uf.find(faces.face_of[2 * k + 1]) == root)
                .collect();
            if layer.is_empty() {
                break;
            }
            for &k in &layer {
                alive.remove(&k);
                uf.union(faces.face_of[2 * k], faces.face_of[2 * k + 1]);
                uf.union(outer, faces.face_of[2 * k]);
            }
            r += 1;
        }
        Ok((faces, round))
    }

    /// Vertex peeling: repeatedly delete every vertex on the outer face with its edges.
    pub fn peel_vertex_layers(&self) -> Result<usize> {
        let faces = self.derive_faces()?;
        let mut uf = UnionFind::new(faces.len() + 1);
        let outer = faces.len();
        for (f, face) in faces.faces.iter().enumerate() {
            if face.outer {
                uf.union(outer, f);
            }
        }
        // Darts leaving each vertex.
        let mut at: BTreeMap<&str, Vec<usize>> = self.net.vertices().map(|v| (v.as_str(), Vec::new())).collect();
        for (k, e) in faces.edges.iter().enumerate() {
            let (t, h) = self.endpoints(e);
            at.get_mut(t).unwrap().push(2 * k);
            at.get_mut(h).unwrap().push(2 * k + 1);
        }
        let mut edge_alive = vec![true; faces.edges.len()];
        // Face an isolated vertex sits in; `outer` for vertices isolated from the start.
        let mut location: BTreeMap<&str, usize> = at
            .iter()
            .filter(|(_, ds)| ds.is_empty())
            .map(|(v, _)| (*v, outer))
            .collect();
        let mut remaining: BTreeSet<&str> = at.keys().copied().collect();
        let mut rounds = 0;
        while !remaining.is_empty() {
            let root = uf.find(outer);
            let peel: Vec<&str> = remaining
                .iter()
                .copied()
                .filter(|v| {
                    let live: Vec<usize> = at[v].iter().copied().filter(|d| edge_alive[d / 2]).collect();
                    if live.is_empty() {
                        let loc = location[v];
                        uf.find(loc) == root
                    } else {
                        // A vertex is on a face when a dart into or out of it is.
                        live.iter().any(|&d| uf.find(faces.face_of[d]) == root || uf.find(faces.face_of[d ^ 1]) == root)
                    }
                })
                .collect();
            if peel.is_empty() {
                return Err(Error::InvalidEmbedding("no remaining vertex borders the outer face".into()));
            }
            let mut touched: BTreeSet<&str> = BTreeSet::new();
            for v in &peel {
                remaining.remove(v);
                for &d in &at[v] {
                    if edge_alive[d / 2] {
                        edge_alive[d / 2] = false;
                        uf.union(faces.face_of[d], faces.face_of[d ^ 1]);
                        touched.insert(self.endpoints(&faces.edges[d / 2]).0);
                        touched.insert(self.endpoints(&faces.edges[d / 2]).1);
                    }
                }
            }
            for v in touched {
                if remaining.contains(v) && !location.contains_key(v) && at[v].iter().all(|d| !edge_alive[d / 2]) {
                    location.insert(v, faces.face_of[at[v][0]]);
                }
            }
            rounds += 1;
        }
        Ok(rounds)
    }

    /// Embedding of a straight-line drawing. Dangling edges point away from
    /// the centroid of the drawing. The outer face of each component is the
    /// one traced clockwise around the whole component.
    pub fn from_coordinates(net: FlowNetwork, coords: &BTreeMap<VertexId, (f64, f64)>) -> Result<Self> {
        let missing: Vec<&VertexId> = net.vertices().filter(|v| !coords.contains_key(*v)).collect();
        if !missing.is_empty() {
            return Err(Error::InvalidEmbedding(format!("no coordinates for {missing:?}")));
        }
        let n = coords.len().max(1) as f64;
        let cx = coords.values().map(|p| p.0).sum::<f64>() / n;
        let cy = coords.values().map(|p| p.1).sum::<f64>() / n;
        let mut rotation = BTreeMap::new();
        for v in net.vertices() {
            let (x, y) = coords[v];
            let mut angled: Vec<(f64, EdgeId)> = Vec::new();
            let mut dangling = 0;
            for id in net.incident(v) {
                let e = net.edge(&id).expect("incident");
                let other = match (e.tail.as_deref(), e.head.as_deref()) {
                    (Some(t), Some(h)) => Some(if t == v.as_str() { h } else { t }),
                    _ => None,
                };
                let angle = match other {
                    Some(o) => {
                        let (ox, oy) = coords[o];
                        (oy - y).atan2(ox - x)
                    }
                    None => {
                        dangling += 1;
                        let base = if (x - cx).abs() + (y - cy).abs() < 1e-9 { 0.0 } else { (y - cy).atan2(x - cx) };
                        base + 1e-3 * dangling as f64
                    }
                };
                angled.push((angle, id));
            }
            // Clockwise is decreasing angle.
            angled.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then_with(|| a.1.cmp(&b.1)));
            rotation.insert(v.clone(), angled.into_iter().map(|(_, id)| id).collect());
        }
        let mut pg = PlaneGraph { net, rotation, outer_face: Vec::new() };
        let faces = pg.derive_faces()?;
        let mut outer: BTreeSet<EdgeId> = BTreeSet::new();
        // Signed area: the outer face is the only one traced with negative area.
        let area = |f: &Face| -> f64 {
            f.darts
                .iter()
                .map(|&d| {
                    let (t, h) = pg.endpoints(faces.edge_of(d));
                    let (a, b) = if d % 2 == 0 { (t, h) } else { (h, t) };
                    let (p, q) = (coords[a], coords[b]);
                    p.0 * q.1 - q.0 * p.1
                })
                .sum::<f64>()
        };
        let mut by_comp: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
        let comp_of = component_labels(&pg.net);
        for (fid, f) in faces.faces.iter().enumerate() {
            let (t, _) = pg.endpoints(faces.edge_of(f.darts[0]));
            let c = comp_of[t];
            let a = area(f);
            let entry = by_comp.entry(c).or_insert((f64::INFINITY, fid));
            if a < entry.0 {
                *entry = (a, fid);
            }
        }
        for (_, fid) in by_comp.values() {
            outer.extend(faces.face_edges(*fid));
        }
        pg.outer_face = outer.into_iter().collect();
        pg.derive_faces()?;
        Ok(pg)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.net.to_json();
        let obj = v.as_object_mut().expect("network JSON is an object");
        obj.insert("rotation".into(), json!(self.rotation));
        obj.insert("outer_face".into(), json!(self.outer_face));
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let net = FlowNetwork::from_json(v)?;
        let rotation: BTreeMap<VertexId, Vec<EdgeId>> = serde_json::from_value(
            v.get("rotation")
                .cloned()
                .ok_or_else(|| Error::InvalidEmbedding("missing `rotation`".into()))?,
        )?;
        let outer_face: Vec<EdgeId> = match v.get("outer_face") {
            Some(x) => serde_json::from_value(x.clone())?,
            None => Vec::new(),
        };
        PlaneGraph::new(net, rotation, outer_face)
    }
}

/// Face with the most darts; ties go to the face holding the smallest edge id.
pub(crate) fn largest_face(fs: &[usize], faces: &[Face], edges: &[EdgeId]) -> usize {
    let min_edge = |f: usize| faces[f].darts.iter().map(|&d| &edges[d / 2]).min().cloned();
    *fs.iter()
        .max_by(|&&a, &&b| {
            faces[a]
                .darts
                .len()
                .cmp(&faces[b].darts.len())
                .then_with(|| min_edge(b).cmp(&min_edge(a)))
        })
        .expect("component has a face")
}

/// Connected-component label of every vertex over internal edges.
pub fn component_labels(net: &FlowNetwork) -> BTreeMap<VertexId, usize> {
    let verts: Vec<&VertexId> = net.vertices().collect();
    let idx: BTreeMap<&str, usize> = verts.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut uf = UnionFind::new(verts.len());
    for id in net.internal_edges() {
        let e = net.edge(&id).expect("edge");
        uf.union(idx[e.tail.as_deref().unwrap()], idx[e.head.as_deref().unwrap()]);
    }
    let mut label = BTreeMap::new();
    let mut out = BTreeMap::new();
    for (i, v) in verts.iter().enumerate() {
        let r = uf.find(i);
        let next = label.len();
        out.insert((*v).clone(), *label.entry(r).or_insert(next));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Capacity;

    /// Network over `edges` (tail, head) with unit capacities and the given drawing.
    pub(crate) fn drawn(name: &str, pts: &[(&str, f64, f64)], edges: &[(&str, &str)]) -> PlaneGraph {
        let mut net = FlowNetwork::new(name);
        let mut coords = BTreeMap::new();
        for (v, x, y) in pts {
            net.add_vertex(*v);
            coords.insert(v.to_string(), (*x, *y));
        }
        for (k, (t, h)) in edges.iter().enumerate() {
            net.add_edge(format!("e{k:02}"), Some(t), Some(h), Capacity::from_int(1));
        }
        PlaneGraph::from_coordinates(net, &coords).unwrap()
    }

    pub(crate) fn triangle() -> PlaneGraph {
        drawn("tri", &[("a", 0.0, 0.0), ("b", 1.0, 0.0), ("c", 0.0, 1.0)], &[("a", "b"), ("b", "c"), ("c", "a")])
    }

    /// Inner polygon scaled by one half inside the outer one, joined by spokes.
    pub(crate) fn prism_drawing(l: usize) -> PlaneGraph {
        let mut pts = Vec::new();
        let names: Vec<(String, String)> = (0..l).map(|i| (format!("o{i}"), format!("i{i}"))).collect();
        for (i, (o, n)) in names.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * i as f64 / l as f64;
            pts.push((o.as_str(), t.cos(), t.sin()));
            pts.push((n.as_str(), 0.5 * t.cos(), 0.5 * t.sin()));
        }
        let mut edges = Vec::new();
        for i in 0..l {
            let j = (i + 1) % l;
            edges.push((names[i].0.as_str(), names[j].0.as_str()));
            edges.push((names[i].1.as_str(), names[j].1.as_str()));
            edges.push((names[i].0.as_str(), names[i].1.as_str()));
        }
        drawn("prism", &pts, &edges)
    }

    fn k4() -> PlaneGraph {
        drawn(
            "k4",
            &[("a", 0.0, 0.0), ("b", 4.0, 0.0), ("c", 2.0, 4.0), ("d", 2.0, 1.5)],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("a", "d"), ("b", "d"), ("c", "d")],
        )
    }

    #[test]
    fn face_counts() {
        assert_eq!(triangle().derive_faces().unwrap().len(), 2);
        assert_eq!(prism_drawing(4).derive_faces().unwrap().len(), 6);
        let single = drawn("edge", &[("a", 0.0, 0.0), ("b", 1.0, 0.0)], &[("a", "b")]);
        assert_eq!(single.derive_faces().unwrap().len(), 1);
    }

    #[test]
    fn outer_face_is_the_unbounded_one() {
        let pg = prism_drawing(3);
        let mut outer = pg.outer_face.clone();
        outer.sort();
        // Outer triangle edges are e00, e03, e06.
        assert_eq!(outer, vec!["e00", "e03", "e06"]);
        let faces = k4().derive_faces().unwrap();
        let outer: Vec<&Face> = faces.faces.iter().filter(|f| f.outer).collect();
        assert_eq!(outer.len(), 1);
        assert_eq!(outer[0].darts.len(), 3);
    }

    #[test]
    fn edge_peeling() {
        let tri = triangle().peel_edge_layers().unwrap();
        assert_eq!(tri.k, 1);
        assert_eq!(tri.layers[0].len(), 3);
        let prism = prism_drawing(3).peel_edge_layers().unwrap();
        assert_eq!(prism.k, 2);
        assert_eq!(prism.layers[0], vec!["e00", "e03", "e06"]);
        assert_eq!(prism.layers[1].len(), 6);
        assert_eq!(prism_drawing(4).peel_edge_layers().unwrap().k, 2);
        assert_eq!(k4().peel_edge_layers().unwrap().k, 2);
    }

    #[test]
    fn vertex_peeling() {
        assert_eq!(triangle().peel_vertex_layers().unwrap(), 1);
        assert_eq!(prism_drawing(3).peel_vertex_layers().unwrap(), 2);
        assert_eq!(prism_drawing(4).peel_vertex_layers().unwrap(), 2);
        assert_eq!(k4().peel_vertex_layers().unwrap(), 2);
    }

    #[test]
    fn edgeless_graph_has_no_layers() {
        let mut net = FlowNetwork::new("dot");
        net.add_vertex("v");
        net.add_edge("a", None, Some("v"), Capacity::from_int(1));
        let pg = PlaneGraph::new(net, BTreeMap::from([("v".into(), vec!["a".into()])]), vec![]).unwrap();
        assert_eq!(pg.peel_edge_layers().unwrap().k, 0);
        assert_eq!(pg.peel_vertex_layers().unwrap(), 1);
    }

    #[test]
    fn bad_rotations_are_rejected() {
        let mut pg = triangle();
        pg.rotation.get_mut("a").unwrap().pop();
        assert!(pg.derive_faces().is_err());

        // K4 with one rotation flipped is no longer planar.
        let mut pg = k4();
        pg.rotation.get_mut("d").unwrap().swap(0, 1);
        assert!(matches!(pg.derive_faces(), Err(Error::InvalidEmbedding(_))));

        let mut pg = triangle();
        pg.outer_face = vec!["e00".into()];
        assert!(pg.derive_faces().is_err());
    }

    #[test]
    fn json_round_trip() {
        let pg = prism_drawing(3);
        assert_eq!(PlaneGraph::from_json(&pg.to_json()).unwrap(), pg);
        let layers = pg.peel_edge_layers().unwrap().to_json();
        assert_eq!(layers["k"], 2);
    }
}
