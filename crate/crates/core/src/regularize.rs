//! Rewriting a network into an equivalent 3-regular one without two-edge
//! cycles, keeping the embedding when there is one.
//!
//! Steps, in order:
//! 1. drop isolated vertices, delete edges that conservation forces to zero,
//!    and contract pass-through vertices of degree 2;
//! 2. expand every vertex of degree `d >= 4` into a directed chain of `d - 2`
//!    vertices when its inputs are contiguous in the rotation, or a directed
//!    ring of `d` vertices otherwise, with capacities equal to the sum of the
//!    original incident capacities;
//! 3. break each two-edge cycle by subdividing both edges and joining the two
//!    midpoints with a zero-capacity rung inside the face they share;
//! 4. pad vertices of degree 1 or 2 with zero-capacity gadgets, joining
//!    degree-1 vertices in pairs.

use std::collections::{BTreeMap, BTreeSet};

use log::warn;

use crate::error::{Error, Result};
use crate::network::{EdgeId, FlowNetwork, VertexId};
use crate::planar::PlaneGraph;
use crate::rational::Capacity;

/// Where an output edge comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Original(EdgeId),
    /// Contraction of a path or merge of parallel edges.
    Contracted(Vec<EdgeId>),
    /// One half of a subdivided original edge.
    Half(EdgeId),
    /// Edge inside the gadget built for this vertex or edge.
    Gadget(String),
}

impl Provenance {
    pub fn originals(&self) -> Vec<EdgeId> {
        match self {
            Provenance::Original(e) | Provenance::Half(e) => vec![e.clone()],
            Provenance::Contracted(es) => es.clone(),
            Provenance::Gadget(_) => Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Regularized {
    pub net: FlowNetwork,
    pub rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    pub outer_face: Vec<EdgeId>,
    pub provenance: BTreeMap<EdgeId, Provenance>,
    /// Vertices removed because no flow can pass through them.
    pub dropped: Vec<VertexId>,
}

impl Regularized {
    pub fn plane_graph(&self) -> Result<PlaneGraph> {
        PlaneGraph::new(self.net.clone(), self.rotation.clone(), self.outer_face.clone())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    In,
    Out,
}

struct Work {
    net: FlowNetwork,
    rot: BTreeMap<VertexId, Vec<EdgeId>>,
    prov: BTreeMap<EdgeId, Provenance>,
    /// Darts of the original outer face: edge id and whether it runs tail to head.
    outer_darts: Vec<(EdgeId, bool)>,
    plane: bool,
    dropped: Vec<VertexId>,
}

impl Work {
    fn dir(&self, e: &str, v: &str) -> Dir {
        if self.net.edge(e).and_then(|x| x.head.as_deref()) == Some(v) {
            Dir::In
        } else {
            Dir::Out
        }
    }

    fn is_internal(&self, e: &str) -> bool {
        self.net.edge(e).is_some_and(|x| x.tail.is_some() && x.head.is_some())
    }

    fn originals(&self, e: &str) -> Vec<EdgeId> {
        self.prov.get(e).map(Provenance::originals).unwrap_or_default()
    }

    fn replace_in_rot(&mut self, v: &str, old: &str, new: &[EdgeId]) {
        if let Some(list) = self.rot.get_mut(v) {
            if let Some(pos) = list.iter().position(|e| e == old) {
                list.splice(pos..=pos, new.iter().cloned());
            }
        }
    }

    fn delete_edge(&mut self, e: &str) {
        if let Some(x) = self.net.remove_edge(e) {
            for v in [x.tail, x.head].into_iter().flatten() {
                self.replace_in_rot(&v, e, &[]);
            }
        }
        self.prov.remove(e);
    }

    fn delete_vertex(&mut self, v: &str) {
        for e in self.rot.get(v).cloned().unwrap_or_default() {
            self.delete_edge(&e);
        }
        self.rot.remove(v);
        self.net.remove_vertex(v);
    }

    fn add_edge(&mut self, id: &str, tail: Option<&str>, head: Option<&str>, cap: Capacity, prov: Provenance) {
        self.net.add_edge(id, tail, head, cap);
        self.prov.insert(id.to_string(), prov);
    }

    fn fresh_vertex(&mut self, v: String, rotation: Vec<EdgeId>) {
        self.net.add_vertex(v.clone());
        self.rot.insert(v, rotation);
    }

    /// Moves endpoint `from` of edge `e` to `to`.
    fn reattach(&mut self, e: &str, from: &str, to: &str) {
        let x = self.net.edge(e).cloned().expect("edge to reattach");
        let tail = x.tail.as_deref().map(|t| if t == from { to } else { t });
        let head = x.head.as_deref().map(|h| if h == from { to } else { h });
        self.net.add_edge(e, tail, head, x.cap);
    }

    fn plane_graph(&self, outer: Vec<EdgeId>) -> PlaneGraph {
        PlaneGraph {
            net: self.net.clone(),
            rotation: self.rot.clone(),
            outer_face: outer,
        }
    }

    /// Image of the original outer face, found through the first surviving outer dart.
    fn current_outer(&self) -> Result<Vec<EdgeId>> {
        if !self.plane {
            return Ok(Vec::new());
        }
        let pg = self.plane_graph(Vec::new());
        let faces = pg.derive_faces()?;
        for (orig, forward) in &self.outer_darts {
            let image = faces.edges.iter().enumerate().find(|(_, e)| {
                self.prov.get(*e).is_some_and(|p| p.originals().contains(orig))
            });
            if let Some((k, _)) = image {
                let dart = if *forward { 2 * k } else { 2 * k + 1 };
                return Ok(faces.face_edges(faces.face_of[dart]));
            }
        }
        Ok(Vec::new())
    }

    fn simplify(&mut self) {
        loop {
            let mut changed = false;
            let verts: Vec<VertexId> = self.rot.keys().cloned().collect();
            for v in verts {
                let Some(inc) = self.rot.get(&v).cloned() else { continue };
                match inc.len() {
                    0 => {
                        warn!("dropping isolated vertex `{v}`");
                        self.dropped.push(v.clone());
                        self.delete_vertex(&v);
                        changed = true;
                    }
                    1 if self.is_internal(&inc[0]) => {
                        // A dead end: conservation forces zero flow on its edge.
                        self.dropped.push(v.clone());
                        self.delete_vertex(&v);
                        changed = true;
                    }
                    2 => {
                        let (d0, d1) = (self.dir(&inc[0], &v), self.dir(&inc[1], &v));
                        let internal = (self.is_internal(&inc[0]), self.is_internal(&inc[1]));
                        if d0 != d1 && (internal.0 || internal.1) {
                            let (x, y) = if d0 == Dir::In { (&inc[0], &inc[1]) } else { (&inc[1], &inc[0]) };
                            self.contract(&v, x, y);
                            changed = true;
                        } else if d0 == d1 && internal.0 && internal.1 {
                            self.dropped.push(v.clone());
                            self.delete_vertex(&v);
                            changed = true;
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
    }

    /// Replaces `u -x-> v -y-> w` by one edge `u -> w` of capacity `min(c(x), c(y))`.
    fn contract(&mut self, v: &str, x: &str, y: &str) {
        let ex = self.net.edge(x).cloned().expect("in edge");
        let ey = self.net.edge(y).cloned().expect("out edge");
        let (u, w) = (ex.tail.clone(), ey.head.clone());
        let cap = ex.cap.min(ey.cap);
        let mut origin = self.originals(x);
        origin.extend(self.originals(y));
        self.net.remove_edge(x);
        self.net.remove_edge(y);
        self.prov.remove(x);
        self.prov.remove(y);
        self.rot.remove(v);
        self.net.remove_vertex(v);
        if let Some(u) = u.as_ref().filter(|_| u == w) {
            // A cycle through `v` alone carries no flow between dangling edges.
            self.replace_in_rot(u, x, &[]);
            self.replace_in_rot(u, y, &[]);
            return;
        }
        // Dangling edges keep their ids so the interface is unchanged.
        let id = if ex.tail.is_none() {
            x.to_string()
        } else if ey.head.is_none() {
            y.to_string()
        } else {
            x.min(y).to_string()
        };
        self.add_edge(&id, u.as_deref(), w.as_deref(), cap, Provenance::Contracted(origin.clone()));
        if let Some(u) = &u {
            self.replace_in_rot(u, x, std::slice::from_ref(&id));
        }
        if let Some(w) = &w {
            self.replace_in_rot(w, y, std::slice::from_ref(&id));
        }
        if let (Some(u), Some(w)) = (&u, &w) {
            let parallel = self
                .rot
                .get(u.as_str())
                .into_iter()
                .flatten()
                .find(|e| {
                    **e != id
                        && self.net.edge(e).is_some_and(|z| z.tail.as_deref() == Some(u) && z.head.as_deref() == Some(w))
                })
                .cloned();
            if let Some(z) = parallel {
                // Parallel edges act as one edge with the summed capacity.
                let ez = self.net.edge(&z).cloned().unwrap();
                let mut merged = self.originals(&z);
                merged.extend(origin);
                self.delete_edge(&id);
                self.add_edge(&z, Some(u), Some(w), ez.cap + cap, Provenance::Contracted(merged));
            }
        }
    }

    /// Clockwise corner `i` lies between `inc[i]` and `inc[i + 1]`; returns its peeling round.
    fn corner_rounds(&self, v: &str, inc: &[EdgeId], rounds: &Option<(crate::planar::Faces, Vec<usize>)>) -> Vec<usize> {
        let d = inc.len();
        let Some((faces, round)) = rounds else {
            return vec![0; d];
        };
        let index: BTreeMap<&str, usize> = faces.edges.iter().enumerate().map(|(k, e)| (e.as_str(), k)).collect();
        (0..d)
            .map(|i| {
                // Last internal edge at or before position i.
                let a = (0..d).map(|s| &inc[(i + d - s) % d]).find(|e| index.contains_key(e.as_str()));
                match a {
                    None => 0,
                    Some(a) => {
                        let k = index[a.as_str()];
                        let arriving = if self.dir(a, v) == Dir::In { 2 * k } else { 2 * k + 1 };
                        round[faces.face_of[arriving]]
                    }
                }
            })
            .collect()
    }

    fn expand_all(&mut self) -> Result<()> {
        let big: Vec<VertexId> = self.rot.iter().filter(|(_, l)| l.len() >= 4).map(|(v, _)| v.clone()).collect();
        if big.is_empty() {
            return Ok(());
        }
        let rounds = if self.plane {
            let outer = self.current_outer()?;
            Some(self.plane_graph(outer).face_rounds()?)
        } else {
            None
        };
        for v in big {
            let inc = self.rot[&v].clone();
            let corners = self.corner_rounds(&v, &inc, &rounds);
            self.expand(&v, &inc, &corners);
        }
        Ok(())
    }

    fn expand(&mut self, v: &str, inc: &[EdgeId], corners: &[usize]) {
        let d = inc.len();
        let dirs: Vec<Dir> = inc.iter().map(|e| self.dir(e, v)).collect();
        let changes: Vec<usize> = (0..d).filter(|&i| dirs[i] != dirs[(i + 1) % d]).collect();
        let candidates: Vec<usize> = if changes.is_empty() { (0..d).collect() } else { changes.clone() };
        let wrap = *candidates
            .iter()
            .min_by_key(|&&i| (corners[i], i))
            .expect("at least one corner");
        let order: Vec<EdgeId> = (1..=d).map(|s| inc[(wrap + s) % d].clone()).collect();
        let odirs: Vec<Dir> = (1..=d).map(|s| dirs[(wrap + s) % d]).collect();
        let total: Capacity = inc.iter().map(|e| self.net.cap(e)).sum();
        let gadget = Provenance::Gadget(v.to_string());
        self.rot.remove(v);
        self.net.remove_vertex(v);
        if changes.len() <= 2 {
            // Chain x1 .. x(d-2); inputs all sit on one end.
            let x: Vec<String> = (1..=d - 2).map(|j| format!("{v}#{j}")).collect();
            let c: Vec<String> = (1..d - 2).map(|j| format!("{v}#c{j}")).collect();
            let forward = odirs[0] == Dir::In;
            for (j, id) in c.iter().enumerate() {
                let (a, b) = (&x[j], &x[j + 1]);
                let (t, h) = if forward { (a, b) } else { (b, a) };
                self.add_edge(id, Some(t), Some(h), total, gadget.clone());
            }
            let owner = |i: usize| -> usize {
                if i <= 1 {
                    0
                } else if i >= d - 2 {
                    d - 3
                } else {
                    i - 1
                }
            };
            for (i, e) in order.iter().enumerate() {
                self.reattach(e, v, &x[owner(i)]);
            }
            let last = d - 3;
            for j in 0..=last {
                let rotation = if j == 0 {
                    vec![order[0].clone(), order[1].clone(), c[0].clone()]
                } else if j == last {
                    vec![order[d - 2].clone(), order[d - 1].clone(), c[j - 1].clone()]
                } else {
                    vec![order[j + 1].clone(), c[j].clone(), c[j - 1].clone()]
                };
                self.fresh_vertex(x[j].clone(), rotation);
            }
        } else {
            // Directed ring y0 -> y1 -> .. -> y(d-1) -> y0, one attachment each.
            let y: Vec<String> = (0..d).map(|j| format!("{v}#{j}")).collect();
            let r: Vec<String> = (0..d).map(|j| format!("{v}#r{j}")).collect();
            for j in 0..d {
                self.add_edge(&r[j], Some(&y[j]), Some(&y[(j + 1) % d]), total, gadget.clone());
            }
            for (j, e) in order.iter().enumerate() {
                self.reattach(e, v, &y[j]);
                self.fresh_vertex(y[j].clone(), vec![e.clone(), r[j].clone(), r[(j + d - 1) % d].clone()]);
            }
        }
    }

    fn two_cycles(&self) -> Vec<(EdgeId, EdgeId)> {
        let by_pair: BTreeMap<(&str, &str), &EdgeId> = self
            .net
            .edges()
            .filter_map(|(id, e)| Some(((e.tail.as_deref()?, e.head.as_deref()?), id)))
            .collect();
        by_pair
            .iter()
            .filter_map(|((t, h), x)| {
                let y = by_pair.get(&(*h, *t))?;
                (x < y).then(|| ((*x).clone(), (*y).clone()))
            })
            .collect()
    }

    /// Splits `e` at a new vertex; returns (vertex, first half, second half).
    fn subdivide(&mut self, e: &str) -> (String, EdgeId, EdgeId) {
        let x = self.net.edge(e).cloned().expect("edge");
        let (t, h) = (x.tail.clone().unwrap(), x.head.clone().unwrap());
        let origin = self.originals(e);
        let prov = if origin.len() == 1 {
            Provenance::Half(origin[0].clone())
        } else {
            Provenance::Contracted(origin)
        };
        let s = format!("{e}#s");
        let (a, b) = (format!("{e}#0"), format!("{e}#1"));
        self.net.remove_edge(e);
        self.prov.remove(e);
        self.add_edge(&a, Some(&t), Some(&s), x.cap, prov.clone());
        self.add_edge(&b, Some(&s), Some(&h), x.cap, prov);
        self.replace_in_rot(&t, e, std::slice::from_ref(&a));
        self.replace_in_rot(&h, e, std::slice::from_ref(&b));
        self.fresh_vertex(s.clone(), vec![a.clone(), b.clone()]);
        (s, a, b)
    }

    fn break_two_cycles(&mut self) {
        for (x, y) in self.two_cycles() {
            let (s, x0, x1) = self.subdivide(&x);
            let (t, y0, y1) = self.subdivide(&y);
            let rung = format!("{x}#rung");
            self.add_edge(&rung, Some(&s), Some(&t), Capacity::ZERO, Provenance::Gadget(x.clone()));
            let options = [
                (vec![x0.clone(), x1.clone(), rung.clone()], vec![y0.clone(), y1.clone(), rung.clone()]),
                (vec![x0.clone(), x1.clone(), rung.clone()], vec![y0.clone(), rung.clone(), y1.clone()]),
                (vec![x0.clone(), rung.clone(), x1.clone()], vec![y0.clone(), y1.clone(), rung.clone()]),
                (vec![x0.clone(), rung.clone(), x1.clone()], vec![y0.clone(), rung.clone(), y1.clone()]),
            ];
            let mut placed = false;
            for (rs, rt) in options {
                self.rot.insert(s.clone(), rs);
                self.rot.insert(t.clone(), rt);
                if !self.plane || self.plane_graph(Vec::new()).derive_faces().is_ok() {
                    placed = true;
                    break;
                }
            }
            if !placed {
                // No face holds both edges: pad the midpoints separately instead.
                self.delete_edge(&rung);
                self.rot.insert(s.clone(), vec![x0, x1]);
                self.rot.insert(t.clone(), vec![y0, y1]);
            }
        }
    }

    /// Lifts vertices of degree 1 and 2 to degree 3.
    fn pad(&mut self) {
        let small: Vec<(VertexId, usize)> = self
            .rot
            .iter()
            .filter(|(_, l)| l.len() == 1 || l.len() == 2)
            .map(|(v, l)| (v.clone(), l.len()))
            .collect();
        // A degree-1 vertex keeps only a dangling edge, so it sits alone on
        // the outer face; two of them are joined by a zero-capacity digon.
        let ones: Vec<&VertexId> = small.iter().filter(|(_, d)| *d == 1).map(|(v, _)| v).collect();
        for pair in ones.chunks(2) {
            match pair {
                [u, w] => self.pair(u, w),
                [v] => self.hang_k4(v),
                _ => unreachable!(),
            }
        }
        for (v, _) in small.iter().filter(|(_, d)| *d == 2) {
            self.digon(v);
        }
    }

    fn pair(&mut self, u: &str, w: &str) {
        let (p0, p1) = (format!("{u}#pair.0"), format!("{u}#pair.1"));
        let g = Provenance::Gadget(u.to_string());
        self.add_edge(&p0, Some(u), Some(w), Capacity::ZERO, g.clone());
        self.add_edge(&p1, Some(u), Some(w), Capacity::ZERO, g);
        self.rot.get_mut(u).expect("padded vertex").extend([p0.clone(), p1.clone()]);
        self.rot.get_mut(w).expect("padded vertex").extend([p1, p0]);
    }

    /// Splits a degree-2 vertex `v` into `v` and `v#pad.w` joined by two
    /// parallel edges. An incoming edge stays at `v`; the parallel edges carry
    /// the through capacity, or nothing when both edges point the same way.
    fn digon(&mut self, v: &str) {
        let mut inc = self.rot[v].clone();
        if self.dir(&inc[1], v) == Dir::In && self.dir(&inc[0], v) == Dir::Out {
            inc.swap(0, 1);
        }
        let through = self.dir(&inc[0], v) == Dir::In && self.dir(&inc[1], v) == Dir::Out;
        let cap = if through { self.net.cap(&inc[0]) + self.net.cap(&inc[1]) } else { Capacity::ZERO };
        let w = format!("{v}#pad.w");
        let (p0, p1) = (format!("{v}#pad.0"), format!("{v}#pad.1"));
        self.net.add_vertex(w.clone());
        self.reattach(&inc[1], v, &w);
        let g = Provenance::Gadget(v.to_string());
        self.add_edge(&p0, Some(v), Some(&w), cap, g.clone());
        self.add_edge(&p1, Some(v), Some(&w), cap, g);
        self.rot.insert(v.to_string(), vec![inc[0].clone(), p0.clone(), p1.clone()]);
        self.rot.insert(w, vec![inc[1].clone(), p1, p0]);
    }

    /// Zero-capacity K4 minus an edge, hung from a degree-1 vertex by two stubs.
    fn hang_k4(&mut self, v: &str) {
        let p = |s: &str| format!("{v}#pad.{s}");
        let g = Provenance::Gadget(v.to_string());
        let edges = [
            ("va", "v", "a"),
            ("vb", "v", "b"),
            ("ac", "a", "c"),
            ("ad", "a", "d"),
            ("bc", "b", "c"),
            ("bd", "b", "d"),
            ("cd", "c", "d"),
        ];
        let name = |x: &str| if x == "v" { v.to_string() } else { p(x) };
        for (id, t, h) in edges {
            self.add_edge(&p(id), Some(&name(t)), Some(&name(h)), Capacity::ZERO, g.clone());
        }
        let rotations = [
            ("a", ["va", "ad", "ac"]),
            ("b", ["vb", "bc", "bd"]),
            ("c", ["ac", "cd", "bc"]),
            ("d", ["ad", "bd", "cd"]),
        ];
        for (x, r) in rotations {
            self.fresh_vertex(p(x), r.iter().map(|e| p(e)).collect());
        }
        self.rot.get_mut(v).expect("padded vertex").extend([p("va"), p("vb")]);
    }
}

/// 3-regularizes a plane graph, keeping the embedding.
pub fn three_regularize_plane(pg: &PlaneGraph) -> Result<Regularized> {
    let faces = pg.derive_faces()?;
    let mut outer_darts = Vec::new();
    for (f, face) in faces.faces.iter().enumerate() {
        if face.outer {
            for &d in &faces.faces[f].darts {
                outer_darts.push((faces.edge_of(d).clone(), d % 2 == 0));
            }
        }
    }
    run(pg.net.clone(), pg.rotation.clone(), outer_darts, true)
}

/// 3-regularizes a network without an embedding (rotations are incidence order).
pub fn three_regularize(net: &FlowNetwork) -> Result<Regularized> {
    run(net.clone(), net.incidence_map(), Vec::new(), false)
}

fn run(net: FlowNetwork, rot: BTreeMap<VertexId, Vec<EdgeId>>, outer_darts: Vec<(EdgeId, bool)>, plane: bool) -> Result<Regularized> {
    if !crate::network::validate_network(&net).is_empty() {
        return Err(Error::InvalidNetwork("cannot regularize an invalid network".into()));
    }
    let prov = net.edges().map(|(id, _)| (id.clone(), Provenance::Original(id.clone()))).collect();
    let mut w = Work {
        net,
        rot,
        prov,
        outer_darts,
        plane,
        dropped: Vec::new(),
    };
    w.simplify();
    w.expand_all()?;
    w.break_two_cycles();
    w.pad();
    let outer_face = w.current_outer()?;
    let out = Regularized {
        net: w.net,
        rotation: w.rot,
        outer_face,
        provenance: w.prov,
        dropped: w.dropped,
    };
    if plane {
        out.plane_graph()?;
    }
    Ok(out)
}

/// Checks the structural part of the contract: every degree is 3, no two-edge
/// cycles, the interface is unchanged and sizes stay within nine times the input.
pub fn check_regular(input: &FlowNetwork, out: &FlowNetwork) -> std::result::Result<(), String> {
    if let Some(v) = out.vertices().find(|v| out.degree(v) != 3) {
        return Err(format!("vertex `{v}` has degree {}", out.degree(v)));
    }
    let pairs: BTreeSet<(String, String)> = out
        .internal_edges()
        .iter()
        .map(|id| {
            let e = out.edge(id).unwrap();
            (e.tail.clone().unwrap(), e.head.clone().unwrap())
        })
        .collect();
    if let Some((t, h)) = pairs.iter().find(|(t, h)| pairs.contains(&(h.clone(), t.clone()))) {
        return Err(format!("two-edge cycle between `{t}` and `{h}`"));
    }
    if input.inputs() != out.inputs() || input.outputs() != out.outputs() {
        return Err("dangling edges changed".into());
    }
    let (n, m_all) = (input.vertex_count(), input.edge_count());
    let io = input.io_edges().len();
    if out.vertex_count() > 9 * (n + io) {
        return Err(format!("{} vertices from {n} vertices and {io} dangling edges", out.vertex_count()));
    }
    if out.internal_edges().len() > 9 * m_all {
        return Err(format!("{} internal edges from {m_all} edges", out.internal_edges().len()));
    }
    Ok(())
}
