//! Seeded instance families: small random networks for oracle checks, random
//! reassembling trees, and plane graph families with known edge-outerplanarity.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::network::{EdgeId, FlowNetwork, VertexId};
use crate::planar::PlaneGraph;
use crate::rational::Capacity;
use crate::tree::ReassemblingTree;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_cap(rng: &mut impl Rng) -> Capacity {
    // Mostly integers, sometimes halves, now and then zero.
    match rng.gen_range(0..10) {
        0 => Capacity::ZERO,
        1 => Capacity::from_ratio(rng.gen_range(1..20), 2).expect("positive"),
        _ => Capacity::from_int(rng.gen_range(1..=10)),
    }
}

/// A random network with at most `max_vertices` vertices and `max_io` dangling
/// edges. Two-edge cycles, isolated vertices and disconnected parts all occur.
pub fn random_network(rng: &mut impl Rng, max_vertices: usize, max_io: usize) -> FlowNetwork {
    let nv = rng.gen_range(1..=max_vertices.max(1));
    let mut net = FlowNetwork::new("random");
    let names: Vec<String> = (0..nv).map(|i| format!("v{i:02}")).collect();
    for v in &names {
        net.add_vertex(v.clone());
    }
    let mut k = 0;
    if nv > 1 {
        let density = rng.gen_range(0.0..1.0f64);
        let target = ((nv * (nv - 1)) as f64 * 0.35 * density).ceil() as usize + rng.gen_range(0..nv);
        for _ in 0..target {
            let (t, h) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
            let exists = net
                .internal_edges()
                .iter()
                .any(|id| net.edge(id).is_some_and(|e| e.tail.as_deref() == Some(&names[t]) && e.head.as_deref() == Some(&names[h])));
            if t == h || exists {
                continue;
            }
            net.add_edge(format!("e{k:02}"), Some(&names[t]), Some(&names[h]), random_cap(rng));
            k += 1;
        }
    }
    let io = rng.gen_range(0..=max_io);
    let mut inputs = 0;
    let mut outputs = 0;
    for _ in 0..io {
        let v = &names[rng.gen_range(0..nv)];
        if rng.gen_bool(0.5) {
            net.add_edge(format!("in{inputs}"), None, Some(v), random_cap(rng));
            inputs += 1;
        } else {
            net.add_edge(format!("out{outputs}"), Some(v), None, random_cap(rng));
            outputs += 1;
        }
    }
    net
}

/// A sparse network with integer capacities in `0..=10`: 3 to 12 vertices,
/// at most 8 dangling edges and about 1.5 internal edges per vertex. Two-edge
/// cycles are planted on purpose; sparse draws come out disconnected.
pub fn corpus_network(rng: &mut impl Rng, name: &str) -> FlowNetwork {
    fn int_cap(rng: &mut impl Rng) -> Capacity {
        if rng.gen_bool(0.1) {
            Capacity::ZERO
        } else {
            Capacity::from_int(rng.gen_range(1..=10))
        }
    }
    let nv = rng.gen_range(3..=12);
    let mut net = FlowNetwork::new(name);
    let names: Vec<String> = (0..nv).map(|i| format!("v{i:02}")).collect();
    for v in &names {
        net.add_vertex(v.clone());
    }
    let mut pairs = BTreeSet::new();
    if nv > 1 {
        for _ in 0..rng.gen_range(0..=nv + nv / 2) {
            let (t, h) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
            if t == h || !pairs.insert((t, h)) {
                continue;
            }
            if rng.gen_bool(0.15) {
                pairs.insert((h, t));
            }
        }
    }
    for (k, (t, h)) in pairs.into_iter().enumerate() {
        let cap = int_cap(rng);
        net.add_edge(format!("e{k:02}"), Some(&names[t]), Some(&names[h]), cap);
    }
    let (mut inputs, mut outputs) = (0, 0);
    for _ in 0..rng.gen_range(0..=8) {
        let v = &names[rng.gen_range(0..nv)];
        let cap = int_cap(rng);
        if rng.gen_bool(0.5) {
            net.add_edge(format!("in{inputs}"), None, Some(v), cap);
            inputs += 1;
        } else {
            net.add_edge(format!("out{outputs}"), Some(v), None, cap);
            outputs += 1;
        }
    }
    net
}

/// A uniformly shuffled leaf order split at random points.
pub fn random_tree(net: &FlowNetwork, rng: &mut impl Rng) -> Option<ReassemblingTree> {
    fn build(vs: &[VertexId], rng: &mut impl Rng) -> ReassemblingTree {
        if vs.len() == 1 {
            return ReassemblingTree::leaf(vs[0].clone());
        }
        let cut = rng.gen_range(1..vs.len());
        ReassemblingTree::join(build(&vs[..cut], rng), build(&vs[cut..], rng))
    }
    let mut vs: Vec<VertexId> = net.vertices().cloned().collect();
    if vs.is_empty() {
        return None;
    }
    vs.shuffle(rng);
    Some(build(&vs, rng))
}

/// Incrementally built plane graph with explicit rotations.
struct PlaneBuilder<R: Rng> {
    net: FlowNetwork,
    rotation: BTreeMap<VertexId, Vec<EdgeId>>,
    rng: R,
    next_edge: usize,
}

impl<R: Rng> PlaneBuilder<R> {
    fn new(name: &str, rng: R) -> Self {
        PlaneBuilder {
            net: FlowNetwork::new(name),
            rotation: BTreeMap::new(),
            rng,
            next_edge: 0,
        }
    }

    fn vertex(&mut self, v: &str) {
        self.net.add_vertex(v);
        self.rotation.entry(v.to_string()).or_default();
    }

    /// Randomly oriented edge between `u` and `v`; not yet placed in rotations.
    fn edge(&mut self, u: &str, v: &str) -> EdgeId {
        let id = format!("e{:04}", self.next_edge);
        self.next_edge += 1;
        let cap = Capacity::from_int(self.rng.gen_range(1..=10));
        if self.rng.gen_bool(0.5) {
            self.net.add_edge(id.clone(), Some(u), Some(v), cap);
        } else {
            self.net.add_edge(id.clone(), Some(v), Some(u), cap);
        }
        id
    }

    /// Replaces edge `id` by a path through a new vertex carrying a dangling edge.
    fn subdivide(&mut self, id: &str, io: &str, input: bool) {
        let e = self.net.remove_edge(id).expect("edge to subdivide");
        let (t, h) = (e.tail.unwrap(), e.head.unwrap());
        let s = format!("{io}.s");
        self.vertex(&s);
        let first = format!("{id}.0");
        let second = format!("{id}.1");
        self.net.add_edge(first.clone(), Some(&t), Some(&s), e.cap);
        self.net.add_edge(second.clone(), Some(&s), Some(&h), e.cap);
        let cap = Capacity::from_int(self.rng.gen_range(1..=10));
        if input {
            self.net.add_edge(io, None, Some(&s), cap);
        } else {
            self.net.add_edge(io, Some(&s), None, cap);
        }
        for (v, new) in [(&t, &first), (&h, &second)] {
            for slot in self.rotation.get_mut(v.as_str()).expect("endpoint").iter_mut() {
                if slot == id {
                    *slot = new.clone();
                }
            }
        }
        self.rotation.insert(s, vec![first, second, io.to_string()]);
    }

    /// Finish with the outer face traced through the dart `from -> to` along `edge`.
    fn finish(self, edge: &str, from: &str) -> Result<PlaneGraph> {
        let pg = PlaneGraph {
            net: self.net,
            rotation: self.rotation,
            outer_face: Vec::new(),
        };
        let faces = pg.derive_faces()?;
        let k = faces
            .edges
            .iter()
            .position(|e| e == edge)
            .ok_or_else(|| Error::InvalidEmbedding(format!("no internal edge `{edge}`")))?;
        let tail = pg.net.edge(edge).and_then(|e| e.tail.clone());
        let dart = if tail.as_deref() == Some(from) { 2 * k } else { 2 * k + 1 };
        let outer_face = faces.face_edges(faces.face_of[dart]);
        PlaneGraph::new(pg.net, pg.rotation, outer_face)
    }
}

/// `half` is the first half of a subdivided counterclockwise ring edge whose
/// lower endpoint is `lower`. The outer face runs clockwise, from the higher
/// position to the lower one; returns the start of that dart along `half`.
fn clockwise_start<R: Rng>(b: &PlaneBuilder<R>, half: &str, lower: &str) -> String {
    let tail = b.net.edge(half).and_then(|e| e.tail.clone()).expect("half edge");
    if tail == lower {
        "in.s".to_string()
    } else {
        tail
    }
}

/// Slots of a ring vertex, clockwise: next ring neighbour, outward, previous, inward.
#[derive(Default, Clone)]
struct Slots {
    next: Option<EdgeId>,
    out: Option<EdgeId>,
    prev: Option<EdgeId>,
    inward: Option<EdgeId>,
}

impl Slots {
    fn rotation(&self) -> Vec<EdgeId> {
        [&self.next, &self.out, &self.prev, &self.inward]
            .into_iter()
            .flatten()
            .cloned()
            .collect()
    }
}

/// Concentric rings of length `l` (positions counterclockwise). Ring 0 is
/// outermost. Position `i` of ring `r` has a radial spoke inward when
/// `i + r` is even; the outer ring closes its odd positions with outer chords
/// `(4j+1, 4j+3)` and the inner ring closes the others with inner chords.
/// Every vertex has degree 3. Returns vertex names and their slots.
fn rings<R: Rng>(
    b: &mut PlaneBuilder<R>,
    prefix: &str,
    count: usize,
    l: usize,
) -> (Vec<Vec<String>>, Vec<Vec<Slots>>) {
    let names: Vec<Vec<String>> = (0..count)
        .map(|r| (0..l).map(|i| format!("{prefix}r{r}p{i}")).collect())
        .collect();
    let mut slots = vec![vec![Slots::default(); l]; count];
    for row in &names {
        for v in row {
            b.vertex(v);
        }
    }
    for r in 0..count {
        for i in 0..l {
            let j = (i + 1) % l;
            let e = b.edge(&names[r][i], &names[r][j]);
            slots[r][i].next = Some(e.clone());
            slots[r][j].prev = Some(e);
            if (i + r) % 2 == 0 && r + 1 < count {
                let e = b.edge(&names[r][i], &names[r + 1][i]);
                slots[r][i].inward = Some(e.clone());
                slots[r + 1][i].out = Some(e);
            }
        }
    }
    for i in (1..l).step_by(4) {
        let e = b.edge(&names[0][i], &names[0][(i + 2) % l]);
        slots[0][i].out = Some(e.clone());
        slots[0][(i + 2) % l].out = Some(e);
    }
    let r = count - 1;
    let first = r % 2;
    for i in (first..l).step_by(4) {
        let e = b.edge(&names[r][i], &names[r][(i + 2) % l]);
        slots[r][i].inward = Some(e.clone());
        slots[r][(i + 2) % l].inward = Some(e);
    }
    (names, slots)
}

fn commit<R: Rng>(b: &mut PlaneBuilder<R>, names: &[Vec<String>], slots: &[Vec<Slots>]) {
    for (row, srow) in names.iter().zip(slots) {
        for (v, s) in row.iter().zip(srow) {
            b.rotation.insert(v.clone(), s.rotation());
        }
    }
}

/// Ring length for `rings` ring count and about `n` vertices: a multiple of 4, at least 8.
fn ring_length(n: usize, count: usize) -> usize {
    let per = (n as f64 / count as f64 / 4.0).round() as usize * 4;
    per.max(8)
}

/// A cycle on `n` vertices with one input and one output; every edge lies on
/// the outer face so the edge-outerplanarity is 1. Not 3-regular.
pub fn cycle_with_io(n: usize, seed: u64) -> Result<PlaneGraph> {
    let n = n.max(3);
    let mut b = PlaneBuilder::new("cycle", rng(seed));
    let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    for v in &names {
        b.vertex(v);
    }
    let ids: Vec<EdgeId> = (0..n).map(|i| b.edge(&names[i], &names[(i + 1) % n])).collect();
    for i in 0..n {
        b.rotation.insert(names[i].clone(), vec![ids[i].clone(), ids[(i + n - 1) % n].clone()]);
    }
    let (e_in, e_out) = (ids[0].clone(), ids[n / 2].clone());
    b.subdivide(&e_in, "in", true);
    b.subdivide(&e_out, "out", false);
    let outer = format!("{e_in}.0");
    b.finish(&outer, "c0")
}

/// `k - 1` nested rings closed by chords, about `n` vertices, with an input and
/// an output on the outer face. Edge-outerplanarity is exactly `k`: the outer
/// chords and the uncovered outer ring edges form the first layer and each
/// further ring adds one layer, the inner chords forming the last.
/// For `k = 1` this is [`cycle_with_io`].
pub fn nested_cycles(k: usize, n: usize, seed: u64) -> Result<PlaneGraph> {
    if k <= 1 {
        return cycle_with_io(n, seed);
    }
    let count = k - 1;
    let l = ring_length(n, count);
    let mut b = PlaneBuilder::new(&format!("nested-cycles-k{k}"), rng(seed));
    let (names, slots) = rings(&mut b, "", count, l);
    commit(&mut b, &names, &slots);
    // Edges (3,4) and (l-1,0) of the outer ring are never under a chord.
    let top = slots[0][3].next.clone().unwrap();
    let bottom = slots[0][l - 1].next.clone().unwrap();
    b.subdivide(&top, "in", true);
    b.subdivide(&bottom, "out", false);
    let outer_edge = format!("{top}.0");
    let from = clockwise_start(&b, &outer_edge, &names[0][3]);
    b.finish(&outer_edge, &from)
}

/// A row of `k - 1`-ring blocks of ring length 8, neighbouring blocks joined by
/// replacing a facing pair of outer chords with two edges. Adding blocks keeps
/// the edge-outerplanarity at `k` and the width of the row constant.
/// For `k = 1` this is [`cycle_with_io`].
pub fn path_of_rings(k: usize, n: usize, seed: u64) -> Result<PlaneGraph> {
    if k <= 1 {
        return cycle_with_io(n, seed);
    }
    let count = k - 1;
    let blocks = ((n as f64) / (8.0 * count as f64)).round().max(1.0) as usize;
    let mut b = PlaneBuilder::new(&format!("path-of-rings-k{k}"), rng(seed));
    let mut all = Vec::new();
    for blk in 0..blocks {
        all.push(rings(&mut b, &format!("b{blk}"), count, 8));
    }
    // Outer chords are (1,3), facing right, and (5,7), facing left.
    for blk in 0..blocks.saturating_sub(1) {
        let right = all[blk].1[0][1].out.clone().unwrap();
        let left = all[blk + 1].1[0][5].out.clone().unwrap();
        b.net.remove_edge(&right);
        b.net.remove_edge(&left);
        let (a1, a3) = (all[blk].0[0][1].clone(), all[blk].0[0][3].clone());
        let (c5, c7) = (all[blk + 1].0[0][5].clone(), all[blk + 1].0[0][7].clone());
        let upper = b.edge(&a3, &c5);
        let lower = b.edge(&a1, &c7);
        all[blk].1[0][3].out = Some(upper.clone());
        all[blk + 1].1[0][5].out = Some(upper);
        all[blk].1[0][1].out = Some(lower.clone());
        all[blk + 1].1[0][7].out = Some(lower);
    }
    for (names, slots) in &all {
        commit(&mut b, names, slots);
    }
    let top = all[0].1[0][3].next.clone().unwrap();
    let last = blocks - 1;
    let bottom = all[last].1[0][7].next.clone().unwrap();
    let anchor = all[0].0[0][3].clone();
    b.subdivide(&top, "in", true);
    b.subdivide(&bottom, "out", false);
    let outer_edge = format!("{top}.0");
    let from = clockwise_start(&b, &outer_edge, &anchor);
    b.finish(&outer_edge, &from)
}

/// Two `l`-cycles joined by `l` spokes (the cube for `l = 4`), with an input and
/// an output subdividing outer edges. Edge-outerplanarity 2.
pub fn prism(l: usize, seed: u64) -> Result<PlaneGraph> {
    let l = l.max(3);
    let mut b = PlaneBuilder::new(&format!("prism-{l}"), rng(seed));
    let outer: Vec<String> = (0..l).map(|i| format!("o{i}")).collect();
    let inner: Vec<String> = (0..l).map(|i| format!("i{i}")).collect();
    for v in outer.iter().chain(&inner) {
        b.vertex(v);
    }
    let mut so = vec![Slots::default(); l];
    let mut si = vec![Slots::default(); l];
    for i in 0..l {
        let j = (i + 1) % l;
        let e = b.edge(&outer[i], &outer[j]);
        so[i].next = Some(e.clone());
        so[j].prev = Some(e);
        let e = b.edge(&inner[i], &inner[j]);
        si[i].next = Some(e.clone());
        si[j].prev = Some(e);
        let e = b.edge(&outer[i], &inner[i]);
        so[i].inward = Some(e.clone());
        si[i].out = Some(e);
    }
    commit(&mut b, &[outer.clone(), inner], &[so.clone(), si]);
    let first = so[0].next.clone().unwrap();
    let second = so[l / 2].next.clone().unwrap();
    b.subdivide(&first, "in", true);
    b.subdivide(&second, "out", false);
    let outer_edge = format!("{first}.0");
    let from = clockwise_start(&b, &outer_edge, "o0");
    b.finish(&outer_edge, &from)
}

pub fn cube(seed: u64) -> Result<PlaneGraph> {
    prism(4, seed)
}

/// A random simple 3-regular plane graph on `n` vertices (`n` rounded up to an
/// even number, at least 4): the dual of a random triangulation of the sphere
/// grown by vertex insertions and shuffled by edge flips. No dangling edges.
pub fn random_plane_cubic(n: usize, seed: u64) -> Result<PlaneGraph> {
    let n = n.max(4).div_ceil(2) * 2;
    let mut rng = rng(seed);
    // Triangles as counterclockwise vertex triples; two copies of the first
    // triangle glued along their boundary make the sphere.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    let mut next_vertex = 3;
    while faces.len() < n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        let v = next_vertex;
        next_vertex += 1;
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    let degree = |faces: &[[usize; 3]], v: usize| faces.iter().filter(|f| f.contains(&v)).count();
    let adjacent = |faces: &[[usize; 3]], u: usize, v: usize| {
        faces.iter().any(|f| (0..3).any(|i| f[i] == u && f[(i + 1) % 3] == v))
    };
    for _ in 0..2 * n {
        // Flip a random directed edge (a, b) of face [a, b, c] with its twin [b, a, d].
        let f = rng.gen_range(0..faces.len());
        let i = rng.gen_range(0..3);
        let (a, b, c) = (faces[f][i], faces[f][(i + 1) % 3], faces[f][(i + 2) % 3]);
        let Some(g) = faces
            .iter()
            .position(|t| (0..3).any(|j| t[j] == b && t[(j + 1) % 3] == a))
        else {
            continue;
        };
        let j = (0..3).find(|&j| faces[g][j] == b).unwrap();
        let d = faces[g][(j + 2) % 3];
        if c == d || adjacent(&faces, c, d) || degree(&faces, a) < 4 || degree(&faces, b) < 4 {
            continue;
        }
        faces[f] = [c, a, d];
        faces[g] = [d, b, c];
    }

    let mut b = PlaneBuilder::new("random-plane-cubic", rng);
    let names: Vec<String> = (0..faces.len()).map(|f| format!("f{f:03}")).collect();
    for v in &names {
        b.vertex(v);
    }
    // Undirected primal edge -> the two faces it borders.
    let mut sides: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (f, t) in faces.iter().enumerate() {
        for i in 0..3 {
            let (u, v) = (t[i], t[(i + 1) % 3]);
            sides.entry((u.min(v), u.max(v))).or_default().push(f);
        }
    }
    let mut dual: BTreeMap<(usize, usize), EdgeId> = BTreeMap::new();
    for (key, fs) in &sides {
        if fs.len() != 2 {
            return Err(Error::InvalidEmbedding("triangulation edge without two sides".into()));
        }
        let id = b.edge(&names[fs[0]], &names[fs[1]]);
        dual.insert(*key, id);
    }
    for (f, t) in faces.iter().enumerate() {
        // Counterclockwise boundary order reversed gives the clockwise rotation.
        let rot: Vec<EdgeId> = (0..3)
            .rev()
            .map(|i| {
                let (u, v) = (t[i], t[(i + 1) % 3]);
                dual[&(u.min(v), u.max(v))].clone()
            })
            .collect();
        b.rotation.insert(names[f].clone(), rot);
    }
    let pg = PlaneGraph {
        net: b.net,
        rotation: b.rotation,
        outer_face: Vec::new(),
    };
    // With no outer face named, the largest face is chosen.
    let faces = pg.derive_faces()?;
    let outer = faces
        .faces
        .iter()
        .position(|f| f.outer)
        .expect("connected graph has an outer face");
    let outer_face = faces.face_edges(outer);
    PlaneGraph::new(pg.net, pg.rotation, outer_face)
}

/// [`random_plane_cubic`] with an input and an output subdividing two outer-face edges.
pub fn random_planar(n: usize, seed: u64) -> Result<PlaneGraph> {
    let pg = random_plane_cubic(n.saturating_sub(2), seed)?;
    let mut b = PlaneBuilder {
        net: pg.net,
        rotation: pg.rotation,
        rng: rng(seed ^ 0x5eed),
        next_edge: 0,
    };
    b.net.name = "random-planar".into();
    let mut outer = pg.outer_face.clone();
    outer.sort();
    let (first, second) = (outer[0].clone(), outer[outer.len() / 2].clone());
    b.subdivide(&first, "in", true);
    b.subdivide(&second, "out", false);
    let pg = PlaneGraph {
        net: b.net,
        rotation: b.rotation,
        outer_face: Vec::new(),
    };
    // Both halves of a subdivided outer edge stay on the outer face; name it
    // by the halves plus the untouched outer edges.
    let outer_face: Vec<EdgeId> = outer
        .into_iter()
        .flat_map(|e| {
            if e == first || e == second {
                vec![format!("{e}.0"), format!("{e}.1")]
            } else {
                vec![e]
            }
        })
        .collect();
    PlaneGraph::new(pg.net, pg.rotation, outer_face)
}

/// Vertex degrees counting dangling edges are all 3.
pub fn is_cubic(net: &FlowNetwork) -> bool {
    net.vertices().all(|v| net.degree(v) == 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_peel_to_their_k() {
        for k in 1..=4 {
            for n in [16, 40] {
                let pg = nested_cycles(k, n, 7).unwrap();
                assert_eq!(pg.peel_edge_layers().unwrap().k, k, "nested k={k} n={n}");
                let pg = path_of_rings(k, n, 7).unwrap();
                assert_eq!(pg.peel_edge_layers().unwrap().k, k, "path k={k} n={n}");
                if k > 1 {
                    assert!(is_cubic(&pg.net));
                }
            }
        }
        for l in [3, 4, 7] {
            let pg = prism(l, 1).unwrap();
            assert!(is_cubic(&pg.net));
            assert_eq!(pg.peel_edge_layers().unwrap().k, 2);
        }
        assert_eq!(cube(0).unwrap().net.vertex_count(), 10);
    }

    #[test]
    fn random_cubic_graphs_are_plane_and_cubic() {
        for seed in 0..30 {
            let pg = random_plane_cubic(4 + 2 * (seed as usize % 20), seed).unwrap();
            assert!(is_cubic(&pg.net));
            let nv = pg.net.vertex_count() as i64;
            let faces = pg.derive_faces().unwrap().len() as i64;
            assert_eq!(nv - pg.net.edge_count() as i64 + faces, 2);
            let pg = random_planar(30, seed).unwrap();
            assert!(is_cubic(&pg.net));
            assert_eq!(pg.net.io_edges().len(), 2);
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(path_of_rings(3, 50, 4).unwrap(), path_of_rings(3, 50, 4).unwrap());
        let a = random_network(&mut rng(9), 12, 8);
        let b = random_network(&mut rng(9), 12, 8);
        assert_eq!(a, b);
        assert!(crate::network::validate_network(&a).is_empty());
    }

    #[test]
    fn path_of_rings_sizes() {
        let pg = path_of_rings(2, 400, 0).unwrap();
        assert_eq!(pg.net.vertex_count(), 402);
        assert_eq!(pg.net.inputs().len(), 1);
        assert_eq!(pg.net.outputs().len(), 1);
    }
}
