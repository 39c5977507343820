//! Planar embedding for small networks.
//!
//! Each biconnected block of the underlying simple graph is embedded by path
//! insertion (Demoucron, Malgrange and Pertuiset); blocks are glued at cut
//! vertices by concatenating their rotations. Parallel edges are kept side by
//! side and dangling edges go last in each rotation. Quadratic or worse, meant
//! for desk-sized inputs only.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::network::{EdgeId, FlowNetwork, VertexId};
use crate::planar::PlaneGraph;

pub const DEFAULT_EMBED_LIMIT: usize = 64;

/// Clockwise neighbour order per vertex.
type Rotation = BTreeMap<usize, Vec<usize>>;

/// Some plane embedding of `net`, or `None` when it is not planar. The outer
/// face of each component is its largest face (ties: smallest edge id).
pub fn embed_small(net: &FlowNetwork, limit: usize) -> Result<Option<PlaneGraph>> {
    let n = net.vertex_count();
    if n > limit {
        return Err(Error::LimitExceeded { what: "network", unit: "vertices", actual: n, limit });
    }
    let names: Vec<VertexId> = net.vertices().cloned().collect();
    let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut between: BTreeMap<(usize, usize), Vec<EdgeId>> = BTreeMap::new();
    for id in net.internal_edges() {
        let e = net.edge(&id).expect("edge");
        let (t, h) = (index[e.tail.as_deref().unwrap()], index[e.head.as_deref().unwrap()]);
        if t == h {
            return Err(Error::InvalidEmbedding(format!("self-loop `{id}`")));
        }
        adj[t].insert(h);
        adj[h].insert(t);
        between.entry((t.min(h), t.max(h))).or_default().push(id);
    }

    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(&adj) {
        let r = if block.len() == 2 {
            Rotation::from([(block[0], vec![block[1]]), (block[1], vec![block[0]])])
        } else {
            match embed_block(&adj, &block) {
                Some(r) => r,
                None => return Ok(None),
            }
        };
        for (v, list) in r {
            rot[v].extend(list);
        }
    }

    let mut rotation = BTreeMap::new();
    for (v, name) in names.iter().enumerate() {
        let mut list = Vec::new();
        for &u in &rot[v] {
            let mut ids = between[&(v.min(u), v.max(u))].clone();
            ids.sort();
            // A bundle reads in opposite orders from its two ends.
            if v > u {
                ids.reverse();
            }
            list.extend(ids);
        }
        let mut dangling: Vec<EdgeId> = net
            .incident(name)
            .into_iter()
            .filter(|id| net.edge(id).is_some_and(|e| e.tail.is_none() || e.head.is_none()))
            .collect();
        dangling.sort();
        list.extend(dangling);
        rotation.insert(name.clone(), list);
    }
    PlaneGraph::new(net.clone(), rotation, Vec::new()).map(Some)
}

/// Vertex sets of the biconnected blocks with at least one edge.
fn blocks(adj: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        adj: &'a [BTreeSet<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<usize>>,
    }
    fn visit(s: &mut State, v: usize, parent: Option<usize>) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for &w in s.adj[v].iter() {
            if Some(w) == parent {
                continue;
            }
            if s.disc[w] == 0 {
                s.stack.push((v, w));
                visit(s, w, Some(v));
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = s.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    s.out.push(block.into_iter().collect());
                }
            } else if s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = adj.len();
    let mut s = State { adj, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            visit(&mut s, v, None);
        }
    }
    s.out
}

/// Faces as dart lists: after arriving at `v` from `u`, leave along the
/// neighbour that follows `u` clockwise at `v`.
fn faces(rot: &Rotation) -> Vec<Vec<(usize, usize)>> {
    let next = |u: usize, v: usize| {
        let l = &rot[&v];
        let i = l.iter().position(|&x| x == u).expect("dart in rotation");
        l[(i + 1) % l.len()]
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (&u, list) in rot {
        for &v in list {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                face.push((a, b));
                let c = next(a, b);
                (a, b) = (b, c);
            }
            out.push(face);
        }
    }
    out
}

fn embed_block(adj: &[BTreeSet<usize>], block: &[usize]) -> Option<Rotation> {
    let inside: BTreeSet<usize> = block.iter().copied().collect();
    let nbrs = |v: usize| adj[v].iter().copied().filter(|w| inside.contains(w));
    let edge_total: usize = block.iter().map(|&v| nbrs(v).count()).sum::<usize>() / 2;

    // Initial cycle: an edge plus a shortest detour around it.
    let (s, t) = (block[0], nbrs(block[0]).next()?);
    let mut prev = BTreeMap::from([(s, s)]);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for w in nbrs(v) {
            if (v, w) != (s, t) && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    let mut cycle = vec![t];
    while *cycle.last().unwrap() != s {
        cycle.push(prev[cycle.last().unwrap()]);
    }
    let mut rot = Rotation::new();
    let len = cycle.len();
    for i in 0..len {
        rot.insert(cycle[i], vec![cycle[(i + len - 1) % len], cycle[(i + 1) % len]]);
    }
    let mut edges = len;

    while edges < edge_total {
        let fs = faces(&rot);
        let face_sets: Vec<BTreeSet<usize>> = fs.iter().map(|f| f.iter().map(|d| d.1).collect()).collect();
        // Fragments as (attachments, path between two of them).
        let mut fragments: Vec<(BTreeSet<usize>, Vec<usize>)> = Vec::new();
        for &v in block.iter().filter(|v| rot.contains_key(v)) {
            for w in nbrs(v) {
                if v < w && rot.contains_key(&w) && !rot[&v].contains(&w) {
                    fragments.push((BTreeSet::from([v, w]), vec![v, w]));
                }
            }
        }
        let mut done: BTreeSet<usize> = BTreeSet::new();
        for &c in block.iter().filter(|v| !rot.contains_key(v)) {
            if done.contains(&c) {
                continue;
            }
            let mut comp = BTreeSet::from([c]);
            let mut attach = BTreeSet::new();
            let mut queue = VecDeque::from([c]);
            while let Some(v) = queue.pop_front() {
                for w in nbrs(v) {
                    if rot.contains_key(&w) {
                        attach.insert(w);
                    } else if comp.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            done.extend(comp.iter().copied());
            let path = fragment_path(&nbrs, &comp, &attach);
            fragments.push((attach, path));
        }
        let (path, face) = fragments
            .iter()
            .map(|(attach, path)| {
                let ok: Vec<usize> = (0..fs.len()).filter(|&f| attach.is_subset(&face_sets[f])).collect();
                (ok, path)
            })
            .min_by_key(|(ok, _)| ok.len())
            .and_then(|(ok, path)| Some((path.clone(), *ok.first()?)))?;

        let (a, b, m) = (path[0], path[path.len() - 1], path.len() - 1);
        let corner = |x: usize| fs[face].iter().find(|d| d.1 == x).expect("attachment on face").0;
        let (p, r) = (corner(a), corner(b));
        let insert_after = |rot: &mut Rotation, v: usize, after: usize, new: usize| {
            let l = rot.get_mut(&v).unwrap();
            let i = l.iter().position(|&x| x == after).unwrap();
            l.insert(i + 1, new);
        };
        insert_after(&mut rot, a, p, path[1]);
        insert_after(&mut rot, b, r, path[m - 1]);
        for i in 1..m {
            rot.insert(path[i], vec![path[i - 1], path[i + 1]]);
        }
        edges += m;
    }
    Some(rot)
}

/// Path from the smallest attachment through `comp` to another attachment.
fn fragment_path<I: Iterator<Item = usize>>(nbrs: &impl Fn(usize) -> I, comp: &BTreeSet<usize>, attach: &BTreeSet<usize>) -> Vec<usize> {
    let a = *attach.first().expect("fragment attaches");
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for w in nbrs(a).filter(|w| comp.contains(w)) {
        prev.entry(w).or_insert(a);
        queue.push_back(w);
    }
    while let Some(v) = queue.pop_front() {
        if let Some(b) = nbrs(v).find(|&w| w != a && attach.contains(&w)) {
            let mut path = vec![b, v];
            while *path.last().unwrap() != a {
                path.push(prev[path.last().unwrap()]);
            }
            path.reverse();
            return path;
        }
        for w in nbrs(v).filter(|w| comp.contains(w)) {
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(w) {
                e.insert(v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Capacity;

    fn graph(edges: &[(&str, &str)]) -> FlowNetwork {
        let mut net = FlowNetwork::new("g");
        for (i, (t, h)) in edges.iter().enumerate() {
            net.add_vertex(*t).add_vertex(*h);
            net.add_edge(format!("e{i:02}"), Some(t), Some(h), Capacity::from_int(1));
        }
        net
    }

    fn complete(k: usize) -> FlowNetwork {
        let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let pairs: Vec<(&str, &str)> =
            (0..k).flat_map(|i| ((i + 1)..k).map(move |j| (i, j))).map(|(i, j)| (names[i].as_str(), names[j].as_str())).collect();
        graph(&pairs)
    }

    #[test]
    fn small_graphs() {
        let k4 = embed_small(&complete(4), DEFAULT_EMBED_LIMIT).unwrap().unwrap();
        assert_eq!(k4.derive_faces().unwrap().faces.len(), 4);
        assert_eq!(k4.peel_edge_layers().unwrap().k, 2);
        assert!(embed_small(&complete(5), DEFAULT_EMBED_LIMIT).unwrap().is_none());
        let k33 = graph(&[("a", "x"), ("a", "y"), ("a", "z"), ("b", "x"), ("b", "y"), ("b", "z"), ("c", "x"), ("c", "y"), ("c", "z")]);
        assert!(embed_small(&k33, DEFAULT_EMBED_LIMIT).unwrap().is_none());
        let tree = graph(&[("r", "a"), ("r", "b"), ("a", "c"), ("a", "d"), ("b", "e")]);
        assert_eq!(embed_small(&tree, DEFAULT_EMBED_LIMIT).unwrap().unwrap().peel_edge_layers().unwrap().k, 1);
    }

    #[test]
    fn blocks_parallel_edges_and_stubs() {
        // Two triangles sharing a cut vertex, a two-edge cycle, and IO edges.
        let mut net = graph(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "c"), ("e", "f"), ("f", "e")]);
        net.add_edge("in", None, Some("a"), Capacity::from_int(1));
        net.add_edge("out", Some("f"), None, Capacity::from_int(1));
        let pg = embed_small(&net, DEFAULT_EMBED_LIMIT).unwrap().unwrap();
        // V - E + F = 2 with 6 vertices and 8 edges.
        assert_eq!(pg.derive_faces().unwrap().faces.len(), 4);
        assert_eq!(pg.peel_edge_layers().unwrap().k, 1);
    }

    #[test]
    fn generated_plane_graphs_embed() {
        for seed in 0..5 {
            let pg = crate::generators::random_plane_cubic(30, seed).unwrap();
            let again = embed_small(&pg.net, DEFAULT_EMBED_LIMIT).unwrap().expect("planar");
            let f = again.derive_faces().unwrap().faces.len();
            assert_eq!(pg.net.vertex_count() + f, pg.net.internal_edges().len() + 2);
        }
        let pg = crate::generators::nested_cycles(3, 40, 0).unwrap();
        assert!(embed_small(&pg.net, DEFAULT_EMBED_LIMIT).unwrap().is_some());
    }

    #[test]
    fn limit_is_enforced() {
        let net = crate::generators::prism(40, 0).unwrap().net;
        assert!(matches!(embed_small(&net, 64), Err(Error::LimitExceeded { limit: 64, .. })));
    }
}
