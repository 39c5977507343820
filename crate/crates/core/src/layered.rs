//! Reassembling trees with small α for plane graphs.
//!
//! A tree is built from a vertex order: the order is cut into consecutive
//! blocks, each block becomes a left comb, and the blocks are joined by a left
//! comb. For a given order the cut points are chosen by dynamic programming to
//! minimize the largest boundary of any tree node. Several orders are tried:
//! greedy sweeps that always add the vertex with most neighbours already placed,
//! started from different vertices and with random tie-breaking, and the order
//! in which the edge peeling reaches the vertices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use log::warn;
use rand::Rng;

use crate::error::{Error, Result};
use crate::generators;
use crate::network::{FlowNetwork, VertexId};
use crate::planar::PlaneGraph;
use crate::tree::{alpha_measure, ReassemblingTree};

/// Largest block the dynamic program considers.
pub const MAX_BLOCK: usize = 24;

/// Sweeps with random tie-breaking tried in addition to the deterministic ones.
pub const RANDOM_SWEEPS: usize = 48;

#[derive(Debug, Clone)]
pub struct LayeredTree {
    pub tree: ReassemblingTree,
    pub alpha: usize,
    /// Edge-outerplanarity of the embedding.
    pub k: usize,
}

impl LayeredTree {
    pub fn within_target(&self) -> bool {
        self.alpha <= 2 * self.k
    }
}

/// Internal-edge adjacency with multiplicity, vertices numbered in id order.
struct Graph {
    names: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    fn new(net: &FlowNetwork) -> Self {
        let names: Vec<VertexId> = net.vertices().cloned().collect();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut adj = vec![Vec::new(); names.len()];
        for id in net.internal_edges() {
            let e = net.edge(&id).expect("edge");
            let (t, h) = (index[e.tail.as_deref().unwrap()], index[e.head.as_deref().unwrap()]);
            adj[t].push(h);
            adj[h].push(t);
        }
        Graph { names, adj }
    }

    fn len(&self) -> usize {
        self.names.len()
    }

    /// Greedy sweep from `start`: add the outside vertex with most placed
    /// neighbours; ties go to the vertex whose first placed neighbour is oldest.
    fn sweep(&self, start: usize) -> Vec<usize> {
        self.sweep_with(start, &[])
    }

    /// Like `sweep`, but after neighbour counts ties are broken by `priority`
    /// (higher first) when it is non-empty.
    fn sweep_with(&self, start: usize, priority: &[u32]) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut hits = vec![0usize; n];
        let mut first_seen = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut next_start = 0;
        let mut current = Some(start);
        while order.len() < n {
            let v = match current.take() {
                Some(v) => v,
                None => {
                    let best = (0..n)
                        .filter(|&v| !placed[v] && hits[v] > 0)
                        .max_by(|&a, &b| {
                            let by_priority = match priority {
                                [] => std::cmp::Ordering::Equal,
                                p => p[a].cmp(&p[b]),
                            };
                            hits[a]
                                .cmp(&hits[b])
                                .then(by_priority)
                                .then(first_seen[b].cmp(&first_seen[a]))
                                .then(b.cmp(&a))
                        });
                    match best {
                        Some(v) => v,
                        None => {
                            // Next component.
                            while placed[next_start] {
                                next_start += 1;
                            }
                            next_start
                        }
                    }
                }
            };
            placed[v] = true;
            let t = order.len();
            order.push(v);
            for &w in &self.adj[v] {
                if !placed[w] {
                    hits[w] += 1;
                    if first_seen[w] == usize::MAX {
                        first_seen[w] = t;
                    }
                }
            }
        }
        order
    }

    /// Cuts `order` into blocks minimizing the largest node boundary; returns
    /// (cost, block end positions).
    fn best_blocks(&self, order: &[usize], max_block: usize) -> (usize, Vec<usize>) {
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // Boundary of every prefix.
        let mut prefix = vec![0usize; n + 1];
        let mut b: i64 = 0;
        for (i, &v) in order.iter().enumerate() {
            let inside = self.adj[v].iter().filter(|&&w| pos[w] < i).count() as i64;
            b += self.adj[v].len() as i64 - 2 * inside;
            prefix[i + 1] = b as usize;
        }
        let mut best = vec![usize::MAX; n + 1];
        let mut choice = vec![0usize; n + 1];
        best[0] = 0;
        for a in 0..n {
            if best[a] == usize::MAX {
                continue;
            }
            let mut bnd: i64 = 0;
            let mut worst = 0usize;
            for t in a..n.min(a + max_block) {
                let v = order[t];
                let inside = self.adj[v].iter().filter(|&&w| pos[w] >= a && pos[w] < t).count() as i64;
                bnd += self.adj[v].len() as i64 - 2 * inside;
                worst = worst.max(bnd as usize).max(self.adj[v].len());
                let j = t + 1;
                let cost = best[a].max(worst).max(prefix[j]);
                if cost < best[j] {
                    best[j] = cost;
                    choice[j] = a;
                }
            }
        }
        let mut ends = Vec::new();
        let mut j = n;
        while j > 0 {
            ends.push(j);
            j = choice[j];
        }
        ends.reverse();
        (best[n], ends)
    }

    fn tree(&self, order: &[usize], ends: &[usize]) -> Option<ReassemblingTree> {
        let mut start = 0;
        let mut blocks = Vec::new();
        for &end in ends {
            let names: Vec<&str> = order[start..end].iter().map(|&v| self.names[v].as_str()).collect();
            blocks.push(ReassemblingTree::left_comb(&names)?);
            start = end;
        }
        let mut it = blocks.into_iter();
        let first = it.next()?;
        Some(it.fold(first, ReassemblingTree::join))
    }
}

/// Order in which edge peeling reaches the vertices: by layer, and within a
/// layer by a walk along that layer's edges from the smallest vertex.
fn peel_order(pg: &PlaneGraph, g: &Graph) -> Result<Vec<usize>> {
    let layers = pg.peel_edge_layers()?;
    let index: BTreeMap<&str, usize> = g.names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut vertex_layer = vec![usize::MAX; g.len()];
    let mut layer_adj: Vec<BTreeMap<usize, Vec<usize>>> = vec![BTreeMap::new(); layers.k];
    for (i, layer) in layers.layers.iter().enumerate() {
        for id in layer {
            let e = pg.net.edge(id).expect("edge");
            let (t, h) = (index[e.tail.as_deref().unwrap()], index[e.head.as_deref().unwrap()]);
            for (a, b) in [(t, h), (h, t)] {
                vertex_layer[a] = vertex_layer[a].min(i);
                layer_adj[i].entry(a).or_default().push(b);
            }
        }
    }
    let mut placed = vec![false; g.len()];
    let mut order = Vec::with_capacity(g.len());
    for (i, adj) in layer_adj.iter().enumerate() {
        let members: BTreeSet<usize> = (0..g.len()).filter(|&v| vertex_layer[v] == i).collect();
        for &s in &members {
            if placed[s] {
                continue;
            }
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                if placed[v] || !members.contains(&v) {
                    continue;
                }
                placed[v] = true;
                order.push(v);
                for &w in adj.get(&v).into_iter().flatten().rev() {
                    stack.push(w);
                }
            }
        }
    }
    order.extend((0..g.len()).filter(|&v| !placed[v]));
    Ok(order)
}

/// Start vertices for sweeps: up to `count` vertices spread over the order
/// of a breadth-first search from vertex 0, plus the outer-face vertices.
fn starts(g: &Graph, outer: &[usize], count: usize) -> Vec<usize> {
    let mut seen = vec![false; g.len()];
    let mut bfs = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        bfs.push(v);
        for &w in &g.adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    let mut out: BTreeSet<usize> = outer.iter().copied().collect();
    let step = (bfs.len() / count.max(1)).max(1);
    out.extend(bfs.iter().step_by(step).copied());
    out.into_iter().collect()
}

fn best_tree(g: &Graph, orders: Vec<Vec<usize>>) -> Option<(ReassemblingTree, usize)> {
    let (cost, order, ends) = orders
        .into_iter()
        .map(|o| {
            let (c, ends) = g.best_blocks(&o, MAX_BLOCK);
            (c, o, ends)
        })
        .min_by_key(|(c, _, _)| *c)?;
    Some((g.tree(&order, &ends)?, cost))
}

/// Sweep-based tree for any network (no embedding needed).
pub fn sweep_reassembling(net: &FlowNetwork) -> Result<(ReassemblingTree, usize)> {
    let g = Graph::new(net);
    if g.len() == 0 {
        return Err(Error::InvalidTree("network has no vertices".into()));
    }
    let orders = starts(&g, &[], 12).into_iter().map(|s| g.sweep(s)).collect();
    let (tree, _) = best_tree(&g, orders).expect("non-empty");
    let alpha = alpha_measure(net, &tree);
    Ok((tree, alpha))
}

/// Tree for a 3-regular plane graph (degrees count dangling edges), aiming at
/// α ≤ 2k. A larger α is reported with a warning; the tree is valid either way.
pub fn layered_reassembling(pg: &PlaneGraph) -> Result<LayeredTree> {
    if let Some(v) = pg.net.vertices().find(|v| pg.net.degree(v) != 3) {
        return Err(Error::NotCubic(format!("vertex `{v}` has degree {}", pg.net.degree(v))));
    }
    let g = Graph::new(&pg.net);
    if g.len() == 0 {
        return Err(Error::InvalidTree("network has no vertices".into()));
    }
    let k = pg.peel_edge_layers()?.k;
    let index: BTreeMap<&str, usize> = g.names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let outer: BTreeSet<usize> = pg
        .outer_face
        .iter()
        .filter_map(|id| pg.net.edge(id))
        .flat_map(|e| [e.tail.clone(), e.head.clone()])
        .flatten()
        .map(|v| index[v.as_str()])
        .collect();
    let outer: Vec<usize> = outer.into_iter().collect();
    let starts = starts(&g, &outer, 12);
    let mut orders: Vec<Vec<usize>> = starts.iter().map(|&s| g.sweep(s)).collect();
    orders.push(peel_order(pg, &g)?);
    let mut rng = generators::rng(0);
    for trial in 0..RANDOM_SWEEPS {
        let priority: Vec<u32> = (0..g.len()).map(|_| rng.gen()).collect();
        orders.push(g.sweep_with(starts[trial % starts.len()], &priority));
    }
    let (tree, _) = best_tree(&g, orders).expect("non-empty");
    let alpha = alpha_measure(&pg.net, &tree);
    if alpha > 2 * k {
        warn!("{}: reassembling tree has α = {alpha} > 2k = {}", pg.net.name, 2 * k);
    }
    Ok(LayeredTree { tree, alpha, k })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_meets_target() {
        let mut report = Vec::new();
        for k in 2..=4 {
            for n in [24, 48, 100, 200] {
                for (name, pg) in [
                    ("nested", generators::nested_cycles(k, n, 3).unwrap()),
                    ("path", generators::path_of_rings(k, n, 3).unwrap()),
                ] {
                    let t = layered_reassembling(&pg).unwrap();
                    t.tree.validate(&pg.net).unwrap();
                    report.push((name, k, n, t.alpha, t.k));
                }
            }
        }
        let big = generators::path_of_rings(2, 400, 0).unwrap();
        let t = layered_reassembling(&big).unwrap();
        report.push(("path", 2, 400, t.alpha, t.k));
        for l in [3, 4, 6, 10] {
            let pg = generators::prism(l, 0).unwrap();
            let t = layered_reassembling(&pg).unwrap();
            report.push(("prism", 2, l, t.alpha, t.k));
        }
        let bad: Vec<_> = report.iter().filter(|r| r.3 > 2 * r.4).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn small_examples() {
        let coords: BTreeMap<String, (f64, f64)> =
            [("v1", (0.0, 0.0)), ("v2", (1.0, 0.0)), ("v3", (0.0, 1.0))].into_iter().map(|(v, p)| (v.to_string(), p)).collect();
        let tri = PlaneGraph::from_coordinates(crate::fixtures::triangle(), &coords).unwrap();
        let reg = crate::regularize::three_regularize_plane(&tri).unwrap().plane_graph().unwrap();
        let t = layered_reassembling(&reg).unwrap();
        assert_eq!(t.k, 1);
        assert!(t.alpha <= 2, "α = {}", t.alpha);

        // Already cubic: each corner has one stub.
        let mut net = crate::fixtures::triangle();
        net.add_edge("c", Some("v2"), None, crate::Capacity::from_int(1));
        let stubs = PlaneGraph::from_coordinates(net, &coords).unwrap();
        let t = layered_reassembling(&stubs).unwrap();
        assert_eq!((t.k, t.alpha), (1, 2));

        let t = layered_reassembling(&generators::prism(3, 0).unwrap()).unwrap();
        assert_eq!(t.k, 2);
        assert!(t.alpha <= 4);
        let t = layered_reassembling(&generators::path_of_rings(2, 40, 0).unwrap()).unwrap();
        assert_eq!(t.k, 2);
        assert!(t.alpha <= 4);
    }

    #[test]
    fn rejects_non_cubic() {
        let pg = generators::cycle_with_io(6, 0).unwrap();
        assert!(matches!(layered_reassembling(&pg), Err(Error::NotCubic(_))));
        let (tree, alpha) = sweep_reassembling(&pg.net).unwrap();
        tree.validate(&pg.net).unwrap();
        assert_eq!(alpha, 2);
    }
}
