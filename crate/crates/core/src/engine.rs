//! Reassembly engine: builds a network back up one edge splice at a time
//! while maintaining the maxFromTo table of every intermediate component.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use log::debug;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::network::{EdgeId, FlowNetwork, VertexId};
use crate::rational::Capacity;
use crate::tree::{alpha_measure, ReassemblingTree};
use crate::typing::{SubsetIndex, SubsetTable, Typing};

/// A dangling edge of a component.
///
/// `Head(e)` is the half of internal edge `e` that enters its head vertex and is
/// an input of the component holding the head; `Tail(e)` leaves the tail vertex
/// and is an output of the component holding the tail.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dangling {
    Io(EdgeId),
    Head(EdgeId),
    Tail(EdgeId),
}

impl Dangling {
    /// Edge name inside [`Component::to_network`].
    pub fn name(&self) -> String {
        match self {
            Dangling::Io(e) => e.clone(),
            Dangling::Head(e) => format!("{e}#h"),
            Dangling::Tail(e) => format!("{e}#t"),
        }
    }

    pub fn is_half(&self) -> bool {
        !matches!(self, Dangling::Io(_))
    }
}

impl fmt::Display for Dangling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An intermediate network with its complete maxFromTo table.
#[derive(Debug, Clone)]
pub struct Component {
    pub id: usize,
    pub vertices: BTreeSet<VertexId>,
    /// Internal edges of the original network already spliced inside this component.
    pub spliced: BTreeSet<EdgeId>,
    pub inputs: Vec<Dangling>,
    pub outputs: Vec<Dangling>,
    /// Indexed by `a | (b << inputs.len())`.
    pub table: Vec<Capacity>,
}

impl Component {
    pub fn p(&self) -> usize {
        self.inputs.len()
    }

    pub fn q(&self) -> usize {
        self.outputs.len()
    }

    /// `p + q`, the log2 of the table size.
    pub fn dangling_count(&self) -> usize {
        self.p() + self.q()
    }

    /// Dangling halves of internal edges (inputs and outputs).
    pub fn half_count(&self) -> usize {
        self.inputs.iter().chain(&self.outputs).filter(|d| d.is_half()).count()
    }

    pub fn get(&self, a: usize, b: usize) -> Capacity {
        self.table[a | (b << self.p())]
    }

    fn position(list: &[Dangling], d: &Dangling) -> Result<usize> {
        list.iter()
            .position(|x| x == d)
            .ok_or_else(|| Error::Splice(format!("`{d}` is not dangling here")))
    }

    /// The component as a standalone network whose edges carry [`Dangling::name`].
    pub fn to_network(&self, net: &FlowNetwork) -> FlowNetwork {
        let mut out = FlowNetwork::new(format!("component-{}", self.id));
        for v in &self.vertices {
            out.add_vertex(v.clone());
        }
        for id in &self.spliced {
            let e = net.edge(id).expect("spliced edge exists");
            out.add_edge(id.clone(), e.tail.as_deref(), e.head.as_deref(), e.cap);
        }
        for d in self.inputs.iter().chain(&self.outputs) {
            let (id, tail, head) = match d {
                Dangling::Io(id) => {
                    let e = net.edge(id).expect("io edge exists");
                    (id, e.tail.clone(), e.head.clone())
                }
                Dangling::Head(id) => (id, None, net.edge(id).and_then(|e| e.head.clone())),
                Dangling::Tail(id) => (id, net.edge(id).and_then(|e| e.tail.clone()), None),
            };
            out.add_edge(d.name(), tail.as_deref(), head.as_deref(), net.cap(id));
        }
        out
    }

    /// The table re-keyed by [`Dangling::name`]s, comparable with the oracle's.
    pub fn subset_table(&self) -> SubsetTable {
        let index = SubsetIndex::new(
            self.inputs.iter().map(Dangling::name).collect(),
            self.outputs.iter().map(Dangling::name).collect(),
        );
        // Names sort differently from `Dangling` ordering; permute the table.
        let mut sorted_in = index.inputs.clone();
        sorted_in.sort();
        let mut sorted_out = index.outputs.clone();
        sorted_out.sort();
        let target = SubsetIndex::new(sorted_in, sorted_out);
        let in_pos: Vec<usize> = index
            .inputs
            .iter()
            .map(|n| target.inputs.iter().position(|x| x == n).unwrap())
            .collect();
        let out_pos: Vec<usize> = index
            .outputs
            .iter()
            .map(|n| target.outputs.iter().position(|x| x == n).unwrap())
            .collect();
        let mut values = vec![Capacity::ZERO; target.len()];
        for (idx, v) in self.table.iter().enumerate() {
            let (a, b) = index.split(idx);
            let ta = remap(a, &in_pos);
            let tb = remap(b, &out_pos);
            values[target.index(ta, tb)] = *v;
        }
        SubsetTable { index: target, values }
    }
}

fn remap(mask: usize, pos: &[usize]) -> usize {
    pos.iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .fold(0, |acc, (_, &p)| acc | 1 << p)
}

/// One reassembly step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpliceEvent {
    /// Splice `edge` whose endpoints lie in the two distinct components.
    Case1 { edge: EdgeId, left: usize, right: usize },
    /// Splice `edge` whose endpoints both lie in `comp`.
    Case2 { edge: EdgeId, comp: usize },
    /// Juxtapose two components with no edge between them.
    Union { left: usize, right: usize },
}

impl fmt::Display for SpliceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpliceEvent::Case1 { edge, left, right } => write!(f, "CASE1({edge}; {left}, {right})"),
            SpliceEvent::Case2 { edge, comp } => write!(f, "CASE2({edge}; {comp})"),
            SpliceEvent::Union { left, right } => write!(f, "UNION({left}, {right})"),
        }
    }
}

/// Leaves get component ids `0..n` in vertex order; event `k` creates id `n + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceSequence {
    pub leaves: Vec<VertexId>,
    pub events: Vec<SpliceEvent>,
}

/// Post-order walk of the tree. At every inner node the edges crossing the two
/// children are spliced in ascending id order: the first joins the children,
/// the rest close cycles inside the joined component.
pub fn tree_to_splice_sequence(net: &FlowNetwork, tree: &ReassemblingTree) -> Result<SpliceSequence> {
    tree.validate(net)?;
    let leaves: Vec<VertexId> = net.vertices().cloned().collect();
    let leaf_id: BTreeMap<&str, usize> = leaves.iter().enumerate().map(|(k, v)| (v.as_str(), k)).collect();
    let internal: Vec<(EdgeId, VertexId, VertexId)> = net
        .internal_edges()
        .into_iter()
        .map(|id| {
            let e = net.edge(&id).expect("listed edge");
            let (t, h) = (e.tail.clone().unwrap(), e.head.clone().unwrap());
            (id, t, h)
        })
        .collect();
    let mut events = Vec::new();
    let mut next = leaves.len();

    fn walk(
        t: &ReassemblingTree,
        leaf_id: &BTreeMap<&str, usize>,
        internal: &[(EdgeId, VertexId, VertexId)],
        events: &mut Vec<SpliceEvent>,
        next: &mut usize,
    ) -> (usize, BTreeSet<VertexId>) {
        match t {
            ReassemblingTree::Leaf(v) => (leaf_id[v.as_str()], BTreeSet::from([v.clone()])),
            ReassemblingTree::Node(l, r) => {
                let (li, ls) = walk(l, leaf_id, internal, events, next);
                let (ri, rs) = walk(r, leaf_id, internal, events, next);
                let crossing: Vec<&EdgeId> = internal
                    .iter()
                    .filter(|(_, t, h)| {
                        (ls.contains(t) && rs.contains(h)) || (rs.contains(t) && ls.contains(h))
                    })
                    .map(|(id, _, _)| id)
                    .collect();
                let mut cur = match crossing.first() {
                    Some(e) => SpliceEvent::Case1 {
                        edge: (*e).clone(),
                        left: li,
                        right: ri,
                    },
                    None => SpliceEvent::Union { left: li, right: ri },
                };
                events.push(cur);
                let mut id = *next;
                *next += 1;
                for e in crossing.iter().skip(1) {
                    cur = SpliceEvent::Case2 {
                        edge: (*e).clone(),
                        comp: id,
                    };
                    events.push(cur);
                    id = *next;
                    *next += 1;
                }
                let mut set = ls;
                set.extend(rs);
                (id, set)
            }
        }
    }

    walk(tree, &leaf_id, &internal, &mut events, &mut next);
    Ok(SpliceSequence { leaves, events })
}

/// Instrumented arithmetic on table entries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub min: u64,
    pub plus: u64,
    pub minus: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.min + self.plus + self.minus
    }

    fn absorb(&mut self, other: OpCounts) {
        self.min += other.min;
        self.plus += other.plus;
        self.minus += other.minus;
    }
}

#[derive(Debug, Default)]
struct OpCounter {
    total: OpCounts,
    entry: OpCounts,
    max_plus_minus: u64,
    max_min: u64,
}

impl OpCounter {
    fn add(&mut self, x: Capacity, y: Capacity) -> Capacity {
        self.entry.plus += 1;
        x + y
    }

    fn sub(&mut self, x: Capacity, y: Capacity) -> Result<Capacity> {
        self.entry.minus += 1;
        x.checked_sub(y)
            .ok_or_else(|| Error::Splice(format!("table not monotone: {x} - {y} < 0")))
    }

    fn min(&mut self, x: Capacity, y: Capacity) -> Capacity {
        self.entry.min += 1;
        x.min(y)
    }

    fn end_entry(&mut self) {
        let e = std::mem::take(&mut self.entry);
        self.max_plus_minus = self.max_plus_minus.max(e.plus + e.minus);
        self.max_min = self.max_min.max(e.min);
        self.total.absorb(e);
    }
}

/// Measurements of one reassembly run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EngineStats {
    /// Largest `p + q` over all components, dangling IO edges included.
    pub delta: usize,
    /// Largest number of dangling halves of internal edges over all components.
    pub delta_internal: usize,
    /// Largest number of internal edges crossing a tree node.
    pub alpha: usize,
    /// Operations spent on splices and unions.
    pub ops: OpCounts,
    /// Operations spent filling leaf tables.
    pub basis_ops: OpCounts,
    /// Table entries over all components, leaves included.
    pub entries: u64,
    pub components: usize,
    pub splices: usize,
    pub max_plus_minus_per_entry: u64,
    pub max_min_per_entry: u64,
}

impl EngineStats {
    pub fn to_json(&self) -> Value {
        json!({
            "delta": self.delta,
            "alpha": self.alpha,
            "ops": { "min": self.ops.min, "plus": self.ops.plus, "minus": self.ops.minus },
            "entries": self.entries,
        })
    }
}

fn sorted(mut v: Vec<Dangling>) -> Vec<Dangling> {
    v.sort();
    v
}

/// Bit `k` of a combined `(a, b)` index of the new component, translated into
/// one part's combined index (zero when the bit belongs to another part).
fn translation(new_in: &[Dangling], new_out: &[Dangling], part: &Component) -> Vec<usize> {
    let p = part.p();
    let mut out = Vec::with_capacity(new_in.len() + new_out.len());
    for d in new_in {
        out.push(part.inputs.iter().position(|x| x == d).map_or(0, |k| 1 << k));
    }
    for d in new_out {
        out.push(part.outputs.iter().position(|x| x == d).map_or(0, |k| 1 << (k + p)));
    }
    out
}

/// `index -> part index` for every index of a table with the given bit translation.
fn index_map(bits: &[usize]) -> Vec<usize> {
    let len = 1usize << bits.len();
    let mut map = vec![0usize; len];
    for idx in 1..len {
        let low = idx.trailing_zeros() as usize;
        map[idx] = map[idx & (idx - 1)] | bits[low];
    }
    map
}

/// Leaf component of vertex `v`: maxFromTo of a single vertex is `min(c(A), c(B))`.
fn basis_component(net: &FlowNetwork, v: &str, id: usize, ops: &mut OpCounter) -> Component {
    let mut inputs = Vec::new();
    let mut outputs = Vec::new();
    for e in net.incident(v) {
        let edge = net.edge(&e).expect("incident edge");
        match (edge.tail.as_deref(), edge.head.as_deref()) {
            (None, Some(_)) => inputs.push(Dangling::Io(e)),
            (Some(_), None) => outputs.push(Dangling::Io(e)),
            (Some(t), Some(h)) => {
                if h == v {
                    inputs.push(Dangling::Head(e.clone()));
                }
                if t == v {
                    outputs.push(Dangling::Tail(e));
                }
            }
            (None, None) => {}
        }
    }
    let inputs = sorted(inputs);
    let outputs = sorted(outputs);
    let cap = |d: &Dangling| match d {
        Dangling::Io(e) | Dangling::Head(e) | Dangling::Tail(e) => net.cap(e),
    };
    // Subset sums, one addition per non-empty subset.
    let sums = |list: &[Dangling], ops: &mut OpCounter| -> Vec<Capacity> {
        let mut s = vec![Capacity::ZERO; 1 << list.len()];
        for m in 1..s.len() {
            let low = m.trailing_zeros() as usize;
            s[m] = ops.add(s[m & (m - 1)], cap(&list[low]));
            ops.end_entry();
        }
        s
    };
    let sa = sums(&inputs, ops);
    let sb = sums(&outputs, ops);
    let p = inputs.len();
    let mut table = Vec::with_capacity(1 << (p + outputs.len()));
    for idx in 0..(1usize << (p + outputs.len())) {
        table.push(ops.min(sa[idx & ((1 << p) - 1)], sb[idx >> p]));
        ops.end_entry();
    }
    Component {
        id,
        vertices: BTreeSet::from([v.to_string()]),
        spliced: BTreeSet::new(),
        inputs,
        outputs,
        table,
    }
}

/// Splice `edge` between two components; either may hold the tail.
fn splice_case1(net: &FlowNetwork, edge: &str, x: &Component, y: &Component, id: usize, ops: &mut OpCounter) -> Result<Component> {
    let e = net
        .edge(edge)
        .ok_or_else(|| Error::Splice(format!("unknown edge `{edge}`")))?;
    let (tail, head) = (e.tail.as_deref().unwrap_or(""), e.head.as_deref().unwrap_or(""));
    let (tc, hc) = if x.vertices.contains(tail) && y.vertices.contains(head) {
        (x, y)
    } else if y.vertices.contains(tail) && x.vertices.contains(head) {
        (y, x)
    } else {
        return Err(Error::Splice(format!("`{edge}` does not join components {} and {}", x.id, y.id)));
    };
    let e1 = Dangling::Head(edge.to_string());
    let e2 = Dangling::Tail(edge.to_string());
    let e1_bit = 1usize << Component::position(&hc.inputs, &e1)?;
    let e2_bit = 1usize << (Component::position(&tc.outputs, &e2)? + tc.p());

    let inputs = sorted(hc.inputs.iter().filter(|d| **d != e1).chain(&tc.inputs).cloned().collect());
    let outputs = sorted(hc.outputs.iter().chain(tc.outputs.iter().filter(|d| **d != e2)).cloned().collect());
    let hmap = index_map(&translation(&inputs, &outputs, hc));
    let tmap = index_map(&translation(&inputs, &outputs, tc));

    let mut table = Vec::with_capacity(hmap.len());
    for idx in 0..hmap.len() {
        let (hi, ti) = (hmap[idx], tmap[idx]);
        let (h0, t0) = (hc.table[hi], tc.table[ti]);
        // Extra flow through the spliced edge: what the head side can still
        // absorb from e1 versus what the tail side can still push into e2.
        let gain_h = ops.sub(hc.table[hi | e1_bit], h0)?;
        let gain_t = ops.sub(tc.table[ti | e2_bit], t0)?;
        let base = ops.add(h0, t0);
        let m = ops.min(gain_h, gain_t);
        table.push(ops.add(base, m));
        ops.end_entry();
    }
    let mut vertices = hc.vertices.clone();
    vertices.extend(tc.vertices.iter().cloned());
    let mut spliced: BTreeSet<EdgeId> = hc.spliced.union(&tc.spliced).cloned().collect();
    spliced.insert(edge.to_string());
    Ok(Component { id, vertices, spliced, inputs, outputs, table })
}

/// Splice `edge` whose halves are both dangling from `c`.
fn splice_case2(edge: &str, c: &Component, id: usize, ops: &mut OpCounter) -> Result<Component> {
    let e1 = Dangling::Head(edge.to_string());
    let e2 = Dangling::Tail(edge.to_string());
    let e1_bit = 1usize << Component::position(&c.inputs, &e1)?;
    let e2_bit = 1usize << (Component::position(&c.outputs, &e2)? + c.p());
    let inputs: Vec<Dangling> = c.inputs.iter().filter(|d| **d != e1).cloned().collect();
    let outputs: Vec<Dangling> = c.outputs.iter().filter(|d| **d != e2).cloned().collect();
    let map = index_map(&translation(&inputs, &outputs, c));
    let mut table = Vec::with_capacity(map.len());
    for &ci in &map {
        let t0 = c.table[ci];
        let gain_in = ops.sub(c.table[ci | e1_bit], t0)?;
        let gain_out = ops.sub(c.table[ci | e2_bit], t0)?;
        let m = ops.min(gain_in, gain_out);
        table.push(ops.add(t0, m));
        ops.end_entry();
    }
    let mut spliced = c.spliced.clone();
    spliced.insert(edge.to_string());
    Ok(Component {
        id,
        vertices: c.vertices.clone(),
        spliced,
        inputs,
        outputs,
        table,
    })
}

/// Two components with no edge between them: tables add.
fn union(x: &Component, y: &Component, id: usize, ops: &mut OpCounter) -> Component {
    let inputs = sorted(x.inputs.iter().chain(&y.inputs).cloned().collect());
    let outputs = sorted(x.outputs.iter().chain(&y.outputs).cloned().collect());
    let xmap = index_map(&translation(&inputs, &outputs, x));
    let ymap = index_map(&translation(&inputs, &outputs, y));
    let table = (0..xmap.len())
        .map(|idx| {
            let v = ops.add(x.table[xmap[idx]], y.table[ymap[idx]]);
            ops.end_entry();
            v
        })
        .collect();
    let mut vertices = x.vertices.clone();
    vertices.extend(y.vertices.iter().cloned());
    Component {
        id,
        vertices,
        spliced: x.spliced.union(&y.spliced).cloned().collect(),
        inputs,
        outputs,
        table,
    }
}

/// Replays `seq`, calling `observe` on every component as it is created
/// (leaves first). Returns the root component.
pub fn run_sequence(
    net: &FlowNetwork,
    seq: &SpliceSequence,
    stats: &mut EngineStats,
    observe: &mut dyn FnMut(&Component),
) -> Result<Component> {
    let mut ops = OpCounter::default();
    let mut comps: Vec<Option<Component>> = Vec::with_capacity(seq.leaves.len() + seq.events.len());
    let record = |c: &Component, stats: &mut EngineStats| {
        stats.delta = stats.delta.max(c.dangling_count());
        stats.delta_internal = stats.delta_internal.max(c.half_count());
        stats.entries += c.table.len() as u64;
        stats.components += 1;
    };
    for (k, v) in seq.leaves.iter().enumerate() {
        let c = basis_component(net, v, k, &mut ops);
        record(&c, stats);
        observe(&c);
        comps.push(Some(c));
    }
    stats.basis_ops = ops.total;
    ops.total = OpCounts::default();
    ops.max_min = 0;
    ops.max_plus_minus = 0;

    let take = |comps: &mut Vec<Option<Component>>, id: usize| -> Result<Component> {
        comps
            .get_mut(id)
            .and_then(Option::take)
            .ok_or_else(|| Error::Splice(format!("component {id} is missing or already consumed")))
    };
    for ev in &seq.events {
        let id = comps.len();
        let c = match ev {
            SpliceEvent::Case1 { edge, left, right } => {
                let (x, y) = (take(&mut comps, *left)?, take(&mut comps, *right)?);
                stats.splices += 1;
                splice_case1(net, edge, &x, &y, id, &mut ops)?
            }
            SpliceEvent::Case2 { edge, comp } => {
                let x = take(&mut comps, *comp)?;
                stats.splices += 1;
                splice_case2(edge, &x, id, &mut ops)?
            }
            SpliceEvent::Union { left, right } => {
                let (x, y) = (take(&mut comps, *left)?, take(&mut comps, *right)?);
                union(&x, &y, id, &mut ops)
            }
        };
        debug!("{ev} -> component {id} with {} dangling edges", c.dangling_count());
        record(&c, stats);
        observe(&c);
        comps.push(Some(c));
    }
    stats.ops = ops.total;
    stats.max_plus_minus_per_entry = ops.max_plus_minus;
    stats.max_min_per_entry = ops.max_min;
    let root = comps.pop().flatten().ok_or_else(|| Error::Splice("empty network".into()))?;
    if comps.iter().any(Option::is_some) {
        return Err(Error::Splice("sequence leaves unconsumed components".into()));
    }
    Ok(root)
}

/// Runs the engine along `tree`, observing every intermediate component.
pub fn run_reassembling_observed(
    net: &FlowNetwork,
    tree: &ReassemblingTree,
    observe: &mut dyn FnMut(&Component),
) -> Result<(Component, EngineStats)> {
    let seq = tree_to_splice_sequence(net, tree)?;
    let mut stats = EngineStats {
        alpha: alpha_measure(net, tree),
        ..EngineStats::default()
    };
    let root = run_sequence(net, &seq, &mut stats, observe)?;
    Ok((root, stats))
}

pub fn run_reassembling(net: &FlowNetwork, tree: &ReassemblingTree) -> Result<(Component, EngineStats)> {
    run_reassembling_observed(net, tree, &mut |_| {})
}

/// The root table keyed by the network's own input and output lists.
pub fn root_table(net: &FlowNetwork, root: &Component) -> Result<SubsetTable> {
    if root.half_count() != 0 {
        return Err(Error::Splice("root component still has dangling halves".into()));
    }
    let table = root.subset_table();
    let expected = SubsetIndex::of_network(net);
    if table.index != expected {
        return Err(Error::Splice("root interface differs from the network's".into()));
    }
    Ok(table)
}

/// Principal typing computed by reassembling along `tree`.
pub fn principal_typing_reassembled(net: &FlowNetwork, tree: &ReassemblingTree) -> Result<(Typing, EngineStats)> {
    let (root, stats) = run_reassembling(net, tree)?;
    Ok((root_table(net, &root)?.principal_typing(&net.name), stats))
}
