//! Brute-force ground truth: maxFromTo via classical max-flow, principal
//! typings by enumeration, boundary-condition feasibility, and sampling-based
//! principality checks.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::maxflow::MaxFlow;
use crate::network::{is_feasible, io_restriction, EdgeId, EdgeValues, Flow, FlowNetwork, IoAssignment};
use crate::rational::{Capacity, Rational};
use crate::typing::{satisfies_typing, SubsetIndex, SubsetTable, Typing};

/// Default refusal threshold on `|E_in| + |E_out|` for exhaustive oracles.
pub const DEFAULT_ORACLE_LIMIT: usize = 12;

/// Dense vertex numbering plus the network's input/output lists.
struct Layout {
    index: BTreeMap<String, usize>,
}

impl Layout {
    fn new(net: &FlowNetwork) -> Self {
        Layout {
            index: net.vertices().enumerate().map(|(i, v)| (v.clone(), i)).collect(),
        }
    }

    fn of(&self, v: &Option<String>) -> usize {
        self.index[v.as_deref().expect("endpoint present")]
    }

    /// Max-flow graph over the internal edges; returns arc index per internal edge.
    fn graph(&self, net: &FlowNetwork, extra_nodes: usize) -> (MaxFlow, BTreeMap<EdgeId, usize>) {
        let mut g = MaxFlow::new(self.index.len() + extra_nodes);
        let mut arcs = BTreeMap::new();
        for id in net.internal_edges() {
            let e = net.edge(&id).expect("edge");
            let arc = g.add_edge(self.of(&e.tail), self.of(&e.head), e.cap.value());
            arcs.insert(id, arc);
        }
        (g, arcs)
    }
}

fn check_pair(net: &FlowNetwork, a: &[&str], b: &[&str]) -> Result<()> {
    for id in a {
        match net.edge(id).and_then(|e| e.kind()) {
            Some(crate::network::EdgeKind::Input) => {}
            _ => return Err(Error::InvalidSubsetPair(format!("`{id}` is not an input edge"))),
        }
    }
    for id in b {
        match net.edge(id).and_then(|e| e.kind()) {
            Some(crate::network::EdgeKind::Output) => {}
            _ => return Err(Error::InvalidSubsetPair(format!("`{id}` is not an output edge"))),
        }
    }
    Ok(())
}

/// Maximum flow from inputs `a` to outputs `b` with every other dangling edge
/// blocked. The blocked edges are deleted, `a` and `b` are joined to fresh
/// super edges whose capacities are the sums they aggregate.
pub fn max_from_to(net: &FlowNetwork, a: &[&str], b: &[&str]) -> Result<Capacity> {
    check_pair(net, a, b)?;
    let layout = Layout::new(net);
    let (mut g, _) = layout.graph(net, 4);
    let n = layout.index.len();
    let (fresh_in, s, t, fresh_out) = (n, n + 1, n + 2, n + 3);
    let sum_a: Rational = a.iter().map(|id| net.cap(id).value()).sum();
    let sum_b: Rational = b.iter().map(|id| net.cap(id).value()).sum();
    g.add_edge(fresh_in, s, sum_a);
    g.add_edge(t, fresh_out, sum_b);
    let in_arcs: Vec<usize> = a
        .iter()
        .map(|id| {
            let e = net.edge(id).expect("checked");
            g.add_edge(s, layout.of(&e.head), e.cap.value())
        })
        .collect();
    let out_arcs: Vec<usize> = b
        .iter()
        .map(|id| {
            let e = net.edge(id).expect("checked");
            g.add_edge(layout.of(&e.tail), t, e.cap.value())
        })
        .collect();
    let value = g.run(fresh_in, fresh_out);
    // The A-side and B-side definitions of maxFromTo must agree.
    let f_a: Rational = in_arcs.iter().map(|&x| g.flow(x)).sum();
    let f_b: Rational = out_arcs.iter().map(|&x| g.flow(x)).sum();
    assert_eq!(f_a, f_b, "maxFromTo: f(A) != f(B) on {}", net.name);
    assert_eq!(f_a, value);
    Capacity::new(value)
}

/// maxFromTo for every `(A, B)` pair, indexed by [`SubsetIndex`].
pub fn max_from_to_table(net: &FlowNetwork, limit: usize) -> Result<SubsetTable> {
    let index = SubsetIndex::of_network(net);
    let io = index.p() + index.q();
    if io > limit {
        return Err(Error::LimitExceeded {
            what: "network",
            unit: "dangling edges",
            actual: io,
            limit,
        });
    }
    let mut values = Vec::with_capacity(index.len());
    for k in 0..index.len() {
        let (a, b) = index.split(k);
        let (aa, bb) = (index.a_ids(a), index.b_ids(b));
        let ar: Vec<&str> = aa.iter().map(String::as_str).collect();
        let br: Vec<&str> = bb.iter().map(String::as_str).collect();
        values.push(max_from_to(net, &ar, &br)?);
    }
    Ok(SubsetTable { index, values })
}

/// Principal typing by exhaustive max-flow evaluation.
pub fn principal_typing_oracle(net: &FlowNetwork, limit: usize) -> Result<Typing> {
    Ok(max_from_to_table(net, limit)?.principal_typing(&net.name))
}

/// A maxFromToAft query `(A1, B1 | A2, B2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AftQuery<'a> {
    pub a1: Vec<&'a str>,
    pub b1: Vec<&'a str>,
    pub a2: Vec<&'a str>,
    pub b2: Vec<&'a str>,
}

fn sorted<'a>(v: &[&'a str]) -> Vec<&'a str> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn disjoint(x: &[&str], y: &[&str]) -> bool {
    x.iter().all(|e| !y.contains(e))
}

fn union<'a>(x: &[&'a str], y: &[&'a str]) -> Vec<&'a str> {
    let mut v: Vec<&str> = x.iter().chain(y.iter()).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// maxFromToAft through the difference identities:
/// `mft(A1 ∪ A2, B) - mft(A2, B)` or `mft(A, B1 ∪ B2) - mft(A, B2)`.
pub fn max_from_to_aft(net: &FlowNetwork, q: &AftQuery) -> Result<Capacity> {
    let same_b = sorted(&q.b1) == sorted(&q.b2);
    let same_a = sorted(&q.a1) == sorted(&q.a2);
    let (total, base) = if same_b && disjoint(&q.a1, &q.a2) {
        (
            max_from_to(net, &union(&q.a1, &q.a2), &q.b1)?,
            max_from_to(net, &q.a2, &q.b1)?,
        )
    } else if same_a && disjoint(&q.b1, &q.b2) {
        (
            max_from_to(net, &q.a1, &union(&q.b1, &q.b2))?,
            max_from_to(net, &q.a1, &q.b2)?,
        )
    } else {
        return Err(Error::IllShapedQuery(format!("{q:?}")));
    };
    Ok(total
        .checked_sub(base)
        .expect("maxFromTo is monotone, so the difference is non-negative"))
}

/// maxFromToAft by direct two-phase routing: saturate the conditioning pair
/// first, then maximise the additional flow through the residual network.
pub fn max_from_to_aft_two_phase(net: &FlowNetwork, q: &AftQuery) -> Result<Capacity> {
    let same_b = sorted(&q.b1) == sorted(&q.b2);
    let same_a = sorted(&q.a1) == sorted(&q.a2);
    let inputs_vary = if same_b && disjoint(&q.a1, &q.a2) {
        true
    } else if same_a && disjoint(&q.b1, &q.b2) {
        false
    } else {
        return Err(Error::IllShapedQuery(format!("{q:?}")));
    };
    check_pair(net, &union(&q.a1, &q.a2), &union(&q.b1, &q.b2))?;
    let layout = Layout::new(net);
    let (mut g, _) = layout.graph(net, 4);
    let n = layout.index.len();
    let (s1, s2, t1, t2) = (n, n + 1, n + 2, n + 3);
    let attach_in = |g: &mut MaxFlow, src: usize, ids: &[&str]| {
        for id in ids {
            let e = net.edge(id).expect("checked");
            g.add_edge(src, layout.of(&e.head), e.cap.value());
        }
    };
    let attach_out = |g: &mut MaxFlow, dst: usize, ids: &[&str]| {
        for id in ids {
            let e = net.edge(id).expect("checked");
            g.add_edge(layout.of(&e.tail), dst, e.cap.value());
        }
    };
    if inputs_vary {
        attach_in(&mut g, s1, &q.a1);
        attach_in(&mut g, s2, &q.a2);
        attach_out(&mut g, t1, &q.b1);
        g.run(s2, t1);
        Capacity::new(g.run(s1, t1))
    } else {
        attach_in(&mut g, s1, &q.a1);
        attach_out(&mut g, t1, &q.b1);
        attach_out(&mut g, t2, &q.b2);
        g.run(s1, t2);
        Capacity::new(g.run(s1, t1))
    }
}

/// Extends an IO assignment to a feasible flow, or returns `None`.
///
/// Fixed boundary values become vertex supplies and demands; the assignment
/// extends iff a max-flow from the supplies saturates every demand.
pub fn extend_to_feasible(net: &FlowNetwork, g: &IoAssignment) -> Result<Option<Flow>> {
    let io = net.io_edges();
    for id in &io {
        if !g.0.contains_key(id) {
            return Err(Error::DomainMismatch(format!("IO assignment misses `{id}`")));
        }
        if g.get(id) > net.cap(id) {
            return Ok(None);
        }
    }
    let total_in: Rational = net.inputs().iter().map(|id| g.get(id).value()).sum();
    let total_out: Rational = net.outputs().iter().map(|id| g.get(id).value()).sum();
    if total_in != total_out {
        return Ok(None);
    }
    let layout = Layout::new(net);
    let (mut graph, arcs) = layout.graph(net, 2);
    let n = layout.index.len();
    let (s, t) = (n, n + 1);
    let mut supply = vec![Rational::zero(); n];
    for id in &io {
        let e = net.edge(id).expect("io edge");
        match (&e.tail, &e.head) {
            (None, h @ Some(_)) => supply[layout.of(h)] += g.get(id).value(),
            (t @ Some(_), None) => supply[layout.of(t)] -= g.get(id).value(),
            _ => unreachable!(),
        }
    }
    for (v, s_v) in supply.iter().enumerate() {
        if *s_v > Rational::zero() {
            graph.add_edge(s, v, *s_v);
        } else if *s_v < Rational::zero() {
            graph.add_edge(v, t, -*s_v);
        }
    }
    let need: Rational = supply.iter().filter(|x| **x > Rational::zero()).sum();
    if graph.run(s, t) != need {
        return Ok(None);
    }
    let mut f = Flow::zero(net);
    for id in io {
        f.set(id.clone(), g.get(&id));
    }
    for (id, arc) in arcs {
        f.set(id, Capacity::new(graph.flow(arc))?);
    }
    debug_assert!(is_feasible(net, &f).unwrap_or(false));
    Ok(Some(f))
}

/// Generates a random feasible flow by repeatedly routing a random fraction of
/// the residual bottleneck along a random augmenting path between random
/// subsets of inputs and outputs.
pub fn random_feasible_flow(net: &FlowNetwork, rng: &mut impl Rng) -> Flow {
    let layout = Layout::new(net);
    let n = layout.index.len();
    let (s, t) = (n, n + 1);
    let mut arcs: Vec<(usize, usize, Rational, Rational)> = Vec::new(); // from, to, cap, flow
    let mut edge_arc: BTreeMap<EdgeId, usize> = BTreeMap::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n + 2];
    for (id, e) in net.edges() {
        let from = e.tail.as_ref().map_or(s, |_| layout.of(&e.tail));
        let to = e.head.as_ref().map_or(t, |_| layout.of(&e.head));
        let k = arcs.len();
        arcs.push((from, to, e.cap.value(), Rational::zero()));
        out[from].push(2 * k);
        out[to].push(2 * k + 1);
        edge_arc.insert(id.clone(), k);
    }
    let inputs = net.inputs();
    let outputs = net.outputs();
    if inputs.is_empty() || outputs.is_empty() {
        return Flow::zero(net);
    }
    let rounds = rng.gen_range(1..=6);
    for _ in 0..rounds {
        let allowed_in: Vec<bool> = inputs.iter().map(|_| rng.gen_bool(0.6)).collect();
        let allowed_out: Vec<bool> = outputs.iter().map(|_| rng.gen_bool(0.6)).collect();
        let blocked = |arc: usize| -> bool {
            let k = arc / 2;
            let (from, to, ..) = arcs[k];
            if arc.is_multiple_of(2) && from == s {
                let pos = inputs.iter().position(|id| edge_arc[id] == k).expect("input");
                return !allowed_in[pos];
            }
            if arc.is_multiple_of(2) && to == t {
                let pos = outputs.iter().position(|id| edge_arc[id] == k).expect("output");
                return !allowed_out[pos];
            }
            false
        };
        let residual = |arc: usize, arcs: &Vec<(usize, usize, Rational, Rational)>| -> Rational {
            let (_, _, cap, flow) = arcs[arc / 2];
            if arc.is_multiple_of(2) {
                cap - flow
            } else {
                flow
            }
        };
        let head_of = |arc: usize| -> usize {
            let (from, to, ..) = arcs[arc / 2];
            if arc.is_multiple_of(2) {
                to
            } else {
                from
            }
        };
        // Randomised DFS for an augmenting path.
        let mut pred: Vec<Option<usize>> = vec![None; n + 2];
        let mut seen = vec![false; n + 2];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            if u == t {
                break;
            }
            let mut nexts = out[u].clone();
            nexts.shuffle(rng);
            for a in nexts {
                let v = head_of(a);
                if !seen[v] && !blocked(a) && residual(a, &arcs) > Rational::zero() {
                    seen[v] = true;
                    pred[v] = Some(a);
                    stack.push(v);
                }
            }
        }
        if !seen[t] {
            continue;
        }
        let mut path = Vec::new();
        let mut v = t;
        while let Some(a) = pred[v] {
            path.push(a);
            let (from, to, ..) = arcs[a / 2];
            v = if a % 2 == 0 { from } else { to };
        }
        let bottleneck = path
            .iter()
            .map(|&a| residual(a, &arcs))
            .min()
            .expect("non-empty path");
        let amount = bottleneck * Rational::new(rng.gen_range(1..=4), 4);
        for a in path {
            if a % 2 == 0 {
                arcs[a / 2].3 += amount;
            } else {
                arcs[a / 2].3 -= amount;
            }
        }
    }
    let mut f = Flow::zero(net);
    for (id, k) in edge_arc {
        f.set(id, Capacity::new(arcs[k].3).expect("flows stay non-negative"));
    }
    debug_assert!(is_feasible(net, &f).unwrap_or(false));
    f
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrincipalReport {
    pub completeness_checked: usize,
    /// Feasible flows (restricted to IO edges) that violate the typing.
    pub completeness_counterexamples: Vec<IoAssignment>,
    pub soundness_checked: usize,
    pub soundness_attempts: usize,
    /// IO assignments that satisfy the typing but do not extend.
    pub soundness_counterexamples: Vec<IoAssignment>,
}

impl PrincipalReport {
    pub fn is_clean(&self) -> bool {
        self.completeness_counterexamples.is_empty() && self.soundness_counterexamples.is_empty()
    }
}

/// Candidate IO assignments for soundness sampling: a grid point in the box
/// `[0, c(e)]`, or a balanced perturbation of a feasible flow's boundary.
fn soundness_candidate(net: &FlowNetwork, io: &[EdgeId], rng: &mut impl Rng) -> IoAssignment {
    const GRID: i128 = 4;
    if rng.gen_bool(0.5) {
        let mut g = EdgeValues::default();
        for id in io {
            let cap = net.cap(id).value();
            let k = rng.gen_range(0..=GRID);
            g.set(id.clone(), Capacity::new(cap * Rational::new(k, GRID)).expect("non-negative"));
        }
        return g;
    }
    let mut g = io_restriction(net, &random_feasible_flow(net, rng));
    let (ins, outs) = (net.inputs(), net.outputs());
    if !ins.is_empty() && !outs.is_empty() {
        let i = ins.choose(rng).expect("non-empty");
        let o = outs.choose(rng).expect("non-empty");
        let unit = net.cap(i).min(net.cap(o)).value();
        let delta = unit * Rational::new(rng.gen_range(1..=GRID), GRID);
        let (gi, go) = (g.get(i).value(), g.get(o).value());
        let (ni, no) = if rng.gen_bool(0.5) {
            (gi + delta, go + delta)
        } else {
            (gi - delta, go - delta)
        };
        if ni >= Rational::zero()
            && no >= Rational::zero()
            && ni <= net.cap(i).value()
            && no <= net.cap(o).value()
        {
            g.set(i.clone(), Capacity::new(ni).expect("checked"));
            g.set(o.clone(), Capacity::new(no).expect("checked"));
        }
    }
    g
}

/// Sampling check of completeness (random feasible flows satisfy `tau`) and
/// soundness (random `tau`-satisfying assignments extend to feasible flows).
pub fn check_principal(
    net: &FlowNetwork,
    tau: &Typing,
    samples: usize,
    seed: u64,
) -> Result<PrincipalReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PrincipalReport::default();
    for _ in 0..samples {
        let f = random_feasible_flow(net, &mut rng);
        let g = io_restriction(net, &f);
        report.completeness_checked += 1;
        if !satisfies_typing(net, &g, tau)? {
            report.completeness_counterexamples.push(g);
        }
    }
    let io = net.io_edges();
    let max_attempts = samples * 50;
    while report.soundness_checked < samples && report.soundness_attempts < max_attempts {
        report.soundness_attempts += 1;
        let g = soundness_candidate(net, &io, &mut rng);
        if !satisfies_typing(net, &g, tau)? {
            continue;
        }
        report.soundness_checked += 1;
        if extend_to_feasible(net, &g)?.is_none() {
            report.soundness_counterexamples.push(g);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::typing::Interval;

    fn c(v: u64) -> Capacity {
        Capacity::from_int(v)
    }

    fn r(v: i128) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn chain_and_triangle_values() {
        let chain = fixtures::chain();
        assert_eq!(max_from_to(&chain, &["a"], &["b"]).unwrap(), c(3));
        assert_eq!(max_from_to(&chain, &[], &["b"]).unwrap(), c(0));
        assert_eq!(max_from_to(&chain, &[], &[]).unwrap(), c(0));
        let tri = fixtures::triangle();
        assert_eq!(max_from_to(&tri, &["a"], &["b"]).unwrap(), c(3));
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        let chain = fixtures::chain();
        assert!(matches!(
            max_from_to(&chain, &["b"], &[]),
            Err(Error::InvalidSubsetPair(_))
        ));
        assert!(max_from_to(&chain, &["zz"], &[]).is_err());
    }

    #[test]
    fn aft_examples() {
        // The v2 side of the chain, with the spliced half of `e` as an input.
        let mut right = FlowNetwork::new("v2");
        right.add_vertex("v2");
        right.add_edge("e1", None, Some("v2"), c(3));
        right.add_edge("b", Some("v2"), None, c(4));
        let q = AftQuery { a1: vec!["e1"], b1: vec!["b"], a2: vec![], b2: vec!["b"] };
        assert_eq!(max_from_to_aft(&right, &q).unwrap(), c(3));
        assert_eq!(max_from_to_aft_two_phase(&right, &q).unwrap(), c(3));

        let chain = fixtures::chain();
        let q = AftQuery { a1: vec![], b1: vec!["b"], a2: vec!["a"], b2: vec!["b"] };
        assert_eq!(max_from_to_aft(&chain, &q).unwrap(), c(0));

        // Two-edge cycle component after splicing `e`: the back edge's head
        // half is an extra input at v1 and adds nothing.
        let mut cyc = FlowNetwork::new("cyc-after-e");
        cyc.add_vertex("v1").add_vertex("v2");
        cyc.add_edge("a", None, Some("v1"), c(5));
        cyc.add_edge("e", Some("v1"), Some("v2"), c(3));
        cyc.add_edge("b", Some("v2"), None, c(4));
        cyc.add_edge("ep_in", None, Some("v1"), c(2));
        cyc.add_edge("ep_out", Some("v2"), None, c(2));
        let q = AftQuery { a1: vec!["ep_in"], b1: vec!["b"], a2: vec!["a"], b2: vec!["b"] };
        assert_eq!(max_from_to_aft(&cyc, &q).unwrap(), c(0));
        assert_eq!(max_from_to_aft_two_phase(&cyc, &q).unwrap(), c(0));
    }

    #[test]
    fn ill_shaped_aft_is_an_error() {
        let chain = fixtures::chain();
        let q = AftQuery { a1: vec!["a"], b1: vec!["b"], a2: vec!["a"], b2: vec!["b"] };
        assert!(matches!(max_from_to_aft(&chain, &q), Err(Error::IllShapedQuery(_))));
        let q = AftQuery { a1: vec!["a"], b1: vec![], a2: vec![], b2: vec!["b"] };
        assert!(max_from_to_aft_two_phase(&chain, &q).is_err());
    }

    #[test]
    fn chain_principal_typing() {
        let t = principal_typing_oracle(&fixtures::chain(), DEFAULT_ORACLE_LIMIT).unwrap();
        assert_eq!(t.get_ids(&["a"], &[]).unwrap(), Interval { lo: r(0), hi: r(3) });
        assert_eq!(t.get_ids(&["a"], &["b"]).unwrap(), Interval { lo: r(0), hi: r(0) });
        assert_eq!(t.get_ids(&[], &["b"]).unwrap(), Interval { lo: r(-3), hi: r(0) });
    }

    #[test]
    fn oracle_limit_is_enforced() {
        let star = fixtures::star(&[1; 7], &[1; 6]);
        let err = principal_typing_oracle(&star, DEFAULT_ORACLE_LIMIT).unwrap_err();
        assert_eq!(err, Error::LimitExceeded { what: "network", unit: "dangling edges", actual: 13, limit: 12 });
        assert!(err.to_string().contains("12"));
    }

    #[test]
    fn extension_examples() {
        let chain = fixtures::chain();
        let mut g = EdgeValues::default();
        g.set("a", c(2));
        g.set("b", c(2));
        let f = extend_to_feasible(&chain, &g).unwrap().unwrap();
        assert_eq!(f, Flow::uniform(&chain, c(2)));
        g.set("a", c(4));
        g.set("b", c(4));
        assert_eq!(extend_to_feasible(&chain, &g).unwrap(), None);
        g.set("a", c(0));
        g.set("b", c(0));
        assert_eq!(extend_to_feasible(&chain, &g).unwrap().unwrap(), Flow::zero(&chain));
    }

    #[test]
    fn random_flows_are_feasible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for net in [fixtures::chain(), fixtures::cycle2(), fixtures::triangle(), fixtures::diamond()] {
            for _ in 0..50 {
                let f = random_feasible_flow(&net, &mut rng);
                assert!(is_feasible(&net, &f).unwrap());
            }
        }
    }

    #[test]
    fn principal_typing_passes_sampling() {
        let chain = fixtures::chain();
        let t = principal_typing_oracle(&chain, DEFAULT_ORACLE_LIMIT).unwrap();
        let report = check_principal(&chain, &t, 200, 0).unwrap();
        assert!(report.is_clean(), "{report:?}");
        assert_eq!(report.completeness_checked, 200);
        assert_eq!(report.soundness_checked, 200);
    }

    #[test]
    fn tightened_typing_loses_completeness() {
        let chain = fixtures::chain();
        let mut t = principal_typing_oracle(&chain, DEFAULT_ORACLE_LIMIT).unwrap();
        t.set_ids(&["a"], &[], Interval { lo: r(0), hi: r(2) }).unwrap();
        let report = check_principal(&chain, &t, 200, 0).unwrap();
        assert!(!report.completeness_counterexamples.is_empty());
        assert!(report
            .completeness_counterexamples
            .iter()
            .all(|g| g.get("a") > c(2)));
    }

    #[test]
    fn loosened_typing_loses_soundness() {
        let chain = fixtures::chain();
        let mut t = principal_typing_oracle(&chain, DEFAULT_ORACLE_LIMIT).unwrap();
        // Loosening ({a},∅) alone changes nothing: (∅,{b}) still caps g(b) at 3.
        t.set_ids(&["a"], &[], Interval { lo: r(0), hi: r(4) }).unwrap();
        assert!(check_principal(&chain, &t, 200, 0).unwrap().is_clean());
        t.set_ids(&[], &["b"], Interval { lo: r(-4), hi: r(0) }).unwrap();
        let report = check_principal(&chain, &t, 200, 0).unwrap();
        assert!(!report.soundness_counterexamples.is_empty());
        assert!(report.soundness_counterexamples.iter().all(|g| g.get("a") > c(3)));
    }
}
