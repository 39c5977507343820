//! Small named networks used throughout the tests and the CLI examples.

use crate::network::FlowNetwork;
use crate::rational::Capacity;

fn c(v: u64) -> Capacity {
    Capacity::from_int(v)
}

/// `a(5) -> v1 -e(3)-> v2 -> b(4)`.
pub fn chain() -> FlowNetwork {
    let mut n = FlowNetwork::new("chain");
    n.add_vertex("v1").add_vertex("v2");
    n.add_edge("a", None, Some("v1"), c(5));
    n.add_edge("e", Some("v1"), Some("v2"), c(3));
    n.add_edge("b", Some("v2"), None, c(4));
    n
}

/// The chain plus a back edge `ep: v2 -> v1` of capacity 2.
pub fn cycle2() -> FlowNetwork {
    let mut n = chain();
    n.name = "cycle2".into();
    n.add_edge("ep", Some("v2"), Some("v1"), c(2));
    n
}

/// Two routes from `v1` to `v3`: through `v2` (capacity 2) and direct (capacity 1).
pub fn triangle() -> FlowNetwork {
    let mut n = FlowNetwork::new("triangle");
    n.add_vertex("v1").add_vertex("v2").add_vertex("v3");
    n.add_edge("a", None, Some("v1"), c(10));
    n.add_edge("x", Some("v1"), Some("v2"), c(2));
    n.add_edge("y", Some("v2"), Some("v3"), c(2));
    n.add_edge("z", Some("v1"), Some("v3"), c(1));
    n.add_edge("b", Some("v3"), None, c(10));
    n
}

/// `s` splits into two unit paths that rejoin at `t`.
pub fn diamond() -> FlowNetwork {
    let mut n = FlowNetwork::new("diamond");
    for v in ["s", "m1", "m2", "t"] {
        n.add_vertex(v);
    }
    n.add_edge("a", None, Some("s"), c(2));
    n.add_edge("s1", Some("s"), Some("m1"), c(1));
    n.add_edge("s2", Some("s"), Some("m2"), c(1));
    n.add_edge("t1", Some("m1"), Some("t"), c(1));
    n.add_edge("t2", Some("m2"), Some("t"), c(1));
    n.add_edge("b", Some("t"), None, c(2));
    n
}

/// One vertex with the given input and output capacities (`i0, i1, ..`, `o0, ..`).
pub fn star(inputs: &[u64], outputs: &[u64]) -> FlowNetwork {
    let mut n = FlowNetwork::new("star");
    n.add_vertex("v");
    for (k, cap) in inputs.iter().enumerate() {
        n.add_edge(format!("i{k}"), None, Some("v"), c(*cap));
    }
    for (k, cap) in outputs.iter().enumerate() {
        n.add_edge(format!("o{k}"), Some("v"), None, c(*cap));
    }
    n
}
