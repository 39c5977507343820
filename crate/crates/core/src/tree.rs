//! Reassembling trees: rooted binary trees over vertex sets.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::network::{FlowNetwork, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReassemblingTree {
    Leaf(VertexId),
    Node(Box<ReassemblingTree>, Box<ReassemblingTree>),
}

impl ReassemblingTree {
    pub fn leaf(v: impl Into<VertexId>) -> Self {
        ReassemblingTree::Leaf(v.into())
    }

    pub fn join(left: ReassemblingTree, right: ReassemblingTree) -> Self {
        ReassemblingTree::Node(Box::new(left), Box::new(right))
    }

    /// `((v0 v1) v2) ...`; `None` for an empty order.
    pub fn left_comb<S: AsRef<str>>(order: &[S]) -> Option<Self> {
        let mut it = order.iter();
        let first = ReassemblingTree::leaf(it.next()?.as_ref());
        Some(it.fold(first, |acc, v| ReassemblingTree::join(acc, ReassemblingTree::leaf(v.as_ref()))))
    }

    /// Balanced split of the order at every level.
    pub fn balanced<S: AsRef<str>>(order: &[S]) -> Option<Self> {
        match order.len() {
            0 => None,
            1 => Some(ReassemblingTree::leaf(order[0].as_ref())),
            n => {
                let (l, r) = order.split_at(n / 2);
                Some(ReassemblingTree::join(Self::balanced(l)?, Self::balanced(r)?))
            }
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                ReassemblingTree::Leaf(v) => out.push(v),
                ReassemblingTree::Node(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        out
    }

    pub fn node_count(&self) -> usize {
        match self {
            ReassemblingTree::Leaf(_) => 1,
            ReassemblingTree::Node(l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    /// Every node's vertex set, in post-order.
    pub fn node_sets(&self) -> Vec<BTreeSet<VertexId>> {
        fn walk(t: &ReassemblingTree, out: &mut Vec<BTreeSet<VertexId>>) -> BTreeSet<VertexId> {
            let set = match t {
                ReassemblingTree::Leaf(v) => BTreeSet::from([v.clone()]),
                ReassemblingTree::Node(l, r) => {
                    let mut s = walk(l, out);
                    s.extend(walk(r, out));
                    s
                }
            };
            out.push(set.clone());
            set
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Leaves are distinct and are exactly the network's vertices.
    pub fn validate(&self, net: &FlowNetwork) -> Result<()> {
        let leaves = self.leaves();
        let mut seen = BTreeSet::new();
        for v in &leaves {
            if !seen.insert(*v) {
                return Err(Error::InvalidTree(format!("vertex `{v}` appears twice")));
            }
            if !net.has_vertex(v) {
                return Err(Error::InvalidTree(format!("unknown vertex `{v}`")));
            }
        }
        if seen.len() != net.vertex_count() {
            let missing: Vec<&VertexId> = net.vertices().filter(|v| !seen.contains(v)).collect();
            return Err(Error::InvalidTree(format!("missing vertices {missing:?}")));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        match self {
            ReassemblingTree::Leaf(v) => json!({ "vertex": v }),
            ReassemblingTree::Node(l, r) => json!({ "left": l.to_json(), "right": r.to_json() }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if let Some(id) = v.get("vertex") {
            let id = id
                .as_str()
                .ok_or_else(|| Error::InvalidTree("leaf vertex must be a string".into()))?;
            return Ok(ReassemblingTree::leaf(id));
        }
        match (v.get("left"), v.get("right")) {
            (Some(l), Some(r)) => Ok(ReassemblingTree::join(Self::from_json(l)?, Self::from_json(r)?)),
            _ => Err(Error::InvalidTree(format!("node needs `left` and `right`: {v}"))),
        }
    }
}

/// Largest number of internal edges with exactly one endpoint in a tree node.
pub fn alpha_measure(net: &FlowNetwork, tree: &ReassemblingTree) -> usize {
    let internal: Vec<(VertexId, VertexId)> = net
        .internal_edges()
        .iter()
        .filter_map(|id| {
            let e = net.edge(id)?;
            Some((e.tail.clone()?, e.head.clone()?))
        })
        .collect();
    let mut incident: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (k, (t, h)) in internal.iter().enumerate() {
        incident.entry(t).or_default().push(k);
        incident.entry(h).or_default().push(k);
    }
    // Boundary via incremental counting: boundary(S) = sum of degrees - 2 * inner edges.
    tree.node_sets()
        .iter()
        .map(|set| {
            let mut crossing = 0usize;
            for v in set {
                for &k in incident.get(v.as_str()).map(Vec::as_slice).unwrap_or(&[]) {
                    let (t, h) = &internal[k];
                    if set.contains(t) != set.contains(h) {
                        crossing += 1;
                    }
                }
            }
            crossing
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::Capacity;

    #[test]
    fn comb_shape_and_counts() {
        let t = ReassemblingTree::left_comb(&["a", "b", "c"]).unwrap();
        assert_eq!(t.node_count(), 5);
        assert_eq!(t.leaves(), vec!["a", "b", "c"]);
        assert_eq!(ReassemblingTree::balanced(&["a", "b", "c", "d"]).unwrap().node_count(), 7);
    }

    #[test]
    fn validation() {
        let net = fixtures::chain();
        assert!(ReassemblingTree::left_comb(&["v1", "v2"]).unwrap().validate(&net).is_ok());
        assert!(ReassemblingTree::left_comb(&["v1"]).unwrap().validate(&net).is_err());
        assert!(ReassemblingTree::left_comb(&["v1", "v1"]).unwrap().validate(&net).is_err());
        assert!(ReassemblingTree::left_comb(&["v1", "zz"]).unwrap().validate(&net).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = ReassemblingTree::balanced(&["a", "b", "c"]).unwrap();
        assert_eq!(ReassemblingTree::from_json(&t.to_json()).unwrap(), t);
        assert!(ReassemblingTree::from_json(&json!({"left": {"vertex": "a"}})).is_err());
    }

    #[test]
    fn alpha_examples() {
        let chain = fixtures::chain();
        let t = ReassemblingTree::left_comb(&["v1", "v2"]).unwrap();
        assert_eq!(alpha_measure(&chain, &t), 1);

        let single = fixtures::star(&[1], &[1]);
        assert_eq!(alpha_measure(&single, &ReassemblingTree::leaf("v")), 0);

        let mut square = FlowNetwork::new("c4");
        for v in ["p", "q", "r", "s"] {
            square.add_vertex(v);
        }
        let one = Capacity::from_int(1);
        square.add_edge("pq", Some("p"), Some("q"), one);
        square.add_edge("qr", Some("q"), Some("r"), one);
        square.add_edge("rs", Some("r"), Some("s"), one);
        square.add_edge("sp", Some("s"), Some("p"), one);
        let t = ReassemblingTree::join(
            ReassemblingTree::left_comb(&["p", "q"]).unwrap(),
            ReassemblingTree::left_comb(&["r", "s"]).unwrap(),
        );
        assert_eq!(alpha_measure(&square, &t), 2);
    }
}
