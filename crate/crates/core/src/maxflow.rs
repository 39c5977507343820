//! Exact shortest-augmenting-path max-flow on rational capacities.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: Rational,
    flow: Rational,
}

#[derive(Debug, Clone)]
pub struct MaxFlow {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
}

impl MaxFlow {
    pub fn new(nodes: usize) -> Self {
        MaxFlow {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds `u -> v` and its residual twin; returns the forward arc index.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: Rational) -> usize {
        let idx = self.arcs.len();
        self.arcs.push(Arc {
            to: v,
            cap,
            flow: Rational::zero(),
        });
        self.arcs.push(Arc {
            to: u,
            cap: Rational::zero(),
            flow: Rational::zero(),
        });
        self.adj[u].push(idx);
        self.adj[v].push(idx + 1);
        idx
    }

    pub fn flow(&self, arc: usize) -> Rational {
        self.arcs[arc].flow
    }

    fn residual(&self, arc: usize) -> Rational {
        self.arcs[arc].cap - self.arcs[arc].flow
    }

    fn push(&mut self, arc: usize, amount: Rational) {
        self.arcs[arc].flow += amount;
        self.arcs[arc ^ 1].flow -= amount;
    }

    /// Augments until no `s`-`t` path remains; returns the added value.
    pub fn run(&mut self, s: usize, t: usize) -> Rational {
        let mut total = Rational::zero();
        if s == t {
            return total;
        }
        let mut pred: Vec<Option<usize>> = vec![None; self.adj.len()];
        loop {
            pred.iter_mut().for_each(|p| *p = None);
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.adj[u] {
                    let v = self.arcs[a].to;
                    if !seen[v] && self.residual(a) > Rational::zero() {
                        seen[v] = true;
                        pred[v] = Some(a);
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            let mut bottleneck: Option<Rational> = None;
            let mut v = t;
            while let Some(a) = pred[v] {
                let r = self.residual(a);
                bottleneck = Some(bottleneck.map_or(r, |b| if r < b { r } else { b }));
                v = self.arcs[a ^ 1].to;
            }
            let b = bottleneck.expect("path has at least one arc");
            let mut v = t;
            while let Some(a) = pred[v] {
                self.push(a, b);
                v = self.arcs[a ^ 1].to;
            }
            total += b;
        }
    }

    /// Nodes reachable from `s` in the residual graph (source side of a min cut).
    pub fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let v = self.arcs[a].to;
                if !seen[v] && self.residual(a) > Rational::zero() {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
