//! Interval typings over subset pairs of dangling edges.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::network::{EdgeId, FlowNetwork, IoAssignment};
use crate::rational::{format_rational, rational_from_json, rational_to_json, Capacity, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidNetwork(format!(
                "interval [{}, {}] has lo > hi",
                format_rational(&lo),
                format_rational(&hi)
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, x: Rational) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi))
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Bit `k` of the A-mask selects `inputs[k]`; bit `k` of the B-mask selects `outputs[k]`.
/// Entries are stored at `a_mask | (b_mask << inputs.len())`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetIndex {
    pub inputs: Vec<EdgeId>,
    pub outputs: Vec<EdgeId>,
}

impl SubsetIndex {
    pub fn new(inputs: Vec<EdgeId>, outputs: Vec<EdgeId>) -> Self {
        SubsetIndex { inputs, outputs }
    }

    pub fn of_network(net: &FlowNetwork) -> Self {
        SubsetIndex::new(net.inputs(), net.outputs())
    }

    pub fn p(&self) -> usize {
        self.inputs.len()
    }

    pub fn q(&self) -> usize {
        self.outputs.len()
    }

    pub fn len(&self) -> usize {
        1usize << (self.p() + self.q())
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn full_a(&self) -> usize {
        (1usize << self.p()) - 1
    }

    pub fn full_b(&self) -> usize {
        (1usize << self.q()) - 1
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a | (b << self.p())
    }

    pub fn split(&self, idx: usize) -> (usize, usize) {
        (idx & self.full_a(), idx >> self.p())
    }

    fn mask_of(list: &[EdgeId], ids: &[&str], what: &str) -> Result<usize> {
        let mut mask = 0usize;
        for id in ids {
            let pos = list
                .iter()
                .position(|x| x == id)
                .ok_or_else(|| Error::InvalidSubsetPair(format!("{what} edge `{id}`")))?;
            mask |= 1 << pos;
        }
        Ok(mask)
    }

    pub fn a_mask(&self, ids: &[&str]) -> Result<usize> {
        Self::mask_of(&self.inputs, ids, "input")
    }

    pub fn b_mask(&self, ids: &[&str]) -> Result<usize> {
        Self::mask_of(&self.outputs, ids, "output")
    }

    pub fn a_ids(&self, a: usize) -> Vec<EdgeId> {
        (0..self.p())
            .filter(|k| a >> k & 1 == 1)
            .map(|k| self.inputs[k].clone())
            .collect()
    }

    pub fn b_ids(&self, b: usize) -> Vec<EdgeId> {
        (0..self.q())
            .filter(|k| b >> k & 1 == 1)
            .map(|k| self.outputs[k].clone())
            .collect()
    }

    /// Entry indices in canonical order: by `|A| + |B|`, then lexicographically by ids.
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut order: Vec<(usize, Vec<EdgeId>, Vec<EdgeId>, usize)> = (0..self.len())
            .map(|idx| {
                let (a, b) = self.split(idx);
                let (aa, bb) = (self.a_ids(a), self.b_ids(b));
                (aa.len() + bb.len(), aa, bb, idx)
            })
            .collect();
        order.sort();
        order.into_iter().map(|t| t.3).collect()
    }
}

/// A complete maxFromTo table for one network or component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetTable {
    pub index: SubsetIndex,
    pub values: Vec<Capacity>,
}

impl SubsetTable {
    pub fn get(&self, a: usize, b: usize) -> Capacity {
        self.values[self.index.index(a, b)]
    }

    pub fn get_ids(&self, a: &[&str], b: &[&str]) -> Result<Capacity> {
        Ok(self.get(self.index.a_mask(a)?, self.index.b_mask(b)?))
    }

    /// The principal typing: `[-t(complement A, B), t(A, complement B)]`.
    pub fn principal_typing(&self, network: &str) -> Typing {
        let (fa, fb) = (self.index.full_a(), self.index.full_b());
        let entries = (0..self.index.len())
            .map(|idx| {
                let (a, b) = self.index.split(idx);
                let lo = -self.get(fa & !a, b);
                let hi = self.get(a, fb & !b).value();
                Interval { lo, hi }
            })
            .collect();
        Typing {
            network: network.to_string(),
            index: self.index.clone(),
            entries,
        }
    }
}

/// A total map from subset pairs `(A, B)` to closed intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Typing {
    pub network: String,
    pub index: SubsetIndex,
    pub entries: Vec<Interval>,
}

impl Typing {
    pub fn get(&self, a: usize, b: usize) -> Interval {
        self.entries[self.index.index(a, b)]
    }

    pub fn get_ids(&self, a: &[&str], b: &[&str]) -> Result<Interval> {
        Ok(self.get(self.index.a_mask(a)?, self.index.b_mask(b)?))
    }

    pub fn set_ids(&mut self, a: &[&str], b: &[&str], iv: Interval) -> Result<()> {
        let idx = self.index.index(self.index.a_mask(a)?, self.index.b_mask(b)?);
        self.entries[idx] = iv;
        Ok(())
    }

    /// First entry where the two typings differ, as `(A ids, B ids, self, other)`.
    pub fn first_difference(&self, other: &Typing) -> Option<(Vec<EdgeId>, Vec<EdgeId>, Interval, Option<Interval>)> {
        for idx in self.index.canonical_order() {
            let (a, b) = self.index.split(idx);
            let (aa, bb) = (self.index.a_ids(a), self.index.b_ids(b));
            let ar: Vec<&str> = aa.iter().map(String::as_str).collect();
            let br: Vec<&str> = bb.iter().map(String::as_str).collect();
            let theirs = other.get_ids(&ar, &br).ok();
            if theirs != Some(self.entries[idx]) {
                return Some((aa, bb, self.entries[idx], theirs));
            }
        }
        if other.entries.len() != self.entries.len() {
            return Some((vec![], vec![], self.entries[0], None));
        }
        None
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .index
            .canonical_order()
            .into_iter()
            .map(|idx| {
                let (a, b) = self.index.split(idx);
                let iv = self.entries[idx];
                json!({
                    "A": self.index.a_ids(a),
                    "B": self.index.b_ids(b),
                    "hi": rational_to_json(&iv.hi),
                    "lo": rational_to_json(&iv.lo),
                })
            })
            .collect();
        json!({ "entries": entries, "network": self.network })
    }

    pub fn from_json(v: &Value) -> Result<Typing> {
        let bad = |m: &str| Error::Json(format!("typing: {m}"));
        let network = v["network"].as_str().ok_or_else(|| bad("missing network"))?;
        let raw = v["entries"].as_array().ok_or_else(|| bad("missing entries"))?;
        let mut parsed = Vec::with_capacity(raw.len());
        let mut ins = BTreeSet::new();
        let mut outs = BTreeSet::new();
        for e in raw {
            let ids = |k: &str| -> Result<Vec<String>> {
                e[k].as_array()
                    .ok_or_else(|| bad("entry without id list"))?
                    .iter()
                    .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("non-string id")))
                    .collect()
            };
            let (a, b) = (ids("A")?, ids("B")?);
            ins.extend(a.iter().cloned());
            outs.extend(b.iter().cloned());
            let iv = Interval::new(rational_from_json(&e["lo"])?, rational_from_json(&e["hi"])?)?;
            parsed.push((a, b, iv));
        }
        let index = SubsetIndex::new(ins.into_iter().collect(), outs.into_iter().collect());
        if parsed.len() != index.len() {
            return Err(Error::MissingTypingEntry(format!(
                "{} of {} entries present",
                parsed.len(),
                index.len()
            )));
        }
        let mut entries = vec![None; index.len()];
        for (a, b, iv) in parsed {
            let ar: Vec<&str> = a.iter().map(String::as_str).collect();
            let br: Vec<&str> = b.iter().map(String::as_str).collect();
            entries[index.index(index.a_mask(&ar)?, index.b_mask(&br)?)] = Some(iv);
        }
        let entries = entries
            .into_iter()
            .map(|e| e.ok_or_else(|| Error::MissingTypingEntry("duplicate entry".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Typing {
            network: network.to_string(),
            index,
            entries,
        })
    }
}

fn compare_ids(x: &[EdgeId], y: &[EdgeId]) -> Ordering {
    x.len().cmp(&y.len()).then_with(|| x.cmp(y))
}

/// Checks `g(A) - g(B)` against every entry of `tau`.
pub fn satisfies_typing(net: &FlowNetwork, g: &IoAssignment, tau: &Typing) -> Result<bool> {
    let (ins, outs) = (net.inputs(), net.outputs());
    if compare_ids(&ins, &tau.index.inputs) != Ordering::Equal
        || compare_ids(&outs, &tau.index.outputs) != Ordering::Equal
    {
        return Err(Error::MissingTypingEntry(
            "typing is over different dangling edges".into(),
        ));
    }
    if tau.entries.len() != tau.index.len() {
        return Err(Error::MissingTypingEntry("typing is not total".into()));
    }
    for id in net.io_edges() {
        if !g.0.contains_key(&id) {
            return Err(Error::DomainMismatch(format!("IO assignment misses `{id}`")));
        }
    }
    // Precompute subset sums so each of the 2^(p+q) checks is O(1).
    let idx = &tau.index;
    let sums = |ids: &[EdgeId]| -> Vec<Rational> {
        let mut s = vec![Rational::from_integer(0); 1 << ids.len()];
        for mask in 1..s.len() {
            let low = mask.trailing_zeros() as usize;
            s[mask] = s[mask & (mask - 1)] + g.get(&ids[low]).value();
        }
        s
    };
    let (sa, sb) = (sums(&idx.inputs), sums(&idx.outputs));
    for (k, iv) in tau.entries.iter().enumerate() {
        let (a, b) = idx.split(k);
        if !iv.contains(sa[a] - sb[b]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::network::EdgeValues;

    fn r(v: i128) -> Rational {
        Rational::from_integer(v)
    }

    fn chain_typing() -> Typing {
        // maxFromTo of the chain: only ({a},{b}) is non-zero.
        let index = SubsetIndex::of_network(&fixtures::chain());
        let mut values = vec![Capacity::ZERO; 4];
        values[index.index(1, 1)] = Capacity::from_int(3);
        SubsetTable { index, values }.principal_typing("chain")
    }

    fn g(a: u64, b: u64) -> IoAssignment {
        let mut g = EdgeValues::default();
        g.set("a", Capacity::from_int(a));
        g.set("b", Capacity::from_int(b));
        g
    }

    #[test]
    fn chain_typing_entries() {
        let t = chain_typing();
        assert_eq!(t.get_ids(&["a"], &[]).unwrap(), Interval { lo: r(0), hi: r(3) });
        assert_eq!(t.get_ids(&["a"], &["b"]).unwrap(), Interval { lo: r(0), hi: r(0) });
        assert_eq!(t.get_ids(&[], &["b"]).unwrap(), Interval { lo: r(-3), hi: r(0) });
    }

    #[test]
    fn satisfaction() {
        let net = fixtures::chain();
        let t = chain_typing();
        assert!(satisfies_typing(&net, &g(3, 3), &t).unwrap());
        assert!(!satisfies_typing(&net, &g(4, 4), &t).unwrap());
        assert!(!satisfies_typing(&net, &g(2, 1), &t).unwrap());
        let mut vacuous = t.clone();
        for e in vacuous.entries.iter_mut() {
            *e = Interval { lo: r(-1_000_000), hi: r(1_000_000) };
        }
        assert!(satisfies_typing(&net, &g(9, 1), &vacuous).unwrap());
    }

    #[test]
    fn full_entry_forces_balance() {
        let net = fixtures::chain();
        let mut loose = chain_typing();
        for e in loose.entries.iter_mut() {
            *e = Interval { lo: r(-100), hi: r(100) };
        }
        loose.set_ids(&["a"], &["b"], Interval { lo: r(0), hi: r(0) }).unwrap();
        assert!(!satisfies_typing(&net, &g(2, 1), &loose).unwrap());
        assert!(satisfies_typing(&net, &g(2, 2), &loose).unwrap());
    }

    #[test]
    fn missing_entries_are_errors() {
        let net = fixtures::chain();
        let mut t = chain_typing();
        t.entries.pop();
        assert!(matches!(
            satisfies_typing(&net, &g(1, 1), &t),
            Err(Error::MissingTypingEntry(_))
        ));
    }

    #[test]
    fn json_is_canonical_and_round_trips() {
        let t = chain_typing();
        let v = t.to_json();
        let entries = v["entries"].as_array().unwrap();
        assert_eq!(entries[0]["A"], json!([]));
        assert_eq!(entries[3]["A"], json!(["a"]));
        assert_eq!(entries[3]["B"], json!(["b"]));
        assert_eq!(Typing::from_json(&v).unwrap(), t);
        let text = serde_json::to_string(&v).unwrap();
        assert!(text.starts_with("{\"entries\""));
    }

    #[test]
    fn empty_interface_has_single_entry() {
        let index = SubsetIndex::new(vec![], vec![]);
        let t = SubsetTable { index, values: vec![Capacity::ZERO] }.principal_typing("closed");
        assert_eq!(t.entries, vec![Interval { lo: r(0), hi: r(0) }]);
    }
}
