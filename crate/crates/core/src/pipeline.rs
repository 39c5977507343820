//! The full typing computation: embed, 3-regularize, build a layered
//! reassembling tree, reassemble.

use serde_json::{json, Value};

use crate::embed::embed_small;
use crate::engine::{principal_typing_reassembled, EngineStats};
use crate::error::{Error, Result};
use crate::layered::layered_reassembling;
use crate::network::FlowNetwork;
use crate::planar::PlaneGraph;
use crate::regularize::three_regularize_plane;
use crate::tree::ReassemblingTree;
use crate::typing::{SubsetIndex, SubsetTable, Typing};
use crate::Capacity;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeSource {
    /// Supplied by the caller, used on the network as given.
    Given,
    /// Built from the peeling layers of the 3-regularized plane graph.
    Layered,
}

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub typing: Typing,
    pub stats: EngineStats,
    pub source: TreeSource,
    /// Edge-outerplanarity of the input embedding.
    pub k: Option<usize>,
    /// Edge-outerplanarity after 3-regularization.
    pub k_regularized: Option<usize>,
    /// Vertex count of the network that was reassembled.
    pub vertices: usize,
}

impl PipelineRun {
    pub fn stats_json(&self) -> Value {
        let mut v = self.stats.to_json();
        v["k"] = json!(self.k);
        v["k_regularized"] = json!(self.k_regularized);
        v["vertices"] = json!(self.vertices);
        v["tree"] = json!(match self.source {
            TreeSource::Given => "given",
            TreeSource::Layered => "layered",
        });
        v
    }
}

/// Principal typing of `net`. With a tree, reassembles along it directly.
/// Otherwise uses `embedding` (or embeds small networks itself), 3-regularizes
/// and reassembles along a layered tree.
pub fn typing_pipeline(
    net: &FlowNetwork,
    embedding: Option<&PlaneGraph>,
    tree: Option<&ReassemblingTree>,
    embed_limit: usize,
) -> Result<PipelineRun> {
    if let Some(tree) = tree {
        tree.validate(net)?;
        let (typing, stats) = principal_typing_reassembled(net, tree)?;
        return Ok(PipelineRun { typing, stats, source: TreeSource::Given, k: None, k_regularized: None, vertices: net.vertex_count() });
    }
    let pg = match embedding {
        Some(pg) => {
            if pg.net != *net {
                return Err(Error::InvalidEmbedding("embedding is for a different network".into()));
            }
            pg.clone()
        }
        None => embed_small(net, embed_limit)?.ok_or_else(|| Error::NotPlanar(net.name.clone()))?,
    };
    let k = pg.peel_edge_layers()?.k;
    let reg = three_regularize_plane(&pg)?.plane_graph()?;
    if reg.net.vertex_count() == 0 {
        // Nothing left that flow can pass through, and no interface.
        let index = SubsetIndex::of_network(&reg.net);
        let values = vec![Capacity::ZERO; index.len()];
        let typing = SubsetTable { index, values }.principal_typing(&net.name);
        return Ok(PipelineRun {
            typing,
            stats: EngineStats::default(),
            source: TreeSource::Layered,
            k: Some(k),
            k_regularized: Some(0),
            vertices: 0,
        });
    }
    let layered = layered_reassembling(&reg)?;
    let (mut typing, stats) = principal_typing_reassembled(&reg.net, &layered.tree)?;
    typing.network = net.name.clone();
    Ok(PipelineRun {
        typing,
        stats,
        source: TreeSource::Layered,
        k: Some(k),
        k_regularized: Some(layered.k),
        vertices: reg.net.vertex_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::DEFAULT_EMBED_LIMIT;
    use crate::fixtures;
    use crate::oracle::{principal_typing_oracle, DEFAULT_ORACLE_LIMIT};

    #[test]
    fn matches_oracle_on_fixtures() {
        for net in [fixtures::chain(), fixtures::cycle2(), fixtures::triangle(), fixtures::diamond(), fixtures::star(&[1, 2], &[3])] {
            let run = typing_pipeline(&net, None, None, DEFAULT_EMBED_LIMIT).unwrap();
            let oracle = principal_typing_oracle(&net, DEFAULT_ORACLE_LIMIT).unwrap();
            assert_eq!(run.typing, oracle, "{}", net.name);
        }
    }

    #[test]
    fn prism_network() {
        let pg = crate::generators::prism(3, 1).unwrap();
        let run = typing_pipeline(&pg.net, Some(&pg), None, DEFAULT_EMBED_LIMIT).unwrap();
        assert_eq!(run.k, Some(2));
        assert!(run.stats.alpha <= 4);
        assert_eq!(run.typing, principal_typing_oracle(&pg.net, DEFAULT_ORACLE_LIMIT).unwrap());
    }

    #[test]
    fn no_interface() {
        let mut net = FlowNetwork::new("closed");
        net.add_vertex("u").add_vertex("v");
        net.add_edge("x", Some("u"), Some("v"), Capacity::from_int(2));
        let run = typing_pipeline(&net, None, None, DEFAULT_EMBED_LIMIT).unwrap();
        assert_eq!(run.typing.entries.len(), 1);
        assert_eq!(run.typing, principal_typing_oracle(&net, DEFAULT_ORACLE_LIMIT).unwrap());
    }

    #[test]
    fn non_planar_needs_tree() {
        let mut net = FlowNetwork::new("k5");
        for i in 0..5 {
            net.add_vertex(format!("v{i}"));
        }
        for i in 0..5 {
            for j in (i + 1)..5 {
                net.add_edge(format!("e{i}{j}"), Some(&format!("v{i}")), Some(&format!("v{j}")), Capacity::from_int(1));
            }
        }
        net.add_edge("in", None, Some("v0"), Capacity::from_int(4));
        net.add_edge("out", Some("v4"), None, Capacity::from_int(4));
        assert!(matches!(typing_pipeline(&net, None, None, DEFAULT_EMBED_LIMIT), Err(Error::NotPlanar(_))));
        let names: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let tree = ReassemblingTree::left_comb(&names).unwrap();
        let run = typing_pipeline(&net, None, Some(&tree), DEFAULT_EMBED_LIMIT).unwrap();
        assert_eq!(run.typing, principal_typing_oracle(&net, DEFAULT_ORACLE_LIMIT).unwrap());
    }
}
