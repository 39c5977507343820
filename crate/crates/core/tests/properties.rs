use flowtype::generators::{random_network, random_tree, rng};
use flowtype::oracle::{principal_typing_oracle, DEFAULT_ORACLE_LIMIT};
use flowtype::regularize::check_regular;
use flowtype::{
    embed_small, principal_typing_reassembled, three_regularize, typing_pipeline, FlowNetwork, PlaneGraph, ReassemblingTree, Typing,
    DEFAULT_EMBED_LIMIT,
};
use proptest::prelude::*;

fn network(seed: u64) -> FlowNetwork {
    random_network(&mut rng(seed), 7, 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reassembly_agrees_with_oracle(seed in any::<u64>()) {
        let net = network(seed);
        let oracle = principal_typing_oracle(&net, DEFAULT_ORACLE_LIMIT).unwrap();
        let tree = random_tree(&net, &mut rng(seed ^ 1)).unwrap();
        let (typing, _) = principal_typing_reassembled(&net, &tree).unwrap();
        prop_assert_eq!(typing, oracle);
    }

    #[test]
    fn typing_does_not_depend_on_tree(seed in any::<u64>()) {
        let net = network(seed);
        let names: Vec<&String> = net.vertices().collect();
        let comb = ReassemblingTree::left_comb(&names).unwrap();
        let balanced = ReassemblingTree::balanced(&names).unwrap();
        let (a, _) = principal_typing_reassembled(&net, &comb).unwrap();
        let (b, _) = principal_typing_reassembled(&net, &balanced).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn regularization_keeps_typing(seed in any::<u64>()) {
        let net = network(seed);
        let out = three_regularize(&net).unwrap();
        prop_assert!(check_regular(&net, &out.net).is_ok());
        let before = principal_typing_oracle(&net, DEFAULT_ORACLE_LIMIT).unwrap();
        let mut after = principal_typing_oracle(&out.net, DEFAULT_ORACLE_LIMIT).unwrap();
        after.network = before.network.clone();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn pipeline_on_planar_networks(seed in any::<u64>()) {
        let net = network(seed);
        match embed_small(&net, DEFAULT_EMBED_LIMIT).unwrap() {
            Some(pg) => {
                let run = typing_pipeline(&net, Some(&pg), None, DEFAULT_EMBED_LIMIT).unwrap();
                prop_assert_eq!(run.typing, principal_typing_oracle(&net, DEFAULT_ORACLE_LIMIT).unwrap());
            }
            None => prop_assert!(net.vertex_count() >= 5),
        }
    }

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let net = network(seed);
        prop_assert_eq!(FlowNetwork::from_json(&net.to_json()).unwrap(), net.clone());
        let typing = principal_typing_oracle(&net, DEFAULT_ORACLE_LIMIT).unwrap();
        prop_assert_eq!(Typing::from_json(&typing.to_json()).unwrap(), typing);
        let tree = random_tree(&net, &mut rng(seed)).unwrap();
        prop_assert_eq!(ReassemblingTree::from_json(&tree.to_json()).unwrap(), tree);
        if let Some(pg) = embed_small(&net, DEFAULT_EMBED_LIMIT).unwrap() {
            let back = PlaneGraph::from_json(&pg.to_json()).unwrap();
            prop_assert_eq!(back.rotation, pg.rotation);
        }
    }
}
