use std::sync::Arc;

use edgefan::fan::{Certainty, FanSearchConfig};
use edgefan::verify::{search_extension_gadget, VerifyConfig};
use edgefan::{
    enumerate_connected, extend_multifan, grow_multifan, make_family, maximum_multifan, parse_graph6, stopping_colors,
    PartialColoring, TauSeqType,
};

/// Smallest corpus graph where some maximal fan at a critical edge has an
/// extended multi-fan with nonempty F′. The fan is not a maximum one: no
/// maximum fan in the n ≤ 8 corpus admits a qualifying neighbor of the pivot.
const GADGET: &str = "ER\\w";
const GADGET_COLORING: &str =
    "palette:4\n0-2:4\n1-3:4\n1-4:3\n1-5:1\n2-3:1\n2-4:2\n2-5:3\n3-5:2\n4-5:4\nuncolored:3-4\n";

#[test]
fn gadget_search_finds_the_fixture() {
    let graphs: Vec<_> = (3..=6).flat_map(|n| enumerate_connected(n).unwrap()).collect();
    let found = search_extension_gadget(&graphs, &VerifyConfig::default()).unwrap();
    assert!(found.maximum.is_none());
    let s = found.any.unwrap();
    assert_eq!(s.graph6, GADGET);
    assert_eq!((s.edge, s.center, s.pivot, s.beta), ((3, 4), 3, 4, 1));
    assert_eq!(s.coloring, GADGET_COLORING);
    assert!(!s.maximum_fan);
}

#[test]
fn gadget_extension_structure() {
    let g = Arc::new(parse_graph6(GADGET.as_bytes()).unwrap());
    let c = PartialColoring::from_dump(g.clone(), GADGET_COLORING, None).unwrap();
    let fan = grow_multifan(&c, 3).unwrap();
    assert_eq!(fan.vertices(), vec![3, 4, 2]);
    let k = stopping_colors(&fan);
    assert_eq!(k.all.iter().collect::<Vec<_>>(), vec![1, 2]);
    assert_eq!(k.outside.iter().collect::<Vec<_>>(), vec![2]);

    let ext = extend_multifan(&fan, 4, 1).unwrap();
    assert_eq!(ext.extension.len(), 1);
    let seq = &ext.extension[0];
    assert_eq!((seq.root, seq.root_color, seq.tau), (1, 3, 4));
    assert_eq!(seq.sequence.tail_vertices(), vec![1, 5]);
    assert_eq!(seq.kind, TauSeqType::D { end: 5 });
    assert_eq!(ext.extension_vertices(), vec![3, 1, 5]);
    assert!(c.is_elementary(&ext.vertices()).is_ok());

    // A different orbit reaches a fan of size 4, which leaves F′ empty.
    let e = g.edge_id(3, 4).unwrap();
    let best = maximum_multifan(&g, e, 3, &FanSearchConfig::default()).unwrap();
    assert_eq!((best.fan.size(), best.certainty), (4, Certainty::Certified));
}

#[test]
fn petersen_minus_vertex_light_fan() {
    let g = make_family("petersen-v").unwrap();
    let r = g.light_vertices().unwrap()[0];
    let s = *g.neighbors(r).iter().find(|&&v| g.degree(v) < g.max_degree()).unwrap();
    let best = maximum_multifan(&g, g.edge_id(r, s).unwrap(), r, &FanSearchConfig::default()).unwrap();
    assert_eq!(best.fan.size(), 4);
    assert_eq!(best.certainty, Certainty::Certified);
    assert!(best.fan.is_elementary().is_ok());
}
