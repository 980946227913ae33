use pmckit::generate::{cube, cube_labels::*, watermelon_hubs, Family};
use pmckit::graph::{components, full_components, neighborhood};
use pmckit::modular::{
    base_enumerate, base_enumerate_capped, contract, expand, modular_decomposition, modular_width, pmcs_by_mw,
    separators_by_mw, NodeKind,
};
use pmckit::recognition::{
    active_separators, brute_force_pmcs, brute_force_separators, is_minimal_separator, is_pmc,
};
use pmckit::vc::{active_pmcs_by_vc, minimum_vertex_cover, pmcs_by_vc, separators_by_vc};
use pmckit::{Error, Graph, VertexSet};

fn set(vs: &[usize]) -> VertexSet {
    VertexSet::from(vs)
}

fn two_triangles() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
}

#[test]
fn neighborhoods_and_components() {
    let g = cube();
    assert_eq!(neighborhood(&g, set(&[A])).unwrap(), set(&[B, D, E]));
    assert_eq!(neighborhood(&g, VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
    let w = Family::Watermelon { p: 2, q: 3 }.generate().unwrap();
    let (u, _) = watermelon_hubs(2, 3);
    assert_eq!(neighborhood(&w, set(&[u])).unwrap(), set(&[1, 4]));
    assert!(matches!(neighborhood(&g, set(&[8])), Err(Error::VertexOutOfRange { .. })));

    assert_eq!(components(&g, set(&[A, E, G, C])).unwrap(), vec![set(&[B, F]), set(&[D, H])]);
    let k4 = Family::Complete(4).generate().unwrap();
    assert_eq!(components(&k4, VertexSet::EMPTY).unwrap(), vec![set(&[0, 1, 2, 3])]);
    let e3 = Family::Empty(3).generate().unwrap();
    assert_eq!(components(&e3, VertexSet::EMPTY).unwrap(), vec![set(&[0]), set(&[1]), set(&[2])]);

    assert_eq!(full_components(&g, set(&[A, E, G, C])).unwrap(), vec![set(&[B, F]), set(&[D, H])]);
    let p3 = Family::Path(3).generate().unwrap();
    assert_eq!(full_components(&p3, set(&[1])).unwrap(), vec![set(&[0]), set(&[2])]);
    assert_eq!(full_components(&k4, set(&[0, 1])).unwrap(), vec![set(&[2, 3])]);
}

#[test]
fn recognizers() {
    let g = cube();
    assert!(is_minimal_separator(&g, set(&[A, E, G, C])));
    let k5 = Family::Complete(5).generate().unwrap();
    assert!(!is_minimal_separator(&k5, set(&[0, 1, 2])));
    assert!(is_minimal_separator(&Family::Empty(2).generate().unwrap(), VertexSet::EMPTY));
    assert!(is_pmc(&k5, k5.vertices()));
    assert!(!is_pmc(&k5, set(&[0, 1])));
}

#[test]
fn oracle_fixtures() {
    let p3 = Family::Path(3).generate().unwrap();
    assert_eq!(brute_force_separators(&p3).unwrap(), vec![set(&[1])]);
    let cat = brute_force_pmcs(&p3).unwrap();
    assert!(cat.contains(set(&[0, 1])) && cat.contains(set(&[1, 2])));
    let k4 = Family::Complete(4).generate().unwrap();
    assert!(brute_force_separators(&k4).unwrap().is_empty());
    assert_eq!(brute_force_pmcs(&k4).unwrap().to_vec(), vec![k4.vertices()]);
    let seps = brute_force_separators(&cube()).unwrap();
    for s in [set(&[A, E, G, C]), set(&[A, H, C]), set(&[A, C, F]), set(&[A, F, H]), set(&[C, F, H])] {
        assert!(seps.contains(&s), "{s}");
    }
}

#[test]
fn vertex_cover_route() {
    for k in 2..6 {
        let g = Family::Watermelon { p: k, q: 3 }.generate().unwrap();
        assert_eq!(minimum_vertex_cover(&g).len(), k + 2);
    }
    assert!(minimum_vertex_cover(&Family::Empty(4).generate().unwrap()).is_empty());
    assert_eq!(minimum_vertex_cover(&Family::Complete(5).generate().unwrap()).len(), 4);

    let k5 = Family::Complete(5).generate().unwrap();
    assert!(separators_by_vc(&k5, minimum_vertex_cover(&k5)).unwrap().is_empty());
    assert_eq!(active_pmcs_by_vc(&k5, minimum_vertex_cover(&k5)).unwrap().to_vec(), vec![k5.vertices()]);
    assert!(matches!(separators_by_vc(&k5, set(&[0])), Err(Error::NotVertexCover(_))));

    let g = Family::Gnp { n: 10, prob: 0.3, seed: 5 }.generate().unwrap();
    assert_eq!(separators_by_vc(&g, minimum_vertex_cover(&g)).unwrap(), brute_force_separators(&g).unwrap());

    let c = cube();
    let active = active_pmcs_by_vc(&c, minimum_vertex_cover(&c)).unwrap();
    assert!(active.contains(set(&[A, E, G, C, H])));
    let all = pmcs_by_vc(&c).unwrap();
    assert_eq!(all, brute_force_pmcs(&c).unwrap());
    assert!(all.contains(set(&[A, C, F, H])));

    let g = Family::Gnp { n: 9, prob: 0.35, seed: 2 }.generate().unwrap();
    let oracle = brute_force_pmcs(&g).unwrap();
    for omega in active_pmcs_by_vc(&g, minimum_vertex_cover(&g)).unwrap().iter() {
        assert!(oracle.contains(*omega));
        let closed = g.vertices().iter().any(|t| g.neighbors(t).with(t) == *omega);
        assert!(closed || !active_separators(&g, *omega).unwrap().is_empty(), "{omega}");
    }
    assert_eq!(pmcs_by_vc(&Graph::empty(1).unwrap()).unwrap().to_vec(), vec![set(&[0])]);
}

#[test]
fn modular_route() {
    let k4 = Family::Complete(4).generate().unwrap();
    let t = modular_decomposition(&k4).unwrap();
    assert_eq!((t.kind, t.children.len(), modular_width(&t)), (NodeKind::Join, 4, 0));
    let e3 = Family::Empty(3).generate().unwrap();
    assert_eq!(modular_decomposition(&e3).unwrap().kind, NodeKind::Union);
    let p4 = Family::Path(4).generate().unwrap();
    assert_eq!(modular_width(&modular_decomposition(&p4).unwrap()), 4);
    assert_eq!(modular_width(&modular_decomposition(&cube()).unwrap()), 8);
    assert!(matches!(modular_decomposition(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph)));

    let children = [set(&[0, 1]), set(&[2])];
    assert_eq!(expand(set(&[0]), &children), set(&[0, 1]));
    assert_eq!(contract(set(&[1, 2]), &children), set(&[0, 1]));

    assert!(separators_by_mw(&k4).unwrap().is_empty());
    assert_eq!(separators_by_mw(&two_triangles()).unwrap(), vec![VertexSet::EMPTY]);
    assert_eq!(pmcs_by_mw(&k4).unwrap().to_vec(), vec![k4.vertices()]);
    assert_eq!(pmcs_by_mw(&two_triangles()).unwrap().to_vec(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
    assert_eq!(pmcs_by_mw(&cube()).unwrap(), brute_force_pmcs(&cube()).unwrap());

    let k5 = Family::Complete(5).generate().unwrap();
    let (seps, cat) = base_enumerate(&k5).unwrap();
    assert!(seps.is_empty());
    assert_eq!(cat.to_vec(), vec![k5.vertices()]);
    let (seps, _) = base_enumerate(&p4).unwrap();
    assert!(seps.contains(&set(&[1])) && seps.contains(&set(&[2])));
    assert!(base_enumerate(&e3).unwrap().0.contains(&VertexSet::EMPTY));
    assert!(matches!(base_enumerate_capped(&p4, 3), Err(Error::TooLarge { cap: 3, .. })));
}

#[test]
fn catalogs_serialize_as_sorted_lists() {
    let cat = pmcs_by_vc(&Family::Path(3).generate().unwrap()).unwrap();
    assert_eq!(serde_json::to_string(&cat).unwrap(), "[[0,1],[1,2]]");
}
