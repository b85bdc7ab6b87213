//! Conflict graphs that turn injective coloring into proper coloring.
//!
//! The common-neighbor graph joins vertex pairs sharing a neighbor, so its
//! proper colorings are exactly the injective vertex colorings. The tilde
//! graph has one node per edge, joined when the edges have a common edge, so
//! its chromatic number equals the injective chromatic index.

use crate::coloring::incidence_lists;
use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConflictKind {
    CommonNeighbor,
    EdgeCommon,
}

/// Derived conflict structure. Node `i` corresponds to vertex `i` of the
/// source (common-neighbor kind) or to edge `i` in canonical order
/// (edge-common kind); `node_names` keeps the human-readable map.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    pub kind: ConflictKind,
    pub graph: Graph,
    pub node_names: Vec<String>,
}

/// Builds the common-neighbor graph: distinct vertices are joined when some
/// vertex is adjacent to both. Computed by enumerating neighbor pairs around
/// every center.
pub fn common_neighbor_graph(g: &Graph) -> ConflictGraph {
    let mut edges = Vec::new();
    for center in 0..g.order() {
        let ns = g.neighbors(center);
        for (i, &u) in ns.iter().enumerate() {
            for &w in &ns[i + 1..] {
                edges.push((u, w));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(g.order(), edges).expect("conflict graph is simple");
    let node_names = (0..g.order()).map(|v| g.label(v)).collect();
    ConflictGraph { kind: ConflictKind::CommonNeighbor, graph, node_names }
}

/// Builds the tilde graph on the edge set: edge-nodes are joined when a
/// third edge connects an endpoint of one to an endpoint of the other (the
/// triangle case included). Computed by enumerating each candidate middle
/// edge explicitly.
pub fn tilde_graph(g: &Graph) -> Result<ConflictGraph, Error> {
    if g.size() == 0 {
        return Err(Error::InvalidInput("tilde graph needs at least one edge".into()));
    }
    let inc = incidence_lists(g);
    let mut edges = Vec::new();
    for (middle, &(y, z)) in g.edges().iter().enumerate() {
        for &e1 in &inc[y] {
            if e1 == middle {
                continue;
            }
            for &e3 in &inc[z] {
                if e3 == middle || e3 == e1 {
                    continue;
                }
                edges.push((e1.min(e3), e1.max(e3)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = Graph::new(g.size(), edges).expect("conflict graph is simple");
    let node_names = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("{}|{}", g.label(u), g.label(v)))
        .collect();
    Ok(ConflictGraph { kind: ConflictKind::EdgeCommon, graph, node_names })
}

/// Six-vertex gadget whose four marked edges need pairwise distinct colors
/// in any injective edge coloring; forces the lower bound 4 inside the
/// dimension-2 Sierpinski graph over a triangle.
pub fn gadget_h() -> Graph {
    // vertices 0..6; edges as drawn: four constrained plus three connectors
    Graph::new(6, [(1, 2), (0, 2), (3, 4), (3, 5), (0, 1), (2, 3), (4, 5)])
        .expect("gadget H is simple")
}

/// Fifteen-vertex gadget (five triangles linked by bridges) whose tilde
/// graph has chromatic number 5; embeds into dimension-3 Sierpinski graphs
/// over a triangle and forces the lower bound 5 there.
pub fn gadget_p() -> Graph {
    let edges_1based = [
        (1, 2),
        (1, 9),
        (9, 2),
        (2, 3),
        (3, 10),
        (10, 4),
        (3, 4),
        (4, 8),
        (8, 11),
        (11, 14),
        (14, 15),
        (15, 13),
        (13, 12),
        (12, 5),
        (5, 6),
        (7, 6),
        (8, 7),
        (11, 7),
        (6, 12),
        (13, 14),
    ];
    let edges = edges_1based.iter().map(|&(a, b)| (a - 1, b - 1));
    Graph::new(15, edges).expect("gadget P is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn common_neighbor_graph_of_triangle_is_triangle() {
        let cg = common_neighbor_graph(&Graph::complete(3));
        assert_eq!(cg.graph.edges(), Graph::complete(3).edges());
    }

    #[test]
    fn common_neighbor_graph_of_p3_is_single_edge() {
        let cg = common_neighbor_graph(&Graph::path(3).unwrap());
        assert_eq!(cg.graph.edges(), &[(0, 2)]);
    }

    #[test]
    fn common_neighbor_graph_of_c8_splits_into_two_squares() {
        let cg = common_neighbor_graph(&Graph::cycle(8).unwrap());
        // vertices of one parity form a 4-cycle each
        assert_eq!(cg.graph.size(), 8);
        for &(u, v) in cg.graph.edges() {
            assert_eq!(u % 2, v % 2);
            assert_eq!((v + 8 - u) % 8 % 4, 2);
        }
    }

    #[test]
    fn tilde_graph_of_p4_has_one_conflict() {
        let tg = tilde_graph(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(tg.graph.order(), 3);
        assert_eq!(tg.graph.edges(), &[(0, 2)]);
    }

    #[test]
    fn tilde_graph_of_triangle_is_triangle() {
        let tg = tilde_graph(&Graph::complete(3)).unwrap();
        assert_eq!(tg.graph.order(), 3);
        assert_eq!(tg.graph.size(), 3);
    }

    #[test]
    fn tilde_graph_rejects_empty_edge_set() {
        let g = Graph::new(3, []).unwrap();
        assert!(tilde_graph(&g).is_err());
    }

    #[test]
    fn node_counts_match_source() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(common_neighbor_graph(&g).graph.order(), g.order());
        assert_eq!(tilde_graph(&g).unwrap().graph.order(), g.size());
    }

    #[test]
    fn gadget_sizes() {
        let h = gadget_h();
        assert_eq!(h.order(), 6);
        assert_eq!(h.size(), 7);
        let p = gadget_p();
        assert_eq!(p.order(), 15);
        assert_eq!(p.size(), 20);
    }

    #[test]
    fn gadget_p_is_five_triangles_with_five_bridges() {
        let p = gadget_p();
        let mut triangle_edges = 0;
        for &(u, v) in p.edges() {
            let closes = p
                .neighbors(u)
                .iter()
                .any(|&w| w != v && p.adjacent(v, w));
            if closes {
                triangle_edges += 1;
            }
        }
        assert_eq!(triangle_edges, 15);
        assert!(p.is_connected());
        assert_eq!(p.max_degree(), 3);
    }

    #[test]
    fn tilde_of_gadget_p_matches_the_drawn_conflict_graph() {
        // conflict graph as drawn, in the gadget's edge numbering 1..20
        let drawn: [(usize, usize); 51] = [
            (1, 2), (2, 3), (5, 6), (6, 7), (9, 10), (10, 11), (12, 13), (14, 15), (15, 16),
            (16, 17), (17, 18), (1, 3), (1, 4), (2, 5), (2, 6), (3, 5), (3, 6), (6, 10), (4, 7),
            (4, 8), (5, 7), (7, 9), (5, 8), (6, 9), (7, 10), (8, 11), (8, 12), (8, 13), (9, 11),
            (9, 13), (10, 12), (10, 15), (10, 14), (11, 14), (11, 15), (11, 16), (11, 17),
            (9, 16), (9, 17), (12, 19), (12, 18), (13, 19), (13, 20), (14, 19), (14, 20),
            (15, 18), (15, 20), (16, 18), (16, 20), (17, 19), (18, 20),
        ];
        // gadget edges in their drawn numbering, 1-based vertex labels
        let numbered: [(usize, usize); 20] = [
            (1, 9), (9, 2), (1, 2), (2, 3), (3, 10), (3, 4), (10, 4), (4, 8), (8, 11), (8, 7),
            (11, 7), (11, 14), (7, 6), (5, 6), (6, 12), (13, 14), (14, 15), (15, 13), (13, 12),
            (12, 5),
        ];
        let p = gadget_p();
        let to_index: Vec<usize> = numbered
            .iter()
            .map(|&(a, b)| p.edge_index(a - 1, b - 1).expect("edge exists"))
            .collect();
        let mut expected: Vec<(usize, usize)> = drawn
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (to_index[a - 1], to_index[b - 1]);
                (x.min(y), x.max(y))
            })
            .collect();
        expected.sort_unstable();
        let tg = tilde_graph(&p).unwrap();
        assert_eq!(tg.graph.edges(), expected.as_slice());
    }

    #[test]
    fn adjacent_edges_conflict_only_inside_triangles() {
        // in a triangle-free graph, two adjacent edges are never adjacent in
        // the tilde graph unless a third edge closes a path between their
        // far endpoints
        let g = Graph::cycle(5).unwrap();
        let tg = tilde_graph(&g).unwrap();
        for &(a, b) in tg.graph.edges() {
            let (u1, v1) = g.edges()[a];
            let (u2, v2) = g.edges()[b];
            let share = [u1, v1].iter().any(|x| [u2, v2].contains(x));
            assert!(!share, "adjacent edges of a triangle-free cycle cannot conflict");
        }
    }
}
