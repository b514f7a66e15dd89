//! Constructors for the graph families the toolkit works with: cycles,
//! hypercubes, prisms, generalized Petersen graphs, middle-level graphs, the
//! 10-vertex obstruction graph X, and the three sporadic solids as Coxeter
//! Cayley graphs. Every constructor is deterministic: identical parameters
//! yield identical edge lists.

mod coxeter;

pub use coxeter::{
    coxeter_cayley, coxeter_cayley_capped, CayleyGraph, CoxeterMatrix, GroupElement,
    DEFAULT_ELEMENT_CAP,
};

use crate::graph::Graph;
use crate::Error;

/// Cycle C_k with vertices 0..k-1 in cyclic order.
pub fn cycle(k: u32) -> Result<Graph, Error> {
    if k < 3 {
        return Err(Error::CycleTooShort { k });
    }
    let edges: Vec<(u32, u32)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::new(k, &edges)
}

/// K2, the single edge.
pub fn complete_k2() -> Graph {
    Graph::new(2, &[(0, 1)]).expect("K2 is valid")
}

/// Hypercube Q_d on binary-coordinate vertices: vertex x is the bitmask of
/// its coordinates, edges flip one bit.
pub fn hypercube(d: u32) -> Result<Graph, Error> {
    if !(1..=12).contains(&d) {
        return Err(Error::BadHypercubeDim { d });
    }
    let n = 1u32 << d;
    let mut edges = Vec::with_capacity((n as usize * d as usize) / 2);
    for x in 0..n {
        for bit in 0..d {
            if x & (1 << bit) == 0 {
                edges.push((x, x | 1 << bit));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Prism K2 □ C_k with product indexing: vertex (a, b) is a*k + b.
pub fn prism(k: u32) -> Result<Graph, Error> {
    Ok(complete_k2().cartesian_product(&cycle(k)?))
}

/// Generalized Petersen graph G(n, k): outer cycle 0..n-1, inner vertices
/// n..2n-1, spokes i ~ n+i, inner star edges n+i ~ n+((i+k) mod n).
pub fn generalized_petersen(n: u32, k: u32) -> Result<Graph, Error> {
    if n < 3 || k < 1 || 2 * k >= n {
        return Err(Error::BadPetersenParams { n, k });
    }
    let mut edges = Vec::with_capacity(3 * n as usize);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::new(2 * n, &edges)
}

/// Middle level graph of valency t: the subgraph of Q_{2t-1} induced on the
/// vertices of weight t and t-1, indexed by bitmask value ascending.
pub fn middle_levels(t: u32) -> Result<Graph, Error> {
    if !(1..=6).contains(&t) {
        return Err(Error::BadMiddleLevelsParam { t });
    }
    let d = 2 * t - 1;
    let masks: Vec<u32> = (0u32..1 << d)
        .filter(|x| {
            let w = x.count_ones();
            w == t || w == t - 1
        })
        .collect();
    let mut index = vec![u32::MAX; 1usize << d];
    for (i, &mask) in masks.iter().enumerate() {
        index[mask as usize] = i as u32;
    }
    let mut edges = Vec::new();
    for &mask in &masks {
        if mask.count_ones() != t {
            continue;
        }
        for bit in 0..d {
            if mask & (1 << bit) != 0 {
                let lower = mask & !(1 << bit);
                edges.push((index[mask as usize], index[lower as usize]));
            }
        }
    }
    Graph::new(masks.len() as u32, &edges)
}

/// The 10-vertex graph X: an 8-cycle v1..v8 (vertices 0..7) with two extra
/// vertices c1 = 8 joined to v4, v8 and c2 = 9 joined to v2, v6. Degree
/// sequence (2^6, 3^4), girth 6.
pub fn graph_x() -> Graph {
    let mut edges: Vec<(u32, u32)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    edges.push((8, 3)); // c1 ~ v4
    edges.push((8, 7)); // c1 ~ v8
    edges.push((9, 1)); // c2 ~ v2
    edges.push((9, 5)); // c2 ~ v6
    Graph::new(10, &edges).expect("graph X is valid")
}

/// The cubic permutahedron: Cayley graph of A3 (24 vertices).
pub fn cubic_permutahedron() -> Graph {
    coxeter_cayley(&CoxeterMatrix::a3())
        .expect("A3 is finite")
        .graph
}

/// The truncated cuboctahedron: Cayley graph of B3 (48 vertices).
pub fn truncated_cuboctahedron() -> Graph {
    coxeter_cayley(&CoxeterMatrix::b3())
        .expect("B3 is finite")
        .graph
}

/// The truncated icosidodecahedron: Cayley graph of H3 (120 vertices).
pub fn truncated_icosidodecahedron() -> Graph {
    coxeter_cayley(&CoxeterMatrix::h3())
        .expect("H3 is finite")
        .graph
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Vertex;
    use crate::metric::{check_partial_cube, is_isometric_subgraph};
    use crate::symmetry::{is_isomorphic, is_vertex_transitive, IsoCertificate};

    #[test]
    fn hypercube3_is_prism4() {
        let q3 = hypercube(3).unwrap();
        let p4 = prism(4).unwrap();
        assert!(matches!(is_isomorphic(&q3, &p4), IsoCertificate::Isomorphic(_)));
    }

    #[test]
    fn prism6_is_a_cubic_partial_cube() {
        let p = prism(6).unwrap();
        assert_eq!(p.n(), 12);
        assert!(p.is_cubic());
        assert!(check_partial_cube(&p).is_cube());
    }

    #[test]
    fn odd_cycle_is_not_a_partial_cube() {
        assert!(!check_partial_cube(&cycle(5).unwrap()).is_cube());
        assert_eq!(cycle(2), Err(Error::CycleTooShort { k: 2 }));
    }

    #[test]
    fn petersen_family_examples() {
        let g103 = generalized_petersen(10, 3).unwrap();
        assert_eq!(g103.n(), 20);
        assert_eq!(g103.m(), 30);
        assert_eq!(g103.girth(), Some(6));
        assert!(g103.is_connected() && g103.is_bipartite() && g103.is_cubic());
        assert!(check_partial_cube(&g103).is_cube());

        let g41 = generalized_petersen(4, 1).unwrap();
        assert!(matches!(
            is_isomorphic(&g41, &hypercube(3).unwrap()),
            IsoCertificate::Isomorphic(_)
        ));

        let petersen = generalized_petersen(5, 2).unwrap();
        assert!(!petersen.is_bipartite());

        assert_eq!(
            generalized_petersen(10, 5),
            Err(Error::BadPetersenParams { n: 10, k: 5 })
        );
    }

    #[test]
    fn middle_levels_small_cases() {
        let t1 = middle_levels(1).unwrap();
        assert!(matches!(is_isomorphic(&t1, &complete_k2()), IsoCertificate::Isomorphic(_)));
        let t2 = middle_levels(2).unwrap();
        assert!(matches!(
            is_isomorphic(&t2, &cycle(6).unwrap()),
            IsoCertificate::Isomorphic(_)
        ));
        let t3 = middle_levels(3).unwrap();
        assert!(matches!(
            is_isomorphic(&t3, &generalized_petersen(10, 3).unwrap()),
            IsoCertificate::Isomorphic(_)
        ));
    }

    #[test]
    fn graph_x_shape() {
        let x = graph_x();
        assert_eq!(x.n(), 10);
        assert_eq!(x.m(), 12);
        let mut ds = x.degree_sequence();
        ds.dedup();
        assert_eq!(ds, vec![2, 3]);
        assert_eq!(x.degree_sequence().iter().filter(|&&d| d == 2).count(), 6);
        assert_eq!(x.girth(), Some(6));
        assert_eq!(is_vertex_transitive(&x), Ok(false));
    }

    #[test]
    fn graph_x_has_three_isometric_six_cycles_through_v2() {
        let x = graph_x();
        let d = x.distances();
        // the three 6-cycles through v2 (vertex 1)
        let cycles: [&[Vertex]; 3] = [
            &[9, 1, 2, 3, 4, 5],
            &[9, 1, 0, 7, 6, 5],
            &[8, 3, 2, 1, 0, 7],
        ];
        for c in cycles {
            for i in 0..c.len() {
                assert!(x.has_edge(c[i], c[(i + 1) % c.len()]));
            }
            assert_eq!(is_isometric_subgraph(&x, &d, c), Ok(true));
        }
    }

    #[test]
    fn solids_are_cubic_vertex_transitive_partial_cubes() {
        for g in [cubic_permutahedron(), truncated_cuboctahedron(), truncated_icosidodecahedron()] {
            assert!(g.is_cubic());
            assert!(g.is_connected());
            assert!(g.is_bipartite());
            assert!(check_partial_cube(&g).is_cube());
            assert_eq!(is_vertex_transitive(&g), Ok(true));
        }
    }

    #[test]
    fn permutahedron_matches_adjacent_transposition_cayley_graph() {
        // independent construction: S4 on adjacent transpositions
        let mut perms: Vec<[u8; 4]> = vec![[0, 1, 2, 3]];
        let mut index = std::collections::HashMap::from([([0, 1, 2, 3], 0u32)]);
        let mut edges = Vec::new();
        let mut head = 0;
        while head < perms.len() {
            let p = perms[head];
            for swap in 0..3 {
                let mut q = p;
                q.swap(swap, swap + 1);
                let id = *index.entry(q).or_insert_with(|| {
                    perms.push(q);
                    (perms.len() - 1) as u32
                });
                edges.push((head as u32, id));
            }
            head += 1;
        }
        let s4 = Graph::new(24, &edges).unwrap();
        assert!(matches!(
            is_isomorphic(&s4, &cubic_permutahedron()),
            IsoCertificate::Isomorphic(_)
        ));
    }

    #[test]
    fn constructors_are_reproducible() {
        assert!(generalized_petersen(10, 3).unwrap() == generalized_petersen(10, 3).unwrap());
        assert!(truncated_cuboctahedron() == truncated_cuboctahedron());
    }
}
