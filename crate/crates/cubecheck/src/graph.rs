//! Graph storage, the BFS distance kernel, and Cartesian products.
//!
//! Vertices are `0..n`. Edges are stored once as pairs `(u, v)` with `u < v`,
//! sorted lexicographically; the position of a pair in that list is its edge
//! id. Edge ids are the stable index every downstream module (Θ-classes,
//! halfspaces, colorings) keys on. All types are immutable after
//! construction.

use std::collections::{BTreeSet, VecDeque};

use crate::Error;

pub type Vertex = u32;
pub type EdgeId = usize;

/// Simple undirected graph with vertex-indexed sorted adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    adj_edge_ids: Vec<Vec<EdgeId>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m(), self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating parallel mentions.
    /// Loops and out-of-range endpoints are rejected with the offending pair.
    pub fn new(n: u32, edge_list: &[(u32, u32)]) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::LoopEdge { vertex: u });
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(Vertex, Vertex)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n as usize];
        let mut adj_edge_ids = vec![Vec::new(); n as usize];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u as usize].push(v);
            adj_edge_ids[u as usize].push(id);
            adj[v as usize].push(u);
            adj_edge_ids[v as usize].push(id);
        }
        for v in 0..n as usize {
            let mut paired: Vec<(Vertex, EdgeId)> = adj[v]
                .iter()
                .copied()
                .zip(adj_edge_ids[v].iter().copied())
                .collect();
            paired.sort_unstable();
            adj[v] = paired.iter().map(|p| p.0).collect();
            adj_edge_ids[v] = paired.iter().map(|p| p.1).collect();
        }
        Ok(Graph { adj, adj_edge_ids, edges })
    }

    pub fn n(&self) -> u32 {
        self.adj.len() as u32
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.adj[v as usize].len() as u32
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    /// Edge ids parallel to `neighbors(v)`.
    pub fn incident_edge_ids(&self, v: Vertex) -> &[EdgeId] {
        &self.adj_edge_ids[v as usize]
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_endpoints(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let (a, b) = (u.min(v), u.max(v));
        let nbrs = &self.adj[a as usize];
        nbrs.binary_search(&b)
            .ok()
            .map(|pos| self.adj_edge_ids[a as usize][pos])
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn is_cubic(&self) -> bool {
        self.cubic_violation().is_none()
    }

    /// First vertex whose degree differs from 3, with its degree.
    pub fn cubic_violation(&self) -> Option<(Vertex, u32)> {
        (0..self.n()).find_map(|v| {
            let d = self.degree(v);
            (d != 3).then_some((v, d))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n() as usize;
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut count = 1usize;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Two-colors the graph or returns an odd closed walk as witness.
    pub fn bipartition(&self) -> Bipartiteness {
        let n = self.n() as usize;
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![Vertex::MAX; n];
        for root in 0..n as u32 {
            if color[root as usize] != u8::MAX {
                continue;
            }
            color[root as usize] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - color[v as usize];
                        parent[w as usize] = v;
                        queue.push_back(w);
                    } else if color[w as usize] == color[v as usize] {
                        // walk root..v, edge v-w, then w..root: odd closed walk
                        let mut up = Vec::new();
                        let mut x = v;
                        while x != Vertex::MAX {
                            up.push(x);
                            x = parent[x as usize];
                        }
                        up.reverse();
                        let mut down = Vec::new();
                        let mut y = w;
                        while y != Vertex::MAX {
                            down.push(y);
                            y = parent[y as usize];
                        }
                        let mut walk = up;
                        walk.extend(down);
                        return Bipartiteness::OddWalk(walk);
                    }
                }
            }
        }
        Bipartiteness::Bipartite(color)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite(_))
    }

    /// Cartesian product; vertex `(a, b)` of `self □ other` gets index
    /// `a * other.n() + b` so constructions are reproducible bit-exactly.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nh = other.n();
        let mut edges = Vec::with_capacity(
            self.m() * other.n() as usize + other.m() * self.n() as usize,
        );
        for &(g1, g2) in self.edges() {
            for b in 0..nh {
                edges.push((g1 * nh + b, g2 * nh + b));
            }
        }
        for a in 0..self.n() {
            for &(h1, h2) in other.edges() {
                edges.push((a * nh + h1, a * nh + h2));
            }
        }
        Graph::new(self.n() * nh, &edges).expect("product of valid graphs is valid")
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::compute(self)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// bijection on `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n() as usize);
        let edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Graph::new(self.n(), &edges).expect("bijective relabeling preserves validity")
    }

    /// Sorted degree sequence, an isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = (0..self.n()).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }

    /// Length of a shortest cycle, `None` for forests. Computed per edge:
    /// the shortest cycle through `uv` is `1 +` the `u`-`v` distance with
    /// `uv` removed.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        for (skip, &(u, v)) in self.edges.iter().enumerate() {
            let mut dist = vec![u32::MAX; self.n() as usize];
            dist[u as usize] = 0;
            let mut queue = VecDeque::from([u]);
            'bfs: while let Some(x) = queue.pop_front() {
                for (&y, &e) in self.neighbors(x).iter().zip(self.incident_edge_ids(x)) {
                    if e == skip || dist[y as usize] != u32::MAX {
                        continue;
                    }
                    dist[y as usize] = dist[x as usize] + 1;
                    if y == v {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
            if dist[v as usize] != u32::MAX {
                let cyc = dist[v as usize] + 1;
                best = Some(best.map_or(cyc, |b| b.min(cyc)));
            }
        }
        best
    }
}

/// Result of the bipartiteness test: a 2-coloring or an odd closed walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Vec<u8>),
    OddWalk(Vec<Vertex>),
}

/// Exact all-pairs hop counts. Unreachable pairs carry a dedicated sentinel,
/// surfaced as `None`; nothing in the crate does arithmetic on the sentinel.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

const UNREACHED: u16 = u16::MAX;

/// For graphs up to this order the BFS frontier is expanded with word-wide
/// bitset unions; above it a scalar queue BFS takes over.
const BITSET_LIMIT: usize = 4096;

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> DistanceMatrix {
        if (g.n() as usize) <= BITSET_LIMIT {
            Self::compute_bitset(g)
        } else {
            Self::compute_scalar(g)
        }
    }

    /// Bit-parallel BFS: the next frontier is the word-wise union of the
    /// adjacency bitsets of the current frontier, minus visited.
    pub(crate) fn compute_bitset(g: &Graph) -> DistanceMatrix {
        let n = g.n() as usize;
        let words = n.div_ceil(64);
        let mut adj_bits = vec![0u64; n * words];
        for v in 0..n {
            for &w in g.neighbors(v as u32) {
                adj_bits[v * words + (w as usize >> 6)] |= 1u64 << (w & 63);
            }
        }
        let mut d = vec![UNREACHED; n * n];
        let mut frontier = vec![0u64; words];
        let mut next = vec![0u64; words];
        let mut visited = vec![0u64; words];
        for src in 0..n {
            frontier.fill(0);
            visited.fill(0);
            frontier[src >> 6] |= 1 << (src & 63);
            visited[src >> 6] |= 1 << (src & 63);
            d[src * n + src] = 0;
            let mut level: u16 = 0;
            loop {
                level += 1;
                next.fill(0);
                for w in 0..words {
                    let mut bits = frontier[w];
                    while bits != 0 {
                        let v = (w << 6) + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        let row = &adj_bits[v * words..(v + 1) * words];
                        for (nw, &r) in next.iter_mut().zip(row) {
                            *nw |= r;
                        }
                    }
                }
                let mut any = false;
                for w in 0..words {
                    next[w] &= !visited[w];
                    visited[w] |= next[w];
                    let mut bits = next[w];
                    while bits != 0 {
                        let v = (w << 6) + bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        d[src * n + v] = level;
                        any = true;
                    }
                }
                if !any {
                    break;
                }
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        DistanceMatrix { n, d }
    }

    pub(crate) fn compute_scalar(g: &Graph) -> DistanceMatrix {
        let n = g.n() as usize;
        let mut d = vec![UNREACHED; n * n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            d[src * n + src] = 0;
            queue.push_back(src as u32);
            while let Some(v) = queue.pop_front() {
                let dv = d[src * n + v as usize];
                for &w in g.neighbors(v) {
                    if d[src * n + w as usize] == UNREACHED {
                        d[src * n + w as usize] = dv + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance, or `None` when the pair is unreachable.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let raw = self.d[u as usize * self.n + v as usize];
        (raw != UNREACHED).then_some(raw as u32)
    }

    /// Distance on a connected graph. Panics on an unreachable pair; callers
    /// gate on connectivity first.
    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        let raw = self.d[u as usize * self.n + v as usize];
        debug_assert!(raw != UNREACHED, "distance query on unreachable pair");
        raw as u32
    }

    pub fn is_finite(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHED)
    }

    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0u16;
        for &x in &self.d {
            if x == UNREACHED {
                return None;
            }
            best = best.max(x);
        }
        Some(best as u32)
    }

    /// Eccentricity of one vertex (max distance from it), if finite.
    pub fn eccentricity(&self, v: Vertex) -> Option<u32> {
        let row = &self.d[v as usize * self.n..(v as usize + 1) * self.n];
        let mut best = 0u16;
        for &x in row {
            if x == UNREACHED {
                return None;
            }
            best = best.max(x);
        }
        Some(best as u32)
    }
}

/// Exact unweighted all-pairs distances by BFS from every vertex.
pub fn bfs_distances(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::compute(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::new(k, &edges).unwrap()
    }

    #[test]
    fn build_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn build_c4_degrees() {
        let g = cycle(4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(g.m(), 4);
    }

    #[test]
    fn build_rejects_loop_and_range() {
        assert_eq!(
            Graph::new(3, &[(1, 1)]),
            Err(Error::LoopEdge { vertex: 1 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::EdgeOutOfRange { u: 0, v: 3, n: 3 })
        );
    }

    #[test]
    fn dedup_and_edge_ids() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edge_id(1, 0), Some(0));
        assert_eq!(g.edge_id(2, 1), Some(1));
        assert_eq!(g.edge_id(0, 2), None);
    }

    #[test]
    fn c6_antipodal_distance() {
        let d = cycle(6).distances();
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.get(0, 5), Some(1));
    }

    #[test]
    fn q3_via_product_has_diameter_3() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let q3 = k2.cartesian_product(&cycle(4));
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.m(), 12);
        assert!(q3.is_cubic());
        assert_eq!(q3.distances().diameter(), Some(3));
    }

    #[test]
    fn k2_c6_product_counts() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let p = k2.cartesian_product(&cycle(6));
        assert_eq!(p.n(), 12);
        assert_eq!(p.m(), 18);
        assert!(p.is_cubic());
    }

    #[test]
    fn product_distance_law_exhaustive() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let c5 = cycle(5);
        let p = k2.cartesian_product(&c5);
        let (dg, dh, dp) = (k2.distances(), c5.distances(), p.distances());
        for a in 0..2 {
            for b in 0..5 {
                for c in 0..2 {
                    for e in 0..5 {
                        assert_eq!(
                            dp.dist(a * 5 + b, c * 5 + e),
                            dg.dist(a, c) + dh.dist(b, e)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn c5_odd_walk_witness() {
        match cycle(5).bipartition() {
            Bipartiteness::OddWalk(walk) => {
                assert_eq!(walk.first(), walk.last());
                assert_eq!((walk.len() - 1) % 2, 1, "closed walk must have odd length");
                assert_eq!(walk.len() - 1, 5);
            }
            Bipartiteness::Bipartite(_) => panic!("C5 is not bipartite"),
        }
    }

    #[test]
    fn disconnected_detected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.distances().get(0, 2), None);
    }

    #[test]
    fn scalar_and_bitset_bfs_agree() {
        let graphs = [cycle(7), cycle(12), Graph::new(4, &[(0, 1), (2, 3)]).unwrap()];
        for g in &graphs {
            assert!(DistanceMatrix::compute_bitset(g) == DistanceMatrix::compute_scalar(g));
        }
    }

    #[test]
    fn metric_axioms_small() {
        let g = cycle(9);
        let d = g.distances();
        let n = g.n();
        for u in 0..n {
            assert_eq!(d.dist(u, u), 0);
            for v in 0..n {
                assert_eq!(d.dist(u, v), d.dist(v, u));
                assert_eq!(d.dist(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    assert!(d.dist(u, w) <= d.dist(u, v) + d.dist(v, w));
                }
            }
        }
    }
}
