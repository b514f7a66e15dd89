//! Convex and isometric cycles: enumeration, shortest convex cycles through
//! incident edge pairs, girth signatures, convex traverses between
//! Θ-related edges, intertwining, the Euler face count, and the audits for
//! the two convex-cycle sharing claims.
//!
//! Enumeration grows cycles by DFS per target length. For isometric
//! candidates every window of at most half the target length must be a
//! geodesic and the start must stay reachable within the remaining budget,
//! which prunes hard enough to handle the 120-vertex solid. Reported cycles
//! are canonical: smallest vertex first, smaller neighbor next, no
//! duplicates.

use std::collections::{HashMap, VecDeque};

use crate::graph::{DistanceMatrix, EdgeId, Graph, Vertex};
use crate::metric::{is_convex_subgraph, is_geodesic, PartialCube};
use crate::Error;

/// One cycle with its convexity/isometry status. `vertices` is the cyclic
/// sequence without repeating the first vertex; closure is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleRecord {
    pub vertices: Vec<Vertex>,
    pub convex: bool,
    pub isometric: bool,
}

impl CycleRecord {
    pub fn len(&self) -> u32 {
        self.vertices.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge ids around the cycle, in traversal order.
    pub fn edge_ids(&self, g: &Graph) -> Vec<EdgeId> {
        let l = self.vertices.len();
        (0..l)
            .map(|i| {
                g.edge_id(self.vertices[i], self.vertices[(i + 1) % l])
                    .expect("cycle vertices are consecutively adjacent")
            })
            .collect()
    }

    pub fn contains_edge(&self, g: &Graph, e: EdgeId) -> bool {
        self.edge_ids(g).contains(&e)
    }
}

/// Lexicographically least rotation/reflection: smallest vertex first, then
/// the smaller of its two cycle neighbors.
fn canonicalize_cycle(seq: &[Vertex]) -> Vec<Vertex> {
    let l = seq.len();
    let min_pos = (0..l).min_by_key(|&i| seq[i]).unwrap();
    let forward: Vec<Vertex> = (0..l).map(|i| seq[(min_pos + i) % l]).collect();
    let backward: Vec<Vertex> = (0..l).map(|i| seq[(min_pos + l - i) % l]).collect();
    if forward <= backward {
        forward
    } else {
        backward
    }
}

fn cycle_is_chord_free(g: &Graph, seq: &[Vertex]) -> bool {
    let l = seq.len();
    for i in 0..l {
        for j in i + 2..l {
            if i == 0 && j == l - 1 {
                continue;
            }
            if g.has_edge(seq[i], seq[j]) {
                return false;
            }
        }
    }
    true
}

fn cycle_is_isometric(d: &DistanceMatrix, seq: &[Vertex]) -> bool {
    let l = seq.len() as u32;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            let along = (j - i) as u32;
            let dc = along.min(l - along);
            if d.dist(seq[i], seq[j]) != dc {
                return false;
            }
        }
    }
    true
}

/// A cycle is convex iff it is chord-free and its vertex set is interval
/// closed.
fn cycle_is_convex(g: &Graph, d: &DistanceMatrix, seq: &[Vertex]) -> bool {
    cycle_is_chord_free(g, seq)
        && is_convex_subgraph(g, d, seq).expect("a cycle is nonempty and connected")
}

fn record_for(g: &Graph, d: &DistanceMatrix, seq: &[Vertex]) -> CycleRecord {
    let isometric = cycle_is_isometric(d, seq);
    let convex = isometric && cycle_is_convex(g, d, seq);
    CycleRecord { vertices: canonicalize_cycle(seq), convex, isometric }
}

// ---------------------------------------------------------------------------
// Enumeration cores
// ---------------------------------------------------------------------------

struct CycleDfs<'a> {
    g: &'a Graph,
    d: &'a DistanceMatrix,
    bipartite: bool,
    target: u32,
    isometric_prune: bool,
    seq: Vec<Vertex>,
    on_path: Vec<bool>,
    out: Vec<Vec<Vertex>>,
}

impl<'a> CycleDfs<'a> {
    fn new(g: &'a Graph, d: &'a DistanceMatrix, target: u32, isometric_prune: bool) -> Self {
        CycleDfs {
            g,
            d,
            bipartite: g.is_bipartite(),
            target,
            isometric_prune,
            seq: Vec::with_capacity(target as usize),
            on_path: vec![false; g.n() as usize],
            out: Vec::new(),
        }
    }

    /// Enumerates simple cycles of exactly `target` edges extending `anchor`
    /// (the fixed first vertices of the traversal). With `min_start` the
    /// first vertex must be the cycle minimum and the orientation is fixed,
    /// so each cycle appears once; anchored traversals are unique as given.
    fn run(mut self, anchor: &[Vertex], min_start: bool) -> Vec<Vec<Vertex>> {
        for (i, &v) in anchor.iter().enumerate() {
            if self.isometric_prune && i > 0 && !self.window_ok(v, i as u32) {
                return Vec::new();
            }
            self.seq.push(v);
            self.on_path[v as usize] = true;
        }
        self.dfs(min_start);
        self.out
    }

    fn window_ok(&self, w: Vertex, pos: u32) -> bool {
        let half = self.target / 2;
        let wnd = pos.min(half);
        self.d.dist(self.seq[(pos - wnd) as usize], w) == wnd
    }

    fn closure_ok(&self, w: Vertex, pos: u32) -> bool {
        let remaining = self.target - pos;
        let back = self.d.dist(self.seq[0], w);
        if back > remaining {
            return false;
        }
        !(self.bipartite && (remaining - back) % 2 == 1)
    }

    fn dfs(&mut self, min_start: bool) {
        let i = self.seq.len() as u32;
        if i == self.target {
            let first = self.seq[0];
            let last = *self.seq.last().unwrap();
            if self.g.has_edge(last, first) && (!min_start || self.seq[1] < last) {
                self.out.push(self.seq.clone());
            }
            return;
        }
        let cur = *self.seq.last().unwrap();
        for idx in 0..self.g.neighbors(cur).len() {
            let w = self.g.neighbors(cur)[idx];
            if self.on_path[w as usize] || (min_start && w < self.seq[0]) {
                continue;
            }
            if self.isometric_prune && !self.window_ok(w, i) {
                continue;
            }
            if !self.closure_ok(w, i) {
                continue;
            }
            self.seq.push(w);
            self.on_path[w as usize] = true;
            self.dfs(min_start);
            self.seq.pop();
            self.on_path[w as usize] = false;
        }
    }
}

fn check_even_bound(max_len: u32) -> Result<(), Error> {
    if max_len < 4 || max_len % 2 != 0 {
        return Err(Error::BadCycleBound { max_len });
    }
    Ok(())
}

/// Every simple cycle of length at most `max_len`, flagged. Exhaustive DFS
/// with no isometry pruning; intended for short bounds (4-cycle and 6-cycle
/// censuses).
pub fn cycles_up_to(g: &Graph, d: &DistanceMatrix, max_len: u32) -> Result<Vec<CycleRecord>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut records = Vec::new();
    for target in 3..=max_len {
        for s in 0..g.n() {
            for seq in CycleDfs::new(g, d, target, false).run(&[s], true) {
                records.push(record_for(g, d, &seq));
            }
        }
    }
    records.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(records)
}

/// Every isometric cycle of length at most `max_len` (even), canonical and
/// duplicate-free, sorted by length then vertex sequence.
pub fn isometric_cycles_up_to(
    g: &Graph,
    d: &DistanceMatrix,
    max_len: u32,
) -> Result<Vec<CycleRecord>, Error> {
    check_even_bound(max_len)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut records = Vec::new();
    for target in (4..=max_len).step_by(2) {
        for s in 0..g.n() {
            for seq in CycleDfs::new(g, d, target, true).run(&[s], true) {
                let rec = record_for(g, d, &seq);
                if rec.isometric {
                    records.push(rec);
                }
            }
        }
    }
    records.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(records)
}

/// Every convex cycle of length at most `max_len` (even), canonical and
/// duplicate-free.
pub fn enumerate_convex_cycles(
    g: &Graph,
    d: &DistanceMatrix,
    max_len: u32,
) -> Result<Vec<CycleRecord>, Error> {
    let mut records = isometric_cycles_up_to(g, d, max_len)?;
    records.retain(|r| r.convex);
    Ok(records)
}

/// Default enumeration bound: a convex cycle is isometric, so its length is
/// at most twice the diameter; the slack guards the bound's edge cases.
pub fn default_cycle_bound(d: &DistanceMatrix) -> u32 {
    2 * d.diameter().unwrap_or(1) + 2
}

// ---------------------------------------------------------------------------
// Shortest convex cycles through incident pairs
// ---------------------------------------------------------------------------

/// Minimum-length convex cycle containing the path u1 - u - u2, by iterative
/// deepening on the cycle length up to twice the diameter. Ties are broken
/// by the canonical vertex sequence. `None` means no convex cycle exists
/// within the bound, which signals a hypothesis violation upstream.
pub fn shortest_convex_cycle_through(
    g: &Graph,
    d: &DistanceMatrix,
    u1: Vertex,
    u: Vertex,
    u2: Vertex,
) -> Result<Option<CycleRecord>, Error> {
    if !g.has_edge(u1, u) {
        return Err(Error::NotAdjacent { u: u1, v: u });
    }
    if !g.has_edge(u, u2) || u1 == u2 {
        return Err(Error::NotAdjacent { u, v: u2 });
    }
    let diameter = d.diameter().ok_or(Error::Disconnected)?;
    let mut target = 4;
    while target <= 2 * diameter {
        let mut best: Option<Vec<Vertex>> = None;
        for seq in CycleDfs::new(g, d, target, true).run(&[u1, u, u2], false) {
            if cycle_is_isometric(d, &seq) && cycle_is_convex(g, d, &seq) {
                let canon = canonicalize_cycle(&seq);
                if best.as_ref().is_none_or(|b| canon < *b) {
                    best = Some(canon);
                }
            }
        }
        if let Some(vertices) = best {
            return Ok(Some(CycleRecord { vertices, convex: true, isometric: true }));
        }
        target += 2;
    }
    Ok(None)
}

/// Checks that every incident edge pair lies in a convex cycle; returns the
/// first uncovered triple (u1, u, u2) or `None` when covered.
pub fn all_incident_pairs_covered(
    g: &Graph,
    d: &DistanceMatrix,
) -> Result<Option<(Vertex, Vertex, Vertex)>, Error> {
    if let Some((vertex, degree)) = g.cubic_violation() {
        return Err(Error::NotCubic { vertex, degree });
    }
    for u in 0..g.n() {
        let nbrs = g.neighbors(u).to_vec();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if shortest_convex_cycle_through(g, d, nbrs[i], u, nbrs[j])?.is_none() {
                    return Ok(Some((nbrs[i], u, nbrs[j])));
                }
            }
        }
    }
    Ok(None)
}

/// Sorted per-vertex triple of shortest-convex-cycle lengths through the
/// three incident edge pairs, plus the global triple (taken at vertex 0;
/// `uniform` flags whether every vertex agrees).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GirthSignature {
    pub triple: [u32; 3],
    pub per_vertex: Vec<[u32; 3]>,
    pub uniform: bool,
}

pub fn girth_signature(g: &Graph, d: &DistanceMatrix) -> Result<GirthSignature, Error> {
    if let Some((vertex, degree)) = g.cubic_violation() {
        return Err(Error::NotCubic { vertex, degree });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut per_vertex = Vec::with_capacity(g.n() as usize);
    for u in 0..g.n() {
        let nbrs = g.neighbors(u).to_vec();
        let mut triple = [0u32; 3];
        let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
        for (slot, &(i, j)) in pairs.iter().enumerate() {
            match shortest_convex_cycle_through(g, d, nbrs[i], u, nbrs[j])? {
                Some(rec) => triple[slot] = rec.len(),
                None => {
                    return Err(Error::IncidentPairUncovered { u1: nbrs[i], u, u2: nbrs[j] })
                }
            }
        }
        triple.sort_unstable();
        per_vertex.push(triple);
    }
    let triple = per_vertex[0];
    let uniform = per_vertex.iter().all(|&t| t == triple);
    Ok(GirthSignature { triple, per_vertex, uniform })
}

// ---------------------------------------------------------------------------
// Convex traverses
// ---------------------------------------------------------------------------

/// A chain of convex cycles linking two Θ-related edges: the start edge lies
/// only on the first cycle, the end edge only on the last, consecutive
/// cycles share exactly one cut edge, non-consecutive cycles are disjoint,
/// and both sides are geodesics of equal length.
#[derive(Clone, Debug)]
pub struct ConvexTraverse {
    pub cycles: Vec<CycleRecord>,
    pub start_edge: (Vertex, Vertex),
    pub end_edge: (Vertex, Vertex),
    pub side_v: Vec<Vertex>,
    pub side_u: Vec<Vertex>,
}

impl ConvexTraverse {
    pub fn length(&self) -> u32 {
        (self.side_v.len() - 1) as u32
    }
}

#[derive(Clone)]
struct CandidateCycle {
    vertices: Vec<Vertex>,
    cut_pair: [EdgeId; 2],
    vertex_mask: Vec<u64>,
}

impl CandidateCycle {
    fn disjoint_from(&self, other: &CandidateCycle) -> bool {
        self.vertex_mask
            .iter()
            .zip(&other.vertex_mask)
            .all(|(a, b)| a & b == 0)
    }

    fn shared_vertices_with(&self, other: &CandidateCycle) -> u32 {
        self.vertex_mask
            .iter()
            .zip(&other.vertex_mask)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }
}

/// Reusable traverse search: caches, per cut edge, the convex cycles through
/// it together with their second cut edge.
pub struct TraverseFinder<'a> {
    pc: &'a PartialCube,
    max_len: u32,
    cache: HashMap<EdgeId, std::rc::Rc<Vec<CandidateCycle>>>,
}

impl<'a> TraverseFinder<'a> {
    pub fn new(pc: &'a PartialCube) -> Self {
        let max_len = default_cycle_bound(pc.dist());
        TraverseFinder { pc, max_len, cache: HashMap::new() }
    }

    fn cycles_through(&mut self, f: EdgeId) -> std::rc::Rc<Vec<CandidateCycle>> {
        if let Some(hit) = self.cache.get(&f) {
            return hit.clone();
        }
        let g = self.pc.graph();
        let d = self.pc.dist();
        let theta = self.pc.theta();
        let class = theta.class_of(f);
        let (a, b) = g.edge_endpoints(f);
        let words = (g.n() as usize).div_ceil(64);
        let mut found: Vec<CandidateCycle> = Vec::new();
        for target in (4..=self.max_len).step_by(2) {
            for seq in CycleDfs::new(g, d, target, true).run(&[a, b], false) {
                if !cycle_is_isometric(d, &seq) || !cycle_is_convex(g, d, &seq) {
                    continue;
                }
                let mut cuts: Vec<EdgeId> = Vec::new();
                let l = seq.len();
                for i in 0..l {
                    let e = g.edge_id(seq[i], seq[(i + 1) % l]).unwrap();
                    if theta.class_of(e) == class {
                        cuts.push(e);
                    }
                }
                debug_assert_eq!(cuts.len(), 2, "a convex cycle crosses a cut exactly twice");
                let mut vertex_mask = vec![0u64; words];
                for &v in &seq {
                    vertex_mask[v as usize >> 6] |= 1 << (v & 63);
                }
                cuts.sort_unstable();
                found.push(CandidateCycle {
                    vertices: seq,
                    cut_pair: [cuts[0], cuts[1]],
                    vertex_mask,
                });
            }
        }
        found.sort_by(|x, y| {
            (x.vertices.len(), canonicalize_cycle(&x.vertices))
                .cmp(&(y.vertices.len(), canonicalize_cycle(&y.vertices)))
        });
        let rc = std::rc::Rc::new(found);
        self.cache.insert(f, rc.clone());
        rc
    }

    /// Finds a convex traverse from `e1` to `e2` by breadth-first search
    /// over partial chains. The search is exhaustive, so failure proves no
    /// traverse exists within the invariants and is reported as an error.
    pub fn find(&mut self, e1: EdgeId, e2: EdgeId) -> Result<ConvexTraverse, Error> {
        let g = self.pc.graph();
        let d = self.pc.dist();
        let pair = |e: EdgeId| g.edge_endpoints(e);
        if e1 == e2 || !self.pc.theta().same_class(e1, e2) {
            return Err(Error::NotThetaRelated { e1: pair(e1), e2: pair(e2) });
        }
        let (v1, u1) = pair(e1);
        let (x, y) = pair(e2);
        let (v2, u2) = if d.dist(v1, x) < d.dist(v1, y) { (x, y) } else { (y, x) };

        // state: chain of cycles, oriented frontier cut edge, partial sides
        struct State {
            chain: Vec<usize>, // indices into `store`
            frontier: EdgeId,
            frontier_v: Vertex,
            frontier_u: Vertex,
            side_v: Vec<Vertex>,
            side_u: Vec<Vertex>,
        }
        let mut store: Vec<CandidateCycle> = Vec::new();
        let mut queue: VecDeque<State> = VecDeque::new();

        let start_cycles = self.cycles_through(e1);
        for cand in start_cycles.iter() {
            let other = if cand.cut_pair[0] == e1 { cand.cut_pair[1] } else { cand.cut_pair[0] };
            let (arc_v, reach_v) = cycle_arc(&cand.vertices, v1, u1, pair(other));
            let (arc_u, reach_u) = cycle_arc(&cand.vertices, u1, v1, pair(other));
            debug_assert_ne!(reach_v, reach_u);
            if !partial_side_ok(d, v1, &arc_v) || !partial_side_ok(d, u1, &arc_u) {
                continue;
            }
            store.push(cand.clone());
            queue.push_back(State {
                chain: vec![store.len() - 1],
                frontier: other,
                frontier_v: reach_v,
                frontier_u: reach_u,
                side_v: arc_v,
                side_u: arc_u,
            });
        }

        while let Some(state) = queue.pop_front() {
            if state.frontier == e2 {
                // orientation: the v-side must end at v2
                let (side_v, side_u) = if state.frontier_v == v2 {
                    (state.side_v, state.side_u)
                } else {
                    (state.side_u, state.side_v)
                };
                let traverse = ConvexTraverse {
                    cycles: state
                        .chain
                        .iter()
                        .map(|&i| record_for(g, d, &store[i].vertices))
                        .collect(),
                    start_edge: (v1, u1),
                    end_edge: (v2, u2),
                    side_v,
                    side_u,
                };
                verify_traverse(self.pc, &traverse).map_err(|_| Error::TraverseNotFound {
                    e1: pair(e1),
                    e2: pair(e2),
                })?;
                return Ok(traverse);
            }
            let expansions = self.cycles_through(state.frontier);
            for cand in expansions.iter() {
                let last = &store[state.chain[state.chain.len() - 1]];
                // consecutive cycles share exactly the frontier edge
                if cand.shared_vertices_with(last) != 2 {
                    continue;
                }
                if state.chain.len() >= 2
                    && !state.chain[..state.chain.len() - 1]
                        .iter()
                        .all(|&i| cand.disjoint_from(&store[i]))
                {
                    continue;
                }
                let other = if cand.cut_pair[0] == state.frontier {
                    cand.cut_pair[1]
                } else {
                    cand.cut_pair[0]
                };
                if other == state.frontier {
                    continue;
                }
                let (arc_v, reach_v) =
                    cycle_arc(&cand.vertices, state.frontier_v, state.frontier_u, pair(other));
                let (arc_u, reach_u) =
                    cycle_arc(&cand.vertices, state.frontier_u, state.frontier_v, pair(other));
                let mut side_v = state.side_v.clone();
                side_v.extend_from_slice(&arc_v[1..]);
                let mut side_u = state.side_u.clone();
                side_u.extend_from_slice(&arc_u[1..]);
                if !partial_side_ok(d, v1, &side_v) && !partial_side_ok(d, u1, &side_v) {
                    continue;
                }
                if !partial_side_ok(d, u1, &side_u) && !partial_side_ok(d, v1, &side_u) {
                    continue;
                }
                store.push(cand.clone());
                let mut chain = state.chain.clone();
                chain.push(store.len() - 1);
                queue.push_back(State {
                    chain,
                    frontier: other,
                    frontier_v: reach_v,
                    frontier_u: reach_u,
                    side_v,
                    side_u,
                });
            }
        }
        Err(Error::TraverseNotFound { e1: pair(e1), e2: pair(e2) })
    }
}

/// A partial side must stay geodesic from its origin.
fn partial_side_ok(d: &DistanceMatrix, origin: Vertex, side: &[Vertex]) -> bool {
    side[0] == origin && d.dist(side[0], side[side.len() - 1]) == (side.len() - 1) as u32
}

/// Walks the cycle from `from`, away from `avoid`, until reaching an
/// endpoint of `stop_edge`; returns the arc and the endpoint reached.
fn cycle_arc(
    cycle: &[Vertex],
    from: Vertex,
    avoid: Vertex,
    stop_edge: (Vertex, Vertex),
) -> (Vec<Vertex>, Vertex) {
    let l = cycle.len();
    let pos = cycle.iter().position(|&v| v == from).expect("from lies on the cycle");
    let succ = cycle[(pos + 1) % l];
    let step: isize = if succ == avoid { -1 } else { 1 };
    let mut arc = vec![from];
    let mut at = pos as isize;
    loop {
        let cur = cycle[at.rem_euclid(l as isize) as usize];
        if cur == stop_edge.0 || cur == stop_edge.1 {
            return (arc, cur);
        }
        at += step;
        let next = cycle[at.rem_euclid(l as isize) as usize];
        arc.push(next);
        if next == stop_edge.0 || next == stop_edge.1 {
            return (arc, next);
        }
        debug_assert!(arc.len() <= l, "arc walk failed to terminate");
    }
}

/// One-shot traverse search; see [`TraverseFinder`] for batched use.
pub fn find_convex_traverse(
    pc: &PartialCube,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<ConvexTraverse, Error> {
    TraverseFinder::new(pc).find(e1, e2)
}

/// Checks every traverse invariant; returns the first violation as text.
pub fn verify_traverse(pc: &PartialCube, t: &ConvexTraverse) -> Result<(), String> {
    let g = pc.graph();
    let d = pc.dist();
    if t.cycles.is_empty() {
        return Err("traverse has no cycles".into());
    }
    let e1 = g
        .edge_id(t.start_edge.0, t.start_edge.1)
        .ok_or("start edge missing from graph")?;
    let e2 = g
        .edge_id(t.end_edge.0, t.end_edge.1)
        .ok_or("end edge missing from graph")?;
    let class = pc.theta().class_of(e1);
    if pc.theta().class_of(e2) != class {
        return Err("end edge is not in the start edge's cut".into());
    }
    let edge_sets: Vec<Vec<EdgeId>> = t
        .cycles
        .iter()
        .map(|c| {
            let mut ids = c.edge_ids(g);
            ids.sort_unstable();
            ids
        })
        .collect();
    for (i, c) in t.cycles.iter().enumerate() {
        if !c.convex {
            return Err(format!("cycle {i} is not convex"));
        }
        let on = edge_sets[i].binary_search(&e1).is_ok();
        if on != (i == 0) {
            return Err("start edge must lie on exactly the first cycle".into());
        }
        let on_end = edge_sets[i].binary_search(&e2).is_ok();
        if on_end != (i == t.cycles.len() - 1) {
            return Err("end edge must lie on exactly the last cycle".into());
        }
    }
    for i in 0..t.cycles.len() {
        for j in i + 1..t.cycles.len() {
            let shared: Vec<EdgeId> = edge_sets[i]
                .iter()
                .copied()
                .filter(|e| edge_sets[j].binary_search(e).is_ok())
                .collect();
            let shared_vertices: Vec<Vertex> = t.cycles[i]
                .vertices
                .iter()
                .copied()
                .filter(|v| t.cycles[j].vertices.contains(v))
                .collect();
            if j == i + 1 {
                if shared.len() != 1 || pc.theta().class_of(shared[0]) != class {
                    return Err(format!("cycles {i},{j} must share exactly one cut edge"));
                }
                if shared_vertices.len() != 2 {
                    return Err(format!("cycles {i},{j} share more than one edge's vertices"));
                }
            } else if !shared_vertices.is_empty() {
                return Err(format!("non-consecutive cycles {i},{j} intersect"));
            }
        }
    }
    for (side, start, end) in [
        (&t.side_v, t.start_edge.0, t.end_edge.0),
        (&t.side_u, t.start_edge.1, t.end_edge.1),
    ] {
        if side.first() != Some(&start) || side.last() != Some(&end) {
            return Err("side endpoints do not match the oriented edges".into());
        }
        if !is_geodesic(g, d, side).map_err(|e| e.to_string())? {
            return Err("side is not a geodesic".into());
        }
        let on_union = |v: &Vertex| t.cycles.iter().any(|c| c.vertices.contains(v));
        if !side.iter().all(on_union) {
            return Err("side leaves the union of the cycles".into());
        }
    }
    if t.side_v.len() != t.side_u.len() {
        return Err("sides have different lengths".into());
    }
    // both sides cross the same multiset of cuts
    let classes = |side: &[Vertex]| -> Vec<usize> {
        let mut cs: Vec<usize> = side
            .windows(2)
            .map(|w| pc.theta().class_of(g.edge_id(w[0], w[1]).unwrap()))
            .collect();
        cs.sort_unstable();
        cs
    };
    let cv = classes(&t.side_v);
    if cv != classes(&t.side_u) {
        return Err("sides cross different cut multisets".into());
    }
    let mut dedup = cv.clone();
    dedup.dedup();
    if dedup.len() != cv.len() {
        return Err("a side crosses some cut twice".into());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Intertwining
// ---------------------------------------------------------------------------

/// Two isometric cycles intertwine when their shared vertices form a single
/// path of at least two edges and everything else is distinct. The residue
/// is (l1 + l2 - 4m) / 2 for shared path length m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwiningRecord {
    pub shared_path: Vec<Vertex>,
    pub shared_edges: u32,
    pub l1: u32,
    pub l2: u32,
    pub residue: u32,
}

/// Shared vertices as a contiguous arc of `cycle`, if they are one.
fn shared_arc(cycle: &[Vertex], shared: &[bool]) -> Option<Vec<Vertex>> {
    let l = cycle.len();
    let count = cycle.iter().filter(|&&v| shared[v as usize]).count();
    if count == 0 || count == l {
        return None;
    }
    // find a position where the arc starts: shared, predecessor not shared
    let start = (0..l).find(|&i| {
        shared[cycle[i] as usize] && !shared[cycle[(i + l - 1) % l] as usize]
    })?;
    let arc: Vec<Vertex> = (0..count).map(|k| cycle[(start + k) % l]).collect();
    if arc.iter().all(|&v| shared[v as usize]) && arc.len() == count {
        // contiguity: the `count` vertices from `start` must all be shared
        Some(arc)
    } else {
        None
    }
}

pub fn intertwining(c1: &CycleRecord, c2: &CycleRecord) -> Option<IntertwiningRecord> {
    if !c1.isometric || !c2.isometric || c1.vertices == c2.vertices {
        return None;
    }
    let max_v = c1
        .vertices
        .iter()
        .chain(&c2.vertices)
        .copied()
        .max()
        .unwrap() as usize;
    let mut in1 = vec![false; max_v + 1];
    for &v in &c1.vertices {
        in1[v as usize] = true;
    }
    let mut shared = vec![false; max_v + 1];
    let mut shared_count = 0;
    for &v in &c2.vertices {
        if in1[v as usize] {
            shared[v as usize] = true;
            shared_count += 1;
        }
    }
    if shared_count < 3 {
        return None; // fewer than two shared edges
    }
    let arc1 = shared_arc(&c1.vertices, &shared)?;
    let arc2 = shared_arc(&c2.vertices, &shared)?;
    let mut rev = arc2.clone();
    rev.reverse();
    if arc1 != arc2 && arc1 != rev {
        return None;
    }
    // the arc must be a path in both cycles, which contiguity guarantees;
    // check the edge counts stay within the definition
    let m = (arc1.len() - 1) as u32;
    let (l1, l2) = (c1.len(), c2.len());
    if 2 * m > l1 || 2 * m > l2 {
        return None;
    }
    Some(IntertwiningRecord {
        shared_path: arc1,
        shared_edges: m,
        l1,
        l2,
        residue: (l1 + l2 - 4 * m) / 2,
    })
}

// ---------------------------------------------------------------------------
// Euler face count
// ---------------------------------------------------------------------------

/// Face counts and Euler characteristic for a cubic partial cube with girth
/// signature (4, 6, 6): every count is obtained by enumeration, then the
/// arithmetic consequences are asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub n: u32,
    pub e: u32,
    pub f4: u32,
    pub f6: u32,
    pub f: u32,
    pub chi: i64,
}

pub fn euler_report(g: &Graph) -> Result<EulerReport, Error> {
    use crate::metric::{check_partial_cube, CubeVerdict};
    let pc = match check_partial_cube(g) {
        CubeVerdict::Cube(pc) => pc,
        CubeVerdict::Not(_) => return Err(Error::NotPartialCube),
    };
    let d = pc.dist();
    let sig = girth_signature(g, d)?;
    if !(sig.uniform && sig.triple == [4, 6, 6]) {
        return Err(Error::SignatureMismatch { found: sig.triple, required: [4, 6, 6] });
    }
    let four_cycles: Vec<CycleRecord> = cycles_up_to(g, d, 4)?
        .into_iter()
        .filter(|c| c.len() == 4)
        .collect();
    let six_cycles: Vec<CycleRecord> = enumerate_convex_cycles(g, d, 6)?
        .into_iter()
        .filter(|c| c.len() == 6)
        .collect();
    let faces: Vec<&CycleRecord> = four_cycles.iter().chain(six_cycles.iter()).collect();
    for (i, a) in faces.iter().enumerate() {
        for b in &faces[i + 1..] {
            let ea = a.edge_ids(g);
            let shared = b.edge_ids(g).iter().filter(|e| ea.contains(e)).count();
            if shared > 1 {
                return Err(Error::FacePairOverlap {
                    c1: a.vertices.clone(),
                    c2: b.vertices.clone(),
                });
            }
        }
    }
    let n = g.n();
    let e = g.m() as u32;
    let f4 = four_cycles.len() as u32;
    let f6 = six_cycles.len() as u32;
    let f = f4 + f6;
    let chi = n as i64 - e as i64 + f as i64;
    if 3 * n != 2 * e || 4 * f4 != n || 3 * f6 != n || chi != (n / 12) as i64 {
        return Err(Error::EulerConsequence {
            detail: format!("n={n} e={e} f4={f4} f6={f6} chi={chi}"),
        });
    }
    Ok(EulerReport { n, e, f4, f6, f, chi })
}

// ---------------------------------------------------------------------------
// Claims audit
// ---------------------------------------------------------------------------

/// Outcome of the convex-cycle sharing audit: all 4-cycles must be convex,
/// convex cycles sharing at least two edges must intertwine, and no 4-cycle
/// may share two edges with another convex cycle.
#[derive(Clone, Debug, Default)]
pub struct ClaimsAudit {
    pub four_cycle_count: usize,
    pub convex_cycle_count: usize,
    pub nonconvex_four_cycles: Vec<Vec<Vertex>>,
    pub non_intertwining_pairs: Vec<(Vec<Vertex>, Vec<Vertex>)>,
    pub four_cycle_overlaps: Vec<(Vec<Vertex>, Vec<Vertex>)>,
}

impl ClaimsAudit {
    pub fn passed(&self) -> bool {
        self.nonconvex_four_cycles.is_empty()
            && self.non_intertwining_pairs.is_empty()
            && self.four_cycle_overlaps.is_empty()
    }
}

pub fn claims_audit(g: &Graph, max_len: u32) -> Result<ClaimsAudit, Error> {
    use crate::metric::{check_partial_cube, CubeVerdict};
    let pc = match check_partial_cube(g) {
        CubeVerdict::Cube(pc) => pc,
        CubeVerdict::Not(_) => return Err(Error::NotPartialCube),
    };
    let d = pc.dist();
    let mut audit = ClaimsAudit::default();
    let four_cycles: Vec<CycleRecord> = cycles_up_to(g, d, 4)?
        .into_iter()
        .filter(|c| c.len() == 4)
        .collect();
    audit.four_cycle_count = four_cycles.len();
    for c in &four_cycles {
        if !c.convex {
            audit.nonconvex_four_cycles.push(c.vertices.clone());
        }
    }
    let convex = enumerate_convex_cycles(g, d, max_len)?;
    audit.convex_cycle_count = convex.len();
    let edge_sets: Vec<Vec<EdgeId>> = convex
        .iter()
        .map(|c| {
            let mut ids = c.edge_ids(g);
            ids.sort_unstable();
            ids
        })
        .collect();
    for i in 0..convex.len() {
        for j in i + 1..convex.len() {
            let shared = edge_sets[i]
                .iter()
                .filter(|e| edge_sets[j].binary_search(e).is_ok())
                .count();
            if shared < 2 {
                continue;
            }
            if intertwining(&convex[i], &convex[j]).is_none() {
                audit
                    .non_intertwining_pairs
                    .push((convex[i].vertices.clone(), convex[j].vertices.clone()));
            }
            if convex[i].len() == 4 || convex[j].len() == 4 {
                audit
                    .four_cycle_overlaps
                    .push((convex[i].vertices.clone(), convex[j].vertices.clone()));
            }
        }
    }
    Ok(audit)
}

// ---------------------------------------------------------------------------
// Isometric pattern search
// ---------------------------------------------------------------------------

/// Searches for an embedding of `pattern` into `host` that maps edges to
/// edges and preserves all pairwise distances (an isometric copy). Generic
/// backtracking; returns the image of each pattern vertex.
pub fn find_isometric_embedding(
    host: &Graph,
    host_d: &DistanceMatrix,
    pattern: &Graph,
    pattern_d: &DistanceMatrix,
) -> Option<Vec<Vertex>> {
    let pn = pattern.n() as usize;
    if pn == 0 || pn > host.n() as usize {
        return None;
    }
    // order pattern vertices so each has a placed neighbor (pattern connected)
    let order: Vec<Vertex> = {
        let mut seen = vec![false; pn];
        let mut order = vec![0u32];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            for &w in pattern.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    order.push(w);
                }
            }
            head += 1;
        }
        order
    };
    let mut image = vec![u32::MAX; pn];
    let mut used = vec![false; host.n() as usize];
    fn place(
        k: usize,
        order: &[Vertex],
        image: &mut [Vertex],
        used: &mut [bool],
        host: &Graph,
        host_d: &DistanceMatrix,
        pattern: &Graph,
        pattern_d: &DistanceMatrix,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let p = order[k];
        // candidates: host neighbors of the image of p's first placed neighbor
        let anchor = pattern.neighbors(p).iter().find(|&&w| image[w as usize] != u32::MAX);
        let candidates: Vec<Vertex> = match anchor {
            Some(&w) => host.neighbors(image[w as usize]).to_vec(),
            None => (0..host.n()).collect(),
        };
        'cand: for c in candidates {
            if used[c as usize] {
                continue;
            }
            for &q in order[..k].iter() {
                let dq = pattern_d.dist(p, q);
                if host_d.dist(c, image[q as usize]) != dq {
                    continue 'cand;
                }
                if dq == 1 && !host.has_edge(c, image[q as usize]) {
                    continue 'cand;
                }
            }
            image[p as usize] = c;
            used[c as usize] = true;
            if place(k + 1, order, image, used, host, host_d, pattern, pattern_d) {
                return true;
            }
            image[p as usize] = u32::MAX;
            used[c as usize] = false;
        }
        false
    }
    place(0, &order, &mut image, &mut used, host, host_d, pattern, pattern_d).then_some(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        cubic_permutahedron, cycle, generalized_petersen, graph_x, hypercube, prism,
    };
    use crate::metric::check_partial_cube;

    fn pc_of(g: &Graph) -> Box<PartialCube> {
        check_partial_cube(g).cube().expect("test graph is a partial cube")
    }

    #[test]
    fn q3_has_six_faces_and_no_convex_hexagons() {
        let q3 = hypercube(3).unwrap();
        let d = q3.distances();
        let convex = enumerate_convex_cycles(&q3, &d, 6).unwrap();
        assert_eq!(convex.iter().filter(|c| c.len() == 4).count(), 6);
        assert_eq!(convex.iter().filter(|c| c.len() == 6).count(), 0);
        // the six-cycles exist and are isometric, just not convex
        let iso = isometric_cycles_up_to(&q3, &d, 6).unwrap();
        assert!(iso.iter().any(|c| c.len() == 6 && !c.convex));
    }

    #[test]
    fn g103_has_twenty_convex_hexagons_and_no_squares() {
        let g = generalized_petersen(10, 3).unwrap();
        let d = g.distances();
        let convex = enumerate_convex_cycles(&g, &d, 6).unwrap();
        assert_eq!(convex.iter().filter(|c| c.len() == 4).count(), 0);
        assert_eq!(convex.iter().filter(|c| c.len() == 6).count(), 20);
    }

    #[test]
    fn permutahedron_face_counts() {
        let g = cubic_permutahedron();
        let d = g.distances();
        let convex = enumerate_convex_cycles(&g, &d, 6).unwrap();
        assert_eq!(convex.iter().filter(|c| c.len() == 4).count(), 6);
        assert_eq!(convex.iter().filter(|c| c.len() == 6).count(), 8);
    }

    #[test]
    fn enumeration_rejects_odd_bounds() {
        let q3 = hypercube(3).unwrap();
        let d = q3.distances();
        assert_eq!(
            enumerate_convex_cycles(&q3, &d, 5),
            Err(Error::BadCycleBound { max_len: 5 })
        );
    }

    #[test]
    fn enumeration_is_deterministic_and_duplicate_free() {
        let g = prism(6).unwrap();
        let d = g.distances();
        let a = enumerate_convex_cycles(&g, &d, default_cycle_bound(&d)).unwrap();
        let b = enumerate_convex_cycles(&g, &d, default_cycle_bound(&d)).unwrap();
        assert_eq!(a, b);
        let mut keys: Vec<&Vec<Vertex>> = a.iter().map(|c| &c.vertices).collect();
        keys.dedup();
        assert_eq!(keys.len(), a.len());
    }

    #[test]
    fn shortest_convex_cycles_in_q3_and_g103() {
        let q3 = hypercube(3).unwrap();
        let d3 = q3.distances();
        for u in 0..q3.n() {
            let nb = q3.neighbors(u).to_vec();
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let rec = shortest_convex_cycle_through(&q3, &d3, nb[i], u, nb[j])
                    .unwrap()
                    .expect("pair covered");
                assert_eq!(rec.len(), 4);
            }
        }
        let g = generalized_petersen(10, 3).unwrap();
        let dg = g.distances();
        for u in 0..g.n() {
            let nb = g.neighbors(u).to_vec();
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let rec = shortest_convex_cycle_through(&g, &dg, nb[i], u, nb[j])
                    .unwrap()
                    .expect("pair covered");
                assert_eq!(rec.len(), 6);
            }
        }
    }

    #[test]
    fn girth_signatures_of_named_graphs() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(girth_signature(&q3, &q3.distances()).unwrap().triple, [4, 4, 4]);
        let p12 = prism(12).unwrap();
        let sig = girth_signature(&p12, &p12.distances()).unwrap();
        assert_eq!(sig.triple, [4, 4, 12]);
        assert!(sig.uniform);
        let g = generalized_petersen(10, 3).unwrap();
        assert_eq!(girth_signature(&g, &g.distances()).unwrap().triple, [6, 6, 6]);
        let c6 = cycle(6).unwrap();
        assert!(matches!(
            girth_signature(&c6, &c6.distances()),
            Err(Error::NotCubic { .. })
        ));
    }

    #[test]
    fn incident_pair_coverage() {
        for g in [prism(6).unwrap(), generalized_petersen(10, 3).unwrap(), cubic_permutahedron()] {
            let d = g.distances();
            assert_eq!(all_incident_pairs_covered(&g, &d).unwrap(), None);
        }
    }

    #[test]
    fn traverse_on_c6_opposite_edges() {
        let c6 = cycle(6).unwrap();
        let pc = pc_of(&c6);
        let e1 = c6.edge_id(0, 1).unwrap();
        let e2 = c6.edge_id(3, 4).unwrap();
        let t = find_convex_traverse(&pc, e1, e2).unwrap();
        assert_eq!(t.cycles.len(), 1);
        assert_eq!(t.cycles[0].len(), 6);
        assert!(verify_traverse(&pc, &t).is_ok());
    }

    #[test]
    fn traverse_across_one_q3_face() {
        let q3 = hypercube(3).unwrap();
        let pc = pc_of(&q3);
        // opposite edges of one face: 0-1 and 2-3 (coordinates differ in bit 0)
        let e1 = q3.edge_id(0, 1).unwrap();
        let e2 = q3.edge_id(2, 3).unwrap();
        let t = find_convex_traverse(&pc, e1, e2).unwrap();
        assert_eq!(t.length(), 1);
        assert_eq!(t.cycles.len(), 1);
        assert_eq!(t.cycles[0].len(), 4);
    }

    #[test]
    fn traverse_is_a_ladder_of_squares_on_k2_c8() {
        let p = prism(8).unwrap();
        let pc = pc_of(&p);
        // K2-direction edges: (0, b) - (1, b) is vertex b and b + 8
        let e1 = p.edge_id(0, 8).unwrap();
        let e2 = p.edge_id(4, 12).unwrap();
        let t = find_convex_traverse(&pc, e1, e2).unwrap();
        assert_eq!(t.cycles.len(), 4);
        assert!(t.cycles.iter().all(|c| c.len() == 4));
        assert_eq!(t.length(), 4);
        assert!(verify_traverse(&pc, &t).is_ok());
    }

    #[test]
    fn traverse_rejects_unrelated_edges() {
        let q3 = hypercube(3).unwrap();
        let pc = pc_of(&q3);
        let e1 = q3.edge_id(0, 1).unwrap();
        let e2 = q3.edge_id(0, 2).unwrap();
        assert!(matches!(
            find_convex_traverse(&pc, e1, e2),
            Err(Error::NotThetaRelated { .. })
        ));
    }

    #[test]
    fn intertwining_arithmetic() {
        // two hexagons sharing two consecutive edges
        let c1 = CycleRecord { vertices: vec![0, 1, 2, 3, 4, 5], convex: true, isometric: true };
        let c2 = CycleRecord { vertices: vec![0, 1, 2, 6, 7, 8], convex: true, isometric: true };
        let rec = intertwining(&c1, &c2).expect("these intertwine");
        assert_eq!(rec.shared_edges, 2);
        assert_eq!(rec.residue, 2);
        // sharing a single edge is below the threshold
        let c3 = CycleRecord { vertices: vec![0, 1, 9, 10, 11, 12], convex: true, isometric: true };
        assert_eq!(intertwining(&c1, &c3), None);
    }

    #[test]
    fn intertwining_found_in_g103() {
        let g = generalized_petersen(10, 3).unwrap();
        let d = g.distances();
        let convex = enumerate_convex_cycles(&g, &d, 6).unwrap();
        let mut found = false;
        for i in 0..convex.len() {
            for j in i + 1..convex.len() {
                if let Some(rec) = intertwining(&convex[i], &convex[j]) {
                    assert_eq!(rec.residue, 2);
                    assert_eq!(rec.shared_edges, 2);
                    found = true;
                }
            }
        }
        assert!(found, "G(10,3) has intertwining convex hexagons");
    }

    #[test]
    fn euler_report_on_the_permutahedron() {
        let rep = euler_report(&cubic_permutahedron()).unwrap();
        assert_eq!(
            rep,
            EulerReport { n: 24, e: 36, f4: 6, f6: 8, f: 14, chi: 2 }
        );
    }

    #[test]
    fn euler_report_rejects_wrong_signature() {
        assert!(matches!(
            euler_report(&prism(6).unwrap()),
            Err(Error::SignatureMismatch { found: [4, 4, 6], .. })
        ));
    }

    #[test]
    fn claims_audit_passes_on_q3_and_g103() {
        let q3 = hypercube(3).unwrap();
        let audit = claims_audit(&q3, 8).unwrap();
        assert!(audit.passed());
        assert_eq!(audit.four_cycle_count, 6);
        let g = generalized_petersen(10, 3).unwrap();
        let audit = claims_audit(&g, 12).unwrap();
        assert!(audit.passed());
        assert_eq!(audit.four_cycle_count, 0);
    }

    #[test]
    fn isometric_x_in_g103_but_not_in_q3() {
        let x = graph_x();
        let xd = x.distances();
        let g = generalized_petersen(10, 3).unwrap();
        let gd = g.distances();
        let image = find_isometric_embedding(&g, &gd, &x, &xd).expect("X embeds isometrically");
        for (p, &img) in image.iter().enumerate() {
            for (q, &img2) in image.iter().enumerate() {
                if p < q {
                    assert_eq!(gd.dist(img, img2), xd.dist(p as u32, q as u32));
                }
            }
        }
        let q3 = hypercube(3).unwrap();
        assert_eq!(find_isometric_embedding(&q3, &q3.distances(), &x, &xd), None);
    }
}
