//! Automorphism groups, vertex-transitivity, graph isomorphism, and a
//! canonical labeling for small graphs.
//!
//! The search machinery is shared: equitable-partition refinement (iterated
//! neighbor-color counting) narrows candidates, backtracking individualizes
//! the first non-singleton cell. Group order comes from an orbit-stabilizer
//! recursion over the found generators, so elements are never enumerated.
//! Every permutation returned anywhere is re-verified edge by edge first.

use std::collections::VecDeque;

use crate::graph::{EdgeId, Graph, Vertex};
use crate::graph6::write_graph6;
use crate::metric::theta_star_classes;
use crate::Error;

/// Generators and orbit data for the automorphism group of a graph.
#[derive(Clone, Debug)]
pub struct AutomorphismReport {
    pub generators: Vec<Vec<Vertex>>,
    pub group_order: u64,
    pub orbit_of_zero: Vec<Vertex>,
    pub stabilizer_order_of_zero: u64,
}

/// Positive isomorphism certificate (vertex bijection `g -> h`) or the
/// invariant that refuted it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoCertificate {
    Isomorphic(Vec<Vertex>),
    NonIsomorphic(Refutation),
}

impl IsoCertificate {
    pub fn mapping(&self) -> Option<&[Vertex]> {
        match self {
            IsoCertificate::Isomorphic(p) => Some(p),
            IsoCertificate::NonIsomorphic(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    OrderMismatch { g_n: u32, h_n: u32 },
    SizeMismatch { g_m: usize, h_m: usize },
    DegreeSequence,
    DistanceDistribution,
    ThetaClassSizes,
    Exhausted,
}

/// Checks that `p` maps edges to edges bijectively.
pub fn is_isomorphism(g: &Graph, h: &Graph, p: &[Vertex]) -> bool {
    if g.n() != h.n() || g.m() != h.m() || p.len() != g.n() as usize {
        return false;
    }
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x as usize >= p.len() || seen[x as usize] {
            return false;
        }
        seen[x as usize] = true;
    }
    g.edges()
        .iter()
        .all(|&(u, v)| h.has_edge(p[u as usize], p[v as usize]))
}

// ---------------------------------------------------------------------------
// Equitable refinement
// ---------------------------------------------------------------------------

/// Iterated neighbor-color counting. New color ids are ranks of the
/// (old color, sorted neighbor colors) signatures under their natural order,
/// so two graphs refined side by side get comparable ids.
fn refine_colors(g: &Graph, colors: &mut [u32]) {
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(colors.len());
        for v in 0..g.n() {
            let mut nbr: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w as usize]).collect();
            nbr.sort_unstable();
            sigs.push((colors[v as usize], nbr));
        }
        let mut uniq: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        uniq.sort();
        uniq.dedup();
        let mut changed = false;
        for v in 0..colors.len() {
            let rank = uniq.binary_search(&&sigs[v]).unwrap() as u32;
            if colors[v] != rank {
                changed = true;
            }
            colors[v] = rank;
        }
        if !changed {
            break;
        }
    }
}

fn color_histogram(colors: &[u32]) -> Vec<(u32, u32)> {
    let mut hist: Vec<(u32, u32)> = Vec::new();
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    for c in sorted {
        match hist.last_mut() {
            Some(last) if last.0 == c => last.1 += 1,
            _ => hist.push((c, 1)),
        }
    }
    hist
}

/// Backtracking search for a color-preserving isomorphism `g -> h`.
/// Colors must come from the same refinement convention on both sides.
fn find_color_iso(g: &Graph, gcolors: &[u32], h: &Graph, hcolors: &[u32]) -> Option<Vec<Vertex>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let mut gc = gcolors.to_vec();
    let mut hc = hcolors.to_vec();
    refine_colors(g, &mut gc);
    refine_colors(h, &mut hc);
    let gh = color_histogram(&gc);
    if gh != color_histogram(&hc) {
        return None;
    }
    if gh.iter().all(|&(_, count)| count == 1) {
        let n = g.n() as usize;
        let mut by_color = vec![0u32; n];
        for (v, &c) in hc.iter().enumerate() {
            by_color[c as usize] = v as u32;
        }
        let p: Vec<Vertex> = gc.iter().map(|&c| by_color[c as usize]).collect();
        return is_isomorphism(g, h, &p).then_some(p);
    }
    let target = gh.iter().find(|&&(_, count)| count > 1).unwrap().0;
    let a = (0..g.n()).find(|&v| gc[v as usize] == target).unwrap();
    let fresh = gh.last().unwrap().0 + 1;
    for x in 0..h.n() {
        if hc[x as usize] != target {
            continue;
        }
        let mut gc2 = gc.clone();
        let mut hc2 = hc.clone();
        gc2[a as usize] = fresh;
        hc2[x as usize] = fresh;
        if let Some(p) = find_color_iso(g, &gc2, h, &hc2) {
            return Some(p);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Automorphism group
// ---------------------------------------------------------------------------

fn orbit_of(start: Vertex, gens: &[Vec<Vertex>]) -> Vec<Vertex> {
    let mut seen = std::collections::BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for p in gens {
            let w = p[v as usize];
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// Generators of the subgroup fixing the individualized colors, plus its
/// order via orbit-stabilizer: order = |orbit(base)| * order(stabilizer).
fn aut_gens(g: &Graph, colors: &[u32]) -> (Vec<Vec<Vertex>>, u64) {
    let mut refined = colors.to_vec();
    refine_colors(g, &mut refined);
    let hist = color_histogram(&refined);
    let Some(&(target, _)) = hist.iter().find(|&&(_, count)| count > 1) else {
        return (Vec::new(), 1);
    };
    let cell: Vec<Vertex> = (0..g.n()).filter(|&v| refined[v as usize] == target).collect();
    let base = cell[0];
    let fresh = hist.last().unwrap().0 + 1;
    let mut with_base = refined.clone();
    with_base[base as usize] = fresh;
    let (mut gens, sub_order) = aut_gens(g, &with_base);
    let mut orbit = orbit_of(base, &gens);
    for &v in &cell[1..] {
        if orbit.binary_search(&v).is_ok() {
            continue;
        }
        let mut with_v = refined.clone();
        with_v[v as usize] = fresh;
        if let Some(p) = find_color_iso(g, &with_base, g, &with_v) {
            debug_assert_eq!(p[base as usize], v);
            gens.push(p);
            orbit = orbit_of(base, &gens);
        }
    }
    let order = sub_order * orbit.len() as u64;
    (gens, order)
}

/// Automorphism generators, group order, and the orbit/stabilizer of
/// vertex 0. Exact; generators are verified edge by edge.
pub fn automorphisms(g: &Graph) -> Result<AutomorphismReport, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 0 {
        return Ok(AutomorphismReport {
            generators: Vec::new(),
            group_order: 1,
            orbit_of_zero: Vec::new(),
            stabilizer_order_of_zero: 1,
        });
    }
    let (gens, group_order) = aut_gens(g, &vec![0u32; g.n() as usize]);
    for p in &gens {
        assert!(is_isomorphism(g, g, p), "search produced an invalid automorphism");
    }
    let orbit_of_zero = orbit_of(0, &gens);
    let orbit_len = orbit_of_zero.len() as u64;
    debug_assert_eq!(group_order % orbit_len, 0);
    Ok(AutomorphismReport {
        generators: gens,
        group_order,
        orbit_of_zero,
        stabilizer_order_of_zero: group_order / orbit_len,
    })
}

/// True iff the orbit of vertex 0 is the whole vertex set.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool, Error> {
    Ok(automorphisms(g)?.orbit_of_zero.len() == g.n() as usize)
}

/// True iff the stabilizer of vertex 0 is trivial. In a vertex-transitive
/// graph all stabilizers are conjugate, so one vertex decides.
pub fn has_trivial_stabilizers(g: &Graph) -> Result<bool, Error> {
    Ok(automorphisms(g)?.stabilizer_order_of_zero == 1)
}

// ---------------------------------------------------------------------------
// Isomorphism with refutation shortcuts
// ---------------------------------------------------------------------------

fn distance_distribution(g: &Graph) -> Vec<u32> {
    let d = g.distances();
    let mut dist: Vec<u32> = Vec::with_capacity((g.n() * g.n()) as usize);
    for u in 0..g.n() {
        for v in 0..g.n() {
            dist.push(d.get(u, v).unwrap_or(u32::MAX));
        }
    }
    dist.sort_unstable();
    dist
}

fn theta_class_sizes(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_connected() {
        return None;
    }
    let d = g.distances();
    let theta = theta_star_classes(g, &d).ok()?;
    let mut sizes: Vec<usize> = theta.classes().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    Some(sizes)
}

/// Deterministic isomorphism test: cheap invariants first (order, size,
/// degree sequence, distance distribution, Θ*-class size multiset), then
/// refinement-guided backtracking. A returned mapping is verified both ways.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> IsoCertificate {
    use Refutation::*;
    if g.n() != h.n() {
        return IsoCertificate::NonIsomorphic(OrderMismatch { g_n: g.n(), h_n: h.n() });
    }
    if g.m() != h.m() {
        return IsoCertificate::NonIsomorphic(SizeMismatch { g_m: g.m(), h_m: h.m() });
    }
    if g.degree_sequence() != h.degree_sequence() {
        return IsoCertificate::NonIsomorphic(DegreeSequence);
    }
    if distance_distribution(g) != distance_distribution(h) {
        return IsoCertificate::NonIsomorphic(DistanceDistribution);
    }
    if theta_class_sizes(g) != theta_class_sizes(h) {
        return IsoCertificate::NonIsomorphic(ThetaClassSizes);
    }
    let gcolors = vec![0u32; g.n() as usize];
    let hcolors = vec![0u32; h.n() as usize];
    match find_color_iso(g, &gcolors, h, &hcolors) {
        Some(p) => {
            assert!(is_isomorphism(g, h, &p));
            assert!(is_isomorphism(h, g, &invert(&p)));
            IsoCertificate::Isomorphic(p)
        }
        None => IsoCertificate::NonIsomorphic(Exhausted),
    }
}

pub fn invert(p: &[Vertex]) -> Vec<Vertex> {
    let mut inv = vec![0u32; p.len()];
    for (v, &x) in p.iter().enumerate() {
        inv[x as usize] = v as u32;
    }
    inv
}

// ---------------------------------------------------------------------------
// Canonical labeling (graphs up to 32 vertices)
// ---------------------------------------------------------------------------
//
// The canonical form maximizes the column-wise upper-triangle bitstring, the
// same pair order graph6 uses. Placing vertices one position at a time
// decides one block of bits per step (adjacency of the new vertex to all
// earlier ones, earliest in the most significant bit), so the candidates at
// each step are exactly the unused vertices whose block value is maximal and
// the search never depends on undecided positions.

const CANON_MAX_N: usize = 32;

struct MaxLabelSearch<'g> {
    g: &'g Graph,
    n: usize,
    best: Vec<u32>,
    best_placed: Vec<Vertex>,
    found_greater: bool,
    stop_on_greater: bool,
}

impl<'g> MaxLabelSearch<'g> {
    fn new(g: &'g Graph, reference: Vec<u32>, reference_placed: Vec<Vertex>, stop: bool) -> Self {
        assert!(g.n() as usize <= CANON_MAX_N, "canonical labeling supports n <= 32");
        MaxLabelSearch {
            g,
            n: g.n() as usize,
            best: reference,
            best_placed: reference_placed,
            found_greater: false,
            stop_on_greater: stop,
        }
    }

    fn run(&mut self) {
        if self.n == 0 {
            return;
        }
        let mut placed = Vec::with_capacity(self.n);
        let mut blocks = Vec::with_capacity(self.n - 1);
        let block_val = vec![0u32; self.n];
        self.search(&mut placed, 0, &mut blocks, &block_val, true);
    }

    fn search(
        &mut self,
        placed: &mut Vec<Vertex>,
        used: u32,
        blocks: &mut Vec<u32>,
        block_val: &[u32],
        tight: bool,
    ) {
        if self.stop_on_greater && self.found_greater {
            return;
        }
        let k = placed.len();
        if k == self.n {
            if !tight && blocks.as_slice() > self.best.as_slice() {
                self.best = blocks.clone();
                self.best_placed = placed.clone();
            }
            return;
        }
        let mut max_block = 0u32;
        for v in 0..self.n {
            if used >> v & 1 == 0 {
                max_block = max_block.max(block_val[v]);
            }
        }
        let mut child_tight = tight;
        if k > 0 && tight {
            match max_block.cmp(&self.best[k - 1]) {
                std::cmp::Ordering::Less => return,
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Greater => {
                    self.found_greater = true;
                    if self.stop_on_greater {
                        return;
                    }
                    child_tight = false;
                }
            }
        }
        let mut next_val = vec![0u32; self.n];
        for v in 0..self.n as u32 {
            if used >> v & 1 == 1 || block_val[v as usize] != max_block {
                continue;
            }
            for w in 0..self.n as u32 {
                next_val[w as usize] =
                    (block_val[w as usize] << 1) | u32::from(self.g.has_edge(v, w));
            }
            placed.push(v);
            if k > 0 {
                blocks.push(max_block);
            }
            self.search(placed, used | 1 << v, blocks, &next_val, child_tight);
            if k > 0 {
                blocks.pop();
            }
            placed.pop();
            if self.stop_on_greater && self.found_greater {
                return;
            }
        }
    }
}

fn blocks_for_order(g: &Graph, order: &[Vertex]) -> Vec<u32> {
    let mut blocks = Vec::with_capacity(order.len().saturating_sub(1));
    for k in 1..order.len() {
        let mut b = 0u32;
        for &earlier in &order[..k] {
            b = (b << 1) | u32::from(g.has_edge(earlier, order[k]));
        }
        blocks.push(b);
    }
    blocks
}

/// True iff some relabeling yields a strictly larger adjacency string than
/// the identity labeling, i.e. the graph is not canonically labeled.
pub(crate) fn exists_greater_labeling(g: &Graph) -> bool {
    let identity: Vec<Vertex> = (0..g.n()).collect();
    let reference = blocks_for_order(g, &identity);
    let mut search = MaxLabelSearch::new(g, reference, identity, true);
    search.run();
    search.found_greater
}

/// The permutation sending each vertex to its canonical position (the order
/// maximizing the adjacency string).
pub fn canonical_labeling(g: &Graph) -> Vec<Vertex> {
    let identity: Vec<Vertex> = (0..g.n()).collect();
    let reference = blocks_for_order(g, &identity);
    let mut search = MaxLabelSearch::new(g, reference, identity, false);
    search.run();
    let mut perm = vec![0u32; g.n() as usize];
    for (pos, &v) in search.best_placed.iter().enumerate() {
        perm[v as usize] = pos as u32;
    }
    perm
}

/// graph6 line of the canonically relabeled graph: equal strings iff the
/// graphs are isomorphic (for orders up to 32).
pub fn canonical_graph6(g: &Graph) -> String {
    write_graph6(&g.relabel(&canonical_labeling(g)))
}

/// Orbits of the edge set under a generator list.
pub fn edge_orbits(g: &Graph, gens: &[Vec<Vertex>]) -> Vec<Vec<EdgeId>> {
    let mut seen = vec![false; g.m()];
    let mut orbits = Vec::new();
    for start in 0..g.m() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            let (u, v) = g.edge_endpoints(e);
            for p in gens {
                let img = g
                    .edge_id(p[u as usize], p[v as usize])
                    .expect("automorphisms map edges to edges");
                if !seen[img] {
                    seen[img] = true;
                    orbit.push(img);
                    queue.push_back(img);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::new(k, &edges).unwrap()
    }

    fn k2() -> Graph {
        Graph::new(2, &[(0, 1)]).unwrap()
    }

    fn hypercube(d: u32) -> Graph {
        let mut g = k2();
        for _ in 1..d {
            g = g.cartesian_product(&k2());
        }
        g
    }

    #[test]
    fn c6_group_is_dihedral() {
        let rep = automorphisms(&cycle(6)).unwrap();
        assert_eq!(rep.group_order, 12);
        assert_eq!(rep.orbit_of_zero.len(), 6);
        assert_eq!(rep.stabilizer_order_of_zero, 2);
    }

    #[test]
    fn q3_group_order_48() {
        let rep = automorphisms(&hypercube(3)).unwrap();
        assert_eq!(rep.group_order, 48);
        assert_eq!(rep.orbit_of_zero.len(), 8);
        assert_eq!(rep.stabilizer_order_of_zero, 6);
    }

    #[test]
    fn path_is_not_vertex_transitive() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(is_vertex_transitive(&p4), Ok(false));
        assert_eq!(is_vertex_transitive(&cycle(8)), Ok(true));
    }

    #[test]
    fn stabilizer_tests() {
        assert_eq!(has_trivial_stabilizers(&cycle(6)), Ok(false));
        let asymmetric_tree =
            Graph::new(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(has_trivial_stabilizers(&asymmetric_tree), Ok(true));
    }

    #[test]
    fn product_commutes_up_to_iso() {
        let a = k2().cartesian_product(&cycle(6));
        let b = cycle(6).cartesian_product(&k2());
        assert!(matches!(is_isomorphic(&a, &b), IsoCertificate::Isomorphic(_)));
    }

    #[test]
    fn prism4_is_q3() {
        let q3 = hypercube(3);
        let p = k2().cartesian_product(&cycle(4));
        match is_isomorphic(&p, &q3) {
            IsoCertificate::Isomorphic(m) => assert!(is_isomorphism(&p, &q3, &m)),
            other => panic!("expected isomorphism, got {other:?}"),
        }
    }

    #[test]
    fn refutations_are_cheap_and_correct() {
        let c6 = cycle(6);
        let c8 = cycle(8);
        assert_eq!(
            is_isomorphic(&c6, &c8),
            IsoCertificate::NonIsomorphic(Refutation::OrderMismatch { g_n: 6, h_n: 8 })
        );
        let k33 = Graph::new(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let prism3 = Graph::new(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(matches!(is_isomorphic(&k33, &prism3), IsoCertificate::NonIsomorphic(_)));
    }

    #[test]
    fn orbit_stabilizer_identity_holds() {
        for g in [cycle(5), cycle(6), hypercube(3), hypercube(4)] {
            let rep = automorphisms(&g).unwrap();
            assert_eq!(
                rep.group_order,
                rep.orbit_of_zero.len() as u64 * rep.stabilizer_order_of_zero
            );
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let canon = canonical_graph6(&g);
        for shift in 1..6u32 {
            let perm: Vec<u32> = (0..6).map(|v| (v + shift) % 6).collect();
            assert_eq!(canonical_graph6(&g.relabel(&perm)), canon);
        }
        let other =
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)]).unwrap();
        assert_ne!(canonical_graph6(&other), canon);
    }

    #[test]
    fn canonicity_test_matches_canonical_form() {
        for g in [cycle(5), cycle(6), hypercube(3), k2().cartesian_product(&cycle(6))] {
            let canon = g.relabel(&canonical_labeling(&g));
            assert!(!exists_greater_labeling(&canon));
            assert_eq!(canonical_graph6(&canon), write_graph6(&canon));
        }
    }

    #[test]
    fn edge_orbits_cover_all_edges() {
        let g = cycle(6);
        let rep = automorphisms(&g).unwrap();
        let orbits = edge_orbits(&g, &rep.generators);
        assert_eq!(orbits.iter().map(|o| o.len()).sum::<usize>(), g.m());
        assert_eq!(orbits.len(), 1);
    }
}
