//! Switching operations, switching equivalence, and canonical enumeration
//! of orientation classes.
//!
//! Reversing every arc across a vertex cut `(W, V \ W)` conjugates the
//! skew-adjacency matrix by a diagonal sign matrix, so it preserves the
//! spectrum. Orientations of a connected graph therefore fall into
//! `2^(|E| - n + 1)` switching classes, one per assignment of directions
//! to the non-tree edges once a spanning tree has been normalized.

use crate::error::{Error, Result};
use crate::graph::{Graph, OrientedGraph};

/// Traversal parity of a cycle relative to an orientation.
///
/// An even cycle with an even number of arcs agreeing with the traversal is
/// `Evenly` oriented (the `-` class), with an odd number `Oddly` oriented
/// (`+`). The distinction is switching-invariant for even cycles only, so
/// odd cycles get their own tag.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum CycleParity {
    Evenly,
    Oddly,
    OddCycle,
}

impl std::fmt::Display for CycleParity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CycleParity::Evenly => "-",
            CycleParity::Oddly => "+",
            CycleParity::OddCycle => "odd",
        })
    }
}

/// Parity of the given cycle traversal: counts arcs oriented along the
/// routing `cycle[0] -> cycle[1] -> ... -> cycle[0]`.
///
/// Errors when the vertex list is not a cycle of the underlying graph.
pub fn cycle_parity(og: &OrientedGraph, cycle: &[usize]) -> Result<CycleParity> {
    if !og.base().is_cycle(cycle) {
        return Err(Error::NotACycle(format!("{cycle:?}")));
    }
    if cycle.len() % 2 == 1 {
        return Ok(CycleParity::OddCycle);
    }
    if even_cycle_is_evenly_oriented(og, cycle) {
        Ok(CycleParity::Evenly)
    } else {
        Ok(CycleParity::Oddly)
    }
}

/// Forward-arc parity for a cycle of even length; true means evenly
/// oriented. Callers guarantee `cycle` really is a cycle.
pub(crate) fn even_cycle_is_evenly_oriented(og: &OrientedGraph, cycle: &[usize]) -> bool {
    debug_assert_eq!(cycle.len() % 2, 0);
    let k = cycle.len();
    let forward = (0..k)
        .filter(|&i| og.is_arc(cycle[i], cycle[(i + 1) % k]))
        .count();
    forward % 2 == 0
}

/// Reverses every arc with exactly one endpoint in `w`.
pub fn switch(og: &OrientedGraph, w: &[usize]) -> OrientedGraph {
    let n = og.n();
    let mut in_w = vec![false; n];
    for &v in w {
        assert!(v < n, "switching set contains vertex {v} >= {n}");
        in_w[v] = true;
    }
    let forward = og
        .base()
        .edges()
        .iter()
        .zip(og.forward())
        .map(|(&(u, v), &f)| if in_w[u] != in_w[v] { !f } else { f })
        .collect();
    OrientedGraph::with_forward(og.base().clone(), forward).expect("same edge count")
}

/// The canonical member of `og`'s switching class: tree arcs of a BFS
/// spanning forest rooted at the smallest vertex of each component all
/// point away from the root.
pub fn normalize(og: &OrientedGraph) -> OrientedGraph {
    let g = og.base();
    let n = g.n();
    // side[v] says whether v belongs to the switching set; fixing the tree
    // arcs determines it uniquely given side[root] = false.
    let mut side = vec![false; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    side[w] = side[v] != !og.is_arc(v, w);
                    queue.push_back(w);
                }
            }
        }
    }
    let w: Vec<usize> = (0..n).filter(|&v| side[v]).collect();
    switch(og, &w)
}

/// Whether two orientations of the same underlying graph are related by a
/// sequence of switchings. Decided by comparing normal forms.
pub fn switching_equivalent(a: &OrientedGraph, b: &OrientedGraph) -> Result<bool> {
    if a.base() != b.base() {
        return Err(Error::DifferentBase);
    }
    Ok(normalize(a).forward() == normalize(b).forward())
}

/// One switching class of a connected graph: the BFS spanning tree used for
/// normalization, the directions of the non-tree edges (the class key), and
/// the canonical representative orientation.
#[derive(Clone, Debug)]
pub struct OrientationClass {
    base: Graph,
    tree_edges: Vec<usize>,
    key: Vec<bool>,
    representative: OrientedGraph,
}

impl OrientationClass {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// Edge indices of the spanning tree.
    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    /// One direction bit per non-tree edge, in sorted edge order; true
    /// means the arc runs from the smaller to the larger endpoint.
    pub fn key(&self) -> &[bool] {
        &self.key
    }

    pub fn representative(&self) -> &OrientedGraph {
        &self.representative
    }
}

/// All switching classes of a connected graph, exactly
/// `2^(|E| - n + 1)` of them, in the binary order of their keys.
pub fn orientation_classes(g: &Graph) -> Result<Vec<OrientationClass>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let m = g.m();
    // BFS tree from vertex 0; tree arcs point away from the root.
    let mut parent = vec![usize::MAX; n];
    let mut tree_edge = vec![false; m];
    let mut tree_forward = vec![false; m];
    if n > 0 {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    let k = g.edge_index(v, w).unwrap();
                    tree_edge[k] = true;
                    tree_forward[k] = v < w;
                    queue.push_back(w);
                }
            }
        }
    }
    let tree_edges: Vec<usize> = (0..m).filter(|&k| tree_edge[k]).collect();
    let loose: Vec<usize> = (0..m).filter(|&k| !tree_edge[k]).collect();
    let rank = loose.len();
    debug_assert_eq!(rank, m + 1 - n.max(1));
    if rank > 24 {
        return Err(Error::InvalidParameter(format!(
            "cycle rank {rank} would give 2^{rank} orientation classes"
        )));
    }
    let mut classes = Vec::with_capacity(1 << rank);
    for pattern in 0u64..(1 << rank) {
        let mut forward = tree_forward.clone();
        let mut key = Vec::with_capacity(rank);
        for (bit, &k) in loose.iter().enumerate() {
            let f = pattern >> bit & 1 == 1;
            forward[k] = f;
            key.push(f);
        }
        let representative = OrientedGraph::with_forward(g.clone(), forward)?;
        classes.push(OrientationClass {
            base: g.clone(),
            tree_edges: tree_edges.clone(),
            key,
            representative,
        });
    }
    Ok(classes)
}

/// The representatives of [`orientation_classes`], pairwise inequivalent.
pub fn orientation_class_reps(g: &Graph) -> Result<Vec<OrientedGraph>> {
    Ok(orientation_classes(g)?
        .into_iter()
        .map(|c| c.representative)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{char_poly_expansion, char_poly_oracle};

    fn cycle_graph(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn c4_minus() -> OrientedGraph {
        OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn c4_plus() -> OrientedGraph {
        OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn empty_and_full_switching_sets_do_nothing() {
        let og = c4_plus();
        assert_eq!(switch(&og, &[]), og);
        assert_eq!(switch(&og, &[0, 1, 2, 3]), og);
    }

    #[test]
    fn switching_preserves_the_polynomial() {
        let og = c4_plus();
        let p = char_poly_oracle(&og).unwrap();
        for mask in 0u32..16 {
            let w: Vec<usize> = (0..4).filter(|&v| mask >> v & 1 == 1).collect();
            assert_eq!(char_poly_oracle(&switch(&og, &w)).unwrap(), p);
        }
    }

    #[test]
    fn singleton_switch_is_equivalent() {
        let og = c4_plus();
        assert!(switching_equivalent(&og, &switch(&og, &[0])).unwrap());
    }

    #[test]
    fn the_two_cycle_classes_are_inequivalent() {
        // Brute force over all 2^4 switching sets.
        let plus = c4_plus();
        let minus = c4_minus();
        for mask in 0u32..16 {
            let w: Vec<usize> = (0..4).filter(|&v| mask >> v & 1 == 1).collect();
            assert_ne!(switch(&plus, &w), minus);
        }
        assert!(!switching_equivalent(&plus, &minus).unwrap());
    }

    #[test]
    fn tree_orientations_are_all_equivalent() {
        let tree = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let reps = orientation_class_reps(&tree).unwrap();
        assert_eq!(reps.len(), 1);
        for mask in 0u32..16 {
            let forward = (0..4).map(|k| mask >> k & 1 == 1).collect();
            let og = OrientedGraph::with_forward(tree.clone(), forward).unwrap();
            assert!(switching_equivalent(&og, &reps[0]).unwrap());
        }
    }

    #[test]
    fn class_counts_match_cycle_rank() {
        assert_eq!(orientation_class_reps(&cycle_graph(4)).unwrap().len(), 2);
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(orientation_class_reps(&k23).unwrap().len(), 4);
        let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            orientation_classes(&disconnected),
            Err(Error::NotConnected)
        ));
    }

    #[test]
    fn k23_reps_from_brute_force_partition() {
        // Partition all 2^6 orientations of K_{2,3} by normal form and check
        // the class representatives hit every block exactly once.
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let mut normal_forms = std::collections::HashSet::new();
        for mask in 0u64..(1 << 6) {
            let forward = (0..6).map(|k| mask >> k & 1 == 1).collect();
            let og = OrientedGraph::with_forward(k23.clone(), forward).unwrap();
            normal_forms.insert(normalize(&og));
        }
        assert_eq!(normal_forms.len(), 4);
        for rep in orientation_class_reps(&k23).unwrap() {
            assert!(normal_forms.contains(&normalize(&rep)));
        }
    }

    #[test]
    fn normalization_is_idempotent() {
        let og = OrientedGraph::from_arcs(5, &[(1, 0), (2, 1), (3, 2), (4, 3), (0, 4)]).unwrap();
        let once = normalize(&og);
        assert_eq!(normalize(&once), once);
    }

    #[test]
    fn parity_examples() {
        let all_around = c4_minus();
        assert_eq!(
            cycle_parity(&all_around, &[0, 1, 2, 3]).unwrap(),
            CycleParity::Evenly
        );
        let one_reversed = c4_plus();
        assert_eq!(
            cycle_parity(&one_reversed, &[0, 1, 2, 3]).unwrap(),
            CycleParity::Oddly
        );
        let triangle = OrientedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            cycle_parity(&triangle, &[0, 1, 2]).unwrap(),
            CycleParity::OddCycle
        );
        assert!(matches!(
            cycle_parity(&triangle, &[0, 1]),
            Err(Error::NotACycle(_))
        ));
    }

    #[test]
    fn parity_is_switching_invariant_for_even_cycles() {
        for og in [c4_plus(), c4_minus()] {
            let before = cycle_parity(&og, &[0, 1, 2, 3]).unwrap();
            for mask in 0u32..16 {
                let w: Vec<usize> = (0..4).filter(|&v| mask >> v & 1 == 1).collect();
                assert_eq!(cycle_parity(&switch(&og, &w), &[0, 1, 2, 3]).unwrap(), before);
            }
        }
    }

    #[test]
    fn theta_parity_triples_are_two_bit() {
        // The three quadrilaterals of K_{2,3} are not independent: their
        // parities satisfy one linear relation, so the four classes realize
        // exactly four distinct triples.
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let cycles = crate::graph::all_cycles(&k23);
        let mut triples = std::collections::HashSet::new();
        for rep in orientation_class_reps(&k23).unwrap() {
            let triple: Vec<CycleParity> = cycles
                .iter()
                .map(|c| cycle_parity(&rep, c).unwrap())
                .collect();
            let bits: Vec<bool> = triple.iter().map(|p| *p == CycleParity::Oddly).collect();
            assert_eq!(bits[2], bits[0] != bits[1]);
            triples.insert(triple);
        }
        assert_eq!(triples.len(), 4);
    }

    #[test]
    fn representative_reproduces_its_key() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        for class in orientation_classes(&k23).unwrap() {
            let rep = class.representative();
            let mut key_bits = Vec::new();
            for k in 0..k23.m() {
                if !class.tree_edges().contains(&k) {
                    key_bits.push(rep.forward()[k]);
                }
            }
            assert_eq!(key_bits, class.key());
        }
    }

    #[test]
    fn expansion_is_switching_invariant_on_a_theta() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        for rep in orientation_class_reps(&k23).unwrap() {
            let p = char_poly_expansion(&rep);
            for w in [vec![0], vec![2, 3], vec![0, 1, 4]] {
                assert_eq!(char_poly_expansion(&switch(&rep, &w)), p);
            }
        }
    }
}
