//! Linear subgraphs: vertex-disjoint unions of single edges and cycles.

use super::cycles::all_cycles;
use super::Graph;
use crate::error::{Error, Result};

/// A linear subgraph: pairwise vertex-disjoint single edges and cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSubgraph {
    /// Single-edge components, each as `(min, max)`.
    pub edges: Vec<(usize, usize)>,
    /// Cycle components as canonical vertex lists (length >= 3).
    pub cycles: Vec<Vec<usize>>,
}

impl LinearSubgraph {
    pub fn vertex_count(&self) -> usize {
        2 * self.edges.len() + self.cycles.iter().map(Vec::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty() && self.cycles.is_empty()
    }
}

/// All linear subgraphs of `g` covering exactly `i` vertices, `i` even.
///
/// `i = 0` yields the single empty subgraph. Components are discovered in
/// increasing order of their smallest vertex, which fixes the output order.
pub fn evenly_linear_subgraphs(g: &Graph, i: usize) -> Result<Vec<LinearSubgraph>> {
    if !i.is_multiple_of(2) {
        return Err(Error::OddSubgraphOrder(i));
    }
    if i > g.n() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for_each_linear_subgraph(g, true, |ls| {
        if ls.vertex_count() == i {
            out.push(ls.clone());
        }
    });
    Ok(out)
}

/// Visits every linear subgraph of `g` exactly once (including the empty
/// one). With `include_odd_cycles = false`, cycle components of odd length
/// are never used, which is the variant the coefficient expansion needs.
///
/// The recursion branches on the lowest-indexed vertex not yet covered:
/// leave it out, match it along an incident edge, or route a cycle through
/// it. This avoids scanning all `2^|E|` edge subsets.
pub(crate) fn for_each_linear_subgraph<F: FnMut(&LinearSubgraph)>(
    g: &Graph,
    include_odd_cycles: bool,
    mut f: F,
) {
    let n = g.n();
    // Cycles grouped by their smallest vertex (which canonical lists start at).
    let mut cycles_at = vec![Vec::new(); n.max(1)];
    for c in all_cycles(g) {
        if include_odd_cycles || c.len() % 2 == 0 {
            cycles_at[c[0]].push(c);
        }
    }
    let mut covered = vec![false; n];
    let mut acc = LinearSubgraph {
        edges: Vec::new(),
        cycles: Vec::new(),
    };
    recurse(g, &cycles_at, 0, &mut covered, &mut acc, &mut f);
}

fn recurse<F: FnMut(&LinearSubgraph)>(
    g: &Graph,
    cycles_at: &[Vec<Vec<usize>>],
    v: usize,
    covered: &mut Vec<bool>,
    acc: &mut LinearSubgraph,
    f: &mut F,
) {
    let n = g.n();
    let mut v = v;
    while v < n && covered[v] {
        v += 1;
    }
    if v == n {
        f(acc);
        return;
    }
    // v stays uncovered.
    recurse(g, cycles_at, v + 1, covered, acc, f);
    // v is matched along an incident edge. Neighbors below v were decided
    // earlier (covered or skipped), so only larger uncovered ones qualify.
    covered[v] = true;
    for &u in g.neighbors(v) {
        if u > v && !covered[u] {
            covered[u] = true;
            acc.edges.push((v, u));
            recurse(g, cycles_at, v + 1, covered, acc, f);
            acc.edges.pop();
            covered[u] = false;
        }
    }
    // A cycle whose smallest vertex is v runs through it.
    for c in &cycles_at[v] {
        if c[1..].iter().any(|&w| covered[w]) {
            continue;
        }
        for &w in &c[1..] {
            covered[w] = true;
        }
        acc.cycles.push(c.clone());
        recurse(g, cycles_at, v + 1, covered, acc, f);
        acc.cycles.pop();
        for &w in &c[1..] {
            covered[w] = false;
        }
    }
    covered[v] = false;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    #[test]
    fn odd_order_is_rejected() {
        assert!(matches!(
            evenly_linear_subgraphs(&path(3), 3),
            Err(Error::OddSubgraphOrder(3))
        ));
    }

    #[test]
    fn order_zero_is_the_empty_subgraph() {
        let ls = evenly_linear_subgraphs(&path(3), 0).unwrap();
        assert_eq!(ls.len(), 1);
        assert!(ls[0].is_empty());
    }

    #[test]
    fn two_vertex_members_are_the_edges() {
        assert_eq!(evenly_linear_subgraphs(&path(3), 2).unwrap().len(), 2);
        assert_eq!(evenly_linear_subgraphs(&cycle(3), 2).unwrap().len(), 3);
    }

    #[test]
    fn four_cycle_has_three_spanning_members() {
        // Two perfect matchings plus the quadrilateral itself.
        let members = evenly_linear_subgraphs(&cycle(4), 4).unwrap();
        assert_eq!(members.len(), 3);
        assert_eq!(members.iter().filter(|l| l.cycles.is_empty()).count(), 2);
    }

    #[test]
    fn matches_edge_subset_brute_force() {
        // A subset of edges is a linear subgraph iff every touched vertex
        // has degree 1 or 2 and every degree-2 component is a cycle.
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        for g in [path(5), cycle(5), cycle(6), k4] {
            let mut mine = vec![0usize; g.n() + 1];
            for_each_linear_subgraph(&g, true, |ls| mine[ls.vertex_count()] += 1);
            let brute = brute_force_counts(&g);
            assert_eq!(mine, brute, "linear subgraph counts differ");
        }
    }

    fn brute_force_counts(g: &Graph) -> Vec<usize> {
        let m = g.m();
        let mut counts = vec![0usize; g.n() + 1];
        for mask in 0u32..(1 << m) {
            let chosen: Vec<(usize, usize)> = (0..m)
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| g.edges()[k])
                .collect();
            let mut deg = vec![0usize; g.n()];
            for &(u, v) in &chosen {
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d > 2) {
                continue;
            }
            // Components that are paths of length > 1 are not allowed: a
            // degree-2 vertex must lie on a cycle. Equivalently, in each
            // component #edges == #vertices (cycle) or the component is a
            // single edge.
            let sub = Graph::new(g.n(), chosen.iter().copied()).unwrap();
            let mut seen = vec![false; g.n()];
            let mut ok = true;
            for s in 0..g.n() {
                if seen[s] || sub.degree(s) == 0 {
                    continue;
                }
                let mut verts = Vec::new();
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(v) = stack.pop() {
                    verts.push(v);
                    for &w in sub.neighbors(v) {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                let comp_edges: usize = verts.iter().map(|&v| sub.degree(v)).sum::<usize>() / 2;
                let is_single_edge = verts.len() == 2 && comp_edges == 1;
                let is_cycle = comp_edges == verts.len() && verts.len() >= 3;
                if !is_single_edge && !is_cycle {
                    ok = false;
                    break;
                }
            }
            if ok {
                let touched = deg.iter().filter(|&&d| d > 0).count();
                counts[touched] += 1;
            }
        }
        counts
    }
}
