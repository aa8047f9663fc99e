//! Coefficient expansion over linear subgraphs.

use super::SkewPolynomial;
use crate::graph::{all_cycles, OrientedGraph};
use crate::orientations::even_cycle_is_evenly_oriented;
use num_bigint::BigInt;
use num_traits::Zero;

/// Computes the skew characteristic polynomial combinatorially.
///
/// Each even coefficient is
/// `a_i = sum over L of (-2)^{p_e(L)} * 2^{p_o(L)}`,
/// summed over the linear subgraphs `L` on `i` vertices whose components
/// are single edges and even cycles; `p_e`/`p_o` count the evenly/oddly
/// oriented cycles of `L`. Components that are odd cycles never
/// contribute: the two traversal directions of an odd cycle enter the
/// determinant with opposite signs and cancel, so subgraphs containing one
/// are skipped outright.
pub fn char_poly_expansion(og: &OrientedGraph) -> SkewPolynomial {
    let g = og.base();
    let n = g.n();
    let mut acc = vec![BigInt::zero(); n / 2 + 1];

    // Even cycles grouped by smallest vertex, with the weight each one
    // carries: -2 when evenly oriented, +2 when oddly oriented.
    let mut cycles_at: Vec<Vec<(Vec<usize>, i64)>> = vec![Vec::new(); n.max(1)];
    for c in all_cycles(g) {
        if c.len() % 2 == 0 {
            let weight = if even_cycle_is_evenly_oriented(og, &c) {
                -2
            } else {
                2
            };
            cycles_at[c[0]].push((c, weight));
        }
    }

    let mut covered = vec![false; n];
    descend(g, &cycles_at, 0, 0, 1, &mut covered, &mut acc);
    SkewPolynomial::from_even_coeffs(n, acc).expect("accumulator sized for n")
}

/// Recursive branch on the lowest uncovered vertex: skip it, match it along
/// an incident edge, or route an even cycle through it. `weight` is the
/// running product of cycle weights; edges contribute a factor of one.
fn descend(
    g: &crate::graph::Graph,
    cycles_at: &[Vec<(Vec<usize>, i64)>],
    mut v: usize,
    covered_count: usize,
    weight: i64,
    covered: &mut Vec<bool>,
    acc: &mut [BigInt],
) {
    let n = g.n();
    while v < n && covered[v] {
        v += 1;
    }
    if v == n {
        acc[covered_count / 2] += weight;
        return;
    }
    descend(g, cycles_at, v + 1, covered_count, weight, covered, acc);
    covered[v] = true;
    for &u in g.neighbors(v) {
        if u > v && !covered[u] {
            covered[u] = true;
            descend(g, cycles_at, v + 1, covered_count + 2, weight, covered, acc);
            covered[u] = false;
        }
    }
    for (c, w) in &cycles_at[v] {
        if c[1..].iter().any(|&x| covered[x]) {
            continue;
        }
        for &x in &c[1..] {
            covered[x] = true;
        }
        descend(
            g,
            cycles_at,
            v + 1,
            covered_count + c.len(),
            weight * w,
            covered,
            acc,
        );
        for &x in &c[1..] {
            covered[x] = false;
        }
    }
    covered[v] = false;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use num_traits::One;

    fn coeffs(og: &OrientedGraph) -> Vec<i64> {
        char_poly_expansion(og)
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn single_arc() {
        let og = OrientedGraph::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(coeffs(&og), vec![1, 1]);
    }

    #[test]
    fn empty_graph_is_the_unit() {
        let og = OrientedGraph::min_to_max(Graph::empty(0));
        assert!(char_poly_expansion(&og).coeffs()[0].is_one());
        let og = OrientedGraph::min_to_max(Graph::empty(5));
        assert_eq!(coeffs(&og), vec![1, 0, 0]);
    }

    #[test]
    fn four_cycle_both_classes() {
        let minus = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(coeffs(&minus), vec![1, 4, 0]);
        let plus = OrientedGraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(coeffs(&plus), vec![1, 4, 4]);
    }

    #[test]
    fn triangle_has_no_cycle_contribution() {
        let og = OrientedGraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(coeffs(&og), vec![1, 3]);
    }

    #[test]
    fn disjoint_triangles_cancel_exactly() {
        // phi(C_3)^2 = x^6 + 6x^4 + 9x^2: the two-triangle linear subgraph
        // on six vertices must contribute nothing.
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let og = OrientedGraph::min_to_max(g);
        assert_eq!(coeffs(&og), vec![1, 6, 9, 0]);
    }
}
