//! Enumeration of all simple cycles of a graph.

use super::Graph;

/// Every simple cycle of `g`, each reported once up to rotation and
/// reflection.
///
/// A cycle is returned as its vertex list in canonical form: it starts at
/// its smallest vertex and runs toward the smaller of that vertex's two
/// cycle neighbors. The result is sorted by length, then lexicographically.
///
/// The search is a DFS rooted at each vertex `s` in turn, restricted to
/// paths whose interior vertices all exceed `s`; target graphs have cycle
/// rank at most 2 and verification graphs stay below a dozen vertices, so
/// no sophistication is needed here.
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend(g, s, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let v = *path.last().unwrap();
    for &w in g.neighbors(v) {
        if w == s {
            // Closing arc; keep the traversal whose second vertex is the
            // smaller neighbor of s, so each cycle is emitted exactly once.
            if path.len() >= 3 && path[1] < *path.last().unwrap() {
                out.push(path.clone());
            }
        } else if w > s && !on_path[w] {
            path.push(w);
            on_path[w] = true;
            extend(g, s, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_have_no_cycles() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(all_cycles(&star).is_empty());
    }

    #[test]
    fn five_cycle_is_unique() {
        let c5 = Graph::new(5, (0..5).map(|v| (v, (v + 1) % 5))).unwrap();
        let cycles = all_cycles(&c5);
        assert_eq!(cycles, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn k23_has_three_quadrilaterals() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let cycles = all_cycles(&k23);
        assert_eq!(cycles.len(), 3);
        assert!(cycles.iter().all(|c| c.len() == 4));
        assert_eq!(edge_subset_cycle_count(&k23), 3);
    }

    #[test]
    fn dense_graph_matches_subset_oracle() {
        let k5 = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(all_cycles(&k5).len(), edge_subset_cycle_count(&k5));
        assert_eq!(edge_subset_cycle_count(&k5), 37);
    }

    /// Counts cycles by brute force over edge subsets: a subset is a cycle
    /// exactly when every touched vertex has degree 2 and the touched
    /// vertices are connected.
    fn edge_subset_cycle_count(g: &Graph) -> usize {
        let m = g.m();
        let mut count = 0;
        for mask in 1u32..(1 << m) {
            let chosen: Vec<(usize, usize)> = (0..m)
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| g.edges()[k])
                .collect();
            if chosen.len() < 3 {
                continue;
            }
            let mut deg = vec![0usize; g.n()];
            for &(u, v) in &chosen {
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d != 0 && d != 2) {
                continue;
            }
            let sub = Graph::new(g.n(), chosen.iter().copied()).unwrap();
            let touched: Vec<usize> = (0..g.n()).filter(|&v| deg[v] > 0).collect();
            let mut seen = vec![false; g.n()];
            let mut stack = vec![touched[0]];
            seen[touched[0]] = true;
            let mut reached = 0;
            while let Some(v) = stack.pop() {
                reached += 1;
                for &w in sub.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if reached == touched.len() {
                count += 1;
            }
        }
        count
    }
}
