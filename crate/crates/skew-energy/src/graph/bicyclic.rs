//! Classification of bicyclic graphs (connected, `|E| = n + 1`).

use super::cycles::all_cycles;
use super::Graph;
use crate::error::{Error, Result};

/// The shape of a bicyclic graph in terms of its two base cycles.
///
/// `t` counts their common vertices. With `t <= 1` the graph has exactly
/// two cycles and the base cycles are joined by a path of length `l`
/// (`l = 0` when they share a vertex). With `t >= 2` a third cycle appears
/// whose length satisfies `c = a + b - 2t + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicyclicShape {
    pub t: usize,
    pub a: usize,
    pub b: usize,
    pub c: Option<usize>,
    pub l: Option<usize>,
    pub cycle_a: Vec<usize>,
    pub cycle_b: Vec<usize>,
    pub cycle_c: Option<Vec<usize>>,
}

/// Identifies the base cycles of a bicyclic graph.
///
/// The cycles of `g` are ordered by (length, lexicographic vertex list);
/// the first two are the base cycles `C_a`, `C_b` (so `a <= b`). Errors
/// unless `g` is connected with exactly `n + 1` edges.
pub fn classify_bicyclic(g: &Graph) -> Result<BicyclicShape> {
    if !g.is_connected() || g.m() != g.n() + 1 {
        return Err(Error::NotBicyclic);
    }
    let cycles = all_cycles(g);
    debug_assert!(cycles.len() == 2 || cycles.len() == 3);
    let cycle_a = cycles[0].clone();
    let cycle_b = cycles[1].clone();
    let (a, b) = (cycle_a.len(), cycle_b.len());
    let mut in_a = vec![false; g.n()];
    for &v in &cycle_a {
        in_a[v] = true;
    }
    let t = cycle_b.iter().filter(|&&v| in_a[v]).count();
    if t >= 2 {
        let cycle_c = cycles[2].clone();
        let c = cycle_c.len();
        debug_assert_eq!(c, a + b - 2 * t + 2);
        Ok(BicyclicShape {
            t,
            a,
            b,
            c: Some(c),
            l: None,
            cycle_a,
            cycle_b,
            cycle_c: Some(cycle_c),
        })
    } else {
        let l = if t == 1 {
            0
        } else {
            // Shortest path between the two cycles: multi-source BFS from C_a.
            let mut dist = vec![usize::MAX; g.n()];
            let mut queue = std::collections::VecDeque::new();
            for &v in &cycle_a {
                dist[v] = 0;
                queue.push_back(v);
            }
            let mut best = usize::MAX;
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &v in &cycle_b {
                best = best.min(dist[v]);
            }
            best
        };
        Ok(BicyclicShape {
            t,
            a,
            b,
            c: None,
            l: Some(l),
            cycle_a,
            cycle_b,
            cycle_c: None,
        })
    }
}

/// True unless `g` contains a pair of vertex-disjoint odd cycles whose
/// lengths sum to 2 mod 4.
///
/// For bicyclic graphs only the `t = 0` shape has vertex-disjoint cycles,
/// so the check reduces to inspecting the two base cycle lengths.
pub fn in_class_b(g: &Graph) -> Result<bool> {
    let shape = classify_bicyclic(g)?;
    Ok(!(shape.t == 0 && shape.a % 2 == 1 && shape.b % 2 == 1 && (shape.a + shape.b) % 4 == 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_shared_vertex() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    fn two_triangles_path(len: usize) -> Graph {
        // Triangle 0-1-2, path 0..len, triangle at the far end.
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        let mut prev = 0;
        let mut next = 3;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, next));
        edges.push((next, next + 1));
        edges.push((prev, next + 1));
        Graph::new(next + 2, edges).unwrap()
    }

    fn k23() -> Graph {
        Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn shared_vertex_shape() {
        let s = classify_bicyclic(&two_triangles_shared_vertex()).unwrap();
        assert_eq!((s.t, s.a, s.b, s.l, s.c), (1, 3, 3, Some(0), None));
    }

    #[test]
    fn disjoint_shape() {
        let s = classify_bicyclic(&two_triangles_path(2)).unwrap();
        assert_eq!((s.t, s.a, s.b, s.l, s.c), (0, 3, 3, Some(2), None));
    }

    #[test]
    fn theta_shape() {
        let s = classify_bicyclic(&k23()).unwrap();
        assert_eq!((s.t, s.a, s.b, s.c, s.l), (3, 4, 4, Some(4), None));
    }

    #[test]
    fn non_bicyclic_rejected() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(matches!(classify_bicyclic(&c4), Err(Error::NotBicyclic)));
    }

    #[test]
    fn class_b_membership() {
        // 3 + 3 = 6 = 2 mod 4: excluded.
        assert!(!in_class_b(&two_triangles_path(1)).unwrap());
        // Triangle and pentagon: 3 + 5 = 8 = 0 mod 4: included.
        let g = Graph::new(
            9,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (4, 8),
            ],
        )
        .unwrap();
        assert!(in_class_b(&g).unwrap());
        // Theta graphs have no vertex-disjoint cycle pair at all.
        assert!(in_class_b(&k23()).unwrap());
    }
}
