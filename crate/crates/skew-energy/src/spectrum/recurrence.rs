//! Deletion recurrences for the skew characteristic polynomial.
//!
//! Both recurrences express `a_i` of an oriented graph through smaller
//! graphs: deleting the pivot (an arc or a vertex), deleting its endpoints
//! (or a neighbor pair), and deleting the vertex set of each even cycle
//! through the pivot, the last with weight `+2` for oddly and `-2` for
//! evenly oriented cycles. Odd cycles never enter: their would-be terms sit
//! at odd coefficients, which vanish identically.

use super::SkewPolynomial;
use crate::error::{Error, Result};
use crate::graph::{all_cycles, OrientedGraph};
use crate::orientations::even_cycle_is_evenly_oriented;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::rc::Rc;

/// Internal coefficient vector: entry `k` is `a_{2k}`.
type Coeffs = Rc<Vec<BigInt>>;

struct Memo {
    table: HashMap<OrientedGraph, Coeffs>,
    pivot: Pivot,
}

#[derive(Clone, Copy)]
enum Pivot {
    FirstArc,
    FirstVertex,
}

/// Computes the polynomial by recursing on an arc `e = (u, v)`:
/// `a_i = a_i(G - e) + a_{i-2}(G - u - v) + 2 sum_{e in C, C oddly} a_{i-|C|}(G - V(C))
///        - 2 sum_{e in C, C evenly} a_{i-|C|}(G - V(C))`,
/// with the cycle sums over even cycles through `e`. Sub-polynomials pick
/// their own pivots and recurse until the graph has no edges.
///
/// Errors when `(tail, head)` is not an arc of `og`.
pub fn char_poly_recurrence_edge(
    og: &OrientedGraph,
    arc: (usize, usize),
) -> Result<SkewPolynomial> {
    let (t, h) = arc;
    if !og.is_arc(t, h) {
        return Err(Error::MissingItem(format!("arc {t}->{h}")));
    }
    let mut memo = Memo {
        table: HashMap::new(),
        pivot: Pivot::FirstArc,
    };
    let coeffs = expand_at_edge(og, (t, h), &mut memo);
    SkewPolynomial::from_even_coeffs(og.n(), coeffs.as_ref().clone())
}

/// Computes the polynomial by recursing on a vertex `v`:
/// `a_i = a_i(G - v) + sum_{u in N(v)} a_{i-2}(G - u - v)
///        + 2 sum_{v in C, C oddly} a_{i-|C|}(G - V(C))
///        - 2 sum_{v in C, C evenly} a_{i-|C|}(G - V(C))`.
///
/// Errors when `v` is out of range.
pub fn char_poly_recurrence_vertex(og: &OrientedGraph, v: usize) -> Result<SkewPolynomial> {
    if v >= og.n() {
        return Err(Error::MissingItem(format!("vertex {v}")));
    }
    let mut memo = Memo {
        table: HashMap::new(),
        pivot: Pivot::FirstVertex,
    };
    let coeffs = expand_at_vertex(og, v, &mut memo);
    SkewPolynomial::from_even_coeffs(og.n(), coeffs.as_ref().clone())
}

fn unit(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); n / 2 + 1];
    c[0] = BigInt::one();
    c
}

fn subgraph_coeffs(og: &OrientedGraph, memo: &mut Memo) -> Coeffs {
    if let Some(hit) = memo.table.get(og) {
        return hit.clone();
    }
    let result = match memo.pivot {
        Pivot::FirstArc => {
            if og.m() == 0 {
                Rc::new(unit(og.n()))
            } else {
                expand_at_edge(og, og.arc(0), memo)
            }
        }
        Pivot::FirstVertex => {
            if og.n() == 0 {
                Rc::new(unit(0))
            } else {
                expand_at_vertex(og, 0, memo)
            }
        }
    };
    memo.table.insert(og.clone(), result.clone());
    result
}

/// Even cycles through the given edge or vertex, paired with their `+-2`
/// weights.
fn weighted_even_cycles(
    og: &OrientedGraph,
    through: impl Fn(&[usize]) -> bool,
) -> Vec<(Vec<usize>, i64)> {
    all_cycles(og.base())
        .into_iter()
        .filter(|c| c.len() % 2 == 0 && through(c))
        .map(|c| {
            let w = if even_cycle_is_evenly_oriented(og, &c) {
                -2
            } else {
                2
            };
            (c, w)
        })
        .collect()
}

fn expand_at_edge(og: &OrientedGraph, arc: (usize, usize), memo: &mut Memo) -> Coeffs {
    let n = og.n();
    let (t, h) = arc;
    let mut acc = vec![BigInt::zero(); n / 2 + 1];

    let minus_edge = subgraph_coeffs(&og.delete(&[], &[(t, h)]).unwrap(), memo);
    add_shifted(&mut acc, &minus_edge, 0, 1);

    let minus_ends = subgraph_coeffs(&og.delete(&[t, h], &[]).unwrap(), memo);
    add_shifted(&mut acc, &minus_ends, 1, 1);

    for (cycle, w) in weighted_even_cycles(og, |c| cycle_uses_edge(c, t, h)) {
        let minus_cycle = subgraph_coeffs(&og.delete(&cycle, &[]).unwrap(), memo);
        add_shifted(&mut acc, &minus_cycle, cycle.len() / 2, w);
    }
    Rc::new(acc)
}

fn expand_at_vertex(og: &OrientedGraph, v: usize, memo: &mut Memo) -> Coeffs {
    let n = og.n();
    let mut acc = vec![BigInt::zero(); n / 2 + 1];

    let minus_v = subgraph_coeffs(&og.delete(&[v], &[]).unwrap(), memo);
    add_shifted(&mut acc, &minus_v, 0, 1);

    for &u in og.base().neighbors(v) {
        let minus_uv = subgraph_coeffs(&og.delete(&[u, v], &[]).unwrap(), memo);
        add_shifted(&mut acc, &minus_uv, 1, 1);
    }

    for (cycle, w) in weighted_even_cycles(og, |c| c.contains(&v)) {
        let minus_cycle = subgraph_coeffs(&og.delete(&cycle, &[]).unwrap(), memo);
        add_shifted(&mut acc, &minus_cycle, cycle.len() / 2, w);
    }
    Rc::new(acc)
}

/// `acc[k + shift] += weight * sub[k]`. Subgraph coefficient vectors never
/// reach past the parent's (the shift accounts for the deleted vertices).
fn add_shifted(acc: &mut [BigInt], sub: &[BigInt], shift: usize, weight: i64) {
    for (k, c) in sub.iter().enumerate() {
        if !c.is_zero() {
            acc[k + shift] += c * weight;
        }
    }
}

fn cycle_uses_edge(cycle: &[usize], u: usize, v: usize) -> bool {
    let k = cycle.len();
    (0..k).any(|i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        (a, b) == (u, v) || (a, b) == (v, u)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::spectrum::char_poly_expansion;

    fn coeffs(p: &SkewPolynomial) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn missing_pivots_error() {
        let og = OrientedGraph::from_arcs(3, &[(0, 1)]).unwrap();
        assert!(char_poly_recurrence_edge(&og, (1, 0)).is_err());
        assert!(char_poly_recurrence_edge(&og, (0, 2)).is_err());
        assert!(char_poly_recurrence_vertex(&og, 3).is_err());
    }

    #[test]
    fn matchings_recurrence_on_a_path() {
        let og = OrientedGraph::min_to_max(Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap());
        let p = char_poly_recurrence_edge(&og, (1, 2)).unwrap();
        assert_eq!(coeffs(&p), vec![1, 3, 1]);
    }

    #[test]
    fn isolated_vertex_contributes_nothing() {
        let og = OrientedGraph::min_to_max(Graph::new(5, [(1, 2), (2, 3), (3, 4)]).unwrap());
        let with = char_poly_recurrence_vertex(&og, 0).unwrap();
        let without = char_poly_recurrence_vertex(&og.delete(&[0], &[]).unwrap(), 0).unwrap();
        assert_eq!(with.a(0), without.a(0));
        assert_eq!(with.a(2), without.a(2));
        assert_eq!(with.a(4), without.a(4));
    }

    #[test]
    fn star_center_pivot() {
        let star = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let og = OrientedGraph::min_to_max(star);
        let p = char_poly_recurrence_vertex(&og, 0).unwrap();
        assert_eq!(coeffs(&p), vec![1, 4, 0]);
    }

    #[test]
    fn all_pivots_agree_with_expansion_on_a_theta() {
        let k23 = Graph::new(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let og = OrientedGraph::min_to_max(k23);
        let reference = char_poly_expansion(&og);
        for k in 0..og.m() {
            let arc = og.arc(k);
            assert_eq!(char_poly_recurrence_edge(&og, arc).unwrap(), reference);
        }
        for v in 0..og.n() {
            assert_eq!(char_poly_recurrence_vertex(&og, v).unwrap(), reference);
        }
    }
}
