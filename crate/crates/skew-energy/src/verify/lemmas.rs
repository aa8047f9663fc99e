//! Exhaustive small-order checks of the chain of comparison lemmas, one
//! report per claim.

use super::{finish, params_from, Tally, VerificationReport, Witness};
use crate::error::{Error, Result};
use crate::families::{build, CycleClass, FamilySpec};
use crate::graph::{Graph, OrientedGraph};
use crate::orientations::orientation_class_reps;
use crate::spectrum::{
    char_poly_expansion, compare_coefficients, quasi_compare, QuasiOrder, SkewPolynomial,
};
use num_bigint::BigInt;
use num_traits::One;
use std::time::Instant;

/// Runs every lemma check on its stated domain restricted to order
/// `max_n`, returning one report per claim in claim order.
pub fn cmd_check_lemmas(max_n: usize) -> Result<Vec<VerificationReport>> {
    if !(6..=10).contains(&max_n) {
        return Err(Error::InvalidParameter(format!(
            "lemma sweep needs 6 <= max_n <= 10, got {max_n}"
        )));
    }
    let corpus = Corpus::new(max_n)?;
    Ok(vec![
        lemma_2_4(&corpus),
        lemma_2_5(&corpus),
        lemma_2_6(&corpus),
        lemma_2_7(&corpus),
        lemma_2_8(&corpus),
        lemma_2_9(&corpus),
        lemma_2_10(&corpus),
        lemma_2_11(&corpus),
        lemma_2_12(&corpus),
        lemma_2_13(&corpus),
        lemma_2_14(&corpus),
        lemma_3_1(&corpus),
        lemma_3_2(&corpus),
        lemma_3_3(&corpus),
    ])
}

struct Corpus {
    max_n: usize,
    trees: Vec<Vec<Graph>>,
    unicyclic: Vec<Vec<Graph>>,
    bicyclic: Vec<Vec<Graph>>,
}

impl Corpus {
    fn new(max_n: usize) -> Result<Self> {
        let mut trees = vec![Vec::new(); max_n + 1];
        let mut unicyclic = vec![Vec::new(); max_n + 1];
        let mut bicyclic = vec![Vec::new(); max_n + 1];
        for n in 1..=max_n {
            trees[n] = crate::enumeration::enumerate_trees(n)?;
            if n >= 3 {
                unicyclic[n] = crate::enumeration::enumerate_unicyclic(n)?;
            }
            if n >= 4 {
                bicyclic[n] = crate::enumeration::enumerate_bicyclic(n)?;
            }
        }
        Ok(Corpus {
            max_n,
            trees,
            unicyclic,
            bicyclic,
        })
    }
}

fn family_poly(spec: &FamilySpec) -> SkewPolynomial {
    char_poly_expansion(&build(spec).expect("valid family parameters"))
}

/// `P_k` polynomial with `P_0` the empty-graph unit.
fn path_poly(k: usize) -> SkewPolynomial {
    if k == 0 {
        SkewPolynomial::from_even_coeffs(0, vec![BigInt::one()]).unwrap()
    } else {
        family_poly(&FamilySpec::Path { n: k })
    }
}

/// `S_k` polynomial; the degenerate `S_1` is the single vertex.
fn star_poly(k: usize) -> SkewPolynomial {
    if k == 1 {
        SkewPolynomial::from_even_coeffs(1, vec![BigInt::one()]).unwrap()
    } else {
        family_poly(&FamilySpec::Star { n: k })
    }
}

fn u_minus_poly(n: usize, d: usize) -> SkewPolynomial {
    family_poly(&FamilySpec::U {
        n,
        d,
        orient: CycleClass::Minus,
    })
}

fn b_minus_poly(n: usize, d: usize) -> SkewPolynomial {
    family_poly(&FamilySpec::B {
        n,
        d,
        orient: [CycleClass::Minus; 3],
    })
}

fn t_poly(n: usize, d: usize) -> SkewPolynomial {
    family_poly(&FamilySpec::T { n, d })
}

/// Edges whose removal disconnects the graph.
fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !g.delete(&[], &[(u, v)]).unwrap().is_connected())
        .collect()
}

fn pendant_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

/// Cut-edge deletion never increases a coefficient.
fn lemma_2_4(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    let families = [&corpus.trees, &corpus.unicyclic, &corpus.bicyclic];
    for graphs in families.iter().flat_map(|f| f.iter()) {
        for g in graphs {
            if g.n() < 2 {
                continue;
            }
            let cut_edges = bridges(g);
            if cut_edges.is_empty() {
                continue;
            }
            tally.graph();
            for rep in orientation_class_reps(g).expect("corpus graphs are connected") {
                tally.case();
                let whole = char_poly_expansion(&rep);
                for &(u, v) in &cut_edges {
                    let smaller = char_poly_expansion(&rep.delete(&[], &[(u, v)]).unwrap());
                    let order = quasi_compare(&whole, &smaller).unwrap();
                    if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                        tally.violation(Witness::new(
                            &rep,
                            &whole,
                            None,
                            &format!("deleting cut edge {u}-{v} gave {order:?}"),
                        ));
                    }
                }
            }
        }
    }
    finish(
        "lemma-2.4",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Unicyclic and bicyclic graphs dominate the star of their order.
fn lemma_2_5(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 3..=corpus.max_n {
        let star = star_poly(n);
        for g in corpus.unicyclic[n].iter().chain(corpus.bicyclic[n].iter()) {
            tally.graph();
            for rep in orientation_class_reps(g).expect("connected") {
                tally.case();
                let poly = char_poly_expansion(&rep);
                let order = quasi_compare(&poly, &star).unwrap();
                if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                    tally.violation(Witness::new(
                        &rep,
                        &poly,
                        None,
                        &format!("comparison with the star gave {order:?}"),
                    ));
                }
            }
        }
    }
    finish(
        "lemma-2.5",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Splitting a path never increases coefficients, and the single-vertex
/// split is the smallest.
fn lemma_2_6(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 2..=corpus.max_n {
        let whole = path_poly(n);
        let floor = path_poly(1).union_product(&path_poly(n - 1));
        for i in 1..n {
            tally.graph();
            tally.case();
            let split = path_poly(i).union_product(&path_poly(n - i));
            let hi = quasi_compare(&whole, &split).unwrap();
            let lo = quasi_compare(&split, &floor).unwrap();
            if !hi.satisfies(QuasiOrder::GreaterOrEquivalent)
                || !lo.satisfies(QuasiOrder::GreaterOrEquivalent)
            {
                let og = build(&FamilySpec::Path { n }).unwrap();
                tally.violation(Witness::new(
                    &og,
                    &whole,
                    None,
                    &format!("split at {i} gave {hi:?}/{lo:?}"),
                ));
            }
        }
    }
    finish(
        "lemma-2.6",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Every tree sits between the star and the path of its order.
fn lemma_2_7(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 5..=corpus.max_n {
        let path = path_poly(n);
        let star = star_poly(n);
        for t in &corpus.trees[n] {
            let poly = char_poly_expansion(&OrientedGraph::min_to_max(t.clone()));
            if poly == path || poly == star {
                // P_n and S_n themselves are excluded from the statement.
                continue;
            }
            tally.graph();
            tally.case();
            let below = quasi_compare(&path, &poly).unwrap();
            let above = quasi_compare(&poly, &star).unwrap();
            if !below.satisfies(QuasiOrder::GreaterOrEquivalent)
                || !above.satisfies(QuasiOrder::GreaterOrEquivalent)
            {
                tally.violation(Witness::new(
                    &OrientedGraph::min_to_max(t.clone()),
                    &poly,
                    None,
                    &format!("tree comparison gave {below:?}/{above:?}"),
                ));
            }
        }
    }
    finish(
        "lemma-2.7",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Within trees of fixed order and diameter, the path-with-star member is
/// minimal.
fn lemma_2_8(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 3..=corpus.max_n {
        for t in &corpus.trees[n] {
            let d = t.diameter().unwrap();
            if d < 2 {
                continue;
            }
            tally.graph();
            tally.case();
            let poly = char_poly_expansion(&OrientedGraph::min_to_max(t.clone()));
            let extremal = t_poly(n, d);
            let order = quasi_compare(&poly, &extremal).unwrap();
            if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                tally.violation(Witness::new(
                    &OrientedGraph::min_to_max(t.clone()),
                    &poly,
                    None,
                    &format!("diameter-{d} tree gave {order:?}"),
                ));
            }
        }
    }
    finish(
        "lemma-2.8",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// The path-with-star tree is monotone in the diameter.
fn lemma_2_9(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 5..=corpus.max_n {
        for d0 in 3..n {
            for d in d0 + 1..n {
                tally.graph();
                tally.case();
                let hi = t_poly(n, d);
                let lo = t_poly(n, d0);
                let order = quasi_compare(&hi, &lo).unwrap();
                if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                    let og = build(&FamilySpec::T { n, d }).unwrap();
                    tally.violation(Witness::new(
                        &og,
                        &hi,
                        None,
                        &format!("d={d} vs d0={d0} gave {order:?}"),
                    ));
                }
            }
        }
    }
    finish(
        "lemma-2.9",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Merging two path-with-star trees sums orders (minus the shared vertex)
/// and diameters without increasing coefficients.
fn lemma_2_10(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n1 in 5..=corpus.max_n {
        for d1 in 2..n1.saturating_sub(2) {
            for n2 in 2..=corpus.max_n {
                if n1 + n2 - 1 > corpus.max_n {
                    continue;
                }
                let d2_range: Vec<usize> = if n2 == 2 {
                    vec![1]
                } else {
                    (2..n2 - 1).collect()
                };
                for &d2 in &d2_range {
                    let merged_n = n1 + n2 - 1;
                    let merged_d = d1 + d2;
                    if merged_d < 2 || merged_d > merged_n - 1 {
                        continue;
                    }
                    tally.graph();
                    tally.case();
                    let left = t_poly(n1, d1);
                    let right = if n2 == 2 {
                        path_poly(2)
                    } else {
                        t_poly(n2, d2)
                    };
                    let pair = left.union_product(&right);
                    let merged = t_poly(merged_n, merged_d);
                    let order = compare_coefficients(pair.coeffs(), merged.coeffs());
                    if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                        let og = build(&FamilySpec::T { n: n1, d: d1 }).unwrap();
                        tally.violation(Witness::new(
                            &og,
                            &pair,
                            None,
                            &format!(
                                "T({n1},{d1}) u T({n2},{d2}) vs T({merged_n},{merged_d}) gave {order:?}"
                            ),
                        ));
                    }
                }
            }
        }
    }
    finish(
        "lemma-2.10",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Every oriented unicyclic graph of diameter `d` dominates the evenly
/// oriented quadrilateral member.
fn lemma_2_11(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 6..=corpus.max_n {
        for d in 3..=n - 2 {
            let extremal = u_minus_poly(n, d);
            for g in &corpus.unicyclic[n] {
                if g.diameter().unwrap() != d {
                    continue;
                }
                tally.graph();
                for rep in orientation_class_reps(g).expect("connected") {
                    tally.case();
                    let poly = char_poly_expansion(&rep);
                    let order = quasi_compare(&poly, &extremal).unwrap();
                    if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                        tally.violation(Witness::new(
                            &rep,
                            &poly,
                            None,
                            &format!("unicyclic diameter-{d} member gave {order:?}"),
                        ));
                    }
                }
            }
        }
    }
    finish(
        "lemma-2.11",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Exact coefficient identity behind the `U` vs `T` comparison: the gap
/// `a_{2i}(U-) - a_{2i}(T)` equals `a_{2i-2}` of a path-star union two
/// vertices smaller.
pub fn lemma_2_12_identity(n: usize, d: usize) -> Result<bool> {
    if !(3 <= d && d + 2 <= n) {
        return Err(Error::InvalidParameter(format!(
            "identity needs 3 <= d <= n-2, got n={n}, d={d}"
        )));
    }
    let u = u_minus_poly(n, d);
    let t = t_poly(n, d);
    let rhs = path_poly(d - 3).union_product(&star_poly(n - d - 1));
    if u.a(0) != t.a(0) {
        return Ok(false);
    }
    for two_i in (2..=n).step_by(2) {
        if u.a(two_i) - t.a(two_i) != rhs.a(two_i - 2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The quadrilateral member dominates the tree member, via the exact gap
/// identity.
fn lemma_2_12(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 5..=corpus.max_n {
        for d in 3..=n - 2 {
            tally.graph();
            tally.case();
            let u = u_minus_poly(n, d);
            let t = t_poly(n, d);
            let order = quasi_compare(&u, &t).unwrap();
            let identity = lemma_2_12_identity(n, d).unwrap();
            if !order.satisfies(QuasiOrder::GreaterOrEquivalent) || !identity {
                let og = build(&FamilySpec::U {
                    n,
                    d,
                    orient: CycleClass::Minus,
                })
                .unwrap();
                tally.violation(Witness::new(
                    &og,
                    &u,
                    None,
                    &format!("order {order:?}, identity {identity}"),
                ));
            }
        }
    }
    finish(
        "lemma-2.12",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// The quadrilateral member is monotone in the diameter.
fn lemma_2_13(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 5..=corpus.max_n {
        for d0 in 3..=n.saturating_sub(2) {
            for d in d0 + 1..=n - 2 {
                tally.graph();
                tally.case();
                let hi = u_minus_poly(n, d);
                let lo = u_minus_poly(n, d0);
                let order = quasi_compare(&hi, &lo).unwrap();
                if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                    let og = build(&FamilySpec::U {
                        n,
                        d,
                        orient: CycleClass::Minus,
                    })
                    .unwrap();
                    tally.violation(Witness::new(
                        &og,
                        &hi,
                        None,
                        &format!("d={d} vs d0={d0} gave {order:?}"),
                    ));
                }
            }
        }
    }
    finish(
        "lemma-2.13",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// The all-evenly theta member is monotone in the diameter. The family is
/// only defined up to `d = n - 3`, so the sweep stops there.
fn lemma_2_14(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 7..=corpus.max_n {
        for d0 in 3..=n.saturating_sub(3) {
            for d in d0 + 1..=n - 3 {
                tally.graph();
                tally.case();
                let hi = b_minus_poly(n, d);
                let lo = b_minus_poly(n, d0);
                let order = quasi_compare(&hi, &lo).unwrap();
                if !order.satisfies(QuasiOrder::GreaterOrEquivalent) {
                    let og = build(&FamilySpec::B {
                        n,
                        d,
                        orient: [CycleClass::Minus; 3],
                    })
                    .unwrap();
                    tally.violation(Witness::new(
                        &og,
                        &hi,
                        None,
                        &format!("d={d} vs d0={d0} gave {order:?}"),
                    ));
                }
            }
        }
    }
    finish(
        "lemma-2.14",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Strict minimality over the diameter class, checked for one combination
/// of parameters; shared by the three strictness lemmas.
fn strict_sweep(
    corpus: &Corpus,
    n: usize,
    d: usize,
    tally: &mut Tally,
    domain: impl Fn(&Graph) -> bool,
    skip_extremal_entirely: bool,
) {
    let extremal = b_minus_poly(n, d);
    let b_key = {
        let og = build(&FamilySpec::B {
            n,
            d,
            orient: [CycleClass::Minus; 3],
        })
        .unwrap();
        crate::enumeration::canonical_form(og.base()).unwrap()
    };
    for g in &corpus.bicyclic[n] {
        if g.diameter().unwrap() != d || !crate::graph::in_class_b(g).unwrap() || !domain(g) {
            continue;
        }
        let is_extremal = crate::enumeration::canonical_form(g).unwrap() == b_key;
        if is_extremal && skip_extremal_entirely {
            continue;
        }
        tally.graph();
        for rep in orientation_class_reps(g).expect("connected") {
            if is_extremal && super::all_cycles_evenly_oriented(&rep) {
                continue;
            }
            tally.case();
            let poly = char_poly_expansion(&rep);
            let order = quasi_compare(&extremal, &poly).unwrap();
            if order != QuasiOrder::StrictlyLess {
                tally.violation(Witness::new(
                    &rep,
                    &poly,
                    None,
                    &format!("competitor comparison gave {order:?}"),
                ));
            }
        }
    }
}

/// Strict minimality at the largest admissible diameter `d = n - 3`.
fn lemma_3_1(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 6..=corpus.max_n {
        strict_sweep(corpus, n, n - 3, &mut tally, |_| true, true);
    }
    finish(
        "lemma-3.1",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Strict minimality against pendant-free members.
fn lemma_3_2(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 7..=corpus.max_n {
        for d in 3..=n - 4 {
            strict_sweep(
                corpus,
                n,
                d,
                &mut tally,
                |g| pendant_vertices(g).is_empty(),
                true,
            );
        }
    }
    finish(
        "lemma-3.2",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

/// Strict minimality against members with exactly one pendant vertex that
/// lies on every diametrical path and whose removal leaves no pendants.
fn lemma_3_3(corpus: &Corpus) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::new();
    for n in 7..=corpus.max_n {
        for d in 3..=n - 4 {
            strict_sweep(corpus, n, d, &mut tally, |g| in_lemma_3_3_domain(g, d), true);
        }
    }
    finish(
        "lemma-3.3",
        params_from(&[("max_n", corpus.max_n as i64)]),
        tally,
        started,
    )
}

fn in_lemma_3_3_domain(g: &Graph, d: usize) -> bool {
    let pendants = pendant_vertices(g);
    let [u] = pendants.as_slice() else {
        return false;
    };
    let u = *u;
    let without = g.delete(&[u], &[]).unwrap();
    if !pendant_vertices(&without).is_empty() {
        return false;
    }
    // u must lie on every diametrical path. For pairs not involving u,
    // removing u must break every shortest path of length d.
    let relabel = |v: usize| if v < u { v } else { v - 1 };
    for x in 0..g.n() {
        let dist = g.bfs_distances(x);
        for y in x + 1..g.n() {
            if dist[y] != d || x == u || y == u {
                continue;
            }
            let shrunk = without.bfs_distances(relabel(x));
            if shrunk[relabel(y)] <= d {
                return false;
            }
        }
    }
    true
}
