//! Exhaustive generation of graphs up to isomorphism, built on a canonical
//! labelling for orders up to 16.

use crate::error::{Error, Result};
use crate::graph::{classify_bicyclic, in_class_b, Graph};
use std::collections::BTreeSet;
use std::rc::Rc;

const CANONICAL_CAP: usize = 16;

/// A total-order key for graphs on at most 16 vertices: two graphs have
/// equal keys exactly when they are isomorphic.
///
/// The key is the lexicographically minimal upper-triangle adjacency bit
/// string (read column by column, `(0,1), (0,2), (1,2), (0,3), ...`) over
/// all labelings compatible with the iterated degree refinement, packed
/// most-significant-bit first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonical representative graph from the key.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (127 - idx) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::new(self.n, edges).expect("canonical bits encode a valid graph")
    }
}

/// Canonical labelling by degree refinement plus backtracking.
///
/// Candidate labelings respect the refined color classes; within them the
/// search keeps the lexicographically smallest adjacency bit string, with
/// branch-and-bound pruning on prefixes and a twin rule that skips
/// candidates interchangeable with an already-tried one by a transposition
/// automorphism. Errors above 16 vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_CAP {
        return Err(Error::SizeCap {
            n,
            cap: CANONICAL_CAP,
        });
    }
    if n <= 1 {
        return Ok(CanonicalForm { n, bits: 0 });
    }
    let rows: Vec<u16> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u16, |acc, &w| acc | 1 << w)
        })
        .collect();
    let colors = refine(g);
    // Position blocks: positions are filled class by class in color order.
    let mut class_sizes = vec![0usize; colors.iter().max().unwrap() + 1];
    for &c in &colors {
        class_sizes[c] += 1;
    }
    let mut block_color = Vec::with_capacity(n);
    for (c, &size) in class_sizes.iter().enumerate() {
        block_color.extend(std::iter::repeat_n(c, size));
    }

    let mut search = Search {
        n,
        rows: &rows,
        colors: &colors,
        block_color: &block_color,
        perm: Vec::with_capacity(n),
        used: 0,
        best: u128::MAX,
    };
    search.descend(0, 0, 0);
    Ok(CanonicalForm {
        n,
        bits: search.best,
    })
}

struct Search<'a> {
    n: usize,
    rows: &'a [u16],
    colors: &'a [usize],
    block_color: &'a [usize],
    perm: Vec<usize>,
    used: u16,
    best: u128,
}

impl Search<'_> {
    fn descend(&mut self, pos: usize, bits: u128, bit_len: u32) {
        if pos == self.n {
            if bits < self.best {
                self.best = bits;
            }
            return;
        }
        let want = self.block_color[pos];
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            // Twin rule: skip v when some tried u is swappable with v by an
            // automorphism (equal open or closed neighborhoods).
            let twin = tried.iter().any(|&u| {
                self.rows[u] == self.rows[v]
                    || self.rows[u] ^ self.rows[v] == (1 << u | 1 << v)
            });
            if twin {
                continue;
            }
            tried.push(v);
            let mut next_bits = bits;
            let mut next_len = bit_len;
            for &placed in &self.perm {
                let bit = (self.rows[v] >> placed & 1) as u128;
                next_bits |= bit << (127 - next_len);
                next_len += 1;
            }
            // Prune when the prefix already exceeds the incumbent.
            if next_len > 0 && prefix(next_bits, next_len) > prefix(self.best, next_len) {
                continue;
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.descend(pos + 1, next_bits, next_len);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

fn prefix(bits: u128, len: u32) -> u128 {
    if len == 0 {
        0
    } else {
        bits >> (128 - len)
    }
}

/// Iterated degree refinement: colors start as degree ranks and are
/// repeatedly replaced by the rank of `(color, sorted neighbor colors)`
/// until stable. The refined partition is isomorphism-invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = {
        let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        sorted.dedup();
        degrees
            .iter_mut()
            .for_each(|d| *d = sorted.binary_search(d).unwrap());
        degrees
    };
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| sorted.binary_search(&s).unwrap())
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

/// Rooted trees of one size, as parent lists: entry `i` is the parent of
/// vertex `i + 1`, the root being vertex 0.
type TreeList = Rc<Vec<Vec<usize>>>;

/// Rooted trees on `k` vertices up to rooted isomorphism.
fn rooted_trees(k: usize) -> TreeList {
    fn build(k: usize, cache: &mut Vec<Option<TreeList>>) -> TreeList {
        if let Some(hit) = &cache[k] {
            return hit.clone();
        }
        let mut out: Vec<Vec<usize>> = Vec::new();
        // Children multisets in canonical (non-increasing) order: each child
        // subtree is (size, index within rooted_trees(size)), and the pairs
        // never increase left to right.
        fn extend(
            remaining: usize,
            max_part: (usize, usize),
            parents: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
            cache: &mut Vec<Option<TreeList>>,
        ) {
            if remaining == 0 {
                out.push(parents.clone());
                return;
            }
            let mut size = remaining.min(max_part.0);
            while size >= 1 {
                let subtrees = build(size, cache);
                let top = if size == max_part.0 {
                    max_part.1.min(subtrees.len() - 1)
                } else {
                    subtrees.len() - 1
                };
                for idx in (0..=top).rev() {
                    let offset = parents.len() + 1;
                    parents.push(0);
                    for &p in &subtrees[idx] {
                        parents.push(p + offset);
                    }
                    extend(remaining - size, (size, idx), parents, out, cache);
                    parents.truncate(parents.len() - size);
                }
                size -= 1;
            }
        }
        if k == 1 {
            out.push(Vec::new());
        } else {
            let mut parents = Vec::new();
            extend(k - 1, (k - 1, usize::MAX), &mut parents, &mut out, cache);
        }
        let rc = Rc::new(out);
        cache[k] = Some(rc.clone());
        rc
    }
    thread_local! {
        static CACHE: std::cell::RefCell<Vec<Option<TreeList>>> =
            std::cell::RefCell::new(vec![None; 16]);
    }
    CACHE.with(|c| {
        let mut cache = c.borrow_mut();
        if cache.len() <= k {
            cache.resize(k + 1, None);
        }
        build(k, &mut cache)
    })
}

/// Attaches every assignment of rooted trees to the vertices of `base`
/// bringing the total order to `n`, and feeds each candidate to `sink`.
fn attach_forests(base: &Graph, n: usize, sink: &mut dyn FnMut(Graph)) {
    let b = base.n();
    debug_assert!(b <= n);
    fn assign(
        base: &Graph,
        vertex: usize,
        budget: usize,
        edges: &mut Vec<(usize, usize)>,
        next_label: usize,
        n: usize,
        sink: &mut dyn FnMut(Graph),
    ) {
        let b = base.n();
        if vertex == b {
            if budget == 0 {
                sink(Graph::new(n, edges.iter().copied()).expect("valid candidate"));
            }
            return;
        }
        for extra in 0..=budget {
            let trees = rooted_trees(extra + 1);
            for tree in trees.iter() {
                let before = edges.len();
                // Tree labels: root -> base vertex, others -> fresh labels.
                let fresh = next_label;
                for (i, &p) in tree.iter().enumerate() {
                    let child = fresh + i;
                    let parent = if p == 0 { vertex } else { fresh + p - 1 };
                    edges.push((parent, child));
                }
                assign(base, vertex + 1, budget - extra, edges, fresh + extra, n, sink);
                edges.truncate(before);
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    assign(base, 0, n - b, &mut edges, b, n, sink);
}

/// Every connected bicyclic graph on `n` vertices (`|E| = n + 1`), exactly
/// once up to isomorphism, as canonical representatives sorted by
/// canonical form.
///
/// Generation is structure-first: every base shape made of two cycles with
/// `t >= 0` common vertices (a theta for `t >= 2`, two cycles sharing one
/// vertex, or two cycles joined by a path), with rooted forests attached
/// over all partitions, deduplicated by canonical form. Valid for
/// `4 <= n <= 12`.
pub fn enumerate_bicyclic(n: usize) -> Result<Vec<Graph>> {
    if !(4..=12).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "bicyclic enumeration handles 4 <= n <= 12, got {n}"
        )));
    }
    let mut keys = BTreeSet::new();
    for base in bicyclic_bases(n) {
        attach_forests(&base, n, &mut |g| {
            keys.insert(canonical_form(&g).expect("n <= 12"));
        });
    }
    Ok(keys.iter().map(CanonicalForm::to_graph).collect())
}

/// All bicyclic base shapes with at most `max_n` vertices and no trees
/// attached: thetas, one-point unions of two cycles, and two cycles joined
/// by a path.
fn bicyclic_bases(max_n: usize) -> Vec<Graph> {
    let mut bases = Vec::new();
    // Theta(p1, p2, p3): two hubs joined by three internally disjoint paths
    // with p1 <= p2 <= p3 edges; at most one path may be a single edge.
    for p1 in 1..=max_n {
        for p2 in p1.max(2)..=max_n {
            for p3 in p2..=max_n {
                let order = p1 + p2 + p3 - 1;
                if order > max_n {
                    continue;
                }
                let mut edges = Vec::new();
                let mut next = 2;
                for p in [p1, p2, p3] {
                    let mut prev = 0;
                    for _ in 0..p - 1 {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    edges.push((prev, 1));
                }
                bases.push(Graph::new(order, edges).unwrap());
            }
        }
    }
    // Two cycles sharing a single vertex.
    for a in 3..=max_n {
        for b in a..=max_n {
            if a + b - 1 > max_n {
                continue;
            }
            let mut edges: Vec<(usize, usize)> = (0..a).map(|v| (v, (v + 1) % a)).collect();
            let start = a;
            edges.push((0, start));
            for v in start..start + b - 2 {
                edges.push((v, v + 1));
            }
            edges.push((start + b - 2, 0));
            bases.push(Graph::new(a + b - 1, edges).unwrap());
        }
    }
    // Two disjoint cycles joined by a path of length l >= 1.
    for a in 3..=max_n {
        for b in a..=max_n {
            for l in 1..=max_n {
                let order = a + b + l - 1;
                if order > max_n {
                    continue;
                }
                let mut edges: Vec<(usize, usize)> = (0..a).map(|v| (v, (v + 1) % a)).collect();
                let mut prev = 0;
                let mut next = a;
                for _ in 0..l {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                // prev anchors the second cycle; b - 1 fresh vertices close it.
                let anchor = prev;
                let first = next;
                for v in first..first + b - 1 {
                    edges.push((if v == first { anchor } else { v - 1 }, v));
                }
                edges.push((first + b - 2, anchor));
                bases.push(Graph::new(order, edges).unwrap());
            }
        }
    }
    bases
}

/// Members of the diameter-`d` class: bicyclic graphs on `n` vertices with
/// diameter `d`, excluding those with vertex-disjoint odd cycles whose
/// lengths sum to 2 mod 4. Sorted by canonical form.
pub fn enumerate_class_b(n: usize, d: usize) -> Result<Vec<Graph>> {
    if !(3 <= d && d + 3 <= n) {
        return Err(Error::InvalidParameter(format!(
            "diameter class needs 3 <= d <= n-3, got n={n}, d={d}"
        )));
    }
    Ok(enumerate_bicyclic(n)?
        .into_iter()
        .filter(|g| in_class_b(g).unwrap() && g.diameter().unwrap() == d)
        .collect())
}

/// All trees on `n` vertices up to isomorphism, grown by leaf addition
/// with canonical-form deduplication; sorted by canonical form.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n > 12 {
        return Err(Error::InvalidParameter(format!(
            "tree enumeration handles n <= 12, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(1)).unwrap());
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for key in &level {
            let tree = key.to_graph();
            for v in 0..tree.n() {
                let mut edges = tree.edges().to_vec();
                edges.push((v, size - 1));
                let grown = Graph::new(size, edges).unwrap();
                next.insert(canonical_form(&grown).unwrap());
            }
        }
        level = next;
    }
    Ok(level.iter().map(CanonicalForm::to_graph).collect())
}

/// All connected unicyclic graphs (`|E| = n`) on `n` vertices up to
/// isomorphism: every cycle length with all rooted-forest attachments,
/// deduplicated; sorted by canonical form.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    if !(3..=12).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "unicyclic enumeration handles 3 <= n <= 12, got {n}"
        )));
    }
    let mut keys = BTreeSet::new();
    for g in 3..=n {
        let base = Graph::new(g, (0..g).map(|v| (v, (v + 1) % g))).unwrap();
        attach_forests(&base, n, &mut |cand| {
            keys.insert(canonical_form(&cand).expect("n <= 12"));
        });
    }
    Ok(keys.iter().map(CanonicalForm::to_graph).collect())
}

/// All connected graphs on exactly `n` vertices up to isomorphism, by
/// breadth-first edge addition with deduplication at every level. Meant
/// for small-order cross-checks; capped at `n <= 8`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > 8 {
        return Err(Error::InvalidParameter(format!(
            "connected enumeration handles n <= 8, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut all: Vec<CanonicalForm> = Vec::new();
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::new();
    level.insert(canonical_form(&Graph::empty(n)).unwrap());
    while !level.is_empty() {
        all.extend(level.iter().copied());
        let mut next = BTreeSet::new();
        for key in &level {
            let g = key.to_graph();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut edges = g.edges().to_vec();
                        edges.push((u, v));
                        let grown = Graph::new(n, edges).unwrap();
                        next.insert(canonical_form(&grown).unwrap());
                    }
                }
            }
        }
        level = next;
    }
    all.sort_unstable();
    Ok(all
        .iter()
        .map(CanonicalForm::to_graph)
        .filter(Graph::is_connected)
        .collect())
}

/// Classification metadata helper used by the census sidecar.
pub fn shape_summary(g: &Graph) -> Option<crate::graph::BicyclicShape> {
    classify_bicyclic(g).ok()
}
