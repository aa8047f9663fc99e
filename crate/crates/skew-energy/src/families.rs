//! Constructors for the named extremal graphs with prescribed
//! cycle-orientation classes.
//!
//! * `T(n,d)`: the tree built from a path and a star by identifying one
//!   pendant vertex of each; diameter `d`, order `n`.
//! * `U(n,d)`: a quadrilateral with a pendant path identified at one
//!   vertex and `n-d-1` pendant edges at the opposite vertex.
//! * `B(n,d)`: a `K_{2,3}` core with a pendant path at one degree-3 vertex
//!   and `n-d-2` pendant edges at the other.
//!
//! Vertex labelling is deterministic: path spine first, then the
//! cycle/core, then the pendants. Tree edges are always oriented from the
//! smaller to the larger label; cycle orientations are chosen per the
//! requested `+`/`-` class labels.

use crate::error::{Error, Result};
use crate::graph::{all_cycles, classify_bicyclic, Graph, OrientedGraph};
use crate::orientations::{cycle_parity, CycleParity};
use std::fmt;
use std::str::FromStr;

/// A `+` or `-` cycle-orientation class label. `Minus` is the evenly
/// oriented class of an even cycle (all arcs one way around), `Plus` the
/// oddly oriented one (a single arc against the rest).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleClass {
    Plus,
    Minus,
}

impl CycleClass {
    fn as_char(self) -> char {
        match self {
            CycleClass::Plus => '+',
            CycleClass::Minus => '-',
        }
    }

    /// The parity an even cycle of this class exhibits.
    fn expected_parity(self) -> CycleParity {
        match self {
            CycleClass::Plus => CycleParity::Oddly,
            CycleClass::Minus => CycleParity::Evenly,
        }
    }
}

/// Which named graph to build, with its parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Path { n: usize },
    Star { n: usize },
    Cycle { n: usize, orient: CycleClass },
    T { n: usize, d: usize },
    U { n: usize, d: usize, orient: CycleClass },
    B { n: usize, d: usize, orient: [CycleClass; 3] },
}

impl FamilySpec {
    fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match *self {
            FamilySpec::Path { n } => {
                if n < 1 {
                    return bad("path needs n >= 1".into());
                }
            }
            FamilySpec::Star { n } => {
                if n < 2 {
                    return bad(format!("star needs n >= 2, got {n}"));
                }
            }
            FamilySpec::Cycle { n, .. } => {
                if n < 3 {
                    return bad(format!("cycle needs n >= 3, got {n}"));
                }
            }
            FamilySpec::T { n, d } => {
                if !(2 <= d && d <= n.saturating_sub(1)) {
                    return bad(format!("T needs 2 <= d <= n-1, got n={n}, d={d}"));
                }
            }
            FamilySpec::U { n, d, .. } => {
                if !(3 <= d && d <= n.saturating_sub(2)) {
                    return bad(format!("U needs 3 <= d <= n-2, got n={n}, d={d}"));
                }
            }
            FamilySpec::B { n, d, .. } => {
                if !(3 <= d && d <= n.saturating_sub(3)) {
                    return bad(format!("B needs 3 <= d <= n-3, got n={n}, d={d}"));
                }
            }
        }
        Ok(())
    }
}

/// Builds the requested graph with the requested cycle-orientation
/// class(es).
///
/// Errors on out-of-range parameters and on orientation triples for `B`
/// that the cycle space cannot realize: the three quadrilateral parities
/// carry only two free bits, so the third class label must be the XOR of
/// the first two.
pub fn build(spec: &FamilySpec) -> Result<OrientedGraph> {
    spec.check()?;
    match *spec {
        FamilySpec::Path { n } => {
            let g = Graph::new(n, (1..n).map(|v| (v - 1, v)))?;
            Ok(OrientedGraph::min_to_max(g))
        }
        FamilySpec::Star { n } => {
            let g = Graph::new(n, (1..n).map(|v| (0, v)))?;
            Ok(OrientedGraph::min_to_max(g))
        }
        FamilySpec::Cycle { n, orient } => {
            // All arcs one way around; for `+` reverse the closing arc.
            let mut arcs: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            if orient == CycleClass::Plus {
                arcs[n - 1] = (0, n - 1);
            }
            OrientedGraph::from_arcs(n, &arcs)
        }
        FamilySpec::T { n, d } => {
            // Spine 0..d-2, star center d-1, leaves d..n-1.
            let center = d - 1;
            let mut edges: Vec<(usize, usize)> = (1..d).map(|v| (v - 1, v)).collect();
            edges.extend((d..n).map(|leaf| (center, leaf)));
            Ok(OrientedGraph::min_to_max(Graph::new(n, edges)?))
        }
        FamilySpec::U { n, d, orient } => {
            // Spine 0..d-4, quadrilateral q0..q3 = d-3..d, pendants at q2.
            let q = d - 3;
            let mut edges: Vec<(usize, usize)> = (1..=q).map(|v| (v - 1, v)).collect();
            edges.extend([(q, q + 1), (q + 1, q + 2), (q + 2, q + 3), (q, q + 3)]);
            edges.extend((d + 1..n).map(|p| (q + 2, p)));
            let g = Graph::new(n, edges)?;
            let mut og = OrientedGraph::min_to_max(g);
            // min_to_max orients the quadrilateral q0->q1->q2->q3 with the
            // closing edge q0->q3, which is the `+` class; flip it for `-`.
            if orient == CycleClass::Minus {
                og = reverse_arc(&og, q, q + 3);
            }
            debug_assert_eq!(
                cycle_parity(&og, &[q, q + 1, q + 2, q + 3]).unwrap(),
                orient.expected_parity()
            );
            Ok(og)
        }
        FamilySpec::B { n, d, orient } => {
            let [alpha, beta, gamma] = orient;
            let expected_gamma = if alpha == beta {
                CycleClass::Minus
            } else {
                CycleClass::Plus
            };
            if gamma != expected_gamma {
                return Err(Error::OrientationNotRealizable(format!(
                    "triple {}{}{} violates the cycle-space relation; the third label must be {}",
                    alpha.as_char(),
                    beta.as_char(),
                    gamma.as_char(),
                    expected_gamma.as_char(),
                )));
            }
            // Spine 0..d-4, core u = d-3, w = d-2, y = d-1, d, d+1,
            // pendants d+2..n-1 at w.
            let u = d - 3;
            let w = d - 2;
            let y = [d - 1, d, d + 1];
            let mut arcs: Vec<(usize, usize)> = (1..=u).map(|v| (v - 1, v)).collect();
            // All core arcs run from the degree-2 side into u and w, which
            // realizes the all-evenly (-,-,-) triple.
            for yi in y {
                arcs.push((yi, u));
                arcs.push((yi, w));
            }
            arcs.extend((d + 2..n).map(|p| (w, p)));
            let mut og = OrientedGraph::from_arcs(n, &arcs)?;
            // The base cycles in classification order use (y0,y1), (y0,y2),
            // (y1,y2). Flipping the u-edge of the y shared by two cycles
            // toggles exactly those two parities.
            match (alpha, beta) {
                (CycleClass::Minus, CycleClass::Minus) => {}
                (CycleClass::Plus, CycleClass::Plus) => og = reverse_arc(&og, y[0], u),
                (CycleClass::Plus, CycleClass::Minus) => og = reverse_arc(&og, y[1], u),
                (CycleClass::Minus, CycleClass::Plus) => og = reverse_arc(&og, y[2], u),
            }
            Ok(og)
        }
    }
}

fn reverse_arc(og: &OrientedGraph, tail: usize, head: usize) -> OrientedGraph {
    debug_assert!(og.is_arc(tail, head));
    let k = og.base().edge_index(tail, head).unwrap();
    let mut forward = og.forward().to_vec();
    forward[k] = !forward[k];
    OrientedGraph::with_forward(og.base().clone(), forward).unwrap()
}

/// Re-derives order, size, diameter, shape, cycle parities and the
/// isomorphism type from `og` and compares them with `spec`. Returns false
/// on any mismatch.
///
/// Orientation classes are compared through even-cycle parities, the only
/// switching-invariant notion available; odd cycles are structurally
/// checked only.
pub fn verify_family_shape(og: &OrientedGraph, spec: &FamilySpec) -> bool {
    let Ok(reference) = build(spec) else {
        return false;
    };
    let g = og.base();
    let (n, expected_m, expected_d) = match *spec {
        FamilySpec::Path { n } => (n, n - 1, n - 1),
        FamilySpec::Star { n } => (n, n - 1, if n >= 3 { 2 } else { 1 }),
        FamilySpec::Cycle { n, .. } => (n, n, n / 2),
        FamilySpec::T { n, d } => (n, n - 1, d),
        FamilySpec::U { n, d, .. } => (n, n, d),
        FamilySpec::B { n, d, .. } => (n, n + 1, d),
    };
    if g.n() != n || g.m() != expected_m || g.diameter().ok() != Some(expected_d) {
        return false;
    }
    if crate::enumeration::canonical_form(g).ok()
        != crate::enumeration::canonical_form(reference.base()).ok()
    {
        return false;
    }
    match *spec {
        FamilySpec::B { orient, .. } => {
            let Ok(shape) = classify_bicyclic(g) else {
                return false;
            };
            if (shape.t, shape.a, shape.b, shape.c) != (3, 4, 4, Some(4)) {
                return false;
            }
            let cycles = [shape.cycle_a, shape.cycle_b, shape.cycle_c.unwrap()];
            cycles
                .iter()
                .zip(orient)
                .all(|(c, class)| cycle_parity(og, c).ok() == Some(class.expected_parity()))
        }
        FamilySpec::U { orient, .. } => {
            let cycles = all_cycles(g);
            cycles.len() == 1
                && cycles[0].len() == 4
                && cycle_parity(og, &cycles[0]).ok() == Some(orient.expected_parity())
        }
        // The class label of an odd cycle is not a parity invariant, so
        // only even cycles get their orientation checked.
        FamilySpec::Cycle { n, orient } if n % 2 == 0 => {
            cycle_parity(og, &(0..n).collect::<Vec<_>>()).ok() == Some(orient.expected_parity())
        }
        _ => true,
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n } => write!(f, "P:n={n}"),
            FamilySpec::Star { n } => write!(f, "S:n={n}"),
            FamilySpec::Cycle { n, orient } => write!(f, "C:n={n},orient={}", orient.as_char()),
            FamilySpec::T { n, d } => write!(f, "T:n={n},d={d}"),
            FamilySpec::U { n, d, orient } => {
                write!(f, "U:n={n},d={d},orient={}", orient.as_char())
            }
            FamilySpec::B { n, d, orient } => write!(
                f,
                "B:n={n},d={d},orient={}{}{}",
                orient[0].as_char(),
                orient[1].as_char(),
                orient[2].as_char()
            ),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses spec strings such as `B:n=7,d=4,orient=---`, `U:n=9,d=5,orient=-`
    /// or `T:n=8,d=3`. Errors carry the byte position of the offending part.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |pos: usize, msg: String| Error::Parse { pos, msg };
        let colon = s.find(':').ok_or_else(|| {
            parse_err(s.len(), "expected `<kind>:<key>=<value>,...`".to_string())
        })?;
        let kind = &s[..colon];
        let mut n = None;
        let mut d = None;
        let mut orient: Option<(usize, String)> = None;
        let mut pos = colon + 1;
        for part in s[colon + 1..].split(',') {
            let eq = part
                .find('=')
                .ok_or_else(|| parse_err(pos, format!("expected key=value, got `{part}`")))?;
            let (key, value) = (&part[..eq], &part[eq + 1..]);
            let value_pos = pos + eq + 1;
            match key {
                "n" | "d" => {
                    let v: usize = value.parse().map_err(|_| {
                        parse_err(value_pos, format!("`{value}` is not a number"))
                    })?;
                    if key == "n" {
                        n = Some(v);
                    } else {
                        d = Some(v);
                    }
                }
                "orient" => orient = Some((value_pos, value.to_string())),
                other => {
                    return Err(parse_err(pos, format!("unknown key `{other}`")));
                }
            }
            pos += part.len() + 1;
        }
        let need_n = |n: Option<usize>| {
            n.ok_or_else(|| parse_err(s.len(), "missing required key `n`".to_string()))
        };
        let need_d = |d: Option<usize>| {
            d.ok_or_else(|| parse_err(s.len(), "missing required key `d`".to_string()))
        };
        let no_d = |d: Option<usize>| -> Result<()> {
            if d.is_some() {
                Err(parse_err(colon + 1, format!("`{kind}` takes no key `d`")))
            } else {
                Ok(())
            }
        };
        let no_orient = |o: &Option<(usize, String)>| -> Result<()> {
            if o.is_some() {
                Err(parse_err(
                    colon + 1,
                    format!("`{kind}` takes no key `orient`"),
                ))
            } else {
                Ok(())
            }
        };
        let one_class = |o: Option<(usize, String)>| -> Result<CycleClass> {
            let (p, v) = o.ok_or_else(|| {
                parse_err(s.len(), "missing required key `orient`".to_string())
            })?;
            match v.as_str() {
                "+" => Ok(CycleClass::Plus),
                "-" => Ok(CycleClass::Minus),
                other => Err(parse_err(p, format!("orientation `{other}` is not + or -"))),
            }
        };
        match kind {
            "P" => {
                no_d(d)?;
                no_orient(&orient)?;
                Ok(FamilySpec::Path { n: need_n(n)? })
            }
            "S" => {
                no_d(d)?;
                no_orient(&orient)?;
                Ok(FamilySpec::Star { n: need_n(n)? })
            }
            "C" => {
                no_d(d)?;
                Ok(FamilySpec::Cycle {
                    n: need_n(n)?,
                    orient: one_class(orient)?,
                })
            }
            "T" => {
                no_orient(&orient)?;
                Ok(FamilySpec::T {
                    n: need_n(n)?,
                    d: need_d(d)?,
                })
            }
            "U" => Ok(FamilySpec::U {
                n: need_n(n)?,
                d: need_d(d)?,
                orient: one_class(orient)?,
            }),
            "B" => {
                let (p, v) = orient.ok_or_else(|| {
                    parse_err(s.len(), "missing required key `orient`".to_string())
                })?;
                let chars: Vec<char> = v.chars().collect();
                if chars.len() != 3 {
                    return Err(parse_err(
                        p,
                        format!("`B` needs three orientation labels, got `{v}`"),
                    ));
                }
                let mut orient = [CycleClass::Minus; 3];
                for (i, ch) in chars.iter().enumerate() {
                    orient[i] = match ch {
                        '+' => CycleClass::Plus,
                        '-' => CycleClass::Minus,
                        other => {
                            return Err(parse_err(
                                p + i,
                                format!("orientation `{other}` is not + or -"),
                            ))
                        }
                    };
                }
                Ok(FamilySpec::B {
                    n: need_n(n)?,
                    d: need_d(d)?,
                    orient,
                })
            }
            other => Err(parse_err(
                0,
                format!("unknown family kind `{other}` (expected P, S, C, T, U or B)"),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{char_poly_expansion, char_poly_oracle};

    fn b_spec(n: usize, d: usize, labels: [CycleClass; 3]) -> FamilySpec {
        FamilySpec::B {
            n,
            d,
            orient: labels,
        }
    }

    const MMM: [CycleClass; 3] = [CycleClass::Minus, CycleClass::Minus, CycleClass::Minus];

    #[test]
    fn t74_is_a_diameter_four_tree() {
        let og = build(&FamilySpec::T { n: 7, d: 4 }).unwrap();
        assert_eq!(og.n(), 7);
        assert_eq!(og.m(), 6);
        assert_eq!(og.base().diameter().unwrap(), 4);
        assert!(verify_family_shape(&og, &FamilySpec::T { n: 7, d: 4 }));
    }

    #[test]
    fn b74_all_minus_polynomial() {
        let og = build(&b_spec(7, 4, MMM)).unwrap();
        assert_eq!(og.n(), 7);
        assert_eq!(og.m(), 8);
        let p = char_poly_expansion(&og);
        assert_eq!(p.to_string(), "x^7 + 8x^5 + 7x^3");
        assert_eq!(char_poly_oracle(&og).unwrap(), p);
    }

    #[test]
    fn u74_structure() {
        let spec = FamilySpec::U {
            n: 7,
            d: 4,
            orient: CycleClass::Minus,
        };
        let og = build(&spec).unwrap();
        assert_eq!(og.m(), 7);
        assert_eq!(og.base().diameter().unwrap(), 4);
        assert!(verify_family_shape(&og, &spec));
    }

    #[test]
    fn b_realizes_exactly_the_xor_triples() {
        use CycleClass::{Minus as M, Plus as P};
        for (triple, ok) in [
            ([M, M, M], true),
            ([P, P, M], true),
            ([P, M, P], true),
            ([M, P, P], true),
            ([M, M, P], false),
            ([P, P, P], false),
            ([P, M, M], false),
            ([M, P, M], false),
        ] {
            let result = build(&b_spec(8, 4, triple));
            if ok {
                let og = result.unwrap();
                assert!(verify_family_shape(&og, &b_spec(8, 4, triple)));
            } else {
                assert!(matches!(result, Err(Error::OrientationNotRealizable(_))));
            }
        }
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(build(&FamilySpec::Star { n: 1 }).is_err());
        assert!(build(&FamilySpec::T { n: 5, d: 5 }).is_err());
        assert!(build(&FamilySpec::U {
            n: 5,
            d: 4,
            orient: CycleClass::Minus
        })
        .is_err());
        assert!(build(&b_spec(6, 4, MMM)).is_err());
        assert!(build(&b_spec(5, 3, MMM)).is_err());
    }

    #[test]
    fn degenerate_small_families() {
        // T(n,2) is the star, T(n,n-1) the path.
        let t = build(&FamilySpec::T { n: 6, d: 2 }).unwrap();
        assert!(verify_family_shape(&t, &FamilySpec::Star { n: 6 }));
        let t = build(&FamilySpec::T { n: 6, d: 5 }).unwrap();
        assert!(verify_family_shape(&t, &FamilySpec::Path { n: 6 }));
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "P:n=2",
            "S:n=5",
            "C:n=4,orient=+",
            "T:n=8,d=3",
            "U:n=9,d=5,orient=-",
            "B:n=7,d=4,orient=---",
            "B:n=9,d=4,orient=+-+",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "B:n=7,d=4,orient=--x".parse::<FamilySpec>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 19),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "Q:n=3".parse::<FamilySpec>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "C:n=x,orient=-".parse::<FamilySpec>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
