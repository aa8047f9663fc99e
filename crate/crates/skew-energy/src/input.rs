//! Resolution of CLI-facing graph inputs.
//!
//! An input string may be a family spec (`B:n=7,d=4,orient=---`), the path
//! of an arc-list file, or a graph6 line. Bare graph6 input carries no
//! orientation, so every edge is oriented from its smaller to its larger
//! label; that convention only matters for graphs with cycles.

use crate::error::Result;
use crate::families::{build, FamilySpec};
use crate::graph::io::{from_arc_list, from_graph6};
use crate::graph::OrientedGraph;
use std::path::Path;

pub fn parse_oriented_input(input: &str) -> Result<OrientedGraph> {
    if looks_like_family_spec(input) {
        let spec: FamilySpec = input.parse()?;
        return build(&spec);
    }
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)?;
        return from_arc_list(&text);
    }
    Ok(OrientedGraph::min_to_max(from_graph6(input)?))
}

fn looks_like_family_spec(input: &str) -> bool {
    matches!(
        input.as_bytes(),
        [b'P' | b'S' | b'C' | b'T' | b'U' | b'B', b':', ..]
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_spec_inputs_build() {
        let og = parse_oriented_input("P:n=2").unwrap();
        assert_eq!(og.n(), 2);
        assert_eq!(og.m(), 1);
    }

    #[test]
    fn graph6_inputs_get_the_default_orientation() {
        let og = parse_oriented_input("A_").unwrap();
        assert_eq!(og.arcs(), vec![(0, 1)]);
    }

    #[test]
    fn arc_files_are_read() {
        let dir = std::env::temp_dir().join("skew-energy-input-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("arcs.txt");
        std::fs::write(&path, "3 2\n1 0\n1 2\n").unwrap();
        let og = parse_oriented_input(path.to_str().unwrap()).unwrap();
        assert_eq!(og.arcs(), vec![(1, 0), (1, 2)]);
        std::fs::remove_file(path).ok();
    }
}
