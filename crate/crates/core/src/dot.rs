//! Graphviz (DOT) export of the order structures.
//!
//! All exports draw Hasse diagrams bottom-up (`rankdir=BT`): an edge `i → j`
//! means `j` covers `i`. Output is deterministic: nodes and edges are emitted
//! in index order.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::bz::{clopen_routes, NegOperator};
use crate::completion::DmLattice;
use crate::kleene::{center_by_neutrality, sharp_indices};
use crate::rough::RsFamily;
use crate::{Error, Result};

/// What the `dot` command draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotTarget {
    /// The approximation-pair family under its componentwise order.
    Rs,
    /// The full completion.
    Dm,
    /// The completion restricted to its central elements.
    Center,
    /// The completion restricted to the clopen family of a negation.
    Clopen,
}

impl FromStr for DotTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rs" => Ok(DotTarget::Rs),
            "dm" => Ok(DotTarget::Dm),
            "center" => Ok(DotTarget::Center),
            "clopen" => Ok(DotTarget::Clopen),
            other => Err(Error::Parse(format!(
                "unknown dot target {other:?}; expected rs, dm, center or clopen"
            ))),
        }
    }
}

/// Cover pairs `(i, j)` (`j` covers `i`) of an arbitrary finite order.
fn poset_covers(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq(i, j) || leq(j, i) {
                continue;
            }
            let between =
                (0..n).any(|k| k != i && k != j && leq(i, k) && !leq(k, i) && leq(k, j) && !leq(j, k));
            if !between {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn header(out: &mut String, name: &str) {
    let _ = writeln!(out, "digraph {name} {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [fontname=\"Helvetica\"];");
    let _ = writeln!(out, "  edge [arrowhead=none];");
}

/// Hasse diagram of the approximation pairs. Exact pairs are drawn filled.
pub fn rs_dot(rs: &RsFamily) -> String {
    let u = rs.space().universe();
    let mut out = String::new();
    header(&mut out, "rs");
    for i in 0..rs.len() {
        let p = rs.pair(i);
        let mut attrs = format!("label=\"{}\"", p.format(u));
        if p.is_exact() {
            attrs.push_str(", style=filled, fillcolor=\"#d7e8ff\"");
        }
        let _ = writeln!(out, "  n{i} [{attrs}];");
    }
    for (i, j) in poset_covers(rs.len(), |i, j| rs.leq(i, j)) {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the completion. Elements added by the completion are
/// drawn as boxes; sharp (equivalently, complemented) elements are filled.
pub fn dm_dot(dm: &DmLattice) -> String {
    let u = dm.space().universe();
    let sharp = sharp_indices(dm);
    let mut out = String::new();
    header(&mut out, "dm");
    for i in 0..dm.len() {
        let mut attrs = format!("label=\"{}\"", dm.pair(i).format(u));
        if !dm.in_rs(i) {
            attrs.push_str(", shape=box");
        }
        if sharp.binary_search(&i).is_ok() {
            attrs.push_str(", style=filled, fillcolor=\"#d7e8ff\"");
        }
        let _ = writeln!(out, "  n{i} [{attrs}];");
    }
    for (i, j) in dm.lattice().covers() {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

fn restricted_dot(dm: &DmLattice, name: &str, members: &[usize]) -> String {
    let u = dm.space().universe();
    let lat = dm.lattice();
    let mut out = String::new();
    header(&mut out, name);
    for &i in members {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", dm.pair(i).format(u));
    }
    let covers = poset_covers(members.len(), |a, b| lat.leq(members[a], members[b]));
    for (a, b) in covers {
        let _ = writeln!(out, "  n{} -> n{};", members[a], members[b]);
    }
    out.push_str("}\n");
    out
}

/// The induced order on the central elements of the completion.
pub fn center_dot(dm: &DmLattice) -> String {
    let members = center_by_neutrality(dm.lattice());
    restricted_dot(dm, "center", &members)
}

/// The induced order on the clopen family (`{¬x}`) of a negation.
pub fn clopen_dot(dm: &DmLattice, neg: &NegOperator) -> String {
    let members = clopen_routes(dm, neg).image;
    restricted_dot(dm, "clopen", &members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::ApproxSpace;
    use crate::bz::neg_from_equivalence;
    use crate::fixtures;
    use crate::relation::Partition;
    use crate::rough::RsFamily;
    use crate::Caps;

    fn dm(rel: crate::relation::Relation) -> DmLattice {
        DmLattice::build(&ApproxSpace::new(rel), &Caps::default()).unwrap()
    }

    #[test]
    fn dm_dot_marks_added_and_sharp_elements() {
        let d = dm(fixtures::path_tolerance());
        let dot = dm_dot(&d);
        assert_eq!(dot.matches("shape=box").count(), 2);
        assert!(dot.starts_with("digraph dm {"));
        assert!(dot.ends_with("}\n"));
        assert!(dot.contains("rankdir=BT"));
        // Bottom and top are always sharp, hence filled.
        assert!(dot.matches("style=filled").count() >= 2);
    }

    #[test]
    fn rs_dot_covers_match_lattice_covers_when_rs_is_a_lattice() {
        // The staircase's RS is already a lattice equal to its completion,
        // so both exports must draw the same numbers of nodes and edges.
        let rel = fixtures::staircase();
        let rs = RsFamily::build(&ApproxSpace::new(rel.clone()), 16).unwrap();
        let d = dm(rel);
        let rs_edges = rs_dot(&rs).matches(" -> ").count();
        let dm_edges = dm_dot(&d).matches(" -> ").count();
        assert_eq!(rs_edges, dm_edges);
    }

    #[test]
    fn restricted_exports_use_original_indices() {
        let d = dm(fixtures::two_block_equivalence());
        let center = center_dot(&d);
        let part = Partition::from_spec(d.space().universe(), "ab|c").unwrap();
        let neg = neg_from_equivalence(&d, &part).unwrap();
        let clopen = clopen_dot(&d, &neg);
        for dot in [&center, &clopen] {
            assert!(dot.starts_with("digraph "));
            assert!(dot.contains("label=\"(∅,∅)\""));
        }
    }

    #[test]
    fn target_parsing() {
        assert_eq!("dm".parse::<DotTarget>().unwrap(), DotTarget::Dm);
        assert_eq!("clopen".parse::<DotTarget>().unwrap(), DotTarget::Clopen);
        assert!("hasse".parse::<DotTarget>().is_err());
    }

    #[test]
    fn deterministic_output() {
        let d = dm(fixtures::arrow_quasiorder());
        assert_eq!(dm_dot(&d), dm_dot(&d));
    }
}
