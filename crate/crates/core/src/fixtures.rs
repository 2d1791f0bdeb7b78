//! Small named relations used throughout the tests, the CLI examples, and
//! the Python smoke test.

use std::sync::Arc;

use crate::relation::Relation;
use crate::universe::Universe;

fn build(labels: &[&str], neighborhoods: &[(&str, &[&str])]) -> Relation {
    let u: Arc<Universe> = Universe::new(labels.iter().copied()).expect("valid labels");
    Relation::from_neighborhoods(&u, neighborhoods.iter().map(|(a, ns)| (*a, ns.iter().copied())))
        .expect("valid neighborhoods")
}

/// Reflexive but neither symmetric nor transitive: each point sees itself and
/// the next one, except the last. `R(a) = {a,b}`, `R(b) = {b,c}`, `R(c) = {c}`.
pub fn staircase() -> Relation {
    build(
        &["a", "b", "c"],
        &[("a", &["a", "b"]), ("b", &["b", "c"]), ("c", &["c"])],
    )
}

/// The tolerance on five points whose neighbourhoods slide along a path:
/// `R(1) = {1,2}`, `R(2) = {1,2,3}`, ..., `R(5) = {4,5}`.
pub fn path_tolerance() -> Relation {
    build(
        &["1", "2", "3", "4", "5"],
        &[
            ("1", &["1", "2"]),
            ("2", &["1", "2", "3"]),
            ("3", &["2", "3", "4"]),
            ("4", &["3", "4", "5"]),
            ("5", &["4", "5"]),
        ],
    )
}

/// The quasiorder with a single non-trivial arrow `a → b` and an isolated
/// point: `R(a) = {a,b}`, `R(b) = {b}`, `R(c) = {c}`.
pub fn arrow_quasiorder() -> Relation {
    build(
        &["a", "b", "c"],
        &[("a", &["a", "b"]), ("b", &["b"]), ("c", &["c"])],
    )
}

/// The equivalence on `{a,b,c}` with classes `{a,b}` and `{c}`.
pub fn two_block_equivalence() -> Relation {
    build(
        &["a", "b", "c"],
        &[("a", &["a", "b"]), ("b", &["a", "b"]), ("c", &["c"])],
    )
}
