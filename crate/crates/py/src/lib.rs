//! Python bindings for the `roughlat` engine.
//!
//! The module mirrors the CLI's conventions: subsets travel as compact
//! label strings (`"ab"`, `"∅"`, comma-separated for multi-character
//! labels) and structured reports are returned as JSON strings, ready for
//! `json.loads`. Lattice elements are addressed by index, in the same
//! canonical order the CLI prints.
//!
//! ```python
//! import json, roughlat_py as rlat
//!
//! rel = rlat.Relation(["a", "b", "c"], neighborhoods={"a": "ab", "b": "ab", "c": "abc"})
//! dm = rel.dm()
//! print(len(dm), dm.pair(dm.top()))
//! neg = dm.negation("from-equivalence:ab|c")
//! report = json.loads(dm.bz_json(neg))
//! ```

use std::collections::BTreeMap;

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use roughlat as rl;
use roughlat::approx::{ApproxSpace, Direction};
use roughlat::bz::{box_op, check_bz_axioms, diamond, is_antiortholattice, stone_analysis};
use roughlat::io::RelationDocument;
use roughlat::kleene::{center, element_analysis, sharp_indices};
use roughlat::rough::RoughPair;
use roughlat::{BitVec, Caps, NegOperator, Universe};

fn value_err(e: rl::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn caps_for(cap: Option<usize>) -> Caps {
    match cap {
        Some(n) => Caps::default().with_universe_cap(n),
        None => Caps::default(),
    }
}

fn parse_direction(direction: &str) -> PyResult<Direction> {
    match direction {
        "forward" => Ok(Direction::Forward),
        "inverse" => Ok(Direction::Inverse),
        other => Err(PyValueError::new_err(format!(
            "unknown direction {other:?} (expected \"forward\" or \"inverse\")"
        ))),
    }
}

fn parse_pair(universe: &Universe, lower: &str, upper: &str) -> PyResult<RoughPair> {
    let lo = universe.parse_subset(lower).map_err(value_err)?;
    let up = universe.parse_subset(upper).map_err(value_err)?;
    Ok(RoughPair::new(lo, up))
}

/// A binary relation on a finite universe of labelled elements.
#[pyclass(name = "Relation")]
struct PyRelation {
    inner: rl::Relation,
}

impl PyRelation {
    fn check_member(&self, label: &str) -> PyResult<usize> {
        self.inner.universe().require_index(label).map_err(value_err)
    }

    fn space(&self) -> ApproxSpace {
        ApproxSpace::new(self.inner.clone())
    }

    fn parse_subset(&self, spec: &str) -> PyResult<BitVec> {
        self.inner.universe().parse_subset(spec).map_err(value_err)
    }

    fn format_subset(&self, bits: &BitVec) -> String {
        self.inner.universe().format_subset(bits)
    }
}

#[pymethods]
impl PyRelation {
    /// Build a relation from explicit pairs, neighbourhood strings, or both;
    /// `reflexive_closure=True` adds every loop after reading.
    #[new]
    #[pyo3(signature = (universe, pairs=None, neighborhoods=None, reflexive_closure=false))]
    fn new(
        universe: Vec<String>,
        pairs: Option<Vec<(String, String)>>,
        neighborhoods: Option<BTreeMap<String, String>>,
        reflexive_closure: bool,
    ) -> PyResult<Self> {
        let doc = RelationDocument { universe, pairs, neighborhoods, reflexive_closure };
        Ok(PyRelation { inner: doc.to_relation().map_err(value_err)? })
    }

    /// Parse the same JSON relation document the CLI reads.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = RelationDocument::parse(text).map_err(value_err)?;
        Ok(PyRelation { inner: doc.to_relation().map_err(value_err)? })
    }

    /// The identity relation on `universe`.
    #[staticmethod]
    fn identity(universe: Vec<String>) -> PyResult<Self> {
        let u = Universe::new(universe).map_err(value_err)?;
        Ok(PyRelation { inner: rl::Relation::identity(&u) })
    }

    /// The full relation `U × U`.
    #[staticmethod]
    fn full(universe: Vec<String>) -> PyResult<Self> {
        let u = Universe::new(universe).map_err(value_err)?;
        Ok(PyRelation { inner: rl::Relation::full(&u) })
    }

    #[getter]
    fn universe(&self) -> Vec<String> {
        self.inner.universe().labels().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    /// The most specific class the relation belongs to
    /// (`"equivalence"`, `"quasiorder"`, ..., `"not reflexive"`).
    #[getter]
    fn kind(&self) -> PyResult<String> {
        Ok(rl::io::info_section(&self.inner).map_err(value_err)?.class)
    }

    #[getter]
    fn flags(&self) -> BTreeMap<String, bool> {
        let f = self.inner.classify();
        BTreeMap::from([
            ("reflexive".to_string(), f.reflexive),
            ("symmetric".to_string(), f.symmetric),
            ("transitive".to_string(), f.transitive),
            ("left_total".to_string(), f.left_total),
            ("right_total".to_string(), f.right_total),
            ("tolerance".to_string(), f.tolerance),
            ("quasiorder".to_string(), f.quasiorder),
            ("equivalence".to_string(), f.equivalence),
            ("irredundant_covering_tolerance".to_string(), f.irredundant_covering_tolerance),
        ])
    }

    fn contains(&self, a: &str, b: &str) -> PyResult<bool> {
        Ok(self.inner.contains(self.check_member(a)?, self.check_member(b)?))
    }

    fn pairs(&self) -> Vec<(String, String)> {
        self.inner.label_pairs()
    }

    /// The neighbourhood `R(x)` as a subset string.
    fn neighborhood(&self, label: &str) -> PyResult<String> {
        let i = self.check_member(label)?;
        Ok(self.format_subset(self.inner.row(i)))
    }

    /// Lower approximation of `subset` (given as a subset string) under the
    /// chosen direction: `"forward"` uses `R(x)`, `"inverse"` uses `R⁻¹(x)`.
    #[pyo3(signature = (subset, direction="forward"))]
    fn lower(&self, subset: &str, direction: &str) -> PyResult<String> {
        let x = self.parse_subset(subset)?;
        let dir = parse_direction(direction)?;
        Ok(self.format_subset(&self.space().lower(&x, dir)))
    }

    /// Upper approximation, same conventions as `lower`.
    #[pyo3(signature = (subset, direction="forward"))]
    fn upper(&self, subset: &str, direction: &str) -> PyResult<String> {
        let x = self.parse_subset(subset)?;
        let dir = parse_direction(direction)?;
        Ok(self.format_subset(&self.space().upper(&x, dir)))
    }

    fn inverse(&self) -> Self {
        PyRelation { inner: self.inner.inverse() }
    }

    fn reflexive_closure(&self) -> Self {
        PyRelation { inner: self.inner.reflexive_closure() }
    }

    fn transitive_closure(&self) -> Self {
        PyRelation { inner: self.inner.transitive_closure() }
    }

    fn equivalence_closure(&self) -> Self {
        PyRelation { inner: self.inner.equivalence_closure() }
    }

    fn compose(&self, other: &PyRelation) -> PyResult<Self> {
        Ok(PyRelation { inner: self.inner.compose(&other.inner).map_err(value_err)? })
    }

    /// The family of approximation pairs `RS`.
    #[pyo3(signature = (cap=None))]
    fn rs(&self, cap: Option<usize>) -> PyResult<PyRsFamily> {
        let space = self.space();
        let family = rl::RsFamily::build(&space, caps_for(cap).rs).map_err(value_err)?;
        Ok(PyRsFamily { inner: family })
    }

    /// The Dedekind–MacNeille completion of `RS`.
    #[pyo3(signature = (cap=None))]
    fn dm(&self, cap: Option<usize>) -> PyResult<PyDmLattice> {
        let dm = rl::DmLattice::build(&self.space(), &caps_for(cap)).map_err(value_err)?;
        Ok(PyDmLattice { inner: dm })
    }

    /// Classification and neighbourhood summary as a JSON string.
    fn info_json(&self) -> PyResult<String> {
        let section = rl::io::info_section(&self.inner).map_err(value_err)?;
        serde_json::to_string(&section).map_err(json_err)
    }

    /// Run the whole theorem suite on this relation; returns a JSON string
    /// with one item per law.
    #[pyo3(signature = (cap=None))]
    fn suite_json(&self, cap: Option<usize>) -> PyResult<String> {
        let report =
            rl::harness::run_theorem_suite(&self.inner, &caps_for(cap)).map_err(value_err)?;
        serde_json::to_string(&report).map_err(json_err)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&RelationDocument::from_relation(&self.inner)).map_err(json_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Relation(universe=[{}], pairs={}, kind={:?})",
            self.inner.universe().labels().join(", "),
            self.inner.pairs().len(),
            rl::io::info_section(&self.inner).map(|s| s.class).unwrap_or_default(),
        )
    }
}

/// The family `RS` of approximation pairs, in canonical order.
#[pyclass(name = "RsFamily")]
struct PyRsFamily {
    inner: rl::RsFamily,
}

impl PyRsFamily {
    fn check_index(&self, i: usize) -> PyResult<()> {
        if i < self.inner.len() {
            Ok(())
        } else {
            Err(PyIndexError::new_err(format!(
                "index {i} out of range for a family of {} pairs",
                self.inner.len()
            )))
        }
    }

    fn format_pair(&self, pair: &RoughPair) -> (String, String) {
        let u = self.inner.space().universe();
        (u.format_subset(&pair.lower), u.format_subset(&pair.upper))
    }
}

#[pymethods]
impl PyRsFamily {
    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// The `i`-th pair as `(lower, upper)` subset strings.
    fn pair(&self, i: usize) -> PyResult<(String, String)> {
        self.check_index(i)?;
        Ok(self.format_pair(self.inner.pair(i)))
    }

    fn pairs(&self) -> Vec<(String, String)> {
        self.inner.pairs().iter().map(|p| self.format_pair(p)).collect()
    }

    /// A subset `X` with `(X^▼, X^▲)` equal to the `i`-th pair.
    fn generator(&self, i: usize) -> PyResult<String> {
        self.check_index(i)?;
        Ok(self.inner.space().universe().format_subset(self.inner.generator(i)))
    }

    fn index_of(&self, lower: &str, upper: &str) -> PyResult<Option<usize>> {
        let pair = parse_pair(self.inner.space().universe(), lower, upper)?;
        Ok(self.inner.index_of(&pair))
    }

    fn leq(&self, i: usize, j: usize) -> PyResult<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.inner.leq(i, j))
    }

    /// Indices of the exact pairs (`lower == upper`).
    fn exact_indices(&self) -> Vec<usize> {
        self.inner.exact_indices()
    }

    fn is_lattice(&self) -> bool {
        self.inner.lattice_check().is_lattice
    }

    /// Family summary (size, order facts, lattice status) as a JSON string.
    fn section_json(&self) -> PyResult<String> {
        serde_json::to_string(&rl::io::rs_section(&self.inner)).map_err(json_err)
    }

    /// Graphviz rendering of the order diagram.
    fn dot(&self) -> String {
        rl::dot::rs_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "RsFamily(pairs={}, lattice={})",
            self.inner.len(),
            self.inner.lattice_check().is_lattice
        )
    }
}

/// The Dedekind–MacNeille completion `DM(RS)` with its Kleene involution.
#[pyclass(name = "DmLattice")]
struct PyDmLattice {
    inner: rl::DmLattice,
}

impl PyDmLattice {
    fn check_index(&self, i: usize) -> PyResult<()> {
        if i < self.inner.len() {
            Ok(())
        } else {
            Err(PyIndexError::new_err(format!(
                "index {i} out of range for a lattice of {} elements",
                self.inner.len()
            )))
        }
    }

    fn format_pair(&self, pair: &RoughPair) -> (String, String) {
        let u = self.inner.space().universe();
        (u.format_subset(&pair.lower), u.format_subset(&pair.upper))
    }
}

#[pymethods]
impl PyDmLattice {
    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// The `i`-th element as `(lower, upper)` subset strings.
    fn pair(&self, i: usize) -> PyResult<(String, String)> {
        self.check_index(i)?;
        Ok(self.format_pair(self.inner.pair(i)))
    }

    fn pairs(&self) -> Vec<(String, String)> {
        self.inner.pairs().iter().map(|p| self.format_pair(p)).collect()
    }

    fn index_of(&self, lower: &str, upper: &str) -> PyResult<Option<usize>> {
        let pair = parse_pair(self.inner.space().universe(), lower, upper)?;
        Ok(self.inner.index_of(&pair))
    }

    /// Whether element `i` is an approximation pair (as opposed to one of
    /// the elements the completion added).
    fn in_rs(&self, i: usize) -> PyResult<bool> {
        self.check_index(i)?;
        Ok(self.inner.in_rs(i))
    }

    fn leq(&self, i: usize, j: usize) -> PyResult<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.inner.lattice().leq(i, j))
    }

    fn join(&self, i: usize, j: usize) -> PyResult<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.inner.lattice().join(i, j))
    }

    fn meet(&self, i: usize, j: usize) -> PyResult<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.inner.lattice().meet(i, j))
    }

    fn bottom(&self) -> usize {
        self.inner.lattice().bottom()
    }

    fn top(&self) -> usize {
        self.inner.lattice().top()
    }

    /// Hasse-diagram cover pairs `(i, j)` with `i ⋖ j`.
    fn covers(&self) -> Vec<(usize, usize)> {
        self.inner.lattice().covers()
    }

    fn is_distributive(&self) -> bool {
        self.inner.lattice().is_distributive()
    }

    /// The Kleene involution `∼(A,B) = (Bᶜ, Aᶜ)` as an index map.
    fn kleene(&self, i: usize) -> PyResult<usize> {
        self.check_index(i)?;
        Ok(self.inner.neg(i))
    }

    /// Componentwise join formula `((A∪C)^{△▼}, B∪D)`; agrees with `join`.
    fn join_formula(&self, i: usize, j: usize) -> PyResult<(String, String)> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.format_pair(&self.inner.join_formula(i, j)))
    }

    /// Componentwise meet formula `(A∩C, (B∩D)^{▽▲})`; agrees with `meet`.
    fn meet_formula(&self, i: usize, j: usize) -> PyResult<(String, String)> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.format_pair(&self.inner.meet_formula(i, j)))
    }

    /// Indices of the sharp elements (`x ∧ ∼x = 0`).
    fn sharp(&self) -> Vec<usize> {
        sharp_indices(&self.inner)
    }

    /// Indices of the central elements.
    fn center(&self) -> Vec<usize> {
        center(&self.inner)
    }

    /// Per-element analysis (sharpness routes, complements, centrality) as
    /// a JSON string.
    fn element_json(&self, i: usize) -> PyResult<String> {
        self.check_index(i)?;
        serde_json::to_string(&element_analysis(&self.inner, i)).map_err(json_err)
    }

    /// Build a negation from a spec string, e.g. `"trivial"`,
    /// `"pseudocomplement"`, `"from-equivalence:ab|c"`,
    /// `"from-subortholattice:∅:∅|abc:abc"`.
    fn negation(&self, spec: &str) -> PyResult<PyNegation> {
        let neg = rl::io::parse_neg_spec(&self.inner, spec).map_err(value_err)?;
        Ok(PyNegation { inner: neg })
    }

    /// Spec strings of every equivalence whose rough sets extend this
    /// family's order (each yields a negation via `negation`).
    #[pyo3(signature = (cap=None))]
    fn extending_equivalences(&self, cap: Option<usize>) -> PyResult<Vec<String>> {
        let parts = rl::bz::extending_equivalences(self.inner.space(), caps_for(cap).partition)
            .map_err(value_err)?;
        Ok(parts.iter().map(|p| p.spec_string()).collect())
    }

    /// Every paraorthomodular Brouwer–Zadeh negation on the completion.
    #[pyo3(signature = (cap=None))]
    fn pbz_negations(&self, cap: Option<usize>) -> PyResult<Vec<PyNegation>> {
        let structures = rl::bz::enumerate_pbz_structures(&self.inner, caps_for(cap).rs)
            .map_err(value_err)?;
        Ok(structures.into_iter().map(|s| PyNegation { inner: s.neg }).collect())
    }

    /// Axioms BZ1–BZ4, derived laws and verdicts for `neg`, as a JSON string.
    fn bz_json(&self, neg: PyRef<'_, PyNegation>) -> PyResult<String> {
        serde_json::to_string(&check_bz_axioms(&self.inner, &neg.inner)).map_err(json_err)
    }

    fn is_antiortholattice(&self, neg: PyRef<'_, PyNegation>) -> bool {
        is_antiortholattice(&self.inner, &neg.inner)
    }

    /// The possibility operator `◇x = ∼ neg x`.
    fn diamond(&self, neg: PyRef<'_, PyNegation>, i: usize) -> PyResult<usize> {
        self.check_index(i)?;
        Ok(diamond(&neg.inner, i))
    }

    /// The necessity operator `□x = neg ∼x`.
    fn box_op(&self, neg: PyRef<'_, PyNegation>, i: usize) -> PyResult<usize> {
        self.check_index(i)?;
        Ok(box_op(&self.inner, &neg.inner, i))
    }

    /// Pseudocomplement existence, the Stone identity and the composite
    /// `Rᵉ` facts, as a JSON string.
    fn stone_json(&self) -> PyResult<String> {
        serde_json::to_string(&stone_analysis(&self.inner)).map_err(json_err)
    }

    /// Completion summary (size, added elements, global facts) as a JSON
    /// string.
    fn section_json(&self) -> PyResult<String> {
        serde_json::to_string(&rl::io::dm_section(&self.inner)).map_err(json_err)
    }

    /// Graphviz rendering; `target` is `"dm"`, `"center"`, or `"clopen"`
    /// (the latter needs `neg`).
    #[pyo3(signature = (target="dm", neg=None))]
    fn dot(&self, target: &str, neg: Option<PyRef<'_, PyNegation>>) -> PyResult<String> {
        match target {
            "dm" => Ok(rl::dot::dm_dot(&self.inner)),
            "center" => Ok(rl::dot::center_dot(&self.inner)),
            "clopen" => {
                let neg = neg.ok_or_else(|| {
                    PyValueError::new_err("target \"clopen\" needs a negation argument")
                })?;
                Ok(rl::dot::clopen_dot(&self.inner, &neg.inner))
            }
            other => Err(PyValueError::new_err(format!(
                "unknown dot target {other:?} (expected \"dm\", \"center\" or \"clopen\")"
            ))),
        }
    }

    fn __repr__(&self) -> String {
        format!(
            "DmLattice(elements={}, rs={}, distributive={})",
            self.inner.len(),
            self.inner.rs().len(),
            self.inner.lattice().is_distributive()
        )
    }
}

/// A unary negation operator on a completion, stored as an index table.
#[pyclass(name = "Negation")]
struct PyNegation {
    inner: NegOperator,
}

#[pymethods]
impl PyNegation {
    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    fn apply(&self, i: usize) -> PyResult<usize> {
        if i < self.inner.table().len() {
            Ok(self.inner.apply(i))
        } else {
            Err(PyIndexError::new_err(format!(
                "index {i} out of range for a table of {} entries",
                self.inner.table().len()
            )))
        }
    }

    fn __call__(&self, i: usize) -> PyResult<usize> {
        self.apply(i)
    }

    fn table(&self) -> Vec<usize> {
        self.inner.table().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Negation(label={:?}, table={:?})", self.inner.label, self.inner.table())
    }
}

/// Sweep or sample the reflexive relations on `n` elements, running the
/// theorem suite on each; returns the outcome as a JSON string.
///
/// `mode` is `"exhaustive"` (all `2^(n²−n)` relations) or `"sample"`
/// (`count` seeded draws). `filter` restricts to a class:
/// `"tolerance"`, `"quasiorder"`, `"equivalence"`, `"irredundant"`, ...
#[pyfunction]
#[pyo3(signature = (n, mode="exhaustive", count=None, seed=1, filter=None, cap=None))]
fn mine_json(
    n: usize,
    mode: &str,
    count: Option<usize>,
    seed: u64,
    filter: Option<&str>,
    cap: Option<usize>,
) -> PyResult<String> {
    let mode = match mode {
        "exhaustive" => rl::MineMode::Exhaustive,
        "sample" => {
            let count = count.ok_or_else(|| {
                PyValueError::new_err("mode \"sample\" needs a count argument")
            })?;
            rl::MineMode::Sample { count, seed }
        }
        other => Err(PyValueError::new_err(format!(
            "unknown mode {other:?} (expected \"exhaustive\" or \"sample\")"
        )))?,
    };
    let filter = match filter {
        Some(text) => Some(text.parse::<rl::RelationClass>().map_err(value_err)?),
        None => None,
    };
    let config = rl::MineConfig { n, mode, filter };
    let outcome = rl::harness::mine(&config, &caps_for(cap)).map_err(value_err)?;
    serde_json::to_string(&outcome).map_err(json_err)
}

#[pymodule]
fn roughlat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRelation>()?;
    m.add_class::<PyRsFamily>()?;
    m.add_class::<PyDmLattice>()?;
    m.add_class::<PyNegation>()?;
    m.add_function(wrap_pyfunction!(mine_json, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
