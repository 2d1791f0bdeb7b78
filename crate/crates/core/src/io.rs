//! JSON documents for CLI input and output, negation specifications, and
//! plain-text rendering.
//!
//! All serialized output is deterministic: maps are `BTreeMap`s, vectors are
//! emitted in canonical order, and timing never enters the JSON body.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::bz::{neg_from_equivalence, neg_from_subortholattice, star_neg, NegOperator, StoneReport};
use crate::completion::DmLattice;
use crate::harness::{MineOutcome, Status, TheoremSuiteReport};
use crate::kleene::{center_by_neutrality, sharp_indices, ElementAnalysis};
use crate::relation::{Partition, PropertyFlags, Relation};
use crate::rough::{RoughPair, RsFamily};
use crate::universe::Universe;
use crate::{BzReport, Error, Result};

/// JSON description of a relation. The relation is given either as explicit
/// `pairs` (`[["a","b"], ...]`), as `neighborhoods` (`{"a": "ab", ...}` with
/// subset values in the same syntax the CLI prints), or both combined.
/// With `reflexive_closure` set, all loops are added after reading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDocument {
    pub universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighborhoods: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub reflexive_closure: bool,
}

impl RelationDocument {
    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    pub fn to_relation(&self) -> Result<Relation> {
        let universe = Universe::new(self.universe.clone())?;
        let mut rel = Relation::empty(&universe);
        if self.pairs.is_none() && self.neighborhoods.is_none() {
            return Err(Error::Parse(
                "relation document needs \"pairs\" or \"neighborhoods\"".into(),
            ));
        }
        if let Some(pairs) = &self.pairs {
            for (x, y) in pairs {
                rel.set(universe.require_index(x)?, universe.require_index(y)?, true);
            }
        }
        if let Some(neighborhoods) = &self.neighborhoods {
            for (x, spec) in neighborhoods {
                let i = universe.require_index(x)?;
                for j in universe.parse_subset(spec)?.iter_ones() {
                    rel.set(i, j, true);
                }
            }
        }
        Ok(if self.reflexive_closure { rel.reflexive_closure() } else { rel })
    }

    pub fn from_relation(rel: &Relation) -> Self {
        let u = rel.universe();
        RelationDocument {
            universe: u.labels().to_vec(),
            pairs: None,
            neighborhoods: Some(
                (0..rel.size())
                    .map(|i| (u.label(i).to_string(), u.format_subset(rel.row(i))))
                    .collect(),
            ),
            reflexive_closure: false,
        }
    }
}

/// Builds a negation operator on the completion from a textual spec:
///
/// * `trivial` — the two-element subortholattice `{0, 1}`, giving the
///   all-or-nothing negation;
/// * `pseudocomplement` — `¬x` = largest `y` with `x ∧ y = 0`;
/// * `from-equivalence:ab|c` — `(A,B) ↦ (B^c↓, B^c↓)` along the given
///   extending equivalence, written as a partition;
/// * `from-subortholattice:a:ab|bc:abc` — `¬x` = largest element of the given
///   ∼-closed family below `∼x`; entries are `lower:upper` completion
///   elements separated by `|`, with the bounds added automatically.
pub fn parse_neg_spec(dm: &DmLattice, spec: &str) -> Result<NegOperator> {
    let spec = spec.trim();
    if spec == "trivial" {
        let lat = dm.lattice();
        let mut subset = BitVec::new(dm.len());
        subset.set(lat.bottom(), true);
        subset.set(lat.top(), true);
        return neg_from_subortholattice(dm, &subset);
    }
    if spec == "pseudocomplement" {
        return star_neg(dm).ok_or_else(|| {
            Error::Parse("the completion is not pseudocomplemented".into())
        });
    }
    if let Some(rest) = spec.strip_prefix("from-equivalence:") {
        let partition = Partition::from_spec(dm.space().universe(), rest)?;
        return neg_from_equivalence(dm, &partition);
    }
    if let Some(rest) = spec.strip_prefix("from-subortholattice:") {
        let u = dm.space().universe();
        let lat = dm.lattice();
        let mut subset = BitVec::new(dm.len());
        subset.set(lat.bottom(), true);
        subset.set(lat.top(), true);
        for entry in rest.split('|').filter(|e| !e.trim().is_empty()) {
            let (lo, up) = entry.split_once(':').ok_or_else(|| {
                Error::Parse(format!(
                    "subortholattice entry {entry:?} must look like lower:upper"
                ))
            })?;
            let pair = RoughPair::new(u.parse_subset(lo)?, u.parse_subset(up)?);
            let i = dm.index_of(&pair).ok_or_else(|| Error::NotInFamily {
                family: "DM(RS)",
                detail: pair.format(u),
            })?;
            subset.set(i, true);
        }
        return neg_from_subortholattice(dm, &subset);
    }
    Err(Error::Parse(format!(
        "unknown negation spec {spec:?}; expected \"trivial\", \"pseudocomplement\", \
         \"from-equivalence:...\" or \"from-subortholattice:...\""
    )))
}

/// Name and version stamp for report provenance.
#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

/// Relation-level facts: classification, singleton-neighbourhood elements,
/// classes of the equivalence closure.
#[derive(Debug, Clone, Serialize)]
pub struct InfoSection {
    pub universe: Vec<String>,
    pub size: usize,
    pub neighborhoods: BTreeMap<String, String>,
    pub flags: PropertyFlags,
    /// The most specific class the relation belongs to.
    pub class: String,
    /// Elements whose neighbourhood is a singleton.
    pub singleton_neighborhood_elements: String,
    pub equivalence_closure_classes: Vec<String>,
}

pub fn info_section(rel: &Relation) -> Result<InfoSection> {
    let u = rel.universe();
    let flags = rel.classify();
    let class = if flags.equivalence {
        "equivalence"
    } else if flags.quasiorder {
        "quasiorder"
    } else if flags.irredundant_covering_tolerance {
        "irredundant-covering-tolerance"
    } else if flags.tolerance {
        "tolerance"
    } else if flags.reflexive {
        "reflexive"
    } else {
        "not reflexive"
    };
    let singles = BitVec::from_indices(
        rel.size(),
        (0..rel.size()).filter(|&i| rel.row(i).count() == 1),
    );
    let classes = rel.equivalence_closure().equivalence_classes()?;
    Ok(InfoSection {
        universe: u.labels().to_vec(),
        size: rel.size(),
        neighborhoods: (0..rel.size())
            .map(|i| (u.label(i).to_string(), u.format_subset(rel.row(i))))
            .collect(),
        flags,
        class: class.to_string(),
        singleton_neighborhood_elements: u.format_subset(&singles),
        equivalence_closure_classes: classes
            .blocks()
            .iter()
            .map(|b| u.format_subset(b))
            .collect(),
    })
}

/// Verdict of one named `check` run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckSection {
    pub property: String,
    pub status: Status,
    pub detail: String,
}

pub fn status_tag(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Info => "info",
        Status::Skipped => "skip",
    }
}

/// One approximation pair in a family listing.
#[derive(Debug, Clone, Serialize)]
pub struct PairEntry {
    pub index: usize,
    pub lower: String,
    pub upper: String,
    pub exact: bool,
    /// The least subset generating this pair (approximation pairs only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

/// The family of approximation pairs, with its lattice status.
#[derive(Debug, Clone, Serialize)]
pub struct RsSection {
    pub size: usize,
    pub is_lattice: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_failure: Option<String>,
    pub pairs: Vec<PairEntry>,
}

pub fn rs_section(rs: &RsFamily) -> RsSection {
    let u = rs.space().universe();
    let check = rs.lattice_check();
    RsSection {
        size: rs.len(),
        is_lattice: check.is_lattice,
        lattice_failure: check.witness.map(|w| {
            format!(
                "{} and {} have no {}; minimal candidates: {}",
                w.left.format(u),
                w.right.format(u),
                match w.kind {
                    crate::rough::BoundKind::Join => "least upper bound",
                    crate::rough::BoundKind::Meet => "greatest lower bound",
                },
                if w.bounds.is_empty() {
                    "none".to_string()
                } else {
                    w.bounds.iter().map(|p| p.format(u)).collect::<Vec<_>>().join(", ")
                },
            )
        }),
        pairs: (0..rs.len())
            .map(|i| {
                let p = rs.pair(i);
                PairEntry {
                    index: i,
                    lower: u.format_subset(&p.lower),
                    upper: u.format_subset(&p.upper),
                    exact: p.is_exact(),
                    generator: Some(u.format_subset(rs.generator(i))),
                }
            })
            .collect(),
    }
}

/// One completion element with its structural predicates.
#[derive(Debug, Clone, Serialize)]
pub struct DmEntry {
    pub index: usize,
    pub lower: String,
    pub upper: String,
    pub in_rs: bool,
    /// Index of `∼(A,B)`.
    pub kleene: usize,
    pub sharp: bool,
    pub central: bool,
    pub exact: bool,
}

/// The completion as a lattice: elements, Hasse edges, global facts.
#[derive(Debug, Clone, Serialize)]
pub struct DmSection {
    pub size: usize,
    pub rs_size: usize,
    pub added_by_completion: usize,
    pub bottom: usize,
    pub top: usize,
    pub distributive: bool,
    pub elements: Vec<DmEntry>,
    /// Pairs `(i, j)` with `j` covering `i`.
    pub covers: Vec<(usize, usize)>,
}

pub fn dm_section(dm: &DmLattice) -> DmSection {
    let u = dm.space().universe();
    let lat = dm.lattice();
    let sharp = sharp_indices(dm);
    let central = center_by_neutrality(lat);
    DmSection {
        size: dm.len(),
        rs_size: dm.rs().len(),
        added_by_completion: dm.len() - dm.rs().len(),
        bottom: lat.bottom(),
        top: lat.top(),
        distributive: lat.is_distributive(),
        elements: (0..dm.len())
            .map(|i| {
                let p = dm.pair(i);
                DmEntry {
                    index: i,
                    lower: u.format_subset(&p.lower),
                    upper: u.format_subset(&p.upper),
                    in_rs: dm.in_rs(i),
                    kleene: dm.neg(i),
                    sharp: sharp.binary_search(&i).is_ok(),
                    central: central.binary_search(&i).is_ok(),
                    exact: p.is_exact(),
                }
            })
            .collect(),
        covers: lat.covers(),
    }
}

/// The envelope every CLI verb serializes. Sections are present only when
/// the verb produced them; `elapsed_ms` never enters the JSON body, keeping
/// output byte-identical across runs.
#[derive(Debug, Clone, Serialize, Default)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub tool: ToolInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<RelationDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub info: Option<InfoSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rs: Option<RsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dm: Option<DmSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<ElementAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<TheoremSuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bz: Option<Vec<BzReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stone: Option<StoneReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mine: Option<MineOutcome>,
    #[serde(skip)]
    pub elapsed_ms: Option<u128>,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo { name: "roughlat", version: env!("CARGO_PKG_VERSION") }
    }
}

impl ReportDocument {
    pub fn new() -> Self {
        ReportDocument { schema: "roughlat.report.v1", ..Default::default() }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// Human-readable rendering of every present section.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(info) = &self.info {
            out.push_str(&render_info(info));
        }
        if let Some(rs) = &self.rs {
            out.push_str(&render_rs(rs));
        }
        if let Some(dm) = &self.dm {
            out.push_str(&render_dm(dm));
        }
        if let Some(check) = &self.check {
            out.push_str(&format!(
                "check {}: {}  {}\n",
                check.property,
                status_tag(check.status),
                check.detail
            ));
        }
        if let Some(element) = &self.element {
            out.push_str(&render_element(element));
        }
        if let Some(suite) = &self.suite {
            out.push_str(&render_suite(suite));
        }
        if let Some(reports) = &self.bz {
            for report in reports {
                out.push_str(&render_bz(report));
            }
        }
        if let Some(stone) = &self.stone {
            out.push_str(&render_stone(stone));
        }
        if let Some(mine) = &self.mine {
            out.push_str(&render_mine(mine));
        }
        out
    }
}

fn render_info(info: &InfoSection) -> String {
    let mut out = format!(
        "universe: {{{}}} ({} elements)\n",
        info.universe.join(", "),
        info.size
    );
    for (x, row) in &info.neighborhoods {
        out.push_str(&format!("  R({x}) = {row}\n"));
    }
    out.push_str(&format!("class: {}\n", info.class));
    let f = &info.flags;
    out.push_str(&format!(
        "flags: reflexive={} symmetric={} transitive={} left_total={} right_total={}\n",
        f.reflexive, f.symmetric, f.transitive, f.left_total, f.right_total
    ));
    out.push_str(&format!(
        "singleton-neighbourhood elements: {}\n",
        info.singleton_neighborhood_elements
    ));
    out.push_str(&format!(
        "equivalence-closure classes: {}\n",
        info.equivalence_closure_classes.join(" | ")
    ));
    out
}

fn render_rs(rs: &RsSection) -> String {
    let mut out = format!(
        "RS: {} approximation pairs; {}\n",
        rs.size,
        if rs.is_lattice { "forms a lattice" } else { "not a lattice" }
    );
    if let Some(failure) = &rs.lattice_failure {
        out.push_str(&format!("  {failure}\n"));
    }
    for p in &rs.pairs {
        out.push_str(&format!(
            "  [{:>2}] ({},{}){}{}\n",
            p.index,
            p.lower,
            p.upper,
            if p.exact { "  exact" } else { "" },
            match &p.generator {
                Some(g) => format!("  ⟵ {g}"),
                None => String::new(),
            },
        ));
    }
    out
}

fn render_dm(dm: &DmSection) -> String {
    let mut out = format!(
        "DM(RS): {} elements ({} approximation pairs + {} added); distributive={}\n",
        dm.size, dm.rs_size, dm.added_by_completion, dm.distributive
    );
    for e in &dm.elements {
        let mut marks = Vec::new();
        if !e.in_rs {
            marks.push("added");
        }
        if e.sharp {
            marks.push("sharp");
        }
        if e.central {
            marks.push("central");
        }
        if e.exact {
            marks.push("exact");
        }
        out.push_str(&format!(
            "  [{:>2}] ({},{})  ∼→[{}]{}{}\n",
            e.index,
            e.lower,
            e.upper,
            e.kleene,
            if marks.is_empty() { "" } else { "  " },
            marks.join(","),
        ));
    }
    out.push_str("covers: ");
    out.push_str(
        &dm.covers
            .iter()
            .map(|(i, j)| format!("{i}<{j}"))
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.push('\n');
    out
}

fn render_element(e: &ElementAnalysis) -> String {
    let mut out = format!("element [{}] {}\n", e.index, e.pair);
    out.push_str(&format!(
        "  in RS: {}; ∼ = {}; sharp: {}; complemented: {}; neutral: {}; central: {}; \
         exact: {}\n",
        e.in_rs, e.kleene, e.sharp, e.complemented, e.neutral, e.central, e.exact
    ));
    if !e.generators.is_empty() {
        out.push_str(&format!("  generators: {}\n", e.generators.join(", ")));
    }
    if !e.complements.is_empty() {
        out.push_str(&format!("  complements: {}\n", e.complements.join(", ")));
    }
    if let Some(z) = &e.doubly_definable_image {
        out.push_str(&format!("  φ-image: {z}\n"));
    }
    out
}

pub fn render_suite(suite: &TheoremSuiteReport) -> String {
    let mut out = format!(
        "theorem suite on {{{}}}: {} passed, {} failed, {} informational, {} skipped\n",
        suite.universe.join(", "),
        suite.passed,
        suite.failed,
        suite.informational,
        suite.skipped
    );
    for item in &suite.items {
        out.push_str(&format!(
            "  {}  {:<45} {}\n",
            status_tag(item.status),
            item.id,
            item.detail
        ));
    }
    out
}

fn render_bz(report: &BzReport) -> String {
    let mut out = format!("negation {}:\n", report.label);
    let show = |name: &str, w: Option<String>| match w {
        None => format!("  {name}: holds\n"),
        Some(at) => format!("  {name}: FAILS at {at}\n"),
    };
    out.push_str(&show("x ∧ ¬x = 0", report.bz1.map(|i| format!("[{i}]"))));
    out.push_str(&show("x ≤ ¬¬x", report.bz2.map(|i| format!("[{i}]"))));
    out.push_str(&show(
        "x ≤ y ⟹ ¬y ≤ ¬x",
        report.bz3.map(|(i, j)| format!("[{i}] ≤ [{j}]")),
    ));
    out.push_str(&show("∼¬x = ¬¬x", report.bz4.map(|i| format!("[{i}]"))));
    out.push_str(&show("¬x ≤ ∼x", report.neg_below_kleene.map(|i| format!("[{i}]"))));
    out.push_str(&show("¬¬¬x = ¬x", report.triple_negation.map(|i| format!("[{i}]"))));
    out.push_str(&show(
        "¬x, ∼¬x complementary",
        report.neg_complement_pair.map(|i| format!("[{i}]")),
    ));
    out.push_str(&format!(
        "  ¬0 = 1 and ¬1 = 0: {}\n",
        if report.bounds_law { "holds" } else { "FAILS" }
    ));
    out.push_str(&show(
        "¬(x ∨ y) = ¬x ∧ ¬y",
        report.de_morgan_law.map(|(i, j)| format!("[{i}], [{j}]")),
    ));
    out.push_str(&show(
        "¬(x ∧ ∼x) ≤ ¬x ∨ ¬∼x",
        report.star_condition.map(|i| format!("[{i}]")),
    ));
    out.push_str(&format!(
        "  verdict: bz={} pbz={} pbz*={}\n",
        report.is_bz, report.is_pbz, report.is_pbz_star
    ));
    out
}

fn render_stone(stone: &StoneReport) -> String {
    format!(
        "pseudocomplemented: {}\nsatisfies x∗ ∨ x∗∗ = 1: {}\ndistributive: {}\n\
         R;R⁻¹ = equivalence closure: {}\nR⁻¹;R = equivalence closure: {}\n",
        stone.pseudocomplemented,
        stone.stone.map(|b| b.to_string()).unwrap_or_else(|| "n/a".into()),
        stone.distributive,
        stone.r_then_rinv_equals_re,
        stone.rinv_then_r_equals_re,
    )
}

fn render_mine(mine: &MineOutcome) -> String {
    let mut out = format!(
        "mined {} relations on {} elements ({} filtered out, {} checked): {} with failures\n",
        mine.considered,
        mine.universe.len(),
        mine.filtered_out,
        mine.checked,
        mine.failing_relations.len(),
    );
    for (id, count) in &mine.item_failure_counts {
        out.push_str(&format!("  {id}: {count} failing relations\n"));
    }
    for failure in &mine.failing_relations {
        out.push_str(&format!("  relation R(x) = [{}]\n", failure.neighborhoods.join(", ")));
        for item in &failure.items {
            out.push_str(&format!("    FAIL {}: {}\n", item.id, item.detail));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::ApproxSpace;
    use crate::fixtures;
    use crate::Caps;

    fn dm(rel: Relation) -> DmLattice {
        DmLattice::build(&ApproxSpace::new(rel), &Caps::default()).unwrap()
    }

    #[test]
    fn relation_documents_roundtrip() {
        let rel = fixtures::staircase();
        let doc = RelationDocument::from_relation(&rel);
        let json = serde_json::to_string(&doc).unwrap();
        let back = RelationDocument::parse(&json).unwrap().to_relation().unwrap();
        assert_eq!(rel.pairs(), back.pairs());
    }

    #[test]
    fn relation_document_accepts_pairs_and_closure() {
        let doc = RelationDocument::parse(
            r#"{"universe": ["a", "b"], "pairs": [["a", "b"]], "reflexive_closure": true}"#,
        )
        .unwrap();
        let rel = doc.to_relation().unwrap();
        assert!(rel.is_reflexive());
        assert!(rel.contains(0, 1));
        assert!(!rel.contains(1, 0));
    }

    #[test]
    fn relation_document_rejects_empty_and_unknown() {
        let doc = RelationDocument::parse(r#"{"universe": ["a"]}"#).unwrap();
        assert!(matches!(doc.to_relation(), Err(Error::Parse(_))));
        assert!(RelationDocument::parse(r#"{"universe": ["a"], "extra": 1}"#).is_err());
        let doc = RelationDocument::parse(
            r#"{"universe": ["a"], "pairs": [["a", "z"]]}"#,
        )
        .unwrap();
        assert!(matches!(doc.to_relation(), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn neg_specs_cover_all_constructions() {
        let d = dm(fixtures::arrow_quasiorder());
        let trivial = parse_neg_spec(&d, "trivial").unwrap();
        let lat = d.lattice();
        assert_eq!(trivial.apply(lat.bottom()), lat.top());
        assert!((0..d.len())
            .filter(|&i| i != lat.bottom())
            .all(|i| trivial.apply(i) == lat.bottom()));

        let from_eq = parse_neg_spec(&d, "from-equivalence:ab|c").unwrap();
        assert!(from_eq.label.contains("ab|c"));

        let star = parse_neg_spec(&d, "pseudocomplement").unwrap();
        assert_eq!(star.table(), from_eq.table());

        assert!(matches!(
            parse_neg_spec(&d, "frobnicate"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_neg_spec(&d, "from-subortholattice:a:a"),
            Err(Error::NotInFamily { .. })
        ));
    }

    #[test]
    fn subortholattice_spec_builds_the_full_negation() {
        // For the two-block equivalence the exact pairs (ab,ab) and (c,c)
        // together with the bounds form a subortholattice.
        let d = dm(fixtures::two_block_equivalence());
        let neg = parse_neg_spec(&d, "from-subortholattice:ab:ab|c:c").unwrap();
        let report = crate::bz::check_bz_axioms(&d, &neg);
        assert!(report.is_pbz);
    }

    #[test]
    fn report_document_renders_and_serializes_deterministically() {
        let rel = fixtures::staircase();
        let d = dm(rel.clone());
        let mut doc = ReportDocument::new();
        doc.input = Some(RelationDocument::from_relation(&rel));
        doc.info = Some(info_section(&rel).unwrap());
        doc.rs = Some(rs_section(d.rs()));
        doc.dm = Some(dm_section(&d));
        doc.elapsed_ms = Some(12345);
        let a = doc.to_json().unwrap();
        let b = doc.to_json().unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("12345"), "timing must not enter the JSON body");
        assert!(a.ends_with('\n'));
        let text = doc.render_text();
        assert!(text.contains("class: reflexive"));
        assert!(text.contains("DM(RS): 8 elements"));
    }

    #[test]
    fn info_section_classifies_fixtures() {
        assert_eq!(info_section(&fixtures::staircase()).unwrap().class, "reflexive");
        assert_eq!(info_section(&fixtures::arrow_quasiorder()).unwrap().class, "quasiorder");
        assert_eq!(
            info_section(&fixtures::two_block_equivalence()).unwrap().class,
            "equivalence"
        );
        // The middle pairs of the path lie in no block neighbourhood, so it
        // is not induced by an irredundant covering.
        let path = info_section(&fixtures::path_tolerance()).unwrap();
        assert_eq!(path.class, "tolerance");
        assert_eq!(path.equivalence_closure_classes, vec!["12345"]);
    }
}
