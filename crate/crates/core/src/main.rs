//! Command-line interface.
//!
//! Verbs: `info`, `rs`, `dm`, `check`, `dot`, `mine`. Input is a JSON
//! relation document; output is a JSON report or a plain-text rendering
//! (`--format`), written to stdout or `--out`. Exit codes: 0 when every
//! requested check passes, 1 when a checked law fails on the instance,
//! 2 on usage or parse errors, 3 when an enumeration cap is exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use roughlat::approx::ApproxSpace;
use roughlat::bz::{check_bz_axioms, is_antiortholattice, stone_analysis};
use roughlat::completion::DmLattice;
use roughlat::dot::{center_dot, clopen_dot, dm_dot, rs_dot, DotTarget};
use roughlat::harness::{mine, run_theorem_suite, MineConfig, MineMode, Status};
use roughlat::io::{
    dm_section, info_section, parse_neg_spec, rs_section, CheckSection, RelationDocument,
    ReportDocument,
};
use roughlat::kleene::{
    center_by_definable_split, center_by_neutrality, center_by_split, chajda_identity_witness,
    chajda_sides, element_analysis, paraorthomodular_witness, pseudo_kleene_witness,
    sharp_by_kleene_complement, sharp_criterion,
};
use roughlat::relation::{Relation, RelationClass};
use roughlat::rough::{RoughPair, RsFamily};
use roughlat::{Caps, Error, Result};

#[derive(Parser)]
#[command(name = "roughlat", version, about = "Approximation pairs of a finite relation, their lattice completion, and the negations it carries", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Replace the universe-size caps (family and partition enumeration).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a relation and print its neighbourhoods.
    Info {
        /// Relation document (JSON).
        file: PathBuf,
    },
    /// Enumerate the family of approximation pairs.
    Rs {
        /// Relation document (JSON).
        file: PathBuf,
    },
    /// Build the completion of the approximation-pair family.
    Dm {
        /// Relation document (JSON).
        file: PathBuf,
    },
    /// Verify a named property on one instance.
    Check {
        /// Relation document (JSON).
        file: PathBuf,
        /// Property to check.
        #[arg(value_enum)]
        property: Property,
        /// Negation constructor: `trivial`, `pseudocomplement`,
        /// `from-equivalence:<partition>`, or
        /// `from-subortholattice:<lower:upper|...>`.
        #[arg(long)]
        neg: Option<String>,
        /// Also analyze one completion element, written `lower:upper`.
        #[arg(long)]
        element: Option<String>,
    },
    /// Export a Hasse diagram as Graphviz DOT text.
    Dot {
        /// Relation document (JSON).
        file: PathBuf,
        /// Which diagram: rs, dm, center, or clopen.
        #[arg(long, default_value = "dm")]
        target: String,
        /// Negation constructor (required for the clopen target).
        #[arg(long)]
        neg: Option<String>,
    },
    /// Sweep reflexive relations on a small universe through the full suite.
    Mine {
        /// Universe size.
        #[arg(long)]
        n: usize,
        /// Check every reflexive relation.
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Check this many seeded random relations instead.
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for `--sample`.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Restrict to one class: reflexive, tolerance, quasiorder,
        /// equivalence, or irredundant-covering-tolerance.
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    /// The normality law `x ∧ ∼x ≤ y ∨ ∼y`.
    PseudoKleene,
    /// `x ≤ y` and `∼x ∧ y = 0` force `x = y`.
    Paraorthomodular,
    /// Sharpness: criterion, complement law, and complemented-ness agree.
    Sharp,
    /// The center, computed three independent ways.
    Central,
    /// The identity `x ∧ (∼x ∨ y) = (x ∧ ∼x) ∨ (x ∧ y)` (informational).
    Chajda,
    /// Axioms for a second negation supplied via --neg.
    Bz,
    /// Those axioms plus paraorthomodularity.
    Pbz,
    /// The interplay law `¬(x ∧ ∼x) ≤ ¬x ∨ ¬∼x` on top of the axioms.
    PbzStar,
    /// Pseudocomplements, the identity `x∗ ∨ x∗∗ = 1`, and composite orders.
    Stone,
    /// Whether --neg is the all-or-nothing negation and the axioms hold.
    Antiortholattice,
    /// Every theorem in the suite.
    Suite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(found_violation) => {
            eprintln!("elapsed: {} ms", started.elapsed().as_millis());
            if found_violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn caps_of(cli: &Cli) -> Caps {
    match cli.cap {
        Some(n) => Caps::default().with_universe_cap(n),
        None => Caps::default(),
    }
}

fn load(file: &Path) -> Result<(RelationDocument, Relation)> {
    let text = fs::read_to_string(file)?;
    let doc = RelationDocument::parse(&text)?;
    let rel = doc.to_relation()?;
    Ok((doc, rel))
}

fn emit(cli: &Cli, text: String) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_report(cli: &Cli, report: &ReportDocument) -> Result<()> {
    let text = match cli.format {
        Format::Json => report.to_json()?,
        Format::Text => report.render_text(),
    };
    emit(cli, text)
}

/// Runs the selected verb; `Ok(true)` means a checked law failed.
fn run(cli: &Cli) -> Result<bool> {
    let caps = caps_of(cli);
    match &cli.command {
        Command::Info { file } => {
            let (doc, rel) = load(file)?;
            let mut report = ReportDocument::new();
            report.input = Some(doc);
            report.info = Some(info_section(&rel)?);
            emit_report(cli, &report)?;
            Ok(false)
        }
        Command::Rs { file } => {
            let (doc, rel) = load(file)?;
            let space = ApproxSpace::new(rel.clone());
            let rs = RsFamily::build(&space, caps.rs)?;
            let mut report = ReportDocument::new();
            report.input = Some(doc);
            report.info = Some(info_section(&rel)?);
            report.rs = Some(rs_section(&rs));
            emit_report(cli, &report)?;
            Ok(false)
        }
        Command::Dm { file } => {
            let (doc, rel) = load(file)?;
            let dm = DmLattice::build(&ApproxSpace::new(rel.clone()), &caps)?;
            let mut report = ReportDocument::new();
            report.input = Some(doc);
            report.info = Some(info_section(&rel)?);
            report.rs = Some(rs_section(dm.rs()));
            report.dm = Some(dm_section(&dm));
            emit_report(cli, &report)?;
            Ok(false)
        }
        Command::Check { file, property, neg, element } => {
            let (doc, rel) = load(file)?;
            let mut report = ReportDocument::new();
            report.input = Some(doc);
            report.info = Some(info_section(&rel)?);
            let violation =
                run_check(&rel, *property, neg.as_deref(), element.as_deref(), &caps, &mut report)?;
            emit_report(cli, &report)?;
            Ok(violation)
        }
        Command::Dot { file, target, neg } => {
            let (_, rel) = load(file)?;
            let target = DotTarget::from_str(target)?;
            let text = match target {
                DotTarget::Rs => {
                    let space = ApproxSpace::new(rel);
                    rs_dot(&RsFamily::build(&space, caps.rs)?)
                }
                DotTarget::Dm => dm_dot(&DmLattice::build(&ApproxSpace::new(rel), &caps)?),
                DotTarget::Center => {
                    center_dot(&DmLattice::build(&ApproxSpace::new(rel), &caps)?)
                }
                DotTarget::Clopen => {
                    let dm = DmLattice::build(&ApproxSpace::new(rel), &caps)?;
                    let spec = neg.as_deref().ok_or_else(|| {
                        Error::Parse("the clopen diagram needs --neg".into())
                    })?;
                    let neg = parse_neg_spec(&dm, spec)?;
                    clopen_dot(&dm, &neg)
                }
            };
            emit(cli, text)?;
            Ok(false)
        }
        Command::Mine { n, exhaustive, sample, seed, filter } => {
            let mode = match (exhaustive, sample) {
                (true, _) => MineMode::Exhaustive,
                (false, Some(count)) => MineMode::Sample { count: *count, seed: *seed },
                (false, None) => {
                    return Err(Error::Parse(
                        "mine needs either --exhaustive or --sample <COUNT>".into(),
                    ))
                }
            };
            let filter = filter.as_deref().map(RelationClass::from_str).transpose()?;
            let config = MineConfig { n: *n, mode, filter };
            let outcome = mine(&config, &caps)?;
            let violation = !outcome.failing_relations.is_empty();
            let mut report = ReportDocument::new();
            report.mine = Some(outcome);
            emit_report(cli, &report)?;
            Ok(violation)
        }
    }
}

/// Runs one named property check, filling the relevant report sections.
fn run_check(
    rel: &Relation,
    property: Property,
    neg_spec: Option<&str>,
    element_spec: Option<&str>,
    caps: &Caps,
    report: &mut ReportDocument,
) -> Result<bool> {
    if let Property::Suite = property {
        let suite = run_theorem_suite(rel, caps)?;
        let violation = suite.has_failures();
        report.check = Some(CheckSection {
            property: "suite".into(),
            status: if violation { Status::Fail } else { Status::Pass },
            detail: format!(
                "{} passed, {} failed, {} informational, {} skipped",
                suite.passed, suite.failed, suite.informational, suite.skipped
            ),
        });
        report.suite = Some(suite);
        return Ok(violation);
    }

    let dm = DmLattice::build(&ApproxSpace::new(rel.clone()), caps)?;
    let u = dm.space().universe().clone();
    let lat = dm.lattice();
    let inv = dm.kleene();
    let fmt = |i: usize| dm.pair(i).format(&u);
    let fmt_list = |ids: &[usize]| {
        ids.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", ")
    };

    if let Some(spec) = element_spec {
        let (lo, up) = spec.split_once(':').ok_or_else(|| {
            Error::Parse(format!("element spec {spec:?} must look like lower:upper"))
        })?;
        let pair = RoughPair::new(u.parse_subset(lo)?, u.parse_subset(up)?);
        let i = dm.index_of(&pair).ok_or_else(|| Error::NotInFamily {
            family: "DM(RS)",
            detail: pair.format(&u),
        })?;
        report.element = Some(element_analysis(&dm, i));
    }

    let needs_neg = || {
        neg_spec.ok_or_else(|| {
            Error::Parse("this property needs --neg <SPEC> to build the second negation".into())
        })
    };

    let (status, detail) = match property {
        Property::Suite => unreachable!("handled above"),
        Property::PseudoKleene => match pseudo_kleene_witness(lat, inv) {
            None => (Status::Pass, "x ∧ ∼x ≤ y ∨ ∼y for all x, y".to_string()),
            Some((x, y)) => (
                Status::Fail,
                format!("x ∧ ∼x ≰ y ∨ ∼y at x = {}, y = {}", fmt(x), fmt(y)),
            ),
        },
        Property::Paraorthomodular => match paraorthomodular_witness(lat, inv) {
            None => (
                Status::Pass,
                "x ≤ y and ∼x ∧ y = 0 imply x = y for all x, y".to_string(),
            ),
            Some((x, y)) => (
                Status::Fail,
                format!("x ≤ y, ∼x ∧ y = 0, x ≠ y at x = {}, y = {}", fmt(x), fmt(y)),
            ),
        },
        Property::Sharp => {
            let mut sharp = Vec::new();
            let mut mismatch = None;
            for i in 0..dm.len() {
                let by_criterion = sharp_criterion(dm.space(), dm.pair(i));
                let by_negation = sharp_by_kleene_complement(&dm, i);
                let by_complement = !lat.complements_of(i).is_empty();
                if by_criterion != by_negation || by_negation != by_complement {
                    mismatch = Some(format!(
                        "{}: criterion {}, x ∧ ∼x = 0 ∧ x ∨ ∼x = 1 {}, complemented {}",
                        fmt(i), by_criterion, by_negation, by_complement
                    ));
                    break;
                }
                if by_criterion {
                    sharp.push(i);
                }
            }
            match mismatch {
                Some(detail) => (Status::Fail, detail),
                None => (
                    Status::Pass,
                    format!(
                        "the three sharpness routes agree; sharp elements: {}",
                        fmt_list(&sharp)
                    ),
                ),
            }
        }
        Property::Central => {
            let by_neutrality = center_by_neutrality(lat);
            let by_split = center_by_split(lat, inv);
            let by_sets = center_by_definable_split(&dm, caps.rs)?;
            if by_neutrality == by_split && by_split == by_sets {
                (
                    Status::Pass,
                    format!(
                        "the three center routes agree; central elements: {}",
                        fmt_list(&by_neutrality)
                    ),
                )
            } else {
                (
                    Status::Fail,
                    format!(
                        "center routes disagree: neutrality {{{}}}, splitting {{{}}}, \
                         set-splitting {{{}}}",
                        fmt_list(&by_neutrality),
                        fmt_list(&by_split),
                        fmt_list(&by_sets)
                    ),
                )
            }
        }
        Property::Chajda => match chajda_identity_witness(lat, inv) {
            None => (
                Status::Pass,
                "x ∧ (∼x ∨ y) = (x ∧ ∼x) ∨ (x ∧ y) for all x, y".to_string(),
            ),
            Some((x, y)) => {
                let (lhs, rhs) = chajda_sides(lat, inv, x, y);
                (
                    Status::Info,
                    format!(
                        "identity fails (as it may): at x = {}, y = {} the sides are \
                         x ∧ (∼x ∨ y) = {} and (x ∧ ∼x) ∨ (x ∧ y) = {}",
                        fmt(x), fmt(y), fmt(lhs), fmt(rhs)
                    ),
                )
            }
        },
        Property::Bz | Property::Pbz | Property::PbzStar | Property::Antiortholattice => {
            let neg = parse_neg_spec(&dm, needs_neg()?)?;
            let bz = check_bz_axioms(&dm, &neg);
            let all_or_nothing = is_antiortholattice(&dm, &neg);
            let outcome = match property {
                Property::Bz => (
                    bz.is_bz,
                    format!("axioms and derived laws for ¬ = {}: {}", neg.label, bz.is_bz),
                ),
                Property::Pbz => (
                    bz.is_pbz,
                    format!(
                        "axioms hold: {}; lattice paraorthomodular: {}",
                        bz.is_bz,
                        bz.paraorthomodular.is_none()
                    ),
                ),
                Property::PbzStar => (
                    bz.is_pbz_star,
                    format!(
                        "axioms hold: {}; ¬(x ∧ ∼x) ≤ ¬x ∨ ¬∼x: {}; all-or-nothing ¬: {}",
                        bz.is_pbz,
                        bz.star_condition.is_none(),
                        all_or_nothing
                    ),
                ),
                Property::Antiortholattice => {
                    let full_closure = {
                        let e = rel.equivalence_closure();
                        (0..rel.size()).all(|i| e.row(i).count() == rel.size())
                    };
                    (
                        all_or_nothing && bz.is_pbz_star,
                        format!(
                            "¬ is all-or-nothing: {}; axioms + interplay law: {}; \
                             equivalence closure is all of U×U: {}",
                            all_or_nothing, bz.is_pbz_star, full_closure
                        ),
                    )
                }
                _ => unreachable!(),
            };
            report.bz = Some(vec![bz]);
            (
                if outcome.0 { Status::Pass } else { Status::Fail },
                outcome.1,
            )
        }
        Property::Stone => {
            let stone = stone_analysis(&dm);
            let ok = stone.pseudocomplemented && stone.stone == Some(true);
            let detail = format!(
                "pseudocomplemented: {}; x∗ ∨ x∗∗ = 1: {}; distributive: {}",
                stone.pseudocomplemented,
                stone.stone.map(|b| b.to_string()).unwrap_or_else(|| "n/a".into()),
                stone.distributive
            );
            report.stone = Some(stone);
            (if ok { Status::Pass } else { Status::Fail }, detail)
        }
    };

    let violation = status == Status::Fail;
    report.check = Some(CheckSection {
        property: match property {
            Property::PseudoKleene => "pseudo-kleene",
            Property::Paraorthomodular => "paraorthomodular",
            Property::Sharp => "sharp",
            Property::Central => "central",
            Property::Chajda => "chajda",
            Property::Bz => "bz",
            Property::Pbz => "pbz",
            Property::PbzStar => "pbz-star",
            Property::Stone => "stone",
            Property::Antiortholattice => "antiortholattice",
            Property::Suite => "suite",
        }
        .into(),
        status,
        detail,
    });
    Ok(violation)
}
