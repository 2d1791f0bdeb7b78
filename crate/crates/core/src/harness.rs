//! The theorem suite and the counterexample miner.
//!
//! [`run_theorem_suite`] checks, on one concrete reflexive relation, every
//! algebraic law this crate knows about, and reports one verdict per named
//! item. Items whose hypotheses the relation does not meet are reported as
//! skipped; purely observational items (laws known to fail in general) are
//! reported as informational. [`mine`] runs the suite over all reflexive
//! relations on a small universe — or a seeded random sample of them — and
//! collects every relation on which some item fails.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::approx::{ApproxSpace, Bound, Direction};
use crate::bits::BitVec;
use crate::bz::{
    self, check_bz_axioms, extending_equivalences, is_antiortholattice, neg_from_equivalence,
    star_neg, star_set_condition, stone_analysis, NegOperator, PbzStructure,
};
use crate::completion::{dm_vs_oracle, DmLattice};
use crate::kleene::{
    center_by_definable_split, center_by_neutrality, center_by_split, chajda_identity_witness,
    chajda_sides, kleene_poset_witness, paraorthomodular_witness, phi, pseudo_kleene_witness, psi,
    sharp_by_kleene_complement, sharp_criterion, sharp_subortholattices,
};
use crate::relation::{Partition, PropertyFlags, Relation, RelationClass};
use crate::rough::{RoughPair, RsFamily};
use crate::universe::Universe;
use crate::{Caps, Error, Result};

/// Verdict for one suite item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// The law was checked on this instance and holds.
    Pass,
    /// The law was checked on this instance and a violation was found.
    Fail,
    /// An observation, not a law: recorded, never counted as a failure.
    Info,
    /// The item's hypotheses do not apply (or a cap prevented the check).
    Skipped,
}

/// One named check with its verdict and a human-readable account.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ItemReport {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

/// Every item the suite emits, in emission order. The suite always reports
/// exactly these ids; a missing or extra id is a bug.
pub const REQUIRED_ITEMS: &[&str] = &[
    "approximation_galois_duality",
    "rs_pseudo_kleene_poset",
    "rs_lattice_status",
    "dm_kleene_involution",
    "dm_join_meet_tables",
    "dm_vs_macneille_oracle",
    "dm_pseudo_kleene",
    "dm_paraorthomodular",
    "chajda_identity",
    "sharp_three_way",
    "unique_complement_is_kleene",
    "c_family_in_rs",
    "a_family_complement_closed",
    "a_family_fixpoint_characterization",
    "a_family_pseudo_kleene_poset",
    "sharp_pairs_are_a_family_images",
    "sharp_pairs_swapped_form",
    "phi_psi_inverse_isomorphisms",
    "sharp_sublattice_transfer",
    "c_subsets_boolean",
    "center_characterizations_agree",
    "central_implies_lower_determined",
    "exact_five_way",
    "fixpoint_transfer",
    "exact_implies_central",
    "exact_iff_saturated_re",
    "exact_boolean_sublattice",
    "exact_same_under_r_rinv_re",
    "exact_equals_center_intersection",
    "tolerance_center_equals_exact",
    "quasiorder_collapse",
    "irredundant_tolerance_collapse",
    "quasiorder_rs_membership",
    "dm_equals_rs_when_quasiorder_or_irredundant",
    "subortholattice_negations_are_pbz",
    "bz_derived_laws",
    "box_diamond_laws",
    "closure_operator_facts",
    "clopen_family_routes",
    "clopen_subortholattice",
    "brouwer_sharp_chain",
    "correspondence_roundtrip",
    "extending_equivalence_approximations",
    "extending_equivalence_negations_are_pbz",
    "equivalence_rs_kleene_stone_pbz_star",
    "kleene_stone_pbz_star",
    "pbz_negations_match_extending_equivalences",
    "quasiorder_pbz_star_iff_re",
    "star_set_condition_agreement",
    "antiortholattice_iff_full_re",
    "stone_composite_orders",
];

/// Full result of running the suite on one relation.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremSuiteReport {
    pub universe: Vec<String>,
    /// `R(x)` for each element, in universe order.
    pub neighborhoods: Vec<String>,
    pub flags: PropertyFlags,
    pub rs_size: usize,
    pub dm_size: usize,
    /// Elements of the completion that are not approximation pairs.
    pub added_by_completion: usize,
    pub items: Vec<ItemReport>,
    pub passed: usize,
    pub failed: usize,
    pub informational: usize,
    pub skipped: usize,
}

impl TheoremSuiteReport {
    pub fn item(&self, id: &str) -> Option<&ItemReport> {
        self.items.iter().find(|it| it.id == id)
    }

    pub fn failures(&self) -> Vec<&ItemReport> {
        self.items.iter().filter(|it| it.status == Status::Fail).collect()
    }

    pub fn has_failures(&self) -> bool {
        self.items.iter().any(|it| it.status == Status::Fail)
    }
}

/// All reflexive relations on `{0..n}`, as an iterator in counting order over
/// the `n² − n` off-diagonal membership bits (row-major).
pub fn enumerate_reflexive_relations(n: usize) -> Result<impl Iterator<Item = Relation>> {
    let universe = Universe::letters(n);
    let bits = n * n - n;
    if bits >= 63 {
        return Err(Error::CapExceeded {
            what: "reflexive-relation enumeration",
            required: n,
            cap: 8,
        });
    }
    Ok((0u64..1 << bits).map(move |word| relation_from_word(&universe, word)))
}

/// Decodes `word` as the off-diagonal bits of a reflexive relation,
/// row-major. Inverse of the encoding used by [`enumerate_reflexive_relations`].
pub fn relation_from_word(universe: &Arc<Universe>, word: u64) -> Relation {
    let n = universe.size();
    let mut rows = Vec::with_capacity(n);
    let mut k = 0;
    for i in 0..n {
        let mut row = BitVec::new(n);
        for j in 0..n {
            if i == j {
                row.set(j, true);
            } else {
                row.set(j, word >> k & 1 == 1);
                k += 1;
            }
        }
        rows.push(row);
    }
    Relation::from_rows(universe, rows).expect("rows built over the same universe")
}

fn word_of(x: &BitVec) -> u64 {
    x.iter_ones().fold(0u64, |acc, i| acc | 1u64 << i)
}

/// Precomputed approximation tables over all `2^n` subsets, indexed by the
/// subset's counting-order word.
struct OpTables {
    subsets: Vec<BitVec>,
    low_f: Vec<BitVec>,
    up_f: Vec<BitVec>,
    low_i: Vec<BitVec>,
    up_i: Vec<BitVec>,
}

impl OpTables {
    fn new(space: &ApproxSpace) -> Self {
        let n = space.size();
        let subsets: Vec<BitVec> = (0u64..1 << n).map(|w| BitVec::from_word(n, w)).collect();
        OpTables {
            low_f: subsets.iter().map(|x| space.lower(x, Direction::Forward)).collect(),
            up_f: subsets.iter().map(|x| space.upper(x, Direction::Forward)).collect(),
            low_i: subsets.iter().map(|x| space.lower(x, Direction::Inverse)).collect(),
            up_i: subsets.iter().map(|x| space.upper(x, Direction::Inverse)).collect(),
            subsets,
        }
    }
}

/// Negations gathered for the Brouwer–Zadeh items: every paraorthomodular
/// structure from the orthopartition enumeration, and every negation built
/// from an extending equivalence. `None` means the enumeration hit a cap.
struct NegationPool {
    structures: Option<Vec<PbzStructure>>,
    equivalences: Option<Vec<(Partition, NegOperator)>>,
}

impl NegationPool {
    /// Every available negation operator, subortholattice-derived first.
    fn all(&self) -> Vec<&NegOperator> {
        let mut out: Vec<&NegOperator> = Vec::new();
        if let Some(s) = &self.structures {
            out.extend(s.iter().map(|st| &st.neg));
        }
        if let Some(e) = &self.equivalences {
            out.extend(e.iter().map(|(_, n)| n));
        }
        out
    }
}

/// How many ∼-orbits of sharp elements the subset-sweeping items are willing
/// to enumerate exhaustively (`2^k` subsets).
const ORBIT_SWEEP_LIMIT: usize = 12;

/// Runs every suite item against one reflexive relation.
pub fn run_theorem_suite(relation: &Relation, caps: &Caps) -> Result<TheoremSuiteReport> {
    if let Some(i) = (0..relation.size()).find(|&i| !relation.contains(i, i)) {
        return Err(Error::NotReflexive(relation.universe().label(i).to_string()));
    }
    let space = ApproxSpace::new(relation.clone());
    let u = space.universe().clone();
    let n = u.size();
    let flags = relation.classify();
    let dm = DmLattice::build(&space, caps)?;
    let rs = dm.rs();
    let lat = dm.lattice();
    let ops = OpTables::new(&space);

    let fmt = |i: usize| dm.pair(i).format(&u);
    let fmts = |x: &BitVec| u.format_subset(x);

    let mut items: Vec<ItemReport> = Vec::with_capacity(REQUIRED_ITEMS.len());
    let push = |items: &mut Vec<ItemReport>, id: &str, status: Status, detail: String| {
        items.push(ItemReport { id: id.to_string(), status, detail });
    };
    let verdict = |witness: Option<String>, ok_detail: &str| match witness {
        None => (Status::Pass, ok_detail.to_string()),
        Some(w) => (Status::Fail, w),
    };

    // --- approximation_galois_duality ------------------------------------
    {
        let mut witness = None;
        'dual: for (w, x) in ops.subsets.iter().enumerate() {
            let xc = x.complement();
            let wc = word_of(&xc) as usize;
            for (low, up, name) in [
                (&ops.low_f, &ops.up_f, "R"),
                (&ops.low_i, &ops.up_i, "R⁻¹"),
            ] {
                if low[w].complement() != up[wc] {
                    witness = Some(format!(
                        "duality fails over {} at X={}: (lower X)ᶜ={} but upper(Xᶜ)={}",
                        name,
                        fmts(x),
                        fmts(&low[w].complement()),
                        fmts(&up[wc]),
                    ));
                    break 'dual;
                }
            }
        }
        if witness.is_none() {
            'galois: for (wx, x) in ops.subsets.iter().enumerate() {
                for (wy, y) in ops.subsets.iter().enumerate() {
                    let fwd = ops.up_f[wx].is_subset(y) != x.is_subset(&ops.low_i[wy]);
                    let inv = ops.up_i[wx].is_subset(y) != x.is_subset(&ops.low_f[wy]);
                    if fwd || inv {
                        witness = Some(format!(
                            "adjunction fails at X={}, Y={} ({})",
                            fmts(x),
                            fmts(y),
                            if fwd { "X^▲ ⊆ Y vs X ⊆ Y^▽" } else { "X^△ ⊆ Y vs X ⊆ Y^▼" },
                        ));
                        break 'galois;
                    }
                }
            }
        }
        let (s, d) = verdict(
            witness,
            "complementation swaps lower and upper approximations, and both \
             upper/lower pairs are adjoint",
        );
        push(&mut items, "approximation_galois_duality", s, d);
    }

    // --- rs_pseudo_kleene_poset -------------------------------------------
    {
        let mut kleene_in_rs = Vec::with_capacity(rs.len());
        for i in 0..rs.len() {
            match rs.index_of(&rs.pair(i).kleene()) {
                Some(k) => kleene_in_rs.push(k),
                None => {
                    return Err(Error::CharacterizationDisagreement(format!(
                        "the Kleene negation of {} is not an approximation pair",
                        rs.pair(i).format(&u)
                    )))
                }
            }
        }
        let w = kleene_poset_witness(rs.len(), |i, j| rs.leq(i, j), |i| kleene_in_rs[i]);
        let (s, d) = verdict(
            w.map(|(x, y, l, m)| {
                format!(
                    "normality fails: {} ≤ both {} and its negation, {} ≥ both {} and its \
                     negation, yet the lower bound is not below the upper bound",
                    rs.pair(l).format(&u),
                    rs.pair(x).format(&u),
                    rs.pair(m).format(&u),
                    rs.pair(y).format(&u),
                )
            }),
            "the approximation pairs with ∼ form a pseudo-Kleene poset",
        );
        push(&mut items, "rs_pseudo_kleene_poset", s, d);
    }

    // --- rs_lattice_status (informational) --------------------------------
    {
        let check = rs.lattice_check();
        let detail = match &check.witness {
            None => format!("the {} approximation pairs form a lattice", rs.len()),
            Some(wit) => format!(
                "not a lattice: {} and {} have no least upper / greatest lower bound; \
                 minimal candidates are {}",
                wit.left.format(&u),
                wit.right.format(&u),
                wit.bounds.iter().map(|b| b.format(&u)).collect::<Vec<_>>().join(", "),
            ),
        };
        push(&mut items, "rs_lattice_status", Status::Info, detail);
    }

    // --- dm_kleene_involution ----------------------------------------------
    {
        let mut witness = None;
        for i in 0..dm.len() {
            let p = dm.pair(i);
            let expected = RoughPair::new(p.upper.complement(), p.lower.complement());
            if dm.pair(dm.neg(i)) != &expected {
                witness = Some(format!(
                    "∼{} should be ({},{})",
                    fmt(i),
                    fmts(&expected.lower),
                    fmts(&expected.upper)
                ));
                break;
            }
            if dm.neg(dm.neg(i)) != i {
                witness = Some(format!("∼∼{} ≠ {}", fmt(i), fmt(i)));
                break;
            }
        }
        if witness.is_none() {
            'anti: for i in 0..dm.len() {
                for j in lat.up_set(i).iter_ones() {
                    if !lat.leq(dm.neg(j), dm.neg(i)) {
                        witness =
                            Some(format!("∼ is not antitone at {} ≤ {}", fmt(i), fmt(j)));
                        break 'anti;
                    }
                }
            }
        }
        let (s, d) = verdict(
            witness,
            "(A,B) ↦ (Bᶜ,Aᶜ) is an antitone involution on the completion",
        );
        push(&mut items, "dm_kleene_involution", s, d);
    }

    // --- dm_join_meet_tables ------------------------------------------------
    {
        let mut witness = None;
        'tables: for i in 0..dm.len() {
            for j in 0..dm.len() {
                let join = dm.join_formula(i, j);
                if &join != dm.pair(lat.join(i, j)) {
                    witness = Some(format!(
                        "join formula ((A∪C)^{{△▼}}, B∪D) gives ({},{}) at {} ∨ {}, \
                         but the least upper bound is {}",
                        fmts(&join.lower),
                        fmts(&join.upper),
                        fmt(i),
                        fmt(j),
                        fmt(lat.join(i, j)),
                    ));
                    break 'tables;
                }
                let meet = dm.meet_formula(i, j);
                if &meet != dm.pair(lat.meet(i, j)) {
                    witness = Some(format!(
                        "meet formula (A∩C, (B∩D)^{{▽▲}}) gives ({},{}) at {} ∧ {}, \
                         but the greatest lower bound is {}",
                        fmts(&meet.lower),
                        fmts(&meet.upper),
                        fmt(i),
                        fmt(j),
                        fmt(lat.meet(i, j)),
                    ));
                    break 'tables;
                }
            }
        }
        let (s, d) = verdict(
            witness,
            "the closed-form join and meet agree with the order-theoretic \
             least upper and greatest lower bounds",
        );
        push(&mut items, "dm_join_meet_tables", s, d);
    }

    // --- dm_vs_macneille_oracle ----------------------------------------------
    {
        let (s, d) = match dm_vs_oracle(&dm, caps.oracle) {
            Ok(Some(_)) => (
                Status::Pass,
                format!(
                    "the completion ({} elements, {} added) is isomorphic to the \
                     cut completion of the pair family by an isomorphism fixing \
                     every approximation pair",
                    dm.len(),
                    dm.len() - rs.len(),
                ),
            ),
            Ok(None) => (
                Status::Fail,
                "no isomorphism onto the cut completion fixes the approximation pairs"
                    .to_string(),
            ),
            Err(Error::CapExceeded { what, required, cap }) => (
                Status::Skipped,
                format!("{what} needs {required} but the cap is {cap}"),
            ),
            Err(e) => return Err(e),
        };
        push(&mut items, "dm_vs_macneille_oracle", s, d);
    }

    // --- dm_pseudo_kleene ------------------------------------------------------
    {
        let w = pseudo_kleene_witness(lat, dm.kleene());
        let (s, d) = verdict(
            w.map(|(x, y)| {
                format!("x ∧ ∼x ≰ y ∨ ∼y at x={}, y={}", fmt(x), fmt(y))
            }),
            "x ∧ ∼x ≤ y ∨ ∼y throughout the completion",
        );
        push(&mut items, "dm_pseudo_kleene", s, d);
    }

    // --- dm_paraorthomodular -----------------------------------------------------
    {
        let w = paraorthomodular_witness(lat, dm.kleene());
        let (s, d) = verdict(
            w.map(|(x, y)| {
                format!(
                    "x ≤ y and ∼x ∧ y = 0 but x ≠ y at x={}, y={}",
                    fmt(x),
                    fmt(y)
                )
            }),
            "x ≤ y and ∼x ∧ y = 0 force x = y",
        );
        push(&mut items, "dm_paraorthomodular", s, d);
    }

    // --- chajda_identity (informational) -----------------------------------------
    {
        let detail = match chajda_identity_witness(lat, dm.kleene()) {
            None => "x ∧ (∼x ∨ y) = (x ∧ ∼x) ∨ (x ∧ y) holds on this instance".to_string(),
            Some((x, y)) => {
                let (l, r) = chajda_sides(lat, dm.kleene(), x, y);
                format!(
                    "x ∧ (∼x ∨ y) = (x ∧ ∼x) ∨ (x ∧ y) fails at x={}, y={}: \
                     left side {}, right side {}",
                    fmt(x),
                    fmt(y),
                    fmt(l),
                    fmt(r)
                )
            }
        };
        push(&mut items, "chajda_identity", Status::Info, detail);
    }

    // --- sharp_three_way -----------------------------------------------------------
    let sharp: Vec<usize> =
        (0..dm.len()).filter(|&i| sharp_criterion(&space, dm.pair(i))).collect();
    let sharp_set: BTreeSet<usize> = sharp.iter().copied().collect();
    {
        let mut witness = None;
        for i in 0..dm.len() {
            let by_criterion = sharp_set.contains(&i);
            let by_kleene = sharp_by_kleene_complement(&dm, i);
            let by_complement = !lat.complements_of(i).is_empty();
            if by_criterion != by_kleene || by_kleene != by_complement {
                witness = Some(format!(
                    "at {}: B^▽ = A^△ is {}, x ∧ ∼x = 0 is {}, complement exists is {}",
                    fmt(i),
                    by_criterion,
                    by_kleene,
                    by_complement
                ));
                break;
            }
        }
        let (s, d) = verdict(
            witness,
            "B^▽ = A^△, sharpness, and complementedness coincide",
        );
        push(&mut items, "sharp_three_way", s, d);
    }

    // --- unique_complement_is_kleene --------------------------------------------------
    {
        let mut witness = None;
        for i in 0..dm.len() {
            let comps = lat.complements_of(i);
            if !(comps.is_empty() || comps == vec![dm.neg(i)]) {
                witness = Some(format!(
                    "{} has complements {{{}}} instead of exactly ∼x = {}",
                    fmt(i),
                    comps.iter().map(|&c| fmt(c)).collect::<Vec<_>>().join(", "),
                    fmt(dm.neg(i)),
                ));
                break;
            }
        }
        let (s, d) = verdict(
            witness,
            "every complement is unique and equal to the Kleene negation",
        );
        push(&mut items, "unique_complement_is_kleene", s, d);
    }

    // --- c_family_in_rs ------------------------------------------------------------------
    {
        let mut witness = None;
        if !sharp_set.contains(&lat.bottom()) || !sharp_set.contains(&lat.top()) {
            witness = Some("the bounds are not sharp".to_string());
        }
        for &i in &sharp {
            if !dm.in_rs(i) {
                witness = Some(format!("sharp element {} is not an approximation pair", fmt(i)));
                break;
            }
            if !sharp_set.contains(&dm.neg(i)) {
                witness = Some(format!("∼{} is not sharp", fmt(i)));
                break;
            }
        }
        let (s, d) = verdict(
            witness,
            "sharp elements are approximation pairs, include the bounds, and \
             are closed under ∼",
        );
        push(&mut items, "c_family_in_rs", s, d);
    }

    // --- the doubly definable family, three ways ---------------------------------------------
    // image route: intersections of the two inverse-approximation images
    let a_by_image: BTreeSet<BitVec> = {
        let lows: BTreeSet<BitVec> = ops.low_i.iter().cloned().collect();
        let ups: BTreeSet<BitVec> = ops.up_i.iter().cloned().collect();
        lows.intersection(&ups).cloned().collect()
    };
    // fixpoint route
    let a_by_fixpoint: BTreeSet<BitVec> = ops
        .subsets
        .iter()
        .filter(|x| {
            space.is_definable(x, Direction::Inverse, Bound::Lower)
                && space.is_definable(x, Direction::Inverse, Bound::Upper)
        })
        .cloned()
        .collect();
    // interior-equals-closure route: Z^{▼△} = Z^{▲▽}
    let a_by_operators: BTreeSet<BitVec> = ops
        .subsets
        .iter()
        .enumerate()
        .filter(|(w, _)| {
            let interior = &ops.up_i[word_of(&ops.low_f[*w]) as usize];
            let closure = &ops.low_i[word_of(&ops.up_f[*w]) as usize];
            interior == closure
        })
        .map(|(_, x)| x.clone())
        .collect();
    let afam: Vec<BitVec> = a_by_fixpoint.iter().cloned().collect();

    // --- a_family_complement_closed -------------------------------------------------------
    {
        let mut witness = None;
        for z in &afam {
            if !a_by_fixpoint.contains(&z.complement()) {
                witness = Some(format!(
                    "{} is doubly definable but its complement {} is not",
                    fmts(z),
                    fmts(&z.complement())
                ));
                break;
            }
        }
        let (s, d) = verdict(
            witness,
            "the doubly definable sets are closed under complementation",
        );
        push(&mut items, "a_family_complement_closed", s, d);
    }

    // --- a_family_fixpoint_characterization -----------------------------------------------
    {
        let witness = if a_by_image != a_by_fixpoint {
            Some(format!(
                "image route gives {} sets, fixpoint route gives {}",
                a_by_image.len(),
                a_by_fixpoint.len()
            ))
        } else if a_by_fixpoint != a_by_operators {
            let diff: Vec<String> = a_by_fixpoint
                .symmetric_difference(&a_by_operators)
                .map(|z| fmts(z))
                .collect();
            Some(format!(
                "fixpoint route and Z^{{▼△}} = Z^{{▲▽}} route disagree on {{{}}}",
                diff.join(", ")
            ))
        } else {
            None
        };
        let (s, d) = verdict(
            witness,
            "image membership, the two fixpoint equations, and Z^{▼△} = Z^{▲▽} \
             select the same family",
        );
        push(&mut items, "a_family_fixpoint_characterization", s, d);
    }

    // --- a_family_pseudo_kleene_poset ---------------------------------------------------------
    {
        let index_of = |z: &BitVec| afam.binary_search(z).expect("closed under complement");
        let w = kleene_poset_witness(
            afam.len(),
            |i, j| afam[i].is_subset(&afam[j]),
            |i| index_of(&afam[i].complement()),
        );
        let (s, d) = verdict(
            w.map(|(x, y, l, m)| {
                format!(
                    "normality fails in the doubly definable family at Z={}, W={}, \
                     lower bound {}, upper bound {}",
                    fmts(&afam[x]),
                    fmts(&afam[y]),
                    fmts(&afam[l]),
                    fmts(&afam[m]),
                )
            }),
            "the doubly definable sets with complementation form a pseudo-Kleene poset",
        );
        push(&mut items, "a_family_pseudo_kleene_poset", s, d);
    }

    // --- sharp_pairs_are_a_family_images ------------------------------------------------------
    let sharp_pairs: BTreeSet<RoughPair> = sharp.iter().map(|&i| dm.pair(i).clone()).collect();
    {
        let image_pairs: BTreeSet<RoughPair> = afam.iter().map(|z| psi(&space, z)).collect();
        let witness = if image_pairs != sharp_pairs {
            let only_img: Vec<String> = image_pairs
                .difference(&sharp_pairs)
                .map(|p| p.format(&u))
                .collect();
            let only_sharp: Vec<String> = sharp_pairs
                .difference(&image_pairs)
                .map(|p| p.format(&u))
                .collect();
            Some(format!(
                "{{(Z^▼,Z^▲)}} ≠ sharp elements; only in the image: [{}], only sharp: [{}]",
                only_img.join(", "),
                only_sharp.join(", ")
            ))
        } else {
            None
        };
        let (s, d) = verdict(
            witness,
            "the sharp elements are exactly the pairs (Z^▼, Z^▲) with Z doubly definable",
        );
        push(&mut items, "sharp_pairs_are_a_family_images", s, d);
    }

    // --- sharp_pairs_swapped_form (informational) ---------------------------------------------
    {
        let swapped: BTreeSet<RoughPair> = afam
            .iter()
            .map(|z| {
                RoughPair::new(
                    space.upper(z, Direction::Forward),
                    space.lower(z, Direction::Forward),
                )
            })
            .collect();
        let detail = if swapped == sharp_pairs {
            "the swapped family {(Z^▲, Z^▼)} also equals the sharp elements \
             (upper and lower coincide on doubly definable sets here)"
                .to_string()
        } else {
            let sample = swapped
                .difference(&sharp_pairs)
                .next()
                .map(|p| p.format(&u))
                .unwrap_or_default();
            format!(
                "the swapped family {{(Z^▲, Z^▼)}} differs from the sharp elements; \
                 for instance {} is in the swapped family only",
                sample
            )
        };
        push(&mut items, "sharp_pairs_swapped_form", Status::Info, detail);
    }

    // --- phi_psi_inverse_isomorphisms ----------------------------------------------------------
    {
        let mut witness = None;
        for &i in &sharp {
            let z = phi(&space, dm.pair(i));
            if !a_by_fixpoint.contains(&z) {
                witness = Some(format!("φ{} = {} is not doubly definable", fmt(i), fmts(&z)));
                break;
            }
            if &psi(&space, &z) != dm.pair(i) {
                witness = Some(format!("ψ(φ{}) ≠ {}", fmt(i), fmt(i)));
                break;
            }
            let nz = phi(&space, dm.pair(dm.neg(i)));
            if nz != z.complement() {
                witness = Some(format!(
                    "φ(∼{}) = {} but (φ{})ᶜ = {}",
                    fmt(i),
                    fmts(&nz),
                    fmt(i),
                    fmts(&z.complement())
                ));
                break;
            }
        }
        if witness.is_none() {
            for z in &afam {
                let p = psi(&space, z);
                if !sharp_pairs.contains(&p) {
                    witness = Some(format!("ψ({}) = {} is not sharp", fmts(z), p.format(&u)));
                    break;
                }
                if phi(&space, &p) != *z {
                    witness = Some(format!("φ(ψ({})) ≠ {}", fmts(z), fmts(z)));
                    break;
                }
            }
        }
        if witness.is_none() {
            'order: for &i in &sharp {
                for &j in &sharp {
                    let by_order = lat.leq(i, j);
                    let by_sets = phi(&space, dm.pair(i)).is_subset(&phi(&space, dm.pair(j)));
                    if by_order != by_sets {
                        witness = Some(format!(
                            "order mismatch: {} ≤ {} is {} but φ-image inclusion is {}",
                            fmt(i),
                            fmt(j),
                            by_order,
                            by_sets
                        ));
                        break 'order;
                    }
                }
            }
        }
        let (s, d) = verdict(
            witness,
            "φ(A,B) = A^△ and ψ(Z) = (Z^▼, Z^▲) are mutually inverse order \
             isomorphisms carrying ∼ to complementation",
        );
        push(&mut items, "phi_psi_inverse_isomorphisms", s, d);
    }

    // --- ∼-orbit sweep over subsets of the sharp family ---------------------------------------
    // Orbits always have size two: no sharp element is ∼-fixed.
    let orbits: Vec<(usize, usize)> = {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &i in &sharp {
            if seen.contains(&i) {
                continue;
            }
            let ni = dm.neg(i);
            seen.insert(i);
            seen.insert(ni);
            out.push((i, ni));
        }
        out
    };
    let orbit_subsets: Option<Vec<Vec<usize>>> = if orbits.len() <= ORBIT_SWEEP_LIMIT {
        Some(
            (1u64..1 << orbits.len())
                .map(|mask| {
                    let mut members = Vec::new();
                    for (k, &(a, b)) in orbits.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            members.push(a);
                            if b != a {
                                members.push(b);
                            }
                        }
                    }
                    members.sort_unstable();
                    members
                })
                .collect(),
        )
    } else {
        None
    };
    let closed_in_dm = |members: &[usize]| {
        members.iter().all(|&x| {
            members.iter().all(|&y| {
                members.binary_search(&lat.join(x, y)).is_ok()
                    && members.binary_search(&lat.meet(x, y)).is_ok()
            })
        })
    };

    // --- sharp_sublattice_transfer -------------------------------------------------------------
    {
        let (s, d) = match &orbit_subsets {
            None => (
                Status::Skipped,
                format!(
                    "{} ∼-orbits of sharp elements exceed the sweep limit of {}",
                    orbits.len(),
                    ORBIT_SWEEP_LIMIT
                ),
            ),
            Some(subsets) => {
                let mut witness = None;
                for members in subsets {
                    let in_dm = closed_in_dm(members);
                    let images: BTreeSet<BitVec> =
                        members.iter().map(|&i| phi(&space, dm.pair(i))).collect();
                    let in_sets = images.iter().all(|z| {
                        images.iter().all(|w| {
                            images.contains(&z.union(w)) && images.contains(&z.inter(w))
                        })
                    });
                    if in_dm != in_sets {
                        witness = Some(format!(
                            "the ∼-closed family {{{}}} is {} under completion join/meet \
                             but its φ-image is {} under union/intersection",
                            members.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", "),
                            if in_dm { "closed" } else { "not closed" },
                            if in_sets { "closed" } else { "not closed" },
                        ));
                        break;
                    }
                }
                verdict(
                    witness,
                    "a ∼-closed family of sharp elements is a sublattice of the \
                     completion exactly when its φ-image is a sublattice of the powerset",
                )
            }
        };
        push(&mut items, "sharp_sublattice_transfer", s, d);
    }

    // --- c_subsets_boolean -----------------------------------------------------------------------
    {
        let (s, d) = match &orbit_subsets {
            None => (
                Status::Skipped,
                format!(
                    "{} ∼-orbits of sharp elements exceed the sweep limit of {}",
                    orbits.len(),
                    ORBIT_SWEEP_LIMIT
                ),
            ),
            Some(subsets) => {
                let mut witness = None;
                for members in subsets {
                    if !closed_in_dm(members) {
                        continue;
                    }
                    let mut subset = BitVec::new(dm.len());
                    for &i in members {
                        subset.set(i, true);
                    }
                    // A nonempty ∼-closed sublattice of sharp elements always
                    // contains x ∧ ∼x = 0 and x ∨ ∼x = 1.
                    match lat.induced_order_lattice(&subset) {
                        Ok((induced, _)) => {
                            if !induced.is_boolean() {
                                witness = Some(format!(
                                    "the ∼-closed sublattice {{{}}} is not Boolean",
                                    members
                                        .iter()
                                        .map(|&i| fmt(i))
                                        .collect::<Vec<_>>()
                                        .join(", "),
                                ));
                                break;
                            }
                        }
                        Err(_) => {
                            witness = Some(format!(
                                "the ∼-closed family {{{}}} is join/meet closed but its \
                                 induced order is not a lattice",
                                members.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", "),
                            ));
                            break;
                        }
                    }
                }
                verdict(
                    witness,
                    "every ∼-closed family of sharp elements that is a sublattice \
                     of the completion is a Boolean lattice",
                )
            }
        };
        push(&mut items, "c_subsets_boolean", s, d);
    }

    // --- center, three ways -------------------------------------------------------------------
    let center: Vec<usize> = center_by_neutrality(lat);
    {
        let by_split = center_by_split(lat, dm.kleene());
        let by_sets = center_by_definable_split(&dm, caps.rs)?;
        let witness = if center != by_split {
            Some(format!(
                "neutral-complemented route gives {{{}}} but the splitting route gives {{{}}}",
                center.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", "),
                by_split.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", "),
            ))
        } else if center != by_sets {
            Some(format!(
                "neutral-complemented route gives {{{}}} but the definable-split route \
                 gives {{{}}}",
                center.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", "),
                by_sets.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", "),
            ))
        } else {
            None
        };
        let (s, d) = verdict(
            witness,
            "neutral complemented elements, two-way splitting sharp elements, \
             and the set-level splitting criterion agree",
        );
        push(&mut items, "center_characterizations_agree", s, d);
    }

    // --- central_implies_lower_determined --------------------------------------------------------
    {
        let mut witness = None;
        for &i in &center {
            let p = dm.pair(i);
            let expected = space.lower(&p.upper, Direction::Forward);
            if p.lower != expected {
                witness = Some(format!(
                    "central element {} has A ≠ B^▼ = {}",
                    fmt(i),
                    fmts(&expected)
                ));
                break;
            }
        }
        let (s, d) = verdict(
            witness,
            "every central element satisfies A = B^▼",
        );
        push(&mut items, "central_implies_lower_determined", s, d);
    }

    // --- exact_five_way ---------------------------------------------------------------------------
    {
        let mut witness = None;
        for (w, a) in ops.subsets.iter().enumerate() {
            let c1 = rs.contains(&RoughPair::new(a.clone(), a.clone()));
            let c2 = ops.low_f[w] == ops.up_f[w];
            let c3 = ops.low_i[w] == ops.up_i[w];
            let c4 = ops.up_f[w] == *a && ops.up_i[w] == *a;
            let c5 = ops.low_f[w] == *a && ops.low_i[w] == *a;
            if !(c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5) {
                witness = Some(format!(
                    "at A={}: (A,A) is a pair: {}, A^▼=A^▲: {}, A^▽=A^△: {}, \
                     A^▲=A^△=A: {}, A^▼=A^▽=A: {}",
                    fmts(a),
                    c1,
                    c2,
                    c3,
                    c4,
                    c5
                ));
                break;
            }
        }
        let (s, d) = verdict(
            witness,
            "the five characterizations of exactness coincide on every subset",
        );
        push(&mut items, "exact_five_way", s, d);
    }

    // --- fixpoint_transfer -------------------------------------------------------------------------
    {
        let mut witness = None;
        for (w, a) in ops.subsets.iter().enumerate() {
            let up_f_fixed = ops.up_f[w] == *a;
            let low_i_fixed = ops.low_i[w] == *a;
            let up_i_fixed = ops.up_i[w] == *a;
            let low_f_fixed = ops.low_f[w] == *a;
            if up_f_fixed != low_i_fixed || up_i_fixed != low_f_fixed {
                witness = Some(format!(
                    "at A={}: A^▲=A is {}, A^▽=A is {}, A^△=A is {}, A^▼=A is {}",
                    fmts(a),
                    up_f_fixed,
                    low_i_fixed,
                    up_i_fixed,
                    low_f_fixed
                ));
                break;
            }
        }
        let (s, d) = verdict(
            witness,
            "A^▲ = A ⟺ A^▽ = A and A^△ = A ⟺ A^▼ = A",
        );
        push(&mut items, "fixpoint_transfer", s, d);
    }

    // --- exact_implies_central ----------------------------------------------------------------------
    let exact_dm: Vec<usize> = (0..dm.len()).filter(|&i| dm.pair(i).is_exact()).collect();
    {
        let center_set: BTreeSet<usize> = center.iter().copied().collect();
        let mut witness = None;
        for &i in &exact_dm {
            if !center_set.contains(&i) {
                witness = Some(format!("exact element {} is not central", fmt(i)));
                break;
            }
        }
        let (s, d) = verdict(witness, "every exact pair is a central element");
        push(&mut items, "exact_implies_central", s, d);
    }

    // --- exact_iff_saturated_re ----------------------------------------------------------------------
    let re_partition = relation.equivalence_closure().equivalence_classes()?;
    {
        let from_rs: BTreeSet<BitVec> = (0..rs.len())
            .filter(|&i| rs.pair(i).is_exact())
            .map(|i| rs.pair(i).lower.clone())
            .collect();
        let saturated: BTreeSet<BitVec> = re_partition.saturated_sets().into_iter().collect();
        let witness = if from_rs != saturated {
            let diff: Vec<String> =
                from_rs.symmetric_difference(&saturated).map(|z| fmts(z)).collect();
            Some(format!(
                "exact sets and unions of equivalence-closure classes disagree on {{{}}}",
                diff.join(", ")
            ))
        } else {
            None
        };
        let (s, d) = verdict(
            witness,
            "(A,A) is an approximation pair exactly when A is a union of classes \
             of the smallest equivalence containing the relation",
        );
        push(&mut items, "exact_iff_saturated_re", s, d);
    }

    // --- exact_boolean_sublattice ----------------------------------------------------------------------
    {
        let exact_set: BTreeSet<usize> = exact_dm.iter().copied().collect();
        let mut witness = None;
        'exact: for &i in &exact_dm {
            if !exact_set.contains(&dm.neg(i)) {
                witness = Some(format!("∼ of exact {} is not exact", fmt(i)));
                break;
            }
            for &j in &exact_dm {
                let join = lat.join(i, j);
                let expected_join = RoughPair::new(
                    dm.pair(i).lower.union(&dm.pair(j).lower),
                    dm.pair(i).upper.union(&dm.pair(j).upper),
                );
                if !exact_set.contains(&join) || dm.pair(join) != &expected_join {
                    witness = Some(format!(
                        "join of exact {} and {} is not their componentwise union",
                        fmt(i),
                        fmt(j)
                    ));
                    break 'exact;
                }
                let meet = lat.meet(i, j);
                let expected_meet = RoughPair::new(
                    dm.pair(i).lower.inter(&dm.pair(j).lower),
                    dm.pair(i).upper.inter(&dm.pair(j).upper),
                );
                if !exact_set.contains(&meet) || dm.pair(meet) != &expected_meet {
                    witness = Some(format!(
                        "meet of exact {} and {} is not their componentwise intersection",
                        fmt(i),
                        fmt(j)
                    ));
                    break 'exact;
                }
            }
        }
        if witness.is_none() {
            let mut subset = BitVec::new(dm.len());
            for &i in &exact_dm {
                subset.set(i, true);
            }
            match lat.induced_order_lattice(&subset) {
                Ok((induced, members)) => {
                    if !induced.is_boolean() || !induced.is_atomistic() {
                        witness =
                            Some("the exact pairs do not form an atomistic Boolean lattice"
                                .to_string());
                    } else {
                        let atom_pairs: BTreeSet<RoughPair> = induced
                            .atoms()
                            .into_iter()
                            .map(|k| dm.pair(members[k]).clone())
                            .collect();
                        let class_pairs: BTreeSet<RoughPair> = re_partition
                            .blocks()
                            .iter()
                            .map(|b| RoughPair::new(b.clone(), b.clone()))
                            .collect();
                        if atom_pairs != class_pairs {
                            witness = Some(
                                "the atoms of the exact-pair lattice are not the \
                                 equivalence-closure classes"
                                    .to_string(),
                            );
                        }
                    }
                }
                Err(_) => {
                    witness = Some("the exact pairs do not induce a lattice".to_string());
                }
            }
        }
        let (s, d) = verdict(
            witness,
            "the exact pairs form an atomistic Boolean sublattice with \
             componentwise operations, ∼ as complement, and the closure classes \
             as atoms",
        );
        push(&mut items, "exact_boolean_sublattice", s, d);
    }

    // --- exact_same_under_r_rinv_re ---------------------------------------------------------------------
    {
        let exact_of = |sp: &ApproxSpace| -> Result<BTreeSet<BitVec>> {
            let fam = RsFamily::build(sp, caps.rs)?;
            Ok((0..fam.len())
                .filter(|&i| fam.pair(i).is_exact())
                .map(|i| fam.pair(i).lower.clone())
                .collect())
        };
        let base: BTreeSet<BitVec> = (0..rs.len())
            .filter(|&i| rs.pair(i).is_exact())
            .map(|i| rs.pair(i).lower.clone())
            .collect();
        let inv = exact_of(&space.inverted())?;
        let closure = exact_of(&ApproxSpace::new(relation.equivalence_closure()))?;
        let witness = if base != inv {
            Some("the relation and its inverse have different exact sets".to_string())
        } else if base != closure {
            Some(
                "the relation and its equivalence closure have different exact sets"
                    .to_string(),
            )
        } else {
            None
        };
        let (s, d) = verdict(
            witness,
            "the relation, its inverse, and its equivalence closure induce the \
             same exact sets",
        );
        push(&mut items, "exact_same_under_r_rinv_re", s, d);
    }

    // --- exact_equals_center_intersection ----------------------------------------------------------------
    {
        let (s, d) = match DmLattice::build(&space.inverted(), caps) {
            Ok(dm_inv) => {
                let center_pairs: BTreeSet<RoughPair> =
                    center.iter().map(|&i| dm.pair(i).clone()).collect();
                let center_inv: BTreeSet<RoughPair> = center_by_neutrality(dm_inv.lattice())
                    .into_iter()
                    .map(|i| dm_inv.pair(i).clone())
                    .collect();
                let both: BTreeSet<RoughPair> =
                    center_pairs.intersection(&center_inv).cloned().collect();
                let exact_pairs: BTreeSet<RoughPair> =
                    exact_dm.iter().map(|&i| dm.pair(i).clone()).collect();
                let witness = if both != exact_pairs {
                    let diff: Vec<String> = both
                        .symmetric_difference(&exact_pairs)
                        .map(|p| p.format(&u))
                        .collect();
                    Some(format!(
                        "center-intersection and exact pairs disagree on {{{}}}",
                        diff.join(", ")
                    ))
                } else {
                    None
                };
                verdict(
                    witness,
                    "the exact pairs are exactly the pairs central in both the \
                     completion of the relation and that of its inverse",
                )
            }
            Err(Error::CapExceeded { what, required, cap }) => (
                Status::Skipped,
                format!("{what} needs {required} but the cap is {cap}"),
            ),
            Err(e) => return Err(e),
        };
        push(&mut items, "exact_equals_center_intersection", s, d);
    }

    // --- tolerance_center_equals_exact -------------------------------------------------------------------
    {
        let (s, d) = if !flags.tolerance {
            (Status::Skipped, "the relation is not a tolerance".to_string())
        } else {
            let center_set: BTreeSet<usize> = center.iter().copied().collect();
            let exact_set: BTreeSet<usize> = exact_dm.iter().copied().collect();
            let witness = if center_set != exact_set {
                let diff: Vec<String> =
                    center_set.symmetric_difference(&exact_set).map(|&i| fmt(i)).collect();
                Some(format!("center and exact pairs disagree on {{{}}}", diff.join(", ")))
            } else {
                None
            };
            verdict(
                witness,
                "for a tolerance, the central elements are exactly the exact pairs",
            )
        };
        push(&mut items, "tolerance_center_equals_exact", s, d);
    }

    // --- quasiorder_collapse ------------------------------------------------------------------------------
    {
        let (s, d) = if !flags.quasiorder {
            (Status::Skipped, "the relation is not a quasiorder".to_string())
        } else {
            collapse_check(&sharp, &center, &exact_dm, &fmt)
        };
        push(&mut items, "quasiorder_collapse", s, d);
    }

    // --- irredundant_tolerance_collapse -------------------------------------------------------------------
    {
        let (s, d) = if !flags.irredundant_covering_tolerance {
            (
                Status::Skipped,
                "the relation is not a tolerance induced by an irredundant covering"
                    .to_string(),
            )
        } else {
            collapse_check(&sharp, &center, &exact_dm, &fmt)
        };
        push(&mut items, "irredundant_tolerance_collapse", s, d);
    }

    // --- quasiorder_rs_membership -----------------------------------------------------------------------
    {
        let (s, d) = if !flags.quasiorder {
            (Status::Skipped, "the relation is not a quasiorder".to_string())
        } else {
            let singles = space.singletons();
            let mut predicted: BTreeSet<RoughPair> = BTreeSet::new();
            for (w, a) in ops.subsets.iter().enumerate() {
                if ops.low_f[word_of(&ops.up_i[w]) as usize] != *a {
                    continue; // A = A^{△▼} fails: not in ℘(U)^▼
                }
                for (v, b) in ops.subsets.iter().enumerate() {
                    if ops.up_f[word_of(&ops.low_i[v]) as usize] != *b {
                        continue; // B = B^{▽▲} fails: not in ℘(U)^▲
                    }
                    if a.is_subset(b) && singles.is_subset(&a.union(&b.complement())) {
                        predicted.insert(RoughPair::new(a.clone(), b.clone()));
                    }
                }
            }
            let actual: BTreeSet<RoughPair> = rs.pairs().iter().cloned().collect();
            let witness = if predicted != actual {
                let diff: Vec<String> = predicted
                    .symmetric_difference(&actual)
                    .map(|p| p.format(&u))
                    .collect();
                Some(format!(
                    "membership characterization disagrees with the pair family on {{{}}}",
                    diff.join(", ")
                ))
            } else {
                None
            };
            verdict(
                witness,
                "the approximation pairs are exactly the definable pairs with \
                 A ⊆ B whose singleton-neighbourhood points lie in A ∪ Bᶜ",
            )
        };
        push(&mut items, "quasiorder_rs_membership", s, d);
    }

    // --- dm_equals_rs_when_quasiorder_or_irredundant ----------------------------------------------------
    {
        let applicable = flags.quasiorder || flags.irredundant_covering_tolerance;
        let (s, d) = if !applicable {
            (
                Status::Skipped,
                "the relation is neither a quasiorder nor a tolerance induced by an \
                 irredundant covering"
                    .to_string(),
            )
        } else {
            let mut witness = None;
            if dm.len() != rs.len() {
                witness = Some(format!(
                    "the completion adds {} elements",
                    dm.len() - rs.len()
                ));
            } else if !lat.is_distributive() {
                witness = Some("the pair lattice is not distributive".to_string());
            } else if flags.quasiorder {
                'cw: for i in 0..dm.len() {
                    for j in 0..dm.len() {
                        let join = lat.join(i, j);
                        let cw_join = RoughPair::new(
                            dm.pair(i).lower.union(&dm.pair(j).lower),
                            dm.pair(i).upper.union(&dm.pair(j).upper),
                        );
                        let meet = lat.meet(i, j);
                        let cw_meet = RoughPair::new(
                            dm.pair(i).lower.inter(&dm.pair(j).lower),
                            dm.pair(i).upper.inter(&dm.pair(j).upper),
                        );
                        if dm.pair(join) != &cw_join || dm.pair(meet) != &cw_meet {
                            witness = Some(format!(
                                "join or meet of {} and {} is not componentwise",
                                fmt(i),
                                fmt(j)
                            ));
                            break 'cw;
                        }
                    }
                }
            }
            verdict(
                witness,
                "the pair family is already a complete distributive lattice, so \
                 the completion adds nothing",
            )
        };
        push(&mut items, "dm_equals_rs_when_quasiorder_or_irredundant", s, d);
    }

    // --- the negation pool --------------------------------------------------------------------------------
    let pool = {
        let structures = match bz::enumerate_pbz_structures(&dm, caps.oracle) {
            Ok(s) => Some(s),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let equivalences = match extending_equivalences(&space, caps.oracle) {
            Ok(parts) => {
                let mut out = Vec::with_capacity(parts.len());
                for p in parts {
                    let neg = neg_from_equivalence(&dm, &p)?;
                    out.push((p, neg));
                }
                Some(out)
            }
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        NegationPool { structures, equivalences }
    };
    let pool_skip =
        |what: &str| (Status::Skipped, format!("{what} enumeration exceeded its cap"));

    // --- subortholattice_negations_are_pbz ---------------------------------------------------------------
    {
        let (s, d) = match &pool.structures {
            None => pool_skip("orthopartition"),
            Some(structures) => {
                let mut witness = None;
                for st in structures {
                    let report = check_bz_axioms(&dm, &st.neg);
                    if !report.is_pbz {
                        witness = Some(format!(
                            "the negation of the subortholattice with atoms {{{}}} \
                             is not a paraorthomodular Brouwer–Zadeh negation",
                            st.atoms.iter().map(|&a| fmt(a)).collect::<Vec<_>>().join(", "),
                        ));
                        break;
                    }
                }
                verdict(
                    witness,
                    &format!(
                        "all {} subortholattice-derived negations satisfy the four \
                         Brouwer–Zadeh axioms on the paraorthomodular completion",
                        structures.len()
                    ),
                )
            }
        };
        push(&mut items, "subortholattice_negations_are_pbz", s, d);
    }

    // --- bz_derived_laws -----------------------------------------------------------------------------------
    {
        let negs = pool.all();
        let (s, d) = if negs.is_empty() {
            pool_skip("negation")
        } else {
            let mut witness = None;
            for &neg in &negs {
                let r = check_bz_axioms(&dm, neg);
                let broken = [
                    (r.neg_below_kleene.map(|a| (a, "¬a ≤ ∼a"))),
                    (r.triple_negation.map(|a| (a, "¬¬¬a = ¬a"))),
                    (r.neg_complement_pair.map(|a| (a, "¬a and ∼¬a are complements"))),
                    (r.de_morgan_law.map(|(a, _)| (a, "¬(a∨b) = ¬a ∧ ¬b"))),
                ];
                if let Some((a, law)) = broken.into_iter().flatten().next() {
                    witness = Some(format!(
                        "derived law {} fails at a={} for the negation {}",
                        law,
                        fmt(a),
                        neg.label
                    ));
                    break;
                }
                if !r.bounds_law {
                    witness =
                        Some(format!("¬0 = 1 or ¬1 = 0 fails for the negation {}", neg.label));
                    break;
                }
            }
            verdict(
                witness,
                &format!(
                    "¬a ≤ ∼a, ¬¬¬a = ¬a, the complement pair law, the bound laws, \
                     and the ∨-de Morgan law hold for all {} negations",
                    negs.len()
                ),
            )
        };
        push(&mut items, "bz_derived_laws", s, d);
    }

    // --- box_diamond_laws ----------------------------------------------------------------------------------
    {
        let negs = pool.all();
        let (s, d) = if negs.is_empty() {
            pool_skip("negation")
        } else {
            let mut witness = None;
            'negs: for &neg in &negs {
                for a in 0..dm.len() {
                    let di = bz::diamond(neg, a);
                    let bx = bz::box_op(&dm, neg, a);
                    let laws: [(&str, bool); 6] = [
                        ("◻a ≤ a ≤ ◇a", lat.leq(bx, a) && lat.leq(a, di)),
                        ("idempotence", bz::diamond(neg, di) == di && bz::box_op(&dm, neg, bx) == bx),
                        ("◻◇a = ◇a", bz::box_op(&dm, neg, di) == di),
                        ("◇◻a = ◻a", bz::diamond(neg, bx) == bx),
                        (
                            "∼◇a = ◻∼a and ∼◻a = ◇∼a",
                            dm.neg(di) == bz::box_op(&dm, neg, dm.neg(a))
                                && dm.neg(bx) == bz::diamond(neg, dm.neg(a)),
                        ),
                        (
                            "monotonicity",
                            lat.up_set(a).iter_ones().all(|b| {
                                lat.leq(di, bz::diamond(neg, b))
                                    && lat.leq(bx, bz::box_op(&dm, neg, b))
                            }),
                        ),
                    ];
                    if let Some((law, _)) = laws.iter().find(|(_, ok)| !ok) {
                        witness = Some(format!(
                            "{} fails at a={} for the negation {}",
                            law,
                            fmt(a),
                            neg.label
                        ));
                        break 'negs;
                    }
                }
            }
            verdict(
                witness,
                "◇ = ¬¬ is a closure operator and ◻ = ¬∼ an interior operator, \
                 exchanged by ∼, for every negation",
            )
        };
        push(&mut items, "box_diamond_laws", s, d);
    }

    // --- closure_operator_facts ----------------------------------------------------------------------------
    {
        let negs = pool.all();
        let (s, d) = if negs.is_empty() {
            pool_skip("negation")
        } else {
            let mut witness = None;
            'negs: for &neg in &negs {
                let clopen: BTreeSet<usize> =
                    (0..dm.len()).map(|x| bz::diamond(neg, x)).collect();
                for (&x, &y) in clopen.iter().flat_map(|x| clopen.iter().map(move |y| (x, y))) {
                    if !clopen.contains(&lat.join(x, y)) || !clopen.contains(&lat.meet(x, y)) {
                        witness = Some(format!(
                            "the clopen family of {} is not closed under join/meet",
                            neg.label
                        ));
                        break 'negs;
                    }
                }
                for x in 0..dm.len() {
                    let hull =
                        lat.meet_of(clopen.iter().copied().filter(|&a| lat.leq(x, a)));
                    let core =
                        lat.join_of(clopen.iter().copied().filter(|&a| lat.leq(a, x)));
                    if bz::diamond(neg, x) != hull {
                        witness = Some(format!(
                            "◇x ≠ least clopen element above x at x={} for {}",
                            fmt(x),
                            neg.label
                        ));
                        break 'negs;
                    }
                    if bz::box_op(&dm, neg, x) != core {
                        witness = Some(format!(
                            "◻x ≠ greatest clopen element below x at x={} for {}",
                            fmt(x),
                            neg.label
                        ));
                        break 'negs;
                    }
                    if neg.apply(x) != lat.join_of(
                        clopen.iter().copied().filter(|&a| lat.leq(a, dm.neg(x))),
                    ) {
                        witness = Some(format!(
                            "¬x ≠ greatest clopen element below ∼x at x={} for {}",
                            fmt(x),
                            neg.label
                        ));
                        break 'negs;
                    }
                }
            }
            verdict(
                witness,
                "the clopen family is a sublattice, ◇/◻ are the induced hull and \
                 core operators, and ¬ is the core of the Kleene negation",
            )
        };
        push(&mut items, "closure_operator_facts", s, d);
    }

    // --- clopen_family_routes -------------------------------------------------------------------------------
    {
        let negs = pool.all();
        let (s, d) = if negs.is_empty() {
            pool_skip("negation")
        } else {
            let mut witness = None;
            for &neg in &negs {
                let routes = bz::clopen_routes(&dm, neg);
                if routes.image != routes.diamond_fixed || routes.image != routes.box_fixed {
                    witness = Some(format!(
                        "image of ¬, ◇-fixed elements, and ◻-fixed elements differ \
                         for the negation {}",
                        neg.label
                    ));
                    break;
                }
            }
            verdict(
                witness,
                "the image of ¬, the ◇-closed elements, and the ◻-open elements \
                 coincide for every negation",
            )
        };
        push(&mut items, "clopen_family_routes", s, d);
    }

    // --- clopen_subortholattice -----------------------------------------------------------------------------
    {
        let negs = pool.all();
        let (s, d) = if negs.is_empty() {
            pool_skip("negation")
        } else {
            let mut witness = None;
            'negs: for &neg in &negs {
                let clopen: Vec<usize> = bz::clopen_routes(&dm, neg).image;
                let mut subset = BitVec::new(dm.len());
                for &i in &clopen {
                    subset.set(i, true);
                }
                for &i in &clopen {
                    if !subset.get(dm.neg(i)) || !sharp_set.contains(&i) {
                        witness = Some(format!(
                            "clopen element {} of {} is not sharp or its ∼ leaves \
                             the family",
                            fmt(i),
                            neg.label
                        ));
                        break 'negs;
                    }
                }
                if !lat.is_sublattice(&subset) {
                    witness = Some(format!(
                        "the clopen family of {} is not a bounded sublattice",
                        neg.label
                    ));
                    break;
                }
                match lat.induced_order_lattice(&subset) {
                    Ok((induced, _)) => {
                        if !induced.is_boolean() || !induced.is_atomistic() {
                            witness = Some(format!(
                                "the clopen family of {} is not an atomistic Boolean \
                                 lattice",
                                neg.label
                            ));
                            break;
                        }
                    }
                    Err(_) => {
                        witness = Some(format!(
                            "the clopen family of {} does not induce a lattice",
                            neg.label
                        ));
                        break;
                    }
                }
            }
            verdict(
                witness,
                "every clopen family is an atomistic Boolean subortholattice with \
                 ∼ as orthocomplementation",
            )
        };
        push(&mut items, "clopen_subortholattice", s, d);
    }

    // --- brouwer_sharp_chain --------------------------------------------------------------------------------
    {
        let negs = pool.all();
        let (s, d) = if negs.is_empty() {
            pool_skip("negation")
        } else {
            let mut witness = None;
            for &neg in &negs {
                let clopen: BTreeSet<usize> =
                    bz::clopen_routes(&dm, neg).image.into_iter().collect();
                let brouwer: BTreeSet<usize> =
                    bz::brouwer_sharp(&dm, neg).into_iter().collect();
                if !clopen.is_subset(&brouwer) {
                    witness = Some(format!(
                        "some clopen element of {} is not Brouwer-sharp",
                        neg.label
                    ));
                    break;
                }
                if !brouwer.iter().all(|i| sharp_set.contains(i)) {
                    witness = Some(format!(
                        "some Brouwer-sharp element of {} is not sharp",
                        neg.label
                    ));
                    break;
                }
                if clopen != brouwer {
                    // All pool negations are paraorthomodular, so the chain
                    // must collapse at its first link.
                    witness = Some(format!(
                        "clopen and Brouwer-sharp elements differ for the \
                         paraorthomodular negation {}",
                        neg.label
                    ));
                    break;
                }
            }
            verdict(
                witness,
                "clopen ⊆ Brouwer-sharp ⊆ sharp, with the first two equal for \
                 paraorthomodular negations",
            )
        };
        push(&mut items, "brouwer_sharp_chain", s, d);
    }

    // --- correspondence_roundtrip ---------------------------------------------------------------------------
    {
        let (s, d) = match &pool.structures {
            None => pool_skip("orthopartition"),
            Some(structures) => {
                let mut witness = None;
                let mut seen_negs: BTreeSet<Vec<usize>> = BTreeSet::new();
                let mut seen_sets: BTreeSet<Vec<usize>> = BTreeSet::new();
                for st in structures {
                    let clopen: Vec<usize> = bz::clopen_routes(&dm, &st.neg).image;
                    let declared: Vec<usize> = st.ortholattice.iter_ones().collect();
                    if clopen != declared {
                        witness = Some(format!(
                            "the clopen family of the negation from atoms {{{}}} is \
                             not the subortholattice it was built from",
                            st.atoms.iter().map(|&a| fmt(a)).collect::<Vec<_>>().join(", "),
                        ));
                        break;
                    }
                    if !seen_negs.insert(st.neg.table().to_vec())
                        || !seen_sets.insert(declared)
                    {
                        witness = Some(
                            "two distinct subortholattices produced the same negation"
                                .to_string(),
                        );
                        break;
                    }
                }
                if witness.is_none() {
                    if orbits.len() <= ORBIT_SWEEP_LIMIT {
                        let swept: BTreeSet<Vec<usize>> =
                            sharp_subortholattices(&dm, ORBIT_SWEEP_LIMIT)
                                .into_iter()
                                .map(|s| s.iter_ones().collect())
                                .collect();
                        if swept != seen_sets {
                            let diff: Vec<String> = swept
                                .symmetric_difference(&seen_sets)
                                .map(|ms| {
                                    format!(
                                        "{{{}}}",
                                        ms.iter()
                                            .map(|&i| fmt(i))
                                            .collect::<Vec<_>>()
                                            .join(", ")
                                    )
                                })
                                .collect();
                            witness = Some(format!(
                                "the orthopartition enumeration and the ∼-closed \
                                 sublattice sweep disagree: {}",
                                diff.join("; ")
                            ));
                        }
                    }
                }
                verdict(
                    witness,
                    &format!(
                        "negations and subortholattices correspond bijectively \
                         ({} of each)",
                        structures.len()
                    ),
                )
            }
        };
        push(&mut items, "correspondence_roundtrip", s, d);
    }

    // --- extending_equivalence_approximations --------------------------------------------------------------
    {
        let (s, d) = match &pool.equivalences {
            None => pool_skip("extending-equivalence"),
            Some(pairs) => {
                let mut witness = None;
                'parts: for (part, _) in pairs {
                    for x in &ops.subsets {
                        let down = part.lower(x);
                        let up = part.lower(&x.complement()).complement();
                        for (y, name) in [(&down, "lower"), (&up, "upper")] {
                            let w = word_of(y) as usize;
                            if ops.up_f[w] != *y || ops.low_f[w] != *y {
                                witness = Some(format!(
                                    "the equivalence-{} approximation {} of X={} under \
                                     {} is not fixed by the relation's approximations",
                                    name,
                                    fmts(y),
                                    fmts(x),
                                    part.spec_string(),
                                ));
                                break 'parts;
                            }
                        }
                    }
                }
                verdict(
                    witness,
                    "approximations along an extending equivalence are fixed points \
                     of the relation's lower and upper approximations",
                )
            }
        };
        push(&mut items, "extending_equivalence_approximations", s, d);
    }

    // --- extending_equivalence_negations_are_pbz -------------------------------------------------------------
    {
        let (s, d) = match &pool.equivalences {
            None => pool_skip("extending-equivalence"),
            Some(pairs) => {
                let mut witness = None;
                for (part, neg) in pairs {
                    if !check_bz_axioms(&dm, neg).is_pbz {
                        witness = Some(format!(
                            "the negation from the extending equivalence {} is not a \
                             paraorthomodular Brouwer–Zadeh negation",
                            part.spec_string()
                        ));
                        break;
                    }
                }
                verdict(
                    witness,
                    &format!(
                        "(A,B) ↦ (B^c↓, B^c↓) is a paraorthomodular Brouwer–Zadeh \
                         negation for each of the {} extending equivalences",
                        pairs.len()
                    ),
                )
            }
        };
        push(&mut items, "extending_equivalence_negations_are_pbz", s, d);
    }

    // --- equivalence_rs_kleene_stone_pbz_star ------------------------------------------------------------------
    let stone = stone_analysis(&dm);
    {
        let (s, d) = if !flags.equivalence {
            (Status::Skipped, "the relation is not an equivalence".to_string())
        } else {
            let mut witness = None;
            if dm.len() != rs.len() {
                witness = Some("the completion adds elements".to_string());
            } else if !stone.distributive || !stone.pseudocomplemented || stone.stone != Some(true)
            {
                witness = Some(format!(
                    "not a Kleene–Stone lattice (distributive={}, pseudocomplemented={}, \
                     stone={:?})",
                    stone.distributive, stone.pseudocomplemented, stone.stone
                ));
            } else {
                let star = star_neg(&dm).expect("pseudocomplemented");
                for i in 0..dm.len() {
                    let bc = dm.pair(i).upper.complement();
                    if dm.pair(star.apply(i)) != &RoughPair::new(bc.clone(), bc.clone()) {
                        witness = Some(format!(
                            "the pseudocomplement of {} is not (Bᶜ,Bᶜ)",
                            fmt(i)
                        ));
                        break;
                    }
                }
                if witness.is_none() {
                    let report = check_bz_axioms(&dm, &star);
                    if !report.is_pbz_star {
                        witness = Some(
                            "the pseudocomplement is not a paraorthomodular ∗-negation"
                                .to_string(),
                        );
                    }
                }
            }
            verdict(
                witness,
                "for an equivalence the pairs form a Kleene–Stone lattice whose \
                 pseudocomplement (A,B)∗ = (Bᶜ,Bᶜ) satisfies all Brouwer–Zadeh \
                 axioms and the ∗-condition",
            )
        };
        push(&mut items, "equivalence_rs_kleene_stone_pbz_star", s, d);
    }

    // --- kleene_stone_pbz_star -----------------------------------------------------------------------------------
    {
        let applicable =
            stone.distributive && stone.pseudocomplemented && stone.stone == Some(true);
        let (s, d) = if !applicable {
            (
                Status::Skipped,
                format!(
                    "the completion is not a Kleene–Stone lattice (distributive={}, \
                     pseudocomplemented={}, stone={:?})",
                    stone.distributive, stone.pseudocomplemented, stone.stone
                ),
            )
        } else {
            let star = star_neg(&dm).expect("pseudocomplemented");
            let report = check_bz_axioms(&dm, &star);
            let witness = if !report.is_pbz_star {
                Some(format!(
                    "the pseudocomplement fails (axioms: bz1 {:?}, bz2 {:?}, bz3 {:?}, \
                     bz4 {:?}, ∗-condition {:?})",
                    report.bz1.map(&fmt),
                    report.bz2.map(&fmt),
                    report.bz3.map(|(a, b)| format!("{}, {}", fmt(a), fmt(b))),
                    report.bz4.map(&fmt),
                    report.star_condition.map(&fmt),
                ))
            } else {
                None
            };
            verdict(
                witness,
                "on a Kleene–Stone completion (where sharp and complemented coincide) \
                 the pseudocomplement is a paraorthomodular ∗-negation",
            )
        };
        push(&mut items, "kleene_stone_pbz_star", s, d);
    }

    // --- pbz_negations_match_extending_equivalences ------------------------------------------------------------------
    {
        let applicable = flags.quasiorder || flags.irredundant_covering_tolerance;
        let (s, d) = if !applicable {
            (
                Status::Skipped,
                "the relation is neither a quasiorder nor a tolerance induced by an \
                 irredundant covering"
                    .to_string(),
            )
        } else {
            match (&pool.structures, &pool.equivalences) {
                (Some(structures), Some(eqs)) => {
                    let from_atoms: BTreeSet<Vec<usize>> =
                        structures.iter().map(|st| st.neg.table().to_vec()).collect();
                    let from_eqs: BTreeSet<Vec<usize>> =
                        eqs.iter().map(|(_, n)| n.table().to_vec()).collect();
                    let witness = if from_atoms != from_eqs {
                        Some(format!(
                            "{} subortholattice negations vs {} extending-equivalence \
                             negations, and the sets differ",
                            from_atoms.len(),
                            from_eqs.len()
                        ))
                    } else {
                        None
                    };
                    verdict(
                        witness,
                        "every paraorthomodular negation comes from an extending \
                         equivalence, and conversely",
                    )
                }
                _ => pool_skip("negation"),
            }
        };
        push(&mut items, "pbz_negations_match_extending_equivalences", s, d);
    }

    // --- quasiorder_pbz_star_iff_re -------------------------------------------------------------------------------------
    {
        let (s, d) = if !flags.quasiorder {
            (Status::Skipped, "the relation is not a quasiorder".to_string())
        } else {
            match &pool.equivalences {
                None => pool_skip("extending-equivalence"),
                Some(eqs) => {
                    let mut witness = None;
                    for (part, neg) in eqs {
                        let is_star = check_bz_axioms(&dm, neg).is_pbz_star;
                        let is_re = *part == re_partition;
                        if is_star != is_re {
                            witness = Some(format!(
                                "the negation from {} satisfies the ∗-condition: {}, \
                                 but it {} the equivalence closure",
                                part.spec_string(),
                                is_star,
                                if is_re { "is" } else { "is not" },
                            ));
                            break;
                        }
                    }
                    verdict(
                        witness,
                        "an extending equivalence yields a ∗-negation exactly when it \
                         is the equivalence closure of the relation",
                    )
                }
            }
        };
        push(&mut items, "quasiorder_pbz_star_iff_re", s, d);
    }

    // --- star_set_condition_agreement ------------------------------------------------------------------------------------
    {
        let (s, d) = if !flags.quasiorder {
            (Status::Skipped, "the relation is not a quasiorder".to_string())
        } else {
            match &pool.equivalences {
                None => pool_skip("extending-equivalence"),
                Some(eqs) => {
                    let mut witness = None;
                    for (part, neg) in eqs {
                        let by_axiom = check_bz_axioms(&dm, neg).star_condition.is_none();
                        let by_sets = star_set_condition(&dm, part).is_none();
                        if by_axiom != by_sets {
                            witness = Some(format!(
                                "for the extending equivalence {}: the lattice \
                                 ∗-condition holds: {}, the set inclusion \
                                 (A ∪ Bᶜ)^↓ ⊆ A^↓ ∪ Bᶜ^↓ holds: {}",
                                part.spec_string(),
                                by_axiom,
                                by_sets,
                            ));
                            break;
                        }
                    }
                    verdict(
                        witness,
                        "the ∗-condition is equivalent to its set-level form for every \
                         extending equivalence",
                    )
                }
            }
        };
        push(&mut items, "star_set_condition_agreement", s, d);
    }

    // --- antiortholattice_iff_full_re -------------------------------------------------------------------------------------
    {
        let applicable = flags.quasiorder || flags.irredundant_covering_tolerance;
        let (s, d) = if !applicable {
            (
                Status::Skipped,
                "the relation is neither a quasiorder nor a tolerance induced by an \
                 irredundant covering"
                    .to_string(),
            )
        } else {
            match &pool.equivalences {
                None => pool_skip("extending-equivalence"),
                Some(eqs) => {
                    let full = re_partition.len() == 1;
                    let got = eqs.iter().any(|(_, neg)| {
                        is_antiortholattice(&dm, neg) && check_bz_axioms(&dm, neg).is_pbz_star
                    });
                    let mut witness = if got != full {
                        Some(format!(
                            "an antiortholattice negation {} definable but the \
                             equivalence closure {} the full relation",
                            if got { "is" } else { "is not" },
                            if full { "is" } else { "is not" },
                        ))
                    } else {
                        None
                    };
                    if witness.is_none() && full {
                        if let Some((_, neg)) =
                            eqs.iter().find(|(p, _)| *p == re_partition)
                        {
                            let ok = (0..dm.len()).all(|x| {
                                if x == lat.bottom() {
                                    neg.apply(x) == lat.top()
                                } else {
                                    neg.apply(x) == lat.bottom()
                                }
                            });
                            if !ok {
                                witness = Some(
                                    "the negation from the full closure is not the \
                                     all-or-nothing map"
                                        .to_string(),
                                );
                            }
                        }
                    }
                    verdict(
                        witness,
                        "an antiortholattice structure exists exactly when the \
                         equivalence closure is the full relation, and is then the \
                         all-or-nothing negation",
                    )
                }
            }
        };
        push(&mut items, "antiortholattice_iff_full_re", s, d);
    }

    // --- stone_composite_orders (informational) --------------------------------------------------------------------------
    {
        let mut detail = format!(
            "pseudocomplemented: {}; satisfies x∗ ∨ x∗∗ = 1: {}; distributive: {}; \
             R;R⁻¹ equals the equivalence closure: {}; R⁻¹;R equals it: {}",
            stone.pseudocomplemented,
            stone.stone.map(|b| b.to_string()).unwrap_or_else(|| "n/a".to_string()),
            stone.distributive,
            stone.r_then_rinv_equals_re,
            stone.rinv_then_r_equals_re,
        );
        if flags.quasiorder {
            let is_stone = stone.pseudocomplemented && stone.stone == Some(true);
            detail.push_str(&format!(
                "; Stone ⟺ R;R⁻¹ = closure: {}; Stone ⟺ R⁻¹;R = closure: {}",
                is_stone == stone.r_then_rinv_equals_re,
                is_stone == stone.rinv_then_r_equals_re,
            ));
        }
        push(&mut items, "stone_composite_orders", Status::Info, detail);
    }

    debug_assert_eq!(
        items.iter().map(|it| it.id.as_str()).collect::<Vec<_>>(),
        REQUIRED_ITEMS.to_vec(),
        "suite items drifted from REQUIRED_ITEMS"
    );

    let count = |status: Status| items.iter().filter(|it| it.status == status).count();
    Ok(TheoremSuiteReport {
        universe: u.labels().to_vec(),
        neighborhoods: (0..n).map(|i| u.format_subset(relation.row(i))).collect(),
        flags,
        rs_size: rs.len(),
        dm_size: dm.len(),
        added_by_completion: dm.len() - rs.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        informational: count(Status::Info),
        skipped: count(Status::Skipped),
        items,
    })
}

fn collapse_check(
    sharp: &[usize],
    center: &[usize],
    exact: &[usize],
    fmt: &impl Fn(usize) -> String,
) -> (Status, String) {
    let s: BTreeSet<usize> = sharp.iter().copied().collect();
    let c: BTreeSet<usize> = center.iter().copied().collect();
    let e: BTreeSet<usize> = exact.iter().copied().collect();
    if s == c && c == e {
        (
            Status::Pass,
            format!(
                "sharp, complemented, central, and exact elements all coincide \
                 ({} elements)",
                s.len()
            ),
        )
    } else {
        let show = |set: &BTreeSet<usize>| {
            set.iter().map(|&i| fmt(i)).collect::<Vec<_>>().join(", ")
        };
        (
            Status::Fail,
            format!(
                "sharp = {{{}}}, central = {{{}}}, exact = {{{}}}",
                show(&s),
                show(&c),
                show(&e)
            ),
        )
    }
}

/// How the miner chooses relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum MineMode {
    /// All `2^(n²−n)` reflexive relations, in counting order.
    Exhaustive,
    /// `count` relations drawn with a seeded deterministic generator
    /// (duplicates possible).
    Sample { count: usize, seed: u64 },
}

/// Miner configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MineConfig {
    /// Universe size.
    pub n: usize,
    #[serde(flatten)]
    pub mode: MineMode,
    /// Only check relations in this class (reflexivity is always required).
    pub filter: Option<RelationClass>,
}

/// A relation on which at least one suite item failed, with those items.
#[derive(Debug, Clone, Serialize)]
pub struct MineFailure {
    pub neighborhoods: Vec<String>,
    pub items: Vec<ItemReport>,
}

/// Result of a mining run.
#[derive(Debug, Clone, Serialize)]
pub struct MineOutcome {
    pub config: MineConfig,
    pub universe: Vec<String>,
    /// Relations enumerated or drawn.
    pub considered: usize,
    /// Relations rejected by the class filter.
    pub filtered_out: usize,
    /// Relations actually run through the suite.
    pub checked: usize,
    pub failing_relations: Vec<MineFailure>,
    /// Failure tallies per item id, over all checked relations.
    pub item_failure_counts: BTreeMap<String, usize>,
}

/// Exhaustive mining is limited to this universe size; beyond it the sweep
/// would exceed `2^20` relations.
pub const MAX_EXHAUSTIVE_MINE: usize = 4;

/// Runs the theorem suite over many relations and collects the failures.
pub fn mine(config: &MineConfig, caps: &Caps) -> Result<MineOutcome> {
    let universe = Universe::letters(config.n);
    let mut outcome = MineOutcome {
        config: *config,
        universe: universe.labels().to_vec(),
        considered: 0,
        filtered_out: 0,
        checked: 0,
        failing_relations: Vec::new(),
        item_failure_counts: BTreeMap::new(),
    };
    let handle = |relation: Relation, outcome: &mut MineOutcome| -> Result<()> {
        outcome.considered += 1;
        if let Some(class) = config.filter {
            if !class.matches(&relation.classify()) {
                outcome.filtered_out += 1;
                return Ok(());
            }
        }
        outcome.checked += 1;
        let report = run_theorem_suite(&relation, caps)?;
        let failing: Vec<ItemReport> =
            report.items.into_iter().filter(|it| it.status == Status::Fail).collect();
        if !failing.is_empty() {
            for it in &failing {
                *outcome.item_failure_counts.entry(it.id.clone()).or_insert(0) += 1;
            }
            outcome.failing_relations.push(MineFailure {
                neighborhoods: report.neighborhoods,
                items: failing,
            });
        }
        Ok(())
    };
    match config.mode {
        MineMode::Exhaustive => {
            if config.n > MAX_EXHAUSTIVE_MINE {
                return Err(Error::CapExceeded {
                    what: "exhaustive relation sweep",
                    required: config.n,
                    cap: MAX_EXHAUSTIVE_MINE,
                });
            }
            for relation in enumerate_reflexive_relations(config.n)? {
                handle(relation, &mut outcome)?;
            }
        }
        MineMode::Sample { count, seed } => {
            let bits = config.n * config.n - config.n;
            if bits >= 63 {
                return Err(Error::CapExceeded {
                    what: "sampled relation sweep",
                    required: config.n,
                    cap: 8,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let word = rng.gen_range(0..(1u64 << bits));
                handle(relation_from_word(&universe, word), &mut outcome)?;
            }
        }
    }
    Ok(outcome)
}
