//! The concrete completion `DM(RS)` of the approximation-pair family, and an
//! independent Dedekind–MacNeille oracle built from normal cuts.
//!
//! `DM(RS)` consists of the pairs
//!
//! ```text
//! { (A, B) ∈ ℘(U)^▼ × ℘(U)^▲  :  A^{△▲} ⊆ B  and  A ∩ 𝒮 = B ∩ 𝒮 }
//! ```
//!
//! where `𝒮 = { x : |R(x)| = 1 }`. Ordered componentwise it is a complete
//! lattice with
//!
//! ```text
//! (A,B) ∨ (C,D) = ((A ∪ C)^{△▼}, B ∪ D)
//! (A,B) ∧ (C,D) = (A ∩ C, (B ∩ D)^{▽▲})
//! ∼(A,B)        = (Bᶜ, Aᶜ)
//! ```
//!
//! and it contains every approximation pair. The oracle instead completes
//! the bare poset `RS` by closing the principal ideals under intersection;
//! the two constructions are compared by isomorphism search that pins each
//! approximation pair to its principal cut.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::approx::{ApproxSpace, Bound, Direction};
use crate::bits::BitVec;
use crate::lattice::{isomorphism_fixing, FiniteLattice, Involution};
use crate::rough::{RoughPair, RsFamily};
use crate::{Caps, Error, Result};

/// `𝒮`: the points whose neighbourhood is a singleton (under reflexivity,
/// exactly the points related only to themselves).
pub fn singleton_set(space: &ApproxSpace) -> BitVec {
    let n = space.size();
    let mut s = BitVec::new(n);
    for i in 0..n {
        if space.relation().row(i).count() == 1 {
            s.set(i, true);
        }
    }
    s
}

/// Why a pair does or does not belong to `DM(RS)`, condition by condition.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MembershipConditions {
    /// `A = A^{△▼}`.
    pub lower_definable: bool,
    /// `B = B^{▽▲}`.
    pub upper_definable: bool,
    /// `A^{△▲} ⊆ B`.
    pub closure_bound: bool,
    /// `A ∩ 𝒮 = B ∩ 𝒮`.
    pub singleton_agreement: bool,
    pub member: bool,
}

pub fn dm_membership(space: &ApproxSpace, a: &BitVec, b: &BitVec) -> MembershipConditions {
    let s = singleton_set(space);
    let lower_definable = space.is_definable(a, Direction::Forward, Bound::Lower);
    let upper_definable = space.is_definable(b, Direction::Forward, Bound::Upper);
    let closure = space.upper(&space.upper(a, Direction::Inverse), Direction::Forward);
    let closure_bound = closure.is_subset(b);
    let singleton_agreement = a.inter(&s) == b.inter(&s);
    MembershipConditions {
        lower_definable,
        upper_definable,
        closure_bound,
        singleton_agreement,
        member: lower_definable && upper_definable && closure_bound && singleton_agreement,
    }
}

/// The completion as a concrete pair family with its order, lattice tables,
/// and Kleene involution.
pub struct DmLattice {
    space: ApproxSpace,
    rs: RsFamily,
    pairs: Vec<RoughPair>,
    index: BTreeMap<(BitVec, BitVec), usize>,
    lattice: FiniteLattice,
    kleene: Involution,
    in_rs: Vec<bool>,
    rs_to_dm: Vec<usize>,
}

impl DmLattice {
    pub fn build(space: &ApproxSpace, caps: &Caps) -> Result<Self> {
        let n = space.size();
        if n > caps.dm {
            return Err(Error::CapExceeded {
                what: "DM(RS) enumeration",
                required: n,
                cap: caps.dm,
            });
        }
        let rs = RsFamily::build(space, caps.rs.max(caps.dm))?;
        let s = singleton_set(space);
        let lowers = space.definable_family(Direction::Forward, Bound::Lower, caps.dm)?;
        let uppers = space.definable_family(Direction::Forward, Bound::Upper, caps.dm)?;
        let mut pairs = Vec::new();
        for a in &lowers {
            let closure = space.upper(&space.upper(a, Direction::Inverse), Direction::Forward);
            let a_s = a.inter(&s);
            for b in &uppers {
                if closure.is_subset(b) && a_s == b.inter(&s) {
                    pairs.push(RoughPair::new(a.clone(), b.clone()));
                }
            }
        }
        pairs.sort();
        if pairs.len() > caps.oracle {
            return Err(Error::CapExceeded {
                what: "DM(RS) lattice construction",
                required: pairs.len(),
                cap: caps.oracle,
            });
        }
        let mut index = BTreeMap::new();
        for (i, p) in pairs.iter().enumerate() {
            index.insert((p.lower.clone(), p.upper.clone()), i);
        }
        let mut rs_to_dm = Vec::with_capacity(rs.len());
        for p in rs.pairs() {
            let at = index.get(&(p.lower.clone(), p.upper.clone())).copied().ok_or_else(
                || {
                    Error::CharacterizationDisagreement(format!(
                        "approximation pair {} failed the completion membership conditions",
                        p.format(space.universe())
                    ))
                },
            )?;
            rs_to_dm.push(at);
        }
        let lattice = FiniteLattice::from_leq(pairs.len(), |i, j| pairs[i].leq(&pairs[j]))?;
        let mut neg = Vec::with_capacity(pairs.len());
        for p in &pairs {
            let q = p.kleene();
            let at = index.get(&(q.lower.clone(), q.upper.clone())).copied().ok_or_else(
                || {
                    Error::CharacterizationDisagreement(format!(
                        "∼{} is not in the completion",
                        p.format(space.universe())
                    ))
                },
            )?;
            neg.push(at);
        }
        let kleene = Involution::new(&lattice, neg)?;
        let in_rs = pairs.iter().map(|p| rs.contains(p)).collect();
        Ok(DmLattice { space: space.clone(), rs, pairs, index, lattice, kleene, in_rs, rs_to_dm })
    }

    pub fn space(&self) -> &ApproxSpace {
        &self.space
    }

    pub fn rs(&self) -> &RsFamily {
        &self.rs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[RoughPair] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> &RoughPair {
        &self.pairs[i]
    }

    pub fn index_of(&self, pair: &RoughPair) -> Option<usize> {
        self.index.get(&(pair.lower.clone(), pair.upper.clone())).copied()
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn kleene(&self) -> &Involution {
        &self.kleene
    }

    pub fn neg(&self, i: usize) -> usize {
        self.kleene.apply(i)
    }

    pub fn in_rs(&self, i: usize) -> bool {
        self.in_rs[i]
    }

    /// Completion index of the `i`-th approximation pair.
    pub fn dm_index_of_rs(&self, i: usize) -> usize {
        self.rs_to_dm[i]
    }

    /// `(A,B) ∨ (C,D) = ((A ∪ C)^{△▼}, B ∪ D)` computed from the formula,
    /// not the order tables.
    pub fn join_formula(&self, i: usize, j: usize) -> RoughPair {
        let a = self.pairs[i].lower.union(&self.pairs[j].lower);
        let b = self.pairs[i].upper.union(&self.pairs[j].upper);
        RoughPair::new(
            self.space.lower(&self.space.upper(&a, Direction::Inverse), Direction::Forward),
            b,
        )
    }

    /// `(A,B) ∧ (C,D) = (A ∩ C, (B ∩ D)^{▽▲})` computed from the formula.
    pub fn meet_formula(&self, i: usize, j: usize) -> RoughPair {
        let a = self.pairs[i].lower.inter(&self.pairs[j].lower);
        let b = self.pairs[i].upper.inter(&self.pairs[j].upper);
        RoughPair::new(
            a,
            self.space.upper(&self.space.lower(&b, Direction::Inverse), Direction::Forward),
        )
    }
}

/// A Dedekind–MacNeille completion computed directly from a finite poset:
/// the normal cuts are exactly the intersections of principal ideals
/// (including the empty intersection, the whole poset).
pub struct CutLattice {
    pub lattice: FiniteLattice,
    /// Each cut as a subset of poset indices, in (size, numeric) order.
    pub cuts: Vec<BitVec>,
    /// Poset element `i` ↦ index of the principal cut `↓i`.
    pub principal: Vec<usize>,
}

pub fn macneille_oracle(
    n: usize,
    leq: impl Fn(usize, usize) -> bool,
    cap: usize,
) -> Result<CutLattice> {
    let mut seeds: Vec<BitVec> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut ideal = BitVec::new(n);
        for j in 0..n {
            if leq(j, i) {
                ideal.set(j, true);
            }
        }
        seeds.push(ideal);
    }
    seeds.push(BitVec::full(n));
    let mut cuts: BTreeSet<BitVec> = seeds.iter().cloned().collect();
    loop {
        let snapshot: Vec<BitVec> = cuts.iter().cloned().collect();
        let before = cuts.len();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                cuts.insert(snapshot[i].inter(&snapshot[j]));
                if cuts.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "normal-cut closure",
                        required: cuts.len(),
                        cap,
                    });
                }
            }
        }
        if cuts.len() == before {
            break;
        }
    }
    let mut cuts: Vec<BitVec> = cuts.into_iter().collect();
    cuts.sort_by_key(|c| (c.count(), c.clone()));
    let lattice = FiniteLattice::from_leq(cuts.len(), |i, j| cuts[i].is_subset(&cuts[j]))?;
    let principal = seeds[..n]
        .iter()
        .map(|ideal| cuts.binary_search_by_key(&(ideal.count(), ideal.clone()), |c| (c.count(), c.clone())).expect("principal ideal is a cut"))
        .collect();
    Ok(CutLattice { lattice, cuts, principal })
}

/// Compares the pair-family completion against the normal-cut oracle,
/// demanding an isomorphism that sends each approximation pair to its
/// principal cut. Returns the mapping if one exists.
pub fn dm_vs_oracle(dm: &DmLattice, cap: usize) -> Result<Option<Vec<usize>>> {
    let rs = dm.rs();
    let oracle = macneille_oracle(rs.len(), |i, j| rs.leq(i, j), cap)?;
    if oracle.lattice.len() != dm.len() {
        return Ok(None);
    }
    let fixed: Vec<(usize, usize)> =
        (0..rs.len()).map(|i| (dm.dm_index_of_rs(i), oracle.principal[i])).collect();
    Ok(isomorphism_fixing(dm.lattice(), &oracle.lattice, &fixed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::harness::enumerate_reflexive_relations;

    fn dm(rel: crate::relation::Relation) -> DmLattice {
        DmLattice::build(&ApproxSpace::new(rel), &Caps::default()).unwrap()
    }

    #[test]
    fn staircase_completion_adds_nothing() {
        let d = dm(fixtures::staircase());
        assert_eq!(d.len(), 8);
        assert!((0..d.len()).all(|i| d.in_rs(i)));
        assert_eq!(singleton_set(d.space()).iter_ones().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn staircase_membership_echo() {
        let space = ApproxSpace::new(fixtures::staircase());
        let u = space.universe().clone();
        let a = u.parse_subset("a").unwrap();
        let bad = dm_membership(&space, &a, &a);
        assert!(bad.lower_definable && !bad.closure_bound && !bad.member);
        let good = dm_membership(&space, &a, &u.parse_subset("ab").unwrap());
        assert!(good.member);
        // {b} is not even lower-definable.
        let b = u.parse_subset("b").unwrap();
        assert!(!dm_membership(&space, &b, &b).lower_definable);
    }

    #[test]
    fn path_tolerance_completion_adds_exactly_two_pairs() {
        let d = dm(fixtures::path_tolerance());
        let added: Vec<usize> = (0..d.len()).filter(|&i| !d.in_rs(i)).collect();
        assert_eq!(added.len(), 2);
        assert_eq!(d.len(), d.rs().len() + 2);
        // The added pairs still satisfy the membership predicate.
        for i in added {
            let p = d.pair(i);
            assert!(dm_membership(d.space(), &p.lower, &p.upper).member);
        }
    }

    #[test]
    fn quasiorder_and_equivalence_completions_add_nothing() {
        let d3 = dm(fixtures::arrow_quasiorder());
        assert_eq!(d3.len(), 8);
        assert!((0..d3.len()).all(|i| d3.in_rs(i)));
        let d4 = dm(fixtures::two_block_equivalence());
        assert_eq!(d4.len(), 6);
        assert!((0..d4.len()).all(|i| d4.in_rs(i)));
    }

    #[test]
    fn formula_join_meet_match_order_tables() {
        for rel in [
            fixtures::staircase(),
            fixtures::path_tolerance(),
            fixtures::arrow_quasiorder(),
            fixtures::two_block_equivalence(),
        ] {
            let d = dm(rel);
            for i in 0..d.len() {
                for j in 0..d.len() {
                    assert_eq!(&d.join_formula(i, j), d.pair(d.lattice().join(i, j)));
                    assert_eq!(&d.meet_formula(i, j), d.pair(d.lattice().meet(i, j)));
                }
            }
        }
    }

    #[test]
    fn kleene_involution_and_bounds() {
        let d = dm(fixtures::path_tolerance());
        let lat = d.lattice();
        assert_eq!(d.pair(lat.bottom()).format(d.space().universe()), "(∅,∅)");
        assert!(d.pair(lat.top()).lower.is_full());
        for i in 0..d.len() {
            assert_eq!(d.neg(d.neg(i)), i);
        }
    }

    #[test]
    fn oracle_on_a_four_crown_poset() {
        // ⊥, two incomparable middles, ⊤ — already a lattice, so the
        // completion is itself.
        let cut = macneille_oracle(4, |i, j| i == j || i == 0 || j == 3, 4096).unwrap();
        assert_eq!(cut.lattice.len(), 4);
        // An antichain of two points: completion must add ⊥ and ⊤.
        let cut = macneille_oracle(2, |i, j| i == j, 4096).unwrap();
        assert_eq!(cut.lattice.len(), 4);
        assert_ne!(cut.principal[0], cut.principal[1]);
    }

    #[test]
    fn oracle_cap_is_enforced() {
        assert!(matches!(
            macneille_oracle(6, |i, j| i == j, 4),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn completion_matches_oracle_on_fixtures() {
        for rel in [
            fixtures::staircase(),
            fixtures::path_tolerance(),
            fixtures::arrow_quasiorder(),
            fixtures::two_block_equivalence(),
        ] {
            let d = dm(rel);
            let mapping = dm_vs_oracle(&d, 4096).unwrap().expect("isomorphism pinning RS");
            let rs = d.rs();
            let oracle = macneille_oracle(rs.len(), |a, b| rs.leq(a, b), 4096).unwrap();
            for i in 0..rs.len() {
                // Principal cuts are where the approximation pairs land.
                assert_eq!(mapping[d.dm_index_of_rs(i)], oracle.principal[i]);
            }
        }
    }

    #[test]
    fn completion_matches_oracle_exhaustively_n3() {
        for rel in enumerate_reflexive_relations(3).unwrap() {
            let d = DmLattice::build(&ApproxSpace::new(rel), &Caps::default()).unwrap();
            assert!(dm_vs_oracle(&d, 4096).unwrap().is_some());
        }
    }
}
