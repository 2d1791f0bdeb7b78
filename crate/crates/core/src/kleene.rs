//! Kleene-negation structure on the completion: sharp elements, the center,
//! neutrality, and the `φ/ψ` isomorphisms onto the doubly definable sets.

use serde::Serialize;

use crate::approx::{ApproxSpace, Bound, Direction};
use crate::bits::BitVec;
use crate::completion::DmLattice;
use crate::lattice::{FiniteLattice, Involution};
use crate::rough::RoughPair;
use crate::Result;

/// Poset form of the normality law: every common lower bound of `{x, σx}`
/// lies below every common upper bound of `{y, σy}`. Returns a violating
/// quadruple `(x, y, l, u)` if any.
pub fn kleene_poset_witness(
    n: usize,
    leq: impl Fn(usize, usize) -> bool,
    neg: impl Fn(usize) -> usize,
) -> Option<(usize, usize, usize, usize)> {
    for x in 0..n {
        let nx = neg(x);
        for y in 0..n {
            let ny = neg(y);
            for l in (0..n).filter(|&l| leq(l, x) && leq(l, nx)) {
                for u in (0..n).filter(|&u| leq(y, u) && leq(ny, u)) {
                    if !leq(l, u) {
                        return Some((x, y, l, u));
                    }
                }
            }
        }
    }
    None
}

/// First pair violating `x ∧ σx ≤ y ∨ σy`, if any.
pub fn pseudo_kleene_witness(lat: &FiniteLattice, inv: &Involution) -> Option<(usize, usize)> {
    for x in 0..lat.len() {
        let lo = lat.meet(x, inv.apply(x));
        for y in 0..lat.len() {
            if !lat.leq(lo, lat.join(y, inv.apply(y))) {
                return Some((x, y));
            }
        }
    }
    None
}

/// First pair violating paraorthomodularity: `x ≤ y` and `σx ∧ y = 0` but
/// `x ≠ y`.
pub fn paraorthomodular_witness(lat: &FiniteLattice, inv: &Involution) -> Option<(usize, usize)> {
    for x in 0..lat.len() {
        for y in lat.up_set(x).iter_ones() {
            if y != x && lat.meet(inv.apply(x), y) == lat.bottom() {
                return Some((x, y));
            }
        }
    }
    None
}

/// Both sides of `x ∧ (σx ∨ y) = (x ∧ σx) ∨ (x ∧ y)`.
pub fn chajda_sides(
    lat: &FiniteLattice,
    inv: &Involution,
    x: usize,
    y: usize,
) -> (usize, usize) {
    let lhs = lat.meet(x, lat.join(inv.apply(x), y));
    let rhs = lat.join(lat.meet(x, inv.apply(x)), lat.meet(x, y));
    (lhs, rhs)
}

/// First pair where that identity fails, if any.
pub fn chajda_identity_witness(lat: &FiniteLattice, inv: &Involution) -> Option<(usize, usize)> {
    for x in 0..lat.len() {
        for y in 0..lat.len() {
            let (l, r) = chajda_sides(lat, inv, x, y);
            if l != r {
                return Some((x, y));
            }
        }
    }
    None
}

/// The order-free sharpness criterion: `(A,B)` is sharp iff `B^▽ = A^△`.
pub fn sharp_criterion(space: &ApproxSpace, pair: &RoughPair) -> bool {
    space.lower(&pair.upper, Direction::Inverse) == space.upper(&pair.lower, Direction::Inverse)
}

/// Sharpness read off the Kleene negation: `x ∧ ∼x = 0` and `x ∨ ∼x = 1`.
pub fn sharp_by_kleene_complement(dm: &DmLattice, i: usize) -> bool {
    let lat = dm.lattice();
    let ni = dm.neg(i);
    lat.meet(i, ni) == lat.bottom() && lat.join(i, ni) == lat.top()
}

/// Completion indices of the sharp elements (`𝒞`), via the criterion.
pub fn sharp_indices(dm: &DmLattice) -> Vec<usize> {
    (0..dm.len()).filter(|&i| sharp_criterion(dm.space(), dm.pair(i))).collect()
}

/// `φ(A,B) = A^△`, mapping sharp pairs to doubly definable sets.
pub fn phi(space: &ApproxSpace, pair: &RoughPair) -> BitVec {
    space.upper(&pair.lower, Direction::Inverse)
}

/// `ψ(Z) = (Z^▼, Z^▲)`, the inverse direction.
pub fn psi(space: &ApproxSpace, z: &BitVec) -> RoughPair {
    RoughPair::of(space, z)
}

/// Both sides of the median identity
/// `(z∧x)∨(x∧y)∨(y∧z) = (z∨x)∧(x∨y)∧(y∨z)`.
pub fn median_sides(lat: &FiniteLattice, z: usize, x: usize, y: usize) -> (usize, usize) {
    let lhs = lat.join_of([lat.meet(z, x), lat.meet(x, y), lat.meet(y, z)]);
    let rhs = lat.meet_of([lat.join(z, x), lat.join(x, y), lat.join(y, z)]);
    (lhs, rhs)
}

/// An element is neutral when the median identity holds with it in any slot.
pub fn is_neutral(lat: &FiniteLattice, z: usize) -> bool {
    for x in 0..lat.len() {
        for y in 0..lat.len() {
            let (l, r) = median_sides(lat, z, x, y);
            if l != r {
                return false;
            }
        }
    }
    true
}

/// The center as complemented neutral elements.
pub fn center_by_neutrality(lat: &FiniteLattice) -> Vec<usize> {
    (0..lat.len())
        .filter(|&z| !lat.complements_of(z).is_empty() && is_neutral(lat, z))
        .collect()
}

/// The center as sharp elements splitting every `x` two ways:
/// `x = (x∧a) ∨ (x∧∼a)` and `x = (x∨a) ∧ (x∨∼a)`.
pub fn center_by_split(lat: &FiniteLattice, inv: &Involution) -> Vec<usize> {
    (0..lat.len())
        .filter(|&a| {
            let na = inv.apply(a);
            lat.meet(a, na) == lat.bottom()
                && lat.join(a, na) == lat.top()
                && (0..lat.len()).all(|x| {
                    lat.join(lat.meet(x, a), lat.meet(x, na)) == x
                        && lat.meet(lat.join(x, a), lat.join(x, na)) == x
                })
        })
        .collect()
}

/// The center computed set-theoretically: sharp pairs `(A,B)` such that
/// every `▼`-definable `X` satisfies `X = ((X∩A) ∪ (X∩Bᶜ))^{△▼}`.
pub fn center_by_definable_split(dm: &DmLattice, cap: usize) -> Result<Vec<usize>> {
    let space = dm.space();
    let lowers = space.definable_family(Direction::Forward, Bound::Lower, cap)?;
    Ok((0..dm.len())
        .filter(|&i| {
            if !sharp_criterion(space, dm.pair(i)) {
                return false;
            }
            let a = &dm.pair(i).lower;
            let bc = dm.pair(i).upper.complement();
            lowers.iter().all(|x| {
                let split = x.inter(a).union(&x.inter(&bc));
                space.lower(&space.upper(&split, Direction::Inverse), Direction::Forward) == *x
            })
        })
        .collect())
}

/// Canonical center: the neutrality route on the completion lattice.
pub fn center(dm: &DmLattice) -> Vec<usize> {
    center_by_neutrality(dm.lattice())
}

/// Structure report for the sharp family `𝒞` inside the completion.
#[derive(Debug, Clone, Serialize)]
pub struct CFamilyReport {
    pub size: usize,
    pub indices: Vec<usize>,
    pub all_in_rs: bool,
    pub kleene_closed: bool,
    pub is_sublattice_of_dm: bool,
    pub induced_is_lattice: bool,
    pub induced_modular: bool,
    pub induced_distributive: bool,
    pub induced_uniquely_complemented: bool,
}

pub fn c_family_analysis(dm: &DmLattice) -> CFamilyReport {
    let indices = sharp_indices(dm);
    let mut subset = BitVec::new(dm.len());
    for &i in &indices {
        subset.set(i, true);
    }
    let all_in_rs = indices.iter().all(|&i| dm.in_rs(i));
    let kleene_closed = indices.iter().all(|&i| subset.get(dm.neg(i)));
    let is_sublattice_of_dm = dm.lattice().is_sublattice(&subset);
    let induced = dm.lattice().induced_order_lattice(&subset);
    let (induced_is_lattice, induced_modular, induced_distributive, induced_uniquely_complemented) =
        match induced {
            Ok((lat, _)) => (
                true,
                lat.is_modular(),
                lat.is_distributive(),
                lat.is_uniquely_complemented(),
            ),
            Err(_) => (false, false, false, false),
        };
    CFamilyReport {
        size: indices.len(),
        indices,
        all_in_rs,
        kleene_closed,
        is_sublattice_of_dm,
        induced_is_lattice,
        induced_modular,
        induced_distributive,
        induced_uniquely_complemented,
    }
}

/// Enumerates the ∼-closed subsets of `𝒞` containing the bounds that are
/// closed under the completion's join and meet. Exhaustive over ∼-orbits
/// when there are at most `orbit_limit` of them; otherwise falls back to the
/// deterministic family of one-orbit subsets plus all of `𝒞`.
pub fn sharp_subortholattices(dm: &DmLattice, orbit_limit: usize) -> Vec<BitVec> {
    let lat = dm.lattice();
    let sharp = sharp_indices(dm);
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut seen = BitVec::new(dm.len());
    for &i in &sharp {
        if i == lat.bottom() || i == lat.top() || seen.get(i) {
            continue;
        }
        let ni = dm.neg(i);
        seen.set(i, true);
        seen.set(ni, true);
        let mut orbit = vec![i];
        if ni != i {
            orbit.push(ni);
        }
        orbits.push(orbit);
    }
    let base = {
        let mut b = BitVec::new(dm.len());
        b.set(lat.bottom(), true);
        b.set(lat.top(), true);
        b
    };
    let candidates: Vec<BitVec> = if orbits.len() <= orbit_limit {
        (0u64..1 << orbits.len())
            .map(|mask| {
                let mut s = base.clone();
                for (k, orbit) in orbits.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        for &i in orbit {
                            s.set(i, true);
                        }
                    }
                }
                s
            })
            .collect()
    } else {
        let mut out = vec![base.clone()];
        for orbit in &orbits {
            let mut s = base.clone();
            for &i in orbit {
                s.set(i, true);
            }
            out.push(s);
        }
        let mut all = base.clone();
        for orbit in &orbits {
            for &i in orbit {
                all.set(i, true);
            }
        }
        out.push(all);
        out
    };
    candidates.into_iter().filter(|s| lat.is_sublattice(s)).collect()
}

/// Per-element summary used by the `check` command: where the pair sits in
/// the families and which of the special-element predicates it satisfies.
#[derive(Debug, Clone, Serialize)]
pub struct ElementAnalysis {
    pub index: usize,
    pub pair: String,
    pub in_rs: bool,
    /// Sets `X` with `(X^▼, X^▲)` equal to this pair.
    pub generators: Vec<String>,
    pub kleene: String,
    pub sharp: bool,
    pub complemented: bool,
    pub complements: Vec<String>,
    pub neutral: bool,
    pub central: bool,
    pub exact: bool,
    /// `φ(A,B) = A^△` when the element is sharp.
    pub doubly_definable_image: Option<String>,
}

pub fn element_analysis(dm: &DmLattice, i: usize) -> ElementAnalysis {
    let space = dm.space();
    let u = space.universe();
    let lat = dm.lattice();
    let pair = dm.pair(i);
    let n = u.size();
    let generators = if dm.in_rs(i) && n < usize::BITS as usize {
        (0u64..1 << n)
            .map(|w| BitVec::from_word(n, w))
            .filter(|x| &RoughPair::of(space, x) == pair)
            .map(|x| u.format_subset(&x))
            .collect()
    } else {
        Vec::new()
    };
    let sharp = sharp_criterion(space, pair);
    let complements = lat.complements_of(i);
    let neutral = is_neutral(lat, i);
    ElementAnalysis {
        index: i,
        pair: pair.format(u),
        in_rs: dm.in_rs(i),
        generators,
        kleene: dm.pair(dm.neg(i)).format(u),
        sharp,
        complemented: !complements.is_empty(),
        complements: complements.iter().map(|&c| dm.pair(c).format(u)).collect(),
        neutral,
        central: neutral && !complements.is_empty(),
        exact: pair.is_exact(),
        doubly_definable_image: sharp.then(|| u.format_subset(&phi(space, pair))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::DmLattice;
    use crate::fixtures;
    use crate::Caps;

    fn dm(rel: crate::relation::Relation) -> DmLattice {
        DmLattice::build(&ApproxSpace::new(rel), &Caps::default()).unwrap()
    }

    fn index_of(d: &DmLattice, lower: &str, upper: &str) -> usize {
        let u = d.space().universe().clone();
        let pair = RoughPair::new(u.parse_subset(lower).unwrap(), u.parse_subset(upper).unwrap());
        d.index_of(&pair).unwrap_or_else(|| panic!("({lower},{upper}) not in completion"))
    }

    #[test]
    fn staircase_sharp_family() {
        let d = dm(fixtures::staircase());
        let got = sharp_indices(&d);
        let want = vec![
            index_of(&d, "", ""),
            index_of(&d, "a", "ab"),
            index_of(&d, "c", "bc"),
            index_of(&d, "abc", "abc"),
        ];
        let mut sorted = want.clone();
        sorted.sort();
        assert_eq!(got, sorted);
        for &i in &got {
            assert!(sharp_by_kleene_complement(&d, i));
            assert_eq!(d.lattice().complements_of(i), vec![d.neg(i)]);
        }
        let report = c_family_analysis(&d);
        assert!(report.all_in_rs && report.kleene_closed && report.is_sublattice_of_dm);
        assert!(report.induced_distributive && report.induced_uniquely_complemented);
    }

    #[test]
    fn staircase_center_is_trivial() {
        let d = dm(fixtures::staircase());
        let lat = d.lattice();
        assert_eq!(center(&d), vec![lat.bottom(), lat.top()]);
        assert_eq!(center_by_split(lat, d.kleene()), center(&d));
        assert_eq!(center_by_definable_split(&d, 16).unwrap(), center(&d));
    }

    #[test]
    fn staircase_median_failure_witness() {
        // a = ({a},{ab}) is sharp but not neutral: with x = ({c},abc) and
        // y = ({bc},abc) the median sides come out as x and y themselves.
        let d = dm(fixtures::staircase());
        let lat = d.lattice();
        let a = index_of(&d, "a", "ab");
        let x = index_of(&d, "c", "abc");
        let y = index_of(&d, "bc", "abc");
        assert!(sharp_by_kleene_complement(&d, a));
        assert_eq!(median_sides(lat, a, x, y), (x, y));
        assert!(!is_neutral(lat, a));
    }

    #[test]
    fn staircase_chajda_identity_fails() {
        let d = dm(fixtures::staircase());
        let lat = d.lattice();
        let x = index_of(&d, "a", "ab");
        let y = index_of(&d, "", "a");
        let (l, r) = chajda_sides(lat, d.kleene(), x, y);
        assert_eq!(l, index_of(&d, "", "ab"));
        assert_eq!(r, y);
        assert!(chajda_identity_witness(lat, d.kleene()).is_some());
    }

    #[test]
    fn fixtures_are_pseudo_kleene_and_paraorthomodular() {
        for rel in [
            fixtures::staircase(),
            fixtures::path_tolerance(),
            fixtures::arrow_quasiorder(),
            fixtures::two_block_equivalence(),
        ] {
            let d = dm(rel);
            assert!(pseudo_kleene_witness(d.lattice(), d.kleene()).is_none());
            assert!(paraorthomodular_witness(d.lattice(), d.kleene()).is_none());
        }
    }

    #[test]
    fn rs_poset_satisfies_kleene_condition_even_when_not_a_lattice() {
        let rs = crate::rough::RsFamily::build(
            &ApproxSpace::new(fixtures::path_tolerance()),
            16,
        )
        .unwrap();
        assert!(!rs.lattice_check().is_lattice);
        let neg: Vec<usize> =
            (0..rs.len()).map(|i| rs.index_of(&rs.pair(i).kleene()).unwrap()).collect();
        assert!(kleene_poset_witness(rs.len(), |i, j| rs.leq(i, j), |i| neg[i]).is_none());
    }

    #[test]
    fn phi_psi_golden_values() {
        let d = dm(fixtures::staircase());
        let u = d.space().universe().clone();
        let sharp_c = RoughPair::new(
            u.parse_subset("c").unwrap(),
            u.parse_subset("bc").unwrap(),
        );
        assert_eq!(u.format_subset(&phi(d.space(), &sharp_c)), "c");
        let sharp_a = RoughPair::new(
            u.parse_subset("a").unwrap(),
            u.parse_subset("ab").unwrap(),
        );
        assert_eq!(u.format_subset(&phi(d.space(), &sharp_a)), "ab");
        assert_eq!(psi(d.space(), &u.parse_subset("c").unwrap()), sharp_c);
        // φ carries ∼ to set complement on the sharp family.
        for &i in &sharp_indices(&d) {
            assert_eq!(
                phi(d.space(), d.pair(d.neg(i))),
                phi(d.space(), d.pair(i)).complement()
            );
        }
    }

    #[test]
    fn quasiorder_and_equivalence_center_collapse() {
        let d3 = dm(fixtures::arrow_quasiorder());
        let exact3: Vec<usize> =
            (0..d3.len()).filter(|&i| d3.pair(i).is_exact()).collect();
        assert_eq!(center(&d3), exact3);
        assert_eq!(sharp_indices(&d3), exact3);

        let d4 = dm(fixtures::two_block_equivalence());
        let exact4: Vec<usize> =
            (0..d4.len()).filter(|&i| d4.pair(i).is_exact()).collect();
        assert_eq!(center(&d4), exact4);
        assert_eq!(exact4.len(), 4);
    }

    #[test]
    fn path_tolerance_c_family_is_wild() {
        let d = dm(fixtures::path_tolerance());
        let report = c_family_analysis(&d);
        assert!(report.all_in_rs);
        assert!(report.kleene_closed);
        assert!(!report.is_sublattice_of_dm);
        assert!(report.induced_is_lattice);
        assert!(!report.induced_modular); // contains a pentagon
        assert!(!report.induced_uniquely_complemented);
        // Tolerances: center = exact pairs, here only the bounds.
        let lat = d.lattice();
        assert_eq!(center(&d), vec![lat.bottom(), lat.top()]);
    }

    #[test]
    fn sharp_subortholattices_are_boolean() {
        for rel in [fixtures::staircase(), fixtures::path_tolerance()] {
            let d = dm(rel);
            let families = sharp_subortholattices(&d, 12);
            assert!(!families.is_empty());
            for fam in families {
                let (lat, members) = d.lattice().induced_order_lattice(&fam).unwrap();
                assert!(lat.is_boolean());
                // ∼ restricted to the family is its Boolean complementation.
                for (k, &i) in members.iter().enumerate() {
                    let nk = members.iter().position(|&j| j == d.neg(i)).unwrap();
                    assert_eq!(lat.complements_of(k), vec![nk]);
                }
            }
        }
    }
}
