//! The ordered family `RS` of approximation pairs, exactness, and the set
//! family `𝒜` of doubly definable sets.

use std::collections::BTreeMap;
use std::fmt;

use crate::approx::{ApproxSpace, Bound, Direction};
use crate::bits::BitVec;
use crate::universe::Universe;
use crate::{Error, Result};

/// An approximation pair `(X^▼, X^▲)` — or more generally any pair in the
/// completion, ordered componentwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RoughPair {
    pub lower: BitVec,
    pub upper: BitVec,
}

impl RoughPair {
    pub fn new(lower: BitVec, upper: BitVec) -> Self {
        RoughPair { lower, upper }
    }

    pub fn of(space: &ApproxSpace, x: &BitVec) -> Self {
        RoughPair {
            lower: space.lower(x, Direction::Forward),
            upper: space.upper(x, Direction::Forward),
        }
    }

    pub fn leq(&self, other: &RoughPair) -> bool {
        self.lower.is_subset(&other.lower) && self.upper.is_subset(&other.upper)
    }

    /// The Kleene involution `∼(A,B) = (Bᶜ, Aᶜ)`.
    pub fn kleene(&self) -> RoughPair {
        RoughPair { lower: self.upper.complement(), upper: self.lower.complement() }
    }

    /// Exact pairs approximate themselves: `A = B`.
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn format(&self, universe: &Universe) -> String {
        format!(
            "({},{})",
            universe.format_subset(&self.lower),
            universe.format_subset(&self.upper)
        )
    }
}

/// Canonical order: by upper-set size, then upper set, then lower set. This
/// is the element order used everywhere families are listed.
impl Ord for RoughPair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.upper
            .count()
            .cmp(&other.upper.count())
            .then_with(|| self.upper.cmp(&other.upper))
            .then_with(|| self.lower.cmp(&other.lower))
    }
}

impl PartialOrd for RoughPair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for RoughPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.lower, self.upper)
    }
}

/// `RS = { (X^▼, X^▲) | X ⊆ U }`, deduplicated and canonically sorted.
/// Each pair remembers the first subset (in counting order) producing it.
pub struct RsFamily {
    space: ApproxSpace,
    pairs: Vec<RoughPair>,
    generators: Vec<BitVec>,
    index: BTreeMap<(BitVec, BitVec), usize>,
}

impl RsFamily {
    pub fn build(space: &ApproxSpace, cap: usize) -> Result<Self> {
        let n = space.size();
        if n > cap {
            return Err(Error::CapExceeded { what: "RS enumeration", required: n, cap });
        }
        let mut seen: BTreeMap<RoughPair, BitVec> = BTreeMap::new();
        for w in 0u64..1 << n {
            let x = BitVec::from_word(n, w);
            let pair = RoughPair::of(space, &x);
            seen.entry(pair).or_insert(x);
        }
        let mut pairs = Vec::with_capacity(seen.len());
        let mut generators = Vec::with_capacity(seen.len());
        let mut index = BTreeMap::new();
        for (i, (pair, gen)) in seen.into_iter().enumerate() {
            index.insert((pair.lower.clone(), pair.upper.clone()), i);
            pairs.push(pair);
            generators.push(gen);
        }
        Ok(RsFamily { space: space.clone(), pairs, generators, index })
    }

    pub fn space(&self) -> &ApproxSpace {
        &self.space
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

    /// A subset generating pair `i` (the least one in counting order).
    pub fn generator(&self, i: usize) -> &BitVec {
        &self.generators[i]
    }

    pub fn index_of(&self, pair: &RoughPair) -> Option<usize> {
        self.index.get(&(pair.lower.clone(), pair.upper.clone())).copied()
    }

    pub fn contains(&self, pair: &RoughPair) -> bool {
        self.index_of(pair).is_some()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.pairs[i].leq(&self.pairs[j])
    }

    /// Indices of exact pairs.
    pub fn exact_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.pairs[i].is_exact()).collect()
    }

    /// Checks whether the componentwise order on `RS` is a lattice; the first
    /// failure (scanning pairs in canonical order, joins before meets) is
    /// returned as a witness listing the minimal upper / maximal lower bounds.
    pub fn lattice_check(&self) -> LatticeCheck {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                let ubs: Vec<usize> =
                    (0..n).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect();
                let minimal: Vec<usize> = ubs
                    .iter()
                    .copied()
                    .filter(|&k| !ubs.iter().any(|&m| m != k && self.leq(m, k)))
                    .collect();
                if minimal.len() != 1 {
                    return LatticeCheck {
                        is_lattice: false,
                        witness: Some(LatticeFailure {
                            kind: BoundKind::Join,
                            left: self.pairs[i].clone(),
                            right: self.pairs[j].clone(),
                            bounds: minimal.into_iter().map(|k| self.pairs[k].clone()).collect(),
                        }),
                    };
                }
                let lbs: Vec<usize> =
                    (0..n).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect();
                let maximal: Vec<usize> = lbs
                    .iter()
                    .copied()
                    .filter(|&k| !lbs.iter().any(|&m| m != k && self.leq(k, m)))
                    .collect();
                if maximal.len() != 1 {
                    return LatticeCheck {
                        is_lattice: false,
                        witness: Some(LatticeFailure {
                            kind: BoundKind::Meet,
                            left: self.pairs[i].clone(),
                            right: self.pairs[j].clone(),
                            bounds: maximal.into_iter().map(|k| self.pairs[k].clone()).collect(),
                        }),
                    };
                }
            }
        }
        LatticeCheck { is_lattice: true, witness: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

#[derive(Debug, Clone)]
pub struct LatticeFailure {
    pub kind: BoundKind,
    pub left: RoughPair,
    pub right: RoughPair,
    /// The minimal upper bounds (for `Join`) or maximal lower bounds (for
    /// `Meet`) — an antichain with zero or at least two members.
    pub bounds: Vec<RoughPair>,
}

#[derive(Debug, Clone)]
pub struct LatticeCheck {
    pub is_lattice: bool,
    pub witness: Option<LatticeFailure>,
}

/// Exact sets: unions of `Rᵉ`-classes (`Sat(Rᵉ)`), in counting order.
pub fn exact_sets(space: &ApproxSpace, cap: usize) -> Result<Vec<BitVec>> {
    let n = space.size();
    if n > cap {
        return Err(Error::CapExceeded { what: "exact-set enumeration", required: n, cap });
    }
    let classes = space.relation().equivalence_closure().equivalence_classes()?;
    let mut sets = classes.saturated_sets();
    sets.sort();
    Ok(sets)
}

/// The exact pairs `(A, A)` for `A ∈ Sat(Rᵉ)`, canonically sorted.
pub fn exact_family(space: &ApproxSpace, cap: usize) -> Result<Vec<RoughPair>> {
    let mut pairs: Vec<RoughPair> = exact_sets(space, cap)?
        .into_iter()
        .map(|a| RoughPair::new(a.clone(), a))
        .collect();
    pairs.sort();
    Ok(pairs)
}

/// `𝒜 = ℘(U)^▽ ∩ ℘(U)^△`: sets fixed by both inverse-family roundtrips —
/// equivalently, sets with `Z^{▼△} = Z^{▲▽}`, which forces both to equal `Z`.
pub struct AFamily {
    sets: Vec<BitVec>,
}

impl AFamily {
    pub fn build(space: &ApproxSpace, cap: usize) -> Result<Self> {
        let n = space.size();
        if n > cap {
            return Err(Error::CapExceeded { what: "𝒜-family enumeration", required: n, cap });
        }
        let sets = (0u64..1 << n)
            .map(|w| BitVec::from_word(n, w))
            .filter(|z| {
                space.is_definable(z, Direction::Inverse, Bound::Lower)
                    && space.is_definable(z, Direction::Inverse, Bound::Upper)
            })
            .collect();
        Ok(AFamily { sets })
    }

    pub fn sets(&self) -> &[BitVec] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, z: &BitVec) -> bool {
        self.sets.binary_search(z).is_ok()
    }
}
