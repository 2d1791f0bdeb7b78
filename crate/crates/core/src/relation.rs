//! Binary relations on a universe, their closures and classification, and
//! partitions (equivalence relations in block form).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::universe::Universe;
use crate::{Error, Result};

/// A binary relation stored row-wise: `row(i)` is the neighbourhood
/// `R(i) = { j | (i, j) ∈ R }`.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    universe: Arc<Universe>,
    rows: Vec<BitVec>,
}

impl Relation {
    pub fn empty(universe: &Arc<Universe>) -> Self {
        let n = universe.size();
        Relation { universe: Arc::clone(universe), rows: vec![BitVec::new(n); n] }
    }

    pub fn identity(universe: &Arc<Universe>) -> Self {
        let n = universe.size();
        let rows = (0..n).map(|i| BitVec::singleton(n, i)).collect();
        Relation { universe: Arc::clone(universe), rows }
    }

    /// The all-pairs relation `U × U`.
    pub fn full(universe: &Arc<Universe>) -> Self {
        let n = universe.size();
        Relation { universe: Arc::clone(universe), rows: vec![BitVec::full(n); n] }
    }

    pub fn from_pairs<I, S, T>(universe: &Arc<Universe>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut rel = Self::empty(universe);
        for (a, b) in pairs {
            let i = universe.require_index(a.as_ref())?;
            let j = universe.require_index(b.as_ref())?;
            rel.rows[i].set(j, true);
        }
        Ok(rel)
    }

    pub fn from_neighborhoods<I, S, N, T>(universe: &Arc<Universe>, neighborhoods: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, N)>,
        S: AsRef<str>,
        N: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let mut rel = Self::empty(universe);
        for (a, row) in neighborhoods {
            let i = universe.require_index(a.as_ref())?;
            for b in row {
                rel.rows[i].set(universe.require_index(b.as_ref())?, true);
            }
        }
        Ok(rel)
    }

    pub fn from_rows(universe: &Arc<Universe>, rows: Vec<BitVec>) -> Result<Self> {
        if rows.len() != universe.size() || rows.iter().any(|r| r.len() != universe.size()) {
            return Err(Error::UniverseMismatch);
        }
        Ok(Relation { universe: Arc::clone(universe), rows })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    /// Related pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.extend(row.iter_ones().map(|j| (i, j)));
        }
        out
    }

    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.pairs()
            .into_iter()
            .map(|(i, j)| (self.universe.label(i).to_string(), self.universe.label(j).to_string()))
            .collect()
    }

    fn check(&self, other: &Relation) -> Result<()> {
        if self.universe.same_as(&other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.check(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.union(b)).collect();
        Ok(Relation { universe: Arc::clone(&self.universe), rows })
    }

    pub fn is_subrelation_of(&self, other: &Relation) -> Result<bool> {
        self.check(other)?;
        Ok(self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b)))
    }

    /// The inverse relation `R⁻¹`: `(i, j) ∈ R⁻¹ ⇔ (j, i) ∈ R`.
    pub fn inverse(&self) -> Relation {
        let n = self.size();
        let mut rows = vec![BitVec::new(n); n];
        for i in 0..n {
            for j in self.rows[i].iter_ones() {
                rows[j].set(i, true);
            }
        }
        Relation { universe: Arc::clone(&self.universe), rows }
    }

    /// Composition `R ∘ S`: `(x, z) ∈ R ∘ S` iff there is a `y` with
    /// `(x, y) ∈ R` and `(y, z) ∈ S` (steps are read left to right).
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.check(other)?;
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                let mut acc = BitVec::new(n);
                for j in self.rows[i].iter_ones() {
                    acc.union_with(&other.rows[j]);
                }
                acc
            })
            .collect();
        Ok(Relation { universe: Arc::clone(&self.universe), rows })
    }

    pub fn reflexive_closure(&self) -> Relation {
        let mut out = self.clone();
        for i in 0..out.size() {
            out.rows[i].set(i, true);
        }
        out
    }

    /// Transitive closure `R⁺ = ⋃_{i ≥ 1} Rⁱ` by repeated boolean matrix
    /// squaring: `T ← T ∪ T∘T` doubles the path length covered each round.
    pub fn transitive_closure(&self) -> Relation {
        let mut t = self.clone();
        loop {
            let step = t.compose(&t).expect("same universe");
            let next = t.union(&step).expect("same universe");
            if next == t {
                return t;
            }
            t = next;
        }
    }

    /// `Rᵉ = (R ∪ R⁻¹)⁺`, the smallest equivalence containing a reflexive
    /// relation. (For non-reflexive input this is still `(R ∪ R⁻¹)⁺`, which
    /// need not be reflexive.)
    pub fn equivalence_closure(&self) -> Relation {
        self.union(&self.inverse()).expect("same universe").transitive_closure()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|i| self.rows[i].get(i))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| self.rows[i].iter_ones().all(|j| self.rows[j].get(i)))
    }

    pub fn is_transitive(&self) -> bool {
        // R transitive ⇔ every row absorbs the rows it points to.
        self.rows
            .iter()
            .all(|row| row.iter_ones().all(|j| self.rows[j].is_subset(row)))
    }

    pub fn is_left_total(&self) -> bool {
        self.rows.iter().all(|row| !row.is_empty())
    }

    pub fn is_right_total(&self) -> bool {
        let n = self.size();
        let mut seen = BitVec::new(n);
        for row in &self.rows {
            seen.union_with(row);
        }
        seen.is_full()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_reflexive() && self.is_symmetric() && self.is_transitive()
    }

    /// A tolerance induced by an irredundant covering: a tolerance where every
    /// related pair `(a, b)` lies inside some neighbourhood `R(c)` that is a
    /// block (a set whose members are pairwise related).
    pub fn is_irredundant_covering_tolerance(&self) -> bool {
        if !(self.is_reflexive() && self.is_symmetric()) {
            return false;
        }
        let n = self.size();
        // A block: every two members are related, i.e. s ⊆ R(u) for all u ∈ s.
        let block = |s: &BitVec| s.iter_ones().all(|u| s.is_subset(&self.rows[u]));
        let is_block: Vec<bool> = (0..n).map(|c| block(&self.rows[c])).collect();
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.iter_ones() {
                let covered = (0..n)
                    .any(|c| is_block[c] && self.rows[c].get(i) && self.rows[c].get(j));
                if !covered {
                    return false;
                }
            }
        }
        true
    }

    pub fn classify(&self) -> PropertyFlags {
        let reflexive = self.is_reflexive();
        let symmetric = self.is_symmetric();
        let transitive = self.is_transitive();
        PropertyFlags {
            reflexive,
            symmetric,
            transitive,
            left_total: self.is_left_total(),
            right_total: self.is_right_total(),
            tolerance: reflexive && symmetric,
            quasiorder: reflexive && transitive,
            equivalence: reflexive && symmetric && transitive,
            irredundant_covering_tolerance: self.is_irredundant_covering_tolerance(),
        }
    }

    /// Equivalence classes of an equivalence relation, as a partition.
    pub fn equivalence_classes(&self) -> Result<Partition> {
        if !self.is_equivalence() {
            let what = if !self.is_reflexive() {
                "not reflexive"
            } else if !self.is_symmetric() {
                "not symmetric"
            } else {
                "not transitive"
            };
            return Err(Error::NotEquivalence(what.to_string()));
        }
        let n = self.size();
        let mut blocks: Vec<BitVec> = Vec::new();
        let mut seen = BitVec::new(n);
        for i in 0..n {
            if !seen.get(i) {
                seen.union_with(&self.rows[i]);
                blocks.push(self.rows[i].clone());
            }
        }
        Partition::new(&self.universe, blocks)
    }

    /// Whether `x` is a union of equivalence classes of this relation.
    pub fn is_saturated(&self, x: &BitVec) -> Result<bool> {
        Ok(self.equivalence_classes()?.is_saturated(x))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation{{")?;
        for i in 0..self.size() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}->{}",
                self.universe.label(i),
                self.universe.format_subset(&self.rows[i])
            )?;
        }
        write!(f, "}}")
    }
}

/// Classification flags for a relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub left_total: bool,
    pub right_total: bool,
    pub tolerance: bool,
    pub quasiorder: bool,
    pub equivalence: bool,
    pub irredundant_covering_tolerance: bool,
}

/// Relation classes the miner can filter on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationClass {
    Reflexive,
    Tolerance,
    Quasiorder,
    Equivalence,
    IrredundantCoveringTolerance,
}

impl RelationClass {
    pub fn matches(self, flags: &PropertyFlags) -> bool {
        match self {
            RelationClass::Reflexive => flags.reflexive,
            RelationClass::Tolerance => flags.tolerance,
            RelationClass::Quasiorder => flags.quasiorder,
            RelationClass::Equivalence => flags.equivalence,
            RelationClass::IrredundantCoveringTolerance => flags.irredundant_covering_tolerance,
        }
    }
}

impl std::str::FromStr for RelationClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reflexive" | "any" => Ok(RelationClass::Reflexive),
            "tolerance" => Ok(RelationClass::Tolerance),
            "quasiorder" => Ok(RelationClass::Quasiorder),
            "equivalence" => Ok(RelationClass::Equivalence),
            "irredundant-covering-tolerance" | "irredundant" => {
                Ok(RelationClass::IrredundantCoveringTolerance)
            }
            other => Err(Error::Parse(format!(
                "unknown relation class {other:?} (expected reflexive, tolerance, quasiorder, \
                 equivalence, or irredundant-covering-tolerance)"
            ))),
        }
    }
}

/// A partition of the universe into disjoint, covering, nonempty blocks.
/// Blocks are kept sorted by their least element.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    universe: Arc<Universe>,
    blocks: Vec<BitVec>,
}

impl Partition {
    pub fn new(universe: &Arc<Universe>, mut blocks: Vec<BitVec>) -> Result<Self> {
        let n = universe.size();
        let mut seen = BitVec::new(n);
        for block in &blocks {
            if block.len() != n {
                return Err(Error::UniverseMismatch);
            }
            if block.is_empty() {
                return Err(Error::BadPartition("empty block".into()));
            }
            if seen.intersects(block) {
                return Err(Error::BadPartition("blocks overlap".into()));
            }
            seen.union_with(block);
        }
        if !seen.is_full() {
            return Err(Error::BadPartition(format!(
                "blocks do not cover the universe (missing {})",
                universe.format_subset(&seen.complement())
            )));
        }
        blocks.sort_by_key(|b| b.first_one());
        Ok(Partition { universe: Arc::clone(universe), blocks })
    }

    pub fn discrete(universe: &Arc<Universe>) -> Self {
        let n = universe.size();
        let blocks = (0..n).map(|i| BitVec::singleton(n, i)).collect();
        Partition { universe: Arc::clone(universe), blocks }
    }

    /// Parses `"ab|c"` (blocks separated by `|`, single-character labels
    /// juxtaposed, multi-character labels comma-separated).
    pub fn from_spec(universe: &Arc<Universe>, spec: &str) -> Result<Self> {
        let spec = spec.trim().trim_start_matches('{').trim_end_matches('}');
        let blocks = spec
            .split('|')
            .map(|b| universe.parse_subset(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, blocks)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn blocks(&self) -> &[BitVec] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, i: usize) -> &BitVec {
        self.blocks.iter().find(|b| b.get(i)).expect("partition covers the universe")
    }

    /// The equivalence relation whose classes are the blocks.
    pub fn to_relation(&self) -> Relation {
        let n = self.universe.size();
        let rows = (0..n).map(|i| self.block_of(i).clone()).collect();
        Relation { universe: Arc::clone(&self.universe), rows }
    }

    /// Whether `x` is a union of blocks.
    pub fn is_saturated(&self, x: &BitVec) -> bool {
        self.blocks.iter().all(|b| !b.intersects(x) || b.is_subset(x))
    }

    /// Lower approximation with respect to this partition: the union of the
    /// blocks contained in `x` (the largest saturated subset of `x`).
    pub fn lower(&self, x: &BitVec) -> BitVec {
        let mut out = BitVec::new(x.len());
        for b in &self.blocks {
            if b.is_subset(x) {
                out.union_with(b);
            }
        }
        out
    }

    /// All unions of blocks, in counting order over block indices.
    pub fn saturated_sets(&self) -> Vec<BitVec> {
        let k = self.blocks.len();
        assert!(k < 64, "partition too large to enumerate saturated sets");
        (0u64..1 << k)
            .map(|mask| {
                let mut s = BitVec::new(self.universe.size());
                for (bi, b) in self.blocks.iter().enumerate() {
                    if mask >> bi & 1 == 1 {
                        s.union_with(b);
                    }
                }
                s
            })
            .collect()
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.blocks
            .iter()
            .all(|b| b.is_subset(other.block_of(b.first_one().expect("blocks are nonempty"))))
    }

    /// All partitions obtained by merging blocks of `self`, enumerated by
    /// restricted-growth strings over the blocks in lexicographic order:
    /// the single-block merge comes first, `self` itself last.
    pub fn coarsenings(&self) -> Vec<Partition> {
        let k = self.blocks.len();
        let mut out = Vec::new();
        let mut rgs = vec![0usize; k];
        loop {
            let groups = rgs.iter().copied().max().unwrap_or(0) + 1;
            let mut merged = vec![BitVec::new(self.universe.size()); groups];
            for (bi, &g) in rgs.iter().enumerate() {
                merged[g].union_with(&self.blocks[bi]);
            }
            out.push(Partition::new(&self.universe, merged).expect("merged blocks partition U"));
            // Next restricted-growth string: digit i may be at most
            // 1 + max(previous digits).
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                let cap = 1 + rgs[..pos].iter().copied().max().unwrap_or(0);
                if pos > 0 && rgs[pos] < cap {
                    rgs[pos] += 1;
                    for d in rgs[pos + 1..].iter_mut() {
                        *d = 0;
                    }
                    break;
                }
            }
        }
    }

    /// Every partition of the universe, via coarsenings of the discrete one.
    pub fn enumerate(universe: &Arc<Universe>, cap: usize) -> Result<Vec<Partition>> {
        if universe.size() > cap {
            return Err(Error::CapExceeded {
                what: "partition enumeration",
                required: universe.size(),
                cap,
            });
        }
        Ok(Self::discrete(universe).coarsenings())
    }

    pub fn spec_string(&self) -> String {
        self.blocks
            .iter()
            .map(|b| self.universe.format_subset(b))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.spec_string())
    }
}
