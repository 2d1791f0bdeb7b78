//! The four rough approximation operators of a binary relation.
//!
//! For a relation `R` on `U` and `X ⊆ U`:
//!
//! * forward lower  `X^▼ = { x | R(x) ⊆ X }`
//! * forward upper  `X^▲ = { x | R(x) ∩ X ≠ ∅ }`
//! * inverse lower  `X^▽` and inverse upper `X^△` — the same maps computed
//!   from `R⁻¹`.
//!
//! `(^▲, ^▽)` and `(^△, ^▼)` are Galois connections on `(℘(U), ⊆)`, which
//! makes `X ↦ X^{△▼}` and `X ↦ X^{▲▽}` closure operators and `X ↦ X^{▼△}`
//! and `X ↦ X^{▽▲}` interior operators. Their fixpoint families
//! `℘(U)^▼, ℘(U)^▲, ℘(U)^▽, ℘(U)^△` are what the completion is built from.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::relation::Relation;
use crate::universe::Universe;
use crate::{Error, Result};

/// Which of the two relations (`R` or `R⁻¹`) an operator reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

/// Which fixpoint family a definability test refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Lower,
    Upper,
}

/// A relation together with its precomputed inverse, ready to evaluate
/// approximation operators.
#[derive(Clone)]
pub struct ApproxSpace {
    relation: Relation,
    inverse: Relation,
}

impl ApproxSpace {
    pub fn new(relation: Relation) -> Self {
        let inverse = relation.inverse();
        ApproxSpace { relation, inverse }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.relation.universe()
    }

    pub fn size(&self) -> usize {
        self.relation.size()
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn inverse_relation(&self) -> &Relation {
        &self.inverse
    }

    /// The space of the inverse relation (swaps the operator directions).
    pub fn inverted(&self) -> ApproxSpace {
        ApproxSpace { relation: self.inverse.clone(), inverse: self.relation.clone() }
    }

    fn rows(&self, dir: Direction) -> &Relation {
        match dir {
            Direction::Forward => &self.relation,
            Direction::Inverse => &self.inverse,
        }
    }

    fn check(&self, x: &BitVec) -> Result<()> {
        if x.len() == self.size() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Lower approximation: elements whose neighbourhood is contained in `x`.
    pub fn lower(&self, x: &BitVec, dir: Direction) -> BitVec {
        debug_assert_eq!(x.len(), self.size());
        let rel = self.rows(dir);
        BitVec::from_indices(self.size(), (0..self.size()).filter(|&i| rel.row(i).is_subset(x)))
    }

    /// Upper approximation: elements whose neighbourhood meets `x`.
    pub fn upper(&self, x: &BitVec, dir: Direction) -> BitVec {
        debug_assert_eq!(x.len(), self.size());
        let rel = self.rows(dir);
        BitVec::from_indices(self.size(), (0..self.size()).filter(|&i| rel.row(i).intersects(x)))
    }

    /// Checked variants for callers handing in foreign bit vectors.
    pub fn try_lower(&self, x: &BitVec, dir: Direction) -> Result<BitVec> {
        self.check(x)?;
        Ok(self.lower(x, dir))
    }

    pub fn try_upper(&self, x: &BitVec, dir: Direction) -> Result<BitVec> {
        self.check(x)?;
        Ok(self.upper(x, dir))
    }

    /// The set `𝒮 = { x | |R(x)| = 1 }` of points with singleton neighbourhood.
    pub fn singletons(&self) -> BitVec {
        BitVec::from_indices(
            self.size(),
            (0..self.size()).filter(|&i| self.relation.row(i).count() == 1),
        )
    }

    /// Membership in a fixpoint family:
    ///
    /// * `(Forward, Lower)`:  `X ∈ ℘(U)^▼ ⇔ X = X^{△▼}`
    /// * `(Forward, Upper)`:  `X ∈ ℘(U)^▲ ⇔ X = X^{▽▲}`
    /// * `(Inverse, Lower)`:  `X ∈ ℘(U)^▽ ⇔ X = X^{▲▽}`
    /// * `(Inverse, Upper)`:  `X ∈ ℘(U)^△ ⇔ X = X^{▼△}`
    pub fn is_definable(&self, x: &BitVec, dir: Direction, bound: Bound) -> bool {
        let other = match dir {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        };
        let roundtrip = match bound {
            Bound::Lower => self.lower(&self.upper(x, other), dir),
            Bound::Upper => self.upper(&self.lower(x, other), dir),
        };
        roundtrip == *x
    }

    /// All members of a fixpoint family, in counting order. Exponential sweep,
    /// guarded by `cap` on the universe size.
    pub fn definable_family(&self, dir: Direction, bound: Bound, cap: usize) -> Result<Vec<BitVec>> {
        let n = self.size();
        if n > cap {
            return Err(Error::CapExceeded { what: "definable-family sweep", required: n, cap });
        }
        Ok((0u64..1 << n)
            .map(|w| BitVec::from_word(n, w))
            .filter(|x| self.is_definable(x, dir, bound))
            .collect())
    }
}
