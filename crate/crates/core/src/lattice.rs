//! Finite bounded lattices presented by explicit order matrices, plus
//! antitone involutions and order-isomorphism search.

use crate::bits::BitVec;
use crate::{Error, Result};

/// A finite lattice on indices `0..n`. The order is stored as up-sets and
/// down-sets; join and meet are precomputed tables derived from the order.
#[derive(Clone)]
pub struct FiniteLattice {
    n: usize,
    up: Vec<BitVec>,
    down: Vec<BitVec>,
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds the lattice from a relation claimed to be a lattice order.
    /// Fails if the relation is not a partial order or if some pair lacks a
    /// least upper or greatest lower bound.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotALattice("a lattice needs at least one element".into()));
        }
        let mut up = vec![BitVec::new(n); n];
        let mut down = vec![BitVec::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i].set(j, true);
                    down[j].set(i, true);
                }
            }
        }
        for i in 0..n {
            if !up[i].get(i) {
                return Err(Error::NotALattice(format!("order is not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && up[i].get(j) && up[j].get(i) {
                    return Err(Error::NotALattice(format!(
                        "order is not antisymmetric on {i},{j}"
                    )));
                }
                if up[i].get(j) && !up[j].is_subset(&up[i]) {
                    return Err(Error::NotALattice(format!(
                        "order is not transitive above {i},{j}"
                    )));
                }
            }
        }
        let mut join = vec![0usize; n * n];
        let mut meet = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                let ub = up[i].inter(&up[j]);
                let least = ub.iter_ones().find(|&k| ub.is_subset(&up[k]));
                let lb = down[i].inter(&down[j]);
                let greatest = lb.iter_ones().find(|&k| lb.is_subset(&down[k]));
                match (least, greatest) {
                    (Some(l), Some(g)) => {
                        join[i * n + j] = l;
                        meet[i * n + j] = g;
                    }
                    (None, _) => {
                        return Err(Error::NotALattice(format!("{i} and {j} have no join")))
                    }
                    (_, None) => {
                        return Err(Error::NotALattice(format!("{i} and {j} have no meet")))
                    }
                }
            }
        }
        let bottom = (0..n)
            .find(|&i| up[i].is_full())
            .ok_or_else(|| Error::NotALattice("no bottom element".into()))?;
        let top = (0..n)
            .find(|&i| down[i].is_full())
            .ok_or_else(|| Error::NotALattice("no top element".into()))?;
        Ok(FiniteLattice { n, up, down, join, meet, bottom, top })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].get(j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.n + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.n + j]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn up_set(&self, i: usize) -> &BitVec {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &BitVec {
        &self.down[i]
    }

    pub fn join_of(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.bottom, |a, b| self.join(a, b))
    }

    pub fn meet_of(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |a, b| self.meet(a, b))
    }

    /// Hasse-diagram edges `(i, j)` with `j` covering `i`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in self.up[i].iter_ones() {
                if j == i {
                    continue;
                }
                let between = (0..self.n)
                    .any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !between {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.covers()
            .into_iter()
            .filter(|&(i, _)| i == self.bottom)
            .map(|(_, j)| j)
            .collect()
    }

    /// First triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// First pair witnessing non-modularity: `x ≤ z` but
    /// `x ∨ (y ∧ z) ≠ (x ∨ y) ∧ z`.
    pub fn modularity_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for z in self.up[x].iter_ones() {
                for y in 0..self.n {
                    if self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    pub fn complements_of(&self, i: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| self.meet(i, j) == self.bottom && self.join(i, j) == self.top)
            .collect()
    }

    pub fn is_complemented(&self) -> bool {
        (0..self.n).all(|i| !self.complements_of(i).is_empty())
    }

    pub fn is_uniquely_complemented(&self) -> bool {
        (0..self.n).all(|i| self.complements_of(i).len() == 1)
    }

    pub fn is_boolean(&self) -> bool {
        self.is_distributive() && self.is_complemented()
    }

    pub fn is_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.n)
            .all(|x| self.join_of(atoms.iter().copied().filter(|&a| self.leq(a, x))) == x)
    }

    /// Whether `subset` (which must contain bottom and top) is closed under
    /// the ambient join and meet.
    pub fn is_sublattice(&self, subset: &BitVec) -> bool {
        subset.get(self.bottom)
            && subset.get(self.top)
            && subset.iter_ones().all(|i| {
                subset
                    .iter_ones()
                    .all(|j| subset.get(self.join(i, j)) && subset.get(self.meet(i, j)))
            })
    }

    /// The lattice induced on a subset by the ambient *order* (not the
    /// ambient join/meet), together with the map from new to old indices.
    /// Fails if the induced order is not a lattice.
    pub fn induced_order_lattice(&self, subset: &BitVec) -> Result<(FiniteLattice, Vec<usize>)> {
        let members: Vec<usize> = subset.iter_ones().collect();
        let lat = FiniteLattice::from_leq(members.len(), |a, b| self.leq(members[a], members[b]))?;
        Ok((lat, members))
    }
}

/// A validated antitone involution `σ` on a lattice: `σσx = x` and
/// `x ≤ y ⟹ σy ≤ σx`.
#[derive(Clone)]
pub struct Involution {
    map: Vec<usize>,
}

impl Involution {
    pub fn new(lat: &FiniteLattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != lat.len() {
            return Err(Error::NotALattice(format!(
                "involution table has {} entries for {} elements",
                map.len(),
                lat.len()
            )));
        }
        for (i, &j) in map.iter().enumerate() {
            if j >= lat.len() || map[j] != i {
                return Err(Error::NotALattice(format!("map is not an involution at {i}")));
            }
        }
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                if lat.leq(i, j) && !lat.leq(map[j], map[i]) {
                    return Err(Error::NotALattice(format!(
                        "map is not antitone on {i} ≤ {j}"
                    )));
                }
            }
        }
        Ok(Involution { map })
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }
}

fn profile(lat: &FiniteLattice, covers: &[(usize, usize)], i: usize) -> (usize, usize, usize, usize) {
    (
        lat.down_set(i).count(),
        lat.up_set(i).count(),
        covers.iter().filter(|&&(a, _)| a == i).count(),
        covers.iter().filter(|&&(_, b)| b == i).count(),
    )
}

/// Searches for an order isomorphism `a → b` extending the given partial
/// assignment, by backtracking with degree-profile pruning.
pub fn isomorphism_fixing(
    a: &FiniteLattice,
    b: &FiniteLattice,
    fixed: &[(usize, usize)],
) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let ca = a.covers();
    let cb = b.covers();
    if ca.len() != cb.len() {
        return None;
    }
    let pa: Vec<_> = (0..n).map(|i| profile(a, &ca, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(b, &cb, i)).collect();
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(x, y) in fixed {
        if pa[x] != pb[y] || (map[x] != usize::MAX && map[x] != y) || (used[y] && map[x] != y) {
            return None;
        }
        map[x] = y;
        used[y] = true;
    }
    // Assign the most constrained (rarest-profile) elements first.
    let mut order: Vec<usize> = (0..n).filter(|&i| map[i] == usize::MAX).collect();
    order.sort_by_key(|&i| {
        let rarity = pa.iter().filter(|&&p| p == pa[i]).count();
        (rarity, std::cmp::Reverse(pa[i].0.max(pa[i].1)), i)
    });

    fn consistent(a: &FiniteLattice, b: &FiniteLattice, map: &[usize], x: usize, y: usize) -> bool {
        for (i, &j) in map.iter().enumerate() {
            if j == usize::MAX {
                continue;
            }
            if a.leq(i, x) != b.leq(j, y) || a.leq(x, i) != b.leq(y, j) {
                return false;
            }
        }
        true
    }

    fn go(
        a: &FiniteLattice,
        b: &FiniteLattice,
        pa: &[(usize, usize, usize, usize)],
        pb: &[(usize, usize, usize, usize)],
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let x = order[pos];
        for y in 0..b.len() {
            if used[y] || pb[y] != pa[x] || !consistent(a, b, map, x, y) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(a, b, pa, pb, order, pos + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    // Validate the fixed pairs against each other before searching.
    for (i, &j) in map.iter().enumerate() {
        if j != usize::MAX && !consistent(a, b, &map_without(&map, i), i, j) {
            return None;
        }
    }
    if go(a, b, &pa, &pb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn map_without(map: &[usize], skip: usize) -> Vec<usize> {
    let mut m = map.to_vec();
    m[skip] = usize::MAX;
    m
}

pub fn isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> bool {
    isomorphism_fixing(a, b, &[]).is_some()
}
