//! Universes of named points and labelled subsets.

use std::fmt;
use std::sync::Arc;

use crate::bits::BitVec;
use crate::{Error, Result};

/// An ordered, finite set of distinctly labelled points.
///
/// Positions are the working representation everywhere in the crate; labels
/// only matter at the boundary (parsing input, printing reports).
#[derive(Debug, PartialEq, Eq)]
pub struct Universe {
    labels: Vec<String>,
    single_char: bool,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::BadUniverse("no labels given".into()));
        }
        for label in &labels {
            if label.is_empty() {
                return Err(Error::BadUniverse("empty label".into()));
            }
            if !label.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::BadUniverse(format!(
                    "label {label:?} contains characters other than alphanumerics and '_'"
                )));
            }
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::BadUniverse(format!("duplicate label {label:?}")));
            }
        }
        let single_char = labels.iter().all(|l| l.chars().count() == 1);
        Ok(Arc::new(Universe { labels, single_char }))
    }

    /// Universe `a, b, c, ...` of `n` points (`x1, x2, ...` past 26).
    pub fn letters(n: usize) -> Arc<Self> {
        let labels: Vec<String> = if n <= 26 {
            (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Self::new(labels).expect("generated labels are valid")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require_index(&self, label: &str) -> Result<usize> {
        self.index(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn empty_set(&self) -> BitVec {
        BitVec::new(self.size())
    }

    pub fn full_set(&self) -> BitVec {
        BitVec::full(self.size())
    }

    pub fn subset_from_labels<I, S>(&self, labels: I) -> Result<BitVec>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = self.empty_set();
        for label in labels {
            bits.set(self.require_index(label.as_ref())?, true);
        }
        Ok(bits)
    }

    /// Parses a subset written as concatenated single-character labels
    /// (`"abc"`), comma-separated labels (`"x1,x3"`), or `"∅"`/`"-"`/`""`
    /// for the empty set.
    pub fn parse_subset(&self, spec: &str) -> Result<BitVec> {
        let spec = spec.trim();
        if spec.is_empty() || spec == "∅" || spec == "-" {
            return Ok(self.empty_set());
        }
        let mut bits = self.empty_set();
        let tokens: Vec<&str> = if spec.contains(',') {
            spec.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
        } else {
            vec![spec]
        };
        for token in tokens {
            if let Some(i) = self.index(token) {
                bits.set(i, true);
            } else if self.single_char {
                for c in token.chars() {
                    bits.set(self.require_index(&c.to_string())?, true);
                }
            } else {
                return Err(Error::UnknownLabel(token.to_string()));
            }
        }
        Ok(bits)
    }

    /// Renders a subset: `∅` for empty, concatenated labels when every label
    /// is a single character, comma-joined otherwise.
    pub fn format_subset(&self, bits: &BitVec) -> String {
        debug_assert_eq!(bits.len(), self.size());
        if bits.is_empty() {
            return "∅".to_string();
        }
        let sep = if self.single_char { "" } else { "," };
        bits.iter_ones().map(|i| self.labels[i].as_str()).collect::<Vec<_>>().join(sep)
    }

    pub fn labels_of(&self, bits: &BitVec) -> Vec<String> {
        bits.iter_ones().map(|i| self.labels[i].clone()).collect()
    }

    pub fn same_as(&self, other: &Universe) -> bool {
        std::ptr::eq(self, other) || self.labels == other.labels
    }
}

/// A labelled subset: a bit vector paired with its universe.
#[derive(Clone, PartialEq, Eq)]
pub struct Subset {
    universe: Arc<Universe>,
    bits: BitVec,
}

impl Subset {
    pub fn new(universe: Arc<Universe>, bits: BitVec) -> Result<Self> {
        if bits.len() != universe.size() {
            return Err(Error::UniverseMismatch);
        }
        Ok(Subset { universe, bits })
    }

    pub fn from_labels<I, S>(universe: &Arc<Universe>, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let bits = universe.subset_from_labels(labels)?;
        Ok(Subset { universe: Arc::clone(universe), bits })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn into_bits(self) -> BitVec {
        self.bits
    }

    pub fn labels(&self) -> Vec<String> {
        self.universe.labels_of(&self.bits)
    }

    pub fn contains(&self, label: &str) -> Result<bool> {
        Ok(self.bits.get(self.universe.require_index(label)?))
    }

    fn check(&self, other: &Subset) -> Result<()> {
        if self.universe.same_as(&other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check(other)?;
        Ok(Subset { universe: Arc::clone(&self.universe), bits: self.bits.union(&other.bits) })
    }

    pub fn inter(&self, other: &Subset) -> Result<Subset> {
        self.check(other)?;
        Ok(Subset { universe: Arc::clone(&self.universe), bits: self.bits.inter(&other.bits) })
    }

    pub fn minus(&self, other: &Subset) -> Result<Subset> {
        self.check(other)?;
        Ok(Subset { universe: Arc::clone(&self.universe), bits: self.bits.minus(&other.bits) })
    }

    pub fn complement(&self) -> Subset {
        Subset { universe: Arc::clone(&self.universe), bits: self.bits.complement() }
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.check(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.universe.format_subset(&self.bits))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset({})", self.universe.format_subset(&self.bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_universes() {
        assert!(Universe::new(Vec::<String>::new()).is_err());
        assert!(Universe::new(["a", "a"]).is_err());
        assert!(Universe::new(["a", ""]).is_err());
        assert!(Universe::new(["a|b"]).is_err());
    }

    #[test]
    fn parses_concatenated_and_comma_forms() {
        let u = Universe::letters(3);
        assert_eq!(u.parse_subset("ab").unwrap(), u.subset_from_labels(["a", "b"]).unwrap());
        assert_eq!(u.parse_subset("b,c").unwrap(), u.subset_from_labels(["b", "c"]).unwrap());
        assert_eq!(u.parse_subset("∅").unwrap(), u.empty_set());
        assert_eq!(u.parse_subset("-").unwrap(), u.empty_set());
        assert!(u.parse_subset("ad").is_err());

        let multi = Universe::new(["x1", "x2"]).unwrap();
        assert_eq!(
            multi.parse_subset("x1,x2").unwrap(),
            multi.subset_from_labels(["x1", "x2"]).unwrap()
        );
        assert!(multi.parse_subset("x1x2").is_err());
    }

    #[test]
    fn formats_subsets_canonically() {
        let u = Universe::letters(3);
        assert_eq!(u.format_subset(&u.empty_set()), "∅");
        assert_eq!(u.format_subset(&u.parse_subset("ba").unwrap()), "ab");
        let multi = Universe::new(["x1", "x2"]).unwrap();
        assert_eq!(multi.format_subset(&multi.full_set()), "x1,x2");
    }

    #[test]
    fn subset_algebra_checks_universes() {
        let u = Universe::letters(3);
        let v = Universe::letters(4);
        let a = Subset::from_labels(&u, ["a"]).unwrap();
        let b = Subset::from_labels(&v, ["b"]).unwrap();
        assert!(matches!(a.union(&b), Err(Error::UniverseMismatch)));
        let c = Subset::from_labels(&u, ["a", "b"]).unwrap();
        assert!(a.is_subset_of(&c).unwrap());
        assert_eq!(a.complement().labels(), vec!["b", "c"]);
    }
}
