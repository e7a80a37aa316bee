//! Ground sets, machine-word subsets and canonically ordered set families.
//!
//! Element `i` of a ground set (declaration order) is bit `i` of a [`Subset`],
//! so set algebra is single-word bit arithmetic and a family of subsets is a
//! short sorted vector of words.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Largest ground set a [`Subset`] word can address.
pub const MAX_GROUND: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroundSetError {
    #[error("ground set must contain at least one element")]
    Empty,
    #[error("ground set has {0} elements, the maximum is {MAX_GROUND}")]
    TooLarge(usize),
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("element names must be non-empty")]
    EmptyName,
    #[error("unknown element {0:?}")]
    UnknownElement(String),
}

/// Named finite ground set. Immutable once built; bit positions follow the
/// declaration order of the names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self, GroundSetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(GroundSetError::Empty);
        }
        if names.len() > MAX_GROUND {
            return Err(GroundSetError::TooLarge(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(GroundSetError::EmptyName);
            }
            if names[..i].contains(name) {
                return Err(GroundSetError::DuplicateName(name.clone()));
            }
        }
        Ok(GroundSet { names })
    }

    /// Ground set `a, b, c, ...` of size `n`, used for enumerated spaces.
    pub fn alpha(n: usize) -> Self {
        assert!(n >= 1 && n <= 26, "alphabetic ground sets cover 1..=26 elements");
        let letters = "abcdefghijklmnopqrstuvwxyz";
        GroundSet::new(letters.chars().take(n).map(String::from)).unwrap()
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The subset containing every element.
    pub fn full(&self) -> Subset {
        if self.names.len() == MAX_GROUND {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << self.names.len()) - 1)
        }
    }

    pub fn complement(&self, a: Subset) -> Subset {
        debug_assert!(self.admits(a));
        Subset(self.full().0 & !a.0)
    }

    /// True if `a` uses only bits this ground set defines.
    pub fn admits(&self, a: Subset) -> bool {
        a.0 & !self.full().0 == 0
    }

    /// Builds a subset from element names.
    pub fn subset<I, S>(&self, elems: I) -> Result<Subset, GroundSetError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u32;
        for e in elems {
            let i = self
                .index_of(e.as_ref())
                .ok_or_else(|| GroundSetError::UnknownElement(e.as_ref().to_string()))?;
            bits |= 1 << i;
        }
        Ok(Subset(bits))
    }

    /// Renders `a` as `{a,c}`; the empty subset as `{}`.
    pub fn render(&self, a: Subset) -> String {
        let inner = a.iter().map(|i| self.name(i)).join(",");
        format!("{{{inner}}}")
    }
}

/// A subset of a ground set, one bit per element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn singleton(i: usize) -> Self {
        Subset(1 << i)
    }

    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// Number of elements.
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn meet(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn join(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub const fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_GROUND).filter(move |i| bits >> i & 1 == 1)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().map(|i| i.to_string()).join(","))
    }
}

/// A family of subsets kept sorted ascending by bit pattern with duplicates
/// removed, so equal families compare equal and iteration order is canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetFamily {
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(members: I) -> Self {
        let mut members: Vec<Subset> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        SetFamily { members }
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, a: Subset) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    /// Packs the family into one word: bit `m` set iff the subset with bit
    /// pattern `m` is a member. Only defined for ground sets with n <= 6.
    pub fn encode(&self) -> u64 {
        let mut bits = 0u64;
        for m in &self.members {
            assert!(m.bits() < 64, "family encoding requires subsets over n <= 6 elements");
            bits |= 1 << m.bits();
        }
        bits
    }

    /// Inverse of [`SetFamily::encode`].
    pub fn decode(bits: u64) -> Self {
        SetFamily::new((0..64).filter(|m| bits >> m & 1 == 1).map(|m| Subset(m as u32)))
    }

    /// Renders the family with named members, e.g. `{{},{a},{a,b}}`.
    pub fn render(&self, ground: &GroundSet) -> String {
        format!("{{{}}}", self.members.iter().map(|m| ground.render(*m)).join(","))
    }
}

impl FromIterator<Subset> for SetFamily {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        SetFamily::new(iter)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = Subset;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, Subset>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

/// Image of `a` under the relabeling sending element `i` to `perm[i]`.
pub fn apply_permutation(a: Subset, perm: &[usize]) -> Subset {
    let mut bits = 0u32;
    for (i, &p) in perm.iter().enumerate() {
        if a.contains(i) {
            bits |= 1 << p;
        }
    }
    Subset(bits)
}

/// Least image of `family` under all relabelings of the ground set, comparing
/// the sorted member lists lexicographically. Two families have the same
/// canonical form exactly when some relabeling maps one onto the other.
///
/// Brute force over the n! relabelings, so restricted to small ground sets.
pub fn canonical_form(ground: &GroundSet, family: &SetFamily) -> SetFamily {
    let n = ground.n();
    assert!(n <= 8, "canonical_form tries all n! relabelings, n = {n} is too large");
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut img: Vec<Subset> =
                family.iter().map(|m| apply_permutation(m, &perm)).collect();
            img.sort_unstable();
            img
        })
        .min()
        .map(SetFamily::new)
        .expect("ground sets are non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground(names: &str) -> GroundSet {
        GroundSet::new(names.split(',')).unwrap()
    }

    #[test]
    fn ground_set_rejects_bad_names() {
        assert_eq!(GroundSet::new(Vec::<String>::new()).unwrap_err(), GroundSetError::Empty);
        assert_eq!(
            GroundSet::new(["a", "b", "a"]).unwrap_err(),
            GroundSetError::DuplicateName("a".into())
        );
        assert!(GroundSet::new((0..40).map(|i| i.to_string())).is_err());
    }

    #[test]
    fn complement_over_four_elements() {
        let g = ground("a,b,c,d");
        let ac = g.subset(["a", "c"]).unwrap();
        assert_eq!(g.complement(ac), g.subset(["b", "d"]).unwrap());
        assert_eq!(g.complement(Subset::EMPTY), g.full());
        assert_eq!(g.complement(g.full()), Subset::EMPTY);
    }

    #[test]
    fn complement_is_an_involution() {
        let g = ground("a,b,c,d,e");
        for bits in 0..32u32 {
            let a = Subset::from_bits(bits);
            assert_eq!(g.complement(g.complement(a)), a);
        }
    }

    #[test]
    fn de_morgan_laws() {
        let g = ground("a,b,c,d");
        for x in 0..16u32 {
            for y in 0..16u32 {
                let (a, b) = (Subset::from_bits(x), Subset::from_bits(y));
                assert_eq!(g.complement(a.meet(b)), g.complement(a).join(g.complement(b)));
                assert_eq!(g.complement(a.join(b)), g.complement(a).meet(g.complement(b)));
            }
        }
    }

    #[test]
    fn subset_algebra() {
        let a = Subset::from_bits(0b0101);
        let b = Subset::from_bits(0b0110);
        assert_eq!(a.meet(b), Subset::from_bits(0b0100));
        assert_eq!(a.join(b), Subset::from_bits(0b0111));
        assert_eq!(a.minus(b), Subset::from_bits(0b0001));
        assert!(Subset::EMPTY.is_subset(a));
        assert!(a.is_subset(a));
        assert!(!a.is_subset(b));
    }

    #[test]
    fn family_is_canonically_ordered() {
        let f = SetFamily::new([
            Subset::from_bits(5),
            Subset::from_bits(0),
            Subset::from_bits(5),
            Subset::from_bits(2),
        ]);
        let bits: Vec<u32> = f.iter().map(Subset::bits).collect();
        assert_eq!(bits, vec![0, 2, 5]);
        assert!(f.contains(Subset::from_bits(2)));
        assert!(!f.contains(Subset::from_bits(3)));
    }

    #[test]
    fn family_encoding_round_trips() {
        let f = SetFamily::new([0, 2, 5, 15].map(Subset::from_bits));
        assert_eq!(f.encode(), 1 | 1 << 2 | 1 << 5 | 1 << 15);
        assert_eq!(SetFamily::decode(f.encode()), f);
    }

    #[test]
    fn render_uses_element_names() {
        let g = ground("a,b,c,d");
        assert_eq!(g.render(Subset::EMPTY), "{}");
        assert_eq!(g.render(g.subset(["a", "c"]).unwrap()), "{a,c}");
        let f = SetFamily::new([Subset::EMPTY, g.full()]);
        assert_eq!(f.render(&g), "{{},{a,b,c,d}}");
    }

    #[test]
    fn canonical_form_of_singleton_families() {
        let g = ground("a,b");
        let fa = SetFamily::new([Subset::EMPTY, g.full(), g.subset(["a"]).unwrap()]);
        let fb = SetFamily::new([Subset::EMPTY, g.full(), g.subset(["b"]).unwrap()]);
        assert_eq!(canonical_form(&g, &fa), fa);
        assert_eq!(canonical_form(&g, &fb), fa);
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_invariant() {
        let g = ground("a,b,c");
        // every family over three elements containing {} and X
        for middles in 0u32..64 {
            let mut members = vec![Subset::EMPTY, g.full()];
            members.extend((1..7u32).filter(|m| middles >> (m - 1) & 1 == 1).map(Subset::from_bits));
            let f = SetFamily::new(members);
            let canon = canonical_form(&g, &f);
            assert_eq!(canonical_form(&g, &canon), canon);
            for perm in (0..3).permutations(3) {
                let img = SetFamily::new(f.iter().map(|m| apply_permutation(m, &perm)));
                assert_eq!(canonical_form(&g, &img), canon);
            }
        }
    }
}
