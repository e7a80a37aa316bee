//! Infra-topological spaces and their primitive operators.
//!
//! A space is a family of "open" subsets that contains the empty set and the
//! whole ground set and is closed under pairwise intersection. Unions of
//! opens need not be open, which is what separates these spaces from
//! topologies: interiors need not be open, closures need not be closed, and
//! several classical identities degrade to one-sided inclusions.

use std::error::Error;
use std::fmt;

use crate::sets::{GroundSet, SetFamily, Subset};

/// A ground set together with a validated open family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfraSpace {
    ground: GroundSet,
    opens: SetFamily,
}

/// A pairwise intersection absent from the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MissingMeet {
    pub left: Subset,
    pub right: Subset,
    pub meet: Subset,
}

/// Everything wrong with a candidate open family: whether the empty set or
/// the ground set is absent, and every missing pairwise intersection.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationError {
    pub missing_empty: bool,
    pub missing_full: bool,
    pub missing_meets: Vec<MissingMeet>,
}

impl ValidationError {
    fn is_ok(&self) -> bool {
        !self.missing_empty && !self.missing_full && self.missing_meets.is_empty()
    }

    /// Human-readable report with member names resolved against `ground`.
    pub fn render(&self, ground: &GroundSet) -> String {
        let mut lines = Vec::new();
        if self.missing_empty {
            lines.push("the empty set is not a member".to_string());
        }
        if self.missing_full {
            lines.push("the ground set is not a member".to_string());
        }
        for miss in &self.missing_meets {
            lines.push(format!(
                "not meet-closed: {} and {} are members but their intersection {} is not",
                ground.render(miss.left),
                ground.render(miss.right),
                ground.render(miss.meet),
            ));
        }
        lines.join("\n")
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.missing_empty {
            writeln!(f, "the empty set is not a member")?;
        }
        if self.missing_full {
            writeln!(f, "the ground set is not a member")?;
        }
        for miss in &self.missing_meets {
            writeln!(
                f,
                "not meet-closed: {} and {} are members but {} is not",
                miss.left, miss.right, miss.meet
            )?;
        }
        Ok(())
    }
}

impl Error for ValidationError {}

impl InfraSpace {
    /// Validates `opens` over `ground`: the empty set and the ground set must
    /// be members and every pairwise intersection of members must be a
    /// member. The error lists every violation, not just the first.
    pub fn new(ground: GroundSet, opens: SetFamily) -> Result<Self, ValidationError> {
        let mut err = ValidationError::default();
        err.missing_empty = !opens.contains(Subset::EMPTY);
        err.missing_full = !opens.contains(ground.full());
        let members = opens.members();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let meet = a.meet(b);
                if !opens.contains(meet) {
                    err.missing_meets.push(MissingMeet { left: a, right: b, meet });
                }
            }
        }
        if err.is_ok() {
            Ok(InfraSpace { ground, opens })
        } else {
            Err(err)
        }
    }

    /// Closes `opens` under pairwise intersections (adding the empty set and
    /// the ground set if absent) and returns the space plus what was added.
    pub fn completed(ground: GroundSet, opens: SetFamily) -> (Self, SetFamily) {
        let mut members: Vec<Subset> = opens.iter().collect();
        members.push(Subset::EMPTY);
        members.push(ground.full());
        let mut family = SetFamily::new(members);
        loop {
            let mut added = Vec::new();
            let members = family.members();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    let meet = a.meet(b);
                    if !family.contains(meet) {
                        added.push(meet);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            family = SetFamily::new(family.iter().chain(added));
        }
        let added = SetFamily::new(family.iter().filter(|m| !opens.contains(*m)));
        let space = InfraSpace { ground, opens: family };
        debug_assert!(InfraSpace::new(space.ground.clone(), space.opens.clone()).is_ok());
        (space, added)
    }

    /// Builds a space the caller has already proven valid (enumeration).
    pub(crate) fn from_validated_parts(ground: GroundSet, opens: SetFamily) -> Self {
        debug_assert!(InfraSpace::new(ground.clone(), opens.clone()).is_ok());
        InfraSpace { ground, opens }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.opens.contains(a)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.opens.contains(self.ground.complement(a))
    }

    /// Complements of the opens, in canonical order.
    pub fn closed_sets(&self) -> SetFamily {
        self.opens.iter().map(|o| self.ground.complement(o)).collect()
    }

    /// Union of all open subsets of `a`. Not open in general, since the open
    /// family need not be union-closed.
    pub fn interior(&self, a: Subset) -> Subset {
        debug_assert!(self.ground.admits(a));
        let mut out = Subset::EMPTY;
        for o in &self.opens {
            if o.is_subset(a) {
                out = out.join(o);
            }
        }
        out
    }

    /// Intersection of all closed supersets of `a`. Not closed in general.
    pub fn closure(&self, a: Subset) -> Subset {
        debug_assert!(self.ground.admits(a));
        let mut out = self.ground.full();
        for o in &self.opens {
            let c = self.ground.complement(o);
            if a.is_subset(c) {
                out = out.meet(c);
            }
        }
        out
    }

    /// Interior of the complement.
    pub fn exterior(&self, a: Subset) -> Subset {
        self.interior(self.ground.complement(a))
    }

    /// Points in neither the interior nor the exterior; equivalently
    /// `closure(a) - interior(a)`.
    pub fn boundary(&self, a: Subset) -> Subset {
        self.ground.complement(self.interior(a).join(self.exterior(a)))
    }

    /// Cluster points of `a`: every open set containing the point meets `a`
    /// somewhere else.
    pub fn derived_set(&self, a: Subset) -> Subset {
        debug_assert!(self.ground.admits(a));
        let mut out = Subset::EMPTY;
        'points: for x in self.ground.full().iter() {
            let deleted = a.minus(Subset::singleton(x));
            for o in &self.opens {
                if o.contains(x) && o.meet(deleted).is_empty() {
                    continue 'points;
                }
            }
            out = out.join(Subset::singleton(x));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(names: &str, opens: &[&[&str]]) -> InfraSpace {
        let g = GroundSet::new(names.split(',')).unwrap();
        let family: SetFamily = opens.iter().map(|o| g.subset(o.iter().copied()).unwrap()).collect();
        InfraSpace::new(g, family).unwrap()
    }

    /// Four points with opens {}, X, {a}, {b}, {a,c}.
    fn four_point() -> InfraSpace {
        space("a,b,c,d", &[&[], &["a"], &["b"], &["a", "c"], &["a", "b", "c", "d"]])
    }

    /// Four points with opens {}, X, {b}, {c}, {b,c,d}.
    fn four_point_alt() -> InfraSpace {
        space("a,b,c,d", &[&[], &["b"], &["c"], &["b", "c", "d"], &["a", "b", "c", "d"]])
    }

    /// Three points with opens {}, X, {a}, {b}.
    fn three_point() -> InfraSpace {
        space("a,b,c", &[&[], &["a"], &["b"], &["a", "b", "c"]])
    }

    fn sub(s: &InfraSpace, elems: &[&str]) -> Subset {
        s.ground().subset(elems.iter().copied()).unwrap()
    }

    #[test]
    fn validates_the_fixture_spaces() {
        four_point();
        four_point_alt();
        three_point();
    }

    #[test]
    fn rejects_family_missing_a_meet() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let ab = g.subset(["a", "b"]).unwrap();
        let bc = g.subset(["b", "c"]).unwrap();
        let err = InfraSpace::new(g.clone(), SetFamily::new([Subset::EMPTY, g.full(), ab, bc]))
            .unwrap_err();
        assert!(!err.missing_empty && !err.missing_full);
        assert_eq!(
            err.missing_meets,
            vec![MissingMeet { left: ab, right: bc, meet: g.subset(["b"]).unwrap() }]
        );
    }

    #[test]
    fn reports_every_violation_at_once() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let ab = g.subset(["a", "b"]).unwrap();
        let bc = g.subset(["b", "c"]).unwrap();
        let ac = g.subset(["a", "c"]).unwrap();
        let err = InfraSpace::new(g, SetFamily::new([ab, bc, ac])).unwrap_err();
        assert!(err.missing_empty && err.missing_full);
        assert_eq!(err.missing_meets.len(), 3);
    }

    #[test]
    fn completion_adds_the_missing_sets() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let ab = g.subset(["a", "b"]).unwrap();
        let bc = g.subset(["b", "c"]).unwrap();
        let (s, added) = InfraSpace::completed(g.clone(), SetFamily::new([ab, bc]));
        assert!(s.is_open(g.subset(["b"]).unwrap()));
        let names: Vec<String> = added.iter().map(|m| g.render(m)).collect();
        assert_eq!(names, vec!["{}", "{b}", "{a,b,c}"]);
    }

    #[test]
    fn closed_sets_of_the_fixtures() {
        let s = four_point();
        assert_eq!(
            s.closed_sets().render(s.ground()),
            "{{},{b,d},{a,c,d},{b,c,d},{a,b,c,d}}"
        );
        let s = four_point_alt();
        assert_eq!(
            s.closed_sets().render(s.ground()),
            "{{},{a},{a,b,d},{a,c,d},{a,b,c,d}}"
        );
    }

    #[test]
    fn interior_keeps_only_open_content() {
        let s = four_point();
        assert_eq!(s.interior(sub(&s, &["a", "c", "d"])), sub(&s, &["a", "c"]));
        assert_eq!(s.interior(sub(&s, &["c", "d"])), Subset::EMPTY);
        // union of two opens: the interior is the whole set even though the
        // set itself is not open
        let ab = sub(&s, &["a", "b"]);
        assert_eq!(s.interior(ab), ab);
        assert!(!s.is_open(ab));
    }

    #[test]
    fn closure_of_the_fixture_sets() {
        let s = four_point();
        assert_eq!(s.closure(sub(&s, &["a"])), sub(&s, &["a", "c", "d"]));
        assert_eq!(s.closure(sub(&s, &["c"])), sub(&s, &["c", "d"]));
        // fixed point of closure that is not closed
        let d = sub(&s, &["d"]);
        assert_eq!(s.closure(d), d);
        assert!(!s.is_closed(d));
    }

    #[test]
    fn exterior_boundary_and_derived_set() {
        let s = four_point();
        let a = sub(&s, &["a"]);
        assert_eq!(s.exterior(a), sub(&s, &["b"]));
        assert_eq!(s.boundary(a), sub(&s, &["c", "d"]));
        assert_eq!(s.derived_set(a), sub(&s, &["c", "d"]));
        assert_eq!(s.boundary(Subset::EMPTY), Subset::EMPTY);
        assert_eq!(s.derived_set(Subset::EMPTY), Subset::EMPTY);
    }

    #[test]
    fn derived_set_on_the_indiscrete_space() {
        let s = space("a,b", &[&[], &["a", "b"]]);
        assert_eq!(s.derived_set(sub(&s, &["a"])), sub(&s, &["b"]));
        assert_eq!(s.derived_set(s.ground().full()), s.ground().full());
    }

    #[test]
    fn closure_fixed_point_need_not_be_closed() {
        let s = three_point();
        let c = sub(&s, &["c"]);
        assert_eq!(s.closure(c), c);
        assert!(!s.is_closed(c));
    }

    #[test]
    fn meet_of_two_spaces_stays_valid_but_join_need_not() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let ab = g.subset(["a", "b"]).unwrap();
        let bc = g.subset(["b", "c"]).unwrap();
        let s1 = InfraSpace::new(g.clone(), SetFamily::new([Subset::EMPTY, g.full(), ab])).unwrap();
        let s2 = InfraSpace::new(g.clone(), SetFamily::new([Subset::EMPTY, g.full(), bc])).unwrap();
        let common: SetFamily =
            s1.opens().iter().filter(|o| s2.opens().contains(*o)).collect();
        assert!(InfraSpace::new(g.clone(), common).is_ok());
        let union: SetFamily = s1.opens().iter().chain(s2.opens().iter()).collect();
        let err = InfraSpace::new(g.clone(), union).unwrap_err();
        assert_eq!(err.missing_meets.len(), 1);
        assert_eq!(err.missing_meets[0].meet, g.subset(["b"]).unwrap());
    }
}
