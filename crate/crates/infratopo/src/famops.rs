//! Interior-style operators relative to an arbitrary set family.
//!
//! Any family containing the empty set and the ground set induces its own
//! interior, closure, derived-set, exterior and boundary operators by the
//! same recipes the opens use: interior joins the members below a set,
//! closure meets the member complements above it, and the derived set keeps
//! the points whose every containing member hits the set elsewhere. Applied
//! to the opens this reproduces the space operators; applied to, say, the
//! e-open family it yields the operators that class induces.
//!
//! The recipes never assume the family is closed under meets or joins, so
//! laws that need those closure properties (distribution of interior over
//! meets, of the derived set over joins) can and do fail here.

use thiserror::Error;

use crate::sets::{GroundSet, SetFamily, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FamilyViewError {
    #[error("family does not contain the empty set")]
    MissingEmpty,
    #[error("family does not contain the ground set")]
    MissingFull,
}

/// A set family paired with its ground set, exposing the induced operators.
#[derive(Debug, Clone, Copy)]
pub struct FamilyView<'a> {
    ground: &'a GroundSet,
    family: &'a SetFamily,
}

impl<'a> FamilyView<'a> {
    pub fn new(ground: &'a GroundSet, family: &'a SetFamily) -> Result<Self, FamilyViewError> {
        if !family.contains(Subset::EMPTY) {
            return Err(FamilyViewError::MissingEmpty);
        }
        if !family.contains(ground.full()) {
            return Err(FamilyViewError::MissingFull);
        }
        Ok(FamilyView { ground, family })
    }

    pub fn ground(&self) -> &'a GroundSet {
        self.ground
    }

    pub fn family(&self) -> &'a SetFamily {
        self.family
    }

    /// Join of the members contained in `a`.
    pub fn interior(&self, a: Subset) -> Subset {
        debug_assert!(self.ground.admits(a));
        self.family
            .iter()
            .filter(|m| m.is_subset(a))
            .fold(Subset::EMPTY, Subset::join)
    }

    /// Meet of the member complements that contain `a`.
    pub fn closure(&self, a: Subset) -> Subset {
        debug_assert!(self.ground.admits(a));
        self.family
            .iter()
            .map(|m| self.ground.complement(m))
            .filter(|c| a.is_subset(*c))
            .fold(self.ground.full(), Subset::meet)
    }

    /// Points whose every containing member meets `a` somewhere else.
    pub fn derived_set(&self, a: Subset) -> Subset {
        debug_assert!(self.ground.admits(a));
        let mut out = Subset::EMPTY;
        for x in self.ground.full().iter() {
            let punctured = a.minus(Subset::singleton(x));
            let isolated = self
                .family
                .iter()
                .any(|m| m.contains(x) && m.meet(punctured).is_empty());
            if !isolated {
                out = out.join(Subset::singleton(x));
            }
        }
        out
    }

    /// Interior of the complement.
    pub fn exterior(&self, a: Subset) -> Subset {
        self.interior(self.ground.complement(a))
    }

    /// Everything in neither the interior nor the exterior.
    pub fn boundary(&self, a: Subset) -> Subset {
        self.ground.complement(self.interior(a).join(self.exterior(a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{family_of, ClassId, ClassKind};
    use crate::space::InfraSpace;

    fn four_point() -> InfraSpace {
        let g = GroundSet::new(["a", "b", "c", "d"]).unwrap();
        let opens: SetFamily = [
            Subset::EMPTY,
            g.subset(["a"]).unwrap(),
            g.subset(["b"]).unwrap(),
            g.subset(["a", "c"]).unwrap(),
            g.full(),
        ]
        .into_iter()
        .collect();
        InfraSpace::new(g, opens).unwrap()
    }

    fn sub(s: &InfraSpace, elems: &[&str]) -> Subset {
        s.ground().subset(elems.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_families_without_the_bounds() {
        let g = GroundSet::new(["a", "b"]).unwrap();
        let no_empty: SetFamily = [g.full()].into_iter().collect();
        assert!(matches!(FamilyView::new(&g, &no_empty), Err(FamilyViewError::MissingEmpty)));
        let no_full: SetFamily = [Subset::EMPTY].into_iter().collect();
        assert!(matches!(FamilyView::new(&g, &no_full), Err(FamilyViewError::MissingFull)));
    }

    #[test]
    fn over_the_opens_the_operators_match_the_space() {
        let s = four_point();
        let view = FamilyView::new(s.ground(), s.opens()).unwrap();
        for bits in 0..16u32 {
            let a = Subset::from_bits(bits);
            assert_eq!(view.interior(a), s.interior(a));
            assert_eq!(view.closure(a), s.closure(a));
            assert_eq!(view.derived_set(a), s.derived_set(a));
            assert_eq!(view.exterior(a), s.exterior(a));
            assert_eq!(view.boundary(a), s.boundary(a));
        }
    }

    #[test]
    fn e_open_family_values() {
        let s = four_point();
        let fam = family_of(&s, ClassId::open(ClassKind::EOpen));
        let view = FamilyView::new(s.ground(), &fam).unwrap();
        let bd = sub(&s, &["b", "d"]);
        assert_eq!(view.interior(bd), bd);
        assert!(!s.is_open(bd));
        assert_eq!(view.closure(sub(&s, &["a"])), sub(&s, &["a"]));
        assert_eq!(view.derived_set(sub(&s, &["a"])), Subset::EMPTY);
    }

    #[test]
    fn interior_does_not_distribute_over_meets_here() {
        let s = four_point();
        let fam = family_of(&s, ClassId::open(ClassKind::EOpen));
        let view = FamilyView::new(s.ground(), &fam).unwrap();
        let acd = sub(&s, &["a", "c", "d"]);
        let bcd = sub(&s, &["b", "c", "d"]);
        assert_eq!(view.interior(acd).meet(view.interior(bcd)), sub(&s, &["c", "d"]));
        assert_eq!(view.interior(acd.meet(bcd)), sub(&s, &["c"]));
    }

    #[test]
    fn induced_operators_obey_the_family_free_laws() {
        let s = four_point();
        let families: Vec<SetFamily> = vec![
            s.opens().clone(),
            family_of(&s, ClassId::open(ClassKind::EOpen)),
            family_of(&s, ClassId::open(ClassKind::PreOpen)),
            family_of(&s, ClassId::open(ClassKind::EStarOpen)),
        ];
        for fam in &families {
            let view = FamilyView::new(s.ground(), fam).unwrap();
            for bits in 0..16u32 {
                let a = Subset::from_bits(bits);
                assert!(view.interior(a).is_subset(a));
                assert!(a.is_subset(view.closure(a)));
                assert_eq!(view.interior(view.interior(a)), view.interior(a));
                assert_eq!(view.closure(view.closure(a)), view.closure(a));
                assert_eq!(
                    view.closure(a),
                    s.ground().complement(view.interior(s.ground().complement(a)))
                );
                assert_eq!(view.closure(a), a.join(view.derived_set(a)));
                assert_eq!(view.boundary(a), view.closure(a).minus(view.interior(a)));
                for other in 0..16u32 {
                    let b = Subset::from_bits(other);
                    if a.is_subset(b) {
                        assert!(view.interior(a).is_subset(view.interior(b)));
                        assert!(view.closure(a).is_subset(view.closure(b)));
                    }
                }
            }
        }
    }
}
