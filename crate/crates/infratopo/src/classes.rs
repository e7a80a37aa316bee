//! Generalized open-set classes over an infra space.
//!
//! Beyond the opens themselves, ten classes are supported, each defined by an
//! inclusion or fixed-point condition on composites of interior, closure and
//! their delta variants:
//!
//! | class             | membership condition          |
//! |-------------------|-------------------------------|
//! | `regular-open`    | a = int(cl(a))                |
//! | `delta-open`      | a = dint(a)                   |
//! | `pre-open`        | a ⊆ int(cl(a))                |
//! | `semi-open`       | a ⊆ cl(int(a))                |
//! | `delta-pre-open`  | a ⊆ int(dcl(a))               |
//! | `delta-semi-open` | a ⊆ cl(dint(a))               |
//! | `e-open`          | a ⊆ cl(dint(a)) ∪ int(dcl(a)) |
//! | `e-star-open`     | a ⊆ cl(int(dcl(a)))           |
//! | `a-open`          | a ⊆ int(cl(dint(a)))          |
//! | `beta-open`       | a ⊆ cl(int(cl(a)))            |
//!
//! where `dint(a)` (delta interior) is the union of the regular-open subsets
//! of `a` and `dcl(a)` (delta closure) is its complement dual, the meet of
//! the regular-closed supersets. Every class also has a `-closed` dual held
//! by exactly the complements of its members.
//!
//! Delta-dependent operators enumerate the regular-open family, so they scan
//! all `2^n` subsets; this module is meant for small spaces.

use std::fmt;

use thiserror::Error;

use crate::sets::{SetFamily, Subset};
use crate::space::InfraSpace;

/// The eleven open-set classes, in canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    Open,
    RegularOpen,
    DeltaOpen,
    PreOpen,
    SemiOpen,
    DeltaPreOpen,
    DeltaSemiOpen,
    EOpen,
    EStarOpen,
    AOpen,
    BetaOpen,
}

pub const ALL_KINDS: [ClassKind; 11] = [
    ClassKind::Open,
    ClassKind::RegularOpen,
    ClassKind::DeltaOpen,
    ClassKind::PreOpen,
    ClassKind::SemiOpen,
    ClassKind::DeltaPreOpen,
    ClassKind::DeltaSemiOpen,
    ClassKind::EOpen,
    ClassKind::EStarOpen,
    ClassKind::AOpen,
    ClassKind::BetaOpen,
];

impl ClassKind {
    pub const fn open_name(self) -> &'static str {
        match self {
            ClassKind::Open => "open",
            ClassKind::RegularOpen => "regular-open",
            ClassKind::DeltaOpen => "delta-open",
            ClassKind::PreOpen => "pre-open",
            ClassKind::SemiOpen => "semi-open",
            ClassKind::DeltaPreOpen => "delta-pre-open",
            ClassKind::DeltaSemiOpen => "delta-semi-open",
            ClassKind::EOpen => "e-open",
            ClassKind::EStarOpen => "e-star-open",
            ClassKind::AOpen => "a-open",
            ClassKind::BetaOpen => "beta-open",
        }
    }

    pub const fn closed_name(self) -> &'static str {
        match self {
            ClassKind::Open => "closed",
            ClassKind::RegularOpen => "regular-closed",
            ClassKind::DeltaOpen => "delta-closed",
            ClassKind::PreOpen => "pre-closed",
            ClassKind::SemiOpen => "semi-closed",
            ClassKind::DeltaPreOpen => "delta-pre-closed",
            ClassKind::DeltaSemiOpen => "delta-semi-closed",
            ClassKind::EOpen => "e-closed",
            ClassKind::EStarOpen => "e-star-closed",
            ClassKind::AOpen => "a-closed",
            ClassKind::BetaOpen => "beta-closed",
        }
    }

    pub const fn index(self) -> usize {
        self as usize
    }
}

/// A class tag: one of the eleven kinds, on the open or the closed side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId {
    pub kind: ClassKind,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class {0:?} (expected one of: open, regular-open, delta-open, pre-open, semi-open, delta-pre-open, delta-semi-open, e-open, e-star-open, a-open, beta-open, or a -closed dual)")]
pub struct UnknownClass(pub String);

impl ClassId {
    pub const fn open(kind: ClassKind) -> Self {
        ClassId { kind, closed: false }
    }

    pub const fn closed(kind: ClassKind) -> Self {
        ClassId { kind, closed: true }
    }

    /// The tag on the opposite side: a set is a member of `dual()` exactly
    /// when its complement is a member of `self`.
    pub const fn dual(self) -> Self {
        ClassId { kind: self.kind, closed: !self.closed }
    }

    pub const fn name(self) -> &'static str {
        if self.closed {
            self.kind.closed_name()
        } else {
            self.kind.open_name()
        }
    }

    pub fn parse(name: &str) -> Result<Self, UnknownClass> {
        for kind in ALL_KINDS {
            if name == kind.open_name() {
                return Ok(ClassId::open(kind));
            }
            if name == kind.closed_name() {
                return Ok(ClassId::closed(kind));
            }
        }
        Err(UnknownClass(name.to_string()))
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the delta closure is computed.
///
/// The default takes the meet of the regular-closed supersets, which makes
/// delta closure the complement dual of delta interior. `RegularOpenMeet`
/// instead meets the regular-open supersets; it is exposed so reports can
/// demonstrate how badly that variant fits the rest of the operator algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeltaClosureMode {
    #[default]
    RegularClosedMeet,
    RegularOpenMeet,
}

pub fn is_regular_open(s: &InfraSpace, a: Subset) -> bool {
    a == s.interior(s.closure(a))
}

pub fn is_regular_closed(s: &InfraSpace, a: Subset) -> bool {
    is_regular_open(s, s.ground().complement(a))
}

fn all_subsets(s: &InfraSpace) -> impl Iterator<Item = Subset> {
    let n = s.ground().n();
    assert!(n <= 26, "class machinery scans all 2^n subsets, n = {n} is too large");
    (0..=s.ground().full().bits()).map(Subset::from_bits)
}

/// All regular-open subsets, i.e. fixed points of interior-after-closure.
pub fn regular_open_family(s: &InfraSpace) -> SetFamily {
    all_subsets(s).filter(|&a| is_regular_open(s, a)).collect()
}

/// Union of the regular-open subsets of `a`.
pub fn delta_interior(s: &InfraSpace, a: Subset) -> Subset {
    debug_assert!(s.ground().admits(a));
    let mut out = Subset::EMPTY;
    for r in all_subsets(s) {
        if r.is_subset(a) && is_regular_open(s, r) {
            out = out.join(r);
        }
    }
    out
}

/// Meet of the regular-closed supersets of `a`; the complement dual of
/// [`delta_interior`].
pub fn delta_closure(s: &InfraSpace, a: Subset) -> Subset {
    delta_closure_with(s, a, DeltaClosureMode::default())
}

pub fn delta_closure_with(s: &InfraSpace, a: Subset, mode: DeltaClosureMode) -> Subset {
    debug_assert!(s.ground().admits(a));
    let mut out = s.ground().full();
    for r in all_subsets(s) {
        let keep = match mode {
            DeltaClosureMode::RegularClosedMeet => a.is_subset(r) && is_regular_closed(s, r),
            DeltaClosureMode::RegularOpenMeet => a.is_subset(r) && is_regular_open(s, r),
        };
        if keep {
            out = out.meet(r);
        }
    }
    out
}

/// `dcl(a) ∩ (X - dint(a))`.
pub fn delta_frontier(s: &InfraSpace, a: Subset) -> Subset {
    delta_frontier_with(s, a, DeltaClosureMode::default())
}

pub fn delta_frontier_with(s: &InfraSpace, a: Subset, mode: DeltaClosureMode) -> Subset {
    delta_closure_with(s, a, mode).meet(s.ground().complement(delta_interior(s, a)))
}

/// Membership of `a` in class `c`, with closed tags tested on the complement.
pub fn is_member(s: &InfraSpace, c: ClassId, a: Subset) -> bool {
    is_member_with(s, c, a, DeltaClosureMode::default())
}

pub fn is_member_with(s: &InfraSpace, c: ClassId, a: Subset, mode: DeltaClosureMode) -> bool {
    let a = if c.closed { s.ground().complement(a) } else { a };
    let dcl = |x| delta_closure_with(s, x, mode);
    match c.kind {
        ClassKind::Open => s.is_open(a),
        ClassKind::RegularOpen => is_regular_open(s, a),
        ClassKind::DeltaOpen => a == delta_interior(s, a),
        ClassKind::PreOpen => a.is_subset(s.interior(s.closure(a))),
        ClassKind::SemiOpen => a.is_subset(s.closure(s.interior(a))),
        ClassKind::DeltaPreOpen => a.is_subset(s.interior(dcl(a))),
        ClassKind::DeltaSemiOpen => a.is_subset(s.closure(delta_interior(s, a))),
        ClassKind::EOpen => {
            a.is_subset(s.closure(delta_interior(s, a)).join(s.interior(dcl(a))))
        }
        ClassKind::EStarOpen => a.is_subset(s.closure(s.interior(dcl(a)))),
        ClassKind::AOpen => a.is_subset(s.interior(s.closure(delta_interior(s, a)))),
        ClassKind::BetaOpen => a.is_subset(s.closure(s.interior(s.closure(a)))),
    }
}

/// Every subset belonging to class `c`, in canonical order.
pub fn family_of(s: &InfraSpace, c: ClassId) -> SetFamily {
    family_of_with(s, c, DeltaClosureMode::default())
}

pub fn family_of_with(s: &InfraSpace, c: ClassId, mode: DeltaClosureMode) -> SetFamily {
    all_subsets(s).filter(|&a| is_member_with(s, c, a, mode)).collect()
}

/// Precomputed operator tables for one space. Observationally identical to
/// the free functions above, just indexed instead of recomputed; the sweep
/// and enumeration paths build one of these per space.
pub struct ClassView<'a> {
    space: &'a InfraSpace,
    int: Vec<Subset>,
    cl: Vec<Subset>,
    dint: Vec<Subset>,
    dcl: Vec<Subset>,
}

impl<'a> ClassView<'a> {
    pub fn new(space: &'a InfraSpace) -> Self {
        ClassView::with_mode(space, DeltaClosureMode::default())
    }

    pub fn with_mode(space: &'a InfraSpace, mode: DeltaClosureMode) -> Self {
        let n = space.ground().n();
        assert!(n <= 16, "operator tables take 2^n entries, n = {n} is too large");
        let size = 1usize << n;
        let mut int = Vec::with_capacity(size);
        let mut cl = Vec::with_capacity(size);
        for bits in 0..size as u32 {
            int.push(space.interior(Subset::from_bits(bits)));
            cl.push(space.closure(Subset::from_bits(bits)));
        }
        // regular opens from the tables, then the delta pair from those
        let full = space.ground().full();
        let regular_open: Vec<Subset> = (0..size as u32)
            .map(Subset::from_bits)
            .filter(|&a| a == int[cl[a.bits() as usize].bits() as usize])
            .collect();
        let mut dint = Vec::with_capacity(size);
        let mut dcl = Vec::with_capacity(size);
        for bits in 0..size as u32 {
            let a = Subset::from_bits(bits);
            let mut di = Subset::EMPTY;
            let mut dc = full;
            for &r in &regular_open {
                if r.is_subset(a) {
                    di = di.join(r);
                }
                match mode {
                    DeltaClosureMode::RegularClosedMeet => {
                        let c = space.ground().complement(r);
                        if a.is_subset(c) {
                            dc = dc.meet(c);
                        }
                    }
                    DeltaClosureMode::RegularOpenMeet => {
                        if a.is_subset(r) {
                            dc = dc.meet(r);
                        }
                    }
                }
            }
            dint.push(di);
            dcl.push(dc);
        }
        ClassView { space, int, cl, dint, dcl }
    }

    pub fn space(&self) -> &'a InfraSpace {
        self.space
    }

    pub fn interior(&self, a: Subset) -> Subset {
        self.int[a.bits() as usize]
    }

    pub fn closure(&self, a: Subset) -> Subset {
        self.cl[a.bits() as usize]
    }

    pub fn delta_interior(&self, a: Subset) -> Subset {
        self.dint[a.bits() as usize]
    }

    pub fn delta_closure(&self, a: Subset) -> Subset {
        self.dcl[a.bits() as usize]
    }

    pub fn delta_frontier(&self, a: Subset) -> Subset {
        self.delta_closure(a).meet(self.space.ground().complement(self.delta_interior(a)))
    }

    pub fn is_member(&self, c: ClassId, a: Subset) -> bool {
        let a = if c.closed { self.space.ground().complement(a) } else { a };
        let (int, cl) = (|x: Subset| self.interior(x), |x: Subset| self.closure(x));
        let (dint, dcl) = (|x: Subset| self.delta_interior(x), |x: Subset| self.delta_closure(x));
        match c.kind {
            ClassKind::Open => self.space.is_open(a),
            ClassKind::RegularOpen => a == int(cl(a)),
            ClassKind::DeltaOpen => a == dint(a),
            ClassKind::PreOpen => a.is_subset(int(cl(a))),
            ClassKind::SemiOpen => a.is_subset(cl(int(a))),
            ClassKind::DeltaPreOpen => a.is_subset(int(dcl(a))),
            ClassKind::DeltaSemiOpen => a.is_subset(cl(dint(a))),
            ClassKind::EOpen => a.is_subset(cl(dint(a)).join(int(dcl(a)))),
            ClassKind::EStarOpen => a.is_subset(cl(int(dcl(a)))),
            ClassKind::AOpen => a.is_subset(int(cl(dint(a)))),
            ClassKind::BetaOpen => a.is_subset(cl(int(cl(a)))),
        }
    }

    pub fn family_of(&self, c: ClassId) -> SetFamily {
        (0..self.int.len() as u32)
            .map(Subset::from_bits)
            .filter(|&a| self.is_member(c, a))
            .collect()
    }
}
