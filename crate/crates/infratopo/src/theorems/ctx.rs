//! Precomputed operator tables for one space, shared by every predicate in
//! the registry.
//!
//! Building a context evaluates the public operators of [`crate::space`],
//! [`crate::classes`] and [`crate::famops`] into lookup tables: the five
//! base operators, the delta pair, membership bitmasks for all eleven
//! classes, and the induced derived-set/closure/interior operators of the
//! five class families the registry quantifies over. Predicates then run in
//! a handful of table reads.

use crate::classes::{ClassId, ClassKind, ClassView, DeltaClosureMode, ALL_KINDS};
use crate::famops::FamilyView;
use crate::sets::{GroundSet, SetFamily, Subset};
use crate::space::InfraSpace;

/// The class families that get full induced-operator tables.
pub const AUGMENTED: [ClassKind; 5] = [
    ClassKind::DeltaPreOpen,
    ClassKind::DeltaSemiOpen,
    ClassKind::EOpen,
    ClassKind::EStarOpen,
    ClassKind::AOpen,
];

struct InducedTables {
    derived: Vec<Subset>,
    closure: Vec<Subset>,
    interior: Vec<Subset>,
}

pub struct SpaceCtx {
    space: InfraSpace,
    int: Vec<Subset>,
    cl: Vec<Subset>,
    der: Vec<Subset>,
    dint: Vec<Subset>,
    dcl: Vec<Subset>,
    families: [u64; 11],
    induced: [InducedTables; 5],
}

impl SpaceCtx {
    pub fn new(space: InfraSpace) -> Self {
        SpaceCtx::with_mode(space, DeltaClosureMode::default())
    }

    pub fn with_mode(space: InfraSpace, mode: DeltaClosureMode) -> Self {
        let view = ClassView::with_mode(&space, mode);
        let size = 1usize << space.ground().n();
        let all = || (0..size as u32).map(Subset::from_bits);

        let int: Vec<Subset> = all().map(|a| view.interior(a)).collect();
        let cl: Vec<Subset> = all().map(|a| view.closure(a)).collect();
        let der: Vec<Subset> = all().map(|a| space.derived_set(a)).collect();
        let dint: Vec<Subset> = all().map(|a| view.delta_interior(a)).collect();
        let dcl: Vec<Subset> = all().map(|a| view.delta_closure(a)).collect();

        let mut families = [0u64; 11];
        let mut class_families: Vec<SetFamily> = Vec::with_capacity(ALL_KINDS.len());
        for kind in ALL_KINDS {
            let fam = view.family_of(ClassId::open(kind));
            families[kind.index()] = fam.encode();
            class_families.push(fam);
        }

        let induced = AUGMENTED.map(|kind| {
            let fam = &class_families[kind.index()];
            let fv = FamilyView::new(space.ground(), fam)
                .expect("class families always contain the empty set and the ground set");
            InducedTables {
                derived: all().map(|a| fv.derived_set(a)).collect(),
                closure: all().map(|a| fv.closure(a)).collect(),
                interior: all().map(|a| fv.interior(a)).collect(),
            }
        });

        SpaceCtx { space, int, cl, der, dint, dcl, families, induced }
    }

    pub fn space(&self) -> &InfraSpace {
        &self.space
    }

    pub fn ground(&self) -> &GroundSet {
        self.space.ground()
    }

    pub fn size(&self) -> usize {
        self.space.ground().n()
    }

    pub fn full(&self) -> Subset {
        self.space.ground().full()
    }

    pub fn comp(&self, a: Subset) -> Subset {
        self.space.ground().complement(a)
    }

    pub fn int(&self, a: Subset) -> Subset {
        self.int[a.bits() as usize]
    }

    pub fn cl(&self, a: Subset) -> Subset {
        self.cl[a.bits() as usize]
    }

    pub fn der(&self, a: Subset) -> Subset {
        self.der[a.bits() as usize]
    }

    pub fn ext(&self, a: Subset) -> Subset {
        self.int(self.comp(a))
    }

    pub fn bdy(&self, a: Subset) -> Subset {
        self.comp(self.int(a).join(self.ext(a)))
    }

    pub fn dint(&self, a: Subset) -> Subset {
        self.dint[a.bits() as usize]
    }

    pub fn dcl(&self, a: Subset) -> Subset {
        self.dcl[a.bits() as usize]
    }

    pub fn dfr(&self, a: Subset) -> Subset {
        self.dcl(a).meet(self.comp(self.dint(a)))
    }

    pub fn is_open(&self, a: Subset) -> bool {
        self.member(ClassKind::Open, a)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.member(ClassKind::Open, self.comp(a))
    }

    pub fn member(&self, kind: ClassKind, a: Subset) -> bool {
        self.families[kind.index()] >> a.bits() & 1 == 1
    }

    pub fn member_closed(&self, kind: ClassKind, a: Subset) -> bool {
        self.member(kind, self.comp(a))
    }

    pub fn family_mask(&self, kind: ClassKind) -> u64 {
        self.families[kind.index()]
    }

    fn induced(&self, kind: ClassKind) -> &InducedTables {
        let slot = AUGMENTED
            .iter()
            .position(|&k| k == kind)
            .expect("induced operators are only tabulated for the augmented class families");
        &self.induced[slot]
    }

    pub fn fder(&self, kind: ClassKind, a: Subset) -> Subset {
        self.induced(kind).derived[a.bits() as usize]
    }

    pub fn fcl(&self, kind: ClassKind, a: Subset) -> Subset {
        self.induced(kind).closure[a.bits() as usize]
    }

    pub fn fint(&self, kind: ClassKind, a: Subset) -> Subset {
        self.induced(kind).interior[a.bits() as usize]
    }

    pub fn fext(&self, kind: ClassKind, a: Subset) -> Subset {
        self.fint(kind, self.comp(a))
    }

    pub fn fbdy(&self, kind: ClassKind, a: Subset) -> Subset {
        self.comp(self.fint(kind, a).join(self.fext(kind, a)))
    }
}
