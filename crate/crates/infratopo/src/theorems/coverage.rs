//! Coverage audit: a cross-reference table from every source claim to the
//! registry entries that decide it, or to a note saying where else in the
//! engine the behavior lives.
//!
//! The audit fails if an item maps to nothing, if it names an unknown
//! registry id, or if a registry entry is reachable from no item.

use std::collections::BTreeSet;

use super::registry;

/// One row of the cross-reference table.
#[derive(Debug, Clone, Copy)]
pub struct CatalogItem {
    pub key: &'static str,
    pub summary: &'static str,
    /// Registry entries deciding this item; empty when the note explains
    /// where the behavior is implemented or why it is out of checker scope.
    pub registry_ids: &'static [&'static str],
    pub note: &'static str,
}

/// The full table, in source order.
pub fn catalog() -> &'static [CatalogItem] {
    &[
        CatalogItem {
            key: "space-definition",
            summary: "families containing the empty set and the ground set, closed under pairwise meets",
            registry_ids: &[],
            note: "enforced by the space constructor, which reports every missing meet",
        },
        CatalogItem {
            key: "open-closed-sets",
            summary: "members of the family are open; their complements are closed",
            registry_ids: &[],
            note: "is_open and is_closed on the operator tables",
        },
        CatalogItem {
            key: "topologies-validate",
            summary: "every topology is a valid space of this kind",
            registry_ids: &[],
            note: "union closure is never required; discrete and chain families pass validation in the space tests",
        },
        CatalogItem {
            key: "empty-full-and-meets-open",
            summary: "the empty set and the ground set are open and opens are meet-closed",
            registry_ids: &["T2.5.i", "T2.5.ii"],
            note: "",
        },
        CatalogItem {
            key: "meet-of-two-spaces",
            summary: "intersecting two open families yields another valid space",
            registry_ids: &[],
            note: "exercised directly in the space tests",
        },
        CatalogItem {
            key: "cluster-points",
            summary: "a point every open neighborhood of which meets the set elsewhere",
            registry_ids: &[],
            note: "the per-point test inside derived_set",
        },
        CatalogItem {
            key: "derived-set-definition",
            summary: "the set of cluster points",
            registry_ids: &[],
            note: "derived_set on the space",
        },
        CatalogItem {
            key: "closed-meets",
            summary: "closed sets contain the ground set and the empty set; pairwise meets of closed sets",
            registry_ids: &["T-ICS-INT.i", "T-ICS-INT"],
            note: "the meet claim is false here and carries a pinned counterexample",
        },
        CatalogItem {
            key: "closure-definition",
            summary: "meet of all closed supersets",
            registry_ids: &[],
            note: "closure on the space",
        },
        CatalogItem {
            key: "closure-minimality-remark",
            summary: "the closure as smallest closed superset",
            registry_ids: &["T2.16.i-fwd", "T2.16.i-converse"],
            note: "minimality fails: the closure need not itself be closed",
        },
        CatalogItem {
            key: "interior-definition",
            summary: "join of all open subsets",
            registry_ids: &[],
            note: "interior on the space",
        },
        CatalogItem {
            key: "interior-maximality-remark",
            summary: "the interior as largest open subset",
            registry_ids: &["T2.17.i-fwd", "T2.17.i-converse"],
            note: "maximality fails: the interior need not itself be open",
        },
        CatalogItem {
            key: "exterior-definition",
            summary: "interior of the complement",
            registry_ids: &[],
            note: "exterior on the space",
        },
        CatalogItem {
            key: "boundary-definition",
            summary: "complement of interior joined with exterior",
            registry_ids: &[],
            note: "boundary on the space",
        },
        CatalogItem {
            key: "derived-set-axioms",
            summary: "monotonicity and union/meet behavior of the derived set",
            registry_ids: &["T2.15.i", "T2.15.ii", "T2.15.iii", "T2.15.iv", "T2.15.v"],
            note: "",
        },
        CatalogItem {
            key: "closure-axioms",
            summary: "fixed points, idempotence and monotonicity of closure",
            registry_ids: &[
                "T2.16.i-fwd",
                "T2.16.i-converse",
                "T2.16.ii",
                "T2.16.iii",
                "T2.16.iv",
                "T2.16.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "interior-axioms",
            summary: "fixed points, idempotence, monotonicity and meets of interior",
            registry_ids: &[
                "T2.17.i-fwd",
                "T2.17.i-converse",
                "T2.17.ii",
                "T2.17.iii",
                "T2.17.iv",
                "T2.17.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "exterior-axioms",
            summary: "antitonicity and union/meet behavior of the exterior",
            registry_ids: &[
                "T2.18.i",
                "T2.18.ii",
                "T2.18.iii",
                "T2.18.iv",
                "T2.18.v-literal",
                "T2.18.v-corrected",
            ],
            note: "the literal meet inclusion is false; the reversed inclusion is forced",
        },
        CatalogItem {
            key: "boundary-axioms",
            summary: "boundary of the degenerate sets and of meets",
            registry_ids: &["T2.19.i", "T2.19.ii"],
            note: "",
        },
        CatalogItem {
            key: "operator-relations",
            summary: "identities tying derived set, closure, interior and boundary together",
            registry_ids: &[
                "T2.20.i", "T2.20.ii", "T2.20.iii", "T2.20.iv", "T2.20.v", "T2.20.vi",
                "T2.20.vii", "T2.20.viii",
            ],
            note: "",
        },
        CatalogItem {
            key: "regular-open-sets",
            summary: "fixed points of interior-of-closure",
            registry_ids: &[],
            note: "is_regular_open and the regular_open_family listing",
        },
        CatalogItem {
            key: "delta-operators",
            summary: "interior and closure relative to the regular-open family",
            registry_ids: &[],
            note: "delta_interior and delta_closure, with two supported closure variants",
        },
        CatalogItem {
            key: "generalized-open-classes",
            summary: "the eleven membership predicates",
            registry_ids: &[],
            note: "is_member over every class kind",
        },
        CatalogItem {
            key: "generalized-closed-duals",
            summary: "a set is class-closed when its complement is class-open",
            registry_ids: &[],
            note: "the closed flag on class ids; dual families are complement images",
        },
        CatalogItem {
            key: "class-cluster-points",
            summary: "cluster points relative to a class family",
            registry_ids: &[],
            note: "the family view derived-set operator",
        },
        CatalogItem {
            key: "class-derived-sets",
            summary: "derived sets relative to a class family",
            registry_ids: &[],
            note: "tabulated per augmented family on the checker context",
        },
        CatalogItem {
            key: "closed-meets-restated",
            summary: "the closed-meet claim repeated for emphasis",
            registry_ids: &["T-ICS-INT"],
            note: "",
        },
        CatalogItem {
            key: "class-closures",
            summary: "meet of class-closed supersets",
            registry_ids: &[],
            note: "the family view closure operator",
        },
        CatalogItem {
            key: "class-interiors",
            summary: "join of class-open subsets",
            registry_ids: &[],
            note: "the family view interior operator",
        },
        CatalogItem {
            key: "class-exteriors",
            summary: "class interior of the complement",
            registry_ids: &[],
            note: "the family view exterior operator",
        },
        CatalogItem {
            key: "class-boundaries",
            summary: "complement of class interior joined with class exterior",
            registry_ids: &[],
            note: "the family view boundary operator",
        },
        CatalogItem {
            key: "e-derived-axioms",
            summary: "derived-set laws for the e-open family",
            registry_ids: &["T3.2.i", "T3.2.ii", "T3.2.iii", "T3.2.iv", "T3.2.v"],
            note: "",
        },
        CatalogItem {
            key: "e-star-derived-axioms",
            summary: "derived-set laws for the e*-open family",
            registry_ids: &["T3.3.i", "T3.3.ii", "T3.3.iii", "T3.3.iv", "T3.3.v"],
            note: "",
        },
        CatalogItem {
            key: "a-derived-axioms",
            summary: "derived-set laws for the a-open family",
            registry_ids: &["T3.4.i", "T3.4.ii", "T3.4.iii", "T3.4.iv", "T3.4.v"],
            note: "",
        },
        CatalogItem {
            key: "e-closure-axioms",
            summary: "closure laws for the e-open family",
            registry_ids: &[
                "T3.5.i-fwd",
                "T3.5.i-converse",
                "T3.5.ii",
                "T3.5.iii",
                "T3.5.iv",
                "T3.5.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "e-star-closure-axioms",
            summary: "closure laws for the e*-open family",
            registry_ids: &[
                "T3.6.i-fwd",
                "T3.6.i-converse",
                "T3.6.ii",
                "T3.6.iii",
                "T3.6.iv",
                "T3.6.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "a-closure-axioms",
            summary: "closure laws for the a-open family",
            registry_ids: &[
                "T3.7.i-fwd",
                "T3.7.i-converse",
                "T3.7.ii",
                "T3.7.iii",
                "T3.7.iv",
                "T3.7.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "e-interior-axioms",
            summary: "interior laws for the e-open family",
            registry_ids: &[
                "T3.8.i-fwd",
                "T3.8.i-converse",
                "T3.8.ii",
                "T3.8.iii",
                "T3.8.iv",
                "T3.8.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "e-star-interior-axioms",
            summary: "interior laws for the e*-open family",
            registry_ids: &[
                "T3.9.i-fwd",
                "T3.9.i-converse",
                "T3.9.ii",
                "T3.9.iii",
                "T3.9.iv",
                "T3.9.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "a-interior-axioms",
            summary: "interior laws for the a-open family",
            registry_ids: &[
                "T3.10.i-fwd",
                "T3.10.i-converse",
                "T3.10.ii",
                "T3.10.iii",
                "T3.10.iv",
                "T3.10.v",
            ],
            note: "",
        },
        CatalogItem {
            key: "e-exterior-axioms",
            summary: "exterior laws for the e-open family",
            registry_ids: &["T3.11.i", "T3.11.ii", "T3.11.iii", "T3.11.iv", "T3.11.v"],
            note: "",
        },
        CatalogItem {
            key: "e-star-exterior-axioms",
            summary: "exterior laws for the e*-open family",
            registry_ids: &["T3.12.i", "T3.12.ii", "T3.12.iii", "T3.12.iv", "T3.12.v"],
            note: "",
        },
        CatalogItem {
            key: "a-exterior-axioms",
            summary: "exterior laws for the a-open family",
            registry_ids: &["T3.13.i", "T3.13.ii", "T3.13.iii", "T3.13.iv", "T3.13.v"],
            note: "",
        },
        CatalogItem {
            key: "e-boundary-axioms",
            summary: "boundary laws for the e-open family",
            registry_ids: &["T3.14.i", "T3.14.ii"],
            note: "",
        },
        CatalogItem {
            key: "e-star-boundary-axioms",
            summary: "boundary laws for the e*-open family",
            registry_ids: &["T3.15.i", "T3.15.ii"],
            note: "",
        },
        CatalogItem {
            key: "a-boundary-axioms",
            summary: "boundary laws for the a-open family",
            registry_ids: &["T3.16.i", "T3.16.ii"],
            note: "",
        },
        CatalogItem {
            key: "e-operator-relations",
            summary: "relation identities among the e-family operators",
            registry_ids: &[
                "T3.17.i", "T3.17.ii", "T3.17.iii", "T3.17.iv", "T3.17.v", "T3.17.vi",
                "T3.17.vii", "T3.17.viii",
            ],
            note: "",
        },
        CatalogItem {
            key: "e-star-operator-relations",
            summary: "relation identities among the e*-family operators",
            registry_ids: &[
                "T3.18.i", "T3.18.ii", "T3.18.iii", "T3.18.iv", "T3.18.v", "T3.18.vi",
                "T3.18.vii", "T3.18.viii",
            ],
            note: "",
        },
        CatalogItem {
            key: "a-operator-relations",
            summary: "relation identities among the a-family operators",
            registry_ids: &[
                "T3.19.i", "T3.19.ii", "T3.19.iii", "T3.19.iv", "T3.19.v", "T3.19.vi",
                "T3.19.vii", "T3.19.viii",
            ],
            note: "",
        },
        CatalogItem {
            key: "delta-pre-semi-bounds",
            summary: "closure and interior bounds for the delta-pre and delta-semi families",
            registry_ids: &["L-dP-dS.i", "L-dP-dS.ii"],
            note: "",
        },
        CatalogItem {
            key: "e-open-degenerate-cases",
            summary: "e-open sets with degenerate delta interior or closure",
            registry_ids: &["P-E1.i", "P-E1.ii", "P-E1.iii", "P-E1.iv"],
            note: "",
        },
        CatalogItem {
            key: "e-open-decomposition",
            summary: "e-open sets as unions of their delta-pre and delta-semi interiors",
            registry_ids: &["TH-ECHAR-fwd", "TH-ECHAR-converse"],
            note: "",
        },
        CatalogItem {
            key: "e-closure-complement-laws",
            summary: "complement duality and union/meet bounds for the e-family closure",
            registry_ids: &["P-ECL-COMPL.i", "P-ECL-COMPL.ii", "P-ECL-COMPL.iii"],
            note: "",
        },
        CatalogItem {
            key: "e-closure-bounds",
            summary: "bounds relating the e-family closure and interior to delta operators",
            registry_ids: &["P-ECL-BOUND.i", "P-ECL-BOUND.ii"],
            note: "",
        },
        CatalogItem {
            key: "e-closure-as-meet",
            summary: "the e-family closure as the meet of the delta-pre and delta-semi closures",
            registry_ids: &["TH-ECL-MEET"],
            note: "",
        },
        CatalogItem {
            key: "delta-semi-identities",
            summary: "closed forms for delta-semi interiors and closures",
            registry_ids: &["L-dS-ID.1", "L-dS-ID.2", "L-dS-ID.3", "L-dS-ID.4", "L-dS-ID.5"],
            note: "",
        },
        CatalogItem {
            key: "e-star-closure-lemmas",
            summary: "membership of the e*-family closure and its complement identity",
            registry_ids: &["L-ESTAR.1-literal", "L-ESTAR.1-corrected", "L-ESTAR.2"],
            note: "the literal membership claim is anomalous, so both readings are registered",
        },
        CatalogItem {
            key: "e-star-characterizations",
            summary: "fixed-point characterizations of e*-open and e*-closed sets",
            registry_ids: &["TH-ESTAR.i", "TH-ESTAR.ii", "TH-ESTAR.iii", "TH-ESTAR.iv"],
            note: "",
        },
        CatalogItem {
            key: "regular-open-equivalences",
            summary: "regular-open sets via a-open plus e*-closed, and via delta-pre plus delta-semi-closed",
            registry_ids: &[
                "TH-ROS-EQ.i-ii",
                "TH-ROS-EQ.ii-i",
                "TH-ROS-EQ.i-iii",
                "TH-ROS-EQ.iii-i",
            ],
            note: "",
        },
        CatalogItem {
            key: "delta-semi-via-e-star",
            summary: "delta-semi-open sets as e*-open sets with delta-degenerate frontier",
            registry_ids: &["TH-dSOS-ESTAR-fwd", "TH-dSOS-ESTAR-conv"],
            note: "",
        },
        CatalogItem {
            key: "a-open-as-meet",
            summary: "the a-open family as the meet of the delta-semi and delta-pre families",
            registry_ids: &["TH-AO-MEET"],
            note: "",
        },
        CatalogItem {
            key: "class-implication-chain",
            summary: "membership implications between classes that hold on every space",
            registry_ids: &[
                "IMPL-open-pre",
                "IMPL-open-semi",
                "IMPL-dpre-e",
                "IMPL-dsemi-e",
                "IMPL-a-dsemi",
                "IMPL-pre-beta",
            ],
            note: "",
        },
        CatalogItem {
            key: "worked-example-four-point",
            summary: "the four-point space with opens {},{a},{b},{a,c},{a,b,c,d} and its membership claims",
            registry_ids: &[],
            note: "frozen operator tables and membership assertions in the classes tests and the acceptance suite",
        },
        CatalogItem {
            key: "worked-example-four-point-alt",
            summary: "the four-point space with opens {},{b},{c},{b,c,d},{a,b,c,d}",
            registry_ids: &[],
            note: "frozen in the classes tests; supplies the delta-semi-open strictness witness",
        },
        CatalogItem {
            key: "implication-figure",
            summary: "diagram of implications between the classes",
            registry_ids: &[],
            note: "reconstructed as the DOT digraph from the enumeration module; the scanned image is not machine-checked",
        },
    ]
}

/// Result of auditing the table against the registry.
#[derive(Debug, Clone)]
pub struct CoverageAudit {
    pub items: usize,
    pub mapped_items: usize,
    pub noted_items: usize,
    pub registry_entries: usize,
    pub problems: Vec<String>,
}

/// Cross-check the table and the registry in both directions.
pub fn audit() -> CoverageAudit {
    let entries = registry();
    let known: BTreeSet<&str> = entries.iter().map(|e| e.id.as_str()).collect();
    let items = catalog();
    let mut problems = Vec::new();
    let mut referenced: BTreeSet<&str> = BTreeSet::new();
    let mut mapped = 0;
    let mut noted = 0;

    let mut seen_keys = BTreeSet::new();
    for item in items {
        if !seen_keys.insert(item.key) {
            problems.push(format!("duplicate catalog key {}", item.key));
        }
        if item.registry_ids.is_empty() && item.note.is_empty() {
            problems.push(format!("{} maps to nothing", item.key));
        }
        if !item.registry_ids.is_empty() {
            mapped += 1;
        }
        if !item.note.is_empty() {
            noted += 1;
        }
        for id in item.registry_ids {
            if !known.contains(id) {
                problems.push(format!("{} references unknown id {}", item.key, id));
            }
            referenced.insert(id);
        }
    }
    for id in &known {
        if !referenced.contains(id) {
            problems.push(format!("registry entry {id} is reachable from no catalog item"));
        }
    }

    CoverageAudit {
        items: items.len(),
        mapped_items: mapped,
        noted_items: noted,
        registry_entries: entries.len(),
        problems,
    }
}
