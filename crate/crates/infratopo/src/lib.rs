//! Finite infra-topological spaces: a ground set of up to 32 named points
//! and a family of opens containing the empty set and the whole space and
//! closed under pairwise intersection, but not necessarily under union.
//!
//! Dropping union closure costs most of the classical operator algebra:
//! interiors need not be open, closures need not be closed, and many
//! familiar identities survive only as one-sided inclusions. This crate
//! provides the operators ([`space`]), the generalized open-set classes
//! built from them ([`classes`]), the same operator recipes relative to an
//! arbitrary set family ([`famops`]), a registry of checkable claims about
//! all of these ([`theorems`]), and exhaustive enumeration of all spaces on
//! small ground sets ([`enumerate`]).

pub mod classes;
pub mod enumerate;
pub mod famops;
pub mod sets;
pub mod space;
pub mod theorems;
