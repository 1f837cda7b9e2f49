//! Implicate-duality checks.
//!
//! The implicate-dual of a function has as true sets the complements of the
//! function's implicate sets. Whether one CNF majorizes another's dual is
//! decidable in polynomial time through the extension test; equality with
//! the own dual is only certified here in the refutation direction, through
//! compact witnesses checkable in polynomial time.

use crate::ground::VarSet;
use crate::horn::{HornCnf, HornError};
use crate::hypergraph::Hypergraph;
use crate::implicate::{core, has_extension};

/// Outcome of [`majorizes_implicate_dual`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MajorantCheck {
    Holds,
    /// A false set of the left CNF whose complement is an implicate set of
    /// the right CNF.
    Violated { false_set: VarSet },
}

impl MajorantCheck {
    pub fn holds(&self) -> bool {
        matches!(self, MajorantCheck::Holds)
    }
}

/// Checks `Ψ ≥ Γ^dual` pointwise.
///
/// The inequality fails exactly when some clause `A → v` of `Ψ` admits an
/// implicate set of `Γ` containing `v` and avoiding `A`; the first such
/// clause (in input order) yields the reported false set.
pub fn majorizes_implicate_dual(
    psi: &HornCnf,
    gamma: &HornCnf,
) -> Result<MajorantCheck, HornError> {
    if psi.ground() != gamma.ground() {
        return Err(HornError::GroundMismatch);
    }
    let n = psi.ground().len();
    for clause in psi.clauses() {
        let witness_exists =
            has_extension(gamma, VarSet::singleton(clause.head()), clause.body())
                .expect("clause head and body are disjoint");
        if witness_exists {
            let implicate_set = core(gamma, clause.body().complement(n));
            return Ok(MajorantCheck::Violated {
                false_set: implicate_set.complement(n),
            });
        }
    }
    Ok(MajorantCheck::Holds)
}

/// A compact certificate that a function differs from its implicate-dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDualWitness {
    /// Two implicate sets meeting in exactly one variable.
    Pair { first: VarSet, second: VarSet },
    /// A non-implicate set meeting no implicate set in exactly one
    /// variable.
    Gap { set: VarSet },
}

/// Verifies a witness against the CNF. Returns `true` exactly when the
/// witness validly certifies that the function is not self implicate-dual.
pub fn verify_self_dual_witness(
    psi: &HornCnf,
    witness: &SelfDualWitness,
) -> Result<bool, HornError> {
    let ground = psi.ground();
    match *witness {
        SelfDualWitness::Pair { first, second } => {
            if !ground.contains_set(first) || !ground.contains_set(second) {
                return Err(HornError::MalformedWitness);
            }
            Ok(first.intersection(second).len() == 1
                && psi.is_implicate_set(first)
                && psi.is_implicate_set(second))
        }
        SelfDualWitness::Gap { set } => {
            if !ground.contains_set(set) {
                return Err(HornError::MalformedWitness);
            }
            if psi.is_implicate_set(set) {
                return Ok(false);
            }
            // No implicate set meets `set` in exactly one variable exactly
            // when, for each v in the set, the largest implicate set inside
            // (V ∖ set) + v misses v.
            let outside = set.complement(ground.len());
            Ok(set
                .iter()
                .all(|v| !core(psi, outside.with(v)).contains(v)))
        }
    }
}

/// Outcome of [`no_unit_intersections`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitIntersectionCheck {
    Holds,
    /// An (unordered, possibly equal) pair of edges meeting in exactly one
    /// variable.
    Violated { first: VarSet, second: VarSet },
}

impl UnitIntersectionCheck {
    pub fn holds(&self) -> bool {
        matches!(self, UnitIntersectionCheck::Holds)
    }
}

/// Checks that no two edges (a pair may repeat one edge) intersect in
/// exactly one variable. A singleton edge already violates this against
/// itself.
pub fn no_unit_intersections(h: &Hypergraph) -> UnitIntersectionCheck {
    let edges = h.edges();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i..] {
            if a.intersection(b).len() == 1 {
                return UnitIntersectionCheck::Violated { first: a, second: b };
            }
        }
    }
    UnitIntersectionCheck::Holds
}
