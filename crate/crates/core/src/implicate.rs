//! The core operator, the extension decision, and polynomial-delay
//! enumeration of implicate sets.
//!
//! `core(Ψ, S)` is the unique maximal implicate set inside `S`, obtained by
//! repeatedly discarding members not re-derivable from the rest. Because
//! implicate sets are union-closed, `core` answers the extension question
//! "is there an implicate set containing X and avoiding Y?" in one call,
//! and that in turn drives a flashlight search that emits every implicate
//! set exactly once with at most `2·|V|` extension calls between
//! consecutive outputs.

use thiserror::Error;

use crate::ground::{Var, VarSet};
use crate::horn::HornCnf;
use crate::hypergraph::Hypergraph;
use crate::oracle::generator_of;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ImplicateError {
    #[error("required and forbidden sets overlap")]
    OverlappingConstraint,
}

/// The unique maximal implicate set contained in `s`.
///
/// Iterates `S ↦ {v ∈ S : v ∈ closure(S − v)}` until it stabilizes, which
/// takes at most `|S|` rounds.
pub fn core(cnf: &HornCnf, s: VarSet) -> VarSet {
    let mut current = s;
    loop {
        let mut next = current;
        for v in current.iter() {
            if !cnf.closure(current.without(v)).contains(v) {
                next = next.without(v);
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Whether some implicate set contains all of `required` and avoids all of
/// `forbidden`. Equivalent to `required ⊆ core(V ∖ forbidden)`.
pub fn has_extension(
    cnf: &HornCnf,
    required: VarSet,
    forbidden: VarSet,
) -> Result<bool, ImplicateError> {
    if !required.is_disjoint_from(forbidden) {
        return Err(ImplicateError::OverlappingConstraint);
    }
    let room = forbidden.complement(cnf.ground().len());
    Ok(required.is_subset_of(core(cnf, room)))
}

/// One pending branch of the flashlight search: variables below `depth` are
/// already split into `fixed_in` and `fixed_out`; frames pushed as deferred
/// siblings still need their extension test (`verified == false`).
#[derive(Debug, Clone, Copy)]
struct Frame {
    fixed_in: VarSet,
    fixed_out: VarSet,
    depth: usize,
    verified: bool,
}

/// Resumable enumeration of all implicate sets of a CNF.
///
/// The empty set comes first; after that, branches are explored in
/// ground-set order with the include branch taken before the exclude
/// branch, so the output order is deterministic. Every implicate set is
/// produced exactly once, and at most `2·|V|` extension tests run between
/// consecutive outputs (see [`Self::extension_calls`]).
#[derive(Debug)]
pub struct ImplicateSetEnumerator<'a> {
    cnf: &'a HornCnf,
    frames: Vec<Frame>,
    emitted: u64,
    extension_calls: u64,
    started: bool,
}

impl<'a> ImplicateSetEnumerator<'a> {
    pub fn new(cnf: &'a HornCnf) -> Self {
        ImplicateSetEnumerator {
            cnf,
            frames: Vec::new(),
            emitted: 0,
            extension_calls: 0,
            started: false,
        }
    }

    /// Number of sets produced so far.
    pub fn emitted_count(&self) -> u64 {
        self.emitted
    }

    /// Number of extension tests performed so far; the delta between two
    /// outputs is the enumeration delay in oracle calls.
    pub fn extension_calls(&self) -> u64 {
        self.extension_calls
    }

    fn extendable(&mut self, fixed_in: VarSet, fixed_out: VarSet) -> bool {
        self.extension_calls += 1;
        let room = fixed_out.complement(self.cnf.ground().len());
        fixed_in.is_subset_of(core(self.cnf, room))
    }
}

impl Iterator for ImplicateSetEnumerator<'_> {
    type Item = VarSet;

    fn next(&mut self) -> Option<VarSet> {
        let n = self.cnf.ground().len();
        if !self.started {
            self.started = true;
            if n > 0 {
                self.frames.push(Frame {
                    fixed_in: VarSet::empty(),
                    fixed_out: VarSet::empty(),
                    depth: 0,
                    verified: true,
                });
            }
            self.emitted += 1;
            return Some(VarSet::empty());
        }
        while let Some(frame) = self.frames.pop() {
            if !frame.verified && !self.extendable(frame.fixed_in, frame.fixed_out) {
                continue;
            }
            // Descend to a leaf, preferring the include branch. When the
            // include test fails the exclude child inherits extendability
            // for free, because any witness avoiding the variable still
            // fits.
            let mut fixed_in = frame.fixed_in;
            let mut fixed_out = frame.fixed_out;
            for v in frame.depth..n {
                if self.extendable(fixed_in.with(v as Var), fixed_out) {
                    self.frames.push(Frame {
                        fixed_in,
                        fixed_out: fixed_out.with(v as Var),
                        depth: v + 1,
                        verified: false,
                    });
                    fixed_in = fixed_in.with(v as Var);
                } else {
                    fixed_out = fixed_out.with(v as Var);
                }
            }
            if !fixed_in.is_empty() {
                self.emitted += 1;
                return Some(fixed_in);
            }
            // The all-excluded leaf is the empty set, already emitted first.
        }
        None
    }
}

/// Convenience constructor for the enumerator.
pub fn implicate_sets(cnf: &HornCnf) -> ImplicateSetEnumerator<'_> {
    ImplicateSetEnumerator::new(cnf)
}

/// The standard generator of the implicate-set family: nonempty implicate
/// sets that are not unions of other implicate sets strictly inside them.
///
/// Runs the full enumeration, so this is exponential in general and meant
/// for desk-scale inputs.
pub fn standard_generator(cnf: &HornCnf) -> Hypergraph {
    let family: Vec<VarSet> = implicate_sets(cnf).collect();
    Hypergraph::new(cnf.ground().clone(), generator_of(&family))
        .expect("enumerated sets lie within the ground set")
}
