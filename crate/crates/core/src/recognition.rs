//! Deciding whether a definite Horn CNF has a circular representation.
//!
//! The recognizer grows a hypergraph of implicate sets clause by clause:
//! whenever a clause of the input is not yet implied, it closes the clause
//! body under the current circular CNF and tries to extend the closure by
//! one variable using a core computation against the input. If the closure
//! stalls below the clause head, the stalled set is a false set witnessing
//! that no implicate set sticks out of it by exactly one variable, which
//! refutes representability.

use crate::ground::VarSet;
use crate::horn::HornCnf;
use crate::hypergraph::Hypergraph;
use crate::implicate::core;
use crate::oracle::{OracleError, TruthTable};

/// Outcome of [`recognize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    /// A hypergraph whose circular CNF represents the input function;
    /// at most `|V| · |Ψ|` edges.
    HypergraphHorn { witness: Hypergraph },
    /// A false set of the input such that no implicate set exceeds it by
    /// exactly one variable.
    NotHypergraphHorn { certificate: VarSet },
}

impl RecognitionResult {
    pub fn is_hypergraph_horn(&self) -> bool {
        matches!(self, RecognitionResult::HypergraphHorn { .. })
    }
}

pub fn recognize(psi: &HornCnf) -> RecognitionResult {
    let ground = psi.ground().clone();
    let mut edges: Vec<VarSet> = Vec::new();
    let mut circular = HornCnf::constant_true(ground.clone());
    for clause in psi.clauses() {
        let mut reached = circular.closure(clause.body());
        while !reached.contains(clause.head()) {
            let mut grew = false;
            for u in reached.complement(ground.len()).iter() {
                let candidate = core(psi, reached.with(u));
                if candidate.contains(u) {
                    edges.push(candidate);
                    grew = true;
                }
            }
            if !grew {
                return RecognitionResult::NotHypergraphHorn {
                    certificate: reached,
                };
            }
            let witness_so_far = Hypergraph::new(ground.clone(), edges.iter().copied())
                .expect("cores lie within the ground set");
            circular = HornCnf::circular(&witness_so_far);
            // The closure restarts from the previous fixpoint: it only grows
            // as edges are added.
            let extended = circular.closure(reached);
            if extended == reached {
                return RecognitionResult::NotHypergraphHorn {
                    certificate: reached,
                };
            }
            reached = extended;
        }
    }
    let witness =
        Hypergraph::new(ground, edges).expect("cores lie within the ground set");
    debug_assert!(witness.edge_count() <= psi.ground().len() * psi.clause_count().max(1));
    RecognitionResult::HypergraphHorn { witness }
}

/// Brute-force verdict via the truth table: definite Horn and every false
/// set one variable short of an implicate set. Independent of
/// [`recognize`].
pub fn is_hypergraph_horn_oracle(psi: &HornCnf) -> Result<bool, OracleError> {
    TruthTable::from_cnf(psi)?.is_circular_representable()
}
