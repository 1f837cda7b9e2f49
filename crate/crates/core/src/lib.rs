//! Algorithms on hypergraph Horn functions: definite Horn functions that
//! admit a circular CNF representation, where a hyperedge stands for the
//! rule set deriving each of its members from the rest.
//!
//! The crate provides:
//!
//! - set and hypergraph primitives ([`ground`], [`hypergraph`]): Sperner
//!   reduction, complement families, minimal transversals, union and
//!   intersection closures, the circuit elimination axiom;
//! - definite Horn CNFs with linear-time forward-chaining closure and the
//!   derived implicate / true-set / key tests ([`horn`]);
//! - the core operator, extension decision, and polynomial-delay
//!   enumeration of implicate sets ([`implicate`]);
//! - recognition of circular representability with witness or certificate
//!   ([`recognition`]);
//! - realization of a Sperner family as a minimal-key family ([`keys`]);
//! - implicate-duality checks and compact non-self-duality witnesses
//!   ([`iduality`]);
//! - an independent brute-force truth-table oracle ([`oracle`]) with random
//!   instance generators ([`sampling`]) used by the cross-validation
//!   suites;
//! - shared text formats ([`text`]).
//!
//! The oracle's `2^n` scans are data-parallel with `rayon` under the
//! `parallel` feature (enabled by default); sequential drivers are always
//! available and compared against the parallel ones in the criterion
//! benches.
//!
//! ```
//! use hypergraph_horn::{GroundSet, Hypergraph, HornCnf, VarSet};
//! use hypergraph_horn::recognition::{recognize, RecognitionResult};
//!
//! // Two equivalence-like classes, written as a circular CNF.
//! let ground = GroundSet::numbered(5);
//! let classes = Hypergraph::new(
//!     ground.clone(),
//!     [
//!         VarSet::from_vars([0, 1]),
//!         VarSet::from_vars([1, 2]),
//!         VarSet::from_vars([3, 4]),
//!     ],
//! )
//! .unwrap();
//! let cnf = HornCnf::circular(&classes);
//!
//! // Closing {1} pulls in its whole class.
//! assert_eq!(cnf.closure(VarSet::from_vars([0])), VarSet::from_vars([0, 1, 2]));
//!
//! // The function is hypergraph Horn, and recognition rebuilds a circular
//! // representation for it.
//! match recognize(&cnf) {
//!     RecognitionResult::HypergraphHorn { witness } => {
//!         let rebuilt = HornCnf::circular(&witness);
//!         assert!(cnf.equivalent(&rebuilt).unwrap());
//!     }
//!     RecognitionResult::NotHypergraphHorn { .. } => unreachable!(),
//! }
//! ```

pub mod ground;
pub mod horn;
pub mod hypergraph;
pub mod iduality;
pub mod implicate;
pub mod keys;
pub mod oracle;
pub mod recognition;
pub mod sampling;
pub mod text;

#[doc(hidden)]
pub mod fixtures;

pub use ground::{GroundSet, Var, VarSet, MAX_VARS};
pub use horn::{DefiniteClause, HornCnf, HornError};
pub use hypergraph::{CircuitAxiom, Hypergraph, HypergraphError};
pub use iduality::{MajorantCheck, SelfDualWitness, UnitIntersectionCheck};
pub use implicate::ImplicateSetEnumerator;
pub use keys::KeyRealizationResult;
pub use oracle::{OracleError, TruthTable};
pub use recognition::RecognitionResult;
pub use text::ParseError;
