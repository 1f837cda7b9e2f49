//! Realizing a Sperner hypergraph as the minimal-key family of a circular
//! CNF, via potential implicate sets.
//!
//! A set `I` is a potential implicate set for a key family `𝒦` when every
//! maximal independent set of `𝒦` stays true under the single-edge circular
//! CNF of `I`; equivalently, for every `K ∈ 𝒦` and `u ∈ K ∩ I` some edge of
//! `𝒦` fits inside `(K ∪ I) − u`. Potential implicate sets are closed under
//! union, so every set has a unique maximal potential implicate subset,
//! computed here by [`potential_core`]. [`realize_keys`] grows a witness
//! hypergraph from these cores the same way recognition grows one from
//! implicate-set cores.

use crate::ground::VarSet;
use crate::horn::HornCnf;
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::oracle::{OracleError, TruthTable};

/// Outcome of [`realize_keys`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KeyRealizationResult {
    /// A hypergraph whose circular CNF has exactly the input key family;
    /// at most `|V| · |𝒦|` edges.
    Realizable { witness: Hypergraph },
    /// Closure of some input key stalled at this proper subset of `V`.
    NotRealizable { stalled: VarSet },
}

impl KeyRealizationResult {
    pub fn is_realizable(&self) -> bool {
        matches!(self, KeyRealizationResult::Realizable { .. })
    }
}

/// Checks the pairwise criterion: for every edge `K` and `u ∈ K ∩ I` some
/// edge fits inside `(K ∪ I) − u`. Requires a Sperner family.
pub fn is_potential_implicate_set(
    keys: &Hypergraph,
    candidate: VarSet,
) -> Result<bool, HypergraphError> {
    if !keys.is_sperner() {
        return Err(HypergraphError::NonSperner);
    }
    Ok(potential_step(keys.edges(), candidate) == candidate)
}

/// One shrinking pass: members of `s` that every containing edge can still
/// reach around.
fn potential_step(edges: &[VarSet], s: VarSet) -> VarSet {
    let mut keep = s;
    for u in s.iter() {
        for k in edges.iter().filter(|k| k.contains(u)) {
            let room = s.union(*k).without(u);
            if !edges.iter().any(|kp| kp.is_subset_of(room)) {
                keep = keep.without(u);
                break;
            }
        }
    }
    keep
}

/// The unique maximal potential implicate set contained in `s`.
///
/// Variables outside every edge never constrain the criterion, so they are
/// split off first and the fixpoint iteration runs on the rest.
pub fn potential_core(keys: &Hypergraph, s: VarSet) -> Result<VarSet, HypergraphError> {
    if !keys.is_sperner() {
        return Err(HypergraphError::NonSperner);
    }
    let support = keys
        .edges()
        .iter()
        .fold(VarSet::empty(), |acc, e| acc.union(*e));
    let free = s.minus(support);
    let mut current = s.intersection(support);
    loop {
        let next = potential_step(keys.edges(), current);
        if next == current {
            break;
        }
        current = next;
    }
    Ok(current.union(free))
}

/// Decides whether `keys` is the minimal-key family of some circular CNF
/// and builds a witness if so.
///
/// Non-Sperner input is Sperner-reduced rather than rejected; minimal-key
/// families are Sperner by definition. An empty family is never realizable
/// because the full set always closes to itself.
pub fn realize_keys(keys: &Hypergraph) -> KeyRealizationResult {
    let keys = if keys.is_sperner() {
        keys.clone()
    } else {
        keys.sperner_reduce()
    };
    if keys.edge_count() == 0 {
        return KeyRealizationResult::NotRealizable {
            stalled: VarSet::empty(),
        };
    }
    let ground = keys.ground().clone();
    let full = ground.full_set();
    let mut edges: Vec<VarSet> = Vec::new();
    let mut circular = HornCnf::constant_true(ground.clone());
    for key in keys.edges() {
        let mut reached = circular.closure(*key);
        while reached != full {
            let mut grew = false;
            for v in reached.complement(ground.len()).iter() {
                let candidate = potential_core(&keys, reached.with(v))
                    .expect("family was reduced to Sperner");
                if candidate.contains(v) {
                    edges.push(candidate);
                    grew = true;
                }
            }
            if !grew {
                return KeyRealizationResult::NotRealizable { stalled: reached };
            }
            let witness_so_far = Hypergraph::new(ground.clone(), edges.iter().copied())
                .expect("cores lie within the ground set");
            circular = HornCnf::circular(&witness_so_far);
            let extended = circular.closure(reached);
            if extended == reached {
                return KeyRealizationResult::NotRealizable { stalled: reached };
            }
            reached = extended;
        }
    }
    let witness = Hypergraph::new(ground, edges).expect("cores lie within the ground set");
    KeyRealizationResult::Realizable { witness }
}

/// All inclusion-minimal sets whose closure is the full set, by exhaustive
/// scan.
pub fn minimal_keys_oracle(cnf: &HornCnf) -> Result<Hypergraph, OracleError> {
    let n = cnf.ground().len();
    if n > crate::oracle::MAX_FAMILY_VARS {
        return Err(OracleError::GroundTooLarge {
            n,
            cap: crate::oracle::MAX_FAMILY_VARS,
        });
    }
    let full = cnf.ground().full_set();
    let points = 1u64 << n;
    let is_key: Vec<bool> = (0..points)
        .map(|m| cnf.closure(VarSet::from_mask(m)) == full)
        .collect();
    let minimal = (0..points).filter(|&m| {
        is_key[m as usize]
            && VarSet::from_mask(m)
                .iter()
                .all(|v| !is_key[(m & !(1 << v)) as usize])
    });
    Ok(
        Hypergraph::new(cnf.ground().clone(), minimal.map(VarSet::from_mask))
            .expect("masks lie within the ground set"),
    )
}

/// All maximal true sets strictly below the full set, by exhaustive scan.
pub fn max_nontrivial_true_sets_oracle(cnf: &HornCnf) -> Result<Hypergraph, OracleError> {
    TruthTable::from_cnf(cnf)?.maximal_nontrivial_true_family()
}
