//! Random instance generators for cross-validation batteries.
//!
//! Coverage diversity matters here, not uniformity: definite Horn tables
//! are sampled by closing random families under intersection, Sperner
//! families by reducing random families.

use rand::Rng;

use crate::ground::{full_mask, GroundSet, VarSet};
use crate::horn::{DefiniteClause, HornCnf};
use crate::hypergraph::Hypergraph;
use crate::oracle::{OracleError, TruthTable};

pub fn random_subset<R: Rng>(rng: &mut R, ground: &GroundSet) -> VarSet {
    VarSet::from_mask(rng.gen::<u64>() & full_mask(ground.len()))
}

/// Sparse-ish random subset (expected quarter density).
fn sparse_subset<R: Rng>(rng: &mut R, ground: &GroundSet) -> VarSet {
    VarSet::from_mask(rng.gen::<u64>() & rng.gen::<u64>() & full_mask(ground.len()))
}

pub fn random_cnf<R: Rng>(rng: &mut R, ground: &GroundSet, max_clauses: usize) -> HornCnf {
    let n = ground.len();
    if n == 0 {
        return HornCnf::constant_true(ground.clone());
    }
    let count = rng.gen_range(0..=max_clauses);
    let clauses = (0..count).map(|_| {
        let head = rng.gen_range(0..n);
        let body = sparse_subset(rng, ground).without(head);
        DefiniteClause::new(body, head).expect("head removed from body")
    });
    HornCnf::new(ground.clone(), clauses.collect::<Vec<_>>()).expect("clauses fit the ground set")
}

pub fn random_hypergraph<R: Rng>(rng: &mut R, ground: &GroundSet, max_edges: usize) -> Hypergraph {
    let count = rng.gen_range(0..=max_edges);
    let edges = (0..count).map(|_| sparse_subset(rng, ground));
    Hypergraph::new(ground.clone(), edges.collect::<Vec<_>>()).expect("edges fit the ground set")
}

pub fn random_sperner<R: Rng>(rng: &mut R, ground: &GroundSet, max_edges: usize) -> Hypergraph {
    random_hypergraph(rng, ground, max_edges).sperner_reduce()
}

/// Circular CNF of a random hypergraph.
pub fn random_circular_cnf<R: Rng>(
    rng: &mut R,
    ground: &GroundSet,
    max_edges: usize,
) -> HornCnf {
    HornCnf::circular(&random_hypergraph(rng, ground, max_edges))
}

/// Uniformly random truth table (arbitrary Boolean function).
pub fn random_table<R: Rng>(rng: &mut R, ground: &GroundSet) -> Result<TruthTable, OracleError> {
    let points = 1u64 << ground.len();
    let trues: Vec<u64> = (0..points).filter(|_| rng.gen_bool(0.5)).collect();
    TruthTable::from_true_sets(ground.clone(), trues)
}

/// Random definite Horn table: a random family of sets closed under
/// intersection, plus the full set.
pub fn random_horn_table<R: Rng>(
    rng: &mut R,
    ground: &GroundSet,
    seeds: usize,
) -> Result<TruthTable, OracleError> {
    let mut trues: Vec<u64> = vec![full_mask(ground.len())];
    for _ in 0..seeds {
        trues.push(random_subset(rng, ground).mask());
    }
    // Close under pairwise intersection to a fixpoint.
    loop {
        let mut added = false;
        let snapshot = trues.clone();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                let meet = a & b;
                if !trues.contains(&meet) {
                    trues.push(meet);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    TruthTable::from_true_sets(ground.clone(), trues)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn horn_tables_are_definite_horn() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 0..=6 {
            let g = GroundSet::numbered(n);
            for _ in 0..20 {
                let t = random_horn_table(&mut rng, &g, 5).unwrap();
                assert!(t.is_definite_horn().unwrap());
            }
        }
    }

    #[test]
    fn sperner_samples_are_sperner() {
        let mut rng = StdRng::seed_from_u64(8);
        let g = GroundSet::numbered(6);
        for _ in 0..50 {
            assert!(random_sperner(&mut rng, &g, 6).is_sperner());
        }
    }

    #[test]
    fn random_cnf_respects_ground() {
        let mut rng = StdRng::seed_from_u64(9);
        let g = GroundSet::numbered(5);
        for _ in 0..50 {
            let cnf = random_cnf(&mut rng, &g, 8);
            for clause in cnf.clauses() {
                assert!(!clause.body().contains(clause.head()));
            }
        }
    }
}
