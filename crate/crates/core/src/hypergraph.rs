//! Finite families of subsets over a shared ground set.
//!
//! Edges are kept canonical: deduplicated and sorted by mask value, so two
//! hypergraphs over the same ground set compare equal exactly when they
//! contain the same edge family, and printed output is reproducible.

use thiserror::Error;

use crate::ground::{subsets_of, GroundSet, Var, VarSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge mentions variables outside the ground set")]
    EdgeOutOfGround,
    #[error("hypergraph is not Sperner: one edge contains another")]
    NonSperner,
    #[error("the empty set is not allowed as an edge here")]
    EmptyEdge,
}

/// A family of [`VarSet`] edges over a [`GroundSet`]; duplicates collapse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<VarSet>,
}

/// Outcome of the circuit-axiom check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CircuitAxiom {
    Holds,
    /// (`first`, `second`, `pivot`) with no edge inside `(first ∪ second) − pivot`.
    Violated {
        first: VarSet,
        second: VarSet,
        pivot: Var,
    },
}

impl CircuitAxiom {
    pub fn holds(&self) -> bool {
        matches!(self, CircuitAxiom::Holds)
    }
}

impl Hypergraph {
    pub fn new<I>(ground: GroundSet, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = VarSet>,
    {
        let mut edges: Vec<VarSet> = edges.into_iter().collect();
        if edges.iter().any(|e| !ground.contains_set(*e)) {
            return Err(HypergraphError::EdgeOutOfGround);
        }
        edges.sort();
        edges.dedup();
        Ok(Hypergraph { ground, edges })
    }

    /// The family with no edges at all.
    pub fn empty(ground: GroundSet) -> Self {
        Hypergraph {
            ground,
            edges: Vec::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn edges(&self) -> &[VarSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sum of edge cardinalities.
    pub fn total_size(&self) -> usize {
        self.edges.iter().map(|e| e.len()).sum()
    }

    pub fn contains_edge(&self, e: VarSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn is_sperner(&self) -> bool {
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                if a.is_subset_of(*b) || b.is_subset_of(*a) {
                    return false;
                }
            }
        }
        true
    }

    fn same_family(ground: &GroundSet, edges: Vec<VarSet>) -> Hypergraph {
        Hypergraph::new(ground.clone(), edges).expect("edges stay within the ground set")
    }

    /// `{V ∖ E : E ∈ edges}`; applying twice is the identity.
    pub fn complement_family(&self) -> Hypergraph {
        let n = self.ground.len();
        let edges = self.edges.iter().map(|e| e.complement(n)).collect();
        Self::same_family(&self.ground, edges)
    }

    /// Keeps only the inclusion-minimal edges; the result is Sperner.
    pub fn sperner_reduce(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .filter(|e| {
                !self
                    .edges
                    .iter()
                    .any(|f| f != *e && f.is_subset_of(**e))
            })
            .copied()
            .collect();
        Self::same_family(&self.ground, edges)
    }

    /// All inclusion-minimal transversals (sets meeting every edge).
    ///
    /// An empty edge admits no transversal, so the result is the empty
    /// family in that case. An empty edge family is met by the empty set.
    /// Exponential in the worst case; intended for desk-scale inputs.
    pub fn minimal_transversals(&self) -> Hypergraph {
        if self.edges.iter().any(|e| e.is_empty()) {
            return Hypergraph::empty(self.ground.clone());
        }
        if self.edges.is_empty() {
            return Self::same_family(&self.ground, vec![VarSet::empty()]);
        }
        let n = self.ground.len();
        let edges = if n <= 20 {
            self.transversals_brute(n)
        } else {
            self.transversals_berge()
        };
        Self::same_family(&self.ground, edges)
    }

    fn transversals_brute(&self, n: usize) -> Vec<VarSet> {
        // Only candidates inside the union of edges can be minimal.
        let support: VarSet = self
            .edges
            .iter()
            .fold(VarSet::empty(), |acc, e| acc.union(*e));
        let hits = |t: VarSet| self.edges.iter().all(|e| !e.is_disjoint_from(t));
        let _ = n;
        let mut found: Vec<VarSet> = Vec::new();
        for mask in subsets_of(support.mask()) {
            let t = VarSet::from_mask(mask);
            if !hits(t) {
                continue;
            }
            // Minimal iff removing any single member breaks coverage.
            if t.iter().all(|v| !hits(t.without(v))) {
                found.push(t);
            }
        }
        found
    }

    fn transversals_berge(&self) -> Vec<VarSet> {
        // Sequential multiplication: fold edges into the running family of
        // minimal transversals of the prefix.
        let mut current: Vec<VarSet> = vec![VarSet::empty()];
        for edge in &self.edges {
            let mut next: Vec<VarSet> = Vec::new();
            for t in &current {
                if !t.is_disjoint_from(*edge) {
                    push_if_minimal(&mut next, *t);
                } else {
                    for v in edge.iter() {
                        push_if_minimal(&mut next, t.with(v));
                    }
                }
            }
            current = next;
        }
        current
    }

    /// All unions of subfamilies; contains the empty set (empty union).
    pub fn union_closure(&self) -> Hypergraph {
        let mut family: Vec<VarSet> = vec![VarSet::empty()];
        for edge in &self.edges {
            let mut grown: Vec<VarSet> = family.iter().map(|s| s.union(*edge)).collect();
            family.append(&mut grown);
            family.sort();
            family.dedup();
        }
        Self::same_family(&self.ground, family)
    }

    /// All intersections of subfamilies; contains `V` (empty intersection).
    pub fn intersection_closure(&self) -> Hypergraph {
        let mut family: Vec<VarSet> = vec![self.ground.full_set()];
        for edge in &self.edges {
            let mut grown: Vec<VarSet> = family.iter().map(|s| s.intersection(*edge)).collect();
            family.append(&mut grown);
            family.sort();
            family.dedup();
        }
        Self::same_family(&self.ground, family)
    }

    /// Circuit elimination check: for all distinct edges `C1, C2` and every
    /// `u ∈ C1 ∩ C2` some edge must fit inside `(C1 ∪ C2) − u`.
    ///
    /// Requires a Sperner family without the empty edge, matching what a
    /// circuit family of a matroid must look like.
    pub fn check_circuit_axiom(&self) -> Result<CircuitAxiom, HypergraphError> {
        if self.edges.iter().any(|e| e.is_empty()) {
            return Err(HypergraphError::EmptyEdge);
        }
        if !self.is_sperner() {
            return Err(HypergraphError::NonSperner);
        }
        for (i, &c1) in self.edges.iter().enumerate() {
            for &c2 in &self.edges[i + 1..] {
                for u in c1.intersection(c2).iter() {
                    let room = c1.union(c2).without(u);
                    if !self.edges.iter().any(|c3| c3.is_subset_of(room)) {
                        return Ok(CircuitAxiom::Violated {
                            first: c1,
                            second: c2,
                            pivot: u,
                        });
                    }
                }
            }
        }
        Ok(CircuitAxiom::Holds)
    }
}

fn push_if_minimal(family: &mut Vec<VarSet>, candidate: VarSet) {
    if family.iter().any(|t| t.is_subset_of(candidate)) {
        return;
    }
    family.retain(|t| !candidate.is_subset_of(*t));
    family.push(candidate);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        let ground = GroundSet::numbered(n);
        let edges = edges
            .iter()
            .map(|e| VarSet::from_vars(e.iter().map(|v| v - 1)));
        Hypergraph::new(ground, edges).unwrap()
    }

    #[test]
    fn complement_family_definitional() {
        let h = hg(3, &[&[1, 2], &[3]]);
        let expected = hg(3, &[&[3], &[1, 2]]);
        assert_eq!(h.complement_family(), expected);
    }

    #[test]
    fn complement_family_empty_and_extremes() {
        let h = hg(3, &[]);
        assert_eq!(h.complement_family(), h);
        let h = hg(3, &[&[], &[1, 2, 3]]);
        assert_eq!(h.complement_family(), h);
        let h = hg(4, &[&[1], &[2, 3]]);
        assert_eq!(h.complement_family().complement_family(), h);
    }

    #[test]
    fn minimal_transversals_brute_force_case() {
        let h = hg(5, &[&[1, 2, 3], &[4, 5]]);
        let expected = hg(
            5,
            &[&[1, 4], &[1, 5], &[2, 4], &[2, 5], &[3, 4], &[3, 5]],
        );
        assert_eq!(h.minimal_transversals(), expected);
    }

    #[test]
    fn minimal_transversals_edge_cases() {
        // No edges: the empty set is the unique minimal transversal.
        let h = hg(3, &[]);
        assert_eq!(h.minimal_transversals(), hg(3, &[&[]]));
        // An empty edge can never be met.
        let h = hg(3, &[&[], &[1]]);
        assert_eq!(h.minimal_transversals(), hg(3, &[]));
        // Single singleton edge.
        let h = hg(2, &[&[1]]);
        assert_eq!(h.minimal_transversals(), hg(2, &[&[1]]));
    }

    #[test]
    fn berge_multiplication_matches_brute_force() {
        let h = hg(6, &[&[1, 2], &[2, 3, 4], &[4, 5], &[1, 6]]);
        let brute = h.transversals_brute(6);
        let mut berge = h.transversals_berge();
        berge.sort();
        let mut brute = brute;
        brute.sort();
        assert_eq!(berge, brute);
    }

    #[test]
    fn sperner_reduce_keeps_minimal_edges() {
        let h = hg(2, &[&[1], &[1, 2]]);
        assert_eq!(h.sperner_reduce(), hg(2, &[&[1]]));
        let sperner = hg(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(sperner.sperner_reduce(), sperner);
        let h = hg(1, &[&[], &[1]]);
        assert_eq!(h.sperner_reduce(), hg(1, &[&[]]));
    }

    #[test]
    fn union_closure_definitional() {
        let h = hg(2, &[&[1], &[2]]);
        assert_eq!(h.union_closure(), hg(2, &[&[], &[1], &[2], &[1, 2]]));
        let h = hg(2, &[]);
        assert_eq!(h.union_closure(), hg(2, &[&[]]));
        let h = hg(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(
            h.union_closure(),
            hg(3, &[&[], &[1, 2], &[2, 3], &[1, 2, 3]])
        );
    }

    #[test]
    fn intersection_closure_definitional() {
        let h = hg(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(
            h.intersection_closure(),
            hg(3, &[&[1, 2, 3], &[1, 2], &[2, 3], &[2]])
        );
        let h = hg(3, &[]);
        assert_eq!(h.intersection_closure(), hg(3, &[&[1, 2, 3]]));
        let h = hg(3, &[&[1, 2, 3]]);
        assert_eq!(h.intersection_closure(), hg(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn circuit_axiom_triangle_pairs() {
        let h = hg(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(h.check_circuit_axiom().unwrap(), CircuitAxiom::Holds);
    }

    #[test]
    fn circuit_axiom_violation_reports_witness() {
        let h = hg(3, &[&[1, 2], &[2, 3]]);
        let outcome = h.check_circuit_axiom().unwrap();
        assert_eq!(
            outcome,
            CircuitAxiom::Violated {
                first: VarSet::from_vars([0, 1]),
                second: VarSet::from_vars([1, 2]),
                pivot: 1,
            }
        );
    }

    #[test]
    fn circuit_axiom_vacuous_and_errors() {
        let h = hg(3, &[&[1, 2, 3]]);
        assert_eq!(h.check_circuit_axiom().unwrap(), CircuitAxiom::Holds);
        let h = hg(3, &[&[]]);
        assert_eq!(
            h.check_circuit_axiom().unwrap_err(),
            HypergraphError::EmptyEdge
        );
        let h = hg(3, &[&[1], &[1, 2]]);
        assert_eq!(
            h.check_circuit_axiom().unwrap_err(),
            HypergraphError::NonSperner
        );
    }
}
