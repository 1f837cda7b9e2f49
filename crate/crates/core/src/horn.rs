//! Definite Horn CNFs and the forward-chaining closure operator.
//!
//! A [`DefiniteClause`] is one implication `body → head`. A [`HornCnf`] is a
//! conjunction of such clauses over a shared ground set. The central
//! operation is [`HornCnf::closure`]: the unique minimal true set containing
//! a seed, computed by counter-based forward chaining in time linear in the
//! CNF length. Everything else in the crate is built on top of it.

use thiserror::Error;

use crate::ground::{GroundSet, Var, VarSet};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HornError {
    #[error("clause head occurs in its own body")]
    HeadInBody,
    #[error("clause mentions variables outside the ground set")]
    ClauseOutOfGround,
    #[error("operands are defined over different ground sets")]
    GroundMismatch,
    #[error("malformed witness: set not contained in the ground set")]
    MalformedWitness,
}

/// One implication `body → head` with `head ∉ body`; the body may be empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DefiniteClause {
    body: VarSet,
    head: Var,
}

impl DefiniteClause {
    pub fn new(body: VarSet, head: Var) -> Result<Self, HornError> {
        if body.contains(head) {
            return Err(HornError::HeadInBody);
        }
        Ok(DefiniteClause { body, head })
    }

    pub fn body(&self) -> VarSet {
        self.body
    }

    pub fn head(&self) -> Var {
        self.head
    }

    /// `|body| + 1`, the clause's contribution to the CNF length.
    pub fn size(&self) -> usize {
        self.body.len() + 1
    }
}

/// A conjunction of definite Horn clauses.
///
/// Duplicate clauses collapse at construction; the remaining clause order is
/// preserved so parse/print round-trips are stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornCnf {
    ground: GroundSet,
    clauses: Vec<DefiniteClause>,
    /// occurrence[v] = indices of clauses whose body contains v.
    occurrence: Vec<Vec<u32>>,
}

impl HornCnf {
    pub fn new<I>(ground: GroundSet, clauses: I) -> Result<Self, HornError>
    where
        I: IntoIterator<Item = DefiniteClause>,
    {
        let mut list: Vec<DefiniteClause> = Vec::new();
        for clause in clauses {
            if !ground.contains_set(clause.body.with(clause.head)) {
                return Err(HornError::ClauseOutOfGround);
            }
            if !list.contains(&clause) {
                list.push(clause);
            }
        }
        Ok(Self::from_deduped(ground, list))
    }

    fn from_deduped(ground: GroundSet, clauses: Vec<DefiniteClause>) -> Self {
        let mut occurrence = vec![Vec::new(); ground.len()];
        for (i, clause) in clauses.iter().enumerate() {
            for v in clause.body.iter() {
                occurrence[v].push(i as u32);
            }
        }
        HornCnf {
            ground,
            clauses,
            occurrence,
        }
    }

    /// The empty conjunction: the constant-1 function.
    pub fn constant_true(ground: GroundSet) -> Self {
        Self::from_deduped(ground, Vec::new())
    }

    /// The circular CNF of a hypergraph: for each edge `E` and each `v ∈ E`
    /// the clause `(E − v) → v`. The empty edge contributes nothing.
    pub fn circular(h: &Hypergraph) -> Self {
        let mut clauses = Vec::new();
        for edge in h.edges() {
            for v in edge.iter() {
                let clause = DefiniteClause {
                    body: edge.without(v),
                    head: v,
                };
                if !clauses.contains(&clause) {
                    clauses.push(clause);
                }
            }
        }
        Self::from_deduped(h.ground().clone(), clauses)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn clauses(&self) -> &[DefiniteClause] {
        &self.clauses
    }

    /// Number of clauses.
    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Total length: sum of `|body| + 1` over all clauses.
    pub fn total_length(&self) -> usize {
        self.clauses.iter().map(DefiniteClause::size).sum()
    }

    /// Forward-chaining closure: the unique minimal true set containing
    /// `seed`. Runs in time linear in the CNF length.
    pub fn closure(&self, seed: VarSet) -> VarSet {
        debug_assert!(self.ground.contains_set(seed));
        let mut missing: Vec<u32> = self
            .clauses
            .iter()
            .map(|c| c.body.minus(seed).len() as u32)
            .collect();
        let mut reached = seed;
        let mut queue: Vec<Var> = Vec::new();
        for (i, clause) in self.clauses.iter().enumerate() {
            if missing[i] == 0 && !reached.contains(clause.head) {
                reached = reached.with(clause.head);
                queue.push(clause.head);
            }
        }
        while let Some(v) = queue.pop() {
            for &i in &self.occurrence[v] {
                let i = i as usize;
                missing[i] -= 1;
                let head = self.clauses[i].head;
                if missing[i] == 0 && !reached.contains(head) {
                    reached = reached.with(head);
                    queue.push(head);
                }
            }
        }
        reached
    }

    /// Evaluates the CNF at a point: every clause with `body ⊆ x` must have
    /// its head in `x`.
    pub fn evaluate(&self, x: VarSet) -> bool {
        self.clauses
            .iter()
            .all(|c| !c.body.is_subset_of(x) || x.contains(c.head))
    }

    /// Whether `body → head` majorizes this function. Requires `head ∉ body`.
    pub fn is_implicate(&self, body: VarSet, head: Var) -> Result<bool, HornError> {
        if body.contains(head) {
            return Err(HornError::HeadInBody);
        }
        Ok(self.closure(body).contains(head))
    }

    /// A set is true exactly when it is closed.
    pub fn is_true_set(&self, t: VarSet) -> bool {
        self.evaluate(t)
    }

    /// A key closes to the whole ground set.
    pub fn is_key(&self, k: VarSet) -> bool {
        self.closure(k) == self.ground.full_set()
    }

    /// Whether `(I − v) → v` is an implicate for every `v ∈ I`.
    /// The empty set always qualifies.
    pub fn is_implicate_set(&self, i: VarSet) -> bool {
        i.iter().all(|v| self.closure(i.without(v)).contains(v))
    }

    /// Pointwise `self ≤ other`: every clause of `other` is an implicate of
    /// `self`.
    pub fn implies(&self, other: &HornCnf) -> Result<bool, HornError> {
        if self.ground != other.ground {
            return Err(HornError::GroundMismatch);
        }
        Ok(other
            .clauses
            .iter()
            .all(|c| self.closure(c.body).contains(c.head)))
    }

    /// Function equality via mutual implication.
    pub fn equivalent(&self, other: &HornCnf) -> Result<bool, HornError> {
        Ok(self.implies(other)? && other.implies(self)?)
    }
}

/// Greedily drops edges whose removal keeps the circular CNF's function
/// unchanged. The result is a subfamily representing the same function from
/// which no single edge can be removed.
pub fn reduce_representation(h: &Hypergraph) -> Hypergraph {
    let mut kept: Vec<VarSet> = h.edges().to_vec();
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        let trial_hg = Hypergraph::new(h.ground().clone(), trial.iter().copied())
            .expect("edges already validated");
        let kept_hg = Hypergraph::new(h.ground().clone(), kept.iter().copied())
            .expect("edges already validated");
        let full = HornCnf::circular(&kept_hg);
        let reduced = HornCnf::circular(&trial_hg);
        if full.equivalent(&reduced).expect("same ground") {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Hypergraph::new(h.ground().clone(), kept).expect("edges already validated")
}
