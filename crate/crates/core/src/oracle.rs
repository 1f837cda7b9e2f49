//! Exhaustive truth-table ground truth.
//!
//! Everything here deliberately works by brute force over all `2^n` points
//! so it can cross-check the polynomial algorithms in the rest of the crate
//! without sharing any code path with them. Ground sets are capped
//! accordingly: evaluation at `n ≤ 20`, subset-family extraction at
//! `n ≤ 16`, and all-pairs characterization checks at `n ≤ 12`.
//!
//! Table construction and the family scans are data-parallel over the
//! `2^n` index range when the `parallel` feature is enabled; sequential
//! fallbacks are always compiled and exposed for benchmarking.

use thiserror::Error;

use crate::ground::{full_mask, subsets_of, GroundSet, VarSet};
use crate::horn::HornCnf;
use crate::hypergraph::Hypergraph;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicU64, Ordering};

/// Cap for per-point evaluation (table construction).
pub const MAX_EVAL_VARS: usize = 20;
/// Cap for extracting whole subset families from a table.
pub const MAX_FAMILY_VARS: usize = 16;
/// Cap for checks that pair every subset against a whole family.
pub const MAX_PAIRWISE_VARS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("ground set has {n} variables, this oracle operation caps at {cap}")]
    GroundTooLarge { n: usize, cap: usize },
    #[error("truth table is not definite Horn (true sets must be intersection-closed and contain V)")]
    NotDefiniteHorn,
}

fn check_cap(n: usize, cap: usize) -> Result<(), OracleError> {
    if n > cap {
        Err(OracleError::GroundTooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Explicit map from every subset of the ground set to `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    ground: GroundSet,
    bits: Vec<u64>,
}

impl TruthTable {
    fn blocks(n: usize) -> usize {
        if n >= 6 {
            1usize << (n - 6)
        } else {
            1
        }
    }

    /// Builds a table by evaluating a predicate at every subset mask.
    pub fn from_fn<F>(ground: GroundSet, f: F) -> Result<Self, OracleError>
    where
        F: Fn(u64) -> bool,
    {
        let n = ground.len();
        check_cap(n, MAX_EVAL_VARS)?;
        let mut bits = vec![0u64; Self::blocks(n)];
        for mask in 0..(1u64 << n) {
            if f(mask) {
                bits[(mask >> 6) as usize] |= 1 << (mask & 63);
            }
        }
        Ok(TruthTable { ground, bits })
    }

    /// Evaluates a CNF at all points. Dispatches to the parallel driver
    /// when available.
    pub fn from_cnf(cnf: &HornCnf) -> Result<Self, OracleError> {
        #[cfg(feature = "parallel")]
        {
            Self::from_cnf_parallel(cnf)
        }
        #[cfg(not(feature = "parallel"))]
        {
            Self::from_cnf_sequential(cnf)
        }
    }

    pub fn from_cnf_sequential(cnf: &HornCnf) -> Result<Self, OracleError> {
        let n = cnf.ground().len();
        check_cap(n, MAX_EVAL_VARS)?;
        let bits = (0..Self::blocks(n))
            .map(|b| Self::eval_block(cnf, n, b))
            .collect();
        Ok(TruthTable {
            ground: cnf.ground().clone(),
            bits,
        })
    }

    #[cfg(feature = "parallel")]
    pub fn from_cnf_parallel(cnf: &HornCnf) -> Result<Self, OracleError> {
        let n = cnf.ground().len();
        check_cap(n, MAX_EVAL_VARS)?;
        let bits = (0..Self::blocks(n))
            .into_par_iter()
            .map(|b| Self::eval_block(cnf, n, b))
            .collect();
        Ok(TruthTable {
            ground: cnf.ground().clone(),
            bits,
        })
    }

    fn eval_block(cnf: &HornCnf, n: usize, block: usize) -> u64 {
        let base = (block as u64) << 6;
        let limit = 1u64 << n;
        let mut word = 0u64;
        for offset in 0..64u64 {
            let mask = base | offset;
            if mask >= limit {
                break;
            }
            if cnf.evaluate(VarSet::from_mask(mask)) {
                word |= 1 << offset;
            }
        }
        word
    }

    /// Builds a table whose true sets are exactly the given masks.
    pub fn from_true_sets<I>(ground: GroundSet, trues: I) -> Result<Self, OracleError>
    where
        I: IntoIterator<Item = u64>,
    {
        let n = ground.len();
        check_cap(n, MAX_EVAL_VARS)?;
        let mut bits = vec![0u64; Self::blocks(n)];
        for mask in trues {
            debug_assert!(mask < (1u64 << n) || n == 0 && mask == 0);
            bits[(mask >> 6) as usize] |= 1 << (mask & 63);
        }
        Ok(TruthTable { ground, bits })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn num_points(&self) -> u64 {
        1u64 << self.ground.len()
    }

    pub fn value_mask(&self, mask: u64) -> bool {
        self.bits[(mask >> 6) as usize] & (1 << (mask & 63)) != 0
    }

    pub fn value(&self, x: VarSet) -> bool {
        self.value_mask(x.mask())
    }

    pub fn count_true(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn true_masks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.num_points()).filter(|m| self.value_mask(*m))
    }

    pub fn false_masks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.num_points()).filter(|m| !self.value_mask(*m))
    }

    /// Family of true sets as a hypergraph.
    pub fn true_set_family(&self) -> Result<Hypergraph, OracleError> {
        check_cap(self.ground.len(), MAX_FAMILY_VARS)?;
        Ok(Hypergraph::new(
            self.ground.clone(),
            self.true_masks().map(VarSet::from_mask),
        )
        .expect("masks lie within the ground set"))
    }

    /// For each subset `Z` the intersection of all true supersets of `Z`
    /// (the full set when none exists). For a definite Horn table this is
    /// the closure map `Z ↦ 𝑇(Z)`.
    pub fn closure_map(&self) -> Result<Vec<VarSet>, OracleError> {
        let n = self.ground.len();
        check_cap(n, MAX_FAMILY_VARS)?;
        let full = full_mask(n);
        let mut map: Vec<u64> = (0..self.num_points())
            .map(|m| if self.value_mask(m) { m } else { full })
            .collect();
        for b in 0..n {
            let half = 1usize << b;
            let stride = half << 1;
            #[cfg(feature = "parallel")]
            {
                map.par_chunks_mut(stride).for_each(|chunk| {
                    let (lo, hi) = chunk.split_at_mut(half);
                    for i in 0..half {
                        lo[i] &= hi[i];
                    }
                });
            }
            #[cfg(not(feature = "parallel"))]
            {
                map.chunks_mut(stride).for_each(|chunk| {
                    let (lo, hi) = chunk.split_at_mut(half);
                    for i in 0..half {
                        lo[i] &= hi[i];
                    }
                });
            }
        }
        Ok(map.into_iter().map(VarSet::from_mask).collect())
    }

    /// Sequential driver for [`Self::closure_map`], kept for benchmarking.
    pub fn closure_map_sequential(&self) -> Result<Vec<VarSet>, OracleError> {
        let n = self.ground.len();
        check_cap(n, MAX_FAMILY_VARS)?;
        let full = full_mask(n);
        let mut map: Vec<u64> = (0..self.num_points())
            .map(|m| if self.value_mask(m) { m } else { full })
            .collect();
        for b in 0..n {
            let half = 1usize << b;
            map.chunks_mut(half << 1).for_each(|chunk| {
                let (lo, hi) = chunk.split_at_mut(half);
                for i in 0..half {
                    lo[i] &= hi[i];
                }
            });
        }
        Ok(map.into_iter().map(VarSet::from_mask).collect())
    }

    /// True sets intersection-closed and containing the full set.
    pub fn is_definite_horn(&self) -> Result<bool, OracleError> {
        let map = self.closure_map()?;
        if !self.value_mask(full_mask(self.ground.len())) {
            return Ok(false);
        }
        Ok((0..self.num_points()).all(|m| self.value(map[m as usize])))
    }

    /// All implicate sets of the function: sets `I` such that no true set
    /// `T` satisfies `|I ∖ T| = 1`. Valid for arbitrary tables.
    pub fn implicate_family(&self) -> Result<Vec<VarSet>, OracleError> {
        let ruled_out = self.ruled_out_sets()?;
        Ok((0..self.num_points())
            .filter(|m| ruled_out[(m >> 6) as usize] & (1 << (m & 63)) == 0)
            .map(VarSet::from_mask)
            .collect())
    }

    pub fn implicate_family_hypergraph(&self) -> Result<Hypergraph, OracleError> {
        Ok(Hypergraph::new(self.ground.clone(), self.implicate_family()?)
            .expect("masks lie within the ground set"))
    }

    /// Marks every set that fails the implicate-set condition: for a true
    /// set `T` and `v ∉ T`, all sets `(S ⊆ T) + v` are ruled out.
    fn ruled_out_sets(&self) -> Result<Vec<u64>, OracleError> {
        let n = self.ground.len();
        check_cap(n, MAX_FAMILY_VARS)?;
        #[cfg(feature = "parallel")]
        {
            let out: Vec<AtomicU64> = (0..Self::blocks(n)).map(|_| AtomicU64::new(0)).collect();
            (0..self.num_points())
                .into_par_iter()
                .filter(|m| self.value_mask(*m))
                .for_each(|t| {
                    let absent = !t & full_mask(n);
                    let mut rest = absent;
                    while rest != 0 {
                        let v = rest.trailing_zeros();
                        rest &= rest - 1;
                        let bit = 1u64 << v;
                        for sub in subsets_of(t) {
                            let bad = sub | bit;
                            out[(bad >> 6) as usize].fetch_or(1 << (bad & 63), Ordering::Relaxed);
                        }
                    }
                });
            Ok(out.into_iter().map(AtomicU64::into_inner).collect())
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.ruled_out_sets_sequential()
        }
    }

    /// Sequential driver for the implicate-family scan, kept for
    /// benchmarking.
    pub fn implicate_family_sequential(&self) -> Result<Vec<VarSet>, OracleError> {
        let ruled_out = self.ruled_out_sets_sequential()?;
        Ok((0..self.num_points())
            .filter(|m| ruled_out[(m >> 6) as usize] & (1 << (m & 63)) == 0)
            .map(VarSet::from_mask)
            .collect())
    }

    fn ruled_out_sets_sequential(&self) -> Result<Vec<u64>, OracleError> {
        let n = self.ground.len();
        check_cap(n, MAX_FAMILY_VARS)?;
        let mut out = vec![0u64; Self::blocks(n)];
        for t in self.true_masks() {
            let absent = !t & full_mask(n);
            let mut rest = absent;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let bit = 1u64 << v;
                for sub in subsets_of(t) {
                    let bad = sub | bit;
                    out[(bad >> 6) as usize] |= 1 << (bad & 63);
                }
            }
        }
        Ok(out)
    }

    /// Implicate-dual: the table whose true sets are the complements of
    /// this table's implicate sets.
    pub fn implicate_dual(&self) -> Result<TruthTable, OracleError> {
        let n = self.ground.len();
        let family = self.implicate_family()?;
        let full = full_mask(n);
        TruthTable::from_true_sets(
            self.ground.clone(),
            family.into_iter().map(|i| !i.mask() & full),
        )
    }

    /// The minimal circular majorant: the function of the circular CNF of
    /// this table's implicate-set family.
    pub fn circular_majorant(&self) -> Result<TruthTable, OracleError> {
        let family = self.implicate_family()?;
        TruthTable::from_fn(self.ground.clone(), |mask| {
            let x = VarSet::from_mask(mask);
            family.iter().all(|i| i.minus(x).len() != 1)
        })
    }

    /// Minimal keys read straight off the table's closure map.
    pub fn minimal_key_family(&self) -> Result<Hypergraph, OracleError> {
        let n = self.ground.len();
        let map = self.closure_map()?;
        let full = self.ground.full_set();
        let is_key = |m: u64| map[m as usize] == full;
        let minimal = (0..self.num_points()).filter(|&m| {
            is_key(m)
                && VarSet::from_mask(m)
                    .iter()
                    .all(|v| !is_key(m & !(1 << v)))
        });
        let _ = n;
        Ok(Hypergraph::new(
            self.ground.clone(),
            minimal.map(VarSet::from_mask),
        )
        .expect("masks lie within the ground set"))
    }

    /// Maximal true sets strictly below the full set.
    pub fn maximal_nontrivial_true_family(&self) -> Result<Hypergraph, OracleError> {
        let n = self.ground.len();
        check_cap(n, MAX_FAMILY_VARS)?;
        let full = full_mask(n);
        // reachable[z]: some nontrivial true superset of z exists (possibly
        // z itself). True sets are not union-closed, so maximality has to
        // look arbitrarily far up, not just one variable.
        let mut reachable: Vec<bool> = (0..self.num_points())
            .map(|m| m != full && self.value_mask(m))
            .collect();
        for b in 0..n {
            let half = 1usize << b;
            reachable.chunks_mut(half << 1).for_each(|chunk| {
                let (lo, hi) = chunk.split_at_mut(half);
                for i in 0..half {
                    lo[i] |= hi[i];
                }
            });
        }
        let maximal = (0..self.num_points()).filter(|&m| {
            m != full
                && self.value_mask(m)
                && VarSet::from_mask(!m & full)
                    .iter()
                    .all(|v| !reachable[(m | (1 << v)) as usize])
        });
        Ok(Hypergraph::new(
            self.ground.clone(),
            maximal.map(VarSet::from_mask),
        )
        .expect("masks lie within the ground set"))
    }

    /// Whether the table's function has a circular CNF representation:
    /// definite Horn, and every false set is one variable short of some
    /// implicate set.
    pub fn is_circular_representable(&self) -> Result<bool, OracleError> {
        check_cap(self.ground.len(), MAX_PAIRWISE_VARS)?;
        if !self.is_definite_horn()? {
            return Ok(false);
        }
        let family = self.implicate_family()?;
        Ok(self.false_set_cover_holds(&family))
    }

    fn false_set_cover_holds(&self, family: &[VarSet]) -> bool {
        self.false_masks().all(|f| {
            let fs = VarSet::from_mask(f);
            family.iter().any(|i| i.minus(fs).len() == 1)
        })
    }

    /// Evaluates the equivalent fixpoint/duality/cover/exchange
    /// characterizations of circular representability, each computed along
    /// its own route. On a definite Horn table they must all agree.
    pub fn characterization_report(&self) -> Result<CharacterizationReport, OracleError> {
        let n = self.ground.len();
        check_cap(n, MAX_PAIRWISE_VARS)?;
        if !self.is_definite_horn()? {
            return Err(OracleError::NotDefiniteHorn);
        }
        let family = self.implicate_family()?;
        let generator = generator_of(&family);
        let map = self.closure_map()?;

        let circular_majorant_fixpoint = self.circular_majorant()? == *self;
        let double_dual_fixpoint = self.implicate_dual()?.implicate_dual()? == *self;
        let implicate_cover = self.false_set_cover_holds(&family);
        let generator_cover = self.false_set_cover_holds(&generator);

        let exchange = self.false_masks().all(|f| {
            let fs = VarSet::from_mask(f);
            let closed = map[f as usize];
            closed.minus(fs).iter().any(|u| {
                fs.iter().all(|v| {
                    let smaller = fs.without(v);
                    if !self.value(smaller) {
                        return true;
                    }
                    map[smaller.with(u).mask() as usize].contains(v)
                })
            })
        });

        Ok(CharacterizationReport {
            circular_majorant_fixpoint,
            double_dual_fixpoint,
            implicate_cover,
            generator_cover,
            exchange,
        })
    }
}

/// Per-claim outcome of [`TruthTable::characterization_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterizationReport {
    /// The circular CNF of the implicate-set family represents the function.
    pub circular_majorant_fixpoint: bool,
    /// Applying the implicate-dual twice gives the function back.
    pub double_dual_fixpoint: bool,
    /// Every false set is one variable short of some implicate set.
    pub implicate_cover: bool,
    /// Same cover condition restricted to the standard generator.
    pub generator_cover: bool,
    /// Exchange condition on closures at every false set.
    pub exchange: bool,
}

impl CharacterizationReport {
    pub fn claims(&self) -> [bool; 5] {
        [
            self.circular_majorant_fixpoint,
            self.double_dual_fixpoint,
            self.implicate_cover,
            self.generator_cover,
            self.exchange,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let claims = self.claims();
        claims.iter().all(|c| *c == claims[0])
    }
}

/// Members of a family that are not unions of other members strictly
/// contained in them; the minimal generator under union for union-closed
/// families. The empty set is never a generator (it is the empty union).
pub fn generator_of(family: &[VarSet]) -> Vec<VarSet> {
    family
        .iter()
        .filter(|&&i| {
            if i.is_empty() {
                return false;
            }
            let mut union = VarSet::empty();
            for &j in family {
                if j != i && j.is_subset_of(i) {
                    union = union.union(j);
                }
            }
            union != i
        })
        .copied()
        .collect()
}

/// Union of all family members contained in `s`; for a union-closed family
/// this is its unique maximal member inside `s`.
pub fn largest_member_within(family: &[VarSet], s: VarSet) -> VarSet {
    family
        .iter()
        .filter(|i| i.is_subset_of(s))
        .fold(VarSet::empty(), |acc, i| acc.union(*i))
}
