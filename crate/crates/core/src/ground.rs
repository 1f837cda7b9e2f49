//! Ground set of named variables and bitmask-backed subsets of it.
//!
//! Every set-valued object in this crate (hyperedges, clause bodies, true
//! sets, implicate sets, ...) is a [`VarSet`]: a fixed-width bitmask over
//! the positions of a [`GroundSet`]. Bit `i` corresponds to the `i`-th
//! variable in ground-set order, which is fixed at construction time.

use std::fmt;

use thiserror::Error;

/// Index of a variable inside its ground set.
pub type Var = usize;

/// Hard cap on ground-set size, equal to the mask width.
pub const MAX_VARS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroundError {
    #[error("ground set has {0} variables, the maximum is {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("unknown variable name `{0}`")]
    UnknownName(String),
}

/// An ordered set of distinct variable names.
///
/// Iteration order is the construction order and never changes, so masks
/// built against a ground set stay meaningful for its whole lifetime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self, GroundError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(GroundError::TooManyVariables(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].iter().any(|other| other == name) {
                return Err(GroundError::DuplicateName(name.clone()));
            }
        }
        Ok(GroundSet { names })
    }

    /// Ground set named `1..=n`, the convention used throughout the tests.
    pub fn numbered(n: usize) -> Self {
        GroundSet::new((1..=n).map(|i| i.to_string())).expect("numbered names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name)
    }

    /// All variables as a set.
    pub fn full_set(&self) -> VarSet {
        VarSet(full_mask(self.names.len()))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> {
        0..self.names.len()
    }

    /// Builds a set from variable names.
    pub fn set_of<'a, I>(&self, names: I) -> Result<VarSet, GroundError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = VarSet::empty();
        for name in names {
            match self.index_of(name) {
                Some(v) => set = set.with(v),
                None => return Err(GroundError::UnknownName(name.to_string())),
            }
        }
        Ok(set)
    }

    /// True when every member of `set` is a position of this ground set.
    pub fn contains_set(&self, set: VarSet) -> bool {
        set.0 & !full_mask(self.names.len()) == 0
    }

    /// Renders a set as its member names in ground order.
    pub fn format_set(&self, set: VarSet) -> String {
        let mut out = String::new();
        for v in set.iter() {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(self.name(v));
        }
        out
    }
}

/// Mask with the low `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    debug_assert!(n <= MAX_VARS);
    if n == MAX_VARS {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of a ground set, stored as a bitmask. Equality is extensional.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const fn empty() -> Self {
        VarSet(0)
    }

    pub const fn singleton(v: Var) -> Self {
        VarSet(1 << v)
    }

    pub const fn from_mask(mask: u64) -> Self {
        VarSet(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn from_vars<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        let mut mask = 0;
        for v in vars {
            debug_assert!(v < MAX_VARS);
            mask |= 1 << v;
        }
        VarSet(mask)
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, v: Var) -> bool {
        self.0 & (1 << v) != 0
    }

    #[must_use]
    pub const fn with(self, v: Var) -> Self {
        VarSet(self.0 | (1 << v))
    }

    #[must_use]
    pub const fn without(self, v: Var) -> Self {
        VarSet(self.0 & !(1 << v))
    }

    pub const fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub const fn minus(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to a ground set of `n` variables.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        VarSet(!self.0 & full_mask(n))
    }

    /// Members in ground order (ascending position).
    pub fn iter(self) -> impl Iterator<Item = Var> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as Var;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl std::ops::BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl std::ops::BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl std::ops::Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: Self) -> Self {
        self.minus(rhs)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterates every subset of `mask`, starting from the empty set.
///
/// Uses the carry-ripple trick `sub = (sub - mask) & mask`.
pub fn subsets_of(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = 0u64;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = sub;
        sub = sub.wrapping_sub(mask) & mask;
        done = sub == 0;
        Some(current)
    })
}
