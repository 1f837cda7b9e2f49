//! Small hand-built instances shared by the test suites and the CLI
//! fixtures. Not part of the supported API surface.

use crate::ground::{GroundSet, VarSet};
use crate::hypergraph::Hypergraph;

fn vs(vars: &[usize]) -> VarSet {
    VarSet::from_vars(vars.iter().map(|v| v - 1))
}

/// Two hypergraphs over eight variables whose circular CNFs represent the
/// same function. The first is Sperner, the second is not, and the shared
/// function has a non-circular implicate (`{1,5,6} → 3` holds, `{3,5,6} → 1`
/// does not).
pub fn two_representations() -> (Hypergraph, Hypergraph) {
    let ground = GroundSet::numbered(8);
    let h1 = vs(&[1, 2, 5]);
    let h2 = vs(&[4, 5, 6]);
    let h3 = vs(&[3, 4, 7]);
    let h4 = vs(&[2, 7, 8]);
    let h5 = vs(&[1, 2, 3, 4]);
    let h6 = vs(&[1, 2, 3, 5, 6]);
    let h7 = vs(&[1, 3, 4, 7, 8]);
    let a = Hypergraph::new(ground.clone(), [h1, h2, h3, h4, h5]).unwrap();
    let b = Hypergraph::new(ground, [h1, h2, h3, h4, h6, h7]).unwrap();
    (a, b)
}

/// Ground set `1, 1', 2, 2', ..., n, n'` and the family consisting of every
/// pair `{i, i'}` plus the set `{1, ..., n}` of unprimed variables. Its
/// implicate-set family grows far beyond the union closure of the input.
pub fn paired_vars(n: usize) -> Hypergraph {
    let mut names = Vec::with_capacity(2 * n);
    for i in 1..=n {
        names.push(i.to_string());
        names.push(format!("{i}p"));
    }
    let ground = GroundSet::new(names).unwrap();
    let mut edges: Vec<VarSet> = (0..n)
        .map(|i| VarSet::from_vars([2 * i, 2 * i + 1]))
        .collect();
    edges.push(VarSet::from_vars((0..n).map(|i| 2 * i)));
    Hypergraph::new(ground, edges).unwrap()
}

/// A five-variable family whose circular CNF is self implicate-dual: its
/// implicate sets are exactly the seven edges below, and its true sets are
/// their complements.
pub fn self_dual_family() -> Hypergraph {
    let ground = GroundSet::numbered(5);
    let edges = [
        vs(&[]),
        vs(&[1, 2, 3]),
        vs(&[4, 5]),
        vs(&[1, 2, 4, 5]),
        vs(&[1, 3, 4, 5]),
        vs(&[2, 3, 4, 5]),
        vs(&[1, 2, 3, 4, 5]),
    ];
    Hypergraph::new(ground, edges).unwrap()
}

/// Three pair edges over five variables: two equivalence-like classes
/// `{1,2,3}` and `{4,5}`.
pub fn two_classes() -> Hypergraph {
    let ground = GroundSet::numbered(5);
    Hypergraph::new(ground, [vs(&[1, 2]), vs(&[2, 3]), vs(&[4, 5])]).unwrap()
}
