//! Frobenius / dual / commutativity classes of coefficient triples.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::signature::DualSignature;
use crate::FubiError;

/// `(k, j, i)`: the coefficient of `p_i` in `p_k * p_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub k: usize,
    pub j: usize,
    pub i: usize,
}

impl Triple {
    pub const fn new(k: usize, j: usize, i: usize) -> Self {
        Triple { k, j, i }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N_{{{},{}}}^{}", self.k, self.j, self.i)
    }
}

fn frob(t: Triple, bar: &[usize]) -> Triple {
    Triple::new(t.j, bar[t.i], bar[t.k])
}

fn dual(t: Triple, bar: &[usize]) -> Triple {
    Triple::new(bar[t.j], bar[t.k], bar[t.i])
}

/// Closure of `{t}` under the Frobenius map, the dual map and (optionally) commutativity.
pub fn frobenius_orbit(
    t: Triple,
    sig: &DualSignature,
    commutative: bool,
) -> Result<BTreeSet<Triple>, FubiError> {
    if t.k == 0 || t.j == 0 || t.i == 0 {
        return Err(FubiError::ZeroIndex(t));
    }
    if t.k > sig.n || t.j > sig.n || t.i > sig.n {
        return Err(FubiError::OutOfRange(t));
    }
    let mut seen = BTreeSet::from([t]);
    let mut stack = vec![t];
    while let Some(x) = stack.pop() {
        let mut next = vec![frob(x, &sig.bar), dual(x, &sig.bar)];
        if commutative {
            next.push(Triple::new(x.j, x.k, x.i));
        }
        for y in next {
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    Ok(seen)
}

/// Partition of `{1..n}^3` into classes ordered by their smallest triple.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub signature: DualSignature,
    pub commutative: bool,
    pub classes: Vec<Vec<Triple>>,
    index_of: Vec<Option<usize>>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn n(&self) -> usize {
        self.signature.n
    }

    /// Class rank of a triple with all indices nonzero.
    pub fn index_of(&self, t: Triple) -> Option<usize> {
        let d = self.signature.dim();
        if t.k >= d || t.j >= d || t.i >= d {
            return None;
        }
        self.index_of[(t.k * d + t.j) * d + t.i]
    }

    /// Classes rendered in `N_{k,j}^i` notation, one per line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (c, class) in self.classes.iter().enumerate() {
            let items: Vec<String> = class.iter().map(|t| t.to_string()).collect();
            out.push_str(&format!("t{} = {{{}}}\n", c + 1, items.join(", ")));
        }
        out
    }
}

pub fn build_partition(sig: &DualSignature, commutative: bool) -> ClassPartition {
    let d = sig.dim();
    let mut index_of = vec![None; d * d * d];
    let mut classes = Vec::new();
    // Lexicographic sweep: the first unseen triple is its class's minimum.
    for k in 1..d {
        for j in 1..d {
            for i in 1..d {
                if index_of[(k * d + j) * d + i].is_some() {
                    continue;
                }
                let orbit = frobenius_orbit(Triple::new(k, j, i), sig, commutative)
                    .expect("indices are nonzero and in range");
                let rank = classes.len();
                for t in &orbit {
                    index_of[(t.k * d + t.j) * d + t.i] = Some(rank);
                }
                classes.push(orbit.into_iter().collect());
            }
        }
    }
    ClassPartition {
        signature: sig.clone(),
        commutative,
        classes,
        index_of,
    }
}
