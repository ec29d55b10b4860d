//! Unital dual-preserving automorphisms and their action on class ranks.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::classes::{ClassPartition, Triple};
use crate::indicator::Aif;
use crate::signature::DualSignature;
use crate::FubiError;

/// Permutation of `{0..n}` fixing 0 and commuting with `bar`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub perm: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism {
            perm: (0..=n).collect(),
        }
    }

    pub fn is_valid(&self, sig: &DualSignature) -> bool {
        let p = &self.perm;
        p.len() == sig.dim()
            && p[0] == 0
            && p.iter().copied().collect::<BTreeSet<_>>().len() == p.len()
            && (0..p.len()).all(|x| p.get(sig.bar[x]).is_some_and(|&y| y == sig.bar[p[x]]))
    }

    pub fn apply(&self, t: Triple) -> Triple {
        Triple::new(self.perm[t.k], self.perm[t.j], self.perm[t.i])
    }
}

/// All `m! * 2^m * (n-2m)!` automorphisms of a canonical signature.
pub fn group_elements(sig: &DualSignature) -> Vec<Automorphism> {
    let m = sig.m;
    let selfdual: Vec<usize> = (2 * m + 1..=sig.n).collect();
    let mut out = Vec::new();
    for pp in (0..m).permutations(m) {
        for swaps in 0u32..(1 << m) {
            for sp in selfdual.iter().copied().permutations(selfdual.len()) {
                let mut g = vec![0; sig.dim()];
                for (p, &q) in pp.iter().enumerate() {
                    let (a, b) = if swaps >> p & 1 == 1 {
                        (2 * q + 2, 2 * q + 1)
                    } else {
                        (2 * q + 1, 2 * q + 2)
                    };
                    g[2 * p + 1] = a;
                    g[2 * p + 2] = b;
                }
                for (x, &y) in selfdual.iter().zip(&sp) {
                    g[*x] = y;
                }
                out.push(Automorphism { perm: g });
            }
        }
    }
    out
}

/// Rank permutation `p` with `p[c]` the class of `g` applied to class `c`.
pub fn induced_class_permutation(
    g: &Automorphism,
    part: &ClassPartition,
) -> Result<Vec<usize>, FubiError> {
    if !g.is_valid(&part.signature) {
        return Err(FubiError::ActionMismatch);
    }
    let mut p = Vec::with_capacity(part.len());
    for class in &part.classes {
        let target = part
            .index_of(g.apply(class[0]))
            .ok_or(FubiError::ActionMismatch)?;
        if class
            .iter()
            .any(|&t| part.index_of(g.apply(t)) != Some(target))
        {
            return Err(FubiError::ActionMismatch);
        }
        p.push(target);
    }
    Ok(p)
}

/// Nontrivial induced rank permutations, deduplicated.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub len: usize,
    pub perms: Vec<Vec<usize>>,
}

impl InducedAction {
    pub fn new(part: &ClassPartition) -> Result<Self, FubiError> {
        let mut set = BTreeSet::new();
        for g in group_elements(&part.signature) {
            let p = induced_class_permutation(&g, part)?;
            if p.iter().enumerate().any(|(a, &b)| a != b) {
                set.insert(p);
            }
        }
        Ok(InducedAction {
            len: part.len(),
            perms: set.into_iter().collect(),
        })
    }

    /// Orbit representative with the smallest integer value.
    pub fn canonicalize(&self, aif: &Aif) -> Aif {
        self.perms
            .iter()
            .map(|p| act(p, aif))
            .fold(*aif, |a, b| a.min(b))
    }

    pub fn is_canonical(&self, aif: &Aif) -> bool {
        self.perms.iter().all(|p| act(p, aif).bits >= aif.bits)
    }

    pub fn orbit(&self, aif: &Aif) -> BTreeSet<Aif> {
        let mut o: BTreeSet<Aif> = self.perms.iter().map(|p| act(p, aif)).collect();
        o.insert(*aif);
        o
    }
}

/// `(g . aif)[p[c]] = aif[c]`.
pub fn act(p: &[usize], aif: &Aif) -> Aif {
    let mut out = Aif::zero(aif.len);
    let top = aif.len - 1;
    let mut rest = aif.bits;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out.bits |= 1 << (top - p[top - b]);
    }
    out
}

/// 1-based cycle notation, fixed points omitted.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x];
        }
        out.push_str(&format!("({})", cyc.join(",")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::build_partition;
    use crate::signature::default_commutative;

    fn part(n: usize, m: usize) -> ClassPartition {
        build_partition(
            &DualSignature::canonical(n, m).unwrap(),
            default_commutative(n, m),
        )
    }

    #[test]
    fn group_sizes() {
        let size = |n, m| group_elements(&DualSignature::canonical(n, m).unwrap()).len();
        assert_eq!(size(4, 0), 24);
        assert_eq!(size(4, 1), 4);
        assert_eq!(size(4, 2), 8);
        assert_eq!(size(5, 1), 12);
        for n in 1..6 {
            for m in 0..=n / 2 {
                let sig = DualSignature::canonical(n, m).unwrap();
                assert!(group_elements(&sig).iter().all(|g| g.is_valid(&sig)));
            }
        }
    }

    #[test]
    fn transposition() {
        let p = part(4, 0);
        let g = Automorphism {
            perm: vec![0, 1, 2, 4, 3],
        };
        let q = induced_class_permutation(&g, &p).unwrap();
        assert_eq!(
            cycle_notation(&q),
            "(3,4)(6,7)(8,10)(12,13)(14,16)(17,20)(18,19)"
        );
        let id = induced_class_permutation(&Automorphism::identity(4), &p).unwrap();
        assert_eq!(cycle_notation(&id), "()");
        let p1 = part(4, 1);
        let swap = Automorphism {
            perm: vec![0, 2, 1, 3, 4],
        };
        let q = induced_class_permutation(&swap, &p1).unwrap();
        assert_eq!(cycle_notation(&q), "(5,7)(6,10)(9,11)");
    }

    #[test]
    fn action_sizes() {
        assert_eq!(InducedAction::new(&part(4, 0)).unwrap().perms.len(), 23);
        assert_eq!(InducedAction::new(&part(4, 1)).unwrap().perms.len(), 3);
        assert_eq!(InducedAction::new(&part(4, 2)).unwrap().perms.len(), 3);
    }

    #[test]
    fn mismatch() {
        let p = part(4, 1);
        let g = Automorphism {
            perm: vec![0, 3, 2, 1, 4],
        };
        assert!(induced_class_permutation(&g, &p).is_err());
    }

    #[test]
    fn extremes_fixed() {
        let a = InducedAction::new(&part(4, 0)).unwrap();
        assert_eq!(a.canonicalize(&Aif::zero(20)), Aif::zero(20));
        assert_eq!(a.canonicalize(&Aif::ones(20)), Aif::ones(20));
    }
}
