//! Associative positivity, free product and tensor product criteria.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, Catalog};
use crate::classes::{ClassPartition, Triple};
use crate::indicator::IndicatorTensor;
use crate::FubiError;

/// How associativity monomials are compared.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApcMode {
    /// Coefficients in one class share a variable; identical monomials cancel.
    #[default]
    Cancel,
    /// Only emptiness of each side matters.
    Plain,
}

impl std::str::FromStr for ApcMode {
    type Err = FubiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cancel" => Ok(ApcMode::Cancel),
            "plain" => Ok(ApcMode::Plain),
            other => Err(FubiError::UnknownFormat(other.into())),
        }
    }
}

/// Variable standing for a nonzero coefficient under the cancelling reading.
fn variable(t: &IndicatorTensor, part: &ClassPartition, k: usize, j: usize, i: usize) -> u16 {
    if k == 0 || j == 0 {
        0
    } else if i == 0 {
        k.min(t.bar[k]) as u16
    } else {
        let c = part
            .index_of(Triple::new(k, j, i))
            .expect("nonzero triple has a class");
        (t.dim() + c) as u16
    }
}

/// First `(i, j, k, l)` whose associativity polynomial cannot vanish for positive values.
///
/// The tensor is indexed `(k, j, i)` for `N_{kj}^i`; `f(i,j,k,l)` compares
/// `Σ_s N_{ij}^s N_{sk}^l` with `Σ_s N_{is}^l N_{jk}^s`.
pub fn apc_violation(
    t: &IndicatorTensor,
    part: &ClassPartition,
    mode: ApcMode,
) -> Option<[usize; 4]> {
    let d = t.dim();
    let mut terms: Vec<((u16, u16), i32)> = Vec::with_capacity(2 * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    terms.clear();
                    let (mut plus, mut minus) = (false, false);
                    for s in 0..d {
                        if t.get(i, j, s) && t.get(s, k, l) {
                            plus = true;
                            if mode == ApcMode::Cancel {
                                let a = variable(t, part, i, j, s);
                                let b = variable(t, part, s, k, l);
                                bump(&mut terms, (a.min(b), a.max(b)), 1);
                            }
                        }
                        if t.get(i, s, l) && t.get(j, k, s) {
                            minus = true;
                            if mode == ApcMode::Cancel {
                                let a = variable(t, part, i, s, l);
                                let b = variable(t, part, j, k, s);
                                bump(&mut terms, (a.min(b), a.max(b)), -1);
                            }
                        }
                    }
                    let bad = match mode {
                        ApcMode::Plain => plus != minus,
                        ApcMode::Cancel => {
                            let live = terms.iter().filter(|(_, c)| *c != 0);
                            let (mut pos, mut neg) = (false, false);
                            for (_, c) in live {
                                pos |= *c > 0;
                                neg |= *c < 0;
                            }
                            pos != neg
                        }
                    };
                    if bad {
                        return Some([i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}

fn bump(terms: &mut Vec<((u16, u16), i32)>, key: (u16, u16), by: i32) {
    match terms.iter_mut().find(|(k, _)| *k == key) {
        Some((_, c)) => *c += by,
        None => terms.push((key, by)),
    }
}

/// `p_i ⩽ p_j`: `p_i * p_j` and `p_j * p_i` are both supported on `p_j` alone.
pub fn leq(t: &IndicatorTensor, i: usize, j: usize) -> bool {
    if i == 0 {
        return true;
    }
    (0..t.dim()).all(|s| t.get(i, j, s) == (s == j) && t.get(j, i, s) == (s == j))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalS {
    pub s: BTreeSet<usize>,
    pub r: Vec<usize>,
}

/// Greedy construction of a minimal `S`; everything left over lands in `R`.
pub fn minimal_s(t: &IndicatorTensor) -> MinimalS {
    let n = t.n;
    let mut below: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    for i in 1..=n {
        for j in i..=n {
            if leq(t, i, j) {
                below[j].insert(i);
            } else if leq(t, j, i) {
                below[i].insert(j);
            }
        }
    }
    let mut s = BTreeSet::from([0]);
    for i in 1..=n {
        if below[i].is_empty() {
            s.insert(i);
        }
    }
    let mut r: Vec<usize> = Vec::new();
    let rest: Vec<usize> = (0..=n).filter(|x| !s.contains(x)).collect();
    for k in rest {
        if s.iter().all(|&x| x == 0 || below[k].contains(&x)) {
            r.push(k);
        } else {
            s.insert(k);
            let (back, keep): (Vec<usize>, Vec<usize>) =
                r.iter().partition(|&&x| !below[x].contains(&k));
            s.extend(back);
            r = keep;
        }
    }
    MinimalS { s, r }
}

pub fn is_free_product(t: &IndicatorTensor) -> bool {
    minimal_s(t).s.len() < t.dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorWitness {
    pub group: String,
    pub entry: String,
    pub relabeling: Vec<usize>,
}

/// Searches `H ⊗ E` over groups `H` of order `a` and catalog entries `E` of dimension `dim / a`.
pub fn is_tensor_product(
    t: &IndicatorTensor,
    cat: &Catalog,
) -> Result<Option<TensorWitness>, FubiError> {
    let d = t.dim();
    for a in 2..d {
        if d % a != 0 {
            continue;
        }
        let b = d / a;
        let entries = cat.entries_of_dim(b);
        if entries.is_empty() {
            return Err(FubiError::MissingCatalog(b));
        }
        for (name, table) in catalog::small_groups(a) {
            let h = catalog::group_pattern(&table)?;
            for e in &entries {
                let k = catalog::kronecker(&h, &e.tensor()?);
                if let Some(pi) = find_isomorphism(&k, t) {
                    return Ok(Some(TensorWitness {
                        group: name.to_string(),
                        entry: e.label.clone(),
                        relabeling: pi,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// A relabeling `pi` fixing 0 with `pi(bar_a(x)) = bar_b(pi(x))` carrying `a` onto `b`.
pub fn find_isomorphism(a: &IndicatorTensor, b: &IndicatorTensor) -> Option<Vec<usize>> {
    if a.dim() != b.dim() || a.count() != b.count() {
        return None;
    }
    let n = a.n;
    let mut pi = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    used[0] = true;
    extend(a, b, 1, &mut pi, &mut used).then_some(pi)
}

fn extend(
    a: &IndicatorTensor,
    b: &IndicatorTensor,
    x: usize,
    pi: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let d = a.dim();
    if x == d {
        return (0..d)
            .all(|k| (0..d).all(|j| (0..d).all(|i| a.get(k, j, i) == b.get(pi[k], pi[j], pi[i]))));
    }
    for y in 1..d {
        if used[y] {
            continue;
        }
        // Duals must map to duals; check against already placed partners.
        let bx = a.bar[x];
        if bx < x && b.bar[pi[bx]] != y {
            continue;
        }
        if bx == x && b.bar[y] != y {
            continue;
        }
        if bx != x && b.bar[y] == y {
            continue;
        }
        pi[x] = y;
        used[y] = true;
        if extend(a, b, x + 1, pi, used) {
            return true;
        }
        used[y] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{group_pattern, small_groups};
    use crate::classes::build_partition;
    use crate::indicator::{expand, Aif};
    use crate::signature::DualSignature;

    fn cyclic(n: usize) -> IndicatorTensor {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        group_pattern(&table).unwrap()
    }

    #[test]
    fn zero_aif_violates() {
        let sig = DualSignature::canonical(2, 0).unwrap();
        let p = build_partition(&sig, true);
        let t = expand(&Aif::zero(4), &p).unwrap();
        assert!(apc_violation(&t, &p, ApcMode::Plain).is_some());
        assert!(apc_violation(&t, &p, ApcMode::Cancel).is_some());
        // P empty at (1,2,2,1) while s = 0 feeds M.
        assert!(!(0..3).any(|s| t.get(1, 2, s)));
        assert!(t.get(1, 0, 1) && t.get(2, 2, 0));
    }

    #[test]
    fn groups_pass() {
        for order in 2..=6 {
            for (_, table) in small_groups(order) {
                let t = group_pattern(&table).unwrap();
                let e = crate::catalog::entry_from_pattern(&t, "g").unwrap();
                let (p, _, canon) = e.resolve().unwrap();
                assert!(apc_violation(&canon, &p, ApcMode::Plain).is_none());
                assert!(apc_violation(&canon, &p, ApcMode::Cancel).is_none());
            }
        }
    }

    #[test]
    fn leq_and_s() {
        let z3 = cyclic(3);
        assert!(leq(&z3, 0, 2));
        assert!(!leq(&z3, 1, 2));
        let ms = minimal_s(&z3);
        assert_eq!(ms.s, BTreeSet::from([0, 1, 2]));
        assert!(!is_free_product(&z3));
        assert!(!is_free_product(&cyclic(5)));
    }

    #[test]
    fn isomorphism_relabel() {
        let z4 = cyclic(4);
        let pi = vec![0, 3, 2, 1];
        let r = z4.relabel(&pi);
        assert!(find_isomorphism(&z4, &r).is_some());
        let v4 = group_pattern(&small_groups(4)[1].1).unwrap();
        assert!(find_isomorphism(&z4, &v4).is_none());
    }
}
