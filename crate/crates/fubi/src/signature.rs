//! Generator sets with a dual involution.

use serde::{Deserialize, Serialize};

use crate::FubiError;

/// `n` non-identity generators `p_1..p_n` plus `p_0`, with the involution `bar`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualSignature {
    pub n: usize,
    pub bar: Vec<usize>,
    pub m: usize,
}

impl DualSignature {
    /// Canonical layout: pairs (1,2),(3,4),..,(2m-1,2m), the rest self-dual.
    pub fn canonical(n: usize, m: usize) -> Result<Self, FubiError> {
        if n == 0 {
            return Err(FubiError::InvalidSignature(
                "n = 0 is the trivial bialgebra".into(),
            ));
        }
        if 2 * m > n {
            return Err(FubiError::InvalidSignature(format!(
                "{m} dual pairs need at least {} generators, got {n}",
                2 * m
            )));
        }
        let mut bar: Vec<usize> = (0..=n).collect();
        for p in 0..m {
            bar[2 * p + 1] = 2 * p + 2;
            bar[2 * p + 2] = 2 * p + 1;
        }
        Ok(DualSignature { n, bar, m })
    }

    /// Accepts an arbitrary involution fixing 0.
    pub fn from_involution(bar: Vec<usize>) -> Result<Self, FubiError> {
        if bar.len() < 2 {
            return Err(FubiError::InvalidSignature(
                "need at least one generator".into(),
            ));
        }
        let len = bar.len();
        if bar[0] != 0 {
            return Err(FubiError::InvalidSignature("involution must fix 0".into()));
        }
        for (i, &b) in bar.iter().enumerate() {
            if b >= len || bar[b] != i {
                return Err(FubiError::InvalidSignature(format!(
                    "not an involution at {i}"
                )));
            }
        }
        let m = bar.iter().enumerate().filter(|&(i, &b)| i != b).count() / 2;
        Ok(DualSignature { n: len - 1, bar, m })
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    pub fn is_canonical(&self) -> bool {
        DualSignature::canonical(self.n, self.m)
            .map(|c| c.bar == self.bar)
            .unwrap_or(false)
    }

    /// Number of self-dual non-identity generators.
    pub fn self_dual_count(&self) -> usize {
        self.n - 2 * self.m
    }
}

/// One canonical signature per pair count, ascending.
pub fn enumerate_signatures(n: usize) -> Result<Vec<DualSignature>, FubiError> {
    if n == 0 {
        return Err(FubiError::InvalidSignature(
            "n = 0 is the trivial bialgebra".into(),
        ));
    }
    (0..=n / 2)
        .map(|m| DualSignature::canonical(n, m))
        .collect()
}

/// Commutativity default per (n, m); off only where the class lists require it.
pub fn default_commutative(n: usize, m: usize) -> bool {
    !(n == 4 && m == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_signatures(4).unwrap().len(), 3);
        assert_eq!(enumerate_signatures(3).unwrap().len(), 2);
        let one = enumerate_signatures(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].bar, vec![0, 1]);
        assert!(enumerate_signatures(0).is_err());
    }

    #[test]
    fn involution() {
        for n in 1..7 {
            for s in enumerate_signatures(n).unwrap() {
                for i in 0..=n {
                    assert_eq!(s.bar[s.bar[i]], i);
                }
                assert!(s.is_canonical());
                assert_eq!(DualSignature::from_involution(s.bar.clone()).unwrap(), s);
            }
        }
        assert!(DualSignature::from_involution(vec![1, 0]).is_err());
        assert!(DualSignature::from_involution(vec![0, 2, 2]).is_err());
    }
}
