//! Admissible indicator functions and their expanded zero-pattern tensors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classes::{ClassPartition, Triple};
use crate::signature::DualSignature;
use crate::FubiError;

/// Bitstring over class ranks. Rank 0 is the most significant bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Aif {
    pub bits: u64,
    pub len: usize,
}

impl Aif {
    pub fn new(bits: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        Aif { bits, len }
    }

    pub fn zero(len: usize) -> Self {
        Aif::new(0, len)
    }

    pub fn ones(len: usize) -> Self {
        Aif::new(low_mask(len), len)
    }

    pub fn get(&self, rank: usize) -> bool {
        self.bits >> (self.len - 1 - rank) & 1 == 1
    }

    pub fn set(&mut self, rank: usize, on: bool) {
        let b = 1u64 << (self.len - 1 - rank);
        if on {
            self.bits |= b;
        } else {
            self.bits &= !b;
        }
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.count_ones()
    }
}

pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for Aif {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.len {
            f.write_str(if self.get(r) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Aif {
    type Err = FubiError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.len() > 64 {
            return Err(FubiError::LengthMismatch {
                got: s.len(),
                want: 64,
            });
        }
        let mut bits = 0u64;
        for ch in s.chars() {
            bits = bits << 1
                | match ch {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(FubiError::Catalog(format!("bad aif character {ch:?}"))),
                };
        }
        Ok(Aif::new(bits, s.len()))
    }
}

/// Boolean pattern over `(k, j, i)`, with the involution it was built for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndicatorTensor {
    pub n: usize,
    pub bar: Vec<usize>,
    data: Vec<bool>,
}

impl IndicatorTensor {
    pub fn empty(bar: Vec<usize>) -> Self {
        let d = bar.len();
        IndicatorTensor {
            n: d - 1,
            bar,
            data: vec![false; d * d * d],
        }
    }

    /// Empty tensor carrying only the forced index-0 pattern.
    pub fn forced(bar: Vec<usize>) -> Self {
        let mut t = IndicatorTensor::empty(bar);
        let d = t.dim();
        for a in 0..d {
            t.set(0, a, a, true);
            t.set(a, 0, a, true);
            t.set(a, t.bar[a], 0, true);
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    #[inline]
    pub fn get(&self, k: usize, j: usize, i: usize) -> bool {
        let d = self.n + 1;
        self.data[(k * d + j) * d + i]
    }

    #[inline]
    pub fn set(&mut self, k: usize, j: usize, i: usize, on: bool) {
        let d = self.n + 1;
        self.data[(k * d + j) * d + i] = on;
    }

    pub fn at(&self, t: Triple) -> bool {
        self.get(t.k, t.j, t.i)
    }

    /// Total number of nonzero coefficients, i.e. edges over all fusion graphs.
    pub fn count(&self) -> usize {
        self.data.iter().filter(|&&b| b).count()
    }

    /// Whether the index-0 entries follow the unital pattern.
    pub fn has_forced_pattern(&self) -> bool {
        let d = self.dim();
        (0..d).all(|a| {
            (0..d).all(|b| {
                self.get(0, a, b) == (a == b)
                    && self.get(a, 0, b) == (a == b)
                    && self.get(a, b, 0) == (a == self.bar[b])
            })
        })
    }

    /// Relabel generators: `p_x` becomes `p_{pi[x]}`.
    pub fn relabel(&self, pi: &[usize]) -> IndicatorTensor {
        let d = self.dim();
        let mut bar = vec![0; d];
        for x in 0..d {
            bar[pi[x]] = pi[self.bar[x]];
        }
        let mut out = IndicatorTensor::empty(bar);
        for k in 0..d {
            for j in 0..d {
                for i in 0..d {
                    if self.get(k, j, i) {
                        out.set(pi[k], pi[j], pi[i], true);
                    }
                }
            }
        }
        out
    }

    /// Nested `[k][j][i]` 0/1 arrays.
    pub fn to_nested(&self) -> Vec<Vec<Vec<u8>>> {
        let d = self.dim();
        (0..d)
            .map(|k| {
                (0..d)
                    .map(|j| (0..d).map(|i| self.get(k, j, i) as u8).collect())
                    .collect()
            })
            .collect()
    }

    pub fn from_nested(bar: Vec<usize>, nested: &[Vec<Vec<u8>>]) -> Result<Self, FubiError> {
        let mut t = IndicatorTensor::empty(bar);
        let d = t.dim();
        let bad = || FubiError::Catalog("indicator array has the wrong shape".into());
        if nested.len() != d {
            return Err(bad());
        }
        for (k, plane) in nested.iter().enumerate() {
            if plane.len() != d {
                return Err(bad());
            }
            for (j, row) in plane.iter().enumerate() {
                if row.len() != d {
                    return Err(bad());
                }
                for (i, &v) in row.iter().enumerate() {
                    t.set(k, j, i, v != 0);
                }
            }
        }
        Ok(t)
    }
}

pub fn expand(aif: &Aif, part: &ClassPartition) -> Result<IndicatorTensor, FubiError> {
    if aif.len != part.len() {
        return Err(FubiError::LengthMismatch {
            got: aif.len,
            want: part.len(),
        });
    }
    let mut t = IndicatorTensor::forced(part.signature.bar.clone());
    for (c, class) in part.classes.iter().enumerate() {
        if aif.get(c) {
            for x in class {
                t.set(x.k, x.j, x.i, true);
            }
        }
    }
    Ok(t)
}

/// Inverse of [`expand`]; fails unless the tensor is class-constant.
pub fn read_aif(t: &IndicatorTensor, part: &ClassPartition) -> Result<Aif, FubiError> {
    if t.bar != part.signature.bar {
        return Err(FubiError::InvalidSignature(
            "tensor involution differs from partition".into(),
        ));
    }
    let mut aif = Aif::zero(part.len());
    for (c, class) in part.classes.iter().enumerate() {
        let on = t.at(class[0]);
        if class.iter().any(|&x| t.at(x) != on) {
            return Err(FubiError::NotClassConstant(c));
        }
        aif.set(c, on);
    }
    Ok(aif)
}

/// Interchange record for one candidate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub dim: usize,
    pub n: usize,
    pub involution: Vec<usize>,
    pub commutative: bool,
    pub aif_bits: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indicator: Option<Vec<Vec<Vec<u8>>>>,
}

impl GraphRecord {
    pub fn new(part: &ClassPartition, aif: &Aif, with_tensor: bool) -> Result<Self, FubiError> {
        let indicator = if with_tensor {
            Some(expand(aif, part)?.to_nested())
        } else {
            None
        };
        Ok(GraphRecord {
            dim: part.signature.dim(),
            n: part.n(),
            involution: part.signature.bar.clone(),
            commutative: part.commutative,
            aif_bits: aif.to_string(),
            indicator,
        })
    }

    pub fn signature(&self) -> Result<DualSignature, FubiError> {
        let sig = DualSignature::from_involution(self.involution.clone())?;
        if sig.n != self.n || sig.dim() != self.dim {
            return Err(FubiError::InvalidSignature(
                "dim, n and involution disagree".into(),
            ));
        }
        Ok(sig)
    }

    /// Partition, AIF and tensor described by the record.
    pub fn resolve(&self) -> Result<(ClassPartition, Aif, IndicatorTensor), FubiError> {
        let sig = self.signature()?;
        let part = crate::classes::build_partition(&sig, self.commutative);
        let aif: Aif = self.aif_bits.parse()?;
        let t = expand(&aif, &part)?;
        if let Some(nested) = &self.indicator {
            if IndicatorTensor::from_nested(sig.bar.clone(), nested)? != t {
                return Err(FubiError::Catalog(
                    "indicator disagrees with aif_bits".into(),
                ));
            }
        }
        Ok((part, aif, t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::build_partition;

    #[test]
    fn bit_order() {
        let a: Aif = "0110".parse().unwrap();
        assert_eq!(a.bits, 0b0110);
        assert!(!a.get(0) && a.get(1) && a.get(2) && !a.get(3));
        assert_eq!(a.to_string(), "0110");
    }

    #[test]
    fn zero_aif_forced_only() {
        let sig = DualSignature::canonical(2, 0).unwrap();
        let p = build_partition(&sig, true);
        let t = expand(&Aif::zero(p.len()), &p).unwrap();
        assert!(t.has_forced_pattern());
        assert_eq!(t.count(), 3 + 2 * 2);
    }

    #[test]
    fn single_class() {
        let sig = DualSignature::canonical(4, 0).unwrap();
        let p = build_partition(&sig, true);
        let mut a = Aif::zero(p.len());
        a.set(0, true);
        let t = expand(&a, &p).unwrap();
        let base = expand(&Aif::zero(p.len()), &p).unwrap();
        assert_eq!(t.count(), base.count() + 1);
        assert!(t.get(1, 1, 1));
        assert_eq!(read_aif(&t, &p).unwrap(), a);
    }

    #[test]
    fn record_roundtrip() {
        let sig = DualSignature::canonical(3, 1).unwrap();
        let p = build_partition(&sig, true);
        let a: Aif = "001000".parse().unwrap();
        let r = GraphRecord::new(&p, &a, true).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        let back: GraphRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.resolve().unwrap().1, a);
    }
}
