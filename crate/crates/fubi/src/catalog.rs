//! Known realizable fusion patterns and the constructors that produce them.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::classes::{build_partition, ClassPartition};
use crate::graphs::all_forest;
use crate::indicator::{expand, read_aif, Aif, IndicatorTensor};
use crate::signature::{default_commutative, DualSignature};
use crate::symmetry::InducedAction;
use crate::FubiError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StoredSolution {
    pub d: Vec<f64>,
    pub delta: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub dim: usize,
    pub involution: Vec<usize>,
    #[serde(default)]
    pub commutative: Option<bool>,
    pub aif_bits: String,
    pub label: String,
    #[serde(default)]
    pub solution: Option<StoredSolution>,
}

impl CatalogEntry {
    pub fn signature(&self) -> Result<DualSignature, FubiError> {
        let sig = DualSignature::from_involution(self.involution.clone())?;
        if sig.dim() != self.dim {
            return Err(FubiError::Catalog(format!(
                "entry {:?}: dim disagrees with involution",
                self.label
            )));
        }
        Ok(sig)
    }

    pub fn is_commutative(&self) -> Result<bool, FubiError> {
        let sig = self.signature()?;
        Ok(self
            .commutative
            .unwrap_or_else(|| default_commutative(sig.n, sig.m)))
    }

    pub fn resolve(&self) -> Result<(ClassPartition, Aif, IndicatorTensor), FubiError> {
        let sig = self.signature()?;
        let part = build_partition(&sig, self.is_commutative()?);
        let aif: Aif = self.aif_bits.parse()?;
        let t = expand(&aif, &part)?;
        Ok((part, aif, t))
    }

    pub fn tensor(&self) -> Result<IndicatorTensor, FubiError> {
        Ok(self.resolve()?.2)
    }

    fn key(&self) -> (usize, Vec<usize>, String) {
        (self.dim, self.involution.clone(), self.aif_bits.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog {
            version: SCHEMA_VERSION,
            entries: Vec::new(),
        }
    }
}

impl Catalog {
    /// Dimensions 2 and 3 from the constructors.
    pub fn seeded() -> Result<Self, FubiError> {
        let mut cat = Catalog::default();
        let z2 = group_pattern(&cyclic_table(2))?;
        let tl = temperley_lieb();
        cat.insert(entry_from_pattern(&tl, "TL")?)?;
        cat.insert(entry_from_pattern(&z2, "Z_2")?)?;
        cat.insert(entry_from_pattern(
            &group_pattern(&cyclic_table(3))?,
            "Z_3",
        )?)?;
        for (a, la) in [(&tl, "TL"), (&z2, "Z_2")] {
            for (b, lb) in [(&tl, "TL"), (&z2, "Z_2")] {
                cat.insert(entry_from_pattern(
                    &free_product(a, b),
                    &format!("{la}*{lb}"),
                )?)?;
            }
        }
        cat.insert(CatalogEntry {
            dim: 3,
            involution: vec![0, 1, 2],
            commutative: Some(true),
            aif_bits: "0110".into(),
            label: "Z_2 in Z_5:Z_2".into(),
            solution: Some(StoredSolution {
                d: vec![
                    5f64.powf(-0.5),
                    2.0 * 5f64.powf(-0.5),
                    2.0 * 5f64.powf(-0.5),
                ],
                delta: 5f64.sqrt(),
            }),
        })?;
        Ok(cat)
    }

    pub fn entries_of_dim(&self, dim: usize) -> Vec<&CatalogEntry> {
        self.entries.iter().filter(|e| e.dim == dim).collect()
    }

    /// Stores the canonical form; returns false when an equivalent entry exists.
    pub fn insert(&mut self, entry: CatalogEntry) -> Result<bool, FubiError> {
        let (part, aif, t) = entry.resolve()?;
        if !all_forest(&t) {
            return Err(FubiError::Catalog(format!(
                "entry {:?} is not a forest pattern",
                entry.label
            )));
        }
        let canon = InducedAction::new(&part)?.canonicalize(&aif);
        let entry = CatalogEntry {
            aif_bits: canon.to_string(),
            ..entry
        };
        if self.entries.iter().any(|e| e.key() == entry.key()) {
            return Ok(false);
        }
        self.entries.push(entry);
        self.entries.sort_by_key(|e| e.key());
        Ok(true)
    }

    pub fn save(&self, path: &Path) -> Result<(), FubiError> {
        fs::write(path, serde_json::to_string_pretty(self)? + "\n")?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, FubiError> {
        let cat: Catalog = serde_json::from_str(&fs::read_to_string(path)?)?;
        if cat.version != SCHEMA_VERSION {
            return Err(FubiError::Catalog(format!(
                "schema version {} (expected {SCHEMA_VERSION})",
                cat.version
            )));
        }
        for e in &cat.entries {
            e.resolve()?;
        }
        Ok(cat)
    }

    /// Loads `path` if present, otherwise the seeded catalog.
    pub fn open_or_seed(path: Option<&Path>) -> Result<Self, FubiError> {
        match path {
            Some(p) if p.exists() => Catalog::load(p),
            _ => Catalog::seeded(),
        }
    }
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect()
}

fn product_table(a: &[Vec<usize>], b: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (na, nb) = (a.len(), b.len());
    (0..na * nb)
        .map(|x| {
            (0..na * nb)
                .map(|y| a[x / nb][y / nb] * nb + b[x % nb][y % nb])
                .collect()
        })
        .collect()
}

fn s3_table() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| idx([a[b[0]], a[b[1]], a[b[2]]]))
                .collect()
        })
        .collect()
}

/// Cayley tables of all groups of the given order (up to 6).
pub fn small_groups(order: usize) -> Vec<(&'static str, Vec<Vec<usize>>)> {
    match order {
        1 => vec![("Z_1", cyclic_table(1))],
        2 => vec![("Z_2", cyclic_table(2))],
        3 => vec![("Z_3", cyclic_table(3))],
        4 => vec![
            ("Z_4", cyclic_table(4)),
            ("Z_2+Z_2", product_table(&cyclic_table(2), &cyclic_table(2))),
        ],
        5 => vec![("Z_5", cyclic_table(5))],
        6 => vec![("Z_6", cyclic_table(6)), ("S_3", s3_table())],
        _ => Vec::new(),
    }
}

fn check_group(table: &[Vec<usize>]) -> Result<Vec<usize>, FubiError> {
    let n = table.len();
    if n == 0
        || table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
    {
        return Err(FubiError::NotAGroup(
            "table is not square over its index set".into(),
        ));
    }
    if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
        return Err(FubiError::NotAGroup("0 is not the identity".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(FubiError::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                }
            }
        }
    }
    (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a][b] == 0 && table[b][a] == 0)
                .ok_or_else(|| FubiError::NotAGroup(format!("{a} has no inverse")))
        })
        .collect()
}

/// `ind(k, j, i) = [i = k j]`, `bar = inverse`.
pub fn group_pattern(table: &[Vec<usize>]) -> Result<IndicatorTensor, FubiError> {
    let inv = check_group(table)?;
    let mut t = IndicatorTensor::empty(inv);
    for k in 0..table.len() {
        for j in 0..table.len() {
            t.set(k, j, table[k][j], true);
        }
    }
    Ok(t)
}

pub fn group_graph(table: &[Vec<usize>], label: &str) -> Result<CatalogEntry, FubiError> {
    entry_from_pattern(&group_pattern(table)?, label)
}

/// Generic two-dimensional pattern: `p_1 * p_1` hits both generators.
pub fn temperley_lieb() -> IndicatorTensor {
    let mut t = IndicatorTensor::forced(vec![0, 1]);
    t.set(1, 1, 1, true);
    t
}

/// Kronecker product; label `(x, y)` becomes `x * dim(b) + y`.
pub fn kronecker(a: &IndicatorTensor, b: &IndicatorTensor) -> IndicatorTensor {
    let (da, db) = (a.dim(), b.dim());
    let bar = (0..da * db)
        .map(|x| a.bar[x / db] * db + b.bar[x % db])
        .collect();
    let mut t = IndicatorTensor::empty(bar);
    for k in 0..da * db {
        for j in 0..da * db {
            for i in 0..da * db {
                if a.get(k / db, j / db, i / db) && b.get(k % db, j % db, i % db) {
                    t.set(k, j, i, true);
                }
            }
        }
    }
    t
}

/// Generators `p_0`, then the nontrivial generators of `a`, then those of `b`.
pub fn free_product(a: &IndicatorTensor, b: &IndicatorTensor) -> IndicatorTensor {
    let (na, nb) = (a.n, b.n);
    let d = na + nb + 1;
    let side_b = |x: usize| x > na;
    let to_b = |x: usize| if x == 0 { 0 } else { x - na };
    let mut bar = vec![0; d];
    for x in 1..d {
        bar[x] = if side_b(x) {
            b.bar[to_b(x)] + na
        } else {
            a.bar[x]
        };
    }
    let mut t = IndicatorTensor::forced(bar);
    for k in 1..d {
        for j in 1..d {
            for i in 0..d {
                let on = match (side_b(k), side_b(j)) {
                    (false, false) => !side_b(i) && a.get(k, j, i),
                    (false, true) => i == j,
                    (true, false) => i == k,
                    (true, true) => {
                        if side_b(i) {
                            b.get(to_b(k), to_b(j), to_b(i))
                        } else {
                            b.get(to_b(k), to_b(j), 0)
                        }
                    }
                };
                t.set(k, j, i, on);
            }
        }
    }
    t
}

/// Relabels into the canonical signature layout and stores the orbit representative.
pub fn entry_from_pattern(t: &IndicatorTensor, label: &str) -> Result<CatalogEntry, FubiError> {
    let (part, aif) = canonical_form(t)?;
    Ok(CatalogEntry {
        dim: t.dim(),
        involution: part.signature.bar.clone(),
        commutative: Some(part.commutative),
        aif_bits: aif.to_string(),
        label: label.to_string(),
        solution: None,
    })
}

/// Partition and canonical AIF of an arbitrarily labelled pattern.
pub fn canonical_form(t: &IndicatorTensor) -> Result<(ClassPartition, Aif), FubiError> {
    if !t.has_forced_pattern() {
        return Err(FubiError::Catalog(
            "pattern violates the unital index-0 rules".into(),
        ));
    }
    let d = t.dim();
    let mut pi = vec![0; d];
    let mut next = 1;
    let mut placed = BTreeSet::new();
    for x in 1..d {
        if t.bar[x] != x && !placed.contains(&x) {
            pi[x] = next;
            pi[t.bar[x]] = next + 1;
            placed.insert(t.bar[x]);
            next += 2;
        }
    }
    for x in 1..d {
        if t.bar[x] == x {
            pi[x] = next;
            next += 1;
        }
    }
    let r = t.relabel(&pi);
    let sig = DualSignature::from_involution(r.bar.clone())?;
    let preferred = default_commutative(sig.n, sig.m);
    let mut last = None;
    for comm in [preferred, !preferred] {
        let part = build_partition(&sig, comm);
        match read_aif(&r, &part) {
            Ok(aif) => {
                let canon = InducedAction::new(&part)?.canonicalize(&aif);
                return Ok((part, canon));
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("two attempts were made"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::{find_isomorphism, is_free_product, minimal_s};

    #[test]
    fn groups() {
        let z2 = group_graph(&cyclic_table(2), "Z_2").unwrap();
        assert_eq!(z2.dim, 2);
        let g1 = crate::graphs::FusionGraph::of(&z2.tensor().unwrap(), 1);
        assert_eq!(g1.edges, vec![(0, 1), (1, 0)]);
        let z5 = group_graph(&cyclic_table(5), "Z_5").unwrap();
        assert_eq!(z5.signature().unwrap().m, 2);
        let z4 = group_graph(&cyclic_table(4), "Z_4").unwrap();
        let v4 = group_graph(&small_groups(4)[1].1, "V").unwrap();
        assert_eq!(z4.signature().unwrap().m, 1);
        assert_eq!(v4.signature().unwrap().m, 0);
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(group_pattern(&bad).is_err());
    }

    #[test]
    fn kronecker_z2_z2() {
        let z2 = group_pattern(&cyclic_table(2)).unwrap();
        let k = kronecker(&z2, &z2);
        let v4 = group_pattern(&small_groups(4)[1].1).unwrap();
        assert!(find_isomorphism(&k, &v4).is_some());
        let one = group_pattern(&cyclic_table(1)).unwrap();
        let tl = temperley_lieb();
        assert!(find_isomorphism(&kronecker(&tl, &one), &tl).is_some());
        assert!(find_isomorphism(&kronecker(&one, &tl), &tl).is_some());
    }

    #[test]
    fn tl_free_tl() {
        let tl = temperley_lieb();
        let f = free_product(&tl, &tl);
        let ms = minimal_s(&f);
        assert_eq!(ms.s, BTreeSet::from([0, 1]));
        assert_eq!(ms.r, vec![2]);
        assert!(is_free_product(&f));
        assert!(crate::sieve::leq(&f, 1, 2));
        let e = entry_from_pattern(&f, "TL*TL").unwrap();
        assert_eq!(e.aif_bits, "1011");
    }

    #[test]
    fn seeds() {
        let cat = Catalog::seeded().unwrap();
        assert_eq!(cat.entries_of_dim(2).len(), 2);
        assert_eq!(cat.entries_of_dim(3).len(), 6);
        let mut again = cat.clone();
        let dup =
            entry_from_pattern(&free_product(&temperley_lieb(), &temperley_lieb()), "x").unwrap();
        assert!(!again.insert(dup).unwrap());
        assert_eq!(again, cat);
    }

    #[test]
    fn persist() {
        let cat = Catalog::seeded().unwrap();
        let dir = std::env::temp_dir().join(format!("fubi-cat-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let p = dir.join("cat.json");
        cat.save(&p).unwrap();
        assert_eq!(Catalog::load(&p).unwrap(), cat);
        let mut bad = cat.clone();
        bad.version = 99;
        bad.save(&p).unwrap();
        assert!(Catalog::load(&p).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }
}
