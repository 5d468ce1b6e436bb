//! The q-analog of Kostant's partition function restricted to a set of
//! positive roots, and the enumeration of sums of exactly `m` of them.
//!
//! For a set `Ξ_+` of positive roots, `℘_{P,q}(ν)` is defined by
//!
//! ```text
//! Π_{α ∈ Ξ_+} (1 - q e^α)^{-1} = Σ_ν ℘_{P,q}(ν) e^ν
//! ```
//!
//! so the coefficient of `q^m` counts multisets of `m` roots from `Ξ_+`
//! summing to `ν`.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::Path;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::parabolic::{nilradical_roots, ParabolicSubset};
use crate::poly::QPolynomial;
use crate::rootsys::{RootSystem, RootVector, Weight};

type MemoKey = (usize, Vec<i64>);

/// Memoised evaluator of `℘_{P,q}` for one fixed root set.
///
/// The memo is keyed by `(root index, ν in simple-root coordinates)` and is
/// shared safely between threads; it never changes observable results.
#[derive(Debug)]
pub struct PartitionFunction {
    rs: RootSystem,
    roots: Vec<RootVector>,
    // suffix_support[i][j]: some root at index >= i has a nonzero j-coordinate
    suffix_support: Vec<Vec<bool>>,
    memo: RwLock<HashMap<MemoKey, QPolynomial>>,
}

/// A partition-function value, possibly truncated at a requested degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionValue {
    pub poly: QPolynomial,
    /// Nonzero terms above the requested degree were dropped.
    pub truncated: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct MemoEntry {
    index: usize,
    nu: Vec<i64>,
    coeffs: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct MemoFile {
    cartan_type: String,
    roots: Vec<Vec<i64>>,
    entries: Vec<MemoEntry>,
}

impl PartitionFunction {
    /// `xi_plus` must be a nonempty set of distinct positive roots of `rs`.
    pub fn new(rs: &RootSystem, xi_plus: &[RootVector]) -> Result<Self> {
        if xi_plus.is_empty() {
            return Err(Error::invalid("the root set of a partition function must be nonempty"));
        }
        let mut positions = Vec::with_capacity(xi_plus.len());
        for r in xi_plus {
            rs.check_rank(r.rank())?;
            let pos = rs
                .root_position(r.coords())
                .ok_or_else(|| Error::invalid(format!("{r} is not a positive root of {}", rs.cartan_type())))?;
            positions.push(pos);
        }
        let mut sorted = positions.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != positions.len() {
            return Err(Error::invalid("repeated root in partition function root set"));
        }
        let roots: Vec<RootVector> = sorted.iter().map(|&p| rs.positive_roots()[p].clone()).collect();
        let n = rs.rank();
        let mut suffix_support = vec![vec![false; n]; roots.len() + 1];
        for i in (0..roots.len()).rev() {
            for j in 0..n {
                suffix_support[i][j] = suffix_support[i + 1][j] || roots[i].coords()[j] != 0;
            }
        }
        Ok(Self { rs: rs.clone(), roots, suffix_support, memo: RwLock::new(HashMap::new()) })
    }

    /// The partition function of the nilradical of `P_Π`.
    pub fn for_parabolic(rs: &RootSystem, levi: &ParabolicSubset) -> Result<Self> {
        Self::new(rs, &nilradical_roots(rs, levi)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// The root set, in root-system order.
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    /// `℘_{P,q}(ν)` for a weight `ν`, optionally truncated above `max_degree`.
    pub fn value(&self, nu: &Weight, max_degree: Option<usize>) -> Result<PartitionValue> {
        self.rs.check_rank(nu.rank())?;
        let mut poly = match self.rs.cone_coords(nu.coords())? {
            Some(c) => self.value_root_coords(&c)?,
            None => QPolynomial::zero(),
        };
        let truncated = max_degree.is_some_and(|d| poly.truncate(d));
        Ok(PartitionValue { poly, truncated })
    }

    /// `℘_{P,q}` at a root-lattice vector given in simple-root coordinates.
    pub fn value_root_coords(&self, nu: &[i64]) -> Result<QPolynomial> {
        self.rs.check_rank(nu.len())?;
        if nu.iter().any(|&x| x < 0) {
            return Ok(QPolynomial::zero());
        }
        self.count(0, nu)
    }

    fn count(&self, i: usize, nu: &[i64]) -> Result<QPolynomial> {
        if nu.iter().all(|&x| x == 0) {
            return Ok(QPolynomial::one());
        }
        if nu.iter().zip(&self.suffix_support[i]).any(|(&x, &s)| x > 0 && !s) {
            return Ok(QPolynomial::zero());
        }
        let root = self.roots[i].coords();
        if i + 1 == self.roots.len() {
            // ν must be a multiple of the last root
            let k = nu
                .iter()
                .zip(root)
                .find(|(_, &r)| r != 0)
                .map(|(&x, &r)| x / r)
                .unwrap_or(0);
            let exact = nu.iter().zip(root).all(|(&x, &r)| x == k * r);
            return Ok(if exact { QPolynomial::monomial(1, k as usize) } else { QPolynomial::zero() });
        }
        let key = (i, nu.to_vec());
        if let Some(hit) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(hit.clone());
        }
        let mut total = QPolynomial::zero();
        let mut rest = nu.to_vec();
        let mut k = 0usize;
        loop {
            let sub = self.count(i + 1, &rest)?;
            total.add_shifted(&sub, k, 1)?;
            for (x, &r) in rest.iter_mut().zip(root) {
                *x -= r;
            }
            if rest.iter().any(|&x| x < 0) {
                break;
            }
            k += 1;
        }
        self.memo.write().expect("memo lock").insert(key, total.clone());
        Ok(total)
    }

    /// Number of memoised entries.
    pub fn memo_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    /// Writes the memo as JSON, tagged with the root system and root set.
    pub fn save_memo(&self, path: &Path) -> Result<()> {
        let memo = self.memo.read().expect("memo lock");
        let mut entries: Vec<MemoEntry> = memo
            .iter()
            .map(|((index, nu), p)| MemoEntry { index: *index, nu: nu.clone(), coeffs: p.coeffs().to_vec() })
            .collect();
        entries.sort_by(|a, b| (a.index, &a.nu).cmp(&(b.index, &b.nu)));
        let file = MemoFile { cartan_type: self.rs.cartan_type().to_string(), roots: self.fingerprint(), entries };
        let text = serde_json::to_string(&file).map_err(|e| Error::invalid(e.to_string()))?;
        fs::write(path, text).map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))
    }

    /// Loads entries saved by [`save_memo`](Self::save_memo). A file for a
    /// different root system or root set is ignored; returns the number of
    /// entries loaded.
    pub fn load_memo(&self, path: &Path) -> Result<usize> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(_) => return Ok(0),
        };
        let file: MemoFile = serde_json::from_str(&text)
            .map_err(|e| Error::invalid(format!("corrupt memo file {}: {e}", path.display())))?;
        if file.cartan_type != self.rs.cartan_type().to_string() || file.roots != self.fingerprint() {
            return Ok(0);
        }
        let mut memo = self.memo.write().expect("memo lock");
        let n = file.entries.len();
        for e in file.entries {
            memo.insert((e.index, e.nu), QPolynomial::from_coeffs(e.coeffs));
        }
        Ok(n)
    }

    fn fingerprint(&self) -> Vec<Vec<i64>> {
        self.roots.iter().map(|r| r.coords().to_vec()).collect()
    }
}

/// One-shot `℘_{P,q}(ν)` for the root set `xi_plus`.
pub fn partition_q(
    rs: &RootSystem,
    xi_plus: &[RootVector],
    nu: &Weight,
    max_degree: Option<usize>,
) -> Result<PartitionValue> {
    PartitionFunction::new(rs, xi_plus)?.value(nu, max_degree)
}

/// For each `m ≤ max_degree`, every weight that is a sum of exactly `m`
/// roots of `xi_plus`, with the number of multisets producing it.
pub fn weights_up_to_degree(
    rs: &RootSystem,
    xi_plus: &[RootVector],
    max_degree: usize,
) -> Result<Vec<BTreeMap<Weight, i64>>> {
    let mut layers: Vec<BTreeMap<Weight, i64>> = vec![BTreeMap::new(); max_degree + 1];
    layers[0].insert(Weight::zero(rs.rank()), 1);
    for r in xi_plus {
        let w = rs.root_to_weight(r)?;
        // ascending degree within one root allows repeats of that root
        for d in 1..=max_degree {
            let (lower, upper) = layers.split_at_mut(d);
            for (nu, &c) in &lower[d - 1] {
                let slot = upper[0].entry(nu.checked_add(&w)?).or_insert(0);
                *slot = error::add(*slot, c, "multiset count")?;
            }
        }
    }
    Ok(layers)
}

/// Every weight that is a sum of exactly `m` roots of `xi_plus`, with its
/// number of multisets.
pub fn weights_of_degree(rs: &RootSystem, xi_plus: &[RootVector], m: usize) -> Result<BTreeMap<Weight, i64>> {
    Ok(weights_up_to_degree(rs, xi_plus, m)?.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s.parse().unwrap())
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    /// Counts multisets of size `m` summing to `nu` by listing them all.
    fn brute(sys: &RootSystem, roots: &[RootVector], nu: &[i64], m: usize) -> i64 {
        roots
            .iter()
            .combinations_with_replacement(m)
            .filter(|c| {
                let mut s = vec![0i64; sys.rank()];
                for r in c {
                    for (x, y) in s.iter_mut().zip(r.coords()) {
                        *x += y;
                    }
                }
                s == nu
            })
            .count() as i64
    }

    #[test]
    fn zero_weight_is_one() {
        for t in ["A1", "B2", "G2"] {
            let sys = rs(t);
            let pf = PartitionFunction::new(&sys, sys.positive_roots()).unwrap();
            assert_eq!(pf.value(&Weight::zero(sys.rank()), None).unwrap().poly, QPolynomial::one());
        }
    }

    #[test]
    fn a2_examples() {
        let a2 = rs("A2");
        let full = partition_q(&a2, a2.positive_roots(), &w(&[1, 1]), None).unwrap();
        assert_eq!(full.poly, QPolynomial::from_coeffs(vec![0, 1, 1]));
        assert!(!full.truncated);
        let levi = ParabolicSubset::parse(&a2, "1").unwrap();
        let pf = PartitionFunction::for_parabolic(&a2, &levi).unwrap();
        assert_eq!(pf.value(&w(&[1, 1]), None).unwrap().poly, QPolynomial::monomial(1, 1));
        // non-integral and negative arguments
        assert!(pf.value(&w(&[1, 0]), None).unwrap().poly.is_zero());
        assert!(pf.value(&w(&[-1, -1]), None).unwrap().poly.is_zero());
    }

    #[test]
    fn a1_is_monomial() {
        let a1 = rs("A1");
        for k in 0..8 {
            let v = partition_q(&a1, a1.positive_roots(), &w(&[2 * k]), None).unwrap();
            assert_eq!(v.poly, QPolynomial::monomial(1, k as usize));
        }
    }

    #[test]
    fn truncation_is_flagged() {
        let a2 = rs("A2");
        let v = partition_q(&a2, a2.positive_roots(), &w(&[1, 1]), Some(1)).unwrap();
        assert_eq!(v.poly, QPolynomial::monomial(1, 1));
        assert!(v.truncated);
        let v = partition_q(&a2, a2.positive_roots(), &w(&[1, 1]), Some(2)).unwrap();
        assert!(!v.truncated);
    }

    #[test]
    fn rejects_bad_root_sets() {
        let a2 = rs("A2");
        assert!(PartitionFunction::new(&a2, &[]).is_err());
        assert!(PartitionFunction::new(&a2, &[RootVector::new(vec![2, 0])]).is_err());
        let r = a2.positive_roots()[0].clone();
        assert!(PartitionFunction::new(&a2, &[r.clone(), r]).is_err());
    }

    #[test]
    fn degree_layers_a2() {
        let a2 = rs("A2");
        let roots = a2.positive_roots();
        let m0 = weights_of_degree(&a2, roots, 0).unwrap();
        assert_eq!(m0, BTreeMap::from([(w(&[0, 0]), 1)]));
        let m1 = weights_of_degree(&a2, roots, 1).unwrap();
        assert_eq!(m1, BTreeMap::from([(w(&[2, -1]), 1), (w(&[-1, 2]), 1), (w(&[1, 1]), 1)]));
        // multisets of size 2 from {α1, α2, θ}: 2α1, 2α2, 2θ, α1+α2 = θ, α1+θ, α2+θ
        let m2 = weights_of_degree(&a2, roots, 2).unwrap();
        let expect = BTreeMap::from([
            (w(&[4, -2]), 1),
            (w(&[-2, 4]), 1),
            (w(&[2, 2]), 1),
            (w(&[1, 1]), 1),
            (w(&[3, 0]), 1),
            (w(&[0, 3]), 1),
        ]);
        assert_eq!(m2, expect);
    }

    #[test]
    fn matches_brute_force_multisets() {
        for t in ["A2", "B2", "G2", "A3"] {
            let sys = rs(t);
            let roots = sys.positive_roots();
            let pf = PartitionFunction::new(&sys, roots).unwrap();
            let layers = weights_up_to_degree(&sys, roots, 4).unwrap();
            for (m, layer) in layers.iter().enumerate() {
                for (nu, &c) in layer {
                    let coords = sys.root_coords(nu).unwrap().unwrap();
                    assert_eq!(c, brute(&sys, roots, &coords, m));
                    assert_eq!(pf.value(nu, None).unwrap().poly.coeff(m), c);
                }
            }
        }
    }

    #[test]
    fn memo_persists() {
        let b2 = rs("B2");
        let pf = PartitionFunction::new(&b2, b2.positive_roots()).unwrap();
        let v = pf.value(&w(&[2, 4]), None).unwrap();
        let dir = std::env::temp_dir().join(format!("qkostant-memo-{}", std::process::id()));
        pf.save_memo(&dir).unwrap();
        let fresh = PartitionFunction::new(&b2, b2.positive_roots()).unwrap();
        assert_eq!(fresh.load_memo(&dir).unwrap(), pf.memo_len());
        assert_eq!(fresh.value(&w(&[2, 4]), None).unwrap(), v);
        let other = PartitionFunction::new(&b2, &b2.positive_roots()[1..]).unwrap();
        assert_eq!(other.load_memo(&dir).unwrap(), 0);
        std::fs::remove_file(&dir).unwrap();
    }

    proptest! {
        #[test]
        fn degree_bounds(a in 0i64..5, b in 0i64..5) {
            let b2 = rs("B2");
            let pf = PartitionFunction::new(&b2, b2.positive_roots()).unwrap();
            let nu = RootVector::new(vec![a, b]);
            let p = pf.value(&b2.root_to_weight(&nu).unwrap(), None).unwrap().poly;
            let h = nu.height();
            prop_assert_eq!(p.degree(), Some(h as usize));
            let hr = b2.highest_root().height();
            prop_assert!((p.low_degree().unwrap() as i64) * hr >= h);
        }
    }
}
