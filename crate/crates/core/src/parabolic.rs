//! Standard parabolics `P = P_Π` and the root partition `Φ = Ξ_+ ⊔ Ξ_0 ⊔ Ξ_-`.
//!
//! `Ξ_0` holds the roots supported on `Π` (the Levi factor), `Ξ_+` the
//! remaining positive roots (the nilradical `n^+`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootVector, Weight};

/// A proper subset `Π ⊊ Δ` of simple roots. The empty set is the Borel.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    levi: Vec<usize>,
    rank: usize,
}

impl ParabolicSubset {
    /// From 0-based indices. Duplicates are merged; `Π = Δ` is rejected.
    pub fn new(rs: &RootSystem, indices: &[usize]) -> Result<Self> {
        let rank = rs.rank();
        let mut levi = indices.to_vec();
        levi.sort_unstable();
        levi.dedup();
        if let Some(&bad) = levi.iter().find(|&&i| i >= rank) {
            return Err(Error::invalid(format!(
                "simple root index {} out of range 1..={rank}",
                bad + 1
            )));
        }
        if levi.len() == rank {
            return Err(Error::invalid(
                "levi set contains every simple root; P = G is not a proper parabolic",
            ));
        }
        Ok(Self { levi, rank })
    }

    /// From 1-based Bourbaki indices.
    pub fn from_bourbaki(rs: &RootSystem, indices: &[usize]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(Error::invalid("simple root indices are 1-based"));
        }
        let zero_based: Vec<usize> = indices.iter().map(|i| i - 1).collect();
        Self::new(rs, &zero_based)
    }

    /// Parses a comma-separated list of 1-based indices; empty means the Borel.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::borel(rs));
        }
        let idx = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("`{}` is not a simple root index", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bourbaki(rs, &idx)
    }

    pub fn borel(rs: &RootSystem) -> Self {
        Self { levi: Vec::new(), rank: rs.rank() }
    }

    /// `Δ ∖ {α_i}` for a 0-based `i`.
    pub fn maximal(rs: &RootSystem, i: usize) -> Result<Self> {
        let rest: Vec<usize> = (0..rs.rank()).filter(|&k| k != i).collect();
        Self::new(rs, &rest)
    }

    /// 0-based, sorted.
    pub fn levi(&self) -> &[usize] {
        &self.levi
    }

    pub fn levi_bourbaki(&self) -> Vec<usize> {
        self.levi.iter().map(|i| i + 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.levi.binary_search(&i).is_ok()
    }

    pub fn is_borel(&self) -> bool {
        self.levi.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether a positive root lies in `Ξ_0`.
    pub fn is_levi_root(&self, root: &[i64]) -> bool {
        root.iter().enumerate().all(|(k, &c)| c == 0 || self.contains(k))
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        if self.rank == rs.rank() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "parabolic built for rank {} used with {}",
                self.rank,
                rs.cartan_type()
            )))
        }
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.levi.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// `Ξ_+`: positive roots not supported entirely on `Π`, in root-system order.
pub fn nilradical_roots(rs: &RootSystem, levi: &ParabolicSubset) -> Result<Vec<RootVector>> {
    levi.check(rs)?;
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|r| !levi.is_levi_root(r.coords()))
        .cloned()
        .collect())
}

/// Positive roots of the Levi factor (`Ξ_0 ∩ Φ^+`).
pub fn levi_positive_roots(rs: &RootSystem, levi: &ParabolicSubset) -> Result<Vec<RootVector>> {
    levi.check(rs)?;
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|r| levi.is_levi_root(r.coords()))
        .cloned()
        .collect())
}

/// `⟨λ, α_i^∨⟩ ≥ 0` for every `i ∈ Π`.
pub fn is_p_dominant(rs: &RootSystem, levi: &ParabolicSubset, lambda: &Weight) -> Result<bool> {
    levi.check(rs)?;
    rs.check_rank(lambda.rank())?;
    Ok(levi.levi.iter().all(|&i| lambda.coords()[i] >= 0))
}

/// `2ρ_P`, the sum of the roots in `Ξ_+`, in fundamental-weight coordinates.
pub fn two_rho_p(rs: &RootSystem, levi: &ParabolicSubset) -> Result<Weight> {
    let mut sum = Weight::zero(rs.rank());
    for (root, w) in rs.positive_roots().iter().zip(rs.positive_root_weights()) {
        if !levi.is_levi_root(root.coords()) {
            sum = sum.checked_add(w)?;
        }
    }
    levi.check(rs)?;
    Ok(sum)
}

/// Whether `n^+` is abelian: no sum of two roots of `Ξ_+` is a root.
pub fn is_hermitian_symmetric(rs: &RootSystem, levi: &ParabolicSubset) -> Result<bool> {
    let xi = nilradical_roots(rs, levi)?;
    for (k, a) in xi.iter().enumerate() {
        for b in &xi[k..] {
            if rs.is_root(a.checked_add(b)?.coords()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which known case, if any, guarantees the vanishing of all higher
/// cohomology of `E_μ^* ⊗ Sym^m` for every `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VanishingCase {
    /// Line bundle on `G/B` with dominant `μ`.
    LineBundleDominant,
    /// `|Π| = 1`, dominant `μ`.
    MinimalParabolic,
    /// Dominant `μ` with `μ' = μ + 2ρ_P` dominant and `P`-regular.
    ///
    /// Without the dominance of `μ` itself the twist is unsound: on `P^1`,
    /// `μ = -2` gives `μ' = 0`, yet `H^1(O(-2)) ≠ 0`.
    TwistedRegular,
    /// Type `A`, dominant regular `μ`.
    TypeARegular,
    /// Abelian nilradical, dominant `μ`.
    HermitianSymmetric,
    /// Not covered by any known result.
    Unknown,
}

impl VanishingCase {
    pub fn is_covered(self) -> bool {
        self != VanishingCase::Unknown
    }

    pub fn name(self) -> &'static str {
        match self {
            VanishingCase::LineBundleDominant => "LineBundleDominant",
            VanishingCase::MinimalParabolic => "MinimalParabolic",
            VanishingCase::TwistedRegular => "TwistedRegular",
            VanishingCase::TypeARegular => "TypeARegular",
            VanishingCase::HermitianSymmetric => "HermitianSymmetric",
            VanishingCase::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for VanishingCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First matching case, tried in declaration order of [`VanishingCase`].
pub fn vanishing_case(rs: &RootSystem, levi: &ParabolicSubset, mu: &Weight) -> Result<VanishingCase> {
    if !is_p_dominant(rs, levi, mu)? {
        return Err(Error::invalid(format!(
            "μ = {mu} is not P-dominant for Π = {levi}"
        )));
    }
    let dominant = mu.is_dominant();
    if levi.is_borel() && dominant {
        return Ok(VanishingCase::LineBundleDominant);
    }
    if levi.levi().len() == 1 && dominant {
        return Ok(VanishingCase::MinimalParabolic);
    }
    let twisted = mu.checked_add(&two_rho_p(rs, levi)?)?;
    let p_regular = levi.levi().iter().all(|&i| twisted.coords()[i] != 0);
    if dominant && twisted.is_dominant() && p_regular {
        return Ok(VanishingCase::TwistedRegular);
    }
    if rs.series() == crate::rootsys::Series::A && mu.is_regular_dominant() {
        return Ok(VanishingCase::TypeARegular);
    }
    if dominant && is_hermitian_symmetric(rs, levi)? {
        return Ok(VanishingCase::HermitianSymmetric);
    }
    Ok(VanishingCase::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s.parse().unwrap())
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    fn r(v: &[i64]) -> RootVector {
        RootVector::new(v.to_vec())
    }

    #[test]
    fn construction() {
        let a2 = rs("A2");
        assert!(ParabolicSubset::parse(&a2, "").unwrap().is_borel());
        assert_eq!(ParabolicSubset::parse(&a2, "2").unwrap().levi(), &[1]);
        assert!(ParabolicSubset::parse(&a2, "1,2").is_err());
        assert!(ParabolicSubset::parse(&a2, "3").is_err());
        assert!(ParabolicSubset::parse(&a2, "0").is_err());
        assert!(ParabolicSubset::parse(&a2, "x").is_err());
        assert_eq!(ParabolicSubset::parse(&rs("B3"), "3, 1").unwrap().to_string(), "{1,3}");
    }

    #[test]
    fn nilradicals() {
        let a2 = rs("A2");
        assert_eq!(nilradical_roots(&a2, &ParabolicSubset::borel(&a2)).unwrap().len(), 3);
        let p1 = ParabolicSubset::parse(&a2, "1").unwrap();
        assert_eq!(nilradical_roots(&a2, &p1).unwrap(), vec![r(&[0, 1]), r(&[1, 1])]);
        let b2 = rs("B2");
        let p1 = ParabolicSubset::parse(&b2, "1").unwrap();
        assert_eq!(nilradical_roots(&b2, &p1).unwrap(), vec![r(&[0, 1]), r(&[1, 1]), r(&[1, 2])]);
        assert!(nilradical_roots(&a2, &ParabolicSubset::borel(&b2.clone())).is_ok());
        assert!(nilradical_roots(&rs("A3"), &p1).is_err());
    }

    #[test]
    fn partition_sizes_add_up() {
        for t in ["A4", "B3", "C4", "D4", "F4", "G2"] {
            let sys = rs(t);
            for mask in 0u32..(1 << sys.rank()) - 1 {
                let idx: Vec<usize> = (0..sys.rank()).filter(|k| mask & (1 << k) != 0).collect();
                let p = ParabolicSubset::new(&sys, &idx).unwrap();
                let a = nilradical_roots(&sys, &p).unwrap().len();
                let b = levi_positive_roots(&sys, &p).unwrap().len();
                assert_eq!(a + b, sys.positive_roots().len());
            }
        }
    }

    #[test]
    fn p_dominance() {
        let a2 = rs("A2");
        let p1 = ParabolicSubset::parse(&a2, "1").unwrap();
        assert!(is_p_dominant(&a2, &p1, &w(&[0, 0])).unwrap());
        assert!(is_p_dominant(&a2, &p1, &w(&[0, -5])).unwrap());
        assert!(!is_p_dominant(&a2, &p1, &w(&[-1, 3])).unwrap());
        assert!(is_p_dominant(&a2, &p1, &w(&[0])).is_err());
    }

    #[test]
    fn two_rho_p_examples() {
        let a1 = rs("A1");
        assert_eq!(two_rho_p(&a1, &ParabolicSubset::borel(&a1)).unwrap(), w(&[2]));
        let a2 = rs("A2");
        assert_eq!(two_rho_p(&a2, &ParabolicSubset::borel(&a2)).unwrap(), w(&[2, 2]));
        let p1 = ParabolicSubset::parse(&a2, "1").unwrap();
        assert_eq!(two_rho_p(&a2, &p1).unwrap(), w(&[0, 3]));
        // 2ρ_P is a character of P: it vanishes on the Levi coroots
        let c4 = rs("C4");
        let p = ParabolicSubset::parse(&c4, "1,2,4").unwrap();
        let t = two_rho_p(&c4, &p).unwrap();
        assert_eq!(t.coords()[0], 0);
        assert_eq!(t.coords()[1], 0);
        assert_eq!(t.coords()[3], 0);
        assert!(t.coords()[2] > 0);
    }

    #[test]
    fn hermitian_examples() {
        let a2 = rs("A2");
        assert!(is_hermitian_symmetric(&a2, &ParabolicSubset::parse(&a2, "1").unwrap()).unwrap());
        let b2 = rs("B2");
        assert!(!is_hermitian_symmetric(&b2, &ParabolicSubset::parse(&b2, "1").unwrap()).unwrap());
        assert!(is_hermitian_symmetric(&b2, &ParabolicSubset::parse(&b2, "2").unwrap()).unwrap());
        assert!(!is_hermitian_symmetric(&a2, &ParabolicSubset::borel(&a2)).unwrap());
    }

    #[test]
    fn cominuscule_criterion() {
        for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"] {
            let sys = rs(t);
            for i in 0..sys.rank() {
                if sys.rank() == 1 {
                    continue;
                }
                let p = ParabolicSubset::maximal(&sys, i).unwrap();
                let cominuscule = sys.highest_root().coords()[i] == 1;
                assert_eq!(is_hermitian_symmetric(&sys, &p).unwrap(), cominuscule, "{t} node {}", i + 1);
            }
        }
    }

    #[test]
    fn vanishing_examples() {
        let a2 = rs("A2");
        let borel = ParabolicSubset::borel(&a2);
        assert_eq!(vanishing_case(&a2, &borel, &w(&[1, 0])).unwrap(), VanishingCase::LineBundleDominant);
        let p1 = ParabolicSubset::parse(&a2, "1").unwrap();
        assert_eq!(vanishing_case(&a2, &p1, &w(&[2, 1])).unwrap(), VanishingCase::MinimalParabolic);
        assert!(vanishing_case(&a2, &p1, &w(&[-1, 0])).is_err());

        let b2 = rs("B2");
        let q1 = ParabolicSubset::parse(&b2, "1").unwrap();
        assert_eq!(vanishing_case(&b2, &q1, &w(&[0, -1])).unwrap(), VanishingCase::Unknown);

        let a3 = rs("A3");
        let p13 = ParabolicSubset::parse(&a3, "1,3").unwrap();
        assert_eq!(vanishing_case(&a3, &p13, &w(&[1, 0, 1])).unwrap(), VanishingCase::TwistedRegular);
        assert_eq!(vanishing_case(&a3, &p13, &w(&[1, 0, 0])).unwrap(), VanishingCase::HermitianSymmetric);
        assert_eq!(vanishing_case(&a3, &p13, &w(&[0, 0, 0])).unwrap(), VanishingCase::HermitianSymmetric);

        // μ + 2ρ_P = 0 is dominant, but O(-2) on P^1 has H^1
        let a1 = rs("A1");
        assert_eq!(vanishing_case(&a1, &ParabolicSubset::borel(&a1), &w(&[-2])).unwrap(), VanishingCase::Unknown);
        assert_eq!(vanishing_case(&a2, &borel, &w(&[-1, -1])).unwrap(), VanishingCase::Unknown);

        let b3 = rs("B3");
        let p12 = ParabolicSubset::parse(&b3, "1,2").unwrap();
        assert_eq!(vanishing_case(&b3, &p12, &w(&[0, 0, 1])).unwrap(), VanishingCase::Unknown);
    }

    #[test]
    fn borel_dominant_is_always_covered() {
        for t in ["A2", "B2", "G2"] {
            let sys = rs(t);
            let borel = ParabolicSubset::borel(&sys);
            for a in 0..3 {
                for b in 0..3 {
                    let case = vanishing_case(&sys, &borel, &w(&[a, b])).unwrap();
                    assert_eq!(case, VanishingCase::LineBundleDominant);
                }
            }
        }
    }
}
