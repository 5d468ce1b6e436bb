//! Characters of irreducible modules and Euler characteristics of line
//! bundles on `G/B`.
//!
//! The Freudenthal recursion here is an independent check on the q = 1
//! specialisation of the Lusztig polynomials; it shares nothing with the
//! partition-function route except the root datum.

use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;
use num_traits::{CheckedMul, One};
use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::to_dominant_chamber;

/// Weight multiplicities of a finite-dimensional module.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightCharacter {
    mults: BTreeMap<Weight, i64>,
}

#[derive(Serialize, Deserialize)]
struct WeightMult {
    weight: Weight,
    mult: i64,
}

impl WeightCharacter {
    pub fn mult(&self, w: &Weight) -> i64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Sum of all multiplicities, i.e. the dimension.
    pub fn dimension(&self) -> i64 {
        self.mults.values().sum()
    }

    /// Dominant weights only.
    pub fn dominant(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.iter().filter(|(w, _)| w.is_dominant())
    }

    /// `[{"weight":[...],"mult":n}, ...]`, weights in increasing order.
    pub fn to_json(&self) -> String {
        let list: Vec<WeightMult> = self
            .mults
            .iter()
            .map(|(w, &m)| WeightMult { weight: w.clone(), mult: m })
            .collect();
        serde_json::to_string(&list).expect("plain data serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let list: Vec<WeightMult> =
            serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad character JSON: {e}")))?;
        Ok(Self { mults: list.into_iter().map(|e| (e.weight, e.mult)).collect() })
    }
}

fn require_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_rank(lambda.rank())?;
    if lambda.is_dominant() {
        Ok(())
    } else {
        Err(Error::invalid(format!("{lambda} is not dominant")))
    }
}

/// Full weight-multiplicity table of `V_λ` by Freudenthal's recursion
///
/// ```text
/// ((λ+ρ,λ+ρ) - (μ+ρ,μ+ρ)) m(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) m(μ+kα)
/// ```
///
/// evaluated on dominant weights only; other weights take the multiplicity
/// of their dominant representative.
pub fn freudenthal(rs: &RootSystem, lambda: &Weight) -> Result<WeightCharacter> {
    require_dominant(rs, lambda)?;
    let n = rs.rank();
    let simple: Vec<Weight> = rs.positive_root_weights()[..n].to_vec();
    let roots: Vec<(&Weight, &[i64])> = rs
        .positive_root_weights()
        .iter()
        .zip(rs.positive_roots())
        .map(|(w, r)| (w, r.coords()))
        .collect();
    let lambda_2rho: Vec<i64> = lambda.coords().iter().map(|x| x + 2).collect();

    let mut mults: HashMap<Weight, i64> = HashMap::new();
    mults.insert(lambda.clone(), 1);
    // current layer: weights λ - γ with height(γ) = depth, together with γ
    let mut layer: Vec<(Weight, Vec<i64>)> = vec![(lambda.clone(), vec![0; n])];
    while !layer.is_empty() {
        let mut next: BTreeMap<Weight, Vec<i64>> = BTreeMap::new();
        for (w, gamma) in &layer {
            for (i, a) in simple.iter().enumerate() {
                let cand = w.checked_sub(a)?;
                if !mults.contains_key(&cand) && !next.contains_key(&cand) {
                    let mut g = gamma.clone();
                    g[i] += 1;
                    next.insert(cand, g);
                }
            }
        }
        layer = Vec::new();
        for (mu, gamma) in next {
            let m = if mu.is_dominant() {
                // (λ+ρ,λ+ρ) - (μ+ρ,μ+ρ) = (λ-μ, λ+μ+2ρ)
                let sum_coords: Vec<i64> = lambda_2rho.iter().zip(mu.coords()).map(|(a, b)| a + b).collect();
                let denom = rs.form(&sum_coords, &gamma)?;
                let mut acc = 0i64;
                for (aw, ab) in &roots {
                    let alpha_sq = rs.form(aw.coords(), ab)?;
                    let base = rs.form(mu.coords(), ab)?;
                    let mut shifted = mu.clone();
                    let mut k = 1i64;
                    loop {
                        shifted = shifted.checked_add(aw)?;
                        let Some(&m) = mults.get(&shifted) else { break };
                        let pair = error::add(base, error::mul(k, alpha_sq, "Freudenthal")?, "Freudenthal")?;
                        acc = error::add(acc, error::mul(pair, m, "Freudenthal")?, "Freudenthal")?;
                        k += 1;
                    }
                }
                let num = error::mul(2, acc, "Freudenthal")?;
                if denom <= 0 || num % denom != 0 {
                    return Err(Error::IdentityViolation(format!(
                        "Freudenthal recursion for {lambda} at {mu} gave {num}/{denom}"
                    )));
                }
                num / denom
            } else {
                let rep = to_dominant_chamber(rs, &mu)?.dominant_rep;
                mults.get(&rep).copied().unwrap_or(0)
            };
            if m > 0 {
                mults.insert(mu.clone(), m);
                layer.push((mu, gamma));
            }
        }
    }
    Ok(WeightCharacter { mults: mults.into_iter().collect() })
}

/// `dim V_λ = Π_{α>0} (λ+ρ, α) / (ρ, α)`, exact.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<i64> {
    require_dominant(rs, lambda)?;
    let shifted = lambda.checked_add(&rs.rho())?;
    let rho = rs.rho();
    let mut acc: Ratio<i128> = Ratio::one();
    for r in rs.positive_roots() {
        let num = rs.form(shifted.coords(), r.coords())?;
        let den = rs.form(rho.coords(), r.coords())?;
        acc = acc
            .checked_mul(&Ratio::new(num as i128, den as i128))
            .ok_or(Error::Overflow("Weyl dimension formula"))?;
    }
    if !acc.is_integer() {
        return Err(Error::IdentityViolation(format!("Weyl dimension of {lambda} is not integral: {acc}")));
    }
    i64::try_from(acc.to_integer()).map_err(|_| Error::Overflow("Weyl dimension formula"))
}

/// Highest weight `-w0(λ)` of the dual module `V_λ^*`.
pub fn dual_highest_weight(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    require_dominant(rs, lambda)?;
    // -λ is antidominant, so its dominant representative is w0(-λ)
    Ok(to_dominant_chamber(rs, &lambda.checked_neg()?)?.dominant_rep)
}

/// `±ch V_λ^*`, or zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedWeight {
    Zero,
    Term { sign: i64, highest_weight: Weight },
}

/// `χ(G/B, L_{-τ})` by Borel–Weil–Bott.
///
/// If `τ + ρ` lies on a wall the Euler characteristic is zero. Otherwise
/// with `w(τ+ρ)` dominant the result is `sgn(w) · ch V_{w(τ+ρ)-ρ}^*`; for
/// dominant `τ` this is `ch V_τ^*`, the space of global sections.
pub fn bwb_euler(rs: &RootSystem, tau: &Weight) -> Result<SignedWeight> {
    let shifted = tau.checked_add(&rs.rho())?;
    let chamber = to_dominant_chamber(rs, &shifted)?;
    if !chamber.regular {
        return Ok(SignedWeight::Zero);
    }
    Ok(SignedWeight::Term {
        sign: chamber.element.sign(),
        highest_weight: chamber.dominant_rep.checked_sub(&rs.rho())?,
    })
}
