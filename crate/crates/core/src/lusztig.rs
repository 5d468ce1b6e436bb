//! Lusztig's q-analog of Kostant's multiplicity formula, in its parabolic form
//!
//! ```text
//! m_λ^μ(P; q) = Σ_{w ∈ W} sgn(w) ℘_{P,q}(w(λ+ρ) - μ - ρ)
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::parabolic::ParabolicSubset;
use crate::partition::PartitionFunction;
use crate::poly::QPolynomial;
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylGroup, DEFAULT_WEYL_CAP};

/// Evaluates `m_λ^μ(P;q)` for a fixed root system and parabolic, reusing the
/// enumerated Weyl group and the partition-function memo across calls.
#[derive(Debug)]
pub struct LusztigEngine {
    rs: RootSystem,
    levi: ParabolicSubset,
    weyl: Arc<WeylGroup>,
    partition: PartitionFunction,
}

impl LusztigEngine {
    pub fn new(rs: &RootSystem, levi: &ParabolicSubset, weyl_cap: u64) -> Result<Self> {
        Self::with_weyl(rs, levi, Arc::new(WeylGroup::new(rs, weyl_cap)?))
    }

    pub fn with_weyl(rs: &RootSystem, levi: &ParabolicSubset, weyl: Arc<WeylGroup>) -> Result<Self> {
        Ok(Self {
            rs: rs.clone(),
            levi: levi.clone(),
            partition: PartitionFunction::for_parabolic(rs, levi)?,
            weyl,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn levi(&self) -> &ParabolicSubset {
        &self.levi
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn partition(&self) -> &PartitionFunction {
        &self.partition
    }

    /// `m_λ^μ(P;q)` for dominant `λ`.
    pub fn poly(&self, lambda: &Weight, mu: &Weight) -> Result<QPolynomial> {
        self.rs.check_rank(lambda.rank())?;
        self.rs.check_rank(mu.rank())?;
        if !lambda.is_dominant() {
            return Err(Error::invalid(format!("λ = {lambda} is not dominant")));
        }
        let rho = self.rs.rho();
        let shifted = lambda.checked_add(&rho)?;
        let target = mu.checked_add(&rho)?;
        let mut total = QPolynomial::zero();
        for w in self.weyl.elements() {
            let arg = w.apply(&shifted)?.checked_sub(&target)?;
            // outside the positive root cone the partition function vanishes
            let Some(coords) = self.rs.cone_coords(arg.coords())? else {
                continue;
            };
            let value = self.partition.value_root_coords(&coords)?;
            total.add_shifted(&value, 0, w.sign())?;
        }
        Ok(total)
    }
}

/// One-shot `m_λ^μ(P;q)` with the default Weyl group cap.
pub fn lusztig_poly(rs: &RootSystem, levi: &ParabolicSubset, lambda: &Weight, mu: &Weight) -> Result<QPolynomial> {
    LusztigEngine::new(rs, levi, DEFAULT_WEYL_CAP)?.poly(lambda, mu)
}
