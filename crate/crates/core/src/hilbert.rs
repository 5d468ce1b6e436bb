//! Graded Euler characters `χ_gr(G/P, E_μ^*) = Σ_m χ(G/P, E_μ^* ⊗ Sym^m) q^m`
//! and the Hilbert series of nearly holomorphic sections.
//!
//! Two routes compute the same truncated series:
//!
//! * the Lusztig route, `Σ_λ m_λ^μ(P;q) ch V_λ^*` over dominant `λ`;
//! * the direct route, `Σ_τ ℘_{P,q}(τ-μ) χ(G/B, L_{-τ})` with each Euler
//!   characteristic evaluated by Borel–Weil–Bott.
//!
//! Their agreement is checked on every [`hilbert_series`] call. When the
//! vanishing condition holds the series is the Hilbert series of the degree
//! filtration; otherwise it is only the Euler character.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{bwb_euler, dual_highest_weight, weyl_dimension, SignedWeight};
use crate::error::{self, Error, Result};
use crate::lusztig::LusztigEngine;
use crate::parabolic::{is_p_dominant, vanishing_case, ParabolicSubset, VanishingCase};
use crate::partition::weights_up_to_degree;
use crate::poly::QPolynomial;
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::weyl::{to_dominant_chamber, WeylGroup, DEFAULT_WEYL_CAP};

/// `Σ_λ c_λ(q) ch V_λ^*` truncated above `q^max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    cartan_type: CartanType,
    max_degree: usize,
    terms: BTreeMap<Weight, QPolynomial>,
}

impl GradedCharacter {
    pub fn new(cartan_type: CartanType, max_degree: usize) -> Self {
        Self { cartan_type, max_degree, terms: BTreeMap::new() }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Nonzero coefficients keyed by dominant highest weight.
    pub fn terms(&self) -> &BTreeMap<Weight, QPolynomial> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Weight) -> QPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · q^degree · ch V_λ^*`; terms above the truncation are ignored.
    pub fn add_term(&mut self, lambda: Weight, c: i64, degree: usize) -> Result<()> {
        if degree > self.max_degree || c == 0 {
            return Ok(());
        }
        debug_assert!(lambda.is_dominant());
        let entry = self.terms.entry(lambda).or_default();
        entry.add_shifted(&QPolynomial::one(), degree, c)?;
        if entry.is_zero() {
            self.terms.retain(|_, p| !p.is_zero());
        }
        Ok(())
    }

    /// Sets the coefficient of `ch V_λ^*`, truncating it.
    pub fn insert(&mut self, lambda: Weight, poly: QPolynomial) {
        let p = poly.truncated(self.max_degree);
        if p.is_zero() {
            self.terms.remove(&lambda);
        } else {
            self.terms.insert(lambda, p);
        }
    }

    /// `(λ, coefficient of q^m)` for every term with a nonzero `q^m` part.
    pub fn degree_part(&self, m: usize) -> Vec<(&Weight, i64)> {
        self.terms
            .iter()
            .map(|(l, p)| (l, p.coeff(m)))
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(QPolynomial::has_nonnegative_coeffs)
    }

    /// First highest weight where the two characters differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Weight, QPolynomial, QPolynomial)> {
        let keys: BTreeSet<&Weight> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coefficient(k), other.coefficient(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

/// `dims[m] = Σ_λ [q^m] c_λ · dim V_λ^*`, for `m = 0..=max_degree`.
pub fn dimension_series(gc: &GradedCharacter) -> Result<Vec<i64>> {
    let rs = RootSystem::from_type(gc.cartan_type);
    let mut dims = vec![0i64; gc.max_degree + 1];
    for (lambda, poly) in &gc.terms {
        let dim = weyl_dimension(&rs, &dual_highest_weight(&rs, lambda)?)?;
        for (m, slot) in dims.iter_mut().enumerate() {
            let c = poly.coeff(m);
            if c != 0 {
                *slot = error::add(*slot, error::mul(c, dim, "dimension series")?, "dimension series")?;
            }
        }
    }
    Ok(dims)
}

/// How often [`HilbertEngine::hilbert_series`] compares the two routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathCheck {
    /// Compare every coefficient.
    Always,
    /// Compare the coefficients of every `stride`-th highest weight (in
    /// sorted order) present in either result.
    Sampled { stride: usize },
}

/// A graded Euler character together with its interpretation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertReport {
    pub levi: ParabolicSubset,
    pub mu: Weight,
    pub series: GradedCharacter,
    pub vanishing: VanishingCase,
    pub dims: Vec<i64>,
    /// The vanishing condition is known to hold, so `series` is the Hilbert
    /// series of nearly holomorphic sections rather than only an Euler
    /// character.
    pub covered: bool,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: Vec<i64>,
    poly: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct ReportJson {
    #[serde(rename = "type")]
    cartan_type: String,
    levi: Vec<usize>,
    mu: Vec<i64>,
    max_degree: usize,
    vanishing: VanishingCase,
    covered: bool,
    terms: Vec<TermJson>,
    dims: Vec<i64>,
}

fn poly_latex(p: &QPolynomial) -> String {
    let s = p.to_string();
    // q^12 -> q^{12}
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                out.push(d);
                chars.next();
            }
            out.push('}');
        }
    }
    out.replace(" q", "q")
}

impl HilbertReport {
    pub fn cartan_type(&self) -> CartanType {
        self.series.cartan_type
    }

    pub fn max_degree(&self) -> usize {
        self.series.max_degree
    }

    /// Canonical JSON (fixed key order, integers only).
    pub fn to_json(&self) -> String {
        let doc = ReportJson {
            cartan_type: self.cartan_type().to_string(),
            levi: self.levi.levi_bourbaki(),
            mu: self.mu.coords().to_vec(),
            max_degree: self.max_degree(),
            vanishing: self.vanishing,
            covered: self.covered,
            terms: self
                .series
                .terms
                .iter()
                .map(|(l, p)| TermJson { lambda: l.coords().to_vec(), poly: p.coeffs().to_vec() })
                .collect(),
            dims: self.dims.clone(),
        };
        serde_json::to_string(&doc).expect("plain data serialises")
    }

    /// Inverse of [`to_json`](Self::to_json).
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: ReportJson =
            serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad report JSON: {e}")))?;
        let cartan_type: CartanType = doc.cartan_type.parse()?;
        let rs = RootSystem::from_type(cartan_type);
        let levi = ParabolicSubset::from_bourbaki(&rs, &doc.levi)?;
        let mut series = GradedCharacter::new(cartan_type, doc.max_degree);
        for t in doc.terms {
            series.insert(Weight::new(t.lambda), QPolynomial::from_coeffs(t.poly));
        }
        Ok(Self {
            levi,
            mu: Weight::new(doc.mu),
            series,
            vanishing: doc.vanishing,
            dims: doc.dims,
            covered: doc.covered,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "type {}  levi {}  mu {}  max_degree {}",
            self.cartan_type(),
            self.levi,
            self.mu,
            self.max_degree()
        );
        let meaning = if self.covered {
            "Hilbert series of nearly holomorphic sections"
        } else {
            "graded Euler character; Hilbert series interpretation conjectural"
        };
        let _ = writeln!(s, "vanishing {}  ({meaning})", self.vanishing);
        let width = self
            .series
            .terms
            .keys()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(6)
            .max(6);
        let _ = writeln!(s, "{:<width$}  coefficient of ch V_lambda^*", "lambda");
        for (l, p) in &self.series.terms {
            let _ = writeln!(s, "{:<width$}  {p}", l.to_string());
        }
        let dims: Vec<String> = self.dims.iter().map(i64::to_string).collect();
        let _ = writeln!(s, "dims {}", dims.join(" "));
        s
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "\\begin{{tabular}}{{ll}}");
        let _ = writeln!(s, "\\hline");
        let _ = writeln!(s, "$\\lambda$ & $m_\\lambda^\\mu(P;q)$ \\\\");
        let _ = writeln!(s, "\\hline");
        for (l, p) in &self.series.terms {
            let _ = writeln!(s, "${l}$ & ${}$ \\\\", poly_latex(p));
        }
        let _ = writeln!(s, "\\hline");
        let _ = writeln!(s, "\\end{{tabular}}");
        s
    }
}

/// Computes graded Euler characters for one root system and parabolic,
/// sharing the Weyl group, the partition-function memo and the Lusztig
/// polynomials already evaluated.
#[derive(Debug)]
pub struct HilbertEngine {
    lusztig: LusztigEngine,
    cache: RwLock<HashMap<(Weight, Weight), QPolynomial>>,
}

impl HilbertEngine {
    pub fn new(rs: &RootSystem, levi: &ParabolicSubset, weyl_cap: u64) -> Result<Self> {
        Ok(Self { lusztig: LusztigEngine::new(rs, levi, weyl_cap)?, cache: RwLock::new(HashMap::new()) })
    }

    pub fn with_weyl(rs: &RootSystem, levi: &ParabolicSubset, weyl: Arc<WeylGroup>) -> Result<Self> {
        Ok(Self { lusztig: LusztigEngine::with_weyl(rs, levi, weyl)?, cache: RwLock::new(HashMap::new()) })
    }

    pub fn lusztig(&self) -> &LusztigEngine {
        &self.lusztig
    }

    fn rs(&self) -> &RootSystem {
        self.lusztig.root_system()
    }

    fn check_mu(&self, mu: &Weight) -> Result<()> {
        if is_p_dominant(self.rs(), self.lusztig.levi(), mu)? {
            Ok(())
        } else {
            Err(Error::invalid(format!("μ = {mu} is not P-dominant for Π = {}", self.lusztig.levi())))
        }
    }

    /// `m_λ^μ(P;q)`, memoised.
    pub fn lusztig_poly(&self, lambda: &Weight, mu: &Weight) -> Result<QPolynomial> {
        let key = (lambda.clone(), mu.clone());
        if let Some(p) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(p.clone());
        }
        let p = self.lusztig.poly(lambda, mu)?;
        self.cache.write().expect("cache lock").insert(key, p.clone());
        Ok(p)
    }

    /// For each degree, the weights `τ = μ + σ` with `σ` a sum of that many
    /// roots of `Ξ_+`, with multiplicities.
    fn tau_layers(&self, mu: &Weight, max_degree: usize) -> Result<Vec<Vec<(Weight, i64)>>> {
        let layers = weights_up_to_degree(self.rs(), self.lusztig.partition().roots(), max_degree)?;
        layers
            .into_iter()
            .map(|layer| {
                layer
                    .into_iter()
                    .map(|(sigma, c)| Ok((mu.checked_add(&sigma)?, c)))
                    .collect()
            })
            .collect()
    }

    /// `Σ_τ ℘_{P,q}(τ-μ) χ(G/B, L_{-τ})` with Borel–Weil–Bott.
    pub fn graded_euler_direct(&self, mu: &Weight, max_degree: usize) -> Result<GradedCharacter> {
        self.check_mu(mu)?;
        let mut gc = GradedCharacter::new(self.rs().cartan_type(), max_degree);
        for (m, layer) in self.tau_layers(mu, max_degree)?.into_iter().enumerate() {
            for (tau, c) in layer {
                if let SignedWeight::Term { sign, highest_weight } = bwb_euler(self.rs(), &tau)? {
                    gc.add_term(highest_weight, error::mul(sign, c, "Euler character")?, m)?;
                }
            }
        }
        Ok(gc)
    }

    /// `Σ_λ m_λ^μ(P;q) ch V_λ^*` over the dominant `λ` reachable in degree
    /// `≤ max_degree`.
    pub fn graded_euler_lusztig(&self, mu: &Weight, max_degree: usize) -> Result<GradedCharacter> {
        self.check_mu(mu)?;
        let rho = self.rs().rho();
        let mut candidates = BTreeSet::new();
        for layer in self.tau_layers(mu, max_degree)? {
            for (tau, _) in layer {
                let chamber = to_dominant_chamber(self.rs(), &tau.checked_add(&rho)?)?;
                if chamber.regular {
                    candidates.insert(chamber.dominant_rep.checked_sub(&rho)?);
                }
            }
        }
        let polys: Vec<(Weight, QPolynomial)> = candidates
            .into_par_iter()
            .map(|lambda| {
                let p = self.lusztig_poly(&lambda, mu)?;
                Ok((lambda, p))
            })
            .collect::<Result<_>>()?;
        let mut gc = GradedCharacter::new(self.rs().cartan_type(), max_degree);
        for (lambda, p) in polys {
            gc.insert(lambda, p);
        }
        Ok(gc)
    }

    /// The graded Euler character of `E_μ^*` with its vanishing-case
    /// classification; fails with [`Error::IdentityViolation`] if the two
    /// routes disagree on the checked coefficients.
    pub fn hilbert_series(&self, mu: &Weight, max_degree: usize, check: PathCheck) -> Result<HilbertReport> {
        let series = self.graded_euler_lusztig(mu, max_degree)?;
        let direct = self.graded_euler_direct(mu, max_degree)?;
        let mismatch = match check {
            PathCheck::Always => series.first_difference(&direct),
            PathCheck::Sampled { stride } => {
                let keys: BTreeSet<&Weight> = series.terms.keys().chain(direct.terms.keys()).collect();
                keys.into_iter().step_by(stride.max(1)).find_map(|k| {
                    let (a, b) = (series.coefficient(k), direct.coefficient(k));
                    (a != b).then(|| (k.clone(), a, b))
                })
            }
        };
        if let Some((lambda, a, b)) = mismatch {
            return Err(Error::IdentityViolation(format!(
                "graded Euler character routes disagree at λ = {lambda}: Lusztig {a}, Borel–Weil–Bott {b}"
            )));
        }
        let vanishing = vanishing_case(self.rs(), self.lusztig.levi(), mu)?;
        let dims = dimension_series(&series)?;
        Ok(HilbertReport {
            levi: self.lusztig.levi().clone(),
            mu: mu.clone(),
            series,
            vanishing,
            dims,
            covered: vanishing.is_covered(),
        })
    }
}

/// Lusztig route, one shot.
pub fn graded_euler_lusztig(
    rs: &RootSystem,
    levi: &ParabolicSubset,
    mu: &Weight,
    max_degree: usize,
) -> Result<GradedCharacter> {
    HilbertEngine::new(rs, levi, DEFAULT_WEYL_CAP)?.graded_euler_lusztig(mu, max_degree)
}

/// Borel–Weil–Bott route, one shot.
pub fn graded_euler_direct(
    rs: &RootSystem,
    levi: &ParabolicSubset,
    mu: &Weight,
    max_degree: usize,
) -> Result<GradedCharacter> {
    HilbertEngine::new(rs, levi, DEFAULT_WEYL_CAP)?.graded_euler_direct(mu, max_degree)
}

/// Full report with both routes compared on every coefficient.
pub fn hilbert_series(rs: &RootSystem, levi: &ParabolicSubset, mu: &Weight, max_degree: usize) -> Result<HilbertReport> {
    HilbertEngine::new(rs, levi, DEFAULT_WEYL_CAP)?.hilbert_series(mu, max_degree, PathCheck::Always)
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

    fn p(c: &[i64]) -> QPolynomial {
        QPolynomial::from_coeffs(c.to_vec())
    }

    #[test]
    fn a1_trivial_bundle() {
        let a1 = rs("A1");
        let b = ParabolicSubset::borel(&a1);
        let gc = graded_euler_lusztig(&a1, &b, &w(&[0]), 2).unwrap();
        let expect: BTreeMap<Weight, QPolynomial> =
            [(w(&[0]), p(&[1])), (w(&[2]), p(&[0, 1])), (w(&[4]), p(&[0, 0, 1]))].into();
        assert_eq!(gc.terms(), &expect);
        assert_eq!(graded_euler_direct(&a1, &b, &w(&[0]), 2).unwrap(), gc);
    }

    #[test]
    fn a1_shifted_bundle() {
        let a1 = rs("A1");
        let b = ParabolicSubset::borel(&a1);
        let gc = graded_euler_direct(&a1, &b, &w(&[1]), 1).unwrap();
        let expect: BTreeMap<Weight, QPolynomial> = [(w(&[1]), p(&[1])), (w(&[3]), p(&[0, 1]))].into();
        assert_eq!(gc.terms(), &expect);
    }

    #[test]
    fn a2_degree_one() {
        let a2 = rs("A2");
        let b = ParabolicSubset::borel(&a2);
        let gc = graded_euler_lusztig(&a2, &b, &w(&[0, 0]), 1).unwrap();
        let expect: BTreeMap<Weight, QPolynomial> = [(w(&[0, 0]), p(&[1])), (w(&[1, 1]), p(&[0, 1]))].into();
        assert_eq!(gc.terms(), &expect);
    }

    #[test]
    fn a2_parabolic_by_hand() {
        // τ ∈ {(0,1)} ∪ (0,1) + {α2, α1+α2} = {(0,1), (-1,3), (1,2)}
        // χ(L_{-(0,1)}) = V_(0,1)^*; (-1,3)+ρ = (0,4) is singular; (1,2) is dominant
        let a2 = rs("A2");
        let p1 = ParabolicSubset::parse(&a2, "1").unwrap();
        let direct = graded_euler_direct(&a2, &p1, &w(&[0, 1]), 1).unwrap();
        let expect: BTreeMap<Weight, QPolynomial> = [(w(&[0, 1]), p(&[1])), (w(&[1, 2]), p(&[0, 1]))].into();
        assert_eq!(direct.terms(), &expect);
        assert_eq!(graded_euler_lusztig(&a2, &p1, &w(&[0, 1]), 1).unwrap(), direct);
    }

    #[test]
    fn degree_zero_is_borel_weil() {
        for (t, levi, mu) in [("A2", "", vec![1, 2]), ("B3", "2", vec![0, 1, 1]), ("G2", "1", vec![2, 0])] {
            let sys = rs(t);
            let pset = ParabolicSubset::parse(&sys, levi).unwrap();
            let mu = w(&mu);
            let gc = graded_euler_lusztig(&sys, &pset, &mu, 0).unwrap();
            let expect: BTreeMap<Weight, QPolynomial> = [(mu.clone(), QPolynomial::one())].into();
            assert_eq!(gc.terms(), &expect);
            assert_eq!(dimension_series(&gc).unwrap(), vec![weyl_dimension(&sys, &mu).unwrap()]);
        }
    }

    #[test]
    fn a1_hilbert_dims() {
        let a1 = rs("A1");
        let r = hilbert_series(&a1, &ParabolicSubset::borel(&a1), &w(&[0]), 5).unwrap();
        assert_eq!(r.dims, vec![1, 3, 5, 7, 9, 11]);
        assert!(r.covered);
        assert_eq!(r.vanishing, VanishingCase::LineBundleDominant);
    }

    #[test]
    fn a2_hilbert_nonnegative() {
        let a2 = rs("A2");
        let r = hilbert_series(&a2, &ParabolicSubset::borel(&a2), &w(&[0, 0]), 2).unwrap();
        assert!(r.covered);
        assert_eq!(r.series.coefficient(&w(&[0, 0])), QPolynomial::one());
        assert!(r.series.has_nonnegative_coeffs());
    }

    #[test]
    fn uncovered_case_still_computed() {
        let b2 = rs("B2");
        let p1 = ParabolicSubset::parse(&b2, "1").unwrap();
        let r = hilbert_series(&b2, &p1, &w(&[0, -1]), 2).unwrap();
        assert!(!r.covered);
        assert_eq!(r.vanishing, VanishingCase::Unknown);
        assert!(r.to_text().contains("conjectural"));
    }

    #[test]
    fn rejects_non_p_dominant_mu() {
        let a2 = rs("A2");
        let p1 = ParabolicSubset::parse(&a2, "1").unwrap();
        assert!(matches!(hilbert_series(&a2, &p1, &w(&[-1, 0]), 1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn empty_character_dims() {
        let gc = GradedCharacter::new("A2".parse().unwrap(), 3);
        assert_eq!(dimension_series(&gc).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let b3 = rs("B3");
        let p1 = ParabolicSubset::parse(&b3, "1").unwrap();
        let r = hilbert_series(&b3, &p1, &w(&[0, 1, 0]), 2).unwrap();
        let s = r.to_json();
        assert!(s.starts_with(r#"{"type":"B3","levi":[1],"mu":[0,1,0],"max_degree":2,"vanishing":"MinimalParabolic","covered":true,"terms":["#));
        let back = HilbertReport::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn latex_output() {
        let a1 = rs("A1");
        let r = hilbert_series(&a1, &ParabolicSubset::borel(&a1), &w(&[0]), 2).unwrap();
        let tex = r.to_latex();
        assert!(tex.contains("$(4)$ & $q^{2}$ \\\\"));
        assert!(tex.starts_with("\\begin{tabular}{ll}"));
    }

    #[test]
    fn sampled_check_runs() {
        let b2 = rs("B2");
        let eng = HilbertEngine::new(&b2, &ParabolicSubset::borel(&b2), DEFAULT_WEYL_CAP).unwrap();
        let a = eng.hilbert_series(&w(&[1, 1]), 3, PathCheck::Sampled { stride: 3 }).unwrap();
        let b = eng.hilbert_series(&w(&[1, 1]), 3, PathCheck::Always).unwrap();
        assert_eq!(a, b);
    }
}
