//! Self-verification suite: each check compares a computation against an
//! independent route (Freudenthal, brute-force multiset enumeration,
//! Borel–Weil–Bott, classical tables).

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::characters::{bwb_euler, freudenthal, SignedWeight};
use crate::error::Result;
use crate::hilbert::{HilbertEngine, PathCheck};
use crate::lusztig::LusztigEngine;
use crate::parabolic::{is_hermitian_symmetric, nilradical_roots, ParabolicSubset};
use crate::partition::PartitionFunction;
use crate::poly::QPolynomial;
use crate::rootsys::{CartanType, RootSystem, RootVector, Series, Weight};
use crate::weyl::{enumerate_weyl, WeylGroup, DEFAULT_WEYL_CAP};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual comparisons made.
    pub checked: usize,
    /// First failure, or a short summary.
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({} checks, {:.2}s) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

/// Parameters of [`run_all`].
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub types: Vec<CartanType>,
    /// Height bound for the q = 1 comparison and the partition oracle.
    pub height: i64,
    pub max_degree: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { types: default_types(), height: 6, max_degree: 3 }
    }
}

/// A1, A2, A3, B2, B3, C3, G2, D4.
pub fn default_types() -> Vec<CartanType> {
    ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"]
        .iter()
        .map(|s| s.parse().expect("valid type"))
        .collect()
}

/// `Σ_i q^{e_i}` over the exponents of the Lie algebra, for the types with a
/// pinned table.
pub fn exponents(t: CartanType) -> Option<&'static [usize]> {
    Some(match (t.series, t.rank) {
        (Series::A, 1) => &[1],
        (Series::A, 2) => &[1, 2],
        (Series::A, 3) => &[1, 2, 3],
        (Series::B, 2) => &[1, 3],
        (Series::B, 3) => &[1, 3, 5],
        (Series::G, 2) => &[1, 5],
        _ => return None,
    })
}

struct Tally {
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checked: 0, failure: None }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(msg());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
        self
    }

    fn finish(self, id: u32, name: &'static str, start: Instant) -> CriterionReport {
        CriterionReport {
            id,
            name,
            passed: self.failure.is_none(),
            checked: self.checked,
            detail: self.failure.unwrap_or_default(),
            elapsed: start.elapsed(),
        }
    }
}

fn from_result(r: Result<Tally>) -> Tally {
    r.unwrap_or_else(|e| Tally { checked: 1, failure: Some(e.to_string()) })
}

/// All `v ∈ Z^n` with `0 ≤ v_i ≤ bounds[i]`.
fn boxes(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b.max(-1)).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Dominant weights whose height in the root basis is at most `height`.
pub fn dominant_weights_up_to_height(rs: &RootSystem, height: i64) -> Result<Vec<Weight>> {
    let n = rs.rank();
    let mut bounds = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        let h = rs.height(&Weight::new(e))?;
        bounds.push((num_rational::Ratio::from_integer(height) / h).floor().to_integer());
    }
    let mut out = Vec::new();
    for v in boxes(&bounds) {
        let w = Weight::new(v);
        if rs.height(&w)? <= num_rational::Ratio::from_integer(height) {
            out.push(w);
        }
    }
    Ok(out)
}

/// Dominant `μ` with `λ - μ` a nonnegative integer combination of simple roots.
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    // dominant weights have nonnegative root coordinates, which bounds λ - μ
    let bounds: Vec<i64> = rs.to_root_basis(lambda)?.iter().map(|x| x.floor().to_integer()).collect();
    let mut out = Vec::new();
    for gamma in boxes(&bounds) {
        let g = rs.root_to_weight(&RootVector::new(gamma))?;
        let mu = lambda.checked_sub(&g)?;
        if mu.is_dominant() {
            out.push(mu);
        }
    }
    Ok(out)
}

/// Criterion 1: `m_λ^μ(B;1)` equals the Freudenthal multiplicity.
pub fn kostant_consistency(types: &[CartanType], height: i64) -> CriterionReport {
    let start = Instant::now();
    let tally = types
        .par_iter()
        .map(|&t| {
            from_result((|| {
                let rs = RootSystem::from_type(t);
                let engine = LusztigEngine::new(&rs, &ParabolicSubset::borel(&rs), DEFAULT_WEYL_CAP)?;
                let lambdas = dominant_weights_up_to_height(&rs, height)?;
                let parts: Vec<Tally> = lambdas
                    .par_iter()
                    .map(|lambda| {
                        from_result((|| {
                            let mut tally = Tally::new();
                            let ch = freudenthal(&rs, lambda)?;
                            for mu in dominant_weights_below(&rs, lambda)? {
                                let at_one = engine.poly(lambda, &mu)?.eval(1)?;
                                let expect = ch.mult(&mu);
                                tally.check(at_one == expect, || {
                                    format!("{t} λ={lambda} μ={mu}: Lusztig(1) = {at_one}, Freudenthal = {expect}")
                                });
                            }
                            Ok(tally)
                        })())
                    })
                    .collect();
                Ok(parts.into_iter().fold(Tally::new(), Tally::merge))
            })())
        })
        .reduce(Tally::new, Tally::merge);
    tally.finish(1, "Kostant consistency at q = 1", start)
}

/// `|Π| ≤ 1` (proper) plus the Hermitian-symmetric maximal parabolics when
/// the rank is at most 3.
pub fn grid_parabolics(rs: &RootSystem) -> Result<Vec<ParabolicSubset>> {
    let mut set = BTreeSet::new();
    set.insert(ParabolicSubset::borel(rs));
    if rs.rank() > 1 {
        for i in 0..rs.rank() {
            set.insert(ParabolicSubset::new(rs, &[i])?);
        }
    }
    if rs.rank() <= 3 {
        for i in 0..rs.rank() {
            let p = ParabolicSubset::maximal(rs, i)?;
            if is_hermitian_symmetric(rs, &p)? {
                set.insert(p);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Dominant weights with every coordinate at most `bound`.
pub fn small_dominant_weights(rank: usize, bound: i64) -> Vec<Weight> {
    boxes(&vec![bound; rank]).into_iter().map(Weight::new).collect()
}

fn grid_cases(types: &[CartanType]) -> Result<Vec<(RootSystem, Arc<WeylGroup>, ParabolicSubset)>> {
    let mut out = Vec::new();
    for &t in types {
        let rs = RootSystem::from_type(t);
        let weyl = Arc::new(WeylGroup::new(&rs, DEFAULT_WEYL_CAP)?);
        for p in grid_parabolics(&rs)? {
            out.push((rs.clone(), weyl.clone(), p));
        }
    }
    Ok(out)
}

/// Criterion 2: the Lusztig and Borel–Weil–Bott routes agree exactly.
pub fn two_path_identity(types: &[CartanType], max_degree: usize) -> CriterionReport {
    let start = Instant::now();
    let tally = from_result((|| {
        let cases = grid_cases(types)?;
        Ok(cases
            .par_iter()
            .map(|(rs, weyl, levi)| {
                from_result((|| {
                    let engine = HilbertEngine::with_weyl(rs, levi, weyl.clone())?;
                    let mut tally = Tally::new();
                    for mu in small_dominant_weights(rs.rank(), 2) {
                        for m in 0..=max_degree {
                            let a = engine.graded_euler_lusztig(&mu, m)?;
                            let b = engine.graded_euler_direct(&mu, m)?;
                            tally.check(a == b, || {
                                let (l, x, y) = a.first_difference(&b).expect("differ");
                                format!(
                                    "{} Π={levi} μ={mu} M={m}: at λ={l} Lusztig {x}, direct {y}",
                                    rs.cartan_type()
                                )
                            });
                        }
                    }
                    Ok(tally)
                })())
            })
            .reduce(Tally::new, Tally::merge))
    })());
    tally.finish(2, "two-path identity for the graded Euler character", start)
}

/// Criterion 3: `m_θ^0(B;q) = Σ q^{e_i}`.
pub fn generalized_exponents() -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::new();
    for t in ["A1", "A2", "A3", "B2", "B3", "G2"] {
        let t: CartanType = t.parse().expect("valid type");
        let exps = exponents(t).expect("pinned");
        let rs = RootSystem::from_type(t);
        let r = (|| {
            let theta = rs.root_to_weight(rs.highest_root())?;
            crate::lusztig::lusztig_poly(&rs, &ParabolicSubset::borel(&rs), &theta, &Weight::zero(rs.rank()))
        })();
        let mut expect = QPolynomial::zero();
        for &e in exps {
            expect.add_shifted(&QPolynomial::one(), e, 1).expect("small");
        }
        match r {
            Ok(p) => tally.check(p == expect, || format!("{t}: got {p}, expected {expect}")),
            Err(e) => tally.check(false, || format!("{t}: {e}")),
        }
    }
    tally.finish(3, "generalized exponents from m_θ^0(B;q)", start)
}

/// Criterion 4: the A1 series with `μ = 0`, degree 5.
pub fn rank_one_hilbert() -> CriterionReport {
    let start = Instant::now();
    let tally = from_result((|| {
        let mut tally = Tally::new();
        let rs = RootSystem::new(Series::A, 1)?;
        let report = crate::hilbert::hilbert_series(&rs, &ParabolicSubset::borel(&rs), &Weight::zero(1), 5)?;
        for m in 0..=5usize {
            let part = report.series.degree_part(m);
            let expect = vec![(Weight::new(vec![2 * m as i64]), 1)];
            let got: Vec<(Weight, i64)> = part.into_iter().map(|(l, c)| (l.clone(), c)).collect();
            tally.check(got == expect, || format!("degree {m}: {got:?}"));
        }
        tally.check(report.dims == vec![1, 3, 5, 7, 9, 11], || format!("dims {:?}", report.dims));
        tally.check(report.series.terms().len() == 6, || "extra terms".into());
        Ok(tally)
    })());
    tally.finish(4, "rank-one Hilbert series", start)
}

/// Criterion 5: every coefficient is nonnegative whenever vanishing is known.
pub fn positivity_under_vanishing(types: &[CartanType], max_degree: usize) -> CriterionReport {
    let start = Instant::now();
    let tally = from_result((|| {
        let cases = grid_cases(types)?;
        Ok(cases
            .par_iter()
            .map(|(rs, weyl, levi)| {
                from_result((|| {
                    let engine = HilbertEngine::with_weyl(rs, levi, weyl.clone())?;
                    let mut tally = Tally::new();
                    for mu in small_dominant_weights(rs.rank(), 2) {
                        let report = engine.hilbert_series(&mu, max_degree, PathCheck::Always)?;
                        if report.covered {
                            tally.check(report.series.has_nonnegative_coeffs(), || {
                                format!(
                                    "{} Π={levi} μ={mu} ({}): negative coefficient",
                                    rs.cartan_type(),
                                    report.vanishing
                                )
                            });
                        }
                    }
                    Ok(tally)
                })())
            })
            .reduce(Tally::new, Tally::merge))
    })());
    tally.finish(5, "positivity when the vanishing condition holds", start)
}

/// Criterion 6: Borel–Weil–Bott on the projective line.
pub fn bwb_anchors() -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::new();
    let rs = RootSystem::new(Series::A, 1).expect("A1");
    let mut expect = Vec::new();
    for n in 0..=5 {
        expect.push((n, SignedWeight::Term { sign: 1, highest_weight: Weight::new(vec![n]) }));
    }
    expect.push((-1, SignedWeight::Zero));
    for n in 0..=3 {
        expect.push((-n - 2, SignedWeight::Term { sign: -1, highest_weight: Weight::new(vec![n]) }));
    }
    for (tau, want) in expect {
        match bwb_euler(&rs, &Weight::new(vec![tau])) {
            Ok(got) => tally.check(got == want, || format!("τ={tau}: got {got:?}, expected {want:?}")),
            Err(e) => tally.check(false, || e.to_string()),
        }
    }
    tally.finish(6, "Borel–Weil–Bott anchors on A1", start)
}

fn classical_root_count(t: CartanType) -> usize {
    let n = t.rank;
    match t.series {
        Series::A => n * (n + 1) / 2,
        Series::B | Series::C => n * n,
        Series::D => n * (n - 1),
        Series::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Series::F => 24,
        Series::G => 6,
    }
}

/// Criterion 7: group orders, root counts, the cominuscule criterion.
pub fn structural() -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::new();
    for (t, order) in [("A3", 24usize), ("B3", 48), ("G2", 12), ("D4", 192), ("F4", 1152)] {
        let rs = RootSystem::from_type(t.parse().expect("valid type"));
        match enumerate_weyl(&rs, DEFAULT_WEYL_CAP) {
            Ok(w) => tally.check(w.len() == order, || format!("|W({t})| = {}", w.len())),
            Err(e) => tally.check(false, || e.to_string()),
        }
    }
    let mut all = Vec::new();
    for n in 1..=8 {
        all.push(CartanType::new(Series::A, n));
        all.push(CartanType::new(Series::B, n));
        all.push(CartanType::new(Series::C, n));
        all.push(CartanType::new(Series::D, n));
        all.push(CartanType::new(Series::E, n));
    }
    all.push(CartanType::new(Series::F, 4));
    all.push(CartanType::new(Series::G, 2));
    for t in all.into_iter().flatten() {
        let rs = RootSystem::from_type(t);
        let got = rs.positive_roots().len();
        tally.check(got == classical_root_count(t), || format!("|Φ+({t})| = {got}"));
        if t.rank <= 4 {
            for i in 0..t.rank {
                let p = ParabolicSubset::maximal(&rs, i).expect("proper");
                let cominuscule = rs.highest_root().coords()[i] == 1;
                let herm = is_hermitian_symmetric(&rs, &p).expect("valid");
                tally.check(herm == cominuscule, || {
                    format!("{t} node {}: hermitian {herm}, cominuscule {cominuscule}", i + 1)
                });
            }
        }
    }
    tally.finish(7, "structural invariants", start)
}

/// Counts of all multisets of `1..=max_size` roots by their sum, by listing
/// every nondecreasing index sequence.
pub fn brute_force_multisets(roots: &[RootVector], max_size: usize) -> Vec<HashMap<Vec<i64>, i64>> {
    fn go(
        roots: &[RootVector],
        from: usize,
        size: usize,
        max: usize,
        sum: &mut Vec<i64>,
        out: &mut [HashMap<Vec<i64>, i64>],
    ) {
        *out[size].entry(sum.clone()).or_insert(0) += 1;
        if size == max {
            return;
        }
        for k in from..roots.len() {
            for (s, r) in sum.iter_mut().zip(roots[k].coords()) {
                *s += r;
            }
            go(roots, k, size + 1, max, sum, out);
            for (s, r) in sum.iter_mut().zip(roots[k].coords()) {
                *s -= r;
            }
        }
    }
    let rank = roots.first().map_or(0, RootVector::rank);
    let mut out = vec![HashMap::new(); max_size + 1];
    go(roots, 0, 0, max_size, &mut vec![0; rank], &mut out);
    out
}

/// Criterion 8: the memoised DP against brute-force multiset enumeration.
pub fn partition_oracle(height: i64, max_degree: usize) -> CriterionReport {
    let start = Instant::now();
    let mut tally = Tally::new();
    for t in ["A2", "B2", "G2"] {
        let rs = RootSystem::from_type(t.parse().expect("valid type"));
        let mut root_sets = vec![("Φ+".to_string(), rs.positive_roots().to_vec())];
        for i in 0..rs.rank() {
            let p = ParabolicSubset::new(&rs, &[i]).expect("proper");
            root_sets.push((format!("Π={p}"), nilradical_roots(&rs, &p).expect("valid")));
        }
        for (label, roots) in root_sets {
            let pf = PartitionFunction::new(&rs, &roots).expect("valid root set");
            let counts = brute_force_multisets(&roots, max_degree);
            let all_nu = boxes(&vec![height; rs.rank()]);
            for nu in all_nu.into_iter().filter(|v| v.iter().sum::<i64>() <= height) {
                let value = match pf.value_root_coords(&nu) {
                    Ok(v) => v,
                    Err(e) => {
                        tally.check(false, || e.to_string());
                        continue;
                    }
                };
                for (m, layer) in counts.iter().enumerate() {
                    let want = layer.get(&nu).copied().unwrap_or(0);
                    let got = value.coeff(m);
                    tally.check(got == want, || format!("{t} {label} ν={nu:?} q^{m}: DP {got}, brute force {want}"));
                }
            }
        }
    }
    tally.finish(8, "partition DP against multiset enumeration", start)
}

/// Runs every criterion in order.
pub fn run_all(config: &VerifyConfig) -> Vec<CriterionReport> {
    vec![
        kostant_consistency(&config.types, config.height),
        two_path_identity(&config.types, config.max_degree),
        generalized_exponents(),
        rank_one_hilbert(),
        positivity_under_vanishing(&config.types, config.max_degree),
        bwb_anchors(),
        structural(),
        partition_oracle(config.height, 5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerators() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let ws = dominant_weights_up_to_height(&a2, 2).unwrap();
        // heights: ω1, ω2 = 1; 2ω1, ω1+ω2, 2ω2 = 2; 3ω1 = 3
        assert_eq!(ws.len(), 6);
        let below = dominant_weights_below(&a2, &Weight::new(vec![2, 2])).unwrap();
        let set: BTreeSet<Weight> = below.into_iter().collect();
        let expect: BTreeSet<Weight> =
            [vec![2, 2], vec![3, 0], vec![0, 3], vec![1, 1], vec![0, 0]].into_iter().map(Weight::new).collect();
        assert_eq!(set, expect);
    }

    #[test]
    fn brute_force_small() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let counts = brute_force_multisets(a2.positive_roots(), 2);
        assert_eq!(counts[0].len(), 1);
        assert_eq!(counts[1].len(), 3);
        assert_eq!(counts[2].values().sum::<i64>(), 6);
        assert_eq!(counts[2][&vec![1, 1]], 1);
        assert_eq!(counts[2][&vec![2, 2]], 1);
    }

    #[test]
    fn grid_includes_hermitian_maximal() {
        let a3 = RootSystem::new(Series::A, 3).unwrap();
        let grid = grid_parabolics(&a3).unwrap();
        // ∅, three singletons, three maximal parabolics (all cominuscule in type A)
        assert_eq!(grid.len(), 7);
        let b3 = RootSystem::new(Series::B, 3).unwrap();
        assert_eq!(grid_parabolics(&b3).unwrap().len(), 5);
    }
}
