//! Weyl group enumeration and the action on weights.

use std::collections::HashMap;

use crate::error::{self, Error, Result};
use crate::rootsys::{CartanType, Matrix, RootSystem, Series, Weight};

/// Default bound on `|W|` for full enumeration. Covers E6 (51 840) but not E7/E8.
pub const DEFAULT_WEYL_CAP: u64 = 200_000;

/// An element of `W`, stored with one reduced word and its matrix on
/// fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    action: Matrix,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            word: Vec::new(),
            action: (0..rank)
                .map(|k| (0..rank).map(|l| i64::from(k == l)).collect())
                .collect(),
        }
    }

    /// Reduced word, leftmost factor first, 0-based indices.
    pub fn reduced_word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn action(&self) -> &[Vec<i64>] {
        &self.action
    }

    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        apply_matrix(&self.action, w.coords()).map(Weight::new)
    }

    /// `s_i · self`.
    fn left_multiply(&self, rs: &RootSystem, i: usize) -> Self {
        let c = rs.cartan();
        let n = rs.rank();
        let action = (0..n)
            .map(|k| (0..n).map(|l| self.action[k][l] - c[k][i] * self.action[i][l]).collect())
            .collect();
        let mut word = Vec::with_capacity(self.word.len() + 1);
        word.push(i);
        word.extend_from_slice(&self.word);
        Self { word, action }
    }
}

pub(crate) fn apply_matrix(m: &[Vec<i64>], v: &[i64]) -> Result<Vec<i64>> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).try_fold(0i64, |acc, (&a, &x)| {
                error::add(acc, error::mul(a, x, "Weyl action")?, "Weyl action")
            })
        })
        .collect()
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, k| a.saturating_mul(k))
}

/// `|W|` from the standard order formulas (saturating for absurd ranks).
pub fn weyl_order(t: CartanType) -> u128 {
    let n = t.rank;
    match t.series {
        Series::A => factorial(n + 1),
        Series::B | Series::C => (1u128 << n.min(120)).saturating_mul(factorial(n)),
        Series::D => (1u128 << (n - 1).min(120)).saturating_mul(factorial(n)),
        Series::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Series::F => 1152,
        Series::G => 12,
    }
}

/// Every element of `W` exactly once, identity first, in order of length.
///
/// Fails with [`Error::LimitExceeded`] before doing any work when `|W| > cap`.
pub fn enumerate_weyl(rs: &RootSystem, cap: u64) -> Result<Vec<WeylElement>> {
    let order = weyl_order(rs.cartan_type());
    if order > u128::from(cap) {
        return Err(Error::LimitExceeded(format!(
            "|W({})| = {order} exceeds the Weyl group cap {cap}",
            rs.cartan_type()
        )));
    }
    let n = rs.rank();
    let rho_image = |e: &WeylElement| -> Vec<i64> { e.action.iter().map(|r| r.iter().sum()).collect() };
    let id = WeylElement::identity(n);
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::with_capacity(order as usize);
    seen.insert(rho_image(&id), ());
    let mut elements = vec![id];
    let mut start = 0;
    // breadth first by length, so the first word reaching an element is reduced
    while start < elements.len() {
        let end = elements.len();
        for k in start..end {
            for i in 0..n {
                let next = elements[k].left_multiply(rs, i);
                if seen.insert(rho_image(&next), ()).is_none() {
                    elements.push(next);
                }
            }
        }
        start = end;
    }
    debug_assert_eq!(elements.len() as u128, order);
    debug_assert!(elements.iter().all(|e| determinant(&e.action) == e.sign()));
    Ok(elements)
}

/// Integer determinant via fraction-free elimination.
pub(crate) fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// The full Weyl group, enumerated once and shared.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem, cap: u64) -> Result<Self> {
        Ok(Self { elements: enumerate_weyl(rs, cap)? })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The longest element `w0`.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("W is never empty")
    }
}

/// `w(λ)`.
pub fn act(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    rs.check_rank(lambda.rank())?;
    rs.check_rank(w.action.len())?;
    w.apply(lambda)
}

/// `(-1)^{ℓ(w)}`.
pub fn sign(w: &WeylElement) -> i64 {
    w.sign()
}

/// Dominant representative of the `W`-orbit of a weight, with an element
/// carrying the weight there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberResult {
    pub dominant_rep: Weight,
    pub element: WeylElement,
    /// No coordinate of `dominant_rep` is zero.
    pub regular: bool,
}

/// Reflects at the first negative coordinate until the weight is dominant.
///
/// Each step raises the height of the weight by a positive amount, so the
/// loop terminates and the accumulated word is reduced.
pub fn to_dominant_chamber(rs: &RootSystem, lambda: &Weight) -> Result<ChamberResult> {
    rs.check_rank(lambda.rank())?;
    let n = rs.rank();
    let c = rs.cartan();
    let mut current = lambda.coords().to_vec();
    let mut action: Matrix = WeylElement::identity(n).action;
    let mut applied = Vec::new();
    while let Some(i) = current.iter().position(|&x| x < 0) {
        let p = current[i];
        for k in 0..n {
            current[k] = current[k]
                .checked_sub(error::mul(p, c[k][i], "chamber search")?)
                .ok_or(Error::Overflow("chamber search"))?;
        }
        for k in 0..n {
            if k != i {
                for l in 0..n {
                    action[k][l] -= c[k][i] * action[i][l];
                }
            }
        }
        for l in 0..n {
            action[i][l] = -action[i][l];
        }
        applied.push(i);
    }
    applied.reverse();
    let regular = current.iter().all(|&x| x > 0);
    Ok(ChamberResult {
        dominant_rep: Weight::new(current),
        element: WeylElement { word: applied, action },
        regular,
    })
}
