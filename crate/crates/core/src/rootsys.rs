//! Root data for the simple types A–G in Bourbaki numbering.
//!
//! Conventions used throughout the crate:
//!
//! * `cartan[i][j] = ⟨α_j, α_i^∨⟩` (0-based indices internally, 1-based on
//!   the command line).
//! * A [`Weight`] is stored by its fundamental-weight coordinates
//!   `⟨λ, α_i^∨⟩`; a [`RootVector`] by its simple-root coordinates.
//! * Positive roots are sorted by height, then by decreasing lexicographic
//!   order of their coordinates, so `positive_roots()[i]` is `α_{i+1}` for
//!   `i < rank`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};

/// Family of a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => Err(Error::invalid(format!("unknown series `{other}`"))),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated `(series, rank)` pair such as `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(Self { series, rank })
        } else {
            Err(Error::invalid(format!(
                "{series}{rank} is not a simple type (valid: A_n n>=1, B_n/C_n n>=2, D_n n>=4, E6, E7, E8, F4, G2)"
            )))
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::invalid("empty root system type"))?;
        let series: Series = letter.to_string().parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::invalid(format!("cannot read rank in `{s}`")))?;
        CartanType::new(series, rank)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

fn fmt_coords(c: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in c.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

fn parse_coords(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Err(Error::invalid("empty coordinate list"));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::invalid(format!("`{}` is not an integer", t.trim())))
        })
        .collect()
}

fn checked_zip(a: &[i64], b: &[i64], f: fn(i64, i64) -> Option<i64>) -> Result<Vec<i64>> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "rank mismatch: {} vs {} coordinates",
            a.len(),
            b.len()
        )));
    }
    a.iter()
        .zip(b)
        .map(|(&x, &y)| f(x, y).ok_or(Error::Overflow("weight arithmetic")))
        .collect()
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All coordinates `>= 0`.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// All coordinates `>= 1`.
    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 1)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        checked_zip(&self.0, &other.0, i64::checked_add).map(Weight)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        checked_zip(&self.0, &other.0, i64::checked_sub).map(Weight)
    }

    pub fn checked_neg(&self) -> Result<Weight> {
        self.0
            .iter()
            .map(|&x| x.checked_neg().ok_or(Error::Overflow("weight negation")))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(&self.0, f)
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses `"1,0,-2"` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        parse_coords(s).map(Weight)
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn checked_add(&self, other: &RootVector) -> Result<RootVector> {
        checked_zip(&self.0, &other.0, i64::checked_add).map(RootVector)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_coords(&self.0, f)
    }
}

impl FromStr for RootVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_coords(s).map(RootVector)
    }
}

pub(crate) type Matrix = Vec<Vec<i64>>;

/// Immutable root datum of a simple Lie algebra.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Matrix,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<RootVector>,
    root_weights: Vec<Weight>,
    root_index: HashMap<Vec<i64>, usize>,
    reflections: Vec<Matrix>,
    // cartan^{-1} = inv_num / inv_den
    inv_num: Matrix,
    inv_den: i64,
}

fn cartan_matrix(series: Series, n: usize) -> Matrix {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match series {
        Series::A | Series::B | Series::C | Series::F | Series::G => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Series::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Series::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match series {
        // row of the short root carries the -2
        Series::B => c[n - 1][n - 2] = -2,
        Series::C => c[n - 2][n - 1] = -2,
        Series::F => c[2][1] = -2,
        Series::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Half squared lengths of the simple roots, scaled so the shortest is 1.
fn symmetrizer(series: Series, n: usize) -> Vec<i64> {
    match series {
        Series::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
        Series::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
        Series::F => vec![2, 2, 1, 1],
        Series::G => vec![1, 3],
        _ => vec![1; n],
    }
}

fn invert(c: &Matrix) -> (Matrix, i64) {
    let n = c.len();
    let mut a: Vec<Vec<Ratio<i64>>> = c
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrices are invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Ratio::from_integer(0) {
                    for k in 0..2 * n {
                        let v = a[col][k];
                        a[r][k] -= f * v;
                    }
                }
            }
        }
    }
    let den = a
        .iter()
        .flat_map(|r| r[n..].iter())
        .fold(1i64, |acc, x| num_integer_lcm(acc, *x.denom()));
    let num = a
        .iter()
        .map(|r| r[n..].iter().map(|x| (x * den).to_integer()).collect())
        .collect();
    (num, den)
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl RootSystem {
    /// Builds the root datum of type `series`/`rank`.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        Ok(Self::from_type(CartanType::new(series, rank)?))
    }

    pub fn from_type(cartan_type: CartanType) -> Self {
        let n = cartan_type.rank;
        let cartan = cartan_matrix(cartan_type.series, n);
        let symmetrizer = symmetrizer(cartan_type.series, n);
        debug_assert!((0..n).all(|i| (0..n)
            .all(|j| symmetrizer[i] * cartan[i][j] == symmetrizer[j] * cartan[j][i])));

        // closure of the simple roots under simple reflections, keeping positive roots
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let p: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                let mut img = beta.clone();
                img[i] -= p;
                if img.iter().all(|&x| x >= 0) && img.iter().any(|&x| x > 0) && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let root_weights = roots
            .iter()
            .map(|b| Weight((0..n).map(|i| (0..n).map(|j| cartan[i][j] * b[j]).sum()).collect()))
            .collect();
        let root_index = roots.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
        let reflections = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        (0..n)
                            .map(|l| i64::from(k == l) - if l == i { cartan[k][i] } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let (inv_num, inv_den) = invert(&cartan);
        Self {
            cartan_type,
            cartan,
            symmetrizer,
            positive_roots: roots.into_iter().map(RootVector).collect(),
            root_weights,
            root_index,
            reflections,
            inv_num,
            inv_den,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn series(&self) -> Series {
        self.cartan_type.series
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    /// `cartan()[i][j] = ⟨α_j, α_i^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_i) / 2` for the invariant form normalised so short roots have
    /// squared length 2. `d_i · C[i][j]` is symmetric.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// Positive roots in fundamental-weight coordinates, same order as
    /// [`positive_roots`](Self::positive_roots).
    pub fn positive_root_weights(&self) -> &[Weight] {
        &self.root_weights
    }

    pub fn highest_root(&self) -> &RootVector {
        self.positive_roots.last().expect("at least one root")
    }

    /// Index of `root` in [`positive_roots`](Self::positive_roots).
    pub fn root_position(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    /// `v ∈ Φ` (positive or negative).
    pub fn is_root(&self, v: &[i64]) -> bool {
        if self.root_index.contains_key(v) {
            return true;
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    /// Matrix of `s_i` acting on fundamental-weight coordinates (`i` 0-based).
    pub fn simple_reflection(&self, i: usize) -> &[Vec<i64>] {
        &self.reflections[i]
    }

    /// Applies `s_i` to a weight: `λ - ⟨λ, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Result<Weight> {
        let p = w.0[i];
        w.0.iter()
            .enumerate()
            .map(|(k, &x)| {
                error::mul(p, self.cartan[k][i], "reflection")
                    .and_then(|d| x.checked_sub(d).ok_or(Error::Overflow("reflection")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    pub(crate) fn check_rank(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "expected {} coordinates for {}, got {len}",
                self.rank(),
                self.cartan_type
            )))
        }
    }

    /// Converts a root-lattice vector to fundamental-weight coordinates.
    pub fn root_to_weight(&self, v: &RootVector) -> Result<Weight> {
        self.check_rank(v.rank())?;
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).try_fold(0i64, |acc, j| {
                    error::add(acc, error::mul(self.cartan[i][j], v.0[j], "basis change")?, "basis change")
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }

    /// Simple-root coordinates of `w` if they are all integers.
    pub fn root_coords(&self, w: &Weight) -> Result<Option<Vec<i64>>> {
        self.check_rank(w.rank())?;
        let scaled = self.scaled_root_coords(w.coords())?;
        Ok(scaled
            .iter()
            .all(|x| x % self.inv_den == 0)
            .then(|| scaled.iter().map(|x| x / self.inv_den).collect()))
    }

    /// `inv_den` times the simple-root coordinates of `w`.
    fn scaled_root_coords(&self, w: &[i64]) -> Result<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n).try_fold(0i64, |acc, j| {
                    error::add(acc, error::mul(self.inv_num[i][j], w[j], "basis change")?, "basis change")
                })
            })
            .collect()
    }

    /// Simple-root coordinates of `w` if they are nonnegative integers.
    pub(crate) fn cone_coords(&self, w: &[i64]) -> Result<Option<Vec<i64>>> {
        let scaled = self.scaled_root_coords(w)?;
        if scaled.iter().any(|&x| x < 0 || x % self.inv_den != 0) {
            return Ok(None);
        }
        Ok(Some(scaled.iter().map(|x| x / self.inv_den).collect()))
    }

    /// `μ ≤ λ` in the dominance order: `λ - μ` is a nonnegative integer
    /// combination of simple roots.
    pub fn dominance_le(&self, mu: &Weight, lambda: &Weight) -> Result<bool> {
        let d = lambda.checked_sub(mu)?;
        Ok(self.cone_coords(d.coords())?.is_some())
    }

    /// Exact simple-root coordinates of `w`.
    pub fn to_root_basis(&self, w: &Weight) -> Result<Vec<Ratio<i64>>> {
        self.check_rank(w.rank())?;
        Ok(self
            .scaled_root_coords(w.coords())?
            .into_iter()
            .map(|x| Ratio::new(x, self.inv_den))
            .collect())
    }

    /// Height `Σ x_i` of `w = Σ x_i α_i`.
    pub fn height(&self, w: &Weight) -> Result<Ratio<i64>> {
        Ok(self.to_root_basis(w)?.into_iter().sum())
    }

    /// `(λ, β)` for a weight `λ` and root-lattice vector `β`, using the form of
    /// [`symmetrizer`](Self::symmetrizer).
    pub fn form(&self, lambda: &[i64], beta: &[i64]) -> Result<i64> {
        lambda
            .iter()
            .zip(beta)
            .zip(&self.symmetrizer)
            .try_fold(0i64, |acc, ((&l, &b), &d)| {
                error::add(acc, error::mul(error::mul(l, b, "inner product")?, d, "inner product")?, "inner product")
            })
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }
}

/// Exact simple-root coordinates of `w`.
pub fn to_root_basis(rs: &RootSystem, w: &Weight) -> Result<Vec<Ratio<i64>>> {
    rs.to_root_basis(w)
}

/// `⟨w, α_i^∨⟩` for a 1-based Bourbaki index `i`.
pub fn pairing(rs: &RootSystem, w: &Weight, i: usize) -> Result<i64> {
    rs.check_rank(w.rank())?;
    if i == 0 || i > rs.rank() {
        return Err(Error::invalid(format!(
            "simple root index {i} out of range 1..={}",
            rs.rank()
        )));
    }
    Ok(w.coords()[i - 1])
}

/// Half the sum of the positive roots.
pub fn rho(rs: &RootSystem) -> Weight {
    rs.rho()
}
