//! Polynomials in `q` with exact integer coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{self, Error, Result};

/// `Σ coeffs[m] q^m`, with trailing zeros trimmed (zero is the empty vector).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c q^degree`.
    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `q^m` (zero past the degree).
    pub fn coeff(&self, m: usize) -> i64 {
        self.coeffs.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|m| error::add(self.coeff(m), other.coeff(m), "polynomial sum"))
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_scale(-1)?)
    }

    pub fn checked_scale(&self, c: i64) -> Result<Self> {
        self.coeffs
            .iter()
            .map(|&x| error::mul(x, c, "polynomial scaling"))
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = error::add(out[i + j], error::mul(a, b, "polynomial product")?, "polynomial product")?;
            }
        }
        Ok(Self::from_coeffs(out))
    }

    /// `self += c · q^shift · other`, in place.
    pub fn add_shifted(&mut self, other: &Self, shift: usize, c: i64) -> Result<()> {
        if other.is_zero() || c == 0 {
            return Ok(());
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (m, &x) in other.coeffs.iter().enumerate() {
            let t = error::mul(x, c, "polynomial sum")?;
            self.coeffs[m + shift] = error::add(self.coeffs[m + shift], t, "polynomial sum")?;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        Ok(())
    }

    /// Drops every term of degree above `max_degree`; reports whether any
    /// nonzero term was dropped.
    pub fn truncate(&mut self, max_degree: usize) -> bool {
        let dropped = self.coeffs.len() > max_degree + 1;
        if dropped {
            self.coeffs.truncate(max_degree + 1);
            while self.coeffs.last() == Some(&0) {
                self.coeffs.pop();
            }
        }
        dropped
    }

    pub fn truncated(&self, max_degree: usize) -> Self {
        let mut p = self.clone();
        p.truncate(max_degree);
        p
    }

    pub fn eval(&self, q: i64) -> Result<i64> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            error::add(error::mul(acc, q, "polynomial evaluation")?, c, "polynomial evaluation")
        })
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Parses `"1 + 2 q - q^3"` (the [`Display`](fmt::Display) form).
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::invalid("empty polynomial"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (k, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 {
                terms.push(&compact[start..k]);
                start = k;
            }
        }
        terms.push(&compact[start..]);
        let mut out = Self::zero();
        for term in terms {
            let bad = || Error::invalid(format!("cannot read polynomial term `{term}`"));
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, deg) = match body.find('q') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(p) => {
                    let c = if p == 0 { 1 } else { body[..p].parse::<i64>().map_err(|_| bad())? };
                    let rest = &body[p + 1..];
                    let d = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
                    };
                    (c, d)
                }
            };
            out.add_shifted(&Self::one(), deg, if neg { -coef } else { coef })?;
        }
        Ok(out)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (m, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag} ")?,
            }
            match m {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{m}")?,
            }
        }
        Ok(())
    }
}
