//! Exact univariate polynomials in `q` with integer coefficients.
//!
//! Coefficients are `i64` with checked arithmetic; an overflow aborts with a
//! panic rather than wrapping. Every value reachable at desk scale (words of
//! length up to a few dozen) stays far inside the range.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::RwLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Exponent = u32;

/// A polynomial stored as `(exponent, coefficient)` terms in ascending
/// exponent order with no zero coefficients. The zero polynomial has no terms.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: Vec<(Exponent, i64)>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("QPoly coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("QPoly coefficient overflow")
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: i64, exp: Exponent) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// Builds a polynomial from arbitrary terms; repeated exponents are summed
    /// and zero results dropped.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, i64)>>(terms: I) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_unstable_by_key(|&(e, _)| e);
        let mut out: Vec<(Exponent, i64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = checked_add(*lc, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Self { terms: out }
    }

    /// Coefficient `i` of `dense` belongs to `q^i`.
    pub fn from_dense(dense: &[i64]) -> Self {
        Self {
            terms: dense
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e as Exponent, c))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[(Exponent, i64)] {
        &self.terms
    }

    pub fn coeff(&self, exp: Exponent) -> i64 {
        self.terms
            .binary_search_by_key(&exp, |&(e, _)| e)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<Exponent> {
        self.terms.last().map(|&(e, _)| e)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let ((ea, ca), (eb, cb)) = (a[i], b[j]);
            if ea < eb {
                out.push((ea, ca));
                i += 1;
            } else if eb < ea {
                out.push((eb, cb));
                j += 1;
            } else {
                let c = checked_add(ca, cb);
                if c != 0 {
                    out.push((ea, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        QPoly { terms: out }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return QPoly::zero();
        };
        let mut dense = vec![0i64; (da + db) as usize + 1];
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &other.terms {
                let slot = &mut dense[(ea + eb) as usize];
                *slot = checked_add(*slot, checked_mul(ca, cb));
            }
        }
        QPoly::from_dense(&dense)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: Exponent) -> QPoly {
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| (e.checked_add(k).expect("QPoly exponent overflow"), c))
                .collect(),
        }
    }

    pub fn scale(&self, factor: i64) -> QPoly {
        if factor == 0 {
            return QPoly::zero();
        }
        QPoly {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| (e, checked_mul(c, factor)))
                .collect(),
        }
    }

    /// Value at `q = 1`, the sum of all coefficients.
    pub fn eval_at_one(&self) -> i64 {
        self.terms.iter().fold(0, |acc, &(_, c)| checked_add(acc, c))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        QPoly::add(self, rhs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        QPoly::add(self, &rhs.scale(-1))
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        QPoly::mul(self, rhs)
    }
}

/// Ascending exponents, terms joined by `" + "`; `c*q^e`, with `q` for the
/// linear term and the bare coefficient for the constant. Unit coefficients
/// are dropped (`q^3`, `-q`).
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let var = match e {
                0 => {
                    write!(f, "{c}")?;
                    continue;
                }
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            match c {
                1 => write!(f, "{var}")?,
                -1 => write!(f, "-{var}")?,
                _ => write!(f, "{c}*{var}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<(Exponent, i64)>::deserialize(d)?;
        Ok(QPoly::from_terms(terms))
    }
}

/// Rows of the Gaussian triangle computed so far; row `n` holds `[n m]` for
/// `m` in `0..=n`.
static GAUSS_ROWS: RwLock<Vec<Vec<QPoly>>> = RwLock::new(Vec::new());

fn extend_gauss_rows(rows: &mut Vec<Vec<QPoly>>, through: usize) {
    while rows.len() <= through {
        let n = rows.len();
        let row = match rows.last() {
            None => vec![QPoly::one()],
            Some(prev) => (0..=n)
                .map(|m| {
                    if m == 0 || m == n {
                        QPoly::one()
                    } else {
                        // [n m] = [n-1 m] + q^(n-m) [n-1 m-1]
                        prev[m].add(&prev[m - 1].shift((n - m) as Exponent))
                    }
                })
                .collect(),
        };
        rows.push(row);
    }
}

/// The Gaussian binomial `[n m]`, zero whenever `n < 0`, `m < 0` or `m > n`.
pub fn gauss_binomial(n: i64, m: i64) -> QPoly {
    if n < 0 || m < 0 || m > n {
        return QPoly::zero();
    }
    let (n, m) = (n as usize, m as usize);
    {
        let rows = GAUSS_ROWS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(n) {
            return row[m].clone();
        }
    }
    let mut rows = GAUSS_ROWS.write().unwrap_or_else(|e| e.into_inner());
    extend_gauss_rows(&mut rows, n);
    rows[n][m].clone()
}

/// Ordinary binomial coefficient with the same zero convention as
/// [`gauss_binomial`].
pub fn binomial(n: i64, m: i64) -> u64 {
    if n < 0 || m < 0 || m > n {
        return 0;
    }
    let m = m.min(n - m) as u64;
    let n = n as u64;
    (0..m).fold(1u64, |acc, i| {
        acc.checked_mul(n - i).expect("binomial overflow") / (i + 1)
    })
}
