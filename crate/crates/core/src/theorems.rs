//! Closed forms for the shuffle generating functions, their brute-force
//! counterparts, and the bijection `psi` between cyclic shuffles and linear
//! shuffles of the tail.
//!
//! Every evaluator accepts any integer `k`; outside the feasible range the
//! Gaussian-binomial zero convention makes the closed forms vanish.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{descent_number, major_index, CyclicPerm, Letter, LinearPerm};
use crate::qpoly::{binomial, gauss_binomial, Exponent, QPoly};
use crate::shuffle::{visit_cyclic_shuffles, visit_linear_shuffles};

fn ensure_disjoint(a: &[Letter], b: &[Letter]) -> Result<()> {
    match a.iter().find(|l| b.contains(l)) {
        Some(&l) => Err(Error::NotDisjoint(l)),
        None => Ok(()),
    }
}

fn exponent(e: i64) -> Exponent {
    Exponent::try_from(e).expect("nonvanishing term has a nonnegative exponent")
}

/// Two disjoint cyclic permutations with the overall largest letter in
/// `csigma`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicShufflePair {
    csigma: CyclicPerm,
    cpi: CyclicPerm,
}

impl CyclicShufflePair {
    pub fn new(csigma: CyclicPerm, cpi: CyclicPerm) -> Result<Self> {
        ensure_disjoint(csigma.letters(), cpi.letters())?;
        if cpi.max_letter() > csigma.max_letter() {
            return Err(Error::Orientation {
                max: cpi.max_letter(),
            });
        }
        Ok(Self { csigma, cpi })
    }

    /// Like [`new`](Self::new), but swaps the operands when the maximum sits
    /// in the second one. Cyclic shuffle sets do not depend on the order.
    pub fn normalized(a: CyclicPerm, b: CyclicPerm) -> Result<Self> {
        if b.max_letter() > a.max_letter() {
            Self::new(b, a)
        } else {
            Self::new(a, b)
        }
    }

    pub fn csigma(&self) -> &CyclicPerm {
        &self.csigma
    }

    pub fn cpi(&self) -> &CyclicPerm {
        &self.cpi
    }

    pub fn m(&self) -> usize {
        self.csigma.len()
    }

    pub fn n(&self) -> usize {
        self.cpi.len()
    }

    pub fn r(&self) -> usize {
        self.csigma.cdes()
    }

    pub fn s(&self) -> usize {
        self.cpi.cdes()
    }

    pub fn total(&self) -> usize {
        self.m() + self.n()
    }
}

impl fmt::Display for CyclicShufflePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.csigma, self.cpi)
    }
}

impl Serialize for CyclicShufflePair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Closed form for the `des = k` slice of the major-index generating
/// function over linear shuffles.
pub fn stanley_rhs(sigma: &LinearPerm, pi: &LinearPerm, k: i64) -> Result<QPoly> {
    ensure_disjoint(sigma.letters(), pi.letters())?;
    let (m, n) = (sigma.len() as i64, pi.len() as i64);
    let (r, s) = (sigma.des() as i64, pi.des() as i64);
    let coeff = gauss_binomial(m - r + s, k - r).mul(&gauss_binomial(n - s + r, k - s));
    if coeff.is_zero() {
        return Ok(coeff);
    }
    let e = (sigma.maj() + pi.maj()) as i64 + (k - s) * (k - r);
    Ok(coeff.shift(exponent(e)))
}

/// `sum q^maj(w)` over linear shuffles `w` with `des(w) = k`, by enumeration.
pub fn shuffle_maj_gf(sigma: &LinearPerm, pi: &LinearPerm, k: i64) -> Result<QPoly> {
    ensure_disjoint(sigma.letters(), pi.letters())?;
    if k < 0 {
        return Ok(QPoly::zero());
    }
    Ok(shuffle_maj_table(sigma.letters(), pi.letters())
        .into_iter()
        .nth(k as usize)
        .unwrap_or_default())
}

/// Per-descent-number generating functions over all linear shuffles; entry
/// `k` is the `des = k` slice. Has `max(m + n, 1)` entries.
pub fn shuffle_maj_table(sigma: &[Letter], pi: &[Letter]) -> Vec<QPoly> {
    let total = sigma.len() + pi.len();
    let rows = total.max(1);
    let width = total * total.saturating_sub(1) / 2 + 1;
    let mut dense = vec![vec![0i64; width]; rows];
    visit_linear_shuffles(sigma, pi, |w| {
        dense[descent_number(w)][major_index(w)] += 1;
    });
    dense.iter().map(|row| QPoly::from_dense(row)).collect()
}

/// Number of cyclic shuffles with `k` cyclic descents, from the closed
/// form in the lengths `m, n` and cyclic descent numbers `r, s`.
///
/// The quotient is evaluated exactly; a nonzero remainder is reported as
/// [`Error::NonIntegral`].
pub fn agrr_count(m: i64, n: i64, r: i64, s: i64, k: i64) -> Result<u64> {
    let valid = |len: i64, d: i64| (0 <= d && d < len) || (len, d) == (1, 0);
    if !valid(m, r) || !valid(n, s) {
        return Err(Error::InvalidParameters(format!(
            "(m={m}, r={r}) and (n={n}, s={s}) must satisfy 0 <= r < m or (m, r) = (1, 0)"
        )));
    }
    let denominator = ((m - r + s) * (n - s + r)) as i128;
    if denominator == 0 {
        return Err(Error::ZeroDenominator { m, n, r, s });
    }
    let factor = (k * (m - r) * (n - s) + (m + n - k) * r * s) as i128;
    let numerator =
        factor * binomial(m - r + s, k - r) as i128 * binomial(n - s + r, k - s) as i128;
    if numerator % denominator != 0 {
        return Err(Error::NonIntegral {
            numerator,
            denominator,
        });
    }
    let value = numerator / denominator;
    u64::try_from(value).map_err(|_| Error::NonIntegral {
        numerator,
        denominator,
    })
}

/// Closed form for the `cdes = k` slice of the cyclic-major-index
/// generating function over cyclic shuffles of `pair`.
///
/// Letters `i` of the second operand contribute `q^maj(S_i)` weighted by one
/// of two q-binomial products, depending on whether `i` is a cyclic descent
/// bottom.
pub fn cyclic_stanley_rhs(pair: &CyclicShufflePair, k: i64) -> QPoly {
    let (m, n) = (pair.m() as i64, pair.n() as i64);
    let (r, s) = (pair.r() as i64, pair.s() as i64);
    let base = pair.csigma.cmaj() as i64;
    let bottoms = pair.cpi.descent_bottoms();

    let mut outside = Vec::new();
    let mut inside = Vec::new();
    for &i in pair.cpi.letters() {
        let maj = pair.cpi.split(i).expect("own letter").maj() as Exponent;
        if bottoms.contains(&i) {
            inside.push((maj, 1));
        } else {
            outside.push((maj, 1));
        }
    }

    let first = gauss_binomial(m - r + s, k - r).mul(&gauss_binomial(n - s + r - 1, k - s - 1));
    let second = gauss_binomial(m - r + s - 1, k - r).mul(&gauss_binomial(n - s + r, k - s));

    let mut total = QPoly::zero();
    if !first.is_zero() && !outside.is_empty() {
        let e = exponent(base + (k - s) * (k - r));
        total = total.add(&first.mul(&QPoly::from_terms(outside)).shift(e));
    }
    if !second.is_zero() && !inside.is_empty() {
        let e = exponent(base + (k - s + 1) * (k - r));
        total = total.add(&second.mul(&QPoly::from_terms(inside)).shift(e));
    }
    total
}

/// `sum q^cmaj(a)` over cyclic shuffles `[a]` with `cdes([a]) = k`, by
/// enumeration. Operand order does not matter.
pub fn cyclic_shuffle_maj_gf(csigma: &CyclicPerm, cpi: &CyclicPerm, k: i64) -> Result<QPoly> {
    ensure_disjoint(csigma.letters(), cpi.letters())?;
    if k < 0 {
        return Ok(QPoly::zero());
    }
    Ok(cyclic_shuffle_maj_table(csigma, cpi)
        .into_iter()
        .nth(k as usize)
        .unwrap_or_default())
}

/// Per-cyclic-descent-number generating functions over all cyclic
/// shuffles; has `m + n` entries.
pub fn cyclic_shuffle_maj_table(csigma: &CyclicPerm, cpi: &CyclicPerm) -> Vec<QPoly> {
    let total = csigma.len() + cpi.len();
    let width = total * (total - 1) / 2 + 1;
    let mut dense = vec![vec![0i64; width]; total];
    visit_cyclic_shuffles(csigma, cpi, |rep| {
        dense[descent_number(rep)][major_index(rep)] += 1;
    });
    dense.iter().map(|row| QPoly::from_dense(row)).collect()
}

/// Image of a cyclic shuffle under `psi`: the representative without its
/// leading letter, tagged with the letter of the second operand it is
/// shuffled against the rotation of.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PsiImage {
    pub anchor: Letter,
    pub word: LinearPerm,
}

impl fmt::Display for PsiImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.anchor, self.word)
    }
}

pub fn psi_forward(alpha: &CyclicPerm, pair: &CyclicShufflePair) -> Result<PsiImage> {
    let not_member = || Error::NotACyclicShuffle(alpha.to_string());
    let belongs = |l: &Letter| pair.csigma.contains(*l) || pair.cpi.contains(*l);
    if alpha.len() != pair.total() || !alpha.letters().iter().all(belongs) {
        return Err(not_member());
    }
    let contains = |inner: &CyclicPerm| crate::shuffle::is_circular_subsequence(inner, alpha);
    if !contains(&pair.csigma)? || !contains(&pair.cpi)? {
        return Err(not_member());
    }
    let word = alpha.tail();
    let anchor = word
        .letters()
        .iter()
        .copied()
        .find(|&l| pair.cpi.contains(l))
        .expect("second operand is nonempty");
    Ok(PsiImage { anchor, word })
}

pub fn psi_inverse(image: &PsiImage, pair: &CyclicShufflePair) -> Result<CyclicPerm> {
    let invalid = || Error::NotAShuffle {
        word: image.word.to_string(),
        anchor: image.anchor,
    };
    let rotation = pair.cpi.split(image.anchor).map_err(|_| invalid())?;
    let tail = &pair.csigma.letters()[1..];
    let word = image.word.letters();
    if word.len() != tail.len() + rotation.len() {
        return Err(invalid());
    }
    let (from_pi, from_sigma): (Vec<Letter>, Vec<Letter>) =
        word.iter().partition(|&&l| pair.cpi.contains(l));
    if from_pi != rotation.letters() || from_sigma != tail {
        return Err(invalid());
    }
    let mut rep = Vec::with_capacity(word.len() + 1);
    rep.push(pair.csigma.max_letter());
    rep.extend_from_slice(word);
    Ok(CyclicPerm::from_rep_unchecked(rep))
}

/// The codomain of `psi`: every anchor `i` of the second operand paired with
/// each linear shuffle of the first operand's tail and the rotation starting
/// at `i`.
pub fn psi_codomain(pair: &CyclicShufflePair) -> BTreeSet<PsiImage> {
    let tail = &pair.csigma.letters()[1..];
    let mut out = BTreeSet::new();
    for &anchor in pair.cpi.letters() {
        let rotation = pair.cpi.split(anchor).expect("own letter");
        visit_linear_shuffles(tail, rotation.letters(), |w| {
            out.insert(PsiImage {
                anchor,
                word: LinearPerm::from_vec_unchecked(w.to_vec()),
            });
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LinearPerm {
        s.parse().unwrap()
    }

    fn cp(s: &str) -> CyclicPerm {
        s.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> CyclicShufflePair {
        CyclicShufflePair::new(cp(a), cp(b)).unwrap()
    }

    fn q(terms: &[(Exponent, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn stanley_rhs_examples() {
        let (s, p) = (lp("6,3"), lp("1,4"));
        assert_eq!(stanley_rhs(&s, &p, 1).unwrap(), q(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(stanley_rhs(&s, &p, 2).unwrap(), q(&[(3, 1), (4, 1), (5, 1)]));
        assert!(stanley_rhs(&s, &p, 0).unwrap().is_zero());
        assert_eq!(stanley_rhs(&s, &lp("3,4"), 1), Err(Error::NotDisjoint(3)));
    }

    #[test]
    fn shuffle_maj_gf_examples() {
        let (s, p) = (lp("6,3"), lp("1,4"));
        assert_eq!(shuffle_maj_gf(&s, &p, 1).unwrap(), q(&[(1, 1), (2, 1), (3, 1)]));
        assert_eq!(shuffle_maj_gf(&s, &p, 2).unwrap(), q(&[(3, 1), (4, 1), (5, 1)]));
        assert_eq!(shuffle_maj_gf(&LinearPerm::empty(), &p, 0).unwrap(), QPoly::one());
        assert!(shuffle_maj_gf(&s, &p, -1).unwrap().is_zero());
        assert!(shuffle_maj_gf(&s, &p, 9).unwrap().is_zero());
    }

    #[test]
    fn agrr_count_examples() {
        assert_eq!(agrr_count(2, 2, 1, 1, 2).unwrap(), 4);
        assert_eq!(agrr_count(2, 2, 1, 1, 1).unwrap(), 1);
        let sum: u64 = (0..4).map(|k| agrr_count(2, 2, 1, 1, k).unwrap()).sum();
        assert_eq!(sum, 6);
        assert_eq!(agrr_count(1, 1, 0, 0, 1).unwrap(), 1);
        assert!(matches!(agrr_count(2, 2, 2, 1, 1), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn cyclic_stanley_rhs_examples() {
        let pr = pair("[6,3]", "[4,1]");
        assert_eq!(cyclic_stanley_rhs(&pr, 1), q(&[(1, 1)]));
        assert_eq!(cyclic_stanley_rhs(&pr, 2), q(&[(3, 2), (4, 2)]));
        assert_eq!(cyclic_stanley_rhs(&pr, 3), q(&[(6, 1)]));
        assert!(cyclic_stanley_rhs(&pr, 0).is_zero());
        assert!(cyclic_stanley_rhs(&pr, -3).is_zero());
    }

    #[test]
    fn orientation_is_enforced() {
        assert_eq!(
            CyclicShufflePair::new(cp("[4,1]"), cp("[6,3]")),
            Err(Error::Orientation { max: 6 })
        );
        let swapped = CyclicShufflePair::normalized(cp("[4,1]"), cp("[6,3]")).unwrap();
        assert_eq!(swapped, pair("[6,3]", "[4,1]"));
    }

    #[test]
    fn cyclic_shuffle_maj_gf_examples() {
        let (a, b) = (cp("[6,3]"), cp("[4,1]"));
        assert_eq!(cyclic_shuffle_maj_gf(&a, &b, 2).unwrap(), q(&[(3, 2), (4, 2)]));
        assert!(cyclic_shuffle_maj_gf(&a, &b, 0).unwrap().is_zero());
        assert_eq!(cyclic_shuffle_maj_gf(&cp("[5]"), &cp("[2]"), 1).unwrap(), q(&[(1, 1)]));
        assert_eq!(cyclic_shuffle_maj_gf(&b, &a, 2).unwrap(), q(&[(3, 2), (4, 2)]));
    }

    #[test]
    fn psi_forward_examples() {
        let pr = pair("[6,3]", "[4,1]");
        let img = psi_forward(&cp("[6,3,1,4]"), &pr).unwrap();
        assert_eq!((img.anchor, img.word.clone()), (1, lp("3,1,4")));
        assert_eq!(img.word.des() + 1, 2);
        assert_eq!(img.word.maj() + img.word.des() + 1, 3);

        let img = psi_forward(&cp("[6,1,3,4]"), &pr).unwrap();
        assert_eq!((img.anchor, img.word), (1, lp("1,3,4")));

        let img = psi_forward(&cp("[6,4,3,1]"), &pr).unwrap();
        assert_eq!((img.anchor, img.word.clone()), (4, lp("4,3,1")));
        assert_eq!((img.word.des(), img.word.maj()), (2, 3));

        assert!(matches!(
            psi_forward(&cp("[6,3,1]"), &pr),
            Err(Error::NotACyclicShuffle(_))
        ));
        // 5 is foreign to the pair.
        assert!(matches!(
            psi_forward(&cp("[6,1,4,5]"), &pr),
            Err(Error::NotACyclicShuffle(_))
        ));
    }

    #[test]
    fn psi_rejects_classes_missing_an_operand_order() {
        let pr = pair("[6,3,2]", "[4,1]");
        // 6 2 3 reverses the circular order of [6,3,2].
        assert!(matches!(
            psi_forward(&cp("[6,2,4,3,1]"), &pr),
            Err(Error::NotACyclicShuffle(_))
        ));
    }

    #[test]
    fn psi_inverse_examples() {
        let pr = pair("[6,3]", "[4,1]");
        let inv = |anchor, word: &str| {
            psi_inverse(&PsiImage { anchor, word: lp(word) }, &pr).map(|c| c.to_string())
        };
        assert_eq!(inv(1, "3,1,4").unwrap(), "[6,3,1,4]");
        assert_eq!(inv(4, "4,3,1").unwrap(), "[6,4,3,1]");
        assert_eq!(inv(1, "1,3,4").unwrap(), "[6,1,3,4]");
        assert!(matches!(inv(4, "3,1,4"), Err(Error::NotAShuffle { .. })));
        assert!(matches!(inv(2, "3,1,4"), Err(Error::NotAShuffle { .. })));
        assert!(matches!(inv(1, "3,1"), Err(Error::NotAShuffle { .. })));
    }

    #[test]
    fn psi_codomain_matches_worked_example() {
        let pr = pair("[6,3]", "[4,1]");
        let codomain = psi_codomain(&pr);
        assert_eq!(codomain.len(), 6);
        let images: BTreeSet<_> = crate::shuffle::cyclic_shuffles(pr.csigma(), pr.cpi())
            .unwrap()
            .iter()
            .map(|a| psi_forward(a, &pr).unwrap())
            .collect();
        assert_eq!(images, codomain);
    }
}
