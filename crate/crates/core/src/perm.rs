//! Linear and cyclic permutations over arbitrary distinct positive letters,
//! together with their descent statistics.
//!
//! Positions are 1-indexed at every public boundary: position `i` refers to
//! the pair `(p_i, p_{i+1})`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub type Letter = u32;

/// Descent positions `{ i in 1..n : p_i > p_{i+1} }`.
pub fn descent_set(word: &[Letter]) -> BTreeSet<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn descent_number(word: &[Letter]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Sum of the descent positions.
pub fn major_index(word: &[Letter]) -> usize {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .sum()
}

/// Descent positions read with the wraparound `p_{n+1} = p_1`, so position
/// `n` may be a descent.
pub fn cyclic_descent_set(word: &[Letter]) -> Result<BTreeSet<usize>> {
    if word.is_empty() {
        return Err(Error::EmptyCycle);
    }
    let n = word.len();
    Ok((0..n)
        .filter(|&i| word[i] > word[(i + 1) % n])
        .map(|i| i + 1)
        .collect())
}

fn cyclic_descent_bottoms_of(word: &[Letter]) -> BTreeSet<Letter> {
    let n = word.len();
    (0..n)
        .filter(|&i| word[i] > word[(i + 1) % n])
        .map(|i| word[(i + 1) % n])
        .collect()
}

fn check_distinct(letters: &[Letter]) -> Result<()> {
    if letters.contains(&0) {
        return Err(Error::NonPositiveLetter);
    }
    let mut seen = BTreeSet::new();
    for &l in letters {
        if !seen.insert(l) {
            return Err(Error::DuplicateLetter(l));
        }
    }
    Ok(())
}

/// Parses the shared literal format: comma-separated positive integers,
/// optionally wrapped in brackets. The empty string is the empty word.
fn parse_letters(input: &str) -> Result<Vec<Letter>> {
    let malformed = |reason: &str| Error::MalformedLiteral {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let mut body = input.trim();
    if let Some(inner) = body.strip_prefix('[') {
        body = inner.strip_suffix(']').ok_or_else(|| malformed("unbalanced bracket"))?;
    } else if body.ends_with(']') {
        return Err(malformed("unbalanced bracket"));
    }
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(malformed("empty entry"));
            }
            match tok.parse::<i64>() {
                Ok(v) if v <= 0 => Err(Error::NonPositiveLetter),
                Ok(v) => Letter::try_from(v).map_err(|_| malformed("letter out of range")),
                Err(_) => Err(malformed(&format!("{tok:?} is not an integer"))),
            }
        })
        .collect()
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// An ordered sequence of distinct positive letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearPerm {
    letters: Vec<Letter>,
}

impl LinearPerm {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        check_distinct(&letters)?;
        Ok(Self { letters })
    }

    /// Caller guarantees the letters are distinct and positive.
    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(check_distinct(&letters).is_ok());
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.letters.contains(&letter)
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.letters.iter().copied().max()
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        descent_set(&self.letters)
    }

    pub fn des(&self) -> usize {
        descent_number(&self.letters)
    }

    pub fn maj(&self) -> usize {
        major_index(&self.letters)
    }

    pub fn cyclic_descent_set(&self) -> Result<BTreeSet<usize>> {
        cyclic_descent_set(&self.letters)
    }

    /// First letter shared with `other`, if any.
    pub fn common_letter(&self, other: &LinearPerm) -> Option<Letter> {
        self.letters.iter().copied().find(|&l| other.contains(l))
    }

    pub fn stats(&self) -> Result<StatSummary> {
        let des_set = self.descent_set();
        let cdes_set = self.cyclic_descent_set()?;
        Ok(StatSummary {
            des: des_set.len(),
            maj: des_set.iter().sum(),
            des_set,
            cdes: cdes_set.len(),
            cdes_set,
            cbd: cyclic_descent_bottoms_of(&self.letters),
        })
    }
}

impl fmt::Display for LinearPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

impl FromStr for LinearPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            return Err(Error::MalformedLiteral {
                input: s.to_string(),
                reason: "brackets denote a cyclic permutation".into(),
            });
        }
        Self::new(parse_letters(s)?)
    }
}

impl Serialize for LinearPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A rotation class of a nonempty word, stored as the rotation that begins
/// with its largest letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPerm {
    rep: LinearPerm,
}

/// Rotates `seq` so that its largest letter comes first.
pub fn canonicalize(seq: &[Letter]) -> Result<CyclicPerm> {
    if seq.is_empty() {
        return Err(Error::EmptyCycle);
    }
    check_distinct(seq)?;
    Ok(CyclicPerm::from_rotation_unchecked(seq))
}

impl CyclicPerm {
    pub fn new(letters: &[Letter]) -> Result<Self> {
        canonicalize(letters)
    }

    pub(crate) fn from_rotation_unchecked(seq: &[Letter]) -> Self {
        let start = seq
            .iter()
            .enumerate()
            .max_by_key(|(_, &l)| l)
            .map(|(i, _)| i)
            .expect("nonempty");
        let mut letters = Vec::with_capacity(seq.len());
        letters.extend_from_slice(&seq[start..]);
        letters.extend_from_slice(&seq[..start]);
        Self {
            rep: LinearPerm::from_vec_unchecked(letters),
        }
    }

    /// Caller guarantees `rep` starts with its maximum.
    pub(crate) fn from_rep_unchecked(rep: Vec<Letter>) -> Self {
        debug_assert!(!rep.is_empty() && rep.iter().max() == rep.first());
        Self {
            rep: LinearPerm::from_vec_unchecked(rep),
        }
    }

    pub fn rep(&self) -> &LinearPerm {
        &self.rep
    }

    pub fn letters(&self) -> &[Letter] {
        self.rep.letters()
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, letter: Letter) -> bool {
        self.rep.contains(letter)
    }

    pub fn max_letter(&self) -> Letter {
        self.rep.letters[0]
    }

    /// The representative with its leading (maximal) letter removed.
    pub fn tail(&self) -> LinearPerm {
        LinearPerm::from_vec_unchecked(self.rep.letters[1..].to_vec())
    }

    /// Number of cyclic descents; the same for every rotation.
    pub fn cdes(&self) -> usize {
        // The representative never descends across the wrap, since it
        // starts at the maximum.
        self.rep.des()
    }

    /// Major index of the representative.
    pub fn cmaj(&self) -> usize {
        self.rep.maj()
    }

    /// Letters sitting immediately after a cyclic descent.
    pub fn descent_bottoms(&self) -> BTreeSet<Letter> {
        cyclic_descent_bottoms_of(self.letters())
    }

    /// The rotation beginning with `letter`.
    pub fn split(&self, letter: Letter) -> Result<LinearPerm> {
        let letters = self.letters();
        let at = letters
            .iter()
            .position(|&l| l == letter)
            .ok_or(Error::MissingLetter(letter))?;
        let mut out = Vec::with_capacity(letters.len());
        out.extend_from_slice(&letters[at..]);
        out.extend_from_slice(&letters[..at]);
        Ok(LinearPerm::from_vec_unchecked(out))
    }

    /// All rotations, starting with the representative.
    pub fn rotations(&self) -> impl Iterator<Item = LinearPerm> + '_ {
        self.letters().iter().map(move |&l| self.split(l).expect("own letter"))
    }

    pub fn common_letter(&self, other: &CyclicPerm) -> Option<Letter> {
        self.rep.common_letter(&other.rep)
    }

    pub fn stats(&self) -> StatSummary {
        self.rep.stats().expect("nonempty")
    }
}

impl fmt::Display for CyclicPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_letters(f, self.letters())?;
        f.write_str("]")
    }
}

impl FromStr for CyclicPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        canonicalize(&parse_letters(s)?)
    }
}

impl Serialize for CyclicPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All statistics of one word, computed eagerly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatSummary {
    pub des_set: BTreeSet<usize>,
    pub des: usize,
    pub maj: usize,
    pub cdes_set: BTreeSet<usize>,
    pub cdes: usize,
    pub cbd: BTreeSet<Letter>,
}
