//! Shuffle enumeration for linear and cyclic permutations.
//!
//! The `visit_*` functions stream words to a callback through a reused
//! buffer, which is what the sweeps use; the collecting variants build a
//! sorted [`ShuffleSet`].

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::{CyclicPerm, Letter, LinearPerm};
use crate::qpoly::binomial;

/// Largest total length accepted by [`cyclic_shuffles_oracle`].
pub const DEFAULT_ORACLE_BOUND: usize = 9;

/// Deduplicated elements in lexicographic order (of representatives, for
/// cyclic permutations).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleSet<T> {
    elements: Vec<T>,
}

pub type LinearShuffles = ShuffleSet<LinearPerm>;
pub type CyclicShuffles = ShuffleSet<CyclicPerm>;

impl<T: Ord> ShuffleSet<T> {
    pub fn from_unsorted(mut elements: Vec<T>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self { elements }
    }

    pub fn contains(&self, item: &T) -> bool {
        self.elements.binary_search(item).is_ok()
    }
}

impl<T> ShuffleSet<T> {
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn into_vec(self) -> Vec<T> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.elements.iter()
    }
}

impl<'a, T> IntoIterator for &'a ShuffleSet<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// `binomial(m + n, n)`.
pub fn linear_shuffle_count(m: usize, n: usize) -> u64 {
    binomial((m + n) as i64, n as i64)
}

/// `(m + n - 1) * binomial(m + n - 2, m - 1)` for nonempty operands.
pub fn cyclic_shuffle_count(m: usize, n: usize) -> u64 {
    assert!(m >= 1 && n >= 1, "cyclic operands are nonempty");
    (m + n - 1) as u64 * binomial((m + n - 2) as i64, (m - 1) as i64)
}

fn interleave<F: FnMut(&[Letter])>(a: &[Letter], b: &[Letter], buf: &mut Vec<Letter>, f: &mut F) {
    match (a.split_first(), b.split_first()) {
        (None, None) => f(buf),
        (Some((&x, rest)), None) | (None, Some((&x, rest))) => {
            buf.push(x);
            interleave(rest, &[], buf, f);
            buf.pop();
        }
        (Some((&x, ra)), Some((&y, rb))) => {
            // Heads are distinct, so taking the smaller one first keeps the
            // output in lexicographic order.
            let ((lo, lo_rest, hi_side), (hi, hi_rest, lo_side)) = if x < y {
                ((x, ra, b), (y, rb, a))
            } else {
                ((y, rb, a), (x, ra, b))
            };
            buf.push(lo);
            interleave(lo_rest, hi_side, buf, f);
            buf.pop();
            buf.push(hi);
            interleave(hi_rest, lo_side, buf, f);
            buf.pop();
        }
    }
}

/// Calls `f` on every interleaving of `sigma` and `pi` that keeps the
/// internal order of both, in lexicographic order. The operands are assumed
/// disjoint.
pub fn visit_linear_shuffles<F: FnMut(&[Letter])>(sigma: &[Letter], pi: &[Letter], mut f: F) {
    let mut buf = Vec::with_capacity(sigma.len() + pi.len());
    interleave(sigma, pi, &mut buf, &mut f);
}

fn ensure_disjoint(a: &[Letter], b: &[Letter]) -> Result<()> {
    match a.iter().find(|l| b.contains(l)) {
        Some(&l) => Err(Error::NotDisjoint(l)),
        None => Ok(()),
    }
}

pub fn linear_shuffles(sigma: &LinearPerm, pi: &LinearPerm) -> Result<LinearShuffles> {
    ensure_disjoint(sigma.letters(), pi.letters())?;
    let mut out = Vec::with_capacity(linear_shuffle_count(sigma.len(), pi.len()) as usize);
    visit_linear_shuffles(sigma.letters(), pi.letters(), |w| {
        out.push(LinearPerm::from_vec_unchecked(w.to_vec()))
    });
    Ok(ShuffleSet { elements: out })
}

/// Whether `needle` is a subsequence of `hay`.
fn is_subsequence(needle: &[Letter], hay: &[Letter]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|x| it.any(|y| y == x))
}

/// True iff some rotation of `outer` contains `inner`'s representative as a
/// subsequence.
pub fn is_circular_subsequence(inner: &CyclicPerm, outer: &CyclicPerm) -> Result<bool> {
    if let Some(&l) = inner.letters().iter().find(|&&l| !outer.contains(l)) {
        return Err(Error::MissingLetter(l));
    }
    let n = outer.len();
    let doubled: Vec<Letter> = outer.letters().iter().chain(outer.letters()).copied().collect();
    Ok((0..n).any(|start| is_subsequence(inner.letters(), &doubled[start..start + n])))
}

/// Calls `f` on the representative of every cyclic shuffle of the operands.
///
/// The side holding the global maximum is split at that letter; every other
/// letter `i` of the opposite side anchors the linear shuffles of the
/// remaining tail with the rotation beginning at `i`. Each class appears
/// exactly once, though not in lexicographic order.
pub fn visit_cyclic_shuffles<F: FnMut(&[Letter])>(a: &CyclicPerm, b: &CyclicPerm, mut f: F) {
    let (top, other) = if a.max_letter() > b.max_letter() { (a, b) } else { (b, a) };
    let tail = &top.letters()[1..];
    let mut rep = Vec::with_capacity(a.len() + b.len());
    for &anchor in other.letters() {
        let rotation = other.split(anchor).expect("own letter");
        visit_linear_shuffles(tail, rotation.letters(), |w| {
            rep.clear();
            rep.push(top.max_letter());
            rep.extend_from_slice(w);
            f(&rep);
        });
    }
}

pub fn cyclic_shuffles(csigma: &CyclicPerm, cpi: &CyclicPerm) -> Result<CyclicShuffles> {
    ensure_disjoint(csigma.letters(), cpi.letters())?;
    let mut out = Vec::with_capacity(cyclic_shuffle_count(csigma.len(), cpi.len()) as usize);
    visit_cyclic_shuffles(csigma, cpi, |rep| out.push(CyclicPerm::from_rep_unchecked(rep.to_vec())));
    Ok(ShuffleSet::from_unsorted(out))
}

/// Brute-force cyclic shuffles with [`DEFAULT_ORACLE_BOUND`].
pub fn cyclic_shuffles_oracle(csigma: &CyclicPerm, cpi: &CyclicPerm) -> Result<CyclicShuffles> {
    cyclic_shuffles_oracle_bounded(csigma, cpi, DEFAULT_ORACLE_BOUND)
}

/// Tries every arrangement of the non-maximal letters behind the global
/// maximum and keeps those containing both operands circularly.
pub fn cyclic_shuffles_oracle_bounded(
    csigma: &CyclicPerm,
    cpi: &CyclicPerm,
    bound: usize,
) -> Result<CyclicShuffles> {
    ensure_disjoint(csigma.letters(), cpi.letters())?;
    let total = csigma.len() + cpi.len();
    if total > bound {
        return Err(Error::ResourceGuard {
            what: "oracle enumeration length",
            requested: total,
            limit: bound,
        });
    }
    let mut letters: Vec<Letter> = csigma.letters().iter().chain(cpi.letters()).copied().collect();
    letters.sort_unstable();
    let max = letters.pop().expect("nonempty operands");
    let mut out = Vec::new();
    for arrangement in letters.iter().copied().permutations(letters.len()) {
        let mut rep = Vec::with_capacity(total);
        rep.push(max);
        rep.extend(arrangement);
        let candidate = CyclicPerm::from_rep_unchecked(rep);
        if is_circular_subsequence(csigma, &candidate)? && is_circular_subsequence(cpi, &candidate)? {
            out.push(candidate);
        }
    }
    Ok(ShuffleSet::from_unsorted(out))
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

    fn texts<T: ToString>(set: &ShuffleSet<T>) -> Vec<String> {
        set.elements().iter().map(T::to_string).collect()
    }

    #[test]
    fn linear_shuffles_of_worked_example() {
        let got = linear_shuffles(&lp("6,3"), &lp("1,4")).unwrap();
        let mut want = vec!["6,3,1,4", "6,1,3,4", "6,1,4,3", "1,4,6,3", "1,6,3,4", "1,6,4,3"];
        want.sort();
        assert_eq!(texts(&got), want);
    }

    #[test]
    fn linear_shuffles_with_empty_operand() {
        let got = linear_shuffles(&LinearPerm::empty(), &lp("1,4")).unwrap();
        assert_eq!(texts(&got), ["1,4"]);
        let got = linear_shuffles(&LinearPerm::empty(), &LinearPerm::empty()).unwrap();
        assert_eq!(got.len(), 1);
        assert!(got.elements()[0].is_empty());
    }

    #[test]
    fn linear_shuffle_cardinality() {
        assert_eq!(linear_shuffles(&lp("5,2,7"), &lp("1,4")).unwrap().len(), 10);
        assert_eq!(linear_shuffle_count(3, 2), 10);
    }

    #[test]
    fn linear_shuffles_reject_shared_letters() {
        assert_eq!(linear_shuffles(&lp("6,3"), &lp("3,4")), Err(Error::NotDisjoint(3)));
    }

    #[test]
    fn circular_subsequence_examples() {
        assert!(is_circular_subsequence(&cp("[6,3]"), &cp("[6,3,1,4]")).unwrap());
        assert!(is_circular_subsequence(&cp("[4,1]"), &cp("[6,3,4,1]")).unwrap());
        assert!(!is_circular_subsequence(&cp("[4,2,1]"), &cp("[5,4,1,2,3]")).unwrap());
        assert_eq!(
            is_circular_subsequence(&cp("[7,1]"), &cp("[6,3,1,4]")),
            Err(Error::MissingLetter(7))
        );
    }

    #[test]
    fn cyclic_shuffles_of_worked_example() {
        let got = cyclic_shuffles(&cp("[6,3]"), &cp("[4,1]")).unwrap();
        let mut want = vec!["[6,3,1,4]", "[6,3,4,1]", "[6,1,4,3]", "[6,4,1,3]", "[6,1,3,4]", "[6,4,3,1]"];
        want.sort();
        assert_eq!(texts(&got), want);
        assert_eq!(cyclic_shuffle_count(2, 2), 6);
    }

    #[test]
    fn cyclic_shuffles_of_singletons() {
        assert_eq!(texts(&cyclic_shuffles(&cp("[5]"), &cp("[2]")).unwrap()), ["[5,2]"]);
        assert_eq!(cyclic_shuffle_count(1, 1), 1);
    }

    #[test]
    fn cyclic_shuffles_reject_shared_letters() {
        assert_eq!(cyclic_shuffles(&cp("[6,3]"), &cp("[6,1]")), Err(Error::NotDisjoint(6)));
    }

    #[test]
    fn oracle_examples() {
        let fast = cyclic_shuffles(&cp("[6,3]"), &cp("[4,1]")).unwrap();
        assert_eq!(cyclic_shuffles_oracle(&cp("[6,3]"), &cp("[4,1]")).unwrap(), fast);
        assert_eq!(texts(&cyclic_shuffles_oracle(&cp("[5]"), &cp("[2]")).unwrap()), ["[5,2]"]);
        let big = cyclic_shuffles_oracle(&cp("[7,2]"), &cp("[5,1,3]")).unwrap();
        assert_eq!(big.len(), 12);
        assert_eq!(big, cyclic_shuffles(&cp("[7,2]"), &cp("[5,1,3]")).unwrap());
    }

    #[test]
    fn oracle_resource_guard() {
        let err = cyclic_shuffles_oracle_bounded(&cp("[7,2]"), &cp("[5,1,3]"), 4).unwrap_err();
        assert_eq!(
            err,
            Error::ResourceGuard {
                what: "oracle enumeration length",
                requested: 5,
                limit: 4
            }
        );
    }

    #[test]
    fn max_in_second_operand_is_handled() {
        let a = cyclic_shuffles(&cp("[4,1]"), &cp("[6,3]")).unwrap();
        let b = cyclic_shuffles(&cp("[6,3]"), &cp("[4,1]")).unwrap();
        assert_eq!(a, b);
    }
}
