//! Exhaustive and sampled verification sweeps.
//!
//! Linear pairs use the letters `1..=m+n` split into every subset and every
//! ordering; cyclic pairs do the same with the largest letter pinned to the
//! first operand. Statistics are invariant under order-preserving
//! relabeling, so this covers every pair shape of a given size.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{CyclicPerm, Letter, LinearPerm};
use crate::qpoly::QPoly;
use crate::shuffle::{
    cyclic_shuffle_count, cyclic_shuffles, cyclic_shuffles_oracle_bounded, linear_shuffle_count,
    visit_cyclic_shuffles, visit_linear_shuffles, DEFAULT_ORACLE_BOUND,
};
use crate::theorems::{
    agrr_count, cyclic_shuffle_maj_table, cyclic_stanley_rhs, psi_codomain, psi_forward,
    psi_inverse, shuffle_maj_table, stanley_rhs, CyclicShufflePair,
};

pub const REPORT_SCHEMA: u32 = 1;
/// Largest `m + n` accepted for an exhaustive sweep.
pub const MAX_EXHAUSTIVE_TOTAL: usize = 9;
/// Largest `m + n` accepted for sampled spot checks.
pub const MAX_SAMPLE_TOTAL: usize = 16;
pub const DEFAULT_MAX_TOTAL: usize = 8;
pub const DEFAULT_SWEEP_ORACLE_BOUND: usize = 7;
pub const DEFAULT_SAMPLE_TOTAL: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Stanley,
    Cyclic,
    Agrr,
    Bijection,
    Counts,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::Stanley,
        Theorem::Cyclic,
        Theorem::Agrr,
        Theorem::Bijection,
        Theorem::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Stanley => "stanley",
            Theorem::Cyclic => "cyclic",
            Theorem::Agrr => "agrr",
            Theorem::Bijection => "bijection",
            Theorem::Counts => "counts",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown theorem {s:?}")))
    }
}

/// Parses a comma-separated theorem list; `all` selects every theorem.
pub fn parse_theorems(list: &str) -> Result<BTreeSet<Theorem>> {
    let mut out = BTreeSet::new();
    for name in list.split(',').map(str::trim) {
        if name == "all" {
            out.extend(Theorem::ALL);
        } else {
            out.insert(name.parse()?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Tsv,
    Text,
}

/// Seeded random spot checks at a single size above the exhaustive bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub count: usize,
    pub seed: u64,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub max_total: usize,
    pub oracle_bound: usize,
    pub theorems: BTreeSet<Theorem>,
    pub sample: Option<Sample>,
    pub output_format: OutputFormat,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_total: DEFAULT_MAX_TOTAL,
            oracle_bound: DEFAULT_SWEEP_ORACLE_BOUND,
            theorems: Theorem::ALL.into_iter().collect(),
            sample: None,
            output_format: OutputFormat::Text,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_total < 2 {
            return Err(Error::InvalidConfig(format!(
                "max_total must be at least 2, got {}",
                self.max_total
            )));
        }
        if self.oracle_bound > self.max_total {
            return Err(Error::InvalidConfig(format!(
                "oracle_bound {} exceeds max_total {}",
                self.oracle_bound, self.max_total
            )));
        }
        if self.max_total > MAX_EXHAUSTIVE_TOTAL {
            return Err(Error::ResourceGuard {
                what: "exhaustive sweep total",
                requested: self.max_total,
                limit: MAX_EXHAUSTIVE_TOTAL,
            });
        }
        if self.oracle_bound > DEFAULT_ORACLE_BOUND {
            return Err(Error::ResourceGuard {
                what: "oracle bound",
                requested: self.oracle_bound,
                limit: DEFAULT_ORACLE_BOUND,
            });
        }
        if self.theorems.is_empty() {
            return Err(Error::InvalidConfig("no theorems selected".into()));
        }
        if let Some(sample) = &self.sample {
            if sample.total <= self.max_total {
                return Err(Error::InvalidConfig(format!(
                    "sample total {} must exceed max_total {}",
                    sample.total, self.max_total
                )));
            }
            if sample.total > MAX_SAMPLE_TOTAL {
                return Err(Error::ResourceGuard {
                    what: "sample total",
                    requested: sample.total,
                    limit: MAX_SAMPLE_TOTAL,
                });
            }
        }
        Ok(())
    }
}

/// Closed forms under test. The default uses the library's evaluators; a
/// sweep with a deliberately wrong entry must report failures.
#[derive(Clone, Copy)]
pub struct ClosedForms {
    pub stanley: fn(&LinearPerm, &LinearPerm, i64) -> Result<QPoly>,
    pub cyclic: fn(&CyclicShufflePair, i64) -> QPoly,
    pub agrr: fn(i64, i64, i64, i64, i64) -> Result<u64>,
}

impl Default for ClosedForms {
    fn default() -> Self {
        Self {
            stanley: stanley_rhs,
            cyclic: cyclic_stanley_rhs,
            agrr: agrr_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub theorem: Theorem,
    pub pair: String,
    pub k: Option<i64>,
    /// Brute-force value, when the check compares polynomials or counts.
    pub expected: Option<QPoly>,
    /// Closed-form value.
    pub actual: Option<QPoly>,
    pub witness: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Rollup {
    pub cases: u64,
    pub failures: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub config: SweepConfig,
    pub cases_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
    pub rollup: BTreeMap<Theorem, Rollup>,
    pub sampled_pairs: Vec<String>,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Process exit status: zero iff there are no failures.
    pub fn exit_status(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

#[derive(Default)]
struct Tally {
    rollup: BTreeMap<Theorem, Rollup>,
    failures: Vec<Failure>,
}

impl Tally {
    fn pass(&mut self, theorem: Theorem) {
        self.rollup.entry(theorem).or_default().cases += 1;
    }

    fn fail(&mut self, failure: Failure) {
        let entry = self.rollup.entry(failure.theorem).or_default();
        entry.cases += 1;
        entry.failures += 1;
        self.failures.push(failure);
    }

    fn merge(&mut self, other: Tally) {
        for (t, r) in other.rollup {
            let entry = self.rollup.entry(t).or_default();
            entry.cases += r.cases;
            entry.failures += r.failures;
        }
        self.failures.extend(other.failures);
    }
}

fn failure(theorem: Theorem, pair: &dyn fmt::Display, k: Option<i64>, witness: String) -> Failure {
    Failure {
        theorem,
        pair: pair.to_string(),
        k,
        expected: None,
        actual: None,
        witness,
    }
}

fn poly_failure(
    theorem: Theorem,
    pair: &dyn fmt::Display,
    k: i64,
    expected: QPoly,
    actual: QPoly,
) -> Failure {
    let witness = format!("brute force {expected} != closed form {actual}");
    Failure {
        expected: Some(expected),
        actual: Some(actual),
        ..failure(theorem, pair, Some(k), witness)
    }
}

fn count_failure(theorem: Theorem, pair: &dyn fmt::Display, k: Option<i64>, expected: u64, actual: u64, what: &str) -> Failure {
    Failure {
        expected: Some(QPoly::constant(expected as i64)),
        actual: Some(QPoly::constant(actual as i64)),
        ..failure(theorem, pair, k, format!("{what}: expected {expected}, got {actual}"))
    }
}

/// A disjoint pair of linear permutations, displayed as `sigma | pi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearPair {
    pub sigma: LinearPerm,
    pub pi: LinearPerm,
}

impl fmt::Display for LinearPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.sigma, self.pi)
    }
}

/// Cyclic classes on `letters` (sorted ascending, nonempty), in
/// lexicographic order of representatives.
fn cyclic_classes(letters: &[Letter]) -> impl Iterator<Item = CyclicPerm> + '_ {
    let (&max, rest) = letters.split_last().expect("nonempty letter set");
    rest.iter().copied().permutations(rest.len()).map(move |arr| {
        let mut rep = Vec::with_capacity(letters.len());
        rep.push(max);
        rep.extend(arr);
        CyclicPerm::from_rep_unchecked(rep)
    })
}

fn complement(total: usize, chosen: &[Letter]) -> Vec<Letter> {
    (1..=total as Letter).filter(|l| !chosen.contains(l)).collect()
}

/// Every normalized cyclic pair on the letters `1..=total`: `m` ascending,
/// then the first operand's letter set, then the classes of each side, all
/// in lexicographic order.
pub fn enumerate_pairs(total: usize) -> impl Iterator<Item = CyclicShufflePair> {
    assert!(total >= 2, "a cyclic pair needs at least two letters");
    let max = total as Letter;
    (1..total).flat_map(move |m| {
        (1..max).combinations(m - 1).flat_map(move |mut sigma_letters| {
            sigma_letters.push(max);
            let pi_letters = complement(total, &sigma_letters);
            let sigmas: Vec<CyclicPerm> = cyclic_classes(&sigma_letters).collect();
            let pis: Vec<CyclicPerm> = cyclic_classes(&pi_letters).collect();
            sigmas
                .into_iter()
                .cartesian_product(pis)
                .map(|(s, p)| CyclicShufflePair::new(s, p).expect("normalized by construction"))
        })
    })
}

/// Every ordered pair of disjoint linear permutations covering `1..=total`,
/// including an empty operand on either side.
pub fn enumerate_linear_pairs(total: usize) -> impl Iterator<Item = LinearPair> {
    linear_pair_groups(total).flat_map(|(s, p)| linear_pairs_on(s, p))
}

fn linear_pair_groups(total: usize) -> impl Iterator<Item = (Vec<Letter>, Vec<Letter>)> {
    (0..=total).flat_map(move |m| {
        (1..=total as Letter).combinations(m).map(move |sigma_letters| {
            let pi_letters = complement(total, &sigma_letters);
            (sigma_letters, pi_letters)
        })
    })
}

fn linear_pairs_on(sigma_letters: Vec<Letter>, pi_letters: Vec<Letter>) -> impl Iterator<Item = LinearPair> {
    let pis: Vec<Vec<Letter>> = pi_letters.iter().copied().permutations(pi_letters.len()).collect();
    sigma_letters
        .clone()
        .into_iter()
        .permutations(sigma_letters.len())
        .cartesian_product(pis)
        .map(|(s, p)| LinearPair {
            sigma: LinearPerm::from_vec_unchecked(s),
            pi: LinearPerm::from_vec_unchecked(p),
        })
}

fn random_cyclic_pair(rng: &mut ChaCha8Rng, total: usize) -> CyclicShufflePair {
    let m = rng.random_range(1..total);
    let mut others: Vec<Letter> = (1..total as Letter).collect();
    others.shuffle(rng);
    let mut sigma = vec![total as Letter];
    sigma.extend_from_slice(&others[..m - 1]);
    sigma[1..].shuffle(rng);
    let pi = &others[m - 1..];
    CyclicShufflePair::new(
        CyclicPerm::from_rotation_unchecked(&sigma),
        CyclicPerm::from_rotation_unchecked(pi),
    )
    .expect("normalized by construction")
}

fn random_linear_pair(rng: &mut ChaCha8Rng, total: usize) -> LinearPair {
    let m = rng.random_range(0..=total);
    let mut letters: Vec<Letter> = (1..=total as Letter).collect();
    letters.shuffle(rng);
    let pi = letters.split_off(m);
    LinearPair {
        sigma: LinearPerm::from_vec_unchecked(letters),
        pi: LinearPerm::from_vec_unchecked(pi),
    }
}

/// The pairs a seeded sample draws, in draw order.
pub fn sample_pairs(sample: &Sample) -> (Vec<LinearPair>, Vec<CyclicShufflePair>) {
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
    let mut linear = Vec::with_capacity(sample.count);
    let mut cyclic = Vec::with_capacity(sample.count);
    for _ in 0..sample.count {
        linear.push(random_linear_pair(&mut rng, sample.total));
        cyclic.push(random_cyclic_pair(&mut rng, sample.total));
    }
    (linear, cyclic)
}

fn check_linear(pair: &LinearPair, theorems: &BTreeSet<Theorem>, forms: &ClosedForms) -> Tally {
    let mut tally = Tally::default();
    let (sigma, pi) = (pair.sigma.letters(), pair.pi.letters());
    let total = sigma.len() + pi.len();

    if theorems.contains(&Theorem::Stanley) {
        let table = shuffle_maj_table(sigma, pi);
        for k in 0..total as i64 {
            let brute = table.get(k as usize).cloned().unwrap_or_default();
            match (forms.stanley)(&pair.sigma, &pair.pi, k) {
                Ok(closed) if closed == brute => tally.pass(Theorem::Stanley),
                Ok(closed) => tally.fail(poly_failure(Theorem::Stanley, pair, k, brute, closed)),
                Err(e) => tally.fail(failure(Theorem::Stanley, pair, Some(k), e.to_string())),
            }
        }
    }

    if theorems.contains(&Theorem::Counts) {
        let mut count = 0u64;
        visit_linear_shuffles(sigma, pi, |_| count += 1);
        let expected = linear_shuffle_count(sigma.len(), pi.len());
        if count == expected {
            tally.pass(Theorem::Counts);
        } else {
            tally.fail(count_failure(Theorem::Counts, pair, None, count, expected, "linear shuffle count"));
        }
    }
    tally
}

fn check_bijection(pair: &CyclicShufflePair, tally: &mut Tally) {
    let t = Theorem::Bijection;
    let classes = cyclic_shuffles(pair.csigma(), pair.cpi()).expect("disjoint pair");
    let codomain = psi_codomain(pair);
    let mut images = BTreeSet::new();

    for alpha in &classes {
        let image = match psi_forward(alpha, pair) {
            Ok(image) => image,
            Err(e) => {
                tally.fail(failure(t, pair, None, format!("{alpha}: {e}")));
                continue;
            }
        };
        let (des, maj) = (image.word.des(), image.word.maj());
        let mut problems = Vec::new();
        if alpha.cdes() != des + 1 {
            problems.push(format!("cdes {} != des {} + 1", alpha.cdes(), des));
        }
        if alpha.cmaj() != maj + des + 1 {
            problems.push(format!("cmaj {} != maj {} + des {} + 1", alpha.cmaj(), maj, des));
        }
        if !codomain.contains(&image) {
            problems.push(format!("image {image} outside the codomain"));
        }
        match psi_inverse(&image, pair) {
            Ok(back) if &back == alpha => {}
            Ok(back) => problems.push(format!("inverse returned {back}")),
            Err(e) => problems.push(format!("inverse failed: {e}")),
        }
        if problems.is_empty() {
            tally.pass(t);
        } else {
            let witness = format!("{alpha} -> {image}: {}", problems.join("; "));
            tally.fail(failure(t, pair, Some(alpha.cdes() as i64), witness));
        }
        images.insert(image);
    }

    if images.len() == classes.len() && images == codomain {
        tally.pass(t);
    } else {
        let witness = format!(
            "{} classes, {} distinct images, codomain size {}",
            classes.len(),
            images.len(),
            codomain.len()
        );
        tally.fail(failure(t, pair, None, witness));
    }

    for image in &codomain {
        let round_trip = psi_inverse(image, pair).and_then(|alpha| psi_forward(&alpha, pair));
        match round_trip {
            Ok(back) if &back == image => tally.pass(t),
            Ok(back) => tally.fail(failure(t, pair, None, format!("{image} -> {back}"))),
            Err(e) => tally.fail(failure(t, pair, None, format!("{image}: {e}"))),
        }
    }
}

fn check_cyclic(
    pair: &CyclicShufflePair,
    theorems: &BTreeSet<Theorem>,
    forms: &ClosedForms,
    oracle_bound: usize,
    bijection: bool,
) -> Tally {
    let mut tally = Tally::default();
    let total = pair.total();
    let (m, n, r, s) = (pair.m() as i64, pair.n() as i64, pair.r() as i64, pair.s() as i64);
    let wants = |t| theorems.contains(&t);

    let table = if wants(Theorem::Cyclic) || wants(Theorem::Agrr) {
        cyclic_shuffle_maj_table(pair.csigma(), pair.cpi())
    } else {
        Vec::new()
    };

    if wants(Theorem::Cyclic) {
        for k in 0..total as i64 {
            let brute = table[k as usize].clone();
            let closed = (forms.cyclic)(pair, k);
            if closed == brute {
                tally.pass(Theorem::Cyclic);
            } else {
                tally.fail(poly_failure(Theorem::Cyclic, pair, k, brute, closed));
            }
        }
    }

    if wants(Theorem::Agrr) {
        let mut sum = 0u64;
        for k in 0..total as i64 {
            let brute = table[k as usize].eval_at_one();
            let at_one = (forms.cyclic)(pair, k).eval_at_one();
            match (forms.agrr)(m, n, r, s, k) {
                Ok(count) => {
                    sum += count;
                    if brute == at_one && at_one == count as i64 {
                        tally.pass(Theorem::Agrr);
                    } else {
                        let witness = format!("brute force {brute}, closed form at q=1 {at_one}, count formula {count}");
                        tally.fail(Failure {
                            expected: Some(QPoly::constant(brute)),
                            actual: Some(QPoly::constant(count as i64)),
                            ..failure(Theorem::Agrr, pair, Some(k), witness)
                        });
                    }
                }
                Err(e) => tally.fail(failure(Theorem::Agrr, pair, Some(k), e.to_string())),
            }
        }
        let expected = cyclic_shuffle_count(pair.m(), pair.n());
        if sum == expected {
            tally.pass(Theorem::Agrr);
        } else {
            tally.fail(count_failure(Theorem::Agrr, pair, None, expected, sum, "sum over k of the count formula"));
        }
    }

    if wants(Theorem::Counts) {
        let mut count = 0u64;
        visit_cyclic_shuffles(pair.csigma(), pair.cpi(), |_| count += 1);
        let expected = cyclic_shuffle_count(pair.m(), pair.n());
        if count == expected {
            tally.pass(Theorem::Counts);
        } else {
            tally.fail(count_failure(Theorem::Counts, pair, None, expected, count, "cyclic shuffle count"));
        }
        if total <= oracle_bound {
            let fast = cyclic_shuffles(pair.csigma(), pair.cpi()).expect("disjoint pair");
            match cyclic_shuffles_oracle_bounded(pair.csigma(), pair.cpi(), oracle_bound) {
                Ok(oracle) if oracle == fast => tally.pass(Theorem::Counts),
                Ok(oracle) => {
                    let witness = format!("fast path {} classes, oracle {} classes", fast.len(), oracle.len());
                    tally.fail(failure(Theorem::Counts, pair, None, witness));
                }
                Err(e) => tally.fail(failure(Theorem::Counts, pair, None, e.to_string())),
            }
        }
    }

    if wants(Theorem::Bijection) && bijection {
        check_bijection(pair, &mut tally);
    }
    tally
}

/// Runs the configured sweep with the library's closed forms.
pub fn run_sweep(config: &SweepConfig) -> Result<VerificationReport> {
    run_sweep_with(config, &ClosedForms::default())
}

/// Runs the sweep against the given closed forms. Pairs are checked in
/// parallel and merged in enumeration order, so the report does not depend
/// on scheduling.
pub fn run_sweep_with(config: &SweepConfig, forms: &ClosedForms) -> Result<VerificationReport> {
    config.validate()?;
    let started = Instant::now();
    let theorems = &config.theorems;
    let mut tally = Tally::default();

    if theorems.contains(&Theorem::Stanley) || theorems.contains(&Theorem::Counts) {
        for total in 1..=config.max_total {
            let groups: Vec<_> = linear_pair_groups(total).collect();
            let parts: Vec<Tally> = groups
                .into_par_iter()
                .map(|(s, p)| {
                    let mut t = Tally::default();
                    for pair in linear_pairs_on(s, p) {
                        t.merge(check_linear(&pair, theorems, forms));
                    }
                    t
                })
                .collect();
            parts.into_iter().for_each(|t| tally.merge(t));
        }
    }

    let cyclic_wanted = [Theorem::Cyclic, Theorem::Agrr, Theorem::Bijection, Theorem::Counts]
        .iter()
        .any(|t| theorems.contains(t));
    if cyclic_wanted {
        for total in 2..=config.max_total {
            let pairs: Vec<_> = enumerate_pairs(total).collect();
            let bijection = total <= config.oracle_bound;
            let parts: Vec<Tally> = pairs
                .par_iter()
                .map(|pair| check_cyclic(pair, theorems, forms, config.oracle_bound, bijection))
                .collect();
            parts.into_iter().for_each(|t| tally.merge(t));
        }
    }

    let mut sampled_pairs = Vec::new();
    if let Some(sample) = &config.sample {
        let (linear, cyclic) = sample_pairs(sample);
        for pair in &linear {
            tally.merge(check_linear(pair, theorems, forms));
        }
        let parts: Vec<Tally> = cyclic
            .par_iter()
            .map(|pair| check_cyclic(pair, theorems, forms, config.oracle_bound, true))
            .collect();
        parts.into_iter().for_each(|t| tally.merge(t));
        sampled_pairs.extend(linear.iter().map(ToString::to_string));
        sampled_pairs.extend(cyclic.iter().map(ToString::to_string));
    }

    for t in theorems {
        tally.rollup.entry(*t).or_default();
    }
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        config: config.clone(),
        cases_checked: tally.rollup.values().map(|r| r.cases).sum(),
        failures: tally.failures,
        elapsed: started.elapsed(),
        rollup: tally.rollup,
        sampled_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_of_two_letters() {
        let pairs: Vec<_> = enumerate_pairs(2).map(|p| p.to_string()).collect();
        assert_eq!(pairs, ["[2] | [1]"]);
    }

    #[test]
    fn pairs_of_three_letters() {
        let pairs: Vec<_> = enumerate_pairs(3).map(|p| p.to_string()).collect();
        assert_eq!(pairs, ["[3] | [2,1]", "[3,1] | [2]", "[3,2] | [1]"]);
    }

    #[test]
    fn pair_count_matches_formula() {
        // sum over m of C(t-1, m-1) (m-1)! (t-m-1)! = (t-1)! * H_{t-1}
        for total in 2..=7usize {
            let fact: usize = (1..total).product();
            let expected: usize = (1..total).map(|m| fact / (total - m)).sum();
            let pairs: Vec<_> = enumerate_pairs(total).collect();
            assert_eq!(pairs.len(), expected);
            let unique: BTreeSet<_> = pairs.iter().collect();
            assert_eq!(unique.len(), pairs.len());
        }
    }

    #[test]
    fn linear_pair_count() {
        // (t + 1) * t!: every split point of every arrangement
        assert_eq!(enumerate_linear_pairs(3).count(), 4 * 6);
        assert_eq!(enumerate_linear_pairs(0).count(), 1);
    }

    #[test]
    fn theorem_lists() {
        assert_eq!(parse_theorems("all").unwrap().len(), 5);
        assert_eq!(
            parse_theorems("cyclic,agrr").unwrap(),
            [Theorem::Cyclic, Theorem::Agrr].into_iter().collect()
        );
        assert!(parse_theorems("cyclic,nope").is_err());
    }

    #[test]
    fn config_validation() {
        let mut c = SweepConfig::default();
        assert!(c.validate().is_ok());
        c.max_total = 1;
        assert!(matches!(c.validate(), Err(Error::InvalidConfig(_))));
        c.max_total = 6;
        assert!(matches!(c.validate(), Err(Error::InvalidConfig(_))));
        c.oracle_bound = 6;
        assert!(c.validate().is_ok());
        c.max_total = 12;
        assert!(matches!(c.validate(), Err(Error::ResourceGuard { .. })));
        c.max_total = 8;
        c.sample = Some(Sample { count: 3, seed: 1, total: 8 });
        assert!(matches!(c.validate(), Err(Error::InvalidConfig(_))));
        c.sample = Some(Sample { count: 3, seed: 1, total: 40 });
        assert!(matches!(c.validate(), Err(Error::ResourceGuard { .. })));
    }

    #[test]
    fn small_cyclic_sweep_is_clean() {
        let config = SweepConfig {
            max_total: 4,
            oracle_bound: 4,
            theorems: [Theorem::Cyclic].into_iter().collect(),
            ..SweepConfig::default()
        };
        let report = run_sweep(&config).unwrap();
        assert!(report.cases_checked > 0);
        assert!(report.failures.is_empty());
        assert_eq!(report.exit_status(), 0);
    }

    #[test]
    fn agrr_sweep_at_two_letters() {
        let config = SweepConfig {
            max_total: 2,
            oracle_bound: 2,
            theorems: [Theorem::Agrr].into_iter().collect(),
            ..SweepConfig::default()
        };
        let report = run_sweep(&config).unwrap();
        // k = 0, k = 1, and the sum over k
        assert_eq!(report.cases_checked, 3);
        assert!(report.passed());
    }
}
