//! Exhaustive verification over small fields and dimensions.
//!
//! Operators are enumerated by their lexicographic index (row-major, first
//! entry most significant), so any split of the index range into shards
//! visits the same objects. All aggregation is counting, and reports do not
//! depend on the shard count.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;
use std::thread;
use std::time::Instant;

use num_rational::Ratio;
use serde::Serialize;

use crate::bijection::{degree, forward, inverse};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::fitting::fitting_decompose;
use crate::joyal::{
    distinct_trees, is_eventually_constant, joyal_forward, joyal_inverse, EndoFunction,
};
use crate::linalg::{Matrix, Vector};

pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    /// Maximum number of objects a single enumeration may visit.
    pub budget: u64,
    pub shards: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            budget: DEFAULT_BUDGET,
            shards: 1,
        }
    }
}

impl CensusConfig {
    pub fn with_shards(shards: usize) -> Self {
        CensusConfig {
            shards,
            ..Default::default()
        }
    }

    fn admit(&self, requested: Option<u128>) -> Result<u64> {
        let requested = requested.unwrap_or(u128::MAX);
        if requested > u128::from(self.budget) {
            return Err(Error::BudgetExceeded {
                requested,
                budget: self.budget,
            });
        }
        Ok(requested as u64)
    }
}

/// `q^(n^2)`, or `None` on overflow.
pub fn operator_count(field: &Field, n: usize) -> Option<u128> {
    let exp = u32::try_from(n.checked_mul(n)?).ok()?;
    u128::from(field.order()).checked_pow(exp)
}

/// Every `n x n` operator exactly once, in lexicographic order.
pub fn enumerate_operators(
    field: &Field,
    n: usize,
    config: &CensusConfig,
) -> Result<impl Iterator<Item = Matrix>> {
    let total = config.admit(operator_count(field, n))?;
    let field = field.clone();
    Ok((0..total).map(move |i| Matrix::from_index(&field, n, n, i)))
}

fn shard_ranges(total: u64, shards: usize) -> Vec<Range<u64>> {
    let shards = shards.max(1) as u64;
    (0..shards)
        .map(|s| (total * s / shards)..(total * (s + 1) / shards))
        .filter(|r| !r.is_empty())
        .collect()
}

/// Runs `work` over a partition of `0..total`, one thread per shard.
fn run_sharded<T, F>(total: u64, shards: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync,
{
    let ranges = shard_ranges(total, shards);
    if ranges.len() <= 1 {
        return ranges.into_iter().map(&work).collect();
    }
    thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| scope.spawn(|| work(r)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census shard panicked"))
            .collect()
    })
}

pub fn count_nilpotents(field: &Field, n: usize, config: &CensusConfig) -> Result<u64> {
    let total = config.admit(operator_count(field, n))?;
    let counts = run_sharded(total, config.shards, |range| {
        range
            .filter(|&i| {
                let t = Matrix::from_index(field, n, n, i);
                t.is_nilpotent().unwrap_or(false)
            })
            .count() as u64
    });
    Ok(counts.into_iter().sum())
}

/// `q^(n(n-1))`.
pub fn expected_nilpotents(field: &Field, n: usize) -> Option<u128> {
    let exp = u32::try_from(n.checked_mul(n.saturating_sub(1))?).ok()?;
    u128::from(field.order()).checked_pow(exp)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub k: usize,
    /// Pairs `(T, v)` with `deg_v(T) = k`.
    pub left_count: u64,
    /// Operators whose Fitting automorphism part has dimension `k`.
    pub right_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    pub n: usize,
    pub total_operators: u64,
    pub nilpotent_count: u64,
    pub expected_nilpotents: u64,
    pub nilpotent_probability: String,
    pub roundtrip_failures: u64,
    pub surjectivity_gap: u64,
    pub stratum_violations: u64,
    pub per_degree: Vec<DegreeRow>,
    pub success: bool,
    pub elapsed_ms: u64,
}

impl CensusReport {
    /// `nilpotent_count / total_operators`, reduced.
    pub fn probability(&self) -> Ratio<u64> {
        Ratio::new(self.nilpotent_count, self.total_operators.max(1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeTable {
    pub q: u32,
    pub n: usize,
    pub per_degree: Vec<DegreeRow>,
    pub stratum_violations: u64,
    pub success: bool,
    pub elapsed_ms: u64,
}

#[derive(Default)]
struct Tally {
    nilpotents: u64,
    roundtrip_failures: u64,
    stratum_violations: u64,
    left: Vec<u64>,
    right: Vec<u64>,
    image: Vec<u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.nilpotents += other.nilpotents;
        self.roundtrip_failures += other.roundtrip_failures;
        self.stratum_violations += other.stratum_violations;
        for (a, b) in self.left.iter_mut().zip(&other.left) {
            *a += b;
        }
        for (a, b) in self.right.iter_mut().zip(&other.right) {
            *a += b;
        }
        self.image.extend(other.image);
        self
    }
}

fn automorphism_dim(q: &Matrix) -> Option<usize> {
    fitting_decompose(q).ok().map(|fp| fp.v.dim())
}

/// One sweep over the operator indices in `range`. Each index is visited
/// once as a codomain element `Q` and once as a candidate nilpotent `T`
/// paired with every vector.
fn sweep(field: &Field, n: usize, range: Range<u64>, roundtrips: bool) -> Tally {
    let vectors = u64::from(field.order()).pow(n as u32);
    let mut tally = Tally {
        left: vec![0; n + 1],
        right: vec![0; n + 1],
        ..Default::default()
    };
    for i in range {
        let m = Matrix::from_index(field, n, n, i);

        match automorphism_dim(&m) {
            Some(d) => tally.right[d] += 1,
            None => tally.stratum_violations += 1,
        }
        if roundtrips {
            let ok = inverse(&m)
                .and_then(|(t, v)| forward(&t, &v))
                .map(|back| back == m);
            if ok != Ok(true) {
                tally.roundtrip_failures += 1;
            }
        }

        if !m.is_nilpotent().unwrap_or(false) {
            continue;
        }
        tally.nilpotents += 1;
        for j in 0..vectors {
            let v = Vector::from_index(field, n, j);
            let (d, q) = match (degree(&m, &v), forward(&m, &v)) {
                (Ok(d), Ok(q)) => (d, q),
                _ => {
                    tally.roundtrip_failures += 1;
                    continue;
                }
            };
            tally.left[d] += 1;
            if automorphism_dim(&q) != Some(d) {
                tally.stratum_violations += 1;
            }
            if roundtrips {
                if inverse(&q).ok() != Some((m.clone(), v)) {
                    tally.roundtrip_failures += 1;
                }
                tally.image.push(q.index());
            }
        }
    }
    tally
}

fn run_sweep(
    field: &Field,
    n: usize,
    config: &CensusConfig,
    roundtrips: bool,
) -> Result<(u64, Tally)> {
    let total = config.admit(operator_count(field, n))?;
    let tally = run_sharded(total, config.shards, |r| sweep(field, n, r, roundtrips))
        .into_iter()
        .fold(
            Tally {
                left: vec![0; n + 1],
                right: vec![0; n + 1],
                ..Default::default()
            },
            Tally::merge,
        );
    Ok((total, tally))
}

fn degree_rows(tally: &Tally) -> Vec<DegreeRow> {
    tally
        .left
        .iter()
        .zip(&tally.right)
        .enumerate()
        .map(|(k, (&left_count, &right_count))| DegreeRow {
            k,
            left_count,
            right_count,
        })
        .collect()
}

/// Both round trips over the whole domain and codomain, the image size of
/// the forward map, and the degree strata.
pub fn verify_theorem(field: &Field, n: usize, config: &CensusConfig) -> Result<CensusReport> {
    let start = Instant::now();
    let (total, tally) = run_sweep(field, n, config, true)?;

    let mut hit = vec![false; total as usize];
    for &i in &tally.image {
        hit[i as usize] = true;
    }
    let distinct = hit.iter().filter(|&&h| h).count() as u64;
    let expected = expected_nilpotents(field, n).unwrap_or(u128::MAX) as u64;
    let per_degree = degree_rows(&tally);

    let success = tally.nilpotents == expected
        && tally.roundtrip_failures == 0
        && distinct == total
        && tally.image.len() as u64 == total
        && tally.stratum_violations == 0
        && per_degree.iter().all(|r| r.left_count == r.right_count);

    let mut report = CensusReport {
        p: field.characteristic(),
        k: field.degree(),
        q: field.order(),
        n,
        total_operators: total,
        nilpotent_count: tally.nilpotents,
        expected_nilpotents: expected,
        nilpotent_probability: String::new(),
        roundtrip_failures: tally.roundtrip_failures,
        surjectivity_gap: total - distinct,
        stratum_violations: tally.stratum_violations,
        per_degree,
        success,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    report.nilpotent_probability = report.probability().to_string();
    Ok(report)
}

/// Stratum counts on both sides, plus the check that `forward` maps the
/// degree-`k` pairs onto operators with a `k`-dimensional automorphism part.
pub fn verify_degree_refinement(
    field: &Field,
    n: usize,
    config: &CensusConfig,
) -> Result<DegreeTable> {
    let start = Instant::now();
    let (_, tally) = run_sweep(field, n, config, false)?;
    let per_degree = degree_rows(&tally);
    let success =
        tally.stratum_violations == 0 && per_degree.iter().all(|r| r.left_count == r.right_count);
    Ok(DegreeTable {
        q: field.order(),
        n,
        per_degree,
        stratum_violations: tally.stratum_violations,
        success,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoyalReport {
    pub n: usize,
    pub functions: u64,
    pub eventually_constant: u64,
    pub expected_eventually_constant: u64,
    pub trees: u64,
    pub expected_trees: u64,
    pub pointed_trees: u64,
    pub roundtrip_failures: u64,
    pub surjectivity_gap: u64,
    pub success: bool,
    pub elapsed_ms: u64,
}

pub fn verify_joyal(n: usize, config: &CensusConfig) -> Result<JoyalReport> {
    let start = Instant::now();
    if n == 0 {
        return Err(Error::InvalidFunction("the domain must be nonempty".into()));
    }
    let total = config.admit(
        u32::try_from(n)
            .ok()
            .and_then(|e| (n as u128).checked_pow(e)),
    )?;

    let mut roundtrip_failures = 0;
    let mut eventually_constant = 0;
    for i in 0..total {
        let f = EndoFunction::from_index(n, i);
        if is_eventually_constant(&f) {
            eventually_constant += 1;
        }
        let (t, v, v2) = joyal_inverse(&f);
        if joyal_forward(&t, v, v2).ok().as_ref() != Some(&f) {
            roundtrip_failures += 1;
        }
    }

    let trees = distinct_trees(n)?;
    let mut image = BTreeSet::new();
    for t in &trees {
        for v in 0..n {
            for v2 in 0..n {
                match joyal_forward(t, v, v2) {
                    Ok(f) => {
                        if joyal_inverse(&f) != (t.clone(), v, v2) {
                            roundtrip_failures += 1;
                        }
                        image.insert(f.index());
                    }
                    Err(_) => roundtrip_failures += 1,
                }
            }
        }
    }

    let nn = n as u64;
    let expected_trees = if n == 1 { 1 } else { nn.pow(n as u32 - 2) };
    let expected_eventually_constant = nn.pow(n as u32 - 1);
    let trees = trees.len() as u64;
    let pointed_trees = trees * nn * nn;
    let surjectivity_gap = total - image.len() as u64;
    let success = trees == expected_trees
        && eventually_constant == expected_eventually_constant
        && eventually_constant == nn * trees
        && pointed_trees == total
        && roundtrip_failures == 0
        && surjectivity_gap == 0;

    Ok(JoyalReport {
        n,
        functions: total,
        eventually_constant,
        expected_eventually_constant,
        trees,
        expected_trees,
        pointed_trees,
        roundtrip_failures,
        surjectivity_gap,
        success,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[(&str, String)]) -> fmt::Result {
    for (label, value) in rows {
        writeln!(f, "{label:<24}{value:>16}")?;
    }
    Ok(())
}

fn write_degrees(f: &mut fmt::Formatter<'_>, rows: &[DegreeRow]) -> fmt::Result {
    writeln!(f, "{:>4}{:>18}{:>18}", "k", "deg_v(T) = k", "dim V(Q) = k")?;
    for r in rows {
        writeln!(f, "{:>4}{:>18}{:>18}", r.k, r.left_count, r.right_count)?;
    }
    Ok(())
}

fn verdict(ok: bool) -> String {
    if ok { "VERIFIED" } else { "FAILED" }.to_string()
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(
            f,
            &[
                ("field", format!("GF({}^{})", self.p, self.k)),
                ("n", self.n.to_string()),
                ("operators", self.total_operators.to_string()),
                ("nilpotents", self.nilpotent_count.to_string()),
                ("expected q^(n(n-1))", self.expected_nilpotents.to_string()),
                ("P(nilpotent)", self.nilpotent_probability.clone()),
                ("round-trip failures", self.roundtrip_failures.to_string()),
                ("surjectivity gap", self.surjectivity_gap.to_string()),
                ("stratum violations", self.stratum_violations.to_string()),
            ],
        )?;
        write_degrees(f, &self.per_degree)?;
        write_rows(
            f,
            &[
                ("elapsed ms", self.elapsed_ms.to_string()),
                ("result", verdict(self.success)),
            ],
        )
    }
}

impl fmt::Display for DegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &[("q", self.q.to_string()), ("n", self.n.to_string())])?;
        write_degrees(f, &self.per_degree)?;
        write_rows(
            f,
            &[
                ("stratum violations", self.stratum_violations.to_string()),
                ("elapsed ms", self.elapsed_ms.to_string()),
                ("result", verdict(self.success)),
            ],
        )
    }
}

impl fmt::Display for JoyalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(
            f,
            &[
                ("n", self.n.to_string()),
                ("functions", self.functions.to_string()),
                ("eventually constant", self.eventually_constant.to_string()),
                (
                    "expected n^(n-1)",
                    self.expected_eventually_constant.to_string(),
                ),
                ("trees", self.trees.to_string()),
                ("expected n^(n-2)", self.expected_trees.to_string()),
                ("pointed trees", self.pointed_trees.to_string()),
                ("round-trip failures", self.roundtrip_failures.to_string()),
                ("surjectivity gap", self.surjectivity_gap.to_string()),
                ("elapsed ms", self.elapsed_ms.to_string()),
                ("result", verdict(self.success)),
            ],
        )
    }
}
