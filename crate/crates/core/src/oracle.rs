//! Exhaustive enumeration of partitions and brute-force verification of the
//! bijection on complete families.

use std::collections::HashSet;

use serde::Serialize;

use crate::bijection::{forward, inverse};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::family::{in_a, in_b, in_family, Family, Params};
use crate::partition::Partition;

/// Default upper bound on `n` for exhaustive enumeration.
pub const DEFAULT_N_CAP: u64 = 60;

/// All partitions of `n` in decreasing lexicographic order of their part lists.
#[derive(Debug, Clone)]
pub struct Partitions {
    // Weakly decreasing; `None` once exhausted.
    current: Option<Vec<u64>>,
}

impl Partitions {
    fn new(n: u64) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }

    fn advance(parts: &mut Vec<u64>) -> bool {
        // Rightmost part that can still be decreased.
        let Some(k) = parts.iter().rposition(|&x| x > 1) else {
            return false;
        };
        let ones = (parts.len() - k - 1) as u64;
        let x = parts[k] - 1;
        parts.truncate(k);
        parts.push(x);
        let mut rest = ones + 1;
        while rest >= x {
            parts.push(x);
            rest -= x;
        }
        if rest > 0 {
            parts.push(rest);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.as_mut()?;
        let out = Partition::from_parts(parts.iter().copied())
            .expect("enumerated parts are positive and their sum is n");
        if !Self::advance(parts) {
            self.current = None;
        }
        Some(out)
    }
}

fn check_cap(n: u64, cap: u64) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "n",
            value: n,
            cap,
        });
    }
    Ok(())
}

pub fn enumerate_partitions(n: u64, cap: u64) -> Result<Partitions> {
    check_cap(n, cap)?;
    Ok(Partitions::new(n))
}

pub fn count_family(ps: &Params, family: Family, n: u64, cap: u64) -> Result<u64> {
    Ok(enumerate_partitions(n, cap)?
        .filter(|pt| in_family(ps, family, pt))
        .count() as u64)
}

/// Family counts for every `n` in `0..=n_max`.
pub fn count_family_table(
    ps: &Params,
    family: Family,
    n_max: u64,
    cap: u64,
    exec: Execution,
) -> Result<Vec<u64>> {
    check_cap(n_max, cap)?;
    Ok(exec.map((0..=n_max).collect(), |n| {
        Partitions::new(n)
            .filter(|pt| in_family(ps, family, pt))
            .count() as u64
    }))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct WeightRecord {
    pub n: u64,
    pub count_a: u64,
    pub count_b: u64,
    /// `inverse(forward(x)) != x` on family A, plus `forward(inverse(y)) != y` on family B.
    pub roundtrip_failures: u64,
    pub weight_failures: u64,
    /// Map errors, or images that land outside the target family.
    pub membership_failures: u64,
    /// Family-A partitions sharing an image with another one.
    pub collision_failures: u64,
    /// Family-B partitions that are not the image of anything.
    pub missed_images: u64,
}

impl WeightRecord {
    pub fn passed(&self) -> bool {
        self.count_a == self.count_b
            && self.roundtrip_failures == 0
            && self.weight_failures == 0
            && self.membership_failures == 0
            && self.collision_failures == 0
            && self.missed_images == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub params: Params,
    pub n_max: u64,
    pub per_n: Vec<WeightRecord>,
    pub pass: bool,
}

#[derive(Default)]
struct Tally {
    roundtrip: u64,
    weight: u64,
    membership: u64,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.roundtrip += other.roundtrip;
        self.weight += other.weight;
        self.membership += other.membership;
        self
    }
}

fn check_forward(ps: &Params, lam: &Partition) -> (Tally, Option<Partition>) {
    let mut t = Tally::default();
    let mu = match forward(ps, lam) {
        Ok(mu) => mu,
        Err(_) => {
            t.membership += 1;
            return (t, None);
        }
    };
    if !in_b(ps, &mu) {
        t.membership += 1;
    }
    if mu.weight() != lam.weight() {
        t.weight += 1;
    }
    if inverse(ps, &mu).as_ref() != Ok(lam) {
        t.roundtrip += 1;
    }
    (t, Some(mu))
}

fn check_inverse(ps: &Params, mu: &Partition) -> Tally {
    let mut t = Tally::default();
    let lam = match inverse(ps, mu) {
        Ok(lam) => lam,
        Err(_) => {
            t.membership += 1;
            return t;
        }
    };
    if !in_a(ps, &lam) {
        t.membership += 1;
    }
    if lam.weight() != mu.weight() {
        t.weight += 1;
    }
    if forward(ps, &lam).as_ref() != Ok(mu) {
        t.roundtrip += 1;
    }
    t
}

fn verify_weight(ps: &Params, n: u64, exec: Execution) -> WeightRecord {
    let all: Vec<Partition> = Partitions::new(n).collect();
    let (fam_a, fam_b): (Vec<_>, Vec<_>) = (
        all.iter().filter(|x| in_a(ps, x)).cloned().collect(),
        all.iter().filter(|x| in_b(ps, x)).cloned().collect(),
    );

    let forward_results = exec.map(fam_a.clone(), |lam| check_forward(ps, &lam));
    let inverse_results = exec.map(fam_b.clone(), |mu| check_inverse(ps, &mu));

    let mut images = Vec::with_capacity(forward_results.len());
    let mut tally = Tally::default();
    for (t, mu) in forward_results {
        tally = tally.merge(t);
        images.extend(mu);
    }
    for t in inverse_results {
        tally = tally.merge(t);
    }

    let distinct: HashSet<&Partition> = images.iter().collect();
    let collisions = (images.len() - distinct.len()) as u64;
    let hit = fam_b.iter().filter(|y| distinct.contains(y)).count() as u64;

    WeightRecord {
        n,
        count_a: fam_a.len() as u64,
        count_b: fam_b.len() as u64,
        roundtrip_failures: tally.roundtrip,
        weight_failures: tally.weight,
        membership_failures: tally.membership,
        collision_failures: collisions,
        missed_images: fam_b.len() as u64 - hit,
    }
}

/// Runs the bijection over every family-A and family-B partition of each
/// `n <= n_max` and tallies every kind of failure.
pub fn verify_bijection(ps: &Params, n_max: u64, cap: u64) -> Result<VerificationReport> {
    verify_bijection_with(ps, n_max, cap, Execution::default())
}

pub fn verify_bijection_with(
    ps: &Params,
    n_max: u64,
    cap: u64,
    exec: Execution,
) -> Result<VerificationReport> {
    check_cap(n_max, cap)?;
    let per_n = exec.map((0..=n_max).collect(), |n| verify_weight(ps, n, exec));
    let pass = per_n.iter().all(WeightRecord::passed);
    Ok(VerificationReport {
        params: *ps,
        n_max,
        per_n,
        pass,
    })
}
