//! Integer partitions in sparse multiplicity form.
//!
//! A [`Partition`] stores `part -> multiplicity` for the parts that actually
//! occur. Parts produced by the bijection can be large (they are scaled by the
//! block size), so a dense multiplicity vector is never materialized.
//!
//! Text form: comma-separated `P` or `P^M` tokens, strictly decreasing in `P`
//! on output, e.g. `2^2,1^3`. JSON form: `{"parts": [[P, M], ...]}`, again
//! sorted by decreasing `P`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    // Invariant: keys >= 1, values >= 1.
    parts: BTreeMap<u64, u64>,
    weight: u64,
}

impl Partition {
    /// The unique partition of zero.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a canonical partition from `(part, multiplicity)` pairs.
    ///
    /// Duplicate parts are merged and zero multiplicities dropped. A part of
    /// size zero is rejected.
    pub fn from_entries<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut parts = BTreeMap::new();
        for (part, mult) in entries {
            if part == 0 {
                return Err(Error::Domain("part 0 is not a positive integer".into()));
            }
            if mult == 0 {
                continue;
            }
            let slot = parts.entry(part).or_insert(0u64);
            *slot = slot
                .checked_add(mult)
                .ok_or(Error::Overflow("merged multiplicity"))?;
        }
        Self::from_map(parts)
    }

    /// Builds a partition from a list of parts in any order.
    pub fn from_parts<I>(parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        Self::from_entries(parts.into_iter().map(|p| (p, 1)))
    }

    /// Builds a partition from a map that may still hold zero multiplicities.
    pub(crate) fn from_map(mut parts: BTreeMap<u64, u64>) -> Result<Self> {
        parts.retain(|_, m| *m > 0);
        if parts.contains_key(&0) {
            return Err(Error::Domain("part 0 is not a positive integer".into()));
        }
        let mut weight = 0u64;
        for (&part, &mult) in &parts {
            let term = part
                .checked_mul(mult)
                .ok_or(Error::Overflow("partition weight"))?;
            weight = weight
                .checked_add(term)
                .ok_or(Error::Overflow("partition weight"))?;
        }
        Ok(Partition { parts, weight })
    }

    /// Multiplicity of part `i`; zero for absent parts.
    pub fn multiplicity(&self, i: u64) -> u64 {
        self.parts.get(&i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of distinct part sizes.
    pub fn distinct_parts(&self) -> usize {
        self.parts.len()
    }

    /// Total number of parts, counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.parts.values().sum()
    }

    pub fn largest_part(&self) -> Option<u64> {
        self.parts.keys().next_back().copied()
    }

    /// `(part, multiplicity)` pairs in strictly decreasing part order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.parts.iter().rev().map(|(&p, &m)| (p, m))
    }

    /// The parts as a weakly decreasing list, each repeated by its multiplicity.
    pub fn to_parts_vec(&self) -> Vec<u64> {
        self.iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p, m as usize))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (part, mult)) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            if mult == 1 {
                write!(f, "{part}")?;
            } else {
                write!(f, "{part}^{mult}")?;
            }
        }
        Ok(())
    }
}

fn parse_positive(token: &str, field: &str, whole: &str) -> Result<u64> {
    if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Syntax {
            token: whole.to_string(),
            reason: format!("{field:?} is not a decimal integer"),
        });
    }
    let value: u64 = field.parse().map_err(|_| Error::Syntax {
        token: whole.to_string(),
        reason: format!("{field:?} does not fit in 64 bits"),
    })?;
    if value == 0 {
        return Err(Error::Domain(format!(
            "{token} in {whole:?} must be a positive integer"
        )));
    }
    Ok(value)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut entries = Vec::new();
        for raw in text.split(',') {
            let token = raw.trim();
            if token.is_empty() {
                return Err(Error::Syntax {
                    token: raw.to_string(),
                    reason: "empty token".into(),
                });
            }
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (
                    parse_positive("part", p.trim(), token)?,
                    parse_positive("multiplicity", m.trim(), token)?,
                ),
                None => (parse_positive("part", token, token)?, 1),
            };
            entries.push((part, mult));
        }
        Partition::from_entries(entries)
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionJson {
    parts: Vec<(u64, u64)>,
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionJson {
            parts: self.iter().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PartitionJson::deserialize(deserializer)?;
        Partition::from_entries(raw.parts).map_err(serde::de::Error::custom)
    }
}
