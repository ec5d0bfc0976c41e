//! Parameters `(p, a, r)` and membership in the two partition families.
//!
//! Family A: every multiplicity `m` with `m = j*a (mod p)`, `0 <= j < p`,
//! satisfies `m >= j*M`. Family B: every part is divisible by `p` or is
//! congruent to `-s*M (mod L)` for some `1 <= s < p`. Here `M = p*r + a` and
//! `L = p*M`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    p: u64,
    a: u64,
    r: u64,
    a_inv: u64,
    block: u64,
    modulus: u64,
}

impl Params {
    /// Validates raw parameters and derives `a⁻¹ mod p`, `M` and `L`.
    pub fn new(p: i64, a: i64, r: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::Params(format!("p = {p} must be at least 2")));
        }
        if a < 1 || a >= p {
            return Err(Error::Params(format!("a = {a} must satisfy 1 <= a < p = {p}")));
        }
        if r < 0 {
            return Err(Error::Params(format!("r = {r} must be nonnegative")));
        }
        let g = a.gcd(&p);
        if g != 1 {
            return Err(Error::Params(format!("gcd(a, p) = gcd({a}, {p}) = {g}, expected 1")));
        }
        let (p, a, r) = (p as u64, a as u64, r as u64);
        let block = p
            .checked_mul(r)
            .and_then(|pr| pr.checked_add(a))
            .ok_or(Error::Overflow("block size p*r + a"))?;
        let modulus = p
            .checked_mul(block)
            .ok_or(Error::Overflow("modulus p*(p*r + a)"))?;
        Ok(Params {
            p,
            a,
            r,
            a_inv: mod_inverse(a, p),
            block,
            modulus,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Inverse of `a` modulo `p`, in `1..p`.
    pub fn a_inv(&self) -> u64 {
        self.a_inv
    }

    /// Block size `M = p*r + a`.
    pub fn block(&self) -> u64 {
        self.block
    }

    /// Modulus `L = p*p*r + p*a = p*M`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residue class `j` of a multiplicity: the unique `j < p` with `m = j*a (mod p)`.
    pub fn residue_class(&self, m: u64) -> u64 {
        // a_inv < p, so reduce m first to keep the product small.
        ((m % self.p) * self.a_inv) % self.p
    }

    /// Least nonnegative residues mod `L` of the allowed parts not divisible by `p`,
    /// namely `(p - s)*M mod L` for `s = 1..p`, in increasing order.
    pub fn allowed_residues(&self) -> Vec<u64> {
        let mut out: Vec<u64> = (1..self.p)
            .map(|s| ((self.p - s) * self.block) % self.modulus)
            .collect();
        out.sort_unstable();
        out
    }
}

/// Validates `(p, a, r)`; see [`Params::new`].
pub fn validate_params(p: i64, a: i64, r: i64) -> Result<Params> {
    Params::new(p, a, r)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let e = (a as i64).extended_gcd(&(p as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(p as i64) as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PartClass {
    /// Multiple of `M`.
    KBlock,
    /// Multiple of `p` whose quotient by `p` is not a multiple of `M`.
    GBlock,
    /// Never a part of a family-B partition.
    Forbidden,
}

pub fn classify_part(ps: &Params, n: u64) -> PartClass {
    debug_assert!(n >= 1);
    if n.is_multiple_of(ps.block) {
        PartClass::KBlock
    } else if n.is_multiple_of(ps.p) {
        PartClass::GBlock
    } else {
        PartClass::Forbidden
    }
}

pub fn is_allowed_multiplicity(ps: &Params, m: u64) -> bool {
    threshold_violation(ps, m).is_none()
}

/// `Some((j, j*M))` when `m` falls below the threshold of its residue class.
pub(crate) fn threshold_violation(ps: &Params, m: u64) -> Option<(u64, u64)> {
    let j = ps.residue_class(m);
    // j < p and M*p = L fits, so this cannot overflow.
    let threshold = j * ps.block;
    (m < threshold).then_some((j, threshold))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::Params(format!("unknown family {other:?}, expected A or B"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

pub fn in_a(ps: &Params, pt: &Partition) -> bool {
    pt.iter().all(|(_, m)| is_allowed_multiplicity(ps, m))
}

pub fn in_b(ps: &Params, pt: &Partition) -> bool {
    pt.iter()
        .all(|(part, _)| classify_part(ps, part) != PartClass::Forbidden)
}

pub fn in_family(ps: &Params, family: Family, pt: &Partition) -> bool {
    match family {
        Family::A => in_a(ps, pt),
        Family::B => in_b(ps, pt),
    }
}

/// First family-A violation, if any, as the error the bijection reports.
pub fn check_a(ps: &Params, pt: &Partition) -> Result<()> {
    // Ascending order so the smallest offending part is reported.
    let mut entries: Vec<_> = pt.iter().collect();
    entries.reverse();
    for (part, m) in entries {
        if let Some((class, threshold)) = threshold_violation(ps, m) {
            return Err(Error::MultiplicityViolation {
                part,
                multiplicity: m,
                class,
                threshold,
            });
        }
    }
    Ok(())
}

/// First family-B violation, if any, as the error the bijection reports.
pub fn check_b(ps: &Params, pt: &Partition) -> Result<()> {
    let mut entries: Vec<_> = pt.iter().collect();
    entries.reverse();
    for (part, _) in entries {
        if classify_part(ps, part) == PartClass::Forbidden {
            return Err(Error::ForbiddenPart {
                part,
                p: ps.p,
                block: ps.block,
                modulus: ps.modulus,
            });
        }
    }
    Ok(())
}
