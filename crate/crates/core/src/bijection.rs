//! The bijection between family A and family B and its inverse.
//!
//! Each multiplicity `h` of a family-A partition splits uniquely as
//! `h = M*v + g` with `v = a⁻¹h mod p` and `g` a nonnegative multiple of `p`.
//! The image has, for every `N >= 1`,
//!
//! ```text
//! d_N = v_{N/M} + g_N    if M | N
//! d_N = g_{N/p} / p      if p | N and M ∤ N/p
//! d_N = 0                otherwise
//! ```
//!
//! which is the part-wise reading of the three index families of the map.
//! Only parts present in the input are visited.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{check_a, check_b, classify_part, threshold_violation, PartClass, Params};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MultiplicityDecomposition {
    /// `a⁻¹h mod p`, in `0..p`.
    pub v: u64,
    /// `M*v`.
    pub k: u64,
    /// `h - k`, a nonnegative multiple of `p`.
    pub g: u64,
}

impl MultiplicityDecomposition {
    pub fn multiplicity(&self) -> u64 {
        self.k + self.g
    }
}

pub fn decompose_multiplicity(ps: &Params, h: u64) -> Result<MultiplicityDecomposition> {
    if let Some((class, threshold)) = threshold_violation(ps, h) {
        return Err(Error::DisallowedMultiplicity {
            multiplicity: h,
            class,
            threshold,
        });
    }
    let v = ps.residue_class(h);
    let k = v * ps.block();
    let g = h - k;
    debug_assert_eq!(g % ps.p(), 0, "g = {g} not divisible by p");
    Ok(MultiplicityDecomposition { v, k, g })
}

fn bump(map: &mut BTreeMap<u64, u64>, part: u64, by: u64) -> Result<()> {
    if by == 0 {
        return Ok(());
    }
    let slot = map.entry(part).or_insert(0);
    *slot = slot.checked_add(by).ok_or(Error::Overflow("image multiplicity"))?;
    Ok(())
}

/// Maps a family-A partition to its family-B image.
pub fn forward(ps: &Params, lam: &Partition) -> Result<Partition> {
    check_a(ps, lam)?;
    let (p, block) = (ps.p(), ps.block());
    let mut image = BTreeMap::new();
    for (i, h) in lam.iter() {
        let dec = decompose_multiplicity(ps, h)?;
        if dec.v > 0 {
            let part = block.checked_mul(i).ok_or(Error::Overflow("image part M*i"))?;
            bump(&mut image, part, dec.v)?;
        }
        if dec.g > 0 {
            if i % block == 0 {
                bump(&mut image, i, dec.g)?;
            } else {
                let part = p.checked_mul(i).ok_or(Error::Overflow("image part p*i"))?;
                bump(&mut image, part, dec.g / p)?;
            }
        }
    }
    let mu = Partition::from_map(image)?;
    debug_assert!(crate::family::in_b(ps, &mu));
    debug_assert_eq!(mu.weight(), lam.weight());
    Ok(mu)
}

/// Maps a family-B partition back to its family-A preimage.
pub fn inverse(ps: &Params, mu: &Partition) -> Result<Partition> {
    check_b(ps, mu)?;
    let (p, block) = (ps.p(), ps.block());
    // part -> (v, g)
    let mut split: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
    for (n, d) in mu.iter() {
        match classify_part(ps, n) {
            PartClass::KBlock => {
                let rem = d % p;
                if rem > 0 {
                    split.entry(n / block).or_default().0 += rem;
                }
                if d - rem > 0 {
                    split.entry(n).or_default().1 += d - rem;
                }
            }
            PartClass::GBlock => {
                let g = p.checked_mul(d).ok_or(Error::Overflow("preimage multiplicity"))?;
                split.entry(n / p).or_default().1 += g;
            }
            PartClass::Forbidden => unreachable!("checked by check_b"),
        }
    }
    let mut preimage = BTreeMap::new();
    for (i, (v, g)) in split {
        let h = block
            .checked_mul(v)
            .and_then(|k| k.checked_add(g))
            .ok_or(Error::Overflow("preimage multiplicity"))?;
        preimage.insert(i, h);
    }
    let lam = Partition::from_map(preimage)?;
    debug_assert!(crate::family::in_a(ps, &lam));
    debug_assert_eq!(lam.weight(), mu.weight());
    Ok(lam)
}

/// The `(p, a, r) = (2, 1, 1)` map written directly from its own residue
/// table mod 6, independent of [`forward`]:
///
/// ```text
/// d_{6t+1} = d_{6t+5} = 0
/// d_{6t+2} = g_{3t+1} / 2         d_{6t+4} = g_{3t+2} / 2
/// d_{6t+3} = k_{2t+1}/3 + g_{6t+3} d_{6t+6} = k_{2t+2}/3 + g_{6t+6}
/// ```
///
/// with `h_i = k_i + g_i`, `k_i ∈ {0, 3}` and `g_i` even.
pub fn aepr_forward(lam: &Partition) -> Result<Partition> {
    let mut k = BTreeMap::new();
    let mut g = BTreeMap::new();
    for (i, h) in lam.iter() {
        if h == 1 {
            return Err(Error::MultiplicityViolation {
                part: i,
                multiplicity: 1,
                class: 1,
                threshold: 3,
            });
        }
        let (ki, gi) = if h % 2 == 1 { (3, h - 3) } else { (0, h) };
        k.insert(i, ki);
        g.insert(i, gi);
    }
    let kk = |i: u64| k.get(&i).copied().unwrap_or(0);
    let gg = |i: u64| g.get(&i).copied().unwrap_or(0);

    // Every index that can carry a nonzero d lies below 6 * (largest part + 1).
    let bound = lam.largest_part().map_or(0, |l| 6 * (l + 1));
    let mut d = BTreeMap::new();
    let mut t = 0u64;
    while 6 * t < bound {
        d.insert(6 * t + 2, gg(3 * t + 1) / 2);
        d.insert(6 * t + 4, gg(3 * t + 2) / 2);
        d.insert(6 * t + 3, kk(2 * t + 1) / 3 + gg(6 * t + 3));
        d.insert(6 * t + 6, kk(2 * t + 2) / 3 + gg(6 * t + 6));
        t += 1;
    }
    Partition::from_map(d)
}
