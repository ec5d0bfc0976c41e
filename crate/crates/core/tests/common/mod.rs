//! Test-only literal evaluation of the map's index families.
//!
//! These walk the three families `t = 0, 1, 2, ...` exactly as written in
//! their index form, up to a bound past the largest relevant index, and never
//! call into the production map.

#![allow(dead_code)]

use std::collections::BTreeMap;

use partition_bijection::{Params, Partition};

pub const GRID: [(i64, i64, i64); 10] = [
    (2, 1, 0),
    (2, 1, 1),
    (2, 1, 2),
    (2, 1, 3),
    (3, 1, 1),
    (3, 2, 0),
    (3, 2, 1),
    (4, 1, 1),
    (4, 3, 1),
    (5, 2, 1),
];

pub fn grid() -> Vec<Params> {
    GRID.iter()
        .map(|&(p, a, r)| Params::new(p, a, r).unwrap())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexFamily {
    /// `d_{Lt + pj - ia} = 0`.
    Zero,
    /// `d_{Lt + pj} = g_{Mt + j} / p`.
    G,
    /// `d_{Lt + (p-j)M} = k_{pt + p - j} / M + g_{Lt + (p-j)M}`.
    KG,
}

/// Every positive index produced by the three families with `L*t <= upto`,
/// tagged by family, in generation order (duplicates kept).
pub fn index_families(ps: &Params, upto: u64) -> Vec<(u64, IndexFamily)> {
    let (p, a, r) = (ps.p() as i64, ps.a() as i64, ps.r() as i64);
    let (m, l) = (ps.block() as i64, ps.modulus() as i64);
    let mut out = Vec::new();
    let mut t = 0i64;
    while l * t <= upto as i64 {
        for i in 1..p {
            for j in 1..=m {
                if j == (p - i) * r + a {
                    continue;
                }
                let idx = l * t + p * j - i * a;
                if idx > 0 {
                    out.push((idx as u64, IndexFamily::Zero));
                }
            }
        }
        for j in 1..m {
            out.push(((l * t + p * j) as u64, IndexFamily::G));
        }
        for j in 1..=p {
            let idx = l * t + (p - j) * m;
            if idx > 0 {
                out.push((idx as u64, IndexFamily::KG));
            }
        }
        t += 1;
    }
    out
}

/// `(k_i, g_i)` for each part, computed straight from the definition
/// `v = a⁻¹h mod p`, `k = M*v`, `g = h - k`.
fn split_multiplicities(ps: &Params, lam: &Partition) -> (BTreeMap<u64, u64>, BTreeMap<u64, u64>) {
    let mut k = BTreeMap::new();
    let mut g = BTreeMap::new();
    for (i, h) in lam.iter() {
        let v = (ps.a_inv() * h) % ps.p();
        let ki = ps.block() * v;
        assert!(ki <= h, "h_{i} = {h} below k = {ki}");
        assert_eq!((h - ki) % ps.p(), 0);
        k.insert(i, ki);
        g.insert(i, h - ki);
    }
    (k, g)
}

fn get(map: &BTreeMap<u64, u64>, i: u64) -> u64 {
    map.get(&i).copied().unwrap_or(0)
}

/// Forward map by literal evaluation of the three index families.
///
/// Panics if an index is assigned twice or a division is inexact.
pub fn literal_forward(ps: &Params, lam: &Partition) -> Partition {
    let (k, g) = split_multiplicities(ps, lam);
    let (p, m, l) = (ps.p(), ps.block(), ps.modulus());
    let largest = lam.largest_part().unwrap_or(0);
    let upto = p.max(m) * largest + l;

    let mut d: BTreeMap<u64, u64> = BTreeMap::new();
    let mut assign = |idx: u64, value: u64| {
        assert!(d.insert(idx, value).is_none(), "index {idx} assigned twice");
    };
    for (idx, fam) in index_families(ps, upto) {
        let value = match fam {
            IndexFamily::Zero => 0,
            IndexFamily::G => {
                // idx = L*t + p*j with 1 <= j < M
                let (t, j) = (idx / l, (idx % l) / p);
                let gi = get(&g, m * t + j);
                assert_eq!(gi % p, 0);
                gi / p
            }
            IndexFamily::KG => {
                // idx = L*t + (p - j)*M with 1 <= j <= p
                let (t, pj) = (idx / l, (idx % l) / m);
                let ki = get(&k, p * t + pj);
                assert_eq!(ki % m, 0);
                ki / m + get(&g, idx)
            }
        };
        assign(idx, value);
    }
    Partition::from_entries(d).unwrap()
}

/// Inverse map by the literal case table on `D mod p`.
pub fn literal_inverse(ps: &Params, mu: &Partition) -> Partition {
    let (p, m, l) = (ps.p(), ps.block(), ps.modulus());
    let d = |i: u64| mu.multiplicity(i);
    let t_max = mu.largest_part().unwrap_or(0) / l + 1;

    let mut k: BTreeMap<u64, u64> = BTreeMap::new();
    let mut g: BTreeMap<u64, u64> = BTreeMap::new();
    for t in 0..=t_max {
        for j in 1..m {
            let gi = p * d(l * t + p * j);
            if gi > 0 {
                assert!(g.insert(m * t + j, gi).is_none());
            }
        }
        for j in 1..=p {
            let idx = l * t + (p - j) * m;
            if idx == 0 {
                continue;
            }
            let big_d = d(idx);
            // D = c (mod p) gives g = D - c and k = c*M, for c = 0, ..., p-1.
            let (gi, ki) = (0..p)
                .find(|&c| big_d % p == c)
                .map(|c| (big_d - c, c * m))
                .unwrap();
            if gi > 0 {
                assert!(g.insert(idx, gi).is_none());
            }
            if ki > 0 {
                assert!(k.insert(p * t + p - j, ki).is_none());
            }
        }
    }
    let mut h = k;
    for (i, gi) in g {
        *h.entry(i).or_insert(0) += gi;
    }
    Partition::from_entries(h).unwrap()
}

/// Partition counts `p(0..=n_max)` from Euler's pentagonal recurrence.
pub fn pentagonal_counts(n_max: usize) -> Vec<u64> {
    let mut p = vec![0i64; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut acc = 0i64;
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += sign * p[n - g2];
            }
            k += 1;
        }
        p[n] = acc;
    }
    p.into_iter().map(|x| x as u64).collect()
}
