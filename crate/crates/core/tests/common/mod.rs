#![allow(dead_code)]

use alcove_ideals::affine::{self, AffineElement};
use alcove_ideals::{RootId, RootSet, RootSystem};

pub fn rs(t: &str) -> RootSystem {
    RootSystem::parse(t).unwrap()
}

pub const RANK_LE_3: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];
pub const RANK_LE_4: [&str; 12] = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];
pub const RANK_LE_5: [&str; 16] = [
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "F4", "G2",
];

/// Exponents from the classification tables, independent of the root data.
pub fn table_exponents(t: &str) -> Vec<i64> {
    let (s, n) = t.split_at(1);
    let n: i64 = n.parse().unwrap();
    match s {
        "A" => (1..=n).collect(),
        "B" | "C" => (1..=n).map(|i| 2 * i - 1).collect(),
        "D" => {
            let mut e: Vec<i64> = (1..n).map(|i| 2 * i - 1).collect();
            e.push(n - 1);
            e.sort_unstable();
            e
        }
        "E" => match n {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        "F" => vec![1, 5, 7, 11],
        _ => vec![1, 5],
    }
}

/// `(1/|W|) ∏ (t + m_i)` from the exponent table, with `|W| = ∏ (m_i + 1)`.
pub fn table_count(t: &str, shift: i64) -> u128 {
    let e = table_exponents(t);
    let h = e.iter().max().unwrap() + 1;
    let num: u128 = e.iter().map(|&m| (h + shift + m) as u128).product();
    let w: u128 = e.iter().map(|&m| (m + 1) as u128).product();
    assert_eq!(num % w, 0);
    num / w
}

/// Best number of summands, over all multisets from `allowed` adding up to
/// `target`; `maximize` picks the largest, otherwise the smallest.
pub fn best_decomposition(rs: &RootSystem, allowed: &[RootId], target: &[i64], maximize: bool) -> Option<i64> {
    fn rec(rs: &RootSystem, allowed: &[RootId], target: &mut Vec<i64>, start: usize, maximize: bool) -> Option<i64> {
        if target.iter().all(|&x| x == 0) {
            return Some(0);
        }
        let mut best: Option<i64> = None;
        for (i, &r) in allowed.iter().enumerate().skip(start) {
            let c = &rs.root(r).coeffs;
            if c.iter().zip(target.iter()).any(|(a, b)| a > b) {
                continue;
            }
            for k in 0..c.len() {
                target[k] -= c[k];
            }
            if let Some(s) = rec(rs, allowed, target, i, maximize) {
                let v = s + 1;
                best = Some(match best {
                    None => v,
                    Some(b) if maximize => b.max(v),
                    Some(b) => b.min(v),
                });
            }
            for k in 0..c.len() {
                target[k] += c[k];
            }
        }
        best
    }
    rec(rs, allowed, &mut target.to_vec(), 0, maximize)
}

/// Plus statistic by exhaustive search: most elements of `I` summing to `α`.
pub fn plus_oracle(rs: &RootSystem, ideal: RootSet) -> Vec<i64> {
    let allowed = ideal.to_vec();
    (0..rs.n_pos())
        .map(|a| best_decomposition(rs, &allowed, &rs.root(a).coeffs, true).unwrap_or(0))
        .collect()
}

/// Minus statistic by exhaustive search: fewest elements of `Φ+ - I`
/// summing to `α`, minus one.
pub fn minus_oracle(rs: &RootSystem, ideal: RootSet) -> Vec<i64> {
    let allowed = RootSet::full(rs.n_pos()).minus(ideal).to_vec();
    (0..rs.n_pos())
        .map(|a| best_decomposition(rs, &allowed, &rs.root(a).coeffs, false).unwrap() - 1)
        .collect()
}

/// Alcove coordinates read off the rational interior point of `w(A)`.
pub fn floor_k(rs: &RootSystem, w: &AffineElement) -> Vec<i64> {
    let p = affine::alcove_point(rs, w);
    (0..rs.n_pos())
        .map(|a| {
            let v = affine::pair_point(rs, a, &p);
            assert!(!v.is_integer(), "alcove point lies on a wall");
            v.floor().to_integer()
        })
        .collect()
}

/// `Some(support)` when `w` is dominant, computed from the alcove point.
pub fn dominant_support(rs: &RootSystem, w: &AffineElement) -> Option<RootSet> {
    let k = floor_k(rs, w);
    if k.iter().any(|&x| x < 0) {
        return None;
    }
    Some((0..rs.n_pos()).filter(|&a| k[a] >= 1).collect())
}

/// All subsets of the positive roots that are upper ideals, by scanning
/// every subset (small ranks only).
pub fn ideals_by_scan(rs: &RootSystem) -> Vec<RootSet> {
    let n = rs.n_pos();
    assert!(n <= 20);
    let mut out = Vec::new();
    for mask in 0u128..(1u128 << n) {
        let s = RootSet(mask);
        let closed = s.iter().all(|a| (0..n).all(|b| rs.add(a, b).is_none_or(|c| s.contains(c))));
        if closed {
            out.push(s);
        }
    }
    out
}
