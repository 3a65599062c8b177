//! Irreducible crystallographic root systems built from their Cartan
//! matrices.
//!
//! Convention: `cartan[i][j] = <alpha_j, alpha_i^vee>`, i.e. row `i` holds the
//! pairings of all simple roots against the simple coroot `i`. Roots are
//! stored in the simple-root basis and coweights in the simple-coroot basis,
//! and every pairing between the two goes through [`RootSystem::pair`].
//!
//! Positive roots are ordered by height, then by descending lexicographic
//! order of their coefficient vectors, so the simple roots occupy indices
//! `0..n` in their Bourbaki order. Negative roots follow: the negative of
//! positive root `i` has index `i + N`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootset::RootSet;

/// Index into [`RootSystem::roots`].
pub type RootId = usize;

const NO_ROOT: u16 = u16::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// An irreducible Cartan type such as `A2` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<CartanType> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 3,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        // RootSet is a u128, which caps the number of positive roots.
        let n_pos = match series {
            Series::A => rank * (rank + 1) / 2,
            Series::B | Series::C => rank * rank,
            Series::D => rank * (rank - 1).max(1),
            _ => 0,
        };
        if !ok || n_pos > 128 {
            return Err(Error::InvalidType(format!("{}{}", series.letter(), rank)));
        }
        Ok(CartanType { series, rank })
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CartanType> {
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.trim().chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = digits.parse().map_err(|_| bad())?;
        CartanType::new(series, rank).map_err(|_| bad())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A root in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

/// An element of the coroot lattice, in the simple-coroot basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Coweight {
        Coweight(vec![0; rank])
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, m: i64) -> Coweight {
        Coweight(self.0.iter().map(|a| a * m).collect())
    }
}

/// Immutable tables for one irreducible root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Vec<i64>, RootId>,
    add_table: Vec<u16>,
    coroots: Vec<Coweight>,
    long: Vec<bool>,
    theta: RootId,
    exponents: Vec<i64>,
    coxeter_number: i64,
    weyl_order: u128,
    above: Vec<RootSet>,
    below: Vec<RootSet>,
    splits: Vec<Vec<(RootId, RootId)>>,
}

fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match ty.series {
        Series::A | Series::B | Series::C | Series::F | Series::G => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Series::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Series::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match ty.series {
        // alpha_n short
        Series::B => c[n - 1][n - 2] = -2,
        // alpha_n long
        Series::C => c[n - 2][n - 1] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Series::F => c[2][1] = -2,
        // alpha_1 short, alpha_2 long
        Series::G => c[0][1] = -3,
        _ => {}
    }
    c
}

/// Integers `d_i` with `d_i * cartan[i][j] == d_j * cartan[j][i]`; `d_i` is
/// half the squared length of `alpha_i` up to a common scale.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    use num_rational::Ratio;
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(d[i].unwrap() * Ratio::new(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let l = d.iter().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    d.iter().map(|x| (x * l).to_integer()).collect()
}

impl RootSystem {
    pub fn new(ty: CartanType) -> RootSystem {
        let n = ty.rank;
        let cartan = cartan_matrix(ty);
        let symmetrizer = symmetrizer(&cartan);

        // Positive roots by height: alpha + alpha_i is a root iff the
        // alpha_i-string through alpha extends upward, i.e. p - <alpha, alpha_i^vee> > 0.
        let pair_simple = |coeffs: &[i64], i: usize| -> i64 {
            (0..n).map(|j| coeffs[j] * cartan[i][j]).sum()
        };
        let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut layers: Vec<Vec<Vec<i64>>> = Vec::new();
        let simples: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        for s in &simples {
            known.insert(s.clone(), ());
        }
        layers.push(simples);
        loop {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in layers.last().unwrap() {
                for i in 0..n {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if known.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pair_simple(beta, i) > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains_key(&up) {
                            known.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }

        let mut pos: Vec<Vec<i64>> = layers.into_iter().flatten().collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = pos.len();
        let mut roots: Vec<Root> = pos.iter().map(|c| Root { coeffs: c.clone() }).collect();
        roots.extend(pos.iter().map(|c| Root {
            coeffs: c.iter().map(|x| -x).collect(),
        }));
        let index: HashMap<Vec<i64>, RootId> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();

        let total = roots.len();
        let mut add_table = vec![NO_ROOT; total * total];
        for a in 0..total {
            for b in 0..total {
                let s: Vec<i64> = roots[a]
                    .coeffs
                    .iter()
                    .zip(&roots[b].coeffs)
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(&id) = index.get(&s) {
                    add_table[a * total + b] = id as u16;
                }
            }
        }

        // alpha^vee = sum_j (c_j d_j / L) alpha_j^vee with L = (alpha, alpha)/2.
        let norm = |c: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += c[i] * c[j] * symmetrizer[i] * cartan[i][j];
                }
            }
            s / 2
        };
        let max_norm = (0..n).map(|i| symmetrizer[i]).max().unwrap();
        let mut coroots = Vec::with_capacity(total);
        let mut long = Vec::with_capacity(total);
        for r in &roots {
            let l = norm(&r.coeffs);
            coroots.push(Coweight(
                (0..n)
                    .map(|j| {
                        debug_assert_eq!(r.coeffs[j] * symmetrizer[j] % l, 0);
                        r.coeffs[j] * symmetrizer[j] / l
                    })
                    .collect(),
            ));
            long.push(l == max_norm);
        }

        let theta = n_pos - 1;
        let coxeter_number = roots[theta].height() + 1;
        let mut exponents = exponents_from_height_counts(&roots[..n_pos]);
        exponents.sort_unstable();
        let weyl_order = exponents.iter().map(|&m| (m + 1) as u128).product();

        let mut above = vec![RootSet::EMPTY; n_pos];
        let mut below = vec![RootSet::EMPTY; n_pos];
        for a in 0..n_pos {
            for b in 0..n_pos {
                if a != b && roots[a].coeffs.iter().zip(&roots[b].coeffs).all(|(x, y)| y >= x) {
                    above[a] = above[a].with(b);
                    below[b] = below[b].with(a);
                }
            }
        }
        let mut splits = vec![Vec::new(); n_pos];
        for a in 0..n_pos {
            for b in a..n_pos {
                let s = add_table[a * total + b];
                if s != NO_ROOT {
                    splits[s as usize].push((a, b));
                }
            }
        }

        RootSystem {
            ty,
            cartan,
            symmetrizer,
            roots,
            n_pos,
            index,
            add_table,
            coroots,
            long,
            theta,
            exponents,
            coxeter_number,
            weyl_order,
            above,
            below,
            splits,
        }
    }

    /// Build from a series letter and rank, e.g. `('E', 8)`.
    pub fn build(series: char, rank: usize) -> Result<RootSystem> {
        let s = Series::from_letter(series)
            .ok_or_else(|| Error::InvalidType(format!("{series}{rank}")))?;
        Ok(RootSystem::new(CartanType::new(s, rank)?))
    }

    pub fn parse(ty: &str) -> Result<RootSystem> {
        Ok(RootSystem::new(ty.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Number of positive roots.
    pub fn n_pos(&self) -> usize {
        self.n_pos
    }

    /// Number of roots, positive and negative.
    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn all_positive(&self) -> RootSet {
        RootSet::full(self.n_pos)
    }

    /// Positive-root bitset of the simple roots.
    pub fn simple_set(&self) -> RootSet {
        RootSet::full(self.rank())
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.n_pos
    }

    pub fn is_simple(&self, id: RootId) -> bool {
        id < self.rank()
    }

    pub fn neg(&self, id: RootId) -> RootId {
        if id < self.n_pos {
            id + self.n_pos
        } else {
            id - self.n_pos
        }
    }

    /// The positive root among `±id`.
    pub fn abs(&self, id: RootId) -> RootId {
        id % self.n_pos
    }

    pub fn height(&self, id: RootId) -> i64 {
        self.roots[id].height()
    }

    pub fn is_long(&self, id: RootId) -> bool {
        self.long[id]
    }

    pub fn lookup(&self, coeffs: &[i64]) -> Option<RootId> {
        self.index.get(coeffs).copied()
    }

    /// `alpha + beta` if it is a root.
    pub fn add(&self, a: RootId, b: RootId) -> Option<RootId> {
        let s = self.add_table[a * self.roots.len() + b];
        (s != NO_ROOT).then_some(s as RootId)
    }

    /// `alpha ≺ beta` in the root poset: distinct and `beta - alpha >= 0`.
    pub fn poset_less(&self, a: RootId, b: RootId) -> bool {
        a != b
            && self.roots[a]
                .coeffs
                .iter()
                .zip(&self.roots[b].coeffs)
                .all(|(x, y)| y >= x)
    }

    /// Positive roots strictly above positive root `a`.
    pub fn above(&self, a: RootId) -> RootSet {
        self.above[a]
    }

    /// Positive roots strictly below positive root `a`.
    pub fn below(&self, a: RootId) -> RootSet {
        self.below[a]
    }

    /// Unordered pairs of positive roots `(b, c)`, `b <= c`, with `b + c = a`.
    pub fn splits(&self, a: RootId) -> &[(RootId, RootId)] {
        &self.splits[a]
    }

    /// The exact pairing `<alpha, lambda>` of a root (simple-root
    /// coordinates) with a coweight (simple-coroot coordinates).
    pub fn pair(&self, coeffs: &[i64], coords: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if coords[i] == 0 {
                continue;
            }
            let row = &self.cartan[i];
            let mut t = 0;
            for j in 0..n {
                t += row[j] * coeffs[j];
            }
            s += coords[i] * t;
        }
        s
    }

    pub fn pairing(&self, id: RootId, lambda: &Coweight) -> i64 {
        self.pair(&self.roots[id].coeffs, &lambda.0)
    }

    /// `<alpha, alpha_i^vee>`.
    pub fn pair_simple_coroot(&self, id: RootId, i: usize) -> i64 {
        let row = &self.cartan[i];
        self.roots[id]
            .coeffs
            .iter()
            .zip(row)
            .map(|(c, a)| c * a)
            .sum()
    }

    /// `<alpha_i, lambda>`: the fundamental-coweight coordinates of `lambda`.
    pub fn fundamental_coords(&self, lambda: &Coweight) -> Vec<i64> {
        (0..self.rank()).map(|i| self.pairing(i, lambda)).collect()
    }

    pub fn coroot(&self, id: RootId) -> &Coweight {
        &self.coroots[id]
    }

    pub fn theta(&self) -> RootId {
        self.theta
    }

    /// Coefficients `c_alpha` of the highest root in the simple roots.
    pub fn theta_coeffs(&self) -> &[i64] {
        &self.roots[self.theta].coeffs
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// Exponents recomputed as the dual partition of the height distribution.
    pub fn exponents_from_heights(&self) -> Vec<i64> {
        let mut e = exponents_from_height_counts(self.positive_roots());
        e.sort_unstable();
        e
    }

    /// Positive roots of height `k`, or negative roots of height `k` when
    /// `k < 0`.
    pub fn roots_of_height(&self, k: i64) -> Vec<RootId> {
        (0..self.n_roots()).filter(|&i| self.height(i) == k).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "series": self.ty.series.letter().to_string(),
            "rank": self.rank(),
            "cartan": self.cartan,
            "positive_roots": self.positive_roots(),
            "theta": self.theta_coeffs(),
            "exponents": self.exponents,
            "h": self.coxeter_number,
            "weyl_order": self.weyl_order as u64,
        })
    }
}

fn exponents_from_height_counts(pos: &[Root]) -> Vec<i64> {
    let max_h = pos.iter().map(Root::height).max().unwrap_or(0) as usize;
    let mut counts = vec![0usize; max_h + 1];
    for r in pos {
        counts[r.height() as usize] += 1;
    }
    let rank = counts.get(1).copied().unwrap_or(0);
    // dual partition: exponent j-th = #{heights k : counts[k] >= j}
    (1..=rank)
        .map(|j| counts[1..].iter().filter(|&&c| c >= j).count() as i64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    fn id(rs: &RootSystem, c: &[i64]) -> RootId {
        rs.lookup(c).unwrap()
    }

    #[test]
    fn small_systems() {
        let a2 = rs("A2");
        assert_eq!(a2.n_pos(), 3);
        assert_eq!(a2.coxeter_number(), 3);
        assert_eq!(a2.exponents(), &[1, 2]);
        assert_eq!(a2.weyl_order(), 6);

        let b2 = rs("B2");
        assert_eq!(b2.n_pos(), 4);
        assert_eq!(b2.theta_coeffs(), &[1, 2]);
        assert_eq!(b2.exponents(), &[1, 3]);

        let g2 = rs("G2");
        assert_eq!(g2.n_pos(), 6);
        assert_eq!(g2.coxeter_number(), 6);
        assert_eq!(g2.exponents(), &[1, 5]);
        assert_eq!(g2.theta_coeffs(), &[3, 2]);
    }

    #[test]
    fn parse_errors() {
        for bad in ["Z9", "A0", "B1", "C2", "D3", "E5", "E9", "F3", "G3", "", "A", "A-1", "A 2"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
        assert_eq!("e8".parse::<CartanType>().unwrap().to_string(), "E8");
    }

    #[test]
    fn known_invariants_for_all_types() {
        // (type, |Phi+|, h, |W|)
        let table: &[(&str, usize, i64, u128)] = &[
            ("A1", 1, 2, 2),
            ("A5", 15, 6, 720),
            ("B3", 9, 6, 48),
            ("C4", 16, 8, 384),
            ("D4", 12, 6, 192),
            ("D5", 20, 8, 1920),
            ("E6", 36, 12, 51840),
            ("E7", 63, 18, 2903040),
            ("E8", 120, 30, 696729600),
            ("F4", 24, 12, 1152),
        ];
        for &(t, npos, h, w) in table {
            let r = rs(t);
            assert_eq!(r.n_pos(), npos, "{t}");
            assert_eq!(r.coxeter_number(), h, "{t}");
            assert_eq!(r.weyl_order(), w, "{t}");
            assert_eq!(r.n_pos() as i64 * 2, r.rank() as i64 * h);
            assert_eq!(r.exponents().iter().sum::<i64>(), r.n_pos() as i64);
            let e = r.exponents();
            for i in 0..e.len() {
                assert_eq!(e[i] + e[e.len() - 1 - i], h, "{t}");
            }
            assert_eq!(1 + r.theta_coeffs().iter().sum::<i64>(), h, "{t}");
            assert_eq!(r.exponents_from_heights(), r.exponents());
        }
    }

    #[test]
    fn additions_and_order() {
        let a2 = rs("A2");
        assert_eq!(a2.add(0, 1), Some(a2.theta()));
        assert_eq!(a2.add(a2.theta(), 0), None);
        assert_eq!(a2.add(0, a2.neg(0)), None);
        assert!(a2.poset_less(0, a2.theta()));
        assert!(!a2.poset_less(0, 1));
        let b2 = rs("B2");
        assert!(b2.poset_less(1, id(&b2, &[1, 2])));
    }

    #[test]
    fn pairings() {
        for t in ["A3", "B3", "G2", "F4"] {
            let r = rs(t);
            for i in 0..r.rank() {
                assert_eq!(r.pairing(i, r.coroot(i)), 2);
            }
            for a in 0..r.n_roots() {
                assert_eq!(r.pairing(a, r.coroot(a)), 2);
            }
        }
        let a2 = rs("A2");
        assert_eq!(a2.pairing(a2.theta(), a2.coroot(0)), 1);
        let b2 = rs("B2");
        assert_eq!(b2.pairing(0, b2.coroot(1)), -2);
        assert!(b2.is_long(0) && !b2.is_long(1));
    }

    #[test]
    fn exponents_by_hand() {
        assert_eq!(rs("A2").exponents_from_heights(), vec![1, 2]);
        assert_eq!(rs("B2").exponents_from_heights(), vec![1, 3]);
        assert_eq!(rs("G2").exponents_from_heights(), vec![1, 5]);
    }

    #[test]
    fn heights_add() {
        for t in ["B4", "F4", "E6"] {
            let r = rs(t);
            for a in 0..r.n_pos() {
                for b in 0..r.n_pos() {
                    if let Some(s) = r.add(a, b) {
                        assert_eq!(r.height(s), r.height(a) + r.height(b));
                        assert!(r.is_positive(s));
                    }
                }
            }
        }
    }

    /// `b` is reachable from `a` by adding positive roots one at a time with
    /// every intermediate sum a root.
    fn reachable(r: &RootSystem, a: RootId, b: RootId) -> bool {
        let mut seen = RootSet::singleton(a);
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for y in 0..r.n_pos() {
                if let Some(s) = r.add(x, y) {
                    if !seen.contains(s) {
                        seen = seen.with(s);
                        stack.push(s);
                    }
                }
            }
        }
        a != b && seen.contains(b)
    }

    #[test]
    fn poset_matches_chain_oracle() {
        for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"] {
            let r = rs(t);
            for a in 0..r.n_pos() {
                for b in 0..r.n_pos() {
                    assert_eq!(r.poset_less(a, b), reachable(&r, a, b), "{t} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn json_dump_shape() {
        let v = rs("A2").to_json();
        assert_eq!(v["series"], "A");
        assert_eq!(v["h"], 3);
        assert_eq!(v["positive_roots"], serde_json::json!([[1, 0], [0, 1], [1, 1]]));
        assert_eq!(v["weyl_order"], 6);
    }
}
