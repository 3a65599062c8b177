//! Conjugating antichains into the simple roots, restricted Coxeter
//! arrangements on fixed spaces `V^J`, and the count of ideals per class of
//! `J ⊆ Π`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::affine::AffineElement;
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, max_complement_roots, Ideal};
use crate::lattice::b_set;
use crate::linalg;
use crate::roots::{RootId, RootSystem};
use crate::rootset::RootSet;
use crate::weyl::{
    generate_group, normalizer_index, simple_subsets_up_to_conjugacy, subset_conjugacy_search,
    SearchOutcome, WeylElement, DEFAULT_GROUP_CAP, DEFAULT_NODE_CAP,
};

/// Largest fixed-space dimension handled by the intersection lattice.
pub const MAX_LATTICE_DIM: usize = 6;

/// Primes used for the finite-field cross-check.
pub const CHECK_PRIMES: [u64; 2] = [10007, 10009];

/// `y ∈ W` and `J ⊆ Π` (simple indices, sorted) with `y(A) = J`.
pub fn conjugate_to_simples(rs: &RootSystem, anti: RootSet) -> Result<(WeylElement, Vec<usize>)> {
    if !crate::ideals::is_antichain(rs, anti) {
        return Err(Error::NotAntichain);
    }
    let set = anti.to_vec();
    match subset_conjugacy_search(rs, &set, |s| s.iter().all(|&r| rs.is_simple(r)), DEFAULT_NODE_CAP) {
        SearchOutcome::Found { y, image } => Ok((y, image)),
        SearchOutcome::Exhausted { orbit_size } => Err(Error::Internal(format!(
            "antichain {set:?} is not conjugate to simple roots (orbit of {orbit_size} sets)"
        ))),
        SearchOutcome::CapHit { visited } => Err(Error::CapExceeded {
            what: "orbit search nodes",
            limit: DEFAULT_NODE_CAP as u128,
            needed: visited as u128 + 1,
        }),
    }
}

/// Extended simple system `Π̃ = {-θ, α_1, …, α_n}`: node 0 is `-θ`, node `i`
/// is `α_i` (1-based). Returns the node of a root, if any.
pub fn extended_node(rs: &RootSystem, r: RootId) -> Option<usize> {
    if r == rs.neg(rs.theta()) {
        Some(0)
    } else if rs.is_simple(r) {
        Some(r + 1)
    } else {
        None
    }
}

/// gcd of the marks `c` over the nodes of `Π̃` not in `nodes`, with
/// `c_{-θ} = 1`. Zero when `nodes` is all of `Π̃`.
pub fn gcd_certificate(rs: &RootSystem, nodes: &[usize]) -> i64 {
    let c = rs.theta_coeffs();
    (0..=rs.rank())
        .filter(|k| !nodes.contains(k))
        .map(|k| if k == 0 { 1 } else { c[k - 1] })
        .fold(0, |g, x| g.gcd(&x))
}

/// `J′ = -x̃(x⁻¹(I_min)) ⊆ Π̃` for `w_min(I) = x τ_λ` and a simplex map
/// `w̃ = x̃ τ_λ̃` for `t = h + 1`, as sorted nodes of `Π̃`.
pub fn constructive_nodes(rs: &RootSystem, ideal: &Ideal, simplex_map: &AffineElement) -> Result<Vec<usize>> {
    let wmin = crate::affine::w_min(rs, ideal)?;
    let bounding = b_set(rs, rs.coxeter_number() + 1, &wmin.lambda)?;
    let mut nodes = Vec::with_capacity(bounding.len());
    for r in bounding {
        let img = rs.neg(simplex_map.x.apply_root(r));
        nodes.push(
            extended_node(rs, img)
                .ok_or_else(|| Error::Internal(format!("bounding root {r} does not land in the extended simple system")))?,
        );
    }
    nodes.sort_unstable();
    Ok(nodes)
}

/// Rows are integer basis vectors (simple-coroot coordinates) of
/// `V^J = {v : ⟨α_j, v⟩ = 0, j ∈ J}`, each primitive.
pub fn fixed_space_basis(rs: &RootSystem, j: &[usize]) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let rows: Vec<Vec<i64>> = j
        .iter()
        .map(|&jj| (0..n).map(|i| rs.cartan()[i][jj]).collect())
        .collect();
    linalg::kernel(&rows, n)
}

/// Distinct nonzero restrictions of the positive roots to `V^J`, written in
/// the basis of [`fixed_space_basis`], each primitive with positive leading
/// entry, in order of first appearance.
pub fn restricted_arrangement(rs: &RootSystem, j: &[usize]) -> Vec<Vec<i64>> {
    let basis = fixed_space_basis(rs, j);
    let mut out: Vec<Vec<i64>> = Vec::new();
    for a in 0..rs.n_pos() {
        let f: Vec<i64> = basis.iter().map(|b| rs.pair(&rs.root(a).coeffs, b)).collect();
        if f.iter().all(|&x| x == 0) {
            continue;
        }
        let f = linalg::primitive_int(&f);
        if !out.contains(&f) {
            out.push(f);
        }
    }
    out
}

/// Integer polynomial, `coeffs[k]` the coefficient of `t^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharPoly {
    pub coeffs: Vec<i64>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    pub fn from_roots(roots: &[i64]) -> CharPoly {
        let mut c = vec![1i64];
        for &r in roots {
            let mut next = vec![0i64; c.len() + 1];
            for (k, &x) in c.iter().enumerate() {
                next[k + 1] += x;
                next[k] -= r * x;
            }
            c = next;
        }
        CharPoly { coeffs: c }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Characteristic polynomial of a central arrangement in dimension `d`,
/// given by its normal forms, via the Möbius function of the intersection
/// lattice. A flat is keyed by the set of hyperplanes containing it.
pub fn arrangement_char_poly(d: usize, forms: &[Vec<i64>]) -> Result<CharPoly> {
    if d > MAX_LATTICE_DIM {
        return Err(Error::CapExceeded {
            what: "fixed-space dimension",
            limit: MAX_LATTICE_DIM as u128,
            needed: d as u128,
        });
    }
    if forms.len() > 128 {
        return Err(Error::InvalidArgument("more than 128 hyperplanes".into()));
    }
    let m = forms.len();
    let rank_of = |mask: u128| -> usize {
        let rows: Vec<Vec<i64>> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| forms[i].clone()).collect();
        if rows.is_empty() {
            0
        } else {
            linalg::rank(&rows)
        }
    };
    // flats by rank
    let mut levels: Vec<Vec<u128>> = vec![vec![0]];
    let mut rank: HashMap<u128, usize> = HashMap::from([(0u128, 0usize)]);
    for r in 1..=d {
        let mut next: Vec<u128> = Vec::new();
        for &flat in &levels[r - 1] {
            for h in 0..m {
                if flat >> h & 1 == 1 {
                    continue;
                }
                let base = flat | 1 << h;
                if next.iter().any(|&f| f & base == base) {
                    continue;
                }
                let mut closed = base;
                for k in 0..m {
                    if closed >> k & 1 == 0 && rank_of(base | 1 << k) == r {
                        closed |= 1 << k;
                    }
                }
                next.push(closed);
                rank.insert(closed, r);
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_unstable();
        levels.push(next);
    }
    let mut mu: HashMap<u128, i64> = HashMap::new();
    let mut coeffs = vec![0i64; d + 1];
    for (r, level) in levels.iter().enumerate() {
        for &x in level {
            let val = if r == 0 {
                1
            } else {
                -levels[..r]
                    .iter()
                    .flatten()
                    .filter(|&&y| y & x == y)
                    .map(|y| mu[y])
                    .sum::<i64>()
            };
            mu.insert(x, val);
            coeffs[d - r] += val;
        }
    }
    Ok(CharPoly { coeffs })
}

/// `p^J(t)` for the arrangement restricted to `V^J`.
pub fn char_poly(rs: &RootSystem, j: &[usize]) -> Result<CharPoly> {
    let d = rs.rank() - j.len();
    arrangement_char_poly(d, &restricted_arrangement(rs, j))
}

fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Number of points of `F_p^d` off every hyperplane. Runs in about
/// `p^(d-2)·|forms|` steps: points are counted projectively, chart by chart,
/// and the last coordinate of each chart is solved for directly.
pub fn finite_field_count(d: usize, forms: &[Vec<i64>], p: u64) -> u64 {
    if d == 0 {
        return 1;
    }
    let red: Vec<Vec<u64>> = forms
        .iter()
        .map(|f| f.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut projective = 0u64;
    for lead in 0..d {
        // v = (0, …, 0, 1, v_{lead+1}, …, v_{d-1})
        let free = d - 1 - lead;
        if free == 0 {
            if red.iter().all(|f| f[lead] != 0) {
                projective += 1;
            }
            continue;
        }
        let last = d - 1;
        let inv: Vec<Option<u64>> = red
            .iter()
            .map(|f| (f[last] != 0).then(|| modpow(f[last], p - 2, p)))
            .collect();
        let mut prefix = vec![0u64; free - 1];
        let mut excluded: Vec<u64> = Vec::with_capacity(forms.len());
        loop {
            excluded.clear();
            let mut dead = false;
            for (f, iv) in red.iter().zip(&inv) {
                let mut a = f[lead];
                for (k, &v) in prefix.iter().enumerate() {
                    a = (a + f[lead + 1 + k] * v) % p;
                }
                match iv {
                    Some(iv) => excluded.push((p - a) % p * iv % p),
                    None if a == 0 => {
                        dead = true;
                        break;
                    }
                    None => {}
                }
            }
            if !dead {
                excluded.sort_unstable();
                excluded.dedup();
                projective += p - excluded.len() as u64;
            }
            // next prefix
            let mut k = 0;
            while k < prefix.len() {
                prefix[k] += 1;
                if prefix[k] < p {
                    break;
                }
                prefix[k] = 0;
                k += 1;
            }
            if k == prefix.len() {
                break;
            }
        }
    }
    projective * (p - 1)
}

/// Integer roots of `p^J` with multiplicity, ascending. Fails unless the
/// polynomial splits over the nonnegative integers.
pub fn os_exponents(poly: &CharPoly) -> Result<Vec<i64>> {
    let mut c = poly.coeffs.clone();
    let mut roots = Vec::new();
    while c.len() > 1 {
        let bound = c.iter().map(|x| x.abs()).max().unwrap_or(0);
        let found = (0..=bound).find(|&r| {
            c.iter().rev().fold(0i128, |acc, &x| acc * r as i128 + x as i128) == 0
        });
        let Some(r) = found else {
            return Err(Error::Internal(format!(
                "characteristic polynomial {poly} does not split over the nonnegative integers"
            )));
        };
        // synthetic division by (t - r)
        let deg = c.len() - 1;
        let mut q = vec![0i64; deg];
        let mut carry = 0i64;
        for k in (0..deg).rev() {
            carry = c[k + 1] + carry * r;
            q[k] = carry;
        }
        roots.push(r);
        c = q;
    }
    if c != [1] {
        return Err(Error::Internal(format!("characteristic polynomial {poly} is not monic")));
    }
    roots.sort_unstable();
    Ok(roots)
}

/// `χ_J(t) = p^J(t) / [N(W_J) : W_J]`.
pub fn chi(rs: &RootSystem, group: &[WeylElement], j: &[usize], t: i64) -> Result<Ratio<i128>> {
    let p = char_poly(rs, j)?;
    let idx = normalizer_index(rs, group, j)?;
    Ok(Ratio::new(p.eval(t), idx as i128))
}

/// One row of [`classify_ideals`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    /// Least member of the class, as sorted simple indices.
    pub representative: Vec<usize>,
    pub class_size: usize,
    /// Number of ideals whose antichain is conjugate into this class.
    pub count: u64,
    pub char_poly: String,
    pub exponents: Vec<i64>,
    pub normalizer_index: u128,
    /// `χ_J(h + 1)`, or `χ_J(h - 1)` in strict mode, as `numer/denom` when
    /// not an integer.
    pub chi: String,
    pub pass: bool,
}

/// Groups ideals by the conjugacy class of `I_min` (or, for `strict`, of the
/// maximal roots of `Φ+ - I` over strictly positive ideals) and compares each
/// count with `χ_J(h ± 1)`.
pub fn classify_ideals(rs: &RootSystem, strict: bool) -> Result<Vec<ClassRow>> {
    let group = generate_group(rs, DEFAULT_GROUP_CAP)?;
    let classes = simple_subsets_up_to_conjugacy(rs, DEFAULT_NODE_CAP)?;
    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
    for (c, cls) in classes.iter().enumerate() {
        for m in &cls.members {
            class_of.insert(m.clone(), c);
        }
    }
    let mut counts = vec![0u64; classes.len()];
    for ideal in enumerate_ideals(rs, strict) {
        let anti = if strict {
            max_complement_roots(rs, &ideal)
        } else {
            ideal.min_roots()
        };
        let (_, j) = conjugate_to_simples(rs, anti)?;
        counts[class_of[&j]] += 1;
    }
    let h = rs.coxeter_number();
    let t = if strict { h - 1 } else { h + 1 };
    let mut rows = Vec::with_capacity(classes.len());
    for (cls, &count) in classes.iter().zip(&counts) {
        let j = &cls.representative;
        let p = char_poly(rs, j)?;
        let exps = os_exponents(&p)?;
        let idx = normalizer_index(rs, &group, j)?;
        let value = Ratio::new(p.eval(t), idx as i128);
        rows.push(ClassRow {
            representative: j.clone(),
            class_size: cls.members.len(),
            count,
            char_poly: p.to_string(),
            exponents: exps,
            normalizer_index: idx,
            chi: value.to_string(),
            pass: value.is_integer() && value.to_integer() == count as i128,
        });
    }
    Ok(rows)
}
