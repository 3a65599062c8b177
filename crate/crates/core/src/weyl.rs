//! The finite Weyl group, with elements stored as permutations of the root
//! table.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{Coweight, RootId, RootSystem};
use crate::rootset::RootSet;

/// Largest group the library will enumerate in full (covers E7).
pub const DEFAULT_GROUP_CAP: u128 = 3_000_000;
/// Default node cap for orbit searches over root subsets.
pub const DEFAULT_NODE_CAP: usize = 10_000_000;

/// An element of `W`, stored as the image of every root index. Two elements
/// are equal iff their permutations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct WeylElement {
    perm: Vec<u16>,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> WeylElement {
        WeylElement {
            perm: (0..rs.n_roots() as u16).collect(),
        }
    }

    /// `s_i` for the 0-based simple root `i`:
    /// `beta -> beta - <beta, alpha_i^vee> alpha_i`.
    pub fn simple_reflection(rs: &RootSystem, i: usize) -> WeylElement {
        assert!(i < rs.rank(), "simple reflection index out of range");
        Self::reflection(rs, i)
    }

    /// The reflection `s_alpha` through an arbitrary root.
    pub fn reflection(rs: &RootSystem, alpha: RootId) -> WeylElement {
        let a = &rs.root(alpha).coeffs;
        let av = rs.coroot(alpha);
        let perm = (0..rs.n_roots())
            .map(|b| {
                let c = rs.pairing(b, av);
                let img: Vec<i64> = rs
                    .root(b)
                    .coeffs
                    .iter()
                    .zip(a)
                    .map(|(x, y)| x - c * y)
                    .collect();
                rs.lookup(&img).expect("reflection maps roots to roots") as u16
            })
            .collect();
        WeylElement { perm }
    }

    pub fn from_perm(perm: Vec<u16>) -> WeylElement {
        WeylElement { perm }
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    #[inline]
    pub fn apply_root(&self, id: RootId) -> RootId {
        self.perm[id] as RootId
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            perm: other.perm.iter().map(|&i| self.perm[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0u16; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u16;
        }
        WeylElement { perm }
    }

    /// Action on coweights: `w(lambda) = sum_i lambda_i (w alpha_i)^vee`.
    pub fn apply_cw(&self, rs: &RootSystem, lambda: &Coweight) -> Coweight {
        let n = rs.rank();
        let mut out = vec![0i64; n];
        for (i, &l) in lambda.0.iter().enumerate() {
            if l == 0 {
                continue;
            }
            let cv = rs.coroot(self.apply_root(i));
            for k in 0..n {
                out[k] += l * cv.0[k];
            }
        }
        Coweight(out)
    }

    /// Integer matrix of the coweight action; column `i` is `(w alpha_i)^vee`.
    pub fn cw_matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let n = rs.rank();
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            let cv = rs.coroot(self.apply_root(i));
            for k in 0..n {
                m[k][i] = cv.0[k];
            }
        }
        m
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        (0..rs.n_pos())
            .filter(|&i| !rs.is_positive(self.apply_root(i)))
            .count()
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Image of a set of roots, as a sorted list of root indices.
    pub fn apply_set(&self, set: &[RootId]) -> Vec<RootId> {
        let mut v: Vec<RootId> = set.iter().map(|&r| self.apply_root(r)).collect();
        v.sort_unstable();
        v
    }
}

/// All of `W` in BFS order from the identity, generators tried in index
/// order. This is the canonical element order used by searches.
pub fn generate_group(rs: &RootSystem, cap: u128) -> Result<Vec<WeylElement>> {
    if rs.weyl_order() > cap {
        return Err(Error::CapExceeded {
            what: "Weyl group enumeration",
            limit: cap,
            needed: rs.weyl_order(),
        });
    }
    let gens: Vec<WeylElement> = (0..rs.rank())
        .map(|i| WeylElement::simple_reflection(rs, i))
        .collect();
    generate_subgroup(rs, &gens)
}

/// BFS closure of the given generators (right multiplication).
pub fn generate_subgroup(rs: &RootSystem, gens: &[WeylElement]) -> Result<Vec<WeylElement>> {
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let w = out[head].clone();
        head += 1;
        for g in gens {
            let x = w.compose(g);
            if seen.insert(x.clone()) {
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// The unique `x` with `x(beta) > 0` iff `<beta, lambda> >= 0` for every
/// positive `beta`, together with `x(lambda)` (which is dominant). Ties
/// `<beta, lambda> = 0` count as positive.
pub fn to_dominant_chamber(rs: &RootSystem, lambda: &Coweight) -> (WeylElement, Coweight) {
    let mut x = WeylElement::identity(rs);
    let mut mu = lambda.clone();
    'outer: loop {
        for i in 0..rs.rank() {
            let p = rs.pairing(i, &mu);
            if p < 0 {
                // s_i(mu) = mu - <alpha_i, mu> alpha_i^vee
                mu.0[i] -= p;
                let s = WeylElement::simple_reflection(rs, i);
                x = s.compose(&x);
                continue 'outer;
            }
        }
        break;
    }
    (x, mu)
}

/// Outcome of [`subset_conjugacy_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// `y` with `y(S) = image`.
    Found { y: WeylElement, image: Vec<RootId> },
    /// The whole orbit was visited and no member satisfied the predicate.
    Exhausted { orbit_size: usize },
    /// The node cap was reached first.
    CapHit { visited: usize },
}

/// Breadth-first search through the `W`-orbit of the unordered root set `set`
/// under simple reflections. Returns the first `y` (BFS layer order,
/// generators in index order) for which `target(y(S))` holds.
pub fn subset_conjugacy_search<F>(
    rs: &RootSystem,
    set: &[RootId],
    target: F,
    node_cap: usize,
) -> SearchOutcome
where
    F: Fn(&[RootId]) -> bool,
{
    let mut start: Vec<RootId> = set.to_vec();
    start.sort_unstable();
    start.dedup();
    if target(&start) {
        return SearchOutcome::Found {
            y: WeylElement::identity(rs),
            image: start,
        };
    }
    let gens: Vec<WeylElement> = (0..rs.rank())
        .map(|i| WeylElement::simple_reflection(rs, i))
        .collect();
    // node -> (parent, generator)
    let mut nodes: Vec<(Vec<RootId>, usize, usize)> = vec![(start.clone(), usize::MAX, 0)];
    let mut seen: HashMap<Vec<RootId>, usize> = HashMap::new();
    seen.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(node) = queue.pop_front() {
        for (g, s) in gens.iter().enumerate() {
            let img = s.apply_set(&nodes[node].0);
            if seen.contains_key(&img) {
                continue;
            }
            if nodes.len() >= node_cap {
                return SearchOutcome::CapHit {
                    visited: nodes.len(),
                };
            }
            let id = nodes.len();
            seen.insert(img.clone(), id);
            nodes.push((img.clone(), node, g));
            if target(&img) {
                let mut word = Vec::new();
                let mut cur = id;
                while cur != 0 {
                    word.push(nodes[cur].2);
                    cur = nodes[cur].1;
                }
                // word = [g_k, ..., g_1]; y = s_{g_k} ... s_{g_1}
                let mut y = WeylElement::identity(rs);
                for &g in &word {
                    y = y.compose(&gens[g]);
                }
                debug_assert_eq!(y.apply_set(&nodes[0].0), img);
                return SearchOutcome::Found { y, image: img };
            }
            queue.push_back(id);
        }
    }
    SearchOutcome::Exhausted {
        orbit_size: nodes.len(),
    }
}

/// Roots of the subsystem `Phi_J` spanned by the simple roots in `j`.
pub fn parabolic_roots(rs: &RootSystem, j: &[usize]) -> Vec<RootId> {
    let mask: Vec<bool> = (0..rs.rank()).map(|i| j.contains(&i)).collect();
    (0..rs.n_roots())
        .filter(|&r| {
            rs.root(r)
                .coeffs
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || mask[i])
        })
        .collect()
}

/// `[N(W_J) : W_J]`, computed over the given full group listing as the
/// stabilizer of `Phi_J` divided by `|W_J|`.
pub fn normalizer_index(rs: &RootSystem, group: &[WeylElement], j: &[usize]) -> Result<u128> {
    let phi_j = parabolic_roots(rs, j);
    let stab = group.iter().filter(|w| w.apply_set(&phi_j) == phi_j).count() as u128;
    let gens: Vec<WeylElement> = j
        .iter()
        .map(|&i| WeylElement::simple_reflection(rs, i))
        .collect();
    let wj = generate_subgroup(rs, &gens)?.len() as u128;
    if !stab.is_multiple_of(wj) || !(group.len() as u128).is_multiple_of(stab) {
        return Err(Error::Internal(format!(
            "normalizer of W_J for J = {j:?} has order {stab}, not a multiple of |W_J| = {wj}"
        )));
    }
    Ok(stab / wj)
}

/// One `W`-conjugacy class of subsets of the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleClass {
    /// Lexicographically least member, as sorted simple indices.
    pub representative: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

/// Partition of all `2^n` subsets of the simple roots into `W`-conjugacy
/// classes (`J ~ J'` iff some `w` maps the set `J` onto `J'`). Classes are
/// returned sorted by (size, representative).
pub fn simple_subsets_up_to_conjugacy(rs: &RootSystem, node_cap: usize) -> Result<Vec<SimpleClass>> {
    let n = rs.rank();
    let mut class_of: Vec<Option<usize>> = vec![None; 1 << n];
    let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
    for mask in 0..(1usize << n) {
        if class_of[mask].is_some() {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let id = classes.len();
        let mut members = Vec::new();
        for_each_in_orbit(rs, &set, node_cap, |img| {
            if img.iter().all(|&r| rs.is_simple(r)) {
                let m: usize = img.iter().map(|&r| 1 << r).sum();
                if class_of[m].is_none() {
                    class_of[m] = Some(id);
                    members.push(img.to_vec());
                }
            }
        })?;
        members.sort();
        classes.push(members);
    }
    let mut out: Vec<SimpleClass> = classes
        .into_iter()
        .map(|members| SimpleClass {
            representative: members[0].clone(),
            members,
        })
        .collect();
    out.sort_by(|a, b| {
        (a.representative.len(), &a.representative).cmp(&(b.representative.len(), &b.representative))
    });
    Ok(out)
}

/// Visit every set in the `W`-orbit of `set`.
pub fn for_each_in_orbit<F: FnMut(&[RootId])>(
    rs: &RootSystem,
    set: &[RootId],
    node_cap: usize,
    mut f: F,
) -> Result<usize> {
    let gens: Vec<WeylElement> = (0..rs.rank())
        .map(|i| WeylElement::simple_reflection(rs, i))
        .collect();
    let mut start = set.to_vec();
    start.sort_unstable();
    let mut seen: HashSet<Vec<RootId>> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        f(&cur);
        for s in &gens {
            let img = s.apply_set(&cur);
            if !seen.contains(&img) {
                if seen.len() >= node_cap {
                    return Err(Error::CapExceeded {
                        what: "orbit search nodes",
                        limit: node_cap as u128,
                        needed: seen.len() as u128 + 1,
                    });
                }
                seen.insert(img.clone());
                queue.push_back(img);
            }
        }
    }
    Ok(seen.len())
}

/// Positive roots that `w` sends to negative roots, as a bitset.
pub fn inversion_set(rs: &RootSystem, w: &WeylElement) -> RootSet {
    (0..rs.n_pos())
        .filter(|&i| !rs.is_positive(w.apply_root(i)))
        .collect()
}
