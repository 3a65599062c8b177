//! Upper order ideals of the positive root poset, their antichains of
//! minimal roots, and the decomposition statistics attached to each root.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{RootId, RootSystem};
use crate::rootset::RootSet;

/// An upper ideal of `Phi+`, with its minimal roots cached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: RootSet,
    min_roots: RootSet,
    strict: bool,
}

impl Ideal {
    /// Wrap a set already known to be an ideal.
    fn from_closed(rs: &RootSystem, members: RootSet) -> Ideal {
        Ideal {
            members,
            min_roots: minimal_elements(rs, members),
            strict: (members & rs.simple_set()).is_empty(),
        }
    }

    pub fn new(rs: &RootSystem, members: RootSet) -> Result<Ideal> {
        if !is_ideal(rs, members) {
            return Err(Error::NotAnIdeal);
        }
        Ok(Ideal::from_closed(rs, members))
    }

    pub fn empty() -> Ideal {
        Ideal {
            members: RootSet::EMPTY,
            min_roots: RootSet::EMPTY,
            strict: true,
        }
    }

    pub fn full(rs: &RootSystem) -> Ideal {
        Ideal::from_closed(rs, rs.all_positive())
    }

    pub fn members(&self) -> RootSet {
        self.members
    }

    pub fn contains(&self, id: RootId) -> bool {
        id < 128 && self.members.contains(id)
    }

    pub fn min_roots(&self) -> RootSet {
        self.min_roots
    }

    /// `I ∩ Π = ∅`.
    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `{roots, min_roots, strict}` with roots as coefficient arrays.
    pub fn to_json(&self, rs: &RootSystem) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            roots: Vec<&'a [i64]>,
            min_roots: Vec<&'a [i64]>,
            strict: bool,
        }
        let coeffs = |s: RootSet| s.iter().map(|i| rs.root(i).coeffs.as_slice()).collect();
        serde_json::to_value(Repr {
            roots: coeffs(self.members),
            min_roots: coeffs(self.min_roots),
            strict: self.strict,
        })
        .expect("serializable")
    }

    /// 0/1 mask over the canonical positive-root order.
    pub fn to_csv_row(&self, rs: &RootSystem) -> String {
        (0..rs.n_pos())
            .map(|i| if self.members.contains(i) { "1" } else { "0" })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Direct check of the defining property: `alpha ∈ S`, `beta ∈ Phi+`,
/// `alpha + beta ∈ Phi+` implies `alpha + beta ∈ S`.
pub fn is_ideal(rs: &RootSystem, set: RootSet) -> bool {
    if !set.is_subset(rs.all_positive()) {
        return false;
    }
    set.iter().all(|a| {
        (0..rs.n_pos()).all(|b| match rs.add(a, b) {
            Some(s) => set.contains(s),
            None => true,
        })
    })
}

fn minimal_elements(rs: &RootSystem, set: RootSet) -> RootSet {
    set.iter().filter(|&a| (set & rs.below(a)).is_empty()).collect()
}

pub fn is_antichain(rs: &RootSystem, set: RootSet) -> bool {
    set.iter().all(|a| (set & rs.above(a)).is_empty())
}

/// Smallest ideal containing `set`.
pub fn close_up(rs: &RootSystem, set: RootSet) -> Ideal {
    let mut members = set;
    for a in set.iter() {
        members |= rs.above(a);
    }
    Ideal::from_closed(rs, members)
}

pub fn minimal_roots(ideal: &Ideal) -> RootSet {
    ideal.min_roots
}

/// The unique ideal whose minimal roots are the antichain `anti`.
pub fn ideal_from_antichain(rs: &RootSystem, anti: RootSet) -> Result<Ideal> {
    if !anti.is_subset(rs.all_positive()) || !is_antichain(rs, anti) {
        return Err(Error::NotAntichain);
    }
    Ok(close_up(rs, anti))
}

/// Maximal elements of `Phi+ - I`.
pub fn max_complement_roots(rs: &RootSystem, ideal: &Ideal) -> RootSet {
    let comp = rs.all_positive().minus(ideal.members);
    comp.iter().filter(|&a| (comp & rs.above(a)).is_empty()).collect()
}

/// Depth-first enumeration of all ideals through their antichains of minimal
/// roots: the empty ideal first, then antichains extended by the smallest
/// admissible root index. Each ideal appears exactly once.
pub struct IdealIter<'a> {
    rs: &'a RootSystem,
    strict_only: bool,
    stack: Vec<Frame>,
    started: bool,
}

struct Frame {
    ideal: RootSet,
    blocked: RootSet,
    next: usize,
}

impl<'a> Iterator for IdealIter<'a> {
    type Item = Ideal;

    fn next(&mut self) -> Option<Ideal> {
        if !self.started {
            self.started = true;
            self.stack.push(Frame {
                ideal: RootSet::EMPTY,
                blocked: if self.strict_only {
                    self.rs.simple_set()
                } else {
                    RootSet::EMPTY
                },
                next: 0,
            });
            return Some(Ideal::empty());
        }
        let all = self.rs.all_positive();
        while let Some(top) = self.stack.last_mut() {
            let free = all.minus(top.blocked).at_or_above(top.next);
            match free.first() {
                Some(j) => {
                    top.next = j + 1;
                    let rs = self.rs;
                    let ideal = top.ideal.with(j) | rs.above(j);
                    let frame = Frame {
                        ideal,
                        blocked: top.blocked | rs.above(j) | rs.below(j),
                        next: j + 1,
                    };
                    self.stack.push(frame);
                    return Some(Ideal::from_closed(rs, ideal));
                }
                None => {
                    self.stack.pop();
                }
            }
        }
        None
    }
}

/// All ideals (or only the strictly positive ones) in canonical order.
///
/// Blocking the simple roots up front is enough for the strict filter: an
/// ideal avoids `Π` exactly when none of its minimal roots is simple.
pub fn enumerate_ideals(rs: &RootSystem, strict_only: bool) -> IdealIter<'_> {
    IdealIter {
        rs,
        strict_only,
        stack: Vec::new(),
        started: false,
    }
}

/// A "root or zero" value, in coefficient form.
type Vector = Vec<i64>;

fn coeffs(rs: &RootSystem, r: Option<RootId>, n: usize) -> Vector {
    match r {
        Some(id) => rs.root(id).coeffs.clone(),
        None => vec![0; n],
    }
}

fn root_or_zero(rs: &RootSystem, v: &[i64]) -> Option<Option<RootId>> {
    if v.iter().all(|&x| x == 0) {
        Some(None)
    } else {
        rs.lookup(v).map(Some)
    }
}

/// Witness for the two-branch root lemma on `gamma = sum(parts)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitWitness {
    /// `gamma - parts[j]` is a root or zero.
    Remove { j: usize },
    /// `parts[j] + parts[l]` is a root or zero, `l != j`. `unique` records
    /// whether `l` was the only such index.
    Merge { j: usize, l: usize, unique: bool },
}

/// Apply the root lemma to the summand `parts[j]` of `gamma`.
///
/// In the second branch with a unique partner `l` and `parts[j] != -parts[l]`,
/// `parts[l]` must be long and `parts[j]` short; a violation is reported as an
/// internal error.
pub fn split_at(rs: &RootSystem, gamma: RootId, parts: &[RootId], j: usize) -> Result<SplitWitness> {
    let n = rs.rank();
    let g = &rs.root(gamma).coeffs;
    let pj = &rs.root(parts[j]).coeffs;
    let diff: Vector = g.iter().zip(pj).map(|(a, b)| a - b).collect();
    if root_or_zero(rs, &diff).is_some() {
        return Ok(SplitWitness::Remove { j });
    }
    let partners: Vec<usize> = (0..parts.len())
        .filter(|&l| l != j)
        .filter(|&l| {
            let s: Vector = (0..n).map(|k| pj[k] + rs.root(parts[l]).coeffs[k]).collect();
            root_or_zero(rs, &s).is_some()
        })
        .collect();
    let Some(&l) = partners.first() else {
        return Err(Error::Internal(format!(
            "root lemma has no witness for summand {j} of {:?}",
            rs.root(gamma).coeffs
        )));
    };
    let unique = partners.len() == 1;
    if unique && parts[j] != rs.neg(parts[l]) && !(rs.is_long(parts[l]) && !rs.is_long(parts[j])) {
        return Err(Error::Internal(
            "unique merge partner without long/short pattern".into(),
        ));
    }
    Ok(SplitWitness::Merge { j, l, unique })
}

/// [`split_at`] for the first summand.
pub fn split_step(rs: &RootSystem, gamma: RootId, parts: &[RootId]) -> Result<SplitWitness> {
    let n = rs.rank();
    let mut sum = vec![0i64; n];
    for &p in parts {
        for k in 0..n {
            sum[k] += rs.root(p).coeffs[k];
        }
    }
    if parts.is_empty() || sum != rs.root(gamma).coeffs {
        return Err(Error::InvalidArgument("parts do not sum to gamma".into()));
    }
    split_at(rs, gamma, parts, 0)
}

/// Reorder the positive roots `rest` so that every partial sum
/// `first + rest[..i]` is a root or zero. `first = None` stands for zero.
///
/// Greedy: any next summand that keeps the running sum in `Phi ∪ {0}` leaves
/// an instance satisfying the same hypotheses, so the reorder lemma
/// guarantees the greedy choice never dead-ends. The returned permutation is
/// re-verified before it is returned.
pub fn reorder_summands(rs: &RootSystem, first: Option<RootId>, rest: &[RootId]) -> Result<Vec<usize>> {
    let n = rs.rank();
    if rest.iter().any(|&r| !rs.is_positive(r)) {
        return Err(Error::InvalidArgument("summands after the first must be positive roots".into()));
    }
    let mut total = coeffs(rs, first, n);
    for &r in rest {
        for k in 0..n {
            total[k] += rs.root(r).coeffs[k];
        }
    }
    if root_or_zero(rs, &total).is_none() {
        return Err(Error::InvalidArgument("sum is neither a root nor zero".into()));
    }
    let mut cur = coeffs(rs, first, n);
    let mut used = vec![false; rest.len()];
    let mut order = Vec::with_capacity(rest.len());
    for _ in 0..rest.len() {
        let pick = (0..rest.len()).find(|&i| {
            !used[i] && {
                let s: Vector = (0..n).map(|k| cur[k] + rs.root(rest[i]).coeffs[k]).collect();
                root_or_zero(rs, &s).is_some()
            }
        });
        let Some(i) = pick else {
            return Err(Error::Internal("reorder lemma: no admissible next summand".into()));
        };
        used[i] = true;
        order.push(i);
        for k in 0..n {
            cur[k] += rs.root(rest[i]).coeffs[k];
        }
    }
    // re-verify
    let mut cur = coeffs(rs, first, n);
    for &i in &order {
        for k in 0..n {
            cur[k] += rs.root(rest[i]).coeffs[k];
        }
        if root_or_zero(rs, &cur).is_none() {
            return Err(Error::Internal("reorder lemma: partial sum left Phi ∪ {0}".into()));
        }
    }
    Ok(order)
}

/// `alpha_{I,+}` for every positive root: the largest number of elements of
/// `I` summing to `alpha`, or 0 if there is none.
///
/// Height-order dynamic program over splits `alpha = beta + gamma` into two
/// positive roots; any decomposition can be reordered so that a proper
/// partial sum is a root, so pair splits suffice.
pub fn plus_stats(rs: &RootSystem, ideal: &Ideal) -> Vec<i64> {
    let mut f = vec![0i64; rs.n_pos()];
    for a in 0..rs.n_pos() {
        let mut best = i64::from(ideal.contains(a));
        for &(b, c) in rs.splits(a) {
            if f[b] >= 1 && f[c] >= 1 {
                best = best.max(f[b] + f[c]);
            }
        }
        f[a] = best;
    }
    f
}

pub fn plus_stat(rs: &RootSystem, ideal: &Ideal, alpha: RootId) -> i64 {
    plus_stats(rs, ideal)[alpha]
}

/// `alpha_{I,-}` for every positive root: one less than the smallest number
/// of elements of `Phi+ - I` summing to `alpha`. Requires `I` strictly
/// positive, so that the simple roots are available as summands.
pub fn minus_stats(rs: &RootSystem, ideal: &Ideal) -> Result<Vec<i64>> {
    if !ideal.is_strict() {
        return Err(Error::NotStrict);
    }
    let mut parts = vec![i64::MAX; rs.n_pos()];
    for a in 0..rs.n_pos() {
        let mut best = if ideal.contains(a) { i64::MAX } else { 1 };
        for &(b, c) in rs.splits(a) {
            best = best.min(parts[b].saturating_add(parts[c]));
        }
        parts[a] = best;
    }
    Ok(parts.into_iter().map(|p| p - 1).collect())
}

pub fn minus_stat(rs: &RootSystem, ideal: &Ideal, alpha: RootId) -> Result<i64> {
    Ok(minus_stats(rs, ideal)?[alpha])
}
