//! Acceptance criteria, one line per criterion.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use alcove_ideals::affine::{self, AffineElement, AffineRoot};
use alcove_ideals::classify::{classify_ideals, conjugate_to_simples};
use alcove_ideals::ideals::{enumerate_ideals, max_complement_roots, Ideal};
use alcove_ideals::lattice::{self, count_formula, count_orbits_mod, d_set, ta_points, DEFAULT_RESIDUE_CAP};
use alcove_ideals::weyl::generate_group;
use alcove_ideals::weyl::DEFAULT_GROUP_CAP;
use alcove_ideals::{Coweight, RootSystem};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let types = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4",
    ];
    let quick = Instant::now();
    for t in types {
        let n = enumerate_ideals(&rs(t), false).count() as u128;
        ensure(n == table_count(t, 1), || format!("{t}: {n} ideals, formula {}", table_count(t, 1)))?;
    }
    let quick = quick.elapsed();
    ensure(quick < Duration::from_secs(10), || format!("small types took {quick:?}"))?;
    for (t, n) in [("A2", 5), ("A3", 14), ("B2", 6), ("D4", 50), ("G2", 8)] {
        ensure(enumerate_ideals(&rs(t), false).count() == n, || format!("{t}: expected {n}"))?;
    }
    let slow = Instant::now();
    for (t, n) in [("E6", 833u128), ("E7", 4160), ("E8", 25080)] {
        let got = enumerate_ideals(&rs(t), false).count() as u128;
        ensure(got == n && table_count(t, 1) == n, || format!("{t}: {got} ideals, expected {n}"))?;
    }
    let slow = slow.elapsed();
    ensure(slow < Duration::from_secs(300), || format!("exceptional types took {slow:?}"))?;
    Ok(format!("{} types plus E6/E7/E8 (small {quick:.1?}, exceptional {slow:.1?})", types.len()))
}

fn criterion_2() -> Outcome {
    let types = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8",
    ];
    for t in types {
        let n = enumerate_ideals(&rs(t), true).count() as u128;
        ensure(n == table_count(t, -1), || format!("{t}: {n} strict ideals, formula {}", table_count(t, -1)))?;
    }
    for (t, n) in [("A2", 2), ("A3", 5), ("B2", 3), ("D4", 20), ("G2", 5), ("F4", 66)] {
        ensure(enumerate_ideals(&rs(t), true).count() == n, || format!("{t}: expected {n}"))?;
    }
    Ok(format!("{} types", types.len()))
}

fn criterion_3() -> Outcome {
    let mut pairs = 0;
    for t in RANK_LE_4 {
        let r = rs(t);
        let h = r.coxeter_number();
        for strict in [false, true] {
            let tt = if strict { h - 1 } else { h + 1 };
            let ideals: Vec<Ideal> = enumerate_ideals(&r, strict).collect();
            let points: BTreeSet<Coweight> = d_set(&r, tt).map_err(|e| e.to_string())?.into_iter().collect();
            ensure(points.len() as u128 == table_count(t, if strict { -1 } else { 1 }), || format!("{t} t={tt}: |D^t| = {}", points.len()))?;
            let mut image = BTreeSet::new();
            for i in &ideals {
                let lam = if strict { lattice::strict_ideal_to_lambda(&r, i) } else { lattice::ideal_to_lambda(&r, i) }
                    .map_err(|e| format!("{t}: {e}"))?;
                // membership checked directly against the defining inequalities
                let inside = if strict {
                    r.pairing(r.theta(), &lam) <= 0 && (0..r.rank()).all(|j| -r.pairing(j, &lam) <= 1)
                } else {
                    (0..r.rank()).all(|j| r.pairing(j, &lam) <= 1) && -r.pairing(r.theta(), &lam) <= 2
                };
                ensure(inside, || format!("{t}: {:?} outside D^{tt}", lam.0))?;
                let back = if strict { lattice::lambda_to_strict_ideal(&r, &lam) } else { lattice::lambda_to_ideal(&r, &lam) }
                    .map_err(|e| format!("{t}: {e}"))?;
                ensure(&back == i, || format!("{t}: round trip of {:x}", i.members()))?;
                ensure(image.insert(lam.clone()), || format!("{t}: {:?} hit twice", lam.0))?;
            }
            ensure(image == points, || format!("{t} t={tt}: image is not all of D^t"))?;
            for p in &points {
                let i = if strict { lattice::lambda_to_strict_ideal(&r, p) } else { lattice::lambda_to_ideal(&r, p) }
                    .map_err(|e| format!("{t}: {e}"))?;
                let lam = if strict { lattice::strict_ideal_to_lambda(&r, &i) } else { lattice::ideal_to_lambda(&r, &i) }
                    .map_err(|e| format!("{t}: {e}"))?;
                ensure(&lam == p, || format!("{t}: point {:?} does not round trip", p.0))?;
            }
            pairs += ideals.len();
        }
    }
    Ok(format!("{pairs} round trips over {} types", RANK_LE_4.len()))
}

fn admissible_by_scan(r: &RootSystem, bound: i64) -> BTreeSet<Vec<i64>> {
    let n = r.n_pos();
    let width = (2 * bound + 1) as usize;
    let mut out = BTreeSet::new();
    let mut k = vec![0i64; n];
    for code in 0..width.pow(n as u32) {
        let mut c = code;
        for x in k.iter_mut() {
            *x = (c % width) as i64 - bound;
            c /= width;
        }
        let ok = (0..n).all(|a| {
            (0..n).all(|b| match r.add(a, b) {
                Some(s) => k[a] + k[b] <= k[s] && k[s] <= k[a] + k[b] + 1,
                None => true,
            })
        });
        if ok {
            out.insert(k.clone());
        }
    }
    out
}

fn criterion_4() -> Outcome {
    let bound = 2;
    let mut detail = Vec::new();
    for t in ["A2", "B2", "G2"] {
        let r = rs(t);
        // breadth-first search over alcoves, coordinates from rational points
        let radius = bound * r.n_pos() as i64;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let id = AffineElement::identity(&r);
        seen.insert(floor_k(&r, &id));
        let mut frontier = vec![id];
        for _ in 0..radius.max(40) {
            let mut next = Vec::new();
            for w in &frontier {
                for node in 0..=r.rank() {
                    let v = w.right_mul_simple(&r, node);
                    if seen.insert(floor_k(&r, &v)) {
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        let realized: BTreeSet<Vec<i64>> = seen.into_iter().filter(|k| k.iter().all(|x| x.abs() <= bound)).collect();
        let admissible = admissible_by_scan(&r, bound);
        ensure(realized == admissible, || {
            format!(
                "{t}: {} realized, {} admissible, {} differ",
                realized.len(),
                admissible.len(),
                realized.symmetric_difference(&admissible).count()
            )
        })?;
        for k in &admissible {
            ensure(affine::is_admissible(&r, k), || format!("{t}: {k:?} rejected"))?;
            let w = affine::alcove_walk(&r, k).map_err(|e| format!("{t}: {k:?}: {e}"))?;
            ensure(&floor_k(&r, &w) == k && &affine::k_vector(&r, &w) == k, || format!("{t}: walk to {k:?}"))?;
        }
        detail.push(format!("{t} {}", admissible.len()));
    }
    Ok(format!("admissible vectors in the box: {}", detail.join(", ")))
}

fn length_of(r: &RootSystem, w: &AffineElement) -> i64 {
    floor_k(r, w).iter().map(|x| x.abs()).sum()
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for t in ["A3", "B3", "G2"] {
        let r = rs(t);
        for ideal in enumerate_ideals(&r, false) {
            let i = ideal.members();
            let wmin = affine::w_min(&r, &ideal).map_err(|e| e.to_string())?;
            ensure(dominant_support(&r, &wmin) == Some(i), || format!("{t} {i:x}: w_min support"))?;
            ensure(floor_k(&r, &wmin) == plus_oracle(&r, i), || format!("{t} {i:x}: w_min k-vector"))?;
            let l = length_of(&r, &wmin);
            for node in 0..=r.rank() {
                let v = wmin.right_mul_simple(&r, node);
                if length_of(&r, &v) < l {
                    ensure(dominant_support(&r, &v) != Some(i), || format!("{t} {i:x}: w_min s_{node} stays"))?;
                }
            }
            if ideal.is_strict() {
                let wmax = affine::w_max(&r, &ideal).map_err(|e| e.to_string())?;
                ensure(dominant_support(&r, &wmax) == Some(i), || format!("{t} {i:x}: w_max support"))?;
                ensure(floor_k(&r, &wmax) == minus_oracle(&r, i), || format!("{t} {i:x}: w_max k-vector"))?;
                let l = length_of(&r, &wmax);
                for node in 0..=r.rank() {
                    let v = wmax.right_mul_simple(&r, node);
                    if length_of(&r, &v) > l {
                        ensure(dominant_support(&r, &v) != Some(i), || format!("{t} {i:x}: w_max s_{node} stays"))?;
                    }
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals"))
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for t in RANK_LE_4 {
        let r = rs(t);
        let n = r.rank();
        let theta = r.theta();
        let neg_simple: Vec<AffineRoot> = (0..n)
            .map(|i| AffineRoot { root: i, level: 0 })
            .chain([AffineRoot { root: r.neg(theta), level: -1 }])
            .collect();
        let simple: Vec<AffineRoot> = neg_simple.iter().map(|a| AffineRoot { root: r.neg(a.root), level: -a.level }).collect();
        // w⁻¹(α + δ) = x⁻¹(α) + (1 - ⟨α, x(λ)⟩)δ
        let pull = |w: &AffineElement, a: usize| AffineRoot {
            root: w.x.inverse().apply_root(a),
            level: 1 - r.pairing(a, &w.x.apply_cw(&r, &w.lambda)),
        };
        for ideal in enumerate_ideals(&r, false) {
            let w = affine::w_min(&r, &ideal).map_err(|e| e.to_string())?;
            let lhs: BTreeSet<usize> = ideal.min_roots().iter().map(|a| w.x.inverse().apply_root(a)).collect();
            let mut rhs: BTreeSet<usize> = (0..n).filter(|&i| r.pairing(i, &w.lambda) == 1).collect();
            if -r.pairing(theta, &w.lambda) == 2 {
                rhs.insert(r.neg(theta));
            }
            ensure(lhs == rhs, || format!("{t} {:x}: {lhs:?} vs bounding {rhs:?}", ideal.members()))?;
            for a in ideal.min_roots().iter() {
                ensure(neg_simple.contains(&pull(&w, a)), || format!("{t} {:x}: root {a} under w_min^-1", ideal.members()))?;
            }
            if ideal.is_strict() {
                let w = affine::w_max(&r, &ideal).map_err(|e| e.to_string())?;
                let maxc = max_complement_roots(&r, &ideal);
                let lhs: BTreeSet<usize> = maxc.iter().map(|a| w.x.inverse().apply_root(a)).collect();
                let mut rhs: BTreeSet<usize> = (0..n).filter(|&i| -r.pairing(i, &w.lambda) == 1).map(|i| r.neg(i)).collect();
                if r.pairing(theta, &w.lambda) == 0 {
                    rhs.insert(theta);
                }
                ensure(lhs == rhs, || format!("{t} {:x}: strict {lhs:?} vs bounding {rhs:?}", ideal.members()))?;
                for a in maxc.iter() {
                    ensure(simple.contains(&pull(&w, a)), || format!("{t} {:x}: root {a} under w_max^-1", ideal.members()))?;
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} ideals over {} types", RANK_LE_4.len()))
}

fn criterion_7() -> Outcome {
    let mut sets = 0;
    for t in RANK_LE_5 {
        let r = rs(t);
        for ideal in enumerate_ideals(&r, false) {
            let mut todo = vec![ideal.min_roots()];
            if ideal.is_strict() {
                todo.push(max_complement_roots(&r, &ideal));
            }
            for anti in todo {
                let (y, j) = conjugate_to_simples(&r, anti).map_err(|e| format!("{t}: {e}"))?;
                let img: BTreeSet<usize> = anti.iter().map(|a| y.apply_root(a)).collect();
                let jset: BTreeSet<usize> = j.iter().copied().collect();
                ensure(img == jset && j.len() == anti.len() && j.iter().all(|&s| s < r.rank()), || {
                    format!("{t}: {anti:?} maps to {img:?}, J = {j:?}")
                })?;
                sets += 1;
            }
        }
    }
    Ok(format!("{sets} antichains over {} types", RANK_LE_5.len()))
}

fn criterion_8() -> Outcome {
    let hand: [(&str, bool, Vec<u64>); 6] = [
        ("A2", false, vec![1, 3, 1]),
        ("B2", false, vec![1, 2, 2, 1]),
        ("B2", true, vec![0, 1, 1, 1]),
        ("A3", false, vec![1, 6, 4, 2, 1]),
        ("G2", false, vec![1, 3, 3, 1]),
        ("A2", true, vec![0, 1, 1]),
    ];
    for (t, strict, want) in &hand {
        let rows = classify_ideals(&rs(t), *strict).map_err(|e| e.to_string())?;
        let got: Vec<u64> = rows.iter().map(|r| r.count).collect();
        ensure(&got == want, || format!("{t} strict={strict}: {got:?}, expected {want:?}"))?;
    }
    for t in ["A2", "A3", "B2", "B3", "G2"] {
        let r = rs(t);
        for (strict, shift) in [(false, 1), (true, -1)] {
            let rows = classify_ideals(&r, strict).map_err(|e| e.to_string())?;
            for row in &rows {
                ensure(row.pass && row.chi == row.count.to_string(), || {
                    format!("{t} strict={strict}: class {:?} count {} chi {}", row.representative, row.count, row.chi)
                })?;
            }
            let total: u64 = rows.iter().map(|r| r.count).sum();
            ensure(total as u128 == table_count(t, shift), || format!("{t} strict={strict}: classes add to {total}"))?;
        }
    }
    Ok("hand tables and chi values agree".into())
}

/// Orbits of `W` on `(Z/t)^n` by Burnside's lemma over the full group.
fn burnside(r: &RootSystem, t: i64) -> u128 {
    let n = r.rank();
    let group = generate_group(r, DEFAULT_GROUP_CAP).unwrap();
    let size = (t as usize).pow(n as u32);
    let mut fixed_total: u128 = 0;
    let mut q = vec![0i64; n];
    for w in &group {
        let m = w.cw_matrix(r);
        let mut fixed = 0u128;
        for idx in 0..size {
            let mut c = idx;
            for x in q.iter_mut() {
                *x = (c % t as usize) as i64;
                c /= t as usize;
            }
            let ok = (0..n).all(|i| {
                let v: i64 = (0..n).map(|j| m[i][j] * q[j]).sum();
                (v - q[i]).rem_euclid(t) == 0
            });
            fixed += u128::from(ok);
        }
        fixed_total += fixed;
    }
    assert_eq!(fixed_total % group.len() as u128, 0);
    fixed_total / group.len() as u128
}

fn criterion_9() -> Outcome {
    let mut rows = 0;
    for t in RANK_LE_4 {
        let r = rs(t);
        let h = r.coxeter_number();
        for (tt, shift) in [(h - 1, -1), (h + 1, 1)] {
            let orbits = count_orbits_mod(&r, tt, DEFAULT_RESIDUE_CAP).map_err(|e| e.to_string())? as u128;
            let ta = ta_points(&r, tt).map_err(|e| e.to_string())?.len() as u128;
            let f = count_formula(&r, tt);
            let want = table_count(t, shift);
            ensure(f.is_integer() && f.to_integer() as u128 == want, || format!("{t} t={tt}: formula {f}"))?;
            ensure(orbits == want && ta == want, || format!("{t} t={tt}: orbits {orbits}, tA {ta}, formula {want}"))?;
            let b = burnside(&r, tt);
            ensure(b == want, || format!("{t} t={tt}: Burnside count {b}"))?;
            rows += 1;
        }
    }
    Ok(format!("{rows} (type, t) pairs, union-find and Burnside agree"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut words = 0;
    for t in RANK_LE_3 {
        let r = rs(t);
        for _ in 0..1000 {
            let len = rng.gen_range(0..=30);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=r.rank())).collect();
            let w = affine::from_word(&r, &word);
            let k = affine::k_vector(&r, &w);
            ensure(floor_k(&r, &w) == k, || format!("{t} {word:?}: closed form differs from alcove point"))?;
            let l = affine::length(&r, &w);
            ensure(l == k.iter().map(|x| x.abs()).sum::<i64>(), || format!("{t} {word:?}: length"))?;
            ensure(affine::n_set(&r, &w).len() as i64 == l, || format!("{t} {word:?}: N(w) from k"))?;
            // N(w) by direct search over affine roots
            let inv = w.inverse(&r);
            let top = (0..r.n_roots()).map(|a| r.pairing(a, &inv.lambda).abs()).max().unwrap() + 1;
            let mut direct = 0i64;
            for root in 0..r.n_roots() {
                for level in -top..=top {
                    let a = AffineRoot { root, level };
                    if a.is_positive(&r) && !inv.act(&r, a).is_positive(&r) {
                        direct += 1;
                    }
                }
            }
            ensure(direct == l, || format!("{t} {word:?}: direct |N(w)| = {direct}, length {l}"))?;
            words += 1;
        }
    }
    Ok(format!("{words} random words"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("ideal counts match the product formula", 330, criterion_1),
        ("strictly positive ideal counts", 330, criterion_2),
        ("bijections with D^(h+1) and D^(h-1)", 60, criterion_3),
        ("admissible k-vectors are exactly the alcoves", 10, criterion_4),
        ("extremal elements and their neighbors", 60, criterion_5),
        ("bounding roots and affine simple images", 60, criterion_6),
        ("minimal antichains conjugate to simple roots", 300, criterion_7),
        ("ideal counts per class equal chi_J", 120, criterion_8),
        ("orbit counts on the coroot lattice mod t", 30, criterion_9),
        ("length, k-vector and inversion set agree", 10, criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > Duration::from_secs(*limit) => Err(format!("{d}; exceeded {limit} s")),
            o => o,
        };
        match outcome {
            Ok(d) => println!("criterion {:>2} PASS ({} ms) {name}: {d}", i + 1, elapsed.as_millis()),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({} ms) {name}: {e}", i + 1, elapsed.as_millis());
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria fail", criteria.len());
        ExitCode::FAILURE
    }
}
