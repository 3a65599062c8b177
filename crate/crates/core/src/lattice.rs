//! Coroot lattice points in the simplices `D^t` and `tĀ`, the bijections
//! with (strictly positive) ideals, and the orbit counts on `Q∨/tQ∨`.
//!
//! Points are stored as coweights in simple-coroot coordinates; the
//! fundamental-coweight coordinates `u_i = ⟨α_i, λ⟩` are used for scanning.

use num_integer::Integer;
use num_rational::Ratio;

use crate::affine::{self, AffineElement};
use crate::error::{Error, Result};
use crate::ideals::{max_complement_roots, Ideal};
use crate::linalg::{self, Q};
use crate::roots::{Coweight, RootId, RootSystem};
use crate::rootset::RootSet;
use crate::weyl::{generate_group, to_dominant_chamber, WeylElement, DEFAULT_GROUP_CAP};

/// Default bound on the number of residues in [`count_orbits_mod`].
pub const DEFAULT_RESIDUE_CAP: u128 = 50_000_000;

/// `t = a·h + b` with `1 ≤ b < h`; `upper` is `Φ_b` (bound `a`), `lower` is
/// `Φ_{b-h}` (bound `a + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexSpec {
    pub t: i64,
    pub a: i64,
    pub b: i64,
    pub upper: Vec<RootId>,
    pub lower: Vec<RootId>,
}

impl SimplexSpec {
    pub fn new(rs: &RootSystem, t: i64) -> Result<SimplexSpec> {
        let h = rs.coxeter_number();
        if t < 1 || t.gcd(&h) != 1 {
            return Err(Error::NotCoprime { t, h });
        }
        let (a, b) = (t / h, t % h);
        let spec = SimplexSpec {
            t,
            a,
            b,
            upper: rs.roots_of_height(b),
            lower: rs.roots_of_height(b - h),
        };
        if t == h + 1 {
            debug_assert_eq!(spec.upper, (0..rs.rank()).collect::<Vec<_>>());
            debug_assert_eq!(spec.lower, vec![rs.neg(rs.theta())]);
        }
        if t == h - 1 {
            debug_assert_eq!(spec.upper, vec![rs.theta()]);
            debug_assert_eq!(spec.lower, (0..rs.rank()).map(|i| rs.neg(i)).collect::<Vec<_>>());
        }
        Ok(spec)
    }

    /// `(root, bound)` pairs: `⟨root, λ⟩ ≤ bound`.
    pub fn constraints(&self) -> Vec<(RootId, i64)> {
        self.upper
            .iter()
            .map(|&r| (r, self.a))
            .chain(self.lower.iter().map(|&r| (r, self.a + 1)))
            .collect()
    }

    pub fn contains(&self, rs: &RootSystem, lambda: &Coweight) -> bool {
        self.constraints()
            .iter()
            .all(|&(r, bound)| rs.pairing(r, lambda) <= bound)
    }

    /// Roots whose inequality is tight at `λ`.
    pub fn tight(&self, rs: &RootSystem, lambda: &Coweight) -> Vec<RootId> {
        let mut out: Vec<RootId> = self
            .constraints()
            .iter()
            .filter(|&&(r, bound)| rs.pairing(r, lambda) == bound)
            .map(|&(r, _)| r)
            .collect();
        out.sort_unstable();
        out
    }
}

/// `Q∨` membership and coordinate change from `u = Cᵀ q` back to `q`.
struct Conversion {
    det: i64,
    /// `det · (Cᵀ)⁻¹`.
    adj: Vec<Vec<i64>>,
}

impl Conversion {
    fn new(rs: &RootSystem) -> Conversion {
        let n = rs.rank();
        let ct = cartan_transpose(rs);
        let inv = linalg::inverse(&ct).expect("Cartan matrix is nonsingular");
        let det = inv
            .iter()
            .flatten()
            .fold(1i64, |acc, q| acc.lcm(q.denom()));
        let adj = (0..n)
            .map(|i| (0..n).map(|j| (inv[i][j] * det).to_integer()).collect())
            .collect();
        Conversion { det, adj }
    }

    fn to_coroot(&self, u: &[i64]) -> Option<Coweight> {
        let mut q = Vec::with_capacity(u.len());
        for row in &self.adj {
            let s: i64 = row.iter().zip(u).map(|(a, b)| a * b).sum();
            if s % self.det != 0 {
                return None;
            }
            q.push(s / self.det);
        }
        Some(Coweight(q))
    }
}

fn cartan_transpose(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    (0..n).map(|i| (0..n).map(|j| rs.cartan()[j][i]).collect()).collect()
}

/// Vertices of the polytope `{u : f·u ≤ bound}` cut out by `n + 1`
/// inequalities in `n` variables (a simplex when bounded).
fn simplex_vertices(n: usize, cons: &[(Vec<i64>, i64)]) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for skip in 0..cons.len() {
        let rows: Vec<&(Vec<i64>, i64)> = cons
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, c)| c)
            .collect();
        if rows.len() != n {
            continue;
        }
        let a: Vec<Vec<Q>> = rows
            .iter()
            .map(|(f, _)| f.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        let b: Vec<Q> = rows.iter().map(|(_, c)| Q::from_integer(*c)).collect();
        let Some(v) = linalg::solve(&a, &b) else { continue };
        let feasible = cons.iter().all(|(f, c)| {
            f.iter().zip(&v).map(|(&x, y)| *y * x).sum::<Q>() <= Q::from_integer(*c)
        });
        if feasible {
            out.push(v);
        }
    }
    out
}

/// Integer points `u` with `f·u ≤ bound` for every constraint, in
/// lexicographic order. The region must be a bounded simplex.
fn integer_points(n: usize, cons: &[(Vec<i64>, i64)]) -> Result<Vec<Vec<i64>>> {
    let verts = simplex_vertices(n, cons);
    if verts.len() != n + 1 {
        return Err(Error::Internal("constraints do not cut out a simplex".into()));
    }
    let lo: Vec<i64> = (0..n)
        .map(|i| verts.iter().map(|v| v[i]).min().unwrap().ceil().to_integer())
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|i| verts.iter().map(|v| v[i]).max().unwrap().floor().to_integer())
        .collect();
    // suffix[c][j]: least possible contribution of coordinates j.. to constraint c
    let suffix: Vec<Vec<i64>> = cons
        .iter()
        .map(|(f, _)| {
            let mut s = vec![0; n + 1];
            for j in (0..n).rev() {
                s[j] = s[j + 1] + (f[j] * lo[j]).min(f[j] * hi[j]);
            }
            s
        })
        .collect();
    let mut out = Vec::new();
    let mut u = vec![0i64; n];
    let mut partial = vec![0i64; cons.len()];
    rec_points(0, &lo, &hi, cons, &suffix, &mut u, &mut partial, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn rec_points(
    j: usize,
    lo: &[i64],
    hi: &[i64],
    cons: &[(Vec<i64>, i64)],
    suffix: &[Vec<i64>],
    u: &mut Vec<i64>,
    partial: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let n = lo.len();
    if j == n {
        out.push(u.clone());
        return;
    }
    for v in lo[j]..=hi[j] {
        let ok = cons
            .iter()
            .enumerate()
            .all(|(c, (f, bound))| partial[c] + f[j] * v + suffix[c][j + 1] <= *bound);
        if !ok {
            continue;
        }
        u[j] = v;
        for (c, (f, _)) in cons.iter().enumerate() {
            partial[c] += f[j] * v;
        }
        rec_points(j + 1, lo, hi, cons, suffix, u, partial, out);
        for (c, (f, _)) in cons.iter().enumerate() {
            partial[c] -= f[j] * v;
        }
    }
}

fn spec_constraints(rs: &RootSystem, spec: &SimplexSpec) -> Vec<(Vec<i64>, i64)> {
    spec.constraints()
        .iter()
        .map(|&(r, bound)| (rs.root(r).coeffs.clone(), bound))
        .collect()
}

fn alcove_constraints(rs: &RootSystem, t: i64) -> Vec<(Vec<i64>, i64)> {
    let n = rs.rank();
    let mut cons: Vec<(Vec<i64>, i64)> = (0..n)
        .map(|i| {
            let mut f = vec![0; n];
            f[i] = -1;
            (f, 0)
        })
        .collect();
    cons.push((rs.theta_coeffs().to_vec(), t));
    cons
}

fn lattice_points(rs: &RootSystem, cons: &[(Vec<i64>, i64)]) -> Result<Vec<Coweight>> {
    let conv = Conversion::new(rs);
    Ok(integer_points(rs.rank(), cons)?
        .iter()
        .filter_map(|u| conv.to_coroot(u))
        .collect())
}

/// `D^t`: coroot lattice points with `⟨α, λ⟩ ≤ a` on `Φ_b` and
/// `⟨α, λ⟩ ≤ a + 1` on `Φ_{b-h}`, ordered lexicographically in
/// fundamental-coweight coordinates.
pub fn d_set(rs: &RootSystem, t: i64) -> Result<Vec<Coweight>> {
    let spec = SimplexSpec::new(rs, t)?;
    lattice_points(rs, &spec_constraints(rs, &spec))
}

/// `B_{t,λ}`: the bounding roots whose inequality is an equality at `λ`.
pub fn b_set(rs: &RootSystem, t: i64, lambda: &Coweight) -> Result<Vec<RootId>> {
    let spec = SimplexSpec::new(rs, t)?;
    if !spec.contains(rs, lambda) {
        return Err(Error::NotInSimplex { t });
    }
    Ok(spec.tight(rs, lambda))
}

/// Translation part of `w_min(I)`, a point of `D^{h+1}`.
pub fn ideal_to_lambda(rs: &RootSystem, ideal: &Ideal) -> Result<Coweight> {
    let w = affine::w_min(rs, ideal)?;
    let spec = SimplexSpec::new(rs, rs.coxeter_number() + 1)?;
    if !spec.contains(rs, &w.lambda) {
        return Err(Error::Internal("w_min translation outside D^(h+1)".into()));
    }
    Ok(w.lambda)
}

fn support_ideal(rs: &RootSystem, lambda: &Coweight) -> Result<Ideal> {
    let (x, _) = to_dominant_chamber(rs, lambda);
    let w = AffineElement {
        x,
        lambda: lambda.clone(),
    };
    let set = affine::dominant_support(&affine::k_vector(rs, &w))
        .ok_or_else(|| Error::Internal("chamber element is not dominant".into()))?;
    Ideal::new(rs, set).map_err(|e| Error::Internal(format!("support is not an ideal: {e}")))
}

/// Support of `x τ_λ` with `x` the minimal element taking `λ` to the
/// dominant chamber.
pub fn lambda_to_ideal(rs: &RootSystem, lambda: &Coweight) -> Result<Ideal> {
    let spec = SimplexSpec::new(rs, rs.coxeter_number() + 1)?;
    if !spec.contains(rs, lambda) {
        return Err(Error::NotInSimplex { t: spec.t });
    }
    support_ideal(rs, lambda)
}

/// Translation part of `w_max(I)`, a point of `D^{h-1}`.
pub fn strict_ideal_to_lambda(rs: &RootSystem, ideal: &Ideal) -> Result<Coweight> {
    let w = affine::w_max(rs, ideal)?;
    let spec = SimplexSpec::new(rs, rs.coxeter_number() - 1)?;
    if !spec.contains(rs, &w.lambda) {
        return Err(Error::Internal("w_max translation outside D^(h-1)".into()));
    }
    Ok(w.lambda)
}

pub fn lambda_to_strict_ideal(rs: &RootSystem, lambda: &Coweight) -> Result<Ideal> {
    let spec = SimplexSpec::new(rs, rs.coxeter_number() - 1)?;
    if !spec.contains(rs, lambda) {
        return Err(Error::NotInSimplex { t: spec.t });
    }
    let ideal = support_ideal(rs, lambda)?;
    if !ideal.is_strict() {
        return Err(Error::Internal("image ideal meets a simple root".into()));
    }
    Ok(ideal)
}

/// Both sides of each comparison are sorted root-id lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplesCheck {
    pub min_image: Vec<RootId>,
    pub min_bounding: Vec<RootId>,
    pub max_image: Option<Vec<RootId>>,
    pub max_bounding: Option<Vec<RootId>>,
}

impl SimplesCheck {
    pub fn pass(&self) -> bool {
        self.min_image == self.min_bounding && self.max_image == self.max_bounding
    }
}

/// Compares `x⁻¹(I_min)` with `B_{h+1,λ}` for `w_min = x τ_λ` and, for
/// strictly positive `I`, `x⁻¹(maximal roots of Φ+ - I)` with `B_{h-1,λ}`
/// for `w_max`.
pub fn verify_simples(rs: &RootSystem, ideal: &Ideal) -> Result<SimplesCheck> {
    let h = rs.coxeter_number();
    let image = |x: &WeylElement, set: RootSet| {
        let inv = x.inverse();
        let mut v: Vec<RootId> = set.iter().map(|a| inv.apply_root(a)).collect();
        v.sort_unstable();
        v
    };
    let wmin = affine::w_min(rs, ideal)?;
    let min_image = image(&wmin.x, ideal.min_roots());
    let min_bounding = b_set(rs, h + 1, &wmin.lambda)?;
    let (max_image, max_bounding) = if ideal.is_strict() {
        let wmax = affine::w_max(rs, ideal)?;
        (
            Some(image(&wmax.x, max_complement_roots(rs, ideal))),
            Some(b_set(rs, h - 1, &wmax.lambda)?),
        )
    } else {
        (None, None)
    };
    Ok(SimplesCheck {
        min_image,
        min_bounding,
        max_image,
        max_bounding,
    })
}

/// Coroot lattice points of `tĀ`: `⟨α_i, λ⟩ ≥ 0` and `⟨θ, λ⟩ ≤ t`.
pub fn ta_points(rs: &RootSystem, t: i64) -> Result<Vec<Coweight>> {
    if t < 0 {
        return Err(Error::InvalidArgument(format!("dilation must be nonnegative, got {t}")));
    }
    lattice_points(rs, &alcove_constraints(rs, t))
}

/// Number of `W`-orbits on `Q∨/tQ∨`, by union-find over all `t^n` residues.
pub fn count_orbits_mod(rs: &RootSystem, t: i64, cap: u128) -> Result<u64> {
    if t < 1 {
        return Err(Error::InvalidArgument(format!("modulus must be positive, got {t}")));
    }
    let n = rs.rank();
    let size = (t as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "residue classes",
            limit: cap,
            needed: size,
        });
    }
    let size = size as usize;
    let mut parent: Vec<u32> = (0..size as u32).collect();
    fn find(p: &mut [u32], mut i: u32) -> u32 {
        while p[i as usize] != i {
            p[i as usize] = p[p[i as usize] as usize];
            i = p[i as usize];
        }
        i
    }
    let mut q = vec![0i64; n];
    let mut components = size as u64;
    for idx in 0..size {
        let mut r = idx;
        for c in q.iter_mut() {
            *c = (r % t as usize) as i64;
            r /= t as usize;
        }
        for i in 0..n {
            // s_i(q) = q - <α_i, q> α_i∨
            let p: i64 = (0..n).map(|j| rs.cartan()[j][i] * q[j]).sum();
            let qi = (q[i] - p).rem_euclid(t);
            let mut image = idx as i64;
            let mut place = 1i64;
            for _ in 0..i {
                place *= t;
            }
            image += (qi - q[i]) * place;
            let (a, b) = (find(&mut parent, idx as u32), find(&mut parent, image as u32));
            if a != b {
                parent[a as usize] = b;
                components -= 1;
            }
        }
    }
    Ok(components)
}

/// `(1/|W|) ∏ (t + m_i)`.
pub fn count_formula(rs: &RootSystem, t: i64) -> Ratio<i128> {
    let num: i128 = rs.exponents().iter().map(|&m| (t + m) as i128).product();
    Ratio::new(num, rs.weyl_order() as i128)
}

/// The vertices `0` and `t ω_i∨ / c_i` of `tĀ`, in simple-coroot coordinates.
fn alcove_vertices(rs: &RootSystem, t: i64) -> Vec<Vec<Q>> {
    let n = rs.rank();
    let c = rs.theta_coeffs();
    let mut out = vec![vec![Q::from_integer(0); n]];
    for i in 0..n {
        let w = affine::fundamental_coweight(rs, i);
        out.push(w.iter().map(|x| *x * Q::new(t, c[i])).collect());
    }
    out
}

fn to_coroot_q(rs: &RootSystem, u: &[Q]) -> Vec<Q> {
    let n = rs.rank();
    let inv = linalg::inverse(&cartan_transpose(rs)).expect("nonsingular");
    (0..n).map(|i| (0..n).map(|j| inv[i][j] * u[j]).sum()).collect()
}

/// `w̃ = x̃ τ_λ̃ ∈ W_a` with `w̃(Δ^t) = tĀ`, the first one in BFS order of
/// `W` and then in the order of [`ta_points`].
///
/// Each candidate sends the lexicographically least point of `D^t` to a point
/// of `tĀ`; it is accepted when it maps `D^t` onto the lattice points of `tĀ`
/// and the vertices of `Δ^t` onto those of `tĀ`. With inequalities written
/// as `⟨β, v⟩ ≤ bound`, the bounding roots then satisfy
/// `x̃(Φ_b ∪ Φ_{b-h}) = {-α_1, …, -α_n, θ}`.
pub fn find_simplex_map(rs: &RootSystem, t: i64) -> Result<AffineElement> {
    let spec = SimplexSpec::new(rs, t)?;
    let cons = spec_constraints(rs, &spec);
    let dset = lattice_points(rs, &cons)?;
    let target = ta_points(rs, t)?;
    if dset.len() != target.len() {
        return Err(Error::Internal(format!(
            "|D^t| = {} but tA has {} points",
            dset.len(),
            target.len()
        )));
    }
    let mut target_sorted = target.clone();
    target_sorted.sort();
    let mut tv = alcove_vertices(rs, t);
    tv.sort();
    let dv: Vec<Vec<Q>> = simplex_vertices(rs.rank(), &cons)
        .iter()
        .map(|u| to_coroot_q(rs, u))
        .collect();
    let p0 = &dset[0];
    for x in generate_group(rs, DEFAULT_GROUP_CAP)? {
        let x_inv = x.inverse();
        for q in &target {
            let lambda = x_inv.apply_cw(rs, q).sub(p0);
            let w = AffineElement { x: x.clone(), lambda };
            let mut img: Vec<Coweight> = dset
                .iter()
                .map(|p| x.apply_cw(rs, &p.add(&w.lambda)))
                .collect();
            img.sort();
            if img != target_sorted {
                continue;
            }
            let mut vimg: Vec<Vec<Q>> = dv.iter().map(|v| w.apply_point(rs, v)).collect();
            vimg.sort();
            if vimg == tv {
                return Ok(w);
            }
        }
    }
    Err(Error::Internal(format!("no simplex map found for t = {t}")))
}

/// `x̃(Φ_b ∪ Φ_{b-h})` as a sorted list.
pub fn facet_image(rs: &RootSystem, t: i64, w: &AffineElement) -> Result<Vec<RootId>> {
    let spec = SimplexSpec::new(rs, t)?;
    let mut v: Vec<RootId> = spec
        .upper
        .iter()
        .chain(&spec.lower)
        .map(|&r| w.x.apply_root(r))
        .collect();
    v.sort_unstable();
    Ok(v)
}

/// `{-α_1, …, -α_n, θ}` as a sorted list.
pub fn negative_affine_simples(rs: &RootSystem) -> Vec<RootId> {
    let mut v: Vec<RootId> = (0..rs.rank()).map(|i| rs.neg(i)).collect();
    v.push(rs.theta());
    v.sort_unstable();
    v
}
