//! Small exact linear algebra over the rationals.

use num_integer::Integer;
use num_rational::Ratio;

pub type Q = Ratio<i64>;

pub fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && m[i][c] != Q::from_integer(0) {
                let f = m[i][c];
                for k in 0..cols {
                    let v = m[r][k];
                    m[i][k] -= f * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m = to_q(rows);
    rref(&mut m).len()
}

/// Inverse of a square integer matrix, if nonsingular.
pub fn inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| Q::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve `a x = b` for square nonsingular `a`.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &y)| {
            let mut r = row.clone();
            r.push(y);
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n]).collect())
}

/// Scale a rational vector to a primitive integer vector whose first nonzero
/// entry is positive. The zero vector maps to zero.
pub fn primitive(v: &[Q]) -> Vec<i64> {
    let l = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x * l).to_integer()).collect();
    primitive_int(&ints)
}

pub fn primitive_int(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    let sign = v.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
    v.iter().map(|x| x / g * sign).collect()
}

/// Basis of the rational null space of `rows` (as `cols`-vectors), each
/// vector scaled to a primitive integer vector.
pub fn kernel(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut m = to_q(rows);
    let pivots = if m.is_empty() { Vec::new() } else { rref(&mut m) };
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::from_integer(0); cols];
            v[f] = Q::from_integer(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f];
            }
            primitive(&v)
        })
        .collect()
}
