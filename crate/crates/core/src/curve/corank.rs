//! Cohomology through the normalization sequence, as an independent cross-check.
//!
//! `0 → H⁰(C, D) → H⁰(C̃, D) → ⊕ J/A → H¹(C, D) → H¹(C̃, D) → 0`, where
//! `J/A` is the jet space modulo the local algebra at each singular point.
//! Functions on each `ℙ¹` are written as `P(t)/Q(t)` with polynomial
//! numerators; nothing here shares code with the partial-fraction solver.

use super::{CurveModel, Divisor, Point};
use crate::rational::Rational;
use crate::ring::Ring;

type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn pmul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    trim(out)
}

/// `(t − a)^n`
fn linear_power(a: &Rational, n: i64) -> Poly {
    let lin = vec![-a.clone(), Rational::one()];
    (0..n).fold(vec![Rational::one()], |acc, _| pmul(&acc, &lin))
}

/// Coefficients of `p(b + s)` in `s`.
fn shift(p: &[Rational], b: &Rational) -> Poly {
    let mut out: Poly = Vec::new();
    for c in p.iter().rev() {
        out = pmul(&out, &[b.clone(), Rational::one()]);
        if out.is_empty() {
            out.push(Rational::zero());
        }
        out[0] = &out[0] + c;
    }
    trim(out)
}

/// First `k` coefficients of `num / den` as power series (`den(0) ≠ 0`).
fn series_div(num: &[Rational], den: &[Rational], k: usize) -> Poly {
    let inv = den[0].recip();
    let mut out = Vec::with_capacity(k);
    for n in 0..k {
        let mut c = num.get(n).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=n.min(den.len().saturating_sub(1)) {
            c = c - &den[j] * &out[n - j];
        }
        out.push(c * &inv);
    }
    out
}

/// Jet of order `k` of `p/q` at `at` in the local coordinate (`t − b` or `1/t`).
fn jet(p: &[Rational], q: &[Rational], at: &Point, k: usize) -> Poly {
    match at {
        Point::Finite(b) => series_div(&shift(p, b), &shift(q, b), k),
        Point::Infinity => {
            // p(1/s)/q(1/s) = s^{deg q − deg p} p̄(s)/q̄(s) with reversed coefficients
            let (dp, dq) = (p.len() as i64 - 1, q.len() as i64 - 1);
            let lead = (dq - dp) as usize;
            let mut num = vec![Rational::zero(); lead];
            num.extend(p.iter().rev().cloned());
            let den: Poly = q.iter().rev().cloned().collect();
            series_div(&num, &den, k)
        }
    }
}

/// Rank by Gaussian elimination on a copy.
fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..cols {
                let d = &f * &m[r][j];
                m[i][j] = &m[i][j] - &d;
            }
        }
        r += 1;
    }
    r
}

/// Numerators spanning `H⁰(ℙ¹, O(D_c))` over the common denominator, and `h¹(ℙ¹, O(D_c))`.
fn component_sections(curve: &CurveModel, d: &Divisor, comp: usize) -> (Poly, Vec<Poly>, usize) {
    let mut den = vec![Rational::one()];
    let mut zeros = vec![Rational::one()];
    let mut at_inf = 0i64;
    let mut total = 0i64;
    for (m, &n) in curve.marked.iter().zip(&d.mult) {
        if m.component != comp {
            continue;
        }
        total += n;
        match &m.point {
            Point::Infinity => at_inf = n,
            Point::Finite(a) if n > 0 => den = pmul(&den, &linear_power(a, n)),
            Point::Finite(a) => zeros = pmul(&zeros, &linear_power(a, -n)),
        }
    }
    let top = (den.len() as i64 - 1) + at_inf - (zeros.len() as i64 - 1);
    let nums = (0..=top.max(-1))
        .map(|i| {
            let mut mono = vec![Rational::zero(); i as usize];
            mono.push(Rational::one());
            pmul(&zeros, &mono)
        })
        .collect();
    (den, nums, (-total - 1).max(0) as usize)
}

/// `(h⁰, h¹)` from the normalization sequence.
pub fn cohomology_by_corank(curve: &CurveModel, d: &Divisor) -> (usize, usize) {
    let mut images: Vec<Vec<Rational>> = Vec::new();
    let mut upstairs = 0;
    let mut h1_normalization = 0;
    let dims: Vec<usize> = curve.singularities.iter().map(|s| s.jet_dim()).collect();
    let total_dim: usize = dims.iter().sum();
    for comp in 0..curve.components.len() {
        let (den, nums, h1c) = component_sections(curve, d, comp);
        upstairs += nums.len();
        h1_normalization += h1c;
        for p in &nums {
            let mut v = Vec::with_capacity(total_dim);
            for s in &curve.singularities {
                for b in &s.branches {
                    if b.component == comp {
                        v.extend(jet(p, &den, &b.point, s.jet_order));
                    } else {
                        v.extend(std::iter::repeat_n(Rational::zero(), s.jet_order));
                    }
                }
            }
            images.push(v);
        }
    }
    let mut algebra: Vec<Vec<Rational>> = Vec::new();
    let mut offset = 0;
    let mut delta = 0;
    for (s, &dim) in curve.singularities.iter().zip(&dims) {
        for v in &s.algebra_basis {
            let mut w = vec![Rational::zero(); total_dim];
            w[offset..offset + dim].clone_from_slice(v);
            algebra.push(w);
        }
        delta += dim - rank(&s.algebra_basis);
        offset += dim;
    }
    let base = rank(&algebra);
    let mut both = algebra;
    both.extend(images);
    let image_rank = rank(&both) - base;
    (upstairs - image_rank, delta - image_rank + h1_normalization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn jets_at_finite_and_infinite_points() {
        // 1/(t - 1) at t = 0
        let j = jet(&[int(1)], &[int(-1), int(1)], &Point::Finite(int(0)), 3);
        assert_eq!(j, vec![int(-1), int(-1), int(-1)]);
        // (t^2 + 1)/(t^2 - 4) at infinity: 1 + 5 s^2 + ...
        let j = jet(&[int(1), int(0), int(1)], &[int(-4), int(0), int(1)], &Point::Infinity, 3);
        assert_eq!(j, vec![int(1), int(0), int(5)]);
        assert_eq!(shift(&[int(0), int(0), int(1)], &frac(1, 2)), vec![frac(1, 4), int(1), int(1)]);
    }
}
