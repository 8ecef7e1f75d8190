//! Truncated Laurent series and tangent-preserving parameter changes.
//!
//! A [`LaurentSeries`] knows its coefficients on a window `[low, high)`;
//! `high == EXACT` marks a Laurent polynomial with nothing truncated. Every
//! operation returns the tightest window that its inputs determine, and asking
//! for a coefficient at or beyond `high` is an error rather than a zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;
use crate::ring::Ring;

/// Truncation marker for series that are known exactly.
pub const EXACT: i64 = i64::MAX;

fn shift_high(v: i64, h: i64) -> i64 {
    if h == EXACT {
        EXACT
    } else {
        v + h
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<R> {
    var: String,
    low: i64,
    coeffs: Vec<R>,
    high: i64,
}

impl<R: Ring> LaurentSeries<R> {
    /// Series `Σ coeffs[i]·var^(low+i) + O(var^high)`.
    pub fn new(var: &str, low: i64, coeffs: Vec<R>, high: i64) -> Self {
        let mut s = LaurentSeries {
            var: var.to_string(),
            low,
            coeffs,
            high,
        };
        s.normalize();
        s
    }

    pub fn exact(var: &str, low: i64, coeffs: Vec<R>) -> Self {
        Self::new(var, low, coeffs, EXACT)
    }

    pub fn zero(var: &str) -> Self {
        Self::exact(var, 0, Vec::new())
    }

    pub fn monomial(var: &str, exp: i64, c: R) -> Self {
        Self::exact(var, exp, vec![c])
    }

    /// Builds a series from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(var: &str, terms: impl IntoIterator<Item = (i64, R)>, high: i64) -> Self {
        let terms: Vec<(i64, R)> = terms.into_iter().filter(|(e, _)| *e < high).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::new(var, 0, Vec::new(), high);
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![R::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.clone() + &c;
        }
        Self::new(var, lo, coeffs, high)
    }

    fn normalize(&mut self) {
        if self.high != EXACT {
            let keep = (self.high - self.low).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    /// Exclusive truncation exponent (`EXACT` if none).
    pub fn high(&self) -> i64 {
        self.high
    }

    pub fn is_exact(&self) -> bool {
        self.high == EXACT
    }

    /// No nonzero coefficient inside the known window.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent that may carry a nonzero coefficient.
    pub fn valuation(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.high
        } else {
            self.low
        }
    }

    /// Highest exponent with a stored nonzero coefficient.
    pub fn top_exponent(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficient of `var^k`, or a shortfall error when `k` is beyond the truncation.
    pub fn coefficient(&self, k: i64) -> Result<R, SeriesError> {
        if k >= self.high {
            return Err(SeriesError::TruncationShortfall {
                requested: k,
                available: self.high,
            });
        }
        Ok(self.coeff_unchecked(k))
    }

    fn coeff_unchecked(&self, k: i64) -> R {
        if k < self.low || k >= self.low + self.coeffs.len() as i64 {
            R::zero()
        } else {
            self.coeffs[(k - self.low) as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn truncate(&self, high: i64) -> Self {
        Self::new(&self.var, self.low, self.coeffs.clone(), high.min(self.high))
    }

    /// Multiplication by `var^n`.
    pub fn shift(&self, n: i64) -> Self {
        Self::new(&self.var, self.low + n, self.coeffs.clone(), shift_high(n, self.high))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(
            &self.var,
            self.low,
            self.coeffs.iter().map(|x| x.clone() * c).collect(),
            self.high,
        )
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LaurentSeries<S> {
        LaurentSeries::new(&self.var, self.low, self.coeffs.iter().map(f).collect(), self.high)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let high = self.high.min(other.high);
        let (Some(_), Some(_)) = (self.top_exponent(), other.top_exponent()) else {
            let src = if self.coeffs.is_empty() { other } else { self };
            let mut out = src.truncate(high);
            if negate && std::ptr::eq(src, other) {
                out = -out;
            }
            return out;
        };
        let lo = self.low.min(other.low);
        let hi = self
            .top_exponent()
            .unwrap()
            .max(other.top_exponent().unwrap())
            .min(high.saturating_sub(1));
        if hi < lo {
            return Self::new(&self.var, 0, Vec::new(), high);
        }
        let coeffs = (lo..=hi)
            .map(|k| {
                let b = other.coeff_unchecked(k);
                let a = self.coeff_unchecked(k);
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Self::new(&self.var, lo, coeffs, high)
    }

    fn product(&self, other: &Self) -> Self {
        let high = shift_high(self.valuation(), other.high).min(shift_high(other.valuation(), self.high));
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(&self.var, 0, Vec::new(), high);
        }
        let lo = self.low + other.low;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if high != EXACT {
            len = len.min((high - lo).max(0) as usize);
        }
        let mut coeffs = vec![R::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = coeffs[i + j].clone() + &(a.clone() * b);
            }
        }
        Self::new(&self.var, lo, coeffs, high)
    }

    /// Multiplicative inverse. The leading coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let v = self.valuation();
        let lead = self.coeffs.first().ok_or(SeriesError::NotInvertible)?;
        let inv0 = R::one().div_unit(lead).ok_or(SeriesError::NotInvertible)?;
        if self.coeffs.len() == 1 && self.is_exact() {
            return Ok(Self::monomial(&self.var, -v, inv0));
        }
        if self.is_exact() {
            return Err(SeriesError::InfiniteExpansion);
        }
        let n = (self.high - v) as usize;
        let unit = ps_inverse(&self.coeffs, n, &inv0);
        Ok(Self::new(&self.var, -v, unit, -v + n as i64))
    }

    /// Integer power; negative exponents go through [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::monomial(&self.var, 0, R::one());
        for _ in 0..e.unsigned_abs() {
            acc = acc.product(&base);
        }
        Ok(acc)
    }

    /// Composition `self(t(u))` for a parameter change `t = pc(u)`, computed on `[.., want_high)`.
    ///
    /// Negative powers of `t` expand through the inverse of the unit part
    /// `t/u`. Fails with a truncation shortfall when `self` or `pc` is not
    /// known deeply enough to determine every coefficient below `want_high`.
    pub fn substitute(&self, pc: &ParamChange<R>, want_high: i64) -> Result<Self, SeriesError> {
        let var = pc.series.var.clone();
        let v = self.valuation();
        let available = self.high.min(shift_high(v - 1, pc.order()));
        if available < want_high {
            return Err(SeriesError::TruncationShortfall {
                requested: want_high - 1,
                available,
            });
        }
        let rel = want_high - v;
        if self.coeffs.is_empty() || rel <= 0 {
            return Ok(LaurentSeries::new(&var, 0, Vec::new(), want_high));
        }
        let n = rel as usize;
        // unit part U = t/u, V = u·U
        let unit: Vec<R> = (0..n).map(|i| pc.series.coeff_unchecked(i as i64 + 1)).collect();
        let mut tser = vec![R::zero(); n];
        tser[1..n].clone_from_slice(&unit[..n - 1]);
        // Horner for Q = Σ_j s_{v+j} V^j mod u^n
        let mut q = vec![R::zero(); n];
        for j in (0..n).rev() {
            q = ps_mul(&q, &tser, n);
            q[0] = q[0].clone() + &self.coeff_unchecked(v + j as i64);
        }
        let unit_pow = ps_pow(&unit, v, n)?;
        let body = ps_mul(&unit_pow, &q, n);
        Ok(LaurentSeries::new(&var, v, body, want_high))
    }
}

fn ps_mul<R: Ring>(a: &[R], b: &[R], n: usize) -> Vec<R> {
    let mut out = vec![R::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j].clone() + &(x.clone() * y);
        }
    }
    out
}

fn ps_inverse<R: Ring>(a: &[R], n: usize, inv0: &R) -> Vec<R> {
    let mut b: Vec<R> = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            b.push(inv0.clone());
            continue;
        }
        let mut s = R::zero();
        for i in 1..=k.min(a.len().saturating_sub(1)) {
            s = s + &(a[i].clone() * &b[k - i]);
        }
        b.push(-(s * inv0));
    }
    b
}

/// `a^e mod u^n` for a power series with unit constant term.
fn ps_pow<R: Ring>(a: &[R], e: i64, n: usize) -> Result<Vec<R>, SeriesError> {
    let base = if e < 0 {
        let inv0 = R::one().div_unit(&a[0]).ok_or(SeriesError::NotInvertible)?;
        ps_inverse(a, n, &inv0)
    } else {
        a.to_vec()
    };
    let mut acc = vec![R::zero(); n];
    acc[0] = R::one();
    let mut sq = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = ps_mul(&acc, &sq, n);
        }
        k >>= 1;
        if k > 0 {
            sq = ps_mul(&sq, &sq, n);
        }
    }
    Ok(acc)
}

impl<'a, R: Ring> Add<&'a LaurentSeries<R>> for &LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn add(self, rhs: &'a LaurentSeries<R>) -> LaurentSeries<R> {
        self.combine(rhs, false)
    }
}

impl<'a, R: Ring> Sub<&'a LaurentSeries<R>> for &LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn sub(self, rhs: &'a LaurentSeries<R>) -> LaurentSeries<R> {
        self.combine(rhs, true)
    }
}

impl<'a, R: Ring> Mul<&'a LaurentSeries<R>> for &LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn mul(self, rhs: &'a LaurentSeries<R>) -> LaurentSeries<R> {
        self.product(rhs)
    }
}

impl<R: Ring> Neg for LaurentSeries<R> {
    type Output = LaurentSeries<R>;
    fn neg(self) -> LaurentSeries<R> {
        LaurentSeries {
            var: self.var,
            low: self.low,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            high: self.high,
        }
    }
}

impl<R: Ring> fmt::Display for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let cs = c.to_string();
            let cs = if cs[1..].contains(" + ") || cs[1..].contains(" - ") {
                format!("({cs})")
            } else {
                cs
            };
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "{cs}*{}", self.var)?,
                _ => write!(f, "{cs}*{}^{e}", self.var)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        if self.high != EXACT {
            write!(f, " + O({}^{})", self.var, self.high)?;
        }
        Ok(())
    }
}

/// A tangent-preserving substitution `t = u + c₂u² + c₃u³ + … + O(u^order)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamChange<R> {
    series: LaurentSeries<R>,
}

impl<R: Ring> ParamChange<R> {
    pub fn identity(var: &str, order: i64) -> Self {
        assert!(order >= 2, "parameter change order must be at least 2");
        ParamChange {
            series: LaurentSeries::new(var, 1, vec![R::one()], order),
        }
    }

    /// Wraps `series`, which must be `u + O(u²)` with a window reaching past `u¹`.
    pub fn new(series: LaurentSeries<R>) -> Result<Self, SeriesError> {
        if series.high() < 2 || series.valuation() != 1 || !series.coeff_unchecked(1).is_one() {
            return Err(SeriesError::NotTangentPreserving);
        }
        Ok(ParamChange { series })
    }

    /// `u + Σ higher[i]·u^(i+2) + O(u^order)`.
    pub fn from_higher(var: &str, higher: Vec<R>, order: i64) -> Self {
        let mut coeffs = vec![R::one()];
        coeffs.extend(higher);
        Self::new(LaurentSeries::new(var, 1, coeffs, order)).expect("leading coefficient is one")
    }

    /// `u + c·u^exponent + O(u^order)` with `exponent ≥ 2`.
    pub fn correction(var: &str, c: R, exponent: u32, order: i64) -> Self {
        assert!(exponent >= 2);
        let terms = [(1, R::one()), (exponent as i64, c)];
        Self::new(LaurentSeries::from_terms(var, terms, order)).expect("leading coefficient is one")
    }

    pub fn series(&self) -> &LaurentSeries<R> {
        &self.series
    }

    pub fn var(&self) -> &str {
        self.series.var()
    }

    /// Exclusive truncation order.
    pub fn order(&self) -> i64 {
        self.series.high()
    }

    pub fn coefficient(&self, k: i64) -> Result<R, SeriesError> {
        self.series.coefficient(k)
    }

    pub fn is_identity(&self) -> bool {
        self.series.terms().count() == 1
    }

    pub fn truncate(&self, order: i64) -> Self {
        ParamChange {
            series: self.series.truncate(order),
        }
    }

    /// `self(inner(u))`, known to the smaller of the two orders.
    pub fn compose(&self, inner: &ParamChange<R>) -> Result<Self, SeriesError> {
        let mut want = self.order().min(inner.order());
        if want == EXACT {
            let da = self.series.top_exponent().unwrap_or(1);
            let db = inner.series.top_exponent().unwrap_or(1);
            want = da * db + 1;
            let s = self.series.substitute(inner, want)?;
            return Ok(ParamChange {
                series: LaurentSeries::exact(inner.var(), s.low, s.coeffs),
            });
        }
        Ok(ParamChange {
            series: self.series.substitute(inner, want)?,
        })
    }

    /// Compositional inverse to the same order.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        if self.order() == EXACT {
            return if self.is_identity() {
                Ok(self.clone())
            } else {
                Err(SeriesError::InfiniteExpansion)
            };
        }
        let order = self.order();
        let mut inv = ParamChange::identity(self.var(), order);
        for n in 2..order {
            let e = self.compose(&inv)?.coefficient(n)?;
            if e.is_zero() {
                continue;
            }
            let fix = LaurentSeries::monomial(self.var(), n, e).truncate(order);
            inv = ParamChange {
                series: &inv.series - &fix,
            };
        }
        Ok(inv)
    }
}

impl<R: Ring> fmt::Display for ParamChange<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.series.fmt(f)
    }
}
