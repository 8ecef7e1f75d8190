//! Sparse multivariate polynomials with weighted monomial orders.
//!
//! A [`MultiPoly`] stores its variables (name and integer weight) together with
//! a map from exponent vectors to nonzero coefficients. Coefficients live in
//! any [`Ring`], so `MultiPoly<MultiPoly<Rational>>` is a polynomial ring over
//! a polynomial ring; this is how relations with symbolic parameters are
//! represented.
//!
//! A polynomial with an empty variable list is a constant and combines with a
//! polynomial over any variable set. Combining two polynomials over different
//! nonempty variable sets is a programming error and panics.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::PolyError;
use crate::rational::Rational;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub weight: u32,
}

impl Variable {
    /// Builds a shared variable list from `(name, weight)` pairs, largest variable first.
    pub fn list(spec: &[(&str, u32)]) -> Arc<[Variable]> {
        spec.iter()
            .map(|&(name, weight)| Variable {
                name: name.to_string(),
                weight,
            })
            .collect()
    }
}

pub type Exponents = Vec<u32>;

/// Weighted degree reverse lexicographic order.
///
/// Exponent vectors list the largest variable first. Monomials are compared by
/// weighted degree; ties go to the monomial whose exponent difference has a
/// negative last nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<u32>,
}

impl MonomialOrder {
    pub fn weighted_degrevlex(weights: Vec<u32>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "monomial weights must be positive");
        MonomialOrder { weights }
    }

    /// The order induced by the variables' own weights and list order.
    pub fn for_variables(vars: &[Variable]) -> Self {
        Self::weighted_degrevlex(vars.iter().map(|v| v.weight).collect())
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn degree(&self, e: &[u32]) -> u64 {
        e.iter()
            .zip(&self.weights)
            .map(|(&x, &w)| x as u64 * w as u64)
            .sum()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), self.weights.len());
        debug_assert_eq!(b.len(), self.weights.len());
        match self.degree(a).cmp(&self.degree(b)) {
            Ordering::Equal => {}
            other => return other,
        }
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // last nonzero entry of a - b negative => a is larger
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

#[derive(Clone, Debug)]
pub struct MultiPoly<R> {
    vars: Arc<[Variable]>,
    terms: BTreeMap<Exponents, R>,
}

fn no_vars() -> Arc<[Variable]> {
    Arc::from(Vec::<Variable>::new())
}

fn unify(a: &Arc<[Variable]>, b: &Arc<[Variable]>) -> Arc<[Variable]> {
    if Arc::ptr_eq(a, b) || a == b || b.is_empty() {
        a.clone()
    } else if a.is_empty() {
        b.clone()
    } else {
        panic!(
            "polynomials over different variable sets: {:?} vs {:?}",
            a.iter().map(|v| &v.name).collect::<Vec<_>>(),
            b.iter().map(|v| &v.name).collect::<Vec<_>>()
        )
    }
}

fn pad(e: &[u32], n: usize) -> Exponents {
    let mut v = e.to_vec();
    v.resize(n, 0);
    v
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero_in(vars: &Arc<[Variable]>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<[Variable]>, c: R) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The `i`-th variable of `vars` as a polynomial.
    pub fn var(vars: &Arc<[Variable]>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, e, R::one())
    }

    /// The variable called `name`. Panics if absent.
    pub fn named(vars: &Arc<[Variable]>, name: &str) -> Self {
        let i = vars
            .iter()
            .position(|v| v.name == name)
            .unwrap_or_else(|| panic!("no variable `{name}`"));
        Self::var(vars, i)
    }

    pub fn monomial(vars: &Arc<[Variable]>, exps: Exponents, c: R) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(vars: &Arc<[Variable]>, terms: impl IntoIterator<Item = (Exponents, R)>) -> Self {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[Variable]> {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the monomial with exponents `e` (zero if absent).
    pub fn coeff(&self, e: &[u32]) -> R {
        if self.vars.is_empty() && e.iter().all(|&x| x == 0) {
            return self.terms.get(&Vec::new()).cloned().unwrap_or_else(R::zero);
        }
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    fn add_term(&mut self, e: Exponents, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + &c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Re-expresses `self` over `vars` (only valid for constants or identical variable sets).
    pub fn embed(&self, vars: &Arc<[Variable]>) -> Self {
        let target = unify(vars, &self.vars);
        let n = target.len();
        MultiPoly {
            vars: target,
            terms: self.terms.iter().map(|(e, c)| (pad(e, n), c.clone())).collect(),
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let vars = unify(&self.vars, &other.vars);
        (self.embed(&vars), other.embed(&vars))
    }

    pub fn weighted_degree(&self, e: &[u32]) -> u64 {
        e.iter()
            .zip(self.vars.iter())
            .map(|(&x, v)| x as u64 * v.weight as u64)
            .sum()
    }

    /// Leading exponent vector and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Exponents, &R)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Exponents> {
        self.leading_term(order).map(|(e, _)| e.clone())
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut out = MultiPoly::zero_in(&self.vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Multiplies by the monomial `c · x^shift`.
    pub fn mul_monomial(&self, shift: &[u32], c: &R) -> Self {
        let mut out = Self::zero_in(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            let ne: Exponents = e.iter().zip(shift).map(|(x, y)| x + y).collect();
            out.add_term(ne, a.clone() * c);
        }
        out
    }

    /// Evaluates at `values` (one per variable) after mapping coefficients with `embed`.
    pub fn eval<S: Ring>(&self, values: &[S], embed: impl Fn(&R) -> S) -> S {
        assert!(self.vars.is_empty() || values.len() == self.vars.len());
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = embed(c);
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    t = t * v;
                }
            }
            acc = acc + &t;
        }
        acc
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.add_term(ne, c.scale(&Rational::from_integer(e[i].into())));
            }
        }
        out
    }

    /// Every polynomial in `terms()` order is nonzero; this checks the invariant.
    pub fn has_no_zero_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero())
    }

    /// Display with terms sorted descending under `order`.
    pub fn display_with(&self, order: &MonomialOrder) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut out = String::new();
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let t = self.term_string(e, c);
            if k == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }

    fn term_string(&self, e: &[u32], c: &R) -> String {
        let mono: Vec<String> = e
            .iter()
            .zip(self.vars.iter())
            .filter(|(&x, _)| x > 0)
            .map(|(&x, v)| if x == 1 { v.name.clone() } else { format!("{}^{}", v.name, x) })
            .collect();
        let cs = c.to_string();
        let compound = cs[1..].contains(" + ") || cs[1..].contains(" - ");
        if mono.is_empty() {
            return if compound { format!("({cs})") } else { cs };
        }
        let m = mono.join("*");
        if c.is_one() {
            m
        } else if (-c.clone()).is_one() {
            format!("-{m}")
        } else if compound {
            format!("({cs})*{m}")
        } else {
            format!("{cs}*{m}")
        }
    }
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        if !self.vars.is_empty() && !other.vars.is_empty() {
            return false;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = MonomialOrder {
            weights: self.vars.iter().map(|v| v.weight.max(1)).collect(),
        };
        f.write_str(&self.display_with(&order))
    }
}

impl<'a, R: Ring> Add<&'a MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<'a, R: Ring> Sub<&'a MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl<'a, R: Ring> Mul<&'a MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        let (a, b) = self.aligned(rhs);
        let mut out = MultiPoly::zero_in(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb);
            }
        }
        out
    }
}

impl<R: Ring> Add for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, rhs: MultiPoly<R>) -> MultiPoly<R> {
        self + &rhs
    }
}

impl<R: Ring> Sub for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, rhs: MultiPoly<R>) -> MultiPoly<R> {
        self - &rhs
    }
}

impl<R: Ring> Mul for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: MultiPoly<R>) -> MultiPoly<R> {
        self * &rhs
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly {
            vars: no_vars(),
            terms: BTreeMap::new(),
        }
    }

    fn one() -> Self {
        Self::from_rational(&<Rational as Ring>::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_rational(r: &Rational) -> Self {
        MultiPoly::constant(&no_vars(), R::from_rational(r))
    }

    fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    fn div_unit(&self, d: &Self) -> Option<Self> {
        if d.terms.len() != 1 {
            return None;
        }
        let (e, c) = d.terms.iter().next().unwrap();
        if e.iter().any(|&x| x != 0) {
            return None;
        }
        let mut out = MultiPoly::zero_in(&self.vars);
        for (ee, cc) in &self.terms {
            out.add_term(ee.clone(), cc.div_unit(c)?);
        }
        Some(out)
    }

    fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(<Rational as Ring>::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&x| x == 0) {
                    c.constant_value()
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

/// Weighted degrees occurring in a ring element, with coefficient rings contributing
/// their own grading.
pub trait Graded {
    fn degrees(&self) -> BTreeSet<u64>;
}

impl Graded for Rational {
    fn degrees(&self) -> BTreeSet<u64> {
        if Ring::is_zero(self) {
            BTreeSet::new()
        } else {
            BTreeSet::from([0])
        }
    }
}

impl<R: Ring + Graded> Graded for MultiPoly<R> {
    fn degrees(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for (e, c) in &self.terms {
            let d = self.weighted_degree(e);
            out.extend(c.degrees().into_iter().map(|x| x + d));
        }
        out
    }
}

/// Result of multivariate division: `f = Σ quotients[i]·basis[i] + remainder`.
#[derive(Clone, Debug)]
pub struct Reduction<R> {
    pub quotients: Vec<MultiPoly<R>>,
    pub remainder: MultiPoly<R>,
}

impl<R: Ring> PartialEq for Reduction<R> {
    fn eq(&self, other: &Self) -> bool {
        self.quotients == other.quotients && self.remainder == other.remainder
    }
}

/// Multivariate division of `f` by `basis` under `order`.
///
/// No monomial of the remainder is divisible by the leading monomial of any
/// basis element. Leading coefficients must be units of the coefficient ring.
pub fn poly_reduce<R: Ring>(
    f: &MultiPoly<R>,
    basis: &[MultiPoly<R>],
    order: &MonomialOrder,
) -> Result<Reduction<R>, PolyError> {
    if basis.is_empty() {
        return Err(PolyError::EmptyBasis);
    }
    let mut vars = f.vars.clone();
    for g in basis {
        vars = unify(&vars, &g.vars);
    }
    let mut leads = Vec::with_capacity(basis.len());
    let mut embedded = Vec::with_capacity(basis.len());
    for (i, g) in basis.iter().enumerate() {
        let g = g.embed(&vars);
        let (e, c) = g.leading_term(order).ok_or(PolyError::ZeroBasisElement(i))?;
        leads.push((e.clone(), c.clone()));
        embedded.push(g);
    }
    let mut p = f.embed(&vars);
    let mut quotients = vec![MultiPoly::zero_in(&vars); basis.len()];
    let mut remainder = MultiPoly::zero_in(&vars);
    while let Some((e, c)) = p.leading_term(order).map(|(e, c)| (e.clone(), c.clone())) {
        let divisor = leads
            .iter()
            .position(|(le, _)| le.iter().zip(&e).all(|(a, b)| a <= b));
        match divisor {
            Some(i) => {
                let (le, lc) = &leads[i];
                let q = c
                    .div_unit(lc)
                    .ok_or_else(|| PolyError::NonUnitLeadingCoefficient(lc.to_string()))?;
                let shift: Exponents = e.iter().zip(le).map(|(a, b)| a - b).collect();
                p = p - &embedded[i].mul_monomial(&shift, &q);
                quotients[i].add_term(shift, q);
            }
            None => {
                p.terms.remove(&e);
                remainder.add_term(e, c);
            }
        }
    }
    Ok(Reduction { quotients, remainder })
}

/// The S-polynomial of `f` and `g`: the combination of `lcm/LT(f)·f` and
/// `lcm/LT(g)·g` cancelling the leading terms.
///
/// When a leading coefficient is not a unit the cross-multiplied form
/// `LC(g)·(lcm/LM(f))·f − LC(f)·(lcm/LM(g))·g` is used instead.
pub fn s_polynomial<R: Ring>(
    f: &MultiPoly<R>,
    g: &MultiPoly<R>,
    order: &MonomialOrder,
) -> Result<MultiPoly<R>, PolyError> {
    let (f, g) = f.aligned(g);
    let (ef, cf) = f.leading_term(order).ok_or(PolyError::ZeroInput)?;
    let (eg, cg) = g.leading_term(order).ok_or(PolyError::ZeroInput)?;
    let lcm: Exponents = ef.iter().zip(eg).map(|(a, b)| *a.max(b)).collect();
    let sf: Exponents = lcm.iter().zip(ef).map(|(a, b)| a - b).collect();
    let sg: Exponents = lcm.iter().zip(eg).map(|(a, b)| a - b).collect();
    let (mf, mg) = match (R::one().div_unit(cf), R::one().div_unit(cg)) {
        (Some(inv_f), Some(inv_g)) => (inv_f, inv_g),
        _ => (cg.clone(), cf.clone()),
    };
    Ok(f.mul_monomial(&sf, &mf) - &g.mul_monomial(&sg, &mg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    type P = MultiPoly<Rational>;

    fn khf() -> (Arc<[Variable]>, MonomialOrder) {
        let vars = Variable::list(&[("k", 5), ("h", 4), ("f", 3)]);
        let order = MonomialOrder::for_variables(&vars);
        (vars, order)
    }

    #[test]
    fn degrevlex_tie_break_puts_mixed_terms_first() {
        let (_, ord) = khf();
        // hk vs f^3, both weighted degree 9
        assert_eq!(ord.cmp(&[1, 1, 0], &[0, 0, 3]), Ordering::Greater);
        // h^2 vs fk, degree 8
        assert_eq!(ord.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        // k^2 vs f^2 h, degree 10
        assert_eq!(ord.cmp(&[2, 0, 0], &[0, 1, 2]), Ordering::Greater);
        // weighted degree dominates
        assert_eq!(ord.cmp(&[0, 0, 4], &[2, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn arithmetic_and_constants_mix() {
        let (vars, _) = khf();
        let f = P::named(&vars, "f");
        let h = P::named(&vars, "h");
        let two = P::from_int(2);
        let p = (f.clone() + &two) * &(f.clone() - &two);
        assert_eq!(p, f.clone() * &f - &P::from_int(4));
        assert_eq!(p.num_terms(), 2);
        assert!((h.clone() - &h).is_zero());
        assert_eq!(P::from_int(3), P::constant(&vars, int(3)));
    }

    #[test]
    fn reduce_zero_and_self() {
        let (vars, ord) = khf();
        let f = P::named(&vars, "f");
        let h = P::named(&vars, "h");
        let k = P::named(&vars, "k");
        let g = h.clone() * &h - &(f.clone() * &k);
        let r = poly_reduce(&P::zero(), &[g.clone()], &ord).unwrap();
        assert!(r.remainder.is_zero());
        assert!(r.quotients[0].is_zero());
        let r = poly_reduce(&g, &[g.clone()], &ord).unwrap();
        assert!(r.remainder.is_zero());
        assert!(r.quotients[0].is_one());
    }

    #[test]
    fn reduce_rejects_empty_basis() {
        let (vars, ord) = khf();
        let f = P::named(&vars, "f");
        assert_eq!(poly_reduce(&f, &[], &ord), Err(PolyError::EmptyBasis));
    }

    #[test]
    fn s_polynomial_examples() {
        let (vars, ord) = khf();
        let f = P::named(&vars, "f");
        let h = P::named(&vars, "h");
        let k = P::named(&vars, "k");
        let g1 = h.clone() * &h - &(f.clone() * &k);
        assert!(s_polynomial(&g1, &g1, &ord).unwrap().is_zero());
        let g2 = h.clone() * &k - &(f.clone() * &f * &f);
        let s = s_polynomial(&g1, &g2, &ord).unwrap();
        // k(h^2 - fk) - h(hk - f^3) = f^3 h - f k^2
        assert_eq!(s, f.clone() * &f * &f * &h - &(f.clone() * &k * &k));
        assert!(s.terms().all(|(e, _)| ord.degree(e) > 8 && e != &vec![1, 2, 0]));
    }

    #[test]
    fn coprime_leading_monomials_reduce_to_zero() {
        let (vars, ord) = khf();
        let f = P::named(&vars, "f");
        let h = P::named(&vars, "h");
        let k = P::named(&vars, "k");
        let a = h.clone() * &h + &f.mul_monomial(&[0, 0, 0], &frac(1, 2));
        let b = k.clone() * &k - &f;
        let s = s_polynomial(&a, &b, &ord).unwrap();
        let r = poly_reduce(&s, &[a, b], &ord).unwrap();
        assert!(r.remainder.is_zero());
    }

    #[test]
    fn division_identity_holds() {
        let (vars, ord) = khf();
        let f = P::named(&vars, "f");
        let h = P::named(&vars, "h");
        let k = P::named(&vars, "k");
        let basis = vec![
            h.clone() * &h - &(f.clone() * &k) - &P::from_int(3),
            h.clone() * &k - &(f.clone() * &f * &f) + &h,
        ];
        let target = h.clone() * &h * &k * &k + &(f.clone() * &h * &int_poly(&vars, 7));
        let red = poly_reduce(&target, &basis, &ord).unwrap();
        let mut back = red.remainder.clone();
        for (q, g) in red.quotients.iter().zip(&basis) {
            back = back + &(q.clone() * g);
        }
        assert_eq!(back, target);
        for (e, _) in red.remainder.terms() {
            assert!(!(e[1] >= 2 || (e[0] >= 1 && e[1] >= 1)));
        }
    }

    fn int_poly(vars: &Arc<[Variable]>, n: i64) -> P {
        P::constant(vars, int(n))
    }

    #[test]
    fn display_is_sorted_by_order() {
        let (vars, ord) = khf();
        let f = P::named(&vars, "f");
        let h = P::named(&vars, "h");
        let p = f.clone() * &f * &f - &(h.clone() * &h) + &P::from_int(2);
        assert_eq!(p.display_with(&ord), "f^3 - h^2 + 2");
    }
}
