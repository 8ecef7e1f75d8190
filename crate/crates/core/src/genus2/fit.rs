//! Reading off the five parameters of a concrete pointed genus-2 curve.

use serde_json::{json, Value};

use super::presentation::{upoly, Gauge, Presentation, UniPoly};
use crate::poly::MultiPoly;
use super::{buchberger_verify, universal_relations, G2Params};
use crate::curve::{arithmetic_genus, expand_at_marked, h0, h1, CurveModel, Divisor, Frame};
use crate::error::Genus2Error;
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::LaurentSeries;

type Series = LaurentSeries<Rational>;

/// Expansion window of `f`, `h`, `k` in the marked parameter.
const EXPANSION_HIGH: i64 = 30;

#[derive(Clone, Debug)]
pub struct FitResult {
    pub params: G2Params<Rational>,
    /// The presentation read off from the chosen `f, h, k`.
    pub general: Presentation,
    pub normalized: Presentation,
    pub gauge: Gauge,
    pub buchberger: bool,
    /// Lowest exponent up to which the fitted relations were checked to vanish on the expansions.
    pub checked_below: i64,
}

impl FitResult {
    pub fn to_json(&self) -> Value {
        json!({
            "params": self.params.to_json(),
            "general_presentation": self.general.to_json(),
            "normalized_presentation": self.normalized.to_json(),
            "gauge": self.gauge.to_json(),
            "buchberger": self.buchberger,
            "relations_vanish_below": self.checked_below,
        })
    }
}

fn eval_series(p: &MultiPoly<Rational>, values: &[Series]) -> Series {
    let var = values[0].var();
    let mut acc = Series::zero(var);
    for (e, c) in p.terms() {
        let mut t = Series::monomial(var, 0, c.clone());
        for (v, &k) in values.iter().zip(e) {
            for _ in 0..k {
                t = &t * v;
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// The element of `H⁰(n·p)` with expansion `τ^{−n} + …` (any lower-order choice is fine).
fn pole_function(curve: &CurveModel, point: usize, n: i64) -> Result<Series, Genus2Error> {
    let d = Divisor::single(curve.marked.len(), point, n);
    let frame = Frame::identity(curve);
    for f in h0(curve, &d)?.basis {
        let s = expand_at_marked(&f, curve, &frame, point, EXPANSION_HIGH)?;
        let lead = s.coefficient(-n)?;
        if !lead.is_zero() {
            return Ok(s.scale(&lead.recip()));
        }
    }
    Err(Genus2Error::Inconsistent(format!("no function with a pole of order {n}")))
}

/// Coefficients of `target` on `f²h, f³, fk, fh, f², k, h, f, 1` (pole orders 10, 9, 8, 7, 6, 5, 4, 3, 0).
fn express(target: &Series, basis: &[(i64, Series)]) -> Result<Vec<Rational>, Genus2Error> {
    let mut rest = target.clone();
    let mut out = Vec::with_capacity(basis.len());
    let mut next = 0;
    if rest.valuation() < -10 {
        return Err(Genus2Error::Inconsistent(format!("pole of order {} exceeds 10", -rest.valuation())));
    }
    for order in (0..=10).rev() {
        let c = rest.coefficient(-order)?;
        if next < basis.len() && basis[next].0 == order {
            rest = &rest - &basis[next].1.scale(&c);
            out.push(c);
            next += 1;
        } else if !c.is_zero() {
            return Err(Genus2Error::Inconsistent(format!(
                "expansion has a pole of order {order}, which no standard monomial provides"
            )));
        }
    }
    if !rest.is_zero() {
        return Err(Genus2Error::Inconsistent(format!(
            "residual {rest} after expressing in the standard monomials"
        )));
    }
    Ok(out)
}

/// Fits the parameters from Laurent expansions of `f, h, k` with leading terms `τ^{−3}, τ^{−4}, τ^{−5}`.
pub fn fit_from_expansions(f: &Series, h: &Series, k: &Series) -> Result<FitResult, Genus2Error> {
    for (name, s, n) in [("f", f, 3), ("h", h, 4), ("k", k, 5)] {
        if s.valuation() != -n || !s.coefficient(-n)?.is_one() {
            return Err(Genus2Error::Inconsistent(format!("{name} must start with tau^-{n}")));
        }
    }
    let f2 = f * f;
    let basis = vec![
        (10, &f2 * h),
        (9, &f2 * f),
        (8, f * k),
        (7, f * h),
        (6, f2.clone()),
        (5, k.clone()),
        (4, h.clone()),
        (3, f.clone()),
        (0, Series::monomial(f.var(), 0, Rational::one())),
    ];
    let mut p = Vec::new();
    let mut q = Vec::new();
    let mut c = Vec::new();
    for target in [h * h, h * k, k * k] {
        let x = express(&target, &basis)?;
        // x = [f²h, f³, fk, fh, f², k, h, f, 1]
        p.push(upoly(&[x[5].clone(), x[2].clone()]));
        q.push(upoly(&[x[6].clone(), x[3].clone(), x[0].clone()]));
        c.push(upoly(&[x[8].clone(), x[7].clone(), x[4].clone(), x[1].clone()]));
    }
    let general = Presentation {
        p: [p[0].clone(), p[1].clone(), p[2].clone()],
        q: [q[0].clone(), q[1].clone(), q[2].clone()],
        c: [c[0].clone(), c[1].clone(), c[2].clone()],
    };
    if let Some(v) = general.shape_violations().first() {
        return Err(Genus2Error::Presentation(v.clone()));
    }
    let (normalized, gauge) = general.normalize();
    let params = normalized.params()?;
    if normalized != Presentation::from_params(&params) {
        return Err(Genus2Error::Inconsistent(format!(
            "normalized presentation {} differs from the family at {}",
            normalized.to_json(),
            params.to_json()
        )));
    }
    let rels = universal_relations(&params);
    let buchberger = buchberger_verify(&rels)?.passed();
    // the gauge-fixed functions satisfy the universal relations
    let lift = |p: &UniPoly, x: &Series| eval_series(p, std::slice::from_ref(x));
    let ft = f + &Series::monomial(f.var(), 0, gauge.shift.clone());
    let ht = h + &lift(&gauge.a, f);
    let kt = &(k + &h.scale(&gauge.b)) + &lift(&gauge.c, f);
    let values = [kt, ht, ft];
    let mut checked_below = i64::MAX;
    for (i, rel) in rels.rels.iter().enumerate() {
        let v = eval_series(rel, &values);
        checked_below = checked_below.min(v.high());
        if !v.is_zero() {
            return Err(Genus2Error::Inconsistent(format!(
                "relation {} does not vanish on the expansions: {v}",
                i + 1
            )));
        }
    }
    Ok(FitResult {
        params,
        general,
        normalized,
        gauge,
        buchberger,
        checked_below,
    })
}

/// The parameters of `(curve, p, v)` with `v` the tangent stored on the marked point.
pub fn fit_parameters(curve: &CurveModel, point: usize) -> Result<FitResult, Genus2Error> {
    if point >= curve.marked.len() {
        return Err(crate::error::CurveError::UnknownMarkedPoint(format!("p{point}")).into());
    }
    let g = arithmetic_genus(curve);
    if g != 2 {
        return Err(Genus2Error::Genus(g));
    }
    let special = h1(curve, &Divisor::single(curve.marked.len(), point, 2))?;
    if special != 0 {
        return Err(Genus2Error::Weierstrass(point, special));
    }
    let f = pole_function(curve, point, 3)?;
    let h = pole_function(curve, point, 4)?;
    let k = pole_function(curve, point, 5)?;
    fit_from_expansions(&f, &h, &k)
}
