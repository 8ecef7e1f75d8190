//! Delta invariants, arithmetic genus and cohomology of divisors supported on marked points.

use std::fmt;

use super::local::{expand_element, AmbientElement, GlobalFunction};
use super::{CurveModel, SingularPoint};
use crate::error::{CurveError, ParseError};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::ring::Ring;

/// An integer combination of the marked points (index `i` ↔ `curve.marked[i]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub mult: Vec<i64>,
}

impl Divisor {
    pub fn zero(n: usize) -> Self {
        Divisor { mult: vec![0; n] }
    }

    pub fn single(n: usize, i: usize, m: i64) -> Self {
        let mut d = Self::zero(n);
        d.mult[i] = m;
        d
    }

    pub fn from_weights(weights: &[u32]) -> Self {
        Divisor {
            mult: weights.iter().map(|&w| w as i64).collect(),
        }
    }

    pub fn degree(&self) -> i64 {
        self.mult.iter().sum()
    }

    /// Parses `n*pID(+|-)…` where `ID` is a marked-point index or `inf` (the marked point at `∞`).
    /// A bare `pID` means `1*pID`.
    pub fn parse(spec: &str, curve: &CurveModel) -> Result<Divisor, CurveError> {
        let bad = |why: &str| CurveError::Parse(ParseError::Divisor(spec.to_string(), why.to_string()));
        let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty divisor"));
        }
        let mut d = Divisor::zero(curve.marked.len());
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let sign = match rest.as_bytes()[0] {
                b'+' => {
                    rest = &rest[1..];
                    1
                }
                b'-' => {
                    rest = &rest[1..];
                    -1
                }
                _ if first => 1,
                _ => return Err(bad("expected + or - between terms")),
            };
            first = false;
            let end = rest[1..].find(['+', '-']).map_or(rest.len(), |i| i + 1);
            let term = &rest[..end];
            rest = &rest[end..];
            let (count, name) = match term.split_once('*') {
                Some((n, p)) => (n.parse::<i64>().map_err(|_| bad("bad multiplicity"))?, p),
                None => (1, term),
            };
            let id = name.strip_prefix('p').ok_or_else(|| bad("point names start with p"))?;
            let idx = if id == "inf" {
                curve
                    .marked
                    .iter()
                    .position(|m| m.point == super::Point::Infinity)
                    .ok_or_else(|| CurveError::UnknownMarkedPoint(name.to_string()))?
            } else {
                let i: usize = id.parse().map_err(|_| bad("bad point index"))?;
                if i >= curve.marked.len() {
                    return Err(CurveError::UnknownMarkedPoint(name.to_string()));
                }
                i
            };
            d.mult[idx] += sign * count;
        }
        Ok(d)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, m) in self.mult.iter().enumerate() {
            if *m == 0 {
                continue;
            }
            if first {
                write!(f, "{m}*p{i}")?;
            } else if *m > 0 {
                write!(f, "+{m}*p{i}")?;
            } else {
                write!(f, "-{}*p{i}", -m)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn delta_invariant(sing: &SingularPoint) -> i64 {
    let rank = Matrix::from_rows(sing.jet_dim(), sing.algebra_basis.clone()).rank();
    (sing.jet_dim() - rank) as i64
}

/// Delta invariant recomputed after re-expressing the local ring with jets of order `k`.
pub fn delta_at_jet_order(sing: &SingularPoint, k: usize) -> i64 {
    delta_invariant(&sing.at_jet_order(k.max(sing.conductor)))
}

pub fn arithmetic_genus(curve: &CurveModel) -> i64 {
    let delta: i64 = curve.singularities.iter().map(delta_invariant).sum();
    delta - (curve.components.len() as i64 - 1)
}

/// Global sections of `O(D)` with an explicit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0 {
    pub dim: usize,
    pub basis: Vec<GlobalFunction>,
}

/// Ambient partial-fraction basis for functions with poles bounded by the positive part of `d`.
pub(crate) fn ambient_elements(curve: &CurveModel, d: &Divisor) -> Vec<AmbientElement> {
    let mut elements: Vec<AmbientElement> = (0..curve.components.len()).map(AmbientElement::constant).collect();
    for (m, &n) in curve.marked.iter().zip(&d.mult) {
        for j in 1..=n.max(0) as u32 {
            elements.push(AmbientElement::pole(m.component, m.point.clone(), j));
        }
    }
    elements
}

/// Linear conditions cutting `H⁰(O(D))` out of the ambient space.
pub(crate) fn constraint_rows(curve: &CurveModel, d: &Divisor, elements: &[AmbientElement]) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for (m, &n) in curve.marked.iter().zip(&d.mult) {
        if n >= 0 {
            continue;
        }
        let zeros = -n;
        let expansions: Vec<_> = elements
            .iter()
            .map(|e| expand_element(e, m.component, &m.point, zeros))
            .collect();
        for k in 0..zeros {
            rows.push(expansions.iter().map(|s| s.coefficient(k).unwrap()).collect());
        }
    }
    for sing in &curve.singularities {
        let k = sing.jet_order;
        let jets: Vec<Vec<Rational>> = elements
            .iter()
            .map(|e| {
                let mut jet = Vec::with_capacity(sing.jet_dim());
                for b in &sing.branches {
                    let s = expand_element(e, b.component, &b.point, k as i64);
                    jet.extend((0..k as i64).map(|d| s.coefficient(d).unwrap()));
                }
                jet
            })
            .collect();
        for w in sing.annihilator() {
            rows.push(
                jets.iter()
                    .map(|jet| jet.iter().zip(&w).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                    .collect(),
            );
        }
    }
    rows
}

fn check_divisor(curve: &CurveModel, d: &Divisor) -> Result<(), CurveError> {
    if d.mult.len() != curve.marked.len() {
        return Err(CurveError::Parse(ParseError::Divisor(
            d.to_string(),
            format!("expected {} multiplicities, got {}", curve.marked.len(), d.mult.len()),
        )));
    }
    for (i, m) in curve.marked.iter().enumerate() {
        if d.mult[i] != 0 && !curve.is_smooth_point(m.component, &m.point) {
            return Err(CurveError::PointClash(format!("p{i}")));
        }
    }
    Ok(())
}

pub fn h0(curve: &CurveModel, d: &Divisor) -> Result<H0, CurveError> {
    check_divisor(curve, d)?;
    let elements = ambient_elements(curve, d);
    let rows = constraint_rows(curve, d, &elements);
    let kernel = if rows.is_empty() {
        Matrix::zeros(0, elements.len()).nullspace()
    } else {
        Matrix::from_rows(elements.len(), rows).nullspace()
    };
    let basis: Vec<GlobalFunction> = kernel
        .into_iter()
        .map(|v| GlobalFunction::new(elements.clone(), v))
        .collect();
    Ok(H0 { dim: basis.len(), basis })
}

/// `h¹(D) = h⁰(D) − deg D − 1 + g`.
pub fn h1(curve: &CurveModel, d: &Divisor) -> Result<i64, CurveError> {
    let h = h0(curve, d)?.dim as i64;
    let v = h - d.degree() - 1 + arithmetic_genus(curve);
    if v < 0 {
        return Err(CurveError::Inconsistent(format!(
            "h1({d}) = {v} < 0 (h0 = {h}, genus {})",
            arithmetic_genus(curve)
        )));
    }
    Ok(v)
}

/// Whether `Σ aᵢpᵢ` is non-special; the weights must sum to the genus.
pub fn nonspecial_check(curve: &CurveModel, weights: &[u32]) -> Result<bool, CurveError> {
    if weights.len() != curve.marked.len() {
        return Err(CurveError::Weights(format!(
            "{} weights for {} marked points",
            weights.len(),
            curve.marked.len()
        )));
    }
    let total: i64 = weights.iter().map(|&w| w as i64).sum();
    let g = arithmetic_genus(curve);
    if total != g {
        return Err(CurveError::Weights(format!("weights sum to {total}, genus is {g}")));
    }
    Ok(h1(curve, &Divisor::from_weights(weights))? == 0)
}
