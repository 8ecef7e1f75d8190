//! The sections `f_i[−m]`, canonical formal parameters, and the α/β coefficients.

use super::cohomology::{arithmetic_genus, h0, Divisor};
use super::local::{rescale, GlobalFunction};
use super::CurveModel;
use crate::error::CurveError;
use crate::linalg::Matrix;
use crate::rational::{frac, Rational};
use crate::ring::Ring;
use crate::series::{LaurentSeries, ParamChange, EXACT};

/// Formal parameters at the marked points: the tangent-scaled coordinate `τ_j` equals `params[j](u_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    pub params: Vec<ParamChange<Rational>>,
}

impl Frame {
    /// The tangent-scaled standard coordinates themselves, known exactly.
    pub fn identity(curve: &CurveModel) -> Frame {
        Frame {
            params: vec![ParamChange::identity("u", EXACT); curve.marked.len()],
        }
    }

    pub fn with(mut self, i: usize, pc: ParamChange<Rational>) -> Frame {
        self.params[i] = pc;
        self
    }
}

/// A section `f_i[−m]` of `O(m·p_i + Σ_{j≠i} a_j p_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub point: usize,
    pub order: u32,
    pub function: GlobalFunction,
}

impl Section {
    /// Expansion at marked point `j` in the frame parameter `u_j`, known below `u_j^high`.
    pub fn expansion(
        &self,
        curve: &CurveModel,
        frame: &Frame,
        j: usize,
        high: i64,
    ) -> Result<LaurentSeries<Rational>, CurveError> {
        expand_at_marked(&self.function, curve, frame, j, high)
    }
}

/// Expansion of `function` at marked point `j` in the frame parameter, below `u^high`.
pub fn expand_at_marked(
    function: &GlobalFunction,
    curve: &CurveModel,
    frame: &Frame,
    j: usize,
    high: i64,
) -> Result<LaurentSeries<Rational>, CurveError> {
    let m = &curve.marked[j];
    let raw = rescale(&function.expand(m.component, &m.point, high), &m.tangent);
    Ok(raw.substitute(&frame.params[j], high)?.with_var("u"))
}

/// The unique `f_i[−m] = u_i^{−m} + Σ_{q ≥ −a_i} α_i[−m,q] u_i^q` with `α_i[−m,0] = 0`.
///
/// The frame parameter at `p_i` must be known modulo `u^{m+2}`.
pub fn f_section(
    curve: &CurveModel,
    weights: &[u32],
    frame: &Frame,
    i: usize,
    m: u32,
) -> Result<Section, CurveError> {
    if weights.len() != curve.marked.len() {
        return Err(CurveError::Weights(format!(
            "{} weights for {} marked points",
            weights.len(),
            curve.marked.len()
        )));
    }
    let a = weights[i];
    if m <= a {
        return Err(CurveError::Weights(format!("pole order {m} must exceed the weight {a} at p{i}")));
    }
    let mut d = Divisor::from_weights(weights);
    d.mult[i] = m as i64;
    let space = h0(curve, &d)?;
    let expansions = space
        .basis
        .iter()
        .map(|f| expand_at_marked(f, curve, frame, i, 1))
        .collect::<Result<Vec<_>, _>>()?;
    let (m, a) = (m as i64, a as i64);
    let mut exps = vec![-m];
    exps.extend(-m + 1..-a);
    exps.push(0);
    if space.dim != exps.len() {
        return Err(CurveError::NotUnique { point: i, order: m as u32 });
    }
    let rows: Vec<Vec<Rational>> = exps
        .iter()
        .map(|&e| expansions.iter().map(|s| s.coefficient(e).unwrap()).collect())
        .collect();
    let mut rhs = vec![Rational::zero(); exps.len()];
    rhs[0] = Rational::one();
    let x = Matrix::from_rows(space.dim, rows)
        .solve_unique(&rhs)
        .ok_or(CurveError::NotUnique { point: i, order: m as u32 })?;
    let mut coeffs = vec![Rational::zero(); space.basis[0].elements.len()];
    for (xi, f) in x.iter().zip(&space.basis) {
        for (c, fc) in coeffs.iter_mut().zip(&f.coeffs) {
            *c = &*c + xi * fc;
        }
    }
    Ok(Section {
        point: i,
        order: m as u32,
        function: GlobalFunction::new(space.basis[0].elements.clone(), coeffs),
    })
}

/// Canonical formal parameter at `p_i`: `τ_i = result(u)` with `α_i[−m,−a_i] = 0` for `a_i < m ≤ m_max`.
///
/// The result is determined modulo `u^{m_max − a_i + 2}` and is returned with that
/// truncation, so sections `f_i[−m]` computed in it are available for `m ≤ m_max − a_i`.
/// With `a_i = 0` the condition is the constant normalization and the identity is returned.
pub fn canonical_parameter(
    curve: &CurveModel,
    weights: &[u32],
    i: usize,
    m_max: u32,
) -> Result<ParamChange<Rational>, CurveError> {
    let a = *weights
        .get(i)
        .ok_or_else(|| CurveError::UnknownMarkedPoint(format!("p{i}")))? as i64;
    if a == 0 {
        return Ok(ParamChange::identity("u", EXACT));
    }
    let work_order = m_max as i64 + 2;
    let mut param = ParamChange::identity("u", work_order);
    for m in a + 1..=m_max as i64 {
        let frame = Frame::identity(curve).with(i, param.clone());
        let sec = f_section(curve, weights, &frame, i, m as u32)?;
        let d = sec.expansion(curve, &frame, i, -a + 1)?.coefficient(-a)?;
        if !d.is_zero() {
            let fix = ParamChange::correction("u", d * frac(1, m), (m - a + 1) as u32, work_order);
            param = param.compose(&fix)?;
        }
    }
    Ok(param.truncate(m_max as i64 - a + 2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: Rational,
    pub beta: Rational,
}

/// With weights `(g−1)` at `p1` and `1` at `p2`: the coefficients of `u_2^{−1}`
/// in `f_1[−g]` and `f_1[−g−1]`, in canonical parameters at both points.
pub fn alpha_beta(curve: &CurveModel, p1: usize, p2: usize) -> Result<AlphaBeta, CurveError> {
    let n = curve.marked.len();
    if p1 >= n || p2 >= n || p1 == p2 {
        return Err(CurveError::UnknownMarkedPoint(format!("p{p1}/p{p2}")));
    }
    let g = arithmetic_genus(curve);
    if g < 1 {
        return Err(CurveError::Weights(format!("genus {g} has no (g-1, 1) weights")));
    }
    let mut weights = vec![0u32; n];
    weights[p1] = (g - 1) as u32;
    weights[p2] = 1;
    let g = g as u32;
    let frame = Frame::identity(curve)
        .with(p1, canonical_parameter(curve, &weights, p1, 2 * g)?)
        .with(p2, canonical_parameter(curve, &weights, p2, 2)?);
    let coeff = |m: u32| -> Result<Rational, CurveError> {
        let sec = f_section(curve, &weights, &frame, p1, m)?;
        Ok(sec.expansion(curve, &frame, p2, 0)?.coefficient(-1)?)
    };
    Ok(AlphaBeta {
        alpha: coeff(g)?,
        beta: coeff(g + 1)?,
    })
}
