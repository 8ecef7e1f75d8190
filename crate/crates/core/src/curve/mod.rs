//! Curves whose normalization is a disjoint union of projective lines.
//!
//! A [`CurveModel`] lists its components (each a `ℙ¹` with coordinate `t`),
//! its singular points (each a set of branch points plus a finite-dimensional
//! algebra of jets) and its smooth marked points. All cohomology is computed
//! by exact linear algebra over partial-fraction bases.

mod cohomology;
mod corank;
mod local;
mod sections;
mod spec;
pub mod zoo;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{CurveError, ParseError};
use crate::linalg::{in_span, Matrix};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::ring::Ring;

pub use cohomology::{arithmetic_genus, delta_invariant, delta_at_jet_order, h0, h1, nonspecial_check, Divisor, H0};
pub use corank::cohomology_by_corank;
pub use local::{expand_element, AmbientElement, ElementKind, GlobalFunction};
pub use sections::{alpha_beta, canonical_parameter, expand_at_marked, f_section, AlphaBeta, Frame, Section};
pub use spec::{BranchSpec, CurveSpec, MarkedSpec, SingularitySpec};

/// A point of `ℙ¹`: a rational coordinate or `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl Point {
    pub fn parse(s: &str) -> Result<Point, ParseError> {
        let s = s.trim();
        if s == "inf" {
            Ok(Point::Infinity)
        } else {
            parse_rational(s)
                .map(Point::Finite)
                .map_err(|_| ParseError::Point(s.to_string()))
        }
    }

    pub fn literal(&self) -> String {
        match self {
            Point::Finite(a) => format_rational(a),
            Point::Infinity => "inf".to_string(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub component: usize,
    pub point: Point,
}

/// A singular point: branch points glued together, with the local ring given
/// as a span of jets of order `jet_order` on the branches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub branches: Vec<Branch>,
    pub jet_order: usize,
    pub conductor: usize,
    /// Jet vectors, branch by branch, degree ascending; length `branches · jet_order`.
    pub algebra_basis: Vec<Vec<Rational>>,
}

impl SingularPoint {
    pub fn jet_dim(&self) -> usize {
        self.branches.len() * self.jet_order
    }

    /// Vectors `w` with `w · v = 0` for every `v` in the algebra span.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        Matrix::from_rows(self.jet_dim(), self.algebra_basis.clone()).nullspace()
    }

    /// The same local ring described with jets of order `k ≥ conductor`.
    pub fn at_jet_order(&self, k: usize) -> SingularPoint {
        let (b, old, c) = (self.branches.len(), self.jet_order, self.conductor);
        let mut basis: Vec<Vec<Rational>> = self
            .algebra_basis
            .iter()
            .map(|v| {
                let mut w = vec![Rational::zero(); b * k];
                for br in 0..b {
                    for d in 0..c.min(k) {
                        w[br * k + d] = v[br * old + d].clone();
                    }
                }
                w
            })
            .collect();
        for br in 0..b {
            for d in c..k {
                let mut w = vec![Rational::zero(); b * k];
                w[br * k + d] = Rational::one();
                basis.push(w);
            }
        }
        SingularPoint {
            branches: self.branches.clone(),
            jet_order: k,
            conductor: c,
            algebra_basis: basis,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedPoint {
    pub component: usize,
    pub point: Point,
    /// The local parameter at the point is `s / tangent`, `s` the standard coordinate.
    pub tangent: Rational,
    pub weight: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveModel {
    pub components: Vec<String>,
    pub singularities: Vec<SingularPoint>,
    pub marked: Vec<MarkedPoint>,
}

impl CurveModel {
    /// Checks every structural invariant and returns the model unchanged if they hold.
    pub fn validated(self) -> Result<CurveModel, CurveError> {
        validate(&self)?;
        Ok(self)
    }

    pub fn with_marked(&self, marked: Vec<MarkedPoint>) -> Result<CurveModel, CurveError> {
        CurveModel {
            components: self.components.clone(),
            singularities: self.singularities.clone(),
            marked,
        }
        .validated()
    }

    /// Points `(component, point)` used by singular branches.
    pub fn branch_points(&self) -> Vec<(usize, Point)> {
        self.singularities
            .iter()
            .flat_map(|s| s.branches.iter().map(|b| (b.component, b.point.clone())))
            .collect()
    }

    pub fn is_smooth_point(&self, component: usize, point: &Point) -> bool {
        !self
            .branch_points()
            .iter()
            .any(|(c, p)| *c == component && p == point)
    }

    /// The weights stored on the marked points (missing weights read as 0).
    pub fn stored_weights(&self) -> Vec<u32> {
        self.marked.iter().map(|m| m.weight.unwrap_or(0)).collect()
    }

    pub fn component_index(&self, label: &str) -> Result<usize, CurveError> {
        self.components
            .iter()
            .position(|c| c == label)
            .ok_or_else(|| CurveError::UnknownComponent(label.to_string()))
    }
}

fn jet_product(a: &[Rational], b: &[Rational], branches: usize, k: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); branches * k];
    for br in 0..branches {
        for i in 0..k {
            let x = &a[br * k + i];
            if x.is_zero() {
                continue;
            }
            for j in 0..k - i {
                out[br * k + i + j] = &out[br * k + i + j] + x * &b[br * k + j];
            }
        }
    }
    out
}

fn validate_singularity(idx: usize, s: &SingularPoint, ncomp: usize) -> Result<(), CurveError> {
    let malformed = |reason: String| CurveError::MalformedSingularity { sing: idx, reason };
    if s.branches.is_empty() {
        return Err(malformed("no branches".into()));
    }
    if s.conductor == 0 {
        return Err(malformed("conductor must be at least 1".into()));
    }
    if s.jet_order < s.conductor {
        return Err(CurveError::JetOrderTooSmall {
            sing: idx,
            jet_order: s.jet_order,
            conductor: s.conductor,
        });
    }
    for b in &s.branches {
        if b.component >= ncomp {
            return Err(CurveError::UnknownComponent(b.component.to_string()));
        }
    }
    let dim = s.jet_dim();
    if let Some(v) = s.algebra_basis.iter().find(|v| v.len() != dim) {
        return Err(malformed(format!(
            "basis vector has {} entries, expected {} ({} branches x jet order {})",
            v.len(),
            dim,
            s.branches.len(),
            s.jet_order
        )));
    }
    let b = s.branches.len();
    let k = s.jet_order;
    let mut ones = vec![Rational::zero(); dim];
    for br in 0..b {
        ones[br * k] = Rational::one();
    }
    if !in_span(&s.algebra_basis, &ones) {
        return Err(CurveError::MissingConstants { sing: idx });
    }
    for br in 0..b {
        for d in s.conductor..k {
            let mut e = vec![Rational::zero(); dim];
            e[br * k + d] = Rational::one();
            if !in_span(&s.algebra_basis, &e) {
                return Err(CurveError::ConductorViolation {
                    sing: idx,
                    branch: br,
                    degree: d,
                    conductor: s.conductor,
                });
            }
        }
    }
    let n = s.algebra_basis.len();
    for i in 0..n {
        for j in i..n {
            let p = jet_product(&s.algebra_basis[i], &s.algebra_basis[j], b, k);
            if !in_span(&s.algebra_basis, &p) {
                return Err(CurveError::NotSubalgebra { sing: idx, i, j });
            }
        }
    }
    Ok(())
}

fn validate(curve: &CurveModel) -> Result<(), CurveError> {
    let ncomp = curve.components.len();
    if ncomp == 0 {
        return Err(CurveError::Parse(ParseError::Json("no components".into())));
    }
    let mut seen = std::collections::BTreeSet::new();
    for c in &curve.components {
        if !seen.insert(c) {
            return Err(CurveError::DuplicateComponent(c.clone()));
        }
    }
    for (i, s) in curve.singularities.iter().enumerate() {
        validate_singularity(i, s, ncomp)?;
    }
    let mut used: BTreeMap<(usize, Point), ()> = BTreeMap::new();
    let describe = |c: usize, p: &Point| format!("{}:{}", curve.components[c], p);
    for (c, p) in curve.branch_points() {
        if used.insert((c, p.clone()), ()).is_some() {
            return Err(CurveError::PointClash(describe(c, &p)));
        }
    }
    for (i, m) in curve.marked.iter().enumerate() {
        if m.component >= ncomp {
            return Err(CurveError::UnknownComponent(m.component.to_string()));
        }
        if m.tangent.is_zero() {
            return Err(CurveError::ZeroTangent(i));
        }
        if used.insert((m.component, m.point.clone()), ()).is_some() {
            return Err(CurveError::PointClash(describe(m.component, &m.point)));
        }
    }
    // connectivity through singular points
    let mut parent: Vec<usize> = (0..ncomp).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for s in &curve.singularities {
        let first = s.branches[0].component;
        for b in &s.branches[1..] {
            let (ra, rb) = (find(&mut parent, first), find(&mut parent, b.component));
            parent[ra] = rb;
        }
    }
    let root = find(&mut parent, 0);
    for c in 1..ncomp {
        if find(&mut parent, c) != root {
            return Err(CurveError::Disconnected(
                curve.components[0].clone(),
                curve.components[c].clone(),
            ));
        }
    }
    Ok(())
}

/// Parses and validates a curve from its JSON text.
pub fn parse_curve(json: &str) -> Result<CurveModel, CurveError> {
    let spec: CurveSpec =
        serde_json::from_str(json).map_err(|e| ParseError::Json(e.to_string()))?;
    spec.to_model()?.validated()
}
