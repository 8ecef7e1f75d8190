//! Partial-fraction functions on the components and their local expansions.
//!
//! At a finite point `a` the local coordinate is `s = t − a`; at `∞` it is
//! `s = 1/t`.

use std::fmt;

use super::Point;
use crate::rational::{binomial, binomial_signed, pow, Rational};
use crate::ring::Ring;
use crate::series::{LaurentSeries, EXACT};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ElementKind {
    Const,
    /// `(t − a)^{−order}` for finite `a`, `t^{order}` for `∞`.
    Pole { at: Point, order: u32 },
}

/// A basis function living on one component (zero on the others).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AmbientElement {
    pub component: usize,
    pub kind: ElementKind,
}

impl AmbientElement {
    pub fn constant(component: usize) -> Self {
        AmbientElement {
            component,
            kind: ElementKind::Const,
        }
    }

    pub fn pole(component: usize, at: Point, order: u32) -> Self {
        AmbientElement {
            component,
            kind: ElementKind::Pole { at, order },
        }
    }
}

impl fmt::Display for AmbientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ElementKind::Const => f.write_str("1"),
            ElementKind::Pole { at: Point::Infinity, order: 1 } => f.write_str("t"),
            ElementKind::Pole { at: Point::Infinity, order } => write!(f, "t^{order}"),
            ElementKind::Pole { at: Point::Finite(a), order } => {
                let base = if a.is_zero() {
                    "t".to_string()
                } else if a < &Rational::zero() {
                    format!("(t + {})", -a.clone())
                } else {
                    format!("(t - {a})")
                };
                write!(f, "{base}^-{order}")
            }
        }
    }
}

/// Laurent expansion of `elem` at `at` on `component`, in the local coordinate, below `high`.
pub fn expand_element(elem: &AmbientElement, component: usize, at: &Point, high: i64) -> LaurentSeries<Rational> {
    if elem.component != component {
        return LaurentSeries::zero("s");
    }
    match &elem.kind {
        ElementKind::Const => LaurentSeries::monomial("s", 0, Rational::one()),
        ElementKind::Pole { at: pole, order } => {
            let j = *order as i64;
            match (pole, at) {
                (p, q) if p == q => LaurentSeries::monomial("s", -j, Rational::one()),
                (Point::Infinity, Point::Finite(b)) => LaurentSeries::from_terms(
                    "s",
                    (0..=j).map(|n| (n, binomial(j as u64, n as u64) * pow(b, j - n))),
                    EXACT,
                ),
                (Point::Finite(a), Point::Finite(b)) => {
                    let d = b - a;
                    LaurentSeries::from_terms(
                        "s",
                        (0..high.max(0)).map(|n| (n, binomial_signed(-j, n as u64) * pow(&d, -j - n))),
                        high,
                    )
                }
                (Point::Finite(a), Point::Infinity) => {
                    if a.is_zero() {
                        return LaurentSeries::monomial("s", j, Rational::one());
                    }
                    let na = -a.clone();
                    LaurentSeries::from_terms(
                        "s",
                        (0..(high - j).max(0)).map(|n| (j + n, binomial_signed(-j, n as u64) * pow(&na, n))),
                        high,
                    )
                }
                (Point::Infinity, Point::Infinity) => unreachable!(),
            }
        }
    }
}

/// `Σ coeffs[i] · elements[i]`, a tuple of rational functions on the components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalFunction {
    pub elements: Vec<AmbientElement>,
    pub coeffs: Vec<Rational>,
}

impl GlobalFunction {
    pub fn new(elements: Vec<AmbientElement>, coeffs: Vec<Rational>) -> Self {
        assert_eq!(elements.len(), coeffs.len());
        GlobalFunction { elements, coeffs }
    }

    /// Expansion at `at` on `component` in the standard local coordinate `s`.
    pub fn expand(&self, component: usize, at: &Point, high: i64) -> LaurentSeries<Rational> {
        let mut acc = LaurentSeries::zero("s");
        for (e, c) in self.elements.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &expand_element(e, component, at, high).scale(c);
        }
        acc.truncate(high)
    }

    /// Readable form, one `component: expression` clause per component with support.
    pub fn describe(&self, labels: &[String]) -> String {
        let mut parts = Vec::new();
        for (ci, label) in labels.iter().enumerate() {
            let terms: Vec<String> = self
                .elements
                .iter()
                .zip(&self.coeffs)
                .filter(|(e, c)| e.component == ci && !c.is_zero())
                .map(|(e, c)| match (&e.kind, c.is_one()) {
                    (ElementKind::Const, _) => c.to_string(),
                    (_, true) => e.to_string(),
                    _ => format!("{c}*{e}"),
                })
                .collect();
            if !terms.is_empty() {
                parts.push(format!("{label}: {}", terms.join(" + ")));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("; ")
        }
    }
}

/// Re-expresses a series in `s` in the parameter `τ = s / v`.
pub fn rescale(series: &LaurentSeries<Rational>, v: &Rational) -> LaurentSeries<Rational> {
    let terms: Vec<(i64, Rational)> = series.terms().map(|(e, c)| (e, c * pow(v, e))).collect();
    LaurentSeries::from_terms("t", terms, series.high())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn geometric_expansions() {
        // 1/(t-1) at t = 0: -(1 + s + s^2 + ...)
        let e = AmbientElement::pole(0, Point::Finite(int(1)), 1);
        let s = expand_element(&e, 0, &Point::Finite(int(0)), 4);
        for k in 0..4 {
            assert_eq!(s.coefficient(k).unwrap(), int(-1));
        }
        // 1/(t-2)^2 at infinity: s^2 (1 - 2s)^{-2} = s^2 + 4 s^3 + 12 s^4
        let e = AmbientElement::pole(0, Point::Finite(int(2)), 2);
        let s = expand_element(&e, 0, &Point::Infinity, 5);
        assert_eq!(s.coefficient(2).unwrap(), int(1));
        assert_eq!(s.coefficient(3).unwrap(), int(4));
        assert_eq!(s.coefficient(4).unwrap(), int(12));
        // t^2 at t = 1/2: (1/2 + s)^2
        let e = AmbientElement::pole(0, Point::Infinity, 2);
        let s = expand_element(&e, 0, &Point::Finite(frac(1, 2)), 10);
        assert_eq!(s.coefficient(0).unwrap(), frac(1, 4));
        assert_eq!(s.coefficient(1).unwrap(), int(1));
        assert_eq!(s.coefficient(2).unwrap(), int(1));
        assert!(s.is_exact());
    }

    #[test]
    fn other_components_see_zero() {
        let e = AmbientElement::constant(1);
        assert!(expand_element(&e, 0, &Point::Infinity, 3).is_zero());
    }

    #[test]
    fn describes_functions() {
        let f = GlobalFunction::new(
            vec![AmbientElement::constant(0), AmbientElement::pole(0, Point::Finite(int(-1)), 2)],
            vec![int(3), frac(1, 2)],
        );
        assert_eq!(f.describe(&["c0".to_string()]), "c0: 3 + 1/2*(t + 1)^-2");
    }
}
