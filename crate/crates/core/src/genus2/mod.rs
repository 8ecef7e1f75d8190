//! The universal genus-2 curve with one marked point.
//!
//! The affine curve `C \ {p}` is cut out in `(f, h, k)` (weights 3, 4, 5) by
//!
//! ```text
//! h² = fk + q₁h + 2q₁² + f q₂
//! hk = f q₃ − q₁k + q₂h + q₁q₂
//! k² = q₃h + q₂² − 2q₁q₃
//! ```
//!
//! with `q₂ = q₂₀ + q₂₁f`, `q₃ = q₃₀ + q₃₁f + f²`. Relations are stored as
//! `lhs − rhs` in `MultiPoly<R>` over `(k, h, f)`, where `R` is `ℚ` for
//! concrete curves or `ℚ[q…]` for the symbolic family.

mod fit;
mod presentation;
mod solve;

use std::collections::BTreeSet;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::Genus2Error;
use crate::poly::{poly_reduce, s_polynomial, Exponents, Graded, MonomialOrder, MultiPoly, Variable};
use crate::rational::{format_rational, Rational};
use crate::ring::Ring;

pub use fit::{fit_from_expansions, fit_parameters, FitResult};
pub use presentation::{upoly, Gauge, Presentation, UniPoly};
pub use solve::{solve_c, SolveReport};

/// Names of the five parameters in the order `q₁, q₂₀, q₂₁, q₃₀, q₃₁`.
pub const PARAM_NAMES: [&str; 5] = ["q1", "q20", "q21", "q30", "q31"];
/// Their torus weights.
pub const PARAM_WEIGHTS: [u32; 5] = [4, 5, 2, 6, 3];
/// Weighted degrees of the three relations.
pub const RELATION_DEGREES: [u64; 3] = [8, 9, 10];

/// `(k, h, f)` with weights `(5, 4, 3)`, largest variable first.
pub fn khf_vars() -> Arc<[Variable]> {
    Variable::list(&[("k", 5), ("h", 4), ("f", 3)])
}

pub fn khf_order() -> MonomialOrder {
    MonomialOrder::for_variables(&khf_vars())
}

/// The parameter ring variables, each carrying its torus weight.
pub fn param_vars() -> Arc<[Variable]> {
    let spec: Vec<(&str, u32)> = PARAM_NAMES.iter().copied().zip(PARAM_WEIGHTS).collect();
    Variable::list(&spec)
}

pub type SymbolicPoly = MultiPoly<Rational>;

#[derive(Clone, Debug, PartialEq)]
pub struct G2Params<R> {
    pub q1: R,
    pub q20: R,
    pub q21: R,
    pub q30: R,
    pub q31: R,
}

impl<R: Ring> G2Params<R> {
    pub fn as_array(&self) -> [&R; 5] {
        [&self.q1, &self.q20, &self.q21, &self.q30, &self.q31]
    }

    pub fn from_array([q1, q20, q21, q30, q31]: [R; 5]) -> Self {
        G2Params { q1, q20, q21, q30, q31 }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> G2Params<S> {
        G2Params {
            q1: f(&self.q1),
            q20: f(&self.q20),
            q21: f(&self.q21),
            q30: f(&self.q30),
            q31: f(&self.q31),
        }
    }
}

impl G2Params<SymbolicPoly> {
    /// The parameters as indeterminates.
    pub fn symbolic() -> Self {
        let vars = param_vars();
        G2Params::from_array(std::array::from_fn(|i| MultiPoly::var(&vars, i)))
    }
}

impl G2Params<Rational> {
    pub fn zero() -> Self {
        G2Params::from_array(std::array::from_fn(|_| Rational::zero()))
    }

    /// The action of `c ∈ G_m`: each parameter scales by `c^weight`.
    pub fn rescaled(&self, c: &Rational) -> Self {
        let mut out = self.clone();
        for (q, w) in [&mut out.q1, &mut out.q20, &mut out.q21, &mut out.q30, &mut out.q31]
            .into_iter()
            .zip(PARAM_WEIGHTS)
        {
            *q = &*q * &crate::rational::pow(c, w as i64);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.as_array().iter().all(|q| q.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (name, q) in PARAM_NAMES.iter().zip(self.as_array()) {
            map.insert(name.to_string(), Value::String(format_rational(q)));
        }
        Value::Object(map)
    }
}

/// The three relations `lhs − rhs`, in the order `h², hk, k²`.
#[derive(Clone, Debug)]
pub struct G2Relations<R> {
    pub rels: [MultiPoly<R>; 3],
}

impl<R: Ring> PartialEq for G2Relations<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rels == other.rels
    }
}

/// The relations of the family at `params`.
pub fn universal_relations<R: Ring>(params: &G2Params<R>) -> G2Relations<R> {
    let vars = khf_vars();
    let c = |r: &R| MultiPoly::constant(&vars, r.clone());
    let (k, h, f) = (MultiPoly::var(&vars, 0), MultiPoly::var(&vars, 1), MultiPoly::var(&vars, 2));
    let q1 = c(&params.q1);
    let q2 = c(&params.q20) + &(c(&params.q21) * &f);
    let q3 = c(&params.q30) + &(c(&params.q31) * &f) + &(f.clone() * &f);
    let two = MultiPoly::from_int(2);
    let r1 = h.clone() * &h - &(f.clone() * &k) - &(q1.clone() * &h) - &(two.clone() * &q1 * &q1) - &(f.clone() * &q2);
    let r2 = h.clone() * &k - &(f.clone() * &q3) + &(q1.clone() * &k) - &(q2.clone() * &h) - &(q1.clone() * &q2);
    let r3 = k.clone() * &k - &(q3.clone() * &h) - &(q2.clone() * &q2) + &(two * &q1 * &q3);
    G2Relations { rels: [r1, r2, r3] }
}

impl<R: Ring> G2Relations<R> {
    /// Adds `delta` to `c_i` (the `f`-free part of the right-hand side of relation `i`).
    pub fn perturbed(&self, i: usize, delta: &Rational) -> Self {
        let mut out = self.clone();
        let vars = khf_vars();
        out.rels[i] = out.rels[i].clone() - &MultiPoly::constant(&vars, R::from_rational(delta));
        out
    }

    /// Total number of terms per relation when parameters are expanded into monomials.
    pub fn term_counts(&self) -> [usize; 3]
    where
        R: TermCount,
    {
        std::array::from_fn(|i| self.rels[i].terms().map(|(_, c)| c.term_count()).sum())
    }
}

/// Number of monomials in a coefficient.
pub trait TermCount {
    fn term_count(&self) -> usize;
}

impl TermCount for Rational {
    fn term_count(&self) -> usize {
        usize::from(!Ring::is_zero(self))
    }
}

impl<R: Ring + TermCount> TermCount for MultiPoly<R> {
    fn term_count(&self) -> usize {
        self.terms().map(|(_, c)| c.term_count()).sum()
    }
}

/// Weighted degrees occurring in each relation under the combined `(f, h, k, q)` grading.
pub fn relation_degrees<R: Ring + Graded>(rels: &G2Relations<R>) -> [BTreeSet<u64>; 3] {
    std::array::from_fn(|i| rels.rels[i].degrees())
}

#[derive(Clone, Debug)]
pub struct SPairReduction<R> {
    pub pair: (usize, usize),
    pub quotients: Vec<MultiPoly<R>>,
    pub remainder: MultiPoly<R>,
}

/// Buchberger's criterion applied to the three relations.
#[derive(Clone, Debug)]
pub struct BuchbergerCertificate<R> {
    pub reductions: Vec<SPairReduction<R>>,
}

impl<R: Ring> BuchbergerCertificate<R> {
    pub fn passed(&self) -> bool {
        self.reductions.iter().all(|r| r.remainder.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let order = khf_order();
        let show = |p: &MultiPoly<R>| p.display_with(&order);
        Value::Array(
            self.reductions
                .iter()
                .map(|r| {
                    json!({
                        "pair": [r.pair.0 + 1, r.pair.1 + 1],
                        "quotients": r.quotients.iter().map(show).collect::<Vec<_>>(),
                        "remainder": show(&r.remainder),
                        "reduces_to_zero": r.remainder.is_zero(),
                    })
                })
                .collect(),
        )
    }
}

/// Leading monomials `h², hk, k²` as exponent vectors over `(k, h, f)`.
pub fn expected_leading_monomials() -> [Exponents; 3] {
    [vec![0, 2, 0], vec![1, 1, 0], vec![2, 0, 0]]
}

/// Checks the leading monomials, then reduces the three S-polynomials modulo the relations.
pub fn buchberger_verify<R: Ring>(rels: &G2Relations<R>) -> Result<BuchbergerCertificate<R>, Genus2Error> {
    let order = khf_order();
    for (i, (rel, want)) in rels.rels.iter().zip(expected_leading_monomials()).enumerate() {
        match rel.leading_term(&order) {
            Some((e, c)) if *e == want && c.is_one() => {}
            Some((e, c)) => {
                return Err(Genus2Error::LeadingMonomials(format!(
                    "relation {} leads with {} * {:?}",
                    i + 1,
                    c,
                    e
                )))
            }
            None => return Err(Genus2Error::LeadingMonomials(format!("relation {} is zero", i + 1))),
        }
    }
    let mut reductions = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let s = s_polynomial(&rels.rels[i], &rels.rels[j], &order)?;
        let red = poly_reduce(&s, &rels.rels, &order)?;
        reductions.push(SPairReduction {
            pair: (i, j),
            quotients: red.quotients,
            remainder: red.remainder,
        });
    }
    Ok(BuchbergerCertificate { reductions })
}

/// Reduces `f^a h^b k^c` modulo the relations; the remainder lies in the span of
/// `f^n, f^n h, f^n k` exactly when its monomials have `deg_h + deg_k ≤ 1`.
pub fn reduces_to_standard<R: Ring>(rels: &G2Relations<R>, a: u32, b: u32, c: u32) -> Result<bool, Genus2Error> {
    let vars = khf_vars();
    let m = MultiPoly::monomial(&vars, vec![c, b, a], R::one());
    let red = poly_reduce(&m, &rels.rels, &khf_order())?;
    let standard = red.remainder.terms().all(|(e, _)| e[0] + e[1] <= 1);
    Ok(standard)
}
