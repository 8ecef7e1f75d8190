//! Solving Buchberger's criterion for `c₁, c₂, c₃` in the normalized presentation.
//!
//! With `p₁ = f`, `p₂ = −q₁`, `p₃ = 0` and unknown
//! `c₁ = c₁₀ + c₁₁f + c₁₂f²`, `c₂ = c₂₀ + c₂₁f + c₂₂f² + f³`,
//! `c₃ = c₃₀ + c₃₁f + c₃₂f² + c₃₃f³`, every coefficient of every S-polynomial
//! remainder must vanish. These equations are solved by successive
//! elimination of unknowns that occur linearly with a rational coefficient.

use std::sync::Arc;

use serde_json::{json, Value};

use super::{buchberger_verify, khf_vars, G2Relations, PARAM_NAMES, PARAM_WEIGHTS};
use crate::error::Genus2Error;
use crate::poly::{MonomialOrder, MultiPoly, Variable};
use crate::rational::Rational;
use crate::ring::Ring;

type Inner = MultiPoly<Rational>;

/// The unknown coefficients, with the weights that make every relation homogeneous.
pub const UNKNOWNS: [(&str, u32); 10] = [
    ("c10", 8),
    ("c11", 5),
    ("c12", 2),
    ("c20", 9),
    ("c21", 6),
    ("c22", 3),
    ("c30", 10),
    ("c31", 7),
    ("c32", 4),
    ("c33", 1),
];

fn inner_vars() -> Arc<[Variable]> {
    let mut spec: Vec<(&str, u32)> = PARAM_NAMES.iter().copied().zip(PARAM_WEIGHTS).collect();
    spec.extend(UNKNOWNS);
    Variable::list(&spec)
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    /// Number of scalar equations collected from the three remainders.
    pub equations: usize,
    /// `(unknown, value)` in elimination order.
    pub solutions: Vec<(String, Inner)>,
    /// `(unknown, closed form)` for the unknowns whose solution differs from the closed form.
    pub mismatches: Vec<(String, Inner, Inner)>,
    pub unsolved: Vec<String>,
    /// Equations left nonzero after all substitutions.
    pub residuals: Vec<Inner>,
    /// Buchberger's criterion for the relations with the solved `c`.
    pub solved_relations_pass: bool,
}

impl SolveReport {
    pub fn passed(&self) -> bool {
        self.unsolved.is_empty() && self.residuals.is_empty() && self.mismatches.is_empty() && self.solved_relations_pass
    }

    pub fn to_json(&self) -> Value {
        let order = MonomialOrder::for_variables(&inner_vars());
        let show = |p: &Inner| p.display_with(&order);
        json!({
            "equations": self.equations,
            "solutions": self.solutions.iter().map(|(n, v)| json!({"unknown": n, "value": show(v)})).collect::<Vec<_>>(),
            "closed_form_mismatches": self.mismatches.iter().map(|(n, got, want)| json!({"unknown": n, "solved": show(got), "closed_form": show(want)})).collect::<Vec<_>>(),
            "unsolved": self.unsolved,
            "residual_equations": self.residuals.iter().map(show).collect::<Vec<_>>(),
            "solved_relations_pass": self.solved_relations_pass,
            "passed": self.passed(),
        })
    }
}

/// Relations of the normalized presentation with `c` left unknown.
fn unknown_relations(vars: &Arc<[Variable]>) -> G2Relations<Inner> {
    let outer = khf_vars();
    let v = |name: &str| MultiPoly::constant(&outer, MultiPoly::named(vars, name));
    let (k, h, f) = (MultiPoly::var(&outer, 0), MultiPoly::var(&outer, 1), MultiPoly::var(&outer, 2));
    let f2 = f.clone() * &f;
    let f3 = f2.clone() * &f;
    let q1 = v("q1");
    let q2 = v("q20") + &(v("q21") * &f);
    let q3 = v("q30") + &(v("q31") * &f) + &f2;
    let c1 = v("c10") + &(v("c11") * &f) + &(v("c12") * &f2);
    let c2 = v("c20") + &(v("c21") * &f) + &(v("c22") * &f2) + &f3;
    let c3 = v("c30") + &(v("c31") * &f) + &(v("c32") * &f2) + &(v("c33") * &f3);
    G2Relations {
        rels: [
            h.clone() * &h - &(f.clone() * &k) - &(q1.clone() * &h) - &c1,
            h.clone() * &k + &(q1 * &k) - &(q2 * &h) - &c2,
            k.clone() * &k - &(q3 * &h) - &c3,
        ],
    }
}

/// The closed forms `c₁ = 2q₁² + f q₂`, `c₂ = f q₃ + q₁q₂`, `c₃ = q₂² − 2q₁q₃`, coefficient by coefficient.
fn closed_forms(vars: &Arc<[Variable]>) -> Vec<(String, Inner)> {
    let v = |name: &str| MultiPoly::named(vars, name);
    let two = Inner::from_int(2);
    let (q1, q20, q21, q30, q31) = (v("q1"), v("q20"), v("q21"), v("q30"), v("q31"));
    let zero = Inner::zero_in(vars);
    [
        ("c10", two.clone() * &q1 * &q1),
        ("c11", q20.clone()),
        ("c12", q21.clone()),
        ("c20", q1.clone() * &q20),
        ("c21", q30.clone() + &(q1.clone() * &q21)),
        ("c22", q31.clone()),
        ("c30", q20.clone() * &q20 - &(two.clone() * &q1 * &q30)),
        ("c31", two.clone() * &q20 * &q21 - &(two.clone() * &q1 * &q31)),
        ("c32", q21.clone() * &q21 - &(two * &q1)),
        ("c33", zero),
    ]
    .into_iter()
    .map(|(n, p)| (n.to_string(), p))
    .collect()
}

/// An unknown `x` with `eq = κ·x + rest`, `κ ∈ ℚ \ {0}`, `x` absent from `rest`.
fn linear_unknown(eq: &Inner, unknowns: &[usize]) -> Option<(usize, Rational)> {
    for &u in unknowns {
        if eq.degree_in(u) != Some(1) {
            continue;
        }
        let with_u: Vec<_> = eq.terms().filter(|(e, _)| e[u] > 0).collect();
        if let [(e, c)] = with_u.as_slice() {
            if e.iter().enumerate().all(|(i, &x)| x == u32::from(i == u)) {
                return Some((u, (*c).clone()));
            }
        }
    }
    None
}

/// Collects the remainder equations, eliminates the unknowns, and compares with the closed forms.
pub fn solve_c() -> Result<SolveReport, Genus2Error> {
    let vars = inner_vars();
    let rels = unknown_relations(&vars);
    let cert = buchberger_verify(&rels)?;
    let mut eqs: Vec<Inner> = cert
        .reductions
        .iter()
        .flat_map(|r| r.remainder.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>())
        .collect();
    let equations = eqs.len();
    let mut open: Vec<usize> = (PARAM_NAMES.len()..vars.len()).collect();
    let mut values: Vec<Inner> = (0..vars.len()).map(|i| MultiPoly::var(&vars, i)).collect();
    let mut solutions = Vec::new();
    loop {
        eqs.retain(|e| !e.is_zero());
        let found = eqs
            .iter()
            .enumerate()
            .find_map(|(i, e)| linear_unknown(e, &open).map(|(u, k)| (i, u, k)));
        let Some((i, u, kappa)) = found else { break };
        let eq = eqs.remove(i);
        let x = MultiPoly::var(&vars, u);
        let rest = eq - &x.scale(&kappa);
        let value = rest.scale(&(-kappa.recip()));
        let mut sub: Vec<Inner> = (0..vars.len()).map(|j| MultiPoly::var(&vars, j)).collect();
        sub[u] = value.clone();
        let apply = |p: &Inner| p.eval(&sub, |c| MultiPoly::constant(&vars, c.clone()));
        eqs = eqs.iter().map(apply).collect();
        for v in values.iter_mut() {
            *v = apply(v);
        }
        open.retain(|&j| j != u);
        solutions.push(u);
    }
    let unsolved: Vec<String> = open.iter().map(|&u| vars[u].name.clone()).collect();
    let solved: Vec<(String, Inner)> = solutions
        .iter()
        .map(|&u| (vars[u].name.clone(), values[u].clone()))
        .collect();
    let mut mismatches = Vec::new();
    for (name, want) in closed_forms(&vars) {
        let idx = vars.iter().position(|v| v.name == name).unwrap();
        if open.contains(&idx) {
            continue;
        }
        if values[idx] != want {
            mismatches.push((name, values[idx].clone(), want));
        }
    }
    let solved_relations_pass = if unsolved.is_empty() {
        let outer = khf_vars();
        let plug = |p: &MultiPoly<Inner>| {
            p.map_coeffs(|c| c.eval(&values, |r| MultiPoly::constant(&vars, r.clone())))
                .embed(&outer)
        };
        let plugged = G2Relations {
            rels: rels.rels.each_ref().map(plug),
        };
        buchberger_verify(&plugged)?.passed()
    } else {
        false
    };
    Ok(SolveReport {
        equations,
        solutions: solved,
        mismatches,
        unsolved,
        residuals: eqs,
        solved_relations_pass,
    })
}
