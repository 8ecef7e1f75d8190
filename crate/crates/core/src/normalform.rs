//! Leading-polar-term recursion for the canonical parameter at a point with
//! non-special `(g-1)`-multiple.
//!
//! The model works over `ℚ[λ]` with `λ` of weight 1. The inputs are
//! `f̃[−g−1] = t^{−g−1} − λt^{−g}` and `f̃[−m] = t^{−m}` for `m ≥ g+2`. Step by
//! step the parameter is corrected and the sections are re-combined until
//! every `f[−m]` reads `u^{−m} + (terms of exponent > −g)`; the coefficient of
//! `u^{−g+j}` in `f[−m]` is then `s_{m,j}·λ^{m−g+j}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::NormalFormError;
use crate::poly::{MultiPoly, Variable};
use crate::rational::{format_rational, frac, Rational};
use crate::ring::Ring;
use crate::series::{LaurentSeries, ParamChange, EXACT};

/// Polynomials in the single weight-1 indeterminate `λ`.
pub type LambdaPoly = MultiPoly<Rational>;

type Series = LaurentSeries<LambdaPoly>;

pub fn lambda_vars() -> Arc<[Variable]> {
    Variable::list(&[("lambda", 1)])
}

fn lambda_degree(e: &[u32]) -> u32 {
    e.first().copied().unwrap_or(0)
}

/// `Some((r, d))` when `p = r·λ^d` with `r ≠ 0`.
pub fn as_lambda_monomial(p: &LambdaPoly) -> Option<(Rational, u32)> {
    let mut terms = p.terms();
    let (e, c) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    Some((c.clone(), lambda_degree(e)))
}

fn is_homogeneous(p: &LambdaPoly, degree: i64) -> bool {
    p.terms().all(|(e, _)| lambda_degree(e) as i64 == degree)
}

/// Table of the constants `s_{m,j}` for one genus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STable {
    pub genus: i64,
    pub entries: BTreeMap<(i64, i64), Rational>,
}

impl STable {
    pub fn get(&self, m: i64, j: i64) -> Option<&Rational> {
        self.entries.get(&(m, j))
    }

    /// Entries with `m ≤ m_max` and `j ≤ j_max`.
    pub fn restrict(&self, m_max: i64, j_max: i64) -> STable {
        STable {
            genus: self.genus,
            entries: self
                .entries
                .iter()
                .filter(|((m, j), _)| *m <= m_max && *j <= j_max)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|((m, j), v)| json!({"m": m, "j": j, "value": format_rational(v)}))
            .collect();
        json!({"genus": self.genus, "entries": entries})
    }

    /// Plain-text grid: one row per `m`, one column per `j`.
    pub fn render_table(&self) -> String {
        let ms: Vec<i64> = self.entries.keys().map(|k| k.0).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let js: Vec<i64> = self.entries.keys().map(|k| k.1).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let mut cells: Vec<Vec<String>> = vec![std::iter::once("m\\j".to_string())
            .chain(js.iter().map(|j| j.to_string()))
            .collect()];
        for m in &ms {
            let mut row = vec![m.to_string()];
            for j in &js {
                row.push(self.get(*m, *j).map(format_rational).unwrap_or_default());
            }
            cells.push(row);
        }
        let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        let mut out = format!("genus {}\n", self.genus);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// The substitution `u_{n−1} = u_n + coefficient·u_n^n` applied at step `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Correction {
    pub step: usize,
    pub exponent: u32,
    pub coefficient: LambdaPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormResult {
    pub genus: i64,
    pub m_max: i64,
    pub j_max: i64,
    /// Largest `m` for which `f[−m]` was built (`m_max + j_max`).
    pub depth: i64,
    /// `t(u)` in the final parameter.
    pub parameter: ParamChange<LambdaPoly>,
    /// `stages[k]` is `t` as a series in `u_{k+1}`; `stages[0]` is the identity.
    pub stages: Vec<ParamChange<LambdaPoly>>,
    pub corrections: Vec<Correction>,
    /// `multipliers[n]` are `p_1, …, p_{n−1}` used to build `f[−g−n]`.
    pub multipliers: BTreeMap<usize, Vec<LambdaPoly>>,
    /// `f[−m]` as exact Laurent polynomials in `t`, keyed by `m`.
    pub sections_t: BTreeMap<i64, Series>,
    /// Normalized `f[−m]` in the final parameter for `g+1 ≤ m ≤ m_max`, known below `u^{−g+j_max+1}`.
    pub sections_u: BTreeMap<i64, Series>,
    pub table: STable,
}

/// The model input `f̃[−m]` as an exact series in `t`.
pub fn model_input(g: i64, m: i64) -> Series {
    let vars = lambda_vars();
    let one = LambdaPoly::constant(&vars, Rational::one());
    if m == g + 1 {
        let lambda = LambdaPoly::named(&vars, "lambda");
        LaurentSeries::from_terms("t", [(-g - 1, one), (-g, -lambda)], EXACT)
    } else {
        LaurentSeries::monomial("t", -m, one)
    }
}

impl NormalFormResult {
    /// Expansion of an exact `t`-series in the parameter `u_stage` (stage 1 is `t` itself).
    pub fn expand_at_stage(&self, series_t: &Series, stage: usize, want_high: i64) -> Result<Series, NormalFormError> {
        let pc = self
            .stages
            .get(stage.wrapping_sub(1))
            .ok_or_else(|| NormalFormError::Invariant(format!("no parameter stage {stage}")))?;
        Ok(series_t.substitute(pc, want_high)?)
    }

    /// The correction applied when passing from `u_{n−1}` to `u_n`.
    pub fn correction(&self, n: usize) -> Option<&Correction> {
        self.corrections.iter().find(|c| c.step == n)
    }
}

/// Runs the recursion for genus `g`, reporting `s_{m,j}` for `g+1 ≤ m ≤ m_max`, `1 ≤ j ≤ j_max`.
pub fn run_recursion(g: i64, m_max: i64, j_max: i64) -> Result<NormalFormResult, NormalFormError> {
    if g < 2 {
        return Err(NormalFormError::Genus(g));
    }
    if m_max < g + 1 {
        return Err(NormalFormError::MMax { genus: g, m_max });
    }
    if j_max < 0 {
        return Err(NormalFormError::JMax(j_max));
    }
    let depth = m_max + j_max;
    let steps = (depth - g) as usize;
    let order = steps as i64 + 2;
    let mut param = ParamChange::<LambdaPoly>::identity("u", order);
    let mut stages = vec![param.clone()];
    let mut corrections = Vec::new();
    let mut multipliers = BTreeMap::new();
    let mut sections_t: BTreeMap<i64, Series> = BTreeMap::new();
    sections_t.insert(g + 1, model_input(g, g + 1));
    multipliers.insert(1, Vec::new());

    for n in 2..=steps + 1 {
        // kill the u^{-g} coefficient of f[-g-n+1]
        let prev = &sections_t[&(g + n as i64 - 1)];
        let c = prev.substitute(&param, -g + 1)?.coefficient(-g)?;
        let coefficient = c.scale(&frac(1, g + n as i64 - 1));
        if !coefficient.is_zero() {
            let step = ParamChange::correction("u", coefficient.clone(), n as u32, order);
            param = param.compose(&step)?;
        }
        corrections.push(Correction {
            step: n,
            exponent: n as u32,
            coefficient,
        });
        stages.push(param.clone());
        check_stage(g, n, &sections_t, &param)?;

        if n > steps {
            break;
        }
        let m = g + n as i64;
        let tilde = model_input(g, m);
        let expanded = tilde.substitute(&param, -g)?;
        let ps: Vec<LambdaPoly> = (1..n as i64)
            .map(|i| expanded.coefficient(-m + i))
            .collect::<Result<_, _>>()?;
        let mut f = tilde;
        for (i, p) in ps.iter().enumerate() {
            let lower = &sections_t[&(m - 1 - i as i64)];
            f = &f - &lower.map_coeffs(|x| x.clone() * p);
        }
        let in_u = f.substitute(&param, -g)?;
        for k in (-m + 1)..-g {
            if !in_u.coefficient(k)?.is_zero() {
                return Err(NormalFormError::Invariant(format!(
                    "f[-{m}] keeps a u^{k} term after subtracting {} multipliers",
                    ps.len()
                )));
            }
        }
        sections_t.insert(m, f);
        multipliers.insert(n, ps);
    }

    let mut sections_u = BTreeMap::new();
    let mut entries = BTreeMap::new();
    for m in g + 1..=m_max {
        let s = sections_t[&m].substitute(&param, -g + j_max + 1)?;
        if !s.coefficient(-m)?.is_one() {
            return Err(NormalFormError::Invariant(format!("f[-{m}] is not monic in u")));
        }
        for k in (-m + 1)..=-g {
            if !s.coefficient(k)?.is_zero() {
                return Err(NormalFormError::Invariant(format!("f[-{m}] has a u^{k} term")));
            }
        }
        for j in 1..=j_max {
            let c = s.coefficient(-g + j)?;
            let deg = m - g + j;
            let value = if c.is_zero() {
                Rational::zero()
            } else {
                match as_lambda_monomial(&c) {
                    Some((r, d)) if d as i64 == deg => r,
                    _ => {
                        return Err(NormalFormError::Invariant(format!(
                            "coefficient of u^{} in f[-{m}] is {c}, not a multiple of lambda^{deg}",
                            -g + j
                        )))
                    }
                }
            };
            entries.insert((m, j), value);
        }
        sections_u.insert(m, s);
    }

    Ok(NormalFormResult {
        genus: g,
        m_max,
        j_max,
        depth,
        parameter: param,
        stages,
        corrections,
        multipliers,
        sections_t,
        sections_u,
        table: STable { genus: g, entries },
    })
}

/// λ-homogeneity of every section built so far, expanded in the current parameter.
fn check_stage(
    g: i64,
    n: usize,
    sections: &BTreeMap<i64, Series>,
    param: &ParamChange<LambdaPoly>,
) -> Result<(), NormalFormError> {
    for (&m, f) in sections {
        let available = -m + param.order() - 1;
        let s = f.substitute(param, available.min(-g + 1))?;
        for (k, c) in s.terms() {
            if !is_homogeneous(c, m + k) {
                return Err(NormalFormError::Invariant(format!(
                    "after step {n}: coefficient {c} of u^{k} in f[-{m}] is not homogeneous of degree {}",
                    m + k
                )));
            }
        }
    }
    Ok(())
}

/// Computed versus closed-form values of `s_{g+1,1}` and `s_{g+1,2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormReport {
    pub genus: i64,
    pub s1: Rational,
    pub s1_expected: Rational,
    pub s2: Rational,
    pub s2_expected: Rational,
    /// Coefficient of `u_3^3` in the second substitution, divided by `λ²`.
    pub second_correction: Rational,
    pub second_correction_unsimplified: Rational,
    pub second_correction_simplified: Rational,
}

impl ClosedFormReport {
    pub fn passed(&self) -> bool {
        self.s1 == self.s1_expected && self.s2 == self.s2_expected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "passed": self.passed(),
            "s_g1_1": {"computed": format_rational(&self.s1), "expected": format_rational(&self.s1_expected)},
            "s_g1_2": {"computed": format_rational(&self.s2), "expected": format_rational(&self.s2_expected)},
            "second_correction": {
                "computed": format_rational(&self.second_correction),
                "matches_unsimplified": self.second_correction == self.second_correction_unsimplified,
                "matches_simplified": self.second_correction == self.second_correction_simplified,
            },
        })
    }
}

impl fmt::Display for ClosedFormReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={}: s[g+1,1] = {} (expected {}), s[g+1,2] = {} (expected {}) -> {}",
            self.genus,
            self.s1,
            self.s1_expected,
            self.s2,
            self.s2_expected,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

pub fn expected_s1(g: i64) -> Rational {
    frac(-(2 * g + 1), 2 * (g + 1))
}

pub fn expected_s2(g: i64) -> Rational {
    frac(4 * g + 2, 3 * (g + 1) * (g + 1))
}

/// Runs the recursion to `m_max = g+3`, `j_max = 2` and compares with the closed forms.
pub fn closed_form_check(g: i64) -> Result<ClosedFormReport, NormalFormError> {
    let r = run_recursion(g, g + 3, 2)?;
    let s1 = r.table.get(g + 1, 1).cloned().unwrap_or_else(Rational::zero);
    let s2 = r.table.get(g + 1, 2).cloned().unwrap_or_else(Rational::zero);
    let second = r
        .correction(3)
        .map(|c| c.coefficient.coeff(&[2]))
        .unwrap_or_else(Rational::zero);
    Ok(ClosedFormReport {
        genus: g,
        s1,
        s1_expected: expected_s1(g),
        s2,
        s2_expected: expected_s2(g),
        second_correction: second,
        second_correction_unsimplified: frac((g + 2) * (g + 3), 2 * (g + 2) * (g + 1) * (g + 1)),
        second_correction_simplified: frac(g + 3, 2 * (g + 1) * (g + 1)),
    })
}

/// Result of checking that corrections and multipliers are pure λ-monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialReport {
    pub corrections_checked: usize,
    pub multipliers_checked: usize,
    pub failures: Vec<String>,
}

impl MonomialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every correction at step `n` must be `r·λ^{n−1}` (or zero) and every multiplier `p_i` must be `a·λ^i` (or zero).
pub fn correction_monomial_check(result: &NormalFormResult) -> MonomialReport {
    let mut failures = Vec::new();
    let check = |failures: &mut Vec<String>, what: String, p: &LambdaPoly, deg: u32| {
        if p.is_zero() {
            return;
        }
        match as_lambda_monomial(p) {
            Some((_, d)) if d == deg => {}
            _ => failures.push(format!("{what} = {p} is not a multiple of lambda^{deg}")),
        }
    };
    for c in &result.corrections {
        check(&mut failures, format!("correction at step {}", c.step), &c.coefficient, c.step as u32 - 1);
    }
    let mut multipliers_checked = 0;
    for (n, ps) in &result.multipliers {
        if ps.len() + 1 != *n {
            failures.push(format!("step {n} used {} multipliers, expected {}", ps.len(), n - 1));
        }
        for (i, p) in ps.iter().enumerate() {
            multipliers_checked += 1;
            check(&mut failures, format!("multiplier p_{} at step {n}", i + 1), p, i as u32 + 1);
        }
    }
    MonomialReport {
        corrections_checked: result.corrections.len(),
        multipliers_checked,
        failures,
    }
}
