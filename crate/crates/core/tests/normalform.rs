use nsc_core::normalform::{
    closed_form_check, correction_monomial_check, expected_s1, expected_s2, run_recursion, STable,
};
use nsc_core::rational::{frac, int, Rational};
use nsc_core::Ring;

// Power series helpers on plain coefficient vectors, index = exponent.
fn mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![int(0); n];
    for i in 0..n.min(a.len()) {
        for j in 0..(n - i).min(b.len()) {
            out[i + j] = &out[i + j] + &a[i] * &b[j];
        }
    }
    out
}

fn inv(a: &[Rational], n: usize) -> Vec<Rational> {
    let mut b = vec![int(0); n];
    b[0] = int(1) / &a[0];
    for k in 1..n {
        let mut s = int(0);
        for i in 1..=k.min(a.len() - 1) {
            s = s + &a[i] * &b[k - i];
        }
        b[k] = -(s * &b[0]);
    }
    b
}

fn powi(a: &[Rational], e: i64, n: usize) -> Vec<Rational> {
    let base = if e < 0 { inv(a, n) } else { a.to_vec() };
    let mut acc = vec![int(0); n];
    acc[0] = int(1);
    for _ in 0..e.unsigned_abs() {
        acc = mul(&acc, &base, n);
    }
    acc
}

/// s-table at λ = 1 from the direct characterization of the canonical parameter:
/// `u(t)^{-m}` has `[t^{-g}] = -[t^{-g-1}]` for every `m ≥ g+1`.
fn oracle_table(g: i64, m_max: i64, j_max: i64) -> STable {
    let depth = (m_max - g + j_max + 2) as usize;
    // u = t·U(t), U = 1 + b_1 t + ...
    let mut unit = vec![int(0); depth];
    unit[0] = int(1);
    for k in 1..depth {
        let m = g + k as i64;
        let p = powi(&unit, -m, k + 1);
        // coefficient of t^{-g} in u^{-m} is p[m-g] = p[k]; of t^{-g-1} is p[k-1]
        let defect = &p[k] + &p[k - 1];
        // p[k] depends on b_k through -m·b_k
        unit[k] = &unit[k] + defect / int(m);
    }
    // t as a series in u: revert u = t·U(t) by fixed-point iteration on T = t/u
    let n = depth;
    let mut tu = vec![int(0); n];
    tu[0] = int(1);
    for _ in 0..n {
        // t = u / U(t) with t = u·T(u)
        let mut tser = vec![int(0); n];
        tser[1..n].clone_from_slice(&tu[..n - 1]);
        let mut comp = vec![int(0); n];
        for k in (0..n).rev() {
            comp = mul(&comp, &tser, n);
            comp[0] = &comp[0] + &unit[k];
        }
        tu = inv(&comp, n);
    }
    let mut entries = std::collections::BTreeMap::new();
    for m in g + 1..=m_max {
        // f[-m] = Σ_k [t^{-k}]u^{-m} f̃[-k]; f̃[-g-1] = t^{-g-1} - t^{-g}
        let p = powi(&unit, -m, (m - g) as usize);
        let mut f = vec![int(0); (m + j_max + 1) as usize];
        let idx = |e: i64| (e + m) as usize;
        for k in g + 1..=m {
            let c = p[(m - k) as usize].clone();
            f[idx(-k)] = &f[idx(-k)] + &c;
            if k == g + 1 {
                f[idx(-g)] = &f[idx(-g)] - &c;
            }
        }
        // substitute t = u·T(u): Σ f_e u^e T^e
        let width = (m - g + j_max + 1) as usize;
        let mut out = vec![int(0); width];
        for (i, c) in f.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = i as i64 - m;
            let te = powi(&tu, e, width);
            for (d, x) in te.iter().enumerate() {
                let pos = i + d;
                if pos < width {
                    out[pos] = &out[pos] + c * x;
                }
            }
        }
        for j in 1..=j_max {
            let pos = (m - g + j) as usize;
            entries.insert((m, j), if pos < width { out[pos].clone() } else { int(0) });
        }
    }
    STable { genus: g, entries }
}

#[test]
fn closed_forms_hold_for_small_genera() {
    for g in 2..=10 {
        let r = closed_form_check(g).unwrap();
        assert!(r.passed(), "{r}");
    }
    let r = closed_form_check(3).unwrap();
    assert_eq!((r.s1, r.s2), (frac(-7, 8), frac(7, 24)));
    let r = closed_form_check(10).unwrap();
    assert_eq!((r.s1, r.s2), (frac(-21, 22), frac(14, 121)));
}

#[test]
fn expected_values_in_lowest_terms() {
    assert_eq!(expected_s1(2), frac(-5, 6));
    assert_eq!(expected_s2(2), frac(10, 27));
    assert_eq!(expected_s2(3), frac(14, 48));
}

#[test]
fn second_correction_matches_both_readings() {
    for g in 2..=6 {
        let r = closed_form_check(g).unwrap();
        assert_eq!(r.second_correction, r.second_correction_simplified);
        assert_eq!(r.second_correction, r.second_correction_unsimplified);
    }
}

#[test]
fn table_agrees_with_direct_characterization() {
    for g in 2..=5 {
        let r = run_recursion(g, g + 4, 4).unwrap();
        assert_eq!(r.table, oracle_table(g, g + 4, 4), "genus {g}");
    }
}

#[test]
fn deeper_windows_restrict_to_the_same_table() {
    let base = run_recursion(3, 6, 3).unwrap().table;
    assert_eq!(run_recursion(3, 6, 5).unwrap().table.restrict(6, 3), base);
    assert_eq!(run_recursion(3, 7, 3).unwrap().table.restrict(6, 3), base);
}

#[test]
fn recursion_is_deterministic() {
    let a = run_recursion(4, 8, 3).unwrap();
    let b = run_recursion(4, 8, 3).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.table.to_json().to_string(), b.table.to_json().to_string());
}

#[test]
fn corrections_and_multipliers_are_monomials() {
    for (g, m) in [(2, 5), (3, 8), (5, 9)] {
        let r = run_recursion(g, m, 3).unwrap();
        let report = correction_monomial_check(&r);
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.corrections_checked > 0);
    }
}

#[test]
fn third_step_correction_at_genus_two() {
    let r = run_recursion(2, 5, 2).unwrap();
    let c = &r.correction(4).unwrap().coefficient;
    assert_eq!(c.coeff(&[3]), frac(-1, 9));
    // general shape -(g²+3g-1)/(3(g+1)³)
    for g in 2..=6i64 {
        let r = run_recursion(g, g + 3, 2).unwrap();
        let c = r.correction(4).unwrap().coefficient.coeff(&[3]);
        assert_eq!(c, frac(-(g * g + 3 * g - 1), 3 * (g + 1).pow(3)));
    }
}

#[test]
fn normalized_sections_have_the_normal_form_shape() {
    let g = 3;
    let r = run_recursion(g, 8, 2).unwrap();
    for (m, s) in &r.sections_u {
        assert!(s.coefficient(-m).unwrap().is_one());
        for k in -m + 1..=-g {
            assert!(s.coefficient(k).unwrap().is_zero());
        }
        assert_eq!(s.high(), -g + 3);
    }
}

#[test]
fn default_window_is_fast_enough() {
    let start = std::time::Instant::now();
    let r = run_recursion(10, 16, 6).unwrap();
    assert_eq!(r.table.entries.len(), 36);
    assert!(start.elapsed().as_secs() < 30);
}
