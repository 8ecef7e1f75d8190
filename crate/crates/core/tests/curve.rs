use nsc_core::curve::{
    alpha_beta, arithmetic_genus, canonical_parameter, cohomology_by_corank, delta_at_jet_order, delta_invariant,
    f_section, h0, h1, nonspecial_check, parse_curve, zoo, CurveModel, CurveSpec, Divisor, Frame, MarkedPoint, Point,
};
use nsc_core::error::CurveError;
use nsc_core::rational::{frac, int, pow, Rational};
use nsc_core::ring::Ring;
use proptest::prelude::*;

fn p1_with(points: &[&str]) -> CurveModel {
    let marked = points
        .iter()
        .map(|p| format!(r#"{{"component":"c0","point":"{p}","tangent":"1"}}"#))
        .collect::<Vec<_>>()
        .join(",");
    parse_curve(&format!(r#"{{"components":["c0"],"singularities":[],"marked":[{marked}]}}"#)).unwrap()
}

fn sing_json(basis: &[&[&str]], k: usize, c: usize) -> String {
    let rows: Vec<String> = basis
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|x| format!("\"{x}\"")).collect::<Vec<_>>().join(",")))
        .collect();
    format!(
        r#"{{"components":["c0"],"singularities":[{{"branches":[{{"component":"c0","point":"0"}}],"jet_order":{k},"conductor":{c},"algebra_basis":[{}]}}],"marked":[{{"component":"c0","point":"inf","tangent":"1"}}]}}"#,
        rows.join(",")
    )
}

fn mark(curve: &CurveModel, points: &[Point]) -> CurveModel {
    curve
        .with_marked(
            points
                .iter()
                .map(|p| MarkedPoint {
                    component: 0,
                    point: p.clone(),
                    tangent: int(1),
                    weight: None,
                })
                .collect(),
        )
        .unwrap()
}

/// ℙ¹ with `t = 0` glued to `t = ∞`, marked at `t = 1`.
fn nodal_cubic() -> CurveModel {
    parse_curve(
        r#"{"components":["c0"],"singularities":[{"branches":[{"component":"c0","point":"0"},{"component":"c0","point":"inf"}],"jet_order":2,"conductor":1,"algebra_basis":[["1","0","1","0"],["0","1","0","0"],["0","0","0","1"]]}],"marked":[{"component":"c0","point":"1","tangent":"1"}]}"#,
    )
    .unwrap()
}

#[test]
fn ccusp2_spec_is_accepted() {
    let c = parse_curve(&sing_json(
        &[
            &["1", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "1", "0", "0"],
            &["0", "0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "0", "1"],
        ],
        6,
        3,
    ))
    .unwrap();
    assert_eq!(arithmetic_genus(&c), 2);
}

#[test]
fn c0_spec_is_accepted() {
    let c = parse_curve(&sing_json(
        &[
            &["1", "0", "0", "0", "0", "0"],
            &["0", "0", "1", "0", "0", "0"],
            &["0", "0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "0", "1"],
        ],
        6,
        4,
    ))
    .unwrap();
    assert_eq!(delta_invariant(&c.singularities[0]), 2);
}

#[test]
fn validation_diagnostics_are_distinct() {
    let missing_constants = sing_json(&[&["0", "0", "0", "1"], &["0", "0", "1", "0"]], 4, 2);
    assert!(matches!(parse_curve(&missing_constants), Err(CurveError::MissingConstants { .. })));
    // span {1, t + t^2, t^3} with conductor 2 misses the jet t^2
    let conductor = sing_json(&[&["1", "0", "0", "0"], &["0", "1", "1", "0"], &["0", "0", "0", "1"]], 4, 2);
    assert!(matches!(parse_curve(&conductor), Err(CurveError::ConductorViolation { .. })));
    // {1, t + t^2} plus order >= 3: (t + t^2)^2 = t^2 + ... is not in the span
    let not_closed = sing_json(
        &[&["1", "0", "0", "0", "0", "0"], &["0", "1", "1", "0", "0", "0"], &["0", "0", "0", "1", "0", "0"], &["0", "0", "0", "0", "1", "0"], &["0", "0", "0", "0", "0", "1"]],
        6,
        3,
    );
    assert!(matches!(parse_curve(&not_closed), Err(CurveError::NotSubalgebra { .. })));
    let low_k = sing_json(&[&["1", "0"]], 2, 3);
    assert!(matches!(parse_curve(&low_k), Err(CurveError::JetOrderTooSmall { .. })));
    let disconnected = r#"{"components":["c0","c1"],"singularities":[],"marked":[]}"#;
    assert!(matches!(parse_curve(disconnected), Err(CurveError::Disconnected(..))));
    let zero_tangent = r#"{"components":["c0"],"singularities":[],"marked":[{"component":"c0","point":"1","tangent":"0"}]}"#;
    assert!(matches!(parse_curve(zero_tangent), Err(CurveError::ZeroTangent(0))));
    let on_branch = sing_json(&[&["1", "0"], &["0", "1"]], 2, 1).replace(r#""point":"inf""#, r#""point":"0""#);
    assert!(matches!(parse_curve(&on_branch), Err(CurveError::PointClash(_))));
}

#[test]
fn genus_of_simple_models() {
    assert_eq!(arithmetic_genus(&p1_with(&["0"])), 0);
    assert_eq!(arithmetic_genus(&nodal_cubic()), 1);
    assert_eq!(delta_invariant(&nodal_cubic().singularities[0]), 1);
}

/// Codimension of `span{1, t^{a+1}, …, t^{k−1}}` in jets of order `k`, counted directly.
fn cusp_codimension(a: usize, k: usize) -> i64 {
    let in_span = (0..k).filter(|&d| d == 0 || d > a).count();
    (k - in_span) as i64
}

#[test]
fn cusp_family_delta_and_genus() {
    for a in 1..=8 {
        let c = zoo::ccusp(a);
        let s = &c.singularities[0];
        assert_eq!(delta_invariant(s), cusp_codimension(a, s.jet_order));
        assert_eq!(arithmetic_genus(&c), a as i64);
    }
}

#[test]
fn zoo_cases_have_genus_two_and_stable_delta() {
    for id in zoo::CASES {
        let c = zoo::zoo(id).unwrap();
        assert_eq!(arithmetic_genus(&c), 2, "{id}");
        for s in &c.singularities {
            for k in s.jet_order..s.jet_order + 3 {
                assert_eq!(delta_at_jet_order(s, k), delta_invariant(s), "{id} at k={k}");
            }
        }
    }
    assert!(matches!(zoo::zoo("III"), Err(CurveError::UnknownCase(_))));
}

#[test]
fn glued_cusps_genus() {
    assert_eq!(arithmetic_genus(&zoo::glued_cusps(&[1, 1])), 2);
    assert_eq!(arithmetic_genus(&zoo::glued_cusps(&[2, 1])), 3);
    assert_eq!(arithmetic_genus(&zoo::glued_cusps(&[1, 2, 3])), 6);
}

#[test]
fn projective_line_sections() {
    let c = p1_with(&["0", "inf"]);
    for n in 0..8 {
        for i in 0..2 {
            let d = Divisor::single(2, i, n);
            assert_eq!(h0(&c, &d).unwrap().dim, n as usize + 1);
            assert_eq!(h1(&c, &d).unwrap(), 0);
        }
    }
}

#[test]
fn c0_lemma_numbers() {
    let c0 = zoo::zoo("IIc-C0").unwrap();
    let at1 = mark(&c0, &[Point::Finite(int(1))]);
    assert_eq!(h0(&at1, &Divisor::single(1, 0, 2)).unwrap().dim, 1);
    assert_eq!(h1(&at1, &Divisor::single(1, 0, 3)).unwrap(), 0);
    let at_inf = mark(&c0, &[Point::Infinity]);
    assert_eq!(h0(&at_inf, &Divisor::single(1, 0, 2)).unwrap().dim, 2);
    assert_eq!(h1(&at_inf, &Divisor::single(1, 0, 2)).unwrap(), 1);
}

/// Polynomials of degree ≤ n in t whose jets at the cusp lie in `span{1, t^{a+1}, …}`.
fn cusp_sections_at_infinity(a: usize, n: usize) -> usize {
    (0..=n).filter(|&j| j == 0 || j > a).count()
}

#[test]
fn cusp_sections_at_infinity_match_monomial_count() {
    for a in 1..=4 {
        let c = zoo::ccusp(a);
        for n in 0..=2 * a + 2 {
            let got = h0(&c, &Divisor::single(1, 0, n as i64)).unwrap().dim;
            assert_eq!(got, cusp_sections_at_infinity(a, n), "a={a} n={n}");
        }
    }
    assert_eq!(h0(&zoo::ccusp(2), &Divisor::single(1, 0, 2)).unwrap().dim, 1);
}

#[test]
fn genus_two_five_point_sections() {
    for id in zoo::CASES {
        let base = zoo::zoo(id).unwrap();
        let p = zoo::sample_points(&base, 1);
        let c = mark(&base, &p);
        assert_eq!(h0(&c, &Divisor::single(1, 0, 5)).unwrap().dim, 4, "{id}");
        assert_eq!(h1(&c, &Divisor::single(1, 0, 5)).unwrap(), 0, "{id}");
    }
}

#[test]
fn divisor_on_a_branch_point_is_rejected() {
    let c = zoo::zoo("IIc-C0").unwrap();
    let mut m = c.marked.clone();
    m[0].point = Point::Finite(int(0));
    assert!(c.with_marked(m).is_err());
}

#[test]
fn nonspecial_examples() {
    assert!(nonspecial_check(&zoo::ccusp(2), &[2]).unwrap());
    assert!(nonspecial_check(&nodal_cubic(), &[1]).unwrap());
    let c0 = mark(&zoo::zoo("IIc-C0").unwrap(), &[Point::Finite(int(1))]);
    assert!(nonspecial_check(&c0, &[2]).unwrap());
    assert!(matches!(nonspecial_check(&c0, &[1]), Err(CurveError::Weights(_))));
}

#[test]
fn cusp_curve_sections_have_no_tail() {
    for g in 1..=4u32 {
        let c = zoo::ccusp(g as usize);
        let pc = canonical_parameter(&c, &[g], 0, 3 * g).unwrap();
        assert!(pc.is_identity());
        let frame = Frame::identity(&c);
        for m in g + 1..=2 * g + 2 {
            let s = f_section(&c, &[g], &frame, 0, m).unwrap().expansion(&c, &frame, 0, 8).unwrap();
            for q in -(m as i64) + 1..8 {
                assert!(s.coefficient(q).unwrap().is_zero(), "g={g} m={m} q={q}");
            }
        }
    }
}

#[test]
fn projective_line_simple_pole() {
    let c = p1_with(&["0"]);
    let frame = Frame::identity(&c);
    let s = f_section(&c, &[0], &frame, 0, 1).unwrap().expansion(&c, &frame, 0, 10).unwrap();
    assert_eq!(s.coefficient(-1).unwrap(), int(1));
    for q in 0..10 {
        assert!(s.coefficient(q).unwrap().is_zero());
    }
}

#[test]
fn sections_do_not_depend_on_jet_order() {
    let c = mark(&zoo::zoo("Ia").unwrap(), &[int(2), frac(1, 2)].map(Point::Finite));
    let doubled = CurveModel {
        singularities: c.singularities.iter().map(|s| s.at_jet_order(2 * s.jet_order)).collect(),
        ..c.clone()
    }
    .validated()
    .unwrap();
    let frame = Frame::identity(&c);
    for i in 0..2 {
        for m in 2..6 {
            let a = f_section(&c, &[1, 1], &frame, i, m).unwrap();
            let b = f_section(&doubled, &[1, 1], &frame, i, m).unwrap();
            for j in 0..2 {
                assert_eq!(a.expansion(&c, &frame, j, 8).unwrap(), b.expansion(&doubled, &frame, j, 8).unwrap());
            }
        }
    }
}

#[test]
fn canonical_parameter_postcondition_and_idempotence() {
    let c = zoo::zoo("Ic").unwrap();
    let weights = [1, 1];
    for i in 0..2 {
        let pc = canonical_parameter(&c, &weights, i, 6).unwrap();
        assert!(!pc.is_identity());
        assert_eq!(pc.coefficient(1).unwrap(), int(1));
        let frame = Frame::identity(&c).with(i, pc);
        for m in 2..=5 {
            let s = f_section(&c, &weights, &frame, i, m).unwrap().expansion(&c, &frame, i, 0).unwrap();
            assert!(s.coefficient(-1).unwrap().is_zero(), "p{i} m={m}");
        }
    }
}

#[test]
fn alpha_beta_on_default_pairs() {
    let ia = zoo::zoo("Ia").unwrap();
    let ab = alpha_beta(&ia, 0, 1).unwrap();
    assert!(!ab.alpha.is_zero());
    assert_eq!(h1(&ia, &Divisor::single(2, 0, 2)).unwrap(), 0);
    // p1 = -1 on Ib is a Weierstrass point with h1(3p) = 0
    let ib = zoo::zoo("Ib").unwrap();
    let ab = alpha_beta(&ib, 1, 0).unwrap();
    assert_eq!(h1(&ib, &Divisor::single(2, 1, 2)).unwrap(), 1);
    assert_eq!(h1(&ib, &Divisor::single(2, 1, 3)).unwrap(), 0);
    assert!(ab.alpha.is_zero() && !ab.beta.is_zero());
}

#[test]
fn alpha_beta_vanish_on_glued_simple_cusps() {
    let ab = alpha_beta(&zoo::zoo("gcusp-1-1").unwrap(), 0, 1).unwrap();
    assert!(ab.alpha.is_zero() && ab.beta.is_zero());
}

#[test]
fn curve_json_round_trips() {
    for id in zoo::CASES {
        let c = zoo::zoo(id).unwrap();
        let text = CurveSpec::from_model(&c).to_json_string();
        assert_eq!(parse_curve(&text).unwrap(), c, "{id}");
    }
}

fn expansions(c: &CurveModel, weights: &[u32], i: usize, m: u32, high: i64) -> Vec<Vec<Rational>> {
    let frame = Frame::identity(c);
    let s = f_section(c, weights, &frame, i, m).unwrap();
    (0..c.marked.len())
        .map(|j| {
            let e = s.expansion(c, &frame, j, high).unwrap();
            (-(m as i64)..high).map(|q| e.coefficient(q).unwrap()).collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn alpha_coefficients_are_torus_equivariant(n in 1i64..6, d in 1i64..5, neg in any::<bool>(), i in 0usize..2) {
        let c = if neg { frac(-n, d) } else { frac(n, d) };
        let base = zoo::zoo("Ia").unwrap();
        let mut marked = base.marked.clone();
        marked[i].tangent = &marked[i].tangent * &c;
        let scaled = base.with_marked(marked).unwrap();
        let high = 4;
        for m in 2..5u32 {
            let a = expansions(&base, &[1, 1], i, m, high);
            let b = expansions(&scaled, &[1, 1], i, m, high);
            for j in 0..2 {
                for (idx, q) in (-(m as i64)..high).enumerate() {
                    let factor = pow(&c, m as i64) * if j == i { pow(&c, q) } else { int(1) };
                    prop_assert_eq!(&b[j][idx], &(&a[j][idx] * &factor), "m={} j={} q={}", m, j, q);
                }
            }
        }
    }

    #[test]
    fn h0_is_monotone(case in 0usize..8, lo in proptest::collection::vec(-2i64..4, 2), bump in proptest::collection::vec(0i64..3, 2)) {
        let base = zoo::zoo(zoo::CASES[case]).unwrap();
        let c = mark(&base, &zoo::sample_points(&base, 2));
        let d = Divisor { mult: lo.clone() };
        let e = Divisor { mult: lo.iter().zip(&bump).map(|(a, b)| a + b).collect() };
        let (a, b) = (h0(&c, &d).unwrap().dim as i64, h0(&c, &e).unwrap().dim as i64);
        prop_assert!(a <= b && b <= a + e.degree() - d.degree());
    }

    #[test]
    fn riemann_roch_against_corank(case in 0usize..8, mult in proptest::collection::vec(-2i64..4, 3)) {
        let base = zoo::zoo(zoo::CASES[case]).unwrap();
        let c = mark(&base, &zoo::sample_points(&base, 3));
        let d = Divisor { mult };
        let (oh0, oh1) = cohomology_by_corank(&c, &d);
        let h = h0(&c, &d).unwrap().dim;
        prop_assert_eq!(h, oh0);
        prop_assert_eq!(h as i64 - oh1 as i64, d.degree() + 1 - arithmetic_genus(&c));
        prop_assert_eq!(h1(&c, &d).unwrap(), oh1 as i64);
    }
}
