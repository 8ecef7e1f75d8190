//! Built-in curves: the singular irreducible genus-2 curves with rational
//! normalization, the cuspidal curves `C^cusp(a)`, and cuspidal curves glued
//! transversally at their cusps.

use super::{Branch, CurveModel, MarkedPoint, Point, SingularPoint};
use crate::error::CurveError;
use crate::rational::{frac, int, Rational};
use crate::ring::Ring;

/// Ids of the fixed genus-2 cases.
pub const CASES: [&str; 8] = [
    "Ia",
    "Ib",
    "Ic",
    "IIa",
    "IIb-tacnode",
    "IIb-cusp-node",
    "IIc-ccusp2",
    "IIc-C0",
];

pub fn description(id: &str) -> Option<&'static str> {
    Some(match id {
        "Ia" => "two nodes: t=0 glued to t=inf, t=1 glued to t=-1",
        "Ib" => "node (t=0 ~ t=inf) and a simple cusp at t=1",
        "Ic" => "simple cusps at t=0 and t=inf",
        "IIa" => "coordinate cross: t=0, t=1, t=inf glued transversally",
        "IIb-tacnode" => "tacnode: branches at t=0 and t=inf tangent to first order",
        "IIb-cusp-node" => "cusp at t=0 glued transversally to the branch at t=inf",
        "IIc-ccusp2" => "C^cusp(2): local ring 1 + t^3 k[[t]] at t=0",
        "IIc-C0" => "C0: local ring k + k t^2 + t^4 k[[t]] at t=0",
        _ => return None,
    })
}

fn pt(s: &str) -> Point {
    Point::parse(s).expect("built-in point literal")
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

/// Local ring on `points` (all on component 0 unless given) with prescribed
/// low-order jets: `low` lists vectors in the jets of order `c`, everything of
/// order `≥ c` is included. Jets are recorded to order `2c`.
fn singularity(branches: Vec<Branch>, conductor: usize, low: Vec<Vec<Rational>>) -> SingularPoint {
    let b = branches.len();
    let k = 2 * conductor;
    let mut basis = Vec::new();
    for v in low {
        let mut w = vec![Rational::zero(); b * k];
        for br in 0..b {
            for d in 0..conductor {
                w[br * k + d] = v[br * conductor + d].clone();
            }
        }
        basis.push(w);
    }
    for br in 0..b {
        for d in conductor..k {
            basis.push(unit(b * k, br * k + d));
        }
    }
    SingularPoint {
        branches,
        jet_order: k,
        conductor,
        algebra_basis: basis,
    }
}

fn on(component: usize, points: &[&str]) -> Vec<Branch> {
    points
        .iter()
        .map(|p| Branch {
            component,
            point: pt(p),
        })
        .collect()
}

/// Ordinary `n`-fold point with transversal branches (node for `n = 2`).
fn transversal(branches: Vec<Branch>) -> SingularPoint {
    let n = branches.len();
    let ones = vec![Rational::one(); n];
    singularity(branches, 1, vec![ones])
}

/// Cusp `k + t^{a+1} k[[t]]` at a single branch.
fn cusp(branch: Branch, a: usize) -> SingularPoint {
    singularity(vec![branch], a + 1, vec![unit(a + 1, 0)])
}

fn marked(points: &[&str]) -> Vec<MarkedPoint> {
    points
        .iter()
        .map(|p| MarkedPoint {
            component: 0,
            point: pt(p),
            tangent: int(1),
            weight: None,
        })
        .collect()
}

fn single(singularities: Vec<SingularPoint>, marks: &[&str]) -> CurveModel {
    CurveModel {
        components: vec!["c0".to_string()],
        singularities,
        marked: marked(marks),
    }
}

/// `C^cusp(a)`: `ℙ¹` with `0` pinched to `k + t^{a+1}k[[t]]`, marked at `∞`.
pub fn ccusp(a: usize) -> CurveModel {
    single(vec![cusp(on(0, &["0"]).remove(0), a)], &["inf"])
}

/// Cuspidal curves `C^cusp(a_i)` glued transversally at their cusps, each marked at `∞`.
pub fn glued_cusps(weights: &[usize]) -> CurveModel {
    let n = weights.len();
    let c = weights.iter().copied().max().unwrap_or(0) + 1;
    let branches: Vec<Branch> = (0..n)
        .map(|i| Branch {
            component: i,
            point: pt("0"),
        })
        .collect();
    let mut low = vec![Rational::zero(); n * c];
    for i in 0..n {
        low[i * c] = Rational::one();
    }
    let mut low_basis = vec![low];
    for (i, &a) in weights.iter().enumerate() {
        for d in a + 1..c {
            low_basis.push(unit(n * c, i * c + d));
        }
    }
    CurveModel {
        components: (0..n).map(|i| format!("c{i}")).collect(),
        singularities: vec![singularity(branches, c, low_basis)],
        marked: (0..n)
            .map(|i| MarkedPoint {
                component: i,
                point: Point::Infinity,
                tangent: int(1),
                weight: Some(weights[i] as u32),
            })
            .collect(),
    }
}

fn case(id: &str) -> Option<CurveModel> {
    let c = |p: &str| on(0, &[p]).remove(0);
    Some(match id {
        "Ia" => single(
            vec![transversal(on(0, &["0", "inf"])), transversal(on(0, &["1", "-1"]))],
            &["2", "1/2"],
        ),
        "Ib" => single(vec![transversal(on(0, &["0", "inf"])), cusp(c("1"), 1)], &["2", "-1"]),
        "Ic" => single(vec![cusp(c("0"), 1), cusp(c("inf"), 1)], &["1", "2"]),
        "IIa" => single(vec![transversal(on(0, &["0", "1", "inf"]))], &["2", "-1"]),
        "IIb-tacnode" => {
            // f(0) = g(inf) and f'(0) = g'(inf) in the local coordinates t and 1/t
            let low = vec![
                vec![int(1), int(0), int(1), int(0)],
                vec![int(0), int(1), int(0), int(1)],
            ];
            single(vec![singularity(on(0, &["0", "inf"]), 2, low)], &["1", "2"])
        }
        "IIb-cusp-node" => {
            // cusp branch at 0 (no linear term) glued to a smooth branch at inf
            let low = vec![
                vec![int(1), int(0), int(1), int(0)],
                vec![int(0), int(0), int(0), int(1)],
            ];
            single(vec![singularity(on(0, &["0", "inf"]), 2, low)], &["1", "2"])
        }
        "IIc-ccusp2" => ccusp(2),
        "IIc-C0" => {
            let low = vec![unit(4, 0), unit(4, 2)];
            let mut s = singularity(on(0, &["0"]), 4, low);
            // jets of order 6 suffice for this ring
            s = s.at_jet_order(6);
            single(vec![s], &["1", "inf"])
        }
        _ => return None,
    })
}

/// Looks up a built-in curve: one of [`CASES`], `ccusp-<a>`, or `gcusp-<a1>-<a2>-…`.
pub fn zoo(id: &str) -> Result<CurveModel, CurveError> {
    let unknown = || CurveError::UnknownCase(id.to_string());
    let curve = if let Some(a) = id.strip_prefix("ccusp-") {
        let a: usize = a.parse().map_err(|_| unknown())?;
        if a == 0 {
            return Err(unknown());
        }
        ccusp(a)
    } else if let Some(rest) = id.strip_prefix("gcusp-") {
        let ws: Vec<usize> = rest
            .split('-')
            .map(|w| w.parse::<usize>().ok().filter(|&w| w > 0))
            .collect::<Option<_>>()
            .ok_or_else(unknown)?;
        if ws.len() < 2 {
            return Err(unknown());
        }
        glued_cusps(&ws)
    } else {
        case(id).ok_or_else(unknown)?
    };
    curve.validated()
}

/// Every id [`zoo`] understands, with the families shown as patterns.
pub fn list() -> Vec<String> {
    let mut ids: Vec<String> = CASES.iter().map(|s| s.to_string()).collect();
    ids.push("ccusp-<a>".to_string());
    ids.push("gcusp-<a1>-<a2>[-...]".to_string());
    ids
}

/// A few smooth points of `curve` on component 0 that avoid all branch points.
pub fn sample_points(curve: &CurveModel, count: usize) -> Vec<Point> {
    let candidates = [
        frac(2, 1),
        frac(-2, 1),
        frac(1, 2),
        frac(3, 1),
        frac(-1, 3),
        frac(5, 2),
        frac(-3, 4),
        frac(7, 3),
    ];
    candidates
        .into_iter()
        .map(Point::Finite)
        .chain(std::iter::once(Point::Infinity))
        .filter(|p| curve.is_smooth_point(0, p))
        .take(count)
        .collect()
}
