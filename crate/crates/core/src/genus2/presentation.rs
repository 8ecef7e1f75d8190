//! Presentations `h² = p₁k + q₁h + c₁`, `hk = p₂k + q₂h + c₂`, `k² = p₃k + q₃h + c₃`
//! with coefficients polynomials in `f`, and the gauge fixing that brings them
//! to the normal form `p₁ = f`, `p₂ = −q₁` constant, `p₃ = 0`.

use std::sync::Arc;

use serde_json::{json, Value};

use super::{khf_vars, G2Params, G2Relations};
use crate::error::Genus2Error;
use crate::poly::{MonomialOrder, MultiPoly, Variable};
use crate::rational::{format_rational, frac, Rational};
use crate::ring::Ring;

/// A polynomial in the single variable `f`.
pub type UniPoly = MultiPoly<Rational>;

pub fn f_vars() -> Arc<[Variable]> {
    Variable::list(&[("f", 3)])
}

/// `Σ coeffs[j] f^j`
pub fn upoly(coeffs: &[Rational]) -> UniPoly {
    let vars = f_vars();
    MultiPoly::from_terms(&vars, coeffs.iter().enumerate().map(|(j, c)| (vec![j as u32], c.clone())))
}

pub fn ucoeff(p: &UniPoly, j: u32) -> Rational {
    p.coeff(&[j])
}

/// Degree in `f`, `None` for zero.
pub fn udeg(p: &UniPoly) -> Option<u32> {
    p.terms().map(|(e, _)| e.first().copied().unwrap_or(0)).max()
}

fn uconst(c: &Rational) -> UniPoly {
    MultiPoly::constant(&f_vars(), c.clone())
}

fn uf() -> UniPoly {
    MultiPoly::var(&f_vars(), 0)
}

fn dprime(p: &UniPoly) -> Rational {
    ucoeff(p, 1)
}

/// `a + b·h + c·k` with `a, b, c ∈ ℚ[f]`.
type Triple = [UniPoly; 3];

fn tadd(x: &Triple, y: &Triple) -> Triple {
    std::array::from_fn(|i| x[i].clone() + &y[i])
}

fn tscale(x: &Triple, s: &UniPoly) -> Triple {
    std::array::from_fn(|i| x[i].clone() * s)
}

/// The gauge `h̃ = h + A(f)`, `k̃ = k + B·h + C(f)`, followed by `f̃ = f + shift`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gauge {
    pub a: UniPoly,
    pub b: Rational,
    pub c: UniPoly,
    pub shift: Rational,
}

impl Gauge {
    pub fn to_json(&self) -> Value {
        let order = MonomialOrder::for_variables(&f_vars());
        json!({
            "A": self.a.display_with(&order),
            "B": format_rational(&self.b),
            "C": self.c.display_with(&order),
            "f_shift": format_rational(&self.shift),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub p: [UniPoly; 3],
    pub q: [UniPoly; 3],
    pub c: [UniPoly; 3],
}

impl Presentation {
    /// The normalized presentation of the family at `params`.
    pub fn from_params(params: &G2Params<Rational>) -> Presentation {
        let q1 = uconst(&params.q1);
        let q2 = upoly(&[params.q20.clone(), params.q21.clone()]);
        let q3 = upoly(&[params.q30.clone(), params.q31.clone(), Rational::one()]);
        let f = uf();
        let two = uconst(&frac(2, 1));
        Presentation {
            p: [f.clone(), -q1.clone(), UniPoly::zero_in(&f_vars())],
            c: [
                two.clone() * &q1 * &q1 + &(f.clone() * &q2),
                f.clone() * &q3 + &(q1.clone() * &q2),
                q2.clone() * &q2 - &(two * &q1 * &q3),
            ],
            q: [q1, q2, q3],
        }
    }

    /// Degree bounds and monicity of a general presentation.
    pub fn shape_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut bound = |name: &str, p: &UniPoly, max: u32, monic_deg: Option<u32>| {
            match (udeg(p), monic_deg) {
                (d, Some(m)) if d != Some(m) || !ucoeff(p, m).is_one() => {
                    out.push(format!("{name} must be monic of degree {m}"))
                }
                (Some(d), None) if d > max => out.push(format!("{name} has degree {d} > {max}")),
                _ => {}
            }
        };
        bound("p1", &self.p[0], 1, Some(1));
        bound("p2", &self.p[1], 1, None);
        bound("p3", &self.p[2], 1, None);
        bound("q1", &self.q[0], 1, None);
        bound("q2", &self.q[1], 1, None);
        bound("q3", &self.q[2], 2, Some(2));
        bound("c1", &self.c[0], 2, None);
        bound("c2", &self.c[1], 3, Some(3));
        bound("c3", &self.c[2], 3, None);
        out
    }

    /// `p₁ = f`, `p₃ = 0`, `p₂ = −q₁` and both constant.
    pub fn is_normalized(&self) -> bool {
        self.p[0] == uf()
            && self.p[2].is_zero()
            && udeg(&self.q[0]).unwrap_or(0) == 0
            && self.p[1] == -self.q[0].clone()
    }

    /// The five parameters of a normalized presentation.
    pub fn params(&self) -> Result<G2Params<Rational>, Genus2Error> {
        if !self.is_normalized() {
            return Err(Genus2Error::Presentation("not in normal form".into()));
        }
        if let Some(v) = self.shape_violations().first() {
            return Err(Genus2Error::Presentation(v.clone()));
        }
        Ok(G2Params {
            q1: ucoeff(&self.q[0], 0),
            q20: ucoeff(&self.q[1], 0),
            q21: ucoeff(&self.q[1], 1),
            q30: ucoeff(&self.q[2], 0),
            q31: ucoeff(&self.q[2], 1),
        })
    }

    /// The relations `h² − p₁k − q₁h − c₁` etc. over `(k, h, f)`.
    pub fn relations(&self) -> G2Relations<Rational> {
        let vars = khf_vars();
        let f = MultiPoly::var(&vars, 2);
        let lift = |p: &UniPoly| p.eval(std::slice::from_ref(&f), |c| MultiPoly::constant(&vars, c.clone()));
        let (k, h) = (MultiPoly::var(&vars, 0), MultiPoly::var(&vars, 1));
        let lhs = [h.clone() * &h, h.clone() * &k, k.clone() * &k];
        G2Relations {
            rels: std::array::from_fn(|i| {
                lhs[i].clone() - &(lift(&self.p[i]) * &k) - &(lift(&self.q[i]) * &h) - &lift(&self.c[i])
            }),
        }
    }

    /// Product of `a + bh + ck` elements, reducing `h², hk, k²` with the presentation.
    fn product(&self, x: &Triple, y: &Triple) -> Triple {
        let zero = UniPoly::zero_in(&f_vars());
        let rel = |i: usize| -> Triple { [self.c[i].clone(), self.q[i].clone(), self.p[i].clone()] };
        let mut out: Triple = [
            x[0].clone() * &y[0],
            x[0].clone() * &y[1] + &(x[1].clone() * &y[0]),
            x[0].clone() * &y[2] + &(x[2].clone() * &y[0]),
        ];
        let hh = x[1].clone() * &y[1];
        let hk = x[1].clone() * &y[2] + &(x[2].clone() * &y[1]);
        let kk = x[2].clone() * &y[2];
        for (coef, i) in [(hh, 0), (hk, 1), (kk, 2)] {
            if coef != zero {
                out = tadd(&out, &tscale(&rel(i), &coef));
            }
        }
        out
    }

    /// The presentation in `h̃ = h + A`, `k̃ = k + B h + C`.
    pub fn transformed(&self, a: &UniPoly, b: &Rational, c: &UniPoly) -> Presentation {
        let one = uconst(&Rational::one());
        let zero = UniPoly::zero_in(&f_vars());
        let bb = uconst(b);
        let ht: Triple = [a.clone(), one.clone(), zero.clone()];
        let kt: Triple = [c.clone(), bb.clone(), one];
        // a + b h + c k = (a − bA + c(AB − C)) + (b − cB) h̃ + c k̃
        let e = a.clone() * &bb - c;
        let to_new = |t: Triple| -> Triple {
            [
                t[0].clone() - &(t[1].clone() * a) + &(t[2].clone() * &e),
                t[1].clone() - &(t[2].clone() * &bb),
                t[2].clone(),
            ]
        };
        let prods = [self.product(&ht, &ht), self.product(&ht, &kt), self.product(&kt, &kt)];
        let [r1, r2, r3] = prods.map(to_new);
        Presentation {
            p: [r1[2].clone(), r2[2].clone(), r3[2].clone()],
            q: [r1[1].clone(), r2[1].clone(), r3[1].clone()],
            c: [r1[0].clone(), r2[0].clone(), r3[0].clone()],
        }
    }

    /// The presentation in `f̃ = f + s`.
    pub fn shifted(&self, s: &Rational) -> Presentation {
        let sub = uf() - &uconst(s);
        let map = |p: &UniPoly| p.eval(std::slice::from_ref(&sub), uconst);
        Presentation {
            p: self.p.each_ref().map(map),
            q: self.q.each_ref().map(map),
            c: self.c.each_ref().map(map),
        }
    }

    /// The gauge with `A = −(q₁+p₂)/3`, `B = (q₁′ − 2p₂′)/3`, `C = −p₃/2 − B²p₁/2 − Bp₂`.
    pub fn normalizing_gauge(&self) -> Gauge {
        let third = frac(1, 3);
        let half = frac(1, 2);
        let a = (self.q[0].clone() + &self.p[1]).scale(&-third.clone());
        let b = (dprime(&self.q[0]) - dprime(&self.p[1]) * frac(2, 1)) * &third;
        let c = self.p[2].scale(&-half.clone())
            - &self.p[0].scale(&(&b * &b * &half))
            - &self.p[1].scale(&b);
        let after = self.transformed(&a, &b, &c);
        Gauge {
            a,
            b,
            c,
            shift: ucoeff(&after.p[0], 0),
        }
    }

    pub fn apply(&self, g: &Gauge) -> Presentation {
        self.transformed(&g.a, &g.b, &g.c).shifted(&g.shift)
    }

    pub fn normalize(&self) -> (Presentation, Gauge) {
        let g = self.normalizing_gauge();
        (self.apply(&g), g)
    }

    pub fn to_json(&self) -> Value {
        let order = MonomialOrder::for_variables(&f_vars());
        let show = |ps: &[UniPoly; 3]| ps.iter().map(|p| p.display_with(&order)).collect::<Vec<_>>();
        json!({ "p": show(&self.p), "q": show(&self.q), "c": show(&self.c) })
    }
}
