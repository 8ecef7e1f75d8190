//! The JSON interchange form of a curve.

use serde::{Deserialize, Serialize};

use super::{Branch, CurveModel, MarkedPoint, Point, SingularPoint};
use crate::error::{CurveError, ParseError};
use crate::rational::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchSpec {
    pub component: String,
    pub point: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SingularitySpec {
    pub branches: Vec<BranchSpec>,
    pub jet_order: usize,
    pub conductor: usize,
    pub algebra_basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarkedSpec {
    pub component: String,
    pub point: String,
    #[serde(default = "one")]
    pub tangent: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
}

fn one() -> String {
    "1".to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub components: Vec<String>,
    #[serde(default)]
    pub singularities: Vec<SingularitySpec>,
    #[serde(default)]
    pub marked: Vec<MarkedSpec>,
}

impl CurveSpec {
    /// Converts literals to exact values; structural checks happen in validation.
    pub fn to_model(&self) -> Result<CurveModel, CurveError> {
        let comp = |label: &str| {
            self.components
                .iter()
                .position(|c| c == label)
                .ok_or_else(|| CurveError::UnknownComponent(label.to_string()))
        };
        let mut singularities = Vec::new();
        for s in &self.singularities {
            let branches = s
                .branches
                .iter()
                .map(|b| {
                    Ok(Branch {
                        component: comp(&b.component)?,
                        point: Point::parse(&b.point)?,
                    })
                })
                .collect::<Result<Vec<_>, CurveError>>()?;
            let algebra_basis = s
                .algebra_basis
                .iter()
                .map(|v| v.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>, ParseError>>())
                .collect::<Result<Vec<_>, ParseError>>()?;
            singularities.push(SingularPoint {
                branches,
                jet_order: s.jet_order,
                conductor: s.conductor,
                algebra_basis,
            });
        }
        let marked = self
            .marked
            .iter()
            .map(|m| {
                Ok(MarkedPoint {
                    component: comp(&m.component)?,
                    point: Point::parse(&m.point)?,
                    tangent: parse_rational(&m.tangent)?,
                    weight: m.weight,
                })
            })
            .collect::<Result<Vec<_>, CurveError>>()?;
        Ok(CurveModel {
            components: self.components.clone(),
            singularities,
            marked,
        })
    }

    pub fn from_model(curve: &CurveModel) -> CurveSpec {
        let label = |c: usize| curve.components[c].clone();
        CurveSpec {
            components: curve.components.clone(),
            singularities: curve
                .singularities
                .iter()
                .map(|s| SingularitySpec {
                    branches: s
                        .branches
                        .iter()
                        .map(|b| BranchSpec {
                            component: label(b.component),
                            point: b.point.literal(),
                        })
                        .collect(),
                    jet_order: s.jet_order,
                    conductor: s.conductor,
                    algebra_basis: s
                        .algebra_basis
                        .iter()
                        .map(|v| v.iter().map(format_rational).collect())
                        .collect(),
                })
                .collect(),
            marked: curve
                .marked
                .iter()
                .map(|m| MarkedSpec {
                    component: label(m.component),
                    point: m.point.literal(),
                    tangent: format_rational(&m.tangent),
                    weight: m.weight,
                })
                .collect(),
        }
    }

    /// Canonical JSON text: sorted keys, two-space indentation.
    pub fn to_json_string(&self) -> String {
        let value = serde_json::to_value(self).expect("curve spec serializes");
        serde_json::to_string_pretty(&value).expect("curve spec serializes")
    }
}
