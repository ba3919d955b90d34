//! JSON formats for matroids, fans, weights, and flags.

use crate::bits::{self, Set};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::matroid::{FlagOfFlats, Matroid};
use crate::weights::{MinkowskiWeight, SimplicialFan};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::path::Path;

/// Graph input: vertices `0..vertices` and edges as vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

/// The three accepted matroid encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidSpec {
    Bases {
        ground: usize,
        bases: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Graph {
        graph: GraphSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    Uniform {
        uniform: [usize; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSpec::Bases { ground, bases, name } => {
                let sets = bases
                    .iter()
                    .map(|b| {
                        if let Some(&e) = b.iter().find(|&&e| e >= *ground || e >= 63) {
                            return Err(Error::ElementOutOfRange(e));
                        }
                        Ok(bits::from_elements(b.iter().copied()))
                    })
                    .collect::<Result<Vec<Set>>>()?;
                let m = Matroid::from_bases(*ground, &sets)?;
                Ok(with_name(m, name))
            }
            MatroidSpec::Graph { graph, name } => {
                let edges: Vec<(usize, usize)> = graph.edges.iter().map(|e| (e[0], e[1])).collect();
                Ok(with_name(Matroid::from_graph(graph.vertices, &edges)?, name))
            }
            MatroidSpec::Uniform { uniform, name } => {
                let m = Matroid::uniform(uniform[0], uniform[1])?;
                Ok(match name {
                    Some(_) => with_name(m, name),
                    None => m,
                })
            }
        }
    }
}

fn with_name(m: Matroid, name: &Option<String>) -> Matroid {
    match name {
        Some(n) => m.named(n.clone()),
        None => m,
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let spec: MatroidSpec = serde_json::from_str(text).map_err(|e| Error::Parse(format!("matroid JSON: {e}")))?;
    spec.build()
}

pub fn read_matroid(path: &Path) -> Result<Matroid> {
    parse_matroid(&read_text(path)?)
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// `{"ground": n, "bases": [...]}` with an optional name.
pub fn matroid_to_json(m: &Matroid) -> Value {
    let mut v = json!({
        "ground": m.ground_size(),
        "bases": m.bases().iter().map(|&b| set_json(b)).collect::<Vec<_>>(),
    });
    if let Some(name) = m.name() {
        v["name"] = json!(name);
    }
    v
}

pub fn set_json(s: Set) -> Value {
    json!(bits::elements(s).collect::<Vec<_>>())
}

pub fn flag_json(f: &FlagOfFlats) -> Value {
    json!(f.flats.iter().map(|&s| set_json(s)).collect::<Vec<_>>())
}

/// Fan JSON: `{"rank", "rays", "cones", "weights"?}`, weights parallel to cones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FanSpec {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<Value>>,
}

impl FanSpec {
    pub fn build(&self) -> Result<SimplicialFan> {
        SimplicialFan::new(self.rank, self.rays.clone(), self.cones.clone())
    }

    /// The listed weights on `fan`, or the fundamental weight when none are given.
    pub fn weight(&self, fan: &SimplicialFan) -> Result<MinkowskiWeight> {
        let Some(values) = &self.weights else { return Ok(MinkowskiWeight::fundamental(fan)) };
        if values.len() != self.cones.len() {
            return Err(Error::Parse(format!("{} weights for {} cones", values.len(), self.cones.len())));
        }
        let k = self.cones.first().map_or(0, |c| c.len());
        if self.cones.iter().any(|c| c.len() != k) {
            return Err(Error::Parse("weighted cones must all have the same dimension".into()));
        }
        let mut w = MinkowskiWeight::zero(fan, k);
        for (cone, v) in self.cones.iter().zip(values) {
            let mut c: Vec<u32> = cone.iter().map(|&i| i as u32).collect();
            c.sort_unstable();
            let i = fan.cone_index(&c).ok_or_else(|| Error::ConeNotInFan(cone.clone()))?;
            w.values[i] = parse_rational(v)?;
        }
        Ok(w)
    }

    /// Maximal cones of `fan` with no weights.
    pub fn from_fan(fan: &SimplicialFan) -> Self {
        FanSpec {
            rank: fan.lattice_rank(),
            rays: fan.rays().to_vec(),
            cones: fan.maximal_cones().into_iter().map(|c| c.into_iter().map(|i| i as usize).collect()).collect(),
            weights: None,
        }
    }
}

pub fn parse_fan(text: &str) -> Result<FanSpec> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("fan JSON: {e}")))
}

/// An integer, or a string `"p"` or `"p/q"`.
pub fn parse_rational(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|x| Q::from_integer(x as i128))
            .ok_or_else(|| Error::Parse(format!("weight {n} is not an integer"))),
        Value::String(s) => parse_rational_str(s),
        other => Err(Error::Parse(format!("weight {other} is not a rational"))),
    }
}

pub fn parse_rational_str(s: &str) -> Result<Q> {
    let bad = || Error::Parse(format!("'{s}' is not a rational number"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim().parse::<i128>().map_err(|_| bad())?, q.trim().parse::<i128>().map_err(|_| bad())?),
        None => (s.trim().parse::<i128>().map_err(|_| bad())?, 1),
    };
    if q == 0 {
        return Err(bad());
    }
    Ok(Q::new(p, q))
}

/// A rational as an integer when possible, otherwise as `"p/q"`.
pub fn rational_json(v: &Q) -> Value {
    if v.is_integer() {
        match i64::try_from(*v.numer()) {
            Ok(x) => json!(x),
            Err(_) => json!(v.to_string()),
        }
    } else {
        json!(v.to_string())
    }
}
