//! JSON shapes shared by the command-line tool and the examples: the run
//! report, witness files, and the sidecar written next to generated graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::detect::{Detection, DetectorTag};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::locator::Tuple12;
use crate::oracle::{Instance, InstanceSpec, Planted, PlantedArcs};
use crate::pipeline::PipelineResult;
use crate::structure::{check_jewel, check_odd_hole, check_pyramid, Defect, JewelWitness, PyramidWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSize {
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub has_odd_hole: bool,
    pub min_length: Option<usize>,
    pub hole: Option<Vec<Vertex>>,
    pub detector: Option<DetectorTag>,
    /// Milliseconds per detector that ran.
    pub timings: BTreeMap<DetectorTag, f64>,
    pub graph: GraphSize,
}

impl Report {
    pub fn from_detection(g: &Graph, d: &Detection, timings: BTreeMap<DetectorTag, f64>) -> Self {
        Report {
            has_odd_hole: d.is_found(),
            min_length: d.length(),
            hole: d.hole().map(|h| h.vertices().to_vec()),
            detector: d.detector(),
            timings,
            graph: GraphSize { n: g.n(), m: g.m() },
        }
    }

    pub fn from_pipeline(g: &Graph, r: &PipelineResult) -> Self {
        let timings = r.timings.iter().filter(|t| t.ran).map(|t| (t.detector, t.millis)).collect();
        Self::from_detection(g, &r.detection, timings)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-readable form carrying the same numbers as the JSON.
    pub fn to_text(&self) -> String {
        let mut out = format!("graph: n={} m={}\n", self.graph.n, self.graph.m);
        match (&self.min_length, &self.hole, &self.detector) {
            (Some(len), Some(hole), Some(det)) => {
                let vs: Vec<String> = hole.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("odd hole: yes\nmin length: {len}\nhole: {}\ndetector: {det}\n", vs.join(" ")));
            }
            _ => out.push_str("odd hole: no\n"),
        }
        for (d, ms) in &self.timings {
            out.push_str(&format!("time {d}: {ms:.3} ms\n"));
        }
        out
    }
}

/// A claimed configuration, checked by `check-witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Pyramid(PyramidWitness),
    Jewel(JewelWitness),
    Hole { hole: Vec<Vertex> },
}

impl Witness {
    pub fn check(&self, g: &Graph) -> Result<(), Defect> {
        match self {
            Witness::Pyramid(w) => check_pyramid(g, w),
            Witness::Jewel(w) => check_jewel(g, w),
            Witness::Hole { hole } => check_odd_hole(g, hole),
        }
    }

    /// Reads either a bare witness or a sidecar carrying one.
    pub fn from_json(text: &str) -> Result<Witness> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        let inner = if value.get("kind").is_some() {
            value
        } else {
            match value.get("witness") {
                Some(w) if !w.is_null() => w.clone(),
                _ => {
                    return Err(Error::Schema("expected a witness with a \"kind\" field, or a sidecar with one".into()))
                }
            }
        };
        serde_json::from_value(inner).map_err(|e| Error::Schema(e.to_string()))
    }
}

/// Description of a generated instance, written beside its edge list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub spec: InstanceSpec,
    pub n: usize,
    pub m: usize,
    pub expected_min: Option<usize>,
    pub witness: Option<Witness>,
    /// Locator tuple under which the planted pyramid is rebuilt.
    pub tuple: Option<Tuple12>,
    pub arcs: Option<PlantedArcs>,
}

impl Sidecar {
    pub fn from_instance(inst: &Instance) -> Self {
        let (witness, tuple, arcs) = match &inst.planted {
            Some(Planted::Pyramid { witness, tuple, arcs }) => {
                (Some(Witness::Pyramid(witness.clone())), Some(*tuple), Some(*arcs))
            }
            Some(Planted::Jewel { witness }) => (Some(Witness::Jewel(witness.clone())), None, None),
            Some(Planted::Hole { hole }) => (Some(Witness::Hole { hole: hole.clone() }), None, None),
            None => (None, None, None),
        };
        Sidecar {
            spec: inst.spec.clone(),
            n: inst.graph.n(),
            m: inst.graph.m(),
            expected_min: inst.expected_min,
            witness,
            tuple,
            arcs,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sidecar serializes")
    }

    pub fn from_json(text: &str) -> Result<Sidecar> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }
}
