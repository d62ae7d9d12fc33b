//! The top-level search: run the four detectors and keep the shortest hole.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cleaning::no_great_pyramid_solver;
use crate::detect::{find_5hole, find_jewelled, Detection, DetectorTag};
use crate::error::{Error, Result};
use crate::graph::{Graph, Hole};
use crate::locator::{find_great_pyramid_bounded, LocatorMode};

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineConfig {
    pub locator: LocatorMode,
    /// Stop after a 5-hole; nothing shorter exists.
    pub short_circuit: bool,
    /// When full enumeration is refused by its guard, return the other
    /// detectors' answer instead of an error.
    pub allow_partial: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig { locator: LocatorMode::full_from_env(), short_circuit: true, allow_partial: false }
    }
}

/// Wall time of one detector.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub detector: DetectorTag,
    pub millis: f64,
    /// False when the detector was skipped or refused.
    pub ran: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineResult {
    pub detection: Detection,
    pub timings: Vec<Timing>,
    /// Set when the great-pyramid enumeration was refused and
    /// `allow_partial` let the run continue.
    pub guard_refusal: Option<String>,
}

impl PipelineResult {
    pub fn has_odd_hole(&self) -> bool {
        self.detection.is_found()
    }

    pub fn min_length(&self) -> Option<usize> {
        self.detection.length()
    }

    pub fn hole(&self) -> Option<&Hole> {
        self.detection.hole()
    }

    pub fn detector(&self) -> Option<DetectorTag> {
        self.detection.detector()
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1000.0)
}

/// Shortest odd hole with the default configuration.
pub fn shortest_odd_hole(g: &Graph) -> Result<PipelineResult> {
    shortest_odd_hole_with(g, &PipelineConfig::default())
}

/// Runs the 5-hole, jewel, no-great-pyramid and great-pyramid detectors in
/// that order and returns the minimum under (length, canonical sequence).
pub fn shortest_odd_hole_with(g: &Graph, cfg: &PipelineConfig) -> Result<PipelineResult> {
    let mut timings = Vec::new();
    let (five, ms) = timed(|| find_5hole(g));
    timings.push(Timing { detector: DetectorTag::FiveHole, millis: ms, ran: true });
    if cfg.short_circuit && five.is_found() {
        for d in [DetectorTag::Jewel, DetectorTag::NoGreatPyramid, DetectorTag::GreatPyramid] {
            timings.push(Timing { detector: d, millis: 0.0, ran: false });
        }
        return Ok(PipelineResult { detection: five, timings, guard_refusal: None });
    }
    let mut best = five;

    let (jewel, ms) = timed(|| find_jewelled(g));
    timings.push(Timing { detector: DetectorTag::Jewel, millis: ms, ran: true });
    best = best.min(jewel);

    let (clean, ms) = timed(|| no_great_pyramid_solver(g));
    timings.push(Timing { detector: DetectorTag::NoGreatPyramid, millis: ms, ran: true });
    best = best.min(clean);

    let bound = best.length().unwrap_or(usize::MAX);
    let (pyr, ms) = timed(|| find_great_pyramid_bounded(g, &cfg.locator, bound));
    let mut guard_refusal = None;
    match pyr {
        Ok(d) => {
            timings.push(Timing { detector: DetectorTag::GreatPyramid, millis: ms, ran: true });
            best = best.min(d);
        }
        Err(e @ Error::SizeGuard { .. }) if cfg.allow_partial => {
            timings.push(Timing { detector: DetectorTag::GreatPyramid, millis: ms, ran: false });
            guard_refusal = Some(e.to_string());
        }
        Err(e) => return Err(e),
    }
    Ok(PipelineResult { detection: best, timings, guard_refusal })
}
