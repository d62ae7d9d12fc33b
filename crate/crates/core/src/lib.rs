//! Shortest odd hole detection.
//!
//! [`shortest_odd_hole`] runs four detectors and returns the shortest hole
//! any of them records. The [`oracle`] module holds an exhaustive search and
//! instance generators used to check it.
//!
//! ```
//! use oddhole::{shortest_odd_hole, Graph};
//!
//! let c7 = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
//! let result = shortest_odd_hole(&c7).unwrap();
//! assert_eq!(result.min_length(), Some(7));
//! ```

pub mod cleaning;
pub mod detect;
pub mod error;
pub mod graph;
pub mod io;
pub mod locator;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod structure;

pub use detect::{find_5hole, find_jewelled, Detection, DetectorTag};
pub use error::{Error, Result};
pub use graph::{Graph, Hole, Path, Vertex, VertexSet};
pub use locator::{find_great_pyramid, locate_from_tuple, LocatorMode, Tuple12};
pub use pipeline::{shortest_odd_hole, shortest_odd_hole_with, PipelineConfig, PipelineResult};
