//! Bounded exhaustive search for the rank-two specifying data of smooth Fano
//! fourfolds with a spread hypersurface Cox ring.
//!
//! The search scans all counter-clockwise normalized degree matrices and
//! relation degrees within configurable bounds, keeps those passing the full
//! certification pipeline, and returns one canonical representative per
//! coordinate-change orbit.

mod search;

pub use grading_core::{product_split, ProductSplit};
pub use search::{
    enumerate_candidates, enumerate_candidates_with, scan_with_statistics, ScanStats,
    SearchBounds, SearchOptions,
};
