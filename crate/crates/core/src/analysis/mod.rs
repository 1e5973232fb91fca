//! Non-causal sets, off-the-wall paths, rightmost paths, special points and
//! the search for ultimately periodic assembly paths.

mod noncausal;
mod offwall;
mod periodic;
mod rightmost;
mod special;

use thiserror::Error;

use crate::cogrow::CoGrowError;
use crate::path::{PathError, Point, Word};
use crate::regions::{gone_forever, RegionError};
use crate::tas::TasError;
use crate::window::{Window, WindowError};

pub use noncausal::{non_causal, verified_extend};
pub use offwall::{
    combine_off_the_wall, ew_index_pairs, find_off_the_wall, off_the_wall_record,
    points_of_interest, Combination, OffTheWallRecord,
};
pub use periodic::{find_periodic_assembly_path, PeriodicCertificate, PeriodicOutcome};
pub use rightmost::{rightmost_avoiding_path, RightmostPath};
pub use special::{special_points, SpecialPoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("site {0} is unoccupied")]
    SiteUnoccupied(Point),
    #[error("start {0} is unoccupied")]
    StartUnoccupied(Point),
    #[error("site {0} is not in the non-causal set")]
    NonCausalViolation(Point),
    #[error("no tile binds at {0}")]
    GlueMismatch(Point),
    #[error("extension disagrees with maximal growth at {0}")]
    ExtensionDisagrees(Point),
    #[error("widths differ: {0} vs {1}")]
    WidthMismatch(i64, i64),
    #[error("wall valuations differ")]
    ValuationMismatch,
    #[error("co-grow did not close the excursion: {0}")]
    CombinationFailed(String),
    #[error("path meets the forbidden ray at {0}")]
    PathIntersectsForbidden(Point),
    #[error("not confluent: site {site} admits {first} and {second}")]
    NotConfluent {
        site: Point,
        first: String,
        second: String,
    },
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    CoGrow(#[from] CoGrowError),
    #[error(transparent)]
    Tas(#[from] TasError),
    #[error(transparent)]
    Window(#[from] WindowError),
}

/// Vertices of `anchor.m.p^ω` inside `window`, with their step counts,
/// walked until the ray can never come back.
pub(crate) fn ray_in_window(
    anchor: Point,
    m: &Word,
    p: &Word,
    window: &Window,
) -> Vec<(usize, Point)> {
    let mut out = Vec::new();
    let mut pos = anchor;
    if window.contains(pos) {
        out.push((0, pos));
    }
    let steps = m
        .as_slice()
        .iter()
        .chain(p.as_slice().iter().cycle())
        .copied();
    for (k, d) in steps.enumerate() {
        if k >= m.len() && (k - m.len()).is_multiple_of(p.len()) && gone_forever(pos, p, window) {
            break;
        }
        pos = pos.step(d);
        if window.contains(pos) {
            out.push((k + 1, pos));
        }
    }
    out
}
