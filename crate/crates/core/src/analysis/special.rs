use std::collections::HashMap;

use crate::path::{Direction, GroundedPath, PathError, Point, Word};
use crate::window::Window;

use super::{ray_in_window, AnalysisError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialPoint {
    pub index: usize,
    /// Suffix of the period leading from this vertex back onto a period
    /// boundary of the shifted ray.
    pub q: Word,
}

/// Special points of `path` with respect to `anchor.p^ω`.
///
/// The ray is shifted north one step at a time until it meets the rest of
/// the path. If the meeting runs to the window boundary every meeting point
/// is returned and the extraction ends; otherwise the ray is re-anchored
/// just past the last meeting point and the search resumes from there.
/// The search gives up when no shift within `4r + 4` meets the path.
pub fn special_points(
    path: &GroundedPath,
    anchor: Point,
    p: &Word,
    window: Window,
) -> Result<Vec<SpecialPoint>, AnalysisError> {
    if p.is_empty() {
        return Err(PathError::EmptyWord.into());
    }
    if p.displacement().is_zero() {
        return Err(PathError::ZeroPeriodDisplacement.into());
    }
    let index: HashMap<Point, usize> = path
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (*v, i))
        .collect();
    let empty = Word::empty();
    if let Some((_, hit)) = ray_in_window(anchor, &empty, p, &window)
        .into_iter()
        .find(|(_, v)| index.contains_key(v))
    {
        return Err(AnalysisError::PathIntersectsForbidden(hit));
    }

    let bound = 4 * window.radius() + 4;
    let mut out = Vec::new();
    let mut base = anchor;
    let mut from = 0usize;
    'outer: loop {
        for k in 1..=bound {
            let shifted = base + Direction::N.unit() * k;
            let mut hits: Vec<(usize, usize)> = ray_in_window(shifted, &empty, p, &window)
                .into_iter()
                .filter_map(|(s, v)| index.get(&v).map(|&i| (i, s)))
                .filter(|&(i, _)| i >= from)
                .collect();
            if hits.is_empty() {
                continue;
            }
            hits.sort_unstable();
            for &(i, s) in &hits {
                let t = s % p.len();
                let q = if t == 0 {
                    Word::empty()
                } else {
                    p.suffix_from(t)
                };
                out.push(SpecialPoint { index: i, q });
            }
            let last = *hits.last().expect("nonempty");
            let end = path.vertices[last.0];
            if window.on_boundary(end) || last.0 + 1 >= path.vertices.len() {
                break 'outer;
            }
            let q = &out.last().expect("just pushed").q;
            base = end + q.displacement();
            from = last.0 + 1;
            continue 'outer;
        }
        break;
    }
    Ok(out)
}
