use std::collections::{HashSet, VecDeque};

use crate::path::{Direction, GroundedPath, Point, Ray, Word};
use crate::tas::{Assembly, BindingGraph};
use crate::window::Window;

use super::{ray_in_window, AnalysisError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightmostPath {
    pub path: GroundedPath,
    /// No direction could be continued before the window boundary.
    pub stuck: bool,
}

/// Walk from `start` through the binding graph, always taking the rightmost
/// step (first step judged as if arriving northwards) from which the window
/// boundary is still reachable without touching the forbidden ray
/// `forbidden_at.forbidden` or the walk so far.
pub fn rightmost_avoiding_path(
    a: &Assembly,
    start: Point,
    forbidden_at: Point,
    forbidden: &Ray,
    window: Window,
) -> Result<RightmostPath, AnalysisError> {
    if !a.is_occupied(start) {
        return Err(AnalysisError::StartUnoccupied(start));
    }
    let out = forbidden.outward();
    let blocked: HashSet<Point> =
        ray_in_window(forbidden_at, out.transient(), out.period(), &window)
            .into_iter()
            .map(|(_, p)| p)
            .collect();
    let graph = a.binding_graph();
    let mut visited = HashSet::from([start]);
    let mut word = Word::empty();
    let mut cur = start;
    let mut heading = Direction::N;
    let mut stuck = false;
    while !window.on_boundary(cur) {
        let next = [
            heading.rotate_cw(),
            heading,
            heading.rotate_ccw(),
            heading.opposite(),
        ]
        .into_iter()
        .find(|&d| {
            let n = cur.step(d);
            window.contains(n)
                && graph.has_edge(cur, n)
                && !visited.contains(&n)
                && !blocked.contains(&n)
                && escapes(&graph, n, &window, |p| {
                    visited.contains(&p) || blocked.contains(&p)
                })
        });
        let Some(d) = next else {
            stuck = true;
            break;
        };
        cur = cur.step(d);
        visited.insert(cur);
        word.push(d);
        heading = d;
    }
    Ok(RightmostPath {
        path: GroundedPath::new(start, word),
        stuck,
    })
}

/// Whether `from` reaches the window boundary inside the graph while
/// avoiding `avoid`.
fn escapes(g: &BindingGraph, from: Point, window: &Window, avoid: impl Fn(Point) -> bool) -> bool {
    let mut seen = HashSet::from([from]);
    let mut q = VecDeque::from([from]);
    while let Some(u) = q.pop_front() {
        if window.on_boundary(u) {
            return true;
        }
        for v in g.neighbors(u) {
            if window.contains(v) && !avoid(v) && seen.insert(v) {
                q.push_back(v);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::word;
    use crate::tas::{grow_max, Tas};

    fn east() -> Ray {
        Ray::forward(word(""), word("E")).unwrap()
    }

    #[test]
    fn comb_follows_the_row() {
        let w = Window::new(6).unwrap();
        let a = grow_max(&Tas::comb(), w).assembly;
        let r =
            rightmost_avoiding_path(&a, Point::new(0, -1), Point::new(0, -5), &east(), w).unwrap();
        assert!(!r.stuck);
        assert_eq!(r.path.word, word("EEEEEE"));
        assert_eq!(r.path.end(), Point::new(6, -1));
    }

    #[test]
    fn unoccupied_start() {
        let w = Window::new(3).unwrap();
        let a = grow_max(&Tas::comb(), w).assembly;
        let e = rightmost_avoiding_path(&a, Point::new(1, 1), Point::new(0, -3), &east(), w);
        assert_eq!(e, Err(AnalysisError::StartUnoccupied(Point::new(1, 1))));
    }

    #[test]
    fn blockade_leaves_it_stuck() {
        // the ray runs along the row, cutting the seed off from everything
        let w = Window::new(3).unwrap();
        let a = grow_max(&Tas::comb(), w).assembly;
        let west = Ray::forward(word(""), word("W")).unwrap();
        let r = rightmost_avoiding_path(&a, Point::ORIGIN, Point::new(3, -1), &west, w).unwrap();
        assert!(r.stuck);
        assert!(r.path.is_empty());
    }
}
