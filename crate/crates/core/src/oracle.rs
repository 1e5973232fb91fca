//! Independent brute-force reference implementations used to cross-check the
//! main algorithms.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::path::{Direction, Point, Vector2, Word};
use crate::regions::{BiInfinitePath, Side};
use crate::window::{Window, WindowGrid};

/// `m^k` grounds simply for every `k ≤ max_k`.
pub fn powers_simple(m: &Word, max_k: usize) -> bool {
    (1..=max_k).all(|k| m.repeat(k).is_free_path())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityError {
    #[error("tails run parallel and interleave; far-field side is ambiguous")]
    AmbiguousFarField,
    #[error("both tails point along every axis direction")]
    NoAxis,
}

/// Side of every window point by crossing parity.
///
/// A horizontal ray is cast from each point at half-integer height, counting
/// vertical path edges it crosses. The path is closed at infinity by a
/// counter-clockwise arc from the forward asymptote to the backward one, so
/// an odd total puts the point in the left region.
pub fn parity_sides(
    path: &BiInfinitePath,
    window: Window,
) -> Result<WindowGrid<Side>, ParityError> {
    let v_f = path.forward().period().displacement();
    let v_b = -path.backward().period().displacement();
    let along = |v: Vector2, u: Vector2| v.cross(u) == 0 && v.dot(u) > 0;
    // casting toward d means rotating d onto E
    let (turns, _) = [Direction::E, Direction::N, Direction::W, Direction::S]
        .into_iter()
        .enumerate()
        .find(|&(_, d)| !along(v_f, d.unit()) && !along(v_b, d.unit()))
        .ok_or(ParityError::NoAxis)?;

    let rot_p = |p: Point| (0..turns).fold(p, |p, _| p.rotate_cw());
    let mut rpath = path.clone();
    for _ in 0..turns {
        rpath = rpath.rotate90();
    }
    let corners = [window.min(), window.max()].map(rot_p);
    let rwin = Window::bounding(corners, 0).expect("two corners");

    let counts = CrossingTable::build(&rpath, &rwin);
    let far = far_field_term(&rpath)?;

    let mut out = WindowGrid::new(window, Side::On);
    for p in window.points() {
        let q = rot_p(p);
        let s = if counts.on_path.contains(&q) {
            Side::On
        } else if (counts.crossings_east_of(q) + far) % 2 == 1 {
            Side::Left
        } else {
            Side::Right
        };
        out.set(p, s);
    }
    Ok(out)
}

struct CrossingTable {
    /// bottom y of each vertical edge ↦ sorted x coordinates
    by_row: HashMap<i64, Vec<i64>>,
    on_path: HashSet<Point>,
}

impl CrossingTable {
    fn build(path: &BiInfinitePath, win: &Window) -> Self {
        let mut by_row: HashMap<i64, Vec<i64>> = HashMap::new();
        let mut on_path = HashSet::new();
        on_path.insert(path.anchor());
        for ray in [path.forward(), path.backward()] {
            let out = ray.outward();
            let m = out.transient().len();
            let per = out.period().clone();
            let (v, (lo, hi)) = (per.displacement(), prefix_bounds(&per));
            let mut pos = path.anchor();
            let mut steps = out.outward_steps();
            let mut k = 0usize;
            loop {
                if k >= m && (k - m).is_multiple_of(per.len()) {
                    let done = if v.dy > 0 {
                        pos.y + lo.dy > win.max().y
                    } else if v.dy < 0 {
                        pos.y + hi.dy < win.min().y
                    } else {
                        debug_assert!(v.dx < 0, "tail along the cast direction");
                        pos.x + hi.dx < win.min().x
                    };
                    if done {
                        break;
                    }
                }
                let d = steps.next().expect("infinite ray");
                let next = pos.step(d);
                match d {
                    Direction::N => by_row.entry(pos.y).or_default().push(pos.x),
                    Direction::S => by_row.entry(next.y).or_default().push(pos.x),
                    _ => {}
                }
                pos = next;
                on_path.insert(pos);
                k += 1;
            }
        }
        for xs in by_row.values_mut() {
            xs.sort_unstable();
        }
        CrossingTable { by_row, on_path }
    }

    fn crossings_east_of(&self, p: Point) -> usize {
        self.by_row
            .get(&p.y)
            .map_or(0, |xs| xs.len() - xs.partition_point(|&x| x <= p.x))
    }
}

/// Componentwise minimum and maximum over the proper prefixes of `w`.
fn prefix_bounds(w: &Word) -> (Vector2, Vector2) {
    let (mut lo, mut hi, mut cur) = (Vector2::ZERO, Vector2::ZERO, Vector2::ZERO);
    for d in w.iter() {
        lo = Vector2::new(lo.dx.min(cur.dx), lo.dy.min(cur.dy));
        hi = Vector2::new(hi.dx.max(cur.dx), hi.dy.max(cur.dy));
        cur += d.unit();
    }
    (lo, hi)
}

/// 1 when east lies strictly inside the counter-clockwise sweep from the
/// forward asymptote to the backward one.
fn far_field_term(path: &BiInfinitePath) -> Result<usize, ParityError> {
    let a = path.forward().period().displacement();
    let b = -path.backward().period().displacement();
    let u = Vector2::new(1, 0);
    let ab = a.cross(b);
    let inside = if ab > 0 {
        a.cross(u) > 0 && u.cross(b) > 0
    } else if ab < 0 {
        !(b.cross(u) >= 0 && u.cross(a) >= 0)
    } else if a.dot(b) < 0 {
        a.cross(u) > 0
    } else {
        // same asymptotic direction: which tail is to the left decides
        // whether the sweep is empty or the full turn
        let (f_lo, f_hi) = tail_offsets(path.forward(), path.anchor(), a);
        let (b_lo, b_hi) = tail_offsets(path.backward(), path.anchor(), a);
        if b_hi < f_lo {
            true
        } else if f_hi < b_lo {
            false
        } else {
            return Err(ParityError::AmbiguousFarField);
        }
    };
    Ok(usize::from(inside))
}

/// Range of `cross(v, x)` over one period of the ray's tail.
fn tail_offsets(ray: &crate::path::Ray, anchor: Point, v: Vector2) -> (i64, i64) {
    let out = ray.outward();
    let start = anchor + out.transient().displacement();
    let mut pos = start;
    let mut lo = v.cross(pos.to_vector());
    let mut hi = lo;
    for d in out.period().iter() {
        pos = pos.step(d);
        let c = v.cross(pos.to_vector());
        lo = lo.min(c);
        hi = hi.max(c);
    }
    (lo, hi)
}

/// Non-causal set by brute force: `B` is kept when the origin still reaches
/// `a` after deleting `B` from the graph.
pub fn non_causal_by_deletion(
    occupied: &BTreeSet<Point>,
    edges: &HashMap<Point, Vec<Point>>,
    target: Point,
    window: Window,
) -> BTreeSet<Point> {
    if !occupied.contains(&target) {
        return window.points().collect();
    }
    let reach = |banned: Option<Point>| -> bool {
        if banned == Some(Point::ORIGIN) || !occupied.contains(&Point::ORIGIN) {
            return false;
        }
        let mut seen = HashSet::from([Point::ORIGIN]);
        let mut q = VecDeque::from([Point::ORIGIN]);
        while let Some(u) = q.pop_front() {
            if u == target {
                return true;
            }
            for &v in edges.get(&u).into_iter().flatten() {
                if Some(v) != banned && seen.insert(v) {
                    q.push_back(v);
                }
            }
        }
        false
    };
    if !reach(None) {
        return BTreeSet::from([target]);
    }
    window
        .points()
        .filter(|&b| b == target || reach(Some(b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::word;

    #[test]
    fn wall_parity() {
        let w = Window::new(3).unwrap();
        let s = parity_sides(&BiInfinitePath::wall(), w).unwrap();
        assert_eq!(s.get(Point::new(0, 1)), Some(&Side::Left));
        assert_eq!(s.get(Point::new(-3, -2)), Some(&Side::Right));
        assert_eq!(s.get(Point::new(2, 0)), Some(&Side::On));
    }

    #[test]
    fn u_shape_parity() {
        // down from the north at x=2, across, back up north at x=-2
        let p = BiInfinitePath::from_words(
            Point::new(2, 0),
            word("S"),
            word(""),
            word("WWWWN"),
            word("N"),
        )
        .unwrap();
        let w = Window::new(4).unwrap();
        let s = parity_sides(&p, w).unwrap();
        assert_eq!(s.get(Point::new(0, 2)), Some(&Side::Right));
        assert_eq!(s.get(Point::new(0, -3)), Some(&Side::Left));
        assert_eq!(s.get(Point::new(4, 4)), Some(&Side::Left));
    }

    #[test]
    fn powers() {
        assert!(powers_simple(&word("NE"), 20));
        assert!(!powers_simple(&word("NES"), 20));
    }
}
