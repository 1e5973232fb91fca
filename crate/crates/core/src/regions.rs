//! Left and right regions of bi-infinite lattice paths, restricted to a
//! window, plus half-plane and ribbon predicates.
//!
//! Classification is a seeded flood fill: vertices directly to the left of
//! the path seed the left region, vertices directly to the right seed the
//! right region, and both spread through the window without crossing the
//! path. Regions contain the path itself.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::path::{Direction, Orientation, PathError, Point, Ray, Vector2, Word};
use crate::window::{Window, WindowGrid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("path leaves the window and comes back (at {0})")]
    PathReentersWindow(Point),
    #[error("path has no vertex inside the window")]
    PathMissesWindow,
    #[error("path revisits {0}")]
    SimplicityViolation(Point),
    #[error("point {0} is outside the window")]
    PointOutsideWindow(Point),
    #[error("direction vector is zero")]
    ZeroVector,
    #[error("ribbon boundaries are not distinct ordered lines")]
    DegenerateRibbon,
    #[error("start point {0} is not in both regions")]
    StartOutsideIntersection(Point),
    #[error("{0} is seeded on both sides of the path")]
    SeedConflict(Point),
    #[error("{0} is not reachable from either side")]
    Unclassified(Point),
    #[error("ray has the wrong orientation for its slot")]
    OrientationMismatch,
    #[error("bad path syntax: {0}")]
    Syntax(String),
    #[error(transparent)]
    Path(#[from] PathError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    On,
}

/// Which of the two regions, or which turn preference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hand {
    Left,
    Right,
}

impl Hand {
    pub fn side(self) -> Side {
        match self {
            Hand::Left => Side::Left,
            Hand::Right => Side::Right,
        }
    }

    pub fn opposite(self) -> Hand {
        match self {
            Hand::Left => Hand::Right,
            Hand::Right => Hand::Left,
        }
    }

    /// Quarter turn towards this hand.
    pub fn turn(self, d: Direction) -> Direction {
        match self {
            Hand::Left => d.rotate_ccw(),
            Hand::Right => d.rotate_cw(),
        }
    }
}

impl fmt::Display for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hand::Left => "left",
            Hand::Right => "right",
        })
    }
}

impl FromStr for Hand {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Hand::Left),
            "right" | "r" => Ok(Hand::Right),
            _ => Err(format!("expected left or right, got {s:?}")),
        }
    }
}

/// Which side of the directed line through `base` with direction `v` the
/// point lies on.
pub fn line_side(point: Point, base: Point, v: Vector2) -> Result<Side, RegionError> {
    if v.is_zero() {
        return Err(RegionError::ZeroVector);
    }
    let s = (point - base).dot(v.perp());
    Ok(match s.signum() {
        1 => Side::Left,
        -1 => Side::Right,
        _ => Side::On,
    })
}

/// Whether `point` lies in the band bounded below by the line through `b`
/// and above by the line through `a`, both with direction `v`.
pub fn ribbon_contains(a: Point, b: Point, v: Vector2, point: Point) -> Result<bool, RegionError> {
    if v.is_zero() {
        return Err(RegionError::ZeroVector);
    }
    if a == b || line_side(a, b, v)? == Side::Right {
        return Err(RegionError::DegenerateRibbon);
    }
    Ok(line_side(point, b, v)? != Side::Right && line_side(point, a, v)? != Side::Left)
}

/// `b.A.f`: a backward ray ending at the anchor and a forward ray leaving it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiInfinitePath {
    anchor: Point,
    backward: Ray,
    forward: Ray,
}

impl BiInfinitePath {
    pub fn new(anchor: Point, backward: Ray, forward: Ray) -> Result<Self, RegionError> {
        if backward.orientation() != Orientation::Backward
            || forward.orientation() != Orientation::Forward
        {
            return Err(RegionError::OrientationMismatch);
        }
        Ok(BiInfinitePath {
            anchor,
            backward,
            forward,
        })
    }

    /// Convenience constructor from the four words.
    pub fn from_words(
        anchor: Point,
        back_period: Word,
        back_transient: Word,
        fwd_transient: Word,
        fwd_period: Word,
    ) -> Result<Self, RegionError> {
        BiInfinitePath::new(
            anchor,
            Ray::backward(back_transient, back_period)?,
            Ray::forward(fwd_transient, fwd_period)?,
        )
    }

    /// `ωE.(0,0).Eω`, the horizontal line through the origin heading east.
    pub fn wall() -> Self {
        let e = Word::new(vec![Direction::E]);
        BiInfinitePath::from_words(Point::ORIGIN, e.clone(), Word::empty(), Word::empty(), e)
            .expect("wall is well formed")
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn backward(&self) -> &Ray {
        &self.backward
    }

    pub fn forward(&self) -> &Ray {
        &self.forward
    }

    /// Direction of the edge from vertex `i` to vertex `i + 1`, with vertex 0
    /// at the anchor and negative indices on the backward ray.
    pub fn step(&self, i: i64) -> Direction {
        if i >= 0 {
            self.forward.outward_step(i as usize)
        } else {
            self.backward.outward_step((-i - 1) as usize).opposite()
        }
    }

    pub fn rotate90(&self) -> BiInfinitePath {
        BiInfinitePath {
            anchor: self.anchor.rotate_cw(),
            backward: self.backward.rotate90(),
            forward: self.forward.rotate90(),
        }
    }

    /// Mirror image in the x axis. Left and right regions swap.
    pub fn reflect_ns(&self) -> BiInfinitePath {
        BiInfinitePath {
            anchor: self.anchor.reflect_ns(),
            backward: self.backward.reflect_ns(),
            forward: self.forward.reflect_ns(),
        }
    }

    /// Ground the path and keep the part inside `window`.
    pub fn ground_in(&self, window: Window) -> Result<WindowedPath, RegionError> {
        let mut seen: HashMap<Point, i64> = HashMap::new();
        seen.insert(self.anchor, 0);
        let mut inside: Vec<(i64, Point)> = Vec::new();
        if window.contains(self.anchor) {
            inside.push((0, self.anchor));
        }
        for (ray, sign) in [(&self.forward, 1i64), (&self.backward, -1i64)] {
            let out = ray.outward();
            let m = out.transient().len();
            let p = out.period().clone();
            let mut pos = self.anchor;
            let mut steps = out.outward_steps();
            let mut k = 0usize;
            loop {
                if k >= m && (k - m).is_multiple_of(p.len()) && gone_forever(pos, &p, &window) {
                    break;
                }
                let d = steps.next().expect("rays are infinite");
                pos = pos.step(d);
                k += 1;
                let idx = sign * k as i64;
                if seen.insert(pos, idx).is_some() {
                    return Err(RegionError::SimplicityViolation(pos));
                }
                if window.contains(pos) {
                    inside.push((idx, pos));
                }
            }
        }
        if inside.is_empty() {
            return Err(RegionError::PathMissesWindow);
        }
        inside.sort_unstable();
        for pair in inside.windows(2) {
            if pair[1].0 != pair[0].0 + 1 {
                return Err(RegionError::PathReentersWindow(pair[1].1));
            }
        }
        let first = inside[0].0;
        let vertices: Vec<Point> = inside.iter().map(|&(_, p)| p).collect();
        let mut index = WindowGrid::new(window, None);
        for &(i, p) in &inside {
            index.set(p, Some(i));
        }
        let steps_in = inside.iter().map(|&(i, _)| self.step(i - 1)).collect();
        let steps_out = inside.iter().map(|&(i, _)| self.step(i)).collect();
        Ok(WindowedPath {
            window,
            first,
            vertices,
            index,
            steps_in,
            steps_out,
        })
    }
}

/// True when a walk standing at a period boundary `s` will never again enter
/// the window.
pub(crate) fn gone_forever(s: Point, period: &Word, window: &Window) -> bool {
    let v = period.displacement();
    let mut pre = Vector2::ZERO;
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0i64, 0i64, 0i64, 0i64);
    for d in period.iter() {
        min_x = min_x.min(pre.dx);
        max_x = max_x.max(pre.dx);
        min_y = min_y.min(pre.dy);
        max_y = max_y.max(pre.dy);
        pre += d.unit();
    }
    let (lo, hi) = (window.min(), window.max());
    (v.dx > 0 && s.x + min_x > hi.x)
        || (v.dx < 0 && s.x + max_x < lo.x)
        || (v.dy > 0 && s.y + min_y > hi.y)
        || (v.dy < 0 && s.y + max_y < lo.y)
}

impl fmt::Display for BiInfinitePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}|{}@{}{}|{}",
            self.backward.period(),
            self.backward.transient(),
            self.anchor,
            self.forward.transient(),
            self.forward.period()
        )
    }
}

impl FromStr for BiInfinitePath {
    type Err = RegionError;

    /// `<backward-period>|<backward-transient>@(x,y)<forward-transient>|<forward-period>`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = |msg: &str| RegionError::Syntax(format!("{msg} in {s:?}"));
        let (back, rest) = s.split_once('@').ok_or_else(|| syntax("missing '@'"))?;
        let (bp, bt) = back
            .split_once('|')
            .ok_or_else(|| syntax("missing '|' before '@'"))?;
        let rest = rest
            .strip_prefix('(')
            .ok_or_else(|| syntax("missing '(' after '@'"))?;
        let (coords, fwd) = rest.split_once(')').ok_or_else(|| syntax("missing ')'"))?;
        let anchor: Point = coords.parse().map_err(|e: String| RegionError::Syntax(e))?;
        let (ft, fp) = fwd
            .split_once('|')
            .ok_or_else(|| syntax("missing '|' after anchor"))?;
        BiInfinitePath::from_words(anchor, bp.parse()?, bt.parse()?, ft.parse()?, fp.parse()?)
    }
}

/// The contiguous stretch of a bi-infinite path inside a window.
#[derive(Debug, Clone)]
pub struct WindowedPath {
    window: Window,
    first: i64,
    vertices: Vec<Point>,
    index: WindowGrid<Option<i64>>,
    steps_in: Vec<Direction>,
    steps_out: Vec<Direction>,
}

impl WindowedPath {
    pub fn window(&self) -> Window {
        self.window
    }

    /// Path index of the first in-window vertex.
    pub fn first_index(&self) -> i64 {
        self.first
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn index_of(&self, p: Point) -> Option<i64> {
        self.index.get(p).copied().flatten()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index_of(p).is_some()
    }

    /// Incoming and outgoing step at an in-window path vertex.
    pub fn steps_at(&self, p: Point) -> Option<(Direction, Direction)> {
        let k = (self.index_of(p)? - self.first) as usize;
        Some((self.steps_in[k], self.steps_out[k]))
    }

    /// Local side rule: which side of the path the neighbour of `p` in
    /// direction `d` is directly on.
    pub fn local_side(&self, p: Point, d: Direction) -> Option<Side> {
        let (din, dout) = self.steps_at(p)?;
        if d == dout.rotate_ccw() || d == din.rotate_ccw() {
            Some(Side::Left)
        } else if d == dout.rotate_cw() || d == din.rotate_cw() {
            Some(Side::Right)
        } else {
            None
        }
    }
}

/// Side of every window point relative to one path.
#[derive(Debug, Clone)]
pub struct SideMap {
    path: WindowedPath,
    sides: WindowGrid<Side>,
}

impl SideMap {
    pub fn classify(path: &BiInfinitePath, window: Window) -> Result<Self, RegionError> {
        let wp = path.ground_in(window)?;
        let mut label: WindowGrid<Option<Side>> = WindowGrid::new(window, None);
        let mut queue = VecDeque::new();
        for &p in wp.vertices() {
            label.set(p, Some(Side::On));
        }
        for &p in wp.vertices() {
            for (d, q) in window.neighbors(p) {
                if wp.contains(q) {
                    continue;
                }
                let Some(s) = wp.local_side(p, d) else {
                    continue;
                };
                match label.get(q).copied().flatten() {
                    None => {
                        label.set(q, Some(s));
                        queue.push_back(q);
                    }
                    Some(prev) if prev != s => return Err(RegionError::SeedConflict(q)),
                    Some(_) => {}
                }
            }
        }
        while let Some(p) = queue.pop_front() {
            let s = label
                .get(p)
                .copied()
                .flatten()
                .expect("queued points are labelled");
            for (_, q) in window.neighbors(p) {
                match label.get(q).copied().flatten() {
                    None => {
                        label.set(q, Some(s));
                        queue.push_back(q);
                    }
                    Some(Side::On) => {}
                    Some(prev) if prev != s => return Err(RegionError::SeedConflict(q)),
                    Some(_) => {}
                }
            }
        }
        let mut sides = WindowGrid::new(window, Side::On);
        for (p, l) in label.iter() {
            sides.set(p, l.ok_or(RegionError::Unclassified(p))?);
        }
        Ok(SideMap { path: wp, sides })
    }

    pub fn window(&self) -> Window {
        self.sides.window()
    }

    pub fn path(&self) -> &WindowedPath {
        &self.path
    }

    pub fn side(&self, p: Point) -> Result<Side, RegionError> {
        self.sides
            .get(p)
            .copied()
            .ok_or(RegionError::PointOutsideWindow(p))
    }

    pub fn in_region(&self, p: Point, hand: Hand) -> bool {
        matches!(self.sides.get(p), Some(&s) if s == Side::On || s == hand.side())
    }

    /// Whether the unit edge `{u, v}` belongs to the given region subgraph.
    pub fn edge_in_region(&self, u: Point, v: Point, hand: Hand) -> bool {
        let (Some(&su), Some(&sv)) = (self.sides.get(u), self.sides.get(v)) else {
            return false;
        };
        let Some(d) = Direction::from_unit(v - u) else {
            return false;
        };
        if su != Side::On {
            return su == hand.side();
        }
        if sv != Side::On {
            return sv == hand.side();
        }
        let (iu, iv) = (
            self.path.index_of(u).expect("on path"),
            self.path.index_of(v).expect("on path"),
        );
        if (iu - iv).abs() == 1 {
            return true;
        }
        self.path.local_side(u, d) == Some(hand.side())
    }

    pub fn members(&self, hand: Hand) -> BTreeSet<Point> {
        self.sides
            .iter()
            .filter(|(_, &s)| s == Side::On || s == hand.side())
            .map(|(p, _)| p)
            .collect()
    }
}

pub fn side_of(path: &BiInfinitePath, point: Point, window: Window) -> Result<Side, RegionError> {
    if !window.contains(point) {
        return Err(RegionError::PointOutsideWindow(point));
    }
    SideMap::classify(path, window)?.side(point)
}

pub fn region_members(
    path: &BiInfinitePath,
    hand: Hand,
    window: Window,
) -> Result<BTreeSet<Point>, RegionError> {
    Ok(SideMap::classify(path, window)?.members(hand))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionComponent {
    pub members: BTreeSet<Point>,
    pub reaches_boundary: bool,
}

/// Connected component of `start` in the intersection of two region
/// subgraphs.
pub fn region_intersection_component(
    p1: &BiInfinitePath,
    p2: &BiInfinitePath,
    side1: Hand,
    side2: Hand,
    start: Point,
    window: Window,
) -> Result<RegionComponent, RegionError> {
    let m1 = SideMap::classify(p1, window)?;
    let m2 = SideMap::classify(p2, window)?;
    component_in(&m1, &m2, side1, side2, start)
}

pub(crate) fn component_in(
    m1: &SideMap,
    m2: &SideMap,
    side1: Hand,
    side2: Hand,
    start: Point,
) -> Result<RegionComponent, RegionError> {
    let window = m1.window();
    if !window.contains(start) {
        return Err(RegionError::PointOutsideWindow(start));
    }
    if !(m1.in_region(start, side1) && m2.in_region(start, side2)) {
        return Err(RegionError::StartOutsideIntersection(start));
    }
    let mut members = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for (_, v) in window.neighbors(u) {
            if members.contains(&v) {
                continue;
            }
            if m1.edge_in_region(u, v, side1)
                && m2.edge_in_region(u, v, side2)
                && m1.in_region(v, side1)
                && m2.in_region(v, side2)
            {
                members.insert(v);
                queue.push_back(v);
            }
        }
    }
    let reaches_boundary = members.iter().any(|&p| window.on_boundary(p));
    Ok(RegionComponent {
        members,
        reaches_boundary,
    })
}

/// Members whose whole 3×3 neighbourhood lies in the set.
pub fn interior(region: &BTreeSet<Point>) -> BTreeSet<Point> {
    region
        .iter()
        .copied()
        .filter(|p| {
            (-1..=1).all(|dx| (-1..=1).all(|dy| region.contains(&Point::new(p.x + dx, p.y + dy))))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::word;

    fn bip(s: &str) -> BiInfinitePath {
        s.parse().unwrap()
    }

    #[test]
    fn wall_sides() {
        let w = Window::new(3).unwrap();
        let wall = BiInfinitePath::wall();
        assert_eq!(side_of(&wall, Point::new(0, -1), w), Ok(Side::Right));
        assert_eq!(side_of(&wall, Point::new(0, 1), w), Ok(Side::Left));
        assert_eq!(side_of(&wall, Point::new(2, 0), w), Ok(Side::On));
        assert_eq!(
            side_of(&wall, Point::new(9, 0), w),
            Err(RegionError::PointOutsideWindow(Point::new(9, 0)))
        );
    }

    #[test]
    fn step_up_path() {
        let w = Window::new(3).unwrap();
        let p = bip("E|@(0,0)N|E");
        assert_eq!(side_of(&p, Point::new(1, 0), w), Ok(Side::Right));
        assert_eq!(side_of(&p, Point::new(-1, 1), w), Ok(Side::Left));
        assert_eq!(side_of(&p, Point::new(0, 1), w), Ok(Side::On));
    }

    #[test]
    fn wall_members() {
        let w = Window::new(2).unwrap();
        let wall = BiInfinitePath::wall();
        let right = region_members(&wall, Hand::Right, w).unwrap();
        let left = region_members(&wall, Hand::Left, w).unwrap();
        let lower: BTreeSet<_> = w.points().filter(|p| p.y <= 0).collect();
        let upper: BTreeSet<_> = w.points().filter(|p| p.y >= 0).collect();
        assert_eq!(right, lower);
        assert_eq!(left, upper);
        let on: BTreeSet<_> = w.points().filter(|p| p.y == 0).collect();
        assert_eq!(&left & &right, on);
    }

    #[test]
    fn line_side_examples() {
        let o = Point::ORIGIN;
        let e = Vector2::new(1, 0);
        assert_eq!(line_side(Point::new(1, 2), o, e), Ok(Side::Left));
        assert_eq!(line_side(Point::new(5, 0), o, e), Ok(Side::On));
        assert_eq!(line_side(Point::new(3, -1), o, e), Ok(Side::Right));
        assert_eq!(line_side(o, o, Vector2::ZERO), Err(RegionError::ZeroVector));
    }

    #[test]
    fn ribbon_examples() {
        let (a, b, v) = (Point::new(0, 1), Point::ORIGIN, Vector2::new(1, 0));
        assert_eq!(ribbon_contains(a, b, v, Point::new(5, 0)), Ok(true));
        assert_eq!(ribbon_contains(a, b, v, Point::new(5, 2)), Ok(false));
        assert_eq!(ribbon_contains(a, b, v, Point::new(-3, 1)), Ok(true));
        assert_eq!(
            ribbon_contains(b, b, v, Point::ORIGIN),
            Err(RegionError::DegenerateRibbon)
        );
        assert_eq!(
            ribbon_contains(b, a, v, Point::ORIGIN),
            Err(RegionError::DegenerateRibbon)
        );
    }

    #[test]
    fn intersection_component_of_wall_with_itself() {
        let w = Window::new(3).unwrap();
        let wall = BiInfinitePath::wall();
        let c = region_intersection_component(
            &wall,
            &wall,
            Hand::Right,
            Hand::Right,
            Point::new(0, -1),
            w,
        )
        .unwrap();
        let lower: BTreeSet<_> = w.points().filter(|p| p.y <= 0).collect();
        assert_eq!(c.members, lower);
        assert!(c.reaches_boundary);
    }

    #[test]
    fn intersection_component_with_step() {
        let w = Window::new(3).unwrap();
        let wall = BiInfinitePath::wall();
        let step = bip("E|@(0,0)N|E");
        let c = region_intersection_component(
            &wall,
            &step,
            Hand::Right,
            Hand::Right,
            Point::new(1, 0),
            w,
        )
        .unwrap();
        // below the wall, plus the stretch of the wall east of the origin
        // that lies under the step
        let expected: BTreeSet<_> = w.points().filter(|p| p.y <= 0).collect();
        assert_eq!(c.members, expected);
        assert!(c.reaches_boundary);
    }

    #[test]
    fn start_outside_intersection() {
        let w = Window::new(3).unwrap();
        let wall = BiInfinitePath::wall();
        assert_eq!(
            region_intersection_component(
                &wall,
                &wall,
                Hand::Right,
                Hand::Right,
                Point::new(0, 1),
                w
            ),
            Err(RegionError::StartOutsideIntersection(Point::new(0, 1)))
        );
    }

    #[test]
    fn serialization_roundtrip() {
        for s in ["E|@(0,0)N|E", "NE|WS@(-2,3)EEN|SE", "W|@(1,1)|N"] {
            assert_eq!(bip(s).to_string(), s);
        }
        assert!(matches!(
            "E@(0,0)|E".parse::<BiInfinitePath>(),
            Err(RegionError::Syntax(_))
        ));
        assert!(matches!(
            "E|@(0,0)X|E".parse::<BiInfinitePath>(),
            Err(RegionError::Path(_))
        ));
    }

    #[test]
    fn reentry_is_rejected() {
        // forward ray leaves the window to the east and then heads back west
        // along a lower row before turning south for good
        let p = BiInfinitePath::from_words(
            Point::ORIGIN,
            word("E"),
            word(""),
            word("EEESWWWWWWS"),
            word("S"),
        )
        .unwrap();
        let w = Window::new(2).unwrap();
        assert!(matches!(
            p.ground_in(w),
            Err(RegionError::PathReentersWindow(_))
        ));
    }

    #[test]
    fn self_intersection_is_rejected() {
        let p =
            BiInfinitePath::from_words(Point::ORIGIN, word("E"), word(""), word("NWS"), word("S"))
                .unwrap();
        let w = Window::new(3).unwrap();
        assert!(matches!(
            p.ground_in(w),
            Err(RegionError::SimplicityViolation(_))
        ));
    }

    #[test]
    fn interior_of_square() {
        let s: BTreeSet<_> = Window::new(2).unwrap().points().collect();
        let inner: BTreeSet<_> = Window::new(1).unwrap().points().collect();
        assert_eq!(interior(&s), inner);
    }
}
