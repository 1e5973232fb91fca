//! Finite rectangular truncations of the lattice.

use std::fmt;

use thiserror::Error;

use crate::path::{Direction, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WindowError {
    #[error("window radius must be at least 1, got {0}")]
    InvalidRadius(i64),
    #[error("empty window: min {min} exceeds max {max}")]
    Empty { min: Point, max: Point },
}

/// Axis-aligned box of lattice points, inclusive on all sides. Most callers
/// use the centred square `{|x| ≤ r, |y| ≤ r}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    min: Point,
    max: Point,
}

impl Window {
    pub fn new(radius: i64) -> Result<Self, WindowError> {
        if radius < 1 {
            return Err(WindowError::InvalidRadius(radius));
        }
        Ok(Window {
            min: Point::new(-radius, -radius),
            max: Point::new(radius, radius),
        })
    }

    pub fn from_corners(min: Point, max: Point) -> Result<Self, WindowError> {
        if min.x > max.x || min.y > max.y {
            return Err(WindowError::Empty { min, max });
        }
        Ok(Window { min, max })
    }

    /// Smallest box containing all `points`, grown by `margin` on each side.
    pub fn bounding(points: impl IntoIterator<Item = Point>, margin: i64) -> Option<Self> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let (mut lo, mut hi) = (first, first);
        for p in it {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        Some(Window {
            min: Point::new(lo.x - margin, lo.y - margin),
            max: Point::new(hi.x + margin, hi.y + margin),
        })
    }

    pub fn min(&self) -> Point {
        self.min
    }

    pub fn max(&self) -> Point {
        self.max
    }

    /// Largest distance (∞-norm) from the origin to the box edge; equals the
    /// radius for centred squares.
    pub fn radius(&self) -> i64 {
        [self.min.x, self.min.y, self.max.x, self.max.y]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        (self.max.x - self.min.x + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.max.y - self.min.y + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.width() * self.height()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn on_boundary(&self, p: Point) -> bool {
        self.contains(p)
            && (p.x == self.min.x || p.x == self.max.x || p.y == self.min.y || p.y == self.max.y)
    }

    /// Row-major index, rows ordered by increasing y.
    pub fn index(&self, p: Point) -> Option<usize> {
        self.contains(p)
            .then(|| (p.y - self.min.y) as usize * self.width() + (p.x - self.min.x) as usize)
    }

    pub fn point(&self, idx: usize) -> Point {
        let w = self.width();
        Point::new(self.min.x + (idx % w) as i64, self.min.y + (idx / w) as i64)
    }

    /// Points in `(y, x)` order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (self.min.y..=self.max.y)
            .flat_map(move |y| (self.min.x..=self.max.x).map(move |x| Point::new(x, y)))
    }

    pub fn neighbors(&self, p: Point) -> impl Iterator<Item = (Direction, Point)> + '_ {
        Direction::ALL
            .into_iter()
            .map(move |d| (d, p.step(d)))
            .filter(move |(_, q)| self.contains(*q))
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.min, self.max)
    }
}

/// Dense per-point storage over a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowGrid<T> {
    window: Window,
    cells: Vec<T>,
}

impl<T: Clone> WindowGrid<T> {
    pub fn new(window: Window, fill: T) -> Self {
        WindowGrid {
            window,
            cells: vec![fill; window.len()],
        }
    }
}

impl<T> WindowGrid<T> {
    pub fn window(&self) -> Window {
        self.window
    }

    pub fn get(&self, p: Point) -> Option<&T> {
        self.window.index(p).map(|i| &self.cells[i])
    }

    pub fn get_mut(&mut self, p: Point) -> Option<&mut T> {
        self.window.index(p).map(move |i| &mut self.cells[i])
    }

    /// Panics if `p` is outside the window.
    pub fn set(&mut self, p: Point, v: T) {
        let i = self.window.index(p).expect("point inside grid window");
        self.cells[i] = v;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, &T)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .map(move |(i, v)| (self.window.point(i), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_window() {
        let w = Window::new(2).unwrap();
        assert_eq!(w.len(), 25);
        assert!(w.contains(Point::new(-2, 2)));
        assert!(!w.contains(Point::new(3, 0)));
        assert!(w.on_boundary(Point::new(2, 0)));
        assert!(!w.on_boundary(Point::new(1, 1)));
        assert_eq!(Window::new(0), Err(WindowError::InvalidRadius(0)));
    }

    #[test]
    fn index_roundtrip() {
        let w = Window::from_corners(Point::new(-3, 1), Point::new(2, 4)).unwrap();
        for (i, p) in w.points().enumerate() {
            assert_eq!(w.index(p), Some(i));
            assert_eq!(w.point(i), p);
        }
    }

    #[test]
    fn bounding_box() {
        let w = Window::bounding([Point::new(0, 0), Point::new(-1, 1)], 1).unwrap();
        assert_eq!(w.min(), Point::new(-2, -1));
        assert_eq!(w.max(), Point::new(1, 2));
    }
}
