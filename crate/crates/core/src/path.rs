//! Words over the four lattice directions, grounded paths and eventually
//! periodic rays.
//!
//! A [`Word`] is a finite direction sequence. Grounding a word at an anchor
//! gives a [`GroundedPath`]; the word is a *free path* when that grounding
//! never revisits a vertex. A [`Ray`] is the finite encoding `m · p^ω` of an
//! ultimately periodic forward (or backward) infinite path.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("operation requires a non-empty word")]
    EmptyWord,
    #[error("period word has zero displacement")]
    ZeroPeriodDisplacement,
    #[error("invalid direction {found:?} at position {position}")]
    InvalidDirection { position: usize, found: char },
}

/// One of the four unit steps of the square lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    N,
    E,
    S,
    W,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::N, Direction::E, Direction::S, Direction::W];

    pub fn unit(self) -> Vector2 {
        match self {
            Direction::N => Vector2::new(0, 1),
            Direction::E => Vector2::new(1, 0),
            Direction::S => Vector2::new(0, -1),
            Direction::W => Vector2::new(-1, 0),
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::N => Direction::S,
            Direction::E => Direction::W,
            Direction::S => Direction::N,
            Direction::W => Direction::E,
        }
    }

    /// Quarter turn clockwise: N→E→S→W→N. This is also the right turn
    /// relative to a heading.
    pub fn rotate_cw(self) -> Direction {
        match self {
            Direction::N => Direction::E,
            Direction::E => Direction::S,
            Direction::S => Direction::W,
            Direction::W => Direction::N,
        }
    }

    /// Quarter turn counter-clockwise (left turn).
    pub fn rotate_ccw(self) -> Direction {
        self.rotate_cw().opposite()
    }

    pub fn reflect_ns(self) -> Direction {
        match self {
            Direction::N => Direction::S,
            Direction::S => Direction::N,
            d => d,
        }
    }

    /// The direction of a unit vector, if it is one.
    pub fn from_unit(v: Vector2) -> Option<Direction> {
        match (v.dx, v.dy) {
            (0, 1) => Some(Direction::N),
            (1, 0) => Some(Direction::E),
            (0, -1) => Some(Direction::S),
            (-1, 0) => Some(Direction::W),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Direction::N => 'N',
            Direction::E => 'E',
            Direction::S => 'S',
            Direction::W => 'W',
        }
    }

    pub fn from_char(c: char) -> Option<Direction> {
        match c {
            'N' => Some(Direction::N),
            'E' => Some(Direction::E),
            'S' => Some(Direction::S),
            'W' => Some(Direction::W),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Lattice displacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Vector2 {
    pub dx: i64,
    pub dy: i64,
}

impl Vector2 {
    pub const ZERO: Vector2 = Vector2 { dx: 0, dy: 0 };

    pub const fn new(dx: i64, dy: i64) -> Self {
        Vector2 { dx, dy }
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0 && self.dy == 0
    }

    pub fn dot(self, other: Vector2) -> i64 {
        self.dx * other.dx + self.dy * other.dy
    }

    /// z-component of the planar cross product.
    pub fn cross(self, other: Vector2) -> i64 {
        self.dx * other.dy - self.dy * other.dx
    }

    /// `v⊥ = (-dy, dx)`, the counter-clockwise normal.
    pub fn perp(self) -> Vector2 {
        Vector2::new(-self.dy, self.dx)
    }

    pub fn norm_inf(self) -> i64 {
        self.dx.abs().max(self.dy.abs())
    }

    pub fn norm_l1(self) -> i64 {
        self.dx.abs() + self.dy.abs()
    }

    pub fn rotate_cw(self) -> Vector2 {
        Vector2::new(self.dy, -self.dx)
    }

    pub fn reflect_ns(self) -> Vector2 {
        Vector2::new(self.dx, -self.dy)
    }
}

impl Add for Vector2 {
    type Output = Vector2;
    fn add(self, o: Vector2) -> Vector2 {
        Vector2::new(self.dx + o.dx, self.dy + o.dy)
    }
}

impl AddAssign for Vector2 {
    fn add_assign(&mut self, o: Vector2) {
        self.dx += o.dx;
        self.dy += o.dy;
    }
}

impl Sub for Vector2 {
    type Output = Vector2;
    fn sub(self, o: Vector2) -> Vector2 {
        Vector2::new(self.dx - o.dx, self.dy - o.dy)
    }
}

impl Neg for Vector2 {
    type Output = Vector2;
    fn neg(self) -> Vector2 {
        Vector2::new(-self.dx, -self.dy)
    }
}

impl Mul<i64> for Vector2 {
    type Output = Vector2;
    fn mul(self, k: i64) -> Vector2 {
        Vector2::new(self.dx * k, self.dy * k)
    }
}

impl fmt::Display for Vector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dx, self.dy)
    }
}

/// A vertex of the square lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn step(self, d: Direction) -> Point {
        self + d.unit()
    }

    pub fn neighbors(self) -> [Point; 4] {
        Direction::ALL.map(|d| self.step(d))
    }

    /// Clockwise quarter turn about the origin, `(x, y) ↦ (y, -x)`.
    pub fn rotate_cw(self) -> Point {
        Point::new(self.y, -self.x)
    }

    pub fn reflect_ns(self) -> Point {
        Point::new(self.x, -self.y)
    }

    pub fn to_vector(self) -> Vector2 {
        Vector2::new(self.x, self.y)
    }

    pub fn manhattan(self) -> i64 {
        self.x.abs() + self.y.abs()
    }
}

impl Add<Vector2> for Point {
    type Output = Point;
    fn add(self, v: Vector2) -> Point {
        Point::new(self.x + v.dx, self.y + v.dy)
    }
}

impl Sub<Vector2> for Point {
    type Output = Point;
    fn sub(self, v: Vector2) -> Point {
        Point::new(self.x - v.dx, self.y - v.dy)
    }
}

impl Sub for Point {
    type Output = Vector2;
    fn sub(self, o: Point) -> Vector2 {
        Vector2::new(self.x - o.x, self.y - o.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for Point {
    type Err = String;

    /// Accepts `x,y` or `(x,y)`, whitespace tolerated.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t);
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| format!("expected `x,y`, got {s:?}"))?;
        let x = a
            .trim()
            .parse()
            .map_err(|e| format!("bad x in {s:?}: {e}"))?;
        let y = b
            .trim()
            .parse()
            .map_err(|e| format!("bad y in {s:?}: {e}"))?;
        Ok(Point::new(x, y))
    }
}

/// A finite sequence of directions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Direction>);

impl Word {
    pub fn new(dirs: Vec<Direction>) -> Self {
        Word(dirs)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Direction] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Direction> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Direction> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Direction> {
        self.0.last().copied()
    }

    pub fn push(&mut self, d: Direction) {
        self.0.push(d);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    pub fn displacement(&self) -> Vector2 {
        self.0.iter().fold(Vector2::ZERO, |acc, d| acc + d.unit())
    }

    /// `d̄k … d̄1`: traverses the same free path backwards.
    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().map(|d| d.opposite()).collect())
    }

    /// All cyclic shifts, deduplicated, in shift order.
    pub fn rotations(&self) -> Result<Vec<Word>, PathError> {
        if self.is_empty() {
            return Err(PathError::EmptyWord);
        }
        let mut out: Vec<Word> = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let mut v = self.0[i..].to_vec();
            v.extend_from_slice(&self.0[..i]);
            let w = Word(v);
            if !out.contains(&w) {
                out.push(w);
            }
        }
        Ok(out)
    }

    pub fn rotate90(&self) -> Word {
        Word(self.0.iter().map(|d| d.rotate_cw()).collect())
    }

    pub fn reflect_ns(&self) -> Word {
        Word(self.0.iter().map(|d| d.reflect_ns()).collect())
    }

    pub fn ground(&self, anchor: Point) -> GroundedPath {
        GroundedPath::new(anchor, self.clone())
    }

    pub fn is_free_path(&self) -> bool {
        walk_is_simple(Point::ORIGIN, self.iter())
    }

    /// Whether `mm` is a free path; equivalently, `ωmω` is a simple
    /// bi-infinite path.
    pub fn is_pumpable(&self) -> Result<bool, PathError> {
        if self.is_empty() {
            return Err(PathError::EmptyWord);
        }
        Ok(walk_is_simple(
            Point::ORIGIN,
            self.iter().chain(self.iter()),
        ))
    }

    /// Larger side of the bounding box of the word grounded anywhere.
    pub fn bbox_diameter(&self) -> i64 {
        let (lo, hi) = self.bbox();
        (hi.x - lo.x).max(hi.y - lo.y)
    }

    /// Bounding box corners of the word grounded at the origin.
    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = Point::ORIGIN;
        let mut hi = Point::ORIGIN;
        let mut p = Point::ORIGIN;
        for d in self.iter() {
            p = p.step(d);
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }
}

fn walk_is_simple(start: Point, dirs: impl Iterator<Item = Direction>) -> bool {
    let mut seen = HashSet::new();
    seen.insert(start);
    let mut p = start;
    for d in dirs {
        p = p.step(d);
        if !seen.insert(p) {
            return false;
        }
    }
    true
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{}", d.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, c)| {
                Direction::from_char(c).ok_or(PathError::InvalidDirection { position, found: c })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl FromIterator<Direction> for Word {
    fn from_iter<I: IntoIterator<Item = Direction>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Parse a word, panicking on bad input. Handy in tests and examples.
pub fn word(s: &str) -> Word {
    s.parse().unwrap_or_else(|e| panic!("bad word {s:?}: {e}"))
}

/// A word fixed at an anchor vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundedPath {
    pub anchor: Point,
    pub word: Word,
    pub vertices: Vec<Point>,
    pub simple: bool,
}

impl GroundedPath {
    pub fn new(anchor: Point, word: Word) -> Self {
        let mut vertices = Vec::with_capacity(word.len() + 1);
        vertices.push(anchor);
        let mut p = anchor;
        for d in word.iter() {
            p = p.step(d);
            vertices.push(p);
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        let simple = vertices.iter().all(|v| seen.insert(*v));
        GroundedPath {
            anchor,
            word,
            vertices,
            simple,
        }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn end(&self) -> Point {
        *self.vertices.last().expect("grounded path has an anchor")
    }

    pub fn contains(&self, p: Point) -> bool {
        self.vertices.contains(&p)
    }

    /// The sub-path `path[from..=to]`, re-anchored at its first vertex.
    pub fn segment(&self, from: usize, to: usize) -> GroundedPath {
        let w = Word(self.word.as_slice()[from..to].to_vec());
        GroundedPath::new(self.vertices[from], w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Forward,
    Backward,
}

/// An ultimately periodic ray `m · p^ω` (forward) or `ωp · m` (backward).
///
/// For a backward ray the stored words are read in the path's own
/// orientation, so the ray ends at its anchor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray {
    transient: Word,
    period: Word,
    orientation: Orientation,
}

impl Ray {
    pub fn new(transient: Word, period: Word, orientation: Orientation) -> Result<Self, PathError> {
        if period.is_empty() {
            return Err(PathError::EmptyWord);
        }
        if period.displacement().is_zero() {
            return Err(PathError::ZeroPeriodDisplacement);
        }
        Ok(Ray {
            transient,
            period,
            orientation,
        })
    }

    pub fn forward(transient: Word, period: Word) -> Result<Self, PathError> {
        Ray::new(transient, period, Orientation::Forward)
    }

    pub fn backward(transient: Word, period: Word) -> Result<Self, PathError> {
        Ray::new(transient, period, Orientation::Backward)
    }

    pub fn transient(&self) -> &Word {
        &self.transient
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// The same set of vertices read away from the anchor. A forward ray is
    /// its own outward reading; a backward ray `ωp·m` reads outward as
    /// `m̄ · p̄^ω`.
    pub fn outward(&self) -> Ray {
        match self.orientation {
            Orientation::Forward => self.clone(),
            Orientation::Backward => Ray {
                transient: self.transient.reverse(),
                period: self.period.reverse(),
                orientation: Orientation::Forward,
            },
        }
    }

    /// Direction of the `i`-th outward step.
    pub fn outward_step(&self, i: usize) -> Direction {
        match self.orientation {
            Orientation::Forward => self.forward_step(i),
            Orientation::Backward => {
                let m = self.transient.as_slice();
                let p = self.period.as_slice();
                if i < m.len() {
                    m[m.len() - 1 - i].opposite()
                } else {
                    let j = (i - m.len()) % p.len();
                    p[p.len() - 1 - j].opposite()
                }
            }
        }
    }

    fn forward_step(&self, i: usize) -> Direction {
        let m = self.transient.len();
        if i < m {
            self.transient.as_slice()[i]
        } else {
            let p = self.period.as_slice();
            p[(i - m) % p.len()]
        }
    }

    /// Outward steps as an endless iterator.
    pub fn outward_steps(&self) -> impl Iterator<Item = Direction> + '_ {
        let out = self.outward();
        let m = out.transient.clone();
        let p = out.period.clone();
        m.0.into_iter().chain(p.0.into_iter().cycle())
    }

    pub fn rotate90(&self) -> Ray {
        Ray {
            transient: self.transient.rotate90(),
            period: self.period.rotate90(),
            orientation: self.orientation,
        }
    }

    pub fn reflect_ns(&self) -> Ray {
        Ray {
            transient: self.transient.reflect_ns(),
            period: self.period.reflect_ns(),
            orientation: self.orientation,
        }
    }

    /// Number of period repeats ground when checking simplicity:
    /// `ceil((diam(m) + 2·diam(p)) / max(1, ‖V(p)‖∞)) + 2`.
    pub fn verification_bound(&self) -> usize {
        verification_bound(&self.transient, &self.period)
    }

    pub fn is_simple(&self) -> bool {
        let out = self.outward();
        ray_simple_unchecked(&out.transient, &out.period)
    }
}

fn verification_bound(m: &Word, p: &Word) -> usize {
    let num = m.bbox_diameter() + 2 * p.bbox_diameter();
    let den = p.displacement().norm_inf().max(1);
    ((num + den - 1) / den + 2) as usize
}

fn ray_simple_unchecked(m: &Word, p: &Word) -> bool {
    if !matches!(p.is_pumpable(), Ok(true)) {
        return false;
    }
    let k = verification_bound(m, p);
    walk_is_simple(Point::ORIGIN, m.iter().chain(p.repeat(k).iter()))
}

/// Whether `m · p^ω` grounds to a simple forward-infinite path.
pub fn is_ray_simple(m: &Word, p: &Word) -> Result<bool, PathError> {
    if p.is_empty() {
        return Err(PathError::EmptyWord);
    }
    if p.displacement().is_zero() {
        return Err(PathError::ZeroPeriodDisplacement);
    }
    Ok(ray_simple_unchecked(m, p))
}

/// Bring `(m, p)` to the shortest transient describing the same infinite
/// word `m · p^ω`.
pub fn normalize_periodic(mut m: Word, mut p: Word) -> (Word, Word) {
    while let (Some(a), Some(b)) = (m.last(), p.last()) {
        if a != b {
            break;
        }
        m.0.pop();
        p.0.pop();
        p.0.insert(0, b);
    }
    (m, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displacement_examples() {
        assert_eq!(word("NE").displacement(), Vector2::new(1, 1));
        assert_eq!(word("EEEEEEN").displacement(), Vector2::new(6, 1));
        assert_eq!(word("").displacement(), Vector2::ZERO);
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(word("NE").reverse(), word("WS"));
        assert_eq!(word("").reverse(), word(""));
        assert_eq!(word("NNE").reverse(), word("WSS"));
    }

    #[test]
    fn rotations_examples() {
        assert_eq!(
            word("NE").rotations().unwrap(),
            vec![word("NE"), word("EN")]
        );
        assert_eq!(word("N").rotations().unwrap(), vec![word("N")]);
        let r = word("NEE").rotations().unwrap();
        assert_eq!(r, vec![word("NEE"), word("EEN"), word("ENE")]);
        assert_eq!(word("").rotations(), Err(PathError::EmptyWord));
        // periodic words deduplicate
        assert_eq!(word("NENE").rotations().unwrap().len(), 2);
    }

    #[test]
    fn ground_examples() {
        let g = word("NE").ground(Point::ORIGIN);
        assert_eq!(
            g.vertices,
            vec![Point::new(0, 0), Point::new(0, 1), Point::new(1, 1)]
        );
        assert!(g.simple);

        let g = word("NESW").ground(Point::ORIGIN);
        assert_eq!(g.end(), Point::ORIGIN);
        assert!(!g.simple);

        let g = word("NES").ground(Point::new(2, 2));
        assert_eq!(
            g.vertices,
            vec![
                Point::new(2, 2),
                Point::new(2, 3),
                Point::new(3, 3),
                Point::new(3, 2)
            ]
        );
        assert!(g.simple);
    }

    #[test]
    fn free_path_examples() {
        assert!(word("NN").is_free_path());
        assert!(!word("NESW").is_free_path());
        assert!(word("NES").is_free_path());
    }

    #[test]
    fn pumpable_examples() {
        assert_eq!(word("NE").is_pumpable(), Ok(true));
        assert_eq!(word("NES").is_pumpable(), Ok(false));
        assert_eq!(word("NNESSE").is_pumpable(), Ok(true));
        assert_eq!(word("").is_pumpable(), Err(PathError::EmptyWord));
    }

    #[test]
    fn nes_collides_at_one_one() {
        let g = word("NESNES").ground(Point::ORIGIN);
        assert_eq!(g.vertices[2], Point::new(1, 1));
        assert_eq!(g.vertices[4], Point::new(1, 1));
    }

    #[test]
    fn ray_simple_examples() {
        assert_eq!(is_ray_simple(&word("NES"), &word("E")), Ok(true));
        assert_eq!(
            is_ray_simple(&word(""), &word("NESW")),
            Err(PathError::ZeroPeriodDisplacement)
        );
        assert_eq!(is_ray_simple(&word("E"), &word("NWS")), Ok(false));
        assert_eq!(
            is_ray_simple(&word("E"), &word("")),
            Err(PathError::EmptyWord)
        );
    }

    #[test]
    fn ray_rejects_bad_periods() {
        assert_eq!(
            Ray::forward(word(""), word("")).unwrap_err(),
            PathError::EmptyWord
        );
        assert_eq!(
            Ray::forward(word("N"), word("EW")).unwrap_err(),
            PathError::ZeroPeriodDisplacement
        );
    }

    #[test]
    fn backward_ray_reads_outward_reversed() {
        let r = Ray::backward(word("N"), word("E")).unwrap();
        let steps: Vec<_> = r.outward_steps().take(3).collect();
        assert_eq!(steps, vec![Direction::S, Direction::W, Direction::W]);
    }

    #[test]
    fn rotate_and_reflect() {
        assert_eq!(word("NE").rotate90(), word("ES"));
        assert_eq!(word("NES").reflect_ns(), word("SEN"));
        let w = word("NWSE");
        assert_eq!(w.rotate90().rotate90().rotate90().rotate90(), w);
    }

    #[test]
    fn parse_reports_position() {
        assert_eq!(
            "NExS".parse::<Word>(),
            Err(PathError::InvalidDirection {
                position: 2,
                found: 'x'
            })
        );
    }

    #[test]
    fn normalize_shortens_transient() {
        assert_eq!(
            normalize_periodic(word("NE"), word("E")),
            (word("N"), word("E"))
        );
        assert_eq!(
            normalize_periodic(word("NNEE"), word("E")),
            (word("NN"), word("E"))
        );
        assert_eq!(
            normalize_periodic(word("SNE"), word("NE")),
            (word("S"), word("NE"))
        );
        assert_eq!(
            normalize_periodic(word("NES"), word("E")),
            (word("NES"), word("E"))
        );
    }

    #[test]
    fn verification_bound_formula() {
        // diam("NES") = 1, diam("E") = 1, ‖(1,0)‖ = 1 → ceil(3/1) + 2
        let r = Ray::forward(word("NES"), word("E")).unwrap();
        assert_eq!(r.verification_bound(), 5);
        // diam("") = 0, diam("EEN") = 2, ‖(2,1)‖ = 2 → ceil(4/2) + 2
        let r = Ray::forward(word(""), word("EEN")).unwrap();
        assert_eq!(r.verification_bound(), 4);
    }
}
