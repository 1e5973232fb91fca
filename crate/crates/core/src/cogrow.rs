//! Co-grow: superposing two bi-infinite paths that share a start.
//!
//! Starting at the origin, the co-grow first takes the common first step of
//! `f` and `f′`, then repeatedly turns as far to the chosen hand as it can
//! while following an edge of `f` or `f′` and staying inside the
//! intersection of the two same-handed regions.

use std::fmt;

use thiserror::Error;

use crate::path::{normalize_periodic, Direction, Point, Ray, Word};
use crate::regions::{BiInfinitePath, Hand, RegionError, SideMap, WindowedPath};
use crate::window::Window;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoGrowError {
    #[error("f and f2 start with different directions")]
    MismatchedStart,
    #[error("input path revisits {0}")]
    SimplicityViolation(Point),
    #[error(transparent)]
    Region(RegionError),
}

impl From<RegionError> for CoGrowError {
    fn from(e: RegionError) -> Self {
        match e {
            RegionError::SimplicityViolation(p) => CoGrowError::SimplicityViolation(p),
            other => CoGrowError::Region(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoGrowStatus {
    /// No direction qualifies.
    Terminated,
    ReachedStepBound,
    /// The preferred qualifying edge leaves the window.
    ReachedWindowBoundary,
    Periodic {
        transient: Word,
        period: Word,
    },
}

impl fmt::Display for CoGrowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoGrowStatus::Terminated => f.write_str("terminated"),
            CoGrowStatus::ReachedStepBound => f.write_str("step-bound"),
            CoGrowStatus::ReachedWindowBoundary => f.write_str("window-boundary"),
            CoGrowStatus::Periodic { transient, period } => {
                write!(f, "periodic transient={transient} period={period}")
            }
        }
    }
}

/// Which input path an output edge came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    F,
    F2,
    Both,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::F => "f",
            Provenance::F2 => "f2",
            Provenance::Both => "f,f2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Residue {
    Transient(i64),
    Tail(usize),
}

type Key = (Option<Direction>, Option<Residue>, Option<Residue>);

#[derive(Debug, Clone)]
pub struct CoGrowResult {
    pub word: Word,
    pub status: CoGrowStatus,
    pub steps: usize,
    /// Visited vertices, starting at the origin.
    pub vertices: Vec<Point>,
    pub f_indices: Vec<i64>,
    pub f2_indices: Vec<i64>,
    pub provenance: Vec<Provenance>,
    tokens: Vec<(Direction, Key)>,
}

struct Track<'a> {
    path: &'a BiInfinitePath,
    grounded: &'a WindowedPath,
    transient_len: i64,
    period_len: usize,
}

impl Track<'_> {
    fn forward_index(&self, p: Point) -> Option<i64> {
        self.grounded.index_of(p).filter(|&i| i >= 0)
    }

    fn has_edge(&self, from: Point, d: Direction) -> bool {
        let Some(i) = self.forward_index(from) else {
            return false;
        };
        self.path.step(i) == d || (i >= 1 && self.path.step(i - 1) == d.opposite())
    }

    fn residue(&self, p: Point) -> Option<Residue> {
        let i = self.forward_index(p)?;
        Some(if i < self.transient_len {
            Residue::Transient(i)
        } else {
            Residue::Tail((i - self.transient_len) as usize % self.period_len)
        })
    }
}

/// Candidate order relative to the incoming step.
fn preference(hand: Hand, incoming: Direction) -> [Direction; 4] {
    [
        hand.turn(incoming),
        incoming,
        hand.opposite().turn(incoming),
        incoming.opposite(),
    ]
}

/// Co-grow of `b.O.f` and `b2.O.f2` on the given hand.
pub fn cogrow(
    side: Hand,
    b: &Ray,
    f: &Ray,
    b2: &Ray,
    f2: &Ray,
    window: Window,
    max_steps: usize,
) -> Result<CoGrowResult, CoGrowError> {
    if f2.outward_step(0) != f.outward_step(0) {
        return Err(CoGrowError::MismatchedStart);
    }
    run(side, b, f, b2, f2, window, max_steps, None)
}

/// Like [`cogrow`], but the first step is chosen by the hand rule as if the
/// walk had arrived at the origin heading `entry`; `f` and `f2` may then
/// start differently.
#[allow(clippy::too_many_arguments)]
pub(crate) fn cogrow_entering(
    side: Hand,
    b: &Ray,
    f: &Ray,
    b2: &Ray,
    f2: &Ray,
    window: Window,
    max_steps: usize,
    entry: Direction,
) -> Result<CoGrowResult, CoGrowError> {
    run(side, b, f, b2, f2, window, max_steps, Some(entry))
}

#[allow(clippy::too_many_arguments)]
fn run(
    side: Hand,
    b: &Ray,
    f: &Ray,
    b2: &Ray,
    f2: &Ray,
    window: Window,
    max_steps: usize,
    entry: Option<Direction>,
) -> Result<CoGrowResult, CoGrowError> {
    let first = f.outward_step(0);
    let p1 = BiInfinitePath::new(Point::ORIGIN, b.clone(), f.clone())?;
    let p2 = BiInfinitePath::new(Point::ORIGIN, b2.clone(), f2.clone())?;
    let m1 = SideMap::classify(&p1, window)?;
    let m2 = SideMap::classify(&p2, window)?;
    let t1 = Track {
        path: &p1,
        grounded: m1.path(),
        transient_len: f.transient().len() as i64,
        period_len: f.period().len(),
    };
    let t2 = Track {
        path: &p2,
        grounded: m2.path(),
        transient_len: f2.transient().len() as i64,
        period_len: f2.period().len(),
    };

    let mut visited = std::collections::HashSet::from([Point::ORIGIN]);
    let mut res = CoGrowResult {
        word: Word::empty(),
        status: CoGrowStatus::ReachedStepBound,
        steps: 0,
        vertices: vec![Point::ORIGIN],
        f_indices: vec![0],
        f2_indices: vec![0],
        provenance: Vec::new(),
        tokens: Vec::new(),
    };
    let key =
        |p: Point, incoming: Option<Direction>| -> Key { (incoming, t1.residue(p), t2.residue(p)) };

    let mut cur = Point::ORIGIN;
    let mut incoming: Option<Direction> = entry;
    while res.steps < max_steps {
        let chosen = match incoming {
            None => Some(first),
            Some(din) => {
                let mut pick = None;
                for d in preference(side, din) {
                    let on_f = t1.has_edge(cur, d);
                    let on_f2 = t2.has_edge(cur, d);
                    if !(on_f || on_f2) {
                        continue;
                    }
                    let next = cur.step(d);
                    if !window.contains(next) {
                        res.status = CoGrowStatus::ReachedWindowBoundary;
                        break;
                    }
                    if !visited.contains(&next)
                        && m1.in_region(next, side)
                        && m2.in_region(next, side)
                        && m1.edge_in_region(cur, next, side)
                        && m2.edge_in_region(cur, next, side)
                    {
                        pick = Some(d);
                        break;
                    }
                }
                if res.status == CoGrowStatus::ReachedWindowBoundary {
                    break;
                }
                pick
            }
        };
        let Some(d) = chosen else {
            res.status = CoGrowStatus::Terminated;
            break;
        };
        let next = cur.step(d);
        if !window.contains(next) {
            res.status = CoGrowStatus::ReachedWindowBoundary;
            break;
        }
        let prov = match (t1.has_edge(cur, d), t2.has_edge(cur, d)) {
            (true, true) => Provenance::Both,
            (true, false) => Provenance::F,
            _ => Provenance::F2,
        };
        res.tokens.push((d, key(cur, incoming)));
        res.word.push(d);
        res.provenance.push(prov);
        res.steps += 1;
        visited.insert(next);
        res.vertices.push(next);
        if let Some(i) = t1.forward_index(next) {
            res.f_indices.push(i);
        }
        if let Some(i) = t2.forward_index(next) {
            res.f2_indices.push(i);
        }
        cur = next;
        incoming = Some(d);
    }
    if res.status != CoGrowStatus::Terminated {
        if let Some((transient, period)) = detect_period(&res) {
            res.status = CoGrowStatus::Periodic { transient, period };
        }
    }
    Ok(res)
}

/// Look for a suffix of the trace in which the joint state (incoming
/// direction and position within each ray's period) repeats with some
/// period `L`, seen at least twice. The shortest such `L` wins.
pub fn detect_period(trace: &CoGrowResult) -> Option<(Word, Word)> {
    let t = &trace.tokens;
    let n = t.len();
    for l in 1..=n / 2 {
        // longest L-periodic suffix
        let mut start = n - l;
        while start > 0 && t[start - 1] == t[start - 1 + l] {
            start -= 1;
        }
        if n - start >= 2 * l {
            let m = trace.word.prefix(start);
            let p = Word::new(trace.word.as_slice()[start..start + l].to_vec());
            return Some(normalize_periodic(m, p));
        }
    }
    None
}
