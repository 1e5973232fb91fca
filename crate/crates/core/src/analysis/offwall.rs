use std::collections::BTreeSet;

use crate::cogrow::{cogrow_entering, CoGrowStatus};
use crate::path::{Direction, GroundedPath, Point, Ray, Vector2, Word};
use crate::regions::{BiInfinitePath, Hand, Side, SideMap};
use crate::tas::{Assembly, TileType};
use crate::window::Window;

use super::AnalysisError;

/// A path that leaves the wall `y = 0` at index `ell` and comes back to it
/// `delta` further east at index `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OffTheWallRecord {
    /// The path up to and including index `r`.
    pub path: GroundedPath,
    pub ell: usize,
    pub r: usize,
    pub x0: i64,
    pub delta: i64,
    pub height: i64,
    /// Sites between the wall and the excursion.
    pub surface: BTreeSet<Point>,
    pub area: usize,
    pub valuation: Option<(TileType, TileType)>,
}

impl OffTheWallRecord {
    /// The word of `path[ell..=r]`.
    pub fn excursion(&self) -> Word {
        Word::new(self.path.word.as_slice()[self.ell..self.r].to_vec())
    }
}

fn e() -> Word {
    Word::new(vec![Direction::E])
}

/// `ωE . path[ell] . excursion . Eω`
fn closure(anchor: Point, excursion: &Word) -> Result<BiInfinitePath, AnalysisError> {
    Ok(BiInfinitePath::from_words(
        anchor,
        e(),
        Word::empty(),
        excursion.clone(),
        e(),
    )?)
}

/// The record for the index pair `(ell, r)` of `path`, if it qualifies.
pub fn off_the_wall_record(
    path: &GroundedPath,
    ell: usize,
    r: usize,
    assembly: Option<&Assembly>,
) -> Option<OffTheWallRecord> {
    let v = &path.vertices;
    if ell < 1 || ell >= r || r >= v.len() || v[ell].y != 0 || v[r].y != 0 {
        return None;
    }
    let (x0, x1) = (v[ell].x, v[r].x);
    if x1 <= x0 {
        return None;
    }
    let truncated = &v[..=r];
    if truncated.iter().any(|p| p.y == 0 && (p.x < x0 || p.x > x1)) {
        return None;
    }
    let head = GroundedPath::new(path.anchor, path.word.prefix(r));
    let exc = Word::new(path.word.as_slice()[ell..r].to_vec());
    let window = Window::bounding(truncated.iter().copied().chain([Point::ORIGIN]), 1)?;
    let sides = SideMap::classify(&closure(v[ell], &exc).ok()?, window).ok()?;
    if !matches!(sides.side(Point::ORIGIN), Ok(Side::Right | Side::On)) {
        return None;
    }
    let surface: BTreeSet<Point> = window
        .points()
        .filter(|p| p.y >= 0 && sides.in_region(*p, Hand::Right))
        .filter(|p| p.y > 0 || (x0..=x1).contains(&p.x))
        .collect();
    let valuation = match assembly {
        Some(a) => Some((a.get(v[ell])?.clone(), a.get(v[r])?.clone())),
        None => None,
    };
    Some(OffTheWallRecord {
        height: v[ell..=r].iter().map(|p| p.y).max().unwrap_or(0),
        area: surface.len(),
        path: head,
        ell,
        r,
        x0,
        delta: x1 - x0,
        surface,
        valuation,
    })
}

/// Every qualifying `(ell, r)` pair, in order, up to `max_records`.
pub fn find_off_the_wall(
    path: &GroundedPath,
    max_records: usize,
    assembly: Option<&Assembly>,
) -> Vec<OffTheWallRecord> {
    let on_wall: Vec<usize> = (0..path.vertices.len())
        .filter(|&i| path.vertices[i].y == 0)
        .collect();
    let mut out = Vec::new();
    for (a, &ell) in on_wall.iter().enumerate() {
        for &r in &on_wall[a + 1..] {
            if out.len() >= max_records {
                return out;
            }
            if let Some(rec) = off_the_wall_record(path, ell, r, assembly) {
                out.push(rec);
            }
        }
    }
    out
}

/// Indices in `[ell, r]` of the west-most path vertex on each line
/// `y = 1..=height`.
pub fn points_of_interest(rec: &OffTheWallRecord) -> Vec<usize> {
    let v = &rec.path.vertices;
    (1..=rec.height)
        .filter_map(|h| {
            (0..v.len())
                .filter(|&i| v[i].y == h)
                .min_by_key(|&i| (v[i].x, i))
        })
        .filter(|&k| (rec.ell..=rec.r).contains(&k))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combination {
    pub g: Word,
    pub combined_p: GroundedPath,
    pub combined_q: GroundedPath,
}

/// Replace both excursions by the left co-grow of the two.
pub fn combine_off_the_wall(
    rec_p: &OffTheWallRecord,
    rec_q: &OffTheWallRecord,
) -> Result<Combination, AnalysisError> {
    if rec_p.delta != rec_q.delta {
        return Err(AnalysisError::WidthMismatch(rec_p.delta, rec_q.delta));
    }
    if let (Some(a), Some(b)) = (&rec_p.valuation, &rec_q.valuation) {
        if a != b {
            return Err(AnalysisError::ValuationMismatch);
        }
    }
    let (p, q) = (rec_p.excursion(), rec_q.excursion());
    let reach = p
        .ground(Point::ORIGIN)
        .vertices
        .into_iter()
        .chain(q.ground(Point::ORIGIN).vertices)
        .map(|v| v.x.abs().max(v.y.abs()))
        .max()
        .unwrap_or(0);
    let window = Window::new(reach + 3)?;
    let back = Ray::backward(Word::empty(), e())?;
    let trace = cogrow_entering(
        Hand::Left,
        &back,
        &Ray::forward(p, e())?,
        &back,
        &Ray::forward(q, e())?,
        window,
        window.len(),
        Direction::E,
    )?;
    if trace.status == CoGrowStatus::Terminated {
        return Err(AnalysisError::CombinationFailed(format!(
            "terminated after {}",
            trace.word
        )));
    }
    let target = Vector2::new(rec_p.delta, 0);
    let w = trace.word.as_slice();
    let cut = (0..=w.len())
        .find(|&i| {
            Word::new(w[..i].to_vec()).displacement() == target
                && w[i..].iter().all(|&d| d == Direction::E)
                && i < w.len()
        })
        .ok_or_else(|| AnalysisError::CombinationFailed(trace.word.to_string()))?;
    let g = Word::new(w[..cut].to_vec());
    let splice = |rec: &OffTheWallRecord| {
        GroundedPath::new(rec.path.anchor, rec.path.word.prefix(rec.ell).concat(&g))
    };
    Ok(Combination {
        combined_p: splice(rec_p),
        combined_q: splice(rec_q),
        g,
    })
}

/// Index pairs `(w, e)` where `w` starts a stretch from the west wall ray to
/// the east wall ray `e`. `W` holds the indices `ℓ ≥ 1` on the west ray
/// whose westward ray meets the path only at indices `≥ ℓ`; `E` likewise.
pub fn ew_index_pairs(path: &GroundedPath) -> Vec<(usize, usize)> {
    let v = &path.vertices;
    let qualifies = |l: usize, west: bool| {
        let p = v[l];
        let on_ray = |q: &Point| q.y == p.y && if west { q.x <= p.x } else { q.x >= p.x };
        p.y == 0
            && if west { p.x <= 0 } else { p.x >= 0 }
            && v.iter().enumerate().all(|(i, q)| !on_ray(q) || i >= l)
    };
    let marks: Vec<(usize, bool)> = (1..v.len())
        .filter_map(|i| {
            if qualifies(i, true) {
                Some((i, true))
            } else if qualifies(i, false) {
                Some((i, false))
            } else {
                None
            }
        })
        .collect();
    marks
        .windows(2)
        .filter(|m| m[0].1 && !m[1].1)
        .map(|m| (m[0].0, m[1].0))
        .collect()
}
