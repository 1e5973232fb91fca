//! Temperature-1 abstract tile assembly: tile types, systems, assemblies and
//! bounded growth.

mod assembly;
mod grow;
mod parse;
mod render;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::path::{Direction, Point};

pub use assembly::{verify_periodic_tiles, Assembly, BindingGraph};
pub use grow::{check_confluence, grow_max, grow_random_order, ConfluenceReport, Growth, Verdict};
pub use parse::parse_tas;
pub use render::{render_ascii, render_svg, SvgOverlay};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TasError {
    #[error("tile name {0:?} is used twice")]
    DuplicateTileName(String),
    #[error("more than one seed declared")]
    DuplicateSeed,
    #[error("no seed declared")]
    MissingSeed,
    #[error("line {line}, column {column}: {message}")]
    SyntaxError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("site {0} is already occupied")]
    SiteOccupied(Point),
    #[error("site {0} is outside the window")]
    SiteOutsideWindow(Point),
    #[error("site {0} leaves the window")]
    WindowExceeded(Point),
    #[error("ray m.p^w is not simple")]
    RayNotSimple,
    #[error(transparent)]
    Path(#[from] crate::path::PathError),
}

/// A glue label. `Null` matches nothing, not even itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Glue {
    #[default]
    Null,
    Named(Arc<str>),
}

impl Glue {
    pub fn named(s: &str) -> Glue {
        Glue::Named(Arc::from(s))
    }

    pub fn binds(&self, other: &Glue) -> bool {
        matches!((self, other), (Glue::Named(a), Glue::Named(b)) if a == b)
    }

    pub fn is_null(&self) -> bool {
        matches!(self, Glue::Null)
    }
}

impl fmt::Display for Glue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Glue::Null => f.write_str("-"),
            Glue::Named(s) => f.write_str(s),
        }
    }
}

/// Four-sided tile, glues indexed N, E, S, W.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TileType {
    name: Arc<str>,
    glues: [Glue; 4],
}

impl TileType {
    pub fn new(name: &str, glues: [Glue; 4]) -> Self {
        TileType {
            name: Arc::from(name),
            glues,
        }
    }

    /// Build from `(direction, glue-name)` pairs; unspecified sides are Null.
    pub fn with_glues(name: &str, sides: &[(Direction, &str)]) -> Self {
        let mut glues: [Glue; 4] = Default::default();
        for &(d, g) in sides {
            glues[d.index()] = Glue::named(g);
        }
        TileType::new(name, glues)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn glue(&self, d: Direction) -> &Glue {
        &self.glues[d.index()]
    }

    /// Whether `self` at `p` and `other` at `p + d` share a bond.
    pub fn binds_to(&self, d: Direction, other: &TileType) -> bool {
        self.glue(d).binds(other.glue(d.opposite()))
    }

    pub fn rotate90(&self) -> TileType {
        let mut glues: [Glue; 4] = Default::default();
        for d in Direction::ALL {
            glues[d.rotate_cw().index()] = self.glue(d).clone();
        }
        TileType {
            name: self.name.clone(),
            glues,
        }
    }

    pub fn reflect_ns(&self) -> TileType {
        let mut glues: [Glue; 4] = Default::default();
        for d in Direction::ALL {
            glues[d.reflect_ns().index()] = self.glue(d).clone();
        }
        TileType {
            name: self.name.clone(),
            glues,
        }
    }
}

impl fmt::Display for TileType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for d in Direction::ALL {
            write!(f, " {}={}", d, self.glue(d))?;
        }
        Ok(())
    }
}

/// Tile set plus a seed that is not a member of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tas {
    tiles: Vec<TileType>,
    seed: TileType,
}

impl Tas {
    pub fn new(tiles: Vec<TileType>, seed: TileType) -> Result<Self, TasError> {
        let mut names = std::collections::HashSet::new();
        for t in tiles.iter().chain(std::iter::once(&seed)) {
            if !names.insert(t.name()) {
                return Err(TasError::DuplicateTileName(t.name().to_string()));
            }
        }
        Ok(Tas { tiles, seed })
    }

    pub fn tiles(&self) -> &[TileType] {
        &self.tiles
    }

    pub fn seed(&self) -> &TileType {
        &self.seed
    }

    /// Tiles that can sit at `p + d` bound to `t` at `p`, sorted by name.
    pub fn binders(&self, t: &TileType, d: Direction) -> Vec<&TileType> {
        let mut v: Vec<&TileType> = self.tiles.iter().filter(|u| t.binds_to(d, u)).collect();
        v.sort_by(|a, b| a.name().cmp(b.name()));
        v
    }

    pub fn rotate90(&self) -> Tas {
        Tas {
            tiles: self.tiles.iter().map(TileType::rotate90).collect(),
            seed: self.seed.rotate90(),
        }
    }

    pub fn reflect_ns(&self) -> Tas {
        Tas {
            tiles: self.tiles.iter().map(TileType::reflect_ns).collect(),
            seed: self.seed.reflect_ns(),
        }
    }

    /// The four-tile comb system and its seed.
    pub fn comb() -> Tas {
        use Direction::*;
        Tas::new(
            vec![
                TileType::with_glues("A", &[(N, "s"), (E, "b"), (S, "c"), (W, "a")]),
                TileType::with_glues("B", &[(E, "a"), (S, "d"), (W, "b")]),
                TileType::with_glues("C", &[(N, "c"), (S, "c")]),
                TileType::with_glues("D", &[(N, "d"), (S, "d")]),
            ],
            TileType::with_glues("σ", &[(S, "s")]),
        )
        .expect("comb tiles are distinct")
    }
}

pub fn rotate_tas(tas: &Tas) -> Tas {
    tas.rotate90()
}

pub fn reflect_tas_ns(tas: &Tas) -> Tas {
    tas.reflect_ns()
}

impl fmt::Display for Tas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for t in &self.tiles {
            writeln!(f, "tile {t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_never_binds() {
        assert!(!Glue::Null.binds(&Glue::Null));
        assert!(Glue::named("g").binds(&Glue::named("g")));
        assert!(!Glue::named("g").binds(&Glue::named("h")));
    }

    #[test]
    fn rotate_moves_glues_clockwise() {
        let comb = Tas::comb();
        let a = comb.rotate90().tiles()[0].clone();
        assert_eq!(a.glue(Direction::E), &Glue::named("s"));
        assert_eq!(a.glue(Direction::S), &Glue::named("b"));
    }

    #[test]
    fn symmetry_orders() {
        let comb = Tas::comb();
        assert_eq!(comb.reflect_ns().reflect_ns(), comb);
        assert_eq!(comb.rotate90().rotate90().rotate90().rotate90(), comb);
    }

    #[test]
    fn seed_name_must_be_fresh() {
        let t = TileType::with_glues("A", &[]);
        assert_eq!(
            Tas::new(vec![t.clone()], t),
            Err(TasError::DuplicateTileName("A".into()))
        );
    }
}
