use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rand::Rng;

use crate::path::{Direction, Point};
use crate::window::Window;

use super::{Assembly, Tas, TileType};

/// Outcome of bounded growth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Growth {
    pub assembly: Assembly,
    /// Every tile type producible at each occupied site, sorted by name.
    pub multiplicity: BTreeMap<Point, Vec<TileType>>,
    /// Some tile could attach just outside the window.
    pub truncated: bool,
}

impl Growth {
    pub fn conflicts(&self) -> impl Iterator<Item = (Point, &[TileType])> + '_ {
        self.multiplicity
            .iter()
            .filter(|(_, v)| v.len() > 1)
            .map(|(p, v)| (*p, v.as_slice()))
    }

    pub fn is_confluent(&self) -> bool {
        self.conflicts().next().is_none()
    }
}

/// Maximal growth from the seed inside `window`.
///
/// Sites are filled breadth first, each with the alphabetically first tile
/// that binds. An alternative tile `t` at an occupied site `s` is
/// producible iff it binds to some occupied neighbour `n` that can be
/// reached from the seed without passing through `s`; when the system is
/// confluent within the window this is exactly the set of producible tiles.
pub fn grow_max(tas: &Tas, window: Window) -> Growth {
    grow_with(tas, window, |frontier: &mut VecDeque<Point>| {
        frontier.pop_front()
    })
}

/// As [`grow_max`] but processing the frontier in a random order.
pub fn grow_random_order<R: Rng + ?Sized>(tas: &Tas, window: Window, rng: &mut R) -> Growth {
    grow_with(tas, window, |frontier: &mut VecDeque<Point>| {
        if frontier.is_empty() {
            None
        } else {
            let i = rng.random_range(0..frontier.len());
            frontier.swap_remove_back(i)
        }
    })
}

fn grow_with(
    tas: &Tas,
    window: Window,
    mut next: impl FnMut(&mut VecDeque<Point>) -> Option<Point>,
) -> Growth {
    let mut a = Assembly::seeded(tas, window);
    let mut frontier = VecDeque::from([Point::ORIGIN]);
    while let Some(u) = next(&mut frontier) {
        let tu = a.get(u).expect("frontier sites are occupied").clone();
        for d in Direction::ALL {
            let s = u.step(d);
            if !window.contains(s) || a.is_occupied(s) {
                continue;
            }
            if let Some(t) = tas.binders(&tu, d).first() {
                a.place(s, (*t).clone()).expect("empty in-window site");
                frontier.push_back(s);
            }
        }
    }

    let graph = a.binding_graph();
    let dom = graph
        .dominators_from(Point::ORIGIN)
        .expect("seed is at the origin");
    let mut multiplicity = BTreeMap::new();
    let mut truncated = false;
    for (s, ts) in a.iter() {
        let mut set: Vec<TileType> = vec![ts.clone()];
        for d in Direction::ALL {
            let n = s.step(d);
            let Some(tn) = a.get(n) else {
                if !window.contains(n) && !tas.binders(ts, d).is_empty() {
                    truncated = true;
                }
                continue;
            };
            if s == Point::ORIGIN || dom.strictly_dominates(s, n) {
                continue;
            }
            for t in tas.binders(tn, d.opposite()) {
                if !set.contains(t) {
                    set.push(t.clone());
                }
            }
        }
        set.sort_by(|x, y| x.name().cmp(y.name()));
        multiplicity.insert(s, set);
    }
    Growth {
        assembly: a,
        multiplicity,
        truncated,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Confluent,
    Witness {
        site: Point,
        first: TileType,
        second: TileType,
    },
}

/// Confluence verdict, valid for the window it was computed in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub radius: i64,
    pub verdict: Verdict,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.verdict == Verdict::Confluent
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Confluent => write!(f, "confluent within radius {}", self.radius),
            Verdict::Witness {
                site,
                first,
                second,
            } => write!(
                f,
                "not confluent: site {} admits {} and {} (radius {})",
                site,
                first.name(),
                second.name(),
                self.radius
            ),
        }
    }
}

/// Nearest site (Manhattan distance, then `(y, x)`) with two producible
/// tile types, reported with the two alphabetically first ones.
pub fn check_confluence(tas: &Tas, window: Window) -> ConfluenceReport {
    let g = grow_max(tas, window);
    let verdict = g
        .conflicts()
        .min_by_key(|(p, _)| (p.manhattan(), p.y, p.x))
        .map_or(Verdict::Confluent, |(site, ts)| Verdict::Witness {
            site,
            first: ts[0].clone(),
            second: ts[1].clone(),
        });
    ConfluenceReport {
        radius: window.radius(),
        verdict,
    }
}
