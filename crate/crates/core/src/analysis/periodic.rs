use std::fmt;

use crate::path::{is_ray_simple, Direction, Point, Word};
use crate::tas::{
    check_confluence, grow_max, verify_periodic_tiles, Assembly, BindingGraph, Tas, TileType,
    Verdict,
};
use crate::window::Window;

use super::{ray_in_window, AnalysisError};

/// `origin.m.p^ω` is an assembly path of the maximal assembly whose tiles
/// repeat with the period, checked to `verified_depth` repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicCertificate {
    pub transient: Word,
    pub period: Word,
    pub verified_depth: usize,
    /// Tiles at `V(m) + V(p[..s])` for `s < |p|`.
    pub tile_period: Vec<TileType>,
    pub radius: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodicOutcome {
    Found(PeriodicCertificate),
    /// Nothing can attach outside the window: the maximal assembly is finite.
    Finite,
    /// Infinite, but no candidate fits the window and search bounds.
    NotFound,
}

impl fmt::Display for PeriodicCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tiles: Vec<&str> = self.tile_period.iter().map(TileType::name).collect();
        write!(
            f,
            "m={} p={} depth={} tiles={} radius={}",
            self.transient,
            self.period,
            self.verified_depth,
            tiles.join(","),
            self.radius
        )
    }
}

/// Word order used to break ties between candidates of equal length.
const ORDER: [Direction; 4] = [Direction::E, Direction::N, Direction::S, Direction::W];

/// Search the maximal assembly for `origin.m.p^ω` with the same tile at the
/// start and end of `p`, `p` pumpable, the ray simple and bonded, and the
/// ray clear of every site that all seed paths to `V(m)` go through.
/// Shorter transients win, then shorter periods, then word order.
pub fn find_periodic_assembly_path(
    tas: &Tas,
    window: Window,
    max_transient: usize,
    max_period: usize,
) -> Result<PeriodicOutcome, AnalysisError> {
    if let Verdict::Witness {
        site,
        first,
        second,
    } = check_confluence(tas, window).verdict
    {
        return Err(AnalysisError::NotConfluent {
            site,
            first: first.name().to_string(),
            second: second.name().to_string(),
        });
    }
    let growth = grow_max(tas, window);
    if !growth.truncated {
        return Ok(PeriodicOutcome::Finite);
    }
    let a = &growth.assembly;
    let graph = a.binding_graph();
    let dom = graph
        .dominators_from(Point::ORIGIN)
        .expect("the seed is placed");

    for mlen in 0..=max_transient {
        let transients = walks(&graph, Point::ORIGIN, mlen, &[]);
        for plen in 1..=max_period {
            for (m, mverts) in &transients {
                let base = *mverts.last().expect("walks start somewhere");
                let tile = a.get(base).expect("walks stay on tiles");
                let blocked = dom.strict_dominators(base).unwrap_or_default();
                for (p, pverts) in walks(&graph, base, plen, mverts) {
                    if a.get(*pverts.last().expect("nonempty")) != Some(tile) {
                        continue;
                    }
                    if !matches!(p.is_pumpable(), Ok(true))
                        || !matches!(is_ray_simple(m, &p), Ok(true))
                    {
                        continue;
                    }
                    let ray = ray_in_window(base, &Word::empty(), &p, &window);
                    let bonded = ray
                        .windows(2)
                        .all(|w| w[1].0 != w[0].0 + 1 || graph.has_edge(w[0].1, w[1].1));
                    if !bonded || ray.iter().any(|(_, v)| blocked.contains(v)) {
                        continue;
                    }
                    let depth = max_depth(a, m, &p);
                    if depth == 0 {
                        continue;
                    }
                    let tile_period = (0..p.len())
                        .map(|s| {
                            a.get(base + p.prefix(s).displacement())
                                .expect("on the walk")
                                .clone()
                        })
                        .collect();
                    return Ok(PeriodicOutcome::Found(PeriodicCertificate {
                        transient: m.clone(),
                        period: p,
                        verified_depth: depth,
                        tile_period,
                        radius: window.radius(),
                    }));
                }
            }
        }
    }
    Ok(PeriodicOutcome::NotFound)
}

fn max_depth(a: &Assembly, m: &Word, p: &Word) -> usize {
    let mut d = 0;
    while let Ok(true) = verify_periodic_tiles(a, Point::ORIGIN, m, p, d + 1) {
        d += 1;
    }
    d
}

/// Simple walks of exactly `len` bonded steps from `start` avoiding
/// `avoid`, in word order, each with its vertices.
fn walks(g: &BindingGraph, start: Point, len: usize, avoid: &[Point]) -> Vec<(Word, Vec<Point>)> {
    fn go(
        g: &BindingGraph,
        len: usize,
        avoid: &[Point],
        word: &mut Vec<Direction>,
        verts: &mut Vec<Point>,
        out: &mut Vec<(Word, Vec<Point>)>,
    ) {
        if word.len() == len {
            out.push((Word::new(word.clone()), verts.clone()));
            return;
        }
        let cur = *verts.last().expect("nonempty");
        for d in ORDER {
            let n = cur.step(d);
            if g.has_edge(cur, n) && !verts.contains(&n) && !avoid.contains(&n) {
                word.push(d);
                verts.push(n);
                go(g, len, avoid, word, verts, out);
                word.pop();
                verts.pop();
            }
        }
    }
    let mut out = Vec::new();
    let avoid: Vec<Point> = avoid.iter().copied().filter(|&p| p != start).collect();
    go(g, len, &avoid, &mut Vec::new(), &mut vec![start], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::word;

    #[test]
    fn comb_certificate() {
        let w = Window::new(8).unwrap();
        let PeriodicOutcome::Found(c) = find_periodic_assembly_path(&Tas::comb(), w, 4, 4).unwrap()
        else {
            panic!("comb is infinite");
        };
        assert_eq!(
            (c.transient.clone(), c.period.clone()),
            (word("S"), word("EE"))
        );
        assert!(c.verified_depth >= 3);
        let names: Vec<&str> = c.tile_period.iter().map(TileType::name).collect();
        assert_eq!(names, ["A", "B"]);
    }

    #[test]
    fn seed_only_is_finite() {
        let tas = Tas::new(
            vec![TileType::with_glues("X", &[(Direction::N, "q")])],
            TileType::with_glues("σ", &[(Direction::S, "s")]),
        )
        .unwrap();
        let w = Window::new(4).unwrap();
        assert_eq!(
            find_periodic_assembly_path(&tas, w, 3, 3).unwrap(),
            PeriodicOutcome::Finite
        );
    }

    #[test]
    fn single_tile_runs_east() {
        use Direction::*;
        let tas = Tas::new(
            vec![TileType::with_glues(
                "X",
                &[(N, "g"), (E, "g"), (S, "g"), (W, "g")],
            )],
            TileType::with_glues("σ", &[(S, "g")]),
        )
        .unwrap();
        let w = Window::new(5).unwrap();
        let PeriodicOutcome::Found(c) = find_periodic_assembly_path(&tas, w, 3, 3).unwrap() else {
            panic!("expected a certificate");
        };
        assert_eq!(c.period, word("E"));
        assert!(c.verified_depth >= 1);
    }

    #[test]
    fn variant_is_rejected() {
        let tas = crate::tas::parse_tas(
            "seed σ N=c S=s\ntile A N=s E=b S=c W=a\ntile B E=a S=d W=b\ntile C N=c S=c\ntile D N=d S=d\n",
        )
        .unwrap();
        let e = find_periodic_assembly_path(&tas, Window::new(4).unwrap(), 2, 2);
        assert!(matches!(e, Err(AnalysisError::NotConfluent { .. })));
    }
}
