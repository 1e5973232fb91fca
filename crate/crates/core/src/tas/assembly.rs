use std::collections::{BTreeMap, HashMap};

use petgraph::algo::dominators::{simple_fast, Dominators};
use petgraph::graph::{NodeIndex, UnGraph};

use crate::path::{is_ray_simple, Direction, Point, Word};
use crate::window::Window;

use super::{Tas, TasError, TileType};

/// Partial placement of tiles on the points of a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assembly {
    window: Window,
    tiles: BTreeMap<Point, TileType>,
}

impl Assembly {
    pub fn new(window: Window) -> Self {
        Assembly {
            window,
            tiles: BTreeMap::new(),
        }
    }

    /// Just the seed of `tas`, at the origin.
    pub fn seeded(tas: &Tas, window: Window) -> Self {
        let mut a = Assembly::new(window);
        a.tiles.insert(Point::ORIGIN, tas.seed().clone());
        a
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn get(&self, p: Point) -> Option<&TileType> {
        self.tiles.get(&p)
    }

    pub fn is_occupied(&self, p: Point) -> bool {
        self.tiles.contains_key(&p)
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Occupied sites with their tiles, in `(x, y)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Point, &TileType)> + '_ {
        self.tiles.iter().map(|(p, t)| (*p, t))
    }

    pub fn place(&mut self, p: Point, t: TileType) -> Result<(), TasError> {
        if !self.window.contains(p) {
            return Err(TasError::SiteOutsideWindow(p));
        }
        if self.tiles.contains_key(&p) {
            return Err(TasError::SiteOccupied(p));
        }
        self.tiles.insert(p, t);
        Ok(())
    }

    /// Whether the tiles at `p` and `p + d` share a bond.
    pub fn bonded(&self, p: Point, d: Direction) -> bool {
        match (self.get(p), self.get(p.step(d))) {
            (Some(a), Some(b)) => a.binds_to(d, b),
            _ => false,
        }
    }

    /// Tile types that could attach at the empty `site` by one matching
    /// glue, sorted by name.
    pub fn attachable<'t>(&self, tas: &'t Tas, site: Point) -> Result<Vec<&'t TileType>, TasError> {
        if !self.window.contains(site) {
            return Err(TasError::SiteOutsideWindow(site));
        }
        if self.is_occupied(site) {
            return Err(TasError::SiteOccupied(site));
        }
        let mut out: Vec<&TileType> = tas
            .tiles()
            .iter()
            .filter(|t| {
                Direction::ALL
                    .into_iter()
                    .any(|d| self.get(site.step(d)).is_some_and(|n| t.binds_to(d, n)))
            })
            .collect();
        out.sort_by(|a, b| a.name().cmp(b.name()));
        Ok(out)
    }

    pub fn binding_graph(&self) -> BindingGraph {
        BindingGraph::new(self)
    }

    /// Stable at temperature 1 means a connected binding graph.
    pub fn is_stable(&self) -> bool {
        self.binding_graph().is_connected()
    }
}

/// Occupied sites joined where abutting glues match.
#[derive(Debug, Clone)]
pub struct BindingGraph {
    graph: UnGraph<Point, ()>,
    index: HashMap<Point, NodeIndex>,
}

impl BindingGraph {
    fn new(a: &Assembly) -> Self {
        let mut graph = UnGraph::new_undirected();
        let mut index = HashMap::new();
        for (p, _) in a.iter() {
            index.insert(p, graph.add_node(p));
        }
        for (p, _) in a.iter() {
            for d in [Direction::E, Direction::N] {
                if a.bonded(p, d) {
                    graph.add_edge(index[&p], index[&p.step(d)], ());
                }
            }
        }
        BindingGraph { graph, index }
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.index.contains_key(&p)
    }

    pub fn has_edge(&self, p: Point, q: Point) -> bool {
        match (self.index.get(&p), self.index.get(&q)) {
            (Some(&a), Some(&b)) => self.graph.contains_edge(a, b),
            _ => false,
        }
    }

    pub fn neighbors(&self, p: Point) -> impl Iterator<Item = Point> + '_ {
        self.index
            .get(&p)
            .into_iter()
            .flat_map(move |&i| self.graph.neighbors(i).map(move |j| self.graph[j]))
    }

    /// Edges as ordered point pairs, sorted.
    pub fn edges(&self) -> Vec<(Point, Point)> {
        let mut v: Vec<(Point, Point)> = self
            .graph
            .edge_indices()
            .filter_map(|e| self.graph.edge_endpoints(e))
            .map(|(a, b)| {
                let (p, q) = (self.graph[a], self.graph[b]);
                if p <= q {
                    (p, q)
                } else {
                    (q, p)
                }
            })
            .collect();
        v.sort();
        v
    }

    /// Adjacency as a plain map, for code that wants no graph types.
    pub fn adjacency(&self) -> HashMap<Point, Vec<Point>> {
        self.index
            .keys()
            .map(|&p| {
                let mut n: Vec<Point> = self.neighbors(p).collect();
                n.sort();
                (p, n)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        petgraph::algo::connected_components(&self.graph) <= 1
    }

    pub(crate) fn dominators_from(&self, root: Point) -> Option<DominatorTree<'_>> {
        let r = *self.index.get(&root)?;
        Some(DominatorTree {
            graph: self,
            dom: simple_fast(&self.graph, r),
        })
    }
}

pub(crate) struct DominatorTree<'g> {
    graph: &'g BindingGraph,
    dom: Dominators<NodeIndex>,
}

impl DominatorTree<'_> {
    pub fn reachable(&self, p: Point) -> bool {
        self.graph
            .index
            .get(&p)
            .is_some_and(|&i| self.dom.immediate_dominator(i).is_some() || self.dom.root() == i)
    }

    /// Proper dominators of `p`, or `None` if unreachable.
    pub fn strict_dominators(&self, p: Point) -> Option<Vec<Point>> {
        let &i = self.graph.index.get(&p)?;
        let it = self.dom.strict_dominators(i)?;
        Some(it.map(|j| self.graph.graph[j]).collect())
    }

    /// Whether `d` lies on every root path to `p` (and `d != p`).
    pub fn strictly_dominates(&self, d: Point, p: Point) -> bool {
        self.strict_dominators(p).is_some_and(|v| v.contains(&d))
    }
}

/// Tiles repeat along `anchor.m.p^depth`: for every `i ≤ depth` and every
/// nonempty prefix `q` of `p`, the site `anchor + V(m) + i·V(p) + V(q)` is
/// occupied by the same tile type as `anchor + V(m) + V(q)`.
pub fn verify_periodic_tiles(
    a: &Assembly,
    anchor: Point,
    m: &Word,
    p: &Word,
    depth: usize,
) -> Result<bool, TasError> {
    if !is_ray_simple(m, p)? {
        return Err(TasError::RayNotSimple);
    }
    let base = anchor + m.displacement();
    let vp = p.displacement();
    for i in 0..=depth as i64 {
        for k in 1..=p.len() {
            let site = base + vp * i + p.prefix(k).displacement();
            if !a.window().contains(site) {
                return Err(TasError::WindowExceeded(site));
            }
        }
    }
    let mut q = base;
    for d in p.iter() {
        q = q.step(d);
        let Some(reference) = a.get(q) else {
            return Ok(false);
        };
        for i in 1..=depth as i64 {
            if a.get(q + vp * i) != Some(reference) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
