use std::collections::BTreeSet;

use crate::path::{Point, Word};
use crate::tas::{grow_max, Assembly, Tas};

use super::AnalysisError;

/// Sites whose removal leaves `site` reachable from the origin in the
/// binding graph, plus `site` itself. An unoccupied site gives the whole
/// window; an unreachable one only itself.
pub fn non_causal(a: &Assembly, site: Point) -> BTreeSet<Point> {
    let window = a.window();
    if !a.is_occupied(site) {
        return window.points().collect();
    }
    let graph = a.binding_graph();
    let Some(dom) = graph.dominators_from(Point::ORIGIN) else {
        return BTreeSet::from([site]);
    };
    if !dom.reachable(site) {
        return BTreeSet::from([site]);
    }
    let blocked: BTreeSet<Point> = dom
        .strict_dominators(site)
        .unwrap_or_default()
        .into_iter()
        .collect();
    window.points().filter(|p| !blocked.contains(p)).collect()
}

/// Place tiles along `site.p`, each the first tile binding to its
/// predecessor, after checking that the whole route is non-causal for
/// `site`. The placements are then compared against maximal growth.
pub fn verified_extend(
    a: &Assembly,
    tas: &Tas,
    site: Point,
    p: &Word,
) -> Result<Assembly, AnalysisError> {
    if p.is_empty() {
        return Ok(a.clone());
    }
    let mut cur = a
        .get(site)
        .ok_or(AnalysisError::SiteUnoccupied(site))?
        .clone();
    let nc = non_causal(a, site);
    let route = p.ground(site);
    if let Some(&bad) = route.vertices.iter().find(|v| !nc.contains(v)) {
        return Err(AnalysisError::NonCausalViolation(bad));
    }

    let mut out = a.clone();
    let mut pos = site;
    for d in p.iter() {
        let next = pos.step(d);
        cur = match out.get(next) {
            Some(t) if cur.binds_to(d, t) => t.clone(),
            Some(_) => return Err(AnalysisError::GlueMismatch(next)),
            None => {
                let t = tas
                    .binders(&cur, d)
                    .first()
                    .map(|t| (*t).clone())
                    .ok_or(AnalysisError::GlueMismatch(next))?;
                out.place(next, t.clone())?;
                t
            }
        };
        pos = next;
    }

    let max = grow_max(tas, a.window()).assembly;
    for &v in &route.vertices {
        if out.get(v) != max.get(v) {
            return Err(AnalysisError::ExtensionDisagrees(v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::non_causal_by_deletion;
    use crate::path::word;
    use crate::window::Window;

    fn comb(r: i64) -> Assembly {
        grow_max(&Tas::comb(), Window::new(r).unwrap()).assembly
    }

    #[test]
    fn comb_examples() {
        let a = comb(4);
        let nc = non_causal(&a, Point::new(1, -1));
        assert!(nc.contains(&Point::new(2, -1)));
        assert!(!nc.contains(&Point::new(0, -1)));
        assert!(!nc.contains(&Point::ORIGIN));
        assert!(nc.contains(&Point::new(1, -1)));
        assert_eq!(non_causal(&a, Point::new(3, 3)).len(), a.window().len());
    }

    #[test]
    fn matches_deletion_oracle() {
        let a = comb(3);
        let g = a.binding_graph();
        let occ = a.iter().map(|(p, _)| p).collect();
        for site in a.window().points() {
            let oracle = non_causal_by_deletion(&occ, &g.adjacency(), site, a.window());
            assert_eq!(non_causal(&a, site), oracle, "at {site}");
        }
    }

    /// Seed plus the `y = -1` row only.
    fn row_only() -> Assembly {
        let full = comb(4);
        let mut a = Assembly::new(full.window());
        for (p, t) in full.iter().filter(|(p, _)| p.y >= -1) {
            a.place(p, t.clone()).unwrap();
        }
        a
    }

    #[test]
    fn extend_down_a_column() {
        let a = row_only();
        let out = verified_extend(&a, &Tas::comb(), Point::new(2, -1), &word("S")).unwrap();
        assert_eq!(out.get(Point::new(2, -2)).unwrap().name(), "C");
        assert_eq!(out.len(), a.len() + 1);
    }

    #[test]
    fn extend_through_dominator_fails() {
        let a = row_only();
        let e = verified_extend(&a, &Tas::comb(), Point::new(1, -1), &word("W"));
        assert_eq!(e, Err(AnalysisError::NonCausalViolation(Point::new(0, -1))));
    }

    #[test]
    fn empty_extension_is_identity() {
        let a = row_only();
        assert_eq!(
            verified_extend(&a, &Tas::comb(), Point::new(1, -1), &word("")).unwrap(),
            a
        );
    }

    #[test]
    fn extension_needs_a_binder() {
        let a = row_only();
        let e = verified_extend(&a, &Tas::comb(), Point::new(2, -1), &word("SE"));
        assert_eq!(e, Err(AnalysisError::GlueMismatch(Point::new(3, -2))));
    }
}
