//! Randomised property suites with replayable counterexamples.
//!
//! Every generated case serialises to a single line; [`replay`] parses such
//! a line and re-runs the check.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{combine_off_the_wall, non_causal, off_the_wall_record};
use crate::cogrow::{cogrow, CoGrowStatus, Provenance};
use crate::gen;
use crate::oracle::{non_causal_by_deletion, parity_sides, powers_simple};
use crate::path::{GroundedPath, Point, Ray, Word};
use crate::regions::{region_intersection_component, BiInfinitePath, Hand, SideMap};
use crate::tas::{grow_max, parse_tas, Tas};
use crate::window::Window;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Pumping,
    Regions,
    CoGrow,
    Combination,
    NonCausal,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Pumping,
        Suite::Regions,
        Suite::CoGrow,
        Suite::Combination,
        Suite::NonCausal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pumping => "pumping",
            Suite::Regions => "regions",
            Suite::CoGrow => "cogrow",
            Suite::Combination => "combination",
            Suite::NonCausal => "noncausal",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub samples: usize,
    pub seed: u64,
    pub failures: usize,
    /// The first failing case, serialised for [`replay`], and why it failed.
    pub counterexample: Option<(String, String)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} samples={} seed={} failures={} result={}",
            self.suite,
            self.samples,
            self.seed,
            self.failures,
            if self.passed() { "pass" } else { "fail" }
        )?;
        if let Some((case, why)) = &self.counterexample {
            write!(f, "\ncounterexample={case}\nreason={why}")?;
        }
        Ok(())
    }
}

/// Radius used by the region suite.
pub const REGION_RADIUS: i64 = 20;
/// Radius used by the co-grow suite; the proxy window is twice as large.
pub const COGROW_RADIUS: i64 = 12;

/// Run `samples` generated cases of one suite.
pub fn run_suite(suite: Suite, samples: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut counterexample = None;
    for _ in 0..samples {
        let case = generate(suite, &mut rng);
        if let Err(why) = check(suite, &case) {
            failures += 1;
            counterexample.get_or_insert((case, why));
        }
    }
    SuiteReport {
        suite,
        samples,
        seed,
        failures,
        counterexample,
    }
}

/// Re-run the check for a serialised case.
pub fn replay(suite: Suite, case: &str) -> Result<(), String> {
    check(suite, case)
}

fn generate(suite: Suite, rng: &mut ChaCha8Rng) -> String {
    match suite {
        Suite::Pumping => {
            let len = rng.random_range(1..=12);
            gen::random_word(rng, len).to_string()
        }
        Suite::Regions => {
            let w = Window::new(REGION_RADIUS).expect("positive");
            format!("{REGION_RADIUS} {}", gen::random_biinfinite(rng, w))
        }
        Suite::CoGrow => {
            let w = Window::new(COGROW_RADIUS).expect("positive");
            let (b, f, b2, f2) = gen::random_cogrow_instance(rng, w);
            let hand = if rng.random_bool(0.5) {
                Hand::Right
            } else {
                Hand::Left
            };
            let p1 = BiInfinitePath::new(Point::ORIGIN, b, f).expect("generated");
            let p2 = BiInfinitePath::new(Point::ORIGIN, b2, f2).expect("generated");
            format!("{hand} {COGROW_RADIUS} {p1} {p2}")
        }
        Suite::Combination => {
            let delta = rng.random_range(1..=4);
            let (hp, hq) = (rng.random_range(1..=4), rng.random_range(1..=4));
            let p = gen::random_excursion(rng, delta, hp);
            let q = gen::random_excursion(rng, delta, hq);
            format!("W{p} W{q}")
        }
        Suite::NonCausal => {
            let r = rng.random_range(3..=8);
            let w = Window::new(r).expect("positive");
            let tas = gen::random_confluent_tas(rng, w);
            format!("{r} {}", tas.to_string().trim_end().replace('\n', ";"))
        }
    }
}

fn check(suite: Suite, case: &str) -> Result<(), String> {
    match suite {
        Suite::Pumping => check_pumping(case),
        Suite::Regions => check_regions(case),
        Suite::CoGrow => check_cogrow(case),
        Suite::Combination => check_combination(case),
        Suite::NonCausal => check_noncausal(case),
    }
}

fn parse<T: FromStr>(s: Option<&str>, what: &str) -> Result<T, String>
where
    T::Err: fmt::Display,
{
    s.ok_or_else(|| format!("missing {what}"))?
        .parse()
        .map_err(|e| format!("bad {what}: {e}"))
}

pub fn check_pumping(case: &str) -> Result<(), String> {
    let m: Word = case.trim().parse().map_err(|e| format!("{e}"))?;
    let fast = m.is_pumpable().map_err(|e| e.to_string())?;
    let slow = powers_simple(&m, 20);
    if fast != slow {
        return Err(format!(
            "is_pumpable={fast} but powers up to 20 simple={slow}"
        ));
    }
    Ok(())
}

pub fn check_regions(case: &str) -> Result<(), String> {
    let mut it = case.split_whitespace();
    let r: i64 = parse(it.next(), "radius")?;
    let path: BiInfinitePath = parse(it.next(), "path")?;
    let w = Window::new(r).map_err(|e| e.to_string())?;
    let flood = SideMap::classify(&path, w).map_err(|e| format!("flood fill: {e}"))?;
    let parity = parity_sides(&path, w).map_err(|e| format!("parity: {e}"))?;
    for p in w.points() {
        let a = flood.side(p).map_err(|e| e.to_string())?;
        let b = *parity.get(p).expect("in window");
        if a != b {
            return Err(format!("at {p}: flood fill {a:?}, parity {b:?}"));
        }
    }
    Ok(())
}

/// Undirected edges of `f` from the origin until it has surely left the
/// window.
fn ray_edges(f: &Ray, r: i64) -> HashSet<(Point, Point)> {
    let (m, p) = (f.transient().len(), f.period().len());
    let n = m + p * (2 * r as usize + m + p + 2);
    let mut out = HashSet::new();
    let mut cur = Point::ORIGIN;
    for i in 0..n {
        let next = cur.step(f.outward_step(i));
        out.insert((cur.min(next), cur.max(next)));
        cur = next;
    }
    out
}

pub fn check_cogrow(case: &str) -> Result<(), String> {
    let mut it = case.split_whitespace();
    let hand: Hand = parse(it.next(), "hand")?;
    let r: i64 = parse(it.next(), "radius")?;
    let p1: BiInfinitePath = parse(it.next(), "first path")?;
    let p2: BiInfinitePath = parse(it.next(), "second path")?;
    let w = Window::new(r).map_err(|e| e.to_string())?;
    let (b, f, b2, f2) = (p1.backward(), p1.forward(), p2.backward(), p2.forward());
    let res = cogrow(hand, b, f, b2, f2, w, 200).map_err(|e| e.to_string())?;

    let (e1, e2) = (ray_edges(f, r), ray_edges(f2, r));
    for (i, prov) in res.provenance.iter().enumerate() {
        let (u, v) = (res.vertices[i], res.vertices[i + 1]);
        let e = (u.min(v), u.max(v));
        let ok = match prov {
            Provenance::F => e1.contains(&e),
            Provenance::F2 => e2.contains(&e),
            Provenance::Both => e1.contains(&e) && e2.contains(&e),
        };
        if !ok {
            return Err(format!("step {i} {u}->{v} is not an edge of {prov}"));
        }
    }
    let comp = region_intersection_component(&p1, &p2, hand, hand, Point::ORIGIN, w)
        .map_err(|e| e.to_string())?;
    if let Some(v) = res.vertices.iter().find(|v| !comp.members.contains(v)) {
        return Err(format!("vertex {v} outside the region intersection"));
    }
    let increasing = |v: &[i64]| v.windows(2).all(|x| x[0] < x[1]);
    if !increasing(&res.f_indices) || !increasing(&res.f2_indices) {
        return Err("indices do not increase".into());
    }
    // reaching the boundary in a window twice as large stands in for an
    // infinite path in the intersection
    let big = Window::new(2 * r).map_err(|e| e.to_string())?;
    let infinite = comp.reaches_boundary
        && region_intersection_component(&p1, &p2, hand, hand, Point::ORIGIN, big)
            .map(|c| c.reaches_boundary)
            .unwrap_or(false);
    if infinite && (res.status == CoGrowStatus::Terminated || res.steps < r as usize) {
        return Err(format!("stopped early: {} after {}", res.status, res.word));
    }

    let mirrored = cogrow(
        hand.opposite(),
        &b.reflect_ns(),
        &f.reflect_ns(),
        &b2.reflect_ns(),
        &f2.reflect_ns(),
        w,
        200,
    )
    .map_err(|e| e.to_string())?;
    if mirrored.word.reflect_ns() != res.word {
        return Err(format!(
            "mirror image differs: {} vs {}",
            res.word, mirrored.word
        ));
    }
    Ok(())
}

pub fn check_combination(case: &str) -> Result<(), String> {
    let mut it = case.split_whitespace();
    let wp: Word = parse(it.next(), "first path")?;
    let wq: Word = parse(it.next(), "second path")?;
    let record = |w: &Word| {
        off_the_wall_record(
            &GroundedPath::new(Point::ORIGIN, w.clone()),
            1,
            w.len(),
            None,
        )
        .ok_or_else(|| format!("{w} is not off the wall"))
    };
    let (rp, rq) = (record(&wp)?, record(&wq)?);
    let c = combine_off_the_wall(&rp, &rq).map_err(|e| e.to_string())?;
    for (combined, input) in [(&c.combined_p, &rp), (&c.combined_q, &rq)] {
        let rec = off_the_wall_record(combined, input.ell, input.ell + c.g.len(), None)
            .ok_or_else(|| format!("combined path {} is not off the wall", combined.word))?;
        for s in [&rp.surface, &rq.surface] {
            if let Some(p) = s.difference(&rec.surface).next() {
                return Err(format!("combined {} misses {p}", combined.word));
            }
        }
    }
    Ok(())
}

pub fn check_noncausal(case: &str) -> Result<(), String> {
    let (r, text) = case.trim().split_once(' ').ok_or("missing radius")?;
    let r: i64 = r.parse().map_err(|e| format!("bad radius: {e}"))?;
    let tas = parse_tas(&text.replace(';', "\n")).map_err(|e| e.to_string())?;
    noncausal_agrees(&tas, Window::new(r).map_err(|e| e.to_string())?)
}

/// Dominator-based non-causal sets equal the deletion oracle at every site.
pub fn noncausal_agrees(tas: &Tas, w: Window) -> Result<(), String> {
    let a = grow_max(tas, w).assembly;
    let adj = a.binding_graph().adjacency();
    let occupied: BTreeSet<Point> = a.iter().map(|(p, _)| p).collect();
    for site in w.points() {
        if non_causal(&a, site) != non_causal_by_deletion(&occupied, &adj, site, w) {
            return Err(format!("sets differ at {site}"));
        }
    }
    Ok(())
}
