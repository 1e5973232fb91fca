//! Random instance generators for property checks.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::path::{Direction, Point, Ray, Word};
use crate::regions::BiInfinitePath;
use crate::tas::{check_confluence, grow_max, Tas, TileType};
use crate::window::Window;

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Word {
    (0..len)
        .map(|_| *Direction::ALL.choose(rng).expect("nonempty"))
        .collect()
}

/// Self-avoiding word built by a random walk that never steps onto a
/// visited vertex; may come out shorter than `len` if it gets trapped.
pub fn random_free_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Word {
    let mut seen = std::collections::HashSet::from([Point::ORIGIN]);
    let mut cur = Point::ORIGIN;
    let mut w = Word::empty();
    for _ in 0..len {
        let options: Vec<Direction> = Direction::ALL
            .into_iter()
            .filter(|d| !seen.contains(&cur.step(*d)))
            .collect();
        let Some(&d) = options.choose(rng) else { break };
        cur = cur.step(d);
        seen.insert(cur);
        w.push(d);
    }
    w
}

/// A simple ray with the given first step (if any).
fn random_ray<R: Rng + ?Sized>(
    rng: &mut R,
    max_transient: usize,
    max_period: usize,
    first: Option<Direction>,
) -> Option<(Word, Word)> {
    let mlen = rng.random_range(0..=max_transient);
    let plen = rng.random_range(1..=max_period);
    let mut m = random_free_word(rng, mlen);
    let p = random_free_word(rng, plen);
    if let Some(d) = first {
        let mut v = vec![d];
        v.extend(m.iter());
        m = Word::new(v);
    }
    if p.is_empty() || p.displacement().is_zero() {
        return None;
    }
    let ray = Ray::forward(m.clone(), p.clone()).ok()?;
    ray.is_simple().then_some((m, p))
}

/// Random eventually periodic bi-infinite path that grounds simply in
/// `window`, leaves it along both rays and whose far field is unambiguous.
pub fn random_biinfinite<R: Rng + ?Sized>(rng: &mut R, window: Window) -> BiInfinitePath {
    let r = window.radius().max(2);
    loop {
        let anchor = Point::new(
            rng.random_range(-r / 2..=r / 2),
            rng.random_range(-r / 2..=r / 2),
        );
        let Some((fm, fp)) = random_ray(rng, 8, 5, None) else {
            continue;
        };
        // built outward, stored in path orientation
        let Some((bm, bp)) = random_ray(rng, 8, 5, None) else {
            continue;
        };
        let Ok(path) = BiInfinitePath::from_words(anchor, bp.reverse(), bm.reverse(), fm, fp)
        else {
            continue;
        };
        if admissible(&path, window) {
            return path;
        }
    }
}

/// A pair `b.O.f`, `b2.O.f2` anchored at the origin with a common first
/// forward step, both simple in `window`.
pub fn random_cogrow_instance<R: Rng + ?Sized>(
    rng: &mut R,
    window: Window,
) -> (Ray, Ray, Ray, Ray) {
    loop {
        let d = *Direction::ALL.choose(rng).expect("nonempty");
        let share = rng.random_bool(0.5);
        let mut pick = || -> Option<(Ray, Ray)> {
            let (fm, fp) = random_ray(rng, 6, 4, Some(d))?;
            let (bm, bp) = random_ray(rng, 4, 3, None)?;
            let b = Ray::backward(bm.reverse(), bp.reverse()).ok()?;
            let f = Ray::forward(fm, fp).ok()?;
            let path = BiInfinitePath::new(Point::ORIGIN, b.clone(), f.clone()).ok()?;
            admissible(&path, window).then_some((b, f))
        };
        let Some((b, f)) = pick() else { continue };
        // share the backward ray half the time
        let (b2, f2) = if share {
            let Some((_, f2)) = pick() else { continue };
            let p = BiInfinitePath::new(Point::ORIGIN, b.clone(), f2.clone());
            match p {
                Ok(p) if admissible(&p, window) => (b.clone(), f2),
                _ => continue,
            }
        } else {
            let Some(pair) = pick() else { continue };
            pair
        };
        return (b, f, b2, f2);
    }
}

/// Simple well beyond the window, exits cleanly, and the parity far field
/// is decidable.
pub fn admissible(path: &BiInfinitePath, window: Window) -> bool {
    let wide = Window::from_corners(
        Point::new(window.min().x * 3 - 8, window.min().y * 3 - 8),
        Point::new(window.max().x * 3 + 8, window.max().y * 3 + 8),
    )
    .expect("nonempty");
    path.ground_in(wide).is_ok()
        && path.ground_in(window).is_ok()
        && crate::oracle::parity_sides(path, window).is_ok()
}

/// Word of a self-avoiding excursion from `(0,0)` to `(delta,0)` that
/// starts north, ends south and stays strictly above the wall in between,
/// at most `max_height` high and within two columns of the endpoints.
pub fn random_excursion<R: Rng + ?Sized>(rng: &mut R, delta: i64, max_height: i64) -> Word {
    let target = Point::new(delta, 1);
    let inside = |p: Point| p.y >= 1 && p.y <= max_height && p.x >= -2 && p.x <= delta + 2;
    loop {
        let mut seen = std::collections::HashSet::from([Point::ORIGIN, Point::new(0, 1)]);
        let mut cur = Point::new(0, 1);
        let mut w = Word::new(vec![Direction::N]);
        while cur != target {
            let options: Vec<Direction> = Direction::ALL
                .into_iter()
                .filter(|d| inside(cur.step(*d)) && !seen.contains(&cur.step(*d)))
                .collect();
            let Some(&d) = options.choose(rng) else { break };
            cur = cur.step(d);
            seen.insert(cur);
            w.push(d);
        }
        if cur == target {
            w.push(Direction::S);
            return w;
        }
    }
}

/// Random tile set: every side is null with probability one half,
/// otherwise one of `glues` labels.
pub fn random_tas<R: Rng + ?Sized>(rng: &mut R, tiles: usize, glues: usize) -> Tas {
    let label = |rng: &mut R| -> Option<String> {
        rng.random_bool(0.5)
            .then(|| format!("g{}", rng.random_range(0..glues)))
    };
    let make = |name: &str, rng: &mut R| {
        let sides: Vec<(Direction, String)> = Direction::ALL
            .into_iter()
            .filter_map(|d| label(rng).map(|g| (d, g)))
            .collect();
        let sides: Vec<(Direction, &str)> = sides.iter().map(|(d, g)| (*d, g.as_str())).collect();
        TileType::with_glues(name, &sides)
    };
    let set = (0..tiles).map(|i| make(&format!("T{i}"), rng)).collect();
    let seed = make("σ", rng);
    Tas::new(set, seed).expect("generated names are distinct")
}

/// Random system that is confluent within `window` and grows past the seed.
pub fn random_confluent_tas<R: Rng + ?Sized>(rng: &mut R, window: Window) -> Tas {
    loop {
        let n = rng.random_range(2..=6);
        let g = rng.random_range(2..=4);
        let tas = random_tas(rng, n, g);
        if check_confluence(&tas, window).is_confluent()
            && grow_max(&tas, window).assembly.len() > 1
        {
            return tas;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn free_words_are_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            assert!(random_free_word(&mut rng, 12).is_free_path());
        }
    }

    #[test]
    fn excursions_stay_above() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let w = random_excursion(&mut rng, 3, 4);
            let g = w.ground(Point::ORIGIN);
            assert!(g.simple);
            assert_eq!(g.end(), Point::new(3, 0));
            assert!(g.vertices[1..g.vertices.len() - 1].iter().all(|p| p.y >= 1));
        }
    }

    #[test]
    fn confluent_systems_are_confluent() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let w = Window::new(4).unwrap();
        for _ in 0..10 {
            assert!(check_confluence(&random_confluent_tas(&mut rng, w), w).is_confluent());
        }
    }

    #[test]
    fn generated_paths_ground() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let w = Window::new(10).unwrap();
        for _ in 0..20 {
            let p = random_biinfinite(&mut rng, w);
            assert!(p.ground_in(w).is_ok());
        }
    }
}
