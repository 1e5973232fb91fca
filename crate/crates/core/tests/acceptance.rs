//! The eight acceptance criteria, each timed against its budget. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nctile::analysis::{
    combine_off_the_wall, find_off_the_wall, find_periodic_assembly_path, PeriodicOutcome,
};
use nctile::path::word;
use nctile::tas::{check_confluence, grow_max, parse_tas, Verdict};
use nctile::verify::{noncausal_agrees, run_suite, Suite};
use nctile::{Direction, Point, Tas, TileType, Window};

type Outcome = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn suite(s: Suite, samples: usize, seed: u64) -> Outcome {
    let r = run_suite(s, samples, seed);
    if r.passed() {
        Ok(())
    } else {
        Err(r.to_string().replace('\n', " "))
    }
}

fn comb_reproduction() -> Outcome {
    let w = Window::new(10).unwrap();
    let g = grow_max(&Tas::comb(), w);
    for p in w.points() {
        let want = match (p.x.rem_euclid(2), p.y) {
            _ if p == Point::ORIGIN => Some("σ"),
            (0, -1) => Some("A"),
            (1, -1) => Some("B"),
            (0, y) if y <= -2 => Some("C"),
            (1, y) if y <= -2 => Some("D"),
            _ => None,
        };
        let got = g.assembly.get(p).map(TileType::name);
        if got != want {
            return Err(format!("at {p}: got {got:?}, want {want:?}"));
        }
    }
    Ok(())
}

fn confluence_dichotomy() -> Outcome {
    let w = Window::new(10).unwrap();
    if !check_confluence(&Tas::comb(), w).is_confluent() {
        return Err("comb reported non-confluent".into());
    }
    let variant = parse_tas(
        "seed σ N=c S=s\ntile A N=s E=b S=c W=a\ntile B E=a S=d W=b\ntile C N=c S=c\ntile D N=d S=d\n",
    )
    .unwrap();
    match check_confluence(&variant, w).verdict {
        Verdict::Witness {
            site,
            first,
            second,
        } if site == Point::new(0, 1) && first.name() == "A" && second.name() == "C" => Ok(()),
        v => Err(format!("variant verdict {v:?}")),
    }
}

fn combination() -> Outcome {
    suite(Suite::Combination, 200, 6)?;
    let rec = |s: &str| find_off_the_wall(&word(s).ground(Point::ORIGIN), 1, None).remove(0);
    let (p, q) = (rec("WNEES"), rec("WNNEESS"));
    let c = combine_off_the_wall(&p, &q).map_err(|e| e.to_string())?;
    if c.g != word("NNEESS") {
        return Err(format!("hand-traced pair gave g={}", c.g));
    }
    Ok(())
}

fn non_causal() -> Outcome {
    noncausal_agrees(&Tas::comb(), Window::new(8).unwrap()).map_err(|e| format!("comb: {e}"))?;
    suite(Suite::NonCausal, 50, 7)
}

fn periodic_dichotomy() -> Outcome {
    let w = Window::new(8).unwrap();
    match find_periodic_assembly_path(&Tas::comb(), w, 4, 4).map_err(|e| e.to_string())? {
        PeriodicOutcome::Found(c)
            if c.transient == word("S") && c.period == word("EE") && c.verified_depth >= 3 => {}
        other => return Err(format!("comb: {other:?}")),
    }
    let seed_only = Tas::new(
        vec![TileType::with_glues("X", &[(Direction::N, "q")])],
        TileType::with_glues("σ", &[(Direction::S, "s")]),
    )
    .unwrap();
    match find_periodic_assembly_path(&seed_only, w, 4, 4).map_err(|e| e.to_string())? {
        PeriodicOutcome::Finite => Ok(()),
        other => Err(format!("seed-only: {other:?}")),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 comb reproduction", 1, comb_reproduction),
        ("2 confluence dichotomy", 1, confluence_dichotomy),
        ("3 pumping oracle", 30, || suite(Suite::Pumping, 10_000, 3)),
        ("4 region oracle agreement", 60, || {
            suite(Suite::Regions, 1_000, 4)
        }),
        ("5 co-grow invariants", 60, || {
            suite(Suite::CoGrow, 1_000, 5)
        }),
        ("6 combination containment", 10, combination),
        ("7 non-causal equivalence", 60, non_causal),
        ("8 periodic path dichotomy", 5, periodic_dichotomy),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let t = Instant::now();
        let res = run();
        let took = t.elapsed();
        let res = res.and_then(|()| {
            if took <= Duration::from_secs(budget) {
                Ok(())
            } else {
                Err(format!("over the {budget} s budget"))
            }
        });
        match res {
            Ok(()) => println!("PASS criterion {name} ({:.3} s)", took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.3} s): {e}", took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
