use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use nctile::analysis::{
    find_off_the_wall, find_periodic_assembly_path, non_causal, points_of_interest, AnalysisError,
    PeriodicOutcome,
};
use nctile::cogrow::cogrow;
use nctile::tas::{
    check_confluence, grow_max, parse_tas, render_ascii, render_svg, SvgOverlay, Verdict,
};
use nctile::verify::{run_suite, Suite};
use nctile::{Assembly, BiInfinitePath, Hand, Point, Tas, Window, Word};

const OK: u8 = 0;
const COUNTEREXAMPLE: u8 = 1;
const INPUT_ERROR: u8 = 2;
const NOT_CONFLUENT: u8 = 3;

/// Temperature-1 tile assembly: growth, confluence, co-grow and analysis.
#[derive(Debug, Parser)]
#[command(name = "nctile", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
    Report,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HandArg {
    Left,
    Right,
}

#[derive(Debug, clap::Args)]
struct TasArgs {
    /// TAS file (`seed`/`tile` lines).
    #[arg(long)]
    tas: PathBuf,
    /// Half-width of the square window around the seed.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(1..))]
    radius: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Grow the maximal assembly (requires a confluent system).
    Grow {
        #[command(flatten)]
        input: TasArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        out: Format,
        /// Write the rendering here instead of standard output.
        #[arg(long)]
        out_file: Option<PathBuf>,
    },
    /// Check confluence within the window; prints the nearest conflict.
    Confluence {
        #[command(flatten)]
        input: TasArgs,
    },
    /// Render the grown assembly without checking confluence.
    Render {
        #[command(flatten)]
        input: TasArgs,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        out_file: Option<PathBuf>,
    },
    /// Co-grow two bi-infinite paths through the origin, each written as
    /// `<back-period>|<back-transient>@(0,0)<fwd-transient>|<fwd-period>`.
    Cogrow {
        #[arg(long, value_enum)]
        hand: HandArg,
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
        #[arg(long, default_value_t = 200)]
        max_steps: usize,
    },
    /// Analyses of the maximal assembly or of a path.
    Analyze {
        #[command(subcommand)]
        what: Analysis,
    },
    /// Run randomised property suites.
    Verify {
        /// pumping, regions, cogrow, combination, noncausal or all.
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteChoice,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Analysis {
    /// Search for an ultimately periodic assembly path from the seed.
    Periodic {
        #[command(flatten)]
        input: TasArgs,
        #[arg(long, default_value_t = 4)]
        max_transient: usize,
        #[arg(long, default_value_t = 4)]
        max_period: usize,
    },
    /// Off-the-wall records of a path word grounded at the origin.
    Offthewall {
        #[arg(long)]
        path: Word,
        #[arg(long, default_value_t = 16)]
        max_records: usize,
        /// Shade the first record's surface and mark its points of interest.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Sites whose removal does not cut `site` off from the seed.
    Noncausal {
        #[command(flatten)]
        input: TasArgs,
        #[arg(long)]
        site: Point,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Debug, Clone)]
enum SuiteChoice {
    One(Suite),
    All,
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        Ok(SuiteChoice::All)
    } else {
        s.parse().map(SuiteChoice::One)
    }
}

fn load(input: &TasArgs) -> Result<(Tas, Window)> {
    let text = fs::read_to_string(&input.tas)
        .with_context(|| format!("reading {}", input.tas.display()))?;
    let tas = parse_tas(&text).with_context(|| format!("parsing {}", input.tas.display()))?;
    Ok((tas, Window::new(input.radius)?))
}

fn emit(text: &str, out_file: Option<&Path>) -> Result<()> {
    match out_file {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn growth_note(truncated: bool, radius: i64) -> String {
    if truncated {
        format!("note: growth truncated by the window (radius {radius})")
    } else {
        format!("note: finite maximal assembly (fits within radius {radius})")
    }
}

fn render(a: &Assembly, format: Format, truncated: bool) -> String {
    match format {
        Format::Ascii => render_ascii(a),
        Format::Svg => render_svg(a, &SvgOverlay::default()),
        Format::Report => {
            let mut s = format!("tiles={}\ntruncated={truncated}\n", a.len());
            for (p, t) in a.iter() {
                let _ = writeln!(s, "site={p} tile={}", t.name());
            }
            s
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Grow {
            input,
            out,
            out_file,
        } => {
            let (tas, w) = load(&input)?;
            let report = check_confluence(&tas, w);
            if !report.is_confluent() {
                println!("{report}");
                return Ok(NOT_CONFLUENT);
            }
            let g = grow_max(&tas, w);
            emit(&render(&g.assembly, out, g.truncated), out_file.as_deref())?;
            println!("{}", growth_note(g.truncated, w.radius()));
            Ok(OK)
        }
        Command::Confluence { input } => {
            let (tas, w) = load(&input)?;
            let report = check_confluence(&tas, w);
            println!("{report}");
            Ok(match report.verdict {
                Verdict::Confluent => OK,
                Verdict::Witness { .. } => NOT_CONFLUENT,
            })
        }
        Command::Render {
            input,
            format,
            out_file,
        } => {
            let (tas, w) = load(&input)?;
            let g = grow_max(&tas, w);
            emit(
                &render(&g.assembly, format, g.truncated),
                out_file.as_deref(),
            )?;
            Ok(OK)
        }
        Command::Cogrow {
            hand,
            first,
            second,
            radius,
            max_steps,
        } => {
            let p1: BiInfinitePath = first.parse().context("--first")?;
            let p2: BiInfinitePath = second.parse().context("--second")?;
            if p1.anchor() != Point::ORIGIN || p2.anchor() != Point::ORIGIN {
                bail!("both paths must be anchored at (0,0)");
            }
            let hand = match hand {
                HandArg::Left => Hand::Left,
                HandArg::Right => Hand::Right,
            };
            let r = cogrow(
                hand,
                p1.backward(),
                p1.forward(),
                p2.backward(),
                p2.forward(),
                Window::new(radius)?,
                max_steps,
            )?;
            println!("word={}", r.word);
            println!("status={}", r.status);
            println!("steps={}", r.steps);
            println!("step\tdir\tfrom\tto\tsource");
            for (i, (d, prov)) in r.word.iter().zip(&r.provenance).enumerate() {
                println!("{i}\t{d}\t{}\t{}\t{prov}", r.vertices[i], r.vertices[i + 1]);
            }
            Ok(OK)
        }
        Command::Analyze { what } => analyze(what),
        Command::Verify {
            suite,
            samples,
            seed,
        } => {
            let suites = match suite {
                SuiteChoice::One(s) => vec![s],
                SuiteChoice::All => Suite::ALL.to_vec(),
            };
            let mut code = OK;
            for s in suites {
                let r = run_suite(s, samples, seed);
                println!("{r}");
                if !r.passed() {
                    code = COUNTEREXAMPLE;
                }
            }
            Ok(code)
        }
    }
}

fn analyze(what: Analysis) -> Result<u8> {
    match what {
        Analysis::Periodic {
            input,
            max_transient,
            max_period,
        } => {
            let (tas, w) = load(&input)?;
            match find_periodic_assembly_path(&tas, w, max_transient, max_period) {
                Err(e @ AnalysisError::NotConfluent { .. }) => {
                    println!("{e}");
                    Ok(NOT_CONFLUENT)
                }
                Err(e) => Err(e.into()),
                Ok(PeriodicOutcome::Found(c)) => {
                    let tiles: Vec<&str> = c.tile_period.iter().map(|t| t.name()).collect();
                    println!("result=found");
                    println!("transient={}", c.transient);
                    println!("period={}", c.period);
                    println!("verified_depth={}", c.verified_depth);
                    println!("tile_period={}", tiles.join(","));
                    println!("radius={}", c.radius);
                    Ok(OK)
                }
                Ok(PeriodicOutcome::Finite) => {
                    println!("result=finite");
                    println!("radius={}", w.radius());
                    Ok(OK)
                }
                Ok(PeriodicOutcome::NotFound) => {
                    println!("result=not-found");
                    println!("radius={}", w.radius());
                    Ok(OK)
                }
            }
        }
        Analysis::Offthewall {
            path,
            max_records,
            svg,
        } => {
            let g = path.ground(Point::ORIGIN);
            let recs = find_off_the_wall(&g, max_records, None);
            println!("records={}", recs.len());
            for (i, r) in recs.iter().enumerate() {
                let poi: Vec<String> = points_of_interest(r).iter().map(usize::to_string).collect();
                println!(
                    "record={i} ell={} r={} x0={} delta={} height={} area={} excursion={} points_of_interest={}",
                    r.ell,
                    r.r,
                    r.x0,
                    r.delta,
                    r.height,
                    r.area,
                    r.excursion(),
                    poi.join(",")
                );
            }
            if let (Some(file), Some(r)) = (svg, recs.first()) {
                let w = Window::bounding(g.vertices.iter().copied(), 1).context("empty path")?;
                let overlay = SvgOverlay {
                    shaded: r.surface.iter().copied().collect(),
                    marked: points_of_interest(r)
                        .iter()
                        .map(|&k| r.path.vertices[k])
                        .collect(),
                };
                fs::write(&file, render_svg(&Assembly::new(w), &overlay))?;
            }
            Ok(OK)
        }
        Analysis::Noncausal { input, site, svg } => {
            let (tas, w) = load(&input)?;
            if !w.contains(site) {
                bail!("site {site} is outside the window");
            }
            let a = grow_max(&tas, w).assembly;
            let nc = non_causal(&a, site);
            let causal: Vec<String> = w
                .points()
                .filter(|p| a.is_occupied(*p) && !nc.contains(p))
                .map(|p| p.to_string())
                .collect();
            println!("site={site}");
            println!("occupied={}", a.is_occupied(site));
            println!("non_causal_size={}", nc.len());
            println!("causal_sites={}", causal.join(" "));
            if let Some(file) = svg {
                let overlay = SvgOverlay {
                    shaded: nc.iter().copied().collect(),
                    marked: vec![site],
                };
                fs::write(&file, render_svg(&a, &overlay))?;
            }
            Ok(OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
