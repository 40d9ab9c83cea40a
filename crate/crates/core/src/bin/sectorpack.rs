use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sectorpack::collision::{find_collision, DEFAULT_BUDGET};
use sectorpack::density::empirical_density;
use sectorpack::parse::{parse_cone, parse_levels, parse_polynomial};
use sectorpack::plot::plot_svg;
use sectorpack::report::{CollideBody, DensityBody, EnumerateBody, Report, SurvivorBody, VerifyBody};
use sectorpack::search::search_quadratics;
use sectorpack::verifier::{necessary_conditions, verify_prefix};
use sectorpack::{AffineCone, Error, IVQuadratic, Sector, SectorSlope};

#[derive(Parser)]
#[command(name = "sectorpack", version, about = "Quadratic packing polynomials on plane sectors")]
struct Cli {
    /// Worker threads for parallel subcommands (0 = all cores).
    #[arg(long, global = true, env = "SECTORPACK_THREADS", default_value_t = 0)]
    threads: usize,

    #[arg(long, global = true, env = "SECTORPACK_FORMAT", value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct PolySector {
    /// Sextuple "A B C D E F" or closed form such as "x^2+y^2".
    #[arg(long, env = "SECTORPACK_POLY")]
    poly: String,
    /// Slope: "p/q", "inf" or "a+b*sqrt(d)".
    #[arg(long, env = "SECTORPACK_SECTOR", default_value = "inf")]
    sector: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Screen necessary conditions and verify the prefix 0..=N.
    Verify {
        #[command(flatten)]
        target: PolySector,
        #[arg(long, env = "SECTORPACK_N", default_value_t = 10_000)]
        n: u64,
    },
    /// Find two cone points with equal value (needs B^2 - AC != 0).
    Collide {
        #[arg(long, env = "SECTORPACK_POLY")]
        poly: String,
        /// Use this sector as the cone instead of --apex/--g1/--g2.
        #[arg(long)]
        sector: Option<String>,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        apex: String,
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        g1: String,
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        g2: String,
        #[arg(long, env = "SECTORPACK_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Lattice counts against areas of the sublevel regions.
    Density {
        #[command(flatten)]
        target: PolySector,
        /// Comma-separated levels.
        #[arg(long, default_value = "100,1000,10000")]
        levels: String,
    },
    /// Search coefficient sextuples for packing polynomials.
    Search {
        #[arg(long, env = "SECTORPACK_SECTOR", default_value = "inf")]
        sector: String,
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long, env = "SECTORPACK_N", default_value_t = 500)]
        n: u64,
    },
    /// List the sector's lattice points with 0 <= x <= xmax.
    Enumerate {
        #[arg(long, env = "SECTORPACK_SECTOR", default_value = "inf")]
        sector: String,
        #[arg(long)]
        xmax: i64,
    },
    /// Draw the enumeration order 0..=count as SVG.
    Plot {
        #[command(flatten)]
        target: PolySector,
        #[arg(long, default_value_t = 27)]
        count: u64,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit statuses: 0 success/verified, 1 refuted, 2 error.
enum Outcome {
    Ok,
    Refuted,
}

fn sector(s: &str) -> Result<Sector, Error> {
    s.parse::<SectorSlope>().map(Sector::new)
}

fn target(t: &PolySector) -> Result<(IVQuadratic, Sector), Error> {
    Ok((parse_polynomial(&t.poly)?, sector(&t.sector)?))
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialize")
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Outcome, Box<dyn std::error::Error>> {
    let text = cli.format == Format::Text;
    match cli.cmd {
        Cmd::Verify { target: t, n } => {
            let (poly, sector) = target(&t)?;
            let conditions = necessary_conditions(&poly, &sector);
            let result = verify_prefix(&poly, &sector, n)?;
            let ok = conditions.all_passed() && result.is_verified();
            if text {
                writeln!(out, "P = {poly} on {sector}")?;
                for (name, c) in conditions.entries() {
                    writeln!(out, "  [{}] {name}: {}", if c.passed { "pass" } else { "FAIL" }, c.detail)?;
                }
                writeln!(out, "{result}")?;
            } else {
                let body = VerifyBody { poly, sector, n, conditions, result };
                writeln!(out, "{}", json(&Report::new(body)))?;
            }
            Ok(if ok { Outcome::Ok } else { Outcome::Refuted })
        }
        Cmd::Collide { poly, sector: s, apex, g1, g2, budget } => {
            let poly = parse_polynomial(&poly)?;
            let cone = match s {
                Some(s) => {
                    let alpha = s.parse::<SectorSlope>()?;
                    AffineCone::from_sector(&alpha)
                        .ok_or("an irrational sector is not a rational cone; pass --apex/--g1/--g2")?
                }
                None => parse_cone(&apex, &g1, &g2)?,
            };
            let witness = match find_collision(&poly, &cone, budget) {
                Err(Error::ZeroDiscriminant) => {
                    return Err("B^2 - AC = 0: the non-injectivity construction needs a nonzero discriminant".into())
                }
                r => r?,
            };
            witness.check(&poly, &cone).map_err(|e| format!("internal error: invalid witness: {e}"))?;
            if text {
                writeln!(
                    out,
                    "P{} = P{} = {}  (r, s) = ({}, {}), i = {}, anchor {}",
                    witness.p, witness.q, witness.value, witness.r, witness.s, witness.i, witness.anchor
                )?;
            } else {
                writeln!(out, "{}", json(&Report::new(CollideBody { poly, cone, witness })))?;
            }
            Ok(Outcome::Ok)
        }
        Cmd::Density { target: t, levels } => {
            let (poly, sector) = target(&t)?;
            let report = empirical_density(&poly, &sector, &parse_levels(&levels)?)?;
            if text {
                match &report.closed_form {
                    Some(v) => writeln!(out, "closed-form density: {v} (~{:.12})", v.to_f64())?,
                    None => writeln!(out, "closed-form density: undefined (B^2 - AC != 0)")?,
                }
                writeln!(out, "{:>12} {:>12} {:>10} {:>16} {:>10}", "n", "count", "count/n", "area", "gap/sqrt(n)")?;
                for r in &report.rows {
                    writeln!(out, "{:>12} {:>12} {:>10.6} {:>16.6} {:>10.6}", r.n, r.count, r.ratio, r.area, r.gap)?;
                }
            } else {
                writeln!(out, "{}", json(&Report::new(DensityBody { poly, sector, report })))?;
            }
            Ok(Outcome::Ok)
        }
        Cmd::Search { sector: s, bound, n } => {
            let sector = sector(&s)?;
            if bound < 1 || n < 1 {
                return Err("--bound and --n must be at least 1".into());
            }
            let outcome = search_quadratics(&sector, bound, n)?;
            if text {
                writeln!(
                    out,
                    "{sector}: {} leading pairs pruned by slope, {} by B^2/A, {} sextuples examined, {} survivors",
                    outcome.pruned_slope,
                    outcome.pruned_c,
                    outcome.examined,
                    outcome.survivors.len()
                )?;
                for s in &outcome.survivors {
                    writeln!(out, "  {}  {}", s.poly, s.report)?;
                }
            } else {
                for survivor in outcome.survivors {
                    let body = SurvivorBody { sector: sector.clone(), survivor };
                    writeln!(out, "{}", json(&Report::new(body)))?;
                }
            }
            Ok(Outcome::Ok)
        }
        Cmd::Enumerate { sector: s, xmax } => {
            let sector = sector(&s)?;
            if xmax < 0 {
                return Err("--xmax must be non-negative".into());
            }
            let points = sector.enumerate_truncated(xmax);
            if text {
                for p in &points {
                    writeln!(out, "{} {}", p.x, p.y)?;
                }
            } else {
                writeln!(out, "{}", json(&Report::new(EnumerateBody { sector, xmax, points })))?;
            }
            Ok(Outcome::Ok)
        }
        Cmd::Plot { target: t, count, out: path } => {
            let (poly, sector) = target(&t)?;
            let svg = plot_svg(&poly, &sector, count)?;
            match path {
                Some(p) => std::fs::write(p, svg)?,
                None => out.write_all(svg.as_bytes())?,
            }
            Ok(Outcome::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Refuted) => ExitCode::from(1),
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
