//! Thin command-line front end over the library. Exit codes: 0 when every
//! check verified, 1 when a counterexample was found, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use skew_energy::graph::io::to_graph6;
use skew_energy::input::parse_oriented_input;
use skew_energy::spectrum::{
    char_poly_expansion, char_poly_oracle, char_poly_recurrence_edge,
    char_poly_recurrence_vertex, skew_energy_integral, skew_energy_spectral,
};
use skew_energy::verify::{cmd_check_lemmas, cmd_minimality, VerificationReport};
use skew_energy::{Error, OrientedGraph, SkewPolynomial};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skewen", version, about = "Exact skew energy of oriented graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run exhaustive verification sweeps.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Print the skew characteristic polynomial of a graph.
    Poly(PolyArgs),
    /// Print the skew energy of a graph by both routes.
    Energy(EnergyArgs),
    /// Enumerate bicyclic graphs up to isomorphism.
    Enumerate(EnumerateArgs),
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Check minimality of the all-evenly extremal member over its
    /// diameter class.
    Minimality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Append the report as one JSON line to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check the chain of comparison lemmas up to a maximum order.
    Lemmas {
        #[arg(long, value_name = "N")]
        max_n: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PolyArgs {
    /// Family spec (e.g. `B:n=7,d=4,orient=---`), graph6 line, or path of
    /// an arc-list file.
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value_t = Route::Expansion)]
    route: Route,
}

#[derive(Args)]
struct EnergyArgs {
    #[arg(long)]
    input: String,
    /// Absolute tolerance for the integral route.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Keep only graphs of this diameter.
    #[arg(long)]
    d: Option<usize>,
    /// Keep only members of the diameter class (no vertex-disjoint odd
    /// cycles with lengths summing to 2 mod 4); requires --d.
    #[arg(long)]
    class_b: bool,
    /// Write graph6 lines here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a JSON sidecar with shape metadata.
    #[arg(long)]
    meta: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Expansion,
    Edge,
    Vertex,
    Oracle,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_verified) => {
            if all_verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Cmd::Verify { what } => {
            let (reports, json) = match what {
                VerifyCmd::Minimality { n, d, json } => (vec![cmd_minimality(n, d)?], json),
                VerifyCmd::Lemmas { max_n, json } => (cmd_check_lemmas(max_n)?, json),
            };
            if let Some(path) = json {
                let mut file = std::fs::File::create(path)?;
                for r in &reports {
                    writeln!(file, "{}", r.to_json_line())?;
                }
            }
            let mut all_verified = true;
            for r in &reports {
                print_report(r);
                all_verified &= r.status != skew_energy::verify::Status::Counterexample;
            }
            Ok(all_verified)
        }
        Cmd::Poly(args) => {
            let og = parse_oriented_input(&args.input)?;
            match args.route {
                Route::All => {
                    let routes: Vec<(&str, SkewPolynomial)> = vec![
                        ("expansion", char_poly_expansion(&og)),
                        ("edge", edge_route(&og)?),
                        ("vertex", char_poly_recurrence_vertex(&og, 0)?),
                        ("oracle", char_poly_oracle(&og)?),
                    ];
                    for (name, p) in &routes {
                        println!("{name:<9} {}", coeff_line(p));
                    }
                    let agree = routes.windows(2).all(|w| w[0].1 == w[1].1);
                    println!("routes agree: {agree}");
                    Ok(agree)
                }
                route => {
                    let p = single_route(&og, route)?;
                    println!("{}", coeff_line(&p));
                    Ok(true)
                }
            }
        }
        Cmd::Energy(args) => {
            let og = parse_oriented_input(&args.input)?;
            let spectral = skew_energy_spectral(&og);
            let integral = skew_energy_integral(&og, args.tol)?;
            println!("spectral {spectral:.10}");
            println!("integral {integral:.10}");
            println!("diff     {:.3e}", (spectral - integral).abs());
            Ok(true)
        }
        Cmd::Enumerate(args) => {
            let graphs = match (args.d, args.class_b) {
                (Some(d), true) => skew_energy::enumeration::enumerate_class_b(args.n, d)?,
                (Some(d), false) => skew_energy::enumeration::enumerate_bicyclic(args.n)?
                    .into_iter()
                    .filter(|g| g.diameter().unwrap() == d)
                    .collect(),
                (None, true) => {
                    return Err(Error::InvalidParameter(
                        "--class-b requires --d".to_string(),
                    ))
                }
                (None, false) => skew_energy::enumeration::enumerate_bicyclic(args.n)?,
            };
            let mut lines = String::new();
            for g in &graphs {
                lines.push_str(&to_graph6(g)?);
                lines.push('\n');
            }
            match &args.out {
                Some(path) => std::fs::write(path, lines)?,
                None => print!("{lines}"),
            }
            if let Some(path) = &args.meta {
                let meta: Vec<serde_json::Value> = graphs
                    .iter()
                    .map(|g| {
                        let s = skew_energy::enumeration::shape_summary(g).expect("bicyclic");
                        serde_json::json!({
                            "graph6": to_graph6(g).expect("small order"),
                            "n": g.n(),
                            "m": g.m(),
                            "diameter": g.diameter().expect("connected"),
                            "t": s.t, "a": s.a, "b": s.b, "c": s.c, "l": s.l,
                            "class_b": skew_energy::graph::in_class_b(g).expect("bicyclic"),
                        })
                    })
                    .collect();
                let text = serde_json::to_string_pretty(&meta).expect("sidecar serializes");
                std::fs::write(path, text)?;
            }
            eprintln!("{} graphs", graphs.len());
            Ok(true)
        }
    }
}

fn edge_route(og: &OrientedGraph) -> Result<SkewPolynomial, Error> {
    if og.m() == 0 {
        return char_poly_oracle(og);
    }
    char_poly_recurrence_edge(og, og.arc(0))
}

fn single_route(og: &OrientedGraph, route: Route) -> Result<SkewPolynomial, Error> {
    match route {
        Route::Expansion => Ok(char_poly_expansion(og)),
        Route::Edge => edge_route(og),
        Route::Vertex => {
            if og.n() == 0 {
                char_poly_oracle(og)
            } else {
                char_poly_recurrence_vertex(og, 0)
            }
        }
        Route::Oracle => char_poly_oracle(og),
        Route::All => unreachable!("handled by the caller"),
    }
}

fn coeff_line(p: &SkewPolynomial) -> String {
    format!(
        "[{}]    {}",
        p.coeff_strings().join(", "),
        p
    )
}

fn print_report(r: &VerificationReport) {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    println!(
        "{:<14} {:<16} {:?}  graphs={} classes={} ({} ms)",
        r.claim,
        params.join(","),
        r.status,
        r.graphs_examined,
        r.orientation_classes_examined,
        r.wall_time_ms
    );
    for w in &r.witnesses {
        let energy = w
            .energy
            .map(|e| format!(" energy={e:.6}"))
            .unwrap_or_default();
        println!(
            "    {:<24} {} coeffs=[{}]{}",
            w.note,
            w.graph6,
            w.coeffs.join(", "),
            energy
        );
    }
}
