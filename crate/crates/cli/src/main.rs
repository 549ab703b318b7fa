//! Command-line front end: expression normalization, named matrices, the
//! exterior differential, the contraction, the embedded rule manifest and
//! the check-suite runner.
//!
//! Exit codes: 0 all checks pass, 1 some check failed, 2 configuration or
//! parse error.

use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use cqp_core::colour::ColourSymbol;
use cqp_core::contraction::{self, GTransform, SignConvention};
use cqp_core::matrices::{build_matrix, MatrixName};
use cqp_core::parse::{parse_expr, ColourEnv};
use cqp_core::render::{self, Format};
use cqp_core::rewrite::{self, RewriteSystem, Sector};
use cqp_core::suite::{self, SuiteDefinition};
use cqp_core::{Matrix, Poly, Rat};

#[derive(Parser)]
#[command(name = "cqp", about = "Exact symbolic kernel for the coloured quantum plane", version)]
struct Cli {
    /// Declared colour names, comma separated (or set CQP_COLOURS).
    #[arg(long, global = true)]
    colours: Option<String>,

    /// Output format: text, json or latex.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its normal form.
    Normalize {
        expr: String,
        /// Rewrite sector: frt, plane, hyperplane, calculus or everything.
        #[arg(long, default_value = "everything")]
        sector: String,
    },
    /// Run a builtin suite or a suite file (JSON).
    Check {
        /// Builtin suite name or a path ending in .json.
        #[arg(default_value = "paper-full")]
        suite: String,
        /// List builtin suites and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print one of the named matrices R, Rhat, B, C, D, F.
    Matrix {
        name: String,
        /// The two colours, comma separated (default l,m).
        #[arg(long, default_value = "l,m")]
        at: String,
    },
    /// Apply the exterior differential to an expression.
    D {
        expr: String,
        /// leibniz (default) or operator.
        #[arg(long, default_value = "leibniz")]
        route: String,
        /// Representation colour for the operator route.
        #[arg(long, default_value = "l")]
        colour: String,
    },
    /// Print the transformed x-y relation, the hybrid relation and the
    /// contracted h-plane relation.
    Contract {
        /// Commutator sign convention: - (alpha = h/(q-1)) or +.
        #[arg(long, default_value = "-")]
        sign: String,
        /// The two colours, comma separated.
        #[arg(long, default_value = "l,m")]
        at: String,
    },
    /// Print the embedded rule manifest.
    Rules {
        /// Restrict to one sector.
        #[arg(long, default_value = "everything")]
        sector: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn colour_env(cli: &Cli) -> ColourEnv {
    let declared = cli
        .colours
        .clone()
        .or_else(|| std::env::var("CQP_COLOURS").ok())
        .unwrap_or_else(|| "l,m,n".to_string());
    let names: Vec<String> =
        declared.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    ColourEnv::new(&names)
}

fn format_of(cli: &Cli) -> Result<Format> {
    Format::from_name(&cli.format)
        .ok_or_else(|| anyhow!("unknown format `{}` (text, json or latex)", cli.format))
}

fn parse_colour_token(s: &str, env: &ColourEnv) -> Result<ColourSymbol<Rat>> {
    let src = format!("x[{s}]");
    let p: Poly = parse_expr(&src, env).map_err(|e| anyhow!("bad colour `{s}`: {e}"))?;
    let (w, _) = p.terms().next().ok_or_else(|| anyhow!("bad colour `{s}`"))?;
    Ok(w.0[0].colour.clone())
}

fn two_colours(spec: &str, env: &ColourEnv) -> Result<(ColourSymbol<Rat>, ColourSymbol<Rat>)> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(anyhow!("expected two colours, e.g. `l,m`, got `{spec}`"));
    }
    Ok((parse_colour_token(parts[0], env)?, parse_colour_token(parts[1], env)?))
}

fn print_poly(p: &Poly, format: Format) {
    match format {
        Format::Text => println!("{p}"),
        Format::Latex => println!("{}", render::latex_nc_poly(p)),
        Format::Json => {
            println!("{}", render::envelope("ncpoly", render::json_nc_poly(p)))
        }
    }
}

fn print_matrix(m: &Matrix, format: Format) {
    match format {
        Format::Text => {
            let cells: Vec<Vec<String>> = (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| m.entry(i, j).to_string()).collect())
                .collect();
            let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
            for row in &cells {
                let line: Vec<String> = row.iter().map(|c| format!("{c:width$}")).collect();
                println!("[ {} ]", line.join("  "));
            }
        }
        Format::Latex => println!("{}", render::latex_matrix(m)),
        Format::Json => println!("{}", render::envelope("matrix", render::json_matrix(m))),
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let env = colour_env(cli);
    let format = format_of(cli)?;
    match &cli.command {
        Command::Normalize { expr, sector } => {
            let sector = Sector::from_name(sector)
                .ok_or_else(|| anyhow!("unknown sector `{sector}`"))?;
            let p: Poly = parse_expr(expr, &env).map_err(|e| anyhow!("{e}"))?;
            let sys = RewriteSystem::new(sector);
            let nf = sys.normalize(&p).map_err(|e| anyhow!("{e}"))?;
            print_poly(&nf, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { suite: which, list } => {
            if *list {
                for name in suite::BUILTIN_SUITES {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let def: SuiteDefinition = if which.ends_with(".json") {
                let text = std::fs::read_to_string(which)
                    .with_context(|| format!("reading suite file {which}"))?;
                serde_json::from_str(&text).with_context(|| format!("parsing suite {which}"))?
            } else {
                suite::builtin_suite(which)?
            };
            let reports = suite::run_suite::<Rat>(&def);
            match format {
                Format::Json => println!("{}", suite::render_json(&def.name, &reports)),
                _ => print!("{}", suite::render_text(&reports)),
            }
            Ok(if suite::all_passed(&reports) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Matrix { name, at } => {
            let name = MatrixName::from_name(name)
                .ok_or_else(|| anyhow!("unknown matrix `{name}` (R, Rhat, B, C, D, F)"))?;
            let (c1, c2) = two_colours(at, &env)?;
            let m = build_matrix(name, &c1, &c2).map_err(|e| anyhow!("{e}"))?;
            print_matrix(&m, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::D { expr, route, colour } => {
            let p: Poly = parse_expr(expr, &env).map_err(|e| anyhow!("{e}"))?;
            let out = match route.as_str() {
                "leibniz" => cqp_core::calculus::apply_d(&p).map_err(|e| anyhow!("{e}"))?,
                "operator" => {
                    let c = parse_colour_token(colour, &env)?;
                    cqp_core::calculus::apply_d_operator(&p, &c).map_err(|e| anyhow!("{e}"))?
                }
                other => return Err(anyhow!("unknown route `{other}` (leibniz or operator)")),
            };
            print_poly(&out, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Contract { sign, at } => {
            let convention = match sign.as_str() {
                "-" => SignConvention::Plus,
                "+" => SignConvention::Minus,
                other => return Err(anyhow!("unknown sign `{other}` (use + or -)")),
            };
            let t = GTransform::<Rat>::new(convention);
            let (c1, c2) = two_colours(at, &env)?;
            let rel = contraction::xy_relation(&c1, &c2);
            let hybrid_lhs =
                contraction::transform_relation(&rel, &t).map_err(|e| anyhow!("{e}"))?;
            let rhs = contraction::qh_hybrid_relation(&c1, &c2, &t).map_err(|e| anyhow!("{e}"))?;
            let limit = contraction::contract_relation(&rel, &t).map_err(|e| anyhow!("{e}"))?;
            match format {
                Format::Json => {
                    let v = serde_json::json!({
                        "sigma": t.sigma(),
                        "transformed": render::json_nc_poly(&hybrid_lhs),
                        "hybrid_rhs": render::json_nc_poly(&rhs),
                        "limit_terms": limit
                            .terms
                            .iter()
                            .map(|(w, c)| serde_json::json!({
                                "word": render::json_word(w),
                                "coeff": c.to_string(),
                            }))
                            .collect::<Vec<_>>(),
                    });
                    println!("{}", render::envelope("contraction", v));
                }
                Format::Latex => {
                    println!("sigma = {}", t.sigma());
                    println!("transformed: {} = 0", render::latex_nc_poly(&hybrid_lhs));
                    println!("hybrid RHS: {}", render::latex_nc_poly(&rhs));
                    println!("limit: {limit} = 0");
                }
                Format::Text => {
                    println!("sigma = {}", t.sigma());
                    println!("transformed relation: {hybrid_lhs} = 0");
                    println!("hybrid relation: {rel} = {rhs}");
                    println!("contracted relation: {limit} = 0");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rules { sector } => {
            let sector = Sector::from_name(sector)
                .ok_or_else(|| anyhow!("unknown sector `{sector}`"))?;
            let families = rewrite::builtin_families_for::<Rat>(sector);
            match format {
                Format::Json => println!(
                    "{}",
                    render::envelope("rules", rewrite::families_to_json(&families))
                ),
                _ => {
                    println!("rule manifest version {}", rewrite::RULES_VERSION);
                    for f in &families {
                        let l = ColourSymbol::<Rat>::sym("c1");
                        let m = ColourSymbol::<Rat>::sym("c2");
                        match f.relation_poly(&l, &m) {
                            Some(rel) => println!("{:28} [{}]  {rel} = 0", f.name, f.guard),
                            None => println!("{:28} [{}]  (rejected pair)", f.name, f.guard),
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
