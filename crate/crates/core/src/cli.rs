//! Command-line front end.
//!
//! Gems are read from a file argument or standard input and written to `-o`
//! or standard output, so commands compose in pipelines. Exit codes: 0 on
//! success, 1 on a domain error, 2 on a usage error.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::complex::{self, HomologyProfile};
use crate::embedding::{self, BigonPolicy, TypeSignature};
use crate::error::{GemError, Result};
use crate::generators::{self, catalog_entries_all, catalog_manifest};
use crate::graph::ColoredGraph;
use crate::io;
use crate::iso::{self, ColorMode};
use crate::search::{self, SearchSpec};

#[derive(Debug, Parser)]
#[command(name = "gemkit", version, about = "Colored graphs encoding manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Bigons {
    Include,
    Exclude,
}

impl From<Bigons> for BigonPolicy {
    fn from(b: Bigons) -> Self {
        match b {
            Bigons::Include => BigonPolicy::Include,
            Bigons::Exclude => BigonPolicy::Exclude,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GemFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a member of a family (see `catalog --manifest` for names)
    Gen {
        family: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Index joined to the first vertex in the nonbipartite lens attempt
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        twisted: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: GemFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Regular embeddings, types, Euler characteristics and genus
    Analyze {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "exclude")]
        bigons: Bigons,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Integral homology of the associated complex
    Homology {
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide isomorphism and print a witness
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        permute_colors: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a constrained search described by a JSON spec
    Search {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Face types admissible on a surface of given Euler characteristic
    Types {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long, default_value_t = 24)]
        qmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Small embedded gems of surfaces
    Catalog {
        #[arg(long, conflicts_with_all = ["name", "manifest"])]
        list: bool,
        #[arg(long)]
        name: Option<String>,
        #[arg(long, requires = "name")]
        p: Option<usize>,
        /// Print family and catalog parameter schemas as JSON
        #[arg(long, conflicts_with = "name")]
        manifest: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: GemFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a gem to DOT, canonical JSON or the edge-list text format
    Export {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, output)) => match emit(&text, output.as_ref()) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| GemError::Parse(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| GemError::Parse(e.to_string()))
        }
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| GemError::Parse(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| GemError::Parse(e.to_string()))?;
            Ok(s)
        }
    }
}

fn read_gem(file: Option<&PathBuf>) -> Result<ColoredGraph> {
    io::parse_gem(&read_input(file)?)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn gem_text(g: &ColoredGraph, format: GemFormat) -> String {
    match format {
        GemFormat::Json => format!("{}\n", io::to_json(g)),
        GemFormat::Text => io::to_text(g),
    }
}

fn need(family: &str, name: &str, v: Option<usize>) -> Result<usize> {
    v.ok_or_else(|| GemError::InvalidParameters {
        family: family.into(),
        reason: format!("--{name} is required"),
    })
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: &str,
    p: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    n: Option<usize>,
    d: Option<usize>,
    r: Option<usize>,
    twisted: bool,
) -> Result<ColoredGraph> {
    match family {
        "sphere" => generators::standard_sphere(need(family, "d", d)?),
        "lens" => generators::lens_gem(need(family, "p", p)?, q.unwrap_or(0), k.unwrap_or(2)),
        "lens-nonbipartite" => Ok(generators::lens_nonbipartite_attempt(
            need(family, "p", p)?,
            k.unwrap_or(2),
            r.unwrap_or(0),
        )?
        .0),
        "rp2-sum" => generators::rp2_sum_gem(need(family, "n", n)?),
        "torus-sum" => generators::torus_sum_gem(need(family, "n", n)?),
        "sphere-times-circle" => {
            generators::sphere_times_circle_gem(need(family, "d", d)?, twisted)
        }
        name => generators::catalog(name, p),
    }
}

fn analyze_text(g: &ColoredGraph, report: &embedding::SemiEquivelarReport) -> Result<String> {
    let mut s = String::new();
    let contracted = g.is_contracted()?;
    writeln!(
        s,
        "order {}, dimension {}, {}, {}",
        g.order(),
        g.dimension(),
        if g.is_bipartite() {
            "bipartite"
        } else {
            "nonbipartite"
        },
        if contracted {
            "contracted"
        } else {
            "not contracted"
        }
    )
    .unwrap();
    for r in &report.reports {
        let ty = match &r.signature {
            Some(sig) => TypeSignature::new(sig.clone()).to_string(),
            None => "none".to_string(),
        };
        let g_values: Vec<String> = r.g_values.iter().map(|x| x.to_string()).collect();
        writeln!(
            s,
            "epsilon {}: g ({}), type {}, chi {}, rho {}",
            r.epsilon,
            g_values.join(","),
            ty,
            r.chi,
            r.rho()
        )
        .unwrap();
    }
    writeln!(
        s,
        "regular genus {}",
        embedding::HalfInt(report.regular_genus_times_2)
    )
    .unwrap();
    match report.witness_report() {
        Some(r) => {
            let sig = TypeSignature::new(r.signature.clone().unwrap_or_default());
            writeln!(
                s,
                "semi-equivelar: type {}, condensed {}, chi {}, rho {}, epsilon {}",
                sig,
                sig.condensed(),
                r.chi,
                r.rho(),
                r.epsilon
            )
            .unwrap();
        }
        None => writeln!(s, "semi-equivelar: none").unwrap(),
    }
    Ok(s)
}

fn execute(cmd: &Command) -> Result<(String, Option<PathBuf>)> {
    match cmd {
        Command::Gen {
            family,
            p,
            q,
            k,
            n,
            d,
            r,
            twisted,
            format,
            output,
        } => {
            let g = generate(family, *p, *q, *k, *n, *d, *r, *twisted)?;
            Ok((gem_text(&g, *format), output.clone()))
        }
        Command::Analyze {
            file,
            bigons,
            json: as_json,
            output,
        } => {
            let g = read_gem(file.as_ref())?;
            let report = embedding::semi_equivelar_report(&g, (*bigons).into())?;
            let text = if *as_json {
                json(&report)
            } else {
                analyze_text(&g, &report)?
            };
            Ok((text, output.clone()))
        }
        Command::Homology {
            file,
            json: as_json,
            output,
        } => {
            let g = read_gem(file.as_ref())?;
            let h: HomologyProfile = complex::homology(&g)?;
            let text = if *as_json { json(&h) } else { format!("{h}\n") };
            Ok((text, output.clone()))
        }
        Command::Iso {
            a,
            b,
            permute_colors,
            json: as_json,
        } => {
            let ga = read_gem(Some(a))?;
            let gb = read_gem(Some(b))?;
            let mode = if *permute_colors {
                ColorMode::ColorPermuting
            } else {
                ColorMode::ColorFixed
            };
            let found = iso::isomorphic(&ga, &gb, mode);
            let text = match (&found, *as_json) {
                (_, true) => json(&serde_json::json!({
                    "isomorphic": found.is_some(),
                    "vertex_map": found.as_ref().map(|i| i.vertex_map.clone()),
                    "color_map": found.as_ref().map(|i| i.color_map.clone()),
                })),
                (Some(i), false) => format!(
                    "isomorphic\nvertex map {:?}\ncolor map {:?}\n",
                    i.vertex_map, i.color_map
                ),
                (None, false) => "non-isomorphic\n".to_string(),
            };
            Ok((text, None))
        }
        Command::Search {
            spec,
            json: as_json,
            output,
        } => {
            let raw = read_input(Some(spec))?;
            let spec: SearchSpec = serde_json::from_str(&raw)
                .map_err(|e| GemError::Parse(format!("search spec: {e}")))?;
            let report = search::find_gems(&spec)?;
            let text = if *as_json {
                json(&report)
            } else {
                let mut s = String::new();
                writeln!(
                    s,
                    "hits {}, exhaustive {}, nodes {}",
                    report.hit_count, report.exhaustive, report.nodes
                )
                .unwrap();
                for h in &report.hits {
                    writeln!(
                        s,
                        "{} bipartite {} chi {} type {}",
                        h.canonical,
                        h.bipartite,
                        h.chi,
                        TypeSignature::new(h.signature.clone())
                    )
                    .unwrap();
                }
                s
            };
            Ok((text, output.clone()))
        }
        Command::Types {
            chi,
            qmax,
            json: as_json,
        } => {
            if *chi > 2 {
                return Err(GemError::InvalidParameters {
                    family: "types".into(),
                    reason: "chi must be at most 2".into(),
                });
            }
            if *qmax < 4 {
                return Err(GemError::InvalidParameters {
                    family: "types".into(),
                    reason: "qmax must be at least 4".into(),
                });
            }
            let types = search::enumerate_embedding_types(*chi, *qmax);
            let text = if *as_json {
                json(&types)
            } else {
                let mut s = format!("{:<16} {:>6} {}\n", "type", "degree", "order");
                for t in &types {
                    writeln!(s, "{:<16} {:>6} {}", t.condensed(), t.degree, t.order).unwrap();
                }
                s
            };
            Ok((text, None))
        }
        Command::Catalog {
            list,
            name,
            p,
            manifest,
            format,
            output,
        } => {
            if *manifest {
                return Ok((json(&catalog_manifest()), output.clone()));
            }
            match name {
                Some(name) => {
                    let g = generators::catalog(name, *p)?;
                    Ok((gem_text(&g, *format), output.clone()))
                }
                None => {
                    let _ = list;
                    let mut s = String::new();
                    for e in catalog_entries_all() {
                        let order = if e.parametric_order {
                            format!("{}p", e.order)
                        } else {
                            e.order.to_string()
                        };
                        let sig: Vec<String> = e
                            .signature
                            .iter()
                            .map(|&q| if q == 0 { "*".into() } else { q.to_string() })
                            .collect();
                        writeln!(
                            s,
                            "{:<14} {:<17} ({}) order {} chi {}{}",
                            e.name,
                            e.surface,
                            sig.join(","),
                            order,
                            e.chi,
                            if e.default_enabled { "" } else { " [optional]" }
                        )
                        .unwrap();
                    }
                    Ok((s, output.clone()))
                }
            }
        }
        Command::Export {
            file,
            format,
            output,
        } => {
            let g = read_gem(file.as_ref())?;
            let text = match format {
                ExportFormat::Dot => io::to_dot(&g),
                ExportFormat::Json => format!("{}\n", io::to_json(&g)),
                ExportFormat::Text => io::to_text(&g),
            };
            Ok((text, output.clone()))
        }
    }
}
