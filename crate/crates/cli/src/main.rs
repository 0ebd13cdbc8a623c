//! `chromalg` command-line front end.

mod expr;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chromalg::algebra::{golden_eval, minpoly_d, parse_rational, GoldenPoint, IntPoly};
use chromalg::chromalg::{ChromElement, ChromElementJson, PhiImage};
use chromalg::chromatic::{chromatic_dc_with, chromatic_statesum, global_cache, persist};
use chromalg::harness::{self, Named, TriangulationJson, VerifyReport};
use chromalg::planar::{GraphJson, PlanarMap, RectGraph, Triangulation};
use chromalg::tl::{jones_wenzl, render::render_element, TlElement};

const CACHE_FILE: &str = "chromatic.cache";

#[derive(Parser)]
#[command(
    name = "chromalg",
    version,
    about = "Chromatic polynomials, Temperley-Lieb projectors and the map between them"
)]
struct Cli {
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for campaigns (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dc,
    Statesum,
    Both,
}

#[derive(clap::Args)]
struct CorpusArgs {
    /// Directory of triangulation JSON files.
    #[arg(long, conflicts_with = "generate")]
    corpus: Option<PathBuf>,
    /// Random triangulations: vertices,count,seed.
    #[arg(long)]
    generate: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Chromatic polynomial of a closed planar map.
    Chromatic {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "dc")]
        method: Method,
        /// poly, golden1 (Q=φ+1), golden2 (Q=φ+2) or Q=p/q.
        #[arg(long, default_value = "poly")]
        eval: String,
    },
    /// Dual of a connected closed map.
    Dual { graph: PathBuf },
    /// Closure of a rectangle graph with matching boundaries.
    Closure { graph: PathBuf },
    /// Jones-Wenzl projector P^(n).
    Jw {
        #[arg(long)]
        n: usize,
        /// Reduce coefficients at d = 2cos(πj/(m+1)), given as j,m.
        #[arg(long)]
        at_special: Option<String>,
    },
    /// Image of a rectangle graph or chromatic element.
    Phi { graph: PathBuf },
    /// Evaluate a Temperley-Lieb expression such as "E1*E2 - d^-1*P3".
    Tl {
        expr: String,
        #[arg(long)]
        n: usize,
    },
    /// Write random triangulations.
    Generate {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory; prints a JSON array when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check χ(φ+2) = (φ+2)φ^(3V−10)χ(φ+1)² on a triangulation corpus
    VerifyGolden {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Check the Q = φ+1 relation on generated contexts
    VerifyTutte {
        #[arg(long, default_value_t = 50)]
        contexts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the pulled-back projector relation at d = 2cos(πj/(n+1))
    VerifyBeraha {
        #[arg(long)]
        j: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 30)]
        contexts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        max_n: i64,
    },
    /// Check |χ(φ+1)| ≤ φ^(5−V) on a triangulation corpus
    VerifyEstimate {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Compare chromatic and Temperley-Lieb traces on closed graphs
    VerifyPhiCommutes {
        #[arg(long, default_value_t = 10)]
        max_vertices: usize,
        #[arg(long, default_value_t = 200)]
        words: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Parse(String),
    Check(String),
}

type Out = Result<Outcome, Failure>;

struct Outcome {
    json: Value,
    text: Option<String>,
    ok: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome {
            json,
            text: None,
            ok: true,
        }
    }
}

fn parse_err(e: impl std::fmt::Display) -> Failure {
    Failure::Parse(e.to_string())
}

fn check_err(e: impl std::fmt::Display) -> Failure {
    Failure::Check(e.to_string())
}

fn read_input(p: &Path) -> Result<String, Failure> {
    if p == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(parse_err)?;
        Ok(s)
    } else {
        fs::read_to_string(p).map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(p: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read_input(p)?)
        .map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))
}

/// A map, or a triangulation given by its faces.
fn read_map(p: &Path) -> Result<PlanarMap, Failure> {
    let raw: Value = read_json(p)?;
    if raw.get("faces").is_some() {
        let t: TriangulationJson = serde_json::from_value(raw).map_err(parse_err)?;
        return Ok(t.to_triangulation().map_err(parse_err)?.map().clone());
    }
    let g: GraphJson = serde_json::from_value(raw).map_err(parse_err)?;
    g.to_map().map_err(parse_err)
}

fn read_rect(p: &Path) -> Result<RectGraph, Failure> {
    RectGraph::from_json(&read_json::<GraphJson>(p)?).map_err(parse_err)
}

fn tl_outcome(e: &TlElement, extra: Value) -> Outcome {
    let mut json = serde_json::to_value(e.to_json()).expect("serializable");
    if let (Value::Object(m), Value::Object(x)) = (&mut json, extra) {
        m.extend(x);
    }
    Outcome {
        json,
        text: Some(render_element(e)),
        ok: true,
    }
}

fn report_outcome(r: VerifyReport) -> Outcome {
    let mut text = String::new();
    for i in &r.items {
        text.push_str(&format!(
            "{} {}\n",
            if i.passed { "PASS" } else { "FAIL" },
            i.name
        ));
    }
    text.push_str(&format!(
        "{}: {} items, {} failed, {} ms ({})\n",
        r.command,
        r.items.len(),
        r.failures,
        r.timing.total_ms,
        r.corpus
    ));
    let ok = r.passed;
    Outcome {
        json: serde_json::to_value(&r).expect("serializable"),
        text: Some(text),
        ok,
    }
}

fn triangulations(c: &CorpusArgs) -> Result<(Named<Triangulation>, String), Failure> {
    if let Some(dir) = &c.corpus {
        return Ok((
            harness::load_dir(dir).map_err(parse_err)?,
            format!("dir {}", dir.display()),
        ));
    }
    if let Some(spec) = &c.generate {
        let parts: Vec<&str> = spec.split(',').collect();
        let nums: Vec<u64> = parts
            .iter()
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(parse_err)?;
        let [k, count, seed] = nums[..] else {
            return Err(Failure::Parse(
                "--generate expects vertices,count,seed".into(),
            ));
        };
        let ts = harness::generated([k as usize], count as usize, seed).map_err(parse_err)?;
        return Ok((ts, format!("generated k={k} count={count} seed={seed}")));
    }
    Ok((harness::builtin(), "builtin catalog".into()))
}

fn cmd_chromatic(graph: &Path, method: Method, eval: &str) -> Out {
    let m = read_map(graph)?;
    let cache = global_cache();
    let (poly, stats, agree) = match method {
        Method::Dc => {
            let r = chromatic_dc_with(&m, &cache).map_err(check_err)?;
            (r.poly, Some(r.stats), None)
        }
        Method::Statesum => (chromatic_statesum(&m).map_err(check_err)?, None, None),
        Method::Both => {
            let r = chromatic_dc_with(&m, &cache).map_err(check_err)?;
            let s = chromatic_statesum(&m).map_err(check_err)?;
            let same = s == r.poly;
            (r.poly, Some(r.stats), Some(same))
        }
    };
    let value = evaluate(&poly, eval)?;
    let json = json!({ "poly": poly, "display": poly.to_string(), "value": value, "stats": stats, "methods_agree": agree });
    Ok(Outcome {
        text: Some(format!("{poly}\n{}\n", value)),
        json,
        ok: agree != Some(false),
    })
}

fn evaluate(poly: &IntPoly, eval: &str) -> Result<Value, Failure> {
    Ok(match eval {
        "poly" => Value::Null,
        "golden1" => {
            serde_json::to_value(golden_eval(poly, GoldenPoint::PhiPlus1)).expect("serializable")
        }
        "golden2" => {
            serde_json::to_value(golden_eval(poly, GoldenPoint::PhiPlus2)).expect("serializable")
        }
        other => match other.strip_prefix("Q=") {
            Some(q) => Value::String(
                poly.eval_rational(&parse_rational(q).map_err(parse_err)?)
                    .to_string(),
            ),
            None => return Err(Failure::Parse(format!("unknown --eval value {other}"))),
        },
    })
}

fn cmd_jw(n: usize, at: Option<&str>) -> Out {
    if n == 0 || n > 12 {
        return Err(Failure::Parse(format!("jw needs 1 <= n <= 12, got {n}")));
    }
    let p = jones_wenzl(n);
    let Some(at) = at else {
        return Ok(tl_outcome(&p, json!({})));
    };
    let (j, m) = at
        .split_once(',')
        .and_then(|(a, b)| Some((a.trim().parse::<i64>().ok()?, b.trim().parse::<i64>().ok()?)))
        .ok_or_else(|| Failure::Parse("--at-special expects j,m".into()))?;
    let mp = minpoly_d(j, m).map_err(parse_err)?;
    let reduced = p.reduce_mod(&mp).map_err(check_err)?;
    let terms: Vec<Value> = reduced
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| json!({ "pairing": d.pairing(), "coeff": c }))
        .collect();
    let text = reduced
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| format!("+ ({c}) ·\n{}", d.render()))
        .collect::<String>();
    Ok(Outcome {
        json: json!({ "n": n, "minpoly": mp, "terms": terms }),
        text: Some(text),
        ok: true,
    })
}

fn cmd_phi(p: &Path) -> Out {
    let raw: Value = read_json(p)?;
    let img: PhiImage = if raw.get("terms").is_some() {
        let ej: ChromElementJson = serde_json::from_value(raw).map_err(parse_err)?;
        ChromElement::from_json(&ej)
            .map_err(parse_err)?
            .phi()
            .map_err(check_err)?
    } else {
        let gj: GraphJson = serde_json::from_value(raw).map_err(parse_err)?;
        chromalg::chromalg::phi(&RectGraph::from_json(&gj).map_err(parse_err)?)
    };
    let mut out = tl_outcome(&img.element, json!({ "sqrt_d_parity": img.parity }));
    if img.parity == 1 {
        out.text = out.text.map(|t| format!("sqrt(d) ·\n{t}"));
    }
    Ok(out)
}

fn cmd_generate(k: usize, count: usize, seed: u64, out: Option<&Path>) -> Out {
    let ts = harness::generated([k], count, seed).map_err(parse_err)?;
    let params = format!(
        "generated by chromalg {}: k={k} count={count} seed={seed} rng=ChaCha8",
        env!("CARGO_PKG_VERSION")
    );
    let docs: Vec<TriangulationJson> = ts
        .iter()
        .map(|(_, t)| TriangulationJson::from_triangulation(t).with_source(&params))
        .collect();
    match out {
        None => Ok(Outcome::ok(
            serde_json::to_value(&docs).expect("serializable"),
        )),
        Some(dir) => {
            fs::create_dir_all(dir).map_err(check_err)?;
            let mut files = Vec::new();
            for ((name, _), doc) in ts.iter().zip(&docs) {
                let path = dir.join(format!("{name}.json"));
                fs::write(
                    &path,
                    serde_json::to_string_pretty(doc).expect("serializable"),
                )
                .map_err(check_err)?;
                files.push(path.display().to_string());
            }
            Ok(Outcome::ok(json!({ "written": files })))
        }
    }
}

fn run(cli: &Cli) -> Out {
    let cache = global_cache();
    match &cli.cmd {
        Cmd::Chromatic {
            graph,
            method,
            eval,
        } => cmd_chromatic(graph, *method, eval),
        Cmd::Dual { graph } => {
            let d = read_map(graph)?.dual().map_err(check_err)?;
            Ok(Outcome::ok(
                serde_json::to_value(d.to_json()).expect("serializable"),
            ))
        }
        Cmd::Closure { graph } => {
            let c = read_rect(graph)?.closure().map_err(check_err)?;
            Ok(Outcome::ok(
                serde_json::to_value(c.to_json()).expect("serializable"),
            ))
        }
        Cmd::Jw { n, at_special } => cmd_jw(*n, at_special.as_deref()),
        Cmd::Phi { graph } => cmd_phi(graph),
        Cmd::Tl { expr, n } => {
            let e = expr::evaluate(expr, *n).map_err(Failure::Parse)?;
            Ok(tl_outcome(&e, json!({})))
        }
        Cmd::Generate {
            k,
            count,
            seed,
            out,
        } => cmd_generate(*k, *count, *seed, out.as_deref()),
        Cmd::VerifyGolden { corpus } => {
            let (ts, label) = triangulations(corpus)?;
            Ok(report_outcome(harness::verify_golden(&ts, &label, &cache)))
        }
        Cmd::VerifyEstimate { corpus } => {
            let (ts, label) = triangulations(corpus)?;
            Ok(report_outcome(harness::verify_estimate(
                &ts, &label, &cache,
            )))
        }
        Cmd::VerifyTutte { contexts, seed } => Ok(report_outcome(
            harness::verify_tutte(*contexts, *seed, &cache).map_err(check_err)?,
        )),
        Cmd::VerifyBeraha {
            j,
            n,
            contexts,
            seed,
            max_n,
        } => {
            if *j <= 0 || j >= n || n > max_n {
                return Err(Failure::Parse(format!(
                    "need 0 < j < n <= {max_n}, got j={j} n={n}"
                )));
            }
            Ok(report_outcome(
                harness::verify_beraha(*j, *n, *contexts, *seed, &cache).map_err(check_err)?,
            ))
        }
        Cmd::VerifyPhiCommutes {
            max_vertices,
            words,
            seed,
        } => {
            let corpus =
                harness::closed_trivalent(*max_vertices, *words, *seed).map_err(check_err)?;
            let label = format!(
                "closed graphs with <= {max_vertices} vertices, {words} words, seed={seed}"
            );
            Ok(report_outcome(harness::verify_phi_commutes(
                &corpus, &label, &cache,
            )))
        }
    }
}

fn cache_path() -> Option<PathBuf> {
    std::env::var_os("CHROMALG_CACHE_DIR").map(|d| PathBuf::from(d).join(CACHE_FILE))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    harness::configure_jobs(cli.jobs);
    let cache_file = cache_path();
    if let Some(p) = cache_file.as_ref().filter(|p| p.exists()) {
        if let Err(e) = persist::load(&global_cache(), p) {
            eprintln!("warning: ignoring cache {}: {e}", p.display());
        }
    }
    let result = run(&cli);
    if let Some(p) = &cache_file {
        let saved = p
            .parent()
            .map_or(Ok(()), fs::create_dir_all)
            .and_then(|_| persist::save(&global_cache(), p));
        if let Err(e) = saved {
            eprintln!("warning: could not write cache {}: {e}", p.display());
        }
    }
    match result {
        Ok(out) => {
            match (&out.text, cli.pretty) {
                (Some(t), true) => print!("{t}"),
                (None, true) => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                ),
                _ => println!("{}", out.json),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Parse(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
