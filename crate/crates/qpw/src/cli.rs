//! Batch command-line front end.  Every verdict is decided by an exact
//! arithmetic assertion in the library; floating-point numbers appear only
//! in report fields labelled `float`.  JSON is the source of truth, CSV a
//! lossy float-only view.  Exit codes: 0 = all assertions passed, 1 = a
//! mathematical assertion failed, 2 = usage or input error.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::cyclo::{CycloScalar, PowerScalar};
use crate::mbf::Mbf;
use crate::mra;
use crate::padic::{rat_from_string, rat_to_string, Angle, Ball, PAdicVector};
use crate::psdo::{self, Symbol};
use crate::wavelets::{self, GammaVector, RealFamily, WaveletIndex};

const SCHEMA: &str = "qpw/1";

#[derive(Parser)]
#[command(name = "qpw", version, about = "Exact p-adic wavelet toolkit")]
struct Cli {
    /// TOML config file; explicit flags win over config values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Output path (stdout when omitted)
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the two-scale refinement identity for the scaling function
    CheckRefinement {
        #[arg(long)]
        p: Option<u32>,
    },
    /// Gram matrix of an enumerated wavelet family; verdict: identity?
    CheckOrthonormal {
        /// dimension
        #[arg(long)]
        n: Option<usize>,
        /// scale levels, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        j: Vec<i64>,
        /// truncation of the shift set (defaults to s + 2)
        #[arg(long, allow_hyphen_values = true)]
        gamma_max: Option<i64>,
        /// wavelet order used in every coordinate (0 = Haar)
        #[arg(long)]
        s: Option<u32>,
        /// 2^s unit-circle angles (turns, dyadic rationals) when s > 0
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma_angles: Vec<String>,
        /// deliberately rescale the first element (expected verdict: fail)
        #[arg(long)]
        scale: Option<String>,
    },
    /// Check the shift matrix D built from a gamma vector is unitary
    CheckUnitary {
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma_angles: Vec<String>,
    },
    /// Emit the enumerated wavelet table
    GenBasis {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        j: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        gamma_max: Option<i64>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma_angles: Vec<String>,
    },
    /// Exact multiresolution decomposition of an input function (JSON)
    Decompose {
        #[arg(long)]
        input: Option<PathBuf>,
        /// coarsest level retained
        #[arg(long, allow_hyphen_values = true)]
        j0: Option<i64>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma_angles: Vec<String>,
    },
    /// Rebuild a function from a decomposition report (JSON)
    Reconstruct {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma_angles: Vec<String>,
    },
    /// Apply a Fourier-multiplier operator to an input function (JSON)
    ApplyOp {
        #[arg(long)]
        input: Option<PathBuf>,
        /// fractional:alpha=<re>[,<im>] | constant:<value> | two-valued-test
        #[arg(long)]
        symbol: Option<String>,
    },
    /// Eigenfunction criterion + direct verification + eigenvalue
    CheckEigen {
        #[arg(long)]
        symbol: Option<String>,
        /// active coordinates (1-based), comma separated
        #[arg(long, value_delimiter = ',')]
        e: Vec<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        j: Option<i64>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma_angles: Vec<String>,
    },
    /// Tables of the real-valued wavelet families
    EnumerateReal {
        /// half-shift | quarter-shift | quarter-offset | all
        #[arg(long)]
        family: Option<String>,
        /// angles (turns, dyadic rationals), comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        theta: Vec<String>,
    },
}

pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(std::iter::once("qpw".to_string()).chain(argv)) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Ok(threads) = std::env::var("QPW_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global();
        }
    }
    let cfg = match cli.config.as_ref().map(load_config).transpose() {
        Ok(c) => c.unwrap_or_else(|| toml::Table::new()),
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let format = cli
        .format
        .or_else(|| match cfg.get("format").and_then(|v| v.as_str()) {
            Some("csv") => Some(Format::Csv),
            Some("json") => Some(Format::Json),
            _ => None,
        })
        .unwrap_or(Format::Json);
    let output = cli.output.clone().or_else(|| {
        cfg.get("output")
            .and_then(|v| v.as_str())
            .map(PathBuf::from)
    });
    match execute(cli.command, &cfg) {
        Ok((pass, report)) => {
            let text = match format {
                Format::Json => format!("{:#}\n", report),
                Format::Csv => json_to_csv(&report),
            };
            let written = match output {
                Some(path) => fs::write(&path, text).map_err(|e| e.to_string()),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn load_config(path: &PathBuf) -> Result<toml::Table, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.parse::<toml::Table>()
        .map_err(|e| format!("{}: {e}", path.display()))
}

/// Lossy float view: one `key,value` row per numeric or boolean leaf.
fn json_to_csv(report: &Value) -> String {
    fn walk(prefix: &str, v: &Value, rows: &mut Vec<String>) {
        match v {
            Value::Object(map) => {
                for (k, v) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, v, rows);
                }
            }
            Value::Array(items) => {
                for (i, v) in items.iter().enumerate() {
                    walk(&format!("{prefix}[{i}]"), v, rows);
                }
            }
            Value::Number(x) => rows.push(format!("{prefix},{x}")),
            Value::Bool(b) => rows.push(format!("{prefix},{}", if *b { 1 } else { 0 })),
            Value::Null | Value::String(_) => {}
        }
    }
    let mut rows = vec!["key,value".to_string()];
    walk("", report, &mut rows);
    rows.join("\n") + "\n"
}

// --- config/flag merge helpers ---------------------------------------------

fn cfg_i64(cfg: &toml::Table, key: &str) -> Option<i64> {
    cfg.get(key).and_then(|v| v.as_integer())
}

fn cfg_str(cfg: &toml::Table, key: &str) -> Option<String> {
    cfg.get(key).and_then(|v| v.as_str()).map(str::to_string)
}

fn cfg_list(cfg: &toml::Table, key: &str) -> Option<Vec<String>> {
    cfg.get(key).and_then(|v| v.as_array()).map(|items| {
        items
            .iter()
            .map(|v| match v {
                toml::Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect()
    })
}

fn cfg_i64_list(cfg: &toml::Table, key: &str) -> Option<Vec<i64>> {
    cfg.get(key).and_then(|v| v.as_array()).map(|items| {
        items
            .iter()
            .filter_map(|v| v.as_integer())
            .collect()
    })
}

fn merge_list<T>(flag: Vec<T>, config: Option<Vec<T>>) -> Vec<T> {
    if flag.is_empty() {
        config.unwrap_or_default()
    } else {
        flag
    }
}

// --- shared parsing ---------------------------------------------------------

fn parse_rat(s: &str) -> Result<BigRational, String> {
    rat_from_string(s.trim()).map_err(|e| e.to_string())
}

fn parse_angles(values: &[String]) -> Result<Vec<Angle>, String> {
    values
        .iter()
        .map(|s| Angle::new(2, parse_rat(s)?).map_err(|e| e.to_string()))
        .collect()
}

fn build_gamma(s: u32, angles: &[String]) -> Result<Option<GammaVector>, String> {
    if s == 0 {
        if !angles.is_empty() {
            return Err("gamma angles are only meaningful when s > 0".into());
        }
        return Ok(None);
    }
    let angles = parse_angles(angles)?;
    if angles.len() != (1usize << s) {
        return Err(format!(
            "s = {s} needs exactly {} gamma angles, got {}",
            1usize << s,
            angles.len()
        ));
    }
    GammaVector::from_angles(s, &angles)
        .map(Some)
        .map_err(|e| e.to_string())
}

fn choose_psi(s: u32, angles: &[String]) -> Result<Mbf, String> {
    match build_gamma(s, angles)? {
        None => Ok(wavelets::psi0()),
        Some(g) => Ok(wavelets::psi_s(&g)),
    }
}

fn parse_symbol(spec: &str, n: usize) -> Result<Box<dyn Symbol>, String> {
    if let Some(rest) = spec.strip_prefix("fractional:alpha=") {
        let mut parts = rest.split(',');
        let re = parse_rat(parts.next().unwrap_or(""))?;
        let im = match parts.next() {
            Some(s) => parse_rat(s)?,
            None => BigRational::from_integer(0.into()),
        };
        if parts.next().is_some() {
            return Err("fractional symbol takes at most two exponent components".into());
        }
        return Ok(Box::new(psdo::FractionalNorm::new(2, n, re, im)));
    }
    if let Some(rest) = spec.strip_prefix("constant:") {
        let c = CycloScalar::from_rational(2, parse_rat(rest)?);
        return Ok(Box::new(psdo::ConstantSymbol::new(
            n,
            PowerScalar::from_cyclo(c),
        )));
    }
    if spec == "two-valued-test" {
        let e: Vec<usize> = (1..=n).collect();
        let ball = Ball::new(psdo::probe_point(&e, n, 0), 0);
        return Ok(Box::new(psdo::TwoValuedSymbol::new(
            ball,
            PowerScalar::p_power(
                2,
                BigRational::from_integer(1.into()),
                BigRational::from_integer(0.into()),
            ),
            PowerScalar::one(2),
        )));
    }
    Err(format!("unrecognized symbol spec: {spec}"))
}

fn read_json(path: Option<PathBuf>) -> Result<Value, String> {
    let path = path.ok_or("missing --input")?;
    let text = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn gram_float(m: &[Vec<CycloScalar>]) -> Value {
    Value::Array(
        m.iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|c| {
                            let (re, im) = c.to_complex_f64();
                            json!([re, im])
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

fn vector_json(v: &PAdicVector) -> Value {
    Value::Array(
        v.coords()
            .iter()
            .map(|x| Value::String(rat_to_string(&x.to_rational())))
            .collect(),
    )
}

fn index_json(idx: &WaveletIndex) -> Value {
    json!({
        "e": idx.e,
        "s": idx.s,
        "j": idx.j,
        "a": vector_json(&idx.a),
    })
}

// --- dispatch ---------------------------------------------------------------

fn execute(cmd: Command, cfg: &toml::Table) -> Result<(bool, Value), String> {
    match cmd {
        Command::CheckRefinement { p } => {
            let p = p.or_else(|| cfg_i64(cfg, "p").map(|v| v as u32)).unwrap_or(2);
            if ![2u32, 3, 5, 7, 11, 13].contains(&p) {
                return Err(format!("p = {p} is not a supported prime"));
            }
            let holds = mra::check_refinement(p);
            Ok((
                holds,
                json!({
                    "schema": SCHEMA,
                    "command": "check-refinement",
                    "p": p,
                    "holds": holds,
                    "report": if holds { "identity holds" } else { "identity fails" },
                }),
            ))
        }
        Command::CheckOrthonormal {
            n,
            j,
            gamma_max,
            s,
            gamma_angles,
            scale,
        } => {
            let n = n
                .or_else(|| cfg_i64(cfg, "n").map(|v| v as usize))
                .unwrap_or(1);
            let j = merge_list(j, cfg_i64_list(cfg, "j"));
            let j = if j.is_empty() { vec![0] } else { j };
            let s = s.or_else(|| cfg_i64(cfg, "s").map(|v| v as u32)).unwrap_or(0);
            let gamma_angles = merge_list(gamma_angles, cfg_list(cfg, "gamma_angles"));
            let gamma_max = gamma_max
                .or_else(|| cfg_i64(cfg, "gamma_max"))
                .unwrap_or(s as i64 + 2);
            let scale = scale.or_else(|| cfg_str(cfg, "scale"));
            let gamma = build_gamma(s, &gamma_angles)?;
            let s_config: Vec<(u32, Option<GammaVector>)> =
                (0..n).map(|_| (s, gamma.clone())).collect();
            let indices = wavelets::enumerate_basis(n, &j, gamma_max, &s_config)
                .map_err(|e| e.to_string())?;
            let mut family: Vec<Mbf> = indices
                .iter()
                .map(|idx| wavelets::tensor_wavelet(idx).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            if let Some(scale) = scale {
                let r = parse_rat(&scale)?;
                if let Some(first) = family.first_mut() {
                    *first = first.scale_rational(&r);
                }
            }
            let gram = mra::gram_matrix(&family);
            let identity = mra::is_identity(&gram);
            let mut report = json!({
                "schema": SCHEMA,
                "command": "check-orthonormal",
                "n": n,
                "j": j,
                "s": s,
                "gamma_max": gamma_max,
                "size": family.len(),
                "identity": identity,
            });
            if family.len() <= 16 {
                report["gram_float"] = gram_float(&gram);
            }
            Ok((identity, report))
        }
        Command::CheckUnitary { s, gamma_angles } => {
            let s = s
                .or_else(|| cfg_i64(cfg, "s").map(|v| v as u32))
                .ok_or("missing --s")?;
            let gamma_angles = merge_list(gamma_angles, cfg_list(cfg, "gamma_angles"));
            let gamma = build_gamma(s, &gamma_angles)?.ok_or("check-unitary needs s >= 1")?;
            let alpha = wavelets::alpha_coeffs(&gamma);
            let d = wavelets::shift_matrix_d(&alpha);
            let unitary = wavelets::is_unitary(&d);
            let alpha_float: Vec<Value> = alpha
                .iter()
                .map(|c| {
                    let (re, im) = c.to_complex_f64();
                    json!([re, im])
                })
                .collect();
            Ok((
                unitary,
                json!({
                    "schema": SCHEMA,
                    "command": "check-unitary",
                    "s": s,
                    "unitary": unitary,
                    "alpha_float": alpha_float,
                    "d_float": gram_float(&d),
                }),
            ))
        }
        Command::GenBasis {
            n,
            j,
            gamma_max,
            s,
            gamma_angles,
        } => {
            let n = n
                .or_else(|| cfg_i64(cfg, "n").map(|v| v as usize))
                .unwrap_or(1);
            let j = merge_list(j, cfg_i64_list(cfg, "j"));
            let j = if j.is_empty() { vec![0] } else { j };
            let s = s.or_else(|| cfg_i64(cfg, "s").map(|v| v as u32)).unwrap_or(0);
            let gamma_angles = merge_list(gamma_angles, cfg_list(cfg, "gamma_angles"));
            let gamma_max = gamma_max
                .or_else(|| cfg_i64(cfg, "gamma_max"))
                .unwrap_or(s as i64 + 2);
            let gamma = build_gamma(s, &gamma_angles)?;
            let s_config: Vec<(u32, Option<GammaVector>)> =
                (0..n).map(|_| (s, gamma.clone())).collect();
            let indices = wavelets::enumerate_basis(n, &j, gamma_max, &s_config)
                .map_err(|e| e.to_string())?;
            let rows: Vec<Value> = indices
                .iter()
                .map(|idx| {
                    let f = wavelets::tensor_wavelet(idx).map_err(|e| e.to_string())?;
                    let mut row = index_json(idx);
                    row["mbf"] = f.to_json();
                    Ok(row)
                })
                .collect::<Result<_, String>>()?;
            Ok((
                true,
                json!({
                    "schema": SCHEMA,
                    "command": "gen-basis",
                    "count": rows.len(),
                    "basis": rows,
                }),
            ))
        }
        Command::Decompose {
            input,
            j0,
            s,
            gamma_angles,
        } => {
            let input = input.or_else(|| cfg_str(cfg, "input").map(PathBuf::from));
            let s = s.or_else(|| cfg_i64(cfg, "s").map(|v| v as u32)).unwrap_or(0);
            let gamma_angles = merge_list(gamma_angles, cfg_list(cfg, "gamma_angles"));
            let j0 = j0.or_else(|| cfg_i64(cfg, "j0")).unwrap_or(-3);
            let f = Mbf::from_json(&read_json(input)?).map_err(|e| e.to_string())?;
            let psi = choose_psi(s, &gamma_angles)?;
            let d = mra::decompose(&f, j0, &psi).map_err(|e| e.to_string())?;
            let exact = mra::reconstruct(&d, &psi) == f;
            Ok((
                exact,
                json!({
                    "schema": SCHEMA,
                    "command": "decompose",
                    "round_trip_exact": exact,
                    "decomposition": d.to_json(),
                }),
            ))
        }
        Command::Reconstruct {
            input,
            s,
            gamma_angles,
        } => {
            let input = input.or_else(|| cfg_str(cfg, "input").map(PathBuf::from));
            let s = s.or_else(|| cfg_i64(cfg, "s").map(|v| v as u32)).unwrap_or(0);
            let gamma_angles = merge_list(gamma_angles, cfg_list(cfg, "gamma_angles"));
            let raw = read_json(input)?;
            let payload = raw.get("decomposition").unwrap_or(&raw);
            let d = mra::Decomposition::from_json(payload).map_err(|e| e.to_string())?;
            let psi = choose_psi(s, &gamma_angles)?;
            let f = mra::reconstruct(&d, &psi);
            Ok((
                true,
                json!({
                    "schema": SCHEMA,
                    "command": "reconstruct",
                    "mbf": f.to_json(),
                }),
            ))
        }
        Command::ApplyOp { input, symbol } => {
            let input = input.or_else(|| cfg_str(cfg, "input").map(PathBuf::from));
            let symbol = symbol
                .or_else(|| cfg_str(cfg, "symbol"))
                .ok_or("missing --symbol")?;
            let f = Mbf::from_json(&read_json(input)?).map_err(|e| e.to_string())?;
            let sym = parse_symbol(&symbol, f.dim())?;
            let out = psdo::apply(sym.as_ref(), &f).map_err(|e| e.to_string())?;
            let parts: Vec<Value> = out
                .parts()
                .iter()
                .map(|((re, im), g)| {
                    json!({
                        "exponent": [rat_to_string(re), rat_to_string(im)],
                        "mbf": g.to_json(),
                    })
                })
                .collect();
            let mut report = json!({
                "schema": SCHEMA,
                "command": "apply-op",
                "symbol": symbol,
                "parts": parts,
            });
            if let Some(plain) = out.to_mbf() {
                report["mbf"] = plain.to_json();
            }
            Ok((true, report))
        }
        Command::CheckEigen {
            symbol,
            e,
            n,
            j,
            s,
            gamma_angles,
        } => {
            let symbol = symbol
                .or_else(|| cfg_str(cfg, "symbol"))
                .ok_or("missing --symbol")?;
            let e = merge_list(
                e,
                cfg_i64_list(cfg, "e").map(|v| v.into_iter().map(|x| x as usize).collect()),
            );
            let e = if e.is_empty() { vec![1] } else { e };
            let n = n
                .or_else(|| cfg_i64(cfg, "n").map(|v| v as usize))
                .unwrap_or_else(|| e.iter().copied().max().unwrap_or(1));
            let j = j.or_else(|| cfg_i64(cfg, "j")).unwrap_or(0);
            let s = s.or_else(|| cfg_i64(cfg, "s").map(|v| v as u32)).unwrap_or(0);
            let gamma_angles = merge_list(gamma_angles, cfg_list(cfg, "gamma_angles"));
            let gamma = build_gamma(s, &gamma_angles)?;
            let idx = WaveletIndex {
                e: e.clone(),
                s: vec![s; n],
                gamma: vec![gamma; n],
                j,
                a: PAdicVector::zero(2, n),
            };
            let sym = parse_symbol(&symbol, n)?;
            let verdict =
                psdo::verify_eigenfunction(sym.as_ref(), &idx).map_err(|e| e.to_string())?;
            let mut report = json!({
                "schema": SCHEMA,
                "command": "check-eigen",
                "symbol": symbol,
                "index": index_json(&idx),
                "criterion": verdict.criterion,
                "direct": verdict.direct,
            });
            if verdict.criterion {
                let lambda =
                    psdo::eigenvalue(sym.as_ref(), &e, j).map_err(|e| e.to_string())?;
                report["eigenvalue"] = psdo::power_scalar_json(&lambda);
            }
            Ok((verdict.criterion && verdict.direct, report))
        }
        Command::EnumerateReal { family, theta } => {
            let family = family
                .or_else(|| cfg_str(cfg, "family"))
                .unwrap_or_else(|| "all".to_string());
            let theta = merge_list(theta, cfg_list(cfg, "theta"));
            let theta = if theta.is_empty() {
                vec!["0".to_string(), "1/8".to_string(), "1/4".to_string()]
            } else {
                theta
            };
            let families: Vec<(&str, RealFamily)> = match family.as_str() {
                "half-shift" => vec![("half-shift", RealFamily::HalfShift)],
                "quarter-shift" => vec![("quarter-shift", RealFamily::QuarterShift)],
                "quarter-offset" => vec![("quarter-offset", RealFamily::QuarterOffset)],
                "all" => vec![
                    ("half-shift", RealFamily::HalfShift),
                    ("quarter-shift", RealFamily::QuarterShift),
                    ("quarter-offset", RealFamily::QuarterOffset),
                ],
                other => return Err(format!("unrecognized family: {other}")),
            };
            let angles = parse_angles(&theta)?;
            let mut all_unit = true;
            let mut rows = Vec::new();
            for (name, fam) in &families {
                for (label, angle) in theta.iter().zip(&angles) {
                    let w = wavelets::real_family(*fam, angle).map_err(|e| e.to_string())?;
                    let unit = w.norm_squared().is_one();
                    all_unit &= unit;
                    let coeffs: Vec<Value> = w
                        .terms()
                        .iter()
                        .map(|t| {
                            let (re, im) = t.coef.to_complex_f64();
                            json!({
                                "shift": vector_json(t.ball.center()),
                                "coef_float": [re, im],
                            })
                        })
                        .collect();
                    rows.push(json!({
                        "family": name,
                        "theta": label,
                        "unit_norm": unit,
                        "coeffs": coeffs,
                        "mbf": w.to_json(),
                    }));
                }
            }
            Ok((
                all_unit,
                json!({
                    "schema": SCHEMA,
                    "command": "enumerate-real",
                    "rows": rows,
                }),
            ))
        }
    }
}
