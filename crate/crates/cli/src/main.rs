//! Command-line interface: exact tableaux enumeration, generating
//! functions, stationary distributions, symbolic ansatz verification,
//! moment pipelines, and tableau bijections.
//!
//! Exit status: 0 success / all verified, 1 a verification produced a
//! counterexample, 2 usage or parse error, 3 capacity or degeneracy error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use asep_tableaux::exactmath::parse_rational;
use asep_tableaux::tableaux::StateWord;
use asep_tableaux::{ansatz, asep, bijections, moments, selftest, tableaux, Error};

#[derive(Parser)]
#[command(
    name = "asep",
    version,
    about = "Exact open-boundary ASEP computations via staircase tableaux"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for enumeration-heavy commands.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Read the whole run configuration from a JSON file instead of a
    /// subcommand.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableauKind {
    Staircase,
    Alt,
    Perm,
}

#[derive(Args, Clone)]
struct ChainParams {
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    beta: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: String,
    #[arg(long, allow_hyphen_values = true)]
    delta: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    u: String,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Count the tableaux of one size and verify the 4^n n! closed form.
    Count { n: usize },
    /// Stream every tableau of one size in the text format.
    Enumerate { n: usize },
    /// Print the weight generating function Z_n, or the one of a single
    /// type given as a 0/1 word.
    Gf {
        n: usize,
        #[arg(long = "type")]
        type_word: Option<String>,
    },
    /// Exact stationary distribution from both routes, with a verdict.
    Stationary {
        n: usize,
        #[command(flatten)]
        params: ChainParams,
    },
    /// Steady-state current and m-point functions.
    Physical {
        n: usize,
        /// Occupied 1-based sites for the m-point function.
        #[arg(long, value_delimiter = ',')]
        points: Vec<usize>,
        #[command(flatten)]
        params: ChainParams,
    },
    /// Symbolically verify the ansatz families and related identities.
    Verify {
        /// Comma-separated families: I, II, III, decrease, identities.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "I,II,III,decrease,identities"
        )]
        families: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Index bound for the decrease sweep.
        #[arg(long, default_value_t = 6)]
        max_index: i64,
    },
    /// Both moment pipelines side by side, with a verdict.
    Moments {
        #[arg(long = "K")]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Accepted for symmetry with the chain commands; must be 1.
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        u: String,
    },
    /// Convert a tableau read from stdin between the three families.
    Biject {
        #[arg(long, value_enum)]
        from: TableauKind,
        #[arg(long, value_enum)]
        to: TableauKind,
    },
    /// Run the full acceptance suite.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Validation(_) | Error::Shape(_) | Error::Domain(_) => 2,
        Error::Capacity(_) | Error::Degeneracy(_) => 3,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let (command, format, output, threads) = match (&cli.config, cli.command.clone()) {
        (Some(path), None) => {
            let (command, format, output, threads) = load_config(path)?;
            (
                command,
                format.unwrap_or(cli.format),
                output.or(cli.output),
                threads.unwrap_or(cli.threads),
            )
        }
        (Some(_), Some(_)) => {
            return Err(Error::Parse(
                "give either --config or a subcommand, not both".into(),
            ))
        }
        (None, Some(command)) => (command, cli.format, cli.output, cli.threads),
        (None, None) => {
            return Err(Error::Parse(
                "missing subcommand (or --config); see --help".into(),
            ))
        }
    };

    let mut sink: Box<dyn Write> = match &output {
        Some(path) => Box::new(io::BufWriter::new(fs::File::create(path).map_err(
            |e| Error::Parse(format!("cannot create {}: {e}", path.display())),
        )?)),
        None => Box::new(io::BufWriter::new(io::stdout())),
    };
    let code = dispatch(command, format, threads, &mut sink)?;
    emit(sink.flush())?;
    Ok(code)
}

fn parse_chain_params(p: &ChainParams) -> Result<asep::AsepParams, Error> {
    Ok(asep::AsepParams::new(
        parse_rational(&p.alpha)?,
        parse_rational(&p.beta)?,
        parse_rational(&p.gamma)?,
        parse_rational(&p.delta)?,
        parse_rational(&p.q)?,
        parse_rational(&p.u)?,
    ))
}

fn chain_params_json(p: &asep::AsepParams) -> Value {
    json!({
        "alpha": p.alpha.to_string(),
        "beta": p.beta.to_string(),
        "gamma": p.gamma.to_string(),
        "delta": p.delta.to_string(),
        "q": p.q.to_string(),
        "u": p.u.to_string(),
    })
}

fn emit(result: io::Result<()>) -> Result<(), Error> {
    match result {
        Ok(()) => Ok(()),
        // A closed pipe (e.g. `asep enumerate 7 | head`) is not an error.
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Error::Parse(format!("write failed: {e}"))),
    }
}

fn emit_json(sink: &mut dyn Write, value: &Value) -> Result<(), Error> {
    emit(writeln!(sink, "{value}"))
}

fn emit_text(sink: &mut dyn Write, text: &str) -> Result<(), Error> {
    emit(writeln!(sink, "{text}"))
}

fn dispatch(
    command: Command,
    format: Format,
    threads: usize,
    sink: &mut dyn Write,
) -> Result<u8, Error> {
    match command {
        Command::Count { n } => {
            let counted = tableaux::count(n)?;
            let formula: u128 = (1..=n as u128).product::<u128>() * 4u128.pow(n as u32);
            let verified = counted == formula;
            match format {
                Format::Text => emit_text(sink, &counted.to_string())?,
                Format::Json => emit_json(
                    sink,
                    &json!({"n": n, "count": counted.to_string(), "verified": verified}),
                )?,
            }
            Ok(if verified { 0 } else { 1 })
        }
        Command::Enumerate { n } => {
            for t in tableaux::enumerate(n)? {
                match format {
                    Format::Text => {
                        emit_text(sink, &t.to_text())?;
                        emit_text(sink, "")?;
                    }
                    Format::Json => emit_json(sink, &t.to_json())?,
                }
            }
            Ok(0)
        }
        Command::Gf { n, type_word } => {
            let gf = match &type_word {
                Some(word) => tableaux::gf_by_type(n, &word.parse::<StateWord>()?)?,
                None => tableaux::gf_total_threaded(n, true, threads)?,
            };
            match format {
                Format::Text => emit_text(sink, &gf.to_text())?,
                Format::Json => emit_json(
                    sink,
                    &json!({"n": n, "type": type_word, "gf": gf.to_json()}),
                )?,
            }
            Ok(0)
        }
        Command::Stationary { n, params } => {
            let params = parse_chain_params(&params)?;
            let counted = asep::stationary_tableaux(n, &params)?;
            let solved = asep::stationary_exact(&asep::build_chain(n, &params)?)?;
            let equal = counted == solved;
            match format {
                Format::Text => {
                    for (word, p) in counted.iter() {
                        emit_text(
                            sink,
                            &format!("{word}: tableaux={p} solver={}", solved.get(word)),
                        )?;
                    }
                    emit_text(sink, if equal { "verdict: equal" } else { "verdict: UNEQUAL" })?;
                }
                Format::Json => {
                    let as_map = |dist: &asep::StationaryDist| -> Value {
                        Value::Object(
                            dist.iter()
                                .map(|(w, p)| (w.to_string(), Value::String(p.to_string())))
                                .collect(),
                        )
                    };
                    emit_json(
                        sink,
                        &json!({
                            "n": n,
                            "params": chain_params_json(&params),
                            "stationary": as_map(&counted),
                            "solver": as_map(&solved),
                            "equal": equal,
                        }),
                    )?;
                }
            }
            Ok(if equal { 0 } else { 1 })
        }
        Command::Physical { n, points, params } => {
            let params = parse_chain_params(&params)?;
            let current = asep::current(n, &params)?;
            let m_point = if points.is_empty() {
                None
            } else {
                Some(asep::m_point(n, &points, &params)?)
            };
            match format {
                Format::Text => {
                    emit_text(sink, &format!("current = {current}"))?;
                    if let Some(value) = &m_point {
                        let labels: Vec<String> = points.iter().map(|p| p.to_string()).collect();
                        emit_text(sink, &format!("m_point({}) = {value}", labels.join(",")))?;
                    }
                }
                Format::Json => emit_json(
                    sink,
                    &json!({
                        "n": n,
                        "params": chain_params_json(&params),
                        "current": current.to_string(),
                        "points": points,
                        "m_point": m_point.map(|v| v.to_string()),
                    }),
                )?,
            }
            Ok(0)
        }
        Command::Verify {
            families,
            max_len,
            max_index,
        } => {
            let mut cache = ansatz::TransferCache::new();
            let mut reports = Vec::new();
            for family in &families {
                match family.as_str() {
                    "I" => reports.push(ansatz::verify_family_i(&mut cache, max_len)?),
                    "II" => reports.push(ansatz::verify_family_ii(&mut cache, max_len)?),
                    "III" => reports.push(ansatz::verify_family_iii(&mut cache, max_len)?),
                    "decrease" => reports.push(ansatz::verify_decrease(max_len, max_index)?),
                    "identities" => reports.extend(ansatz::verify_identities(max_len)?),
                    other => {
                        return Err(Error::Parse(format!(
                            "unknown family `{other}` (expected I, II, III, decrease, identities)"
                        )))
                    }
                }
            }
            let all_ok = reports.iter().all(|r| r.is_ok());
            match format {
                Format::Text => {
                    for report in &reports {
                        if report.is_ok() {
                            emit_text(sink, &format!("{}: ok", report.family))?;
                        } else {
                            emit_text(
                                sink,
                                &format!(
                                    "{}: fail {}",
                                    report.family,
                                    serde_json::to_string(report).expect("report serializes")
                                ),
                            )?;
                        }
                    }
                    emit_text(sink, if all_ok { "ok" } else { "FAIL" })?;
                }
                Format::Json => {
                    let list: Vec<Value> = reports
                        .iter()
                        .map(|r| serde_json::to_value(r).expect("report serializes"))
                        .collect();
                    emit_json(sink, &Value::Array(list))?;
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Moments {
            k,
            a,
            b,
            c,
            d,
            q,
            u,
        } => {
            if parse_rational(&u)? != parse_rational("1")? {
                return Err(Error::Domain(
                    "the moment pipelines are defined at u = 1 only".into(),
                ));
            }
            let aw = moments::AwParams::new(
                parse_rational(&a)?,
                parse_rational(&b)?,
                parse_rational(&c)?,
                parse_rational(&d)?,
                parse_rational(&q)?,
            );
            if !aw.in_orthogonality_regime() {
                eprintln!(
                    "warning: parameters outside |a|,|b|,|c|,|d|,|q| < 1; \
                     identities are still checked exactly"
                );
            }
            let cmp = moments::compare_moments(k, &aw)?;
            let ok = cmp.equal && cmp.bridge_ok;
            match format {
                Format::Text => {
                    for (i, (s, m)) in cmp.staircase.iter().zip(&cmp.motzkin).enumerate() {
                        emit_text(sink, &format!("nu_{i}: staircase={s} motzkin={m}"))?;
                    }
                    emit_text(sink, &format!("equal: {}", cmp.equal))?;
                    emit_text(sink, &format!("bridge: {}", cmp.bridge_ok))?;
                }
                Format::Json => emit_json(
                    sink,
                    &json!({
                        "params": {
                            "a": aw.a.to_string(),
                            "b": aw.b.to_string(),
                            "c": aw.c.to_string(),
                            "d": aw.d.to_string(),
                            "q": aw.q.to_string(),
                        },
                        "K": k,
                        "staircase": cmp.staircase.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "motzkin": cmp.motzkin.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "equal": cmp.equal,
                        "bridge": cmp.bridge_ok,
                    }),
                )?,
            }
            Ok(if ok { 0 } else { 1 })
        }
        Command::Biject { from, to } => {
            let mut input = String::new();
            io::stdin()
                .read_to_string(&mut input)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            // The alternative tableau is the hub of all three families.
            let hub = match from {
                TableauKind::Staircase => bijections::staircase_to_alt(
                    &tableaux::StaircaseTableau::parse_text(&input)?,
                )?,
                TableauKind::Alt => bijections::AlternativeTableau::parse_text(&input)?,
                TableauKind::Perm => bijections::perm_to_alt(
                    &bijections::PermutationTableau::parse_text(&input)?,
                )?,
            };
            let (text, jsonv) = match to {
                TableauKind::Staircase => {
                    let st = bijections::alt_to_staircase(&hub)?;
                    (st.to_text(), st.to_json())
                }
                TableauKind::Alt => (hub.to_text(), hub.to_json()),
                TableauKind::Perm => {
                    let pt = bijections::alt_to_perm(&hub)?;
                    (pt.to_text(), pt.to_json())
                }
            };
            match format {
                Format::Text => emit_text(sink, &text)?,
                Format::Json => emit_json(sink, &jsonv)?,
            }
            Ok(0)
        }
        Command::Selftest => {
            let mut failures = 0;
            selftest::run_all(|id, name, outcome| {
                let line = match outcome {
                    Ok(()) => format!("criterion {id:2} [{name}] PASS"),
                    Err(detail) => {
                        failures += 1;
                        format!("criterion {id:2} [{name}] FAIL: {detail}")
                    }
                };
                let _ = writeln!(sink, "{line}");
            });
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

/// Load a run configuration JSON. Recognized keys: `command` plus the
/// fields of the matching subcommand (`n`, `K`, `type`, `points`,
/// `families`, `max_len`, `max_index`, `from`, `to`, `params`), and the
/// global `format`, `output`, `threads`.
#[allow(clippy::type_complexity)]
fn load_config(
    path: &PathBuf,
) -> Result<(Command, Option<Format>, Option<PathBuf>, Option<usize>), Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("invalid config JSON: {e}")))?;
    let str_field = |key: &str| -> Result<String, Error> {
        v.get(key)
            .and_then(Value::as_str)
            .map(str::to_owned)
            .ok_or_else(|| Error::Parse(format!("config is missing string field `{key}`")))
    };
    let usize_field = |key: &str| -> Result<usize, Error> {
        v.get(key)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| Error::Parse(format!("config is missing integer field `{key}`")))
    };
    let param = |key: &str, default: Option<&str>| -> Result<String, Error> {
        match v
            .get("params")
            .and_then(|p| p.get(key))
            .and_then(Value::as_str)
        {
            Some(s) => Ok(s.to_owned()),
            None => default
                .map(str::to_owned)
                .ok_or_else(|| Error::Parse(format!("config params are missing `{key}`"))),
        }
    };
    let command = match str_field("command")?.as_str() {
        "count" => Command::Count {
            n: usize_field("n")?,
        },
        "enumerate" => Command::Enumerate {
            n: usize_field("n")?,
        },
        "gf" => Command::Gf {
            n: usize_field("n")?,
            type_word: v.get("type").and_then(Value::as_str).map(str::to_owned),
        },
        "stationary" | "physical" => {
            let params = ChainParams {
                alpha: param("alpha", None)?,
                beta: param("beta", None)?,
                gamma: param("gamma", None)?,
                delta: param("delta", None)?,
                q: param("q", None)?,
                u: param("u", Some("1"))?,
            };
            let n = usize_field("n")?;
            if str_field("command")? == "stationary" {
                Command::Stationary { n, params }
            } else {
                let points = v
                    .get("points")
                    .and_then(Value::as_array)
                    .map(|a| {
                        a.iter()
                            .filter_map(Value::as_u64)
                            .map(|x| x as usize)
                            .collect()
                    })
                    .unwrap_or_default();
                Command::Physical { n, points, params }
            }
        }
        "verify" => Command::Verify {
            families: v
                .get("families")
                .and_then(Value::as_array)
                .map(|a| {
                    a.iter()
                        .filter_map(Value::as_str)
                        .map(str::to_owned)
                        .collect()
                })
                .unwrap_or_else(|| {
                    ["I", "II", "III", "decrease", "identities"]
                        .map(str::to_owned)
                        .to_vec()
                }),
            max_len: usize_field("max_len").unwrap_or(3),
            max_index: v.get("max_index").and_then(Value::as_i64).unwrap_or(6),
        },
        "moments" => Command::Moments {
            k: usize_field("K")?,
            a: param("a", None)?,
            b: param("b", None)?,
            c: param("c", None)?,
            d: param("d", None)?,
            q: param("q", None)?,
            u: param("u", Some("1"))?,
        },
        "biject" => {
            let kind = |key: &str| -> Result<TableauKind, Error> {
                match str_field(key)?.as_str() {
                    "staircase" => Ok(TableauKind::Staircase),
                    "alt" => Ok(TableauKind::Alt),
                    "perm" => Ok(TableauKind::Perm),
                    other => Err(Error::Parse(format!("unknown tableau kind `{other}`"))),
                }
            };
            Command::Biject {
                from: kind("from")?,
                to: kind("to")?,
            }
        }
        "selftest" => Command::Selftest,
        other => return Err(Error::Parse(format!("unknown command `{other}`"))),
    };
    let format = match v.get("format").and_then(Value::as_str) {
        Some("text") => Some(Format::Text),
        Some("json") => Some(Format::Json),
        Some(other) => return Err(Error::Parse(format!("unknown format `{other}`"))),
        None => None,
    };
    let output = v.get("output").and_then(Value::as_str).map(PathBuf::from);
    let threads = v.get("threads").and_then(Value::as_u64).map(|x| x as usize);
    Ok((command, format, output, threads))
}
