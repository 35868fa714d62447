//! Command-line front end: classify graph6 input, decide polarity with
//! witnesses, compute coloring profiles, run obstruction searches and emit
//! catalog graphs.
//!
//! Exit codes: 0 when every requested decision completed (and, for yes/no
//! commands, the property holds everywhere), 1 when some input lacks the
//! queried property, 2 on malformed input or parameters.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::io::{BufRead, Write};
use std::process::ExitCode;

use splitpolar::{
    c4_decide, c4_witness, canonical_code, find_minimal_obstructions, graph6, ps_catalog,
    ps_coloring_profile, ps_profile, ps_witness, recognize_2k2_split_by_obstructions,
    recognize_h_split, recognize_pseudo_split, recognize_split, twok2_catalog, twok2_decide,
    twok2_witness, Count, FamilyClass, FamilySpec, Graph, HKind, PolarPartition, PolarityParams,
    PseudoSplitClass, CANONICAL_MAX, ORACLE_POLAR_MAX,
};

#[derive(Parser)]
#[command(name = "splitpolar", version, about = "split-like graph classes: recognition, polarity, colorings, obstruction search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputOpts {
    /// Read graph6 lines from this file instead of standard input.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<std::path::PathBuf>,
    /// Emit one JSON record per line instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Report the class ladder (split / pseudo-split / 2K2-split / C4-split).
    Recognize(InputOpts),
    /// Decide (s,k)-polarity and print a witness partition.
    Polarity {
        #[command(flatten)]
        io: InputOpts,
        /// Part cap for the complete multipartite side (number or "inf").
        #[arg(long)]
        s: Count,
        /// Clique cap for the cluster side (number or "inf").
        #[arg(long)]
        k: Count,
    },
    /// Coloring profile (chi, theta, cochromatic, bichromatic) of
    /// pseudo-split inputs.
    Coloring(InputOpts),
    /// Enumerate minimal (s,k)-polar obstructions in an H-split family.
    Obstructions {
        /// Family: pseudo-split, 2k2-split or c4-split.
        #[arg(long)]
        class: FamilyClass,
        #[arg(long)]
        s: Count,
        #[arg(long)]
        k: Count,
        #[arg(long = "max-c", default_value_t = 3)]
        max_c: usize,
        #[arg(long = "max-i", default_value_t = 3)]
        max_i: usize,
        #[arg(long = "order-cap", default_value_t = ORACLE_POLAR_MAX)]
        order_cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit a named graph as graph6.
    Catalog {
        /// Catalog family: "named" (K5, C5, 3K2, ...), "ps" or "2k2".
        #[arg(long, default_value = "named")]
        class: String,
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// One JSON record per input line with all recognizer verdicts.
    BatchClassify {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<std::path::PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn read_lines(input: &Option<std::path::PathBuf>) -> Result<Vec<String>, String> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {}", path.display(), e))?,
        None => {
            let mut buf = String::new();
            for line in std::io::stdin().lock().lines() {
                buf.push_str(&line.map_err(|e| e.to_string())?);
                buf.push('\n');
            }
            buf
        }
    };
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

fn decode_all(lines: &[String]) -> Result<Vec<Graph>, String> {
    lines
        .iter()
        .enumerate()
        .map(|(ix, line)| {
            graph6::decode(line).map_err(|e| format!("line {}: malformed graph6: {}", ix + 1, e))
        })
        .collect()
}

fn vsets(sets: &[Vec<usize>]) -> String {
    let inner: Vec<String> = sets
        .iter()
        .map(|s| {
            let items: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("[{}]", items.join(","))
        })
        .collect();
    format!("[{}]", inner.join(","))
}

fn witness_json(w: &PolarPartition) -> Value {
    json!({ "a_parts": w.a_parts, "b_cliques": w.b_cliques })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Recognize(io) => {
            let lines = read_lines(&io.input)?;
            let graphs = decode_all(&lines)?;
            for (line, g) in lines.iter().zip(&graphs) {
                recognize_one(&mut out, line, g, io.json).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Polarity { io, s, k } => {
            let params = PolarityParams::new(s, k);
            let lines = read_lines(&io.input)?;
            let graphs = decode_all(&lines)?;
            let mut all_polar = true;
            for (line, g) in lines.iter().zip(&graphs) {
                let (decider, witness) = decide_polarity(g, params)?;
                all_polar &= witness.is_some();
                if io.json {
                    let rec = json!({
                        "graph6": line,
                        "command": "polarity",
                        "s": count_json(s),
                        "k": count_json(k),
                        "verdict": if witness.is_some() { "polar" } else { "non-polar" },
                        "decider": decider,
                        "witness": witness.as_ref().map(witness_json),
                    });
                    writeln!(out, "{}", rec).map_err(|e| e.to_string())?;
                } else {
                    match &witness {
                        Some(w) => writeln!(
                            out,
                            "{}: polar{} A={} B={} [{}]",
                            line,
                            params,
                            vsets(&w.a_parts),
                            vsets(&w.b_cliques),
                            decider
                        ),
                        None => writeln!(out, "{}: non-polar{} [{}]", line, params, decider),
                    }
                    .map_err(|e| e.to_string())?;
                }
            }
            Ok(if all_polar {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Coloring(io) => {
            let lines = read_lines(&io.input)?;
            let graphs = decode_all(&lines)?;
            for (line, g) in lines.iter().zip(&graphs) {
                let p = ps_coloring_profile(g).map_err(|e| format!("{}: {}", line, e))?;
                if io.json {
                    let rec = json!({
                        "graph6": line,
                        "command": "coloring",
                        "profile": {
                            "chi": p.chi,
                            "theta": p.theta,
                            "cochromatic": p.cochromatic,
                            "bichromatic": p.bichromatic,
                            "oracle_derived": p.oracle_derived,
                        },
                    });
                    writeln!(out, "{}", rec).map_err(|e| e.to_string())?;
                } else {
                    writeln!(
                        out,
                        "{}: chi={} theta={} cochromatic={} bichromatic={} source={}",
                        line,
                        p.chi,
                        p.theta,
                        p.cochromatic,
                        p.bichromatic,
                        if p.oracle_derived { "oracle" } else { "formula" }
                    )
                    .map_err(|e| e.to_string())?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Obstructions {
            class,
            s,
            k,
            max_c,
            max_i,
            order_cap,
            json: as_json,
        } => {
            let spec = FamilySpec::new(class, (0, max_c), (0, max_i)).map_err(|e| e.to_string())?;
            let params = PolarityParams::new(s, k);
            let report =
                find_minimal_obstructions(&spec, params, order_cap).map_err(|e| e.to_string())?;
            for e in &report.entries {
                if as_json {
                    let rec = json!({
                        "command": "obstructions",
                        "class": class.name(),
                        "key": e.key,
                        "graph6": e.graph6,
                        "order": e.order,
                        "c": e.c,
                        "i": e.i,
                        "s": count_json(s),
                        "k": count_json(k),
                        "minimal": true,
                    });
                    writeln!(out, "{}", rec).map_err(|err| err.to_string())?;
                } else {
                    writeln!(
                        out,
                        "{} {} order={} c={} i={} s={} k={} minimal=true",
                        e.key, e.graph6, e.order, e.c, e.i, s, k
                    )
                    .map_err(|err| err.to_string())?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { class, name, s, k } => {
            let g = match class.as_str() {
                "named" => splitpolar::build_named(&name).map_err(|e| e.to_string())?,
                "ps" | "pseudo-split" => {
                    let n = name.parse().map_err(|e: splitpolar::Error| e.to_string())?;
                    ps_catalog(n, s, k).map_err(|e| e.to_string())?
                }
                "2k2" | "2k2-split" => {
                    let n = name.parse().map_err(|e: splitpolar::Error| e.to_string())?;
                    twok2_catalog(n, s, k).map_err(|e| e.to_string())?
                }
                other => return Err(format!("unknown catalog class '{}'", other)),
            };
            writeln!(out, "{}", graph6::encode(&g)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::BatchClassify { input } => {
            let lines = read_lines(&input)?;
            for line in &lines {
                let rec = match graph6::decode(line) {
                    Ok(g) => classify_record(line, &g),
                    Err(e) => json!({
                        "graph6": line,
                        "command": "batch-classify",
                        "error": format!("malformed graph6: {}", e),
                    }),
                };
                writeln!(out, "{}", rec).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn count_json(c: Count) -> Value {
    match c {
        Count::Finite(v) => json!(v),
        Count::Unbounded => json!("inf"),
    }
}

/// Pick the fastest applicable decider; fall back to the brute-force oracle
/// for graphs in none of the supported classes.
fn decide_polarity(
    g: &Graph,
    params: PolarityParams,
) -> Result<(&'static str, Option<PolarPartition>), String> {
    let err = |e: splitpolar::Error| e.to_string();
    if recognize_split(g).is_some() {
        return Ok(("split", ps_witness(g, params).map_err(err)?));
    }
    if recognize_pseudo_split(g).is_pseudo_split() {
        return Ok(("pseudo-split", ps_witness(g, params).map_err(err)?));
    }
    if recognize_h_split(g, HKind::TwoK2).is_some() {
        debug_assert_eq!(
            twok2_decide(g, params).map_err(err)?,
            twok2_witness(g, params).map_err(err)?.is_some()
        );
        return Ok(("2k2-split", twok2_witness(g, params).map_err(err)?));
    }
    if recognize_h_split(g, HKind::C4).is_some() {
        debug_assert_eq!(
            c4_decide(g, params).map_err(err)?,
            c4_witness(g, params).map_err(err)?.is_some()
        );
        return Ok(("c4-split", c4_witness(g, params).map_err(err)?));
    }
    if g.n() <= ORACLE_POLAR_MAX {
        return Ok((
            "oracle",
            splitpolar::oracle_polar(g, params).map_err(err)?,
        ));
    }
    Err(format!(
        "graph of order {} is outside every fast class and beyond the oracle limit",
        g.n()
    ))
}

fn recognize_one(
    out: &mut impl Write,
    line: &str,
    g: &Graph,
    as_json: bool,
) -> std::io::Result<()> {
    let split = recognize_split(g);
    let ps = recognize_pseudo_split(g);
    let two_k2 = recognize_h_split(g, HKind::TwoK2);
    let c4 = recognize_h_split(g, HKind::C4);
    if as_json {
        let ps_json = match &ps {
            PseudoSplitClass::Split(_) => json!({ "kind": "split" }),
            PseudoSplitClass::Imperfect(ips) => json!({
                "kind": "imperfect",
                "clique": ips.partition.clique,
                "core": ips.partition.core,
                "independent": ips.partition.independent,
                "omega": ips.clique_number,
                "chi": ips.chromatic_number,
                "alpha": ips.independence_number,
                "theta": ips.clique_cover_number,
            }),
            PseudoSplitClass::NotPseudoSplit => json!({ "kind": "none" }),
        };
        let hpart = |p: &splitpolar::HSplitPartition| {
            json!({
                "strict": p.strict,
                "clique": p.clique,
                "core": p.core,
                "independent": p.independent,
            })
        };
        let rec = json!({
            "graph6": line,
            "command": "recognize",
            "verdict": {
                "split": split.as_ref().map(|sp| json!({
                    "clique": sp.clique,
                    "independent": sp.independent,
                    "p": sp.p,
                })),
                "pseudo_split": ps_json,
                "two_k2_split": two_k2.as_ref().map(hpart),
                "c4_split": c4.as_ref().map(hpart),
            },
        });
        writeln!(out, "{}", rec)
    } else {
        let fmt_set = |s: &[usize]| {
            let items: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("[{}]", items.join(","))
        };
        writeln!(out, "{}: n={}", line, g.n())?;
        match &split {
            Some(sp) => writeln!(
                out,
                "  split: yes clique={} independent={}",
                fmt_set(&sp.clique),
                fmt_set(&sp.independent)
            )?,
            None => writeln!(out, "  split: no")?,
        }
        match &ps {
            PseudoSplitClass::Split(_) => writeln!(out, "  pseudo-split: split")?,
            PseudoSplitClass::Imperfect(ips) => writeln!(
                out,
                "  pseudo-split: imperfect C={} S={} I={} omega={} chi={} alpha={} theta={}",
                fmt_set(&ips.partition.clique),
                fmt_set(&ips.partition.core),
                fmt_set(&ips.partition.independent),
                ips.clique_number,
                ips.chromatic_number,
                ips.independence_number,
                ips.clique_cover_number
            )?,
            PseudoSplitClass::NotPseudoSplit => writeln!(out, "  pseudo-split: no")?,
        }
        for (label, part) in [("2k2-split", &two_k2), ("c4-split", &c4)] {
            match part {
                Some(p) if p.strict => writeln!(
                    out,
                    "  {}: strict C={} S={} I={}",
                    label,
                    fmt_set(&p.clique),
                    fmt_set(&p.core),
                    fmt_set(&p.independent)
                )?,
                Some(_) => writeln!(out, "  {}: split", label)?,
                None => writeln!(out, "  {}: no", label)?,
            }
        }
        Ok(())
    }
}

fn classify_record(line: &str, g: &Graph) -> Value {
    let split = recognize_split(g);
    let ps = recognize_pseudo_split(g);
    let by_obs = if g.n() <= 20 {
        Some(recognize_2k2_split_by_obstructions(g).is_two_k2_split)
    } else {
        None
    };
    let two_k2 = recognize_h_split(g, HKind::TwoK2);
    let c4 = recognize_h_split(g, HKind::C4);
    if let Some(flag) = by_obs {
        debug_assert_eq!(flag, two_k2.is_some());
    }
    let profile = match &ps {
        PseudoSplitClass::Imperfect(_) => ps_profile(g).ok().map(|p| {
            json!({ "c": p.c, "i": p.i, "m_c": p.m_c, "m_i": p.m_i })
        }),
        _ => None,
    };
    let code = (g.n() <= CANONICAL_MAX).then(|| canonical_code(g).unwrap().to_hex());
    json!({
        "graph6": line,
        "command": "batch-classify",
        "verdict": {
            "split": split.is_some(),
            "pseudo_split": match &ps {
                PseudoSplitClass::Split(_) => "split",
                PseudoSplitClass::Imperfect(_) => "imperfect",
                PseudoSplitClass::NotPseudoSplit => "none",
            },
            "two_k2_split": two_k2.is_some(),
            "c4_split": c4.is_some(),
        },
        "profile": profile,
        "canonical": code,
    })
}
