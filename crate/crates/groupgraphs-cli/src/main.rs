//! `groupgraphs`: build power / enhanced power / commuting graphs over the
//! supported group families, export them, and run the verification suite.
//!
//! Exit codes: 0 success (check consistent / suite green), 1 a check or the
//! suite failed, 2 usage or parse error (including the resource guard),
//! 3 graph build error.

mod export;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use groupgraphs::{
    build_family, build_graph, check_thm1, check_thm2, check_thm3, corollary_checks,
    family::{default_qinf_window, parse_qinf_params},
    qinf_strictness, restriction_consistency,
    suite::run_suite,
    theorem4_witness, theorem5_witness, ChainFamily, FamilySpec, GraphKind, ObstructionWitness,
    TheoremVerdict,
};

use export::GraphDocument;

#[derive(Parser)]
#[command(
    name = "groupgraphs",
    version,
    about = "Graphs defined on groups: build, export, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SuiteFormat {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build one hierarchy graph and export it
    Graph {
        /// `<kind>:<family>`, e.g. `pow:genq:3`, `com:dinf:0..7`,
        /// `epow:prod(cyclic:2,cyclic:3)`, `com:qinf:@params.txt`
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file; stdout when omitted. A relative path resolves
        /// against $GROUPGRAPHS_OUT_DIR when that is set.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one claim and exit 0 exactly when it holds
    Check {
        /// thm1|thm2|thm3|thm4|thm5|cor32|cor34|prop33|chain
        claim: String,
        /// Family spec (thm1/thm2/thm3), chain family lq|ld (chain), or
        /// @file parameter list (prop33)
        target: Option<String>,
        /// Truncation / window level for the level-based claims
        #[arg(long, default_value_t = 3)]
        level: u32,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
        /// Resource guard on levels; graphs double in size per level
        #[arg(long, default_value_t = 10)]
        level_cap: u32,
    },
    /// Run the full verification matrix
    Suite {
        #[arg(long, default_value_t = 5)]
        max_level: u32,
        #[arg(long, value_enum, default_value_t = SuiteFormat::Human)]
        format: SuiteFormat,
        /// Resource guard on max-level
        #[arg(long, default_value_t = 10)]
        level_cap: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Graph { spec, format, out } => cmd_graph(&spec, format, out),
        Command::Check {
            claim,
            target,
            level,
            json,
            level_cap,
        } => cmd_check(&claim, target.as_deref(), level, json, level_cap),
        Command::Suite {
            max_level,
            format,
            level_cap,
        } => cmd_suite(max_level, format, level_cap),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_graph(spec: &str, format: Format, out: Option<PathBuf>) -> ExitCode {
    let Some((kind_str, family_str)) = spec.split_once(':') else {
        return usage_error(&format!("graph spec `{spec}` is not `<kind>:<family>`"));
    };
    let kind = match GraphKind::from_str(kind_str) {
        Ok(kind) => kind,
        Err(e) => return usage_error(&e.to_string()),
    };
    let family = match FamilySpec::parse(family_str) {
        Ok(family) => family,
        Err(e) => return usage_error(&e.to_string()),
    };
    let graph = match build_family(&family).and_then(|view| build_graph(&view, kind)) {
        Ok(graph) => graph,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let family_name = family.canonical();
    let payload = match format {
        Format::Json => GraphDocument::from_graph(&graph, &family_name).to_json(),
        Format::Dot => export::to_dot(&graph, &family_name),
        Format::Csv => export::to_csv(&graph),
    };
    match out {
        None => {
            print!("{payload}");
            ExitCode::SUCCESS
        }
        Some(path) => {
            let path = match std::env::var_os("GROUPGRAPHS_OUT_DIR") {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path,
            };
            match std::fs::write(&path, payload) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    ExitCode::from(3)
                }
            }
        }
    }
}

fn print_verdict(v: &TheoremVerdict, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
        return;
    }
    println!("claim: {}", v.claim);
    println!("family: {}", v.family);
    println!("graphs equal: {}", v.graphs_equal);
    match &v.obstruction {
        Some(ObstructionWitness::Cpq { x, y, p, q }) => {
            println!("obstruction: commuting pair of orders {p} and {q}: ({x}, {y})");
        }
        Some(ObstructionWitness::Cpp { x, y, p }) => {
            println!("obstruction: C{p} x C{p} spanned by ({x}, {y})");
        }
        Some(ObstructionWitness::ZFlag) => println!("obstruction: infinite-order element"),
        None => println!("obstruction: none"),
    }
    println!("consistent: {}", v.consistent);
}

fn exit_pass(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_check(
    claim: &str,
    target: Option<&str>,
    level: u32,
    json: bool,
    level_cap: u32,
) -> ExitCode {
    let guard = |level: u32| -> Option<ExitCode> {
        if level < 2 || level > level_cap {
            Some(usage_error(&format!(
                "resource guard: level {level} outside 2..={level_cap} (raise with --level-cap)"
            )))
        } else {
            None
        }
    };
    match claim {
        "thm1" | "thm2" | "thm3" => {
            let Some(family_str) = target else {
                return usage_error(&format!("`check {claim}` needs a family spec"));
            };
            let family = match FamilySpec::parse(family_str) {
                Ok(f) => f,
                Err(e) => return usage_error(&e.to_string()),
            };
            let view = match build_family(&family) {
                Ok(v) => v,
                Err(e) => return usage_error(&e.to_string()),
            };
            let result = match claim {
                "thm1" => check_thm1(&view),
                "thm2" => check_thm2(&view),
                _ => check_thm3(&view),
            };
            match result {
                Ok(v) => {
                    print_verdict(&v, json);
                    exit_pass(v.consistent)
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        "thm4" | "thm5" => {
            if let Some(code) = guard(level) {
                return code;
            }
            let result = if claim == "thm4" {
                theorem4_witness(level)
            } else {
                theorem5_witness(level)
            };
            match result {
                Ok(report) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&report).expect("serializable")
                        );
                    } else {
                        println!("claim: {}", report.claim);
                        println!("level: {}", report.level);
                        println!("domain: {}", report.domain);
                        println!("codomain: {}", report.codomain);
                        match &report.counterexample {
                            None => println!("pass: true"),
                            Some(ce) => {
                                println!("pass: false");
                                println!(
                                    "counterexample: ({}, {}) -> ({}, {}): {} vs {}",
                                    ce.x,
                                    ce.y,
                                    ce.fx,
                                    ce.fy,
                                    ce.domain_adjacent,
                                    ce.codomain_adjacent
                                );
                            }
                        }
                    }
                    exit_pass(report.pass)
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        "cor32" | "cor34" => {
            if let Some(code) = guard(level) {
                return code;
            }
            match corollary_checks(level) {
                Ok(report) => {
                    let pass = if claim == "cor32" {
                        report.lq_all_equal
                            && report.ld_pow_eq_epow
                            && report.ld_epow_strictly_below_com
                            && report.ld_missing_edge.is_some()
                    } else {
                        report.dinf_pow_strictly_below_epow
                            && report.dinf_epow_eq_com
                            && report.dinf_witness.is_some()
                    };
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&report).expect("serializable")
                        );
                    } else if claim == "cor32" {
                        println!("claim: cor32");
                        println!("level: {}", report.level);
                        println!("lq: Pow = EPow = Com: {}", report.lq_all_equal);
                        println!("ld: Pow = EPow: {}", report.ld_pow_eq_epow);
                        println!(
                            "ld: EPow strictly below Com: {}",
                            report.ld_epow_strictly_below_com
                        );
                        if let Some((x, y)) = &report.ld_missing_edge {
                            println!("ld missing edge: ({x}, {y})");
                        }
                        println!("pass: {pass}");
                    } else {
                        println!("claim: cor34");
                        println!("level: {}", report.level);
                        println!(
                            "dinf: Pow strictly below EPow: {}",
                            report.dinf_pow_strictly_below_epow
                        );
                        println!("dinf: EPow = Com: {}", report.dinf_epow_eq_com);
                        if let Some((x, y)) = &report.dinf_witness {
                            println!("dinf witness: ({x}, {y})");
                        }
                        println!("pass: {pass}");
                    }
                    exit_pass(pass)
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        "prop33" => {
            let params = match target {
                None => default_qinf_window(),
                Some(t) => {
                    let Some(path) = t.strip_prefix('@') else {
                        return usage_error("`check prop33` takes an optional `@file` target");
                    };
                    match std::fs::read_to_string(path) {
                        Ok(text) => match parse_qinf_params(&text) {
                            Ok(params) => params,
                            Err(e) => return usage_error(&e.to_string()),
                        },
                        Err(e) => {
                            return usage_error(&format!("cannot read `{path}`: {e}"));
                        }
                    }
                }
            };
            match qinf_strictness(&params) {
                Ok(report) => {
                    if json {
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&report).expect("serializable")
                        );
                    } else {
                        println!("claim: prop33");
                        println!("window: {}", report.window);
                        println!("hierarchy Pow <= EPow <= Com: {}", report.hierarchy_holds);
                        println!("EPow strictly above Pow: {:?}", report.pow_epow);
                        println!("Com strictly above EPow: {:?}", report.epow_com);
                        println!("pass: {}", report.pass);
                    }
                    exit_pass(report.pass)
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        "chain" => {
            if let Some(code) = guard(level) {
                return code;
            }
            let Some(chain_str) = target else {
                return usage_error("`check chain` needs a chain family: lq or ld");
            };
            let chain = match ChainFamily::parse(chain_str) {
                Ok(c) => c,
                Err(e) => return usage_error(&e.to_string()),
            };
            let mut all = true;
            let mut lines = Vec::new();
            for kind in GraphKind::ALL {
                match restriction_consistency(chain, kind, level) {
                    Ok(ok) => {
                        all &= ok;
                        lines.push((kind.as_str(), ok));
                    }
                    Err(e) => return usage_error(&e.to_string()),
                }
            }
            if json {
                let doc: Vec<serde_json::Value> = lines
                    .iter()
                    .map(|(kind, ok)| {
                        serde_json::json!({"chain": chain.as_str(), "kind": kind, "level": level, "consistent": ok})
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else {
                println!("claim: chain ({} at level {level})", chain.as_str());
                for (kind, ok) in &lines {
                    println!("{kind}: {}", if *ok { "consistent" } else { "MISMATCH" });
                }
                println!("pass: {all}");
            }
            exit_pass(all)
        }
        other => usage_error(&format!("unknown claim `{other}`")),
    }
}

fn cmd_suite(max_level: u32, format: SuiteFormat, level_cap: u32) -> ExitCode {
    if max_level < 2 || max_level > level_cap {
        return usage_error(&format!(
            "resource guard: max-level {max_level} outside 2..={level_cap} (raise with --level-cap)"
        ));
    }
    let fault = std::env::var("GROUPGRAPHS_SUITE_FAULT").ok();
    let report = match run_suite(max_level, fault.as_deref()) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match format {
        SuiteFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
        }
        SuiteFormat::Human => {
            println!("verification suite, max level {max_level}");
            for item in &report.items {
                println!(
                    "{} {:<14} {} [{}] {}",
                    if item.pass { "PASS" } else { "FAIL" },
                    item.id,
                    item.name,
                    item.params,
                    item.detail
                );
            }
            println!(
                "{}",
                if report.all_pass {
                    "all criteria passed"
                } else {
                    "FAILURES PRESENT"
                }
            );
        }
    }
    exit_pass(report.all_pass)
}
