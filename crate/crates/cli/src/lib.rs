//! Command-line surface over the hypergraph-horn library.
//!
//! One subcommand per operation, shared text formats for hypergraphs and
//! CNFs, and a witness JSON format for self-duality certificates. Exit
//! codes: 0 affirmative/success, 1 negative verdict, 2 usage or parse
//! error (with a one-line diagnostic on stderr).

use std::collections::BTreeMap;
use std::io::Write;

use hypergraph_horn::ground::{GroundSet, VarSet};
use hypergraph_horn::horn::{reduce_representation, HornCnf};
use hypergraph_horn::hypergraph::{CircuitAxiom, Hypergraph};
use hypergraph_horn::iduality::{
    majorizes_implicate_dual, verify_self_dual_witness, MajorantCheck, SelfDualWitness,
};
use hypergraph_horn::implicate::{core, implicate_sets, standard_generator};
use hypergraph_horn::keys::{realize_keys, KeyRealizationResult};
use hypergraph_horn::oracle::TruthTable;
use hypergraph_horn::recognition::{recognize, RecognitionResult};
use hypergraph_horn::text;

type CliResult = Result<i32, String>;

pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(args, out, err) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

const USAGE: &str = "usage: hhorn <subcommand> [--flag value ...]\n\
subcommands: closure core implicate recognize realize-keys enum-implicate-sets \
idual-geq self-idual-verify reduce circuit-axiom transversals oracle <check>";

fn dispatch(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (positionals, options) = split_args(args)?;
    let Some(subcommand) = positionals.first() else {
        return Err(USAGE.to_string());
    };
    let format = output_format(&options)?;
    match subcommand.as_str() {
        "closure" => cmd_closure(&options, format, out),
        "core" => cmd_core(&options, format, out),
        "implicate" => cmd_implicate(&options, format, out),
        "recognize" => cmd_recognize(&options, format, out),
        "realize-keys" => cmd_realize_keys(&options, format, out, err),
        "enum-implicate-sets" => cmd_enumerate(&options, format, out),
        "idual-geq" => cmd_idual_geq(&options, format, out),
        "self-idual-verify" => cmd_self_idual_verify(&options, format, out),
        "reduce" => cmd_reduce(&options, format, out),
        "circuit-axiom" => cmd_circuit_axiom(&options, format, out),
        "transversals" => cmd_transversals(&options, format, out),
        "oracle" => {
            let Some(check) = positionals.get(1) else {
                return Err("oracle requires a check name (true-sets, implicate-sets, \
                            generator, idual, majorant, keys, max-true-sets, \
                            hypergraph-horn, equivalences)"
                    .to_string());
            };
            cmd_oracle(check, &options, format, out)
        }
        other => Err(format!("unknown subcommand `{other}`\n{USAGE}")),
    }
}

fn split_args(args: &[String]) -> Result<(Vec<String>, BTreeMap<String, String>), String> {
    let mut positionals = Vec::new();
    let mut options = BTreeMap::new();
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        if let Some(flag) = arg.strip_prefix("--") {
            let value = iter
                .next()
                .ok_or_else(|| format!("flag --{flag} is missing a value"))?;
            if options.insert(flag.to_string(), value.clone()).is_some() {
                return Err(format!("flag --{flag} given twice"));
            }
        } else {
            positionals.push(arg.clone());
        }
    }
    Ok((positionals, options))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn output_format(options: &BTreeMap<String, String>) -> Result<Format, String> {
    match options.get("format").map(String::as_str) {
        None | Some("text") => Ok(Format::Text),
        Some("json") => Ok(Format::Json),
        Some(other) => Err(format!("unknown format `{other}` (expected text or json)")),
    }
}

fn required<'a>(options: &'a BTreeMap<String, String>, flag: &str) -> Result<&'a str, String> {
    options
        .get(flag)
        .map(String::as_str)
        .ok_or_else(|| format!("missing required flag --{flag}"))
}

fn load_cnf(options: &BTreeMap<String, String>, flag: &str) -> Result<HornCnf, String> {
    let path = required(options, flag)?;
    let content =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    text::parse_cnf(&content).map_err(|e| format!("{path}: {e}"))
}

fn load_hypergraph(options: &BTreeMap<String, String>, flag: &str) -> Result<Hypergraph, String> {
    let path = required(options, flag)?;
    let content =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    text::parse_hypergraph(&content).map_err(|e| format!("{path}: {e}"))
}

/// Comma-separated variable names; empty string or `{}` is the empty set.
fn parse_set(ground: &GroundSet, spec: &str) -> Result<VarSet, String> {
    let spec = spec.trim();
    if spec.is_empty() || spec == "{}" {
        return Ok(VarSet::empty());
    }
    let mut set = VarSet::empty();
    for name in spec.split(',') {
        let name = name.trim();
        match ground.index_of(name) {
            Some(v) => set = set.with(v),
            None => return Err(format!("unknown variable `{name}`")),
        }
    }
    Ok(set)
}

fn set_line(ground: &GroundSet, set: VarSet) -> String {
    if set.is_empty() {
        "{}".to_string()
    } else {
        ground.format_set(set)
    }
}

fn set_json(ground: &GroundSet, set: VarSet) -> serde_json::Value {
    serde_json::Value::Array(
        set.iter()
            .map(|v| serde_json::Value::String(ground.name(v).to_string()))
            .collect(),
    )
}

fn family_json(h: &Hypergraph) -> serde_json::Value {
    serde_json::Value::Array(
        h.edges()
            .iter()
            .map(|e| set_json(h.ground(), *e))
            .collect(),
    )
}

fn emit_set(ground: &GroundSet, set: VarSet, format: Format, out: &mut dyn Write) -> CliResult {
    match format {
        Format::Text => writeln!(out, "{}", set_line(ground, set)),
        Format::Json => writeln!(out, "{}", set_json(ground, set)),
    }
    .map_err(|e| e.to_string())?;
    Ok(0)
}

fn emit_family(h: &Hypergraph, format: Format, out: &mut dyn Write) -> CliResult {
    match format {
        Format::Text => write!(out, "{}", text::print_hypergraph(h)),
        Format::Json => writeln!(out, "{}", family_json(h)),
    }
    .map_err(|e| e.to_string())?;
    Ok(0)
}

fn emit_witness_file(
    options: &BTreeMap<String, String>,
    witness: &Hypergraph,
) -> Result<(), String> {
    if let Some(path) = options.get("emit-witness") {
        std::fs::write(path, text::print_hypergraph(witness))
            .map_err(|e| format!("cannot write {path}: {e}"))?;
    }
    Ok(())
}

fn cmd_closure(options: &BTreeMap<String, String>, format: Format, out: &mut dyn Write) -> CliResult {
    let cnf = load_cnf(options, "input")?;
    let seed = parse_set(cnf.ground(), required(options, "set")?)?;
    emit_set(cnf.ground(), cnf.closure(seed), format, out)
}

fn cmd_core(options: &BTreeMap<String, String>, format: Format, out: &mut dyn Write) -> CliResult {
    let cnf = load_cnf(options, "input")?;
    let seed = parse_set(cnf.ground(), required(options, "set")?)?;
    emit_set(cnf.ground(), core(&cnf, seed), format, out)
}

fn cmd_implicate(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let cnf = load_cnf(options, "input")?;
    let body = parse_set(cnf.ground(), required(options, "body")?)?;
    let head_name = required(options, "head")?;
    let head = cnf
        .ground()
        .index_of(head_name)
        .ok_or_else(|| format!("unknown variable `{head_name}`"))?;
    let verdict = cnf
        .is_implicate(body, head)
        .map_err(|e| e.to_string())?;
    emit_verdict(verdict, format, out)
}

fn emit_verdict(verdict: bool, format: Format, out: &mut dyn Write) -> CliResult {
    match format {
        Format::Text => writeln!(out, "{}", if verdict { "yes" } else { "no" }),
        Format::Json => writeln!(out, "{}", serde_json::json!({ "verdict": verdict })),
    }
    .map_err(|e| e.to_string())?;
    Ok(if verdict { 0 } else { 1 })
}

fn cmd_recognize(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let cnf = load_cnf(options, "input")?;
    match recognize(&cnf) {
        RecognitionResult::HypergraphHorn { witness } => {
            emit_witness_file(options, &witness)?;
            emit_family(&witness, format, out)?;
            Ok(0)
        }
        RecognitionResult::NotHypergraphHorn { certificate } => {
            emit_set(cnf.ground(), certificate, format, out)?;
            Ok(1)
        }
    }
}

fn cmd_realize_keys(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let keys = load_hypergraph(options, "input")?;
    if !keys.is_sperner() {
        let _ = writeln!(err, "warning: input is not Sperner; using its minimal edges");
    }
    match realize_keys(&keys) {
        KeyRealizationResult::Realizable { witness } => {
            emit_witness_file(options, &witness)?;
            emit_family(&witness, format, out)?;
            Ok(0)
        }
        KeyRealizationResult::NotRealizable { stalled } => {
            emit_set(keys.ground(), stalled, format, out)?;
            Ok(1)
        }
    }
}

fn cmd_enumerate(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let cnf = load_cnf(options, "input")?;
    let limit = match options.get("limit") {
        Some(raw) => Some(
            raw.parse::<u64>()
                .map_err(|_| format!("invalid --limit `{raw}`"))?,
        ),
        None => None,
    };
    let ground = cnf.ground().clone();
    let cap = limit.unwrap_or(u64::MAX) as usize;
    for set in implicate_sets(&cnf).take(cap) {
        match format {
            Format::Text => writeln!(out, "{}", set_line(&ground, set)),
            Format::Json => writeln!(out, "{}", set_json(&ground, set)),
        }
        .map_err(|e| e.to_string())?;
        // Flushed per emission so the delay is externally observable.
        out.flush().map_err(|e| e.to_string())?;
    }
    Ok(0)
}

fn cmd_idual_geq(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let lhs = load_cnf(options, "lhs")?;
    let rhs = load_cnf(options, "rhs")?;
    match majorizes_implicate_dual(&lhs, &rhs).map_err(|e| e.to_string())? {
        MajorantCheck::Holds => emit_verdict(true, format, out),
        MajorantCheck::Violated { false_set } => {
            emit_set(lhs.ground(), false_set, format, out)?;
            Ok(1)
        }
    }
}

fn parse_witness(ground: &GroundSet, raw: &str) -> Result<SelfDualWitness, String> {
    let value: serde_json::Value =
        serde_json::from_str(raw).map_err(|e| format!("invalid witness JSON: {e}"))?;
    let object = value.as_object().ok_or("witness must be a JSON object")?;
    let kind = object
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or("witness is missing a string `kind`")?;
    let set_field = |name: &str| -> Result<VarSet, String> {
        let array = object
            .get(name)
            .and_then(|v| v.as_array())
            .ok_or_else(|| format!("witness is missing array `{name}`"))?;
        let mut set = VarSet::empty();
        for entry in array {
            let name = match entry {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                _ => return Err("witness sets must contain variable names".to_string()),
            };
            match ground.index_of(&name) {
                Some(v) => set = set.with(v),
                None => return Err(format!("unknown variable `{name}` in witness")),
            }
        }
        Ok(set)
    };
    match kind {
        "pair" => Ok(SelfDualWitness::Pair {
            first: set_field("i")?,
            second: set_field("iprime")?,
        }),
        "gap" => Ok(SelfDualWitness::Gap { set: set_field("s")? }),
        other => Err(format!("unknown witness kind `{other}`")),
    }
}

fn cmd_self_idual_verify(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let cnf = load_cnf(options, "input")?;
    let path = required(options, "witness")?;
    let raw =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let witness = parse_witness(cnf.ground(), &raw)?;
    let valid = verify_self_dual_witness(&cnf, &witness).map_err(|e| e.to_string())?;
    emit_verdict(valid, format, out)
}

fn cmd_reduce(options: &BTreeMap<String, String>, format: Format, out: &mut dyn Write) -> CliResult {
    let h = load_hypergraph(options, "input")?;
    emit_family(&reduce_representation(&h), format, out)
}

fn cmd_circuit_axiom(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let h = load_hypergraph(options, "input")?;
    match h.check_circuit_axiom().map_err(|e| e.to_string())? {
        CircuitAxiom::Holds => emit_verdict(true, format, out),
        CircuitAxiom::Violated {
            first,
            second,
            pivot,
        } => {
            let ground = h.ground();
            match format {
                Format::Text => writeln!(
                    out,
                    "violated: {} | {} | {}",
                    set_line(ground, first),
                    set_line(ground, second),
                    ground.name(pivot)
                ),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({
                        "verdict": false,
                        "first": set_json(ground, first),
                        "second": set_json(ground, second),
                        "pivot": ground.name(pivot),
                    })
                ),
            }
            .map_err(|e| e.to_string())?;
            Ok(1)
        }
    }
}

fn cmd_transversals(
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let h = load_hypergraph(options, "input")?;
    emit_family(&h.minimal_transversals(), format, out)
}

fn cmd_oracle(
    check: &str,
    options: &BTreeMap<String, String>,
    format: Format,
    out: &mut dyn Write,
) -> CliResult {
    let cnf = load_cnf(options, "input")?;
    match check {
        "true-sets" => {
            let table = TruthTable::from_cnf(&cnf).map_err(|e| e.to_string())?;
            emit_family(&table.true_set_family().map_err(|e| e.to_string())?, format, out)
        }
        "implicate-sets" => {
            let table = TruthTable::from_cnf(&cnf).map_err(|e| e.to_string())?;
            emit_family(
                &table.implicate_family_hypergraph().map_err(|e| e.to_string())?,
                format,
                out,
            )
        }
        "generator" => emit_family(&standard_generator(&cnf), format, out),
        "idual" => {
            let table = TruthTable::from_cnf(&cnf).map_err(|e| e.to_string())?;
            let dual = table.implicate_dual().map_err(|e| e.to_string())?;
            emit_family(&dual.true_set_family().map_err(|e| e.to_string())?, format, out)
        }
        "majorant" => {
            let table = TruthTable::from_cnf(&cnf).map_err(|e| e.to_string())?;
            let majorant = table.circular_majorant().map_err(|e| e.to_string())?;
            emit_family(
                &majorant.true_set_family().map_err(|e| e.to_string())?,
                format,
                out,
            )
        }
        "keys" => {
            let keys =
                hypergraph_horn::keys::minimal_keys_oracle(&cnf).map_err(|e| e.to_string())?;
            emit_family(&keys, format, out)
        }
        "max-true-sets" => {
            let family = hypergraph_horn::keys::max_nontrivial_true_sets_oracle(&cnf)
                .map_err(|e| e.to_string())?;
            emit_family(&family, format, out)
        }
        "hypergraph-horn" => {
            let verdict = hypergraph_horn::recognition::is_hypergraph_horn_oracle(&cnf)
                .map_err(|e| e.to_string())?;
            emit_verdict(verdict, format, out)
        }
        "equivalences" => {
            let table = TruthTable::from_cnf(&cnf).map_err(|e| e.to_string())?;
            let report = table.characterization_report().map_err(|e| e.to_string())?;
            let rows = [
                ("circular-majorant-fixpoint", report.circular_majorant_fixpoint),
                ("double-dual-fixpoint", report.double_dual_fixpoint),
                ("implicate-cover", report.implicate_cover),
                ("generator-cover", report.generator_cover),
                ("exchange", report.exchange),
            ];
            match format {
                Format::Text => {
                    for (name, value) in rows {
                        writeln!(out, "{name}: {value}").map_err(|e| e.to_string())?;
                    }
                }
                Format::Json => {
                    let map: serde_json::Map<String, serde_json::Value> = rows
                        .iter()
                        .map(|(name, value)| (name.to_string(), serde_json::json!(value)))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::Object(map))
                        .map_err(|e| e.to_string())?;
                }
            }
            Ok(if report.claims().iter().all(|c| *c) { 0 } else { 1 })
        }
        other => Err(format!("unknown oracle check `{other}`")),
    }
}
