use std::io::{Read, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use super::{Cli, CliError, CodecOp, Command, ComplexityTerm, ScoringArgs};
use crate::bits::{Bits, Real};
use crate::codec::{self, CodeWord, Rank};
use crate::generation::{
    lottery_complexity, mutability_inheritance_check, propagate_bounds, unpropagated_mutability_conflicts, BoundsTable,
    MutabilityViolation,
};
use crate::knowledge::{
    load_frequency_csv, load_kb, place_generation_complexity, save_kb, temporal_location_complexity,
    witness_description_discount, KbDelta, KnowledgeBase, KnowledgeError, PlaceAnchor, TemporalAnchor,
    UnknownItemPolicy,
};
use crate::relevance::{
    coincidence_unexpectedness, combiner_by_name, distance_decay, evaluate_situation, rank_records,
    temporal_linkage_complexity, two_relevance, CheckedCombiner, Observed, RecordInput, RelevanceReport,
    ScoringOptions, SituationDescriptor,
};

type Out<'a> = &'a mut dyn Write;

pub(super) fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: Out) -> Result<(), CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Ingest { csv, name, kb } => ingest(csv, name, kb, json, out),
        Command::Codec { op } => codec_op(op, json, out),
        Command::Complexity { term } => complexity(term, json, out),
        Command::Score { situation, scoring } => {
            let kb = load_optional_kb(scoring)?;
            let s: SituationDescriptor = read_json(situation, stdin)?;
            let report = evaluate_situation(&kb, &s, &options(scoring, cli.seed)?)?;
            if json {
                emit_json(out, &report)
            } else {
                write_report(out, &report)
            }
        }
        Command::Rank { records, scoring } => {
            let kb = load_optional_kb(scoring)?;
            let records: Vec<RecordInput> = read_json(records, stdin)?;
            let ranked = rank_records(&kb, &records, &options(scoring, cli.seed)?)?;
            if json {
                return emit_json(out, &ranked);
            }
            for (i, r) in ranked.iter().enumerate() {
                writeln!(
                    out,
                    "{:>3}. {}  U = {:.2} bits  {}",
                    i + 1,
                    r.label,
                    Real(r.u),
                    verdict(r.relevant)
                )?;
            }
            Ok(())
        }
        Command::Coincidence {
            cw1,
            c1,
            cw2,
            c2_given_1,
            delta,
            granularity,
        } => {
            let first = Observed {
                generation: bits_arg("cw1", *cw1)?,
                description: bits_arg("c1", *c1)?,
            };
            let linkage = match delta {
                Some(d) => Some(temporal_linkage_complexity(*d, *granularity)?),
                None => None,
            };
            let second = Observed {
                generation: bits_arg("cw2", *cw2)?,
                description: bits_arg("c2-given-1", *c2_given_1)? + linkage.unwrap_or(Bits::ZERO),
            };
            let u = coincidence_unexpectedness(first, second)?;
            if json {
                return emit_json(
                    out,
                    &CoincidenceOut {
                        u,
                        linkage,
                        relevant: u > 0.0,
                    },
                );
            }
            if let Some(l) = linkage {
                writeln!(out, "temporal linkage: +{l:.2} bits")?;
            }
            writeln!(out, "U >= {:.2} bits  {}", Real(u), verdict(u > 0.0))?;
            Ok(())
        }
        Command::Argue {
            delta,
            situation,
            scoring,
        } => {
            if scoring.kb.is_none() {
                return Err(CliError::Input("argue needs --kb".into()));
            }
            let kb = load_optional_kb(scoring)?;
            let t: KbDelta = read_json(delta, stdin)?;
            let s: SituationDescriptor = read_json(situation, stdin)?;
            let r = two_relevance(&kb, &t, &s, &options(scoring, cli.seed)?)?;
            if json {
                return emit_json(out, &r);
            }
            writeln!(out, "U(s)     = {:.2} bits", Real(r.u_before))?;
            writeln!(out, "U(s | t) = {:.2} bits", Real(r.u_after))?;
            writeln!(out, "delta    = {:.2} bits", Real(r.delta_u))?;
            writeln!(
                out,
                "verdict: {}",
                if r.two_relevant { "2-relevant" } else { "not 2-relevant" }
            )?;
            Ok(())
        }
        Command::KbLint { kb } => lint(kb, json, out),
    }
}

fn verdict(relevant: bool) -> &'static str {
    if relevant {
        "relevant"
    } else {
        "not relevant"
    }
}

fn bits_arg(name: &str, x: f64) -> Result<Bits, CliError> {
    Bits::new(x).map_err(|_| CliError::Input(format!("--{name} must be a non-negative number of bits, got {x}")))
}

fn options(args: &ScoringArgs, seed: u64) -> Result<ScoringOptions, CliError> {
    let combiner = match &args.emotion_combiner {
        Some(name) => CheckedCombiner::new(combiner_by_name(name)?, seed)?,
        None => CheckedCombiner::default(),
    };
    Ok(ScoringOptions {
        unknown_items: if args.fallback_rank {
            UnknownItemPolicy::RankPastEnd
        } else {
            UnknownItemPolicy::Reject
        },
        reference_distance: args.d0,
        combiner,
        ..ScoringOptions::default()
    })
}

fn load_optional_kb(args: &ScoringArgs) -> Result<KnowledgeBase, CliError> {
    Ok(match &args.kb {
        Some(path) => load_kb(path)?,
        None => KnowledgeBase::default(),
    })
}

fn read_json<T: DeserializeOwned>(path: &Path, stdin: &mut dyn Read) -> Result<T, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| KnowledgeError::io(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| KnowledgeError::io(path, e))?;
    }
    serde_json::from_str(&text).map_err(|e| {
        let e = KnowledgeError::from_json(e);
        CliError::Input(format!("{}: {e}", path.display()))
    })
}

fn emit_json<T: Serialize + ?Sized>(out: Out, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Input(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct TableRow<'a> {
    rank: u64,
    item: &'a str,
    count: u64,
    code: String,
    complexity: Bits,
}

fn ingest(csv: &Path, name: &str, kb_path: &Path, json: bool, out: Out) -> Result<(), CliError> {
    let list = load_frequency_csv(name, csv)?;
    let kb = if kb_path.exists() {
        load_kb(kb_path)?
    } else {
        KnowledgeBase::default()
    };
    let kb = kb.with_list(list);
    save_kb(kb_path, &kb)?;

    let rows: Vec<TableRow> = kb
        .list(name)?
        .table()
        .map(|(rank, entry, word, bits)| TableRow {
            rank: rank.0,
            item: &entry.item,
            count: entry.count,
            code: word.to_string(),
            complexity: bits,
        })
        .collect();
    if json {
        return emit_json(out, &rows);
    }
    let item_w = rows.iter().map(|r| r.item.chars().count()).max().unwrap_or(0).max(4);
    let count_w = rows.iter().map(|r| r.count.to_string().len()).max().unwrap_or(0).max(5);
    let code_w = rows.iter().map(|r| r.code.len()).max().unwrap_or(0).max(4);
    writeln!(
        out,
        "{:<4}  {:<item_w$}  {:>count_w$}  {:<code_w$}  complexity",
        "rank", "item", "count", "code"
    )?;
    for r in &rows {
        writeln!(
            out,
            "{:<4}  {:<item_w$}  {:>count_w$}  {:<code_w$}  {}",
            r.rank, r.item, r.count, r.code, r.complexity
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CodecOut {
    rank: u64,
    code: String,
    length: Bits,
}

fn codec_op(op: &CodecOp, json: bool, out: Out) -> Result<(), CliError> {
    let (rank, word) = match op {
        CodecOp::Encode { rank } => (Rank(*rank), codec::encode_rank(Rank(*rank))),
        CodecOp::Decode { bits } => {
            let word: CodeWord = bits
                .parse()
                .map_err(|e: codec::CodecError| CliError::Input(e.to_string()))?;
            let rank = codec::decode(&word).map_err(|e| CliError::Input(e.to_string()))?;
            (rank, word)
        }
    };
    let length = codec::code_length(rank);
    if json {
        return emit_json(
            out,
            &CodecOut {
                rank: rank.0,
                code: word.to_string(),
                length,
            },
        );
    }
    match op {
        CodecOp::Encode { .. } => writeln!(out, "\"{word}\" ({length} bits)")?,
        CodecOp::Decode { .. } => writeln!(out, "{}", rank.0)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct TermOut {
    bits: Bits,
}

fn complexity(term: &ComplexityTerm, json: bool, out: Out) -> Result<(), CliError> {
    let bits = match term {
        ComplexityTerm::Item {
            item,
            kb,
            list,
            fallback_rank,
        } => {
            let policy = if *fallback_rank {
                UnknownItemPolicy::RankPastEnd
            } else {
                UnknownItemPolicy::Reject
            };
            load_kb(kb)?.list(list)?.item_complexity(item, policy)?
        }
        ComplexityTerm::Lottery { n, draws } => {
            lottery_complexity(*n, *draws).map_err(|e| CliError::Input(e.to_string()))?
        }
        ComplexityTerm::Temporal { t, a } => temporal_location_complexity(&TemporalAnchor::new(*t, *a)?),
        ComplexityTerm::Place { n } => place_generation_complexity(&PlaceAnchor::new(*n, 1)?),
        ComplexityTerm::Witness { k } => witness_description_discount(&PlaceAnchor::new(1, *k)?),
        ComplexityTerm::Distance { d, d0 } => distance_decay(*d, *d0)?,
    };
    if json {
        emit_json(out, &TermOut { bits })
    } else {
        writeln!(out, "{bits:.2} bits")?;
        Ok(())
    }
}

#[derive(Serialize)]
struct CoincidenceOut {
    #[serde(with = "crate::bits::real")]
    u: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    linkage: Option<Bits>,
    relevant: bool,
}

#[derive(Serialize)]
struct LintOut {
    propositions: usize,
    rules: usize,
    inheritance_violations: Vec<MutabilityViolation>,
    unpropagated_mutability_conflicts: Vec<MutabilityViolation>,
}

fn lint(path: &Path, json: bool, out: Out) -> Result<(), CliError> {
    let kb = load_kb(path)?;
    let beliefs = kb.beliefs();
    let table = propagate_bounds(beliefs, &BoundsTable::new())?;
    let report = LintOut {
        propositions: table.len(),
        rules: beliefs.rules().len(),
        inheritance_violations: mutability_inheritance_check(beliefs),
        unpropagated_mutability_conflicts: unpropagated_mutability_conflicts(beliefs),
    };
    if json {
        return emit_json(out, &report);
    }
    writeln!(
        out,
        "bounds consistent over {} propositions and {} rules",
        report.propositions, report.rules
    )?;
    for v in &report.inheritance_violations {
        writeln!(out, "violation: {}", describe(v))?;
    }
    for v in &report.unpropagated_mutability_conflicts {
        writeln!(out, "raised by propagation: {}", describe(v))?;
    }
    Ok(())
}

fn describe(v: &MutabilityViolation) -> String {
    format!(
        "{} ⊃ {}: M = {:.2} < {:.2}",
        v.rule.antecedent,
        v.rule.consequent,
        Real(v.antecedent_mutability),
        Real(v.consequent_mutability)
    )
}

fn write_report(out: Out, r: &RelevanceReport) -> Result<(), CliError> {
    writeln!(out, "{}: {}", r.label, verdict(r.relevant))?;
    writeln!(out, "  C   = {:.2} bits", r.c)?;
    writeln!(out, "  C_w = {:.2} bits", r.c_w)?;
    writeln!(out, "  U   = {:.2} bits", Real(r.u))?;
    if !r.bound_flags.is_empty() {
        let flags: Vec<String> = r
            .bound_flags
            .iter()
            .map(|f| {
                serde_json::to_value(f)
                    .map(|v| v.as_str().unwrap_or_default().to_string())
                    .unwrap_or_default()
            })
            .collect();
        writeln!(out, "  bounds: {}", flags.join(", "))?;
    }
    for f in &r.feature_contributions {
        writeln!(out, "  feature {}: U = {:.2} bits", f.feature, Real(f.u))?;
    }
    if let Some(i) = r.emotional_relevance {
        writeln!(out, "  emotional relevance = {:.2}", Real(i))?;
    }
    for note in &r.notes {
        writeln!(out, "  - {note}")?;
    }
    Ok(())
}
