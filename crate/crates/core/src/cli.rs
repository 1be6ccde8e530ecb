//! The `globact` command line tool.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::act::{adjoin_identity_act, Act, GlobalAct, PartialAct};
use crate::census::census;
use crate::error::{Error, Result};
use crate::glob::{
    are_isomorphic_globalizations, canonical_from_tensor, canonical_to_hom, check_triangle_with,
    embedding_compatible_morphisms, is_globalization, Certificates, GlobalizationTriple,
};
use crate::hom::{build_hom, check_isom1, compare_with_adjoined_hom, is_nonsingular, one_point_globalization};
use crate::io::{content_hash, ActDocument, GlobDocument, Parsed};
use crate::morphism::Morphism;
use crate::tensor::{build_tensor, compare_with_adjoined_tensor, is_firm_global, is_firm_with};
use crate::Limits;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "globact", version, about = "Globalizations of finite partial semigroup acts")]
pub struct Cli {
    /// Cap on exhaustive search spaces.
    #[arg(long, global = true, env = "GLOBACT_BOUND", default_value_t = 1_000_000)]
    pub bound: u64,

    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Print nothing to stdout or stderr; only the exit code.
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a document describes a semigroup and a partial act.
    Validate { file: PathBuf },
    /// Decide every axiom for the act.
    Props { file: PathBuf },
    /// Build the tensor product globalization.
    Tensor { file: PathBuf },
    /// Build the Hom-set globalization.
    Hom { file: PathBuf },
    /// Enumerate the generated globalizations up to isomorphism.
    Census { file: PathBuf },
    /// Compare the two constructions.
    Compare { file: PathBuf },
    /// Build the one-point globalization of a partially defined act.
    Onepoint { file: PathBuf },
    /// Check a candidate globalization given as a second document.
    Verify { file: PathBuf, glob_file: PathBuf },
    /// Adjoin an identity to the semigroup and compare the constructions.
    Adjoin { file: PathBuf },
}

/// A finished report and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Option<String>,
    pub error: Option<String>,
    pub exit_code: i32,
}

pub fn run(cli: &Cli) -> Outcome {
    let limits = Limits {
        search_space: cli.bound,
        ..Limits::default()
    };
    match execute(&cli.command, &limits) {
        Ok(value) => {
            let text = serde_json::to_string_pretty(&value).expect("reports serialize") + "\n";
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    return failure(&Error::Io(format!("{}: {e}", path.display())));
                }
            }
            Outcome {
                report: Some(text),
                error: None,
                exit_code: 0,
            }
        }
        Err(e) => failure(&e),
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        report: None,
        error: Some(format!("error: {e}")),
        exit_code: e.exit_code(),
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(Parsed, String)> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("input is not UTF-8: {e}"),
    })?;
    Ok((ActDocument::parse(&text)?, content_hash(&bytes)))
}

fn envelope(command: &str, hash: String, result: Value) -> Value {
    json!({
        "command": command,
        "version": VERSION,
        "input_sha256": hash,
        "result": result,
    })
}

fn execute(command: &Command, limits: &Limits) -> Result<Value> {
    match command {
        Command::Validate { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope(
                "validate",
                hash,
                json!({
                    "valid": true,
                    "semigroup_size": p.semigroup.size(),
                    "act_size": p.act.size(),
                }),
            ))
        }
        Command::Props { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope("props", hash, props(&p.act)))
        }
        Command::Tensor { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope("tensor", hash, tensor_report(&p.act)))
        }
        Command::Hom { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope("hom", hash, hom_report(&p.act)?))
        }
        Command::Census { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope("census", hash, census_report(&p.act, limits)?))
        }
        Command::Compare { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope("compare", hash, compare_report(&p.act)?))
        }
        Command::Onepoint { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope("onepoint", hash, onepoint_report(&p.act)?))
        }
        Command::Verify { file, glob_file } => {
            let (p, hash) = load(file)?;
            let glob_bytes = read(glob_file)?;
            let glob_text = String::from_utf8_lossy(&glob_bytes);
            let doc = GlobDocument::parse(&glob_text)?;
            let global = doc.build(&p.semigroup)?;
            let mut report = envelope("verify", hash, verify_report(&p.act, &global, &doc.iota, limits)?);
            report["glob_sha256"] = json!(content_hash(&glob_bytes));
            Ok(report)
        }
        Command::Adjoin { file } => {
            let (p, hash) = load(file)?;
            Ok(envelope("adjoin", hash, adjoin_report(&p.act)?))
        }
    }
}

fn props(act: &PartialAct) -> Value {
    let sg = act.semigroup();
    let flags = act.flags();
    let tensor = build_tensor(act);
    let firm = is_firm_with(&tensor);
    let global = act.to_global();
    json!({
        "semigroup_size": sg.size(),
        "act_size": act.size(),
        "monoid": sg.is_monoid(),
        "group": sg.is_group(),
        "factorizable": sg.is_factorizable(),
        "pa": flags.pa,
        "strong": flags.strong,
        "unitary": flags.unitary,
        "um": flags.um,
        "partially_defined": flags.partially_defined,
        "inverse_condition": flags.inverse_condition,
        "global": act.is_global(),
        "condition_f": tensor.satisfies_f(),
        "firm": firm,
        "nonsingular": is_nonsingular(act),
        "firm_global": global.as_ref().map(is_firm_global),
    })
}

fn certificates(c: Certificates) -> Value {
    json!({ "g1": c.g1, "g2": c.g2, "a_generated": c.a_generated })
}

fn globalization(global: &GlobalAct, iota: &[usize]) -> Value {
    serde_json::to_value(GlobDocument::from_parts(global, iota)).expect("documents serialize")
}

fn triple_fields(triple: Option<&GlobalizationTriple>) -> (Value, Value) {
    match triple {
        Some(t) => (certificates(t.certificates()), globalization(t.global(), t.iota())),
        None => (Value::Null, Value::Null),
    }
}

fn tensor_report(act: &PartialAct) -> Value {
    let tensor = build_tensor(act);
    let classes: Vec<Vec<[usize; 2]>> = tensor
        .classes()
        .iter()
        .map(|c| c.iter().map(|&(a, s)| [a, s]).collect())
        .collect();
    let representatives: Vec<[usize; 2]> = (0..tensor.size())
        .map(|k| {
            let (a, s) = tensor.representative(k);
            [a, s]
        })
        .collect();
    let triple = tensor.triple();
    let (certs, glob) = triple_fields(triple.as_ref());
    json!({
        "size": tensor.size(),
        "classes": classes,
        "representatives": representatives,
        "action": tensor.action().rows(),
        "delta": tensor.delta().map(|d| json!({ "map": d.map, "verified": d.verified })),
        "firm": is_firm_with(&tensor),
        "certificates": certs,
        "globalization": glob,
    })
}

fn hom_report(act: &PartialAct) -> Result<Value> {
    let hom = build_hom(act)?;
    let elements: Vec<&[Option<usize>]> = hom.elements().iter().map(|f| f.values()).collect();
    let representatives: Vec<[usize; 2]> = (0..hom.size())
        .map(|i| {
            let (a, s) = hom.representative(i);
            [a, s]
        })
        .collect();
    let triple = hom.triple();
    let (certs, glob) = triple_fields(triple.as_ref());
    Ok(json!({
        "size": hom.size(),
        "elements": elements,
        "representatives": representatives,
        "action": hom.action().rows(),
        "lambda": hom.lambda(),
        "zero_index": hom.zero_index(),
        "nonsingular": is_nonsingular(act),
        "certificates": certs,
        "globalization": glob,
    }))
}

fn census_report(act: &PartialAct, limits: &Limits) -> Result<Value> {
    let result = census(act, limits)?;
    let cells = (result.len() * result.len()) as u64;
    if cells > limits.search_space {
        return Err(Error::SearchSpaceTooLarge {
            size: cells as u128,
            bound: limits.search_space,
        });
    }
    let objects: Vec<Value> = result
        .objects
        .iter()
        .enumerate()
        .map(|(i, o)| {
            json!({
                "size": o.triple.global().size(),
                "action": o.triple.global().rows(),
                "iota": o.triple.iota(),
                "tensor_blocks": o.blocks,
                "initial": i == result.initial_index,
                "terminal": i == result.terminal_index,
            })
        })
        .collect();
    let matrix: Vec<Vec<Option<Vec<usize>>>> = result
        .morphism_matrix()
        .into_iter()
        .map(|row| row.into_iter().map(|m| m.map(|m| m.map().to_vec())).collect())
        .collect();
    Ok(json!({
        "count": result.len(),
        "objects": objects,
        "initial_index": result.initial_index,
        "terminal_index": result.terminal_index,
        "morphisms": matrix,
    }))
}

fn compare_report(act: &PartialAct) -> Result<Value> {
    let tensor = build_tensor(act);
    let hom = build_hom(act)?;
    // a⊗s ↦ f_{a,s}; well defined for strong acts.
    let mut map = Vec::with_capacity(tensor.size());
    for members in tensor.classes() {
        let (a, s) = members[0];
        let image = hom.index_of_pair(a, s);
        if members.iter().any(|&(b, t)| hom.index_of_pair(b, t) != image) {
            return Err(Error::WellDefinednessFailure(
                "a⊗s ↦ f_{a,s} depends on the representative",
            ));
        }
        map.push(image);
    }
    let canonical = Morphism::new(map);
    let injective = canonical.is_injective();
    let surjective = canonical.is_surjective(hom.size());
    let isomorphic = match (tensor.triple(), hom.triple()) {
        (Some(t), Some(h)) => are_isomorphic_globalizations(&t, &h, u64::MAX)?,
        _ => injective && surjective,
    };
    Ok(json!({
        "tensor_size": tensor.size(),
        "hom_size": hom.size(),
        "canonical_map": canonical.map(),
        "canonical_injective": injective,
        "canonical_surjective": surjective,
        "isomorphic": isomorphic,
    }))
}

fn onepoint_report(act: &PartialAct) -> Result<Value> {
    let triple = one_point_globalization(act)?;
    let isom1 = match check_isom1(act) {
        Ok(r) => json!({ "holds": r.holds, "iso": r.iso.as_ref().map(Morphism::map) }),
        Err(Error::PreconditionFailed(reason)) => json!({ "skipped": reason }),
        Err(e) => return Err(e),
    };
    Ok(json!({
        "size": triple.global().size(),
        "action": triple.global().rows(),
        "iota": triple.iota(),
        "certificates": certificates(triple.certificates()),
        "globalization": globalization(triple.global(), triple.iota()),
        "isom1": isom1,
    }))
}

/// Reports a morphism, or why it was not computed when a precondition
/// fails.
fn optional(result: Result<Morphism>) -> Result<Value> {
    match result {
        Ok(m) => Ok(json!({ "map": m.map() })),
        Err(
            e @ (Error::PreconditionFailed(_)
            | Error::NotAGlobalization
            | Error::NotAGenerated
            | Error::NotUnitary
            | Error::NotStrong),
        ) => Ok(json!({ "skipped": e.to_string() })),
        Err(e) => Err(e),
    }
}

fn verify_report(act: &PartialAct, global: &GlobalAct, iota: &[usize], limits: &Limits) -> Result<Value> {
    let triple = is_globalization(act, global, iota)?;
    let tensor = build_tensor(act);
    let from_tensor = optional(canonical_from_tensor(&tensor, &triple))?;
    let hom = if act.is_strong() { Some(build_hom(act)?) } else { None };
    let to_hom = match &hom {
        Some(h) => optional(canonical_to_hom(h, &triple))?,
        None => json!({ "skipped": Error::NotStrong.to_string() }),
    };
    let compatible_from_tensor = match tensor.triple() {
        Some(t) if triple.is_globalization() && act.is_strong() => {
            json!(embedding_compatible_morphisms(&t, &triple, limits.search_space)?.len())
        }
        _ => Value::Null,
    };
    let triangle = match &hom {
        Some(h) if triple.is_a_generated() => match check_triangle_with(&tensor, h, &triple) {
            Ok(b) => json!(b),
            Err(Error::PreconditionFailed(reason)) => json!({ "skipped": reason }),
            Err(e) => return Err(e),
        },
        _ => Value::Null,
    };
    Ok(json!({
        "certificates": certificates(triple.certificates()),
        "is_globalization": triple.is_globalization(),
        "from_tensor": from_tensor,
        "to_hom": to_hom,
        "compatible_morphisms_from_tensor": compatible_from_tensor,
        "triangle": triangle,
    }))
}

fn adjoin_report(act: &PartialAct) -> Result<Value> {
    let adjoined = adjoin_identity_act(act)?;
    let t = compare_with_adjoined_tensor(act)?;
    let h = compare_with_adjoined_hom(act)?;
    Ok(json!({
        "document": ActDocument::from_act(&adjoined),
        "identity_index": act.semigroup().adjoined_identity_index(),
        "tensor": {
            "tensor_size": t.tensor_size,
            "adjoined_size": t.adjoined_size,
            "map": t.map.map(),
            "well_defined": t.well_defined,
            "injective": t.injective,
            "surjective": t.surjective,
        },
        "hom": {
            "hom_size": h.hom_size,
            "adjoined_size": h.adjoined_size,
            "c_size": h.c_size,
            "well_defined": h.well_defined,
            "injective": h.injective,
            "surjective": h.surjective,
            "c_is_everything": h.total_on_c,
            "isomorphism": h.is_isomorphism(),
        },
    }))
}
