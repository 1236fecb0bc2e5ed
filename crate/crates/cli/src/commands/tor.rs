use brauer_core::bar::{bar_tor, AlgebraKind, ModuleKind};
use brauer_core::diagram::DEFAULT_ENUMERATION_BOUND;
use brauer_core::Ring;
use serde::Serialize;

use crate::args::{AlgebraArg, TorArgs};
use crate::error::CliError;
use crate::formats::HomologyRow;
use crate::report::Report;

pub fn parse_module(s: &str) -> Result<ModuleKind, CliError> {
    let bad = || CliError::Parse(format!("cannot parse module {s:?}"));
    let s = s.trim();
    if s == "trivial" {
        return Ok(ModuleKind::Trivial);
    }
    let (head, tail) = s.split_once(':').ok_or_else(bad)?;
    let number = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match head {
        "induced" => Ok(ModuleKind::Induced(number(tail)?)),
        "restricted" => Ok(ModuleKind::Restricted(number(tail)?)),
        "quotient" if tail.trim().is_empty() => Ok(ModuleKind::Quotient(Vec::new())),
        "quotient" => Ok(ModuleKind::Quotient(tail.split(',').map(number).collect::<Result<_, _>>()?)),
        _ => Err(bad()),
    }
}

#[derive(Serialize)]
struct TorDoc {
    algebra: String,
    n: usize,
    module: String,
    ring: String,
    delta: String,
    maxdeg: usize,
    rows: Vec<HomologyRow>,
}

pub fn run(args: &TorArgs, budget: u128) -> Result<Report, CliError> {
    let ring = Ring::parse(&args.ring.ring, &args.ring.delta)?;
    let module = parse_module(&args.module)?;
    let kind = match args.algebra {
        AlgebraArg::Brauer => AlgebraKind::Brauer,
        AlgebraArg::Sym => AlgebraKind::Symmetric,
    };
    let tor = bar_tor(kind, args.n, &module, args.maxdeg, &ring, budget, DEFAULT_ENUMERATION_BOUND)?;
    let doc = TorDoc {
        algebra: kind.to_string(),
        n: args.n,
        module: module.to_string(),
        ring: ring.kind().to_string(),
        delta: ring.delta().to_string(),
        maxdeg: args.maxdeg,
        rows: tor.iter().map(|(i, g)| HomologyRow::new(*i, g)).collect(),
    };
    let table = doc.rows.iter().map(HomologyRow::tsv).collect();
    Report::new(&doc, vec!["degree", "free_rank", "torsion"], table, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_strings() {
        for s in ["trivial", "induced:2", "quotient:1,3", "restricted:4"] {
            assert_eq!(parse_module(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_module("quotient:").unwrap(), ModuleKind::Quotient(Vec::new()));
        for bad in ["", "induced", "induced:x", "free:2"] {
            assert!(parse_module(bad).is_err(), "{bad}");
        }
    }
}
