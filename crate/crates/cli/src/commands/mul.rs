use std::io::Read;

use brauer_core::{AlgebraElement, Error, Ring};

use crate::args::MulArgs;
use crate::error::CliError;
use crate::formats::{element_json, Factor};
use crate::report::Report;

fn read_factors(args: &MulArgs) -> Result<Vec<Factor>, CliError> {
    let mut texts = Vec::new();
    let stdin = || -> std::io::Result<String> {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    };
    if args.files.is_empty() {
        texts.push(stdin()?);
    }
    for f in &args.files {
        texts.push(if f.as_os_str() == "-" { stdin()? } else { std::fs::read_to_string(f)? });
    }
    let mut out = Vec::new();
    for t in &texts {
        for v in serde_json::Deserializer::from_str(t).into_iter::<serde_json::Value>() {
            match v? {
                serde_json::Value::Array(items) => {
                    for item in items {
                        out.push(serde_json::from_value(item)?);
                    }
                }
                other => out.push(serde_json::from_value(other)?),
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Parse(String::from("no elements given")));
    }
    Ok(out)
}

/// Flags win; otherwise every input naming a ring must agree.
fn resolve_ring(args: &MulArgs, factors: &[Factor]) -> Result<Ring, CliError> {
    let mut spec = args.ring.clone();
    let mut delta = args.delta.clone();
    for f in factors {
        let (r, d) = f.ring_spec();
        for (flag, named, given) in [(args.ring.is_some(), &mut spec, r), (args.delta.is_some(), &mut delta, d)] {
            let Some(given) = given else { continue };
            match named {
                Some(prev) if !flag && prev.trim() != given.trim() => return Err(Error::RingMismatch.into()),
                None => *named = Some(given.to_string()),
                _ => {}
            }
        }
    }
    Ok(Ring::parse(spec.as_deref().unwrap_or("Z"), delta.as_deref().unwrap_or("0"))?)
}

pub fn run(args: &MulArgs) -> Result<Report, CliError> {
    let factors = read_factors(args)?;
    let ring = resolve_ring(args, &factors)?;
    let n = factors[0].n();
    if let Some(f) = factors.iter().find(|f| f.n() != n) {
        return Err(Error::StrandMismatch(n, f.n()).into());
    }
    let mut product = AlgebraElement::one(n, &ring);
    for f in &factors {
        product = product.mul(&f.to_element(&ring)?)?;
    }
    let mut loops = Some(0u32);
    let mut current = None;
    for f in &factors {
        match (f.single()?, loops) {
            (Some(d), Some(l)) => {
                current = Some(match current {
                    None => d,
                    Some(c) => {
                        let r = brauer_core::BrauerDiagram::compose(&c, &d)?;
                        loops = Some(l + r.loops);
                        r.diagram
                    }
                });
            }
            _ => loops = None,
        }
    }
    let doc = element_json(&product, loops);
    let rows = doc
        .terms
        .iter()
        .map(|t| Ok(vec![t.coeff.clone(), serde_json::to_string(&t.pairs)?]))
        .collect::<Result<_, CliError>>()?;
    Report::new(&doc, vec!["coeff", "pairs"], rows, true)
}
