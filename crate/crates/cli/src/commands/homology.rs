use std::collections::BTreeMap;

use brauer_core::complexes::{
    build_cn, build_inductive, build_w, filter_cnk, split_cn, tensor_inductive, BoxComplex, Inductive,
    DEFAULT_WORD_BOUND,
};
use brauer_core::diagram::DEFAULT_ENUMERATION_BOUND;
use brauer_core::homology::complex_homology;
use brauer_core::{ChainComplex, Error, Ring};
use serde::Serialize;

use crate::args::{ComplexArgs, ExportArgs, Target};
use crate::error::CliError;
use crate::formats::{BoxJson, ComplexJson, HomologyRow};
use crate::report::Report;

const DEFAULT_CUTOFF: usize = 4;

enum Labels {
    Boxes(Vec<Vec<brauer_core::BoxDiagram>>),
    Words(Vec<Vec<String>>),
    None,
}

/// A built complex together with the range in which its homology is
/// claimed to vanish and the range worth reporting.
struct Built {
    complex: ChainComplex,
    vanishes_through: i64,
    report_through: Option<i64>,
    params: BTreeMap<&'static str, String>,
    labels: Labels,
    note: Option<String>,
}

fn need(v: Option<usize>, flag: &str, target: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::missing(flag, target))
}

fn box_labels(c: &BoxComplex) -> Labels {
    Labels::Boxes(c.bases.clone())
}

fn build(args: &ComplexArgs) -> Result<Built, CliError> {
    let ring = Ring::parse(&args.ring.ring, &args.ring.delta)?;
    let mut params = BTreeMap::new();
    let built = match args.target {
        Target::Cn => {
            let n = need(args.n, "n", "cn")?;
            params.insert("n", n.to_string());
            let c = build_cn(n, &ring, DEFAULT_ENUMERATION_BOUND)?;
            Built {
                vanishes_through: (n as i64 - 3).div_euclid(2),
                labels: box_labels(&c),
                complex: c.complex,
                report_through: None,
                params,
                note: None,
            }
        }
        Target::Cnk => {
            let n = need(args.n, "n", "cnk")?;
            let k = need(args.k, "k", "cnk")?;
            params.insert("n", n.to_string());
            params.insert("k", k.to_string());
            let c = build_cn(n, &ring, DEFAULT_ENUMERATION_BOUND)?;
            let part = split_cn(&c)?
                .into_iter()
                .find(|p| p.k == Some(k))
                .ok_or_else(|| Error::OutOfRange(format!("k={k} exceeds n/2 for n={n}")))?;
            let top = n as i64 - k as i64 - 2;
            match args.j {
                None => Built {
                    vanishes_through: top,
                    labels: box_labels(&part),
                    complex: part.complex,
                    report_through: None,
                    params,
                    note: None,
                },
                Some(j) => {
                    if j > k {
                        return Err(Error::OutOfRange(format!("j={j} exceeds k={k}")).into());
                    }
                    params.insert("j", j.to_string());
                    let (_, q) = filter_cnk(&part, j)?;
                    Built {
                        vanishes_through: top + j as i64,
                        labels: box_labels(&q),
                        complex: q.complex,
                        report_through: None,
                        params,
                        note: Some(String::from("filtration quotient F_j / F_(j-1)")),
                    }
                }
            }
        }
        Target::W => {
            let letters = need(args.letters, "letters", "w")?;
            let seps = need(args.seps, "seps", "w")?;
            params.insert("letters", letters.to_string());
            params.insert("seps", seps.to_string());
            let x: Vec<usize> = (1..=letters).collect();
            let w = build_w(&x, seps, &ring, DEFAULT_WORD_BOUND)?;
            Built {
                vanishes_through: letters as i64 - 2,
                labels: Labels::Words(w.bases.iter().map(|b| b.iter().map(|s| s.to_string()).collect()).collect()),
                complex: w.complex,
                report_through: None,
                params,
                note: None,
            }
        }
        Target::Inductive => {
            let n = need(args.n, "n", "inductive")?;
            let x = need(args.x, "x", "inductive")?;
            if args.set.is_empty() {
                return Err(CliError::missing("set", "inductive"));
            }
            let cutoff = args.maxdeg.unwrap_or(DEFAULT_CUTOFF);
            let kind = match args.y {
                Some(y) => Inductive::D { y },
                None => Inductive::C,
            };
            params.insert("n", n.to_string());
            params.insert("set", join(&args.set));
            params.insert("x", x.to_string());
            if let Some(y) = args.y {
                params.insert("y", y.to_string());
            }
            params.insert("maxdeg", cutoff.to_string());
            params.insert("tensored", args.tensored.to_string());
            let complex = if args.tensored {
                tensor_inductive(n, &args.set, x, kind, cutoff, &ring)?
            } else {
                build_inductive(n, &args.set, x, kind, cutoff, &ring, DEFAULT_ENUMERATION_BOUND)?
            };
            let through = cutoff as i64 - 1;
            Built {
                complex,
                vanishes_through: through,
                report_through: Some(through),
                params,
                labels: Labels::None,
                note: Some(format!("truncated at degree {cutoff}; homology reported through degree {through}")),
            }
        }
    };
    Ok(built)
}

pub fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn target_name(t: Target) -> &'static str {
    match t {
        Target::Cn => "cn",
        Target::Cnk => "cnk",
        Target::W => "w",
        Target::Inductive => "inductive",
    }
}

#[derive(Serialize)]
struct HomologyDoc {
    target: &'static str,
    ring: String,
    delta: String,
    params: BTreeMap<&'static str, String>,
    vanishes_through: i64,
    rows: Vec<HomologyRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    pass: bool,
}

pub fn homology(args: &ComplexArgs) -> Result<Report, CliError> {
    let b = build(args)?;
    let rows: Vec<HomologyRow> =
        complex_homology(&b.complex, b.report_through)?.iter().map(|(p, g)| HomologyRow::new(*p, g)).collect();
    let pass = rows.iter().filter(|r| r.degree <= b.vanishes_through).all(HomologyRow::is_zero);
    let doc = HomologyDoc {
        target: target_name(args.target),
        ring: b.complex.ring().kind().to_string(),
        delta: b.complex.ring().delta().to_string(),
        params: b.params,
        vanishes_through: b.vanishes_through,
        rows,
        note: b.note,
        pass,
    };
    let table = doc.rows.iter().map(HomologyRow::tsv).collect();
    Report::new(&doc, vec!["degree", "free_rank", "torsion"], table, pass)
}

pub fn export(args: &ExportArgs) -> Result<Report, CliError> {
    let b = build(&args.complex)?;
    let c = &b.complex;
    let mut doc = ComplexJson::new(c);
    if args.labels {
        let lo = c.lo();
        let labels = match &b.labels {
            Labels::Boxes(bases) => Some(
                bases
                    .iter()
                    .enumerate()
                    .map(|(i, basis)| {
                        let v =
                            basis.iter().map(|d| serde_json::to_value(BoxJson::from(d))).collect::<Result<_, _>>()?;
                        Ok((lo + i as i64, v))
                    })
                    .collect::<Result<BTreeMap<_, _>, serde_json::Error>>()?,
            ),
            Labels::Words(bases) => Some(
                bases
                    .iter()
                    .enumerate()
                    .map(|(i, basis)| {
                        (lo + i as i64, basis.iter().map(|s| serde_json::Value::from(s.as_str())).collect())
                    })
                    .collect(),
            ),
            Labels::None => None,
        };
        doc.labels = labels;
    }
    let mut rows: Vec<Vec<String>> =
        (c.lo()..=c.hi()).map(|p| vec![String::from("rank"), p.to_string(), c.rank(p).to_string()]).collect();
    for bd in &doc.boundaries {
        for (r, col, v) in &bd.triplets {
            rows.push(vec![String::from("entry"), bd.degree.to_string(), r.to_string(), col.to_string(), v.clone()]);
        }
    }
    Report::new(&doc, vec!["kind", "degree", "row_or_rank", "col", "value"], rows, true)
}
