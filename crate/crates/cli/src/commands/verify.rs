use std::collections::BTreeMap;

use brauer_core::algebra::relations_check;
use brauer_core::bar::{
    inclusion_check, induced_module_check, quotient_vanishing_check, shapiro_check, theorem_a_check, CheckReport,
    MapProperty,
};
use brauer_core::complexes::phi_iso_check;
use brauer_core::diagram::{double_factorial_odd, enumerate_diagrams, DEFAULT_ENUMERATION_BOUND as BOUND};
use brauer_core::{Error, Ring};
use serde::{Deserialize, Serialize};

use super::homology::join;
use crate::args::{Suite, VerifyArgs};
use crate::error::CliError;
use crate::goldens;
use crate::report::Report;

const DEFAULT_TOP: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    suite: &'a str,
    ring: String,
    delta: String,
    params: BTreeMap<&'static str, String>,
    checks: &'a [Check],
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    pass: bool,
}

/// How a live run compares with its checked-in golden file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoldenStatus {
    Match,
    Mismatch,
    Absent,
}

pub struct Verified {
    pub report: Report,
    pub golden: GoldenStatus,
    pub key: String,
}

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Relations => "relations",
        Suite::Dimensions => "dimensions",
        Suite::ThmA => "thmA",
        Suite::ThmB => "thmB",
        Suite::Thm41 => "thm41",
        Suite::Thm31 => "thm31",
        Suite::Phi => "phi",
        Suite::Shapiro => "shapiro",
        Suite::Surjection63 => "surjection63",
    }
}

/// The flags of a run in a fixed order; goldens are keyed by this string.
pub fn canonical_key(args: &VerifyArgs) -> String {
    let mut key = format!("verify {}", suite_name(args.suite));
    let flags = [("n", args.n), ("m", args.m), ("i", args.i), ("k", args.k), ("j", args.j)];
    for (name, v) in flags {
        if let Some(v) = v {
            key.push_str(&format!(" --{name} {v}"));
        }
    }
    if !args.set.is_empty() {
        key.push_str(&format!(" --set {}", join(&args.set)));
    }
    if let Some(d) = args.maxdeg {
        key.push_str(&format!(" --maxdeg {d}"));
    }
    key.push_str(&format!(" --ring {} --delta {}", args.ring.ring, args.ring.delta));
    key
}

fn need(v: Option<usize>, flag: &str, suite: Suite) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::missing(flag, suite_name(suite)))
}

fn degree_checks(
    r: &CheckReport,
    n: usize,
    expected: impl Fn(&brauer_core::bar::DegreeReport) -> String,
) -> Vec<Check> {
    r.rows
        .iter()
        .map(|row| Check {
            instance: format!("n={n} i={}", row.degree),
            expected: expected(row),
            computed: format!("{} -> {} {}", row.source, row.target, row.detail),
            pass: row.holds,
        })
        .collect()
}

/// The single degree `i` of an inclusion check together with whether a
/// claim applies there.
fn inclusion_degree(
    small: usize,
    n: usize,
    i: usize,
    claim: Option<MapProperty>,
    ring: &Ring,
    budget: u128,
) -> Result<Check, CliError> {
    let iso = inclusion_check(small, n, MapProperty::Isomorphism, i + 1, ring, budget, BOUND)?;
    let onto = inclusion_check(small, n, MapProperty::Surjective, i + 1, ring, budget, BOUND)?;
    let (a, b) = (&iso.rows[i], &onto.rows[i]);
    let computed = format!("{} -> {} isomorphism:{} surjective:{}", a.source, a.target, a.holds, b.holds);
    let (expected, pass) = match claim {
        Some(MapProperty::Isomorphism) => (String::from("isomorphism"), a.holds),
        Some(MapProperty::Surjective) => (String::from("surjective"), b.holds),
        None => (String::from("no claim outside the stated range"), true),
    };
    Ok(Check { instance: format!("m={small} n={n} i={i}"), expected, computed, pass })
}

fn checks(args: &VerifyArgs, ring: &Ring, budget: u128) -> Result<(Vec<Check>, Option<String>), CliError> {
    let suite = args.suite;
    let top = args.maxdeg.unwrap_or(DEFAULT_TOP);
    let mut note = None;
    let out = match suite {
        Suite::Relations => {
            let n = need(args.n, "n", suite)?;
            let mut out = Vec::new();
            for m in 1..=n {
                for o in relations_check(m, ring)? {
                    out.push(Check {
                        instance: format!("n={m} {}", o.family),
                        expected: String::from("holds"),
                        computed: if o.passed() {
                            format!("holds on {} instances", o.instances)
                        } else {
                            format!("fails at {:?}", o.failures)
                        },
                        pass: o.passed(),
                    });
                }
            }
            out
        }
        Suite::Dimensions => {
            let n = need(args.n, "n", suite)?;
            (0..=n)
                .map(|m| {
                    let got = enumerate_diagrams(m, BOUND)?.len() as u64;
                    let want = double_factorial_odd(m);
                    Ok(Check {
                        instance: format!("n={m}"),
                        expected: want.to_string(),
                        computed: got.to_string(),
                        pass: got == want,
                    })
                })
                .collect::<Result<_, CliError>>()?
        }
        Suite::ThmA => {
            let n = need(args.n, "n", suite)?;
            let r = theorem_a_check(n, top, ring, budget, BOUND)?;
            note = Some(r.note.clone());
            degree_checks(&r, n, |_| String::from("iota_* and pi_* mutually inverse"))
        }
        Suite::ThmB => {
            let n = need(args.n, "n", suite)?;
            let i = need(args.i, "i", suite)?;
            let claim = (n > 2 * i).then_some(MapProperty::Isomorphism);
            vec![inclusion_degree(n, n, i, claim, ring, budget)?]
        }
        Suite::Surjection63 => {
            let n = need(args.n, "n", suite)?;
            let i = need(args.i, "i", suite)?;
            if n == 0 {
                return Err(Error::OutOfRange(String::from("needs n >= 1")).into());
            }
            let claim = (2 * i < n).then_some(MapProperty::Surjective);
            vec![inclusion_degree(n - 1, n, i, claim, ring, budget)?]
        }
        Suite::Thm41 => {
            let n = need(args.n, "n", suite)?;
            let m = need(args.m, "m", suite)?;
            let r = induced_module_check(n, m, top, ring, budget, BOUND)?;
            note = Some(r.note.clone());
            degree_checks(&r, n, |row| format!("{} with iota_*, pi_* mutually inverse", row.source))
        }
        Suite::Thm31 => {
            let n = need(args.n, "n", suite)?;
            let r = quotient_vanishing_check(n, &args.set, top, ring, budget, BOUND)?;
            note = Some(r.note.clone());
            r.rows
                .iter()
                .map(|row| Check {
                    instance: format!("n={n} X={{{}}} i={}", join(&args.set), row.degree),
                    expected: String::from("0"),
                    computed: row.source.to_string(),
                    pass: row.holds,
                })
                .collect()
        }
        Suite::Phi => {
            let n = need(args.n, "n", suite)?;
            let ks: Vec<usize> = match args.k {
                Some(k) => vec![k],
                None => (0..=n / 2).collect(),
            };
            let mut out = Vec::new();
            for k in ks {
                let js: Vec<usize> = match args.j {
                    Some(j) => vec![j],
                    None => (0..=k).collect(),
                };
                for j in js {
                    let r = phi_iso_check(n, k, j, BOUND)?;
                    out.push(Check {
                        instance: format!("n={n} k={k} j={j}"),
                        expected: format!("chain isomorphism onto {} tuples", r.target_size),
                        computed: format!(
                            "basis {} round_trip:{} bijective:{} degree_shift:{} chain_map:{}",
                            r.basis_size, r.round_trip, r.bijective, r.degree_shift, r.chain_map
                        ),
                        pass: r.passed(),
                    });
                }
            }
            out
        }
        Suite::Shapiro => {
            let n = need(args.n, "n", suite)?;
            let m = need(args.m, "m", suite)?;
            let r = shapiro_check(n, m, top, ring, budget, BOUND)?;
            note = Some(r.note.clone());
            degree_checks(&r, n, |row| format!("{} over the smaller group", row.source))
        }
    };
    Ok((out, note))
}

fn params(args: &VerifyArgs) -> BTreeMap<&'static str, String> {
    let mut p = BTreeMap::new();
    for (name, v) in
        [("n", args.n), ("m", args.m), ("i", args.i), ("k", args.k), ("j", args.j), ("maxdeg", args.maxdeg)]
    {
        if let Some(v) = v {
            p.insert(name, v.to_string());
        }
    }
    if !args.set.is_empty() {
        p.insert("set", join(&args.set));
    }
    p
}

pub fn run(args: &VerifyArgs, budget: u128) -> Result<Verified, CliError> {
    let ring = Ring::parse(&args.ring.ring, &args.ring.delta)?;
    let (checks, note) = checks(args, &ring, budget)?;
    let pass = checks.iter().all(|c| c.pass);
    let doc = VerifyDoc {
        suite: suite_name(args.suite),
        ring: ring.kind().to_string(),
        delta: ring.delta().to_string(),
        params: params(args),
        checks: &checks,
        note,
        pass,
    };
    let rows = checks
        .iter()
        .map(|c| vec![c.instance.clone(), c.expected.clone(), c.computed.clone(), c.pass.to_string()])
        .collect();
    let report = Report::new(&doc, vec!["instance", "expected", "computed", "pass"], rows, pass)?;
    let key = canonical_key(args);
    let golden = match goldens::lookup(&key) {
        None => GoldenStatus::Absent,
        Some(text) => {
            let stored: Option<Vec<Check>> = serde_json::from_str::<serde_json::Value>(text)
                .ok()
                .and_then(|v| serde_json::from_value(v.get("checks")?.clone()).ok());
            if stored.as_deref() == Some(&checks[..]) {
                GoldenStatus::Match
            } else {
                GoldenStatus::Mismatch
            }
        }
    };
    Ok(Verified { report, golden, key })
}
