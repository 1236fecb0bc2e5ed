//! JSON shapes read and written by the command line.

use std::collections::BTreeMap;

use brauer_core::chain::ChainComplex;
use brauer_core::{AlgebraElement, BoxDiagram, BrauerDiagram, HomologyGroup, Ring};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub n: usize,
    pub pairs: Vec<(i32, i32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub pairs: Vec<(i32, i32)>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    pub terms: Vec<TermJson>,
    /// Loops closed off, reported when every factor is a single diagram.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loops: Option<u32>,
}

/// A box diagram: `pairs` are its arcs and `box` the endpoints joined to the box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxJson {
    pub n: usize,
    pub m: usize,
    pub pairs: Vec<(i32, i32)>,
    #[serde(rename = "box")]
    pub boxed: Vec<i32>,
}

/// Anything `mul` accepts as a factor.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Factor {
    Element(ElementJson),
    Diagram(DiagramJson),
}

impl Factor {
    pub fn n(&self) -> usize {
        match self {
            Factor::Element(e) => e.n,
            Factor::Diagram(d) => d.n,
        }
    }

    pub fn ring_spec(&self) -> (Option<&str>, Option<&str>) {
        match self {
            Factor::Element(e) => (e.ring.as_deref(), e.delta.as_deref()),
            Factor::Diagram(_) => (None, None),
        }
    }

    /// The diagram, if this factor is one diagram with coefficient one.
    pub fn single(&self) -> Result<Option<BrauerDiagram>, CliError> {
        match self {
            Factor::Diagram(d) => Ok(Some(d.to_diagram()?)),
            Factor::Element(e) if e.terms.len() == 1 && e.terms[0].coeff.trim() == "1" => {
                Ok(Some(BrauerDiagram::new(e.n, &e.terms[0].pairs)?))
            }
            Factor::Element(_) => Ok(None),
        }
    }

    pub fn to_element(&self, ring: &Ring) -> Result<AlgebraElement, CliError> {
        match self {
            Factor::Diagram(d) => Ok(AlgebraElement::basis(d.to_diagram()?, ring)),
            Factor::Element(e) => {
                let terms = e
                    .terms
                    .iter()
                    .map(|t| Ok((BrauerDiagram::new(e.n, &t.pairs)?, ring.parse_elem(&t.coeff)?)))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(AlgebraElement::from_terms(e.n, ring, terms)?)
            }
        }
    }
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<BrauerDiagram, CliError> {
        Ok(BrauerDiagram::new(self.n, &self.pairs)?)
    }
}

impl From<&BoxDiagram> for BoxJson {
    fn from(b: &BoxDiagram) -> BoxJson {
        BoxJson { n: b.n(), m: b.m(), pairs: b.pairs(), boxed: b.box_set() }
    }
}

impl BoxJson {
    pub fn to_box(&self) -> Result<BoxDiagram, CliError> {
        Ok(BoxDiagram::new(self.n, self.m, &self.pairs, &self.boxed)?)
    }
}

pub fn element_json(a: &AlgebraElement, loops: Option<u32>) -> ElementJson {
    let ring = a.ring();
    ElementJson {
        n: a.n(),
        ring: Some(ring.kind().to_string()),
        delta: Some(ring.delta().to_string()),
        terms: a.terms().map(|(d, c)| TermJson { pairs: d.pairs(), coeff: c.to_string() }).collect(),
        loops,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRow {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

impl HomologyRow {
    pub fn new(degree: i64, g: &HomologyGroup) -> HomologyRow {
        HomologyRow { degree, free_rank: g.free_rank, torsion: g.torsion.iter().map(|t| t.to_string()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn tsv(&self) -> Vec<String> {
        vec![self.degree.to_string(), self.free_rank.to_string(), self.torsion.join(",")]
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryJson {
    /// Source degree of the map.
    pub degree: i64,
    pub rows: usize,
    pub cols: usize,
    pub triplets: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexJson {
    pub ring: String,
    pub delta: String,
    pub lo: i64,
    pub hi: i64,
    pub ranks: Vec<usize>,
    pub boundaries: Vec<BoundaryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<i64, Vec<serde_json::Value>>>,
}

impl ComplexJson {
    pub fn new(c: &ChainComplex) -> ComplexJson {
        let boundaries = (c.lo() + 1..=c.hi())
            .map(|p| BoundaryJson {
                degree: p,
                rows: c.rank(p - 1),
                cols: c.rank(p),
                triplets: c.triplets(p).into_iter().map(|(r, col, v)| (r, col, v.to_string())).collect(),
            })
            .collect();
        ComplexJson {
            ring: c.ring().kind().to_string(),
            delta: c.ring().delta().to_string(),
            lo: c.lo(),
            hi: c.hi(),
            ranks: c.ranks().to_vec(),
            boundaries,
            labels: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_round_trip() {
        let json = r#"{"n": 3, "m": 1, "pairs": [[-2, -1], [1, 2]], "box": [-3]}"#;
        let b: BoxJson = serde_json::from_str(json).unwrap();
        let d = b.to_box().unwrap();
        let back = BoxJson::from(&d);
        assert_eq!(back.to_box().unwrap(), d);
        assert_eq!(back.boxed, vec![-3]);
    }

    #[test]
    fn factors_are_elements_or_diagrams() {
        let d: Factor = serde_json::from_str(r#"{"n": 1, "pairs": [[-1, 1]]}"#).unwrap();
        assert!(matches!(d, Factor::Diagram(_)));
        let e: Factor = serde_json::from_str(r#"{"n": 1, "terms": [{"pairs": [[-1, 1]], "coeff": "3"}]}"#).unwrap();
        assert!(matches!(e, Factor::Element(_)));
        assert!(e.single().unwrap().is_none());
        assert!(serde_json::from_str::<Factor>(r#"{"n": 1, "pairs": [[-1, 1]], "extra": 0}"#).is_err());
    }

    #[test]
    fn rows_drop_nothing() {
        let g = HomologyGroup::from_ints(2, &[2, 4]);
        let r = HomologyRow::new(3, &g);
        assert_eq!(r.tsv(), vec!["3", "2", "2,4"]);
        assert!(!r.is_zero());
    }
}
