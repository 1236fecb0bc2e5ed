//! Elements of `Br_n(R, delta)` and of the group algebra `RS_n`, which lives
//! inside it as the span of the permutation diagrams.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{enumerate_diagrams, BrauerDiagram, CompositionResult};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    ring: Ring,
    terms: BTreeMap<BrauerDiagram, RingElem>,
}

impl AlgebraElement {
    pub fn zero(n: usize, ring: &Ring) -> AlgebraElement {
        AlgebraElement { n, ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(n: usize, ring: &Ring) -> AlgebraElement {
        AlgebraElement::basis(BrauerDiagram::identity(n), ring)
    }

    pub fn basis(d: BrauerDiagram, ring: &Ring) -> AlgebraElement {
        AlgebraElement::monomial(d, ring.one(), ring)
    }

    pub fn monomial(d: BrauerDiagram, c: RingElem, ring: &Ring) -> AlgebraElement {
        let mut a = AlgebraElement::zero(d.n(), ring);
        a.add_term(d, c);
        a
    }

    /// Builds an element from `(diagram, coefficient)` pairs, combining
    /// repeated diagrams.
    pub fn from_terms(
        n: usize,
        ring: &Ring,
        terms: impl IntoIterator<Item = (BrauerDiagram, RingElem)>,
    ) -> Result<AlgebraElement> {
        let mut a = AlgebraElement::zero(n, ring);
        for (d, c) in terms {
            if d.n() != n {
                return Err(Error::StrandMismatch(n, d.n()));
            }
            a.add_term(d, c);
        }
        Ok(a)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &RingElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> RingElem {
        self.terms.get(d).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub(crate) fn add_term(&mut self, d: BrauerDiagram, c: RingElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(old) => {
                let s = self.ring.add(old, &c);
                if s.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&self.ring.from_int(-1)))
    }

    pub fn scale(&self, c: &RingElem) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n, &self.ring);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), self.ring.mul(c, x));
        }
        out
    }

    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.mul_with(other, |a, b| a.compose_unchecked(b))
    }

    /// Bilinear extension of a basis product given as `(diagram, loops)`,
    /// each loop contributing a factor `delta`.
    pub fn mul_with<F>(&self, other: &AlgebraElement, compose: F) -> Result<AlgebraElement>
    where
        F: Fn(&BrauerDiagram, &BrauerDiagram) -> CompositionResult,
    {
        self.check_compatible(other)?;
        let mut out = AlgebraElement::zero(self.n, &self.ring);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let r = compose(d1, d2);
                let c = self.ring.mul(&self.ring.mul(c1, c2), &self.ring.delta_pow(r.loops));
                out.add_term(r.diagram, c);
            }
        }
        Ok(out)
    }

    /// The augmentation: permutation diagrams map to 1, all others to 0.
    pub fn augmentation(&self) -> RingElem {
        self.terms
            .iter()
            .filter(|(d, _)| d.is_permutation())
            .fold(self.ring.zero(), |acc, (_, c)| self.ring.add(&acc, c))
    }

    /// Whether the element lies in `RS_n`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.keys().all(BrauerDiagram::is_permutation)
    }

    /// The inclusion `RS_n -> Br_n`.
    pub fn iota(&self) -> Result<AlgebraElement> {
        if !self.is_symmetric() {
            return Err(Error::Malformed(String::from("element is not supported on permutation diagrams")));
        }
        Ok(self.clone())
    }

    /// The projection `Br_n -> RS_n`, killing every non-permutation diagram.
    pub fn pi(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n, &self.ring);
        for (d, c) in &self.terms {
            if d.is_permutation() {
                out.add_term(d.clone(), c.clone());
            }
        }
        out
    }

    /// The image under `Br_n -> Br_N` adding straight strands.
    pub fn embed(&self, big_n: usize) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(big_n, &self.ring);
        for (d, c) in &self.terms {
            out.add_term(d.embed(big_n)?, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){d}")?;
        }
        Ok(())
    }
}

/// Basis of the left ideal `J_X`: diagrams with a right-hand arc inside `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub n: usize,
    pub x: Vec<usize>,
    pub basis: Vec<BrauerDiagram>,
}

pub(crate) fn check_subset(n: usize, x: &[usize]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for &a in x {
        if a == 0 || a > n || seen[a] {
            return Err(Error::OutOfRange(format!("{x:?} is not a subset of 1..={n}")));
        }
        seen[a] = true;
    }
    Ok(())
}

pub fn ideal_basis(n: usize, x: &[usize], bound: usize) -> Result<IdealBasis> {
    check_subset(n, x)?;
    let basis = enumerate_diagrams(n, bound)?.into_iter().filter(|d| d.has_right_arc_within(x)).collect();
    Ok(IdealBasis { n, x: x.to_vec(), basis })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationGroup {
    Symmetric,
    TemperleyLieb,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationOutcome {
    pub group: RelationGroup,
    pub family: &'static str,
    pub instances: usize,
    pub failures: Vec<(usize, usize)>,
}

impl RelationOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Range {
    Single,
    Adjacent,
    Distant,
}

/// Evaluates every generator relation of `Br_n` at every admissible index
/// pair, using `compose` for basis products.
pub fn relations_check_with<F>(n: usize, ring: &Ring, compose: F) -> Result<Vec<RelationOutcome>>
where
    F: Fn(&BrauerDiagram, &BrauerDiagram) -> CompositionResult + Copy,
{
    use RelationGroup::*;
    let s = |i: usize| BrauerDiagram::s(n, i).map(|d| AlgebraElement::basis(d, ring));
    let u = |i: usize| BrauerDiagram::u(n, i).map(|d| AlgebraElement::basis(d, ring));
    let prod = |fs: &[&AlgebraElement]| -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::one(n, ring);
        for f in fs {
            acc = acc.mul_with(f, compose)?;
        }
        Ok(acc)
    };
    let one = AlgebraElement::one(n, ring);
    let delta = ring.delta().clone();

    type Check<'a> = &'a dyn Fn(usize, usize) -> Result<bool>;
    let families: [(RelationGroup, &'static str, Range, Check); 11] = [
        (Symmetric, "S_i S_i = 1", Range::Single, &|i, _| Ok(prod(&[&s(i)?, &s(i)?])? == one)),
        (Symmetric, "S_i S_j S_i = S_j S_i S_j", Range::Adjacent, &|i, j| {
            Ok(prod(&[&s(i)?, &s(j)?, &s(i)?])? == prod(&[&s(j)?, &s(i)?, &s(j)?])?)
        }),
        (Symmetric, "S_i S_j = S_j S_i", Range::Distant, &|i, j| {
            Ok(prod(&[&s(i)?, &s(j)?])? == prod(&[&s(j)?, &s(i)?])?)
        }),
        (TemperleyLieb, "U_i U_i = delta U_i", Range::Single, &|i, _| {
            Ok(prod(&[&u(i)?, &u(i)?])? == u(i)?.scale(&delta))
        }),
        (TemperleyLieb, "U_i U_j U_i = U_i", Range::Adjacent, &|i, j| Ok(prod(&[&u(i)?, &u(j)?, &u(i)?])? == u(i)?)),
        (TemperleyLieb, "U_i U_j = U_j U_i", Range::Distant, &|i, j| {
            Ok(prod(&[&u(i)?, &u(j)?])? == prod(&[&u(j)?, &u(i)?])?)
        }),
        (Mixed, "U_i S_i = S_i U_i = U_i", Range::Single, &|i, _| {
            let a = prod(&[&u(i)?, &s(i)?])?;
            let b = prod(&[&s(i)?, &u(i)?])?;
            Ok(a == u(i)? && b == u(i)?)
        }),
        (Mixed, "U_i S_j U_i = U_i", Range::Adjacent, &|i, j| Ok(prod(&[&u(i)?, &s(j)?, &u(i)?])? == u(i)?)),
        (Mixed, "S_i S_j U_i = U_j U_i", Range::Adjacent, &|i, j| {
            Ok(prod(&[&s(i)?, &s(j)?, &u(i)?])? == prod(&[&u(j)?, &u(i)?])?)
        }),
        (Mixed, "U_i S_j S_i = U_i U_j", Range::Adjacent, &|i, j| {
            Ok(prod(&[&u(i)?, &s(j)?, &s(i)?])? == prod(&[&u(i)?, &u(j)?])?)
        }),
        (Mixed, "U_i S_j = S_j U_i", Range::Distant, &|i, j| Ok(prod(&[&u(i)?, &s(j)?])? == prod(&[&s(j)?, &u(i)?])?)),
    ];

    let mut out = Vec::new();
    for (group, family, range, check) in families {
        let mut instances = 0;
        let mut failures = Vec::new();
        for i in 1..n {
            for j in 1..n {
                let admissible = match range {
                    Range::Single => i == j,
                    Range::Adjacent => i.abs_diff(j) == 1,
                    Range::Distant => i.abs_diff(j) >= 2,
                };
                if !admissible {
                    continue;
                }
                instances += 1;
                if !check(i, j)? {
                    failures.push((i, j));
                }
            }
        }
        out.push(RelationOutcome { group, family, instances, failures });
    }
    Ok(out)
}

pub fn relations_check(n: usize, ring: &Ring) -> Result<Vec<RelationOutcome>> {
    relations_check_with(n, ring, |a, b| a.compose_unchecked(b))
}
