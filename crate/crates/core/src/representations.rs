//! Coefficient modules: the trivial module, the induced modules
//! `Br_n ⊗_{Br_m} t` and the quotients `Br_n / J_X`.
//!
//! Convention for induced modules: the `m`-box absorbs the right-hand nodes
//! `1..=m`, and the remaining right-hand nodes `m+1..=n` are relabelled
//! `1..=n-m` ("free" nodes). Box diagrams are stored like Brauer diagrams,
//! with partner `0` meaning "joined to the box".

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{check_subset, AlgebraElement};
use crate::diagram::{enumerate_diagrams, permutations, BrauerDiagram};
use crate::error::{Error, Result};
use crate::ring::{Ring, RingElem};

pub const BOX: i32 = 0;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxDiagram {
    n: usize,
    m: usize,
    mate: Vec<i32>,
}

#[inline]
fn index(n: usize, label: i32) -> usize {
    if label < 0 {
        (label + n as i32) as usize
    } else {
        (label + n as i32 - 1) as usize
    }
}

#[inline]
fn label_at(n: usize, idx: usize) -> i32 {
    if idx < n {
        idx as i32 - n as i32
    } else {
        idx as i32 - n as i32 + 1
    }
}

impl BoxDiagram {
    /// Builds a box diagram from its arcs and the endpoints joined to the
    /// box. Free right nodes are labelled `1..=n-m`.
    pub fn new(n: usize, m: usize, pairs: &[(i32, i32)], boxed: &[i32]) -> Result<BoxDiagram> {
        if m > n {
            return Err(Error::OutOfRange(format!("box of size {m} with n={n}")));
        }
        if boxed.len() != m {
            return Err(Error::InvalidDiagram(format!("box must meet {m} endpoints, got {}", boxed.len())));
        }
        let free = (n - m) as i32;
        let ok = |x: i32| (x < 0 && -x <= n as i32) || (x > 0 && x <= free);
        let len = 2 * n - m;
        let mut mate = vec![None; len];
        let mut put = |x: i32, y: i32| -> Result<()> {
            if !ok(x) {
                return Err(Error::InvalidDiagram(format!("endpoint {x} out of range")));
            }
            let slot = &mut mate[index(n, x)];
            if slot.is_some() {
                return Err(Error::InvalidDiagram(format!("endpoint {x} repeated")));
            }
            *slot = Some(y);
            Ok(())
        };
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::InvalidDiagram(format!("endpoint {a} paired with itself")));
            }
            put(a, b)?;
            put(b, a)?;
        }
        for &x in boxed {
            put(x, BOX)?;
        }
        let mate: Option<Vec<i32>> = mate.into_iter().collect();
        let mate = mate.ok_or_else(|| Error::InvalidDiagram(format!("uncovered endpoint")))?;
        Ok(BoxDiagram { n, m, mate })
    }

    /// The generator `1 ⊗ 1`: the image of the identity diagram.
    pub fn unit(n: usize, m: usize) -> BoxDiagram {
        box_project(&BrauerDiagram::identity(n), m).expect("identity has no right arcs")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn free(&self) -> usize {
        self.n - self.m
    }

    /// Partner of an endpoint; [`BOX`] when joined to the box.
    #[inline]
    pub fn partner(&self, label: i32) -> i32 {
        self.mate[index(self.n, label)]
    }

    pub fn pairs(&self) -> Vec<(i32, i32)> {
        (0..self.mate.len()).map(|i| (label_at(self.n, i), self.mate[i])).filter(|&(a, b)| b != BOX && a < b).collect()
    }

    pub fn box_set(&self) -> Vec<i32> {
        (0..self.mate.len()).filter(|&i| self.mate[i] == BOX).map(|i| label_at(self.n, i)).collect()
    }

    pub fn left_pairs(&self) -> usize {
        (1..=self.n as i32).filter(|&j| self.partner(-j) < -j).count()
    }

    /// Number of right-to-right arcs between free nodes.
    pub fn free_right_pairs(&self) -> usize {
        (1..=self.free() as i32).filter(|&j| self.partner(j) > j).count()
    }

    /// A Brauer diagram projecting onto `self`: box endpoints are attached,
    /// in label order, to right nodes `1..=m`.
    pub fn lift(&self) -> BrauerDiagram {
        let n = self.n;
        let m = self.m as i32;
        let mut slot = 0;
        let mut target = vec![0i32; self.mate.len()];
        for (i, &p) in self.mate.iter().enumerate() {
            if p == BOX {
                slot += 1;
                target[i] = slot;
            }
        }
        let shift = |x: i32| if x > 0 { x + m } else { x };
        let mut mate = vec![0i32; 2 * n];
        for i in 0..self.mate.len() {
            let a = label_at(n, i);
            let b = if self.mate[i] == BOX { target[i] } else { shift(self.mate[i]) };
            let a = shift(a);
            mate[index(n, a)] = b;
            if self.mate[i] == BOX {
                mate[index(n, b)] = a;
            }
        }
        BrauerDiagram::from_mates(n, mate)
    }

    /// Direct description of the face map `d_i`: free node `i` (0-based) is
    /// absorbed into the box, together with whatever it was joined to.
    /// Returns `None` when an arc with both ends at the box results.
    pub fn absorb(&self, i: usize) -> Option<BoxDiagram> {
        let n = self.n;
        let free = self.free() as i32;
        let node = i as i32 + 1;
        assert!(node <= free, "free node {i} out of range");
        let partner = self.partner(node);
        if partner == BOX {
            return None;
        }
        let relabel = |x: i32| -> i32 {
            if x < node {
                x
            } else {
                x - 1
            }
        };
        let len = 2 * n - self.m - 1;
        let mut mate = vec![0i32; len];
        for idx in 0..self.mate.len() {
            let a = label_at(n, idx);
            if a == node {
                continue;
            }
            let b = if a == partner { BOX } else { relabel(self.mate[idx]) };
            mate[index(n, relabel(a))] = b;
        }
        Some(BoxDiagram { n, m: self.m + 1, mate })
    }
}

impl fmt::Display for BoxDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        write!(f, "|box:")?;
        for (k, x) in self.box_set().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Image of a diagram in `Br_n ⊗_{Br_m} t`; `None` for zero.
pub fn box_project(d: &BrauerDiagram, m: usize) -> Option<BoxDiagram> {
    let n = d.n();
    assert!(m <= n, "box of size {m} with n={n}");
    let mi = m as i32;
    let mut mate = vec![0i32; 2 * n - m];
    let map = |x: i32| -> i32 {
        if x < 0 {
            x
        } else if x <= mi {
            BOX
        } else {
            x - mi
        }
    };
    for i in 1..=n as i32 {
        let p = d.partner(-i);
        mate[index(n, -i)] = map(p);
    }
    for r in 1..=n as i32 {
        let p = d.partner(r);
        if r <= mi {
            if p > 0 && p <= mi {
                return None;
            }
        } else {
            mate[index(n, r - mi)] = map(p);
        }
    }
    Some(BoxDiagram { n, m, mate })
}

/// Number of box diagrams, `C(2n-m, m) (2n-2m-1)!!`.
pub fn induced_rank(n: usize, m: usize) -> u128 {
    let ends = (2 * n - m) as u128;
    let mut binom: u128 = 1;
    for k in 0..m as u128 {
        binom = binom * (ends - k) / (k + 1);
    }
    let df: u128 = (1..=(n - m) as u128).map(|k| 2 * k - 1).product();
    binom * df
}

/// The box-diagram basis of `Br_n ⊗_{Br_m} t` in canonical order.
pub fn induced_basis(n: usize, m: usize, bound: usize) -> Result<Vec<BoxDiagram>> {
    if m > n {
        return Err(Error::OutOfRange(format!("box of size {m} with n={n}")));
    }
    if n > bound {
        return Err(Error::BoundExceeded(format!("induced basis at n={n} (bound {bound})")));
    }
    let len = 2 * n - m;
    let mut out = Vec::new();
    let mut mate = vec![None; len];
    fill_boxes(n, m, m, &mut mate, &mut out);
    out.sort();
    Ok(out)
}

fn fill_boxes(n: usize, m: usize, slots: usize, mate: &mut [Option<i32>], out: &mut Vec<BoxDiagram>) {
    let Some(first) = mate.iter().position(Option::is_none) else {
        if slots == 0 {
            out.push(BoxDiagram { n, m, mate: mate.iter().map(|x| x.unwrap()).collect() });
        }
        return;
    };
    if slots > 0 {
        mate[first] = Some(BOX);
        fill_boxes(n, m, slots - 1, mate, out);
        mate[first] = None;
    }
    for second in first + 1..mate.len() {
        if mate[second].is_some() {
            continue;
        }
        mate[first] = Some(label_at(n, second));
        mate[second] = Some(label_at(n, first));
        fill_boxes(n, m, slots, mate, out);
        mate[first] = None;
        mate[second] = None;
    }
}

/// The action of a single diagram on a box diagram: the product and the
/// number of loops formed, or `None` when the product vanishes.
pub fn act_diagram(d: &BrauerDiagram, v: &BoxDiagram) -> Option<(BoxDiagram, u32)> {
    let r = d.compose_unchecked(&v.lift());
    box_project(&r.diagram, v.m).map(|b| (b, r.loops))
}

/// An element of `Br_n ⊗_{Br_m} t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    n: usize,
    m: usize,
    ring: Ring,
    terms: BTreeMap<BoxDiagram, RingElem>,
}

impl ModuleElement {
    pub fn zero(n: usize, m: usize, ring: &Ring) -> ModuleElement {
        ModuleElement { n, m, ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn basis(b: BoxDiagram, ring: &Ring) -> ModuleElement {
        let mut v = ModuleElement::zero(b.n, b.m, ring);
        v.add_term(b, ring.one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BoxDiagram, &RingElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: &BoxDiagram) -> RingElem {
        self.terms.get(b).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add_term(&mut self, b: BoxDiagram, c: RingElem) {
        debug_assert!(b.n == self.n && b.m == self.m);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(old) => {
                let s = self.ring.add(old, &c);
                if s.is_zero() {
                    self.terms.remove(&b);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        if (self.n, self.m) != (other.n, other.m) {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RingElem) -> ModuleElement {
        let mut out = ModuleElement::zero(self.n, self.m, &self.ring);
        for (b, x) in &self.terms {
            out.add_term(b.clone(), self.ring.mul(c, x));
        }
        out
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){b}")?;
        }
        Ok(())
    }
}

/// Image of an algebra element in `Br_n ⊗_{Br_m} t`.
pub fn project_element(a: &AlgebraElement, m: usize) -> Result<ModuleElement> {
    if m > a.n() {
        return Err(Error::OutOfRange(format!("box of size {m} with n={}", a.n())));
    }
    let mut out = ModuleElement::zero(a.n(), m, a.ring());
    for (d, c) in a.terms() {
        if let Some(b) = box_project(d, m) {
            out.add_term(b, c.clone());
        }
    }
    Ok(out)
}

/// The left action of `Br_n` on `Br_n ⊗_{Br_m} t`.
pub fn induced_act(a: &AlgebraElement, v: &ModuleElement) -> Result<ModuleElement> {
    if a.n() != v.n {
        return Err(Error::StrandMismatch(a.n(), v.n));
    }
    if a.ring() != &v.ring {
        return Err(Error::RingMismatch);
    }
    let ring = &v.ring;
    let mut out = ModuleElement::zero(v.n, v.m, ring);
    for (b, cb) in &v.terms {
        let lifted = b.lift();
        for (d, cd) in a.terms() {
            let r = d.compose_unchecked(&lifted);
            if let Some(p) = box_project(&r.diagram, v.m) {
                let c = ring.mul(&ring.mul(cd, cb), &ring.delta_pow(r.loops));
                out.add_term(p, c);
            }
        }
    }
    Ok(out)
}

/// Basis of `Br_n / J_X`: diagrams with no right-hand arc inside `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    pub n: usize,
    pub x: Vec<usize>,
    pub basis: Vec<BrauerDiagram>,
}

pub fn quotient_basis(n: usize, x: &[usize], bound: usize) -> Result<QuotientBasis> {
    check_subset(n, x)?;
    let basis = enumerate_diagrams(n, bound)?.into_iter().filter(|d| !d.has_right_arc_within(x)).collect();
    Ok(QuotientBasis { n, x: x.to_vec(), basis })
}

/// Drops the terms lying in `J_X`, giving the canonical representative of
/// the class in `Br_n / J_X`.
pub fn reduce_mod_ideal(a: &AlgebraElement, x: &[usize]) -> AlgebraElement {
    AlgebraElement::from_terms(
        a.n(),
        a.ring(),
        a.terms().filter(|(d, _)| !d.has_right_arc_within(x)).map(|(d, c)| (d.clone(), c.clone())),
    )
    .expect("terms share n")
}

/// Left action on `Br_n / J_X`.
pub fn quotient_act(a: &AlgebraElement, v: &AlgebraElement, x: &[usize]) -> Result<AlgebraElement> {
    Ok(reduce_mod_ideal(&a.mul(v)?, x))
}

/// Right action of `w ∈ S_m` (one-line notation) on `Br_n / J_m`.
pub fn quotient_right_act(v: &AlgebraElement, w: &[usize]) -> Result<AlgebraElement> {
    let n = v.n();
    let m = w.len();
    if m > n {
        return Err(Error::OutOfRange(format!("S_{m} acting on Br_{n}")));
    }
    let full: Vec<usize> = w.iter().copied().chain(m + 1..=n).collect();
    let x: Vec<usize> = (1..=m).collect();
    let g = AlgebraElement::basis(BrauerDiagram::permutation(&full)?, v.ring());
    Ok(reduce_mod_ideal(&v.mul(&g)?, &x))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessReport {
    pub n: usize,
    pub m: usize,
    pub basis_size: usize,
    pub orbit_count: usize,
    pub orbit_sizes: BTreeSet<usize>,
    pub free: bool,
}

/// Orbits of `S_m` acting on the right of the quotient basis of `Br_n / J_m`,
/// each given by its smallest member.
fn orbits(n: usize, m: usize, bound: usize) -> Result<(QuotientBasis, BTreeMap<BrauerDiagram, BrauerDiagram>)> {
    let x: Vec<usize> = (1..=m).collect();
    let q = quotient_basis(n, &x, bound)?;
    let perms: Vec<Vec<usize>> =
        permutations(m).into_iter().map(|w| w.into_iter().chain(m + 1..=n).collect()).collect();
    let mut rep = BTreeMap::new();
    for b in &q.basis {
        if rep.contains_key(b) {
            continue;
        }
        let orbit: BTreeSet<BrauerDiagram> = perms.iter().map(|w| b.relabel_right(w)).collect();
        let first = orbit.first().unwrap().clone();
        for o in orbit {
            rep.insert(o, first.clone());
        }
    }
    Ok((q, rep))
}

/// Checks that `S_m` permutes the quotient basis of `Br_n / J_m` freely.
pub fn sm_freeness_check(n: usize, m: usize, bound: usize) -> Result<FreenessReport> {
    if m > n {
        return Err(Error::OutOfRange(format!("m={m} > n={n}")));
    }
    let (q, rep) = orbits(n, m, bound)?;
    let mut sizes: BTreeMap<&BrauerDiagram, usize> = BTreeMap::new();
    for r in rep.values() {
        *sizes.entry(r).or_default() += 1;
    }
    let orbit_sizes: BTreeSet<usize> = sizes.values().copied().collect();
    let mfact = permutations(m).len();
    let free = orbit_sizes.iter().all(|&s| s == mfact) && sizes.len() * mfact == q.basis.len();
    Ok(FreenessReport { n, m, basis_size: q.basis.len(), orbit_count: sizes.len(), orbit_sizes, free })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorIsoReport {
    pub n: usize,
    pub m: usize,
    pub orbit_count: usize,
    pub induced_rank: usize,
    pub bijective: bool,
    pub equivariant: bool,
}

impl TensorIsoReport {
    pub fn passed(&self) -> bool {
        self.bijective && self.equivariant
    }
}

/// Checks that `(b + J_m) ⊗ 1 ↦ b ⊗ 1` identifies `Br_n/J_m ⊗_{RS_m} t` with
/// `Br_n ⊗_{Br_m} t` as left `Br_n`-modules.
pub fn tensor_iso_check(n: usize, m: usize, ring: &Ring, bound: usize) -> Result<TensorIsoReport> {
    if m > n {
        return Err(Error::OutOfRange(format!("m={m} > n={n}")));
    }
    let (q, rep) = orbits(n, m, bound)?;
    let induced = induced_basis(n, m, bound)?;

    // The map on bases must be constant on orbits and a bijection from
    // orbits to box diagrams.
    let mut image: BTreeMap<BrauerDiagram, BoxDiagram> = BTreeMap::new();
    let mut constant = true;
    for b in &q.basis {
        let Some(p) = box_project(b, m) else {
            constant = false;
            continue;
        };
        match image.get(&rep[b]) {
            Some(prev) if *prev != p => constant = false,
            Some(_) => {}
            None => {
                image.insert(rep[b].clone(), p);
            }
        }
    }
    let hit: BTreeSet<&BoxDiagram> = image.values().collect();
    let bijective = constant && hit.len() == image.len() && hit.len() == induced.len();

    // Class of a quotient element in the coinvariants, pushed to box diagrams.
    let to_box = |a: &AlgebraElement| -> ModuleElement {
        let mut out = ModuleElement::zero(n, m, ring);
        for (d, c) in a.terms() {
            out.add_term(image[&rep[d]].clone(), c.clone());
        }
        out
    };
    let x: Vec<usize> = (1..=m).collect();
    let mut generators = Vec::new();
    for i in 1..n {
        generators.push(BrauerDiagram::s(n, i)?);
        generators.push(BrauerDiagram::u(n, i)?);
    }
    let mut equivariant = bijective;
    if bijective {
        'outer: for g in &generators {
            let g = AlgebraElement::basis(g.clone(), ring);
            for b in &q.basis {
                let b = AlgebraElement::basis(b.clone(), ring);
                let lhs = to_box(&quotient_act(&g, &b, &x)?);
                let rhs = induced_act(&g, &to_box(&b))?;
                if lhs != rhs {
                    equivariant = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(TensorIsoReport { n, m, orbit_count: image.len(), induced_rank: induced.len(), bijective, equivariant })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::double_factorial_odd;

    fn bd(n: usize, m: usize, pairs: &[(i32, i32)], boxed: &[i32]) -> BoxDiagram {
        BoxDiagram::new(n, m, pairs, boxed).unwrap()
    }

    #[test]
    fn basis_counts() {
        assert_eq!(induced_basis(3, 3, 6).unwrap().len(), 1);
        assert_eq!(induced_basis(2, 1, 6).unwrap().len(), 3);
        assert_eq!(induced_basis(3, 2, 6).unwrap().len(), 6);
        for n in 0..=5 {
            assert_eq!(induced_basis(n, 0, 6).unwrap().len() as u64, double_factorial_odd(n));
            for m in 0..=n {
                let b = induced_basis(n, m, 6).unwrap();
                assert_eq!(b.len() as u128, induced_rank(n, m));
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert!(induced_basis(2, 3, 6).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(BoxDiagram::new(2, 1, &[(-1, -2)], &[1]).is_ok());
        assert!(BoxDiagram::new(2, 1, &[(-1, -2)], &[]).is_err());
        assert!(BoxDiagram::new(2, 1, &[(-1, 1)], &[-1]).is_err());
        assert!(BoxDiagram::new(2, 1, &[(-1, 2)], &[-2]).is_err());
    }

    #[test]
    fn lift_then_project() {
        for n in 0..=4 {
            for m in 0..=n {
                for b in induced_basis(n, m, 6).unwrap() {
                    assert_eq!(box_project(&b.lift(), m).unwrap(), b);
                }
            }
        }
    }

    #[test]
    fn projections() {
        for m in 0..=3 {
            let u = box_project(&BrauerDiagram::identity(3), m).unwrap();
            assert_eq!(u, BoxDiagram::unit(3, m));
        }
        assert_eq!(box_project(&BrauerDiagram::u(3, 1).unwrap(), 2), None);
        let s = box_project(&BrauerDiagram::s(2, 1).unwrap(), 1).unwrap();
        assert_eq!(s, bd(2, 1, &[(-1, 1)], &[-2]));
    }

    #[test]
    fn act_by_cup_on_small_module() {
        let r = Ring::integers(5);
        let v = bd(2, 1, &[(-2, 1)], &[-1]);
        let u = AlgebraElement::basis(BrauerDiagram::u(2, 1).unwrap(), &r);
        let out = induced_act(&u, &ModuleElement::basis(v.clone(), &r)).unwrap();
        // pasting: -1,-2 capped; the box and the free node get joined
        assert_eq!(out, ModuleElement::basis(bd(2, 1, &[(-1, -2)], &[1]), &r));
        let s = AlgebraElement::basis(BrauerDiagram::s(2, 1).unwrap(), &r);
        let out = induced_act(&s, &ModuleElement::basis(v, &r)).unwrap();
        assert_eq!(out, ModuleElement::basis(bd(2, 1, &[(-1, 1)], &[-2]), &r));
        // a box-to-free arc closes into a loop
        let w = bd(2, 1, &[(-1, -2)], &[1]);
        let out = induced_act(&u, &ModuleElement::basis(w, &r)).unwrap();
        assert_eq!(out, ModuleElement::basis(bd(2, 1, &[(-1, -2)], &[1]), &r).scale(&r.from_int(5)));
    }

    #[test]
    fn identity_acts_trivially() {
        let r = Ring::integers(0);
        let one = AlgebraElement::one(3, &r);
        for b in induced_basis(3, 2, 6).unwrap() {
            let v = ModuleElement::basis(b, &r);
            assert_eq!(induced_act(&one, &v).unwrap(), v);
        }
    }

    #[test]
    fn action_is_associative() {
        let r = Ring::integers(3);
        for n in 1..=4 {
            let mut gens = Vec::new();
            for i in 1..n {
                gens.push(AlgebraElement::basis(BrauerDiagram::s(n, i).unwrap(), &r));
                gens.push(AlgebraElement::basis(BrauerDiagram::u(n, i).unwrap(), &r));
            }
            for m in 0..=n {
                for b in induced_basis(n, m, 6).unwrap() {
                    let v = ModuleElement::basis(b, &r);
                    for g in &gens {
                        for h in &gens {
                            let lhs = induced_act(&g.mul(h).unwrap(), &v).unwrap();
                            let rhs = induced_act(g, &induced_act(h, &v).unwrap()).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projection_ignores_box_permutations() {
        for n in 1..=4 {
            for m in 0..=n {
                let ws: Vec<Vec<usize>> =
                    permutations(m).into_iter().map(|w| w.into_iter().chain(m + 1..=n).collect()).collect();
                for d in enumerate_diagrams(n, 6).unwrap() {
                    for w in &ws {
                        assert_eq!(box_project(&d.relabel_right(w), m), box_project(&d, m));
                    }
                }
            }
        }
    }

    #[test]
    fn face_examples() {
        // n=5, p=2: box of size 2 over three free nodes
        let src = bd(5, 2, &[(-1, -4), (-3, 1), (2, 3)], &[-2, -5]);
        let top = bd(5, 3, &[(-1, -4), (-3, 1)], &[-2, -5, 2]);
        assert_eq!(src.absorb(2).unwrap(), top);
        assert_eq!(src.absorb(1).unwrap(), top);
        assert_eq!(src.absorb(0).unwrap(), bd(5, 3, &[(-1, -4), (1, 2)], &[-2, -3, -5]));
        let other = bd(5, 2, &[(-1, -4), (-3, 2), (-5, 3)], &[-2, 1]);
        assert_eq!(other.absorb(0), None);
    }

    #[test]
    fn quotients() {
        let q = quotient_basis(3, &[1, 2, 3], 6).unwrap();
        assert_eq!(q.basis.len(), 6);
        assert!(q.basis.iter().all(BrauerDiagram::is_permutation));
        let r = Ring::integers(0);
        let u = AlgebraElement::basis(BrauerDiagram::u(2, 1).unwrap(), &r);
        assert!(quotient_act(&u, &AlgebraElement::one(2, &r), &[1, 2]).unwrap().is_zero());
        let j = crate::algebra::ideal_basis(3, &[1, 2], 6).unwrap();
        assert_eq!(quotient_basis(3, &[1, 2], 6).unwrap().basis.len(), 15 - j.basis.len());
    }

    #[test]
    fn quotient_action_well_defined() {
        let r = Ring::integers(2);
        let x = [1, 2];
        let all = enumerate_diagrams(3, 6).unwrap();
        let j = crate::algebra::ideal_basis(3, &x, 6).unwrap();
        for a in &all {
            let a = AlgebraElement::basis(a.clone(), &r);
            for b in &all {
                let b = AlgebraElement::basis(b.clone(), &r);
                let base = quotient_act(&a, &b, &x).unwrap();
                for k in &j.basis {
                    let shifted = b.add(&AlgebraElement::basis(k.clone(), &r)).unwrap();
                    assert_eq!(quotient_act(&a, &shifted, &x).unwrap(), base);
                }
            }
        }
        let one = AlgebraElement::one(3, &r);
        let v = quotient_right_act(&one, &[2, 1]).unwrap();
        assert_eq!(v, AlgebraElement::basis(BrauerDiagram::s(3, 1).unwrap(), &r));
    }

    #[test]
    fn freeness() {
        let f = sm_freeness_check(2, 2, 6).unwrap();
        assert_eq!((f.basis_size, f.orbit_count, f.free), (2, 1, true));
        assert_eq!(f.orbit_sizes.into_iter().collect::<Vec<_>>(), [2]);
        assert!(sm_freeness_check(1, 1, 6).unwrap().free);
        let f = sm_freeness_check(3, 2, 6).unwrap();
        assert!(f.free);
        assert_eq!(f.orbit_sizes.into_iter().collect::<Vec<_>>(), [2]);
        for n in 0..=4 {
            for m in 0..=n {
                let f = sm_freeness_check(n, m, 6).unwrap();
                assert!(f.free);
                assert_eq!(f.orbit_count, induced_basis(n, m, 6).unwrap().len());
            }
        }
    }

    #[test]
    fn tensor_iso() {
        for r in [Ring::integers(0), Ring::integers(3)] {
            let t = tensor_iso_check(2, 1, &r, 6).unwrap();
            assert_eq!((t.orbit_count, t.induced_rank), (3, 3));
            assert!(t.passed());
            let t = tensor_iso_check(3, 3, &r, 6).unwrap();
            assert_eq!((t.orbit_count, t.induced_rank), (1, 1));
            assert!(t.passed());
            let t = tensor_iso_check(3, 2, &r, 6).unwrap();
            assert_eq!(t.induced_rank, 6);
            assert!(t.passed());
            for m in 0..=4 {
                assert!(tensor_iso_check(4, m, &r, 6).unwrap().passed());
            }
        }
    }
}
