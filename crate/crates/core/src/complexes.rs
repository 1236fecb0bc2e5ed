//! Complexes built from box diagrams, injective words with separators, and
//! quotient modules `Br_n / J_X`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::AlgebraElement;
use crate::chain::{ChainComplex, MatrixBuilder};
use crate::diagram::{double_factorial_odd, BrauerDiagram};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::representations::{box_project, induced_basis, quotient_basis, BoxDiagram, BOX};
use crate::ring::{Ring, RingKind};

/// Largest `|X| + s` accepted by [`build_w`].
pub const DEFAULT_WORD_BOUND: usize = 10;

/// `S_{m+i} ⋯ S_{m+1}` as one permutation diagram.
fn face_shuffle(n: usize, m: usize, i: usize) -> BrauerDiagram {
    let mut acc = BrauerDiagram::identity(n);
    for t in (1..=i).rev() {
        let s = BrauerDiagram::s(n, m + t).expect("generator index in range");
        acc = acc.compose_unchecked(&s).diagram;
    }
    acc
}

fn face_image(v: &BoxDiagram, shuffle: &BrauerDiagram) -> Option<(BoxDiagram, u32)> {
    let r = v.lift().compose_unchecked(shuffle);
    box_project(&r.diagram, v.m() + 1).map(|b| (b, r.loops))
}

/// Matrix of the face map `d_i^p` from `Br_n ⊗_{Br_{n-p-1}} t` to
/// `Br_n ⊗_{Br_{n-p}} t`, computed by right multiplication and projection.
pub fn face_map(n: usize, p: usize, i: usize, ring: &Ring, bound: usize) -> Result<SparseMatrix<BigRational>> {
    if p >= n || i > p {
        return Err(Error::OutOfRange(format!("face d_{i}^{p} with n={n}")));
    }
    let m = n - p - 1;
    let src = induced_basis(n, m, bound)?;
    let tgt = induced_basis(n, m + 1, bound)?;
    let work = ring.working();
    let shuffle = face_shuffle(n, m, i);
    let mut b = MatrixBuilder::new(tgt.len(), src.len());
    for (c, v) in src.iter().enumerate() {
        if let Some((img, loops)) = face_image(v, &shuffle) {
            let r = tgt.binary_search(&img).expect("projection lands in the basis");
            b.push(r, c, work.delta_pow(loops).as_rational().clone());
        }
    }
    b.build(&work)
}

/// A complex whose basis in each degree is a list of box diagrams.
#[derive(Debug, Clone)]
pub struct BoxComplex {
    pub n: usize,
    /// The left-to-left count, for a summand of the splitting.
    pub k: Option<usize>,
    pub complex: ChainComplex,
    /// `bases[p + 1]` is the basis in degree `p`.
    pub bases: Vec<Vec<BoxDiagram>>,
}

impl BoxComplex {
    pub fn basis(&self, p: i64) -> &[BoxDiagram] {
        &self.bases[(p + 1) as usize]
    }

    fn select<F: Fn(&BoxDiagram) -> bool>(&self, keep: F) -> Vec<Vec<usize>> {
        self.bases.iter().map(|b| (0..b.len()).filter(|&i| keep(&b[i])).collect()).collect()
    }

    fn restrict(&self, keep: &[Vec<usize>], k: Option<usize>) -> Result<BoxComplex> {
        let complex = self.complex.restrict(keep)?;
        let bases = keep.iter().zip(&self.bases).map(|(idx, b)| idx.iter().map(|&i| b[i].clone()).collect()).collect();
        Ok(BoxComplex { n: self.n, k, complex, bases })
    }
}

fn box_labels(bases: &[Vec<BoxDiagram>]) -> Vec<Vec<String>> {
    bases.iter().map(|b| b.iter().map(ToString::to_string).collect()).collect()
}

/// The complex `C_n` in degrees `-1..=n-1`, with boundary the alternating
/// sum of face maps.
pub fn build_cn(n: usize, ring: &Ring, bound: usize) -> Result<BoxComplex> {
    if n == 0 {
        return Err(Error::OutOfRange(String::from("C_n needs n >= 1")));
    }
    if n > bound {
        return Err(Error::BoundExceeded(format!("C_{n} (bound {bound})")));
    }
    let work = ring.working();
    let bases: Vec<Vec<BoxDiagram>> = (0..=n).map(|q| induced_basis(n, n - q, bound)).collect::<Result<_>>()?;
    let mut boundaries = Vec::new();
    for p in 0..n {
        let (tgt, src) = (&bases[p], &bases[p + 1]);
        let m = n - p - 1;
        let shuffles: Vec<BrauerDiagram> = (0..=p).map(|i| face_shuffle(n, m, i)).collect();
        let mut b = MatrixBuilder::new(tgt.len(), src.len());
        for (c, v) in src.iter().enumerate() {
            for (i, sh) in shuffles.iter().enumerate() {
                if let Some((img, loops)) = face_image(v, sh) {
                    let r = tgt.binary_search(&img).expect("projection lands in the basis");
                    let mut x = work.delta_pow(loops).as_rational().clone();
                    if i % 2 == 1 {
                        x = -x;
                    }
                    b.push(r, c, x);
                }
            }
        }
        boundaries.push(b.build(&work)?);
    }
    let ranks = bases.iter().map(Vec::len).collect();
    let complex = ChainComplex::new(ring, -1, ranks, boundaries)?.with_labels(box_labels(&bases))?;
    Ok(BoxComplex { n, k: None, complex, bases })
}

/// Splits `C_n` by the number of left-to-left arcs.
pub fn split_cn(c: &BoxComplex) -> Result<Vec<BoxComplex>> {
    (0..=c.n / 2)
        .map(|k| {
            let keep = c.select(|b| b.left_pairs() == k);
            if !c.complex.is_subcomplex(&keep) {
                return Err(Error::Malformed(format!("boundary leaves the summand with {k} left arcs")));
            }
            c.restrict(&keep, Some(k))
        })
        .collect()
}

/// The filtration stage `F_j` of a summand of the splitting (basis vectors
/// with at most `j` arcs between free right nodes) and the quotient
/// `F_j / F_{j-1}`.
pub fn filter_cnk(part: &BoxComplex, j: usize) -> Result<(BoxComplex, BoxComplex)> {
    let k = part.k.ok_or_else(|| Error::Malformed(String::from("filtration needs a summand of the splitting")))?;
    if j > k {
        return Err(Error::OutOfRange(format!("filtration index {j} exceeds k={k}")));
    }
    let keep = part.select(|b| b.free_right_pairs() <= j);
    if !part.complex.is_subcomplex(&keep) {
        return Err(Error::Malformed(format!("F_{j} is not closed under the boundary")));
    }
    let sub = part.restrict(&keep, Some(k))?;
    let top = part.select(|b| b.free_right_pairs() == j);
    let quotient = part.restrict(&top, Some(k))?;
    Ok((sub, quotient))
}

/// A letter of a word: a label from `X` or the separator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Sep,
    X(usize),
}

/// An injective word with separators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SepWord {
    letters: Vec<Letter>,
}

impl SepWord {
    pub fn new(letters: Vec<Letter>) -> Result<SepWord> {
        let mut seen = BTreeSet::new();
        for l in &letters {
            if let Letter::X(a) = l {
                if !seen.insert(*a) {
                    return Err(Error::Malformed(format!("letter {a} repeated")));
                }
            }
        }
        Ok(SepWord { letters })
    }

    /// Reads `|` as the separator and each digit `1..=9` as a label.
    pub fn parse(s: &str) -> Result<SepWord> {
        let letters = s
            .chars()
            .map(|ch| match ch {
                '|' => Ok(Letter::Sep),
                '1'..='9' => Ok(Letter::X(ch as usize - '0' as usize)),
                _ => Err(Error::Malformed(format!("unexpected character {ch:?} in word"))),
            })
            .collect::<Result<_>>()?;
        SepWord::new(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn separators(&self) -> usize {
        self.letters.iter().filter(|l| **l == Letter::Sep).count()
    }

    pub fn degree(&self) -> i64 {
        (self.letters.len() - self.separators()) as i64 - 1
    }

    /// Signed deletions of the non-separator letters; the sign is given by
    /// the position among all letters.
    pub fn boundary(&self) -> Vec<(i32, SepWord)> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| **l != Letter::Sep)
            .map(|(pos, _)| {
                let mut letters = self.letters.clone();
                letters.remove(pos);
                (if pos % 2 == 0 { 1 } else { -1 }, SepWord { letters })
            })
            .collect()
    }
}

impl fmt::Display for SepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            match l {
                Letter::Sep => write!(f, "|")?,
                Letter::X(a) => write!(f, "{a}")?,
            }
        }
        Ok(())
    }
}

/// The complex of injective words on `x` with `s` separators.
#[derive(Debug, Clone)]
pub struct WordComplex {
    pub x: Vec<usize>,
    pub s: usize,
    pub complex: ChainComplex,
    /// `bases[p + 1]` is the basis in degree `p`.
    pub bases: Vec<Vec<SepWord>>,
}

fn injective_sequences(x: &[usize], len: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for i in 0..x.len() {
        if !used[i] {
            used[i] = true;
            cur.push(x[i]);
            injective_sequences(x, len, cur, used, out);
            cur.pop();
            used[i] = false;
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn words(x: &[usize], q: usize, s: usize) -> Vec<SepWord> {
    let mut seqs = Vec::new();
    injective_sequences(x, q, &mut Vec::new(), &mut vec![false; x.len()], &mut seqs);
    let slots = combinations(q + s, s);
    let mut out = Vec::new();
    for seq in &seqs {
        for sep in &slots {
            let mut letters = Vec::with_capacity(q + s);
            let mut it = seq.iter();
            let mut sp = sep.iter().peekable();
            for pos in 0..q + s {
                if sp.peek() == Some(&&pos) {
                    sp.next();
                    letters.push(Letter::Sep);
                } else {
                    letters.push(Letter::X(*it.next().unwrap()));
                }
            }
            out.push(SepWord { letters });
        }
    }
    out.sort();
    out
}

/// The complex `W_X^{(s)}`, in degrees `-1..=|X|-1`.
pub fn build_w(x: &[usize], s: usize, ring: &Ring, bound: usize) -> Result<WordComplex> {
    let mut xs = x.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.len() != x.len() || xs.contains(&0) {
        return Err(Error::Malformed(String::from("labels must be distinct and positive")));
    }
    if xs.len() + s > bound {
        return Err(Error::BoundExceeded(format!("words with |X|+s = {} (bound {bound})", xs.len() + s)));
    }
    let work = ring.working();
    let bases: Vec<Vec<SepWord>> = (0..=xs.len()).map(|q| words(&xs, q, s)).collect();
    let mut boundaries = Vec::new();
    for q in 1..bases.len() {
        let (tgt, src) = (&bases[q - 1], &bases[q]);
        let mut b = MatrixBuilder::new(tgt.len(), src.len());
        for (c, w) in src.iter().enumerate() {
            for (sign, face) in w.boundary() {
                let r = tgt.binary_search(&face).expect("face is a word");
                b.push(r, c, BigRational::from_integer(sign.into()));
            }
        }
        boundaries.push(b.build(&work)?);
    }
    let ranks = bases.iter().map(Vec::len).collect();
    let labels = bases.iter().map(|b| b.iter().map(ToString::to_string).collect()).collect();
    let complex = ChainComplex::new(ring, -1, ranks, boundaries)?.with_labels(labels)?;
    Ok(WordComplex { x: xs, s, complex, bases })
}

/// An ordered set with some elements paired off, up to isomorphism:
/// `pairs` lists `(position, mate)` with `position < mate`, `single` the
/// unpaired positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairingCode {
    pub size: usize,
    pub pairs: Vec<(usize, usize)>,
    pub single: Vec<usize>,
}

/// The data `(X, P, Y, a)` attached to a box diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordTuple {
    /// Left nodes joined to the right side.
    pub x: Vec<usize>,
    /// Left-to-left arcs.
    pub p: Vec<(usize, usize)>,
    pub y: PairingCode,
    pub word: SepWord,
}

impl WordTuple {
    pub fn k(&self) -> usize {
        self.p.len()
    }

    pub fn j(&self) -> usize {
        self.y.pairs.len()
    }

    fn with_word(&self, word: SepWord) -> WordTuple {
        WordTuple { x: self.x.clone(), p: self.p.clone(), y: self.y.clone(), word }
    }
}

/// Reads off the word tuple of a box diagram: free nodes in order give the
/// letters, a free node joined to a left node `-a` contributing `a` and any
/// other free node contributing a separator.
pub fn phi(b: &BoxDiagram) -> WordTuple {
    let n = b.n() as i32;
    let x = (1..=n).filter(|&a| b.partner(-a) >= 0).map(|a| a as usize).collect();
    let p = (1..=n)
        .filter_map(|a| {
            let q = b.partner(-a);
            (q < 0 && -q > a).then_some((a as usize, (-q) as usize))
        })
        .collect();
    let mut letters = Vec::new();
    let mut sep_index = BTreeMap::new();
    for f in 1..=b.free() as i32 {
        let q = b.partner(f);
        if q < 0 {
            letters.push(Letter::X((-q) as usize));
        } else {
            sep_index.insert(f, sep_index.len());
            letters.push(Letter::Sep);
        }
    }
    let mut pairs = Vec::new();
    let mut single = Vec::new();
    for (&f, &i) in &sep_index {
        let q = b.partner(f);
        if q == BOX {
            single.push(i);
        } else if q > f {
            pairs.push((i, sep_index[&q]));
        }
    }
    let y = PairingCode { size: sep_index.len(), pairs, single };
    WordTuple { x, p, y, word: SepWord { letters } }
}

/// The box diagram with the given word tuple.
pub fn phi_inverse(n: usize, t: &WordTuple) -> Result<BoxDiagram> {
    let len = t.word.letters.len();
    if len > n {
        return Err(Error::Malformed(format!("word longer than {n}")));
    }
    let seps: Vec<i32> = (0..len).filter(|&i| t.word.letters[i] == Letter::Sep).map(|i| i as i32 + 1).collect();
    if seps.len() != t.y.size {
        return Err(Error::Malformed(String::from("separator count differs from the ordered set")));
    }
    let at = |i: usize| -> Result<i32> {
        seps.get(i).copied().ok_or_else(|| Error::Malformed(format!("position {i} out of range")))
    };
    let mut pairs: Vec<(i32, i32)> = t.p.iter().map(|&(a, b)| (-(a as i32), -(b as i32))).collect();
    let mut in_word = BTreeSet::new();
    for (i, l) in t.word.letters.iter().enumerate() {
        if let Letter::X(a) = *l {
            if !t.x.contains(&a) {
                return Err(Error::Malformed(format!("letter {a} not in X")));
            }
            in_word.insert(a);
            pairs.push((-(a as i32), i as i32 + 1));
        }
    }
    for &(a, b) in &t.y.pairs {
        pairs.push((at(a)?, at(b)?));
    }
    let mut boxed: Vec<i32> = t.x.iter().filter(|a| !in_word.contains(a)).map(|&a| -(a as i32)).collect();
    for &i in &t.y.single {
        boxed.push(at(i)?);
    }
    BoxDiagram::new(n, n - len, &pairs, &boxed)
}

/// Outcome of comparing a filtration quotient of `C_n^{(k)}` with the sum
/// of separator-word complexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiReport {
    pub n: usize,
    pub k: usize,
    pub j: usize,
    pub basis_size: usize,
    pub target_size: u128,
    pub round_trip: bool,
    pub bijective: bool,
    pub degree_shift: bool,
    pub chain_map: bool,
}

impl PhiReport {
    pub fn passed(&self) -> bool {
        self.round_trip && self.bijective && self.degree_shift && self.chain_map
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn falling(n: u128, k: u128) -> u128 {
    (0..k).map(|i| n - i).product()
}

/// Total size of the direct sum of `W_X^{(k+j)}` over all `(X, P, Y)`.
fn phi_target_size(n: usize, k: usize, j: usize) -> u128 {
    let nx = (n - 2 * k) as u128;
    let s = (k + j) as u128;
    let pairings =
        falling(s, s) / (falling(j as u128, j as u128) * (1u128 << j) * falling((k - j) as u128, (k - j) as u128));
    let words: u128 = (0..=nx).map(|q| falling(nx, q) * binomial(q + s, s)).sum();
    binomial(n as u128, nx) * double_factorial_odd(k) as u128 * pairings * words
}

pub fn phi_iso_check(n: usize, k: usize, j: usize, bound: usize) -> Result<PhiReport> {
    if 2 * k > n || j > k {
        return Err(Error::OutOfRange(format!("(k, j) = ({k}, {j}) with n={n}")));
    }
    let ring = Ring::integers(0);
    let cn = build_cn(n, &ring, bound)?;
    let parts = split_cn(&cn)?;
    let (_, quotient) = filter_cnk(&parts[k], j)?;

    let mut round_trip = true;
    let mut degree_shift = true;
    let mut images = BTreeSet::new();
    let mut basis_size = 0;
    let tuples: Vec<Vec<WordTuple>> = quotient
        .bases
        .iter()
        .enumerate()
        .map(|(q, basis)| {
            basis
                .iter()
                .map(|b| {
                    let t = phi(b);
                    basis_size += 1;
                    round_trip &= phi_inverse(n, &t).as_ref() == Ok(b);
                    degree_shift &= t.word.degree() == q as i64 - 1 - (k + j) as i64 && t.k() == k && t.j() == j;
                    images.insert(t.clone());
                    t
                })
                .collect()
        })
        .collect();
    let target_size = phi_target_size(n, k, j);
    let bijective = images.len() == basis_size && basis_size as u128 == target_size;

    let mut chain_map = true;
    for p in 0..n as i64 {
        let Some(m) = quotient.complex.boundary(p) else { continue };
        let cols = m.transpose();
        let (src, tgt) = (&tuples[(p + 1) as usize], &tuples[p as usize]);
        for (c, col) in cols.data.iter().enumerate() {
            let mut lhs: BTreeMap<WordTuple, BigRational> = BTreeMap::new();
            for (r, v) in col {
                *lhs.entry(tgt[*r as usize].clone()).or_insert_with(BigRational::zero) += v;
            }
            let mut rhs: BTreeMap<WordTuple, BigRational> = BTreeMap::new();
            for (sign, w) in src[c].word.boundary() {
                *rhs.entry(src[c].with_word(w)).or_insert_with(BigRational::zero) +=
                    BigRational::from_integer(sign.into());
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            chain_map &= lhs == rhs;
        }
    }
    Ok(PhiReport { n, k, j, basis_size, target_size, round_trip, bijective, degree_shift, chain_map })
}

/// Which of the two inductive complexes to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inductive {
    /// `C(X, x)`, needing `delta` invertible.
    C,
    /// `D(X, x, y)` with `y` outside `X`.
    D { y: usize },
}

struct InductiveShape {
    x_set: Vec<usize>,
    others: Vec<usize>,
}

fn without(set: &[usize], drop: &[usize]) -> Vec<usize> {
    set.iter().copied().filter(|a| !drop.contains(a)).collect()
}

fn inductive_shape(
    n: usize,
    x_set: &[usize],
    x: usize,
    kind: Inductive,
    cutoff: usize,
    ring: &Ring,
) -> Result<InductiveShape> {
    let mut xs = x_set.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.len() != x_set.len() || xs.iter().any(|&a| a == 0 || a > n) {
        return Err(Error::Malformed(format!("X must be a subset of 1..={n}")));
    }
    if !xs.contains(&x) {
        return Err(Error::Hypothesis(format!("{x} is not in X")));
    }
    if cutoff < 2 {
        return Err(Error::OutOfRange(String::from("truncation degree must be at least 2")));
    }
    match kind {
        Inductive::C => {
            if !ring.is_unit(ring.delta()) {
                return Err(Error::Hypothesis(format!("delta = {} is not invertible", ring.delta())));
            }
            if ring.working().inverse(ring.delta()).is_none() {
                return Err(Error::Unsupported(String::from("C(X,x) over a composite modulus")));
            }
        }
        Inductive::D { y } => {
            if y == 0 || y > n || xs.contains(&y) {
                return Err(Error::Hypothesis(format!("y = {y} must lie in 1..={n} outside X")));
            }
        }
    }
    let others = without(&xs, &[x]);
    Ok(InductiveShape { x_set: xs, others })
}

/// The element by which summand `w` is right-multiplied on leaving degree `q >= 1`.
fn inductive_multiplier(
    n: usize,
    x: usize,
    w: usize,
    kind: Inductive,
    q: usize,
    ring: &Ring,
) -> Result<AlgebraElement> {
    let u = |a: usize, b: usize| -> Result<AlgebraElement> {
        Ok(AlgebraElement::basis(BrauerDiagram::u_ab(n, a, b)?, ring))
    };
    let e = match kind {
        Inductive::C => {
            let inv = ring.inverse(ring.delta()).expect("checked invertible");
            u(x, w)?.scale(&inv)
        }
        Inductive::D { y } => {
            if q == 1 {
                return u(x, w);
            }
            u(x, w)?.mul(&u(x, y)?)?
        }
    };
    if q % 2 == 0 {
        AlgebraElement::one(n, ring).sub(&e)
    } else {
        Ok(e)
    }
}

/// The truncation at degree `cutoff` of `C(X, x)` or `D(X, x, y)`, each term a
/// direct sum of quotients `Br_n / J_Y` written in their diagram bases.
pub fn build_inductive(
    n: usize,
    x_set: &[usize],
    x: usize,
    kind: Inductive,
    cutoff: usize,
    ring: &Ring,
    bound: usize,
) -> Result<ChainComplex> {
    let shape = inductive_shape(n, x_set, x, kind, cutoff, ring)?;
    let work = ring.working();
    let sorted = |ideal: &[usize]| -> Result<Vec<BrauerDiagram>> {
        let mut b = quotient_basis(n, ideal, bound)?.basis;
        b.sort();
        Ok(b)
    };
    let top = sorted(&shape.x_set)?;
    let zero_ideal = without(&shape.x_set, &[x]);
    let zero = sorted(&zero_ideal)?;
    let summands: Vec<(usize, Vec<usize>, Vec<BrauerDiagram>)> = shape
        .others
        .iter()
        .map(|&w| {
            let ideal = without(&shape.x_set, &[x, w]);
            sorted(&ideal).map(|b| (w, ideal, b))
        })
        .collect::<Result<_>>()?;
    let offsets: Vec<usize> = summands
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s.2.len();
            Some(o)
        })
        .collect();
    let sum_rank: usize = summands.iter().map(|s| s.2.len()).sum();

    let mut boundaries = Vec::new();
    let mut b = MatrixBuilder::new(top.len(), zero.len());
    for (c, d) in zero.iter().enumerate() {
        if let Ok(r) = top.binary_search(d) {
            b.push(r, c, BigRational::one());
        }
    }
    boundaries.push(b.build(&work)?);

    for q in 1..=cutoff {
        let rows = if q == 1 { zero.len() } else { sum_rank };
        let mut b = MatrixBuilder::new(rows, sum_rank);
        for (si, (w, ideal, basis)) in summands.iter().enumerate() {
            let mult = inductive_multiplier(n, x, *w, kind, q, &work)?;
            let (target, target_ideal, row_offset) =
                if q == 1 { (&zero, &zero_ideal, 0) } else { (basis, ideal, offsets[si]) };
            for (c, d) in basis.iter().enumerate() {
                for (e, coeff) in mult.terms() {
                    let r = d.compose_unchecked(e);
                    if r.diagram.has_right_arc_within(target_ideal) {
                        continue;
                    }
                    let row = target.binary_search(&r.diagram).expect("reduced diagram is a basis element");
                    let v = work.mul(coeff, &work.delta_pow(r.loops));
                    b.push(row_offset + row, offsets[si] + c, v.as_rational().clone());
                }
            }
        }
        boundaries.push(b.build(&work)?);
    }
    let mut ranks = vec![top.len(), zero.len()];
    ranks.extend(core::iter::repeat(sum_rank).take(cutoff));
    ChainComplex::new(ring, -1, ranks, boundaries)
}

/// `t ⊗_{Br_n}` of the inductive complex: every quotient becomes a copy of
/// the ring and every multiplier acts through the augmentation.
pub fn tensor_inductive(
    n: usize,
    x_set: &[usize],
    x: usize,
    kind: Inductive,
    cutoff: usize,
    ring: &Ring,
) -> Result<ChainComplex> {
    let shape = inductive_shape(n, x_set, x, kind, cutoff, ring)?;
    let work = ring.working();
    let width = shape.others.len();
    let mut boundaries = Vec::new();
    let mut b = MatrixBuilder::new(1, 1);
    b.push(0, 0, BigRational::one());
    boundaries.push(b.build(&work)?);
    for q in 1..=cutoff {
        let rows = if q == 1 { 1 } else { width };
        let mut b = MatrixBuilder::new(rows, width);
        for (c, &w) in shape.others.iter().enumerate() {
            let eps = inductive_multiplier(n, x, w, kind, q, &work)?.augmentation();
            b.push(if q == 1 { 0 } else { c }, c, eps.as_rational().clone());
        }
        boundaries.push(b.build(&work)?);
    }
    let mut ranks = vec![1, 1];
    ranks.extend(core::iter::repeat(width).take(cutoff));
    ChainComplex::new(ring, -1, ranks, boundaries)
}

/// Whether `kind` can be built over `ring` at all.
pub fn inductive_supported(kind: Inductive, ring: &Ring) -> bool {
    match kind {
        Inductive::C => ring.is_unit(ring.delta()) && !matches!(ring.kind(), RingKind::IntegersMod(_)),
        Inductive::D { .. } => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DEFAULT_ENUMERATION_BOUND as B;
    use crate::homology::complex_homology;
    use crate::representations::induced_rank;

    fn bx(n: usize, m: usize, pairs: &[(i32, i32)], boxed: &[i32]) -> BoxDiagram {
        BoxDiagram::new(n, m, pairs, boxed).unwrap()
    }

    fn column(mat: &SparseMatrix<BigRational>, c: usize) -> Vec<(usize, BigRational)> {
        let mut out = Vec::new();
        for (r, row) in mat.data.iter().enumerate() {
            for (cc, v) in row {
                if *cc as usize == c {
                    out.push((r, v.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn pictured_faces() {
        let v = bx(5, 2, &[(-1, -4), (-3, 1), (2, 3)], &[-2, -5]);
        let d2 = bx(5, 3, &[(-1, -4), (-3, 1)], &[-2, -5, 2]);
        let d0 = bx(5, 3, &[(-1, -4), (1, 2)], &[-2, -3, -5]);
        for (i, want) in [(2, Some(d2.clone())), (1, Some(d2)), (0, Some(d0))] {
            let got = face_image(&v, &face_shuffle(5, 2, i)).map(|x| x.0);
            assert_eq!(got, want, "d_{i}");
        }
        let w = bx(5, 2, &[(-1, -4), (-3, 2), (-5, 3)], &[-2, 1]);
        assert_eq!(face_image(&w, &face_shuffle(5, 2, 0)), None);
    }

    #[test]
    fn algebraic_faces_match_absorption() {
        for n in 1..=4 {
            for p in 0..n {
                let m = n - p - 1;
                for v in induced_basis(n, m, B).unwrap() {
                    for i in 0..=p {
                        let alg = face_image(&v, &face_shuffle(n, m, i));
                        assert_eq!(alg.as_ref().map(|x| x.1), alg.as_ref().map(|_| 0));
                        assert_eq!(alg.map(|x| x.0), v.absorb(i), "{v} d_{i}");
                    }
                }
            }
        }
    }

    #[test]
    fn last_face_is_the_augmentation() {
        let ring = Ring::integers(3);
        for n in 1..=4 {
            let d = face_map(n, 0, 0, &ring, B).unwrap();
            let src = induced_basis(n, n - 1, B).unwrap();
            assert_eq!(d.rows, 1);
            for (c, v) in src.iter().enumerate() {
                let eps = if v.lift().is_permutation() { 1 } else { 0 };
                let got: i64 = column(&d, c).iter().map(|(_, x)| i64::try_from(x.to_integer()).unwrap()).sum();
                assert_eq!(got, eps);
            }
        }
    }

    fn dense(m: &SparseMatrix<BigRational>) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); m.cols]; m.rows];
        for (r, row) in m.data.iter().enumerate() {
            for (c, v) in row {
                out[r][*c as usize] = v.clone();
            }
        }
        out
    }

    fn product(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|c| row.iter().zip(b).fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[c]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn simplicial_identities() {
        let ring = Ring::integers(0);
        for n in 2..=4 {
            for p in 1..n {
                for k in 1..=p {
                    for j in 0..k {
                        let lhs = product(
                            &dense(&face_map(n, p - 1, j, &ring, B).unwrap()),
                            &dense(&face_map(n, p, k, &ring, B).unwrap()),
                        );
                        let rhs = product(
                            &dense(&face_map(n, p - 1, k - 1, &ring, B).unwrap()),
                            &dense(&face_map(n, p, j, &ring, B).unwrap()),
                        );
                        assert_eq!(lhs, rhs, "n={n} p={p} j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn face_map_range() {
        let ring = Ring::integers(0);
        assert!(face_map(3, 3, 0, &ring, B).is_err());
        assert!(face_map(3, 1, 2, &ring, B).is_err());
    }

    #[test]
    fn cn_ranks() {
        let ring = Ring::integers(0);
        assert_eq!(build_cn(2, &ring, B).unwrap().complex.ranks(), &[1, 3, 3]);
        assert_eq!(build_cn(3, &ring, B).unwrap().complex.ranks(), &[1, 6, 15, 15]);
        for n in 1..=5 {
            let c = build_cn(n, &ring, B).unwrap();
            let want: Vec<usize> = (0..=n).map(|q| induced_rank(n, n - q) as usize).collect();
            assert_eq!(c.complex.ranks(), &want[..]);
        }
        assert!(matches!(build_cn(7, &ring, B), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn cn_square_zero() {
        for delta in [0, 2] {
            for n in 1..=5 {
                let c = build_cn(n, &Ring::integers(delta), B).unwrap();
                c.complex.check_square_zero().unwrap();
            }
        }
    }

    #[test]
    fn splitting_partitions_the_basis() {
        let ring = Ring::integers(0);
        for n in 1..=5 {
            let c = build_cn(n, &ring, B).unwrap();
            let parts = split_cn(&c).unwrap();
            for (q, &r) in c.complex.ranks().iter().enumerate() {
                let total: usize = parts.iter().map(|p| p.complex.ranks()[q]).sum();
                assert_eq!(total, r);
            }
            for (k, part) in parts.iter().enumerate() {
                assert!(part.bases.iter().flatten().all(|b| b.left_pairs() == k));
            }
        }
        let c2 = split_cn(&build_cn(2, &ring, B).unwrap()).unwrap();
        let count = |k: usize, m: usize| induced_basis(2, m, B).unwrap().iter().filter(|b| b.left_pairs() == k).count();
        assert_eq!(c2[0].complex.ranks(), &[count(0, 2), count(0, 1), count(0, 0)]);
        assert_eq!(c2[1].complex.ranks(), &[count(1, 2), count(1, 1), count(1, 0)]);
    }

    #[test]
    fn filtration_exhausts_and_decreases() {
        let ring = Ring::integers(0);
        let c = build_cn(4, &ring, B).unwrap();
        for part in split_cn(&c).unwrap() {
            let k = part.k.unwrap();
            let (top, _) = filter_cnk(&part, k).unwrap();
            assert_eq!(top.complex.ranks(), part.complex.ranks());
            for j in 0..=k {
                let keep = part.select(|b| b.free_right_pairs() <= j);
                assert!(part.complex.is_subcomplex(&keep));
            }
            assert!(filter_cnk(&part, k + 1).is_err());
        }
    }

    #[test]
    fn word_example_bases() {
        let ring = Ring::integers(0);
        let w = build_w(&[1], 2, &ring, DEFAULT_WORD_BOUND).unwrap();
        let show = |q: usize| w.bases[q].iter().map(ToString::to_string).collect::<Vec<_>>();
        assert_eq!(show(0), ["||"]);
        assert_eq!(show(1), ["||1", "|1|", "1||"]);
    }

    #[test]
    fn word_example_boundaries() {
        let b = SepWord::parse("1|2").unwrap().boundary();
        let shown: Vec<(i32, String)> = b.iter().map(|(s, w)| (*s, w.to_string())).collect();
        assert_eq!(shown, [(1, String::from("|2")), (1, String::from("1|"))]);
        let b = SepWord::parse("|21").unwrap().boundary();
        let shown: Vec<(i32, String)> = b.iter().map(|(s, w)| (*s, w.to_string())).collect();
        assert_eq!(shown, [(-1, String::from("|1")), (1, String::from("|2"))]);
        assert!(SepWord::parse("1|1").is_err());
    }

    #[test]
    fn word_ranks_match_count() {
        let ring = Ring::integers(0);
        for nx in 0..=4usize {
            for s in 0..=3usize {
                let x: Vec<usize> = (1..=nx).collect();
                let w = build_w(&x, s, &ring, DEFAULT_WORD_BOUND).unwrap();
                for q in 0..=nx {
                    let want = falling(nx as u128, q as u128) * binomial((q + s) as u128, s as u128);
                    assert_eq!(w.bases[q].len() as u128, want);
                    assert!(w.bases[q].iter().all(|x| x.separators() == s && x.degree() == q as i64 - 1));
                }
            }
        }
    }

    #[test]
    fn injective_words_connected() {
        let ring = Ring::integers(0);
        let w = build_w(&[1, 2], 0, &ring, DEFAULT_WORD_BOUND).unwrap();
        let h = complex_homology(&w.complex, Some(0)).unwrap();
        assert!(h.iter().all(|(_, g)| g.is_zero()));
    }

    #[test]
    fn worked_tuple() {
        let b = bx(8, 2, &[(-1, 2), (-4, 6), (-7, 3), (-2, -3), (-5, -8), (1, 5)], &[-6, 4]);
        let t = phi(&b);
        assert_eq!(t.word.to_string(), "|17||4");
        assert_eq!(t.x, [1, 4, 6, 7]);
        assert_eq!(t.p, [(2, 3), (5, 8)]);
        assert_eq!(t.y, PairingCode { size: 3, pairs: vec![(0, 2)], single: vec![1] });
        assert_eq!((t.k(), t.j()), (2, 1));
        assert_eq!(phi_inverse(8, &t).unwrap(), b);
    }

    #[test]
    fn phi_small() {
        for n in 1..=4 {
            for k in 0..=n / 2 {
                for j in 0..=k {
                    let r = phi_iso_check(n, k, j, B).unwrap();
                    assert!(r.passed(), "{r:?}");
                }
            }
        }
    }

    #[test]
    fn inductive_preconditions() {
        let q = Ring::rationals(1);
        assert!(build_inductive(3, &[1, 2], 3, Inductive::C, 3, &q, B).is_err());
        assert!(build_inductive(3, &[1, 2], 1, Inductive::C, 3, &Ring::integers(0), B).is_err());
        assert!(build_inductive(3, &[1, 2], 1, Inductive::D { y: 2 }, 3, &q, B).is_err());
        assert!(build_inductive(3, &[1, 2], 1, Inductive::D { y: 3 }, 1, &q, B).is_err());
        assert!(!inductive_supported(Inductive::C, &Ring::parse("Zmod:6", "5").unwrap()));
    }

    #[test]
    fn inductive_acyclic_small() {
        let cases = [(Inductive::C, Ring::rationals(1)), (Inductive::D { y: 3 }, Ring::integers(0))];
        for (kind, ring) in cases {
            let c = build_inductive(3, &[1, 2], 1, kind, 3, &ring, B).unwrap();
            assert_eq!(c.ranks(), &[12, 15, 15, 15, 15]);
            let h = complex_homology(&c, Some(2)).unwrap();
            assert!(h.iter().all(|(_, g)| g.is_zero()), "{kind:?}: {h:?}");
            let t = tensor_inductive(3, &[1, 2], 1, kind, 3, &ring).unwrap();
            let h = complex_homology(&t, Some(2)).unwrap();
            assert!(h.iter().all(|(_, g)| g.is_zero()), "{kind:?}: {h:?}");
        }
    }
}
