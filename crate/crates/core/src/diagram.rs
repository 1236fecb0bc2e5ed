//! Brauer diagrams: perfect matchings of `{-n..-1} ∪ {1..n}`.
//!
//! Negative labels are the left-hand nodes, positive labels the right-hand
//! nodes. A diagram is stored as the partner of every label, in increasing
//! label order, which doubles as its canonical form: two diagrams are equal
//! iff their partner arrays are equal, and the derived ordering coincides
//! with the lexicographic ordering of the sorted pair lists.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Default ceiling on `n` for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerDiagram {
    n: usize,
    mate: Vec<i32>,
}

/// The diagram part of a product together with the number of closed loops
/// removed from the middle column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionResult {
    pub diagram: BrauerDiagram,
    pub loops: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramStats {
    pub left_pairs: usize,
    pub right_pairs: usize,
    pub is_permutation: bool,
}

/// The named elements of the diagram basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    S(usize),
    U(usize),
    Uab(usize, usize),
    /// One-line notation: entry `j-1` is the image of `j`.
    Permutation(Vec<usize>),
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

impl BrauerDiagram {
    /// Builds a diagram from unordered pairs of signed labels.
    pub fn new(n: usize, pairs: &[(i32, i32)]) -> Result<BrauerDiagram> {
        if pairs.len() != n {
            return Err(Error::InvalidDiagram(format!("expected {n} pairs, got {}", pairs.len())));
        }
        let mut mate = vec![0i32; 2 * n];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x == 0 || x.unsigned_abs() as usize > n {
                    return Err(Error::InvalidDiagram(format!("label {x} out of range for n={n}")));
                }
            }
            if a == b {
                return Err(Error::InvalidDiagram(format!("label {a} paired with itself")));
            }
            for (x, y) in [(a, b), (b, a)] {
                let slot = &mut mate[index(n, x)];
                if *slot != 0 {
                    return Err(Error::InvalidDiagram(format!("label {x} repeated")));
                }
                *slot = y;
            }
        }
        Ok(BrauerDiagram { n, mate })
    }

    pub(crate) fn from_mates(n: usize, mate: Vec<i32>) -> BrauerDiagram {
        debug_assert_eq!(mate.len(), 2 * n);
        BrauerDiagram { n, mate }
    }

    pub fn identity(n: usize) -> BrauerDiagram {
        let mut mate = vec![0; 2 * n];
        for j in 1..=n as i32 {
            mate[index(n, -j)] = j;
            mate[index(n, j)] = -j;
        }
        BrauerDiagram { n, mate }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The label joined to `label`.
    #[inline]
    pub fn partner(&self, label: i32) -> i32 {
        self.mate[index(self.n, label)]
    }

    /// Canonical pair list: smaller label first, pairs in increasing order.
    pub fn pairs(&self) -> Vec<(i32, i32)> {
        (0..2 * self.n).map(|i| (label_at(self.n, i), self.mate[i])).filter(|&(a, b)| a < b).collect()
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.n as i32).all(|j| self.partner(-j) == j)
    }

    /// Pastes `self` to the left of `other`, tracing paths through the middle
    /// column and counting the closed loops left behind.
    pub fn compose(&self, other: &BrauerDiagram) -> Result<CompositionResult> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &BrauerDiagram) -> CompositionResult {
        let n = self.n;
        let mut mate = vec![0i32; 2 * n];
        // middle node j (1-based) is right node j of self and left node -j of other
        let mut middle_seen = vec![false; n + 1];

        // Follow a path entering the middle column at node `j`, having arrived
        // from `self` (so the next hop is through `other`) when `into_other`.
        let walk = |mut j: i32, mut into_other: bool, seen: &mut [bool]| -> i32 {
            loop {
                seen[j as usize] = true;
                if into_other {
                    let q = other.partner(-j);
                    if q > 0 {
                        return q;
                    }
                    j = -q;
                } else {
                    let q = self.partner(j);
                    if q < 0 {
                        return q;
                    }
                    j = q;
                }
                into_other = !into_other;
            }
        };

        for i in 1..=n as i32 {
            // outer left node -i
            if mate[index(n, -i)] == 0 {
                let p = self.partner(-i);
                let end = if p < 0 { p } else { walk(p, true, &mut middle_seen) };
                mate[index(n, -i)] = end;
                mate[index(n, end)] = -i;
            }
        }
        for i in 1..=n as i32 {
            // outer right node i
            if mate[index(n, i)] == 0 {
                let p = other.partner(i);
                let end = if p > 0 { p } else { walk(-p, false, &mut middle_seen) };
                mate[index(n, i)] = end;
                mate[index(n, end)] = i;
            }
        }

        let mut loops = 0;
        for start in 1..=n {
            if middle_seen[start] {
                continue;
            }
            loops += 1;
            let mut j = start as i32;
            let mut via_other = true;
            while !middle_seen[j as usize] {
                middle_seen[j as usize] = true;
                j = if via_other { -other.partner(-j) } else { self.partner(j) };
                via_other = !via_other;
            }
        }
        CompositionResult { diagram: BrauerDiagram { n, mate }, loops }
    }

    pub fn s(n: usize, i: usize) -> Result<BrauerDiagram> {
        check_adjacent(n, i)?;
        let mut d = BrauerDiagram::identity(n);
        let i = i as i32;
        d.set(-i, i + 1);
        d.set(-(i + 1), i);
        Ok(d)
    }

    pub fn u(n: usize, i: usize) -> Result<BrauerDiagram> {
        check_adjacent(n, i)?;
        BrauerDiagram::u_ab(n, i, i + 1)
    }

    /// Cups `{-a,-b}` and `{a,b}`, all other strands straight.
    pub fn u_ab(n: usize, a: usize, b: usize) -> Result<BrauerDiagram> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::OutOfRange(format!("U_{{{a},{b}}} in Br_{n}")));
        }
        let mut d = BrauerDiagram::identity(n);
        let (a, b) = (a as i32, b as i32);
        d.set(-a, -b);
        d.set(a, b);
        Ok(d)
    }

    /// The permutation diagram pairing `-j` with `w(j)`.
    pub fn permutation(w: &[usize]) -> Result<BrauerDiagram> {
        let n = w.len();
        let mut seen = vec![false; n + 1];
        for &x in w {
            if x == 0 || x > n || seen[x] {
                return Err(Error::OutOfRange(format!("{w:?} is not a permutation")));
            }
            seen[x] = true;
        }
        let mut mate = vec![0; 2 * n];
        for (j, &x) in w.iter().enumerate() {
            mate[index(n, -(j as i32 + 1))] = x as i32;
            mate[index(n, x as i32)] = -(j as i32 + 1);
        }
        Ok(BrauerDiagram { n, mate })
    }

    pub fn generator(n: usize, which: &Generator) -> Result<BrauerDiagram> {
        match which {
            Generator::S(i) => BrauerDiagram::s(n, *i),
            Generator::U(i) => BrauerDiagram::u(n, *i),
            Generator::Uab(a, b) => BrauerDiagram::u_ab(n, *a, *b),
            Generator::Permutation(w) => {
                if w.len() != n {
                    return Err(Error::StrandMismatch(n, w.len()));
                }
                BrauerDiagram::permutation(w)
            }
        }
    }

    fn set(&mut self, a: i32, b: i32) {
        let n = self.n;
        self.mate[index(n, a)] = b;
        self.mate[index(n, b)] = a;
    }

    pub fn left_pairs(&self) -> usize {
        (1..=self.n as i32).filter(|&j| self.partner(-j) < -j).count()
    }

    pub fn right_pairs(&self) -> usize {
        (1..=self.n as i32).filter(|&j| self.partner(j) > j).count()
    }

    pub fn is_permutation(&self) -> bool {
        (1..=self.n as i32).all(|j| self.partner(-j) > 0)
    }

    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            left_pairs: self.left_pairs(),
            right_pairs: self.right_pairs(),
            is_permutation: self.is_permutation(),
        }
    }

    /// The permutation `w` with `-j` joined to `w(j)`, if this is a
    /// permutation diagram.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation().then(|| (1..=self.n as i32).map(|j| self.partner(-j) as usize).collect())
    }

    /// Whether two right-hand nodes with labels in `set` are joined. This is
    /// the membership test for the left ideal spanned by such diagrams.
    pub fn has_right_arc_within(&self, set: &[usize]) -> bool {
        set.iter().any(|&a| {
            let p = self.partner(a as i32);
            p > a as i32 && set.contains(&(p as usize))
        })
    }

    /// Adds straight strands `n+1..=big_n`.
    pub fn embed(&self, big_n: usize) -> Result<BrauerDiagram> {
        if big_n < self.n {
            return Err(Error::OutOfRange(format!("cannot embed Br_{} into Br_{big_n}", self.n)));
        }
        let mut pairs = self.pairs();
        pairs.extend((self.n as i32 + 1..=big_n as i32).map(|j| (-j, j)));
        BrauerDiagram::new(big_n, &pairs)
    }

    /// Mirror image exchanging left and right; an anti-automorphism of the
    /// algebra.
    pub fn flip(&self) -> BrauerDiagram {
        let pairs: Vec<(i32, i32)> = self.pairs().into_iter().map(|(a, b)| (-a, -b)).collect();
        BrauerDiagram::new(self.n, &pairs).expect("mirror of a matching is a matching")
    }

    /// Right-composes with a permutation diagram: right node `j` of the
    /// result is right node `w^{-1}(j)` of `self`. No loops can form.
    pub(crate) fn relabel_right(&self, w: &[usize]) -> BrauerDiagram {
        let n = self.n;
        let map = |x: i32| if x > 0 { w[x as usize - 1] as i32 } else { x };
        let mut mate = vec![0; 2 * n];
        for i in 0..2 * n {
            let a = label_at(n, i);
            mate[index(n, map(a))] = map(self.mate[i]);
        }
        BrauerDiagram { n, mate }
    }
}

fn check_adjacent(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::OutOfRange(format!("generator index {i} for n={n}")));
    }
    Ok(())
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{a},{b}}}")?;
        }
        write!(f, "}}")
    }
}

/// All perfect matchings on `2n` points, in canonical order.
pub fn enumerate_diagrams(n: usize, bound: usize) -> Result<Vec<BrauerDiagram>> {
    if n > bound {
        return Err(Error::BoundExceeded(format!("enumeration of Br_{n} (bound {bound})")));
    }
    let labels: Vec<i32> = (0..2 * n).map(|i| label_at(n, i)).collect();
    let mut out = Vec::new();
    let mut mate = vec![0i32; 2 * n];
    fill_matchings(n, &labels, &mut mate, &mut out);
    Ok(out)
}

fn fill_matchings(n: usize, labels: &[i32], mate: &mut [i32], out: &mut Vec<BrauerDiagram>) {
    let Some(first) = (0..labels.len()).find(|&i| mate[i] == 0) else {
        out.push(BrauerDiagram { n, mate: mate.to_vec() });
        return;
    };
    for second in first + 1..labels.len() {
        if mate[second] != 0 {
            continue;
        }
        mate[first] = labels[second];
        mate[second] = labels[first];
        fill_matchings(n, labels, mate, out);
        mate[first] = 0;
        mate[second] = 0;
    }
}

/// `(2n-1)!!`, the number of Brauer diagrams on `n` strands.
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

/// All permutations of `1..=n` in lexicographic order (one-line notation).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn d(n: usize, pairs: &[(i32, i32)]) -> BrauerDiagram {
        BrauerDiagram::new(n, pairs).unwrap()
    }

    #[test]
    fn make_and_reject() {
        let x = d(5, &[(-1, -3), (-2, -4), (-5, 3), (1, 5), (2, 4)]);
        assert_eq!(x.pairs(), [(-5, 3), (-4, -2), (-3, -1), (1, 5), (2, 4)]);
        assert!(d(2, &[(-1, 1), (-2, 2)]).is_identity());
        assert!(matches!(BrauerDiagram::new(2, &[(-1, 1), (-1, 2)]), Err(Error::InvalidDiagram(_))));
        assert!(BrauerDiagram::new(2, &[(-1, 3), (-2, 2)]).is_err());
        assert!(BrauerDiagram::new(2, &[(-1, 1)]).is_err());
        // canonical form does not depend on the input order
        assert_eq!(x, d(5, &[(4, 2), (5, 1), (3, -5), (-4, -2), (-3, -1)]));
    }

    #[test]
    fn intro_product_has_one_loop() {
        let a = d(5, &[(-1, 3), (-2, -4), (-3, -5), (1, 5), (2, 4)]);
        let b = d(5, &[(-1, -4), (-2, -5), (-3, 1), (2, 5), (3, 4)]);
        let r = a.compose(&b).unwrap();
        assert_eq!(r.loops, 1);
        assert_eq!(r.diagram, d(5, &[(-1, 1), (-2, -4), (-3, -5), (2, 5), (3, 4)]));
    }

    #[test]
    fn generators() {
        assert_eq!(BrauerDiagram::u_ab(2, 1, 2).unwrap(), BrauerDiagram::u(2, 1).unwrap());
        assert_eq!(BrauerDiagram::s(2, 1).unwrap(), d(2, &[(-1, 2), (-2, 1)]));
        assert!(BrauerDiagram::permutation(&[1, 2, 3]).unwrap().is_identity());
        assert!(BrauerDiagram::s(3, 3).is_err());
        assert!(BrauerDiagram::u(3, 0).is_err());
        assert!(BrauerDiagram::u_ab(3, 2, 2).is_err());
        assert!(BrauerDiagram::permutation(&[1, 1]).is_err());
        let u = BrauerDiagram::u(2, 1).unwrap();
        let r = u.compose(&u).unwrap();
        assert_eq!((r.diagram, r.loops), (u, 1));
    }

    #[test]
    fn stats() {
        let x = d(5, &[(-1, -3), (-2, -4), (-5, 3), (1, 5), (2, 4)]);
        let s = x.stats();
        assert_eq!((s.left_pairs, s.right_pairs, s.is_permutation), (2, 2, false));
        let s1 = BrauerDiagram::s(2, 1).unwrap().stats();
        assert_eq!((s1.left_pairs, s1.is_permutation), (0, true));
        assert!(BrauerDiagram::u(2, 1).unwrap().has_right_arc_within(&[1, 2]));
        assert!(!BrauerDiagram::u(2, 1).unwrap().has_right_arc_within(&[1]));
    }

    #[test]
    fn enumeration_counts() {
        for (n, c) in [(0, 1), (1, 1), (2, 3), (3, 15), (4, 105), (5, 945)] {
            let all = enumerate_diagrams(n, 6).unwrap();
            assert_eq!(all.len(), c);
            assert_eq!(double_factorial_odd(n), c as u64);
            let set: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), c);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        let two = enumerate_diagrams(2, 6).unwrap();
        let expected: BTreeSet<_> =
            [BrauerDiagram::identity(2), BrauerDiagram::s(2, 1).unwrap(), BrauerDiagram::u(2, 1).unwrap()]
                .into_iter()
                .collect();
        assert_eq!(two.into_iter().collect::<BTreeSet<_>>(), expected);
        assert!(matches!(enumerate_diagrams(7, 6), Err(Error::BoundExceeded(_))));
    }

    #[test]
    fn ordering_matches_pair_lists() {
        let all = enumerate_diagrams(4, 6).unwrap();
        for a in &all {
            for b in &all {
                assert_eq!(a.cmp(b), a.pairs().cmp(&b.pairs()));
            }
        }
    }

    #[test]
    fn permutation_roundtrip_and_count() {
        assert_eq!(permutations(4).len(), 24);
        for w in permutations(4) {
            let p = BrauerDiagram::permutation(&w).unwrap();
            assert_eq!(p.as_permutation().unwrap(), w);
        }
    }

    #[test]
    fn relabel_right_is_composition() {
        for x in enumerate_diagrams(3, 6).unwrap() {
            for w in permutations(3) {
                let p = BrauerDiagram::permutation(&w).unwrap();
                let r = x.compose(&p).unwrap();
                assert_eq!(r.loops, 0);
                assert_eq!(r.diagram, x.relabel_right(&w));
            }
        }
    }

    #[test]
    fn flip_is_anti_automorphism() {
        let all = enumerate_diagrams(3, 6).unwrap();
        for a in &all {
            for b in &all {
                let ab = a.compose(b).unwrap();
                let ba = b.flip().compose(&a.flip()).unwrap();
                assert_eq!(ab.diagram.flip(), ba.diagram);
                assert_eq!(ab.loops, ba.loops);
            }
        }
    }

    // Loop count via union-find over the pasted graph on 3n points.
    fn union_find_loops(a: &BrauerDiagram, b: &BrauerDiagram) -> u32 {
        let n = a.n() as i32;
        // left: 0..n, middle: n..2n, right: 2n..3n
        let node = |side: u8, j: i32| match side {
            0 => (j - 1) as usize,
            1 => (n + j - 1) as usize,
            _ => (2 * n + j - 1) as usize,
        };
        let mut parent: Vec<usize> = (0..3 * n as usize).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut join = |x: usize, y: usize| {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
        };
        for (x, y) in a.pairs() {
            let f = |l: i32| if l < 0 { node(0, -l) } else { node(1, l) };
            join(f(x), f(y));
        }
        for (x, y) in b.pairs() {
            let f = |l: i32| if l < 0 { node(1, -l) } else { node(2, l) };
            join(f(x), f(y));
        }
        let mut outer = std::collections::BTreeSet::new();
        for j in 1..=n {
            outer.insert(find(&mut parent, node(0, j)));
            outer.insert(find(&mut parent, node(2, j)));
        }
        let mut roots = std::collections::BTreeSet::new();
        for j in 1..=n {
            let r = find(&mut parent, node(1, j));
            if !outer.contains(&r) {
                roots.insert(r);
            }
        }
        roots.len() as u32
    }

    #[test]
    fn loops_match_union_find() {
        for n in 0..=4 {
            let all = enumerate_diagrams(n, 6).unwrap();
            for a in &all {
                for b in &all {
                    let r = a.compose(b).unwrap();
                    assert_eq!(r.loops, union_find_loops(a, b));
                    assert!(r.loops as usize <= a.right_pairs().min(b.left_pairs()));
                }
                assert_eq!(BrauerDiagram::identity(n).compose(a).unwrap().diagram, *a);
            }
        }
    }

    #[test]
    fn associativity_with_loops() {
        let all = enumerate_diagrams(3, 6).unwrap();
        for a in &all {
            for b in &all {
                let ab = a.compose(b).unwrap();
                for c in &all {
                    let bc = b.compose(c).unwrap();
                    let l = ab.diagram.compose(c).unwrap();
                    let r = a.compose(&bc.diagram).unwrap();
                    assert_eq!(l.diagram, r.diagram);
                    assert_eq!(ab.loops + l.loops, bc.loops + r.loops);
                }
            }
        }
    }

    #[test]
    fn permutation_diagrams() {
        for n in 0..=4 {
            let all = enumerate_diagrams(n, 6).unwrap();
            let perms: Vec<_> = all.iter().filter(|d| d.left_pairs() == 0).collect();
            assert_eq!(perms.len(), permutations(n).len());
            assert!(perms.iter().all(|d| d.is_permutation()));
            for a in &perms {
                for b in &perms {
                    let r = a.compose(b).unwrap();
                    assert!(r.diagram.is_permutation());
                    assert_eq!(r.loops, 0);
                }
            }
        }
        for n in 0..=5 {
            for d in enumerate_diagrams(n, 6).unwrap() {
                assert_eq!(d.left_pairs(), d.right_pairs());
            }
        }
    }
}
