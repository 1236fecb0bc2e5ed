//! Homology groups of chain complexes, explicit presentations of them, and
//! induced maps between presentations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::chain::{to_integers, ChainComplex};
use crate::error::{Error, Result};
use crate::linalg::{
    eliminate, integer_snf, invariant_factors, BigInts, Elimination, Euclid, PrimeField, Rationals, SparseMatrix,
};
use crate::ring::RingKind;

/// A finitely generated abelian group `Z^free ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with
/// `t_1 | t_2 | ...`. Over a field only `free_rank` (the dimension) is used.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn zero() -> HomologyGroup {
        HomologyGroup::default()
    }

    pub fn free(rank: usize) -> HomologyGroup {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// The group with the given free rank and cyclic summands of the given
    /// orders, normalized to invariant factors.
    pub fn new(free_rank: usize, orders: &[BigInt]) -> HomologyGroup {
        HomologyGroup { free_rank, torsion: invariant_factors(orders) }
    }

    pub fn from_ints(free_rank: usize, orders: &[i64]) -> HomologyGroup {
        let orders: Vec<BigInt> = orders.iter().map(|&o| BigInt::from(o)).collect();
        HomologyGroup::new(free_rank, &orders)
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            write!(f, "Z^{}", self.free_rank)?;
            first = false;
        }
        for t in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// Rank and invariant factors of a boundary matrix in the given ring kind.
fn invariants(m: &SparseMatrix<BigRational>, kind: RingKind) -> (usize, Vec<BigInt>) {
    match kind {
        RingKind::PrimeField(p) => {
            let f = PrimeField { p };
            let m = m.map(|q| q.to_integer().to_u64().unwrap());
            (eliminate(&f, &m, false).unwrap().rank(), Vec::new())
        }
        RingKind::Rationals => match to_integers(m) {
            Some(z) => (integer_snf(&z).0, Vec::new()),
            None => (eliminate(&Rationals, m, false).unwrap().rank(), Vec::new()),
        },
        RingKind::Integers | RingKind::IntegersMod(_) => {
            integer_snf(&to_integers(m).expect("integral entries over the integers"))
        }
    }
}

/// Homology in degrees `lo..=through` (clamped to the complex).
pub fn complex_homology(c: &ChainComplex, through: Option<i64>) -> Result<Vec<(i64, HomologyGroup)>> {
    let top = through.map_or(c.hi(), |t| t.min(c.hi()));
    let kind = c.ring().kind();
    let working = c.ring().working().kind();
    let mut cache: BTreeMap<i64, (usize, Vec<BigInt>)> = BTreeMap::new();
    let mut inv = |p: i64| -> (usize, Vec<BigInt>) {
        cache
            .entry(p)
            .or_insert_with(|| match c.boundary(p) {
                Some(m) => invariants(m, working),
                None => (0, Vec::new()),
            })
            .clone()
    };
    let mut integral = BTreeMap::new();
    for p in c.lo()..=top {
        let (r_in, _) = inv(p);
        let (r_out, tors) = inv(p + 1);
        let free = c.rank(p) - r_in - r_out;
        integral.insert(p, HomologyGroup { free_rank: free, torsion: tors });
    }
    let out = match kind {
        RingKind::IntegersMod(m) => {
            let m = BigInt::from(m);
            integral
                .iter()
                .map(|(&p, h)| {
                    let mut orders: Vec<BigInt> = vec![m.clone(); h.free_rank];
                    orders.extend(h.torsion.iter().map(|t| t.gcd(&m)));
                    if let Some(prev) = integral.get(&(p - 1)) {
                        orders.extend(prev.torsion.iter().map(|t| t.gcd(&m)));
                    }
                    (p, HomologyGroup::new(0, &orders))
                })
                .collect()
        }
        _ => integral.into_iter().collect(),
    };
    Ok(out)
}

/// Coefficient arithmetic usable for presentations.
pub trait Coeffs: Euclid {
    fn embed(&self, q: &BigRational) -> Self::E;
    fn order(&self, e: &Self::E) -> BigInt;
}

impl Coeffs for BigInts {
    fn embed(&self, q: &BigRational) -> BigInt {
        debug_assert!(q.is_integer());
        q.to_integer()
    }
    fn order(&self, e: &BigInt) -> BigInt {
        e.abs()
    }
}

impl Coeffs for PrimeField {
    fn embed(&self, q: &BigRational) -> u64 {
        let p = BigInt::from(self.p);
        let num = q.numer().mod_floor(&p).to_u64().unwrap();
        let den = q.denom().mod_floor(&p).to_u64().unwrap();
        num * self.inverse(den) % self.p
    }
    fn order(&self, _: &u64) -> BigInt {
        BigInt::one()
    }
}

impl Coeffs for Rationals {
    fn embed(&self, q: &BigRational) -> BigRational {
        q.clone()
    }
    fn order(&self, _: &BigRational) -> BigInt {
        BigInt::one()
    }
}

pub fn embed_matrix<R: Coeffs>(ring: &R, m: &SparseMatrix<BigRational>) -> SparseMatrix<R::E> {
    let mut out = m.map(|q| ring.embed(q));
    for row in &mut out.data {
        row.retain(|(_, v)| !ring.is_zero(v));
    }
    out
}

/// `rows[t] -= f * rows[s]` style updates of a multivector whose row index
/// is the coordinate acted on by the logged operations.
fn merge_add<R: Euclid>(ring: &R, dst: &[(u32, R::E)], src: &[(u32, R::E)], f: &R::E) -> Vec<(u32, R::E)> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        if j == src.len() || (i < dst.len() && dst[i].0 < src[j].0) {
            out.push(dst[i].clone());
            i += 1;
        } else if i == dst.len() || src[j].0 < dst[i].0 {
            out.push((src[j].0, ring.mul(f, &src[j].1).unwrap()));
            j += 1;
        } else {
            let v = ring.add(&dst[i].1, &ring.mul(f, &src[j].1).unwrap()).unwrap();
            if !ring.is_zero(&v) {
                out.push((dst[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn apply_inverse_rows<R: Euclid>(ring: &R, e: &Elimination<R::E>, rows: &mut [Vec<(u32, R::E)>]) {
    for op in e.log.as_ref().unwrap().iter().rev() {
        let (t, s) = (op.target as usize, op.source as usize);
        if rows[s].is_empty() {
            continue;
        }
        let f = ring.neg(&op.factor).unwrap();
        rows[t] = merge_add(ring, &rows[t], &rows[s], &f);
    }
}

/// `v ↦ P^T v` for the row operations `P` of `e`.
fn apply_transpose<R: Euclid>(ring: &R, e: &Elimination<R::E>, v: &mut [R::E]) {
    for op in e.log.as_ref().unwrap().iter().rev() {
        let (t, s) = (op.target as usize, op.source as usize);
        if !ring.is_zero(&v[t]) {
            v[s] = ring.add(&v[s], &ring.mul(&op.factor, &v[t]).unwrap()).unwrap();
        }
    }
}

/// `v ↦ P^{-T} v`.
fn apply_inverse_transpose<R: Euclid>(ring: &R, e: &Elimination<R::E>, v: &mut [R::E]) {
    for op in e.log.as_ref().unwrap() {
        let (t, s) = (op.target as usize, op.source as usize);
        if !ring.is_zero(&v[t]) {
            v[s] = ring.sub(&v[s], &ring.mul(&op.factor, &v[t]).unwrap()).unwrap();
        }
    }
}

/// An explicit presentation of `H_p = ker ∂_p / im ∂_{p+1}`: generators are
/// cycles, the first few of finite order, the rest free.
pub struct Presentation<R: Coeffs> {
    ring: R,
    dim: usize,
    outgoing: Elimination<R::E>,
    torsion: Vec<(usize, R::E)>,
    tail: Vec<usize>,
    kernel: Elimination<R::E>,
    free: Vec<usize>,
}

impl<R: Coeffs + Clone> Presentation<R> {
    /// `incoming` is `∂_p` (out of degree `p`), `outgoing` is `∂_{p+1}`.
    pub fn new(ring: &R, dim: usize, incoming: &SparseMatrix<R::E>, outgoing: &SparseMatrix<R::E>) -> Presentation<R> {
        assert_eq!(incoming.cols, dim);
        assert_eq!(outgoing.rows, dim);
        let out_elim = eliminate(ring, outgoing, true).expect("no overflow in exact arithmetic");
        let mut is_pivot = vec![false; dim];
        let mut torsion = Vec::new();
        for p in &out_elim.pivots {
            is_pivot[p.row] = true;
            if !ring.is_unit(&p.value) {
                torsion.push((p.row, p.value.clone()));
            }
        }
        torsion.sort_by_key(|t| t.0);
        let tail: Vec<usize> = (0..dim).filter(|&i| !is_pivot[i]).collect();

        // Columns of P^{-1} restricted to the tail, as rows over tail indices.
        let mut rows: Vec<Vec<(u32, R::E)>> = vec![Vec::new(); dim];
        for (k, &t) in tail.iter().enumerate() {
            rows[t].push((k as u32, ring.one()));
        }
        apply_inverse_rows(ring, &out_elim, &mut rows);
        // D'^T = (∂_p P^{-1} E_T)^T, with rows indexed by the tail.
        let incoming_t = incoming.transpose();
        let mut dt: Vec<Vec<(u32, R::E)>> = vec![Vec::new(); tail.len()];
        for (x, row) in rows.iter().enumerate() {
            for (k, v) in row {
                dt[*k as usize] = merge_add(ring, &dt[*k as usize], &incoming_t.data[x], v);
            }
        }
        let dt = SparseMatrix { rows: tail.len(), cols: incoming.rows, data: dt };
        let kernel = eliminate(ring, &dt, true).expect("no overflow in exact arithmetic");
        let mut kernel_pivot = vec![false; tail.len()];
        for p in &kernel.pivots {
            kernel_pivot[p.row] = true;
        }
        let free = (0..tail.len()).filter(|&k| !kernel_pivot[k]).collect();
        Presentation { ring: ring.clone(), dim, outgoing: out_elim, torsion, tail, kernel, free }
    }

    pub fn group(&self) -> HomologyGroup {
        let orders: Vec<BigInt> = self.torsion.iter().map(|(_, d)| self.ring.order(d)).collect();
        HomologyGroup::new(self.free.len(), &orders)
    }

    pub fn generator_count(&self) -> usize {
        self.torsion.len() + self.free.len()
    }

    /// Order of each generator; `None` for free generators.
    pub fn orders(&self) -> Vec<Option<R::E>> {
        self.torsion.iter().map(|(_, d)| Some(d.clone())).chain(self.free.iter().map(|_| None)).collect()
    }

    /// Cycle representatives of the generators, as dense vectors.
    pub fn generators(&self) -> Vec<Vec<R::E>> {
        let ring = &self.ring;
        let mut out = Vec::new();
        for (row, _) in &self.torsion {
            let mut v = vec![ring.zero(); self.dim];
            v[*row] = ring.one();
            self.outgoing.apply_inverse(ring, &mut v).unwrap();
            out.push(v);
        }
        for &k in &self.free {
            let mut u = vec![ring.zero(); self.tail.len()];
            u[k] = ring.one();
            apply_transpose(ring, &self.kernel, &mut u);
            let mut v = vec![ring.zero(); self.dim];
            for (i, &t) in self.tail.iter().enumerate() {
                v[t] = u[i].clone();
            }
            self.outgoing.apply_inverse(ring, &mut v).unwrap();
            out.push(v);
        }
        out
    }

    /// Coordinates of the class of a cycle in terms of the generators.
    pub fn coordinates(&self, z: &[R::E]) -> Vec<R::E> {
        let ring = &self.ring;
        let mut y = z.to_vec();
        self.outgoing.apply(ring, &mut y).unwrap();
        let mut out: Vec<R::E> = self.torsion.iter().map(|(row, d)| ring.div_rem(&y[*row], d).unwrap().1).collect();
        let mut u: Vec<R::E> = self.tail.iter().map(|&t| y[t].clone()).collect();
        apply_inverse_transpose(ring, &self.kernel, &mut u);
        out.extend(self.free.iter().map(|&k| u[k].clone()));
        out
    }
}

/// A homomorphism between presented groups, column `j` holding the
/// coordinates of the image of source generator `j`.
pub struct PresentedMap<R: Coeffs> {
    pub ring: R,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    pub target_orders: Vec<Option<R::E>>,
    pub columns: Vec<Vec<R::E>>,
}

/// Sparse matrix-vector product.
pub fn mat_vec<R: Euclid>(ring: &R, m: &SparseMatrix<R::E>, v: &[R::E]) -> Vec<R::E> {
    m.data
        .iter()
        .map(|row| {
            row.iter().fold(ring.zero(), |acc, (c, x)| ring.add(&acc, &ring.mul(x, &v[*c as usize]).unwrap()).unwrap())
        })
        .collect()
}

impl<R: Coeffs + Clone> PresentedMap<R> {
    /// The map on homology induced by the chain map `f` (target degree-`p`
    /// chains × source degree-`p` chains).
    pub fn induced(src: &Presentation<R>, tgt: &Presentation<R>, f: &SparseMatrix<R::E>) -> PresentedMap<R> {
        let ring = &src.ring;
        let columns = src.generators().iter().map(|z| tgt.coordinates(&mat_vec(ring, f, z))).collect();
        PresentedMap {
            ring: ring.clone(),
            source: src.group(),
            target: tgt.group(),
            target_orders: tgt.orders(),
            columns,
        }
    }

    pub fn compose(&self, first: &PresentedMap<R>) -> PresentedMap<R> {
        let ring = &self.ring;
        let columns = first
            .columns
            .iter()
            .map(|c| {
                let mut out = vec![ring.zero(); self.target_orders.len()];
                for (j, x) in c.iter().enumerate() {
                    for (i, y) in self.columns[j].iter().enumerate() {
                        out[i] = ring.add(&out[i], &ring.mul(x, y).unwrap()).unwrap();
                    }
                }
                self.reduce(out)
            })
            .collect();
        PresentedMap {
            ring: ring.clone(),
            source: first.source.clone(),
            target: self.target.clone(),
            target_orders: self.target_orders.clone(),
            columns,
        }
    }

    fn reduce(&self, mut v: Vec<R::E>) -> Vec<R::E> {
        for (x, o) in v.iter_mut().zip(&self.target_orders) {
            if let Some(d) = o {
                *x = self.ring.div_rem(x, d).unwrap().1;
            }
        }
        v
    }

    pub fn is_surjective(&self) -> bool {
        let ring = &self.ring;
        let rows = self.target_orders.len();
        let mut triplets = Vec::new();
        for (j, col) in self.columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                if !ring.is_zero(x) {
                    triplets.push((i, j, x.clone()));
                }
            }
        }
        let mut extra = self.columns.len();
        for (i, o) in self.target_orders.iter().enumerate() {
            if let Some(d) = o {
                triplets.push((i, extra, d.clone()));
                extra += 1;
            }
        }
        let m = SparseMatrix::from_triplets(rows, extra, triplets);
        let e = eliminate(ring, &m, false).unwrap();
        e.rank() == rows && e.pivots.iter().all(|p| ring.is_unit(&p.value))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source == self.target && self.is_surjective()
    }

    /// Whether this is the identity of a group presented with the same
    /// generators on both sides.
    pub fn is_identity(&self) -> bool {
        let ring = &self.ring;
        if self.columns.len() != self.target_orders.len() {
            return false;
        }
        self.columns.iter().enumerate().all(|(j, col)| {
            col.iter().enumerate().all(|(i, x)| {
                let want = if i == j { ring.one() } else { ring.zero() };
                let diff = ring.sub(x, &want).unwrap();
                match &self.target_orders[i] {
                    Some(d) => ring.is_zero(&ring.div_rem(&diff, d).unwrap().1),
                    None => ring.is_zero(&diff),
                }
            })
        })
    }
}

/// Presentation of `H_p` of a complex in the arithmetic `ring`.
pub fn presentation<R: Coeffs + Clone>(ring: &R, c: &ChainComplex, p: i64) -> Result<Presentation<R>> {
    if p < c.lo() || p > c.hi() {
        return Err(Error::OutOfRange(alloc::format!("degree {p} outside the complex")));
    }
    let incoming = embed_matrix(ring, &c.boundary_or_zero(p));
    let outgoing = embed_matrix(ring, &c.boundary_or_zero(p + 1));
    Ok(Presentation::new(ring, c.rank(p), &incoming, &outgoing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::MatrixBuilder;
    use crate::ring::Ring;
    use alloc::string::ToString;
    use num_traits::Zero;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn two_term(ring: &Ring, entries: &[&[i64]]) -> ChainComplex {
        let rows = entries.len();
        let cols = entries[0].len();
        let mut b = MatrixBuilder::new(rows, cols);
        for (i, r) in entries.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                b.push(i, j, q(*v));
            }
        }
        ChainComplex::new(ring, 0, vec![rows, cols], vec![b.build(ring).unwrap()]).unwrap()
    }

    #[test]
    fn single_group() {
        let r = Ring::integers(0);
        let c = ChainComplex::new(&r, 0, vec![1], vec![]).unwrap();
        assert_eq!(complex_homology(&c, None).unwrap(), vec![(0, HomologyGroup::free(1))]);
    }

    #[test]
    fn multiplication_by_two() {
        let r = Ring::integers(0);
        let c = two_term(&r, &[&[2]]);
        let h = complex_homology(&c, None).unwrap();
        assert_eq!(h, vec![(0, HomologyGroup::from_ints(0, &[2])), (1, HomologyGroup::zero())]);
        let rq = Ring::rationals(0);
        let c = two_term(&rq, &[&[2]]);
        assert!(complex_homology(&c, None).unwrap().iter().all(|(_, g)| g.is_zero()));
        let f2 = Ring::parse("Fp:2", "0").unwrap();
        let c = two_term(&f2, &[&[2]]);
        let h = complex_homology(&c, None).unwrap();
        assert_eq!(h, vec![(0, HomologyGroup::free(1)), (1, HomologyGroup::free(1))]);
    }

    #[test]
    fn universal_coefficients() {
        // Z --(x6)--> Z with coefficients in Z/4: H_0 = Z/2, H_1 = Z/2
        let r = Ring::parse("Zmod:4", "0").unwrap();
        let c = two_term(&r, &[&[6]]);
        let h = complex_homology(&c, None).unwrap();
        assert_eq!(h, vec![(0, HomologyGroup::from_ints(0, &[2])), (1, HomologyGroup::from_ints(0, &[2]))]);
        let c = two_term(&r, &[&[0]]);
        let h = complex_homology(&c, None).unwrap();
        assert_eq!(h, vec![(0, HomologyGroup::from_ints(0, &[4])), (1, HomologyGroup::from_ints(0, &[4]))]);
    }

    #[test]
    fn through_limit() {
        let r = Ring::integers(0);
        let c = two_term(&r, &[&[2]]);
        assert_eq!(complex_homology(&c, Some(0)).unwrap().len(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::zero().to_string(), "0");
        assert_eq!(HomologyGroup::from_ints(1, &[3, 2]).to_string(), "Z^1 + Z/6");
        assert_eq!(HomologyGroup::from_ints(0, &[2, 4]).to_string(), "Z/2 + Z/4");
    }

    // A small complex with torsion and free homology in the middle degree:
    // Z^2 --[[2,0],[0,0],[0,0]]--> Z^3 --[0,0,1]--> Z
    fn middle() -> ChainComplex {
        let r = Ring::integers(0);
        let mut d1 = MatrixBuilder::new(1, 3);
        d1.push(0, 2, q(1));
        let mut d2 = MatrixBuilder::new(3, 2);
        d2.push(0, 0, q(2));
        ChainComplex::new(&r, 0, vec![1, 3, 2], vec![d1.build(&r).unwrap(), d2.build(&r).unwrap()]).unwrap()
    }

    #[test]
    fn presentations() {
        let c = middle();
        let p = presentation(&BigInts, &c, 1).unwrap();
        assert_eq!(p.group(), HomologyGroup::from_ints(1, &[2]));
        assert_eq!(complex_homology(&c, None).unwrap()[1].1, p.group());
        let gens = p.generators();
        assert_eq!(gens.len(), 2);
        for (j, g) in gens.iter().enumerate() {
            let mut c = p.coordinates(g);
            if let Some(Some(d)) = p.orders().get(0) {
                c[0] = BigInts.div_rem(&c[0], d).unwrap().1;
            }
            let unit: Vec<BigInt> = (0..2).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect();
            assert_eq!(c, unit);
        }
        // the boundary (2,0,0) has zero class
        let z = vec![BigInt::from(2), BigInt::zero(), BigInt::zero()];
        assert!(p.coordinates(&z).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn maps() {
        let c = middle();
        let p = presentation(&BigInts, &c, 1).unwrap();
        let id = SparseMatrix::from_triplets(3, 3, (0..3).map(|i| (i, i, BigInt::one())));
        let m = PresentedMap::induced(&p, &p, &id);
        assert!(m.is_identity() && m.is_isomorphism());
        // multiplication by 3 is an automorphism of Z/2 but not of Z
        let three = SparseMatrix::from_triplets(3, 3, (0..3).map(|i| (i, i, BigInt::from(3))));
        let m = PresentedMap::induced(&p, &p, &three);
        assert!(!m.is_identity() && !m.is_surjective());
        // projection onto the torsion generator
        let proj = SparseMatrix::from_triplets(3, 3, [(0, 0, BigInt::one())]);
        let m = PresentedMap::induced(&p, &p, &proj);
        assert!(!m.is_surjective());
        assert!(m.compose(&m).columns == m.columns);
    }
}
