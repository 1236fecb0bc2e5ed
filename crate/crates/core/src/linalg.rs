//! Sparse exact linear algebra over Euclidean rings: Gaussian/Smith
//! elimination with an optional log of row operations.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arithmetic failed to fit the element representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// A Euclidean domain (or field) as needed by elimination. Arithmetic is
/// fallible so that fixed-width integers can signal overflow.
pub trait Euclid {
    type E: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_unit(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Result<Self::E, Overflow>;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Result<Self::E, Overflow>;
    fn neg(&self, a: &Self::E) -> Result<Self::E, Overflow>;
    /// Compares Euclidean norms.
    fn norm_cmp(&self, a: &Self::E, b: &Self::E) -> Ordering;
    /// `a = q b + r` with `r` of smaller norm than `b`.
    fn div_rem(&self, a: &Self::E, b: &Self::E) -> Result<(Self::E, Self::E), Overflow>;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Result<Self::E, Overflow> {
        self.add(a, &self.neg(b)?)
    }
}

/// The integers in `i64`, with checked arithmetic.
#[derive(Debug, Clone, Copy, Default)]
pub struct SmallInts;

impl Euclid for SmallInts {
    type E = i64;
    fn zero(&self) -> i64 {
        0
    }
    fn one(&self) -> i64 {
        1
    }
    fn is_zero(&self, a: &i64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &i64) -> bool {
        *a == 1 || *a == -1
    }
    fn add(&self, a: &i64, b: &i64) -> Result<i64, Overflow> {
        a.checked_add(*b).ok_or(Overflow)
    }
    fn mul(&self, a: &i64, b: &i64) -> Result<i64, Overflow> {
        a.checked_mul(*b).ok_or(Overflow)
    }
    fn neg(&self, a: &i64) -> Result<i64, Overflow> {
        a.checked_neg().ok_or(Overflow)
    }
    fn norm_cmp(&self, a: &i64, b: &i64) -> Ordering {
        a.unsigned_abs().cmp(&b.unsigned_abs())
    }
    fn div_rem(&self, a: &i64, b: &i64) -> Result<(i64, i64), Overflow> {
        let q = a.checked_div_euclid(*b).ok_or(Overflow)?;
        let r = a.checked_rem_euclid(*b).ok_or(Overflow)?;
        // Balanced remainder: |r| <= |b|/2.
        if r.unsigned_abs() * 2 > b.unsigned_abs() {
            let r2 = r.checked_sub(b.abs()).ok_or(Overflow)?;
            let q2 = q.checked_add(b.signum()).ok_or(Overflow)?;
            Ok((q2, r2))
        } else {
            Ok((q, r))
        }
    }
}

/// Arbitrary-precision integers.
#[derive(Debug, Clone, Copy, Default)]
pub struct BigInts;

impl Euclid for BigInts {
    type E = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> Result<BigInt, Overflow> {
        Ok(a + b)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> Result<BigInt, Overflow> {
        Ok(a * b)
    }
    fn neg(&self, a: &BigInt) -> Result<BigInt, Overflow> {
        Ok(-a)
    }
    fn norm_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt), Overflow> {
        let (q, r) = a.div_mod_floor(b);
        // floor division leaves r with the sign of b; balance it
        let twice: BigInt = &r * 2;
        if twice.magnitude() > b.magnitude() {
            Ok((q + 1, r - b))
        } else {
            Ok((q, r))
        }
    }
}

/// The prime field `F_p` with `p < 2^32`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn inverse(&self, a: u64) -> u64 {
        let mut e = self.p - 2;
        let mut base = a % self.p;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Euclid for PrimeField {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn add(&self, a: &u64, b: &u64) -> Result<u64, Overflow> {
        Ok((a + b) % self.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> Result<u64, Overflow> {
        Ok(a * b % self.p)
    }
    fn neg(&self, a: &u64) -> Result<u64, Overflow> {
        Ok((self.p - a) % self.p)
    }
    fn norm_cmp(&self, a: &u64, b: &u64) -> Ordering {
        (*a != 0).cmp(&(*b != 0))
    }
    fn div_rem(&self, a: &u64, b: &u64) -> Result<(u64, u64), Overflow> {
        Ok((a * self.inverse(*b) % self.p, 0))
    }
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Euclid for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> Result<BigRational, Overflow> {
        Ok(a + b)
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> Result<BigRational, Overflow> {
        Ok(a * b)
    }
    fn neg(&self, a: &BigRational) -> Result<BigRational, Overflow> {
        Ok(-a)
    }
    fn norm_cmp(&self, a: &BigRational, b: &BigRational) -> Ordering {
        (!a.is_zero()).cmp(&!b.is_zero())
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> Result<(BigRational, BigRational), Overflow> {
        Ok((a / b, BigRational::zero()))
    }
}

/// Row-major sparse matrix; each row is sorted by column with no zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<(u32, E)>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn zero(rows: usize, cols: usize) -> SparseMatrix<E> {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Builds from triplets; entries must be nonzero and positions distinct.
    pub fn from_triplets(rows: usize, cols: usize, t: impl IntoIterator<Item = (usize, usize, E)>) -> Self {
        let mut m = SparseMatrix::zero(rows, cols);
        for (r, c, v) in t {
            m.data[r].push((c as u32, v));
        }
        for row in &mut m.data {
            row.sort_by_key(|e| e.0);
        }
        m
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> SparseMatrix<E> {
        let mut out = SparseMatrix::zero(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out.data[*c as usize].push((r as u32, v.clone()));
            }
        }
        out
    }

    pub fn map<F, T: Clone>(&self, f: F) -> SparseMatrix<T>
    where
        F: Fn(&E) -> T,
    {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|row| row.iter().map(|(c, v)| (*c, f(v))).collect()).collect(),
        }
    }

    pub fn try_map<F, T: Clone>(&self, f: F) -> Option<SparseMatrix<T>>
    where
        F: Fn(&E) -> Option<T>,
    {
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut out = Vec::with_capacity(row.len());
            for (c, v) in row {
                out.push((*c, f(v)?));
            }
            data.push(out);
        }
        Some(SparseMatrix { rows: self.rows, cols: self.cols, data })
    }
}

/// `row[target] += factor * row[source]`.
#[derive(Debug, Clone, PartialEq)]
pub struct RowOp<E> {
    pub target: u32,
    pub source: u32,
    pub factor: E,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Pivot<E> {
    pub row: usize,
    pub col: usize,
    pub value: E,
}

/// Outcome of eliminating `A`: an invertible `P` (a product of the logged
/// row operations) and an invertible `Q` with `P A Q` diagonal, the
/// nonzero diagonal entries sitting at the pivot positions.
#[derive(Debug, Clone)]
pub struct Elimination<E> {
    pub rows: usize,
    pub cols: usize,
    pub pivots: Vec<Pivot<E>>,
    pub log: Option<Vec<RowOp<E>>>,
}

impl<E: Clone> Elimination<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// `v ↦ P v`.
    pub fn apply<R: Euclid<E = E>>(&self, ring: &R, v: &mut [E]) -> Result<(), Overflow> {
        for op in self.log.as_ref().expect("elimination was run without a log") {
            let (t, s) = (op.target as usize, op.source as usize);
            if !ring.is_zero(&v[s]) {
                v[t] = ring.add(&v[t], &ring.mul(&op.factor, &v[s])?)?;
            }
        }
        Ok(())
    }

    /// `v ↦ P^{-1} v`.
    pub fn apply_inverse<R: Euclid<E = E>>(&self, ring: &R, v: &mut [E]) -> Result<(), Overflow> {
        for op in self.log.as_ref().expect("elimination was run without a log").iter().rev() {
            let (t, s) = (op.target as usize, op.source as usize);
            if !ring.is_zero(&v[s]) {
                v[t] = ring.sub(&v[t], &ring.mul(&op.factor, &v[s])?)?;
            }
        }
        Ok(())
    }
}

struct State<'a, R: Euclid> {
    ring: &'a R,
    rows: Vec<Vec<(u32, R::E)>>,
    col_rows: Vec<BTreeSet<u32>>,
    with_unit: BTreeSet<(usize, u32)>,
    without_unit: BTreeSet<u32>,
    log: Option<Vec<RowOp<R::E>>>,
}

impl<'a, R: Euclid> State<'a, R> {
    fn index_row(&mut self, r: u32) {
        let row = &self.rows[r as usize];
        if row.is_empty() {
            return;
        }
        if row.iter().any(|(_, v)| self.ring.is_unit(v)) {
            self.with_unit.insert((row.len(), r));
        } else {
            self.without_unit.insert(r);
        }
    }

    fn unindex_row(&mut self, r: u32) {
        let len = self.rows[r as usize].len();
        self.with_unit.remove(&(len, r));
        self.without_unit.remove(&r);
    }

    fn entry(&self, r: u32, c: u32) -> Option<&R::E> {
        let row = &self.rows[r as usize];
        row.binary_search_by_key(&c, |e| e.0).ok().map(|i| &row[i].1)
    }

    /// `row[t] += f * row[s]`, maintaining the column index.
    fn row_op(&mut self, t: u32, s: u32, f: R::E) -> Result<(), Overflow> {
        if self.ring.is_zero(&f) {
            return Ok(());
        }
        self.unindex_row(t);
        let ring = self.ring;
        let dst = core::mem::take(&mut self.rows[t as usize]);
        let src = &self.rows[s as usize];
        let mut out = Vec::with_capacity(dst.len() + src.len());
        let (mut i, mut j) = (0, 0);
        while i < dst.len() || j < src.len() {
            let take_dst = j == src.len() || (i < dst.len() && dst[i].0 < src[j].0);
            let take_src = i == dst.len() || (j < src.len() && src[j].0 < dst[i].0);
            if take_dst {
                out.push(dst[i].clone());
                i += 1;
            } else if take_src {
                let c = src[j].0;
                out.push((c, ring.mul(&f, &src[j].1)?));
                self.col_rows[c as usize].insert(t);
                j += 1;
            } else {
                let c = dst[i].0;
                let v = ring.add(&dst[i].1, &ring.mul(&f, &src[j].1)?)?;
                if ring.is_zero(&v) {
                    self.col_rows[c as usize].remove(&t);
                } else {
                    out.push((c, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.rows[t as usize] = out;
        self.index_row(t);
        if let Some(log) = &mut self.log {
            log.push(RowOp { target: t, source: s, factor: f });
        }
        Ok(())
    }

    /// Column operation `col[t] -= q * col[s]` (not logged).
    fn col_op(&mut self, t: u32, s: u32, q: &R::E) -> Result<(), Overflow> {
        let ring = self.ring;
        let rows: Vec<u32> = self.col_rows[s as usize].iter().copied().collect();
        for r in rows {
            let a = self.entry(r, s).unwrap().clone();
            let delta = ring.neg(&ring.mul(q, &a)?)?;
            self.unindex_row(r);
            let row = &mut self.rows[r as usize];
            match row.binary_search_by_key(&t, |e| e.0) {
                Ok(i) => {
                    let v = ring.add(&row[i].1, &delta)?;
                    if ring.is_zero(&v) {
                        row.remove(i);
                        self.col_rows[t as usize].remove(&r);
                    } else {
                        row[i].1 = v;
                    }
                }
                Err(i) => {
                    row.insert(i, (t, delta));
                    self.col_rows[t as usize].insert(r);
                }
            }
            self.index_row(r);
        }
        Ok(())
    }

    fn retire(&mut self, r: u32, c: u32) -> R::E {
        self.unindex_row(r);
        let row = core::mem::take(&mut self.rows[r as usize]);
        let mut value = None;
        for (cc, v) in row {
            self.col_rows[cc as usize].remove(&r);
            if cc == c {
                value = Some(v);
            }
        }
        value.expect("pivot entry present")
    }

    fn unit_pivot(&self) -> Option<(u32, u32)> {
        let &(_, r) = self.with_unit.first()?;
        let c = self.rows[r as usize]
            .iter()
            .filter(|(_, v)| self.ring.is_unit(v))
            .min_by_key(|(c, _)| self.col_rows[*c as usize].len())
            .map(|(c, _)| *c)?;
        Some((r, c))
    }

    fn smallest_entry(&self, cands: impl Iterator<Item = (u32, u32)>) -> Option<(u32, u32)> {
        let mut best: Option<(u32, u32, &R::E)> = None;
        for (r, c) in cands {
            let v = self.entry(r, c).unwrap();
            if best.map_or(true, |(_, _, b)| self.ring.norm_cmp(v, b) == Ordering::Less) {
                best = Some((r, c, v));
            }
        }
        best.map(|(r, c, _)| (r, c))
    }
}

/// Eliminates `a` to diagonal form. When `record` is set, the row
/// operations are kept so that `P` can be applied later.
pub fn eliminate<R: Euclid>(ring: &R, a: &SparseMatrix<R::E>, record: bool) -> Result<Elimination<R::E>, Overflow> {
    let mut st = State {
        ring,
        rows: a.data.clone(),
        col_rows: vec![BTreeSet::new(); a.cols],
        with_unit: BTreeSet::new(),
        without_unit: BTreeSet::new(),
        log: record.then(Vec::new),
    };
    for (r, row) in st.rows.iter().enumerate() {
        for (c, _) in row {
            st.col_rows[*c as usize].insert(r as u32);
        }
    }
    for r in 0..a.rows as u32 {
        st.index_row(r);
    }
    let mut pivots = Vec::new();
    loop {
        if let Some((r, c)) = st.unit_pivot() {
            let p = st.entry(r, c).unwrap().clone();
            // for a unit p, -a/p is exact
            let others: Vec<u32> = st.col_rows[c as usize].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                let (q, rem) = ring.div_rem(st.entry(i, c).unwrap(), &p)?;
                debug_assert!(ring.is_zero(&rem));
                st.row_op(i, r, ring.neg(&q)?)?;
            }
            let value = st.retire(r, c);
            pivots.push(Pivot { row: r as usize, col: c as usize, value });
            continue;
        }
        // No unit entries remain: Euclidean steps on the smallest entry.
        let all = st.without_unit.iter().flat_map(|&r| st.rows[r as usize].iter().map(move |(c, _)| (r, *c)));
        let Some((mut r, mut c)) = st.smallest_entry(all) else {
            break;
        };
        loop {
            let p = st.entry(r, c).unwrap().clone();
            let others: Vec<u32> = st.col_rows[c as usize].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                let (q, _) = ring.div_rem(st.entry(i, c).unwrap(), &p)?;
                st.row_op(i, r, ring.neg(&q)?)?;
            }
            let cols: Vec<(u32, R::E)> = st.rows[r as usize].iter().filter(|(cc, _)| *cc != c).cloned().collect();
            for (cc, v) in cols {
                let (q, _) = ring.div_rem(&v, &p)?;
                if !ring.is_zero(&q) {
                    st.col_op(cc, c, &q)?;
                }
            }
            let row_done = st.rows[r as usize].len() == 1;
            let col_done = st.col_rows[c as usize].len() == 1;
            if row_done && col_done {
                let value = st.retire(r, c);
                pivots.push(Pivot { row: r as usize, col: c as usize, value });
                break;
            }
            let cands = st.rows[r as usize]
                .iter()
                .map(|(cc, _)| (r, *cc))
                .chain(st.col_rows[c as usize].iter().map(|&i| (i, c)))
                .filter(|&(i, cc)| (i, cc) != (r, c))
                .collect::<Vec<_>>();
            let (nr, nc) = st.smallest_entry(cands.into_iter()).unwrap();
            r = nr;
            c = nc;
        }
    }
    Ok(Elimination { rows: a.rows, cols: a.cols, pivots, log: st.log })
}

/// Sorted invariant factors (each dividing the next) of a diagonal matrix,
/// dropping units and zeros.
pub fn invariant_factors(diagonal: &[BigInt]) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diagonal.iter().map(|x| x.abs()).filter(|x| !x.is_zero() && !x.is_one()).collect();
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d.retain(|x| !x.is_one());
    d
}

/// Converts an integral rational to `i64` if it fits.
pub fn rational_to_i64(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Invariant factors and rank of an integer matrix, choosing `i64`
/// arithmetic when possible and falling back to big integers on overflow.
pub fn integer_snf(a: &SparseMatrix<BigInt>) -> (usize, Vec<BigInt>) {
    if let Some(small) = a.try_map(|x| x.to_i64()) {
        if let Ok(e) = eliminate(&SmallInts, &small, false) {
            let diag: Vec<BigInt> = e.pivots.iter().map(|p| BigInt::from(p.value)).collect();
            return (e.rank(), invariant_factors(&diag));
        }
    }
    let e = eliminate(&BigInts, a, false).expect("big integers do not overflow");
    let diag: Vec<BigInt> = e.pivots.iter().map(|p| p.value.clone()).collect();
    (e.rank(), invariant_factors(&diag))
}
