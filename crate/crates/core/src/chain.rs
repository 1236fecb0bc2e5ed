//! Finite chain complexes of free modules with sparse boundary matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{BigInts, Euclid, Overflow, PrimeField, Rationals, SmallInts, SparseMatrix};
use crate::ring::{Ring, RingKind};

/// A complex `C_lo <- ... <- C_hi`. Matrix entries are canonical elements of
/// `ring.working()`; homology is reported with coefficients in `ring`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainComplex {
    ring: Ring,
    lo: i64,
    ranks: Vec<usize>,
    /// `boundaries[k]` is the map out of degree `lo + k + 1`.
    boundaries: Vec<SparseMatrix<BigRational>>,
    labels: Option<Vec<Vec<String>>>,
}

/// Column-wise builder for one boundary matrix.
#[derive(Debug, Clone)]
pub struct MatrixBuilder {
    rows: usize,
    cols: usize,
    triplets: Vec<(usize, usize, BigRational)>,
}

impl MatrixBuilder {
    pub fn new(rows: usize, cols: usize) -> MatrixBuilder {
        MatrixBuilder { rows, cols, triplets: Vec::new() }
    }

    /// Records entry `(row, col)`; repeated positions are summed.
    pub fn push(&mut self, row: usize, col: usize, v: BigRational) {
        debug_assert!(row < self.rows && col < self.cols);
        if !v.is_zero() {
            self.triplets.push((row, col, v));
        }
    }

    /// Finishes, reducing entries into `ring` and dropping zeros.
    pub fn build(mut self, ring: &Ring) -> Result<SparseMatrix<BigRational>> {
        self.triplets.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut data: Vec<Vec<(u32, BigRational)>> = (0..self.rows).map(|_| Vec::new()).collect();
        let mut acc: Option<(usize, usize, BigRational)> = None;
        let flush = |e: Option<(usize, usize, BigRational)>, data: &mut Vec<Vec<(u32, BigRational)>>| -> Result<()> {
            if let Some((r, c, v)) = e {
                let v = ring.reduce(v)?;
                if !v.is_zero() {
                    data[r].push((c as u32, v.as_rational().clone()));
                }
            }
            Ok(())
        };
        for (r, c, v) in self.triplets {
            match &mut acc {
                Some((ar, ac, av)) if *ar == r && *ac == c => *av += v,
                _ => {
                    flush(acc.take(), &mut data)?;
                    acc = Some((r, c, v));
                }
            }
        }
        flush(acc, &mut data)?;
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, data })
    }
}

pub(crate) fn to_integers(m: &SparseMatrix<BigRational>) -> Option<SparseMatrix<BigInt>> {
    m.try_map(|q| q.is_integer().then(|| q.to_integer()))
}

fn product_is_zero<R: Euclid>(
    ring: &R,
    a: &SparseMatrix<R::E>,
    b: &SparseMatrix<R::E>,
) -> core::result::Result<bool, Overflow> {
    let mut acc: Vec<Option<R::E>> = (0..b.cols).map(|_| None).collect();
    let mut touched = Vec::new();
    for row in &a.data {
        for (k, x) in row {
            for (c, y) in &b.data[*k as usize] {
                let c = *c as usize;
                let t = ring.mul(x, y)?;
                acc[c] = Some(match acc[c].take() {
                    Some(v) => ring.add(&v, &t)?,
                    None => {
                        touched.push(c);
                        t
                    }
                });
            }
        }
        for c in touched.drain(..) {
            if let Some(v) = acc[c].take() {
                if !ring.is_zero(&v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether `a * b = 0` in the given ring kind.
pub(crate) fn composite_vanishes(a: &SparseMatrix<BigRational>, b: &SparseMatrix<BigRational>, kind: RingKind) -> bool {
    if let RingKind::PrimeField(p) = kind {
        let f = PrimeField { p };
        let conv = |m: &SparseMatrix<BigRational>| m.map(|q| q.to_integer().to_u64().unwrap());
        return product_is_zero(&f, &conv(a), &conv(b)).unwrap();
    }
    match (to_integers(a), to_integers(b)) {
        (Some(x), Some(y)) => {
            let small = (x.try_map(|v| v.to_i64()), y.try_map(|v| v.to_i64()));
            if let (Some(xs), Some(ys)) = small {
                if let Ok(z) = product_is_zero(&SmallInts, &xs, &ys) {
                    return z;
                }
            }
            product_is_zero(&BigInts, &x, &y).unwrap()
        }
        _ => product_is_zero(&Rationals, a, b).unwrap(),
    }
}

impl ChainComplex {
    /// Assembles a complex from its boundary maps, checking shapes and
    /// that consecutive boundaries compose to zero.
    pub fn new(
        ring: &Ring,
        lo: i64,
        ranks: Vec<usize>,
        boundaries: Vec<SparseMatrix<BigRational>>,
    ) -> Result<ChainComplex> {
        let c = ChainComplex::new_unchecked(ring, lo, ranks, boundaries)?;
        c.check_square_zero()?;
        Ok(c)
    }

    /// As [`ChainComplex::new`] without the composite check.
    pub fn new_unchecked(
        ring: &Ring,
        lo: i64,
        ranks: Vec<usize>,
        boundaries: Vec<SparseMatrix<BigRational>>,
    ) -> Result<ChainComplex> {
        if boundaries.len() + 1 != ranks.len().max(1) {
            return Err(Error::Malformed(format!(
                "{} ranks need {} boundaries, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, m) in boundaries.iter().enumerate() {
            if m.rows != ranks[k] || m.cols != ranks[k + 1] {
                return Err(Error::Malformed(format!(
                    "boundary out of degree {} is {}x{}, expected {}x{}",
                    lo + k as i64 + 1,
                    m.rows,
                    m.cols,
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        Ok(ChainComplex { ring: ring.clone(), lo, ranks, boundaries, labels: None })
    }

    pub fn check_square_zero(&self) -> Result<()> {
        let kind = self.ring.working().kind();
        for k in 1..self.boundaries.len() {
            if !composite_vanishes(&self.boundaries[k - 1], &self.boundaries[k], kind) {
                return Err(Error::NotAComplex(self.lo + k as i64 + 1));
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<Vec<String>>) -> Result<ChainComplex> {
        if labels.len() != self.ranks.len() || labels.iter().zip(&self.ranks).any(|(l, r)| l.len() != *r) {
            return Err(Error::Malformed(String::from("label counts do not match ranks")));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, p: i64) -> usize {
        if p < self.lo || p > self.hi() {
            0
        } else {
            self.ranks[(p - self.lo) as usize]
        }
    }

    /// The boundary out of degree `p`, or `None` when it is the zero map
    /// between the degrees' (possibly empty) chain groups.
    pub fn boundary(&self, p: i64) -> Option<&SparseMatrix<BigRational>> {
        if p <= self.lo || p > self.hi() {
            None
        } else {
            Some(&self.boundaries[(p - self.lo - 1) as usize])
        }
    }

    /// The boundary out of degree `p` as an owned matrix, zero outside the range.
    pub fn boundary_or_zero(&self, p: i64) -> SparseMatrix<BigRational> {
        self.boundary(p).cloned().unwrap_or_else(|| SparseMatrix::zero(self.rank(p - 1), self.rank(p)))
    }

    pub fn labels(&self, p: i64) -> Option<&[String]> {
        let l = self.labels.as_ref()?;
        if p < self.lo || p > self.hi() {
            None
        } else {
            Some(&l[(p - self.lo) as usize])
        }
    }

    /// Restriction to the basis vectors `keep[p - lo]` in each degree. Used
    /// for subcomplexes (when the kept span is closed under the boundary)
    /// and for quotients by such subcomplexes (keeping the complement).
    pub fn restrict(&self, keep: &[Vec<usize>]) -> Result<ChainComplex> {
        if keep.len() != self.ranks.len() {
            return Err(Error::Malformed(String::from("one index list per degree expected")));
        }
        let mut position: Vec<Vec<Option<u32>>> = Vec::new();
        for (k, idx) in keep.iter().enumerate() {
            let mut pos = alloc::vec![None; self.ranks[k]];
            for (new, &old) in idx.iter().enumerate() {
                pos[old] = Some(new as u32);
            }
            position.push(pos);
        }
        let mut boundaries = Vec::new();
        for (k, m) in self.boundaries.iter().enumerate() {
            let rows = &keep[k];
            let colpos = &position[k + 1];
            let data = rows
                .iter()
                .map(|&r| m.data[r].iter().filter_map(|(c, v)| colpos[*c as usize].map(|nc| (nc, v.clone()))).collect())
                .collect();
            boundaries.push(SparseMatrix { rows: rows.len(), cols: keep[k + 1].len(), data });
        }
        let ranks = keep.iter().map(Vec::len).collect();
        let mut out = ChainComplex::new_unchecked(&self.ring, self.lo, ranks, boundaries)?;
        if let Some(labels) = &self.labels {
            out.labels =
                Some(keep.iter().zip(labels).map(|(idx, l)| idx.iter().map(|&i| l[i].clone()).collect()).collect());
        }
        Ok(out)
    }

    /// Whether the span of `keep` is closed under the boundary.
    pub fn is_subcomplex(&self, keep: &[Vec<usize>]) -> bool {
        self.boundaries.iter().enumerate().all(|(k, m)| {
            let mut inside = alloc::vec![false; self.ranks[k]];
            for &r in &keep[k] {
                inside[r] = true;
            }
            let mut kept_col = alloc::vec![false; self.ranks[k + 1]];
            for &c in &keep[k + 1] {
                kept_col[c] = true;
            }
            m.data.iter().enumerate().all(|(r, row)| inside[r] || row.iter().all(|(c, _)| !kept_col[*c as usize]))
        })
    }

    /// Sparse triplets `(row, col, value)` of the boundary out of degree `p`.
    pub fn triplets(&self, p: i64) -> Vec<(usize, usize, BigRational)> {
        match self.boundary(p) {
            None => Vec::new(),
            Some(m) => m
                .data
                .iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c as usize, v.clone())))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn shapes_and_square_zero() {
        let r = Ring::integers(0);
        let mut d1 = MatrixBuilder::new(1, 2);
        d1.push(0, 0, q(1));
        d1.push(0, 1, q(1));
        let mut d2 = MatrixBuilder::new(2, 1);
        d2.push(0, 0, q(1));
        d2.push(1, 0, q(-1));
        let c = ChainComplex::new(
            &r,
            0,
            alloc::vec![1, 2, 1],
            alloc::vec![d1.clone().build(&r).unwrap(), d2.build(&r).unwrap()],
        );
        assert!(c.is_ok());
        let mut bad = MatrixBuilder::new(2, 1);
        bad.push(0, 0, q(1));
        let c = ChainComplex::new(
            &r,
            0,
            alloc::vec![1, 2, 1],
            alloc::vec![d1.clone().build(&r).unwrap(), bad.build(&r).unwrap()],
        );
        assert_eq!(c.unwrap_err(), Error::NotAComplex(2));
        let c = ChainComplex::new(&r, 0, alloc::vec![1, 3], alloc::vec![d1.build(&r).unwrap()]);
        assert!(matches!(c, Err(Error::Malformed(_))));
    }

    #[test]
    fn builder_sums_and_reduces() {
        let r = Ring::new(RingKind::PrimeField(3), q(0)).unwrap();
        let mut b = MatrixBuilder::new(1, 2);
        b.push(0, 0, q(2));
        b.push(0, 0, q(1));
        b.push(0, 1, q(5));
        let m = b.build(&r).unwrap();
        assert_eq!(m.data[0], alloc::vec![(1, q(2))]);
    }
}
