//! Exact coefficient rings with a distinguished parameter `delta`.
//!
//! Every element is stored as a reduced rational number in the canonical
//! form of its ring: integers have denominator one, residues live in
//! `0..m`. All arithmetic goes through a [`Ring`] context so that values
//! never leave canonical form.

use alloc::format;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The four supported kinds of coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingKind {
    Integers,
    Rationals,
    PrimeField(u64),
    IntegersMod(u64),
}

impl RingKind {
    pub fn is_field(&self) -> bool {
        matches!(self, RingKind::Rationals | RingKind::PrimeField(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match *self {
            RingKind::PrimeField(p) => Some(p),
            RingKind::IntegersMod(m) => Some(m),
            _ => None,
        }
    }

    /// Parses `Z`, `Q`, `Fp:<p>` or `Zmod:<m>`.
    pub fn parse(s: &str) -> Result<RingKind> {
        let s = s.trim();
        match s {
            "Z" | "ZZ" => return Ok(RingKind::Integers),
            "Q" | "QQ" => return Ok(RingKind::Rationals),
            _ => {}
        }
        let bad = || Error::InvalidRing(format!("cannot parse ring spec {s:?}"));
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        let value: u64 = tail.trim().parse().map_err(|_| bad())?;
        let kind = match head {
            "Fp" | "F" => RingKind::PrimeField(value),
            "Zmod" | "Z/" => RingKind::IntegersMod(value),
            _ => return Err(bad()),
        };
        kind.validate()?;
        Ok(kind)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            RingKind::PrimeField(p) if !is_prime(p) => Err(Error::InvalidRing(format!("{p} is not prime"))),
            RingKind::IntegersMod(m) if m < 2 => Err(Error::InvalidRing(format!("modulus {m} must be at least 2"))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Integers => write!(f, "Z"),
            RingKind::Rationals => write!(f, "Q"),
            RingKind::PrimeField(p) => write!(f, "Fp:{p}"),
            RingKind::IntegersMod(m) => write!(f, "Zmod:{m}"),
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in SMALL {
        if n % p == 0 {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mul(r, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A ring element in canonical form. Only meaningful together with the
/// [`Ring`] that produced it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem(BigRational);

impl RingElem {
    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// The integer value, when the element is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|i| i.to_i64())
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// A coefficient ring together with its parameter `delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    kind: RingKind,
    delta: RingElem,
}

impl Ring {
    /// Builds a ring; `delta` is reduced into canonical form.
    pub fn new(kind: RingKind, delta: BigRational) -> Result<Ring> {
        kind.validate()?;
        let mut ring = Ring { kind, delta: RingElem(BigRational::zero()) };
        ring.delta = ring.reduce(delta)?;
        Ok(ring)
    }

    pub fn integers(delta: i64) -> Ring {
        Ring::new(RingKind::Integers, BigRational::from_integer(delta.into())).unwrap()
    }

    pub fn rationals(delta: i64) -> Ring {
        Ring::new(RingKind::Rationals, BigRational::from_integer(delta.into())).unwrap()
    }

    /// Parses a ring spec string and a delta string such as `3`, `-2` or `1/2`.
    pub fn parse(spec: &str, delta: &str) -> Result<Ring> {
        let kind = RingKind::parse(spec)?;
        let q = parse_rational(delta)?;
        Ring::new(kind, q)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn delta(&self) -> &RingElem {
        &self.delta
    }

    /// The ring in which chain complexes are assembled. Composite moduli are
    /// lifted to the integers (with `delta` lifted to its canonical residue)
    /// so that homology can be computed integrally and reduced afterwards.
    pub fn working(&self) -> Ring {
        match self.kind {
            RingKind::IntegersMod(_) => Ring { kind: RingKind::Integers, delta: self.delta.clone() },
            _ => self.clone(),
        }
    }

    /// Brings an arbitrary rational into canonical form for this ring.
    pub fn reduce(&self, q: BigRational) -> Result<RingElem> {
        match self.kind {
            RingKind::Rationals => Ok(RingElem(q)),
            RingKind::Integers => {
                if q.is_integer() {
                    Ok(RingElem(q))
                } else {
                    Err(Error::NotInRing(format!("{q} in Z")))
                }
            }
            RingKind::PrimeField(m) | RingKind::IntegersMod(m) => {
                let m_big = BigInt::from(m);
                let num = q.numer().mod_floor(&m_big);
                let den = q.denom().mod_floor(&m_big);
                let inv = mod_inverse(&den, &m_big).ok_or_else(|| Error::NotInRing(format!("{q} mod {m}")))?;
                let v = (num * inv).mod_floor(&m_big);
                Ok(RingElem(BigRational::from_integer(v)))
            }
        }
    }

    fn reduce_int(&self, v: BigInt) -> RingElem {
        match self.kind {
            RingKind::PrimeField(m) | RingKind::IntegersMod(m) => {
                RingElem(BigRational::from_integer(v.mod_floor(&BigInt::from(m))))
            }
            _ => RingElem(BigRational::from_integer(v)),
        }
    }

    fn canon(&self, q: BigRational) -> RingElem {
        if q.is_integer() {
            self.reduce_int(q.to_integer())
        } else {
            self.reduce(q).expect("closed arithmetic stays in the ring")
        }
    }

    pub fn zero(&self) -> RingElem {
        RingElem(BigRational::zero())
    }

    pub fn one(&self) -> RingElem {
        self.reduce_int(BigInt::one())
    }

    pub fn from_int(&self, v: i64) -> RingElem {
        self.reduce_int(BigInt::from(v))
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.canon(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.canon(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        self.canon(-&a.0)
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        self.canon(&a.0 * &b.0)
    }

    pub fn pow(&self, a: &RingElem, e: u32) -> RingElem {
        let mut r = self.one();
        for _ in 0..e {
            r = self.mul(&r, a);
        }
        r
    }

    /// `delta^k`, the weight of `k` closed loops.
    pub fn delta_pow(&self, k: u32) -> RingElem {
        self.pow(&self.delta, k)
    }

    /// True iff `r` has a multiplicative inverse.
    pub fn is_unit(&self, r: &RingElem) -> bool {
        match self.kind {
            RingKind::Integers => r.0.is_integer() && r.0.numer().abs().is_one(),
            RingKind::Rationals | RingKind::PrimeField(_) => !r.is_zero(),
            RingKind::IntegersMod(m) => r.0.numer().gcd(&BigInt::from(m)).is_one(),
        }
    }

    pub fn inverse(&self, r: &RingElem) -> Option<RingElem> {
        if !self.is_unit(r) {
            return None;
        }
        match self.kind {
            RingKind::Integers => Some(r.clone()),
            RingKind::Rationals => Some(RingElem(r.0.recip())),
            RingKind::PrimeField(m) | RingKind::IntegersMod(m) => {
                let m_big = BigInt::from(m);
                mod_inverse(r.0.numer(), &m_big).map(|v| RingElem(BigRational::from_integer(v)))
            }
        }
    }

    /// Exact division `a / b`, defined when `b` divides `a` in this ring.
    pub fn divide(&self, a: &RingElem, b: &RingElem) -> Option<RingElem> {
        if b.is_zero() {
            return None;
        }
        match self.kind {
            RingKind::Integers => {
                let (q, r) = a.0.numer().div_rem(b.0.numer());
                r.is_zero().then(|| RingElem(BigRational::from_integer(q)))
            }
            RingKind::Rationals => Some(RingElem(&a.0 / &b.0)),
            _ => self.inverse(b).map(|inv| self.mul(a, &inv)),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<RingElem> {
        self.reduce(parse_rational(s)?)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (delta = {})", self.kind, self.delta)
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Parses `7`, `-3` or `1/2` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Malformed(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_rings() {
        let z = Ring::parse("Z", "0").unwrap();
        assert!(z.delta().is_zero());
        let q = Ring::parse("Q", "1").unwrap();
        assert!(q.is_unit(q.delta()));
        assert!(matches!(Ring::parse("Fp:4", "1"), Err(Error::InvalidRing(_))));
        assert!(matches!(Ring::parse("Zmod:1", "0"), Err(Error::InvalidRing(_))));
        assert!(Ring::parse("Z", "1/2").is_err());
        let f = Ring::parse("Fp:7", "-1").unwrap();
        assert_eq!(f.delta().to_i64(), Some(6));
        let h = Ring::parse("Fp:7", "1/2").unwrap();
        assert_eq!(h.delta().to_i64(), Some(4));
    }

    #[test]
    fn units() {
        let z = Ring::integers(0);
        assert!(!z.is_unit(&z.from_int(2)));
        assert!(z.is_unit(&z.from_int(-1)));
        let q = Ring::rationals(0);
        assert!(q.is_unit(&q.from_int(2)));
        assert!(!q.is_unit(&q.zero()));
        let z6 = Ring::parse("Zmod:6", "0").unwrap();
        let five = z6.from_int(5);
        assert!(z6.is_unit(&five));
        assert_eq!(z6.mul(&five, &five), z6.one());
        assert!(!z6.is_unit(&z6.from_int(4)));
    }

    #[test]
    fn primality() {
        let primes: std::vec::Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
    }

    fn rings() -> impl Strategy<Value = Ring> {
        prop_oneof![
            Just(Ring::integers(2)),
            Just(Ring::rationals(1)),
            Just(Ring::parse("Fp:5", "0").unwrap()),
            Just(Ring::parse("Zmod:12", "3").unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn ring_axioms(ring in rings(), a in -50i64..50, b in -50i64..50, c in -50i64..50) {
            let (a, b, c) = (ring.from_int(a), ring.from_int(b), ring.from_int(c));
            prop_assert_eq!(ring.add(&ring.add(&a, &b), &c), ring.add(&a, &ring.add(&b, &c)));
            prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
            prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
            prop_assert_eq!(
                ring.mul(&a, &ring.add(&b, &c)),
                ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
            );
            prop_assert_eq!(ring.add(&a, &ring.neg(&a)), ring.zero());
        }

        #[test]
        fn units_have_inverses(ring in rings(), a in -50i64..50) {
            let a = ring.from_int(a);
            if ring.is_unit(&a) {
                let inv = ring.inverse(&a).unwrap();
                prop_assert_eq!(ring.mul(&a, &inv), ring.one());
            } else {
                prop_assert!(ring.inverse(&a).is_none());
            }
        }
    }
}
