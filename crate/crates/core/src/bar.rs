//! Normalized bar complexes of the Brauer and symmetric group algebras, the
//! Tor groups they compute, and maps induced on Tor by algebra maps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::check_subset;
use crate::chain::{ChainComplex, MatrixBuilder};
use crate::diagram::{double_factorial_odd, enumerate_diagrams, permutations, BrauerDiagram};
use crate::error::{Error, Result};
use crate::homology::{
    complex_homology, embed_matrix, presentation, Coeffs, HomologyGroup, Presentation, PresentedMap,
};
use crate::linalg::{BigInts, PrimeField, Rationals, SparseMatrix};
use crate::representations::{act_diagram, induced_basis, induced_rank, BoxDiagram};
use crate::ring::{Ring, RingKind};

/// Default ceiling on `dim(Ā)^D · dim(M)` for a bar complex truncated at `D`.
pub const DEFAULT_BUDGET: u128 = 50_000_000;

type Row = Vec<(u32, BigRational)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Brauer,
    Symmetric,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Brauer => write!(f, "brauer"),
            AlgebraKind::Symmetric => write!(f, "symmetric"),
        }
    }
}

/// Coefficient modules for Tor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ModuleKind {
    /// The trivial module.
    Trivial,
    /// `A_n ⊗_{A_m} t`.
    Induced(usize),
    /// `Br_n / J_X`.
    Quotient(Vec<usize>),
    /// `A_N` for `N >= n`, acted on by left multiplication through the
    /// inclusion `A_n -> A_N`.
    Restricted(usize),
}

impl fmt::Display for ModuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleKind::Trivial => write!(f, "trivial"),
            ModuleKind::Induced(m) => write!(f, "induced:{m}"),
            ModuleKind::Quotient(x) => {
                write!(f, "quotient:")?;
                for (i, a) in x.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{a}")?;
                }
                Ok(())
            }
            ModuleKind::Restricted(big) => write!(f, "restricted:{big}"),
        }
    }
}

fn augmentation(kind: AlgebraKind, d: &BrauerDiagram) -> bool {
    kind == AlgebraKind::Symmetric || d.is_permutation()
}

fn add_to(acc: &mut BTreeMap<u32, BigRational>, i: u32, v: BigRational) {
    let e = acc.entry(i).or_insert_with(BigRational::zero);
    *e += v;
    if e.is_zero() {
        acc.remove(&i);
    }
}

/// The augmentation ideal of `Br_n` or `RS_n`, with basis `d - ε(d)·1` over
/// the non-identity diagrams `d`, and its multiplication table.
#[derive(Debug, Clone)]
pub struct AugmentationIdeal {
    pub kind: AlgebraKind,
    pub n: usize,
    pub basis: Vec<BrauerDiagram>,
    products: Vec<Vec<Row>>,
}

impl AugmentationIdeal {
    pub fn new(kind: AlgebraKind, n: usize, ring: &Ring, bound: usize) -> Result<AugmentationIdeal> {
        let work = ring.working();
        let mut basis: Vec<BrauerDiagram> = match kind {
            AlgebraKind::Brauer => enumerate_diagrams(n, bound)?,
            AlgebraKind::Symmetric => {
                if n > bound {
                    return Err(Error::BoundExceeded(format!("RS_{n} (bound {bound})")));
                }
                permutations(n).iter().map(|w| BrauerDiagram::permutation(w)).collect::<Result<_>>()?
            }
        };
        basis.retain(|d| !d.is_identity());
        basis.sort();
        let index = |d: &BrauerDiagram| basis.binary_search(d).ok().map(|i| i as u32);
        let mut products = Vec::with_capacity(basis.len());
        for d in &basis {
            let ed = augmentation(kind, d);
            let mut row = Vec::with_capacity(basis.len());
            for (b, e) in basis.iter().enumerate() {
                let ee = augmentation(kind, e);
                let mut acc = BTreeMap::new();
                let r = d.compose_unchecked(e);
                if let Some(i) = index(&r.diagram) {
                    add_to(&mut acc, i, work.delta_pow(r.loops).as_rational().clone());
                }
                if ee {
                    add_to(&mut acc, index(d).unwrap(), -BigRational::one());
                }
                if ed {
                    add_to(&mut acc, b as u32, -BigRational::one());
                }
                row.push(acc.into_iter().collect());
            }
            products.push(row);
        }
        Ok(AugmentationIdeal { kind, n, basis, products })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Product of two basis elements, expanded in the basis.
    pub fn product(&self, a: usize, b: usize) -> &[(u32, BigRational)] {
        &self.products[a][b]
    }

    fn index(&self, d: &BrauerDiagram) -> Option<usize> {
        self.basis.binary_search(d).ok()
    }
}

fn algebra_dim(kind: AlgebraKind, n: usize) -> u128 {
    match kind {
        AlgebraKind::Brauer => double_factorial_odd(n) as u128,
        AlgebraKind::Symmetric => (1..=n as u128).product(),
    }
}

/// Basis of a coefficient module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleBasis {
    Trivial,
    Boxes(Vec<BoxDiagram>),
    Diagrams(Vec<BrauerDiagram>),
}

impl ModuleBasis {
    pub fn len(&self) -> usize {
        match self {
            ModuleBasis::Trivial => 1,
            ModuleBasis::Boxes(b) => b.len(),
            ModuleBasis::Diagrams(b) => b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            ModuleBasis::Trivial => String::from("1"),
            ModuleBasis::Boxes(b) => b[i].to_string(),
            ModuleBasis::Diagrams(b) => b[i].to_string(),
        }
    }

    /// Position of the basis vector `other[i]` in `self`, if present.
    fn locate(&self, other: &ModuleBasis, i: usize) -> Result<Option<usize>> {
        match (self, other) {
            (ModuleBasis::Trivial, ModuleBasis::Trivial) => Ok(Some(0)),
            (ModuleBasis::Boxes(a), ModuleBasis::Boxes(b)) => Ok(a.binary_search(&b[i]).ok()),
            (ModuleBasis::Diagrams(a), ModuleBasis::Diagrams(b)) => Ok(a.binary_search(&b[i]).ok()),
            _ => Err(Error::Unsupported(String::from("no map between these coefficient modules"))),
        }
    }
}

/// A left module over the algebra, with the action of the augmentation
/// ideal tabulated on basis vectors.
#[derive(Debug, Clone)]
pub struct CoefficientModule {
    pub kind: ModuleKind,
    pub basis: ModuleBasis,
    act: Vec<Vec<Row>>,
}

impl CoefficientModule {
    pub fn new(alg: &AugmentationIdeal, kind: &ModuleKind, ring: &Ring, bound: usize) -> Result<CoefficientModule> {
        let work = ring.working();
        let n = alg.n;
        let basis = module_basis(alg.kind, n, kind, bound)?;
        let dim = basis.len();
        let mut act = Vec::with_capacity(alg.dim());
        for d in &alg.basis {
            let eps = augmentation(alg.kind, d);
            let mut row = Vec::with_capacity(dim);
            for v in 0..dim {
                let mut acc = BTreeMap::new();
                let image: Option<(usize, u32)> = match (&basis, kind) {
                    (ModuleBasis::Trivial, _) => eps.then_some((0, 0)),
                    (ModuleBasis::Boxes(b), _) => act_diagram(d, &b[v])
                        .map(|(w, loops)| (b.binary_search(&w).expect("action stays in the basis"), loops)),
                    (ModuleBasis::Diagrams(b), ModuleKind::Quotient(x)) => {
                        let r = d.compose_unchecked(&b[v]);
                        (!r.diagram.has_right_arc_within(x))
                            .then(|| (b.binary_search(&r.diagram).expect("reduced product in the basis"), r.loops))
                    }
                    (ModuleBasis::Diagrams(b), _) => {
                        let r = d.embed(b[v].n())?.compose_unchecked(&b[v]);
                        Some((b.binary_search(&r.diagram).expect("product in the basis"), r.loops))
                    }
                };
                if let Some((w, loops)) = image {
                    add_to(&mut acc, w as u32, work.delta_pow(loops).as_rational().clone());
                }
                if eps {
                    add_to(&mut acc, v as u32, -BigRational::one());
                }
                row.push(acc.into_iter().collect());
            }
            act.push(row);
        }
        Ok(CoefficientModule { kind: kind.clone(), basis, act })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `ā_a · v` expanded in the basis.
    pub fn act(&self, a: usize, v: usize) -> &[(u32, BigRational)] {
        &self.act[a][v]
    }
}

fn module_basis(alg: AlgebraKind, n: usize, kind: &ModuleKind, bound: usize) -> Result<ModuleBasis> {
    Ok(match kind {
        ModuleKind::Trivial => ModuleBasis::Trivial,
        ModuleKind::Induced(m) => {
            let mut b = induced_basis(n, *m, bound)?;
            if alg == AlgebraKind::Symmetric {
                b.retain(|v| v.left_pairs() == 0);
            }
            ModuleBasis::Boxes(b)
        }
        ModuleKind::Quotient(x) => {
            if alg == AlgebraKind::Symmetric {
                return Err(Error::Unsupported(String::from("quotient modules are defined for the Brauer algebra")));
            }
            check_subset(n, x)?;
            let mut b: Vec<BrauerDiagram> =
                enumerate_diagrams(n, bound)?.into_iter().filter(|d| !d.has_right_arc_within(x)).collect();
            b.sort();
            ModuleBasis::Diagrams(b)
        }
        ModuleKind::Restricted(big) => {
            if *big < n {
                return Err(Error::OutOfRange(format!("cannot restrict from {big} strands to {n}")));
            }
            let mut b: Vec<BrauerDiagram> = match alg {
                AlgebraKind::Brauer => enumerate_diagrams(*big, bound)?,
                AlgebraKind::Symmetric => {
                    if *big > bound {
                        return Err(Error::BoundExceeded(format!("RS_{big} (bound {bound})")));
                    }
                    permutations(*big).iter().map(|w| BrauerDiagram::permutation(w)).collect::<Result<_>>()?
                }
            };
            b.sort();
            ModuleBasis::Diagrams(b)
        }
    })
}

fn module_dim(alg: AlgebraKind, n: usize, kind: &ModuleKind, bound: usize) -> Result<u128> {
    Ok(match kind {
        ModuleKind::Trivial => 1,
        ModuleKind::Induced(m) => {
            if *m > n {
                return Err(Error::OutOfRange(format!("box of size {m} with n={n}")));
            }
            match alg {
                AlgebraKind::Brauer => induced_rank(n, *m),
                AlgebraKind::Symmetric => ((*m + 1) as u128..=n as u128).product(),
            }
        }
        ModuleKind::Quotient(_) => module_basis(alg, n, kind, bound)?.len() as u128,
        ModuleKind::Restricted(big) => algebra_dim(alg, *big),
    })
}

/// `t ⊗_A B(A, A, M)` in degrees `0..=top`: chains `Ā^{⊗k} ⊗ M`.
#[derive(Debug, Clone)]
pub struct BarComplex {
    pub algebra: AugmentationIdeal,
    pub module: CoefficientModule,
    pub top: usize,
    pub complex: ChainComplex,
}

/// The budget measure `dim(Ā)^top · dim(M)`.
pub fn bar_size(kind: AlgebraKind, n: usize, module: &ModuleKind, top: usize, bound: usize) -> Result<u128> {
    let a = algebra_dim(kind, n) - 1;
    let m = module_dim(kind, n, module, bound)?;
    Ok(a.checked_pow(top as u32).and_then(|p| p.checked_mul(m)).unwrap_or(u128::MAX))
}

pub fn bar_complex(
    kind: AlgebraKind,
    n: usize,
    module: &ModuleKind,
    top: usize,
    ring: &Ring,
    budget: u128,
    bound: usize,
) -> Result<BarComplex> {
    if top < 1 {
        return Err(Error::OutOfRange(String::from("bar complex needs top degree at least 1")));
    }
    if n > bound {
        return Err(Error::BoundExceeded(format!("algebra on {n} strands (bound {bound})")));
    }
    let needed = bar_size(kind, n, module, top, bound)?;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, ceiling: budget });
    }
    let algebra = AugmentationIdeal::new(kind, n, ring, bound)?;
    let module = CoefficientModule::new(&algebra, module, ring, bound)?;
    let work = ring.working();
    let a = algebra.dim();
    let dm = module.dim();
    let mut ranks = vec![dm];
    let mut boundaries = Vec::with_capacity(top);
    for k in 1..=top {
        let rows = ranks[k - 1];
        let cols = rows * a;
        ranks.push(cols);
        let mut b = MatrixBuilder::new(rows, cols);
        let mut digits = vec![0usize; k];
        for c in 0..cols {
            let mut rest = c / dm;
            let v = c % dm;
            for slot in digits.iter_mut().rev() {
                *slot = rest % a;
                rest /= a;
            }
            let encode = |letters: &mut dyn Iterator<Item = usize>, v: usize| -> usize {
                letters.fold(0, |acc, x| acc * a + x) * dm + v
            };
            for i in 0..k - 1 {
                let negative = i % 2 == 0;
                for (f, x) in algebra.product(digits[i], digits[i + 1]) {
                    let mut it =
                        digits[..i].iter().copied().chain([*f as usize]).chain(digits[i + 2..].iter().copied());
                    let r = encode(&mut it, v);
                    b.push(r, c, if negative { -x.clone() } else { x.clone() });
                }
            }
            let negative = k % 2 == 1;
            for (w, x) in module.act(digits[k - 1], v) {
                let r = encode(&mut digits[..k - 1].iter().copied(), *w as usize);
                b.push(r, c, if negative { -x.clone() } else { x.clone() });
            }
        }
        boundaries.push(b.build(&work)?);
    }
    let complex = ChainComplex::new(ring, 0, ranks, boundaries)?;
    Ok(BarComplex { algebra, module, top, complex })
}

impl BarComplex {
    /// `Tor_i` for `0 <= i < top`.
    pub fn tor(&self) -> Result<Vec<(i64, HomologyGroup)>> {
        complex_homology(&self.complex, Some(self.top as i64 - 1))
    }
}

/// `Tor_i^A(t, M)` for `0 <= i < top`.
pub fn bar_tor(
    kind: AlgebraKind,
    n: usize,
    module: &ModuleKind,
    top: usize,
    ring: &Ring,
    budget: u128,
    bound: usize,
) -> Result<Vec<(i64, HomologyGroup)>> {
    bar_complex(kind, n, module, top, ring, budget, bound)?.tor()
}

/// Algebra maps acting diagram by diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraMap {
    /// Inclusion of permutation diagrams, adding straight strands when the
    /// target has more strands.
    Include,
    /// `Br_n -> RS_n`, killing every diagram that is not a permutation.
    Project,
}

fn map_diagram(map: AlgebraMap, d: &BrauerDiagram, target_n: usize) -> Result<Option<BrauerDiagram>> {
    match map {
        AlgebraMap::Include => d.embed(target_n).map(Some),
        AlgebraMap::Project => Ok(d.is_permutation().then(|| d.clone())),
    }
}

/// The chain map in degree `k` induced by an algebra map together with the
/// matching map of coefficient modules (same basis vector when present,
/// zero otherwise).
pub fn bar_chain_map(
    src: &BarComplex,
    tgt: &BarComplex,
    map: AlgebraMap,
    k: usize,
) -> Result<SparseMatrix<BigRational>> {
    if k > src.top || k > tgt.top {
        return Err(Error::OutOfRange(format!("degree {k} beyond the truncation")));
    }
    let (sa, ta) = (&src.algebra, &tgt.algebra);
    let mut letter = Vec::with_capacity(sa.dim());
    for d in &sa.basis {
        let image = map_diagram(map, d, ta.n)?;
        let e_src = augmentation(sa.kind, d);
        let e_tgt = image.as_ref().is_some_and(|f| augmentation(ta.kind, f));
        if e_src != e_tgt {
            return Err(Error::Hypothesis(String::from("algebra map does not preserve the augmentation")));
        }
        letter.push(match image {
            None => None,
            Some(f) if f.is_identity() => None,
            Some(f) => {
                Some(ta.index(&f).ok_or_else(|| Error::Hypothesis(format!("{f} is not in the target algebra")))?)
            }
        });
    }
    let mut module = Vec::with_capacity(src.module.dim());
    for v in 0..src.module.dim() {
        module.push(tgt.module.basis.locate(&src.module.basis, v)?);
    }
    check_module_map(src, tgt, &letter, &module)?;

    let (a, dm) = (sa.dim(), src.module.dim());
    let (ta_dim, tdm) = (ta.dim(), tgt.module.dim());
    let rows = ta_dim.pow(k as u32) * tdm;
    let cols = a.pow(k as u32) * dm;
    let mut b = MatrixBuilder::new(rows, cols);
    'col: for c in 0..cols {
        let Some(w) = module[c % dm] else { continue };
        let mut rest = c / dm;
        let mut place = 1;
        let mut r = w;
        for _ in 0..k {
            let Some(f) = letter[rest % a] else { continue 'col };
            r += f * place * tdm;
            place *= ta_dim;
            rest /= a;
        }
        b.push(r, c, BigRational::one());
    }
    b.build(&src.complex.ring().working())
}

/// Verifies `f_L(a·v) = f(a)·f_L(v)` on basis vectors.
fn check_module_map(
    src: &BarComplex,
    tgt: &BarComplex,
    letter: &[Option<usize>],
    module: &[Option<usize>],
) -> Result<()> {
    for (a, fa) in letter.iter().enumerate() {
        for v in 0..src.module.dim() {
            let mut lhs = BTreeMap::new();
            for (w, x) in src.module.act(a, v) {
                if let Some(fw) = module[*w as usize] {
                    add_to(&mut lhs, fw as u32, x.clone());
                }
            }
            let mut rhs = BTreeMap::new();
            if let (Some(fa), Some(fv)) = (fa, module[v]) {
                for (w, x) in tgt.module.act(*fa, fv) {
                    add_to(&mut rhs, *w, x.clone());
                }
            }
            let reduce = |m: BTreeMap<u32, BigRational>| -> Result<Vec<(u32, BigRational)>> {
                let ring = src.complex.ring().working();
                let mut out = Vec::new();
                for (i, x) in m {
                    let x = ring.reduce(x)?;
                    if !x.is_zero() {
                        out.push((i, x.as_rational().clone()));
                    }
                }
                Ok(out)
            };
            if reduce(lhs)? != reduce(rhs)? {
                return Err(Error::Hypothesis(String::from("module map is not compatible with the algebra map")));
            }
        }
    }
    Ok(())
}

/// One degree of a comparison between two Tor computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: i64,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub rows: Vec<DegreeReport>,
    /// Caveats, such as the truncation degree.
    pub note: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

fn truncation_note(top: usize) -> String {
    format!("verified in degrees below {top} only")
}

macro_rules! with_arith {
    ($ring:expr, |$r:ident| $body:expr) => {
        match $ring.kind() {
            RingKind::Integers => {
                let $r = &BigInts;
                $body
            }
            RingKind::Rationals => {
                let $r = &Rationals;
                $body
            }
            RingKind::PrimeField(p) => {
                let $r = &PrimeField { p };
                $body
            }
            RingKind::IntegersMod(_) => Err(Error::Unsupported(String::from("maps on Tor over a composite modulus"))),
        }
    };
}

fn presentations<R: Coeffs + Clone>(r: &R, bar: &BarComplex) -> Result<Vec<Presentation<R>>> {
    (0..bar.top as i64).map(|i| presentation(r, &bar.complex, i)).collect()
}

fn induced_maps<R: Coeffs + Clone>(
    r: &R,
    src: &BarComplex,
    src_p: &[Presentation<R>],
    tgt: &BarComplex,
    tgt_p: &[Presentation<R>],
    map: AlgebraMap,
) -> Result<Vec<PresentedMap<R>>> {
    (0..src_p.len())
        .map(|i| {
            let f = embed_matrix(r, &bar_chain_map(src, tgt, map, i)?);
            Ok(PresentedMap::induced(&src_p[i], &tgt_p[i], &f))
        })
        .collect()
}

fn mutual_inverse_rows<R: Coeffs + Clone>(r: &R, low: &BarComplex, high: &BarComplex) -> Result<Vec<DegreeReport>> {
    let lp = presentations(r, low)?;
    let hp = presentations(r, high)?;
    let iota = induced_maps(r, low, &lp, high, &hp, AlgebraMap::Include)?;
    let pi = induced_maps(r, high, &hp, low, &lp, AlgebraMap::Project)?;
    Ok(iota
        .iter()
        .zip(&pi)
        .enumerate()
        .map(|(i, (f, g))| {
            let pi_iota = g.compose(f).is_identity();
            let iota_pi = f.compose(g).is_identity();
            DegreeReport {
                degree: i as i64,
                source: f.source.clone(),
                target: f.target.clone(),
                holds: pi_iota && iota_pi,
                detail: format!("pi*iota=id:{pi_iota} iota*pi=id:{iota_pi}"),
            }
        })
        .collect())
}

/// `ι_*` and `π_*` between `H_*(S_n)` and `Tor^{Br_n}(t, t)` are mutually
/// inverse; requires `delta` invertible.
pub fn theorem_a_check(n: usize, top: usize, ring: &Ring, budget: u128, bound: usize) -> Result<CheckReport> {
    if !ring.is_unit(ring.delta()) {
        return Err(Error::Hypothesis(format!("delta = {} is not invertible", ring.delta())));
    }
    let low = bar_complex(AlgebraKind::Symmetric, n, &ModuleKind::Trivial, top, ring, budget, bound)?;
    let high = bar_complex(AlgebraKind::Brauer, n, &ModuleKind::Trivial, top, ring, budget, bound)?;
    let rows = with_arith!(ring, |r| mutual_inverse_rows(r, &low, &high))?;
    Ok(CheckReport { name: format!("theorem-a n={n}"), rows, note: truncation_note(top) })
}

fn map_rows<R: Coeffs + Clone>(
    r: &R,
    src: &BarComplex,
    tgt: &BarComplex,
    require: fn(&PresentedMap<R>) -> bool,
    what: &str,
) -> Result<Vec<DegreeReport>> {
    let sp = presentations(r, src)?;
    let tp = presentations(r, tgt)?;
    let maps = induced_maps(r, src, &sp, tgt, &tp, AlgebraMap::Include)?;
    Ok(maps
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let holds = require(f);
            DegreeReport {
                degree: i as i64,
                source: f.source.clone(),
                target: f.target.clone(),
                holds,
                detail: format!("{what}:{holds}"),
            }
        })
        .collect())
}

/// Properties of `H_i(S_m) → Tor_i^{Br_n}(t, t)` that can be checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapProperty {
    Isomorphism,
    Surjective,
}

/// Checks `property` for the map induced by `RS_m -> Br_n` (adding
/// straight strands when `m < n`) in each degree below `top`.
pub fn inclusion_check(
    m: usize,
    n: usize,
    property: MapProperty,
    top: usize,
    ring: &Ring,
    budget: u128,
    bound: usize,
) -> Result<CheckReport> {
    if m > n {
        return Err(Error::OutOfRange(format!("m={m} exceeds n={n}")));
    }
    let src = bar_complex(AlgebraKind::Symmetric, m, &ModuleKind::Trivial, top, ring, budget, bound)?;
    let tgt = bar_complex(AlgebraKind::Brauer, n, &ModuleKind::Trivial, top, ring, budget, bound)?;
    let rows = match property {
        MapProperty::Isomorphism => {
            with_arith!(ring, |r| map_rows(r, &src, &tgt, |f| f.is_isomorphism(), "isomorphism"))
        }
        MapProperty::Surjective => with_arith!(ring, |r| map_rows(r, &src, &tgt, |f| f.is_surjective(), "surjective")),
    }?;
    Ok(CheckReport { name: format!("inclusion m={m} n={n}"), rows, note: truncation_note(top) })
}

/// Whether `ι_*: H_i(S_n) → Tor_i^{Br_n}(t, t)` is an isomorphism, per
/// degree. The stable range is `n >= 2i + 1`.
pub fn theorem_b_check(n: usize, top: usize, ring: &Ring, budget: u128, bound: usize) -> Result<CheckReport> {
    inclusion_check(n, n, MapProperty::Isomorphism, top, ring, budget, bound)
}

/// Whether `H_i(S_{n-1}) → Tor_i^{Br_n}(t, t)` is surjective, per degree.
pub fn surjection_check(n: usize, top: usize, ring: &Ring, budget: u128, bound: usize) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::OutOfRange(String::from("needs n >= 1")));
    }
    inclusion_check(n - 1, n, MapProperty::Surjective, top, ring, budget, bound)
}

fn group_rows(left: &[(i64, HomologyGroup)], right: &[(i64, HomologyGroup)]) -> Vec<DegreeReport> {
    left.iter()
        .zip(right)
        .map(|((i, a), (_, b))| DegreeReport {
            degree: *i,
            source: a.clone(),
            target: b.clone(),
            holds: a == b,
            detail: String::from("groups equal"),
        })
        .collect()
}

/// `Tor^{RS_m}(t, t)` against `Tor^{RS_n}(t, RS_n ⊗_{RS_m} t)`.
pub fn shapiro_check(n: usize, m: usize, top: usize, ring: &Ring, budget: u128, bound: usize) -> Result<CheckReport> {
    if m > n {
        return Err(Error::OutOfRange(format!("m={m} exceeds n={n}")));
    }
    let small = bar_tor(AlgebraKind::Symmetric, m, &ModuleKind::Trivial, top, ring, budget, bound)?;
    let induced = bar_tor(AlgebraKind::Symmetric, n, &ModuleKind::Induced(m), top, ring, budget, bound)?;
    Ok(CheckReport {
        name: format!("shapiro n={n} m={m}"),
        rows: group_rows(&small, &induced),
        note: truncation_note(top),
    })
}

/// `Tor^{Br_n}(t, Br_n ⊗_{Br_m} t)` against `H_*(S_m)`, together with the
/// maps `ι_*`, `π_*` between it and `Tor^{RS_n}(t, RS_n ⊗_{RS_m} t)`.
pub fn induced_module_check(
    n: usize,
    m: usize,
    top: usize,
    ring: &Ring,
    budget: u128,
    bound: usize,
) -> Result<CheckReport> {
    if m > n {
        return Err(Error::OutOfRange(format!("m={m} exceeds n={n}")));
    }
    if m == n && !ring.is_unit(ring.delta()) {
        return Err(Error::Hypothesis(String::from("m = n needs delta invertible")));
    }
    let group = bar_tor(AlgebraKind::Symmetric, m, &ModuleKind::Trivial, top, ring, budget, bound)?;
    let high = bar_complex(AlgebraKind::Brauer, n, &ModuleKind::Induced(m), top, ring, budget, bound)?;
    let low = bar_complex(AlgebraKind::Symmetric, n, &ModuleKind::Induced(m), top, ring, budget, bound)?;
    let tor = high.tor()?;
    let mut rows = group_rows(&group, &tor);
    let maps = with_arith!(ring, |r| mutual_inverse_rows(r, &low, &high))?;
    for (row, map) in rows.iter_mut().zip(maps) {
        row.holds &= map.holds;
        row.detail = format!("groups equal:{} {}", row.source == row.target, map.detail);
    }
    Ok(CheckReport { name: format!("induced n={n} m={m}"), rows, note: truncation_note(top) })
}

/// `Tor_i^{Br_n}(t, Br_n / J_X) = 0` for `1 <= i < top`.
pub fn quotient_vanishing_check(
    n: usize,
    x: &[usize],
    top: usize,
    ring: &Ring,
    budget: u128,
    bound: usize,
) -> Result<CheckReport> {
    check_subset(n, x)?;
    if x.len() >= n && !ring.is_unit(ring.delta()) {
        return Err(Error::Hypothesis(String::from("|X| = n needs delta invertible")));
    }
    let tor = bar_tor(AlgebraKind::Brauer, n, &ModuleKind::Quotient(x.to_vec()), top, ring, budget, bound)?;
    let rows = tor
        .into_iter()
        .filter(|(i, _)| *i >= 1)
        .map(|(i, g)| DegreeReport {
            degree: i,
            holds: g.is_zero(),
            source: g,
            target: HomologyGroup::zero(),
            detail: String::from("vanishes"),
        })
        .collect();
    Ok(CheckReport { name: format!("quotient n={n} X={x:?}"), rows, note: truncation_note(top) })
}

/// Presentation-level comparison of two bar complexes by a chain map,
/// exposed for functoriality tests.
pub fn induced_is_identity(src: &BarComplex, tgt: &BarComplex, map: AlgebraMap, degree: usize) -> Result<bool> {
    let ring = src.complex.ring().clone();
    with_arith!(ring, |r| {
        let sp = presentation(r, &src.complex, degree as i64)?;
        let tp = presentation(r, &tgt.complex, degree as i64)?;
        let f = embed_matrix(r, &bar_chain_map(src, tgt, map, degree)?);
        Ok(PresentedMap::induced(&sp, &tp, &f).is_identity())
    })
}

/// Small-integer helper for tests and reports.
pub fn group(free_rank: usize, torsion: &[i64]) -> HomologyGroup {
    HomologyGroup::new(free_rank, &torsion.iter().map(|&t| BigInt::from(t)).collect::<Vec<_>>())
}
