//! Acceptance suite: one line per criterion, exact comparisons throughout.

use std::process::ExitCode;
use std::time::Instant;

use brauer_core::algebra::relations_check;
use brauer_core::bar::{
    bar_tor, group, inclusion_check, induced_module_check, quotient_vanishing_check, shapiro_check, theorem_a_check,
    AlgebraKind, MapProperty, ModuleKind, DEFAULT_BUDGET,
};
use brauer_core::complexes::{
    build_cn, build_inductive, build_w, filter_cnk, phi, phi_inverse, phi_iso_check, split_cn, tensor_inductive,
    Inductive, DEFAULT_WORD_BOUND,
};
use brauer_core::diagram::{enumerate_diagrams, DEFAULT_ENUMERATION_BOUND as B};
use brauer_core::homology::complex_homology;
use brauer_core::{BoxDiagram, BrauerDiagram, ChainComplex, HomologyGroup, Result, Ring};

type Outcome = Result<std::result::Result<(), String>>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn vanishes(c: &ChainComplex, top: i64) -> Result<bool> {
    if top < c.lo() {
        return Ok(true);
    }
    Ok(complex_homology(c, Some(top))?.iter().all(|(_, h)| h.is_zero()))
}

fn tor(kind: AlgebraKind, n: usize, m: ModuleKind, top: usize, ring: &Ring) -> Result<Vec<HomologyGroup>> {
    Ok(bar_tor(kind, n, &m, top, ring, DEFAULT_BUDGET, B)?.into_iter().map(|x| x.1).collect())
}

fn intro_product() -> Outcome {
    let a = BrauerDiagram::new(5, &[(-1, 3), (-2, -4), (-3, -5), (1, 5), (2, 4)])?;
    let b = BrauerDiagram::new(5, &[(-1, -4), (-2, -5), (-3, 1), (2, 5), (3, 4)])?;
    let want = BrauerDiagram::new(5, &[(-1, 1), (-2, -4), (-3, -5), (2, 5), (3, 4)])?;
    let r = a.compose(&b)?;
    Ok(ensure(r.loops == 1 && r.diagram == want, || format!("got {} with {} loops", r.diagram, r.loops)))
}

fn relations() -> Outcome {
    for delta in [0, 1, 2, 3] {
        for n in 1..=5 {
            for o in relations_check(n, &Ring::integers(delta))? {
                if !o.passed() {
                    return Ok(Err(format!("{} fails at n={n} delta={delta}", o.family)));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn dimensions() -> Outcome {
    let want = [1usize, 3, 15, 105, 945];
    for (n, &w) in (1..=5).zip(&want) {
        let got = enumerate_diagrams(n, B)?.len();
        if got != w {
            return Ok(Err(format!("n={n}: {got} diagrams")));
        }
    }
    Ok(Ok(()))
}

fn brauer_two() -> Outcome {
    for delta in [0i64, 2, 3, 5] {
        let t = tor(AlgebraKind::Brauer, 2, ModuleKind::Trivial, 2, &Ring::integers(delta))?;
        let want = if delta == 0 { group(1, &[2]) } else { group(0, &[2, delta]) };
        if t[1] != want {
            return Ok(Err(format!("delta={delta}: Tor_1 = {}", t[1])));
        }
    }
    Ok(Ok(()))
}

fn restricted_three() -> Outcome {
    for delta in [0i64, 2, 3] {
        let t = tor(AlgebraKind::Brauer, 2, ModuleKind::Restricted(3), 2, &Ring::integers(delta))?;
        let want = if delta == 0 { group(3, &[]) } else { group(0, &[delta, delta, delta]) };
        if t[1] != want {
            return Ok(Err(format!("delta={delta}: Tor_1 = {}", t[1])));
        }
    }
    Ok(Ok(()))
}

fn half_range(n: usize) -> i64 {
    (n as i64 - 3).div_euclid(2)
}

fn cn_connectivity() -> Outcome {
    let cases: [(fn(i64) -> Ring, i64, usize); 4] =
        [(Ring::rationals, 0, 6), (Ring::rationals, 1, 6), (Ring::integers, 0, 5), (Ring::integers, 2, 5)];
    for (make, delta, top_n) in cases {
        let ring = make(delta);
        for n in 1..=top_n {
            let c = build_cn(n, &ring, B)?;
            if !vanishes(&c.complex, half_range(n))? {
                return Ok(Err(format!("n={n} over {:?} delta={delta}", ring.kind())));
            }
        }
    }
    Ok(Ok(()))
}

fn splitting_ranges() -> Outcome {
    let ring = Ring::integers(0);
    for n in 1..=5 {
        let c = build_cn(n, &ring, B)?;
        for part in split_cn(&c)? {
            let k = part.k.unwrap();
            let top = n as i64 - k as i64 - 2;
            if !vanishes(&part.complex, top)? {
                return Ok(Err(format!("C_{n}^({k})")));
            }
            for j in 0..=k {
                let (_, q) = filter_cnk(&part, j)?;
                if !vanishes(&q.complex, top + j as i64)? {
                    return Ok(Err(format!("n={n} k={k} j={j}")));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn words() -> Outcome {
    let ring = Ring::integers(0);
    for nx in 0..=5usize {
        for s in 0..=3 {
            let x: Vec<usize> = (1..=nx).collect();
            let w = build_w(&x, s, &ring, DEFAULT_WORD_BOUND)?;
            if !vanishes(&w.complex, nx as i64 - 2)? {
                return Ok(Err(format!("|X|={nx} s={s}")));
            }
        }
    }
    Ok(Ok(()))
}

fn tuples() -> Outcome {
    let b = BoxDiagram::new(8, 2, &[(-1, 2), (-4, 6), (-7, 3), (-2, -3), (-5, -8), (1, 5)], &[-6, 4])?;
    let t = phi(&b);
    if t.word.to_string() != "|17||4" || t.x != [1, 4, 6, 7] || t.p != [(2, 3), (5, 8)] || phi_inverse(8, &t)? != b {
        return Ok(Err(format!("worked example gives {}", t.word)));
    }
    for n in 1..=4 {
        for k in 0..=n / 2 {
            for j in 0..=k {
                let r = phi_iso_check(n, k, j, B)?;
                if !r.passed() {
                    return Ok(Err(format!("{r:?}")));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0..1u32 << n).map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect()
}

fn quotients() -> Outcome {
    for (ring, max) in [(Ring::integers(0), 2), (Ring::rationals(1), 3)] {
        for x in subsets(3).into_iter().filter(|x| x.len() <= max) {
            let r = quotient_vanishing_check(3, &x, 3, &ring, DEFAULT_BUDGET, B)?;
            if !r.passed() || r.rows.len() != 2 {
                return Ok(Err(format!("X={x:?} over {:?}: {:?}", ring.kind(), r.rows)));
            }
        }
    }
    Ok(Ok(()))
}

fn inductive() -> Outcome {
    let n = 3;
    let cutoff = 4;
    let mut cases = Vec::new();
    for x_set in subsets(n).into_iter().filter(|x| !x.is_empty()) {
        for &x in &x_set {
            cases.push((x_set.clone(), x, Inductive::C, Ring::rationals(1)));
            for y in (1..=n).filter(|y| !x_set.contains(y)) {
                cases.push((x_set.clone(), x, Inductive::D { y }, Ring::integers(0)));
            }
        }
    }
    for (x_set, x, kind, ring) in cases {
        let c = build_inductive(n, &x_set, x, kind, cutoff, &ring, B)?;
        let t = tensor_inductive(n, &x_set, x, kind, cutoff, &ring)?;
        if !vanishes(&c, cutoff as i64 - 1)? || !vanishes(&t, cutoff as i64 - 1)? {
            return Ok(Err(format!("{kind:?} X={x_set:?} x={x}")));
        }
    }
    Ok(Ok(()))
}

fn induced_module() -> Outcome {
    let ring = Ring::integers(0);
    let r = induced_module_check(3, 2, 3, &ring, DEFAULT_BUDGET, B)?;
    let want = [group(1, &[]), group(0, &[2]), group(0, &[])];
    let got: Vec<HomologyGroup> = r.rows.iter().map(|row| row.target.clone()).collect();
    Ok(ensure(r.passed() && got == want, || format!("{:?}", r.rows)))
}

fn theorem_a() -> Outcome {
    for ring in [Ring::integers(1), Ring::rationals(1)] {
        for n in 1..=3 {
            let r = theorem_a_check(n, 3, &ring, DEFAULT_BUDGET, B)?;
            if !r.passed() {
                return Ok(Err(format!("n={n} over {:?}: {:?}", ring.kind(), r.rows)));
            }
        }
    }
    let t = tor(AlgebraKind::Brauer, 3, ModuleKind::Trivial, 2, &Ring::integers(1))?;
    Ok(ensure(t[1] == group(0, &[2]), || format!("Tor_1 = {}", t[1])))
}

fn theorem_b() -> Outcome {
    let ring = Ring::integers(0);
    let stable = inclusion_check(3, 3, MapProperty::Isomorphism, 2, &ring, DEFAULT_BUDGET, B)?;
    let row = &stable.rows[1];
    if !(row.holds && row.source == group(0, &[2]) && row.target == group(0, &[2])) {
        return Ok(Err(format!("n=3: {row:?}")));
    }
    let edge = inclusion_check(2, 2, MapProperty::Surjective, 2, &ring, DEFAULT_BUDGET, B)?;
    let row = &edge.rows[1];
    Ok(ensure(!row.holds && row.source == group(0, &[2]) && row.target == group(1, &[2]), || format!("n=2: {row:?}")))
}

fn surjection() -> Outcome {
    let r = inclusion_check(2, 3, MapProperty::Surjective, 2, &Ring::integers(0), DEFAULT_BUDGET, B)?;
    Ok(ensure(r.rows[1].holds, || format!("{:?}", r.rows[1])))
}

fn shapiro() -> Outcome {
    let r = shapiro_check(3, 2, 3, &Ring::integers(0), DEFAULT_BUDGET, B)?;
    Ok(ensure(r.passed() && r.rows[1].source == group(0, &[2]), || format!("{:?}", r.rows)))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 16] = [
        ("intro multiplication", intro_product),
        ("presentation relations, n <= 5", relations),
        ("algebra dimensions (2n-1)!!", dimensions),
        ("Tor_1 of Br_2 with trivial coefficients", brauer_two),
        ("Tor_1 of Br_2 with coefficients in Br_3", restricted_three),
        ("high connectivity of C_n", cn_connectivity),
        ("splitting and filtration vanishing ranges", splitting_ranges),
        ("separator words highly acyclic", words),
        ("word tuples: round trip and chain map", tuples),
        ("Tor vanishing for Br_3 / J_X", quotients),
        ("inductive resolutions acyclic", inductive),
        ("Tor with induced coefficients", induced_module),
        ("invertible delta: iota and pi inverse", theorem_a),
        ("stable range isomorphism and sharpness", theorem_b),
        ("surjection from S_2", surjection),
        ("Shapiro cross-check", shapiro),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(Ok(())) => println!("PASS {:>2} {name} ({secs:.2}s)", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): error: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
