//! End-to-end acceptance: one PASS/FAIL line per criterion.

use artin_core::homology::{homology, MatchingOptions, Summand};
use artin_core::linalg::matmul;
use artin_core::morse::{brute_force_incidence, is_acyclic, morse_incidence};
use artin_core::poly::IntPoly;
use artin_core::search::{element_matching, prove_no_precise, search_precise, Absence, SearchOutcome};
use artin_core::snf::homology_direct;
use artin_core::sweep::{check, grid};
use artin_core::tables::{run, Suite};
use artin_core::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = std::result::Result<String, String>;

fn suite(s: Suite) -> Outcome {
    let cells = run(s, MatchingOptions::default()).map_err(|e| e.to_string())?;
    let failed: Vec<String> = cells.iter().filter(|c| !c.pass).map(ToString::to_string).collect();
    if failed.is_empty() {
        Ok(format!("{} cells", cells.len()))
    } else {
        Err(failed.join("; "))
    }
}

fn family_grid() -> Outcome {
    let cases = grid(12, 9, 30);
    let bad: Vec<String> = cases
        .par_iter()
        .map(|&c| check(c))
        .filter(|r| !r.verified())
        .map(|r| r.case.to_string())
        .collect();
    if bad.is_empty() {
        Ok(format!("{} cases", cases.len()))
    } else {
        Err(bad.join("; "))
    }
}

/// Every built-in type with at most `max_vertices` vertices, a few `I₂(m)`.
fn builtin(max_vertices: usize) -> Vec<TypeName> {
    let mut out = Vec::new();
    for fam in ["A", "B", "D", "E", "F", "H", "tA", "tB", "tC", "tD", "tE", "tF", "tG", "tI"] {
        for r in 1..=max_vertices as u32 {
            if let Ok(t) = TypeName::parse(fam, r) {
                if t.vertex_count() <= max_vertices {
                    out.push(t);
                }
            }
        }
    }
    out.extend((3..=8).map(|m| TypeName::new(Family::I2, m).unwrap()));
    out
}

fn oracle() -> Outcome {
    let mut names: Vec<TypeName> = builtin(5)
        .into_iter()
        .filter(|t| if t.family.is_affine() { t.rank <= 4 } else { t.rank <= 5 })
        .collect();
    names.extend((9..=16).map(|m| TypeName::new(Family::I2, m).unwrap()));
    let bad: Vec<String> = names
        .par_iter()
        .filter_map(|t| {
            let name = t.to_string();
            let a = homology(&name, &t.graph(), MatchingOptions::default());
            let b = homology_direct(&name, &t.graph());
            match (a, b) {
                (Ok(a), Ok(b)) if a.same_groups(&b) => None,
                (a, b) => Some(format!("{name}: {:?} / {:?}", a.map(|x| x.to_string()), b.map(|x| x.to_string()))),
            }
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} types", names.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn absence() -> Outcome {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/no_precise_d2.cox")).unwrap();
    let k = build_kw(&CoxeterGraph::parse(&text).map_err(|e| e.to_string())?);
    let level = k.weighted_level(2);
    let cert = match prove_no_precise(&k, &level, 40).map_err(|e| e.to_string())? {
        Absence::Certificate(c) => c,
        Absence::Exists(m) => return Err(format!("precise matching exists: {:?}", m.sorted_pairs())),
    };
    match search_precise(&k, &level, 5000, 0) {
        SearchOutcome::NotFound { explored } => {
            Ok(format!("{} weighted matchings ruled out, search gave up after {explored}", cert.candidates))
        }
        SearchOutcome::Found { .. } => Err("search found a matching".into()),
    }
}

fn is_zero_int(m: &[Vec<i64>]) -> bool {
    m.iter().flatten().all(|&x| x == 0)
}

fn poly_product_is_zero(a: &[Vec<IntPoly>], b: &[Vec<IntPoly>]) -> bool {
    (0..a.len()).all(|i| {
        (0..b.first().map_or(0, Vec::len)).all(|j| {
            let mut s = IntPoly::zero();
            for (l, row) in b.iter().enumerate() {
                s = &s + &(&a[i][l] * &row[j]);
            }
            s.is_zero()
        })
    })
}

fn boundary_squares(types: &[TypeName]) -> std::result::Result<(), String> {
    for t in types {
        let k = build_kw(&t.graph());
        for c in 2..=k.top() {
            if !is_zero_int(&matmul(&k.boundary_c0(c - 1), &k.boundary_c0(c))) {
                return Err(format!("{t}: ∂⁰∂⁰ ≠ 0 at {c}"));
            }
            if !poly_product_is_zero(&k.boundary_c(c - 1), &k.boundary_c(c)) {
                return Err(format!("{t}: ∂∂ ≠ 0 at {c}"));
            }
        }
    }
    Ok(())
}

/// An acyclic matching: an element matching half the time, otherwise random
/// covering pairs kept only while acyclic.
fn random_matching(k: &ComplexK, rng: &mut ChaCha8Rng) -> Matching {
    let n = k.graph().rank();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let ds: Vec<u32> = k.relevant_ds().into_iter().collect();
    if rng.gen_bool(0.5) && !ds.is_empty() {
        let d = ds[rng.gen_range(0..ds.len())];
        return element_matching(k, &k.weighted_level(d), &order);
    }
    let mut m = Matching::empty();
    let mut simplices: Vec<Simplex> = k.simplices().collect();
    simplices.shuffle(rng);
    for s in simplices {
        if !m.is_critical(s) {
            continue;
        }
        let faces: Vec<Simplex> = k.faces(s).filter(|f| m.is_critical(*f)).collect();
        if let Some(&f) = faces.choose(rng) {
            m.insert(s, f).unwrap();
            if !is_acyclic(&m, k) {
                m.remove(s);
            }
        }
    }
    m
}

fn morse_properties(types: &[TypeName]) -> std::result::Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..200 {
        let t = types[rng.gen_range(0..types.len())];
        let k = build_kw(&t.graph());
        let m = random_matching(&k, &mut rng);
        let data = morse_incidence(&m, &k).map_err(|e| format!("{t} #{trial}: {e}"))?;
        for c in 2..data.delta.len() {
            if !data.delta[c - 1].is_empty() && !is_zero_int(&matmul(&data.delta[c - 1], &data.delta[c])) {
                return Err(format!("{t} #{trial}: δδ ≠ 0 at {c}"));
            }
        }
        for c in 1..data.delta.len() {
            for (i, row) in data.delta[c].iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    let brute = brute_force_incidence(&m, &k, data.critical[c][j], data.critical[c - 1][i]);
                    if brute != x {
                        return Err(format!("{t} #{trial}: DP {x} vs paths {brute}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn dihedral_formula() -> std::result::Result<(), String> {
    for m in 5..=30u32 {
        let t = TypeName::new(Family::I2, m).unwrap();
        let h = homology(&t.to_string(), &t.graph(), MatchingOptions::default()).map_err(|e| e.to_string())?;
        let expected: Vec<Summand> = (2..=m).filter(|d| m % d == 0).map(|d| Summand { d, mult: 1 }).collect();
        let got = h.degree(1).map(|x| (x.free_rank, x.torsion.clone()));
        if got != Some((0, expected.clone())) {
            return Err(format!("{t}: H1 {got:?}, expected {expected:?}"));
        }
    }
    Ok(())
}

fn properties() -> Outcome {
    let upto8 = builtin(8);
    let small: Vec<TypeName> = builtin(6).into_iter().filter(|t| t.vertex_count() <= 6).collect();
    boundary_squares(&upto8)?;
    morse_properties(&small)?;
    dihedral_formula()?;
    Ok(format!("∂² on {} types, 200 random matchings, I2(5..30)", upto8.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("affine D table", || suite(Suite::AffineD)),
        ("exceptional finite table", || suite(Suite::ExceptionalFinite)),
        ("exceptional affine table", || suite(Suite::ExceptionalAffine)),
        ("family matchings verified", family_grid),
        ("critical descriptors", || suite(Suite::Critical)),
        ("matchings agree with Smith normal form", oracle),
        ("absence certificate", absence),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
