//! One PASS/FAIL line per acceptance criterion. Runs without the libtest harness so
//! the lines always appear in the output.

mod common;

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use qhalg::basicize::basicize;
use qhalg::catalog::{
    extended_zigzag, matrix_superalgebra, path_algebra_quotient, QuiverPresentation,
};
use qhalg::cli;
use qhalg::format::{self, Description};
use qhalg::modules::{decomposition_matrix, pairing_check, structural_checks};
use qhalg::truncation::{classify_idempotent, conformity_check, surviving_simples, truncate};
use qhalg::{BasedAlgebra, ExactMatrix, Field, GradedDim, Parity};

use common::{catalog_entry, mutate, rejection, rescaled, ALL, CATALOG_SIZE};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: qhalg::Error) -> String {
    e.to_string()
}

fn qpi() -> GradedDim {
    GradedDim::q_pi(1, Parity::Odd)
}

fn zigzag_decomposition() -> Check {
    for field in [Field::Rational, Field::Prime(2)] {
        for l in 1..=4 {
            let start = Instant::now();
            let z = extended_zigzag(l, field).map_err(err)?;
            let d = decomposition_matrix(&z.based).map_err(err)?;
            for i in 0..=l {
                for j in 0..=l {
                    let mut want = GradedDim::zero();
                    if i == j {
                        want = GradedDim::one();
                    }
                    if i == j + 1 {
                        want = qpi();
                    }
                    let got = d.entry(&i.to_string(), &j.to_string()).ok_or("missing entry")?;
                    ensure(*got == want, || format!("l={l} {field}: d[{i}][{j}] = {got}, want {want}"))?;
                }
            }
            ensure(start.elapsed().as_secs_f64() < 1.0, || format!("l={l} took {:?}", start.elapsed()))?;
        }
    }
    Ok("d_ij = delta_ij + delta_(i-1)j q*pi exactly, l = 1..4 over Q and GF(2)".into())
}

fn zigzag_truncation() -> Check {
    for field in [Field::Rational, Field::Prime(2)] {
        for l in 1..=4 {
            let start = Instant::now();
            let z = extended_zigzag(l, field).map_err(err)?;
            let expr = (0..l).map(|i| format!("e{i}")).collect::<Vec<_>>().join(" + ");
            let e = z.algebra().parse_element(&expr).map_err(err)?;
            let ai = classify_idempotent(&z.based, &e).map_err(err)?;
            ensure(ai.adapted && !ai.strongly_adapted, || format!("l={l}: wrong classification"))?;
            let surviving = surviving_simples(&z.based, &ai).map_err(err)?;
            ensure(surviving == (0..l).collect::<Vec<_>>(), || format!("l={l}: surviving {surviving:?}"))?;
            let t = truncate(&z.based, &ai, z.involution.as_ref()).map_err(err)?;
            ensure(t.standard.passed, || format!("l={l}: standard basis {:?}", t.standard.witness))?;
            ensure(t.cellular.is_certified(), || format!("l={l}: cellular {:?}", t.cellular))?;
            ensure(start.elapsed().as_secs_f64() < 1.0, || format!("l={l} took {:?}", start.elapsed()))?;
        }
    }
    Ok("surviving simples {0..l-1}, standard and cellular certificates pass, l = 1..4 over Q and GF(2)".into())
}

fn matrix_superalgebra_check() -> Check {
    let start = Instant::now();
    let m = matrix_superalgebra(2, 1, Field::Rational).map_err(err)?;
    ensure(m.based.poset().len() == 1, || "poset is not a singleton".into())?;
    let c = conformity_check(&m.based).map_err(err)?;
    ensure(c.passed(), || format!("not conforming: {:?}", c.witness))?;
    let g = m.based.gram_form(0).map_err(err)?;
    ensure(g == ExactMatrix::identity(Field::Rational, 3), || format!("Gram\n{g}"))?;
    let d = decomposition_matrix(&m.based).map_err(err)?;
    ensure(d.entries == vec![vec![GradedDim::one()]], || format!("d = {d}"))?;
    let r = basicize(&m.based).map_err(err)?;
    ensure(r.algebra().dim() == 1, || format!("fAf has dimension {}", r.algebra().dim()))?;
    ensure(r.audit.passed(), || format!("audit\n{}", r.audit))?;
    ensure(start.elapsed().as_secs_f64() < 1.0, || format!("took {:?}", start.elapsed()))?;
    Ok("M(2|1): conforming, singleton poset, Gram = I_3, d = [1], fAf = k with passing audit".into())
}

/// Counts the zigzag basis by walking the quiver: vertices, arrows, and one class
/// of length-two cycles per vertex, except the cycle through l-1 based at l.
fn zigzag_path_oracle(l: usize) -> usize {
    let arrows: Vec<(usize, usize)> = (0..l).flat_map(|j| [(j, j + 1), (j + 1, j)]).collect();
    let mut cycle_bases = BTreeSet::new();
    for &(s1, t1) in &arrows {
        for &(s2, t2) in &arrows {
            let killed = s1 == l && t1 == l - 1;
            if t1 == s2 && t2 == s1 && !killed {
                cycle_bases.insert(s1);
            }
        }
    }
    (l + 1) + arrows.len() + cycle_bases.len()
}

fn basis_counting() -> Check {
    for l in 1..=6 {
        let z = extended_zigzag(l, Field::Rational).map_err(err)?;
        let b = z.heredity().basis_size();
        let quotient = path_algebra_quotient(&QuiverPresentation::zigzag(l), Field::Rational).map_err(err)?;
        let oracle = zigzag_path_oracle(l);
        ensure(b == 4 * l + 1 && oracle == b && quotient.dim() == b && z.algebra().dim() == b, || {
            format!("Z({l}): |B| = {b}, oracle {oracle}, quotient {}", quotient.dim())
        })?;
    }
    for (n, m) in [(1, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
        let a = matrix_superalgebra(n, m, Field::Rational).map_err(err)?;
        let units = (1..=n + m).flat_map(|r| (1..=n + m).map(move |s| (r, s))).count();
        let b = a.heredity().basis_size();
        ensure(b == (n + m).pow(2) && units == b && a.algebra().dim() == b, || {
            format!("M({n}|{m}): |B| = {b}, matrix units {units}")
        })?;
    }
    Ok("|B| = 4l+1 for Z(l), l = 1..6, and (n+m)^2 for six M(n|m), matching path and matrix-unit enumeration".into())
}

fn invariant_suite() -> Check {
    let mut cases = 0;
    for k in 0..CATALOG_SIZE {
        for scales in [vec![1], vec![2, 3], vec![5, 1, 4], vec![6, 2, 3, 1], vec![3, 5, 2, 4, 6], vec![4, 6], vec![2, 2, 5, 3]] {
            let b = rescaled(&catalog_entry(k).based, &scales);
            check_invariants(&b).map_err(|e| format!("catalog entry {k}, scales {scales:?}: {e}"))?;
            cases += 1;
        }
    }
    ensure(cases >= 200, || format!("only {cases} cases"))?;
    let mutated = mutation_corpus()?;
    Ok(format!(
        "{cases} algebras satisfy every invariant; {mutated} mutated inputs all rejected with a witness (proptest suites run separately)"
    ))
}

fn check_invariants(b: &BasedAlgebra) -> Result<(), String> {
    let alg = b.algebra();
    let n = b.poset().len();
    for i in 0..n {
        let g = b.gram_form(i).map_err(err)?;
        let c = b.data().cell(i);
        ensure(g.get(c.initial_y(), c.initial).is_one(), || format!("f_{i}(e_i, e_i) != 1"))?;
        for (r, y) in c.y.iter().enumerate() {
            for (s, x) in c.x.iter().enumerate() {
                let d = alg.homogeneous_degree(y).unwrap() + alg.homogeneous_degree(x).unwrap();
                if d.q != 0 || d.parity != Parity::Even {
                    ensure(g.get(r, s).is_zero(), || format!("Gram entry of degree {d} is nonzero"))?;
                }
            }
        }
        for j in 0..n {
            let p = alg.mul(b.data().initial(i), b.data().initial(j));
            let ok = if i == j { p == *b.data().initial(i) } else { p.is_zero() };
            ensure(ok, || format!("e_{i} e_{j} wrong"))?;
        }
        ensure(pairing_check(b, i, &g).passed, || format!("pairing fails at {i}"))?;
        let s = structural_checks(b, i);
        ensure(s.end_dim == 1 && s.passed(), || format!("structural checks fail at {i}"))?;
    }
    let uppers: BTreeSet<BTreeSet<usize>> = (0u32..(1 << n))
        .map(|m| {
            let gens: Vec<usize> = (0..n).filter(|i| m & (1 << i) != 0).collect();
            b.poset().upper_closure(&gens).0
        })
        .collect();
    for o in &uppers {
        for t in &uppers {
            let io = b.cell_ideal(o).map_err(err)?;
            let it = b.cell_ideal(t).map_err(err)?;
            let meet: BTreeSet<usize> = o.intersection(t).copied().collect();
            let im = b.cell_ideal(&meet).map_err(err)?;
            let contained = io.basis.iter().all(|k| it.basis.contains(k));
            ensure(contained == o.is_subset(t), || "ideal containment disagrees with set containment".into())?;
            let shared: Vec<usize> = io.basis.iter().filter(|k| it.basis.contains(k)).copied().collect();
            ensure(shared == im.basis, || "A(O) cap A(T) != A(O cap T)".into())?;
            for u in &io.elements {
                for v in &it.elements {
                    let p = b.reduce_mod_ideal(&alg.mul(u, v), &meet);
                    ensure(p.iter().all(|x| x.is_zero()), || "A(O)A(T) not in A(O cap T)".into())?;
                }
            }
        }
    }
    let total: GradedDim = (0..n)
        .map(|i| &b.standard_graded_dim(i) * &b.costandard_graded_dim(i))
        .sum();
    ensure(total == alg.graded_dimension(), || "cell layers do not add up".into())?;
    let d = decomposition_matrix(b).map_err(err)?;
    for (r, row) in d.entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            let ok = e.has_nonnegative_coefficients() && (r != c || e.is_one()) && (c <= r || e.is_zero());
            ensure(ok, || format!("decomposition entry [{r}][{c}] = {e}"))?;
        }
    }
    Ok(())
}

/// Every mutation kind at several positions on every catalog entry.
fn mutation_corpus() -> Result<usize, String> {
    let mut count = 0;
    for k in 0..CATALOG_SIZE {
        let b = catalog_entry(k).based;
        for m in ALL {
            for r in 0..6 {
                let w = rejection(mutate(&b, m, r));
                ensure(w.is_some_and(|w| !w.is_empty()), || format!("{m:?} accepted on entry {k}, r = {r}"))?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn split_chain() -> Check {
    for entry in [
        extended_zigzag(3, Field::Rational).map_err(err)?,
        matrix_superalgebra(2, 1, Field::Rational).map_err(err)?,
    ] {
        let start = Instant::now();
        let r = entry.based.check_split_heredity_chain().map_err(err)?;
        ensure(r.passed(), || format!("chain fails:\n{r}"))?;
        for s in &r.steps {
            let x = entry.heredity().cell(s.cell).x.len();
            ensure(s.end_dim == x * x, || format!("End dimension {} at {}, |X|^2 = {}", s.end_dim, s.label, x * x))?;
        }
        ensure(start.elapsed().as_secs_f64() < 1.0, || format!("took {:?}", start.elapsed()))?;
    }
    Ok("split heredity chain passes on Z(3) and M(2|1) with End dimension |X(i)|^2 at every layer".into())
}

fn basicize_fixed_point() -> Check {
    let z = extended_zigzag(3, Field::Rational).map_err(err)?;
    let m = matrix_superalgebra(2, 1, Field::Rational).map_err(err)?;
    let m_reduced = basicize(&m.based).map_err(err)?;
    let z_once = basicize(&z.based).map_err(err)?;
    for (name, input) in [("Z(3)", &z.based), ("M(2|1) reduction", m_reduced.based())] {
        let again = basicize(input).map_err(err)?;
        ensure(Some(&again.f) == input.algebra().unit(), || format!("{name}: f is not the unit"))?;
        ensure(again.algebra().same_structure(input.algebra()), || format!("{name}: algebra changed"))?;
    }
    ensure(z_once.algebra().same_structure(z.algebra()), || "Z(3) is not already basic".into())?;
    Ok("basicize is a fixed point on Z(3) and on the reduction of M(2|1)".into())
}

fn round_trip_and_cli() -> Check {
    let mut entries = 0;
    for k in 0..CATALOG_SIZE {
        let entry = catalog_entry(k);
        let text = format::serialize(&Description::from(&entry));
        let parsed = format::parse(&text).map_err(err)?;
        let again = format::serialize(&parsed);
        ensure(again == text, || format!("catalog entry {k} does not round-trip"))?;
        ensure(parsed.algebra.same_structure(entry.algebra()), || format!("entry {k} changed structure"))?;
        entries += 1;
    }

    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let manifest = std::fs::read_to_string(root.join("manifest.txt")).map_err(|e| e.to_string())?;
    let (mut valid, mut corrupted) = (0, 0);
    for line in manifest.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [file, validate, verify] = parts[..] else {
            return Err(format!("bad manifest line {line:?}"));
        };
        let path = root.join(file);
        let path = path.to_str().unwrap();
        for (cmd, want) in [("validate", validate), ("verify", verify)] {
            let want: i32 = want.parse().map_err(|_| format!("bad code in {line:?}"))?;
            let mut out = Vec::new();
            let mut errs = Vec::new();
            let code = cli::run(["qhalg", cmd, path], &mut std::io::empty(), &mut out, &mut errs);
            ensure(code == want, || format!("{cmd} {file}: exit {code}, expected {want}"))?;
            if want != 0 {
                ensure(!out.is_empty() || !errs.is_empty(), || format!("{cmd} {file}: no witness"))?;
            }
        }
        if file.starts_with("valid/") {
            valid += 1;
        } else {
            corrupted += 1;
        }
    }
    ensure(valid >= 10 && corrupted >= 10, || format!("{valid} valid, {corrupted} corrupted fixtures"))?;
    Ok(format!(
        "{entries} catalog algebras round-trip byte for byte; exit codes match on {valid} valid and {corrupted} corrupted fixtures"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("zigzag decomposition numbers", zigzag_decomposition),
        ("zigzag truncation", zigzag_truncation),
        ("matrix superalgebra", matrix_superalgebra_check),
        ("heredity basis counting", basis_counting),
        ("invariant suite and mutation corpus", invariant_suite),
        ("split heredity chain", split_chain),
        ("basicize fixed point", basicize_fixed_point),
        ("round trip and CLI exit codes", round_trip_and_cli),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!(
                "PASS criterion {} ({name}): {detail} [exact; {:.2?}]",
                n + 1,
                start.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
