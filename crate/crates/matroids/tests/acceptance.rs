//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime and enforcing the runtime target. Criterion 11
//! (byte-identical CLI verify reports) lives with the binary crate.

use std::time::Instant;

use matroids::catalog;
use matroids::extensions::{
    enumerate_modular_cuts, extend_by, extension_cut, guts_cut, CutViolation,
};
use matroids::modularity::{is_modular_matroid, PartitionFamily};
use matroids::quotients::quotient_to_projection;
use matroids::verify::run_suite;
use matroids::Matroid;

fn criterion(name: &str, budget_secs: f64, f: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(()) => println!("acceptance {name}: pass ({elapsed:.2}s)"),
        Err(e) => println!("acceptance {name}: FAIL ({elapsed:.2}s): {e}"),
    }
    if let Err(e) = outcome {
        panic!("{name} failed: {e}");
    }
    assert!(
        elapsed < budget_secs,
        "{name} took {elapsed:.2}s, budget {budget_secs}s"
    );
}

fn suite(id: &str, max_size: usize) -> Result<(), String> {
    let r = run_suite(id, max_size, 0).map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err(format!(
            "suite {id}: {} failures over {} instances, first: {:?}",
            r.failures, r.instances, r.first_counterexample
        ));
    }
    if r.instances == 0 {
        return Err(format!("suite {id} ran no instances"));
    }
    Ok(())
}

#[test]
fn criterion_01_axiom_soundness() {
    criterion("1 axiom soundness", 60.0, || suite("axioms", 8));
}

#[test]
fn criterion_02_modular_pair_iff_mutual_basis() {
    criterion("2 modular pair iff mutual basis", 120.0, || {
        suite("modpairiffbasis", 6)
    });
}

#[test]
fn criterion_03_extension_census() {
    criterion("3 extension census", 10.0, || {
        let u12 = Matroid::uniform(1, 2).map_err(|e| e.to_string())?;
        let cuts12 = enumerate_modular_cuts(&u12).map_err(|e| e.to_string())?;
        if cuts12.len() != 3 {
            return Err(format!("uniform:1,2 census is {}, want 3", cuts12.len()));
        }
        let u23 = Matroid::uniform(2, 3).map_err(|e| e.to_string())?;
        let cuts23 = enumerate_modular_cuts(&u23).map_err(|e| e.to_string())?;
        if cuts23.len() != 6 {
            return Err(format!("uniform:2,3 census is {}, want 6", cuts23.len()));
        }
        // round trips and pairwise distinctness for both censuses
        for (m, cuts) in [(&u12, &cuts12), (&u23, &cuts23)] {
            let mut extensions = Vec::new();
            for cut in cuts.iter() {
                let ext = extend_by(m, "_e", cut).map_err(|e| e.to_string())?;
                let back = extension_cut(&ext, "_e").map_err(|e| e.to_string())?;
                if back.members() != cut.members() {
                    return Err("extension cut does not round-trip".into());
                }
                extensions.push(ext);
            }
            for i in 0..extensions.len() {
                for j in i + 1..extensions.len() {
                    if extensions[i]
                        .equals(&extensions[j])
                        .map_err(|e| e.to_string())?
                    {
                        return Err("two cuts gave the same extension".into());
                    }
                }
            }
        }
        suite("modcutextension", 6)
    });
}

#[test]
fn criterion_04_vamos_guts_counterexample() {
    criterion("4 vamos guts counterexample", 5.0, || {
        let v = catalog::vamos();
        let pairs = catalog::vamos_pairs(&v);
        let fam = PartitionFamily::new(v.ground().clone(), vec![pairs[0], pairs[1]])
            .map_err(|e| e.to_string())?;
        let g = guts_cut(&v, &fam).map_err(|e| e.to_string())?;
        if !g.contains(pairs[2]) || !g.contains(pairs[3]) {
            return Err("guts family misses the other pair sets".into());
        }
        match g.validation().violation() {
            Some(CutViolation::MissingModularIntersection { a, b, inter })
                if (*a, *b) == (pairs[2], pairs[3]) && inter.is_empty() => {}
            other => {
                return Err(format!(
                    "expected the (S3, S4, empty) witness, got {other:?}"
                ))
            }
        }
        suite("vamos-guts", 8)
    });
}

#[test]
fn criterion_05_quotient_equivalences() {
    criterion("5 quotient equivalences", 120.0, || suite("quotequiv", 5));
}

#[test]
fn criterion_06_quotient_reconstruction() {
    criterion("6 quotient reconstruction", 120.0, || {
        let n = Matroid::uniform(1, 3).map_err(|e| e.to_string())?;
        let m = Matroid::uniform(2, 3).map_err(|e| e.to_string())?;
        let w = quotient_to_projection(&n, &m).map_err(|e| e.to_string())?;
        if w.removed_size() != 1 {
            return Err(format!("expected |K| = 1, got {}", w.removed_size()));
        }
        let p = w.matroid();
        let is_u24 = p.len() == 4
            && p.full_mask()
                .subsets()
                .all(|s| p.indep(s) == (s.len() <= 2));
        if !is_u24 {
            return Err("witness is not uniform:2,4 as an oracle".into());
        }
        suite("quotientisproject", 5)
    });
}

#[test]
fn criterion_07_guts_iteration_counts_dual_connectivity() {
    criterion("7 guts iteration equals dual connectivity", 300.0, || {
        suite("lambdadualeq", 6)?;
        suite("gpsub", 6)
    });
}

#[test]
fn criterion_08_connectivity_identities() {
    criterion("8 connectivity identities", 300.0, || {
        suite("connselfdual", 6)?;
        suite("conneqrelrank", 6)?;
        suite("lcmod", 6)?;
        suite("nullitysupermod", 6)
    });
}

#[test]
fn criterion_09_modularity_verdicts() {
    criterion("9 modularity verdicts", 120.0, || {
        for (name, expected) in [
            ("fano", true),
            ("pg_2_3", true),
            ("uniform:3,4", false),
            ("vamos", false),
        ] {
            let m = catalog::get(name).map_err(|e| e.to_string())?;
            let verdict = is_modular_matroid(&m).map_err(|e| e.to_string())?;
            if verdict != expected {
                return Err(format!("{name}: verdict {verdict}, expected {expected}"));
            }
        }
        suite("modularlinehyperplane", 13)
    });
}

#[test]
fn criterion_10_splice() {
    criterion("10 splice", 120.0, || suite("majorofminor", 5));
}

#[test]
fn catalog_expected_tables_reproduce() {
    // supporting check: every frozen catalog value recomputes
    criterion("catalog self-check", 120.0, || {
        catalog::self_check().map_err(|e| e.to_string())
    });
}
