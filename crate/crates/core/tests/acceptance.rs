//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test -p tring --test acceptance -- --nocapture`
//! to see the lines; every check is exact, so there are no tolerances to
//! tune.

mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::HashSet;
use tring::coxring::{self, CoxPresentation};
use tring::lattice::IntMatrix;
use tring::poly::Homogeneity;
use tring::sweep::{self, SweepBounds};
use tring::trinomial::FactorialityError;
use tring::{batch, ElementOrder, TripleData};

fn conclude(number: u32, name: &str, failures: Vec<String>) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number} ({name}): {verdict}");
    for f in &failures {
        println!("  - {f}");
    }
    assert!(
        failures.is_empty(),
        "criterion {number} ({name}) failed:\n{}",
        failures.join("\n")
    );
}

fn example_triple() -> TripleData {
    TripleData::from_i64(&[(1, 0), (1, 1), (0, 1)], &[&[2], &[2], &[2]])
}

#[test]
fn criterion_1_example_reproduction() {
    let mut failures = Vec::new();
    let t = example_triple();
    let pres = t.presentation().expect("example must be valid");

    if *pres.p_matrix() != IntMatrix::from_i64_rows(&[&[-2, 2, 0], &[-2, 0, 2]]) {
        failures.push(format!("exponent matrix is {}", pres.p_matrix()));
    }
    if pres.grading().rank() != 1 {
        failures.push(format!("rank {} != 1", pres.grading().rank()));
    }
    if pres.grading().torsion() != [BigInt::from(2), BigInt::from(2)] {
        failures.push(format!("torsion {:?}", pres.grading().torsion()));
    }
    if pres.relations().len() != 1 {
        failures.push(format!("{} relations", pres.relations().len()));
    } else {
        let rendered = pres.relations()[0].render(&pres.var_names());
        if rendered != "T_01^2 - T_11^2 + T_21^2" {
            failures.push(format!("relation renders as {rendered}"));
        }
    }
    if !t.is_sincere() {
        failures.push("example must be sincere".into());
    }
    match pres.factoriality() {
        Ok(ev) if !ev.is_factorial() => {}
        Ok(_) => failures.push("example must not be factorial".into()),
        Err(e) => failures.push(format!("factoriality failed: {e}")),
    }

    // isomorphism-invariant degree structure
    let k = pres.grading();
    let d = pres.degrees();
    let two = BigInt::from(2);
    let doubled: Vec<_> = d.iter().map(|x| k.scale(&two, x)).collect();
    if !(doubled[0] == doubled[1] && doubled[1] == doubled[2]) {
        failures.push("doubled degrees must coincide".into());
    }
    let diff1 = k.sub(&d[1], &d[0]);
    let diff2 = k.sub(&d[2], &d[0]);
    if diff1 == diff2 {
        failures.push("torsion differences must be distinct".into());
    }
    for (name, diff) in [("deg(T_11)-deg(T_01)", &diff1), ("deg(T_21)-deg(T_01)", &diff2)] {
        if k.order(diff) != ElementOrder::Finite(two.clone()) {
            failures.push(format!("{name} must have order 2"));
        }
    }
    conclude(1, "example reproduction", failures);
}

#[test]
fn criterion_2_factoriality_equivalence_sweep() {
    let bounds = SweepBounds {
        r: 2,
        max_block_size: 2,
        max_exponent: 4,
    };
    let triples = sweep::candidates(&bounds);
    let outcomes = batch::map(&triples, |t| {
        if !t.is_sincere() {
            return Ok(None);
        }
        let pres = t.presentation().expect("sweep candidates are valid");
        match pres.factoriality() {
            Ok(ev) => Ok(Some(ev.is_factorial())),
            Err(e) => Err(format!("{:?} / n={:?}: {e}", t.exponents(), t.block_sizes())),
        }
    });
    let mut failures = Vec::new();
    let mut sincere = 0usize;
    let mut factorial = 0usize;
    for outcome in outcomes {
        match outcome {
            Ok(None) => {}
            Ok(Some(f)) => {
                sincere += 1;
                factorial += f as usize;
            }
            Err(e) => failures.push(e),
        }
    }
    println!(
        "  swept {} candidates, {sincere} sincere, {factorial} factorial",
        triples.len()
    );
    if sincere == 0 {
        failures.push("sweep contained no sincere triples".into());
    }
    if factorial == 0 || factorial == sincere {
        failures.push("sweep must contain both verdicts".into());
    }
    conclude(2, "factoriality equivalence sweep", failures);
}

#[test]
fn criterion_3_homogeneity() {
    let triples = common::random_suite(31, 200, 1, 4, 3, 5);
    let results = batch::map(&triples, |t| {
        let pres = t.presentation().expect("valid");
        let r = t.r();
        let mut shared = None;
        for i in 0..=r {
            for j in i + 1..=r {
                for k in j + 1..=r {
                    match t.relation(i, j, k).homogeneity(pres.grading(), pres.degrees()) {
                        Homogeneity::Homogeneous(d) => {
                            if shared.get_or_insert_with(|| d.clone()) != &d {
                                return Err(format!("degree differs at ({i},{j},{k})"));
                            }
                        }
                        other => return Err(format!("({i},{j},{k}) not homogeneous: {other:?}")),
                    }
                }
            }
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    conclude(3, "homogeneity of all trinomials", failures);
}

#[test]
fn criterion_4_pointedness_and_complexity() {
    let triples = common::random_suite(31, 200, 1, 4, 3, 5);
    let results = batch::map(&triples, |t| {
        let zeta = t.pointedness_witness();
        if !zeta.iter().all(|z| z.is_positive()) {
            return Err("witness not positive".to_string());
        }
        if !t.exponent_matrix().mul_vec(&zeta).iter().all(|x| x.is_zero()) {
            return Err("witness not in kernel".to_string());
        }
        let pres = t.presentation().expect("valid");
        let n = t.total_vars();
        let r = t.r();
        if pres.grading().rank() != n - r {
            return Err(format!("rank {} != {}", pres.grading().rank(), n - r));
        }
        if !pres.is_complexity_one() {
            return Err("degrees fail to generate".to_string());
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    conclude(4, "pointedness witness and complexity one", failures);
}

#[test]
fn criterion_5_span_property() {
    let triples = common::random_suite(53, 80, 3, 4, 3, 5);
    let results = batch::map(&triples, |t| {
        let pres = t.presentation().expect("valid");
        let consecutive = pres.relations();
        let r = t.r();
        for i in 0..=r {
            for j in i + 1..=r {
                for k in j + 1..=r {
                    let g = t.relation(i, j, k);
                    let Some(lambda) = g.in_linear_span(consecutive) else {
                        return Err(format!("({i},{j},{k}) outside the span"));
                    };
                    let mut rebuilt = tring::SparsePoly::zero(g.vars());
                    for (gen, l) in consecutive.iter().zip(&lambda) {
                        rebuilt = rebuilt.add(&gen.scale(l));
                    }
                    if !rebuilt.sub(&g).is_zero() {
                        return Err(format!("nonzero residual at ({i},{j},{k})"));
                    }
                }
            }
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    conclude(5, "span property of non-consecutive relations", failures);
}

/// Brute-force oracle: all variables witnessed by some integer vector in
/// the box `|m_s| <= 10` whose image has entry +1 at the variable and <= 0
/// elsewhere. Machine-word arithmetic, independent of the library path.
fn obstruction_oracle(t: &TripleData) -> HashSet<(usize, usize)> {
    let r = t.r();
    let vars = t.var_pairs();
    let exps = t.exponents();
    let mut witnessed = HashSet::new();
    let mut m = vec![-10i64; r];
    'outer: loop {
        let sigma: i64 = m.iter().sum();
        let mut hit: Option<usize> = None;
        let mut ok = true;
        for (v, &(i, j)) in vars.iter().enumerate() {
            let c = if i == 0 {
                -(exps[0][j] as i64) * sigma
            } else {
                m[i - 1] * exps[i][j] as i64
            };
            if c > 0 {
                if c == 1 && hit.is_none() {
                    hit = Some(v);
                } else {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            if let Some(v) = hit {
                witnessed.insert(vars[v]);
            }
        }
        for digit in m.iter_mut() {
            if *digit < 10 {
                *digit += 1;
                continue 'outer;
            }
            *digit = -10;
        }
        break;
    }
    witnessed
}

#[test]
fn criterion_6_degree_extremality_oracle_agreement() {
    let triples = common::random_suite(61, 200, 1, 4, 3, 5);
    let results = batch::map(&triples, |t| {
        let pres = t.presentation().expect("valid");
        let oracle = obstruction_oracle(t);
        for &(i, j) in pres.vars().to_vec().iter() {
            let structural = pres.degree_extremal_obstruction(i, j).is_some();
            let brute = oracle.contains(&(i, j));
            if structural != brute {
                return Err(format!(
                    "disagreement at ({i},{j}): structural {structural}, oracle {brute}"
                ));
            }
        }
        Ok(())
    });
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    conclude(6, "degree-extremality oracle agreement", failures);
}

fn surface_builds() -> Vec<CoxPresentation> {
    let mut triples = vec![example_triple()];
    triples.extend(common::random_suite(71, 50, 1, 4, 3, 5));
    batch::map(&triples, |t| {
        let pres = t.presentation().expect("valid");
        let data = coxring::surface_recipe(&pres);
        CoxPresentation::build(pres, data).expect("surface recipe must be admissible")
    })
}

#[test]
fn criterion_7_surface_recipe_and_isotropy() {
    let builds = surface_builds();
    let mut failures = Vec::new();
    for (idx, cox) in builds.iter().enumerate() {
        let rep = cox.admissibility();
        if !(rep.bound_ok && rep.columns_primitive() && rep.columns_distinct() && rep.cone_full) {
            failures.push(format!("build {idx}: {rep}"));
            continue;
        }
        let t = cox.base().triple();
        let n = t.total_vars();
        for (col, &(i, j)) in cox.base().vars().to_vec().iter().enumerate() {
            let expected = ElementOrder::Finite(BigInt::from(t.exponents()[i][j]));
            if cox.isotropy_order(col) != expected {
                failures.push(format!("build {idx}: T column {col} has wrong isotropy"));
            }
        }
        for col in n..n + 2 {
            if cox.isotropy_order(col) != ElementOrder::Infinite {
                failures.push(format!("build {idx}: S column {col} must be infinite"));
            }
        }
    }
    conclude(7, "surface recipe admissibility and isotropy", failures);
}

#[test]
fn criterion_8_downgrade_soundness() {
    let builds = surface_builds();
    let mut failures = Vec::new();
    for (idx, cox) in builds.iter().enumerate() {
        let base = cox.base();
        let t = base.triple();
        let n = t.total_vars();
        let m = cox.data().extra_vars();
        let r = t.r();
        let s = cox.data().s();

        let all_degrees: Vec<_> = cox
            .t_degrees()
            .iter()
            .chain(cox.s_degrees())
            .cloned()
            .collect();
        for rel in base.relations() {
            let lifted = rel.extend_vars(n + m);
            if !matches!(
                lifted.homogeneity(cox.grading(), &all_degrees),
                Homogeneity::Homogeneous(_)
            ) {
                failures.push(format!("build {idx}: relation not homogeneous downstairs"));
            }
        }
        if cox.grading().rank() != n + m - (r + s) {
            failures.push(format!(
                "build {idx}: rank {} != {}",
                cox.grading().rank(),
                n + m - (r + s)
            ));
        }
        match cox.pointedness_certificate() {
            None => failures.push(format!("build {idx}: no positive kernel vector")),
            Some(x) => {
                if !x.iter().all(|v| v.is_positive()) {
                    failures.push(format!("build {idx}: certificate not positive"));
                }
                // exact kernel check over the rationals
                let block = cox.block_matrix();
                for row in 0..block.rows() {
                    let dot: num_rational::BigRational = (0..block.cols())
                        .map(|c| {
                            num_rational::BigRational::from(block.at(row, c).clone()) * &x[c]
                        })
                        .sum();
                    if !dot.is_zero() {
                        failures.push(format!("build {idx}: certificate not in kernel"));
                        break;
                    }
                }
            }
        }
        if !cox.degrees_pairwise_distinct() {
            failures.push(format!("build {idx}: colliding degrees"));
        }
    }
    conclude(8, "downgrade soundness", failures);
}

#[test]
fn factoriality_errors_are_loud() {
    // guard used by the sweep machinery: mismatch is an error type, and
    // non-sincere data is refused rather than extrapolated
    let t = TripleData::from_i64(&[(1, 0), (1, 1)], &[&[2], &[2]]);
    let pres = t.presentation().unwrap();
    assert_eq!(pres.factoriality(), Err(FactorialityError::NotSincere));
}
