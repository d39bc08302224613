//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails. All comparisons are exact.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;

use num_bigint::BigInt;
use ohgraph::analysis::{is_bouquet_family, orientation_sweep, sachs_coefficients};
use ohgraph::coefficients::{
    all_charpolys, charpoly, oracle_charpoly, oracle_scalar, scalar_summary, Objective,
};
use ohgraph::contributors::{enumerate_hat_eq, enumerate_hat_geq, visit_contributors};
use ohgraph::fixtures::{t3, x3};
use ohgraph::matrices::{adjacency_matrix, degree_matrix, incidence_matrix, laplacian, weak_walk_matrix};
use ohgraph::{IntPolynomial, Limits, OrientedHypergraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn limits() -> Limits {
    Limits::default()
}

fn pm(sub_parity: usize) -> i64 {
    if sub_parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn both_paths(g: &OrientedHypergraph, o: Objective, expected: &IntPolynomial) -> std::result::Result<(), String> {
    let c = charpoly(g, o, limits().max_contributors).map_err(|e| e.to_string())?;
    let m = oracle_charpoly(g, o, &limits()).map_err(|e| e.to_string())?;
    ensure(&c == expected && &m == expected, || format!("{o}: contributor {c}, oracle {m}, expected {expected}"))
}

fn criterion_1() -> Outcome {
    let g = t3();
    ensure(
        adjacency_matrix(&g).to_rows() == vec![vec![0, 1, 1], vec![1, 0, -1], vec![1, -1, 0]],
        || "A(T3) differs".into(),
    )?;
    ensure(
        laplacian(&g).to_rows() == vec![vec![2, -1, -1], vec![-1, 2, 1], vec![-1, 1, 2]],
        || "L(T3) differs".into(),
    )?;
    both_paths(&g, Objective::DET_A, &poly(&[2, -3, 0, 1]))?;
    both_paths(&g, Objective::DET_L, &poly(&[-4, 9, -6, 1]))?;
    let max = limits().max_contributors;
    let eq1 = enumerate_hat_eq(&g, 1, max).map_err(|e| e.to_string())?;
    let coeff_a: i64 = eq1.iter().map(|s| pm(s.stats(&g).pc)).sum();
    ensure(eq1.len() == 3 && coeff_a == -3, || format!("|eq1| = {}, coefficient {coeff_a}", eq1.len()))?;
    let geq1 = enumerate_hat_geq(&g, 1, max).map_err(|e| e.to_string())?;
    let coeff_l: i64 = geq1
        .iter()
        .map(|s| {
            let st = s.stats(&g);
            pm(st.ec + st.nc + st.bs)
        })
        .sum();
    ensure(geq1.len() == 15 && coeff_l == 9, || format!("|geq1| = {}, coefficient {coeff_l}", geq1.len()))?;
    Ok("A, L, det charpolys on both paths; |eq1|=3 (x^1: -3), |geq1|=15 (x^1: +9)".into())
}

fn criterion_2() -> Outcome {
    let g = x3();
    both_paths(&g, Objective::DET_A, &poly(&[2, -3, 0, 1]))?;
    both_paths(&g, Objective::DET_L, &poly(&[0, 0, -3, 1]))?;
    let s = scalar_summary(&g, limits().max_contributors).map_err(|e| e.to_string())?;
    let oracle = oracle_scalar(&g, Objective::PERM_L, &limits()).map_err(|e| e.to_string())?;
    ensure(s.perm_l == 6 && s.contributors == 6 && oracle == BigInt::from(6), || {
        format!("perm_L {} oracle {oracle} |C| {}", s.perm_l, s.contributors)
    })?;
    Ok("charpolys on both paths; perm(L) = 6 = |C|".into())
}

/// Instances for criteria 3-5, fixed seed.
fn random_instances() -> Vec<OrientedHypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0A11_CE5E);
    (0..500).map(|_| common::random_hypergraph(&mut rng, 6, 5, 14, false)).collect()
}

fn criterion_3(instances: &[OrientedHypergraph]) -> Outcome {
    let l = limits();
    let mut contributors = 0u64;
    for (n, g) in instances.iter().enumerate() {
        let s = scalar_summary(g, l.max_contributors).map_err(|e| e.to_string())?;
        contributors += s.contributors;
        let polys = all_charpolys(g, l.max_contributors).map_err(|e| e.to_string())?;
        for (o, p) in Objective::ALL.into_iter().zip(polys) {
            let oracle = oracle_scalar(g, o, &l).map_err(|e| e.to_string())?;
            ensure(BigInt::from(s.get(o)) == oracle, || {
                format!("instance {n}: {o} contributor {} oracle {oracle}", s.get(o))
            })?;
            let oracle = oracle_charpoly(g, o, &l).map_err(|e| e.to_string())?;
            ensure(p == oracle, || format!("instance {n}: charpoly {o} contributor {p} oracle {oracle}"))?;
        }
    }
    Ok(format!(
        "{} instances, {contributors} contributors, 4 scalars + 4 polynomials each",
        instances.len()
    ))
}

fn criterion_4(instances: &[OrientedHypergraph]) -> Outcome {
    let mut checked = 0;
    for g in [t3(), x3()].iter().chain(instances) {
        let h = incidence_matrix(g);
        let l = laplacian(g);
        ensure(l == h.mul(&h.transpose()), || "L != HH^T".into())?;
        ensure(l == degree_matrix(g).sub(&adjacency_matrix(g)), || "L != D - A".into())?;
        let neg_l = l.neg();
        for k in 0..=3 {
            let w = weak_walk_matrix(g, k, limits().max_walks).map_err(|e| e.to_string())?;
            ensure(w == neg_l.pow(k), || format!("W{k} != (-L)^{k}"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} instances, k = 0..3"))
}

fn criterion_5(instances: &[OrientedHypergraph]) -> Outcome {
    let mut seen = 0u64;
    let mut violations = 0u64;
    for g in instances {
        let n = g.vertex_count();
        visit_contributors(g, limits().max_contributors, |c| {
            let s = c.stats(g);
            seen += 1;
            if s.bs % 2 != (s.oc + n) % 2 {
                violations += 1;
            }
        })
        .map_err(|e| e.to_string())?;
    }
    ensure(violations == 0, || format!("{violations} of {seen} contributors violate the parity law"))?;
    Ok(format!("{seen} contributors"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0_0D5);
    let l = limits();
    let mut graphs: Vec<OrientedHypergraph> = (0..45)
        .map(|_| common::random_hypergraph(&mut rng, 5, 4, 12, true))
        .collect();
    graphs.extend((0..15).map(|_| common::random_bouquet(&mut rng, 4, 10)));
    graphs.push(t3());
    graphs.push(x3());
    let mut orientations = 0usize;
    let mut bouquet_hits = 0usize;
    for (n, g) in graphs.iter().enumerate() {
        ensure(g.first_empty_edge().is_none() && g.incidence_count() <= 12, || format!("instance {n} malformed"))?;
        let perm = orientation_sweep(g, Objective::PERM_L, &l).map_err(|e| e.to_string())?;
        let det = orientation_sweep(g, Objective::DET_L, &l).map_err(|e| e.to_string())?;
        let c = perm.contributor_count as i64;
        let all_minus = (1u64 << g.incidence_count()) - 1;
        for mask in 0..perm.values.len() {
            let (p, d) = (perm.values[mask], det.values[mask]);
            ensure(-c < p && p <= c && -c < d && d <= c, || {
                format!("instance {n} mask {mask}: perm_L {p}, det_L {d}, |C| {c}")
            })?;
            let bouquet = is_bouquet_family(&g.with_orientation_mask(mask as u64));
            ensure((d == c) == bouquet, || {
                format!("instance {n} mask {mask}: det_L = |C| is {}, bouquet is {bouquet}", d == c)
            })?;
            bouquet_hits += usize::from(bouquet);
        }
        ensure(perm.values[0] == c && perm.values[all_minus as usize] == c, || {
            format!("instance {n}: constant orientations give {} and {}", perm.values[0], perm.values[all_minus as usize])
        })?;
        ensure(perm.max == c, || format!("instance {n}: max perm_L {} != |C| {c}", perm.max))?;
        // spot-check the bucketed sweep against the matrix oracle
        for _ in 0..3 {
            let mask = rng.gen_range(0..perm.values.len());
            let h = g.with_orientation_mask(mask as u64);
            let p = oracle_scalar(&h, Objective::PERM_L, &l).map_err(|e| e.to_string())?;
            let d = oracle_scalar(&h, Objective::DET_L, &l).map_err(|e| e.to_string())?;
            ensure(p == BigInt::from(perm.values[mask]) && d == BigInt::from(det.values[mask]), || {
                format!("instance {n} mask {mask}: sweep disagrees with oracle")
            })?;
        }
        orientations += perm.values.len();
    }
    ensure(bouquet_hits > 0, || "no bouquet orientation was exercised".into())?;
    Ok(format!(
        "{} hypergraphs, {orientations} orientations, {bouquet_hits} bouquet orientations",
        graphs.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0051_61ED);
    let l = limits();
    for n in 0..120 {
        let g = common::random_balanced_signed_graph(&mut rng, 7);
        ensure(g.is_balanced_signed_graph() == Ok(true), || format!("instance {n} not balanced"))?;
        let s = scalar_summary(&g, l.max_contributors).map_err(|e| e.to_string())?;
        let oracle = oracle_scalar(&g, Objective::PERM_A, &l).map_err(|e| e.to_string())?;
        ensure(s.perm_a == s.backstep_free as i64 && oracle == BigInt::from(s.perm_a), || {
            format!("instance {n}: perm_A {} oracle {oracle} |C=0| {}", s.perm_a, s.backstep_free)
        })?;
    }
    Ok("120 balanced signed graphs".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5AC5);
    let l = limits();
    for n in 0..60 {
        let (_, edges, g) = common::random_plain_graph(&mut rng, 6);
        let sachs = sachs_coefficients(&g).map_err(|e| e.to_string())?;
        let contributor = charpoly(&g, Objective::DET_A, l.max_contributors).map_err(|e| e.to_string())?;
        ensure(sachs == contributor, || format!("instance {n} {edges:?}: sachs {sachs} contributor {contributor}"))?;
    }
    Ok("60 simple plain graphs".into())
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn command_matrix(file: &str) -> Vec<Vec<String>> {
    let f = file.to_string();
    let mut cmds: Vec<Vec<&str>> = vec![
        vec!["validate"],
        vec!["canonical"],
        vec!["matrices"],
        vec!["matrices", "--which", "walk", "--k", "2"],
        vec!["scalar", "--matrix", "l", "--kind", "perm"],
        vec!["scalar", "--matrix", "a", "--kind", "det"],
        vec!["contributors", "--mode", "census"],
        vec!["contributors", "--mode", "classes"],
        vec!["contributors", "--filter", "eq:1", "--mode", "census"],
        vec!["contributors", "--filter", "geq:1", "--mode", "census"],
        vec!["walks", "--list"],
        vec!["bounds"],
        vec!["sweep", "--objective", "det_L"],
        vec!["balance"],
        vec!["sachs"],
        vec!["--human", "bounds"],
    ];
    for m in ["a", "l"] {
        for k in ["det", "perm"] {
            cmds.push(vec!["charpoly", "--matrix", m, "--kind", k, "--method", "both"]);
        }
    }
    cmds.into_iter()
        .map(|c| {
            let mut args: Vec<String> = vec![c[0].to_string()];
            if c[0] == "--human" {
                args.push(c[1].to_string());
                args.push(f.clone());
                args.extend(c[2..].iter().map(|s| s.to_string()));
                return args;
            }
            args.push(f.clone());
            if c[0] == "walks" {
                // first vertex to itself, length 2
                args.extend(["__FIRST__".to_string(), "__FIRST__".to_string(), "2".to_string()]);
            }
            args.extend(c[1..].iter().map(|s| s.to_string()));
            args
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ohg");
    let mut runs = 0;
    let mut files: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    for path in files {
        let file = path.to_string_lossy().to_string();
        let g = ohgraph::cli::format::parse_auto(&file, &std::fs::read_to_string(&path).unwrap()).map_err(|e| e.to_string())?;
        let first = g.vertex_names()[0].clone();
        for mut args in command_matrix(&file) {
            for a in &mut args {
                if a == "__FIRST__" {
                    *a = first.clone();
                }
            }
            let argv: Vec<String> = std::iter::once("ohg".to_string()).chain(args.iter().cloned()).collect();
            let a = ohgraph::cli::run(argv.clone(), &mut std::io::empty());
            let b = ohgraph::cli::run(argv, &mut std::io::empty());
            ensure(a == b, || format!("in-process output differs for {args:?}"))?;
            ensure(a.code != 3, || format!("self-verification mismatch for {args:?}: {}", a.stderr))?;
            ensure(a.stdout.is_empty() || a.stdout.ends_with('\n'), || format!("unterminated output for {args:?}"))?;
            let p1 = Command::new(bin).args(&args).output().map_err(|e| e.to_string())?;
            let p2 = Command::new(bin).args(&args).output().map_err(|e| e.to_string())?;
            ensure(p1.stdout == p2.stdout && p1.status == p2.status, || format!("binary output differs for {args:?}"))?;
            ensure(p1.stdout == a.stdout.as_bytes() && p1.status.code() == Some(a.code), || {
                format!("binary and library disagree for {args:?}")
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} command/fixture pairs, each run 4 times"))
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let started = std::time::Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into()))
    });
    let secs = started.elapsed().as_secs_f64();
    match &result {
        Ok(detail) => println!("criterion {id}: PASS  {name} ({detail}; {secs:.1}s)"),
        Err(why) => println!("criterion {id}: FAIL  {name} ({why})"),
    }
    result.is_ok()
}

fn main() {
    let instances = random_instances();
    let results = [
        run(1, "oriented 3-circuit fixture, exact", criterion_1),
        run(2, "extroverted 3-edge fixture, exact", criterion_2),
        run(3, "oracle equivalence on random hypergraphs", || criterion_3(&instances)),
        run(4, "L = HH^T = D - A and W_k = (-L)^k", || criterion_4(&instances)),
        run(5, "parity law bs = oc + |V| (mod 2)", || criterion_5(&instances)),
        run(6, "contributor bounds over full orientation sweeps", criterion_6),
        run(7, "balanced signed graphs: perm(A) = |C=0|", criterion_7),
        run(8, "Sachs basic figures = contributor det(xI - A)", criterion_8),
        run(9, "CLI determinism", criterion_9),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
