//! Acceptance suite: one pass/fail line per criterion, non-zero exit on
//! any failure.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{model, random_vector, unit, GROUPS};
use sympoly::affinechart::{
    bracket_degree_dichotomy, build_chart, commuting_frame_check, right_invariant_field, right_invariant_form,
    right_multivector, symplectic_matrix, volume_check, volume_form, ChartError, ChartModel, SymplecticMatrix,
};
use sympoly::catalog::{self, golden_compare, numeric_oracle, ChartTables, OracleTensor};
use sympoly::cli;
use sympoly::generate::random_valid_pairs;
use sympoly::leftinvariant::{left_invariant_field, left_multivector, lie_poisson_difference};
use sympoly::liealgebra::{
    check_cocycle, check_jacobi, yang_baxter_r, ConstMultiVector, StructureConstants, TwoCocycle,
};
use sympoly::polycore::{rat, Polynomial};
use sympoly::tensorcalc::{koszul_bracket, lie_bracket, schouten_bracket};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(ctx: &str) -> impl FnOnce(E) -> String + '_ {
    move |err| format!("{ctx}: {err}")
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["sympoly"];
    full.extend_from_slice(args);
    let code = cli::run(full, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

fn all_models() -> Vec<(String, ChartModel)> {
    let mut out: Vec<(String, ChartModel)> = catalog::ids()
        .into_iter()
        .map(|id| (id.to_string(), model(id)))
        .collect();
    for (i, (c, w)) in random_valid_pairs(2024, 50).into_iter().enumerate() {
        out.push((
            format!("random #{i}"),
            build_chart(&c, &w).expect("generated pairs are valid"),
        ));
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for id in ["g1", "g3", "g4"] {
        let (code, text) = run_cli(&["catalog", id, "--golden"]);
        ensure(code == 0, || format!("catalog {id} --golden exited {code}: {text}"))?;
    }
    let entry = catalog::load("g2").map_err(e("g2"))?;
    let computed = ChartTables::from_model(&entry.chart().map_err(e("g2"))?).map_err(e("g2"))?;
    let report = golden_compare(&entry, &computed);
    ensure(report.is_empty(), || {
        format!("g2 differs from the resolved target: {:?}", report.diffs)
    })?;
    let p_locs: Vec<&str> = report
        .printed_discrepancies
        .iter()
        .filter(|d| d.table == "P")
        .map(|d| d.location.as_str())
        .collect();
    ensure(p_locs == ["(1,2)", "(2,1)"], || {
        format!("g2 P discrepancies at {p_locs:?}")
    })?;
    let (code, text) = run_cli(&["catalog", "g2", "--golden"]);
    ensure(code == 0 && text.contains("reference-table discrepancy"), || {
        format!("catalog g2 --golden exited {code}: {text}")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "g1, g3, g4 exact; g2 matches the resolved target with {} reference discrepancies listed",
        report.printed_discrepancies.len()
    ))
}

fn criterion_2(models: &[(String, ChartModel)]) -> Outcome {
    for (label, m) in models {
        let n = m.dim();
        let p = m.poisson_matrix();
        let zero = vec![rat(0); n];
        ensure(&p.eval(&zero).map_err(e(label))? == m.omega().matrix(), || {
            format!("{label}: P(0) ≠ ω")
        })?;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = p.get(i, j).partial(k).map_err(e(label))?;
                    let want = Polynomial::constant(n, m.algebra().coeff(i, j, k));
                    ensure(d == want, || format!("{label}: ∂_{k} P_{i}{j} ≠ C"))?;
                }
            }
        }
        ensure(bracket_degree_dichotomy(m), || {
            format!("{label}: degree dichotomy fails")
        })?;
    }
    Ok(format!("{} models (5 catalog + 50 random)", models.len()))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    for id in catalog::ids() {
        let m = model(id);
        let n = m.dim();
        for _ in 0..20 {
            let vs: Vec<_> = (0..3).map(|_| random_vector(&mut rng, n)).collect();
            let fields: Vec<_> = vs
                .iter()
                .map(|v| right_invariant_field(&m, v).map(|f| f.to_multivector()))
                .collect::<Result<_, _>>()
                .map_err(e(id))?;
            ensure(fields[0].degree() <= 1, || format!("{id}: deg u⁻ > 1"))?;
            let uv = fields[0].wedge(&fields[1]).map_err(e(id))?;
            ensure(uv.degree() <= 2, || format!("{id}: deg u⁻∧v⁻ > 2"))?;
            let w2 = ConstMultiVector::from_vector(&vs[0])
                .wedge(&ConstMultiVector::from_vector(&vs[1]))
                .map_err(e(id))?;
            ensure(right_multivector(&m, &w2).map_err(e(id))? == uv, || {
                format!("{id}: (u∧v)⁻ ≠ u⁻∧v⁻")
            })?;
            if n >= 3 {
                let uvw = uv.wedge(&fields[2]).map_err(e(id))?;
                ensure(uvw.degree() <= 3, || format!("{id}: deg u⁻∧v⁻∧w⁻ > 3"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} random triples over 5 catalog entries"))
}

fn criterion_4() -> Outcome {
    for id in GROUPS {
        let m = model(id);
        let v = volume_check(&m).map_err(e(id))?;
        ensure(v.det.is_constant() && v.parallel && v.wedge_parallel, || {
            format!("{id}: det P = {:?} not constant", v.det)
        })?;
        let s = match symplectic_matrix(&m).map_err(e(id))? {
            SymplecticMatrix::Polynomial { s, .. } => s,
            SymplecticMatrix::NonPolynomial { .. } => return Err(format!("{id}: S not polynomial")),
        };
        ensure(s.degree() <= 3, || format!("{id}: deg S = {}", s.degree()))?;
        ensure(s.checked_mul(m.poisson_matrix()).map_err(e(id))?.is_identity(), || {
            format!("{id}: S·P ≠ I")
        })?;
        ensure(volume_form(&m).map_err(e(id))?.degree() <= 0, || {
            format!("{id}: ∧²ω⁺ not constant")
        })?;
    }
    let m = model("aff2");
    let x2 = Polynomial::var(2, 1);
    let expected = (&x2 + &Polynomial::one(2)).pow(2);
    match symplectic_matrix(&m).map_err(e("aff2"))? {
        SymplecticMatrix::NonPolynomial { det, .. } => ensure(det == expected, || format!("aff2 det = {det:?}"))?,
        SymplecticMatrix::Polynomial { .. } => return Err("aff2: S polynomial".into()),
    }
    ensure(
        matches!(
            right_invariant_form(&m, &[rat(1), rat(0)]),
            Err(ChartError::NonUnimodular { .. })
        ),
        || "aff2: right forms did not raise the marker".into(),
    )?;
    let (_, text) = run_cli(&["chart", "aff2", "--symplectic"]);
    ensure(text.contains(cli::NON_UNIMODULAR_MARKER), || {
        format!("aff2 chart output lacks the marker: {text}")
    })?;
    Ok("g1–g4 constant det, S·P = I, constant top power; aff2 det = (x2 + 1)^2 with marker".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    for (id, cap) in [("g1", 3), ("g4", 2)] {
        let m = model(id);
        let lefts: Vec<_> = (0..4)
            .map(|i| left_invariant_field(&m, &unit(4, i)))
            .collect::<Result<_, _>>()
            .map_err(e(id))?;
        for (i, l) in lefts.iter().enumerate() {
            ensure(l.achieved_degree <= cap, || {
                format!("{id}: e{}⁺ has degree {}", i + 1, l.achieved_degree)
            })?;
            for j in 0..4 {
                let r = right_invariant_field(&m, &unit(4, j)).map_err(e(id))?;
                ensure(lie_bracket(&l.field, &r).map_err(e(id))?.is_zero(), || {
                    format!("{id}: [e{}⁺, e{}⁻] ≠ 0", i + 1, j + 1)
                })?;
            }
        }
        let r = yang_baxter_r(m.omega()).map_err(e(id))?;
        ensure(left_multivector(&m, &r).map_err(e(id))? == m.poisson_bivector(), || {
            format!("{id}: r⁺ ≠ P")
        })?;
    }
    for id in ["g2", "g3"] {
        match left_invariant_field(&model(id), &unit(4, 0)) {
            Err(ChartError::NotNilpotent(_)) => {}
            other => return Err(format!("{id}: solver did not refuse: {other:?}")),
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok("g1 (≤ 3) and g4 (≤ 2) solved, 32 brackets vanish, r⁺ = P; g2, g3 refused".into())
}

fn jacobiator_vanishes(m: &ChartModel) -> Result<bool, String> {
    let p = m.poisson_bivector();
    Ok(schouten_bracket(&p, &p).map_err(e("schouten"))?.is_zero())
}

fn criterion_6(models: &[(String, ChartModel)]) -> Outcome {
    for (label, m) in models {
        ensure(jacobiator_vanishes(m)?, || format!("{label}: [P, P] ≠ 0"))?;
    }
    let g1 = catalog::load("g1").map_err(e("g1"))?;
    // C¹₁₂: 0 → 1 breaks Jacobi
    let mut c: StructureConstants = g1.algebra.clone();
    c.set_coefficient(0, 1, 0, rat(1)).map_err(e("corrupt"))?;
    ensure(check_jacobi(&c).is_err(), || "corrupted C passes Jacobi".into())?;
    ensure(!jacobiator_vanishes(&ChartModel::new_unchecked(&c, &g1.omega))?, || {
        "corrupted C has [P,P] = 0".into()
    })?;
    // ω₂₃ = 1 breaks the cocycle identity
    let mut w = g1.omega.matrix().clone();
    w.set(1, 2, rat(1));
    w.set(2, 1, rat(-1));
    let w = TwoCocycle::new(w).map_err(e("omega"))?;
    ensure(check_cocycle(&w, &g1.algebra).is_err(), || {
        "corrupted ω passes the cocycle check".into()
    })?;
    ensure(
        !jacobiator_vanishes(&ChartModel::new_unchecked(&g1.algebra, &w))?,
        || "corrupted ω has [P,P] = 0".into(),
    )?;
    Ok(format!(
        "[P,P] = 0 on {} models; both corruptions caught algebraically and geometrically",
        models.len()
    ))
}

fn criterion_7() -> Outcome {
    for id in ["g1", "g4"] {
        let m = model(id);
        let r = yang_baxter_r(m.omega()).map_err(e(id))?;
        let d = lie_poisson_difference(&m, &r).map_err(e(id))?;
        ensure(d.degree() <= 2, || format!("{id}: deg(r⁺ − r⁻) = {}", d.degree()))?;
        ensure(schouten_bracket(&d, &d).map_err(e(id))?.is_zero(), || {
            format!("{id}: [r⁺−r⁻, r⁺−r⁻] ≠ 0")
        })?;
    }
    Ok("g1, g4: r⁺ − r⁻ of degree ≤ 2 and Schouten-closed".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for id in GROUPS {
        let entry = catalog::load(id).map_err(e(id))?;
        let m = entry.chart().map_err(e(id))?;
        let oracle = entry.oracle.as_ref().ok_or_else(|| format!("{id}: no oracle"))?;
        let s = symplectic_matrix(&m).map_err(e(id))?;
        let s = s.polynomial().ok_or_else(|| format!("{id}: S not polynomial"))?;
        for _ in 0..10 {
            let x = random_vector(&mut rng, 4);
            let p_num = numeric_oracle(oracle, OracleTensor::Poisson, &x).map_err(e(id))?;
            ensure(p_num == m.poisson_matrix().eval(&x).map_err(e(id))?, || {
                format!("{id}: P differs at {x:?}")
            })?;
            let s_num = numeric_oracle(oracle, OracleTensor::Symplectic, &x).map_err(e(id))?;
            ensure(s_num == s.eval(&x).map_err(e(id))?, || {
                format!("{id}: S differs at {x:?}")
            })?;
        }
    }
    Ok("40 random chart points, exact equality for P and S".into())
}

fn criterion_9() -> Outcome {
    for id in GROUPS {
        let m = model(id);
        commuting_frame_check(&m).map_err(e(id))?;
        let pi = m.poisson_bivector();
        let forms: Vec<_> = (0..4)
            .map(|i| right_invariant_form(&m, &unit(4, i)))
            .collect::<Result<_, _>>()
            .map_err(e(id))?;
        for i in 0..4 {
            for j in 0..4 {
                let k = koszul_bracket(&forms[i], &forms[j], &pi).map_err(e(id))?;
                ensure(k.is_zero(), || format!("{id}: [α{}⁻, α{}⁻]_π ≠ 0", i + 1, j + 1))?;
            }
        }
    }
    Ok("commuting constant frames and vanishing Koszul brackets on g1–g4".into())
}

fn main() {
    let suite = Instant::now();
    let models = all_models();
    let mut results: Vec<(usize, Outcome, Duration)> = Vec::new();
    let mut timed = |n: usize, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let r = f();
        results.push((n, r, t.elapsed()));
    };
    timed(1, &criterion_1);
    timed(2, &|| criterion_2(&models));
    timed(3, &criterion_3);
    timed(4, &criterion_4);
    timed(5, &criterion_5);
    timed(6, &|| criterion_6(&models));
    timed(7, &criterion_7);
    timed(8, &criterion_8);
    timed(9, &criterion_9);
    let total = suite.elapsed();
    let limit = Duration::from_secs(60);
    results.push((
        10,
        if total < limit {
            Ok(format!("acceptance suite ran in {total:.2?}"))
        } else {
            Err(format!("acceptance suite took {total:.2?}"))
        },
        total,
    ));

    let mut failed = 0;
    for (n, r, t) in &results {
        match r {
            Ok(msg) => println!("criterion {n:>2}: PASS  [{t:.2?}] {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  [{t:.2?}] {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
