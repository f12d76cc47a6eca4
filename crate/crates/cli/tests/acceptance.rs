//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kgen_core::amalgam::{
    amalgam_normal_form, build_certificate, double_cosets_distinct, in_a, in_b, in_u, is_reduced_word, reconstruct,
    witness_value, Certificate, Side,
};
use kgen_core::cover::{pushforward_b1_twist, twist_correction, CycleClass, EpsilonTable, Generator, LiftClass};
use kgen_core::rep::{conjugated_n, h_form, matrix_mk, matrix_n, multiply, rho};
use kgen_core::sample::{amalgam_word, element_a, element_b, element_u, laurent_q, valid_lift};
use kgen_core::tree::{diag_t, fixes_edge, fixes_vertex, to_rf_matrix, RMatrix};
use kgen_core::{Matrix2, QPoly, Ring, TreeVertex, ZPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_secs), || format!("took {elapsed:.2?}, limit {limit_secs} s"))
}

fn c1_canonical_curve() -> Outcome {
    let start = Instant::now();
    for g in 2..=5 {
        let m = rho(&LiftClass::canonical(g).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(m == matrix_n(), || format!("genus {g}: rho = {m}"))?;
    }
    within(start.elapsed(), 1)?;
    Ok(format!("rho(C*) = N for g = 2..5 in {:.2?}", start.elapsed()))
}

fn c2_conjugation() -> Outcome {
    let start = Instant::now();
    for g in [2, 3] {
        let cs = LiftClass::canonical(g).map_err(|e| e.to_string())?;
        for k in 1..=20 {
            let got = rho(&pushforward_b1_twist(&cs, k).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            // M_k N M_k^-1 multiplied out by hand, independent of the library's conjugation.
            let q = ZPoly::univariate([(1, 1), (0, -2), (-1, 1)]);
            let kk = ZPoly::from_int(Ring::Univariate, k);
            let one = ZPoly::one(Ring::Univariate);
            let expected = Matrix2::new(&one - &(&kk * &q), q.clone(), -&(&(&kk * &kk) * &q), &one + &(&kk * &q));
            ensure(got == expected && got == conjugated_n(k).unwrap(), || format!("g = {g}, k = {k}: {got}"))?;
        }
    }
    within(start.elapsed(), 5)?;
    Ok(format!("40 identities in {:.2?}", start.elapsed()))
}

fn c3_balanced(rng: &mut ChaCha8Rng) -> Outcome {
    let mut images = Vec::new();
    for i in 0..200 {
        let lift = valid_lift(rng, 2 + (i % 4) as u32);
        let m = rho(&lift).map_err(|e| e.to_string())?;
        let h = h_form(&m);
        ensure(h.all_balanced() && m.det().unwrap().is_one(), || format!("lift {i}: {m} ({:?})", h.unbalanced()))?;
        images.push(m);
    }
    let mut products = 0;
    for len in 1..=5 {
        for _ in 0..40 {
            let picks: Vec<Matrix2<ZPoly>> = (0..len).map(|_| images[rng.gen_range(0..images.len())].clone()).collect();
            let p = multiply(&picks).map_err(|e| e.to_string())?;
            ensure(h_form(&p).all_balanced() && p.det().unwrap().is_one(), || format!("product of {len}: {p}"))?;
            products += 1;
        }
    }
    Ok(format!("200 lifts, {products} products of length 1..5"))
}

fn c4_w_triviality(rng: &mut ChaCha8Rng) -> Outcome {
    let mut checks = 0;
    for i in 0..100 {
        let g = 3 + (i % 3) as u32;
        let lift = valid_lift(rng, g);
        let eps = EpsilonTable::random_skew(g, rng);
        let ring = Ring::Genus(g);
        for c in Generator::comms(g) {
            let x = CycleClass::generator(g, c).map_err(|e| e.to_string())?;
            let d = twist_correction(&lift, &x, &eps).map_err(|e| e.to_string())?;
            ensure(d.specialize_phi().unwrap().is_empty(), || format!("lift {i}, {}: Phi leaves {d:?}", c.label()))?;
            for (_, coeff) in d.terms() {
                for v in 0..ring.nvars() {
                    ensure(coeff.specialize_single(v).unwrap().is_zero(), || format!("lift {i}: {coeff} keep u{}", v + 1))?;
                }
            }
            checks += 1;
        }
    }
    Ok(format!("100 lifts, {checks} Comm generators"))
}

fn c5_memberships() -> Outcome {
    let n = matrix_n();
    ensure(in_b(&n).unwrap() && !in_u(&n).unwrap() && !in_a(&n).unwrap(), || "N is not in B \\ U exactly".into())?;
    for k in 1..=20 {
        let m = matrix_mk(k).unwrap();
        ensure(in_a(&m).unwrap() && !in_u(&m).unwrap() && !in_b(&m).unwrap(), || format!("M_{k} is not in A \\ U exactly"))?;
    }
    Ok("N in B\\U, M_k in A\\U for k = 1..20".into())
}

fn c6_double_cosets() -> Outcome {
    for k in 1..=20 {
        for l in k..=20 {
            let r = double_cosets_distinct(k, l).map_err(|e| e.to_string())?;
            // M_l^-1 M_k = [[1, 0], [k - l, 1]], so the witness at t = 0 is k - l.
            ensure(r.distinct == (k != l) && witness_value(&r) == Some(k - l), || format!("({k}, {l}): {r:?}"))?;
        }
    }
    Ok("190 distinct pairs with witnesses k - l, 20 diagonal pairs equal".into())
}

fn kgen(args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_kgen")).args(args).output().expect("spawn kgen").status.code().unwrap_or(-1)
}

/// Every way of shifting one `m` or `n` coefficient of `lift` by ±1.
fn coefficient_mutations(lift: &serde_json::Value) -> Vec<serde_json::Value> {
    let mut out = Vec::new();
    for family in ["m", "n"] {
        for key in lift[family].as_object().unwrap().keys() {
            for delta in [-1, 1] {
                let mut l = lift.clone();
                let v = l[family][key].as_i64().unwrap();
                l[family][key] = serde_json::json!(v + delta);
                out.push(l);
            }
        }
    }
    out
}

fn c7_certificate_cli() -> Outcome {
    for (g, kmax) in [("2", "20"), ("3", "10")] {
        let code = kgen(&["verify", "--genus", g, "--kmax", kmax]);
        ensure(code == 0, || format!("verify --genus {g} --kmax {kmax} exited {code}"))?;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("doc.json");
    let p = path.to_str().unwrap();
    let write = |v: &serde_json::Value| std::fs::write(&path, v.to_string()).map_err(|e| e.to_string());

    let base: serde_json::Value = serde_json::to_value(LiftClass::canonical(2).unwrap().to_json().unwrap()).unwrap();
    let mut mutants = 0;
    for m in coefficient_mutations(&base) {
        write(&m)?;
        let code = kgen(&["verify", "--lift", p, "--kmax", "20"]);
        ensure(code == 1, || format!("base mutant {m} exited {code}"))?;
        mutants += 1;
    }

    let cert = build_certificate(10, 3, &EpsilonTable::zero()).map_err(|e| e.to_string())?;
    let doc: serde_json::Value = serde_json::from_str(&cert.to_json_string()).unwrap();
    write(&doc)?;
    ensure(kgen(&["verify", "--check", p]) == 0, || "unmodified stored certificate rejected".into())?;
    for (i, record) in doc["records"].as_array().unwrap().iter().enumerate() {
        for m in coefficient_mutations(&record["lift"]) {
            let mut d = doc.clone();
            d["records"][i]["lift"] = m;
            write(&d)?;
            let code = kgen(&["verify", "--check", p]);
            ensure(code == 1, || format!("stored mutant in record {i} exited {code}"))?;
            mutants += 1;
        }
    }
    Ok(format!("both runs exit 0; {mutants} single-coefficient mutants all exit 1"))
}

fn rf(m: &Matrix2<QPoly>) -> RMatrix {
    to_rf_matrix(m).unwrap()
}

/// `[[1, p], [0, 1]] [[1, 0], [q, 1]]` with `p, q` supported in `[-2, 2]`,
/// so every entry has degree at most 4 in `t` and `t^-1`.
fn small_element(rng: &mut ChaCha8Rng) -> Matrix2<QPoly> {
    let (p, q) = (laurent_q(rng, -2, 2, 3), laurent_q(rng, -2, 2, 3));
    let one = QPoly::one(Ring::Univariate);
    Matrix2::new(&one + &(&p * &q), p, q, one)
}

fn random_vertex(rng: &mut ChaCha8Rng) -> TreeVertex {
    let a = rng.gen_range(-4..=4);
    TreeVertex::from_parts(a, &laurent_q(rng, -4, 4, 3)).unwrap()
}

fn c8_tree(rng: &mut ChaCha8Rng) -> Outcome {
    let start = Instant::now();
    for i in 0..500 {
        let (u, v, w) = (random_vertex(rng), random_vertex(rng), random_vertex(rng));
        let g = rf(&small_element(rng));
        let (uv, vw, uw) = (u.distance(&v), v.distance(&w), u.distance(&w));
        ensure(u.distance(&u) == 0 && uv == v.distance(&u) && (uv == 0) == (u == v), || format!("sample {i}: {u} {v}"))?;
        ensure(uw <= uv + vw, || format!("sample {i}: triangle fails at {u} {v} {w}"))?;
        let (gu, gv) = (u.act(&g).unwrap(), v.act(&g).unwrap());
        ensure(gu.distance(&gv) == uv, || format!("sample {i}: action changes d({u}, {v})"))?;
    }
    let (base, adj) = (TreeVertex::base(), TreeVertex::adjacent());
    for i in 0..200 {
        let a = element_a(rng, 3, 2);
        let b = element_b(rng, 3, 2);
        let u = element_u(rng, 3, 2);
        ensure(in_a(&a).unwrap() && fixes_vertex(&rf(&a), &base).unwrap(), || format!("A sample {i}"))?;
        ensure(in_b(&b).unwrap() && fixes_vertex(&rf(&b), &adj).unwrap(), || format!("B sample {i}"))?;
        ensure(in_u(&u).unwrap() && fixes_edge(&rf(&u), &base, &adj).unwrap(), || format!("U sample {i}"))?;
    }
    let d = base.distance(&base.act(&diag_t(1, -1)).unwrap());
    ensure(d == 2, || format!("distance(base, diag(t, t^-1) base) = {d}"))?;
    within(start.elapsed(), 30)?;
    Ok(format!("500 metric/isometry samples, 600 stabilizer checks, d = 2, in {:.2?}", start.elapsed()))
}

fn c9_normal_form(rng: &mut ChaCha8Rng) -> Outcome {
    for i in 0..100 {
        let len = rng.gen_range(1..=6);
        let m = amalgam_word(rng, len);
        let word = amalgam_normal_form(&m).map_err(|e| e.to_string())?;
        ensure(reconstruct(&word).unwrap() == m, || format!("word {i}: product differs from {m}"))?;
        ensure(is_reduced_word(&word).unwrap(), || format!("word {i}: sides do not alternate"))?;
    }
    let single = |m: Matrix2<ZPoly>, side: Side| -> Result<(), String> {
        let word = amalgam_normal_form(&m.to_rational()).map_err(|e| e.to_string())?;
        ensure(word.len() == 1 && word[0].side == side, || format!("{m}: {} letters", word.len()))
    };
    single(matrix_n(), Side::B)?;
    for k in 1..=20 {
        single(matrix_mk(k).unwrap(), Side::A)?;
    }
    Ok("100 words reconstruct and alternate; N and M_1..M_20 are single letters".into())
}

fn c10_epsilon_independence(rng: &mut ChaCha8Rng) -> Outcome {
    for g in [2, 3, 4] {
        let reference = build_certificate(10, g, &EpsilonTable::zero()).map_err(|e| e.to_string())?.to_json_string();
        for j in 0..10 {
            let eps = EpsilonTable::random_skew(g, rng);
            let other: Certificate = build_certificate(10, g, &eps).map_err(|e| e.to_string())?;
            ensure(other.to_json_string() == reference, || format!("genus {g}, table {j} changes the certificate"))?;
        }
    }
    Ok("genus 2..4, zero table vs 10 random tables each: byte-identical".into())
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b67_656e);
    let criteria: Vec<(&str, Check)> = vec![
        ("canonical curve identity", Box::new(|_| c1_canonical_curve())),
        ("conjugation identity", Box::new(|_| c2_conjugation())),
        ("balanced form", Box::new(c3_balanced)),
        ("W-triviality and divisibility", Box::new(c4_w_triviality)),
        ("memberships", Box::new(|_| c5_memberships())),
        ("double cosets", Box::new(|_| c6_double_cosets())),
        ("certificate CLI and mutations", Box::new(|_| c7_certificate_cli())),
        ("tree properties", Box::new(c8_tree)),
        ("normal form", Box::new(c9_normal_form)),
        ("epsilon independence", Box::new(c10_epsilon_independence)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        match check(&mut rng) {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
