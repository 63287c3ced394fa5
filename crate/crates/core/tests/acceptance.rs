//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p ybknot-core --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybknot_core::algebra::{catalog, LinMap};
use ybknot_core::braid::fixtures;
use ybknot_core::invariant::{
    alexander, markov_trace, modified_markov_trace, skein_check, verify_enhancement, Enhancement, InvariantError,
};
use ybknot_core::oracle::{alexander_burau, alexander_skein, units_equal};
use ybknot_core::ybop::{check_braid_equation, raw_operator};
use ybknot_core::{BraidWord, Monomial, Rational, Scalar, TensorOp, YbError, YbOperator};

const SEED: u64 = 0x5eed_0b7a;

type Outcome = Result<String, String>;

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = if n < 2 { 0 } else { rng.random_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let g = rng.random_range(1..n as i32);
            if rng.random_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(n, letters).expect("generated letters are in range")
}

fn random_braid(rng: &mut ChaCha8Rng, max_n: usize, max_len: usize) -> BraidWord {
    let n = rng.random_range(1..=max_n);
    random_word(rng, n, max_len)
}

fn random_unit(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.random_range(1..=3i64) * if rng.random_bool(0.5) { 1 } else { -1 };
    let den = rng.random_range(1..=2i64);
    let m = Monomial::new(2 * rng.random_range(-1..=1), 2 * rng.random_range(-1..=1), 0);
    Scalar::term(Rational::new(num.into(), den.into()), m)
}

fn r_xy(alg: &ybknot_core::Algebra) -> YbOperator {
    YbOperator::r_xy(alg, Scalar::x(), Scalar::y()).expect("R_{x,y} is a Yang-Baxter operator")
}

fn dual_enhancement() -> Enhancement {
    let dual = catalog::dual_numbers();
    Enhancement::solve(&r_xy(&dual.algebra), &dual.mu).expect("solvable").expect("enhancement exists")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn criterion_1(rng: &mut ChaCha8Rng) -> Outcome {
    let (x, y) = (Scalar::x(), Scalar::y());
    for named in [catalog::dual_numbers(), catalog::split()] {
        let alg = &named.algebra;
        for (label, z) in [("z = x", x.clone()), ("z = y", y.clone())] {
            let r = YbOperator::new(alg, x.clone(), y.clone(), z).map_err(|e| format!("{} {label}: {e}", named.name))?;
            r.check_braid_equation().map_err(|e| format!("{} {label}: {e}", named.name))?;
        }
    }
    let alg = catalog::dual_numbers().algebra;
    let mut rejected = 0;
    let mut raw_failures = 0;
    while rejected < 20 {
        let mut p = [random_unit(rng), random_unit(rng), random_unit(rng)];
        if rng.random_bool(0.25) {
            p[rng.random_range(0..3)] = Scalar::zero();
        }
        let [px, py, pz] = p;
        if ybknot_core::ybop::classify(&px, &py, &pz).is_some() {
            continue;
        }
        match YbOperator::new(&alg, px.clone(), py.clone(), pz.clone()) {
            Err(YbError::NotYangBaxter { .. }) => rejected += 1,
            other => return Err(format!("({px}, {py}, {pz}) not rejected: {other:?}")),
        }
        if check_braid_equation(&raw_operator(&alg, &px, &py, &pz)).is_err() {
            raw_failures += 1;
        }
    }
    Ok(format!("2 algebras x 2 cases hold; 20/20 rejected ({raw_failures} also fail the braid equation directly)"))
}

fn criterion_2() -> Outcome {
    for named in catalog::all() {
        let r = r_xy(&named.algebra);
        let inv = r.inverse();
        let xy = Scalar::x() * Scalar::y();
        let lhs = r.matrix().sub(&inv.matrix().scale(&xy)).map_err(|e| e.to_string())?;
        let rhs = TensorOp::identity(r.dim(), 2).scale(&(Scalar::y() - Scalar::x()));
        ensure(lhs == rhs, || format!("{}: R - xy R^-1 != (y - x) Id", named.name))?;
        r.check_quadratic().map_err(|e| format!("{}: {e}", named.name))?;
    }
    Ok("exact on dual, split, involutive".into())
}

fn criterion_3() -> Outcome {
    let dual = catalog::dual_numbers();
    let r = r_xy(&dual.algebra);
    let alpha: Scalar = "x^1/2*y^1/2".parse().unwrap();
    let beta: Scalar = "x^1/2*y^-1/2".parse().unwrap();
    let e = verify_enhancement(&r, &dual.mu, &alpha, &beta).map_err(|e| e.to_string())?;
    ensure(e.c().is_one(), || format!("c = {}", e.c()))?;
    match verify_enhancement(&r, &LinMap::identity(2), &alpha, &beta) {
        Err(InvariantError::E2PlusFails(_) | InvariantError::E2MinusFails(_)) => {}
        other => return Err(format!("mu = Id not rejected by E2: {other:?}")),
    }
    Ok("accepted with c = 1; mu = Id rejected".into())
}

fn criteria_4_and_9(rng: &mut ChaCha8Rng) -> (Outcome, Outcome) {
    let e = dual_enhancement();
    let g = e.s_image();
    let mut scalar_errors = Vec::new();
    let mut image_errors = Vec::new();
    for _ in 0..100 {
        let b = random_braid(rng, 4, 8);
        match modified_markov_trace(&e, &b) {
            Err(err) => scalar_errors.push(format!("{b}: {err}")),
            Ok(x) => {
                let p = e.beta() * &x;
                match ybknot_core::invariant::pull_back(&p, &g) {
                    Ok(_) => {}
                    Err(err) => image_errors.push(format!("{b}: {err}")),
                }
            }
        }
    }
    let c4 = if scalar_errors.is_empty() {
        Ok("100/100 chains end in a scalar multiple of Id".into())
    } else {
        Err(format!("{} failures, first: {}", scalar_errors.len(), scalar_errors[0]))
    };
    let c9 = if image_errors.is_empty() && scalar_errors.is_empty() {
        Ok(format!("100/100 lie in the subring generated by {g}"))
    } else if scalar_errors.is_empty() {
        Err(format!("{} NotInImage, first: {}", image_errors.len(), image_errors[0]))
    } else {
        Err("trace chain failures prevented the check".into())
    };
    (c4, c9)
}

fn criterion_5(rng: &mut ChaCha8Rng) -> Outcome {
    let e = dual_enhancement();
    let t = |b: &BraidWord| modified_markov_trace(&e, b).map_err(|err| format!("{b}: {err}"));
    for _ in 0..50 {
        let b = random_braid(rng, 4, 8);
        let g = random_word(rng, b.strands(), 8);
        let conj = b.conjugate(&g).map_err(|err| err.to_string())?;
        ensure(t(&b)? == t(&conj)?, || format!("conjugation changed T: {b} by {g}"))?;
    }
    for _ in 0..50 {
        let b = random_braid(rng, 4, 8);
        let stab = b.stabilize(rng.random_bool(0.5));
        ensure(t(&b)? == t(&stab)?, || format!("stabilization changed T: {b} -> {stab}"))?;
    }
    Ok("50 conjugations and 50 stabilizations leave T_{S,1} unchanged".into())
}

fn criterion_6(rng: &mut ChaCha8Rng) -> Outcome {
    let e = dual_enhancement();
    let trace_mu = e.mu().trace();
    for _ in 0..50 {
        let b = random_braid(rng, 4, 8);
        let full = markov_trace(&e, &b);
        let modified = modified_markov_trace(&e, &b).map_err(|err| format!("{b}: {err}"))?;
        ensure(full == &trace_mu * &modified && full.is_zero(), || format!("{b}: T_S = {full}"))?;
    }
    Ok("T_S = Tr(mu) T_{S,1} = 0 on 50 braids".into())
}

fn criterion_7(rng: &mut ChaCha8Rng) -> Outcome {
    let e = dual_enhancement();
    for _ in 0..50 {
        let n = rng.random_range(2..=4);
        let budget = rng.random_range(0..=7);
        let prefix = random_word(rng, n, budget);
        let suffix = random_word(rng, n, 7 - prefix.len());
        let i = rng.random_range(1..n);
        skein_check(&e, &prefix, i, &suffix).map_err(|err| format!("({prefix}) s{i} ({suffix}): {err}"))?;
    }
    Ok("50/50 triples satisfy the skein relation".into())
}

fn criterion_8(rng: &mut ChaCha8Rng) -> Outcome {
    let e = dual_enhancement();
    let expected = ["1", "1", "t^1/2 - t^-1/2", "t - 1 + t^-1", "-t + 3 - t^-1"];
    for ((name, b), want) in fixtures().into_iter().zip(expected) {
        let want: Scalar = want.parse().unwrap();
        let pipeline = alexander(&e, &b).map_err(|err| format!("{name}: {err}"))?;
        let skein = alexander_skein(&b).map_err(|err| format!("{name}: {err}"))?;
        ensure(pipeline == skein && skein == want, || format!("{name}: pipeline {pipeline}, skein {skein}, want {want}"))?;
    }
    for _ in 0..25 {
        let b = random_braid(rng, 3, 6);
        let pipeline = alexander(&e, &b).map_err(|err| format!("{b}: {err}"))?;
        let burau = alexander_burau(&b).map_err(|err| format!("{b}: {err}"))?;
        ensure(units_equal(&pipeline, &burau), || format!("{b}: pipeline {pipeline}, burau {burau}"))?;
    }
    Ok("5 fixtures exact against skein; 25 random braids match Burau up to units".into())
}

fn criterion_10() -> Outcome {
    for named in catalog::all() {
        let r = r_xy(&named.algebra);
        for m in -3..=3 {
            r.span_coefficients(m).map_err(|err| format!("{}: {err}", named.name))?;
        }
    }
    Ok("R^m in span{Id, R} for m in [-3, 3] on all catalog algebras".into())
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn report(id: &str, limit: Duration, outcome: Outcome, elapsed: Duration) -> bool {
    let outcome = match outcome {
        Ok(msg) if elapsed > limit => Err(format!("{msg}, but took {elapsed:.2?} (limit {limit:?})")),
        other => other,
    };
    match outcome {
        Ok(msg) => {
            println!("criterion {id:>2}: PASS  [{elapsed:>9.2?}] {msg}");
            true
        }
        Err(msg) => {
            println!("criterion {id:>2}: FAIL  [{elapsed:>9.2?}] {msg}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let secs = Duration::from_secs;
    let mut ok = true;

    let (o, t) = timed(|| criterion_1(&mut rng));
    ok &= report("1", secs(1), o, t);
    let (o, t) = timed(criterion_2);
    ok &= report("2", secs(1), o, t);
    let (o, t) = timed(criterion_3);
    ok &= report("3", secs(1), o, t);
    let ((o4, o9), t) = timed(|| criteria_4_and_9(&mut rng));
    ok &= report("4", secs(30), o4, t);
    let (o, t5) = timed(|| criterion_5(&mut rng));
    ok &= report("5", secs(60), o, t5);
    let (o, t6) = timed(|| criterion_6(&mut rng));
    ok &= report("6", secs(60), o, t6);
    let (o, t7) = timed(|| criterion_7(&mut rng));
    ok &= report("7", secs(60), o, t7);
    let (o, t8) = timed(|| criterion_8(&mut rng));
    ok &= report("8", secs(120), o, t8);
    ok &= report("9", secs(30), o9, t);
    let (o, t) = timed(criterion_10);
    ok &= report("10", secs(1), o, t);

    if ok {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
