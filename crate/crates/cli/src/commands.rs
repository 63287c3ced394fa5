use serde::Serialize;

use ybknot_core::braid::fixtures;
use ybknot_core::invariant::{modified_markov_trace, pull_back, skein_check, Enhancement, InvariantError};
use ybknot_core::oracle::{alexander_burau, alexander_skein, units_equal};
use ybknot_core::{BraidWord, Scalar, YbOperator};

use crate::setup::{parse_braid, setup, Setup, EXIT_ENHANCEMENT, EXIT_INPUT, EXIT_INTERNAL};
use crate::{Cli, Command, Failure, GlobalOpts, OutputFormat};

pub fn run(cli: &Cli) -> Result<(), Failure> {
    let opts = &cli.global;
    match &cli.command {
        Command::Invariant { braid } => invariant(opts, braid),
        Command::Verify => verify(opts),
        Command::Oracle { braid } => oracle(opts, braid),
        Command::SkeinCheck { braid, position } => skein(opts, braid, *position),
        Command::Fixtures { inject_fault } => fixture_table(opts, *inject_fault),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("plain data serialises"));
}

fn internal(e: InvariantError) -> Failure {
    Failure::new(EXIT_INTERNAL, format!("internal invariant violated: {e}"))
}

/// `Δ` in `s`, or `None` when `s ↦ c⁻¹β⁻¹` is not injective.
fn recover(e: &Enhancement, x_s1: &Scalar) -> Result<Option<Scalar>, Failure> {
    match pull_back(&(e.beta() * x_s1), &e.s_image()) {
        Ok(d) => Ok(Some(d)),
        Err(InvariantError::NotInjective(g)) => {
            eprintln!("note: t^1/2 -> {g} is not injective under this specialization; the Alexander polynomial is not recovered");
            Ok(None)
        }
        Err(err) => Err(internal(err)),
    }
}

#[derive(Serialize)]
struct InvariantReport {
    x_s1: String,
    alexander: Option<String>,
    writhe: i64,
    strands: usize,
}

fn invariant(opts: &GlobalOpts, braid: &str) -> Result<(), Failure> {
    let b = parse_braid(braid)?;
    let s = setup(opts)?;
    let e = s.enhancement(opts)?;
    let x_s1 = modified_markov_trace(&e, &b).map_err(internal)?;
    let delta = recover(&e, &x_s1)?;
    let report = InvariantReport {
        x_s1: x_s1.to_string(),
        alexander: delta.map(|d| d.to_string()),
        writhe: b.writhe(),
        strands: b.strands(),
    };
    match opts.output_format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => {
            println!("braid: {b}");
            println!("strands: {}", report.strands);
            println!("writhe: {}", report.writhe);
            println!("x_s1: {}", report.x_s1);
            println!("alexander: {}", report.alexander.as_deref().unwrap_or("(not recovered)"));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckRow {
    check: &'static str,
    ok: bool,
    detail: String,
}

fn verify_checks(opts: &GlobalOpts, s: &Setup, rows: &mut Vec<CheckRow>) -> Result<(), Failure> {
    let mut record = |check: &'static str, result: Result<String, String>| -> Result<(), Failure> {
        let ok = result.is_ok();
        let detail = result.unwrap_or_else(|e| e);
        rows.push(CheckRow { check, ok, detail: detail.clone() });
        if ok { Ok(()) } else { Err(Failure::new(EXIT_ENHANCEMENT, format!("check `{check}` failed: {detail}"))) }
    };
    let (x, y) = (&s.x, &s.y);
    record("algebra", Ok(format!("{}: dim {}, unital and associative", s.algebra_name, s.algebra.dim())))?;
    let build = |px: &Scalar, py: &Scalar, pz: &Scalar| {
        YbOperator::new(&s.algebra, px.clone(), py.clone(), pz.clone()).map_err(|e| e.to_string())
    };
    let xz = build(x, y, x);
    record("build R_{x,y,x}", xz.as_ref().map(|r| format!("case {:?}", r.case())).map_err(Clone::clone))?;
    let yz = build(x, y, y);
    record("build R_{x,y,y}", yz.as_ref().map(|r| format!("case {:?}", r.case())).map_err(Clone::clone))?;
    let sc = build(&Scalar::zero(), &Scalar::zero(), x);
    record("build R_{0,0,x}", sc.as_ref().map(|r| format!("case {:?}", r.case())).map_err(Clone::clone))?;
    let ops = [xz.expect("recorded"), yz.expect("recorded"), sc.expect("recorded")];
    let braid = ops.iter().try_for_each(|r| r.check_braid_equation()).map_err(|e| e.to_string());
    record("braid equation", braid.map(|()| "holds for all three operators".into()))?;
    let quad = ops[..2].iter().try_for_each(|r| r.check_quadratic()).map_err(|e| e.to_string());
    record("quadratic relation", quad.map(|()| "R - xy R^-1 is a multiple of Id".into()))?;
    let span = (-3..=3).try_for_each(|m| ops[0].span_coefficients(m).map(|_| ())).map_err(|e| e.to_string());
    record("span lemma", span.map(|()| "R^m in span{Id, R} for m in [-3, 3]".into()))?;
    let e = s.enhancement(opts);
    let solved = e.as_ref().map(|e| format!("alpha = {}, beta = {}, c = {}", e.alpha(), e.beta(), e.c()));
    record("enhancement", solved.map_err(|f| f.message.clone()))?;
    Ok(())
}

fn verify(opts: &GlobalOpts) -> Result<(), Failure> {
    let mut rows = Vec::new();
    let outcome = match setup(opts) {
        Ok(s) => verify_checks(opts, &s, &mut rows),
        Err(f) if f.code == EXIT_ENHANCEMENT => {
            rows.push(CheckRow { check: "algebra", ok: false, detail: f.message.clone() });
            Err(Failure::new(EXIT_ENHANCEMENT, format!("check `algebra` failed: {}", f.message)))
        }
        Err(f) => return Err(f),
    };
    match opts.output_format {
        OutputFormat::Json => print_json(&rows),
        OutputFormat::Text => {
            for row in &rows {
                println!("{} {}: {}", if row.ok { "PASS" } else { "FAIL" }, row.check, row.detail);
            }
        }
    }
    outcome
}

#[derive(Serialize)]
struct OracleReport {
    skein: String,
    burau: String,
    units_equal: bool,
}

fn oracle(opts: &GlobalOpts, braid: &str) -> Result<(), Failure> {
    let b = parse_braid(braid)?;
    let fail = |e: ybknot_core::OracleError| Failure::new(EXIT_INTERNAL, format!("oracle: {e}"));
    let skein = alexander_skein(&b).map_err(fail)?;
    let burau = alexander_burau(&b).map_err(fail)?;
    let report = OracleReport { skein: skein.to_string(), burau: burau.to_string(), units_equal: units_equal(&skein, &burau) };
    match opts.output_format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => {
            println!("skein: {}", report.skein);
            println!("burau: {}", report.burau);
            println!("units_equal: {}", report.units_equal);
        }
    }
    if report.units_equal {
        Ok(())
    } else {
        Err(Failure::new(EXIT_INTERNAL, "skein and Burau oracles disagree"))
    }
}

#[derive(Serialize)]
struct SkeinReport {
    plus: String,
    minus: String,
    smoothed: String,
    coefficient: String,
    ok: bool,
}

fn skein(opts: &GlobalOpts, braid: &str, position: usize) -> Result<(), Failure> {
    let b = parse_braid(braid)?;
    if position == 0 || position > b.len() {
        return Err(Failure::new(EXIT_INPUT, format!("--position {position} is outside 1..={}", b.len())));
    }
    let n = b.strands();
    let letters = b.letters();
    let word = |l: &[i32]| BraidWord::new(n, l.to_vec()).expect("sub-word of a valid word");
    let prefix = word(&letters[..position - 1]);
    let suffix = word(&letters[position..]);
    let i = letters[position - 1].unsigned_abs() as usize;
    let i_letter = i32::try_from(i).expect("generator fits in i32");

    let s = setup(opts)?;
    let e = s.enhancement(opts)?;
    let t = |mid: &[i32]| -> Result<Scalar, Failure> {
        let w = prefix.concat(&word(mid)).and_then(|p| p.concat(&suffix)).expect("same strand count");
        modified_markov_trace(&e, &w).map_err(internal)
    };
    let report = SkeinReport {
        plus: t(&[i_letter])?.to_string(),
        minus: t(&[-i_letter])?.to_string(),
        smoothed: t(&[])?.to_string(),
        coefficient: (&e.s_image() - &(e.c() * e.beta())).to_string(),
        ok: skein_check(&e, &prefix, i, &suffix).is_ok(),
    };
    match opts.output_format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Text => {
            println!("prefix: {prefix}");
            println!("generator: {i}");
            println!("suffix: {suffix}");
            println!("plus: {}", report.plus);
            println!("minus: {}", report.minus);
            println!("smoothed: {}", report.smoothed);
            println!("coefficient: {}", report.coefficient);
            println!("skein relation: {}", if report.ok { "ok" } else { "FAILS" });
        }
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::new(EXIT_INTERNAL, "skein relation fails"))
    }
}

#[derive(Serialize)]
struct FixtureRow {
    name: &'static str,
    braid: String,
    pipeline: String,
    skein: String,
    burau: String,
    status: &'static str,
}

fn fixture_table(opts: &GlobalOpts, inject_fault: bool) -> Result<(), Failure> {
    let s = setup(opts)?;
    let mut e = s.enhancement(opts)?;
    if inject_fault {
        e = e.corrupted();
    }
    let mut rows = Vec::new();
    for (name, b) in fixtures() {
        let fail = |e: ybknot_core::OracleError| Failure::new(EXIT_INTERNAL, format!("{name}: {e}"));
        let x_s1 = modified_markov_trace(&e, &b).map_err(internal)?;
        let pipeline = recover(&e, &x_s1)?.ok_or_else(|| {
            Failure::new(EXIT_INPUT, "fixtures need the Alexander polynomial; drop --specialize or keep one parameter symbolic")
        })?;
        let skein = alexander_skein(&b).map_err(fail)?;
        let burau = alexander_burau(&b).map_err(fail)?;
        let agree = pipeline == skein && units_equal(&skein, &burau);
        rows.push(FixtureRow {
            name,
            braid: b.to_string(),
            pipeline: pipeline.to_string(),
            skein: skein.to_string(),
            burau: burau.to_string(),
            status: if agree { "AGREE" } else { "DISAGREE" },
        });
    }
    match opts.output_format {
        OutputFormat::Json => print_json(&rows),
        OutputFormat::Text => {
            let w = |f: fn(&FixtureRow) -> usize, head: &str| rows.iter().map(f).max().unwrap_or(0).max(head.len());
            let wn = w(|r| r.name.len(), "name");
            let wb = w(|r| r.braid.len(), "braid");
            let wp = w(|r| r.pipeline.len(), "pipeline");
            let ws = w(|r| r.skein.len(), "skein");
            let wu = w(|r| r.burau.len(), "burau");
            println!("{:wn$}  {:wb$}  {:wp$}  {:ws$}  {:wu$}  status", "name", "braid", "pipeline", "skein", "burau");
            for r in &rows {
                println!("{:wn$}  {:wb$}  {:wp$}  {:ws$}  {:wu$}  {}", r.name, r.braid, r.pipeline, r.skein, r.burau, r.status);
            }
        }
    }
    let bad = rows.iter().filter(|r| r.status != "AGREE").count();
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::new(EXIT_INTERNAL, format!("{bad} fixture row(s) disagree")))
    }
}
