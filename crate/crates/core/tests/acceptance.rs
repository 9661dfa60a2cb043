//! Acceptance checks. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use insenc::automaton::{
    build, build_indecomposable, build_kind, AutomatonKind, BuildOptions, ReduceOrder,
};
use insenc::cli;
use insenc::config::{decode, encode};
use insenc::oracle::{compare, enumerate_class};
use insenc::perm::{Basis, Permutation};
use insenc::ratfunc::{
    gf_from_automaton, series_from_automaton, series_from_gf, Polynomial, RationalFunction, Series,
};
use insenc::regularity::{alternation_witness, check_regular};

type Outcome = Result<String, String>;

fn basis(s: &str) -> Basis {
    s.parse().unwrap()
}

fn poly(c: &[i64]) -> Polynomial {
    Polynomial::from_i64s(c)
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("insenc").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Runs `gf` through the CLI and checks its output against `expected`,
/// which is built independently from the factored form.
fn golden_gf(b: &str, expected: RationalFunction) -> Outcome {
    let (code, out) = run_cli(&["gf", "--basis", b]);
    ensure(code == 0, format!("exit code {code}"))?;
    let printed = out.trim();
    ensure(
        printed == expected.to_string(),
        format!("got {printed}, expected {expected}"),
    )?;
    let gf = gf_from_automaton(
        &build(&basis(b), &BuildOptions::default())
            .unwrap()
            .minimize(),
    );
    ensure(gf == expected, "library result differs from CLI")?;
    let s = series_from_gf(&gf, 10).unwrap();
    Ok(format!("{printed}; series {s}"))
}

fn criterion_1() -> Outcome {
    let one_minus = |a: i64| poly(&[1, -a]);
    let num = &one_minus(1) * &one_minus(3).pow(2);
    let den = &one_minus(2).pow(2) * &poly(&[1, -4, 1]);
    golden_gf("4321,3142", RationalFunction::new(num, den).unwrap())
}

fn criterion_2() -> Outcome {
    let num = poly(&[1, -11, 56, -172, 357, -519, 554, -413, 217, -83, 20, -2]);
    let den = poly(&[1, -1]).pow(12);
    golden_gf("4321,1324", RationalFunction::new(num, den).unwrap())
}

/// Parsed `key=value` survey records.
struct SurveyOutput {
    fields: BTreeMap<String, String>,
}

impl SurveyOutput {
    fn get(&self, key: &str) -> &str {
        self.fields.get(key).map(String::as_str).unwrap_or("")
    }

    fn classes(&self) -> usize {
        self.get("symmetry_classes").parse().unwrap_or(0)
    }

    /// One regular member per regular symmetry class.
    fn regular_bases(&self) -> Vec<Basis> {
        (1..=self.classes())
            .filter(|i| self.get(&format!("class.{i}.regular")) == "true")
            .map(|i| {
                let members = self.get(&format!("class.{i}.regular_members"));
                basis(members.split(';').next().unwrap())
            })
            .collect()
    }
}

fn run_survey() -> SurveyOutput {
    let (code, out) = run_cli(&[
        "survey",
        "--length",
        "4",
        "--size",
        "2",
        "--format",
        "structured",
    ]);
    assert_eq!(code, 0, "survey exit code");
    let fields = out
        .lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect();
    SurveyOutput { fields }
}

fn criterion_3a(s: &SurveyOutput) -> Outcome {
    let bases = s.get("bases");
    let classes = s.get("symmetry_classes");
    ensure(bases == "276", format!("bases {bases}"))?;
    ensure(classes == "56", format!("symmetry classes {classes}"))?;
    for i in 1..=s.classes() {
        ensure(
            s.get(&format!("class.{i}.gf_consistent")) == "true",
            format!("class {i} members disagree"),
        )?;
    }
    Ok("276 bases, 56 symmetry classes, regular members agree within each class".into())
}

fn criterion_3b(s: &SurveyOutput) -> Outcome {
    let distinct = s.get("distinct_gfs");
    let regular = s.get("regular_classes");
    ensure(
        distinct == "12",
        format!(
            "{distinct} distinct generating functions among {regular} regular classes, expected 12"
        ),
    )?;
    Ok(format!(
        "12 distinct generating functions among {regular} regular classes"
    ))
}

fn check_compare(b: &Basis, n: usize, options: &BuildOptions) -> Result<(), String> {
    let r = compare(b, n, options).map_err(|e| format!("{b}: {e}"))?;
    ensure(!r.oracle_only(), format!("{b}: no automaton"))?;
    match r.mismatch {
        Some(m) => Err(format!(
            "{b}: {} differs at n={} (oracle {}, automaton {})",
            m.series, m.n, m.expected, m.actual
        )),
        None => Ok(()),
    }
}

fn criterion_4a(s: &SurveyOutput) -> Outcome {
    let mut bases = s.regular_bases();
    ensure(!bases.is_empty(), "no regular classes in survey output")?;
    let from_survey = bases.len();
    bases.extend(["21", "4321,3142", "4321,1324"].map(basis));
    for b in &bases {
        check_compare(b, 9, &BuildOptions::default())?;
    }
    Ok(format!(
        "{from_survey} regular survey classes plus 21, 4321,3142, 4321,1324 agree with brute force to n=9"
    ))
}

fn criterion_4b() -> Outcome {
    let forced = BuildOptions {
        skip_regularity_check: true,
        ..BuildOptions::default()
    };
    let mut failures = Vec::new();
    for b in ["321", "312"].map(basis) {
        if let Err(e) = check_compare(&b, 9, &forced) {
            failures.push(e);
        }
    }
    ensure(failures.is_empty(), failures.join("; "))?;
    Ok("321 and 312 agree with brute force to n=9".into())
}

fn criterion_5a() -> Outcome {
    let mut total = 0;
    for n in 1..=7 {
        for pi in Permutation::all(n) {
            let w = encode(&pi).map_err(|e| e.to_string())?;
            let back = decode(&w).map_err(|e| e.to_string())?.to_permutation();
            ensure(
                back.as_ref() == Some(&pi),
                format!("{pi} -> {w} -> {back:?}"),
            )?;
            total += 1;
        }
    }
    ensure(total == 5913, format!("{total} permutations"))?;
    Ok("decode(encode(pi)) = pi for all 5913 permutations of length 1..7".into())
}

fn criterion_5b() -> Outcome {
    let w = encode(&"423615".parse().unwrap()).map_err(|e| e.to_string())?;
    ensure(
        w.to_string() == "m1 m2 l2 f1 f2 f1",
        format!("encode(423615) = {w}, expected m1 m2 l2 f1 f2 f1"),
    )?;
    Ok("encode(423615) = m1 m2 l2 f1 f2 f1".into())
}

fn criterion_6() -> Outcome {
    for (b, expected) in [("4321,3142", true), ("123", false), ("21", true)] {
        let r = check_regular(&basis(b));
        ensure(
            r.regular == expected,
            format!("check_regular({b}) = {}", r.regular),
        )?;
        for c in r.failing() {
            let alt = alternation_witness(c.orientation, 12);
            ensure(
                alt.avoids(&basis(b)),
                format!(
                    "{b}: {} alternation of length 12 not in class",
                    c.orientation.name()
                ),
            )?;
        }
    }
    let failing: Vec<&str> = check_regular(&basis("123"))
        .failing()
        .map(|c| c.orientation.name())
        .collect();
    Ok(format!(
        "gate verdicts correct; 123 fails {} with length-12 alternations inside",
        failing.join(", ")
    ))
}

/// Regular bases for the property suites: every regular basis of at most
/// three permutations of length 3, and some longer ones.
fn sample_bases() -> Vec<Basis> {
    let s3: Vec<Permutation> = Permutation::all(3).collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << 6) {
        if mask.count_ones() > 3 {
            continue;
        }
        let b = Basis::normalize(
            (0..6)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| s3[i].clone()),
        )
        .unwrap();
        if check_regular(&b).regular {
            out.push(b);
        }
    }
    out.extend(
        [
            "21",
            "12",
            "4321,3142",
            "1234,2143",
            "1243,3214",
            "132,4321",
            "231,4123",
            "2413,3142,4321",
        ]
        .map(basis),
    );
    out
}

fn criterion_7(bases: &[Basis]) -> Outcome {
    ensure(
        bases.len() >= 20,
        format!("only {} sample bases", bases.len()),
    )?;
    let mut automata = 0;
    for b in bases {
        let left = build(b, &BuildOptions::default()).map_err(|e| format!("{b}: {e}"))?;
        let right = build(
            b,
            &BuildOptions {
                order: ReduceOrder::Rightmost,
                ..BuildOptions::default()
            },
        )
        .map_err(|e| format!("{b}: {e}"))?;
        ensure(
            series_from_automaton(&left, 10) == series_from_automaton(&right, 10),
            format!("{b}: leftmost and rightmost reduction disagree"),
        )?;
        let indec =
            build_indecomposable(b, &BuildOptions::default()).map_err(|e| format!("{b}: {e}"))?;
        for a in [&left, &right, &indec] {
            let dp = series_from_automaton(a, 12);
            let gf = gf_from_automaton(a);
            let expanded = series_from_gf(&gf, 12).map_err(|e| format!("{b}: {e}"))?;
            ensure(
                dp == expanded,
                format!("{b} ({:?}): gf {expanded} vs dp {dp}", a.kind()),
            )?;
            let m = a.minimize();
            ensure(
                series_from_automaton(&m, 12) == dp,
                format!("{b}: minimize changed the series"),
            )?;
            let mm = m.minimize();
            ensure(
                mm.state_count() == m.state_count() && mm.to_structured() == m.to_structured(),
                format!("{b}: minimize not idempotent"),
            )?;
            automata += 1;
        }
    }
    Ok(format!(
        "{} bases: reduction order agrees to n=10; gf = dp to n=12 and minimize preserves series and is idempotent on {automata} automata",
        bases.len()
    ))
}

fn criterion_8() -> Outcome {
    for b in ["4321,3142", "21"].map(basis) {
        let a = build_kind(&b, AutomatonKind::Indecomposable, &BuildOptions::default())
            .map_err(|e| e.to_string())?;
        let auto = series_from_automaton(&a, 8);
        let oracle = enumerate_class(&b, 8)
            .map_err(|e| e.to_string())?
            .indecomposable_counts;
        ensure(
            auto.0[1..] == oracle.0[1..],
            format!("{b}: automaton {auto} vs oracle {oracle}"),
        )?;
    }
    let a = build_indecomposable(&basis("21"), &BuildOptions::default()).unwrap();
    let s = series_from_automaton(&a, 8);
    ensure(
        s == Series::from_u64s(&[0, 1, 0, 0, 0, 0, 0, 0, 0]),
        format!("Av(21): {s}"),
    )?;
    Ok("indecomposable series match the oracle to n=8; Av(21) gives 0,1,0,0,...".into())
}

fn report(id: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    match &result {
        Ok(detail) => println!("PASS {id} ({secs:.1}s): {detail}"),
        Err(detail) => println!("FAIL {id} ({secs:.1}s): {detail}"),
    }
    result.is_ok()
}

fn main() {
    let mut ok = true;
    ok &= report("1 golden gf 4321,3142", criterion_1);
    ok &= report("2 golden gf 4321,1324", criterion_2);
    let start = Instant::now();
    let survey = catch_unwind(run_survey).ok();
    println!(
        "survey --length 4 --size 2 ran in {:.1}s",
        start.elapsed().as_secs_f64()
    );
    let missing = || Err::<String, _>("survey did not run".to_string());
    match &survey {
        Some(s) => {
            ok &= report("3a survey bases and symmetry classes", || criterion_3a(s));
            ok &= report("3b survey distinct generating functions", || {
                criterion_3b(s)
            });
            ok &= report("4a oracle equivalence on regular classes", || {
                criterion_4a(s)
            });
        }
        None => {
            ok &= report("3a survey bases and symmetry classes", missing);
            ok &= report("3b survey distinct generating functions", missing);
            ok &= report("4a oracle equivalence on regular classes", missing);
        }
    }
    ok &= report("4b oracle equivalence on 321 and 312", criterion_4b);
    ok &= report("5a encode/decode roundtrip", criterion_5a);
    ok &= report("5b encode(423615) literal word", criterion_5b);
    ok &= report("6 regularity gate", criterion_6);
    let bases = sample_bases();
    ok &= report("7 property suites", || criterion_7(&bases));
    ok &= report("8 indecomposable pipeline", criterion_8);
    if !ok {
        std::process::exit(1);
    }
}
