//! Command-line front end.
//!
//! Structured output (`--format structured`) is one `key=value` record per
//! line. Series are comma-separated, ascending from `n = 0`; lists of bases
//! are separated by `;`. The structured form of `automaton` is the JSON
//! export.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::automaton::{build_kind, AutomatonKind, BuildOptions, Guards};
use crate::error::{Error, Result};
use crate::oracle::{compare, enumerate_class, CompareReport, MAX_ORACLE_LEN};
use crate::perm::{Basis, Permutation, Symmetry};
use crate::ratfunc::{gf_from_automaton, series_from_automaton, RationalFunction, Series};
use crate::regularity::{check_regular, RegularityReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_REGULAR: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

/// Largest number of bases `survey` will enumerate.
pub const SURVEY_MAX_BASES: usize = 2024;

#[derive(Parser, Debug)]
#[command(
    name = "insenc",
    version,
    about = "Regular insertion encodings and generating functions of permutation classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Maximum number of automaton states.
    #[arg(long, global = true, default_value_t = Guards::default().max_states)]
    guard_states: usize,

    /// Maximum number of slots in a configuration.
    #[arg(long, global = true, default_value_t = Guards::default().max_slots)]
    guard_slots: usize,

    /// Maximum number of configurations examined by validity tests.
    #[arg(long, global = true, default_value_t = Guards::default().max_search)]
    guard_search: usize,

    /// Build even when the regularity test fails.
    #[arg(long, global = true)]
    force: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    /// Graphviz, `automaton` only.
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test the four regularity conditions.
    Check {
        #[arg(long)]
        basis: Basis,
    },
    /// Build the automaton.
    Automaton {
        #[arg(long)]
        basis: Basis,
        #[arg(long)]
        minimize: bool,
        #[arg(long)]
        indecomposable: bool,
    },
    /// Print the generating function.
    Gf {
        #[arg(long)]
        basis: Basis,
        #[arg(long)]
        indecomposable: bool,
    },
    /// Count class members of each length up to N using the automaton.
    Count {
        #[arg(long)]
        basis: Basis,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        indecomposable: bool,
    },
    /// Count class members by brute force.
    Oracle {
        #[arg(long)]
        basis: Basis,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        indecomposable: bool,
    },
    /// Diff automaton counts against brute force; exits 1 on mismatch.
    Compare {
        #[arg(long)]
        basis: Basis,
        #[arg(long)]
        n: usize,
    },
    /// Classify every basis of S permutations of length L.
    Survey {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        size: usize,
        /// Length of the printed series prefix.
        #[arg(long, default_value_t = 9)]
        n: usize,
    },
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut buf = String::new();
    let result = dispatch(&cli, &mut buf);
    let code = match &result {
        Ok(code) => *code,
        Err(Error::NotRegular(report)) => {
            buf.push_str(&render_report(report, cli.common.format));
            EXIT_NOT_REGULAR
        }
        Err(Error::Guard { .. }) => EXIT_GUARD,
        Err(Error::Usage(_)) => EXIT_USAGE,
        Err(_) => EXIT_FAILURE,
    };
    if let Err(e) = &result {
        let _ = writeln!(err, "error: {e}");
    }
    let written = match &cli.common.output {
        Some(path) => std::fs::write(path, &buf).map_err(Error::from),
        None => out.write_all(buf.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_FAILURE;
    }
    code
}

fn dispatch(cli: &Cli, buf: &mut String) -> Result<i32> {
    let common = &cli.common;
    let options = BuildOptions {
        guards: Guards {
            max_states: common.guard_states,
            max_slots: common.guard_slots,
            max_search: common.guard_search,
        },
        skip_regularity_check: common.force,
        ..BuildOptions::default()
    };
    let format = common.format;
    if format == Format::Dot && !matches!(cli.command, Command::Automaton { .. }) {
        return Err(Error::Usage(
            "--format dot applies to `automaton` only".into(),
        ));
    }
    let structured = format == Format::Structured;
    match &cli.command {
        Command::Check { basis } => {
            let report = check_regular(basis);
            buf.push_str(&render_report(&report, format));
            Ok(EXIT_OK)
        }
        Command::Automaton {
            basis,
            minimize,
            indecomposable,
        } => {
            let mut a = build_kind(basis, kind_of(*indecomposable), &options)?;
            if *minimize {
                a = a.minimize();
            }
            match format {
                Format::Dot => buf.push_str(&a.to_dot()),
                Format::Structured => {
                    buf.push_str(&a.to_json());
                    buf.push('\n');
                }
                Format::Text => {
                    line(buf, "states", a.state_count());
                    line(buf, "transitions", a.transition_count());
                    line(buf, "slot_bound", a.slot_bound());
                    line(buf, "initial", a.initial());
                    let accepts: Vec<String> = a.accepts().iter().map(|s| s.to_string()).collect();
                    line(buf, "accepts", accepts.join(","));
                    for s in 0..a.state_count() {
                        let rep = a.representative(s).to_string();
                        let rep = if rep.is_empty() {
                            "ε".to_string()
                        } else {
                            rep
                        };
                        for (letter, t) in a.transitions_from(s) {
                            buf.push_str(&format!("{s} [{rep}] --{letter}--> {t}\n"));
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gf {
            basis,
            indecomposable,
        } => {
            let a = build_kind(basis, kind_of(*indecomposable), &options)?;
            let m = a.minimize();
            let gf = gf_from_automaton(&m);
            if structured {
                line(buf, "basis", basis);
                line(buf, "kind", kind_name(a.kind()));
                line(buf, "states", a.state_count());
                line(buf, "minimized_states", m.state_count());
                line(buf, "numerator", gf.numerator());
                line(buf, "denominator", gf.denominator());
            } else {
                line_plain(buf, &gf);
            }
            Ok(EXIT_OK)
        }
        Command::Count {
            basis,
            n,
            indecomposable,
        } => {
            let a = build_kind(basis, kind_of(*indecomposable), &options)?;
            let series = series_from_automaton(&a, *n);
            if structured {
                line(buf, "basis", basis);
                line(buf, "kind", kind_name(a.kind()));
                line(buf, "series", &series);
            } else {
                line_plain(buf, &series);
            }
            Ok(EXIT_OK)
        }
        Command::Oracle {
            basis,
            n,
            indecomposable,
        } => {
            let counts = enumerate_class(basis, *n)?;
            if structured {
                line(buf, "basis", basis);
                line(buf, "class", &counts.class_counts);
                line(buf, "indecomposable", &counts.indecomposable_counts);
            } else if *indecomposable {
                line_plain(buf, &counts.indecomposable_counts);
            } else {
                line_plain(buf, &counts.class_counts);
            }
            Ok(EXIT_OK)
        }
        Command::Compare { basis, n } => {
            let report = compare(basis, *n, &options)?;
            buf.push_str(&render_compare(&report));
            Ok(if report.matches() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        Command::Survey { length, size, n } => {
            let survey = survey(*length, *size, *n, &options)?;
            buf.push_str(&render_survey(&survey, format));
            Ok(EXIT_OK)
        }
    }
}

fn kind_of(indecomposable: bool) -> AutomatonKind {
    if indecomposable {
        AutomatonKind::Indecomposable
    } else {
        AutomatonKind::Class
    }
}

fn kind_name(kind: AutomatonKind) -> &'static str {
    match kind {
        AutomatonKind::Class => "class",
        AutomatonKind::Indecomposable => "indecomposable",
    }
}

fn line(buf: &mut String, key: &str, value: impl std::fmt::Display) {
    buf.push_str(&format!("{key}={value}\n"));
}

fn line_plain(buf: &mut String, value: impl std::fmt::Display) {
    buf.push_str(&format!("{value}\n"));
}

fn render_report(report: &RegularityReport, format: Format) -> String {
    let mut buf = String::new();
    if format == Format::Structured {
        for c in &report.checks {
            let name = c.orientation.name();
            line(
                &mut buf,
                &format!("check.{name}"),
                if c.passed { "pass" } else { "fail" },
            );
            line(
                &mut buf,
                &format!("check.{name}.witness"),
                c.witness.as_deref().unwrap_or(""),
            );
        }
        line(&mut buf, "regular", report.regular);
        return buf;
    }
    for c in &report.checks {
        let patterns = c.orientation.defining_patterns().join(", ");
        match &c.witness {
            Some(w) => buf.push_str(&format!(
                "{:<18} pass  ({w} lies in Av({patterns}))\n",
                c.orientation.name()
            )),
            None => buf.push_str(&format!(
                "{:<18} FAIL  (no basis element in Av({patterns}))\n",
                c.orientation.name()
            )),
        }
    }
    let verdict = if report.regular {
        "regular"
    } else {
        "not regular"
    };
    buf.push_str(&format!("verdict: {verdict}\n"));
    buf
}

fn render_compare(r: &CompareReport) -> String {
    let mut buf = String::new();
    line(&mut buf, "basis", &r.basis);
    line(&mut buf, "regular", r.regularity.regular);
    line(&mut buf, "oracle", &r.oracle.class_counts);
    line(
        &mut buf,
        "oracle_indecomposable",
        &r.oracle.indecomposable_counts,
    );
    if let Some(s) = &r.automaton_series {
        line(&mut buf, "automaton", s);
    }
    if let Some(s) = &r.indecomposable_series {
        line(&mut buf, "automaton_indecomposable", s);
    }
    let result = match (&r.mismatch, r.oracle_only()) {
        (Some(m), _) => format!(
            "mismatch {} at n={}: oracle {} automaton {}",
            m.series, m.n, m.expected, m.actual
        ),
        (None, true) => "oracle only".to_string(),
        (None, false) => "match".to_string(),
    };
    line(&mut buf, "result", result);
    buf
}

/// One symmetry class of bases.
#[derive(Clone, Debug)]
pub struct SurveyRow {
    /// 1-based, in order of the representatives.
    pub symmetry_class_id: usize,
    /// The lexicographically least basis of the class.
    pub representative: Basis,
    pub members: Vec<Basis>,
    /// Members passing the regularity test.
    pub regular_members: Vec<Basis>,
    pub regular: bool,
    pub gf: Option<RationalFunction>,
    /// From the automaton for regular classes, by brute force otherwise.
    pub series: Series,
    /// Regular members whose generating function differs from the
    /// representative regular member's.
    pub gf_disagreements: Vec<Basis>,
}

#[derive(Clone, Debug)]
pub struct Survey {
    pub length: usize,
    pub size: usize,
    pub n: usize,
    pub bases: usize,
    pub rows: Vec<SurveyRow>,
}

impl Survey {
    pub fn symmetry_classes(&self) -> usize {
        self.rows.len()
    }

    pub fn regular_classes(&self) -> usize {
        self.rows.iter().filter(|r| r.regular).count()
    }

    /// Regular classes grouped by equal generating function, keyed by its
    /// printed form.
    pub fn wilf_groups(&self) -> BTreeMap<String, Vec<usize>> {
        let mut groups: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for r in &self.rows {
            if let Some(gf) = &r.gf {
                groups
                    .entry(gf.to_string())
                    .or_default()
                    .push(r.symmetry_class_id);
            }
        }
        groups
    }

    pub fn distinct_gfs(&self) -> usize {
        self.wilf_groups().len()
    }
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, i| acc.checked_mul(i))
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Every basis of `size` permutations of length `length`, grouped into
/// symmetry classes. Each regular member gets its own automaton and
/// generating function so the rows can record disagreements.
pub fn survey(length: usize, size: usize, n: usize, options: &BuildOptions) -> Result<Survey> {
    if length == 0 || size == 0 {
        return Err(Error::InvalidArgument(
            "survey needs positive length and size".into(),
        ));
    }
    let total = factorial(length)
        .and_then(|f| binomial(f, size))
        .filter(|&t| t <= SURVEY_MAX_BASES)
        .ok_or(Error::Guard {
            guard: "survey_max_bases",
            limit: SURVEY_MAX_BASES,
        })?;
    if total == 0 {
        return Err(Error::InvalidArgument(format!(
            "there are fewer than {size} permutations of length {length}"
        )));
    }
    let perms: Vec<Permutation> = Permutation::all(length).collect();
    let bases: Vec<Basis> = subsets(perms.len(), size)
        .into_iter()
        .map(|idx| Basis::normalize(idx.into_iter().map(|i| perms[i].clone())))
        .collect::<Result<_>>()?;

    let mut classes: BTreeMap<Basis, Vec<Basis>> = BTreeMap::new();
    for b in &bases {
        let rep = Symmetry::ALL
            .iter()
            .map(|&s| b.apply(s))
            .min()
            .expect("eight symmetries");
        classes.entry(rep).or_default().push(b.clone());
    }

    let classes: Vec<(Basis, Vec<Basis>)> = classes.into_iter().collect();
    let rows: Vec<SurveyRow> = classes
        .into_par_iter()
        .enumerate()
        .map(|(i, (representative, members))| {
            survey_row(i + 1, representative, members, n, options)
        })
        .collect::<Result<_>>()?;

    Ok(Survey {
        length,
        size,
        n,
        bases: bases.len(),
        rows,
    })
}

fn survey_row(
    id: usize,
    representative: Basis,
    members: Vec<Basis>,
    n: usize,
    options: &BuildOptions,
) -> Result<SurveyRow> {
    let regular_members: Vec<Basis> = members
        .iter()
        .filter(|b| check_regular(b).regular)
        .cloned()
        .collect();
    let mut gf: Option<RationalFunction> = None;
    let mut series = None;
    let mut gf_disagreements = Vec::new();
    for b in &regular_members {
        let a = build_kind(b, AutomatonKind::Class, options)?;
        let f = gf_from_automaton(&a.minimize());
        match &gf {
            None => {
                series = Some(series_from_automaton(&a, n));
                gf = Some(f);
            }
            Some(g) if *g != f => gf_disagreements.push(b.clone()),
            Some(_) => {}
        }
    }
    let series = match series {
        Some(s) => s,
        None => enumerate_class(&representative, n.min(MAX_ORACLE_LEN))?.class_counts,
    };
    Ok(SurveyRow {
        symmetry_class_id: id,
        representative,
        members,
        regular: !regular_members.is_empty(),
        regular_members,
        gf,
        series,
        gf_disagreements,
    })
}

const SURVEY_FOOTER: &str = "Generating functions are grouped only among regular classes. \
Wilf equivalences involving classes without a regular insertion encoding are out of scope.";

fn render_survey(s: &Survey, format: Format) -> String {
    let mut buf = String::new();
    if format == Format::Structured {
        for r in &s.rows {
            let p = format!("class.{}", r.symmetry_class_id);
            line(&mut buf, &format!("{p}.representative"), &r.representative);
            line(&mut buf, &format!("{p}.members"), r.members.len());
            let regular: Vec<String> = r.regular_members.iter().map(|b| b.to_string()).collect();
            line(&mut buf, &format!("{p}.regular_members"), regular.join(";"));
            line(&mut buf, &format!("{p}.regular"), r.regular);
            let gf = r.gf.as_ref().map(|g| g.to_string()).unwrap_or_default();
            line(&mut buf, &format!("{p}.gf"), gf);
            line(&mut buf, &format!("{p}.series"), &r.series);
            line(
                &mut buf,
                &format!("{p}.gf_consistent"),
                r.gf_disagreements.is_empty(),
            );
        }
        line(&mut buf, "bases", s.bases);
        line(&mut buf, "symmetry_classes", s.symmetry_classes());
        line(&mut buf, "regular_classes", s.regular_classes());
        line(&mut buf, "distinct_gfs", s.distinct_gfs());
        line(&mut buf, "note", SURVEY_FOOTER);
        return buf;
    }
    for r in &s.rows {
        let status = if r.regular {
            format!(
                "regular ({}/{} members)",
                r.regular_members.len(),
                r.members.len()
            )
        } else {
            format!("not regular ({} members)", r.members.len())
        };
        buf.push_str(&format!(
            "#{:<3} {:<12} {status}\n",
            r.symmetry_class_id,
            r.representative.to_string()
        ));
        if let Some(gf) = &r.gf {
            buf.push_str(&format!("     gf: {gf}\n"));
        }
        buf.push_str(&format!("     series: {}\n", r.series));
        for b in &r.gf_disagreements {
            buf.push_str(&format!(
                "     WARNING: member {b} has a different generating function\n"
            ));
        }
    }
    buf.push_str(&format!("bases: {}\n", s.bases));
    buf.push_str(&format!("symmetry classes: {}\n", s.symmetry_classes()));
    buf.push_str(&format!(
        "regular symmetry classes: {}\n",
        s.regular_classes()
    ));
    buf.push_str(&format!(
        "distinct generating functions among regular classes: {}\n",
        s.distinct_gfs()
    ));
    buf.push_str(SURVEY_FOOTER);
    buf.push('\n');
    buf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("insenc").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets(24, 2).len(), 276);
        assert_eq!(binomial(24, 2), Some(276));
    }

    #[test]
    fn count_increasing_class() {
        let (code, out, _) = run_str(&["count", "--basis", "21", "--n", "5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1,1,1,1,1,1\n");
    }

    #[test]
    fn check_reports_failing_condition() {
        let (code, out, _) = run_str(&["check", "--basis", "123"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verdict: not regular"));
        assert!(out.contains("parallel           FAIL"));
        let (_, out, _) = run_str(&["check", "--basis", "123", "--format", "structured"]);
        assert!(out.contains("check.parallel=fail\n"));
        assert!(out.contains("check.wedge.witness=123\n"));
        assert!(out.contains("regular=false\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gf", "--basis", "21", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gf", "--basis", "2x1"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["gf", "--basis", "21", "--format", "dot"]).0,
            EXIT_USAGE
        );
        let (code, out, _) = run_str(&["gf", "--basis", "123"]);
        assert_eq!(code, EXIT_NOT_REGULAR);
        assert!(out.contains("not regular"));
        let (code, _, err) = run_str(&["gf", "--basis", "123", "--force", "--guard-slots", "6"]);
        assert_eq!(code, EXIT_GUARD);
        assert!(err.contains("max_slots"));
        assert_eq!(
            run_str(&["oracle", "--basis", "12", "--n", "13"]).0,
            EXIT_GUARD
        );
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn gf_and_compare() {
        let (code, out, _) = run_str(&["gf", "--basis", "4321,3142"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(
            out,
            "(1 - 7*x + 15*x^2 - 9*x^3) / (1 - 8*x + 21*x^2 - 20*x^3 + 4*x^4)\n"
        );
        let (code, out, _) = run_str(&["compare", "--basis", "4321,3142", "--n", "8"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("result=match"));
        let (code, out, _) = run_str(&["oracle", "--basis", "123", "--n", "5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "1,1,2,5,14,42\n");
    }

    #[test]
    fn automaton_formats() {
        let (code, out, _) = run_str(&["automaton", "--basis", "21", "--format", "dot"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("digraph"));
        let (_, out, _) = run_str(&[
            "automaton",
            "--basis",
            "4321,3142",
            "--minimize",
            "--format",
            "structured",
        ]);
        let a = crate::automaton::Automaton::from_json(&out).unwrap();
        assert_eq!(a.state_count(), 10);
        let (_, out, _) = run_str(&["automaton", "--basis", "21"]);
        assert!(out.contains("states=2\n"));
    }

    #[test]
    fn output_file() {
        let path = std::env::temp_dir().join(format!("insenc-cli-{}.txt", std::process::id()));
        let p = path.to_str().unwrap();
        let (code, out, _) = run_str(&["count", "--basis", "12", "--n", "3", "--output", p]);
        assert_eq!(code, EXIT_OK);
        assert!(out.is_empty());
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "1,1,1,1\n");
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn small_survey_partitions_bases() {
        let s = survey(3, 2, 6, &BuildOptions::default()).unwrap();
        assert_eq!(s.bases, 15);
        let total: usize = s.rows.iter().map(|r| r.members.len()).sum();
        assert_eq!(total, 15);
        for r in &s.rows {
            assert!(r.gf_disagreements.is_empty());
            assert_eq!(r.representative, r.members.iter().min().unwrap().clone());
        }
        assert!(survey(5, 3, 6, &BuildOptions::default()).is_err());
    }
}
