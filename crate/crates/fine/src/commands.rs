//! Subcommand implementations. Each writes its report to the given sink and
//! maps failures onto [`CliError`], whose exit codes are stable.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use fine_core::arith::Rational;
use fine_core::classify::{gorenstein_histogram, mu_histogram, ClassificationRecord, Classifier, NoLog, SearchLog};
use fine_core::fine::{fine_interior_bruteforce, MultiplierProfile};
use fine_core::polyhedra::Polytope;

use crate::format::{format_point, format_rational, parse_rational, FileError, PolytopeFile};
use crate::journal::Journal;
use crate::parallel::RayonMapper;
use crate::results::{summary, write_jsonl};
use crate::verify::{corpus, verify_corpus, VerifyOptions};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Dimension(String),
    #[error("{0}")]
    Failure(String),
    #[error("{0}")]
    CheckMismatch(String),
}

impl CliError {
    /// 2 parse error, 3 dimension violation, 4 count mismatch under
    /// `--check`, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Dimension(_) => 3,
            CliError::CheckMismatch(_) => 4,
        }
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Parse(m) => CliError::Parse(m),
            FileError::Dimension(m) => CliError::Dimension(m),
        }
    }
}

impl From<fine_core::Error> for CliError {
    fn from(e: fine_core::Error) -> Self {
        use fine_core::Error as E;
        match e {
            E::DimensionMismatch { .. } | E::UnsupportedDimension(_) | E::NotFullDimensional => {
                CliError::Dimension(e.to_string())
            }
            E::Parse(m) => CliError::Parse(m),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

fn read_full_dimensional(path: &Path) -> CliResult<Polytope> {
    let p = PolytopeFile::read(path)?.to_polytope()?;
    if !p.is_full_dimensional() {
        return Err(CliError::Dimension(format!("{} is not full-dimensional", path.display())));
    }
    Ok(p)
}

fn write_points(out: &mut impl Write, p: &Polytope) -> CliResult {
    if p.is_empty() {
        writeln!(out, "empty")?;
    } else {
        for v in p.vertices() {
            writeln!(out, "{}", format_point(v))?;
        }
    }
    Ok(())
}

/// Vertices of `F(λP)`, through the dilation polyhedron or, with `brute`,
/// through the bounded dual-vector oracle.
pub fn cmd_fine(out: &mut impl Write, path: &Path, dilation: Option<&str>, brute: Option<u32>) -> CliResult {
    let p = read_full_dimensional(path)?;
    let lambda = match dilation {
        Some(s) => parse_rational(s)?,
        None => Rational::ONE,
    };
    if lambda < Rational::ZERO {
        return Err(CliError::Parse(format!("negative dilation {s}", s = format_rational(&lambda))));
    }
    let f = match brute {
        Some(b) => fine_interior_bruteforce(&p.dilate(&lambda)?, b)?,
        None => MultiplierProfile::new(&p)?.fine_of_dilation(&lambda)?,
    };
    write_points(out, &f)
}

pub fn cmd_multipliers(out: &mut impl Write, path: &Path) -> CliResult {
    let p = read_full_dimensional(path)?;
    let profile = MultiplierProfile::new(&p)?;
    writeln!(out, "mu = {}", format_rational(&profile.mu))?;
    writeln!(out, "mu_max = {}", format_rational(&profile.mu_max))?;
    writeln!(out, "mu_cc = {}", format_rational(&profile.mu_cc))?;
    let special: Vec<String> = profile.special_multipliers.iter().map(format_rational).collect();
    writeln!(out, "special = {}", special.join(" "))?;
    for (m, x) in &profile.vertices {
        writeln!(out, "vertex {} {}", format_rational(m), format_point(x))?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Polygons,
    WeaklySporadic,
    Sporadic,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Polygons => "polygons",
            Target::WeaklySporadic => "weakly-sporadic",
            Target::Sporadic => "sporadic",
        }
    }
}

pub struct ClassifyOptions {
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub resume: bool,
    pub check: bool,
}

/// Journal location for a result file.
pub fn journal_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".journal");
    PathBuf::from(s)
}

fn rational_key(s: &str) -> Rational {
    parse_rational(s).expect("valid rational literal")
}

/// Published counts for each target; `--check` compares against these.
pub fn check_counts(target: Target, records: &[ClassificationRecord]) -> Result<(), String> {
    let mut problems = Vec::new();
    let mut want_len = |n: usize| {
        if records.len() != n {
            problems.push(format!("expected {n} classes, found {}", records.len()));
        }
    };
    match target {
        Target::Polygons => want_len(4),
        Target::WeaklySporadic => {
            want_len(114);
            let gor = gorenstein_histogram(records);
            let expected: BTreeMap<u32, usize> = [(2, 31), (3, 2), (4, 1)].into();
            if gor != expected {
                problems.push(format!("Gorenstein indices {gor:?}, expected {expected:?}"));
            }
        }
        Target::Sporadic => {
            want_len(1368);
            let expected: BTreeMap<Rational, usize> =
                [(rational_key("4/3"), 300), (rational_key("5/4"), 632), (rational_key("7/6"), 436)].into();
            if mu_histogram(records) != expected {
                problems.push("multiplier histogram differs from 4/3×300 5/4×632 7/6×436".into());
            }
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

pub fn run_target(
    target: Target,
    mapper: &RayonMapper,
    log: &mut dyn SearchLog,
) -> fine_core::Result<Vec<ClassificationRecord>> {
    let mut c = Classifier::new(mapper, log);
    match target {
        Target::Polygons => c.polygons(),
        Target::WeaklySporadic => c.weakly_sporadic_all(),
        Target::Sporadic => c.sporadic(),
    }
}

pub fn cmd_classify(out: &mut impl Write, target: Target, opts: &ClassifyOptions) -> CliResult {
    let mapper = RayonMapper::new(opts.jobs).map_err(|e| CliError::Failure(e.to_string()))?;
    log::info!("classifying {} with {} worker(s)", target.name(), mapper.jobs());
    let records = match &opts.out {
        Some(path) => {
            let jpath = journal_path(path);
            let mut journal = if opts.resume { Journal::resume(&jpath)? } else { Journal::create(&jpath)? };
            if opts.resume {
                log::info!("replayed {} classes from {}", journal.replayed_store().len(), jpath.display());
            }
            let records = run_target(target, &mapper, &mut journal)?;
            let tmp = path.with_extension("partial");
            {
                let mut w = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
                write_jsonl(&mut w, target.name(), &records)?;
            }
            std::fs::rename(&tmp, path)?;
            records
        }
        None => {
            if opts.resume {
                return Err(CliError::Parse("--resume requires --out".into()));
            }
            run_target(target, &mapper, &mut NoLog)?
        }
    };
    writeln!(out, "{}", summary(&records))?;
    if opts.check {
        check_counts(target, &records).map_err(CliError::CheckMismatch)?;
        writeln!(out, "check passed")?;
    }
    Ok(())
}

pub struct VerifyArgs {
    pub file: Option<PathBuf>,
    pub corpus: bool,
    pub random: usize,
    pub bound: Option<u32>,
}

pub fn cmd_verify(out: &mut impl Write, args: &VerifyArgs) -> CliResult {
    let opts = VerifyOptions { bound: args.bound };
    let mut polytopes = Vec::new();
    if let Some(path) = &args.file {
        polytopes.push((path.display().to_string(), read_full_dimensional(path)?));
    }
    if args.corpus {
        polytopes.extend(corpus(args.random)?);
    }
    if polytopes.is_empty() {
        return Err(CliError::Parse("verify needs a file or --corpus".into()));
    }
    let report = verify_corpus(&polytopes, &opts, args.corpus);
    write!(out, "{}", report.render())?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failure(format!("{} check(s) failed", report.failures().len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn run_fine(path: &Path, dilation: Option<&str>, brute: Option<u32>) -> CliResult<String> {
        let mut out = Vec::new();
        cmd_fine(&mut out, path, dilation, brute)?;
        Ok(String::from_utf8(out).unwrap())
    }

    #[test]
    fn fine_examples() {
        let dir = tempfile::tempdir().unwrap();
        let t3 = file(&dir, "t3.json", r#"{"dim":2,"vertices":[[0,0],[3,0],[0,3]]}"#);
        let t2 = file(&dir, "t2.json", r#"{"dim":2,"vertices":[[0,0],[2,0],[0,2]]}"#);
        assert_eq!(run_fine(&t3, None, None).unwrap(), "(1,1)\n");
        assert_eq!(run_fine(&t2, Some("3/2"), None).unwrap(), "(1,1)\n");
        assert_eq!(run_fine(&t2, None, None).unwrap(), "empty\n");
        assert_eq!(run_fine(&t3, None, Some(2)).unwrap(), "(1,1)\n");
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let bad = file(&dir, "bad.json", "{");
        let flat = file(&dir, "flat.json", r#"{"dim":2,"vertices":[[0,0],[1,1]]}"#);
        let wide = file(&dir, "wide.json", r#"{"dim":2,"vertices":[[0,0,0]]}"#);
        assert_eq!(run_fine(&bad, None, None).unwrap_err().exit_code(), 2);
        assert_eq!(run_fine(&flat, None, None).unwrap_err().exit_code(), 3);
        assert_eq!(run_fine(&wide, None, None).unwrap_err().exit_code(), 3);
        let t2 = file(&dir, "t2.json", r#"{"dim":2,"vertices":[[0,0],[2,0],[0,2]]}"#);
        assert_eq!(run_fine(&t2, Some("x"), None).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn multipliers_of_triangle() {
        let dir = tempfile::tempdir().unwrap();
        let t1 = file(&dir, "t1.json", r#"{"dim":2,"vertices":[[0,0],[1,0],[0,1]]}"#);
        let mut out = Vec::new();
        cmd_multipliers(&mut out, &t1).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("mu = 3\nmu_max = 3\n"), "{text}");
    }

    #[test]
    fn classify_polygons_with_check_and_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("polygons.jsonl");
        let opts = ClassifyOptions { out: Some(path.clone()), jobs: 2, resume: false, check: true };
        let mut out = Vec::new();
        cmd_classify(&mut out, Target::Polygons, &opts).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "4 classes; mu: 3×1 2×2 3/2×1\ncheck passed\n");
        let first = std::fs::read(&path).unwrap();
        let resumed = ClassifyOptions { resume: true, jobs: 1, ..opts };
        cmd_classify(&mut Vec::new(), Target::Polygons, &resumed).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), first);
    }
}
