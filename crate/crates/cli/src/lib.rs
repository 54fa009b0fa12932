//! Commands behind the `z2z4` binary. Each command returns its full text
//! output so that it can be tested without spawning a process.

use std::fmt::Write as _;
use std::path::Path;

use z2z4::construct::CATALOG_NAMES;
use z2z4::enumerator::GleasonDecomposition;
use z2z4::shadow::COSET_LABELS;
use z2z4::verify::{self, Check};
use z2z4::{
    brute_force_dual, catalog, classify, decompose, dual, gleason_decompose, glue, is_self_dual,
    ladder_build, neighbor, orthogonality_table, parse_code_file, search, span, write_code_file,
    AdditiveCode, Guard, SearchOptions, SelfDualClass, TypeParams,
    WeightEnumerator,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    File { path: String, source: z2z4::Error },

    #[error(transparent)]
    Library(#[from] z2z4::Error),

    #[error("{0}")]
    Usage(String),

    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    /// Process exit status: 2 parse error, 3 precondition violation,
    /// 4 guard exceeded, 1 failed verification or internal error.
    pub fn exit_code(&self) -> i32 {
        let lib = match self {
            CliError::Io { .. } | CliError::Usage(_) => return 2,
            CliError::ChecksFailed { .. } => return 1,
            CliError::File { source, .. } => source,
            CliError::Library(e) => e,
        };
        match lib {
            z2z4::Error::Parse { .. } | z2z4::Error::InvalidLiteral { .. } => 2,
            z2z4::Error::GuardExceeded(_) => 4,
            z2z4::Error::Invariant(_) => 1,
            _ => 3,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Applies `--guard N`: every length limit becomes `N`, and the codeword
/// limit becomes `2^N` (codes of length `N` may have up to that many words).
pub fn install_guard(limit: Option<usize>) {
    if let Some(n) = limit {
        Guard::install(Guard {
            max_length: n,
            max_log_size: n,
            max_oracle_length: n,
            max_search_length: n,
        });
    }
}

/// Reads and spans a code file.
pub fn load_code(path: &Path) -> CliResult<AdditiveCode> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let gen = parse_code_file(&text).map_err(|source| CliError::File {
        path: shown,
        source,
    })?;
    Ok(span(&gen)?)
}

/// A code with generators chosen from its codeword set alone, so that equal
/// codes print identically however they were obtained.
fn canonical(code: &AdditiveCode) -> CliResult<AdditiveCode> {
    Ok(AdditiveCode::from_subgroup(code.ambient(), code.codewords().to_vec())?)
}

fn code_block(header: &[String], code: &AdditiveCode) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    out.push_str(&write_code_file(code.generators()));
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Everything `info` reports about one code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub type_params: TypeParams,
    pub size: usize,
    pub self_dual: bool,
    pub class: SelfDualClass,
    pub separable: bool,
    pub antipodal: bool,
    pub weight_enumerator: WeightEnumerator,
    pub gleason: Option<GleasonDecomposition>,
    pub shadow: Option<ShadowSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowSummary {
    pub size: usize,
    pub enumerator: WeightEnumerator,
}

impl AnalysisReport {
    pub fn of(code: &AdditiveCode) -> CliResult<AnalysisReport> {
        let class = classify(code);
        let weight_enumerator = WeightEnumerator::of_code(code);
        let gleason = match class {
            SelfDualClass::NotSelfDual => None,
            cls => Some(gleason_decompose(&weight_enumerator, cls)?),
        };
        let shadow = match class {
            SelfDualClass::Type0 => Some(ShadowSummary {
                size: z2z4::shadow(code)?.len(),
                enumerator: weight_enumerator.shadow()?,
            }),
            _ => None,
        };
        Ok(AnalysisReport {
            type_params: code.type_params(),
            size: code.len(),
            self_dual: class != SelfDualClass::NotSelfDual,
            class,
            separable: code.is_separable(),
            antipodal: code.is_antipodal(),
            weight_enumerator,
            gleason,
            shadow,
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "type: {}", self.type_params);
        let _ = writeln!(out, "size: {}", self.size);
        let _ = writeln!(out, "self-dual: {}", yes_no(self.self_dual));
        let _ = writeln!(out, "class: {}", self.class);
        let _ = writeln!(out, "separable: {}", yes_no(self.separable));
        let _ = writeln!(out, "antipodal: {}", yes_no(self.antipodal));
        let _ = writeln!(out, "weight enumerator: {}", self.weight_enumerator);
        if let Some(g) = &self.gleason {
            let _ = writeln!(out, "gleason: {g}");
        }
        if let Some(s) = &self.shadow {
            let _ = writeln!(out, "shadow: {} vectors, enumerator {}", s.size, s.enumerator);
        }
        out
    }
}

pub fn cmd_info(path: &Path) -> CliResult<String> {
    Ok(AnalysisReport::of(&load_code(path)?)?.render())
}

pub fn cmd_dual(path: &Path, oracle: bool) -> CliResult<String> {
    let code = load_code(path)?;
    let d = if oracle {
        brute_force_dual(&code)?
    } else {
        dual(&code)?
    };
    let d = canonical(&d)?;
    Ok(code_block(
        &[format!("dual: {} codewords, type {}", d.len(), d.type_params())],
        &d,
    ))
}

/// `"<class>, <separable|non-separable>, <antipodal|non-antipodal>"`, or
/// `"not self-dual"`.
pub fn cmd_classify(path: &Path) -> CliResult<String> {
    let code = load_code(path)?;
    let class = classify(&code);
    if class == SelfDualClass::NotSelfDual {
        return Ok(format!("{class}\n"));
    }
    Ok(format!(
        "{class}, {}, {}\n",
        if code.is_separable() { "separable" } else { "non-separable" },
        if code.is_antipodal() { "antipodal" } else { "non-antipodal" },
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Variant {
    Plain,
    Even,
    Shadow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Coeffs,
}

pub fn cmd_we(path: &Path, variant: Variant, format: Format) -> CliResult<String> {
    let code = load_code(path)?;
    let w = WeightEnumerator::of_code(&code);
    let w = match variant {
        Variant::Plain => w,
        Variant::Even => w.even_subcode(),
        Variant::Shadow => {
            if !is_self_dual(&code) {
                return Err(z2z4::Error::Precondition("the shadow is defined for self-dual codes".into()).into());
            }
            w.shadow()?
        }
    };
    Ok(match format {
        Format::Text => format!("{w}\n"),
        Format::Coeffs => format!("{}\n", w.to_coefficient_line()),
    })
}

pub fn cmd_gleason(path: &Path, class: Option<SelfDualClass>) -> CliResult<String> {
    let code = load_code(path)?;
    let cls = match class {
        Some(c) => c,
        None => match classify(&code) {
            SelfDualClass::NotSelfDual => {
                return Err(z2z4::Error::Precondition("the code is not self-dual".into()).into())
            }
            c => c,
        },
    };
    let g = gleason_decompose(&WeightEnumerator::of_code(&code), cls)?;
    let (g1, g2) = z2z4::enumerator::ring_generators(cls)?;
    Ok(format!("ring: {cls}\ng1 = {g1}\ng2 = {g2}\nW = {g}\n"))
}

pub fn cmd_shadow(path: &Path) -> CliResult<String> {
    let code = load_code(path)?;
    let shadow = z2z4::shadow(&code)?;
    let mut out = String::new();
    let _ = writeln!(out, "shadow: {} vectors", shadow.len());
    for v in &shadow {
        let _ = writeln!(out, "  {v}");
    }
    if classify(&code) == SelfDualClass::Type0 {
        let d = decompose(&code)?;
        let _ = writeln!(out, "s = {}", d.s);
        let _ = writeln!(out, "t = {}", d.t);
        for (label, coset) in COSET_LABELS.iter().zip(d.cosets()) {
            let words: Vec<String> = coset.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{label} ({}): {}", coset.len(), words.join(" "));
        }
        let table = orthogonality_table(&d)?;
        let _ = writeln!(out, "orthogonality table (rows and columns {}):", COSET_LABELS.join(" "));
        for row in table {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  {}", cells.join(" "));
        }
    }
    Ok(out)
}

pub fn cmd_neighbor(path: &Path, vector: &str) -> CliResult<String> {
    let code = load_code(path)?;
    let v = z2z4::algebra::parse_vector(vector, code.ambient())?;
    let n = canonical(&neighbor(&code, &v)?)?;
    Ok(code_block(
        &[format!("neighbor through {v}: {}, type {}", classify(&n), n.type_params())],
        &n,
    ))
}

pub fn cmd_glue(c: &Path, d: &Path) -> CliResult<String> {
    let g = glue(&load_code(c)?, &load_code(d)?)?;
    let code = canonical(&g.code)?;
    Ok(code_block(
        &[format!("glued ({:?}): {}, type {}", g.variant, classify(&code), code.type_params())],
        &code,
    ))
}

/// What `construct` should build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Catalog(String),
    Ladder {
        alpha: usize,
        beta: usize,
        class: SelfDualClass,
        separable: Option<bool>,
    },
}

pub fn cmd_construct(recipe: &Recipe) -> CliResult<String> {
    let code = match recipe {
        Recipe::Catalog(name) => catalog(name)?.code,
        Recipe::Ladder {
            alpha,
            beta,
            class,
            separable,
        } => ladder_build(*alpha, *beta, *class, *separable)?,
    };
    Ok(code_block(
        &[format!(
            "{}, {}, type {}",
            classify(&code),
            if code.is_separable() { "separable" } else { "non-separable" },
            code.type_params()
        )],
        &code,
    ))
}

pub fn cmd_catalog() -> CliResult<String> {
    let mut out = String::new();
    for name in CATALOG_NAMES {
        let e = catalog(name)?;
        let _ = writeln!(
            out,
            "{:<13} ({:>2},{:>2})  {:<8} {:<14} type {}",
            e.name,
            e.code.ambient().alpha(),
            e.code.ambient().beta(),
            e.class.to_string(),
            if e.separable { "separable" } else { "non-separable" },
            e.code.type_params()
        );
    }
    Ok(out)
}

/// Runs the built-in checks. The report is returned even when some fail.
pub fn cmd_verify() -> (String, CliResult<()>) {
    let checks: Vec<Check> = verify::run_all();
    let mut out = String::new();
    for c in &checks {
        if c.passed {
            let _ = writeln!(out, "PASS {}", c.name);
        } else {
            let _ = writeln!(out, "FAIL {}: {}", c.name, c.detail);
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let _ = writeln!(out, "{} of {} checks passed", checks.len() - failed, checks.len());
    let status = if failed == 0 {
        Ok(())
    } else {
        Err(CliError::ChecksFailed {
            failed,
            total: checks.len(),
        })
    };
    (out, status)
}

pub fn cmd_search(alpha: usize, beta: usize, class: Option<SelfDualClass>, dedup: bool) -> CliResult<String> {
    let census = search(
        alpha,
        beta,
        SearchOptions {
            cls: class,
            dedup_permutations: dedup,
            max_length: None,
        },
    )?;
    let mut out = String::new();
    let _ = writeln!(out, "count: {}", census.len());
    for (i, hit) in census.hits.iter().enumerate() {
        let _ = writeln!(
            out,
            "\n# code {}: {}, type {}, W = {}",
            i + 1,
            hit.class,
            hit.code.type_params(),
            WeightEnumerator::of_code(&hit.code)
        );
        out.push_str(&write_code_file(&hit.generators));
    }
    Ok(out)
}

/// Parses `yes`/`no` style flags.
pub fn parse_bool(s: &str) -> std::result::Result<bool, String> {
    match s.to_ascii_lowercase().as_str() {
        "yes" | "y" | "true" | "1" => Ok(true),
        "no" | "n" | "false" | "0" => Ok(false),
        _ => Err(format!("expected yes or no, found {s:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        std::io::Write::write_all(&mut f, text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn report_for_c1() {
        let f = write_temp("2 2\n11|20\n01|11\n");
        let r = AnalysisReport::of(&load_code(f.path()).unwrap()).unwrap();
        assert_eq!(r.class, SelfDualClass::Type0);
        assert_eq!(r.type_params, TypeParams::new(2, 2, 1, 1, 1));
        assert_eq!(r.shadow.as_ref().unwrap().size, 8);
        assert!(r.render().contains("weight enumerator: x^6 + 4*x^3*y^3 + 3*x^2*y^4"));
    }

    #[test]
    fn exit_codes() {
        let f = write_temp("2 2\n11|2\n");
        assert_eq!(load_code(f.path()).unwrap_err().exit_code(), 2);
        let e: CliError = z2z4::Error::GuardExceeded("x".into()).into();
        assert_eq!(e.exit_code(), 4);
        let e: CliError = z2z4::Error::Precondition("x".into()).into();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn bool_flags() {
        assert_eq!(parse_bool("Yes"), Ok(true));
        assert_eq!(parse_bool("no"), Ok(false));
        assert!(parse_bool("maybe").is_err());
    }
}
