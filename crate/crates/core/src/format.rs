//! Plain-text code files.
//!
//! ```text
//! # comment lines start with '#'
//! 2 2
//! 11|20
//! 01|11
//! ```
//!
//! The first data line holds `alpha beta`; every following data line is one
//! generator row. Blank lines are ignored.

use crate::algebra::{parse_vector, AmbientParams};
use crate::code::GeneratorMatrix;
use crate::error::{Error, Result};

/// Parses a code file into its generator matrix. Errors carry the 1-based
/// line number.
pub fn parse_code_file(text: &str) -> Result<GeneratorMatrix> {
    let mut ambient: Option<AmbientParams> = None;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at_line = |reason: String| Error::Parse {
            line: line_no,
            reason,
        };
        match ambient {
            None => {
                let parts: Vec<&str> = line.split(' ').collect();
                let [a, b] = parts.as_slice() else {
                    return Err(at_line(format!(
                        "expected the header \"alpha beta\", found {line:?}"
                    )));
                };
                let parse = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| at_line(format!("{s:?} is not a nonnegative integer")))
                };
                let (alpha, beta) = (parse(a)?, parse(b)?);
                ambient =
                    Some(AmbientParams::new(alpha, beta).map_err(|e| at_line(e.to_string()))?);
            }
            Some(shape) => {
                rows.push(parse_vector(line, shape).map_err(|e| at_line(e.to_string()))?);
            }
        }
    }
    let ambient = ambient.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        reason: "missing the \"alpha beta\" header".into(),
    })?;
    GeneratorMatrix::new(ambient, rows)
}

/// Writes a generator matrix in the code file format, without comments, so
/// that parsing the output gives back the same rows.
pub fn write_code_file(gen: &GeneratorMatrix) -> String {
    let ambient = gen.ambient();
    let mut out = format!("{} {}\n", ambient.alpha(), ambient.beta());
    for row in gen.rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}
