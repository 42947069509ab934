//! Ring presentation files.
//!
//! ```text
//! # the dimension-8 ring
//! field 101
//! vars x, y, z
//! relations x^2, y^2 + x*z, z^2
//! sequence s = x, y, z
//! ```
//!
//! `field` takes a prime or `QQ` and defaults to 101. `relations` may
//! appear on several lines; an empty list gives the polynomial ring.

use std::fmt;

use gorcheck_core::criteria::{CriteriaError, LocalRing};
use gorcheck_core::field::Field;
use gorcheck_core::poly::{MonomialOrder, PolyOf, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct RingFileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for RingFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> RingFileError {
    RingFileError { line, column, message: message.into() }
}

/// A piece of text and where it starts in the file (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub text: String,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

/// A parsed file before its polynomials are interpreted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingFile {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub relations: Vec<Located>,
    pub sequences: Vec<(String, Located)>,
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingFile {
    pub fn parse(src: &str) -> Result<Self, RingFileError> {
        let mut field = None;
        let mut vars: Option<Vec<String>> = None;
        let mut relations = Vec::new();
        let mut sequences: Vec<(String, Located)> = Vec::new();
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let indent = content.len() - trimmed.len();
            let (key, rest) = match trimmed.find(char::is_whitespace) {
                Some(p) => (&trimmed[..p], &trimmed[p..]),
                None => (trimmed, ""),
            };
            let rest_col = indent + key.len() + (rest.len() - rest.trim_start().len()) + 1;
            let body = rest.trim();
            match key {
                "field" => {
                    if field.is_some() {
                        return Err(err(line, indent + 1, "field declared twice"));
                    }
                    field = Some(match body {
                        "QQ" | "Q" => FieldSpec::Rationals,
                        b => FieldSpec::Prime(
                            b.parse().map_err(|_| err(line, rest_col, format!("expected a prime or QQ, found '{b}'")))?,
                        ),
                    });
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(err(line, indent + 1, "vars declared twice"));
                    }
                    let mut names = Vec::new();
                    let mut col = rest_col;
                    for part in body.split(',') {
                        let name = part.trim();
                        let at = col + (part.len() - part.trim_start().len());
                        if !is_identifier(name) {
                            return Err(err(line, at, format!("'{name}' is not a variable name")));
                        }
                        if names.iter().any(|n: &String| n == name) {
                            return Err(err(line, at, format!("variable '{name}' declared twice")));
                        }
                        names.push(name.to_string());
                        col += part.len() + 1;
                    }
                    vars = Some(names);
                }
                "relations" => {
                    if !body.is_empty() {
                        relations.push(Located { text: body.to_string(), line, column: rest_col });
                    }
                }
                "sequence" => {
                    let Some(eq) = body.find('=') else {
                        return Err(err(line, rest_col, "expected 'sequence NAME = elements'"));
                    };
                    let name = body[..eq].trim();
                    if !is_identifier(name) {
                        return Err(err(line, rest_col, format!("'{name}' is not a sequence name")));
                    }
                    if sequences.iter().any(|(n, _)| n == name) {
                        return Err(err(line, rest_col, format!("sequence '{name}' declared twice")));
                    }
                    let after = &body[eq + 1..];
                    let column = rest_col + eq + 1 + (after.len() - after.trim_start().len());
                    sequences.push((name.to_string(), Located { text: after.trim().to_string(), line, column }));
                }
                other => return Err(err(line, indent + 1, format!("unknown declaration '{other}'"))),
            }
        }
        let vars = vars.ok_or_else(|| err(1, 1, "missing 'vars' declaration"))?;
        if vars.is_empty() {
            return Err(err(1, 1, "no variables declared"));
        }
        Ok(RingFile { field: field.unwrap_or(FieldSpec::Prime(101)), vars, relations, sequences })
    }

    pub fn read(path: &std::path::Path) -> Result<Self, RingFileError> {
        let src = std::fs::read_to_string(path).map_err(|e| err(0, 0, format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&src)
    }

    pub fn poly_ring<K: Field>(&self, field: K) -> PolyRing<K> {
        PolyRing::with_names(field, self.vars.clone(), MonomialOrder::GrevLex)
    }

    /// Parses a located comma-separated list, reporting file positions.
    pub fn parse_located<K: Field>(ring: &PolyRing<K>, loc: &Located) -> Result<Vec<PolyOf<K>>, RingFileError> {
        ring.parse_list(&loc.text).map_err(|e| err(loc.line, loc.column + e.column.saturating_sub(1), e.message))
    }

    pub fn relations<K: Field>(&self, ring: &PolyRing<K>) -> Result<Vec<PolyOf<K>>, RingFileError> {
        let mut out = Vec::new();
        for loc in &self.relations {
            out.extend(Self::parse_located(ring, loc)?);
        }
        Ok(out)
    }

    pub fn sequence_text(&self, name: &str) -> Option<&Located> {
        self.sequences.iter().find(|(n, _)| n == name).map(|(_, l)| l)
    }
}

/// A ring built from a file, with its declared sequences.
#[derive(Clone, Debug)]
pub struct RingHandle<K: Field> {
    pub file: RingFile,
    pub ring: LocalRing<K>,
}

#[derive(Debug, thiserror::Error)]
pub enum HandleError {
    #[error("{0}")]
    File(#[from] RingFileError),
    #[error("{0}")]
    Ring(#[from] CriteriaError),
}

impl<K: Field> RingHandle<K> {
    pub fn new(file: RingFile, field: K) -> Result<Self, HandleError> {
        let ring = file.poly_ring(field);
        let rels = file.relations(&ring)?;
        let local = LocalRing::new(&ring, &rels)?;
        Ok(RingHandle { file, ring: local })
    }

    /// A declared sequence name or a literal comma-separated list.
    pub fn elements(&self, arg: &str) -> Result<Vec<PolyOf<K>>, HandleError> {
        let arg = arg.trim();
        if let Some(loc) = self.file.sequence_text(arg) {
            return Ok(RingFile::parse_located(self.ring.ring(), loc)?);
        }
        if arg == "m" && self.ring.ring().var_index("m").is_none() {
            let r = self.ring.ring();
            return Ok((0..r.nvars()).map(|i| r.var(i)).collect());
        }
        Ok(self.ring.parse_list(arg)?)
    }
}
