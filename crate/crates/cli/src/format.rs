//! On-disk JSON format for matrices, families, and witnesses.
//!
//! Every file is one JSON object tagged by `kind`:
//!
//! - `polymat`: `rows`, `cols`, and `entries`, a row-major grid of
//!   polynomials, each a list of coefficient strings in ascending degree
//!   (`["0", "-1", "1"]` is λ² − λ);
//! - `family`: `size` and `members`, a list of square grids of rational
//!   strings;
//! - `witness`: constant grids `v` and `p` plus a polynomial grid `q`.
//!
//! Rationals are written as `"n"` or `"n/d"`. Every file carries
//! `format_version`, currently `"1"`; anything else is rejected rather
//! than misread.

use num_bigint::BigInt;
use num_traits::Zero;
use polyeq::{EquivalenceWitness, MatrixFamily, Poly, PolyMat, Rat, RatMat};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::fs;
use std::path::Path;

pub const FORMAT_VERSION: &str = "1";

/// A malformed file; the message states what and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

type PolyGrid = Vec<Vec<Vec<String>>>;
type RatGrid = Vec<Vec<String>>;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatrixFile {
    Polymat {
        format_version: String,
        rows: usize,
        cols: usize,
        entries: PolyGrid,
    },
    Family {
        format_version: String,
        size: usize,
        members: Vec<RatGrid>,
    },
    Witness {
        format_version: String,
        v: RatGrid,
        p: RatGrid,
        q: PolyGrid,
    },
}

impl MatrixFile {
    fn format_version(&self) -> &str {
        match self {
            MatrixFile::Polymat { format_version, .. }
            | MatrixFile::Family { format_version, .. }
            | MatrixFile::Witness { format_version, .. } => format_version,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MatrixFile::Polymat { .. } => "polymat",
            MatrixFile::Family { .. } => "family",
            MatrixFile::Witness { .. } => "witness",
        }
    }
}

/// Read and parse one file, checking the format version.
pub fn read_matrix_file(path: &Path) -> Result<MatrixFile, FormatError> {
    let text = fs::read_to_string(path)
        .map_err(|e| FormatError(format!("cannot read {}: {e}", path.display())))?;
    let file: MatrixFile = serde_json::from_str(&text)
        .map_err(|e| FormatError(format!("{}: {e}", path.display())))?;
    if file.format_version() != FORMAT_VERSION {
        return err(format!(
            "{}: unsupported format_version {:?} (expected {:?})",
            path.display(),
            file.format_version(),
            FORMAT_VERSION
        ));
    }
    Ok(file)
}

fn parse_rat(s: &str) -> Result<Rat, FormatError> {
    let trimmed = s.trim();
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n, d),
        None => (trimmed, "1"),
    };
    let num: BigInt = num_text
        .trim()
        .parse()
        .map_err(|_| FormatError(format!("bad rational {s:?}")))?;
    let den: BigInt = den_text
        .trim()
        .parse()
        .map_err(|_| FormatError(format!("bad rational {s:?}")))?;
    if den.is_zero() {
        return err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(num, den))
}

fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

fn parse_poly(coeffs: &[String]) -> Result<Poly, FormatError> {
    let parsed: Result<Vec<Rat>, FormatError> = coeffs.iter().map(|c| parse_rat(c)).collect();
    Ok(Poly::from_coeffs(parsed?))
}

pub(crate) fn poly_to_strings(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(rat_to_string).collect()
}

fn parse_poly_grid(grid: &PolyGrid, rows: usize, cols: usize, what: &str) -> Result<PolyMat, FormatError> {
    if rows == 0 || cols == 0 {
        return err(format!("{what}: rows and cols must be positive"));
    }
    if grid.len() != rows {
        return err(format!("{what}: expected {rows} rows, found {}", grid.len()));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in grid.iter().enumerate() {
        if row.len() != cols {
            return err(format!(
                "{what}: row {i} has {} entries, expected {cols}",
                row.len()
            ));
        }
        for coeffs in row {
            entries.push(parse_poly(coeffs)?);
        }
    }
    Ok(PolyMat::new(rows, cols, entries))
}

fn parse_rat_grid(grid: &RatGrid, what: &str) -> Result<RatMat, FormatError> {
    if grid.is_empty() || grid[0].is_empty() {
        return err(format!("{what}: grid must be nonempty"));
    }
    let cols = grid[0].len();
    let mut rows = Vec::with_capacity(grid.len());
    for (i, row) in grid.iter().enumerate() {
        if row.len() != cols {
            return err(format!(
                "{what}: row {i} has {} entries, expected {cols}",
                row.len()
            ));
        }
        let parsed: Result<Vec<Rat>, FormatError> = row.iter().map(|c| parse_rat(c)).collect();
        rows.push(parsed?);
    }
    Ok(RatMat::from_rows(rows))
}

/// Interpret a `polymat` file.
pub fn polymat_from_file(file: &MatrixFile, path: &Path) -> Result<PolyMat, FormatError> {
    match file {
        MatrixFile::Polymat {
            rows, cols, entries, ..
        } => parse_poly_grid(entries, *rows, *cols, &path.display().to_string()),
        other => err(format!(
            "{}: expected kind \"polymat\", found {:?}",
            path.display(),
            other.kind()
        )),
    }
}

/// Interpret a `family` file.
pub fn family_from_file(file: &MatrixFile, path: &Path) -> Result<MatrixFamily, FormatError> {
    let what = path.display().to_string();
    match file {
        MatrixFile::Family { size, members, .. } => {
            if members.is_empty() {
                return err(format!("{what}: a family needs at least one member"));
            }
            let mut parsed = Vec::with_capacity(members.len());
            for (k, member) in members.iter().enumerate() {
                let m = parse_rat_grid(member, &format!("{what}: member {k}"))?;
                if (m.rows(), m.cols()) != (*size, *size) {
                    return err(format!(
                        "{what}: member {k} is {}x{}, expected {size}x{size}",
                        m.rows(),
                        m.cols()
                    ));
                }
                parsed.push(m);
            }
            MatrixFamily::new(parsed).map_err(|e| FormatError(format!("{what}: {e}")))
        }
        other => err(format!(
            "{what}: expected kind \"family\", found {:?}",
            other.kind()
        )),
    }
}

/// Interpret a `witness` file. Shape coherence (square, one size) is
/// enforced here; the algebraic identities are the verifier's job.
pub fn witness_from_file(file: &MatrixFile, path: &Path) -> Result<EquivalenceWitness, FormatError> {
    let what = path.display().to_string();
    match file {
        MatrixFile::Witness { v, p, q, .. } => {
            let v = parse_rat_grid(v, &format!("{what}: v"))?;
            let p = parse_rat_grid(p, &format!("{what}: p"))?;
            let n = v.rows();
            if !v.is_square() || (p.rows(), p.cols()) != (n, n) {
                return err(format!("{what}: v and p must be square of one size"));
            }
            let q = parse_poly_grid(q, n, n, &format!("{what}: q"))?;
            Ok(EquivalenceWitness { v, p, q })
        }
        other => err(format!(
            "{what}: expected kind \"witness\", found {:?}",
            other.kind()
        )),
    }
}

fn poly_grid_of(m: &PolyMat) -> PolyGrid {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| poly_to_strings(m.at(i, j))).collect())
        .collect()
}

fn rat_grid_of(m: &RatMat) -> RatGrid {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rat_to_string(m.at(i, j))).collect())
        .collect()
}

pub fn polymat_to_file(m: &PolyMat) -> MatrixFile {
    MatrixFile::Polymat {
        format_version: FORMAT_VERSION.to_string(),
        rows: m.rows(),
        cols: m.cols(),
        entries: poly_grid_of(m),
    }
}

pub fn witness_to_file(w: &EquivalenceWitness) -> MatrixFile {
    MatrixFile::Witness {
        format_version: FORMAT_VERSION.to_string(),
        v: rat_grid_of(&w.v),
        p: rat_grid_of(&w.p),
        q: poly_grid_of(&w.q),
    }
}
