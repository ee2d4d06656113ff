//! On-disk JSON formats: `lattice-v1` for (ortho)lattices as cover lists
//! and `fn-v1` for total or partial function tables. Writing is canonical
//! (sorted covers, pretty JSON, trailing newline), so write ∘ read is
//! byte-identical on canonical files.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::LatticeError;
use crate::lattice::{Lattice, TupleIndex};
use crate::order::FunctionTable;
use crate::ortho::OrthoLattice;

pub const LATTICE_FORMAT: &str = "lattice-v1";
pub const FN_FORMAT: &str = "fn-v1";

#[derive(Debug, Error)]
pub enum FileError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format tag {0:?}")]
    BadFormat(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("invalid file: {0}")]
    Invalid(String),
}

pub type FileResult<T> = std::result::Result<T, FileError>;

/// A lattice as its cover relation, with an optional orthocomplement table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFile {
    pub format: String,
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub perp: Option<Vec<usize>>,
}

impl LatticeFile {
    /// Canonical file for a lattice: covers sorted lexicographically.
    pub fn from_lattice(l: &Lattice, perp: Option<&[usize]>) -> LatticeFile {
        let mut covers: Vec<[usize; 2]> = l.poset().covers().iter().map(|&(a, b)| [a, b]).collect();
        covers.sort_unstable();
        LatticeFile {
            format: LATTICE_FORMAT.to_string(),
            n: l.len(),
            covers,
            perp: perp.map(|p| p.to_vec()),
        }
    }

    pub fn from_ortho(o: &OrthoLattice) -> LatticeFile {
        LatticeFile::from_lattice(o.lattice(), Some(o.perp_table()))
    }

    /// Validates into a lattice; the perp table, when present, must satisfy
    /// the ortholattice laws.
    pub fn to_lattice(&self) -> FileResult<(Lattice, Option<OrthoLattice>)> {
        if self.format != LATTICE_FORMAT {
            return Err(FileError::BadFormat(self.format.clone()));
        }
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        let lattice = Lattice::from_covers(self.n, &covers)?;
        let ortho = match &self.perp {
            Some(p) => Some(OrthoLattice::new(lattice.clone(), p.clone())?),
            None => None,
        };
        Ok((lattice, ortho))
    }
}

/// A k-ary function, either a dense table in tuple-index order (first
/// coordinate most significant) or a sparse list of (tuple, value) points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionFile {
    pub format: String,
    pub arity: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub table: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub points: Option<Vec<(Vec<usize>, usize)>>,
}

impl FunctionFile {
    pub fn from_table(f: &FunctionTable) -> FunctionFile {
        if f.is_total() {
            FunctionFile {
                format: FN_FORMAT.to_string(),
                arity: f.arity(),
                table: Some(f.dense_values()),
                points: None,
            }
        } else {
            let idx = f.index();
            let points = f
                .domain()
                .iter()
                .map(|&p| (idx.decode(p), f.get(p).unwrap()))
                .collect();
            FunctionFile {
                format: FN_FORMAT.to_string(),
                arity: f.arity(),
                table: None,
                points: Some(points),
            }
        }
    }

    /// Validates against a lattice of `n` elements.
    pub fn to_table(&self, n: usize) -> FileResult<FunctionTable> {
        if self.format != FN_FORMAT {
            return Err(FileError::BadFormat(self.format.clone()));
        }
        if self.arity == 0 {
            return Err(FileError::Invalid("arity must be at least 1".into()));
        }
        let idx = TupleIndex::new(n, self.arity);
        match (&self.table, &self.points) {
            (Some(values), None) => {
                if values.len() != idx.count() {
                    return Err(FileError::Invalid(format!(
                        "table length {} != {}^{} = {}",
                        values.len(),
                        n,
                        self.arity,
                        idx.count()
                    )));
                }
                for &v in values {
                    if v >= n {
                        return Err(FileError::Lattice(LatticeError::InvalidElement { id: v, n }));
                    }
                }
                Ok(FunctionTable::total(n, self.arity, values.clone()))
            }
            (None, Some(points)) => {
                let mut encoded = Vec::with_capacity(points.len());
                for (tuple, v) in points {
                    if tuple.len() != self.arity {
                        return Err(FileError::Lattice(LatticeError::ArityMismatch {
                            expected: self.arity,
                            got: tuple.len(),
                        }));
                    }
                    for &c in tuple {
                        if c >= n {
                            return Err(FileError::Lattice(LatticeError::InvalidElement { id: c, n }));
                        }
                    }
                    if *v >= n {
                        return Err(FileError::Lattice(LatticeError::InvalidElement { id: *v, n }));
                    }
                    encoded.push((idx.encode(tuple), *v));
                }
                Ok(FunctionTable::partial(n, self.arity, &encoded)?)
            }
            _ => Err(FileError::Invalid(
                "exactly one of \"table\" and \"points\" must be present".into(),
            )),
        }
    }
}

/// Canonical serialization: pretty JSON plus a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn read_lattice_file(path: &Path) -> FileResult<LatticeFile> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_lattice_file(path: &Path, file: &LatticeFile) -> FileResult<()> {
    Ok(std::fs::write(path, to_canonical_json(file))?)
}

pub fn read_function_file(path: &Path) -> FileResult<FunctionFile> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn write_function_file(path: &Path, file: &FunctionFile) -> FileResult<()> {
    Ok(std::fs::write(path, to_canonical_json(file))?)
}
