//! Matrix files: CSV (`n` rows of `n` numbers, optional header of names) or
//! JSON (`{"scale": ..., "matrix": [[...]], "names": [...]}`).

use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use pcmtie::{
    to_additive, validate_additive, validate_multiplicative, AdditivePcm, MultiplicativePcm,
    PcmError, SquareMatrix, Tolerances,
};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Multiplicative,
    Additive,
}

impl Scale {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scale::Multiplicative => "multiplicative",
            Scale::Additive => "additive",
        }
    }
}

#[derive(Debug, Clone)]
pub struct MatrixFile {
    pub scale: Scale,
    pub matrix: SquareMatrix,
    pub names: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct JsonMatrix {
    scale: Scale,
    matrix: Vec<Vec<f64>>,
    names: Option<Vec<String>>,
}

pub fn read_input(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

/// Picks JSON for `.json` files or content starting with `{`, CSV otherwise.
pub fn parse_matrix_file(
    path: &Path,
    text: &str,
    csv_scale: Scale,
    csv_names: bool,
) -> Result<MatrixFile, CliError> {
    let is_json = path.extension().is_some_and(|e| e == "json")
        || text.trim_start().starts_with('{');
    if is_json {
        parse_json(text)
    } else {
        parse_csv(text, csv_scale, csv_names)
    }
}

pub fn parse_json(text: &str) -> Result<MatrixFile, CliError> {
    let raw: JsonMatrix = serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let matrix = SquareMatrix::from_rows(&raw.matrix).map_err(|e| match e {
        PcmError::NotSquare { row, cols, rows } => CliError::Parse {
            line: 0,
            column: 0,
            message: format!(
                "\"matrix\" row {} has {cols} entries, expected {rows}",
                row + 1
            ),
        },
        other => CliError::Validation(other),
    })?;
    Ok(MatrixFile {
        scale: raw.scale,
        matrix,
        names: raw.names,
    })
}

pub fn parse_csv(text: &str, scale: Scale, with_names: bool) -> Result<MatrixFile, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(with_names)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let csv_err = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line() as usize);
        CliError::Parse {
            line,
            column: 0,
            message: e.to_string(),
        }
    };
    let names = if with_names {
        let header = reader.headers().map_err(csv_err)?;
        Some(header.iter().map(str::to_string).collect::<Vec<_>>())
    } else {
        None
    };
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut last_line = if with_names { 1 } else { 0 };
    for record in reader.records() {
        let record = record.map_err(csv_err)?;
        let line = record.position().map_or(rows.len() + 1, |p| p.line() as usize);
        last_line = line;
        let mut row = Vec::with_capacity(record.len());
        for (col, field) in record.iter().enumerate() {
            let value = field.parse::<f64>().map_err(|_| CliError::Parse {
                line,
                column: col + 1,
                message: format!("`{field}` is not a number"),
            })?;
            row.push(value);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(CliError::Parse {
                    line,
                    column: row.len().min(first.len()) + 1,
                    message: format!("row has {} fields, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    let n = rows.first().map_or(0, Vec::len);
    if rows.len() != n {
        return Err(CliError::Parse {
            line: last_line + 1,
            column: 1,
            message: format!("found {} rows of {n} columns; the matrix must be square", rows.len()),
        });
    }
    let matrix = SquareMatrix::from_rows(&rows).map_err(CliError::Validation)?;
    Ok(MatrixFile {
        scale,
        matrix,
        names,
    })
}

/// A matrix file that passed validation for its scale.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub file: MatrixFile,
    pub additive: AdditivePcm,
    pub multiplicative: Option<MultiplicativePcm>,
}

impl Loaded {
    pub fn n(&self) -> usize {
        self.additive.dim()
    }
}

pub fn check_names(file: &MatrixFile) -> Result<(), CliError> {
    if let Some(names) = &file.names {
        let n = file.matrix.dim();
        if names.len() != n {
            return Err(CliError::Names(format!(
                "{} names given for {n} alternatives",
                names.len()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = names.iter().find(|name| !seen.insert(name.as_str())) {
            return Err(CliError::Names(format!("duplicate name `{dup}`")));
        }
    }
    Ok(())
}

pub fn load(file: MatrixFile, tol: &Tolerances) -> Result<Loaded, CliError> {
    check_names(&file)?;
    match file.scale {
        Scale::Multiplicative => {
            let m = validate_multiplicative(file.matrix.clone(), tol)?;
            Ok(Loaded {
                additive: to_additive(&m),
                multiplicative: Some(m),
                file,
            })
        }
        Scale::Additive => {
            let a = validate_additive(file.matrix.clone(), tol)?;
            Ok(Loaded {
                additive: a,
                multiplicative: None,
                file,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE5_CSV: &str = "0,-5,2,0,4\n5,0,2,5,-6\n-2,-2,0,4,-9\n0,-5,-4,0,-8\n-4,6,9,8,0\n";

    #[test]
    fn additive_csv_loads() {
        let f = parse_csv(REFERENCE5_CSV, Scale::Additive, false).unwrap();
        assert_eq!(f.matrix.dim(), 5);
        let loaded = load(f, &Tolerances::default()).unwrap();
        assert_eq!(loaded.additive.get(4, 2), 9.0);
    }

    #[test]
    fn json_loads() {
        let f = parse_json(r#"{"scale":"multiplicative","matrix":[[1,2],[0.5,1]]}"#).unwrap();
        assert_eq!(f.scale, Scale::Multiplicative);
        let loaded = load(f, &Tolerances::default()).unwrap();
        assert!((loaded.additive.get(0, 1) - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn json_ignores_extra_keys() {
        let f = parse_json(r#"{"scale":"additive","matrix":[[0,1],[-1,0]],"distance":3}"#);
        assert!(f.is_ok());
    }

    #[test]
    fn ragged_csv_reports_location() {
        let err = parse_csv("1,2,3\n0.5,1\n", Scale::Multiplicative, false).unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_number_reports_location() {
        let err = parse_csv("1,2\n0.5,x\n", Scale::Multiplicative, false).unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (2, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn non_square_csv() {
        let err = parse_csv("1,2\n", Scale::Multiplicative, false).unwrap_err();
        assert!(matches!(err, CliError::Parse { .. }));
    }

    #[test]
    fn names_header() {
        let f = parse_csv("a,b\n1,2\n0.5,1\n", Scale::Multiplicative, true).unwrap();
        assert_eq!(f.names.as_deref(), Some(&["a".to_string(), "b".to_string()][..]));
        let dup = parse_csv("a,a\n1,2\n0.5,1\n", Scale::Multiplicative, true).unwrap();
        assert!(matches!(
            load(dup, &Tolerances::default()),
            Err(CliError::Names(_))
        ));
    }

    #[test]
    fn validation_errors_are_forwarded() {
        let f = parse_csv("1,2\n0.6,1\n", Scale::Multiplicative, false).unwrap();
        let err = load(f, &Tolerances::default()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("(1, 2)"));
    }
}
