use std::fs;
use std::io::Read;
use std::path::Path;

use serde_json::Value;

use g2star_core::g2core::{family, standard_gram, FamilyName};
use g2star_core::geometry::MetricLieAlgebra;
use g2star_core::liealg::LieAlgebraData;
use g2star_core::linalg::{Matrix, Subspace};
use g2star_core::scalars::QSqrt2;
use g2star_core::{Error, Result};

/// Reads a file, or stdin for `-` or no path.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed JSON: {e}")))
}

pub fn scalar(token: &str) -> Result<QSqrt2> {
    QSqrt2::parse(token)
}

fn matrix_from(v: &Value, what: &str) -> Result<Matrix<QSqrt2>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Input(format!("{what} must be an array of rows")))?;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let r = r
            .as_array()
            .ok_or_else(|| Error::Input(format!("{what} row {r} is not an array")))?;
        let parsed = r
            .iter()
            .map(|x| match x {
                Value::String(s) => scalar(s),
                Value::Number(n) => scalar(&n.to_string()),
                _ => Err(Error::Input(format!(
                    "{what} entry {x} is not a scalar token"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(parsed);
    }
    let n = out.len();
    if n == 0 || out.iter().any(|r| r.len() != n) {
        return Err(Error::Input(format!(
            "{what} must be a nonempty square matrix"
        )));
    }
    Ok(Matrix::from_rows(out))
}

/// `[[...], ...]` or `{"gram": [[...], ...]}`.
pub fn gram_file(path: &Path) -> Result<Matrix<QSqrt2>> {
    let v = parse_json(&read_text(Some(path))?)?;
    match v.get("gram") {
        Some(g) => matrix_from(g, "gram"),
        None => matrix_from(&v, "gram"),
    }
}

pub fn lie_algebra(path: Option<&Path>) -> Result<LieAlgebraData<QSqrt2>> {
    LieAlgebraData::from_json(&parse_json(&read_text(path)?)?)
}

/// Brackets plus the metric from `--gram`, defaulting to the split form
/// in dimension 7.
pub fn metric_algebra(path: Option<&Path>, gram: Option<&Path>) -> Result<MetricLieAlgebra> {
    let lie = lie_algebra(path)?;
    let g = match gram {
        Some(p) => gram_file(p)?,
        None if lie.dim() == 7 => standard_gram(),
        None => {
            return Err(Error::Input(format!(
                "no default metric in dimension {}; pass --gram",
                lie.dim()
            )))
        }
    };
    MetricLieAlgebra::new(lie, g)
}

/// A subspace of 7x7 matrices from a family token or a file
/// `{"dim": 7, "matrices": [[[...]]]}`.
pub fn matrix_span(token: Option<&str>, path: Option<&Path>) -> Result<Subspace> {
    if let Some(t) = token {
        let name: FamilyName = t.parse()?;
        return Ok(family(name).clone());
    }
    let v = parse_json(&read_text(path)?)?;
    let dim = v.get("dim").and_then(Value::as_u64).unwrap_or(7) as usize;
    if dim != 7 {
        return Err(Error::DimensionMismatch {
            expected: 7,
            found: dim,
        });
    }
    let mats = v
        .get("matrices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Input("missing array `matrices`".into()))?;
    let mut out = Subspace::zero(49);
    for m in mats {
        let m = matrix_from(m, "matrix")?;
        if m.rows() != 7 {
            return Err(Error::DimensionMismatch {
                expected: 7,
                found: m.rows(),
            });
        }
        out.insert(m.into_flat());
    }
    Ok(out)
}
