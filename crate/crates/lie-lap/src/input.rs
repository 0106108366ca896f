//! Parsing of groups, tensors and Gram matrices from flags and JSON files.
//!
//! Matrix arguments accept inline JSON (`[[1,0],[0,"1/2"]]`), the keyword
//! `identity`, or a path to a JSON file holding either a bare matrix or an
//! object with a `tensor` or `gram` field (e.g. a witness report).

use std::fs;
use std::path::Path;

use lie_lap_core::algebra::{build_group_spec, metric_to_tensor, CentralElement, GroupSpec, MetricSpec, SymTensor};
use lie_lap_core::ratmat::{parse_rational, Rat, RatMatrix};
use num_bigint::BigInt;
use serde_json::Value;

use crate::error::CliError;

/// Reads `arg` as inline JSON if it looks like JSON, else as a file path.
pub fn read_json_source(arg: &str) -> Result<Value, CliError> {
    let t = arg.trim();
    if t.starts_with('[') || t.starts_with('{') {
        return serde_json::from_str(t).map_err(|source| CliError::Json { what: "inline argument".into(), source });
    }
    read_json_file(Path::new(t))
}

pub fn read_json_file(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { what: path.display().to_string(), source })
}

/// An exact rational from a JSON integer or a `"p/q"` string. Floats are
/// rejected.
pub fn parse_rat_value(v: &Value) -> Result<Rat, CliError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(BigInt::from(i)))
            } else if let Some(u) = n.as_u64() {
                Ok(Rat::from_integer(BigInt::from(u)))
            } else {
                Err(CliError::usage(format!("non-integer number {n}; write rationals as \"p/q\" strings")))
            }
        }
        Value::String(s) => Ok(parse_rational(s)?),
        other => Err(CliError::usage(format!("expected a rational, found {other}"))),
    }
}

pub fn parse_matrix(v: &Value) -> Result<RatMatrix, CliError> {
    let rows = v.as_array().ok_or_else(|| CliError::usage("matrix must be a JSON array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| CliError::usage("matrix rows must be arrays"))?
                .iter()
                .map(parse_rat_value)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatMatrix::from_rows(rows)?)
}

/// Matrix data given either as a tensor or as a Gram matrix.
#[derive(Clone, Debug)]
pub enum MetricInput {
    Tensor(SymTensor),
    Gram(RatMatrix),
}

/// Parses a `--tensor` argument. JSON objects with a `gram` field are
/// treated as metrics.
pub fn load_tensor_arg(arg: &str, dim: usize) -> Result<SymTensor, CliError> {
    if arg.trim().eq_ignore_ascii_case("identity") {
        return Ok(SymTensor::identity(dim));
    }
    let v = read_json_source(arg)?;
    let input = match &v {
        Value::Object(map) => {
            if let Some(t) = map.get("tensor") {
                MetricInput::Tensor(SymTensor::new(parse_matrix(t)?)?)
            } else if let Some(g) = map.get("gram") {
                MetricInput::Gram(parse_matrix(g)?)
            } else {
                return Err(CliError::usage("JSON object needs a \"tensor\" or \"gram\" field"));
            }
        }
        _ => MetricInput::Tensor(SymTensor::new(parse_matrix(&v)?)?),
    };
    finish(input, dim)
}

/// Parses a `--gram` argument into the tensor `G⁻¹`.
pub fn load_gram_arg(arg: &str, dim: usize) -> Result<SymTensor, CliError> {
    if arg.trim().eq_ignore_ascii_case("identity") {
        return Ok(SymTensor::identity(dim));
    }
    let v = read_json_source(arg)?;
    let m = match &v {
        Value::Object(map) => parse_matrix(map.get("gram").ok_or_else(|| CliError::usage("missing \"gram\" field"))?)?,
        _ => parse_matrix(&v)?,
    };
    finish(MetricInput::Gram(m), dim)
}

fn finish(input: MetricInput, dim: usize) -> Result<SymTensor, CliError> {
    let s = match input {
        MetricInput::Tensor(s) => s,
        MetricInput::Gram(g) => {
            if g.rows() != dim {
                return Err(CliError::usage(format!("Gram matrix has size {}, group dimension is {dim}", g.rows())));
            }
            metric_to_tensor(&MetricSpec::new(g)?)?
        }
    };
    if s.dim() != dim {
        return Err(CliError::usage(format!("tensor has size {}, group dimension is {dim}", s.dim())));
    }
    Ok(s)
}

/// The `group` field of a report file, if present.
pub fn group_from_file(arg: &str) -> Result<Option<GroupSpec>, CliError> {
    let t = arg.trim();
    if t.eq_ignore_ascii_case("identity") {
        return Ok(None);
    }
    match read_json_source(t)? {
        Value::Object(map) => map.get("group").map(parse_group_value).transpose(),
        _ => Ok(None),
    }
}

/// A preset name (`su2`, `so3`, `su2xt2`, ...) or a JSON group description
/// (inline or file).
pub fn load_group_arg(arg: &str) -> Result<GroupSpec, CliError> {
    let t = arg.trim();
    if !(t.starts_with('{') || Path::new(t).is_file()) {
        return Ok(GroupSpec::preset(t)?);
    }
    parse_group_value(&read_json_source(t)?)
}

/// `"so3"` or `{"su2_factors": k, "torus_rank": n, "central": [{"signs": [...], "torus": [...]}]}`.
pub fn parse_group_value(v: &Value) -> Result<GroupSpec, CliError> {
    match v {
        Value::String(s) => Ok(GroupSpec::preset(s)?),
        Value::Object(map) => {
            let get_usize = |key: &str| -> Result<usize, CliError> {
                map.get(key)
                    .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| CliError::usage(format!("{key} must be a nonnegative integer"))))
                    .unwrap_or(Ok(0))
            };
            let k = get_usize("su2_factors")?;
            let n = get_usize("torus_rank")?;
            let mut central = Vec::new();
            if let Some(list) = map.get("central") {
                for g in list.as_array().ok_or_else(|| CliError::usage("central must be an array"))? {
                    let signs = g
                        .get("signs")
                        .and_then(Value::as_array)
                        .map(|a| {
                            a.iter()
                                .map(|s| match s.as_i64() {
                                    Some(1) => Ok(1i8),
                                    Some(-1) => Ok(-1i8),
                                    _ => Err(CliError::usage("signs must be +1 or -1")),
                                })
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .transpose()?
                        .unwrap_or_else(|| vec![1; k]);
                    let torus = g
                        .get("torus")
                        .and_then(Value::as_array)
                        .map(|a| a.iter().map(parse_rat_value).collect::<Result<Vec<_>, _>>())
                        .transpose()?
                        .unwrap_or_else(|| vec![Rat::from_integer(BigInt::from(0)); n]);
                    central.push(CentralElement::new(signs, torus)?);
                }
            }
            Ok(build_group_spec(k, n, central)?)
        }
        other => Err(CliError::usage(format!("cannot read a group from {other}"))),
    }
}

pub fn parse_cutoff(s: &str) -> Result<Rat, CliError> {
    Ok(parse_rational(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lie_lap_core::ratmat::rat;

    #[test]
    fn inline_matrices() {
        let s = load_tensor_arg("[[1, \"1/2\"], [\"1/2\", 2]]", 2).unwrap();
        assert_eq!(s.get(0, 1), &rat(1, 2));
        assert!(load_tensor_arg("[[1.5]]", 1).is_err());
        let g = load_gram_arg("[[2]]", 1).unwrap();
        assert_eq!(g.get(0, 0), &rat(1, 2));
        assert!(load_gram_arg("[[1, 2], [2, 1]]", 2).is_err());
    }

    #[test]
    fn groups() {
        assert_eq!(load_group_arg("so3").unwrap(), GroupSpec::preset("so3").unwrap());
        let g = load_group_arg(r#"{"su2_factors": 1, "torus_rank": 1, "central": [{"signs": [-1], "torus": ["1/2"]}]}"#)
            .unwrap();
        assert_eq!(g, GroupSpec::preset("u2").unwrap());
        assert!(load_group_arg("sl2").is_err());
    }
}
