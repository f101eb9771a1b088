//! Parsing of the JSON input documents, with JSON-path error locations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;
use std::fmt;
use std::str::FromStr;
use tring::lattice::IntMatrix;
use tring::TripleData;

/// Parse failure with the JSON path of the offending value.
#[derive(Debug)]
pub struct ParseError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(path: &str, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        path: path.to_string(),
        message: message.into(),
    })
}

fn root(text: &str) -> Result<Value, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError {
        path: String::new(),
        message: format!("invalid JSON: {e}"),
    })
}

/// An exact integer at `path`: a JSON integer literal of any size.
fn integer(value: &Value, path: &str) -> Result<BigInt, ParseError> {
    let Value::Number(n) = value else {
        return err(path, "expected an integer");
    };
    match BigInt::from_str(&n.to_string()) {
        Ok(x) => Ok(x),
        Err(_) => err(path, "expected an integer, not a float"),
    }
}

/// An exact rational at `path`: an integer literal or a `"p/q"` string.
fn rational(value: &Value, path: &str) -> Result<BigRational, ParseError> {
    match value {
        Value::Number(_) => Ok(BigRational::from(integer(value, path)?)),
        Value::String(s) => {
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (p.trim(), q.trim()),
                None => (s.trim(), "1"),
            };
            let numer = BigInt::from_str(p);
            let denom = BigInt::from_str(q);
            match (numer, denom) {
                (Ok(numer), Ok(denom)) if !denom.is_zero() => Ok(BigRational::new(numer, denom)),
                (_, Ok(denom)) if denom.is_zero() => err(path, "zero denominator"),
                _ => err(path, "expected \"p/q\" with integer parts"),
            }
        }
        _ => err(path, "expected an integer or a \"p/q\" string"),
    }
}

fn nonneg_u64(value: &Value, path: &str) -> Result<u64, ParseError> {
    let x = integer(value, path)?;
    u64::try_from(x).map_err(|_| ParseError {
        path: path.to_string(),
        message: "expected a nonnegative integer".into(),
    })
}

fn array<'v>(value: &'v Value, path: &str) -> Result<&'v [Value], ParseError> {
    match value {
        Value::Array(items) => Ok(items),
        _ => err(path, "expected an array"),
    }
}

/// Parses a defining datum document: an object with keys `A`, `n`, `L`.
pub fn parse_triple(text: &str) -> Result<TripleData, ParseError> {
    let doc = root(text)?;
    let Value::Object(map) = &doc else {
        return err("", "expected a JSON object with keys A, n, L");
    };
    let field = |key: &str| -> Result<&Value, ParseError> {
        map.get(key)
            .ok_or_else(|| ParseError {
                path: key.to_string(),
                message: "missing key".into(),
            })
    };

    let mut pairs = Vec::new();
    for (i, entry) in array(field("A")?, "A")?.iter().enumerate() {
        let path = format!("A[{i}]");
        let pair = array(entry, &path)?;
        if pair.len() != 2 {
            return err(&path, "expected a [b, c] pair");
        }
        let b = rational(&pair[0], &format!("{path}[0]"))?;
        let c = rational(&pair[1], &format!("{path}[1]"))?;
        pairs.push((b, c));
    }

    let mut block_sizes = Vec::new();
    for (i, entry) in array(field("n")?, "n")?.iter().enumerate() {
        block_sizes.push(nonneg_u64(entry, &format!("n[{i}]"))? as usize);
    }

    let mut exponents = Vec::new();
    for (i, row) in array(field("L")?, "L")?.iter().enumerate() {
        let path = format!("L[{i}]");
        let mut out = Vec::new();
        for (j, entry) in array(row, &path)?.iter().enumerate() {
            out.push(nonneg_u64(entry, &format!("{path}[{j}]"))?);
        }
        exponents.push(out);
    }

    Ok(TripleData::new(pairs, block_sizes, exponents))
}

/// Parses an integer matrix file: a JSON array of equal-length rows.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let doc = root(text)?;
    let rows = array(&doc, "")?;
    let mut entries: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let path = format!("[{i}]");
        let mut out = Vec::new();
        for (j, entry) in array(row, &path)?.iter().enumerate() {
            out.push(integer(entry, &format!("{path}[{j}]"))?);
        }
        entries.push(out);
    }
    let ncols = entries.first().map_or(0, |r| r.len());
    if entries.iter().any(|r| r.len() != ncols) {
        return err("", "ragged matrix rows");
    }
    Ok(IntMatrix::from_fn(entries.len(), ncols, |r, c| {
        entries[r][c].clone()
    }))
}
