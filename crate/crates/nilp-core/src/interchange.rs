//! The algebra interchange format and its friends.
//!
//! An algebra document is JSON of the shape
//!
//! ```json
//! { "name": "h3", "dim": 3,
//!   "brackets": [ { "i": 1, "j": 2, "rhs": [ { "k": 3, "c": "1" } ] } ] }
//! ```
//!
//! with 1-indexed `i < j`, coefficients as decimal-free `"p/q"` or `"p"`
//! strings, and unlisted pairs equal to zero. Parsing is strict: out-of-range
//! indices, `i ≥ j`, duplicate pairs, malformed rationals and unknown fields
//! are all rejected. Skew 2-cochains use the same term syntax under an
//! `"values"` key with an `"args"` pair.

use crate::cochain::AlternatingCochain;
use crate::lie::StructureTensor;
use crate::matrix::ExactMatrix;
use crate::rational::{format_rational, parse_rational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InterchangeError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bracket pair ({i},{j}) must satisfy 1 <= i < j <= dim")]
    BadPair { i: usize, j: usize },
    #[error("duplicate bracket pair ({i},{j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("target index {k} out of range 1..={dim}")]
    BadTarget { k: usize, dim: usize },
    #[error("zero dimension")]
    ZeroDim,
    #[error("bad rational coefficient: {0}")]
    BadRational(#[from] crate::rational::RationalParseError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    k: usize,
    c: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    i: usize,
    j: usize,
    rhs: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    brackets: Vec<BracketDoc>,
}

fn terms_to_vector(dim: usize, terms: &[TermDoc]) -> Result<Vec<Rational>, InterchangeError> {
    let mut value = vec![Rational::zero(); dim];
    for term in terms {
        if term.k < 1 || term.k > dim {
            return Err(InterchangeError::BadTarget { k: term.k, dim });
        }
        value[term.k - 1] += parse_rational(&term.c)?;
    }
    Ok(value)
}

fn vector_to_terms(value: &[Rational]) -> Vec<TermDoc> {
    value
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| TermDoc {
            k: k + 1,
            c: format_rational(c),
        })
        .collect()
}

fn algebra_from_doc(doc: &AlgebraDoc) -> Result<StructureTensor, InterchangeError> {
    if doc.dim == 0 {
        return Err(InterchangeError::ZeroDim);
    }
    let mut tensor = StructureTensor::zero(doc.dim);
    let mut seen = std::collections::BTreeSet::new();
    for bracket in &doc.brackets {
        let (i, j) = (bracket.i, bracket.j);
        if i < 1 || i >= j || j > doc.dim {
            return Err(InterchangeError::BadPair { i, j });
        }
        if !seen.insert((i, j)) {
            return Err(InterchangeError::DuplicatePair { i, j });
        }
        tensor.set_bracket(i - 1, j - 1, terms_to_vector(doc.dim, &bracket.rhs)?);
    }
    Ok(tensor)
}

/// Parse one algebra document; returns the optional name and the tensor.
pub fn parse_algebra(json: &str) -> Result<(Option<String>, StructureTensor), InterchangeError> {
    let doc: AlgebraDoc = serde_json::from_str(json)?;
    let tensor = algebra_from_doc(&doc)?;
    Ok((doc.name, tensor))
}

/// Parse a JSON array of algebra documents (the catalog file layout).
pub fn parse_algebra_list(json: &str) -> Result<Vec<(Option<String>, StructureTensor)>, InterchangeError> {
    let docs: Vec<AlgebraDoc> = serde_json::from_str(json)?;
    docs.iter()
        .map(|doc| Ok((doc.name.clone(), algebra_from_doc(doc)?)))
        .collect()
}

/// Serialise an algebra in the interchange format.
pub fn algebra_to_json(name: Option<&str>, tensor: &StructureTensor) -> String {
    let doc = AlgebraDoc {
        name: name.map(str::to_owned),
        dim: tensor.dim(),
        brackets: tensor
            .brackets()
            .map(|(&(i, j), value)| BracketDoc {
                i: i + 1,
                j: j + 1,
                rhs: vector_to_terms(value),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serialisation cannot fail")
}

// ---- skew 2-cochains --------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CochainValueDoc {
    args: Vec<usize>,
    rhs: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CochainDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    degree: usize,
    values: Vec<CochainValueDoc>,
}

/// Parse a skew cochain document: `args` are 1-indexed strictly increasing
/// tuples of length `degree`.
pub fn parse_cochain(json: &str) -> Result<AlternatingCochain, InterchangeError> {
    let doc: CochainDoc = serde_json::from_str(json)?;
    if doc.dim == 0 {
        return Err(InterchangeError::ZeroDim);
    }
    if doc.degree < 1 || doc.degree > doc.dim {
        return Err(InterchangeError::BadTarget {
            k: doc.degree,
            dim: doc.dim,
        });
    }
    let mut cochain = AlternatingCochain::zero(doc.degree, doc.dim);
    let mut seen = std::collections::BTreeSet::new();
    for entry in &doc.values {
        let ok_len = entry.args.len() == doc.degree;
        let ok_order = entry.args.windows(2).all(|w| w[0] < w[1]);
        let ok_range = entry
            .args
            .iter()
            .all(|&a| (1..=doc.dim).contains(&a));
        if !(ok_len && ok_order && ok_range) {
            return Err(InterchangeError::BadPair {
                i: entry.args.first().copied().unwrap_or(0),
                j: entry.args.last().copied().unwrap_or(0),
            });
        }
        if !seen.insert(entry.args.clone()) {
            return Err(InterchangeError::DuplicatePair {
                i: entry.args[0],
                j: entry.args[doc.degree - 1],
            });
        }
        let tuple: Vec<usize> = entry.args.iter().map(|&a| a - 1).collect();
        cochain.set(tuple, terms_to_vector(doc.dim, &entry.rhs)?);
    }
    Ok(cochain)
}

pub fn cochain_to_json(name: Option<&str>, cochain: &AlternatingCochain) -> String {
    let doc = CochainDoc {
        name: name.map(str::to_owned),
        dim: cochain.dim(),
        degree: cochain.degree(),
        values: cochain
            .support()
            .map(|(tuple, value)| CochainValueDoc {
                args: tuple.iter().map(|&i| i + 1).collect(),
                rhs: vector_to_terms(value),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serialisation cannot fail")
}

/// Serialise a matrix as rows of rational strings.
pub fn matrix_to_json_value(m: &ExactMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect();
    serde_json::json!(rows)
}
