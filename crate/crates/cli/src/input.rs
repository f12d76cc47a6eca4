//! Turning command-line arguments into core values.

use std::fs;
use std::io::Read;
use std::path::Path;

use kgen_core::cover::{EpsilonJson, EpsilonTable, LiftClass};
use kgen_core::tree::to_rf_matrix;
use kgen_core::{Error, Matrix2, MatrixJson, ParseError, QPoly, Ring, TreeVertex};

use crate::Failure;

/// Reads `-` as stdin, an existing path as a file, anything else literally.
pub fn text_arg(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        return Ok(s.trim().to_string());
    }
    if !arg.trim_start().starts_with('[') && Path::new(arg).is_file() {
        return fs::read_to_string(arg).map(|s| s.trim().to_string()).map_err(|e| Failure::usage(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

/// Error text with a caret under the failing byte.
pub fn describe_parse(input: &str, e: &ParseError) -> String {
    let pos = e.position().min(input.len());
    let prefix_width = input[..pos].chars().count();
    format!("{e}\n  {input}\n  {}^", " ".repeat(prefix_width))
}

pub fn core_failure(input: &str, e: Error) -> Failure {
    match e {
        Error::Parse(pe) => Failure::usage(describe_parse(input, &pe)),
        other => Failure::usage(other.to_string()),
    }
}

pub fn matrix_arg(arg: &str) -> Result<Matrix2<QPoly>, Failure> {
    let text = text_arg(arg)?;
    if text.starts_with('{') {
        let json: MatrixJson = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("matrix JSON: {e}")))?;
        return Matrix2::from_json(&json, Ring::Univariate).map_err(|e| Failure::usage(e.to_string()));
    }
    Matrix2::parse_literal(&text, Ring::Univariate).map_err(|e| core_failure(&text, e))
}

/// `base`, `adjacent`, or a matrix whose column lattice names the vertex.
pub fn vertex_arg(arg: &str) -> Result<TreeVertex, Failure> {
    match arg {
        "base" => Ok(TreeVertex::base()),
        "adjacent" => Ok(TreeVertex::adjacent()),
        _ => {
            let m = matrix_arg(arg)?;
            let rf = to_rf_matrix(&m).map_err(|e| Failure::usage(e.to_string()))?;
            TreeVertex::canonical(&rf).map_err(|e| Failure::usage(format!("{arg}: {e}")))
        }
    }
}

/// `canonical-C` or a lift JSON document.
pub fn lift_arg(arg: &str, genus: u32) -> Result<LiftClass, Failure> {
    if arg == "canonical-C" {
        return LiftClass::canonical(genus).map_err(|e| Failure::usage(e.to_string()));
    }
    let text = text_arg(arg)?;
    LiftClass::from_json_str(&text).map_err(|e| Failure::usage(format!("lift: {e}")))
}

pub fn eps_arg(path: Option<&str>, seed: Option<u64>, genus: u32) -> Result<EpsilonTable, Failure> {
    match (path, seed) {
        (Some(p), _) => {
            let text = text_arg(p)?;
            let json: EpsilonJson = serde_json::from_str(&text).map_err(|e| Failure::usage(format!("epsilon table: {e}")))?;
            EpsilonTable::from_json(&json).map_err(|e| Failure::usage(e.to_string()))
        }
        (None, Some(s)) => {
            use rand::SeedableRng;
            Ok(EpsilonTable::random_skew(genus, &mut rand::rngs::StdRng::seed_from_u64(s)))
        }
        (None, None) => Ok(EpsilonTable::zero()),
    }
}
