//! JSON encodings of sums.
//!
//! A path sum is `[{"coeff":1,"path":{...}}]` and a tensor sum is
//! `[{"coeff":1,"left":"unit","right":{...}}]`, both in canonical order.

use serde::{Deserialize, Serialize};

use crate::coalgebra::{Slot, TensorSum};
use crate::error::{Error, Result};
use crate::path::MDyckPath;
use crate::sum::Coeff;
use crate::trees::TreeSum;
use crate::PathSum;

#[derive(Serialize, Deserialize)]
struct PathTerm {
    coeff: Coeff,
    path: MDyckPath,
}

#[derive(Serialize, Deserialize)]
struct TensorTerm {
    coeff: Coeff,
    left: Slot,
    right: Slot,
}

#[derive(Serialize, Deserialize)]
struct TreeTerm {
    coeff: Coeff,
    tree: crate::trees::ColoredTree,
}

pub fn path_sum_to_json(x: &PathSum) -> String {
    let terms: Vec<PathTerm> = x.iter().map(|(p, c)| PathTerm { coeff: c, path: p.clone() }).collect();
    serde_json::to_string(&terms).expect("serializable")
}

pub fn path_sum_from_json(v: &str) -> Result<PathSum> {
    let terms: Vec<PathTerm> = serde_json::from_str(v).map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(terms.into_iter().map(|t| (t.path, t.coeff)).collect())
}

pub fn tensor_sum_to_json(x: &TensorSum) -> String {
    let terms: Vec<TensorTerm> = x
        .iter()
        .map(|((l, r), c)| TensorTerm { coeff: c, left: l.clone(), right: r.clone() })
        .collect();
    serde_json::to_string(&terms).expect("serializable")
}

pub fn tensor_sum_from_json(v: &str) -> Result<TensorSum> {
    let terms: Vec<TensorTerm> = serde_json::from_str(v).map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(terms.into_iter().map(|t| ((t.left, t.right), t.coeff)).collect())
}

pub fn tree_sum_to_json(x: &TreeSum) -> String {
    let terms: Vec<TreeTerm> = x.iter().map(|(t, c)| TreeTerm { coeff: c, tree: t.clone() }).collect();
    serde_json::to_string(&terms).expect("serializable")
}

pub fn path_from_json(v: &str) -> Result<MDyckPath> {
    serde_json::from_str(v).map_err(|e| Error::Invalid(e.to_string()))
}
