//! Finite vertex sets with opaque string labels.
//!
//! Every model in the crate is indexed by a nonempty finite set of labels.
//! Labels are kept sorted so that enumeration and tie-breaking are
//! deterministic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Validates a list of labels and returns it sorted.
pub fn vertex_set<I, S>(labels: I) -> Result<Vec<String>>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut seen = BTreeSet::new();
    for label in labels {
        let label = label.into();
        check_label(&label)?;
        if !seen.insert(label.clone()) {
            return Err(Error::DuplicateVertex(label));
        }
    }
    if seen.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    Ok(seen.into_iter().collect())
}

/// Labels must be nonempty.
pub fn check_label(label: &str) -> Result<()> {
    if label.is_empty() {
        return Err(Error::InvalidInput("empty vertex label".into()));
    }
    Ok(())
}

/// Leaves of W-trees may not start with `{`, which is reserved for the
/// cluster ids of inner vertices.
pub fn check_leaf(label: &str) -> Result<()> {
    check_label(label)?;
    if label.starts_with('{') {
        return Err(Error::InvalidInput(format!(
            "leaf label `{label}` may not start with '{{'"
        )));
    }
    Ok(())
}

/// `A[B/a]`: the set `A` with `a` replaced by `B`, sorted.
pub fn substitute(outer: &[String], at: &str, inner: &[String]) -> Result<Vec<String>> {
    if !outer.iter().any(|v| v == at) {
        return Err(Error::UnknownVertex(at.to_string()));
    }
    let mut out: BTreeSet<String> = outer.iter().filter(|v| *v != at).cloned().collect();
    for b in inner {
        if !out.insert(b.clone()) {
            return Err(Error::VertexClash(b.clone()));
        }
    }
    Ok(out.into_iter().collect())
}

/// Position of `label` in a sorted vertex list.
pub fn index_of(vertices: &[String], label: &str) -> Result<usize> {
    vertices
        .binary_search_by(|v| v.as_str().cmp(label))
        .map_err(|_| Error::UnknownVertex(label.to_string()))
}

/// Default labels `a, b, c, ...` for a set of size `k`.
pub fn default_labels(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("v{i}")
            }
        })
        .collect()
}

/// All permutations of `items`, in lexicographic order of index sequences.
pub fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..items.len()).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        // next permutation
        let Some(i) = (1..idx.len()).rev().find(|&i| idx[i - 1] < idx[i]) else {
            break;
        };
        let j = (i..idx.len()).rev().find(|&j| idx[j] > idx[i - 1]).unwrap();
        idx.swap(i - 1, j);
        idx[i..].reverse();
    }
    out
}
