//! Cayley table files.
//!
//! Format: the first line holds the order `N`, followed by `N` lines of `N`
//! whitespace-separated 0-based indices where row `i`, column `j` is `i*j`.
//! Element 0 must be the identity.

use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 10_000;

pub fn read_table_file(path: &Path) -> Result<(usize, Vec<u32>)> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text).map_err(|e| match e {
        Error::NotAGroup(m) => Error::NotAGroup(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn parse_table(text: &str) -> Result<(usize, Vec<u32>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::NotAGroup("empty table file".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::NotAGroup(format!("bad order line {header:?}")))?;
    if n == 0 {
        return Err(Error::NotAGroup("order must be positive".into()));
    }
    if n as u128 > crate::group::MAX_ORDER {
        return Err(Error::OrderTooLarge(n as u128));
    }
    let mut flat = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::NotAGroup(format!("missing row {row}")))?;
        let start = flat.len();
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::NotAGroup(format!("row {row}: bad entry {tok:?}")))?;
            if v >= n {
                return Err(Error::NotAGroup(format!("row {row}: entry {v} out of range")));
            }
            flat.push(v as u32);
        }
        if flat.len() - start != n {
            return Err(Error::NotAGroup(format!(
                "row {row} has {} entries, expected {n}",
                flat.len() - start
            )));
        }
    }
    if lines.next().is_some() {
        return Err(Error::NotAGroup("trailing rows after the table".into()));
    }
    validate_table(n, &flat, true)?;
    Ok((n, flat))
}

/// Checks that a flattened `n x n` table is a group law. With
/// `identity_first`, element 0 must be the identity.
pub fn validate_table(n: usize, flat: &[u32], identity_first: bool) -> Result<()> {
    if flat.len() != n * n {
        return Err(Error::NotAGroup("table has the wrong size".into()));
    }
    let at = |i: usize, j: usize| flat[i * n + j] as usize;
    let mut seen = vec![false; n];
    for i in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for j in 0..n {
            let v = at(i, j);
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAGroup(format!("row {i} is not a permutation")));
            }
        }
    }
    for j in 0..n {
        seen.iter_mut().for_each(|s| *s = false);
        for i in 0..n {
            if std::mem::replace(&mut seen[at(i, j)], true) {
                return Err(Error::NotAGroup(format!("column {j} is not a permutation")));
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|j| at(e, j) == j && at(j, e) == j))
        .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
    if identity_first && identity != 0 {
        return Err(Error::NotAGroup(format!(
            "element 0 must be the identity, found identity at {identity}"
        )));
    }
    let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
    let fail = |a, b, c| Error::NotAGroup(format!("not associative at ({a},{b},{c})"));
    if n <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !assoc(a, b, c) {
                        return Err(fail(a, b, c));
                    }
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed_7ab1e);
        for _ in 0..SAMPLED_TRIPLES {
            let (a, b, c) = (
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            );
            if !assoc(a, b, c) {
                return Err(fail(a, b, c));
            }
        }
    }
    Ok(())
}
