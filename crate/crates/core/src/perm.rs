//! Permutations, standardization, pattern containment and the symmetries of
//! the square.
//!
//! Values are stored 1-based as `u8`, so permutations of length up to 255 are
//! supported. The empty permutation is a legal value.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest supported permutation.
pub const MAX_LEN: usize = u8::MAX as usize;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Builds a permutation from 1-based entries, checking that they form a
    /// bijection onto `1..=n`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        let n = entries.len();
        if n > MAX_LEN {
            return Err(Error::InvalidInput(format!(
                "permutation of length {n} exceeds the maximum {MAX_LEN}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(Error::InvalidInput(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidInput(format!("repeated value {v}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    /// Caller guarantees the bijection invariant.
    pub(crate) fn from_entries_unchecked(entries: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u8> {
        self.0
    }

    /// True iff some subsequence of `self` is order isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        contains_pattern(&self.0, &pattern.0)
    }

    /// True iff `self` contains no element of `basis`.
    pub fn avoids(&self, basis: &Basis) -> bool {
        basis.elements().iter().all(|b| !self.contains(b))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u8;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn apply(&self, sym: Symmetry) -> Self {
        let mut p = if sym.inverse {
            self.inverse()
        } else {
            self.clone()
        };
        if sym.reverse {
            p = p.reverse();
        }
        if sym.complement {
            p = p.complement();
        }
        p
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.len() as u8;
        let mut entries = self.0.clone();
        entries.extend(other.0.iter().map(|&v| v + shift));
        Permutation(entries)
    }

    /// Deletes the entry at `index` and standardizes the remainder.
    pub fn delete(&self, index: usize) -> Self {
        let removed = self.0[index];
        Permutation(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != index)
                .map(|(_, &v)| if v > removed { v - 1 } else { v })
                .collect(),
        )
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n as u8).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join("-"))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`"4321"`) or a dash-separated list
    /// (`"10-3-2-1-..."`). The empty string is the empty permutation.
    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s, 0)
    }
}

fn parse_permutation(s: &str, offset: usize) -> Result<Permutation> {
    let mut entries = Vec::new();
    if s.contains('-') {
        let mut pos = offset;
        for token in s.split('-') {
            if token.is_empty() {
                return Err(Error::Parse {
                    position: pos,
                    message: "empty entry in dash-separated permutation".into(),
                });
            }
            let v: usize = token.parse().map_err(|_| Error::Parse {
                position: pos,
                message: format!("`{token}` is not a positive integer"),
            })?;
            if v == 0 || v > MAX_LEN {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("value {v} out of range"),
                });
            }
            entries.push(v as u8);
            pos += token.len() + 1;
        }
    } else {
        for (i, ch) in s.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) if d >= 1 => entries.push(d as u8),
                _ => {
                    return Err(Error::Parse {
                        position: offset + i,
                        message: format!("unexpected character `{ch}`"),
                    })
                }
            }
        }
    }
    Permutation::new(entries).map_err(|e| Error::Parse {
        position: offset,
        message: e.to_string(),
    })
}

/// Iterator over `S_n` in lexicographic order.
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation(current))
    }
}

fn next_lexicographic(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Returns the permutation order isomorphic to `w`.
pub fn standardize<T: Ord>(w: &[T]) -> Result<Permutation> {
    if w.len() > MAX_LEN {
        return Err(Error::InvalidInput(format!(
            "sequence of length {} exceeds the maximum {MAX_LEN}",
            w.len()
        )));
    }
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by(|&a, &b| w[a].cmp(&w[b]));
    if order.windows(2).any(|p| w[p[0]] == w[p[1]]) {
        return Err(Error::InvalidInput(
            "cannot standardize a sequence with repeated values".into(),
        ));
    }
    let mut entries = vec![0u8; w.len()];
    for (rank, &idx) in order.iter().enumerate() {
        entries[idx] = (rank + 1) as u8;
    }
    Ok(Permutation(entries))
}

/// Containment test on raw slices of distinct values. `pattern` must be a
/// permutation; `text` may hold any distinct values.
pub(crate) fn contains_pattern(text: &[u8], pattern: &[u8]) -> bool {
    let k = pattern.len();
    if k == 0 {
        return true;
    }
    if k > text.len() {
        return false;
    }
    // For each pattern position, the earlier positions holding the nearest
    // smaller and nearest larger pattern values. Checking only these two
    // neighbours is enough to keep the partial match order isomorphic.
    let mut below = vec![None; k];
    let mut above = vec![None; k];
    for j in 0..k {
        for l in 0..j {
            if pattern[l] < pattern[j] {
                if below[j].is_none_or(|b: usize| pattern[l] > pattern[b]) {
                    below[j] = Some(l);
                }
            } else if above[j].is_none_or(|a: usize| pattern[l] < pattern[a]) {
                above[j] = Some(l);
            }
        }
    }
    let mut chosen = vec![0u8; k];
    extend_match(text, 0, 0, &below, &above, &mut chosen)
}

fn extend_match(
    text: &[u8],
    start: usize,
    j: usize,
    below: &[Option<usize>],
    above: &[Option<usize>],
    chosen: &mut [u8],
) -> bool {
    let k = chosen.len();
    if j == k {
        return true;
    }
    let last = text.len() - (k - j);
    for idx in start..=last {
        let v = text[idx];
        if below[j].is_some_and(|b| chosen[b] > v) || above[j].is_some_and(|a| chosen[a] < v) {
            continue;
        }
        chosen[j] = v;
        if extend_match(text, idx + 1, j + 1, below, above, chosen) {
            return true;
        }
    }
    false
}

/// One of the eight symmetries of the square, applied as inverse, then
/// reverse, then complement.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry {
    pub inverse: bool,
    pub reverse: bool,
    pub complement: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry::new(false, false, false);
    pub const REVERSE: Symmetry = Symmetry::new(false, true, false);
    pub const COMPLEMENT: Symmetry = Symmetry::new(false, false, true);
    pub const INVERSE: Symmetry = Symmetry::new(true, false, false);

    pub const ALL: [Symmetry; 8] = [
        Symmetry::new(false, false, false),
        Symmetry::new(false, true, false),
        Symmetry::new(false, false, true),
        Symmetry::new(false, true, true),
        Symmetry::new(true, false, false),
        Symmetry::new(true, true, false),
        Symmetry::new(true, false, true),
        Symmetry::new(true, true, true),
    ];

    pub const fn new(inverse: bool, reverse: bool, complement: bool) -> Self {
        Symmetry {
            inverse,
            reverse,
            complement,
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Symmetry::IDENTITY {
            return f.write_str("identity");
        }
        let mut parts = Vec::new();
        if self.inverse {
            parts.push("inverse");
        }
        if self.reverse {
            parts.push("reverse");
        }
        if self.complement {
            parts.push("complement");
        }
        f.write_str(&parts.join("+"))
    }
}

/// A normalized basis: a nonempty antichain of nonempty permutations, kept
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basis {
    elements: Vec<Permutation>,
}

impl Basis {
    /// Deduplicates `raw` and drops every element containing another one.
    pub fn normalize(raw: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut elems: Vec<Permutation> = raw.into_iter().collect();
        if elems.is_empty() {
            return Err(Error::EmptyBasis);
        }
        if elems.iter().any(Permutation::is_empty) {
            return Err(Error::InvalidInput(
                "basis elements must be nonempty permutations".into(),
            ));
        }
        elems.sort();
        elems.dedup();
        let minimal: Vec<Permutation> = elems
            .iter()
            .filter(|p| !elems.iter().any(|q| q != *p && p.contains(q)))
            .cloned()
            .collect();
        Ok(Basis { elements: minimal })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    /// Length of the longest element.
    pub fn max_len(&self) -> usize {
        self.elements
            .iter()
            .map(Permutation::len)
            .max()
            .unwrap_or(0)
    }

    pub fn apply(&self, sym: Symmetry) -> Basis {
        let mut elements: Vec<Permutation> = self.elements.iter().map(|p| p.apply(sym)).collect();
        elements.sort();
        Basis { elements }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Basis {
    type Err = Error;

    /// Comma-separated permutations, e.g. `"4321,3142"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut elems = Vec::new();
        let mut offset = 0;
        for token in s.split(',') {
            let trimmed = token.trim();
            let lead = token.len() - token.trim_start().len();
            if trimmed.is_empty() {
                return Err(Error::Parse {
                    position: offset,
                    message: "empty basis element".into(),
                });
            }
            elems.push(parse_permutation(trimmed, offset + lead)?);
            offset += token.len() + 1;
        }
        Basis::normalize(elems)
    }
}
