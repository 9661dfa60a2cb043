//! Configurations, insertion letters and the insertion encoding.
//!
//! A configuration is a permutation interleaved with slots (`*` in text
//! form). Every letter inserts a new maximum into one slot: `m` splits the
//! slot around the new entry, `l` keeps the slot to the right of it, `r`
//! keeps it to the left, and `f` fills the slot.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{contains_pattern, Basis, Permutation, MAX_LEN};

const SLOT: u8 = 0;

/// One item of a configuration, as seen from outside.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Item {
    Value(u32),
    Slot,
}

/// Items are stored as bytes, `0` marking a slot.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(Vec<u8>);

impl Configuration {
    /// The single-slot configuration every evolution starts from.
    pub fn initial() -> Self {
        Configuration(vec![SLOT])
    }

    pub fn from_permutation(pi: &Permutation) -> Self {
        Configuration(pi.entries().to_vec())
    }

    /// Builds a configuration whose values are already standardized.
    pub fn new(items: &[Item]) -> Result<Self> {
        let c = Self::standardize(items)?;
        let same = items.iter().zip(c.items()).all(|(a, b)| *a == b);
        if !same {
            return Err(Error::InvalidInput(
                "configuration values are not standardized".into(),
            ));
        }
        Ok(c)
    }

    /// Replaces values by their ranks, keeping slots in place.
    pub fn standardize(items: &[Item]) -> Result<Self> {
        if items.len() > MAX_LEN {
            return Err(Error::InvalidInput("configuration too long".into()));
        }
        if items
            .windows(2)
            .any(|w| w[0] == Item::Slot && w[1] == Item::Slot)
        {
            return Err(Error::InvalidInput(
                "configuration has adjacent slots".into(),
            ));
        }
        let values: Vec<u32> = items
            .iter()
            .filter_map(|it| match it {
                Item::Value(v) => Some(*v),
                Item::Slot => None,
            })
            .collect();
        let ranks = crate::perm::standardize(&values)?.into_entries();
        let mut ranks = ranks.into_iter();
        let raw = items
            .iter()
            .map(|it| match it {
                Item::Value(_) => ranks.next().unwrap(),
                Item::Slot => SLOT,
            })
            .collect();
        Ok(Configuration(raw))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn items(&self) -> impl Iterator<Item = Item> + '_ {
        self.0.iter().map(|&b| {
            if b == SLOT {
                Item::Slot
            } else {
                Item::Value(b as u32)
            }
        })
    }

    pub fn item(&self, pos: usize) -> Option<Item> {
        self.0.get(pos).map(|&b| {
            if b == SLOT {
                Item::Slot
            } else {
                Item::Value(b as u32)
            }
        })
    }

    pub fn is_slot(&self, pos: usize) -> bool {
        self.0[pos] == SLOT
    }

    pub fn slot_count(&self) -> usize {
        self.0.iter().filter(|&&b| b == SLOT).count()
    }

    pub fn slot_positions(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] == SLOT).collect()
    }

    /// Number of values (non-slot items).
    pub fn value_count(&self) -> usize {
        self.0.len() - self.slot_count()
    }

    /// Values in left-to-right order; they form a permutation.
    pub fn values(&self) -> Vec<u8> {
        self.0.iter().copied().filter(|&b| b != SLOT).collect()
    }

    /// The configuration as a permutation, when it has no slots.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.0.contains(&SLOT) {
            None
        } else {
            Some(Permutation::from_entries_unchecked(self.0.clone()))
        }
    }

    /// The non-initial configurations whose only slot is the final item;
    /// every permutation evolving from one is sum decomposable.
    pub fn has_only_end_slot(&self) -> bool {
        self.slot_count() == 1 && self.0.last() == Some(&SLOT) && self.0.len() > 1
    }

    /// Inserts the new maximum according to `letter`.
    pub fn apply(&self, letter: Letter) -> Result<Self> {
        let slots = self.slot_count();
        let idx = letter.slot as usize;
        if idx == 0 || idx > slots {
            return Err(Error::InvalidLetter {
                letter: letter.to_string(),
                slots,
            });
        }
        if self.value_count() >= MAX_LEN {
            return Err(Error::InvalidInput("configuration too long".into()));
        }
        Ok(self.apply_unchecked(letter))
    }

    pub(crate) fn apply_unchecked(&self, letter: Letter) -> Self {
        let new_max = (self.value_count() + 1) as u8;
        let pos = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == SLOT)
            .nth(letter.slot as usize - 1)
            .map(|(i, _)| i)
            .expect("slot index within range");
        let replacement: &[u8] = match letter.kind {
            LetterKind::M => &[SLOT, new_max, SLOT],
            LetterKind::L => &[new_max, SLOT],
            LetterKind::R => &[SLOT, new_max],
            LetterKind::F => &[new_max],
        };
        let mut out = Vec::with_capacity(self.0.len() + 2);
        out.extend_from_slice(&self.0[..pos]);
        out.extend_from_slice(replacement);
        out.extend_from_slice(&self.0[pos + 1..]);
        Configuration(out)
    }

    /// All letters applicable to this configuration, slot-major.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        let slots = self.slot_count() as u8;
        (1..=slots).flat_map(|slot| {
            LetterKind::ALL
                .into_iter()
                .map(move |kind| Letter { kind, slot })
        })
    }

    /// Removes the value at `pos` and standardizes. Removing a value that
    /// separates two slots is rejected.
    pub fn delete(&self, pos: usize) -> Result<Self> {
        match self.0.get(pos) {
            None => Err(Error::InvalidArgument(format!(
                "position {pos} out of range for a configuration of length {}",
                self.0.len()
            ))),
            Some(&SLOT) => Err(Error::InvalidArgument(format!(
                "position {pos} holds a slot"
            ))),
            Some(_) if self.between_slots(pos) => Err(Error::InvalidArgument(format!(
                "deleting position {pos} would make two slots adjacent"
            ))),
            Some(_) => Ok(self.delete_unchecked(pos)),
        }
    }

    pub(crate) fn delete_unchecked(&self, pos: usize) -> Self {
        let removed = self.0[pos];
        Configuration(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != pos)
                .map(|(_, &b)| if b > removed { b - 1 } else { b })
                .collect(),
        )
    }

    /// True when the item at `pos` has a slot on both sides.
    pub fn between_slots(&self, pos: usize) -> bool {
        pos > 0 && pos + 1 < self.0.len() && self.0[pos - 1] == SLOT && self.0[pos + 1] == SLOT
    }

    /// Whether some filling of the slots yields a permutation avoiding
    /// `basis`. Any avoiding completion can be thinned to one new entry per
    /// slot, so it is enough to try the orders of `m+1..=m+s` over the
    /// slots, i.e. sequences of `f` letters; a branch is abandoned as soon as
    /// the values placed so far contain a basis element.
    pub fn is_valid(&self, basis: &Basis) -> bool {
        let mut budget = usize::MAX;
        self.is_valid_within(basis, &mut budget)
            .expect("unbounded budget")
    }

    /// [`Configuration::is_valid`], giving up with `None` once `budget`
    /// configurations have been examined.
    pub(crate) fn is_valid_within(&self, basis: &Basis, budget: &mut usize) -> Option<bool> {
        *budget = budget.checked_sub(1)?;
        if self.values_contain(basis) {
            return Some(false);
        }
        if self.slot_count() == 0 {
            return Some(true);
        }
        for slot in 1..=self.slot_count() as u8 {
            if self
                .apply_unchecked(Letter::new(LetterKind::F, slot))
                .is_valid_within(basis, budget)?
            {
                return Some(true);
            }
        }
        Some(false)
    }

    /// True when the values alone already contain an element of `basis`.
    pub(crate) fn values_contain(&self, basis: &Basis) -> bool {
        let values = self.values();
        basis
            .elements()
            .iter()
            .any(|b| contains_pattern(&values, b.entries()))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.0.iter().any(|&b| b > 9);
        let tokens: Vec<String> = self
            .0
            .iter()
            .map(|&b| {
                if b == SLOT {
                    "*".to_string()
                } else {
                    b.to_string()
                }
            })
            .collect();
        f.write_str(&tokens.join(if wide { "-" } else { "" }))
    }
}

impl FromStr for Configuration {
    type Err = Error;

    /// Digits and `*` (or `⋄`) for slots; the dash-separated form for wide
    /// values. Whitespace is ignored in the compact form.
    fn from_str(s: &str) -> Result<Self> {
        let mut items = Vec::new();
        if s.contains('-') {
            let mut pos = 0;
            for token in s.split('-') {
                let t = token.trim();
                let item = match t {
                    "*" | "⋄" => Item::Slot,
                    _ => Item::Value(t.parse().map_err(|_| Error::Parse {
                        position: pos,
                        message: format!("`{t}` is neither a value nor a slot"),
                    })?),
                };
                items.push(item);
                pos += token.len() + 1;
            }
        } else {
            for (i, ch) in s.chars().enumerate() {
                match ch {
                    '*' | '⋄' => items.push(Item::Slot),
                    c if c.is_whitespace() => {}
                    c => match c.to_digit(10) {
                        Some(d) if d >= 1 => items.push(Item::Value(d)),
                        _ => {
                            return Err(Error::Parse {
                                position: i,
                                message: format!("unexpected character `{c}`"),
                            })
                        }
                    },
                }
            }
        }
        Configuration::new(&items).map_err(|e| Error::Parse {
            position: 0,
            message: e.to_string(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    M,
    L,
    R,
    F,
}

impl LetterKind {
    pub const ALL: [LetterKind; 4] = [LetterKind::M, LetterKind::L, LetterKind::R, LetterKind::F];

    pub fn as_char(self) -> char {
        match self {
            LetterKind::M => 'm',
            LetterKind::L => 'l',
            LetterKind::R => 'r',
            LetterKind::F => 'f',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'm' => Some(LetterKind::M),
            'l' => Some(LetterKind::L),
            'r' => Some(LetterKind::R),
            'f' => Some(LetterKind::F),
            _ => None,
        }
    }
}

/// An insertion letter: a kind plus a 1-based slot index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub slot: u8,
}

impl Letter {
    pub fn new(kind: LetterKind, slot: u8) -> Self {
        Letter { kind, slot }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.as_char(), self.slot)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let kind = chars
            .next()
            .and_then(LetterKind::from_char)
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("`{s}` does not start with one of m, l, r, f"),
            })?;
        let slot: u8 = chars.as_str().parse().map_err(|_| Error::Parse {
            position: 1,
            message: format!("`{s}` has no valid slot index"),
        })?;
        if slot == 0 {
            return Err(Error::Parse {
                position: 1,
                message: "slot indices start at 1".into(),
            });
        }
        Ok(Letter { kind, slot })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct InsertionWord(pub Vec<Letter>);

impl InsertionWord {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for InsertionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for InsertionWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in s.split(' ') {
            if !token.is_empty() {
                letters.push(token.parse::<Letter>().map_err(|e| match e {
                    Error::Parse { position, message } => Error::Parse {
                        position: offset + position,
                        message,
                    },
                    other => other,
                })?);
            }
            offset += token.len() + 1;
        }
        Ok(InsertionWord(letters))
    }
}

/// The insertion encoding of a nonempty permutation.
pub fn encode(pi: &Permutation) -> Result<InsertionWord> {
    let n = pi.len();
    if n == 0 {
        return Err(Error::InvalidInput(
            "the empty permutation has no insertion encoding".into(),
        ));
    }
    let mut position = vec![0usize; n + 1];
    for (i, &v) in pi.entries().iter().enumerate() {
        position[v as usize] = i;
    }
    // Unfilled positions form maximal runs; each run is one slot.
    let mut filled = vec![false; n];
    let mut word = Vec::with_capacity(n);
    for &p in &position[1..] {
        let mut start = p;
        while start > 0 && !filled[start - 1] {
            start -= 1;
        }
        let mut end = p;
        while end + 1 < n && !filled[end + 1] {
            end += 1;
        }
        let slot = (0..=start)
            .filter(|&q| !filled[q] && (q == 0 || filled[q - 1]))
            .count();
        let kind = match (p == start, p == end) {
            (true, true) => LetterKind::F,
            (true, false) => LetterKind::L,
            (false, true) => LetterKind::R,
            (false, false) => LetterKind::M,
        };
        word.push(Letter::new(kind, slot as u8));
        filled[p] = true;
    }
    Ok(InsertionWord(word))
}

/// The configuration reached from the initial slot by applying `word`.
pub fn decode(word: &InsertionWord) -> Result<Configuration> {
    word.0
        .iter()
        .enumerate()
        .try_fold(Configuration::initial(), |c, (i, &letter)| {
            c.apply(letter).map_err(|_| Error::InvalidWord {
                position: i,
                letter: letter.to_string(),
                slots: c.slot_count(),
            })
        })
}

/// The sequence of configurations a permutation passes through, starting
/// from the initial slot and ending at the permutation itself.
pub fn evolution(pi: &Permutation) -> Result<Vec<Configuration>> {
    let word = encode(pi)?;
    let mut states = vec![Configuration::initial()];
    for &letter in word.letters() {
        let next = states.last().unwrap().apply(letter)?;
        states.push(next);
    }
    Ok(states)
}

/// Memoized validity for one basis.
#[derive(Debug)]
pub struct Validator {
    basis: Basis,
    cache: HashMap<Configuration, bool>,
    budget: usize,
    exhausted: bool,
}

impl Validator {
    pub fn new(basis: Basis) -> Self {
        Validator {
            basis,
            cache: HashMap::new(),
            budget: usize::MAX,
            exhausted: false,
        }
    }

    /// Gives up, answering false from then on, once `limit` units of work
    /// have been spent: one per query plus one per configuration examined.
    pub fn with_limit(mut self, limit: usize) -> Self {
        self.budget = limit;
        self
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// [`Configuration::is_valid`], memoized per configuration.
    pub fn is_valid(&mut self, c: &Configuration) -> bool {
        if self.exhausted {
            return false;
        }
        if let Some(&v) = self.cache.get(c) {
            self.budget = self.budget.saturating_sub(1);
            return v;
        }
        match c.is_valid_within(&self.basis, &mut self.budget) {
            Some(v) => {
                self.cache.insert(c.clone(), v);
                v
            }
            None => {
                self.exhausted = true;
                false
            }
        }
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    /// Work left before the limit.
    pub fn remaining(&self) -> usize {
        self.budget
    }
}
