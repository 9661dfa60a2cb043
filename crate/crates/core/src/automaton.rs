//! The finite accepting automaton of a class's insertion encoding.
//!
//! States are valid configurations in a canonical form. A value is deleted
//! from a configuration whenever the smaller configuration accepts exactly
//! the same continuations (the value is *IE-reducible*); for a valid
//! configuration this holds iff no word of length below the longest basis
//! element leads to a valid configuration from one side and an invalid one
//! from the other. Breadth-first search from the initial slot over reduced
//! configurations then closes after finitely many states whenever the class
//! is slot-bounded.
//!
//! The indecomposable variant additionally rejects every non-initial
//! configuration whose only slot is its last item, and never deletes the
//! rightmost item, so that it accepts the sum indecomposable members of the
//! class.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::config::{Configuration, Letter, LetterKind, Validator};
use crate::error::{Error, Result};
use crate::perm::Basis;
use crate::regularity::check_regular;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutomatonKind {
    /// Accepts the encodings of all nonempty members of the class.
    #[default]
    Class,
    /// Accepts the encodings of the sum indecomposable members.
    Indecomposable,
}

/// Which reducible value `reduce` deletes first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReduceOrder {
    #[default]
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guards {
    pub max_states: usize,
    pub max_slots: usize,
    /// Configurations that validity tests may examine, in total.
    pub max_search: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_states: 200_000,
            max_slots: 16,
            max_search: 50_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub guards: Guards,
    pub order: ReduceOrder,
    /// Build even when the regularity test fails; the guards then bound the
    /// run.
    pub skip_regularity_check: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            guards: Guards::default(),
            order: ReduceOrder::Leftmost,
            skip_regularity_check: false,
        }
    }
}

/// Memoized IE-reduction for one basis.
pub struct Reducer {
    validator: Validator,
    depth: usize,
    kind: AutomatonKind,
    order: ReduceOrder,
    reduced: HashMap<Configuration, Configuration>,
}

impl Reducer {
    pub fn new(basis: Basis, kind: AutomatonKind, order: ReduceOrder) -> Self {
        let depth = basis.max_len().saturating_sub(1);
        Reducer {
            validator: Validator::new(basis),
            depth,
            kind,
            order,
            reduced: HashMap::new(),
        }
    }

    /// Caps the work spent on validity tests. Once the cap is hit every
    /// validity query answers false and [`Reducer::exhausted`] reports it;
    /// results from then on are meaningless.
    pub fn with_search_limit(mut self, limit: usize) -> Self {
        self.validator = self.validator.with_limit(limit);
        self
    }

    pub fn exhausted(&self) -> bool {
        self.validator.is_exhausted()
    }

    pub fn basis(&self) -> &Basis {
        self.validator.basis()
    }

    pub fn is_valid(&mut self, c: &Configuration) -> bool {
        self.validator.is_valid(c)
    }

    /// Whether `c` is a live state of this variant's automaton.
    pub fn admits(&mut self, c: &Configuration) -> bool {
        if self.kind == AutomatonKind::Indecomposable && c.has_only_end_slot() {
            return false;
        }
        self.is_valid(c)
    }

    /// Whether the value at `pos` can be deleted without changing which
    /// words lead `c` to an accepting configuration. `c` must be valid.
    pub fn ie_reducible(&mut self, c: &Configuration, pos: usize) -> Result<bool> {
        if pos >= c.len() || c.is_slot(pos) {
            return Err(Error::InvalidArgument(format!(
                "position {pos} of {c} is not a value"
            )));
        }
        Ok(self.ie_reducible_at(c, pos))
    }

    fn ie_reducible_at(&mut self, c: &Configuration, pos: usize) -> bool {
        if c.between_slots(pos) {
            return false;
        }
        let smaller = c.delete_unchecked(pos);
        if self.is_valid(c) != self.is_valid(&smaller) {
            return false;
        }
        let extra_fills = c.slot_count().saturating_sub(1);
        let fresh = vec![true; c.slot_count()];
        !self.weakly_distinguished(c, &smaller, self.depth, extra_fills, &fresh)
    }

    /// Searches for a word leading one side to a valid configuration and
    /// the other to an invalid one. Both sides have the same slot count, so
    /// the same letters apply; branches where both become invalid stay
    /// invalid and are dropped.
    ///
    /// A shortest distinguishing word needs at most `b-1` letters for the
    /// entries of one basis occurrence, plus one `f` into each other
    /// original slot so the smaller side can close it early. `letters`
    /// budgets the former and `fills` the latter; `fresh` marks the current
    /// slots that are original and untouched.
    fn weakly_distinguished(
        &mut self,
        a: &Configuration,
        b: &Configuration,
        letters: usize,
        fills: usize,
        fresh: &[bool],
    ) -> bool {
        if letters == 0 && !(fills > 0 && fresh.contains(&true)) {
            return false;
        }
        for letter in a.letters() {
            let j = letter.slot as usize - 1;
            let (l, f) = match letter.kind {
                LetterKind::F if fills > 0 && fresh[j] => (letters, fills - 1),
                _ if letters > 0 => (letters - 1, fills),
                _ => continue,
            };
            let na = a.apply_unchecked(letter);
            let nb = b.apply_unchecked(letter);
            let va = self.is_valid(&na);
            if va != self.is_valid(&nb) {
                return true;
            }
            if va {
                let mut next = fresh.to_vec();
                match letter.kind {
                    LetterKind::F => {
                        next.remove(j);
                    }
                    LetterKind::M => {
                        next[j] = false;
                        next.insert(j, false);
                    }
                    LetterKind::L | LetterKind::R => next[j] = false,
                }
                if self.weakly_distinguished(&na, &nb, l, f, &next) {
                    return true;
                }
            }
        }
        false
    }

    /// Canonical form: repeatedly delete the first reducible value (in the
    /// configured order), restarting after each deletion.
    pub fn reduce(&mut self, c: &Configuration) -> Configuration {
        if let Some(r) = self.reduced.get(c) {
            return r.clone();
        }
        let r = match self.find_reducible(c) {
            Some(pos) => self.reduce(&c.delete_unchecked(pos)),
            None => c.clone(),
        };
        self.reduced.insert(c.clone(), r.clone());
        r
    }

    fn find_reducible(&mut self, c: &Configuration) -> Option<usize> {
        let last = c.len().checked_sub(1)?;
        let candidates: Vec<usize> = match self.order {
            ReduceOrder::Leftmost => (0..c.len()).collect(),
            ReduceOrder::Rightmost => (0..c.len()).rev().collect(),
        };
        candidates.into_iter().find(|&pos| {
            !c.is_slot(pos)
                && !(self.kind == AutomatonKind::Indecomposable && pos == last)
                && self.ie_reducible_at(c, pos)
        })
    }
}

/// Convenience wrapper for a single test.
pub fn ie_reducible(c: &Configuration, pos: usize, basis: &Basis) -> Result<bool> {
    Reducer::new(basis.clone(), AutomatonKind::Class, ReduceOrder::Leftmost).ie_reducible(c, pos)
}

/// Convenience wrapper: leftmost-first canonical form of a valid `c`.
pub fn reduce(c: &Configuration, basis: &Basis) -> Configuration {
    Reducer::new(basis.clone(), AutomatonKind::Class, ReduceOrder::Leftmost).reduce(c)
}

/// Deterministic partial automaton; missing transitions go to an implicit
/// dead state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    kind: AutomatonKind,
    states: Vec<Configuration>,
    initial: usize,
    accepts: Vec<usize>,
    transitions: Vec<BTreeMap<Letter, usize>>,
}

impl Automaton {
    pub fn new(
        kind: AutomatonKind,
        states: Vec<Configuration>,
        initial: usize,
        accepts: Vec<usize>,
        transitions: Vec<BTreeMap<Letter, usize>>,
    ) -> Result<Self> {
        let n = states.len();
        if initial >= n {
            return Err(Error::Automaton(format!(
                "initial state {initial} out of range"
            )));
        }
        if transitions.len() != n {
            return Err(Error::Automaton("transition table size mismatch".into()));
        }
        if let Some(&bad) = accepts.iter().find(|&&a| a >= n) {
            return Err(Error::Automaton(format!("accept state {bad} out of range")));
        }
        if let Some(bad) = transitions
            .iter()
            .flat_map(|t| t.values())
            .find(|&&t| t >= n)
        {
            return Err(Error::Automaton(format!(
                "transition target {bad} out of range"
            )));
        }
        let mut accepts = accepts;
        accepts.sort_unstable();
        accepts.dedup();
        Ok(Automaton {
            kind,
            states,
            initial,
            accepts,
            transitions,
        })
    }

    pub fn kind(&self) -> AutomatonKind {
        self.kind
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().map(BTreeMap::len).sum()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn accepts(&self) -> &[usize] {
        &self.accepts
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepts.binary_search(&state).is_ok()
    }

    pub fn representative(&self, state: usize) -> &Configuration {
        &self.states[state]
    }

    pub fn representatives(&self) -> &[Configuration] {
        &self.states
    }

    pub fn transitions_from(&self, state: usize) -> &BTreeMap<Letter, usize> {
        &self.transitions[state]
    }

    /// Largest slot count over the state representatives.
    pub fn slot_bound(&self) -> usize {
        self.states
            .iter()
            .map(Configuration::slot_count)
            .max()
            .unwrap_or(0)
    }

    /// Largest slot index on any transition.
    pub fn alphabet_bound(&self) -> usize {
        self.transitions
            .iter()
            .flat_map(|t| t.keys())
            .map(|l| l.slot as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn run(&self, word: &[Letter]) -> Option<usize> {
        word.iter()
            .try_fold(self.initial, |s, l| self.transitions[s].get(l).copied())
    }

    pub fn accepts_word(&self, word: &[Letter]) -> bool {
        self.run(word).is_some_and(|s| self.is_accepting(s))
    }

    /// Language-equivalent automaton with the fewest states, by partition
    /// refinement over the automaton completed with a dead state. States
    /// equivalent to the dead state are dropped again afterwards.
    pub fn minimize(&self) -> Automaton {
        let n = self.states.len();
        let sink = n;
        let mut alphabet: Vec<Letter> = self
            .transitions
            .iter()
            .flat_map(|t| t.keys().copied())
            .collect();
        alphabet.sort();
        alphabet.dedup();
        let step = |s: usize, a: &Letter| -> usize {
            if s == sink {
                sink
            } else {
                self.transitions[s].get(a).copied().unwrap_or(sink)
            }
        };

        let mut class: Vec<usize> = (0..=n)
            .map(|s| usize::from(s < n && self.is_accepting(s)))
            .collect();
        let mut class_count = class.iter().copied().max().unwrap_or(0) + 1;
        loop {
            let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next = vec![0; n + 1];
            for s in 0..=n {
                let sig = (
                    class[s],
                    alphabet.iter().map(|a| class[step(s, a)]).collect(),
                );
                let fresh = ids.len();
                next[s] = *ids.entry(sig).or_insert(fresh);
            }
            let count = ids.len();
            class = next;
            if count == class_count {
                break;
            }
            class_count = count;
        }

        let dead = class[sink];
        if class[self.initial] == dead {
            return Automaton {
                kind: self.kind,
                states: vec![self.states[self.initial].clone()],
                initial: 0,
                accepts: Vec::new(),
                transitions: vec![BTreeMap::new()],
            };
        }
        // Number the surviving classes in breadth-first order from the
        // initial state; each takes its first-visited member as
        // representative.
        let mut new_id: HashMap<usize, usize> = HashMap::new();
        let mut members: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        new_id.insert(class[self.initial], 0);
        members.push(self.initial);
        while let Some(s) = queue.pop_front() {
            for &t in self.transitions[s].values() {
                let k = class[t];
                if k == dead || new_id.contains_key(&k) {
                    continue;
                }
                new_id.insert(k, members.len());
                members.push(t);
                queue.push_back(t);
            }
        }
        let states = members.iter().map(|&s| self.states[s].clone()).collect();
        let transitions = members
            .iter()
            .map(|&s| {
                self.transitions[s]
                    .iter()
                    .filter_map(|(&a, &t)| new_id.get(&class[t]).map(|&id| (a, id)))
                    .collect()
            })
            .collect();
        let accepts = members
            .iter()
            .enumerate()
            .filter(|(_, &s)| self.is_accepting(s))
            .map(|(i, _)| i)
            .collect();
        Automaton {
            kind: self.kind,
            states,
            initial: 0,
            accepts,
            transitions,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph automaton {\n  rankdir=LR;\n  start [shape=point];\n");
        for (id, rep) in self.states.iter().enumerate() {
            let shape = if self.is_accepting(id) {
                "doublecircle"
            } else {
                "circle"
            };
            let label = if rep.is_empty() {
                "ε".to_string()
            } else {
                rep.to_string()
            };
            let _ = writeln!(out, "  s{id} [shape={shape}, label=\"{label}\"];");
        }
        let _ = writeln!(out, "  start -> s{};", self.initial);
        for (from, row) in self.transitions.iter().enumerate() {
            for (letter, to) in row {
                let _ = writeln!(out, "  s{from} -> s{to} [label=\"{letter}\"];");
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_structured(&self) -> StructuredAutomaton {
        StructuredAutomaton {
            kind: self.kind,
            states: self
                .states
                .iter()
                .enumerate()
                .map(|(id, rep)| StructuredState {
                    id,
                    rep: rep.to_string(),
                })
                .collect(),
            initial: self.initial,
            accepts: self.accepts.clone(),
            transitions: self
                .transitions
                .iter()
                .enumerate()
                .flat_map(|(from, row)| {
                    row.iter().map(move |(letter, &to)| StructuredTransition {
                        from,
                        kind: letter.kind.as_char().to_string(),
                        slot: letter.slot as usize,
                        to,
                    })
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_structured()).expect("automaton serializes")
    }

    pub fn from_structured(s: &StructuredAutomaton) -> Result<Self> {
        let mut states = vec![None; s.states.len()];
        for st in &s.states {
            let slot = states
                .get_mut(st.id)
                .ok_or_else(|| Error::Automaton(format!("state id {} out of range", st.id)))?;
            if slot.is_some() {
                return Err(Error::Automaton(format!("duplicate state id {}", st.id)));
            }
            *slot = Some(st.rep.parse::<Configuration>()?);
        }
        let states: Vec<Configuration> = states.into_iter().map(|s| s.unwrap()).collect();
        let mut transitions = vec![BTreeMap::new(); states.len()];
        for t in &s.transitions {
            let kind = t
                .kind
                .chars()
                .next()
                .filter(|_| t.kind.len() == 1)
                .and_then(LetterKind::from_char)
                .ok_or_else(|| Error::Automaton(format!("unknown letter kind `{}`", t.kind)))?;
            if t.slot == 0 || t.slot > u8::MAX as usize {
                return Err(Error::Automaton(format!(
                    "slot index {} out of range",
                    t.slot
                )));
            }
            let row = transitions
                .get_mut(t.from)
                .ok_or_else(|| Error::Automaton(format!("state id {} out of range", t.from)))?;
            if row.insert(Letter::new(kind, t.slot as u8), t.to).is_some() {
                return Err(Error::Automaton(format!(
                    "nondeterministic transition from {} on {}{}",
                    t.from, t.kind, t.slot
                )));
            }
        }
        Automaton::new(s.kind, states, s.initial, s.accepts.clone(), transitions)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_structured(&serde_json::from_str(text)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredState {
    pub id: usize,
    pub rep: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredTransition {
    pub from: usize,
    pub kind: String,
    pub slot: usize,
    pub to: usize,
}

/// Machine-readable automaton. `kind` is optional on input and defaults to
/// the class variant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredAutomaton {
    #[serde(default)]
    pub kind: AutomatonKind,
    pub states: Vec<StructuredState>,
    pub initial: usize,
    pub accepts: Vec<usize>,
    pub transitions: Vec<StructuredTransition>,
}

/// Automaton accepting the insertion encodings of the nonempty members of
/// `Av(basis)`.
pub fn build(basis: &Basis, options: &BuildOptions) -> Result<Automaton> {
    build_kind(basis, AutomatonKind::Class, options)
}

/// Automaton accepting the insertion encodings of the sum indecomposable
/// members of `Av(basis)`.
pub fn build_indecomposable(basis: &Basis, options: &BuildOptions) -> Result<Automaton> {
    build_kind(basis, AutomatonKind::Indecomposable, options)
}

pub fn build_kind(basis: &Basis, kind: AutomatonKind, options: &BuildOptions) -> Result<Automaton> {
    if !options.skip_regularity_check {
        let report = check_regular(basis);
        if !report.regular {
            return Err(Error::NotRegular(Box::new(report)));
        }
    }
    let guards = options.guards;
    let mut reducer =
        Reducer::new(basis.clone(), kind, options.order).with_search_limit(guards.max_search);

    let initial = Configuration::initial();
    let mut states = vec![initial.clone()];
    let mut index: HashMap<Configuration, usize> = HashMap::from([(initial.clone(), 0)]);
    let mut transitions: Vec<BTreeMap<Letter, usize>> = vec![BTreeMap::new()];

    if reducer.is_valid(&initial) {
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            let rep = states[s].clone();
            for letter in rep.letters() {
                let child = rep.apply_unchecked(letter);
                if child.slot_count() > guards.max_slots {
                    return Err(Error::Guard {
                        guard: "max_slots",
                        limit: guards.max_slots,
                    });
                }
                if !reducer.admits(&child) {
                    continue;
                }
                let canonical = reducer.reduce(&child);
                if reducer.exhausted() {
                    return Err(Error::Guard {
                        guard: "max_search",
                        limit: guards.max_search,
                    });
                }
                let target = match index.get(&canonical) {
                    Some(&t) => t,
                    None => {
                        if states.len() >= guards.max_states {
                            return Err(Error::Guard {
                                guard: "max_states",
                                limit: guards.max_states,
                            });
                        }
                        let t = states.len();
                        index.insert(canonical.clone(), t);
                        states.push(canonical);
                        transitions.push(BTreeMap::new());
                        queue.push_back(t);
                        t
                    }
                };
                transitions[s].insert(letter, target);
            }
        }
    }

    let accepts = (0..states.len())
        .filter(|&s| states[s].slot_count() == 0)
        .collect();
    Automaton::new(kind, states, 0, accepts, transitions)
}
