//! Exhaustive search shared by the string and graph reduction systems.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use super::RuleSet;

/// A state of a reduction system.
pub trait Reducible: Clone {
    type Rule: Clone;
    type Key: Hash + Eq;

    fn is_reduced(&self) -> bool;
    /// States with equal keys have the same sets of negative-rule counts.
    fn key(&self) -> Self::Key;
    fn rules(&self, allowed: RuleSet) -> Vec<Self::Rule>;
    fn apply(&self, rule: &Self::Rule) -> Self;
    fn is_negative(rule: &Self::Rule) -> bool;
}

/// Memoised map from a state to the set of negative-rule counts over all its
/// successful reductions (empty when none exists).
pub(crate) struct CountMemo<T: Reducible> {
    allowed: RuleSet,
    table: HashMap<T::Key, BTreeSet<usize>>,
}

impl<T: Reducible> CountMemo<T> {
    pub(crate) fn new(allowed: RuleSet) -> Self {
        CountMemo {
            allowed,
            table: HashMap::new(),
        }
    }

    pub(crate) fn counts(&mut self, state: &T) -> BTreeSet<usize> {
        if state.is_reduced() {
            return BTreeSet::from([0]);
        }
        let key = state.key();
        if let Some(hit) = self.table.get(&key) {
            return hit.clone();
        }
        let mut out = BTreeSet::new();
        for rule in state.rules(self.allowed) {
            let extra = usize::from(T::is_negative(&rule));
            let child = state.apply(&rule);
            out.extend(self.counts(&child).into_iter().map(|c| c + extra));
        }
        self.table.insert(key, out.clone());
        out
    }

    fn successful(&mut self, state: &T) -> bool {
        !self.counts(state).is_empty()
    }
}

struct Frame<T: Reducible> {
    state: T,
    options: Vec<T::Rule>,
    next: usize,
}

/// Iterator over every successful reduction of a state, each given in
/// application order. Branches that cannot succeed are pruned.
pub struct Reductions<T: Reducible> {
    memo: CountMemo<T>,
    stack: Vec<Frame<T>>,
    path: Vec<T::Rule>,
    yield_empty: bool,
}

impl<T: Reducible> Reductions<T> {
    pub(crate) fn new(start: T, allowed: RuleSet) -> Self {
        let mut memo = CountMemo::new(allowed);
        let mut stack = Vec::new();
        let yield_empty = start.is_reduced();
        if !yield_empty && memo.successful(&start) {
            let options = start.rules(allowed);
            stack.push(Frame {
                state: start,
                options,
                next: 0,
            });
        }
        Reductions {
            memo,
            stack,
            path: Vec::new(),
            yield_empty,
        }
    }
}

impl<T: Reducible> Iterator for Reductions<T> {
    type Item = Vec<T::Rule>;

    fn next(&mut self) -> Option<Vec<T::Rule>> {
        if std::mem::take(&mut self.yield_empty) {
            return Some(Vec::new());
        }
        loop {
            let top = self.stack.last_mut()?;
            if top.next == top.options.len() {
                self.stack.pop();
                self.path.pop();
                continue;
            }
            let rule = top.options[top.next].clone();
            top.next += 1;
            let child = top.state.apply(&rule);
            if child.is_reduced() {
                let mut found = self.path.clone();
                found.push(rule);
                return Some(found);
            }
            if self.memo.successful(&child) {
                let options = child.rules(self.memo.allowed);
                self.path.push(rule);
                self.stack.push(Frame {
                    state: child,
                    options,
                    next: 0,
                });
            }
        }
    }
}
