//! String and graph pointer reduction systems: rule application, exhaustive
//! search for successful reductions, negative-rule counts and the closed-form
//! successfulness classifier for realistic overlap graphs.
//!
//! Rule sequences are `Vec`s in application order. The textual notation
//! (`gnr_4 gdr_{5,7} gnr_2`) is written as a composition, so its rightmost
//! rule is applied first; [`parse_sequence`] and [`format_sequence`] convert.

mod classify;
mod graph;
mod search;
mod string;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use classify::{classify, predicted_negative_rule_count, predicted_negative_rule_count_graph};
pub use graph::{
    applicable_graph_rules, apply_graph_rule, apply_graph_sequence, gnr_counts,
    successful_graph_reductions, successful_in, GraphRule, DEFAULT_GRAPH_KAPPA_CAP,
};
pub use search::{Reducible, Reductions};
pub use string::{
    applicable_string_rules, apply_string_rule, apply_string_sequence, snr_counts,
    successful_string_reductions, StringRule, DEFAULT_STRING_DOMAIN_CAP,
};

/// A subset of the three rule kinds. On the string side these are
/// `Snr`/`Spr`/`Sdr`, on the graph side `Gnr`/`Gpr`/`Gdr`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RuleSet {
    pub negative: bool,
    pub positive: bool,
    pub double: bool,
}

impl RuleSet {
    pub const ALL: RuleSet = RuleSet {
        negative: true,
        positive: true,
        double: true,
    };

    pub const NONE: RuleSet = RuleSet {
        negative: false,
        positive: false,
        double: false,
    };

    /// All eight subsets, ordered by bitmask (negative = 1, positive = 2,
    /// double = 4).
    pub fn all_subsets() -> Vec<RuleSet> {
        (0..8u8)
            .map(|m| RuleSet {
                negative: m & 1 != 0,
                positive: m & 2 != 0,
                double: m & 4 != 0,
            })
            .collect()
    }

    fn names(&self, prefix: char) -> Vec<String> {
        [
            (self.negative, "nr"),
            (self.positive, "pr"),
            (self.double, "dr"),
        ]
        .into_iter()
        .filter(|(on, _)| *on)
        .map(|(_, n)| format!("{prefix}{n}"))
        .collect()
    }

    /// `{Gnr,Gdr}` style.
    pub fn graph_name(&self) -> String {
        format!("{{{}}}", self.names('G').join(","))
    }

    /// `{Snr,Sdr}` style.
    pub fn string_name(&self) -> String {
        format!("{{{}}}", self.names('S').join(","))
    }
}

/// Lower-case names, e.g. `gnr,gdr`; `none` for the empty set.
impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names('g');
        if names.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&names.join(","))
        }
    }
}

/// Accepts comma-separated kinds, case-insensitive, with or without the
/// `g`/`s` prefix and braces: `gnr,gpr`, `{Snr,Sdr}`, `nr`, `all`, `none`.
impl FromStr for RuleSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = RuleSet::NONE;
        match body.to_ascii_lowercase().as_str() {
            "all" => return Ok(RuleSet::ALL),
            "none" | "" => return Ok(set),
            _ => {}
        }
        for part in body.split(',') {
            let name = part.trim().to_ascii_lowercase();
            let kind = name
                .strip_prefix('g')
                .or_else(|| name.strip_prefix('s'))
                .unwrap_or(&name);
            match kind {
                "nr" => set.negative = true,
                "pr" => set.positive = true,
                "dr" => set.double = true,
                _ => return Err(Error::MalformedRule(part.trim().into())),
            }
        }
        Ok(set)
    }
}

/// Parses `name_p` / `name_{p,q}` tokens into rules, returning them in
/// application order (the reverse of the written order).
pub fn parse_sequence<R: FromStr<Err = Error>>(text: &str) -> Result<Vec<R>> {
    let mut rules = text
        .split_ascii_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<R>>>()?;
    rules.reverse();
    Ok(rules)
}

/// Writes rules given in application order using composition notation.
pub fn format_sequence<R: fmt::Display>(rules: &[R]) -> String {
    rules
        .iter()
        .rev()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Splits `snr_3` into `("snr", [3])` and `sdr_{2,5}` into `("sdr", [2, 5])`.
fn split_rule(token: &str) -> Result<(&str, Vec<u32>)> {
    let bad = || Error::MalformedRule(token.into());
    let (name, args) = token.split_once('_').ok_or_else(bad)?;
    let args = args
        .strip_prefix('{')
        .and_then(|a| a.strip_suffix('}'))
        .unwrap_or(args);
    let params = args
        .split(',')
        .map(|a| a.trim().parse::<u32>().map_err(|_| bad()))
        .collect::<Result<Vec<u32>>>()?;
    Ok((name, params))
}
