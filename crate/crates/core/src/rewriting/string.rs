//! The string pointer reduction system.
//!
//! * `snr_p`: `u1 p p u2 -> u1 u2`
//! * `spr_p`: `u1 p u2 p̄ u3 -> u1 ū2 u3` where `ū2` is the inverse of `u2`
//! * `sdr_{p,q}`: `u1 p u2 q u3 p u4 q u5 -> u1 u4 u3 u2 u5` for negative `p`, `q`
//!
//! Rules are named by magnitude; `p` may occur barred in each case.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::search::{CountMemo, Reducible, Reductions};
use super::{split_rule, RuleSet};
use crate::error::{Error, Result};
use crate::pointer::{LegalString, Pointer, PointerString};

/// Largest domain the exhaustive string search accepts by default.
pub const DEFAULT_STRING_DOMAIN_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StringRule {
    Snr(u32),
    Spr(u32),
    /// `p` occurs first in the string.
    Sdr(u32, u32),
}

impl StringRule {
    pub fn is_negative(&self) -> bool {
        matches!(self, StringRule::Snr(_))
    }
}

impl fmt::Display for StringRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringRule::Snr(p) => write!(f, "snr_{p}"),
            StringRule::Spr(p) => write!(f, "spr_{p}"),
            StringRule::Sdr(p, q) => write!(f, "sdr_{{{p},{q}}}"),
        }
    }
}

impl FromStr for StringRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match split_rule(s)? {
            ("snr", v) if v.len() == 1 => Ok(StringRule::Snr(v[0])),
            ("spr", v) if v.len() == 1 => Ok(StringRule::Spr(v[0])),
            ("sdr", v) if v.len() == 2 => Ok(StringRule::Sdr(v[0], v[1])),
            _ => Err(Error::MalformedRule(s.into())),
        }
    }
}

pub fn applicable_string_rules(u: &LegalString, allowed: RuleSet) -> Vec<StringRule> {
    let mut out = Vec::new();
    let dom: Vec<u32> = u.domain().iter().collect();
    for &p in &dom {
        let (i, j) = u.occurrences(p).expect("domain member");
        let negative = u[i] == u[j];
        if allowed.negative && negative && j == i + 1 {
            out.push(StringRule::Snr(p));
        }
        if allowed.positive && !negative {
            out.push(StringRule::Spr(p));
        }
    }
    if allowed.double {
        for &p in &dom {
            for &q in &dom {
                if sdr_sites(u, p, q).is_some() {
                    out.push(StringRule::Sdr(p, q));
                }
            }
        }
    }
    out
}

/// Occurrence indices `(ip, iq, jp, jq)` with `ip < iq < jp < jq` when
/// `sdr_{p,q}` applies.
fn sdr_sites(u: &LegalString, p: u32, q: u32) -> Option<(usize, usize, usize, usize)> {
    let (ip, jp) = u.occurrences(p)?;
    let (iq, jq) = u.occurrences(q)?;
    let negative = |a: usize, b: usize| u[a] == u[b];
    (ip < iq && iq < jp && jp < jq && negative(ip, jp) && negative(iq, jq))
        .then_some((ip, iq, jp, jq))
}

fn inapplicable(rule: StringRule) -> Error {
    Error::RuleNotApplicable(rule.to_string())
}

pub fn apply_string_rule(u: &LegalString, rule: StringRule) -> Result<LegalString> {
    let s: &[Pointer] = u;
    let out: Vec<Pointer> = match rule {
        StringRule::Snr(p) => {
            let (i, j) = u.occurrences(p).ok_or_else(|| inapplicable(rule))?;
            if j != i + 1 || s[i] != s[j] {
                return Err(inapplicable(rule));
            }
            [&s[..i], &s[j + 1..]].concat()
        }
        StringRule::Spr(p) => {
            let (i, j) = u.occurrences(p).ok_or_else(|| inapplicable(rule))?;
            if s[i] == s[j] {
                return Err(inapplicable(rule));
            }
            let middle = s[i + 1..j].iter().rev().map(|x| x.bar());
            s[..i].iter().copied().chain(middle).chain(s[j + 1..].iter().copied()).collect()
        }
        StringRule::Sdr(p, q) => {
            let (ip, iq, jp, jq) = sdr_sites(u, p, q).ok_or_else(|| inapplicable(rule))?;
            [
                &s[..ip],
                &s[jp + 1..jq],
                &s[iq + 1..jp],
                &s[ip + 1..iq],
                &s[jq + 1..],
            ]
            .concat()
        }
    };
    Ok(LegalString::new(PointerString::new(out)).expect("reduction rules preserve legality"))
}

/// Applies rules in order.
pub fn apply_string_sequence(u: &LegalString, rules: &[StringRule]) -> Result<LegalString> {
    rules
        .iter()
        .try_fold(u.clone(), |acc, &r| apply_string_rule(&acc, r))
}

impl Reducible for LegalString {
    type Rule = StringRule;
    type Key = LegalString;

    fn is_reduced(&self) -> bool {
        self.is_empty()
    }

    // reversal, complement and inverse map successful reductions onto
    // successful reductions with the same rule kinds
    fn key(&self) -> LegalString {
        [self.reversal(), self.complement(), self.inverse()]
            .into_iter()
            .fold(self.clone(), |a, b| a.min(b))
    }

    fn rules(&self, allowed: RuleSet) -> Vec<StringRule> {
        applicable_string_rules(self, allowed)
    }

    fn apply(&self, rule: &StringRule) -> Self {
        apply_string_rule(self, *rule).expect("rule was listed as applicable")
    }

    fn is_negative(rule: &StringRule) -> bool {
        rule.is_negative()
    }
}

fn check_cap(u: &LegalString, cap: usize) -> Result<()> {
    let size = u.domain().len();
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(())
}

/// Every successful reduction of `u` using `allowed`, in application order.
pub fn successful_string_reductions(
    u: &LegalString,
    allowed: RuleSet,
    cap: usize,
) -> Result<Reductions<LegalString>> {
    check_cap(u, cap)?;
    Ok(Reductions::new(u.clone(), allowed))
}

/// The set of snr counts over all successful reductions of `u`; empty when
/// `u` cannot be reduced to the empty string.
pub fn snr_counts(u: &LegalString, allowed: RuleSet, cap: usize) -> Result<BTreeSet<usize>> {
    check_cap(u, cap)?;
    Ok(CountMemo::new(allowed).counts(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ls(text: &str) -> LegalString {
        LegalString::parse(text).unwrap()
    }

    #[test]
    fn basic_rule_applications() {
        assert!(apply_string_rule(&ls("22"), StringRule::Snr(2)).unwrap().is_empty());
        assert!(apply_string_rule(&ls("-2-2"), StringRule::Snr(2)).unwrap().is_empty());
        assert_eq!(
            apply_string_rule(&ls("23-23"), StringRule::Spr(2)).unwrap().to_string(),
            "-33"
        );
        assert!(apply_string_rule(&ls("2323"), StringRule::Sdr(2, 3)).unwrap().is_empty());
        assert_eq!(
            apply_string_rule(&ls("2233"), StringRule::Sdr(2, 3))
                .map(|v| v.to_string()),
            Err(Error::RuleNotApplicable("sdr_{2,3}".into()))
        );
        assert!(apply_string_rule(&ls("2332"), StringRule::Snr(2)).is_err());
        assert!(apply_string_rule(&ls("22"), StringRule::Spr(2)).is_err());
    }

    #[test]
    fn sdr_swaps_middle_segments() {
        // u1=4 u2=5 u3=6 u4=7 u5=8 around p=2, q=3
        let u = ls("4 2 5 3 6 2 7 3 8 4 5 6 7 8");
        let v = apply_string_rule(&u, StringRule::Sdr(2, 3)).unwrap();
        assert_eq!(v.as_pointer_string().format_spaced(), "4 7 6 5 8 4 5 6 7 8");
    }

    #[test]
    fn rule_names_round_trip() {
        for r in [StringRule::Snr(2), StringRule::Spr(11), StringRule::Sdr(3, 5)] {
            assert_eq!(r.to_string().parse::<StringRule>().unwrap(), r);
        }
        assert!("snr_{2,3}".parse::<StringRule>().is_err());
    }

    #[test]
    fn enumerates_reductions() {
        let all: Vec<_> = successful_string_reductions(&ls("22"), RuleSet::ALL, 6)
            .unwrap()
            .collect();
        assert_eq!(all, vec![vec![StringRule::Snr(2)]]);
        let empty: Vec<_> = successful_string_reductions(&LegalString::empty(), RuleSet::ALL, 6)
            .unwrap()
            .collect();
        assert_eq!(empty, vec![Vec::<StringRule>::new()]);
        for seq in successful_string_reductions(&ls("223344"), RuleSet::ALL, 6).unwrap() {
            assert_eq!(seq.iter().filter(|r| r.is_negative()).count(), 3);
            assert!(apply_string_sequence(&ls("223344"), &seq).unwrap().is_empty());
        }
    }

    #[test]
    fn counts_match_enumeration() {
        for text in ["2323", "23-23", "72673456-3-245", "2-2", "234432"] {
            let u = ls(text);
            let counts = snr_counts(&u, RuleSet::ALL, 6).unwrap();
            let listed: BTreeSet<usize> = successful_string_reductions(&u, RuleSet::ALL, 6)
                .unwrap()
                .map(|seq| seq.iter().filter(|r| r.is_negative()).count())
                .collect();
            assert_eq!(counts, listed, "{text}");
        }
        assert_eq!(snr_counts(&ls("72673456-3-245"), RuleSet::ALL, 6).unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn restricted_rule_sets() {
        assert!(snr_counts(&ls("2323"), RuleSet::NONE, 6).unwrap().is_empty());
        let only_negative: RuleSet = "snr".parse().unwrap();
        assert_eq!(snr_counts(&ls("223344"), only_negative, 6).unwrap(), BTreeSet::from([3]));
        assert!(snr_counts(&ls("2323"), only_negative, 6).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let u = ls("2233445566778899");
        assert_eq!(
            snr_counts(&u, RuleSet::ALL, 6),
            Err(Error::CapExceeded { size: 8, cap: 6 })
        );
    }
}
