//! The graph pointer reduction system on signed overlap graphs.
//!
//! * `gnr_p` removes an isolated negative vertex.
//! * `gpr_p` removes a positive vertex, complementing the edges among its
//!   neighbours and flipping their signs.
//! * `gdr_{p,q}` removes two adjacent negative vertices and toggles `{x, y}`
//!   when `[x∈N(p), y∈N(q)] + [x∈N(q), y∈N(p)]` is odd.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::search::{CountMemo, Reducible, Reductions};
use super::{split_rule, RuleSet};
use crate::error::{Error, Result};
use crate::overlap::{OverlapGraph, Sign};
use crate::pointer_set::PointerSet;

/// Largest `kappa = |dom| + 1` the exhaustive graph search accepts by default.
pub const DEFAULT_GRAPH_KAPPA_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphRule {
    Gnr(u32),
    Gpr(u32),
    /// Always stored with `p < q`.
    Gdr(u32, u32),
}

impl GraphRule {
    pub fn is_negative(&self) -> bool {
        matches!(self, GraphRule::Gnr(_))
    }
}

impl fmt::Display for GraphRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphRule::Gnr(p) => write!(f, "gnr_{p}"),
            GraphRule::Gpr(p) => write!(f, "gpr_{p}"),
            GraphRule::Gdr(p, q) => write!(f, "gdr_{{{p},{q}}}"),
        }
    }
}

impl FromStr for GraphRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match split_rule(s)? {
            ("gnr", v) if v.len() == 1 => Ok(GraphRule::Gnr(v[0])),
            ("gpr", v) if v.len() == 1 => Ok(GraphRule::Gpr(v[0])),
            ("gdr", v) if v.len() == 2 && v[0] != v[1] => {
                Ok(GraphRule::Gdr(v[0].min(v[1]), v[0].max(v[1])))
            }
            _ => Err(Error::MalformedRule(s.into())),
        }
    }
}

pub fn applicable_graph_rules(g: &OverlapGraph, allowed: RuleSet) -> Vec<GraphRule> {
    let mut out = Vec::new();
    for (p, sign) in g.vertices() {
        let isolated = g.neighbours(p).map_or(true, PointerSet::is_empty);
        match sign {
            Sign::Negative if allowed.negative && isolated => out.push(GraphRule::Gnr(p)),
            Sign::Positive if allowed.positive => out.push(GraphRule::Gpr(p)),
            _ => {}
        }
    }
    if allowed.double {
        for (p, q) in g.edges() {
            if g.sign(p) == Ok(Sign::Negative) && g.sign(q) == Ok(Sign::Negative) {
                out.push(GraphRule::Gdr(p, q));
            }
        }
    }
    out
}

fn inapplicable(rule: GraphRule) -> Error {
    Error::RuleNotApplicable(rule.to_string())
}

pub fn apply_graph_rule(g: &OverlapGraph, rule: GraphRule) -> Result<OverlapGraph> {
    let sign = |p: u32| g.sign(p).map_err(|_| inapplicable(rule));
    let mut out = g.clone();
    match rule {
        GraphRule::Gnr(p) => {
            if sign(p)? != Sign::Negative || !g.neighbours(p)?.is_empty() {
                return Err(inapplicable(rule));
            }
            out.remove_vertex(p)?;
        }
        GraphRule::Gpr(p) => {
            if sign(p)? != Sign::Positive {
                return Err(inapplicable(rule));
            }
            let n: Vec<u32> = g.neighbours(p)?.iter().collect();
            out.remove_vertex(p)?;
            for (i, &x) in n.iter().enumerate() {
                out.set_sign(x, g.sign(x)?.flip())?;
                for &y in &n[i + 1..] {
                    out.toggle_edge(x, y)?;
                }
            }
        }
        GraphRule::Gdr(p, q) => {
            if sign(p)? != Sign::Negative || sign(q)? != Sign::Negative || !g.has_edge(p, q) {
                return Err(inapplicable(rule));
            }
            let mut np = g.neighbours(p)?.clone();
            let mut nq = g.neighbours(q)?.clone();
            np.remove(q);
            nq.remove(p);
            out.remove_vertex(p)?;
            out.remove_vertex(q)?;
            let touched: Vec<u32> = (&np | &nq).iter().collect();
            for (i, &x) in touched.iter().enumerate() {
                for &y in &touched[i + 1..] {
                    let a = np.contains(x) && nq.contains(y);
                    let b = nq.contains(x) && np.contains(y);
                    if a != b {
                        out.toggle_edge(x, y)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Applies rules in order.
pub fn apply_graph_sequence(g: &OverlapGraph, rules: &[GraphRule]) -> Result<OverlapGraph> {
    rules
        .iter()
        .try_fold(g.clone(), |acc, &r| apply_graph_rule(&acc, r))
}

impl Reducible for OverlapGraph {
    type Rule = GraphRule;
    type Key = OverlapGraph;

    fn is_reduced(&self) -> bool {
        self.is_empty()
    }

    fn key(&self) -> OverlapGraph {
        self.clone()
    }

    fn rules(&self, allowed: RuleSet) -> Vec<GraphRule> {
        applicable_graph_rules(self, allowed)
    }

    fn apply(&self, rule: &GraphRule) -> Self {
        apply_graph_rule(self, *rule).expect("rule was listed as applicable")
    }

    fn is_negative(rule: &GraphRule) -> bool {
        rule.is_negative()
    }
}

fn check_cap(g: &OverlapGraph, cap: usize) -> Result<()> {
    let size = g.kappa() as usize;
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(())
}

/// Every successful reduction of `g` using `allowed`, in application order.
/// `cap` bounds `kappa`.
pub fn successful_graph_reductions(
    g: &OverlapGraph,
    allowed: RuleSet,
    cap: usize,
) -> Result<Reductions<OverlapGraph>> {
    check_cap(g, cap)?;
    Ok(Reductions::new(g.clone(), allowed))
}

/// The set of gnr counts over all successful reductions of `g`.
pub fn gnr_counts(g: &OverlapGraph, allowed: RuleSet, cap: usize) -> Result<BTreeSet<usize>> {
    check_cap(g, cap)?;
    Ok(CountMemo::new(allowed).counts(g))
}

/// Whether some sequence of rules from `allowed` reduces `g` to the empty
/// graph, decided by exhaustive search.
pub fn successful_in(g: &OverlapGraph, allowed: RuleSet, cap: usize) -> Result<bool> {
    Ok(!gnr_counts(g, allowed, cap)?.is_empty())
}
