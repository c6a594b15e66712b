//! Closed-form answers for realistic overlap graphs, read off the graph and
//! its directly constructed reduction graph.

use super::RuleSet;
use crate::direct::direct_reduction_graph;
use crate::error::{Error, Result};
use crate::overlap::OverlapGraph;
use crate::pointer::LegalString;
use crate::reduction::ReductionGraph;

/// Number of snr rules in any successful reduction of `u`: one less than the
/// number of components of its reduction graph.
pub fn predicted_negative_rule_count(u: &LegalString) -> Result<usize> {
    if u.is_empty() {
        return Err(Error::EmptyString);
    }
    Ok(ReductionGraph::of(u).component_count() - 1)
}

/// Number of gnr rules in any successful reduction of a realistic `g`: one
/// less than the number of components of `R_γ`.
pub fn predicted_negative_rule_count_graph(g: &OverlapGraph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::InvalidGraph("empty overlap graph".into()));
    }
    Ok(direct_reduction_graph(g)?.component_count() - 1)
}

/// Whether a realistic `g` is successful in `allowed`, without searching.
/// Realism is not checked.
pub fn classify(g: &OverlapGraph, allowed: RuleSet) -> Result<bool> {
    if g.is_empty() {
        return Ok(true);
    }
    let connected = || -> Result<bool> { Ok(direct_reduction_graph(g)?.component_count() == 1) };
    let all_negative = g.positive_set().is_empty();
    let components = g.components();
    let has_positive = |c: &crate::pointer_set::PointerSet| !(c & &g.positive_set()).is_empty();
    let RuleSet {
        negative,
        positive,
        double,
    } = allowed;
    Ok(match (negative, positive, double) {
        (false, false, false) => false,
        (true, false, false) => g.is_discrete() && all_negative,
        (true, true, false) => components
            .iter()
            .filter(|c| c.len() > 1)
            .all(has_positive),
        (true, false, true) => all_negative,
        (true, true, true) => true,
        (false, false, true) => all_negative && connected()?,
        (false, true, false) => components.iter().all(has_positive) && connected()?,
        (false, true, true) => connected()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(text: &str) -> OverlapGraph {
        OverlapGraph::of(&LegalString::parse(text).unwrap())
    }

    #[test]
    fn predicted_counts() {
        assert_eq!(predicted_negative_rule_count(&LegalString::parse("453475623267").unwrap()), Ok(2));
        assert_eq!(predicted_negative_rule_count(&LegalString::parse("72673456-3-245").unwrap()), Ok(1));
        assert_eq!(predicted_negative_rule_count(&LegalString::parse("22").unwrap()), Ok(1));
        assert_eq!(predicted_negative_rule_count(&LegalString::parse("2-2").unwrap()), Ok(0));
        assert_eq!(predicted_negative_rule_count(&LegalString::empty()), Err(Error::EmptyString));
        assert_eq!(predicted_negative_rule_count_graph(&gamma("453475623267")), Ok(2));
        assert_eq!(predicted_negative_rule_count_graph(&gamma("72673456-3-245")), Ok(1));
    }

    #[test]
    fn classifier_on_examples() {
        let g = gamma("453475623267");
        assert!(classify(&g, "gnr,gdr".parse().unwrap()).unwrap());
        assert!(!classify(&g, "gpr,gdr".parse().unwrap()).unwrap());
        assert!(!classify(&g, "gnr".parse().unwrap()).unwrap());
        let h = gamma("72673456-3-245");
        assert!(!classify(&h, "gpr,gdr".parse().unwrap()).unwrap());
        assert!(classify(&h, "gnr,gpr".parse().unwrap()).unwrap());
        assert!(classify(&OverlapGraph::new(), RuleSet::NONE).unwrap());
    }
}
