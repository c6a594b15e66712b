//! Randomised cross-validation over seeded micronuclear arrangements.
//!
//! Trial `t` draws from a ChaCha8 stream keyed by `(seed, t)`, so results do
//! not depend on how rayon schedules the trials.

use geneasm::rewriting::{
    classify, gnr_counts, snr_counts, successful_in, RuleSet, DEFAULT_GRAPH_KAPPA_CAP,
    DEFAULT_STRING_DOMAIN_CAP,
};
use geneasm::sample::random_arrangement;
use geneasm::{
    canonical_labelled, cps_reduction, direct_reduction_graph, MicronuclearArrangement,
    OverlapGraph, ReductionGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub const CHECKS: [&str; 5] = ["rooted", "cps-direct", "snr-count", "gnr-count", "classifier"];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Verdict {
    Pass,
    Fail,
    Skipped,
}

struct Trial {
    arrangement: MicronuclearArrangement,
    verdicts: [Verdict; 5],
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn run_trial(seed: u64, trial: u64, max_kappa: u32) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let kappa = rng.gen_range(2..=max_kappa);
    let arrangement = random_arrangement(kappa, &mut rng);
    let u = arrangement.encode();
    let rg = ReductionGraph::of(&u);
    let g = OverlapGraph::of(&u);
    let expected = rg.component_count() - 1;

    let rooted = verdict(rg.is_rooted());
    let cps_direct = verdict(match direct_reduction_graph(&g) {
        Ok(r) => {
            canonical_labelled(&cps_reduction(&rg)).ok() == canonical_labelled(r.graph()).ok()
        }
        Err(_) => false,
    });
    let snr = if u.domain().len() <= DEFAULT_STRING_DOMAIN_CAP {
        verdict(snr_counts(&u, RuleSet::ALL, DEFAULT_STRING_DOMAIN_CAP)
            .is_ok_and(|c| c.into_iter().eq([expected])))
    } else {
        Verdict::Skipped
    };
    let small_graph = g.kappa() as usize <= DEFAULT_GRAPH_KAPPA_CAP;
    let gnr = if small_graph {
        verdict(gnr_counts(&g, RuleSet::ALL, DEFAULT_GRAPH_KAPPA_CAP)
            .is_ok_and(|c| c.into_iter().eq([expected])))
    } else {
        Verdict::Skipped
    };
    let classifier = if small_graph {
        verdict(RuleSet::all_subsets().into_iter().all(|s| {
            matches!(
                (successful_in(&g, s, DEFAULT_GRAPH_KAPPA_CAP), classify(&g, s)),
                (Ok(a), Ok(b)) if a == b
            )
        }))
    } else {
        Verdict::Skipped
    };
    Trial {
        arrangement,
        verdicts: [rooted, cps_direct, snr, gnr, classifier],
    }
}

pub struct Report {
    pub summary: String,
    pub failures: Vec<String>,
}

pub fn run(trials: u64, max_kappa: u32, seed: u64) -> Report {
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(seed, t, max_kappa))
        .collect();
    let mut summary = String::new();
    let mut failures = Vec::new();
    for (k, name) in CHECKS.iter().enumerate() {
        let count = |v: Verdict| results.iter().filter(|t| t.verdicts[k] == v).count();
        let (failed, skipped) = (count(Verdict::Fail), count(Verdict::Skipped));
        summary.push_str(&format!(
            "check={name} trials={} skipped={skipped} failures={failed}\n",
            trials as usize - skipped
        ));
        for (t, trial) in results.iter().enumerate() {
            if trial.verdicts[k] == Verdict::Fail {
                failures.push(format!(
                    "check={name} trial={t} arrangement=\"{}\" string={}",
                    trial.arrangement,
                    trial.arrangement.encode()
                ));
            }
        }
    }
    Report { summary, failures }
}
