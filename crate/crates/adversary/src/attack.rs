//! Failure-rate estimation on gadgets and amplification on assembled
//! instances.
//!
//! The workflow mirrors the indistinguishability argument behind the local
//! lower bounds: measure how often a locality-`T_v` victim (with `T_v` no
//! larger than the cover's certified radius) breaks inside each cover
//! element of a hard gadget, pick the worst element `i*`, splice `N` copies
//! of its radius-`T` neighborhood into a genuinely easy instance, and watch
//! the per-copy failures multiply: if each copy fails with probability at
//! least `1/k`, the instance survives with probability at most `(1-1/k)^N`.

use gadgets::{
    assemble_cheating_instance, family_host, AssembleTarget, CheatingInstance, CoverFamily,
    SubgraphCover,
};
use graph_core::seed::mix_seed;
use graph_core::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use statrs::distribution::{Beta, ContinuousCDF};

use crate::error::AdversaryError;
use crate::victim::{Locality, Victim};

/// Per-element failure counts of a victim on a covered gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureEstimate {
    /// Number of runs.
    pub trials: u64,
    /// For each cover element, the number of runs with a violation inside it
    /// (a monochromatic edge with both endpoints in the element, or an
    /// element node colored outside `1..=c`).
    pub element_failures: Vec<u64>,
    /// Runs with a violation anywhere in the gadget.
    pub whole_failures: u64,
}

impl FailureEstimate {
    /// Per-element empirical failure rates.
    #[must_use]
    pub fn element_rates(&self) -> Vec<f64> {
        self.element_failures.iter().map(|&f| f as f64 / self.trials as f64).collect()
    }

    /// Whole-gadget empirical failure rate.
    #[must_use]
    pub fn whole_rate(&self) -> f64 {
        self.whole_failures as f64 / self.trials as f64
    }

    /// The element with the highest failure count; ties break to the
    /// smallest index.
    #[must_use]
    pub fn best_element(&self) -> u32 {
        let mut best = 0usize;
        for (i, &count) in self.element_failures.iter().enumerate() {
            if count > self.element_failures[best] {
                best = i;
            }
        }
        best as u32
    }
}

/// Which elements (and whether anything at all) a single coloring violates.
fn violations(
    g: &Graph,
    coloring: &[u32],
    memberships: &[Vec<bool>],
    colors: u32,
) -> (Vec<bool>, bool) {
    let mut flags = vec![false; memberships.len()];
    let mut any = false;
    for (u, v) in g.edges() {
        if coloring[u as usize] == coloring[v as usize] {
            any = true;
            for (flag, member) in flags.iter_mut().zip(memberships) {
                if member[u as usize] && member[v as usize] {
                    *flag = true;
                }
            }
        }
    }
    for (v, &c) in coloring.iter().enumerate() {
        if c < 1 || c > colors {
            any = true;
            for (flag, member) in flags.iter_mut().zip(memberships) {
                if member[v] {
                    *flag = true;
                }
            }
        }
    }
    (flags, any)
}

fn element_memberships(n: usize, cover: &SubgraphCover) -> Vec<Vec<bool>> {
    cover
        .elements
        .iter()
        .map(|e| {
            let mut m = vec![false; n];
            for v in e.iter() {
                m[v as usize] = true;
            }
            m
        })
        .collect()
}

type TrialCounts = (Vec<u64>, u64);

fn count_trials(
    g: &Graph,
    victim: &Victim,
    trials: u64,
    seed: u64,
    memberships: &[Vec<bool>],
) -> Result<TrialCounts, AdversaryError> {
    let k = memberships.len();
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let coloring = victim.run(g, mix_seed(seed, trial));
            if coloring.len() != g.n() {
                return Err(AdversaryError::BadVictimOutput {
                    expected: g.n(),
                    got: coloring.len(),
                });
            }
            Ok(violations(g, &coloring, memberships, victim.colors()))
        })
        .try_fold(
            || (vec![0u64; k], 0u64),
            |mut acc, item| {
                let (flags, any) = item?;
                for (count, flag) in acc.0.iter_mut().zip(&flags) {
                    *count += u64::from(*flag);
                }
                acc.1 += u64::from(any);
                Ok(acc)
            },
        )
        .try_reduce(
            || (vec![0u64; k], 0u64),
            |mut a, b| {
                for (x, y) in a.0.iter_mut().zip(&b.0) {
                    *x += y;
                }
                a.1 += b.1;
                Ok(a)
            },
        )
}

/// Runs `victim` on the covered `host` gadget `trials` times (per-trial
/// seeds derived from `seed`) and counts, per cover element, the runs whose
/// output violates the victim's claim inside that element.
///
/// Refuses victims whose declared locality exceeds the cover radius — their
/// failures could depend on structure the cover does not certify.
///
/// The "whole-gadget failure rate is 1 whenever the claimed palette is
/// smaller than the gadget's chromatic number" invariant needs no solver
/// here: a single clean trial would itself be a proper coloring within the
/// claimed palette, i.e. a constructive proof that the chromatic number is
/// within the claim.
pub fn estimate_failure(
    host: &Graph,
    cover: &SubgraphCover,
    victim: &Victim,
    trials: u64,
    seed: u64,
) -> Result<FailureEstimate, AdversaryError> {
    match victim.locality() {
        Locality::Global => {
            return Err(AdversaryError::LocalityMismatch { declared: None, cover_t: cover.t })
        }
        Locality::Rounds(t_v) if t_v > cover.t => {
            return Err(AdversaryError::LocalityMismatch {
                declared: Some(t_v),
                cover_t: cover.t,
            })
        }
        Locality::Rounds(_) => {}
    }
    if cover.elements.is_empty() {
        return Err(AdversaryError::CoverMismatch("cover has no elements".into()));
    }
    for (i, e) in cover.elements.iter().enumerate() {
        if e.check_range(host.n()).is_err() {
            return Err(AdversaryError::CoverMismatch(format!(
                "element {i} references nodes outside the host"
            )));
        }
    }
    let memberships = element_memberships(host.n(), cover);
    let (element_failures, whole_failures) =
        count_trials(host, victim, trials, seed, &memberships)?;
    Ok(FailureEstimate { trials, element_failures, whole_failures })
}

/// Exact (Clopper–Pearson) 95% confidence interval for a binomial rate.
#[must_use]
pub fn clopper_pearson95(failures: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let (x, n) = (failures as f64, trials as f64);
    let low = if failures == 0 {
        0.0
    } else {
        Beta::new(x, n - x + 1.0).expect("valid Beta parameters").inverse_cdf(0.025)
    };
    let high = if failures == trials {
        1.0
    } else {
        Beta::new(x + 1.0, n - x).expect("valid Beta parameters").inverse_cdf(0.975)
    };
    (low, high)
}

/// How an attack run treated the victim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttackMode {
    /// Locality-bounded victim: estimate per-element rates on the gadget,
    /// assemble copies of the worst element, measure amplified failure.
    Amplify,
    /// Global victim: run it on the assembled instance only, as a sanity
    /// check that the instance really is easy (zero failures expected).
    Sanity,
}

/// Complete record of one attack run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AttackReport {
    /// The gadget family under attack.
    #[serde(flatten)]
    pub family: CoverFamily,
    /// Cover size `k`.
    pub cover_size: u32,
    /// Cover certification radius `T`.
    pub cover_t: u32,
    /// Victim display name.
    pub victim: String,
    /// The palette size the victim claims.
    pub victim_colors: u32,
    /// The victim's declared reading radius (`None` for global victims).
    pub victim_locality: Option<u32>,
    /// Amplify or sanity.
    pub mode: AttackMode,
    /// Runs per phase (gadget estimation and instance measurement alike).
    pub trials: u64,
    /// Gadget-phase counts (absent in sanity mode).
    pub gadget_estimate: Option<FailureEstimate>,
    /// Per-element rates, for convenience (absent in sanity mode).
    pub element_rates: Option<Vec<f64>>,
    /// The element `i*` the attack amplified (absent in sanity mode).
    pub chosen_element: Option<u32>,
    /// Number of embedded copies `N`.
    pub copies: u32,
    /// Assembled instance size.
    pub instance_nodes: usize,
    /// Assembled instance edge count.
    pub instance_edges: usize,
    /// Per-copy failure counts on the assembled instance.
    pub per_copy_failures: Vec<u64>,
    /// Instance-phase failing runs (any copy in amplify mode; any violation
    /// at all in sanity mode).
    pub instance_failures: u64,
    /// `instance_failures / trials`.
    pub instance_rate: f64,
    /// Exact binomial 95% confidence interval for the instance rate.
    pub ci95: (f64, f64),
    /// The amplification prediction `1 - (1 - 1/k)^N`.
    pub theoretical_bound: f64,
    /// Methodological notes fixed by the harness.
    pub notes: Vec<String>,
}

/// Measures per-copy violations on an assembled instance.
fn measure_instance(
    instance: &CheatingInstance,
    victim: &Victim,
    trials: u64,
    seed: u64,
    whole_instance: bool,
) -> Result<(Vec<u64>, u64), AdversaryError> {
    let n = instance.graph.n();
    let memberships: Vec<Vec<bool>> = instance
        .patches
        .iter()
        .map(|p| {
            let mut m = vec![false; n];
            for &v in &p.instance_patch {
                m[v as usize] = true;
            }
            m
        })
        .collect();
    let copies = memberships.len();
    (0..trials)
        .into_par_iter()
        .map(|trial| {
            let coloring = victim.run(&instance.graph, mix_seed(seed, trial));
            if coloring.len() != n {
                return Err(AdversaryError::BadVictimOutput { expected: n, got: coloring.len() });
            }
            let (flags, any) = violations(&instance.graph, &coloring, &memberships, victim.colors());
            let failed = if whole_instance { any } else { flags.iter().any(|&f| f) };
            Ok((flags, failed))
        })
        .try_fold(
            || (vec![0u64; copies], 0u64),
            |mut acc, item| {
                let (flags, failed) = item?;
                for (count, flag) in acc.0.iter_mut().zip(&flags) {
                    *count += u64::from(*flag);
                }
                acc.1 += u64::from(failed);
                Ok(acc)
            },
        )
        .try_reduce(
            || (vec![0u64; copies], 0u64),
            |mut a, b| {
                for (x, y) in a.0.iter_mut().zip(&b.0) {
                    *x += y;
                }
                a.1 += b.1;
                Ok(a)
            },
        )
}

/// Runs the full attack: estimate per-element failure on the gadget, pick
/// the worst element, assemble `copies` embedded copies of it into the
/// `target` shape, and measure the amplified failure rate there.
///
/// Global victims cannot be estimated per element; for them the run degrades
/// to a sanity check — the victim colors the assembled instance (elements
/// assigned round-robin) and any violation at all counts as a failure, with
/// zero failures expected since the instance is a genuine member of the easy
/// family.
pub fn run_attack(
    cover: &SubgraphCover,
    victim: &Victim,
    copies: u32,
    trials: u64,
    seed: u64,
    target: AssembleTarget,
) -> Result<AttackReport, AdversaryError> {
    let host = family_host(cover.family)?;
    let k = cover.elements.len() as u32;
    let estimate_seed = mix_seed(seed, 0);
    let instance_seed = mix_seed(seed, 1);
    let theoretical_bound = 1.0 - (1.0 - 1.0 / f64::from(k)).powi(copies as i32);

    let global = matches!(victim.locality(), Locality::Global);
    let (mode, estimate, chosen, x, mut notes) = if global {
        let x: Vec<u32> = (0..copies).map(|j| j % k).collect();
        let notes = vec![
            "sanity mode: global victim evaluated on the whole assembled instance; \
             the instance is a genuine easy-family member, so zero failures are expected"
                .to_string(),
        ];
        (AttackMode::Sanity, None, None, x, notes)
    } else {
        let estimate = estimate_failure(&host, cover, victim, trials, estimate_seed)?;
        let chosen = estimate.best_element();
        let x = vec![chosen; copies as usize];
        let notes = vec![
            "element choice: argmax of empirical per-element failure rates, \
             ties broken toward the smallest index"
                .to_string(),
        ];
        (AttackMode::Amplify, Some(estimate), Some(chosen), x, notes)
    };
    notes.push(
        "amplification assumes classically independent per-copy randomness; \
         dependent-output models are out of scope"
            .to_string(),
    );

    let instance = assemble_cheating_instance(cover, &x, target)?;
    let (per_copy_failures, instance_failures) =
        measure_instance(&instance, victim, trials, instance_seed, global)?;
    let (ci_low, ci_high) = clopper_pearson95(instance_failures, trials);

    Ok(AttackReport {
        family: cover.family,
        cover_size: k,
        cover_t: cover.t,
        victim: victim.name().to_string(),
        victim_colors: victim.colors(),
        victim_locality: match victim.locality() {
            Locality::Rounds(t) => Some(t),
            Locality::Global => None,
        },
        mode,
        trials,
        element_rates: estimate.as_ref().map(FailureEstimate::element_rates),
        gadget_estimate: estimate,
        chosen_element: chosen,
        copies,
        instance_nodes: instance.graph.n(),
        instance_edges: instance.graph.m(),
        per_copy_failures,
        instance_failures,
        instance_rate: instance_failures as f64 / trials as f64,
        ci95: (ci_low, ci_high),
        theoretical_bound,
        notes,
    })
}
