use std::time::Instant;

use qid_core::exactcore::SeededSampler;
use qid_core::mutation::ExponentShift;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::config::{Identity, SuiteConfig};
use crate::report::{FailedCheck, Report, Status, TrialRecord};
use crate::suites::{run_trial, CellOutcome, TrialContext};

/// Offset mixed into the base seed for one `(identity, n, trial)` cell.
pub fn cell_offset(identity: Identity, n: usize, trial: u32) -> u64 {
    let mut h = Sha256::new();
    h.update(identity.name().as_bytes());
    h.update([0]);
    h.update((n as u64).to_le_bytes());
    h.update(trial.to_le_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("8 bytes"))
}

/// Every `(identity, n, trial)` cell selected by `cfg`.
pub fn cells(cfg: &SuiteConfig) -> Vec<(Identity, usize, u32)> {
    let mut out = Vec::new();
    for id in cfg.identity.expand() {
        for n in cfg.n_min.max(id.min_n())..=cfg.n_max {
            for trial in 0..cfg.trials {
                out.push((id, n, trial));
            }
        }
    }
    out
}

pub fn run_cell(cfg: &SuiteConfig, identity: Identity, n: usize, trial: u32) -> TrialRecord {
    let offset = cell_offset(identity, n, trial);
    let mut sampler = SeededSampler::new(cfg.seed ^ offset);
    let ctx = TrialContext {
        backend: cfg.det_backend.into(),
        shift: ExponentShift(cfg.inject_mutation),
    };
    let start = Instant::now();
    let outcome = run_trial(identity, n, &mut sampler, ctx);
    let elapsed_micros = start.elapsed().as_micros() as u64;
    let mut rec = TrialRecord {
        identity,
        n,
        trial,
        seed_offset: offset,
        parameters: Map::new(),
        status: Status::Pass,
        checks: 0,
        failures: Vec::new(),
        error: None,
        rejection: None,
        elapsed_micros,
    };
    match outcome {
        CellOutcome::Done(t) => {
            rec.parameters = t
                .parameters
                .into_iter()
                .map(|(k, v)| (k, Value::String(v.to_string())))
                .collect();
            rec.checks = t.checks.len();
            rec.failures = t
                .checks
                .into_iter()
                .filter(|c| !c.sides.holds())
                .map(|c| FailedCheck {
                    check: c.label,
                    lhs: c.sides.lhs.to_string(),
                    rhs: c.sides.rhs.to_string(),
                })
                .collect();
            if !rec.failures.is_empty() {
                rec.status = Status::Fail;
            }
        }
        CellOutcome::Rejected(reason) => {
            rec.status = Status::RejectedSample;
            rec.rejection = Some(reason);
        }
        CellOutcome::Error(e) => {
            rec.status = Status::Fail;
            rec.error = Some(e);
        }
    }
    rec
}

/// Runs every cell on all available cores. The report is sorted, so the
/// schedule never shows in the output.
pub fn run_suite(cfg: &SuiteConfig) -> Report {
    let cells = cells(cfg);
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(cells.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let records = std::sync::Mutex::new(Vec::with_capacity(cells.len()));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(&(id, n, trial)) = cells.get(i) else {
                    break;
                };
                let rec = run_cell(cfg, id, n, trial);
                records.lock().expect("no poisoned workers").push(rec);
            });
        }
    });
    Report::new(
        cfg.clone(),
        records.into_inner().expect("no poisoned workers"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_depend_on_every_coordinate() {
        let base = cell_offset(Identity::Kara, 2, 3);
        assert_eq!(base, cell_offset(Identity::Kara, 2, 3));
        assert_ne!(base, cell_offset(Identity::Kara, 2, 4));
        assert_ne!(base, cell_offset(Identity::Kara, 3, 3));
        assert_ne!(base, cell_offset(Identity::Fnk, 2, 3));
    }

    #[test]
    fn cells_respect_suite_minimum() {
        let cfg = SuiteConfig {
            identity: Identity::All,
            n_min: 0,
            n_max: 0,
            trials: 2,
            ..SuiteConfig::default()
        };
        let ids: Vec<Identity> = cells(&cfg).into_iter().map(|c| c.0).collect();
        assert_eq!(
            ids,
            vec![
                Identity::JacksonCorollary,
                Identity::JacksonCorollary,
                Identity::Jackson8phi7,
                Identity::Jackson8phi7
            ]
        );
    }

    #[test]
    fn default_run_passes_and_is_reproducible() {
        let cfg = SuiteConfig {
            trials: 2,
            n_max: 2,
            ..SuiteConfig::default()
        };
        let a = run_suite(&cfg);
        assert!(a.all_passed(), "{}", a.to_text());
        assert_eq!(a.summary.overall.total, 10 * 2 * 2);
        assert_eq!(a.without_timings(), run_suite(&cfg).without_timings());
    }

    #[test]
    fn backends_give_identical_verdicts() {
        let cfg = SuiteConfig {
            identity: Identity::Kara,
            trials: 3,
            ..SuiteConfig::default()
        };
        let ff = SuiteConfig {
            det_backend: crate::config::Backend::FractionFree,
            ..cfg.clone()
        };
        let (a, b) = (run_suite(&cfg), run_suite(&ff));
        assert!(a.all_passed() && b.all_passed());
        assert_eq!(
            a.records.iter().map(|r| &r.parameters).collect::<Vec<_>>(),
            b.records.iter().map(|r| &r.parameters).collect::<Vec<_>>()
        );
    }
}
