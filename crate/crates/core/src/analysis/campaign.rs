//! Seeded identity-testing campaigns over many random specs.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::instance::{analyze_instance, Check};
use super::pi2::verify_pi2_with;
use super::sampling::{forcings_for, sample_spec, sampling_fields, Forcing};
use super::tables::{
    apm_product_identity, factor_for_type, predicate_report, relation_check, self_dual_array_check,
};
use super::AnalysisError;
use crate::field::FieldContext;
use crate::parray::{build_parameter_array, LeonardType, TypeSpec};
use crate::realization::intersection_a_closed;
use crate::zerodiag::{compute_apm, matrix_m};

/// How much of the pipeline each sample goes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    /// Array-level data only: closed-form `a`, `M`, the tables and pi2.
    Tables,
    /// Matrices, idempotents, kernels and every cross-check.
    Full,
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Depth::Tables => "tables",
            Depth::Full => "full",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignConfig {
    pub types: Vec<LeonardType>,
    pub d_min: usize,
    pub d_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub height: u32,
    /// Add the condition-forced cells next to the unconditioned ones.
    pub forced: bool,
    pub depth: Depth,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            types: LeonardType::ALL.to_vec(),
            d_min: 3,
            d_max: 6,
            trials: 20,
            seed: 0,
            height: 12,
            forced: true,
            depth: Depth::Full,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellKey {
    pub kind: LeonardType,
    pub forcing: Forcing,
    pub d: usize,
    pub field: FieldContext,
}

impl fmt::Display for CellKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "type={} forcing={} d={} field={}",
            self.kind, self.forcing, self.d, self.field
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellFailure {
    pub trial: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub key: CellKey,
    pub trials: usize,
    pub passes: usize,
    pub failures: Vec<CellFailure>,
    pub skipped: usize,
    /// Instances with `dim Z` equal to 0, 1, 2.
    pub dim_counts: [usize; 3],
}

impl CellReport {
    pub fn failed_instances(&self) -> usize {
        self.trials - self.passes - self.skipped
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub cells: Vec<CellReport>,
}

impl CampaignReport {
    pub fn total_failures(&self) -> usize {
        self.cells.iter().map(CellReport::failed_instances).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_failures() == 0
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        let types: Vec<&str> = c.types.iter().map(|t| t.name()).collect();
        writeln!(
            f,
            "campaign seed={} trials={} height={} d={}..{} depth={} forced={} types={}",
            c.seed,
            c.trials,
            c.height,
            c.d_min,
            c.d_max,
            c.depth,
            c.forced,
            types.join(",")
        )?;
        let (mut instances, mut passes, mut skipped) = (0, 0, 0);
        for cell in &self.cells {
            writeln!(
                f,
                "cell {} trials={} passes={} failures={} skipped={} dimz={}/{}/{}",
                cell.key,
                cell.trials,
                cell.passes,
                cell.failed_instances(),
                cell.skipped,
                cell.dim_counts[0],
                cell.dim_counts[1],
                cell.dim_counts[2]
            )?;
            for fail in &cell.failures {
                writeln!(f, "  failure trial={} check={} detail={}", fail.trial, fail.check, fail.detail)?;
            }
            instances += cell.trials;
            passes += cell.passes;
            skipped += cell.skipped;
        }
        writeln!(
            f,
            "summary cells={} instances={} passes={} failures={} skipped={}",
            self.cells.len(),
            instances,
            passes,
            self.total_failures(),
            skipped
        )
    }
}

/// Every cell the configuration asks for, in report order.
pub fn campaign_cells(config: &CampaignConfig) -> Vec<CellKey> {
    let mut cells = Vec::new();
    for &kind in &config.types {
        for d in config.d_min..=config.d_max {
            if kind == LeonardType::Orphan && d != 3 {
                continue;
            }
            for field in sampling_fields(kind) {
                let forcings = if config.forced {
                    forcings_for(kind, d)
                } else {
                    vec![Forcing::None]
                };
                for forcing in forcings {
                    cells.push(CellKey {
                        kind,
                        forcing,
                        d,
                        field: field.clone(),
                    });
                }
            }
        }
    }
    cells
}

/// Per-cell seed: FNV-1a over the cell key, folded into the campaign seed.
fn cell_seed(seed: u64, key: &CellKey) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in key.to_string().bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    // splitmix64 finalizer
    let mut z = h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Run every cell. Cells run in parallel; the report keeps cell order.
pub fn pit_campaign(config: &CampaignConfig) -> Result<CampaignReport, AnalysisError> {
    if config.trials == 0 {
        return Err(AnalysisError::NoTrials);
    }
    if config.d_min < 3 || config.d_min > config.d_max {
        return Err(AnalysisError::BadDiameterRange {
            min: config.d_min,
            max: config.d_max,
        });
    }
    let cells = campaign_cells(config)
        .into_par_iter()
        .map(|key| run_cell(config, key))
        .collect();
    Ok(CampaignReport {
        config: config.clone(),
        cells,
    })
}

/// The specs a cell draws, in trial order; `None` where sampling gave up.
pub fn cell_samples(config: &CampaignConfig, key: &CellKey) -> Vec<Option<TypeSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cell_seed(config.seed, key));
    (0..config.trials)
        .map(|_| sample_spec(key.kind, key.d, &key.field, key.forcing, &mut rng, config.height).ok())
        .collect()
}

fn run_cell(config: &CampaignConfig, key: CellKey) -> CellReport {
    let samples = cell_samples(config, &key);
    let mut report = CellReport {
        key,
        trials: config.trials,
        passes: 0,
        failures: Vec::new(),
        skipped: 0,
        dim_counts: [0; 3],
    };
    for (trial, spec) in samples.into_iter().enumerate() {
        let Some(spec) = spec else {
            report.skipped += 1;
            continue;
        };
        let outcome = match config.depth {
            Depth::Tables => table_checks(&spec),
            Depth::Full => analyze_instance(&spec).map(|a| (a.z.dim_z, a.checks)),
        };
        match outcome {
            Ok((dim, checks)) => {
                if let Some(slot) = report.dim_counts.get_mut(dim) {
                    *slot += 1;
                }
                let mut failed = false;
                for c in checks.into_iter().filter(|c| !c.passed) {
                    failed = true;
                    report.failures.push(CellFailure {
                        trial,
                        check: c.name.to_string(),
                        detail: c.detail.unwrap_or_default(),
                    });
                }
                if !failed {
                    report.passes += 1;
                }
            }
            Err(err) => report.failures.push(CellFailure {
                trial,
                check: "pipeline".into(),
                detail: err.to_string(),
            }),
        }
    }
    report
}

fn check(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> Check {
    Check {
        name,
        passed,
        detail: (!passed).then(detail),
    }
}

/// The array-level subset of the checks, without building matrices.
pub fn table_checks(spec: &TypeSpec) -> Result<(usize, Vec<Check>), AnalysisError> {
    let p = build_parameter_array(spec)?;
    let ts = p.theta_star();
    let a = intersection_a_closed(&p);
    let rank = matrix_m(&a, ts).rank();
    let dim = 4usize.checked_sub(rank).ok_or(AnalysisError::RankOutOfRange(rank))?;
    let pred = predicate_report(spec)?;
    let apm = compute_apm(&a, ts);
    let mut checks = Vec::new();
    let pi2 = factor_for_type(spec).and_then(|f| verify_pi2_with(&a, ts, &f));
    checks.push(check("pi2", pi2.is_ok(), || pi2.as_ref().err().map(ToString::to_string).unwrap_or_default()));
    checks.push(check("z_nonzero_vs_rank", pred.z_nonzero == (dim > 0), || {
        format!("table says {}, dim Z = {dim}", pred.z_nonzero)
    }));
    checks.push(check("dim2_vs_rank", pred.dim2 == (dim == 2), || {
        format!("table says {}, dim Z = {dim}", pred.dim2)
    }));
    let constant = a.iter().all(|x| x == &a[0]);
    checks.push(check("dim2_vs_constant_a", constant == (dim == 2), String::new));
    if pred.z_nonzero {
        let rel = relation_check(spec, &apm);
        checks.push(check("relation", rel.is_ok(), || rel.as_ref().err().map(ToString::to_string).unwrap_or_default()));
    }
    let product = apm_product_identity(&apm);
    checks.push(check("apm_routes", product == (dim > 0), || {
        format!("dim Z = {dim}, product identity {product}")
    }));
    let by_array = self_dual_array_check(&p)?;
    checks.push(check(
        "spin_routes",
        pred.spin == (by_array && dim > 0) && pred.spin == (by_array && product),
        || format!("spin {} vs self-dual {by_array}, dim Z {dim}", pred.spin),
    ));
    Ok((dim, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_layout() {
        let config = CampaignConfig {
            types: vec![LeonardType::Orphan, LeonardType::Krawtchouk],
            d_min: 3,
            d_max: 4,
            ..CampaignConfig::default()
        };
        let cells = campaign_cells(&config);
        // Orphan: d=3 only, two fields, none + self-dual. Krawtchouk: 4 forcings per d.
        assert_eq!(cells.len(), 4 + 8);
        assert_eq!(cells[0].to_string(), "type=orphan forcing=none d=3 field=GF(2^2)");
    }

    #[test]
    fn small_campaign_is_clean_and_deterministic() {
        let config = CampaignConfig {
            types: vec![LeonardType::Krawtchouk, LeonardType::Orphan, LeonardType::Hahn],
            d_min: 3,
            d_max: 4,
            trials: 3,
            seed: 7,
            ..CampaignConfig::default()
        };
        let first = pit_campaign(&config).unwrap();
        assert!(first.is_clean(), "{first}");
        let second = pit_campaign(&config).unwrap();
        assert_eq!(first.to_string(), second.to_string());
    }

    #[test]
    fn rejects_bad_config() {
        let mut config = CampaignConfig {
            trials: 0,
            ..CampaignConfig::default()
        };
        assert!(matches!(pit_campaign(&config), Err(AnalysisError::NoTrials)));
        config.trials = 1;
        config.d_min = 2;
        assert!(matches!(pit_campaign(&config), Err(AnalysisError::BadDiameterRange { .. })));
    }
}
