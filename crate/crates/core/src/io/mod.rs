//! Configuration files, scenario execution, CSV output and table reproduction.

#[allow(non_snake_case)] // unit suffixes in key names keep their SI capitalization
pub mod config;
pub mod csv;
#[allow(non_snake_case)]
pub mod tables;

pub use config::{parse_config, serialize_config, ConfigFile, ScenarioConfig};
pub use tables::{reproduce_table, reproduce_table_with, TableLine, TableReport, TABLE_NAMES};

use crate::error::Result;
use crate::model::build_model;
use crate::reference::{self, ReferenceResponse};
use crate::solver::{run_history, ResultRow, RunOptions};

/// Runs the configured history and returns one row per step.
pub fn run_scenario(config: &ScenarioConfig) -> Result<Vec<ResultRow>> {
    let model = build_model(&config.geometry, &config.materials, config.n_el)?;
    let options = RunOptions {
        kinematics: config.element_kinematics(),
        temperature: config.temperature,
        solver: config.solver,
    };
    run_history(&model, &config.load, &config.time_grid()?, &options)
}

/// Runs the scenario and writes its CSV to `out`.
pub fn run_scenario_csv<W: std::io::Write>(config: &ScenarioConfig, out: W) -> Result<Vec<ResultRow>> {
    let rows = run_scenario(config)?;
    csv::write_rows(out, &rows)?;
    Ok(rows)
}

/// Monolithic and layered limits at the peak load of the scenario.
pub fn scenario_limits(config: &ScenarioConfig) -> Result<(ReferenceResponse, ReferenceResponse)> {
    let q = config.load.peak();
    let kin = config.element_kinematics();
    let (mon, lay) = rayon::join(
        || reference::monolithic_limit(&config.geometry, &config.materials, q, config.n_el, kin),
        || reference::layered_limit(&config.geometry, &config.materials, q, config.n_el, kin),
    );
    Ok((mon?, lay?))
}
