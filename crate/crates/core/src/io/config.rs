//! Scenario configuration files (TOML, unit-bearing keys).

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::elements::Kinematics;
use crate::error::{Error, Result};
use crate::material::{ConstitutiveClosure, GlassMaterial, MaxwellUnit, PronyChain, WlfParams};
use crate::model::{InterlayerMaterial, LaminateGeometry, Materials, Support, DEFAULT_N_EL};
use crate::presets;
use crate::solver::{GridSegment, LoadHistory, SolverConfig, TimeGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupportKind {
    FixedEnd,
    SimplySupported,
    TwoSpanContinuous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    K,
    Nu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KinematicsKind {
    Vk,
    Fs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometric {
    Linear,
    Nonlinear,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h2_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h3_m: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<SupportKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub span1_m: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub glass_young_Pa: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub glass_poisson: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<ClosureKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bulk_modulus_Pa: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interlayer_poisson: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wlf_c1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wlf_c2_C: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wlf_reference_C: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prony_g_inf_Pa: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prony_moduli_Pa: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prony_times_s: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoadSection {
    /// Ramp-and-hold intensity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intensity_N_per_m: Option<f64>,
    /// Explicit piecewise-linear history as `[time_s, intensity_N_per_m]` pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakpoints_s_N_per_m: Option<Vec<[f64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub temperature_C: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentSpec {
    pub end_s: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kinematics: Option<KinematicsKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geometric: Option<Geometric>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_el: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_newton_iters: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pivot_tol: Option<f64>,
    /// Shorthand for the default three-segment grid ending at this time.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end_time_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<SegmentSpec>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub csv_path: Option<PathBuf>,
}

/// The file as written, before defaults and presets are applied.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub geometry: GeometrySection,
    #[serde(default)]
    pub material: MaterialSection,
    #[serde(default)]
    pub load: LoadSection,
    #[serde(default)]
    pub solver: SolverSection,
    #[serde(default)]
    pub output: OutputSection,
}

/// A fully resolved scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub geometry: LaminateGeometry,
    pub materials: Materials,
    pub kinematics: KinematicsKind,
    pub geometric: Geometric,
    pub load: LoadHistory,
    /// Temperature [°C].
    pub temperature: f64,
    pub grid: Vec<GridSegment>,
    pub n_el: usize,
    pub solver: SolverConfig,
    pub csv_path: Option<PathBuf>,
}

/// Scenario presets: geometry with its load intensity [N/m] and temperature [°C].
pub const PRESETS: [&str; 5] = ["geometry-I", "geometry-II", "beam-4/0.38/8", "beam-4/0.76/8", "beam-4/0.38/4"];

fn preset(name: &str) -> Result<(LaminateGeometry, f64, f64, f64)> {
    let beams = presets::validation_beams();
    let v = |i: usize| (beams[i].geometry, beams[i].load, beams[i].temperature, presets::VALIDATION_DURATION);
    Ok(match name {
        "geometry-I" => (presets::geometry_i(), 10.0, 25.0, 1e5),
        "geometry-II" => (presets::geometry_ii(), 10.0, 25.0, 1e5),
        "beam-4/0.38/8" => v(0),
        "beam-4/0.76/8" => v(1),
        "beam-4/0.38/4" => v(2),
        other => {
            return Err(Error::config(
                "geometry.preset",
                format!("unknown preset `{other}` (known: {})", PRESETS.join(", ")),
            ))
        }
    })
}

fn required<T: Copy>(value: Option<T>, fallback: Option<T>, field: &str) -> Result<T> {
    value
        .or(fallback)
        .ok_or_else(|| Error::config(field, "missing required key"))
}

fn positive(value: f64, field: &str) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::config(field, format!("must be positive, got {value}")))
    }
}

impl ConfigFile {
    pub fn resolve(&self) -> Result<ScenarioConfig> {
        let base = self.geometry.preset.as_deref().map(preset).transpose()?;
        let g = &self.geometry;
        let pg = base.map(|b| b.0);
        let span = positive(required(g.span_m, pg.map(|p| p.span), "geometry.span_m")?, "geometry.span_m")?;
        let width = positive(required(g.width_m, pg.map(|p| p.width), "geometry.width_m")?, "geometry.width_m")?;
        let h1 = positive(required(g.h1_m, pg.map(|p| p.thickness[0]), "geometry.h1_m")?, "geometry.h1_m")?;
        let h2 = positive(required(g.h2_m, pg.map(|p| p.thickness[1]), "geometry.h2_m")?, "geometry.h2_m")?;
        let h3 = positive(required(g.h3_m, pg.map(|p| p.thickness[2]), "geometry.h3_m")?, "geometry.h3_m")?;
        let preset_support = pg.map(|p| match p.support {
            Support::FixedEnd => (SupportKind::FixedEnd, None),
            Support::SimplySupported => (SupportKind::SimplySupported, None),
            Support::TwoSpanContinuous { span1 } => (SupportKind::TwoSpanContinuous, Some(span1)),
        });
        let kind = required(g.support, preset_support.map(|p| p.0), "geometry.support")?;
        let support = match kind {
            SupportKind::FixedEnd => Support::FixedEnd,
            SupportKind::SimplySupported => Support::SimplySupported,
            SupportKind::TwoSpanContinuous => Support::TwoSpanContinuous {
                span1: positive(
                    required(g.span1_m, preset_support.and_then(|p| p.1), "geometry.span1_m")?,
                    "geometry.span1_m",
                )?,
            },
        };
        let geometry = LaminateGeometry {
            span,
            width,
            thickness: [h1, h2, h3],
            support,
        };
        geometry.validate()?;

        let m = &self.material;
        let glass_default = presets::glass();
        let glass = GlassMaterial {
            young: positive(m.glass_young_Pa.unwrap_or(glass_default.young), "material.glass_young_Pa")?,
            poisson: m.glass_poisson.unwrap_or(glass_default.poisson),
        };
        if !(-1.0 < glass.poisson && glass.poisson < 0.5) {
            return Err(Error::config("material.glass_poisson", "must lie in (-1, 0.5)"));
        }
        let closure = match m.closure.unwrap_or(ClosureKind::Nu) {
            ClosureKind::K => ConstitutiveClosure::ConstantBulk {
                bulk_modulus: positive(
                    m.bulk_modulus_Pa.unwrap_or(presets::PVB_BULK_MODULUS),
                    "material.bulk_modulus_Pa",
                )?,
            },
            ClosureKind::Nu => {
                let nu = m.interlayer_poisson.unwrap_or(presets::PVB_POISSON);
                if !(0.0..0.5).contains(&nu) {
                    return Err(Error::config("material.interlayer_poisson", "must lie in [0, 0.5)"));
                }
                ConstitutiveClosure::ConstantPoisson { poisson: nu }
            }
        };
        let w = presets::pvb_wlf();
        let wlf = WlfParams::new(
            m.wlf_c1.unwrap_or(w.c1),
            m.wlf_c2_C.unwrap_or(w.c2),
            m.wlf_reference_C.unwrap_or(w.t0),
        )
        .map_err(|e| Error::config("material.wlf_c2_C", e.to_string()))?;
        let chain = match (&m.prony_moduli_Pa, &m.prony_times_s) {
            (None, None) => {
                let c = presets::pvb_chain();
                match m.prony_g_inf_Pa {
                    Some(g) => PronyChain::new(positive(g, "material.prony_g_inf_Pa")?, c.units().to_vec())
                        .map_err(|e| Error::config("material.prony_g_inf_Pa", e.to_string()))?,
                    None => c,
                }
            }
            (Some(moduli), Some(times)) => {
                if moduli.len() != times.len() {
                    return Err(Error::config(
                        "material.prony_moduli_Pa",
                        format!("{} moduli but {} relaxation times", moduli.len(), times.len()),
                    ));
                }
                let g_inf = required(m.prony_g_inf_Pa, None, "material.prony_g_inf_Pa")?;
                let units = moduli
                    .iter()
                    .zip(times)
                    .map(|(&modulus, &relaxation_time)| MaxwellUnit {
                        modulus,
                        relaxation_time,
                    })
                    .collect();
                PronyChain::new(g_inf, units).map_err(|e| Error::config("material.prony_moduli_Pa", e.to_string()))?
            }
            (Some(_), None) => return Err(Error::config("material.prony_times_s", "missing required key")),
            (None, Some(_)) => return Err(Error::config("material.prony_moduli_Pa", "missing required key")),
        };
        let materials = Materials {
            glass,
            interlayer: InterlayerMaterial { chain, wlf, closure },
        };

        let l = &self.load;
        let load = match (&l.breakpoints_s_N_per_m, l.intensity_N_per_m) {
            (Some(_), Some(_)) => {
                return Err(Error::config(
                    "load.breakpoints_s_N_per_m",
                    "give either intensity_N_per_m or breakpoints_s_N_per_m, not both",
                ))
            }
            (Some(bp), None) => LoadHistory::new(bp.iter().map(|p| (p[0], p[1])).collect())
                .map_err(|e| Error::config("load.breakpoints_s_N_per_m", e.to_string()))?,
            (None, q) => {
                let q = required(q, base.map(|b| b.1), "load.intensity_N_per_m")?;
                if !q.is_finite() {
                    return Err(Error::config("load.intensity_N_per_m", "must be finite"));
                }
                LoadHistory::ramp_and_hold(q)
            }
        };
        let temperature = required(l.temperature_C, base.map(|b| b.2), "load.temperature_C")?;
        wlf.shift_factor(temperature)
            .map_err(|e| Error::config("load.temperature_C", e.to_string()))?;

        let s = &self.solver;
        let grid = match (&s.grid, s.end_time_s) {
            (Some(_), Some(_)) => {
                return Err(Error::config("solver.grid", "give either grid or end_time_s, not both"));
            }
            (Some(g), None) => g
                .iter()
                .map(|seg| GridSegment {
                    end: seg.end_s,
                    steps: seg.steps,
                })
                .collect(),
            (None, end) => {
                let end = positive(end.or(base.map(|b| b.3)).unwrap_or(1e5), "solver.end_time_s")?;
                if end <= 1e-5 {
                    return Err(Error::config("solver.end_time_s", "must exceed the 1e-5 s load ramp"));
                }
                TimeGrid::standard_segments(end)
            }
        };
        let time_grid = TimeGrid::from_segments(&grid)?;
        time_grid.check_breakpoints(&load)?;
        let defaults = SolverConfig::default();
        let solver = SolverConfig {
            eps1: positive(s.eps1.unwrap_or(defaults.eps1), "solver.eps1")?,
            eps2: positive(s.eps2.unwrap_or(defaults.eps2), "solver.eps2")?,
            max_newton_iters: s.max_newton_iters.unwrap_or(defaults.max_newton_iters),
            pivot_tol: positive(s.pivot_tol.unwrap_or(defaults.pivot_tol), "solver.pivot_tol")?,
            ..defaults
        };
        solver.validate()?;
        let n_el = s.n_el.unwrap_or(DEFAULT_N_EL);
        if n_el < 2 {
            return Err(Error::config("solver.n_el", format!("at least 2 elements are required, got {n_el}")));
        }
        Ok(ScenarioConfig {
            geometry,
            materials,
            kinematics: s.kinematics.unwrap_or(KinematicsKind::Vk),
            geometric: s.geometric.unwrap_or(Geometric::Nonlinear),
            load,
            temperature,
            grid,
            n_el,
            solver,
            csv_path: self.output.csv_path.clone(),
        })
    }
}

impl ScenarioConfig {
    /// Element kinematics implied by the `kinematics` and `geometric` switches.
    pub fn element_kinematics(&self) -> Kinematics {
        match (self.geometric, self.kinematics) {
            (Geometric::Linear, _) => Kinematics::Linear,
            (Geometric::Nonlinear, KinematicsKind::Vk) => Kinematics::VonKarman,
            (Geometric::Nonlinear, KinematicsKind::Fs) => Kinematics::Reissner,
        }
    }

    pub fn time_grid(&self) -> Result<TimeGrid> {
        TimeGrid::from_segments(&self.grid)
    }

    /// Fully explicit file form, without presets.
    pub fn to_file(&self) -> ConfigFile {
        let g = &self.geometry;
        let (support, span1) = match g.support {
            Support::FixedEnd => (SupportKind::FixedEnd, None),
            Support::SimplySupported => (SupportKind::SimplySupported, None),
            Support::TwoSpanContinuous { span1 } => (SupportKind::TwoSpanContinuous, Some(span1)),
        };
        let inter = &self.materials.interlayer;
        let (closure, bulk, nu) = match inter.closure {
            ConstitutiveClosure::ConstantBulk { bulk_modulus } => (ClosureKind::K, Some(bulk_modulus), None),
            ConstitutiveClosure::ConstantPoisson { poisson } => (ClosureKind::Nu, None, Some(poisson)),
        };
        ConfigFile {
            geometry: GeometrySection {
                preset: None,
                span_m: Some(g.span),
                width_m: Some(g.width),
                h1_m: Some(g.thickness[0]),
                h2_m: Some(g.thickness[1]),
                h3_m: Some(g.thickness[2]),
                support: Some(support),
                span1_m: span1,
            },
            material: MaterialSection {
                glass_young_Pa: Some(self.materials.glass.young),
                glass_poisson: Some(self.materials.glass.poisson),
                closure: Some(closure),
                bulk_modulus_Pa: bulk,
                interlayer_poisson: nu,
                wlf_c1: Some(inter.wlf.c1),
                wlf_c2_C: Some(inter.wlf.c2),
                wlf_reference_C: Some(inter.wlf.t0),
                prony_g_inf_Pa: Some(inter.chain.g_inf()),
                prony_moduli_Pa: Some(inter.chain.units().iter().map(|u| u.modulus).collect()),
                prony_times_s: Some(inter.chain.units().iter().map(|u| u.relaxation_time).collect()),
            },
            load: LoadSection {
                intensity_N_per_m: None,
                breakpoints_s_N_per_m: Some(self.load.breakpoints().iter().map(|&(t, q)| [t, q]).collect()),
                temperature_C: Some(self.temperature),
            },
            solver: SolverSection {
                kinematics: Some(self.kinematics),
                geometric: Some(self.geometric),
                n_el: Some(self.n_el),
                eps1: Some(self.solver.eps1),
                eps2: Some(self.solver.eps2),
                max_newton_iters: Some(self.solver.max_newton_iters),
                pivot_tol: Some(self.solver.pivot_tol),
                end_time_s: None,
                grid: Some(
                    self.grid
                        .iter()
                        .map(|s| SegmentSpec {
                            end_s: s.end,
                            steps: s.steps,
                        })
                        .collect(),
                ),
            },
            output: OutputSection {
                csv_path: self.csv_path.clone(),
            },
        }
    }
}

pub fn parse_config(text: &str) -> Result<ScenarioConfig> {
    let file: ConfigFile = toml::from_str(text).map_err(|e| {
        let field = e.span().map(|s| text[s].to_string()).unwrap_or_default();
        Error::config(field, e.message().to_string())
    })?;
    file.resolve()
}

pub fn serialize_config(config: &ScenarioConfig) -> String {
    toml::to_string(&config.to_file()).expect("configuration is always serializable")
}
