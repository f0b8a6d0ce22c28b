//! Load histories and time grids, both on true time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Duration over which a load jump is spread [s].
pub const JUMP_RAMP: f64 = 1e-5;

/// Piecewise-linear load intensity [N/m] over true time [s]; constant after the last breakpoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LoadHistory {
    breakpoints: Vec<(f64, f64)>,
}

impl LoadHistory {
    pub fn new(breakpoints: Vec<(f64, f64)>) -> Result<Self> {
        if breakpoints.is_empty() {
            return Err(Error::config("load.history", "needs at least one breakpoint"));
        }
        if breakpoints[0].0 != 0.0 {
            return Err(Error::config("load.history", "must start at t = 0"));
        }
        if breakpoints.windows(2).any(|w| !(w[1].0 >= w[0].0)) {
            return Err(Error::config("load.history", "times must be non-decreasing"));
        }
        if breakpoints.iter().any(|&(t, q)| !t.is_finite() || !q.is_finite()) {
            return Err(Error::config("load.history", "breakpoints must be finite"));
        }
        Ok(Self { breakpoints })
    }

    /// Load rising linearly from zero to `q` within [`JUMP_RAMP`] and held.
    pub fn ramp_and_hold(q: f64) -> Self {
        Self {
            breakpoints: vec![(0.0, 0.0), (JUMP_RAMP, q)],
        }
    }

    pub fn constant_zero() -> Self {
        Self {
            breakpoints: vec![(0.0, 0.0)],
        }
    }

    pub fn breakpoints(&self) -> &[(f64, f64)] {
        &self.breakpoints
    }

    pub fn intensity(&self, t: f64) -> f64 {
        let bp = &self.breakpoints;
        let i = bp.partition_point(|&(ti, _)| ti <= t);
        if i == 0 {
            return bp[0].1;
        }
        if i == bp.len() {
            return bp[i - 1].1;
        }
        let (t0, q0) = bp[i - 1];
        let (t1, q1) = bp[i];
        q0 + (q1 - q0) * (t - t0) / (t1 - t0)
    }

    /// Largest absolute intensity.
    pub fn peak(&self) -> f64 {
        self.breakpoints.iter().fold(0.0, |m, &(_, q)| m.max(q.abs()))
    }
}

/// One stretch of the grid ending at `end` and divided into `steps` steps,
/// equal in log-time unless it starts at zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSegment {
    pub end: f64,
    pub steps: usize,
}

/// Strictly increasing true times starting at zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    times: Vec<f64>,
}

fn subdivide(a: f64, b: f64, steps: usize, out: &mut Vec<f64>) {
    for k in 1..=steps {
        let s = k as f64 / steps as f64;
        out.push(if k == steps {
            b
        } else if a > 0.0 {
            a * (b / a).powf(s)
        } else {
            a + (b - a) * s
        });
    }
}

impl TimeGrid {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        if times.first() != Some(&0.0) {
            return Err(Error::config("solver.grid", "must start at t = 0"));
        }
        if times.len() < 2 || times.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::config("solver.grid", "times must be strictly increasing"));
        }
        Ok(Self { times })
    }

    pub fn from_segments(segments: &[GridSegment]) -> Result<Self> {
        let mut times = vec![0.0];
        for (i, seg) in segments.iter().enumerate() {
            if seg.steps == 0 {
                return Err(Error::config("solver.grid", format!("segment {i} has no steps")));
            }
            let a = *times.last().unwrap();
            if !(seg.end > a) {
                return Err(Error::config("solver.grid", format!("segment {i} does not advance time")));
            }
            subdivide(a, seg.end, seg.steps, &mut times);
        }
        Self::new(times)
    }

    /// Default segments: one step to 1e-6 s, six to 1e-5 s, 24 to `end`.
    pub fn standard_segments(end: f64) -> Vec<GridSegment> {
        vec![
            GridSegment { end: 1e-6, steps: 1 },
            GridSegment { end: JUMP_RAMP, steps: 6 },
            GridSegment { end, steps: 24 },
        ]
    }

    pub fn standard(end: f64) -> Result<Self> {
        Self::from_segments(&Self::standard_segments(end))
    }

    /// Every step split into `factor` steps of the same kind.
    pub fn refined(&self, factor: usize) -> Self {
        let mut times = vec![0.0];
        for w in self.times.windows(2) {
            subdivide(w[0], w[1], factor.max(1), &mut times);
        }
        Self { times }
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn n_steps(&self) -> usize {
        self.times.len() - 1
    }

    pub fn end(&self) -> f64 {
        *self.times.last().unwrap()
    }

    /// Every load breakpoint inside the grid must be a grid node.
    pub fn check_breakpoints(&self, load: &LoadHistory) -> Result<()> {
        for &(t, _) in load.breakpoints() {
            if t > 0.0 && t < self.end() {
                let hit = self.times.iter().any(|&g| (g - t).abs() <= 1e-12 * t);
                if !hit {
                    return Err(Error::config(
                        "solver.grid",
                        format!("load breakpoint at t = {t:e} s is not a grid node"),
                    ));
                }
            }
        }
        Ok(())
    }
}
