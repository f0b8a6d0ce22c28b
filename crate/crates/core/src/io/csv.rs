//! CSV emission of per-step results.

use std::io::Write;

use crate::error::{Error, Result};
use crate::solver::ResultRow;

/// Bumped whenever columns are added, removed or reordered.
pub const CSV_SCHEMA_VERSION: u32 = 1;

/// Header for a laminate with `n_glass` glass layers.
pub fn header(n_glass: usize) -> Vec<String> {
    let mut h: Vec<String> = ["step", "time_s", "adjusted_time_s", "load_N_per_m", "midspan_deflection_m"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    h.extend((1..=n_glass).map(|i| format!("glass{i}_max_stress_Pa")));
    h.extend(
        [
            "midspan_stress_Pa",
            "max_stress_Pa",
            "interlayer_normal_N",
            "interlayer_shear_N",
            "interlayer_moment_Nm",
            "eta1",
            "eta2",
            "newton_iterations",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    h
}

fn record(row: &ResultRow) -> Vec<String> {
    let mut r = vec![
        row.step.to_string(),
        format!("{:e}", row.time),
        format!("{:e}", row.adjusted_time),
        format!("{:e}", row.load),
        format!("{:e}", row.midspan_deflection),
    ];
    r.extend(row.glass_stress.iter().map(|s| format!("{s:e}")));
    r.extend(
        [
            row.midspan_stress,
            row.max_stress,
            row.interlayer.normal,
            row.interlayer.shear,
            row.interlayer.moment,
            row.eta1,
            row.eta2,
        ]
        .iter()
        .map(|v| format!("{v:e}")),
    );
    r.push(row.iterations.to_string());
    r
}

/// Writes a header and one record per row, LF-terminated, floats in shortest round-trip form.
pub fn write_rows<W: Write>(out: W, rows: &[ResultRow]) -> Result<()> {
    let n_glass = rows.first().map_or(2, |r| r.glass_stress.len());
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let to_io = |e: csv::Error| Error::Io(e.into());
    w.write_record(header(n_glass)).map_err(to_io)?;
    for row in rows {
        w.write_record(record(row)).map_err(to_io)?;
    }
    w.flush()?;
    Ok(())
}

pub fn rows_to_string(rows: &[ResultRow]) -> String {
    let mut buf = Vec::new();
    write_rows(&mut buf, rows).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is ASCII")
}
