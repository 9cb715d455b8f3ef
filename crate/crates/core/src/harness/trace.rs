//! CSV export of per-iteration traces and per-snake trails.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::optimizer::TraceRecord;

use super::machine;

/// Path of the trail file written next to `trace_path`: `<stem>_trail.csv`.
pub fn trail_path(trace_path: &Path) -> PathBuf {
    let stem = trace_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "trace".into());
    trace_path.with_file_name(format!("{stem}_trail.csv"))
}

/// Writes `t,P,LA,mode_1..,f_1_1..,vs_1..` to `path` and every touch point's
/// coordinates to the trail file. Moves shorter than the widest are padded
/// with empty cells. Returns the trail path.
pub fn export_trace(trace: &[TraceRecord], path: impl AsRef<Path>) -> Result<PathBuf> {
    let path = path.as_ref();
    let first = trace.first().ok_or(Error::EmptyTrace)?;
    let n_snakes = first.modes.len();
    let n_pts = trace
        .iter()
        .flat_map(|r| r.touch_values.iter().map(Vec::len))
        .max()
        .unwrap_or(0);
    let n_vis = trace.iter().map(|r| r.visible.len()).max().unwrap_or(0);

    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    let mut header = vec!["t".to_string(), "P".to_string(), "LA".to_string()];
    header.extend((1..=n_snakes).map(|i| format!("mode_{i}")));
    for i in 1..=n_snakes {
        header.extend((1..=n_pts).map(|j| format!("f_{i}_{j}")));
    }
    header.extend((1..=n_vis).map(|k| format!("vs_{k}")));
    w.write_record(&header).map_err(|e| Error::csv(path, e))?;

    for rec in trace {
        let mut row = Vec::with_capacity(header.len());
        row.push(rec.t.to_string());
        row.push(machine(rec.p));
        row.push(machine(rec.la));
        row.extend(rec.modes.iter().map(|m| format!("{:+}", m.code())));
        for i in 0..n_snakes {
            let vals = rec.touch_values.get(i).map(Vec::as_slice).unwrap_or(&[]);
            for j in 0..n_pts {
                row.push(vals.get(j).map(|&v| machine(v)).unwrap_or_default());
            }
        }
        for k in 0..n_vis {
            row.push(rec.visible.get(k).map(|&v| machine(v)).unwrap_or_default());
        }
        w.write_record(&row).map_err(|e| Error::csv(path, e))?;
    }
    w.flush().map_err(|e| Error::io(path, e))?;

    let trail = trail_path(path);
    write_trail(trace, &trail)?;
    Ok(trail)
}

fn write_trail(trace: &[TraceRecord], path: &Path) -> Result<()> {
    let dim = trace
        .iter()
        .flat_map(|r| r.touch_points.iter().flatten())
        .map(Vec::len)
        .next()
        .unwrap_or(0);
    let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
    let mut header = vec![
        "t".to_string(),
        "snake".to_string(),
        "point_index".to_string(),
    ];
    header.extend((1..=dim).map(|k| format!("x_{k}")));
    header.push("f".to_string());
    w.write_record(&header).map_err(|e| Error::csv(path, e))?;
    for rec in trace {
        for (i, (pts, vals)) in rec.touch_points.iter().zip(&rec.touch_values).enumerate() {
            for (j, (x, f)) in pts.iter().zip(vals).enumerate() {
                let mut row = vec![rec.t.to_string(), (i + 1).to_string(), (j + 1).to_string()];
                row.extend(x.iter().map(|&v| machine(v)));
                row.push(machine(*f));
                w.write_record(&row).map_err(|e| Error::csv(path, e))?;
            }
        }
    }
    w.flush().map_err(|e| Error::io(path, e))
}
