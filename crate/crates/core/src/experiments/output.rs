use std::io::Write;

use super::{SweepPoint, TrialRecord};
use crate::error::Result;

/// `size,trial,player,influenced,timesteps,terminated_by`
pub fn write_trials_csv<W: Write>(w: W, rows: &[TrialRecord]) -> Result<()> {
    let mut out = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    for row in rows {
        out.serialize(row)?;
    }
    if rows.is_empty() {
        out.write_record([
            "size",
            "trial",
            "player",
            "influenced",
            "timesteps",
            "terminated_by",
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// `size,player,mean_influenced`
pub fn write_aggregate_csv<W: Write>(w: W, points: &[SweepPoint]) -> Result<()> {
    let mut out = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    for p in points {
        out.serialize(p)?;
    }
    if points.is_empty() {
        out.write_record(["size", "player", "mean_influenced"])?;
    }
    out.flush()?;
    Ok(())
}
