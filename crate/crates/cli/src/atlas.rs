use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use sloped_width::{classify, slope::check_torus_knot, slope_grid, Slope, SurgeryClassification};

use crate::{Failure, Output};

#[derive(Args)]
pub struct AtlasArgs {
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
    /// Largest |r| in the slope grid.
    #[arg(long)]
    rmax: u32,
    /// Largest denominator s in the slope grid.
    #[arg(long)]
    smax: u32,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct AtlasRow {
    p: i64,
    q: i64,
    slope: String,
    delta: Option<u64>,
    class: String,
    width: String,
    filled_manifold: String,
    filled_width: String,
}

impl From<SurgeryClassification> for AtlasRow {
    fn from(c: SurgeryClassification) -> AtlasRow {
        AtlasRow {
            p: c.p,
            q: c.q,
            slope: c.slope.to_string(),
            delta: c.delta,
            class: c.class.to_string(),
            width: c.width.to_string(),
            filled_manifold: c.filled_manifold.unwrap_or_default(),
            filled_width: c.filled_width.map(|w| w.to_string()).unwrap_or_default(),
        }
    }
}

/// Rational slopes sorted by `(r, s)`, then the meridian and the closed
/// slope.
pub fn rows(p: i64, q: i64, rmax: u32, smax: u32) -> sloped_width::Result<Vec<AtlasRow>> {
    check_torus_knot(p, q)?;
    let mut slopes = slope_grid(rmax, smax);
    slopes.push(Slope::Meridian);
    slopes.push(Slope::Closed);
    slopes
        .par_iter()
        .map(|&slope| classify(p, q, slope).map(AtlasRow::from))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[AtlasRow], sink: W) -> anyhow::Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn run(args: &AtlasArgs) -> Result<Output, Failure> {
    let rows = rows(args.p, args.q, args.rmax, args.smax).map_err(|e| Failure::Usage(e.into()))?;
    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot write {}", path.display()))
                .map_err(Failure::Domain)?;
            write_csv(&rows, io::BufWriter::new(file)).map_err(Failure::Domain)?;
            Ok(Output::ok(String::new()))
        }
        None => {
            let mut buffer = Vec::new();
            write_csv(&rows, &mut buffer).map_err(Failure::Domain)?;
            Ok(Output::ok(String::from_utf8(buffer).expect("csv output is utf-8")))
        }
    }
}
