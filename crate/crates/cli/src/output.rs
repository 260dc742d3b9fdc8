//! File emitters: binary PGM for rasters, CSV for rasters and census tables.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::Context;
use pappus_steiner::census::CycleReport;
use pappus_steiner::dynamics::{OrbitClass, Raster};

/// Gray level for each classification label.
pub fn gray_of(label: OrbitClass) -> u8 {
    match label {
        OrbitClass::Diverged => 0,
        OrbitClass::OriginAttractor => 64,
        OrbitClass::TwoPointAttractor => 96,
        OrbitClass::OtherPeriodic => 128,
        OrbitClass::UndefinedHit => 192,
        OrbitClass::Unresolved => 255,
    }
}

/// Binary PGM (P5), one byte per pixel; the label-to-gray map is documented
/// in the header comment line.
pub fn write_pgm(raster: &Raster, path: &Path) -> anyhow::Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    writeln!(w, "P5")?;
    writeln!(
        w,
        "# diverged=0 origin_attractor=64 two_point_attractor=96 \
         other_periodic=128 undefined_hit=192 unresolved=255"
    )?;
    writeln!(w, "{} {}", raster.width, raster.height)?;
    writeln!(w, "255")?;
    let bytes: Vec<u8> = raster.cells.iter().map(|c| gray_of(c.label)).collect();
    w.write_all(&bytes)?;
    Ok(())
}

/// Raster CSV: one row per pixel with its center coordinates.
pub fn write_raster_csv(raster: &Raster, path: &Path) -> anyhow::Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = csv::Writer::from_writer(BufWriter::new(file));
    w.write_record(["row", "col", "x", "y", "label", "steps"])?;
    let dx = (raster.region.xmax - raster.region.xmin) / raster.width as f64;
    let dy = (raster.region.ymax - raster.region.ymin) / raster.height as f64;
    for row in 0..raster.height {
        let y = raster.region.ymax - (row as f64 + 0.5) * dy;
        for col in 0..raster.width {
            let x = raster.region.xmin + (col as f64 + 0.5) * dx;
            let cell = raster.at(col, row);
            w.write_record([
                row.to_string(),
                col.to_string(),
                format!("{x}"),
                format!("{y}"),
                cell.label.label().to_string(),
                cell.steps_used.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Witness cycle as a compact `x:y;x:y;...` string (CSV-safe).
pub fn witness_string(report: &CycleReport) -> String {
    match &report.witness {
        None => String::new(),
        Some(cycle) => cycle
            .iter()
            .map(|z| format!("{}:{}", z.x.residue(), z.y.residue()))
            .collect::<Vec<_>>()
            .join(";"),
    }
}

/// Census CSV with the columns `p, n, exists, predicted, agrees, witness`.
pub fn write_census_csv<W: Write>(reports: &[CycleReport], out: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["p", "n", "exists", "predicted", "agrees", "witness"])?;
    for r in reports {
        w.write_record([
            r.p.to_string(),
            r.period.to_string(),
            r.exists.to_string(),
            r.predicted.to_string(),
            r.agrees.to_string(),
            witness_string(r),
        ])?;
    }
    w.flush()?;
    Ok(())
}
