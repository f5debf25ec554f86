//! CSV tables for the three experiments.

use std::io::Write;

use super::exp_a::ExpARow;
use super::exp_b::ExpBRow;
use super::exp_c::ExpCRow;
use super::HarnessError;

fn ms(v: f64) -> String {
    format!("{v:.3}")
}

pub fn write_exp_a<W: Write>(out: W, rows: &[ExpARow]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["backend", "image", "op", "trial", "virtual_ms", "work_units"])?;
    for r in rows {
        w.write_record([
            r.backend.name().to_owned(),
            r.image.clone(),
            r.op.name().to_owned(),
            r.trial.to_string(),
            ms(r.virtual_ms),
            r.work_units.to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_exp_b<W: Write>(out: W, rows: &[ExpBRow]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["backend", "size", "effect", "delta_ms", "frames", "utilization"])?;
    for r in rows {
        w.write_record([
            r.backend.name().to_owned(),
            format!("{}x{}", r.size.w, r.size.h),
            r.effect.as_ref().map_or("none".to_owned(), |e| e.kind().name().to_owned()),
            ms(r.delta_ms),
            r.frames.to_string(),
            format!("{:.6}", r.utilization),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_exp_c<W: Write>(out: W, rows: &[ExpCRow]) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["backend", "count", "probe_virtual_ms", "stop_rule"])?;
    for r in rows {
        w.write_record([
            r.backend.name().to_owned(),
            r.count.to_string(),
            r.probe_virtual_ms.map(ms).unwrap_or_default(),
            r.stop_rule.map(|s| s.name().to_owned()).unwrap_or_default(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn exp_a_csv(rows: &[ExpARow]) -> String {
    let mut buf = Vec::new();
    write_exp_a(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

pub fn exp_b_csv(rows: &[ExpBRow]) -> String {
    let mut buf = Vec::new();
    write_exp_b(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}

pub fn exp_c_csv(rows: &[ExpCRow]) -> String {
    let mut buf = Vec::new();
    write_exp_c(&mut buf, rows).expect("writing to memory");
    String::from_utf8(buf).expect("csv is utf-8")
}
