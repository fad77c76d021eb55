//! Text and CSV renderings of results. Every CSV starts with a header row.

use std::io::{self, Write};

use chaotic_prng::analysis::{CorrelationSeries, CycleReport, PowerSpectrum};
use chaotic_prng::battery::{BatteryReport, UNIFORMITY_THRESHOLD};
use chaotic_prng::cipher::Histogram;

/// Per-test summary lines, followed by warnings and the verdict.
pub fn battery_text<W: Write>(mut w: W, report: &BatteryReport) -> io::Result<()> {
    writeln!(
        w,
        "battery: {} sequences x {} bits, master seed {}",
        report.n_sequences, report.seq_len, report.master_seed
    )?;
    writeln!(
        w,
        "{:<28} {:>12} {:>10}  {:>4}",
        "test", "P_T", "p>=0.01", "pass"
    )?;
    for s in &report.summaries {
        let name = if s.param.is_empty() {
            s.test.to_owned()
        } else {
            format!("{} ({})", s.test, s.param)
        };
        writeln!(
            w,
            "{:<28} {:>12.6e} {:>7}/{:<3} {:>4}",
            name,
            s.p_t(),
            s.count_at_least(0.01),
            s.p_values.len(),
            if s.passed() { "yes" } else { "NO" }
        )?;
    }
    for group in ["serial", "cumulative_sums"] {
        if let Some(avg) = report.average_p_t(group) {
            writeln!(w, "{group} average P_T: {avg:.6e}")?;
        }
    }
    for warning in &report.warnings {
        writeln!(w, "warning: {warning}")?;
    }
    let failures: Vec<_> = report.failures().map(|s| s.test).collect();
    if failures.is_empty() {
        writeln!(w, "result: all P_T >= {UNIFORMITY_THRESHOLD}")
    } else {
        writeln!(w, "result: FAILED {}", failures.join(", "))
    }
}

/// One `test,param,seq_index,p_value` row per p-value, then one
/// `test,P_T,pass` summary row per test.
pub fn battery_csv<W: Write>(w: W, report: &BatteryReport) -> csv::Result<()> {
    let mut out = csv::WriterBuilder::new().flexible(true).from_writer(w);
    out.write_record(["test", "param", "seq_index", "p_value"])?;
    for s in &report.summaries {
        for (i, p) in s.p_values.iter().enumerate() {
            out.write_record([s.test, &s.param, &i.to_string(), &format!("{p:e}")])?;
        }
    }
    out.write_record(["test", "P_T", "pass"])?;
    for s in &report.summaries {
        out.write_record([s.test, &format!("{:e}", s.p_t()), &s.passed().to_string()])?;
    }
    out.flush()?;
    Ok(())
}

pub fn correlation_csv<W: Write>(w: W, series: &CorrelationSeries) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["lag", "value"])?;
    for (lag, v) in series.iter() {
        out.write_record([lag.to_string(), format!("{v:e}")])?;
    }
    out.flush()?;
    Ok(())
}

pub fn spectrum_csv<W: Write>(w: W, spectrum: &PowerSpectrum) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["bin", "power"])?;
    for (bin, p) in spectrum.iter() {
        out.write_record([bin.to_string(), format!("{p:e}")])?;
    }
    out.flush()?;
    Ok(())
}

pub fn histogram_csv<W: Write>(w: W, hist: &Histogram) -> csv::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["value", "count"])?;
    for (value, count) in hist.bins.iter().enumerate() {
        out.write_record([value.to_string(), count.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

pub fn cycle_text<W: Write>(mut w: W, report: &CycleReport) -> io::Result<()> {
    writeln!(w, "transient_length: {}", report.transient_length)?;
    writeln!(w, "cycle_period: {}", report.cycle_period)?;
    writeln!(w, "orbit_length: {}", report.orbit_length)
}
