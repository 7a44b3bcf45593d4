//! The summary table: published cyclic spectra against computed ones, with
//! the method that settled each cell.

use cyspec::cli::{ReportOptions, SpectrumReport};

fn main() -> cyspec::Result<()> {
    let report = SpectrumReport::compute(3, 40, ReportOptions::default())?;
    print!("{}", report.render());
    for row in report.rows.iter().filter(|r| !r.diff_is_empty()) {
        println!(
            "{}: missing {:?}, unexpected {:?}",
            row.algebra, row.missing, row.unexpected
        );
    }
    Ok(())
}
