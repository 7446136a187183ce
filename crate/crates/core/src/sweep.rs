//! Parameter sweeps over every qualifying shift of a family of bundles.

use rayon::prelude::*;

use crate::bundle::{make_bundle, BundleSpec};
use crate::error::Result;
use crate::labeling::{span, verify_l21};
use crate::theorem::{generate_labeling, qualifying_shifts, Formula, FormulaParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub m: usize,
    pub n: usize,
    pub shift: usize,
    pub formula: Formula,
    pub valid: bool,
    pub span: u32,
}

pub const SWEEP_HEADER: &str = "m,n,shift,family,a,valid,span";

impl SweepRow {
    pub fn to_csv(&self) -> String {
        let family = match self.formula.family() {
            crate::theorem::Family::F => "F",
            crate::theorem::Family::G => "G",
        };
        format!(
            "{},{},{},{},{},{},{}",
            self.m,
            self.n,
            self.shift,
            family,
            self.formula.a(),
            self.valid,
            self.span
        )
    }
}

/// Labels and verifies every qualifying `(m, n, shift)` with `m` in `ms` and
/// `n` in `ns`. Rows come out ordered by `(m, n, shift)` in input order.
pub fn sweep(ms: impl IntoIterator<Item = usize>, ns: &[usize]) -> Result<Vec<SweepRow>> {
    let mut instances = Vec::new();
    for m in ms {
        for &n in ns {
            for (shift, formula) in qualifying_shifts(m, n)? {
                instances.push((m, n, shift, formula));
            }
        }
    }
    instances
        .into_par_iter()
        .map(|(m, n, shift, formula)| {
            let params = FormulaParams::forced(m, n, shift, formula)?;
            let graph = make_bundle(&BundleSpec::shifted(m, n, shift)?)?;
            let labeling = generate_labeling(&params);
            Ok(SweepRow {
                m,
                n,
                shift,
                formula,
                valid: verify_l21(&graph, &labeling)?.is_empty(),
                span: span(&labeling)?,
            })
        })
        .collect()
}

/// The sweep report as CSV, header included, one row per line.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}
