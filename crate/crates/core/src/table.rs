//! Coefficient tables of `Z_a` for tuples of offsets.
//!
//! For a dimension vector `w` take the offsets `a` containing `w_c` copies of
//! each color `c`. The coefficient of `q^v` in the tuple series is then the
//! Euler characteristic of the affine type `A` quiver variety `M(v, w)`,
//! since its torus fixed points are exactly the tuples of colored diagrams
//! of color weight `v`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::partitions::z_tuple;
use crate::series::MultiSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRequest {
    modulus: usize,
    offsets: Vec<usize>,
    max_degree: u32,
    format: OutputFormat,
}

impl TableRequest {
    pub fn new(
        modulus: usize,
        offsets: Vec<usize>,
        max_degree: u32,
        format: OutputFormat,
    ) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        if offsets.is_empty() {
            return Err(Error::EmptyOffsets);
        }
        if let Some(&offset) = offsets.iter().find(|&&a| a >= modulus) {
            return Err(Error::InvalidOffset { offset, modulus });
        }
        Ok(TableRequest {
            modulus,
            offsets,
            max_degree,
            format,
        })
    }

    /// Offsets for a framing dimension vector: `w[c]` copies of `c`.
    pub fn for_dimension_vector(
        w: &[usize],
        max_degree: u32,
        format: OutputFormat,
    ) -> Result<Self> {
        let offsets = w
            .iter()
            .enumerate()
            .flat_map(|(c, &count)| std::iter::repeat_n(c, count))
            .collect();
        TableRequest::new(w.len(), offsets, max_degree, format)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn format(&self) -> OutputFormat {
        self.format
    }
}

/// Header `e0,...,e{n-1},coefficient`, then one row per nonzero term in
/// graded-lexicographic order.
pub fn to_csv(series: &MultiSeries) -> String {
    let mut out = String::new();
    for c in 0..series.num_vars() {
        write!(out, "e{c},").unwrap();
    }
    out.push_str("coefficient\n");
    for (e, c) in series.terms() {
        for x in e {
            write!(out, "{x},").unwrap();
        }
        writeln!(out, "{c}").unwrap();
    }
    out
}

pub fn render(series: &MultiSeries, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = series.to_json();
            s.push('\n');
            s
        }
        OutputFormat::Csv => to_csv(series),
    }
}

pub fn table_series(req: &TableRequest) -> Result<MultiSeries> {
    z_tuple(&req.offsets, req.modulus, req.max_degree)
}

pub fn cmd_table(req: &TableRequest) -> Result<String> {
    Ok(render(&table_series(req)?, req.format))
}
