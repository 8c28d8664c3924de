//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and numbers and returns a JSON document.
//! The same functions are callable natively, which is how they are tested.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use colored_partitions::abacus::{beta_window, core_charges, decompose, default_window_size};
use colored_partitions::frobenius::{to_colored_fpartition, to_frobenius};
use colored_partitions::partitions::color_weight;
use colored_partitions::table::{cmd_table, OutputFormat, TableRequest};
use colored_partitions::{ColoringContext, Partition};

/// Largest total degree the page will ask for.
pub const MAX_TABLE_DEGREE: u32 = 16;

/// Largest partition weight accepted by the diagram views.
pub const MAX_WEIGHT: usize = 200;

#[derive(Serialize)]
struct Cell {
    row: usize,
    column: usize,
    color: usize,
}

#[derive(Serialize)]
struct Diagram {
    partition: String,
    parts: Vec<usize>,
    weight: usize,
    modulus: usize,
    offset: usize,
    cells: Vec<Cell>,
    color_weight: Vec<usize>,
    frobenius_top: Vec<usize>,
    frobenius_bottom: Vec<usize>,
    colored_top: Vec<Vec<usize>>,
    colored_bottom: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct Ruler {
    residue: usize,
    /// Occupancy of each slot, lowest slot first.
    slots: Vec<bool>,
    quotient: String,
}

#[derive(Serialize)]
struct Abacus {
    partition: String,
    modulus: usize,
    window: usize,
    rulers: Vec<Ruler>,
    core: String,
    core_parts: Vec<usize>,
    quotient_weight: usize,
    charges: Vec<i64>,
}

fn parse(partition: &str) -> Result<Partition, String> {
    let p: Partition = partition.parse().map_err(|e| format!("{e}"))?;
    if p.weight() > MAX_WEIGHT {
        return Err(format!("weight {} exceeds {MAX_WEIGHT}", p.weight()));
    }
    Ok(p)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn colored_diagram_json(partition: &str, n: usize, a: usize) -> Result<String, String> {
    let p = parse(partition)?;
    let ctx = ColoringContext::new(n, a).map_err(|e| e.to_string())?;
    let cells = p
        .boxes()
        .map(|(row, column)| Cell {
            row,
            column,
            color: ctx.residue(row, column),
        })
        .collect();
    let fc = to_frobenius(&p);
    let cf = to_colored_fpartition(&p, &ctx);
    to_json(&Diagram {
        partition: p.to_string(),
        parts: p.parts().to_vec(),
        weight: p.weight(),
        modulus: n,
        offset: a,
        cells,
        color_weight: color_weight(&p, &ctx).counts().to_vec(),
        frobenius_top: fc.top().to_vec(),
        frobenius_bottom: fc.bottom().to_vec(),
        colored_top: cf.top().to_vec(),
        colored_bottom: cf.bottom().to_vec(),
    })
}

pub fn abacus_json(partition: &str, n: usize) -> Result<String, String> {
    let p = parse(partition)?;
    let ctx = ColoringContext::new(n, 0).map_err(|e| e.to_string())?;
    let size = default_window_size(&p, n);
    let window = beta_window(&p, n, size).map_err(|e| e.to_string())?;
    let cq = decompose(&p, n);
    let occupied: Vec<Vec<usize>> = (0..n).map(|r| window.ruler_slots(r)).collect();
    let rows = occupied.iter().flatten().max().map_or(0, |&s| s + 1);
    let rulers = occupied
        .into_iter()
        .enumerate()
        .map(|(r, taken)| {
            let mut slots = vec![false; rows];
            for s in taken {
                slots[s] = true;
            }
            Ruler {
                residue: r,
                slots,
                quotient: cq.quotient[r].to_string(),
            }
        })
        .collect();
    to_json(&Abacus {
        partition: p.to_string(),
        modulus: n,
        window: size,
        rulers,
        core: cq.core.to_string(),
        core_parts: cq.core.parts().to_vec(),
        quotient_weight: cq.quotient_weight(),
        charges: core_charges(&p, &ctx).as_slice().to_vec(),
    })
}

pub fn coefficient_table_json(n: usize, offsets: &str, max_degree: u32) -> Result<String, String> {
    if max_degree > MAX_TABLE_DEGREE {
        return Err(format!("degree {max_degree} exceeds {MAX_TABLE_DEGREE}"));
    }
    let offsets = offsets
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("bad offset {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let req =
        TableRequest::new(n, offsets, max_degree, OutputFormat::Json).map_err(|e| e.to_string())?;
    cmd_table(&req).map_err(|e| e.to_string())
}

/// Cells, colors, weights and Frobenius data of one colored diagram.
#[wasm_bindgen]
pub fn colored_diagram(partition: &str, n: usize, a: usize) -> Result<String, JsError> {
    colored_diagram_json(partition, n, a).map_err(|e| JsError::new(&e))
}

/// Bead rulers, core, quotient and charges.
#[wasm_bindgen]
pub fn abacus(partition: &str, n: usize) -> Result<String, JsError> {
    abacus_json(partition, n).map_err(|e| JsError::new(&e))
}

/// Coefficients of the tuple series, as the JSON the CLI prints.
#[wasm_bindgen]
pub fn coefficient_table(n: usize, offsets: &str, max_degree: u32) -> Result<String, JsError> {
    coefficient_table_json(n, offsets, max_degree).map_err(|e| JsError::new(&e))
}
