//! JSON-in, JSON-out bindings used by the static page in `www/`.

use civariety::cli::{execute, render, Command, JobConfig};
use wasm_bindgen::prelude::*;

fn run(cmd: Command, ring: &str, module: Option<&str>, steps: Option<usize>) -> String {
    let cfg = JobConfig { steps, ..JobConfig::default() };
    render::to_json(&execute(&cmd, ring, module, &cfg).report)
}

/// Support variety report.
#[wasm_bindgen]
pub fn variety(ring: &str, module: &str) -> String {
    run(Command::Variety, ring, Some(module), None)
}

/// The module cut out by `eta`, with its variety.
#[wasm_bindgen]
pub fn cut(ring: &str, module: &str, eta: &str) -> String {
    run(Command::Cut { eta: eta.to_string() }, ring, Some(module), None)
}

/// Indecomposable summands.
#[wasm_bindgen]
pub fn decompose(ring: &str, module: &str) -> String {
    run(Command::Decompose, ring, Some(module), None)
}

/// Minimal resolution with its Betti table.
#[wasm_bindgen]
pub fn betti(ring: &str, module: &str, steps: usize) -> String {
    run(Command::Resolve, ring, Some(module), Some(steps))
}
