//! wasm-bindgen front end for the browser demo in `www/`.
//!
//! Each export returns a JSON string. The `*_json` functions hold the logic and
//! run natively; the exported wrappers only turn their errors into `JsError`.

use num_traits::ToPrimitive;
use sdcalc_core::bernoulli::{bernoulli_numbers_series, bernoulli_polynomials};
use sdcalc_core::combinatorics::hoggatt_row;
use sdcalc_core::rational::{render, render_decimal};
use sdcalc_core::{Dim, Rational};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const MAX_DIM: u32 = 12;
const MAX_M: u32 = 12;
const MAX_N: u32 = 40;
const MAX_ROWS: u32 = 30;
const MAX_SAMPLES: u32 = 2000;

#[derive(Serialize)]
struct Entry {
    n: u32,
    value: String,
    decimal: String,
}

#[derive(Serialize)]
struct Curve {
    d: u32,
    m: u32,
    n: u32,
    polynomial: String,
    coefficients: Vec<String>,
    xs: Vec<f64>,
    ys: Vec<f64>,
}

fn dim(d: u32) -> Result<Dim, String> {
    if d > MAX_DIM {
        return Err(format!("d is limited to {MAX_DIM} in the demo"));
    }
    Dim::new(d).map_err(|e| e.to_string())
}

fn bounded(name: &str, v: u32, max: u32) -> Result<u32, String> {
    if v > max {
        return Err(format!("{name} is limited to {max} in the demo"));
    }
    Ok(v)
}

fn to_json(v: &impl Serialize) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `[{n, value, decimal}]` for `B_{d,0}(m) .. B_{d,n_max}(m)`.
pub fn bernoulli_table_json(d: u32, m: u32, n_max: u32, digits: u32) -> Result<String, String> {
    let dim = dim(d)?;
    bounded("m", m, MAX_M)?;
    bounded("n_max", n_max, MAX_N)?;
    bounded("digits", digits, 40)?;
    let table = bernoulli_numbers_series(dim, m, n_max as usize).map_err(|e| e.to_string())?;
    let entries: Vec<Entry> = table
        .values
        .iter()
        .zip(0u32..)
        .map(|(v, n)| Entry {
            n,
            value: render(v),
            decimal: render_decimal(v, digits as usize),
        })
        .collect();
    to_json(&entries)
}

/// `B_{d,n}(m;x)` with exact coefficients plus `samples` points on `[x0, x1]` for plotting.
pub fn bernoulli_curve_json(
    d: u32,
    m: u32,
    n: u32,
    x0: f64,
    x1: f64,
    samples: u32,
) -> Result<String, String> {
    let dim = dim(d)?;
    bounded("m", m, MAX_M)?;
    bounded("n", n, MAX_N)?;
    bounded("samples", samples, MAX_SAMPLES)?;
    if samples < 2 || !(x0.is_finite() && x1.is_finite() && x0 < x1) {
        return Err("need at least 2 samples on a finite interval x0 < x1".into());
    }
    let family = bernoulli_polynomials(dim, m, n as usize).map_err(|e| e.to_string())?;
    let p = &family.as_slice()[n as usize];
    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let step = (x1 - x0) / f64::from(samples - 1);
    let xs: Vec<f64> = (0..samples).map(|i| x0 + step * f64::from(i)).collect();
    let ys = xs
        .iter()
        .map(|&x| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c))
        .collect();
    to_json(&Curve {
        d,
        m,
        n,
        polynomial: p.to_string(),
        coefficients: p.coeffs().iter().map(render).collect(),
        xs,
        ys,
    })
}

/// Rows `0..rows` of the d-Hoggatt triangle as strings.
pub fn hoggatt_triangle_json(d: u32, rows: u32) -> Result<String, String> {
    let dim = dim(d)?;
    bounded("rows", rows, MAX_ROWS)?;
    let triangle: Vec<Vec<String>> = (0..rows)
        .map(|n| hoggatt_row(dim, n).iter().map(render).collect())
        .collect();
    to_json(&triangle)
}

#[wasm_bindgen]
pub fn bernoulli_table(d: u32, m: u32, n_max: u32, digits: u32) -> Result<String, JsError> {
    bernoulli_table_json(d, m, n_max, digits).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bernoulli_curve(
    d: u32,
    m: u32,
    n: u32,
    x0: f64,
    x1: f64,
    samples: u32,
) -> Result<String, JsError> {
    bernoulli_curve_json(d, m, n, x0, x1, samples).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hoggatt_triangle(d: u32, rows: u32) -> Result<String, JsError> {
    hoggatt_triangle_json(d, rows).map_err(|e| JsError::new(&e))
}
