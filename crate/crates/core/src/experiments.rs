//! Reproducible numerical experiments: the growing-subset comparison of
//! distance against `K`, and the parameter sweeps behind the conflict and
//! distance surfaces.

use std::str::FromStr;

use crate::combination::conflict_coefficient;
use crate::distance::gbpa_distance;
use crate::error::{EvidenceError, Result};
use crate::frame::Frame;
use crate::gbpa::Gbpa;
use crate::io::{emit_table, Cell, Record, TableFormat};
use crate::transforms::dif_betp;

pub const DEFAULT_STEP: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Table1,
    Fig1,
    Fig2,
    Fig4,
}

impl FromStr for Experiment {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "table1" => Ok(Experiment::Table1),
            "fig1" => Ok(Experiment::Fig1),
            "fig2" => Ok(Experiment::Fig2),
            "fig4" => Ok(Experiment::Fig4),
            other => Err(format!("unknown experiment `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub experiment: Experiment,
    pub step: f64,
    pub output: TableFormat,
}

impl SweepSpec {
    pub fn new(experiment: Experiment) -> Self {
        SweepSpec {
            experiment,
            step: DEFAULT_STEP,
            output: TableFormat::Csv,
        }
    }
}

/// Number of intervals `n` with `n · step = 1`.
fn intervals(step: f64) -> Result<usize> {
    if !(step > 0.0 && step <= 0.5) {
        return Err(EvidenceError::InvalidStep(step));
    }
    let n = (1.0 / step).round();
    if (n * step - 1.0).abs() > 1e-9 {
        return Err(EvidenceError::InvalidStep(step));
    }
    Ok(n as usize)
}

/// `0, 1/n, …, 1`, each point computed directly rather than accumulated.
fn grid(step: f64) -> Result<Vec<f64>> {
    let n = intervals(step)?;
    Ok((0..=n).map(|i| i as f64 / n as f64).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table1Row {
    pub case: String,
    pub d_bpa: f64,
    pub k: f64,
}

impl Record for Table1Row {
    fn columns() -> &'static [&'static str] {
        &["case", "d_bpa", "k"]
    }
    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Text(self.case.clone()),
            Cell::Real(self.d_bpa),
            Cell::Real(self.k),
        ]
    }
}

fn case_label(n: usize) -> String {
    match n {
        1..=3 => format!(
            "A={{{}}}",
            (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        ),
        _ => format!("A={{1,...,{n}}}"),
    }
}

/// Frame `{1, …, 20}`; `m1 = {7}: 0.6, A: 0.4` against `m2 = {1,2,3}: 1` for
/// `A = {1}, {1,2}, …, {1,…,20}`.
pub fn run_table1() -> Vec<Table1Row> {
    let frame = Frame::new((1..=20).map(|i| i.to_string())).expect("valid frame");
    let seven = frame.subset(&["7"]).expect("label in frame");
    let head = frame.subset(&["1", "2", "3"]).expect("labels in frame");
    let m2 = Gbpa::new(frame.clone(), [(head, 1.0)]).expect("valid assignment");
    (1..=20)
        .map(|n| {
            let a = frame
                .subset_from_bits((1u64 << n) - 1)
                .expect("within frame");
            let m1 = Gbpa::new(frame.clone(), [(seven, 0.6), (a, 0.4)]).expect("valid assignment");
            Table1Row {
                case: case_label(n),
                d_bpa: gbpa_distance(&m1, &m2).expect("same frame"),
                k: conflict_coefficient(&m1, &m2).expect("same frame"),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConflictGridRow {
    pub s: f64,
    pub t: f64,
    pub k_g: f64,
}

impl Record for ConflictGridRow {
    fn columns() -> &'static [&'static str] {
        &["s", "t", "k_g"]
    }
    fn cells(&self) -> Vec<Cell> {
        vec![Cell::Real(self.s), Cell::Real(self.t), Cell::Real(self.k_g)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceGridRow {
    pub s: f64,
    pub t: f64,
    pub d_gbpa: f64,
}

impl Record for DistanceGridRow {
    fn columns() -> &'static [&'static str] {
        &["s", "t", "d_gbpa"]
    }
    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Real(self.s),
            Cell::Real(self.t),
            Cell::Real(self.d_gbpa),
        ]
    }
}

fn sweep_frame() -> Frame {
    Frame::new(["a", "b", "c"]).expect("valid frame")
}

/// `{a}: x, ∅: 1 − x`.
pub fn open_world_family(frame: &Frame, x: f64) -> Gbpa {
    let a = frame.subset(&["a"]).expect("label in frame");
    Gbpa::new(frame.clone(), [(a, x), (frame.empty_set(), 1.0 - x)]).expect("valid assignment")
}

fn sweep_pairs<R>(step: f64, f: impl Fn(f64, f64, &Gbpa, &Gbpa) -> R) -> Result<Vec<R>> {
    let frame = sweep_frame();
    let points = grid(step)?;
    let bodies: Vec<Gbpa> = points
        .iter()
        .map(|&x| open_world_family(&frame, x))
        .collect();
    let mut rows = Vec::with_capacity(points.len() * points.len());
    for (i, &s) in points.iter().enumerate() {
        for (j, &t) in points.iter().enumerate() {
            rows.push(f(s, t, &bodies[i], &bodies[j]));
        }
    }
    Ok(rows)
}

/// Generalized conflict coefficient over `m1 = {a}: s, ∅: 1−s` and
/// `m2 = {a}: t, ∅: 1−t`, row-major in `s`.
pub fn run_fig1_sweep(step: f64) -> Result<Vec<ConflictGridRow>> {
    sweep_pairs(step, |s, t, m1, m2| ConflictGridRow {
        s,
        t,
        k_g: conflict_coefficient(m1, m2).expect("same frame"),
    })
}

/// Evidence distance over the same family as [`run_fig1_sweep`].
pub fn run_fig2_sweep(step: f64) -> Result<Vec<DistanceGridRow>> {
    sweep_pairs(step, |s, t, m1, m2| DistanceGridRow {
        s,
        t,
        d_gbpa: gbpa_distance(m1, m2).expect("same frame"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig4Row {
    pub t: f64,
    pub d_bpa: f64,
    pub dif_betp: f64,
}

impl Record for Fig4Row {
    fn columns() -> &'static [&'static str] {
        &["t", "d_bpa", "dif_betp"]
    }
    fn cells(&self) -> Vec<Cell> {
        vec![
            Cell::Real(self.t),
            Cell::Real(self.d_bpa),
            Cell::Real(self.dif_betp),
        ]
    }
}

/// `m1 = {a,b}: 1` fixed against `m2 = {a}: t, {b}: 1 − t`.
pub fn run_fig4_sweep(step: f64) -> Result<Vec<Fig4Row>> {
    let frame = Frame::new(["a", "b"]).expect("valid frame");
    let a = frame.subset(&["a"]).expect("label in frame");
    let b = frame.subset(&["b"]).expect("label in frame");
    let m1 = Gbpa::vacuous(frame.clone());
    grid(step)?
        .into_iter()
        .map(|t| {
            let m2 = Gbpa::new(frame.clone(), [(a, t), (b, 1.0 - t)])?;
            Ok(Fig4Row {
                t,
                d_bpa: gbpa_distance(&m1, &m2)?,
                dif_betp: dif_betp(&m1, &m2)?,
            })
        })
        .collect()
}

/// Runs an experiment and renders it.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<u8>> {
    Ok(match spec.experiment {
        Experiment::Table1 => emit_table(&run_table1(), spec.output),
        Experiment::Fig1 => emit_table(&run_fig1_sweep(spec.step)?, spec.output),
        Experiment::Fig2 => emit_table(&run_fig2_sweep(spec.step)?, spec.output),
        Experiment::Fig4 => emit_table(&run_fig4_sweep(spec.step)?, spec.output),
    })
}
