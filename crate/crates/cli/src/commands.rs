//! The five subcommands. Each one builds a [`Document`]; numerical failures
//! that still leave something to report come back in [`Outcome::failure`]
//! so the output is written before the process exits with code 1.

use hulthen_core::model::IMPROVED_C0;
use hulthen_core::nu_solver::epsilon_sq_closed_form;
use hulthen_core::oracle::{DEFAULT_POINTS, DEFAULT_R_MAX_FACTOR};
use hulthen_core::reference::{known_misprint, TableOneColumn, TABLE_ONE, TABLE_TWO};
use hulthen_core::susy_solver::{cancellation_scale, ground_energy};
use hulthen_core::{
    energy_nu, energy_susy, ground_wavefunction, ode_residual, partner_potentials, quantization_residual,
    riccati_residual, shape_invariance_remainder, solve_radial_with, superpotential_coeffs, wavefunction, EnergyResult,
    GridSpec, Method, PotentialMode, QuantumNumbers, SolveOptions, SpectrumResult,
};
use rayon::prelude::*;
use serde_json::Value;

use crate::args::{Command, Format, VerifyArgs};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{json_object, Cell, Document, Record, Section};

/// Printed Table I values carry 7 decimals.
pub const PUBLISHED_TOL: f64 = 5e-7;
pub const NU_SUSY_REL_TOL: f64 = 1e-12;
pub const RICCATI_TOL: f64 = 1e-10;
pub const SHAPE_TOL: f64 = 1e-10;
pub const NORM_TOL: f64 = 1e-8;
pub const ODE_TOL: f64 = 1e-6;
pub const QUANTIZATION_TOL: f64 = 1e-9;

pub const VERIFY_DELTAS: [f64; 5] = [0.025, 0.05, 0.075, 0.1, 0.15];
const VERIFY_MAX_N_R: u32 = 4;
const VERIFY_MAX_L: u32 = 4;
/// Shape-invariance steps checked per tower.
const SHAPE_DEPTH: u32 = 5;
const WAVEFUNCTION_SAMPLES: usize = 201;
/// Default sampling extent in decay lengths `1/(√c δ)`.
const WAVEFUNCTION_DECAY_LENGTHS: f64 = 30.0;

const ENERGY_HEADERS: [&str; 8] = ["state", "n_r", "l", "delta", "c0", "method", "energy", "bound"];

pub struct Outcome {
    pub document: Document,
    pub failure: Option<String>,
    /// Format used when neither the flags nor the config choose one.
    pub default_format: Format,
}

impl Outcome {
    fn ok(document: Document) -> Self {
        Self { document, failure: None, default_format: Format::Csv }
    }
}

pub fn run_command(command: &Command, cfg: &RunConfig) -> CliResult<Outcome> {
    match command {
        Command::Energy => run_energy(cfg),
        Command::Wavefunction => run_wavefunction(cfg),
        Command::Table => run_table(cfg),
        Command::Compare => run_compare(cfg),
        Command::Verify(args) => run_verify(cfg, args),
    }
}

fn state_cells(q: QuantumNumbers) -> [Cell; 3] {
    [q.to_string().into(), q.n_r.into(), q.l.into()]
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Channel {
    l: u32,
    delta: f64,
    c0: f64,
    mode: PotentialMode,
}

fn mode_of(method: Method) -> Option<PotentialMode> {
    match method {
        Method::NumericExact => Some(PotentialMode::Exact),
        Method::NumericApprox => Some(PotentialMode::Approximated),
        Method::Nu | Method::Susy => None,
    }
}

fn channel(q: QuantumNumbers, delta: f64, c0: f64, mode: PotentialMode) -> Channel {
    // the exact centrifugal term does not involve C0
    let c0 = if mode == PotentialMode::Exact { 0.0 } else { c0 };
    Channel { l: q.l, delta, c0, mode }
}

/// Solved channels in request order, each refined up to its highest wanted level.
struct Spectra(Vec<(Channel, SpectrumResult<f64>)>);

impl Spectra {
    fn solve(cfg: &RunConfig, wanted: &[(Channel, u32)]) -> CliResult<Self> {
        let mut channels: Vec<(Channel, u32)> = Vec::new();
        for &(ch, n_r) in wanted {
            match channels.iter_mut().find(|(c, _)| *c == ch) {
                Some((_, top)) => *top = (*top).max(n_r),
                None => channels.push((ch, n_r)),
            }
        }
        let solved = channels
            .into_par_iter()
            .map(|(ch, top)| {
                let spec = cfg.spec(ch.delta, ch.c0)?;
                let grid = GridSpec::scaled(
                    &spec,
                    cfg.rmax_factor.unwrap_or(DEFAULT_R_MAX_FACTOR),
                    cfg.grid_points.unwrap_or(DEFAULT_POINTS),
                );
                let opts = SolveOptions { max_levels: Some(top as usize + 1), ..SolveOptions::default() };
                Ok((ch, solve_radial_with(&spec, ch.l, ch.mode, &grid, &opts)?))
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Self(solved))
    }

    fn get(&self, ch: Channel) -> &SpectrumResult<f64> {
        &self.0.iter().find(|(c, _)| *c == ch).expect("channel solved").1
    }

    fn unconverged(&self) -> Option<String> {
        let bad: Vec<String> = self
            .0
            .iter()
            .filter(|(_, s)| !s.converged)
            .map(|(c, s)| {
                format!(
                    "l={} delta={} c0={} {} oracle reached {:.3e} with {} points",
                    c.l,
                    c.delta,
                    c.c0,
                    c.mode.name(),
                    s.achieved_tolerance,
                    s.final_points
                )
            })
            .collect();
        (!bad.is_empty()).then(|| format!("oracle did not converge: {}", bad.join("; ")))
    }
}

struct EnergyRow {
    q: QuantumNumbers,
    delta: f64,
    c0: f64,
    method: Method,
    energy: Option<f64>,
    bound: bool,
    intermediates: Value,
}

fn analytic_intermediates(r: &EnergyResult<f64>) -> Value {
    let i = &r.intermediates;
    json_object(&[
        ("alpha_sq", i.alpha_sq.into()),
        ("epsilon_sq", i.epsilon_sq.into()),
        ("sqrt_c", i.sqrt_c.into()),
        ("k_exponent", i.k_exponent.into()),
        ("superpotential_a", i.superpotential_a.into()),
        ("superpotential_b", i.superpotential_b.into()),
        ("quantization_residual", i.quantization_residual.into()),
    ])
}

fn numeric_intermediates(s: &SpectrumResult<f64>, n_r: u32) -> Value {
    let k = n_r as usize;
    json_object(&[
        ("potential_mode", s.potential_mode.name().into()),
        ("levels_found", s.eigenvalues.len().into()),
        ("error_estimate", s.error_estimates.get(k).copied().into()),
        ("node_count", s.node_counts.get(k).map_or(Cell::Empty, |&n| n.into())),
        ("tail_ratio", s.tail_ratios.get(k).copied().into()),
        ("truncation_sensitive", s.truncation_sensitive.get(k).map_or(Cell::Empty, |&b| b.into())),
        ("final_points", s.final_points.into()),
        ("converged", s.converged.into()),
    ])
}

fn compute_energies(
    cfg: &RunConfig,
    states: &[QuantumNumbers],
    deltas: &[f64],
    c0s: &[f64],
    methods: &[Method],
) -> CliResult<(Vec<EnergyRow>, Option<String>)> {
    let mut wanted = Vec::new();
    for &q in states {
        for &delta in deltas {
            for &c0 in c0s {
                for mode in methods.iter().filter_map(|&m| mode_of(m)) {
                    wanted.push((channel(q, delta, c0, mode), q.n_r));
                }
            }
        }
    }
    let spectra = Spectra::solve(cfg, &wanted)?;
    let mut rows = Vec::new();
    for &q in states {
        for &delta in deltas {
            for &c0 in c0s {
                let spec = cfg.spec(delta, c0)?;
                for &method in methods {
                    let row = match mode_of(method) {
                        None => {
                            let r = if method == Method::Nu { energy_nu(&spec, q) } else { energy_susy(&spec, q) };
                            EnergyRow {
                                q,
                                delta,
                                c0,
                                method,
                                energy: Some(r.energy),
                                bound: r.bound,
                                intermediates: analytic_intermediates(&r),
                            }
                        }
                        Some(mode) => {
                            let s = spectra.get(channel(q, delta, c0, mode));
                            let energy = s.level(q.n_r);
                            EnergyRow {
                                q,
                                delta,
                                c0,
                                method,
                                energy,
                                bound: energy.is_some(),
                                intermediates: numeric_intermediates(s, q.n_r),
                            }
                        }
                    };
                    rows.push(row);
                }
            }
        }
    }
    Ok((rows, spectra.unconverged()))
}

fn energy_cells(r: &EnergyRow) -> Vec<Cell> {
    let mut cells = state_cells(r.q).to_vec();
    cells.extend([r.delta.into(), r.c0.into(), r.method.name().into(), r.energy.into(), r.bound.into()]);
    cells
}

fn run_energy(cfg: &RunConfig) -> CliResult<Outcome> {
    let states = cfg.require_states()?;
    let deltas = cfg.require_deltas()?;
    let c0s = cfg.c0s_or(&[IMPROVED_C0]);
    let methods = cfg.methods_or(&[Method::Nu]);
    let (rows, failure) = compute_energies(cfg, &states, &deltas, &c0s, &methods)?;
    let mut section = Section::new("energy", &ENERGY_HEADERS);
    for r in &rows {
        section.records.push(Record::new(energy_cells(r)).with_nested("intermediates", r.intermediates.clone()));
    }
    Ok(Outcome { failure, ..Outcome::ok(Document::single(section)) })
}

fn run_compare(cfg: &RunConfig) -> CliResult<Outcome> {
    let states = cfg.require_states()?;
    let deltas = cfg.require_deltas()?;
    let c0s = cfg.c0s_or(&[IMPROVED_C0]);
    let methods = cfg.methods_or(&Method::ALL);
    let (rows, failure) = compute_energies(cfg, &states, &deltas, &c0s, &methods)?;
    let mut headers = ENERGY_HEADERS.to_vec();
    headers.push("diff_from_nu");
    let mut section = Section::new("compare", &headers);
    for r in &rows {
        let nu = energy_nu(&cfg.spec(r.delta, r.c0)?, r.q).energy;
        let mut cells = energy_cells(r);
        cells.push(r.energy.map(|e| e - nu).into());
        section.records.push(Record::new(cells));
    }
    Ok(Outcome { failure, ..Outcome::ok(Document::single(section)) })
}

fn run_wavefunction(cfg: &RunConfig) -> CliResult<Outcome> {
    let states = cfg.require_states()?;
    let deltas = cfg.require_deltas()?;
    let c0s = cfg.c0s_or(&[IMPROVED_C0]);
    let methods = cfg.methods_or(&[Method::Nu]);
    let samples = cfg.grid_points.unwrap_or(WAVEFUNCTION_SAMPLES);
    if samples < 2 {
        return Err(CliError::Usage(format!("--grid-points must be at least 2 for wavefunction, got {samples}")));
    }
    for &m in &methods {
        if mode_of(m).is_some() {
            return Err(CliError::Usage(format!("wavefunction supports methods nu and susy, not {}", m.name())));
        }
    }
    let mut section =
        Section::new("wavefunction", &["state", "n_r", "l", "delta", "c0", "method", "r", "chi", "radial"]);
    for &q in &states {
        for &delta in &deltas {
            for &c0 in &c0s {
                let spec = cfg.spec(delta, c0)?;
                let wf = wavefunction(&spec, q)?;
                let r_max = match cfg.rmax_factor {
                    Some(f) => f / delta,
                    None => WAVEFUNCTION_DECAY_LENGTHS / (wf.sqrt_c * delta),
                };
                for &method in &methods {
                    let ground = match method {
                        Method::Susy if q.n_r == 0 => Some(ground_wavefunction(&superpotential_coeffs(&spec, q.l))?),
                        Method::Susy => {
                            return Err(CliError::Usage(format!(
                                "the susy wavefunction is the ground state of each tower; {q} has n_r = {}",
                                q.n_r
                            )))
                        }
                        _ => None,
                    };
                    for j in 1..=samples {
                        let r = r_max * j as f64 / samples as f64;
                        let chi = match &ground {
                            Some(g) => g.value(r),
                            None => wf.chi(r)?,
                        };
                        let mut cells = state_cells(q).to_vec();
                        cells.extend([
                            delta.into(),
                            c0.into(),
                            method.name().into(),
                            r.into(),
                            chi.into(),
                            (chi / r).into(),
                        ]);
                        section.records.push(Record::new(cells));
                    }
                }
            }
        }
    }
    Ok(Outcome::ok(Document::single(section)))
}

fn keep_row(cfg: &RunConfig, q: QuantumNumbers, delta: f64) -> bool {
    cfg.states.as_ref().is_none_or(|s| s.contains(&q))
        && cfg.deltas.as_ref().is_none_or(|d| d.iter().any(|&x| (x - delta).abs() < 1e-12))
}

fn parse_label(label: &str) -> QuantumNumbers {
    label.parse().expect("embedded labels are valid")
}

fn run_table(cfg: &RunConfig) -> CliResult<Outcome> {
    let mut table_one = Section::new(
        "table_one",
        &["state", "n_r", "l", "delta", "method", "c0", "published", "computed", "matches_published"],
    );
    let mut discrepancies = Section::new(
        "discrepancies",
        &["state", "delta", "method", "c0", "published", "computed", "difference", "kind"],
    );
    for row in TABLE_ONE {
        let q = parse_label(row.state);
        if !keep_row(cfg, q, row.delta) {
            continue;
        }
        for column in TableOneColumn::ALL {
            let spec = cfg.spec(row.delta, column.c0())?;
            let computed = if column.is_susy() { energy_susy(&spec, q) } else { energy_nu(&spec, q) }.energy;
            let published = row.value(column);
            let matches = (published - computed).abs() <= PUBLISHED_TOL;
            let method = if column.is_susy() { "susy" } else { "nu" };
            let mut cells = state_cells(q).to_vec();
            cells.extend([
                row.delta.into(),
                method.into(),
                column.c0().into(),
                Cell::Printed(published),
                Cell::Printed(computed),
                matches.into(),
            ]);
            table_one.records.push(Record::new(cells));
            if !matches {
                let kind = match known_misprint(row.state, row.delta, column) {
                    Some(m) if (m.corrected - computed).abs() <= PUBLISHED_TOL => {
                        format!("known misprint: {}", m.note)
                    }
                    Some(m) => format!("known misprint ({}) but corrected value {} disagrees", m.note, m.corrected),
                    None => "unflagged mismatch".to_string(),
                };
                discrepancies.records.push(Record::new(vec![
                    row.state.into(),
                    row.delta.into(),
                    method.into(),
                    column.c0().into(),
                    Cell::Printed(published),
                    Cell::Printed(computed),
                    (computed - published).into(),
                    kind.into(),
                ]));
            }
        }
    }

    let rows_two: Vec<_> = TABLE_TWO.iter().filter(|r| keep_row(cfg, parse_label(r.state), r.delta)).collect();
    let wanted: Vec<_> = rows_two
        .iter()
        .map(|r| {
            let q = parse_label(r.state);
            (channel(q, r.delta, 0.0, PotentialMode::Exact), q.n_r)
        })
        .collect();
    let spectra = Spectra::solve(cfg, &wanted)?;
    let mut table_two = Section::new(
        "table_two",
        &["state", "n_r", "l", "delta", "column", "source", "magnitude", "diff_from_numerical"],
    );
    for row in rows_two {
        let q = parse_label(row.state);
        let analytic = -energy_nu(&cfg.spec(row.delta, IMPROVED_C0)?, q).energy;
        let oracle = spectra.get(channel(q, row.delta, 0.0, PotentialMode::Exact)).level(q.n_r).map(|e| -e);
        let cells: [(&str, &str, Option<f64>); 6] = [
            ("nu_c0=1/12", "computed", Some(analytic)),
            ("numeric-exact", "computed", oracle),
            ("aim", "published", Some(row.aim)),
            ("susy_hierarchy", "published", Some(row.susy_hierarchy)),
            ("numerical", "published", Some(row.numerical)),
            ("variational", "published", row.variational),
        ];
        for (column, source, magnitude) in cells {
            // absent cells are left out rather than written as zero
            let Some(m) = magnitude else { continue };
            let mut out = state_cells(q).to_vec();
            out.extend([row.delta.into(), column.into(), source.into(), Cell::Printed(m), (m - row.numerical).into()]);
            table_two.records.push(Record::new(out));
        }
    }
    let document = Document { sections: vec![table_one, table_two, discrepancies] };
    Ok(Outcome { failure: spectra.unconverged(), ..Outcome::ok(document) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    NuSusy,
    Riccati,
    ShapeInvariance,
    Normalization,
    OdeResidual,
    Quantization,
}

impl Check {
    const ALL: [Check; 6] = [
        Check::NuSusy,
        Check::Riccati,
        Check::ShapeInvariance,
        Check::Normalization,
        Check::OdeResidual,
        Check::Quantization,
    ];

    fn name(self) -> &'static str {
        match self {
            Check::NuSusy => "nu_equals_susy",
            Check::Riccati => "riccati",
            Check::ShapeInvariance => "shape_invariance",
            Check::Normalization => "normalization",
            Check::OdeResidual => "ode_residual",
            Check::Quantization => "quantization",
        }
    }
}

struct CheckRow {
    check: Check,
    q: QuantumNumbers,
    delta: f64,
    c0: f64,
    /// NaN when the check could not be evaluated.
    value: f64,
    tolerance: f64,
    pass: bool,
    note: String,
}

impl CheckRow {
    fn new(check: Check, q: QuantumNumbers, delta: f64, c0: f64, value: f64, tolerance: f64) -> Self {
        Self { check, q, delta, c0, value, tolerance, pass: value <= tolerance, note: String::new() }
    }

    fn from_result(
        check: Check,
        q: QuantumNumbers,
        delta: f64,
        c0: f64,
        tolerance: f64,
        value: hulthen_core::Result<f64>,
    ) -> Self {
        match value {
            Ok(v) => Self::new(check, q, delta, c0, v, tolerance),
            Err(e) => Self { note: e.to_string(), ..Self::new(check, q, delta, c0, f64::NAN, tolerance) },
        }
    }
}

fn state_checks(cfg: &RunConfig, q: QuantumNumbers, delta: f64, c0: f64) -> CliResult<Vec<CheckRow>> {
    let spec = cfg.spec(delta, c0)?;
    let nu = energy_nu(&spec, q);
    let susy = energy_susy(&spec, q);
    let tol = NU_SUSY_REL_TOL * nu.energy.abs() + 8.0 * f64::EPSILON * cancellation_scale(&spec, q);
    let mut identity = CheckRow::new(Check::NuSusy, q, delta, c0, (nu.energy - susy.energy).abs(), tol);
    // at a threshold (E = 0 exactly) the sign of E is below the rounding floor
    if nu.bound != susy.bound && nu.energy.abs() > tol {
        identity.pass = false;
        identity.note = format!("bound flags differ: nu {} susy {}", nu.bound, susy.bound);
    }
    let mut rows = vec![identity];
    if !nu.bound {
        return Ok(rows);
    }
    let eps = epsilon_sq_closed_form(q, spec.alpha_sq(), c0);
    rows.push(CheckRow::from_result(
        Check::Quantization,
        q,
        delta,
        c0,
        QUANTIZATION_TOL,
        quantization_residual(&spec, q, eps).map(f64::abs),
    ));
    match wavefunction(&spec, q) {
        Ok(wf) => {
            rows.push(CheckRow::from_result(
                Check::Normalization,
                q,
                delta,
                c0,
                NORM_TOL,
                wf.norm_integral().map(|i| (i.value - 1.0).abs()),
            ));
            rows.push(CheckRow::from_result(
                Check::OdeResidual,
                q,
                delta,
                c0,
                ODE_TOL,
                ode_residual(&wf, wf.energy, &GridSpec::residual_window(&spec)),
            ));
        }
        Err(e) => {
            for (check, tol) in [(Check::Normalization, NORM_TOL), (Check::OdeResidual, ODE_TOL)] {
                rows.push(CheckRow::from_result(check, q, delta, c0, tol, Err(e.clone())));
            }
        }
    }
    Ok(rows)
}

fn window_radii(grid: &GridSpec<f64>) -> Vec<f64> {
    let step = (grid.r_max - grid.r_min) / (grid.n_points - 1) as f64;
    (0..grid.n_points).map(|j| grid.r_min + step * j as f64).collect()
}

/// Riccati residual of the tower ground state and the constancy of
/// `V₊(B_{i−1}) − V₋(B_i)` against the closed-form remainder. `perturb_b`
/// scales `B` before either check, which the Riccati check must catch.
fn tower_checks(cfg: &RunConfig, l: u32, delta: f64, c0: f64, perturb_b: f64) -> CliResult<Vec<CheckRow>> {
    let spec = cfg.spec(delta, c0)?;
    let q = QuantumNumbers::new(0, l);
    let exact = superpotential_coeffs(&spec, l);
    let coeffs = exact.with_b(exact.b * (1.0 + perturb_b));
    let radii = window_radii(&GridSpec::residual_window(&spec));
    let e0 = ground_energy(&spec, l).energy;
    let riccati: hulthen_core::Result<f64> = radii
        .iter()
        .map(|&r| riccati_residual(&coeffs, &spec, q, e0, r).map(f64::abs))
        .try_fold(0.0f64, |m, v| v.map(|v| m.max(v)));
    let mut rows = vec![CheckRow::from_result(Check::Riccati, q, delta, c0, RICCATI_TOL, riccati)];
    let shape = (1..=SHAPE_DEPTH).try_fold(0.0f64, |worst, i| -> hulthen_core::Result<f64> {
        let plus = partner_potentials(&coeffs.shifted(i - 1));
        let minus = partner_potentials(&coeffs.shifted(i));
        let remainder = shape_invariance_remainder(&spec, l, i)?;
        let mut w = worst;
        for &r in &radii {
            w = w.max((plus.v_plus(r)? - minus.v_minus(r)? - remainder).abs());
        }
        Ok(w)
    });
    rows.push(CheckRow::from_result(Check::ShapeInvariance, q, delta, c0, SHAPE_TOL, shape));
    Ok(rows)
}

fn run_verify(cfg: &RunConfig, args: &VerifyArgs) -> CliResult<Outcome> {
    if !args.perturb_b.is_finite() || args.perturb_b <= -1.0 {
        return Err(CliError::Usage(format!("--perturb-b must be finite and above -1, got {}", args.perturb_b)));
    }
    let states = match &cfg.states {
        Some(s) => s.clone(),
        None if cfg.quick => vec![parse_label("2p"), parse_label("3p")],
        None => {
            (0..=VERIFY_MAX_L).flat_map(|l| (0..=VERIFY_MAX_N_R).map(move |n_r| QuantumNumbers::new(n_r, l))).collect()
        }
    };
    let deltas = cfg.deltas_or(&VERIFY_DELTAS);
    let c0s = cfg.c0s_or(&[0.0, IMPROVED_C0]);

    let mut towers: Vec<(u32, f64, f64)> = Vec::new();
    let mut points: Vec<(QuantumNumbers, f64, f64)> = Vec::new();
    for &delta in &deltas {
        for &c0 in &c0s {
            for &q in &states {
                points.push((q, delta, c0));
                if !towers.contains(&(q.l, delta, c0)) {
                    towers.push((q.l, delta, c0));
                }
            }
        }
    }
    let tower_rows = towers
        .par_iter()
        .map(|&(l, delta, c0)| tower_checks(cfg, l, delta, c0, args.perturb_b))
        .collect::<CliResult<Vec<_>>>()?;
    let state_rows =
        points.par_iter().map(|&(q, delta, c0)| state_checks(cfg, q, delta, c0)).collect::<CliResult<Vec<_>>>()?;
    let mut rows: Vec<CheckRow> = tower_rows.into_iter().chain(state_rows).flatten().collect();
    rows.sort_by_key(|r| Check::ALL.iter().position(|&c| c == r.check));

    let mut checks =
        Section::new("checks", &["check", "state", "n_r", "l", "delta", "c0", "value", "tolerance", "pass", "note"]);
    let mut summary =
        Section::new("summary", &["check", "evaluated", "failed", "max_value", "max_value_over_tolerance", "pass"]);
    for r in &rows {
        let mut cells = vec![Cell::from(r.check.name())];
        cells.extend(state_cells(r.q));
        cells.extend([
            r.delta.into(),
            r.c0.into(),
            r.value.into(),
            r.tolerance.into(),
            r.pass.into(),
            r.note.clone().into(),
        ]);
        checks.records.push(Record::new(cells));
    }
    let mut failed_total = 0;
    for check in Check::ALL {
        let of: Vec<&CheckRow> = rows.iter().filter(|r| r.check == check).collect();
        let failed = of.iter().filter(|r| !r.pass).count();
        failed_total += failed;
        let max_value = of.iter().map(|r| r.value).fold(None, |m: Option<f64>, v| Some(m.map_or(v, |m| m.max(v))));
        let max_ratio = of
            .iter()
            .filter(|r| r.tolerance > 0.0)
            .map(|r| r.value / r.tolerance)
            .fold(None, |m: Option<f64>, v| Some(m.map_or(v, |m| m.max(v))));
        summary.records.push(Record::new(vec![
            check.name().into(),
            of.len().into(),
            failed.into(),
            max_value.into(),
            max_ratio.into(),
            (failed == 0).into(),
        ]));
    }
    let failure = (failed_total > 0).then(|| format!("{failed_total} of {} checks failed", rows.len()));
    Ok(Outcome { document: Document { sections: vec![checks, summary] }, failure, default_format: Format::Json })
}
