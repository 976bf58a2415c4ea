//! Implementations behind the CLI subcommands. Each command returns a
//! [`Report`] (table + params + residuals) that main renders as CSV or
//! JSON; failures carry an exit class (usage vs. identity/domain).

use crate::limits::{m1_limit_report, q_to_1_check, CheckCurve, EpsilonSchedule, LimitsError};
use crate::output::{Cell, Report, Table};
use dualhahn::m1hahn::M1HahnParams;
use dualhahn::operators::{
    classical_b, classical_difference, classical_grid, classical_u, classical_value,
    dunkl_operator, leonard_pair, m1hahn_stencil, qhahn_difference,
};
use dualhahn::poly::monic_from_recurrence;
use dualhahn::qhahn::QHahnParams;
use dualhahn::scalar::{int, Scalar};
use dualhahn::Polynomial;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Command failure with its exit class.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad flags, unsupported combination, malformed input — exit 2.
    Usage(String),
    /// A mathematical precondition failed (pole, degeneracy) — exit 1.
    Domain(String),
    /// A verified identity failed or a convergence order missed — exit 1.
    Identity(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "domain error: {m}"),
            CliError::Identity(m) => write!(f, "identity failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Identity(_) => 1,
        }
    }
}

impl From<dualhahn::Error> for CliError {
    fn from(e: dualhahn::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<LimitsError> for CliError {
    fn from(e: LimitsError) -> Self {
        match e {
            LimitsError::BadSchedule(_) => CliError::Usage(e.to_string()),
            LimitsError::Construction(_) => CliError::Domain(e.to_string()),
            LimitsError::ToleranceExceeded { .. } => CliError::Identity(e.to_string()),
        }
    }
}

/// Fully-parsed family parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    M1 {
        alpha: Scalar,
        beta: Scalar,
        n_max: usize,
    },
    Q {
        a: Scalar,
        b: Scalar,
        q: Scalar,
        n_max: usize,
    },
    Classical {
        alpha: Scalar,
        beta: Scalar,
        n_max: usize,
    },
}

impl FamilySpec {
    fn params(&self) -> Vec<(String, Cell)> {
        match self {
            FamilySpec::M1 { alpha, beta, n_max } => vec![
                ("family".into(), Cell::Text("m1-hahn".into())),
                ("alpha".into(), Cell::Rat(alpha.clone())),
                ("beta".into(), Cell::Rat(beta.clone())),
                ("N".into(), Cell::Int(*n_max as i64)),
            ],
            FamilySpec::Q { a, b, q, n_max } => vec![
                ("family".into(), Cell::Text("q-hahn".into())),
                ("a".into(), Cell::Rat(a.clone())),
                ("b".into(), Cell::Rat(b.clone())),
                ("q".into(), Cell::Rat(q.clone())),
                ("N".into(), Cell::Int(*n_max as i64)),
            ],
            FamilySpec::Classical { alpha, beta, n_max } => vec![
                ("family".into(), Cell::Text("classical".into())),
                ("alpha".into(), Cell::Rat(alpha.clone())),
                ("beta".into(), Cell::Rat(beta.clone())),
                ("N".into(), Cell::Int(*n_max as i64)),
            ],
        }
    }

    fn n_max(&self) -> usize {
        match self {
            FamilySpec::M1 { n_max, .. }
            | FamilySpec::Q { n_max, .. }
            | FamilySpec::Classical { n_max, .. } => *n_max,
        }
    }
}

fn m1(spec: &FamilySpec) -> Result<M1HahnParams, CliError> {
    match spec {
        FamilySpec::M1 { alpha, beta, n_max } => {
            Ok(M1HahnParams::new(alpha.clone(), beta.clone(), *n_max)?)
        }
        _ => unreachable!("caller matched the family"),
    }
}

fn qh(spec: &FamilySpec) -> Result<QHahnParams<Scalar>, CliError> {
    match spec {
        FamilySpec::Q { a, b, q, n_max } => {
            Ok(QHahnParams::new(a.clone(), b.clone(), q.clone(), *n_max)?)
        }
        _ => unreachable!("caller matched the family"),
    }
}

/// `grid`: one row per node with its exact spectral point.
pub fn cmd_grid(spec: &FamilySpec) -> Result<Report, CliError> {
    let mut table = Table::new(&["s", "x"]);
    let points: Vec<Scalar> = match spec {
        FamilySpec::M1 { .. } => {
            let p = m1(spec)?;
            (0..=p.n_max).map(|s| p.grid(s)).collect()
        }
        FamilySpec::Q { .. } => {
            let p = qh(spec)?;
            (0..=p.n_max).map(|s| p.grid(s)).collect()
        }
        FamilySpec::Classical { alpha, beta, n_max } => {
            let points: Vec<Scalar> = (0..=*n_max)
                .map(|s| classical_grid(alpha, beta, s))
                .collect();
            for i in 0..points.len() {
                for j in (i + 1)..points.len() {
                    if points[i] == points[j] {
                        return Err(CliError::Domain(format!(
                            "grid points {i} and {j} coincide"
                        )));
                    }
                }
            }
            points
        }
    };
    for (s, x) in points.iter().enumerate() {
        table.push(vec![Cell::Int(s as i64), Cell::Rat(x.clone())]);
    }
    Ok(Report {
        params: spec.params(),
        table,
        residuals: vec![],
    })
}

fn bool_cell(b: bool) -> Cell {
    Cell::Text(if b { "true" } else { "false" }.into())
}

/// `coeffs`: recurrence data per degree with a branch/compact agreement
/// column recomputed from independent forms.
pub fn cmd_coeffs(spec: &FamilySpec) -> Result<Report, CliError> {
    let mut table = Table::new(&["n", "u", "b", "A", "C", "u_alt", "b_alt", "agree"]);
    match spec {
        FamilySpec::M1 { .. } => {
            let p = m1(spec)?;
            let c = p.recurrence_const();
            for n in 0..=p.n_max {
                let (u, b) = (p.u_monic(n), p.b_monic(n));
                let (a_n, c_n) = (p.a_coeff(n), p.c_coeff(n));
                let (u_alt, b_alt) = (p.u_compact(n), p.b_compact(n));
                let from_branch = &c - &a_n - &c_n;
                let product_ok = n == 0 || u == &p.a_coeff(n - 1) * &c_n;
                let agree = u == u_alt && b == b_alt && b == from_branch && product_ok;
                table.push(vec![
                    Cell::Int(n as i64),
                    Cell::Rat(u),
                    Cell::Rat(b),
                    Cell::Rat(a_n),
                    Cell::Rat(c_n),
                    Cell::Rat(u_alt),
                    Cell::Rat(b_alt),
                    bool_cell(agree),
                ]);
            }
        }
        FamilySpec::Q { .. } => {
            let p = qh(spec)?;
            let c = Scalar::one() + &p.a * &p.b * &p.q;
            for n in 0..=p.n_max {
                let (u, b) = (p.u_monic(n), p.b_monic(n));
                let (a_n, c_n) = (p.a_coeff(n), p.c_coeff(n));
                let u_alt = if n == 0 {
                    Scalar::zero()
                } else {
                    &p.a_coeff(n - 1) * &c_n
                };
                let b_alt = &c - &a_n - &c_n;
                let agree = u == u_alt && b == b_alt;
                table.push(vec![
                    Cell::Int(n as i64),
                    Cell::Rat(u),
                    Cell::Rat(b),
                    Cell::Rat(a_n),
                    Cell::Rat(c_n),
                    Cell::Rat(u_alt),
                    Cell::Rat(b_alt),
                    bool_cell(agree),
                ]);
            }
        }
        FamilySpec::Classical { alpha, beta, n_max } => {
            for n in 0..=*n_max {
                let u = classical_u(alpha, beta, *n_max, n);
                let b = classical_b(alpha, beta, *n_max, n);
                let a_n = classical_a_branch(alpha, *n_max, n);
                let c_n = classical_c_branch(beta, *n_max, n);
                let u_alt = if n == 0 {
                    Scalar::zero()
                } else {
                    classical_a_branch(alpha, *n_max, n - 1) * &c_n
                };
                let b_alt = -&a_n - &c_n;
                let agree = u == u_alt && b == b_alt;
                table.push(vec![
                    Cell::Int(n as i64),
                    Cell::Rat(u),
                    Cell::Rat(b),
                    Cell::Rat(a_n),
                    Cell::Rat(c_n),
                    Cell::Rat(u_alt),
                    Cell::Rat(b_alt),
                    bool_cell(agree),
                ]);
            }
        }
    }
    Ok(Report {
        params: spec.params(),
        table,
        residuals: vec![],
    })
}

fn classical_a_branch(alpha: &Scalar, n_max: usize, n: usize) -> Scalar {
    (int(n as i64) - int(n_max as i64)) * (int(n as i64) + alpha + Scalar::one())
}

fn classical_c_branch(beta: &Scalar, n_max: usize, n: usize) -> Scalar {
    int(n as i64) * (int(n as i64) - beta - int(n_max as i64) - Scalar::one())
}

/// `weights`: node, point, weight rows; κ₀ goes into params and the mass
/// residual Σw − κ₀ (exactly zero) into residuals.
pub fn cmd_weights(spec: &FamilySpec) -> Result<Report, CliError> {
    let measure = match spec {
        FamilySpec::M1 { .. } => m1(spec)?.weights()?,
        FamilySpec::Q { .. } => qh(spec)?.weights()?,
        FamilySpec::Classical { .. } => {
            return Err(CliError::Usage(
                "weights are not implemented for the classical family".into(),
            ))
        }
    };
    let mut table = Table::new(&["s", "x", "w"]);
    for (s, (x, w)) in measure.points.iter().zip(&measure.weights).enumerate() {
        table.push(vec![
            Cell::Int(s as i64),
            Cell::Rat(x.clone()),
            Cell::Rat(w.clone()),
        ]);
    }
    let total = measure
        .weights
        .iter()
        .fold(Scalar::zero(), |acc, w| acc + w);
    let mut params = spec.params();
    params.push(("kappa0".into(), Cell::Rat(measure.kappa0.clone())));
    Ok(Report {
        params,
        table,
        residuals: vec![(
            "mass-minus-kappa0".into(),
            Cell::Rat(total - &measure.kappa0),
        )],
    })
}

/// `eval`: the monic degree-n polynomial at one rational point (`--x`) or
/// at every grid node.
pub fn cmd_eval(spec: &FamilySpec, n: usize, at: Option<&Scalar>) -> Result<Report, CliError> {
    if n > spec.n_max() {
        return Err(CliError::Usage(format!(
            "degree {n} exceeds the family size N = {}",
            spec.n_max()
        )));
    }
    let (poly, points): (Polynomial, Vec<Scalar>) = match spec {
        FamilySpec::M1 { .. } => {
            let p = m1(spec)?;
            (
                p.monic_polys(n).pop().expect("degree list"),
                (0..=p.n_max).map(|s| p.grid(s)).collect(),
            )
        }
        FamilySpec::Q { .. } => {
            let p = qh(spec)?;
            (
                p.monic_polys(n).pop().expect("degree list"),
                (0..=p.n_max).map(|s| p.grid(s)).collect(),
            )
        }
        FamilySpec::Classical { alpha, beta, n_max } => {
            let b: Vec<Scalar> = (0..n).map(|k| classical_b(alpha, beta, *n_max, k)).collect();
            let u: Vec<Scalar> = (0..n).map(|k| classical_u(alpha, beta, *n_max, k)).collect();
            let poly = monic_from_recurrence(&b, &u).pop().expect("degree list");
            (
                poly,
                (0..=*n_max).map(|s| classical_grid(alpha, beta, s)).collect(),
            )
        }
    };
    let mut params = spec.params();
    params.push(("n".into(), Cell::Int(n as i64)));
    let mut table = Table::new(&["s", "x", "value"]);
    match at {
        Some(x) => table.push(vec![
            Cell::Empty,
            Cell::Rat(x.clone()),
            Cell::Rat(poly.eval(x)),
        ]),
        None => {
            for (s, x) in points.iter().enumerate() {
                table.push(vec![
                    Cell::Int(s as i64),
                    Cell::Rat(x.clone()),
                    Cell::Rat(poly.eval(x)),
                ]);
            }
        }
    }
    Ok(Report {
        params,
        table,
        residuals: vec![],
    })
}

struct Suite {
    name: &'static str,
    residual: Option<Scalar>,
    status: String,
    ok: bool,
}

impl Suite {
    fn exact(name: &'static str, residual: Scalar) -> Self {
        let ok = residual.is_zero();
        Suite {
            name,
            status: if ok { "ok".into() } else { "FAIL".into() },
            residual: Some(residual),
            ok,
        }
    }

    fn info(name: &'static str, status: String) -> Self {
        Suite {
            name,
            residual: None,
            status,
            ok: true,
        }
    }
}

fn track(worst: &mut Scalar, candidate: Scalar) {
    let mag = candidate.abs();
    if mag > *worst {
        *worst = mag;
    }
}

fn poly_residual(worst: &mut Scalar, difference: &Polynomial) {
    for c in difference.coeffs() {
        track(worst, c.clone());
    }
}

fn m1_suites(p: &M1HahnParams) -> Result<Vec<Suite>, CliError> {
    let mut suites = Vec::new();
    let polys = p.monic_polys(p.n_max);
    let measure = p.weights()?;

    let mut worst = Scalar::zero();
    for n in 0..=p.n_max {
        for m in 0..=p.n_max {
            let inner = measure.integrate(|y| polys[n].eval(y) * polys[m].eval(y));
            let expect = if n == m {
                (1..=n).fold(measure.kappa0.clone(), |acc, j| acc * p.u_monic(j))
            } else {
                Scalar::zero()
            };
            track(&mut worst, inner - expect);
        }
    }
    suites.push(Suite::exact("orthogonality", worst));

    let mut worst = Scalar::zero();
    for (n, poly) in polys.iter().enumerate() {
        poly_residual(&mut worst, &(&p.closed_poly(n)? - poly));
    }
    suites.push(Suite::exact("closed-form", worst));

    let mut worst = Scalar::zero();
    let c = p.recurrence_const();
    for n in 0..=p.n_max {
        track(&mut worst, p.u_monic(n) - p.u_compact(n));
        track(&mut worst, p.b_monic(n) - p.b_compact(n));
        track(&mut worst, p.b_monic(n) - (&c - &p.a_coeff(n) - &p.c_coeff(n)));
        if n >= 1 {
            track(&mut worst, p.u_monic(n) - &p.a_coeff(n - 1) * &p.c_coeff(n));
        }
    }
    suites.push(Suite::exact("branch-compact", worst));

    let mut worst = Scalar::zero();
    for s in 0..=p.n_max {
        let y = p.grid(s);
        if s + 1 <= p.n_max {
            let expect = if s % 2 == 0 { -&y - int(2) } else { -&y + int(2) };
            track(&mut worst, p.grid(s + 1) - expect);
        }
        if s >= 1 {
            let expect = if s % 2 == 0 { -&y + int(2) } else { -&y - int(2) };
            track(&mut worst, p.grid(s - 1) - expect);
        }
    }
    suites.push(Suite::exact("grid-shift", worst));

    let stencil = m1hahn_stencil(p)?;
    let mut worst = Scalar::zero();
    for (n, poly) in polys.iter().enumerate() {
        let values: Vec<Scalar> = (0..=p.n_max).map(|s| poly.eval(&p.grid(s))).collect();
        let image = stencil.apply(&values);
        for (s, v) in image.iter().enumerate() {
            track(&mut worst, v - int(2 * n as i64) * &values[s]);
        }
    }
    suites.push(Suite::exact("stencil-eigen", worst));

    let dunkl = dunkl_operator(p);
    let mut worst = Scalar::zero();
    for (n, poly) in polys.iter().enumerate() {
        poly_residual(
            &mut worst,
            &(&dunkl.apply(poly)? - &poly.scale(&int(2 * n as i64))),
        );
    }
    suites.push(Suite::exact("dunkl-eigen", worst));

    let mut worst = Scalar::zero();
    for s in 0..=p.n_max {
        let y = p.grid(s);
        if [int(1), int(-1), int(3), int(-3)].contains(&y) {
            continue;
        }
        let (e_up, e_dn, g_up, g_dn) = if s % 2 == 0 {
            (&dunkl.e1, &dunkl.e2, &dunkl.g1, &dunkl.g2)
        } else {
            (&dunkl.e2, &dunkl.e1, &dunkl.g2, &dunkl.g1)
        };
        track(&mut worst, &stencil.u2[s] - e_up.eval(&y)?);
        track(&mut worst, &stencil.v2[s] - e_dn.eval(&y)?);
        track(&mut worst, &stencil.u1[s] - g_up.eval(&y)?);
        track(&mut worst, &stencil.v1[s] - g_dn.eval(&y)?);
    }
    suites.push(Suite::exact("dunkl-stencil-consistency", worst));

    let pair = leonard_pair(p)?;
    let degree = pair.stencil_in_degree_basis()?;
    let tri = pair.multiplication_in_degree_basis()?;
    let mut worst = Scalar::zero();
    let size = p.n_max + 1;
    for i in 0..size {
        for j in 0..size {
            let expect = if i == j { int(2 * i as i64) } else { Scalar::zero() };
            track(&mut worst, degree.get(i, j) - &expect);
            let expect = if i == j {
                p.b_monic(i)
            } else if j + 1 == i {
                Scalar::one()
            } else if i + 1 == j {
                p.u_monic(j)
            } else {
                Scalar::zero()
            };
            track(&mut worst, tri.get(i, j) - &expect);
        }
    }
    suites.push(Suite::exact("leonard-pair", worst));

    let pair = p.christoffel();
    let mut worst = Scalar::zero();
    for (n, poly) in polys.iter().enumerate() {
        poly_residual(&mut worst, &(&pair.reconstruct_monic(n) - poly));
    }
    let q_polys = pair.q_family.polys();
    for k in 0..pair.odd_count() {
        poly_residual(&mut worst, &(&pair.quotient(k)? - &q_polys[k]));
    }
    suites.push(Suite::exact("christoffel", worst));

    let positive = measure.is_positive() && (1..=p.n_max).all(|n| p.u_monic(n) > Scalar::zero());
    suites.push(Suite::info(
        "positivity",
        if positive {
            "positive measure".into()
        } else {
            "measure not positive".into()
        },
    ));
    Ok(suites)
}

fn q_suites(p: &QHahnParams<Scalar>) -> Result<Vec<Suite>, CliError> {
    let mut suites = Vec::new();
    let measure = p.weights()?;
    let polys = p.monic_polys(p.n_max);

    let total = measure
        .weights
        .iter()
        .fold(Scalar::zero(), |acc, w| acc + w);
    suites.push(Suite::exact("mass", total - &measure.kappa0));

    let mut worst = Scalar::zero();
    for n in 0..=p.n_max {
        for m in 0..=p.n_max {
            let inner = measure.integrate(|y| polys[n].eval(y) * polys[m].eval(y));
            let expect = if n == m {
                (1..=n).fold(measure.kappa0.clone(), |acc, j| acc * p.u_monic(j))
            } else {
                Scalar::zero()
            };
            track(&mut worst, inner - expect);
        }
    }
    suites.push(Suite::exact("orthogonality", worst));

    let mut worst = Scalar::zero();
    for n in 0..=p.n_max {
        let values: Vec<Scalar> = (0..=p.n_max)
            .map(|s| p.series(n, s))
            .collect::<Result<_, _>>()?;
        let inner = measure
            .weights
            .iter()
            .zip(&values)
            .fold(Scalar::zero(), |acc, (w, v)| acc + w * v * v);
        let expect = (1..=n).fold(measure.kappa0.clone(), |acc, j| {
            acc * p.c_coeff(j) / p.a_coeff(j - 1)
        });
        track(&mut worst, inner - expect);
    }
    suites.push(Suite::exact("series-norms", worst));

    let op = qhahn_difference(p);
    let mut worst = Scalar::zero();
    for n in 0..=p.n_max {
        let values: Vec<Scalar> = (0..=p.n_max)
            .map(|s| p.series(n, s))
            .collect::<Result<_, _>>()?;
        let image = op.apply(&values);
        let lambda = p.eigenvalue(n);
        for (s, v) in image.iter().enumerate() {
            track(&mut worst, v - &lambda * &values[s]);
        }
    }
    suites.push(Suite::exact("difference-eigen", worst));
    Ok(suites)
}

fn classical_suites(alpha: &Scalar, beta: &Scalar, n_max: usize) -> Result<Vec<Suite>, CliError> {
    let mut suites = Vec::new();
    let op = classical_difference(alpha, beta, n_max);
    let mut worst = Scalar::zero();
    for n in 0..=n_max {
        let values: Vec<Scalar> = (0..=n_max)
            .map(|s| classical_value(alpha, beta, n_max, n, s))
            .collect::<Result<_, _>>()?;
        let image = op.apply(&values);
        for (s, v) in image.iter().enumerate() {
            track(&mut worst, v + int(n as i64) * &values[s]);
        }
    }
    suites.push(Suite::exact("operator-eigen", worst));

    let mut worst = Scalar::zero();
    for n in 0..=n_max {
        let u_alt = if n == 0 {
            Scalar::zero()
        } else {
            classical_a_branch(alpha, n_max, n - 1) * classical_c_branch(beta, n_max, n)
        };
        track(&mut worst, classical_u(alpha, beta, n_max, n) - u_alt);
        let b_alt = -classical_a_branch(alpha, n_max, n) - classical_c_branch(beta, n_max, n);
        track(&mut worst, classical_b(alpha, beta, n_max, n) - b_alt);
    }
    suites.push(Suite::exact("coefficient-product", worst));
    Ok(suites)
}

/// `verify`: runs every identity suite for the family and reports the max
/// residual per suite; the boolean is true when all non-informational
/// suites hold exactly.
pub fn cmd_verify(spec: &FamilySpec) -> Result<(Report, bool), CliError> {
    let suites = match spec {
        FamilySpec::M1 { .. } => m1_suites(&m1(spec)?)?,
        FamilySpec::Q { .. } => q_suites(&qh(spec)?)?,
        FamilySpec::Classical { alpha, beta, n_max } => {
            classical_suites(alpha, beta, *n_max)?
        }
    };
    let mut table = Table::new(&["suite", "residual", "status"]);
    let mut residuals = Vec::new();
    let mut all_ok = true;
    for s in &suites {
        all_ok &= s.ok;
        let residual_cell = match &s.residual {
            Some(r) => Cell::Rat(r.clone()),
            None => Cell::Empty,
        };
        table.push(vec![
            Cell::Text(s.name.into()),
            residual_cell.clone(),
            Cell::Text(s.status.clone()),
        ]);
        residuals.push((s.name.to_string(), residual_cell));
    }
    Ok((
        Report {
            params: spec.params(),
            table,
            residuals,
        },
        all_ok,
    ))
}

/// First failing suite name for the exit diagnostic.
pub fn first_failing_suite(report: &Report) -> Option<String> {
    report.table.rows.iter().find_map(|row| {
        match (row.first(), row.last()) {
            (Some(Cell::Text(name)), Some(Cell::Text(status))) if status == "FAIL" => {
                Some(name.clone())
            }
            _ => None,
        }
    })
}

/// `operator`: the generalized Leonard pair matrices in both bases plus a
/// bandwidth report. Specific to the m1-hahn family.
pub fn cmd_operator(spec: &FamilySpec) -> Result<Report, CliError> {
    let FamilySpec::M1 { .. } = spec else {
        return Err(CliError::Usage(
            "the operator command is defined for --family m1-hahn".into(),
        ));
    };
    let p = m1(spec)?;
    let pair = leonard_pair(&p)?;
    let degree = pair.stencil_in_degree_basis()?;
    let tri = pair.multiplication_in_degree_basis()?;
    let matrices: [(&str, &dualhahn::matrix::Matrix<Scalar>); 4] = [
        ("stencil", &pair.stencil),
        ("grid", &pair.multiplication),
        ("degree", &degree),
        ("recurrence", &tri),
    ];
    let mut table = Table::new(&["record", "matrix", "i", "j", "value"]);
    for (name, m) in &matrices {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                table.push(vec![
                    Cell::Text("entry".into()),
                    Cell::Text((*name).into()),
                    Cell::Int(i as i64),
                    Cell::Int(j as i64),
                    Cell::Rat(m.get(i, j).clone()),
                ]);
            }
        }
    }
    for (name, m) in &matrices {
        let (below, above) = m.bandwidth();
        table.push(vec![
            Cell::Text("bandwidth".into()),
            Cell::Text((*name).into()),
            Cell::Int(below as i64),
            Cell::Int(above as i64),
            Cell::Empty,
        ]);
    }
    Ok(Report {
        params: spec.params(),
        table,
        residuals: vec![],
    })
}

fn curve_rows(table: &mut Table, curve: &CheckCurve) {
    let index_cell = || match curve.index {
        Some(i) => Cell::Int(i as i64),
        None => Cell::Empty,
    };
    for (eps, err) in curve.eps.iter().zip(&curve.errors) {
        table.push(vec![
            Cell::Text(curve.name.clone()),
            index_cell(),
            Cell::Float(*eps),
            Cell::Float(*err),
            Cell::Empty,
        ]);
    }
    table.push(vec![
        Cell::Text(curve.name.clone()),
        index_cell(),
        Cell::Text("fit".into()),
        Cell::Empty,
        match curve.order {
            Some(o) => Cell::Float(o),
            None => Cell::Text("exact".into()),
        },
    ]);
}

/// `limits`: convergence sweeps toward this family. m1-hahn runs the
/// q → −1 suite; classical runs the q → 1 suite. The report is returned
/// even when a fitted order leaves its admissible window; the failure (if
/// any) rides alongside so the caller can print before exiting nonzero.
pub fn cmd_limits(
    spec: &FamilySpec,
    schedule: &EpsilonSchedule,
) -> Result<(Report, Option<CliError>), CliError> {
    let report = match spec {
        FamilySpec::M1 { .. } => m1_limit_report(&m1(spec)?, schedule)?,
        FamilySpec::Classical { alpha, beta, n_max } => {
            q_to_1_check(alpha, beta, *n_max, schedule)
        }
        FamilySpec::Q { .. } => {
            return Err(CliError::Usage(
                "limits run toward --family m1-hahn (q → −1) or --family classical (q → 1)"
                    .into(),
            ))
        }
    };
    let mut table = Table::new(&["check", "n", "epsilon", "error", "order"]);
    for curve in &report.curves {
        curve_rows(&mut table, curve);
    }
    let mut residuals = Vec::new();
    for curve in &report.curves {
        let name = match curve.index {
            Some(i) => format!("{}[{i}]", curve.name),
            None => curve.name.clone(),
        };
        residuals.push((
            name,
            match curve.order {
                Some(o) => Cell::Float(o),
                None => Cell::Text("exact".into()),
            },
        ));
    }
    let failure = report.first_failure().err().map(CliError::from);
    Ok((
        Report {
            params: spec.params(),
            table,
            residuals,
        },
        failure,
    ))
}
