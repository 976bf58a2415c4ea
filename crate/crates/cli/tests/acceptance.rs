//! Acceptance gate: ten numbered criteria, each printed as a single
//! PASS/FAIL line. Runs without the libtest harness so the report is
//! visible in every `cargo test` invocation; exits nonzero on any FAIL.

use dualhahn::m1hahn::M1HahnParams;
use dualhahn::operators::{
    classical_difference, classical_u, classical_value, dunkl_operator, leonard_pair,
    m1hahn_stencil,
};
use dualhahn::scalar::{frac, int, Scalar};
use dualhahn::Polynomial;
use dualhahn_cli::limits::{
    m1_limit_report, q_to_1_check, scalar_eigen_first_order, EpsilonSchedule,
};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

/// Pole-free random parameters: α on the thirds lattice, β on the fifths
/// lattice, so α + β is never an integer and every μ-number stays nonzero.
fn random_params(rng: &mut StdRng, parity: usize) -> (Scalar, Scalar, usize) {
    let k = loop {
        let k = rng.gen_range(1..=36);
        if k % 3 != 0 {
            break k;
        }
    };
    let m = loop {
        let m = rng.gen_range(1..=60);
        if m % 5 != 0 {
            break m;
        }
    };
    let n_max = loop {
        let n = rng.gen_range(1..=12usize);
        if n % 2 == parity {
            break n;
        }
    };
    (frac(k, 3), frac(m, 5), n_max)
}

fn sweep(seed: u64) -> Vec<(Scalar, Scalar, usize)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sets = vec![
        (int(3), int(3), 2usize), // hand-checked even anchor
        (int(1), int(1), 1),      // hand-checked odd anchor
    ];
    for parity in 0..2 {
        for _ in 0..20 {
            sets.push(random_params(&mut rng, parity));
        }
    }
    sets
}

fn families(sets: &[(Scalar, Scalar, usize)]) -> Result<Vec<M1HahnParams>, String> {
    sets.iter()
        .map(|(a, b, n)| {
            M1HahnParams::new(a.clone(), b.clone(), *n)
                .map_err(|e| format!("construction at ({a}, {b}, {n}): {e}"))
        })
        .collect()
}

fn criterion_1_orthogonality(fams: &[M1HahnParams]) -> Result<(), String> {
    // brute-force re-derivation of the hand-checked anchor first
    let anchor = M1HahnParams::new(int(3), int(3), 2).map_err(|e| e.to_string())?;
    let measure = anchor.weights().map_err(|e| e.to_string())?;
    if measure.points != vec![int(-5), int(3), int(-1)] {
        return Err("anchor grid is not (-5, 3, -1)".into());
    }
    if measure.weights != vec![int(1), int(1), int(2)] || measure.kappa0 != int(4) {
        return Err("anchor weights are not (1, 1, 2) with mass 4".into());
    }
    let polys = anchor.monic_polys(2);
    let norm2 = measure.integrate(|y| polys[2].eval(y) * polys[2].eval(y));
    let expected = &measure.kappa0 * anchor.u_monic(1) * anchor.u_monic(2);
    if norm2 != expected || expected != int(256) {
        return Err(format!("anchor n=2 norm {norm2} != 256"));
    }

    let start = Instant::now();
    for p in fams {
        let measure = p.weights().map_err(|e| e.to_string())?;
        let polys = p.monic_polys(p.n_max);
        let values: Vec<Vec<Scalar>> = polys
            .iter()
            .map(|poly| measure.points.iter().map(|y| poly.eval(y)).collect())
            .collect();
        for n in 0..=p.n_max {
            for m in n..=p.n_max {
                let inner = measure
                    .weights
                    .iter()
                    .zip(values[n].iter().zip(&values[m]))
                    .fold(Scalar::zero(), |acc, (w, (a, b))| acc + w * a * b);
                let expect = if n == m {
                    (1..=n).fold(measure.kappa0.clone(), |acc, j| acc * p.u_monic(j))
                } else {
                    Scalar::zero()
                };
                if inner != expect {
                    return Err(format!(
                        "residual {} at (n, m) = ({n}, {m}), N = {}",
                        inner - expect,
                        p.n_max
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        return Err(format!("sweep took {elapsed:?}, budget is 1 s"));
    }
    Ok(())
}

fn criterion_2_closed_forms(fams: &[M1HahnParams]) -> Result<(), String> {
    let anchor = M1HahnParams::new(int(3), int(3), 2).map_err(|e| e.to_string())?;
    let shifted = anchor.monic_polys(2)[2].compose_affine(&Scalar::one(), &int(-1));
    if shifted != Polynomial::from_coeffs(vec![int(-8), Scalar::zero(), Scalar::one()]) {
        return Err("anchor degree-2 shifted polynomial is not x^2 - 8".into());
    }
    for p in fams {
        let polys = p.monic_polys(p.n_max);
        for (n, poly) in polys.iter().enumerate() {
            let closed = p.closed_poly(n).map_err(|e| e.to_string())?;
            if &closed != poly {
                return Err(format!("degree {n} mismatch at N = {}", p.n_max));
            }
        }
    }
    Ok(())
}

fn criterion_3_branch_compact(fams: &[M1HahnParams]) -> Result<(), String> {
    for p in fams {
        let c = p.recurrence_const();
        for n in 0..=p.n_max {
            if p.u_monic(n) != p.u_compact(n) || p.b_monic(n) != p.b_compact(n) {
                return Err(format!("compact form differs at n = {n}, N = {}", p.n_max));
            }
            if p.b_monic(n) != &c - &p.a_coeff(n) - &p.c_coeff(n) {
                return Err(format!("branch b differs at n = {n}, N = {}", p.n_max));
            }
            if n >= 1 && p.u_monic(n) != &p.a_coeff(n - 1) * &p.c_coeff(n) {
                return Err(format!("branch u differs at n = {n}, N = {}", p.n_max));
            }
        }
    }
    Ok(())
}

fn criterion_4_stencil(fams: &[M1HahnParams]) -> Result<(), String> {
    for p in fams {
        let stencil = m1hahn_stencil(p).map_err(|e| e.to_string())?;
        let nn = p.n_max;
        let boundary = [
            (&stencil.u2[nn], "u2 at s = N"),
            (&stencil.u1[nn], "u1 at s = N"),
            (&stencil.v1[0], "v1 at s = 0"),
            (&stencil.v2[0], "v2 at s = 0"),
        ];
        for (value, what) in boundary {
            if !value.is_zero() {
                return Err(format!("{what} is {value}, expected 0, N = {nn}"));
            }
        }
        if nn >= 1 && (!stencil.u2[nn - 1].is_zero() || !stencil.v2[1.min(nn)].is_zero()) {
            return Err(format!("inner boundary coefficient nonzero at N = {nn}"));
        }
        let polys = p.monic_polys(nn);
        for (n, poly) in polys.iter().enumerate() {
            let values: Vec<Scalar> = (0..=nn).map(|s| poly.eval(&p.grid(s))).collect();
            let image = stencil.apply(&values);
            for (s, v) in image.iter().enumerate() {
                if *v != int(2 * n as i64) * &values[s] {
                    return Err(format!("eigenvalue fails at n = {n}, s = {s}, N = {nn}"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_5_dunkl(fams: &[M1HahnParams]) -> Result<(), String> {
    for p in fams {
        let dunkl = dunkl_operator(p);
        let polys = p.monic_polys(p.n_max);
        for (n, poly) in polys.iter().enumerate() {
            let image = dunkl.apply(poly).map_err(|e| e.to_string())?;
            if image != poly.scale(&int(2 * n as i64)) {
                return Err(format!("H R_{n} != 2n R_{n} at N = {}", p.n_max));
            }
        }
        for k in 0..=p.n_max {
            let mut coeffs = vec![Scalar::zero(); k + 1];
            coeffs[k] = Scalar::one();
            let image = dunkl
                .apply(&Polynomial::from_coeffs(coeffs))
                .map_err(|e| e.to_string())?;
            if image.degree().is_some_and(|d| d > k) {
                return Err(format!("H raises x^{k} to degree {:?}", image.degree()));
            }
        }
        let stencil = m1hahn_stencil(p).map_err(|e| e.to_string())?;
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
            let pairs = [
                (&stencil.u2[s], e_up, "u2"),
                (&stencil.v2[s], e_dn, "v2"),
                (&stencil.u1[s], g_up, "u1"),
                (&stencil.v1[s], g_dn, "v1"),
            ];
            for (coeff, fun, what) in pairs {
                if *coeff != fun.eval(&y).map_err(|e| e.to_string())? {
                    return Err(format!("{what} at s = {s} disagrees, N = {}", p.n_max));
                }
            }
        }
    }
    Ok(())
}

fn criterion_6_leonard_pair(fams: &[M1HahnParams]) -> Result<(), String> {
    // force the stated ceiling alongside the random sweep
    let mut extra = vec![
        M1HahnParams::new(frac(37, 3), frac(61, 5), 12).map_err(|e| e.to_string())?,
        M1HahnParams::new(frac(34, 3), frac(58, 5), 11).map_err(|e| e.to_string())?,
    ];
    let mut all: Vec<&M1HahnParams> = fams.iter().collect();
    all.extend(extra.iter_mut().map(|p| &*p));
    for p in all {
        let nn = p.n_max;
        let pair = leonard_pair(p).map_err(|e| e.to_string())?;
        let (below, above) = pair.stencil.bandwidth();
        if below > 2 || above > 2 {
            return Err(format!("stencil bandwidth ({below}, {above}) at N = {nn}"));
        }
        if pair.multiplication.bandwidth() != (0, 0) {
            return Err(format!("grid matrix is not diagonal at N = {nn}"));
        }
        for s in 0..=nn {
            if *pair.multiplication.get(s, s) != p.grid(s) {
                return Err(format!("grid diagonal s = {s} differs at N = {nn}"));
            }
        }
        let degree = pair.stencil_in_degree_basis().map_err(|e| e.to_string())?;
        let tri = pair
            .multiplication_in_degree_basis()
            .map_err(|e| e.to_string())?;
        let (below, above) = tri.bandwidth();
        if below > 1 || above > 1 {
            return Err(format!("partner bandwidth ({below}, {above}) at N = {nn}"));
        }
        for i in 0..=nn {
            for j in 0..=nn {
                let expect = if i == j { int(2 * i as i64) } else { Scalar::zero() };
                if *degree.get(i, j) != expect {
                    return Err(format!("degree basis ({i}, {j}) differs at N = {nn}"));
                }
                let expect = if i == j {
                    p.b_monic(i)
                } else if j + 1 == i {
                    Scalar::one()
                } else if i + 1 == j {
                    p.u_monic(j)
                } else {
                    Scalar::zero()
                };
                if *tri.get(i, j) != expect {
                    return Err(format!("tridiagonal ({i}, {j}) differs at N = {nn}"));
                }
            }
        }
    }
    Ok(())
}

fn criterion_7_christoffel(fams: &[M1HahnParams]) -> Result<(), String> {
    for p in fams.iter().filter(|p| p.n_max % 2 == 0) {
        let pair = p.christoffel();
        let polys = p.monic_polys(p.n_max);
        let p_polys = pair.p_family.polys();
        for n in 0..=p.n_max / 2 {
            // even members reconstruct as P_n(x^2) in the shifted variable
            if pair.reconstruct_shifted(2 * n) != p_polys[n].inflate() {
                return Err(format!("even reconstruction fails at n = {n}, N = {}", p.n_max));
            }
        }
        for (n, poly) in polys.iter().enumerate() {
            if &pair.reconstruct_monic(n) != poly {
                return Err(format!("reconstruction fails at n = {n}, N = {}", p.n_max));
            }
        }
        let q_polys = pair.q_family.polys();
        for k in 0..pair.odd_count() {
            // quotient() errors out unless the division leaves zero remainder
            let quot = pair.quotient(k).map_err(|e| e.to_string())?;
            if quot != q_polys[k] {
                return Err(format!("kernel family differs at k = {k}, N = {}", p.n_max));
            }
        }
    }
    Ok(())
}

fn criterion_8_limits() -> Result<(), String> {
    let start = Instant::now();
    let schedule = EpsilonSchedule::default_geometric();
    for (alpha, beta, n_max) in [(frac(10, 3), frac(11, 5), 6usize), (frac(7, 3), frac(6, 5), 5)] {
        let p = M1HahnParams::new(alpha, beta, n_max).map_err(|e| e.to_string())?;
        let report = m1_limit_report(&p, &schedule).map_err(|e| e.to_string())?;
        report.first_failure().map_err(|e| e.to_string())?;
        for name in ["recurrence", "operator"] {
            let curve = report
                .curves
                .iter()
                .find(|c| c.name == name)
                .ok_or_else(|| format!("missing {name} curve"))?;
            let order = curve.order.ok_or_else(|| format!("{name} order not fitted"))?;
            if !(0.8..=1.2).contains(&order) {
                return Err(format!("{name} order {order} outside 1.0 +/- 0.2"));
            }
        }
    }
    for n in 0..=6usize {
        if scalar_eigen_first_order(n) != int(2 * n as i64) {
            return Err(format!("symbolic first-order scalar limit fails at n = {n}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 5.0 {
        return Err(format!("limit checks took {elapsed:?}, budget is 5 s"));
    }
    Ok(())
}

fn criterion_9_classical() -> Result<(), String> {
    let (alpha, beta, n_max) = (int(1), int(2), 3usize);
    let op = classical_difference(&alpha, &beta, n_max);
    for n in 0..=n_max {
        let values: Vec<Scalar> = (0..=n_max)
            .map(|s| classical_value(&alpha, &beta, n_max, n, s))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let image = op.apply(&values);
        for (s, v) in image.iter().enumerate() {
            if *v != -int(n as i64) * &values[s] {
                return Err(format!("operator eigenvalue fails at n = {n}, s = {s}"));
            }
        }
    }
    if classical_u(&alpha, &beta, n_max, 1) != int(30) {
        return Err("anchor u_1 != 30".into());
    }
    let report = q_to_1_check(&alpha, &beta, n_max, &EpsilonSchedule::default_geometric());
    report.first_failure().map_err(|e| e.to_string())?;
    for curve in &report.curves {
        if let Some(order) = curve.order {
            if order < 0.8 {
                return Err(format!("{} order {order} < 1 (tolerance 0.8)", curve.name));
            }
        }
    }
    Ok(())
}

fn criterion_10_positivity() -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_1dea);
    let mut eps = || frac(rng.gen_range(1..=16), 8); // random in (0, 2]
    for trial in 0..12 {
        let parity = trial % 2;
        let n_max = 2 * (trial / 2 % 3 + 1) + parity; // N in {2,4,6} / {3,5,7}
        let (alpha, beta) = if parity == 0 {
            (int(n_max as i64) + eps(), int(n_max as i64) + eps())
        } else {
            (int(-1) + eps(), int(-1) + eps())
        };
        let p = M1HahnParams::new(alpha.clone(), beta.clone(), n_max)
            .map_err(|e| format!("({alpha}, {beta}, {n_max}): {e}"))?;
        for n in 1..=n_max {
            if p.u_monic(n) <= Scalar::zero() {
                return Err(format!("u_{n} <= 0 at ({alpha}, {beta}, {n_max})"));
            }
        }
        let measure = p.weights().map_err(|e| e.to_string())?;
        if !measure.is_positive() {
            return Err(format!("weights not positive at ({alpha}, {beta}, {n_max})"));
        }
        let evens: Vec<Scalar> = (0..=n_max).step_by(2).map(|s| p.grid(s)).collect();
        let odds: Vec<Scalar> = (1..=n_max).step_by(2).map(|s| p.grid(s)).collect();
        if parity == 0 && (evens.len() != n_max / 2 + 1 || odds.len() != n_max / 2) {
            return Err(format!("biset cardinalities wrong at N = {n_max}"));
        }
        if evens.iter().any(|e| odds.contains(e)) {
            return Err(format!("spectral bisets intersect at ({alpha}, {beta}, {n_max})"));
        }
    }
    Ok(())
}

fn main() {
    let sets = sweep(0x0dd_ba11);
    let fams = match families(&sets) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("could not build the parameter sweep: {e}");
            std::process::exit(1);
        }
    };

    let criteria: Vec<(&str, Box<dyn Fn() -> Result<(), String>>)> = vec![
        (
            "exact orthogonality",
            Box::new(|| criterion_1_orthogonality(&fams)),
        ),
        (
            "closed forms match recurrence",
            Box::new(|| criterion_2_closed_forms(&fams)),
        ),
        (
            "branch and compact coefficients agree",
            Box::new(|| criterion_3_branch_compact(&fams)),
        ),
        (
            "five-diagonal stencil bispectrality",
            Box::new(|| criterion_4_stencil(&fams)),
        ),
        ("Dunkl shift operator identity", Box::new(|| criterion_5_dunkl(&fams))),
        (
            "generalized Leonard pair",
            Box::new(|| criterion_6_leonard_pair(&fams)),
        ),
        (
            "Christoffel factorization",
            Box::new(|| criterion_7_christoffel(&fams)),
        ),
        ("limit convergence", Box::new(criterion_8_limits)),
        ("classical dual Hahn limits", Box::new(criterion_9_classical)),
        ("positivity regime", Box::new(criterion_10_positivity)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:2} ({name}): PASS", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:2} ({name}): FAIL - {reason}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
