use std::fmt::Write as _;

use difftangent::functor::{tangent, Catalog, Dimension, FunctorKind, Space, TangentReport, Witness};
use difftangent::orbit::{
    describe_lift, pushforward, rank_obstruction, theorem2_dim, validate_lift, Derivation, PolyLift,
};
use difftangent::quad::{cf_expand, gl2z_equivalent, mobius_witness, QuadraticIrrational};
use difftangent::torus::{hom_nonconstant, IrrationalTorus};

use crate::args::{FunctorArg, PairArgs, TableCommand, TangentArgs, WitnessCommand};
use crate::polytext::parse_lift;
use crate::record::OutputRecord;
use crate::spec::{parse_slope, parse_space, SpecError};
use crate::{Outcome, EXIT_DETERMINED, EXIT_NO_WITNESS, EXIT_UNDETERMINED};

/// An input error; the message becomes stderr and the exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

fn flag_error(flag: &str, e: SpecError) -> InputError {
    InputError(format!("{flag}: {e}"))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn witness_line(w: &Witness) -> String {
    match w {
        Witness::Mobius(m) => m.to_string(),
        Witness::Lift(l) => describe_lift(l),
    }
}

/// Human-readable report, one `key: value` line per field.
pub fn render_report(r: &TangentReport) -> String {
    let generators = if r.generators.is_empty() {
        "none".to_string()
    } else {
        r.generators.join("; ")
    };
    let test = r
        .functor
        .test_space()
        .map_or_else(|| "none".to_string(), ToString::to_string);
    let witness = r.witness.as_ref().map_or_else(|| "none".to_string(), witness_line);
    format!(
        "space:         {}\nfunctor:       {}\ntest:          {}\ndimension:     {}\ngenerators:    {}\nwitness:       {}\nstatus:        {}\njustification: {}\n",
        r.space,
        r.functor.name(),
        test,
        r.dimension,
        generators,
        witness,
        r.status,
        r.justification
    )
}

pub fn tangent_cmd(a: &TangentArgs, input: &[String]) -> Result<Outcome, InputError> {
    let space = parse_space(&a.space).map_err(|e| flag_error("--space", e))?;
    let test = a
        .test
        .as_deref()
        .map(parse_space)
        .transpose()
        .map_err(|e| flag_error("--test", e))?;
    let functor = match (a.functor, test) {
        (FunctorArg::Internal, None) => FunctorKind::Internal,
        (FunctorArg::Right, None) => FunctorKind::Right,
        (FunctorArg::Vincent, None) => FunctorKind::Vincent,
        (FunctorArg::YInternal, Some(t)) => FunctorKind::y_internal(t),
        (FunctorArg::YRight, Some(t)) => FunctorKind::y_right(t),
        (FunctorArg::YInternal | FunctorArg::YRight, None) => {
            return Err(InputError("--test is required for y-internal and y-right".into()))
        }
        (_, Some(_)) => {
            return Err(InputError("--test only applies to y-internal and y-right".into()))
        }
    };
    let report = tangent(&space, &functor);
    let code = match report.dimension {
        Dimension::Determined(_) => EXIT_DETERMINED,
        Dimension::Undetermined => EXIT_UNDETERMINED,
    };
    let stdout = if a.json {
        to_json(&OutputRecord::new(&report, input))
    } else {
        render_report(&report)
    };
    Ok(Outcome::new(code, stdout))
}

fn parse_slope_list(list: &str) -> Result<Vec<QuadraticIrrational>, InputError> {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for (i, item) in list.split(',').enumerate() {
        match parse_slope(item.trim()) {
            Ok(x) => out.push(x),
            Err(e) => errors.push(format!("slope {} ({:?}): {}", i + 1, item.trim(), e)),
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(InputError(errors.join("\n")))
    }
}

fn finish(code: i32, reports: &[TangentReport], json: bool, input: &[String], human: String) -> Outcome {
    let stdout = if json {
        let records: Vec<OutputRecord> = reports.iter().map(|r| OutputRecord::new(r, input)).collect();
        to_json(&records)
    } else {
        human
    };
    Outcome::new(code, stdout)
}

fn table_code(reports: &[TangentReport]) -> i32 {
    if reports.iter().any(|r| r.dimension == Dimension::Undetermined) {
        EXIT_UNDETERMINED
    } else {
        EXIT_DETERMINED
    }
}

fn matrix_text(out: &mut String, corner: &str, labels: &[String], cells: &[Vec<&TangentReport>]) {
    let width = labels.iter().map(String::len).max().unwrap_or(1).max(corner.len());
    let _ = write!(out, "{corner:<width$}");
    for l in labels {
        let _ = write!(out, "  {l:>3}");
    }
    out.push('\n');
    for (label, row) in labels.iter().zip(cells) {
        let _ = write!(out, "{label:<width$}");
        for r in row {
            let _ = write!(out, "  {:>3}", r.dimension.to_string());
        }
        out.push('\n');
    }
}

pub fn table_cmd(t: &TableCommand, input: &[String]) -> Result<Outcome, InputError> {
    match t {
        TableCommand::Classical {
            max_euclidean,
            max_orbit,
            slopes,
            json,
        } => {
            let mut catalog = Catalog {
                max_euclidean: *max_euclidean,
                max_orbit: *max_orbit,
                ..Catalog::default()
            };
            if let Some(list) = slopes {
                catalog.slopes = parse_slope_list(list)?;
            }
            let functors = [FunctorKind::Internal, FunctorKind::Vincent, FunctorKind::Right];
            let spaces = catalog.spaces();
            let reports: Vec<TangentReport> = spaces
                .iter()
                .flat_map(|s| functors.iter().map(move |f| tangent(s, f)))
                .collect();
            let width = spaces.iter().map(|s| s.to_string().len()).max().unwrap_or(5).max(5);
            let mut human = format!("{:<width$}  internal  vincent  right\n", "space");
            for (s, row) in spaces.iter().zip(reports.chunks(3)) {
                let _ = writeln!(
                    human,
                    "{:<width$}  {:>8}  {:>7}  {:>5}",
                    s.to_string(),
                    row[0].dimension.to_string(),
                    row[1].dimension.to_string(),
                    row[2].dimension.to_string()
                );
            }
            Ok(finish(table_code(&reports), &reports, *json, input, human))
        }
        TableCommand::Torus { slopes, json } => {
            let slopes = parse_slope_list(slopes)?;
            let tori: Vec<Space> = slopes.into_iter().map(Space::torus).collect();
            let cells: Vec<Vec<TangentReport>> = tori
                .iter()
                .map(|test| tori.iter().map(|s| tangent(s, &FunctorKind::y_internal(test.clone()))).collect())
                .collect();
            let labels: Vec<String> = (1..=tori.len()).map(|i| i.to_string()).collect();
            let mut human = String::from("y-internal(torus:β) at torus:α; rows: test β, columns: space α\nslopes:\n");
            for (i, t) in tori.iter().enumerate() {
                let _ = writeln!(human, "  {}: {}", i + 1, t);
            }
            let refs: Vec<Vec<&TangentReport>> = cells.iter().map(|r| r.iter().collect()).collect();
            matrix_text(&mut human, "β\\α", &labels, &refs);
            human.push_str("witnesses (α = (a + b·β)/(c + d·β)):\n");
            for (i, row) in cells.iter().enumerate() {
                for (j, r) in row.iter().enumerate() {
                    if let Some(w) = &r.witness {
                        let _ = writeln!(human, "  β={} α={}: {}", i + 1, j + 1, witness_line(w));
                    }
                }
            }
            let flat: Vec<TangentReport> = cells.into_iter().flatten().collect();
            Ok(finish(table_code(&flat), &flat, *json, input, human))
        }
        TableCommand::Orbit { max, json } => {
            if *max == 0 {
                return Err(InputError("--max: must be at least 1".into()));
            }
            let cells: Vec<Vec<TangentReport>> = (1..=*max)
                .map(|m| {
                    (1..=*max)
                        .map(|n| tangent(&Space::orbit(n), &FunctorKind::y_right(Space::orbit(m))))
                        .collect()
                })
                .collect();
            let labels: Vec<String> = (1..=*max).map(|i| i.to_string()).collect();
            let mut human = String::from("y-right(orbit:m) at orbit:n; rows: test m, columns: space n\n");
            let refs: Vec<Vec<&TangentReport>> = cells.iter().map(|r| r.iter().collect()).collect();
            matrix_text(&mut human, "m\\n", &labels, &refs);
            human.push_str("witnesses:\n");
            for (i, row) in cells.iter().enumerate() {
                for (j, r) in row.iter().enumerate() {
                    let note = match &r.witness {
                        Some(w) => witness_line(w),
                        None => format!("{} (rank obstruction)", r.status),
                    };
                    let _ = writeln!(human, "  m={} n={}: {}", i + 1, j + 1, note);
                }
            }
            let flat: Vec<TangentReport> = cells.into_iter().flatten().collect();
            Ok(finish(table_code(&flat), &flat, *json, input, human))
        }
    }
}

fn parse_pair(p: &PairArgs) -> Result<(QuadraticIrrational, QuadraticIrrational), InputError> {
    let alpha = parse_slope(&p.alpha).map_err(|e| flag_error("--alpha", e))?;
    let beta = parse_slope(&p.beta).map_err(|e| flag_error("--beta", e))?;
    Ok((alpha, beta))
}

fn lift_text(lift: &PolyLift) -> Result<Outcome, InputError> {
    let (m, n) = (lift.source_dim(), lift.target_dim());
    let mut out = format!("lift:        {lift}\nmap:         R^{m} -> R^{n} over H_{m} -> H_{n}\n");
    let germ = match validate_lift(lift) {
        Ok(g) => g,
        Err(e) => {
            let _ = writeln!(out, "valid:       no ({e})\nwitness:     none");
            return Ok(Outcome::new(EXIT_NO_WITNESS, out));
        }
    };
    let image = pushforward(lift, &Derivation::generator()).expect("validated lift");
    let rank = rank_obstruction(lift).expect("validated lift");
    let scalar = rank.scalar.as_ref().map_or_else(|| "none".to_string(), ToString::to_string);
    let _ = write!(
        out,
        "valid:       yes\npsi:         {}\npushforward: {}\ngram scalar: {}\n",
        germ.psi(),
        image.coeff,
        scalar
    );
    Ok(Outcome::new(EXIT_DETERMINED, out))
}

pub fn witness_cmd(w: &WitnessCommand) -> Result<Outcome, InputError> {
    match w {
        WitnessCommand::Mobius(p) => {
            let (alpha, beta) = parse_pair(p)?;
            let mut out = format!("alpha:   {alpha}\nbeta:    {beta}\n");
            match mobius_witness(&alpha, &beta) {
                Some(w) => {
                    let action = hom_nonconstant(&IrrationalTorus::new(alpha), &IrrationalTorus::new(beta))
                        .basis_action
                        .expect("affine witness");
                    let _ = write!(out, "witness: {w}\nbasis action: {action}\n");
                    Ok(Outcome::new(EXIT_DETERMINED, out))
                }
                None => {
                    out.push_str("witness: none\n");
                    Ok(Outcome::new(EXIT_NO_WITNESS, out))
                }
            }
        }
        WitnessCommand::Diffeo(p) => {
            let (alpha, beta) = parse_pair(p)?;
            let mut out = format!(
                "alpha:   {}\ncf:      {}\nbeta:    {}\ncf:      {}\n",
                alpha,
                cf_expand(&alpha),
                beta,
                cf_expand(&beta)
            );
            match gl2z_equivalent(&alpha, &beta) {
                Some(w) => {
                    let _ = writeln!(out, "witness: {w}");
                    Ok(Outcome::new(EXIT_DETERMINED, out))
                }
                None => {
                    out.push_str("witness: none\n");
                    Ok(Outcome::new(EXIT_NO_WITNESS, out))
                }
            }
        }
        WitnessCommand::Embed { m, n } => {
            if *m == 0 || *n == 0 {
                return Err(InputError("--m and --n must be at least 1".into()));
            }
            let report = theorem2_dim(*m, *n).expect("dimensions checked");
            match &report.witness {
                Some(Witness::Lift(l)) => Ok(Outcome::new(
                    EXIT_DETERMINED,
                    format!("lift:        {}\npsi:         {}\npushforward: {}\n", l.lift, l.psi, l.pushforward),
                )),
                _ => Ok(Outcome::new(
                    EXIT_NO_WITNESS,
                    format!("lift:        none\nreason:      {}\n", report.justification),
                )),
            }
        }
        WitnessCommand::Lift { map, m } => {
            let lift = parse_lift(map, *m).map_err(|e| flag_error("--map", e))?;
            lift_text(&lift)
        }
    }
}
