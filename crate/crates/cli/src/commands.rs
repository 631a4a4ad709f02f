//! One function per verb; each returns the rendered output.

use serde_json::{json, Value};

use orbitope::horn::triples_to_json;
use orbitope::polytope::{describe_rows, format_point, horn_oracle_witness};
use orbitope::{
    closed_form, closed_form_admissible, enum_t, enumerate_admissible, Assembler, GroupData, OneParamSubgroup,
    OrbitPolytope, PairMode, RatVec, WCPair, WellCover,
};

use crate::{plot, Command, Format, OrbitArgs, Outcome};

type CmdResult = anyhow::Result<Outcome>;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Parse the group and a vector of the group's coordinate dimension.
fn parse_vector(g: &GroupData, text: &str, what: &str) -> anyhow::Result<RatVec> {
    let v = RatVec::parse_csv(text)?;
    if v.dim() != g.dim {
        return Err(orbitope::Error::Parse(format!(
            "{what} has {} entries but {} uses {} coordinates",
            v.dim(),
            g.family,
            g.dim
        ))
        .into());
    }
    Ok(v)
}

fn parse_orbit(orbit: &OrbitArgs) -> anyhow::Result<(GroupData, RatVec)> {
    let g = GroupData::from_spec(&orbit.group)?;
    let lambda = parse_vector(&g, &orbit.lambda, "--lambda")?;
    Ok((g, lambda))
}

/// Run one verb.
pub fn dispatch(cmd: &Command, format: Format) -> CmdResult {
    match cmd {
        Command::Ineqs { orbit, closed_form, relaxed, provenance } => {
            ineqs(orbit, *closed_form, *relaxed, *provenance, format)
        }
        Command::Member { orbit, mu } => member(orbit, mu, format),
        Command::Oracle { orbit, mu } => oracle(orbit, mu, format),
        Command::Check { orbit, radius } => check(orbit, *radius, format),
        Command::Adm { group, enumerate } => adm(group, *enumerate, format),
        Command::Horn { n, r } => horn(*n, *r, format),
        Command::Pairs { group, subgroup, relaxed } => pairs(group, subgroup.as_deref(), *relaxed, format),
        Command::Plot { orbit } => {
            let (g, lambda) = parse_orbit(orbit)?;
            Ok(Outcome::ok(plot::render(&g, &lambda)?))
        }
    }
}

fn ineqs(orbit: &OrbitArgs, use_closed_form: bool, relaxed: bool, provenance: bool, format: Format) -> CmdResult {
    let (g, lambda) = parse_orbit(orbit)?;
    let poly: OrbitPolytope = if use_closed_form {
        closed_form(&g, &lambda)?
    } else {
        let mode = if relaxed { PairMode::Relaxed } else { PairMode::Strict };
        Assembler::new(&g, mode)?.assemble(&lambda)?
    };
    Ok(Outcome::ok(match format {
        Format::Json => poly.to_json(),
        Format::Text if provenance => describe_rows(&poly).join("\n"),
        Format::Text => poly.to_text(),
    }))
}

fn member(orbit: &OrbitArgs, mu: &str, format: Format) -> CmdResult {
    let (g, lambda) = parse_orbit(orbit)?;
    let mu = parse_vector(&g, mu, "--mu")?;
    let poly = orbitope::assemble(&g, &lambda)?;
    let violated: Vec<String> = poly.system.violated(&mu)?.iter().map(|c| c.to_text("xi")).collect();
    let inside = violated.is_empty();
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&json!({
            "group": g.family.to_string(),
            "Lambda": lambda.to_strings(),
            "mu": mu.to_strings(),
            "member": inside,
            "violated": violated,
        })),
        Format::Text if inside => "true".to_string(),
        Format::Text => format!("false\nviolated: {}", violated.join("; ")),
    }))
}

fn oracle(orbit: &OrbitArgs, mu: &str, format: Format) -> CmdResult {
    let (g, lambda) = parse_orbit(orbit)?;
    let mu = parse_vector(&g, mu, "--mu")?;
    let witness = horn_oracle_witness(&g, &lambda, &mu)?;
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&json!({
            "group": g.family.to_string(),
            "Lambda": lambda.to_strings(),
            "mu": mu.to_strings(),
            "member": witness.is_some(),
            "witness": witness.as_ref().map(RatVec::to_strings),
        })),
        Format::Text => match &witness {
            Some(w) => format!("true\nwitness gamma: {}", format_point(w)),
            None => "false".to_string(),
        },
    }))
}

fn check(orbit: &OrbitArgs, radius: u32, format: Format) -> CmdResult {
    let (g, lambda) = parse_orbit(orbit)?;
    let report = orbitope::cross_check(&g, &lambda, radius)?;
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&report)?,
        Format::Text => {
            let mut lines = vec![report.summary()];
            for d in &report.disagreements {
                lines.push(format!(
                    "disagreement at ({}): assembled {}, oracle {}",
                    d.point.join(","),
                    d.assembled,
                    d.oracle
                ));
            }
            lines.join("\n")
        }
    };
    Ok(Outcome { body, disagreement: !report.disagreements.is_empty() })
}

fn adm(group: &str, enumerate: bool, format: Format) -> CmdResult {
    let g = GroupData::from_spec(group)?;
    let list = if enumerate { enumerate_admissible(&g)? } else { closed_form_admissible(&g)? };
    Ok(Outcome::ok(match format {
        Format::Json => {
            let coords: Vec<&[i64]> = list.iter().map(OneParamSubgroup::coords).collect();
            pretty(&json!({ "group": g.family.to_string(), "lambdas": coords }))
        }
        Format::Text => list
            .iter()
            .map(|l| l.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n"),
    }))
}

fn horn(n: usize, r: usize, format: Format) -> CmdResult {
    let triples = enum_t(r, n)?;
    Ok(Outcome::ok(match format {
        Format::Json => triples_to_json(&triples),
        Format::Text => triples
            .iter()
            .map(|t| serde_json::to_string(&[&t.i, &t.j, &t.l]).expect("serializable"))
            .collect::<Vec<_>>()
            .join("\n"),
    }))
}

fn pair_line(p: &WCPair, normal: &RatVec, coeff: &RatVec) -> String {
    format!(
        "lambda=({}) w=[{}] ({}) w'=[{}] ({}): <({}), xi> <= <({}), Lambda>",
        p.lam.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(","),
        p.w,
        p.w.word_label(),
        p.w_prime,
        p.w_prime.word_label(),
        format_point(normal),
        format_point(coeff),
    )
}

fn pairs(group: &str, subgroup: Option<&str>, relaxed: bool, format: Format) -> CmdResult {
    let g = GroupData::from_spec(group)?;
    let lambdas = match subgroup {
        Some(text) => {
            let v = parse_vector(&g, text, "--subgroup")?;
            let coords = v
                .to_i64()
                .ok_or_else(|| orbitope::Error::Parse("--subgroup must have integer entries".into()))?;
            vec![OneParamSubgroup::new(coords)?]
        }
        None => closed_form_admissible(&g)?,
    };
    let mut lines = Vec::new();
    let mut records = Vec::new();
    for lam in &lambdas {
        let wc = WellCover::new(&g, lam)?;
        let found = if relaxed { wc.enumerate_dominant_m0()? } else { wc.enumerate_m0()? };
        for p in &found {
            let (normal, coeff) = p.inequality_data(wc.w0())?;
            lines.push(pair_line(p, &normal, &coeff));
            let mut rec = serde_json::to_value(p.to_record())?;
            rec["normal"] = json!(normal.to_strings());
            rec["lambda_coefficients"] = json!(coeff.to_strings());
            records.push(rec);
        }
    }
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&json!({
            "group": g.family.to_string(),
            "mode": if relaxed { "relaxed" } else { "strict" },
            "pairs": records,
        })),
        Format::Text => lines.join("\n"),
    }))
}

