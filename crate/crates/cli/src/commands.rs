use std::io::Write;

use serde::Serialize;
use serde_json::json;
use superbbw::bbw::{
    all_verdicts, chamber, check_consistency, engine_verdict, is_simple_h0, is_typical,
    kempf_bounds,
};
use superbbw::eulerchar::{chi_character, verify_clearing};
use superbbw::gl21::{crosscheck_engine, Gl21System};
use superbbw::selftest::criteria;
use superbbw::superroots::walk_to_standard;
use superbbw::{Root, SuperRootData};

use crate::args::{characteristic, OutFormat, SelftestArgs, SystemArgs, VerdictArgs, WeightArgs};
use crate::Failure;

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn roots_json(sys: &SuperRootData) -> Result<serde_json::Value, Failure> {
    let dim = sys.dim();
    let names = |it: &mut dyn Iterator<Item = Root>| it.map(|r| r.to_string()).collect::<Vec<_>>();
    let simple: Vec<_> = sys
        .simple()
        .iter()
        .map(|r| json!({ "root": r.to_string(), "odd": r.is_odd(dim) }))
        .collect();
    let walk = walk_to_standard(sys)?;
    let mut value = json!({
        "m": dim.m(),
        "n": dim.n(),
        "w": sys.w(),
        "positive_even": names(&mut sys.positive_even()),
        "positive_odd": names(&mut sys.positive_odd()),
        "simple": simple,
        "rho0": sys.rho0(),
        "rho1": sys.rho1(),
        "rho": sys.rho(),
        "standard": sys.is_standard(),
        "standard_even_part": sys.has_standard_even_part(),
        "walk": { "reflections": walk.reflections(), "w_prime": walk.end.w() },
    });
    if sys.has_standard_even_part() {
        value["kempf_bounds"] = serde_json::to_value(kempf_bounds(sys)?.bounds)?;
    }
    Ok(value)
}

pub fn roots(args: &SystemArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let sys = args.system()?;
    match args.out {
        OutFormat::Json => write_json(out, &roots_json(&sys)?),
        OutFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(out);
            wtr.write_record(["set", "root", "odd"])?;
            let dim = sys.dim();
            for r in sys.positive() {
                wtr.write_record(["positive", &r.to_string(), &r.is_odd(dim).to_string()])?;
            }
            for r in sys.simple() {
                wtr.write_record(["simple", &r.to_string(), &r.is_odd(dim).to_string()])?;
            }
            wtr.flush()?;
            Ok(())
        }
    }
}

pub fn chi(args: &WeightArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let sys = args.system.system()?;
    let lambda = args.lambda()?;
    let ec = chi_character(&lambda, &sys)?.with_parity(args.parity);
    let verified = verify_clearing(&ec);
    match args.system.out {
        OutFormat::Json => write_json(
            out,
            &json!({
                "m": ec.m,
                "n": ec.n,
                "w": ec.w,
                "lambda": ec.lambda,
                "parity": ec.parity,
                "character": ec.poly,
                "dimension": ec.poly.evaluate_dimension().to_string(),
                "verified": verified,
            }),
        )?,
        OutFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(&mut *out);
            wtr.write_record(["exponent", "coeff"])?;
            for t in ec.poly.to_json_terms() {
                wtr.write_record([t.exponent.to_string(), t.coeff])?;
            }
            wtr.flush()?;
        }
    }
    if !verified {
        return Err(Failure::internal("χ fails the cleared character identity"));
    }
    Ok(())
}

pub fn verdict(args: &VerdictArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let sys = args.weight.system.system()?;
    let lambda = args.weight.lambda()?;
    let parity = args.weight.parity;
    let p = characteristic(args.char)?;
    check_consistency(&lambda, parity, &sys, p)?;
    let chosen = engine_verdict(&lambda, parity, &sys, p)?;
    let generic = all_verdicts(&lambda, parity, &sys, p)?;
    let mut value = json!({
        "m": sys.dim().m(),
        "n": sys.dim().n(),
        "w": sys.w(),
        "lambda": lambda,
        "parity": parity,
        "char": p,
        "chamber": chamber(&lambda, &sys, p)?,
        "typical": is_typical(&lambda, &sys, p)?,
        "simple_h0": is_simple_h0(&lambda, &sys, p)?,
        "verdict": chosen,
        "generic": generic,
    });
    let mut contradictions = Vec::new();
    if let Some(system) = Gl21System::of(&sys) {
        let report = crosscheck_engine(&lambda, parity, p, system)?;
        value["golden"] = serde_json::to_value(&report.golden)?;
        value["contradictions"] = serde_json::to_value(&report.contradictions)?;
        contradictions = report.contradictions;
    }
    match args.weight.system.out {
        OutFormat::Json => write_json(out, &value)?,
        OutFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(&mut *out);
            wtr.write_record(["tag", "degree", "provenance", "reason", "golden"])?;
            let golden = value["golden"]["h0"]["tag"]
                .as_str()
                .map(|h0| {
                    format!(
                        "{h0}/{}",
                        value["golden"]["h1"]["tag"].as_str().unwrap_or("")
                    )
                })
                .unwrap_or_default();
            wtr.write_record([
                chosen.tag.to_string(),
                chosen.degree.map(|d| d.to_string()).unwrap_or_default(),
                chosen.provenance.to_string(),
                chosen.reason.map(|r| r.to_string()).unwrap_or_default(),
                golden,
            ])?;
            wtr.flush()?;
        }
    }
    if !contradictions.is_empty() {
        return Err(Failure::internal(format!(
            "generic engine contradicts the GL(2|1) classifier: {}",
            contradictions.join("; ")
        )));
    }
    Ok(())
}

pub fn selftest(args: &SelftestArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let all = criteria();
    if let Some(id) = args.only {
        if !all.iter().any(|c| c.id == id) {
            return Err(Failure::usage(format!(
                "no criterion {id}; valid ids are 1-{}",
                all.len()
            )));
        }
    }
    let mut failed = Vec::new();
    for c in all.iter().filter(|c| args.only.is_none_or(|id| id == c.id)) {
        let result = c.run();
        writeln!(out, "{result}")?;
        if !result.passed() {
            failed.push(result.id);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::internal(format!("failing criteria: {failed:?}")))
    }
}
