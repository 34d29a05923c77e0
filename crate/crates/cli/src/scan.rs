//! Batch verdicts over a box of weights.
//!
//! CSV columns, in order: `m, n, w, char, lambda, chamber, typical, tag,
//! degree, provenance, reason, conjecture, golden, check`. `golden` is the
//! GL(2|1) classifier answer as `H0/H1` and is empty elsewhere; `conjecture`
//! is `true`/`false` for `(λ, β_i^∨) ≥ min(m, n)` (empty when the even part is
//! not standard); `check` is `ok`/`fail` under `--verify` and empty otherwise.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use superbbw::bbw::{
    chamber, check_consistency, conjecture_label, engine_verdict, is_typical, Characteristic,
};
use superbbw::eulerchar::{check_odd_invariance, chi_character, verify_clearing};
use superbbw::gl21::{crosscheck_engine, Gl21System};
use superbbw::{SuperRootData, Weight};

use crate::args::{characteristic, system, OutFormat, ScanArgs};
use crate::Failure;

#[derive(Debug, Serialize)]
pub struct Row {
    pub m: usize,
    pub n: usize,
    pub w: String,
    pub char: u64,
    pub lambda: String,
    pub chamber: String,
    pub typical: bool,
    pub tag: String,
    pub degree: Option<usize>,
    pub provenance: String,
    pub reason: Option<String>,
    pub conjecture: Option<bool>,
    pub golden: Option<String>,
    pub check: Option<String>,
}

fn parse_range(text: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::usage(format!("--box {text:?}: expected LO:HI"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn ranges(args: &ScanArgs) -> Result<Vec<(i64, i64)>, Failure> {
    let rank = args.m + args.n;
    let parsed = args
        .bounds
        .iter()
        .map(|b| parse_range(b))
        .collect::<Result<Vec<_>, _>>()?;
    match parsed.len() {
        1 => Ok(vec![parsed[0]; rank]),
        k if k == rank => Ok(parsed),
        k => Err(Failure::usage(format!(
            "--box given {k} times; expected 1 or {rank}"
        ))),
    }
}

fn weights(ranges: &[(i64, i64)]) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out.iter().map(|c| Weight::from_ints(c)).collect()
}

fn verify_row(
    lambda: &Weight,
    parity: u8,
    sys: &SuperRootData,
    p: Characteristic,
) -> superbbw::Result<bool> {
    let ec = chi_character(lambda, sys)?;
    if !verify_clearing(&ec) {
        return Ok(false);
    }
    for position in sys.odd_simple_positions() {
        if !check_odd_invariance(lambda, sys, position)? {
            return Ok(false);
        }
    }
    check_consistency(lambda, parity, sys, p)?;
    if let Some(system) = Gl21System::of(sys) {
        return Ok(crosscheck_engine(lambda, parity, p, system)?.is_clean());
    }
    Ok(true)
}

fn row(
    lambda: &Weight,
    parity: u8,
    sys: &SuperRootData,
    p: Characteristic,
    verify: bool,
) -> superbbw::Result<Row> {
    let v = engine_verdict(lambda, parity, sys, p)?;
    let golden = match Gl21System::of(sys) {
        Some(system) => Some(superbbw::gl21::classify(lambda, parity, system, p)?.summary()),
        None => None,
    };
    let check = if verify {
        let ok = verify_row(lambda, parity, sys, p).unwrap_or(false);
        Some(if ok { "ok" } else { "fail" }.to_string())
    } else {
        None
    };
    let ints = lambda.to_ints()?;
    Ok(Row {
        m: sys.dim().m(),
        n: sys.dim().n(),
        w: sys.w().to_string(),
        char: p.value(),
        lambda: ints
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        chamber: format!("{:?}", chamber(lambda, sys, p)?),
        typical: is_typical(lambda, sys, p)?,
        tag: v.tag.to_string(),
        degree: v.degree,
        provenance: v.provenance.to_string(),
        reason: v.reason.map(|r| r.to_string()),
        conjecture: conjecture_label(lambda, sys)?,
        golden,
        check,
    })
}

pub fn run(args: &ScanArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let boxes = ranges(args)?;
    let words: Vec<Option<&str>> = if args.w.is_empty() {
        vec![None]
    } else {
        args.w.iter().map(|w| Some(w.as_str())).collect()
    };
    let systems = words
        .into_iter()
        .map(|w| system(args.m, args.n, w))
        .collect::<Result<Vec<_>, _>>()?;
    let chars = if args.chars.is_empty() {
        vec![0]
    } else {
        args.chars.clone()
    };
    let chars = chars
        .into_iter()
        .map(characteristic)
        .collect::<Result<Vec<_>, _>>()?;

    let per_system: u128 = boxes
        .iter()
        .map(|&(lo, hi)| (hi - lo + 1) as u128)
        .product();
    let estimate = per_system * systems.len() as u128 * chars.len() as u128;
    if estimate > args.max_rows as u128 {
        return Err(Failure::usage(format!(
            "scan would produce an estimated {estimate} rows, above --max-rows {}",
            args.max_rows
        )));
    }

    let lambdas = weights(&boxes);
    let mut jobs: Vec<(&SuperRootData, Characteristic, &Weight)> = Vec::new();
    for s in &systems {
        for &p in &chars {
            jobs.extend(lambdas.iter().map(|l| (s, p, l)));
        }
    }
    let rows = jobs
        .par_iter()
        .map(|&(s, p, l)| row(l, args.parity, s, p, args.verify))
        .collect::<superbbw::Result<Vec<_>>>()?;

    match args.out {
        OutFormat::Csv => {
            let mut wtr = csv::Writer::from_writer(&mut *out);
            for r in &rows {
                wtr.serialize(r)?;
            }
            wtr.flush()?;
        }
        OutFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    if args.verify {
        let failures = rows
            .iter()
            .filter(|r| r.check.as_deref() == Some("fail"))
            .count();
        eprintln!("rows={} failures={failures}", rows.len());
        if failures > 0 {
            return Err(Failure::internal(format!(
                "{failures} rows failed verification"
            )));
        }
    }
    Ok(())
}
