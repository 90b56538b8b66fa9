use std::io::Write;

use lsf_core::braid::census::{census_units, merge_census, run_unit, CensusEntry};
use lsf_core::braid::{reduce, torus_alexander, torus_braid, twisted_torus_braid, BraidWord, ReduceOutcome};
use lsf_core::homology::{h1_from_presentation, pseudoseiferter_det, smith_normal_form, surgery_h1, H1Report};
use lsf_core::seifert::{is_lspace, FamilyReport, LSpaceVerdict, TailReport};
use lsf_core::twistalex::{enumerate_candidates, os_candidate_check, slope_genus_bounds, staircase, torres_verify, TorresReport, TwistError, TwistFamily};
use lsf_core::KnotPoly1;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{AlexCmd, BraidCmd, Cli, Command, Format, HomologyCmd, LinkArgs, SeifertCmd, WordArgs};
use crate::error::CliError;
use crate::formats::{
    big, parse_family, parse_form, parse_matrix, parse_poly1, parse_poly2, parse_surgery, parse_window, parse_word, poly1_json, rational, rational_json,
    resolve, word_json,
};
use crate::table;

/// Executes one command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let jobs = cli.jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    if jobs == 0 {
        return Err(CliError::parse("--jobs", "must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::precondition(format!("thread pool: {e}")))?;
    let ctx = Ctx { format: cli.format, pool };
    match &cli.command {
        Command::Seifert(cmd) => seifert(&ctx, cmd, out),
        Command::Alex(cmd) => alex(&ctx, cmd, out),
        Command::Braid(cmd) => braid(&ctx, cmd, out),
        Command::Homology(cmd) => homology(&ctx, cmd, out),
    }
}

struct Ctx {
    format: Format,
    pool: rayon::ThreadPool,
}

impl Ctx {
    fn emit(&self, out: &mut dyn Write, report: &Value) -> Result<(), CliError> {
        match self.format {
            Format::Json => writeln!(out, "{report}")?,
            Format::Table => write!(out, "{}", table::render(report))?,
        }
        Ok(())
    }
}

fn verdict_json(v: &LSpaceVerdict) -> Value {
    let mut report = json!({ "verdict": v.label(), "certificate": v.certificate.name() });
    if let Some(w) = v.certificate.witness() {
        report["witness"] = json!({ "a": w.a, "k": w.k });
    }
    report
}

fn tail_json(t: &Option<TailReport>) -> Value {
    match t {
        None => Value::Null,
        Some(t) => json!({
            "range": [t.range.0, t.range.1],
            "stable_from": t.stable_from,
            "stable_verdict": t.stable_lspace.map(|l| if l { "LSpace" } else { "NotLSpace" }),
        }),
    }
}

fn family_json(r: &FamilyReport, summary: bool) -> Value {
    let mut report = json!({
        "window": [r.window.0, r.window.1],
        "limit": r.limit.to_string(),
        "limit_verdict": verdict_json(&r.limit_verdict),
        "fiber_count": r.fiber_count,
        "lower": tail_json(&r.lower),
        "upper": tail_json(&r.upper),
        "dichotomy": r.dichotomy,
        "unstable": r.unstable,
    });
    if !summary {
        let members: Vec<Value> = r
            .members
            .iter()
            .map(|m| {
                let mut v = json!({ "n": m.n, "form": m.form.to_string() });
                if let (Value::Object(dst), Value::Object(src)) = (&mut v, verdict_json(&m.verdict)) {
                    dst.extend(src);
                }
                v
            })
            .collect();
        report["members"] = Value::Array(members);
    }
    report
}

fn seifert(ctx: &Ctx, cmd: &SeifertCmd, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        SeifertCmd::Lspace(arg) => {
            let form = parse_form("--form", &resolve("--form", &arg.form)?)?;
            ctx.emit(out, &verdict_json(&is_lspace(&form)))
        }
        SeifertCmd::H1(arg) => {
            let form = parse_form("--form", &resolve("--form", &arg.form)?)?;
            let order = form.h1_order().map_err(CliError::precondition)?;
            ctx.emit(out, &json!({ "form": form.to_string(), "order": big(&order) }))
        }
        SeifertCmd::Family { family, window, summary } => {
            let fam = parse_family("--family", &resolve("--family", family)?)?;
            let window = parse_window("--window", window)?;
            let members = ctx
                .pool
                .install(|| (window.0..=window.1).into_par_iter().map(|n| fam.member_verdict(n)).collect::<Vec<_>>());
            let report = fam.summarize(window, members).map_err(CliError::precondition)?;
            ctx.emit(out, &family_json(&report, *summary))
        }
    }
}

fn torres_json(r: &TorresReport) -> Value {
    json!({
        "t1": r.t1,
        "t1_witness": r.t1_witness.map(|(m, n)| [m, n]),
        "t2": r.t2,
        "t2_first": r.t2_first,
        "t2_second": r.t2_second,
        "t3": r.t3,
        "value_at_one": big(&r.value_at_one),
        "parity": r.parity,
        "breadth_x": r.breadth_x.finite(),
        "breadth_y": r.breadth_y.finite(),
        "pass": r.all_pass(),
    })
}

fn twist_error(e: TwistError) -> CliError {
    CliError::precondition(e)
}

fn family(link: &LinkArgs) -> Result<TwistFamily, CliError> {
    let delta2 = parse_poly2("--poly2", &resolve("--poly2", &link.poly2)?)?;
    TwistFamily::new(delta2, link.omega).map_err(twist_error)
}

fn poly1_arg(field: &str, raw: &str) -> Result<KnotPoly1, CliError> {
    parse_poly1(field, &resolve(field, raw)?)
}

fn alex(ctx: &Ctx, cmd: &AlexCmd, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        AlexCmd::Verify { link, delta_c, delta_k } => {
            let delta2 = parse_poly2("--poly2", &resolve("--poly2", &link.poly2)?)?;
            let delta_c = match delta_c {
                Some(raw) => poly1_arg("--delta-c", raw)?,
                None => KnotPoly1::one(),
            };
            let delta_k = delta_k.as_deref().map(|raw| poly1_arg("--delta-k", raw)).transpose()?;
            let report = torres_verify(&delta2, link.omega, &delta_c, delta_k.as_ref());
            ctx.emit(out, &torres_json(&report))?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(CliError::precondition("Torres conditions failed"))
            }
        }
        AlexCmd::Twist { link, n } => {
            let fam = family(link)?;
            let delta = fam.twist_knot(*n).map_err(twist_error)?;
            let bound = fam.genus_lower_bound(*n).map_err(twist_error)?;
            ctx.emit(out, &json!({ "n": n, "alexander": poly1_json(&delta), "genus_lower_bound": bound }))
        }
        AlexCmd::Classify { link } => {
            let case = family(link)?.classify();
            ctx.emit(out, &json!({ "case": case.tag.number(), "slope": case.slope }))
        }
        AlexCmd::Bound { link, n, window } => {
            let fam = family(link)?;
            match (n, window) {
                (Some(n), _) => {
                    let bound = fam.genus_lower_bound(*n).map_err(twist_error)?;
                    ctx.emit(out, &json!({ "n": n, "genus_lower_bound": bound }))
                }
                (None, Some(w)) => {
                    let w = parse_window("--window", w)?;
                    let bounds = ctx
                        .pool
                        .install(|| {
                            (w.0..=w.1)
                                .into_par_iter()
                                .map(|n| fam.genus_lower_bound(n).map(|b| json!({ "n": n, "genus_lower_bound": b })))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .map_err(twist_error)?;
                    ctx.emit(out, &json!({ "bounds": bounds }))
                }
                (None, None) => Err(CliError::parse("--n", "give --n or --window")),
            }
        }
        AlexCmd::Window { link, r0, window } => {
            let fam = family(link)?;
            let r0 = rational("--r0", r0)?;
            let w = parse_window("--window", window)?;
            let members = ctx
                .pool
                .install(|| (w.0..=w.1).into_par_iter().map(|n| fam.window_member(r0, n)).collect::<Result<Vec<_>, _>>())
                .map_err(twist_error)?;
            let report = fam.collect_window(w, &members);
            ctx.emit(
                out,
                &json!({
                    "window": [w.0, w.1],
                    "r0": rational_json(&r0),
                    "candidates": report.candidates,
                    "positive": report.positive,
                    "negative": report.negative,
                    "unbounded": report.unbounded,
                }),
            )
        }
        AlexCmd::Cert { poly, slope } => {
            let delta = poly1_arg("--poly", &poly.poly)?;
            let candidate = os_candidate_check(&delta);
            let mut report = json!({ "candidate": candidate });
            if let Some(slope) = slope {
                let r = rational("--slope", slope)?;
                let g = delta.span().finite().unwrap_or(0) / 2;
                let (large_slope, genus_ok) = slope_genus_bounds(g, r);
                report["genus"] = json!(g);
                report["slope_at_least_2g_minus_1"] = json!(large_slope);
                report["genus_within_slope"] = json!(genus_ok);
            }
            ctx.emit(out, &report)
        }
        AlexCmd::Staircase { poly } => {
            let delta = poly1_arg("--poly", &poly.poly)?;
            let hfk = staircase(&delta).map_err(twist_error)?;
            let gens: Vec<Value> = hfk.generators.iter().map(|&(a, m)| json!([a, m])).collect();
            ctx.emit(out, &json!({ "generators": gens }))
        }
        AlexCmd::Enumerate { genus } => {
            let cands = enumerate_candidates(*genus);
            let polys: Vec<Value> = cands.iter().map(poly1_json).collect();
            ctx.emit(out, &json!({ "genus": genus, "count": cands.len(), "candidates": polys }))
        }
    }
}

fn word_arg(args: &WordArgs) -> Result<BraidWord, CliError> {
    parse_word("--word", &resolve("--word", &args.word)?, args.strands)
}

fn census_json(e: &CensusEntry) -> Value {
    json!({
        "genus": e.genus,
        "alexander": poly1_json(&e.alexander),
        "representative": word_json(&e.representative),
        "words": e.words,
    })
}

fn braid_summary(w: &BraidWord) -> Result<Value, CliError> {
    let sign = if w.is_positive() {
        "positive"
    } else if w.is_negative() {
        "negative"
    } else {
        "mixed"
    };
    let genus = w.genus_positive().map_err(CliError::precondition)?;
    let delta = w.burau_alexander().map_err(CliError::precondition)?;
    Ok(json!({ "word": word_json(w), "sign": sign, "genus": genus, "alexander": poly1_json(&delta) }))
}

fn braid(ctx: &Ctx, cmd: &BraidCmd, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        BraidCmd::Genus(args) => {
            let w = word_arg(args)?;
            let g = w.genus_positive().map_err(CliError::precondition)?;
            ctx.emit(out, &json!({ "genus": g }))
        }
        BraidCmd::Reduce(args) => {
            let w = word_arg(args)?;
            if !w.is_positive() {
                return Err(CliError::precondition("reduce needs a positive word"));
            }
            let report = match reduce(&w) {
                ReduceOutcome::Reduced(r) => json!({ "outcome": "Reduced", "word": word_json(&r) }),
                ReduceOutcome::Split => json!({ "outcome": "Split" }),
                ReduceOutcome::Irreducible => json!({ "outcome": "Irreducible" }),
            };
            ctx.emit(out, &report)
        }
        BraidCmd::Alexander(args) => {
            let w = word_arg(args)?;
            let delta = w.burau_alexander().map_err(CliError::precondition)?;
            ctx.emit(out, &json!({ "alexander": poly1_json(&delta) }))
        }
        BraidCmd::Census { genus, up_to, split } => {
            let from = if *up_to { 0 } else { *genus };
            if ctx.format == Format::Table {
                write!(out, "{}", table::census_header())?;
            }
            for g in from..=*genus {
                let units = census_units(g, *split);
                let parts = ctx.pool.install(|| units.par_iter().map(run_unit).collect::<Vec<_>>());
                for entry in merge_census(parts) {
                    match ctx.format {
                        Format::Json => writeln!(out, "{}", census_json(&entry))?,
                        Format::Table => write!(out, "{}", table::census_row(&entry))?,
                    }
                }
                out.flush()?;
            }
            Ok(())
        }
        BraidCmd::Torus { p, q } => {
            if *p == 0 || *q < 2 {
                return Err(CliError::precondition("need p != 0 and q >= 2"));
            }
            let w = torus_braid(*p, *q);
            let mut report = braid_summary(&w)?;
            report["closed_form"] = poly1_json(&torus_alexander(p.unsigned_abs(), *q as u64));
            ctx.emit(out, &report)
        }
        BraidCmd::TwistedTorus { p, q, n } => {
            let w = twisted_torus_braid(*p, *q, *n).map_err(CliError::precondition)?;
            let mut report = braid_summary(&w)?;
            report["linking"] = json!((p + q).abs());
            ctx.emit(out, &report)
        }
    }
}

fn h1_json(r: &H1Report) -> Value {
    let factors: Vec<Value> = r.invariant_factors.iter().map(big).collect();
    json!({ "order": big(&r.order), "invariant_factors": factors, "free_rank": r.free_rank })
}

fn homology(ctx: &Ctx, cmd: &HomologyCmd, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        HomologyCmd::Snf(arg) => {
            let m = parse_matrix("--matrix", &resolve("--matrix", &arg.matrix)?)?;
            let diag: Vec<Value> = smith_normal_form(&m).diagonal().iter().map(big).collect();
            ctx.emit(out, &json!({ "diagonal": diag }))
        }
        HomologyCmd::H1(arg) => {
            let m = parse_matrix("--matrix", &resolve("--matrix", &arg.matrix)?)?;
            ctx.emit(out, &h1_json(&h1_from_presentation(&m)))
        }
        HomologyCmd::Surgery { surgery } => {
            let s = parse_surgery("--surgery", &resolve("--surgery", surgery)?)?;
            let report = h1_from_presentation(&s.integer_matrix());
            let mut v = h1_json(&report);
            v["determinant"] = big(&surgery_h1(&s));
            ctx.emit(out, &v)
        }
        HomologyCmd::FamilyDet {
            a11,
            a12,
            a21,
            p,
            q,
            n,
            window,
        } => {
            let det = |n: i64| pseudoseiferter_det(*a11, *a12, *a21, *p, *q, n).map(|d| json!({ "n": n, "det": big(&d) }));
            match (n, window) {
                (Some(n), _) => ctx.emit(out, &det(*n).map_err(CliError::precondition)?),
                (None, Some(w)) => {
                    let w = parse_window("--window", w)?;
                    let dets = ctx
                        .pool
                        .install(|| (w.0..=w.1).into_par_iter().map(det).collect::<Result<Vec<_>, _>>())
                        .map_err(CliError::precondition)?;
                    ctx.emit(out, &json!({ "step": (p * (-a12 * a21 * p + a11 * q)).abs(), "dets": dets }))
                }
                (None, None) => Err(CliError::parse("--n", "give --n or --window")),
            }
        }
    }
}
