use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde_json::{json, Value};
use tb_core::border::{
    acyclicity, border_basis_from_gb, border_divide_with_budget, default_step_budget,
    normal_form_with_budget, verify_border_basis, well_order, DivisionStep, Verdict,
};
use tb_core::{buchberger, BorderPrebasis, Polynomial, Problem};

use crate::report::{int, Render, Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Gb,
    Analyze,
    Border,
    Divide,
    Nf,
    Member,
    CheckAcyclic,
    FromGb,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Analyze => "analyze",
            Command::Border => "border",
            Command::Divide => "divide",
            Command::Nf => "nf",
            Command::Member => "member",
            Command::CheckAcyclic => "check-acyclic",
            Command::FromGb => "from-gb",
            Command::Verify => "verify",
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub trace: bool,
    pub step_budget: Option<u64>,
}

/// Parses a problem file and runs one command on it.
pub fn run_text(cmd: Command, text: &str, opts: Options) -> Report {
    let outcome = Problem::from_json(text)
        .context("invalid problem file")
        .and_then(|p| run(cmd, &p, opts));
    match outcome {
        Ok(report) => report,
        Err(e) => Report::error(cmd.name(), format!("{e:#}")),
    }
}

pub fn run(cmd: Command, p: &Problem, opts: Options) -> Result<Report> {
    let r = Render {
        vars: &p.vars,
        order: &p.order,
    };
    let mut diagnostics = Vec::new();
    let (status, payload) = match cmd {
        Command::Gb => (Status::Ok, gb(p, &r)?),
        Command::Analyze => (Status::Ok, analyze(p, &r, &mut diagnostics)?),
        Command::Border => (Status::Ok, border(p, &r)?),
        Command::Divide => (Status::Ok, divide(p, &r, opts)?),
        Command::Nf => (Status::Ok, nf(p, &r, opts, false)?),
        Command::Member => (Status::Ok, nf(p, &r, opts, true)?),
        Command::CheckAcyclic => (Status::Ok, check_acyclic(p, &r)?),
        Command::FromGb => (Status::Ok, from_gb(p, &r)?),
        Command::Verify => verify(p, &r)?,
    };
    Ok(Report {
        command: cmd.name().to_string(),
        status,
        payload,
        diagnostics,
    })
}

fn prebasis(p: &Problem) -> Result<BorderPrebasis> {
    let oi = p.require_order_ideal()?.clone();
    BorderPrebasis::from_polynomials(oi, p.require_prebasis()?).context("invalid prebasis")
}

fn queries(p: &Problem) -> Result<&[Polynomial]> {
    if p.query_polys.is_empty() {
        bail!("section `query_polys` is missing or empty");
    }
    Ok(&p.query_polys)
}

fn gb(p: &Problem, r: &Render) -> Result<Value> {
    let gb = buchberger(&p.order, p.require_generators()?)?.short_reduce();
    let analysis = gb.analyze();
    Ok(json!({
        "order": r.order_label(&p.order),
        "generators": r.polys(p.require_generators()?),
        "basis": r.polys(gb.basis()),
        "leading_terms": Value::Array(gb.leading_terms().iter().map(|t| r.term(t)).collect()),
        "coefficient_ideals": r.ideals(&analysis.ideals),
    }))
}

/// Residues are listed in full up to this modulus.
const RESIDUE_LIST_LIMIT: u32 = 1000;

fn analyze(p: &Problem, r: &Render, diagnostics: &mut Vec<String>) -> Result<Value> {
    let gb = buchberger(&p.order, p.require_generators()?)?.short_reduce();
    let a = gb.analyze();
    let unbounded: Vec<&str> = a.unbounded_vars.iter().map(|&i| p.vars[i].as_str()).collect();
    let basis = match &a.weak_std_monomials {
        Some(ms) => {
            let mut ms: Vec<_> = ms.iter().collect();
            ms.sort_by(|x, y| p.order.compare(x, y));
            let entries: Vec<Value> = ms
                .into_iter()
                .map(|m| {
                    let ideal = &a.ideals[m];
                    let residues = match ideal.residues() {
                        None => Value::String("Z".into()),
                        Some(_) if *ideal.generator() > RESIDUE_LIST_LIMIT.into() => {
                            Value::String(format!("0..{}", ideal.generator() - 1u32))
                        }
                        Some(rs) => rs.iter().map(int).collect(),
                    };
                    json!({
                        "monomial": r.monomial(m),
                        "generator": int(ideal.generator()),
                        "residues": residues,
                    })
                })
                .collect();
            diagnostics.push("coset representative sets list every canonical residue 0..m-1".into());
            Value::Array(entries)
        }
        None => {
            diagnostics.push(format!(
                "weak standard monomials form an infinite family: no monic pure power bounds {}",
                unbounded.join(", ")
            ));
            Value::Null
        }
    };
    Ok(json!({
        "order": r.order_label(&p.order),
        "finitely_generated": a.finitely_generated,
        "free_representation": a.free_representation,
        "weak_plus_basis": basis,
        "coefficient_ideals": r.ideals(&a.ideals),
        "unbounded_vars": unbounded,
    }))
}

fn border(p: &Problem, r: &Render) -> Result<Value> {
    let oi = p.require_order_ideal()?;
    let b = oi.borders();
    let mut kth = Vec::new();
    for k in 1..=p.border_depth {
        kth.push(json!({"k": k, "monomials": r.monomials(&oi.kth_border(k)?)}));
    }
    let mut qs = Vec::new();
    for f in &p.query_polys {
        let (index, form) = if f.is_zero() {
            (Value::Null, r.poly(f))
        } else {
            (Value::from(oi.index_poly(f)?), r.poly(&oi.border_form(f)?))
        };
        qs.push(json!({"poly": r.poly(f), "index": index, "border_form": form}));
    }
    Ok(json!({
        "order_ideal": r.ideals(oi.mapping().support()),
        "monomial_border": r.monomials(&b.monomial),
        "scalar_border": r.terms(&b.scalar),
        "kth_borders": kth,
        "queries": qs,
    }))
}

fn budget(pb: &BorderPrebasis, opts: Options) -> u64 {
    opts.step_budget.unwrap_or_else(|| default_step_budget(pb))
}

fn trace_step(r: &Render, s: &DivisionStep) -> Value {
    let used: Vec<Value> = s
        .used
        .iter()
        .map(|(i, m)| json!({"element": i, "multiplier": r.poly(m)}))
        .collect();
    json!({
        "step": s.step,
        "index": s.index,
        "term": s.term.as_ref().map(|t| r.term(t)),
        "used": used,
        "after": r.poly(&s.after),
    })
}

fn divide(p: &Problem, r: &Render, opts: Options) -> Result<Value> {
    let pb = prebasis(p)?;
    let order = well_order(&pb)?;
    let budget = budget(&pb, opts);
    let mut out = Vec::new();
    for f in queries(p)? {
        let d = border_divide_with_budget(&pb, f, budget)?;
        let mut entry = json!({
            "input": r.poly(f),
            "remainder": r.poly(&d.remainder),
            "cofactors": r.polys(&d.cofactors),
            "steps": d.trace.len(),
        });
        if opts.trace {
            entry["trace"] = d.trace.iter().map(|s| trace_step(r, s)).collect();
        }
        out.push(entry);
    }
    Ok(json!({
        "prebasis": r.polys(&pb.polynomials()),
        "well_order": order,
        "step_budget": budget,
        "divisions": out,
    }))
}

fn nf(p: &Problem, r: &Render, opts: Options, membership: bool) -> Result<Value> {
    let pb = prebasis(p)?;
    let budget = budget(&pb, opts);
    let mut out = Vec::new();
    for f in queries(p)? {
        let h = normal_form_with_budget(&pb, f, budget)?;
        out.push(if membership {
            json!({"input": r.poly(f), "member": h.is_zero()})
        } else {
            json!({"input": r.poly(f), "normal_form": r.poly(&h)})
        });
    }
    Ok(json!({"results": out}))
}

fn check_acyclic(p: &Problem, r: &Render) -> Result<Value> {
    let pb = prebasis(p)?;
    let a = acyclicity(&pb);
    Ok(json!({
        "acyclic": a.acyclic,
        "well_order": a.topological_order,
        "cycle_witness": a.cycle_witness.as_ref().map(|c| c.iter().map(|m| r.monomial(m)).collect::<Vec<_>>()),
    }))
}

fn from_gb(p: &Problem, r: &Render) -> Result<Value> {
    let gb = buchberger(&p.order, p.require_generators()?)?;
    let (oi, pb) = border_basis_from_gb(&gb)?;
    let b = oi.borders();
    Ok(json!({
        "order": r.order_label(&p.order),
        "order_ideal": r.ideals(oi.mapping().support()),
        "monomial_border": r.monomials(&b.monomial),
        "scalar_border": r.terms(&b.scalar),
        "border_basis": r.polys(&pb.polynomials()),
    }))
}

fn verify(p: &Problem, r: &Render) -> Result<(Status, Value)> {
    let pb = prebasis(p)?;
    let v = verify_border_basis(&pb, p.require_generators()?, &p.order)?;
    let status = match v.verdict {
        Verdict::Verified => Status::Ok,
        Verdict::Refuted => Status::Refuted,
        Verdict::Inconclusive => Status::Inconclusive,
    };
    let checks: Vec<Value> = v
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
        .collect();
    Ok((
        status,
        json!({
            "verdict": v.verdict,
            "checks": checks,
            "inducing_order": v.inducing_order.as_ref().map(|o| r.order_label(o)),
        }),
    ))
}
