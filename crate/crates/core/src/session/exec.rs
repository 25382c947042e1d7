use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use crate::engine::FreeLayout;
use crate::error::{Error, Result};
use crate::fstar::{
    build_fstar, koszul_fp_check, purity_verdict_from, syzygy_filtration_check, verify_fstar, fiber_product_presentation,
    Purity, PurityConclusion,
};
use crate::graded::{
    betti_analysis, hilbert_series, minimal_graded_resolution, numeric_invariants, poincare_from_hilbert, GradedModule,
    GradedRing, PurityReport,
};
use crate::hk::{cm_purity_report, cmd_equivalence_report, finite_pdim_consequences, local_invariants};
use crate::local::{assoc_graded_module, equigenerated_check, local_minimal_resolution, LocalModule, LocalRing};
use crate::poly::{OrderSpec, PolyRing};

use super::parse::{Analysis, Session, SessionFlavor};
use super::report::{CommandResult, Provenance, Report, SessionSummary};

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn braces<T: ToString>(v: &[T]) -> String {
    format!("{{{}}}", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn parens<T: ToString>(v: &[T]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

struct Outcome {
    verdict: String,
    summary: String,
    conclusive: bool,
    limited_by: Option<String>,
    tables: BTreeMap<String, Value>,
    witnesses: Vec<String>,
    truncation: Option<u32>,
}

impl Outcome {
    fn new(verdict: impl Into<String>, summary: impl Into<String>) -> Self {
        Outcome {
            verdict: verdict.into(),
            summary: summary.into(),
            conclusive: true,
            limited_by: None,
            tables: BTreeMap::new(),
            witnesses: Vec::new(),
            truncation: None,
        }
    }

    fn table(mut self, name: &str, v: Value) -> Self {
        self.tables.insert(name.to_string(), v);
        self
    }

    fn inconclusive(mut self, by: String) -> Self {
        self.conclusive = false;
        self.limited_by = Some(by);
        self
    }
}

enum Target {
    Local(LocalModule),
    Graded(GradedModule),
}

/// Rings built from a session.
struct Context<'a> {
    session: &'a Session,
    local: Option<LocalRing>,
    graded: Option<GradedRing>,
}

impl<'a> Context<'a> {
    fn new(session: &'a Session) -> Result<Self> {
        let field = *session.ring.field();
        match session.flavor {
            SessionFlavor::Local => {
                let r1 = PolyRing::new(field, session.vars.clone(), OrderSpec::local());
                let r1 = LocalRing::from_ring(&r1, session.ideal.clone())?;
                let ring = if session.fibre_vars.is_empty() {
                    r1
                } else {
                    let r2 = PolyRing::new(field, session.fibre_vars.clone(), OrderSpec::local());
                    let r2 = LocalRing::from_ring(&r2, session.fibre_ideal.clone())?;
                    fiber_product_presentation(&r1, &r2)?
                };
                Ok(Context {
                    session,
                    local: Some(ring),
                    graded: None,
                })
            }
            SessionFlavor::Graded => Ok(Context {
                session,
                local: None,
                graded: Some(GradedRing::from_ring(&session.ring, session.ideal.clone())?),
            }),
        }
    }

    fn module(&self, name: &str) -> Result<Target> {
        let decl = &self.session.modules[name];
        let free = &self.session.frees[&decl.free];
        let gens = decl
            .submodule
            .as_ref()
            .map(|n| self.session.submodules[n].generators.clone())
            .unwrap_or_default();
        if let Some(rr) = &self.local {
            let ring = rr.ring();
            let gens = gens.iter().map(|g| ring.resort_element(g)).collect();
            Ok(Target::Local(LocalModule::new(rr.clone(), free.rank, gens)?))
        } else {
            let a = self.graded.clone().expect("graded flavor");
            Ok(Target::Graded(GradedModule::new(a, FreeLayout::new(free.twists.clone()), gens)?))
        }
    }
}

fn describe_module(session: &Session, name: &str) -> String {
    let decl = &session.modules[name];
    let free = &session.frees[&decl.free];
    let twist = if free.twists.iter().any(|&t| t != 0) {
        format!(" twists {}", parens(&free.twists))
    } else {
        String::new()
    };
    match &decl.submodule {
        Some(n) => format!(
            "{} / {} with {} of rank {}{}, {} = <{}>",
            decl.free,
            n,
            decl.free,
            free.rank,
            twist,
            n,
            session.submodules[n].text.join(", ")
        ),
        None => format!("{} of rank {}{}", decl.free, free.rank, twist),
    }
}

fn purity_summary(a: &PurityReport) -> String {
    match &a.witness {
        Some(w) => format!("β_{} degrees {}", w.homological_degree, braces(&w.degrees)),
        None => format!("type {}", parens(&a.degree_type)),
    }
}

fn run_local(cmd: &str, m: &LocalModule, session: &Session) -> Result<Outcome> {
    let cutoff = session.options.max_homdeg;
    let truncation = session.options.truncation;
    let rr = m.ring();
    let a = rr.associated_graded();
    match cmd {
        "tangent_cone" => {
            let gens: Vec<String> = rr.tangent_cone().iter().map(|g| a.ring().fmt_poly(g)).collect();
            let verdict = if gens.is_empty() { "in(I) = 0".to_string() } else { format!("in(I) = <{}>", gens.join(", ")) };
            Ok(Outcome::new(verdict, "").table("generators", to_value(&gens)))
        }
        "purity" => {
            let res = local_minimal_resolution(m, cutoff)?;
            let pv = purity_verdict_from(m, &res, cutoff)?;
            let mut parts = Vec::new();
            let mut witnesses = Vec::new();
            if let Some(w) = &pv.route_a.witness {
                let s = format!("β_{} degrees {}", w.homological_degree, braces(&w.degrees));
                parts.push(s.clone());
                witnesses.push(format!("G(M) resolution: {s}"));
            }
            if let Some(h) = &pv.route_b.homology_witness {
                parts.push(format!("F•* homology at position {}", h.position));
                witnesses.push(format!("F•* homology at position {}: {}", h.position, h.class));
            }
            if !pv.route_b.coker_is_gm {
                witnesses.push("coker φ_1* ≠ G(M)".into());
            }
            if pv.route_b.noteworthy {
                witnesses.push("noteworthy: F•* acyclic but coker φ_1* ≠ G(M)".into());
            }
            let (verdict, summary) = match pv.verdict {
                Purity::Pure => (
                    "pure",
                    format!(
                        "type {}; β {}",
                        parens(&pv.delta),
                        parens(&pv.betti_transfer.values().map(|v| v.0).collect::<Vec<_>>())
                    ),
                ),
                Purity::NotPure => ("not pure", format!("witness: {}", parts.join("; "))),
                Purity::InconclusiveAtCutoff => ("inconclusive", format!("pure so far: {}", purity_summary(&pv.route_a))),
            };
            let mut o = Outcome::new(verdict, summary)
                .table("route_a", to_value(&pv.route_a))
                .table("route_b", to_value(&pv.route_b))
                .table("betti_transfer", to_value(&pv.betti_transfer))
                .table("graded_betti", to_value(&pv.graded_betti))
                .table("graded_betti_rendered", Value::String(pv.graded_betti.render()));
            o.witnesses = witnesses;
            if pv.verdict == Purity::InconclusiveAtCutoff {
                o = o.inconclusive(format!("homological cutoff {cutoff}"));
            }
            Ok(o)
        }
        "betti" => {
            let res = local_minimal_resolution(m, cutoff)?;
            let gm = assoc_graded_module(m)?;
            let graded = minimal_graded_resolution(&gm, cutoff)?;
            let rep = betti_analysis(&graded.betti);
            let verdict = match res.pdim() {
                Some(p) => format!("pdim_R M = {p}"),
                None => format!("resolution truncated at {cutoff}"),
            };
            let summary = format!(
                "β^R {}; G(M) over A: pdim {}",
                parens(&res.betti),
                graded.status
            );
            Ok(Outcome::new(verdict, summary)
                .table("local_betti", to_value(&res.betti))
                .table("local_status", to_value(&res.status))
                .table("delta", to_value(&res.delta))
                .table("graded_betti", to_value(&graded.betti))
                .table("graded_betti_rendered", Value::String(graded.betti.render()))
                .table(
                    "regularity",
                    json!({
                        "within_cutoff": rep.regularity_within_cutoff,
                        "bound": session.options.regularity_bound,
                        "within_bound": rep.regularity_within_cutoff <= session.options.regularity_bound,
                    }),
                ))
        }
        "hilbert" => {
            let gm = assoc_graded_module(m)?;
            hilbert_outcome(&gm, truncation)
        }
        "invariants" => {
            let gm = assoc_graded_module(m)?;
            let inv = numeric_invariants(&gm, cutoff)?;
            let res = local_minimal_resolution(m, cutoff)?;
            let mut o = Outcome::new(
                format!("dim {}; depth {}; cmd {}; e {}", inv.dim, inv.depth, inv.cmd, inv.multiplicity),
                "G(M) over A; depth via the polynomial cover",
            )
            .table("graded", to_value(&inv));
            if res.is_finite() {
                o = o.table("local", to_value(&local_invariants(m, &res, cutoff)?));
            }
            Ok(o)
        }
        "fstar" => {
            let res = local_minimal_resolution(m, cutoff)?;
            let fs = build_fstar(&res)?;
            let v = verify_fstar(&fs, cutoff)?;
            let mut o = match &v.purity_conclusion {
                PurityConclusion::Pure => Outcome::new("minimal resolution of G(M)", ""),
                PurityConclusion::NotPure { reason } => Outcome::new("not a minimal resolution of G(M)", reason.clone()),
                PurityConclusion::InconclusiveAtCutoff { cutoff } => {
                    Outcome::new("inconclusive", format!("exact at positions 1..={}", v.acyclic_up_to))
                        .inconclusive(format!("homological cutoff {cutoff}"))
                }
            };
            if let Some(h) = &v.homology_witness {
                o.witnesses.push(format!("homology at position {}: {}", h.position, h.class));
            }
            if v.noteworthy {
                o.witnesses.push("noteworthy: acyclic but coker φ_1* ≠ G(M)".into());
            }
            Ok(o.table("twists", to_value(&fs.delta))
                .table("matrices", to_value(&fs.render()))
                .table("verdict", to_value(&v)))
        }
        "hk" => match cmd_equivalence_report(m, cutoff) {
            Ok(rep) => {
                let b: Vec<String> = rep.coefficients.b.iter().map(|x| x.to_string()).collect();
                let verdict = if rep.condition_i { "conditions hold" } else { "conditions fail" };
                let summary = format!(
                    "b = {}; β = {}; cmd M = {}, cmd R = {}; e(M) = {} (Hilbert series), {} (formula)",
                    parens(&b),
                    parens(&rep.betti),
                    rep.invariants.cmd_m,
                    rep.invariants.cmd_r,
                    rep.multiplicity,
                    rep.multiplicity_formula
                );
                Ok(Outcome::new(verdict, summary).table("report", to_value(&rep)))
            }
            Err(e) => not_applicable(e),
        },
        "cm_purity" => match cm_purity_report(m, cutoff) {
            Ok(rep) => {
                let verdict = if rep.condition_i { "pure and Cohen-Macaulay" } else { "not pure and Cohen-Macaulay" };
                let summary = format!(
                    "(i) {}, (ii) {} [acyclic {}, Betti equations {}, multiplicity {}], (iii) {}",
                    rep.condition_i,
                    rep.condition_ii,
                    rep.acyclic,
                    rep.betti_equations,
                    rep.multiplicity_formula,
                    rep.condition_iii
                );
                Ok(Outcome::new(verdict, summary).table("report", to_value(&rep)))
            }
            Err(e) => not_applicable(e),
        },
        "pdim" => match finite_pdim_consequences(m, cutoff) {
            Ok(rep) => {
                let o = match rep.hypothesis_holds {
                    Some(true) => Outcome::new(
                        format!("pdim_R M = pdim_A G(M) = {}", rep.pdim_r),
                        format!(
                            "codim {} <= pdim {}{}",
                            rep.codim,
                            rep.pdim_r,
                            match rep.ring_cm_verdict {
                                Some(true) => "; M Cohen-Macaulay, so R is Cohen-Macaulay",
                                _ => "",
                            }
                        ),
                    ),
                    Some(false) => Outcome::new(
                        format!("pdim_R M = {} differs from pdim_A G(M) = {}", rep.pdim_r, rep.pdim_a),
                        "",
                    ),
                    None => Outcome::new("hypothesis not verified within cutoff", format!("pdim_R M = {}", rep.pdim_r))
                        .inconclusive(format!("homological cutoff {cutoff}")),
                };
                Ok(o.table("report", to_value(&rep)))
            }
            Err(e) => not_applicable(e),
        },
        "equigen" => match equigenerated_check(m, truncation) {
            Ok(rep) => {
                let verdict = if rep.verdict { "equigenerated" } else { "not equigenerated" };
                let summary = format!(
                    "s = {}; N* degrees {}; N ∩ m^(s+1)F = mN: {}; μ(N*) = {}, μ(N) = {}",
                    rep.s,
                    braces(&rep.path_a_degrees),
                    rep.intersection_is_mn,
                    rep.mu_nstar,
                    rep.mu_n
                );
                let mut o = Outcome::new(verdict, summary);
                if let Some(j) = rep.witness_layer {
                    o.witnesses.push(format!(
                        "N ∩ m^{j}F ≠ m^{}N: {}",
                        j - rep.s,
                        rep.witness.clone().unwrap_or_default()
                    ));
                }
                o.truncation = Some(rep.truncation);
                Ok(o.table("report", to_value(&rep)))
            }
            Err(e) => not_applicable(e),
        },
        "filtration" => {
            let res = local_minimal_resolution(m, 1)?;
            let Some(&s1) = res.s.first() else {
                return not_applicable(Error::Precondition("N = 0".into()));
            };
            let rows = syzygy_filtration_check(m, 1, s1..=s1 + 3, truncation)?;
            let failing: Vec<u32> = rows.iter().filter(|r| !r.holds).map(|r| r.j).collect();
            let verdict = if failing.is_empty() {
                format!("holds for j = {}..{}", s1, s1 + 3)
            } else {
                format!("fails at j = {}", braces(&failing))
            };
            let mut o = Outcome::new(verdict, format!("Ω_1 ∩ m^j F_0 against m^(j-{s1}) Ω_1"));
            for r in rows.iter().filter(|r| !r.holds) {
                if let Some(w) = &r.witness {
                    o.witnesses.push(format!("j = {}: {}", r.j, w));
                }
            }
            Ok(o.table("rows", to_value(&rows)))
        }
        "koszul_fp" => {
            let rep = koszul_fp_check(m, cutoff)?;
            let verdict = if rep.certifies_not_pure { "not pure (certificate)" } else { "no obstruction within cutoff" };
            let mut o = Outcome::new(verdict, format!("Ω_2 linear: {}", rep.omega2_linear));
            if let Some((i, d)) = &rep.omega2_witness {
                o.witnesses.push(format!("β_{i} degrees {}", braces(d)));
            }
            Ok(o.table("report", to_value(&rep)))
        }
        "poincare" => {
            let gm = assoc_graded_module(m)?;
            poincare_outcome(&gm, cutoff)
        }
        "resolution" => {
            let res = local_minimal_resolution(m, cutoff)?;
            let local = res.local_ring();
            let mats: Vec<Vec<Vec<String>>> = res.matrices.iter().map(|x| x.render(local)).collect();
            let status = match res.pdim() {
                Some(p) => format!("finite, pdim {p}"),
                None => format!("truncated at {cutoff}"),
            };
            Ok(Outcome::new(status, format!("β {}; s {}; δ {}", parens(&res.betti), parens(&res.s), parens(&res.delta)))
                .table("betti", to_value(&res.betti))
                .table("matrices", to_value(&mats))
                .table("column_orders", to_value(&res.column_orders)))
        }
        other => Err(Error::Precondition(format!("unknown analysis `{other}`"))),
    }
}

fn hilbert_outcome(gm: &GradedModule, truncation: u32) -> Result<Outcome> {
    let hs = hilbert_series(gm)?;
    Ok(Outcome::new(format!("{hs}; dim {}; e {}", hs.dim, hs.multiplicity()), "")
        .table("series", to_value(&hs))
        .table("values", to_value(&hs.values(truncation as usize))))
}

fn poincare_outcome(gm: &GradedModule, cutoff: usize) -> Result<Outcome> {
    match poincare_from_hilbert(gm, cutoff) {
        Ok(p) => Ok(Outcome::new(
            p.closed_form.clone().unwrap_or_else(|| "no closed form".into()),
            format!("β {}", parens(&p.coefficients)),
        )
        .table("series", to_value(&p))),
        Err(e) => not_applicable(e),
    }
}

fn not_applicable(e: Error) -> Result<Outcome> {
    match e {
        Error::Precondition(msg) => Ok(Outcome::new("not applicable", msg)),
        Error::ZeroSubmodule => Ok(Outcome::new("not applicable", "N = 0")),
        Error::Inconclusive { cutoff, message } => {
            Ok(Outcome::new("inconclusive", message).inconclusive(format!("homological cutoff {cutoff}")))
        }
        other => Err(other),
    }
}

fn run_graded(cmd: &str, m: &GradedModule, session: &Session) -> Result<Outcome> {
    let cutoff = session.options.max_homdeg;
    match cmd {
        "hilbert" => hilbert_outcome(m, session.options.truncation),
        "poincare" => poincare_outcome(m, cutoff),
        "invariants" => {
            let inv = numeric_invariants(m, cutoff)?;
            Ok(Outcome::new(
                format!("dim {}; depth {}; cmd {}; e {}", inv.dim, inv.depth, inv.cmd, inv.multiplicity),
                "",
            )
            .table("graded", to_value(&inv)))
        }
        "betti" | "purity" | "resolution" => {
            let res = minimal_graded_resolution(m, cutoff)?;
            let rep = betti_analysis(&res.betti);
            let mut o = match cmd {
                "purity" => match rep.decided() {
                    Some(true) => Outcome::new("pure", purity_summary(&rep)),
                    Some(false) => Outcome::new("not pure", format!("witness: {}", purity_summary(&rep))),
                    None => Outcome::new("inconclusive", purity_summary(&rep))
                        .inconclusive(format!("homological cutoff {cutoff}")),
                },
                _ => Outcome::new(format!("pdim {}", res.status), ""),
            };
            if cmd == "resolution" {
                let ring = m.ring().ring();
                let mats: Vec<Vec<Vec<String>>> = res.complex.maps.iter().map(|x| x.render(ring)).collect();
                o = o.table("matrices", to_value(&mats));
            }
            Ok(o.table("analysis", to_value(&rep))
                .table("graded_betti", to_value(&res.betti))
                .table("graded_betti_rendered", Value::String(res.betti.render())))
        }
        other => Ok(Outcome::new("not applicable", format!("`{other}` needs flavor local"))),
    }
}

/// Run every analysis of a session in order.
pub fn execute(session: &Session) -> Result<Report> {
    let ctx = Context::new(session)?;
    let mut results = Vec::new();
    let mut truncations = BTreeSet::new();
    for Analysis { module, command, line } in &session.analyses {
        let wrap = |e: Error| Error::Command {
            line: *line,
            command: command.clone(),
            source: Box::new(e),
        };
        let target = ctx.module(module).map_err(wrap)?;
        let outcome = match &target {
            Target::Local(m) => run_local(command, m, session),
            Target::Graded(m) => run_graded(command, m, session),
        }
        .map_err(wrap)?;
        if let Some(t) = outcome.truncation {
            truncations.insert(t);
        }
        if matches!(command.as_str(), "equigen" | "filtration") {
            truncations.insert(session.options.truncation);
        }
        results.push(CommandResult {
            command: command.clone(),
            module: module.clone(),
            line: *line,
            verdict: outcome.verdict,
            summary: outcome.summary,
            conclusive: outcome.conclusive,
            limited_by: outcome.limited_by,
            tables: outcome.tables,
            witnesses: outcome.witnesses,
        });
    }
    let ideal = match &ctx.local {
        Some(rr) => rr.ideal().iter().map(|g| rr.ring().fmt_poly(g)).collect(),
        None => session.ideal.iter().map(|g| session.ring.fmt_poly(g)).collect(),
    };
    let modules = session
        .modules
        .keys()
        .map(|k| (k.clone(), describe_module(session, k)))
        .collect();
    let mut report = Report {
        session: SessionSummary {
            source: None,
            characteristic: session.options.characteristic,
            vars: session.vars.clone(),
            flavor: session.flavor,
            ideal,
            fibre_vars: session.fibre_vars.clone(),
            fibre_ideal: session.fibre_text.clone(),
            modules,
        },
        options: session.options.clone(),
        results,
        provenance: Provenance {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            characteristic: session.options.characteristic,
            homological_cutoff: session.options.max_homdeg,
            truncations_used: truncations.into_iter().collect(),
            exit_status: 0,
        },
    };
    report.provenance.exit_status = report.exit_code();
    Ok(report)
}
