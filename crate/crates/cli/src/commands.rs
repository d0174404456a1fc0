use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use treeflip_core::crosscheck::{run_crosscheck, CrosscheckConfig, Mutation, Suite, Verdict};
use treeflip_core::generate::{cograph, connected_graph, interval_graph, planar_embedded, rng};
use treeflip_core::graph::{build_cotree, ConstraintKind, Graph, LeafConstraint, SpanningTree, Vertex};
use treeflip_core::instance::Instance;
use treeflip_core::oracle::{
    component_census, max_n, min_cover_size, min_domset_size, st_reachable, vertex_covers_of_size,
    OracleError, SearchBudget,
};
use treeflip_core::reductions::{
    build_ds_to_st_instance, build_vc_to_st_instance, build_vc_to_st_planar, cover_to_ham_path,
    dominating_to_tree, planar_cover_tree, ManyLeavesVariant, GADGET_SIZE,
};
use treeflip_core::solvers::interval::decide_interval;
use treeflip_core::solvers::{decide_cograph, decide_two_internal};

use crate::report::RunReport;
use crate::{Class, Common, GenKind, MutationArg, ReduceKind, SuiteArg};

fn budget(c: &Common) -> SearchBudget {
    SearchBudget::new(c.budget_states.max(1), c.budget_ms.max(1))
}

fn load(c: &Common) -> Result<Instance> {
    let path = c.input.as_ref().ok_or_else(|| anyhow!("--input is required"))?;
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Instance::from_json(&text)?)
}

fn endpoints(inst: &Instance) -> Result<(&SpanningTree, &SpanningTree, LeafConstraint)> {
    let t1 = inst.source_tree.as_ref().ok_or_else(|| anyhow!("instance has no source_tree"))?;
    let t2 = inst.target_tree.as_ref().ok_or_else(|| anyhow!("instance has no target_tree"))?;
    let con = inst.constraint.ok_or_else(|| anyhow!("instance has no constraint"))?;
    Ok((t1, t2, con))
}

fn class_name(c: Class) -> &'static str {
    match c {
        Class::Auto => "auto",
        Class::Cograph => "cograph",
        Class::Interval => "interval",
        Class::TwoInternal => "two-internal",
    }
}

/// Internal-node budget of an "at least" constraint, if it is one.
fn internal_budget(n: usize, con: &LeafConstraint) -> Option<usize> {
    (con.kind() == ConstraintKind::AtLeast).then(|| n.saturating_sub(con.bound()))
}

fn pick_class(inst: &Instance, con: &LeafConstraint) -> Result<Class> {
    if inst.interval.is_some() {
        return Ok(Class::Interval);
    }
    if build_cotree(&inst.graph).is_some() {
        return Ok(Class::Cograph);
    }
    if internal_budget(inst.graph.n(), con) == Some(2) {
        return Ok(Class::TwoInternal);
    }
    bail!("unsupported class: no interval certificate, not a cograph, and not a two-internal-node budget; use the oracle command")
}

pub fn solve(c: &Common, class: Class, check_oracle: bool, report: &mut RunReport) -> Result<u8> {
    let inst = load(c)?;
    let (t1, t2, con) = endpoints(&inst)?;
    let g = &inst.graph;
    let class = match class {
        Class::Auto => pick_class(&inst, &con)?,
        other => other,
    };
    report.detail("class", class_name(class));
    let out = match class {
        Class::Cograph => decide_cograph(g, None, t1, t2, &con)?,
        Class::Interval => {
            let rep = inst.interval.as_ref().ok_or_else(|| anyhow!("instance has no interval representation"))?;
            decide_interval(g, rep, t1, t2, &con)?
        }
        Class::TwoInternal => {
            if internal_budget(g.n(), &con) != Some(2) {
                bail!("unsupported class: the two-internal decider needs the constraint at least n - 2 leaves, got {con}");
            }
            decide_two_internal(g, t1, t2)?
        }
        Class::Auto => unreachable!(),
    };
    report.decision = Some(if out.reachable { "yes" } else { "no" }.into());
    for (k, v) in out.diagnostics {
        report.details.insert(k, v);
    }
    if c.witness {
        report.witness = Some(match &out.witness {
            Some(w) => serde_json::to_value(w)?,
            None => Value::Null,
        });
    }
    if check_oracle {
        let truth = st_reachable(g, t1, t2, &con, budget(c))?;
        report.states_explored = Some(truth.states_explored);
        report.oracle_agrees = truth.decision().map(|d| d == out.reachable);
        if truth.is_budget_exceeded() {
            report.detail("oracle", "budget exceeded");
        }
    }
    Ok(if out.reachable { 0 } else { 1 })
}

pub fn oracle(c: &Common, census: bool, report: &mut RunReport) -> Result<u8> {
    let inst = load(c)?;
    let g = &inst.graph;
    if census {
        let con = inst.constraint.ok_or_else(|| anyhow!("instance has no constraint"))?;
        let entries = match component_census(g, &con, budget(c)) {
            Ok(e) => e,
            Err(OracleError::BudgetExceeded(n)) => {
                report.states_explored = Some(n);
                report.decision = Some("budget exceeded".into());
                return Ok(3);
            }
            Err(e) => return Err(e.into()),
        };
        let rows: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "size": e.size,
                    "internal_sets": e.internal_sets,
                    "frozen": e.frozen,
                    "representative": e.representative.edges(),
                })
            })
            .collect();
        report.states_explored = Some(entries.iter().map(|e| e.size).sum());
        report.detail("components", rows);
        return Ok(0);
    }
    let (t1, t2, con) = endpoints(&inst)?;
    let res = st_reachable(g, t1, t2, &con, budget(c))?;
    report.states_explored = Some(res.states_explored);
    match res.decision() {
        None => {
            report.decision = Some("budget exceeded".into());
            Ok(3)
        }
        Some(d) => {
            report.decision = Some(if d { "yes" } else { "no" }.into());
            if c.witness {
                report.witness = res.witness().map(serde_json::to_value).transpose()?;
            }
            Ok(if d { 0 } else { 1 })
        }
    }
}

pub struct ReduceParams {
    pub kind: ReduceKind,
    pub k: Option<usize>,
    pub leaf_bound: usize,
    pub from: Option<Vec<Vertex>>,
    pub to: Option<Vec<Vertex>>,
    pub threshold: Option<usize>,
}

fn first_min_dominating(g: &Graph) -> Result<Vec<Vertex>> {
    let k = min_domset_size(g)?;
    let n = g.n();
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .find(|s| g.dominates(s))
        .ok_or_else(|| anyhow!("no dominating set found"))
}

pub fn reduce(c: &Common, p: &ReduceParams, report: &mut RunReport) -> Result<u8> {
    let source = load(c)?;
    let g = &source.graph;
    let mut out = match p.kind {
        ReduceKind::Vc2st => {
            let k = match p.k {
                Some(k) => k,
                None => min_cover_size(g)?,
            };
            let inst = build_vc_to_st_instance(g, k, p.leaf_bound)?;
            let from = match &p.from {
                Some(x) => x.clone(),
                None => vertex_covers_of_size(g, k)?
                    .into_iter()
                    .next()
                    .ok_or_else(|| anyhow!("no vertex cover of size {k}"))?,
            };
            let to = p.to.clone().unwrap_or_else(|| from.clone());
            let gadgets: serde_json::Map<String, Value> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(j, e)| {
                    let ids: Vec<Vertex> = (0..GADGET_SIZE).map(|l| inst.gadget_vertex(j, l)).collect();
                    (j.to_string(), json!({ "edge": e, "vertices": ids }))
                })
                .collect();
            let mut out = Instance::new(inst.graph.clone());
            out.source_tree = Some(cover_to_ham_path(&inst, &from)?);
            out.target_tree = Some(cover_to_ham_path(&inst, &to)?);
            out.constraint = Some(inst.constraint());
            out.roles = Some(json!({ "gadgets": gadgets, "Z": inst.z, "pendants": inst.pendants }));
            report.detail("k", k);
            out
        }
        ReduceKind::Ds2stBip | ReduceKind::Ds2stSplit => {
            let variant = if p.kind == ReduceKind::Ds2stBip {
                ManyLeavesVariant::Bipartite
            } else {
                ManyLeavesVariant::Split
            };
            let inst = build_ds_to_st_instance(g, variant);
            let from = match &p.from {
                Some(x) => x.clone(),
                None => first_min_dominating(g)?,
            };
            let to = p.to.clone().unwrap_or_else(|| from.clone());
            let threshold = p.threshold.unwrap_or(from.len().max(to.len()) + 1);
            let mut out = Instance::new(inst.graph.clone());
            out.source_tree = Some(dominating_to_tree(&inst, &from)?);
            out.target_tree = Some(dominating_to_tree(&inst, &to)?);
            out.constraint = Some(inst.constraint(threshold));
            out.roles = Some(json!({ "A": inst.a, "B": inst.b, "x": inst.x, "y": inst.y }));
            report.detail("threshold", threshold);
            out
        }
        ReduceKind::Vc2stPlanar => {
            let emb = source.faces.as_ref().ok_or_else(|| anyhow!("vc2st-planar needs a face list"))?;
            let inst = build_vc_to_st_planar(g, emb)?;
            let k = min_cover_size(g)?;
            let from = match &p.from {
                Some(x) => x.clone(),
                None => vertex_covers_of_size(g, k)?.remove(0),
            };
            let to = p.to.clone().unwrap_or_else(|| from.clone());
            let index = |vs: &[Vertex]| -> serde_json::Map<String, Value> {
                vs.iter().enumerate().map(|(i, v)| (i.to_string(), json!(v))).collect()
            };
            let mut out = Instance::new(inst.graph.clone());
            out.source_tree = Some(planar_cover_tree(&inst, &from)?);
            out.target_tree = Some(planar_cover_tree(&inst, &to)?);
            out.constraint = Some(LeafConstraint::at_least(inst.leaves_for_cover(k)));
            out.roles = Some(json!({
                "edge_vertices": index(&inst.edge_vertices),
                "face_vertices": index(&inst.face_vertices),
                "leaf_vertices": index(&inst.leaf_vertices),
            }));
            report.detail("k", k);
            out
        }
    };
    // re-validate exactly what gets written
    out = Instance::from_json(&out.to_json()).context("emitted instance failed to reload")?;
    report.detail("vertices", out.graph.n());
    report.detail("edges", out.graph.m());
    report.body = Some(out.to_json());
    Ok(0)
}

pub fn crosscheck(
    c: &Common,
    suite: SuiteArg,
    count: usize,
    csv: &Path,
    mutation: Option<MutationArg>,
    report: &mut RunReport,
) -> Result<u8> {
    let suite = match suite {
        SuiteArg::Cograph => Suite::Cograph,
        SuiteArg::Interval => Suite::Interval,
        SuiteArg::TwoInternal => Suite::TwoInternal,
        SuiteArg::Reductions => Suite::Reductions,
        SuiteArg::All => Suite::All,
    };
    let mut cfg = CrosscheckConfig::new(suite, c.seed, count);
    cfg.budget = budget(c);
    cfg.mutation = mutation.map(|m| match m {
        MutationArg::NegateDecision => Mutation::NegateDecision,
        MutationArg::TruncateWitness => Mutation::TruncateWitness,
    });
    let res = run_crosscheck(&cfg);
    std::fs::write(csv, res.to_csv()).with_context(|| format!("writing {}", csv.display()))?;
    for w in &res.warnings {
        eprintln!("warning: {w}");
    }
    report.artifact = Some(csv.display().to_string());
    report.states_explored = Some(res.cases.iter().map(|c| c.states).sum());
    report.oracle_agrees = Some(res.passed());
    report.detail("cases", res.cases.len());
    report.detail("agree", res.count(Verdict::Agree));
    report.detail("disagree", res.count(Verdict::Disagree));
    report.detail("budget_exceeded", res.count(Verdict::BudgetExceeded));
    if !res.warnings.is_empty() {
        report.detail("warnings", res.warnings.clone());
    }
    let failed: Vec<&str> = res
        .cases
        .iter()
        .filter(|c| c.verdict == Verdict::Disagree)
        .map(|c| c.id.as_str())
        .collect();
    if !failed.is_empty() {
        report.detail("disagreements", failed);
        return Ok(1);
    }
    Ok(if res.count(Verdict::BudgetExceeded) > 0 { 3 } else { 0 })
}

pub fn gen(c: &Common, kind: GenKind, n: usize, report: &mut RunReport) -> Result<u8> {
    if n == 0 || n > max_n() {
        bail!("n must be between 1 and {}", max_n());
    }
    let mut r = rng(c.seed);
    let inst = match kind {
        GenKind::Interval => {
            let (g, rep) = interval_graph(n, &mut r);
            let mut inst = Instance::new(g);
            inst.interval = Some(rep);
            inst
        }
        GenKind::Cograph => {
            let (g, cotree) = cograph(n, &mut r);
            if cotree.evaluate(n) != g {
                bail!("cotree does not evaluate to the generated graph");
            }
            Instance::new(g)
        }
        GenKind::Connected => Instance::new(connected_graph(n, &mut r)),
        GenKind::PlanarEmbedded => {
            if n < 3 {
                bail!("the planar catalog starts at 3 vertices");
            }
            let e = loop {
                let e = planar_embedded(&mut r);
                if e.graph.n() <= n {
                    break e;
                }
            };
            report.detail("catalog_entry", e.name);
            let mut inst = Instance::new(e.graph);
            inst.faces = Some(e.embedding);
            inst
        }
    };
    let inst = Instance::from_json(&inst.to_json()).context("generated instance failed to reload")?;
    report.detail("vertices", inst.graph.n());
    report.detail("edges", inst.graph.m());
    report.body = Some(inst.to_json());
    Ok(0)
}
