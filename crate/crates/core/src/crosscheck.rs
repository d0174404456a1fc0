//! Seeded sweeps comparing the polynomial deciders and the reduction
//! constructors with exhaustive search.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::generate::{
    cograph, connected_graph_with_density, interval_graph, planar_catalog, random_tree_within_budget, rng,
    Rng64,
};
use crate::graph::{FlipSequence, Graph, LeafConstraint, SpanningTree, Vertex};
use crate::oracle::{
    ds_tar_reachable, enumerate_spanning_trees, min_cover_size, st_reachable, vc_tj_reachable,
    vertex_covers_of_size, SearchBudget,
};
use crate::reductions::{
    build_ds_to_st_instance, build_vc_to_st_instance, build_vc_to_st_planar, cover_seq_to_flip_seq,
    cover_to_ham_path, dominating_to_tree, extract_cover, planar_cover_tree, ManyLeavesVariant,
};
use crate::solvers::interval::decide_interval;
use crate::solvers::{decide_cograph, decide_two_internal, Outcome, SolveError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Cograph,
    Interval,
    TwoInternal,
    Reductions,
    All,
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Cograph, Suite::Interval, Suite::TwoInternal, Suite::Reductions],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cograph => "cograph",
            Suite::Interval => "interval",
            Suite::TwoInternal => "two-internal",
            Suite::Reductions => "reductions",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Suite::Cograph, Suite::Interval, Suite::TwoInternal, Suite::Reductions, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Deliberate corruption of the tested side, used to check that the sweep
/// notices wrong answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Every decision is inverted.
    NegateDecision,
    /// Witnesses lose their last flip.
    TruncateWitness,
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "negate-decision" => Ok(Mutation::NegateDecision),
            "truncate-witness" => Ok(Mutation::TruncateWitness),
            _ => Err(format!("unknown mutation {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrosscheckConfig {
    pub suite: Suite,
    pub seed: u64,
    /// Graphs per suite.
    pub count: usize,
    /// Tree pairs per graph and budget.
    pub pairs: usize,
    pub budget: SearchBudget,
    pub mutation: Option<Mutation>,
}

impl CrosscheckConfig {
    pub fn new(suite: Suite, seed: u64, count: usize) -> Self {
        CrosscheckConfig {
            suite,
            seed,
            count,
            pairs: 5,
            budget: SearchBudget::default(),
            mutation: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Agree,
    Disagree,
    BudgetExceeded,
}

/// One row of the report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub suite: Suite,
    pub n: usize,
    pub m: usize,
    /// Internal-node budget, or the reduction parameter for reduction rows.
    pub budget: usize,
    pub tested: Option<bool>,
    pub oracle: Option<bool>,
    /// Whether the tested side's witness replayed; empty when none was given.
    pub witness_ok: Option<bool>,
    pub verdict: Verdict,
    pub states: usize,
    pub micros: u128,
    pub note: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CrosscheckReport {
    pub cases: Vec<CaseRecord>,
    pub warnings: Vec<String>,
}

impl CrosscheckReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.cases.iter().filter(|c| c.verdict == v).count()
    }

    /// No disagreement and no undecided case.
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.verdict == Verdict::Agree)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for c in &self.cases {
            w.serialize(c).expect("case rows serialize");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is UTF-8")
    }

    pub fn summary(&self) -> String {
        format!(
            "{} cases: {} agree, {} disagree, {} budget exceeded",
            self.cases.len(),
            self.count(Verdict::Agree),
            self.count(Verdict::Disagree),
            self.count(Verdict::BudgetExceeded)
        )
    }
}

/// Runs the configured suites. Rows come out sorted by case id.
pub fn run_crosscheck(cfg: &CrosscheckConfig) -> CrosscheckReport {
    let mut report = CrosscheckReport::default();
    for suite in cfg.suite.parts() {
        let mut r = rng(cfg.seed ^ suite_salt(suite));
        let cases = match suite {
            Suite::Cograph => cograph_cases(cfg, &mut r),
            Suite::Interval => interval_cases(cfg, &mut r),
            Suite::TwoInternal => two_internal_cases(cfg, &mut r),
            Suite::Reductions => reduction_cases(cfg, &mut r),
            Suite::All => unreachable!(),
        };
        if cases.is_empty() {
            report.warnings.push(format!("{suite}: 0 cases"));
        }
        report.cases.extend(cases);
    }
    report.cases.sort_by(|a, b| a.id.cmp(&b.id));
    report
}

fn suite_salt(s: Suite) -> u64 {
    match s {
        Suite::Cograph => 0x636f,
        Suite::Interval => 0x696e,
        Suite::TwoInternal => 0x7477,
        Suite::Reductions => 0x7265,
        Suite::All => 0,
    }
}

struct Pair {
    g: Graph,
    t1: SpanningTree,
    t2: SpanningTree,
    c: LeafConstraint,
    budget: usize,
}

fn mutate(out: Result<Outcome, SolveError>, m: Option<Mutation>) -> Result<Outcome, SolveError> {
    let mut out = out?;
    match m {
        Some(Mutation::NegateDecision) => out.reachable = !out.reachable,
        Some(Mutation::TruncateWitness) => {
            if let Some(w) = out.witness.as_mut() {
                w.flips.pop();
            }
        }
        None => {}
    }
    Ok(out)
}

/// Compares a decider's answer, and its witness if any, with BFS.
fn compare(id: String, suite: Suite, p: &Pair, cfg: &CrosscheckConfig, out: Result<Outcome, SolveError>) -> CaseRecord {
    let start = Instant::now();
    let out = mutate(out, cfg.mutation);
    let truth = st_reachable(&p.g, &p.t1, &p.t2, &p.c, cfg.budget);
    let mut rec = CaseRecord {
        id,
        suite,
        n: p.g.n(),
        m: p.g.m(),
        budget: p.budget,
        tested: None,
        oracle: None,
        witness_ok: None,
        verdict: Verdict::Disagree,
        states: 0,
        micros: 0,
        note: String::new(),
    };
    match &truth {
        Ok(t) => {
            rec.oracle = t.decision();
            rec.states = t.states_explored;
        }
        Err(e) => rec.note = format!("oracle: {e}"),
    }
    match &out {
        Ok(o) => {
            rec.tested = Some(o.reachable);
            rec.witness_ok = o.witness.as_ref().map(|w| replay(p, w));
        }
        Err(e) => rec.note = format!("solver: {e}"),
    }
    rec.verdict = match (rec.tested, &truth) {
        (_, Ok(t)) if t.is_budget_exceeded() => Verdict::BudgetExceeded,
        (Some(d), Ok(t)) if Some(d) == t.decision() && rec.witness_ok != Some(false) => Verdict::Agree,
        _ => Verdict::Disagree,
    };
    rec.micros = start.elapsed().as_micros();
    rec
}

fn replay(p: &Pair, w: &FlipSequence) -> bool {
    w.validate(&p.g, &p.t1, &p.t2, Some(&p.c)).is_ok()
}

/// Up to `pairs` random tree pairs with at most `budget` internal nodes.
fn pairs_for(g: &Graph, budget: usize, pairs: usize, r: &mut Rng64) -> Vec<Pair> {
    let c = LeafConstraint::internal_budget(g.n(), budget);
    (0..pairs)
        .map_while(|_| {
            let t1 = random_tree_within_budget(g, budget, r)?;
            let t2 = random_tree_within_budget(g, budget, r)?;
            Some(Pair {
                g: g.clone(),
                t1,
                t2,
                c,
                budget,
            })
        })
        .collect()
}

fn cograph_cases(cfg: &CrosscheckConfig, r: &mut Rng64) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for gi in 0..cfg.count {
        let n = r.gen_range(3..=8);
        let (g, cotree) = cograph(n, r);
        for budget in 1..=4.min(n - 1) {
            for (pi, p) in pairs_for(&g, budget, cfg.pairs, r).into_iter().enumerate() {
                let res = decide_cograph(&g, Some(&cotree), &p.t1, &p.t2, &p.c);
                out.push(compare(format!("cograph-{gi:04}-k{budget}-p{pi}"), Suite::Cograph, &p, cfg, res));
            }
        }
    }
    out
}

fn interval_cases(cfg: &CrosscheckConfig, r: &mut Rng64) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for gi in 0..cfg.count {
        let n = r.gen_range(3..=9);
        let (g, rep) = interval_graph(n, r);
        for budget in 1..n {
            for (pi, p) in pairs_for(&g, budget, cfg.pairs, r).into_iter().enumerate() {
                let res = decide_interval(&g, &rep, &p.t1, &p.t2, &p.c);
                out.push(compare(format!("interval-{gi:04}-k{budget}-p{pi}"), Suite::Interval, &p, cfg, res));
            }
        }
    }
    out
}

/// Connected graph on at most 8 vertices that has a tree with at most two
/// internal nodes.
fn two_internal_graph(r: &mut Rng64) -> Graph {
    loop {
        let n = r.gen_range(3..=8);
        let p = r.gen_range(0.4..0.95);
        let g = connected_graph_with_density(n, p, r);
        let pivotal = (0..n).any(|v| {
            g.dominates(&[v]) || g.neighbors(v).iter().any(|&w| g.dominates(&[v, w]))
        });
        if pivotal {
            return g;
        }
    }
}

fn two_internal_cases(cfg: &CrosscheckConfig, r: &mut Rng64) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for gi in 0..cfg.count {
        let g = two_internal_graph(r);
        for (pi, p) in pairs_for(&g, 2, cfg.pairs, r).into_iter().enumerate() {
            let res = decide_two_internal(&g, &p.t1, &p.t2);
            out.push(compare(format!("two-internal-{gi:04}-p{pi}"), Suite::TwoInternal, &p, cfg, res));
        }
    }
    out
}

fn reduction_row(id: String, source: &Graph, budget: usize) -> CaseRecord {
    CaseRecord {
        id,
        suite: Suite::Reductions,
        n: source.n(),
        m: source.m(),
        budget,
        tested: None,
        oracle: None,
        witness_ok: None,
        verdict: Verdict::Disagree,
        states: 0,
        micros: 0,
        note: String::new(),
    }
}

/// Three kinds in rotation: a token-jumping witness compiled into flips on
/// the few-leaves instance, a dominating-set question against BFS on the
/// many-leaves instance, and the planar cover tree against the true
/// maximum leaf count.
fn reduction_cases(cfg: &CrosscheckConfig, r: &mut Rng64) -> Vec<CaseRecord> {
    let catalog = planar_catalog();
    let mut out = Vec::new();
    for i in 0..cfg.count {
        let start = Instant::now();
        let mut rec = match i % 3 {
            0 => few_leaves_case(i, cfg, r),
            1 => many_leaves_case(i, cfg, r),
            _ => {
                let e = &catalog[r.gen_range(0..catalog.len())];
                planar_case(i, e.name, &e.graph, &e.embedding, cfg)
            }
        };
        rec.micros = start.elapsed().as_micros();
        out.push(rec);
    }
    out
}

fn random_small_graph(max_n: usize, max_m: usize, r: &mut Rng64) -> Graph {
    loop {
        let n = r.gen_range(2..=max_n);
        let g = connected_graph_with_density(n, r.gen_range(0.2..0.8), r);
        if g.m() <= max_m {
            return g;
        }
    }
}

fn few_leaves_case(i: usize, cfg: &CrosscheckConfig, r: &mut Rng64) -> CaseRecord {
    let g = random_small_graph(4, 4, r);
    let k = min_cover_size(&g).expect("small graph");
    let mut rec = reduction_row(format!("reductions-{i:04}-vc2st"), &g, k);
    let covers = vertex_covers_of_size(&g, k).expect("small graph");
    let x = &covers[r.gen_range(0..covers.len())];
    let y = &covers[r.gen_range(0..covers.len())];
    let tj = vc_tj_reachable(&g, x, y).expect("covers of equal size");
    rec.oracle = tj.decision();
    let Some(seq) = tj.witness() else {
        rec.verdict = Verdict::Agree;
        rec.note = "no token-jumping sequence; nothing to compile".into();
        return rec;
    };
    let compiled = (|| {
        let inst = build_vc_to_st_instance(&g, k, 3)?;
        let mut flips = cover_seq_to_flip_seq(&inst, seq)?;
        if cfg.mutation == Some(Mutation::TruncateWitness) {
            flips.flips.pop();
        }
        let t1 = cover_to_ham_path(&inst, x)?;
        let t2 = cover_to_ham_path(&inst, y)?;
        let ok = flips.validate(&inst.graph, &t1, &t2, Some(&inst.constraint())).is_ok()
            && &extract_cover(&inst, &t1)? == x
            && &extract_cover(&inst, &t2)? == y;
        Ok::<_, crate::reductions::ReductionError>((ok, flips.len()))
    })();
    match compiled {
        Ok((ok, len)) => {
            rec.tested = Some(cfg.mutation != Some(Mutation::NegateDecision));
            rec.witness_ok = Some(ok);
            rec.states = len;
        }
        Err(e) => rec.note = e.to_string(),
    }
    if rec.tested == rec.oracle && rec.witness_ok == Some(true) {
        rec.verdict = Verdict::Agree;
    }
    rec
}

fn dominating_sets(g: &Graph) -> Vec<Vec<Vertex>> {
    (1u32..1 << g.n())
        .map(|m| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| g.dominates(s))
        .collect()
}

fn many_leaves_case(i: usize, cfg: &CrosscheckConfig, r: &mut Rng64) -> CaseRecord {
    let n = 3;
    let pairs: Vec<(Vertex, Vertex)> = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .filter(|_| r.gen_bool(0.5))
        .collect();
    let g = Graph::from_pairs(n, &pairs);
    let variant = if r.gen_bool(0.5) {
        ManyLeavesVariant::Bipartite
    } else {
        ManyLeavesVariant::Split
    };
    let ds = dominating_sets(&g);
    let d1 = &ds[r.gen_range(0..ds.len())];
    let d2 = &ds[r.gen_range(0..ds.len())];
    let threshold = d1.len().max(d2.len()) + 1;
    let tag = match variant {
        ManyLeavesVariant::Bipartite => "bip",
        ManyLeavesVariant::Split => "split",
    };
    let mut rec = reduction_row(format!("reductions-{i:04}-ds2st-{tag}"), &g, threshold);
    let inst = build_ds_to_st_instance(&g, variant);
    let tar = ds_tar_reachable(&g, d1, d2, threshold).expect("dominating sets under threshold");
    rec.oracle = tar.decision();
    let (t1, t2) = (dominating_to_tree(&inst, d1), dominating_to_tree(&inst, d2));
    let (Ok(t1), Ok(t2)) = (t1, t2) else {
        rec.note = "associated tree failed".into();
        return rec;
    };
    match st_reachable(&inst.graph, &t1, &t2, &inst.constraint(threshold), cfg.budget) {
        Ok(res) => {
            rec.states = res.states_explored;
            rec.tested = res.decision().map(|d| d ^ (cfg.mutation == Some(Mutation::NegateDecision)));
            rec.verdict = if res.is_budget_exceeded() {
                Verdict::BudgetExceeded
            } else if rec.tested == rec.oracle {
                Verdict::Agree
            } else {
                Verdict::Disagree
            };
        }
        Err(e) => rec.note = e.to_string(),
    }
    rec
}

fn planar_case(
    i: usize,
    name: &str,
    g: &Graph,
    emb: &crate::graph::PlanarEmbedding,
    cfg: &CrosscheckConfig,
) -> CaseRecord {
    let k = min_cover_size(g).expect("catalog graphs are small");
    let mut rec = reduction_row(format!("reductions-{i:04}-planar-{name}"), g, k);
    let inst = match build_vc_to_st_planar(g, emb) {
        Ok(inst) => inst,
        Err(e) => {
            rec.note = e.to_string();
            return rec;
        }
    };
    let cover = &vertex_covers_of_size(g, k).expect("small graph")[0];
    let expected = inst.leaves_for_cover(k);
    let leaves = match planar_cover_tree(&inst, cover) {
        Ok(t) => t.leaf_count() + usize::from(cfg.mutation == Some(Mutation::NegateDecision)),
        Err(e) => {
            rec.note = e.to_string();
            return rec;
        }
    };
    rec.tested = Some(leaves == expected);
    if inst.graph.n() <= 12 {
        match enumerate_spanning_trees(&inst.graph) {
            Ok(all) => {
                rec.states = all.len();
                let best = all.iter().map(SpanningTree::leaf_count).max().unwrap_or(0);
                rec.oracle = Some(best == expected);
                rec.note = format!("leaves {leaves}, expected {expected}, maximum {best}");
            }
            Err(e) => rec.note = e.to_string(),
        }
    } else {
        rec.note = format!("leaves {leaves}, expected {expected}; not enumerated");
    }
    if rec.tested == Some(true) && rec.oracle != Some(false) {
        rec.verdict = Verdict::Agree;
    }
    rec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_count_warns() {
        let rep = run_crosscheck(&CrosscheckConfig::new(Suite::All, 1, 0));
        assert!(rep.cases.is_empty());
        assert_eq!(rep.warnings.len(), 4);
        assert!(rep.passed());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Cograph, Suite::Interval, Suite::TwoInternal, Suite::Reductions, Suite::All] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn csv_has_header_and_rows() {
        let rep = run_crosscheck(&CrosscheckConfig::new(Suite::TwoInternal, 3, 2));
        let text = rep.to_csv();
        assert!(text.starts_with("id,suite,n,m,budget"));
        assert_eq!(text.lines().count(), rep.cases.len() + 1);
    }
}
