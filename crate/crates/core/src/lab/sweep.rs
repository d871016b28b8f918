//! Exhaustive and random sweeps over (instance, labelling) pairs.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use rand::Rng;
use serde::Serialize;

use crate::algebra::order::MonomialOrder;
use crate::combinatorics::instance::Instance;
use crate::combinatorics::poset::Poset;
use crate::combinatorics::system::{Kind, PathSystem};
use crate::complexes::{is_shelling, order_complex, FacetOrdering, GeneralisedSimplicialComplex};
use crate::error::{Error, Result};
use crate::groebner;
use crate::io::{digest, digest_value, instance_to_value};
use crate::labelling::{
    check_lex_condition, check_prefix_condition, check_sbs_condition, EdgeLabelling,
};
use crate::par;

use super::enumerate::{bounded_posets, labelling_at, labelling_count};
use super::laws::check_order_laws;
use super::random::{random_category, random_poset, random_prefix_labelling, rng};

/// Largest size swept exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 6;
const CHUNK: u64 = 512;

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    /// Posets with `2..=min(max_elements, 6)` elements are swept
    /// exhaustively; random posets have exactly `max_elements` elements.
    pub max_elements: usize,
    pub max_label: i64,
    /// Random posets, drawn only when `max_elements` exceeds the exhaustive
    /// limit.
    pub count: usize,
    /// Random bounded categories with 3 to 6 objects.
    pub categories: usize,
    pub labellings_per_instance: usize,
    pub edge_density: f64,
    pub seed: u64,
    /// Worker threads; 1 runs sequentially, 0 uses all cores.
    pub jobs: usize,
    /// Maximum number of (instance, labelling) pairs.
    pub budget: u64,
    /// Order laws are checked on instances with at most this many monomials.
    pub law_limit: usize,
    pub shelling_limit: usize,
    pub max_witnesses: usize,
    pub verbose: bool,
    pub dump_dir: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_elements: 6,
            max_label: 3,
            count: 0,
            categories: 0,
            labellings_per_instance: 4,
            edge_density: 0.4,
            seed: 42,
            jobs: 1,
            budget: 50_000_000,
            law_limit: 200,
            shelling_limit: crate::complexes::DEFAULT_SHELLING_BOUND,
            max_witnesses: 5,
            verbose: false,
            dump_dir: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub check: String,
    pub detail: String,
    pub instance: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub kind: Kind,
    pub elements: usize,
    pub instance: String,
    pub labels: Vec<i64>,
    pub sbs: bool,
    pub lex: bool,
    pub quadratic: bool,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct SizeStats {
    pub pairs: u64,
    pub sbs: u64,
    pub quadratic: u64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub instances: u64,
    /// Labellings examined, prefix-invalid ones included.
    pub labellings: u64,
    /// Prefix-valid pairs, the ones actually checked.
    pub pairs: u64,
    pub prefix_invalid: u64,
    pub sbs_true: u64,
    pub lex_true: u64,
    pub quadratic_true: u64,
    /// SBS without a quadratic basis.
    pub forward_failures: u64,
    /// Quadratic basis without SBS.
    pub backward_failures: u64,
    /// Backward failures on graded posets.
    pub backward_failures_graded: u64,
    pub lex_sbs_disagreements: u64,
    pub oracle_discrepancies: u64,
    pub dimension_discrepancies: u64,
    pub truncation_discrepancies: u64,
    pub non_unit_coefficients: u64,
    pub order_law_checked: u64,
    pub order_law_failures: u64,
    pub incomparable_ties: u64,
    pub shelling_checked: u64,
    pub shelling_failures: u64,
    pub restriction_checked: u64,
    pub restriction_failures: u64,
    pub errors: u64,
    pub by_kind_and_size: BTreeMap<String, SizeStats>,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<PairRecord>>,
}

impl SweepSummary {
    pub fn theorem_violations(&self) -> u64 {
        self.forward_failures + self.backward_failures
    }

    /// Every recorded check passed.
    pub fn all_agree(&self) -> bool {
        self.theorem_violations() == 0
            && self.lex_sbs_disagreements == 0
            && self.oracle_discrepancies == 0
            && self.dimension_discrepancies == 0
            && self.truncation_discrepancies == 0
            && self.order_law_failures == 0
            && self.incomparable_ties == 0
            && self.shelling_failures == 0
            && self.restriction_failures == 0
            && self.errors == 0
    }

    fn merge(&mut self, o: SweepSummary, max_witnesses: usize) {
        macro_rules! add {
            ($($f:ident),*) => { $(self.$f += o.$f;)* };
        }
        add!(
            instances,
            labellings,
            pairs,
            prefix_invalid,
            sbs_true,
            lex_true,
            quadratic_true,
            forward_failures,
            backward_failures,
            backward_failures_graded,
            lex_sbs_disagreements,
            oracle_discrepancies,
            dimension_discrepancies,
            truncation_discrepancies,
            non_unit_coefficients,
            order_law_checked,
            order_law_failures,
            incomparable_ties,
            shelling_checked,
            shelling_failures,
            restriction_checked,
            restriction_failures,
            errors
        );
        for (k, s) in o.by_kind_and_size {
            let e = self.by_kind_and_size.entry(k).or_default();
            e.pairs += s.pairs;
            e.sbs += s.sbs;
            e.quadratic += s.quadratic;
        }
        for w in o.witnesses {
            let n = self.witnesses.iter().filter(|x| x.check == w.check).count();
            if n < max_witnesses {
                self.witnesses.push(w);
            }
        }
        if let Some(r) = o.records {
            self.records.get_or_insert_with(Vec::new).extend(r);
        }
    }
}

/// Shared per-instance data.
struct Prepared {
    instance: Instance,
    sys: PathSystem,
    digest: String,
    complex: Option<GeneralisedSimplicialComplex>,
    /// Proper intervals of a poset with the ambient index of each cover.
    intervals: Vec<(PathSystem, Vec<usize>)>,
    graded: bool,
}

impl Prepared {
    fn new(instance: Instance, cfg: &SweepConfig) -> Result<Self> {
        let sys = instance.system()?;
        let (complex, intervals) = match &instance {
            Instance::Poset(p) => {
                let k = order_complex(p);
                let k = (k.facets().len() <= cfg.shelling_limit).then_some(k);
                (k, proper_intervals(p)?)
            }
            Instance::Category(_) => (None, Vec::new()),
        };
        let graded = match &instance {
            Instance::Poset(p) => p.is_graded().unwrap_or(false),
            Instance::Category(_) => false,
        };
        Ok(Prepared {
            graded,
            digest: digest(&instance, None),
            instance,
            sys,
            complex,
            intervals,
        })
    }
}

fn proper_intervals(p: &Poset) -> Result<Vec<(PathSystem, Vec<usize>)>> {
    let bounds = p.bottom().zip(p.top());
    let mut out = Vec::new();
    for iv in p.intervals() {
        if iv.bottom == iv.top || Some((iv.bottom, iv.top)) == bounds {
            continue;
        }
        let names: Vec<String> = iv.members.iter().map(|&v| p.name(v).to_string()).collect();
        let local = |v| iv.members.iter().position(|&m| m == v).unwrap();
        let mut rel = Vec::new();
        let mut map = Vec::new();
        for (e, &(x, y)) in p.covers().iter().enumerate() {
            if iv.members.contains(&x) && iv.members.contains(&y) {
                rel.push((local(x), local(y)));
                map.push(e);
            }
        }
        let q = Poset::from_relations(names, &rel)?;
        out.push((PathSystem::from_poset(&q)?, map));
    }
    Ok(out)
}

struct Job<'a> {
    prep: &'a Prepared,
    labellings: Labellings,
}

enum Labellings {
    Range { start: u64, end: u64 },
    Listed(Vec<EdgeLabelling>),
}

fn witness(
    out: &mut SweepSummary,
    cfg: &SweepConfig,
    check: &str,
    prep: &Prepared,
    lab: &EdgeLabelling,
    detail: String,
) {
    if out.witnesses.iter().filter(|w| w.check == check).count() >= cfg.max_witnesses {
        return;
    }
    out.witnesses.push(Witness {
        check: check.into(),
        detail,
        instance: instance_to_value(&prep.instance, Some(lab)),
    });
}

fn dump_violations(dir: &Path, witnesses: &[Witness]) {
    for w in witnesses.iter().filter(|w| w.check == "theorem") {
        let d = digest_value(&w.instance);
        let _ = std::fs::create_dir_all(dir);
        let body = serde_json::to_string_pretty(&w.instance).unwrap_or_default();
        let _ = std::fs::write(dir.join(format!("violation-{}.json", &d[..12])), body);
    }
}

fn size_key(prep: &Prepared) -> String {
    let kind = match prep.instance.kind() {
        Kind::Poset => "poset",
        Kind::Category => "category",
    };
    format!("{kind}/{}", prep.instance.size())
}

fn analyse_pair(prep: &Prepared, lab: &EdgeLabelling, cfg: &SweepConfig, out: &mut SweepSummary) {
    out.labellings += 1;
    let sys = &prep.sys;
    if !check_prefix_condition(sys, lab).holds {
        out.prefix_invalid += 1;
        return;
    }
    out.pairs += 1;
    if let Err(e) = analyse_valid(prep, lab, cfg, out) {
        if matches!(e, Error::IncomparableTie(..)) {
            out.incomparable_ties += 1;
            witness(out, cfg, "tie", prep, lab, e.to_string());
        } else {
            out.errors += 1;
            witness(out, cfg, "error", prep, lab, e.to_string());
        }
    }
}

fn analyse_valid(
    prep: &Prepared,
    lab: &EdgeLabelling,
    cfg: &SweepConfig,
    out: &mut SweepSummary,
) -> Result<()> {
    let sys = &prep.sys;
    let table = sys.paths();
    let sbs = check_sbs_condition(sys, lab)?;
    let lex = check_lex_condition(sys, lab)?;
    let ord = MonomialOrder::new(sys, lab)?;
    let gb = groebner::parallel_ideal_basis(&ord)?;
    let quadratic = groebner::is_quadratic(&gb, table);

    let stats = out.by_kind_and_size.entry(size_key(prep)).or_default();
    stats.pairs += 1;
    stats.sbs += sbs.holds as u64;
    stats.quadratic += quadratic as u64;
    out.sbs_true += sbs.holds as u64;
    out.lex_true += lex.holds as u64;
    out.quadratic_true += quadratic as u64;
    if cfg.verbose {
        out.records.get_or_insert_with(Vec::new).push(PairRecord {
            kind: sys.kind(),
            elements: prep.instance.size(),
            instance: prep.digest.clone(),
            labels: lab.as_slice().to_vec(),
            sbs: sbs.holds,
            lex: lex.holds,
            quadratic,
        });
    }

    let terms = || {
        gb.initial_terms
            .iter()
            .map(|&p| sys.render_path(p))
            .collect::<Vec<_>>()
            .join(", ")
    };
    if sbs.holds && !quadratic {
        out.forward_failures += 1;
        witness(
            out,
            cfg,
            "theorem",
            prep,
            lab,
            format!("SBS holds, initial terms {}", terms()),
        );
    }
    if quadratic && !sbs.holds {
        out.backward_failures += 1;
        out.backward_failures_graded += prep.graded as u64;
        let chain = sbs.witness.map(|p| sys.render_path(p)).unwrap_or_default();
        witness(
            out,
            cfg,
            "theorem",
            prep,
            lab,
            format!("quadratic basis, SBS fails at {chain}"),
        );
    }
    if lex.holds != sbs.holds {
        out.lex_sbs_disagreements += 1;
        witness(
            out,
            cfg,
            "lex-sbs",
            prep,
            lab,
            format!("LEX {} SBS {}", lex.holds, sbs.holds),
        );
    }

    let oracle = groebner::initial_ideal_oracle_with(&ord, false)?;
    let generated: BTreeSet<_> = table
        .nontrivial()
        .filter(|&p| gb.initial_terms.iter().any(|&l| table.divides(l, p)))
        .collect();
    if groebner::minimal_generators(table, &oracle) != gb.initial_term_set() || generated != oracle
    {
        out.oracle_discrepancies += 1;
        witness(
            out,
            cfg,
            "oracle",
            prep,
            lab,
            format!("initial terms {}", terms()),
        );
    }
    if !groebner::dimension_check(sys, &gb) {
        out.dimension_discrepancies += 1;
        witness(
            out,
            cfg,
            "dimension",
            prep,
            lab,
            format!("initial terms {}", terms()),
        );
    }
    let (t_ok, t_count) = groebner::truncation_check(&gb, &ord)?;
    if !t_ok {
        out.truncation_discrepancies += 1;
        witness(
            out,
            cfg,
            "truncation",
            prep,
            lab,
            format!("{t_count} normal monomials"),
        );
    }
    if !gb.has_unit_coefficients() {
        out.non_unit_coefficients += 1;
    }

    if table.len() - sys.vertex_count() <= cfg.law_limit {
        out.order_law_checked += 1;
        let laws = check_order_laws(&ord);
        out.incomparable_ties += laws.ties;
        if !laws.holds() {
            out.order_law_failures += 1;
            witness(
                out,
                cfg,
                "order-laws",
                prep,
                lab,
                laws.first_failure.unwrap_or_default(),
            );
        }
    }

    if let (true, Some(k)) = (sbs.holds, &prep.complex) {
        out.shelling_checked += 1;
        let order: Option<Vec<_>> = ord
            .shelling()
            .iter()
            .map(|&p| k.facet_by_vertices(&table.vertices(p)))
            .collect();
        let ok = match order {
            Some(o) => is_shelling(k, &FacetOrdering(o))?,
            None => false,
        };
        if !ok {
            out.shelling_failures += 1;
            witness(
                out,
                cfg,
                "shelling",
                prep,
                lab,
                "lex order of maximal chains is not a shelling".into(),
            );
        }
    }

    if !prep.intervals.is_empty() {
        out.restriction_checked += 1;
        let ambient: BTreeSet<String> = gb
            .initial_terms
            .iter()
            .map(|&p| sys.render_path(p))
            .collect();
        for (sub, map) in &prep.intervals {
            let sub_lab = EdgeLabelling::new(map.iter().map(|&e| lab.label(e)).collect());
            let sub_ord = MonomialOrder::new(sub, &sub_lab)?;
            let sub_gb = groebner::parallel_ideal_basis(&sub_ord)?;
            let contained = sub_gb
                .initial_terms
                .iter()
                .all(|&p| ambient.contains(&sub.render_path(p)));
            if !contained || (quadratic && !groebner::is_quadratic(&sub_gb, sub.paths())) {
                out.restriction_failures += 1;
                witness(
                    out,
                    cfg,
                    "restriction",
                    prep,
                    lab,
                    format!(
                        "interval {}..{}",
                        sub.vertex_name(0),
                        sub.vertex_name(sub.vertex_count() - 1)
                    ),
                );
                break;
            }
        }
    }
    Ok(())
}

fn run_job(job: &Job<'_>, cfg: &SweepConfig) -> SweepSummary {
    let mut out = SweepSummary::default();
    let edges = job.prep.sys.edge_count();
    match &job.labellings {
        Labellings::Range { start, end } => {
            for i in *start..*end {
                analyse_pair(
                    job.prep,
                    &labelling_at(i, edges, cfg.max_label),
                    cfg,
                    &mut out,
                );
            }
        }
        Labellings::Listed(labs) => {
            for lab in labs {
                analyse_pair(job.prep, lab, cfg, &mut out);
            }
        }
    }
    out
}

fn random_labellings(seed: u64, sys: &PathSystem, cfg: &SweepConfig) -> Vec<EdgeLabelling> {
    let mut r = rng(seed ^ 0x5eed_1abe_1000_0000);
    let mut labs: Vec<EdgeLabelling> = Vec::new();
    for _ in 0..cfg.labellings_per_instance {
        let lab = random_prefix_labelling(&mut r, sys, cfg.max_label, 64);
        if !labs.contains(&lab) {
            labs.push(lab);
        }
    }
    labs
}

/// Runs every check on every swept pair and aggregates the outcome.
pub fn equivalence_sweep(cfg: &SweepConfig) -> Result<SweepSummary> {
    if cfg.max_label < 1 {
        return Err(Error::Validation("max label must be at least 1".into()));
    }
    let mut prepared = Vec::new();
    let mut ranges = Vec::new();
    let mut listed = Vec::new();
    let mut needed: u64 = 0;
    for n in 2..=cfg.max_elements.min(EXHAUSTIVE_LIMIT) {
        for p in bounded_posets(n) {
            let total = labelling_count(p.covers().len(), cfg.max_label);
            needed = needed.saturating_add(total);
            ranges.push((prepared.len(), total));
            prepared.push(Prepared::new(Instance::Poset(p), cfg)?);
        }
    }
    let mut seeds = rng(cfg.seed);
    let random_posets = if cfg.max_elements > EXHAUSTIVE_LIMIT {
        cfg.count
    } else {
        0
    };
    let mut instance_seeds: Vec<(Kind, u64)> = Vec::new();
    for _ in 0..random_posets {
        instance_seeds.push((Kind::Poset, seeds.random()));
    }
    for _ in 0..cfg.categories {
        instance_seeds.push((Kind::Category, seeds.random()));
    }
    for (k, (kind, s)) in instance_seeds.into_iter().enumerate() {
        let mut r = rng(s);
        let inst = match kind {
            Kind::Poset => {
                Instance::Poset(random_poset(&mut r, cfg.max_elements, cfg.edge_density))
            }
            Kind::Category => {
                Instance::Category(random_category(&mut r, 3 + k % 4, cfg.edge_density))
            }
        };
        let prep = Prepared::new(inst, cfg)?;
        let labs = random_labellings(s, &prep.sys, cfg);
        needed = needed.saturating_add(labs.len() as u64);
        listed.push((prepared.len(), labs));
        prepared.push(prep);
    }
    if needed > cfg.budget {
        return Err(Error::SweepBudgetExceeded {
            needed,
            budget: cfg.budget,
        });
    }

    let mut jobs = Vec::new();
    for (i, total) in ranges {
        let mut start = 0;
        while start < total {
            let end = (start + CHUNK).min(total);
            jobs.push(Job {
                prep: &prepared[i],
                labellings: Labellings::Range { start, end },
            });
            start = end;
        }
    }
    for (i, labs) in listed {
        jobs.push(Job {
            prep: &prepared[i],
            labellings: Labellings::Listed(labs),
        });
    }

    let parallel = cfg.jobs != 1 && par::enabled();
    let parts = par::install(cfg.jobs, || {
        par::map_collect(&jobs, parallel, |j| run_job(j, cfg))
    });
    let mut summary = SweepSummary {
        instances: prepared.len() as u64,
        ..SweepSummary::default()
    };
    for p in parts {
        summary.merge(p, cfg.max_witnesses);
    }
    if let Some(dir) = &cfg.dump_dir {
        dump_violations(dir, &summary.witnesses);
    }
    Ok(summary)
}
