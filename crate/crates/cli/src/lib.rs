//! Command-line front end. `main` is a thin shim over [`run_args`].

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lexshell::algebra::MonomialOrder;
use lexshell::combinatorics::{AcyclicCategory, Instance, PathSystem};
use lexshell::complexes::{self, FacetOrdering, GeneralisedSimplicialComplex};
use lexshell::groebner;
use lexshell::io::{self, Report};
use lexshell::lab::{self, Direction, SweepConfig};
use lexshell::labelling::{self, EdgeLabelling};
use lexshell::{Error, Result};

#[derive(Parser)]
#[command(
    name = "lexshell",
    version,
    about = "Lex-shellability and Gröbner bases of parallel ideals"
)]
struct Cli {
    /// Leave timing out of reports.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance file.
    Validate { file: PathBuf },
    /// Maximal chains of the instance, or of one interval.
    Chains {
        file: PathBuf,
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
    },
    /// Order complex (posets) or nerve (categories).
    Complex { file: PathBuf },
    /// Nerve, treating a poset as a category.
    Nerve { file: PathBuf },
    /// Check that the lex order of maximal chains is a shelling.
    Shelling {
        file: PathBuf,
        /// Search all facet orders instead.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = complexes::DEFAULT_SHELLING_BOUND)]
        bound: usize,
    },
    /// Prefix condition.
    Prefix { file: PathBuf },
    /// LEX-condition.
    Lex { file: PathBuf },
    /// SBS-condition.
    Sbs { file: PathBuf },
    /// Compare two monomials and name the deciding rule.
    Order {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["W", "V"], required = true)]
        explain: Vec<String>,
    },
    /// Reduced Gröbner basis of the parallel ideal.
    Gb {
        file: PathBuf,
        /// Check a basis file `{"elements": ["+p - q", ...]}` instead.
        #[arg(long, value_name = "FILE")]
        verify_paper_basis: Option<PathBuf>,
    },
    /// Brute-force initial ideal compared with the computed basis.
    Oracle { file: PathBuf },
    /// Whether the reduced basis is quadratic.
    Quadratic { file: PathBuf },
    /// Check the main equivalence on one labelled instance.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DirectionArg::Both)]
        direction: DirectionArg,
        /// Where to write a fixture when an implication fails.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Sweep small posets exhaustively and larger ones at random.
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_elements: usize,
        #[arg(long, default_value_t = 3)]
        max_label: i64,
        #[arg(long, default_value_t = 0)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        categories: usize,
        #[arg(long, default_value_t = 4)]
        labellings: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Adjoin a minimum and maximum (or initial and terminal objects).
    Augment {
        file: PathBuf,
        /// Augment even when already bounded.
        #[arg(long)]
        force: bool,
    },
    /// Search for an SBS labelling with labels in 1..=K.
    Search {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_label: i64,
        #[arg(long, default_value_t = labelling::DEFAULT_SEARCH_EDGE_BOUND)]
        edge_bound: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Fwd,
    Bwd,
    Both,
}

struct Loaded {
    instance: Instance,
    labelling: Option<EdgeLabelling>,
    digest: String,
}

impl Loaded {
    fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let (instance, labelling) = io::parse_instance(&text)?;
        let digest = io::digest(&instance, labelling.as_ref());
        Ok(Loaded {
            instance,
            labelling,
            digest,
        })
    }

    fn labels(&self) -> Result<&EdgeLabelling> {
        let lab = self
            .labelling
            .as_ref()
            .ok_or_else(|| Error::Validation("this command needs an edge labelling".into()))?;
        if lab.len() != self.instance.edge_count() {
            return Err(Error::Validation("label count does not match edges".into()));
        }
        Ok(lab)
    }

    fn report(&self, command: &str) -> Report {
        let mut r = Report::new(command);
        r.instance = Some(self.digest.clone());
        r
    }
}

fn require_prefix(sys: &PathSystem, lab: &EdgeLabelling) -> Result<()> {
    match labelling::check_prefix_condition(sys, lab).witness {
        Some((a, b)) => Err(Error::PrefixViolation(
            sys.render_path(a),
            sys.render_path(b),
        )),
        None => Ok(()),
    }
}

fn path_names(
    sys: &PathSystem,
    ids: impl IntoIterator<Item = lexshell::combinatorics::PathId>,
) -> Vec<String> {
    ids.into_iter().map(|p| sys.render_path(p)).collect()
}

fn complex_of(inst: &Instance) -> GeneralisedSimplicialComplex {
    match inst {
        Instance::Poset(p) => complexes::order_complex(p),
        Instance::Category(c) => complexes::nerve(c),
    }
}

/// Facet of the complex matching a maximal path.
fn facet_of_path(
    inst: &Instance,
    sys: &PathSystem,
    k: &GeneralisedSimplicialComplex,
    p: lexshell::combinatorics::PathId,
) -> Option<complexes::FaceRef> {
    let table = sys.paths();
    match inst {
        Instance::Poset(_) => k.facet_by_vertices(&table.vertices(p)),
        Instance::Category(c) => {
            let morphs: Vec<usize> = table
                .path(p)
                .edges
                .iter()
                .map(|&e| c.morphism_of(table.lookup(&[e]).unwrap()))
                .collect();
            k.facet_by_morphisms(&morphs)
        }
    }
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate { file } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let mut r = l.report("validate");
            r.verdict = Some(true);
            r.details = json!({
                "kind": sys.kind(),
                "size": l.instance.size(),
                "edges": l.instance.edge_count(),
                "bounded": l.instance.is_bounded(),
                "labelled": l.labelling.is_some(),
                "paths": sys.paths().len(),
                "classes": sys.classes().len(),
            });
            Ok(r)
        }
        Command::Chains { file, from, to } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let chains = match (from, to) {
                (Some(x), Some(y)) => {
                    let find = |name: &str| {
                        (0..sys.vertex_count())
                            .find(|&v| sys.vertex_name(v) == name)
                            .ok_or_else(|| Error::UnknownElement(name.into()))
                    };
                    let (x, y) = (find(x)?, find(y)?);
                    if !sys.reaches(x, y) {
                        return Err(Error::NotComparable(
                            sys.vertex_name(x).into(),
                            sys.vertex_name(y).into(),
                        ));
                    }
                    sys.paths()
                        .starting_at(x)
                        .iter()
                        .copied()
                        .filter(|&p| sys.paths().path(p).cod == y)
                        .collect()
                }
                _ => sys.maximal_paths()?,
            };
            let mut r = l.report("chains");
            let rows: Vec<Value> = chains
                .iter()
                .map(|&p| {
                    let labels = l.labelling.as_ref().map(|lab| lab.sequence(sys.paths(), p));
                    json!({ "chain": sys.render_path(p), "labels": labels })
                })
                .collect();
            r.details = json!({ "chains": rows });
            Ok(r)
        }
        Command::Complex { file } => {
            let l = Loaded::read(file)?;
            let mut r = l.report("complex");
            r.details = io::complex_document(&complex_of(&l.instance));
            Ok(r)
        }
        Command::Nerve { file } => {
            let l = Loaded::read(file)?;
            let c = match &l.instance {
                Instance::Poset(p) => AcyclicCategory::from_poset(p)?,
                Instance::Category(c) => c.clone(),
            };
            let mut r = l.report("nerve");
            r.details = io::complex_document(&complexes::nerve(&c));
            Ok(r)
        }
        Command::Shelling {
            file,
            search,
            bound,
        } => {
            let l = Loaded::read(file)?;
            let k = complex_of(&l.instance);
            let mut r = l.report("shelling");
            let render =
                |o: &FacetOrdering| o.0.iter().map(|&f| k.render_face(f)).collect::<Vec<_>>();
            if *search {
                let found = complexes::find_shelling_with(&k, *bound, lexshell::par::enabled())?;
                r.verdict = Some(found.is_some());
                r.details = json!({ "order": found.as_ref().map(render) });
            } else {
                let lab = l.labels()?;
                let sys = l.instance.system()?;
                let ord = MonomialOrder::new(&sys, lab)?;
                let facets: Option<Vec<_>> = ord
                    .shelling()
                    .iter()
                    .map(|&p| facet_of_path(&l.instance, &sys, &k, p))
                    .collect();
                let facets = facets.ok_or(Error::IncompleteOrdering)?;
                let order = FacetOrdering(facets);
                r.verdict = Some(complexes::is_shelling(&k, &order)?);
                r.details = json!({ "order": render(&order) });
            }
            Ok(r)
        }
        Command::Prefix { file } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let v = labelling::check_prefix_condition(&sys, l.labels()?);
            let mut r = l.report("prefix");
            r.verdict = Some(v.holds);
            r.witness = v
                .witness
                .map(|(a, b)| json!([sys.render_path(a), sys.render_path(b)]));
            Ok(r)
        }
        Command::Lex { file } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let v = labelling::check_lex_condition(&sys, l.labels()?)?;
            let mut r = l.report("lex");
            r.verdict = Some(v.holds);
            r.witness = v
                .witness
                .map(|w| json!({ "chain": sys.render_path(w.chain), "s": w.s, "t": w.t }));
            Ok(r)
        }
        Command::Sbs { file } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let v = labelling::check_sbs_condition(&sys, l.labels()?)?;
            let mut r = l.report("sbs");
            r.verdict = Some(v.holds);
            r.witness = v.witness.map(|p| json!(sys.render_path(p)));
            Ok(r)
        }
        Command::Order { file, explain } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let ord = MonomialOrder::new(&sys, l.labels()?)?;
            let w = sys.parse_path(&explain[0])?;
            let v = sys.parse_path(&explain[1])?;
            let (o, rule) = ord.explain(w, v)?;
            let rel = match o {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            let mut r = l.report("order");
            r.details = json!({
                "w": sys.render_path(w),
                "v": sys.render_path(v),
                "relation": rel,
                "rule": rule,
                "reason": rule.describe(),
            });
            Ok(r)
        }
        Command::Gb {
            file,
            verify_paper_basis,
        } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let lab = l.labels()?;
            require_prefix(&sys, lab)?;
            let ord = MonomialOrder::new(&sys, lab)?;
            let mut r = l.report("gb");
            match verify_paper_basis {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    let basis = io::parse_basis_file(&sys, &text)?;
                    let ok = groebner::is_groebner_basis(&basis, &ord)?;
                    let terms: Vec<String> = basis
                        .iter()
                        .map(|g| groebner::leading_term(g, &ord).map(|(p, _)| sys.render_path(p)))
                        .collect::<Result<_>>()?;
                    r.verdict = Some(ok);
                    r.details = json!({
                        "elements": basis.iter().map(|g| groebner::render_ordered(&ord, g)).collect::<Vec<_>>(),
                        "initial_terms": terms,
                    });
                }
                None => {
                    let gb = groebner::parallel_ideal_basis(&ord)?;
                    r.details = io::basis_document(&ord, &gb);
                }
            }
            Ok(r)
        }
        Command::Oracle { file } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let lab = l.labels()?;
            require_prefix(&sys, lab)?;
            let ord = MonomialOrder::new(&sys, lab)?;
            let oracle = groebner::initial_ideal_oracle(&ord)?;
            let minimal = groebner::minimal_generators(sys.paths(), &oracle);
            let gb = groebner::parallel_ideal_basis(&ord)?;
            let mut r = l.report("oracle");
            r.verdict = Some(minimal == gb.initial_term_set());
            r.details = json!({
                "initial_ideal": path_names(&sys, oracle.iter().copied()),
                "minimal_generators": path_names(&sys, minimal.iter().copied()),
                "basis_initial_terms": path_names(&sys, gb.initial_terms.iter().copied()),
            });
            Ok(r)
        }
        Command::Quadratic { file } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let lab = l.labels()?;
            require_prefix(&sys, lab)?;
            let ord = MonomialOrder::new(&sys, lab)?;
            let gb = groebner::parallel_ideal_basis(&ord)?;
            let mut r = l.report("quadratic");
            r.verdict = Some(groebner::is_quadratic(&gb, sys.paths()));
            r.details = io::basis_document(&ord, &gb);
            Ok(r)
        }
        Command::Verify {
            file,
            direction,
            dump_dir,
        } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let lab = l.labels()?;
            let dirs: &[Direction] = match direction {
                DirectionArg::Fwd => &[Direction::Forward],
                DirectionArg::Bwd => &[Direction::Backward],
                DirectionArg::Both => &[Direction::Forward, Direction::Backward],
            };
            let mut reports = Vec::new();
            for &d in dirs {
                let rep = lab::verify::report(&sys, lab, d)?;
                if let Some(msg) = rep.violation() {
                    let dir = dump_dir.clone().unwrap_or_else(std::env::temp_dir);
                    std::fs::create_dir_all(&dir)?;
                    let path = dir.join(format!("violation-{}.json", &l.digest[..12]));
                    std::fs::write(&path, io::serialize_instance(&l.instance, Some(lab)))?;
                    return Err(Error::TheoremViolation(format!(
                        "{msg}; fixture written to {}",
                        path.display()
                    )));
                }
                reports.push(rep);
            }
            let mut r = l.report("verify");
            r.verdict = Some(true);
            r.details =
                json!({ "convention": io::monomial_convention(sys.kind()), "directions": reports });
            Ok(r)
        }
        Command::Sweep {
            max_elements,
            max_label,
            count,
            categories,
            labellings,
            seed,
            jobs,
            budget,
            verbose,
            dump_dir,
        } => {
            let cfg = SweepConfig {
                max_elements: *max_elements,
                max_label: *max_label,
                count: *count,
                categories: *categories,
                labellings_per_instance: *labellings,
                seed: *seed,
                jobs: *jobs,
                budget: *budget,
                verbose: *verbose,
                dump_dir: dump_dir.clone(),
                ..SweepConfig::default()
            };
            let summary = lab::equivalence_sweep(&cfg)?;
            let mut r = Report::new("sweep");
            r.verdict = Some(summary.all_agree());
            r.details = serde_json::to_value(&summary).unwrap();
            Ok(r)
        }
        Command::Augment { file, force } => {
            let l = Loaded::read(file)?;
            let out = if *force {
                l.instance.augment()
            } else {
                l.instance.augment_if_needed()
            };
            let lab = l.labelling.as_ref().map(|lab| {
                let mut labels = lab.as_slice().to_vec();
                labels.resize(out.edge_count(), 0);
                EdgeLabelling::new(labels)
            });
            let mut r = l.report("augment");
            r.details = io::instance_to_value(&out, lab.as_ref());
            Ok(r)
        }
        Command::Search {
            file,
            max_label,
            edge_bound,
        } => {
            let l = Loaded::read(file)?;
            let sys = l.instance.system()?;
            let found = labelling::search_lex_labelling(
                &sys,
                *max_label,
                *edge_bound,
                lexshell::par::enabled(),
            )?;
            let mut r = l.report("search");
            r.verdict = Some(found.is_some());
            r.details = json!({ "labels": found.map(|f| f.as_slice().to_vec()) });
            Ok(r)
        }
    }
}

/// What a single invocation printed and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    /// The report printed on stdout, if any.
    pub fn report(&self) -> Option<Value> {
        serde_json::from_str(self.stdout.trim()).ok()
    }
}

/// Parse `args` (program name first) and run the command.
///
/// Exit codes: 0 success, 1 when the report verdict is false, 2 on errors.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if !cli.deterministic {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
            }
            let code = match report.verdict {
                Some(false) => 1,
                _ => 0,
            };
            Outcome {
                stdout: format!("{}\n", report.to_json()),
                stderr: String::new(),
                code,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: 2,
        },
    }
}
