//! Experiment commands behind the `permscape` binary. Each command returns an
//! [`ExperimentReport`] whose CSV tables depend only on the parameters and seed.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use permscape::ea::{compare, CompareSettings, DEFAULT_POPULATION};
use permscape::landscapes::{haystack, random_matrix_tsp, PRESET_NAMES};
use permscape::stats::{correlation_study, fdc_table, jacobi_eigen, EXHAUSTIVE_CAP};
use permscape::{Landscape, LandscapeSpec, Measure, MutationOperator, Permutation, RandomSource, SamplingMode};
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] permscape::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("I/O error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

impl CliError {
    /// 2 for usage errors, 3 when a resource cap is exceeded, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use permscape::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(E::CapExceeded { .. }) => 3,
            CliError::Core(
                E::UnknownMeasure(_) | E::UnknownOperator(_) | E::UnknownLandscape(_) | E::InvalidParameter(_),
            ) => 2,
            _ => 1,
        }
    }
}

/// A named CSV payload.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: impl Into<String>, header: Vec<String>) -> Self {
        Table { name: name.into(), header, rows: Vec::new() }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    /// Cell at (`row key` in the first column, `column` header).
    pub fn cell(&self, row: &str, column: &str) -> Option<&str> {
        let c = self.header.iter().position(|h| h == column)?;
        self.rows.iter().find(|r| r[0] == row).map(|r| r[c].as_str())
    }

    pub fn value(&self, row: &str, column: &str) -> Option<f64> {
        self.cell(row, column)?.parse().ok()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub parameters: BTreeMap<String, String>,
    #[serde(skip)]
    pub tables: Vec<Table>,
    pub wall_clock_seconds: f64,
}

impl ExperimentReport {
    fn new(experiment: &str) -> Self {
        ExperimentReport {
            experiment: experiment.to_string(),
            parameters: BTreeMap::new(),
            tables: Vec::new(),
            wall_clock_seconds: 0.0,
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    /// Writes `<table>.csv` for each table plus `<experiment>-meta.json`
    /// (parameters, table list and wall-clock time). Returns the paths written.
    pub fn write(&self, out_dir: &Path) -> Result<Vec<PathBuf>> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CliError::Io { path, source }
        };
        fs::create_dir_all(out_dir).map_err(io(out_dir))?;
        let mut written = Vec::new();
        for t in &self.tables {
            let path = out_dir.join(format!("{}.csv", t.name));
            fs::write(&path, t.to_csv()?).map_err(io(&path))?;
            written.push(path);
        }
        #[derive(Serialize)]
        struct Meta<'a> {
            #[serde(flatten)]
            report: &'a ExperimentReport,
            tables: Vec<String>,
        }
        let meta = Meta { report: self, tables: self.tables.iter().map(|t| format!("{}.csv", t.name)).collect() };
        let path = out_dir.join(format!("{}-meta.json", self.experiment));
        fs::write(&path, serde_json::to_string_pretty(&meta)? + "\n").map_err(io(&path))?;
        written.push(path);
        Ok(written)
    }
}

/// Fixed four decimals for correlation-type values, without a negative zero.
pub fn fixed4(x: f64) -> String {
    let s = format!("{x:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone)]
pub struct PcaOptions {
    pub n: usize,
    pub mode: Mode,
    pub samples: usize,
    pub seed: u64,
    /// Comma-separated registry names; `None` selects the eleven default measures.
    pub measures: Option<String>,
    pub reference: Option<Permutation>,
}

impl PcaOptions {
    pub fn exhaustive(n: usize) -> Self {
        PcaOptions { n, mode: Mode::Exhaustive, samples: 0, seed: 0, measures: None, reference: None }
    }

    pub fn sampled(n: usize, samples: usize, seed: u64) -> Self {
        PcaOptions { n, mode: Mode::Sampled, samples, seed, measures: None, reference: None }
    }
}

fn parse_measures(list: Option<&str>, n: usize) -> Result<Vec<Measure>> {
    let measures = match list {
        None => Measure::pca_defaults(),
        Some(names) => Measure::parse_list(names, n)?,
    };
    if measures.is_empty() {
        return Err(CliError::Usage("at least one measure is required".into()));
    }
    Ok(measures)
}

/// Correlation matrix, eigenvalues, eigenvectors and loadings of the distance
/// measures over all (or sampled) permutations against a reference.
pub fn cmd_pca(opts: &PcaOptions) -> Result<ExperimentReport> {
    let start = Instant::now();
    if opts.n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let measures = parse_measures(opts.measures.as_deref(), opts.n)?;
    let mode = match opts.mode {
        Mode::Exhaustive => {
            if opts.n > EXHAUSTIVE_CAP {
                return Err(permscape::Error::CapExceeded { what: "exhaustive enumeration", n: opts.n, cap: EXHAUSTIVE_CAP }.into());
            }
            SamplingMode::Exhaustive
        }
        Mode::Sampled => {
            if opts.samples < 2 {
                return Err(CliError::Usage("--samples must be at least 2".into()));
            }
            SamplingMode::Sampled { samples: opts.samples, seed: opts.seed }
        }
    };
    let reference = opts.reference.clone().unwrap_or_else(|| Permutation::identity(opts.n));
    let study = correlation_study::<f64>(opts.n, &measures, mode, &reference)?;
    let pca = jacobi_eigen(&study.correlation)?;

    let mut report = ExperimentReport::new("pca");
    report.param("n", opts.n);
    report.param("mode", if opts.mode == Mode::Exhaustive { "exhaustive" } else { "sampled" });
    report.param("rows", study.rows);
    if opts.mode == Mode::Sampled {
        report.param("seed", opts.seed);
    }
    report.param("reference", format!("{reference}"));
    report.param("jacobi_sweeps", pca.sweeps);

    let names = &study.measure_names;
    let k = names.len();
    let components: Vec<String> = (1..=k).map(|c| format!("PC{c}")).collect();
    let with_label = |label: &str, rest: &[String]| {
        std::iter::once(label.to_string()).chain(rest.iter().cloned()).collect::<Vec<_>>()
    };

    let mut corr = Table::new("pca-correlation", with_label("measure", names));
    for (i, name) in names.iter().enumerate() {
        corr.rows.push(with_label(name, &(0..k).map(|j| fixed4(study.correlation[(i, j)])).collect::<Vec<_>>()));
    }
    let mut eig = Table::new("pca-eigenvalues", ["component", "eigenvalue", "proportion", "cumulative"].map(String::from).to_vec());
    for c in 0..k {
        eig.rows.push(vec![
            components[c].clone(),
            fixed4(pca.eigenvalues[c]),
            fixed4(pca.proportions[c]),
            fixed4(pca.cumulative[c]),
        ]);
    }
    let mut vectors = Table::new("pca-eigenvectors", with_label("measure", &components));
    let mut loadings = Table::new("pca-loadings", with_label("measure", &components));
    for (i, name) in names.iter().enumerate() {
        vectors.rows.push(with_label(name, &(0..k).map(|c| fixed4(pca.eigenvectors[(i, c)])).collect::<Vec<_>>()));
        loadings.rows.push(with_label(name, &(0..k).map(|c| fixed4(pca.loadings[(i, c)])).collect::<Vec<_>>()));
    }
    report.tables = vec![corr, eig, vectors, loadings];
    report.wall_clock_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct FdcOptions {
    /// Comma-separated preset names (`L1`..`L5`) or a path to a TOML landscape file.
    pub landscapes: String,
    pub samples: usize,
    pub seed: u64,
    pub measures: Option<String>,
}

impl FdcOptions {
    pub fn presets(samples: usize, seed: u64) -> Self {
        FdcOptions { landscapes: PRESET_NAMES.join(","), samples, seed, measures: None }
    }
}

/// Stable 64-bit FNV-1a hash, used to give each landscape its own sample stream.
fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn resolve_landscapes(spec: &str, seed: u64) -> Result<Vec<(String, Landscape)>> {
    let path = Path::new(spec);
    if spec.ends_with(".toml") || path.is_file() {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        let land = LandscapeSpec::from_toml(&text)?.build()?;
        let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or("custom").to_string();
        return Ok(vec![(name, land)]);
    }
    let names: Vec<&str> = spec.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(CliError::Usage("at least one landscape is required".into()));
    }
    names
        .into_iter()
        .map(|name| Ok((name.to_string(), LandscapeSpec::preset(name, seed)?.build()?)))
        .collect()
}

/// Fitness–distance correlation of each measure on each landscape; one row per
/// measure, one column per landscape.
pub fn cmd_fdc(opts: &FdcOptions) -> Result<ExperimentReport> {
    let start = Instant::now();
    if opts.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let landscapes = resolve_landscapes(&opts.landscapes, opts.seed)?;
    let mut columns = Vec::new();
    let mut measure_names = Vec::new();
    for (name, land) in &landscapes {
        let measures = parse_measures(opts.measures.as_deref(), land.n())?;
        measure_names = measures.iter().map(|m| m.name().to_string()).collect();
        let sample_seed = RandomSource::new(opts.seed).child(name_hash(name)).seed();
        columns.push(fdc_table::<f64>(land, &measures, opts.samples, sample_seed)?);
    }
    let mut report = ExperimentReport::new("fdc");
    report.param("landscapes", &opts.landscapes);
    report.param("samples", opts.samples);
    report.param("seed", opts.seed);
    let header = std::iter::once("measure".to_string()).chain(landscapes.iter().map(|(n, _)| n.clone())).collect();
    let mut table = Table::new("fdc", header);
    for (i, m) in measure_names.iter().enumerate() {
        let mut row = vec![m.clone()];
        row.extend(columns.iter().map(|col| fixed4(col[i])));
        table.rows.push(row);
    }
    report.tables = vec![table];
    report.wall_clock_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Benchmark problem family for the EA comparison.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    Tsp,
    Atsp,
    Haystack(String),
}

impl Problem {
    pub fn parse(s: &str) -> Result<Problem> {
        match s {
            "tsp" => Ok(Problem::Tsp),
            "atsp" => Ok(Problem::Atsp),
            _ => match s.strip_prefix("haystack-") {
                Some(m) if permscape::MEASURE_NAMES.contains(&m) => Ok(Problem::Haystack(m.to_string())),
                Some(m) => Err(permscape::Error::UnknownMeasure(m.to_string()).into()),
                None => Err(CliError::Usage(format!("unknown problem `{s}`; expected tsp, atsp or haystack-<measure>"))),
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            Problem::Tsp => "tsp".into(),
            Problem::Atsp => "atsp".into(),
            Problem::Haystack(m) => format!("haystack-{m}"),
        }
    }

    /// Random instance of length `n`: a uniform random distance matrix, or a
    /// uniform random haystack target.
    pub fn instance(&self, n: usize, rng: &mut RandomSource) -> permscape::Result<Landscape> {
        match self {
            Problem::Tsp => random_matrix_tsp(n, true, rng),
            Problem::Atsp => random_matrix_tsp(n, false, rng),
            Problem::Haystack(m) => {
                let target = Permutation::random(n, rng)?;
                haystack(n, &target, Measure::from_name(m, n)?)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct EaOptions {
    pub problem: String,
    pub n: usize,
    /// Comma-separated operator names with optional `:parameter` suffixes.
    pub operators: String,
    pub runs: usize,
    pub instances: usize,
    pub generations: usize,
    pub population: usize,
    pub seed: u64,
}

impl EaOptions {
    pub fn new(problem: &str, operators: &str) -> Self {
        EaOptions {
            problem: problem.to_string(),
            n: 100,
            operators: operators.to_string(),
            runs: 10,
            instances: 10,
            generations: 1000,
            population: DEFAULT_POPULATION,
            seed: 1,
        }
    }
}

/// Mean best-so-far cost per checkpoint for each operator, averaged over
/// `instances` random problems and `runs` runs each.
pub fn cmd_ea(opts: &EaOptions) -> Result<ExperimentReport> {
    let start = Instant::now();
    let problem = Problem::parse(&opts.problem)?;
    let operators = MutationOperator::parse_list(&opts.operators)?;
    if operators.is_empty() {
        return Err(CliError::Usage("at least one operator is required".into()));
    }
    for (label, v) in [("--runs", opts.runs), ("--instances", opts.instances), ("--generations", opts.generations)] {
        if v == 0 {
            return Err(CliError::Usage(format!("{label} must be positive")));
        }
    }
    let mut settings = CompareSettings::new(opts.generations, opts.runs, opts.instances, opts.seed);
    settings.population_size = opts.population;
    let n = opts.n;
    let cmp = compare(&operators, |rng: &mut RandomSource| problem.instance(n, rng), &settings)?;

    let mut report = ExperimentReport::new("ea");
    report.param("problem", problem.name());
    report.param("n", n);
    report.param("operators", &opts.operators);
    report.param("runs", opts.runs);
    report.param("instances", opts.instances);
    report.param("generations", opts.generations);
    report.param("population", opts.population);
    report.param("seed", opts.seed);
    let header = std::iter::once("generation".to_string()).chain(operators.iter().map(|o| o.to_string())).collect();
    let mut table = Table::new(format!("ea-{}", problem.name()), header);
    for (c, g) in cmp.checkpoints.iter().enumerate() {
        let mut row = vec![g.to_string()];
        row.extend(cmp.mean_best.iter().map(|curve| curve[c].to_string()));
        table.rows.push(row);
    }
    report.tables = vec![table];
    report.wall_clock_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Runs `f` on a dedicated pool of `threads` workers, or the global pool when `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(CliError::Usage("--threads must be positive".into())),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {t} threads: {e}")))?;
            Ok(pool.install(f))
        }
    }
}
