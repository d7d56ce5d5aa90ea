use std::path::PathBuf;

use clap::{ArgGroup, Args, Subcommand, ValueEnum};
use etakit::datastore::{
    builtin_registry, load_metrics, load_series, Registry, ETA_TABLE_KEYS, LONGEVITY_KEYS,
};
use etakit::graphmetrics::{
    generate_small_world, measure, shortest_path_matrix, Graph, GraphMetrics, PathMode,
    SmallWorldSpec,
};
use etakit::growthkit::{
    accumulate_exponential, accumulate_linear, error_table, estimate_rate, rate_error,
    rate_from_ratio, Compounding, GrowthPair, RatePerDecade, RateUnit, YearCE,
};
use etakit::netentropy::{
    average_eta, cluster_generations, compare_eta_products, entropy, eta_product,
    isotropic_entropy, isotropy_gap, network_rate, receive_capacity_derivative, NetworkMetrics,
};
use etakit::repro::{reproduce, Scope};
use etakit::theorems::{
    adjusted_swadesh, date_origin, distribution_count, divergence_from_branches, economic_growth,
    innate_rate, longevity_rates, productivity_proportionality, EconInputs, InnateRate,
    LongevityRecord, COLLECTIVE_RATE_PER_DECADE,
};
use etakit::{Error, Result};

use crate::output::{Cell, Output, Table};

/// Library operations reached by each command.
#[cfg_attr(not(test), allow(dead_code))]
pub const DISPATCH: &[(&str, &[&str])] = &[
    (
        "rate",
        &[
            "estimate_rate",
            "rate_from_ratio",
            "load_series",
            "accumulate_linear",
            "accumulate_exponential",
        ],
    ),
    ("error-table", &["error_table", "rate_error"]),
    ("eta", &["entropy", "isotropic_entropy", "network_rate"]),
    (
        "eta-table",
        &[
            "builtin_registry",
            "load_metrics",
            "entropy",
            "cluster_generations",
            "isotropy_gap",
            "receive_capacity_derivative",
            "compare_eta_products",
        ],
    ),
    ("innate", &["average_eta", "eta_product", "innate_rate"]),
    ("swadesh", &["adjusted_swadesh", "divergence_from_branches"]),
    ("date-origin", &["date_origin"]),
    ("econ", &["economic_growth", "productivity_proportionality"]),
    ("longevity", &["longevity_rates"]),
    (
        "graph-metrics",
        &[
            "measure",
            "path_length",
            "clustering_coefficient",
            "shortest_path_matrix",
        ],
    ),
    ("small-world", &["generate_small_world", "measure"]),
    ("ways", &["distribution_count"]),
    ("reproduce", &["reproduce", "builtin_registry"]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitArg {
    Year,
    Decade,
    Millennium,
}

impl From<UnitArg> for RateUnit {
    fn from(u: UnitArg) -> RateUnit {
        match u {
            UnitArg::Year => RateUnit::Year,
            UnitArg::Decade => RateUnit::Decade,
            UnitArg::Millennium => RateUnit::Millennium,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Growth rate from two dated counts, a ratio, or a series file
    Rate(RateArgs),
    /// Rate error caused by a mis-measured later count
    ErrorTable(ErrorTableArgs),
    /// Entropy of one network
    Eta(EtaArgs),
    /// Entropy of the built-in networks or of a metrics file
    EtaTable(EtaTableArgs),
    /// Innate rate from averaged entropies
    Innate(InnateArgs),
    /// Adjusted divergence rate of core vocabulary
    Swadesh(SwadeshArgs),
    /// Years needed to grow from an origin size at the innate rate
    DateOrigin(DateOriginArgs),
    /// Productivity growth of an economy
    Econ(EconArgs),
    /// Growth rates of life expectancy
    Longevity(LongevityArgs),
    /// Path length and clustering of an edge-list graph
    GraphMetrics(GraphMetricsArgs),
    /// Generate and measure a seeded small-world graph
    SmallWorld(SmallWorldArgs),
    /// Number of ways to distribute r units among n receivers
    Ways(WaysArgs),
    /// Recompute the published tables and compare
    Reproduce(ReproduceArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Rate(_) => "rate",
            Command::ErrorTable(_) => "error-table",
            Command::Eta(_) => "eta",
            Command::EtaTable(_) => "eta-table",
            Command::Innate(_) => "innate",
            Command::Swadesh(_) => "swadesh",
            Command::DateOrigin(_) => "date-origin",
            Command::Econ(_) => "econ",
            Command::Longevity(_) => "longevity",
            Command::GraphMetrics(_) => "graph-metrics",
            Command::SmallWorld(_) => "small-world",
            Command::Ways(_) => "ways",
            Command::Reproduce(_) => "reproduce",
        }
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["n1", "ratio", "input", "n0"])))]
pub struct RateArgs {
    /// Earlier count
    #[arg(long, requires_all = ["t1", "n2", "t2"])]
    pub n1: Option<f64>,
    /// Year of the earlier count (negative for BCE)
    #[arg(long, allow_negative_numbers = true)]
    pub t1: Option<f64>,
    /// Later count
    #[arg(long)]
    pub n2: Option<f64>,
    /// Year of the later count
    #[arg(long, allow_negative_numbers = true)]
    pub t2: Option<f64>,
    /// Growth ratio n2/n1
    #[arg(long, requires = "span")]
    pub ratio: Option<f64>,
    /// Span in years for --ratio
    #[arg(long)]
    pub span: Option<f64>,
    /// CSV series of year,count rows
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Starting count for a projection
    #[arg(long, requires_all = ["rate", "decades"])]
    pub n0: Option<f64>,
    /// Projection rate, fraction per decade
    #[arg(long, allow_negative_numbers = true)]
    pub rate: Option<f64>,
    /// Projection length in decades
    #[arg(long)]
    pub decades: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ErrorTableArgs {
    /// Fractional error in the later count
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_values_t = [0.10, -0.10])]
    pub ratio_error: Vec<f64>,
    /// Spans in years
    #[arg(long, value_delimiter = ',', default_values_t = [100.0, 332.0, 839.0, 3742.0])]
    pub spans: Vec<f64>,
    /// True rate, fraction per decade
    #[arg(long, allow_negative_numbers = true, default_value_t = COLLECTIVE_RATE_PER_DECADE)]
    pub actual: f64,
}

#[derive(Debug, Args)]
pub struct EtaArgs {
    /// Node count
    #[arg(long)]
    pub n: f64,
    /// Path length
    #[arg(long, required_unless_present = "isotropic")]
    pub s: Option<f64>,
    /// Clustering coefficient
    #[arg(long, required_unless_present = "isotropic")]
    pub c: Option<f64>,
    /// Treat the network as isotropic (S = e, C = 1)
    #[arg(long, conflicts_with_all = ["s", "c"])]
    pub isotropic: bool,
    /// Also report this bi-nodal rate multiplied by the entropy
    #[arg(long)]
    pub bi_nodal_rate: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EtaTableArgs {
    /// CSV of label,n,S,C rows instead of the built-in networks
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Labels whose entropy product forms the numerator
    #[arg(long, value_delimiter = ',', requires = "over")]
    pub ratio_of: Vec<String>,
    /// Labels whose entropy product forms the denominator
    #[arg(long, value_delimiter = ',', requires = "ratio_of")]
    pub over: Vec<String>,
}

#[derive(Debug, Args)]
pub struct InnateArgs {
    /// Collective rate, fraction per decade
    #[arg(long, default_value_t = COLLECTIVE_RATE_PER_DECADE)]
    pub collective: f64,
    /// Averaged population entropy
    #[arg(long, requires = "eta_ps")]
    pub eta_pop: Option<f64>,
    /// Averaged solved-problem entropy
    #[arg(long, requires = "eta_pop")]
    pub eta_ps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SwadeshArgs {
    /// Raw divergence, fraction per millennium
    #[arg(long, default_value_t = 0.14)]
    pub raw: f64,
    /// Age the raw rate was calibrated against, years
    #[arg(long, default_value_t = 7037.0)]
    pub original_age: f64,
    /// Revised age, years
    #[arg(long, default_value_t = 8700.0)]
    pub revised_age: f64,
    /// Only combine this per-branch rate into a divergence rate
    #[arg(long, conflicts_with_all = ["raw", "original_age", "revised_age"])]
    pub branch_rate: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DateOriginArgs {
    /// Current size
    #[arg(long, requires_all = ["n_origin", "t2", "m"])]
    pub n_now: Option<f64>,
    /// Size at the origin
    #[arg(long, requires = "n_now")]
    pub n_origin: Option<f64>,
    /// Year of the current size
    #[arg(long, allow_negative_numbers = true, requires = "n_now")]
    pub t2: Option<f64>,
    /// Innate rate, fraction per millennium
    #[arg(long, requires = "n_now")]
    pub m: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EconArgs {
    /// Individual rate, fraction per decade
    #[arg(long, default_value_t = COLLECTIVE_RATE_PER_DECADE)]
    pub rate: f64,
    /// Averaged population entropy
    #[arg(long, default_value_t = 11.485141)]
    pub eta_pop: f64,
    /// Labour participation in (0, 1]
    #[arg(long, default_value_t = 0.66)]
    pub lp: f64,
    /// Solved-problem entropy, adds the productivity index
    #[arg(long)]
    pub eta_ps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct LongevityArgs {
    /// Comparison rate, fraction per decade
    #[arg(long, default_value_t = COLLECTIVE_RATE_PER_DECADE)]
    pub baseline: f64,
    #[arg(long, requires_all = ["le1", "t2", "le2"])]
    pub t1: Option<f64>,
    /// Life expectancy at t1
    #[arg(long, requires = "t1")]
    pub le1: Option<f64>,
    #[arg(long, requires = "t1")]
    pub t2: Option<f64>,
    /// Life expectancy at t2
    #[arg(long, requires = "t1")]
    pub le2: Option<f64>,
    #[arg(long, default_value = "custom", requires = "t1")]
    pub label: String,
}

#[derive(Debug, Args)]
pub struct GraphMetricsArgs {
    /// Edge list: one `u v` pair per line, optional `nodes N` header
    #[arg(long)]
    pub input: PathBuf,
    /// Measure only the largest connected component
    #[arg(long)]
    pub largest_component: bool,
    /// Print the distance matrix instead
    #[arg(long)]
    pub distances: bool,
}

#[derive(Debug, Args)]
pub struct SmallWorldArgs {
    #[arg(long)]
    pub n: usize,
    /// Lattice neighbours per node (even)
    #[arg(long)]
    pub k: usize,
    /// Rewiring probability
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the generated edge list here
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Measure only the largest connected component
    #[arg(long)]
    pub largest_component: bool,
}

#[derive(Debug, Args)]
pub struct WaysArgs {
    /// Receivers
    #[arg(long)]
    pub n: u64,
    /// Units
    #[arg(long)]
    pub r: u64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("which").args(["all", "scope"])))]
pub struct ReproduceArgs {
    /// Every scope (the default)
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub scope: Option<Scope>,
}

pub struct Run {
    pub output: Output,
    pub mismatch: bool,
}

impl From<Output> for Run {
    fn from(output: Output) -> Run {
        Run {
            output,
            mismatch: false,
        }
    }
}

fn year(v: f64) -> Result<YearCE> {
    YearCE::new(v)
}

fn unit_suffix(unit: RateUnit) -> String {
    format!("% per {}", unit.name())
}

fn unit_column(label: &str, unit: RateUnit) -> String {
    format!("{label} (%/{})", unit.name())
}

fn pct(rate: RatePerDecade, unit: RateUnit) -> Cell {
    Cell::Num(rate.in_unit(unit) * 100.0)
}

pub fn execute(cmd: &Command, unit: Option<RateUnit>) -> Result<Run> {
    let decade = unit.unwrap_or(RateUnit::Decade);
    let millennium = unit.unwrap_or(RateUnit::Millennium);
    Ok(match cmd {
        Command::Rate(a) => rate(a, decade)?.into(),
        Command::ErrorTable(a) => errors(a, decade)?.into(),
        Command::Eta(a) => eta(a)?.into(),
        Command::EtaTable(a) => eta_table(a)?.into(),
        Command::Innate(a) => innate(a, millennium)?.into(),
        Command::Swadesh(a) => swadesh(a, millennium)?.into(),
        Command::DateOrigin(a) => dating(a, millennium)?.into(),
        Command::Econ(a) => econ(a, unit.unwrap_or(RateUnit::Year))?.into(),
        Command::Longevity(a) => longevity(a, decade)?.into(),
        Command::GraphMetrics(a) => graph_metrics(a)?.into(),
        Command::SmallWorld(a) => small_world(a)?.into(),
        Command::Ways(a) => ways(a)?.into(),
        Command::Reproduce(a) => repro(a)?,
    })
}

fn rate(a: &RateArgs, unit: RateUnit) -> Result<Output> {
    if let (Some(n1), Some(t1), Some(n2), Some(t2)) = (a.n1, a.t1, a.n2, a.t2) {
        let r = estimate_rate(&GrowthPair::new(year(t1)?, n1, year(t2)?, n2)?);
        return Ok(Output::scalar("rate", pct(r, unit), unit_suffix(unit)));
    }
    if let (Some(ratio), Some(span)) = (a.ratio, a.span) {
        let r = rate_from_ratio(ratio, span)?;
        return Ok(Output::scalar("rate", pct(r, unit), unit_suffix(unit)));
    }
    if let Some(path) = &a.input {
        let mut t = Table::new(
            ["t1", "n1", "t2", "n2"]
                .map(String::from)
                .into_iter()
                .chain([unit_column("rate", unit)]),
        );
        for pair in load_series(path)? {
            let r = estimate_rate(&pair);
            t.push(vec![
                pair.t1().value().into(),
                pair.n1().into(),
                pair.t2().value().into(),
                pair.n2().into(),
                pct(r, unit),
            ]);
        }
        return Ok(Output::Table(t));
    }
    let (n0, r, dt) = (
        a.n0.unwrap_or_default(),
        a.rate.unwrap_or_default(),
        a.decades.unwrap_or_default(),
    );
    let r = RatePerDecade::new(r)?;
    let mut t = Table::new(["model", "count"]);
    t.push(vec![
        Cell::text("linear"),
        accumulate_linear(n0, r, dt)?.into(),
    ]);
    for (name, c) in [
        ("discrete", Compounding::Discrete),
        ("continuous", Compounding::Continuous),
    ] {
        t.push(vec![
            Cell::text(name),
            accumulate_exponential(n0, r, dt, c)?.into(),
        ]);
    }
    Ok(Output::Table(t))
}

fn errors(a: &ErrorTableArgs, unit: RateUnit) -> Result<Output> {
    let actual = RatePerDecade::new(a.actual)?;
    let mut t = Table::new([
        "count error (%)".to_string(),
        "span (years)".to_string(),
        "relative error (%)".to_string(),
        unit_column("rate error", unit),
    ]);
    for &ratio in &a.ratio_error {
        for row in error_table(ratio, &a.spans, actual)? {
            let err = rate_error(ratio, row.span_years, actual)?;
            t.push(vec![
                (ratio * 100.0).into(),
                row.span_years.into(),
                (row.relative_error * 100.0).into(),
                pct(err.absolute, unit),
            ]);
        }
    }
    Ok(Output::Table(t))
}

fn eta(a: &EtaArgs) -> Result<Output> {
    let (value, metrics) = if a.isotropic {
        (
            isotropic_entropy(a.n)?.value(),
            NetworkMetrics::new("", a.n, std::f64::consts::E, 1.0)?,
        )
    } else {
        let m = NetworkMetrics::new("", a.n, a.s.unwrap_or_default(), a.c.unwrap_or_default())?;
        (entropy(&m).value(), m)
    };
    Ok(match a.bi_nodal_rate {
        None => Output::scalar("eta", value, ""),
        Some(rate) => Output::Record(vec![
            ("eta".into(), value.into()),
            ("network rate".into(), network_rate(rate, &metrics).into()),
        ]),
    })
}

fn network_set(a: &EtaTableArgs) -> Result<Vec<NetworkMetrics>> {
    match &a.input {
        Some(path) => load_metrics(path),
        None => {
            let reg = builtin_registry();
            ETA_TABLE_KEYS
                .iter()
                .map(|k| reg.metrics(k).cloned())
                .collect()
        }
    }
}

fn pick(
    pool: &[NetworkMetrics],
    labels: &[String],
    reg: Option<&Registry>,
) -> Result<Vec<NetworkMetrics>> {
    labels
        .iter()
        .map(|label| {
            if let Some(m) = pool.iter().find(|m| m.label() == label) {
                return Ok(m.clone());
            }
            match reg {
                Some(reg) => reg.metrics(&format!("network.{label}")).cloned(),
                None => Err(Error::MissingKey(label.clone())),
            }
        })
        .collect()
}

fn eta_table(a: &EtaTableArgs) -> Result<Output> {
    let pool = network_set(a)?;
    if !a.ratio_of.is_empty() {
        let reg = a.input.is_none().then(builtin_registry);
        let num = pick(&pool, &a.ratio_of, reg.as_ref())?;
        let den = pick(&pool, &a.over, reg.as_ref())?;
        return Ok(Output::scalar(
            "ratio",
            compare_eta_products(&num, &den)?,
            "",
        ));
    }
    let mut t = Table::new([
        "network",
        "n",
        "S",
        "C",
        "eta",
        "generations",
        "|S - e|",
        "d generations/dn",
    ]);
    for m in &pool {
        let generations = cluster_generations(m.n(), m.path_length())?;
        t.push(vec![
            Cell::text(m.label()),
            m.n().into(),
            m.path_length().into(),
            m.clustering().into(),
            entropy(m).value().into(),
            generations.into(),
            isotropy_gap(m.path_length())?.into(),
            receive_capacity_derivative(m.path_length(), generations)?.into(),
        ]);
    }
    Ok(Output::Table(t))
}

fn innate(a: &InnateArgs, unit: RateUnit) -> Result<Output> {
    let collective = RatePerDecade::new(a.collective)?;
    if let (Some(pop), Some(ps)) = (a.eta_pop, a.eta_ps) {
        let m = innate_rate(collective, pop, ps)?;
        return Ok(Output::scalar(
            "innate rate",
            pct(m.as_rate(), unit),
            unit_suffix(unit),
        ));
    }
    let reg = builtin_registry();
    let mut t = Table::new([
        "period".to_string(),
        "population eta".to_string(),
        "lexicon eta".to_string(),
        "product".to_string(),
        unit_column("innate rate", unit),
    ]);
    for start in ["1150", "1657"] {
        let t1 = reg.observation(&format!("lexicon.{start}"))?.year;
        let t2 = reg.observation("lexicon.1989")?.year;
        let pop = average_eta(
            t1,
            reg.metrics(&format!("network.population_{start}"))?,
            t2,
            reg.metrics("network.population_1989")?,
        );
        let lex = average_eta(
            t1,
            reg.metrics(&format!("network.lexicon_{start}"))?,
            t2,
            reg.metrics("network.lexicon_1989")?,
        );
        let product = eta_product(&[pop.eta_avg, lex.eta_avg])?;
        let m = innate_rate(collective, pop.eta_avg, lex.eta_avg)?;
        t.push(vec![
            Cell::text(format!("{t1}-{t2}")),
            pop.eta_avg.into(),
            lex.eta_avg.into(),
            product.into(),
            pct(m.as_rate(), unit),
        ]);
    }
    Ok(Output::Table(t))
}

fn per_millennium(v: f64, unit: RateUnit) -> Result<Cell> {
    Ok(pct(RatePerDecade::from_per_millennium(v)?, unit))
}

fn swadesh(a: &SwadeshArgs, unit: RateUnit) -> Result<Output> {
    if let Some(branch) = a.branch_rate {
        let d = divergence_from_branches(branch);
        return Ok(Output::scalar(
            "divergence",
            per_millennium(d, unit)?,
            unit_suffix(unit),
        ));
    }
    let d = adjusted_swadesh(a.raw, a.original_age, a.revised_age)?;
    let mut t = Table::new(["quantity".to_string(), unit_column("rate", unit)]);
    for (name, v) in [
        ("raw divergence", d.raw_rate),
        ("adjusted divergence", d.adjusted_rate),
        ("per branch", d.per_branch),
        (
            "branches recombined",
            divergence_from_branches(d.per_branch),
        ),
    ] {
        t.push(vec![Cell::text(name), per_millennium(v, unit)?]);
    }
    Ok(Output::Table(t))
}

fn year_label(y: YearCE) -> Cell {
    let v = y.value();
    Cell::Text(if v < 0.0 {
        format!("{:.0} BCE", -v)
    } else {
        format!("{v:.0}")
    })
}

fn dating(a: &DateOriginArgs, unit: RateUnit) -> Result<Output> {
    let cases: Vec<(f64, f64, f64, f64)> = match (a.n_now, a.n_origin, a.t2, a.m) {
        (Some(now), Some(origin), Some(t2), Some(m)) => vec![(now, origin, t2, m)],
        _ => {
            let reg = builtin_registry();
            let now = reg.observation("lexicon.1989")?;
            let mut v = Vec::new();
            for rate_key in ["dating.rate_swadesh", "dating.rate_english_1150"] {
                for origin_key in ["dating.origin_words_one", "dating.origin_words_hundred"] {
                    v.push((
                        now.count,
                        reg.scalar(origin_key)?,
                        now.year.value(),
                        reg.scalar(rate_key)?,
                    ));
                }
            }
            v
        }
    };
    let mut t = Table::new(vec![
        unit_column("rate", unit),
        "origin size".into(),
        "current size".into(),
        "years before".into(),
        "origin year".into(),
    ]);
    for (now, origin, t2, m) in cases {
        let m = InnateRate::per_millennium(m)?;
        let d = date_origin(now, origin, year(t2)?, m)?;
        t.push(vec![
            pct(m.as_rate(), unit),
            origin.into(),
            now.into(),
            d.years_before_t2.into(),
            year_label(d.origin),
        ]);
    }
    Ok(Output::Table(t))
}

fn econ(a: &EconArgs, unit: RateUnit) -> Result<Output> {
    let g = economic_growth(&EconInputs {
        individual_rate: RatePerDecade::new(a.rate)?,
        eta_pop_avg: a.eta_pop,
        labor_participation: a.lp,
    })?;
    Ok(match a.eta_ps {
        None => Output::scalar("growth", pct(g.per_decade, unit), unit_suffix(unit)),
        Some(ps) => Output::Record(vec![
            (unit_column("growth", unit), pct(g.per_decade, unit)),
            (
                "productivity index".into(),
                productivity_proportionality(a.eta_pop, ps).into(),
            ),
        ]),
    })
}

fn longevity(a: &LongevityArgs, unit: RateUnit) -> Result<Output> {
    let records = match (a.t1, a.le1, a.t2, a.le2) {
        (Some(t1), Some(le1), Some(t2), Some(le2)) => vec![LongevityRecord {
            label: a.label.clone(),
            t1: year(t1)?,
            le1,
            t2: year(t2)?,
            le2,
        }],
        _ => {
            let reg = builtin_registry();
            LONGEVITY_KEYS
                .iter()
                .map(|k| reg.longevity(k).cloned())
                .collect::<Result<_>>()?
        }
    };
    let rates = longevity_rates(&records, RatePerDecade::new(a.baseline)?)?;
    let mut t = Table::new(vec![
        "population".into(),
        "t1".into(),
        "le1".into(),
        "t2".into(),
        "le2".into(),
        unit_column("rate", unit),
        "excess (%)".into(),
    ]);
    for (rec, r) in records.iter().zip(rates) {
        t.push(vec![
            Cell::text(&rec.label),
            rec.t1.value().into(),
            rec.le1.into(),
            rec.t2.value().into(),
            rec.le2.into(),
            pct(r.rate, unit),
            (r.excess_vs_baseline * 100.0).into(),
        ]);
    }
    Ok(Output::Table(t))
}

fn metrics_record(g: &Graph, m: &GraphMetrics) -> Vec<(String, Cell)> {
    vec![
        ("nodes".into(), Cell::int(g.node_count())),
        ("edges".into(), Cell::int(g.edge_count())),
        ("measured nodes".into(), Cell::int(m.n)),
        ("path length".into(), m.path_length.into()),
        ("clustering".into(), m.clustering.into()),
    ]
}

fn mode(largest: bool) -> PathMode {
    if largest {
        PathMode::LargestComponent
    } else {
        PathMode::Strict
    }
}

fn graph_metrics(a: &GraphMetricsArgs) -> Result<Output> {
    let g = Graph::read_edge_list(&a.input)?;
    if a.distances {
        let d = shortest_path_matrix(&g);
        let n = d.node_count();
        let mut t =
            Table::new(std::iter::once("node".to_string()).chain((0..n).map(|j| j.to_string())));
        for i in 0..n {
            let row = std::iter::once(Cell::int(i))
                .chain(d.row(i).map(|v| v.map_or(Cell::Missing, Cell::int)))
                .collect();
            t.push(row);
        }
        return Ok(Output::Table(t));
    }
    let m = measure(&g, mode(a.largest_component))?;
    Ok(Output::Record(metrics_record(&g, &m)))
}

fn small_world(a: &SmallWorldArgs) -> Result<Output> {
    let spec = SmallWorldSpec {
        n: a.n,
        k: a.k,
        p: a.p,
        seed: a.seed,
    };
    let g = generate_small_world(&spec)?;
    if let Some(path) = &a.output {
        std::fs::write(path, g.to_edge_list())?;
    }
    let m = measure(&g, mode(a.largest_component))?;
    let mut fields = vec![
        ("k".to_string(), Cell::int(a.k)),
        ("p".to_string(), a.p.into()),
        ("seed".to_string(), Cell::int(a.seed)),
    ];
    fields.extend(metrics_record(&g, &m));
    Ok(Output::Record(fields))
}

fn ways(a: &WaysArgs) -> Result<Output> {
    let c = distribution_count(a.n, a.r)?;
    Ok(Output::Record(vec![
        ("n".into(), Cell::int(a.n)),
        ("r".into(), Cell::int(a.r)),
        ("ways".into(), Cell::int(&c.exact)),
        ("ln ways".into(), c.exact_log.into()),
        ("stirling ln ways".into(), c.stirling_log.into()),
        ("relative log error".into(), c.relative_log_error.into()),
    ]))
}

fn repro(a: &ReproduceArgs) -> Result<Run> {
    let report = reproduce(a.scope.unwrap_or(Scope::All))?;
    let mut t = Table::new([
        "check",
        "scope",
        "unit",
        "computed",
        "expected",
        "corrected",
        "tolerance",
        "status",
    ]);
    for c in &report.checks {
        t.push(vec![
            Cell::text(&c.id),
            Cell::text(c.scope.name()),
            Cell::text(c.unit),
            c.computed.into(),
            c.expected.into(),
            c.corrected.into(),
            c.tolerance.into(),
            Cell::text(c.status.label()),
        ]);
    }
    Ok(Run {
        output: Output::Table(t),
        mismatch: report.has_failures(),
    })
}
