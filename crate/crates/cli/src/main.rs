mod plot;

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use photocomp::failover::{Dispatcher, EffectRouter, ImageStore};
use photocomp::harness::exp_a::ExpAConfig;
use photocomp::harness::pool::{exp_a_library, sim_pool, EXP_SIZES};
use photocomp::harness::report::{write_exp_a, write_exp_b, write_exp_c};
use photocomp::harness::{exp_a_run, exp_b_run, exp_c_run, ExpARow, ExpBConfig, ExpBRow, ExpCConfig, ExpCRow, StopRules, Trial};
use photocomp::ppm::{load_ppm, save_ppm};
use photocomp::{BackendKind, CostModel, EffectSpec, Renderer, SceneDocument, ScreenSpec, SourceLibrary};
use photocomp_service::HttpTransport;
use plot::Series;
use serde_json::{Map, Value};

#[derive(Parser)]
#[command(name = "photocomp", version, about = "Photo composition engine, processing service and load experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply image effects to PPM files.
    #[command(subcommand)]
    Effects(EffectsCommand),
    /// Render a scene document to a PPM frame.
    Render(RenderArgs),
    /// Run the processing service.
    Serve(ServeArgs),
    /// Application time of single operations.
    ExpA(ExpArgs),
    /// Lag while dragging a photo along a recorded trace.
    ExpB(ExpBArgs),
    /// Photo-wall load simulation with rotation probes.
    ExpC(ExpCArgs),
}

#[derive(Subcommand)]
enum EffectsCommand {
    Apply(ApplyArgs),
}

#[derive(Args)]
struct ApplyArgs {
    /// Effect kind, e.g. `grayscale`, `hue`, `border`.
    #[arg(long)]
    op: String,
    /// Effect parameter as `name=value`; values are read as JSON when possible.
    #[arg(long = "param", value_name = "K=V")]
    params: Vec<String>,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: PathBuf,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    scene: PathBuf,
    #[arg(long, default_value = "raster", value_parser = parse_backend)]
    backend: BackendKind,
    #[arg(long, default_value = "1024x768")]
    screen: ScreenSpec,
    #[arg(long)]
    out: PathBuf,
    /// Write the cost report as CSV.
    #[arg(long)]
    cost: Option<PathBuf>,
    /// Processing service URL for unsupported effects; in-process when absent.
    #[arg(long)]
    service: Option<String>,
    #[arg(long, default_value = "1000", value_parser = parse_throughput)]
    throughput: f64,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long)]
    port: u16,
    #[arg(long)]
    store: Option<PathBuf>,
    #[arg(long, default_value = "127.0.0.1")]
    host: String,
}

#[derive(Args, Clone)]
struct ExpArgs {
    /// Backend to run; repeat for several. All three when absent.
    #[arg(long, value_parser = parse_backend)]
    backend: Vec<BackendKind>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Pixels per virtual millisecond, or `inf`.
    #[arg(long, default_value = "1000", value_parser = parse_throughput)]
    throughput: f64,
    /// Report times through a timer of this resolution (ms).
    #[arg(long)]
    quantize_clock: Option<f64>,
    /// CSV output path; stdout when absent.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// SVG chart output path.
    #[arg(long)]
    plot: Option<PathBuf>,
    /// Produce pixels too, not only costs.
    #[arg(long)]
    materialize: bool,
}

impl ExpArgs {
    fn backends(&self) -> Vec<BackendKind> {
        if self.backend.is_empty() {
            BackendKind::ALL.to_vec()
        } else {
            self.backend.clone()
        }
    }

    fn cost(&self) -> CostModel {
        CostModel::with_throughput(self.throughput)
    }

    fn quantize(&self) -> Result<Option<f64>> {
        match self.quantize_clock {
            Some(r) if !(r > 0.0 && r.is_finite()) => bail!("--quantize-clock must be positive"),
            q => Ok(q),
        }
    }
}

#[derive(Args)]
struct ExpBArgs {
    #[command(flatten)]
    common: ExpArgs,
    /// Effect pre-applied to the dragged photo (`none` or a parameterless kind); repeatable.
    #[arg(long = "effect", default_values = ["none", "invert"])]
    effects: Vec<String>,
}

#[derive(Args)]
struct ExpCArgs {
    #[command(flatten)]
    common: ExpArgs,
    #[arg(long, default_value_t = 100)]
    max_photos: u32,
    /// Disable the load and responsiveness timeouts.
    #[arg(long)]
    no_timeouts: bool,
    #[arg(long, default_value = "1920x1200")]
    screen: ScreenSpec,
}

fn parse_backend(s: &str) -> Result<BackendKind, String> {
    s.parse().map_err(|_| format!("unknown backend `{s}` (raster, scenegraph, legacy)"))
}

fn parse_throughput(s: &str) -> Result<f64, String> {
    let v = match s {
        "inf" | "infinity" => f64::INFINITY,
        _ => s.parse().map_err(|_| format!("bad throughput `{s}`"))?,
    };
    if v > 0.0 {
        Ok(v)
    } else {
        Err("throughput must be positive".into())
    }
}

fn effect_from_args(op: &str, params: &[String]) -> Result<EffectSpec> {
    let mut obj = Map::new();
    obj.insert("kind".into(), Value::String(op.to_owned()));
    for p in params {
        let (k, v) = p.split_once('=').with_context(|| format!("parameter `{p}` is not name=value"))?;
        let value = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_owned()));
        obj.insert(k.to_owned(), value);
    }
    let spec: EffectSpec = serde_json::from_value(Value::Object(obj)).with_context(|| format!("invalid effect `{op}`"))?;
    spec.validate()?;
    Ok(spec)
}

fn effects_apply(args: ApplyArgs) -> Result<()> {
    let spec = effect_from_args(&args.op, &args.params)?;
    let img = load_ppm(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let out = photocomp::apply_effect(&img, &spec)?;
    save_ppm(&out, &args.output).with_context(|| format!("writing {}", args.output.display()))?;
    Ok(())
}

fn load_sources(scene: &SceneDocument, base: &Path) -> Result<SourceLibrary> {
    let mut lib = SourceLibrary::new();
    for photo in scene.photos() {
        if lib.contains(&photo.source) {
            continue;
        }
        let path = base.join(&photo.source);
        let img = load_ppm(&path).with_context(|| format!("loading source {}", path.display()))?;
        lib.insert(photo.source.clone(), img);
    }
    Ok(lib)
}

fn render(args: RenderArgs) -> Result<()> {
    let text = fs::read_to_string(&args.scene).with_context(|| format!("reading {}", args.scene.display()))?;
    let scene = SceneDocument::from_json(&text)?;
    let base = args.scene.parent().unwrap_or(Path::new("."));
    let lib = Arc::new(load_sources(&scene, base)?);
    let router = match &args.service {
        Some(url) => EffectRouter::with_transport(Arc::new(HttpTransport::new(url.clone()))),
        None => EffectRouter::in_process(),
    };
    let renderer = Renderer::new(args.backend, args.screen, lib)
        .with_router(router)
        .with_cost_model(CostModel::with_throughput(args.throughput));
    let (frame, cost) = renderer.render_full(&scene)?;
    save_ppm(&frame.to_image(), &args.out).with_context(|| format!("writing {}", args.out.display()))?;
    if let Some(path) = &args.cost {
        let mut f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        writeln!(f, "backend,screen,photos,work_units,virtual_ms,frames,remote_calls")?;
        writeln!(
            f,
            "{},{},{},{},{:.3},{},{}",
            args.backend.name(),
            args.screen,
            scene.len(),
            cost.work_units,
            cost.virtual_ms,
            cost.frames,
            cost.remote_calls
        )?;
    }
    Ok(())
}

fn serve(args: ServeArgs) -> Result<()> {
    let dispatcher = match &args.store {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            Dispatcher::with_store(ImageStore::new(dir))
        }
        None => Dispatcher::new(),
    };
    let addr: SocketAddr = format!("{}:{}", args.host, args.port).parse().context("bad listen address")?;
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(addr).await?;
        eprintln!("listening on http://{}{}", listener.local_addr()?, photocomp_service::API_PATH);
        photocomp_service::serve(listener, Arc::new(dispatcher)).await
    })?;
    Ok(())
}

fn csv_out(path: Option<&Path>, write: impl FnOnce(Box<dyn Write>) -> Result<()>) -> Result<()> {
    match path {
        Some(p) => write(Box::new(io::BufWriter::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?))),
        None => write(Box::new(io::stdout().lock())),
    }
}

fn exp_a(args: ExpArgs) -> Result<()> {
    let config = ExpAConfig {
        backends: args.backends(),
        cost: args.cost(),
        quantize: args.quantize()?,
        materialize: args.materialize,
        ..ExpAConfig::default()
    };
    let rows = exp_a_run(&config, Arc::new(exp_a_library(args.seed)))?;
    csv_out(args.csv.as_deref(), |w| Ok(write_exp_a(w, &rows)?))?;
    if let Some(path) = &args.plot {
        plot::line_chart(path, "Application time by photo area (mean of two trials)", "photo area (px)", "virtual ms", &exp_a_series(&rows))?;
    }
    Ok(())
}

fn exp_a_series(rows: &[ExpARow]) -> Vec<Series> {
    let mut by: BTreeMap<String, Vec<(f64, f64)>> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.trial == Trial::Mean && r.image.starts_with('b')) {
        let (w, h) = r.image[1..].split_once('x').expect("image keys are bWxH");
        let area = w.parse::<f64>().unwrap_or(0.0) * h.parse::<f64>().unwrap_or(0.0);
        by.entry(format!("{} {}", r.backend.name(), r.op)).or_default().push((area, r.virtual_ms));
    }
    by.into_iter().map(|(label, points)| Series { label, points }).collect()
}

fn exp_b(args: ExpBArgs) -> Result<()> {
    let common = &args.common;
    let lib = Arc::new(exp_a_library(common.seed));
    let mut effects = Vec::new();
    for e in &args.effects {
        effects.push(match e.as_str() {
            "none" => None,
            kind => Some(effect_from_args(kind, &[])?),
        });
    }
    let mut rows = Vec::new();
    for backend in common.backends() {
        for effect in &effects {
            for size in EXP_SIZES {
                let config = ExpBConfig {
                    effect: effect.clone(),
                    cost: common.cost(),
                    quantize: common.quantize()?,
                    materialize: common.materialize,
                    ..ExpBConfig::new(backend, size)
                };
                rows.push(exp_b_run(&config, lib.clone())?);
            }
        }
    }
    csv_out(common.csv.as_deref(), |w| Ok(write_exp_b(w, &rows)?))?;
    if let Some(path) = &common.plot {
        plot::line_chart(path, "Drag lag behind a 2681 ms trace", "photo area (px)", "delta ms", &exp_b_series(&rows))?;
    }
    Ok(())
}

fn exp_b_series(rows: &[ExpBRow]) -> Vec<Series> {
    let mut by: BTreeMap<String, Vec<(f64, f64)>> = BTreeMap::new();
    for r in rows {
        let effect = r.effect.as_ref().map_or("none", |e| e.kind().name());
        by.entry(format!("{} {effect}", r.backend.name())).or_default().push((r.size.area() as f64, r.delta_ms));
    }
    by.into_iter().map(|(label, points)| Series { label, points }).collect()
}

fn exp_c(args: ExpCArgs) -> Result<()> {
    let common = &args.common;
    let per_size = 4;
    let lib = Arc::new(sim_pool(per_size, common.seed));
    let rules = if args.no_timeouts { StopRules::count_only(args.max_photos) } else { StopRules { max_photos: args.max_photos, ..StopRules::default() } };
    let mut rows: Vec<ExpCRow> = Vec::new();
    for backend in common.backends() {
        let config = ExpCConfig {
            cost: common.cost(),
            rules,
            quantize: common.quantize()?,
            screen: args.screen,
            pool_per_size: per_size,
            materialize: common.materialize,
            ..ExpCConfig::new(backend, common.seed)
        };
        let out = exp_c_run(&config, lib.clone())?;
        eprintln!("{}: stopped by {} at {} photos", backend.name(), out.stop_rule, out.count);
        rows.extend(out.rows);
    }
    csv_out(common.csv.as_deref(), |w| Ok(write_exp_c(w, &rows)?))?;
    if let Some(path) = &common.plot {
        let mut by: BTreeMap<&str, Vec<(f64, f64)>> = BTreeMap::new();
        for r in &rows {
            if let Some(ms) = r.probe_virtual_ms {
                by.entry(r.backend.name()).or_default().push((r.count as f64, ms));
            }
        }
        let series: Vec<Series> = by.into_iter().map(|(l, points)| Series { label: l.to_owned(), points }).collect();
        plot::line_chart(path, "Rotation probe time as photos accumulate", "photos on page", "virtual ms", &series)?;
    }
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Effects(EffectsCommand::Apply(args)) => effects_apply(args),
        Command::Render(args) => render(args),
        Command::Serve(args) => serve(args),
        Command::ExpA(args) => exp_a(args),
        Command::ExpB(args) => exp_b(args),
        Command::ExpC(args) => exp_c(args),
    }
}
