use std::collections::BTreeMap;
use std::fs;

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use chebcurves::chebyshev::check_indices;
use chebcurves::cremona::{GatePoint, ProjPoint};
use chebcurves::factory::{
    gate_table, load_cache, passage_code, recover_parameter, save_cache, CurveFactory, GateMultiplicities,
    ParamSource, PassageCode, StepReport,
};
use chebcurves::poly::{parse_scalar, Scalar};
use chebcurves::triangle::{
    family_description, format_complex, solve_sss, Classification, ComplexTriple, TriangleSolution,
};
use chebcurves::Error;

use crate::cli::{ChartArg, CheckArgs, Cli, CodeArgs, Command, EqArgs, FormatArg, PlotArgs, SssArgs, TableArgs, TriplesArgs};
use crate::plot::{self, PlotChart, PlotSpec, Sampling, Viewport};
use crate::{cache_path, CliError, Output};

type Res = Result<(), CliError>;

pub(crate) fn dispatch(cli: &Cli, out: &mut Output) -> Res {
    match &cli.command {
        Command::Eq(args) => with_factory(cli, out, |f, out| eq(cli.json, args, f, out)),
        Command::Check(args) => with_factory(cli, out, |f, out| check(cli.json, args, f, out)),
        Command::Triples(args) => triples(cli.json, args, out),
        Command::Plot(args) => plot_cmd(cli.json, args, out),
        Command::Sss(args) => sss(cli.json, args, out),
        Command::Code(args) => code(cli.json, args, out),
        Command::Table(args) => table(cli.json, args, out),
    }
}

/// Runs `body` with a factory seeded from the cache, then writes back any
/// new equations. Cache trouble is reported as a warning only.
fn with_factory(cli: &Cli, out: &mut Output, body: impl FnOnce(&CurveFactory, &mut Output) -> Res) -> Res {
    let path = cache_path(cli);
    let mut loaded = 0;
    let factory = match &path {
        None => CurveFactory::new(),
        Some(path) => match load_cache(path) {
            Ok(load) => {
                for line in &load.rejected {
                    out.warn(format!("ignoring cache line that fails verification: {line}"));
                }
                loaded = load.entries.len();
                CurveFactory::with_entries(load.entries)
            }
            Err(e) => {
                out.warn(format!("cache not read: {e}"));
                CurveFactory::new()
            }
        },
    };
    body(&factory, out)?;
    if let Some(path) = path {
        let entries = factory.entries();
        if entries.len() > loaded {
            if let Err(e) = save_cache(&path, &entries) {
                out.warn(format!("cache not written: {e}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn parse_pq(s: &str) -> Result<(u32, u32), CliError> {
    let bad = || CliError::Domain(format!("expected curve indices `p:q`, got `{s}`"));
    let (p, q) = s.split_once(':').ok_or_else(bad)?;
    let p = p.trim().parse().map_err(|_| bad())?;
    let q = q.trim().parse().map_err(|_| bad())?;
    check_indices(p, q)?;
    Ok((p, q))
}

fn multiplicity_map(m: &GateMultiplicities) -> BTreeMap<&'static str, u32> {
    m.iter().map(|(g, k)| (g.label(), k)).collect()
}

fn multiplicity_text(m: &GateMultiplicities) -> String {
    m.iter().map(|(g, k)| format!("{g}={k}")).collect::<Vec<_>>().join(" ")
}

// ---------------------------------------------------------------- eq

#[derive(Serialize)]
struct EqJson {
    p: u32,
    q: u32,
    equation: String,
    degree: u32,
    multiplicities: BTreeMap<&'static str, u32>,
    source_multiplicity: u32,
    code: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<Vec<StepJson>>,
}

#[derive(Serialize)]
struct StepJson {
    op: &'static str,
    from: String,
    to: String,
    predicted_degree: u32,
    measured_degree: u32,
    predicted: BTreeMap<&'static str, u32>,
    measured: BTreeMap<&'static str, u32>,
    agrees: bool,
}

#[derive(Serialize)]
struct EqRowJson {
    p: u32,
    q: u32,
    degree: u32,
    equation: String,
}

fn profile_map(p: &chebcurves::factory::Profile) -> BTreeMap<&'static str, u32> {
    p.iter().map(|(g, &k)| (g.label(), k)).collect()
}

fn step_line(r: &StepReport) -> String {
    let s = r.step;
    let points: Vec<String> = r
        .predicted
        .iter()
        .map(|(g, k)| format!("{g} {k}/{}", r.measured.get(g).map_or("?".into(), u32::to_string)))
        .collect();
    format!(
        "{} {}:{} -> {}:{}  degree {}/{}  {}  {}",
        s.op.symbol(),
        s.from.0,
        s.from.1,
        s.to.0,
        s.to.1,
        r.predicted_degree,
        r.measured_degree,
        points.join(" "),
        if r.agrees() { "ok" } else { "MISMATCH" }
    )
}

fn eq(json: bool, args: &EqArgs, factory: &CurveFactory, out: &mut Output) -> Res {
    if let Some(n) = args.all_upto {
        let mut rows = Vec::new();
        for s in 2..=n {
            for p in 1..s {
                let q = s - p;
                if check_indices(p, q).is_err() {
                    continue;
                }
                let f = factory.equation(p, q)?;
                rows.push(EqRowJson { p, q, degree: f.degree(), equation: f.to_string() });
            }
        }
        if json {
            return out.json(&rows);
        }
        for r in rows {
            out.line(format!("{}:{}\t{}\t{}", r.p, r.q, r.degree, r.equation));
        }
        return Ok(());
    }

    let (p, q) = parse_pq(args.pq.as_deref().unwrap_or_default())?;
    let rec = factory.build_curve(p, q)?;
    let steps = if args.steps { Some(factory.trace(p, q)?) } else { None };
    if json {
        out.json(&EqJson {
            p,
            q,
            equation: rec.equation.to_string(),
            degree: rec.degree,
            multiplicities: multiplicity_map(&rec.gate_multiplicities),
            source_multiplicity: rec.source_multiplicity,
            code: rec.code.labels(),
            steps: steps.as_ref().map(|st| {
                st.iter()
                    .map(|r| StepJson {
                        op: r.step.op.symbol(),
                        from: format!("{}:{}", r.step.from.0, r.step.from.1),
                        to: format!("{}:{}", r.step.to.0, r.step.to.1),
                        predicted_degree: r.predicted_degree,
                        measured_degree: r.measured_degree,
                        predicted: profile_map(&r.predicted),
                        measured: profile_map(&r.measured),
                        agrees: r.agrees(),
                    })
                    .collect()
            }),
        })?;
    } else {
        out.line(format!("equation: {}", rec.equation));
        out.line(format!("degree: {}", rec.degree));
        out.line(format!("multiplicities: {}", multiplicity_text(&rec.gate_multiplicities)));
        out.line(format!("source: G0={}", rec.source_multiplicity));
        out.line(format!("code: {}", rec.code));
        if let Some(st) = &steps {
            for r in st {
                out.line(format!("step: {}", step_line(r)));
            }
        }
    }
    if let Some(bad) = steps.iter().flatten().find(|r| !r.agrees()) {
        return Err(CliError::Internal(format!("transformation rule disagrees at step {}", step_line(bad))));
    }
    Ok(())
}

// ---------------------------------------------------------------- triples

#[derive(Serialize)]
struct TripleJson {
    t: String,
    sides: [String; 3],
}

#[derive(Serialize)]
struct GateHitJson {
    t: String,
    point: String,
    gate: Option<&'static str>,
}

#[derive(Serialize)]
struct TriplesJson {
    p: u32,
    q: u32,
    triples: Vec<TripleJson>,
    gate_hits: Vec<GateHitJson>,
}

fn scalar_arg(s: &str) -> Result<Scalar, CliError> {
    parse_scalar(s.trim()).map_err(|_| CliError::Domain(format!("cannot parse `{s}` as a rational number")))
}

fn triples(json: bool, args: &TriplesArgs, out: &mut Output) -> Res {
    let (p, q) = parse_pq(&args.pq)?;
    let source = match args.den_max {
        Some(max_den) => {
            let lo = scalar_arg(&args.t_min)?;
            let hi = scalar_arg(&args.t_max)?;
            if lo > hi {
                return Err(CliError::Usage("--t-min exceeds --t-max".into()));
            }
            ParamSource::DenominatorBound { max_den, lo, hi }
        }
        None => ParamSource::Values(args.t.iter().map(|s| scalar_arg(s)).collect::<Result<_, _>>()?),
    };
    let report = chebcurves::factory::oppenheim_triples(p, q, &source)?;
    let kept = report.triples.iter().filter(|t| !args.real_only || t.is_real_triangle());
    let hit_text = |h: &chebcurves::factory::GateHit| match h.gate {
        Some(g) => format!("t={} reaches gate point {g} {}", h.t, h.point),
        None => format!("t={} gives {} with a zero coordinate", h.t, h.point),
    };
    if json {
        return out.json(&TriplesJson {
            p,
            q,
            triples: kept
                .map(|t| TripleJson {
                    t: t.t.to_string(),
                    sides: t.sides.clone().map(|s| s.to_string()),
                })
                .collect(),
            gate_hits: report
                .gate_hits
                .iter()
                .map(|h| GateHitJson {
                    t: h.t.to_string(),
                    point: h.point.to_string(),
                    gate: h.gate.map(GatePoint::label),
                })
                .collect(),
        });
    }
    for t in kept {
        let [a, b, c] = &t.sides;
        out.line(format!("t={} ({a},{b},{c})", t.t));
    }
    for h in &report.gate_hits {
        out.err.push_str(&format!("note: {}\n", hit_text(h)));
    }
    Ok(())
}

// ---------------------------------------------------------------- check

#[derive(Serialize)]
struct CheckJson {
    p: u32,
    q: u32,
    point: String,
    on_curve: bool,
    gate: Option<&'static str>,
    t: Option<String>,
    note: Option<String>,
    passages: Vec<String>,
}

fn check(json: bool, args: &CheckArgs, factory: &CurveFactory, out: &mut Output) -> Res {
    let (p, q) = parse_pq(&args.pq)?;
    let coords: Vec<Scalar> = args.point.iter().map(|s| scalar_arg(s)).collect::<Result<_, _>>()?;
    let coords: [Scalar; 3] = coords
        .try_into()
        .map_err(|_| CliError::Usage("expected three coordinates".into()))?;
    let x = ProjPoint::new(coords)?;
    let f = factory.equation(p, q)?;
    let on = f.eval(&x.scalars()).is_zero();
    let gate = if on { GatePoint::classify(&x) } else { None };
    let mut res = CheckJson {
        p,
        q,
        point: x.to_string(),
        on_curve: on,
        gate: gate.map(GatePoint::label),
        t: None,
        note: None,
        passages: Vec::new(),
    };
    let text = if !on {
        "not on curve".to_string()
    } else if gate == Some(GatePoint::G0) {
        res.t = Some("inf".into());
        "on curve (source point G0), t = ∞".to_string()
    } else if let Some(g) = gate.filter(|g| GatePoint::GATES.contains(g)) {
        res.passages = passage_code(p, q)?
            .events
            .iter()
            .filter(|e| e.gate == g)
            .map(|e| format!("cos({}π/{})", e.k, e.n))
            .collect();
        res.note = Some("parameter not unique".into());
        format!("on curve (gate point {g}), parameter not unique")
    } else {
        match recover_parameter(p, q, &x) {
            Ok(t) => {
                let s = format!("on curve, t = {t}");
                res.t = Some(t.to_string());
                s
            }
            Err(Error::ZeroCoordinate) => {
                res.note = Some("zero coordinate".into());
                "on curve (zero coordinate), parameter not recovered".to_string()
            }
            Err(Error::NonLinearGcd(_)) => {
                res.note = Some("singular point".into());
                "on curve (singular point), parameter not unique".to_string()
            }
            Err(e) => return Err(e.into()),
        }
    };
    if json {
        return out.json(&res);
    }
    out.line(text);
    for t in &res.passages {
        out.line(format!("  passes at t = {t}"));
    }
    Ok(())
}

// ---------------------------------------------------------------- code

#[derive(Serialize)]
struct EventJson {
    gate: &'static str,
    k: u32,
    n: u32,
    t: f64,
}

#[derive(Serialize)]
struct CodeJson {
    p: u32,
    q: u32,
    code: Vec<&'static str>,
    events: Vec<EventJson>,
}

fn code(json: bool, args: &CodeArgs, out: &mut Output) -> Res {
    let (p, q) = parse_pq(&args.pq)?;
    let code: PassageCode = passage_code(p, q)?;
    if json {
        return out.json(&CodeJson {
            p,
            q,
            code: code.labels(),
            events: code
                .events
                .iter()
                .map(|e| EventJson { gate: e.gate.label(), k: e.k, n: e.n, t: e.t() })
                .collect(),
        });
    }
    out.line(code.to_string());
    if args.events {
        for e in &code.events {
            out.line(format!("{e} ≈ {:.9}", e.t()));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- table

const SYMBOLIC: [(&str, [&str; 6]); 3] = [
    ("p odd, q odd", ["(p-1)/2", "(p-1)/2", "(q-1)/2", "(q-1)/2", "(p+q)/2", "(p+q)/2-1"]),
    ("p odd, q even", ["(p-1)/2", "(p-1)/2", "q/2-1", "q/2", "(p+q-1)/2", "(p+q-1)/2"]),
    ("p even, q odd", ["p/2-1", "p/2", "(q-1)/2", "(q-1)/2", "(p+q-1)/2", "(p+q-1)/2"]),
];

#[derive(Serialize)]
struct SymbolicRowJson {
    parities: &'static str,
    multiplicities: BTreeMap<&'static str, &'static str>,
}

#[derive(Serialize)]
struct TableRowJson {
    p: u32,
    q: u32,
    multiplicities: BTreeMap<&'static str, u32>,
    source_multiplicity: u32,
}

fn table(json: bool, args: &TableArgs, out: &mut Output) -> Res {
    if let Some(pq) = &args.pq {
        let (p, q) = parse_pq(pq)?;
        let m = gate_table(p, q)?;
        if json {
            return out.json(&TableRowJson {
                p,
                q,
                multiplicities: multiplicity_map(&m),
                source_multiplicity: p.min(q),
            });
        }
        out.line(format!("{p}:{q}  {}  G0={}", multiplicity_text(&m), p.min(q)));
        return Ok(());
    }
    if json {
        let rows: Vec<SymbolicRowJson> = SYMBOLIC
            .iter()
            .map(|(par, cells)| SymbolicRowJson {
                parities: par,
                multiplicities: GatePoint::GATES.iter().map(|g| g.label()).zip(cells.iter().copied()).collect(),
            })
            .collect();
        return out.json(&rows);
    }
    let header: Vec<String> = GatePoint::GATES.iter().map(|g| format!("{:<10}", g.label())).collect();
    out.line(format!("{:<15}{}", "parities", header.concat()).trim_end());
    for (par, cells) in SYMBOLIC {
        let cells: Vec<String> = cells.iter().map(|c| format!("{c:<10}")).collect();
        out.line(format!("{par:<15}{}", cells.concat()).trim_end());
    }
    out.line("G0 (source point): min(p,q)");
    Ok(())
}

// ---------------------------------------------------------------- sss

#[derive(Serialize)]
struct SssJson {
    sides: [String; 3],
    classification: String,
    angles: Option<[String; 3]>,
    delta: String,
    area: String,
    residuals: Option<ResidualsJson>,
    diagnostic: Option<String>,
}

#[derive(Serialize)]
struct ResidualsJson {
    sines: [f64; 3],
    cosines: [f64; 3],
    max: f64,
}

fn classification_text(sol: &TriangleSolution) -> String {
    match &sol.classification {
        Classification::Unique(_) => "unique triangle".into(),
        Classification::ZeroArea(k, _) => format!("zero-area triangle ({} = 0)", k.label()),
        Classification::Ambiguous(ks) => {
            let labels: Vec<&str> = ks.iter().map(|k| k.label()).collect();
            format!("ambiguous: several factors of delta vanish ({})", labels.join(", "))
        }
        Classification::Family { zero_side, kind } => {
            format!("infinitely many: {}", family_description(*zero_side, *kind))
        }
        Classification::NoTriangle { .. } => "no imaginary triangle".into(),
        Classification::AllZero => "no imaginary triangle (more than one side is zero)".into(),
    }
}

fn sss(json: bool, args: &SssArgs, out: &mut Output) -> Res {
    let parsed: Vec<Complex64> = args
        .sides
        .iter()
        .map(|s| chebcurves::triangle::parse_complex(s).map_err(CliError::from))
        .collect::<Result<_, _>>()?;
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(CliError::Usage("--tol must be a positive number".into()));
    }
    let sides = ComplexTriple::new(parsed[0], parsed[1], parsed[2]);
    let sol = solve_sss(&sides, args.tol);
    let angles = sol.classification.angles().map(|a| a.angles().map(format_complex));
    let res = SssJson {
        sides: sides.as_array().map(format_complex),
        classification: classification_text(&sol),
        angles: angles.clone(),
        delta: format_complex(sol.delta),
        area: format_complex(sol.area),
        residuals: sol.residuals.map(|r| ResidualsJson { sines: r.sines, cosines: r.cosines, max: r.max() }),
        diagnostic: sol.diagnostic.clone(),
    };
    if json {
        return out.json(&res);
    }
    out.line(format!("sides: {}", res.sides.join(" ")));
    out.line(format!("classification: {}", res.classification));
    if let Some([a, b, c]) = &angles {
        out.line(format!("alpha: {a}"));
        out.line(format!("beta: {b}"));
        out.line(format!("gamma: {c}"));
    }
    out.line(format!("delta: {}", res.delta));
    out.line(format!("area: {}", res.area));
    if let Some(r) = &res.residuals {
        let fmt = |xs: &[f64; 3]| xs.iter().map(|x| format!("{x:.3e}")).collect::<Vec<_>>().join(" ");
        out.line(format!("residuals (sines): {}", fmt(&r.sines)));
        out.line(format!("residuals (cosines): {}", fmt(&r.cosines)));
        out.line(format!("max residual: {:.3e}", r.max));
    }
    if let Some(d) = &res.diagnostic {
        out.warn(d);
    }
    Ok(())
}

// ---------------------------------------------------------------- plot

#[derive(Serialize)]
struct PlotJson {
    p: u32,
    q: u32,
    chart: &'static str,
    format: &'static str,
    samples: usize,
    polylines: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    content: Option<String>,
}

fn plot_cmd(json: bool, args: &PlotArgs, out: &mut Output) -> Res {
    let (p, q) = parse_pq(&args.pq)?;
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let [x_min, x_max, y_min, y_max] = args.view[..] else {
        return Err(CliError::Usage("--view takes four numbers xmin,xmax,ymin,ymax".into()));
    };
    let view = Viewport::new(x_min, x_max, y_min, y_max).map_err(CliError::Usage)?;
    let sampling = match (args.t_min, args.t_max) {
        (Some(t_min), Some(t_max)) => {
            if !(t_min.is_finite() && t_max.is_finite() && t_min < t_max) {
                return Err(CliError::Usage("need finite --t-min < --t-max".into()));
            }
            Sampling::Uniform { t_min, t_max }
        }
        _ => Sampling::Default,
    };
    let spec = PlotSpec {
        p,
        q,
        chart: match args.chart {
            ChartArg::A => PlotChart::A,
            ChartArg::C => PlotChart::C,
        },
        sampling,
        samples: args.samples,
        view,
    };
    let samples = plot::trace(&spec);
    let lines = plot::polylines(&plot::branches(&samples), &view);
    if lines.is_empty() {
        out.warn("every sample lies outside the viewport; the plot is empty");
    }
    let content = match args.format {
        FormatArg::Svg => {
            let gates: Vec<GatePoint> = passage_code(p, q)?.events.iter().map(|e| e.gate).collect();
            plot::render_svg(&spec, &lines, &plot::markers(&spec, &gates))
        }
        FormatArg::Csv => plot::render_csv(&samples),
    };
    if let Some(path) = &args.out {
        fs::write(path, &content).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    }
    if json {
        return out.json(&PlotJson {
            p,
            q,
            chart: match spec.chart {
                PlotChart::A => "a",
                PlotChart::C => "c",
            },
            format: match args.format {
                FormatArg::Svg => "svg",
                FormatArg::Csv => "csv",
            },
            samples: samples.len(),
            polylines: lines.len(),
            path: args.out.as_ref().map(|p| p.display().to_string()),
            content: args.out.is_none().then_some(content),
        });
    }
    if args.out.is_none() {
        out.out.push_str(&content);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_parsing() {
        assert_eq!(parse_pq("2:3"), Ok((2, 3)));
        assert!(matches!(parse_pq("2:4"), Err(CliError::Domain(_))));
        assert!(matches!(parse_pq("2-3"), Err(CliError::Domain(_))));
        assert!(matches!(parse_pq("0:1"), Err(CliError::Domain(_))));
    }
}
