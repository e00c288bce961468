use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use tangle_core::notation::parse_tangle;
use tangle_core::oracle::{self, PlanarDiagram};
use tangle_core::solver::{
    self, Branch, Chirality, SolutionFamily, SystemKind, SystemSpec, VerifyReport,
};
use tangle_core::{cf_eval, cf_expand, Closure, FourPlat, Tangle, TangleFraction, TwistVector};

use crate::config::Config;
use crate::{BranchArg, Command, SearchArg, SystemArg};

pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Output {
        Output { json, text, ok: true }
    }
}

const DEFAULT_BOUND: i64 = 12;
const DEFAULT_K_MAX: u32 = 3;

impl From<SystemArg> for SystemKind {
    fn from(s: SystemArg) -> SystemKind {
        match s {
            SystemArg::Direct => SystemKind::Direct,
            SystemArg::Inverted => SystemKind::Inverted,
        }
    }
}

fn branches(arg: Option<BranchArg>, config: &Config) -> Vec<Branch> {
    match arg.or(config.branch).unwrap_or(BranchArg::Both) {
        BranchArg::Upper => vec![Branch::Upper],
        BranchArg::Lower => vec![Branch::Lower],
        BranchArg::Both => Branch::both().to_vec(),
    }
}

fn k_range(config: &Config) -> std::ops::RangeInclusive<u32> {
    0..=config.k_max.unwrap_or(DEFAULT_K_MAX)
}

fn parse(expr: &str) -> Result<(Tangle, Vec<String>)> {
    let p = parse_tangle(expr).with_context(|| format!("in {expr:?}"))?;
    Ok((p.tangle, p.warnings))
}

fn parse_fraction(expr: &str) -> Result<TangleFraction> {
    if let Ok(f) = expr.parse::<TangleFraction>() {
        return Ok(f);
    }
    let (t, _) = parse(expr)?;
    t.as_rational().ok_or_else(|| anyhow!("{expr:?} is not a rational tangle"))
}

fn closure_json(c: &Closure) -> Value {
    match c {
        Closure::FourPlat(b) => json!({ "four_plat": b, "text": b.to_string() }),
        Closure::NotFourPlat(r) => json!({ "four_plat": null, "text": r.to_string() }),
    }
}

fn torus_note(b: FourPlat) -> String {
    match b.as_torus_2strand() {
        Some(n) if b.p() > 1 => format!(" = T(2,{n})"),
        _ => String::new(),
    }
}

pub fn run(cmd: Command, config: &Config) -> Result<Output> {
    match cmd {
        Command::Closure { expr } => closure(&expr),
        Command::Cf { input } => cf(&input),
        Command::Solve {
            system,
            p,
            branch,
            t_min,
            t_max,
            fourth,
            refine,
        } => {
            let t_min = t_min.or(config.t_min);
            let t_max = t_max.or(config.t_max);
            let ts = match (t_min, t_max) {
                (Some(a), Some(b)) if a <= b => Some(a..=b),
                (None, None) => None,
                (Some(a), None) => Some(a..=a),
                (None, Some(b)) => Some(b..=b),
                _ => bail!("t-min must not exceed t-max"),
            };
            solve(system.into(), &p, &branches(branch, config), ts, fourth, refine, config)
        }
        Command::Classes { system } => classes(system.into()),
        Command::Verify { file, oracle } => verify(&file, oracle),
        Command::Oracle { inputs } => oracle_cmd(&inputs),
        Command::Search { kind, p, bound, k } => {
            let bound = bound.or(config.bound).unwrap_or(DEFAULT_BOUND);
            search(kind, p.as_deref(), bound, k, config)
        }
        Command::Xer { bound } => xer(bound.or(config.bound).unwrap_or(DEFAULT_BOUND)),
    }
}

fn closure(expr: &str) -> Result<Output> {
    let (t, warnings) = parse(expr)?;
    let c = t.closure_with(TangleFraction::ZERO);
    let mut text = format!("N({t}) = {c}");
    if let Some(b) = c.four_plat() {
        text += &torus_note(b);
    }
    text.push('\n');
    for w in &warnings {
        writeln!(text, "warning: {w}")?;
    }
    Ok(Output::ok(
        json!({ "input": expr, "tangle": t, "closure": closure_json(&c), "warnings": warnings }),
        text,
    ))
}

fn cf(input: &str) -> Result<Output> {
    let s = input.trim();
    let (f, v) = if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let entries = inner
            .split(',')
            .map(str::trim)
            .filter(|e| !e.is_empty())
            .map(|e| e.parse::<i64>().with_context(|| format!("bad entry {e:?}")))
            .collect::<Result<Vec<_>>>()?;
        let v = TwistVector(entries);
        (cf_eval(&v), v)
    } else {
        let f = parse_fraction(s)?;
        (f, cf_expand(f)?)
    };
    let class = format!("{:?}", f.classify());
    let text = format!("{f} = {v}  class {class}, {} crossings\n", v.crossing_count());
    Ok(Output::ok(
        json!({ "fraction": f, "twist_vector": v, "class": class, "crossings": v.crossing_count() }),
        text,
    ))
}

fn solve(
    kind: SystemKind,
    p: &str,
    branches: &[Branch],
    ts: Option<std::ops::RangeInclusive<i64>>,
    fourth: bool,
    refine: bool,
    config: &Config,
) -> Result<Output> {
    let pf = parse_fraction(p)?;
    let mut families: Vec<SolutionFamily> = Vec::new();
    if refine {
        let n = pf.as_integer().ok_or_else(|| anyhow!("--refine needs P = (0) or (-1)"))?;
        families.push(solver::chiral_refinement(n)?);
    } else {
        let spec_ks = k_range(config);
        for &b in branches {
            let spec = SystemSpec::new(kind).with_branch(b).with_k_range(spec_ks.clone());
            families.push(solver::parametric_family(&spec, pf));
        }
        if fourth {
            if kind != SystemKind::Inverted {
                bail!("the Montesinos family exists for inverted sites only");
            }
            let n = pf.as_integer().ok_or_else(|| anyhow!("--fourth needs integral P"))?;
            for &b in branches {
                let p = b.sign() * n;
                if (0..=1).contains(&p) {
                    families.push(solver::fourth_solution(p, b)?);
                }
            }
        }
    }
    let mut text = String::new();
    for f in &families {
        write!(text, "{f}")?;
    }
    let mut instances = Vec::new();
    if let Some(ts) = ts {
        for f in &families {
            for t in ts.clone() {
                match f.instantiate(t) {
                    Ok(sols) => {
                        for s in &sols {
                            writeln!(text, "t={t} {s}")?;
                        }
                        instances.push(json!({ "class": f.class, "branch": f.branch, "t": t, "solutions": sols }));
                    }
                    Err(e) => {
                        writeln!(text, "t={t} {e}")?;
                        instances.push(json!({ "class": f.class, "branch": f.branch, "t": t, "error": e.to_string() }));
                    }
                }
            }
        }
    }
    Ok(Output::ok(
        json!({ "system": kind, "P": pf, "families": families, "instances": instances }),
        text,
    ))
}

fn classes(kind: SystemKind) -> Result<Output> {
    let cat = solver::catalogue(kind);
    let mut text = String::new();
    for d in &cat {
        writeln!(text, "class {}: P {}; O {}; R {}", d.class, d.p, d.o, d.r)?;
        for c in &d.constraints {
            writeln!(text, "  - {c}")?;
        }
        for fam in &d.examples {
            for line in fam.to_string().lines() {
                writeln!(text, "    {line}")?;
            }
        }
    }
    Ok(Output::ok(json!({ "system": kind, "classes": cat }), text))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// One solution object, optionally with `k_range` and `chirality` next to the solution fields.
fn verify_one(mut v: Value, with_oracle: bool) -> Result<VerifyReport> {
    let obj = v.as_object_mut().ok_or_else(|| anyhow!("expected a JSON object"))?;
    let ks: Option<Vec<u32>> = obj.remove("k_range").map(serde_json::from_value).transpose()?;
    let chirality: Option<Chirality> = obj.remove("chirality").map(serde_json::from_value).transpose()?;
    let sol: solver::Solution = serde_json::from_value(v)?;
    let ks = ks.unwrap_or_else(|| sol.o_f.keys().copied().collect());
    let spec = SystemSpec::new(sol.system)
        .with_k_range(ks)
        .with_chirality(chirality.unwrap_or_default());
    Ok(solver::verify_solution(&sol, &spec, with_oracle)?)
}

fn verify(path: &Path, with_oracle: bool) -> Result<Output> {
    let input: Value = serde_json::from_str(&read_input(path)?).context("parsing solution JSON")?;
    let items = match input {
        Value::Array(xs) => xs,
        other => vec![other],
    };
    let reports = items
        .into_iter()
        .map(|v| verify_one(v, with_oracle))
        .collect::<Result<Vec<_>>>()?;
    let ok = reports.iter().all(|r| r.pass && r.oracle_agrees());
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{} class {}: P={} R={}", r.system, r.class, r.p, r.r)?;
        for c in &r.checks {
            let mark = if c.pass { "ok" } else { "FAILED" };
            write!(
                text,
                "  k={} substrate {} product {} (want {}) {mark}",
                c.k, c.substrate, c.product, c.expected_product
            )?;
            if let Some(o) = c.oracle {
                write!(text, " oracle {:?}/{:?}", o.substrate, o.product)?;
            }
            text.push('\n');
        }
    }
    writeln!(text, "{}", if ok { "verified" } else { "not verified" })?;
    let json = json!({ "verified": ok, "reports": reports });
    Ok(Output { json, text, ok })
}

enum Input {
    Closure(Tangle, Closure),
    Plat(FourPlat),
    Pd,
}

fn parse_four_plat(s: &str) -> Option<Result<FourPlat>> {
    let inner = s.strip_prefix("b(")?.strip_suffix(')')?;
    let (p, q) = inner.split_once(',')?;
    Some((|| {
        let p: i64 = p.trim().parse()?;
        let q: i64 = q.trim().parse()?;
        Ok(tangle_core::canonicalize(p, q)?)
    })())
}

fn diagram_for(s: &str) -> Result<(PlanarDiagram, Input)> {
    let s = s.trim();
    if s.starts_with("PD[") {
        return Ok((s.parse()?, Input::Pd));
    }
    if let Some(b) = parse_four_plat(s) {
        let b = b?;
        return Ok((oracle::reference_diagram(b)?, Input::Plat(b)));
    }
    let (t, _) = parse(s)?;
    let c = t.closure_with(TangleFraction::ZERO);
    let d = oracle::numerator_close(&t.diagram()?)?;
    Ok((d, Input::Closure(t, c)))
}

fn oracle_cmd(inputs: &[String]) -> Result<Output> {
    let mut entries = Vec::new();
    let mut diagrams = Vec::new();
    let mut text = String::new();
    let mut ok = true;
    for s in inputs {
        let (d, kind) = diagram_for(s)?;
        let rep = oracle::report(&d)?;
        writeln!(text, "{s}: {} crossings, {} components, det {}", rep.crossings, rep.components, rep.determinant)?;
        for j in &rep.jones {
            writeln!(text, "  V = {j}")?;
        }
        let mut entry = json!({ "input": s, "pd": d.to_string(), "invariants": rep });
        if let Input::Closure(t, c) = &kind {
            entry["tangle"] = json!(t);
            entry["closure"] = closure_json(c);
            if let Some(b) = c.four_plat() {
                let agrees = oracle::jones_equivalent(&d, &oracle::reference_diagram(b)?)?;
                ok &= agrees;
                entry["matches_closure"] = json!(agrees);
                writeln!(text, "  closure {b}{}: oracle {}", torus_note(b), if agrees { "agrees" } else { "DISAGREES" })?;
            }
        }
        if let Input::Plat(b) = kind {
            entry["four_plat"] = json!(b);
        }
        entries.push(entry);
        diagrams.push(d);
    }
    let mut json = json!({ "inputs": entries });
    if let [a, b] = diagrams.as_slice() {
        let same = oracle::jones_equivalent(a, b)?;
        ok &= same;
        json["equivalent"] = json!(same);
        writeln!(text, "{}", if same { "equivalent" } else { "not equivalent" })?;
    }
    Ok(Output { json, text, ok })
}

fn search(kind: SearchArg, p: Option<&str>, bound: i64, k: Option<u32>, config: &Config) -> Result<Output> {
    if bound < 0 {
        bail!("bound must be non-negative");
    }
    let system = match kind {
        SearchArg::Montesinos => {
            if bound > 8 {
                bail!("Montesinos search is limited to bound 8");
            }
            let hits = solver::brute_force_montesinos(bound);
            let classes = solver::montesinos_classes(&hits);
            let mut text = String::new();
            for h in &hits {
                writeln!(text, "O={} R={}", h.o, h.r)?;
            }
            writeln!(text, "{} hits, {} classes", hits.len(), classes.len())?;
            for c in &classes {
                writeln!(text, "  class O={} R={}", c.o, c.r)?;
            }
            return Ok(Output::ok(json!({ "bound": bound, "hits": hits, "classes": classes }), text));
        }
        SearchArg::Direct => SystemKind::Direct,
        SearchArg::Inverted => SystemKind::Inverted,
    };
    if bound > 200 {
        bail!("rational search is limited to bound 200");
    }
    let pf = parse_fraction(p.ok_or_else(|| anyhow!("rational search needs P"))?)?;
    let ks: Vec<u32> = match k {
        Some(k) => vec![k],
        None => k_range(config).collect(),
    };
    let spec = SystemSpec::new(system);
    let mut text = String::new();
    let mut per_k = Vec::new();
    for k in ks {
        let hits = solver::brute_force_rational(&spec, pf, bound, k);
        writeln!(text, "k={k}: {} hits", hits.len())?;
        for (o, r) in &hits {
            writeln!(text, "  O={o} R={r}")?;
        }
        let hits: Vec<Value> = hits.iter().map(|(o, r)| json!({ "O": o, "R": r })).collect();
        per_k.push(json!({ "k": k, "hits": hits }));
    }
    Ok(Output::ok(
        json!({ "system": system, "P": pf, "bound": bound, "results": per_k }),
        text,
    ))
}

fn xer(bound: i64) -> Result<Output> {
    if !(0..=200).contains(&bound) {
        bail!("bound must lie in 0..=200");
    }
    let hits = solver::xer_demo(bound);
    let mut text = String::new();
    let mut all_in_family = true;
    let rows: Vec<Value> = hits
        .iter()
        .map(|(o, r)| {
            let fam = solver::darcy_family(*r);
            all_in_family &= fam.is_some();
            let _ = writeln!(text, "O={o} R={r} family {}", fam.map_or("none".into(), |f| format!("{f:?}")));
            json!({ "O": o, "R": r, "family": fam })
        })
        .collect();
    writeln!(text, "{} hits", hits.len())?;
    Ok(Output {
        json: json!({ "bound": bound, "hits": rows }),
        text,
        ok: all_in_family,
    })
}
