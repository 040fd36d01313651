use std::fmt;
use std::path::Path;
use std::process::ExitCode;

use artin_core::homology::{homology, HomologyResult, MatchingOptions};
use artin_core::morse::{is_acyclic, is_precise, is_weighted, validate, Precision};
use artin_core::search::{prove_no_precise, search_precise, Absence, Certificate, SearchOutcome};
use artin_core::snf::homology_direct;
use artin_core::sweep::{Case, Kind};
use artin_core::tables::{self, Cell, Suite};
use artin_core::{build_kw, ComplexK, CoxeterGraph, Error, Family, Matching, Simplex, TypeName};
use serde::{Deserialize, Serialize};

use crate::{Command, Method, Target};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::GuardRefused(_)) => 3,
            CliError::Core(Error::UnknownType(_) | Error::InvalidMatrix(_)) | CliError::Usage(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Overall verdict of a command that completed.
pub struct Status(bool);

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        if s.0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

pub fn run(command: Command) -> Result<Status> {
    match command {
        Command::Complex { target, d, json } => complex(&target, d, json),
        Command::Matching { target, d, f, g, json } => matching(&target, d, f, g, json),
        Command::Search { target, d, seed, budget, prove_absence, cap, json } => {
            search(&target, d, seed, budget, prove_absence.then_some(cap), json)
        }
        Command::Verify { target, d, f, g, matching, json } => verify(&target, d, f, g, matching.as_deref(), json),
        Command::Homology { target, method, seed, budget, json } => {
            homology_cmd(&target, method, MatchingOptions { seed, budget, search_only: false }, json)
        }
        Command::Tables { suite, seed, json } => tables_cmd(&suite, seed, json),
    }
}

struct Resolved {
    name: String,
    graph: CoxeterGraph,
    builtin: Option<TypeName>,
}

fn resolve(target: &Target) -> Result<Resolved> {
    if let Some(path) = &target.matrix {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let name = path.file_stem().map_or("matrix".into(), |s| s.to_string_lossy().into_owned());
        return Ok(Resolved { name, graph: CoxeterGraph::parse(&text)?, builtin: None });
    }
    let Some(ty) = &target.type_name else {
        return Err(CliError::Usage("one of --type or --matrix is required".into()));
    };
    let t: TypeName = match target.rank {
        Some(r) => TypeName::parse(ty, r)?,
        None => ty.parse()?,
    };
    Ok(Resolved { name: t.to_string(), graph: t.graph(), builtin: Some(t) })
}

fn print<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        print!("{}", text());
    }
}

fn labels(graph: &CoxeterGraph, s: Simplex) -> Vec<String> {
    s.vertices().map(|v| graph.label(v).to_string()).collect()
}

fn show(graph: &CoxeterGraph, s: Simplex) -> String {
    format!("{{{}}}", labels(graph, s).join(","))
}

#[derive(Serialize)]
struct SimplexOut {
    vertices: Vec<String>,
    poincare: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weight: Option<u32>,
}

#[derive(Serialize)]
struct ComplexOut {
    #[serde(rename = "type")]
    type_name: String,
    rank: usize,
    simplices: Vec<SimplexOut>,
    /// `boundaries[c]` is `∂⁰` from cardinality `c + 1` to `c`.
    boundaries: Vec<Vec<Vec<i64>>>,
}

fn complex(target: &Target, d: Option<u32>, json: bool) -> Result<Status> {
    let r = resolve(target)?;
    let k = build_kw(&r.graph);
    let level = d.map(|d| k.weighted_level(d));
    let out = ComplexOut {
        type_name: r.name.clone(),
        rank: r.graph.rank(),
        simplices: k
            .simplices()
            .map(|s| SimplexOut {
                vertices: labels(&r.graph, s),
                poincare: k.factorization(s).iter().collect(),
                weight: level.as_ref().map(|l| l.weight(s)),
            })
            .collect(),
        boundaries: (1..=k.top()).map(|c| k.boundary_c0(c)).collect(),
    };
    print(json, &out, || {
        let mut t = format!("K_W of {}: {} simplices\n", r.name, k.len());
        for (s, o) in k.simplices().zip(&out.simplices) {
            let factors: Vec<String> = o.poincare.iter().map(|(d, m)| format!("φ{d}^{m}")).collect();
            t += &format!("{} {}", show(&r.graph, s), factors.join(" "));
            if let Some(w) = o.weight {
                t += &format!(" weight {w}");
            }
            t.push('\n');
        }
        t
    });
    Ok(Status(true))
}

#[derive(Serialize, Deserialize)]
struct PairOut {
    upper: Vec<String>,
    lower: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct MatchingOut {
    #[serde(rename = "type")]
    type_name: String,
    d: u32,
    pairs: Vec<PairOut>,
    critical: Vec<Vec<String>>,
}

impl MatchingOut {
    fn new(name: &str, d: u32, k: &ComplexK, m: &Matching) -> Self {
        let g = k.graph();
        MatchingOut {
            type_name: name.to_string(),
            d,
            pairs: m
                .sorted_pairs()
                .into_iter()
                .map(|(u, l)| PairOut { upper: labels(g, u), lower: labels(g, l) })
                .collect(),
            critical: k.simplices().filter(|s| m.is_critical(*s)).map(|s| labels(g, s)).collect(),
        }
    }

    fn text(&self) -> String {
        let set = |v: &[String]| format!("{{{}}}", v.join(","));
        let mut t = format!("{} d={}: {} pairs\n", self.type_name, self.d, self.pairs.len());
        for p in &self.pairs {
            t += &format!("{} -> {}\n", set(&p.upper), set(&p.lower));
        }
        let crit: Vec<String> = self.critical.iter().map(|c| set(c)).collect();
        t += &format!("critical: {}\n", crit.join(" "));
        t
    }

    fn to_matching(&self, graph: &CoxeterGraph) -> Result<Matching> {
        let index = |v: &[String]| -> Result<Simplex> {
            v.iter()
                .map(|l| {
                    graph
                        .labels()
                        .iter()
                        .position(|x| x == l)
                        .ok_or_else(|| CliError::Usage(format!("unknown vertex label `{l}`")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Simplex::from_vertices)
        };
        let pairs = self
            .pairs
            .iter()
            .map(|p| Ok((index(&p.upper)?, index(&p.lower)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matching::new(pairs)?)
    }
}

/// `matching --json` output, or `search --json` output carrying one.
#[derive(Deserialize)]
#[serde(untagged)]
enum MatchingFile {
    Bare(MatchingOut),
    Wrapped { matching: MatchingOut },
}

fn family_case(r: &Resolved, d: u32, f: i64, g: i64) -> Result<Case> {
    let Some(t) = r.builtin else {
        return Err(CliError::Usage("family matchings need --type".into()));
    };
    let kind = match t.family {
        Family::A => Kind::A { f, g },
        Family::D => Kind::D { g },
        Family::TB => Kind::TB,
        Family::TD => Kind::TD,
        Family::I2 => Kind::I2,
        other => return Err(CliError::Usage(format!("no family matching for type {other}; use `search`"))),
    };
    Ok(Case { kind, n: t.rank as i64, d })
}

fn matching(target: &Target, d: u32, f: i64, g: i64, json: bool) -> Result<Status> {
    let r = resolve(target)?;
    let (k, m) = family_case(&r, d, f, g)?.build()?;
    let out = MatchingOut::new(&r.name, d, &k, &m);
    print(json, &out, || out.text());
    Ok(Status(true))
}

#[derive(Serialize)]
struct SearchOut {
    #[serde(rename = "type")]
    type_name: String,
    d: u32,
    seed: u64,
    explored: u64,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    matching: Option<MatchingOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
}

fn search(target: &Target, d: u32, seed: u64, budget: u64, cap: Option<usize>, json: bool) -> Result<Status> {
    let r = resolve(target)?;
    let k = build_kw(&r.graph);
    let level = k.weighted_level(d);
    let outcome = search_precise(&k, &level, budget, seed);
    let mut out = SearchOut {
        type_name: r.name.clone(),
        d,
        seed,
        explored: outcome.explored(),
        found: outcome.matching().is_some(),
        matching: outcome.matching().map(|m| MatchingOut::new(&r.name, d, &k, m)),
        certificate: None,
    };
    let mut ok = out.found;
    if let Some(cap) = cap {
        match prove_no_precise(&k, &level, cap)? {
            Absence::Certificate(c) => {
                // A certificate next to a found matching would be a bug.
                ok = !out.found;
                out.certificate = Some(c);
            }
            Absence::Exists(m) => {
                ok = true;
                if out.matching.is_none() {
                    out.matching = Some(MatchingOut::new(&r.name, d, &k, &m));
                }
            }
        }
    }
    print(json, &out, || {
        let mut t = match (&outcome, &out.matching) {
            (SearchOutcome::Found { .. }, Some(m)) => {
                format!("found after {} candidates (seed {seed})\n{}", out.explored, m.text())
            }
            (_, Some(m)) => format!("search: not found after {} candidates\nenumeration found:\n{}", out.explored, m.text()),
            _ => format!("search: not found after {} candidates (seed {seed})\n", out.explored),
        };
        if let Some(c) = &out.certificate {
            t += &format!(
                "certificate: no φ{}-precise matching; {} weighted matchings over {} pairs enumerated, {} acyclic, none precise\n",
                c.d, c.candidates, c.pairs, c.acyclic
            );
        }
        t
    });
    Ok(Status(ok))
}

#[derive(Serialize)]
struct VerifyOut {
    #[serde(rename = "type")]
    type_name: String,
    d: u32,
    valid: bool,
    acyclic: bool,
    weighted: bool,
    precise: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<PairOut>,
}

fn verify(target: &Target, d: u32, f: i64, g: i64, file: Option<&Path>, json: bool) -> Result<Status> {
    let r = resolve(target)?;
    let (k, m) = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let parsed = match serde_json::from_str(&text) {
                Ok(MatchingFile::Bare(m) | MatchingFile::Wrapped { matching: m }) => m,
                Err(e) => return Err(CliError::Usage(format!("bad matching file: {e}"))),
            };
            let k = build_kw(&r.graph);
            let m = parsed.to_matching(&r.graph)?;
            (k, m)
        }
        None => family_case(&r, d, f, g)?.build()?,
    };
    let level = k.weighted_level(d);
    let mut out = VerifyOut {
        type_name: r.name.clone(),
        d,
        valid: validate(&m, &k).is_ok(),
        acyclic: is_acyclic(&m, &k),
        weighted: is_weighted(&m, &level),
        precise: false,
        witness: None,
    };
    if out.valid && out.acyclic && out.weighted {
        if let Precision::Imprecise { upper, lower, .. } = is_precise(&m, &k, &level)? {
            out.witness = Some(PairOut { upper: labels(&r.graph, upper), lower: labels(&r.graph, lower) });
        } else {
            out.precise = true;
        }
    }
    let all = out.valid && out.acyclic && out.weighted && out.precise;
    print(json, &out, || {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut t = format!(
            "{} d={}: valid {} acyclic {} weighted {} precise {}\n",
            out.type_name,
            d,
            yn(out.valid),
            yn(out.acyclic),
            yn(out.weighted),
            yn(out.precise)
        );
        if let Some(w) = &out.witness {
            t += &format!("witness: {{{}}} -> {{{}}}\n", w.upper.join(","), w.lower.join(","));
        }
        t
    });
    Ok(Status(all))
}

fn homology_cmd(target: &Target, method: Method, opts: MatchingOptions, json: bool) -> Result<Status> {
    let r = resolve(target)?;
    let via_matchings = || homology(&r.name, &r.graph, opts);
    let (result, ok): (HomologyResult, bool) = match method {
        Method::Matching => (via_matchings()?, true),
        Method::Snf => (homology_direct(&r.name, &r.graph)?, true),
        Method::Both => {
            let a = via_matchings()?;
            let b = homology_direct(&r.name, &r.graph)?;
            let same = a.same_groups(&b);
            if !same {
                eprintln!("mismatch between methods\nmatchings:\n{a}snf:\n{b}");
            }
            (a, same)
        }
    };
    print(json, &result, || result.to_string());
    Ok(Status(ok))
}

#[derive(Serialize)]
struct SuiteOut {
    suite: Suite,
    pass: bool,
    cells: Vec<Cell>,
}

fn tables_cmd(suite: &str, seed: u64, json: bool) -> Result<Status> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|_| CliError::Usage(format!("unknown suite `{suite}`")))?]
    };
    let opts = MatchingOptions { seed, ..Default::default() };
    let mut outs = Vec::new();
    for s in suites {
        let cells = tables::run(s, opts)?;
        outs.push(SuiteOut { suite: s, pass: cells.iter().all(|c| c.pass), cells });
    }
    let ok = outs.iter().all(|o| o.pass);
    print(json, &outs, || {
        let mut t = String::new();
        for o in &outs {
            for c in &o.cells {
                t += &format!("{} {c}\n", o.suite);
            }
            let failed = o.cells.iter().filter(|c| !c.pass).count();
            t += &format!("{}: {} cells, {failed} failed\n", o.suite, o.cells.len());
        }
        t
    });
    Ok(Status(ok))
}
