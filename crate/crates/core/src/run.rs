//! Command pipelines shared by the command line tool and the C interface.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::characters::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::fusion::{SaturationOptions, DEFAULT_MORPHISM_CAP, DEFAULT_SATURATION_CAP};
use crate::group::FiniteGroup;
use crate::hilbert::HilbertOptions;
use crate::invariants::{covering_check, irreducible_invariants, InvariantBasis};
use crate::jobspec::Job;
use crate::ring::{
    adic_equivalence_exponent, completed_presentation, default_completed_names, presentation,
    representation_ring, structure_constants, CompletedPresentation, RingPresentation,
};
use crate::spectrum::{prime_symbols, zariski_connected};
use crate::twisted::{
    check_lift, completed_module, module_structure, twisted_invariant_basis, IntMat,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Chartable,
    FusionClasses,
    Saturation,
    Repring,
    Ktheory,
    Spectrum,
    Twisted,
    Adic,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Chartable,
        Command::FusionClasses,
        Command::Saturation,
        Command::Repring,
        Command::Ktheory,
        Command::Spectrum,
        Command::Twisted,
        Command::Adic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Chartable => "chartable",
            Command::FusionClasses => "fusion-classes",
            Command::Saturation => "saturation",
            Command::Repring => "repring",
            Command::Ktheory => "ktheory",
            Command::Spectrum => "spectrum",
            Command::Twisted => "twisted",
            Command::Adic => "adic",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: Command,
    pub text: String,
    pub json: Value,
    pub dot: Option<String>,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Dot => self.dot.clone().ok_or_else(|| {
                Error::Invalid(format!("{} has no DOT output", self.command.name()))
            }),
        }
    }
}

/// Short words `g1^e1*g2^e2*…` in the named generators, exponents
/// minimized; unnamed groups fall back to cycle notation.
pub struct ElementLabels {
    labels: HashMap<usize, String>,
}

const LABEL_SEARCH_CAP: usize = 200_000;

impl ElementLabels {
    pub fn new(g: &FiniteGroup) -> ElementLabels {
        let names = g.names();
        let orders: Vec<usize> = names.iter().map(|(_, x)| g.element_order(*x)).collect();
        let total = orders.iter().try_fold(1usize, |acc, &o| acc.checked_mul(o));
        let mut best: HashMap<usize, (usize, Vec<usize>)> = HashMap::new();
        if !names.is_empty() && total.is_some_and(|t| t <= LABEL_SEARCH_CAP) {
            let mut exps = vec![0usize; names.len()];
            loop {
                let mut x = g.identity();
                for (&(_, gen), &e) in names.iter().zip(&exps) {
                    x = g.mul(x, g.pow(gen, e as i64));
                }
                let weight: usize = exps.iter().sum();
                let better = match best.get(&x) {
                    None => true,
                    Some((w, v)) => (weight, &exps) < (*w, v),
                };
                if better {
                    best.insert(x, (weight, exps.clone()));
                }
                let mut i = 0;
                loop {
                    if i == exps.len() {
                        break;
                    }
                    exps[i] += 1;
                    if exps[i] < orders[i] {
                        break;
                    }
                    exps[i] = 0;
                    i += 1;
                }
                if i == exps.len() {
                    break;
                }
            }
        }
        let mut labels = HashMap::new();
        for x in 0..g.order() {
            let label = if x == g.identity() {
                "1".to_string()
            } else if let Some((_, exps)) = best.get(&x) {
                let parts: Vec<String> = names
                    .iter()
                    .zip(exps)
                    .filter(|(_, &e)| e > 0)
                    .map(|((n, _), &e)| {
                        if e == 1 {
                            n.clone()
                        } else {
                            format!("{n}^{e}")
                        }
                    })
                    .collect();
                parts.join("*")
            } else {
                g.element(x).to_string()
            };
            labels.insert(x, label);
        }
        ElementLabels { labels }
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[&x]
    }

    /// The shortest label among `members`.
    pub fn simplest(&self, members: &[usize]) -> &str {
        members
            .iter()
            .map(|&x| self.label(x))
            .min_by(|a, b| (a.len(), *a).cmp(&(b.len(), *b)))
            .unwrap_or("")
    }
}

/// Character table, invariant basis and presentations of one job.
pub struct Analysis {
    pub table: CharacterTable,
    pub basis: InvariantBasis,
    pub presentation: RingPresentation,
    pub completed: CompletedPresentation,
}

fn hilbert_options(job: &Job) -> HilbertOptions {
    let mut opts = HilbertOptions::default();
    if let Some(cap) = job.spec.options.hilbert_cap {
        opts.cap = cap;
    }
    opts
}

pub fn analyze(job: &Job) -> Result<Analysis> {
    let table = character_table(&job.group)?;
    let mut basis = irreducible_invariants(&job.fusion, &table, hilbert_options(job))?;
    if !job.names.basis.is_empty() {
        basis.rename(&job.names.basis)?;
    }
    let mult = structure_constants(&job.fusion, &table, &basis)?;
    let presentation = presentation(&basis.names[1..], &basis.degrees[1..], mult)?;
    let completed_names = if job.names.completed.is_empty() {
        default_completed_names(presentation.rank())
    } else {
        job.names.completed.clone()
    };
    let completed = completed_presentation(&presentation, &completed_names)?;
    Ok(Analysis {
        table,
        basis,
        presentation,
        completed,
    })
}

fn envelope(command: Command, body: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA_VERSION, "command": command.name() });
    if let (Value::Object(map), Value::Object(extra)) = (&mut v, body) {
        map.extend(extra);
    }
    v
}

fn class_labels(g: &FiniteGroup, labels: &ElementLabels) -> Vec<String> {
    let cc = g.conjugacy_classes();
    cc.classes
        .iter()
        .map(|c| labels.simplest(c).to_string())
        .collect()
}

fn matrix_string(m: &IntMat) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

pub fn run(command: Command, job: &Job) -> Result<Report> {
    match command {
        Command::Chartable => chartable(job),
        Command::FusionClasses => fusion_classes(job),
        Command::Saturation => saturation(job),
        Command::Repring => repring(job),
        Command::Ktheory => ktheory(job),
        Command::Spectrum => spectrum(job),
        Command::Twisted => twisted(job),
        Command::Adic => adic(job),
    }
}

fn chartable(job: &Job) -> Result<Report> {
    let g = &job.group;
    let table = character_table(g)?;
    let labels = ElementLabels::new(g);
    let reps = class_labels(g, &labels);
    let cc = g.conjugacy_classes();
    let mut text = format!(
        "group order {}, {} classes, conductor {}\n",
        g.order(),
        cc.len(),
        table.conductor()
    );
    for (i, rep) in reps.iter().enumerate() {
        let r = cc.representative(i);
        writeln!(
            text,
            "class {i}: rep {rep}, size {}, order {}",
            cc.classes[i].len(),
            g.element_order(r)
        )
        .unwrap();
    }
    let mut rows = Vec::new();
    for (i, chi) in table.irreducibles().iter().enumerate() {
        let values: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        writeln!(text, "chi{i}: {}", values.join(", ")).unwrap();
        rows.push(json!({ "degree": chi.degree(), "values": values }));
    }
    let classes: Vec<Value> = (0..cc.len())
        .map(|i| {
            json!({
                "representative": reps[i],
                "size": cc.classes[i].len(),
                "order": g.element_order(cc.representative(i)),
            })
        })
        .collect();
    let json = envelope(
        Command::Chartable,
        json!({
            "order": g.order(),
            "conductor": table.conductor(),
            "classes": classes,
            "characters": rows,
        }),
    );
    Ok(Report {
        command: Command::Chartable,
        text,
        json,
        dot: None,
    })
}

fn fusion_classes(job: &Job) -> Result<Report> {
    let g = &job.group;
    let f = &job.fusion;
    let labels = ElementLabels::new(g);
    let reps = class_labels(g, &labels);
    let ec = f.element_classes();
    let cc = g.conjugacy_classes();
    // F-classes as unions of S-classes
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for class in &ec.classes {
        let mut s_classes: Vec<usize> = class.iter().map(|&x| cc.class_of[x]).collect();
        s_classes.sort_unstable();
        s_classes.dedup();
        blocks.push(s_classes);
    }
    let mut text = format!("{} fusion classes on {} elements\n", ec.len(), g.order());
    let mut out = Vec::new();
    for (i, (class, block)) in ec.classes.iter().zip(&blocks).enumerate() {
        let names: Vec<&str> = block.iter().map(|&c| reps[c].as_str()).collect();
        writeln!(
            text,
            "F{i}: size {}, S-classes {}",
            class.len(),
            names.join(", ")
        )
        .unwrap();
        out.push(json!({ "size": class.len(), "s_classes": names }));
    }
    let json = envelope(
        Command::FusionClasses,
        json!({ "order": g.order(), "classes": out }),
    );
    Ok(Report {
        command: Command::FusionClasses,
        text,
        json,
        dot: None,
    })
}

fn saturation(job: &Job) -> Result<Report> {
    let o = &job.spec.options;
    let family = if o.family.is_empty() {
        None
    } else {
        Some(
            o.family
                .iter()
                .map(|n| job.subgroup(n))
                .collect::<Result<Vec<_>>>()?,
        )
    };
    let opts = SaturationOptions {
        cap: o.saturation_cap.unwrap_or(DEFAULT_SATURATION_CAP),
        extended: o.extended,
        family,
        morphism_cap: o.morphism_cap.unwrap_or(DEFAULT_MORPHISM_CAP),
    };
    let report = job.fusion.check_saturation(&opts)?;
    let mut text = format!(
        "saturated: {}\nsubgroups checked: {}\nmorphisms checked: {}\n",
        if report.ok { "yes" } else { "no" },
        report.subgroups_checked,
        report.morphisms_checked
    );
    for v in &report.violations {
        writeln!(text, "violation: {v}").unwrap();
    }
    let json = envelope(
        Command::Saturation,
        serde_json::to_value(&report).expect("serializable"),
    );
    Ok(Report {
        command: Command::Saturation,
        text,
        json,
        dot: None,
    })
}

fn basis_lines(a: &Analysis, g: &FiniteGroup, labels: &ElementLabels) -> (String, Vec<Value>) {
    let mut text = String::new();
    let mut out = Vec::new();
    let reps: Vec<String> = a
        .basis
        .class_representatives
        .iter()
        .map(|&c| {
            labels
                .simplest(&g.conjugacy_classes().classes[c])
                .to_string()
        })
        .collect();
    writeln!(text, "fusion class representatives: {}", reps.join(", ")).unwrap();
    for i in 0..a.basis.len() {
        let values: Vec<String> = a
            .basis
            .values_on_classes(i)
            .iter()
            .map(|v| v.to_string())
            .collect();
        writeln!(
            text,
            "{}: degree {}, values {}",
            a.basis.names[i],
            a.basis.degrees[i],
            values.join(", ")
        )
        .unwrap();
        out.push(json!({
            "name": a.basis.names[i],
            "degree": a.basis.degrees[i],
            "multiplicities": a.basis.elements[i],
            "values": values,
        }));
    }
    (text, out)
}

fn repring(job: &Job) -> Result<Report> {
    let a = analyze(job)?;
    let labels = ElementLabels::new(&job.group);
    let (mut text, basis) = basis_lines(&a, &job.group, &labels);
    let covering = covering_check(&a.basis, a.table.len());
    writeln!(
        text,
        "covering: {}",
        if covering.covered { "ok" } else { "failed" }
    )
    .unwrap();
    writeln!(text, "{}", a.presentation).unwrap();
    let json = envelope(
        Command::Repring,
        json!({
            "basis": basis,
            "covered": covering.covered,
            "presentation": a.presentation.to_string(),
            "generators": a.presentation.names,
            "relations": a.presentation.relation_strings(),
            "structure_constants": a.presentation.table.c,
        }),
    );
    Ok(Report {
        command: Command::Repring,
        text,
        json,
        dot: None,
    })
}

fn ktheory(job: &Job) -> Result<Report> {
    let a = analyze(job)?;
    let mut text = String::new();
    for (v, (x, d)) in a
        .completed
        .names
        .iter()
        .zip(a.presentation.names.iter().zip(&a.presentation.degrees))
    {
        writeln!(text, "{v} = {x} - {d}").unwrap();
    }
    writeln!(text, "{}", a.completed).unwrap();
    let json = envelope(
        Command::Ktheory,
        json!({
            "presentation": a.completed.to_string(),
            "generators": a.completed.names,
            "shifts": a.presentation.degrees,
            "relations": a.completed.relation_strings(),
        }),
    );
    Ok(Report {
        command: Command::Ktheory,
        text,
        json,
        dot: None,
    })
}

fn spectrum(job: &Job) -> Result<Report> {
    let g = &job.group;
    let p = g.prime().ok_or(Error::NotAPrimePowerGroup(g.order()))?;
    let o = &job.spec.options;
    let primes = if o.primes.is_empty() {
        vec![p]
    } else {
        o.primes.clone()
    };
    let conductor = if o.conductor_order {
        g.order()
    } else {
        g.exponent()
    } as u32;
    let class_count = job.fusion.element_classes().len();
    let poset = prime_symbols(p, conductor, class_count, &primes)?;
    let connected = zariski_connected(&poset);
    let labels = ElementLabels::new(g);
    let ec = job.fusion.element_classes();
    let class_names: Vec<String> = ec
        .classes
        .iter()
        .map(|c| labels.simplest(c).to_string())
        .collect();
    let mut text = format!(
        "p = {p}, conductor {conductor}, {class_count} fusion classes, primes {:?}\n",
        primes
    );
    writeln!(
        text,
        "symbols: {}\nminimal: {}\nheight: {}\nconnected: {}",
        poset.symbols.len(),
        poset.minimal_count(),
        poset.height(),
        if connected { "yes" } else { "no" }
    )
    .unwrap();
    let symbols: Vec<Value> = poset
        .symbols
        .iter()
        .map(|s| json!({ "prime": s.prime.to_string(), "class": class_names[s.fclass] }))
        .collect();
    for s in &poset.symbols {
        writeln!(text, "P[{}, {}]", s.prime, class_names[s.fclass]).unwrap();
    }
    let json = envelope(
        Command::Spectrum,
        json!({
            "p": p,
            "conductor": conductor,
            "primes": primes,
            "symbols": symbols,
            "edges": poset.edges,
            "minimal": poset.minimal_count(),
            "height": poset.height(),
            "connected": connected,
        }),
    );
    Ok(Report {
        command: Command::Spectrum,
        text,
        json,
        dot: Some(poset.to_dot(&class_names)),
    })
}

fn twisted(job: &Job) -> Result<Report> {
    let (e, f_alpha) = job
        .extension
        .as_ref()
        .ok_or_else(|| Error::Invalid("twisted needs an [extension] section".into()))?;
    check_lift(e, f_alpha, &job.fusion)?;
    let a = analyze(job)?;
    let big_table = character_table(&e.big)?;
    let tb = twisted_invariant_basis(e, f_alpha, &big_table, hilbert_options(job))?;
    let tm = module_structure(e, &big_table, &a.basis.characters, &tb)?;
    if !tm.satisfies(&a.presentation) {
        return Err(Error::RelationViolated);
    }
    let cm = completed_module(&tm, &a.presentation.degrees)?;
    let names: Vec<String> = (1..=tb.elements.len()).map(|i| format!("rho{i}")).collect();
    let mut text = format!(
        "extension order {}, A cyclic of order {}\nA-representations: {} of {} irreducibles\n",
        e.big.order(),
        e.a_order(),
        tb.a_representations.len(),
        big_table.len()
    );
    writeln!(text, "twisted basis:").unwrap();
    for (n, d) in names.iter().zip(&tb.degrees) {
        writeln!(text, "  {n}: degree {d}").unwrap();
    }
    writeln!(text, "module: Z<{}>", names.join(", ")).unwrap();
    writeln!(text, "action:").unwrap();
    for (x, m) in a.presentation.names.iter().zip(&tm.matrices) {
        writeln!(text, "  {x}: {}", matrix_string(m)).unwrap();
    }
    let completed = if cm.stabilized {
        let mut parts = Vec::new();
        if cm.free_rank > 0 {
            parts.push(if cm.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", cm.free_rank)
            });
        }
        parts.extend(cm.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            parts.push("0".into());
        }
        parts.join(" + ")
    } else {
        "not stabilized; shifted action below".to_string()
    };
    writeln!(text, "completed module: {completed}").unwrap();
    writeln!(
        text,
        "shifted action: {}",
        if cm.trivial_action {
            "trivial"
        } else {
            "nontrivial"
        }
    )
    .unwrap();
    for (v, m) in a.completed.names.iter().zip(&cm.shifted) {
        writeln!(text, "  {v}: {}", matrix_string(m)).unwrap();
    }
    let json = envelope(
        Command::Twisted,
        json!({
            "extension_order": e.big.order(),
            "a_order": e.a_order(),
            "a_representations": tb.a_representations,
            "basis": names,
            "degrees": tb.degrees,
            "multiplicities": tb.elements,
            "action": a.presentation.names.iter().zip(&tm.matrices)
                .map(|(x, m)| json!({ "generator": x, "matrix": m }))
                .collect::<Vec<_>>(),
            "completed": {
                "stabilized": cm.stabilized,
                "steps": cm.steps,
                "free_rank": cm.free_rank,
                "torsion": cm.torsion,
                "trivial_action": cm.trivial_action,
                "shifted": cm.shifted,
                "summary": completed,
            },
        }),
    );
    Ok(Report {
        command: Command::Twisted,
        text,
        json,
        dot: None,
    })
}

fn adic(job: &Job) -> Result<Report> {
    let a = analyze(job)?;
    let k = job.spec.options.k.unwrap_or(1);
    let rs = representation_ring(&job.group, &a.table)?;
    let report = adic_equivalence_exponent(
        &rs,
        &a.table.degrees(),
        &a.basis.elements,
        &a.basis.degrees,
        k,
    )?;
    let mut text = format!("k = {}\nm = {}\n", report.k, report.m);
    for (j, (rank, torsion)) in report.quotients.iter().enumerate() {
        let t: Vec<String> = torsion.iter().map(i128::to_string).collect();
        writeln!(
            text,
            "R(S)/I(S)^{}: rank {rank}, torsion [{}]",
            j + 1,
            t.join(", ")
        )
        .unwrap();
    }
    let json = envelope(
        Command::Adic,
        json!({
            "k": report.k,
            "m": report.m,
            "quotients": report.quotients.iter()
                .map(|(r, t)| json!({ "rank": r, "torsion": t.iter().map(i128::to_string).collect::<Vec<_>>() }))
                .collect::<Vec<_>>(),
        }),
    );
    Ok(Report {
        command: Command::Adic,
        text,
        json,
        dot: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jobspec::JobSpec;
    use std::path::Path;

    fn job(text: &str) -> Job {
        Job::build(JobSpec::parse(text).unwrap(), Path::new(".")).unwrap()
    }

    const SIGMA3: &str =
        "[group]\ndegree = 3\ngenerators = (1 2 3)\nnames = g\n[fusion]\nhom = g -> g^2\n";

    #[test]
    fn repring_and_ktheory() {
        let j = job(SIGMA3);
        let r = run(Command::Repring, &j).unwrap();
        assert!(r.text.ends_with("Z[X1]/( X1^2 - X1 - 2 )\n"), "{}", r.text);
        let k = run(Command::Ktheory, &j).unwrap();
        assert!(k.text.ends_with("Z[[v1]]/( v1^2 + 3v1 )\n"), "{}", k.text);
        assert_eq!(k.json["schema"], 1);
        assert_eq!(k.json["relations"][0], "v1^2 + 3v1");
    }

    #[test]
    fn trivial_fusion_gives_irr() {
        let j = job("[group]\ndegree = 2\ngenerators = (1 2)\n");
        let r = run(Command::Repring, &j).unwrap();
        assert!(r.text.contains("Z[X1]/( X1^2 - 1 )"), "{}", r.text);
        let c = run(Command::Chartable, &j).unwrap();
        assert!(c.text.contains("chi1: 1, -1"), "{}", c.text);
    }

    #[test]
    fn labels_use_names() {
        let g = crate::group::extraspecial_p3(3).unwrap();
        let l = ElementLabels::new(&g);
        let a = g.named("a").unwrap();
        let b = g.named("b").unwrap();
        assert_eq!(l.label(g.mul(a, g.pow(b, 2))), "a*b^2");
        assert_eq!(l.label(g.identity()), "1");
    }

    #[test]
    fn spectrum_dot_and_counts() {
        let j = job(SIGMA3);
        let r = run(Command::Spectrum, &j).unwrap();
        assert_eq!(r.json["connected"], true);
        assert!(r
            .render(Format::Dot)
            .unwrap()
            .starts_with("digraph spectrum"));
        assert!(run(Command::Repring, &j)
            .unwrap()
            .render(Format::Dot)
            .is_err());
    }

    #[test]
    fn twisted_without_extension() {
        let j = job(SIGMA3);
        assert!(matches!(run(Command::Twisted, &j), Err(Error::Invalid(_))));
    }

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert!("plot".parse::<Command>().is_err());
    }
}
