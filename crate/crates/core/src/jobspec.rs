//! Job files: an INI-like description of a group, a fusion system on it,
//! optional extension data, and command options.
//!
//! ```text
//! [group]
//! degree = 4
//! generators = (1 2)(3 4); (1 3)(2 4)
//! names = x, y
//!
//! [fusion]
//! hom = x, y -> x*y, x
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fusion::{gl2_on_basis, gl2_on_extraspecial, FusionSystem};
use crate::group::{extraspecial_p3, make_hom, FiniteGroup, GroupHom, Subgroup};
use crate::perm::Perm;
use crate::twisted::{central_extension, extension_from_groups, CentralExtension, Cocycle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Permutations {
        degree: usize,
        generators: Vec<String>,
        names: Vec<String>,
    },
    Extraspecial {
        p: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FusionGen {
    /// Domain generated by `domain`, each sent to the matching image.
    Hom {
        domain: Vec<String>,
        images: Vec<String>,
    },
    /// `[[α, β], [γ, ε]]` on the extraspecial group (`on = None`) or on a
    /// rank-2 subgroup with the ordered basis `on`.
    Gl2 {
        matrix: [[i64; 2]; 2],
        on: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionSpec {
    Cocycle {
        path: String,
        modulus: u32,
        transpose: bool,
        /// Lifts `(0, s)` of the base generators, then the central generator.
        names: Vec<String>,
    },
    Group {
        degree: usize,
        generators: Vec<String>,
        names: Vec<String>,
        central: String,
        projection: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Options {
    pub primes: Vec<u64>,
    pub k: Option<usize>,
    pub names_file: Option<String>,
    pub family: Vec<String>,
    pub conductor_order: bool,
    pub hilbert_cap: Option<usize>,
    pub morphism_cap: Option<usize>,
    pub saturation_cap: Option<usize>,
    pub extended: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub group: GroupSpec,
    pub subgroups: Vec<(String, Vec<String>)>,
    pub fusion: Vec<FusionGen>,
    pub extension: Option<ExtensionSpec>,
    pub lift: Vec<FusionGen>,
    pub options: Options,
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    key_col: usize,
    value: &'a str,
    value_col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::parse(line, col, msg)
}

/// Splits on `sep` outside parentheses, trimming pieces.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    if out.len() == 1 && out[0].is_empty() {
        out.clear();
    }
    out
}

fn list(s: &str) -> Vec<String> {
    split_top(s, ',').into_iter().map(str::to_string).collect()
}

fn parse_usize(l: &Line) -> Result<usize> {
    l.value.parse().map_err(|_| {
        err(
            l.number,
            l.value_col,
            format!("`{}` is not a non-negative integer", l.value),
        )
    })
}

fn parse_bool(l: &Line) -> Result<bool> {
    match l.value {
        "true" | "yes" => Ok(true),
        "false" | "no" => Ok(false),
        v => Err(err(
            l.number,
            l.value_col,
            format!("`{v}` is not a boolean"),
        )),
    }
}

fn parse_matrix(s: &str, line: usize, col: usize) -> Result<[[i64; 2]; 2]> {
    let rows: Vec<&str> = s.split(';').map(str::trim).collect();
    let bad = || err(line, col, format!("`{s}` is not a 2×2 matrix `a b; c d`"));
    if rows.len() != 2 {
        return Err(bad());
    }
    let mut m = [[0i64; 2]; 2];
    for (i, row) in rows.iter().enumerate() {
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != 2 {
            return Err(bad());
        }
        for (j, e) in entries.iter().enumerate() {
            m[i][j] = e.parse().map_err(|_| bad())?;
        }
    }
    Ok(m)
}

fn parse_fusion_gen(l: &Line) -> Result<FusionGen> {
    match l.key {
        "hom" => {
            let Some((lhs, rhs)) = l.value.split_once("->") else {
                return Err(err(
                    l.number,
                    l.value_col,
                    "expected `generators -> images`",
                ));
            };
            let domain = list(lhs);
            let images = list(rhs);
            if domain.len() != images.len() || domain.is_empty() {
                return Err(err(
                    l.number,
                    l.value_col,
                    "generator and image lists differ in length",
                ));
            }
            Ok(FusionGen::Hom { domain, images })
        }
        "gl2" => {
            let (mat, on) = match l.value.split_once(" on ") {
                Some((m, on)) => (m, Some(list(on))),
                None => (l.value, None),
            };
            if let Some(on) = &on {
                if on.is_empty() || on.len() > 2 {
                    return Err(err(
                        l.number,
                        l.value_col,
                        "gl2 needs a subgroup name or two basis elements",
                    ));
                }
            }
            Ok(FusionGen::Gl2 {
                matrix: parse_matrix(mat.trim(), l.number, l.value_col)?,
                on,
            })
        }
        k => Err(err(l.number, l.key_col, format!("unknown key `{k}`"))),
    }
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<JobSpec> {
        let mut section: Option<&str> = None;
        let mut group_lines: Vec<Line> = Vec::new();
        let mut subgroups = Vec::new();
        let mut fusion = Vec::new();
        let mut extension_lines: Vec<Line> = Vec::new();
        let mut has_extension = false;
        let mut lift = Vec::new();
        let mut options = Options::default();
        let mut seen_sections: Vec<&str> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let number = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let indent = content.len() - content.trim_start().len();
            if let Some(name) = trimmed.strip_prefix('[') {
                let Some(name) = name.strip_suffix(']') else {
                    return Err(err(number, indent + 1, "unterminated section header"));
                };
                let name = name.trim();
                if ![
                    "group",
                    "subgroups",
                    "fusion",
                    "extension",
                    "lift",
                    "options",
                ]
                .contains(&name)
                {
                    return Err(err(number, indent + 2, format!("unknown section `{name}`")));
                }
                if seen_sections.contains(&name) {
                    return Err(err(
                        number,
                        indent + 2,
                        format!("duplicate section `{name}`"),
                    ));
                }
                seen_sections.push(name);
                if name == "extension" {
                    has_extension = true;
                }
                section = Some(name);
                continue;
            }
            let Some(eq) = content.find('=') else {
                return Err(err(number, indent + 1, "expected `key = value`"));
            };
            let key = content[..eq].trim();
            let after = &content[eq + 1..];
            let value = after.trim();
            let value_col = eq + 2 + (after.len() - after.trim_start().len());
            let line = Line {
                number,
                key,
                key_col: indent + 1,
                value,
                value_col,
            };
            match section {
                None => return Err(err(number, indent + 1, "key outside of a section")),
                Some("group") => group_lines.push(line),
                Some("subgroups") => {
                    let members = list(value);
                    if members.is_empty() {
                        return Err(err(number, value_col, "empty generator list"));
                    }
                    subgroups.push((key.to_string(), members));
                }
                Some("fusion") => fusion.push(parse_fusion_gen(&line)?),
                Some("lift") => lift.push(parse_fusion_gen(&line)?),
                Some("extension") => extension_lines.push(line),
                Some("options") => match key {
                    "primes" => {
                        options.primes = list(value)
                            .iter()
                            .map(|p| {
                                p.parse().map_err(|_| {
                                    err(number, value_col, format!("`{p}` is not a prime"))
                                })
                            })
                            .collect::<Result<_>>()?
                    }
                    "k" => options.k = Some(parse_usize(&line)?),
                    "names" => options.names_file = Some(value.to_string()),
                    "family" => options.family = list(value),
                    "conductor" => {
                        options.conductor_order = match value {
                            "exponent" => false,
                            "order" => true,
                            v => {
                                return Err(err(
                                    number,
                                    value_col,
                                    format!("conductor must be `exponent` or `order`, got `{v}`"),
                                ))
                            }
                        }
                    }
                    "hilbert_cap" => options.hilbert_cap = Some(parse_usize(&line)?),
                    "morphism_cap" => options.morphism_cap = Some(parse_usize(&line)?),
                    "saturation_cap" => options.saturation_cap = Some(parse_usize(&line)?),
                    "extended" => options.extended = parse_bool(&line)?,
                    k => return Err(err(number, indent + 1, format!("unknown key `{k}`"))),
                },
                Some(_) => unreachable!(),
            }
        }
        let group = parse_group(&group_lines)?;
        let extension = if has_extension {
            Some(parse_extension(&extension_lines)?)
        } else {
            None
        };
        if !lift.is_empty() && extension.is_none() {
            return Err(err(1, 1, "a [lift] section needs an [extension] section"));
        }
        Ok(JobSpec {
            group,
            subgroups,
            fusion,
            extension,
            lift,
            options,
        })
    }

    pub fn load(path: &Path) -> Result<(JobSpec, PathBuf)> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok((JobSpec::parse(&text)?, dir))
    }
}

fn find<'a>(lines: &'a [Line<'a>], key: &str) -> Option<&'a Line<'a>> {
    lines.iter().find(|l| l.key == key)
}

fn check_keys(lines: &[Line], allowed: &[&str]) -> Result<()> {
    for l in lines {
        if !allowed.contains(&l.key) {
            return Err(err(l.number, l.key_col, format!("unknown key `{}`", l.key)));
        }
        if lines.iter().filter(|m| m.key == l.key).count() > 1 {
            return Err(err(
                l.number,
                l.key_col,
                format!("duplicate key `{}`", l.key),
            ));
        }
    }
    Ok(())
}

fn parse_group(lines: &[Line]) -> Result<GroupSpec> {
    if let Some(c) = find(lines, "constructor") {
        check_keys(lines, &["constructor"])?;
        let mut parts = c.value.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some("extraspecial_p3"), Some(arg), None) => {
                let p = arg
                    .strip_prefix("p=")
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| {
                        err(
                            c.number,
                            c.value_col,
                            "expected `extraspecial_p3 p=<prime>`",
                        )
                    })?;
                Ok(GroupSpec::Extraspecial { p })
            }
            _ => Err(err(
                c.number,
                c.value_col,
                format!("unknown constructor `{}`", c.value),
            )),
        }
    } else {
        check_keys(lines, &["degree", "generators", "names"])?;
        let Some(d) = find(lines, "degree") else {
            return Err(err(
                lines.first().map_or(1, |l| l.number),
                1,
                "[group] needs `degree` or `constructor`",
            ));
        };
        let degree = parse_usize(d)?;
        let generators: Vec<String> = find(lines, "generators")
            .map(|l| {
                split_top(l.value, ';')
                    .into_iter()
                    .map(str::to_string)
                    .collect()
            })
            .unwrap_or_default();
        if let Some(l) = find(lines, "generators") {
            for g in &generators {
                Perm::parse_cycles(g, degree)
                    .map_err(|e| err(l.number, l.value_col, e.to_string()))?;
            }
        }
        let names = find(lines, "names")
            .map(|l| list(l.value))
            .unwrap_or_default();
        if !names.is_empty() && names.len() != generators.len() {
            let l = find(lines, "names").expect("present");
            return Err(err(
                l.number,
                l.value_col,
                "one name per generator is required",
            ));
        }
        Ok(GroupSpec::Permutations {
            degree,
            generators,
            names,
        })
    }
}

fn parse_extension(lines: &[Line]) -> Result<ExtensionSpec> {
    if let Some(c) = find(lines, "cocycle") {
        check_keys(lines, &["cocycle", "modulus", "transpose", "names"])?;
        let modulus = find(lines, "modulus")
            .map(parse_usize)
            .transpose()?
            .ok_or_else(|| err(c.number, 1, "cocycle needs `modulus`"))?
            as u32;
        let transpose = find(lines, "transpose")
            .map(parse_bool)
            .transpose()?
            .unwrap_or(false);
        let names = find(lines, "names")
            .map(|l| list(l.value))
            .unwrap_or_default();
        Ok(ExtensionSpec::Cocycle {
            path: c.value.to_string(),
            modulus,
            transpose,
            names,
        })
    } else {
        check_keys(
            lines,
            &["degree", "generators", "names", "central", "projection"],
        )?;
        let need = |k: &str| {
            find(lines, k).ok_or_else(|| {
                err(
                    lines.first().map_or(1, |l| l.number),
                    1,
                    format!("[extension] needs `{k}`"),
                )
            })
        };
        let d = need("degree")?;
        let degree = parse_usize(d)?;
        let g = need("generators")?;
        let generators: Vec<String> = split_top(g.value, ';')
            .into_iter()
            .map(str::to_string)
            .collect();
        for p in &generators {
            Perm::parse_cycles(p, degree).map_err(|e| err(g.number, g.value_col, e.to_string()))?;
        }
        let names = find(lines, "names")
            .map(|l| list(l.value))
            .unwrap_or_default();
        let projection = list(need("projection")?.value);
        if projection.len() != generators.len() {
            let l = need("projection")?;
            return Err(err(
                l.number,
                l.value_col,
                "one projection image per generator is required",
            ));
        }
        Ok(ExtensionSpec::Group {
            degree,
            generators,
            names,
            central: need("central")?.value.to_string(),
            projection,
        })
    }
}

fn write_gen(f: &mut fmt::Formatter<'_>, g: &FusionGen) -> fmt::Result {
    match g {
        FusionGen::Hom { domain, images } => {
            writeln!(f, "hom = {} -> {}", domain.join(", "), images.join(", "))
        }
        FusionGen::Gl2 { matrix: m, on } => {
            write!(f, "gl2 = {} {}; {} {}", m[0][0], m[0][1], m[1][0], m[1][1])?;
            if let Some(on) = on {
                write!(f, " on {}", on.join(", "))?;
            }
            writeln!(f)
        }
    }
}

impl fmt::Display for JobSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[group]")?;
        match &self.group {
            GroupSpec::Extraspecial { p } => writeln!(f, "constructor = extraspecial_p3 p={p}")?,
            GroupSpec::Permutations {
                degree,
                generators,
                names,
            } => {
                writeln!(f, "degree = {degree}")?;
                if !generators.is_empty() {
                    writeln!(f, "generators = {}", generators.join("; "))?;
                }
                if !names.is_empty() {
                    writeln!(f, "names = {}", names.join(", "))?;
                }
            }
        }
        if !self.subgroups.is_empty() {
            writeln!(f, "\n[subgroups]")?;
            for (name, members) in &self.subgroups {
                writeln!(f, "{name} = {}", members.join(", "))?;
            }
        }
        if !self.fusion.is_empty() {
            writeln!(f, "\n[fusion]")?;
            for g in &self.fusion {
                write_gen(f, g)?;
            }
        }
        if let Some(ext) = &self.extension {
            writeln!(f, "\n[extension]")?;
            match ext {
                ExtensionSpec::Cocycle {
                    path,
                    modulus,
                    transpose,
                    names,
                } => {
                    writeln!(f, "cocycle = {path}")?;
                    writeln!(f, "modulus = {modulus}")?;
                    if *transpose {
                        writeln!(f, "transpose = true")?;
                    }
                    if !names.is_empty() {
                        writeln!(f, "names = {}", names.join(", "))?;
                    }
                }
                ExtensionSpec::Group {
                    degree,
                    generators,
                    names,
                    central,
                    projection,
                } => {
                    writeln!(f, "degree = {degree}")?;
                    writeln!(f, "generators = {}", generators.join("; "))?;
                    if !names.is_empty() {
                        writeln!(f, "names = {}", names.join(", "))?;
                    }
                    writeln!(f, "central = {central}")?;
                    writeln!(f, "projection = {}", projection.join(", "))?;
                }
            }
        }
        if !self.lift.is_empty() {
            writeln!(f, "\n[lift]")?;
            for g in &self.lift {
                write_gen(f, g)?;
            }
        }
        let o = &self.options;
        if *o != Options::default() {
            writeln!(f, "\n[options]")?;
            if !o.primes.is_empty() {
                let p: Vec<String> = o.primes.iter().map(u64::to_string).collect();
                writeln!(f, "primes = {}", p.join(", "))?;
            }
            if let Some(k) = o.k {
                writeln!(f, "k = {k}")?;
            }
            if let Some(n) = &o.names_file {
                writeln!(f, "names = {n}")?;
            }
            if !o.family.is_empty() {
                writeln!(f, "family = {}", o.family.join(", "))?;
            }
            if o.conductor_order {
                writeln!(f, "conductor = order")?;
            }
            for (key, v) in [
                ("hilbert_cap", o.hilbert_cap),
                ("morphism_cap", o.morphism_cap),
                ("saturation_cap", o.saturation_cap),
            ] {
                if let Some(v) = v {
                    writeln!(f, "{key} = {v}")?;
                }
            }
            if o.extended {
                writeln!(f, "extended = true")?;
            }
        }
        Ok(())
    }
}

/// Evaluates `1`, `name`, `name^k`, a cycle literal, or a `*`-product of
/// these.
pub fn eval_element(g: &FiniteGroup, expr: &str) -> Result<usize> {
    let expr = expr.trim();
    if expr == "1" {
        return Ok(g.identity());
    }
    let mut acc = g.identity();
    for factor in split_top(expr, '*') {
        if factor.is_empty() {
            return Err(Error::UnknownName(expr.to_string()));
        }
        let x = if factor.starts_with('(') {
            let p = Perm::parse_cycles(factor, g.degree())?;
            g.index_of(&p)
                .ok_or_else(|| Error::Invalid(format!("{factor} is not in the group")))?
        } else {
            let (name, power) = match factor.split_once('^') {
                Some((n, k)) => (
                    n.trim(),
                    k.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Invalid(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let base = g
                .named(name)
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            g.pow(base, power)
        };
        acc = g.mul(acc, x);
    }
    Ok(acc)
}

/// A validated job: groups, fusion systems and extension data.
pub struct Job {
    pub spec: JobSpec,
    pub group: Arc<FiniteGroup>,
    pub subgroups: Vec<(String, Subgroup)>,
    pub fusion: FusionSystem,
    pub extension: Option<(CentralExtension, FusionSystem)>,
    pub names: NameMap,
}

fn build_gens(
    g: &FiniteGroup,
    subgroups: &[(String, Subgroup)],
    gens: &[FusionGen],
) -> Result<Vec<GroupHom>> {
    let mut out = Vec::new();
    for gen in gens {
        match gen {
            FusionGen::Hom { domain, images } => {
                let d: Vec<usize> = domain
                    .iter()
                    .map(|x| eval_element(g, x))
                    .collect::<Result<_>>()?;
                let i: Vec<usize> = images
                    .iter()
                    .map(|x| eval_element(g, x))
                    .collect::<Result<_>>()?;
                let dom = g.subgroup_generated(&d);
                // images are given for `d`; re-express on the subgroup's generators
                let hom = hom_on_listed(g, &dom, &d, &i)?;
                out.push(hom);
            }
            FusionGen::Gl2 { matrix, on } => match on {
                None => out.push(gl2_on_extraspecial(g, *matrix)?),
                Some(basis) => {
                    let resolved: Vec<usize> = if basis.len() == 1 {
                        let (_, h) = subgroups
                            .iter()
                            .find(|(n, _)| n == &basis[0])
                            .ok_or_else(|| Error::UnknownName(basis[0].clone()))?;
                        h.generators().to_vec()
                    } else {
                        basis
                            .iter()
                            .map(|x| eval_element(g, x))
                            .collect::<Result<_>>()?
                    };
                    if resolved.len() != 2 {
                        return Err(Error::Invalid("gl2 needs a basis of two elements".into()));
                    }
                    out.push(gl2_on_basis(g, resolved[0], resolved[1], *matrix)?);
                }
            },
        }
    }
    Ok(out)
}

/// A homomorphism on `dom` given by images of an arbitrary generating list.
fn hom_on_listed(
    g: &FiniteGroup,
    dom: &Subgroup,
    listed: &[usize],
    images: &[usize],
) -> Result<GroupHom> {
    // words for the subgroup generators in terms of the listed elements
    let mut word_image: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    word_image.insert(g.identity(), g.identity());
    let mut queue = vec![g.identity()];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        let ix = word_image[&x];
        for (&l, &im) in listed.iter().zip(images) {
            let y = g.mul(l, x);
            let iy = g.mul(im, ix);
            match word_image.get(&y) {
                Some(&prev) if prev != iy => {
                    return Err(Error::NotAHomomorphism("images are inconsistent".into()));
                }
                Some(_) => {}
                None => {
                    word_image.insert(y, iy);
                    queue.push(y);
                }
            }
        }
        k += 1;
    }
    let gen_images: Vec<usize> = dom.generators().iter().map(|x| word_image[x]).collect();
    let hom = make_hom(g, dom, &gen_images, g, true)?;
    for (&l, &im) in listed.iter().zip(images) {
        if hom.apply(l) != Some(im) {
            return Err(Error::NotAHomomorphism("images are inconsistent".into()));
        }
    }
    Ok(hom)
}

fn build_perm_group(
    degree: usize,
    generators: &[String],
    names: &[String],
    cap: usize,
) -> Result<FiniteGroup> {
    let perms: Vec<Perm> = generators
        .iter()
        .map(|s| Perm::parse_cycles(s, degree))
        .collect::<Result<_>>()?;
    let mut g = FiniteGroup::build_with_cap(degree.max(1), perms.clone(), cap)?;
    for (name, p) in names.iter().zip(&perms) {
        let x = g.index_of(p).expect("generator is an element");
        g.set_name(name, x);
    }
    Ok(g)
}

impl Job {
    pub fn build(spec: JobSpec, base_dir: &Path) -> Result<Job> {
        let group = match &spec.group {
            GroupSpec::Extraspecial { p } => extraspecial_p3(*p)?,
            GroupSpec::Permutations {
                degree,
                generators,
                names,
            } => build_perm_group(*degree, generators, names, crate::group::DEFAULT_ORDER_CAP)?,
        };
        let group = Arc::new(group);
        let mut subgroups = Vec::new();
        for (name, members) in &spec.subgroups {
            let gens: Vec<usize> = members
                .iter()
                .map(|x| eval_element(&group, x))
                .collect::<Result<_>>()?;
            subgroups.push((name.clone(), group.subgroup_generated(&gens)));
        }
        let gens = build_gens(&group, &subgroups, &spec.fusion)?;
        let fusion = FusionSystem::new(Arc::clone(&group), gens)?;
        let extension = match &spec.extension {
            None => None,
            Some(ext) => {
                let e = match ext {
                    ExtensionSpec::Cocycle {
                        path,
                        modulus,
                        transpose,
                        names,
                    } => {
                        let file = base_dir.join(path);
                        let text = std::fs::read_to_string(&file)
                            .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
                        let mut alpha = parse_cocycle_csv(&text, *modulus, group.order())?;
                        if *transpose {
                            alpha = alpha.transposed();
                        }
                        let mut e = central_extension(Arc::clone(&group), &alpha)?;
                        if !names.is_empty() {
                            if names.len() != group.generators().len() + 1 {
                                return Err(Error::Invalid(
                                    "extension names: one per base generator plus the central generator".into(),
                                ));
                            }
                            let section = e.section.clone().expect("built from a cocycle");
                            let mut big = (*e.big).clone();
                            for (name, &s) in names.iter().zip(group.generators()) {
                                big.set_name(name, section[s]);
                            }
                            big.set_name(names.last().expect("nonempty"), e.a_generator);
                            e.big = Arc::new(big);
                        }
                        e
                    }
                    ExtensionSpec::Group {
                        degree,
                        generators,
                        names,
                        central,
                        projection,
                    } => {
                        let big = build_perm_group(
                            *degree,
                            generators,
                            names,
                            crate::group::DEFAULT_ORDER_CAP,
                        )?;
                        let z = eval_element(&big, central)?;
                        let perms: Vec<Perm> = generators
                            .iter()
                            .map(|s| Perm::parse_cycles(s, *degree))
                            .collect::<Result<_>>()?;
                        let listed: Vec<usize> = perms
                            .iter()
                            .map(|p| big.index_of(p).expect("element"))
                            .collect();
                        let imgs: Vec<usize> = projection
                            .iter()
                            .map(|x| eval_element(&group, x))
                            .collect::<Result<_>>()?;
                        // generators of `big` as stored may differ from the listed ones
                        let gen_images: Vec<usize> = big
                            .generators()
                            .iter()
                            .map(|x| {
                                listed
                                    .iter()
                                    .position(|l| l == x)
                                    .map(|i| imgs[i])
                                    .ok_or_else(|| {
                                        Error::Invalid("generator list was reduced".into())
                                    })
                            })
                            .collect::<Result<_>>()?;
                        extension_from_groups(Arc::new(big), Arc::clone(&group), z, &gen_images)?
                    }
                };
                let lift_gens = build_gens(&e.big, &[], &spec.lift)?;
                let f_alpha = FusionSystem::new(Arc::clone(&e.big), lift_gens)?;
                Some((e, f_alpha))
            }
        };
        let names = match &spec.options.names_file {
            None => NameMap::default(),
            Some(path) => {
                let file = base_dir.join(path);
                let text = std::fs::read_to_string(&file)
                    .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
                NameMap::parse(&text)?
            }
        };
        Ok(Job {
            spec,
            group,
            subgroups,
            fusion,
            extension,
            names,
        })
    }

    pub fn subgroup(&self, name: &str) -> Result<Subgroup> {
        if name == "S" {
            return Ok(self.group.whole());
        }
        self.subgroups
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, h)| h.clone())
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }
}

/// CSV of residues, rows and columns in element order.
pub fn parse_cocycle_csv(text: &str, modulus: u32, order: usize) -> Result<Cocycle> {
    let mut table = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 1;
        for cell in line.split(',') {
            let v: i64 = cell
                .trim()
                .parse()
                .map_err(|_| err(i + 1, col, format!("`{}` is not an integer", cell.trim())))?;
            row.push(v.rem_euclid(modulus.max(1) as i64) as u32);
            col += cell.len() + 1;
        }
        if row.len() != order {
            return Err(err(
                i + 1,
                1,
                format!("expected {order} entries, got {}", row.len()),
            ));
        }
        table.push(row);
    }
    if table.len() != order {
        return Err(err(
            text.lines().count().max(1),
            1,
            format!("expected {order} rows, got {}", table.len()),
        ));
    }
    Ok(Cocycle::new(modulus, table))
}

/// `.names` files: `basis = A, B` and `completed = z, w`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NameMap {
    pub basis: Vec<String>,
    pub completed: Vec<String>,
}

impl NameMap {
    pub fn parse(text: &str) -> Result<NameMap> {
        let mut map = NameMap::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(err(i + 1, 1, "expected `key = names`"));
            };
            match k.trim() {
                "basis" => map.basis = list(v),
                "completed" => map.completed = list(v),
                other => return Err(err(i + 1, 1, format!("unknown key `{other}`"))),
            }
        }
        Ok(map)
    }
}
