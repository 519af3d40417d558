//! JSON file formats. Every loader verifies the invariants of the value it
//! builds, and every writer emits the canonical form: sorted keys, two-space
//! indentation, a trailing newline.
//!
//! | kind       | fields                                                              |
//! |------------|---------------------------------------------------------------------|
//! | `group`    | `name`, `elements`, `table` (row `a`, column `b` holds `a·b`)        |
//! | `complex`  | `name`, `max_dim`, `generators` (dimension to names), `faces`       |
//! | `hom`      | `source`, `target` (paths), `images` (element name to element name) |
//! | `quotient` | `group` (path), `images` (edge generator name to element name)      |
//! | `action`   | `group` (path), `maps` (element name to per-dimension image names)  |
//! | `cover`    | `complex`, `quotient` (paths)                                       |
//! | `case`     | `name`, `complex`, `quotient?`, `action`, `p?`, `truncation`, `check_depth`, `theorems`, `expect?` |
//!
//! `faces` maps every generator of positive dimension to its faces, each a
//! record `{degeneracies, generator}` with a strictly decreasing degeneracy
//! list. Paths inside files are relative to the file that names them.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::covering::{build_cover, RegularCover};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupHom};
use crate::operator::{GenRef, SimplexRef};
use crate::pi_one::{pi1_presentation, QuotientMap};
use crate::sset::{validate, SSetPresentation, SimplicialAction, SimplicialAutomorphism};
use crate::theorems::{Outcome, TheoremCase, TheoremKind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub kind: String,
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomFile {
    pub kind: String,
    pub source: String,
    pub target: String,
    pub images: BTreeMap<String, String>,
}

/// A face: `s_{i_1} ... s_{i_k}` applied to a named generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceEntry {
    pub degeneracies: Vec<usize>,
    pub generator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub kind: String,
    pub name: String,
    pub max_dim: usize,
    /// Keyed by the dimension in decimal.
    pub generators: BTreeMap<String, Vec<String>>,
    pub faces: BTreeMap<String, Vec<FaceEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientFile {
    pub kind: String,
    pub group: String,
    pub images: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub kind: String,
    pub group: String,
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFile {
    pub kind: String,
    pub complex: String,
    pub quotient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    pub kind: String,
    pub name: String,
    pub complex: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    pub action: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub truncation: usize,
    pub check_depth: usize,
    pub theorems: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expect: BTreeMap<String, String>,
}

/// Canonical text of a JSON value.
pub fn canonical_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn to_canonical<T: Serialize>(file: &T) -> String {
    canonical_string(&serde_json::to_value(file).expect("file structs serialize"))
}

pub fn write_canonical<T: Serialize>(path: &Path, file: &T) -> Result<()> {
    fs::write(path, to_canonical(file)).map_err(|e| io_error(path, e))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

fn schema(path: &Path, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.display().to_string(),
        message: message.into(),
    }
}

/// Reads a file as JSON. Syntax errors carry line and column.
pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// The `kind` field of a JSON object.
pub fn kind_of(path: &Path, value: &Value) -> Result<String> {
    value
        .get("kind")
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| schema(path, "missing string field `kind`"))
}

fn decode<T: DeserializeOwned>(path: &Path, value: Value, kind: &str) -> Result<T> {
    let found = kind_of(path, &value)?;
    if found != kind {
        return Err(schema(path, format!("expected kind `{kind}`, found `{found}`")));
    }
    serde_json::from_value(value).map_err(|e| schema(path, e.to_string()))
}

pub fn read_file<T: DeserializeOwned>(path: &Path, kind: &str) -> Result<T> {
    decode(path, read_json(path)?, kind)
}

fn resolve(base: &Path, reference: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(reference)
}

pub fn group_file(g: &FiniteGroup) -> GroupFile {
    GroupFile {
        kind: "group".into(),
        name: g.name().to_string(),
        elements: g.elements().to_vec(),
        table: g.table().to_vec(),
    }
}

pub fn group_from_file(f: &GroupFile) -> Result<FiniteGroup> {
    FiniteGroup::from_table(f.name.clone(), f.elements.clone(), f.table.clone())
}

/// `source` and `target` are the paths of the two group files.
pub fn hom_file(f: &GroupHom, source: &str, target: &str) -> HomFile {
    HomFile {
        kind: "hom".into(),
        source: source.to_string(),
        target: target.to_string(),
        images: (0..f.source().order())
            .map(|a| (f.source().element_name(a).to_string(), f.target().element_name(f.apply(a)).to_string()))
            .collect(),
    }
}

pub fn hom_from_file(path: &Path, f: &HomFile) -> Result<GroupHom> {
    let source = load_group(&resolve(path, &f.source))?;
    let target = load_group(&resolve(path, &f.target))?;
    if f.images.len() != source.order() {
        return Err(schema(path, format!("expected {} images, found {}", source.order(), f.images.len())));
    }
    let images = source
        .elements()
        .iter()
        .map(|e| {
            let name = f.images.get(e).ok_or_else(|| schema(path, format!("no image for element `{e}`")))?;
            target.find(name).ok_or_else(|| schema(path, format!("unknown element `{name}`")))
        })
        .collect::<Result<_>>()?;
    GroupHom::new(source, target, images)
}

pub fn complex_file(x: &SSetPresentation) -> ComplexFile {
    let mut faces = BTreeMap::new();
    for g in x.all_generators().filter(|g| g.dim > 0) {
        let entries = x
            .generator_faces(g)
            .iter()
            .map(|f| FaceEntry {
                degeneracies: f.degeneracies().to_vec(),
                generator: x.generator_name(f.generator()).to_string(),
            })
            .collect();
        faces.insert(x.generator_name(g).to_string(), entries);
    }
    ComplexFile {
        kind: "complex".into(),
        name: x.name().to_string(),
        max_dim: x.max_dim(),
        generators: (0..=x.max_dim()).map(|n| (n.to_string(), x.generators(n).to_vec())).collect(),
        faces,
    }
}

/// Builds the presentation and checks the simplicial identities on it.
pub fn complex_from_file(path: &Path, f: &ComplexFile) -> Result<SSetPresentation> {
    let expected: Vec<String> = (0..=f.max_dim).map(|n| n.to_string()).collect();
    let mut keys: Vec<&String> = f.generators.keys().collect();
    keys.sort_by_key(|k| k.parse::<usize>().unwrap_or(usize::MAX));
    if keys != expected.iter().collect::<Vec<_>>() {
        return Err(schema(path, format!("max_dim {} needs generator lists for dimensions 0..={}", f.max_dim, f.max_dim)));
    }
    let generators: Vec<Vec<String>> = expected.iter().map(|k| f.generators[k].clone()).collect();
    let mut names = HashMap::new();
    for (n, gs) in generators.iter().enumerate() {
        for (i, g) in gs.iter().enumerate() {
            names.insert(g.as_str(), GenRef::new(n, i));
        }
    }
    if let Some(unknown) = f.faces.keys().find(|k| !names.contains_key(k.as_str())) {
        return Err(schema(path, format!("faces given for unknown generator `{unknown}`")));
    }
    let faces = generators
        .iter()
        .enumerate()
        .map(|(n, gs)| {
            gs.iter()
                .map(|g| {
                    let entries = match f.faces.get(g) {
                        Some(e) => e.as_slice(),
                        None if n == 0 => &[],
                        None => return Err(schema(path, format!("no faces for generator `{g}`"))),
                    };
                    entries
                        .iter()
                        .map(|e| {
                            let target = *names
                                .get(e.generator.as_str())
                                .ok_or_else(|| schema(path, format!("face of `{g}` names unknown generator `{}`", e.generator)))?;
                            SimplexRef::new(e.degeneracies.clone(), target).map_err(|m| schema(path, format!("face of `{g}`: {m}")))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let x = SSetPresentation::new(f.name.clone(), f.max_dim, generators, faces)?;
    let report = validate(&x);
    if !report.passed() {
        return Err(Error::invariant("simplicial identity ∂_i ∂_j = ∂_(j-1) ∂_i", report.violations.join("; ")));
    }
    Ok(x)
}

/// `group` is the path of the target group's file.
pub fn quotient_file(q: &QuotientMap, group: &str) -> QuotientFile {
    let g = q.group();
    QuotientFile {
        kind: "quotient".into(),
        group: group.to_string(),
        images: q
            .presentation()
            .generators()
            .iter()
            .zip(q.images())
            .map(|(e, &a)| (e.clone(), g.element_name(a).to_string()))
            .collect(),
    }
}

pub fn quotient_from_file(path: &Path, f: &QuotientFile, complex: &SSetPresentation) -> Result<QuotientMap> {
    let group = load_group(&resolve(path, &f.group))?;
    let pi = pi1_presentation(complex)?;
    if f.images.len() != pi.generators().len() {
        return Err(schema(path, format!("expected {} edge images, found {}", pi.generators().len(), f.images.len())));
    }
    let images = pi
        .generators()
        .iter()
        .map(|e| {
            let name = f.images.get(e).ok_or_else(|| schema(path, format!("no image for edge `{e}`")))?;
            group.find(name).ok_or_else(|| schema(path, format!("unknown element `{name}`")))
        })
        .collect::<Result<_>>()?;
    QuotientMap::new(pi, group, images)
}

/// `group` is the path of the acting group's file.
pub fn action_file(x: &SSetPresentation, a: &SimplicialAction, group: &str) -> ActionFile {
    let g = a.group();
    ActionFile {
        kind: "action".into(),
        group: group.to_string(),
        maps: (0..g.order())
            .map(|e| {
                let m = a.automorphism(e);
                let images = m
                    .maps()
                    .iter()
                    .enumerate()
                    .map(|(n, row)| row.iter().map(|&t| x.generator_name(GenRef::new(n, t)).to_string()).collect())
                    .collect();
                (g.element_name(e).to_string(), images)
            })
            .collect(),
    }
}

pub fn action_from_file(path: &Path, f: &ActionFile, x: &SSetPresentation) -> Result<SimplicialAction> {
    let group = load_group(&resolve(path, &f.group))?;
    if f.maps.len() != group.order() {
        return Err(schema(path, format!("expected {} maps, found {}", group.order(), f.maps.len())));
    }
    let maps = group
        .elements()
        .iter()
        .map(|e| {
            let rows = f.maps.get(e).ok_or_else(|| schema(path, format!("no map for element `{e}`")))?;
            if rows.len() != x.max_dim() + 1 {
                return Err(schema(path, format!("map of `{e}` has {} dimensions, expected {}", rows.len(), x.max_dim() + 1)));
            }
            let maps = rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    row.iter()
                        .map(|name| match x.find(name) {
                            Some(g) if g.dim == n => Ok(g.index),
                            _ => Err(schema(path, format!("`{name}` is not a generator of dimension {n}"))),
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            SimplicialAutomorphism::new(x, maps)
        })
        .collect::<Result<_>>()?;
    SimplicialAction::new(x, &group, maps)
}

pub fn load_group(path: &Path) -> Result<FiniteGroup> {
    group_from_file(&read_file(path, "group")?)
}

pub fn load_hom(path: &Path) -> Result<GroupHom> {
    hom_from_file(path, &read_file(path, "hom")?)
}

pub fn load_complex(path: &Path) -> Result<SSetPresentation> {
    complex_from_file(path, &read_file(path, "complex")?)
}

pub fn load_quotient(path: &Path, complex: &SSetPresentation) -> Result<QuotientMap> {
    quotient_from_file(path, &read_file(path, "quotient")?, complex)
}

pub fn load_action(path: &Path, complex: &SSetPresentation) -> Result<SimplicialAction> {
    action_from_file(path, &read_file(path, "action")?, complex)
}

pub fn load_cover(path: &Path) -> Result<RegularCover> {
    let f: CoverFile = read_file(path, "cover")?;
    let complex = load_complex(&resolve(path, &f.complex))?;
    let q = load_quotient(&resolve(path, &f.quotient), &complex)?;
    build_cover(&complex, &q)
}

pub fn load_case(path: &Path) -> Result<TheoremCase> {
    let f: CaseFile = read_file(path, "case")?;
    let complex = load_complex(&resolve(path, &f.complex))?;
    let quotient = f.quotient.as_ref().map(|q| load_quotient(&resolve(path, q), &complex)).transpose()?;
    let action = load_action(&resolve(path, &f.action), &complex)?;
    if f.truncation > complex.max_dim() {
        return Err(schema(path, format!("truncation {} exceeds that of the complex, {}", f.truncation, complex.max_dim())));
    }
    let theorems: Vec<TheoremKind> = f
        .theorems
        .iter()
        .map(|t| t.parse().map_err(|_| schema(path, format!("unknown theorem `{t}`"))))
        .collect::<Result<_>>()?;
    let mut case = TheoremCase::new(f.name.clone(), &complex, quotient, &action, f.truncation, f.check_depth)
        .map_err(|e| schema(path, e.to_string()))?
        .with_theorems(&theorems);
    if let Some(p) = f.p {
        case = case.with_prime(p);
    }
    for (k, o) in &f.expect {
        let kind: TheoremKind = k.parse().map_err(|_| schema(path, format!("unknown theorem `{k}`")))?;
        let outcome: Outcome = o.parse().map_err(|_| schema(path, format!("unknown outcome `{o}`")))?;
        case = case.expecting(kind, outcome);
    }
    Ok(case)
}

/// A value loaded and verified from a file.
#[derive(Clone, Debug)]
pub enum Loaded {
    Group(FiniteGroup),
    Hom(GroupHom),
    Complex(SSetPresentation),
    Quotient(QuotientMap),
    Action(SimplicialAction),
    Cover(Box<RegularCover>),
    Case(Box<TheoremCase>),
}

impl Loaded {
    pub fn describe(&self) -> String {
        match self {
            Loaded::Group(g) => format!("group {} of order {}", g.name(), g.order()),
            Loaded::Hom(f) => format!("homomorphism {} -> {} with kernel of order {}", f.source().name(), f.target().name(), f.kernel().len()),
            Loaded::Complex(x) => {
                let counts: Vec<String> = (0..=x.max_dim()).map(|n| x.generator_count(n).to_string()).collect();
                format!("complex `{}` with generator counts [{}]", x.name(), counts.join(", "))
            }
            Loaded::Quotient(q) => format!("quotient onto {} of {} edge generators", q.group().name(), q.images().len()),
            Loaded::Action(a) => format!("action of {}", a.group().name()),
            Loaded::Cover(c) => format!("cover `{}`", c.total().name()),
            Loaded::Case(c) => format!(
                "case `{}` running {}",
                c.name,
                c.theorems.iter().map(|t| t.name()).collect::<Vec<_>>().join(", ")
            ),
        }
    }
}

/// Loads files of any kind in order. Quotient and action files refer to the
/// most recent complex before them in the list.
pub fn parse_inputs(paths: &[PathBuf]) -> Result<Vec<Loaded>> {
    let mut out = Vec::new();
    let mut complex: Option<SSetPresentation> = None;
    for path in paths {
        let value = read_json(path)?;
        let kind = kind_of(path, &value)?;
        let need_complex = || complex.clone().ok_or_else(|| schema(path, format!("a `{kind}` file must follow a complex file")));
        let loaded = match kind.as_str() {
            "group" => Loaded::Group(group_from_file(&decode(path, value, "group")?)?),
            "hom" => Loaded::Hom(hom_from_file(path, &decode(path, value, "hom")?)?),
            "complex" => {
                let x = complex_from_file(path, &decode(path, value, "complex")?)?;
                complex = Some(x.clone());
                Loaded::Complex(x)
            }
            "quotient" => Loaded::Quotient(quotient_from_file(path, &decode(path, value, "quotient")?, &need_complex()?)?),
            "action" => Loaded::Action(action_from_file(path, &decode(path, value, "action")?, &need_complex()?)?),
            "cover" => Loaded::Cover(Box::new(load_cover(path)?)),
            "case" => Loaded::Case(Box::new(load_case(path)?)),
            other => return Err(schema(path, format!("unknown kind `{other}`"))),
        };
        out.push(loaded);
    }
    Ok(out)
}

/// The canonical text of a file, re-serialized from its parsed form.
pub fn canonical_form(path: &Path) -> Result<String> {
    let value = read_json(path)?;
    let kind = kind_of(path, &value)?;
    Ok(match kind.as_str() {
        "group" => to_canonical(&decode::<GroupFile>(path, value, "group")?),
        "hom" => to_canonical(&decode::<HomFile>(path, value, "hom")?),
        "complex" => to_canonical(&decode::<ComplexFile>(path, value, "complex")?),
        "quotient" => to_canonical(&decode::<QuotientFile>(path, value, "quotient")?),
        "action" => to_canonical(&decode::<ActionFile>(path, value, "action")?),
        "cover" => to_canonical(&decode::<CoverFile>(path, value, "cover")?),
        "case" => to_canonical(&decode::<CaseFile>(path, value, "case")?),
        other => return Err(schema(path, format!("unknown kind `{other}`"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::nerve_of_group;

    fn temp(name: &str, text: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("kancover-io-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p
    }

    #[test]
    fn nerve_round_trip() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(3), 3).unwrap();
        let text = to_canonical(&complex_file(nerve.presentation()));
        let p = temp("n3.json", &text);
        let x = load_complex(&p).unwrap();
        assert_eq!(&x, nerve.presentation());
        assert_eq!(x.generator_count(0), 1);
        assert_eq!(x.generator_count(1), 2);
        assert_eq!(canonical_form(&p).unwrap(), text);
        let file = complex_file(nerve.presentation());
        assert_eq!(file.faces["1.2"][1], FaceEntry { degeneracies: vec![0], generator: "phi".into() });
    }

    #[test]
    fn bad_faces_are_schema_errors() {
        let nerve = nerve_of_group(&FiniteGroup::cyclic(2), 2).unwrap();
        let mut file = complex_file(nerve.presentation());
        file.faces.get_mut("1.1").unwrap()[1].degeneracies = vec![0, 0];
        assert!(matches!(complex_from_file(Path::new("x"), &file), Err(Error::Schema { .. })));
        let mut file = complex_file(nerve.presentation());
        file.faces.remove("1.1");
        assert!(matches!(complex_from_file(Path::new("x"), &file), Err(Error::Schema { .. })));
        let mut file = complex_file(nerve.presentation());
        file.generators.remove("2");
        assert!(matches!(complex_from_file(Path::new("x"), &file), Err(Error::Schema { .. })));
    }

    #[test]
    fn errors_are_classified() {
        let p = temp("bad.json", "{\"kind\": \"group\",\n  \"name\": ");
        assert!(matches!(load_group(&p), Err(Error::Parse { .. })));
        let p = temp("wrong.json", "{\"kind\": \"complex\"}");
        assert!(matches!(load_group(&p), Err(Error::Schema { .. })));
        let p = temp("extra.json", "{\"kind\": \"group\", \"name\": \"x\", \"elements\": [\"e\"], \"table\": [[0]], \"colour\": 1}");
        assert!(matches!(load_group(&p), Err(Error::Schema { .. })));
        let p = temp("nonassoc.json", &to_canonical(&GroupFile {
            kind: "group".into(),
            name: "bad".into(),
            elements: vec!["e".into(), "a".into(), "b".into()],
            table: vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]],
        }));
        match load_group(&p) {
            Err(Error::InvariantViolation { invariant, .. }) => assert_eq!(invariant, "associativity"),
            other => panic!("{other:?}"),
        }
    }
}
