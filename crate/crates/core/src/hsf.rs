//! HSF: the JSON on-disk format for hyper tables and system tables.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::carrier::{ElementId, SubsetVal};
use crate::error::{Error, Result};
use crate::table::{parse_set_label, relation_for, HyperTable, SurpassSpec, SystemTable};

/// A parsed structure of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Hyper(HyperTable),
    System(SystemTable),
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Hyper(h) => &h.name,
            Structure::System(s) => &s.name,
        }
    }
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct HsfDoc {
    kind: String,
    carrier: Vec<String>,
    zero: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    one: Option<String>,
    neg: BTreeMap<String, String>,
    add: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mul: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tangible: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    surpass: Option<SurpassDoc>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(tag = "variant", rename_all = "lowercase", deny_unknown_fields)]
enum SurpassDoc {
    Circ,
    Ideal { members: Vec<String> },
    Explicit { pairs: Vec<(String, String)> },
    Inclusion,
}

/// Reads and validates an HSF file; the structure is named after the file stem.
pub fn parse_structure(path: &Path) -> Result<Structure> {
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "structure".into());
    parse_str(&text, &name)
}

/// Parses HSF text.
pub fn parse_str(text: &str, name: &str) -> Result<Structure> {
    let doc: HsfDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let ctx = Ctx {
        text,
        labels: &doc.carrier,
    };
    let n = doc.carrier.len();
    let zero = ctx.id(&doc.zero)?;
    let one = doc.one.as_deref().map(|l| ctx.id(l)).transpose()?;
    let mut neg = vec![usize::MAX; n];
    for (k, v) in &doc.neg {
        neg[ctx.id(k)?] = ctx.id(v)?;
    }
    if let Some(a) = neg.iter().position(|&x| x == usize::MAX) {
        return Err(ctx.err(&doc.carrier[a], format!("neg missing for {}", doc.carrier[a])));
    }
    match doc.kind.as_str() {
        "hyper" => {
            let mut add = vec![None; n * n];
            for (k, v) in &doc.add {
                let (a, b) = ctx.pair(k)?;
                let ids: Vec<ElementId> = v.iter().map(|l| ctx.id(l)).collect::<Result<_>>()?;
                let s = SubsetVal::from_iter_unchecked(ids);
                store_sym(&mut add, n, a, b, s, &ctx, k)?;
            }
            let mut full = Vec::with_capacity(n * n);
            for (i, e) in add.into_iter().enumerate() {
                match e {
                    Some(s) => full.push(s),
                    None => {
                        let key = format!("{},{}", doc.carrier[i / n], doc.carrier[i % n]);
                        return Err(Error::Validation {
                            axiom: "add-total".into(),
                            witness: format!("missing sum {key}"),
                        });
                    }
                }
            }
            let mul = doc.mul.as_ref().map(|m| ctx.mul_table(m)).transpose()?;
            let h = HyperTable {
                name: name.to_string(),
                labels: doc.carrier.clone(),
                zero,
                one,
                neg,
                add: full,
                mul,
            };
            h.validate()?;
            Ok(Structure::Hyper(h))
        }
        "system" => {
            let mut add = vec![None; n * n];
            for (k, v) in &doc.add {
                let (a, b) = ctx.pair(k)?;
                if v.len() != 1 {
                    return Err(ctx.err(k, format!("system sum {k} must have exactly one value")));
                }
                let c = ctx.id(&v[0])?;
                store_sym(&mut add, n, a, b, c, &ctx, k)?;
            }
            let mul = match &doc.mul {
                Some(m) => ctx.mul_table(m)?,
                None => vec![None; n * n],
            };
            let mut tangible = vec![false; n];
            match &doc.tangible {
                Some(ts) => {
                    for t in ts {
                        tangible[ctx.id(t)?] = true;
                    }
                }
                None => {
                    for (a, t) in tangible.iter_mut().enumerate() {
                        *t = a != zero;
                    }
                }
            }
            let surpass = match &doc.surpass {
                None | Some(SurpassDoc::Circ) => SurpassSpec::Circ,
                Some(SurpassDoc::Ideal { members }) => {
                    SurpassSpec::Ideal(members.iter().map(|l| ctx.id(l)).collect::<Result<_>>()?)
                }
                Some(SurpassDoc::Explicit { pairs }) => SurpassSpec::Explicit(
                    pairs
                        .iter()
                        .map(|(a, b)| Ok((ctx.id(a)?, ctx.id(b)?)))
                        .collect::<Result<_>>()?,
                ),
                Some(SurpassDoc::Inclusion) => SurpassSpec::Inclusion,
            };
            let sets = if surpass == SurpassSpec::Inclusion {
                Some(sets_from_labels(&doc.carrier))
            } else {
                None
            };
            let window = add.iter().any(|e| e.is_none());
            let mut s = SystemTable {
                name: name.to_string(),
                labels: doc.carrier.clone(),
                zero,
                one,
                tangible,
                neg,
                add,
                mul,
                surpass,
                leq: Vec::new(),
                sets,
                window,
            };
            s.leq = relation_for(&s, &s.surpass)?;
            s.validate()?;
            Ok(Structure::System(s))
        }
        other => Err(ctx.err(other, format!("unknown kind {other:?}"))),
    }
}

fn store_sym<T: Clone + PartialEq>(
    table: &mut [Option<T>],
    n: usize,
    a: ElementId,
    b: ElementId,
    v: T,
    ctx: &Ctx,
    key: &str,
) -> Result<()> {
    for (i, j) in [(a, b), (b, a)] {
        match &table[i * n + j] {
            Some(old) if *old != v => {
                return Err(ctx.err(key, format!("conflicting entries for {key}")));
            }
            _ => table[i * n + j] = Some(v.clone()),
        }
    }
    Ok(())
}

/// Atoms of set labels, indexed in order of first appearance.
fn sets_from_labels(labels: &[String]) -> Vec<SubsetVal> {
    let mut atoms: Vec<String> = Vec::new();
    let mut out = Vec::new();
    for l in labels {
        let mut ids = Vec::new();
        for atom in parse_set_label(l) {
            let id = match atoms.iter().position(|a| *a == atom) {
                Some(i) => i,
                None => {
                    atoms.push(atom);
                    atoms.len() - 1
                }
            };
            ids.push(id);
        }
        out.push(SubsetVal::from_iter_unchecked(ids));
    }
    out
}

struct Ctx<'a> {
    text: &'a str,
    labels: &'a [String],
}

impl Ctx<'_> {
    fn line_of(&self, needle: &str) -> usize {
        let quoted = format!("\"{needle}\"");
        self.text
            .lines()
            .position(|l| l.contains(&quoted))
            .or_else(|| self.text.lines().position(|l| l.contains(needle)))
            .map(|i| i + 1)
            .unwrap_or(1)
    }

    fn err(&self, needle: &str, msg: String) -> Error {
        Error::Parse {
            line: self.line_of(needle),
            msg,
        }
    }

    fn id(&self, label: &str) -> Result<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| self.err(label, format!("unknown label {label:?}")))
    }

    /// Splits an `"a,b"` key; labels may themselves contain commas.
    fn pair(&self, key: &str) -> Result<(ElementId, ElementId)> {
        let mut found = Vec::new();
        for (i, ch) in key.char_indices() {
            if ch == ',' {
                let (l, r) = (&key[..i], &key[i + 1..]);
                if let (Some(a), Some(b)) = (
                    self.labels.iter().position(|x| x == l),
                    self.labels.iter().position(|x| x == r),
                ) {
                    found.push((a, b));
                }
            }
        }
        match found.as_slice() {
            [p] => Ok(*p),
            [] => Err(self.err(key, format!("key {key:?} is not a pair of labels"))),
            _ => Err(self.err(key, format!("key {key:?} is ambiguous"))),
        }
    }

    fn mul_table(&self, m: &BTreeMap<String, String>) -> Result<Vec<Option<ElementId>>> {
        let n = self.labels.len();
        let mut out = vec![None; n * n];
        for (k, v) in m {
            let (a, b) = self.pair(k)?;
            out[a * n + b] = Some(self.id(v)?);
        }
        Ok(out)
    }
}

fn key(labels: &[String], a: ElementId, b: ElementId) -> String {
    format!("{},{}", labels[a], labels[b])
}

/// Serializes a structure to HSF text (pretty JSON, sorted keys).
pub fn to_hsf(s: &Structure) -> String {
    let doc = match s {
        Structure::Hyper(h) => {
            let l = &h.labels;
            let n = h.n();
            let mut add = BTreeMap::new();
            for a in 0..n {
                for b in 0..n {
                    if l[a] <= l[b] {
                        add.insert(key(l, a, b), h.add(a, b).iter().map(|x| l[x].clone()).collect());
                    }
                }
            }
            HsfDoc {
                kind: "hyper".into(),
                carrier: l.clone(),
                zero: l[h.zero].clone(),
                one: h.one.map(|o| l[o].clone()),
                neg: (0..n).map(|a| (l[a].clone(), l[h.neg[a]].clone())).collect(),
                add,
                mul: h.mul.as_ref().map(|_| mul_doc(l, |a, b| h.mul(a, b))),
                tangible: None,
                surpass: None,
            }
        }
        Structure::System(s) => {
            let l = &s.labels;
            let n = s.n();
            let mut add = BTreeMap::new();
            for a in 0..n {
                for b in 0..n {
                    if l[a] <= l[b] {
                        if let Some(c) = s.add(a, b) {
                            add.insert(key(l, a, b), vec![l[c].clone()]);
                        }
                    }
                }
            }
            let surpass = match &s.surpass {
                SurpassSpec::Circ => SurpassDoc::Circ,
                SurpassSpec::Ideal(m) => SurpassDoc::Ideal {
                    members: m.iter().map(|&x| l[x].clone()).collect(),
                },
                SurpassSpec::Explicit(p) => SurpassDoc::Explicit {
                    pairs: p.iter().map(|&(a, b)| (l[a].clone(), l[b].clone())).collect(),
                },
                SurpassSpec::Inclusion => SurpassDoc::Inclusion,
            };
            HsfDoc {
                kind: "system".into(),
                carrier: l.clone(),
                zero: l[s.zero].clone(),
                one: s.one.map(|o| l[o].clone()),
                neg: (0..n).map(|a| (l[a].clone(), l[s.neg[a]].clone())).collect(),
                add,
                mul: Some(mul_doc(l, |a, b| s.mul(a, b))),
                tangible: Some(s.tangibles().into_iter().map(|a| l[a].clone()).collect()),
                surpass: Some(surpass),
            }
        }
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("HSF documents always serialize");
    out.push('\n');
    out
}

fn mul_doc(l: &[String], f: impl Fn(ElementId, ElementId) -> Option<ElementId>) -> BTreeMap<String, String> {
    let n = l.len();
    let mut m = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = f(a, b) {
                m.insert(key(l, a, b), l[c].clone());
            }
        }
    }
    m
}

/// Writes a structure to disk in HSF.
pub fn write_structure(s: &Structure, path: &Path) -> Result<()> {
    std::fs::write(path, to_hsf(s))?;
    Ok(())
}
