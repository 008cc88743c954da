//! The line-oriented diagram file format.
//!
//! ```text
//! # A_3 circle with two copies
//! vertices 6
//! edge 1 2 -1 -1
//! edge 2 3 -1 -1
//! edge 4 5 -1 -1
//! edge 5 6 -1 -1
//! link 3 4
//! link 6 1
//! field cyclotomic
//! mode finite
//! ```
//!
//! Indices are 1-based, unspecified Cartan pairs are 0, `link` implies `linkable`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::cycles::GenusMode;
use crate::diagram::{CartanMatrix, DiagramError, EdgeKind, LinkMode, LinkableDynkinDiagram};
use crate::existence::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FileMode {
    #[default]
    Finite,
    Affine,
    SelfLink,
}

impl FileMode {
    /// Genus formula used for cycles; self-linked files use the affine one.
    pub fn genus_mode(self) -> GenusMode {
        match self {
            FileMode::Finite => GenusMode::Finite,
            FileMode::Affine | FileMode::SelfLink => GenusMode::Affine,
        }
    }
}

impl fmt::Display for FileMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FileMode::Finite => "finite",
            FileMode::Affine => "affine",
            FileMode::SelfLink => "selflink",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramFile {
    pub diagram: LinkableDynkinDiagram,
    pub field: FieldSpec,
    pub mode: FileMode,
}

impl DiagramFile {
    pub fn new(diagram: LinkableDynkinDiagram, field: FieldSpec, mode: FileMode) -> Self {
        DiagramFile {
            diagram,
            field,
            mode,
        }
    }

    /// Normalized text: header, sorted edges, then linkable and linked pairs.
    pub fn serialize(&self) -> String {
        let d = &self.diagram;
        let s = d.size();
        let mut out = format!("vertices {s}\nmode {}\nfield {}\n", self.mode, self.field);
        for i in 0..s {
            for j in i + 1..s {
                if d.a(i, j) != 0 {
                    out.push_str(&format!(
                        "edge {} {} {} {}\n",
                        i + 1,
                        j + 1,
                        d.a(i, j),
                        d.a(j, i)
                    ));
                }
            }
        }
        for (i, j) in d.linkable_pairs() {
            let word = if d.lambda(i, j) { "link" } else { "linkable" };
            out.push_str(&format!("{word} {} {}\n", i + 1, j + 1));
        }
        out
    }
}

struct Pending {
    size: usize,
    size_line: usize,
    cartan: BTreeMap<(usize, usize), (i64, i64, usize)>,
    linkable: BTreeMap<(usize, usize), (bool, usize)>,
}

fn syntax(line: usize, message: impl Into<String>) -> FileError {
    FileError::Syntax {
        line,
        message: message.into(),
    }
}

fn semantic(line: usize, message: impl Into<String>) -> FileError {
    FileError::Semantic {
        line,
        message: message.into(),
    }
}

fn numbers<T: std::str::FromStr>(
    line: usize,
    args: &[&str],
    want: usize,
    directive: &str,
) -> Result<Vec<T>, FileError> {
    if args.len() != want {
        return Err(syntax(
            line,
            format!("`{directive}` takes {want} arguments, got {}", args.len()),
        ));
    }
    args.iter()
        .map(|a| {
            a.parse()
                .map_err(|_| syntax(line, format!("`{a}` is not a valid number")))
        })
        .collect()
}

pub fn parse(text: &str) -> Result<DiagramFile, FileError> {
    let mut pending: Option<Pending> = None;
    let mut field: Option<(FieldSpec, usize)> = None;
    let mut mode: Option<(FileMode, usize)> = None;
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let directive = words.next().expect("nonempty");
        let args: Vec<&str> = words.collect();
        match directive {
            "vertices" => {
                if pending.is_some() {
                    return Err(semantic(line, "`vertices` given twice"));
                }
                let size = numbers::<usize>(line, &args, 1, directive)?[0];
                if size == 0 {
                    return Err(semantic(line, "a diagram needs at least one vertex"));
                }
                pending = Some(Pending {
                    size,
                    size_line: line,
                    cartan: BTreeMap::new(),
                    linkable: BTreeMap::new(),
                });
            }
            "edge" | "linkable" | "link" => {
                let p = pending
                    .as_mut()
                    .ok_or_else(|| semantic(line, format!("`{directive}` before `vertices`")))?;
                let (i, j, rest) = if directive == "edge" {
                    let v = numbers::<i64>(line, &args, 4, directive)?;
                    (v[0], v[1], Some((v[2], v[3])))
                } else {
                    let v = numbers::<i64>(line, &args, 2, directive)?;
                    (v[0], v[1], None)
                };
                for v in [i, j] {
                    if v < 1 || v as usize > p.size {
                        return Err(semantic(
                            line,
                            format!("vertex {v} out of range 1..={}", p.size),
                        ));
                    }
                }
                if i == j {
                    return Err(semantic(
                        line,
                        format!("`{directive}` needs two distinct vertices"),
                    ));
                }
                let (i, j) = (i as usize - 1, j as usize - 1);
                let key = (i.min(j), i.max(j));
                match rest {
                    Some((a_ij, a_ji)) => {
                        if (a_ij == 0) != (a_ji == 0) {
                            return Err(semantic(
                                line,
                                "Cartan asymmetry: a_ij and a_ji must vanish together",
                            ));
                        }
                        if a_ij > 0 || a_ji > 0 {
                            return Err(semantic(
                                line,
                                "off-diagonal Cartan entries must be nonpositive",
                            ));
                        }
                        if EdgeKind::from_entries(a_ij, a_ji).is_none() {
                            return Err(semantic(
                                line,
                                format!("edge ({a_ij}, {a_ji}) is not of finite or affine shape"),
                            ));
                        }
                        let (a, b) = if i < j { (a_ij, a_ji) } else { (a_ji, a_ij) };
                        if let Some(&(x, y, prev)) = p.cartan.get(&key) {
                            if (x, y) != (a, b) {
                                return Err(semantic(
                                    line,
                                    format!("edge {} {} conflicts with line {prev}", i + 1, j + 1),
                                ));
                            }
                        }
                        p.cartan.insert(key, (a, b, line));
                    }
                    None => {
                        let linked = directive == "link";
                        for v in [key.0, key.1] {
                            if let Some((_, other)) = p
                                .linkable
                                .iter()
                                .find(|(k, _)| **k != key && (k.0 == v || k.1 == v))
                            {
                                return Err(semantic(
                                    line,
                                    format!(
                                        "vertex {} already lies on the dotted edge from line {}",
                                        v + 1,
                                        other.1
                                    ),
                                ));
                            }
                        }
                        let entry = p.linkable.entry(key).or_insert((false, line));
                        entry.0 |= linked;
                    }
                }
            }
            "field" => {
                if field.is_some() {
                    return Err(semantic(line, "`field` given twice"));
                }
                let spec =
                    match args.as_slice() {
                        ["cyclotomic"] => Ok(FieldSpec::cyclotomic()),
                        ["gf", q] => {
                            let q = q.parse::<u64>().map_err(|_| {
                                syntax(line, format!("`{q}` is not a valid number"))
                            })?;
                            FieldSpec::finite_field(q)
                        }
                        ["roots", list] => {
                            let orders = list
                                .split(',')
                                .map(|x| {
                                    x.parse::<u64>().map_err(|_| {
                                        syntax(line, format!("`{x}` is not a valid number"))
                                    })
                                })
                                .collect::<Result<Vec<_>, _>>()?;
                            FieldSpec::root_orders(orders)
                        }
                        _ => return Err(syntax(
                            line,
                            "expected `field cyclotomic`, `field gf q` or `field roots d1,d2,...`",
                        )),
                    };
                field = Some((spec.map_err(|e| semantic(line, e.to_string()))?, line));
            }
            "mode" => {
                if mode.is_some() {
                    return Err(semantic(line, "`mode` given twice"));
                }
                let m = match args.as_slice() {
                    ["finite"] => FileMode::Finite,
                    ["affine"] => FileMode::Affine,
                    ["selflink"] => FileMode::SelfLink,
                    _ => {
                        return Err(syntax(
                            line,
                            "expected `mode finite`, `mode affine` or `mode selflink`",
                        ))
                    }
                };
                mode = Some((m, line));
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    let p = pending.ok_or_else(|| semantic(last_line.max(1), "missing `vertices`"))?;
    let mode = mode.map(|m| m.0).unwrap_or_default();
    let mut rows = CartanMatrix::diagonal(p.size).rows();
    for (&(i, j), &(a, b, _)) in &p.cartan {
        rows[i][j] = a;
        rows[j][i] = b;
    }
    let cartan = CartanMatrix::new(rows).map_err(|e| semantic(p.size_line, e.to_string()))?;
    let linkable: Vec<(usize, usize)> = p.linkable.keys().copied().collect();
    let linked: Vec<(usize, usize)> = p
        .linkable
        .iter()
        .filter(|(_, v)| v.0)
        .map(|(k, _)| *k)
        .collect();
    let link_mode = if mode == FileMode::SelfLink {
        LinkMode::SelfLink
    } else {
        LinkMode::Standard
    };
    let diagram =
        LinkableDynkinDiagram::new(cartan, &linkable, &linked, link_mode).map_err(|e| {
            let line = match &e {
                DiagramError::SameComponent { i, j } | DiagramError::LinkedNotLinkable { i, j } => {
                    p.linkable.get(&(i.min(j) - 1, i.max(j) - 1)).map(|v| v.1)
                }
                DiagramError::UnsupportedEdge { i, j, .. }
                | DiagramError::ZeroAsymmetry { i, j } => {
                    p.cartan.get(&(i.min(j) - 1, i.max(j) - 1)).map(|v| v.2)
                }
                _ => None,
            };
            semantic(line.unwrap_or(p.size_line), e.to_string())
        })?;
    Ok(DiagramFile {
        diagram,
        field: field.map(|f| f.0).unwrap_or_else(FieldSpec::cyclotomic),
        mode,
    })
}
