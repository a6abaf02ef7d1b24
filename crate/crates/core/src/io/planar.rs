//! The `planar v1` text format.
//!
//! ```text
//! planar v1
//! mode: patch
//! v0: 1 3
//! v1: 2 0
//! ...
//! outer: 0 1
//! ```
//!
//! Vertex lines list neighbours counterclockwise and must appear in id
//! order. `outer: u v` names a dart of the outer face and is required in
//! patch mode, forbidden in sphere mode. `#` comments and blank lines are
//! skipped.

use std::fmt::Write as _;

use crate::embedding::{build_from_rotation_system, Mode, Tessellation};
use crate::error::{Error, Result};

const HEADER: &str = "planar v1";

fn syntax(line: usize, reason: impl Into<String>) -> Error {
    Error::Syntax { line, reason: reason.into() }
}

fn parse_ids(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| syntax(line, format!("`{tok}` is not a vertex id"))))
        .collect()
}

pub fn parse(text: &str) -> Result<Tessellation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, other)) => return Err(syntax(n, format!("expected `{HEADER}`, found `{other}`"))),
        None => return Err(syntax(1, "empty document")),
    }

    let mut mode = None;
    let mut outer = None;
    let mut rotations: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 1;
    for (n, line) in lines {
        last_line = n;
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| syntax(n, "expected `key: value`"))?;
        let (key, value) = (key.trim(), value.trim());
        if outer.is_some() {
            return Err(syntax(n, "nothing may follow the `outer:` line"));
        }
        match key {
            "mode" => {
                if mode.is_some() || !rotations.is_empty() {
                    return Err(syntax(n, "`mode:` must appear once, before the vertices"));
                }
                mode = Some(match value {
                    "sphere" => Mode::Sphere,
                    "patch" => Mode::Patch,
                    other => return Err(syntax(n, format!("unknown mode `{other}`"))),
                });
            }
            "outer" => {
                let ids = parse_ids(n, value)?;
                let [u, v] = ids[..] else {
                    return Err(syntax(n, "`outer:` takes exactly two vertex ids"));
                };
                outer = Some((n, u, v));
            }
            _ => {
                let id: usize = key
                    .strip_prefix('v')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| syntax(n, format!("unknown key `{key}`")))?;
                if mode.is_none() {
                    return Err(syntax(n, "`mode:` must come before the vertices"));
                }
                if id != rotations.len() {
                    return Err(syntax(n, format!("expected v{}, found v{id}", rotations.len())));
                }
                rotations.push(parse_ids(n, value)?);
            }
        }
    }

    let mode = mode.ok_or_else(|| syntax(last_line, "missing `mode:` line"))?;
    if rotations.is_empty() {
        return Err(syntax(last_line, "no vertices"));
    }
    let hint = match (mode, outer) {
        (Mode::Patch, None) => return Err(syntax(last_line, "patch mode requires an `outer:` line")),
        (Mode::Sphere, Some((n, _, _))) => return Err(syntax(n, "`outer:` is only valid in patch mode")),
        (_, o) => o.map(|(_, u, v)| (u, v)),
    };
    build_from_rotation_system(&rotations, mode, hint)
}

pub fn serialize(t: &Tessellation) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "mode: {}", t.mode().as_str()).unwrap();
    for (v, nbrs) in t.rotation_lists().iter().enumerate() {
        let list: Vec<String> = nbrs.iter().map(ToString::to_string).collect();
        writeln!(out, "v{v}: {}", list.join(" ")).unwrap();
    }
    if let Some((u, v)) = t.outer_hint() {
        writeln!(out, "outer: {u} {v}").unwrap();
    }
    out
}
