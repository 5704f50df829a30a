//! Line-oriented text format for bound quivers.
//!
//! ```text
//! # comment
//! vertices: 3 4 5
//! arrow: a : 4 -> 3
//! arrow: b : 5 -> 3
//! relation: a*b - c*d = 0
//! field: 32003
//! ```
//!
//! In `x*y` the right factor `y` is traversed first.

use std::collections::BTreeSet;

use tautilt::quiver::check_relation;
use tautilt::{Algebra, Arrow, Error, Quiver, Relation, Result, DEFAULT_PRIME};

#[derive(Debug, Clone)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub p: u32,
}

impl Presentation {
    pub fn build(self) -> Result<Algebra> {
        Algebra::build(self.quiver, self.relations, self.p)
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
        && !s.chars().next().unwrap().is_ascii_digit()
}

fn parse_vertex(line: usize, s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| err(line, format!("`{}` is not a vertex id", s.trim())))
}

/// Splits a sum of signed terms such as `2*a*b - c*d`.
fn parse_terms(line: usize, s: &str) -> Result<Vec<(i64, Vec<String>)>> {
    let mut raw: Vec<(i64, String)> = Vec::new();
    let mut sign = 1i64;
    let mut cur = String::new();
    for c in s.chars() {
        if c == '+' || c == '-' {
            if cur.trim().is_empty() {
                if c == '-' {
                    sign = -sign;
                }
            } else {
                raw.push((sign, std::mem::take(&mut cur)));
                sign = if c == '-' { -1 } else { 1 };
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        raw.push((sign, cur));
    } else if !raw.is_empty() || sign != 1 {
        return Err(err(line, "dangling sign in relation"));
    }
    let mut terms = Vec::new();
    for (sign, text) in raw {
        let factors: Vec<&str> = text.split('*').map(str::trim).collect();
        let (coeff, names) = match factors[0].parse::<i64>() {
            Ok(c) => (c, &factors[1..]),
            Err(_) => (1, &factors[..]),
        };
        if names.is_empty() {
            if coeff == 0 {
                continue;
            }
            return Err(err(line, format!("term `{}` has no arrows", text.trim())));
        }
        for n in names {
            if !is_name(n) {
                return Err(err(line, format!("`{n}` is not an arrow name")));
            }
        }
        terms.push((sign * coeff, names.iter().map(|n| n.to_string()).collect()));
    }
    Ok(terms)
}

fn parse_relation(line: usize, body: &str) -> Result<Relation> {
    let (lhs, rhs) = body
        .split_once('=')
        .ok_or_else(|| err(line, "relation needs `= 0` or `= <terms>`"))?;
    let mut terms = parse_terms(line, lhs)?;
    for (c, names) in parse_terms(line, rhs)? {
        terms.push((-c, names));
    }
    if terms.is_empty() {
        return Err(err(line, "empty relation"));
    }
    Ok(Relation::new(terms))
}

pub fn parse_dsl(text: &str) -> Result<Presentation> {
    let mut vertices: Option<Vec<u32>> = None;
    let mut arrows: Vec<(usize, Arrow)> = Vec::new();
    let mut relations: Vec<(usize, Relation)> = Vec::new();
    let mut field: Option<u32> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (key, body) = content
            .split_once(':')
            .ok_or_else(|| err(line, format!("expected `<keyword>: ...`, got `{content}`")))?;
        match key.trim() {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err(line, "second `vertices:` line"));
                }
                let ids = body
                    .split_whitespace()
                    .map(|v| parse_vertex(line, v))
                    .collect::<Result<Vec<_>>>()?;
                let mut seen = BTreeSet::new();
                for &v in &ids {
                    if !seen.insert(v) {
                        return Err(err(line, format!("duplicate vertex {v}")));
                    }
                }
                vertices = Some(ids);
            }
            "arrow" => {
                let (name, ends) = body
                    .split_once(':')
                    .ok_or_else(|| err(line, "expected `arrow: <name> : <src> -> <tgt>`"))?;
                let name = name.trim();
                if !is_name(name) {
                    return Err(err(line, format!("`{name}` is not an arrow name")));
                }
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| err(line, "expected `<src> -> <tgt>`"))?;
                if arrows.iter().any(|(_, a)| a.name == name) {
                    return Err(err(line, format!("duplicate arrow `{name}`")));
                }
                arrows.push((
                    line,
                    Arrow {
                        name: name.to_string(),
                        source: parse_vertex(line, s)?,
                        target: parse_vertex(line, t)?,
                    },
                ));
            }
            "relation" => relations.push((line, parse_relation(line, body)?)),
            "field" => {
                if field.is_some() {
                    return Err(err(line, "second `field:` line"));
                }
                let p: u32 = body
                    .trim()
                    .parse()
                    .map_err(|_| err(line, format!("`{}` is not a prime", body.trim())))?;
                tautilt::Fp::new(p)?;
                field = Some(p);
            }
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }
    let vertices = vertices.ok_or_else(|| err(0, "missing `vertices:` line"))?;
    for (line, a) in &arrows {
        for v in [a.source, a.target] {
            if !vertices.contains(&v) {
                return Err(err(*line, format!("arrow `{}` uses unknown vertex {v}", a.name)));
            }
        }
    }
    let quiver = Quiver::new(vertices, arrows.into_iter().map(|(_, a)| a).collect())?;
    for (line, r) in &relations {
        check_relation(&quiver, r).map_err(|e| err(*line, e.to_string()))?;
    }
    Ok(Presentation {
        quiver,
        relations: relations.into_iter().map(|(_, r)| r).collect(),
        p: field.unwrap_or(DEFAULT_PRIME),
    })
}

fn format_term(first: bool, coeff: i64, names: &[String]) -> String {
    let body = names.join("*");
    let sign = if coeff < 0 { "-" } else if first { "" } else { "+" };
    let sep = if first { "" } else { " " };
    let mag = coeff.unsigned_abs();
    let pad = if first && coeff < 0 { "" } else { sep };
    if mag == 1 {
        format!("{sep}{sign}{pad}{body}")
    } else {
        format!("{sep}{sign}{pad}{mag}*{body}")
    }
}

/// Writes an algebra back out in the text format.
pub fn to_dsl(algebra: &Algebra) -> String {
    let q = algebra.quiver();
    let mut out = String::new();
    let ids: Vec<String> = q.vertices().iter().map(|v| v.to_string()).collect();
    out.push_str(&format!("vertices: {}\n", ids.join(" ")));
    for a in q.arrows() {
        out.push_str(&format!("arrow: {} : {} -> {}\n", a.name, a.source, a.target));
    }
    for r in algebra.relations() {
        let terms: String = r
            .terms
            .iter()
            .enumerate()
            .map(|(i, (c, names))| format_term(i == 0, *c, names))
            .collect();
        out.push_str(&format!("relation: {terms} = 0\n"));
    }
    out.push_str(&format!("field: {}\n", algebra.p()));
    out
}
