//! Quivers and homogeneous relations.
//!
//! Relations are written the way they appear in presentations: in a product
//! `x y` the right factor `y` is traversed first, so `x y` is a path from
//! `source(y)` to `target(x)` and requires `target(y) == source(x)`.
//! Internally paths are stored in travel order (first arrow first).

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: u32,
    pub target: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<u32>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<u32>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let mut names = HashSet::new();
        for a in &arrows {
            if !names.insert(a.name.as_str()) {
                return Err(Error::DuplicateArrow(a.name.clone()));
            }
            for end in [a.source, a.target] {
                if !seen.contains(&end) {
                    return Err(Error::UnknownVertex(end));
                }
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Convenience constructor from `(name, source, target)` triples.
    pub fn from_arrows(vertices: &[u32], arrows: &[(&str, u32, u32)]) -> Result<Self> {
        Self::new(
            vertices.to_vec(),
            arrows
                .iter()
                .map(|&(n, s, t)| Arrow {
                    name: n.to_string(),
                    source: s,
                    target: t,
                })
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, id: u32) -> Option<usize> {
        self.vertices.iter().position(|&v| v == id)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Source and target vertex indices of arrow `a`.
    pub fn arrow_ends(&self, a: usize) -> (usize, usize) {
        let arrow = &self.arrows[a];
        (
            self.vertex_index(arrow.source).expect("validated"),
            self.vertex_index(arrow.target).expect("validated"),
        )
    }

    /// Quiver with every arrow reversed; names and order are kept.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Connected components of the underlying graph, as sorted vertex-id lists,
    /// ordered by smallest vertex id.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for a in 0..self.arrows.len() {
            let (s, t) = self.arrow_ends(a);
            let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
            if rs != rt {
                parent[rs] = rt;
            }
        }
        let mut groups: HashMap<usize, Vec<u32>> = HashMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(self.vertices[i]);
        }
        let mut out: Vec<Vec<u32>> = groups
            .into_values()
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}

/// A linear combination of paths, each written as a product of arrow names
/// (right factor traversed first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl Relation {
    pub fn new(terms: Vec<(i64, Vec<String>)>) -> Self {
        Relation { terms }
    }

    /// Monomial relation `x1 x2 ... xk = 0`.
    pub fn monomial(arrows: &[&str]) -> Self {
        Relation {
            terms: vec![(1, arrows.iter().map(|s| s.to_string()).collect())],
        }
    }

    /// Commutativity relation `lhs = rhs`, stored as `lhs - rhs`.
    pub fn commutativity(lhs: &[&str], rhs: &[&str]) -> Self {
        Relation {
            terms: vec![
                (1, lhs.iter().map(|s| s.to_string()).collect()),
                (-1, rhs.iter().map(|s| s.to_string()).collect()),
            ],
        }
    }
}

/// A relation resolved against a quiver: coefficients as signed integers and
/// paths as arrow indices in travel order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct ResolvedRelation {
    pub terms: Vec<(i64, Vec<usize>)>,
    pub source: usize,
    pub target: usize,
    pub degree: usize,
}

/// Resolves a written product into a travel-order path, checking composability.
pub(crate) fn resolve_path(quiver: &Quiver, written: &[String]) -> Result<(Vec<usize>, usize, usize)> {
    let mut idx = Vec::with_capacity(written.len());
    for name in written {
        idx.push(
            quiver
                .arrow_index(name)
                .ok_or_else(|| Error::UnknownArrow(name.clone()))?,
        );
    }
    // written x1 x2 ... xk: xk first.
    for w in 0..idx.len().saturating_sub(1) {
        let left = &quiver.arrows()[idx[w]];
        let right = &quiver.arrows()[idx[w + 1]];
        if right.target != left.source {
            return Err(Error::NotComposable(left.name.clone(), right.name.clone()));
        }
    }
    idx.reverse();
    let (source, _) = quiver.arrow_ends(idx[0]);
    let (_, target) = quiver.arrow_ends(*idx.last().unwrap());
    Ok((idx, source, target))
}

/// Checks that every term of `rel` is a path and that the terms are parallel
/// and of equal length.
pub fn check_relation(quiver: &Quiver, rel: &Relation) -> Result<()> {
    resolve_relation(quiver, rel).map(|_| ())
}

pub(crate) fn resolve_relation(quiver: &Quiver, rel: &Relation) -> Result<ResolvedRelation> {
    if rel.terms.is_empty() {
        return Err(Error::EmptyRelation);
    }
    let mut terms = Vec::new();
    let mut ends: Option<(usize, usize, usize)> = None;
    for (coef, written) in &rel.terms {
        if written.is_empty() {
            return Err(Error::RelationTooShort(0));
        }
        let (path, s, t) = resolve_path(quiver, written)?;
        match ends {
            None => ends = Some((s, t, path.len())),
            Some((s0, t0, d0)) => {
                if d0 != path.len() {
                    return Err(Error::InhomogeneousRelation(d0, path.len()));
                }
                if s0 != s || t0 != t {
                    return Err(Error::EndpointMismatch);
                }
            }
        }
        terms.push((*coef, path));
    }
    let (source, target, degree) = ends.unwrap();
    if degree < 2 {
        return Err(Error::RelationTooShort(degree));
    }
    Ok(ResolvedRelation {
        terms,
        source,
        target,
        degree,
    })
}
