//! Finite-dimensional bound quiver algebras `KQ/I` over GF(p).
//!
//! Multiplication is concatenation in travel order: for basis paths `x`, `y`
//! the product `x * y` is "first `x`, then `y`", nonzero only when `x` ends
//! where `y` starts. Hence `e_{source(b)} * b = b = b * e_{target(b)}` and the
//! indecomposable projective right module `P(i) = e_i A` is spanned by the
//! basis paths starting at `i`.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeSet, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::matrix::Matrix;
use crate::quiver::{resolve_relation, Arrow, Quiver, Relation, ResolvedRelation};

/// Sparse linear combination of basis elements, sorted by index.
pub type Element = Vec<(usize, u32)>;

/// One basis path; `arrows` is in travel order and empty for an idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisPath {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl BasisPath {
    pub fn degree(&self) -> usize {
        self.arrows.len()
    }
}

/// Build options for [`Algebra::build_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    /// Maximal path length that may survive; `None` means `2 * |vertices|`.
    pub length_cap: Option<usize>,
}

#[derive(Debug)]
pub struct Algebra {
    quiver: Quiver,
    field: Fp,
    relations: Vec<Relation>,
    resolved: Vec<ResolvedRelation>,
    basis: Vec<BasisPath>,
    lookup: HashMap<(usize, Vec<usize>), usize>,
    normal_forms: HashMap<Vec<usize>, Element>,
    top_degree: usize,
    mult: Vec<Element>,
    length_cap: usize,
    fingerprint: u64,
    opposite: OnceLock<Arc<Algebra>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
            && self.quiver == other.quiver
            && self.basis == other.basis
            && self.mult == other.mult
    }
}

fn word_cmp(quiver: &Quiver, a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        let names = |w: &[usize]| -> Vec<&str> {
            w.iter().map(|&i| quiver.arrows()[i].name.as_str()).collect()
        };
        names(a).cmp(&names(b))
    })
}

impl Algebra {
    pub fn build(quiver: Quiver, relations: Vec<Relation>, p: u32) -> Result<Algebra> {
        Self::build_with(quiver, relations, p, BuildOptions::default())
    }

    pub fn build_with(
        quiver: Quiver,
        relations: Vec<Relation>,
        p: u32,
        options: BuildOptions,
    ) -> Result<Algebra> {
        let field = Fp::new(p)?;
        let resolved = relations
            .iter()
            .map(|r| resolve_relation(&quiver, r))
            .collect::<Result<Vec<_>>>()?;
        let length_cap = options
            .length_cap
            .unwrap_or(2 * quiver.num_vertices())
            .max(1);

        let n = quiver.num_vertices();
        let mut basis: Vec<BasisPath> = (0..n)
            .map(|i| BasisPath {
                source: i,
                target: i,
                arrows: vec![],
            })
            .collect();
        let mut deg1: Vec<usize> = (0..quiver.arrows().len()).collect();
        deg1.sort_by(|&a, &b| word_cmp(&quiver, &[a], &[b]));
        for &a in &deg1 {
            let (s, t) = quiver.arrow_ends(a);
            basis.push(BasisPath {
                source: s,
                target: t,
                arrows: vec![a],
            });
        }

        let mut normal_forms: HashMap<Vec<usize>, Element> = HashMap::new();
        // All walks of the previous degree, and the previous ideal slice as
        // sparse rows over those walks.
        let mut prev_words: Vec<Vec<usize>> = deg1.iter().map(|&a| vec![a]).collect();
        let mut prev_ideal: Vec<HashMap<Vec<usize>, u32>> = Vec::new();
        let mut top_degree = if deg1.is_empty() { 1 } else { 0 };
        let mut degree = 2;
        while top_degree == 0 {
            let mut words: Vec<Vec<usize>> = Vec::new();
            for w in &prev_words {
                let (_, end) = quiver.arrow_ends(*w.last().unwrap());
                for a in 0..quiver.arrows().len() {
                    if quiver.arrow_ends(a).0 == end {
                        let mut nw = w.clone();
                        nw.push(a);
                        words.push(nw);
                    }
                }
            }
            if words.is_empty() {
                top_degree = degree;
                break;
            }
            // Columns ordered from the largest word down, so pivots land on
            // the largest words and the smallest ones survive as basis.
            words.sort_by(|a, b| word_cmp(&quiver, b, a));
            let col_of: HashMap<&[usize], usize> = words
                .iter()
                .enumerate()
                .map(|(i, w)| (w.as_slice(), i))
                .collect();

            let mut gens: Vec<Vec<u32>> = Vec::new();
            let push_sparse = |gens: &mut Vec<Vec<u32>>, entries: &[(Vec<usize>, u32)]| {
                let mut row = vec![0u32; words.len()];
                let mut any = false;
                for (w, c) in entries {
                    let col = col_of[w.as_slice()];
                    row[col] = field.add(row[col], *c);
                    any |= row[col] != 0;
                }
                if any {
                    gens.push(row);
                }
            };
            for r in resolved.iter().filter(|r| r.degree == degree) {
                let entries: Vec<(Vec<usize>, u32)> = r
                    .terms
                    .iter()
                    .map(|(c, w)| (w.clone(), field.from_i64(*c)))
                    .collect();
                push_sparse(&mut gens, &entries);
            }
            for g in &prev_ideal {
                let (src, tgt) = {
                    let w = g.keys().next().unwrap();
                    (quiver.arrow_ends(w[0]).0, quiver.arrow_ends(*w.last().unwrap()).1)
                };
                for a in 0..quiver.arrows().len() {
                    let (s, t) = quiver.arrow_ends(a);
                    if t == src {
                        let entries: Vec<(Vec<usize>, u32)> = g
                            .iter()
                            .map(|(w, &c)| {
                                let mut nw = Vec::with_capacity(w.len() + 1);
                                nw.push(a);
                                nw.extend_from_slice(w);
                                (nw, c)
                            })
                            .collect();
                        push_sparse(&mut gens, &entries);
                    }
                    if s == tgt {
                        let entries: Vec<(Vec<usize>, u32)> = g
                            .iter()
                            .map(|(w, &c)| {
                                let mut nw = w.clone();
                                nw.push(a);
                                (nw, c)
                            })
                            .collect();
                        push_sparse(&mut gens, &entries);
                    }
                }
            }

            let ncols = words.len();
            let ech = if gens.is_empty() {
                None
            } else {
                let data: Vec<u32> = gens.iter().flatten().copied().collect();
                Some(Matrix::from_rows(field, gens.len(), ncols, data).echelon())
            };
            let pivots: Vec<usize> = ech.as_ref().map(|e| e.pivots.clone()).unwrap_or_default();
            let mut is_pivot = vec![false; ncols];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            // Survivors, smallest first.
            let mut survivors: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
            survivors.reverse();
            if survivors.is_empty() {
                top_degree = degree;
                break;
            }
            if degree > length_cap {
                return Err(Error::NotFiniteDimensional(length_cap));
            }
            let first_new = basis.len();
            let mut col_to_basis = HashMap::new();
            for (k, &c) in survivors.iter().enumerate() {
                let w = &words[c];
                let (s, _) = quiver.arrow_ends(w[0]);
                let (_, t) = quiver.arrow_ends(*w.last().unwrap());
                basis.push(BasisPath {
                    source: s,
                    target: t,
                    arrows: w.clone(),
                });
                col_to_basis.insert(c, first_new + k);
            }
            let mut ideal_rows = Vec::new();
            if let Some(ech) = &ech {
                for (i, &pc) in pivots.iter().enumerate() {
                    let row = ech.reduced.row(i);
                    let mut nf: Element = survivors
                        .iter()
                        .filter(|&&c| row[c] != 0)
                        .map(|&c| (col_to_basis[&c], field.neg(row[c])))
                        .collect();
                    nf.sort_unstable();
                    if !nf.is_empty() {
                        normal_forms.insert(words[pc].clone(), nf);
                    }
                    let sparse: HashMap<Vec<usize>, u32> = row
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(c, &v)| (words[c].clone(), v))
                        .collect();
                    ideal_rows.push(sparse);
                }
            }
            prev_ideal = ideal_rows;
            prev_words = words;
            degree += 1;
        }

        let mut alg = Algebra {
            quiver,
            field,
            relations,
            resolved,
            basis,
            lookup: HashMap::new(),
            normal_forms,
            top_degree,
            mult: Vec::new(),
            length_cap,
            fingerprint: 0,
            opposite: OnceLock::new(),
        };
        alg.finish();
        Ok(alg)
    }

    /// Fills the lookup table, the multiplication table and the fingerprint.
    fn finish(&mut self) {
        self.lookup = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| ((b.source, b.arrows.clone()), i))
            .collect();
        let d = self.basis.len();
        let mut mult = vec![Vec::new(); d * d];
        for x in 0..d {
            for y in 0..d {
                let (bx, by) = (&self.basis[x], &self.basis[y]);
                if bx.target != by.source {
                    continue;
                }
                let mut w = bx.arrows.clone();
                w.extend_from_slice(&by.arrows);
                mult[x * d + y] = self.reduce_walk(bx.source, &w);
            }
        }
        self.mult = mult;
        let mut h = DefaultHasher::new();
        self.quiver.hash(&mut h);
        self.field.hash(&mut h);
        self.basis.hash(&mut h);
        self.mult.hash(&mut h);
        self.fingerprint = h.finish();
    }

    /// Normal form of a walk starting at vertex `start` (arrows in travel order,
    /// assumed composable).
    pub fn reduce_walk(&self, start: usize, walk: &[usize]) -> Element {
        if walk.len() >= self.top_degree && !walk.is_empty() {
            return Vec::new();
        }
        if let Some(&i) = self.lookup.get(&(start, walk.to_vec())) {
            return vec![(i, 1)];
        }
        self.normal_forms.get(walk).cloned().unwrap_or_default()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }
    pub fn field(&self) -> Fp {
        self.field
    }
    pub fn p(&self) -> u32 {
        self.field.p()
    }
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }
    pub(crate) fn resolved_relations(&self) -> &[ResolvedRelation] {
        &self.resolved
    }
    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }
    pub fn vertex_ids(&self) -> &[u32] {
        self.quiver.vertices()
    }
    pub fn vertex_index(&self, id: u32) -> Result<usize> {
        self.quiver.vertex_index(id).ok_or(Error::UnknownVertex(id))
    }
    pub fn length_cap(&self) -> usize {
        self.length_cap
    }
    /// Smallest path length at which every path vanishes.
    pub fn nilpotency_degree(&self) -> usize {
        self.top_degree
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// Basis index of the idempotent at vertex index `i`.
    pub fn idempotent(&self, i: usize) -> usize {
        debug_assert!(self.basis[i].arrows.is_empty() && self.basis[i].source == i);
        i
    }

    /// Basis index of the arrow with index `a`.
    pub fn arrow_basis(&self, a: usize) -> usize {
        let (s, _) = self.quiver.arrow_ends(a);
        self.lookup[&(s, vec![a])]
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, x: usize, y: usize) -> &Element {
        &self.mult[x * self.basis.len() + y]
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let f = self.field;
        let mut acc: HashMap<usize, u32> = HashMap::new();
        for &(i, a) in x {
            for &(j, b) in y {
                for &(k, c) in self.mul_basis(i, j) {
                    let e = acc.entry(k).or_insert(0);
                    *e = f.add(*e, f.mul(f.mul(a, b), c));
                }
            }
        }
        let mut out: Element = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        out.sort_unstable();
        out
    }

    /// Basis indices with given source and target vertex indices.
    pub fn paths_between(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&b| self.basis[b].source == source && self.basis[b].target == target)
            .collect()
    }

    pub fn paths_from(&self, source: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&b| self.basis[b].source == source)
            .collect()
    }

    /// `C[i][j]` = number of basis paths from vertex index `i` to `j`,
    /// i.e. `dim e_i A e_j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let mut c = vec![vec![0; n]; n];
        for b in &self.basis {
            c[b.source][b.target] += 1;
        }
        c
    }

    pub fn is_semisimple(&self) -> bool {
        self.quiver.arrows().is_empty()
    }

    /// The opposite algebra, built once and cached. Its basis has the same
    /// indexing as `self`, with paths reversed.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| Arc::new(self.build_opposite()))
            .clone()
    }

    fn build_opposite(&self) -> Algebra {
        let quiver = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, w)| (*c, w.iter().rev().cloned().collect()))
                    .collect(),
            })
            .collect();
        let resolved = self
            .resolved
            .iter()
            .map(|r| ResolvedRelation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, w)| (*c, w.iter().rev().copied().collect()))
                    .collect(),
                source: r.target,
                target: r.source,
                degree: r.degree,
            })
            .collect();
        let basis: Vec<BasisPath> = self
            .basis
            .iter()
            .map(|b| BasisPath {
                source: b.target,
                target: b.source,
                arrows: b.arrows.iter().rev().copied().collect(),
            })
            .collect();
        let normal_forms = self
            .normal_forms
            .iter()
            .map(|(w, nf)| (w.iter().rev().copied().collect(), nf.clone()))
            .collect();
        let d = self.basis.len();
        let mut mult = vec![Vec::new(); d * d];
        for x in 0..d {
            for y in 0..d {
                mult[x * d + y] = self.mult[y * d + x].clone();
            }
        }
        let mut op = Algebra {
            quiver,
            field: self.field,
            relations,
            resolved,
            basis,
            lookup: HashMap::new(),
            normal_forms,
            top_degree: self.top_degree,
            mult: Vec::new(),
            length_cap: self.length_cap,
            fingerprint: 0,
            opposite: OnceLock::new(),
        };
        op.lookup = op
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| ((b.source, b.arrows.clone()), i))
            .collect();
        op.mult = mult;
        let mut h = DefaultHasher::new();
        op.quiver.hash(&mut h);
        op.field.hash(&mut h);
        op.basis.hash(&mut h);
        op.mult.hash(&mut h);
        op.fingerprint = h.finish();
        op
    }

    /// `A/(e)` for the idempotent `e` summing the given vertices: the bound
    /// quiver obtained by deleting those vertices, with relation terms through
    /// them dropped.
    pub fn quotient_by_idempotent(&self, killed: &BTreeSet<u32>) -> Result<Algebra> {
        for &v in killed {
            self.vertex_index(v)?;
        }
        let vertices: Vec<u32> = self
            .vertex_ids()
            .iter()
            .copied()
            .filter(|v| !killed.contains(v))
            .collect();
        let arrows: Vec<Arrow> = self
            .quiver
            .arrows()
            .iter()
            .filter(|a| !killed.contains(&a.source) && !killed.contains(&a.target))
            .cloned()
            .collect();
        let quiver = Quiver::new(vertices, arrows)?;
        let mut relations = Vec::new();
        for (rel, res) in self.relations.iter().zip(&self.resolved) {
            let terms: Vec<(i64, Vec<String>)> = rel
                .terms
                .iter()
                .zip(&res.terms)
                .filter(|(_, (_, walk))| {
                    walk.iter().all(|&a| {
                        let arrow = &self.quiver.arrows()[a];
                        !killed.contains(&arrow.source) && !killed.contains(&arrow.target)
                    })
                })
                .map(|(t, _)| t.clone())
                .collect();
            if !terms.is_empty() {
                relations.push(Relation { terms });
            }
        }
        Algebra::build_with(
            quiver,
            relations,
            self.p(),
            BuildOptions {
                length_cap: Some(self.length_cap),
            },
        )
    }

    /// Restriction to a set of vertices closed under the arrows between them
    /// (a union of connected components).
    fn restrict(&self, keep: &[u32]) -> Result<Algebra> {
        let killed: BTreeSet<u32> = self
            .vertex_ids()
            .iter()
            .copied()
            .filter(|v| !keep.contains(v))
            .collect();
        self.quotient_by_idempotent(&killed)
    }

    /// Block decomposition: one algebra per connected component, ordered by
    /// smallest vertex id, each with the vertex ids it carries over.
    pub fn blocks(&self) -> Result<Vec<(Algebra, Vec<u32>)>> {
        self.quiver
            .components()
            .into_iter()
            .map(|comp| Ok((self.restrict(&comp)?, comp)))
            .collect()
    }

    /// Direct product `self x other`; `other`'s vertices are shifted past the
    /// largest vertex id of `self` and clashing arrow names get primes.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        let offset = self.vertex_ids().iter().copied().max().unwrap_or(0);
        let mut vertices = self.vertex_ids().to_vec();
        vertices.extend(other.vertex_ids().iter().map(|v| v + offset));
        let mut arrows = self.quiver.arrows().to_vec();
        let mut rename = HashMap::new();
        for a in other.quiver.arrows() {
            let mut name = a.name.clone();
            while arrows.iter().any(|b| b.name == name) {
                name.push('\'');
            }
            rename.insert(a.name.clone(), name.clone());
            arrows.push(Arrow {
                name,
                source: a.source + offset,
                target: a.target + offset,
            });
        }
        let mut relations = self.relations.clone();
        relations.extend(other.relations.iter().map(|r| Relation {
            terms: r
                .terms
                .iter()
                .map(|(c, w)| (*c, w.iter().map(|n| rename[n].clone()).collect()))
                .collect(),
        }));
        Algebra::build(Quiver::new(vertices, arrows)?, relations, self.p())
    }

    /// Semisimple algebra `K^n` on vertices `1..=n`.
    pub fn semisimple(n: usize, p: u32) -> Result<Algebra> {
        let vertices = (1..=n as u32).collect();
        Algebra::build(Quiver::new(vertices, vec![])?, vec![], p)
    }

    /// Whether the two bound quivers agree up to a vertex relabeling that
    /// preserves arrows and Cartan data. Brute force over permutations; meant
    /// for small algebras.
    pub fn same_bound_quiver_shape(&self, other: &Algebra) -> bool {
        let n = self.num_vertices();
        if n != other.num_vertices()
            || self.dim() != other.dim()
            || self.quiver.arrows().len() != other.quiver.arrows().len()
            || n > 9
        {
            return false;
        }
        let arrow_counts = |a: &Algebra| {
            let mut c = vec![vec![0usize; n]; n];
            for i in 0..a.quiver.arrows().len() {
                let (s, t) = a.quiver.arrow_ends(i);
                c[s][t] += 1;
            }
            c
        };
        let (a1, a2) = (arrow_counts(self), arrow_counts(other));
        let (c1, c2) = (self.cartan_matrix(), other.cartan_matrix());
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let ok = (0..n).all(|i| {
                (0..n).all(|j| a1[i][j] == a2[perm[i]][perm[j]] && c1[i][j] == c2[perm[i]][perm[j]])
            });
            if ok {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
