//! Support τ-tilting pairs `(M, P)`: a basic τ-rigid module together with a
//! set of killed vertices whose projectives have no maps into `M`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::decompose::basic_summands;
use crate::error::{Error, Result};
use crate::presentation::{g_vector, is_tau_rigid, pd_le_1};
use crate::rep::Representation;

/// Canonical dedup key: summand g-vectors sorted, then the killed vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairKey {
    pub g_vectors: Vec<Vec<i64>>,
    pub killed: Vec<u32>,
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self
            .g_vectors
            .iter()
            .map(|g| {
                let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let ks: Vec<String> = self.killed.iter().map(|k| k.to_string()).collect();
        write!(f, "[{}] | {{{}}}", gs.join(" "), ks.join(","))
    }
}

/// A position of a pair: a module summand (index into `summands`) or a
/// killed vertex id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Summand(usize),
    Killed(u32),
}

#[derive(Debug, Clone)]
pub struct SttPair {
    algebra: Arc<Algebra>,
    summands: Vec<Representation>,
    g_vectors: Vec<Vec<i64>>,
    killed: BTreeSet<u32>,
}

impl SttPair {
    /// Assembles a pair from indecomposable, pairwise non-isomorphic summands
    /// without checking the τ-rigidity conditions. Summands are sorted by
    /// g-vector.
    pub fn from_parts(
        algebra: Arc<Algebra>,
        summands: Vec<Representation>,
        killed: BTreeSet<u32>,
    ) -> SttPair {
        let mut tagged: Vec<(Vec<i64>, Representation)> =
            summands.into_iter().map(|s| (g_vector(&s), s)).collect();
        tagged.sort_by(|a, b| a.0.cmp(&b.0));
        let (g_vectors, summands) = tagged.into_iter().unzip();
        SttPair {
            algebra,
            summands,
            g_vectors,
            killed,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn summands(&self) -> &[Representation] {
        &self.summands
    }

    pub fn g_vectors(&self) -> &[Vec<i64>] {
        &self.g_vectors
    }

    pub fn killed(&self) -> &BTreeSet<u32> {
        &self.killed
    }

    pub fn key(&self) -> PairKey {
        PairKey {
            g_vectors: self.g_vectors.clone(),
            killed: self.killed.iter().copied().collect(),
        }
    }

    /// The module part `M`.
    pub fn module(&self) -> Representation {
        Representation::direct_sum_all(&self.algebra, self.summands.iter()).expect("summands share the algebra")
    }

    /// Summands first, then killed vertices in increasing order.
    pub fn slots(&self) -> Vec<Slot> {
        (0..self.summands.len())
            .map(Slot::Summand)
            .chain(self.killed.iter().map(|&k| Slot::Killed(k)))
            .collect()
    }

    /// Slot at a flat position index as used by [`SttPair::slots`].
    pub fn slot(&self, position: usize) -> Result<Slot> {
        self.slots()
            .get(position)
            .copied()
            .ok_or(Error::InvalidPosition(position))
    }

    pub fn position_of(&self, slot: Slot) -> Option<usize> {
        self.slots().iter().position(|&s| s == slot)
    }

    pub fn is_support_tau_tilting(&self) -> bool {
        self.summands.len() + self.killed.len() == self.algebra.num_vertices()
    }

    /// `M` is a tilting module: nothing killed and `pd M <= 1`.
    pub fn is_tilting(&self) -> bool {
        self.killed.is_empty() && self.is_support_tau_tilting() && pd_le_1(&self.module())
    }

    /// Dimension vectors of the summands, each keyed by vertex position.
    pub fn summand_dims(&self) -> Vec<Vec<usize>> {
        self.summands.iter().map(|s| s.dims().to_vec()).collect()
    }
}

/// Checks that `(M, P(killed))` is a support τ-tilting pair, basic-ifying `M`.
pub fn validate_pair(m: &Representation, killed: &BTreeSet<u32>) -> Result<SttPair> {
    let algebra = m.algebra().clone();
    let summands = basic_summands(m)?;
    for &k in killed {
        let v = algebra.vertex_index(k)?;
        if m.dim_at(v) != 0 {
            return Err(Error::SupportOverlap(k));
        }
    }
    let n = algebra.num_vertices();
    if summands.len() + killed.len() != n {
        return Err(Error::WrongSummandCount {
            summands: summands.len(),
            killed: killed.len(),
            vertices: n,
        });
    }
    let pair = SttPair::from_parts(algebra, summands, killed.clone());
    if !is_tau_rigid(&pair.module()) {
        return Err(Error::NotTauRigid);
    }
    Ok(pair)
}

/// Re-runs all pair checks on an existing pair.
pub fn revalidate(pair: &SttPair) -> Result<SttPair> {
    validate_pair(&pair.module(), pair.killed())
}

pub fn pair_g_key(m: &Representation, killed: &BTreeSet<u32>) -> Result<PairKey> {
    let summands = basic_summands(m)?;
    Ok(SttPair::from_parts(m.algebra().clone(), summands, killed.clone()).key())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::{projective, regular, simple};
    use crate::quiver::Quiver;

    fn converging() -> Arc<Algebra> {
        let q = Quiver::from_arrows(&[3, 4, 5], &[("a", 4, 3), ("b", 5, 3)]).unwrap();
        Arc::new(Algebra::build(q, vec![], 32003).unwrap())
    }

    #[test]
    fn regular_module_is_a_pair() {
        let a = converging();
        let p = validate_pair(&regular(&a), &BTreeSet::new()).unwrap();
        assert_eq!(p.summands().len(), 3);
        assert!(p.is_tilting());
        assert_eq!(
            p.key().g_vectors,
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn wrong_count_and_overlap() {
        let a = converging();
        let s3 = simple(&a, 0);
        let one = BTreeSet::from([4]);
        assert!(matches!(
            validate_pair(&s3, &one),
            Err(Error::WrongSummandCount { summands: 1, killed: 1, vertices: 3 })
        ));
        let p4 = projective(&a, 1);
        assert_eq!(
            validate_pair(&p4, &BTreeSet::from([3, 5])).unwrap_err(),
            Error::SupportOverlap(3)
        );
    }

    #[test]
    fn duplicate_summands_are_basicified() {
        let a = converging();
        let m = regular(&a).direct_sum(&projective(&a, 2)).unwrap();
        assert_eq!(validate_pair(&m, &BTreeSet::new()).unwrap().summands().len(), 3);
    }
}
