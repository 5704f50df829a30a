//! Dynkin quivers with fixed orientations, their radical-square-zero
//! algebras, explicit presentations of the Auslander algebras of those, and
//! the reduction by the projective-injective idempotent.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::modules::projective;
use crate::presentation::is_injective;
use crate::quiver::{Arrow, Quiver, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinSpec {
    pub series: Series,
    pub rank: usize,
}

impl DynkinSpec {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinSpec { series, rank })
        } else {
            Err(Error::InvalidSpec {
                series: series.letter(),
                rank,
            })
        }
    }
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::D => 'D',
            Series::E => 'E',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            _ => None,
        }
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for DynkinSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("expected a Dynkin spec like A3, D4 or E6, got `{s}`"),
        };
        let mut chars = s.trim().chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        DynkinSpec::new(series, rank)
    }
}

fn arrow(name: String, source: u32, target: u32) -> Arrow {
    Arrow {
        name,
        source,
        target,
    }
}

/// The Dynkin quiver with the standard orientation: `A_m` linear
/// `1 -> 2 -> ... -> m`; `D_m` with `1 -> 3`, `2 -> 3 -> ... -> m`; `E_m` with
/// `1 -> 2 -> 4 -> 5 -> ...` and `3 -> 4`.
pub fn dynkin_quiver(spec: DynkinSpec) -> Result<Quiver> {
    let spec = DynkinSpec::new(spec.series, spec.rank)?;
    let m = spec.rank as u32;
    let vertices: Vec<u32> = (1..=m).collect();
    let arrows = match spec.series {
        Series::A => (1..m).map(|i| arrow(format!("a{i}"), i, i + 1)).collect(),
        Series::D => {
            let mut v = vec![arrow("a1".into(), 1, 3)];
            v.extend((2..m).map(|i| arrow(format!("a{i}"), i, i + 1)));
            v
        }
        Series::E => {
            let mut v = vec![
                arrow("a1".into(), 1, 2),
                arrow("a2".into(), 2, 4),
                arrow("a3".into(), 3, 4),
            ];
            v.extend((4..m).map(|i| arrow(format!("a{i}"), i, i + 1)));
            v
        }
    };
    Quiver::new(vertices, arrows)
}

/// `kQ` modulo all paths of length two.
pub fn rad_square_zero(quiver: Quiver, p: u32) -> Result<Algebra> {
    let mut relations = Vec::new();
    for first in quiver.arrows() {
        for second in quiver.arrows() {
            if first.target == second.source {
                relations.push(Relation::monomial(&[second.name.as_str(), first.name.as_str()]));
            }
        }
    }
    Algebra::build(quiver, relations, p)
}

struct Builder {
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            arrows: Vec::new(),
            relations: Vec::new(),
        }
    }

    fn arrow(&mut self, k: usize, source: usize, target: usize) {
        self.arrows
            .push(arrow(format!("a{k}"), source as u32, target as u32));
    }

    /// `a_x a_y = 0`.
    fn zero(&mut self, x: usize, y: usize) {
        self.relations
            .push(Relation::monomial(&[format!("a{x}").as_str(), format!("a{y}").as_str()]));
    }

    /// `a_w a_x = a_y a_z`.
    fn commute(&mut self, w: usize, x: usize, y: usize, z: usize) {
        self.relations.push(Relation::commutativity(
            &[format!("a{w}").as_str(), format!("a{x}").as_str()],
            &[format!("a{y}").as_str(), format!("a{z}").as_str()],
        ));
    }

    fn build(self, vertices: usize, p: u32) -> Result<Algebra> {
        let q = Quiver::new((1..=vertices as u32).collect(), self.arrows)?;
        Algebra::build(q, self.relations, p)
    }
}

/// Bound quiver presentation of the Auslander algebra of the
/// radical-square-zero algebra of the given Dynkin type.
pub fn auslander_presentation(spec: DynkinSpec, p: u32) -> Result<Algebra> {
    let spec = DynkinSpec::new(spec.series, spec.rank)?;
    let m = spec.rank;
    let mut b = Builder::new();
    match spec.series {
        Series::A => {
            for k in 1..=2 * m - 2 {
                b.arrow(k, k + 1, k);
            }
            for k in 1..m {
                b.zero(2 * k - 1, 2 * k);
            }
            b.build(2 * m - 1, p)
        }
        Series::D => {
            for k in 1..=2 * m - 6 {
                b.arrow(k, k + 1, k);
            }
            b.arrow(2 * m - 5, 2 * m - 4, 2 * m - 5);
            b.arrow(2 * m - 4, 2 * m - 3, 2 * m - 5);
            b.arrow(2 * m - 3, 2 * m - 2, 2 * m - 4);
            b.arrow(2 * m - 2, 2 * m - 2, 2 * m - 3);
            b.arrow(2 * m - 1, 2 * m - 1, 2 * m - 2);
            b.arrow(2 * m, 2 * m, 2 * m - 2);
            for k in 1..=m - 3 {
                b.zero(2 * k - 1, 2 * k);
            }
            b.commute(2 * m - 5, 2 * m - 3, 2 * m - 4, 2 * m - 2);
            b.zero(2 * m - 3, 2 * m - 1);
            b.zero(2 * m - 2, 2 * m);
            b.build(2 * m, p)
        }
        Series::E => {
            // Linear tail a_1 .. a_t, then the square and the two arms.
            let t = 2 * m - 8;
            for k in 1..=t {
                b.arrow(k, k + 1, k);
            }
            let c = t + 1;
            b.arrow(c, c + 1, c);
            b.arrow(c + 1, c + 2, c);
            b.arrow(c + 2, c + 3, c + 1);
            b.arrow(c + 3, c + 3, c + 2);
            b.arrow(c + 4, c + 4, c + 3);
            b.arrow(c + 5, c + 5, c + 3);
            b.arrow(c + 6, c + 6, c + 5);
            b.arrow(c + 7, c + 7, c + 6);
            for k in 1..=t / 2 {
                b.zero(2 * k - 1, 2 * k);
            }
            b.commute(c, c + 2, c + 1, c + 3);
            b.zero(c + 2, c + 4);
            b.zero(c + 3, c + 5);
            b.zero(c + 6, c + 7);
            b.build(2 * m, p)
        }
    }
}

/// Vertices whose indecomposable projective is also injective.
pub fn proj_inj_idempotent(algebra: &Arc<Algebra>) -> BTreeSet<u32> {
    (0..algebra.num_vertices())
        .filter(|&v| is_injective(&projective(algebra, v)))
        .map(|v| algebra.vertex_ids()[v])
        .collect()
}

/// The Auslander algebra modulo its projective-injective idempotent.
pub fn reduced_algebra(spec: DynkinSpec, p: u32) -> Result<Algebra> {
    let gamma = Arc::new(auslander_presentation(spec, p)?);
    let e = proj_inj_idempotent(&gamma);
    gamma.quotient_by_idempotent(&e)
}

/// Path algebra of `4 -> 3 <- 5`.
pub fn converging_a3(p: u32) -> Result<Algebra> {
    let q = Quiver::from_arrows(&[3, 4, 5], &[("a", 4, 3), ("b", 5, 3)])?;
    Algebra::build(q, vec![], p)
}

/// Path algebra of `1 -> 2`.
pub fn hereditary_a2(p: u32) -> Result<Algebra> {
    let q = Quiver::from_arrows(&[1, 2], &[("a", 1, 2)])?;
    Algebra::build(q, vec![], p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::DEFAULT_PRIME;

    fn spec(s: &str) -> DynkinSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_specs() {
        assert_eq!(spec("d5"), DynkinSpec { series: Series::D, rank: 5 });
        assert!("D3".parse::<DynkinSpec>().is_err());
        assert!("E9".parse::<DynkinSpec>().is_err());
        assert!("X2".parse::<DynkinSpec>().is_err());
        assert!("A0".parse::<DynkinSpec>().is_err());
    }

    #[test]
    fn radical_square_zero_dims() {
        let dim = |s| rad_square_zero(dynkin_quiver(spec(s)).unwrap(), DEFAULT_PRIME).unwrap().dim();
        assert_eq!(dim("A2"), 3);
        assert_eq!(dim("A3"), 5);
        assert_eq!(dim("D4"), 7);
        assert_eq!(dim("E6"), 11);
    }

    #[test]
    fn vertex_counts() {
        for (s, n) in [("A1", 1), ("A3", 5), ("D4", 8), ("D6", 12), ("E6", 12), ("E7", 14), ("E8", 16)] {
            assert_eq!(auslander_presentation(spec(s), DEFAULT_PRIME).unwrap().num_vertices(), n);
        }
        assert_eq!(auslander_presentation(spec("A3"), DEFAULT_PRIME).unwrap().dim(), 10);
    }

    #[test]
    fn d4_idempotent() {
        let g = Arc::new(auslander_presentation(spec("D4"), DEFAULT_PRIME).unwrap());
        assert_eq!(proj_inj_idempotent(&g), BTreeSet::from([2, 6, 7, 8]));
    }
}
