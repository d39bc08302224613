//! Determinants, permanents and characteristic polynomials of `A` and `L`
//! as signed contributor counts.
//!
//! | quantity            | summed over          | sign                       |
//! |---------------------|----------------------|----------------------------|
//! | `perm(L)`           | all contributors     | `(-1)^(oc+nc)`             |
//! | `det(L)`            | all contributors     | `(-1)^pc`                  |
//! | `perm(A)`           | backstep-free        | `(-1)^nc`                  |
//! | `det(A)`            | backstep-free        | `(-1)^(ec+nc)`             |
//! | `[x^k] perm(xI−A)`  | `Ĉ₌ₖ`                | `(-1)^(oc+nc)`             |
//! | `[x^k] det(xI−A)`   | `Ĉ₌ₖ`                | `(-1)^pc`                  |
//! | `[x^k] perm(xI−L)`  | `Ĉ≥ₖ`                | `(-1)^(nc+bs)`             |
//! | `[x^k] det(xI−L)`   | `Ĉ≥ₖ`                | `(-1)^(ec+nc+bs)`          |
//!
//! The hat families are value-deduplicated sets of sub-contributors; see
//! [`crate::contributors`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::contributors::{hat_families, visit_contributors, visit_hat_elements, SubContributor, Tallies};
use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::matrices::{adjacency_matrix, charpoly_det_oracle, charpoly_perm_oracle, det_exact, laplacian, perm_exact};
use crate::polynomial::IntPolynomial;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Functional {
    Det,
    Perm,
}

/// One of `perm(L)`, `det(L)`, `perm(A)`, `det(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Objective {
    pub matrix: MatrixKind,
    pub functional: Functional,
}

impl Objective {
    pub const PERM_L: Objective = Objective::new(MatrixKind::Laplacian, Functional::Perm);
    pub const DET_L: Objective = Objective::new(MatrixKind::Laplacian, Functional::Det);
    pub const PERM_A: Objective = Objective::new(MatrixKind::Adjacency, Functional::Perm);
    pub const DET_A: Objective = Objective::new(MatrixKind::Adjacency, Functional::Det);
    pub const ALL: [Objective; 4] = [Self::PERM_L, Self::DET_L, Self::PERM_A, Self::DET_A];

    pub const fn new(matrix: MatrixKind, functional: Functional) -> Self {
        Objective { matrix, functional }
    }

    pub fn name(self) -> &'static str {
        match (self.functional, self.matrix) {
            (Functional::Perm, MatrixKind::Laplacian) => "perm_L",
            (Functional::Det, MatrixKind::Laplacian) => "det_L",
            (Functional::Perm, MatrixKind::Adjacency) => "perm_A",
            (Functional::Det, MatrixKind::Adjacency) => "det_A",
        }
    }

    /// Whether a contributor with these stats enters the scalar sum.
    fn counts(self, s: &Tallies) -> bool {
        self.matrix == MatrixKind::Laplacian || s.bs == 0
    }

    /// Sign exponent parity of one contributor in the scalar sum.
    fn scalar_parity(self, s: &Tallies) -> usize {
        match (self.functional, self.matrix) {
            (Functional::Perm, MatrixKind::Laplacian) => s.oc + s.nc,
            (Functional::Det, MatrixKind::Laplacian) => s.pc,
            (Functional::Perm, MatrixKind::Adjacency) => s.nc,
            (Functional::Det, MatrixKind::Adjacency) => s.ec + s.nc,
        }
    }

    /// Sign exponent parity of one sub-contributor in a coefficient sum.
    fn coefficient_parity(self, s: &Tallies) -> usize {
        match (self.functional, self.matrix) {
            (Functional::Perm, MatrixKind::Adjacency) => s.oc + s.nc,
            (Functional::Det, MatrixKind::Adjacency) => s.pc,
            (Functional::Perm, MatrixKind::Laplacian) => s.nc + s.bs,
            (Functional::Det, MatrixKind::Laplacian) => s.ec + s.nc + s.bs,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Objective::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::PreconditionViolated(format!("unknown objective `{s}`")))
    }
}

fn signed(parity: usize) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All four scalars from one contributor traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalarSummary {
    pub contributors: u64,
    pub backstep_free: u64,
    pub perm_l: i64,
    pub det_l: i64,
    pub perm_a: i64,
    pub det_a: i64,
}

impl ScalarSummary {
    pub fn get(&self, objective: Objective) -> i64 {
        match objective {
            Objective::PERM_L => self.perm_l,
            Objective::DET_L => self.det_l,
            Objective::PERM_A => self.perm_a,
            _ => self.det_a,
        }
    }
}

pub fn scalar_summary(g: &OrientedHypergraph, max_contributors: u64) -> Result<ScalarSummary> {
    let mut out = ScalarSummary {
        contributors: 0,
        backstep_free: 0,
        perm_l: 0,
        det_l: 0,
        perm_a: 0,
        det_a: 0,
    };
    out.contributors = visit_contributors(g, max_contributors, |c| {
        let s = c.tallies(g);
        out.perm_l += signed(Objective::PERM_L.scalar_parity(&s));
        out.det_l += signed(Objective::DET_L.scalar_parity(&s));
        if s.bs == 0 {
            out.backstep_free += 1;
            out.perm_a += signed(Objective::PERM_A.scalar_parity(&s));
            out.det_a += signed(Objective::DET_A.scalar_parity(&s));
        }
    })?;
    Ok(out)
}

/// One scalar by contributor counting.
pub fn scalar(g: &OrientedHypergraph, objective: Objective, max_contributors: u64) -> Result<i64> {
    let mut total = 0i64;
    visit_contributors(g, max_contributors, |c| {
        let s = c.tallies(g);
        if objective.counts(&s) {
            total += signed(objective.scalar_parity(&s));
        }
    })?;
    Ok(total)
}

pub fn perm_l(g: &OrientedHypergraph, max_contributors: u64) -> Result<i64> {
    scalar(g, Objective::PERM_L, max_contributors)
}

pub fn det_l(g: &OrientedHypergraph, max_contributors: u64) -> Result<i64> {
    scalar(g, Objective::DET_L, max_contributors)
}

pub fn perm_a(g: &OrientedHypergraph, max_contributors: u64) -> Result<i64> {
    scalar(g, Objective::PERM_A, max_contributors)
}

pub fn det_a(g: &OrientedHypergraph, max_contributors: u64) -> Result<i64> {
    scalar(g, Objective::DET_A, max_contributors)
}

fn sum_family(g: &OrientedHypergraph, objective: Objective, family: &[BTreeSet<SubContributor>]) -> IntPolynomial {
    IntPolynomial::new(
        family
            .iter()
            .map(|subs| {
                let total: i64 = subs
                    .iter()
                    .map(|sub| signed(objective.coefficient_parity(&sub.stats(g).tallies())))
                    .sum();
                BigInt::from(total)
            })
            .collect(),
    )
}

/// `perm(xI − M)` or `det(xI − M)` for `M ∈ {A, L}` as signed sums over the
/// deduplicated hat families.
pub fn charpoly(g: &OrientedHypergraph, objective: Objective, max_contributors: u64) -> Result<IntPolynomial> {
    let [perm_l, det_l, perm_a, det_a] = all_charpolys(g, max_contributors)?;
    Ok(match objective {
        Objective::PERM_L => perm_l,
        Objective::DET_L => det_l,
        Objective::PERM_A => perm_a,
        _ => det_a,
    })
}

/// The four characteristic polynomials in [`Objective::ALL`] order, from a
/// single streamed pass over the hat families.
pub fn all_charpolys(g: &OrientedHypergraph, max_contributors: u64) -> Result<[IntPolynomial; 4]> {
    let n = g.vertex_count();
    let mut coeffs = [(); 4].map(|_| vec![0i64; n + 1]);
    visit_hat_elements(g, max_contributors, |k, exact, t| {
        for (o, c) in Objective::ALL.iter().zip(coeffs.iter_mut()) {
            if o.matrix == MatrixKind::Laplacian || exact {
                c[k] += signed(o.coefficient_parity(&t));
            }
        }
    })?;
    Ok(coeffs.map(|c| IntPolynomial::new(c.into_iter().map(BigInt::from).collect())))
}

/// Same sums over explicitly materialized hat sets.
pub fn charpoly_from_sets(g: &OrientedHypergraph, objective: Objective, max_contributors: u64) -> Result<IntPolynomial> {
    let (eq, geq) = hat_families(g, max_contributors)?;
    Ok(match objective.matrix {
        MatrixKind::Adjacency => sum_family(g, objective, &eq),
        MatrixKind::Laplacian => sum_family(g, objective, &geq),
    })
}

pub fn charpoly_perm_a(g: &OrientedHypergraph, max_contributors: u64) -> Result<IntPolynomial> {
    charpoly(g, Objective::PERM_A, max_contributors)
}

pub fn charpoly_det_a(g: &OrientedHypergraph, max_contributors: u64) -> Result<IntPolynomial> {
    charpoly(g, Objective::DET_A, max_contributors)
}

pub fn charpoly_perm_l(g: &OrientedHypergraph, max_contributors: u64) -> Result<IntPolynomial> {
    charpoly(g, Objective::PERM_L, max_contributors)
}

pub fn charpoly_det_l(g: &OrientedHypergraph, max_contributors: u64) -> Result<IntPolynomial> {
    charpoly(g, Objective::DET_L, max_contributors)
}

/// Cross-check that never deduplicates: the coefficient of `x^k` summed over
/// every `k`-set `S` of vertices and every contributor of `G` with `S` weakly
/// deleted (backstep-free ones only for `A`).
pub fn charpoly_by_deletion(g: &OrientedHypergraph, objective: Objective, max_contributors: u64) -> Result<IntPolynomial> {
    g.require_no_isolated_vertices()?;
    let n = g.vertex_count();
    let mut coeffs = vec![0i64; n + 1];
    for deleted in (0..n).powerset() {
        let sub = g.weak_delete(&deleted, false)?;
        let k = deleted.len();
        visit_contributors(&sub, max_contributors, |c| {
            let s = c.tallies(&sub);
            if objective.matrix == MatrixKind::Laplacian || s.bs == 0 {
                coeffs[k] += signed(objective.coefficient_parity(&s));
            }
        })?;
    }
    Ok(IntPolynomial::new(coeffs.into_iter().map(BigInt::from).collect()))
}

/// The same scalar by exact linear algebra on the matrix.
pub fn oracle_scalar(g: &OrientedHypergraph, objective: Objective, limits: &Limits) -> Result<BigInt> {
    let m = match objective.matrix {
        MatrixKind::Adjacency => adjacency_matrix(g),
        MatrixKind::Laplacian => laplacian(g),
    };
    match objective.functional {
        Functional::Det => det_exact(&m),
        Functional::Perm => perm_exact(&m, limits.max_permanent_size),
    }
}

/// The same characteristic polynomial by interpolation on the matrix.
pub fn oracle_charpoly(g: &OrientedHypergraph, objective: Objective, limits: &Limits) -> Result<IntPolynomial> {
    let m = match objective.matrix {
        MatrixKind::Adjacency => adjacency_matrix(g),
        MatrixKind::Laplacian => laplacian(g),
    };
    match objective.functional {
        Functional::Det => charpoly_det_oracle(&m),
        Functional::Perm => charpoly_perm_oracle(&m, limits.max_permanent_size),
    }
}

/// Contributor scalar, checked against the oracle.
pub fn checked_scalar(g: &OrientedHypergraph, objective: Objective, limits: &Limits) -> Result<i64> {
    let value = scalar(g, objective, limits.max_contributors)?;
    let oracle = oracle_scalar(g, objective, limits)?;
    if BigInt::from(value) != oracle {
        return Err(Error::VerificationMismatch {
            what: objective.name().to_string(),
            contributor: value.to_string(),
            oracle: oracle.to_string(),
        });
    }
    Ok(value)
}

/// Contributor characteristic polynomial, checked against the oracle.
pub fn checked_charpoly(g: &OrientedHypergraph, objective: Objective, limits: &Limits) -> Result<IntPolynomial> {
    let value = charpoly(g, objective, limits.max_contributors)?;
    let oracle = oracle_charpoly(g, objective, limits)?;
    if value != oracle {
        return Err(Error::VerificationMismatch {
            what: format!("charpoly {}", objective.name()),
            contributor: value.to_string(),
            oracle: oracle.to_string(),
        });
    }
    Ok(value)
}
