//! The five oriented-hypergraphic matrices and exact-integer oracles for
//! determinant, permanent and the two characteristic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::OrientedHypergraph;
use crate::polynomial::IntPolynomial;

/// Dense integer matrix with labelled rows and columns. Arithmetic is
/// checked and panics on `i64` overflow rather than wrapping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        let entries = vec![0; row_labels.len() * col_labels.len()];
        IntMatrix {
            row_labels,
            col_labels,
            entries,
        }
    }

    /// Unlabelled matrix from rows; labels default to `0..n`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        IntMatrix {
            row_labels: (0..n_rows).map(|i| i.to_string()).collect(),
            col_labels: (0..n_cols).map(|i| i.to_string()).collect(),
            entries: rows.concat(),
        }
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let mut m = IntMatrix::zeros(labels.clone(), labels);
        for i in 0..m.rows() {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        let cols = self.cols();
        self.entries[r * cols + c] = value;
    }

    fn add_at(&mut self, r: usize, c: usize, delta: i64) {
        let v = self.get(r, c).checked_add(delta).expect("matrix entry overflow");
        self.set(r, c, v);
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.cols().max(1)).map(|r| r.to_vec()).take(self.rows()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.col_labels.clone(), self.row_labels.clone());
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols(), rhs.rows(), "dimension mismatch");
        let mut out = IntMatrix::zeros(self.row_labels.clone(), rhs.col_labels.clone());
        for r in 0..self.rows() {
            for c in 0..rhs.cols() {
                let mut acc = 0i64;
                for k in 0..self.cols() {
                    let term = self.get(r, k).checked_mul(rhs.get(k, c)).expect("matrix product overflow");
                    acc = acc.checked_add(term).expect("matrix product overflow");
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows(), self.cols()), (rhs.rows(), rhs.cols()), "dimension mismatch");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = a.checked_sub(*b).expect("matrix difference overflow");
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for a in &mut out.entries {
            *a = a.checked_neg().expect("matrix negation overflow");
        }
        out
    }

    /// `self^k` for a square matrix; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> IntMatrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = IntMatrix::identity(self.row_labels.clone());
        out.col_labels = self.col_labels.clone();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows()).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows().min(self.cols())).map(|i| self.get(i, i)).sum()
    }

    /// `x·I − self` evaluated at an integer `x`, as big integers.
    fn shifted(&self, x: i64) -> Vec<Vec<BigInt>> {
        (0..self.rows())
            .map(|r| {
                (0..self.cols())
                    .map(|c| {
                        let diag = if r == c { x } else { 0 };
                        BigInt::from(diag) - BigInt::from(self.get(r, c))
                    })
                    .collect()
            })
            .collect()
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.to_rows().iter().enumerate() {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `H`: entry `(v, e)` is the sum of `σ(i)` over incidences joining `v` and `e`.
pub fn incidence_matrix(g: &OrientedHypergraph) -> IntMatrix {
    let mut h = IntMatrix::zeros(g.vertex_names().to_vec(), g.edge_names().to_vec());
    for inc in g.incidences() {
        h.add_at(inc.vertex, inc.edge, inc.sign.value());
    }
    h
}

/// `A`: entry `(v, w)` sums the signs of all directed adjacencies `v → w`.
/// A loop contributes once per direction.
pub fn adjacency_matrix(g: &OrientedHypergraph) -> IntMatrix {
    let labels = g.vertex_names().to_vec();
    let mut a = IntMatrix::zeros(labels.clone(), labels);
    for v in 0..g.vertex_count() {
        for adj in g.adjacencies(v).expect("vertex in range") {
            a.add_at(v, adj.head_vertex, g.adjacency_sign(&adj).value());
        }
    }
    a
}

pub fn degree_matrix(g: &OrientedHypergraph) -> IntMatrix {
    let labels = g.vertex_names().to_vec();
    let mut d = IntMatrix::zeros(labels.clone(), labels);
    for v in 0..g.vertex_count() {
        d.set(v, v, g.incidences_at(v).len() as i64);
    }
    d
}

/// `L = D − A`. Debug builds also check `L = H·Hᵀ`.
pub fn laplacian(g: &OrientedHypergraph) -> IntMatrix {
    let l = degree_matrix(g).sub(&adjacency_matrix(g));
    debug_assert_eq!(
        l.entries,
        {
            let h = incidence_matrix(g);
            h.mul(&h.transpose()).entries
        },
        "D - A must equal H·Hᵀ"
    );
    l
}

/// Signed weak-walk counts of length `k` between every vertex pair, by
/// direct enumeration.
pub fn weak_walk_matrix(g: &OrientedHypergraph, k: usize, max_walks: u64) -> Result<IntMatrix> {
    let labels = g.vertex_names().to_vec();
    let mut w = IntMatrix::zeros(labels.clone(), labels);
    for v in 0..g.vertex_count() {
        for u in 0..g.vertex_count() {
            w.set(v, u, g.signed_walk_count(v, u, k, max_walks)?);
        }
    }
    Ok(w)
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    m.require_square()?;
    Ok(bareiss(m.big_rows()))
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exact permanent by inclusion–exclusion over column subsets.
pub fn perm_exact(m: &IntMatrix, max_size: usize) -> Result<BigInt> {
    m.require_square()?;
    if m.rows() > max_size {
        return Err(Error::ResourceLimit {
            what: "permanent size",
            limit: max_size as u64,
        });
    }
    Ok(ryser(&m.big_rows()))
}

fn ryser(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    let mut row_sums = vec![BigInt::zero(); n];
    // Gray-code walk over column subsets
    let mut subset = 0u64;
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        let adding = subset & (1 << col) == 0;
        subset ^= 1 << col;
        for (r, s) in row_sums.iter_mut().enumerate() {
            if adding {
                *s += &a[r][col];
            } else {
                *s -= &a[r][col];
            }
        }
        let prod: BigInt = row_sums.iter().product();
        if (n - subset.count_ones() as usize).is_multiple_of(2) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    total
}

/// `det(xI − M)` by evaluation at `x = 0..n` and exact interpolation.
pub fn charpoly_det_oracle(m: &IntMatrix) -> Result<IntPolynomial> {
    m.require_square()?;
    let values = (0..=m.rows() as i64).map(|x| bareiss(m.shifted(x))).collect::<Vec<_>>();
    interpolate_monic(&values)
}

/// `perm(xI − M)` by evaluation at `x = 0..n` and exact interpolation.
pub fn charpoly_perm_oracle(m: &IntMatrix, max_size: usize) -> Result<IntPolynomial> {
    m.require_square()?;
    if m.rows() > max_size {
        return Err(Error::ResourceLimit {
            what: "permanent size",
            limit: max_size as u64,
        });
    }
    let values = (0..=m.rows() as i64).map(|x| ryser(&m.shifted(x))).collect::<Vec<_>>();
    interpolate_monic(&values)
}

/// Lagrange interpolation through `(i, values[i])` for `i = 0..=n`.
///
/// Over the common denominator `n!` the basis weights are
/// `(-1)^(n-i)·C(n, i)`, so everything stays in integers until the final
/// division, which must be exact.
fn interpolate_monic(values: &[BigInt]) -> Result<IntPolynomial> {
    let n = values.len() - 1;
    let mut numer = vec![BigInt::zero(); n + 1];
    let mut binom = BigInt::one();
    for (i, y) in values.iter().enumerate() {
        if i > 0 {
            binom = binom * BigInt::from(n - i + 1) / BigInt::from(i);
        }
        // ∏_{j≠i} (x − j), ascending coefficients
        let mut basis = vec![BigInt::one()];
        for j in (0..=n).filter(|&j| j != i) {
            let mut next = vec![BigInt::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * BigInt::from(j);
            }
            basis = next;
        }
        let mut weight = y * &binom;
        if (n - i) % 2 == 1 {
            weight = -weight;
        }
        for (d, c) in basis.iter().enumerate() {
            numer[d] += c * &weight;
        }
    }
    let denom: BigInt = (1..=n).map(BigInt::from).product();
    let mut coeffs = Vec::with_capacity(n + 1);
    for c in numer {
        let (q, r) = c.div_rem(&denom);
        if !r.is_zero() {
            return Err(Error::InternalNonIntegral(format!("{c}/{denom}")));
        }
        coeffs.push(q);
    }
    let poly = IntPolynomial::new(coeffs);
    if poly.degree() != Some(n) || !poly.is_monic() {
        return Err(Error::InternalNonIntegral(format!(
            "interpolant {poly} is not monic of degree {n}"
        )));
    }
    Ok(poly)
}
