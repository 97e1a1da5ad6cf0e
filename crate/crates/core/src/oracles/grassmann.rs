//! Subspace enumeration over small finite fields.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Largest ambient dimension enumerated.
pub const MAX_N: u32 = 4;

/// `F_q` for `q` in `{2, 3, 4, 5}`. Elements are `0..q`; for `q = 4` the
/// two bits are the coefficients of `F_2[t]/(t^2+t+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteField {
    q: u8,
}

// products in F_4 with 2 = t, 3 = t + 1
const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2..=5 => Ok(FiniteField { q: q as u8 }),
            _ => Err(Error::InvalidQ(format!(
                "finite fields are supported for q in {{2,3,4,5}}, got {q}"
            ))),
        }
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        if self.q == 4 {
            a ^ b
        } else {
            (a + b) % self.q
        }
    }

    pub fn neg(&self, a: u8) -> u8 {
        if self.q == 4 {
            a
        } else {
            (self.q - a) % self.q
        }
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        if self.q == 4 {
            F4_MUL[a as usize][b as usize]
        } else {
            (a * b) % self.q
        }
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn elements(&self) -> std::ops::Range<u8> {
        0..self.q
    }
}

/// A subspace of `F_q^n`, stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqSubspace {
    pub q: u32,
    pub n: u32,
    pub basis: Vec<Vec<u8>>,
}

impl FqSubspace {
    pub fn span(field: &FiniteField, n: u32, vectors: &[Vec<u8>]) -> Self {
        FqSubspace {
            q: field.order(),
            n,
            basis: rref(field, vectors),
        }
    }

    /// `span(e_i : i in indices)`, zero-based.
    pub fn coordinate(
        field: &FiniteField,
        n: u32,
        indices: impl IntoIterator<Item = usize>,
    ) -> Self {
        let vectors: Vec<Vec<u8>> = indices
            .into_iter()
            .map(|i| {
                let mut v = vec![0; n as usize];
                v[i] = 1;
                v
            })
            .collect();
        Self::span(field, n, &vectors)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sum_dim(&self, field: &FiniteField, other: &FqSubspace) -> usize {
        let rows: Vec<Vec<u8>> = self.basis.iter().chain(&other.basis).cloned().collect();
        rref(field, &rows).len()
    }

    pub fn intersection_dim(&self, field: &FiniteField, other: &FqSubspace) -> usize {
        self.dim() + other.dim() - self.sum_dim(field, other)
    }

    pub fn contains(&self, field: &FiniteField, other: &FqSubspace) -> bool {
        self.sum_dim(field, other) == self.dim()
    }
}

/// Reduced row echelon form with zero rows dropped.
pub fn rref(field: &FiniteField, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut rows: Vec<Vec<u8>> = rows.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("nonzero field element");
        for v in rows[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = field.neg(row[col]);
                for (cell, &p) in row.iter_mut().zip(&pivot_row) {
                    *cell = field.add(*cell, field.mul(factor, p));
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

fn check_n(n: u32) -> Result<()> {
    if n > MAX_N {
        return Err(Error::ResourceLimit(format!(
            "subspace enumeration needs n <= {MAX_N}, got n = {n}"
        )));
    }
    Ok(())
}

/// All `m`-dimensional subspaces of `F_q^n`, one per pivot pattern and
/// choice of free entries.
pub fn enumerate_subspaces(q: u32, n: u32, m: u32) -> Result<Vec<FqSubspace>> {
    check_n(n)?;
    let field = FiniteField::new(q)?;
    if m > n {
        return Ok(Vec::new());
    }
    let (n_us, m_us) = (n as usize, m as usize);
    let mut out = Vec::new();
    for pivots in (0..n_us).combinations(m_us) {
        // free slots: row r, columns after its pivot that are not pivots
        let free: Vec<(usize, usize)> = (0..m_us)
            .flat_map(|r| {
                let pivots = &pivots;
                (pivots[r] + 1..n_us)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let choices = free
            .iter()
            .map(|_| field.elements())
            .multi_cartesian_product();
        let mut emit = |values: &[u8]| {
            let mut basis = vec![vec![0u8; n_us]; m_us];
            for (r, &p) in pivots.iter().enumerate() {
                basis[r][p] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(values) {
                basis[r][c] = v;
            }
            out.push(FqSubspace { q, n, basis });
        };
        if free.is_empty() {
            emit(&[]);
        } else {
            for values in choices {
                emit(&values);
            }
        }
    }
    Ok(out)
}

/// The same set, found by row-reducing every `m`-tuple of vectors. Only
/// feasible for tiny `q^(nm)`.
pub fn enumerate_subspaces_by_span(q: u32, n: u32, m: u32) -> Result<BTreeSet<FqSubspace>> {
    check_n(n)?;
    let field = FiniteField::new(q)?;
    let work = (q as u64).checked_pow(n * m).unwrap_or(u64::MAX);
    if work > 1 << 20 {
        return Err(Error::ResourceLimit(format!(
            "span enumeration of {work} tuples is too large"
        )));
    }
    let vectors: Vec<Vec<u8>> = (0..n)
        .map(|_| field.elements())
        .multi_cartesian_product()
        .collect();
    let vectors = if n == 0 { vec![Vec::new()] } else { vectors };
    let mut out = BTreeSet::new();
    for tuple in (0..m).map(|_| vectors.iter()).multi_cartesian_product() {
        let rows: Vec<Vec<u8>> = tuple.into_iter().cloned().collect();
        let s = FqSubspace::span(&field, n, &rows);
        if s.dim() == m as usize {
            out.insert(s);
        }
    }
    if m == 0 {
        out.insert(FqSubspace {
            q,
            n,
            basis: Vec::new(),
        });
    }
    Ok(out)
}

/// `Gr(n, m | k, l)`: `m`-dimensional `W` with `V_l ⊂ W` and
/// `dim(W ∩ V_k^c) = m - l`, where `V_l = span(e_1..e_l)` and
/// `V_k^c = span(e_(k+1)..e_n)`.
pub fn relative_grassmannian(q: u32, n: u32, m: u32, k: u32, l: u32) -> Result<Vec<FqSubspace>> {
    let field = FiniteField::new(q)?;
    let v_l = FqSubspace::coordinate(&field, n, 0..l as usize);
    let v_kc = FqSubspace::coordinate(&field, n, k as usize..n as usize);
    Ok(enumerate_subspaces(q, n, m)?
        .into_iter()
        .filter(|w| w.contains(&field, &v_l))
        .filter(|w| w.intersection_dim(&field, &v_kc) + l as usize == m as usize)
        .collect())
}

/// `#{(W, W') in Gr(n,m|k,l)^2 : m - dim(W ∩ W') = i}`.
pub fn count_intersection_pairs(q: u32, n: u32, m: u32, k: u32, l: u32, i: u32) -> Result<u64> {
    let field = FiniteField::new(q)?;
    let gr = relative_grassmannian(q, n, m, k, l)?;
    let mut count = 0u64;
    for a in &gr {
        for b in &gr {
            if m as usize - a.intersection_dim(&field, b) == i as usize {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `#{W in Gr(n, m) : dim(V_m ∩ W) = m - i}`, the size of the double coset
/// `K_i` divided by `|K|`.
pub fn count_relative_position(q: u32, n: u32, m: u32, i: u32) -> Result<u64> {
    let field = FiniteField::new(q)?;
    let v_m = FqSubspace::coordinate(&field, n, 0..m as usize);
    Ok(enumerate_subspaces(q, n, m)?
        .iter()
        .filter(|w| w.intersection_dim(&field, &v_m) + i as usize == m as usize)
        .count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5] {
            let f = FiniteField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
        assert!(FiniteField::new(6).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_subspaces(2, 4, 2).unwrap().len(), 35);
        assert_eq!(enumerate_subspaces(3, 3, 1).unwrap().len(), 13);
        for q in [2, 3, 4, 5] {
            assert_eq!(enumerate_subspaces(q, 3, 0).unwrap().len(), 1);
        }
        assert!(matches!(
            enumerate_subspaces(2, 5, 2),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn pivot_and_span_enumerations_agree() {
        for (q, nmax) in [(2, 4), (3, 3), (4, 2), (5, 2)] {
            for n in 0..=nmax {
                for m in 0..=n {
                    let Ok(by_span) = enumerate_subspaces_by_span(q, n, m) else {
                        continue;
                    };
                    let by_pivot: BTreeSet<_> =
                        enumerate_subspaces(q, n, m).unwrap().into_iter().collect();
                    assert_eq!(by_pivot, by_span, "q={q} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all = enumerate_subspaces(3, 4, 2).unwrap();
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        let f = FiniteField::new(3).unwrap();
        assert!(all.iter().all(|w| rref(&f, &w.basis) == w.basis));
    }

    #[test]
    fn pair_count_example() {
        // [3 1]_2 * 2 * [1 1]_2 [2 1]_2 = 7 * 2 * 1 * 3
        assert_eq!(count_intersection_pairs(2, 4, 2, 1, 1, 1).unwrap(), 42);
        assert_eq!(relative_grassmannian(2, 4, 2, 1, 1).unwrap().len(), 7);
    }
}
