//! The limit pmf as `<Xi| P_(n-x,x) |Xi>` on `(C^2)^{⊗n}`, with the isotypic
//! projectors built from the symmetric group directly.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::dist::Params;
use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial};
use crate::ExactRational;

/// Largest `n` the oracle will iterate `S_n` for.
pub const MAX_N: u32 = 8;
/// Largest `n` for which the full `2^n x 2^n` projector is materialized.
pub const MAX_MATRIX_N: u32 = 5;

/// A vector in `(C^2)^{⊗n}` with rational amplitudes and a global factor
/// `sqrt(norm_sq)`. Bit `i` of a basis index is the `i`-th tensor factor.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorState {
    pub n: u32,
    pub norm_sq: ExactRational,
    pub amplitudes: Vec<ExactRational>,
}

impl TensorState {
    fn basis(n: u32, index: usize) -> Self {
        let mut amplitudes = vec![ExactRational::zero(); 1 << n];
        amplitudes[index] = ExactRational::one();
        TensorState {
            n,
            norm_sq: ExactRational::one(),
            amplitudes,
        }
    }

    /// `|1^l 0^(k-l)>`.
    pub fn product(l: u32, k: u32) -> Self {
        Self::basis(k, (1usize << l) - 1)
    }

    /// `binom(len, w)^(-1/2)` times the sum of all weight-`w` strings.
    pub fn dicke(len: u32, w: u32) -> Self {
        let amplitudes = (0..1usize << len)
            .map(|s| {
                if s.count_ones() == w {
                    ExactRational::one()
                } else {
                    ExactRational::zero()
                }
            })
            .collect();
        TensorState {
            n: len,
            norm_sq: ExactRational::from_integer(binomial(len as i64, w as i64)).recip(),
            amplitudes,
        }
    }

    /// `self ⊗ other`, with `self` on the low bits.
    pub fn tensor(&self, other: &TensorState) -> Self {
        let n = self.n + other.n;
        let mut amplitudes = vec![ExactRational::zero(); 1 << n];
        for (a, va) in self.amplitudes.iter().enumerate() {
            if va.is_zero() {
                continue;
            }
            for (b, vb) in other.amplitudes.iter().enumerate() {
                if !vb.is_zero() {
                    amplitudes[a | (b << self.n)] = va * vb;
                }
            }
        }
        TensorState {
            n,
            norm_sq: &self.norm_sq * &other.norm_sq,
            amplitudes,
        }
    }

    /// `|Xi_{n,m|k,l}> = |1^l 0^(k-l)> ⊗ |Xi_{N+M,M}>`.
    pub fn xi(p: &Params) -> Self {
        Self::product(p.l, p.k).tensor(&Self::dicke(p.n - p.k, p.big_m()))
    }

    pub fn norm_squared(&self) -> ExactRational {
        let s = self
            .amplitudes
            .iter()
            .fold(ExactRational::zero(), |acc, a| acc + a * a);
        s * &self.norm_sq
    }

    fn support(&self) -> Vec<usize> {
        (0..self.amplitudes.len())
            .filter(|&s| !self.amplitudes[s].is_zero())
            .collect()
    }
}

/// `g . s`: the bit in position `i` moves to position `g(i)`.
fn act(g: &[usize], s: usize) -> usize {
    g.iter()
        .enumerate()
        .fold(0, |acc, (i, &gi)| acc | (((s >> i) & 1) << gi))
}

/// Cycle lengths of a permutation.
pub fn cycle_type(g: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        let (mut len, mut i) = (0, start);
        while !seen[i] {
            seen[i] = true;
            i = g[i];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// `fix_j(g)` for `j = 0..=n`: coefficients of `prod_cycles (1 + t^len)`.
pub fn fixed_subset_counts(cycles: &[usize], n: usize) -> Vec<i64> {
    let mut poly = vec![0i64; n + 1];
    poly[0] = 1;
    for &len in cycles {
        for j in (len..=n).rev() {
            poly[j] += poly[j - len];
        }
    }
    poly
}

/// `chi_(n-x,x)(g) = fix_x(g) - fix_(x-1)(g)`.
pub fn two_row_character(cycles: &[usize], n: usize, x: usize) -> i64 {
    let fix = fixed_subset_counts(cycles, n);
    fix[x] - if x > 0 { fix[x - 1] } else { 0 }
}

/// `n! / prod hooks` for a partition given as weakly decreasing row lengths.
pub fn hook_length_dim(shape: &[usize]) -> BigInt {
    let n: usize = shape.iter().sum();
    let mut hooks = BigInt::one();
    for (r, &row) in shape.iter().enumerate() {
        for c in 0..row {
            let arm = row - c - 1;
            let leg = shape[r + 1..].iter().filter(|&&len| len > c).count();
            hooks *= arm + leg + 1;
        }
    }
    factorial(n as u64) / hooks
}

fn check_size(n: u32, limit: u32) -> Result<()> {
    if n > limit {
        return Err(Error::ResourceLimit(format!(
            "tensor oracle needs n <= {limit}, got n = {n}"
        )));
    }
    Ok(())
}

/// `<Xi| P_(n-x,x) |Xi>` for every `x = 0..=floor(n/2)` in one pass over `S_n`.
pub fn pmf_tensor_oracle_all(p: &Params) -> Result<Vec<ExactRational>> {
    check_size(p.n, MAX_N)?;
    let n = p.n as usize;
    let xi = TensorState::xi(p);
    let support = xi.support();
    let in_support = {
        let mut mask = vec![false; xi.amplitudes.len()];
        for &s in &support {
            mask[s] = true;
        }
        mask
    };
    let top = n / 2;
    // sum_g chi_x(g) #{s in supp : g.s in supp}; amplitudes are all 1 on the support
    let weighted = (0..n)
        .permutations(n)
        .par_bridge()
        .map(|g| {
            let overlap = support.iter().filter(|&&s| in_support[act(&g, s)]).count() as i64;
            let fix = fixed_subset_counts(&cycle_type(&g), n);
            (0..=top)
                .map(|x| (fix[x] - if x > 0 { fix[x - 1] } else { 0 }) * overlap)
                .collect::<Vec<i64>>()
        })
        .reduce(
            || vec![0; top + 1],
            |a, b| a.iter().zip(&b).map(|(u, v)| u + v).collect(),
        );
    let n_fact = factorial(n as u64);
    Ok(weighted
        .into_iter()
        .enumerate()
        .map(|(x, w)| {
            let dim = hook_length_dim(&two_row_shape(n, x));
            ExactRational::new(dim * w, n_fact.clone()) * &xi.norm_sq
        })
        .collect())
}

fn two_row_shape(n: usize, x: usize) -> Vec<usize> {
    if x == 0 {
        vec![n]
    } else {
        vec![n - x, x]
    }
}

/// `<Xi| P_(n-x,x) |Xi>` for `0 <= x <= floor(n/2)`.
pub fn pmf_tensor_oracle(p: &Params, x: u32) -> Result<ExactRational> {
    if x > p.n / 2 {
        return Err(Error::OutOfRange {
            x: x as i64,
            max: (p.n / 2) as i64,
        });
    }
    Ok(pmf_tensor_oracle_all(p)?.swap_remove(x as usize))
}

/// The projector `P_(n-x,x)` as a dense `2^n x 2^n` matrix, `P[t][s] = <t|P|s>`.
pub fn projector_matrix(n: u32, x: u32) -> Result<Vec<Vec<ExactRational>>> {
    check_size(n, MAX_MATRIX_N)?;
    if x > n / 2 {
        return Err(Error::OutOfRange {
            x: x as i64,
            max: (n / 2) as i64,
        });
    }
    let (n, x) = (n as usize, x as usize);
    let dim = 1usize << n;
    let mut counts = vec![vec![0i64; dim]; dim];
    for g in (0..n).permutations(n) {
        let chi = two_row_character(&cycle_type(&g), n, x);
        if chi == 0 {
            continue;
        }
        for s in 0..dim {
            counts[act(&g, s)][s] += chi;
        }
    }
    let scale = ExactRational::new(hook_length_dim(&two_row_shape(n, x)), factorial(n as u64));
    Ok(counts
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| ExactRational::from_integer(c.into()) * &scale)
                .collect()
        })
        .collect())
}

/// Exact `P^2 = P` and `P^T = P`.
pub fn is_orthogonal_projector(p: &[Vec<ExactRational>]) -> bool {
    let d = p.len();
    for i in 0..d {
        for j in 0..d {
            if p[i][j] != p[j][i] {
                return false;
            }
            let sq = (0..d)
                .filter(|&t| !p[i][t].is_zero() && !p[t][j].is_zero())
                .fold(ExactRational::zero(), |acc, t| acc + &p[i][t] * &p[t][j]);
            if sq != p[i][j] {
                return false;
            }
        }
    }
    true
}

/// `<psi| P |psi>` with the global factor applied.
pub fn quadratic_form(p: &[Vec<ExactRational>], psi: &TensorState) -> ExactRational {
    let a = &psi.amplitudes;
    let mut s = ExactRational::zero();
    for (t, row) in p.iter().enumerate() {
        if a[t].is_zero() {
            continue;
        }
        for (u, v) in row.iter().enumerate() {
            if !a[u].is_zero() && !v.is_zero() {
                s += &a[t] * v * &a[u];
            }
        }
    }
    s * &psi.norm_sq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::pmf_limit;

    #[test]
    fn hook_length_matches_character_at_identity() {
        for n in 0..=10usize {
            let id: Vec<usize> = (0..n).collect();
            for x in 0..=n / 2 {
                let via_chi = two_row_character(&cycle_type(&id), n, x);
                let via_binom = binomial(n as i64, x as i64) - binomial(n as i64, x as i64 - 1);
                assert_eq!(hook_length_dim(&two_row_shape(n, x)), via_binom);
                assert_eq!(BigInt::from(via_chi), via_binom);
            }
        }
    }

    #[test]
    fn xi_is_normalized() {
        for p in Params::restricted_set(6) {
            assert!(TensorState::xi(&p).norm_squared().is_one(), "{p}");
        }
    }

    #[test]
    fn projectors_resolve_identity() {
        for n in 0..=4u32 {
            let d = 1usize << n;
            let ps: Vec<_> = (0..=n / 2)
                .map(|x| projector_matrix(n, x).unwrap())
                .collect();
            for i in 0..d {
                for j in 0..d {
                    let s = ps
                        .iter()
                        .fold(ExactRational::zero(), |acc, p| acc + &p[i][j]);
                    assert_eq!(s.is_one(), i == j);
                    assert_eq!(s.is_zero(), i != j);
                }
            }
        }
    }

    #[test]
    fn example_4221() {
        let p = Params::restricted(4, 2, 2, 1).unwrap();
        let all = pmf_tensor_oracle_all(&p).unwrap();
        for x in 0..=2 {
            assert_eq!(all[x as usize], pmf_limit(&p, x).unwrap());
        }
        let m = projector_matrix(4, 1).unwrap();
        assert_eq!(quadratic_form(&m, &TensorState::xi(&p)), all[1]);
    }

    #[test]
    fn limits_enforced() {
        let p = Params::restricted(9, 1, 0, 0).unwrap();
        assert!(matches!(
            pmf_tensor_oracle(&p, 0),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            projector_matrix(6, 0),
            Err(Error::ResourceLimit(_))
        ));
    }
}
