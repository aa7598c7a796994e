//! Exact linear algebra: fraction-free rank, a sparse row-echelon solver, and
//! convolution inverses.

use std::collections::HashMap;

use crate::network::Net;
use crate::scalar::Scalar;
use crate::tensor::{flatten, multi_indices, unflatten, MultiMap, Space};

/// Rank by fraction-free (Bareiss) elimination. Pivot: first nonzero entry
/// in row-major order of the remaining block.
pub fn rank_dense(mut a: Vec<Vec<Scalar>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = v.checked_div(&prev).expect("Bareiss pivot is nonzero");
            }
            a[i][c] = Scalar::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of a map viewed as a (codomain × domain) matrix.
pub fn rank(f: &MultiMap) -> usize {
    rank_dense(f.to_dense())
}

type Row = Vec<(usize, Scalar)>;

fn row_axpy(row: &Row, s: &Scalar, other: &Row) -> Row {
    // row - s * other, both sorted by column
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_i = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_j = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        if take_i {
            out.push(row[i].clone());
            i += 1;
        } else if take_j {
            out.push((other[j].0, -&(s * &other[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(s * &other[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental sparse elimination for A·X = B with several right-hand sides.
/// Columns `0..n_vars` are unknowns, columns `n_vars..n_vars + n_rhs` hold
/// the right-hand sides. Each added row is reduced against existing pivots
/// and, if it survives, pivots on its first nonzero unknown column.
pub struct SparseSystem {
    n_vars: usize,
    n_rhs: usize,
    pivots: HashMap<usize, Row>,
    inconsistent: Option<usize>,
    added: usize,
}

impl SparseSystem {
    pub fn new(n_vars: usize, n_rhs: usize) -> SparseSystem {
        SparseSystem { n_vars, n_rhs, pivots: HashMap::new(), inconsistent: None, added: 0 }
    }

    /// Add one equation: Σ coeffs·x = Σ rhs (rhs given per right-hand side).
    pub fn add_row(&mut self, coeffs: Vec<(usize, Scalar)>, rhs: Vec<(usize, Scalar)>) {
        let mut m: std::collections::BTreeMap<usize, Scalar> = std::collections::BTreeMap::new();
        for (c, v) in coeffs {
            assert!(c < self.n_vars);
            *m.entry(c).or_insert_with(Scalar::zero) += &v;
        }
        for (c, v) in rhs {
            assert!(c < self.n_rhs);
            *m.entry(self.n_vars + c).or_insert_with(Scalar::zero) += &v;
        }
        let mut row: Row = m.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let id = self.added;
        self.added += 1;
        loop {
            let next = row.iter().position(|(c, _)| *c < self.n_vars && self.pivots.contains_key(c));
            let Some(p) = next else { break };
            let (c, v) = row[p].clone();
            row = row_axpy(&row, &v, &self.pivots[&c]);
        }
        match row.first() {
            None => {}
            Some((c, _)) if *c >= self.n_vars => {
                if self.inconsistent.is_none() {
                    self.inconsistent = Some(id);
                }
            }
            Some((c, v)) => {
                let inv = v.inv().unwrap();
                let c = *c;
                let row: Row = row.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
                self.pivots.insert(c, row);
            }
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistent.is_none()
    }

    /// Index (in insertion order) of the first equation found inconsistent.
    pub fn first_inconsistent_row(&self) -> Option<usize> {
        self.inconsistent
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Unknowns that are not pivots (their values are free).
    pub fn free_variables(&self) -> Vec<usize> {
        (0..self.n_vars).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    /// A particular solution per right-hand side (free variables set to 0).
    pub fn solve(&self) -> Option<Vec<Vec<Scalar>>> {
        if !self.is_consistent() {
            return None;
        }
        let mut order: Vec<usize> = self.pivots.keys().copied().collect();
        order.sort_unstable_by(|a, b| b.cmp(a));
        let mut x = vec![vec![Scalar::zero(); self.n_rhs]; self.n_vars];
        for c in order {
            let row = &self.pivots[&c];
            for r in 0..self.n_rhs {
                let mut v = Scalar::zero();
                for (k, a) in row {
                    if *k == self.n_vars + r {
                        v += a;
                    } else if *k > c && *k < self.n_vars && !x[*k][r].is_zero() {
                        v -= &(a * &x[*k][r]);
                    }
                }
                x[c][r] = v;
            }
        }
        Some(x)
    }
}

/// Inverse of a square map, if it exists.
pub fn inverse(f: &MultiMap) -> Option<MultiMap> {
    let n = crate::tensor::total_dim(f.domain());
    if n != crate::tensor::total_dim(f.codomain()) {
        return None;
    }
    // f·X = I, solved column-wise: rows indexed by codomain index.
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for (c, d, v) in f.iter() {
        rows[flatten(f.codomain(), c)].push((flatten(f.domain(), d), v.clone()));
    }
    let mut sys = SparseSystem::new(n, n);
    for (i, r) in rows.into_iter().enumerate() {
        sys.add_row(r, vec![(i, Scalar::one())]);
    }
    if sys.rank() != n {
        return None;
    }
    let x = sys.solve()?;
    let mut triples = Vec::new();
    for (i, col) in x.iter().enumerate() {
        for (j, v) in col.iter().enumerate() {
            if !v.is_zero() {
                triples.push((unflatten(f.domain(), i), unflatten(f.codomain(), j), v.clone()));
            }
        }
    }
    Some(MultiMap::from_triples(f.codomain(), f.domain(), triples))
}

/// f ∗ g = m_A (f ⊗ g) Δ_C.
pub fn convolve(f: &MultiMap, g: &MultiMap, comult: &MultiMap, mult: &MultiMap) -> MultiMap {
    let mut n = Net::new();
    let x = n.inputs(comult.domain());
    let d = n.apply(comult, &x);
    let half = d.len() / 2;
    let a = n.apply(f, &d[..half]);
    let b = n.apply(g, &d[half..]);
    let mut ab = a;
    ab.extend(b);
    let out = n.apply(mult, &ab);
    n.eval(&out)
}

/// u ∘ ε, the neutral element of convolution.
pub fn unit_counit(counit: &MultiMap, unit: &MultiMap) -> MultiMap {
    unit.compose(counit).expect("unit/counit shapes")
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConvolutionError {
    #[error("map is not convolution invertible: f*g = u.e has no solution ({side} side)")]
    NotInvertible { side: Side },
    #[error("solution failed two-sided verification ({side} side)")]
    VerificationFailed { side: Side },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "f*g",
            Side::Right => "g*f",
        })
    }
}

/// The two-sided convolution inverse of `f: C → A`, where C carries
/// (`comult`, `counit`) and A carries (`mult`, `unit`). Legs of C and A may be
/// tensor products. The result is checked on both sides before returning.
pub fn solve_convolution_inverse(
    f: &MultiMap,
    mult: &MultiMap,
    unit: &MultiMap,
    comult: &MultiMap,
    counit: &MultiMap,
) -> Result<MultiMap, ConvolutionError> {
    let c_sp: Vec<Space> = f.domain().to_vec();
    let a_sp: Vec<Space> = f.codomain().to_vec();
    let ca = c_sp.len();
    let aa = a_sp.len();
    let dim_c = crate::tensor::total_dim(&c_sp);
    let dim_a = crate::tensor::total_dim(&a_sp);
    let var = |a: usize, c: usize| c * dim_a + a;

    // m grouped by left and by right factor: i -> [(j, k, coef)] for e_i e_j = Σ coef e_k
    let mut by_left: HashMap<usize, Vec<(usize, usize, Scalar)>> = HashMap::new();
    let mut by_right: HashMap<usize, Vec<(usize, usize, Scalar)>> = HashMap::new();
    for (k, ij, v) in mult.iter() {
        let i = flatten(&a_sp, &ij[..aa]);
        let j = flatten(&a_sp, &ij[aa..]);
        let k = flatten(&a_sp, k);
        by_left.entry(i).or_default().push((j, k, v.clone()));
        by_right.entry(j).or_default().push((i, k, v.clone()));
    }
    let f_cols: HashMap<usize, Vec<(usize, Scalar)>> = f
        .columns()
        .into_iter()
        .map(|(d, col)| (flatten(&c_sp, &d), col.into_iter().map(|(c, v)| (flatten(&a_sp, &c), v)).collect()))
        .collect();
    let delta_cols = comult.columns();
    let unit_vec: HashMap<usize, Scalar> = unit.iter().map(|(c, _, v)| (flatten(&a_sp, c), v.clone())).collect();
    let eps: HashMap<usize, Scalar> = counit.iter().map(|(_, d, v)| (flatten(&c_sp, d), v.clone())).collect();

    let build = |side: Side, sys: &mut SparseSystem| {
        for c_idx in multi_indices(&c_sp) {
            let c = flatten(&c_sp, &c_idx);
            let mut eqs: HashMap<usize, HashMap<usize, Scalar>> = HashMap::new();
            if let Some(col) = delta_cols.get(&c_idx) {
                for (pair, lam) in col {
                    let c1 = flatten(&c_sp, &pair[..ca]);
                    let c2 = flatten(&c_sp, &pair[ca..]);
                    // Left: f(c1)·g(c2); Right: g(c1)·f(c2)
                    let (fc, gc, table) = match side {
                        Side::Left => (c1, c2, &by_left),
                        Side::Right => (c2, c1, &by_right),
                    };
                    let Some(fcol) = f_cols.get(&fc) else { continue };
                    for (i, mu) in fcol {
                        let Some(list) = table.get(i) else { continue };
                        let lm = lam * mu;
                        for (a, k, nu) in list {
                            let e = eqs.entry(*k).or_default();
                            let v = &lm * nu;
                            let slot = e.entry(var(*a, gc)).or_insert_with(Scalar::zero);
                            *slot += &v;
                        }
                    }
                }
            }
            let e_c = eps.get(&c).cloned().unwrap_or_else(Scalar::zero);
            for k in 0..dim_a {
                let lhs: Vec<(usize, Scalar)> = eqs.remove(&k).map(|m| m.into_iter().collect()).unwrap_or_default();
                let mut lhs = lhs;
                lhs.sort_by_key(|x| x.0);
                let rhs = &e_c * unit_vec.get(&k).unwrap_or(&Scalar::zero());
                sys.add_row(lhs, vec![(0, rhs)]);
            }
        }
    };

    let mut sys = SparseSystem::new(dim_a * dim_c, 1);
    build(Side::Left, &mut sys);
    build(Side::Right, &mut sys);
    let Some(x) = sys.solve() else {
        let mut left = SparseSystem::new(dim_a * dim_c, 1);
        build(Side::Left, &mut left);
        let side = if left.is_consistent() { Side::Right } else { Side::Left };
        return Err(ConvolutionError::NotInvertible { side });
    };
    let mut triples = Vec::new();
    for c in 0..dim_c {
        for a in 0..dim_a {
            let v = &x[var(a, c)][0];
            if !v.is_zero() {
                triples.push((unflatten(&a_sp, a), unflatten(&c_sp, c), v.clone()));
            }
        }
    }
    let g = MultiMap::from_triples(&c_sp, &a_sp, triples);
    let ue = unit_counit(counit, unit);
    if convolve(f, &g, comult, mult) != ue {
        return Err(ConvolutionError::VerificationFailed { side: Side::Left });
    }
    if convolve(&g, f, comult, mult) != ue {
        return Err(ConvolutionError::VerificationFailed { side: Side::Right });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let v = Space::numbered("v", "e", 4);
        assert_eq!(rank(&MultiMap::identity(&[v.clone()])), 4);
        assert_eq!(rank(&MultiMap::zero(&[v.clone()], &[v.clone()])), 0);
        let m = vec![
            vec![Scalar::from_int(1), Scalar::from_int(2), Scalar::from_int(3)],
            vec![Scalar::from_int(2), Scalar::from_int(4), Scalar::from_int(6)],
            vec![Scalar::from_int(0), Scalar::from_int(1), Scalar::from_int(1)],
        ];
        assert_eq!(rank_dense(m), 2);
    }

    #[test]
    fn rank_over_cyclotomic() {
        let z = Scalar::zeta(3);
        let z2 = z.pow(2).unwrap();
        // Vandermonde in 1, z, z² has full rank
        let m = vec![
            vec![Scalar::one(), Scalar::one(), Scalar::one()],
            vec![Scalar::one(), z.clone(), z2.clone()],
            vec![Scalar::one(), z2.clone(), z.clone()],
        ];
        assert_eq!(rank_dense(m), 3);
    }

    #[test]
    fn sparse_inverse() {
        let v = Space::numbered("v", "e", 3);
        let f = MultiMap::from_triples(&[v.clone()], &[v.clone()], vec![
            (vec![0], vec![0], Scalar::from_int(2)),
            (vec![1], vec![0], Scalar::from_int(1)),
            (vec![1], vec![1], Scalar::from_int(1)),
            (vec![2], vec![2], Scalar::from_int(-3)),
            (vec![0], vec![2], Scalar::from_int(1)),
        ]);
        let g = inverse(&f).unwrap();
        assert_eq!(f.compose(&g).unwrap(), MultiMap::identity(&[v.clone()]));
        assert_eq!(g.compose(&f).unwrap(), MultiMap::identity(&[v]));
    }

    #[test]
    fn singular_has_no_inverse() {
        let v = Space::numbered("v", "e", 2);
        let f = MultiMap::from_triples(&[v.clone()], &[v.clone()], vec![(vec![0], vec![0], Scalar::one()), (vec![0], vec![1], Scalar::one())]);
        assert!(inverse(&f).is_none());
    }

    #[test]
    fn inconsistent_system_detected() {
        let mut s = SparseSystem::new(2, 1);
        s.add_row(vec![(0, Scalar::one()), (1, Scalar::one())], vec![(0, Scalar::one())]);
        s.add_row(vec![(0, Scalar::from_int(2)), (1, Scalar::from_int(2))], vec![(0, Scalar::one())]);
        assert!(!s.is_consistent());
        assert_eq!(s.first_inconsistent_row(), Some(1));
    }
}
