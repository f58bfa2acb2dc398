use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Q = BigRational;

/// Phase-1 simplex for `v ∈ conv(points) + R^r_{≥0}`:
/// find `λ ≥ 0, σ ≥ 0` with `Σ λ_k s_k + σ = v` and `Σ λ_k = 1`.
/// Slacks start basic in the first `r` rows; one artificial covers the
/// convexity row. Bland's rule guarantees termination.
pub(crate) fn in_hull_plus_orthant(points: &[Vec<Q>], v: &[Q]) -> bool {
    let r = v.len();
    if v.iter().any(|x| x.is_negative()) || points.is_empty() {
        return false;
    }
    let k = points.len();
    // Columns: λ_0..λ_{k-1}, σ_0..σ_{r-1}, artificial; then the right-hand side.
    let cols = k + r + 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(r + 1);
    for i in 0..r {
        let mut row = vec![Q::zero(); cols + 1];
        for (j, p) in points.iter().enumerate() {
            row[j] = p[i].clone();
        }
        row[k + i] = Q::one();
        row[cols] = v[i].clone();
        t.push(row);
    }
    let mut conv = vec![Q::zero(); cols + 1];
    for c in conv.iter_mut().take(k) {
        *c = Q::one();
    }
    conv[k + r] = Q::one();
    conv[cols] = Q::one();
    t.push(conv);
    let mut basis: Vec<usize> = (0..r).map(|i| k + i).chain(std::iter::once(k + r)).collect();
    // Objective: minimize the artificial. Reduced costs c_j − c_B·column_j.
    let art = k + r;
    loop {
        let reduced = |j: usize, t: &Vec<Vec<Q>>, basis: &Vec<usize>| -> Q {
            let cj = if j == art { Q::one() } else { Q::zero() };
            let mut z = Q::zero();
            for (row, &b) in basis.iter().enumerate() {
                if b == art {
                    z += &t[row][j];
                }
            }
            cj - z
        };
        let entering = (0..cols).find(|&j| !basis.contains(&j) && reduced(j, &t, &basis).is_negative());
        let Some(e) = entering else { break };
        let mut leave: Option<(usize, Q)> = None;
        for (row, tr) in t.iter().enumerate() {
            if tr[e].is_positive() {
                let ratio = &tr[cols] / &tr[e];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[row] < basis[*lr]),
                };
                if better {
                    leave = Some((row, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else { break };
        let piv = t[pr][e].clone();
        for x in t[pr].iter_mut() {
            *x /= &piv;
        }
        let prow = t[pr].clone();
        for (row, tr) in t.iter_mut().enumerate() {
            if row != pr && !tr[e].is_zero() {
                let f = tr[e].clone();
                for (x, p) in tr.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        basis[pr] = e;
    }
    // Feasible iff the artificial is zero at the optimum.
    basis.iter().enumerate().all(|(row, &b)| b != art || t[row][cols].is_zero())
}

/// Solves the square system `a·x = b`; `None` when singular.
pub(crate) fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &piv;
        }
        let prow = m[c].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// A nonzero vector orthogonal to the given `r − 1` rows in `Q^r`, when the
/// rows have full rank.
pub(crate) fn normal_vector(rows: &[Vec<Q>], r: usize) -> Option<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..r {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&k| !m[k][c].is_zero()) else { continue };
        m.swap(row, p);
        let piv = m[row][c].clone();
        for x in m[row].iter_mut() {
            *x /= &piv;
        }
        let prow = m[row].clone();
        for (k, rk) in m.iter_mut().enumerate() {
            if k != row && !rk[c].is_zero() {
                let f = rk[c].clone();
                for (x, p) in rk.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    if pivots.len() != rows.len() {
        return None;
    }
    let free = (0..r).find(|c| !pivots.contains(c))?;
    let mut n = vec![Q::zero(); r];
    n[free] = Q::one();
    for (k, &c) in pivots.iter().enumerate() {
        n[c] = -m[k][free].clone();
    }
    Some(n)
}
