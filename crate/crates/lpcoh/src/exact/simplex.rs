//! Rational-pivot simplex with Bland's rule, plus the three feasibility
//! tests the rest of the crate needs: strictly-positive decomposition of a
//! target vector over given generators, triviality of a polyhedral cone,
//! and existence of a simultaneously strictly-negative evaluation point.
//!
//! Instances are tiny (a few hundred columns at most), so exactness is
//! preferred over speed throughout. Bland's rule guarantees termination.

use super::{Rational, RationalMatrix, RationalVector};
use crate::{Error, Result};

pub(crate) enum LpResult {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rational>, value: Rational },
}

/// Maximize `c·x` subject to `A x = b`, `x >= 0`. Two-phase simplex.
pub(crate) fn simplex_max(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpResult {
    Simplex::new(a, b).run(c)
}

/// Is `{x >= 0 : A x = b}` non-empty?
pub(crate) fn lp_feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    !matches!(Simplex::new(a, b).phase1(), Phase1::Infeasible)
}

struct Simplex {
    /// Constraint rows, `n` structural columns then `m` artificial ones.
    tab: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    n: usize,
}

enum Phase1 {
    Infeasible,
    Feasible,
}

impl Simplex {
    fn new(a: &[Vec<Rational>], b: &[Rational]) -> Self {
        let m = a.len();
        let n = a.first().map(Vec::len).unwrap_or(0);
        let mut tab = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        for (i, row) in a.iter().enumerate() {
            assert_eq!(row.len(), n, "ragged constraint matrix");
            let mut r: Vec<Rational> = if b[i].is_negative() {
                row.iter().map(|v| -v).collect()
            } else {
                row.clone()
            };
            r.extend((0..m).map(|k| {
                if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            tab.push(r);
            rhs.push(b[i].abs());
        }
        let basis = (n..n + m).collect();
        Simplex { tab, rhs, basis, n }
    }

    fn pivot(&mut self, row: usize, col: usize, z: &mut [Rational], zval: &mut Rational) {
        let p = self.tab[row][col].clone();
        for v in self.tab[row].iter_mut() {
            *v = &*v / &p;
        }
        self.rhs[row] = &self.rhs[row] / &p;
        let pivot_row = self.tab[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.tab.len() {
            if r == row || self.tab[r][col].is_zero() {
                continue;
            }
            let f = self.tab[r][col].clone();
            for (v, pv) in self.tab[r].iter_mut().zip(&pivot_row) {
                *v -= &(&f * pv);
            }
            self.rhs[r] -= &(&f * &pivot_rhs);
        }
        if !z[col].is_zero() {
            let f = z[col].clone();
            *zval += &(&f * &pivot_rhs);
            for (v, pv) in z.iter_mut().zip(&pivot_row) {
                *v -= &(&f * pv);
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule iteration: entering column is the lowest-index
    /// structural column with positive reduced cost; leaving row by the
    /// exact ratio test, ties broken on the smallest basic variable.
    fn iterate(&mut self, z: &mut [Rational], zval: &mut Rational) -> Option<LpResult> {
        loop {
            let Some(col) = (0..self.n).find(|&j| z[j].is_positive()) else {
                return None; // optimal
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.tab.len() {
                if !self.tab[r][col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / &self.tab[r][col];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return Some(LpResult::Unbounded);
            };
            self.pivot(row, col, z, zval);
        }
    }

    fn phase1(&mut self) -> Phase1 {
        // maximize minus the sum of artificials; value 0 iff feasible
        let total = self.n + self.tab.len();
        let mut z = vec![Rational::zero(); total];
        let mut zval = Rational::zero();
        for row in 0..self.tab.len() {
            for j in 0..self.n {
                let t = self.tab[row][j].clone();
                z[j] += &t;
            }
            zval -= &self.rhs[row];
        }
        if let Some(LpResult::Unbounded) = self.iterate(&mut z, &mut zval) {
            unreachable!("phase-1 objective is bounded");
        }
        if zval.is_negative() {
            return Phase1::Infeasible;
        }
        // drive basic artificials out, dropping redundant rows
        let mut r = 0;
        while r < self.tab.len() {
            if self.basis[r] < self.n {
                r += 1;
                continue;
            }
            match (0..self.n).find(|&j| !self.tab[r][j].is_zero()) {
                Some(j) => {
                    let mut dummy_z = vec![Rational::zero(); self.tab[r].len()];
                    let mut dummy_v = Rational::zero();
                    self.pivot(r, j, &mut dummy_z, &mut dummy_v);
                    r += 1;
                }
                None => {
                    self.tab.remove(r);
                    self.rhs.remove(r);
                    self.basis.remove(r);
                }
            }
        }
        Phase1::Feasible
    }

    fn run(mut self, c: &[Rational]) -> LpResult {
        assert_eq!(c.len(), self.n);
        if let Phase1::Infeasible = self.phase1() {
            return LpResult::Infeasible;
        }
        let width = self.tab.first().map(Vec::len).unwrap_or(self.n);
        let mut z = vec![Rational::zero(); width];
        z[..self.n].clone_from_slice(c);
        let mut zval = Rational::zero();
        for r in 0..self.tab.len() {
            let bi = self.basis[r];
            debug_assert!(bi < self.n, "artificial left in basis");
            if c[bi].is_zero() {
                continue;
            }
            let f = c[bi].clone();
            zval += &(&f * &self.rhs[r]);
            for j in 0..width {
                let t = &f * &self.tab[r][j];
                z[j] -= &t;
            }
        }
        if let Some(LpResult::Unbounded) = self.iterate(&mut z, &mut zval) {
            return LpResult::Unbounded;
        }
        let mut x = vec![Rational::zero(); self.n];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.rhs[r].clone();
            }
        }
        LpResult::Optimal { x, value: zval }
    }
}

/// Strictly positive exact decomposition `target = Σ m_i · gen_i` with
/// `m_i > 0`, decided by maximizing the slack `t` in `m_i >= t` (with the
/// coefficients capped so the program is bounded; only the sign of the
/// optimum matters). Returns the coefficients together with the minimal
/// coefficient, or `None` when no strictly positive solution exists.
///
/// The rows of `generators` are the generating vectors.
pub fn solve_strict_positive(
    generators: &RationalMatrix,
    target: &RationalVector,
) -> Result<Option<(Vec<Rational>, Rational)>> {
    if generators.ncols() != target.dim() && generators.nrows() > 0 {
        return Err(Error::Dimension {
            expected: target.dim(),
            got: generators.ncols(),
        });
    }
    let k = generators.nrows();
    if k == 0 {
        return Ok(None);
    }
    let d = target.dim();

    let max_col_l1 = generators
        .rows()
        .iter()
        .map(RationalVector::l1_norm)
        .max()
        .unwrap();
    let cap = Rational::one() + target.l1_norm() * (max_col_l1 + Rational::one());

    // variables: t+ , t- , s_1..s_k , u_1..u_k   (m_i = t + s_i, u_i the cap slack)
    let nvars = 2 + 2 * k;
    let mut a = vec![vec![Rational::zero(); nvars]; d + k];
    let mut b = vec![Rational::zero(); d + k];
    for r in 0..d {
        let col_sum: Rational = generators.rows().iter().map(|g| g.get(r).clone()).sum();
        a[r][0] = col_sum.clone();
        a[r][1] = -col_sum;
        for (i, g) in generators.rows().iter().enumerate() {
            a[r][2 + i] = g.get(r).clone();
        }
        b[r] = target.get(r).clone();
    }
    for i in 0..k {
        let r = d + i;
        a[r][0] = Rational::one();
        a[r][1] = -Rational::one();
        a[r][2 + i] = Rational::one();
        a[r][2 + k + i] = Rational::one();
        b[r] = cap.clone();
    }
    let mut c = vec![Rational::zero(); nvars];
    c[0] = Rational::one();
    c[1] = -Rational::one();

    match simplex_max(&a, &b, &c) {
        LpResult::Infeasible => Ok(None),
        LpResult::Unbounded => unreachable!("slack objective is capped"),
        LpResult::Optimal { x, value } => {
            if !value.is_positive() {
                return Ok(None);
            }
            let coeffs: Vec<Rational> = (0..k).map(|i| &value + &x[2 + i]).collect();
            let slack = coeffs.iter().min().unwrap().clone();
            debug_assert!(slack.is_positive());
            debug_assert_eq!(
                {
                    let mut s = RationalVector::zero(d);
                    for (m, g) in coeffs.iter().zip(generators.rows()) {
                        s = s.add(&g.scale(m));
                    }
                    s
                },
                *target
            );
            Ok(Some((coeffs, slack)))
        }
    }
}

/// Decides whether `{X : rows · X <= 0 componentwise} = {0}`: the kernel
/// of `rows` must be trivial and, for every row index `i`, the system
/// `{rows · X <= 0, (rows · X)_i = -1}` must be infeasible.
pub fn cone_is_trivial(rows: &RationalMatrix) -> bool {
    let d = rows.ncols();
    if d == 0 {
        return true;
    }
    if rows.rank() < d {
        return false;
    }
    let m = rows.nrows();
    for i in 0..m {
        // variables: X = u - v (2d), slack s_r for each r != i
        let nvars = 2 * d + m - 1;
        let mut a = vec![vec![Rational::zero(); nvars]; m];
        let mut b = vec![Rational::zero(); m];
        let mut slack_idx = 2 * d;
        for (r, row) in rows.rows().iter().enumerate() {
            for j in 0..d {
                a[r][j] = row.get(j).clone();
                a[r][d + j] = -row.get(j);
            }
            if r == i {
                b[r] = Rational::int(-1);
            } else {
                a[r][slack_idx] = Rational::one();
                slack_idx += 1;
            }
        }
        if lp_feasible(&a, &b) {
            return false;
        }
    }
    true
}

/// A point `xi` with `form_i · xi < 0` for every given linear form, found
/// by maximizing the common slack inside the l1 unit box; `None` when no
/// such point exists.
pub fn strict_negative_witness(forms: &[RationalVector]) -> Option<RationalVector> {
    let d = forms.first()?.dim();
    let k = forms.len();
    // variables: u_1..u_d , v_1..v_d (xi = u - v), t, slack s_1..s_k, box slack
    let nvars = 2 * d + 1 + k + 1;
    let mut a = vec![vec![Rational::zero(); nvars]; k + 1];
    let mut b = vec![Rational::zero(); k + 1];
    for (i, form) in forms.iter().enumerate() {
        assert_eq!(form.dim(), d, "frame mismatch");
        for j in 0..d {
            a[i][j] = form.get(j).clone();
            a[i][d + j] = -form.get(j);
        }
        a[i][2 * d] = Rational::one(); // + t
        a[i][2 * d + 1 + i] = Rational::one(); // + s_i
    }
    for j in 0..2 * d {
        a[k][j] = Rational::one();
    }
    a[k][nvars - 1] = Rational::one();
    b[k] = Rational::one();

    let mut c = vec![Rational::zero(); nvars];
    c[2 * d] = Rational::one();

    match simplex_max(&a, &b, &c) {
        LpResult::Optimal { x, value } if value.is_positive() => {
            let xi =
                RationalVector::new((0..d).map(|j| &x[j] - &x[d + j]).collect());
            debug_assert!(forms.iter().all(|f| f.dot(&xi).is_negative()));
            Some(xi)
        }
        LpResult::Unbounded => unreachable!("objective bounded by the box constraint"),
        _ => None,
    }
}
