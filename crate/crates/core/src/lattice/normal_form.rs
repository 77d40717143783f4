use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `left * m * right = diagonal`, with both transforms unimodular and their
/// inverses carried along.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.diagonal[(i, i)].clone()).collect()
    }
}

struct SmithState {
    d: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SmithState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
        self.u_inv.add_col_multiple(src, dst, &-k);
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.d.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
        self.v_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of the smallest nonzero |entry| in the trailing block.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.d.rows() {
            for j in t..self.d.cols() {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Smallest nonzero entry in row t / column t beyond the pivot.
    fn min_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let cells = (t..self.d.rows()).map(|i| (i, t)).chain((t + 1..self.d.cols()).map(|j| (t, j)));
        for (i, j) in cells {
            let x = &self.d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < self.d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
        best
    }

    fn move_to(&mut self, t: usize, (i, j): (usize, usize)) {
        self.swap_rows(t, i);
        self.swap_cols(t, j);
    }
}

/// Smith normal form by gcd-pivot reduction. Total: works for any shape,
/// including empty and zero matrices.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = SmithState {
        d: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some(p) = s.min_pivot(t) else { break };
        s.move_to(t, p);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if s.d[(i, t)].is_zero() {
                    continue;
                }
                let q = s.d[(i, t)].div_floor(&s.d[(t, t)]);
                s.add_row(i, t, &-q);
                clean &= s.d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s.d[(t, j)].is_zero() {
                    continue;
                }
                let q = s.d[(t, j)].div_floor(&s.d[(t, t)]);
                s.add_col(j, t, &-q);
                clean &= s.d[(t, j)].is_zero();
            }
            if !clean {
                let p = s.min_in_cross(t).expect("nonzero pivot present");
                s.move_to(t, p);
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let pivot = s.d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !s.d[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => s.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.d[(t, t)].is_negative() {
            s.negate_row(t);
        }
        t += 1;
    }
    SmithDecomposition {
        left: s.u,
        left_inv: s.u_inv,
        diagonal: s.d,
        right: s.v,
        right_inv: s.v_inv,
        rank: t,
    }
}

/// Row-style Hermite normal form with the transform that produced it.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    /// Echelon matrix; zero rows are kept at the bottom.
    pub form: IntMatrix,
    /// Unimodular `transform` with `transform * input = form`.
    pub transform: IntMatrix,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nonzero_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank()).map(|i| self.form.row(i).to_vec()).collect()
    }
}

/// Canonical row echelon form: positive pivots, entries above each pivot
/// reduced into `[0, pivot)`. Two matrices have the same row lattice iff
/// their nonzero rows agree.
pub fn hermite_rows(m: &IntMatrix) -> HermiteForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut tr = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut p = 0;
    for col in 0..cols {
        if p == rows {
            break;
        }
        loop {
            let best = (p..rows)
                .filter(|&i| !a[(i, col)].is_zero())
                .min_by(|&x, &y| a[(x, col)].abs().cmp(&a[(y, col)].abs()));
            let Some(best) = best else { break };
            a.swap_rows(p, best);
            tr.swap_rows(p, best);
            let mut done = true;
            for i in p + 1..rows {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let q = -a[(i, col)].div_floor(&a[(p, col)]);
                a.add_row_multiple(i, p, &q);
                tr.add_row_multiple(i, p, &q);
                done &= a[(i, col)].is_zero();
            }
            if done {
                break;
            }
        }
        if a[(p, col)].is_zero() {
            continue;
        }
        if a[(p, col)].is_negative() {
            a.negate_row(p);
            tr.negate_row(p);
        }
        for i in 0..p {
            let q = -a[(i, col)].div_floor(&a[(p, col)]);
            a.add_row_multiple(i, p, &q);
            tr.add_row_multiple(i, p, &q);
        }
        pivots.push(col);
        p += 1;
    }
    HermiteForm { form: a, transform: tr, pivots }
}

/// Inverse of a unimodular matrix; `None` if `m` is not unimodular.
pub fn inverse_unimodular(m: &IntMatrix) -> Option<IntMatrix> {
    if !m.is_square() {
        return None;
    }
    let h = hermite_rows(m);
    (h.form == IntMatrix::identity(m.rows())).then_some(h.transform)
}

/// Solves `a * x = b` over the integers. Returns one solution, or `None`
/// when no integral solution exists.
pub fn solve_integral(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let ub = snf.left.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, value) in ub.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = value.div_rem(&snf.diagonal[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !value.is_zero() {
            return None;
        }
    }
    Some(snf.right.mul_vec(&y))
}
