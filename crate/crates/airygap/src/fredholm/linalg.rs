//! Dense LU with partial pivoting over complex scalars, providing both
//! log-determinants and linear solves for the Nyström systems.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub struct LuFactor {
    a: DMatrix<Complex64>,
    piv: Vec<usize>,
    neg: bool,
}

impl LuFactor {
    pub fn new(mut a: DMatrix<Complex64>) -> Result<Self> {
        let n = a.nrows();
        assert_eq!(n, a.ncols());
        let mut piv = Vec::with_capacity(n);
        let mut neg = false;
        for col in 0..n {
            let mut p = col;
            let mut best = a[(col, col)].norm_sqr();
            for r in col + 1..n {
                let m = a[(r, col)].norm_sqr();
                if m > best {
                    best = m;
                    p = r;
                }
            }
            if best == 0.0 {
                return Err(Error::SingularSystem(format!(
                    "LU pivot vanished at column {col} of {n}"
                )));
            }
            if p != col {
                a.swap_rows(p, col);
                neg = !neg;
            }
            piv.push(p);
            let d = a[(col, col)];
            for r in col + 1..n {
                let l = a[(r, col)] / d;
                a[(r, col)] = l;
                for c in col + 1..n {
                    let u = a[(col, c)];
                    a[(r, c)] -= l * u;
                }
            }
        }
        Ok(LuFactor { a, piv, neg })
    }

    /// Determinant as (phase-or-sign unit, log magnitude).
    pub fn det_log(&self) -> (Complex64, f64) {
        let n = self.a.nrows();
        let mut phase = if self.neg {
            Complex64::new(-1.0, 0.0)
        } else {
            Complex64::new(1.0, 0.0)
        };
        let mut logmag = 0.0;
        for i in 0..n {
            let d = self.a[(i, i)];
            let m = d.norm();
            logmag += m.ln();
            phase *= d / m;
        }
        (phase, logmag)
    }

    pub fn det(&self) -> Complex64 {
        let (phase, logmag) = self.det_log();
        phase * logmag.exp()
    }

    /// Solve A x = b in place.
    pub fn solve(&self, b: &mut [Complex64]) {
        let n = self.a.nrows();
        assert_eq!(b.len(), n);
        for i in 0..n {
            b.swap(i, self.piv[i]);
        }
        for i in 0..n {
            for j in 0..i {
                let l = self.a[(i, j)];
                let bj = b[j];
                b[i] -= l * bj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.a[(i, j)];
                let bj = b[j];
                b[i] -= u * bj;
            }
            b[i] /= self.a[(i, i)];
        }
    }
}
