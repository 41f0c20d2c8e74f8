//! The `p×p` blocks built from `x` and `y` that make up the reduced twisted
//! Fox matrix, and the identities relating them.

use crate::exactalg::IntPoly;
use crate::polymat::{IntMatrix, MatrixError};

use super::companion::{CompanionPair, RepError};

/// Dense `x`, `y` and the derived block matrices for one prime.
#[derive(Clone, Debug)]
pub struct Blocks {
    p: usize,
    x: IntMatrix,
    y: IntMatrix,
    one: IntMatrix,
}

impl Blocks {
    pub fn new(pair: &CompanionPair) -> Self {
        Self {
            p: pair.p(),
            x: pair.x_matrix(),
            y: pair.y_matrix(),
            one: IntMatrix::identity(pair.p()),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn x(&self) -> &IntMatrix {
        &self.x
    }

    pub fn y(&self) -> &IntMatrix {
        &self.y
    }

    pub fn xy(&self) -> IntMatrix {
        &self.x * &self.y
    }

    pub fn yx(&self) -> IntMatrix {
        &self.y * &self.x
    }

    /// `y (xy)^k`
    pub fn y_xy_k(&self, k: u32) -> IntMatrix {
        &self.y * &self.xy().pow(k)
    }

    /// `A_n = −Σ_{i=0}^{2n} (−y)^i`
    pub fn a_n(&self, n: u32) -> IntMatrix {
        -&(-&self.y).power_sum(0, 2 * n)
    }

    /// `B_n = Σ_{i=0}^{2n−1} (−x)^i`
    pub fn b_n(&self, n: u32) -> IntMatrix {
        (-&self.x).power_sum(0, 2 * n - 1)
    }

    /// `(y−1) x Σ_{i=0}^{k−1} (yx)^i`
    fn yx_tail(&self, k: u32) -> IntMatrix {
        let s = if k == 0 {
            IntMatrix::zeros(self.p, self.p)
        } else {
            self.yx().power_sum(0, k - 1)
        };
        &(&(&self.y - &self.one) * &self.x) * &s
    }

    /// `C_k = 1 + (y−1) x Σ_{i=0}^{k−1} (yx)^i`
    pub fn c_k(&self, k: u32) -> IntMatrix {
        &self.one + &self.yx_tail(k)
    }

    /// `D_{k,n} = Σ_{i=0}^{2n+1} (−y)^i + (y−1) x Σ_{i=0}^{k−1} (yx)^i (−y)^{2n+1}`
    pub fn d_kn(&self, k: u32, n: u32) -> IntMatrix {
        let neg_y = -&self.y;
        &neg_y.power_sum(0, 2 * n + 1) + &(&self.yx_tail(k) * &neg_y.pow(2 * n + 1))
    }

    /// `E_k = 1 + (x−1) y Σ_{i=0}^{k−1} (xy)^i`
    pub fn e_k(&self, k: u32) -> IntMatrix {
        let s = if k == 0 {
            IntMatrix::zeros(self.p, self.p)
        } else {
            self.xy().power_sum(0, k - 1)
        };
        &self.one + &(&(&(&self.x - &self.one) * &self.y) * &s)
    }

    /// `D_{k,n} − y(xy)^k A_n`, so that `F_{k,n} = E_k^{-1} M_{k,n}`.
    pub fn m_kn(&self, k: u32, n: u32) -> IntMatrix {
        &self.d_kn(k, n) - &(&self.y_xy_k(k) * &self.a_n(n))
    }

    /// `F_{k1,n} = F_{k2,n}`, checked without inverses as
    /// `det(E_{k2}) M_{k1,n} = E_{k1} adj(E_{k2}) M_{k2,n}`.
    pub fn f_independent_of_k(&self, n: u32, k1: u32, k2: u32) -> Result<bool, MatrixError> {
        let e2 = self.e_k(k2);
        let lhs = self.m_kn(k1, n).scale(&e2.det_bareiss()?);
        let rhs = &(&self.e_k(k1) * &e2.adjugate()?) * &self.m_kn(k2, n);
        Ok(lhs == rhs)
    }

    /// The `3p × 3p` matrix `[[−A_n, 0, B_n], [y(xy)^k A_n, C_k, 0], [D_{k,n}, C_k, E_k]]`
    /// whose determinant is the reduced twisted Fox determinant.
    pub fn hat_matrix(&self, n: u32, k: u32) -> IntMatrix {
        let a = self.a_n(n);
        let c = self.c_k(k);
        let z = IntMatrix::zeros(self.p, self.p);
        IntMatrix::block(&[
            vec![-&a, z.clone(), self.b_n(n)],
            vec![&self.y_xy_k(k) * &a, c.clone(), z],
            vec![self.d_kn(k, n), c, self.e_k(k)],
        ])
        .expect("square blocks")
    }

    /// `[[E_k, M_{k,n}], [−B_n, A_n]]`; its determinant is
    /// `det(E_k) · det(A_n + B_n F_{k,n})`.
    pub fn schur_matrix(&self, n: u32, k: u32) -> IntMatrix {
        IntMatrix::block(&[vec![self.e_k(k), self.m_kn(k, n)], vec![-&self.b_n(n), self.a_n(n)]])
            .expect("square blocks")
    }

    /// `det(A_n + B_n F_n)` as an exact quotient.
    pub fn det_a_plus_bf(&self, n: u32, k: u32) -> Result<IntPoly, MatrixError> {
        let num = crate::polymat::det_eval_interp(&self.schur_matrix(n, k), None)?;
        let den = self.e_k(k).det_bareiss()?;
        num.div_exact(&den).map_err(|_| MatrixError::InexactElimination)
    }

    pub fn one_minus(&self, m: &IntMatrix) -> IntMatrix {
        &self.one - m
    }

    pub fn one_plus(&self, m: &IntMatrix) -> IntMatrix {
        &self.one + m
    }
}

/// One named matrix identity at one `(p, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub p: u64,
    pub k: u32,
    pub holds: bool,
}

/// `(xa)^p = t`, `(xy)^k x = y(xy)^k`, the `E_k` and `C_k` product
/// identities, `det C_k = det E_k`, and independence of `F_{k,n}` from `k`,
/// at `k = (p−1)/2` and `k = (p−1)/2 + p`.
pub fn identity_suite(p: u64) -> Result<Vec<IdentityCheck>, RepError> {
    let pair = CompanionPair::new(p)?;
    let b = Blocks::new(&pair);
    let one = &b.one;
    let k0 = (p as u32 - 1) / 2;
    let mut out = Vec::new();
    let xa = &pair.x_matrix() * &pair.a_matrix();
    out.push(IdentityCheck {
        name: "(xa)^p = t",
        p,
        k: 0,
        holds: xa.pow(p as u32) == IntMatrix::scalar(b.p, IntPoly::t()),
    });
    for k in [k0, k0 + p as u32] {
        let xyk = b.xy().pow(k);
        let one_plus = one + &b.y_xy_k(k);
        let det_c = b.c_k(k).det_bareiss()?;
        let det_e = b.e_k(k).det_bareiss()?;
        let checks = [
            ("(xy)^k x = y(xy)^k", &xyk * &b.x == &b.y * &xyk),
            (
                "E_k(1−xy) = (1+y(xy)^k)(1−y)",
                &b.e_k(k) * &(one - &b.xy()) == &one_plus * &(one - &b.y),
            ),
            (
                "C_k(1−yx) = (1+y(xy)^k)(1−x)",
                &b.c_k(k) * &(one - &b.yx()) == &one_plus * &(one - &b.x),
            ),
            ("det C_k = det E_k", det_c == det_e),
        ];
        out.extend(
            checks
                .into_iter()
                .map(|(name, holds)| IdentityCheck { name, p, k, holds }),
        );
    }
    for n in [1, 2, 3] {
        out.push(IdentityCheck {
            name: "F_{k,n} independent of k",
            p,
            k: k0 + p as u32,
            holds: b.f_independent_of_k(n, k0, k0 + p as u32)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_one_minus_x_p3() {
        let b = Blocks::new(&CompanionPair::new(3).unwrap());
        let d = b.one_minus(b.x()).det_cofactor().unwrap();
        assert_eq!(d, IntPoly::from_i64s(0, &[1, -1]));
    }

    #[test]
    fn one_plus_x_times_b_n() {
        // (1+x) B_n = 1 − x^{2n}
        let b = Blocks::new(&CompanionPair::new(3).unwrap());
        let lhs = &b.one_plus(b.x()) * &b.b_n(2);
        assert_eq!(lhs, b.one_minus(&b.x().pow(4)));
    }
}
