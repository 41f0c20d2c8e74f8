use thiserror::Error;

use crate::exactalg::is_prime;
use crate::polymat::IntMatrix;

use super::monomial::MonomialMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("generator {0} has no image")]
    Unassigned(usize),
    #[error("relator {index} does not map to the identity")]
    NotAHomomorphism { index: usize },
    #[error("the ρ̃ system has no solution with the requested seed")]
    Inconsistent,
    #[error("character set may only use exponents below {limit}, got {got}")]
    BadCharacter { limit: usize, got: usize },
    #[error("{p} does not divide m = {m}")]
    PDoesNotDivideM { p: u64, m: i64 },
    #[error(transparent)]
    Knot(#[from] crate::knotpres::KnotParamError),
    #[error(transparent)]
    Presentation(#[from] crate::knotpres::PresentationError),
    #[error(transparent)]
    Matrix(#[from] crate::polymat::MatrixError),
}

/// The two `p×p` matrices of the induced representation: `x` is the cyclic
/// companion matrix with `t` in the lower-left corner, `y = a·x·a` with
/// `a = diag(−1, −1, 1, …, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionPair {
    p: usize,
    x: MonomialMatrix,
    y: MonomialMatrix,
}

impl CompanionPair {
    pub fn new(p: u64) -> Result<Self, RepError> {
        if p < 3 || !is_prime(p) {
            return Err(RepError::NotOddPrime(p));
        }
        let p = p as usize;
        let x = companion_x(p);
        let a = sign_diag(p);
        let y = a.mul(&x).mul(&a);
        Ok(Self { p, x, y })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn x(&self) -> &MonomialMatrix {
        &self.x
    }

    pub fn y(&self) -> &MonomialMatrix {
        &self.y
    }

    pub fn a(&self) -> MonomialMatrix {
        sign_diag(self.p)
    }

    pub fn x_matrix(&self) -> IntMatrix {
        self.x.to_matrix()
    }

    pub fn y_matrix(&self) -> IntMatrix {
        self.y.to_matrix()
    }

    pub fn a_matrix(&self) -> IntMatrix {
        self.a().to_matrix()
    }
}

/// Superdiagonal ones and `t` at `(p−1, 0)`.
pub(crate) fn companion_x(p: usize) -> MonomialMatrix {
    let col = (0..p).map(|i| (i + 1) % p).collect();
    let mut exp = vec![0; p];
    exp[p - 1] = 1;
    MonomialMatrix::new(col, vec![1; p], exp)
}

fn sign_diag(p: usize) -> MonomialMatrix {
    MonomialMatrix::signs((0..p).map(|i| if i < 2 { -1 } else { 1 }).collect())
}
