//! Configuration of the deformation: generator counts, parities, and the
//! integer weight vector that enters every commutation coefficient.

use crate::error::AlgebraError;

/// A quantum superspace with `m` even generators followed by `n` odd ones.
///
/// Every commutation coefficient in the engine is a signed Laurent monomial
/// in the parameters `p_2, ..., p_{m+n}` with exponents built from the weight
/// vector `z`. The first generator is distinguished: `z_1 = 1`, `p_1 = 1`,
/// and it is the invertible grouplike generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamConfig {
    m: usize,
    n: usize,
    z: Vec<i64>,
}

impl ParamConfig {
    pub fn new(m: usize, n: usize, z: Vec<i64>) -> Result<Self, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::InvalidConfig(
                "at least one even generator is required".into(),
            ));
        }
        if z.len() != m + n {
            return Err(AlgebraError::InvalidConfig(format!(
                "weight vector has length {}, expected m+n = {}",
                z.len(),
                m + n
            )));
        }
        if z[0] != 1 {
            return Err(AlgebraError::InvalidConfig(format!(
                "z_1 must be 1, found {}",
                z[0]
            )));
        }
        Ok(ParamConfig { m, n, z })
    }

    pub fn even_count(&self) -> usize {
        self.m
    }

    pub fn odd_count(&self) -> usize {
        self.n
    }

    /// Total number of generators, `m + n`.
    pub fn total(&self) -> usize {
        self.m + self.n
    }

    /// Weight `z_idx` (1-based index).
    pub fn z(&self, idx: usize) -> i64 {
        self.z[idx - 1]
    }

    pub fn weights(&self) -> &[i64] {
        &self.z
    }

    /// Parity of generator `idx` (1-based): 0 for even, 1 for odd.
    pub fn parity(&self, idx: usize) -> i64 {
        if idx > self.m {
            1
        } else {
            0
        }
    }

    pub fn is_odd(&self, idx: usize) -> bool {
        idx > self.m
    }

    pub fn check_index(&self, idx: usize) -> Result<(), AlgebraError> {
        if idx == 0 || idx > self.total() {
            Err(AlgebraError::IndexOutOfRange {
                index: idx,
                max: self.total(),
            })
        } else {
            Ok(())
        }
    }
}
