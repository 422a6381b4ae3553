use crate::digraph::{complete_symmetric, Vertex};
use crate::error::{Error, Result};
use crate::model::{CycleProfile, UndirectedFactor, UndirectedTwoFactorization};

/// Hamilton decomposition of `K_v` for odd `v ≥ 3`.
///
/// With `v = 2k+1`, vertex `2k` fixed and the rest read mod `2k`, cycle `i`
/// is `(2k, i, i+1, i−1, i+2, i−2, …, i+k)`.
pub fn walecki_hamilton_decomposition(v: usize) -> Result<UndirectedTwoFactorization> {
    if v < 3 || v.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "Hamilton decomposition of K_v needs odd v >= 3, got {v}"
        )));
    }
    let k = (v - 1) / 2;
    let q = 2 * k;
    let factors = (0..k)
        .map(|i| {
            let mut c: Vec<Vertex> = vec![q, i];
            for j in 1..=k {
                c.push((i + j) % q);
                if j < k {
                    c.push((i + q - j) % q);
                }
            }
            UndirectedFactor::from_sequences([c])
        })
        .collect::<Result<Vec<_>>>()?;
    UndirectedTwoFactorization::new(complete_symmetric(v)?, factors)?
        .checked(Some(&CycleProfile::single(v, k)), "Walecki decomposition")
}
